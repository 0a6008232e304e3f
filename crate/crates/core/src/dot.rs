//! Graphviz export.
//!
//! A chord diagram is drawn as its core cycle (solid) plus one dashed edge
//! per chord. The empty diagram is a single node `core` with a self-loop.

use std::fmt::Write;

use crate::diagram::ChordDiagram;
use crate::framed::{slot_of, vertex_of, FramedFourGraph};
use crate::parity::InterlacementGraph;

pub trait ToDot {
    fn to_dot(&self) -> String;
}

pub fn export_dot<T: ToDot + ?Sized>(object: &T) -> String {
    object.to_dot()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl ToDot for ChordDiagram {
    fn to_dot(&self) -> String {
        let mut s = String::from("graph chord_diagram {\n  layout=circo;\n");
        if self.is_empty() {
            s.push_str("  core [shape=circle];\n  core -- core;\n}\n");
            return s;
        }
        let m = self.len();
        for (i, &c) in self.word().iter().enumerate() {
            let _ = writeln!(s, "  p{i} [label={}];", quote(self.label(c)));
        }
        for i in 0..m {
            let _ = writeln!(s, "  p{i} -- p{} [style=bold];", (i + 1) % m);
        }
        for [a, b] in self.ends() {
            let _ = writeln!(s, "  p{a} -- p{b} [style=dashed];");
        }
        s.push_str("}\n");
        s
    }
}

impl ToDot for FramedFourGraph {
    fn to_dot(&self) -> String {
        let mut s = String::from("graph framed {\n");
        for (v, l) in self.labels().iter().enumerate() {
            let _ = writeln!(s, "  v{v} [label={}];", quote(l));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(
                s,
                "  v{} -- v{} [taillabel=\"{}\", headlabel=\"{}\"];",
                vertex_of(a),
                vertex_of(b),
                slot_of(a),
                slot_of(b)
            );
        }
        for i in 0..self.circles() {
            let _ = writeln!(s, "  circle{i} [shape=circle, label=\"\"];\n  circle{i} -- circle{i};");
        }
        s.push_str("}\n");
        s
    }
}

impl ToDot for InterlacementGraph {
    fn to_dot(&self) -> String {
        let mut s = String::from("graph interlacement {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  c{i} [label={}];", quote(l));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  c{a} -- c{b};");
        }
        s.push_str("}\n");
        s
    }
}
