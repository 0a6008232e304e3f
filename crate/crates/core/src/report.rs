//! The end-to-end report.
//!
//! Every row builds an irreducibly odd diagram Γ, certifies it, and bounds
//! the crossings of any diagram of the same free knot from below. The
//! classical count is bounded above by the number of chords of Γ, since
//! any choice of over/under data at its vertices is a diagram with that
//! many classical crossings.

use std::fmt::{self, Write};

use rayon::prelude::*;

use crate::bracket::certify_minimal;
use crate::construct::{realize, qr_diagram, random_cubic, TrivalentGraph};
use crate::diagram::ChordDiagram;
use crate::error::Result;
use crate::framed::chord_diagram_to_framed;
use crate::planarity::{vi_lower_bound, ChainLink, CrossingBound, Link, PathCheck, Witness};

/// Planarity tests per search in a pipeline run.
pub const PIPELINE_BUDGET: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Qr(Vec<u64>),
    Graphs(Vec<(String, TrivalentGraph)>),
    /// One random cubic graph per size; the i-th uses `seed + i`.
    Random(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    Certified { vertex_count: usize },
    Refused(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub name: String,
    pub v_l: Option<usize>,
    pub gamma: Option<ChordDiagram>,
    pub chords_gamma: Option<usize>,
    pub cl_upper: Option<usize>,
    pub cr_l: Option<CrossingBound>,
    pub vi_lower: Option<CrossingBound>,
    pub certificate: Certification,
}

impl ReportRow {
    fn failed(name: String, v_l: Option<usize>, reason: String) -> Self {
        ReportRow {
            name,
            v_l,
            gamma: None,
            chords_gamma: None,
            cl_upper: None,
            cr_l: None,
            vi_lower: None,
            certificate: Certification::Refused(reason),
        }
    }

    /// Chain links behind `vi_lower`, if any.
    pub fn chain(&self) -> Option<(&[ChainLink], &PathCheck)> {
        match self.vi_lower.as_ref()?.witness.as_ref()? {
            Witness::Chain { links, path } => Some((links, path)),
            Witness::Insertion(_) => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertifiedReport {
    pub rows: Vec<ReportRow>,
}

enum Job {
    Qr(u64),
    Graph(String, TrivalentGraph, u64),
    Random(usize, u64),
}

pub fn run_pipeline(source: &Source, seed: u64, budget: usize) -> CertifiedReport {
    let jobs: Vec<Job> = match source {
        Source::Qr(ps) => ps.iter().map(|&p| Job::Qr(p)).collect(),
        Source::Graphs(gs) => gs.iter().map(|(n, g)| Job::Graph(n.clone(), g.clone(), seed)).collect(),
        Source::Random(sizes) => {
            sizes.iter().enumerate().map(|(i, &n)| Job::Random(n, seed.wrapping_add(i as u64))).collect()
        }
    };
    let rows = jobs.par_iter().map(|j| run_job(j, seed, budget)).collect();
    CertifiedReport { rows }
}

fn run_job(job: &Job, seed: u64, budget: usize) -> ReportRow {
    match job {
        Job::Qr(p) => {
            let name = format!("qr{p}");
            match qr_diagram(*p) {
                Ok(gamma) => bound_row(name, None, gamma, None, budget),
                Err(e) => ReportRow::failed(name, None, e.to_string()),
            }
        }
        Job::Graph(name, l, s) => graph_row(name.clone(), l, *s, budget),
        Job::Random(n, s) => match random_cubic(*n, *s) {
            Ok(l) => graph_row(format!("random{n}/{s}"), &l, seed, budget),
            Err(e) => ReportRow::failed(format!("random{n}/{s}"), Some(*n), e.to_string()),
        },
    }
}

fn graph_row(name: String, l: &TrivalentGraph, seed: u64, budget: usize) -> ReportRow {
    match realize(l, seed) {
        Ok(out) => bound_row(name, Some(l), out.gamma, Some(out.gamma_prime), budget),
        Err(e) => ReportRow::failed(name, Some(l.vertex_count()), e.to_string()),
    }
}

fn bound_row(
    name: String,
    l: Option<&TrivalentGraph>,
    gamma: ChordDiagram,
    gamma_prime: Option<ChordDiagram>,
    budget: usize,
) -> ReportRow {
    let chords = gamma.chord_count();
    let mut row = ReportRow {
        name,
        v_l: l.map(|l| l.vertex_count()),
        chords_gamma: Some(chords),
        cl_upper: Some(chords),
        gamma: Some(gamma.clone()),
        cr_l: None,
        vi_lower: None,
        certificate: Certification::Refused(String::new()),
    };
    match certify_minimal(&gamma) {
        Ok(c) => row.certificate = Certification::Certified { vertex_count: c.vertex_count },
        Err(e) => {
            row.certificate = Certification::Refused(e.to_string());
            return row;
        }
    }
    let delta = chord_diagram_to_framed(&gamma);
    match vi_lower_bound(&delta, &gamma, gamma_prime.as_ref(), l.map(|l| l.graph()), budget) {
        Ok(b) => {
            row.vi_lower = Some(b);
            row.cr_l = row
                .chain()
                .and_then(|(links, _)| links.iter().find(|c| c.link == Link::L))
                .map(|c| c.bound.clone());
        }
        Err(e) => row.certificate = Certification::Refused(e.to_string()),
    }
    row
}

fn opt<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn bound_record(b: &CrossingBound) -> String {
    format!("{:?}:{}", b.kind, b.value).to_lowercase()
}

fn path_text(p: &PathCheck) -> String {
    match p {
        PathCheck::Verified { smoothed, r2_steps, realized } => {
            format!("smoothed={smoothed},r2={r2_steps},realized={realized}")
        }
        PathCheck::Exhausted => "exhausted".into(),
    }
}

impl CertifiedReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{:<14} {:>4} {:>7} {:>9} {:<22} {:<22} {}\n",
            "name", "v_L", "chords", "cl_upper", "cr_L", "vi_lower", "certificate"
        );
        for r in &self.rows {
            let cert = match &r.certificate {
                Certification::Certified { .. } => "ok".to_string(),
                Certification::Refused(m) => format!("refused: {m}"),
            };
            let _ = writeln!(
                s,
                "{:<14} {:>4} {:>7} {:>9} {:<22} {:<22} {}",
                r.name,
                opt(&r.v_l),
                opt(&r.chords_gamma),
                opt(&r.cl_upper),
                opt(&r.cr_l),
                opt(&r.vi_lower),
                cert
            );
            if let Some((links, path)) = r.chain() {
                for c in links {
                    let _ = writeln!(s, "    {} {}  ({})", c.link, c.bound, c.reason);
                }
                let _ = writeln!(s, "    path {}", path_text(path));
            }
        }
        s
    }

    /// One `row` line per member, `key=value` fields separated by spaces.
    pub fn to_records(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let _ = write!(
                s,
                "row name={} v_l={} chords_gamma={} cl_upper={}",
                r.name,
                opt(&r.v_l),
                opt(&r.chords_gamma),
                opt(&r.cl_upper)
            );
            let _ = write!(s, " cr_l={}", r.cr_l.as_ref().map_or("-".into(), bound_record));
            let _ = write!(s, " vi_lower={}", r.vi_lower.as_ref().map_or("-".into(), bound_record));
            if let Some((links, path)) = r.chain() {
                let chain: Vec<String> =
                    links.iter().map(|c| format!("{}={}", c.link, bound_record(&c.bound))).collect();
                let _ = write!(s, " chain={} path={}", chain.join("|"), path_text(path));
            }
            match &r.certificate {
                Certification::Certified { .. } => s.push_str(" certificate=ok\n"),
                Certification::Refused(m) => {
                    let _ = writeln!(s, " certificate=refused reason={:?}", m);
                }
            }
        }
        s
    }
}

/// Parses `k4,prism,petersen` style lists of named trivalent graphs.
pub fn named_graphs(list: &str) -> Result<Vec<(String, TrivalentGraph)>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|n| Ok((n.to_string(), TrivalentGraph::named(n)?)))
        .collect()
}
