use crate::error::{Error, Result};
use crate::framed::{half_edge, slot_of, vertex_of, FramedFourGraph, HalfEdge};

/// One bit per vertex: clear for the cyclic slot order `0 1 2 3`, set for
/// `0 3 2 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    pub mirrored: Vec<bool>,
}

impl RotationSystem {
    fn next(&self, h: HalfEdge) -> HalfEdge {
        let v = vertex_of(h);
        let step = if self.mirrored[v] { 3 } else { 1 };
        half_edge(v, (slot_of(h) + step) % 4)
    }
}

/// Number of faces of the embedding given by `rot`.
fn face_count(g: &FramedFourGraph, rot: &RotationSystem) -> usize {
    let n = 4 * g.vertex_count();
    let mut seen = vec![false; n];
    let mut faces = 0;
    for start in 0..n as HalfEdge {
        if seen[start as usize] {
            continue;
        }
        faces += 1;
        let mut h = start;
        while !seen[h as usize] {
            seen[h as usize] = true;
            h = rot.next(g.mate(h));
        }
    }
    faces
}

fn check_connected(g: &FramedFourGraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return if g.circles() <= 1 {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("{} disjoint circles", g.circles())))
        };
    }
    if g.circles() > 0 || !g.is_connected() {
        return Err(Error::InvalidInput("graph is disconnected; treat components separately".into()));
    }
    Ok(())
}

/// Genus of the orientable surface given by `rot`.
pub fn genus_of(g: &FramedFourGraph, rot: &RotationSystem) -> Result<usize> {
    check_connected(g)?;
    if rot.mirrored.len() != g.vertex_count() {
        return Err(Error::InvalidInput("rotation system size mismatch".into()));
    }
    let v = g.vertex_count();
    if v == 0 {
        return Ok(0);
    }
    // V - E + F = 2 - 2g with E = 2V.
    Ok((2 + v - face_count(g, rot)) / 2)
}

/// Least genus over all admissible rotation systems.
pub fn genus_min(g: &FramedFourGraph) -> Result<usize> {
    check_connected(g)?;
    let v = g.vertex_count();
    if v == 0 {
        return Ok(0);
    }
    if v > 26 {
        return Err(Error::Budget(format!("{v} vertices; rotation enumeration is capped at 26")));
    }
    let mut best = usize::MAX;
    // Mirroring every vertex gives the same faces, so vertex 0 stays fixed.
    for mask in 0u64..(1u64 << (v - 1)) {
        let rot = RotationSystem { mirrored: (0..v).map(|i| i > 0 && mask >> (i - 1) & 1 == 1).collect() };
        best = best.min((2 + v - face_count(g, &rot)) / 2);
        if best == 0 {
            break;
        }
    }
    Ok(best)
}
