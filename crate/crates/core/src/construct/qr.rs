use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inverse_mod(r: u64, p: u64) -> u64 {
    // p is prime, so r^(p-2) is the inverse.
    let mut result = 1u64;
    let mut base = r % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = (result as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    result
}

/// The quadratic-residue diagram: points `2..=p-2` in circular order, each
/// joined to its multiplicative inverse mod `p`. A chord is labeled by its
/// smaller residue.
pub fn qr_diagram(p: u64) -> Result<ChordDiagram> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if p < 7 {
        return Err(Error::InvalidInput(format!("p = {p} leaves no chords; need p >= 7")));
    }
    let tokens: Vec<String> = (2..=p - 2).map(|r| r.min(inverse_mod(r, p)).to_string()).collect();
    ChordDiagram::from_labels(&tokens)
}
