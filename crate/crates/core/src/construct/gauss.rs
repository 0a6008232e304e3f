use std::collections::HashMap;

use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};

/// Reads a signed Gauss code such as `O1+ U2+ O3+ U1+ O2+ U3+` and forgets
/// over/under information and signs. Each crossing must occur once as `O`
/// and once as `U`; the sign is optional.
pub fn virtual_to_free(gauss: &str) -> Result<ChordDiagram> {
    let mut labels = Vec::new();
    let mut seen: HashMap<String, [usize; 2]> = HashMap::new();
    for tok in gauss.split_whitespace() {
        let bad = || Error::parse(None, format!("malformed token `{tok}`"));
        let mut chars = tok.chars();
        let layer = match chars.next() {
            Some('O' | 'o') => 0,
            Some('U' | 'u') => 1,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let name = rest.strip_suffix(['+', '-']).unwrap_or(rest);
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(bad());
        }
        let counts = seen.entry(name.to_string()).or_default();
        counts[layer] += 1;
        if counts[layer] > 1 {
            let which = if layer == 0 { "O" } else { "U" };
            return Err(Error::parse(None, format!("crossing {name} occurs twice as {which}")));
        }
        labels.push(name.to_string());
    }
    let mut names: Vec<_> = seen.iter().filter(|(_, c)| c[0] + c[1] != 2).map(|(n, _)| n.clone()).collect();
    names.sort();
    if let Some(name) = names.first() {
        return Err(Error::parse(None, format!("crossing {name} occurs only once")));
    }
    ChordDiagram::from_labels(&labels)
}
