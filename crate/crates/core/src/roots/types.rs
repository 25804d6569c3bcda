use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::standard::Ade;

/// Multiset of ADE components, optionally marked as an index-3 overlattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    components: Vec<Ade>,
    starred: bool,
}

impl RootSystemType {
    pub fn new(mut components: Vec<Ade>) -> Self {
        components.sort_by(|a, b| b.cmp(a));
        RootSystemType {
            components,
            starred: false,
        }
    }

    pub fn empty() -> Self {
        Self::new(Vec::new())
    }

    pub fn starred(mut self, star: bool) -> Self {
        self.starred = star;
        self
    }

    pub fn is_starred(&self) -> bool {
        self.starred
    }

    pub fn components(&self) -> &[Ade] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    pub fn root_count(&self) -> usize {
        self.components.iter().map(|c| c.root_count()).sum()
    }

    /// Disjoint union; the star flag is dropped.
    pub fn union(&self, other: &Self) -> Self {
        let mut c = self.components.clone();
        c.extend_from_slice(&other.components);
        Self::new(c)
    }

    /// Same components, ignoring the star flag.
    pub fn same_roots(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "{}", if self.starred { "0*" } else { "0" });
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let k = self.components[i..].iter().take_while(|&&x| x == c).count();
            parts.push(if k == 1 { c.to_string() } else { format!("{c}^{k}") });
            i += k;
        }
        let body = parts.join("+");
        if self.starred {
            write!(f, "({body})*")
        } else {
            write!(f, "{body}")
        }
    }
}

fn parse_symbol(s: &str) -> Result<Ade> {
    let bad = || Error::Unsupported(format!("bad root system symbol {s:?}"));
    let mut chars = s.chars();
    let head = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let ade = match head {
        'A' => Ade::A(n),
        'D' => Ade::D(n),
        'E' => Ade::E(n),
        _ => return Err(bad()),
    };
    ade.validate()
}

impl FromStr for RootSystemType {
    type Err = Error;

    /// Accepts forms like `E8+E6+A2^3`, `(E6^2+A2^2)*`, `A2^6*` and `0`.
    fn from_str(s: &str) -> Result<Self> {
        let mut body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let starred = body.ends_with('*');
        if starred {
            body.pop();
        }
        if body.starts_with('(') && body.ends_with(')') {
            body = body[1..body.len() - 1].to_string();
        }
        if body == "0" || body.is_empty() {
            return Ok(Self::empty().starred(starred));
        }
        let mut comps = Vec::new();
        for term in body.split('+') {
            let (sym, count) = match term.split_once('^') {
                Some((a, b)) => (
                    a,
                    b.parse::<usize>()
                        .map_err(|_| Error::Unsupported(format!("bad exponent in {term:?}")))?,
                ),
                None => (term, 1),
            };
            let ade = parse_symbol(sym)?;
            comps.extend(std::iter::repeat(ade).take(count));
        }
        Ok(Self::new(comps).starred(starred))
    }
}

/// Identifies an irreducible component from its rank and root count.
/// The A₃/D₃ coincidence is reported as A₃.
pub fn identify_component(rank: usize, count: usize) -> Result<Ade> {
    let candidates = [Ade::A(rank), Ade::D(rank), Ade::E(rank)];
    candidates
        .into_iter()
        .filter(|c| c.validate().is_ok())
        .find(|c| c.root_count() == count)
        .ok_or_else(|| {
            Error::Internal(format!(
                "no ADE type has rank {rank} and {count} roots"
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["E8+E6+A2^3", "(E6^2+A2^2)*", "(A2^6)*", "0", "D4^2+A1^2"] {
            let t: RootSystemType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        let t: RootSystemType = "A2^6*".parse().unwrap();
        assert!(t.is_starred());
        assert_eq!(t.rank(), 12);
    }

    #[test]
    fn canonical_component_order() {
        let t = RootSystemType::new(vec![Ade::A(2), Ade::E(8), Ade::E(6), Ade::A(2)]);
        assert_eq!(t.to_string(), "E8+E6+A2^2");
    }

    #[test]
    fn identification() {
        assert_eq!(identify_component(3, 12).unwrap(), Ade::A(3));
        assert_eq!(identify_component(4, 24).unwrap(), Ade::D(4));
        assert_eq!(identify_component(6, 72).unwrap(), Ade::E(6));
        assert!(identify_component(2, 8).is_err());
    }

    #[test]
    fn rejects_bad_symbols() {
        assert!("E9".parse::<RootSystemType>().is_err());
        assert!("D3".parse::<RootSystemType>().is_err());
    }
}
