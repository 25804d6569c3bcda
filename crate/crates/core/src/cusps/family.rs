use std::fmt;
use std::str::FromStr;

use crate::eisenstein::standard::{rho_uu, rho_uu3};
use crate::eisenstein::{assemble, fpf_order3, RhoLattice};
use crate::error::{Error, Result};
use crate::lattice::standard::{a, u, u_n, Ade};
use crate::lattice::Lattice;

/// One of the four maximal families, labelled by `(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub n: u8,
    pub k: u8,
}

pub const FAMILIES: [FamilyId; 4] = [
    FamilyId { n: 0, k: 2 },
    FamilyId { n: 0, k: 1 },
    FamilyId { n: 1, k: 1 },
    FamilyId { n: 2, k: 1 },
];

impl FamilyId {
    pub fn new(n: u8, k: u8) -> Result<Self> {
        let id = FamilyId { n, k };
        if FAMILIES.contains(&id) {
            Ok(id)
        } else {
            Err(Error::Unsupported(format!("no family ({n},{k})")))
        }
    }

    pub fn genus(self) -> u8 {
        match (self.n, self.k) {
            (0, 2) => 5,
            (0, 1) => 4,
            (1, 1) => 3,
            _ => 2,
        }
    }

    /// Number of `A₂` summands in `P = E ⊕ A₂^m`.
    fn a2_count(self) -> usize {
        match (self.n, self.k) {
            (0, 2) => 0,
            (0, 1) => 1,
            (1, 1) => 2,
            _ => 3,
        }
    }

    /// Irreducible root factors of `P`.
    pub fn p_factors(self) -> Vec<Ade> {
        if self.k == 2 {
            return vec![Ade::E(8)];
        }
        let mut f = vec![Ade::E(6)];
        f.extend(std::iter::repeat(Ade::A(2)).take(self.a2_count()));
        f
    }

    /// Expected `ℤ₃`-rank of `A_T`.
    pub fn a3_rank(self) -> usize {
        match (self.n, self.k) {
            (0, 2) => 0,
            (0, 1) => 2,
            (1, 1) => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.k)
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::Unsupported(format!("family must look like n,k; got {s:?}"));
        let (n, k) = t.split_once(',').ok_or_else(bad)?;
        let n: u8 = n.trim().parse().map_err(|_| bad())?;
        let k: u8 = k.trim().parse().map_err(|_| bad())?;
        FamilyId::new(n, k)
    }
}

/// `S`, `T`, `P` and the order-3 action on `T`. Root lattices here are
/// negative definite.
#[derive(Clone, Debug)]
pub struct FamilyData {
    pub id: FamilyId,
    pub s: Lattice,
    pub t: Lattice,
    pub p: Lattice,
    pub p_factors: Vec<Ade>,
    pub rho_t: RhoLattice,
}

fn neg_fpf(ade: Ade) -> Result<RhoLattice> {
    Ok(fpf_order3(ade)?.negate())
}

pub fn family_data(id: FamilyId) -> Result<FamilyData> {
    let neg_a2 = a(2).negate();
    let (s, blocks) = match (id.n, id.k) {
        (0, 2) => (u(), vec![rho_uu(), neg_fpf(Ade::E(8))?, neg_fpf(Ade::E(8))?]),
        (0, 1) => (u_n(3), vec![rho_uu3(), neg_fpf(Ade::E(8))?, neg_fpf(Ade::E(8))?]),
        (1, 1) => (
            u_n(3).direct_sum(&neg_a2),
            vec![rho_uu3(), neg_fpf(Ade::E(6))?, neg_fpf(Ade::E(8))?],
        ),
        _ => (
            u_n(3).direct_sum(&neg_a2).direct_sum(&neg_a2),
            vec![rho_uu3(), neg_fpf(Ade::E(6))?, neg_fpf(Ade::E(6))?],
        ),
    };
    let rho_t = assemble(&blocks)?;
    let p_factors = id.p_factors();
    let p = Lattice::direct_sum_all(&p_factors.iter().map(|f| f.lattice().negate()).collect::<Vec<_>>());
    let data = FamilyData {
        id,
        s,
        t: rho_t.lattice.clone(),
        p,
        p_factors,
        rho_t,
    };
    let (tp, tq) = data.t.signature()?;
    if tp != 2 || tp + tq != data.t.rank() {
        return Err(Error::Internal(format!("T{id} has signature ({tp},{tq})")));
    }
    if data.p.signature()? != (0, data.p.rank()) {
        return Err(Error::Internal(format!("P{id} is not negative definite")));
    }
    if data.t.rank() + data.p.rank() != 28 {
        return Err(Error::Internal(format!("ranks of T{id} and P{id} do not add to 28")));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let d = family_data(FamilyId::new(0, 2).unwrap()).unwrap();
        assert_eq!(d.s.rank(), 2);
        assert_eq!(d.t.rank(), 20);
        assert_eq!(d.p_factors, vec![Ade::E(8)]);
        let d = family_data(FamilyId::new(1, 1).unwrap()).unwrap();
        assert_eq!(d.p_factors, vec![Ade::E(6), Ade::A(2), Ade::A(2)]);
        let d = family_data(FamilyId::new(2, 1).unwrap()).unwrap();
        assert_eq!(d.t.rank(), 16);
    }

    #[test]
    fn parse_family() {
        assert_eq!("2,1".parse::<FamilyId>().unwrap(), FamilyId { n: 2, k: 1 });
        assert!("3,1".parse::<FamilyId>().is_err());
    }
}
