//! The order-4 family: quadruple covers of the plane branched along a quartic.

use num_bigint::BigInt;
use num_traits::Signed;

use super::semifan::{semifan_record, SemifanFamily, SemifanRecord};
use crate::eisenstein::standard::{rho_a1sq_order4, rho_d4_order4, rho_uu2_order4};
use crate::eisenstein::{assemble, RhoLattice};
use crate::error::Result;
use crate::exactla::IntMatrix;
use crate::lattice::standard::{d, diag, u, u_n, Ade};
use crate::lattice::{Lattice, NikulinInvariants, Sublattice};
use crate::roots::{root_system, RootSet, RootSystemType};

/// Computed values for each check of the order-4 case.
#[derive(Clone, Debug)]
pub struct Order4Checks {
    /// Invariants of `U(2) ⊕ D₈` and `U ⊕ D₄²`.
    pub nikulin: [NikulinInvariants; 2],
    pub rho_order: u32,
    pub rho_squared_is_minus_one: bool,
    pub j_isotropic: bool,
    pub j_saturated: bool,
    pub j_invariant: bool,
    pub quotient_type: RootSystemType,
    /// `⟨E₁ − E₃, E₂ − E₄⟩` inside `⟨−1⟩⁴`.
    pub m_gram: IntMatrix,
    pub m_invariant: bool,
    pub m_rho_squared_is_minus_one: bool,
    pub m_saturated: bool,
    /// Gram of the `A₁²` summand of the quotient in its root basis.
    pub summand_gram: IntMatrix,
    pub summand_is_direct: bool,
    pub semifan: SemifanRecord,
}

/// `T = U ⊕ U(2) ⊕ D₄² ⊕ A₁²` (negative definite root part) with its order-4 `ρ`.
pub fn order4_lattice() -> Result<RhoLattice> {
    assemble(&[
        rho_uu2_order4(),
        rho_d4_order4().negate(),
        rho_d4_order4().negate(),
        rho_a1sq_order4().negate(),
    ])
}

pub fn order4_checks() -> Result<Order4Checks> {
    let a = u_n(2).direct_sum(&d(8).negate()).nikulin_2elem()?;
    let b = u().direct_sum(&d(4).negate()).direct_sum(&d(4).negate()).nikulin_2elem()?;

    let t = order4_lattice()?;
    let n = t.rank();
    let rho_squared_is_minus_one = t.rho.mul(&t.rho) == IntMatrix::identity(n).neg();

    let mut rows = vec![vec![0i64; n], vec![0i64; n]];
    rows[0][0] = 1;
    rows[1][2] = 1;
    let j = t.lattice.sublattice(IntMatrix::from_rows(&rows))?;
    let (q, rq) = t.on_quotient(&j)?;
    let (quotient_type, _) = root_system(&q.lattice)?;

    let e = diag(&[-1, -1, -1, -1]);
    let cyc = IntMatrix::from_rows(&[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]);
    let re = RhoLattice::new(e.clone(), cyc)?;
    let m = e.sublattice(IntMatrix::from_rows(&[[1, 0, -1, 0], [0, 1, 0, -1]]))?;
    let m_invariant = re.preserves(m.basis());
    let m_rho = re.restrict(&m)?;
    let m_rho_squared_is_minus_one = m_rho.rho.mul(&m_rho.rho) == IntMatrix::identity(2).neg();

    let summand = a1_summand(&q.lattice)?;
    let summand_gram = summand.gram();
    let perp = summand.orth_complement();
    let summand_is_direct = summand.rank() + perp.rank() == q.lattice.rank()
        && (summand.as_lattice().det() * perp.as_lattice().det()).abs() == q.lattice.det().abs();
    let semifan = semifan_record(
        SemifanFamily::Order4,
        RootSystemType::new(vec![Ade::A(1); 2]),
        &rq,
        summand.basis(),
    )?;

    Ok(Order4Checks {
        nikulin: [a, b],
        rho_order: t.order,
        rho_squared_is_minus_one,
        j_isotropic: j.is_isotropic(),
        j_saturated: j.is_saturated(),
        j_invariant: t.preserves(j.basis()),
        quotient_type,
        m_gram: m.gram(),
        m_invariant,
        m_rho_squared_is_minus_one,
        m_saturated: m.is_saturated(),
        summand_gram,
        summand_is_direct,
        semifan,
    })
}

/// Span of the roots lying in `A₁` components.
fn a1_summand(l: &Lattice) -> Result<Sublattice> {
    let roots = RootSet::of(l)?;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for comp in roots.components() {
        if comp.len() == 2 {
            rows.push(roots.vectors[comp[0]].clone());
        }
    }
    let basis = if rows.is_empty() {
        IntMatrix::zeros(0, l.rank())
    } else {
        IntMatrix::from_big_rows(rows, l.rank())
    };
    l.sublattice(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_hold() {
        let c = order4_checks().unwrap();
        let want = NikulinInvariants {
            t_plus: 1,
            t_minus: 9,
            a: 4,
            delta: 0,
        };
        assert_eq!(c.nikulin, [want, want]);
        assert_eq!(c.rho_order, 4);
        assert!(c.rho_squared_is_minus_one);
        assert!(c.j_isotropic && c.j_saturated && c.j_invariant);
        assert_eq!(c.quotient_type, "D4^2+A1^2".parse().unwrap());
        let minus_two = IntMatrix::from_rows(&[[-2, 0], [0, -2]]);
        assert_eq!(c.m_gram, minus_two);
        assert_eq!(c.summand_gram, minus_two);
        assert!(c.m_invariant && c.m_rho_squared_is_minus_one && c.m_saturated);
        assert!(c.summand_is_direct);
        assert_eq!(c.semifan.rank, 2);
        assert!(c.semifan.primitive && c.semifan.rho_invariant);
    }
}
