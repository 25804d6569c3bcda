use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::component::{primitive_picard, ComponentModel};
use crate::cusps::FamilyId;
use crate::eisenstein::RhoLattice;
use crate::error::{Error, Result};
use crate::exactla::{solve_rows_in_basis, IntMatrix};
use crate::lattice::{IsotropicQuotient, Sublattice};
use crate::roots::{root_system, RootSet, RootSystemType};

/// `Λ = J⊥/J` for `J = ⟨(D₀, −D₁)⟩` inside the sum of two Picard lattices.
#[derive(Clone, Debug)]
pub struct KulikovLattice {
    pub rho: RhoLattice,
    pub prim: Sublattice,
    /// `J⊥/J` with lifts into `H₀ ⊕ H₁`.
    pub quotient: IsotropicQuotient,
    /// Generator of `J` in `H₀ ⊕ H₁`.
    pub j: IntMatrix,
}

impl KulikovLattice {
    pub fn lambda(&self) -> &crate::lattice::Lattice {
        &self.rho.lattice
    }

    pub fn fixed(&self) -> Sublattice {
        self.rho.fixed_sublattice()
    }

    /// Root type of `Λ^prim`, starred when its roots span an index-3 sublattice.
    pub fn prim_root_type(&self) -> Result<(RootSystemType, u64)> {
        let l = self.prim.as_lattice();
        let (t, span) = root_system(&l)?;
        let index = span_index(&l, &span)?;
        Ok((t.starred(index == 3), index))
    }
}

fn span_index(l: &crate::lattice::Lattice, span: &Sublattice) -> Result<u64> {
    if span.rank() != l.rank() {
        return Err(Error::Internal("roots of Λ^prim do not span a finite-index sublattice".into()));
    }
    let ratio = BigRational::new(span.as_lattice().det(), l.det());
    let sq = ratio.to_integer();
    let root = sq.sqrt();
    if !ratio.is_integer() || &root * &root != sq {
        return Err(Error::Internal("determinant ratio is not a square integer".into()));
    }
    u64::try_from(&root).map_err(|_| Error::Internal("index overflow".into()))
}

/// Glues two components along their double curves.
pub fn glue_lambda(c0: &ComponentModel, c1: &ComponentModel) -> Result<KulikovLattice> {
    for c in [c0, c1] {
        if !c.picard().norm(&c.d).is_zero() {
            return Err(Error::Internal(format!("double curve of {} is not isotropic", c.spec)));
        }
    }
    let sum = c0.rho.direct_sum(&c1.rho);
    let n = sum.rank();
    let mut jv = c0.d.clone();
    jv.extend(c1.d.iter().map(|x| -x));
    let j = IntMatrix::from_big_rows(vec![jv], n);
    let jsub = sum.lattice.sublattice(j.clone())?;
    let (quotient, rho) = sum.on_quotient(&jsub)?;
    let l = &rho.lattice;
    if l.det().is_zero() {
        return Err(Error::Degenerate {
            radical_rank: l.rank() - l.gram().rank(),
        });
    }
    if !l.is_even() || !l.is_unimodular() || l.rank() != c0.rho.rank() + c1.rho.rank() - 2 {
        return Err(Error::Internal("Λ is not even unimodular of the expected rank".into()));
    }
    let prim = rho.fixed_sublattice().orth_complement();
    Ok(KulikovLattice {
        rho,
        prim,
        quotient,
        j,
    })
}

/// Outcome of [`root_split_check`].
#[derive(Clone, Debug)]
pub struct RootSplit {
    pub holds: bool,
    /// `[Λ^prim : Λ₀^prim ⊕ Λ₁^prim]`.
    pub index: BigInt,
    pub prim_type: RootSystemType,
    pub component_types: [RootSystemType; 2],
}

/// Images of the components' primitive parts in `Λ^prim` coordinates.
fn component_images(k: &KulikovLattice, c0: &ComponentModel, c1: &ComponentModel) -> Result<[IntMatrix; 2]> {
    let (r0, r1) = (c0.rho.rank(), c1.rho.rank());
    let mut out = Vec::new();
    for (c, off) in [(c0, 0), (c1, r0)] {
        let (p, _) = primitive_picard(c)?;
        let rows: Vec<Vec<BigInt>> = p
            .basis()
            .row_iter()
            .map(|row| {
                let mut v = vec![BigInt::zero(); r0 + r1];
                v[off..off + row.len()].clone_from_slice(row);
                v
            })
            .collect();
        let amb = IntMatrix::from_big_rows(rows, r0 + r1);
        let in_lambda = k.quotient.project(&k.j, &amb)?;
        out.push(solve_rows_in_basis(&in_lambda, k.prim.basis())?);
    }
    let [a, b]: [IntMatrix; 2] = out.try_into().expect("two components");
    Ok([a, b])
}

/// Every root of `Λ^prim` comes from one component and the two images span
/// a finite-index sublattice.
pub fn root_split_check(k: &KulikovLattice, c0: &ComponentModel, c1: &ComponentModel) -> Result<RootSplit> {
    let [a, b] = component_images(k, c0, c1)?;
    let prim_lat = k.prim.as_lattice();
    let (t0, t1) = (primitive_picard(c0)?.1, primitive_picard(c1)?.1);
    let prim_roots = RootSet::of(&prim_lat)?;
    let (prim_type, _) = k.prim_root_type()?;
    let both = a.vstack(&b);
    let square = both.rows() == prim_lat.rank();
    let index = if square { both.det().abs() } else { BigInt::zero() };
    // The images are orthogonal, so their roots are disjoint; equal counts
    // mean every root of Λ^prim lies in one of them.
    let mut image_roots = 0;
    for img in [&a, &b] {
        if img.rows() > 0 {
            image_roots += RootSet::of(&prim_lat.sublattice(img.clone())?.as_lattice())?.len();
        }
    }
    let union = t0.union(&t1);
    let holds = square
        && !index.is_zero()
        && image_roots == prim_roots.len()
        && prim_type.same_roots(&union);
    Ok(RootSplit {
        holds,
        index,
        prim_type,
        component_types: [t0, t1],
    })
}

/// Component pairs of each family's Type II degenerations, as 1-based
/// component rows, with the 1-based position of the cusp they realize in
/// the family's [`ksba_table`](super::ksba_table) entries.
pub fn pairings(id: FamilyId) -> Vec<(usize, usize, usize)> {
    match (id.n, id.k) {
        (0, 2) => vec![(2, 2, 1)],
        (0, 1) => vec![(1, 1, 1), (2, 1, 2), (2, 2, 3)],
        (1, 1) => vec![(1, 3, 1), (2, 3, 2), (1, 4, 3), (2, 4, 4)],
        _ => vec![(3, 3, 1), (4, 3, 2), (1, 5, 2), (4, 4, 3), (2, 5, 4)],
    }
}

#[cfg(test)]
mod tests {
    use super::super::component::{build_component, ComponentSpec};
    use super::*;

    fn row(i: usize) -> ComponentModel {
        build_component(&ComponentSpec::rows()[i - 1]).unwrap()
    }

    #[test]
    fn e8_pair() {
        let c = row(2);
        let k = glue_lambda(&c, &c).unwrap();
        assert_eq!(k.lambda().rank(), 18);
        assert_eq!(k.lambda().signature().unwrap(), (1, 17));
        let (t, idx) = k.prim_root_type().unwrap();
        assert_eq!(t, "E8^2".parse().unwrap());
        assert_eq!(idx, 1);
        let s = root_split_check(&k, &c, &c).unwrap();
        assert!(s.holds);
        assert_eq!(s.index, BigInt::from(1));
    }

    #[test]
    fn starred_pair() {
        let c = row(1);
        let k = glue_lambda(&c, &c).unwrap();
        let (t, idx) = k.prim_root_type().unwrap();
        assert_eq!(t, "(E6^2+A2^2)*".parse().unwrap());
        assert_eq!(idx, 3);
        assert!(root_split_check(&k, &c, &c).unwrap().holds);
    }

    #[test]
    fn fixed_and_prim_are_complementary() {
        let k = glue_lambda(&row(3), &row(4)).unwrap();
        assert_eq!(k.fixed().rank() + k.prim.rank(), 18);
        let g = k.fixed().basis().mul(k.lambda().gram()).mul(&k.prim.basis().transpose());
        assert!(g.is_zero());
    }
}
