use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{in_dual, Lattice};
use crate::error::{Error, Result};
use crate::exactla::{hnf, IntMatrix, RatMatrix};

/// Overlattice `L ⊂ L′ ⊂ L*` with its basis in `L`-coordinates.
#[derive(Clone, Debug)]
pub struct GluedLattice {
    pub lattice: Lattice,
    /// Rows are the basis of `L′` written in the basis of `L`.
    pub basis: RatMatrix,
    pub index: BigInt,
}

impl Lattice {
    /// Overlattice generated by `L` and the given dual vectors (in `L`-coordinates).
    pub fn glue_overlattice(&self, glue: &[Vec<BigRational>]) -> Result<GluedLattice> {
        let n = self.rank();
        for g in glue {
            if g.len() != n {
                return Err(Error::Dimension("glue vector length differs from rank".into()));
            }
            if !in_dual(self, g) {
                return Err(Error::InvalidGlue("glue vector is not in the dual lattice".into()));
            }
        }
        let den = glue
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let mut rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { den.clone() } else { BigInt::from(0) }).collect())
            .collect();
        for g in glue {
            rows.push(g.iter().map(|v| (v * &den).to_integer()).collect());
        }
        let (h, _) = hnf(&IntMatrix::from_big_rows(rows, n));
        let b_int = h.select_rows(&(0..n).collect::<Vec<_>>());
        let mut basis = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                basis[(i, j)] = BigRational::new(b_int[(i, j)].clone(), den.clone());
            }
        }
        let g = RatMatrix::from_int(self.gram());
        let gram = basis
            .mul(&g)
            .mul(&basis.transpose())
            .to_int()
            .ok_or_else(|| Error::InvalidGlue("resulting form is not integral".into()))?;
        let glued = Lattice::from_gram_unchecked(gram);
        if self.is_even() && !glued.is_even() {
            return Err(Error::InvalidGlue("resulting form is not even".into()));
        }
        let index = num_traits::pow(den, n) / b_int.det().abs();
        Ok(GluedLattice {
            lattice: glued,
            basis,
            index,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn empty_glue_is_identity() {
        let g = e6().glue_overlattice(&[]).unwrap();
        assert_eq!(g.lattice.gram(), e6().gram());
        assert_eq!(g.index, BigInt::one());
    }

    #[test]
    fn a2_dual_generator_is_rejected() {
        // (2/3, 1/3) is a fundamental weight of norm 2/3.
        let err = a(2).glue_overlattice(&[vec![q(2, 3), q(1, 3)]]).unwrap_err();
        assert!(matches!(err, Error::InvalidGlue(_)));
    }

    #[test]
    fn d8_spinor_glue_gives_e8() {
        // D8 plus a half-spin weight is the even unimodular lattice of rank 8.
        let l = d(8);
        let inv = l.gram_inverse().unwrap();
        let spin: Vec<BigRational> = inv.row(7).to_vec();
        let g = l.glue_overlattice(&[spin]).unwrap();
        assert_eq!(g.index, BigInt::from(2));
        assert!(g.lattice.is_even());
        assert!(g.lattice.is_unimodular());
    }

    #[test]
    fn non_dual_vector_is_rejected() {
        let err = u().glue_overlattice(&[vec![q(1, 2), q(0, 1)]]).unwrap_err();
        assert!(matches!(err, Error::InvalidGlue(_)));
    }
}
