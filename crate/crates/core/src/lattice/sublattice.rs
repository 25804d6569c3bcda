use num_traits::One;

use super::Lattice;
use crate::error::{Error, Result};
use crate::exactla::{
    kernel_basis, saturate, saturation_index, snf, solve_rows_in_basis, IntMatrix, RatMatrix,
};

/// Sublattice given by independent rows in ambient coordinates.
#[derive(Clone, Debug)]
pub struct Sublattice {
    ambient: Lattice,
    basis: IntMatrix,
}

/// Result of `J⊥/J`: the induced lattice and lifts of its basis into the ambient.
#[derive(Clone, Debug)]
pub struct IsotropicQuotient {
    pub lattice: Lattice,
    /// Rows are ambient vectors in `J⊥` mapping to the quotient basis.
    pub lift: IntMatrix,
    /// Basis of `J⊥` in ambient coordinates.
    pub perp: IntMatrix,
}

impl Sublattice {
    pub fn new(ambient: Lattice, basis: IntMatrix) -> Result<Self> {
        let basis = if basis.rows() == 0 {
            IntMatrix::zeros(0, ambient.rank())
        } else {
            basis
        };
        if basis.cols() != ambient.rank() {
            return Err(Error::Dimension(format!(
                "basis has {} columns, ambient rank is {}",
                basis.cols(),
                ambient.rank()
            )));
        }
        if basis.rank() != basis.rows() {
            return Err(Error::DependentRows);
        }
        Ok(Sublattice { ambient, basis })
    }

    pub fn ambient(&self) -> &Lattice {
        &self.ambient
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Gram matrix of the induced form on this basis.
    pub fn gram(&self) -> IntMatrix {
        self.basis
            .mul(self.ambient.gram())
            .mul(&self.basis.transpose())
    }

    pub fn as_lattice(&self) -> Lattice {
        Lattice::from_gram_unchecked(self.gram())
    }

    pub fn is_saturated(&self) -> bool {
        self.rank() == 0 || saturation_index(&self.basis).map_or(false, |i| i.is_one())
    }

    pub fn is_isotropic(&self) -> bool {
        self.gram().is_zero()
    }

    pub fn saturation(&self) -> Sublattice {
        let basis = saturate(&self.basis, self.ambient.rank()).expect("basis rows are independent");
        Sublattice {
            ambient: self.ambient.clone(),
            basis,
        }
    }

    /// `{x ∈ L : x·s = 0 for all s ∈ S}`; saturated by construction.
    pub fn orth_complement(&self) -> Sublattice {
        let n = self.ambient.rank();
        let basis = if self.rank() == 0 {
            IntMatrix::identity(n)
        } else {
            kernel_basis(&self.basis.mul(self.ambient.gram()))
        };
        Sublattice {
            ambient: self.ambient.clone(),
            basis,
        }
    }

    /// True when every row of `other` lies in this sublattice.
    pub fn contains(&self, other: &IntMatrix) -> bool {
        other.rows() == 0 || solve_rows_in_basis(other, &self.basis).is_ok()
    }

    /// Induced form on `J⊥/J` for an isotropic, saturated `J`.
    pub fn quotient_by_isotropic(&self) -> Result<IsotropicQuotient> {
        if !self.is_isotropic() {
            return Err(Error::NotIsotropic);
        }
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        let perp = self.orth_complement().basis;
        let r = self.rank();
        let k = perp.rows();
        if r == 0 {
            return Ok(IsotropicQuotient {
                lattice: self.ambient.clone(),
                lift: IntMatrix::identity(k),
                perp,
            });
        }
        // J in J⊥ coordinates; J primitive forces unit Smith invariants, so the
        // trailing rows of right⁻¹ complete J to a basis of J⊥.
        let c = solve_rows_in_basis(&self.basis, &perp)?;
        let s = snf(&c);
        if !s.d.iter().all(One::is_one) {
            return Err(Error::NotSaturated);
        }
        let rinv = RatMatrix::from_int(&s.right)
            .inverse()
            .and_then(|m| m.to_int())
            .ok_or_else(|| Error::Internal("Smith transform not unimodular".into()))?;
        let idx: Vec<usize> = (r..k).collect();
        let lift = rinv.select_rows(&idx).mul(&perp);
        let lift = if lift.rows() == 0 {
            IntMatrix::zeros(0, perp.cols())
        } else {
            lift
        };
        let gram = lift.mul(self.ambient.gram()).mul(&lift.transpose());
        Ok(IsotropicQuotient {
            lattice: Lattice::from_gram_unchecked(gram),
            lift,
            perp,
        })
    }
}

impl IsotropicQuotient {
    /// Coordinates in the quotient basis of ambient vectors lying in `J⊥`.
    /// Components along `J` are discarded.
    pub fn project(&self, j_basis: &IntMatrix, v: &IntMatrix) -> Result<IntMatrix> {
        let full = self.lift.vstack(j_basis);
        let c = solve_rows_in_basis(v, &full)?;
        Ok(c.select_cols(&(0..self.lift.rows()).collect::<Vec<_>>()))
    }
}
