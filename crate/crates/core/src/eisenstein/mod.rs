//! Finite-order isometries, with Eisenstein (order 3) and order-4 structure.

mod hermitian;
pub mod standard;

pub use hermitian::{units_equivalent, EisCoeff, EisensteinBasis, HermitianGram};
pub use standard::fpf_order3;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, IntMatrix, RatMatrix};
use crate::lattice::{IsotropicQuotient, Lattice, Sublattice};

/// Largest order accepted by [`check`].
pub const ORDER_BOUND: u32 = 24;

/// Verifies `M·G·Mᵀ = G` and returns the multiplicative order of `M`.
pub fn check(l: &Lattice, m: &IntMatrix) -> Result<u32> {
    let n = l.rank();
    if m.rows() != n || m.cols() != n {
        return Err(Error::Dimension(format!(
            "isometry is {}x{}, lattice rank is {n}",
            m.rows(),
            m.cols()
        )));
    }
    let g = l.gram();
    let image = m.mul(g).mul(&m.transpose());
    for i in 0..n {
        for j in 0..n {
            if image[(i, j)] != g[(i, j)] {
                return Err(Error::NotIsometry {
                    i,
                    j,
                    before: g[(i, j)].to_string(),
                    after: image[(i, j)].to_string(),
                });
            }
        }
    }
    let id = IntMatrix::identity(n);
    let mut p = m.clone();
    for k in 1..=ORDER_BOUND {
        if p == id {
            return Ok(k);
        }
        p = p.mul(m);
    }
    Err(Error::OrderTooLarge { bound: ORDER_BOUND })
}

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic(n: u32) -> Vec<BigInt> {
    // Φₙ = (xⁿ − 1) / Π_{d|n, d<n} Φ_d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic(d));
        }
    }
    num
}

fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db].clone() / &b[db];
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// `Σ cₖ Mᵏ`.
pub fn poly_eval(coeffs: &[BigInt], m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    let mut p = IntMatrix::identity(n);
    for c in coeffs {
        acc = acc.add(&p.scale(c));
        p = p.mul(m);
    }
    acc
}

/// A lattice with an isometry `ρ` of exact order `order`.
#[derive(Clone, Debug)]
pub struct RhoLattice {
    pub lattice: Lattice,
    pub rho: IntMatrix,
    pub order: u32,
}

impl RhoLattice {
    pub fn new(lattice: Lattice, rho: IntMatrix) -> Result<Self> {
        let order = check(&lattice, &rho)?;
        Ok(RhoLattice {
            lattice,
            rho,
            order,
        })
    }

    pub fn identity(lattice: Lattice) -> Self {
        let n = lattice.rank();
        RhoLattice {
            lattice,
            rho: IntMatrix::identity(n),
            order: 1,
        }
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.rho.vec_mul(v)
    }

    /// `{x : x·ρ = x}`.
    pub fn fixed_sublattice(&self) -> Sublattice {
        let n = self.rank();
        let k = kernel_basis(&self.rho.sub(&IntMatrix::identity(n)).transpose());
        Sublattice::new(self.lattice.clone(), k).expect("kernel rows are independent")
    }

    /// Saturated kernel of `Φ_N(ρ)`.
    pub fn primitive_part(&self) -> Sublattice {
        let phi = poly_eval(&cyclotomic(self.order), &self.rho);
        let k = kernel_basis(&phi.transpose());
        Sublattice::new(self.lattice.clone(), k).expect("kernel rows are independent")
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_sublattice().rank() == 0
    }

    /// True when ρ preserves the row span of `basis`.
    pub fn preserves(&self, basis: &IntMatrix) -> bool {
        if basis.rows() == 0 {
            return true;
        }
        let s = Sublattice::new(self.lattice.clone(), basis.clone());
        match s {
            Ok(s) => s.contains(&basis.mul(&self.rho)),
            Err(_) => false,
        }
    }

    /// Induced action on `A_L` is trivial: `g·ρ − g ∈ ℤⁿ` for the generators.
    pub fn is_estar(&self) -> Result<bool> {
        let dg = self.lattice.disc_group()?;
        let r = RatMatrix::from_int(&self.rho);
        Ok(dg.generators.iter().all(|(g, _)| {
            r.vec_mul(g)
                .iter()
                .zip(g)
                .all(|(a, b)| (a - b).is_integer())
        }))
    }

    /// `(ρ − 1)(L*) ⊆ L`, tested on the dual basis.
    pub fn is_theta_elementary(&self) -> Result<bool> {
        let inv = self.lattice.gram_inverse()?;
        let n = self.rank();
        let d = RatMatrix::from_int(&self.rho.sub(&IntMatrix::identity(n)));
        Ok(inv.mul(&d).is_integral())
    }

    /// Both formulations of the 𝓔* condition; errors if they disagree.
    pub fn estar_checked(&self) -> Result<bool> {
        let a = self.is_estar()?;
        let b = self.is_theta_elementary()?;
        if a != b {
            return Err(Error::Internal(
                "trivial discriminant action and theta-elementarity disagree".into(),
            ));
        }
        Ok(a)
    }

    /// Hermitian form over the Eisenstein integers on a greedy 𝓔-basis.
    pub fn eisenstein_gram(&self) -> Result<EisensteinBasis> {
        hermitian::eisenstein_gram(self)
    }

    pub fn direct_sum(&self, other: &RhoLattice) -> RhoLattice {
        RhoLattice {
            lattice: self.lattice.direct_sum(&other.lattice),
            rho: self.rho.block_diag(&other.rho),
            order: self.order.lcm(&other.order),
        }
    }

    /// Same isometry on the lattice with rescaled form.
    pub fn rescale(&self, n: &BigInt) -> Result<RhoLattice> {
        Ok(RhoLattice {
            lattice: self.lattice.rescale(n)?,
            rho: self.rho.clone(),
            order: self.order,
        })
    }

    pub fn negate(&self) -> RhoLattice {
        RhoLattice {
            lattice: self.lattice.negate(),
            rho: self.rho.clone(),
            order: self.order,
        }
    }

    /// Induced isometry on `J⊥/J` for a `ρ`-invariant isotropic `J`.
    pub fn on_quotient(&self, j: &Sublattice) -> Result<(IsotropicQuotient, RhoLattice)> {
        if !self.preserves(j.basis()) {
            return Err(Error::Internal("isotropic sublattice is not ρ-invariant".into()));
        }
        let q = j.quotient_by_isotropic()?;
        let image = q.lift.mul(&self.rho);
        let m = q.project(j.basis(), &image)?;
        let r = RhoLattice::new(q.lattice.clone(), m)?;
        Ok((q, r))
    }

    /// Restriction to a `ρ`-invariant sublattice, in its basis.
    pub fn restrict(&self, s: &Sublattice) -> Result<RhoLattice> {
        let image = s.basis().mul(&self.rho);
        let m = crate::exactla::solve_rows_in_basis(&image, s.basis())
            .map_err(|_| Error::Internal("sublattice is not ρ-invariant".into()))?;
        RhoLattice::new(s.as_lattice(), m)
    }
}

/// Block-diagonal isometry on the direct sum; the order is re-verified.
pub fn assemble(blocks: &[RhoLattice]) -> Result<RhoLattice> {
    let mut it = blocks.iter();
    let first = it
        .next()
        .ok_or_else(|| Error::Unsupported("no blocks to assemble".into()))?
        .clone();
    let sum = it.fold(first, |acc, b| acc.direct_sum(b));
    RhoLattice::new(sum.lattice, sum.rho)
}
