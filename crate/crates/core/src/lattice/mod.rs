//! Integral lattices given by symmetric Gram matrices.

mod disc;
mod glue;
pub mod standard;
mod sublattice;

pub use disc::{DiscGroup, NikulinInvariants};
pub use glue::GluedLattice;
pub use sublattice::{IsotropicQuotient, Sublattice};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{IntMatrix, RatMatrix};

/// A finite-rank free ℤ-module with an integral symmetric bilinear form.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
    label: Option<String>,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::Unsupported("Gram matrix must be square and symmetric".into()));
        }
        Ok(Lattice { gram, label: None })
    }

    pub(crate) fn from_gram_unchecked(gram: IntMatrix) -> Self {
        debug_assert!(gram.is_symmetric());
        Lattice { gram, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.gram.bilinear(x, y)
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.gram.bilinear(x, x)
    }

    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        Lattice {
            gram: self.gram.block_diag(&other.gram),
            label,
        }
    }

    pub fn direct_sum_all<'a>(parts: impl IntoIterator<Item = &'a Lattice>) -> Lattice {
        parts
            .into_iter()
            .fold(Lattice::from_gram_unchecked(IntMatrix::zeros(0, 0)), |acc, l| {
                if acc.rank() == 0 {
                    l.clone()
                } else {
                    acc.direct_sum(l)
                }
            })
    }

    pub fn rescale(&self, n: &BigInt) -> Result<Lattice> {
        if n.is_zero() {
            return Err(Error::ZeroRescale);
        }
        Ok(Lattice {
            gram: self.gram.scale(n),
            label: self.label.as_ref().map(|l| format!("({l})({n})")),
        })
    }

    pub fn negate(&self) -> Lattice {
        Lattice {
            gram: self.gram.neg(),
            label: self.label.clone(),
        }
    }

    /// `(p, q)` by exact congruence diagonalization over ℚ.
    pub fn signature(&self) -> Result<(usize, usize)> {
        signature_of(&self.gram)
    }

    pub fn is_positive_definite(&self) -> bool {
        matches!(self.signature(), Ok((_, 0)))
    }

    pub fn is_negative_definite(&self) -> bool {
        matches!(self.signature(), Ok((0, _)))
    }

    /// Inverse Gram matrix; its rows are the dual basis in lattice coordinates.
    pub fn gram_inverse(&self) -> Result<RatMatrix> {
        RatMatrix::from_int(&self.gram)
            .inverse()
            .ok_or_else(|| Error::Degenerate {
                radical_rank: self.rank() - self.gram.rank(),
            })
    }

    /// gcd of the pairings of `v` with a basis.
    pub fn divisibility(&self, v: &[BigInt]) -> Result<BigInt> {
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(self
            .gram
            .vec_mul(v)
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x)))
    }

    /// Rational pairing for dual-lattice vectors written in lattice coordinates.
    pub fn pair_rational(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let g = RatMatrix::from_int(&self.gram);
        let xg = g.vec_mul(x);
        xg.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    pub fn sublattice(&self, basis: IntMatrix) -> Result<Sublattice> {
        Sublattice::new(self.clone(), basis)
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "Lattice({l}, gram={})", self.gram),
            None => write!(f, "Lattice(gram={})", self.gram),
        }
    }
}

/// Signature of a symmetric integer matrix; errors on degenerate forms.
pub fn signature_of(g: &IntMatrix) -> Result<(usize, usize)> {
    let n = g.rows();
    let mut a = RatMatrix::from_int(g);
    let (mut p, mut q) = (0, 0);
    for k in 0..n {
        let mut piv = (k..n).find(|&i| !a[(i, i)].is_zero());
        if piv.is_none() {
            // All remaining diagonal entries vanish: fold an off-diagonal entry in.
            let off = (k..n).find_map(|i| (i + 1..n).find(|&j| !a[(i, j)].is_zero()).map(|j| (i, j)));
            let Some((i, j)) = off else {
                return Err(Error::Degenerate { radical_rank: n - k });
            };
            add_congruent(&mut a, i, j);
            piv = Some(i);
        }
        let i = piv.unwrap_or(k);
        swap_congruent(&mut a, i, k);
        let pk = a[(k, k)].clone();
        if pk.is_positive() {
            p += 1;
        } else {
            q += 1;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &pk;
            for j in k..n {
                let v = &f * &a[(k, j)];
                a[(i, j)] -= v;
            }
            for j in k..n {
                let v = &f * &a[(j, k)];
                a[(j, i)] -= v;
            }
        }
    }
    Ok((p, q))
}

fn add_congruent(a: &mut RatMatrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a[(j, c)].clone();
        a[(i, c)] += v;
    }
    for r in 0..n {
        let v = a[(r, j)].clone();
        a[(r, i)] += v;
    }
}

fn swap_congruent(a: &mut RatMatrix, i: usize, k: usize) {
    if i == k {
        return;
    }
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(k, c)].clone();
        a[(k, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, k)].clone();
        a[(r, k)] = t;
    }
}

/// True when `x·G` is integral, i.e. `x` lies in the dual lattice.
pub fn in_dual(l: &Lattice, x: &[BigRational]) -> bool {
    RatMatrix::from_int(l.gram())
        .vec_mul(x)
        .iter()
        .all(|v| v.is_integer())
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;

    #[test]
    fn signatures() {
        assert_eq!(u().signature().unwrap(), (1, 1));
        let t = u()
            .direct_sum(&u_n(3))
            .direct_sum(&e8().negate())
            .direct_sum(&e8().negate());
        assert_eq!(t.rank(), 20);
        assert_eq!(t.signature().unwrap(), (2, 18));
        let p = Lattice::direct_sum_all(&[e6().negate(), a(2).negate(), a(2).negate(), a(2).negate()]);
        assert_eq!(p.signature().unwrap(), (0, 12));
    }

    #[test]
    fn degenerate_reports_radical() {
        let l = Lattice::new(IntMatrix::from_rows(&[[0, 0], [0, 2]])).unwrap();
        assert_eq!(l.signature(), Err(Error::Degenerate { radical_rank: 1 }));
    }

    #[test]
    fn rescale_examples() {
        assert_eq!(u().rescale(&1.into()).unwrap().gram(), u().gram());
        assert_eq!(
            u().rescale(&3.into()).unwrap().gram(),
            &IntMatrix::from_rows(&[[0, 3], [3, 0]])
        );
        assert_eq!(u().rescale(&0.into()), Err(Error::ZeroRescale));
    }

    #[test]
    fn divisibility_examples() {
        let e = crate::exactla::ivec(&[1, 0]);
        assert_eq!(u().divisibility(&e).unwrap(), 1.into());
        assert_eq!(u_n(3).divisibility(&e).unwrap(), 3.into());
        assert_eq!(u().divisibility(&crate::exactla::ivec(&[2, 0])).unwrap(), 2.into());
        assert_eq!(u().divisibility(&crate::exactla::ivec(&[0, 0])), Err(Error::ZeroVector));
    }
}
