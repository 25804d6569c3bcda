//! Standard lattices. ADE root lattices use Bourbaki Cartan matrices and are
//! positive definite; callers negate them for negative-definite ambients.

use num_bigint::BigInt;

use super::Lattice;
use crate::error::{Error, Result};
use crate::exactla::IntMatrix;

/// ADE symbol for an irreducible root lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ade {
    A(usize),
    D(usize),
    E(usize),
}

impl Ade {
    pub fn rank(self) -> usize {
        match self {
            Ade::A(n) | Ade::D(n) | Ade::E(n) => n,
        }
    }

    /// Number of roots.
    pub fn root_count(self) -> usize {
        match self {
            Ade::A(n) => n * (n + 1),
            Ade::D(n) => 2 * n * (n - 1),
            Ade::E(6) => 72,
            Ade::E(7) => 126,
            Ade::E(8) => 240,
            Ade::E(_) => unreachable!("validated at construction"),
        }
    }

    /// Coxeter number.
    pub fn coxeter_number(self) -> usize {
        match self {
            Ade::A(n) => n + 1,
            Ade::D(n) => 2 * (n - 1),
            Ade::E(6) => 12,
            Ade::E(7) => 18,
            Ade::E(8) => 30,
            Ade::E(_) => unreachable!("validated at construction"),
        }
    }

    pub fn validate(self) -> Result<Self> {
        match self {
            Ade::A(n) if n >= 1 => Ok(self),
            Ade::D(n) if n >= 4 => Ok(self),
            Ade::E(6 | 7 | 8) => Ok(self),
            _ => Err(Error::Unsupported(format!("no root lattice {self}"))),
        }
    }

    pub fn cartan(self) -> IntMatrix {
        let n = self.rank();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match self {
            Ade::A(_) => edges.extend((1..n).map(|i| (i - 1, i))),
            Ade::D(_) => {
                edges.extend((1..n - 1).map(|i| (i - 1, i)));
                edges.push((n - 3, n - 1));
            }
            Ade::E(_) => {
                // 1-3-4-5-...-n with 2 attached to 4 (one-based labels).
                edges.push((0, 2));
                edges.push((1, 3));
                edges.extend((3..n).map(|i| (i - 1, i)));
            }
        }
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            g[(i, i)] = BigInt::from(2);
        }
        for (i, j) in edges {
            g[(i, j)] = BigInt::from(-1);
            g[(j, i)] = BigInt::from(-1);
        }
        g
    }

    pub fn lattice(self) -> Lattice {
        Lattice::from_gram_unchecked(self.cartan()).with_label(self.to_string())
    }
}

impl std::fmt::Display for Ade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ade::A(n) => write!(f, "A{n}"),
            Ade::D(n) => write!(f, "D{n}"),
            Ade::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Hyperbolic plane.
pub fn u() -> Lattice {
    Lattice::from_gram_unchecked(IntMatrix::from_rows(&[[0, 1], [1, 0]])).with_label("U")
}

pub fn u_n(n: i64) -> Lattice {
    Lattice::from_gram_unchecked(IntMatrix::from_rows(&[[0, n], [n, 0]])).with_label(format!("U({n})"))
}

pub fn a(n: usize) -> Lattice {
    Ade::A(n).lattice()
}

pub fn d(n: usize) -> Lattice {
    Ade::D(n).lattice()
}

pub fn e6() -> Lattice {
    Ade::E(6).lattice()
}

pub fn e7() -> Lattice {
    Ade::E(7).lattice()
}

pub fn e8() -> Lattice {
    Ade::E(8).lattice()
}

/// Diagonal lattice ⟨n₁⟩ ⊕ … ⊕ ⟨n_k⟩.
pub fn diag(entries: &[i64]) -> Lattice {
    let d: Vec<BigInt> = entries.iter().map(|&v| BigInt::from(v)).collect();
    Lattice::from_gram_unchecked(IntMatrix::diagonal(&d))
}

/// Basis of D₄ inside ℤ⁴ as vectors with even coordinate sum; rows are the
/// Bourbaki simple roots e₁−e₂, e₂−e₃, e₃−e₄, e₃+e₄.
pub fn d4_in_z4_basis() -> IntMatrix {
    IntMatrix::from_rows(&[[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 1, 1]])
}

/// D₄ realized as the even-sum sublattice of the standard ℤ⁴.
pub fn d4_z4_model() -> Lattice {
    let b = d4_in_z4_basis();
    Lattice::from_gram_unchecked(b.mul(&b.transpose())).with_label("D4[Z4]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(e8().det(), 1.into());
        assert_eq!(e7().det(), 2.into());
        assert_eq!(e6().det(), 3.into());
        assert_eq!(a(2).det(), 3.into());
        assert_eq!(d(4).det(), 4.into());
        assert_eq!(d(8).det(), 4.into());
    }

    #[test]
    fn z4_model_matches_cartan() {
        // The simple-root basis gives the Cartan matrix on the nose, so the
        // identity on coordinates is the isometry between the two models.
        assert_eq!(d4_z4_model().gram(), d(4).gram());
    }

    #[test]
    fn rejects_bad_symbols() {
        assert!(Ade::D(3).validate().is_err());
        assert!(Ade::E(9).validate().is_err());
        assert!(Ade::A(0).validate().is_err());
    }
}
