use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RhoLattice;
use crate::error::{Error, Result};
use crate::exactla::IntMatrix;

/// `a + bω` with `ω² + ω + 1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisCoeff {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisCoeff {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisCoeff {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    /// `θ = ω − ω̄ = 1 + 2ω`.
    pub fn theta() -> Self {
        Self::new(1, 2)
    }

    pub fn conj(&self) -> Self {
        // ω̄ = ω² = −1 − ω
        EisCoeff {
            a: &self.a - &self.b,
            b: -self.b.clone(),
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when `θ` divides this element.
    pub fn in_theta_ideal(&self) -> bool {
        // ω ≡ 1 mod θ and θ ∩ ℤ = 3ℤ.
        (&self.a + &self.b).is_multiple_of(&BigInt::from(3))
    }

    /// The six units `±1, ±ω, ±ω²`.
    pub fn units() -> [EisCoeff; 6] {
        [
            Self::new(1, 0),
            Self::new(-1, 0),
            Self::new(0, 1),
            Self::new(0, -1),
            Self::new(-1, -1),
            Self::new(1, 1),
        ]
    }
}

impl Add for &EisCoeff {
    type Output = EisCoeff;
    fn add(self, o: &EisCoeff) -> EisCoeff {
        EisCoeff {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl Sub for &EisCoeff {
    type Output = EisCoeff;
    fn sub(self, o: &EisCoeff) -> EisCoeff {
        EisCoeff {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl Mul for &EisCoeff {
    type Output = EisCoeff;
    fn mul(self, o: &EisCoeff) -> EisCoeff {
        // (a + bω)(c + dω) = ac − bd + (ad + bc − bd)ω
        let bd = &self.b * &o.b;
        EisCoeff {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl Neg for &EisCoeff {
    type Output = EisCoeff;
    fn neg(self) -> EisCoeff {
        EisCoeff {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl fmt::Display for EisCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_one() => write!(f, "w"),
            (true, false) => write!(f, "{}w", self.b),
            (false, false) => {
                if self.b < BigInt::zero() {
                    write!(f, "{}-{}w", self.a, -self.b.clone())
                } else {
                    write!(f, "{}+{}w", self.a, self.b)
                }
            }
        }
    }
}

/// Square matrix of Eisenstein integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianGram(pub Vec<Vec<EisCoeff>>);

impl HermitianGram {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn from_pairs(rows: &[&[(i64, i64)]]) -> Self {
        HermitianGram(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| EisCoeff::new(a, b)).collect())
                .collect(),
        )
    }

    pub fn is_conjugate_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.0[i][j] == self.0[j][i].conj()))
    }
}

impl fmt::Display for HermitianGram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// True when `b = D·a·D̄` for some diagonal matrix of units `D`.
pub fn units_equivalent(a: &HermitianGram, b: &HermitianGram) -> bool {
    let n = a.dim();
    if b.dim() != n {
        return false;
    }
    let units = EisCoeff::units();
    let total = 6usize.pow(n as u32);
    (0..total).any(|code| {
        let mut c = code;
        let d: Vec<&EisCoeff> = (0..n)
            .map(|_| {
                let u = &units[c % 6];
                c /= 6;
                u
            })
            .collect();
        (0..n).all(|i| (0..n).all(|j| &(&(d[i] * &a.0[i][j]) * &d[j].conj()) == &b.0[i][j]))
    })
}

/// 𝓔-basis with its Hermitian Gram matrix.
#[derive(Clone, Debug)]
pub struct EisensteinBasis {
    /// Rows are the chosen vectors `bᵢ` in lattice coordinates.
    pub basis: IntMatrix,
    pub gram: HermitianGram,
    /// Index of `span_ℤ{bᵢ, ρbᵢ}` in the lattice.
    pub index: BigInt,
}

/// `h(x,y) = ½(3⟨x,y⟩ + θ⟨x, ρy − ρ²y⟩)`.
fn h(r: &RhoLattice, x: &[BigInt], y: &[BigInt]) -> Result<EisCoeff> {
    let ry = r.apply(y);
    let rry = r.apply(&ry);
    let diff: Vec<BigInt> = ry.iter().zip(&rry).map(|(a, b)| a - b).collect();
    let a = r.lattice.pair(x, y);
    let b = r.lattice.pair(x, &diff);
    let twice = BigInt::from(3) * &a + &b;
    if twice.is_odd() {
        return Err(Error::Internal("Hermitian form is not integral".into()));
    }
    Ok(EisCoeff { a: twice / 2, b })
}

pub(super) fn eisenstein_gram(r: &RhoLattice) -> Result<EisensteinBasis> {
    if r.order != 3 {
        return Err(Error::Unsupported("Hermitian form needs an isometry of order 3".into()));
    }
    if !r.is_fixed_point_free() {
        return Err(Error::FixedVector);
    }
    let n = r.rank();
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    let mut span: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let mut x = vec![BigInt::zero(); n];
        x[i] = BigInt::one();
        let rx = r.apply(&x);
        let mut trial = span.clone();
        trial.push(x.clone());
        trial.push(rx.clone());
        if IntMatrix::from_big_rows(trial.clone(), n).rank() == trial.len() {
            chosen.push(x);
            span = trial;
        }
        if span.len() == n {
            break;
        }
    }
    let index = IntMatrix::from_big_rows(span.clone(), n).det().abs();
    let gram: Vec<Vec<EisCoeff>> = chosen
        .iter()
        .map(|x| chosen.iter().map(|y| h(r, x, y)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let gram = HermitianGram(gram);
    if !gram.is_conjugate_symmetric() {
        return Err(Error::Internal("Hermitian Gram matrix is not conjugate symmetric".into()));
    }
    // ⅔·Re h recovers the bilinear form on every pair from {bᵢ, ρbᵢ}.
    for x in &span {
        for y in &span {
            let v = h(r, x, y)?;
            let re2 = BigInt::from(2) * &v.a - &v.b;
            if re2 != BigInt::from(3) * r.lattice.pair(x, y) {
                return Err(Error::Internal("real part does not reproduce the form".into()));
            }
        }
    }
    Ok(EisensteinBasis {
        basis: IntMatrix::from_big_rows(chosen, n),
        gram,
        index,
    })
}
