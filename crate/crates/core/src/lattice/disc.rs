use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Lattice;
use crate::error::{Error, Result};
use crate::exactla::snf;

/// Discriminant group `L*/L` as a product of cyclic groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscGroup {
    /// Invariant factors greater than one, in divisibility order.
    pub elementary_divisors: Vec<BigInt>,
    /// For each prime `p`, the number of cyclic factors of order divisible by `p`.
    pub a_p: BTreeMap<u64, usize>,
    /// Generators of the cyclic factors in lattice coordinates, paired with
    /// their orders.
    pub generators: Vec<(Vec<BigRational>, BigInt)>,
}

/// `(t₊, t₋, a, δ)` of an even 2-elementary lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NikulinInvariants {
    pub t_plus: usize,
    pub t_minus: usize,
    pub a: usize,
    pub delta: u8,
}

impl DiscGroup {
    pub fn order(&self) -> BigInt {
        self.elementary_divisors
            .iter()
            .fold(BigInt::one(), |acc, d| acc * d)
    }

    pub fn is_trivial(&self) -> bool {
        self.elementary_divisors.is_empty()
    }

    pub fn a(&self, p: u64) -> usize {
        self.a_p.get(&p).copied().unwrap_or(0)
    }
}

fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        if n.is_multiple_of(&bp) {
            out.push(p);
            while n.is_multiple_of(&bp) {
                n /= &bp;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor exceeds u64"));
    }
    out
}

impl Lattice {
    /// `L*/L` from the Smith form of the Gram matrix.
    pub fn disc_group(&self) -> Result<DiscGroup> {
        let s = snf(self.gram());
        if let Some(z) = s.d.iter().position(Zero::is_zero) {
            return Err(Error::Degenerate {
                radical_rank: self.rank() - z,
            });
        }
        let mut elementary_divisors = Vec::new();
        let mut generators = Vec::new();
        let mut a_p = BTreeMap::new();
        for (i, d) in s.d.iter().enumerate() {
            if d.is_one() {
                continue;
            }
            // L* = ℤⁿ·D⁻¹·left, so row i of `left` over dᵢ generates a factor of order dᵢ.
            let g: Vec<BigRational> = s
                .left
                .row(i)
                .iter()
                .map(|v| BigRational::new(v.clone(), d.clone()))
                .collect();
            generators.push((g, d.clone()));
            elementary_divisors.push(d.clone());
            for p in prime_factors(d) {
                *a_p.entry(p).or_insert(0) += 1;
            }
        }
        Ok(DiscGroup {
            elementary_divisors,
            a_p,
            generators,
        })
    }

    /// True iff every invariant factor of `L*/L` equals `p`.
    pub fn is_p_elementary(&self, p: u64) -> Result<bool> {
        let dg = self.disc_group()?;
        let bp = BigInt::from(p);
        Ok(dg.elementary_divisors.iter().all(|d| *d == bp))
    }

    /// Nikulin's invariants of an even 2-elementary lattice.
    pub fn nikulin_2elem(&self) -> Result<NikulinInvariants> {
        if !self.is_even() {
            return Err(Error::Unsupported("lattice is not even".into()));
        }
        if !self.is_p_elementary(2)? {
            return Err(Error::NotElementary { p: 2 });
        }
        let (t_plus, t_minus) = self.signature()?;
        let dg = self.disc_group()?;
        // q(x+y) = q(x) + q(y) + 2b(x,y) with 2b integral, so integrality of q
        // on generators decides integrality on the whole group.
        let delta = dg
            .generators
            .iter()
            .any(|(g, _)| !self.pair_rational(g, g).is_integer());
        Ok(NikulinInvariants {
            t_plus,
            t_minus,
            a: dg.elementary_divisors.len(),
            delta: u8::from(delta),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard::*;

    #[test]
    fn small_discriminants() {
        let g = e6().disc_group().unwrap();
        assert_eq!(g.elementary_divisors, vec![BigInt::from(3)]);
        assert_eq!(g.a(3), 1);
        let g = u_n(3).disc_group().unwrap();
        assert_eq!(g.elementary_divisors, vec![BigInt::from(3), BigInt::from(3)]);
        assert_eq!(g.a(3), 2);
        assert!(e8().disc_group().unwrap().is_trivial());
    }

    #[test]
    fn elementarity() {
        assert!(u_n(3).is_p_elementary(3).unwrap());
        assert!(u().is_p_elementary(3).unwrap());
        assert!(e6().direct_sum(&a(2)).is_p_elementary(3).unwrap());
        assert!(!d(4).direct_sum(&a(2)).is_p_elementary(3).unwrap());
    }

    #[test]
    fn nikulin_examples() {
        let expect = NikulinInvariants {
            t_plus: 1,
            t_minus: 9,
            a: 4,
            delta: 0,
        };
        let l1 = u_n(2).direct_sum(&d(8).negate());
        let l2 = u().direct_sum(&d(4).negate()).direct_sum(&d(4).negate());
        assert_eq!(l1.nikulin_2elem().unwrap(), expect);
        assert_eq!(l2.nikulin_2elem().unwrap(), expect);
        let nu = u().nikulin_2elem().unwrap();
        assert_eq!((nu.t_plus, nu.t_minus, nu.a, nu.delta), (1, 1, 0, 0));
        // ⟨2⟩-type discriminant forms have δ = 1.
        assert_eq!(a(1).negate().direct_sum(&u()).nikulin_2elem().unwrap().delta, 1);
        assert!(a(2).nikulin_2elem().is_err());
    }
}
