//! Fincke–Pohst enumeration with exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{rat, RatMatrix};
use crate::lattice::Lattice;

/// Quadratic-supplement form: `x·G·xᵀ = Σ qᵢᵢ (xᵢ + Σ_{j>i} qᵢⱼ xⱼ)²`.
struct Supplement {
    diag: Vec<BigRational>,
    upper: RatMatrix,
}

fn supplement(l: &Lattice) -> Result<Supplement> {
    let n = l.rank();
    let mut q = RatMatrix::from_int(l.gram());
    for i in 0..n {
        if !q[(i, i)].is_positive() {
            return Err(Error::Indefinite);
        }
        for j in i + 1..n {
            let v = q[(i, j)].clone();
            q[(j, i)] = v.clone();
            q[(i, j)] = v / &q[(i, i)];
        }
        for k in i + 1..n {
            for m in k..n {
                let v = &q[(k, i)] * &q[(i, m)];
                q[(k, m)] -= v;
            }
        }
    }
    Ok(Supplement {
        diag: (0..n).map(|i| q[(i, i)].clone()).collect(),
        upper: q,
    })
}

/// All `x` with `x·G·xᵀ ≤ bound`, in no particular order.
fn fincke_pohst(l: &Lattice, bound: &BigRational) -> Result<Vec<Vec<BigInt>>> {
    let n = l.rank();
    let s = supplement(l)?;
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    if n == 0 {
        out.push(x);
        return Ok(out);
    }
    descend(&s, n - 1, bound, &mut x, &mut out);
    Ok(out)
}

fn descend(
    s: &Supplement,
    i: usize,
    budget: &BigRational,
    x: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    let n = x.len();
    let mut c = BigRational::zero();
    for j in i + 1..n {
        if !x[j].is_zero() {
            c -= &s.upper[(i, j)] * rat(&x[j]);
        }
    }
    let q = &s.diag[i];
    let cost = |v: &BigInt| -> BigRational {
        let d = rat(v) - &c;
        q * &d * &d
    };
    let start = c.floor().to_integer();
    // The admissible set is an interval around c, so it meets floor(c) or floor(c)+1.
    let mut v = start.clone();
    loop {
        let k = cost(&v);
        if &k > budget {
            break;
        }
        visit(s, i, budget - k, &v, x, out);
        v -= 1;
    }
    let mut v = start + 1;
    loop {
        let k = cost(&v);
        if &k > budget {
            break;
        }
        visit(s, i, budget - k, &v, x, out);
        v += 1;
    }
}

fn visit(
    s: &Supplement,
    i: usize,
    rest: BigRational,
    v: &BigInt,
    x: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    x[i] = v.clone();
    if i == 0 {
        out.push(x.clone());
    } else {
        descend(s, i - 1, &rest, x, out);
    }
    x[i] = BigInt::zero();
}

/// Sign-normalized sort key: the representative with positive leading entry.
pub(crate) fn is_canonical(v: &[BigInt]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

/// Every `v` with `v·G·vᵀ = m` in a positive definite lattice.
///
/// Output order: canonical representatives (leading nonzero entry positive)
/// sorted lexicographically, each followed by its negative.
pub fn enumerate_norm(l: &Lattice, m: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    if !m.is_positive() {
        return Err(Error::Unsupported("norm must be positive".into()));
    }
    if !l.is_positive_definite() {
        return Err(Error::Indefinite);
    }
    let all = fincke_pohst(l, &rat(m))?;
    let mut reps: Vec<Vec<BigInt>> = all
        .into_iter()
        .filter(|v| is_canonical(v) && &l.norm(v) == m)
        .collect();
    reps.sort();
    let mut out = Vec::with_capacity(2 * reps.len());
    for v in reps {
        let neg: Vec<BigInt> = v.iter().map(|x| -x).collect();
        out.push(v);
        out.push(neg);
    }
    Ok(out)
}

/// Counts of vectors of each norm `1..=max_norm`.
pub fn norm_counts(l: &Lattice, max_norm: u32) -> Result<Vec<usize>> {
    if !l.is_positive_definite() {
        return Err(Error::Indefinite);
    }
    let all = fincke_pohst(l, &rat(&BigInt::from(max_norm)))?;
    let mut counts = vec![0usize; max_norm as usize];
    for v in all {
        let k = l.norm(&v);
        if k.is_zero() {
            continue;
        }
        if let Ok(idx) = usize::try_from(&k) {
            if (1..=max_norm as usize).contains(&idx) {
                counts[idx - 1] += 1;
            }
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard::*;

    #[test]
    fn small_root_counts() {
        let two = BigInt::from(2);
        assert_eq!(enumerate_norm(&a(1), &two).unwrap().len(), 2);
        assert_eq!(enumerate_norm(&a(2), &two).unwrap().len(), 6);
        assert_eq!(enumerate_norm(&d(4), &two).unwrap().len(), 24);
        assert_eq!(enumerate_norm(&e8(), &two).unwrap().len(), 240);
    }

    #[test]
    fn canonical_order() {
        let v = enumerate_norm(&a(2), &BigInt::from(2)).unwrap();
        let as_i: Vec<Vec<i64>> = v
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        assert_eq!(
            as_i,
            vec![
                vec![0, 1],
                vec![0, -1],
                vec![1, 0],
                vec![-1, 0],
                vec![1, 1],
                vec![-1, -1]
            ]
        );
    }

    #[test]
    fn rejects_indefinite() {
        assert_eq!(enumerate_norm(&u(), &BigInt::from(2)), Err(Error::Indefinite));
    }

    #[test]
    fn e8_theta_series_start() {
        // 240, 2160 vectors of norms 2 and 4.
        assert_eq!(norm_counts(&e8(), 4).unwrap(), vec![0, 240, 0, 2160]);
    }
}
