use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Smith normal form `left·A·right = diag(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

/// Row Hermite normal form. Returns `(H, U)` with `U·A = H`, `U` unimodular.
///
/// Pivots are positive, entries above a pivot are reduced into `[0, pivot)`,
/// and zero rows sit at the bottom.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.rows();
    let n = a.cols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        // Repeatedly pick the smallest nonzero entry as pivot; keeps growth tame.
        loop {
            let piv = (r..m)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(p) = piv else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &-q.clone());
                u.add_row_multiple(i, r, &-q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for k in 0..r {
            let q = h[(k, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                h.add_row_multiple(k, r, &-q.clone());
                u.add_row_multiple(k, r, &-q);
            }
        }
        r += 1;
    }
    (h, u)
}

fn is_diagonal(a: &IntMatrix) -> bool {
    (0..a.rows()).all(|i| (0..a.cols()).all(|j| i == j || a[(i, j)].is_zero()))
}

/// Smith normal form by alternating row and column Hermite reduction,
/// followed by a gcd/lcm pass to enforce the divisibility chain.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let mut d = a.clone();
    let mut left = IntMatrix::identity(a.rows());
    let mut right = IntMatrix::identity(a.cols());
    while !is_diagonal(&d) {
        let (h, u) = hnf(&d);
        left = u.mul(&left);
        d = h;
        if is_diagonal(&d) {
            break;
        }
        let (h, u) = hnf(&d.transpose());
        right = right.mul(&u.transpose());
        d = h.transpose();
    }
    let k = a.rows().min(a.cols());
    for i in 0..k {
        for j in i + 1..k {
            let x = d[(i, i)].clone();
            let y = d[(j, j)].clone();
            if y.is_zero() || (!x.is_zero() && y.is_multiple_of(&x)) {
                continue;
            }
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let xg = &x / &g;
            let yg = &y / &g;
            // L = [[s, t], [-y/g, x/g]] on rows i, j.
            let mut l = IntMatrix::identity(a.rows());
            l[(i, i)] = s.clone();
            l[(i, j)] = t.clone();
            l[(j, i)] = -yg.clone();
            l[(j, j)] = xg.clone();
            // R = [[1, -t·y/g], [1, s·x/g]] on columns i, j.
            let mut rr = IntMatrix::identity(a.cols());
            rr[(i, j)] = -(&t * &yg);
            rr[(j, i)] = BigInt::one();
            rr[(j, j)] = &s * &xg;
            d = l.mul(&d).mul(&rr);
            left = l.mul(&left);
            right = right.mul(&rr);
        }
    }
    for i in 0..k {
        if d[(i, i)].is_negative() {
            d.negate_row(i);
            left.negate_row(i);
        }
    }
    SnfResult {
        d: (0..k).map(|i| d[(i, i)].clone()).collect(),
        left,
        right,
    }
}

/// Basis of `{x ∈ ℤ^cols : x·Aᵀ = 0}`, returned in Hermite normal form.
/// The result is saturated because it is cut out of a unimodular transform.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let n = a.cols();
    let at = a.transpose();
    let (h, u) = hnf(&at);
    let zero_rows: Vec<usize> = (0..n)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .collect();
    let k = u.select_rows(&zero_rows);
    if k.rows() == 0 {
        return IntMatrix::zeros(0, n);
    }
    hnf(&k).0
}

/// Nonzero rows of the Hermite form: a basis for the row lattice.
pub fn row_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(a);
    let keep: Vec<usize> = (0..h.rows())
        .filter(|&i| h.row(i).iter().any(|v| !v.is_zero()))
        .collect();
    let b = h.select_rows(&keep);
    if b.rows() == 0 {
        IntMatrix::zeros(0, a.cols())
    } else {
        b
    }
}

/// `span_ℚ(rows) ∩ ℤ^ambient_rank`, in Hermite normal form.
pub fn saturate(rows: &IntMatrix, ambient_rank: usize) -> Result<IntMatrix> {
    if rows.rows() > 0 && rows.cols() != ambient_rank {
        return Err(Error::Dimension(format!(
            "rows have {} columns, ambient rank is {ambient_rank}",
            rows.cols()
        )));
    }
    if rows.rank() != rows.rows() {
        return Err(Error::DependentRows);
    }
    if rows.rows() == 0 {
        return Ok(IntMatrix::zeros(0, ambient_rank));
    }
    Ok(kernel_basis(&kernel_basis(rows)))
}

/// `[saturate(S) : S]`, the product of the nonzero Smith invariants of `S`.
pub fn saturation_index(rows: &IntMatrix) -> Result<BigInt> {
    if rows.rank() != rows.rows() {
        return Err(Error::DependentRows);
    }
    Ok(snf(rows).d.iter().fold(BigInt::one(), |acc, d| acc * d))
}

/// Index of the row lattice of `sub` inside the row lattice of `sup`,
/// assuming both have full rank `r` in the same span. Errors if `sub ⊄ sup`.
pub fn sublattice_index(sub: &IntMatrix, sup: &IntMatrix) -> Result<BigInt> {
    let coords = super::solve_rows_in_basis(sub, sup)?;
    if coords.rows() != coords.cols() {
        return Err(Error::Dimension("sublattice rank differs".into()));
    }
    Ok(coords.det().abs())
}
