//! Seeded randomized checks shared by the property and acceptance targets,
//! plus a brute-force root enumerator used as an independent oracle.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use eislat::exactla::{hnf, kernel_basis, saturate, saturation_index, snf, sublattice_index, IntMatrix};
use eislat::expr::parse;
use eislat::lattice::standard::Ade;
use eislat::lattice::{Lattice, Sublattice};
use eislat::roots::enumerate_norm;

pub type Check = Result<(), String>;

pub fn small(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).expect("small entry")).collect())
        .collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    if rows == 0 {
        return IntMatrix::zeros(0, cols);
    }
    IntMatrix::from_rows(&data)
}

/// Random `m × n` matrix of rank at most `r`, built as a product.
pub fn random_low_rank<R: Rng>(rng: &mut R, m: usize, n: usize, r: usize) -> IntMatrix {
    random_matrix(rng, m, r, 3).mul(&random_matrix(rng, r, n, 3))
}

fn is_hnf(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows() {
        let Some(p) = (0..h.cols()).find(|&j| !h[(i, j)].is_zero()) else {
            seen_zero = true;
            continue;
        };
        if seen_zero || last_pivot.is_some_and(|q| p <= q) || !h[(i, p)].is_positive() {
            return false;
        }
        for k in 0..i {
            if h[(k, p)].is_negative() || h[(k, p)] >= h[(i, p)] {
                return false;
            }
        }
        last_pivot = Some(p);
    }
    true
}

fn is_unit(x: &BigInt) -> bool {
    x.abs().is_one()
}

/// HNF and SNF transform identities on one random matrix.
pub fn normal_form_case<R: Rng>(rng: &mut R) -> Check {
    let m = rng.gen_range(1..=12);
    let n = rng.gen_range(1..=12);
    let a = if rng.gen_bool(0.5) {
        random_matrix(rng, m, n, 9)
    } else {
        let r = rng.gen_range(1..=m.min(n));
        random_low_rank(rng, m, n, r)
    };
    let (h, u) = hnf(&a);
    if u.mul(&a) != h {
        return Err(format!("U·A != H for {m}x{n}"));
    }
    if !is_unit(&u.det()) {
        return Err("HNF transform is not unimodular".into());
    }
    if !is_hnf(&h) {
        return Err(format!("not in Hermite form: {:?}", small(&h)));
    }
    let s = snf(&a);
    let prod = s.left.mul(&a).mul(&s.right);
    for i in 0..m {
        for j in 0..n {
            let want = if i == j { s.d[i].clone() } else { BigInt::zero() };
            if prod[(i, j)] != want {
                return Err(format!("left·A·right differs from diag(d) at ({i},{j})"));
            }
        }
    }
    if !is_unit(&s.left.det()) || !is_unit(&s.right.det()) {
        return Err("SNF transforms are not unimodular".into());
    }
    for w in s.d.windows(2) {
        let ok = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
        if !ok || w[0].is_negative() {
            return Err(format!("divisor chain broken: {:?}", s.d));
        }
    }
    if a.rank() != s.d.iter().filter(|d| !d.is_zero()).count() {
        return Err("rank disagrees with the number of nonzero divisors".into());
    }
    Ok(())
}

/// Saturation idempotence, index bookkeeping and kernel identities.
pub fn saturation_case<R: Rng>(rng: &mut R) -> Check {
    let n = rng.gen_range(2..=9);
    let k = rng.gen_range(1..n);
    let s = loop {
        let cand = random_matrix(rng, k, n, 6);
        if cand.rank() == k {
            break cand;
        }
    };
    let sat = saturate(&s, n).map_err(|e| e.to_string())?;
    if saturate(&sat, n).map_err(|e| e.to_string())? != sat {
        return Err("saturate is not idempotent".into());
    }
    if !is_unit(&saturation_index(&sat).map_err(|e| e.to_string())?) {
        return Err("saturated rows have index > 1".into());
    }
    let idx = saturation_index(&s).map_err(|e| e.to_string())?;
    let direct = sublattice_index(&s, &sat).map_err(|e| e.to_string())?;
    if idx != direct {
        return Err(format!("index {idx} from divisors, {direct} from coordinates"));
    }
    let kb = kernel_basis(&s);
    if kb.rows() != n - k || !kb.mul(&s.transpose()).is_zero() {
        return Err("kernel basis is wrong".into());
    }
    if saturate(&kb, n).map_err(|e| e.to_string())? != kb {
        return Err("kernel basis is not saturated".into());
    }
    Ok(())
}

/// Every root of a positive definite Gram matrix, by scanning the box
/// `|xᵢ| ≤ ⌊√(2·G⁻¹ᵢᵢ)⌋` that Cauchy–Schwarz forces on norm-2 vectors.
pub fn box_roots(g: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = g.len();
    let bounds: Vec<i64> = inverse_diagonal(g)
        .iter()
        .map(|d| (2.0 * d + 1e-9).sqrt().floor() as i64)
        .collect();
    let mut out = BTreeSet::new();
    let mut x = vec![0i64; n];
    scan(g, &bounds, 0, 0, &mut x, &mut out);
    out
}

fn scan(g: &[Vec<i64>], b: &[i64], i: usize, acc: i64, x: &mut Vec<i64>, out: &mut BTreeSet<Vec<i64>>) {
    if i == x.len() {
        if acc == 2 {
            out.insert(x.clone());
        }
        return;
    }
    for v in -b[i]..=b[i] {
        let cross: i64 = (0..i).map(|j| g[i][j] * x[j]).sum();
        x[i] = v;
        scan(g, b, i + 1, acc + g[i][i] * v * v + 2 * v * cross, x, out);
    }
    x[i] = 0;
}

fn inverse_diagonal(g: &[Vec<i64>]) -> Vec<f64> {
    let n = g.len();
    let mut a: Vec<Vec<f64>> = g
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<f64> = r.iter().map(|&x| x as f64).collect();
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        a.swap(c, p);
        let piv = a[c][c];
        for v in a[c].iter_mut() {
            *v /= piv;
        }
        for r in 0..n {
            if r != c {
                let f = a[r][c];
                let pivot_row = a[c].clone();
                for (v, w) in a[r].iter_mut().zip(pivot_row) {
                    *v -= f * w;
                }
            }
        }
    }
    (0..n).map(|i| a[i][n + i]).collect()
}

pub fn standard_root_lattices() -> Vec<Ade> {
    let mut v: Vec<Ade> = (1..=8).map(Ade::A).collect();
    v.extend((4..=8).map(Ade::D));
    v.extend([Ade::E(6), Ade::E(7), Ade::E(8)]);
    v
}

/// Fincke–Pohst against the coefficient box on one standard lattice.
pub fn enumeration_agrees(ade: Ade) -> Check {
    let l = ade.lattice();
    let fp: BTreeSet<Vec<i64>> = small(&IntMatrix::from_big_rows(
        enumerate_norm(&l, &BigInt::from(2)).map_err(|e| e.to_string())?,
        l.rank(),
    ))
    .into_iter()
    .collect();
    let bx = box_roots(&small(l.gram()));
    if fp != bx {
        return Err(format!("{ade}: {} roots by Fincke–Pohst, {} by box", fp.len(), bx.len()));
    }
    if fp.len() != ade.root_count() {
        return Err(format!("{ade}: {} roots, expected {}", fp.len(), ade.root_count()));
    }
    Ok(())
}

fn add_scaled(v: &mut [BigInt], w: &[BigInt], k: &BigInt) {
    for (a, b) in v.iter_mut().zip(w) {
        *a += k * b;
    }
}

/// A random saturated isotropic plane in `U ⊕ U ⊕ L` with `L` even:
/// `x₁ = e₁ + n₁f₁ + w₁`, `x₂ = e₂ + n₂f₂ − (w₁·w₂)f₁ + w₂`, then a random
/// change of basis of the plane.
pub fn random_isotropic_plane<R: Rng>(rng: &mut R, ambient: &Lattice) -> Sublattice {
    let n = ambient.rank();
    let w = |rng: &mut R| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n];
        for x in v.iter_mut().skip(4) {
            *x = BigInt::from(rng.gen_range(-2..=2));
        }
        v
    };
    let (w1, w2) = (w(rng), w(rng));
    let half = |v: &[BigInt]| -ambient.norm(v) / 2;
    let mut x1 = w1.clone();
    x1[0] += 1;
    x1[1] += half(&w1);
    let mut x2 = w2.clone();
    x2[2] += 1;
    x2[3] += half(&w2);
    x2[1] -= ambient.pair(&w1, &w2);
    for _ in 0..rng.gen_range(0..6) {
        let k = BigInt::from(rng.gen_range(-3..=3));
        if rng.gen_bool(0.5) {
            add_scaled(&mut x1, &x2.clone(), &k);
        } else {
            add_scaled(&mut x2, &x1.clone(), &k);
        }
    }
    Sublattice::new(ambient.clone(), IntMatrix::from_big_rows(vec![x1, x2], n)).expect("independent rows")
}

pub fn u2_e8_squared() -> Lattice {
    parse("U + U + E8^2").unwrap().to_lattice().unwrap()
}

/// `J⊥/J` of an isotropic plane in an even unimodular lattice is even
/// unimodular of rank `rank − 4` with both signature entries dropping by 2.
pub fn isotropic_quotient_case<R: Rng>(rng: &mut R, ambient: &Lattice) -> Check {
    let j = random_isotropic_plane(rng, ambient);
    if !j.is_isotropic() || !j.is_saturated() {
        return Err("generated plane is not a saturated isotropic plane".into());
    }
    let q = j.quotient_by_isotropic().map_err(|e| e.to_string())?;
    let l = &q.lattice;
    let (p, m) = ambient.signature().map_err(|e| e.to_string())?;
    if l.rank() != ambient.rank() - 4 {
        return Err(format!("quotient has rank {}", l.rank()));
    }
    if !l.is_unimodular() || !l.is_even() {
        return Err(format!("quotient has det {} (even: {})", l.det(), l.is_even()));
    }
    if l.signature().map_err(|e| e.to_string())? != (p - 2, m - 2) {
        return Err("quotient signature is wrong".into());
    }
    Ok(())
}
