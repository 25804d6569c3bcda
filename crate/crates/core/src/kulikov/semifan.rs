use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cusps::FamilyId;
use crate::eisenstein::{assemble, fpf_order3, RhoLattice};
use crate::error::{Error, Result};
use crate::exactla::{saturation_index, IntMatrix, RatMatrix};
use crate::lattice::standard::Ade;
use crate::lattice::{Lattice, Sublattice};
use crate::roots::{RootSet, RootSystemType};

/// Which moduli problem a semifan record belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemifanFamily {
    Order3(FamilyId),
    Order4,
}

impl fmt::Display for SemifanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemifanFamily::Order3(id) => write!(f, "{id}"),
            SemifanFamily::Order4 => f.write_str("order4"),
        }
    }
}

/// `𝔉_J` inside a model of `J⊥/J`.
#[derive(Clone, Debug)]
pub struct SemifanRecord {
    pub family: SemifanFamily,
    pub cusp: RootSystemType,
    /// Saturated sublattice of the `J⊥/J` model.
    pub fj_basis: Sublattice,
    pub rank: usize,
    /// Elementary divisors of `A_{𝔉_J}`.
    pub disc: Vec<BigInt>,
    /// `[𝔉_J : span of the designated summands]`.
    pub span_index: BigInt,
    pub primitive: bool,
    pub rho_invariant: bool,
}

/// KSBA semifans of the order-3 families: each cusp with the number of
/// `A₂` summands whose saturation is `𝔉_J`.
pub fn ksba_table() -> Vec<(FamilyId, RootSystemType, usize)> {
    let rows: [(u8, u8, &str, usize); 12] = [
        (0, 2, "E8^2", 0),
        (0, 1, "(E6^2+A2^2)*", 2),
        (0, 1, "E8+E6+A2", 1),
        (0, 1, "E8^2", 0),
        (1, 1, "(E6+A2^4)*", 4),
        (1, 1, "E8+A2^3", 3),
        (1, 1, "E6^2+A2", 1),
        (1, 1, "E8+E6", 0),
        (2, 1, "A2^6*", 6),
        (2, 1, "E6+A2^3", 3),
        (2, 1, "E6^2", 0),
        (2, 1, "E8+A2^2", 2),
    ];
    rows.iter()
        .map(|&(n, k, t, c)| {
            (
                FamilyId { n, k },
                t.parse().expect("table entries parse"),
                c,
            )
        })
        .collect()
}

/// Negative definite root lattice with a glue overlattice for starred types,
/// and the assembled fixed-point-free `ρ` carried over to it.
#[derive(Clone, Debug)]
pub struct CuspModel {
    pub factors: Vec<Ade>,
    pub offsets: Vec<usize>,
    pub root_sum: Lattice,
    /// Overlattice basis in root-sum coordinates.
    pub basis: RatMatrix,
    pub rho: RhoLattice,
    /// Glue word over `F₃`, one entry per factor; empty when unstarred.
    pub glue: Vec<u8>,
}

fn glue_words(len: usize, allowed: &[bool]) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    for code in 0..3usize.pow(len as u32) {
        let mut c = code;
        let mut w = vec![0u8; len];
        for x in w.iter_mut().rev() {
            *x = (c % 3) as u8;
            c /= 3;
        }
        let ok = w.iter().zip(allowed).all(|(&x, &a)| a || x == 0);
        if ok && w.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(w);
        }
    }
    let weight = |w: &Vec<u8>| w.iter().filter(|&&x| x != 0).count();
    out.sort_by(|a, b| weight(b).cmp(&weight(a)).then(a.cmp(b)));
    out
}

/// Builds the `J⊥/J` model for a cusp type.
pub fn cusp_model(cusp: &RootSystemType) -> Result<CuspModel> {
    let factors = cusp.components().to_vec();
    let mut offsets = Vec::new();
    let mut acc = 0;
    for f in &factors {
        offsets.push(acc);
        acc += f.rank();
    }
    let blocks = factors
        .iter()
        .map(|f| Ok(fpf_order3(*f)?.negate()))
        .collect::<Result<Vec<_>>>()?;
    let rho_r = assemble(&blocks)?;
    let r = rho_r.lattice.clone();
    let n = r.rank();
    let (basis, glue) = if cusp.is_starred() {
        find_glue(&r, &factors, &offsets)?
    } else {
        (RatMatrix::identity(n), Vec::new())
    };
    let binv = basis
        .inverse()
        .ok_or_else(|| Error::Internal("overlattice basis is singular".into()))?;
    let rho = basis
        .mul(&RatMatrix::from_int(&rho_r.rho))
        .mul(&binv)
        .to_int()
        .ok_or_else(|| Error::Internal(format!("ρ is not integral on the {cusp} model")))?;
    let gram = basis
        .mul(&RatMatrix::from_int(r.gram()))
        .mul(&basis.transpose())
        .to_int()
        .ok_or_else(|| Error::Internal("overlattice form is not integral".into()))?;
    let rho = RhoLattice::new(Lattice::new(gram)?, rho)?;
    Ok(CuspModel {
        factors,
        offsets,
        root_sum: r,
        basis,
        rho,
        glue,
    })
}

/// First index-3 even overlattice without new roots, scanning glue words by
/// descending weight.
fn find_glue(r: &Lattice, factors: &[Ade], offsets: &[usize]) -> Result<(RatMatrix, Vec<u8>)> {
    let inv = r.gram_inverse()?;
    let allowed: Vec<bool> = factors.iter().map(|f| matches!(f, Ade::E(6) | Ade::A(2))).collect();
    let root_count = RootSet::of(r)?.len();
    for w in glue_words(factors.len(), &allowed) {
        let mut g = vec![BigRational::zero(); r.rank()];
        for (i, &c) in w.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // First fundamental weight of the factor generates its order-3 discriminant.
            let row = inv.row(offsets[i]);
            for k in 0..factors[i].rank() {
                g[offsets[i] + k] = &row[offsets[i] + k] * BigRational::from_integer(BigInt::from(c));
            }
        }
        let Ok(glued) = r.glue_overlattice(&[g]) else { continue };
        if glued.index != BigInt::from(3) || !glued.lattice.is_even() {
            continue;
        }
        if RootSet::of(&glued.lattice)?.len() != root_count {
            continue;
        }
        return Ok((glued.basis, w));
    }
    Err(Error::Internal("no index-3 even glue without new roots".into()))
}

/// Saturated span of the designated summands with its invariants.
pub fn semifan_record(family: SemifanFamily, cusp: RootSystemType, rho: &RhoLattice, span: &IntMatrix) -> Result<SemifanRecord> {
    let n = rho.rank();
    let span = if span.rows() == 0 { IntMatrix::zeros(0, n) } else { span.clone() };
    let raw = Sublattice::new(rho.lattice.clone(), span)?;
    let f = raw.saturation();
    let span_index = if raw.rank() == 0 {
        BigInt::one()
    } else {
        crate::exactla::sublattice_index(raw.basis(), f.basis())?
    };
    let disc = if f.rank() == 0 {
        Vec::new()
    } else {
        f.as_lattice().disc_group()?.elementary_divisors
    };
    Ok(SemifanRecord {
        family,
        cusp,
        rank: f.rank(),
        disc,
        span_index,
        primitive: f.rank() == 0 || saturation_index(f.basis())?.is_one(),
        rho_invariant: rho.preserves(f.basis()),
        fj_basis: f,
    })
}

/// `𝔉_J` for an order-3 family and one of its cusps.
pub fn semifan(id: FamilyId, cusp: &RootSystemType) -> Result<SemifanRecord> {
    let (_, _, count) = ksba_table()
        .into_iter()
        .find(|(f, c, _)| *f == id && c == cusp)
        .ok_or_else(|| Error::Unsupported(format!("cusp {cusp} of {id} has no semifan entry")))?;
    let model = cusp_model(cusp)?;
    let n = model.root_sum.rank();
    let a2: Vec<usize> = (0..model.factors.len())
        .filter(|&i| model.factors[i] == Ade::A(2))
        .take(count)
        .collect();
    if a2.len() != count {
        return Err(Error::Internal(format!("{cusp} has fewer than {count} A2 summands")));
    }
    let mut rows = Vec::new();
    for &i in &a2 {
        for k in 0..2 {
            let mut v = vec![BigInt::zero(); n];
            v[model.offsets[i] + k] = BigInt::one();
            rows.push(v);
        }
    }
    let in_r = RatMatrix::from_int(&IntMatrix::from_big_rows(rows, n));
    let binv = model.basis.inverse().expect("checked in cusp_model");
    let span = in_r
        .mul(&binv)
        .to_int()
        .ok_or_else(|| Error::Internal("A2 summands are not in the overlattice".into()))?;
    semifan_record(SemifanFamily::Order3(id), cusp.clone(), &model.rho, &span)
}
