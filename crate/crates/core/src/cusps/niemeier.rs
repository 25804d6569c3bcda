use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, row_lattice_basis, IntMatrix, RatMatrix};
use crate::lattice::GluedLattice;
use crate::lattice::standard::Ade;
use crate::lattice::Lattice;
use crate::roots::{to_big, RootSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NiemeierKind {
    E8Cubed,
    E6Fourth,
}

impl NiemeierKind {
    pub const ALL: [NiemeierKind; 2] = [NiemeierKind::E8Cubed, NiemeierKind::E6Fourth];

    pub fn components(self) -> Vec<Ade> {
        match self {
            NiemeierKind::E8Cubed => vec![Ade::E(8); 3],
            NiemeierKind::E6Fourth => vec![Ade::E(6); 4],
        }
    }
}

impl fmt::Display for NiemeierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NiemeierKind::E8Cubed => "E8^3",
            NiemeierKind::E6Fourth => "E6^4",
        })
    }
}

/// Positive definite Niemeier lattice `N ⊇ R` with `R` a sum of equal
/// root lattices, in the block coordinates of `R`.
#[derive(Clone, Debug)]
pub struct NiemeierModel {
    pub kind: NiemeierKind,
    pub components: Vec<Ade>,
    /// First coordinate of each component.
    pub offsets: Vec<usize>,
    pub r: Lattice,
    pub n: GluedLattice,
    /// Basis of the glue code in `A_R ≅ ⊕ A_{component}`, one residue per component.
    pub glue_code: Vec<Vec<u8>>,
    pub roots: RootSet,
}

/// Weight of a codeword over `F₃`.
fn weight(c: &[u8]) -> usize {
    c.iter().filter(|&&x| x != 0).count()
}

fn span_f3(basis: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let len = basis.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for code in 0..3usize.pow(basis.len() as u32) {
        let mut c = code;
        let mut w = vec![0u8; len];
        for b in basis {
            let k = (c % 3) as u8;
            c /= 3;
            for (x, y) in w.iter_mut().zip(b) {
                *x = (*x + k * y) % 3;
            }
        }
        out.push(w);
    }
    out
}

/// All 2-dimensional subspaces of `F₃⁴` as reduced row-echelon pairs,
/// in lexicographic order.
fn planes_f3_4() -> Vec<[Vec<u8>; 2]> {
    let vectors: Vec<Vec<u8>> = (0..81u32)
        .map(|mut c| {
            let mut v = vec![0u8; 4];
            for x in v.iter_mut().rev() {
                *x = (c % 3) as u8;
                c /= 3;
            }
            v
        })
        .collect();
    let lead = |v: &[u8]| v.iter().position(|&x| x != 0);
    let mut out = Vec::new();
    for a in &vectors {
        for b in &vectors {
            let (Some(pa), Some(pb)) = (lead(a), lead(b)) else { continue };
            if pa >= pb || a[pa] != 1 || b[pb] != 1 || a[pb] != 0 {
                continue;
            }
            out.push([a.clone(), b.clone()]);
        }
    }
    out.sort();
    out
}

impl NiemeierModel {
    pub fn rank(&self) -> usize {
        self.r.rank()
    }

    /// Embeds a component-local vector into `R` coordinates.
    pub fn place(&self, component: usize, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        let off = self.offsets[component];
        out[off..off + v.len()].copy_from_slice(v);
        out
    }

    /// Index `[P⊥_N : root span of P⊥_N]` for the sublattice spanned by `rows`
    /// (in `R` coordinates).
    pub fn saturation_index(&self, rows: &[Vec<i64>]) -> Result<u64> {
        let n = self.rank();
        let g = RatMatrix::from_int(self.r.gram());
        let p = RatMatrix::from_int(&IntMatrix::from_big_rows(
            rows.iter().map(|r| to_big(r)).collect(),
            n,
        ));
        let a = p.mul(&g).mul(&self.n.basis.transpose());
        let den = a.denominator();
        let a_int = scale_to_int(&a, &den)?;
        let c = kernel_basis(&a_int);
        let sat_gram = c.mul(self.n.lattice.gram()).mul(&c.transpose());

        let orth = self.roots.orthogonal_to(rows);
        let span = if orth.is_empty() {
            IntMatrix::zeros(0, n)
        } else {
            row_lattice_basis(&IntMatrix::from_big_rows(orth.vectors.clone(), n))
        };
        if span.rows() != c.rows() {
            return Err(Error::Internal(format!(
                "complement has rank {} but its roots span rank {}",
                c.rows(),
                span.rows()
            )));
        }
        if c.rows() == 0 {
            return Ok(1);
        }
        let root_det = span.mul(self.r.gram()).mul(&span.transpose()).det();
        let sat_det = sat_gram.det();
        let ratio = BigRational::new(root_det, sat_det);
        if !ratio.is_integer() {
            return Err(Error::Internal("root span is not contained in the complement".into()));
        }
        let sq = ratio.to_integer();
        let root = sq.sqrt();
        if &root * &root != sq {
            return Err(Error::Internal(format!("determinant ratio {sq} is not a square")));
        }
        u64::try_from(&root).map_err(|_| Error::Internal("saturation index overflow".into()))
    }
}

fn scale_to_int(a: &RatMatrix, den: &BigInt) -> Result<IntMatrix> {
    let rows: Vec<Vec<BigInt>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| (x * den).to_integer()).collect())
        .collect();
    Ok(IntMatrix::from_big_rows(rows, a.cols()))
}

fn component_roots(components: &[Ade], offsets: &[usize], gram: &IntMatrix) -> Result<RootSet> {
    let n = gram.rows();
    let mut all = Vec::new();
    for (ade, &off) in components.iter().zip(offsets) {
        let local = RootSet::of(&ade.lattice())?;
        for v in &local.vectors {
            let mut w = vec![BigInt::zero(); n];
            w[off..off + v.len()].clone_from_slice(v);
            all.push(w);
        }
    }
    Ok(RootSet::from_vectors(all, gram))
}

/// Builds `N(E₈³)` or `N(E₆⁴)`.
pub fn build_niemeier(kind: NiemeierKind) -> Result<NiemeierModel> {
    let components = kind.components();
    let mut offsets = Vec::new();
    let mut acc = 0;
    for c in &components {
        offsets.push(acc);
        acc += c.rank();
    }
    let r = Lattice::direct_sum_all(&components.iter().map(|c| c.lattice()).collect::<Vec<_>>());
    let roots = component_roots(&components, &offsets, r.gram())?;
    let (n, glue_code) = match kind {
        NiemeierKind::E8Cubed => (r.glue_overlattice(&[])?, Vec::new()),
        NiemeierKind::E6Fourth => e6_fourth_glue(&r, &offsets)?,
    };
    if !n.lattice.is_even() || !n.lattice.is_unimodular() || n.lattice.rank() != 24 {
        return Err(Error::Internal(format!("{kind} overlattice is not even unimodular of rank 24")));
    }
    Ok(NiemeierModel {
        kind,
        components,
        offsets,
        r,
        n,
        glue_code,
        roots,
    })
}

/// Dual vector of `E₆` generating `A_{E₆}`: the first row of the inverse Cartan matrix.
fn e6_glue_generator() -> Result<Vec<BigRational>> {
    let inv = Ade::E(6)
        .lattice()
        .gram_inverse()?;
    Ok(inv.row(0).to_vec())
}

fn e6_fourth_glue(r: &Lattice, offsets: &[usize]) -> Result<(GluedLattice, Vec<Vec<u8>>)> {
    let w = e6_glue_generator()?;
    let lift = |c: &[u8]| -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); r.rank()];
        for (i, &ci) in c.iter().enumerate() {
            for (k, x) in w.iter().enumerate() {
                v[offsets[i] + k] = x * BigRational::from_integer(BigInt::from(ci));
            }
        }
        v
    };
    for plane in planes_f3_4() {
        let glue: Vec<Vec<BigRational>> = plane.iter().map(|c| lift(c)).collect();
        let Ok(n) = r.glue_overlattice(&glue) else { continue };
        if !n.lattice.is_even() || !n.lattice.is_unimodular() {
            continue;
        }
        let code = plane.to_vec();
        for word in span_f3(&code) {
            let wt = weight(&word);
            if wt != 0 && wt != 3 {
                return Err(Error::Internal(format!(
                    "glue word {word:?} does not have exactly one zero coordinate"
                )));
            }
        }
        if n.index != BigInt::from(9) {
            return Err(Error::Internal("glue index is not 9".into()));
        }
        return Ok((n, code));
    }
    Err(Error::Internal("no even unimodular glue for E6^4".into()))
}
