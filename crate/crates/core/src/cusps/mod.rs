//! 1-cusps of the Eisenstein lattices `T(n,k)`: embeddings of `P` into the root
//! systems of Niemeier lattices, and the direct route through isotropic planes.

mod embed;
mod family;
mod niemeier;

pub use embed::{
    enumerate_embeddings, ComponentImage, EmbeddingCache, EmbeddingRecord, LocalEmbedding,
};
pub use family::{family_data, FamilyData, FamilyId, FAMILIES};
pub use niemeier::{build_niemeier, NiemeierKind, NiemeierModel};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::eisenstein::RhoLattice;
use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::lattice::{Lattice, Sublattice};
use crate::roots::{root_system, RootSystemType};

/// One isomorphism class of `J⊥/J` with the embeddings that produce it.
#[derive(Clone, Debug)]
pub struct CuspRecord {
    pub family: FamilyId,
    pub jperp_root: RootSystemType,
    pub witnesses: Vec<(NiemeierKind, EmbeddingRecord)>,
}

/// Embedding records of `P(id)` into each Niemeier model.
pub fn embeddings_by_model(
    id: FamilyId,
    models: &[NiemeierModel],
    cache: &mut EmbeddingCache,
) -> Result<Vec<(NiemeierKind, Vec<EmbeddingRecord>)>> {
    let factors = id.p_factors();
    models
        .iter()
        .map(|m| Ok((m.kind, enumerate_embeddings(&factors, m, cache)?)))
        .collect()
}

/// Both Niemeier models used by the classification.
pub fn all_models() -> Result<Vec<NiemeierModel>> {
    NiemeierKind::ALL.iter().map(|&k| build_niemeier(k)).collect()
}

/// Cusp types of `T(id)`, deduplicated by root type and star flag.
pub fn classify_cusps(id: FamilyId) -> Result<Vec<CuspRecord>> {
    classify_with(id, &all_models()?, &mut EmbeddingCache::new())
}

/// Same as [`classify_cusps`] with prebuilt models and a shared cache.
pub fn classify_with(
    id: FamilyId,
    models: &[NiemeierModel],
    cache: &mut EmbeddingCache,
) -> Result<Vec<CuspRecord>> {
    let mut out: Vec<CuspRecord> = Vec::new();
    for (kind, records) in embeddings_by_model(id, models, cache)? {
        for rec in records {
            match out.iter_mut().find(|c| c.jperp_root == rec.total_complement) {
                Some(c) => c.witnesses.push((kind, rec)),
                None => out.push(CuspRecord {
                    family: id,
                    jperp_root: rec.total_complement.clone(),
                    witnesses: vec![(kind, rec)],
                }),
            }
        }
    }
    out.sort_by(|a, b| b.jperp_root.cmp(&a.jperp_root));
    Ok(out)
}

/// Saturation of `span{e, ρe}`, checked to be an isotropic `ρ`-invariant plane.
pub fn isotropic_plane(r: &RhoLattice, e: &[BigInt]) -> Result<Sublattice> {
    if e.len() != r.rank() {
        return Err(Error::Dimension(format!(
            "vector has length {}, lattice rank is {}",
            e.len(),
            r.rank()
        )));
    }
    if e.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    if !r.lattice.norm(e).is_zero() {
        return Err(Error::NotIsotropic);
    }
    let re = r.apply(e);
    let n = r.rank();
    let span = Sublattice::new(r.lattice.clone(), IntMatrix::from_big_rows(vec![e.to_vec(), re], n))?;
    let j = span.saturation();
    if !j.is_isotropic() {
        return Err(Error::NotIsotropic);
    }
    if !r.preserves(j.basis()) {
        return Err(Error::Internal("saturated plane is not ρ-invariant".into()));
    }
    Ok(j)
}

/// Root type of `J⊥/J`, starred when the roots span an index-3 sublattice.
pub fn cusp_of_plane(j: &Sublattice) -> Result<RootSystemType> {
    let q = j.quotient_by_isotropic()?;
    let (t, span) = root_system(&q.lattice)?;
    let index = root_span_index(&q.lattice, &span)?;
    match index {
        Some(1) => Ok(t),
        Some(3) => Ok(t.starred(true)),
        _ => Err(Error::Unsupported(format!(
            "roots of J⊥/J span a sublattice of index {index:?}"
        ))),
    }
}

/// `[L : span]` for a full-rank sublattice, `None` when the rank drops.
fn root_span_index(l: &Lattice, span: &Sublattice) -> Result<Option<u64>> {
    if span.rank() != l.rank() {
        return Ok(None);
    }
    let ratio = BigRational::new(span.as_lattice().det(), l.det());
    if !ratio.is_integer() {
        return Err(Error::Internal("determinant ratio is not integral".into()));
    }
    let sq = ratio.to_integer();
    let root = sq.sqrt();
    if &root * &root != sq {
        return Err(Error::Internal("determinant ratio is not a square".into()));
    }
    Ok(u64::try_from(&root).ok())
}
