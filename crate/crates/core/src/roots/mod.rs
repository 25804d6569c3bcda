//! Short vectors in definite lattices and ADE root-system identification.

mod enumerate;
mod types;

pub use enumerate::{enumerate_norm, norm_counts};
pub use types::{identify_component, RootSystemType};

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactla::{row_lattice_basis, IntMatrix};
use crate::lattice::{Lattice, Sublattice};

pub(crate) fn to_small(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x).expect("root coordinate exceeds i64"))
        .collect()
}

pub(crate) fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn small_gram(g: &IntMatrix) -> Vec<Vec<i64>> {
    g.to_rows().iter().map(|r| to_small(r)).collect()
}

/// Returns the positive definite version of a definite lattice.
pub(crate) fn positive_form(l: &Lattice) -> Result<Lattice> {
    match l.signature()? {
        (_, 0) => Ok(l.clone()),
        (0, _) => Ok(l.negate()),
        _ => Err(Error::Indefinite),
    }
}

/// Norm-2 vectors (in the positive convention) with machine-word copies for
/// the combinatorial routines.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub vectors: Vec<Vec<BigInt>>,
    small: Vec<Vec<i64>>,
    images: Vec<Vec<i64>>,
}

impl RootSet {
    /// All roots of a definite lattice.
    pub fn of(l: &Lattice) -> Result<RootSet> {
        let pos = positive_form(l)?;
        let vectors = enumerate_norm(&pos, &BigInt::from(2))?;
        Ok(Self::from_vectors(vectors, pos.gram()))
    }

    /// Wraps vectors known to be roots for the positive form `gram`.
    pub fn from_vectors(vectors: Vec<Vec<BigInt>>, gram: &IntMatrix) -> RootSet {
        let g = small_gram(gram);
        let small: Vec<Vec<i64>> = vectors.iter().map(|v| to_small(v)).collect();
        let images = small
            .iter()
            .map(|v| {
                (0..g.len())
                    .map(|j| v.iter().zip(&g).map(|(a, row)| a * row[j]).sum())
                    .collect()
            })
            .collect();
        RootSet {
            vectors,
            small,
            images,
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn small(&self, i: usize) -> &[i64] {
        &self.small[i]
    }

    pub fn pair(&self, i: usize, j: usize) -> i64 {
        dot_small(&self.images[i], &self.small[j])
    }

    /// Pairing of root `i` with an arbitrary vector.
    pub fn pair_with(&self, i: usize, v: &[i64]) -> i64 {
        dot_small(&self.images[i], v)
    }

    /// Sub-collection of roots orthogonal to every row of `rows`.
    pub fn orthogonal_to(&self, rows: &[Vec<i64>]) -> RootSet {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| rows.iter().all(|r| self.pair_with(i, r) == 0))
            .collect();
        self.subset(&keep)
    }

    pub fn subset(&self, idx: &[usize]) -> RootSet {
        RootSet {
            vectors: idx.iter().map(|&i| self.vectors[i].clone()).collect(),
            small: idx.iter().map(|&i| self.small[i].clone()).collect(),
            images: idx.iter().map(|&i| self.images[i].clone()).collect(),
        }
    }

    /// Connected components of the graph `r·r′ ≠ 0`, as index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.pair(i, j) != 0 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[slot[r]].push(i);
        }
        comps
    }

    /// ADE type of the whole set.
    pub fn root_type(&self) -> Result<RootSystemType> {
        let mut ade = Vec::new();
        for comp in self.components() {
            let rows: Vec<Vec<BigInt>> = comp.iter().map(|&i| self.vectors[i].clone()).collect();
            let cols = rows[0].len();
            let rank = IntMatrix::from_big_rows(rows, cols).rank();
            ade.push(identify_component(rank, comp.len())?);
        }
        Ok(RootSystemType::new(ade))
    }

    /// Simple roots of the positive system cut out by the lexicographic order.
    pub fn simple_roots(&self) -> Vec<usize> {
        let positive: Vec<usize> = (0..self.len())
            .filter(|&i| enumerate::is_canonical(&self.vectors[i]))
            .collect();
        let pos_set: HashSet<&[i64]> = positive.iter().map(|&i| self.small[i].as_slice()).collect();
        positive
            .iter()
            .copied()
            .filter(|&a| {
                !positive.iter().any(|&b| {
                    let d: Vec<i64> = self.small[a]
                        .iter()
                        .zip(&self.small[b])
                        .map(|(x, y)| x - y)
                        .collect();
                    pos_set.contains(d.as_slice())
                })
            })
            .collect()
    }
}

pub(crate) fn dot_small(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Root type of a definite lattice and the sublattice spanned by its roots.
pub fn root_system(l: &Lattice) -> Result<(RootSystemType, Sublattice)> {
    let roots = RootSet::of(l)?;
    let t = roots.root_type()?;
    let span = if roots.is_empty() {
        IntMatrix::zeros(0, l.rank())
    } else {
        row_lattice_basis(&IntMatrix::from_big_rows(roots.vectors.clone(), l.rank()))
    };
    Ok((t, l.sublattice(span)?))
}

/// Root type of the orthogonal complement of a root-spanned `S` inside `R`.
pub fn complement_root_type(s: &Sublattice, r: &Lattice) -> Result<RootSystemType> {
    let roots = RootSet::of(r)?;
    let inside: Vec<Vec<BigInt>> = roots
        .vectors
        .iter()
        .filter(|v| s.contains(&IntMatrix::from_big_rows(vec![(*v).clone()], r.rank())))
        .cloned()
        .collect();
    let spanned = if inside.is_empty() {
        IntMatrix::zeros(0, r.rank())
    } else {
        row_lattice_basis(&IntMatrix::from_big_rows(inside, r.rank()))
    };
    if spanned != row_lattice_basis(s.basis()) {
        return Err(Error::Unsupported("sublattice is not spanned by roots".into()));
    }
    let rows: Vec<Vec<i64>> = s.basis().row_iter().map(to_small).collect();
    roots.orthogonal_to(&rows).root_type()
}

/// Isomorphism-invariant summary used in place of isometry testing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub rank: usize,
    pub signature: (usize, usize),
    pub even: bool,
    pub disc: Vec<BigInt>,
    pub root_type: Option<RootSystemType>,
    /// Vector counts at norms 2, 4, 6 for definite lattices of rank at most 12.
    pub shells: Option<[usize; 3]>,
}

pub fn fingerprint(l: &Lattice) -> Result<Fingerprint> {
    let signature = l.signature()?;
    let definite = signature.0 == 0 || signature.1 == 0;
    let root_type = if definite {
        Some(RootSet::of(l)?.root_type()?)
    } else {
        None
    };
    let shells = if definite && l.rank() <= 12 {
        let c = norm_counts(&positive_form(l)?, 6)?;
        Some([c[1], c[3], c[5]])
    } else {
        None
    };
    Ok(Fingerprint {
        rank: l.rank(),
        signature,
        even: l.is_even(),
        disc: l.disc_group()?.elementary_divisors,
        root_type,
        shells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard::*;

    fn t(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn root_systems_of_sums() {
        let l = e6().direct_sum(&a(2)).negate();
        assert_eq!(root_system(&l).unwrap().0, t("E6+A2"));
        let l = Lattice::direct_sum_all(&[d(4), d(4), a(1), a(1)]);
        assert_eq!(root_system(&l).unwrap().0, t("D4^2+A1^2"));
        assert!(root_system(&diag(&[4])).unwrap().0.is_empty());
    }

    #[test]
    fn simple_roots_have_cartan_count() {
        for ade in [Ade::A(2), Ade::D(4), Ade::E(6), Ade::E(8)] {
            let r = RootSet::of(&ade.lattice()).unwrap();
            assert_eq!(r.simple_roots().len(), ade.rank());
        }
    }

    fn span_of(l: &Lattice, rows: &[&[i64]]) -> Sublattice {
        l.sublattice(IntMatrix::from_rows(rows)).unwrap()
    }

    #[test]
    fn complements_in_e8() {
        let e = e8();
        // Simple roots 1 and 3 span an A2 in Bourbaki labelling.
        let a2 = span_of(&e, &[&[1, 0, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0, 0, 0]]);
        assert_eq!(complement_root_type(&a2, &e).unwrap(), t("E6"));
        let e6s = span_of(
            &e,
            &[
                &[1, 0, 0, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 0, 1, 0, 0],
            ],
        );
        assert_eq!(complement_root_type(&e6s, &e).unwrap(), t("A2"));
    }

    #[test]
    fn non_root_span_is_rejected() {
        let e = e8();
        let s = span_of(&e, &[&[2, 0, 0, 0, 0, 0, 0, 0]]);
        assert!(complement_root_type(&s, &e).is_err());
    }

    #[test]
    fn fingerprint_of_e8() {
        let f = fingerprint(&e8()).unwrap();
        assert_eq!(f.shells, Some([240, 2160, 6720]));
        assert_eq!(f.root_type, Some(t("E8")));
    }
}
