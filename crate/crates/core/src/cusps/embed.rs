use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Signed;

use super::niemeier::NiemeierModel;
use crate::error::Result;
use crate::exactla::{kernel_basis, row_lattice_basis, snf, IntMatrix, SnfResult};
use crate::lattice::standard::Ade;
use crate::roots::{small_gram, to_big, RootSet, RootSystemType};

/// Root system of one component with lookup tables for the search.
struct Component {
    roots: RootSet,
    index: HashMap<Vec<i64>, usize>,
    /// One root from each `±` pair.
    positive: Vec<usize>,
    cartan_snf: SnfResult,
}

impl Component {
    fn new(ade: Ade) -> Result<Self> {
        let l = ade.lattice();
        let roots = RootSet::of(&l)?;
        let index = (0..roots.len()).map(|i| (roots.small(i).to_vec(), i)).collect();
        let positive = (0..roots.len())
            .filter(|&i| roots.small(i).iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
            .collect();
        Ok(Component {
            roots,
            index,
            positive,
            cartan_snf: snf(l.gram()),
        })
    }

    fn reflect(&self, beta: usize, gamma: usize) -> usize {
        let k = self.roots.pair(beta, gamma);
        let v: Vec<i64> = self
            .roots
            .small(gamma)
            .iter()
            .zip(self.roots.small(beta))
            .map(|(g, b)| g - k * b)
            .collect();
        self.index[&v]
    }

    /// Order of the image of `P⊥ ∩ R*` in `R*/R`.
    fn local_quotient_order(&self, images: &[Vec<i64>]) -> u64 {
        let n = self.cartan_snf.d.len();
        let p = IntMatrix::from_big_rows(images.iter().map(|v| to_big(v)).collect(), n);
        // Dual vectors in dual-basis coordinates z pair with roots by z·pᵀ.
        let k = kernel_basis(&p);
        let d = IntMatrix::diagonal(&self.cartan_snf.d);
        let lat = row_lattice_basis(&k.mul(&self.cartan_snf.right).vstack(&d));
        let total: BigInt = self.cartan_snf.d.iter().product();
        let sub = lat.det();
        let q = total / sub.abs();
        u64::try_from(&q).expect("quotient of a small group")
    }
}

/// One orbit of embeddings of a factor multiset into a single component.
#[derive(Clone, Debug)]
pub struct LocalEmbedding {
    /// Images of the simple roots, component coordinates.
    pub images: Vec<Vec<i64>>,
    pub complement: RootSystemType,
    pub quotient_order: u64,
}

fn block_cartan(factors: &[Ade]) -> Vec<Vec<i64>> {
    let mut g = IntMatrix::zeros(0, 0);
    for f in factors {
        g = g.block_diag(&f.cartan());
    }
    small_gram(&g)
}

/// Weyl orbits of Cartan-preserving maps from the simple roots of `factors`
/// into the component. At each step the candidates are split into orbits of
/// the pointwise stabilizer of the roots placed so far, which is generated by
/// the reflections in roots orthogonal to them.
fn search(comp: &Component, factors: &[Ade]) -> Vec<LocalEmbedding> {
    let c = block_cartan(factors);
    let m = c.len();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(comp: &Component, c: &[Vec<i64>], chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let level = chosen.len();
        if level == c.len() {
            out.push(chosen.clone());
            return;
        }
        let cand: Vec<usize> = (0..comp.roots.len())
            .filter(|&g| chosen.iter().enumerate().all(|(j, &r)| comp.roots.pair(g, r) == c[level][j]))
            .collect();
        if cand.is_empty() {
            return;
        }
        let slot: HashMap<usize, usize> = cand.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let mut parent: Vec<usize> = (0..cand.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let stab: Vec<usize> = comp
            .positive
            .iter()
            .copied()
            .filter(|&b| chosen.iter().all(|&r| comp.roots.pair(b, r) == 0))
            .collect();
        for &b in &stab {
            for (k, &g) in cand.iter().enumerate() {
                if comp.roots.pair(b, g) == 0 {
                    continue;
                }
                let h = slot[&comp.reflect(b, g)];
                let (x, y) = (find(&mut parent, k), find(&mut parent, h));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        for k in 0..cand.len() {
            if find(&mut parent, k) == k {
                chosen.push(cand[k]);
                rec(comp, c, chosen, out);
                chosen.pop();
            }
        }
    }
    if m == 0 {
        out.push(Vec::new());
    } else {
        rec(comp, &c, &mut chosen, &mut out);
    }
    out.into_iter()
        .map(|idx| {
            let images: Vec<Vec<i64>> = idx.iter().map(|&i| comp.roots.small(i).to_vec()).collect();
            let complement = comp
                .roots
                .orthogonal_to(&images)
                .root_type()
                .expect("subsets of a root system are root systems");
            let quotient_order = comp.local_quotient_order(&images);
            LocalEmbedding {
                images,
                complement,
                quotient_order,
            }
        })
        .collect()
}

/// Embeddings of factor multisets into single components, memoized.
pub struct EmbeddingCache {
    components: HashMap<Ade, Component>,
    local: HashMap<(Ade, Vec<Ade>), Vec<LocalEmbedding>>,
}

impl Default for EmbeddingCache {
    fn default() -> Self {
        Self::new()
    }
}

impl EmbeddingCache {
    pub fn new() -> Self {
        EmbeddingCache {
            components: HashMap::new(),
            local: HashMap::new(),
        }
    }

    /// All Weyl orbits of embeddings of `factors` into `target`.
    pub fn local(&mut self, target: Ade, factors: &[Ade]) -> Result<&[LocalEmbedding]> {
        let key = (target, factors.to_vec());
        if !self.local.contains_key(&key) {
            let rank: usize = factors.iter().map(|f| f.rank()).sum();
            let found = if rank > target.rank() {
                Vec::new()
            } else {
                if !self.components.contains_key(&target) {
                    self.components.insert(target, Component::new(target)?);
                }
                search(&self.components[&target], factors)
            };
            self.local.insert(key.clone(), found);
        }
        Ok(&self.local[&key])
    }
}

/// Data attached to one component of `R` by an embedding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentImage {
    pub component: Ade,
    pub factors: Vec<Ade>,
    pub complement: RootSystemType,
    /// Order of the image of `P⊥_{R*}` in this component's discriminant group.
    pub quotient_order: u64,
}

/// An embedding `P ⊂ R`, up to the per-component complement data.
#[derive(Clone, Debug)]
pub struct EmbeddingRecord {
    /// Component images sorted canonically.
    pub components: Vec<ComponentImage>,
    /// Root type of `P⊥_N`, starred for an index-3 saturation.
    pub total_complement: RootSystemType,
    pub starred: bool,
    /// Order of `P⊥_{R*}/R`.
    pub quotient_order: u64,
    /// Images of the simple roots of `P` in `R` coordinates.
    pub witness: Vec<Vec<i64>>,
    /// Number of Weyl-orbit-level embeddings sharing this record.
    pub orbit_count: usize,
}

impl EmbeddingRecord {
    pub fn p_rank(&self) -> usize {
        self.witness.len()
    }
}

/// Distributes the factors of `P` over the components of the model and
/// embeds each group, one record per distinct complement pattern.
pub fn enumerate_embeddings(
    factors: &[Ade],
    model: &NiemeierModel,
    cache: &mut EmbeddingCache,
) -> Result<Vec<EmbeddingRecord>> {
    let nc = model.components.len();
    let nf = factors.len();
    let mut found: BTreeMap<Vec<ComponentImage>, (Vec<Vec<i64>>, usize)> = BTreeMap::new();
    for code in 0..nc.pow(nf as u32) {
        let mut groups: Vec<Vec<Ade>> = vec![Vec::new(); nc];
        let mut c = code;
        for f in factors {
            groups[c % nc].push(*f);
            c /= nc;
        }
        for g in &mut groups {
            g.sort_by(|a, b| b.cmp(a));
        }
        let mut options: Vec<Vec<LocalEmbedding>> = Vec::with_capacity(nc);
        for (target, g) in model.components.iter().zip(&groups) {
            options.push(cache.local(*target, g)?.to_vec());
        }
        if options.iter().any(Vec::is_empty) {
            continue;
        }
        let mut pick = vec![0usize; nc];
        loop {
            let mut key: Vec<ComponentImage> = Vec::with_capacity(nc);
            let mut witness = Vec::new();
            for i in 0..nc {
                let e = &options[i][pick[i]];
                key.push(ComponentImage {
                    component: model.components[i],
                    factors: groups[i].clone(),
                    complement: e.complement.clone(),
                    quotient_order: e.quotient_order,
                });
                witness.extend(e.images.iter().map(|v| model.place(i, v)));
            }
            key.sort();
            found
                .entry(key)
                .and_modify(|(_, n)| *n += 1)
                .or_insert((witness, 1));
            // Advance the mixed-radix counter.
            let mut i = 0;
            while i < nc {
                pick[i] += 1;
                if pick[i] < options[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == nc {
                break;
            }
        }
    }
    let mut out = Vec::new();
    for (components, (witness, orbit_count)) in found {
        let index = model.saturation_index(&witness)?;
        if index != 1 && index != 3 {
            return Err(crate::Error::Internal(format!("saturation index {index} is not 1 or 3")));
        }
        let starred = index == 3;
        let total = components
            .iter()
            .fold(RootSystemType::empty(), |acc, c| acc.union(&c.complement))
            .starred(starred);
        let quotient_order = components.iter().map(|c| c.quotient_order).product();
        out.push(EmbeddingRecord {
            components,
            total_complement: total,
            starred,
            quotient_order,
            witness,
            orbit_count,
        });
    }
    Ok(out)
}
