//! Golden-table verification suites.

pub mod golden;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::cusps::{
    all_models, cusp_of_plane, embeddings_by_model, family_data, isotropic_plane, ComponentImage, EmbeddingCache,
    EmbeddingRecord, FamilyId, NiemeierKind, NiemeierModel, FAMILIES,
};
use crate::eisenstein::standard::{rho_uu, rho_uu3};
use crate::eisenstein::{fpf_order3, units_equivalent, EisCoeff, HermitianGram, RhoLattice};
use crate::error::{Error, Result};
use crate::exactla::ivec;
use crate::expr::parse;
use crate::kulikov::{
    build_component, glue_lambda, ksba_table, order4_checks, pairings, primitive_picard, root_split_check, semifan,
    ComponentSpec,
};
use crate::lattice::standard::Ade;
use crate::lattice::Lattice;
use crate::report::{Provenance, Report};
use crate::roots::{RootSet, RootSystemType};

use Provenance::{Derived, Paper, Trivial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Tab3,
    Tab4,
    Expl,
    Eis,
    Order4,
    Tschirnhausen,
    Glue,
    Semifan,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Tab3,
        Suite::Tab4,
        Suite::Expl,
        Suite::Eis,
        Suite::Order4,
        Suite::Tschirnhausen,
        Suite::Glue,
        Suite::Semifan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tab3 => "tab3",
            Suite::Tab4 => "tab4",
            Suite::Expl => "expl",
            Suite::Eis => "eis",
            Suite::Order4 => "order4",
            Suite::Tschirnhausen => "tschirnhausen",
            Suite::Glue => "glue",
            Suite::Semifan => "semifan",
        }
    }

    pub fn run(self) -> Report {
        match self {
            Suite::Tab3 => tab3(),
            Suite::Tab4 => tab4(),
            Suite::Expl => expl(),
            Suite::Eis => eis(),
            Suite::Order4 => order4(),
            Suite::Tschirnhausen => tschirnhausen(),
            Suite::Glue => glue(),
            Suite::Semifan => semifans(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite {s:?}")))
    }
}

/// Runs suites on separate threads and returns reports in the given order.
pub fn run_all(suites: &[Suite]) -> Vec<Report> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || s.run())).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn t(s: &str) -> RootSystemType {
    s.parse().expect("golden root types parse")
}

fn sig(l: &Lattice) -> String {
    match l.signature() {
        Ok((p, q)) => format!("({p},{q})"),
        Err(e) => format!("error: {e}"),
    }
}

/// Lattices, signatures and discriminant groups of the four families.
pub fn tab3() -> Report {
    let mut r = Report::new("tab3");
    for &(id, s_expr, t_expr, p_expr) in &golden::LATTICES {
        let anchor = format!("families:{id}");
        let d = match family_data(id) {
            Ok(d) => d,
            Err(e) => {
                r.error(format!("{id}/build"), &anchor, Paper, &e);
                continue;
            }
        };
        for (name, built, expr) in [("S", &d.s, s_expr), ("T", &d.t, t_expr), ("P", &d.p, p_expr)] {
            let from_expr = parse(expr).and_then(|e| e.to_lattice());
            let same = match &from_expr {
                Ok(l) => l.gram() == built.gram(),
                Err(_) => false,
            };
            r.assert(format!("{id}/{name}-expression"), &anchor, Paper, same, expr, expr);
        }
        let rk = d.t.rank();
        r.check(format!("{id}/signature-T"), &anchor, Paper, sig(&d.t), format!("(2,{})", rk - 2));
        r.check(format!("{id}/signature-P"), &anchor, Paper, sig(&d.p), format!("(0,{})", d.p.rank()));
        let (sp, sq) = d.s.signature().unwrap_or((0, 0));
        let (tp, tq) = d.t.signature().unwrap_or((0, 0));
        r.check(format!("{id}/signature-S+T"), "K3 lattice II_{3,19}", Trivial, format!("({},{})", sp + tp, sq + tq), "(3,19)");
        r.check(format!("{id}/rank-T+P"), "II_{2,26}", Derived, rk + d.p.rank(), 28);
        let order = |l: &Lattice| l.disc_group().map(|g| g.order()).unwrap_or_default();
        r.check(format!("{id}/|A_S|=|A_T|"), "", Derived, order(&d.s), order(&d.t));
        r.check(format!("{id}/|A_P|=|A_T|"), "", Derived, order(&d.p), order(&d.t));
        for (name, l) in [("T", &d.t), ("S", &d.s), ("P", &d.p)] {
            let elem = l.is_p_elementary(3).unwrap_or(false) || l.is_unimodular();
            let a = l.disc_group().map(|g| g.a(3)).unwrap_or(usize::MAX);
            r.assert(
                format!("{id}/{name}-3-elementary"),
                "",
                Derived,
                elem && a == id.a3_rank(),
                format!("3-elementary={elem}, a={a}"),
                format!("3-elementary=true, a={}", id.a3_rank()),
            );
        }
        let rho = &d.rho_t;
        let estar = rho.estar_checked().unwrap_or(false);
        r.assert(
            format!("{id}/rho-T"),
            &anchor,
            Paper,
            rho.order == 3 && rho.is_fixed_point_free() && estar,
            format!("order {}, fpf {}, E* {estar}", rho.order, rho.is_fixed_point_free()),
            "order 3, fpf true, E* true",
        );
    }
    r
}

fn type_list(v: &[RootSystemType]) -> String {
    let mut s: Vec<String> = v.iter().map(ToString::to_string).collect();
    s.sort();
    s.join(", ")
}

fn golden_cusps(id: FamilyId) -> Vec<RootSystemType> {
    golden::CUSPS
        .iter()
        .find(|(f, _)| *f == id)
        .map(|(_, l)| l.iter().map(|s| t(s)).collect())
        .unwrap_or_default()
}

struct Classified {
    models: Vec<NiemeierModel>,
    by_family: Vec<(FamilyId, Vec<(NiemeierKind, Vec<EmbeddingRecord>)>)>,
}

fn classify_all() -> Result<Classified> {
    let models = all_models()?;
    let mut cache = EmbeddingCache::new();
    let by_family = FAMILIES
        .iter()
        .map(|&id| Ok((id, embeddings_by_model(id, &models, &mut cache)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Classified { models, by_family })
}

/// Cusp classification through embeddings into Niemeier lattices.
pub fn tab4() -> Report {
    let mut r = Report::new("tab4");
    let c = match classify_all() {
        Ok(c) => c,
        Err(e) => {
            r.error("classify", "cusps", Paper, &e);
            return r;
        }
    };
    for m in &c.models {
        let enumerated = RootSet::of(&m.n.lattice).map(|s| s.len()).unwrap_or(0);
        let expected = m.components.iter().map(|a| a.root_count()).sum::<usize>();
        r.check(format!("niemeier/{}/roots", m.kind), "", Derived, enumerated, expected);
        r.assert(
            format!("niemeier/{}/even-unimodular", m.kind),
            "",
            Derived,
            m.n.lattice.is_even() && m.n.lattice.is_unimodular() && m.n.lattice.rank() == 24,
            format!("even {}, det {}", m.n.lattice.is_even(), m.n.lattice.det()),
            "even true, det 1",
        );
        if m.kind == NiemeierKind::E6Fourth {
            r.check("niemeier/E6^4/index", "niemeier:E6^4", Paper, &m.n.index, 9);
        }
    }
    let mut starred = 0;
    for (id, per_model) in &c.by_family {
        let mut types: Vec<RootSystemType> = Vec::new();
        for (kind, recs) in per_model {
            for rec in recs {
                if !types.contains(&rec.total_complement) {
                    types.push(rec.total_complement.clone());
                }
            }
            let published = golden::EMBEDDING_COUNTS
                .iter()
                .find(|(f, k, _)| f == id && k == kind)
                .map_or(0, |x| x.2);
            let orbits: usize = recs.iter().map(|x| x.orbit_count).sum();
            r.assert(
                format!("{id}/{kind}/embeddings"),
                format!("embedding-counts:{id}:{kind}"),
                Paper,
                orbits >= published && recs.len() <= published,
                format!("{} distinct, {orbits} Weyl orbits", recs.len()),
                format!("{published} published, between distinct and orbit counts"),
            );
        }
        starred += types.iter().filter(|x| x.is_starred()).count();
        r.check(
            format!("{id}/cusps"),
            format!("cusps:{id}"),
            Paper,
            type_list(&types),
            type_list(&golden_cusps(*id)),
        );
    }
    r.check("starred-total", "cusps", Paper, starred, 3);

    // Direct route through isotropic planes.
    for (id, pos) in [((0, 2), 0usize), ((0, 1), 0)] {
        let id = FamilyId::new(id.0, id.1).expect("known family");
        let res = family_data(id).and_then(|d| {
            let mut e = vec![0i64; d.t.rank()];
            e[pos] = 1;
            cusp_of_plane(&isotropic_plane(&d.rho_t, &ivec(&e))?)
        });
        match res {
            Ok(ty) => {
                let known = golden_cusps(id);
                r.assert(
                    format!("{id}/plane-e1"),
                    "",
                    Derived,
                    known.contains(&ty),
                    &ty,
                    format!("one of {}", type_list(&known)),
                );
            }
            Err(e) => {
                r.error(format!("{id}/plane-e1"), "", Derived, &e);
            }
        }
    }
    r
}

fn parse_factors(s: &str) -> Vec<Ade> {
    if s.is_empty() {
        Vec::new()
    } else {
        t(s).components().to_vec()
    }
}

fn column_key(col: &[golden::ExplRow]) -> Vec<ComponentImage> {
    let mut key: Vec<ComponentImage> = col
        .iter()
        .map(|&(p, comp, perp, q)| ComponentImage {
            component: t(comp).components()[0],
            factors: parse_factors(p),
            complement: t(perp),
            quotient_order: q,
        })
        .collect();
    key.sort();
    key
}

fn show_key(key: &[ComponentImage]) -> String {
    key.iter()
        .map(|c| {
            let p = if c.factors.is_empty() {
                "-".to_string()
            } else {
                RootSystemType::new(c.factors.clone()).to_string()
            };
            format!("{p}>{}={}/{}", c.component, c.complement, c.quotient_order)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The five root-complement identities, by enumeration.
pub fn complements() -> Report {
    let mut r = Report::new("complements");
    let mut cache = EmbeddingCache::new();
    for &(sub, target, want) in &golden::COMPLEMENTS {
        let target_ade = t(target).components()[0];
        let got = cache.local(target_ade, &parse_factors(sub)).map(|v| {
            let mut s: Vec<String> = v.iter().map(|e| e.complement.to_string()).collect();
            s.dedup();
            s.join(" | ")
        });
        let id = format!("complement/({sub})-in-{target}");
        match got {
            Ok(g) => r.check(id, "complements", Paper, g, t(want)),
            Err(e) => r.error(id, "complements", Paper, &e),
        };
    }
    r
}

/// Per-embedding complement data against the explicit tables.
pub fn expl() -> Report {
    let mut r = Report::new("expl");
    let c = match classify_all() {
        Ok(c) => c,
        Err(e) => {
            r.error("classify", "explicit", Paper, &e);
            return r;
        }
    };
    for &(id, kind, cols) in &golden::EXPLICIT {
        let anchor = format!("explicit:{id}:{kind}");
        let recs = c
            .by_family
            .iter()
            .find(|(f, _)| *f == id)
            .and_then(|(_, v)| v.iter().find(|(k, _)| *k == kind))
            .map(|(_, v)| v.as_slice())
            .unwrap_or(&[]);
        let computed: BTreeMap<Vec<ComponentImage>, &EmbeddingRecord> =
            recs.iter().map(|x| (x.components.clone(), x)).collect();
        let mut expected: Vec<Vec<ComponentImage>> = cols.iter().map(|col| column_key(col)).collect();
        for (i, key) in expected.iter().enumerate() {
            let hit = computed.get(key);
            let got = hit.map_or("absent".to_string(), |x| show_key(&x.components));
            r.check(format!("{id}/{kind}/column-{}", i + 1), &anchor, Paper, got, show_key(key));
            if let Some(x) = hit {
                let q: u64 = key.iter().map(|c| c.quotient_order).product();
                r.check(format!("{id}/{kind}/column-{}/quotient", i + 1), &anchor, Paper, x.quotient_order, q);
            }
        }
        expected.sort();
        expected.dedup();
        let extra: Vec<String> = computed
            .keys()
            .filter(|k| !expected.contains(k))
            .map(|k| show_key(k))
            .collect();
        r.assert(
            format!("{id}/{kind}/no-unlisted"),
            &anchor,
            Paper,
            extra.is_empty(),
            if extra.is_empty() { "none".into() } else { extra.join("; ") },
            "none",
        );
    }
    r.extend(complements());
    r
}

/// Order-3 actions on the hyperbolic blocks and the root lattices.
pub fn eis() -> Report {
    let mut r = Report::new("eis");
    let theta = EisCoeff::theta();
    let uu_gram = HermitianGram(vec![vec![EisCoeff::zero(), theta.clone()], vec![theta.conj(), EisCoeff::zero()]]);
    let uu3_gram = HermitianGram::from_pairs(&[&[(0, 0), (3, 0)], &[(3, 0), (0, 0)]]);
    for (name, rho, want) in [("U+U", rho_uu(), uu_gram), ("U+U(3)", rho_uu3(), uu3_gram)] {
        let anchor = format!("standard-actions:{name}");
        r.check(format!("{name}/order"), &anchor, Paper, rho.order, 3);
        r.check(format!("{name}/fixed-point-free"), &anchor, Paper, rho.is_fixed_point_free(), true);
        match rho.estar_checked() {
            Ok(b) => r.check(format!("{name}/E*"), &anchor, Paper, b, true),
            Err(e) => r.error(format!("{name}/E*"), &anchor, Paper, &e),
        };
        match rho.eisenstein_gram() {
            Ok(g) => r.assert(
                format!("{name}/hermitian"),
                &anchor,
                Paper,
                units_equivalent(&g.gram, &want),
                &g.gram,
                format!("{want} up to units"),
            ),
            Err(e) => r.error(format!("{name}/hermitian"), &anchor, Paper, &e),
        };
    }
    let u3u3 = rho_uu().rescale(&BigInt::from(3));
    match u3u3.and_then(|x| x.estar_checked()) {
        Ok(b) => r.check("U(3)+U(3)/E*", "standard-actions:U(3)+U(3)", Paper, b, false),
        Err(e) => r.error("U(3)+U(3)/E*", "standard-actions:U(3)+U(3)", Paper, &e),
    };
    let mut lattices: Vec<(String, RhoLattice)> = vec![("U+U".into(), rho_uu()), ("U+U(3)".into(), rho_uu3())];
    for ade in [Ade::A(2), Ade::E(6), Ade::E(8)] {
        if let Ok(x) = fpf_order3(ade) {
            lattices.push((ade.to_string(), x));
        }
    }
    for id in FAMILIES {
        if let Ok(d) = family_data(id) {
            lattices.push((format!("T{id}"), d.rho_t));
        }
    }
    for (name, x) in lattices {
        let estar = x.estar_checked().unwrap_or(false);
        let elem = x.lattice.is_unimodular() || x.lattice.is_p_elementary(3).unwrap_or(false);
        r.assert(
            format!("{name}/E*-implies-3-elementary"),
            "estar-implies-elementary",
            Paper,
            estar && elem,
            format!("E* {estar}, 3-elementary {elem}"),
            "E* true, 3-elementary true",
        );
    }
    r
}

/// The order-4 family.
pub fn order4() -> Report {
    let mut r = Report::new("order4");
    let c = match order4_checks() {
        Ok(c) => c,
        Err(e) => {
            r.error("build", "order4", Paper, &e);
            return r;
        }
    };
    let inv = |n: &crate::lattice::NikulinInvariants| format!("({},{},{},{})", n.t_plus, n.t_minus, n.a, n.delta);
    r.check("a/U(2)+D8", "order4:nikulin", Paper, inv(&c.nikulin[0]), "(1,9,4,0)");
    r.check("a/U+D4^2", "order4:nikulin", Paper, inv(&c.nikulin[1]), "(1,9,4,0)");
    r.check("b/order", "order4:rho", Paper, c.rho_order, 4);
    r.check("b/rho^2=-1", "order4:rho", Paper, c.rho_squared_is_minus_one, true);
    r.check("c/J-isotropic", "order4:cusp", Paper, c.j_isotropic, true);
    r.check("c/J-saturated", "order4:cusp", Trivial, c.j_saturated, true);
    r.check("c/J-invariant", "order4:cusp", Paper, c.j_invariant, true);
    r.check("c/quotient", "order4:cusp", Paper, &c.quotient_type, t("D4^2+A1^2"));
    let gram = |m: &crate::exactla::IntMatrix| format!("{:?}", m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>());
    let minus_two = crate::exactla::IntMatrix::from_rows(&[[-2, 0], [0, -2]]);
    r.check("d/M-gram", "order4:summand", Paper, gram(&c.m_gram), gram(&minus_two));
    r.check("d/M-invariant", "order4:summand", Trivial, c.m_invariant, true);
    r.check("d/M-rho^2=-1", "order4:summand", Trivial, c.m_rho_squared_is_minus_one, true);
    r.check("d/M-saturated", "order4:summand", Paper, c.m_saturated, true);
    r.check("d/summand-gram", "order4:summand", Paper, gram(&c.summand_gram), gram(&c.m_gram));
    r.check("d/direct-summand", "order4:summand", Paper, c.summand_is_direct, true);
    r.check("e/F_J-rank", "order4:semifan", Paper, c.semifan.rank, 2);
    r.check("e/F_J-primitive", "order4:semifan", Paper, c.semifan.primitive, true);
    r.check("e/F_J-invariant", "order4:semifan", Paper, c.semifan.rho_invariant, true);
    r
}

fn component_spec(row: usize) -> ComponentSpec {
    let (m, parts, _) = golden::COMPONENTS[row - 1];
    ComponentSpec::new(m, parts)
}

/// Primitive Picard root types of the six component rows.
pub fn tschirnhausen() -> Report {
    let mut r = Report::new("tschirnhausen");
    for (i, &(_, _, want)) in golden::COMPONENTS.iter().enumerate() {
        let spec = component_spec(i + 1);
        let id = format!("row{}/{spec}", i + 1);
        let anchor = format!("components:row{}", i + 1);
        match build_component(&spec).and_then(|c| primitive_picard(&c).map(|p| (c, p))) {
            Ok((c, (prim, ty))) => {
                r.check(format!("{id}/prim"), &anchor, Paper, &ty, t(want));
                r.assert(
                    format!("{id}/picard"),
                    "",
                    Derived,
                    c.picard().rank() == 10 && c.picard().is_unimodular() && prim.as_lattice().is_negative_definite(),
                    format!("rank {}, det {}", c.picard().rank(), c.picard().det()),
                    "rank 10, det -1, negative definite prim",
                );
            }
            Err(e) => {
                r.error(format!("{id}/prim"), &anchor, Paper, &e);
            }
        }
    }
    r
}

/// Two-component gluing for every pairing of every family.
pub fn glue() -> Report {
    let mut r = Report::new("glue");
    let mut comps = Vec::new();
    for row in 1..=6 {
        match build_component(&component_spec(row)) {
            Ok(c) => comps.push(c),
            Err(e) => {
                r.error(format!("row{row}/build"), "", Derived, &e);
                return r;
            }
        }
    }
    for id in FAMILIES {
        let cusps = golden_cusps(id);
        let ksba: Vec<RootSystemType> =
            ksba_table().into_iter().filter(|(f, _, _)| *f == id).map(|(_, c, _)| c).collect();
        let mut realized = Vec::new();
        for (a, b, cusp) in pairings(id) {
            let name = format!("{id}/R{a}+R{b}");
            let anchor = format!("semifans:{id}");
            let (c0, c1) = (&comps[a - 1], &comps[b - 1]);
            let k = match glue_lambda(c0, c1) {
                Ok(k) => k,
                Err(e) => {
                    r.error(format!("{name}/lambda"), &anchor, Paper, &e);
                    continue;
                }
            };
            let l = k.lambda();
            r.assert(
                format!("{name}/lambda"),
                "",
                Derived,
                l.rank() == 18 && l.is_even() && l.is_unimodular(),
                format!("rank {}, even {}, det {}", l.rank(), l.is_even(), l.det()),
                "rank 18, even true, det ±1",
            );
            r.check(
                format!("{name}/fixed+prim"),
                "",
                Derived,
                k.fixed().rank() + k.prim.rank(),
                18,
            );
            match k.prim_root_type() {
                Ok((ty, _)) => {
                    realized.push(ty.clone());
                    r.check(format!("{name}/prim"), &anchor, Paper, &ty, &ksba[cusp - 1]);
                }
                Err(e) => {
                    r.error(format!("{name}/prim"), &anchor, Paper, &e);
                }
            }
            match root_split_check(&k, c0, c1) {
                Ok(s) => r.assert(
                    format!("{name}/root-split"),
                    "root-split",
                    Paper,
                    s.holds,
                    format!("holds {}, index {}", s.holds, s.index),
                    "holds true, finite index",
                ),
                Err(e) => r.error(format!("{name}/root-split"), "root-split", Paper, &e),
            };
        }
        realized.sort();
        realized.dedup();
        r.check(format!("{id}/all-cusps"), format!("cusps:{id}"), Paper, type_list(&realized), type_list(&cusps));
    }
    r
}

/// KSBA semifans of every cusp and of the order-4 case.
pub fn semifans() -> Report {
    let mut r = Report::new("semifan");
    for (id, cusp, count) in ksba_table() {
        let name = format!("{id}/{cusp}");
        let anchor = format!("semifans:{id}");
        match semifan(id, &cusp) {
            Ok(s) => {
                r.check(format!("{name}/rank"), &anchor, Paper, s.rank, 2 * count);
                r.check(format!("{name}/primitive"), &anchor, Paper, s.primitive, true);
                r.check(format!("{name}/rho-invariant"), &anchor, Paper, s.rho_invariant, true);
                let disc: Vec<String> = s.disc.iter().map(ToString::to_string).collect();
                r.check(format!("{name}/disc"), "", Derived, format!("[{}]", disc.join(",")), expected_disc(&cusp, count));
            }
            Err(e) => {
                r.error(format!("{name}/build"), &anchor, Paper, &e);
            }
        }
    }
    match order4_checks() {
        Ok(c) => {
            r.check("order4/A1^2/rank", "order4:semifan", Paper, c.semifan.rank, 2);
            r.check("order4/A1^2/primitive", "order4:semifan", Paper, c.semifan.primitive, true);
            r.check("order4/A1^2/rho-invariant", "order4:semifan", Paper, c.semifan.rho_invariant, true);
        }
        Err(e) => {
            r.error("order4/A1^2", "order4:semifan", Paper, &e);
        }
    }
    r
}

/// `A_{𝔉_J}`: `ℤ₃^count` for a saturated `A₂^count`, two factors fewer after
/// an index-3 saturation (only when all summands are `A₂`).
fn expected_disc(cusp: &RootSystemType, count: usize) -> String {
    let all_a2 = cusp.components().iter().all(|a| *a == Ade::A(2));
    let k = if cusp.is_starred() && all_a2 { count - 2 } else { count };
    format!("[{}]", vec!["3"; k].join(","))
}
