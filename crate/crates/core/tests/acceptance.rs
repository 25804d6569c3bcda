//! Acceptance suite: ten criteria, each exact, each under a wall-clock limit.
//! Runs without the libtest harness so the criteria execute sequentially and
//! their timings are not distorted by each other.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use eislat::cusps::{classify_cusps, family_data, FamilyId};
use eislat::eisenstein::standard::{rho_uu, rho_uu3};
use eislat::eisenstein::{units_equivalent, EisCoeff, HermitianGram, RhoLattice};
use eislat::exactla::IntMatrix;
use eislat::kulikov::{
    build_component, glue_lambda, ksba_table, order4_checks, pairings, primitive_picard, root_split_check, semifan,
    ComponentSpec,
};
use eislat::report::Report;
use eislat::roots::RootSystemType;
use eislat::verify::{self, Suite};

type Outcome = Result<String, String>;

fn t(s: &str) -> RootSystemType {
    s.parse().expect("valid root type")
}

fn fid(n: u8, k: u8) -> FamilyId {
    FamilyId::new(n, k).expect("known family")
}

fn suite_ok(r: &Report) -> Result<usize, String> {
    if r.items.is_empty() {
        return Err(format!("suite {} produced no items", r.suite));
    }
    let bad: Vec<String> = r
        .failures()
        .map(|i| format!("{}: got {} expected {}", i.id, i.computed, i.expected))
        .collect();
    if bad.is_empty() {
        Ok(r.items.len())
    } else {
        Err(bad.join("; "))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Signatures, discriminant orders and 3-elementarity of `T` and `P`.
fn table3() -> Outcome {
    let items = suite_ok(&Suite::Tab3.run())?;
    // (family, rank T, a-invariant of T, rank P)
    let want = [(fid(0, 2), 20, 0, 8), (fid(0, 1), 20, 2, 8), (fid(1, 1), 18, 3, 10), (fid(2, 1), 16, 4, 12)];
    for (id, rank, a, prank) in want {
        let d = family_data(id).map_err(|e| e.to_string())?;
        ensure(d.t.rank() == rank, || format!("T{id} has rank {}", d.t.rank()))?;
        ensure(d.t.signature().ok() == Some((2, rank - 2)), || format!("T{id} signature"))?;
        ensure(d.p.rank() == prank && d.p.is_negative_definite(), || format!("P{id}"))?;
        let (sp, sq) = d.s.signature().map_err(|e| e.to_string())?;
        ensure((sp + 2, sq + rank - 2) == (3, 19), || format!("S{id} ⊕ T{id} is not of K3 signature"))?;
        let three_a = BigInt::from(3).pow(a);
        ensure(d.t.det().magnitude() == three_a.magnitude(), || format!("|A_T{id}| = {}", d.t.det()))?;
        ensure(d.p.det().magnitude() == three_a.magnitude(), || format!("|A_P{id}| = {}", d.p.det()))?;
        ensure(a == 0 || d.t.is_p_elementary(3).unwrap_or(false), || format!("T{id} is not 3-elementary"))?;
    }
    Ok(format!("{items} suite items, 4 families"))
}

fn table4_expected() -> Vec<(FamilyId, Vec<&'static str>)> {
    vec![
        (fid(0, 2), vec!["E8^2"]),
        (fid(0, 1), vec!["E8^2", "E8+E6+A2", "(E6^2+A2^2)*"]),
        (fid(1, 1), vec!["E8+E6", "E6^2+A2", "E8+A2^3", "(E6+A2^4)*"]),
        (fid(2, 1), vec!["E8+A2^2", "E6^2", "E6+A2^3", "A2^6*"]),
    ]
}

fn sorted(v: impl IntoIterator<Item = RootSystemType>) -> Vec<RootSystemType> {
    let mut v: Vec<_> = v.into_iter().collect();
    v.sort();
    v
}

fn table4() -> Outcome {
    suite_ok(&Suite::Tab4.run())?;
    let mut total = 0;
    let mut starred = Vec::new();
    for (id, want) in table4_expected() {
        let got = classify_cusps(id).map_err(|e| e.to_string())?;
        let types = sorted(got.iter().map(|c| c.jperp_root.clone()));
        let want = sorted(want.iter().map(|s| t(s)));
        ensure(types == want, || format!("{id}: {types:?}"))?;
        ensure(got.iter().all(|c| !c.witnesses.is_empty()), || format!("{id}: cusp without witness"))?;
        total += types.len();
        starred.extend(types.into_iter().filter(RootSystemType::is_starred));
    }
    let want_star = sorted(["(E6^2+A2^2)*", "(E6+A2^4)*", "A2^6*"].map(t));
    ensure(total == 12, || format!("{total} records"))?;
    ensure(sorted(starred.clone()) == want_star, || format!("starred: {starred:?}"))?;
    Ok("12 records, 3 starred".into())
}

fn explicit() -> Outcome {
    let r = Suite::Expl.run();
    let items = suite_ok(&r)?;
    let columns = r.items.iter().filter(|i| i.id.contains("/column-") && !i.id.ends_with("/quotient")).count();
    // 2 + 1, 3 + 2 and 4 + 4 columns for E8^3 and E6^4 in the three families.
    ensure(columns == 16, || format!("{columns} explicit columns checked"))?;
    Ok(format!("{columns} columns, {items} items"))
}

/// Bourbaki Cartan matrices, written out here so the oracle does not share
/// code with the library.
fn cartan_e(n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
    edges.extend([(6, 7), (7, 8)].into_iter().filter(|&(_, b)| b <= n));
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        g[a - 1][b - 1] = -1;
        g[b - 1][a - 1] = -1;
    }
    g
}

fn pair(g: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    (0..g.len()).map(|i| (0..g.len()).map(|j| x[i] * g[i][j] * y[j]).sum::<i64>()).sum()
}

/// `(rank, root count)` per connected component of the roots orthogonal to
/// the given simple roots (1-based Bourbaki labels).
fn complement_shape(g: &[Vec<i64>], all: &BTreeSet<Vec<i64>>, simple: &[usize]) -> Vec<(usize, usize)> {
    let n = g.len();
    let unit = |k: usize| -> Vec<i64> { (0..n).map(|i| i64::from(i + 1 == k)).collect() };
    let sub: Vec<Vec<i64>> = simple.iter().map(|&k| unit(k)).collect();
    let roots: Vec<Vec<i64>> = all
        .iter()
        .filter(|r| sub.iter().all(|s| pair(g, r, s) == 0))
        .cloned()
        .collect();
    let mut comp = vec![usize::MAX; roots.len()];
    let mut shapes = Vec::new();
    for start in 0..roots.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = shapes.len();
        let mut stack = vec![start];
        comp[start] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(roots[i].clone());
            for j in 0..roots.len() {
                if comp[j] == usize::MAX && pair(g, &roots[i], &roots[j]) != 0 {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        let rank = IntMatrix::from_rows(&members).rank();
        shapes.push((rank, members.len()));
    }
    shapes.sort();
    shapes
}

fn complements() -> Outcome {
    let items = suite_ok(&verify::complements())?;
    ensure(items == 5, || format!("{items} identities"))?;
    let (e6, e8) = (cartan_e(6), cartan_e(8));
    let (r6, r8) = (common::box_roots(&e6), common::box_roots(&e8));
    ensure(r6.len() == 72 && r8.len() == 240, || "root counts".into())?;
    let a2 = (2, 6);
    let cases: [(&str, &[Vec<i64>], &BTreeSet<Vec<i64>>, &[usize], Vec<(usize, usize)>); 5] = [
        ("A2 in E8", &e8, &r8, &[1, 3], vec![(6, 72)]),
        ("E6 in E8", &e8, &r8, &[1, 2, 3, 4, 5, 6], vec![a2]),
        ("A2 in E6", &e6, &r6, &[1, 3], vec![a2, a2]),
        ("A2^2 in E6", &e6, &r6, &[1, 3, 5, 6], vec![a2]),
        ("A2^2 in E8", &e8, &r8, &[1, 3, 5, 6], vec![a2, a2]),
    ];
    for (name, g, all, simple, want) in cases {
        let got = complement_shape(g, all, simple);
        ensure(got == want, || format!("{name}: {got:?}"))?;
    }
    Ok("5 identities, brute-force oracle agrees".into())
}

fn eisenstein() -> Outcome {
    let items = suite_ok(&Suite::Eis.run())?;
    let theta = EisCoeff::new(1, 2);
    let uu = HermitianGram(vec![vec![EisCoeff::zero(), theta.clone()], vec![theta.conj(), EisCoeff::zero()]]);
    let uu3 = HermitianGram::from_pairs(&[&[(0, 0), (3, 0)], &[(3, 0), (0, 0)]]);
    for (name, r, want) in [("U+U", rho_uu(), uu), ("U+U(3)", rho_uu3(), uu3)] {
        check_order3(name, &r)?;
        ensure(r.estar_checked().unwrap_or(false), || format!("{name} is not E*"))?;
        let g = r.eisenstein_gram().map_err(|e| e.to_string())?;
        ensure(units_equivalent(&g.gram, &want), || format!("{name} Hermitian Gram {}", g.gram))?;
    }
    let u3u3 = rho_uu().rescale(&BigInt::from(3)).map_err(|e| e.to_string())?;
    ensure(!u3u3.estar_checked().unwrap_or(true), || "U(3)+U(3) passes E*".into())?;
    Ok(format!("{items} suite items"))
}

fn check_order3(name: &str, r: &RhoLattice) -> Result<(), String> {
    let g = r.lattice.gram();
    ensure(&r.rho.mul(g).mul(&r.rho.transpose()) == g, || format!("{name}: not an isometry"))?;
    ensure(r.rho.pow(3) == IntMatrix::identity(r.rank()), || format!("{name}: ρ³ ≠ 1"))?;
    ensure(r.is_fixed_point_free(), || format!("{name}: has fixed vectors"))
}

fn order4() -> Outcome {
    let items = suite_ok(&Suite::Order4.run())?;
    let c = order4_checks().map_err(|e| e.to_string())?;
    ensure(c.rho_order == 4 && c.rho_squared_is_minus_one, || "ρ is not of order 4 with ρ² = −1".into())?;
    ensure(c.j_isotropic && c.j_saturated && c.j_invariant, || "J fails".into())?;
    ensure(c.quotient_type == t("D4^2+A1^2"), || format!("quotient {}", c.quotient_type))?;
    ensure(c.m_gram == IntMatrix::from_rows(&[[2, 0], [0, 2]]).neg(), || format!("M Gram {:?}", c.m_gram))?;
    ensure(c.m_invariant && c.m_rho_squared_is_minus_one && c.m_saturated, || "M fails".into())?;
    ensure(c.summand_is_direct, || "A1^2 is not a direct summand".into())?;
    let s = &c.semifan;
    ensure(s.rank == 2 && s.primitive && s.rho_invariant, || format!("semifan {s:?}"))?;
    Ok(format!("{items} suite items"))
}

fn tschirnhausen() -> Outcome {
    let items = suite_ok(&Suite::Tschirnhausen.run())?;
    let want = ["E6+A2", "E8", "A2^3", "E6", "A2^2", "A2"];
    for (spec, w) in ComponentSpec::rows().iter().zip(want) {
        let c = build_component(spec).map_err(|e| e.to_string())?;
        ensure(c.picard().rank() == 10 && c.picard().signature().ok() == Some((1, 9)), || format!("{spec}"))?;
        let (_, ty) = primitive_picard(&c).map_err(|e| e.to_string())?;
        ensure(ty == t(w), || format!("{spec}: {ty}"))?;
    }
    Ok(format!("6 rows, {items} suite items"))
}

fn glue() -> Outcome {
    let items = suite_ok(&Suite::Glue.run())?;
    let rows: Vec<_> = ComponentSpec::rows()
        .iter()
        .map(build_component)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut count = 0;
    for (id, want) in table4_expected() {
        let mut types = BTreeSet::new();
        for (i, j, _) in pairings(id) {
            let (a, b) = (&rows[i - 1], &rows[j - 1]);
            let k = glue_lambda(a, b).map_err(|e| e.to_string())?;
            let l = k.lambda();
            ensure(l.rank() == 18 && l.is_even() && l.is_unimodular(), || format!("{id} ({i},{j}): Λ"))?;
            ensure(l.signature().ok() == Some((1, 17)), || format!("{id} ({i},{j}): signature"))?;
            let split = root_split_check(&k, a, b).map_err(|e| e.to_string())?;
            ensure(split.holds, || format!("{id} ({i},{j}): root split fails"))?;
            let (ty, _) = k.prim_root_type().map_err(|e| e.to_string())?;
            types.insert(ty);
            count += 1;
        }
        let want: BTreeSet<_> = want.iter().map(|s| t(s)).collect();
        ensure(types == want, || format!("{id}: {types:?}"))?;
    }
    Ok(format!("{count} pairings, {items} suite items"))
}

fn semifans() -> Outcome {
    let items = suite_ok(&Suite::Semifan.run())?;
    // Rank of 𝔉_J from the number of parenthesized A2 factors.
    let want = [
        (fid(0, 2), "E8^2", 0),
        (fid(0, 1), "(E6^2+A2^2)*", 4),
        (fid(0, 1), "E8+E6+A2", 2),
        (fid(0, 1), "E8^2", 0),
        (fid(1, 1), "(E6+A2^4)*", 8),
        (fid(1, 1), "E8+A2^3", 6),
        (fid(1, 1), "E6^2+A2", 2),
        (fid(1, 1), "E8+E6", 0),
        (fid(2, 1), "A2^6*", 12),
        (fid(2, 1), "E6+A2^3", 6),
        (fid(2, 1), "E6^2", 0),
        (fid(2, 1), "E8+A2^2", 4),
    ];
    ensure(ksba_table().len() == want.len(), || "table size".into())?;
    for (id, cusp, rank) in want {
        let s = semifan(id, &t(cusp)).map_err(|e| e.to_string())?;
        ensure(s.rank == rank && s.primitive && s.rho_invariant, || format!("{id} {cusp}: {s:?}"))?;
    }
    Ok(format!("12 cusps + order 4, {items} suite items"))
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..200 {
        common::normal_form_case(&mut rng)?;
    }
    for _ in 0..200 {
        common::saturation_case(&mut rng)?;
    }
    let lattices = common::standard_root_lattices();
    for &a in &lattices {
        common::enumeration_agrees(a)?;
    }
    let ambient = common::u2_e8_squared();
    for _ in 0..50 {
        common::isotropic_quotient_case(&mut rng, &ambient)?;
    }
    Ok(format!("200 HNF/SNF, 200 saturation, {} root lattices, 50 planes", lattices.len()))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("transcendental lattices", 1, table3),
        ("cusp classification", 60, table4),
        ("explicit embedding tables", 60, explicit),
        ("complement identities", 5, complements),
        ("Eisenstein structures", 1, eisenstein),
        ("order-4 family", 5, order4),
        ("Tschirnhausen components", 10, tschirnhausen),
        ("Kulikov gluing", 30, glue),
        ("semifans", 10, semifans),
        ("property suites", 60, properties),
    ];
    let mut failed = 0;
    for (n, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (status, detail) = match outcome {
            Ok(d) if took <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over time limit")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status}  {:>2}. {name:<28} {:>7.3}s / {:>2}s  {detail}",
            n + 1,
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
