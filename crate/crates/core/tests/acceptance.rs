//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use pargraph::cellres::resolution_report;
use pargraph::corpus::{check_abelianity, check_groebner, check_parking, check_resolution, corpus, instance_rng};
use pargraph::graph::{parse_multigraph, parse_pargraph, spanning_tree_count, Pargraph};
use pargraph::ideals::{groebner_basis, Monomial};
use pargraph::linalg::{det_fraction_free, invariant_factors_by_minors, smith_normal_form, IntMatrix};

const SEED: u64 = 20_240_601;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

fn cli(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pargraph")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout)));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(
    instances: &[Pargraph],
    mut check: impl FnMut(usize, &Pargraph) -> Result<(), String>,
) -> Result<String, String> {
    let mut failures = 0;
    let mut first = None;
    for (i, pg) in instances.iter().enumerate() {
        if let Err(e) = check(i, pg) {
            failures += 1;
            first.get_or_insert_with(|| format!("instance {i}: {e}\n{}", pargraph::graph::to_document(pg)));
        }
    }
    match first {
        None => Ok(format!("{} instances", instances.len())),
        Some(f) => Err(format!("{failures} failures; first: {f}")),
    }
}

fn seven_vertex() -> Result<String, String> {
    let start = Instant::now();
    let g = parse_pargraph(&read_fixture("seven_split.pg")).map_err(|e| e.to_string())?;
    let alt = parse_multigraph(&read_fixture("seven_alt.pg")).map_err(|e| e.to_string())?;
    let t = spanning_tree_count(g.graph());
    let t_alt = spanning_tree_count(&alt);
    ensure(t == BigInt::from(21) && t_alt == BigInt::from(5) && t.gcd(&t_alt) == BigInt::from(1), || {
        format!("tree counts {t} and {t_alt}")
    })?;

    let pi1 = fixture("seven_split.pg");
    let pi2 = fixture("seven_merged.pg");
    let alt_path = fixture("seven_alt.pg");
    let trees = cli(&["trees", pi1.to_str().unwrap()])?;
    ensure(trees == serde_json::json!({ "spanning_trees": "21" }), || format!("trees printed {trees}"))?;

    let p1 = cli(&["picard", pi1.to_str().unwrap(), "--alt", alt_path.to_str().unwrap()])?;
    ensure(p1["free_rank"] == 2 && p1["torsion"] == serde_json::json!([]), || format!("split partition picard {p1}"))?;
    let kinds = |v: &Value| -> Vec<String> {
        v["certificates"].as_array().unwrap().iter().map(|c| c["kind"].as_str().unwrap().to_string()).collect()
    };
    let coprime = p1["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["kind"] == "coprime_trees")
        .ok_or_else(|| format!("split partition certificates {:?}", kinds(&p1)))?;
    ensure(coprime["trees"] == "21" && coprime["alt_trees"] == "5" && coprime["gcd"] == "1", || {
        format!("coprime certificate {coprime}")
    })?;
    ensure(!kinds(&p1).contains(&"forest".to_string()), || "split partition should have no forest certificate".into())?;
    let searched = cli(&["picard", pi1.to_str().unwrap(), "--search-alt"])?;
    ensure(kinds(&searched).contains(&"coprime_trees".to_string()), || "search found no alternative".into())?;

    let p2 = cli(&["picard", pi2.to_str().unwrap()])?;
    ensure(p2["torsion"] == serde_json::json!([]), || format!("merged partition picard {p2}"))?;
    ensure(kinds(&p2).contains(&"forest".to_string()), || format!("merged partition certificates {:?}", kinds(&p2)))?;

    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("21 and 5 trees, both certificates, {elapsed:.2?}"))
}

fn groebner_sweep(instances: &[Pargraph]) -> Result<String, String> {
    let start = Instant::now();
    let r = sweep(instances, |_, pg| {
        check_groebner(pg)?;
        // the lead of every basis element lives on its parset's side
        for g in groebner_basis(pg) {
            if g.lead.support() & !g.source_parset.vertices != 0 || g.tail.support() & g.source_parset.vertices != 0 {
                return Err(format!("{} - {} straddles its parset", g.lead, g.tail));
            }
        }
        Ok(())
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{r}, {elapsed:.1?}"))
}

fn abelianity(instances: &[Pargraph]) -> Result<String, String> {
    sweep(instances, |i, pg| check_abelianity(pg, &mut instance_rng(SEED, i), 50, 3))
        .map(|r| format!("{r} x 50 divisors"))
}

fn minimality(instances: &[Pargraph]) -> Result<String, String> {
    sweep(instances, |_, pg| check_parking(pg))
}

fn resolution(instances: &[Pargraph]) -> Result<String, String> {
    let with_two_blocks = instances.iter().filter(|pg| pg.k() >= 2).count();
    sweep(instances, |_, pg| check_resolution(pg, 5)).map(|r| format!("{r} ({with_two_blocks} with k >= 2)"))
}

fn fixtures(instances: &[Pargraph]) -> Result<String, String> {
    let tri = parse_pargraph(&read_fixture("triangle.pg")).map_err(|e| e.to_string())?;
    let betti = resolution_report(&tri).map_err(|e| e.to_string())?.betti;
    ensure(betti == vec![1, 3, 2], || format!("triangle Betti numbers {betti:?}"))?;

    let sq = parse_pargraph(&read_fixture("square_merged.pg")).map_err(|e| e.to_string())?;
    let mut got: Vec<(Monomial, Monomial)> = groebner_basis(&sq).into_iter().map(|g| (g.lead, g.tail)).collect();
    got.sort();
    let m = |e: [u32; 4]| Monomial(e.to_vec());
    let mut want = vec![
        (m([2, 0, 0, 0]), m([0, 1, 0, 1])),
        (m([0, 2, 0, 0]), m([1, 0, 1, 0])),
        (m([1, 1, 0, 0]), m([0, 0, 1, 1])),
    ];
    want.sort();
    ensure(got == want, || format!("square basis {got:?}"))?;

    let trees: Vec<&Pargraph> =
        instances.iter().filter(|pg| pg.graph().edge_count() + 1 == pg.n() as u64).collect();
    for pg in &trees {
        if let Some(g) = groebner_basis(pg).iter().find(|g| g.lead.degree() != 1) {
            return Err(format!("tree basis element {} - {}", g.lead, g.tail));
        }
    }
    Ok(format!("triangle, square, {} tree pargraphs", trees.len()))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let rows = rng.random_range(1..=4);
    let cols = rng.random_range(1..=4);
    // sparse-ish small entries exercise zero pivots and rank deficiency
    IntMatrix::from_fn(rows, cols, |_, _| {
        if rng.random_bool(0.3) {
            BigInt::from(0)
        } else {
            BigInt::from(rng.random_range(-9..=9))
        }
    })
}

fn cofactor_det(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    if n == 0 {
        return BigInt::from(1);
    }
    (0..n)
        .map(|j| {
            let rest: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = a.submatrix(&(1..n).collect::<Vec<_>>(), &rest);
            let term = &a[(0, j)] * cofactor_det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn kernel() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut squares = 0;
    for t in 0..500 {
        let a = random_matrix(&mut rng);
        let snf = smith_normal_form(&a);
        ensure(snf.verify(&a), || format!("matrix {t}: witnesses fail\n{a}"))?;
        let minors = invariant_factors_by_minors(&a, u128::MAX).map_err(|e| e.to_string())?;
        ensure(snf.factors == minors, || format!("matrix {t}: {:?} vs minors {:?}\n{a}", snf.factors, minors))?;
        if a.is_square() {
            squares += 1;
            let d = det_fraction_free(&a).map_err(|e| e.to_string())?;
            let c = cofactor_det(&a);
            ensure(d == c, || format!("matrix {t}: det {d} vs cofactor {c}\n{a}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("500 matrices ({squares} square), {elapsed:.2?}"))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<String, String> + 'a>);

fn main() {
    let instances = corpus(6);
    let criteria: Vec<Criterion> = vec![
        ("1 seven-vertex example", Box::new(seven_vertex)),
        ("2 groebner soundness sweep", Box::new(|| groebner_sweep(&instances))),
        ("3 reduced-divisor abelianity", Box::new(|| abelianity(&instances))),
        ("4 minimality and vertex bijection", Box::new(|| minimality(&instances))),
        ("5 resolution structure", Box::new(|| resolution(&instances))),
        ("6 fixture checks", Box::new(|| fixtures(&instances))),
        ("7 kernel property suite", Box::new(kernel)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
