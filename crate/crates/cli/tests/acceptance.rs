//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use desc_regions::analysis;
use desc_regions::certify::{self, CertifyConfig, Node, Outcome};
use desc_regions::criteria::{self, SimplexMode, SimplexSpec, SimplexWitness};
use desc_regions::fixtures;
use desc_regions::lp::{self, LinearSystem};
use desc_regions::oracle::{self, GridSpec};
use desc_regions::polytope::{Halfspace, Polytope, DEFAULT_FACET_BUDGET};
use desc_regions::rational::{int, ratio, Rational};
use desc_regions::{ExponentVector, Signomial, Term};
use desc_regions_testkit::{exhaustive_facets, fm_feasible, primitive, RefFacet};

// pinned parameters
const SEED: u64 = 0x5eed_2024;
const HALF_WIDTH: f64 = 8.0;
const RES_1D: usize = 100_000;
const RES_2D: usize = 400;
const RANDOM_RES_LOW_DIM: usize = 200;
const RANDOM_RES_3D: usize = 60;
const RANDOM_SIGNOMIALS: usize = 200;
const RANDOM_LPS: usize = 500;
const RANDOM_HULLS: usize = 100;
const REL_TOL: f64 = desc_regions::signomial::DEFAULT_REL_TOL;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_desc-regions"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn grid(n: usize, res_2d: usize, res_1d: usize) -> GridSpec {
    let mut g = GridSpec::cube(n, -HALF_WIDTH, HALF_WIDTH, if n == 1 { res_1d } else { res_2d });
    g.rel_tol = REL_TOL;
    g
}

fn components(f: &Signomial, g: &GridSpec) -> usize {
    oracle::count_negative_components(f, g).expect("grid within budget").component_count
}

fn oracle_counts() -> Verdict {
    let cases: [(&str, Signomial, usize); 7] = [
        ("eq2", fixtures::eq2(), 3),
        ("eq3", fixtures::eq3(), 1),
        ("eq4", fixtures::eq4(), 2),
        ("ex_simplex_g", fixtures::ex_simplex_g(), 2),
        ("ex_box", fixtures::ex_box(), 1),
        ("new_para_faces", fixtures::new_para_faces(), 1),
        ("two_comp_quadratic", fixtures::two_comp_quadratic(), 2),
    ];
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (name, f, expected) in cases {
        let n = f.dimension();
        let base = components(&f, &grid(n, RES_2D, RES_1D));
        let doubled = components(&f, &grid(n, 2 * RES_2D, 2 * RES_1D));
        seen.push(format!("{name}={base}/{doubled}"));
        if base != expected || doubled != expected {
            bad.push(format!("{name}: expected {expected}, got {base} and {doubled} after doubling"));
        }
    }
    if bad.is_empty() {
        verdict(true, seen.join(" "))
    } else {
        verdict(false, bad.join("; "))
    }
}

fn certification_fixtures() -> Verdict {
    let default = CertifyConfig::default();
    let mut bad = Vec::new();

    let cube = certify::certify_connectivity(&fixtures::ex_cube(), &default);
    let edge_ok = match &cube.node {
        Node::ParallelSplit { beta1, beta2, .. } => {
            let mut e = [beta1.clone(), beta2.clone()];
            e.sort();
            e == [ExponentVector::from_ints(&[0, 0, 0]), ExponentVector::from_ints(&[0, 0, 1])]
        }
        _ => false,
    };
    if cube.outcome != Outcome::CertifiedExactlyOne || !edge_ok {
        bad.push(format!("ex_cube: {:?} via {}", cube.outcome, cube.kind()));
    }

    let c4 = certify::certify_connectivity(&fixtures::ex_cube4d(), &default);
    let shape_ok = c4.kind() == "NegativeFaceReduction"
        && c4.children().len() == 1
        && c4.children()[0].kind() == "ParallelSplit"
        && c4.children()[0].children().iter().map(|c| c.kind()).collect::<Vec<_>>()
            == ["StrictSeparating", "StrictSeparating"];
    if c4.outcome != Outcome::CertifiedExactlyOne || !shape_ok {
        bad.push(format!("ex_cube4d: {:?}, shape ok = {shape_ok}", c4.outcome));
    }

    let running = fixtures::ex_running();
    let r = certify::certify_connectivity(&running, &default);
    let r_count = components(&running, &grid(2, RES_2D, RES_1D));
    let consistent = match r.outcome {
        Outcome::CertifiedExactlyOne => r_count == 1,
        Outcome::Inconclusive => matches!(&r.node, Node::Inconclusive { reason, .. } if !reason.is_empty()),
        _ => false,
    };
    if !consistent || r_count != 1 {
        bad.push(format!("ex_running: {:?} with oracle count {r_count}", r.outcome));
    }

    let nq = certify::certify_connectivity(&fixtures::neg_quadratic(), &default);
    if nq.outcome != Outcome::Inconclusive {
        bad.push(format!("neg_quadratic: {:?}", nq.outcome));
    }

    let with_simplex = CertifyConfig {
        simplex: Some(SimplexSpec {
            vertices: vec![
                ExponentVector::from_ints(&[1, 1]),
                ExponentVector::from_ints(&[4, 2]),
                ExponentVector::from_ints(&[1, 3]),
            ],
            mode: None,
        }),
        ..CertifyConfig::default()
    };
    let sf = certify::certify_connectivity(&fixtures::ex_simplex_f(), &with_simplex);
    if sf.outcome != Outcome::CertifiedExactlyOne {
        bad.push(format!("ex_simplex f: {:?}", sf.outcome));
    }

    let everything = CertifyConfig {
        enable_simplex_search: true,
        enable_enclosing_search: true,
        enable_box: true,
        ..with_simplex
    };
    let sg = certify::certify_connectivity(&fixtures::ex_simplex_g(), &everything);
    if sg.outcome.is_certified() {
        bad.push(format!("ex_simplex g certified as {:?}", sg.outcome));
    }

    if bad.is_empty() {
        verdict(
            true,
            format!("cube split on edge (0,0,0)-(0,0,1); cube4d reduction/split/2 leaves; running {:?}; simplex f certified, g not", r.outcome),
        )
    } else {
        verdict(false, bad.join("; "))
    }
}

fn trace_reverification(dir: &Path) -> Verdict {
    let flag_sets: [&[&str]; 3] = [
        &[],
        &["--enable-box", "--enable-simplex-search", "--enable-enclosing-search"],
        &["--max-depth", "2"],
    ];
    let mut total = 0;
    let mut bad = Vec::new();
    for (name, _) in fixtures::ALL {
        for (k, flags) in flag_sets.iter().enumerate() {
            let path = fixture_path(name);
            let mut args = vec!["certify", path.to_str().unwrap()];
            args.extend_from_slice(flags);
            let out = cli(&args);
            if !matches!(out.status.code(), Some(0) | Some(2)) {
                bad.push(format!("{name} #{k}: certify exited {:?}", out.status.code()));
                continue;
            }
            let trace = dir.join(format!("{name}.{k}.json"));
            std::fs::write(&trace, &out.stdout).unwrap();
            total += 1;
            let check = cli(&["certify", "--verify-trace", trace.to_str().unwrap()]);
            if check.status.code() != Some(0) {
                bad.push(format!("{name} #{k}: {}", String::from_utf8_lossy(&check.stderr).trim()));
            }
        }
    }
    let simplex_trace = dir.join("simplex_f.json");
    let path = fixture_path("ex_simplex_f.poly");
    let out = cli(&["certify", path.to_str().unwrap(), "--simplex", "1,1;4,2;1,3", "--simplex-mode", "pos"]);
    std::fs::write(&simplex_trace, &out.stdout).unwrap();
    total += 1;
    if cli(&["certify", "--verify-trace", simplex_trace.to_str().unwrap()]).status.code() != Some(0) {
        bad.push("simplex f trace".into());
    }
    verdict(bad.is_empty(), format!("{}/{total} traces verified {}", total - bad.len(), bad.join("; ")))
}

fn random_signomial(rng: &mut ChaCha8Rng) -> Signomial {
    let n = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=8);
    let terms = (0..k).map(|_| {
        let q = rng.gen_range(1..=4i64);
        let mut p = 0;
        while p == 0 {
            p = rng.gen_range(-10 * q..=10 * q);
        }
        Term {
            coefficient: ratio(p, q),
            exponent: ExponentVector::from_ints(&(0..n).map(|_| rng.gen_range(0..=5)).collect::<Vec<i64>>()),
        }
    });
    Signomial::new(n, terms).unwrap()
}

fn soundness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let config = CertifyConfig {
        enable_simplex_search: true,
        enable_box: true,
        ..CertifyConfig::default()
    };
    let mut certified = 0;
    let mut violations = Vec::new();
    for i in 0..RANDOM_SIGNOMIALS {
        let f = random_signomial(&mut rng);
        let cert = certify::certify_connectivity(&f, &config);
        if !cert.outcome.is_certified() {
            continue;
        }
        certified += 1;
        let n = f.dimension();
        let res = if n <= 2 { RANDOM_RES_LOW_DIM } else { RANDOM_RES_3D };
        let count = components(&f, &grid(n, res, res));
        let bad = count > 1 || (cert.outcome == Outcome::CertifiedExactlyOne && count == 0);
        if bad {
            violations.push(format!("#{i} {f}: {:?} but oracle {count}", cert.outcome));
        }
    }
    verdict(
        violations.is_empty(),
        format!(
            "{certified}/{RANDOM_SIGNOMIALS} certified, {} violations {}",
            violations.len(),
            violations.join("; ")
        ),
    )
}

fn lp_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut disagreements = 0;
    let mut feasible = 0;
    for _ in 0..RANDOM_LPS {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=8);
        let mut s = LinearSystem::new(n);
        for _ in 0..m {
            let c: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-4..=4))).collect();
            let r = int(rng.gen_range(-4..=4));
            if rng.gen_bool(0.2) {
                s.equality(c, r);
            } else {
                s.ge(c, r);
            }
        }
        let v = lp::feasible(&s);
        if v.is_feasible() {
            feasible += 1;
        }
        let witness_ok = v.clone().witness().map_or(true, |w| s.is_satisfied_by(&w));
        if v.is_feasible() != fm_feasible(&s) || !witness_ok {
            disagreements += 1;
        }
    }
    verdict(
        disagreements == 0,
        format!("{}/{RANDOM_LPS} agree ({feasible} feasible)", RANDOM_LPS - disagreements),
    )
}

fn normalised(p: &Polytope) -> Vec<RefFacet> {
    let mut out: Vec<RefFacet> = p
        .facets()
        .iter()
        .map(|f| {
            let normal = primitive(&f.halfspace.normal);
            let offset = p.point(f.incident[0]).dot(&normal);
            RefFacet {
                normal,
                offset,
                incident: f.incident.clone(),
            }
        })
        .collect();
    out.sort();
    out
}

fn hull_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut mismatches = 0;
    for _ in 0..RANDOM_HULLS {
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=8);
        let mut pts: Vec<ExponentVector> = Vec::new();
        while pts.len() < k {
            let p = ExponentVector::from_ints(&(0..n).map(|_| rng.gen_range(0..=4)).collect::<Vec<i64>>());
            if !pts.contains(&p) {
                pts.push(p);
            }
            if pts.len() as u32 >= 5u32.pow(n as u32) {
                break;
            }
        }
        let p = Polytope::new(pts.clone()).unwrap();
        if normalised(&p) != exhaustive_facets(&pts) {
            mismatches += 1;
        }
    }
    let cube = Polytope::new(fixtures::ex_cube().support()).unwrap();
    let cube_ok = cube.facets().len() == 6 && cube.vertices().len() == 8;
    verdict(
        mismatches == 0 && cube_ok,
        format!(
            "{}/{RANDOM_HULLS} facet lists equal; cube has {} facets, {} vertices",
            RANDOM_HULLS - mismatches,
            cube.facets().len(),
            cube.vertices().len()
        ),
    )
}

fn worked_example_witnesses() -> Verdict {
    let e1 = [int(1), int(0)];
    let sep = criteria::verify_separating_hyperplane(&fixtures::eq3(), &e1, &int(2), false);
    let enc = criteria::verify_enclosing_pair(&fixtures::eq2(), &e1, &int(2), &int(0), false);
    let boxed = criteria::verify_enclosing_pair(&fixtures::ex_box(), &e1, &ratio(7, 2), &ratio(1, 2), true);
    let hs = |v: [Rational; 2], a: i64| Halfspace {
        normal: v.to_vec(),
        offset: int(a),
    };
    let witness = SimplexWitness {
        vertices: vec![
            ExponentVector::from_ints(&[1, 1]),
            ExponentVector::from_ints(&[4, 2]),
            ExponentVector::from_ints(&[1, 3]),
        ],
        h_rep: vec![
            hs([int(-1), int(0)], -1),
            hs([ratio(1, 2), ratio(3, 2)], 5),
            hs([ratio(1, 2), ratio(-3, 2)], -1),
        ],
        mode: SimplexMode::PositivesInside,
        interior_negative: None,
    };
    let simplex = criteria::verify_simplex_witness(&fixtures::ex_simplex_f(), &witness).unwrap_or(false);
    let all = [sep, enc, boxed, simplex];
    let ok = all.iter().filter(|b| **b).count();
    verdict(
        ok == all.len(),
        format!("{ok}/4 accepted (separating {sep}, enclosing {enc}, strict enclosing {boxed}, simplex {simplex})"),
    )
}

/// 16 variables: positive terms at 0 and 2eᵢ, negative terms at e₁ and e₂.
fn synthetic_poly() -> String {
    let mut s = String::from("1");
    for i in 1..=16 {
        s.push_str(&format!(" + x{i}^2"));
    }
    s.push_str(" - x1 - x2");
    s
}

fn synthetic_analysis(dir: &Path) -> Verdict {
    let path = dir.join("synthetic16.poly");
    std::fs::write(&path, synthetic_poly()).unwrap();
    let out = cli(&["analyze", path.to_str().unwrap()]);
    let report: analysis::AnalysisReport = match serde_json::from_slice(&out.stdout) {
        Ok(r) => r,
        Err(e) => return verdict(false, format!("analyze output unreadable: {e}")),
    };
    let face_proper = report.smallest_negative_face.as_ref().is_some_and(|f| f.proper);
    let via_face = matches!(report.closure_reason, Some(criteria::ClosureReason::ProperNegativeFace { .. }));
    let ok = out.status.code() == Some(0)
        && report.variables == 16
        && !report.partial
        && report.facet_count.is_some_and(|c| c <= DEFAULT_FACET_BUDGET)
        && report.closure_property == Some(true)
        && face_proper
        && via_face;
    verdict(
        ok,
        format!(
            "n={}, dim={:?}, {:?} facets, {:?} vertices, proper negative face {face_proper}, closure {:?} via proper face {via_face}",
            report.variables, report.newton_dimension, report.facet_count, report.vertex_count, report.closure_property
        ),
    )
}

fn main() {
    // cargo passes harness flags such as --nocapture; none apply here
    let dir = tempfile::tempdir().expect("temp dir");
    println!(
        "acceptance: seed {SEED:#x}, box [-{HALF_WIDTH},{HALF_WIDTH}]^n, oracle rel_tol {REL_TOL:e}, resolutions 1-D {RES_1D} / 2-D {RES_2D} (doubled for stability), random {RANDOM_RES_LOW_DIM} (n<=2) / {RANDOM_RES_3D} (n=3)"
    );
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict + '_>)> = vec![
        ("oracle counts match worked examples", Box::new(oracle_counts)),
        ("certification of fixtures", Box::new(certification_fixtures)),
        ("trace re-verification", Box::new(|| trace_reverification(dir.path()))),
        ("soundness on random signomials", Box::new(soundness)),
        ("simplex LP equals Fourier-Motzkin", Box::new(lp_equivalence)),
        ("hull equals exhaustive enumeration", Box::new(hull_equivalence)),
        ("worked-example witnesses verify", Box::new(worked_example_witnesses)),
        ("16-variable analysis with closure", Box::new(|| synthetic_analysis(dir.path()))),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        if !v.pass {
            failures += 1;
        }
        println!(
            "criterion {} {} {name} ({:.1}s): {}",
            k + 1,
            if v.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            v.detail.trim_end()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
