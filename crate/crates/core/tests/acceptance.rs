//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are never captured.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tourn_core::generators::all_family_specs;
use tourn_core::verification::{duality_closure, lemma_edge_deletion, GENERATED_MAX};
use tourn_core::*;

const CENSUS_N: usize = 9;
const ROUND_TRIPS: usize = 10_000;

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome { ok, note: note.into() }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if let Some(limit) = limit {
        if took > limit {
            o.ok = false;
            o.note = format!("{} (over the {limit:?} limit)", o.note);
        }
    }
    (o, took)
}

fn detail<'a>(r: &'a VerdictReport, name: &str) -> &'a VerdictReport {
    r.details.iter().find(|d| d.theorem == name).expect("lemma report present")
}

fn summary(r: &VerdictReport) -> String {
    let counts: Vec<String> = r.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{} counterexamples={} {}", r.theorem, r.counterexamples.len(), counts.join(" "))
}

fn five_vertex_census() -> Outcome {
    let census = Census::build(5, &EnumOptions::default()).unwrap();
    let found: BTreeSet<CanonicalCode> = census
        .entries(5)
        .iter()
        .filter(|e| e.indecomposable)
        .map(|e| e.canonical.clone())
        .collect();
    let want: BTreeSet<CanonicalCode> = [CriticalKind::T, CriticalKind::U, CriticalKind::W]
        .into_iter()
        .map(|k| canonical_code(&gen_critical(k, 5).unwrap()))
        .collect();
    outcome(found == want, format!("{} indecomposable classes", found.len()))
}

fn latka() -> Outcome {
    let census = Census::build(7, &EnumOptions::default()).unwrap();
    let r6 = census.verify_latka(6).unwrap();
    let r7 = census.verify_latka(7).unwrap();
    let b6: BTreeSet<_> = [canonical_code(&gen_b6())].into();
    let n7: BTreeSet<_> = [
        canonical_code(&gen_paley7()),
        canonical_code(&gen_critical(CriticalKind::T, 7).unwrap()),
        canonical_code(&gen_critical(CriticalKind::U, 7).unwrap()),
    ]
    .into();
    let ok = r6.pass
        && r7.pass
        && r6.classes.iter().cloned().collect::<BTreeSet<_>>() == b6
        && r7.classes.iter().cloned().collect::<BTreeSet<_>>() == n7;
    outcome(ok, format!("n=6: {} classes, n=7: {} classes", r6.classes.len(), r7.classes.len()))
}

fn report(r: VerdictReport) -> Outcome {
    outcome(r.pass, summary(&r))
}

/// Every spec also resolves to the same class under shuffled chain orders.
fn assembler_uniqueness(rng: &mut ChaCha8Rng) -> Outcome {
    let base = tourn_core::verification::assembler_uniqueness(GENERATED_MAX).unwrap();
    let mut variants = 0;
    let mut bad = Vec::new();
    for n in (7..=GENERATED_MAX).step_by(2) {
        for spec in all_family_specs(n) {
            let reference = canonical_code(&assemble_family(&spec).unwrap());
            for _ in 0..4 {
                let orders: Vec<Vec<usize>> = spec
                    .component_sizes
                    .iter()
                    .flat_map(|&m| [m, m])
                    .map(|m| {
                        let mut o: Vec<usize> = (0..m).collect();
                        o.shuffle(rng);
                        o
                    })
                    .collect();
                let shuffled = FamilySpec { chain_orders: Some(orders), ..spec.clone() };
                variants += 1;
                match assemble_family_detailed(&shuffled) {
                    Ok(a) if a.distinct_classes == 1 && canonical_code(&a.tournament) == reference => {}
                    _ => bad.push(shuffled.to_string()),
                }
            }
        }
    }
    outcome(
        base.pass && bad.is_empty(),
        format!("{} chain-order variants, {} disagreements; {}", variants, bad.len(), summary(&base)),
    )
}

fn main_theorem(census: &Census) -> Outcome {
    let r7 = census.verify_main(7).unwrap();
    let r9 = census.verify_main(9).unwrap();
    outcome(r7.pass && r9.pass, format!("{} | {}", summary(&r7), summary(&r9)))
}

fn minimal_pairs_fact(lemmas: &VerdictReport) -> Outcome {
    let d = detail(lemmas, "minimal-for-pair");
    let u5 = gen_critical(CriticalKind::U, 5).unwrap();
    let ok = d.pass && minimal_pairs(&u5) == Ok(vec![(3, 4)]);
    outcome(ok, summary(d))
}

fn c_values(lemmas: &VerdictReport) -> Outcome {
    let d = detail(lemmas, "c-invariant");
    outcome(d.pass, summary(d))
}

fn format_and_determinism(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = 0;
    for n in 0..=13 {
        for _ in 0..ROUND_TRIPS {
            let t = Tournament::from_fn(n, |_, _| rng.gen());
            let rec = to_record(&t);
            if parse_record(&rec).as_ref() != Ok(&t) || to_record(&parse_record(&rec).unwrap()) != rec {
                failures += 1;
            }
        }
    }
    let render = |jobs: usize| -> String {
        let opts = EnumOptions { jobs, force: false };
        enumerate_codes(8, &opts)
            .unwrap()
            .iter()
            .map(|c| c.to_record() + "\n")
            .collect()
    };
    let one = render(1);
    let same = [2, 8].iter().all(|&j| render(j) == one);
    outcome(
        failures == 0 && same,
        format!("{failures} round-trip failures over n=0..13, workers 1/2/8 identical at n=8: {same}"),
    )
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a11);
    let mut results: Vec<(&str, Outcome, Duration)> = Vec::new();
    let mut run = |name: &'static str, limit: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
        let (o, took) = timed(limit, f);
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        println!("{verdict} {name} [{:.2}s] {}", took.as_secs_f64(), o.note);
        results.push((name, o, took));
    };

    run("1 five-vertex-census", Some(Duration::from_secs(1)), &mut five_vertex_census);
    run("2 latka-6-7", Some(Duration::from_secs(10)), &mut latka);

    // Built inside the first criterion that needs it, so its time counts there.
    let census = OnceCell::new();
    let census = || census.get_or_init(|| Census::build(CENSUS_N, &EnumOptions::default()).unwrap());
    run("3 hik-5-9", Some(Duration::from_secs(15 * 60)), &mut || {
        report(census().verify_hik(CENSUS_N).unwrap())
    });
    run("4 main-7-9", None, &mut || main_theorem(census()));
    run("5 assembler-uniqueness", Some(Duration::from_secs(60)), &mut || assembler_uniqueness(&mut rng));
    run("6 sayar-equivalence", None, &mut || report(census().verify_sayar(8).unwrap()));

    let lemmas = OnceCell::new();
    let lemmas = || lemmas.get_or_init(|| census().verify_lemma_suite(CENSUS_N).unwrap());
    run("7 minimal-pairs", None, &mut || minimal_pairs_fact(lemmas()));
    run("8 duality-closure", None, &mut || report(duality_closure(GENERATED_MAX).unwrap()));
    run("9 c-invariant", None, &mut || c_values(lemmas()));
    run("10 edge-deletion", None, &mut || report(lemma_edge_deletion(GENERATED_MAX).unwrap()));
    run("11 format-determinism", None, &mut || format_and_determinism(&mut rng));

    let failed = results.iter().filter(|(_, o, _)| !o.ok).count();
    println!("acceptance: {} passed, {} failed", results.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
