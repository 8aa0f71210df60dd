//! Acceptance suite: each criterion runs at tolerance zero and prints one
//! PASS/FAIL line. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use sylowpi::arith::{self, PrimeSet};
use sylowpi::catalog::Sporadic;
use sylowpi::criterion::{self, condition_ii_pairs};
use sylowpi::permbrute::{self, Lattice, RealizationSpec, LATTICE_BOUND};
use sylowpi::tables;

const SIMPLE_CORPUS: [&str; 8] =
    ["Alt:5", "Alt:6", "Lie:A:2:4", "Lie:A:2:5", "Lie:A:2:7", "Lie:A:2:8", "Lie:A:2:9", "Lie:A:2:11"];
const SMALL_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

struct Outcome {
    passed: bool,
    summary: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(passed: bool, summary: String) -> Outcome {
    Outcome { passed, summary }
}

fn with_lattice<T>(spec: &str, f: impl FnOnce(&Lattice) -> T) -> T {
    let spec: RealizationSpec = spec.parse().expect("corpus spec parses");
    let g = permbrute::realize_with_table(&spec, LATTICE_BOUND).expect("corpus group realizes");
    let l = Lattice::build(&g).expect("corpus lattice builds");
    f(&l)
}

/// Ordered pairs `(σ, τ)` with `σ ∪ τ = π`, `σ ∩ τ = ∅`, empty parts allowed.
fn partitions(pi: &PrimeSet) -> Vec<(PrimeSet, PrimeSet)> {
    pi.subsets().map(|s| (s.clone(), pi.difference(&s))).collect()
}

fn criterion_agreement() -> Outcome {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for spec in SIMPLE_CORPUS {
        let id = spec.parse::<RealizationSpec>().unwrap().simple_id().unwrap();
        with_lattice(spec, |l| {
            for pi in l.group().spectrum().subsets() {
                pairs += 1;
                let report = permbrute::maximal_pi_subgroups(l, &pi);
                let verdict = criterion::decide_dpi_simple(&id, &pi).unwrap();
                if report.dpi != verdict.dpi || (report.dpi && !report.epi) {
                    bad.push(format!("{spec} {pi}: brute {} criterion {}", report.dpi, verdict.dpi));
                }
            }
        });
    }
    outcome(
        bad.is_empty(),
        format!("{} groups, {pairs} (G, π) pairs, {} disagreements {bad:?}", SIMPLE_CORPUS.len(), bad.len()),
    )
}

fn dpi23_witness() -> Outcome {
    let pi = PrimeSet::from_list(&[2, 3]).unwrap();
    let report = with_lattice("Alt:5", |l| permbrute::maximal_pi_subgroups(l, &pi));
    let verdict = criterion::decide_dpi_simple(&"Alt:5".parse().unwrap(), &pi).unwrap();
    let none_fire = verdict.witness.is_none() && verdict.reports.iter().all(|r| !r.holds);
    let passed = report.epi && !report.dpi && !verdict.dpi && none_fire;
    outcome(
        passed,
        format!(
            "Alt(5), {{2,3}}: epi={} dpi={} maximal classes {:?}; criterion dpi={} ({})",
            report.epi,
            report.dpi,
            report.class_names(),
            verdict.dpi,
            verdict.witness_label()
        ),
    )
}

fn table1_reproduction() -> Outcome {
    let r7 = permbrute::reproduce_table1(7).unwrap();
    let r8 = permbrute::reproduce_table1(8).unwrap();
    let control = permbrute::sym6_has_no_order_144_subgroup().unwrap();
    outcome(
        r7.passed && r8.passed && control,
        format!(
            "n=7 {} order {} (index {}), n=8 {} order {} (index {}), Sym(6) has no order-144 subgroup: {control}",
            r7.structure, r7.order, r7.index, r8.structure, r8.order, r8.index
        ),
    )
}

fn product_corpus() -> Vec<String> {
    let mut factors: Vec<(String, usize)> = SIMPLE_CORPUS
        .iter()
        .map(|s| {
            let g = permbrute::realize(&s.parse().unwrap()).unwrap();
            (s.to_string(), g.order())
        })
        .collect();
    factors.extend(SMALL_PRIMES.iter().map(|p| (format!("Cyclic:{p}"), *p as usize)));
    let mut out = Vec::new();
    for (i, (a, na)) in factors.iter().enumerate() {
        for (b, nb) in &factors[i..] {
            if na * nb <= LATTICE_BOUND {
                out.push(format!("{a}*{b}"));
            }
        }
    }
    out
}

fn main_theorem_on_products() -> Outcome {
    let corpus = product_corpus();
    let mut checked = 0;
    let mut bad = Vec::new();
    for spec in &corpus {
        with_lattice(spec, |l| {
            for pi in l.group().spectrum().subsets() {
                let dpi = permbrute::is_dpi_brute(l, &pi);
                for (sigma, tau) in partitions(&pi) {
                    if !permbrute::verify_hall_split(l, &sigma, &tau).unwrap() {
                        continue;
                    }
                    checked += 1;
                    let split = permbrute::is_dpi_brute(l, &sigma) && permbrute::is_dpi_brute(l, &tau);
                    if dpi != split {
                        bad.push(format!("{spec} σ={sigma} τ={tau}"));
                    }
                }
            }
        });
    }
    outcome(
        bad.is_empty(),
        format!("{} products, {checked} split (π, σ, τ) instances, {} violations {bad:?}", corpus.len(), bad.len()),
    )
}

fn arith_oracles() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for r in (3..100u64).filter(|&r| arith::is_prime(r)) {
        for q in (2..100u64).filter(|q| q % r != 0) {
            let mut e = 1;
            let mut x = q % r;
            while x != 1 {
                x = x * q % r;
                e += 1;
            }
            checked += 1;
            if arith::mult_order(q, r).unwrap() != e {
                bad += 1;
            }
        }
    }
    for r in (2..100u64).filter(|&r| arith::is_prime(r)) {
        for m in 1..2000u64 {
            let mut part = 1;
            let mut rest = m;
            while rest % r == 0 {
                rest /= r;
                part *= r;
            }
            checked += 1;
            if arith::r_part(&BigUint::from(m), r).unwrap() != BigUint::from(part) {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{checked} mult_order and r_part values, {bad} mismatches"))
}

fn structural_sweep() -> Outcome {
    let mut reports = 0;
    let mut applicable = 0;
    let mut bad = Vec::new();
    for spec in SIMPLE_CORPUS {
        with_lattice(spec, |l| {
            let spectrum = l.group().spectrum();
            for pi in spectrum.subsets() {
                let report = permbrute::maximal_pi_subgroups(l, &pi);
                let lemma_applies = report.epi
                    && !spectrum.is_subset(&pi)
                    && (!pi.contains(2) || !pi.contains(3));
                if lemma_applies {
                    reports += 1;
                    let s = report.structural.expect("computed when epi");
                    if !s.hall_solvable || !s.nilpotent_factor_per_partition {
                        bad.push(format!("{spec} {pi}: {s:?}"));
                    }
                }
                for (sigma, tau) in partitions(&pi) {
                    match permbrute::check_final_corollary(l, &sigma, &tau).unwrap() {
                        Some(true) => applicable += 1,
                        Some(false) => bad.push(format!("{spec} σ={sigma} τ={tau}: no nilpotent factor")),
                        None => {}
                    }
                }
            }
        });
    }
    outcome(
        bad.is_empty(),
        format!("{reports} Hall reports under the lemma, {applicable} applicable corollary instances, {} violations {bad:?}", bad.len()),
    )
}

fn table_integrity() -> Outcome {
    let t2 = tables::table2_rows();
    let t3 = tables::table3_rows();
    let mut problems = Vec::new();
    for (item, g, pi) in condition_ii_pairs() {
        if !pi.contains(2) && !t2.iter().any(|r| r.group == g.name() && r.pi == pi) {
            problems.push(format!("Condition II({item}) {} {pi} missing from Table 2", g.name()));
        }
    }
    if let Some(r) = t2.iter().find(|r| r.pi.len() != 2) {
        problems.push(format!("Table 2 row {} {} has cardinality {}", r.group, r.pi, r.pi.len()));
    }
    let no_three: Vec<_> = t3.iter().filter(|r| !r.pi.contains(3)).collect();
    let j1 = PrimeSet::from_list(&[2, 7]).unwrap();
    if no_three.len() != 1 || no_three[0].group != Sporadic::J1.name() || no_three[0].pi != j1 {
        problems.push(format!("Table 3 rows without 3: {no_three:?}"));
    }
    let t1 = tables::dump().table1.len();
    outcome(
        problems.is_empty(),
        format!(
            "Table 1: {t1} rows, Table 2: {} rows, Table 3: {} rows, Condition II: {} pairs; {problems:?}",
            t2.len(),
            t3.len(),
            condition_ii_pairs().len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("criterion-oracle agreement", criterion_agreement),
        ("D_{2,3} witness in Alt(5)", dpi23_witness),
        ("Table 1 reproduction", table1_reproduction),
        ("split equivalence on direct products", main_theorem_on_products),
        ("arith oracles", arith_oracles),
        ("structural lemma sweep", structural_sweep),
        ("table integrity", table_integrity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {name}: {} ({:.1?})", i + 1, o.summary, start.elapsed());
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
