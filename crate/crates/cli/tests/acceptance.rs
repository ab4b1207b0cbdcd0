//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line.  Run with `cargo test -p involutive-cli --test acceptance --
//! --nocapture` to see the lines.

use std::cmp::Ordering;

use num::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use involutive::completion::{
    complete, default_completion_order, find_involutive_divisor, is_involutive,
    is_involutively_autoreduced, update_separations, Completion, Limits, StepOutcome,
};
use involutive::division::{
    axiom_check, cone_member, separation, separation_table, DivisionKind, SubsetMode,
};
use involutive::fixtures::{self, FIXTURES};
use involutive::hilbert::{brute_force_hf, HilbertData};
use involutive::monomial::{Monomial, MonomialSet, OrderingKind};
use involutive::random::{random_monomial_set, SetBounds};
use involutive_cli::{run_bench, CellOutcome};

fn verdict(criterion: &str, ok: bool, detail: &str) {
    println!(
        "acceptance {criterion}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

/// All monomials over n variables with total degree at most `bound`.
fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    fn rec(current: &mut Vec<u32>, var: usize, rest: u32, out: &mut Vec<Monomial>) {
        if var == current.len() - 1 {
            for e in 0..=rest {
                current[var] = e;
                out.push(Monomial::new(current.clone()));
            }
            current[var] = 0;
            return;
        }
        for e in 0..=rest {
            current[var] = e;
            rec(current, var + 1, rest - e, out);
        }
        current[var] = 0;
    }
    let mut out = Vec::new();
    rec(&mut vec![0u32; n], 0, bound, &mut out);
    out
}

/// Caps that let every noetherian run finish; Pommaret may diverge and gets
/// a wide guard instead.
fn generous_limits(input: &MonomialSet, kind: DivisionKind) -> Limits {
    match kind {
        DivisionKind::Pommaret => Limits::new(Some(30), Some(3_000)),
        _ => Limits::new(
            Some(involutive_cli::terminating_degree_cap(input, kind)),
            Some(20_000),
        ),
    }
}

#[test]
fn criterion_1_basis_length_reproduction() {
    let report = run_bench(None, None).expect("bench runs");
    let mut failures = Vec::new();
    let mut compared = 0;
    for cell in &report.cells {
        if let Some(expected) = cell.expected_length {
            compared += 1;
            match &cell.outcome {
                CellOutcome::Completed { length, .. } if *length == expected => {}
                other => failures.push(format!(
                    "{} {}: expected length {expected}, got {other:?}",
                    cell.fixture,
                    cell.division.cli_name()
                )),
            }
        }
    }
    let ok = failures.is_empty();
    verdict(
        "1 (basis-length reproduction)",
        ok,
        &format!("{compared} reference cells, {} mismatches", failures.len()),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_2_already_involutive_detection() {
    let fixture = fixtures::by_name("cyc4").unwrap();
    let input = fixture.input();
    let mut ok = true;
    let mut notes = Vec::new();
    for kind in [DivisionKind::Janet, DivisionKind::Induced(OrderingKind::DegLex)] {
        let order = default_completion_order(kind);
        let result = complete(&input, kind, order, Limits::default()).unwrap();
        let fully_reducible =
            result.stats.examined > 0 && result.stats.reducible == result.stats.examined;
        let unchanged = result.basis.same_monomials(&input);
        let involutive = is_involutive(&input, kind);
        if !(fully_reducible && unchanged && involutive) {
            ok = false;
        }
        notes.push(format!(
            "{kind}: {}/{} reducible, basis unchanged: {unchanged}, is_involutive: {involutive}",
            result.stats.reducible, result.stats.examined
        ));
    }
    verdict("2 (already-involutive detection on cyc4)", ok, &notes.join("; "));
    assert!(ok, "{notes:?}");
}

#[test]
fn criterion_3_basis_coincidences() {
    let input = fixtures::by_name("cyc4").unwrap().input();
    let run = |kind: DivisionKind| {
        complete(&input, kind, default_completion_order(kind), generous_limits(&input, kind))
            .unwrap()
            .basis
    };
    let thomas = run(DivisionKind::Thomas);
    let div1 = run(DivisionKind::DivisionI);
    let janet = run(DivisionKind::Janet);
    let ddl = run(DivisionKind::Induced(OrderingKind::DegLex));
    let ok = thomas.same_monomials(&div1) && janet.same_monomials(&ddl);
    verdict(
        "3 (cyc4 basis coincidences)",
        ok,
        &format!(
            "T = I as sets: {}, J = D_DL as sets: {}",
            thomas.same_monomials(&div1),
            janet.same_monomials(&ddl)
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_4_prolongation_counts_soft() {
    // Counting convention: one prolongation examined per reducibility test
    // run by the main loop; pairs requeued by a separation change count
    // again.  Reported, not gated.
    let mut notes = Vec::new();
    for (name, expected) in [("cyc4", 14u64), ("cyc5", 76u64)] {
        let input = fixtures::by_name(name).unwrap().input();
        let result =
            complete(&input, DivisionKind::Janet, OrderingKind::Lex, Limits::default()).unwrap();
        let got = result.stats.examined;
        if got == expected {
            notes.push(format!("{name} J: {got} (matches)"));
        } else {
            notes.push(format!(
                "{name} J: table says {expected}, our convention counts {got}"
            ));
        }
    }
    verdict("4 (prolongation counts, soft)", true, &notes.join("; "));
}

#[test]
fn criterion_5_axiom_suite() {
    let started = std::time::Instant::now();
    let bounds = SetBounds { max_vars: 5, max_size: 12, max_degree: 6 };
    let mut failures = Vec::new();
    for (k, kind) in DivisionKind::ALL.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0000 + k as u64);
        for trial in 0..1000u64 {
            let set = random_monomial_set(&mut rng, bounds, OrderingKind::Lex);
            let report = axiom_check(
                kind,
                &set,
                SubsetMode::Random { samples: 16, seed: trial },
            );
            if !report.pass {
                failures.push(format!("{kind} trial {trial}: {:?}", report.witness));
            }
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let ok = failures.is_empty() && elapsed < 60.0;
    verdict(
        "5 (axiom suite)",
        ok,
        &format!(
            "8 divisions x 1000 seeded sets, {} failures, {elapsed:.1}s",
            failures.len()
        ),
    );
    assert!(failures.is_empty(), "{failures:?}");
    assert!(elapsed < 60.0, "axiom suite took {elapsed:.1}s");
}

/// Brute-force divisor scan: every cone containing v.
fn all_divisors(
    v: &Monomial,
    set: &MonomialSet,
    seps: &involutive::division::SeparationTable,
) -> Vec<usize> {
    (0..set.len())
        .filter(|&i| cone_member(v, set.get(i), seps.get(i)))
        .collect()
}

#[test]
fn criterion_6_oracle_equivalence() {
    let bounds = SetBounds { max_vars: 5, max_size: 12, max_degree: 6 };
    let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E5);
    let mut discrepancies = Vec::new();
    let orders = OrderingKind::ALL;

    for instance in 0..500usize {
        let sort_order = orders[instance % 3];
        let raw = random_monomial_set(&mut rng, bounds, sort_order);
        // Conventionally autoreduced sets are involutively autoreduced.
        let set = raw.autoreduce();
        let n = set.arity();

        for kind in DivisionKind::ALL {
            let seps = separation_table(kind, &set);

            // (c)/(d): fast separation tables against the definitional rule.
            for (i, u) in set.iter().enumerate() {
                let naive = separation(kind, u, &set);
                if *seps.get(i) != naive {
                    discrepancies
                        .push(format!("separation table {kind} instance {instance} at {u}"));
                }
            }

            // (a) filtered divisor search against the brute-force scan, for
            // prolongations with their hint and for arbitrary monomials.
            for _ in 0..4 {
                let i = rng.gen_range(0..set.len());
                let base = set.get(i).clone();
                let var = rng.gen_range(0..n);
                let v = base.multiply(var);
                let brute = all_divisors(&v, &set, &seps);
                if brute.len() > 1 {
                    discrepancies.push(format!(
                        "two involutive divisors of {v} in an autoreduced set ({kind})"
                    ));
                }
                // The hint applies when the variable is nonmultiplicative
                // for the base, i.e. when v is a true prolongation.
                let hint = if !seps.get(i).is_multiplicative(var) {
                    Some((&base, var))
                } else {
                    None
                };
                let fast = find_involutive_divisor(&v, &set, &seps, kind, hint);
                if fast != brute.first().copied() {
                    discrepancies.push(format!(
                        "divisor search {kind} instance {instance}: {v} -> {fast:?} vs {brute:?}"
                    ));
                }
                if hint.is_some() {
                    if let Some(w) = fast.map(|i| set.get(i)) {
                        // Remark on prolongation divisors: degree in the
                        // prolonged variable must agree.
                        if w.deg(var) != v.deg(var) {
                            discrepancies.push(format!(
                                "divisor of {v} with deviating degree in x{}",
                                var + 1
                            ));
                        }
                    }
                }
                let arbitrary = Monomial::new(
                    (0..n).map(|_| rng.gen_range(0..=6u32)).collect::<Vec<_>>(),
                );
                let brute = all_divisors(&arbitrary, &set, &seps);
                let fast = find_involutive_divisor(&arbitrary, &set, &seps, kind, None);
                if fast != brute.first().copied() {
                    discrepancies.push(format!(
                        "unhinted search {kind} instance {instance}: {arbitrary}"
                    ));
                }
            }

            // (b) incremental separation update against recomputation.
            let fresh = Monomial::new(
                (0..n).map(|_| rng.gen_range(0..=6u32)).collect::<Vec<_>>(),
            );
            if !set.contains(&fresh) {
                let (grown, table) = update_separations(kind, &set, &seps, &fresh, None);
                if table != separation_table(kind, &grown) {
                    discrepancies
                        .push(format!("update {kind} instance {instance} at {fresh}"));
                }
            }
            let i = rng.gen_range(0..set.len());
            let base = set.get(i).clone();
            let var = rng.gen_range(0..n);
            let prolongation = base.multiply(var);
            if !set.contains(&prolongation) {
                let (grown, table) =
                    update_separations(kind, &set, &seps, &prolongation, Some((&base, var)));
                if table != separation_table(kind, &grown) {
                    discrepancies.push(format!(
                        "hinted update {kind} instance {instance} at {prolongation}"
                    ));
                }
            }
        }

        // (e) queue minimum against the exhaustive minimum over untested
        // nonmultiplicative pairs, traced through a full run on a small
        // instance.
        let kind = DivisionKind::ALL[instance % 8];
        let order = orders[instance % 3];
        let trace_input = random_monomial_set(
            &mut rng,
            SetBounds { max_vars: 4, max_size: 6, max_degree: 4 },
            order,
        );
        let mut engine = Completion::new(
            &trace_input,
            kind,
            order,
            generous_limits(&trace_input, kind),
        );
        loop {
            let peeked = engine.peek_next();
            let mut oracle: Option<(Monomial, usize, Monomial)> = None;
            for i in 0..engine.basis().len() {
                let u = engine.basis().get(i);
                for var in engine.separations().get(i).nonmultiplicative() {
                    if engine.is_tested(i, var) {
                        continue;
                    }
                    let prol = u.multiply(var);
                    let better = match &oracle {
                        None => true,
                        Some((cur, cur_var, _)) => {
                            match order.compare(&prol, cur) {
                                Ordering::Less => true,
                                Ordering::Equal => var < *cur_var,
                                Ordering::Greater => false,
                            }
                        }
                    };
                    if better {
                        oracle = Some((prol, var, u.clone()));
                    }
                }
            }
            let oracle = oracle.map(|(prol, var, base)| (base, var, prol));
            if peeked != oracle {
                discrepancies.push(format!(
                    "queue minimum {kind} instance {instance}: {peeked:?} vs {oracle:?}"
                ));
                break;
            }
            match engine.step() {
                StepOutcome::Examined { .. } | StepOutcome::Requeued(_) => {}
                StepOutcome::Finished | StepOutcome::CapHit { .. } => break,
            }
        }
    }

    let ok = discrepancies.is_empty();
    verdict(
        "6 (oracle equivalence)",
        ok,
        &format!("500 seeded instances, {} discrepancies", discrepancies.len()),
    );
    assert!(ok, "{:?}", &discrepancies[..discrepancies.len().min(5)]);
}

#[test]
fn criterion_7_completion_soundness() {
    let bounds = SetBounds { max_vars: 4, max_size: 8, max_degree: 5 };
    let mut failures = Vec::new();
    let mut pommaret_skips = 0usize;
    let mut runs = 0usize;

    for (k, kind) in DivisionKind::ALL.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x50_0000 + k as u64);
        for trial in 0..300u32 {
            let input = random_monomial_set(&mut rng, bounds, OrderingKind::Lex);
            let limits = generous_limits(&input, kind);

            let mut bases: Vec<MonomialSet> = Vec::new();
            let mut capped = false;
            for order in OrderingKind::ALL {
                match complete(&input, kind, order, limits) {
                    Ok(result) => bases.push(result.basis),
                    Err(_) => {
                        capped = true;
                        break;
                    }
                }
            }
            if capped {
                // Divergence is expected for Pommaret on ideals that are
                // not zero-dimensional; anything else is a failure.
                if kind == DivisionKind::Pommaret {
                    pommaret_skips += 1;
                    continue;
                }
                failures.push(format!("{kind} trial {trial}: unexpected cap"));
                continue;
            }
            runs += 1;

            // Selection-order invariance: the minimal basis is unique.
            if !(bases[0].same_monomials(&bases[1]) && bases[0].same_monomials(&bases[2])) {
                failures.push(format!("{kind} trial {trial}: order-dependent basis"));
                continue;
            }
            let basis = &bases[0];

            if !is_involutive(basis, kind) {
                failures.push(format!("{kind} trial {trial}: output not involutive"));
                continue;
            }
            if !is_involutively_autoreduced(basis, kind) {
                failures.push(format!(
                    "{kind} trial {trial}: output not involutively autoreduced"
                ));
                continue;
            }

            // Ideal preservation and disjoint cones, by enumeration: below
            // max basis degree + 2, a monomial is divisible by an input
            // element iff it lies in exactly one involutive cone.
            let seps = separation_table(kind, basis);
            let reduced_input = input.autoreduce();
            let bound = basis.max_degree() + 2;
            for w in monomials_up_to(input.arity(), bound) {
                let in_ideal = reduced_input.iter().any(|u| u.divides(&w));
                let cones = (0..basis.len())
                    .filter(|&i| cone_member(&w, basis.get(i), seps.get(i)))
                    .count();
                if (in_ideal && cones != 1) || (!in_ideal && cones != 0) {
                    failures.push(format!(
                        "{kind} trial {trial}: {w} covered by {cones} cones, in ideal: {in_ideal}"
                    ));
                    break;
                }
            }
        }
    }

    let ok = failures.is_empty();
    verdict(
        "7 (completion soundness)",
        ok,
        &format!(
            "300 inputs x 8 divisions x 3 orderings, {runs} verified, \
             {pommaret_skips} Pommaret divergences skipped, {} failures",
            failures.len()
        ),
    );
    assert!(ok, "{:?}", &failures[..failures.len().min(5)]);
}

#[test]
fn criterion_8_hilbert_validation() {
    let mut failures = Vec::new();
    let mut checked_points = 0usize;
    let mut guarded_points = 0usize;

    let mut check = |input: &MonomialSet, label: &str, failures: &mut Vec<String>| {
        let result = complete(
            input,
            DivisionKind::Janet,
            OrderingKind::Lex,
            generous_limits(input, DivisionKind::Janet),
        )
        .unwrap();
        let data = HilbertData::from_result(&result);
        for s in 0..=12u32 {
            match brute_force_hf(input, s) {
                Ok(expected) => {
                    checked_points += 1;
                    if data.hilbert_function(s) != BigUint::from(expected) {
                        failures.push(format!(
                            "{label}: HF({s}) = {} but enumeration counts {expected}",
                            data.hilbert_function(s)
                        ));
                    }
                }
                Err(_) => guarded_points += 1,
            }
        }
        let (poly, regularity) = data.hilbert_polynomial();
        for s in regularity..=regularity + 5 {
            if poly.eval(s) != num::BigInt::from(data.hilbert_function(s)) {
                failures.push(format!("{label}: P({s}) deviates from HF({s})"));
            }
        }
        if regularity > 0 {
            let s = regularity - 1;
            if poly.eval(s) == num::BigInt::from(data.hilbert_function(s)) {
                failures.push(format!(
                    "{label}: regularity {regularity} is not minimal"
                ));
            }
        }
    };

    for fixture in FIXTURES {
        check(&fixture.input(), fixture.name, &mut failures);
    }
    let bounds = SetBounds { max_vars: 4, max_size: 8, max_degree: 5 };
    let mut rng = ChaCha8Rng::seed_from_u64(0x411BE27);
    for trial in 0..100u32 {
        let input = random_monomial_set(&mut rng, bounds, OrderingKind::Lex);
        check(&input, &format!("random {trial}"), &mut failures);
    }

    let ok = failures.is_empty();
    verdict(
        "8 (Hilbert validation)",
        ok,
        &format!(
            "{checked_points} enumeration points checked ({guarded_points} beyond the \
             enumeration guard), {} failures",
            failures.len()
        ),
    );
    assert!(ok, "{:?}", &failures[..failures.len().min(5)]);
}

// Harness sanity: two bench runs are identical once timing is stripped.
#[test]
fn bench_report_is_deterministic() {
    let strip = |mut v: serde_json::Value| {
        for cell in v["cells"].as_array_mut().expect("cells") {
            if let Some(obj) = cell.as_object_mut() {
                obj.remove("elapsed_seconds");
            }
        }
        v
    };
    let a = run_bench(Some(&["cyc4".into()]), None).unwrap();
    let b = run_bench(Some(&["cyc4".into()]), None).unwrap();
    let a = strip(serde_json::to_value(&a).unwrap());
    let b = strip(serde_json::to_value(&b).unwrap());
    assert_eq!(a, b);
}
