//! The Hilbert function is an invariant of the ideal: completing the same
//! input under different divisions must give identical values, and the fast
//! separation tables must agree with the definitional rule.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use involutive::completion::{complete, default_completion_order, Limits};
use involutive::division::{separation, separation_table, DivisionKind};
use involutive::hilbert::HilbertData;
use involutive::monomial::OrderingKind;
use involutive::random::{random_monomial_set, SetBounds};

#[test]
fn hilbert_function_is_division_independent() {
    let bounds = SetBounds { max_vars: 4, max_size: 7, max_degree: 5 };
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1F);
    let divisions = [
        DivisionKind::Janet,
        DivisionKind::Thomas,
        DivisionKind::DivisionII,
        DivisionKind::Induced(OrderingKind::DegRevLex),
    ];
    for trial in 0..60 {
        let input = random_monomial_set(&mut rng, bounds, OrderingKind::Lex);
        let limits = Limits::new(Some(64), Some(20_000));
        let tables: Vec<Vec<num::BigUint>> = divisions
            .iter()
            .map(|&kind| {
                let result =
                    complete(&input, kind, default_completion_order(kind), limits).unwrap();
                HilbertData::from_result(&result).table(10)
            })
            .collect();
        for t in &tables[1..] {
            assert_eq!(&tables[0], t, "trial {trial}: {input}");
        }
    }
}

#[test]
fn fast_separation_tables_match_the_definition() {
    let bounds = SetBounds { max_vars: 5, max_size: 15, max_degree: 7 };
    let mut rng = ChaCha8Rng::seed_from_u64(0xFA57);
    for _ in 0..200 {
        for order in OrderingKind::ALL {
            let set = random_monomial_set(&mut rng, bounds, order);
            for kind in [
                DivisionKind::Janet,
                DivisionKind::Induced(OrderingKind::Lex),
                DivisionKind::Induced(OrderingKind::DegLex),
                DivisionKind::Induced(OrderingKind::DegRevLex),
                DivisionKind::Thomas,
            ] {
                let table = separation_table(kind, &set);
                for (i, u) in set.iter().enumerate() {
                    assert_eq!(
                        *table.get(i),
                        separation(kind, u, &set),
                        "{kind} at {u} in {set}"
                    );
                }
            }
        }
    }
}
