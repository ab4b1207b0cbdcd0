//! Timings for the completion engine on the embedded fixtures, one bench
//! per (input, division) pair, plus the batch separation computations.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use involutive::completion::{complete, default_completion_order, Limits};
use involutive::division::{separation_table, DivisionKind};
use involutive::fixtures;
use involutive::monomial::OrderingKind;

fn completion_cells(c: &mut Criterion) {
    let cells: &[(&str, DivisionKind)] = &[
        ("cyc4", DivisionKind::Janet),
        ("cyc4", DivisionKind::Thomas),
        ("cyc4", DivisionKind::DivisionII),
        ("cyc5", DivisionKind::Janet),
        ("cyc5", DivisionKind::Induced(OrderingKind::DegRevLex)),
        ("cyc6", DivisionKind::Janet),
        ("reimer5", DivisionKind::Janet),
        ("reimer5", DivisionKind::Pommaret),
        ("katsura7", DivisionKind::Janet),
        ("sq3", DivisionKind::Janet),
        ("sq4", DivisionKind::Janet),
    ];
    let mut group = c.benchmark_group("complete");
    group.sample_size(20);
    for (name, kind) in cells {
        let input = fixtures::by_name(name).unwrap().input();
        let order = default_completion_order(*kind);
        let limits = Limits::new(Some(64), Some(50_000));
        group.bench_with_input(
            BenchmarkId::new(name.to_string(), kind),
            &input,
            |b, input| {
                b.iter(|| complete(input, *kind, order, limits).unwrap().basis.len())
            },
        );
    }
    group.finish();
}

fn separation_tables(c: &mut Criterion) {
    let input = fixtures::by_name("sq4").unwrap().input();
    let mut group = c.benchmark_group("separation_table/sq4");
    for kind in [
        DivisionKind::Janet,
        DivisionKind::Thomas,
        DivisionKind::DivisionI,
        DivisionKind::Induced(OrderingKind::Lex),
    ] {
        group.bench_function(kind.to_string(), |b| {
            b.iter(|| separation_table(kind, &input).len())
        });
    }
    group.finish();
}

criterion_group!(benches, completion_cells, separation_tables);
criterion_main!(benches);
