use criterion::{criterion_group, criterion_main, Criterion};
use snarklab::catalogue;
use snarklab::colouring::{is_colourable, resistance, DeletionMode};
use snarklab::connectivity::cyclic_connectivity;
use snarklab::constructions::families::{chain_z, h1};
use snarklab::factors::oddness;
use snarklab::graph::delete_vertices;
use snarklab::{par, MultiGraph};
use std::hint::black_box;

fn both<R>(c: &mut Criterion, name: &str, f: impl Fn() -> R) {
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| par::sequential(|| black_box(f())))
    });
    group.bench_function("parallel", |b| b.iter(|| black_box(f())));
    group.finish();
}

fn catalogue_oddness(c: &mut Criterion) {
    let gs: Vec<&MultiGraph> = catalogue::bridgeless_up_to(14);
    both(c, "oddness/catalogue<=14", || {
        par::map(&gs, |g| oddness(g).map(|o| o.value).unwrap_or(0))
    });
}

fn catalogue_zeta(c: &mut Criterion) {
    let gs: Vec<&MultiGraph> = catalogue::up_to(14).collect();
    both(c, "zeta/catalogue<=14", || {
        par::map(&gs, |g| cyclic_connectivity(g, 5).map(|z| z.exact()).ok())
    });
}

fn deletions(c: &mut Criterion) {
    let g = chain_z(2).expect("chain of two");
    let vs: Vec<u32> = g.vertices().collect();
    both(c, "single-vertex-deletions/Z-chain", || {
        par::all(&vs, |&v| {
            !is_colourable(&delete_vertices(&g, &[v]).expect("vertex").graph)
        })
    });
}

fn resistance_28(c: &mut Criterion) {
    let g = h1();
    both(c, "vertex-resistance/H1", || {
        resistance(&g, DeletionMode::Vertex).map(|r| r.value)
    });
}

criterion_group!(
    benches,
    catalogue_oddness,
    catalogue_zeta,
    deletions,
    resistance_28
);
criterion_main!(benches);
