use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use quadslope::pipeline::{draw_cubic, PipelineConfig};
use quadslope::slopes::is_good;
use quadslope::structure::{find_short_supercycle, find_suitable_m_cut, fmax, girth_cycle};
use quadslope::SlopeSet;

fn bench_draw(c: &mut Criterion) {
    let cfg = PipelineConfig::default();
    let mut group = c.benchmark_group("draw_cubic");
    for (name, g) in [
        ("petersen_fixture", quadslope_bench::petersen()),
        ("two_gadget_two_cut", quadslope_bench::two_gadget()),
        ("random_n18_mcut", quadslope_bench::seeded_cubic(18, 7)),
        ("random_n24_mcut", quadslope_bench::seeded_cubic(24, 7)),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| draw_cubic(black_box(&g), &cfg).expect("drawable"))
        });
    }
    group.finish();
}

fn bench_structure(c: &mut Criterion) {
    let g = quadslope_bench::seeded_cubic(24, 3);
    c.bench_function("girth_n24", |b| {
        b.iter(|| girth_cycle(black_box(&g)).expect("cyclic"))
    });
    c.bench_function("supercycle_and_mcut_n24", |b| {
        b.iter(|| {
            let seed = find_short_supercycle(black_box(&g)).expect("cubic");
            find_suitable_m_cut(&g, &seed).expect("large enough")
        })
    });
    c.bench_function("bounds_table", |b| {
        b.iter(|| {
            for n in (6..=42u64).step_by(2) {
                black_box(fmax(n));
            }
        })
    });
}

fn bench_slopes(c: &mut Criterion) {
    let sets: Vec<SlopeSet> = ["0,1,inf,-1", "0,1,inf,2", "0,1,2,3", "1/2,3,inf,-5"]
        .iter()
        .map(|s| s.parse().expect("valid slope set"))
        .collect();
    c.bench_function("is_good_four_sets", |b| {
        b.iter(|| {
            for s in &sets {
                let _ = black_box(is_good(s).expect("decidable"));
            }
        })
    });
}

criterion_group!(benches, bench_draw, bench_structure, bench_slopes);
criterion_main!(benches);
