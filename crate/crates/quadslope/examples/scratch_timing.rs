//! Scratch timing probe for the acceptance-scale workloads.

use std::time::Instant;

use quadslope::pipeline::{draw_cubic, verify_drawing, PipelineConfig};
use quadslope::structure::{enumerate_cubic_graphs, random_cubic};
use quadslope::SlopeSet;
use rand::SeedableRng;

fn main() {
    let cfg = PipelineConfig::default();

    let t0 = Instant::now();
    let mut counts = Vec::new();
    for n in [4usize, 6, 8, 10] {
        let t = Instant::now();
        let graphs = enumerate_cubic_graphs(n).unwrap();
        counts.push(graphs.len());
        println!("enumerate n={n}: {} graphs in {:?}", graphs.len(), t.elapsed());
        let t = Instant::now();
        for (i, g) in graphs.iter().enumerate() {
            let start = Instant::now();
            let out = draw_cubic(g, &cfg).unwrap();
            assert!(verify_drawing(g, &out.drawing, &SlopeSet::basic()).ok());
            let el = start.elapsed();
            if el.as_millis() > 500 {
                println!("  slow graph {i} (branch {:?}): {:?}", out.trace.branch, el);
            }
        }
        println!("draw all n={n}: {:?}", t.elapsed());
    }
    println!("criterion-3 scale total: {:?}, counts {counts:?}", t0.elapsed());

    let t0 = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1234);
    let mut slowest = std::time::Duration::ZERO;
    for i in 0..50 {
        let n = [18, 20, 22, 24][i % 4];
        let g = random_cubic(n, &mut rng).unwrap();
        let start = Instant::now();
        let out = draw_cubic(&g, &cfg).unwrap();
        assert!(verify_drawing(&g, &out.drawing, &SlopeSet::basic()).ok());
        let el = start.elapsed();
        slowest = slowest.max(el);
        if el.as_millis() > 1000 {
            println!("  slow random {i} n={n} branch {:?}: {:?}", out.trace.branch, el);
        }
    }
    println!("criterion-4 scale total: {:?} (slowest {slowest:?})", t0.elapsed());
}
