//! Timing probe: exact length-k counts via the modular engine.
//!
//! Usage: bigk_timing [k] [model]; model is one of simple|tandem|gb|all.

use std::time::Instant;

use oracle::{walk_count_at, EndpointFilter, WalkModel};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let k: usize = args.get(1).map_or(2000, |s| s.parse().unwrap());
    let which = args.get(2).map_or("all", |s| s.as_str());
    for (name, steps) in [
        ("simple", vec![vec![1i64, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]),
        ("tandem", vec![vec![1, 1], vec![-1, 1], vec![0, -1]]),
        ("gb", vec![vec![1, 0], vec![-1, 0], vec![-1, 1], vec![1, -1]]),
    ] {
        if which != "all" && which != name {
            continue;
        }
        let refs: Vec<&[i64]> = steps.iter().map(|s| s.as_slice()).collect();
        let model = WalkModel::unweighted(&refs, 2).unwrap();
        let t = Instant::now();
        let c = walk_count_at(&model, &EndpointFilter::Anywhere, k).unwrap();
        let digits = c.numer().to_string().len();
        println!("{name}: k={k} anywhere, {digits} digits, {:.2?}", t.elapsed());
    }
}
