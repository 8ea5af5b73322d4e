//! Fixture graphs shared by the benchmarks.

use majcolor_core::{generate, Graph};

/// Connected graphs with minimum degree `>= delta`, one per size in `sizes`.
pub fn mindeg_suite(sizes: &[usize], delta: usize, seed: u64) -> Vec<(usize, Graph)> {
    sizes
        .iter()
        .map(|&n| {
            let g = generate::random_mindeg(n, delta, seed ^ n as u64)
                .expect("suite sizes exceed delta");
            (n, g)
        })
        .collect()
}

/// `d`-regular graphs on each size, `d` even so every size works.
pub fn regular_suite(sizes: &[usize], d: usize, seed: u64) -> Vec<(usize, Graph)> {
    assert!(d.is_multiple_of(2));
    sizes
        .iter()
        .map(|&n| {
            let g = generate::random_regular(n, d, seed ^ n as u64).expect("valid size");
            (n, g)
        })
        .collect()
}
