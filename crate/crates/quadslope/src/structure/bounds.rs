//! The finite bound table: for each order `N`, the girth maximizing the
//! supercycle size bound and the resulting `2s - 2` threshold.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Exact `ceil(log2(p / q))` for positive integers with `p >= q`.
/// For `p <= q` the result is zero.
pub fn ceil_log2_ratio(p: u64, q: u64) -> u64 {
    assert!(p > 0 && q > 0, "ceil_log2_ratio needs positive arguments");
    let mut k = 0;
    let mut acc = q as u128;
    while acc < p as u128 {
        acc *= 2;
        k += 1;
    }
    k
}

/// Girth bound for connected cubic graphs on `n` vertices:
/// `2 * ceil(log2(n/3 + 1))`.
pub fn girth_bound(n: usize) -> usize {
    (2 * ceil_log2_ratio(n as u64 + 3, 3)) as usize
}

/// Supercycle size bound for a connected cubic graph on `n` vertices with
/// girth `g`: `2 * ceil(log2((n+1)/g)) + g - 1`.
pub fn supercycle_size_bound(n: usize, g: usize) -> usize {
    (2 * ceil_log2_ratio(n as u64 + 1, g as u64)) as usize + g - 1
}

/// One row of the bound table.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    /// Vertex count.
    pub n: u64,
    /// `2s - 2` for the worst-case supercycle size bound `s` over all girths.
    pub two_s_minus_2: i64,
    /// Maximum girth considered: `2 * ceil(log2(n/3 + 1))`.
    pub mg: i64,
    /// The girth attaining the maximum.
    pub g: i64,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.n, self.two_s_minus_2, self.mg, self.g)
    }
}

/// Computes the bound row for order `n`, including the `mg < 3` early
/// return with `max = -1` (so `two_s_minus_2 = -4`).
pub fn fmax(n: u64) -> BoundReport {
    let mut max: i64 = -1;
    let mut g: i64 = 0;
    let mg = 2 * ceil_log2_ratio(n + 3, 3) as i64;
    if mg < 3 {
        return BoundReport {
            n,
            two_s_minus_2: 2 * max - 2,
            mg,
            g,
        };
    }
    let mut i: i64 = 3;
    while i <= mg {
        let value = 2 * ceil_log2_ratio(n + 1, i as u64) as i64 + i - 1;
        if max < value {
            max = value;
            g = i;
        }
        i += 1;
    }
    BoundReport {
        n,
        two_s_minus_2: 2 * max - 2,
        mg,
        g,
    }
}

/// Bound rows for `start..=end` with the given step.
pub fn bounds_table(start: u64, end: u64, step: u64) -> Vec<BoundReport> {
    assert!(step > 0, "step must be positive");
    let mut out = Vec::new();
    let mut n = start;
    while n <= end {
        out.push(fmax(n));
        n += step;
    }
    out
}
