//! Nakayama pairs `N(n, ℓ+1) ~ N(n, ℓ)` with `n = p(p+1)q + p(p-1)r` and
//! `ℓ = (p+1)q + pr`, for `p ≥ 2`, `q ≥ 1` and either `r ≥ 0` an integer or
//! `p = 2` and `r` a half-integer.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub p: i64,
    pub q: i64,
    /// `r` as written, e.g. `"1/2"`.
    pub r: String,
    /// `"a"` for integer `r`, `"b"` for half-integers at `p = 2`.
    pub case: String,
    pub n: i64,
    pub l: i64,
    pub l_plus_1: i64,
}

pub const CSV_HEADER: &str = "# dereq pairs v1\np,q,r,case,n,l,l_plus_1";

impl PairRow {
    pub fn csv(&self) -> String {
        format!("{},{},{},{},{},{},{}", self.p, self.q, self.r, self.case, self.n, self.l, self.l_plus_1)
    }
}

/// All instances within the bounds with `n ≤ nmax`, one row per `(n, ℓ)`
/// (the smallest `(p, q, r)` wins), sorted by `(n, ℓ)`.
pub fn pairs(pmax: i64, qmax: i64, rmax: i64, nmax: i64) -> Vec<PairRow> {
    let mut rows: Vec<(i64, i64, i64, i64, i64, i64)> = Vec::new();
    for p in 2..=pmax {
        for q in 1..=qmax {
            // r2 = 2r; odd values only when p = 2
            let step = if p == 2 { 1 } else { 2 };
            for r2 in (0..=2 * rmax).step_by(step) {
                let n2 = 2 * p * (p + 1) * q + p * (p - 1) * r2;
                let l2 = 2 * (p + 1) * q + p * r2;
                if n2 % 2 != 0 || l2 % 2 != 0 || n2 / 2 > nmax {
                    continue;
                }
                rows.push((n2 / 2, l2 / 2, p, q, r2, 0));
            }
        }
    }
    rows.sort();
    rows.dedup_by_key(|r| (r.0, r.1));
    rows.into_iter()
        .map(|(n, l, p, q, r2, _)| PairRow {
            p,
            q,
            r: if r2 % 2 == 0 { (r2 / 2).to_string() } else { format!("{r2}/2") },
            case: if r2 % 2 == 0 { "a".into() } else { "b".into() },
            n,
            l,
            l_plus_1: l + 1,
        })
        .collect()
}
