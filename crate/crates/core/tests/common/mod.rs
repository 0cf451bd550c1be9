//! Strategies and brute-force oracles shared by the property and acceptance suites.
#![allow(dead_code)]

use std::collections::HashSet;

use atk_core::{fan_from_cycle, Cycle, Fan, LatticeVector, MarkedPair};
use proptest::prelude::*;

pub fn cyc(e: &[i64]) -> Cycle {
    Cycle::new(e.to_vec()).unwrap()
}

fn v(x: i64, y: i64) -> LatticeVector {
    LatticeVector::new(x, y)
}

/// A toric fan built from P^2 or a Hirzebruch surface by corner blowups,
/// interleaved with elementary transformations.
pub fn toric_fan() -> impl Strategy<Value = Fan> {
    let base = prop_oneof![
        Just(vec![v(1, 0), v(0, 1), v(-1, -1)]),
        (-3i64..=3).prop_map(|a| vec![v(1, 0), v(0, 1), v(-1, a), v(0, -1)]),
    ];
    (
        base,
        prop::collection::vec((any::<bool>(), 0usize..64), 0..10),
    )
        .prop_map(|(rays, ops)| {
            let mut fan = Fan::from_rays(rays).unwrap();
            for (blowup, k) in ops {
                if blowup || fan.len() < 6 {
                    if fan.len() < 12 {
                        fan = fan.corner_blowup(k % fan.len()).unwrap();
                    }
                } else {
                    let pairs = fan.opposite_pairs();
                    if !pairs.is_empty() {
                        let (up, down) = pairs[k % pairs.len()];
                        fan = fan.elementary_transform(up, down).unwrap();
                    }
                }
            }
            fan
        })
}

pub fn toric_cycle() -> impl Strategy<Value = Cycle> {
    toric_fan().prop_map(|f| f.cycle())
}

pub fn any_cycle() -> impl Strategy<Value = Cycle> {
    prop::collection::vec(-1i64..=6, 3..=9).prop_map(|e| Cycle::new(e).unwrap())
}

pub fn marked_pair() -> impl Strategy<Value = MarkedPair> {
    toric_fan().prop_flat_map(|fan| {
        let n = fan.len();
        prop::collection::vec(0u32..3, n)
            .prop_map(move |marks| MarkedPair::new(fan.clone(), marks).unwrap())
    })
}

/// Two independent columns with `0 < |det| <= 50` plus up to two more.
pub fn snf_columns() -> impl Strategy<Value = Vec<LatticeVector>> {
    let col = || (-12i64..=12, -12i64..=12).prop_map(|(x, y)| v(x, y));
    (col(), col(), prop::collection::vec(col(), 0..=2))
        .prop_filter("basis with small index", |(a, b, _)| {
            let d = (a.x * b.y - a.y * b.x).abs();
            d > 0 && d <= 50
        })
        .prop_map(|(a, b, rest)| {
            let mut cols = vec![a, b];
            cols.extend(rest);
            cols
        })
}

/// Order of `Z^2 / span(columns)` by enumerating cosets, assuming the first
/// two columns are independent.
///
/// With `L0` spanned by the first two columns and `M = |det|`, a vector `w`
/// lies in `L0` iff both Cramer numerators vanish mod `M`, so `Z^2/L0` embeds
/// in `(Z/M)^2`. The remaining columns generate a subgroup `H` there, and the
/// answer is the number of points of `Z^2/L0` divided by `|H|`.
pub fn coset_count(cols: &[LatticeVector]) -> u64 {
    let (u, w) = (cols[0], cols[1]);
    let m = (u.x * w.y - u.y * w.x).abs();
    let key = |p: LatticeVector| {
        let a = (p.x * w.y - p.y * w.x).rem_euclid(m);
        let b = (u.x * p.y - u.y * p.x).rem_euclid(m);
        (a, b)
    };
    let mut points = HashSet::new();
    for x in 0..m {
        for y in 0..m {
            points.insert(key(v(x, y)));
        }
    }
    let mut h = HashSet::from([(0, 0)]);
    let gens: Vec<(i64, i64)> = cols[2..].iter().map(|&c| key(c)).collect();
    let mut frontier = vec![(0, 0)];
    while let Some(p) = frontier.pop() {
        for g in &gens {
            let q = ((p.0 + g.0) % m, (p.1 + g.1) % m);
            if h.insert(q) {
                frontier.push(q);
            }
        }
    }
    (points.len() / h.len()) as u64
}

/// Maximum of `x^T M x` over nonzero `x` in `[-bound, bound]^n`, where `M` is
/// the intersection matrix of the cycle. Exact dynamic program along the
/// cycle, with the first coordinate fixed and the closing edge added last.
pub fn form_max(c: &Cycle, bound: i64) -> i64 {
    let a = c.entries();
    let vals: Vec<i64> = (-bound..=bound).collect();
    let w = vals.len();
    let mut best = i64::MIN;
    for &x0 in &vals {
        // dp[j][nz]: best partial value with current coordinate vals[j].
        let mut dp = vec![[i64::MIN; 2]; w];
        for (j, &x1) in vals.iter().enumerate() {
            let nz = usize::from(x0 != 0 || x1 != 0);
            dp[j][nz] = -a[0] * x0 * x0 - a[1] * x1 * x1 + 2 * x0 * x1;
        }
        for &ai in &a[2..] {
            let mut next = vec![[i64::MIN; 2]; w];
            for (j, &xi) in vals.iter().enumerate() {
                for (k, &xp) in vals.iter().enumerate() {
                    for nz in 0..2 {
                        if dp[k][nz] == i64::MIN {
                            continue;
                        }
                        let nz2 = nz | usize::from(xi != 0);
                        let val = dp[k][nz] - ai * xi * xi + 2 * xp * xi;
                        next[j][nz2] = next[j][nz2].max(val);
                    }
                }
            }
            dp = next;
        }
        for (j, &xl) in vals.iter().enumerate() {
            if dp[j][1] != i64::MIN {
                best = best.max(dp[j][1] + 2 * xl * x0);
            }
        }
    }
    best
}

/// Negative definiteness decided by the quadratic form alone: a nonnegative
/// value on a small box refutes it; otherwise the box is enlarged up to
/// `max_bound` before concluding that the form is negative definite.
pub fn definite_by_sampling(c: &Cycle, max_bound: i64) -> bool {
    let mut bound = 5;
    loop {
        if form_max(c, bound) >= 0 {
            return false;
        }
        if bound >= max_bound {
            return true;
        }
        bound *= 2;
    }
}

pub fn is_toric(c: &Cycle) -> bool {
    fan_from_cycle(c).is_ok()
}
