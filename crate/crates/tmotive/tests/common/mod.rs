#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tmotive::exactval::{rat, ExtRat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational in `[lo, hi]` with denominator between 1 and `max_den`.
pub fn sample(r: &mut ChaCha8Rng, lo: &BigRational, hi: &BigRational, max_den: i64) -> BigRational {
    loop {
        let den = r.gen_range(1..=max_den);
        let d = rat(den, 1);
        let a = (lo * &d).ceil().to_integer().to_i64().unwrap();
        let b = (hi * &d).floor().to_integer().to_i64().unwrap();
        if a <= b {
            return rat(r.gen_range(a..=b), den);
        }
    }
}

pub fn sample_i(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> BigRational {
    sample(r, &rat(lo, 1), &rat(hi, 1), 12)
}

pub fn fin(x: &BigRational) -> ExtRat {
    ExtRat::Finite(x.clone())
}

pub fn margin() -> BigRational {
    rat(1, 100)
}

/// O(n^3) lower hull: a point is a vertex iff it is an endpoint or no
/// segment between two other points passes on or below it.
pub fn brute_hull(points: &[(u64, BigRational)]) -> Vec<(u64, BigRational)> {
    let xmin = points.iter().map(|p| p.0).min().unwrap();
    let xmax = points.iter().map(|p| p.0).max().unwrap();
    let mut out: Vec<(u64, BigRational)> = points
        .iter()
        .filter(|p| {
            if p.0 == xmin || p.0 == xmax {
                return true;
            }
            !points.iter().any(|a| {
                points.iter().any(|b| {
                    a.0 < p.0 && p.0 < b.0 && {
                        let s = (&b.1 - &a.1) / rat((b.0 - a.0) as i64, 1);
                        &a.1 + s * rat((p.0 - a.0) as i64, 1) <= p.1
                    }
                })
            })
        })
        .cloned()
        .collect();
    out.sort();
    out
}
