//! Extended rationals: `Q ∪ {+inf}`.
//!
//! `+inf` is the valuation of zero. There is no `-inf`; trying to build it
//! is an error.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An element of `Q ∪ {+inf}`.
///
/// The derived order puts every `Finite` below `Infinity`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRat {
    Finite(BigRational),
    Infinity,
}

/// Shorthand for the exact rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ExtRat {
    pub fn int(n: i64) -> Self {
        ExtRat::Finite(int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExtRat::Finite(rat(n, d))
    }

    pub fn zero() -> Self {
        ExtRat::Finite(BigRational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Infinity)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::Infinity => None,
        }
    }

    /// The finite value, or a precondition error naming `what`.
    pub fn expect_finite(&self, what: &str) -> Result<&BigRational, Error> {
        self.finite()
            .ok_or_else(|| Error::Precondition(format!("{what} must be finite")))
    }
}

impl From<BigRational> for ExtRat {
    fn from(r: BigRational) -> Self {
        ExtRat::Finite(r)
    }
}

impl From<i64> for ExtRat {
    fn from(n: i64) -> Self {
        ExtRat::int(n)
    }
}

/// Sum in `Q ∪ {+inf}`; `+inf` absorbs.
pub fn er_add(a: &ExtRat, b: &ExtRat) -> ExtRat {
    match (a, b) {
        (ExtRat::Finite(x), ExtRat::Finite(y)) => ExtRat::Finite(x + y),
        _ => ExtRat::Infinity,
    }
}

/// Minimum together with a tie flag, set iff `a == b`.
pub fn er_min(a: &ExtRat, b: &ExtRat) -> (ExtRat, bool) {
    match a.cmp(b) {
        std::cmp::Ordering::Less => (a.clone(), false),
        std::cmp::Ordering::Greater => (b.clone(), false),
        std::cmp::Ordering::Equal => (a.clone(), true),
    }
}

/// Multiply by a rational. `0 * inf` is undefined, and a negative multiple
/// of `+inf` would be `-inf`; both are errors.
pub fn er_scale(a: &ExtRat, c: &BigRational) -> Result<ExtRat, Error> {
    match a {
        ExtRat::Finite(x) => Ok(ExtRat::Finite(x * c)),
        ExtRat::Infinity if c.is_zero() => Err(Error::ZeroTimesInfinity),
        ExtRat::Infinity if c.is_negative() => Err(Error::NegativeInfinity),
        ExtRat::Infinity => Ok(ExtRat::Infinity),
    }
}

/// Minimum of a list plus a flag telling whether the minimum is attained
/// more than once. An all-infinite list gives `(inf, false)`.
pub fn min_with_tie<'a, I>(items: I) -> (ExtRat, bool)
where
    I: IntoIterator<Item = &'a ExtRat>,
{
    let mut best = ExtRat::Infinity;
    let mut count = 0usize;
    for x in items {
        if x.is_infinite() {
            continue;
        }
        match x.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = x.clone();
                count = 1;
            }
            std::cmp::Ordering::Equal => count += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
    (best, count > 1)
}

/// Unreduced fraction with a positive denominator, for comparing candidates
/// without paying a gcd per operation. Reduce only the value that is kept.
#[derive(Clone, Debug)]
pub(crate) struct RawFrac {
    pub n: BigInt,
    pub d: BigInt,
}

impl RawFrac {
    /// `a + k * b`.
    pub fn add_scaled(a: &BigRational, k: &BigInt, b: &BigRational) -> Self {
        RawFrac {
            n: a.numer() * b.denom() + k * b.numer() * a.denom(),
            d: a.denom() * b.denom(),
        }
    }

    /// `(a - b) / x` for a positive integer `x`.
    pub fn sub_div(a: &BigRational, b: &BigRational, x: u64) -> Self {
        RawFrac {
            n: a.numer() * b.denom() - b.numer() * a.denom(),
            d: a.denom() * b.denom() * BigInt::from(x),
        }
    }

    pub fn reduce(self) -> BigRational {
        BigRational::new(self.n, self.d)
    }
}

impl PartialEq for RawFrac {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == std::cmp::Ordering::Equal
    }
}

impl Eq for RawFrac {}

impl PartialOrd for RawFrac {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for RawFrac {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (&self.n * &o.d).cmp(&(&o.n * &self.d))
    }
}

impl Add for ExtRat {
    type Output = ExtRat;
    fn add(self, rhs: ExtRat) -> ExtRat {
        er_add(&self, &rhs)
    }
}

impl<'a> Add<&'a ExtRat> for &'a ExtRat {
    type Output = ExtRat;
    fn add(self, rhs: &'a ExtRat) -> ExtRat {
        er_add(self, rhs)
    }
}

/// Render a rational as `p` or `p/q`.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => f.write_str(&fmt_rational(r)),
            ExtRat::Infinity => f.write_str("inf"),
        }
    }
}

/// Parse `[-]p`, `[-]p/q` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for ExtRat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtRat::Infinity),
            "-inf" => Err(Error::NegativeInfinity),
            t => parse_rational(t).map(ExtRat::Finite),
        }
    }
}
