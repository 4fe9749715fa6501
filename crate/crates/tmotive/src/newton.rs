//! Newton polygons over a valued field.
//!
//! A point `(x, y)` stands for a term of degree `x` whose coefficient has
//! valuation `y`. Only lower hulls are needed. Points with `y = inf` are
//! absent coefficients and are dropped before hulling.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exactval::{ExtRat, RawFrac};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPoint {
    pub abscissa: u64,
    pub ordinate: ExtRat,
}

impl NewtonPoint {
    pub fn new(abscissa: u64, ordinate: ExtRat) -> Self {
        NewtonPoint { abscissa, ordinate }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub slope: BigRational,
    pub xspan: u64,
}

/// Lower convex hull. Vertices have strictly increasing abscissae and the
/// segment slopes strictly increase; collinear interior points are not
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(u64, BigRational)>,
    pub segments: Vec<Segment>,
}

/// A root valuation with its multiplicity, counted as an `F_q`-dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVal {
    pub ord: BigRational,
    pub mult: u32,
}

fn slope(a: &(u64, BigRational), b: &(u64, BigRational)) -> BigRational {
    (&b.1 - &a.1) / BigRational::from_integer(BigInt::from(b.0 - a.0))
}

pub fn lower_hull(points: &[NewtonPoint]) -> Result<NewtonPolygon, Error> {
    let mut pts: Vec<(u64, BigRational)> = points
        .iter()
        .filter_map(|p| p.ordinate.finite().map(|y| (p.abscissa, y.clone())))
        .collect();
    // for repeated abscissae only the lowest point can be on the hull
    pts.sort();
    pts.dedup_by(|later, earlier| later.0 == earlier.0);
    if pts.len() < 2 {
        return Err(Error::DegeneratePolygon);
    }

    let mut hull: Vec<(u64, BigRational)> = Vec::with_capacity(pts.len());
    for p in pts {
        while hull.len() >= 2 {
            let n = hull.len();
            if slope(&hull[n - 2], &hull[n - 1]) >= slope(&hull[n - 2], &p) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }

    let segments = hull
        .windows(2)
        .map(|w| Segment {
            slope: slope(&w[0], &w[1]),
            xspan: w[1].0 - w[0].0,
        })
        .collect();
    Ok(NewtonPolygon {
        vertices: hull,
        segments,
    })
}

/// `k` with `q^k == x`, if any.
pub fn q_log(x: u64, q: u64) -> Option<u32> {
    if x == 0 || q < 2 {
        return None;
    }
    let mut k = 0;
    let mut y = x;
    while y.is_multiple_of(q) {
        y /= q;
        k += 1;
    }
    (y == 1).then_some(k)
}

impl NewtonPolygon {
    pub fn abscissae(&self) -> Vec<u64> {
        self.vertices.iter().map(|v| v.0).collect()
    }

    /// Minus slopes, left to right, so in strictly decreasing order. A
    /// segment from `q^i` to `q^j` contributes multiplicity `j - i`.
    pub fn root_valuations(&self, q: u64) -> Result<Vec<RootVal>, Error> {
        let logs = self
            .vertices
            .iter()
            .map(|v| q_log(v.0, q).ok_or(Error::NotQPower(v.0, q)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self
            .segments
            .iter()
            .zip(logs.windows(2))
            .map(|(s, k)| RootVal {
                ord: -s.slope.clone(),
                mult: k[1] - k[0],
            })
            .collect())
    }
}

/// Convenience wrapper around [`NewtonPolygon::root_valuations`].
pub fn root_valuations(p: &NewtonPolygon, q: u64) -> Result<Vec<RootVal>, Error> {
    p.root_valuations(q)
}

/// Hull of the head points together with the tail point `(0, tail_ord)`.
pub fn tail_hull(head: &[NewtonPoint], tail_ord: &ExtRat) -> Result<NewtonPolygon, Error> {
    if tail_ord.is_infinite() {
        return Err(Error::InfiniteTail);
    }
    let mut pts = Vec::with_capacity(head.len() + 1);
    pts.push(NewtonPoint::new(0, tail_ord.clone()));
    pts.extend(head.iter().cloned());
    lower_hull(&pts)
}

/// Minus the slope of the first segment of [`tail_hull`]: the valuation of
/// the next term of a minimal chain.
pub fn leftmost_slope(head: &[NewtonPoint], tail_ord: &ExtRat) -> Result<ExtRat, Error> {
    let h = tail_hull(head, tail_ord)?;
    Ok(ExtRat::Finite(-h.segments[0].slope.clone()))
}

/// Precomputed head hull for repeated tail queries.
///
/// The hull of `(0, y)` together with the head is `(0, y)` followed by the
/// part of the head hull from the tangent vertex onward, so each query is a
/// scan over the head vertices instead of a fresh hull. Head abscissae must
/// be positive.
#[derive(Clone, Debug)]
pub struct TailTangent {
    vertices: Vec<(u64, BigRational)>,
}

impl TailTangent {
    pub fn new(head: &[NewtonPoint]) -> Self {
        let vertices = match lower_hull(head) {
            Ok(h) => h.vertices,
            // zero or one finite point: nothing to hull
            Err(_) => head
                .iter()
                .filter_map(|p| p.ordinate.finite().map(|y| (p.abscissa, y.clone())))
                .collect(),
        };
        debug_assert!(vertices.iter().all(|v| v.0 > 0));
        TailTangent { vertices }
    }

    /// First slope of the tail hull and the hull's abscissae. Agrees with
    /// [`tail_hull`].
    pub fn query(&self, tail_ord: &ExtRat) -> Result<(BigRational, Vec<u64>), Error> {
        let y0 = tail_ord.finite().ok_or(Error::InfiniteTail)?;
        let mut best: Option<(usize, RawFrac)> = None;
        for (i, (x, y)) in self.vertices.iter().enumerate() {
            let s = RawFrac::sub_div(y, y0, *x);
            // on equal slopes the farther vertex wins
            if best.as_ref().is_none_or(|(_, b)| s <= *b) {
                best = Some((i, s));
            }
        }
        let (j, s) = best.ok_or(Error::DegeneratePolygon)?;
        let xs = std::iter::once(0)
            .chain(self.vertices[j..].iter().map(|v| v.0))
            .collect();
        Ok((s.reduce(), xs))
    }
}
