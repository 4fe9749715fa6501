//! Simple minimal sequences and their growth.
//!
//! Starting from the valuation `v0` of one initial term, each further
//! valuation is the leftmost slope of the head polygon joined with the tail
//! point `(0, g_i)`, where `g_i` is the minimum of the tail terms built from
//! the two previous valuations. The resulting values are lower bounds for a
//! minimal solution, so a sequence that tends to `+inf` certifies that the
//! solution is small.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::coeffs::{head_points, Coeff, CoeffVals};
use crate::exactval::{fmt_rational, ExtRat, RawFrac};
use crate::newton::{lower_hull, NewtonPolygon, RootVal, TailTangent};
use crate::regions::{RegionVerdict, Source, H1};
use crate::Error;

pub const DEFAULT_MAX_ITER: usize = 64;
pub const DEFAULT_WINDOW: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TailTerm {
    B14,
    B13,
    B12,
    B24,
}

impl TailTerm {
    fn coeff(self) -> Coeff {
        match self {
            TailTerm::B14 => Coeff::B14,
            TailTerm::B13 => Coeff::B13,
            TailTerm::B12 => Coeff::B12,
            TailTerm::B24 => Coeff::B24,
        }
    }
}

/// Hull type of one step: the tail term that won the minimum and the
/// vertex abscissae of the polygon with the tail point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepShape {
    pub term: TailTerm,
    pub vertices: Vec<u64>,
}

impl fmt::Display for StepShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self.vertices.iter().map(|x| x.to_string()).collect();
        write!(f, "{}:{}", self.term.coeff().name(), xs.join("-"))
    }
}

/// `seq[k]` holds `v_{k+1}`; `hull_types[k]` is the shape of the step that
/// produced it (`None` for seeded values). `tie_steps` holds chain indices
/// `i >= 1` whose tail minimum was attained twice or came from a
/// coefficient that is itself only a lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTrace {
    pub start: ExtRat,
    pub seq: Vec<BigRational>,
    pub hull_types: Vec<Option<StepShape>>,
    pub tie_steps: BTreeSet<usize>,
}

impl ChainTrace {
    /// `v_i`, with `v_0` the start.
    pub fn value(&self, i: usize) -> &BigRational {
        if i == 0 {
            self.start.finite().expect("finite start")
        } else {
            &self.seq[i - 1]
        }
    }

    /// Index of the last computed value.
    pub fn last_index(&self) -> usize {
        self.seq.len()
    }

    pub fn shape(&self, i: usize) -> Option<&StepShape> {
        self.hull_types.get(i.checked_sub(1)?)?.as_ref()
    }
}

/// One step of the recursion: `v_i` from `v_{i-1}` and, if present,
/// `v_{i-2}`. Returns the value, its shape, and the tie flag.
pub fn chain_step(
    c: &CoeffVals,
    q: u64,
    head: &TailTangent,
    prev: &BigRational,
    prev2: Option<&BigRational>,
) -> Result<(BigRational, StepShape, bool), Error> {
    // candidates stay unreduced until the minimum is known
    let lift = |b: &ExtRat, k: u32, x: &BigRational| {
        b.finite()
            .map(|b| RawFrac::add_scaled(b, &BigInt::from(q).pow(k), x))
    };
    let mut terms = vec![
        (TailTerm::B14, lift(&c.b14, 4, prev)),
        (TailTerm::B13, lift(&c.b13, 3, prev)),
        (TailTerm::B12, lift(&c.b12, 2, prev)),
    ];
    if let Some(p2) = prev2 {
        terms.push((TailTerm::B24, lift(&c.b24, 4, p2)));
    }
    let g = terms
        .iter()
        .filter_map(|t| t.1.as_ref())
        .min()
        .cloned()
        .ok_or(Error::InfiniteTail)?;
    let winners: Vec<TailTerm> = terms
        .iter()
        .filter(|t| t.1.as_ref() == Some(&g))
        .map(|t| t.0)
        .collect();
    let tie = winners.len() > 1 || winners.iter().any(|t| c.ties.contains(&t.coeff()));
    let g = ExtRat::Finite(g.reduce());
    let (slope, vertices) = head.query(&g)?;
    Ok((
        -slope,
        StepShape {
            term: winners[0],
            vertices,
        },
        tie,
    ))
}

/// Run the recursion from `prefix` (`v_0`, optionally `v_1`) up to index
/// `max_iter`.
pub fn minimal_sequence_from(
    c: &CoeffVals,
    q: u64,
    prefix: &[BigRational],
    max_iter: usize,
) -> Result<ChainTrace, Error> {
    if prefix.is_empty() || prefix.len() > 2 {
        return Err(Error::Precondition(
            "chain prefix must hold one or two values".into(),
        ));
    }
    let head = TailTangent::new(&head_points(c, q));
    let mut trace = ChainTrace {
        start: ExtRat::Finite(prefix[0].clone()),
        seq: prefix[1..].to_vec(),
        hull_types: vec![None; prefix.len() - 1],
        tie_steps: BTreeSet::new(),
    };
    for i in prefix.len()..=max_iter {
        let prev2 = (i >= 2).then(|| trace.value(i - 2).clone());
        let (v, shape, tie) = chain_step(c, q, &head, trace.value(i - 1), prev2.as_ref())?;
        trace.seq.push(v);
        trace.hull_types.push(Some(shape));
        if tie {
            trace.tie_steps.insert(i);
        }
    }
    Ok(trace)
}

pub fn minimal_sequence(
    c: &CoeffVals,
    q: u64,
    start: &ExtRat,
    max_iter: usize,
) -> Result<ChainTrace, Error> {
    let s = start.expect_finite("chain start")?;
    minimal_sequence_from(c, q, std::slice::from_ref(s), max_iter)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    Diverges,
    Bounded,
    Indeterminate,
}

impl ChainKind {
    pub fn token(self) -> &'static str {
        match self {
            ChainKind::Diverges => "DIV",
            ChainKind::Bounded => "BOUND",
            ChainKind::Indeterminate => "INDET",
        }
    }
}

/// `Linear`: `v_i = alpha + beta*i`. `Exponential`: `v_i = alpha + beta*gamma^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthModel {
    Linear {
        alpha: BigRational,
        beta: BigRational,
    },
    Exponential {
        alpha: BigRational,
        beta: BigRational,
        gamma: BigRational,
    },
}

impl GrowthModel {
    pub fn kind(&self) -> &'static str {
        match self {
            GrowthModel::Linear { .. } => "linear",
            GrowthModel::Exponential { .. } => "exp",
        }
    }

    /// Parameters separated by `;`.
    pub fn params(&self) -> String {
        match self {
            GrowthModel::Linear { alpha, beta } => {
                format!("{};{}", fmt_rational(alpha), fmt_rational(beta))
            }
            GrowthModel::Exponential { alpha, beta, gamma } => format!(
                "{};{};{}",
                fmt_rational(alpha),
                fmt_rational(beta),
                fmt_rational(gamma)
            ),
        }
    }

    pub fn eval(&self, i: usize) -> BigRational {
        let i_r = BigRational::from_integer(i.into());
        match self {
            GrowthModel::Linear { alpha, beta } => alpha + beta * i_r,
            GrowthModel::Exponential { alpha, beta, gamma } => {
                alpha + beta * gamma.clone().pow(i as i32)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainVerdict {
    pub kind: ChainKind,
    pub model: Option<GrowthModel>,
    /// Chain indices of the window the verdict rests on.
    pub witness: RangeInclusive<usize>,
    pub note: &'static str,
}

/// Fit the last `window` values exactly.
///
/// Ties inside the window block a `Bounded` verdict, since the true values
/// could be larger than the recorded lower bounds, but they do not block
/// `Diverges`: a lower bound that tends to infinity is still conclusive.
pub fn classify_chain(t: &ChainTrace, window: usize) -> Result<ChainVerdict, Error> {
    if window < 4 {
        return Err(Error::Precondition("window must be at least 4".into()));
    }
    let n = t.last_index();
    if n < 2 * window {
        return Err(Error::Precondition(format!(
            "trace has {n} steps, need at least {}",
            2 * window
        )));
    }
    let k = n + 1 - window;
    let witness = k..=n;
    let verdict = |kind, model, note| ChainVerdict {
        kind,
        model,
        witness: witness.clone(),
        note,
    };

    let shapes: Vec<_> = witness.clone().map(|i| t.shape(i)).collect();
    if shapes.iter().any(|s| s.is_none() || *s != shapes[0]) {
        return Ok(verdict(
            ChainKind::Indeterminate,
            None,
            "hull type not stable",
        ));
    }
    let tied = witness.clone().any(|i| t.tie_steps.contains(&i));
    let bounded = |model, note| {
        if tied {
            verdict(ChainKind::Indeterminate, Some(model), "tie in window")
        } else {
            verdict(ChainKind::Bounded, Some(model), note)
        }
    };

    let vals: Vec<&BigRational> = witness.clone().map(|i| t.value(i)).collect();
    let d: Vec<BigRational> = vals.windows(2).map(|w| w[1] - w[0]).collect();
    let k_r = BigRational::from_integer(k.into());

    if d.iter().all(|x| *x == d[0]) {
        let beta = d[0].clone();
        let model = GrowthModel::Linear {
            alpha: vals[0] - &beta * &k_r,
            beta: beta.clone(),
        };
        return Ok(if beta.is_positive() {
            verdict(ChainKind::Diverges, Some(model), "linear growth")
        } else if beta.is_zero() {
            bounded(model, "constant")
        } else {
            verdict(ChainKind::Indeterminate, Some(model), "linear decrease")
        });
    }
    if d.iter().any(|x| x.is_zero()) {
        return Ok(verdict(ChainKind::Indeterminate, None, "no exact fit"));
    }
    let r: Vec<BigRational> = d.windows(2).map(|w| &w[1] / &w[0]).collect();
    if !r.iter().all(|x| *x == r[0]) || !r[0].is_positive() {
        return Ok(verdict(ChainKind::Indeterminate, None, "no exact fit"));
    }
    let gamma = r[0].clone();
    let gk = gamma.clone().pow(k as i32);
    let beta = &d[0] / (&gk * (&gamma - BigRational::one()));
    let model = GrowthModel::Exponential {
        alpha: vals[0] - &beta * &gk,
        beta: beta.clone(),
        gamma: gamma.clone(),
    };
    Ok(if gamma > BigRational::one() && beta.is_positive() {
        verdict(ChainKind::Diverges, Some(model), "exponential growth")
    } else if gamma < BigRational::one() {
        bounded(model, "geometric convergence")
    } else {
        verdict(
            ChainKind::Indeterminate,
            Some(model),
            "exponential decrease",
        )
    })
}

/// Everything a probe found out about one coefficient set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub verdict: RegionVerdict,
    pub chain: ChainVerdict,
    pub trace: ChainTrace,
    pub head: NewtonPolygon,
    pub initial: Vec<RootVal>,
    /// A coefficient tie in the head, or a tie at some chain step.
    pub tie: bool,
}

/// Run the chain from the smallest initial valuation and translate its
/// growth into a verdict. Only divergence is conclusive.
pub fn h1_probe(c: &CoeffVals, q: u64, max_iter: usize, window: usize) -> Result<Probe, Error> {
    let head = lower_hull(&head_points(c, q))?;
    let initial = head.root_valuations(q)?;
    let start = initial
        .last()
        .map(|r| ExtRat::Finite(r.ord.clone()))
        .ok_or(Error::DegeneratePolygon)?;
    let trace = minimal_sequence(c, q, &start, max_iter)?;
    let chain = classify_chain(&trace, window)?;
    let head_tied = c.head_tied();
    let verdict = if head_tied {
        RegionVerdict::new(H1::Indeterminate, Source::HeadTie)
    } else {
        match chain.kind {
            ChainKind::Diverges => RegionVerdict::new(H1::Four, Source::DivergentChain),
            ChainKind::Bounded => RegionVerdict::new(H1::Indeterminate, Source::BoundedChain),
            ChainKind::Indeterminate => {
                RegionVerdict::new(H1::Indeterminate, Source::UndecidedChain)
            }
        }
    };
    Ok(Probe {
        verdict,
        chain,
        tie: head_tied || !trace.tie_steps.is_empty(),
        trace,
        head,
        initial,
    })
}
