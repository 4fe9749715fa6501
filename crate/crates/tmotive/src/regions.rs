//! Closed-form classifiers for h1.
//!
//! * [`classify_34`]: zero-diagonal matrices in the `(v, t)` plane, where
//!   `h1 = 0` exactly on two closed angles.
//! * [`classify_uv_34`]: the same family in the `(u, v)` plane, where `t` is
//!   induced by the domain unless the point sits on a ray.
//! * [`classify_35_q2`]: the `ord a11 = -1` family at `q = 2`, where only
//!   some regions are settled.
//! * [`case_table_35_q2`]: the Newton polygon case table for that family.
//!
//! A verdict of 0 or 4 is only returned where a proved statement covers the
//! point. Everything else is `Unknown` or `Indeterminate`.

use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use serde::Deserialize;

use crate::coeffs::{a2_terms, check_q, q_pow, UvDomain};
use crate::exactval::{fmt_rational, min_with_tie, parse_rational, rat, ExtRat};
use crate::newton::RootVal;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H1 {
    Zero,
    Four,
    Unknown,
    Indeterminate,
}

impl H1 {
    pub fn token(self) -> &'static str {
        match self {
            H1::Zero => "0",
            H1::Four => "4",
            H1::Unknown => "UNKNOWN",
            H1::Indeterminate => "INDET",
        }
    }
}

/// The two distinguished subrays of the `(u, v)` plane on which `h1`
/// depends on the exact value of `ord a2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subray {
    /// Part of R3 with `v >= 1/(q-1)`.
    R2Bar,
    /// Part of R2 with `v <= -q^2/(q-1)`.
    R3Bar,
}

/// Why a verdict was given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    /// Inside or outside the two angles.
    Angles,
    /// Angles test with `t` induced by an open `(u, v)` domain.
    InducedAngles(UvDomain),
    /// On a ray (or the vertex) but off the subrays.
    Ray(UvDomain),
    SubrayStart(Subray),
    Subray(Subray),
    /// `D13`, `v >= 0`.
    D13Upper,
    /// `D13`, `-2/3 < v <= 0`.
    D13Lower,
    /// `D12`, `v >= -4/3`.
    D12Upper,
    /// `D12`, `v <= -4/3`.
    D12Lower,
    /// `D23`, `v <= -4/3` and `-2u-4 <= v <= -2u-3`.
    D23Band,
    /// Jump with `v >= 2` above the line `t = -16v/7 - 24/7`.
    JumpHigh,
    /// `0 <= v < 2` above the same line.
    JumpMid,
    /// `-4/3 < v < -1/3`, `t >= -4v - 6`.
    JumpLow,
    /// On a ray with no value of `ord a2` supplied.
    RayWithoutT,
    Open,
    DivergentChain,
    BoundedChain,
    UndecidedChain,
    HeadTie,
}

impl Source {
    pub fn token(self) -> String {
        let s = match self {
            Source::Angles => "angles",
            Source::InducedAngles(d) => return format!("angles/{}", d.name()),
            Source::Ray(d) => return format!("ray-{}", d.name()),
            Source::SubrayStart(Subray::R2Bar) => "initial-point-R2bar",
            Source::SubrayStart(Subray::R3Bar) => "initial-point-R3bar",
            Source::Subray(Subray::R2Bar) => "subray-R2bar",
            Source::Subray(Subray::R3Bar) => "subray-R3bar",
            Source::D13Upper => "D13:v>=0",
            Source::D13Lower => "D13:-2/3<v<=0",
            Source::D12Upper => "D12:v>=-4/3",
            Source::D12Lower => "D12:v<=-4/3",
            Source::D23Band => "D23:band",
            Source::JumpHigh => "jump:v>=2",
            Source::JumpMid => "jump:0<=v<2",
            Source::JumpLow => "jump:-4/3<v<-1/3",
            Source::RayWithoutT => "ray-no-t",
            Source::Open => "open",
            Source::DivergentChain => "divergent-chain",
            Source::BoundedChain => "bounded-chain",
            Source::UndecidedChain => "undecided-chain",
            Source::HeadTie => "head-tie",
        };
        s.to_string()
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RegionVerdict {
    pub h1: H1,
    pub source: Source,
    pub boundary: bool,
}

impl RegionVerdict {
    pub fn new(h1: H1, source: Source) -> Self {
        RegionVerdict {
            h1,
            source,
            boundary: false,
        }
    }

    pub fn on_boundary(mut self, b: bool) -> Self {
        self.boundary = b;
        self
    }
}

fn qr(q: u64) -> BigRational {
    q_pow(q, 1)
}

/// `(-q^2/(q-1), q^2/(q-1))`, apex of the lower angle.
pub fn apex_minus(q: u64) -> (BigRational, BigRational) {
    let x = q_pow(q, 2) / (qr(q) - q_pow(q, 0));
    (-x.clone(), x)
}

/// `(1/(q-1), -q^2/(q-1))`, apex of the upper angle.
pub fn apex_plus(q: u64) -> (BigRational, BigRational) {
    let d = qr(q) - q_pow(q, 0);
    (q_pow(q, 0) / &d, -q_pow(q, 2) / d)
}

/// Zero-diagonal family in the `(v, t)` plane.
pub fn classify_34(q: u64, v: &ExtRat, t: &ExtRat) -> Result<RegionVerdict, Error> {
    check_q(q)?;
    let v = v.expect_finite("v")?;
    let (vm, _) = apex_minus(q);
    let (vp, _) = apex_plus(q);
    let lower_edge = ExtRat::Finite(-v.clone());
    let upper_edge = ExtRat::Finite(-(q_pow(q, 2) * v));

    if *t >= lower_edge && *v <= vm {
        let b = *t == lower_edge || *v == vm;
        return Ok(RegionVerdict::new(H1::Zero, Source::Angles).on_boundary(b));
    }
    if *t >= upper_edge && *v >= vp {
        let b = *t == upper_edge || *v == vp;
        return Ok(RegionVerdict::new(H1::Zero, Source::Angles).on_boundary(b));
    }
    Ok(RegionVerdict::new(H1::Four, Source::Angles))
}

/// Domain of a point from the three `ord a2` terms; `u` may be infinite.
fn domain_of(terms: &[ExtRat; 3]) -> UvDomain {
    let m = terms.iter().min().expect("three terms");
    match (terms[0] == *m, terms[1] == *m, terms[2] == *m) {
        (true, false, false) => UvDomain::D12,
        (false, true, false) => UvDomain::D13,
        (false, false, true) => UvDomain::D23,
        (true, true, false) => UvDomain::R1,
        (true, false, true) => UvDomain::R2,
        (false, true, true) => UvDomain::R3,
        _ => UvDomain::Vertex,
    }
}

/// Zero-diagonal family in the `(u, v)` plane.
pub fn classify_uv_34(q: u64, u: &ExtRat, v: &ExtRat) -> Result<RegionVerdict, Error> {
    check_q(q)?;
    u.expect_finite("u")?;
    let vf = v.expect_finite("v")?;
    let terms = a2_terms(q, u, vf);
    let domain = domain_of(&terms);
    let (vm, _) = apex_minus(q);
    let (vp, _) = apex_plus(q);
    let ray = |s: Source| RegionVerdict::new(H1::Indeterminate, s).on_boundary(true);
    match domain {
        UvDomain::D12 | UvDomain::D13 | UvDomain::D23 => {
            let t = terms.iter().min().expect("three terms").clone();
            let mut r = classify_34(q, v, &t)?;
            r.source = Source::InducedAngles(domain);
            Ok(r)
        }
        UvDomain::R2 if *vf <= vm => Ok(ray(if *vf == vm {
            Source::SubrayStart(Subray::R3Bar)
        } else {
            Source::Subray(Subray::R3Bar)
        })),
        UvDomain::R3 if *vf >= vp => Ok(ray(if *vf == vp {
            Source::SubrayStart(Subray::R2Bar)
        } else {
            Source::Subray(Subray::R2Bar)
        })),
        d => Ok(RegionVerdict::new(H1::Four, Source::Ray(d)).on_boundary(true)),
    }
}

/// The duality chart: `(v, t) -> (-qv - q, 2qv + t/q + q)`, defined on the
/// closed region `v >= 1/(q-1)`, `-q^2 v <= t <= -v - q`.
pub fn dual_params(q: u64, v: &ExtRat, t: &ExtRat) -> Result<(ExtRat, ExtRat), Error> {
    check_q(q)?;
    let v = v.expect_finite("v")?;
    let t = t.expect_finite("t")?;
    let qq = qr(q);
    let (vp, _) = apex_plus(q);
    let inside = *v >= vp && *t >= -(q_pow(q, 2) * v) && *t <= -v - &qq;
    if !inside {
        return Err(Error::OutsideDualityChart);
    }
    let v2 = -(&qq * v) - &qq;
    let t2 = rat(2, 1) * &qq * v + t / &qq + &qq;
    Ok((ExtRat::Finite(v2), ExtRat::Finite(t2)))
}

/// Effective data of a form 35 point.
struct Plane35 {
    v: BigRational,
    t: ExtRat,
    domain: UvDomain,
    jump: bool,
}

/// `None` when the point is on a ray and no `t` was supplied.
fn plane35(u: &ExtRat, v: &ExtRat, t_override: Option<&ExtRat>) -> Result<Option<Plane35>, Error> {
    let vf = v.expect_finite("v")?.clone();
    let terms = a2_terms(2, u, &vf);
    let (m, tied) = min_with_tie(&terms);
    let jump = match t_override {
        None => false,
        Some(t) => tied || *t != m,
    };
    if tied && !jump {
        return Ok(None);
    }
    Ok(Some(Plane35 {
        v: vf,
        t: t_override.cloned().unwrap_or(m),
        domain: domain_of(&terms),
        jump,
    }))
}

/// `ord a11 = -1` family at `q = 2`.
///
/// Without `t_override`, `ord a2` is the min of its terms. With it, the
/// override is the value of `ord a2`; if it differs from that min, or the
/// min is tied, a jump is modelled and only the `(v, t)` statements apply.
pub fn classify_35_q2(
    u: &ExtRat,
    v: &ExtRat,
    t_override: Option<&ExtRat>,
) -> Result<RegionVerdict, Error> {
    let Some(p) = plane35(u, v, t_override)? else {
        return Ok(RegionVerdict::new(H1::Indeterminate, Source::RayWithoutT).on_boundary(true));
    };
    let v = &p.v;
    let t = &p.t;
    let ge = |a: &ExtRat, b: BigRational| *a >= ExtRat::Finite(b);
    let eq = |a: &ExtRat, b: BigRational| *a == ExtRat::Finite(b);
    let slant = || rat(-16, 7) * v - rat(24, 7);

    if *v >= rat(2, 1) && ge(t, slant()) {
        let b = *v == rat(2, 1) || eq(t, slant());
        return Ok(RegionVerdict::new(H1::Zero, Source::JumpHigh).on_boundary(b));
    }
    let four = |s: Source, b: bool| Ok(RegionVerdict::new(H1::Four, s).on_boundary(b));
    if !p.jump {
        match p.domain {
            UvDomain::D13 if *v >= rat(0, 1) => return four(Source::D13Upper, *v == rat(0, 1)),
            UvDomain::D13 => return four(Source::D13Lower, false),
            UvDomain::D12 if *v >= rat(-4, 3) => return four(Source::D12Upper, *v == rat(-4, 3)),
            UvDomain::D12 => return four(Source::D12Lower, false),
            UvDomain::D23 => {
                let uu = u.expect_finite("u")?;
                let lo = rat(-2, 1) * uu - rat(4, 1);
                let hi = rat(-2, 1) * uu - rat(3, 1);
                if *v <= rat(-4, 3) && lo <= *v && *v <= hi {
                    let b = *v == rat(-4, 3) || *v == lo || *v == hi;
                    return four(Source::D23Band, b);
                }
            }
            _ => {}
        }
    }
    if *v >= rat(0, 1) && *v < rat(2, 1) && ge(t, slant()) {
        return four(Source::JumpMid, *v == rat(0, 1) || eq(t, slant()));
    }
    if *v > rat(-4, 3) && *v < rat(-1, 3) && ge(t, rat(-4, 1) * v - rat(6, 1)) {
        return four(Source::JumpLow, eq(t, rat(-4, 1) * v - rat(6, 1)));
    }
    Ok(RegionVerdict::new(H1::Unknown, Source::Open))
}

/// `cv*v + ct*t + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub cv: BigRational,
    pub ct: BigRational,
    pub c: BigRational,
}

impl Affine {
    pub fn eval(&self, v: &BigRational, t: &BigRational) -> BigRational {
        &self.cv * v + &self.ct * t + &self.c
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = rat(0, 1);
        let mut parts = Vec::new();
        for (k, name) in [(&self.cv, "v"), (&self.ct, "t")] {
            if *k != zero {
                parts.push(format!("{}*{}", fmt_rational(k), name));
            }
        }
        if self.c != zero || parts.is_empty() {
            parts.push(fmt_rational(&self.c));
        }
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Le,
    Gt,
    Ge,
}

/// `lhs(v, t) cmp rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub lhs: Affine,
    pub cmp: Cmp,
    pub rhs: BigRational,
}

impl Constraint {
    /// Test with the constraint tightened by `margin` (0 for the exact test).
    pub fn holds_with_margin(
        &self,
        v: &BigRational,
        t: &BigRational,
        margin: &BigRational,
    ) -> bool {
        let x = self.lhs.eval(v, t);
        match self.cmp {
            Cmp::Lt => x < &self.rhs - margin,
            Cmp::Le => x <= &self.rhs - margin,
            Cmp::Gt => x > &self.rhs + margin,
            Cmp::Ge => x >= &self.rhs + margin,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseVertex {
    pub x: u64,
    pub y: Affine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOrd {
    pub ord: Affine,
    pub mult: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseDomain {
    D12,
    D13,
    D23,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRow {
    pub id: String,
    pub domain: CaseDomain,
    /// Union of conjunctions.
    pub region: Vec<Vec<Constraint>>,
    pub vertices: Vec<CaseVertex>,
    pub ords: Vec<CaseOrd>,
}

impl CaseRow {
    pub fn contains_with_margin(
        &self,
        v: &BigRational,
        t: &BigRational,
        margin: &BigRational,
    ) -> bool {
        self.region
            .iter()
            .any(|conj| conj.iter().all(|c| c.holds_with_margin(v, t, margin)))
    }

    pub fn contains(&self, v: &BigRational, t: &BigRational) -> bool {
        self.contains_with_margin(v, t, &rat(0, 1))
    }

    pub fn eval(&self, v: &BigRational, t: &BigRational) -> CaseEval {
        CaseEval {
            case_id: self.id.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|p| (p.x, p.y.eval(v, t)))
                .collect(),
            ords: self
                .ords
                .iter()
                .map(|o| RootVal {
                    ord: o.ord.eval(v, t),
                    mult: o.mult,
                })
                .collect(),
        }
    }
}

/// A case row instantiated at a point. `ords` keep the listed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseEval {
    pub case_id: String,
    pub vertices: Vec<(u64, BigRational)>,
    pub ords: Vec<RootVal>,
}

/// Expand `(ord, mult)` pairs and sort descending, for multiset comparison.
pub fn ord_multiset(ords: &[RootVal]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = ords
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.ord.clone(), r.mult as usize))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[derive(Deserialize)]
struct RawAffine {
    #[serde(default)]
    v: Option<String>,
    #[serde(default)]
    t: Option<String>,
    #[serde(default)]
    c: Option<String>,
}

#[derive(Deserialize)]
struct RawVertex {
    x: u64,
    #[serde(flatten)]
    y: RawAffine,
}

#[derive(Deserialize)]
struct RawOrd {
    #[serde(flatten)]
    ord: RawAffine,
    #[serde(default = "one")]
    mult: u32,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
struct RawRow {
    id: String,
    domain: String,
    region: Vec<Vec<[String; 4]>>,
    vertices: Vec<RawVertex>,
    ords: Vec<RawOrd>,
}

#[derive(Deserialize)]
struct RawTable {
    case: Vec<RawRow>,
}

fn opt_rat(s: &Option<String>) -> Result<BigRational, Error> {
    s.as_deref()
        .map(parse_rational)
        .unwrap_or_else(|| Ok(rat(0, 1)))
}

fn cook_affine(a: &RawAffine) -> Result<Affine, Error> {
    Ok(Affine {
        cv: opt_rat(&a.v)?,
        ct: opt_rat(&a.t)?,
        c: opt_rat(&a.c)?,
    })
}

fn cook_row(r: &RawRow) -> Result<CaseRow, Error> {
    let bad = |what: &str| Error::Precondition(format!("catalogue row {}: bad {what}", r.id));
    let domain = match r.domain.as_str() {
        "D12" => CaseDomain::D12,
        "D13" => CaseDomain::D13,
        "D23" => CaseDomain::D23,
        _ => return Err(bad("domain")),
    };
    let region = r
        .region
        .iter()
        .map(|conj| {
            conj.iter()
                .map(|[cv, ct, op, rhs]| {
                    let cmp = match op.as_str() {
                        "<" => Cmp::Lt,
                        "<=" => Cmp::Le,
                        ">" => Cmp::Gt,
                        ">=" => Cmp::Ge,
                        _ => return Err(bad("comparison")),
                    };
                    Ok(Constraint {
                        lhs: Affine {
                            cv: parse_rational(cv)?,
                            ct: parse_rational(ct)?,
                            c: rat(0, 1),
                        },
                        cmp,
                        rhs: parse_rational(rhs)?,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let vertices = r
        .vertices
        .iter()
        .map(|p| {
            Ok(CaseVertex {
                x: p.x,
                y: cook_affine(&p.y)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let ords = r
        .ords
        .iter()
        .map(|o| {
            Ok(CaseOrd {
                ord: cook_affine(&o.ord)?,
                mult: o.mult,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(CaseRow {
        id: r.id.clone(),
        domain,
        region,
        vertices,
        ords,
    })
}

/// Parse a catalogue in the format of the bundled table.
pub fn parse_catalogue(text: &str) -> Result<Vec<CaseRow>, Error> {
    let raw: RawTable =
        toml::from_str(text).map_err(|e| Error::Precondition(format!("catalogue: {e}")))?;
    raw.case.iter().map(cook_row).collect()
}

pub const CATALOGUE_TOML: &str = include_str!("../data/catalogue.toml");

/// The bundled case table.
pub fn catalogue() -> &'static [CaseRow] {
    static ROWS: OnceLock<Vec<CaseRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_catalogue(CATALOGUE_TOML).expect("bundled catalogue parses"))
}

/// Look up the case of a form 35 point at `q = 2` and instantiate it.
pub fn case_table_35_q2(
    u: &ExtRat,
    v: &ExtRat,
    t_override: Option<&ExtRat>,
) -> Result<CaseEval, Error> {
    let p = plane35(u, v, t_override)?
        .ok_or_else(|| Error::Precondition("ord a2 is undetermined on a ray; supply t".into()))?;
    let want = match (p.jump, p.domain) {
        (true, _) | (false, UvDomain::D23) => CaseDomain::D23,
        (false, UvDomain::D12) => CaseDomain::D12,
        (false, UvDomain::D13) => CaseDomain::D13,
        _ => return Err(Error::Uncatalogued),
    };
    let t = p.t.finite().ok_or(Error::Uncatalogued)?;
    catalogue()
        .iter()
        .find(|row| row.domain == want && row.contains(&p.v, t))
        .map(|row| row.eval(&p.v, t))
        .ok_or(Error::Uncatalogued)
}
