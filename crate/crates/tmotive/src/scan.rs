//! Grid and random scans over parameter planes, with CSV and SVG output.
//!
//! Every point is evaluated independently, so the scan fans out over a
//! rayon pool when the `parallel` feature is on. Point generation happens
//! up front in a fixed order, which keeps the output identical whichever
//! executor runs it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chains::{h1_probe, ChainKind, GrowthModel};
use crate::coeffs::{check_q, coeff_valuations, q_pow, Form, MatrixOrds};
use crate::exactval::{fmt_rational, rat, ExtRat};
use crate::regions::{
    apex_minus, apex_plus, classify_34, classify_35_q2, classify_uv_34, RegionVerdict, Source, H1,
};
use crate::Error;

pub const MAX_POINTS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Plane {
    /// `x = v`, `y = t`.
    VT,
    /// `x = u`, `y = v`.
    UV,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engines {
    Classifier,
    Simulator,
    Both,
}

impl Engines {
    fn classifier(self) -> bool {
        self != Engines::Simulator
    }
    fn simulator(self) -> bool {
        self != Engines::Classifier
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sampling {
    Grid,
    Random { samples: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Exec {
    Serial,
    #[default]
    Parallel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanSpec {
    pub q: u64,
    pub form: Form,
    pub plane: Plane,
    /// `x` from `bounds[0]` to `bounds[1]`, `y` from `bounds[2]` to `bounds[3]`.
    pub bounds: [BigRational; 4],
    pub step: BigRational,
    pub engines: Engines,
    pub max_iter: usize,
    pub window: usize,
    pub seed: u64,
    pub sampling: Sampling,
}

impl ScanSpec {
    pub fn axes(&self) -> &'static [&'static str] {
        match (self.form, self.plane) {
            (Form::General, _) => &["w11", "w12", "w21", "w22"],
            (_, Plane::VT) => &["v", "t"],
            (_, Plane::UV) => &["u", "v"],
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let bad = |m: &str| Err(Error::Precondition(m.to_string()));
        check_q(self.q)?;
        if !self.step.is_positive() {
            return bad("step must be positive");
        }
        if self.form == Form::General {
            if self.sampling == Sampling::Grid {
                return bad("the general form supports random sampling only");
            }
            if self.plane == Plane::VT {
                return bad("the general form has no (v,t) plane");
            }
        }
        if self.form == Form::Form35 && self.q != 2 && self.engines.classifier() {
            return bad("the form 35 classifier needs q = 2");
        }
        if self.window < 4 || self.max_iter < 2 * self.window {
            return bad("need window >= 4 and max_iter >= 2 * window");
        }
        if let Sampling::Random { samples } = self.sampling {
            if samples as u64 > MAX_POINTS {
                return Err(Error::GridTooLarge(samples as u64, MAX_POINTS));
            }
            for (lo, hi) in [(0, 1), (2, 3)] {
                if self.bounds[lo] > self.bounds[hi] {
                    return bad("random sampling needs ordered bounds");
                }
            }
        }
        Ok(())
    }
}

/// Simulator output for one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimSummary {
    pub kind: ChainKind,
    pub model: Option<GrowthModel>,
    pub verdict: RegionVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub coords: Vec<BigRational>,
    /// Grid position `(ix, iy)`, absent in random mode.
    pub cell: Option<(usize, usize)>,
    pub classifier: Option<RegionVerdict>,
    pub simulator: Option<SimSummary>,
    pub agree: bool,
    pub tie: bool,
    pub hull: String,
}

/// `start + k*step` for every `k` that stays within `[start, end]`.
pub fn axis(start: &BigRational, end: &BigRational, step: &BigRational) -> Vec<BigRational> {
    if start > end {
        return Vec::new();
    }
    let n = ((end - start) / step).floor().to_integer();
    let n = n.to_u64().unwrap_or(u64::MAX);
    (0..=n)
        .map(|k| start + step * BigRational::from_integer(BigInt::from(k)))
        .collect()
}

fn axis_len(start: &BigRational, end: &BigRational, step: &BigRational) -> u64 {
    if start > end {
        return 0;
    }
    ((end - start) / step)
        .floor()
        .to_integer()
        .to_u64()
        .map_or(u64::MAX, |n| n.saturating_add(1))
}

type Point = (Vec<BigRational>, Option<(usize, usize)>);

fn grid_points(s: &ScanSpec) -> Result<Vec<Point>, Error> {
    let [a, b, c, d] = &s.bounds;
    let n = axis_len(a, b, &s.step).saturating_mul(axis_len(c, d, &s.step));
    if n > MAX_POINTS {
        return Err(Error::GridTooLarge(n, MAX_POINTS));
    }
    let xs = axis(a, b, &s.step);
    let ys = axis(c, d, &s.step);
    let mut out = Vec::with_capacity(n as usize);
    for (iy, y) in ys.iter().enumerate() {
        for (ix, x) in xs.iter().enumerate() {
            out.push((vec![x.clone(), y.clone()], Some((ix, iy))));
        }
    }
    Ok(out)
}

/// Uniform-ish rational in `[lo, hi]` with denominator at most 12.
fn sample_rational(
    rng: &mut ChaCha8Rng,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<BigRational, Error> {
    let range_err = || Error::Precondition("sampling bounds are too large".into());
    for _ in 0..64 {
        let den: i64 = rng.gen_range(1..=12);
        let d = BigRational::from_integer(den.into());
        let lo_n = (lo * &d)
            .ceil()
            .to_integer()
            .to_i64()
            .ok_or_else(range_err)?;
        let hi_n = (hi * &d)
            .floor()
            .to_integer()
            .to_i64()
            .ok_or_else(range_err)?;
        if lo_n <= hi_n {
            return Ok(rat(rng.gen_range(lo_n..=hi_n), den));
        }
    }
    Ok(lo.clone())
}

fn random_points(s: &ScanSpec, samples: usize) -> Result<Vec<Point>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let [a, b, c, d] = &s.bounds;
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let coords = if s.form == Form::General {
            let w11 = sample_rational(&mut rng, a, b)?;
            let w12 = sample_rational(&mut rng, a, b)?;
            let w21 = sample_rational(&mut rng, c, d)?;
            let w22 = sample_rational(&mut rng, a, b)?;
            vec![w11, w12, w21, w22]
        } else {
            let x = sample_rational(&mut rng, a, b)?;
            let y = sample_rational(&mut rng, c, d)?;
            vec![x, y]
        };
        out.push((coords, None));
    }
    Ok(out)
}

fn fin(r: &BigRational) -> ExtRat {
    ExtRat::Finite(r.clone())
}

/// Classify and/or simulate one point.
pub fn evaluate_point(
    s: &ScanSpec,
    coords: &[BigRational],
    cell: Option<(usize, usize)>,
) -> Result<ScanRecord, Error> {
    let q = s.q;
    let (classifier, matrix) = match (s.form, s.plane) {
        (Form::General, _) => {
            let [w11, w12, w21, w22] = coords else {
                return Err(Error::Precondition(
                    "general form needs four coordinates".into(),
                ));
            };
            let m = MatrixOrds::general(q, fin(w11), fin(w12), fin(w21), fin(w22))?;
            (RegionVerdict::new(H1::Unknown, Source::Open), m)
        }
        (form, Plane::VT) => {
            let (v, t) = (fin(&coords[0]), fin(&coords[1]));
            // a generic choice of ord a12 for the given ord a2
            let u = fin(&(&coords[1] / q_pow(q, 1)));
            if form == Form::Form34 {
                let c = if s.engines.classifier() {
                    classify_34(q, &v, &t)?
                } else {
                    unknown()
                };
                (c, MatrixOrds::form34(q, u, v, Some(t))?)
            } else {
                let c = if s.engines.classifier() {
                    classify_35_q2(&u, &v, Some(&t))?
                } else {
                    unknown()
                };
                (c, MatrixOrds::form35(q, u, v, Some(t))?)
            }
        }
        (form, Plane::UV) => {
            let (u, v) = (fin(&coords[0]), fin(&coords[1]));
            if form == Form::Form34 {
                let c = if s.engines.classifier() {
                    classify_uv_34(q, &u, &v)?
                } else {
                    unknown()
                };
                (c, MatrixOrds::form34(q, u, v, None)?)
            } else {
                let c = if s.engines.classifier() {
                    classify_35_q2(&u, &v, None)?
                } else {
                    unknown()
                };
                (c, MatrixOrds::form35(q, u, v, None)?)
            }
        }
    };

    let mut rec = ScanRecord {
        coords: coords.to_vec(),
        cell,
        classifier: s.engines.classifier().then_some(classifier),
        simulator: None,
        agree: true,
        tie: false,
        hull: String::new(),
    };
    if s.engines.simulator() {
        let c = coeff_valuations(&matrix)?;
        let p = h1_probe(&c, q, s.max_iter, s.window)?;
        let head: Vec<String> = p.head.abscissae().iter().map(|x| x.to_string()).collect();
        let last = p
            .trace
            .shape(p.trace.last_index())
            .map(|sh| sh.to_string())
            .unwrap_or_default();
        rec.hull = format!("{}|{}", head.join("-"), last);
        rec.tie = p.tie;
        rec.agree = !matches!(
            (rec.classifier.map(|c| c.h1), p.chain.kind),
            (Some(H1::Four), ChainKind::Bounded) | (Some(H1::Zero), ChainKind::Diverges)
        );
        rec.simulator = Some(SimSummary {
            kind: p.chain.kind,
            model: p.chain.model,
            verdict: p.verdict,
        });
    }
    Ok(rec)
}

fn unknown() -> RegionVerdict {
    RegionVerdict::new(H1::Unknown, Source::Open)
}

pub fn run_scan(s: &ScanSpec) -> Result<Vec<ScanRecord>, Error> {
    run_scan_with(s, Exec::default())
}

/// Run a scan on the chosen executor. Without the `parallel` feature both
/// executors run serially.
pub fn run_scan_with(s: &ScanSpec, exec: Exec) -> Result<Vec<ScanRecord>, Error> {
    s.validate()?;
    let points = match s.sampling {
        Sampling::Grid => grid_points(s)?,
        Sampling::Random { samples } => random_points(s, samples)?,
    };
    let eval = |(coords, cell): &Point| evaluate_point(s, coords, *cell);
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            points.par_iter().map(eval).collect()
        }
        _ => points.iter().map(eval).collect(),
    }
}

/// Records with a committed disagreement and no ties.
pub fn disagreements(records: &[ScanRecord]) -> impl Iterator<Item = &ScanRecord> {
    records.iter().filter(|r| !r.agree && !r.tie)
}

fn bool_token(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Header plus one line per record.
pub fn emit_csv(s: &ScanSpec, records: &[ScanRecord]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = s.axes().to_vec();
    header.extend([
        "class",
        "class_source",
        "sim",
        "model",
        "model_params",
        "agree",
        "tie",
        "hull",
    ]);
    w.write_record(&header).expect("write to memory");
    for r in records {
        let mut row: Vec<String> = r.coords.iter().map(fmt_rational).collect();
        match &r.classifier {
            Some(c) => row.extend([c.h1.token().to_string(), c.source.token()]),
            None => row.extend([String::new(), String::new()]),
        }
        match &r.simulator {
            Some(sim) => {
                row.push(sim.kind.token().to_string());
                row.push(sim.model.as_ref().map_or("", |m| m.kind()).to_string());
                row.push(sim.model.as_ref().map(|m| m.params()).unwrap_or_default());
            }
            None => row.extend([String::new(), String::new(), String::new()]),
        }
        row.push(bool_token(r.agree).into());
        row.push(bool_token(r.tie).into());
        row.push(r.hull.clone());
        w.write_record(&row).expect("write to memory");
    }
    w.into_inner().expect("flush to memory")
}

const CELL: i64 = 8;
const LEFT: i64 = 64;
const TOP: i64 = 32;
const LEGEND_W: i64 = 260;

const COLOR_ZERO: &str = "#3b7dd8";
const COLOR_FOUR: &str = "#e8833a";
const COLOR_UNKNOWN: &str = "#d0d0d0";
const COLOR_INDET: &str = "#7a7a7a";
const COLOR_CONFLICT: &str = "#d62728";

fn cell_color(r: &ScanRecord) -> &'static str {
    if !r.agree {
        return COLOR_CONFLICT;
    }
    if let Some(c) = &r.classifier {
        return match c.h1 {
            H1::Zero => COLOR_ZERO,
            H1::Four => COLOR_FOUR,
            H1::Unknown => COLOR_UNKNOWN,
            H1::Indeterminate => COLOR_INDET,
        };
    }
    match r.simulator.as_ref().map(|s| s.kind) {
        Some(ChainKind::Diverges) => COLOR_FOUR,
        Some(ChainKind::Bounded) => COLOR_ZERO,
        _ => COLOR_INDET,
    }
}

/// Fixed-point rendering with three decimals, rounding half away from zero.
pub fn fmt_fixed(r: &BigRational) -> String {
    let scaled = r.abs() * BigRational::from_integer(1000.into());
    let (n, d) = (scaled.numer().clone(), scaled.denom().clone());
    let (quo, rem) = n.div_rem(&d);
    let k = if rem * BigInt::from(2) >= d {
        quo + 1
    } else {
        quo
    };
    let (int_part, frac) = k.div_rem(&BigInt::from(1000));
    let sign = if r.is_negative() && !k.is_zero() {
        "-"
    } else {
        ""
    };
    format!("{sign}{int_part}.{:03}", frac.to_u32().unwrap_or(0))
}

type Pt = (BigRational, BigRational);

/// Clip `p + s*d` for `s` in `[s_min, inf)` (or all reals when `s_min` is
/// `None`) to the box. Exact Liang-Barsky.
fn clip(p: &Pt, d: &Pt, s_min: Option<BigRational>, lo: &Pt, hi: &Pt) -> Option<(Pt, Pt)> {
    let mut s0 = s_min;
    let mut s1: Option<BigRational> = None;
    for (pc, dc, l, h) in [(&p.0, &d.0, &lo.0, &hi.0), (&p.1, &d.1, &lo.1, &hi.1)] {
        if dc.is_zero() {
            if pc < l || pc > h {
                return None;
            }
            continue;
        }
        let a = (l - pc) / dc;
        let b = (h - pc) / dc;
        let (enter, exit) = if a < b { (a, b) } else { (b, a) };
        s0 = Some(match s0 {
            Some(x) if x > enter => x,
            _ => enter,
        });
        s1 = Some(match s1 {
            Some(x) if x < exit => x,
            _ => exit,
        });
    }
    let (s0, s1) = (s0?, s1?);
    if s0 > s1 {
        return None;
    }
    let at = |s: &BigRational| (&p.0 + &d.0 * s, &p.1 + &d.1 * s);
    Some((at(&s0), at(&s1)))
}

struct Overlay {
    label: &'static str,
    start: Pt,
    dir: Pt,
    ray: bool,
    style: &'static str,
}

fn overlays(s: &ScanSpec) -> Vec<Overlay> {
    let q = s.q;
    let one = || rat(1, 1);
    let zero = || rat(0, 1);
    let qq = q_pow(q, 1);
    let q2 = q_pow(q, 2);
    let edge = "stroke=\"#000\" stroke-width=\"1.5\"";
    let highlight = "stroke=\"#b00020\" stroke-width=\"3\"";
    let dashed = "stroke=\"#000\" stroke-width=\"1\" stroke-dasharray=\"4 3\"";
    match (s.form, s.plane) {
        (Form::Form34, Plane::VT) => {
            let vm = apex_minus(q);
            let vp = apex_plus(q);
            let along = (&vp.0 - &vm.0, &vp.1 - &vm.1);
            vec![
                Overlay {
                    label: "lower angle",
                    start: vm.clone(),
                    dir: (-one(), one()),
                    ray: true,
                    style: edge,
                },
                Overlay {
                    label: "lower angle",
                    start: vm.clone(),
                    dir: (zero(), one()),
                    ray: true,
                    style: edge,
                },
                Overlay {
                    label: "upper angle",
                    start: vp.clone(),
                    dir: (one(), -q2.clone()),
                    ray: true,
                    style: edge,
                },
                Overlay {
                    label: "upper angle",
                    start: vp.clone(),
                    dir: (zero(), one()),
                    ray: true,
                    style: edge,
                },
                Overlay {
                    label: "line through both apexes",
                    start: vm,
                    dir: along,
                    ray: false,
                    style: dashed,
                },
            ]
        }
        (_, Plane::UV) => {
            let c = -&qq / (&qq + one());
            let o = (c.clone(), c);
            let r3bar = apex_plus(q);
            let (vm, _) = apex_minus(q);
            let r2bar = (vm, one() / (&qq - one()));
            vec![
                Overlay {
                    label: "R1",
                    start: o.clone(),
                    dir: (one(), zero()),
                    ray: true,
                    style: edge,
                },
                Overlay {
                    label: "R2",
                    start: o.clone(),
                    dir: (one(), -qq.clone()),
                    ray: true,
                    style: edge,
                },
                Overlay {
                    label: "R3",
                    start: o,
                    dir: (-qq.clone(), one()),
                    ray: true,
                    style: edge,
                },
                Overlay {
                    label: "R2bar",
                    start: r2bar,
                    dir: (-qq.clone(), one()),
                    ray: true,
                    style: highlight,
                },
                Overlay {
                    label: "R3bar",
                    start: r3bar,
                    dir: (one(), -qq),
                    ray: true,
                    style: highlight,
                },
            ]
        }
        _ => Vec::new(),
    }
}

/// Static SVG map of a grid scan.
pub fn emit_region_map(s: &ScanSpec, records: &[ScanRecord]) -> Result<String, Error> {
    if s.sampling != Sampling::Grid || records.iter().any(|r| r.cell.is_none()) {
        return Err(Error::Precondition("region maps need grid records".into()));
    }
    let [a, b, c, d] = &s.bounds;
    let nx = axis(a, b, &s.step).len() as i64;
    let ny = axis(c, d, &s.step).len() as i64;
    let width = LEFT + nx * CELL + 16 + LEGEND_W;
    let height = (TOP + ny * CELL + 48).max(TOP + 260);
    let axes = s.axes();

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#fff\"/>"
    );
    let _ = writeln!(
        out,
        "<text x=\"{LEFT}\" y=\"20\" font-family=\"monospace\" font-size=\"12\">q={} form {} plane ({},{}) step {}</text>",
        s.q,
        s.form,
        axes[0],
        axes[1],
        fmt_rational(&s.step)
    );

    let _ = writeln!(out, "<g shape-rendering=\"crispEdges\">");
    for r in records {
        let (ix, iy) = r.cell.expect("checked above");
        let x = LEFT + ix as i64 * CELL;
        let y = TOP + (ny - 1 - iy as i64) * CELL;
        let _ = writeln!(
            out,
            "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{}\"/>",
            cell_color(r)
        );
    }
    let _ = writeln!(out, "</g>");

    if nx > 0 && ny > 0 {
        let half = &s.step / rat(2, 1);
        let x_top = a + &s.step * BigRational::from_integer((nx - 1).into());
        let y_top = c + &s.step * BigRational::from_integer((ny - 1).into());
        let lo = (a - &half, c - &half);
        let hi = (&x_top + &half, &y_top + &half);
        let cell = BigRational::from_integer(CELL.into());
        let px = |p: &Pt| {
            let x = BigRational::from_integer(LEFT.into()) + (&p.0 - &lo.0) / &s.step * &cell;
            let y = BigRational::from_integer(TOP.into()) + (&hi.1 - &p.1) / &s.step * &cell;
            (fmt_fixed(&x), fmt_fixed(&y))
        };
        let _ = writeln!(out, "<g fill=\"none\">");
        for o in overlays(s) {
            let s_min = o.ray.then(|| rat(0, 1));
            if let Some((p0, p1)) = clip(&o.start, &o.dir, s_min, &lo, &hi) {
                let (x1, y1) = px(&p0);
                let (x2, y2) = px(&p1);
                let _ = writeln!(
                    out,
                    "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" {}><title>{}</title></line>",
                    o.style, o.label
                );
            }
        }
        let _ = writeln!(out, "</g>");
        let fy = TOP + ny * CELL + 14;
        let _ = writeln!(
            out,
            "<text x=\"{LEFT}\" y=\"{fy}\" font-family=\"monospace\" font-size=\"10\">{}: {} .. {}   {}: {} .. {}</text>",
            axes[0],
            fmt_rational(a),
            fmt_rational(&x_top),
            axes[1],
            fmt_rational(c),
            fmt_rational(&y_top)
        );
    }

    let lx = LEFT + nx * CELL + 16;
    let mut ly = TOP;
    let swatches = [
        (COLOR_ZERO, "h1 = 0 (or bounded chain)"),
        (COLOR_FOUR, "h1 = 4 (or divergent chain)"),
        (COLOR_UNKNOWN, "unknown"),
        (COLOR_INDET, "indeterminate"),
        (COLOR_CONFLICT, "disagreement"),
    ];
    for (color, label) in swatches {
        let _ = writeln!(
            out,
            "<rect x=\"{lx}\" y=\"{ly}\" width=\"10\" height=\"10\" fill=\"{color}\"/><text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\">{label}</text>",
            lx + 16,
            ly + 9
        );
        ly += 16;
    }
    let sources: BTreeSet<String> = records
        .iter()
        .flat_map(|r| {
            r.classifier
                .iter()
                .map(|c| c.source.token())
                .chain(r.simulator.iter().map(|s| s.verdict.source.token()))
        })
        .collect();
    ly += 8;
    let _ = writeln!(
        out,
        "<text x=\"{lx}\" y=\"{ly}\" font-family=\"monospace\" font-size=\"11\">sources:</text>"
    );
    for src in sources {
        ly += 14;
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{ly}\" font-family=\"monospace\" font-size=\"10\">{src}</text>",
            lx + 8
        );
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axes_are_exact() {
        let xs = axis(&rat(-1, 1), &rat(0, 1), &rat(1, 3));
        assert_eq!(xs, vec![rat(-1, 1), rat(-2, 3), rat(-1, 3), rat(0, 1)]);
        assert!(axis(&rat(1, 1), &rat(0, 1), &rat(1, 3)).is_empty());
        assert_eq!(axis(&rat(0, 1), &rat(0, 1), &rat(1, 3)).len(), 1);
    }

    #[test]
    fn fixed_decimals() {
        assert_eq!(fmt_fixed(&rat(1, 3)), "0.333");
        assert_eq!(fmt_fixed(&rat(-2, 3)), "-0.667");
        assert_eq!(fmt_fixed(&rat(1, 2000)), "0.001");
        assert_eq!(fmt_fixed(&rat(-1, 4000)), "0.000");
        assert_eq!(fmt_fixed(&rat(12, 1)), "12.000");
    }

    #[test]
    fn clipping() {
        let lo = (rat(0, 1), rat(0, 1));
        let hi = (rat(10, 1), rat(10, 1));
        let seg = clip(
            &(rat(5, 1), rat(5, 1)),
            &(rat(1, 1), rat(1, 1)),
            Some(rat(0, 1)),
            &lo,
            &hi,
        );
        assert_eq!(
            seg,
            Some(((rat(5, 1), rat(5, 1)), (rat(10, 1), rat(10, 1))))
        );
        let line = clip(
            &(rat(5, 1), rat(5, 1)),
            &(rat(1, 1), rat(0, 1)),
            None,
            &lo,
            &hi,
        );
        assert_eq!(
            line,
            Some(((rat(0, 1), rat(5, 1)), (rat(10, 1), rat(5, 1))))
        );
        let miss = clip(
            &(rat(20, 1), rat(5, 1)),
            &(rat(1, 1), rat(0, 1)),
            Some(rat(0, 1)),
            &lo,
            &hi,
        );
        assert_eq!(miss, None);
    }
}
