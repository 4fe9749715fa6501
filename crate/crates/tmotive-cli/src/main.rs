use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use tmotive::chains::{DEFAULT_MAX_ITER, DEFAULT_WINDOW};
use tmotive::exactval::{fmt_rational, parse_rational, ExtRat};
use tmotive::scan::{disagreements, Engines, Exec, Plane, Sampling};
use tmotive::{
    case_table_35_q2, classify_34, classify_35_q2, classify_uv_34, coeff_valuations, dual_params,
    emit_csv, emit_region_map, h1_probe, run_scan_with, Error, Form, MatrixOrds, RegionVerdict,
    ScanSpec,
};

/// Exact h1 classifier and chain simulator for rank-4, dimension-2
/// t-motives. Rationals are written `p/q`, infinity as `inf`.
#[derive(Parser)]
#[command(name = "tmotive", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed-form region verdict at one point.
    Classify(PointArgs),
    /// Run the minimal chain at one point.
    Probe(ProbeArgs),
    /// Image of a point under the duality chart.
    Dual(DualArgs),
    /// Catalogued Newton polygon case of a form 35 point (q = 2).
    CaseTable(PointArgs),
    /// Sweep a plane; CSV by default.
    Scan(ScanArgs),
    /// Sweep a grid and draw the region map as SVG.
    Map(ScanArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    #[value(name = "34")]
    F34,
    #[value(name = "35")]
    F35,
    General,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Form {
        match f {
            FormArg::F34 => Form::Form34,
            FormArg::F35 => Form::Form35,
            FormArg::General => Form::General,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PlaneArg {
    Vt,
    Uv,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Classifier,
    Simulator,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Svg,
}

fn ext(s: &str) -> Result<ExtRat, String> {
    s.parse::<ExtRat>().map_err(|e| e.to_string())
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long, value_enum, default_value = "34")]
    form: FormArg,
    /// ord a12
    #[arg(long, value_parser = ext, allow_hyphen_values = true)]
    u: Option<ExtRat>,
    /// ord a21
    #[arg(long, value_parser = ext, allow_hyphen_values = true)]
    v: ExtRat,
    /// ord a2, overriding the generic minimum
    #[arg(long, value_parser = ext, allow_hyphen_values = true)]
    t: Option<ExtRat>,
}

#[derive(Args)]
struct ProbeArgs {
    #[command(flatten)]
    point: PointArgs,
    /// ord a11 and ord a22, general form only
    #[arg(long, value_parser = ext, allow_hyphen_values = true)]
    w11: Option<ExtRat>,
    #[arg(long, value_parser = ext, allow_hyphen_values = true)]
    w22: Option<ExtRat>,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    window: usize,
    /// Chain values to print.
    #[arg(long, default_value_t = 8)]
    show: usize,
}

#[derive(Args)]
struct DualArgs {
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long, value_parser = ext, allow_hyphen_values = true)]
    v: ExtRat,
    #[arg(long, value_parser = ext, allow_hyphen_values = true)]
    t: ExtRat,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long, value_enum, default_value = "34")]
    form: FormArg,
    #[arg(long, value_enum, default_value = "vt")]
    plane: PlaneArg,
    /// xmin,xmax,ymin,ymax
    #[arg(long, allow_hyphen_values = true, default_value = "-8,4,-20,20")]
    bounds: String,
    #[arg(long, default_value = "1")]
    step: String,
    #[arg(long, value_enum, default_value = "both")]
    engine: EngineArg,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    window: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random sampling with this many points instead of a grid.
    #[arg(long)]
    samples: Option<usize>,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Exit with status 3 if an untied point disagrees.
    #[arg(long)]
    check: bool,
    /// Run on one thread.
    #[arg(long)]
    serial: bool,
}

enum Fail {
    Pre(String),
    Disagree(usize),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Pre(e.to_string())
    }
}

fn verdict_line(r: &RegionVerdict) -> String {
    format!(
        "h1={} source={} boundary={}",
        r.h1.token(),
        r.source,
        r.boundary
    )
}

fn need_u(p: &PointArgs) -> Result<&ExtRat, Fail> {
    p.u.as_ref()
        .ok_or_else(|| Fail::Pre("--u is required here".into()))
}

fn classify(p: &PointArgs) -> Result<String, Fail> {
    let r = match (p.form, &p.u, &p.t) {
        (FormArg::F34, None, Some(t)) => classify_34(p.q, &p.v, t)?,
        (FormArg::F34, Some(u), None) => classify_uv_34(p.q, u, &p.v)?,
        (FormArg::F34, _, _) => {
            return Err(Fail::Pre(
                "form 34 takes --v with exactly one of --u, --t".into(),
            ))
        }
        (FormArg::F35, _, t) => {
            if p.q != 2 {
                return Err(Fail::Pre("the form 35 classifier needs q = 2".into()));
            }
            classify_35_q2(need_u(p)?, &p.v, t.as_ref())?
        }
        (FormArg::General, _, _) => {
            return Err(Fail::Pre("no classifier for the general form".into()))
        }
    };
    Ok(verdict_line(&r))
}

fn matrix(a: &ProbeArgs) -> Result<MatrixOrds, Fail> {
    let p = &a.point;
    let t = p.t.clone();
    Ok(match p.form {
        FormArg::F34 => {
            // with only t given, take the generic u = t/q
            let u = match (&p.u, &t) {
                (Some(u), _) => u.clone(),
                (None, Some(ExtRat::Finite(t))) => {
                    ExtRat::Finite(t / BigRational::from_integer(p.q.into()))
                }
                (None, _) => return Err(Fail::Pre("form 34 needs --u or a finite --t".into())),
            };
            MatrixOrds::form34(p.q, u, p.v.clone(), t)?
        }
        FormArg::F35 => MatrixOrds::form35(p.q, need_u(p)?.clone(), p.v.clone(), t)?,
        FormArg::General => {
            let w = |x: &Option<ExtRat>, n: &str| {
                x.clone()
                    .ok_or_else(|| Fail::Pre(format!("--{n} is required")))
            };
            let mut m = MatrixOrds::general(
                p.q,
                w(&a.w11, "w11")?,
                need_u(p)?.clone(),
                p.v.clone(),
                w(&a.w22, "w22")?,
            )?;
            m.t_override = t;
            m
        }
    })
}

fn probe(a: &ProbeArgs) -> Result<String, Fail> {
    let m = matrix(a)?;
    let c = coeff_valuations(&m)?;
    let p = h1_probe(&c, m.q, a.max_iter, a.window)?;
    let mut out = String::new();
    let head: Vec<String> = p
        .head
        .vertices
        .iter()
        .map(|(x, y)| format!("({x},{})", fmt_rational(y)))
        .collect();
    out += &format!("head {}\n", head.join(" "));
    let ords: Vec<String> = p
        .initial
        .iter()
        .map(|r| format!("{}x{}", fmt_rational(&r.ord), r.mult))
        .collect();
    out += &format!("initial {}\n", ords.join(" "));
    let n = a.show.min(p.trace.last_index());
    for i in 0..=n {
        let shape = p
            .trace
            .shape(i)
            .map(|s| s.to_string())
            .unwrap_or_else(|| "start".into());
        let tie = if p.trace.tie_steps.contains(&i) {
            " tie"
        } else {
            ""
        };
        out += &format!("v{i} = {}  {shape}{tie}\n", fmt_rational(p.trace.value(i)));
    }
    let model = match &p.chain.model {
        Some(m) => format!("{} {}", m.kind(), m.params()),
        None => "none".into(),
    };
    out += &format!(
        "chain={} model={model} note={:?} window={}..={}\n",
        p.chain.kind.token(),
        p.chain.note,
        p.chain.witness.start(),
        p.chain.witness.end()
    );
    out += &format!("{} tie={}", verdict_line(&p.verdict), p.tie);
    Ok(out)
}

fn dual(a: &DualArgs) -> Result<String, Fail> {
    let (v, t) = dual_params(a.q, &a.v, &a.t)?;
    Ok(format!("v={v} t={t}"))
}

fn case_table(p: &PointArgs) -> Result<String, Fail> {
    let ev = case_table_35_q2(need_u(p)?, &p.v, p.t.as_ref())?;
    let vx: Vec<String> = ev
        .vertices
        .iter()
        .map(|(x, y)| format!("({x},{})", fmt_rational(y)))
        .collect();
    let ords: Vec<String> = ev
        .ords
        .iter()
        .map(|r| format!("{}x{}", fmt_rational(&r.ord), r.mult))
        .collect();
    Ok(format!(
        "case {}\nvertices {}\nords {}",
        ev.case_id,
        vx.join(" "),
        ords.join(" ")
    ))
}

fn spec_of(a: &ScanArgs) -> Result<ScanSpec, Fail> {
    let parts: Vec<&str> = a.bounds.split(',').map(str::trim).collect();
    let [x0, x1, y0, y1] = parts[..] else {
        return Err(Fail::Pre(
            "--bounds takes four comma-separated rationals".into(),
        ));
    };
    let bounds = [
        parse_rational(x0)?,
        parse_rational(x1)?,
        parse_rational(y0)?,
        parse_rational(y1)?,
    ];
    Ok(ScanSpec {
        q: a.q,
        form: a.form.into(),
        plane: match a.plane {
            PlaneArg::Vt => Plane::VT,
            PlaneArg::Uv => Plane::UV,
        },
        bounds,
        step: parse_rational(&a.step)?,
        engines: match a.engine {
            EngineArg::Classifier => Engines::Classifier,
            EngineArg::Simulator => Engines::Simulator,
            EngineArg::Both => Engines::Both,
        },
        max_iter: a.max_iter,
        window: a.window,
        seed: a.seed,
        sampling: match a.samples {
            Some(samples) => Sampling::Random { samples },
            None => Sampling::Grid,
        },
    })
}

fn scan(a: &ScanArgs, default: FormatArg) -> Result<(), Fail> {
    let s = spec_of(a)?;
    let exec = if a.serial {
        Exec::Serial
    } else {
        Exec::Parallel
    };
    let recs = run_scan_with(&s, exec)?;
    let bytes = match a.format.unwrap_or(default) {
        FormatArg::Csv => emit_csv(&s, &recs),
        FormatArg::Svg => emit_region_map(&s, &recs)?.into_bytes(),
    };
    let io = |e: std::io::Error| Fail::Pre(e.to_string());
    match &a.out {
        Some(path) => std::fs::write(path, &bytes).map_err(io)?,
        None => std::io::stdout().write_all(&bytes).map_err(io)?,
    }
    let bad = disagreements(&recs).count();
    if a.check && bad > 0 {
        return Err(Fail::Disagree(bad));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match &cli.cmd {
        Cmd::Classify(p) => classify(p),
        Cmd::Probe(p) => probe(p),
        Cmd::Dual(d) => dual(d),
        Cmd::CaseTable(p) => case_table(p),
        Cmd::Scan(a) => scan(a, FormatArg::Csv).map(|_| String::new()),
        Cmd::Map(a) => scan(a, FormatArg::Svg).map(|_| String::new()),
    };
    match text {
        Ok(t) => {
            if !t.is_empty() {
                println!("{t}");
            }
            ExitCode::SUCCESS
        }
        Err(Fail::Pre(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Disagree(n)) => {
            eprintln!("{n} untied point(s) disagree");
            ExitCode::from(3)
        }
    }
}
