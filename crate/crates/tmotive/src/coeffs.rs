//! Valuations of the coefficients of the affine equation attached to a
//! 2x2 matrix of valuations.
//!
//! Every coefficient is a sum of monomials in the matrix entries. Its
//! valuation is taken as the minimum over the valuations of those
//! monomials; when the minimum is attained twice cancellation is possible
//! and the value is only a lower bound, which is recorded in `ties`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use crate::exactval::{er_add, er_scale, min_with_tie, ExtRat};
use crate::newton::NewtonPoint;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// Zero diagonal.
    Form34,
    /// `ord a11 = -1`, `a22 = 0`.
    Form35,
    /// All four entries free.
    General,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Form34 => "34",
            Form::Form35 => "35",
            Form::General => "general",
        })
    }
}

/// Valuations of the matrix entries. `w12` is usually called `u` and `w21`
/// is `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOrds {
    pub q: u64,
    pub form: Form,
    pub w11: ExtRat,
    pub w12: ExtRat,
    pub w21: ExtRat,
    pub w22: ExtRat,
    /// Replaces the min-of-terms value of `ord a2` when a jump is modelled.
    pub t_override: Option<ExtRat>,
}

/// True when `q` is a prime power `>= 2`.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut r = q;
            while r.is_multiple_of(p) {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

pub fn check_q(q: u64) -> Result<(), Error> {
    if is_prime_power(q) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("q = {q} is not a prime power")))
    }
}

impl MatrixOrds {
    pub fn form34(q: u64, u: ExtRat, v: ExtRat, t_override: Option<ExtRat>) -> Result<Self, Error> {
        MatrixOrds {
            q,
            form: Form::Form34,
            w11: ExtRat::Infinity,
            w12: u,
            w21: v,
            w22: ExtRat::Infinity,
            t_override,
        }
        .validated()
    }

    pub fn form35(q: u64, u: ExtRat, v: ExtRat, t_override: Option<ExtRat>) -> Result<Self, Error> {
        MatrixOrds {
            q,
            form: Form::Form35,
            w11: ExtRat::int(-1),
            w12: u,
            w21: v,
            w22: ExtRat::Infinity,
            t_override,
        }
        .validated()
    }

    pub fn general(
        q: u64,
        w11: ExtRat,
        w12: ExtRat,
        w21: ExtRat,
        w22: ExtRat,
    ) -> Result<Self, Error> {
        MatrixOrds {
            q,
            form: Form::General,
            w11,
            w12,
            w21,
            w22,
            t_override: None,
        }
        .validated()
    }

    /// Check the form invariants.
    pub fn validated(self) -> Result<Self, Error> {
        check_q(self.q)?;
        self.w21.expect_finite("ord a21")?;
        match self.form {
            Form::Form34 if self.w11.is_finite() || self.w22.is_finite() => {
                Err(Error::Precondition("form 34 has a zero diagonal".into()))
            }
            Form::Form35 if self.w11 != ExtRat::int(-1) || self.w22.is_finite() => Err(
                Error::Precondition("form 35 needs ord a11 = -1 and a22 = 0".into()),
            ),
            _ => Ok(self),
        }
    }

    pub fn v(&self) -> &BigRational {
        self.w21.finite().expect("validated: w21 is finite")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coeff {
    A0,
    A1,
    A2,
    A3,
    A4,
    B12,
    B13,
    B14,
    B24,
}

impl Coeff {
    pub const ALL: [Coeff; 9] = [
        Coeff::A0,
        Coeff::A1,
        Coeff::A2,
        Coeff::A3,
        Coeff::A4,
        Coeff::B12,
        Coeff::B13,
        Coeff::B14,
        Coeff::B24,
    ];

    pub fn is_head(self) -> bool {
        matches!(
            self,
            Coeff::A0 | Coeff::A1 | Coeff::A2 | Coeff::A3 | Coeff::A4
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Coeff::A0 => "a0",
            Coeff::A1 => "a1",
            Coeff::A2 => "a2",
            Coeff::A3 => "a3",
            Coeff::A4 => "a4",
            Coeff::B12 => "b12",
            Coeff::B13 => "b13",
            Coeff::B14 => "b14",
            Coeff::B24 => "b24",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffVals {
    pub a0: ExtRat,
    pub a1: ExtRat,
    pub a2: ExtRat,
    pub a3: ExtRat,
    pub a4: ExtRat,
    pub b12: ExtRat,
    pub b13: ExtRat,
    pub b14: ExtRat,
    pub b24: ExtRat,
    /// Coefficients whose value is only a lower bound.
    pub ties: BTreeSet<Coeff>,
}

impl CoeffVals {
    pub fn get(&self, c: Coeff) -> &ExtRat {
        match c {
            Coeff::A0 => &self.a0,
            Coeff::A1 => &self.a1,
            Coeff::A2 => &self.a2,
            Coeff::A3 => &self.a3,
            Coeff::A4 => &self.a4,
            Coeff::B12 => &self.b12,
            Coeff::B13 => &self.b13,
            Coeff::B14 => &self.b14,
            Coeff::B24 => &self.b24,
        }
    }

    pub fn head_tied(&self) -> bool {
        self.ties.iter().any(|c| c.is_head())
    }
}

pub(crate) fn q_pow(q: u64, k: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(q).pow(k))
}

fn q_int(q: u64) -> BigRational {
    q_pow(q, 1)
}

/// `c * x` for a positive rational `c`; never fails.
fn sc(c: &BigRational, x: &ExtRat) -> ExtRat {
    er_scale(x, c).expect("positive scale factor")
}

fn fin(r: BigRational) -> ExtRat {
    ExtRat::Finite(r)
}

pub fn coeff_valuations(m: &MatrixOrds) -> Result<CoeffVals, Error> {
    check_q(m.q)?;
    let v = m.w21.expect_finite("ord a21")?.clone();
    let q = q_int(m.q);
    let q2 = q_pow(m.q, 2);
    let q3 = q_pow(m.q, 3);
    let (w11, w12, w22) = (&m.w11, &m.w12, &m.w22);

    let a4 = vec![fin(-(&q3 + &q2) - &q2 * &v)];
    let a3 = vec![
        er_add(&sc(&q2, w11), &fin(-&q2 - &q2 * &v)),
        er_add(&sc(&q, w22), &fin(-&q2 - &q * &v)),
    ];
    let a2 = vec![
        fin(-&q - &v),
        fin(-&q2 - &q2 * &v),
        er_add(&er_add(&sc(&q, w11), &sc(&q, w22)), &fin(-&q * &v)),
        sc(&q, w12),
    ];
    let a1 = vec![
        er_add(w11, &fin(-v.clone())),
        er_add(&sc(&q, w22), &fin(-&q * &v)),
    ];
    let a0 = vec![fin(-v.clone())];
    let b14 = vec![fin(-&q3 - &q2 * &v), fin(-&q2 - &q2 * &v)];
    let b13 = vec![
        er_add(&sc(&q2, w11), &fin(-&q2 * &v)),
        er_add(&sc(&q, w22), &fin(-&q * &v)),
    ];
    let b12 = vec![fin(-v.clone()), fin(-&q2 * &v)];
    let b24 = vec![fin(-&q2 * &v)];

    let mut ties = BTreeSet::new();
    let mut pick = |c: Coeff, terms: &[ExtRat]| {
        let (x, tie) = min_with_tie(terms);
        if tie {
            ties.insert(c);
        }
        x
    };
    let mut out = CoeffVals {
        a0: pick(Coeff::A0, &a0),
        a1: pick(Coeff::A1, &a1),
        a2: pick(Coeff::A2, &a2),
        a3: pick(Coeff::A3, &a3),
        a4: pick(Coeff::A4, &a4),
        b12: pick(Coeff::B12, &b12),
        b13: pick(Coeff::B13, &b13),
        b14: pick(Coeff::B14, &b14),
        b24: pick(Coeff::B24, &b24),
        ties,
    };
    if let Some(t) = &m.t_override {
        out.a2 = t.clone();
        out.ties.remove(&Coeff::A2);
    }
    Ok(out)
}

/// The five head points `(q^k, ord a_k)`, infinite ones included.
pub fn head_points(c: &CoeffVals, q: u64) -> Vec<NewtonPoint> {
    [&c.a0, &c.a1, &c.a2, &c.a3, &c.a4]
        .into_iter()
        .enumerate()
        .map(|(k, y)| NewtonPoint::new(q.pow(k as u32), y.clone()))
        .collect()
}

/// Where the three candidate terms for `ord a2` put a point of the
/// `(u, v)` plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UvDomain {
    /// `-q - v` strictly smallest.
    D12,
    /// `-q^2 - q^2 v` strictly smallest.
    D13,
    /// `q u` strictly smallest.
    D23,
    /// The first two tie below the third.
    R1,
    /// The first and third tie below the second.
    R2,
    /// The second and third tie below the first.
    R3,
    /// All three equal, at `u = v = -q/(q+1)`.
    Vertex,
}

impl UvDomain {
    pub fn is_open(self) -> bool {
        matches!(self, UvDomain::D12 | UvDomain::D13 | UvDomain::D23)
    }

    pub fn name(self) -> &'static str {
        match self {
            UvDomain::D12 => "D12",
            UvDomain::D13 => "D13",
            UvDomain::D23 => "D23",
            UvDomain::R1 => "R1",
            UvDomain::R2 => "R2",
            UvDomain::R3 => "R3",
            UvDomain::Vertex => "vertex",
        }
    }
}

/// The three competing terms of `ord a2` when the diagonal is ignored.
pub fn a2_terms(q: u64, u: &ExtRat, v: &BigRational) -> [ExtRat; 3] {
    let qq = q_int(q);
    let q2 = q_pow(q, 2);
    [fin(-&qq - v), fin(-&q2 - &q2 * v), sc(&qq, u)]
}

pub fn uv_domain(q: u64, u: &ExtRat, v: &ExtRat) -> Result<UvDomain, Error> {
    check_q(q)?;
    u.expect_finite("u")?;
    let v = v.expect_finite("v")?;
    let [t1, t2, t3] = a2_terms(q, u, v);
    let m = t1.clone().min(t2.clone()).min(t3.clone());
    Ok(match (t1 == m, t2 == m, t3 == m) {
        (true, false, false) => UvDomain::D12,
        (false, true, false) => UvDomain::D13,
        (false, false, true) => UvDomain::D23,
        (true, true, false) => UvDomain::R1,
        (true, false, true) => UvDomain::R2,
        (false, true, true) => UvDomain::R3,
        _ => UvDomain::Vertex,
    })
}
