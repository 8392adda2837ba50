//! Exact arithmetic in `Q(ζ_N) = Q[x]/(Φ_N)`.

mod series;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub use series::{exp_series, todd_factor_series, Laurent};

use crate::arith::{fmt_rat, frac, gcd_u64, rat_int, Int, Rat};
use crate::{Error, Result};

/// `Φ_N` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<Int> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<Int>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![Int::zero(); n as usize + 1];
    num[0] = Int::from(-1);
    num[n as usize] = Int::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

/// Exact quotient of integer polynomials by a monic divisor.
fn divide_monic(num: &[Int], den: &[Int]) -> Vec<Int> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![Int::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd_u64(k, n) == 1).count() as u64
}

fn moebius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// The field `Q(ζ_N)`, shared between its elements.
pub struct CyclotomicField {
    conductor: u64,
    /// `Φ_N` as rationals, lowest degree first; monic.
    modulus: Vec<Rat>,
    /// `Tr(ζ^k)` for `0 ≤ k < φ(N)` (Ramanujan sums).
    traces: Vec<Rat>,
}

impl CyclotomicField {
    pub fn get(conductor: u64) -> Arc<CyclotomicField> {
        static FIELDS: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
        let fields = FIELDS.get_or_init(Default::default);
        if let Some(f) = fields.lock().unwrap().get(&conductor) {
            return f.clone();
        }
        let modulus: Vec<Rat> = cyclotomic_polynomial(conductor).iter().map(rat_int).collect();
        let phi = euler_phi(conductor);
        let traces = (0..phi)
            .map(|k| {
                let m = conductor / gcd_u64(k, conductor);
                Rat::from_integer(Int::from(moebius(m) * (phi / euler_phi(m)) as i64))
            })
            .collect();
        let field = Arc::new(CyclotomicField { conductor, modulus, traces });
        fields.lock().unwrap().insert(conductor, field.clone());
        field
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut p: Vec<Rat>) -> Vec<Rat> {
        let d = self.degree();
        for i in (d..p.len()).rev() {
            let c = std::mem::replace(&mut p[i], Rat::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                if !self.modulus[j].is_zero() {
                    p[i - d + j] -= &c * &self.modulus[j];
                }
            }
        }
        p.resize(d, Rat::zero());
        p
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ζ_{})", self.conductor)
    }
}

/// An element of `Q(ζ_N)` in the power basis `1, ζ, …, ζ^{φ(N)-1}`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn from_rational(q: Rat, conductor: u64) -> Self {
        let field = CyclotomicField::get(conductor);
        let mut coeffs = vec![Rat::zero(); field.degree()];
        coeffs[0] = q;
        Cyclotomic { field, coeffs }
    }

    pub fn rational(q: Rat) -> Self {
        Self::from_rational(q, 1)
    }

    pub fn zero_in(conductor: u64) -> Self {
        Self::from_rational(Rat::zero(), conductor)
    }

    pub fn one_in(conductor: u64) -> Self {
        Self::from_rational(Rat::one(), conductor)
    }

    /// `ζ_N^k`.
    pub fn zeta_power(k: u64, conductor: u64) -> Self {
        let field = CyclotomicField::get(conductor);
        let k = (k % conductor) as usize;
        let mut p = vec![Rat::zero(); k.max(field.degree()) + 1];
        p[k] = Rat::one();
        let coeffs = field.reduce(p);
        Cyclotomic { field, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rat> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Field trace down to `Q`, the sum of all Galois conjugates.
    pub fn trace(&self) -> Rat {
        self.coeffs.iter().zip(&self.field.traces).map(|(a, t)| a * t).sum()
    }

    /// Trace from `Q(ζ_M)` down to `Q`, for `M` a multiple of the conductor.
    pub fn trace_over(&self, conductor: u64) -> Rat {
        let n = self.conductor();
        assert!(conductor.is_multiple_of(n), "Q(ζ_{n}) is not a subfield of Q(ζ_{conductor})");
        let ratio = euler_phi(conductor) / euler_phi(n);
        self.trace() * Rat::from_integer(Int::from(ratio))
    }

    /// Image under `Q(ζ_N) ⊂ Q(ζ_M)`, `ζ_N ↦ ζ_M^{M/N}`.
    pub fn embed(&self, conductor: u64) -> Result<Self> {
        let n = self.conductor();
        if conductor == n {
            return Ok(self.clone());
        }
        if !conductor.is_multiple_of(n) {
            return Err(Error::ConductorMismatch { phase: format!("{self:?}"), conductor });
        }
        let field = CyclotomicField::get(conductor);
        let step = (conductor / n) as usize;
        let mut p = vec![Rat::zero(); (self.coeffs.len() - 1) * step + field.degree().max(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[k * step] = c.clone();
        }
        let coeffs = field.reduce(p);
        Ok(Cyclotomic { field, coeffs })
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let (a, b) = (self.conductor(), other.conductor());
        if a == b {
            return (self.clone(), other.clone());
        }
        if a == 1 {
            return (Self::from_rational(self.coeffs[0].clone(), b), other.clone());
        }
        if b == 1 {
            return (self.clone(), Self::from_rational(other.coeffs[0].clone(), a));
        }
        let m = a.lcm(&b);
        (self.embed(m).expect("lcm"), other.embed(m).expect("lcm"))
    }

    pub fn scale(&self, q: &Rat) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(q.recip(), self.conductor()));
        }
        // extended Euclid: s·a + t·Φ = g, with g a nonzero constant
        let mut r0 = trim(self.field.modulus.clone());
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rat> = vec![];
        let mut s1: Vec<Rat> = vec![Rat::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = trim(poly_sub(&s0, &poly_mul(&q, &s1)));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let g = r1[0].recip();
        let p: Vec<Rat> = s1.iter().map(|c| c * &g).collect();
        let mut padded = p;
        padded.resize(padded.len().max(self.field.degree()), Rat::zero());
        let coeffs = self.field.reduce(padded);
        Ok(Cyclotomic { field: self.field.clone(), coeffs })
    }
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// Division with remainder; `b` must be trimmed and nonzero.
fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead = b[db].recip();
    let mut q = vec![Rat::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    (trim(q), trim(r))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_rat(c),
                _ => format!("{}·ζ{}^{}", fmt_rat(c), self.conductor(), k),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic { field: a.field, coeffs }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Cyclotomic { field: a.field, coeffs }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        if a.field.degree() == 1 {
            return Cyclotomic { coeffs: vec![&a.coeffs[0] * &b.coeffs[0]], field: a.field };
        }
        let coeffs = a.field.reduce(poly_mul(&a.coeffs, &b.coeffs));
        Cyclotomic { field: a.field, coeffs }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// `e^{2πi q}` in `Q(ζ_N)`; the denominator of `q` must divide `N`.
pub fn root_of_unity(q: &Rat, conductor: u64) -> Result<Cyclotomic> {
    let scaled = frac(q) * rat_int(&Int::from(conductor));
    if !scaled.is_integer() {
        return Err(Error::ConductorMismatch { phase: fmt_rat(q), conductor });
    }
    let k = scaled.to_integer().to_u64().expect("reduced exponent fits");
    Ok(Cyclotomic::zeta_power(k, conductor))
}

/// The rational value of `x`, or `NotRational`.
pub fn rationality_check(x: &Cyclotomic) -> Result<Rat> {
    x.to_rational().ok_or_else(|| Error::NotRational(format!("{x:?}")))
}
