use std::fmt;

use num_traits::{One, Zero};

use super::Cyclotomic;
use crate::arith::{factorial, rat_int, Rat};
use crate::{Error, Result};

/// A truncated Laurent series `Σ_{k=low}^{high} c_k t^k` over `Q(ζ_N)`.
///
/// Coefficients above `high` are unknown, not zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<Cyclotomic>,
    conductor: u64,
}

impl Laurent {
    /// Builds `Σ coeffs[j] t^{low + j}`; `coeffs` must not be empty.
    pub fn new(low: i64, coeffs: Vec<Cyclotomic>) -> Self {
        assert!(!coeffs.is_empty(), "empty series window");
        let conductor = coeffs.iter().map(Cyclotomic::conductor).fold(1, num_integer::lcm);
        Laurent { low, coeffs, conductor }
    }

    pub fn from_rationals(low: i64, coeffs: Vec<Rat>) -> Self {
        Self::new(low, coeffs.into_iter().map(Cyclotomic::rational).collect())
    }

    /// The constant `c` known up to `t^high`.
    pub fn constant(c: Cyclotomic, high: i64) -> Self {
        let conductor = c.conductor();
        let mut coeffs = vec![Cyclotomic::zero_in(conductor); (high + 1).max(1) as usize];
        coeffs[0] = c;
        Laurent { low: 0, coeffs, conductor }
    }

    /// The zero series known on `[low, high]`.
    pub fn zero(low: i64, high: i64) -> Self {
        Laurent::new(low, vec![Cyclotomic::zero_in(1); (high - low + 1).max(1) as usize])
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `t^k`. Zero below the window; panics above it.
    pub fn coefficient(&self, k: i64) -> Cyclotomic {
        assert!(k <= self.high(), "coefficient t^{k} is beyond the truncation t^{}", self.high());
        if k < self.low {
            Cyclotomic::zero_in(self.conductor)
        } else {
            self.coeffs[(k - self.low) as usize].clone()
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { low: self.low + k, coeffs: self.coeffs.clone(), conductor: self.conductor }
    }

    /// Drops coefficients above `high`.
    pub fn truncate(&self, high: i64) -> Self {
        let keep = (high - self.low + 1).clamp(1, self.coeffs.len() as i64) as usize;
        Laurent { low: self.low, coeffs: self.coeffs[..keep].to_vec(), conductor: self.conductor }
    }

    pub fn add(&self, other: &Self) -> Self {
        let low = self.low.min(other.low);
        let high = self.high().min(other.high());
        let coeffs = (low..=high).map(|k| &self.coefficient(k) + &other.coefficient(k)).collect();
        Laurent::new(low, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect(), conductor: self.conductor }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Laurent::new(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_rational(&self, q: &Rat) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x.scale(q)).collect(), conductor: self.conductor }
    }

    /// Product; the result is known up to `min(h1 + l2, h2 + l1)`.
    pub fn mul(&self, other: &Self) -> Self {
        let low = self.low + other.low;
        let high = (self.high() + other.low).min(other.high() + self.low);
        let len = (high - low + 1) as usize;
        let conductor = num_integer::lcm(self.conductor, other.conductor);
        let mut coeffs = vec![Cyclotomic::zero_in(conductor); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len.saturating_sub(i)) {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Laurent { low, coeffs, conductor }
    }

    pub fn coefficients(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    /// Applies the trace from `Q(ζ_M)` to every coefficient.
    pub fn trace_over(&self, conductor: u64) -> Self {
        Laurent::from_rationals(self.low, self.coeffs.iter().map(|c| c.trace_over(conductor)).collect())
    }

    /// All coefficients as rationals, or `NotRational`.
    pub fn rational_coefficients(&self) -> Result<Vec<(i64, Rat)>> {
        self.coeffs.iter().enumerate().map(|(j, c)| super::rationality_check(c).map(|q| (self.low + j as i64, q))).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("({c:?})t^{}", self.low + j as i64))
            .collect();
        write!(f, "{} + O(t^{})", if terms.is_empty() { "0".into() } else { terms.join(" + ") }, self.high() + 1)
    }
}

/// `e^{a t}` up to `t^high`.
pub fn exp_series(a: &Rat, high: i64) -> Laurent {
    let mut coeffs = Vec::new();
    let mut power = Rat::one();
    for j in 0..=high.max(0) {
        coeffs.push(&power / rat_int(&factorial(j as u32)));
        power *= a;
    }
    Laurent::from_rationals(0, coeffs)
}

/// `1 / (1 - χ e^{-c t})` up to `t^high`.
///
/// For `χ = 1` the series starts at `t^{-1}` with `1/(c t)`; otherwise it is a
/// power series with constant term `1/(1 - χ)`.
pub fn todd_factor_series(c: &Rat, chi: &Cyclotomic, high: i64) -> Result<Laurent> {
    let conductor = chi.conductor();
    if chi.is_one() {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (1 - e^{-s})/s = Σ (-1)^j s^j/(j+1)!, inverted as a power series in s = ct
        let len = (high + 2).max(1) as usize;
        let g: Vec<Rat> = (0..len)
            .map(|j| {
                let v = Rat::one() / rat_int(&factorial(j as u32 + 1));
                if j % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        let b = invert_rational(&g);
        let mut coeffs = Vec::with_capacity(len);
        let mut cpow = c.recip();
        for bj in b {
            coeffs.push(Cyclotomic::from_rational(bj * &cpow, conductor));
            cpow *= c;
        }
        return Ok(Laurent::new(-1, coeffs));
    }
    // 1 - χ e^{-s} = (1 - χ) - χ Σ_{j≥1} (-1)^j s^j / j!
    let len = (high + 1).max(1) as usize;
    let mut d: Vec<Cyclotomic> = Vec::with_capacity(len);
    d.push(&Cyclotomic::one_in(conductor) - chi);
    for j in 1..len {
        let q = Rat::one() / rat_int(&factorial(j as u32));
        let q = if j % 2 == 1 { q } else { -q };
        d.push(chi.scale(&q));
    }
    let inv0 = d[0].inverse()?;
    let mut b: Vec<Cyclotomic> = vec![inv0.clone()];
    for j in 1..len {
        let mut acc = Cyclotomic::zero_in(conductor);
        for i in 1..=j {
            acc = &acc + &(&d[i] * &b[j - i]);
        }
        b.push(-&(&acc * &inv0));
    }
    let mut cpow = Rat::one();
    let coeffs = b
        .into_iter()
        .map(|bj| {
            let v = bj.scale(&cpow);
            cpow *= c;
            v
        })
        .collect();
    Ok(Laurent::new(0, coeffs))
}

fn invert_rational(g: &[Rat]) -> Vec<Rat> {
    let inv0 = g[0].recip();
    let mut b = vec![inv0.clone()];
    for j in 1..g.len() {
        let acc: Rat = (1..=j).map(|i| &g[i] * &b[j - i]).sum();
        b.push(-acc * &inv0);
    }
    b
}
