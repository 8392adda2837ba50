//! Sums of Laurent series over the elements of a finite quotient group.

use crate::arith::Rat;
use crate::cyclotomic::{todd_factor_series, Cyclotomic, Laurent};
use crate::lattice::{FiniteAbelianGroup, GroupElement};
use crate::Result;

/// `Σ_{h ∈ H} f(h)` for `f(h)` a rational expression in the character values
/// of `h`, computed in `Q(ζ_{ord h})`.
///
/// Since `f(j·h)` is the Galois conjugate of `f(h)` under `ζ ↦ ζ^j`, each
/// orbit `{j·h : gcd(j, ord h) = 1}` contributes a field trace.
pub(crate) fn character_sum<F>(group: &FiniteAbelianGroup, f: F) -> Result<Laurent>
where
    F: Fn(&GroupElement) -> Result<Laurent>,
{
    let mut acc: Option<Laurent> = None;
    for (rep, size) in group.galois_orbits() {
        let element = &group.elements()[rep];
        debug_assert_eq!(size as u64, crate::cyclotomic::euler_phi(element.order));
        let traced = f(element)?.trace_over(element.order);
        acc = Some(match acc {
            None => traced,
            Some(a) => a.add(&traced),
        });
    }
    let sum = acc.expect("a group has at least one element");
    if cfg!(debug_assertions) && group.order() > 1 && group.order() <= 64 {
        let naive = character_sum_naive(group, &f)?;
        if !naive.sub(&sum).is_zero() {
            return Err(crate::Error::Inconsistent(format!("orbit trace {sum:?} differs from the direct sum {naive:?}")));
        }
    }
    Ok(sum)
}

/// The same sum taken term by term, followed by a rationality check.
pub(crate) fn character_sum_naive<F>(group: &FiniteAbelianGroup, f: F) -> Result<Laurent>
where
    F: Fn(&GroupElement) -> Result<Laurent>,
{
    let mut acc: Option<Laurent> = None;
    for element in group.elements() {
        let term = f(element)?;
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    let sum = acc.expect("a group has at least one element");
    let coeffs = sum.rational_coefficients()?;
    Ok(Laurent::from_rationals(sum.low(), coeffs.into_iter().map(|(_, q)| q).collect()))
}

/// `∏_j 1/(1 - χ_j e^{-c_j t})`, known at least up to `t^high`.
pub(crate) fn todd_product(cs: &[Rat], chis: &[Cyclotomic], high: i64) -> Result<Laurent> {
    let slack = cs.len().saturating_sub(1) as i64;
    let mut acc: Option<Laurent> = None;
    for (c, chi) in cs.iter().zip(chis) {
        let f = todd_factor_series(c, chi, high + slack)?;
        acc = Some(match acc {
            None => f,
            Some(a) => a.mul(&f),
        });
    }
    let acc = acc.unwrap_or_else(|| Laurent::constant(Cyclotomic::one_in(1), high.max(0)));
    Ok(acc.truncate(high))
}
