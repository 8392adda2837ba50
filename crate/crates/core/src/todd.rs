//! Equivariant Todd classes: push-forwards, rigidity, Ehrhart coefficients and
//! additivity under subdivision.

use num_traits::Zero;

use crate::arith::{factorial, rat_int, rat_pow, Int, Rat};
use crate::cyclotomic::{exp_series, root_of_unity, Laurent};
use crate::equivariant::{generic_directions, is_t_cartier, SupportClass};
use crate::fan::MultiFan;
use crate::lattice::LatticeVector;
use crate::localization::{character_sum, todd_product};
use crate::{Error, Result};

/// Seed of the generic directions used when none is supplied.
pub const TODD_SEED: u64 = 0x70dd;

/// `(w(I)/|H_{I,V}|) Σ_{h ∈ H_{I,V}} ∏_{i ∈ I∖K} 1/(1 - χ_I(u_i^I, h) e^{-t⟨u_i^I, v⟩})`
/// for every top cone `I ⊇ K`, known up to `t^high`.
pub fn localized_todd(fan: &MultiFan, face: &[usize], v: &LatticeVector, high: i64) -> Result<Vec<(usize, Laurent)>> {
    let face = fan.check_face(face)?;
    if !fan.is_generic(v) {
        return Err(Error::NonGenericVector);
    }
    let vq = v.to_rational();
    fan.star(&face)
        .map(|(c, top)| {
            let free: Vec<usize> = (0..top.rays.len()).filter(|&j| !face.contains(&top.rays[j])).collect();
            let cs: Vec<Rat> = free.iter().map(|&j| top.duals[j].pair_rational(&vq)).collect();
            let sum = character_sum(&top.group, |h| {
                let chis = free.iter().map(|&j| root_of_unity(&h.phases[j], h.order)).collect::<Result<Vec<_>>>()?;
                todd_product(&cs, &chis, high)
            })?;
            Ok((c, sum.scale_rational(&Rat::new(top.weight.into(), top.group.order().into()))))
        })
        .collect()
}

fn sum_series(parts: impl IntoIterator<Item = Laurent>, low: i64, high: i64) -> Laurent {
    parts.into_iter().fold(Laurent::zero(low, high), |acc, s| acc.add(&s)).truncate(high)
}

/// `π_*(T_T(Δ,V))` at direction `v`, on the window `[-n, n]`.
///
/// Every coefficient off `t^0` must vanish; otherwise `RigidityViolation`.
pub fn equivariant_todd_pushforward(fan: &MultiFan, v: &LatticeVector) -> Result<Laurent> {
    let n = fan.rank() as i64;
    let s = sum_series(localized_todd(fan, &[], v, n)?.into_iter().map(|(_, s)| s), -n, n);
    for k in -n..=n {
        if k != 0 && !s.coefficient(k).is_zero() {
            return Err(Error::RigidityViolation { power: k });
        }
    }
    Ok(s)
}

/// `Td[Δ]`, the constant value of the Todd push-forward.
pub fn todd_genus(fan: &MultiFan) -> Result<Rat> {
    let mut value: Option<Rat> = None;
    for v in generic_directions(fan, TODD_SEED, 2) {
        let s = equivariant_todd_pushforward(fan, &v)?;
        let c = s.coefficient(0).to_rational().ok_or_else(|| Error::NotRational(format!("{:?}", s.coefficient(0))))?;
        if value.as_ref().is_some_and(|x| *x != c) {
            return Err(Error::Inconsistent("Todd genus depends on the direction".into()));
        }
        value = Some(c);
    }
    Ok(value.expect("two directions"))
}

/// `π_*(e^ξ x_K T_T(Δ,V)_K)` at direction `v`, known up to `t^high`.
pub fn face_todd_pushforward(fan: &MultiFan, face: &[usize], xi: &SupportClass, v: &LatticeVector, high: i64) -> Result<Laurent> {
    if xi.len() != fan.ray_count() {
        return Err(Error::InvalidInput(format!("support class has {} entries for {} rays", xi.len(), fan.ray_count())));
    }
    let r = (fan.rank() - face.len()) as i64;
    let vq = v.to_rational();
    let parts = localized_todd(fan, face, v, high + r)?
        .into_iter()
        .map(|(c, s)| s.mul(&exp_series(&xi.restrict(fan, c).pair_rational(&vq), high + r)))
        .collect::<Vec<_>>();
    Ok(sum_series(parts, -r, high))
}

/// `#(P(ξ)_K) = p_*(e^ξ x_K T_T(Δ,V)_K)` for T-Cartier `ξ`.
pub fn face_todd_count(fan: &MultiFan, face: &[usize], xi: &SupportClass) -> Result<Int> {
    if !is_t_cartier(fan, xi) {
        return Err(Error::NotTCartier);
    }
    let v = &generic_directions(fan, TODD_SEED, 1)[0];
    let s = face_todd_pushforward(fan, face, xi, v, 0)?;
    let c = s.coefficient(0).to_rational().ok_or_else(|| Error::NotRational(format!("{:?}", s.coefficient(0))))?;
    if !c.is_integer() {
        return Err(Error::Inconsistent(format!("Todd count {c} is not an integer")));
    }
    Ok(c.to_integer())
}

/// `a_0(ξ), …, a_n(ξ)` with `#(P(νξ)) = Σ_k a_k(ξ) ν^{n-k}`.
///
/// Each cone contributes `Σ_p (ν⟨u_I, v⟩)^p/p! · [t^{-p}] F_I`.
pub fn ehrhart_coefficients(fan: &MultiFan, xi: &SupportClass) -> Result<Vec<Rat>> {
    if xi.len() != fan.ray_count() {
        return Err(Error::InvalidInput(format!("support class has {} entries for {} rays", xi.len(), fan.ray_count())));
    }
    if !is_t_cartier(fan, xi) {
        return Err(Error::NotTCartier);
    }
    let n = fan.rank();
    let mut result: Option<Vec<Rat>> = None;
    for v in generic_directions(fan, TODD_SEED, 2) {
        let vq = v.to_rational();
        let mut a = vec![Rat::zero(); n + 1];
        for (c, s) in localized_todd(fan, &[], &v, 0)? {
            let vertex = xi.restrict(fan, c).pair_rational(&vq);
            for p in 0..=n {
                let coeff = s.coefficient(-(p as i64));
                let coeff = coeff.to_rational().ok_or_else(|| Error::NotRational(format!("{coeff:?}")))?;
                a[n - p] += rat_pow(&vertex, p as u32) / rat_int(&factorial(p as u32)) * coeff;
            }
        }
        if result.as_ref().is_some_and(|r| *r != a) {
            return Err(Error::Inconsistent("Ehrhart coefficients depend on the direction".into()));
        }
        result = Some(a);
    }
    Ok(result.expect("two directions"))
}

/// Evaluates `Σ_k a_k ν^{n-k}`.
pub fn ehrhart_value(a: &[Rat], nu: i64) -> Rat {
    let n = a.len() - 1;
    a.iter().enumerate().map(|(k, c)| c * rat_pow(&Rat::from_integer(nu.into()), (n - k) as u32)).sum()
}

/// `Td_T(Δ)` at direction `v`: the sum of the per-cone series, on `[-n, high]`.
pub fn td_t(fan: &MultiFan, v: &LatticeVector, high: i64) -> Result<Laurent> {
    let n = fan.rank() as i64;
    Ok(sum_series(localized_todd(fan, &[], v, high)?.into_iter().map(|(_, s)| s), -n, high))
}

/// `Td_T(I)` for the single cone spanned by the edge vectors.
pub fn td_t_cone(edges: &[LatticeVector], v: &LatticeVector, high: i64) -> Result<Laurent> {
    td_t(&MultiFan::single_cone(edges)?, v, high)
}

/// `Td_T(subdivision) - Td_T(I)` on the window `[-n, high]`.
pub fn verify_additivity(edges: &[LatticeVector], subdivision: &MultiFan, v: &LatticeVector, high: i64) -> Result<Laurent> {
    Ok(td_t(subdivision, v, high)?.sub(&td_t_cone(edges, v, high)?).truncate(high))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::cyclotomic::Cyclotomic;
    use crate::fan::fixtures::*;
    use crate::fan::random_complete_fan;
    use crate::polytope::{count_bruteforce, volume, MultiPolytope};

    fn lv(x: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(x)
    }

    #[test]
    fn todd_genus_examples() {
        assert_eq!(todd_genus(&p1()), Ok(rat(1, 1)));
        assert_eq!(todd_genus(&double_p1()), Ok(rat(2, 1)));
        assert_eq!(todd_genus(&wp112()), Ok(rat(1, 1)));
        assert_eq!(todd_genus(&double_p2()), Ok(rat(2, 1)));
        assert_eq!(todd_genus(&winding_square()), Ok(rat(2, 1)));
    }

    #[test]
    fn rigidity_on_random_fans() {
        for seed in 0..6 {
            let f = random_complete_fan(seed, 2, 3);
            assert_eq!(todd_genus(&f), Ok(rat(1, 1)));
        }
        let f = random_complete_fan(1, 3, 2);
        assert_eq!(todd_genus(&f), Ok(rat(1, 1)));
    }

    #[test]
    fn incomplete_fans_are_not_rigid() {
        let f = half_line();
        let r = equivariant_todd_pushforward(&f, &lv(&[1]));
        assert!(matches!(r, Err(Error::RigidityViolation { .. })), "{r:?}");
    }

    #[test]
    fn ehrhart_examples() {
        let a = ehrhart_coefficients(&square(), &SupportClass::ones(4)).unwrap();
        assert_eq!(a, vec![rat(4, 1), rat(4, 1), rat(1, 1)]);
        let a = ehrhart_coefficients(&p2(), &SupportClass::ones(3)).unwrap();
        assert_eq!(a, vec![rat(9, 2), rat(9, 2), rat(1, 1)]);
        let a = ehrhart_coefficients(&wp112(), &SupportClass::ones(3)).unwrap();
        assert_eq!(a, vec![rat(4, 1), rat(4, 1), rat(1, 1)]);
        assert_eq!(ehrhart_coefficients(&wp112(), &SupportClass::from_ints(&[1, 0, 0])), Err(Error::NotTCartier));
    }

    #[test]
    fn ehrhart_matches_bruteforce() {
        for (f, d) in [(square(), vec![1; 4]), (p2(), vec![1; 3]), (wp112(), vec![1; 3]), (hirzebruch(1), vec![1, 0, 2, 1])] {
            let xi = SupportClass::from_ints(&d);
            let a = ehrhart_coefficients(&f, &xi).unwrap();
            for nu in 1..=5 {
                let p = MultiPolytope::new(&f, xi.scaled(&rat(nu, 1))).unwrap();
                assert_eq!(ehrhart_value(&a, nu), rat_int(&count_bruteforce(&p).unwrap()));
            }
            assert_eq!(a[0], volume(&MultiPolytope::new(&f, xi.clone()).unwrap()).unwrap());
            assert_eq!(a[2], todd_genus(&f).unwrap());
        }
    }

    #[test]
    fn single_cone_series() {
        let c = rat(3, 1);
        let s = td_t_cone(&[lv(&[1])], &lv(&[3]), 2).unwrap();
        assert_eq!(s.coefficient(-1).to_rational(), Some(c.recip()));
        assert_eq!(s.coefficient(0).to_rational(), Some(rat(1, 2)));
        assert_eq!(s.coefficient(1).to_rational(), Some(c.clone() / rat(12, 1)));

        // (1/2)[1/(1 - e^{-ct}) + 1/(1 + e^{-ct})] with c = ⟨u, v⟩ for u dual to (2)
        let s = td_t_cone(&[lv(&[2])], &lv(&[3]), 2).unwrap();
        let c = rat(3, 2);
        let one = todd_product(std::slice::from_ref(&c), &[Cyclotomic::one_in(1)], 2).unwrap();
        let minus = todd_product(&[c], &[Cyclotomic::from_rational(rat(-1, 1), 2)], 2).unwrap();
        let expect = one.add(&minus).scale_rational(&rat(1, 2));
        for k in -1..=2 {
            assert_eq!(s.coefficient(k), expect.coefficient(k));
        }

        let s = td_t_cone(&[lv(&[1, 0]), lv(&[0, 1])], &lv(&[2, 5]), 2).unwrap();
        let a = td_t_cone(&[lv(&[1])], &lv(&[2]), 3).unwrap();
        let b = td_t_cone(&[lv(&[1])], &lv(&[5]), 3).unwrap();
        let prod = a.mul(&b);
        for k in -2..=2 {
            assert_eq!(s.coefficient(k), prod.coefficient(k));
        }
    }

    #[test]
    fn additivity_examples() {
        let edges = [lv(&[1, 0]), lv(&[0, 1])];
        let cone = MultiFan::single_cone(&edges).unwrap();
        for r in [lv(&[1, 1]), lv(&[2, 1]), lv(&[1, 3])] {
            let sub = cone.star_subdivide(0, &r).unwrap();
            for v in [lv(&[3, 7]), lv(&[-5, 2]), lv(&[11, -4])] {
                assert!(verify_additivity(&edges, &sub, &v, 2).unwrap().is_zero());
            }
        }
        assert!(verify_additivity(&edges, &cone, &lv(&[3, 7]), 2).unwrap().is_zero());

        let edges = [lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[1, 1, 3])];
        let cone = MultiFan::single_cone(&edges).unwrap();
        let sub = cone.star_subdivide(0, &lv(&[1, 1, 1])).unwrap();
        assert!(verify_additivity(&edges, &sub, &lv(&[7, -3, 5]), 3).unwrap().is_zero());
    }

    #[test]
    fn doubling_edges_keeps_todd_genus() {
        for f in [p2(), wp112(), square(), p3()] {
            let g = f.scale_multipliers(2).unwrap();
            assert_eq!(todd_genus(&g), todd_genus(&f));
        }
    }
}
