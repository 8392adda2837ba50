//! The face ring `H_T^*(Δ)_Q`, restriction to top cones, localization
//! push-forward and the quotient `H^*(Δ)_Q`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{factorial, rat_int, rat_pow, Rat};
use crate::cyclotomic::Laurent;
use crate::fan::MultiFan;
use crate::lattice::{Covector, LatticeVector, RatMatrix};
use crate::{Error, Result};

/// Seed of the generic directions used by [`p_star`].
pub const P_STAR_SEED: u64 = 0x9e37_79b9;

/// Exponent vector over the rays.
pub type Exponents = Vec<u32>;

/// A rational combination of monomials in the ray variables `x_i`, with
/// monomials supported on non-faces removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantClass {
    ray_count: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl EquivariantClass {
    pub fn zero(fan: &MultiFan) -> Self {
        EquivariantClass { ray_count: fan.ray_count(), terms: BTreeMap::new() }
    }

    pub fn one(fan: &MultiFan) -> Self {
        Self::monomial(fan, vec![0; fan.ray_count()], Rat::one())
    }

    pub fn monomial(fan: &MultiFan, exponents: Exponents, coefficient: Rat) -> Self {
        Self::from_terms(fan, [(exponents, coefficient)])
    }

    pub fn from_terms(fan: &MultiFan, terms: impl IntoIterator<Item = (Exponents, Rat)>) -> Self {
        let mut out = Self::zero(fan);
        for (e, c) in terms {
            assert_eq!(e.len(), fan.ray_count(), "exponent vector length");
            *out.terms.entry(e).or_insert_with(Rat::zero) += c;
        }
        out.normalize(fan)
    }

    /// `x_i`.
    pub fn variable(fan: &MultiFan, ray: usize) -> Self {
        let mut e = vec![0; fan.ray_count()];
        e[ray] = 1;
        Self::monomial(fan, e, Rat::one())
    }

    /// `x_K = ∏_{i ∈ K} x_i`, zero when `K` is not a face.
    pub fn face(fan: &MultiFan, face: &[usize]) -> Self {
        let mut e = vec![0; fan.ray_count()];
        for &i in face {
            e[i] += 1;
        }
        Self::monomial(fan, e, Rat::one())
    }

    /// The embedded weight `u = Σ_i ⟨u, v_i⟩ x_i`.
    pub fn weight(fan: &MultiFan, u: &Covector) -> Self {
        SupportClass::embed_weight(fan, u).to_class(fan)
    }

    fn normalize(mut self, fan: &MultiFan) -> Self {
        self.terms.retain(|e, c| {
            let support: Vec<usize> = e.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i).collect();
            !c.is_zero() && fan.is_face(&support)
        });
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree `k` (in `H^{2k}`) of all terms; `None` for zero or
    /// inhomogeneous classes.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            *out.terms.entry(e.clone()).or_insert_with(Rat::zero) += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, q: &Rat) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c *= q);
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn mul(&self, other: &Self, fan: &MultiFan) -> Self {
        let mut terms: BTreeMap<Exponents, Rat> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Exponents = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        EquivariantClass { ray_count: self.ray_count, terms }.normalize(fan)
    }

    /// `ι_I^*(x)` for top cone `cone`.
    pub fn restrict(&self, fan: &MultiFan, cone: usize) -> RestrictedClass {
        let top = &fan.top_cones()[cone];
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let mut factors = Vec::new();
                for (i, &a) in e.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let u = top.dual(i)?;
                    factors.extend(std::iter::repeat_n(u.clone(), a as usize));
                }
                Some((c.clone(), factors))
            })
            .collect();
        RestrictedClass { terms }
    }
}

/// A polynomial on `N_Q`: a sum of rational multiples of products of covectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedClass {
    pub terms: Vec<(Rat, Vec<Covector>)>,
}

impl RestrictedClass {
    pub fn evaluate(&self, v: &[Rat]) -> Rat {
        self.terms.iter().map(|(c, factors)| factors.iter().fold(c.clone(), |acc, u| acc * u.pair_rational(v))).sum()
    }

    /// Evaluation at `t·v`, homogeneous components by degree.
    fn evaluate_graded(&self, v: &[Rat]) -> BTreeMap<usize, Rat> {
        let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
        for (c, factors) in &self.terms {
            let val = factors.iter().fold(c.clone(), |acc, u| acc * u.pair_rational(v));
            *out.entry(factors.len()).or_insert_with(Rat::zero) += val;
        }
        out
    }
}

/// A degree-2 class `ξ = Σ d_i x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportClass {
    pub d: Vec<Rat>,
}

impl SupportClass {
    pub fn new(d: Vec<Rat>) -> Self {
        SupportClass { d }
    }

    pub fn from_ints(d: &[i64]) -> Self {
        SupportClass { d: d.iter().map(|&x| Rat::from_integer(x.into())).collect() }
    }

    pub fn zero(m: usize) -> Self {
        SupportClass { d: vec![Rat::zero(); m] }
    }

    /// `ξ = Σ_i x_i`.
    pub fn ones(m: usize) -> Self {
        SupportClass { d: vec![Rat::one(); m] }
    }

    /// `d_i = ⟨u, v_i⟩` for the edge vectors `v_i`.
    pub fn embed_weight(fan: &MultiFan, u: &Covector) -> Self {
        SupportClass { d: fan.edges().iter().map(|v| u.pair(v)).collect() }
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn scaled(&self, q: &Rat) -> Self {
        SupportClass { d: self.d.iter().map(|x| x * q).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        SupportClass { d: self.d.iter().zip(&other.d).map(|(a, b)| a + b).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.d.iter().all(|x| x.is_integer())
    }

    pub fn to_class(&self, fan: &MultiFan) -> EquivariantClass {
        EquivariantClass::from_terms(
            fan,
            self.d.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; fan.ray_count()];
                e[i] = 1;
                (e, c.clone())
            }),
        )
    }

    /// The vertex `u_I = ι_I^*(ξ) = Σ_{i ∈ I} d_i u_i^I`.
    pub fn restrict(&self, fan: &MultiFan, cone: usize) -> Covector {
        let top = &fan.top_cones()[cone];
        top.rays.iter().zip(&top.duals).fold(Covector::zero(fan.rank()), |acc, (&i, u)| acc.add(&u.scaled(&self.d[i])))
    }

    fn check_len(&self, fan: &MultiFan) -> Result<()> {
        if self.d.len() == fan.ray_count() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("support class has {} entries for {} rays", self.d.len(), fan.ray_count())))
        }
    }
}

/// `ι_I^*(ξ) ∈ M` for every top cone.
pub fn is_t_cartier(fan: &MultiFan, xi: &SupportClass) -> bool {
    (0..fan.top_cones().len()).all(|c| xi.restrict(fan, c).is_integral())
}

/// `π_*(e^ξ x)` after the substitution `u ↦ t⟨u, v⟩`, known on `[-n, high]`.
///
/// Fails with `PoleResidueNonzero` if a negative power of `t` survives.
pub fn pushforward_eval(fan: &MultiFan, x: &EquivariantClass, xi: &SupportClass, v: &LatticeVector, high: i64) -> Result<Laurent> {
    xi.check_len(fan)?;
    if !fan.is_generic(v) {
        return Err(Error::NonGenericVector);
    }
    let n = fan.rank() as i64;
    let vq = v.to_rational();
    let mut coeffs = vec![Rat::zero(); (high + n + 1).max(0) as usize];
    for (c, top) in fan.top_cones().iter().enumerate() {
        let denom: Rat = top.duals.iter().map(|u| u.pair_rational(&vq)).product::<Rat>() * rat_int(&top.group.order().into());
        let scale = Rat::from_integer(top.weight.into()) / denom;
        let a = xi.restrict(fan, c).pair_rational(&vq);
        for (deg, val) in x.restrict(fan, c).evaluate_graded(&vq) {
            if val.is_zero() {
                continue;
            }
            // val·t^{deg-n}·e^{a t}
            let base = &scale * &val;
            for (slot, coeff) in coeffs.iter_mut().enumerate() {
                let k = slot as i64 - n;
                let p = k - (deg as i64 - n);
                if p < 0 {
                    continue;
                }
                *coeff += &base * rat_pow(&a, p as u32) / rat_int(&factorial(p as u32));
            }
        }
    }
    if let Some(slot) = coeffs.iter().take(n as usize).position(|c| !c.is_zero()) {
        return Err(Error::PoleResidueNonzero { power: slot as i64 - n });
    }
    Ok(Laurent::from_rationals(-n, coeffs))
}

/// `p_*(e^ξ x)` computed at a given generic direction.
pub fn p_star_at(fan: &MultiFan, x: &EquivariantClass, xi: &SupportClass, v: &LatticeVector) -> Result<Rat> {
    let s = pushforward_eval(fan, x, xi, v, 0)?;
    Ok(s.coefficient(0).to_rational().expect("rational series"))
}

/// Two seeded generic directions.
pub fn generic_directions(fan: &MultiFan, seed: u64, count: usize) -> Vec<LatticeVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<LatticeVector> = Vec::with_capacity(count);
    while out.len() < count {
        let v = fan.sample_generic(&mut rng);
        if !out.contains(&v) || fan.rank() == 0 {
            out.push(v);
        }
    }
    out
}

/// `p_*(e^ξ x)`, the degree-zero part of the push-forward, checked at two
/// independent generic directions.
pub fn p_star(fan: &MultiFan, x: &EquivariantClass, xi: &SupportClass) -> Result<Rat> {
    let vs = generic_directions(fan, P_STAR_SEED, 2);
    let a = p_star_at(fan, x, xi, &vs[0])?;
    let b = p_star_at(fan, x, xi, &vs[1])?;
    if a != b {
        return Err(Error::Inconsistent(format!("p_* differs between generic directions: {a} vs {b}")));
    }
    Ok(a)
}

/// All monomials of degree `k` supported on faces.
pub fn face_monomials(fan: &MultiFan, k: u32) -> Vec<Exponents> {
    let m = fan.ray_count();
    let mut out = Vec::new();
    for size in 0..=fan.rank().min(k as usize) {
        if (size == 0) != (k == 0) {
            continue;
        }
        for face in fan.faces(size) {
            compositions(k, face.len(), &mut |parts| {
                let mut e = vec![0; m];
                for (&i, &p) in face.iter().zip(parts) {
                    e[i] = p;
                }
                out.push(e);
            });
        }
    }
    out.sort();
    out
}

/// Calls `f` on every way to write `total` as `parts` positive integers.
fn compositions(total: u32, parts: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(total: u32, parts: usize, acc: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if parts == 0 {
            if total == 0 {
                f(acc);
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts as u32 - 1) {
            acc.push(first);
            rec(total - first, parts - 1, acc, f);
            acc.pop();
        }
    }
    rec(total, parts, &mut Vec::new(), f);
}

/// `H^{2k}(Δ)_Q`: degree-`k` face monomials modulo `e_a^*·(degree k-1)`.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub degree: u32,
    /// Face monomials of degree `k`, the coordinates of the ambient space.
    pub monomials: Vec<Exponents>,
    /// Reduced echelon rows spanning the relations.
    relations: RatMatrix,
    pivots: Vec<usize>,
    /// Indices into `monomials` of the basis classes.
    pub basis: Vec<usize>,
}

impl CohomologyBasis {
    pub fn new(fan: &MultiFan, k: u32) -> Self {
        let monomials = face_monomials(fan, k);
        let index: BTreeMap<&Exponents, usize> = monomials.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows = Vec::new();
        if k > 0 {
            for lower in face_monomials(fan, k - 1) {
                let base = EquivariantClass::monomial(fan, lower, Rat::one());
                for a in 0..fan.rank() {
                    let mut e = vec![0i64; fan.rank()];
                    e[a] = 1;
                    let rel = EquivariantClass::weight(fan, &Covector::from_i64(&e)).mul(&base, fan);
                    let mut row = vec![Rat::zero(); monomials.len()];
                    for (mono, c) in rel.terms() {
                        row[index[mono]] = c.clone();
                    }
                    rows.push(row);
                }
            }
        }
        let cols = monomials.len();
        let echelon = RatMatrix::from_rows(rows, cols).echelon();
        let pivots = echelon.pivots.clone();
        let basis = (0..cols).filter(|c| !pivots.contains(c)).collect();
        CohomologyBasis { degree: k, monomials, relations: echelon.matrix, pivots, basis }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the image `x̄` in the basis.
    pub fn coordinates(&self, x: &EquivariantClass) -> Result<Vec<Rat>> {
        let mut vec = vec![Rat::zero(); self.monomials.len()];
        for (e, c) in x.terms() {
            let pos = self.monomials.binary_search(e).map_err(|_| {
                Error::InvalidInput(format!("class has a term of degree {}, expected {}", e.iter().sum::<u32>(), self.degree))
            })?;
            vec[pos] = c.clone();
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            if vec[p].is_zero() {
                continue;
            }
            let f = vec[p].clone();
            for (j, slot) in vec.iter_mut().enumerate() {
                let a = &self.relations[(r, j)];
                if !a.is_zero() {
                    *slot -= &f * a;
                }
            }
        }
        Ok(self.basis.iter().map(|&b| vec[b].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::fan::fixtures::*;

    fn lv(x: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(x)
    }

    #[test]
    fn embed_weight_examples() {
        assert_eq!(SupportClass::embed_weight(&p1(), &Covector::zero(1)), SupportClass::zero(2));
        assert_eq!(SupportClass::embed_weight(&p1(), &Covector::from_i64(&[1])), SupportClass::from_ints(&[1, -1]));
        assert_eq!(SupportClass::embed_weight(&p2(), &Covector::from_i64(&[1, 0])), SupportClass::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn restriction_examples() {
        let f = p2();
        // top cone {0, 2}
        let cone = f.top_cones().iter().position(|c| c.rays == vec![0, 2]).unwrap();
        let r = EquivariantClass::variable(&f, 0).restrict(&f, cone);
        assert_eq!(r.terms, vec![(rat(1, 1), vec![Covector::from_i64(&[1, -1])])]);
        let r = EquivariantClass::variable(&f, 1).restrict(&f, cone);
        assert!(r.terms.is_empty());
        let u = Covector(vec![rat(2, 3), rat(-5, 1)]);
        let w = EquivariantClass::weight(&f, &u);
        for c in 0..3 {
            let v = [rat(3, 1), rat(7, 1)];
            assert_eq!(w.restrict(&f, c).evaluate(&v), u.pair_rational(&v));
        }
    }

    #[test]
    fn stanley_reisner_relations() {
        let f = square();
        // rays 0 and 2 are opposite: x_0 x_2 = 0
        let x = EquivariantClass::variable(&f, 0).mul(&EquivariantClass::variable(&f, 2), &f);
        assert!(x.is_zero());
        assert!(!EquivariantClass::face(&f, &[0, 1]).is_zero());
    }

    #[test]
    fn pushforward_examples() {
        let f = p1();
        let v = lv(&[1]);
        let s = pushforward_eval(&f, &EquivariantClass::one(&f), &SupportClass::zero(2), &v, 0).unwrap();
        assert!(s.coefficient(0).is_zero());
        assert!(s.coefficient(-1).is_zero());
        let s = pushforward_eval(&f, &EquivariantClass::variable(&f, 0), &SupportClass::zero(2), &v, 0).unwrap();
        assert_eq!(s.coefficient(0).to_rational(), Some(rat(1, 1)));

        let f = p2();
        let x = EquivariantClass::face(&f, &[0, 1]);
        let s = pushforward_eval(&f, &x, &SupportClass::zero(3), &lv(&[1, 2]), 1).unwrap();
        assert_eq!(s.coefficient(0).to_rational(), Some(rat(1, 1)));
        assert!(s.coefficient(1).is_zero());
    }

    #[test]
    fn poles_detect_incomplete_fans() {
        let f = half_line();
        let r = pushforward_eval(&f, &EquivariantClass::one(&f), &SupportClass::zero(1), &lv(&[1]), 0);
        assert_eq!(r.unwrap_err(), Error::PoleResidueNonzero { power: -1 });
    }

    #[test]
    fn p_star_examples() {
        let f = p1();
        assert_eq!(p_star(&f, &EquivariantClass::one(&f), &SupportClass::ones(2)), Ok(rat(2, 1)));
        let f = p2();
        for x in [EquivariantClass::one(&f), EquivariantClass::variable(&f, 1)] {
            assert_eq!(p_star(&f, &x, &SupportClass::zero(3)), Ok(rat(0, 1)));
        }
        let u = EquivariantClass::weight(&f, &Covector::from_i64(&[2, -1]));
        let y = EquivariantClass::variable(&f, 0);
        let xi = SupportClass::from_ints(&[1, 3, -2]);
        assert_eq!(p_star(&f, &u.mul(&y, &f), &xi), Ok(rat(0, 1)));
    }

    #[test]
    fn p_star_of_top_face_is_inverse_group_order() {
        for f in [p2(), wp112(), square(), double_p1(), p3()] {
            let m = f.ray_count();
            for top in f.top_cones() {
                let x = EquivariantClass::face(&f, &top.rays);
                let expect = Rat::new(top.weight.into(), (top.group.order() as i64).into());
                assert_eq!(p_star(&f, &x, &SupportClass::zero(m)), Ok(expect));
            }
        }
    }

    #[test]
    fn t_cartier_examples() {
        assert!(is_t_cartier(&p2(), &SupportClass::ones(3)));
        assert!(!is_t_cartier(&wp112(), &SupportClass::from_ints(&[1, 0, 0])));
        assert!(is_t_cartier(&wp112(), &SupportClass::zero(3)));
    }

    #[test]
    fn cohomology_dimensions() {
        assert_eq!(CohomologyBasis::new(&p2(), 1).dimension(), 1);
        assert_eq!(CohomologyBasis::new(&p2(), 2).dimension(), 1);
        assert_eq!(CohomologyBasis::new(&square(), 1).dimension(), 2);
        assert_eq!(CohomologyBasis::new(&square(), 0).dimension(), 1);
        assert_eq!(CohomologyBasis::new(&p3(), 2).dimension(), 1);
        assert_eq!(CohomologyBasis::new(&hirzebruch(2), 1).dimension(), 2);
    }

    #[test]
    fn cohomology_coordinates_respect_relations() {
        let f = p2();
        let b = CohomologyBasis::new(&f, 1);
        let c: Vec<Vec<Rat>> = (0..3).map(|i| b.coordinates(&EquivariantClass::variable(&f, i)).unwrap()).collect();
        assert_eq!(c[0], c[1]);
        assert_eq!(c[1], c[2]);
        let u = EquivariantClass::weight(&f, &Covector::from_i64(&[3, 1]));
        assert!(b.coordinates(&u).unwrap().iter().all(Zero::is_zero));
    }

    // D_i^2 = -b where v_{i-1} + v_{i+1} = b v_i for angular neighbours.
    fn self_intersection_oracle(rays: &[(i64, i64)]) -> Vec<i64> {
        let mut order: Vec<usize> = (0..rays.len()).collect();
        order.sort_by(|&a, &b| {
            let ang = |i: usize| (rays[i].1 as f64).atan2(rays[i].0 as f64);
            ang(a).partial_cmp(&ang(b)).unwrap()
        });
        let m = rays.len();
        let mut out = vec![0; m];
        for p in 0..m {
            let (prev, cur, next) = (rays[order[(p + m - 1) % m]], rays[order[p]], rays[order[(p + 1) % m]]);
            let s = (prev.0 + next.0, prev.1 + next.1);
            let b = if cur.0 != 0 { s.0 / cur.0 } else { s.1 / cur.1 };
            assert_eq!((b * cur.0, b * cur.1), s);
            out[order[p]] = -b;
        }
        out
    }

    #[test]
    fn smooth_surface_self_intersections() {
        for a in 0..4 {
            let f = hirzebruch(a);
            let rays: Vec<(i64, i64)> = f
                .rays()
                .iter()
                .map(|r| {
                    let v: Vec<i64> = r.0.iter().map(|x| i64::try_from(x).unwrap()).collect();
                    (v[0], v[1])
                })
                .collect();
            let expect = self_intersection_oracle(&rays);
            for (i, &e) in expect.iter().enumerate() {
                let x = EquivariantClass::variable(&f, i);
                let sq = x.mul(&x, &f);
                assert_eq!(p_star(&f, &sq, &SupportClass::zero(4)), Ok(rat(e, 1)), "F_{a} ray {i}");
            }
        }
        assert_eq!(self_intersection_oracle(&[(1, 0), (0, 1), (-1, -1)]), vec![1, 1, 1]);
    }

    #[test]
    fn face_monomial_counts() {
        // P2 degree 2: x_i^2 (3) and x_i x_j for the 3 edges
        assert_eq!(face_monomials(&p2(), 2).len(), 6);
        assert_eq!(face_monomials(&p2(), 0), vec![vec![0, 0, 0]]);
    }
}
