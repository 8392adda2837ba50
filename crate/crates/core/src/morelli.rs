//! Morelli coefficients `μ(x, J)` and `μ_k(J)` evaluated at generic planes
//! `E ⊂ N_Q`, and the identities they satisfy.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Rat;
use crate::cyclotomic::root_of_unity;
use crate::equivariant::{face_monomials, p_star, CohomologyBasis, EquivariantClass, Exponents, SupportClass};
use crate::fan::MultiFan;
use crate::lattice::{annihilator_basis, partial_dual, plane_line_intersection, Covector, LatticeVector, OrientedBasis, RatMatrix};
use crate::localization::{character_sum, todd_product};
use crate::{Error, Result};

/// Entries of sampled plane bases lie in `[-PLANE_BOUND, PLANE_BOUND]`.
pub const PLANE_BOUND: i64 = 20;
const MAX_PLANE_ATTEMPTS: usize = 10_000;

/// Ascending `p`-subsets of `0..n`.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == p {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            acc.push(i);
            rec(i + 1, n, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, p, &mut Vec::new(), &mut out);
    out
}

/// Maximal minors of the `p × n` matrix with the given rows.
fn plucker(rows: &[Vec<Rat>], n: usize) -> Vec<Rat> {
    let p = rows.len();
    subsets(n, p)
        .into_iter()
        .map(|cols| {
            let m: Vec<Vec<Rat>> = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
            RatMatrix::from_rows(m, p).determinant()
        })
        .collect()
}

/// An element of `∧^p M_Q` in Plücker coordinates (ascending `p`-subsets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeElement {
    pub degree: usize,
    pub coordinates: Vec<Rat>,
}

impl WedgeElement {
    /// `scalar · α_1 ∧ ⋯ ∧ α_p`.
    pub fn of(covectors: &[Covector], scalar: i32, rank: usize) -> Self {
        let rows: Vec<Vec<Rat>> = covectors.iter().map(|c| c.0.clone()).collect();
        let s = Rat::from_integer(scalar.into());
        let coordinates = if rows.is_empty() { vec![s] } else { plucker(&rows, rank).into_iter().map(|x| x * &s).collect() };
        WedgeElement { degree: covectors.len(), coordinates }
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Zero::is_zero)
    }

    /// `det ⟨α_a, w_b⟩` against `w_E`, by Cauchy–Binet.
    pub fn pair(&self, plane: &GenericPlane) -> Rat {
        assert_eq!(self.degree, plane.basis.len(), "wedge degree");
        self.coordinates.iter().zip(&plane.wedge).map(|(a, b)| a * b).sum()
    }
}

/// A generic `(n-k+1)`-plane `E ⊂ N_Q`.
#[derive(Clone, Debug)]
pub struct GenericPlane {
    pub k: usize,
    pub basis: Vec<LatticeVector>,
    /// Plücker coordinates of `w_1 ∧ ⋯ ∧ w_{n-k+1}`.
    pub wedge: Vec<Rat>,
    /// Conditions checked when the plane was accepted.
    pub certificate: PlaneCertificate,
}

/// What was verified about a plane.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneCertificate {
    /// Faces `J ∈ Σ^{(k)}` with a rank-one intersection and nonzero pairings.
    pub line_conditions: usize,
    /// Faces `K ∈ Σ^{(k-k_1)}`, `k_1 ≥ 1`, with `M_K → E^*` surjective.
    pub surjectivity_conditions: usize,
    /// Candidates rejected before this plane was found.
    pub rejected: usize,
}

impl GenericPlane {
    /// Validates a given basis against the fan.
    pub fn new(fan: &MultiFan, k: usize, basis: Vec<LatticeVector>) -> Result<Self> {
        let n = fan.rank();
        if k == 0 || k > n {
            return Err(Error::InvalidInput(format!("plane codimension parameter k = {k} must lie in 1..={n}")));
        }
        if basis.len() != n - k + 1 || basis.iter().any(|w| w.rank() != n) {
            return Err(Error::InvalidInput(format!("a plane for k = {k} needs {} vectors of rank {n}", n - k + 1)));
        }
        let rows: Vec<Vec<Rat>> = basis.iter().map(|w| w.to_rational()).collect();
        let wedge = plucker(&rows, n);
        if wedge.iter().all(Zero::is_zero) {
            return Err(Error::NonGenericPlane("basis is dependent".into()));
        }
        let mut plane = GenericPlane { k, basis, wedge, certificate: PlaneCertificate::default() };
        for face in fan.faces(k) {
            let v = plane.line(fan, face)?;
            for u in face_duals(fan, face)? {
                if u.pair(&v).is_zero() {
                    return Err(Error::NonGenericPlane(format!("⟨u_j, v_E⟩ = 0 on face {face:?}")));
                }
            }
            plane.certificate.line_conditions += 1;
        }
        plane.certificate.surjectivity_conditions = plane.check_surjectivity(fan)?;
        Ok(plane)
    }

    /// Seeded rejection sampling of a generic plane.
    pub fn sample(fan: &MultiFan, k: usize, rng: &mut impl Rng) -> Result<Self> {
        let n = fan.rank();
        let mut last = Error::NonGenericPlane("no attempt made".into());
        for attempt in 0..MAX_PLANE_ATTEMPTS {
            let basis = (0..(n + 1).saturating_sub(k))
                .map(|_| LatticeVector((0..n).map(|_| rng.gen_range(-PLANE_BOUND..=PLANE_BOUND).into()).collect()))
                .collect();
            match Self::new(fan, k, basis) {
                Ok(mut p) => {
                    p.certificate.rejected = attempt;
                    return Ok(p);
                }
                Err(e @ Error::NonGenericPlane(_)) => last = e,
                Err(e) => return Err(e),
            }
        }
        Err(last)
    }

    /// `count` planes from a seed.
    pub fn sample_many(fan: &MultiFan, k: usize, count: usize, seed: u64) -> Result<Vec<Self>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| Self::sample(fan, k, &mut rng)).collect()
    }

    /// `v_{E,J}`, a generator of `E_Q ∩ (N_J)_Q`.
    pub fn line(&self, fan: &MultiFan, face: &[usize]) -> Result<LatticeVector> {
        let edges: Vec<LatticeVector> = face.iter().map(|&i| fan.edges()[i].clone()).collect();
        plane_line_intersection(&self.basis, &edges, fan.rank())
    }

    /// Rank checks of `M_K → E^*` for `K ∈ Σ^{(k-k_1)}`, `k_1 ≥ 1`.
    pub fn check_surjectivity(&self, fan: &MultiFan) -> Result<usize> {
        let n = fan.rank();
        let dim = self.basis.len();
        let mut checked = 0;
        for size in 0..self.k {
            for face in fan.faces(size) {
                let edges: Vec<LatticeVector> = face.iter().map(|&i| fan.edges()[i].clone()).collect();
                let m_k = annihilator_basis(&edges, n)?;
                let rows: Vec<Vec<Rat>> = m_k.vectors.iter().map(|u| self.basis.iter().map(|w| u.pair(w)).collect()).collect();
                if RatMatrix::from_rows(rows, dim).rank() != dim {
                    return Err(Error::NonGenericPlane(format!("M_K → E^* is not surjective for K = {face:?}")));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }
}

/// `u_j^J`, dual to the edges of `J` inside `N_J`.
fn face_duals(fan: &MultiFan, face: &[usize]) -> Result<Vec<Covector>> {
    let edges: Vec<LatticeVector> = face.iter().map(|&i| fan.edges()[i].clone()).collect();
    partial_dual(&edges, fan.rank())
}

/// `ω_J` with its orientation.
pub fn omega(fan: &MultiFan, face: &[usize]) -> Result<OrientedBasis> {
    let edges: Vec<LatticeVector> = face.iter().map(|&i| fan.edges()[i].clone()).collect();
    annihilator_basis(&edges, fan.rank())
}

/// `f^J(x_i) = ι_I^*(x_i) ∧ ω_J`, checked to agree for every top cone `I ⊇ J`.
pub fn wedge_f(fan: &MultiFan, face: &[usize], ray: usize, omega: &OrientedBasis) -> Result<WedgeElement> {
    let n = fan.rank();
    let mut value: Option<WedgeElement> = None;
    for (_, top) in fan.star(face) {
        let restricted = top.dual(ray).cloned().unwrap_or_else(|| Covector::zero(n));
        let mut factors = vec![restricted];
        factors.extend(omega.vectors.iter().cloned());
        let w = WedgeElement::of(&factors, omega.scalar, n);
        match &value {
            None => value = Some(w),
            Some(prev) if *prev != w => {
                return Err(Error::Inconsistent(format!("f^J(x_{ray}) depends on the top cone containing {face:?}")));
            }
            Some(_) => {}
        }
    }
    value.ok_or_else(|| Error::FaceNotInFan(face.to_vec()))
}

/// Orientation choices for the two evaluation paths.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Orientation {
    pub flip_line: bool,
    pub flip_omega: bool,
}

/// `μ(x, J)(E)` by the wedge path and by the intersection path.
pub fn mu_paths(
    fan: &MultiFan,
    x: &EquivariantClass,
    face: &[usize],
    plane: &GenericPlane,
    orientation: Orientation,
) -> Result<(Rat, Rat)> {
    let face = fan.check_face(face)?;
    if face.len() != plane.k {
        return Err(Error::InvalidInput(format!("face {face:?} has {} rays, plane is for k = {}", face.len(), plane.k)));
    }
    if let Some(d) = x.degree() {
        if d as usize != plane.k {
            return Err(Error::InvalidInput(format!("class has degree {d}, expected {}", plane.k)));
        }
    }

    // intersection path
    let mut line = plane.line(fan, &face)?;
    if orientation.flip_line {
        line = line.neg();
    }
    let duals = face_duals(fan, &face)?;
    let c: Vec<Rat> = duals.iter().map(|u| u.pair(&line)).collect();
    let denominator: Rat = c.iter().product();
    if denominator.is_zero() {
        return Err(Error::NonGenericPlane(format!("⟨u_j^J, v_E,J⟩ vanishes on {face:?}")));
    }

    // wedge path
    let mut om = omega(fan, &face)?;
    if orientation.flip_omega {
        om = om.flipped();
    }
    let m = fan.ray_count();
    let mut f = vec![Rat::zero(); m];
    for (i, slot) in f.iter_mut().enumerate() {
        *slot = wedge_f(fan, &face, i, &om)?.pair(plane);
    }
    let wedge_denominator: Rat = face.iter().map(|&j| f[j].clone()).product();
    if wedge_denominator.is_zero() {
        return Err(Error::NonGenericPlane(format!("f^J(x_J)(w_E) vanishes on {face:?}")));
    }

    let mut by_line = Rat::zero();
    let mut by_wedge = Rat::zero();
    for (e, coef) in x.terms() {
        by_wedge += coef * monomial_value(e, &f);
        if e.iter().enumerate().all(|(i, &a)| a == 0 || face.contains(&i)) {
            let values: Vec<Rat> = (0..m).map(|i| face.iter().position(|&j| j == i).map_or_else(Rat::zero, |p| c[p].clone())).collect();
            by_line += coef * monomial_value(e, &values);
        }
    }
    Ok((by_line / denominator, by_wedge / wedge_denominator))
}

fn monomial_value(e: &Exponents, values: &[Rat]) -> Rat {
    e.iter().zip(values).fold(Rat::one(), |acc, (&a, v)| acc * crate::arith::rat_pow(v, a))
}

/// `μ(x, J)(E)`, with both evaluation paths required to agree.
pub fn mu(fan: &MultiFan, x: &EquivariantClass, face: &[usize], plane: &GenericPlane) -> Result<Rat> {
    let (a, b) = mu_paths(fan, x, face, plane, Orientation::default())?;
    if a != b {
        return Err(Error::Inconsistent(format!("μ by intersection {a} differs from μ by wedge pairing {b}")));
    }
    Ok(a)
}

/// `μ_k(J)(E) = (1/|H_{J,V}|) Σ_h [t^0] ∏_{j ∈ J} 1/(1 - χ(u_j^J, h) e^{-t c_j})`.
///
/// `plane` may be `None` only for `J = o`, where the value is 1.
pub fn mu_k_todd(fan: &MultiFan, face: &[usize], plane: Option<&GenericPlane>) -> Result<Rat> {
    let face = fan.check_face(face)?;
    if face.is_empty() {
        return Ok(Rat::one());
    }
    let plane = plane.ok_or_else(|| Error::InvalidInput("μ_k needs a plane for k ≥ 1".into()))?;
    let line = plane.line(fan, &face)?;
    let cs: Vec<Rat> = face_duals(fan, &face)?.iter().map(|u| u.pair(&line)).collect();
    if cs.iter().any(Zero::is_zero) {
        return Err(Error::NonGenericPlane(format!("⟨u_j^J, v_E,J⟩ vanishes on {face:?}")));
    }
    let group = fan.face_group(&face)?;
    let sum = character_sum(&group, |h| {
        let chis = h.phases.iter().map(|ph| root_of_unity(ph, h.order)).collect::<Result<Vec<_>>>()?;
        todd_product(&cs, &chis, 0)
    })?;
    let c0 = sum.coefficient(0);
    let value = c0.to_rational().ok_or_else(|| Error::NotRational(format!("{c0:?}")))?;
    Ok(value / Rat::from_integer(group.order().into()))
}

/// `p_*(e^ξ x) - Σ_{J ∈ Σ^{(k)}} μ(x, J)(E) p_*(e^ξ x_J)`.
pub fn decomposition_residual(fan: &MultiFan, x: &EquivariantClass, xi: &SupportClass, plane: &GenericPlane) -> Result<Rat> {
    let mut residual = p_star(fan, x, xi)?;
    for face in fan.faces(plane.k) {
        let coefficient = mu(fan, x, face, plane)?;
        if !coefficient.is_zero() {
            residual -= coefficient * p_star(fan, &EquivariantClass::face(fan, face), xi)?;
        }
    }
    Ok(residual)
}

/// Coordinates of `x̄ - Σ_J μ(x, J)(E) x̄_J` in `H^{2k}(Δ)_Q`.
pub fn cohomology_residual(fan: &MultiFan, x: &EquivariantClass, plane: &GenericPlane) -> Result<Vec<Rat>> {
    let basis = CohomologyBasis::new(fan, plane.k as u32);
    let mut rhs = EquivariantClass::zero(fan);
    for face in fan.faces(plane.k) {
        let coefficient = mu(fan, x, face, plane)?;
        rhs = rhs.add(&EquivariantClass::face(fan, face).scale(&coefficient));
    }
    basis.coordinates(&x.sub(&rhs))
}

/// `u_{a_1} ⋯ u_{a_{k_1}} x_J` for standard covectors `e_a^*`, `J ∈ Σ^{(k-k_1)}`
/// and `0 ≤ k_1 ≤ k-1`.
pub fn spanning_family(fan: &MultiFan, k: usize) -> Vec<(usize, EquivariantClass)> {
    let n = fan.rank();
    let weights: Vec<EquivariantClass> = (0..n)
        .map(|a| {
            let mut e = vec![0i64; n];
            e[a] = 1;
            EquivariantClass::weight(fan, &Covector::from_i64(&e))
        })
        .collect();
    let mut out = Vec::new();
    for k1 in 0..k {
        for face in fan.faces(k - k1) {
            let base = EquivariantClass::face(fan, face);
            for choice in multisets(n, k1) {
                let x = choice.iter().fold(base.clone(), |acc, &a| acc.mul(&weights[a], fan));
                if !x.is_zero() {
                    out.push((k1, x));
                }
            }
        }
    }
    out
}

fn multisets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == size {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            acc.push(i);
            rec(i, n, size, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// `(rank of the spanning family, dim H_T^{2k}(Δ)_Q)`.
pub fn spanning_rank(fan: &MultiFan, k: usize) -> (usize, usize) {
    let monomials = face_monomials(fan, k as u32);
    let rows: Vec<Vec<Rat>> = spanning_family(fan, k)
        .into_iter()
        .map(|(_, x)| {
            let mut row = vec![Rat::zero(); monomials.len()];
            for (e, c) in x.terms() {
                let pos = monomials.binary_search(e).expect("family element of degree k");
                row[pos] = c.clone();
            }
            row
        })
        .collect();
    (RatMatrix::from_rows(rows, monomials.len()).rank(), monomials.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::fan::fixtures::*;
    use crate::polytope::{volume, MultiPolytope};
    use crate::todd::ehrhart_coefficients;

    fn lv(x: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(x)
    }

    #[test]
    fn plucker_pairing_is_the_determinant() {
        let f = p3();
        let plane = GenericPlane::new(&f, 2, vec![lv(&[1, 2, 3]), lv(&[-4, 0, 5])]).unwrap();
        let a = Covector::from_i64(&[2, -1, 7]);
        let b = Covector::from_i64(&[0, 3, 1]);
        let w = WedgeElement::of(&[a.clone(), b.clone()], 1, 3);
        let m =
            RatMatrix::from_rows(vec![plane.basis.iter().map(|x| a.pair(x)).collect(), plane.basis.iter().map(|x| b.pair(x)).collect()], 2);
        assert_eq!(w.pair(&plane), m.determinant());
    }

    #[test]
    fn wedge_examples() {
        let f = p2();
        let om = omega(&f, &[0]).unwrap();
        assert!(wedge_f(&f, &[0], 1, &om).unwrap().is_zero());
        assert!(!wedge_f(&f, &[0], 0, &om).unwrap().is_zero());
        // J a top cone: empty ω, f^J(x_i) = u_i^I
        let om = omega(&f, &[0, 1]).unwrap();
        assert!(om.is_empty());
        let w = wedge_f(&f, &[0, 1], 1, &om).unwrap();
        assert_eq!(w, WedgeElement::of(&[Covector::from_i64(&[0, 1])], 1, 2));
    }

    #[test]
    fn mu_examples() {
        let f = p2();
        let planes = GenericPlane::sample_many(&f, 1, 5, 1).unwrap();
        for plane in &planes {
            for face in f.faces(1) {
                let x = EquivariantClass::face(&f, face);
                assert_eq!(mu(&f, &x, face, plane), Ok(rat(1, 1)));
                for other in f.faces(1).iter().filter(|o| *o != face) {
                    assert_eq!(mu(&f, &EquivariantClass::face(&f, other), face, plane), Ok(rat(0, 1)));
                }
            }
        }
        let full = GenericPlane::new(&f, 1, vec![lv(&[1, 0]), lv(&[0, 1])]).unwrap();
        assert_eq!(full.line(&f, &[0]), Ok(lv(&[1, 0])));
        assert_eq!(mu(&f, &EquivariantClass::variable(&f, 1), &[0], &full), Ok(rat(0, 1)));
    }

    #[test]
    fn mu_k_examples() {
        let f = p2();
        assert_eq!(mu_k_todd(&f, &[], None), Ok(rat(1, 1)));
        for plane in GenericPlane::sample_many(&f, 1, 5, 2).unwrap() {
            for face in f.faces(1) {
                assert_eq!(mu_k_todd(&f, face, Some(&plane)), Ok(rat(1, 2)));
            }
        }
    }

    #[test]
    fn paths_agree_under_flips() {
        for f in [p2(), wp112(), square(), p3(), double_p2()] {
            for k in 1..=f.rank() {
                let planes = GenericPlane::sample_many(&f, k, 3, 9).unwrap();
                let family = spanning_family(&f, k);
                for plane in &planes {
                    for face in f.faces(k) {
                        for (_, x) in &family {
                            let base = mu_paths(&f, x, face, plane, Orientation::default()).unwrap();
                            assert_eq!(base.0, base.1);
                            for (a, b) in [(true, false), (false, true), (true, true)] {
                                let o = Orientation { flip_line: a, flip_omega: b };
                                assert_eq!(mu_paths(&f, x, face, plane, o).unwrap(), base);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_residuals_vanish() {
        for f in [p2(), wp112(), hirzebruch(1)] {
            let m = f.ray_count();
            let xis = [SupportClass::ones(m), SupportClass::from_ints(&(0..m as i64).map(|i| 2 * i - 1).collect::<Vec<_>>())];
            for k in 1..=f.rank() {
                for plane in GenericPlane::sample_many(&f, k, 3, 4).unwrap() {
                    for (_, x) in spanning_family(&f, k) {
                        for xi in &xis {
                            assert_eq!(decomposition_residual(&f, &x, xi, &plane), Ok(rat(0, 1)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weight_multiples_push_forward_to_zero() {
        let f = wp112();
        let xi = SupportClass::from_ints(&[1, 2, -1]);
        for k in 1..=2 {
            for (k1, x) in spanning_family(&f, k) {
                if k1 >= 1 {
                    assert_eq!(p_star(&f, &x, &xi), Ok(rat(0, 1)));
                }
            }
        }
    }

    #[test]
    fn spanning_family_has_full_rank() {
        for f in [p2(), square(), wp112(), p3(), double_p1()] {
            for k in 1..=f.rank() {
                let (r, d) = spanning_rank(&f, k);
                assert_eq!(r, d, "k = {k}");
            }
        }
    }

    #[test]
    fn cohomology_residuals_on_smooth_surfaces() {
        for f in [p2(), square(), hirzebruch(1), hirzebruch(2)] {
            for k in 1..=2 {
                for plane in GenericPlane::sample_many(&f, k, 3, 6).unwrap() {
                    for e in face_monomials(&f, k as u32) {
                        let x = EquivariantClass::monomial(&f, e, rat(1, 1));
                        assert!(cohomology_residual(&f, &x, &plane).unwrap().iter().all(Zero::is_zero));
                    }
                }
            }
        }
    }

    #[test]
    fn ehrhart_decomposes_over_faces() {
        for f in [p2(), wp112(), square(), hirzebruch(1)] {
            let m = f.ray_count();
            let xi = SupportClass::ones(m);
            let a = ehrhart_coefficients(&f, &xi).unwrap();
            for k in 1..=f.rank() {
                for plane in GenericPlane::sample_many(&f, k, 3, 8).unwrap() {
                    let mut total = Rat::zero();
                    for face in f.faces(k) {
                        let vol = volume(&MultiPolytope::face_of(&f, xi.clone(), face).unwrap()).unwrap();
                        total += mu_k_todd(&f, face, Some(&plane)).unwrap() * vol;
                    }
                    assert_eq!(total, a[k], "k = {k}");
                }
            }
        }
    }

    #[test]
    fn mu_k_ignores_edge_multipliers() {
        for f in [p2(), wp112()] {
            let g = f.scale_multipliers(2).unwrap();
            for k in 1..=2 {
                for plane in GenericPlane::sample_many(&f, k, 3, 12).unwrap() {
                    let plane2 = GenericPlane::new(&g, k, plane.basis.clone()).unwrap();
                    for face in f.faces(k) {
                        assert_eq!(mu_k_todd(&f, face, Some(&plane)), mu_k_todd(&g, face, Some(&plane2)));
                    }
                }
            }
        }
    }

    #[test]
    fn planes_are_reproducible_and_certified() {
        let f = p3();
        let a = GenericPlane::sample_many(&f, 2, 2, 77).unwrap();
        let b = GenericPlane::sample_many(&f, 2, 2, 77).unwrap();
        assert_eq!(a[0].basis, b[0].basis);
        assert_eq!(a[1].basis, b[1].basis);
        assert_eq!(a[0].certificate.line_conditions, f.faces(2).len());
        assert_eq!(a[0].certificate.surjectivity_conditions, f.faces(0).len() + f.faces(1).len());
        assert!(matches!(GenericPlane::new(&p2(), 1, vec![lv(&[1, 0]), lv(&[2, 0])]), Err(Error::NonGenericPlane(_))));
    }
}
