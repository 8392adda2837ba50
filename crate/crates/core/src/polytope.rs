//! Multi-polytopes, Duistermaat–Heckman functions, lattice-point counts and
//! volumes.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::arith::{rat, rat_int, Int, Rat};
use crate::cyclotomic::{exp_series, root_of_unity};
use crate::equivariant::{generic_directions, is_t_cartier, p_star, EquivariantClass, SupportClass};
use crate::fan::MultiFan;
use crate::lattice::{Covector, LatticeVector};
use crate::localization::{character_sum, todd_product};
use crate::{Error, Result};

/// Seed of the generic direction used by [`count_formula`] and [`count_bruteforce`].
pub const COUNT_SEED: u64 = 0xd1_5eed;

/// `P(ξ)_K`: a complete multi-fan with support numbers, restricted to the face
/// `K` (empty for the whole multi-polytope).
#[derive(Clone, Debug)]
pub struct MultiPolytope {
    fan: MultiFan,
    xi: SupportClass,
    face: Vec<usize>,
    /// `u_I = ι_I^*(ξ)` for top cones `I ⊇ K`, keyed by cone index.
    vertices: BTreeMap<usize, Covector>,
}

impl MultiPolytope {
    pub fn new(fan: &MultiFan, xi: SupportClass) -> Result<Self> {
        Self::face_of(fan, xi, &[])
    }

    pub fn face_of(fan: &MultiFan, xi: SupportClass, face: &[usize]) -> Result<Self> {
        if xi.len() != fan.ray_count() {
            return Err(Error::InvalidInput(format!("support class has {} entries for {} rays", xi.len(), fan.ray_count())));
        }
        let face = fan.check_face(face)?;
        if !fan.is_complete() {
            return Err(Error::InvalidFan("multi-fan is not complete".into()));
        }
        let vertices = fan.star(&face).map(|(c, _)| (c, xi.restrict(fan, c))).collect();
        Ok(MultiPolytope { fan: fan.clone(), xi, face, vertices })
    }

    pub fn fan(&self) -> &MultiFan {
        &self.fan
    }

    pub fn support(&self) -> &SupportClass {
        &self.xi
    }

    pub fn face(&self) -> &[usize] {
        &self.face
    }

    pub fn vertices(&self) -> &BTreeMap<usize, Covector> {
        &self.vertices
    }

    /// `ξ_{K+}`: every `d_i` with `i ∉ K` raised by `ε`.
    pub fn shifted(&self, epsilon: &Rat) -> MultiPolytope {
        let d = self.xi.d.iter().enumerate().map(|(i, d)| if self.face.contains(&i) { d.clone() } else { d + epsilon }).collect();
        let xi = SupportClass::new(d);
        let vertices = self.vertices.keys().map(|&c| (c, xi.restrict(&self.fan, c))).collect();
        MultiPolytope { fan: self.fan.clone(), xi, face: self.face.clone(), vertices }
    }

    /// Whether `u` lies in the affine space `A_K^*`.
    pub fn in_affine_span(&self, u: &[Rat]) -> bool {
        self.face.iter().all(|&k| pair_point(u, &self.fan.edges()[k]) == self.xi.d[k])
    }

    /// Rays `i ∉ K` in the star of `K`; their walls are the `F_i`.
    pub fn wall_rays(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.fan.star(&self.face).flat_map(|(_, top)| top.rays.iter().copied()).filter(|i| !self.face.contains(i)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `|H_{K,V}|`.
    pub fn face_group_order(&self) -> u64 {
        self.fan.face_group(&self.face).expect("face checked at construction").order()
    }
}

fn pair_point(u: &[Rat], v: &LatticeVector) -> Rat {
    u.iter().zip(&v.0).map(|(a, b)| a * rat_int(b)).sum()
}

/// One vertex term of the DH function: sign, weight, and the inequalities
/// `(⟨u, v_i⟩ - d_i)·s_i > 0` cutting out the flipped cone.
#[derive(Clone, Debug)]
pub struct ChartTerm {
    pub cone: usize,
    pub sign: i64,
    pub weight: i64,
    /// `(i, s_i)` for `i ∈ I∖K`, `s_i = sign⟨u_i^I, v⟩`.
    pub flips: Vec<(usize, i32)>,
}

/// The data defining the DH function at a generic direction.
#[derive(Clone, Debug)]
pub struct DhChart {
    pub direction: Vec<Rat>,
    pub terms: Vec<ChartTerm>,
}

impl DhChart {
    pub fn new(p: &MultiPolytope, v: &[Rat]) -> Result<Self> {
        let mut terms = Vec::new();
        for (c, top) in p.fan.star(&p.face) {
            let mut flips = Vec::new();
            let mut positive = 0;
            for (&i, u) in top.rays.iter().zip(&top.duals) {
                if p.face.contains(&i) {
                    continue;
                }
                let s = u.pair_rational(v);
                if s.is_zero() {
                    return Err(Error::NonGenericVector);
                }
                if s.is_positive() {
                    positive += 1;
                    flips.push((i, 1));
                } else {
                    flips.push((i, -1));
                }
            }
            let sign = if positive % 2 == 0 { 1 } else { -1 };
            terms.push(ChartTerm { cone: c, sign, weight: top.weight, flips });
        }
        Ok(DhChart { direction: v.to_vec(), terms })
    }

    /// `Σ_I (-1)^I w(I) φ_I(u)`.
    pub fn evaluate(&self, p: &MultiPolytope, u: &[Rat]) -> Result<i64> {
        if u.len() != p.fan.rank() || !p.in_affine_span(u) {
            return Err(Error::InvalidInput("point is not in the affine span of the face".into()));
        }
        let offsets: BTreeMap<usize, Rat> = p.wall_rays().into_iter().map(|i| (i, pair_point(u, &p.fan.edges()[i]) - &p.xi.d[i])).collect();
        if let Some((&ray, _)) = offsets.iter().find(|(_, a)| a.is_zero()) {
            return Err(Error::PointOnWall { ray });
        }
        let value = self
            .terms
            .iter()
            .filter(|t| t.flips.iter().all(|&(i, s)| (offsets[&i].is_positive()) == (s > 0)))
            .map(|t| t.sign * t.weight)
            .sum();
        Ok(value)
    }
}

/// `DH_{P_K(ξ)}(u)` for `u ∈ A_K^*` off all walls, computed at direction `v`.
pub fn dh_evaluate(p: &MultiPolytope, u: &[Rat], v: &[Rat]) -> Result<i64> {
    DhChart::new(p, v)?.evaluate(p, u)
}

/// The integer box scanned by [`count_bruteforce`]: the bounding box of the
/// vertices of `P(ξ_{K+})`, widened by one in every coordinate.
pub fn enumeration_box(p: &MultiPolytope) -> Vec<(Int, Int)> {
    let shifted = p.shifted(&rat(1, 2));
    let n = p.fan.rank();
    (0..n)
        .map(|j| {
            let coords = shifted.vertices.values().map(|u| u.0[j].clone());
            let lo = coords.clone().min().expect("a face lies in a top cone").floor().to_integer() - Int::one();
            let hi = coords.max().expect("a face lies in a top cone").ceil().to_integer() + Int::one();
            (lo, hi)
        })
        .collect()
}

/// Lattice points of `A_K^*` in the enumeration box.
pub fn box_points(p: &MultiPolytope) -> Vec<Vec<Int>> {
    let bounds = enumeration_box(p);
    let mut out = Vec::new();
    let mut point: Vec<Int> = bounds.iter().map(|(lo, _)| lo.clone()).collect();
    if bounds.is_empty() {
        return vec![Vec::new()];
    }
    loop {
        let q: Vec<Rat> = point.iter().map(rat_int).collect();
        if p.in_affine_span(&q) {
            out.push(point.clone());
        }
        let mut j = 0;
        loop {
            if j == bounds.len() {
                return out;
            }
            if point[j] < bounds[j].1 {
                point[j] += 1;
                break;
            }
            point[j] = bounds[j].0.clone();
            j += 1;
        }
    }
}

fn require_integral(p: &MultiPolytope) -> Result<()> {
    if p.xi.is_integral() {
        Ok(())
    } else {
        Err(Error::InvalidInput("lattice-point counts need integer support numbers".into()))
    }
}

fn count_direction(p: &MultiPolytope) -> Vec<Rat> {
    generic_directions(&p.fan, COUNT_SEED, 1)[0].to_rational()
}

/// `#(P(ξ)_K) = Σ_{u ∈ A_K^* ∩ M} DH_{P_K(ξ_{K+})}(u)` with `ε = 1/2`.
pub fn count_bruteforce(p: &MultiPolytope) -> Result<Int> {
    require_integral(p)?;
    let shifted = p.shifted(&rat(1, 2));
    let chart = DhChart::new(&shifted, &count_direction(p))?;
    let mut total = 0i64;
    for point in box_points(p) {
        let q: Vec<Rat> = point.iter().map(rat_int).collect();
        total += chart.evaluate(&shifted, &q)?;
    }
    Ok(total.into())
}

/// The same count from the localization formula: a sum over top cones
/// `I ⊇ K` and `h ∈ H_{I,V}` of the `t^0` coefficient of
/// `χ_I(u_I, h) e^{t⟨u_I, v⟩} ∏_{i ∈ I∖K} 1/(1 - χ_I(u_i^I, h)^{-1} e^{-t⟨u_i^I, v⟩})`.
pub fn count_formula(p: &MultiPolytope) -> Result<Int> {
    require_integral(p)?;
    let v = count_direction(p);
    let r = (p.fan.rank() - p.face.len()) as i64;
    let mut total = Rat::zero();
    for (c, top) in p.fan.star(&p.face) {
        let free: Vec<usize> = (0..top.rays.len()).filter(|&j| !p.face.contains(&top.rays[j])).collect();
        let cs: Vec<Rat> = free.iter().map(|&j| top.duals[j].pair_rational(&v)).collect();
        let a = p.vertices[&c].pair_rational(&v);
        let d: Vec<&Rat> = top.rays.iter().map(|&i| &p.xi.d[i]).collect();
        let exp = exp_series(&a, r);
        let sum = character_sum(&top.group, |h| {
            let xi_phase: Rat = d.iter().zip(&h.phases).map(|(d, ph)| *d * ph).sum();
            let chis = free.iter().map(|&j| root_of_unity(&-&h.phases[j], h.order)).collect::<Result<Vec<_>>>()?;
            let series = todd_product(&cs, &chis, r)?.mul(&exp);
            Ok(series.scale(&root_of_unity(&xi_phase, h.order)?))
        })?;
        let value = sum.coefficient(0).to_rational().ok_or_else(|| Error::NotRational(format!("{:?}", sum.coefficient(0))))?;
        total += value * Rat::new(top.weight.into(), top.group.order().into());
    }
    if !total.is_integer() {
        return Err(Error::Inconsistent(format!("localization count {total} is not an integer")));
    }
    Ok(total.to_integer())
}

/// `#(P(ξ)_K)` computed from the localization formula and, independently,
/// from the Todd push-forward `p_*(e^ξ x_K T_T(Δ,V)_K)` (T-Cartier `ξ`) or the
/// brute-force count (otherwise). The two must agree.
pub fn count_face(p: &MultiPolytope) -> Result<Int> {
    let a = count_formula(p)?;
    let b = if is_t_cartier(&p.fan, &p.xi) { crate::todd::face_todd_count(&p.fan, &p.face, &p.xi)? } else { count_bruteforce(p)? };
    if a != b {
        return Err(Error::Inconsistent(format!("face count {a} from localization, {b} from the second route")));
    }
    Ok(a)
}

/// `vol P(ξ)_K = |H_{K,V}|·p_*(e^ξ x_K)`, in the lattice `A_K^* ∩ M`.
pub fn volume(p: &MultiPolytope) -> Result<Rat> {
    let x = EquivariantClass::face(&p.fan, &p.face);
    let value = p_star(&p.fan, &x, &p.xi)?;
    Ok(value * rat_int(&Int::from(p.face_group_order())))
}

/// The same volume as `|H_{K,V}|·p_*(ξ^{n-k}/(n-k)!·x_K)`.
pub fn volume_by_power(p: &MultiPolytope) -> Result<Rat> {
    let fan = &p.fan;
    let r = fan.rank() - p.face.len();
    let xi = p.xi.to_class(fan);
    let mut x = EquivariantClass::face(fan, &p.face);
    let mut fact = Int::one();
    for j in 1..=r {
        x = x.mul(&xi, fan);
        fact *= j;
    }
    let value = p_star(fan, &x.scale(&rat_int(&fact).recip()), &SupportClass::zero(fan.ray_count()))?;
    Ok(value * rat_int(&Int::from(p.face_group_order())))
}

/// Lattice length of the boundary of a polygon: `Σ_i vol P(ξ)_i`.
pub fn boundary_length(p: &MultiPolytope) -> Result<Rat> {
    let mut total = Rat::zero();
    for i in 0..p.fan.ray_count() {
        total += volume(&MultiPolytope::face_of(&p.fan, p.xi.clone(), &[i])?)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::fixtures::*;
    use crate::fan::random_complete_fan;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn poly(fan: &MultiFan, d: &[i64], face: &[usize]) -> MultiPolytope {
        MultiPolytope::face_of(fan, SupportClass::from_ints(d), face).unwrap()
    }

    fn q(xs: &[(i64, i64)]) -> Vec<Rat> {
        xs.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn vertices_lie_on_their_walls() {
        for f in [p2(), square(), wp112(), hirzebruch(1), p3()] {
            let m = f.ray_count();
            let d: Vec<i64> = (0..m as i64).map(|i| i % 3 + 1).collect();
            let p = poly(&f, &d, &[]);
            for (&c, u) in p.vertices() {
                for &i in &f.top_cones()[c].rays {
                    assert_eq!(u.pair(&f.edges()[i]), rat(d[i], 1));
                }
            }
        }
    }

    #[test]
    fn dh_examples() {
        let p = poly(&square(), &[1, 1, 1, 1], &[]);
        let v = q(&[(3, 1), (7, 1)]);
        assert_eq!(dh_evaluate(&p, &q(&[(0, 1), (0, 1)]), &v), Ok(1));
        assert_eq!(dh_evaluate(&p, &q(&[(5, 1), (0, 1)]), &v), Ok(0));
        assert_eq!(dh_evaluate(&p, &q(&[(1, 1), (0, 1)]), &v), Err(Error::PointOnWall { ray: 0 }));
        let p = poly(&double_p1(), &[1, 1], &[]);
        assert_eq!(dh_evaluate(&p, &q(&[(1, 2)]), &q(&[(1, 1)])), Ok(2));
    }

    #[test]
    fn dh_is_independent_of_direction() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in [p2(), square(), wp112(), hirzebruch(2), winding_square(), double_p2()] {
            let m = f.ray_count();
            let p = poly(&f, &vec![1; m], &[]);
            let vs = generic_directions(&f, 5, 2);
            let (c1, c2) = (DhChart::new(&p, &vs[0].to_rational()).unwrap(), DhChart::new(&p, &vs[1].to_rational()).unwrap());
            let mut checked = 0;
            while checked < 100 {
                let u: Vec<Rat> = (0..2).map(|_| rat(rng.gen_range(-40..=40), rng.gen_range(1..=7))).collect();
                match (c1.evaluate(&p, &u), c2.evaluate(&p, &u)) {
                    (Err(Error::PointOnWall { .. }), _) => continue,
                    (a, b) => assert_eq!(a, b),
                }
                checked += 1;
            }
        }
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(count_bruteforce(&poly(&square(), &[1; 4], &[])), Ok(9.into()));
        assert_eq!(count_bruteforce(&poly(&p2(), &[1; 3], &[])), Ok(10.into()));
        assert_eq!(count_bruteforce(&poly(&wp112(), &[1; 3], &[])), Ok(9.into()));
        assert_eq!(count_bruteforce(&poly(&p1(), &[1; 2], &[])), Ok(3.into()));
        assert_eq!(count_bruteforce(&poly(&p3(), &[1; 4], &[])), Ok(35.into()));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(count_formula(&poly(&square(), &[1; 4], &[])), Ok(9.into()));
        assert_eq!(count_formula(&poly(&p2(), &[1; 3], &[])), Ok(10.into()));
        assert_eq!(count_formula(&poly(&wp112(), &[1; 3], &[])), Ok(9.into()));
        let p = poly(&wp112(), &[1, 0, 0], &[]);
        assert_eq!(count_formula(&p), count_bruteforce(&p));
    }

    #[test]
    fn face_examples() {
        assert_eq!(count_face(&poly(&square(), &[1; 4], &[1])), Ok(3.into()));
        assert_eq!(count_face(&poly(&p2(), &[1; 3], &[1, 2])), Ok(1.into()));
        assert_eq!(count_face(&poly(&p1(), &[1; 2], &[])), Ok(3.into()));
        for f in [p2(), wp112(), hirzebruch(1), double_p1(), p3()] {
            let m = f.ray_count();
            for k in 0..=f.rank() {
                for face in f.faces(k) {
                    let p = poly(&f, &vec![2; m], face);
                    assert_eq!(count_face(&p).unwrap(), count_bruteforce(&p).unwrap(), "{face:?}");
                }
            }
        }
    }

    #[test]
    fn non_cartier_faces() {
        let f = wp112();
        for face in f.faces(1).iter().chain(f.faces(0)) {
            for d in [[1, 0, 0], [0, 1, 0], [2, -1, 3]] {
                let p = poly(&f, &d, face);
                assert_eq!(count_face(&p).unwrap(), count_bruteforce(&p).unwrap());
            }
        }
    }

    #[test]
    fn random_fans_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..10 {
            let f = random_complete_fan(seed, 2, 3);
            let d: Vec<i64> = (0..f.ray_count()).map(|_| rng.gen_range(-5..=5)).collect();
            let p = poly(&f, &d, &[]);
            assert_eq!(count_formula(&p).unwrap(), count_bruteforce(&p).unwrap(), "seed {seed} d {d:?}");
        }
    }

    #[test]
    fn volume_examples() {
        assert_eq!(volume(&poly(&square(), &[1; 4], &[])), Ok(rat(4, 1)));
        assert_eq!(volume(&poly(&square(), &[1; 4], &[1])), Ok(rat(2, 1)));
        assert_eq!(volume(&poly(&p2(), &[1; 3], &[0])), Ok(rat(3, 1)));
        for nu in 1..=3 {
            assert_eq!(volume(&poly(&p1(), &[nu, nu], &[])), Ok(rat(2 * nu, 1)));
        }
    }

    #[test]
    fn volume_routes_agree_and_scale() {
        for f in [p2(), wp112(), hirzebruch(2), p3(), double_p2()] {
            let m = f.ray_count();
            for k in 0..f.rank() {
                for face in f.faces(k) {
                    let p = poly(&f, &vec![1; m], face);
                    let v = volume(&p).unwrap();
                    assert_eq!(volume_by_power(&p).unwrap(), v);
                    let p3x = poly(&f, &vec![3; m], face);
                    let scale = rat(3, 1).pow((f.rank() - k) as i32);
                    assert_eq!(volume(&p3x).unwrap(), v * scale);
                }
            }
        }
    }

    #[test]
    fn pick_on_honest_polygons() {
        for (f, d) in [(square(), vec![1, 2, 1, 3]), (p2(), vec![2, 0, 1]), (hirzebruch(1), vec![1, 1, 2, 1]), (wp112(), vec![1, 1, 1])] {
            let p = poly(&f, &d, &[]);
            let area = volume(&p).unwrap();
            let boundary = boundary_length(&p).unwrap();
            let count = rat_int(&count_bruteforce(&p).unwrap());
            assert_eq!(count, area + boundary / rat(2, 1) + rat(1, 1));
        }
    }

    #[test]
    fn outer_shell_is_empty() {
        for f in [p1(), p2(), square(), wp112(), hirzebruch(3), winding_square(), double_p2(), p3()] {
            let m = f.ray_count();
            let p = poly(&f, &vec![1; m], &[]);
            let shifted = p.shifted(&rat(1, 2));
            let chart = DhChart::new(&shifted, &count_direction(&p)).unwrap();
            let bounds = enumeration_box(&p);
            for point in box_points(&p) {
                let on_shell = point.iter().zip(&bounds).any(|(x, (lo, hi))| x == lo || x == hi);
                if on_shell {
                    let u: Vec<Rat> = point.iter().map(rat_int).collect();
                    assert_eq!(chart.evaluate(&shifted, &u), Ok(0));
                }
            }
        }
    }
}
