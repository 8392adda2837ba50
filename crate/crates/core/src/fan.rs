//! Simplicial multi-fans `Δ = (Σ, C, w)`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{lcm_of_denominators, rat_int, Int, Rat};
use crate::lattice::{dual_basis, quotient_group, Covector, FiniteAbelianGroup, LatticeVector, Saturation};
use crate::{Error, Result};

/// Number of random directions used by the pre-completeness test above rank 3.
pub const RANDOM_CHAMBER_SAMPLES: usize = 200;

/// A top cone as given in the input: ascending ray indices and a weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawCone {
    pub rays: Vec<usize>,
    pub weight: i64,
}

/// Unvalidated fan data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFan {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    /// Defaults to all ones.
    pub edge_multipliers: Option<Vec<u64>>,
    pub cones: Vec<RawCone>,
}

/// A top cone together with its cached localization data.
#[derive(Clone, Debug)]
pub struct TopCone {
    pub rays: Vec<usize>,
    pub weight: i64,
    /// `u_i^I`, dual to the edge vectors `v_i`, in the order of `rays`.
    pub duals: Vec<Covector>,
    /// `H_{I,V} = N / N_{I,V}`; phase `j` of an element is `⟨u_{rays[j]}^I, v(h)⟩`.
    pub group: FiniteAbelianGroup,
}

impl TopCone {
    pub fn position(&self, ray: usize) -> Option<usize> {
        self.rays.iter().position(|&r| r == ray)
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        face.iter().all(|r| self.rays.contains(r))
    }

    /// `u_i^I` for a ray `i` of the cone.
    pub fn dual(&self, ray: usize) -> Option<&Covector> {
        self.position(ray).map(|p| &self.duals[p])
    }
}

#[derive(Clone, Debug)]
pub struct MultiFan {
    rank: usize,
    rays: Vec<LatticeVector>,
    multipliers: Vec<Int>,
    edges: Vec<LatticeVector>,
    cones: Vec<TopCone>,
    /// `faces[k]` is `Σ^{(k)}`, each face ascending, the list sorted.
    faces: Vec<Vec<Vec<usize>>>,
}

/// Outcome of the pre-completeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precompleteness {
    /// The common value of `d_v`, if all sampled directions agree.
    pub degree: Option<i64>,
    /// Distinct values of `d_v` seen, ascending.
    pub values: Vec<i64>,
    /// Whether every chamber was visited (rank ≤ 3) or directions were random.
    pub exact: bool,
    pub samples: usize,
}

impl Precompleteness {
    pub fn is_precomplete(&self) -> bool {
        self.degree.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completeness {
    pub precompleteness: Precompleteness,
    /// Faces `J ∈ Σ^{(n-1)}` whose projected multi-fan is not pre-complete.
    pub failing_faces: Vec<Vec<usize>>,
}

impl Completeness {
    pub fn is_complete(&self) -> bool {
        self.precompleteness.is_precomplete() && self.failing_faces.is_empty()
    }
}

/// The projected multi-fan `Δ_K` in `N^K = N / N_K`.
#[derive(Clone, Debug)]
pub struct ProjectedMultiFan {
    pub face: Vec<usize>,
    pub fan: MultiFan,
    /// Ray `j` of `fan` is the image of ray `link_rays[j]` of the base fan.
    pub link_rays: Vec<usize>,
    /// Top cone `j` of `fan` is the image of top cone `top_cones[j]` of the base fan.
    pub top_cones: Vec<usize>,
    /// Rows of the quotient map `N → N^K`.
    pub quotient: Vec<Vec<Int>>,
}

impl MultiFan {
    pub fn validate(raw: &RawFan) -> Result<MultiFan> {
        let n = raw.rank;
        if raw.cones.is_empty() {
            return Err(Error::EmptyFan);
        }
        let m = raw.rays.len();
        let mut rays = Vec::with_capacity(m);
        let mut contents = Vec::with_capacity(m);
        for (i, r) in raw.rays.iter().enumerate() {
            if r.len() != n {
                return Err(Error::RankMismatch(format!("ray {i} has {} coordinates, rank is {n}", r.len())));
            }
            let v = LatticeVector::from_i64(r);
            if v.is_zero() {
                return Err(Error::InvalidFan(format!("ray {i} is zero")));
            }
            contents.push(v.content());
            rays.push(v.primitive());
        }
        let multipliers: Vec<Int> = match &raw.edge_multipliers {
            None => vec![Int::one(); m],
            Some(k) if k.len() != m => {
                return Err(Error::InvalidFan(format!("{} edge multipliers for {m} rays", k.len())));
            }
            Some(k) => {
                if let Some(i) = k.iter().position(|&x| x == 0) {
                    return Err(Error::InvalidFan(format!("edge multiplier of ray {i} is zero")));
                }
                k.iter().map(|&x| Int::from(x)).collect()
            }
        };
        // a non-primitive ray contributes its content to the edge multiplier
        let multipliers = multipliers.into_iter().zip(contents).map(|(k, c)| k * c).collect();
        let cones = raw.cones.iter().enumerate().map(|(c, cone)| (cone.rays.clone(), cone.weight, c)).collect::<Vec<_>>();
        Self::build(n, rays, multipliers, cones)
    }

    fn build(n: usize, rays: Vec<LatticeVector>, multipliers: Vec<Int>, cones: Vec<(Vec<usize>, i64, usize)>) -> Result<MultiFan> {
        let m = rays.len();
        let edges: Vec<LatticeVector> = rays.iter().zip(&multipliers).map(|(r, k)| r.scaled(k)).collect();
        let mut seen = BTreeSet::new();
        let mut top = Vec::with_capacity(cones.len());
        for (ray_ids, weight, c) in cones {
            if ray_ids.len() != n {
                return Err(Error::InvalidFan(format!("cone {c} has {} rays, rank is {n}", ray_ids.len())));
            }
            if let Some(&bad) = ray_ids.iter().find(|&&r| r >= m) {
                return Err(Error::InvalidFan(format!("cone {c} refers to ray {bad}, but there are {m} rays")));
            }
            if ray_ids.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidFan(format!("cone {c} ray indices are not strictly ascending")));
            }
            if weight == 0 {
                return Err(Error::InvalidFan(format!("cone {c} has weight 0")));
            }
            if !seen.insert(ray_ids.clone()) {
                return Err(Error::InvalidFan(format!("cone {c} is listed twice")));
            }
            let cone_edges: Vec<LatticeVector> = ray_ids.iter().map(|&r| edges[r].clone()).collect();
            let duals = dual_basis(&cone_edges).map_err(|_| Error::DependentRays { cone: c })?;
            let group = quotient_group(&cone_edges, n).map_err(|e| match e {
                Error::SingularInput => Error::DependentRays { cone: c },
                other => other,
            })?;
            top.push(TopCone { rays: ray_ids, weight, duals, group });
        }
        let used: BTreeSet<usize> = top.iter().flat_map(|c| c.rays.iter().copied()).collect();
        if let Some(unused) = (0..m).find(|r| !used.contains(r)) {
            return Err(Error::InvalidFan(format!("ray {unused} lies in no top cone")));
        }
        let mut faces: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); n + 1];
        for cone in &top {
            for mask in 0u64..(1u64 << n) {
                let face: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| cone.rays[b]).collect();
                faces[face.len()].insert(face);
            }
        }
        let faces = faces.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(MultiFan { rank: n, rays, multipliers, edges, cones: top, faces })
    }

    /// The multi-fan consisting of the single cone spanned by `edges`.
    ///
    /// Each edge vector is split into a primitive ray and its content.
    pub fn single_cone(edges: &[LatticeVector]) -> Result<MultiFan> {
        let n = edges.len();
        let rays = edges.iter().map(LatticeVector::primitive).collect();
        let multipliers = edges.iter().map(LatticeVector::content).collect();
        Self::build(n, rays, multipliers, vec![((0..n).collect(), 1, 0)]).map_err(|e| match e {
            Error::DependentRays { .. } => Error::SingularInput,
            other => other,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    /// Primitive generators of the rays.
    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn multipliers(&self) -> &[Int] {
        &self.multipliers
    }

    /// The prescribed edge vectors `v_i = k_i · ray_i`.
    pub fn edges(&self) -> &[LatticeVector] {
        &self.edges
    }

    pub fn top_cones(&self) -> &[TopCone] {
        &self.cones
    }

    /// `Σ^{(k)}`.
    pub fn faces(&self, k: usize) -> &[Vec<usize>] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        f.len() == face.len() && self.faces(f.len()).binary_search(&f).is_ok()
    }

    /// Ascending copy of `face`, or `FaceNotInFan`.
    pub fn check_face(&self, face: &[usize]) -> Result<Vec<usize>> {
        let mut f = face.to_vec();
        f.sort_unstable();
        if self.is_face(&f) {
            Ok(f)
        } else {
            Err(Error::FaceNotInFan(face.to_vec()))
        }
    }

    /// Top cones containing `face`.
    pub fn star<'a>(&'a self, face: &'a [usize]) -> impl Iterator<Item = (usize, &'a TopCone)> + 'a {
        self.cones.iter().enumerate().filter(move |(_, c)| c.contains_face(face))
    }

    /// `H_{K,V} = N_K / N_{K,V}` for a face `K`.
    pub fn face_group(&self, face: &[usize]) -> Result<FiniteAbelianGroup> {
        let face = self.check_face(face)?;
        let edges: Vec<LatticeVector> = face.iter().map(|&r| self.edges[r].clone()).collect();
        quotient_group(&edges, self.rank)
    }

    /// `⟨u_i^I, v⟩ ≠ 0` for all top cones `I` and `i ∈ I`.
    pub fn is_generic(&self, v: &LatticeVector) -> bool {
        v.rank() == self.rank && self.cones.iter().all(|c| c.duals.iter().all(|u| !u.pair(v).is_zero()))
    }

    fn is_generic_rational(&self, v: &[Rat]) -> bool {
        self.cones.iter().all(|c| c.duals.iter().all(|u| !u.pair_rational(v).is_zero()))
    }

    /// `d_v = Σ_{v ∈ C(I)} w(I)`.
    pub fn degree(&self, v: &LatticeVector) -> Result<i64> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch(format!("vector has {} coordinates, rank is {}", v.rank(), self.rank)));
        }
        if !self.is_generic(v) {
            return Err(Error::NonGenericVector);
        }
        Ok(self.degree_rational(&v.to_rational()))
    }

    fn degree_rational(&self, v: &[Rat]) -> i64 {
        self.cones.iter().filter(|c| c.duals.iter().all(|u| u.pair_rational(v).is_positive())).map(|c| c.weight).sum()
    }

    /// Largest absolute entry of the denominator-cleared covectors `u_i^I`.
    pub fn dual_entry_bound(&self) -> Int {
        self.cones
            .iter()
            .flat_map(|c| c.duals.iter())
            .flat_map(|u| {
                let l = lcm_of_denominators(&u.0);
                u.0.iter().map(move |q| (q * rat_int(&l)).to_integer().abs()).collect::<Vec<_>>()
            })
            .max()
            .unwrap_or_else(Int::one)
    }

    /// A generic vector drawn uniformly from `[-B, B]^n`, `B = 10·dual_entry_bound`.
    pub fn sample_generic(&self, rng: &mut impl Rng) -> LatticeVector {
        let b: i64 = (self.dual_entry_bound() * Int::from(10)).to_i64().unwrap_or(i64::MAX / 4).max(1);
        loop {
            let v = LatticeVector((0..self.rank).map(|_| Int::from(rng.gen_range(-b..=b))).collect());
            if self.is_generic(&v) {
                return v;
            }
        }
    }

    pub fn precompleteness(&self) -> Precompleteness {
        let n = self.rank;
        let (samples, exact): (Vec<Vec<Rat>>, bool) = if n <= 3 {
            let normals: Vec<Covector> = self.cones.iter().flat_map(|c| c.duals.iter().cloned()).collect();
            (chamber_samples(&normals, n), true)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            let s = (0..RANDOM_CHAMBER_SAMPLES).map(|_| self.sample_generic(&mut rng).to_rational()).collect();
            (s, false)
        };
        let values: BTreeSet<i64> =
            samples.iter().inspect(|v| debug_assert!(self.is_generic_rational(v))).map(|v| self.degree_rational(v)).collect();
        let values: Vec<i64> = values.into_iter().collect();
        Precompleteness { degree: (values.len() == 1).then(|| values[0]), values, exact, samples: samples.len() }
    }

    pub fn is_precomplete(&self) -> bool {
        self.precompleteness().is_precomplete()
    }

    /// Pre-complete, and every `Δ_J` with `J ∈ Σ^{(n-1)}` pre-complete.
    pub fn completeness(&self) -> Completeness {
        let precompleteness = self.precompleteness();
        let mut failing_faces = Vec::new();
        if self.rank >= 1 {
            for face in self.faces(self.rank - 1) {
                let projected = self.project(face).expect("face of the fan");
                if !projected.fan.is_precomplete() {
                    failing_faces.push(face.clone());
                }
            }
        }
        Completeness { precompleteness, failing_faces }
    }

    pub fn is_complete(&self) -> bool {
        self.completeness().is_complete()
    }

    /// The degree `Td[Δ]` of a pre-complete multi-fan.
    pub fn todd_genus(&self) -> Option<i64> {
        self.precompleteness().degree
    }

    pub fn project(&self, face: &[usize]) -> Result<ProjectedMultiFan> {
        let face = self.check_face(face)?;
        let n = self.rank;
        let k = face.len();
        let face_edges: Vec<LatticeVector> = face.iter().map(|&r| self.edges[r].clone()).collect();
        let quotient = Saturation::of(&face_edges, n)?.quotient_rows();
        let image = |v: &LatticeVector| -> LatticeVector {
            LatticeVector(quotient.iter().map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum()).collect())
        };
        let star: Vec<usize> = self.star(&face).map(|(i, _)| i).collect();
        let link_rays: Vec<usize> = star
            .iter()
            .flat_map(|&c| self.cones[c].rays.iter().copied())
            .filter(|r| !face.contains(r))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut rays = Vec::with_capacity(link_rays.len());
        let mut multipliers = Vec::with_capacity(link_rays.len());
        for &r in &link_rays {
            let img = image(&self.edges[r]);
            let content = img.content();
            rays.push(img.primitive());
            multipliers.push(content);
        }
        let cones = star
            .iter()
            .map(|&c| {
                let ids: Vec<usize> = self.cones[c]
                    .rays
                    .iter()
                    .filter(|r| !face.contains(r))
                    .map(|r| link_rays.binary_search(r).expect("link ray"))
                    .collect();
                (ids, self.cones[c].weight, c)
            })
            .collect();
        let fan = Self::build(n - k, rays, multipliers, cones)?;
        Ok(ProjectedMultiFan { face, fan, link_rays, top_cones: star, quotient })
    }

    /// Star subdivision of top cone `cone` at an interior vector `r`.
    ///
    /// The cone is replaced by `(I ∖ {i}) ∪ {r}` for each `i ∈ I`, with the
    /// weight of `I`. The new ray gets the content of `r` as its multiplier.
    pub fn star_subdivide(&self, cone: usize, r: &LatticeVector) -> Result<MultiFan> {
        let target = self.cones.get(cone).ok_or_else(|| Error::InvalidInput(format!("no top cone {cone}")))?;
        if r.rank() != self.rank {
            return Err(Error::RankMismatch(format!("new ray has {} coordinates", r.rank())));
        }
        if !target.duals.iter().all(|u| u.pair(r).is_positive()) {
            return Err(Error::RayNotInterior);
        }
        let new = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(r.primitive());
        let mut multipliers = self.multipliers.clone();
        multipliers.push(r.content());
        let mut cones = Vec::with_capacity(self.cones.len() + self.rank - 1);
        for (c, tc) in self.cones.iter().enumerate() {
            if c != cone {
                cones.push((tc.rays.clone(), tc.weight, c));
                continue;
            }
            for drop in 0..self.rank {
                let mut ids: Vec<usize> = tc.rays.iter().enumerate().filter(|(p, _)| *p != drop).map(|(_, &x)| x).collect();
                ids.push(new);
                cones.push((ids, tc.weight, c));
            }
        }
        Self::build(self.rank, rays, multipliers, cones)
    }

    /// Same cones with every edge multiplier replaced.
    pub fn with_multipliers(&self, multipliers: &[u64]) -> Result<MultiFan> {
        let mut raw = self.to_raw();
        raw.edge_multipliers = Some(multipliers.to_vec());
        Self::validate(&raw)
    }

    /// Same cones with every edge multiplier multiplied by `factor`.
    pub fn scale_multipliers(&self, factor: u64) -> Result<MultiFan> {
        let k: Vec<u64> = self.multipliers.iter().map(|x| x.to_u64().expect("small multiplier") * factor).collect();
        self.with_multipliers(&k)
    }

    /// Same cones with every weight multiplied by `factor`.
    pub fn scale_weights(&self, factor: i64) -> Result<MultiFan> {
        let mut raw = self.to_raw();
        raw.cones.iter_mut().for_each(|c| c.weight *= factor);
        Self::validate(&raw)
    }

    pub fn to_raw(&self) -> RawFan {
        RawFan {
            rank: self.rank,
            rays: self.rays.iter().map(|r| r.0.iter().map(|x| x.to_i64().expect("small coordinate")).collect()).collect(),
            edge_multipliers: Some(self.multipliers.iter().map(|x| x.to_u64().expect("small multiplier")).collect()),
            cones: self.cones.iter().map(|c| RawCone { rays: c.rays.clone(), weight: c.weight }).collect(),
        }
    }

    /// Whether every edge multiplier is 1 and every top cone is unimodular.
    pub fn is_smooth(&self) -> bool {
        self.cones.iter().all(|c| c.group.order() == 1)
    }
}

/// One rational point in every chamber of the central arrangement `{u = 0}`
/// in rank ≤ 3, found on the affine slices `x_n = ±1`.
fn chamber_samples(normals: &[Covector], rank: usize) -> Vec<Vec<Rat>> {
    let one = Rat::one();
    match rank {
        0 => vec![vec![]],
        1 => vec![vec![one.clone()], vec![-one]],
        2 => {
            let mut out = Vec::new();
            for s in [one.clone(), -one.clone()] {
                // a0 x + a1 s = 0
                let crit: Vec<Rat> = normals.iter().filter(|a| !a.0[0].is_zero()).map(|a| -(&a.0[1] * &s) / &a.0[0]).collect();
                for x in interval_samples(crit) {
                    out.push(vec![x, s.clone()]);
                }
            }
            out
        }
        3 => {
            let mut out = Vec::new();
            for s in [one.clone(), -one.clone()] {
                // a0 x + a1 y + a2 s = 0
                let lines: Vec<&Covector> = normals.iter().filter(|a| !a.0[1].is_zero()).collect();
                let mut crit: Vec<Rat> =
                    normals.iter().filter(|a| a.0[1].is_zero() && !a.0[0].is_zero()).map(|a| -(&a.0[2] * &s) / &a.0[0]).collect();
                for (i, a) in lines.iter().enumerate() {
                    for b in &lines[i + 1..] {
                        // y = p x + q for each line
                        let (pa, qa) = slope(a, &s);
                        let (pb, qb) = slope(b, &s);
                        if pa != pb {
                            crit.push((&qb - &qa) / (&pa - &pb));
                        }
                    }
                }
                for x in interval_samples(crit) {
                    let ys: Vec<Rat> = lines
                        .iter()
                        .map(|a| {
                            let (p, q) = slope(a, &s);
                            p * &x + q
                        })
                        .collect();
                    for y in interval_samples(ys) {
                        out.push(vec![x.clone(), y, s.clone()]);
                    }
                }
            }
            out
        }
        _ => unreachable!("exact chamber enumeration only in rank ≤ 3"),
    }
}

fn slope(a: &Covector, s: &Rat) -> (Rat, Rat) {
    (-&a.0[0] / &a.0[1], -(&a.0[2] * s) / &a.0[1])
}

/// Points strictly between consecutive distinct values, plus one beyond each end.
fn interval_samples(mut values: Vec<Rat>) -> Vec<Rat> {
    values.sort();
    values.dedup();
    if values.is_empty() {
        return vec![Rat::zero()];
    }
    let one = Rat::one();
    let mut out = vec![&values[0] - &one];
    for w in values.windows(2) {
        out.push((&w[0] + &w[1]) / Rat::from_integer(2.into()));
    }
    out.push(values.last().unwrap() + &one);
    out
}

/// A complete simplicial fan obtained from the fan of projective `dim`-space
/// by `steps` seeded random star subdivisions.
pub fn random_complete_fan(seed: u64, dim: usize, steps: usize) -> MultiFan {
    assert!((1..=3).contains(&dim), "random fans are generated in rank 1..=3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fan = fixtures::projective_space(dim);
    for _ in 0..steps {
        let cone = rng.gen_range(0..fan.top_cones().len());
        let edges: Vec<LatticeVector> = fan.top_cones()[cone].rays.iter().map(|&r| fan.edges()[r].clone()).collect();
        let coeffs: Vec<i64> = (0..dim).map(|_| rng.gen_range(1..=2)).collect();
        let mut r = combine(&edges, &coeffs).primitive();
        if max_child_index(&edges, &r) > Int::from(12) {
            r = combine(&edges, &vec![1; dim]).primitive();
        }
        fan = fan.star_subdivide(cone, &r).expect("interior by construction");
    }
    fan
}

fn combine(edges: &[LatticeVector], coeffs: &[i64]) -> LatticeVector {
    let n = edges[0].rank();
    let mut acc = LatticeVector::zero(n);
    for (e, &c) in edges.iter().zip(coeffs) {
        acc = acc.add(&e.scaled(&Int::from(c)));
    }
    acc
}

fn max_child_index(edges: &[LatticeVector], r: &LatticeVector) -> Int {
    (0..edges.len())
        .map(|drop| {
            let mut child = edges.to_vec();
            child[drop] = r.clone();
            crate::lattice::determinant(&child).abs()
        })
        .max()
        .unwrap_or_else(Int::zero)
}

/// Named fixture fans.
pub mod fixtures {
    use super::{MultiFan, RawCone, RawFan};

    fn fan(rank: usize, rays: &[&[i64]], cones: &[(&[usize], i64)]) -> MultiFan {
        MultiFan::validate(&RawFan {
            rank,
            rays: rays.iter().map(|r| r.to_vec()).collect(),
            edge_multipliers: None,
            cones: cones.iter().map(|(r, w)| RawCone { rays: r.to_vec(), weight: *w }).collect(),
        })
        .expect("fixture is valid")
    }

    /// Rays `±1` in rank 1.
    pub fn p1() -> MultiFan {
        fan(1, &[&[1], &[-1]], &[(&[0], 1), (&[1], 1)])
    }

    /// `p1` with both weights 2.
    pub fn double_p1() -> MultiFan {
        fan(1, &[&[1], &[-1]], &[(&[0], 2), (&[1], 2)])
    }

    /// A single half-line: not pre-complete.
    pub fn half_line() -> MultiFan {
        fan(1, &[&[1]], &[(&[0], 1)])
    }

    pub fn p2() -> MultiFan {
        fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[(&[0, 1], 1), (&[1, 2], 1), (&[0, 2], 1)])
    }

    /// Normal fan of the square `[-1, 1]^2`.
    pub fn square() -> MultiFan {
        fan(2, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]], &[(&[0, 1], 1), (&[1, 2], 1), (&[2, 3], 1), (&[0, 3], 1)])
    }

    /// Weighted projective plane `P(1,1,2)`.
    pub fn wp112() -> MultiFan {
        fan(2, &[&[1, 0], &[0, 1], &[-1, -2]], &[(&[0, 1], 1), (&[1, 2], 1), (&[0, 2], 1)])
    }

    /// Hirzebruch surface `F_a`.
    pub fn hirzebruch(a: i64) -> MultiFan {
        fan(2, &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]], &[(&[0, 1], 1), (&[1, 2], 1), (&[2, 3], 1), (&[0, 3], 1)])
    }

    pub fn p3() -> MultiFan {
        projective_space(3)
    }

    /// The fan of projective `dim`-space.
    pub fn projective_space(dim: usize) -> MultiFan {
        let mut rays: Vec<Vec<i64>> = (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
        rays.push(vec![-1; dim]);
        let cones = (0..=dim).rev().map(|skip| RawCone { rays: (0..=dim).filter(|&r| r != skip).collect(), weight: 1 }).collect();
        MultiFan::validate(&RawFan { rank: dim, rays, edge_multipliers: None, cones }).expect("projective space")
    }

    /// Two copies of `p2` glued along the identity: every cone has weight 2
    /// but the rays are listed once.
    pub fn double_p2() -> MultiFan {
        fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[(&[0, 1], 2), (&[1, 2], 2), (&[0, 2], 2)])
    }

    /// A non-injective multi-fan: the rays `e_1, e_2, -e_1, -e_2` traversed
    /// twice around the origin, degree 2.
    pub fn winding_square() -> MultiFan {
        fan(
            2,
            &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
            &[(&[0, 1], 1), (&[1, 2], 1), (&[2, 3], 1), (&[3, 4], 1), (&[4, 5], 1), (&[5, 6], 1), (&[6, 7], 1), (&[0, 7], 1)],
        )
    }
}
