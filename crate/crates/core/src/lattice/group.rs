use std::collections::HashSet;

use num_traits::{ToPrimitive, Zero};

use super::matrix::{IntMatrix, RatMatrix};
use super::normal_form::smith_normal_form;
use super::{Covector, LatticeVector};
use crate::arith::{frac, lcm_u64, rat_int, Int, Rat};
use crate::{Error, Result};

/// Groups larger than this are refused rather than enumerated.
pub const MAX_GROUP_ORDER: u64 = 1 << 20;

/// The primitive sublattice `N_K` spanned by a set of independent vectors,
/// described through a unimodular change of frame of `N`.
#[derive(Clone, Debug)]
pub struct Saturation {
    /// `P`: in the coordinates `P·x`, `N_K` is the span of the first `k` axes.
    pub frame: IntMatrix,
    /// `P^{-1}`; its first `k` columns form a basis of `N_K`.
    pub frame_inverse: IntMatrix,
    /// Coordinates of the input vectors in the basis of `N_K` (columns).
    pub coordinates: IntMatrix,
    /// Smith invariants of `N_K / ⟨vectors⟩`.
    pub invariants: Vec<Int>,
    /// `Q` with `coordinates = D·Q^{-1}`.
    q: IntMatrix,
}

impl Saturation {
    pub fn of(vectors: &[LatticeVector], rank: usize) -> Result<Saturation> {
        let k = vectors.len();
        if vectors.iter().any(|v| v.0.len() != rank) {
            return Err(Error::RankMismatch(format!("expected vectors of length {rank}")));
        }
        if k > rank {
            return Err(Error::SingularInput);
        }
        let a = IntMatrix::from_columns(vectors.iter().map(|v| v.0.clone()).collect(), rank);
        let snf = smith_normal_form(&a);
        let invariants = snf.diagonal();
        if invariants.iter().any(Zero::is_zero) {
            return Err(Error::SingularInput);
        }
        let frame_inverse = inverse_unimodular(&snf.p);
        let d_q_inv = snf.d.mul(&inverse_unimodular(&snf.q));
        let mut coordinates = IntMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                coordinates[(i, j)] = d_q_inv[(i, j)].clone();
            }
        }
        Ok(Saturation { frame: snf.p, frame_inverse, coordinates, invariants, q: snf.q })
    }

    pub fn rank(&self) -> usize {
        self.frame.rows()
    }

    pub fn sublattice_rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn sublattice_basis(&self) -> Vec<LatticeVector> {
        (0..self.sublattice_rank()).map(|j| LatticeVector(self.frame_inverse.column(j))).collect()
    }

    /// Rows of the map `N -> N / N_K ≅ Z^{n-k}`; these are also an integral
    /// basis of the annihilator of `N_K` in `M`.
    pub fn quotient_rows(&self) -> Vec<Vec<Int>> {
        (self.sublattice_rank()..self.rank()).map(|i| self.frame.row(i).to_vec()).collect()
    }

    pub fn index(&self) -> Int {
        self.invariants.iter().product()
    }
}

fn inverse_unimodular(m: &IntMatrix) -> IntMatrix {
    let inv = m.to_rational().inverse().expect("unimodular matrix is invertible");
    let rows = inv.to_rows().into_iter().map(|r| r.into_iter().map(|q| q.to_integer()).collect()).collect();
    IntMatrix::from_rows(rows, m.cols())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    /// Coordinates in `⊕ Z/d_i` for the Smith invariants `d_i`.
    pub residues: Vec<u64>,
    /// A representative `v(h) ∈ N_K`.
    pub lift: LatticeVector,
    /// `⟨u_i, v(h)⟩ mod 1` for the basis `u_i` dual to the generators, in `[0, 1)`.
    pub phases: Vec<Rat>,
    pub order: u64,
}

/// The finite quotient `N_K / N_{K,V}` with explicit lifts and character phases.
#[derive(Clone, Debug)]
pub struct FiniteAbelianGroup {
    invariants: Vec<u64>,
    elements: Vec<GroupElement>,
}

impl FiniteAbelianGroup {
    pub fn trivial(rank: usize, generator_count: usize) -> Self {
        FiniteAbelianGroup {
            invariants: vec![1; generator_count],
            elements: vec![GroupElement {
                residues: vec![0; generator_count],
                lift: LatticeVector::zero(rank),
                phases: vec![Rat::zero(); generator_count],
                order: 1,
            }],
        }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn identity(&self) -> &GroupElement {
        &self.elements[0]
    }

    /// Exponent of the group, the natural conductor for its characters.
    pub fn exponent(&self) -> u64 {
        self.invariants.iter().copied().fold(1, lcm_u64)
    }

    /// `⟨u, v(h)⟩ mod 1`.
    pub fn phase(&self, u: &Covector, element: &GroupElement) -> Rat {
        frac(&u.pair(&element.lift))
    }

    fn index_of(&self, residues: &[u64]) -> usize {
        residues.iter().zip(&self.invariants).fold(0usize, |acc, (&r, &d)| acc * d as usize + r as usize)
    }

    /// Index of `j·h`.
    pub fn multiple(&self, index: usize, j: u64) -> usize {
        let res: Vec<u64> = self.elements[index].residues.iter().zip(&self.invariants).map(|(&r, &d)| (r * (j % d)) % d).collect();
        self.index_of(&res)
    }

    /// Orbits under `h ↦ j·h`, `gcd(j, ord h) = 1`, as (representative, size).
    ///
    /// These are exactly the Galois orbits of the character values, so each
    /// orbit sum is a field trace.
    pub fn galois_orbits(&self) -> Vec<(usize, usize)> {
        let mut seen = HashSet::new();
        let mut orbits = Vec::new();
        for (idx, el) in self.elements.iter().enumerate() {
            if seen.contains(&idx) {
                continue;
            }
            let mut size = 0;
            for j in 1..=el.order.max(1) {
                if crate::arith::gcd_u64(j, el.order) == 1 && seen.insert(self.multiple(idx, j)) {
                    size += 1;
                }
            }
            orbits.push((idx, size));
        }
        orbits
    }
}

/// `H_{K,V} = N_K / N_{K,V}` for independent `vectors` generating `N_{K,V}`.
///
/// Cosets are enumerated through the Smith form of the generator matrix.
pub fn quotient_group(vectors: &[LatticeVector], rank: usize) -> Result<FiniteAbelianGroup> {
    let sat = Saturation::of(vectors, rank)?;
    group_from_saturation(&sat)
}

pub(crate) fn group_from_saturation(sat: &Saturation) -> Result<FiniteAbelianGroup> {
    let k = sat.sublattice_rank();
    let n = sat.rank();
    let invariants: Vec<u64> = sat
        .invariants
        .iter()
        .map(|d| d.to_u64().filter(|&d| d <= MAX_GROUP_ORDER))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidInput("finite group too large to enumerate".into()))?;
    let order: u64 = invariants.iter().product();
    if order > MAX_GROUP_ORDER {
        return Err(Error::InvalidInput("finite group too large to enumerate".into()));
    }
    if order == 1 {
        return Ok(FiniteAbelianGroup::trivial(n, k));
    }
    // phases = Q·D^{-1}·r, lift = P^{-1}[:, ..k]·r
    let mut q_dinv = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            q_dinv[(i, j)] = rat_int(&sat.q[(i, j)]) / rat_int(&sat.invariants[j]);
        }
    }
    let mut elements = Vec::with_capacity(order as usize);
    let mut residues = vec![0u64; k];
    loop {
        let r_rat: Vec<Rat> = residues.iter().map(|&r| Rat::from_integer(Int::from(r))).collect();
        let phases: Vec<Rat> = q_dinv.apply(&r_rat).iter().map(frac).collect();
        let lift: Vec<Int> = (0..n).map(|i| (0..k).map(|j| &sat.frame_inverse[(i, j)] * Int::from(residues[j])).sum()).collect();
        let el_order = residues.iter().zip(&invariants).map(|(&r, &d)| d / crate::arith::gcd_u64(r, d)).fold(1, lcm_u64);
        elements.push(GroupElement { residues: residues.clone(), lift: LatticeVector(lift), phases, order: el_order });
        // mixed-radix increment, last coordinate fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(FiniteAbelianGroup { invariants, elements });
            }
            pos -= 1;
            residues[pos] += 1;
            if residues[pos] < invariants[pos] {
                break;
            }
            residues[pos] = 0;
        }
    }
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.invariants == other.invariants && self.elements == other.elements
    }
}

/// `|det|` of `n` vectors in rank `n`, the order of `N / ⟨vectors⟩`.
pub fn index_of_full_rank(vectors: &[LatticeVector]) -> Int {
    use num_traits::Signed;
    let n = vectors.len();
    IntMatrix::from_columns(vectors.iter().map(|v| v.0.clone()).collect(), n).determinant().abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn lv(x: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(x)
    }

    #[test]
    fn unimodular_gives_trivial_group() {
        let g = quotient_group(&[lv(&[1, 0]), lv(&[0, 1])], 2).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.identity().phases.iter().all(Zero::is_zero));
    }

    #[test]
    fn order_two_from_weighted_projective_cone() {
        let gens = [lv(&[1, 0]), lv(&[-1, -2])];
        let g = quotient_group(&gens, 2).unwrap();
        assert_eq!(g.order(), 2);
        let h = &g.elements()[1];
        // nontrivial coset of (0,1) modulo the generated lattice
        let diff = LatticeVector::from_i64(&[h.lift.0[0].to_i64().unwrap(), h.lift.0[1].to_i64().unwrap() - 1]);
        let coords = crate::lattice::dual_basis(&gens).unwrap();
        assert!(coords.iter().all(|u| u.pair(&diff).is_integer()));
        assert_eq!(h.phases, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(g.identity().phases, vec![rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn rank_one_index_two() {
        let g = quotient_group(&[lv(&[2])], 1).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.elements()[1].lift, lv(&[1]));
        assert_eq!(g.elements()[1].phases, vec![rat(1, 2)]);
    }

    #[test]
    fn lower_rank_sublattice_uses_saturation() {
        // (2,2) generates an index-2 sublattice of the primitive line through (1,1)
        let g = quotient_group(&[lv(&[2, 2])], 2).unwrap();
        assert_eq!(g.order(), 2);
        let lift = &g.elements()[1].lift;
        assert!(lift.0[0] == lift.0[1]);
        assert_eq!(g.elements()[1].phases, vec![rat(1, 2)]);
    }

    #[test]
    fn dependent_vectors_are_rejected() {
        assert_eq!(quotient_group(&[lv(&[1, 2]), lv(&[2, 4])], 2), Err(Error::SingularInput));
    }

    #[test]
    fn galois_orbits_partition_cyclic_group() {
        let g = quotient_group(&[lv(&[12])], 1).unwrap();
        let orbits = g.galois_orbits();
        // one orbit per divisor of 12
        assert_eq!(orbits.len(), 6);
        assert_eq!(orbits.iter().map(|o| o.1).sum::<usize>(), 12);
    }
}
