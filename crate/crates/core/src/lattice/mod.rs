//! Exact linear algebra over the lattice `N ≅ Z^n` and its dual `M`.

mod group;
mod matrix;
mod normal_form;

use std::fmt;

use num_traits::{Signed, Zero};

pub use group::{index_of_full_rank, quotient_group, FiniteAbelianGroup, GroupElement, Saturation, MAX_GROUP_ORDER};
pub use matrix::{Echelon, IntMatrix, Matrix, RatMatrix};
pub use normal_form::{hermite_normal_form, smith_normal_form, HermiteForm, SmithForm};

use crate::arith::{fmt_rat, primitive_from_rational, rat_int, Int, Rat};
use crate::{Error, Result};

/// An element of `N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<Int>);

impl LatticeVector {
    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![Int::zero(); rank])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: &Int) -> Self {
        LatticeVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn to_rational(&self) -> Vec<Rat> {
        self.0.iter().map(rat_int).collect()
    }

    pub fn content(&self) -> Int {
        crate::arith::content(&self.0)
    }

    pub fn primitive(&self) -> Self {
        LatticeVector(crate::arith::primitive(&self.0))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element of `M_Q = Hom(N, Q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Covector(pub Vec<Rat>);

impl Covector {
    pub fn zero(rank: usize) -> Self {
        Covector(vec![Rat::zero(); rank])
    }

    pub fn from_ints(coords: &[Int]) -> Self {
        Covector(coords.iter().map(rat_int).collect())
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Covector(coords.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn pair(&self, v: &LatticeVector) -> Rat {
        self.0.iter().zip(&v.0).map(|(a, b)| a * rat_int(b)).sum()
    }

    pub fn pair_rational(&self, v: &[Rat]) -> Rat {
        self.0.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|q| q.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: &Rat) -> Self {
        Covector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Covector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Covector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Covector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Debug for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rat).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_rank(vectors: &[LatticeVector], rank: usize) -> Result<()> {
    match vectors.iter().find(|v| v.rank() != rank) {
        Some(v) => Err(Error::RankMismatch(format!("vector {v:?} does not have length {rank}"))),
        None => Ok(()),
    }
}

/// Matrix whose columns are the given vectors.
pub fn column_matrix(vectors: &[LatticeVector], rank: usize) -> IntMatrix {
    IntMatrix::from_columns(vectors.iter().map(|v| v.0.clone()).collect(), rank)
}

pub fn determinant(vectors: &[LatticeVector]) -> Int {
    column_matrix(vectors, vectors.len()).determinant()
}

/// The basis `u_1..u_n` of `M_Q` with `⟨u_i, v_j⟩ = δ_ij`.
pub fn dual_basis(vectors: &[LatticeVector]) -> Result<Vec<Covector>> {
    let n = vectors.len();
    check_rank(vectors, n)?;
    let inv = column_matrix(vectors, n).to_rational().inverse().ok_or(Error::SingularInput)?;
    Ok((0..n).map(|i| Covector(inv.row(i).to_vec())).collect())
}

/// Covectors `w_1..w_k` with `⟨w_i, v_j⟩ = δ_ij` for `k ≤ n` independent
/// vectors. Only their classes modulo the annihilator of the span are canonical.
pub fn partial_dual(vectors: &[LatticeVector], rank: usize) -> Result<Vec<Covector>> {
    check_rank(vectors, rank)?;
    let k = vectors.len();
    let a = IntMatrix::from_rows(vectors.iter().map(|v| v.0.clone()).collect(), rank).to_rational();
    if a.rank() < k {
        return Err(Error::SingularInput);
    }
    (0..k)
        .map(|i| {
            let e: Vec<Rat> = (0..k).map(|j| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() }).collect();
            a.solve(&e).map(Covector).ok_or(Error::SingularInput)
        })
        .collect()
}

/// An integral basis of `M_J`, the annihilator of `N_J`, with an orientation.
///
/// The orientation convention: the basis followed by covectors dual to the
/// rays (ascending ray order) has positive determinant. For `k = n` the basis
/// is empty and `scalar` carries the sign of the empty wedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedBasis {
    pub vectors: Vec<Covector>,
    pub scalar: i32,
}

impl OrientedBasis {
    /// The same sublattice with the opposite orientation.
    pub fn flipped(&self) -> Self {
        let mut vectors = self.vectors.clone();
        match vectors.first_mut() {
            Some(first) => *first = first.neg(),
            None => {
                return OrientedBasis { vectors, scalar: -self.scalar };
            }
        }
        OrientedBasis { vectors, scalar: self.scalar }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

pub fn annihilator_basis(rays: &[LatticeVector], rank: usize) -> Result<OrientedBasis> {
    let sat = Saturation::of(rays, rank)?;
    let mut vectors: Vec<Covector> = sat.quotient_rows().iter().map(|r| Covector::from_ints(r)).collect();
    if vectors.is_empty() {
        return Ok(OrientedBasis { vectors, scalar: 1 });
    }
    let duals = partial_dual(rays, rank)?;
    let stacked: Vec<Vec<Rat>> = vectors.iter().chain(&duals).map(|c| c.0.clone()).collect();
    if RatMatrix::from_rows(stacked, rank).determinant().is_negative() {
        vectors[0] = vectors[0].neg();
    }
    Ok(OrientedBasis { vectors, scalar: 1 })
}

/// A primitive generator of `E_Q ∩ span(rays)`, which must be a line.
/// The generator is normalized so that its first nonzero coordinate is positive.
pub fn plane_line_intersection(plane: &[LatticeVector], rays: &[LatticeVector], rank: usize) -> Result<LatticeVector> {
    check_rank(plane, rank)?;
    check_rank(rays, rank)?;
    let p = plane.len();
    let plane_matrix = column_matrix(plane, rank).to_rational();
    if plane_matrix.rank() != p {
        return Err(Error::NonGenericPlane("plane basis is dependent".into()));
    }
    if column_matrix(rays, rank).to_rational().rank() != rays.len() {
        return Err(Error::SingularInput);
    }
    let joined: Vec<LatticeVector> = plane.iter().chain(rays).cloned().collect();
    let kernel = column_matrix(&joined, rank).to_rational().kernel();
    if kernel.len() != 1 {
        return Err(Error::NonGenericPlane(format!("intersection with the span of {} rays has rank {}", rays.len(), kernel.len())));
    }
    let v = LatticeVector(primitive_from_rational(&plane_matrix.apply(&kernel[0][..p])));
    // first nonzero coordinate positive
    match v.0.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => Ok(v.neg()),
        _ => Ok(v),
    }
}

/// Whether `v` lies in the rational span of `vectors`.
pub fn in_span(vectors: &[LatticeVector], v: &LatticeVector, rank: usize) -> bool {
    let base = column_matrix(vectors, rank).to_rational().rank();
    let mut with: Vec<LatticeVector> = vectors.to_vec();
    with.push(v.clone());
    column_matrix(&with, rank).to_rational().rank() == base
}
