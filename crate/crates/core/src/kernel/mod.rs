//! Exact rational linear algebra, oriented hyperplanes and open half-spaces.
//!
//! Dimension is a runtime attribute of every value and is validated at
//! operation boundaries, so two-dimensional and three-dimensional work share
//! the same types.

mod feasibility;
mod linalg;

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};

pub use feasibility::{feasible_interior, feasible_point, is_feasible, LinearConstraint};
pub use linalg::{nullspace, solve_general, Matrix};

/// Exact rational number; always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `num / den` as an exact rational.
///
/// Panics if `den` is zero.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer-valued rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// A point or direction in ℝⁿ with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector((0..dim).map(|_| Rational::zero()).collect())
    }

    /// The `axis`-th standard basis vector.
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    /// Cross product; both operands must be three-dimensional.
    pub fn cross(&self, other: &Vector) -> Vector {
        debug_assert!(self.dim() == 3 && other.dim() == 3);
        let (a, b) = (&self.0, &other.0);
        Vector(alloc::vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }

    /// True when `self = t·other` for some rational `t` (zero vectors are
    /// proportional to everything).
    pub fn is_proportional(&self, other: &Vector) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                if &self.0[i] * &other.0[j] != &self.0[j] * &other.0[i] {
                    return false;
                }
            }
        }
        true
    }
}

impl Index<usize> for Vector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// An invertible affine transformation `x ↦ A·x + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    linear: Matrix,
    translation: Vector,
    inverse_linear: Matrix,
}

impl AffineMap {
    pub fn new(linear: Matrix, translation: Vector) -> Result<Self> {
        check_dim(linear.dim(), translation.dim())?;
        let inverse_linear = linear.inverse().ok_or(Error::Singular)?;
        Ok(AffineMap {
            linear,
            translation,
            inverse_linear,
        })
    }

    pub fn identity(dim: usize) -> Self {
        AffineMap {
            linear: Matrix::identity(dim),
            translation: Vector::zeros(dim),
            inverse_linear: Matrix::identity(dim),
        }
    }

    pub fn translation_by(offset: Vector) -> Self {
        let dim = offset.dim();
        AffineMap {
            linear: Matrix::identity(dim),
            translation: offset,
            inverse_linear: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    pub fn determinant(&self) -> Rational {
        self.linear.determinant()
    }

    pub fn apply(&self, point: &Vector) -> Vector {
        self.linear.mul_vec(point).add(&self.translation)
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap {
            linear: self.linear.mul(&inner.linear),
            translation: self.apply(&inner.translation),
            inverse_linear: inner.inverse_linear.mul(&self.inverse_linear),
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let translation = self.inverse_linear.mul_vec(&self.translation).neg();
        AffineMap {
            linear: self.inverse_linear.clone(),
            translation,
            inverse_linear: self.linear.clone(),
        }
    }

    /// Image of a hyperplane. The flag reports whether the image of the
    /// positive side is the negative side of the canonical image plane.
    pub fn transform_plane(&self, plane: &Hyperplane) -> Result<(Hyperplane, bool)> {
        check_dim(self.dim(), plane.dim())?;
        // {a·x = c} maps to {(A⁻ᵀa)·y = c + a·A⁻¹b}
        let normal = self.inverse_linear.transpose().mul_vec(&plane.normal);
        let shift = self.inverse_linear.mul_vec(&self.translation);
        let offset = &plane.offset + plane.normal.dot(&shift);
        Hyperplane::scaled(normal, offset)
    }
}

/// Selects one open side of a hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `normal·x > offset`
    Pos,
    /// `normal·x < offset`
    Neg,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Pos => Side::Neg,
            Side::Neg => Side::Pos,
        }
    }

    pub fn flipped_if(self, flip: bool) -> Side {
        if flip {
            self.flip()
        } else {
            self
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Side::Pos => '+',
            Side::Neg => '-',
        }
    }
}

/// A hyperplane `{x : normal·x = offset}`, scaled so that the first nonzero
/// normal coordinate equals one. Structural equality is geometric equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    normal: Vector,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vector, offset: Rational) -> Result<Self> {
        Self::scaled(normal, offset).map(|(h, _)| h)
    }

    /// Canonicalizes and reports whether the scaling factor was negative.
    fn scaled(normal: Vector, offset: Rational) -> Result<(Self, bool)> {
        let lead = normal
            .coords()
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(Error::ZeroNormal)?;
        let inv = lead.recip();
        let plane = Hyperplane {
            normal: normal.scale(&inv),
            offset: offset * &inv,
        };
        Ok((plane, lead.is_negative()))
    }

    /// The hyperplane through `point` with the given normal.
    pub fn through(normal: Vector, point: &Vector) -> Result<Self> {
        let offset = normal.dot(point);
        Self::new(normal, offset)
    }

    /// Coordinate hyperplane `x_axis = value`.
    pub fn coordinate(dim: usize, axis: usize, value: Rational) -> Self {
        Hyperplane {
            normal: Vector::unit(dim, axis),
            offset: value,
        }
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `normal·x − offset`
    pub fn evaluate(&self, point: &Vector) -> Rational {
        self.normal.dot(point) - &self.offset
    }

    pub fn contains(&self, point: &Vector) -> bool {
        self.evaluate(point).is_zero()
    }

    /// Same normal direction: parallel or equal.
    pub fn is_parallel_to(&self, other: &Hyperplane) -> bool {
        self.normal == other.normal
    }

    pub fn half(&self, side: Side) -> HalfSpace {
        HalfSpace {
            plane: self.clone(),
            side,
        }
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x = {}", self.normal, self.offset)
    }
}

/// An open half-space: one strict side of a canonical hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    plane: Hyperplane,
    side: Side,
}

impl HalfSpace {
    /// `{x : normal·x > offset}` for `Side::Pos`, `<` for `Side::Neg`, in
    /// the caller's (possibly non-canonical) scaling.
    pub fn new(normal: Vector, offset: Rational, side: Side) -> Result<Self> {
        let (plane, flipped) = Hyperplane::scaled(normal, offset)?;
        Ok(HalfSpace {
            plane,
            side: side.flipped_if(flipped),
        })
    }

    /// `{x : normal·x > offset}`
    pub fn greater(normal: Vector, offset: Rational) -> Result<Self> {
        Self::new(normal, offset, Side::Pos)
    }

    /// `{x : normal·x < offset}`
    pub fn less(normal: Vector, offset: Rational) -> Result<Self> {
        Self::new(normal, offset, Side::Neg)
    }

    /// Integer-coefficient shorthand: `{coeffs·x > offset}` or `<`.
    pub fn from_ints(coeffs: &[i64], offset: i64, side: Side) -> Result<Self> {
        Self::new(Vector::from_ints(coeffs), int(offset), side)
    }

    pub fn plane(&self) -> &Hyperplane {
        &self.plane
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.plane.dim()
    }

    pub fn complement(&self) -> HalfSpace {
        HalfSpace {
            plane: self.plane.clone(),
            side: self.side.flip(),
        }
    }

    pub fn contains(&self, point: &Vector) -> bool {
        let value = self.plane.evaluate(point);
        match self.side {
            Side::Pos => value.is_positive(),
            Side::Neg => value.is_negative(),
        }
    }

    /// The strict constraint `normal·x > offset` this half-space stands for,
    /// with the normal oriented into the half-space.
    pub fn constraint(&self) -> LinearConstraint {
        match self.side {
            Side::Pos => LinearConstraint::strict(self.plane.normal.clone(), self.plane.offset.clone()),
            Side::Neg => LinearConstraint::strict(self.plane.normal.neg(), -self.plane.offset.clone()),
        }
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.side {
            Side::Pos => '>',
            Side::Neg => '<',
        };
        write!(f, "{{{}·x {rel} {}}}", self.plane.normal, self.plane.offset)
    }
}

/// Image of an open half-space under an affine map, in canonical form.
pub fn apply_affine(map: &AffineMap, h: &HalfSpace) -> Result<HalfSpace> {
    let (plane, flipped) = map.transform_plane(&h.plane)?;
    Ok(HalfSpace {
        plane,
        side: h.side.flipped_if(flipped),
    })
}

/// The unique affine map with `map(src[i]) = dst[i]` for `n + 1` affinely
/// independent points on each side.
pub fn affine_from_simplex(src: &[Vector], dst: &[Vector]) -> Result<AffineMap> {
    let dim = src.first().map(Vector::dim).ok_or(Error::AffinelyDependent)?;
    if src.len() != dim + 1 {
        return Err(Error::DimensionMismatch {
            expected: dim + 1,
            found: src.len(),
        });
    }
    check_dim(src.len(), dst.len())?;
    for p in src.iter().chain(dst) {
        check_dim(dim, p.dim())?;
    }
    let edges = |pts: &[Vector]| {
        Matrix::from_columns(pts[1..].iter().map(|p| p.sub(&pts[0])).collect())
    };
    let src_edges = edges(src);
    let dst_edges = edges(dst);
    let src_inv = src_edges.inverse().ok_or(Error::AffinelyDependent)?;
    if dst_edges.determinant().is_zero() {
        return Err(Error::AffinelyDependent);
    }
    let linear = dst_edges.mul(&src_inv);
    let translation = dst[0].sub(&linear.mul_vec(&src[0]));
    let inverse_linear = src_edges.mul(&dst_edges.inverse().ok_or(Error::AffinelyDependent)?);
    Ok(AffineMap {
        linear,
        translation,
        inverse_linear,
    })
}

/// Unique common point of `n` hyperplanes in ℝⁿ, if their normals are independent.
pub fn intersect_planes(planes: &[&Hyperplane]) -> Option<Vector> {
    let dim = planes.first()?.dim();
    if planes.len() != dim {
        return None;
    }
    let rows = planes.iter().map(|p| p.normal.coords().to_vec()).collect();
    let rhs = Vector::new(planes.iter().map(|p| p.offset.clone()).collect());
    Matrix::from_rows(rows).solve(&rhs)
}
