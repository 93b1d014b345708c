//! Cohomology rings of closed and punctured orientable surfaces.
//!
//! The closed genus-g surface uses the symplectic basis γ₁,…,γ_{2g} with
//! γ_i·γ_{i+g} = δ = −γ_{i+g}·γ_i. The punctured surface M_{g,k} is
//! homotopy equivalent to a wedge of s = 2g+k−1 circles, so all products of
//! its degree-one classes ε₁,…,ε_s vanish.

use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A graded ring with a finite monomial basis, used as the tensor factor.
///
/// Products of basis classes are ± a basis class or zero.
pub trait FactorAlgebra: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    type Class: Copy + Ord + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync;

    fn unit(&self) -> Self::Class;

    fn degree(&self, c: Self::Class) -> usize;

    fn basis(&self) -> Vec<Self::Class>;

    /// `None` for a zero product; otherwise `(negative, class)`.
    fn product(&self, a: Self::Class, b: Self::Class) -> Option<(bool, Self::Class)>;

    /// The class evaluated against the fundamental class, if the factor is closed.
    fn top_class(&self) -> Option<Self::Class>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceClass {
    Unit,
    /// γ_i, 1-based, degree 1.
    Gamma(usize),
    /// δ, the fundamental cohomology class, degree 2.
    Delta,
}

impl SurfaceClass {
    pub fn degree(self) -> usize {
        match self {
            SurfaceClass::Unit => 0,
            SurfaceClass::Gamma(_) => 1,
            SurfaceClass::Delta => 2,
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceClass::Unit => write!(f, "1"),
            SurfaceClass::Gamma(i) => write!(f, "g{i}"),
            SurfaceClass::Delta => write!(f, "d"),
        }
    }
}

/// H*(M_g; ℤ) for the closed genus-g surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosedSurface {
    g: usize,
}

impl ClosedSurface {
    pub fn new(g: usize) -> Self {
        ClosedSurface { g }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn validate(&self, c: SurfaceClass) -> Result<()> {
        match c {
            SurfaceClass::Gamma(i) if i == 0 || i > 2 * self.g => Err(Error::IndexOutOfRange {
                index: i,
                max: 2 * self.g,
            }),
            _ => Ok(()),
        }
    }

    /// Product of two basis classes as a signed class (`None` = 0).
    pub fn mul(&self, a: SurfaceClass, b: SurfaceClass) -> Result<Option<(i32, SurfaceClass)>> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self
            .product(a, b)
            .map(|(neg, c)| (if neg { -1 } else { 1 }, c)))
    }
}

impl FactorAlgebra for ClosedSurface {
    type Class = SurfaceClass;

    fn unit(&self) -> SurfaceClass {
        SurfaceClass::Unit
    }

    fn degree(&self, c: SurfaceClass) -> usize {
        c.degree()
    }

    fn basis(&self) -> Vec<SurfaceClass> {
        let mut b = Vec::with_capacity(2 * self.g + 2);
        b.push(SurfaceClass::Unit);
        b.extend((1..=2 * self.g).map(SurfaceClass::Gamma));
        b.push(SurfaceClass::Delta);
        b
    }

    fn product(&self, a: SurfaceClass, b: SurfaceClass) -> Option<(bool, SurfaceClass)> {
        use SurfaceClass::*;
        match (a, b) {
            (Unit, x) | (x, Unit) => Some((false, x)),
            (Gamma(i), Gamma(j)) => {
                let g = self.g;
                if j == i + g {
                    Some((false, Delta))
                } else if i == j + g {
                    Some((true, Delta))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn top_class(&self) -> Option<SurfaceClass> {
        Some(SurfaceClass::Delta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PuncturedClass {
    Unit,
    /// ε_j, 1-based, degree 1.
    Eps(usize),
}

impl fmt::Display for PuncturedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PuncturedClass::Unit => write!(f, "1"),
            PuncturedClass::Eps(j) => write!(f, "e{j}"),
        }
    }
}

/// H*(M_{g,k}; ℤ): a unit and s = 2g+k−1 degree-one classes with zero products.
/// `k` only affects `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PuncturedSurface {
    g: usize,
    k: usize,
}

impl PuncturedSurface {
    pub fn new(g: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter(
                "puncture count k must be >= 1".into(),
            ));
        }
        Ok(PuncturedSurface { g, k })
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn punctures(&self) -> usize {
        self.k
    }

    /// Number of degree-one generators, 2g + k − 1.
    pub fn rank(&self) -> usize {
        2 * self.g + self.k - 1
    }

    /// The inclusion-induced map i*: unit ↦ unit, γ_j ↦ ε_j, δ ↦ 0.
    pub fn restrict(&self, c: SurfaceClass) -> Result<Option<PuncturedClass>> {
        ClosedSurface::new(self.g).validate(c)?;
        Ok(match c {
            SurfaceClass::Unit => Some(PuncturedClass::Unit),
            SurfaceClass::Gamma(j) => Some(PuncturedClass::Eps(j)),
            SurfaceClass::Delta => None,
        })
    }
}

impl FactorAlgebra for PuncturedSurface {
    type Class = PuncturedClass;

    fn unit(&self) -> PuncturedClass {
        PuncturedClass::Unit
    }

    fn degree(&self, c: PuncturedClass) -> usize {
        match c {
            PuncturedClass::Unit => 0,
            PuncturedClass::Eps(_) => 1,
        }
    }

    fn basis(&self) -> Vec<PuncturedClass> {
        std::iter::once(PuncturedClass::Unit)
            .chain((1..=self.rank()).map(PuncturedClass::Eps))
            .collect()
    }

    fn product(&self, a: PuncturedClass, b: PuncturedClass) -> Option<(bool, PuncturedClass)> {
        match (a, b) {
            (PuncturedClass::Unit, x) | (x, PuncturedClass::Unit) => Some((false, x)),
            _ => None,
        }
    }

    fn top_class(&self) -> Option<PuncturedClass> {
        None
    }
}
