//! The integral cohomology ring of Sym^n M_g inside the tensor power,
//! generated by ξ_i = χ(γ_i), ξ'_i = χ(γ_{g+i}) and η = χ(δ).
//!
//! The ℤ-span of the monomials ξ_I ξ'_J η^r is the whole integral ring, which
//! gives both the rational span (checked against the projector rank) and an
//! integral lattice for reducing classes mod 2.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::{rank_of_rows, LatticeEchelon, SparseRow};
use crate::par::{self, Execution};
use crate::surface::{ClosedSurface, SurfaceClass};
use crate::tensor::{TensorElement, TensorMonomial, TensorPower};

pub type ClosedTensor = TensorElement<ClosedSurface>;

/// ξ_I ξ'_J η^r with I, J strictly increasing subsets of 1..=g.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MacdonaldMonomial {
    pub xi: Vec<usize>,
    pub xi_prime: Vec<usize>,
    pub eta: usize,
}

impl MacdonaldMonomial {
    pub fn degree(&self) -> usize {
        self.xi.len() + self.xi_prime.len() + 2 * self.eta
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldRing {
    g: usize,
    power: TensorPower<ClosedSurface>,
}

impl MacdonaldRing {
    pub fn new(g: usize, n: usize) -> Result<Self> {
        Ok(MacdonaldRing {
            g,
            power: TensorPower::new(ClosedSurface::new(g), n)?,
        })
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn n(&self) -> usize {
        self.power.n()
    }

    pub fn power(&self) -> &TensorPower<ClosedSurface> {
        &self.power
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.g {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.g,
            });
        }
        Ok(())
    }

    pub fn xi(&self, i: usize) -> Result<ClosedTensor> {
        self.check(i)?;
        Ok(self.power.chi_class(SurfaceClass::Gamma(i)))
    }

    pub fn xi_prime(&self, i: usize) -> Result<ClosedTensor> {
        self.check(i)?;
        Ok(self.power.chi_class(SurfaceClass::Gamma(self.g + i)))
    }

    pub fn eta(&self) -> ClosedTensor {
        self.power.chi_class(SurfaceClass::Delta)
    }

    /// ξ_i ξ'_i
    pub fn theta(&self, i: usize) -> Result<ClosedTensor> {
        self.xi(i)?.mul(&self.xi_prime(i)?)
    }

    pub fn evaluate(&self, m: &MacdonaldMonomial) -> Result<ClosedTensor> {
        let mut acc = self.power.one();
        for &i in &m.xi {
            acc = acc.mul(&self.xi(i)?)?;
        }
        for &i in &m.xi_prime {
            acc = acc.mul(&self.xi_prime(i)?)?;
        }
        if m.eta > 0 {
            acc = acc.mul(&self.eta().pow(m.eta as u32))?;
        }
        Ok(acc)
    }

    /// All Macdonald monomials of degree `q` (η^r with r ≤ n only, since η^{n+1} = 0).
    pub fn monomials_of_degree(&self, q: usize) -> Vec<MacdonaldMonomial> {
        let subsets = subsets(self.g);
        let mut out = Vec::new();
        for r in 0..=self.n().min(q / 2) {
            let odd = q - 2 * r;
            for xi in &subsets {
                if xi.len() > odd {
                    continue;
                }
                for xp in subsets.iter().filter(|s| s.len() == odd - xi.len()) {
                    out.push(MacdonaldMonomial {
                        xi: xi.clone(),
                        xi_prime: xp.clone(),
                        eta: r,
                    });
                }
            }
        }
        out.sort();
        out
    }

    fn evaluate_degree(&self, q: usize, exec: Execution) -> Result<Vec<ClosedTensor>> {
        let monos = self.monomials_of_degree(q);
        par::try_map_ordered(exec, &monos, |m| self.evaluate(m))
    }

    /// Dimension over ℚ of the span of the degree-q Macdonald monomials.
    pub fn span_dim(&self, q: usize, exec: Execution) -> Result<usize> {
        let images = self.evaluate_degree(q, exec)?;
        let (_, rows) = integer_rows(&images)?;
        Ok(rank_of_rows(rows))
    }

    /// Echelon ℤ-basis of H^q(Sym^n M_g; ℤ) in tensor coordinates.
    pub fn lattice(&self, q: usize, exec: Execution) -> Result<DegreeLattice> {
        let images = self.evaluate_degree(q, exec)?;
        let (index, rows) = integer_rows(&images)?;
        let mut echelon = LatticeEchelon::new();
        for r in rows {
            echelon.insert(r);
        }
        Ok(DegreeLattice {
            degree: q,
            index,
            echelon,
        })
    }
}

fn subsets(g: usize) -> Vec<Vec<usize>> {
    (0u32..(1u32 << g))
        .map(|mask| (1..=g).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

type ColumnIndex = HashMap<TensorMonomial<SurfaceClass>, usize>;

fn integer_rows(images: &[ClosedTensor]) -> Result<(ColumnIndex, Vec<SparseRow>)> {
    let support: BTreeSet<_> = images
        .iter()
        .flat_map(|e| e.terms().map(|(m, _)| m.clone()))
        .collect();
    let index: HashMap<_, _> = support
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let rows = images
        .iter()
        .map(|e| {
            e.to_integer_row(&index).ok_or_else(|| {
                Error::NonIntegral("Macdonald monomial with fractional coefficient".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((index, rows))
}

/// ℤ-lattice of integral classes in one degree of the tensor power.
#[derive(Clone, Debug)]
pub struct DegreeLattice {
    degree: usize,
    index: ColumnIndex,
    echelon: LatticeEchelon,
}

/// A mod 2 class in H^q(Sym^n M_g; ℤ/2), as coordinates over the echelon
/// ℤ-basis of the integral lattice reduced mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMod2Class {
    pub degree: usize,
    pub coords: Vec<bool>,
}

impl LatticeMod2Class {
    pub fn zero(degree: usize, rank: usize) -> Self {
        LatticeMod2Class {
            degree,
            coords: vec![false; rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|b| !b)
    }
}

impl DegreeLattice {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Integer coordinates of an integral class; error if `t` is not in the lattice.
    pub fn coordinates(&self, t: &ClosedTensor) -> Result<Vec<BigInt>> {
        if let Some(d) = t.homogeneous_degree() {
            if d != self.degree {
                return Err(Error::WrongDegree {
                    expected: self.degree,
                    found: d,
                });
            }
        } else if !t.is_zero() {
            return Err(Error::WrongDegree {
                expected: self.degree,
                found: t.max_degree().unwrap_or(0),
            });
        }
        let row = t.to_integer_row(&self.index).ok_or_else(|| {
            Error::NotInChiSubring(format!(
                "degree-{} class outside the integral ring",
                self.degree
            ))
        })?;
        self.echelon.coordinates(&row).ok_or_else(|| {
            Error::NotInChiSubring(format!(
                "degree-{} class outside the integral ring",
                self.degree
            ))
        })
    }

    pub fn reduce_mod2(&self, t: &ClosedTensor) -> Result<LatticeMod2Class> {
        let coords = self.coordinates(t)?;
        Ok(LatticeMod2Class {
            degree: self.degree,
            coords: coords.iter().map(|c| c.is_odd()).collect(),
        })
    }
}

#[cfg(test)]
pub(crate) fn int(c: i64) -> num_rational::BigRational {
    num_rational::BigRational::from_integer(BigInt::from(c))
}

#[cfg(test)]
pub(crate) fn rational_one() -> num_rational::BigRational {
    num_traits::One::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::invariant_dim;

    #[test]
    fn monomial_enumeration_counts() {
        let r = MacdonaldRing::new(1, 2).unwrap();
        // degree 2: xi1 xi'1, eta
        assert_eq!(r.monomials_of_degree(2).len(), 2);
        assert!(r.monomials_of_degree(2).iter().all(|m| m.degree() == 2));
        let r = MacdonaldRing::new(2, 3).unwrap();
        // degree 1: four generators
        assert_eq!(r.monomials_of_degree(1).len(), 4);
    }

    #[test]
    fn span_matches_projector_small() {
        for (g, n) in [(1, 2), (2, 2), (1, 3)] {
            let r = MacdonaldRing::new(g, n).unwrap();
            for q in 0..=2 * n {
                assert_eq!(
                    r.span_dim(q, Execution::Sequential).unwrap(),
                    invariant_dim(g, n, q).unwrap(),
                    "g={g} n={n} q={q}"
                );
            }
        }
    }

    #[test]
    fn integral_lattice_detects_divisibility() {
        // CP^2: H^4 is generated by eta^2 = 2 d⊗d in tensor coordinates,
        // so 3 eta^2 is odd in the lattice although its tensor coefficients are even.
        let r = MacdonaldRing::new(0, 2).unwrap();
        let lat = r.lattice(4, Execution::Sequential).unwrap();
        assert_eq!(lat.rank(), 1);
        let eta2 = r.eta().pow(2);
        assert_eq!(lat.coordinates(&eta2).unwrap(), vec![BigInt::from(1)]);
        let three = eta2.scale(&int(3));
        assert!(!lat.reduce_mod2(&three).unwrap().is_zero());
        assert!(lat.reduce_mod2(&eta2.scale(&int(2))).unwrap().is_zero());
        // d⊗d alone is not integral in Sym^2
        let dd = r.power().monomial(
            vec![SurfaceClass::Delta, SurfaceClass::Delta],
            rational_one(),
        );
        assert!(matches!(
            lat.coordinates(&dd),
            Err(Error::NotInChiSubring(_))
        ));
    }

    #[test]
    fn generator_index_checked() {
        let r = MacdonaldRing::new(2, 2).unwrap();
        assert!(r.xi(0).is_err());
        assert!(r.xi_prime(3).is_err());
        assert!(r.xi(2).is_ok());
    }
}
