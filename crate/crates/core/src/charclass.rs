//! Chern, Stiefel–Whitney and Pontrjagin classes of Sym^n of closed and
//! punctured surfaces, and w₂ as an alternating form over ℤ/2.
//!
//! Closed case: c(Sym^n M_g) = (1+η)^{n−2g+1} ∏ᵢ (1 + η − ξᵢξ'ᵢ), expanded in
//! the tensor power. Punctured case: η restricts to 0 and ξᵢ, ξ'ᵢ restrict to
//! α_{2i−1}, α_{2i}, so c = ∏ᵢ (1 − α_{2i−1}∧α_{2i}) in Λ^{≤n}(2g+k−1).
//!
//! The closed-surface pairing (γᵢ, γ_{g+i}) is re-indexed to adjacent pairs:
//! γᵢ ↦ α_{2i−1}, γ_{g+i} ↦ α_{2i}; the k−1 extra classes fill α_{2g+1}..α_s.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exterior::{ExtAlgebra, ExtElement, Ring};
use crate::macdonald::{ClosedTensor, LatticeMod2Class, MacdonaldRing};
use crate::par::Execution;
use crate::surface::{FactorAlgebra, PuncturedClass, PuncturedSurface};
use crate::tensor::{TensorElement, TensorMonomial, TensorPower};

/// Ring operations the characteristic-class formulas need, shared by the
/// exterior (punctured) and tensor (closed) models.
pub trait ClassRing: Clone + PartialEq + fmt::Display {
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Result<Self>;
    fn times(&self, other: &Self) -> Result<Self>;
    fn times_int(&self, k: i64) -> Self;
    fn part_of_degree(&self, d: usize) -> Self;
    fn vanishes(&self) -> bool;
}

impl ClassRing for ExtElement {
    fn one_like(&self) -> Self {
        self.algebra().one()
    }
    fn zero_like(&self) -> Self {
        self.algebra().zero()
    }
    fn plus(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }
    fn times_int(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }
    fn part_of_degree(&self, d: usize) -> Self {
        self.homogeneous_part(d)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl<A: FactorAlgebra> ClassRing for TensorElement<A> {
    fn one_like(&self) -> Self {
        self.power().one()
    }
    fn zero_like(&self) -> Self {
        self.power().zero()
    }
    fn plus(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }
    fn times_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }
    fn part_of_degree(&self, d: usize) -> Self {
        self.homogeneous_part(d)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// Total Chern class and its homogeneous pieces c₀..c_m (c_q in degree 2q),
/// m the complex dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernData<R> {
    total: R,
    classes: Vec<R>,
}

impl<R: ClassRing> ChernData<R> {
    pub fn from_total(total: R, complex_dim: usize) -> Self {
        let classes = (0..=complex_dim)
            .map(|q| total.part_of_degree(2 * q))
            .collect();
        ChernData { total, classes }
    }

    pub fn total(&self) -> &R {
        &self.total
    }

    pub fn classes(&self) -> &[R] {
        &self.classes
    }

    pub fn complex_dim(&self) -> usize {
        self.classes.len() - 1
    }

    /// c_q, zero above the complex dimension.
    pub fn class(&self, q: usize) -> R {
        self.classes
            .get(q)
            .cloned()
            .unwrap_or_else(|| self.total.zero_like())
    }
}

/// Generalized binomial coefficient C(e, j) for any integer e.
fn binomial_signed(e: i64, j: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j {
        num *= BigInt::from(e - t as i64);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// Total Chern class of Sym^n M_g in the tensor model. A negative exponent
/// n−2g+1 is expanded as a binomial series, exact because η^{n+1} = 0.
pub fn chern_total_closed(g: usize, n: usize) -> Result<ChernData<ClosedTensor>> {
    let ring = MacdonaldRing::new(g, n)?;
    let eta = ring.eta();
    let exponent = n as i64 - 2 * g as i64 + 1;
    let mut base = ring.power().zero();
    let mut eta_pow = ring.power().one();
    for j in 0..=n {
        let c = BigRational::from_integer(binomial_signed(exponent, j));
        base = base.add(&eta_pow.scale(&c))?;
        eta_pow = eta_pow.mul(&eta)?;
    }
    let one_plus_eta = ring.power().one().add(&eta)?;
    let mut total = base;
    for i in 1..=g {
        total = total.mul(&one_plus_eta.sub(&ring.theta(i)?)?)?;
    }
    Ok(ChernData::from_total(total, n))
}

/// Position of γ_j in the α-basis.
pub fn alpha_index(gamma: usize, g: usize) -> usize {
    if gamma <= g {
        2 * gamma - 1
    } else if gamma <= 2 * g {
        2 * (gamma - g)
    } else {
        gamma
    }
}

/// Λ^{≤n}(s) for s = 2g+k−1 (the degree-0 algebra ℤ when s = 0).
pub fn punctured_algebra(g: usize, k: usize, n: usize) -> Result<ExtAlgebra> {
    let p = PuncturedSurface::new(g, k)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    ExtAlgebra::for_rank(p.rank(), n, Ring::Integer)
}

/// Image of a closed-case class under the restriction to Sym^n M_{g,k}.
///
/// Computed factorwise (γ ↦ ε, δ ↦ 0) in the tensor power of the punctured
/// surface, then read off in the α-basis through α_j = χ(ε_j). The result is
/// re-encoded and compared, so inputs outside the χ-subring are rejected.
pub fn restrict_punctured(t: &ClosedTensor, g: usize, k: usize, n: usize) -> Result<ExtElement> {
    let power = t.power();
    if power.algebra().genus() != g || power.n() != n {
        return Err(Error::AlgebraMismatch(format!(
            "class lives over (g={}, n={}), restriction asked for (g={g}, n={n})",
            power.algebra().genus(),
            power.n()
        )));
    }
    let punctured = PuncturedSurface::new(g, k)?;
    let target = TensorPower::new(punctured, n)?;
    let restricted = t.map_factors(&target, |c| {
        Ok(punctured.restrict(c)?.map(|r| match r {
            PuncturedClass::Eps(j) => PuncturedClass::Eps(alpha_index(j, g)),
            PuncturedClass::Unit => PuncturedClass::Unit,
        }))
    })?;

    let alg = punctured_algebra(g, k, n)?;
    let mut decoded = Vec::new();
    for (m, c) in restricted.terms() {
        if let Some(indices) = leading_indices(m) {
            if !c.is_integer() {
                return Err(Error::NonIntegral(format!("coefficient {c} of {m}")));
            }
            decoded.push((indices, c.to_integer()));
        }
    }
    let ext = alg.element(decoded)?;
    if encode_punctured(&ext, &target)? != restricted {
        return Err(Error::NotInChiSubring(
            "restricted class is not a polynomial in the symmetrized degree-one classes".into(),
        ));
    }
    Ok(ext)
}

/// Indices a₁<…<a_q when `m` = ε_{a₁}⊗…⊗ε_{a_q}⊗1⊗…⊗1, the term through which
/// α_{a₁}∧…∧α_{a_q} appears with coefficient +1 in χ(ε_{a₁})⋯χ(ε_{a_q}).
fn leading_indices(m: &TensorMonomial<PuncturedClass>) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    let mut in_prefix = true;
    for f in m.factors() {
        match (f, in_prefix) {
            (PuncturedClass::Eps(j), true) => {
                if out.last().is_some_and(|&p| p >= *j) {
                    return None;
                }
                out.push(*j);
            }
            (PuncturedClass::Unit, _) => in_prefix = false,
            (PuncturedClass::Eps(_), false) => return None,
        }
    }
    Some(out)
}

/// α_{a₁}∧…∧α_{a_q} ↦ χ(ε_{a₁})⋯χ(ε_{a_q}).
pub fn encode_punctured(
    e: &ExtElement,
    target: &TensorPower<PuncturedSurface>,
) -> Result<TensorElement<PuncturedSurface>> {
    let mut out = target.zero();
    for (m, c) in e.terms() {
        let mut prod = target.one();
        for &j in m.indices() {
            prod = prod.mul(&target.chi_class(PuncturedClass::Eps(j)))?;
        }
        out = out.add(&prod.scale(&BigRational::from_integer(c.clone())))?;
    }
    Ok(out)
}

/// Total Chern class of Sym^n M_{g,k} built directly in Λ^{≤n}(2g+k−1).
pub fn chern_total_punctured(g: usize, k: usize, n: usize) -> Result<ChernData<ExtElement>> {
    let alg = punctured_algebra(g, k, n)?;
    let mut total = alg.one();
    for i in 1..=g {
        let pair = alg.element([(vec![2 * i - 1, 2 * i], 1)])?;
        total = total.mul(&alg.one().sub(&pair)?)?;
    }
    Ok(ChernData::from_total(total, n))
}

/// Stiefel–Whitney classes w₀..w_{2m} of the underlying real bundle:
/// odd classes vanish and w_{2q} is c_q reduced mod 2.
pub fn stiefel_whitney(c: &ChernData<ExtElement>) -> Vec<ExtElement> {
    let zero = c.total().algebra().mod2().zero();
    (0..=2 * c.complex_dim())
        .map(|j| {
            if j % 2 == 1 {
                zero.clone()
            } else {
                c.class(j / 2).reduce_mod2()
            }
        })
        .collect()
}

/// Closed-case Stiefel–Whitney classes w₀..w_{2n}. Reduction mod 2 happens in
/// the integral lattice of each degree, not coefficientwise in the tensor power.
pub fn stiefel_whitney_closed(
    c: &ChernData<ClosedTensor>,
    exec: Execution,
) -> Result<Vec<LatticeMod2Class>> {
    let power = c.total().power();
    let ring = MacdonaldRing::new(power.algebra().genus(), power.n())?;
    (0..=2 * c.complex_dim())
        .map(|j| {
            let lattice = ring.lattice(j, exec)?;
            if j % 2 == 1 {
                Ok(LatticeMod2Class::zero(j, lattice.rank()))
            } else {
                lattice.reduce_mod2(&c.class(j / 2))
            }
        })
        .collect()
}

/// Pontrjagin classes p₁..p_{⌊m/2⌋} via p_q = (−1)^q Σ_{i+j=2q} (−1)^i c_i c_j,
/// i.e. p_q = c_q² − 2c_{q−1}c_{q+1} + … ± 2c₀c_{2q}.
pub fn pontrjagin<R: ClassRing>(c: &ChernData<R>) -> Result<Vec<R>> {
    let m = c.complex_dim();
    let mut out = Vec::with_capacity(m / 2);
    for q in 1..=m / 2 {
        let mut acc = c.total().zero_like();
        for i in 0..=2 * q {
            let term = c.class(i).times(&c.class(2 * q - i))?;
            let sign = if (i + q) % 2 == 0 { 1 } else { -1 };
            acc = acc.plus(&term.times_int(sign))?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Symmetric zero-diagonal matrix over ℤ/2 (0-based rows/columns; row i is α_{i+1}).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AltFormZ2 {
    size: usize,
    rows: Vec<Vec<u64>>,
}

impl fmt::Debug for AltFormZ2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AltFormZ2")
            .field("size", &self.size)
            .field("rows", &self.to_rows())
            .finish()
    }
}

impl AltFormZ2 {
    pub fn zero(size: usize) -> Self {
        AltFormZ2 {
            size,
            rows: vec![vec![0u64; size.div_ceil(64)]; size],
        }
    }

    /// Any square 0/1 matrix; use [`AltFormZ2::validate`] to check it is alternating.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let size = rows.len();
        let mut f = Self::zero(size);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(Error::InvalidParameter(format!(
                    "row {i} has {} entries, expected {size}",
                    r.len()
                )));
            }
            for (j, &x) in r.iter().enumerate() {
                match x {
                    0 => {}
                    1 => f.set_raw(i, j, true),
                    _ => {
                        return Err(Error::InvalidParameter(format!(
                            "entry ({i},{j}) = {x} is not in {{0,1}}"
                        )))
                    }
                }
            }
        }
        Ok(f)
    }

    /// The form of a degree-two class Σ c_{ij} ᾱ_i∧ᾱ_j over ℤ/2.
    pub fn from_degree_two(w: &ExtElement) -> Result<Self> {
        let alg = w.algebra();
        if alg.ring() != Ring::Mod2 {
            return Err(Error::InvalidParameter("expected a mod 2 class".into()));
        }
        let mut f = Self::zero(alg.generators());
        for (m, _) in w.terms() {
            match m.indices() {
                &[i, j] => f.set(i - 1, j - 1),
                other => {
                    return Err(Error::WrongDegree {
                        expected: 2,
                        found: other.len(),
                    })
                }
            }
        }
        Ok(f)
    }

    /// Σ_{i=1}^{g} ᾱ_{2i−1}∧ᾱ_{2i} on s generators.
    pub fn standard(g: usize, s: usize) -> Result<Self> {
        if 2 * g > s {
            return Err(Error::InvalidParameter(format!(
                "2g = {} exceeds s = {s}",
                2 * g
            )));
        }
        let mut f = Self::zero(s);
        for i in 0..g {
            f.set(2 * i, 2 * i + 1);
        }
        Ok(f)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn set_raw(&mut self, i: usize, j: usize, v: bool) {
        let (w, b) = (j / 64, j % 64);
        if v {
            self.rows[i][w] |= 1 << b;
        } else {
            self.rows[i][w] &= !(1 << b);
        }
    }

    /// Sets entries (i,j) and (j,i) to 1; i ≠ j.
    pub fn set(&mut self, i: usize, j: usize) {
        assert_ne!(i, j, "alternating forms have zero diagonal");
        self.set_raw(i, j, true);
        self.set_raw(j, i, true);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        for i in 0..self.size {
            if self.get(i, i) {
                return Err(Error::NotAlternating(format!(
                    "nonzero diagonal entry at {i}"
                )));
            }
            for j in i + 1..self.size {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotAlternating(format!("asymmetric at ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    /// Rank over ℤ/2 by Gaussian elimination on packed rows.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.size {
            let (w, b) = (col / 64, col % 64);
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[w] >> b & 1 == 1 {
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// w₂ of Sym^n M_{g,k} as an alternating form on H¹(−; ℤ/2), read from the
/// Chern/Stiefel–Whitney pipeline.
pub fn w2_form(g: usize, k: usize, n: usize) -> Result<AltFormZ2> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be >= 2".into()));
    }
    let c = chern_total_punctured(g, k, n)?;
    let w = stiefel_whitney(&c);
    AltFormZ2::from_degree_two(&w[2])
}

/// χ(Sym^n M_g) as ⟨c_n, [Sym^n M_g]⟩.
pub fn euler_char_closed(g: usize, n: usize) -> Result<BigInt> {
    let c = chern_total_closed(g, n)?;
    let v = c.class(n).eval_top()?;
    if !v.is_integer() {
        return Err(Error::NonIntegral(format!(
            "<c_{n}, [Sym^{n} M_{g}]> = {v}"
        )));
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfaceClass;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ext(alg: &ExtAlgebra, terms: &[(&[usize], i64)]) -> ExtElement {
        alg.element(terms.iter().map(|(m, c)| (m.to_vec(), *c)))
            .unwrap()
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial_signed(3, 2), BigInt::from(3));
        assert_eq!(binomial_signed(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_signed(-3, 2), BigInt::from(6));
        assert_eq!(binomial_signed(2, 3), BigInt::from(0));
        assert_eq!(binomial_signed(-5, 0), BigInt::one());
    }

    #[test]
    fn alpha_reindexing() {
        // g = 2: γ1,γ2,γ3,γ4 -> α1,α3,α2,α4
        assert_eq!(
            (1..=4).map(|j| alpha_index(j, 2)).collect::<Vec<_>>(),
            vec![1, 3, 2, 4]
        );
        assert_eq!(alpha_index(5, 2), 5);
    }

    #[test]
    fn closed_genus_zero_is_projective_space() {
        for n in 2..=4 {
            let c = chern_total_closed(0, n).unwrap();
            let ring = MacdonaldRing::new(0, n).unwrap();
            assert_eq!(c.class(1), ring.eta().scale(&q(n as i64 + 1)));
        }
    }

    #[test]
    fn closed_genus_one_square() {
        let c = chern_total_closed(1, 2).unwrap();
        let ring = MacdonaldRing::new(1, 2).unwrap();
        let eta = ring.eta();
        let theta = ring.theta(1).unwrap();
        assert_eq!(c.class(1), eta.scale(&q(2)).sub(&theta).unwrap());
        let c2 = eta
            .mul(&eta)
            .unwrap()
            .sub(&eta.mul(&theta).unwrap())
            .unwrap();
        assert_eq!(c.class(2), c2);
        for cls in c.classes() {
            assert!(cls.is_symmetric());
        }
    }

    #[test]
    fn restriction_examples() {
        let ring = MacdonaldRing::new(2, 3).unwrap();
        let eta = ring.eta();
        assert!(restrict_punctured(&eta, 2, 1, 3).unwrap().is_zero());
        let alg = punctured_algebra(2, 1, 3).unwrap();
        for i in 1..=2 {
            let r = restrict_punctured(&ring.theta(i).unwrap(), 2, 1, 3).unwrap();
            assert_eq!(r, ext(&alg, &[(&[2 * i - 1, 2 * i], 1)]));
        }
        // a lone degree-1 tensor monomial is not symmetric
        let bad = ring.power().monomial(
            vec![
                SurfaceClass::Gamma(1),
                SurfaceClass::Unit,
                SurfaceClass::Unit,
            ],
            q(1),
        );
        assert!(matches!(
            restrict_punctured(&bad, 2, 1, 3),
            Err(Error::NotInChiSubring(_))
        ));
        assert!(matches!(
            restrict_punctured(&eta, 1, 1, 3),
            Err(Error::AlgebraMismatch(_))
        ));
    }

    #[test]
    fn punctured_chern_examples() {
        let c = chern_total_punctured(0, 3, 4).unwrap();
        assert_eq!(c.total(), &c.total().one_like());
        assert!(c.classes()[1..].iter().all(ExtElement::is_zero));

        let c = chern_total_punctured(2, 1, 4).unwrap();
        let alg = c.total().algebra();
        assert_eq!(c.class(1), ext(&alg, &[(&[1, 2], -1), (&[3, 4], -1)]));
        assert_eq!(c.class(2), ext(&alg, &[(&[1, 2, 3, 4], 1)]));

        let c = chern_total_punctured(1, 2, 2).unwrap();
        let alg = c.total().algebra();
        assert_eq!(c.class(1), ext(&alg, &[(&[1, 2], -1)]));
        assert!(c.class(2).is_zero());
    }

    #[test]
    fn stiefel_whitney_examples() {
        let c = chern_total_punctured(2, 3, 3).unwrap();
        let w = stiefel_whitney(&c);
        let z2 = c.total().algebra().mod2();
        assert_eq!(w.len(), 7);
        assert_eq!(w[2], ext(&z2, &[(&[1, 2], 1), (&[3, 4], 1)]));
        assert!(w[1].is_zero() && w[3].is_zero());

        // CP^2: w2 = 3η mod 2 ≠ 0, w4 = 3η² mod 2 ≠ 0
        let c = chern_total_closed(0, 2).unwrap();
        let w = stiefel_whitney_closed(&c, Execution::Sequential).unwrap();
        assert!(w[1].is_zero() && w[3].is_zero());
        assert!(!w[2].is_zero());
        assert!(!w[4].is_zero());
    }

    #[test]
    fn pontrjagin_examples() {
        let c = chern_total_punctured(2, 1, 4).unwrap();
        let p = pontrjagin(&c).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.iter().all(ExtElement::is_zero));

        let c = chern_total_closed(0, 2).unwrap();
        let p = pontrjagin(&c).unwrap();
        let eta = MacdonaldRing::new(0, 2).unwrap().eta();
        assert_eq!(p, vec![eta.pow(2).scale(&q(3))]);

        let c = chern_total_closed(1, 2).unwrap();
        let p = pontrjagin(&c).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p[0].is_zero());
    }

    #[test]
    fn w2_form_examples() {
        let f = w2_form(1, 2, 3).unwrap();
        assert_eq!(
            f.to_rows(),
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]
        );
        assert_eq!(w2_form(0, 4, 2).unwrap(), AltFormZ2::zero(3));
        let f = w2_form(2, 1, 2).unwrap();
        assert_eq!(
            f.to_rows(),
            vec![
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 0]
            ]
        );
        assert_eq!(w2_form(0, 1, 2).unwrap().size(), 0);
    }

    #[test]
    fn altform_rank_and_validation() {
        assert_eq!(AltFormZ2::standard(3, 7).unwrap().rank(), 6);
        assert_eq!(AltFormZ2::zero(5).rank(), 0);
        let bad = AltFormZ2::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(matches!(bad.validate(), Err(Error::NotAlternating(_))));
        let bad = AltFormZ2::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(bad.validate().is_err());
        assert!(AltFormZ2::from_rows(&[vec![0, 2], vec![2, 0]]).is_err());
        // a wide form crossing the 64-bit word boundary
        let mut f = AltFormZ2::zero(130);
        f.set(0, 129);
        f.set(63, 64);
        f.set(1, 65);
        assert_eq!(f.rank(), 6);
    }

    #[test]
    fn euler_characteristic_examples() {
        for n in 2..=4 {
            assert_eq!(euler_char_closed(0, n).unwrap(), BigInt::from(n + 1));
        }
        assert_eq!(euler_char_closed(1, 2).unwrap(), BigInt::from(0));
        assert_eq!(euler_char_closed(2, 2).unwrap(), BigInt::one());
    }

    #[test]
    fn restriction_agrees_with_direct_construction() {
        for g in 0..=2 {
            for k in 1..=2 {
                for n in 2..=3 {
                    let closed = chern_total_closed(g, n).unwrap();
                    let r = restrict_punctured(closed.total(), g, k, n).unwrap();
                    let direct = chern_total_punctured(g, k, n).unwrap();
                    assert_eq!(&r, direct.total(), "g={g} k={k} n={n}");
                }
            }
        }
    }
}
