//! Truncated exterior algebras Λ^{≤cut}(α₁,…,α_s) over ℤ or ℤ/2.
//!
//! This is the integral (and mod 2) cohomology ring of `Sym^n` of a
//! punctured surface with `s = 2g + k - 1`, truncated at `cut = n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Integer,
    Mod2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtAlgebra {
    s: usize,
    cut: usize,
    ring: Ring,
}

impl ExtAlgebra {
    pub fn new(s: usize, cut: usize, ring: Ring) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter(
                "generator count s must be >= 1".into(),
            ));
        }
        if cut == 0 {
            return Err(Error::InvalidParameter(
                "truncation degree must be >= 1".into(),
            ));
        }
        Ok(ExtAlgebra { s, cut, ring })
    }

    /// Like [`ExtAlgebra::new`] but accepts `s = 0`, the algebra ℤ (or ℤ/2)
    /// concentrated in degree 0. This is the cohomology of a contractible
    /// space such as Sym^n of the once-punctured sphere.
    pub fn for_rank(s: usize, cut: usize, ring: Ring) -> Result<Self> {
        if cut == 0 {
            return Err(Error::InvalidParameter(
                "truncation degree must be >= 1".into(),
            ));
        }
        Ok(ExtAlgebra { s, cut, ring })
    }

    pub fn generators(&self) -> usize {
        self.s
    }

    pub fn cut(&self) -> usize {
        self.cut
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Same generators and cut over ℤ/2.
    pub fn mod2(&self) -> ExtAlgebra {
        ExtAlgebra {
            ring: Ring::Mod2,
            ..*self
        }
    }

    /// Rank of the degree-`q` component: C(s, q) for q ≤ cut, else 0.
    pub fn dim(&self, q: usize) -> BigUint {
        if q > self.cut || q > self.s {
            return BigUint::zero();
        }
        num_integer::binomial(BigUint::from(self.s), BigUint::from(q))
    }

    /// Graded ranks in degrees `0..=cut`.
    pub fn graded_dims(&self) -> Vec<BigUint> {
        (0..=self.cut).map(|q| self.dim(q)).collect()
    }

    pub fn total_rank(&self) -> BigUint {
        self.graded_dims().into_iter().sum()
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement {
            algebra: *self,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> ExtElement {
        self.monomial(ExtMonomial::unit(), BigInt::one())
    }

    /// The generator α_i, 1-based.
    pub fn generator(&self, i: usize) -> Result<ExtElement> {
        self.check_index(i)?;
        Ok(self.monomial(ExtMonomial(vec![i]), BigInt::one()))
    }

    /// `coeff · m`, zero if `m` lies above the cut.
    pub fn monomial(&self, m: ExtMonomial, coeff: BigInt) -> ExtElement {
        let mut e = self.zero();
        e.accumulate(m, coeff);
        e
    }

    /// Builds an element from `(indices, coefficient)` pairs; indices may be
    /// in any order and are sorted with the matching sign.
    pub fn element<I, C>(&self, terms: I) -> Result<ExtElement>
    where
        I: IntoIterator<Item = (Vec<usize>, C)>,
        C: Into<BigInt>,
    {
        let mut e = self.zero();
        for (indices, c) in terms {
            for &i in &indices {
                self.check_index(i)?;
            }
            if let Some((neg, m)) = ExtMonomial::sort_signed(indices) {
                let c: BigInt = c.into();
                e.accumulate(m, if neg { -c } else { c });
            }
        }
        Ok(e)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.s {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.s,
            });
        }
        Ok(())
    }

    fn normalize(&self, c: BigInt) -> BigInt {
        match self.ring {
            Ring::Integer => c,
            Ring::Mod2 => c.mod_floor(&BigInt::from(2)),
        }
    }
}

/// Wedge monomial α_{i₁}∧…∧α_{i_q} with strictly increasing 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ExtMonomial(Vec<usize>);

impl ExtMonomial {
    pub fn unit() -> Self {
        ExtMonomial(Vec::new())
    }

    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "monomial indices must be strictly increasing: {indices:?}"
            )));
        }
        Ok(ExtMonomial(indices))
    }

    /// Sorts arbitrary indices; `None` on a repeated index, otherwise the
    /// permutation parity and the canonical monomial.
    pub fn sort_signed(mut indices: Vec<usize>) -> Option<(bool, Self)> {
        let mut neg = false;
        // insertion sort keeps the parity count simple
        for i in 1..indices.len() {
            let mut j = i;
            while j > 0 && indices[j - 1] > indices[j] {
                indices.swap(j - 1, j);
                neg = !neg;
                j -= 1;
            }
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((neg, ExtMonomial(indices)))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Wedge product of monomials: `None` if an index repeats, else the sign
    /// (true = negative) and the merged monomial.
    pub fn wedge(&self, other: &ExtMonomial) -> Option<(bool, ExtMonomial)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut inversions = 0usize;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    // b[j] jumps over the remaining a[i..]
                    inversions += a.len() - i;
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Some((inversions % 2 == 1, ExtMonomial(out)))
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("a{i}")).collect();
        write!(f, "{}", parts.join("^"))
    }
}

/// Sparse element of a truncated exterior algebra. No zero coefficients are
/// stored and every monomial respects the cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    algebra: ExtAlgebra,
    terms: BTreeMap<ExtMonomial, BigInt>,
}

impl ExtElement {
    pub fn algebra(&self) -> ExtAlgebra {
        self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &ExtMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn accumulate(&mut self, m: ExtMonomial, c: BigInt) {
        if m.degree() > self.algebra.cut || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let v = self.algebra.normalize(o.get() + c);
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(slot) => {
                let v = self.algebra.normalize(c);
                if !v.is_zero() {
                    slot.insert(v);
                }
            }
        }
    }

    fn same_algebra(&self, other: &ExtElement) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch(format!(
                "{:?} vs {:?}",
                self.algebra, other.algebra
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &ExtElement) -> Result<ExtElement> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExtElement) -> Result<ExtElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExtElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> ExtElement {
        let mut out = self.algebra.zero();
        for (m, c) in &self.terms {
            out.accumulate(m.clone(), c * k);
        }
        out
    }

    /// Graded-anticommutative product; monomials above the cut are dropped.
    pub fn mul(&self, other: &ExtElement) -> Result<ExtElement> {
        self.same_algebra(other)?;
        let mut out = self.algebra.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.degree() + mb.degree() > self.algebra.cut {
                    continue;
                }
                if let Some((neg, m)) = ma.wedge(mb) {
                    let c = ca * cb;
                    out.accumulate(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> ExtElement {
        let mut acc = self.algebra.one();
        for _ in 0..e {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    pub fn homogeneous_part(&self, q: usize) -> ExtElement {
        ExtElement {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == q)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degree if all terms share one degree (zero counts as homogeneous of any degree).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(ExtMonomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Coefficientwise reduction ℤ → ℤ/2.
    pub fn reduce_mod2(&self) -> ExtElement {
        let alg = self.algebra.mod2();
        let mut out = alg.zero();
        for (m, c) in &self.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{m}")?;
            } else if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(a: &ExtAlgebra, upto: usize) -> Vec<u64> {
        (0..=upto)
            .map(|q| u64::try_from(a.dim(q)).unwrap())
            .collect()
    }

    #[test]
    fn construction_and_dimensions() {
        let a = ExtAlgebra::new(4, 2, Ring::Integer).unwrap();
        assert_eq!(dims(&a, 5), vec![1, 4, 6, 0, 0, 0]);
        let b = ExtAlgebra::new(1, 5, Ring::Integer).unwrap();
        assert_eq!(dims(&b, 4), vec![1, 1, 0, 0, 0]);
        let c = ExtAlgebra::new(3, 3, Ring::Mod2).unwrap();
        assert_eq!(c.dim(3), BigUint::from(1u32));
        assert!(ExtAlgebra::new(0, 2, Ring::Integer).is_err());
        assert!(ExtAlgebra::new(3, 0, Ring::Integer).is_err());
    }

    #[test]
    fn dim_examples() {
        let a = ExtAlgebra::new(4, 2, Ring::Integer).unwrap();
        assert_eq!(a.dim(2), BigUint::from(6u32));
        assert_eq!(a.dim(3), BigUint::zero());
        let b = ExtAlgebra::new(5, 3, Ring::Integer).unwrap();
        assert_eq!(b.dim(0), BigUint::one());
        assert_eq!(b.total_rank(), BigUint::from(1u32 + 5 + 10 + 10));
    }

    #[test]
    fn anticommuting_generators() {
        let a = ExtAlgebra::new(3, 3, Ring::Integer).unwrap();
        let (x1, x2) = (a.generator(1).unwrap(), a.generator(2).unwrap());
        let e12 = a.element([(vec![1, 2], 1)]).unwrap();
        assert_eq!(x1.mul(&x2).unwrap(), e12);
        assert_eq!(x2.mul(&x1).unwrap(), e12.neg());
        assert!(x1.mul(&x1).unwrap().is_zero());
    }

    #[test]
    fn truncation_drops_high_degree() {
        let a = ExtAlgebra::new(3, 2, Ring::Integer).unwrap();
        let e12 = a.element([(vec![1, 2], 1)]).unwrap();
        let x3 = a.generator(3).unwrap();
        assert!(e12.mul(&x3).unwrap().is_zero());
        // constructing above the cut also yields zero
        assert!(a.element([(vec![1, 2, 3], 5)]).unwrap().is_zero());
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let a = ExtAlgebra::new(3, 2, Ring::Integer).unwrap();
        let b = ExtAlgebra::new(3, 3, Ring::Integer).unwrap();
        let err = a.generator(1).unwrap().mul(&b.generator(1).unwrap());
        assert!(matches!(err, Err(Error::AlgebraMismatch(_))));
        assert!(matches!(
            a.generator(4),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        ));
    }

    #[test]
    fn reduction_mod_two() {
        let a = ExtAlgebra::new(3, 3, Ring::Integer).unwrap();
        let z2 = a.mod2();
        let e = a.element([(vec![1, 2], -1)]).unwrap();
        assert_eq!(e.reduce_mod2(), z2.element([(vec![1, 2], 1)]).unwrap());
        let e = a.element([(vec![1, 2], 2)]).unwrap();
        assert!(e.reduce_mod2().is_zero());
        let e = a.element([(vec![1], 1), (vec![2], 3)]).unwrap();
        assert_eq!(
            e.reduce_mod2(),
            z2.element([(vec![1], 1), (vec![2], 1)]).unwrap()
        );
    }

    #[test]
    fn unsorted_input_gets_sign() {
        let a = ExtAlgebra::new(4, 4, Ring::Integer).unwrap();
        let e = a.element([(vec![3, 1, 2], 1)]).unwrap();
        // (3,1,2) -> (1,2,3) is an even permutation
        assert_eq!(e, a.element([(vec![1, 2, 3], 1)]).unwrap());
        let e = a.element([(vec![2, 1], 1)]).unwrap();
        assert_eq!(e, a.element([(vec![1, 2], -1)]).unwrap());
        assert!(a.element([(vec![2, 2], 1)]).unwrap().is_zero());
    }

    #[test]
    fn monomial_validation() {
        assert!(ExtMonomial::new(vec![1, 3, 4]).is_ok());
        assert!(ExtMonomial::new(vec![1, 1]).is_err());
        assert!(ExtMonomial::new(vec![2, 1]).is_err());
    }

    #[test]
    fn display_is_readable() {
        let a = ExtAlgebra::new(4, 4, Ring::Integer).unwrap();
        let e = a.element([(vec![1, 2], -1), (vec![3, 4], -1)]).unwrap();
        assert_eq!(e.to_string(), "-a1^a2 - a3^a4");
        assert_eq!(a.zero().to_string(), "0");
        assert_eq!(a.one().scale(&BigInt::from(3)).to_string(), "3");
    }
}
