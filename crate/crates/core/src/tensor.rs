//! The graded tensor power H^{⊗n} of a surface cohomology ring with
//! rational coefficients, the Koszul-signed S_n action, the symmetrization
//! map χ and the invariant-subspace projector.
//!
//! Sign conventions:
//! * product: (a₁⊗…⊗a_n)(b₁⊗…⊗b_n) = (−1)^{Σ_{i>j} |a_i||b_j|} (a₁b₁)⊗…⊗(a_nb_n)
//! * action: σ moves the factor in slot i to slot σ(i), with sign (−1) to the
//!   number of inverted pairs of odd-degree factors. This is the unique
//!   signing that makes every σ a ring automorphism.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{RankAccumulator, SparseRow};
use crate::par::{self, Execution};
use crate::surface::{ClosedSurface, FactorAlgebra};

/// A permutation of `0..n`, stored as its images: `self.0[i] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidParameter(format!(
                    "not a permutation: {images:?}"
                )));
            }
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Transposition of two 0-based slots.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut v: Vec<usize> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::InvalidParameter(format!(
                "transposition ({a} {b}) outside 0..{n}"
            )));
        }
        v.swap(a, b);
        Ok(Perm(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }
}

/// All n! permutations, generated by Heap's minimal-change scheme (each
/// permutation differs from the previous one by a single transposition).
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![Perm(a.clone())];
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(Perm(a.clone()));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorMonomial<C>(Vec<C>);

impl<C: Copy> TensorMonomial<C> {
    pub fn new(factors: Vec<C>) -> Self {
        TensorMonomial(factors)
    }

    pub fn factors(&self) -> &[C] {
        &self.0
    }
}

impl<C: fmt::Display> fmt::Display for TensorMonomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("(x)"))
    }
}

/// The ambient ring A^{⊗n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPower<A: FactorAlgebra> {
    algebra: A,
    n: usize,
}

impl<A: FactorAlgebra> TensorPower<A> {
    pub fn new(algebra: A, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "tensor power n must be >= 1".into(),
            ));
        }
        Ok(TensorPower { algebra, n })
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> TensorElement<A> {
        TensorElement {
            power: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> TensorElement<A> {
        let unit = vec![self.algebra.unit(); self.n];
        self.monomial(unit, BigRational::one())
    }

    pub fn monomial(&self, factors: Vec<A::Class>, coeff: BigRational) -> TensorElement<A> {
        assert_eq!(factors.len(), self.n, "monomial must have n factors");
        let mut e = self.zero();
        e.accumulate(TensorMonomial(factors), coeff);
        e
    }

    pub fn degree_of(&self, m: &TensorMonomial<A::Class>) -> usize {
        m.0.iter().map(|&c| self.algebra.degree(c)).sum()
    }

    /// χ(ω) = ω⊗1⊗…⊗1 + 1⊗ω⊗…⊗1 + … + 1⊗…⊗1⊗ω for ω = Σ cᵢ·classᵢ.
    pub fn chi(&self, omega: &[(A::Class, BigRational)]) -> TensorElement<A> {
        let unit = self.algebra.unit();
        let mut e = self.zero();
        for (class, c) in omega {
            for slot in 0..self.n {
                let mut f = vec![unit; self.n];
                f[slot] = *class;
                e.accumulate(TensorMonomial(f), c.clone());
            }
        }
        e
    }

    pub fn chi_class(&self, class: A::Class) -> TensorElement<A> {
        self.chi(&[(class, BigRational::one())])
    }

    /// All tensor basis monomials of total degree `q`, in lexicographic order.
    pub fn basis_of_degree(&self, q: usize) -> Vec<TensorMonomial<A::Class>> {
        let basis = self.algebra.basis();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.n);
        self.fill_basis(&basis, q, &mut cur, &mut out);
        out
    }

    fn fill_basis(
        &self,
        basis: &[A::Class],
        remaining: usize,
        cur: &mut Vec<A::Class>,
        out: &mut Vec<TensorMonomial<A::Class>>,
    ) {
        if cur.len() == self.n {
            if remaining == 0 {
                out.push(TensorMonomial(cur.clone()));
            }
            return;
        }
        for &b in basis {
            let d = self.algebra.degree(b);
            if d <= remaining {
                cur.push(b);
                self.fill_basis(basis, remaining - d, cur, out);
                cur.pop();
            }
        }
    }

    /// Signed image of a basis monomial under σ.
    pub fn permute_monomial(
        &self,
        sigma: &Perm,
        m: &TensorMonomial<A::Class>,
    ) -> (bool, TensorMonomial<A::Class>) {
        let f = &m.0;
        let mut out = vec![self.algebra.unit(); f.len()];
        let mut neg = false;
        for i in 0..f.len() {
            out[sigma.image(i)] = f[i];
            if self.algebra.degree(f[i]) % 2 == 1 {
                for (j, &later) in f.iter().enumerate().skip(i + 1) {
                    if sigma.image(i) > sigma.image(j) && self.algebra.degree(later) % 2 == 1 {
                        neg = !neg;
                    }
                }
            }
        }
        (neg, TensorMonomial(out))
    }

    /// Koszul-signed product of basis monomials; `None` if some factor vanishes.
    pub fn multiply_monomials(
        &self,
        a: &TensorMonomial<A::Class>,
        b: &TensorMonomial<A::Class>,
    ) -> Option<(bool, TensorMonomial<A::Class>)> {
        let mut neg = false;
        // parity of Σ_{j<i} |b_j|, accumulated while walking the slots
        let mut b_prefix_odd = false;
        let mut out = Vec::with_capacity(self.n);
        for (x, y) in a.0.iter().zip(&b.0) {
            if self.algebra.degree(*x) % 2 == 1 && b_prefix_odd {
                neg = !neg;
            }
            let (s, c) = self.algebra.product(*x, *y)?;
            neg ^= s;
            out.push(c);
            if self.algebra.degree(*y) % 2 == 1 {
                b_prefix_odd = !b_prefix_odd;
            }
        }
        Some((neg, TensorMonomial(out)))
    }
}

/// Sparse rational element of a tensor power. No zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement<A: FactorAlgebra> {
    power: TensorPower<A>,
    terms: BTreeMap<TensorMonomial<A::Class>, BigRational>,
}

impl<A: FactorAlgebra> TensorElement<A> {
    pub fn power(&self) -> &TensorPower<A> {
        &self.power
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorMonomial<A::Class>, &BigRational)> {
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

    pub fn coefficient(&self, m: &TensorMonomial<A::Class>) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn accumulate(&mut self, m: TensorMonomial<A::Class>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn same_power(&self, other: &Self) -> Result<()> {
        if self.power != other.power {
            return Err(Error::AlgebraMismatch(format!(
                "{:?} vs {:?}",
                self.power, other.power
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_power(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = self.power.zero();
        for (m, c) in &self.terms {
            out.accumulate(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_power(other)?;
        let mut out = self.power.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((neg, m)) = self.power.multiply_monomials(ma, mb) {
                    let c = ca * cb;
                    out.accumulate(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.power.one();
        for _ in 0..e {
            acc = acc.mul(self).expect("same power");
        }
        acc
    }

    pub fn permute(&self, sigma: &Perm) -> Result<Self> {
        if sigma.len() != self.power.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of {} letters applied to a tensor power of {}",
                sigma.len(),
                self.power.n
            )));
        }
        let mut out = self.power.zero();
        for (m, c) in &self.terms {
            let (neg, pm) = self.power.permute_monomial(sigma, m);
            out.accumulate(pm, if neg { -c.clone() } else { c.clone() });
        }
        Ok(out)
    }

    /// True when fixed by every σ ∈ S_n. Adjacent transpositions generate
    /// S_n, so checking those suffices.
    pub fn is_symmetric(&self) -> bool {
        let n = self.power.n;
        (0..n.saturating_sub(1)).all(|i| {
            let t = Perm::transposition(n, i, i + 1).expect("in range");
            self.permute(&t).expect("same n") == *self
        })
    }

    pub fn homogeneous_part(&self, q: usize) -> Self {
        let mut out = self.power.zero();
        for (m, c) in &self.terms {
            if self.power.degree_of(m) == q {
                out.accumulate(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| self.power.degree_of(m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| self.power.degree_of(m)).max()
    }

    /// Applies a degree-preserving factorwise ring map (`None` = 0).
    pub fn map_factors<B, F>(&self, target: &TensorPower<B>, f: F) -> Result<TensorElement<B>>
    where
        B: FactorAlgebra,
        F: Fn(A::Class) -> Result<Option<B::Class>>,
    {
        if target.n != self.power.n {
            return Err(Error::InvalidParameter("tensor powers differ in n".into()));
        }
        let mut out = target.zero();
        'terms: for (m, c) in &self.terms {
            let mut img = Vec::with_capacity(m.0.len());
            for &x in &m.0 {
                match f(x)? {
                    Some(y) => img.push(y),
                    None => continue 'terms,
                }
            }
            out.accumulate(TensorMonomial(img), c.clone());
        }
        Ok(out)
    }

    /// Pairing with the fundamental class of Sym^n: the coefficient of
    /// top⊗…⊗top divided by n! (π: Xⁿ → Sym^n X has degree n!).
    pub fn eval_top(&self) -> Result<BigRational> {
        let top = self.power.algebra.top_class().ok_or_else(|| {
            Error::InvalidParameter("factor ring has no fundamental class".into())
        })?;
        let top_degree = self.power.algebra.degree(top) * self.power.n;
        if let Some(d) = self
            .terms
            .keys()
            .map(|m| self.power.degree_of(m))
            .find(|&d| d != top_degree)
        {
            return Err(Error::WrongDegree {
                expected: top_degree,
                found: d,
            });
        }
        let key = TensorMonomial(vec![top; self.power.n]);
        Ok(self.coefficient(&key) / BigRational::from_integer(factorial(self.power.n)))
    }

    /// Integer coefficient vector over a column index, or `None` if some
    /// coefficient is not integral or some monomial is not indexed.
    pub(crate) fn to_integer_row(
        &self,
        index: &HashMap<TensorMonomial<A::Class>, usize>,
    ) -> Option<SparseRow> {
        let mut row = SparseRow::new();
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            row.insert(*index.get(m)?, c.to_integer());
        }
        Some(row)
    }
}

impl<A: FactorAlgebra> fmt::Display for TensorElement<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// q-th Betti number of Sym^n M_g: the ℚ-rank of the symmetrizing projector
/// P = (1/n!) Σ_σ σ on the degree-q part of H*(M_g)^{⊗n}.
pub fn invariant_dim(g: usize, n: usize, q: usize) -> Result<usize> {
    invariant_dim_with(g, n, q, Execution::default())
}

pub fn invariant_dim_with(g: usize, n: usize, q: usize, exec: Execution) -> Result<usize> {
    let power = TensorPower::new(ClosedSurface::new(g), n)?;
    let basis = power.basis_of_degree(q);
    let index: HashMap<_, _> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let perms = all_permutations(n);
    // n!·P applied to each basis vector; the scalar does not change the rank.
    let images = par::map_ordered(exec, &basis, |m| {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for sigma in &perms {
            let (neg, pm) = power.permute_monomial(sigma, m);
            let e = acc.entry(index[&pm]).or_insert_with(BigInt::zero);
            if neg {
                *e -= 1;
            } else {
                *e += 1;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    });
    let mut rank = RankAccumulator::new();
    for row in images {
        rank.insert(row);
    }
    Ok(rank.rank())
}
