//! Cellular chain complexes of tori and their skeleta, with homology from
//! the Smith normal form of the boundary maps.
//!
//! The product of minimal circle structures on T^s has C(s,q) cells in
//! degree q and every cellular boundary vanishes, so Sk^n T^s has free
//! homology of rank C(s,q) in each degree q ≤ n.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Free chain complex C_0 ← C_1 ← … ← C_top over ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    /// `boundaries[q - 1]` is ∂_q : C_q → C_{q−1}, shape rank(C_{q−1}) × rank(C_q).
    boundaries: Vec<IntMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub betti: Vec<usize>,
    /// Invariant factors > 1 of H_q, per degree.
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologySummary {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }
}

impl ChainComplex {
    /// Validates shapes and ∂∘∂ = 0.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::IllFormedComplex("no chain groups".into()));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::IllFormedComplex(format!(
                "{} chain groups need {} boundary maps, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let q = i + 1;
            if d.nrows() != ranks[q - 1] || d.ncols() != ranks[q] {
                return Err(Error::IllFormedComplex(format!(
                    "boundary {q} has shape {}x{}, expected {}x{}",
                    d.nrows(),
                    d.ncols(),
                    ranks[q - 1],
                    ranks[q]
                )));
            }
        }
        for (i, pair) in boundaries.windows(2).enumerate() {
            if !pair[0].mul(&pair[1]).is_zero() {
                return Err(Error::IllFormedComplex(format!(
                    "boundary {} composed with boundary {} is nonzero",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// ∂_q for 1 ≤ q ≤ top degree.
    pub fn boundary(&self, q: usize) -> Option<&IntMatrix> {
        q.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// Drops every cell above degree `n`.
    pub fn truncate(&self, n: usize) -> Result<ChainComplex> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "skeleton degree must be >= 1".into(),
            ));
        }
        let keep = (n + 1).min(self.ranks.len());
        Ok(ChainComplex {
            ranks: self.ranks[..keep].to_vec(),
            boundaries: self.boundaries[..keep - 1].to_vec(),
        })
    }

    pub fn homology(&self) -> HomologySummary {
        let diags: Vec<Vec<BigInt>> = self
            .boundaries
            .iter()
            .map(IntMatrix::smith_diagonal)
            .collect();
        let rank_of = |q: usize| -> usize {
            q.checked_sub(1)
                .and_then(|i| diags.get(i))
                .map_or(0, Vec::len)
        };
        let mut betti = Vec::with_capacity(self.ranks.len());
        let mut torsion = Vec::with_capacity(self.ranks.len());
        for q in 0..self.ranks.len() {
            betti.push(self.ranks[q] - rank_of(q) - rank_of(q + 1));
            let t = diags
                .get(q)
                .map(|d| d.iter().filter(|x| !x.is_one()).cloned().collect())
                .unwrap_or_default();
            torsion.push(t);
        }
        HomologySummary { betti, torsion }
    }
}

/// Cellular chain complex of T^s with the product of minimal circle structures.
pub fn torus_cw(s: usize) -> Result<ChainComplex> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "torus dimension must be >= 1".into(),
        ));
    }
    let ranks: Vec<usize> = (0..=s).map(|q| binomial(s, q)).collect();
    let boundaries = (1..=s)
        .map(|q| IntMatrix::zeros(ranks[q - 1], ranks[q]))
        .collect();
    ChainComplex::new(ranks, boundaries)
}

fn binomial(n: usize, k: usize) -> usize {
    num_integer::binomial(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_ranks() {
        assert_eq!(torus_cw(3).unwrap().ranks(), &[1, 3, 3, 1]);
        assert_eq!(torus_cw(1).unwrap().ranks(), &[1, 1]);
        assert_eq!(torus_cw(4).unwrap().ranks(), &[1, 4, 6, 4, 1]);
        assert!(torus_cw(3)
            .unwrap()
            .boundaries
            .iter()
            .all(IntMatrix::is_zero));
        assert!(torus_cw(0).is_err());
    }

    #[test]
    fn truncation() {
        let t3 = torus_cw(3).unwrap();
        assert_eq!(t3.truncate(2).unwrap().ranks(), &[1, 3, 3]);
        assert_eq!(t3.truncate(5).unwrap(), t3);
        assert_eq!(
            torus_cw(4).unwrap().truncate(2).unwrap().ranks(),
            &[1, 4, 6]
        );
    }

    #[test]
    fn skeleton_homology() {
        let h = torus_cw(3).unwrap().truncate(2).unwrap().homology();
        assert_eq!(h.betti, vec![1, 3, 3]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn torsion_from_multiplication_by_two() {
        let c = ChainComplex::new(vec![1, 1], vec![IntMatrix::from_rows(&[vec![2i64]])]).unwrap();
        let h = c.homology();
        assert_eq!(h.betti, vec![0, 0]);
        assert_eq!(h.torsion[0], vec![BigInt::from(2)]);
        assert!(h.torsion[1].is_empty());
    }

    #[test]
    fn real_projective_plane() {
        // minimal CW structure: ∂1 = 0, ∂2 = 2
        let c = ChainComplex::new(
            vec![1, 1, 1],
            vec![
                IntMatrix::from_rows(&[vec![0i64]]),
                IntMatrix::from_rows(&[vec![2i64]]),
            ],
        )
        .unwrap();
        let h = c.homology();
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
    }

    #[test]
    fn ill_formed_complexes_rejected() {
        let d1 = IntMatrix::from_rows(&[vec![1i64]]);
        let d2 = IntMatrix::from_rows(&[vec![1i64]]);
        assert!(matches!(
            ChainComplex::new(vec![1, 1, 1], vec![d1, d2]),
            Err(Error::IllFormedComplex(_))
        ));
        assert!(ChainComplex::new(vec![1, 2], vec![IntMatrix::zeros(1, 1)]).is_err());
        assert!(ChainComplex::new(vec![1, 1], vec![]).is_err());
    }
}
