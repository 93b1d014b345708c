//! Invariant reports for Sym^n M_{g,k} × ℝ^N and pairwise verdicts.
//!
//! The homotopy type is determined by s = 2g+k−1 and n (the space is
//! homotopy equivalent to Sk^n T^s). When s and n agree but the genera
//! differ, the rank of w₂ (= 2g) separates the two manifolds up to
//! homeomorphism, for every common N. Positive identifications of distinct
//! parameter sets are never claimed.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::charclass::{chern_total_punctured, pontrjagin, stiefel_whitney, AltFormZ2};
use crate::error::{Error, Result};
use crate::exterior::ExtElement;
use crate::par::{self, Execution};

/// Largest s for which every Betti number fits in a u64.
pub const MAX_RANK: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpaceSpec {
    pub g: usize,
    pub k: usize,
    pub n: usize,
    /// Euclidean stabilization: the manifold is Sym^n M_{g,k} × ℝ^N.
    #[serde(rename = "N")]
    pub euclidean: usize,
}

impl SpaceSpec {
    pub fn new(g: usize, k: usize, n: usize, euclidean: usize) -> Result<Self> {
        let spec = SpaceSpec { g, k, n, euclidean };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidParameter("k (punctures) must be >= 1".into()));
        }
        if self.n < 2 {
            return Err(Error::InvalidParameter(
                "n (symmetric power) must be >= 2".into(),
            ));
        }
        if self.s() > MAX_RANK {
            return Err(Error::InvalidParameter(format!(
                "2g+k-1 = {} exceeds the supported maximum {MAX_RANK}",
                self.s()
            )));
        }
        Ok(())
    }

    /// Rank of π₁ = H₁ = ℤ^s.
    pub fn s(&self) -> usize {
        2 * self.g + self.k - 1
    }

    pub fn dimension(&self) -> usize {
        2 * self.n + self.euclidean
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Sym^{} M_{{{},{}}} x R^{}",
            self.n, self.g, self.k, self.euclidean
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport {
    pub spec: SpaceSpec,
    pub dimension: usize,
    pub s: usize,
    /// Betti numbers in degrees 0..=n (all higher ones vanish).
    pub betti: Vec<u64>,
    pub c1: ExtElement,
    pub pontrjagin: Vec<ExtElement>,
    pub w2_rank: usize,
}

impl InvariantReport {
    pub fn pontrjagin_vanishes(&self) -> bool {
        self.pontrjagin.iter().all(ExtElement::is_zero)
    }
}

/// Rank over ℤ/2 of an alternating form; always even.
pub fn skew_rank(form: &AltFormZ2) -> Result<usize> {
    form.validate()?;
    let r = form.rank();
    assert!(r.is_multiple_of(2), "alternating form of odd rank {r}");
    Ok(r)
}

pub fn report(spec: &SpaceSpec) -> Result<InvariantReport> {
    spec.validate()?;
    let (g, k, n) = (spec.g, spec.k, spec.n);
    let chern = chern_total_punctured(g, k, n)?;
    let alg = chern.total().algebra();
    let betti = alg
        .graded_dims()
        .into_iter()
        .map(|b| u64::try_from(b).expect("s <= MAX_RANK keeps binomials in range"))
        .collect();
    let w = stiefel_whitney(&chern);
    let form = AltFormZ2::from_degree_two(&w[2])?;
    Ok(InvariantReport {
        spec: *spec,
        dimension: spec.dimension(),
        s: spec.s(),
        betti,
        c1: chern.class(1),
        pontrjagin: pontrjagin(&chern)?,
        w2_rank: skew_rank(&form)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Homeomorphic,
    HomotopyEquivalentNotHomeomorphic,
    NotHomotopyEquivalent,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Homeomorphic => "homeomorphic",
            Verdict::HomotopyEquivalentNotHomeomorphic => "homotopy_equivalent_not_homeomorphic",
            Verdict::NotHomotopyEquivalent => "not_homotopy_equivalent",
            Verdict::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    /// The invariant that decided the verdict, e.g. `w2_rank: 0 vs 2`.
    pub witness: Option<String>,
}

pub fn compare_reports(a: &InvariantReport, b: &InvariantReport) -> Comparison {
    let (sa, sb) = (&a.spec, &b.spec);
    if sa == sb {
        return Comparison {
            verdict: Verdict::Homeomorphic,
            witness: Some("identical parameters".into()),
        };
    }
    if a.s != b.s || sa.n != sb.n {
        return if a.s != b.s {
            Comparison {
                verdict: Verdict::NotHomotopyEquivalent,
                witness: Some(format!("s: {} vs {}", a.s, b.s)),
            }
        } else if trimmed(&a.betti) != trimmed(&b.betti) {
            Comparison {
                verdict: Verdict::NotHomotopyEquivalent,
                witness: Some(format!("betti: {:?} vs {:?}", a.betti, b.betti)),
            }
        } else {
            Comparison {
                verdict: Verdict::Undetermined,
                witness: None,
            }
        };
    }
    if sa.g != sb.g && a.dimension == b.dimension {
        return Comparison {
            verdict: Verdict::HomotopyEquivalentNotHomeomorphic,
            witness: Some(format!("w2_rank: {} vs {}", a.w2_rank, b.w2_rank)),
        };
    }
    Comparison {
        verdict: Verdict::Undetermined,
        witness: None,
    }
}

fn trimmed(betti: &[u64]) -> &[u64] {
    let end = betti.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
    &betti[..end]
}

pub fn compare(a: &SpaceSpec, b: &SpaceSpec) -> Result<Comparison> {
    Ok(compare_reports(&report(a)?, &report(b)?))
}

/// Whether a pair falls in the regime max(g, g') ≥ n/2 settled before the
/// general non-homeomorphism result.
pub fn previously_settled(a: &SpaceSpec, b: &SpaceSpec) -> bool {
    2 * a.g.max(b.g) >= a.n.max(b.n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridRanges {
    pub g: RangeInclusive<usize>,
    pub k: RangeInclusive<usize>,
    pub n: RangeInclusive<usize>,
    pub euclidean: RangeInclusive<usize>,
}

impl GridRanges {
    /// Specs in lexicographic (g, k, n, N) order.
    pub fn specs(&self) -> Result<Vec<SpaceSpec>> {
        let mut out = Vec::new();
        for g in self.g.clone() {
            for k in self.k.clone() {
                for n in self.n.clone() {
                    for e in self.euclidean.clone() {
                        out.push(SpaceSpec::new(g, k, n, e)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

pub fn table(ranges: &GridRanges, exec: Execution) -> Result<Vec<InvariantReport>> {
    let specs = ranges.specs()?;
    par::try_map_ordered(exec, &specs, report)
}
