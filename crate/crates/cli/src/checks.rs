use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use symprod::charclass::{
    chern_total_closed, chern_total_punctured, euler_char_closed, pontrjagin, restrict_punctured,
    w2_form,
};
use symprod::classifier::skew_rank;
use symprod::macdonald::MacdonaldRing;
use symprod::skeleton::torus_cw;
use symprod::tensor::{factorial, invariant_dim_with};
use symprod::{Error, Execution, ExtAlgebra, Result, Ring};

use crate::output::Format;

pub const DEFAULT_MAX_WORK: u128 = 10_000_000;

/// Basis-action evaluations of the projector: n! · (2g+2)^n.
pub fn oracle_work(g: usize, n: usize) -> u128 {
    let perms: u128 = factorial(n).try_into().unwrap_or(u128::MAX);
    (2 * g as u128 + 2)
        .checked_pow(n as u32)
        .and_then(|b| b.checked_mul(perms))
        .unwrap_or(u128::MAX)
}

pub fn guard(g: usize, n: usize, cap: u128) -> Result<()> {
    let estimate = oracle_work(g, n);
    if estimate > cap {
        return Err(Error::WorkCapExceeded { estimate, cap });
    }
    Ok(())
}

#[derive(Serialize)]
pub struct DegreeCheck {
    pub q: usize,
    pub macdonald: usize,
    pub invariant: usize,
    pub matches: bool,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub g: usize,
    pub n: usize,
    pub degrees: Vec<DegreeCheck>,
    pub pass: bool,
}

pub fn oracle_check(g: usize, n: usize, cap: u128, exec: Execution) -> Result<OracleReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    guard(g, n, cap)?;
    let ring = MacdonaldRing::new(g, n)?;
    let degrees = (0..=2 * n)
        .map(|q| {
            let macdonald = ring.span_dim(q, exec)?;
            let invariant = invariant_dim_with(g, n, q, exec)?;
            Ok(DegreeCheck {
                q,
                macdonald,
                invariant,
                matches: macdonald == invariant,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = degrees.iter().all(|d| d.matches);
    Ok(OracleReport {
        g,
        n,
        degrees,
        pass,
    })
}

#[derive(Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn outcome(check: &'static str, r: std::result::Result<String, String>) -> CheckOutcome {
    match r {
        Ok(detail) => CheckOutcome {
            check,
            pass: true,
            detail,
        },
        Err(detail) => CheckOutcome {
            check,
            pass: false,
            detail,
        },
    }
}

fn fail(e: Error) -> String {
    e.to_string()
}

fn genus_detection() -> std::result::Result<String, String> {
    for g in 0..=4 {
        for k in 1..=4 {
            for n in 2..=5 {
                let r = skew_rank(&w2_form(g, k, n).map_err(fail)?).map_err(fail)?;
                if r != 2 * g {
                    return Err(format!("w2 rank {r} for (g={g},k={k},n={n})"));
                }
            }
        }
    }
    Ok("w2 rank = 2g on 80 cases".into())
}

fn pontrjagin_vanishing() -> std::result::Result<String, String> {
    for g in 0..=4 {
        for k in 1..=4 {
            for n in 2..=5 {
                let p = pontrjagin(&chern_total_punctured(g, k, n).map_err(fail)?).map_err(fail)?;
                if p.iter().any(|x| !x.is_zero()) {
                    return Err(format!("nonzero Pontrjagin class at (g={g},k={k},n={n})"));
                }
            }
        }
    }
    Ok("all Pontrjagin classes vanish on 80 cases".into())
}

fn restriction() -> std::result::Result<String, String> {
    for g in 0..=3 {
        for n in 1..=4 {
            let closed = chern_total_closed(g, n).map_err(fail)?;
            for k in 1..=3 {
                let via = restrict_punctured(closed.total(), g, k, n).map_err(fail)?;
                if &via != chern_total_punctured(g, k, n).map_err(fail)?.total() {
                    return Err(format!("restriction differs at (g={g},k={k},n={n})"));
                }
            }
        }
    }
    Ok("restricted closed class equals direct class on 48 cases".into())
}

fn euler() -> std::result::Result<String, String> {
    for g in 0..=3usize {
        for n in 1..=4usize {
            // coefficient of z^n in (1-z)^(2g-2)
            let e = 2 * g as i64 - 2;
            let mut c = 1i64;
            for t in 0..n as i64 {
                c = c * (e - t) / (t + 1);
            }
            let expected = if n % 2 == 1 { -c } else { c };
            let chi = euler_char_closed(g, n).map_err(fail)?;
            if chi != expected.into() {
                return Err(format!(
                    "euler characteristic {chi} vs {expected} at (g={g},n={n})"
                ));
            }
        }
    }
    Ok("Euler characteristics match (1-z)^(2g-2) for g <= 3, n <= 4".into())
}

fn skeleton() -> std::result::Result<String, String> {
    for s in 1..=8 {
        let t = torus_cw(s).map_err(fail)?;
        for n in 1..=s {
            let h = t.truncate(n).map_err(fail)?.homology();
            let alg = ExtAlgebra::new(s, n, Ring::Integer).map_err(fail)?;
            let ext: Vec<usize> = (0..=n)
                .map(|q| usize::try_from(alg.dim(q)).unwrap())
                .collect();
            if !h.is_torsion_free() || h.betti != ext {
                return Err(format!("skeleton homology differs at (s={s},n={n})"));
            }
        }
    }
    Ok("skeleton Betti numbers equal exterior dimensions for s <= 8".into())
}

fn oracle(cap: u128, exec: Execution) -> std::result::Result<String, String> {
    let mut checked = 0;
    for (g, n) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        if guard(g, n, cap).is_err() {
            continue;
        }
        let r = oracle_check(g, n, cap, exec).map_err(fail)?;
        if !r.pass {
            return Err(format!(
                "span and invariant dimensions differ at (g={g},n={n})"
            ));
        }
        checked += 1;
    }
    Ok(format!(
        "Macdonald span equals projector rank on {checked} cases"
    ))
}

fn random_ring_axioms(seed: u64) -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 300;
    for _ in 0..trials {
        let s = rng.gen_range(2..=7);
        let cut = rng.gen_range(1..=s);
        let alg = ExtAlgebra::new(s, cut, Ring::Integer).map_err(fail)?;
        let (p, q) = (rng.gen_range(0..=cut), rng.gen_range(0..=cut));
        let mut pick = |deg: usize| {
            let mut idx: Vec<usize> = (1..=s).collect();
            for i in (1..idx.len()).rev() {
                idx.swap(i, rng.gen_range(0..=i));
            }
            idx.truncate(deg);
            (idx, rng.gen_range(-4i64..=4))
        };
        let a = alg.element([pick(p), pick(p)]).map_err(fail)?;
        let b = alg.element([pick(q), pick(q)]).map_err(fail)?;
        let c = alg.element([pick(1), pick(0)]).map_err(fail)?;
        let ab = a.mul(&b).map_err(fail)?;
        let ba = b.mul(&a).map_err(fail)?;
        let ba = if p * q % 2 == 1 { ba.neg() } else { ba };
        if ab != ba {
            return Err(format!("graded commutativity fails for {a} and {b}"));
        }
        if ab.mul(&c).map_err(fail)? != a.mul(&b.mul(&c).map_err(fail)?).map_err(fail)? {
            return Err(format!("associativity fails for {a}, {b}, {c}"));
        }
        if ab.reduce_mod2() != a.reduce_mod2().mul(&b.reduce_mod2()).map_err(fail)? {
            return Err(format!("mod 2 reduction not multiplicative for {a}, {b}"));
        }
    }
    Ok(format!("{trials} random exterior triples, seed {seed}"))
}

pub fn selftest(seed: u64, cap: u128, exec: Execution) -> Vec<CheckOutcome> {
    vec![
        outcome("genus_detection", genus_detection()),
        outcome("pontrjagin_vanishing", pontrjagin_vanishing()),
        outcome("restriction", restriction()),
        outcome("euler_characteristic", euler()),
        outcome("skeleton", skeleton()),
        outcome("oracle", oracle(cap, exec)),
        outcome("ring_axioms", random_ring_axioms(seed)),
    ]
}

pub fn render_oracle(r: &OracleReport, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(r)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for d in &r.degrees {
                w.serialize(d)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "oracle check g={} n={}", r.g, r.n);
            let _ = writeln!(out, "{:>3} {:>10} {:>10}", "q", "macdonald", "invariant");
            for d in &r.degrees {
                let mark = if d.matches { "ok" } else { "MISMATCH" };
                let _ = writeln!(
                    out,
                    "{:>3} {:>10} {:>10}  {mark}",
                    d.q, d.macdonald, d.invariant
                );
            }
            let _ = writeln!(out, "{}", if r.pass { "pass" } else { "FAIL" });
            Ok(out)
        }
    }
}

pub fn render_selftest(results: &[CheckOutcome], format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(results)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in results {
                w.serialize(r)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Text => {
            let mut out = String::new();
            for r in results {
                let _ = writeln!(
                    out,
                    "{} {}: {}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.check,
                    r.detail
                );
            }
            Ok(out)
        }
    }
}
