use std::fmt::Write as _;

use anyhow::{anyhow, Result};
use num_traits::ToPrimitive;
use serde::Serialize;

use symprod::{Comparison, ExtElement, InvariantReport, SpaceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Serialize)]
pub struct Term {
    pub monomial: Vec<usize>,
    pub coeff: i64,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Pontrjagin {
    Zero(&'static str),
    Classes(Vec<Vec<Term>>),
}

#[derive(Serialize)]
pub struct ReportJson {
    pub spec: SpaceSpec,
    pub dimension: usize,
    pub s: usize,
    pub betti: Vec<u64>,
    pub c1: Vec<Term>,
    pub pontrjagin: Pontrjagin,
    pub w2_rank: usize,
}

#[derive(Serialize)]
struct TableRowJson {
    #[serde(flatten)]
    report: ReportJson,
    homotopy_class: usize,
}

#[derive(Serialize)]
struct ClassifyJson {
    verdict: String,
    invariants_a: ReportJson,
    invariants_b: ReportJson,
    witness: Option<String>,
}

fn terms(e: &ExtElement) -> Result<Vec<Term>> {
    e.terms()
        .map(|(m, c)| {
            let coeff = c
                .to_i64()
                .ok_or_else(|| anyhow!("coefficient {c} does not fit in 64 bits"))?;
            Ok(Term {
                monomial: m.indices().to_vec(),
                coeff,
            })
        })
        .collect()
}

impl ReportJson {
    pub fn new(r: &InvariantReport) -> Result<Self> {
        let pontrjagin = if r.pontrjagin_vanishes() {
            Pontrjagin::Zero("zero")
        } else {
            Pontrjagin::Classes(r.pontrjagin.iter().map(terms).collect::<Result<_>>()?)
        };
        Ok(ReportJson {
            spec: r.spec,
            dimension: r.dimension,
            s: r.s,
            betti: r.betti.clone(),
            c1: terms(&r.c1)?,
            pontrjagin,
            w2_rank: r.w2_rank,
        })
    }
}

#[derive(Serialize)]
struct ReportRow {
    g: usize,
    k: usize,
    n: usize,
    #[serde(rename = "N")]
    euclidean: usize,
    dimension: usize,
    s: usize,
    homotopy_class: usize,
    betti: String,
    c1: String,
    pontrjagin: String,
    w2_rank: usize,
}

fn betti_string(b: &[u64]) -> String {
    b.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn pontrjagin_string(r: &InvariantReport) -> String {
    if r.pontrjagin_vanishes() {
        "0".into()
    } else {
        r.pontrjagin
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl ReportRow {
    fn new(r: &InvariantReport) -> Self {
        ReportRow {
            g: r.spec.g,
            k: r.spec.k,
            n: r.spec.n,
            euclidean: r.spec.euclidean,
            dimension: r.dimension,
            s: r.s,
            homotopy_class: r.s,
            betti: betti_string(&r.betti),
            c1: r.c1.to_string(),
            pontrjagin: pontrjagin_string(r),
            w2_rank: r.w2_rank,
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn text_report(out: &mut String, r: &InvariantReport) {
    let _ = writeln!(out, "{}", r.spec);
    let _ = writeln!(out, "  dimension   {}", r.dimension);
    let _ = writeln!(out, "  s           {}", r.s);
    let _ = writeln!(out, "  betti       {}", betti_string(&r.betti));
    let _ = writeln!(out, "  c1          {}", r.c1);
    let _ = writeln!(out, "  pontrjagin  {}", pontrjagin_string(r));
    let _ = writeln!(out, "  w2_rank     {}", r.w2_rank);
}

pub fn render_report(r: &InvariantReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(&ReportJson::new(r)?),
        Format::Csv => csv_rows(&[ReportRow::new(r)]),
        Format::Text => {
            let mut out = String::new();
            text_report(&mut out, r);
            Ok(out)
        }
    }
}

pub fn render_table(rows: &[InvariantReport], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let rows = rows
                .iter()
                .map(|r| {
                    Ok(TableRowJson {
                        report: ReportJson::new(r)?,
                        homotopy_class: r.s,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            json(&rows)
        }
        Format::Csv => csv_rows(&rows.iter().map(ReportRow::new).collect::<Vec<_>>()),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>3} {:>3} {:>3} {:>3} {:>4} {:>3}  {:>7}  {:<12} c1",
                "g", "k", "n", "N", "dim", "s", "w2_rank", "pontrjagin"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>3} {:>3} {:>3} {:>3} {:>4} {:>3}  {:>7}  {:<12} {}",
                    r.spec.g,
                    r.spec.k,
                    r.spec.n,
                    r.spec.euclidean,
                    r.dimension,
                    r.s,
                    r.w2_rank,
                    pontrjagin_string(r),
                    r.c1
                );
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct ClassifyRow {
    g: usize,
    k: usize,
    n: usize,
    #[serde(rename = "N")]
    euclidean: usize,
    g2: usize,
    k2: usize,
    n2: usize,
    #[serde(rename = "N2")]
    euclidean2: usize,
    verdict: String,
    witness: String,
}

pub fn render_comparison(
    a: &InvariantReport,
    b: &InvariantReport,
    c: &Comparison,
    format: Format,
) -> Result<String> {
    match format {
        Format::Json => json(&ClassifyJson {
            verdict: c.verdict.to_string(),
            invariants_a: ReportJson::new(a)?,
            invariants_b: ReportJson::new(b)?,
            witness: c.witness.clone(),
        }),
        Format::Csv => csv_rows(&[ClassifyRow {
            g: a.spec.g,
            k: a.spec.k,
            n: a.spec.n,
            euclidean: a.spec.euclidean,
            g2: b.spec.g,
            k2: b.spec.k,
            n2: b.spec.n,
            euclidean2: b.spec.euclidean,
            verdict: c.verdict.to_string(),
            witness: c.witness.clone().unwrap_or_default(),
        }]),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{}  vs  {}", a.spec, b.spec);
            let _ = writeln!(out, "verdict  {}", c.verdict);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "witness  {w}");
            }
            Ok(out)
        }
    }
}
