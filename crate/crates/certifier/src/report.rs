//! Versioned key-value serialization of certificates.
//!
//! ```text
//! hill-report v1
//!
//! [certificate]
//! kind = 1d
//! id = fig2
//! ...
//! ```
//!
//! Lines starting with `#` are annotations and are skipped by the parser.
//!
//! Numbers are written with 17 significant digits so that every stored value parses
//! back to the same `f64` and verdicts can be recomputed without re-sweeping.

use std::fmt::Write as _;

use crate::certificate::{Certificate1D, Certificate2D, Verdict};
use crate::grid::{Grid1DSpec, Rect};
use crate::{CertError, Result};

pub const HEADER: &str = "hill-report v1";

#[derive(Debug, Clone, PartialEq)]
pub enum ReportEntry {
    One(Certificate1D),
    Two(Certificate2D),
}

impl ReportEntry {
    pub fn id(&self) -> &str {
        match self {
            ReportEntry::One(c) => &c.id,
            ReportEntry::Two(c) => &c.id,
        }
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            ReportEntry::One(c) => c.verdict,
            ReportEntry::Two(c) => c.verdict,
        }
    }

    pub fn recompute_verdict(&self) -> Verdict {
        match self {
            ReportEntry::One(c) => c.recompute_verdict(),
            ReportEntry::Two(c) => c.recompute_verdict(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

impl Report {
    pub fn push(&mut self, e: ReportEntry) {
        self.entries.push(e);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict().passed())
    }

    /// True when every stored verdict equals the one recomputed from the stored numbers.
    pub fn recheck(&self) -> bool {
        self.entries.iter().all(|e| e.verdict() == e.recompute_verdict())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from(HEADER);
        s.push('\n');
        for e in &self.entries {
            s.push_str("\n[certificate]\n");
            let kv: Vec<(&str, String)> = match e {
                ReportEntry::One(c) => vec![
                    ("kind", "1d".into()),
                    ("id", c.id.clone()),
                    ("function", c.function.clone()),
                    ("lo", num(c.spec.lo)),
                    ("hi", num(c.spec.hi)),
                    ("eps", num(c.spec.eps)),
                    ("B", num(c.spec.b)),
                    ("m", num(c.m)),
                    ("witness", num(c.witness)),
                    ("float_budget", num(c.float_budget)),
                    ("margin", num(c.margin())),
                    ("verdict", c.verdict.to_string()),
                ],
                ReportEntry::Two(c) => vec![
                    ("kind", "2d".into()),
                    ("id", c.id.clone()),
                    ("function", c.function.clone()),
                    ("x0", num(c.rect.x0)),
                    ("x1", num(c.rect.x1)),
                    ("u0", num(c.rect.u0)),
                    ("u1", num(c.rect.u1)),
                    ("eps_x", num(c.eps_x)),
                    ("eps_u", num(c.eps_u)),
                    ("B_x", num(c.b_x)),
                    ("B_u", num(c.b_u)),
                    ("M", num(c.big_m)),
                    ("witness_x", num(c.witness.0)),
                    ("witness_u", num(c.witness.1)),
                    ("float_budget", num(c.float_budget)),
                    ("margin", num(c.margin())),
                    ("verdict", c.verdict.to_string()),
                ],
            };
            for (k, v) in kv {
                let _ = writeln!(s, "{k} = {v}");
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim() == HEADER => {}
            _ => return Err(CertError::Parse { line: 1, message: format!("expected header {HEADER:?}") }),
        }
        let mut blocks: Vec<(usize, Vec<(String, String)>)> = Vec::new();
        for (i, line) in lines {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line == "[certificate]" {
                blocks.push((i + 1, Vec::new()));
                continue;
            }
            let Some((k, v)) = line.split_once(" = ") else {
                return Err(CertError::Parse { line: i + 1, message: format!("malformed line {line:?}") });
            };
            match blocks.last_mut() {
                Some((_, kv)) => kv.push((k.to_owned(), v.to_owned())),
                None => return Err(CertError::Parse { line: i + 1, message: "key outside a certificate".into() }),
            }
        }
        let entries = blocks.into_iter().map(|(line, kv)| parse_block(line, &kv)).collect::<Result<_>>()?;
        Ok(Report { entries })
    }
}

fn parse_block(line: usize, kv: &[(String, String)]) -> Result<ReportEntry> {
    let err = |message: String| CertError::Parse { line, message };
    let get = |k: &str| {
        kv.iter().find(|(key, _)| key == k).map(|(_, v)| v.as_str()).ok_or_else(|| err(format!("missing key {k}")))
    };
    let f = |k: &str| -> Result<f64> { get(k)?.parse().map_err(|e| err(format!("{k}: {e}"))) };
    let verdict: Verdict = get("verdict")?.parse().map_err(err)?;
    let (id, function) = (get("id")?, get("function")?);
    let entry = match get("kind")? {
        "1d" => {
            let spec = Grid1DSpec { lo: f("lo")?, hi: f("hi")?, eps: f("eps")?, b: f("B")? };
            let mut c = Certificate1D::from_parts(id, function, spec, f("m")?, f("witness")?, f("float_budget")?);
            c.verdict = verdict;
            ReportEntry::One(c)
        }
        "2d" => {
            let rect = Rect { x0: f("x0")?, x1: f("x1")?, u0: f("u0")?, u1: f("u1")? };
            let mut c = Certificate2D::from_parts(
                id,
                function,
                rect,
                (f("eps_x")?, f("eps_u")?),
                (f("B_x")?, f("B_u")?),
                f("M")?,
                (f("witness_x")?, f("witness_u")?),
                f("float_budget")?,
            );
            c.verdict = verdict;
            ReportEntry::Two(c)
        }
        other => return Err(err(format!("unknown kind {other:?}"))),
    };
    Ok(entry)
}
