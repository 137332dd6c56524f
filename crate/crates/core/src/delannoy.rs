//! Weighted Delannoy paths and their reduction to the lattice path of a sect.

use crate::error::{Error, Result};
use crate::sects::{LatticePath, Step};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DelannoyStep {
    N,
    E,
    /// Diagonal step with a positive weight.
    D(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDelannoyPath {
    steps: Vec<DelannoyStep>,
    p: usize,
    q: usize,
}

impl WeightedDelannoyPath {
    pub fn new(steps: Vec<DelannoyStep>) -> Result<Self> {
        let mut p = 0;
        let mut q = 0;
        for s in &steps {
            match s {
                DelannoyStep::N => q += 1,
                DelannoyStep::E => p += 1,
                DelannoyStep::D(0) => return Err(Error::NonPositiveWeight(0)),
                DelannoyStep::D(_) => {
                    p += 1;
                    q += 1;
                }
            }
        }
        Ok(WeightedDelannoyPath { steps, p, q })
    }

    pub fn steps(&self) -> &[DelannoyStep] {
        &self.steps
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }
}

impl fmt::Display for WeightedDelannoyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                DelannoyStep::N => "N".to_string(),
                DelannoyStep::E => "E".to_string(),
                DelannoyStep::D(w) => format!("D:{w}"),
            })
            .collect();
        f.write_str(&toks.join(" "))
    }
}

impl FromStr for WeightedDelannoyPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_delannoy(s)
    }
}

/// Parses whitespace-separated tokens `N`, `E` and `D:w`.
pub fn parse_delannoy(text: &str) -> Result<WeightedDelannoyPath> {
    let steps = text
        .split_whitespace()
        .map(|tok| match tok {
            "N" => Ok(DelannoyStep::N),
            "E" => Ok(DelannoyStep::E),
            _ => {
                let w = tok
                    .strip_prefix("D:")
                    .ok_or_else(|| Error::BadToken(tok.to_string()))?;
                let w: i64 = w.parse().map_err(|_| Error::BadToken(tok.to_string()))?;
                if w <= 0 {
                    return Err(Error::NonPositiveWeight(w));
                }
                Ok(DelannoyStep::D(w as usize))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    WeightedDelannoyPath::new(steps)
}

/// `N` and `E` are appended; `(D, w)` inserts `N` at 1-based position `w` of
/// the partial path and then appends `E`.
pub fn delannoy_to_lattice(path: &WeightedDelannoyPath) -> Result<LatticePath> {
    let mut out: Vec<Step> = Vec::with_capacity(path.p + path.q);
    for (idx, step) in path.steps.iter().enumerate() {
        match *step {
            DelannoyStep::N => out.push(Step::N),
            DelannoyStep::E => out.push(Step::E),
            DelannoyStep::D(w) => {
                if w == 0 || w > out.len() + 1 {
                    return Err(Error::WeightOutOfRange {
                        step: idx + 1,
                        weight: w,
                        max: out.len() + 1,
                    });
                }
                out.insert(w - 1, Step::N);
                out.push(Step::E);
            }
        }
    }
    Ok(LatticePath::new(out))
}
