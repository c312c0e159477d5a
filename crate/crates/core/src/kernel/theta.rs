use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::format::format_sig12;

/// A positive sequence θ = (θ_i)_{i≥1}.
#[derive(Clone, Debug, PartialEq)]
pub enum ThetaSpec {
    Constant(f64),
    /// θ_i = c·q^{i−1}
    Geometric { c: f64, q: f64 },
    /// The listed values, then `tail` forever.
    Explicit { prefix: Vec<f64>, tail: f64 },
}

fn positive(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(Error::domain(format!("{what} must be a positive real, got {x}")))
    }
}

impl ThetaSpec {
    pub fn constant(b: f64) -> Result<Self> {
        Ok(ThetaSpec::Constant(positive(b, "θ")?))
    }

    pub fn geometric(c: f64, q: f64) -> Result<Self> {
        Ok(ThetaSpec::Geometric {
            c: positive(c, "geometric scale")?,
            q: positive(q, "geometric ratio")?,
        })
    }

    pub fn explicit(prefix: Vec<f64>, tail: f64) -> Result<Self> {
        for &x in &prefix {
            positive(x, "θ entry")?;
        }
        Ok(ThetaSpec::Explicit {
            prefix,
            tail: positive(tail, "tail")?,
        })
    }

    /// θ_i, 1-based.
    pub fn theta(&self, i: usize) -> f64 {
        assert!(i >= 1, "θ is indexed from 1");
        match self {
            ThetaSpec::Constant(b) => *b,
            ThetaSpec::Geometric { c, q } => c * q.powi((i - 1) as i32),
            ThetaSpec::Explicit { prefix, tail } => prefix.get(i - 1).copied().unwrap_or(*tail),
        }
    }

    /// θ_1, …, θ_n.
    pub fn values(&self, n: usize) -> Vec<f64> {
        (1..=n).map(|i| self.theta(i)).collect()
    }

    /// sup_i θ_i (infinite for a growing geometric sequence).
    pub fn sup(&self) -> f64 {
        match self {
            ThetaSpec::Constant(b) => *b,
            ThetaSpec::Geometric { c, q } if *q <= 1.0 => *c,
            ThetaSpec::Geometric { .. } => f64::INFINITY,
            ThetaSpec::Explicit { prefix, tail } => prefix.iter().copied().fold(*tail, f64::max),
        }
    }

    /// Limits over the rank exist only for sup θ < 1.
    pub fn require_subunit(&self) -> Result<()> {
        if self.sup() < 1.0 {
            Ok(())
        } else {
            Err(Error::domain(format!("limits need sup θ < 1, but {self} has sup {}", self.sup())))
        }
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaSpec::Constant(b) => write!(f, "const:{}", format_sig12(*b)),
            ThetaSpec::Geometric { c, q } => write!(f, "geom:{},{}", format_sig12(*c), format_sig12(*q)),
            ThetaSpec::Explicit { prefix, tail } => {
                let list: Vec<String> = prefix.iter().map(|x| format_sig12(*x)).collect();
                write!(f, "list:{};tail={}", list.join(","), format_sig12(*tail))
            }
        }
    }
}

fn number(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::domain(format!("`{s}` is not a number")))
}

/// Parses `const:b`, `geom:c,q` or `list:a,b,…;tail=t`.
impl FromStr for ThetaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse θ spec `{s}`; expected const:b, geom:c,q or list:a,b;tail=t"));
        let (kind, body) = s.split_once(':').ok_or_else(bad)?;
        match kind.trim() {
            "const" => ThetaSpec::constant(number(body)?),
            "geom" => {
                let (c, q) = body.split_once(',').ok_or_else(bad)?;
                ThetaSpec::geometric(number(c)?, number(q)?)
            }
            "list" => {
                let (list, tail) = body.split_once(';').ok_or_else(bad)?;
                let tail = tail.trim().strip_prefix("tail=").ok_or_else(bad)?;
                let prefix = if list.trim().is_empty() {
                    Vec::new()
                } else {
                    list.split(',').map(number).collect::<Result<_>>()?
                };
                ThetaSpec::explicit(prefix, number(tail)?)
            }
            _ => Err(bad()),
        }
    }
}
