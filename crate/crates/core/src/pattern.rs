//! Sign patterns and the built-in patterns T, T′, D and their block-diagonal
//! compositions.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Zero,
    Minus,
}

impl Sign {
    pub fn of<S: Scalar>(x: &S) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '0' => Some(Sign::Zero),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Zero => '0',
            Sign::Minus => '-',
        }
    }

    pub fn is_nonzero(self) -> bool {
        self != Sign::Zero
    }
}

/// A square grid of signs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern {
    n: usize,
    entries: Vec<Sign>,
}

impl SignPattern {
    pub fn new(n: usize, entries: Vec<Sign>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPattern("order must be at least 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidPattern(format!(
                "expected {} entries for order {n}, found {}",
                n * n,
                entries.len()
            )));
        }
        Ok(SignPattern { n, entries })
    }

    /// Builds a pattern from rows written over `+`, `-`, `0`.
    pub fn from_rows<R: AsRef<str>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            let before = entries.len();
            for c in row.chars() {
                let s = Sign::from_char(c).ok_or_else(|| {
                    Error::InvalidPattern(format!("row {i}: invalid sign character {c:?}"))
                })?;
                entries.push(s);
            }
            if entries.len() - before != n {
                return Err(Error::InvalidPattern(format!(
                    "row {i} has {} entries, expected {n}",
                    entries.len() - before
                )));
            }
        }
        SignPattern::new(n, entries)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Sign {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<String> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|s| s.to_char()).collect())
            .collect()
    }

    /// Positions `(i, j)` where the pattern is nonzero.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_nonzero())
            .map(move |(k, _)| (k / self.n, k % self.n))
    }

    /// True iff every nonzero entry of `sub` appears in `self` with the same
    /// sign.
    pub fn is_superpattern_of(&self, sub: &SignPattern) -> Result<bool> {
        if self.n != sub.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: sub.n,
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&sub.entries)
            .all(|(p, q)| !q.is_nonzero() || p == q))
    }

    pub fn block_diag(blocks: &[SignPattern]) -> Result<SignPattern> {
        if blocks.is_empty() {
            return Err(Error::EmptyBlockList);
        }
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut entries = vec![Sign::Zero; n * n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    entries[(off + i) * n + off + j] = b.get(i, j);
                }
            }
            off += b.n;
        }
        SignPattern::new(n, entries)
    }
}

/// `is_superpattern(p, q)`: `p` is a superpattern of `q`.
pub fn is_superpattern(p: &SignPattern, q: &SignPattern) -> Result<bool> {
    p.is_superpattern_of(q)
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    n: usize,
    rows: Vec<String>,
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PatternJson {
            n: self.n,
            rows: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PatternJson::deserialize(deserializer)?;
        let p = SignPattern::from_rows(&raw.rows).map_err(D::Error::custom)?;
        if p.n != raw.n {
            return Err(D::Error::custom(format!(
                "declared n = {} but {} rows given",
                raw.n, p.n
            )));
        }
        Ok(p)
    }
}

const T_ROWS: [&str; 6] = ["++0000", "--+000", "000+00", "0000+0", "--000+", "+++0-0"];
const T_PRIME_ROWS: [&str; 6] = ["++0000", "--+000", "+00+00", "0000+0", "--000+", "+++0-0"];
const D_ROWS: [&str; 2] = ["++", "--"];

/// Names of the built-in patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternName {
    T,
    TPrime,
    D,
    /// The sign pattern of the parametrized matrix X (equal to T).
    XTemplate,
    /// diag(T, D, D, D, D, D)
    S,
    /// diag(T′, D, D, D, D, D)
    SPrime,
    /// diag(T, D)
    TD,
    U1,
    U2,
    U3,
    /// diag(T, …, T, D, …, D) with `t` T-blocks and `d` D-blocks.
    V {
        t: usize,
        d: usize,
    },
}

impl PatternName {
    pub const ALL_FIXED: [PatternName; 10] = [
        PatternName::T,
        PatternName::TPrime,
        PatternName::D,
        PatternName::XTemplate,
        PatternName::S,
        PatternName::SPrime,
        PatternName::TD,
        PatternName::U1,
        PatternName::U2,
        PatternName::U3,
    ];
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternName::T => write!(f, "T"),
            PatternName::TPrime => write!(f, "Tprime"),
            PatternName::D => write!(f, "D"),
            PatternName::XTemplate => write!(f, "X"),
            PatternName::S => write!(f, "S"),
            PatternName::SPrime => write!(f, "Sprime"),
            PatternName::TD => write!(f, "TD"),
            PatternName::U1 => write!(f, "U1"),
            PatternName::U2 => write!(f, "U2"),
            PatternName::U3 => write!(f, "U3"),
            PatternName::V { t, d } => write!(f, "V({t},{d})"),
        }
    }
}

impl FromStr for PatternName {
    type Err = Error;

    /// Accepts the `Display` spellings; `V` takes the form `V(t,d)`.
    fn from_str(s: &str) -> Result<Self> {
        let name = match s.trim() {
            "T" => PatternName::T,
            "Tprime" | "T'" => PatternName::TPrime,
            "D" => PatternName::D,
            "X" | "X_template" => PatternName::XTemplate,
            "S" => PatternName::S,
            "Sprime" | "S'" => PatternName::SPrime,
            "TD" => PatternName::TD,
            "U1" => PatternName::U1,
            "U2" => PatternName::U2,
            "U3" => PatternName::U3,
            other => {
                let inner = other
                    .strip_prefix("V(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::UnknownPattern(other.to_string()))?;
                let (t, d) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::UnknownPattern(other.to_string()))?;
                let parse = |x: &str| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::UnknownPattern(other.to_string()))
                };
                PatternName::V {
                    t: parse(t)?,
                    d: parse(d)?,
                }
            }
        };
        Ok(name)
    }
}

fn repeat(block: &SignPattern, times: usize) -> Vec<SignPattern> {
    vec![block.clone(); times]
}

pub fn builtin_pattern(name: PatternName) -> Result<SignPattern> {
    let t = SignPattern::from_rows(&T_ROWS)?;
    let d = SignPattern::from_rows(&D_ROWS)?;
    let pattern = match name {
        PatternName::T | PatternName::XTemplate => t,
        PatternName::TPrime => SignPattern::from_rows(&T_PRIME_ROWS)?,
        PatternName::D => d,
        PatternName::S => {
            let mut blocks = vec![t];
            blocks.extend(repeat(&d, 5));
            SignPattern::block_diag(&blocks)?
        }
        PatternName::SPrime => {
            let mut blocks = vec![SignPattern::from_rows(&T_PRIME_ROWS)?];
            blocks.extend(repeat(&d, 5));
            SignPattern::block_diag(&blocks)?
        }
        PatternName::TD | PatternName::U1 => SignPattern::block_diag(&[t, d])?,
        PatternName::U2 => {
            let u1 = builtin_pattern(PatternName::U1)?;
            SignPattern::block_diag(&[u1.clone(), u1])?
        }
        PatternName::U3 => {
            let u2 = builtin_pattern(PatternName::U2)?;
            SignPattern::block_diag(&[u2.clone(), u2])?
        }
        PatternName::V { t: nt, d: nd } => {
            if nt + nd == 0 {
                return Err(Error::InvalidPattern(
                    "V(t,d) needs at least one block".into(),
                ));
            }
            let mut blocks = repeat(&t, nt);
            blocks.extend(repeat(&d, nd));
            SignPattern::block_diag(&blocks)?
        }
    };
    Ok(pattern)
}
