use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// An integer point `(x, α)` of `Z^E × Z`; `α` is the degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: Vec<i64>,
    pub alpha: i64,
}

impl LatticePoint {
    pub fn new(x: Vec<i64>, alpha: i64) -> Self {
        LatticePoint { x, alpha }
    }

    /// `(c, ..., c, alpha)` with `n` edge coordinates.
    pub fn constant(n: usize, c: i64, alpha: i64) -> Self {
        LatticePoint::new(vec![c; n], alpha)
    }

    /// Lifts a 0/1 vector to degree 1.
    pub fn lift(coords: &[u8]) -> Self {
        LatticePoint::new(coords.iter().map(|&c| i64::from(c)).collect(), 1)
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticePoint::new(self.x.iter().map(|v| v * k).collect(), self.alpha * k)
    }

    /// Coordinates including the degree as the last entry.
    pub fn to_vec(&self) -> Vec<i64> {
        let mut v = self.x.clone();
        v.push(self.alpha);
        v
    }
}

/// Comma-separated `x1,...,xm,alpha`.
impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.x {
            write!(f, "{v},")?;
        }
        write!(f, "{}", self.alpha)
    }
}

impl FromStr for LatticePoint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let alpha = values.pop().ok_or("empty point")?;
        Ok(LatticePoint::new(values, alpha))
    }
}
