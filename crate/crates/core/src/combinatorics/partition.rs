use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, i.e. a Young diagram with weakly decreasing positive rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in partition {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `x` (1-based), zero past the last row.
    pub fn row_len(&self, x: usize) -> usize {
        if x == 0 {
            return 0;
        }
        self.0.get(x - 1).copied().unwrap_or(0)
    }

    /// Length of column `y` (1-based).
    pub fn col_len(&self, y: usize) -> usize {
        if y == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= y).count()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x >= 1 && y >= 1 && self.row_len(x) >= y
    }

    /// Cells `(x, y)` that can be removed, top to bottom.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.0.len())
            .filter(|&x| self.row_len(x) > self.row_len(x + 1))
            .map(|x| (x, self.row_len(x)))
            .collect()
    }

    /// Cells `(x, y)` that can be added, top to bottom.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.0.len() + 1)
            .filter(|&x| x == 1 || self.row_len(x - 1) > self.row_len(x))
            .map(|x| (x, self.row_len(x) + 1))
            .collect()
    }

    pub fn hook(&self, x: usize, y: usize) -> Option<usize> {
        self.contains(x, y).then(|| self.row_len(x) + self.col_len(y) - x - y + 1)
    }

    pub(crate) fn with_added(&self, x: usize) -> Partition {
        let mut parts = self.0.clone();
        if x > parts.len() {
            parts.push(1);
        } else {
            parts[x - 1] += 1;
        }
        Partition(parts)
    }

    pub(crate) fn with_removed(&self, x: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[x - 1] -= 1;
        if parts[x - 1] == 0 {
            parts.pop();
        }
        Partition(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in decreasing lexicographic order: `(3), (2,1), (1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
