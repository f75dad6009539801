use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{partitions_of, Partition};
use crate::error::{Error, Result};

/// An m-node: component `k` (1-based position), row `x`, column `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MNode {
    pub k: usize,
    pub x: usize,
    pub y: usize,
}

impl MNode {
    pub fn new(k: usize, x: usize, y: usize) -> Self {
        MNode { k, x, y }
    }

    /// Classical content `y - x`.
    pub fn classical_content(&self) -> i64 {
        self.y as i64 - self.x as i64
    }
}

impl fmt::Display for MNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.x, self.y, self.k)
    }
}

/// An m-tuple of partitions; components may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct MPartition {
    comps: Vec<Partition>,
}

impl MPartition {
    pub fn new(comps: Vec<Partition>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::Parse("an m-partition needs m >= 1 components".into()));
        }
        Ok(MPartition { comps })
    }

    pub fn empty(m: usize) -> Self {
        MPartition { comps: vec![Partition::empty(); m] }
    }

    /// Builds from nested part lists, e.g. `[[2],[1],[1]]`.
    pub fn from_parts(parts: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(parts.into_iter().map(Partition::new).collect::<Result<_>>()?)
    }

    /// Parses the text encoding `[[2],[1],[1]]`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<Vec<usize>> =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("shape {s:?}: {e}")))?;
        Self::from_parts(parts)
    }

    pub fn encode(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn m(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().map(Partition::size).sum()
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.comps[k - 1]
    }

    pub fn components(&self) -> &[Partition] {
        &self.comps
    }

    pub fn contains(&self, node: &MNode) -> bool {
        node.k >= 1 && node.k <= self.m() && self.component(node.k).contains(node.x, node.y)
    }

    /// All nodes, by component, then row, then column.
    pub fn nodes(&self) -> Vec<MNode> {
        let mut out = Vec::with_capacity(self.size());
        for (i, p) in self.comps.iter().enumerate() {
            for (r, &len) in p.parts().iter().enumerate() {
                for c in 1..=len {
                    out.push(MNode::new(i + 1, r + 1, c));
                }
            }
        }
        out
    }

    /// The removable m-nodes, ordered by component then row.
    pub fn removable_nodes(&self) -> Vec<MNode> {
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.removable_cells().into_iter().map(move |(x, y)| MNode::new(i + 1, x, y)))
            .collect()
    }

    /// The addable m-nodes, ordered by component then row.
    pub fn addable_nodes(&self) -> Vec<MNode> {
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.addable_cells().into_iter().map(move |(x, y)| MNode::new(i + 1, x, y)))
            .collect()
    }

    pub fn with_node(&self, node: &MNode) -> Result<Self> {
        if !self.addable_nodes().contains(node) {
            return Err(Error::Domain(format!("{node} is not addable to {self}")));
        }
        let mut comps = self.comps.clone();
        comps[node.k - 1] = comps[node.k - 1].with_added(node.x);
        Ok(MPartition { comps })
    }

    pub fn without_node(&self, node: &MNode) -> Result<Self> {
        if !self.removable_nodes().contains(node) {
            return Err(Error::Domain(format!("{node} is not removable from {self}")));
        }
        let mut comps = self.comps.clone();
        comps[node.k - 1] = comps[node.k - 1].with_removed(node.x);
        Ok(MPartition { comps })
    }

    /// Ordinary hook length of `node` inside its own component.
    pub fn hook_length(&self, node: &MNode) -> Result<usize> {
        if !self.contains(node) {
            return Err(Error::Domain(format!("{node} is not a node of {self}")));
        }
        Ok(self.component(node.k).hook(node.x, node.y).unwrap())
    }

    /// Generalized hook length `h^(j)`: length of row `x` in component `j`
    /// plus the length of column `y` in the node's own component, minus
    /// `x + y - 1`. May be zero or negative when `j != k`.
    pub fn generalized_hook_length(&self, node: &MNode, j: usize) -> Result<i64> {
        if !self.contains(node) {
            return Err(Error::Domain(format!("{node} is not a node of {self}")));
        }
        if j == 0 || j > self.m() {
            return Err(Error::Domain(format!("component index {j} out of range 1..={}", self.m())));
        }
        let row = self.component(j).row_len(node.x) as i64;
        let col = self.component(node.k).col_len(node.y) as i64;
        Ok(row + col - node.x as i64 - node.y as i64 + 1)
    }
}

impl TryFrom<Vec<Partition>> for MPartition {
    type Error = Error;
    fn try_from(comps: Vec<Partition>) -> Result<Self> {
        MPartition::new(comps)
    }
}

impl From<MPartition> for Vec<Partition> {
    fn from(p: MPartition) -> Vec<Partition> {
        p.comps
    }
}

impl fmt::Display for MPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// Compositions of `n` into `m` non-negative parts, first part largest first.
fn size_vectors(m: usize, n: usize) -> Vec<Vec<usize>> {
    if m == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in size_vectors(m - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All m-partitions of size `n`.
///
/// Order: component sizes in decreasing lexicographic order, then, within a
/// size vector, the components' partitions in decreasing lexicographic order
/// (first component varying slowest).
pub fn enumerate_mpartitions(m: usize, n: usize) -> Vec<MPartition> {
    assert!(m >= 1);
    let mut out = Vec::new();
    for sizes in size_vectors(m, n) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &s in &sizes {
            let choices = partitions_of(s);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |p| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|comps| MPartition { comps }));
    }
    out
}
