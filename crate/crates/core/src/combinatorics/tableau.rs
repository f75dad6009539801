use std::fmt;

use super::mpartition::{enumerate_mpartitions, MNode, MPartition};
use crate::error::{Error, Result};

/// A standard m-tableau: entry `i` (1-based) sits at `placement[i - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardMTableau {
    shape: MPartition,
    placement: Vec<MNode>,
}

impl StandardMTableau {
    /// The unique tableau of size zero.
    pub fn empty(m: usize) -> Self {
        StandardMTableau { shape: MPartition::empty(m), placement: Vec::new() }
    }

    /// Builds a tableau from its placement sequence, checking standardness.
    pub fn from_placement(m: usize, placement: Vec<MNode>) -> Result<Self> {
        let mut t = Self::empty(m);
        for node in placement {
            t = t.extend(&node).map_err(|_| {
                Error::Parse(format!("entry {} at {node} breaks standardness", t.size() + 1))
            })?;
        }
        Ok(t)
    }

    /// Builds from an entry grid: one list of rows per component,
    /// e.g. `[[[1,3]],[[2]],[[4]]]`.
    pub fn from_grid(grid: &[Vec<Vec<usize>>]) -> Result<Self> {
        let m = grid.len();
        if m == 0 {
            return Err(Error::Parse("tableau needs at least one component".into()));
        }
        let total: usize = grid.iter().flatten().map(Vec::len).sum();
        let mut placement: Vec<Option<MNode>> = vec![None; total];
        for (k, comp) in grid.iter().enumerate() {
            for (x, row) in comp.iter().enumerate() {
                if row.is_empty() {
                    return Err(Error::Parse("empty row in tableau".into()));
                }
                for (y, &entry) in row.iter().enumerate() {
                    if entry == 0 || entry > total || placement[entry - 1].is_some() {
                        return Err(Error::Parse(format!("entries must be 1..{total}, each once")));
                    }
                    placement[entry - 1] = Some(MNode::new(k + 1, x + 1, y + 1));
                }
            }
        }
        let placement: Vec<MNode> = placement.into_iter().map(Option::unwrap).collect();
        let t = Self::from_placement(m, placement)?;
        if t.to_grid() != grid {
            return Err(Error::Parse("rows of the grid do not form a Young diagram".into()));
        }
        Ok(t)
    }

    /// Parses the text encoding `[[[1,3]],[[2]],[[4]]]`.
    pub fn parse(s: &str) -> Result<Self> {
        let grid: Vec<Vec<Vec<usize>>> =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("tableau {s:?}: {e}")))?;
        Self::from_grid(&grid)
    }

    pub fn to_grid(&self) -> Vec<Vec<Vec<usize>>> {
        let mut grid: Vec<Vec<Vec<usize>>> = self
            .shape
            .components()
            .iter()
            .map(|p| p.parts().iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (i, node) in self.placement.iter().enumerate() {
            grid[node.k - 1][node.x - 1][node.y - 1] = i + 1;
        }
        grid
    }

    pub fn encode(&self) -> String {
        serde_json::to_string(&self.to_grid()).expect("serializable")
    }

    pub fn shape(&self) -> &MPartition {
        &self.shape
    }

    pub fn m(&self) -> usize {
        self.shape.m()
    }

    pub fn size(&self) -> usize {
        self.placement.len()
    }

    /// The node holding entry `i` (1-based).
    pub fn node(&self, i: usize) -> &MNode {
        &self.placement[i - 1]
    }

    pub fn placement(&self) -> &[MNode] {
        &self.placement
    }

    /// The node carrying the largest entry, if any.
    pub fn last_node(&self) -> Option<&MNode> {
        self.placement.last()
    }

    /// The tableau formed by entries `1..=k`.
    pub fn prefix(&self, k: usize) -> StandardMTableau {
        assert!(k <= self.size());
        let mut shape = MPartition::empty(self.m());
        for node in &self.placement[..k] {
            shape = shape.with_node(node).expect("prefix of a standard tableau");
        }
        StandardMTableau { shape, placement: self.placement[..k].to_vec() }
    }

    /// The tableau with the largest entry removed.
    pub fn restrict(&self) -> Option<StandardMTableau> {
        (self.size() > 0).then(|| self.prefix(self.size() - 1))
    }

    /// Places entry `size + 1` at an addable node.
    pub fn extend(&self, node: &MNode) -> Result<StandardMTableau> {
        let shape = self.shape.with_node(node)?;
        let mut placement = self.placement.clone();
        placement.push(*node);
        Ok(StandardMTableau { shape, placement })
    }

    /// All one-entry extensions, in the order of the shape's addable nodes.
    pub fn extensions(&self) -> Vec<StandardMTableau> {
        self.shape.addable_nodes().iter().map(|node| self.extend(node).unwrap()).collect()
    }
}

impl fmt::Display for StandardMTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// All standard tableaux of shape `shape`.
///
/// Generated recursively by choosing the removable node that carries the
/// largest entry, in the shape's removable-node order; within one choice the
/// tableaux of the smaller shape appear in their own canonical order.
pub fn enumerate_standard_tableaux(shape: &MPartition) -> Vec<StandardMTableau> {
    if shape.size() == 0 {
        return vec![StandardMTableau::empty(shape.m())];
    }
    let mut out = Vec::new();
    for node in shape.removable_nodes() {
        let smaller = shape.without_node(&node).unwrap();
        for t in enumerate_standard_tableaux(&smaller) {
            out.push(t.extend(&node).unwrap());
        }
    }
    out
}

/// All standard m-tableaux of size `n`, shapes in canonical order.
pub fn enumerate_tableaux_of_size(m: usize, n: usize) -> Vec<StandardMTableau> {
    enumerate_mpartitions(m, n).iter().flat_map(enumerate_standard_tableaux).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_round_trip() {
        let t = StandardMTableau::parse("[[[1,3]],[[2]],[[4]]]").unwrap();
        assert_eq!(t.encode(), "[[[1,3]],[[2]],[[4]]]");
        assert_eq!(t.shape().encode(), "[[2],[1],[1]]");
        assert_eq!(*t.node(3), MNode::new(1, 1, 2));
        let e = StandardMTableau::parse("[[],[]]").unwrap();
        assert_eq!(e.size(), 0);
        assert_eq!(e.encode(), "[[],[]]");
    }

    #[test]
    fn rejects_non_standard() {
        assert!(StandardMTableau::parse("[[[2,1]]]").is_err());
        assert!(StandardMTableau::parse("[[[1,2],[3,4,5]]]").is_err());
        assert!(StandardMTableau::parse("[[[1,1]]]").is_err());
        assert!(StandardMTableau::parse("[[[1,3]]]").is_err());
        assert!(StandardMTableau::parse("[[[1],[]]]").is_err());
        assert!(StandardMTableau::parse("[[[1,2],[4]],[[3]]]").is_ok());
    }

    #[test]
    fn small_counts() {
        let two_one = MPartition::parse("[[2],[1]]").unwrap();
        assert_eq!(enumerate_standard_tableaux(&two_one).len(), 3);
        let hook = MPartition::parse("[[2,1]]").unwrap();
        assert_eq!(enumerate_standard_tableaux(&hook).len(), 2);
        assert_eq!(enumerate_standard_tableaux(&MPartition::empty(2)).len(), 1);
    }

    #[test]
    fn prefixes_and_extensions() {
        let t = StandardMTableau::parse("[[[1,3]],[[2]],[[4]]]").unwrap();
        assert_eq!(t.prefix(2).encode(), "[[[1]],[[2]],[]]");
        assert_eq!(t.restrict().unwrap().encode(), "[[[1,3]],[[2]],[]]");
        let exts = t.restrict().unwrap().extensions();
        assert_eq!(exts.len(), 5);
        assert!(exts.contains(&t));
    }
}
