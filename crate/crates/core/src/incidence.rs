//! Signed vertex-edge incidence matrix of a directed loopless graph.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::Id;
use serde::Serialize;

/// Rows are vertices in ascending id order, columns are edges in ascending
/// id order; the entry is -1 at the tail, +1 at the head, 0 elsewhere.
/// Every column therefore sums to zero, which is why loops are refused:
/// a loop would demand -1 and +1 in the same cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceMatrix {
    pub rows: Vec<Id>,
    pub cols: Vec<Id>,
    pub entries: Vec<Vec<i8>>,
}

pub fn incidence_matrix(g: &Graph) -> Result<IncidenceMatrix> {
    if !g.directed() {
        return Err(Error::invalid(
            "incidence matrix is defined for directed graphs",
        ));
    }
    if let Some((id, _)) = g.edges().find(|(_, (t, h))| t == h) {
        return Err(Error::unsupported(format!(
            "loop edge {id} has no incidence column"
        )));
    }
    let rows = g.vertex_vec();
    let cols = g.edge_ids();
    let row_of: std::collections::BTreeMap<&Id, usize> =
        rows.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut entries = vec![vec![0i8; cols.len()]; rows.len()];
    for (j, e) in cols.iter().enumerate() {
        let (t, h) = g.endpoints(e).expect("column edge exists");
        entries[row_of[t]][j] = -1;
        entries[row_of[h]][j] = 1;
    }
    Ok(IncidenceMatrix {
        rows,
        cols,
        entries,
    })
}

impl IncidenceMatrix {
    pub fn entry(&self, v: &Id, e: &Id) -> Option<i8> {
        let i = self.rows.iter().position(|r| r == v)?;
        let j = self.cols.iter().position(|c| c == e)?;
        Some(self.entries[i][j])
    }

    pub fn column_sum(&self, j: usize) -> i64 {
        self.entries.iter().map(|row| row[j] as i64).sum()
    }

    /// Count of nonzero entries; always twice the number of edges.
    pub fn nonzeros(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter(|&&x| x != 0)
            .count()
    }
}
