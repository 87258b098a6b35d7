use super::sparse::{SparseMat, SparseVec};

/// A connected block of the row/column incidence graph, in local coordinates.
pub(crate) struct Block {
    /// Global column indices, increasing; local column `i` is `cols[i]`.
    pub cols: Vec<usize>,
    /// Rows with local column indices.
    pub rows: Vec<SparseVec>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Splits `m` into independent blocks. Empty columns become blocks without rows,
/// zero rows are dropped. Blocks are ordered by their smallest column.
pub(crate) fn blocks(m: &SparseMat) -> Vec<Block> {
    let mut parent: Vec<usize> = (0..m.cols()).collect();
    for row in m.row_data() {
        if let Some((first, _)) = row.first() {
            let mut a = find(&mut parent, *first);
            for (c, _) in &row[1..] {
                let b = find(&mut parent, *c);
                if a != b {
                    // roots stay minimal
                    let (lo, hi) = (a.min(b), a.max(b));
                    parent[hi] = lo;
                    a = lo;
                }
            }
        }
    }
    let mut block_of = vec![usize::MAX; m.cols()];
    let mut local = vec![0usize; m.cols()];
    let mut out: Vec<Block> = Vec::new();
    for c in 0..m.cols() {
        let root = find(&mut parent, c);
        if block_of[root] == usize::MAX {
            block_of[root] = out.len();
            out.push(Block { cols: Vec::new(), rows: Vec::new() });
        }
        let b = block_of[root];
        block_of[c] = b;
        local[c] = out[b].cols.len();
        out[b].cols.push(c);
    }
    for row in m.row_data() {
        if let Some((first, _)) = row.first() {
            let b = block_of[*first];
            out[b].rows.push(row.iter().map(|(c, v)| (local[*c], v.clone())).collect());
        }
    }
    out
}
