//! The dancing-links node arena and its cover/uncover primitives.
//!
//! Nodes live in one dense vector addressed by `u32` index:
//!
//! ```text
//! index 0        root of the header ring
//! index 1..=C    column headers, one per column ordinal
//! index C+1..    row nodes, appended row by row
//! ```
//!
//! Every node sits on two circular doubly linked lists: left/right along
//! its row and up/down along its column. Unlinking a node leaves the
//! node's own pointers intact, so relinking in exact LIFO order restores
//! the structure bit for bit. The header ring holds exactly the uncovered
//! primary columns; secondary column headers are allocated self-linked and
//! never enter the ring, which is all that "at most once" requires.

use crate::model::{ColumnKind, Instance, RowId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Node {
    left: u32,
    right: u32,
    up: u32,
    down: u32,
    /// Column ordinal; for headers, the header's own column.
    col: u32,
    /// 1-based row number; 0 for the root and headers.
    row: u32,
}

const ROOT: u32 = 0;

/// Four-way linked representation of one search's mutable state.
///
/// An arena belongs to exactly one search; build a fresh one per solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeArena {
    nodes: Vec<Node>,
    /// Live nodes per column, indexed by column ordinal.
    sizes: Vec<u32>,
    covered: Vec<bool>,
    cover_stack: Vec<u32>,
    columns: u32,
}

impl NodeArena {
    pub fn build(instance: &Instance) -> NodeArena {
        let columns = instance.column_count() as u32;
        let capacity = 1 + columns as usize + instance.node_count() as usize;
        let mut nodes = Vec::with_capacity(capacity);
        nodes.push(Node { left: ROOT, right: ROOT, up: ROOT, down: ROOT, col: 0, row: 0 });
        for ord in 0..columns {
            let h = ord + 1;
            nodes.push(Node { left: h, right: h, up: h, down: h, col: ord, row: 0 });
            if instance.column_kind(ord) == ColumnKind::Primary {
                // Append to the ring so it stays in ordinal order.
                let last = nodes[ROOT as usize].left;
                nodes[h as usize].left = last;
                nodes[h as usize].right = ROOT;
                nodes[last as usize].right = h;
                nodes[ROOT as usize].left = h;
            }
        }
        let mut arena = NodeArena {
            nodes,
            sizes: vec![0; columns as usize],
            covered: vec![false; columns as usize],
            cover_stack: Vec::new(),
            columns,
        };
        for id in instance.row_ids() {
            let mut first = 0u32;
            for &ord in instance.row_columns(id) {
                let idx = arena.nodes.len() as u32;
                let header = ord + 1;
                let above = arena.nodes[header as usize].up;
                arena.nodes.push(Node {
                    left: idx,
                    right: idx,
                    up: above,
                    down: header,
                    col: ord,
                    row: id.get(),
                });
                arena.nodes[above as usize].down = idx;
                arena.nodes[header as usize].up = idx;
                arena.sizes[ord as usize] += 1;
                if first == 0 {
                    first = idx;
                } else {
                    let last = arena.nodes[first as usize].left;
                    arena.nodes[idx as usize].left = last;
                    arena.nodes[idx as usize].right = first;
                    arena.nodes[last as usize].right = idx;
                    arena.nodes[first as usize].left = idx;
                }
            }
        }
        arena
    }

    /// Covers a column: unlinks its header from the ring and every row in
    /// the column from all other columns' vertical lists. Returns the
    /// number of node unlinks performed (the update metric).
    pub fn cover(&mut self, col: u32) -> u64 {
        debug_assert!(!self.covered[col as usize], "cover of covered column {col}");
        self.covered[col as usize] = true;
        self.cover_stack.push(col);
        let header = col + 1;
        let (left, right) = {
            let h = &self.nodes[header as usize];
            (h.left, h.right)
        };
        self.nodes[left as usize].right = right;
        self.nodes[right as usize].left = left;
        let mut updates = 0;
        let mut i = self.nodes[header as usize].down;
        while i != header {
            let mut j = self.nodes[i as usize].right;
            while j != i {
                let (up, down, c) = {
                    let n = &self.nodes[j as usize];
                    (n.up, n.down, n.col)
                };
                self.nodes[up as usize].down = down;
                self.nodes[down as usize].up = up;
                self.sizes[c as usize] -= 1;
                updates += 1;
                j = self.nodes[j as usize].right;
            }
            i = self.nodes[i as usize].down;
        }
        updates
    }

    /// Exact inverse of [`cover`](NodeArena::cover). Must be called in LIFO
    /// order with respect to covers; violations abort under debug
    /// assertions.
    pub fn uncover(&mut self, col: u32) {
        debug_assert_eq!(
            self.cover_stack.last().copied(),
            Some(col),
            "uncover of column {col} out of LIFO order"
        );
        self.cover_stack.pop();
        self.covered[col as usize] = false;
        let header = col + 1;
        let mut i = self.nodes[header as usize].up;
        while i != header {
            let mut j = self.nodes[i as usize].left;
            while j != i {
                let (up, down, c) = {
                    let n = &self.nodes[j as usize];
                    (n.up, n.down, n.col)
                };
                self.sizes[c as usize] += 1;
                self.nodes[up as usize].down = j;
                self.nodes[down as usize].up = j;
                j = self.nodes[j as usize].left;
            }
            i = self.nodes[i as usize].up;
        }
        let (left, right) = {
            let h = &self.nodes[header as usize];
            (h.left, h.right)
        };
        self.nodes[left as usize].right = header;
        self.nodes[right as usize].left = header;
    }

    /// Uncovered primary column with the fewest live rows; ties go to the
    /// smallest ordinal. `None` when every primary column is covered.
    pub fn choose_column(&self) -> Option<u32> {
        let mut best = None;
        let mut best_size = u32::MAX;
        let mut h = self.nodes[ROOT as usize].right;
        while h != ROOT {
            let col = h - 1;
            let size = self.sizes[col as usize];
            if size < best_size {
                best = Some(col);
                best_size = size;
            }
            h = self.nodes[h as usize].right;
        }
        best
    }

    /// Uncovered primary column with the smallest ordinal, ignoring sizes.
    pub fn first_uncovered_column(&self) -> Option<u32> {
        let h = self.nodes[ROOT as usize].right;
        if h == ROOT {
            None
        } else {
            Some(h - 1)
        }
    }

    pub fn column_size(&self, col: u32) -> u32 {
        self.sizes[col as usize]
    }

    pub(crate) fn header(&self, col: u32) -> u32 {
        col + 1
    }

    pub(crate) fn down(&self, node: u32) -> u32 {
        self.nodes[node as usize].down
    }

    pub(crate) fn row_of(&self, node: u32) -> RowId {
        RowId::new(self.nodes[node as usize].row)
    }

    /// Covers the other columns of `node`'s row, left to right.
    pub(crate) fn cover_row_siblings(&mut self, node: u32) -> u64 {
        let mut updates = 0;
        let mut j = self.nodes[node as usize].right;
        while j != node {
            updates += self.cover(self.nodes[j as usize].col);
            j = self.nodes[j as usize].right;
        }
        updates
    }

    /// Uncovers the other columns of `node`'s row, right to left.
    pub(crate) fn uncover_row_siblings(&mut self, node: u32) {
        let mut j = self.nodes[node as usize].left;
        while j != node {
            self.uncover(self.nodes[j as usize].col);
            j = self.nodes[j as usize].left;
        }
    }

    /// Checks the every-list-circular invariant, the size counters, and the
    /// header ring membership in O(nodes). Intended for a fully restored
    /// arena; panics on the first violation.
    pub fn assert_consistent(&self) {
        for (idx, node) in self.nodes.iter().enumerate() {
            let idx = idx as u32;
            assert_eq!(self.nodes[node.left as usize].right, idx, "left/right broken at {idx}");
            assert_eq!(self.nodes[node.right as usize].left, idx, "right/left broken at {idx}");
            assert_eq!(self.nodes[node.up as usize].down, idx, "up/down broken at {idx}");
            assert_eq!(self.nodes[node.down as usize].up, idx, "down/up broken at {idx}");
        }
        let mut live = 0u64;
        for col in 0..self.columns {
            let header = col + 1;
            let mut count = 0;
            let mut i = self.nodes[header as usize].down;
            while i != header {
                assert_eq!(self.nodes[i as usize].col, col, "node {i} in wrong column list");
                count += 1;
                i = self.nodes[i as usize].down;
            }
            assert_eq!(self.sizes[col as usize], count, "size counter of column {col}");
            live += count as u64;
        }
        assert_eq!(live, self.nodes.len() as u64 - 1 - self.columns as u64);
        let mut h = self.nodes[ROOT as usize].right;
        while h != ROOT {
            let col = h - 1;
            assert!(!self.covered[col as usize], "covered column {col} still in ring");
            h = self.nodes[h as usize].right;
        }
        assert!(self.cover_stack.is_empty(), "cover stack not drained");
    }
}
