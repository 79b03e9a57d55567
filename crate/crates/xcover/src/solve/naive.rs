//! The node-list engine.
//!
//! Selecting a row removes the row's own nodes, then for each of its
//! columns every other intersecting row, counting one update per removed
//! node. Removal marks rows dead instead of splicing lists, with an
//! order-preserving undo log, so restoration reproduces the original
//! state exactly and row iteration order never depends on search history.

use std::ops::ControlFlow;

use crate::model::{ColumnKind, Instance, RowId};
use crate::solve::{ColumnPolicy, HaltReason, Limits, SearchStats};

struct Engine<'a> {
    instance: &'a Instance,
    /// 0-based row indices per column, ascending; fixed for the search.
    col_rows: Vec<Vec<u32>>,
    row_alive: Vec<bool>,
    covered: Vec<bool>,
    /// Live rows per column.
    sizes: Vec<u32>,
    /// Primary column ordinals, ascending.
    primaries: Vec<u32>,
    /// Killed row indices in kill order; frames are index ranges.
    undo: Vec<u32>,
    selection: Vec<RowId>,
}

impl<'a> Engine<'a> {
    fn build(instance: &'a Instance) -> Engine<'a> {
        let columns = instance.column_count();
        let mut col_rows = vec![Vec::new(); columns];
        let mut sizes = vec![0u32; columns];
        for (i, id) in instance.row_ids().enumerate() {
            for &c in instance.row_columns(id) {
                col_rows[c as usize].push(i as u32);
                sizes[c as usize] += 1;
            }
        }
        let primaries = (0..columns as u32)
            .filter(|&c| instance.column_kind(c) == ColumnKind::Primary)
            .collect();
        Engine {
            instance,
            col_rows,
            row_alive: vec![true; instance.row_count()],
            covered: vec![false; columns],
            sizes,
            primaries,
            undo: Vec::new(),
            selection: Vec::new(),
        }
    }

    fn row_columns(&self, row: u32) -> &'a [u32] {
        self.instance.row_columns(RowId::from_index(row as usize))
    }

    fn choose(&self, policy: ColumnPolicy) -> Option<u32> {
        match policy {
            ColumnPolicy::MinSize => {
                let mut best = None;
                let mut best_size = u32::MAX;
                for &c in &self.primaries {
                    if !self.covered[c as usize] && self.sizes[c as usize] < best_size {
                        best = Some(c);
                        best_size = self.sizes[c as usize];
                    }
                }
                best
            }
            ColumnPolicy::FirstUncovered => {
                self.primaries.iter().copied().find(|&c| !self.covered[c as usize])
            }
        }
    }

    /// Removes one row; every node of the row counts as one update.
    fn kill(&mut self, row: u32) -> u64 {
        self.row_alive[row as usize] = false;
        let cols = self.row_columns(row);
        for &c in cols {
            self.sizes[c as usize] -= 1;
        }
        self.undo.push(row);
        cols.len() as u64
    }

    /// Selects `row`: removes it, covers its columns, removes every other
    /// row intersecting them. Returns (undo frame, update count).
    fn select(&mut self, row: u32) -> (usize, u64) {
        let frame = self.undo.len();
        let mut updates = self.kill(row);
        let cols = self.row_columns(row);
        for &c in cols {
            debug_assert!(!self.covered[c as usize]);
            self.covered[c as usize] = true;
            for i in 0..self.col_rows[c as usize].len() {
                let other = self.col_rows[c as usize][i];
                if self.row_alive[other as usize] {
                    updates += self.kill(other);
                }
            }
        }
        self.selection.push(RowId::from_index(row as usize));
        (frame, updates)
    }

    fn unselect(&mut self, row: u32, frame: usize) {
        self.selection.pop();
        for &c in self.row_columns(row).iter().rev() {
            self.covered[c as usize] = false;
        }
        while self.undo.len() > frame {
            let revived = self.undo.pop().unwrap();
            self.row_alive[revived as usize] = true;
            for &c in self.row_columns(revived) {
                self.sizes[c as usize] += 1;
            }
        }
    }

    fn node<F>(
        &mut self,
        policy: ColumnPolicy,
        bounds: &Limits,
        stats: &mut SearchStats,
        emit: &mut F,
    ) -> ControlFlow<HaltReason>
    where
        F: FnMut(&[RowId]),
    {
        let level = self.selection.len();
        stats.max_depth = stats.max_depth.max(level);
        let Some(col) = self.choose(policy) else {
            stats.solutions_found += 1;
            emit(&self.selection);
            return bounds.check_solution_count(stats);
        };
        let candidates: Vec<u32> = self.col_rows[col as usize]
            .iter()
            .copied()
            .filter(|&r| self.row_alive[r as usize])
            .collect();
        for row in candidates {
            let (frame, updates) = self.select(row);
            stats.add_updates(level, updates);
            let mut flow = bounds.check_node(stats);
            if flow.is_continue() {
                flow = self.node(policy, bounds, stats, emit);
            }
            self.unselect(row, frame);
            flow?;
        }
        ControlFlow::Continue(())
    }

    #[cfg(debug_assertions)]
    fn is_pristine(&self) -> bool {
        let fresh = Engine::build(self.instance);
        self.row_alive == fresh.row_alive
            && self.covered == fresh.covered
            && self.sizes == fresh.sizes
            && self.undo.is_empty()
            && self.selection.is_empty()
    }
}

pub(crate) fn search<F>(
    instance: &Instance,
    policy: ColumnPolicy,
    bounds: &Limits,
    stats: &mut SearchStats,
    emit: &mut F,
) -> ControlFlow<HaltReason>
where
    F: FnMut(&[RowId]),
{
    let mut engine = Engine::build(instance);
    let flow = engine.node(policy, bounds, stats, emit);
    #[cfg(debug_assertions)]
    debug_assert!(engine.is_pristine(), "naive engine not restored after search");
    flow
}
