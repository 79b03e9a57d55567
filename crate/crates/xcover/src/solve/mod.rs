//! Algorithm X search over an [`Instance`] with two interchangeable
//! engines.
//!
//! Both engines enumerate the same solutions in the same order:
//!
//! * the column to branch on is the uncovered primary column with the
//!   fewest remaining rows, ties broken by smallest column ordinal;
//! * rows intersecting that column are tried in ascending row id;
//! * a solution is emitted as soon as every primary column is covered.
//!
//! They differ only in bookkeeping. The naive engine removes whole rows
//! from per-column node lists and counts one update per removed node, as
//! in the original formulation; the dancing-links engine unlinks nodes
//! from circular lists and counts one update per unlink. Update totals
//! are therefore comparable within one engine, never across engines.

mod naive;

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use crate::dlx::NodeArena;
use crate::model::{ColumnKind, Instance, RowId};

/// Which search engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    /// Node-list engine: removes and restores whole rows.
    Naive,
    /// Dancing-links engine over a four-way linked node arena.
    Dlx,
}

impl EngineKind {
    pub const ALL: [EngineKind; 2] = [EngineKind::Naive, EngineKind::Dlx];

    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Naive => "naive",
            EngineKind::Dlx => "dlx",
        }
    }
}

impl std::str::FromStr for EngineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<EngineKind, String> {
        match s {
            "naive" => Ok(EngineKind::Naive),
            "dlx" => Ok(EngineKind::Dlx),
            other => Err(format!("unknown engine `{other}` (expected `naive` or `dlx`)")),
        }
    }
}

/// Column selection rule. [`ColumnPolicy::MinSize`] is the default; the
/// alternative exists to check that solution counts do not depend on the
/// branching column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColumnPolicy {
    /// Uncovered primary column with the fewest rows, smallest ordinal on
    /// ties.
    #[default]
    MinSize,
    /// Uncovered primary column with the smallest ordinal.
    FirstUncovered,
}

/// Optional bounds on a search. The search halts as soon as any limit is
/// reached and reports which one in [`SearchStats::halted_by`].
#[derive(Debug, Clone, Default)]
pub struct SearchLimits {
    pub max_solutions: Option<u64>,
    pub max_updates: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl SearchLimits {
    pub fn solutions(n: u64) -> SearchLimits {
        SearchLimits { max_solutions: Some(n), ..SearchLimits::default() }
    }
}

/// Why a search stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HaltReason {
    /// The whole search tree was explored.
    Exhausted,
    SolutionLimit,
    UpdateLimit,
    TimeLimit,
}

impl HaltReason {
    pub fn name(self) -> &'static str {
        match self {
            HaltReason::Exhausted => "exhausted",
            HaltReason::SolutionLimit => "solution_limit",
            HaltReason::UpdateLimit => "update_limit",
            HaltReason::TimeLimit => "time_limit",
        }
    }
}

/// Counters collected during one search.
///
/// Everything except `wall_time` is deterministic for a given instance,
/// engine and limits.
#[derive(Debug, Clone)]
pub struct SearchStats {
    /// Updates attributed to each search level; index is the level.
    pub updates_per_level: Vec<u64>,
    pub total_updates: u64,
    pub solutions_found: u64,
    /// Deepest number of simultaneously selected rows.
    pub max_depth: usize,
    pub wall_time: Duration,
    pub halted_by: HaltReason,
}

impl SearchStats {
    fn new() -> SearchStats {
        SearchStats {
            updates_per_level: Vec::new(),
            total_updates: 0,
            solutions_found: 0,
            max_depth: 0,
            wall_time: Duration::ZERO,
            halted_by: HaltReason::Exhausted,
        }
    }

    pub(crate) fn add_updates(&mut self, level: usize, count: u64) {
        if self.updates_per_level.len() <= level {
            self.updates_per_level.resize(level + 1, 0);
        }
        self.updates_per_level[level] += count;
        self.total_updates += count;
    }

    /// Updates per wall-clock second; zero when nothing was measured.
    pub fn updates_per_second(&self) -> f64 {
        let secs = self.wall_time.as_secs_f64();
        if secs > 0.0 {
            self.total_updates as f64 / secs
        } else {
            0.0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("row id {0} is out of range")]
    UnknownRowId(u32),
    #[error("brute force enumeration supports at most {limit} rows, instance has {actual}")]
    TooLarge { limit: usize, actual: usize },
}

pub(crate) struct Limits {
    max_solutions: u64,
    max_updates: u64,
    deadline: Option<Instant>,
}

impl Limits {
    fn new(limits: &SearchLimits, start: Instant) -> Limits {
        Limits {
            max_solutions: limits.max_solutions.unwrap_or(u64::MAX),
            max_updates: limits.max_updates.unwrap_or(u64::MAX),
            deadline: limits.time_budget.map(|budget| start + budget),
        }
    }

    /// Checked once per search node, after the node's updates are counted.
    pub(crate) fn check_node(&self, stats: &SearchStats) -> ControlFlow<HaltReason> {
        if stats.total_updates >= self.max_updates {
            return ControlFlow::Break(HaltReason::UpdateLimit);
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return ControlFlow::Break(HaltReason::TimeLimit);
            }
        }
        ControlFlow::Continue(())
    }

    pub(crate) fn check_solution_count(&self, stats: &SearchStats) -> ControlFlow<HaltReason> {
        if stats.solutions_found >= self.max_solutions {
            return ControlFlow::Break(HaltReason::SolutionLimit);
        }
        ControlFlow::Continue(())
    }
}

/// Runs Algorithm X over `instance`, calling `emit` once per exact cover
/// in canonical order.
///
/// The callback receives the selected row ids in selection order (level 0
/// first). The instance is never mutated; engine state is private to the
/// call, so any number of searches may run concurrently over one instance.
pub fn solve<F>(
    instance: &Instance,
    engine: EngineKind,
    limits: &SearchLimits,
    emit: F,
) -> SearchStats
where
    F: FnMut(&[RowId]),
{
    solve_with_policy(instance, engine, limits, ColumnPolicy::MinSize, emit)
}

/// [`solve`] with an explicit column selection rule.
pub fn solve_with_policy<F>(
    instance: &Instance,
    engine: EngineKind,
    limits: &SearchLimits,
    policy: ColumnPolicy,
    mut emit: F,
) -> SearchStats
where
    F: FnMut(&[RowId]),
{
    let start = Instant::now();
    let bounds = Limits::new(limits, start);
    let mut stats = SearchStats::new();
    let halted = match engine {
        EngineKind::Naive => naive::search(instance, policy, &bounds, &mut stats, &mut emit),
        EngineKind::Dlx => dlx_search(instance, policy, &bounds, &mut stats, &mut emit),
    };
    if let ControlFlow::Break(reason) = halted {
        stats.halted_by = reason;
    }
    stats.wall_time = start.elapsed();
    debug_assert_eq!(
        stats.total_updates,
        stats.updates_per_level.iter().sum::<u64>()
    );
    stats
}

fn dlx_search<F>(
    instance: &Instance,
    policy: ColumnPolicy,
    bounds: &Limits,
    stats: &mut SearchStats,
    emit: &mut F,
) -> ControlFlow<HaltReason>
where
    F: FnMut(&[RowId]),
{
    let mut arena = NodeArena::build(instance);
    #[cfg(debug_assertions)]
    let pristine = arena.clone();
    let mut selection = Vec::new();
    let flow = dlx_node(&mut arena, policy, bounds, stats, &mut selection, emit);
    #[cfg(debug_assertions)]
    {
        arena.assert_consistent();
        debug_assert!(arena == pristine, "dlx arena not restored after search");
    }
    flow
}

fn dlx_node<F>(
    arena: &mut NodeArena,
    policy: ColumnPolicy,
    bounds: &Limits,
    stats: &mut SearchStats,
    selection: &mut Vec<RowId>,
    emit: &mut F,
) -> ControlFlow<HaltReason>
where
    F: FnMut(&[RowId]),
{
    let level = selection.len();
    stats.max_depth = stats.max_depth.max(level);
    let col = match policy {
        ColumnPolicy::MinSize => arena.choose_column(),
        ColumnPolicy::FirstUncovered => arena.first_uncovered_column(),
    };
    let Some(col) = col else {
        stats.solutions_found += 1;
        emit(selection);
        return bounds.check_solution_count(stats);
    };
    stats.add_updates(level, arena.cover(col));
    let mut flow = bounds.check_node(stats);
    let header = arena.header(col);
    let mut node = arena.down(header);
    while node != header && flow.is_continue() {
        selection.push(arena.row_of(node));
        stats.add_updates(level, arena.cover_row_siblings(node));
        flow = bounds.check_node(stats);
        if flow.is_continue() {
            flow = dlx_node(arena, policy, bounds, stats, selection, emit);
        }
        arena.uncover_row_siblings(node);
        selection.pop();
        node = arena.down(node);
    }
    arena.uncover(col);
    flow
}

/// True iff the selected rows are pairwise disjoint on every column, cover
/// every primary column, and each touch at least one primary column — i.e.
/// exactly the solutions Algorithm X emits.
pub fn check_solution(instance: &Instance, rows: &[RowId]) -> Result<bool, SolveError> {
    for &id in rows {
        if !instance.contains_row(id) {
            return Err(SolveError::UnknownRowId(id.get()));
        }
    }
    let mut used = vec![false; instance.column_count()];
    let mut primaries_covered = 0usize;
    for &id in rows {
        let mut touches_primary = false;
        for &c in instance.row_columns(id) {
            if used[c as usize] {
                return Ok(false);
            }
            used[c as usize] = true;
            if instance.column_kind(c) == ColumnKind::Primary {
                touches_primary = true;
                primaries_covered += 1;
            }
        }
        if !touches_primary {
            return Ok(false);
        }
    }
    let primary_total = instance
        .columns()
        .filter(|&(_, kind)| kind == ColumnKind::Primary)
        .count();
    Ok(primaries_covered == primary_total)
}

/// Enumerates every subset of rows and returns those accepted by
/// [`check_solution`]. Reference oracle for engine tests; limited to 24
/// rows.
pub fn brute_force_solutions(
    instance: &Instance,
) -> Result<BTreeSet<BTreeSet<RowId>>, SolveError> {
    const LIMIT: usize = 24;
    let rows = instance.row_count();
    if rows > LIMIT {
        return Err(SolveError::TooLarge { limit: LIMIT, actual: rows });
    }
    // Column sets as bit masks so a subset dies on its first collision.
    let words = instance.column_count().div_ceil(64).max(1);
    let mut row_mask = vec![vec![0u64; words]; rows];
    let mut primary_mask = vec![0u64; words];
    for (label, kind) in instance.columns() {
        if kind == ColumnKind::Primary {
            let ord = instance.column_ordinal(label).unwrap() as usize;
            primary_mask[ord / 64] |= 1 << (ord % 64);
        }
    }
    let mut bad_rows = 0u32; // rows touching no primary column can never be selected
    for (i, id) in instance.row_ids().enumerate() {
        for &c in instance.row_columns(id) {
            row_mask[i][c as usize / 64] |= 1 << (c % 64);
        }
        if row_mask[i]
            .iter()
            .zip(&primary_mask)
            .all(|(m, p)| m & p == 0)
        {
            bad_rows |= 1 << i;
        }
    }
    let mut found = BTreeSet::new();
    let mut used = vec![0u64; words];
    'subset: for subset in 0u32..(1u32 << rows) {
        if subset & bad_rows != 0 {
            continue;
        }
        used.fill(0);
        for (i, mask) in row_mask.iter().enumerate() {
            if subset & (1 << i) == 0 {
                continue;
            }
            for (u, m) in used.iter_mut().zip(mask) {
                if *u & m != 0 {
                    continue 'subset;
                }
                *u |= m;
            }
        }
        if used
            .iter()
            .zip(&primary_mask)
            .all(|(u, p)| u & p == *p)
        {
            let set: BTreeSet<RowId> = (0..rows)
                .filter(|i| subset & (1 << i) != 0)
                .map(RowId::from_index)
                .collect();
            found.insert(set);
        }
    }
    Ok(found)
}

/// Number of solutions under unbounded limits.
pub fn count_solutions(instance: &Instance, engine: EngineKind) -> u64 {
    solve(instance, engine, &SearchLimits::default(), |_| {}).solutions_found
}
