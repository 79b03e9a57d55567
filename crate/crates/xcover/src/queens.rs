//! N-queens as generalized cover.
//!
//! Ranks and files are primary columns (every rank and file holds exactly
//! one queen); the `2n−1` anti-diagonals and `2n−1` diagonals are
//! secondary columns, occupied at most once. One row per square carries
//! all four labels, so solutions are exactly the classical queen
//! placements.

use crate::model::{Instance, RowId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueensSpec {
    pub n: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueensError {
    #[error("malformed solution: {0}")]
    MalformedSolution(String),
}

pub fn build_instance(spec: &QueensSpec) -> Instance {
    let n = spec.n;
    assert!(n >= 1);
    let mut instance = Instance::new();
    let diagonals: Vec<String> = (1..=2 * n - 1)
        .map(|d| format!("A{d}"))
        .chain((1..=2 * n - 1).map(|d| format!("B{d}")))
        .collect();
    instance.declare_secondary(diagonals).expect("fresh labels");
    for i in 1..=n {
        for j in 1..=n {
            instance
                .add_row([
                    format!("R{i}"),
                    format!("F{j}"),
                    format!("A{}", i + j - 1),
                    format!("B{}", i + n - j),
                ])
                .expect("generated labels are valid");
        }
    }
    instance
}

/// Renders a solution as an n-line board of `Q` and `.`.
pub fn render_queens(
    spec: &QueensSpec,
    instance: &Instance,
    rows: &[RowId],
) -> Result<String, QueensError> {
    let n = spec.n;
    let bad = |msg: String| QueensError::MalformedSolution(msg);
    if rows.len() != n as usize {
        return Err(bad(format!("expected {n} queens, got {}", rows.len())));
    }
    let mut files = vec![0u32; n as usize]; // file per rank, 0 = unset
    for &id in rows {
        let labels: Vec<&str> = instance.row_labels(id).collect();
        let rank: Option<u32> = labels
            .iter()
            .find_map(|l| l.strip_prefix('R'))
            .and_then(|s| s.parse().ok());
        let file: Option<u32> = labels
            .iter()
            .find_map(|l| l.strip_prefix('F'))
            .and_then(|s| s.parse().ok());
        let (Some(rank), Some(file)) = (rank, file) else {
            return Err(bad(format!("row {id} lacks rank/file labels")));
        };
        if rank < 1 || rank > n || file < 1 || file > n {
            return Err(bad(format!("row {id} out of range")));
        }
        if files[rank as usize - 1] != 0 {
            return Err(bad(format!("rank {rank} holds two queens")));
        }
        files[rank as usize - 1] = file;
    }
    let mut out = String::new();
    for &file in &files {
        for j in 1..=n {
            out.push(if j == file { 'Q' } else { '.' });
        }
        out.push('\n');
    }
    Ok(out)
}
