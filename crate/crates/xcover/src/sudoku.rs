//! Sudoku as exact cover.
//!
//! An order-`k` Sudoku (`n = k²`) adds a box constraint family to the
//! Latin square encoding: `4n²` primary columns — cell, (row, number),
//! (column, number) and (box, number). Without a puzzle every cell emits
//! all `n` candidates; a given cell emits only its forced candidate, so
//! instances with givens stay plain exact cover files.

use crate::latin::{cell_label, parse_pair_label, LatinGrid};
use crate::model::{Instance, RowId};
use crate::solve::{solve, EngineKind, SearchLimits, SearchStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SudokuSpec {
    order: u32,
}

impl SudokuSpec {
    /// Order `k` of the puzzle; the side length is `n = k²`.
    pub fn new(order: u32) -> SudokuSpec {
        assert!(order >= 1);
        SudokuSpec { order }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn n(&self) -> u32 {
        self.order * self.order
    }

    /// 1-based box number of 1-based cell (i, j), row-major over boxes.
    pub fn box_of(&self, i: u32, j: u32) -> u32 {
        let k = self.order;
        ((i - 1) / k) * k + (j - 1) / k + 1
    }
}

/// An n×n grid of symbols `1..=n`, possibly with blanks (stored as 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuzzleGrid {
    n: u32,
    cells: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SudokuError {
    #[error("expected {expected} lines of {expected} tokens, got {actual}")]
    BadDimensions { expected: u32, actual: String },
    #[error("line {line}: bad token `{token}`")]
    BadToken { line: usize, token: String },
    #[error("givens conflict: {0} appears twice in {1}")]
    InconsistentGivens(u32, String),
    #[error("grid has blank cells")]
    IncompleteGrid,
    #[error("malformed solution: {0}")]
    MalformedSolution(String),
}

impl PuzzleGrid {
    /// Row-major values, 0 for blank. Panics on a size mismatch.
    pub fn new(n: u32, cells: Vec<u32>) -> PuzzleGrid {
        assert_eq!(cells.len(), (n * n) as usize);
        PuzzleGrid { n, cells }
    }

    pub fn blank(n: u32) -> PuzzleGrid {
        PuzzleGrid { n, cells: vec![0; (n * n) as usize] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Value at 1-based (row, column); 0 means blank.
    pub fn get(&self, i: u32, j: u32) -> u32 {
        self.cells[((i - 1) * self.n + (j - 1)) as usize]
    }

    pub fn set(&mut self, i: u32, j: u32, v: u32) {
        self.cells[((i - 1) * self.n + (j - 1)) as usize] = v;
    }

    pub fn given_count(&self) -> usize {
        self.cells.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|&v| v != 0)
    }

    /// True iff `other` agrees with every given of `self`.
    pub fn extends(&self, other: &PuzzleGrid) -> bool {
        self.n == other.n
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(&given, &v)| given == 0 || given == v)
    }

    /// The same values as a Latin grid; panics unless complete.
    pub fn to_latin(&self) -> LatinGrid {
        assert!(self.is_complete());
        LatinGrid::new(self.n, self.cells.clone())
    }

    /// `n` lines of `n` space-separated tokens, `.` for blanks.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| match self.cells[(i * self.n + j) as usize] {
                    0 => ".".to_string(),
                    v => v.to_string(),
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Checks that no symbol repeats within a row, column or box.
fn check_consistent(spec: &SudokuSpec, grid: &PuzzleGrid) -> Result<(), SudokuError> {
    let n = spec.n();
    let unit = |name: &str, cells: &[(u32, u32)]| -> Result<(), SudokuError> {
        let mut seen = vec![false; n as usize + 1];
        for &(i, j) in cells {
            let v = grid.get(i, j);
            if v == 0 {
                continue;
            }
            if seen[v as usize] {
                return Err(SudokuError::InconsistentGivens(v, name.to_string()));
            }
            seen[v as usize] = true;
        }
        Ok(())
    };
    for x in 1..=n {
        unit(&format!("row {x}"), &(1..=n).map(|j| (x, j)).collect::<Vec<_>>())?;
        unit(&format!("column {x}"), &(1..=n).map(|i| (i, x)).collect::<Vec<_>>())?;
        let cells: Vec<(u32, u32)> = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| spec.box_of(i, j) == x)
            .collect();
        unit(&format!("box {x}"), &cells)?;
    }
    Ok(())
}

/// Parses a puzzle: `n` lines of `n` tokens (`1..=n`, or `.`/`0` for
/// blank). For `n ≤ 9` an unseparated n²-character single line, or `n`
/// lines of `n` characters, are also accepted.
pub fn read_puzzle(text: &str, spec: &SudokuSpec) -> Result<PuzzleGrid, SudokuError> {
    let n = spec.n();
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let parse_token = |line: usize, token: &str| -> Result<u32, SudokuError> {
        if token == "." || token == "0" {
            return Ok(0);
        }
        match token.parse::<u32>() {
            Ok(v) if v >= 1 && v <= n => Ok(v),
            _ => Err(SudokuError::BadToken { line, token: token.to_string() }),
        }
    };
    let mut cells = Vec::with_capacity((n * n) as usize);
    if lines.len() == 1 && n <= 9 && lines[0].1.chars().count() == (n * n) as usize {
        let (number, line) = lines[0];
        for ch in line.chars() {
            cells.push(parse_token(number, &ch.to_string())?);
        }
    } else {
        if lines.len() != n as usize {
            return Err(SudokuError::BadDimensions {
                expected: n,
                actual: format!("{} non-blank lines", lines.len()),
            });
        }
        for &(number, line) in &lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() == n as usize {
                for token in tokens {
                    cells.push(parse_token(number, token)?);
                }
            } else if n <= 9 && tokens.len() == 1 && tokens[0].chars().count() == n as usize {
                for ch in tokens[0].chars() {
                    cells.push(parse_token(number, &ch.to_string())?);
                }
            } else {
                return Err(SudokuError::BadDimensions {
                    expected: n,
                    actual: format!("{} tokens on line {number}", tokens.len()),
                });
            }
        }
    }
    let grid = PuzzleGrid::new(n, cells);
    check_consistent(spec, &grid)?;
    Ok(grid)
}

/// Builds the 4n²-column instance; given cells contribute exactly their
/// forced candidate, blank cells all `n` candidates.
pub fn build_instance(
    spec: &SudokuSpec,
    puzzle: Option<&PuzzleGrid>,
) -> Result<Instance, SudokuError> {
    let n = spec.n();
    if let Some(p) = puzzle {
        assert_eq!(p.n(), n, "puzzle size does not match the spec");
        check_consistent(spec, p)?;
    }
    let mut instance = Instance::new();
    for i in 1..=n {
        for j in 1..=n {
            let given = puzzle.map_or(0, |p| p.get(i, j));
            let candidates: Vec<u32> =
                if given != 0 { vec![given] } else { (1..=n).collect() };
            let b = spec.box_of(i, j);
            for v in candidates {
                instance
                    .add_row([
                        cell_label(n, i, j),
                        format!("R{i}N{v}"),
                        format!("C{j}N{v}"),
                        format!("B{b}N{v}"),
                    ])
                    .expect("generated labels are valid");
            }
        }
    }
    Ok(instance)
}

/// How many completions [`solve_puzzle`] may look for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PuzzleLimit {
    First,
    /// Search up to two completions, enough to classify 0 / 1 / 2+.
    CheckUnique,
    All,
}

/// Completes a puzzle. Returns the completions found within the limit and
/// the search statistics; zero completions is a valid outcome.
pub fn solve_puzzle(
    spec: &SudokuSpec,
    puzzle: &PuzzleGrid,
    limit: PuzzleLimit,
    engine: EngineKind,
) -> Result<(Vec<PuzzleGrid>, SearchStats), SudokuError> {
    let instance = build_instance(spec, Some(puzzle))?;
    let limits = match limit {
        PuzzleLimit::First => SearchLimits::solutions(1),
        PuzzleLimit::CheckUnique => SearchLimits::solutions(2),
        PuzzleLimit::All => SearchLimits::default(),
    };
    let mut grids = Vec::new();
    let mut error = None;
    let stats = solve(&instance, engine, &limits, |rows| {
        match solution_to_grid(spec, &instance, rows) {
            Ok(grid) => grids.push(grid),
            Err(e) => error = Some(e),
        }
    });
    match error {
        Some(e) => Err(e),
        None => Ok((grids, stats)),
    }
}

/// Rebuilds the completed grid described by a solution over
/// [`build_instance`]'s rows.
pub fn solution_to_grid(
    spec: &SudokuSpec,
    instance: &Instance,
    rows: &[RowId],
) -> Result<PuzzleGrid, SudokuError> {
    let n = spec.n();
    let bad = |msg: String| SudokuError::MalformedSolution(msg);
    if rows.len() != (n * n) as usize {
        return Err(bad(format!("expected {} rows, got {}", n * n, rows.len())));
    }
    let mut grid = PuzzleGrid::blank(n);
    for &id in rows {
        let labels: Vec<&str> = instance.row_labels(id).collect();
        let [_, row_label, col_label, _] = labels[..] else {
            return Err(bad(format!("row {id} does not have 4 labels")));
        };
        let (i, v) = parse_pair_label(row_label, 'R')
            .ok_or_else(|| bad(format!("bad label `{row_label}`")))?;
        let (j, _) = parse_pair_label(col_label, 'C')
            .ok_or_else(|| bad(format!("bad label `{col_label}`")))?;
        if grid.get(i, j) != 0 {
            return Err(bad(format!("cell ({i},{j}) assigned twice")));
        }
        grid.set(i, j, v);
    }
    Ok(grid)
}

/// True iff the complete grid satisfies all three constraint families.
pub fn grid_is_valid_sudoku(spec: &SudokuSpec, grid: &PuzzleGrid) -> Result<bool, SudokuError> {
    if !grid.is_complete() {
        return Err(SudokuError::IncompleteGrid);
    }
    assert_eq!(grid.n(), spec.n());
    Ok(check_consistent(spec, grid).is_ok())
}
