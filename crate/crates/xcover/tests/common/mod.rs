//! Independent oracles and corpus generators shared by the integration
//! suites. Nothing here goes through the Algorithm X engines.

use rand::Rng;
use xcover::Instance;

/// Plain cell-by-cell backtracking Sudoku solver: scans blanks row-major,
/// tries symbols ascending, stops after `cap` solutions.
pub fn sudoku_backtrack(order: u32, grid: &[u32], cap: usize) -> Vec<Vec<u32>> {
    let n = (order * order) as usize;
    assert_eq!(grid.len(), n * n);
    let mut work = grid.to_vec();
    let mut found = Vec::new();
    fn fits(order: u32, grid: &[u32], n: usize, cell: usize, value: u32) -> bool {
        let (row, col) = (cell / n, cell % n);
        for k in 0..n {
            if grid[row * n + k] == value || grid[k * n + col] == value {
                return false;
            }
        }
        let k = order as usize;
        let (box_row, box_col) = (row / k * k, col / k * k);
        for r in box_row..box_row + k {
            for c in box_col..box_col + k {
                if grid[r * n + c] == value {
                    return false;
                }
            }
        }
        true
    }
    fn recurse(
        order: u32,
        grid: &mut Vec<u32>,
        n: usize,
        cap: usize,
        found: &mut Vec<Vec<u32>>,
    ) {
        if found.len() >= cap {
            return;
        }
        let Some(cell) = grid.iter().position(|&v| v == 0) else {
            found.push(grid.clone());
            return;
        };
        for value in 1..=n as u32 {
            if fits(order, grid, n, cell, value) {
                grid[cell] = value;
                recurse(order, grid, n, cap, found);
                grid[cell] = 0;
                if found.len() >= cap {
                    return;
                }
            }
        }
    }
    recurse(order, &mut work, n, cap, &mut found);
    found
}

/// Counts N-queens placements by enumerating file permutations with
/// diagonal checks.
pub fn queens_brute_force(n: u32) -> u64 {
    fn place(n: u32, row: u32, files: &mut Vec<u32>, count: &mut u64) {
        if row == n {
            *count += 1;
            return;
        }
        'file: for file in 0..n {
            for (prev_row, &prev_file) in files.iter().enumerate() {
                let prev_row = prev_row as u32;
                if prev_file == file || (row - prev_row) == file.abs_diff(prev_file) {
                    continue 'file;
                }
            }
            files.push(file);
            place(n, row + 1, files, count);
            files.pop();
        }
    }
    let mut count = 0;
    place(n, 0, &mut Vec::new(), &mut count);
    count
}

/// Random instance within the property-suite bounds: at most 12 columns
/// and 20 rows, 20–50% density, a random subset of columns secondary.
/// All columns are declared up front so uncoverable primaries occur too.
pub fn random_instance<R: Rng>(rng: &mut R) -> Instance {
    let columns: u32 = rng.random_range(1..=12);
    let rows: u32 = rng.random_range(0..=20);
    let density: f64 = rng.random_range(0.2..=0.5);
    let mut instance = Instance::new();
    let labels: Vec<String> = (0..columns).map(|c| format!("c{c}")).collect();
    let mut secondary = Vec::new();
    let mut primary = Vec::new();
    for label in &labels {
        if rng.random_bool(0.3) {
            secondary.push(label.clone());
        } else {
            primary.push(label.clone());
        }
    }
    instance.declare_secondary(secondary).unwrap();
    instance.declare_primary(primary).unwrap();
    for _ in 0..rows {
        let mut row: Vec<String> = labels
            .iter()
            .filter(|_| rng.random_bool(density))
            .cloned()
            .collect();
        if row.is_empty() {
            row.push(labels[rng.random_range(0..labels.len())].clone());
        }
        instance.add_row(row).unwrap();
    }
    instance
}
