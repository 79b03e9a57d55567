//! Pentomino tilings as exact cover.
//!
//! Placing the 12 pentominoes on a 60-cell board needs 72 primary
//! columns: one per piece (each used exactly once) and one per board cell
//! (each covered exactly once). Every legal placement, any orientation of
//! any piece landing entirely on board cells, becomes a row of 6 labels.
//! The matrix carries no symmetry reduction, so the solver reports all
//! congruent tilings; [`dedupe_unique`] collapses them into orbits of the
//! board's symmetry group afterwards.

use std::collections::{BTreeSet, HashMap};

use crate::model::{Instance, RowId};

/// (row, column) on the square lattice.
pub type Cell = (i32, i32);

/// Piece names in fixed generation order.
pub const PIECE_NAMES: [char; 12] = ['F', 'I', 'L', 'P', 'N', 'T', 'U', 'V', 'W', 'X', 'Y', 'Z'];

/// Base shape of each piece, normalized: min row = min col = 0, sorted.
static PIECE_CELLS: [(char, [Cell; 5]); 12] = [
    ('F', [(0, 1), (0, 2), (1, 0), (1, 1), (2, 1)]),
    ('I', [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)]),
    ('L', [(0, 0), (1, 0), (2, 0), (3, 0), (3, 1)]),
    ('P', [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]),
    ('N', [(0, 1), (1, 1), (2, 0), (2, 1), (3, 0)]),
    ('T', [(0, 0), (0, 1), (0, 2), (1, 1), (2, 1)]),
    ('U', [(0, 0), (0, 2), (1, 0), (1, 1), (1, 2)]),
    ('V', [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]),
    ('W', [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]),
    ('X', [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]),
    ('Y', [(0, 1), (1, 0), (1, 1), (2, 1), (3, 1)]),
    ('Z', [(0, 0), (0, 1), (1, 1), (2, 1), (2, 2)]),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoardError {
    #[error("line {line}, column {col}: expected `#` or `.`, found {found:?}")]
    BadCharacter { line: usize, col: usize, found: char },
    #[error("board has no cells")]
    EmptyBoard,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PentominoError {
    #[error("board cell ({0}, {1}) is not covered by the solution")]
    IncompleteSolution(i32, i32),
    #[error("unknown row id {0}")]
    UnknownRow(u32),
}

/// One oriented piece placed on specific board cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub piece: char,
    /// Absolute board coordinates, sorted.
    pub cells: [Cell; 5],
}

fn normalize(mut cells: Vec<Cell>) -> Vec<Cell> {
    let min_r = cells.iter().map(|c| c.0).min().unwrap();
    let min_c = cells.iter().map(|c| c.1).min().unwrap();
    for cell in &mut cells {
        *cell = (cell.0 - min_r, cell.1 - min_c);
    }
    cells.sort_unstable();
    cells
}

fn rotate(cells: &[Cell]) -> Vec<Cell> {
    cells.iter().map(|&(r, c)| (c, -r)).collect()
}

fn reflect(cells: &[Cell]) -> Vec<Cell> {
    cells.iter().map(|&(r, c)| (r, -c)).collect()
}

/// Distinct orientations of a piece under rotation — and reflection,
/// unless `one_sided` — normalized and in sorted order.
pub fn piece_orientations(piece: char, one_sided: bool) -> Vec<Vec<Cell>> {
    let base = &PIECE_CELLS
        .iter()
        .find(|(name, _)| *name == piece)
        .expect("unknown piece name")
        .1;
    let mut seen = BTreeSet::new();
    let mut flips: Vec<Vec<Cell>> = vec![base.to_vec()];
    if !one_sided {
        flips.push(reflect(base));
    }
    for mut cells in flips {
        for _ in 0..4 {
            cells = rotate(&cells);
            seen.insert(normalize(cells.clone()));
        }
    }
    seen.into_iter().collect()
}

/// A set of lattice cells with the row-major numbering `1..=len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoardShape {
    height: i32,
    width: i32,
    /// Cell number at `row * width + col`; 0 marks a hole.
    numbers: Vec<u32>,
    cell_count: u32,
}

impl BoardShape {
    /// Builds a board from any cell set; coordinates are shifted so the
    /// bounding box starts at (0, 0). Panics on an empty set.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> BoardShape {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        assert!(!cells.is_empty(), "board must have at least one cell");
        let min_r = cells.iter().map(|c| c.0).min().unwrap();
        let min_c = cells.iter().map(|c| c.1).min().unwrap();
        let height = cells.iter().map(|c| c.0).max().unwrap() - min_r + 1;
        let width = cells.iter().map(|c| c.1).max().unwrap() - min_c + 1;
        let mut numbers = vec![0u32; (height * width) as usize];
        let mut next = 0u32;
        // BTreeSet iterates row-major already
        for &(r, c) in &cells {
            next += 1;
            numbers[((r - min_r) * width + (c - min_c)) as usize] = next;
        }
        BoardShape { height, width, numbers, cell_count: next }
    }

    pub fn rectangle(height: i32, width: i32) -> BoardShape {
        BoardShape::from_cells((0..height).flat_map(|r| (0..width).map(move |c| (r, c))))
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn width(&self) -> i32 {
        self.width
    }

    pub fn cell_count(&self) -> u32 {
        self.cell_count
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cell_number(cell).is_some()
    }

    /// Row-major cell number (1-based), or None for holes and cells
    /// outside the bounding box.
    pub fn cell_number(&self, (r, c): Cell) -> Option<u32> {
        if r < 0 || r >= self.height || c < 0 || c >= self.width {
            return None;
        }
        match self.numbers[(r * self.width + c) as usize] {
            0 => None,
            n => Some(n),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.height)
            .flat_map(move |r| (0..self.width).map(move |c| (r, c)))
            .filter(move |&cell| self.contains(cell))
    }
}

/// The boards used in the published results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinBoard {
    R3x20,
    R4x15,
    R5x12,
    R6x10,
    /// 8×8 with the center 2×2 removed.
    Chess,
    /// A 3-wide, 14-tall bar crossed by a 9-wide, 3-tall bar over its
    /// 4th–6th rows.
    Cross,
}

impl BuiltinBoard {
    pub const ALL: [BuiltinBoard; 6] = [
        BuiltinBoard::R3x20,
        BuiltinBoard::R4x15,
        BuiltinBoard::R5x12,
        BuiltinBoard::R6x10,
        BuiltinBoard::Chess,
        BuiltinBoard::Cross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinBoard::R3x20 => "3x20",
            BuiltinBoard::R4x15 => "4x15",
            BuiltinBoard::R5x12 => "5x12",
            BuiltinBoard::R6x10 => "6x10",
            BuiltinBoard::Chess => "chess",
            BuiltinBoard::Cross => "cross",
        }
    }
}

impl std::str::FromStr for BuiltinBoard {
    type Err = String;

    fn from_str(s: &str) -> Result<BuiltinBoard, String> {
        BuiltinBoard::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown board `{s}` (expected 3x20, 4x15, 5x12, 6x10, chess or cross)"))
    }
}

pub fn builtin_board(which: BuiltinBoard) -> BoardShape {
    match which {
        BuiltinBoard::R3x20 => BoardShape::rectangle(3, 20),
        BuiltinBoard::R4x15 => BoardShape::rectangle(4, 15),
        BuiltinBoard::R5x12 => BoardShape::rectangle(5, 12),
        BuiltinBoard::R6x10 => BoardShape::rectangle(6, 10),
        BuiltinBoard::Chess => BoardShape::from_cells(
            (0..8)
                .flat_map(|r| (0..8).map(move |c| (r, c)))
                .filter(|&(r, c)| !((3..=4).contains(&r) && (3..=4).contains(&c))),
        ),
        BuiltinBoard::Cross => BoardShape::from_cells(
            (0..14)
                .flat_map(|r| (0..9).map(move |c| (r, c)))
                .filter(|&(r, c)| (3..=5).contains(&c) || (3..=5).contains(&r)),
        ),
    }
}

/// Parses a board mask: `#` for cells, `.` for holes.
pub fn read_board(text: &str) -> Result<BoardShape, BoardError> {
    let mut cells = Vec::new();
    for (r, line) in text.lines().enumerate() {
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push((r as i32, c as i32)),
                '.' => {}
                found => {
                    return Err(BoardError::BadCharacter { line: r + 1, col: c + 1, found })
                }
            }
        }
    }
    if cells.is_empty() {
        return Err(BoardError::EmptyBoard);
    }
    Ok(BoardShape::from_cells(cells))
}

/// Builds the tiling instance plus the row → placement table.
///
/// Columns are the 12 piece letters followed by the cell numbers; rows
/// run over pieces in `PIECE_NAMES` order, orientations in sorted order,
/// anchors row-major.
pub fn build_instance(board: &BoardShape, one_sided: bool) -> (Instance, Vec<Placement>) {
    let mut instance = Instance::new();
    instance
        .declare_primary(PIECE_NAMES.iter().map(char::to_string))
        .expect("piece labels are fresh");
    instance
        .declare_primary((1..=board.cell_count()).map(|n| n.to_string()))
        .expect("cell labels are fresh");
    let mut placements = Vec::new();
    for piece in PIECE_NAMES {
        for orientation in piece_orientations(piece, one_sided) {
            let max_r = orientation.iter().map(|c| c.0).max().unwrap();
            let max_c = orientation.iter().map(|c| c.1).max().unwrap();
            for r0 in 0..board.height() - max_r {
                for c0 in 0..board.width() - max_c {
                    let cells: Vec<Cell> =
                        orientation.iter().map(|&(r, c)| (r + r0, c + c0)).collect();
                    let Some(numbers) = cells
                        .iter()
                        .map(|&cell| board.cell_number(cell))
                        .collect::<Option<Vec<u32>>>()
                    else {
                        continue;
                    };
                    let mut labels = vec![piece.to_string()];
                    labels.extend(numbers.iter().map(|n| n.to_string()));
                    instance.add_row(labels).expect("placement labels are valid");
                    placements.push(Placement {
                        piece,
                        cells: cells.try_into().expect("five cells per placement"),
                    });
                }
            }
        }
    }
    (instance, placements)
}

/// Resolves solver row ids through the placement table.
pub fn solution_placements(
    table: &[Placement],
    rows: &[RowId],
) -> Result<Vec<Placement>, PentominoError> {
    rows.iter()
        .map(|id| {
            table
                .get(id.index())
                .cloned()
                .ok_or(PentominoError::UnknownRow(id.get()))
        })
        .collect()
}

/// Letter grid for one tiling: piece letters on cells, `.` on holes.
pub fn render_solution(
    board: &BoardShape,
    table: &[Placement],
    rows: &[RowId],
) -> Result<String, PentominoError> {
    let placements = solution_placements(table, rows)?;
    let mut grid = vec![vec!['.'; board.width() as usize]; board.height() as usize];
    for placement in &placements {
        for &(r, c) in &placement.cells {
            grid[r as usize][c as usize] = placement.piece;
        }
    }
    for cell in board.cells() {
        if grid[cell.0 as usize][cell.1 as usize] == '.' {
            return Err(PentominoError::IncompleteSolution(cell.0, cell.1));
        }
    }
    Ok(grid
        .into_iter()
        .map(|row| row.into_iter().collect::<String>() + "\n")
        .collect())
}

/// `rowid piece r1,c1 ... r5,c5` lines, one per placement.
pub fn placements_to_string(table: &[Placement]) -> String {
    let mut out = String::new();
    for (i, p) in table.iter().enumerate() {
        out.push_str(&format!("{} {}", i + 1, p.piece));
        for &(r, c) in &p.cells {
            out.push_str(&format!(" {r},{c}"));
        }
        out.push('\n');
    }
    out
}

/// One isometry of the board onto itself: an optional reflection, a
/// number of quarter turns, and the translation that renormalizes the
/// result to the board origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoardTransform {
    reflect: bool,
    quarter_turns: u8,
    offset: Cell,
}

impl BoardTransform {
    pub fn is_identity(&self) -> bool {
        !self.reflect && self.quarter_turns == 0
    }

    pub fn apply_cell(&self, (mut r, mut c): Cell) -> Cell {
        if self.reflect {
            c = -c;
        }
        for _ in 0..self.quarter_turns {
            (r, c) = (c, -r);
        }
        (r + self.offset.0, c + self.offset.1)
    }
}

/// The subgroup of the 8 square-lattice isometries that maps the board's
/// cell set onto itself. Always contains the identity.
pub fn symmetry_group(board: &BoardShape) -> Vec<BoardTransform> {
    let cells: Vec<Cell> = board.cells().collect();
    let mut group = Vec::new();
    for reflect in [false, true] {
        for quarter_turns in 0..4u8 {
            let mut probe = BoardTransform { reflect, quarter_turns, offset: (0, 0) };
            let mapped: Vec<Cell> = cells.iter().map(|&cell| probe.apply_cell(cell)).collect();
            let min_r = mapped.iter().map(|c| c.0).min().unwrap();
            let min_c = mapped.iter().map(|c| c.1).min().unwrap();
            probe.offset = (-min_r, -min_c);
            if cells
                .iter()
                .all(|&cell| board.contains(probe.apply_cell(cell)))
            {
                group.push(probe);
            }
        }
    }
    group
}

type CanonicalSolution = Vec<(char, [Cell; 5])>;

fn transformed_solution(solution: &[Placement], transform: &BoardTransform) -> CanonicalSolution {
    let mut mapped: CanonicalSolution = solution
        .iter()
        .map(|p| {
            let mut cells: Vec<Cell> =
                p.cells.iter().map(|&cell| transform.apply_cell(cell)).collect();
            cells.sort_unstable();
            (p.piece, cells.try_into().unwrap())
        })
        .collect();
    mapped.sort_unstable_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    mapped
}

/// Partitions solutions into orbits of the board's symmetry group and
/// keeps one canonical representative per orbit (the lexicographically
/// least transformed solution). Piece identity follows its cells, so a
/// reflection may turn a placement into a different orientation of the
/// same piece.
pub fn dedupe_unique(board: &BoardShape, solutions: &[Vec<Placement>]) -> Vec<Vec<Placement>> {
    let group = symmetry_group(board);
    for transform in &group {
        for solution in solutions {
            for placement in solution {
                for &cell in &placement.cells {
                    assert!(
                        board.contains(transform.apply_cell(cell)),
                        "transform escapes the board"
                    );
                }
            }
        }
    }
    let mut seen: HashMap<CanonicalSolution, ()> = HashMap::new();
    let mut representatives = Vec::new();
    for solution in solutions {
        let canonical = group
            .iter()
            .map(|t| transformed_solution(solution, t))
            .min()
            .expect("group contains the identity");
        if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(canonical) {
            representatives.push(
                slot.key()
                    .iter()
                    .map(|&(piece, cells)| Placement { piece, cells })
                    .collect(),
            );
            slot.insert(());
        }
    }
    representatives
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::{count_solutions, EngineKind};

    #[test]
    fn orientation_counts() {
        let expect = [
            ('F', 8),
            ('I', 2),
            ('L', 8),
            ('P', 8),
            ('N', 8),
            ('T', 4),
            ('U', 4),
            ('V', 4),
            ('W', 4),
            ('X', 1),
            ('Y', 8),
            ('Z', 4),
        ];
        let mut total = 0;
        for (piece, count) in expect {
            let orientations = piece_orientations(piece, false);
            assert_eq!(orientations.len(), count, "piece {piece}");
            total += orientations.len();
        }
        assert_eq!(total, 63);
        assert_eq!(piece_orientations('F', true).len(), 4);
        assert_eq!(piece_orientations('Z', true).len(), 2);
        for piece in PIECE_NAMES {
            let free = piece_orientations(piece, false).len();
            let one_sided = piece_orientations(piece, true).len();
            assert!(one_sided <= free);
        }
    }

    #[test]
    fn pieces_are_five_connected_cells() {
        for (name, cells) in &PIECE_CELLS {
            assert_eq!(cells.len(), 5, "piece {name}");
            let set: BTreeSet<Cell> = cells.iter().copied().collect();
            assert_eq!(set.len(), 5);
            let mut reached = BTreeSet::from([cells[0]]);
            let mut frontier = vec![cells[0]];
            while let Some((r, c)) = frontier.pop() {
                for next in [(r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)] {
                    if set.contains(&next) && reached.insert(next) {
                        frontier.push(next);
                    }
                }
            }
            assert_eq!(reached.len(), 5, "piece {name} is disconnected");
            assert_eq!(normalize(cells.to_vec()), cells.to_vec(), "piece {name} not normalized");
        }
    }

    #[test]
    fn builtin_board_shapes() {
        for (which, height, width) in [
            (BuiltinBoard::R3x20, 3, 20),
            (BuiltinBoard::R4x15, 4, 15),
            (BuiltinBoard::R5x12, 5, 12),
            (BuiltinBoard::R6x10, 6, 10),
            (BuiltinBoard::Chess, 8, 8),
            (BuiltinBoard::Cross, 14, 9),
        ] {
            let board = builtin_board(which);
            assert_eq!(board.cell_count(), 60, "{}", which.name());
            assert_eq!((board.height(), board.width()), (height, width));
        }
    }

    #[test]
    fn symmetry_group_orders() {
        for (which, order) in [
            (BuiltinBoard::R3x20, 4),
            (BuiltinBoard::R4x15, 4),
            (BuiltinBoard::R5x12, 4),
            (BuiltinBoard::R6x10, 4),
            (BuiltinBoard::Chess, 8),
            (BuiltinBoard::Cross, 2),
        ] {
            let group = symmetry_group(&builtin_board(which));
            assert_eq!(group.len(), order, "{}", which.name());
            assert_eq!(group.iter().filter(|t| t.is_identity()).count(), 1);
        }
        let lump = BoardShape::from_cells([(0, 0), (0, 1), (1, 0)]);
        assert_eq!(symmetry_group(&lump).len(), 2); // diagonal mirror
        let bent = BoardShape::from_cells([(0, 0), (0, 1), (0, 2), (1, 0)]);
        assert_eq!(symmetry_group(&bent).len(), 1);
    }

    #[test]
    fn cell_numbering_is_row_major() {
        let board = read_board("##\n##\n").unwrap();
        assert_eq!(board.cell_count(), 4);
        assert_eq!(board.cell_number((0, 0)), Some(1));
        assert_eq!(board.cell_number((0, 1)), Some(2));
        assert_eq!(board.cell_number((1, 0)), Some(3));
        assert_eq!(board.cell_number((1, 1)), Some(4));
    }

    #[test]
    fn read_board_errors_and_holes() {
        let sparse = read_board("#.\n.#\n").unwrap();
        assert_eq!(sparse.cell_count(), 2);
        assert_eq!(
            read_board("#x\n"),
            Err(BoardError::BadCharacter { line: 1, col: 2, found: 'x' })
        );
        assert_eq!(read_board("...\n"), Err(BoardError::EmptyBoard));
    }

    #[test]
    fn cross_mask_round_trip() {
        let board = builtin_board(BuiltinBoard::Cross);
        let mask: String = (0..board.height())
            .map(|r| {
                (0..board.width())
                    .map(|c| if board.contains((r, c)) { '#' } else { '.' })
                    .collect::<String>()
                    + "\n"
            })
            .collect();
        assert_eq!(read_board(&mask).unwrap(), board);
    }

    #[test]
    fn instance_shape_6x10() {
        let board = builtin_board(BuiltinBoard::R6x10);
        let (instance, placements) = build_instance(&board, false);
        assert_eq!(instance.column_count(), 72);
        assert_eq!(instance.row_count(), 2056);
        assert_eq!(placements.len(), 2056);
        for id in instance.row_ids() {
            assert_eq!(instance.row_columns(id).len(), 6);
        }
        // independent check: sum over orientations of free anchor positions
        let oracle: i32 = PIECE_NAMES
            .iter()
            .flat_map(|&p| piece_orientations(p, false))
            .map(|o| {
                let h = o.iter().map(|c| c.0).max().unwrap() + 1;
                let w = o.iter().map(|c| c.1).max().unwrap() + 1;
                (6 - h + 1) * (10 - w + 1)
            })
            .sum();
        assert_eq!(oracle, 2056);
    }

    #[test]
    fn placement_row_counts_for_holed_boards() {
        for (which, rows) in [(BuiltinBoard::Chess, 1568), (BuiltinBoard::Cross, 1413)] {
            let (instance, _) = build_instance(&builtin_board(which), false);
            assert_eq!(instance.row_count(), rows, "{}", which.name());
            assert_eq!(instance.column_count(), 72);
        }
    }

    #[test]
    fn single_piece_anchor_arithmetic() {
        // X on a 5×5 board: 3×3 anchor positions.
        let board = BoardShape::rectangle(5, 5);
        let x_placements: usize = piece_orientations('X', false)
            .iter()
            .map(|o| {
                let mut count = 0;
                for r0 in 0..5 {
                    for c0 in 0..5 {
                        if o.iter().all(|&(r, c)| board.contains((r + r0, c + c0))) {
                            count += 1;
                        }
                    }
                }
                count
            })
            .sum();
        assert_eq!(x_placements, 9);
    }

    #[test]
    fn one_sided_never_adds_rows() {
        let board = builtin_board(BuiltinBoard::R6x10);
        let (free, _) = build_instance(&board, false);
        let (one_sided, _) = build_instance(&board, true);
        assert!(one_sided.row_count() <= free.row_count());
    }

    #[test]
    fn three_by_twenty_counts() {
        let board = builtin_board(BuiltinBoard::R3x20);
        let (instance, table) = build_instance(&board, false);
        let mut solutions = Vec::new();
        crate::solve::solve(
            &instance,
            EngineKind::Dlx,
            &crate::solve::SearchLimits::default(),
            |rows| solutions.push(solution_placements(&table, rows).unwrap()),
        );
        assert_eq!(solutions.len(), 8);
        let unique = dedupe_unique(&board, &solutions);
        assert_eq!(unique.len(), 2);
        // every orbit size divides the group order
        assert_eq!(count_solutions(&instance, EngineKind::Naive), 8);
    }

    #[test]
    fn render_letter_grid() {
        let board = builtin_board(BuiltinBoard::R3x20);
        let (instance, table) = build_instance(&board, false);
        let mut rendered = Vec::new();
        crate::solve::solve(
            &instance,
            EngineKind::Dlx,
            &crate::solve::SearchLimits::solutions(1),
            |rows| rendered.push(render_solution(&board, &table, rows).unwrap()),
        );
        let grid = &rendered[0];
        assert_eq!(grid.lines().count(), 3);
        for line in grid.lines() {
            assert_eq!(line.chars().count(), 20);
        }
        for piece in PIECE_NAMES {
            assert_eq!(grid.matches(piece).count(), 5, "piece {piece}");
        }
    }

    #[test]
    fn published_cross_tiling_is_found() {
        // The figure labels each piece at one of its cells; exactly one of
        // the 42 tilings puts every letter on its labeled cell.
        let anchors = [
            ((1, 3), 'U'),
            ((1, 4), 'X'),
            ((4, 0), 'L'),
            ((4, 1), 'P'),
            ((5, 6), 'F'),
            ((5, 7), 'Z'),
            ((5, 8), 'V'),
            ((7, 3), 'Y'),
            ((7, 4), 'W'),
            ((12, 3), 'N'),
            ((12, 4), 'T'),
            ((12, 5), 'I'),
        ];
        let board = builtin_board(BuiltinBoard::Cross);
        let (instance, table) = build_instance(&board, false);
        let mut matches = 0;
        crate::solve::solve(
            &instance,
            EngineKind::Dlx,
            &crate::solve::SearchLimits::default(),
            |rows| {
                let grid = render_solution(&board, &table, rows).unwrap();
                let lines: Vec<&str> = grid.lines().collect();
                if anchors
                    .iter()
                    .all(|&((r, c), piece)| lines[r].as_bytes()[c] as char == piece)
                {
                    matches += 1;
                }
            },
        );
        assert_eq!(matches, 1);
    }

    #[test]
    fn incomplete_solution_is_an_error() {
        let board = builtin_board(BuiltinBoard::R3x20);
        let (_, table) = build_instance(&board, false);
        assert!(matches!(
            render_solution(&board, &table, &[RowId::new(1)]),
            Err(PentominoError::IncompleteSolution(_, _))
        ));
    }

    #[test]
    fn placement_table_format() {
        let table = [Placement { piece: 'X', cells: [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)] }];
        assert_eq!(placements_to_string(&table), "1 X 0,1 1,0 1,1 1,2 2,1\n");
    }
}
