//! Exact cover solving toolkit.
//!
//! Builds sparse exact cover instances — with both "exactly once" and
//! "at most once" column kinds — and enumerates their solutions with
//! Algorithm X, either over plain node lists ([`EngineKind::Naive`]) or
//! dancing links ([`EngineKind::Dlx`]). Both engines produce the same
//! deterministic solution stream; they differ only in how removal work is
//! counted. Generators reduce pentomino tilings, Latin squares, Sudoku and
//! N-queens to instances, and the `xcover` binary ties everything into a
//! pipe-friendly command line.
//!
//! ```
//! use xcover::{Instance, EngineKind, count_solutions};
//!
//! let mut inst = Instance::new();
//! inst.add_row(["a"]).unwrap();
//! inst.add_row(["b"]).unwrap();
//! inst.add_row(["a", "b"]).unwrap();
//! assert_eq!(count_solutions(&inst, EngineKind::Dlx), 2);
//! ```

pub mod dlx;
pub mod io;
pub mod latin;
pub mod model;
pub mod pentomino;
pub mod queens;
pub mod solve;
pub mod sudoku;

pub use model::{ColumnKind, Instance, ModelError, RowId, Warning};
pub use solve::{
    brute_force_solutions, check_solution, count_solutions, solve, solve_with_policy,
    ColumnPolicy, EngineKind, HaltReason, SearchLimits, SearchStats, SolveError,
};
