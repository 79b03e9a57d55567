//! Command-line front end: solve and count instance files, generate
//! instances for the built-in reductions, and run the engine benchmarks.
//!
//! Solutions go to standard output; diagnostics and statistics go to
//! standard error, so `xcover gen ... | xcover count` pipelines stay
//! clean.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use xcover::io::{instance_to_string, read_instance, write_solution, write_stats};
use xcover::latin::{self, LatinSpec};
use xcover::pentomino::{self, BoardShape, BuiltinBoard};
use xcover::queens::{self, QueensSpec};
use xcover::solve::{solve, EngineKind, SearchLimits, SearchStats};
use xcover::sudoku::{self, SudokuSpec};
use xcover::Instance;

#[derive(Parser)]
#[command(name = "xcover", version, about = "Exact cover solving toolkit")]
struct Cli {
    /// Abort any search after this many updates.
    #[arg(long, global = true, value_name = "N")]
    max_updates: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate solutions of an instance file.
    Solve(SolveArgs),
    /// Print the number of solutions of an instance file.
    Count(CountArgs),
    /// Generate an instance file on standard output.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Enumerate pentomino tilings of a board.
    Pentomino(PentominoArgs),
    /// Complete a Sudoku puzzle or check its uniqueness.
    Sudoku(SudokuArgs),
    /// Count (and render) N-queens placements.
    Queens(QueensArgs),
    /// Compare engines over a corpus of instance files.
    Bench(BenchArgs),
}

fn parse_engine(s: &str) -> Result<EngineKind, String> {
    EngineKind::from_str(s)
}

fn parse_board(s: &str) -> Result<BuiltinBoard, String> {
    BuiltinBoard::from_str(s)
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file; `-` or absent reads standard input.
    file: Option<PathBuf>,
    #[arg(long, default_value = "dlx", value_parser = parse_engine)]
    engine: EngineKind,
    /// Stop after the first solution.
    #[arg(long, conflicts_with = "max")]
    first: bool,
    /// Stop after N solutions.
    #[arg(long, value_name = "N")]
    max: Option<u64>,
    /// Print the statistics block to standard error.
    #[arg(long)]
    stats: bool,
    /// Suppress solution output.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct CountArgs {
    /// Instance file; `-` or absent reads standard input.
    file: Option<PathBuf>,
    #[arg(long, default_value = "dlx", value_parser = parse_engine)]
    engine: EngineKind,
    #[arg(long)]
    stats: bool,
}

#[derive(Subcommand)]
enum GenKind {
    /// Latin square instance with 3n² columns.
    Latin {
        #[arg(long)]
        n: u32,
        /// Fix the first row and column to natural order.
        #[arg(long)]
        normalized: bool,
    },
    /// Sudoku instance with 4n² columns (n = order²).
    Sudoku {
        #[arg(long, default_value_t = 3)]
        order: u32,
        /// Restrict given cells to their puzzle value.
        #[arg(long, value_name = "FILE")]
        puzzle: Option<PathBuf>,
    },
    /// N-queens instance with secondary diagonal columns.
    Queens {
        #[arg(long)]
        n: u32,
    },
    /// Pentomino tiling instance with 72 columns.
    Pentomino {
        #[command(flatten)]
        board: BoardArg,
        /// Forbid reflected orientations.
        #[arg(long)]
        one_sided: bool,
        /// Also write the row → placement table to FILE.
        #[arg(long, value_name = "FILE")]
        placements: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BoardArg {
    /// Built-in board: 3x20, 4x15, 5x12, 6x10, chess or cross.
    #[arg(long, value_parser = parse_board)]
    board: Option<BuiltinBoard>,
    /// Board mask file: `#` cells, `.` holes.
    #[arg(long, value_name = "FILE")]
    board_file: Option<PathBuf>,
}

#[derive(Args)]
struct PentominoArgs {
    #[command(flatten)]
    board: BoardArg,
    /// Also report solutions up to board symmetry.
    #[arg(long)]
    unique: bool,
    /// Print each tiling as a letter grid.
    #[arg(long)]
    render: bool,
    #[arg(long)]
    one_sided: bool,
    #[arg(long, default_value = "dlx", value_parser = parse_engine)]
    engine: EngineKind,
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct SudokuArgs {
    /// Puzzle file; `-` or absent reads standard input.
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    order: u32,
    #[arg(long, value_enum, default_value_t = Mode::CheckUnique)]
    mode: Mode,
    #[arg(long, default_value = "dlx", value_parser = parse_engine)]
    engine: EngineKind,
    /// Suppress completed grids, keep the classification line.
    #[arg(long)]
    quiet: bool,
    #[arg(long)]
    stats: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    CheckUnique,
    First,
    All,
}

#[derive(Args)]
struct QueensArgs {
    #[arg(long)]
    n: u32,
    /// Print each placement as a Q/. board.
    #[arg(long)]
    render: bool,
    #[arg(long, default_value = "dlx", value_parser = parse_engine)]
    engine: EngineKind,
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance files or directories of instance files.
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    /// Engines to run, comma separated.
    #[arg(long, value_delimiter = ',', default_values = ["naive", "dlx"], value_parser = parse_engine)]
    engines: Vec<EngineKind>,
    #[arg(long, default_value_t = 1)]
    repeats: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = SearchLimits { max_updates: cli.max_updates, ..SearchLimits::default() };
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(args, limits),
        Command::Count(args) => cmd_count(args, limits),
        Command::Gen { kind } => cmd_gen(kind),
        Command::Pentomino(args) => cmd_pentomino(args, limits),
        Command::Sudoku(args) => cmd_sudoku(args, limits),
        Command::Queens(args) => cmd_queens(args, limits),
        Command::Bench(args) => cmd_bench(args, limits),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

const NO_SOLUTIONS: u8 = 1;

fn read_input(file: &Option<PathBuf>) -> Result<Instance, String> {
    let parsed = match file {
        Some(path) if path.as_os_str() != "-" => fs::File::open(path)
            .map_err(|e| format!("{}: {e}", path.display()))
            .and_then(|f| read_instance(f).map_err(|e| format!("{}: {e}", path.display()))),
        _ => read_instance(io::stdin().lock()).map_err(|e| e.to_string()),
    }?;
    Ok(parsed)
}

fn report_warnings(instance: &Instance) {
    if instance.row_count() == 0 {
        eprintln!("warning: instance has no rows");
    }
    for warning in instance.validate() {
        eprintln!("warning: {warning}");
    }
}

fn exit_by_count(found: u64) -> ExitCode {
    if found > 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(NO_SOLUTIONS)
    }
}

fn cmd_solve(args: SolveArgs, mut limits: SearchLimits) -> Result<ExitCode, String> {
    let instance = read_input(&args.file)?;
    report_warnings(&instance);
    limits.max_solutions = if args.first { Some(1) } else { args.max };
    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    let mut ordinal = 0u64;
    let stats = solve(&instance, args.engine, &limits, |rows| {
        ordinal += 1;
        if !args.quiet {
            out.write_all(write_solution(&instance, rows, ordinal).as_bytes())
                .expect("write to stdout");
        }
    });
    out.flush().expect("flush stdout");
    if args.stats {
        eprint!("{}", write_stats(&stats));
    }
    Ok(exit_by_count(stats.solutions_found))
}

fn cmd_count(args: CountArgs, limits: SearchLimits) -> Result<ExitCode, String> {
    let instance = read_input(&args.file)?;
    report_warnings(&instance);
    let stats = solve(&instance, args.engine, &limits, |_| {});
    println!("{}", stats.solutions_found);
    if args.stats {
        eprint!("{}", write_stats(&stats));
    }
    Ok(exit_by_count(stats.solutions_found))
}

fn load_board(arg: &BoardArg) -> Result<BoardShape, String> {
    match (&arg.board, &arg.board_file) {
        (Some(builtin), None) => Ok(pentomino::builtin_board(*builtin)),
        (None, Some(path)) => {
            let text =
                fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            pentomino::read_board(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        _ => unreachable!("clap enforces exactly one board source"),
    }
}

fn cmd_gen(kind: GenKind) -> Result<ExitCode, String> {
    let text = match kind {
        GenKind::Latin { n, normalized } => {
            if n == 0 {
                return Err("--n must be at least 1".into());
            }
            instance_to_string(&latin::build_instance(&LatinSpec { n, normalized }))
        }
        GenKind::Sudoku { order, puzzle } => {
            if order == 0 {
                return Err("--order must be at least 1".into());
            }
            let spec = SudokuSpec::new(order);
            let grid = match puzzle {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    Some(
                        sudoku::read_puzzle(&text, &spec)
                            .map_err(|e| format!("{}: {e}", path.display()))?,
                    )
                }
                None => None,
            };
            let instance =
                sudoku::build_instance(&spec, grid.as_ref()).map_err(|e| e.to_string())?;
            instance_to_string(&instance)
        }
        GenKind::Queens { n } => {
            if n == 0 {
                return Err("--n must be at least 1".into());
            }
            instance_to_string(&queens::build_instance(&QueensSpec { n }))
        }
        GenKind::Pentomino { board, one_sided, placements } => {
            let board = load_board(&board)?;
            let (instance, table) = pentomino::build_instance(&board, one_sided);
            if let Some(path) = placements {
                fs::write(&path, pentomino::placements_to_string(&table))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            instance_to_string(&instance)
        }
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_pentomino(args: PentominoArgs, limits: SearchLimits) -> Result<ExitCode, String> {
    let board = load_board(&args.board)?;
    let (instance, table) = pentomino::build_instance(&board, args.one_sided);
    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    let mut solutions = Vec::new();
    let mut render_error = None;
    let stats = solve(&instance, args.engine, &limits, |rows| {
        if args.render && render_error.is_none() {
            match pentomino::render_solution(&board, &table, rows) {
                Ok(grid) => {
                    out.write_all(grid.as_bytes()).expect("write to stdout");
                    out.write_all(b"\n").expect("write to stdout");
                }
                Err(e) => render_error = Some(e.to_string()),
            }
        }
        if args.unique {
            solutions.push(pentomino::solution_placements(&table, rows).expect("emitted rows"));
        }
    });
    if let Some(e) = render_error {
        return Err(e);
    }
    writeln!(out, "solutions {}", stats.solutions_found).expect("write to stdout");
    if args.unique {
        let unique = pentomino::dedupe_unique(&board, &solutions);
        writeln!(out, "unique {}", unique.len()).expect("write to stdout");
    }
    out.flush().expect("flush stdout");
    if args.stats {
        eprint!("{}", write_stats(&stats));
    }
    Ok(exit_by_count(stats.solutions_found))
}

fn cmd_sudoku(args: SudokuArgs, mut limits: SearchLimits) -> Result<ExitCode, String> {
    if args.order == 0 {
        return Err("--order must be at least 1".into());
    }
    let spec = SudokuSpec::new(args.order);
    let text = match &args.file {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
        _ => {
            let mut buffer = String::new();
            io::stdin()
                .lock()
                .read_to_string(&mut buffer)
                .map_err(|e| e.to_string())?;
            buffer
        }
    };
    let puzzle = sudoku::read_puzzle(&text, &spec).map_err(|e| e.to_string())?;
    limits.max_solutions = match args.mode {
        Mode::First => Some(1),
        Mode::CheckUnique => Some(2),
        Mode::All => None,
    };
    let instance =
        sudoku::build_instance(&spec, Some(&puzzle)).map_err(|e| e.to_string())?;
    let mut grids = Vec::new();
    let mut decode_error = None;
    let stats = solve(&instance, args.engine, &limits, |rows| {
        match sudoku::solution_to_grid(&spec, &instance, rows) {
            Ok(grid) => grids.push(grid),
            Err(e) => decode_error = Some(e.to_string()),
        }
    });
    if let Some(e) = decode_error {
        return Err(e);
    }
    if !args.quiet {
        for (i, grid) in grids.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print!("{}", grid.to_text());
        }
    }
    if args.stats {
        eprint!("{}", write_stats(&stats));
    }
    match args.mode {
        Mode::CheckUnique => {
            let class = match grids.len() {
                0 => "0",
                1 => "1",
                _ => "2+",
            };
            println!("solutions {class}");
            Ok(match grids.len() {
                0 => ExitCode::from(NO_SOLUTIONS),
                1 => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            })
        }
        Mode::All => {
            println!("solutions {}", grids.len());
            Ok(exit_by_count(grids.len() as u64))
        }
        Mode::First => Ok(exit_by_count(grids.len() as u64)),
    }
}

fn cmd_queens(args: QueensArgs, limits: SearchLimits) -> Result<ExitCode, String> {
    if args.n == 0 {
        return Err("--n must be at least 1".into());
    }
    let spec = QueensSpec { n: args.n };
    let instance = queens::build_instance(&spec);
    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    let mut render_error = None;
    let stats = solve(&instance, args.engine, &limits, |rows| {
        if args.render && render_error.is_none() {
            match queens::render_queens(&spec, &instance, rows) {
                Ok(board) => {
                    out.write_all(board.as_bytes()).expect("write to stdout");
                    out.write_all(b"\n").expect("write to stdout");
                }
                Err(e) => render_error = Some(e.to_string()),
            }
        }
    });
    if let Some(e) = render_error {
        return Err(e);
    }
    writeln!(out, "solutions {}", stats.solutions_found).expect("write to stdout");
    out.flush().expect("flush stdout");
    if args.stats {
        eprint!("{}", write_stats(&stats));
    }
    Ok(exit_by_count(stats.solutions_found))
}

fn corpus_files(paths: &[PathBuf]) -> Vec<PathBuf> {
    let mut files = Vec::new();
    for path in paths {
        if path.is_dir() {
            match fs::read_dir(path) {
                Ok(entries) => {
                    let mut inner: Vec<PathBuf> = entries
                        .filter_map(|e| e.ok())
                        .map(|e| e.path())
                        .filter(|p| p.is_file())
                        .collect();
                    inner.sort();
                    files.extend(inner);
                }
                Err(e) => eprintln!("warning: skipping {}: {e}", path.display()),
            }
        } else {
            files.push(path.clone());
        }
    }
    files
}

fn cmd_bench(args: BenchArgs, limits: SearchLimits) -> Result<ExitCode, String> {
    if args.repeats == 0 {
        return Err("--repeats must be at least 1".into());
    }
    println!("# instance engine repeat solutions updates wall_s updates_per_s");
    println!("# wall_s and updates_per_s are nondeterministic; everything else is exact");
    for path in corpus_files(&args.paths) {
        let instance = match fs::File::open(&path)
            .map_err(|e| format!("{e}"))
            .and_then(|f| read_instance(f).map_err(|e| format!("{e}")))
        {
            Ok(instance) => instance,
            Err(e) => {
                eprintln!("warning: skipping {}: {e}", path.display());
                continue;
            }
        };
        for &engine in &args.engines {
            let mut reference: Option<SearchStats> = None;
            for repeat in 1..=args.repeats {
                let stats = solve(&instance, engine, &limits, |_| {});
                println!(
                    "{} {} {} {} {} {:.6} {:.0}",
                    path.display(),
                    engine.name(),
                    repeat,
                    stats.solutions_found,
                    stats.total_updates,
                    stats.wall_time.as_secs_f64(),
                    stats.updates_per_second(),
                );
                if let Some(first) = &reference {
                    assert_eq!(first.total_updates, stats.total_updates);
                    assert_eq!(first.solutions_found, stats.solutions_found);
                } else {
                    reference = Some(stats);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
