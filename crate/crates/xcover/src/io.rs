//! Text formats: instance files, solution reports, statistics blocks.
//!
//! An instance file holds one row per line, as whitespace-separated column
//! labels:
//!
//! ```text
//! %secondary s t
//! # a comment
//! a b s
//! c t
//! ```
//!
//! Blank lines and lines whose first non-blank character is `#` contribute
//! nothing. Directive lines start with `%` and must precede the first row:
//! `%secondary` registers at-most-once columns, `%primary` registers
//! exactly-once columns that no row needs to mention. Everything is UTF-8.

use std::fmt;
use std::io::Read;

use crate::model::{ColumnKind, Instance, ModelError, RowId};
use crate::solve::SearchStats;

#[derive(Debug, thiserror::Error)]
pub struct ReadError {
    /// 1-based line of the offending input; 0 when no line applies.
    pub line: usize,
    pub kind: ReadErrorKind,
}

impl fmt::Display for ReadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: {}", self.line, self.kind)
        } else {
            self.kind.fmt(f)
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReadErrorKind {
    #[error("unknown directive `%{0}`")]
    BadDirective(String),
    #[error("directive `%{0}` after the first row")]
    LateDirective(String),
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Splits on `\n`, `\r\n`, or lone `\r`.
fn universal_lines(text: &str) -> impl Iterator<Item = &str> {
    let mut rest = text;
    std::iter::from_fn(move || {
        if rest.is_empty() {
            return None;
        }
        match rest.find(['\n', '\r']) {
            None => {
                let line = rest;
                rest = "";
                Some(line)
            }
            Some(pos) => {
                let line = &rest[..pos];
                let bytes = rest.as_bytes();
                let skip = if bytes[pos] == b'\r' && bytes.get(pos + 1) == Some(&b'\n') {
                    2
                } else {
                    1
                };
                rest = &rest[pos + skip..];
                Some(line)
            }
        }
    })
}

/// Parses an instance from UTF-8 text. Rows are numbered by order of row
/// lines; column ordinals follow first occurrence.
pub fn read_instance_str(text: &str) -> Result<Instance, ReadError> {
    let mut instance = Instance::new();
    let mut saw_row = false;
    for (number, raw) in universal_lines(text).enumerate() {
        let line = number + 1;
        let at = |kind: ReadErrorKind| ReadError { line, kind };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.starts_with('%') {
            let mut tokens = trimmed.split_whitespace();
            let name = tokens.next().unwrap()[1..].to_string();
            if name != "secondary" && name != "primary" {
                return Err(at(ReadErrorKind::BadDirective(name)));
            }
            if saw_row {
                return Err(at(ReadErrorKind::LateDirective(name)));
            }
            let result = if name == "secondary" {
                instance.declare_secondary(tokens)
            } else {
                instance.declare_primary(tokens)
            };
            result.map_err(|e| at(e.into()))?;
            continue;
        }
        saw_row = true;
        instance
            .add_row(trimmed.split_whitespace())
            .map_err(|e| at(e.into()))?;
    }
    Ok(instance)
}

/// [`read_instance_str`] over a byte stream.
pub fn read_instance<R: Read>(mut reader: R) -> Result<Instance, ReadError> {
    let mut bytes = Vec::new();
    reader
        .read_to_end(&mut bytes)
        .map_err(|e| ReadError { line: 0, kind: e.into() })?;
    let text = match String::from_utf8(bytes) {
        Ok(text) => text,
        Err(e) => {
            let prefix = &e.as_bytes()[..e.utf8_error().valid_up_to()];
            let line = prefix.iter().filter(|&&b| b == b'\n').count() + 1;
            return Err(ReadError { line, kind: ReadErrorKind::NotUtf8 });
        }
    };
    read_instance_str(&text)
}

/// Serializes an instance such that [`read_instance_str`] reconstructs it
/// exactly — columns, kinds, rows and ordinal order.
///
/// Instances whose column order the row lines already imply (every parsed
/// instance, for one) serialize without directives, so a parsed file
/// writes back byte-identically apart from newline normalization. Other
/// instances get the directive lines needed to pin their column order:
/// everything up to the last secondary column, plus the trailing primary
/// block when its ordinal order differs from first-appearance order.
pub fn instance_to_string(instance: &Instance) -> String {
    let columns = instance.column_count() as u32;
    let last_secondary = instance
        .columns()
        .enumerate()
        .filter(|&(_, (_, kind))| kind == ColumnKind::Secondary)
        .map(|(ord, _)| ord as u32)
        .max();
    let declared_up_to = last_secondary.map_or(0, |ord| ord + 1);
    let mut appearance = Vec::new();
    let mut seen = vec![false; columns as usize];
    for id in instance.row_ids() {
        for &c in instance.row_columns(id) {
            if c >= declared_up_to && !seen[c as usize] {
                seen[c as usize] = true;
                appearance.push(c);
            }
        }
    }
    let tail_in_order = appearance.iter().copied().eq(declared_up_to..columns);
    let declared = if tail_in_order { declared_up_to } else { columns };

    let mut out = String::new();
    let mut run_kind = None;
    for ord in 0..declared {
        let kind = instance.column_kind(ord);
        if run_kind != Some(kind) {
            if run_kind.is_some() {
                out.push('\n');
            }
            out.push_str(match kind {
                ColumnKind::Primary => "%primary",
                ColumnKind::Secondary => "%secondary",
            });
            run_kind = Some(kind);
        }
        out.push(' ');
        out.push_str(instance.column_label(ord));
    }
    if run_kind.is_some() {
        out.push('\n');
    }
    for id in instance.row_ids() {
        let labels: Vec<&str> = instance.row_labels(id).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// [`instance_to_string`] onto a byte stream.
pub fn write_instance<W: std::io::Write>(instance: &Instance, mut writer: W) -> std::io::Result<()> {
    writer.write_all(instance_to_string(instance).as_bytes())
}

/// One solution report: a `SOLUTION <ordinal>` header, then one line per
/// selected row listing the row's labels in declaration order.
pub fn write_solution(instance: &Instance, rows: &[RowId], ordinal: u64) -> String {
    let mut out = format!("SOLUTION {ordinal}\n");
    for &id in rows {
        let labels: Vec<&str> = instance.row_labels(id).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// Statistics block: one `key value` line each for the totals, then one
/// `level <k> <count>` line per search level. Wall time and the rate
/// derived from it are the only nondeterministic fields.
pub fn write_stats(stats: &SearchStats) -> String {
    let mut out = String::new();
    out.push_str(&format!("solutions {}\n", stats.solutions_found));
    out.push_str(&format!("total_updates {}\n", stats.total_updates));
    out.push_str(&format!("max_depth {}\n", stats.max_depth));
    out.push_str(&format!("wall_time {:.6}\n", stats.wall_time.as_secs_f64()));
    out.push_str(&format!("updates_per_second {:.0}\n", stats.updates_per_second()));
    out.push_str(&format!("halted_by {}\n", stats.halted_by.name()));
    for (level, count) in stats.updates_per_level.iter().enumerate() {
        out.push_str(&format!("level {level} {count}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::HaltReason;
    use std::time::Duration;

    #[test]
    fn read_two_rows() {
        let inst = read_instance_str("a b\nc\n").unwrap();
        assert_eq!(inst.row_count(), 2);
        assert_eq!(inst.column_count(), 3);
        assert!(inst.columns().all(|(_, k)| k == ColumnKind::Primary));
    }

    #[test]
    fn read_secondary_directive() {
        let inst = read_instance_str("%secondary d\na d\n").unwrap();
        assert_eq!(inst.column_kind(inst.column_ordinal("d").unwrap()), ColumnKind::Secondary);
        assert_eq!(inst.column_kind(inst.column_ordinal("a").unwrap()), ColumnKind::Primary);
    }

    #[test]
    fn comments_blanks_and_crlf() {
        let inst = read_instance_str("# heading\r\n\r\n  a b\rc\n").unwrap();
        assert_eq!(inst.row_count(), 2);
    }

    #[test]
    fn missing_final_newline() {
        let inst = read_instance_str("a b\nc").unwrap();
        assert_eq!(inst.row_count(), 2);
    }

    #[test]
    fn bad_directive() {
        let err = read_instance_str("a\n%frobnicate x\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, ReadErrorKind::BadDirective(ref d) if d == "frobnicate"));
    }

    #[test]
    fn late_directive() {
        let err = read_instance_str("a\n%secondary s\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, ReadErrorKind::LateDirective(_)));
    }

    #[test]
    fn duplicate_label_in_row() {
        let err = read_instance_str("a a\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(matches!(
            err.kind,
            ReadErrorKind::Model(ModelError::DuplicateLabelInRow(_))
        ));
    }

    #[test]
    fn empty_input_is_an_empty_instance() {
        let inst = read_instance_str("").unwrap();
        assert_eq!(inst.row_count(), 0);
    }

    #[test]
    fn invalid_utf8_reports_line() {
        let err = read_instance(&b"a\nb\n\xff\xfe"[..]).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, ReadErrorKind::NotUtf8));
    }

    #[test]
    fn parser_is_total_on_arbitrary_bytes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xf422);
        // weighted toward the bytes the grammar cares about
        let alphabet: &[u8] = b"%#ab \t\n\r\xff\xc3secondary primary";
        for _ in 0..2000 {
            let len = rng.random_range(0..64);
            let bytes: Vec<u8> = (0..len)
                .map(|_| {
                    if rng.random_bool(0.7) {
                        alphabet[rng.random_range(0..alphabet.len())]
                    } else {
                        rng.random()
                    }
                })
                .collect();
            // must never panic; any diagnostic carries a line number
            match read_instance(&bytes[..]) {
                Ok(_) => {}
                Err(e) => {
                    let _ = e.to_string();
                }
            }
        }
    }

    #[test]
    fn round_trip_identity() {
        let text = "%secondary s t\na b s\nc t\nb c\n";
        let inst = read_instance_str(text).unwrap();
        assert_eq!(instance_to_string(&inst), text);
        assert_eq!(read_instance_str(&instance_to_string(&inst)).unwrap(), inst);
        let mut bytes = Vec::new();
        write_instance(&inst, &mut bytes).unwrap();
        assert_eq!(bytes, text.as_bytes());
    }

    #[test]
    fn latin_listing_round_trips_byte_for_byte() {
        // Candidate rows of the cyclic normalized 4×4 Latin square; a
        // parsed file with no directives writes back exactly.
        let mut listing = String::new();
        for i in 1..=4u32 {
            for j in 1..=4u32 {
                let v = (i + j - 2) % 4 + 1;
                listing.push_str(&format!("{i}{j} R{i}N{v} C{j}N{v}\n"));
            }
        }
        let inst = read_instance_str(&listing).unwrap();
        assert_eq!(inst.row_count(), 16);
        assert_eq!(inst.column_count(), 48);
        assert_eq!(instance_to_string(&inst), listing);
    }

    #[test]
    fn round_trip_orphan_primary() {
        // The orphan forces an explicit column order, and "a" joins it.
        let inst = read_instance_str("%primary p\na\n").unwrap();
        assert_eq!(instance_to_string(&inst), "%primary p a\na\n");
        assert_eq!(read_instance_str(&instance_to_string(&inst)).unwrap(), inst);
    }

    #[test]
    fn round_trip_interleaved_declarations() {
        // Legal through the API but not expressible without directives:
        // a primary column ordered before a secondary one.
        let mut inst = Instance::new();
        inst.add_row(["a"]).unwrap();
        inst.declare_secondary(["s"]).unwrap();
        inst.add_row(["b", "s"]).unwrap();
        let text = instance_to_string(&inst);
        assert_eq!(text, "%primary a\n%secondary s\na\nb s\n");
        assert_eq!(read_instance_str(&text).unwrap(), inst);
    }

    #[test]
    fn empty_instance_writes_nothing() {
        assert_eq!(instance_to_string(&Instance::new()), "");
    }

    #[test]
    fn solution_report_format() {
        let inst = read_instance_str("a\nb\n").unwrap();
        let report = write_solution(&inst, &[RowId::new(1), RowId::new(2)], 1);
        assert_eq!(report, "SOLUTION 1\na\nb\n");
        assert_eq!(write_solution(&inst, &[], 7), "SOLUTION 7\n");
    }

    #[test]
    fn stats_format() {
        let stats = SearchStats {
            updates_per_level: vec![3],
            total_updates: 3,
            solutions_found: 1,
            max_depth: 1,
            wall_time: Duration::from_micros(500),
            halted_by: HaltReason::Exhausted,
        };
        let text = write_stats(&stats);
        assert!(text.contains("solutions 1\n"));
        assert!(text.contains("total_updates 3\n"));
        assert!(text.contains("level 0 3\n"));
        assert!(text.contains("halted_by exhausted\n"));

        let halted = SearchStats { halted_by: HaltReason::SolutionLimit, ..stats };
        assert!(write_stats(&halted).contains("halted_by solution_limit\n"));
    }
}
