//! The exact cover instance: labeled columns (primary or secondary) and
//! rows referencing them.
//!
//! An [`Instance`] is a sparse incidence matrix. Each row stands for one
//! candidate subset; each column stands for one constraint. Primary columns
//! must be covered exactly once by a solution, secondary columns at most
//! once. Instances are immutable once built and may be shared freely
//! between concurrent searches.

use std::collections::HashMap;
use std::fmt;

/// Whether a column must be covered exactly once or at most once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnKind {
    Primary,
    Secondary,
}

/// 1-based ordinal of a row, assigned in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowId(u32);

impl RowId {
    /// Wraps a 1-based row number. Panics on 0.
    pub fn new(id: u32) -> RowId {
        assert!(id >= 1, "row ids are 1-based");
        RowId(id)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub(crate) fn from_index(index: usize) -> RowId {
        RowId(index as u32 + 1)
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for RowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("column `{0}` is already declared")]
    DuplicateColumn(String),
    #[error("column `{0}` is already used by a row; secondary columns must be declared before the rows that mention them")]
    LateDeclaration(String),
    #[error("a row must reference at least one column")]
    EmptyRow,
    #[error("label `{0}` appears twice in one row")]
    DuplicateLabelInRow(String),
    #[error("invalid column label `{0:?}`: labels are non-empty, contain no whitespace and do not start with `#` or `%`")]
    InvalidLabel(String),
}

/// Non-fatal findings reported by [`Instance::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// A primary column that appears in no row; the instance is legal but
    /// has no solutions.
    UncoverablePrimary(String),
    /// Two rows reference exactly the same column set.
    DuplicateRow(RowId, RowId),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::UncoverablePrimary(label) => {
                write!(f, "primary column `{label}` appears in no row")
            }
            Warning::DuplicateRow(a, b) => write!(f, "rows {a} and {b} are identical"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Column {
    label: String,
    kind: ColumnKind,
}

/// A sparse exact cover instance.
///
/// Columns are created either by [`declare_secondary`](Instance::declare_secondary)
/// or implicitly by [`add_row`](Instance::add_row), which registers unseen
/// labels as primary columns. Column ordinals follow first-appearance order
/// and determine the solver's deterministic tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Instance {
    columns: Vec<Column>,
    index: HashMap<String, u32>,
    rows: Vec<Vec<u32>>,
    node_count: u64,
}

fn check_label(label: &str) -> Result<(), ModelError> {
    if label.is_empty()
        || label.chars().any(char::is_whitespace)
        || label.starts_with('#')
        || label.starts_with('%')
    {
        return Err(ModelError::InvalidLabel(label.to_string()));
    }
    Ok(())
}

impl Instance {
    pub fn new() -> Instance {
        Instance::default()
    }

    /// Registers columns that may be covered at most once.
    ///
    /// Must run before any row mentioning these labels; labels already used
    /// by a row yield [`ModelError::LateDeclaration`], labels declared twice
    /// yield [`ModelError::DuplicateColumn`]. The instance is unchanged on
    /// error.
    pub fn declare_secondary<I, S>(&mut self, labels: I) -> Result<(), ModelError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.declare(labels, ColumnKind::Secondary)
    }

    /// Registers primary columns ahead of any row.
    ///
    /// Rows register unseen labels as primary columns on their own; this is
    /// only needed to pin column order explicitly or to build a primary
    /// column that no row covers.
    pub fn declare_primary<I, S>(&mut self, labels: I) -> Result<(), ModelError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.declare(labels, ColumnKind::Primary)
    }

    fn declare<I, S>(&mut self, labels: I, kind: ColumnKind) -> Result<(), ModelError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_string()).collect();
        let mut used_by_row = vec![false; self.columns.len()];
        for row in &self.rows {
            for &c in row {
                used_by_row[c as usize] = true;
            }
        }
        for (i, label) in labels.iter().enumerate() {
            check_label(label)?;
            if labels[..i].contains(label) {
                return Err(ModelError::DuplicateColumn(label.clone()));
            }
            if let Some(&ord) = self.index.get(label) {
                // Declaring over a column a row already made is a late
                // declaration; re-declaring an explicit column is a duplicate.
                let late = kind == ColumnKind::Secondary
                    && self.columns[ord as usize].kind == ColumnKind::Primary
                    && used_by_row[ord as usize];
                return Err(if late {
                    ModelError::LateDeclaration(label.clone())
                } else {
                    ModelError::DuplicateColumn(label.clone())
                });
            }
        }
        for label in labels {
            self.push_column(label, kind);
        }
        Ok(())
    }

    /// Appends a row referencing the given columns; unseen labels are
    /// registered as primary columns in order of appearance.
    ///
    /// Returns the row's 1-based id. The instance is unchanged on error.
    pub fn add_row<I, S>(&mut self, labels: I) -> Result<RowId, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_string()).collect();
        if labels.is_empty() {
            return Err(ModelError::EmptyRow);
        }
        for (i, label) in labels.iter().enumerate() {
            check_label(label)?;
            if labels[..i].contains(label) {
                return Err(ModelError::DuplicateLabelInRow(label.clone()));
            }
        }
        let row: Vec<u32> = labels
            .into_iter()
            .map(|label| match self.index.get(&label) {
                Some(&ord) => ord,
                None => self.push_column(label, ColumnKind::Primary),
            })
            .collect();
        self.node_count += row.len() as u64;
        self.rows.push(row);
        Ok(RowId::from_index(self.rows.len() - 1))
    }

    fn push_column(&mut self, label: String, kind: ColumnKind) -> u32 {
        let ord = self.columns.len() as u32;
        self.index.insert(label.clone(), ord);
        self.columns.push(Column { label, kind });
        ord
    }

    /// Reports uncoverable primary columns and duplicate rows. Neither is an
    /// error: the exact cover semantics stay well defined.
    pub fn validate(&self) -> Vec<Warning> {
        let mut warnings = Vec::new();
        let mut row_count = vec![0u32; self.columns.len()];
        for row in &self.rows {
            for &c in row {
                row_count[c as usize] += 1;
            }
        }
        for (ord, column) in self.columns.iter().enumerate() {
            if column.kind == ColumnKind::Primary && row_count[ord] == 0 {
                warnings.push(Warning::UncoverablePrimary(column.label.clone()));
            }
        }
        let mut seen: HashMap<Vec<u32>, RowId> = HashMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut key = row.clone();
            key.sort_unstable();
            let id = RowId::from_index(i);
            match seen.get(&key) {
                Some(&first) => warnings.push(Warning::DuplicateRow(first, id)),
                None => {
                    seen.insert(key, id);
                }
            }
        }
        warnings
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Total number of (row, column) incidences.
    pub fn node_count(&self) -> u64 {
        self.node_count
    }

    pub fn has_secondary(&self) -> bool {
        self.columns.iter().any(|c| c.kind == ColumnKind::Secondary)
    }

    /// Label of the column with the given ordinal.
    pub fn column_label(&self, ord: u32) -> &str {
        &self.columns[ord as usize].label
    }

    pub fn column_kind(&self, ord: u32) -> ColumnKind {
        self.columns[ord as usize].kind
    }

    /// Ordinal of the column with the given label, if declared.
    pub fn column_ordinal(&self, label: &str) -> Option<u32> {
        self.index.get(label).copied()
    }

    /// Columns in ordinal (first-appearance) order.
    pub fn columns(&self) -> impl Iterator<Item = (&str, ColumnKind)> {
        self.columns.iter().map(|c| (c.label.as_str(), c.kind))
    }

    pub fn row_ids(&self) -> impl Iterator<Item = RowId> {
        (0..self.rows.len()).map(RowId::from_index)
    }

    /// Panics if `id` exceeds the row count.
    pub fn row_columns(&self, id: RowId) -> &[u32] {
        &self.rows[id.index()]
    }

    pub fn contains_row(&self, id: RowId) -> bool {
        id.index() < self.rows.len()
    }

    /// The row's column labels in declaration order.
    pub fn row_labels(&self, id: RowId) -> impl Iterator<Item = &str> {
        self.rows[id.index()].iter().map(|&c| self.column_label(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_instance() {
        let inst = Instance::new();
        assert_eq!(inst.column_count(), 0);
        assert_eq!(inst.row_count(), 0);
        assert_eq!(inst.node_count(), 0);
    }

    #[test]
    fn add_row_counts_nodes() {
        let mut inst = Instance::new();
        inst.add_row(["a", "b"]).unwrap();
        assert_eq!(inst.node_count(), 2);
        assert_eq!(inst.column_count(), 2);
    }

    #[test]
    fn secondary_then_row() {
        let mut inst = Instance::new();
        inst.declare_secondary(["d"]).unwrap();
        inst.add_row(["a", "d"]).unwrap();
        assert_eq!(inst.column_count(), 2);
        assert_eq!(inst.column_kind(inst.column_ordinal("a").unwrap()), ColumnKind::Primary);
        assert_eq!(inst.column_kind(inst.column_ordinal("d").unwrap()), ColumnKind::Secondary);
    }

    #[test]
    fn declare_secondary_order() {
        let mut inst = Instance::new();
        inst.declare_secondary(["A2", "B5"]).unwrap();
        let kinds: Vec<_> = inst.columns().collect();
        assert_eq!(kinds, vec![("A2", ColumnKind::Secondary), ("B5", ColumnKind::Secondary)]);
    }

    #[test]
    fn duplicate_secondary_declaration() {
        let mut inst = Instance::new();
        inst.declare_secondary(["s"]).unwrap();
        assert_eq!(
            inst.declare_secondary(["s"]),
            Err(ModelError::DuplicateColumn("s".into()))
        );
    }

    #[test]
    fn late_secondary_declaration() {
        let mut inst = Instance::new();
        inst.add_row(["A2"]).unwrap();
        assert_eq!(
            inst.declare_secondary(["A2"]),
            Err(ModelError::LateDeclaration("A2".into()))
        );
    }

    #[test]
    fn first_paper_row() {
        let mut inst = Instance::new();
        let id = inst.add_row(["11", "R1N1", "C1N1"]).unwrap();
        assert_eq!(id, RowId::new(1));
        assert_eq!(inst.column_count(), 3);
        assert!(inst.columns().all(|(_, kind)| kind == ColumnKind::Primary));
    }

    #[test]
    fn row_errors() {
        let mut inst = Instance::new();
        assert_eq!(inst.add_row::<_, &str>([]), Err(ModelError::EmptyRow));
        assert_eq!(
            inst.add_row(["a", "a"]),
            Err(ModelError::DuplicateLabelInRow("a".into()))
        );
        // A failed add_row must not leak columns.
        assert_eq!(inst.column_count(), 0);
        assert_eq!(inst.row_count(), 0);
    }

    #[test]
    fn invalid_labels() {
        let mut inst = Instance::new();
        for bad in ["", "a b", "a\tb", "a\nb", "#x", "%secondary"] {
            assert_eq!(
                inst.add_row([bad]),
                Err(ModelError::InvalidLabel(bad.into())),
                "label {bad:?}"
            );
        }
        assert!(inst.add_row(["a#b", "a%b"]).is_ok());
    }

    #[test]
    fn validate_clean() {
        let mut inst = Instance::new();
        inst.add_row(["a", "b"]).unwrap();
        inst.add_row(["c"]).unwrap();
        assert!(inst.validate().is_empty());
    }

    #[test]
    fn validate_ignores_unused_secondary() {
        let mut inst = Instance::new();
        inst.declare_secondary(["s"]).unwrap();
        inst.add_row(["a"]).unwrap();
        assert!(inst.validate().is_empty());
    }

    #[test]
    fn validate_uncoverable_primary() {
        let mut inst = Instance::new();
        inst.declare_primary(["p"]).unwrap();
        inst.add_row(["a"]).unwrap();
        assert_eq!(inst.validate(), vec![Warning::UncoverablePrimary("p".into())]);
    }

    #[test]
    fn declare_primary_conflicts() {
        let mut inst = Instance::new();
        inst.add_row(["a"]).unwrap();
        assert_eq!(
            inst.declare_primary(["a"]),
            Err(ModelError::DuplicateColumn("a".into()))
        );
    }

    #[test]
    fn validate_duplicate_rows() {
        let mut inst = Instance::new();
        inst.add_row(["a", "b"]).unwrap();
        inst.add_row(["a", "b"]).unwrap();
        assert_eq!(
            inst.validate(),
            vec![Warning::DuplicateRow(RowId::new(1), RowId::new(2))]
        );
        // Same column set in a different label order still counts.
        inst.add_row(["b", "a"]).unwrap();
        assert_eq!(inst.validate().len(), 2);
    }

    #[test]
    fn node_count_is_sum_of_row_sizes() {
        let mut inst = Instance::new();
        inst.add_row(["a", "b", "c"]).unwrap();
        inst.add_row(["a"]).unwrap();
        inst.add_row(["b", "c"]).unwrap();
        let total: u64 = inst.row_ids().map(|r| inst.row_columns(r).len() as u64).sum();
        assert_eq!(inst.node_count(), total);
        assert_eq!(inst.node_count(), 6);
    }

    #[test]
    fn deterministic_reconstruction() {
        let build = || {
            let mut inst = Instance::new();
            inst.declare_secondary(["s", "t"]).unwrap();
            inst.add_row(["a", "s"]).unwrap();
            inst.add_row(["b", "t", "a"]).unwrap();
            inst
        };
        assert_eq!(build(), build());
    }
}
