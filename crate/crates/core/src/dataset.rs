//! Column-oriented sample matrices with per-column discrete/continuous tags.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{invalid_data, Error, Result};
use crate::graph::VariableId;

/// Kind tag of a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnKind {
    /// Dense category codes in `0..cardinality`.
    Discrete { cardinality: u32 },
    Continuous,
}

impl ColumnKind {
    pub fn is_discrete(self) -> bool {
        matches!(self, ColumnKind::Discrete { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Column {
    Discrete { codes: Vec<u32>, cardinality: u32 },
    Continuous(Vec<f64>),
}

impl Column {
    pub fn discrete(codes: Vec<u32>, cardinality: u32) -> Self {
        Column::Discrete { codes, cardinality }
    }

    /// Discrete column whose cardinality is one past its largest code.
    pub fn discrete_auto(codes: Vec<u32>) -> Self {
        let cardinality = codes.iter().copied().max().map_or(1, |m| m + 1);
        Column::Discrete { codes, cardinality }
    }

    pub fn continuous(values: Vec<f64>) -> Self {
        Column::Continuous(values)
    }

    pub fn kind(&self) -> ColumnKind {
        match self {
            Column::Discrete { cardinality, .. } => ColumnKind::Discrete {
                cardinality: *cardinality,
            },
            Column::Continuous(_) => ColumnKind::Continuous,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Column::Discrete { codes, .. } => codes.len(),
            Column::Continuous(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Value of row `r` as a real number (category codes are cast).
    #[inline]
    pub fn value(&self, r: usize) -> f64 {
        match self {
            Column::Discrete { codes, .. } => codes[r] as f64,
            Column::Continuous(v) => v[r],
        }
    }
}

/// `N` i.i.d. samples of `D` variables, stored by column.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    names: Vec<String>,
    columns: Vec<Column>,
    n_samples: usize,
}

impl Dataset {
    /// Builds a dataset with default names `x0, x1, ...`.
    pub fn new(columns: Vec<Column>) -> Result<Self> {
        let names = (0..columns.len()).map(|i| format!("x{i}")).collect();
        Self::with_names(names, columns)
    }

    pub fn with_names(names: Vec<String>, columns: Vec<Column>) -> Result<Self> {
        if columns.is_empty() {
            return Err(invalid_data("dataset needs at least one column"));
        }
        if names.len() != columns.len() {
            return Err(Error::DimensionMismatch {
                expected: columns.len(),
                found: names.len(),
            });
        }
        let n = columns[0].len();
        if n == 0 {
            return Err(invalid_data("dataset needs at least one sample"));
        }
        for (c, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(invalid_data(format!(
                    "column {c} has {} rows, expected {n}",
                    col.len()
                )));
            }
            match col {
                Column::Discrete { codes, cardinality } => {
                    if let Some(&bad) = codes.iter().find(|&&v| v >= *cardinality) {
                        return Err(invalid_data(format!(
                            "column {c}: code {bad} not below cardinality {cardinality}"
                        )));
                    }
                }
                Column::Continuous(v) => {
                    if let Some(r) = v.iter().position(|x| !x.is_finite()) {
                        return Err(invalid_data(format!(
                            "column {c}: non-finite value at row {r}"
                        )));
                    }
                }
            }
        }
        Ok(Self {
            names,
            columns,
            n_samples: n,
        })
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn n_vars(&self) -> usize {
        self.columns.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, v: VariableId) -> Result<&Column> {
        self.columns.get(v).ok_or(Error::IndexOutOfRange {
            index: v,
            d: self.columns.len(),
        })
    }

    pub fn kind(&self, v: VariableId) -> Result<ColumnKind> {
        self.column(v).map(Column::kind)
    }

    /// Replaces every continuous column by its min-rank transform
    /// (number of strictly smaller values). Ties keep equal ranks, so
    /// zero-distance structure is preserved.
    pub fn rank_transformed(&self) -> Self {
        let columns = self
            .columns
            .iter()
            .map(|col| match col {
                Column::Continuous(v) => Column::Continuous(min_ranks(v)),
                other => other.clone(),
            })
            .collect();
        Self {
            names: self.names.clone(),
            columns,
            n_samples: self.n_samples,
        }
    }
}

fn min_ranks(v: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
    let mut ranks = alloc::vec![0.0; v.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && v[order[end]] == v[order[start]] {
            end += 1;
        }
        for &idx in &order[start..end] {
            ranks[idx] = start as f64;
        }
        start = end;
    }
    ranks
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_ragged_and_bad_codes() {
        let r = Dataset::new(vec![
            Column::discrete(vec![0, 1], 2),
            Column::discrete(vec![0], 2),
        ]);
        assert!(matches!(r, Err(Error::InvalidData(_))));
        let r = Dataset::new(vec![Column::discrete(vec![0, 2], 2)]);
        assert!(matches!(r, Err(Error::InvalidData(_))));
        let r = Dataset::new(vec![Column::continuous(vec![0.0, f64::NAN])]);
        assert!(matches!(r, Err(Error::InvalidData(_))));
        assert!(Dataset::new(vec![]).is_err());
        assert!(Dataset::new(vec![Column::continuous(vec![])]).is_err());
    }

    #[test]
    fn rank_transform_keeps_ties() {
        let ds = Dataset::new(vec![
            Column::continuous(vec![3.5, -1.0, 3.5, 10.0]),
            Column::discrete(vec![1, 0, 1, 0], 2),
        ])
        .unwrap();
        let r = ds.rank_transformed();
        assert_eq!(r.columns()[0], Column::continuous(vec![1.0, 0.0, 1.0, 3.0]));
        assert_eq!(r.columns()[1], ds.columns()[1]);
    }
}
