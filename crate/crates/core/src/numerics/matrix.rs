use super::NumericsError;

/// Row-major dense real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self, NumericsError> {
        if rows == 0 || cols == 0 {
            return Err(NumericsError::DimensionMismatch(format!(
                "matrix must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(NumericsError::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(NumericsError::InvalidArgument("matrix entries must be finite".into()));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, NumericsError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(NumericsError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn from_columns(columns: &[Vec<f64>]) -> Result<Self, NumericsError> {
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(NumericsError::DimensionMismatch("ragged columns".into()));
        }
        let mut entries = Vec::with_capacity(rows * columns.len());
        for i in 0..rows {
            entries.extend(columns.iter().map(|c| c[i]));
        }
        Self::new(rows, columns.len(), entries)
    }

    /// # Panics
    /// If `n` is 0.
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "identity matrix must be at least 1x1");
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
        }
        Self { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            entries.extend((0..self.rows).map(|r| self.get(r, c)));
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> DenseMatrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        DenseMatrix {
            rows: rows.len(),
            cols: self.cols,
            entries,
        }
    }

    /// Drops one column.
    pub fn without_column(&self, col: usize) -> DenseMatrix {
        let cols = self.cols - 1;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            let row = self.row(r);
            entries.extend_from_slice(&row[..col]);
            entries.extend_from_slice(&row[col + 1..]);
        }
        DenseMatrix {
            rows: self.rows,
            cols,
            entries,
        }
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum()
    }
}
