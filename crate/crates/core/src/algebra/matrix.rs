//! Dense matrices over GF(p) and incremental row reduction.

use super::field::FieldSpec;

/// Row-major dense matrix with entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<u32>>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            field,
            cols,
            rows: vec![vec![0; cols]; rows],
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { field, cols, rows }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.rows[i][j] = v;
    }

    /// `y * self` for a row vector `y`.
    pub fn left_mul(&self, y: &[u32]) -> Vec<u32> {
        assert_eq!(y.len(), self.rows.len());
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (&c, row) in y.iter().zip(&self.rows) {
            if c == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, r));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut reducer = RowReducer::new(self.field, self.cols);
        self.rows.iter().filter(|r| reducer.insert(r)).count()
    }
}

/// Keeps an echelon basis of the rows seen so far.
#[derive(Debug, Clone)]
pub struct RowReducer {
    field: FieldSpec,
    /// Basis rows, each normalized to 1 at its pivot column.
    basis: Vec<(usize, Vec<u32>)>,
    cols: usize,
}

impl RowReducer {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        Self {
            field,
            basis: Vec::new(),
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `row` against the basis; returns `true` (and extends the
    /// basis) iff the row is not in the span of the rows inserted so far.
    pub fn insert(&mut self, row: &[u32]) -> bool {
        assert_eq!(row.len(), self.cols);
        let f = self.field;
        let mut v = row.to_vec();
        for (pivot, b) in &self.basis {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pivot]).expect("pivot is nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // keep earlier basis rows reduced at the new pivot
        for (_, b) in self.basis.iter_mut() {
            let c = b[pivot];
            if c == 0 {
                continue;
            }
            for (x, &y) in b.iter_mut().zip(&v) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        self.basis.push((pivot, v));
        true
    }
}
