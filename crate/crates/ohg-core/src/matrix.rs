//! Small dense integer matrices with exact arithmetic.
//!
//! Every matrix identity in this crate is an integer statement, so identity
//! checks are exact equality on [`IntMatrix`]; floating point only enters
//! through the eigensolver in [`crate::spectrum`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Row-major dense matrix over `i64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// The all-ones matrix J.
    pub fn ones(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![1; rows * cols],
        }
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let mut m = IntMatrix::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn from_rows(data: &[Vec<i64>]) -> Result<Self, Error> {
        let rows = data.len();
        let cols = data.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(rows * cols);
        for (i, row) in data.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRows {
                    row: i,
                    len: row.len(),
                    expected: cols,
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn add_to(&mut self, row: usize, col: usize, delta: i64) {
        self.entries[row * self.cols + col] += delta;
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.add_to(i, j, a * rhs.get(k, j));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &IntMatrix) -> Result<IntMatrix, Error> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix, Error> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &IntMatrix,
        op: &'static str,
        f: impl Fn(i64, i64) -> i64,
    ) -> Result<IntMatrix, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                op,
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| c * x).collect(),
        }
    }

    pub fn trace(&self) -> Result<i64, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// First entry where the two matrices differ, for failure reports.
    pub fn first_difference(&self, rhs: &IntMatrix) -> Option<(usize, usize)> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != rhs.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// One row per line, entries space-separated.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            let mut first = true;
            for j in 0..self.cols {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
                first = false;
            }
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn render(&self) -> String {
        use alloc::string::ToString;
        self.to_string()
    }
}
