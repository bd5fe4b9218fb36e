use std::fmt;

use serde::Serialize;

use crate::arith::QuadraticNumber;
use crate::iet::IetParameters;

use super::SubstError;

/// A non-negative integer matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IncidenceMatrix {
    rows: Vec<Vec<i64>>,
}

impl IncidenceMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, SubstError> {
        let width = rows.first().map_or(0, Vec::len);
        if let Some(row) = rows.iter().find(|r| r.len() != width) {
            return Err(SubstError::DimensionMismatch {
                expected: width,
                found: row.len(),
            });
        }
        if rows.iter().flatten().any(|&x| x < 0) {
            return Err(SubstError::NegativeEntry);
        }
        Ok(IncidenceMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i64).collect())
            .collect();
        IncidenceMatrix { rows }
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.rows.clone()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn is_square(&self) -> bool {
        self.row_count() == self.col_count()
    }

    fn expect_square(&self) -> Result<usize, SubstError> {
        if self.is_square() {
            Ok(self.row_count())
        } else {
            Err(SubstError::NotSquare {
                rows: self.row_count(),
                cols: self.col_count(),
            })
        }
    }

    pub fn mul(&self, other: &IncidenceMatrix) -> Result<IncidenceMatrix, SubstError> {
        if self.col_count() != other.row_count() {
            return Err(SubstError::DimensionMismatch {
                expected: self.col_count(),
                found: other.row_count(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                (0..other.col_count())
                    .map(|j| row.iter().zip(&other.rows).map(|(a, r)| a * r[j]).sum())
                    .collect()
            })
            .collect();
        Ok(IncidenceMatrix { rows })
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let rows = (0..self.col_count())
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        IncidenceMatrix { rows }
    }

    pub fn trace(&self) -> Result<i128, SubstError> {
        let n = self.expect_square()?;
        Ok((0..n).map(|i| self.rows[i][i] as i128).sum())
    }

    /// Exact determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Result<i128, SubstError> {
        self.expect_square()?;
        let rows: Vec<Vec<i128>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        Ok(cofactor_det(&rows))
    }

    /// `M^k > 0` for some `k ≤ (m−1)² + 1`.
    pub fn is_primitive(&self) -> Result<bool, SubstError> {
        let m = self.expect_square()?;
        if m == 0 {
            return Ok(false);
        }
        // Positivity of M^k depends only on the zero pattern of M.
        let pattern: Vec<Vec<bool>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| x > 0).collect())
            .collect();
        let mut power = pattern.clone();
        let bound = (m - 1) * (m - 1) + 1;
        for _ in 1..=bound {
            if power.iter().flatten().all(|&x| x) {
                return Ok(true);
            }
            power = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| (0..m).any(|k| power[i][k] && pattern[k][j]))
                        .collect()
                })
                .collect();
        }
        Ok(false)
    }

    /// `M·t` with `t = (1−ε, 1−2ε, −ε)`.
    pub fn translation_image(
        &self,
        params: &IetParameters,
    ) -> Result<[QuadraticNumber; 3], SubstError> {
        self.apply_to_column(&params.translations())
    }

    /// `M·x` for a column vector of length 3.
    pub fn apply_to_column(
        &self,
        x: &[QuadraticNumber; 3],
    ) -> Result<[QuadraticNumber; 3], SubstError> {
        if self.row_count() != 3 || self.col_count() != 3 {
            return Err(SubstError::DimensionMismatch {
                expected: 3,
                found: self.row_count().max(self.col_count()),
            });
        }
        Ok(std::array::from_fn(|i| {
            self.rows[i]
                .iter()
                .zip(x)
                .map(|(&m, t)| t.scale_int(m))
                .sum()
        }))
    }
}

pub(crate) fn cofactor_det(rows: &[Vec<i128>]) -> i128 {
    match rows.len() {
        0 => 1,
        1 => rows[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * rows[0][j] * cofactor_det(&minor)
            })
            .sum(),
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{row:?}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
