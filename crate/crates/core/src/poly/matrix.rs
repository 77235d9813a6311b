use std::collections::HashMap;

use super::MPoly;
use crate::error::{Error, Result};
use crate::field::Field;

/// Largest size accepted by [`PolyMatrix::determinant`].
pub const MAX_DET_SIZE: usize = 6;

/// Dense row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MPoly>) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<MPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    fn field(&self) -> Field {
        self.entries
            .iter()
            .map(|e| e.field().clone())
            .reduce(|a, b| super::join_fields(&a, &b))
            .expect("nonempty")
    }

    /// Exact determinant by Laplace expansion along successive rows, memoizing
    /// minors by their column set.
    pub fn determinant(&self) -> Result<MPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(Error::MatrixTooLarge(n));
        }
        let field = self.field();
        let mut memo: HashMap<u32, MPoly> = HashMap::new();
        Ok(self.minor((1u32 << n) - 1, &field, &mut memo))
    }

    /// Determinant of the trailing `popcount(cols)` rows restricted to `cols`.
    fn minor(&self, cols: u32, field: &Field, memo: &mut HashMap<u32, MPoly>) -> MPoly {
        let k = cols.count_ones() as usize;
        if k == 0 {
            return MPoly::one(field);
        }
        if let Some(m) = memo.get(&cols) {
            return m.clone();
        }
        let row = self.rows - k;
        let mut acc = MPoly::zero(field);
        let mut sign_neg = false;
        for j in 0..self.cols {
            if cols & (1 << j) == 0 {
                continue;
            }
            let e = self.get(row, j);
            if !e.is_zero() {
                let sub = self.minor(cols & !(1 << j), field, memo);
                if !sub.is_zero() {
                    let t = e * &sub;
                    acc = if sign_neg { &acc - &t } else { &acc + &t };
                }
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}

/// Determinant of the 5x5 matrix with rows
/// `[a0,a1,a2,a3,0]`, `[0,a0,a1,a2,a3]`, `[3a0,2a1,a2,0,0]`,
/// `[0,3a0,2a1,a2,0]`, `[0,0,3a0,2a1,a2]`: the resultant of the cubic
/// `a0 s^3 + a1 s^2 + a2 s + a3` and its derivative in `s`.
pub fn cubic_resultant(a0: &MPoly, a1: &MPoly, a2: &MPoly, a3: &MPoly) -> MPoly {
    let field = super::join_fields(
        &super::join_fields(a0.field(), a1.field()),
        &super::join_fields(a2.field(), a3.field()),
    );
    let z = MPoly::zero(&field);
    let three_a0 = a0 * &MPoly::int(3, &field);
    let two_a1 = a1 * &MPoly::int(2, &field);
    let m = PolyMatrix::from_rows(vec![
        vec![a0.clone(), a1.clone(), a2.clone(), a3.clone(), z.clone()],
        vec![z.clone(), a0.clone(), a1.clone(), a2.clone(), a3.clone()],
        vec![three_a0.clone(), two_a1.clone(), a2.clone(), z.clone(), z.clone()],
        vec![z.clone(), three_a0.clone(), two_a1.clone(), a2.clone(), z.clone()],
        vec![z.clone(), z.clone(), three_a0, two_a1, a2.clone()],
    ]);
    m.determinant().expect("5x5 is square")
}
