use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Rational, Vector};

/// Square matrix of exact rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Rational>>,
}

impl Matrix {
    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { rows }
    }

    pub fn from_columns(columns: Vec<Vector>) -> Self {
        let n = columns.len();
        let rows = (0..n)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Matrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x * factor).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim();
        Matrix {
            rows: (0..n)
                .map(|j| (0..n).map(|i| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        Vector::new(
            self.rows
                .iter()
                .map(|r| {
                    r.iter()
                        .zip(v.coords())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(Rational::zero(), |acc, k| {
                            acc + &self.rows[i][k] * &other.rows[k][j]
                        })
                    })
                    .collect()
            })
            .collect();
        Matrix { rows }
    }

    pub fn determinant(&self) -> Rational {
        let n = self.dim();
        let mut a = self.rows.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in (col + 1)..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &p;
                let (upper, lower) = a.split_at_mut(r);
                for (target, pivot) in lower[0][col..n].iter_mut().zip(&upper[col][col..n]) {
                    *target -= &f * pivot;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim();
        let mut aug: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        let pivots = rref(&mut aug, n);
        if pivots.len() < n {
            return None;
        }
        Some(Matrix {
            rows: aug.into_iter().map(|r| r[n..].to_vec()).collect(),
        })
    }

    /// Unique solution of `self·x = rhs`, if the matrix is invertible.
    pub fn solve(&self, rhs: &Vector) -> Option<Vector> {
        let n = self.dim();
        let mut aug: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .zip(rhs.coords())
            .map(|(r, b)| {
                let mut row = r.clone();
                row.push(b.clone());
                row
            })
            .collect();
        let pivots = rref(&mut aug, n);
        if pivots.len() < n {
            return None;
        }
        Some(Vector::new(aug.into_iter().map(|r| r[n].clone()).collect()))
    }
}

/// Reduced row echelon form over the first `cols` columns, in place.
/// Returns the pivot column of each nonzero row.
pub(crate) fn rref(a: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, row);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..a[r].len() {
                    let delta = &f * &a[row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solves a (possibly rectangular) system `rows·x = rhs` with `cols`
/// unknowns. Returns a particular solution and a basis of the homogeneous
/// solution space, or `None` when the system is inconsistent.
pub fn solve_general(
    rows: &[Vec<Rational>],
    rhs: &[Rational],
    cols: usize,
) -> Option<(Vector, Vec<Vector>)> {
    let mut aug: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug, cols);
    if aug[pivots.len()..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut particular = alloc::vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][cols].clone();
    }
    let basis = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = alloc::vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -aug[r][free].clone();
            }
            Vector::new(v)
        })
        .collect();
    Some((Vector::new(particular), basis))
}

/// Basis of `{x : rows·x = 0}` with `cols` unknowns.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vector> {
    let zeros = alloc::vec![Rational::zero(); rows.len()];
    match solve_general(rows, &zeros, cols) {
        Some((_, basis)) => basis,
        None => Vec::new(),
    }
}
