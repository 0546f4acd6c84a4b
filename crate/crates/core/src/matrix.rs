//! Small dense matrices over a field, with exact rank.

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::ff::{FieldCtx, FieldElement};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>, // row-major
}

impl Matrix {
    pub fn zeros(ctx: FieldCtx, rows: usize, cols: usize) -> Self {
        Matrix {
            ctx,
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m[(i, i)] = ctx.one();
        }
        m
    }

    pub fn from_rows(ctx: FieldCtx, rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            ctx,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn scale(&self, s: FieldElement) -> Matrix {
        Matrix {
            data: self.data.iter().map(|&a| a * s).collect(),
            ..self.clone()
        }
    }

    /// Entries raised to the p^k-th power.
    pub fn frobenius_twist(&self, k: u32) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a.frobenius_pow(k)).collect(),
            ..self.clone()
        }
    }

    /// Rank by Gaussian elimination over the exact field.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m[(rank, col)].inv().expect("nonzero pivot");
            for r in rank + 1..m.rows {
                let factor = m[(r, col)] * inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m[(rank, c)];
                    m[(r, c)] -= factor * v;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        &mut self.data[i * self.cols + j]
    }
}

/// Serialised as nested rows of element strings.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|a| a.to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let f = FieldCtx::prime(5).unwrap();
        let e = |v: i64| f.from_i64(v);
        let m = Matrix::from_rows(f, vec![vec![e(1), e(2)], vec![e(2), e(4)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(Matrix::identity(f, 3).rank(), 3);
        assert_eq!(Matrix::zeros(f, 2, 2).rank(), 0);
        let n = Matrix::from_rows(f, vec![vec![e(0), e(1)], vec![e(0), e(0)]]);
        assert_eq!(n.rank(), 1);
        assert_eq!(n.mul(&n).rank(), 0);
        assert_eq!(n.transpose()[(1, 0)], e(1));
    }

    /// Rank against brute force: the number of distinct images of all vectors is q^rank.
    #[test]
    fn rank_matches_image_count() {
        let f = FieldCtx::prime(3).unwrap();
        let mut seed = 7u64;
        for _ in 0..200 {
            let rows: Vec<Vec<_>> = (0..3)
                .map(|_| {
                    (0..3)
                        .map(|_| {
                            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                            f.from_u64((seed >> 40) % 3)
                        })
                        .collect()
                })
                .collect();
            let m = Matrix::from_rows(f, rows);
            let mut images = std::collections::BTreeSet::new();
            for v in 0..27u64 {
                let x = [v % 3, (v / 3) % 3, v / 9].map(|c| f.from_u64(c));
                let img: Vec<u64> = (0..3)
                    .map(|i| (0..3).fold(f.zero(), |acc, j| acc + m[(i, j)] * x[j]).index())
                    .collect();
                images.insert(img);
            }
            assert_eq!(images.len(), 3usize.pow(m.rank() as u32));
        }
    }
}
