//! Dense integer matrices with exact arbitrary-precision arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let nr = rows.len();
        let nc = if nr == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Self::from_fn(nr, nc, |r, c| BigInt::from(rows[r][c]))
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out.set(
                            r1 * other.rows + r2,
                            c1 * other.cols + c2,
                            a * other.get(r2, c2),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Apply a simultaneous row/column permutation: out[i][j] = self[perm[i]][perm[j]].
    pub fn permuted(&self, perm: &[usize]) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        assert_eq!(perm.len(), self.rows);
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(perm[r], perm[c]).clone()
        })
    }

    /// Row-major entries converted to i64, for machine-readable output.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                row.push(i64::try_from(self.get(r, c)).map_err(|_| {
                    Error::Size(format!(
                        "matrix entry at ({r},{c}) does not fit a 64-bit integer"
                    ))
                })?);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Column-aligned text rendering.
    pub fn render_text(&self) -> String {
        let mut widths = vec![0usize; self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                widths[c] = widths[c].max(self.get(r, c).to_string().len());
            }
        }
        let mut out = String::new();
        for r in 0..self.rows {
            out.push_str("  ");
            for c in 0..self.cols {
                if c > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{:>w$}", self.get(r, c), w = widths[c]));
            }
            out.push('\n');
        }
        out
    }
}

/// Exact inverse of the zeta (adjacency) matrix of a finite poset.
///
/// The matrix must be zero-one with unit diagonal, and the relation
/// `a[i][j] = 1` must admit a topological order; in that order the matrix is
/// upper unitriangular and the inverse follows by back-substitution. The
/// entries of the inverse are the values of the Möbius function of the poset.
pub fn poset_inverse(a: &IntMatrix) -> Result<IntMatrix> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Structure("zeta matrix must be square".into()));
    }
    let zero = BigInt::zero();
    let one = BigInt::one();
    for r in 0..n {
        for c in 0..n {
            let v = a.get(r, c);
            if *v != zero && *v != one {
                return Err(Error::Structure(format!(
                    "entry ({r},{c}) = {v} is not 0 or 1"
                )));
            }
        }
        if *a.get(r, r) != one {
            return Err(Error::Structure(format!(
                "diagonal entry ({r},{r}) is not 1"
            )));
        }
    }

    // Kahn topological sort of the strict relation i -> j.
    let mut indegree = vec![0usize; n];
    for j in 0..n {
        for i in 0..n {
            if i != j && a.get(i, j).is_one() {
                indegree[j] += 1;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<usize> = (0..n).filter(|&j| indegree[j] == 0).collect();
    while let Some(j) = ready.pop() {
        order.push(j);
        for k in 0..n {
            if k != j && a.get(j, k).is_one() {
                indegree[k] -= 1;
                if indegree[k] == 0 {
                    ready.push(k);
                }
            }
        }
    }
    if order.len() != n {
        return Err(Error::Structure(
            "relation contains a cycle; not a poset".into(),
        ));
    }

    // In `order` coordinates the matrix is upper unitriangular; back-substitute.
    let b = a.permuted(&order);
    let mut inv = IntMatrix::identity(n);
    for q in 0..n {
        for p in (0..q).rev() {
            let mut acc = BigInt::zero();
            for r in (p + 1)..=q {
                acc += b.get(p, r) * inv.get(r, q);
            }
            inv.set(p, q, -acc);
        }
    }

    // Undo the permutation: inv holds (P A Pᵀ)⁻¹ in permuted coordinates.
    let mut out = IntMatrix::zeros(n, n);
    for p in 0..n {
        for q in 0..n {
            out.set(order[p], order[q], inv.get(p, q).clone());
        }
    }
    Ok(out)
}
