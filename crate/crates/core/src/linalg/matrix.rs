use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense symmetric matrix, stored row-major in full.
#[derive(Clone, PartialEq)]
pub struct SymMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    /// Build from rows, rejecting ragged, asymmetric or non-finite input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotSquare { row: i, len: row.len(), order });
            }
            entries.extend(row);
        }
        Self::from_flat(order, entries)
    }

    pub fn from_flat(order: usize, entries: Vec<T>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != order * order {
            return Err(Error::NotSquare { row: 0, len: entries.len(), order: order * order });
        }
        for i in 0..order {
            for j in 0..order {
                let v = &entries[i * order + j];
                if !v.is_finite_value() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                if j > i && *v != entries[j * order + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { order, entries })
    }

    /// Build from a function evaluated on the upper triangle and mirrored.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(order > 0, "matrix order must be positive");
        let mut entries = vec![T::zero(); order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                entries[j * order + i] = v.clone();
                entries[i * order + j] = v;
            }
        }
        Self { order, entries }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// All-ones matrix `J`.
    pub fn ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| T::one())
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_, _| T::zero())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.order)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.entries
    }

    /// Off-diagonal entries `(i, j, value)` with `i < j`.
    pub fn upper_pairs(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let n = self.order;
        (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j, self.get(i, j))))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SymMatrix<U> {
        SymMatrix {
            order: self.order,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Float view used for every eigenvalue computation.
    pub fn to_f64(&self) -> SymMatrix<f64> {
        self.map(|v| v.to_f64())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    /// `self + c·I`.
    pub fn shift(&self, c: &T) -> Self {
        let mut out = self.clone();
        for i in 0..self.order {
            let k = i * self.order + i;
            out.entries[k] = out.entries[k].clone() + c.clone();
        }
        out
    }

    /// `self²`, which stays symmetric.
    pub fn square(&self) -> Self {
        let n = self.order;
        Self::from_fn(n, |i, j| {
            self.row(i)
                .iter()
                .zip(self.row(j))
                .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
    }

    pub fn trace(&self) -> T {
        (0..self.order).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// `tr(self²)`, the sum of squared entries.
    pub fn trace_of_square(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, v| acc + v.clone() * v.clone())
    }

    /// `P·self·Pᵀ` where row `i` of the result is row `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.order {
            return Err(Error::OrderMismatch { left: self.order, right: perm.len() });
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            if p >= self.order || seen[p] {
                return Err(Error::InvalidParams(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        Ok(Self::from_fn(self.order, |i, j| self.get(perm[i], perm[j]).clone()))
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .map(|v| v.abs())
            .fold(T::zero(), |acc, v| if v > acc { v } else { acc })
    }
}

impl<T: Scalar> fmt::Debug for SymMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix({})", self.order)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
