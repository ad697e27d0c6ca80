use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;

/// A sparse exact integer matrix, stored column-major. Entries that fit an
/// `i64` live in the column lists; anything larger is promoted to the `big`
/// side table, so values are arbitrary precision end to end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    // per column: (row, value) sorted by row, value != 0; a value of 0 in the
    // list is a tombstone pointing into `big`.
    columns: Vec<Vec<(u32, i64)>>,
    big: BTreeMap<(u32, u32), BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
            big: BTreeMap::new(),
        }
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut m = Self::zero(rows, cols);
        let mut per_col: Vec<Vec<(u32, BigInt)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of bounds");
            if !v.is_zero() {
                per_col[c].push((r as u32, v));
            }
        }
        for (c, mut entries) in per_col.into_iter().enumerate() {
            entries.sort_by_key(|&(r, _)| r);
            for (r, v) in entries {
                match v.to_i64() {
                    Some(small) => m.columns[c].push((r, small)),
                    None => {
                        m.columns[c].push((r, 0));
                        m.big.insert((r, c as u32), v);
                    }
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        assert!(r < self.rows && c < self.cols);
        match self.columns[c].binary_search_by_key(&(r as u32), |&(row, _)| row) {
            Ok(i) => {
                let v = self.columns[c][i].1;
                if v == 0 {
                    self.big[&(r as u32, c as u32)].clone()
                } else {
                    BigInt::from(v)
                }
            }
            Err(_) => BigInt::zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols);
        let key = (r as u32, c as u32);
        let pos = self.columns[c].binary_search_by_key(&(r as u32), |&(row, _)| row);
        if v.is_zero() {
            if let Ok(i) = pos {
                self.columns[c].remove(i);
                self.big.remove(&key);
            }
            return;
        }
        let (entry, promoted) = match v.to_i64() {
            Some(small) => ((r as u32, small), None),
            None => ((r as u32, 0), Some(v)),
        };
        match pos {
            Ok(i) => {
                self.columns[c][i] = entry;
                self.big.remove(&key);
            }
            Err(i) => self.columns[c].insert(i, entry),
        }
        if let Some(v) = promoted {
            self.big.insert(key, v);
        }
    }

    /// Nonzero entries as (row, col, value), column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, BigInt)> + '_ {
        self.columns.iter().enumerate().flat_map(move |(c, col)| {
            col.iter().map(move |&(r, v)| {
                let value = if v == 0 {
                    self.big[&(r, c as u32)].clone()
                } else {
                    BigInt::from(v)
                };
                (r as usize, c, value)
            })
        })
    }

    /// Nonzero entries of one column as (row, value).
    pub fn column(&self, c: usize) -> impl Iterator<Item = (usize, BigInt)> + '_ {
        self.columns[c].iter().map(move |&(r, v)| {
            let value = if v == 0 {
                self.big[&(r, c as u32)].clone()
            } else {
                BigInt::from(v)
            };
            (r as usize, value)
        })
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_triplets(
            self.cols,
            self.rows,
            self.entries().map(|(r, c, v)| (c, r, v)),
        )
    }

    /// Whether `self * other` is the zero matrix, without materializing the
    /// product. Panics if the dimensions are incompatible.
    pub fn composes_to_zero(&self, other: &IntMatrix) -> bool {
        assert_eq!(
            self.cols, other.rows,
            "composition dimension mismatch: {}x{} after {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        if self.big.is_empty() && other.big.is_empty() {
            if let Some(result) = self.composes_to_zero_fast(other) {
                return result;
            }
        }
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for c in 0..other.cols {
            acc.clear();
            for (k, w) in other.column(c) {
                for (r, v) in self.column(k) {
                    let e = acc.entry(r).or_insert_with(BigInt::zero);
                    *e += v * &w;
                }
            }
            if acc.values().any(|v| !v.is_zero()) {
                return false;
            }
        }
        true
    }

    /// Checked-i128 scatter accumulation; `None` on overflow.
    fn composes_to_zero_fast(&self, other: &IntMatrix) -> Option<bool> {
        let mut acc: Vec<i128> = vec![0; self.rows];
        let mut touched: Vec<u32> = Vec::new();
        for col in &other.columns {
            for &r in &touched {
                acc[r as usize] = 0;
            }
            touched.clear();
            for &(k, w) in col {
                for &(r, v) in &self.columns[k as usize] {
                    if acc[r as usize] == 0 {
                        touched.push(r);
                    }
                    acc[r as usize] =
                        acc[r as usize].checked_add((v as i128).checked_mul(w as i128)?)?;
                }
            }
            if touched.iter().any(|&r| acc[r as usize] != 0) {
                return Some(false);
            }
        }
        Some(true)
    }

    pub(crate) fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v;
        }
        out
    }

    /// Rows as (col, i64 value) lists, for the sparse elimination fast path.
    /// Returns `None` if any entry does not fit an `i64`.
    pub(crate) fn to_sparse_rows_i64(&self) -> Option<Vec<Vec<(u32, i64)>>> {
        let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                let value = if v == 0 {
                    self.big[&(r, c as u32)].to_i64()?
                } else {
                    v
                };
                rows[r as usize].push((c as u32, value));
            }
        }
        Some(rows)
    }
}
