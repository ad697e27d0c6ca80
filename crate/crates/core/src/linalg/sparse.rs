//! Sparse elimination of unit (+-1) pivots, the workhorse that keeps the
//! exponentially large exterior-complex boundary matrices tractable.
//!
//! Pivoting on a +-1 entry is a unimodular row/column transformation, so it
//! is simultaneously valid over Z (contributing an invariant factor 1), over
//! Q, and over every F_p. Whatever is left when no unit entries remain is
//! handed to the dense exact kernels.
//!
//! Pivot order is what makes this viable at scale. A pivot whose row or
//! column is a singleton eliminates with zero fill-in (the Schur update
//! touches nothing), and on boundary matrices of near-collapsible complexes
//! those cancellations cascade through almost the whole matrix. Only when no
//! singleton is available does the loop fall back to a min-degree choice:
//! the shortest live column, and within it the unit entry with the shortest
//! row, bounding the fill of that step.
//!
//! Arithmetic on the fast path is checked `i64`; overflow falls back to the
//! dense arbitrary-precision path on the whole matrix.

use num_bigint::{BigInt, BigUint};
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use super::dense::{self, Dense};
use super::IntMatrix;

/// Result of reducing one matrix: the number of unit pivots eliminated plus
/// a dense residual carrying everything the unit pivots could not decide.
pub struct Reduction {
    unit_pivots: usize,
    residual: Dense,
    rank: OnceLock<usize>,
    factors: OnceLock<Vec<BigUint>>,
}

impl Reduction {
    pub fn compute(m: &IntMatrix) -> Reduction {
        match m
            .to_sparse_rows_i64()
            .and_then(|rows| eliminate(rows, m.cols()))
        {
            Some((unit_pivots, residual)) => Reduction {
                unit_pivots,
                residual,
                rank: OnceLock::new(),
                factors: OnceLock::new(),
            },
            None => Reduction {
                unit_pivots: 0,
                residual: m.to_dense(),
                rank: OnceLock::new(),
                factors: OnceLock::new(),
            },
        }
    }

    /// Rank over Q (equivalently, the rank of the integer matrix).
    pub fn rank(&self) -> usize {
        *self
            .rank
            .get_or_init(|| self.unit_pivots + dense::bareiss_rank(self.residual.clone()))
    }

    /// Rank over F_p.
    pub fn rank_mod(&self, p: u64) -> usize {
        self.unit_pivots + dense::rank_mod_p(&self.residual, p)
    }

    /// Invariant factors of the full matrix: ones for the unit pivots, then
    /// the residual's chain.
    pub fn invariant_factors(&self) -> &[BigUint] {
        self.factors.get_or_init(|| {
            let mut f = vec![BigUint::from(1u32); self.unit_pivots];
            f.extend(dense::invariant_factors(self.residual.clone()));
            f
        })
    }
}

/// Sparse elimination state: rows as sorted (col, value) lists plus a lazy
/// column-to-rows index. `col_len` is the exact live count per column; the
/// `col_rows` lists may carry stale row ids and are compacted on read.
struct Elim {
    rows: Vec<Vec<(u32, i64)>>,
    col_rows: Vec<Vec<u32>>,
    col_len: Vec<u32>,
    row_active: Vec<bool>,
    col_active: Vec<bool>,
    /// (column length, column) min-heap; entries go stale when the length
    /// drifts and are skipped on pop.
    col_heap: BinaryHeap<Reverse<(u32, u32)>>,
    /// Rows that dropped to a single entry; validity is re-checked on pop.
    singleton_rows: Vec<u32>,
    pivots: usize,
}

fn eliminate(rows: Vec<Vec<(u32, i64)>>, cols: usize) -> Option<(usize, Dense)> {
    let nrows = rows.len();
    let mut col_rows = vec![Vec::new(); cols];
    let mut col_len = vec![0u32; cols];
    let mut singleton_rows = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c as usize].push(r as u32);
            col_len[c as usize] += 1;
        }
        if row.len() == 1 {
            singleton_rows.push(r as u32);
        }
    }
    let mut col_heap = BinaryHeap::new();
    for (c, &len) in col_len.iter().enumerate() {
        if len > 0 {
            col_heap.push(Reverse((len, c as u32)));
        }
    }
    let mut st = Elim {
        rows,
        col_rows,
        col_len,
        row_active: vec![true; nrows],
        col_active: vec![true; cols],
        col_heap,
        singleton_rows,
        pivots: 0,
    };

    let stats = std::env::var_os("SRTOR_ELIM_STATS").is_some();
    let mut n_single_row = 0usize;
    let mut n_single_col = 0usize;
    let mut n_general = 0usize;
    loop {
        // Singleton rows first: eliminating them removes one entry from each
        // other row of that column and fills in nothing.
        if let Some(r) = st.pop_singleton_row() {
            let c = st.rows[r][0].0 as usize;
            st.pivot(r, c)?;
            n_single_row += 1;
            continue;
        }
        // Then the shortest live column; a singleton column is likewise
        // fill-free, anything longer is the min-degree fallback.
        let Some(c) = st.pop_shortest_column() else {
            break;
        };
        let live = st.compact_column(c);
        let mut best: Option<(usize, usize)> = None;
        for &r in &live {
            let row = &st.rows[r as usize];
            let v = lookup(row, c as u32);
            if v == 1 || v == -1 {
                let len = row.len();
                if best.is_none_or(|(blen, _)| len < blen) {
                    best = Some((len, r as usize));
                }
            }
        }
        match best {
            Some((_, r)) => {
                if live.len() == 1 {
                    n_single_col += 1;
                } else {
                    n_general += 1;
                }
                st.pivot(r, c)?;
            }
            // No unit entry: the column waits for the dense residual unless
            // a later update changes it (which re-queues it).
            None => continue,
        }
    }
    if stats {
        let nnz: usize = st.rows.iter().map(Vec::len).sum();
        let idx: usize = st.col_rows.iter().map(Vec::len).sum();
        eprintln!(
            "elim stats: single_row={n_single_row} single_col={n_single_col} \
             general={n_general} final_nnz={nnz} index_len={idx}"
        );
    }

    // Residual: active entries re-indexed densely.
    let live_rows: Vec<usize> = (0..nrows).filter(|&r| st.row_active[r]).collect();
    let live_cols: Vec<usize> = (0..cols).filter(|&c| st.col_active[c]).collect();
    let mut col_index = vec![usize::MAX; cols];
    for (i, &c) in live_cols.iter().enumerate() {
        col_index[c] = i;
    }
    let mut residual = vec![vec![BigInt::from(0); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for &(c, v) in &st.rows[r] {
            if st.col_active[c as usize] {
                residual[i][col_index[c as usize]] = BigInt::from(v);
            }
        }
    }
    Some((st.pivots, residual))
}

fn lookup(row: &[(u32, i64)], c: u32) -> i64 {
    match row.binary_search_by_key(&c, |&(col, _)| col) {
        Ok(i) => row[i].1,
        Err(_) => 0,
    }
}

impl Elim {
    /// Next live singleton row whose single entry is a unit.
    fn pop_singleton_row(&mut self) -> Option<usize> {
        while let Some(r) = self.singleton_rows.pop() {
            let r = r as usize;
            if !self.row_active[r] || self.rows[r].len() != 1 {
                continue;
            }
            let (c, v) = self.rows[r][0];
            if !self.col_active[c as usize] {
                continue;
            }
            if v == 1 || v == -1 {
                return Some(r);
            }
        }
        None
    }

    /// Next live column in increasing length order, skipping stale entries.
    fn pop_shortest_column(&mut self) -> Option<usize> {
        while let Some(Reverse((len, c))) = self.col_heap.pop() {
            let c = c as usize;
            if self.col_active[c] && self.col_len[c] == len && len > 0 {
                return Some(c);
            }
        }
        None
    }

    /// Live rows of a column, deduplicated; rewrites the lazy index.
    fn compact_column(&mut self, c: usize) -> Vec<u32> {
        let mut live = std::mem::take(&mut self.col_rows[c]);
        live.sort_unstable();
        live.dedup();
        live.retain(|&r| {
            self.row_active[r as usize] && lookup(&self.rows[r as usize], c as u32) != 0
        });
        self.col_rows[c] = live.clone();
        live
    }

    fn requeue_column(&mut self, c: usize) {
        if self.col_active[c] {
            self.col_heap.push(Reverse((self.col_len[c], c as u32)));
        }
    }

    /// Eliminate all other entries of column `c` against the +-1 pivot at
    /// `(r, c)`, then retire the pivot row and column. Returns `None` on
    /// i64 overflow.
    fn pivot(&mut self, r: usize, c: usize) -> Option<()> {
        let live = self.compact_column(c);
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let pv = lookup(&pivot_row, c as u32);
        debug_assert!(pv == 1 || pv == -1);
        for &i in &live {
            let i = i as usize;
            if i == r {
                continue;
            }
            let w = lookup(&self.rows[i], c as u32);
            if w == 0 {
                continue;
            }
            // row_i -= (w / pv) * pivot_row; with pv = +-1, w / pv = w * pv
            let factor = w.checked_mul(pv)?;
            let old = std::mem::take(&mut self.rows[i]);
            let merged = subtract_scaled(&old, &pivot_row, factor, self, i)?;
            self.rows[i] = merged;
            if self.rows[i].len() == 1 {
                self.singleton_rows.push(i as u32);
            }
        }
        // retire the pivot row: every column it touched shrinks by one
        for &(col, _) in &pivot_row {
            let col = col as usize;
            if col != c {
                self.col_len[col] -= 1;
                self.requeue_column(col);
            }
        }
        self.row_active[r] = false;
        self.col_active[c] = false;
        self.col_len[c] = 0;
        self.col_rows[c] = Vec::new();
        self.pivots += 1;
        Some(())
    }
}

/// `a - factor * b`, both sorted by column; drops zeros and keeps the
/// elimination state's column lengths and index in sync for row `i`.
fn subtract_scaled(
    a: &[(u32, i64)],
    b: &[(u32, i64)],
    factor: i64,
    st: &mut Elim,
    i: usize,
) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0usize, 0usize);
    while x < a.len() || y < b.len() {
        match (a.get(x), b.get(y)) {
            (Some(&(ca, va)), Some(&(cb, vb))) if ca == cb => {
                let v = va.checked_sub(factor.checked_mul(vb)?)?;
                if v != 0 {
                    out.push((ca, v));
                } else {
                    st.col_len[ca as usize] -= 1;
                    st.requeue_column(ca as usize);
                }
                x += 1;
                y += 1;
            }
            (Some(&(ca, va)), Some(&(cb, _))) if ca < cb => {
                out.push((ca, va));
                x += 1;
            }
            (Some(_), Some(&(cb, vb))) | (None, Some(&(cb, vb))) => {
                let v = 0i64.checked_sub(factor.checked_mul(vb)?)?;
                if v != 0 {
                    out.push((cb, v));
                    st.col_len[cb as usize] += 1;
                    st.col_rows[cb as usize].push(i as u32);
                    st.requeue_column(cb as usize);
                }
                y += 1;
            }
            (Some(&(ca, va)), None) => {
                out.push((ca, va));
                x += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Some(out)
}
