//! A deliberately independent oracle for the integration tests: its own face
//! enumeration, its own boundary construction, and its own fraction-free
//! rank, sharing no code path with the library. Sizes stay small enough for
//! dense `i128` arithmetic to be exact.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// All faces of the complex on `m` vertices spanned by `facets` (vertex `v`
/// is bit `v - 1`), including the empty face.
pub fn closure(m: usize, facets: &[u64]) -> BTreeSet<u64> {
    let mut faces = BTreeSet::new();
    for &f in facets {
        assert_eq!(f >> m, 0, "facet out of range");
        // enumerate all submasks of f
        let mut s = f;
        loop {
            faces.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    faces.insert(0);
    faces
}

/// Faces of `faces` contained in `j`.
pub fn restrict(faces: &BTreeSet<u64>, j: u64) -> BTreeSet<u64> {
    faces.iter().copied().filter(|&f| f & !j == 0).collect()
}

/// Dense boundary matrix from `k`-faces to `(k-1)`-faces of the reduced
/// chain complex (so vertices map to the empty face).
fn boundary(faces: &BTreeSet<u64>, k: i64) -> Vec<Vec<i128>> {
    let cells = |d: i64| -> Vec<u64> {
        faces
            .iter()
            .copied()
            .filter(|&f| i64::from(f.count_ones() as i32) == d + 1)
            .collect()
    };
    let rows = cells(k - 1);
    let cols = cells(k);
    let mut d = vec![vec![0i128; cols.len()]; rows.len()];
    for (c, &cell) in cols.iter().enumerate() {
        let mut bits = cell;
        let mut position = 0usize;
        while bits != 0 {
            let v = bits.trailing_zeros();
            let sub = cell & !(1u64 << v);
            let r = rows.binary_search(&sub).expect("closed under subsets");
            d[r][c] = if position.is_multiple_of(2) { 1 } else { -1 };
            bits &= bits - 1;
            position += 1;
        }
    }
    d
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank(mut a: Vec<Vec<i128>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    let mut prev = 1i128;
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, p);
        for r in 0..rows {
            if r == row {
                continue;
            }
            for c in 0..cols {
                if c == col {
                    continue;
                }
                let num = a[row][col]
                    .checked_mul(a[r][c])
                    .and_then(|x| x.checked_sub(a[r][col].checked_mul(a[row][c])?))
                    .expect("oracle overflow");
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Reduced Betti number over Q in degree `k` (with `b_{-1}` of the empty
/// complex equal to 1).
pub fn reduced_betti(faces: &BTreeSet<u64>, k: i64) -> usize {
    let dim = faces
        .iter()
        .filter(|f| i64::from(f.count_ones() as i32) == k + 1)
        .count();
    if dim == 0 {
        return 0;
    }
    let rank_out = rank(boundary(faces, k));
    let rank_in = rank(boundary(faces, k + 1));
    dim - rank_out - rank_in
}

/// Hochster's description, computed entirely inside the oracle: the rank of
/// the Tor group in homological degree `i` and multidegree `j` equals the
/// reduced Betti number of the full subcomplex in degree `|j| - i - 1`.
pub fn hochster_rank(m: usize, facets: &[u64], i: i64, j: u64) -> usize {
    let faces = restrict(&closure(m, facets), j);
    reduced_betti(&faces, i64::from(j.count_ones() as i32) - i - 1)
}
