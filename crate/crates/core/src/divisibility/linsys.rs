//! Exact Gaussian elimination over `ℚ(i)`.

use crate::numeric::GaussianRational;

/// Solves `A·x = b` exactly. Rows are given sparsely as `(column, value)`
/// pairs. Returns `None` if the system is inconsistent; free variables of a
/// consistent rank-deficient system are set to zero.
///
/// Pivots are chosen by the first nonzero entry; exact arithmetic needs no
/// magnitude pivoting.
pub fn solve(
    ncols: usize,
    rows: Vec<(Vec<(usize, GaussianRational)>, GaussianRational)>,
) -> Option<Vec<GaussianRational>> {
    let zero = GaussianRational::zero();
    let mut m: Vec<Vec<GaussianRational>> = rows
        .into_iter()
        .map(|(entries, rhs)| {
            let mut row = vec![zero.clone(); ncols + 1];
            for (c, v) in entries {
                row[c] = &row[c] + &v;
            }
            row[ncols] = rhs;
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("pivot is nonzero");
        let pivot_row: Vec<GaussianRational> = m[r].iter().map(|v| v * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (k, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    row[k] = &row[k] - &(&factor * pv);
                }
            }
        }
        m[r] = pivot_row;
        pivot_cols.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![zero; ncols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    Some(x)
}
