//! Gaussian elimination over a [`Scalar`] field.

use super::scalar::Scalar;

/// Reduced row echelon form. Returns the reduced rows and pivot columns.
///
/// For float scalars the pivot is the entry of largest magnitude and
/// entries below `tol` count as zero; exact scalars ignore `tol`.
pub fn rref<S: Scalar>(mut rows: Vec<Vec<S>>, tol: f64) -> (Vec<Vec<S>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let candidate = if S::EXACT {
            (r..rows.len()).find(|&i| !rows[i][c].is_zero())
        } else {
            (r..rows.len())
                .filter(|&i| !rows[i][c].is_negligible(tol))
                .max_by(|&a, &b| rows[a][c].magnitude().total_cmp(&rows[b][c].magnitude()))
        };
        let Some(p) = candidate else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                x.sub_assign_ref(&y.mul_ref(&f));
            }
            if !S::EXACT {
                row[c] = S::zero();
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

pub fn rank<S: Scalar>(rows: Vec<Vec<S>>, tol: f64) -> usize {
    rref(rows, tol).1.len()
}

/// Basis of `{x : A x = 0}` for the matrix given by `rows`.
pub fn nullspace<S: Scalar>(rows: Vec<Vec<S>>, ncols: usize, tol: f64) -> Vec<Vec<S>> {
    if rows.is_empty() {
        return (0..ncols)
            .map(|k| (0..ncols).map(|j| if j == k { S::one() } else { S::zero() }).collect())
            .collect();
    }
    let (red, pivots) = rref(rows, tol);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); ncols];
            v[f] = S::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = red[r][f].neg_ref();
            }
            v
        })
        .collect()
}

/// Solve `A x = b` for square nonsingular `A`.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S], tol: f64) -> Option<Vec<S>> {
    let n = a.len();
    let aug: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug, tol);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.iter().take(n).map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgScalar;
    use num_complex::Complex64;

    fn q(n: i64) -> AlgScalar {
        AlgScalar::from_int(n)
    }

    #[test]
    fn exact_rank_and_nullspace() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(rows.clone(), 0.0), 2);
        let ns = nullspace(rows.clone(), 3, 0.0);
        assert_eq!(ns.len(), 1);
        for row in &rows {
            let dot = row.iter().zip(&ns[0]).fold(q(0), |acc, (a, b)| acc + a * b);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn float_solve() {
        let a = vec![
            vec![Complex64::new(2.0, 0.0), Complex64::new(0.0, 1.0)],
            vec![Complex64::new(1.0, 0.0), Complex64::new(3.0, 0.0)],
        ];
        let x = vec![Complex64::new(1.0, -1.0), Complex64::new(0.5, 2.0)];
        let b: Vec<_> = a.iter().map(|r| r[0] * x[0] + r[1] * x[1]).collect();
        let got = solve(&a, &b, 1e-12).unwrap();
        for (g, e) in got.iter().zip(&x) {
            assert!((g - e).norm() < 1e-12);
        }
    }
}
