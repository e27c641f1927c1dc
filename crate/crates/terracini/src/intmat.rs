//! Integer matrices and Smith normal form, used for lattice-rank questions
//! about polytope point configurations.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Smith normal form outcome: the rank and the nonzero elementary divisors,
/// normalized positive with each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithResult {
    pub rank: usize,
    pub divisors: Vec<BigInt>,
}

/// Computes the Smith normal form of an integer matrix by row and column
/// reduction. Termination: every inner step strictly reduces the absolute
/// value of the working pivot.
pub fn smith_normal_form(rows: &[Vec<i64>]) -> SmithResult {
    let mut a: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    if a.is_empty() || a[0].is_empty() {
        return SmithResult { rank: 0, divisors: vec![] };
    }
    let m = a.len();
    let n = a[0].len();
    let steps = m.min(n);

    for t in 0..steps {
        'pivot: loop {
            // Smallest nonzero entry of the trailing submatrix becomes pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best
                            .map(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break 'pivot;
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }

            // Clear column t by division with remainder.
            let mut dirty = false;
            for i in (t + 1)..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    for j in t..n {
                        let sub = &q * &a[t][j];
                        a[i][j] -= sub;
                    }
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Clear row t.
            for j in (t + 1)..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for i in t..m {
                        let sub = &q * &a[i][t];
                        a[i][j] -= sub;
                    }
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Divisibility fix-up: the pivot must divide the whole trailing
            // submatrix for the elementary-divisor chain to hold.
            for i in (t + 1)..m {
                for j in (t + 1)..n {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        for jj in t..n {
                            let add = a[i][jj].clone();
                            a[t][jj] += add;
                        }
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if a[t][t].is_zero() {
            break;
        }
    }

    let mut divisors = Vec::new();
    for t in 0..steps {
        if a[t][t].is_zero() {
            break;
        }
        divisors.push(a[t][t].abs());
    }
    SmithResult { rank: divisors.len(), divisors }
}
