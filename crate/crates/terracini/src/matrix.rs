//! Exact dense matrices over a tagged ground field, with rank, reduced row
//! echelon form, nullspace and subspace intersection.
//!
//! Rank over a prime field uses plain Gaussian elimination on `u64` residues.
//! Rank over `Q` clears row denominators and runs fraction-free (Bareiss)
//! elimination on big integers, so no rational arithmetic happens in the
//! inner loop. Row reduction and nullspaces, which are needed for witness
//! construction, run in field arithmetic and stay exact over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{common_kind, FieldKind, FieldScalar};

/// Dense matrix with entries from one ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    kind: FieldKind,
    rows: usize,
    cols: usize,
    data: Vec<FieldScalar>,
}

impl ExactMatrix {
    /// Builds a matrix from rows, checking rectangularity and that all
    /// entries share one field tag.
    pub fn from_rows(rows: Vec<Vec<FieldScalar>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidInput("matrix needs at least one row".into()));
        }
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::InvalidInput("matrix needs at least one column".into()));
        }
        for r in &rows {
            if r.len() != cols {
                return Err(Error::InvalidInput(format!(
                    "ragged rows: {} vs {}",
                    r.len(),
                    cols
                )));
            }
        }
        let data: Vec<FieldScalar> = rows.into_iter().flatten().collect();
        let kind = common_kind(&data)?;
        Ok(ExactMatrix { kind, rows: data.len() / cols, cols, data })
    }

    pub fn zero(kind: FieldKind, rows: usize, cols: usize) -> Self {
        ExactMatrix { kind, rows, cols, data: vec![FieldScalar::zero(kind); rows * cols] }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldScalar) {
        debug_assert_eq!(v.kind(), self.kind);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<FieldScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Vertical concatenation; both operands must share field and width.
    pub fn stack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.kind != other.kind {
            return Err(Error::MixedField(format!("{} vs {}", self.kind, other.kind)));
        }
        if self.cols != other.cols {
            return Err(Error::InvalidInput(format!(
                "stack width mismatch: {} vs {}",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix { kind: self.kind, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Matrix rank. Dispatches to the prime-field fast path or to
    /// fraction-free integer elimination over `Q`.
    pub fn rank(&self) -> usize {
        match self.kind {
            FieldKind::Prime(p) => {
                let rows: Vec<Vec<u64>> = (0..self.rows)
                    .map(|i| {
                        self.row(i)
                            .iter()
                            .map(|s| match s {
                                FieldScalar::Fp { value, .. } => *value,
                                _ => unreachable!(),
                            })
                            .collect()
                    })
                    .collect();
                rank_mod_p(rows, p)
            }
            FieldKind::Rational => {
                let rows: Vec<Vec<BigInt>> = (0..self.rows)
                    .map(|i| clear_denominators(self.row(i)))
                    .collect();
                rank_bareiss(rows)
            }
        }
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    ///
    /// `col_order` maps elimination step to column index, so callers can
    /// prefer pivots in a nonstandard column order (used to exercise
    /// projector independence in the tangency code).
    pub fn rref_with_order(&mut self, col_order: &[usize]) -> Vec<usize> {
        debug_assert_eq!(col_order.len(), self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in col_order {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self.at(r, c).inv().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.at(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.at(i, j).sub(&f.mul(self.at(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form with the natural column order.
    pub fn rref(&mut self) -> Vec<usize> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_order(&order)
    }

    /// Reduces `v` in place modulo the row space of `self`, which must
    /// already be in reduced row echelon form with the given pivot columns.
    /// Afterwards `v` is the canonical row-space coset representative: it
    /// vanishes on every pivot column.
    pub fn reduce_against_rref(&self, pivots: &[usize], v: &mut [FieldScalar]) {
        debug_assert_eq!(v.len(), self.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for j in 0..self.cols {
                v[j] = v[j].sub(&f.mul(self.at(r, j)));
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right nullspace `{v : M v = 0}`, one vector per row of
    /// the returned matrix; `None` when the nullspace is trivial.
    pub fn nullspace(&self) -> Option<ExactMatrix> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return None;
        }
        let one = FieldScalar::one(self.kind);
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![FieldScalar::zero(self.kind); self.cols];
            v[f] = one.clone();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = m.at(pi, f).neg();
            }
            basis.push(v);
        }
        Some(ExactMatrix::from_rows(basis).expect("nullspace basis is well formed"))
    }

    /// True iff `self` and `other` span the same row space.
    pub fn row_space_eq(&self, other: &ExactMatrix) -> Result<bool> {
        let ra = self.rank();
        let rb = other.rank();
        if ra != rb {
            return Ok(false);
        }
        Ok(self.stack(other)?.rank() == ra)
    }

    /// True iff `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[FieldScalar]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::InvalidInput("vector length mismatch".into()));
        }
        let base = self.rank();
        let ext = self.stack(&ExactMatrix::from_rows(vec![v.to_vec()])?)?;
        Ok(ext.rank() == base)
    }

    /// Row basis of the intersection of the row spaces of `self` and `other`.
    ///
    /// Uses the kernel of `[A^T | -B^T]`: a vector `(x, y)` in that kernel
    /// gives the common element `x A = y B`.
    pub fn intersect_rows(&self, other: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        if self.kind != other.kind {
            return Err(Error::MixedField(format!("{} vs {}", self.kind, other.kind)));
        }
        if self.cols != other.cols {
            return Err(Error::InvalidInput("ambient dimension mismatch".into()));
        }
        // Columns of the system: rows of self, then rows of other.
        let n = self.cols;
        let mut sys_rows = Vec::with_capacity(n);
        for j in 0..n {
            let mut row = Vec::with_capacity(self.rows + other.rows);
            for i in 0..self.rows {
                row.push(self.at(i, j).clone());
            }
            for i in 0..other.rows {
                row.push(other.at(i, j).neg());
            }
            sys_rows.push(row);
        }
        let sys = ExactMatrix::from_rows(sys_rows)?;
        let Some(ker) = sys.nullspace() else {
            return Ok(None);
        };
        let mut combos = Vec::with_capacity(ker.nrows());
        for k in 0..ker.nrows() {
            let mut v = vec![FieldScalar::zero(self.kind); n];
            for i in 0..self.rows {
                let c = ker.at(k, i);
                if c.is_zero() {
                    continue;
                }
                for (vj, m) in v.iter_mut().zip(self.row(i)) {
                    *vj = vj.add(&c.mul(m));
                }
            }
            combos.push(v);
        }
        let mut inter = ExactMatrix::from_rows(combos)?;
        let pivots = inter.rref();
        if pivots.is_empty() {
            return Ok(None);
        }
        let rows = (0..pivots.len()).map(|i| inter.row(i).to_vec()).collect();
        Ok(Some(ExactMatrix::from_rows(rows)?))
    }
}

/// Projective dimension of the intersection of two linear subspaces given by
/// row bases, with `-1` for an empty intersection. Exact by the Grassmann
/// formula: `dim(A ∩ B) = rank A + rank B - rank [A; B]` on the affine level.
pub fn intersect_dim(a: &ExactMatrix, b: &ExactMatrix) -> Result<i64> {
    let stacked = a.stack(b)?;
    let affine = a.rank() as i64 + b.rank() as i64 - stacked.rank() as i64;
    Ok(affine - 1)
}

/// Rank of a `u64` residue matrix by Gaussian elimination mod `p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let nrows = rows.len();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pr) = (rank..nrows).find(|&i| rows[i][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = mod_inv(rows[rank][c] % p, p);
        for j in c..ncols {
            rows[rank][j] = ((rows[rank][j] as u128 * inv as u128) % p as u128) as u64;
        }
        for i in (rank + 1)..nrows {
            let f = rows[i][c] % p;
            if f == 0 {
                continue;
            }
            for j in c..ncols {
                let sub = (f as u128 * rows[rank][j] as u128) % p as u128;
                let cur = rows[i][j] as u128 % p as u128;
                rows[i][j] = ((cur + p as u128 - sub) % p as u128) as u64;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i128) as u64
}

/// Scales a rational row by the lcm of its denominators; rank-preserving.
fn clear_denominators(row: &[FieldScalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for s in row {
        let r = s.as_rational().expect("rational matrix entry");
        lcm = lcm.lcm(r.denom());
    }
    row.iter()
        .map(|s| {
            let r = s.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. All
/// divisions are exact; a debug assertion guards the exactness invariant.
pub fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let nrows = m.len();
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pr) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        for i in (rank + 1)..nrows {
            for j in (c + 1)..ncols {
                let num = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Integer absolute-value bound on the entries of a rational matrix after
/// clearing denominators; used by tests to sanity-check fixture sizes.
pub fn cleared_entry_bound(m: &ExactMatrix) -> BigInt {
    let mut best = BigInt::zero();
    for i in 0..m.nrows() {
        for v in clear_denominators(m.row(i)) {
            let a = v.abs();
            if a > best {
                best = a;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldKind, P1};

    fn qm(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter().map(|&v| FieldScalar::from_i64(FieldKind::Rational, v)).collect()
                })
                .collect(),
        )
        .unwrap()
    }

    fn pm(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter().map(|&v| FieldScalar::from_i64(FieldKind::Prime(P1), v)).collect()
                })
                .collect(),
        )
        .unwrap()
    }

    /// Oracle: 4x4 Vandermonde on distinct nodes is invertible; a repeated
    /// node drops the rank by one.
    #[test]
    fn vandermonde_rank_oracle() {
        let nodes = [2i64, 3, 5, 7];
        let vander: Vec<Vec<i64>> =
            nodes.iter().map(|&x| (0..4).map(|k| x.pow(k)).collect()).collect();
        let rows: Vec<&[i64]> = vander.iter().map(|r| r.as_slice()).collect();
        assert_eq!(qm(&rows).rank(), 4);
        assert_eq!(pm(&rows).rank(), 4);

        let mut repeated = vander.clone();
        repeated[3] = repeated[0].clone();
        let rows: Vec<&[i64]> = repeated.iter().map(|r| r.as_slice()).collect();
        assert_eq!(qm(&rows).rank(), 3);
        assert_eq!(pm(&rows).rank(), 3);
    }

    #[test]
    fn rank_handles_zero_columns_between_pivots() {
        let m = qm(&[&[0, 1, 0, 2], &[0, 2, 0, 4], &[0, 0, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_pivots_and_nullspace() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ker = m.nullspace().unwrap();
        assert_eq!(ker.nrows(), 1);
        // Check M v = 0 for the kernel vector.
        for i in 0..m.nrows() {
            let mut acc = FieldScalar::zero(FieldKind::Rational);
            for j in 0..m.ncols() {
                acc = acc.add(&m.at(i, j).mul(ker.at(0, j)));
            }
            assert!(acc.is_zero());
        }
        let full = qm(&[&[1, 0], &[0, 1]]);
        assert!(full.nullspace().is_none());
    }

    /// Two planes through complementary axes in affine 4-space meet in a
    /// projective point; identical planes meet in themselves; generic
    /// 2-subspaces of affine 6-space are projectively disjoint.
    #[test]
    fn intersect_dim_matches_grassmann_formula() {
        let a = qm(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let b = qm(&[&[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(intersect_dim(&a, &b).unwrap(), 0);
        assert_eq!(intersect_dim(&a, &a).unwrap(), 1);

        let c = qm(&[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0]]);
        let d = qm(&[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 0]]);
        assert_eq!(intersect_dim(&c, &d).unwrap(), -1);
    }

    #[test]
    fn intersect_rows_returns_common_line() {
        let a = qm(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let b = qm(&[&[0, 1, 0, 0], &[0, 0, 1, 0]]);
        let inter = a.intersect_rows(&b).unwrap().unwrap();
        assert_eq!(inter.nrows(), 1);
        assert!(a.row_space_contains(inter.row(0)).unwrap());
        assert!(b.row_space_contains(inter.row(0)).unwrap());
    }

    #[test]
    fn rational_rank_with_fractions() {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let half = FieldScalar::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)));
        let third = FieldScalar::from_rational(BigRational::new(BigInt::from(1), BigInt::from(3)));
        let one = FieldScalar::one(FieldKind::Rational);
        // Rows (1/2, 1/3) and (3, 2) are dependent; adding (1, 0) makes rank 2.
        let m = ExactMatrix::from_rows(vec![
            vec![half, third],
            vec![FieldScalar::from_i64(FieldKind::Rational, 3), FieldScalar::from_i64(FieldKind::Rational, 2)],
            vec![one, FieldScalar::zero(FieldKind::Rational)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn mixed_field_rows_rejected() {
        let bad = ExactMatrix::from_rows(vec![
            vec![FieldScalar::from_i64(FieldKind::Prime(P1), 1)],
            vec![FieldScalar::from_i64(FieldKind::Rational, 1)],
        ]);
        assert!(bad.is_err());
    }
}
