//! Lattice point configurations of polytopes: file format, spanning-sum
//! sets, sublattice ranks and the combinatorial identifiability bound.
//!
//! The file format is plain text: one lattice point per line, coordinates
//! separated by whitespace, `#` starts a comment. The ambient dimension is
//! inferred from the column count, and the listed points are taken to be
//! all lattice points of the polytope.

use std::collections::BTreeSet;
use std::path::Path;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intmat::{smith_normal_form, SmithResult};
use crate::matrix::rank_bareiss;

/// A finite set of lattice points, understood as `P ∩ M` for a polytope `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    points: Vec<Vec<i64>>,
    ambient: usize,
}

impl LatticePolytope {
    pub fn from_points(points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("polytope needs at least one point".into()));
        }
        let ambient = points[0].len();
        if ambient == 0 {
            return Err(Error::InvalidInput("points need at least one coordinate".into()));
        }
        for p in &points {
            if p.len() != ambient {
                return Err(Error::Parse(format!(
                    "inconsistent coordinate count: {} vs {}",
                    p.len(),
                    ambient
                )));
            }
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p.clone()) {
                return Err(Error::InvalidInput(format!("duplicate lattice point {p:?}")));
            }
        }
        let mut sorted = points;
        sorted.sort();
        Ok(LatticePolytope { points: sorted, ambient })
    }

    /// Parses the plain-text point list format.
    pub fn parse_str(text: &str) -> Result<Self> {
        let mut pts = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let coords: Result<Vec<i64>> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>().map_err(|_| {
                        Error::Parse(format!("line {}: bad integer {t:?}", lineno + 1))
                    })
                })
                .collect();
            pts.push(coords?);
        }
        Self::from_points(pts)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse_str(&std::fs::read_to_string(path)?)
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn npoints(&self) -> usize {
        self.points.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Rank of the affine span of the points over `Q`.
    pub fn affine_rank(&self) -> usize {
        diff_rank(&self.points, 0)
    }

    /// Lattice points of `d * standard n-simplex`: exponent vectors with
    /// nonnegative entries summing to at most `d`.
    pub fn simplex_dilation(n: usize, d: usize) -> Self {
        let mut pts = Vec::new();
        let mut cur = vec![0i64; n];
        fill_simplex(&mut pts, &mut cur, 0, d as i64);
        LatticePolytope::from_points(pts).expect("simplex points are distinct")
    }

    /// The segment `[0, d]` in one variable.
    pub fn segment(d: usize) -> Self {
        LatticePolytope::from_points((0..=d as i64).map(|v| vec![v]).collect())
            .expect("segment points are distinct")
    }

    /// Cartesian product, coordinates concatenated.
    pub fn product(&self, other: &LatticePolytope) -> Self {
        let pts = self
            .points
            .iter()
            .cartesian_product(&other.points)
            .map(|(a, b)| {
                let mut v = a.clone();
                v.extend(b.iter().copied());
                v
            })
            .collect();
        LatticePolytope::from_points(pts).expect("product points are distinct")
    }
}

fn fill_simplex(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, pos: usize, rem: i64) {
    if pos == cur.len() {
        out.push(cur.clone());
        return;
    }
    for e in 0..=rem {
        cur[pos] = e;
        fill_simplex(out, cur, pos + 1, rem - e);
    }
    cur[pos] = 0;
}

/// Rank over `Q` of the differences of `pts` against `pts[base]`.
fn diff_rank(pts: &[Vec<i64>], base: usize) -> usize {
    let rows: Vec<Vec<BigInt>> = pts
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != base)
        .map(|(_, p)| {
            p.iter().zip(&pts[base]).map(|(a, b)| BigInt::from(a - b)).collect()
        })
        .collect();
    if rows.is_empty() {
        return 0;
    }
    rank_bareiss(rows)
}

/// The set of sums of affinely spanning `(n+1)`-subsets, sorted.
///
/// Precondition: the points affinely span rank `n` (use [`LatticePolytope::affine_rank`]).
pub fn bset(p: &LatticePolytope) -> Vec<Vec<i64>> {
    let n = p.affine_rank();
    let mut out = BTreeSet::new();
    for subset in p.points().iter().combinations(n + 1) {
        let owned: Vec<Vec<i64>> = subset.iter().map(|v| (*v).clone()).collect();
        if diff_rank(&owned, 0) != n {
            continue;
        }
        let mut sum = vec![0i64; p.ambient()];
        for pt in &owned {
            for (s, c) in sum.iter_mut().zip(pt) {
                *s += c;
            }
        }
        out.insert(sum);
    }
    out.into_iter().collect()
}

/// Lattice data of the difference sublattice generated by `B - B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeReport {
    /// Rank of the sublattice spanned by the differences of `B`.
    pub rho: usize,
    /// Corank `n - rho` of the quotient lattice.
    pub quotient_rank: usize,
    /// Elementary divisors of the difference generators.
    pub divisors: Vec<BigInt>,
    /// Number of distinct spanning-subset sums.
    pub bset_size: usize,
}

/// Rank and divisors of the sublattice generated by differences of the
/// spanning-sum set `B`. Both the rank and its corank are reported; the
/// degeneracy verdict for a toric variety should come from the jet-based
/// Gauss rank, with this as the combinatorial cross-check.
pub fn sublattice_report(p: &LatticePolytope) -> SublatticeReport {
    let n = p.affine_rank();
    let b = bset(p);
    if b.len() <= 1 {
        return SublatticeReport {
            rho: 0,
            quotient_rank: n,
            divisors: vec![],
            bset_size: b.len(),
        };
    }
    let rows: Vec<Vec<i64>> = b[1..]
        .iter()
        .map(|q| q.iter().zip(&b[0]).map(|(a, c)| a - c).collect())
        .collect();
    let SmithResult { rank, divisors } = smith_normal_form(&rows);
    SublatticeReport { rho: rank, quotient_rank: n - rank, divisors, bset_size: b.len() }
}

/// Maximum number of the points lying on one affine hyperplane.
///
/// Every maximal hyperplane section of an affinely spanning configuration is
/// spanned by `n` independent points of the configuration, so scanning
/// independent `n`-subsets is exhaustive.
pub fn max_hyperplane_points(p: &LatticePolytope) -> usize {
    let n = p.affine_rank();
    if n <= 1 {
        return 1;
    }
    let pts = p.points();
    let mut best = 0;
    for subset in (0..pts.len()).combinations(n) {
        let owned: Vec<Vec<i64>> = subset.iter().map(|&i| pts[i].clone()).collect();
        if diff_rank(&owned, 0) != n - 1 {
            continue;
        }
        let mut count = 0;
        for q in pts {
            let mut ext = owned.clone();
            ext.push(q.clone());
            if diff_rank(&ext, 0) == n - 1 {
                count += 1;
            }
        }
        best = best.max(count);
    }
    best
}

/// Inputs and value of the combinatorial identifiability bound
/// `floor((|P ∩ M| - m) / (n + 1))`, certifying `h`-identifiability for all
/// `h` strictly below the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricBoundData {
    pub npoints: usize,
    /// Max lattice points on a hyperplane section.
    pub m: usize,
    /// Dimension of the toric variety.
    pub n: usize,
    pub bound: i64,
}

pub fn toric_bound(p: &LatticePolytope) -> ToricBoundData {
    let n = p.affine_rank();
    let m = max_hyperplane_points(p);
    let bound = (p.npoints() as i64 - m as i64).div_euclid(n as i64 + 1);
    ToricBoundData { npoints: p.npoints(), m, n, bound }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_cone_over_quartic() -> LatticePolytope {
        LatticePolytope::from_points(vec![
            vec![0, 0],
            vec![1, 0],
            vec![2, 0],
            vec![3, 0],
            vec![4, 0],
            vec![0, 1],
        ])
        .unwrap()
    }

    #[test]
    fn parse_round_trip_with_comments() {
        let text = "# two-simplex, dilation one\n0 0\n1 0 # unit\n\n0 1\n";
        let p = LatticePolytope::parse_str(text).unwrap();
        assert_eq!(p.npoints(), 3);
        assert_eq!(p.ambient(), 2);
        assert_eq!(p.affine_rank(), 2);
    }

    #[test]
    fn parse_rejects_ragged_and_duplicate_rows() {
        assert!(LatticePolytope::parse_str("0 0\n1\n").is_err());
        assert!(LatticePolytope::parse_str("0 0\n0 0\n").is_err());
        assert!(LatticePolytope::parse_str("0 0\n1 x\n").is_err());
    }

    #[test]
    fn bset_of_small_segment_matches_enumeration() {
        // {0,1,2}: spanning pairs {0,1},{0,2},{1,2}, sums {1,2,3}.
        let p = LatticePolytope::segment(2);
        assert_eq!(bset(&p), vec![vec![1], vec![2], vec![3]]);
        // {0,1}: one spanning pair, one sum, so no nonzero differences.
        let q = LatticePolytope::segment(1);
        assert_eq!(bset(&q), vec![vec![1]]);
        assert_eq!(sublattice_report(&q).rho, 0);
    }

    /// Frozen from an independent exhaustive enumeration of spanning-subset
    /// sums and hyperplane sections (see the development oracle scripts):
    /// the dilated simplices and the unit square.
    #[test]
    fn frozen_enumeration_values() {
        let p22 = LatticePolytope::simplex_dilation(2, 2);
        assert_eq!(p22.npoints(), 6);
        assert_eq!(bset(&p22).len(), 10);
        let rep = sublattice_report(&p22);
        assert_eq!((rep.rho, rep.quotient_rank), (2, 0));
        assert_eq!(max_hyperplane_points(&p22), 3);
        assert_eq!(toric_bound(&p22).bound, 1);

        let p62 = LatticePolytope::simplex_dilation(2, 6);
        assert_eq!(p62.npoints(), 28);
        assert_eq!(bset(&p62).len(), 136);
        assert_eq!(max_hyperplane_points(&p62), 7);
        assert_eq!(toric_bound(&p62).bound, 7);

        let sq = LatticePolytope::segment(1).product(&LatticePolytope::segment(1));
        assert_eq!(bset(&sq).len(), 4);
        let rep = sublattice_report(&sq);
        assert_eq!((rep.rho, rep.quotient_rank), (2, 0));
        assert_eq!(max_hyperplane_points(&sq), 2);
        assert_eq!(toric_bound(&sq).bound, 0);
    }

    /// The cone fixture keeps all but one point on a line: its difference
    /// sublattice has rank 1 < n, matching its degenerate Gauss map.
    #[test]
    fn cone_fixture_has_deficient_sublattice() {
        let p = fixture_cone_over_quartic();
        assert_eq!(p.affine_rank(), 2);
        let rep = sublattice_report(&p);
        assert_eq!(rep.rho, 1);
        assert_eq!(rep.quotient_rank, 1);
        assert_eq!(bset(&p).len(), 7);
        assert_eq!(max_hyperplane_points(&p), 5);
        assert_eq!(toric_bound(&p).bound, 0);
    }

    /// Unimodular change of lattice coordinates must not change any of the
    /// reported numbers.
    #[test]
    fn reports_invariant_under_unimodular_maps() {
        let base = LatticePolytope::simplex_dilation(2, 2);
        // x -> x + 2y, y -> x + 3y followed by a translation: determinant 1.
        let mapped = LatticePolytope::from_points(
            base.points()
                .iter()
                .map(|p| vec![p[0] + 2 * p[1] + 5, p[0] + 3 * p[1] - 1])
                .collect(),
        )
        .unwrap();
        assert_eq!(bset(&base).len(), bset(&mapped).len());
        let a = sublattice_report(&base);
        let b = sublattice_report(&mapped);
        assert_eq!((a.rho, a.quotient_rank, a.divisors), (b.rho, b.quotient_rank, b.divisors));
        assert_eq!(max_hyperplane_points(&base), max_hyperplane_points(&mapped));
        assert_eq!(toric_bound(&base).bound, toric_bound(&mapped).bound);
    }
}
