//! Constructive non-identifiability witnesses over exact rationals, and
//! the dossier assembling them into a verified counterexample to the
//! expectation that generically finite secant maps are birational.
//!
//! Everything here runs over Q with exact linear algebra, so incidence
//! certificates are unconditional rather than probabilistic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldKind, FieldScalar};
use crate::matrix::ExactMatrix;
use crate::sample::{RankOptions, Sampler, MAX_RESAMPLE};
use crate::secant::{secant_dim, Verdict};
use crate::unipoly::UniPoly;
use crate::variety::{make_rnc, ParamVariety};
use crate::SCHEMA_VERSION;

fn render_scalar(v: &FieldScalar) -> String {
    match v.as_rational() {
        Some(r) => r.to_string(),
        None => format!("{v:?}"),
    }
}

fn render_vec(v: &[FieldScalar]) -> Vec<String> {
    v.iter().map(render_scalar).collect()
}

fn render_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.nrows()).map(|i| render_vec(m.row(i))).collect()
}

/// A plane through a point meeting every input plane, with its exact
/// incidence certificate.
#[derive(Serialize, Clone, Debug)]
pub struct PlaneWitness {
    /// Projective ambient dimension.
    pub ambient: usize,
    /// The common point, projective coordinates over Q.
    pub point: Vec<String>,
    /// Basis rows of the output plane.
    pub plane: Vec<Vec<String>>,
    /// Exact intersection point with each input plane, in input order.
    pub incidences: Vec<Vec<String>>,
    #[serde(skip)]
    pub plane_basis: ExactMatrix,
    #[serde(skip)]
    pub incidence_points: Vec<Vec<FieldScalar>>,
}

fn span_of(parts: &[&ExactMatrix]) -> Result<ExactMatrix> {
    let mut rows = Vec::new();
    for p in parts {
        rows.extend(p.rows_vec());
    }
    ExactMatrix::from_rows(rows)
}

fn point_matrix(p: &[FieldScalar]) -> Result<ExactMatrix> {
    ExactMatrix::from_rows(vec![p.to_vec()])
}

/// The single projective point in the intersection of two row spaces;
/// errors when the intersection is not exactly a point.
fn intersection_point(
    a: &ExactMatrix,
    b: &ExactMatrix,
    step: &str,
) -> Result<Vec<FieldScalar>> {
    match a.intersect_rows(b)? {
        Some(m) if m.nrows() == 1 => Ok(m.row(0).to_vec()),
        Some(m) => Err(Error::HypothesisFailed(format!(
            "{step}: intersection has dimension {} instead of a single point",
            m.nrows() as i64 - 1
        ))),
        None => {
            Err(Error::HypothesisFailed(format!("{step}: intersection is empty")))
        }
    }
}

fn transversal_recurse(planes: &[ExactMatrix], p: &[FieldScalar]) -> Result<ExactMatrix> {
    let h = planes.len();
    if h == 1 {
        // p must already lie on the single plane; the witness is p itself.
        if !planes[0].row_space_contains(p)? {
            return Err(Error::HypothesisFailed(
                "base step: the point does not lie on the last remaining plane".into(),
            ));
        }
        return point_matrix(p);
    }
    let head: Vec<&ExactMatrix> = planes[..h - 1].iter().collect();
    let head_span = span_of(&head)?;
    let with_p = span_of(&[&head_span, &point_matrix(p)?])?;
    let q = intersection_point(&with_p, &planes[h - 1], "joint span against last plane")?;
    let line = ExactMatrix::from_rows(vec![p.to_vec(), q.clone()])?;
    let p_prime = intersection_point(&line, &head_span, "transversal line against head span")?;
    let inner = transversal_recurse(&planes[..h - 1], &p_prime)?;
    span_of(&[&inner, &point_matrix(&q)?])
}

/// Constructs the unique plane of projective dimension `h - 1` passing
/// through `p` and meeting each of the `h` given pairwise-disjoint planes
/// of projective dimension `r - 1` that jointly span the ambient space.
///
/// The recursion peels one plane at a time: the span of `p` with all but
/// the last plane meets the last plane in a single point `q`; the line
/// through `p` and `q` meets the remaining span in a point to recurse on;
/// the result is rebuilt by adjoining `q`.
pub fn transversal_plane(planes: &[ExactMatrix], p: &[FieldScalar]) -> Result<PlaneWitness> {
    if planes.is_empty() {
        return Err(Error::InvalidInput("need at least one input plane".into()));
    }
    let cols = planes[0].ncols();
    if planes.iter().any(|m| m.ncols() != cols) || p.len() != cols {
        return Err(Error::InvalidInput("ambient dimensions differ".into()));
    }
    let r = planes[0].nrows();
    if planes.iter().any(|m| m.nrows() != r || m.rank() != r) {
        return Err(Error::InvalidInput("input planes must have independent basis rows".into()));
    }
    let all = span_of(&planes.iter().collect::<Vec<_>>())?;
    if all.rank() != planes.len() * r || planes.len() * r != cols {
        return Err(Error::InvalidInput(
            "input planes must be pairwise disjoint and jointly span the ambient space".into(),
        ));
    }
    let basis = transversal_recurse(planes, p)?;
    if basis.rank() != planes.len() {
        return Err(Error::HypothesisFailed(format!(
            "constructed plane has rank {} instead of {}",
            basis.rank(),
            planes.len()
        )));
    }
    if !basis.row_space_contains(p)? {
        return Err(Error::HypothesisFailed("constructed plane misses the base point".into()));
    }
    let mut incidence_points = Vec::with_capacity(planes.len());
    for (i, plane) in planes.iter().enumerate() {
        incidence_points.push(intersection_point(
            &basis,
            plane,
            &format!("incidence certificate for input plane {i}"),
        )?);
    }
    Ok(PlaneWitness {
        ambient: cols - 1,
        point: render_vec(p),
        plane: render_rows(&basis),
        incidences: incidence_points.iter().map(|v| render_vec(v)).collect(),
        plane_basis: basis,
        incidence_points,
    })
}

/// All partitions of `0..n` into unordered blocks of size `r`, each block
/// sorted, generated with the least unused index anchoring a new block so
/// every partition appears exactly once.
fn equal_block_partitions(n: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(remaining: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>, r: usize) {
        if remaining.is_empty() {
            out.push(acc.clone());
            return;
        }
        let anchor = remaining[0];
        let rest: Vec<usize> = remaining[1..].to_vec();
        // Choose r - 1 companions for the anchor.
        let k = r - 1;
        let mut idx: Vec<usize> = (0..k).collect();
        if k > rest.len() {
            return;
        }
        loop {
            let mut block = vec![anchor];
            block.extend(idx.iter().map(|&i| rest[i]));
            let mut next: Vec<usize> =
                (0..rest.len()).filter(|i| !idx.contains(i)).map(|i| rest[i]).collect();
            acc.push(block);
            go(&mut next, acc, out, r);
            acc.pop();
            // Advance the combination.
            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if idx[i] != i + rest.len() - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    assert!(r >= 1 && n % r == 0);
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&mut remaining, &mut Vec::new(), &mut out, r);
    out
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

/// `(hr)! / ((r!)^h h!)`, the number of partitions of `hr` labeled points
/// into `h` unordered blocks of `r`.
pub fn partition_count(h: u64, r: u64) -> u64 {
    use num_traits::ToPrimitive;
    let num = factorial(h * r);
    let den = factorial(r).pow(h as u32) * factorial(h);
    (num / den).to_u64().expect("desk-scale counts fit in u64")
}

/// Witness family showing a general point of the `h`-th secant of the
/// `r`-th secant variety of `Y` has many decompositions.
#[derive(Serialize, Clone, Debug)]
pub struct WitnessReport {
    pub schema_version: String,
    pub variety: String,
    pub r: usize,
    pub h: usize,
    /// Ambient projective dimension of `Y`.
    pub ambient: usize,
    /// The common general point, a combination of all `hr` sampled points.
    pub point: Vec<String>,
    pub count: usize,
    pub expected_count: u64,
    pub all_contain_point: bool,
    pub pairwise_distinct: bool,
    pub witnesses: Vec<PlaneWitness>,
    pub seed: u64,
}

/// Samples `hr` rational points on `Y`, forms a general combination `p`,
/// and returns one incidence-certified plane witness per partition of the
/// points into `h` blocks of `r`: each block spans an `(r-1)`-plane of the
/// `r`-th secant variety, and the witness plane through `p` exhibits one
/// decomposition of `p` into `h` such secant points.
pub fn decomposition_witnesses(
    y: &ParamVariety,
    r: usize,
    h: usize,
    opts: &RankOptions,
) -> Result<WitnessReport> {
    if r < 1 || h < 1 {
        return Err(Error::InvalidInput("need r >= 1 and h >= 1".into()));
    }
    let total = h * r;
    if total > y.ambient() + 1 {
        return Err(Error::InvalidInput(format!(
            "{total} points cannot span a P^{} inside P^{}",
            total - 1,
            y.ambient()
        )));
    }
    let label = format!("witness:{}:{}:{}", y.name(), r, h);
    let kind = FieldKind::Rational;
    let mut s = Sampler::new(opts.seed, &label, 0, 0);
    'attempt: for _ in 0..MAX_RESAMPLE {
        let mut images = Vec::with_capacity(total);
        for _ in 0..total {
            let u = s.rational_point(y.nparams(), 25);
            match y.eval(&u, kind) {
                Ok(v) => images.push(v),
                Err(Error::ForbiddenPoint(_)) | Err(Error::DivisionByZero) => continue 'attempt,
                Err(e) => return Err(e),
            }
        }
        let span = ExactMatrix::from_rows(images.clone())?;
        if span.rank() != total {
            continue 'attempt;
        }
        // General combination with small nonzero weights.
        let weights: Vec<BigRational> = (0..total)
            .map(|_| BigRational::from(BigInt::from(s.nonzero_int(25))))
            .collect();
        let mut p = vec![FieldScalar::zero(kind); y.ambient() + 1];
        for (img, w) in images.iter().zip(&weights) {
            let wf = FieldScalar::from_rational(w.clone());
            for (acc, v) in p.iter_mut().zip(img) {
                *acc = acc.add(&wf.mul(v));
            }
        }
        let mut witnesses = Vec::new();
        for partition in equal_block_partitions(total, r) {
            let planes: Result<Vec<ExactMatrix>> = partition
                .iter()
                .map(|block| {
                    ExactMatrix::from_rows(block.iter().map(|&i| images[i].clone()).collect())
                })
                .collect();
            let planes = planes?;
            // Blocks span P^{hr-1} jointly; the plane construction runs in
            // the full ambient but inside that span.
            witnesses.push(transversal_plane_in_subspace(&planes, &p)?);
        }
        let expected = partition_count(h as u64, r as u64);
        let mut pairwise_distinct = true;
        for i in 0..witnesses.len() {
            for j in i + 1..witnesses.len() {
                if witnesses[i].plane_basis.row_space_eq(&witnesses[j].plane_basis)? {
                    pairwise_distinct = false;
                }
            }
        }
        let mut all_contain = true;
        for w in &witnesses {
            if !w.plane_basis.row_space_contains(&p)? {
                all_contain = false;
            }
        }
        return Ok(WitnessReport {
            schema_version: SCHEMA_VERSION.to_string(),
            variety: y.name().to_string(),
            r,
            h,
            ambient: y.ambient(),
            point: render_vec(&p),
            count: witnesses.len(),
            expected_count: expected,
            all_contain_point: all_contain,
            pairwise_distinct,
            witnesses,
            seed: opts.seed,
        });
    }
    Err(Error::DegenerateSample { retries: MAX_RESAMPLE, context: label })
}

/// Like [`transversal_plane`] but allows the joint span of the input planes to be
/// a proper subspace of the ambient, as long as `p` lies in it; all
/// intersection counting happens inside that span.
fn transversal_plane_in_subspace(planes: &[ExactMatrix], p: &[FieldScalar]) -> Result<PlaneWitness> {
    let r = planes[0].nrows();
    let all = span_of(&planes.iter().collect::<Vec<_>>())?;
    if all.rank() != planes.len() * r {
        return Err(Error::InvalidInput("input planes are not pairwise disjoint".into()));
    }
    if !all.row_space_contains(p)? {
        return Err(Error::InvalidInput("the point lies outside the joint span".into()));
    }
    let basis = transversal_recurse(planes, p)?;
    if basis.rank() != planes.len() || !basis.row_space_contains(p)? {
        return Err(Error::HypothesisFailed("constructed plane fails its rank checks".into()));
    }
    let mut incidence_points = Vec::with_capacity(planes.len());
    for (i, plane) in planes.iter().enumerate() {
        incidence_points.push(intersection_point(
            &basis,
            plane,
            &format!("incidence certificate for input plane {i}"),
        )?);
    }
    Ok(PlaneWitness {
        ambient: planes[0].ncols() - 1,
        point: render_vec(p),
        plane: render_rows(&basis),
        incidences: incidence_points.iter().map(|v| render_vec(v)).collect(),
        plane_basis: basis,
        incidence_points,
    })
}

/// Outcome of projecting a degree-`N` rational normal curve from the span
/// of `t` of its tangent lines.
#[derive(Serialize, Clone, Debug)]
pub struct ProjectionReport {
    pub schema_version: String,
    pub degree_in: usize,
    pub tangent_points: usize,
    /// Integer parameter values of the tangency points.
    pub parameters: Vec<i64>,
    /// Rank of the stacked tangent-line rows; always `2t` (tangent lines
    /// at distinct points of the curve impose independent conditions).
    pub center_rank: usize,
    /// Projective dimension of the span of the image curve, `N - 2t`.
    pub span_dim: usize,
    /// Degree of the image: parameter solutions of a generic hyperplane
    /// pullback, counted with multiplicity over Q.
    pub image_degree: usize,
    /// Whether a general image point has a single parameter preimage,
    /// decided by the gcd of two independent hyperplane pullbacks through
    /// a general image point.
    pub birational: bool,
    /// The monic gcd's degree (1 certifies birationality).
    pub fiber_gcd_degree: usize,
}

/// Projects the degree-`N` rational normal curve `u -> (1, u, ..., u^N)`
/// from the span of its tangent lines at `t` integer parameters, and
/// measures span, degree, and birationality of the image curve exactly.
pub fn rnc_tangential_projection(n_deg: usize, t: usize) -> Result<ProjectionReport> {
    rnc_tangential_projection_seeded(n_deg, t, &RankOptions::default())
}

pub fn rnc_tangential_projection_seeded(
    n_deg: usize,
    t: usize,
    opts: &RankOptions,
) -> Result<ProjectionReport> {
    if t == 0 || 2 * t > n_deg.saturating_sub(1) {
        return Err(Error::InvalidInput(format!(
            "need 1 <= t and 2t <= N - 1; got N = {n_deg}, t = {t}"
        )));
    }
    let nn = n_deg + 1;
    let kind = FieldKind::Rational;
    // Small distinct integer parameters keep the exact arithmetic light.
    let params: Vec<i64> = (0..t as i64).map(|i| i - (t as i64) / 2).collect();
    let gamma = |a: i64| -> Vec<FieldScalar> {
        let ar = BigRational::from(BigInt::from(a));
        let mut v = Vec::with_capacity(nn);
        let mut acc = BigRational::one();
        for _ in 0..nn {
            v.push(FieldScalar::from_rational(acc.clone()));
            acc *= &ar;
        }
        v
    };
    let dgamma = |a: i64| -> Vec<FieldScalar> {
        let ar = BigRational::from(BigInt::from(a));
        let mut v = vec![FieldScalar::zero(kind); nn];
        let mut acc = BigRational::one();
        for k in 1..nn {
            v[k] = FieldScalar::from_rational(BigRational::from(BigInt::from(k as i64)) * &acc);
            acc *= &ar;
        }
        v
    };
    let mut center_rows = Vec::with_capacity(2 * t);
    for &a in &params {
        center_rows.push(gamma(a));
        center_rows.push(dgamma(a));
    }
    let center = ExactMatrix::from_rows(center_rows)?;
    let center_rank = center.rank();
    if center_rank != 2 * t {
        return Err(Error::HypothesisFailed(format!(
            "tangent lines at distinct points must be independent; rank {center_rank} != {}",
            2 * t
        )));
    }
    // Projection functionals: a basis of the annihilator of the center.
    let funcs = center
        .nullspace()
        .ok_or_else(|| Error::HypothesisFailed("projection center fills the space".into()))?;
    debug_assert_eq!(funcs.nrows(), nn - 2 * t);
    // Each functional row, read as little-endian coefficients, is the
    // pullback polynomial w . gamma(u); tangency makes every parameter a
    // double root, removed exactly.
    let mut coords = Vec::with_capacity(funcs.nrows());
    for i in 0..funcs.nrows() {
        let coeffs: Vec<BigRational> = funcs
            .row(i)
            .iter()
            .map(|v| v.as_rational().expect("rational field").clone())
            .collect();
        let mut poly = UniPoly::new(coeffs);
        for &a in &params {
            poly = poly.deflate_double_root(&BigRational::from(BigInt::from(a)))?;
        }
        coords.push(poly);
    }
    let target = n_deg - 2 * t;
    // Span of the image: rank of the deflated coefficient matrix.
    let coeff_rows: Vec<Vec<FieldScalar>> = coords
        .iter()
        .map(|p| {
            (0..=target).map(|k| FieldScalar::from_rational(p.coeff(k))).collect()
        })
        .collect();
    let span_dim = ExactMatrix::from_rows(coeff_rows)?.rank() - 1;
    let label = format!("rnc-projection:{n_deg}:{t}");
    let mut s = Sampler::new(opts.seed, &label, 0, 0);
    // Image degree: generic hyperplane pullback degree.
    let mut image_degree = 0;
    for _ in 0..MAX_RESAMPLE {
        let mut combo = UniPoly::zero();
        for c in &coords {
            combo = combo.add_scaled(c, &BigRational::from(BigInt::from(s.nonzero_int(50))));
        }
        if let Some(d) = combo.degree() {
            image_degree = image_degree.max(d);
            if d == target {
                break;
            }
        }
    }
    // Birationality: gcd of two generic hyperplane pullbacks through the
    // image of a general parameter value.
    let mut birational = false;
    let mut fiber_gcd_degree = 0;
    'outer: for _ in 0..MAX_RESAMPLE {
        let u0 = s.nonzero_int(50);
        if params.contains(&u0) {
            continue;
        }
        let u0r = BigRational::from(BigInt::from(u0));
        let values: Vec<BigRational> = coords.iter().map(|p| p.eval(&u0r)).collect();
        let Some(anchor) = values.iter().position(|v| !v.is_zero()) else {
            continue;
        };
        let mut pullbacks = Vec::with_capacity(2);
        for _ in 0..2 {
            // Random functional adjusted to vanish on the image point.
            let cs: Vec<BigRational> = (0..coords.len())
                .map(|_| BigRational::from(BigInt::from(s.nonzero_int(50))))
                .collect();
            let dot: BigRational =
                cs.iter().zip(&values).map(|(c, v)| c * v).sum();
            let mut combo = UniPoly::zero();
            for (j, c) in coords.iter().enumerate() {
                let mut w = cs[j].clone();
                if j == anchor {
                    w -= &dot / &values[anchor];
                }
                combo = combo.add_scaled(c, &w);
            }
            if combo.is_zero() {
                continue 'outer;
            }
            pullbacks.push(combo);
        }
        let g = UniPoly::gcd(&pullbacks[0], &pullbacks[1])?;
        fiber_gcd_degree = g.degree().unwrap_or(0);
        // The expected gcd is exactly (u - u0).
        let expected = UniPoly::new(vec![-u0r.clone(), BigRational::one()]);
        birational = g == expected;
        break;
    }
    Ok(ProjectionReport {
        schema_version: SCHEMA_VERSION.to_string(),
        degree_in: n_deg,
        tangent_points: t,
        parameters: params,
        center_rank,
        span_dim,
        image_degree,
        birational,
        fiber_gcd_degree,
    })
}

/// Verdict and evidence that the `r`-th secant variety of a degree-`N`
/// rational normal curve is a counterexample to `h`-identifiability, for
/// `h = (N + 1) / 2r`.
#[derive(Serialize, Clone, Debug)]
pub struct CounterexampleDossier {
    pub schema_version: String,
    pub n_deg: usize,
    pub r: usize,
    pub h: usize,
    /// The top secant of the curve itself must be nondefective.
    pub curve_secant: crate::secant::RankReport,
    /// The `r(h-1)`-fold tangential projection must stay a minimal-degree
    /// curve and be birational.
    pub projection: ProjectionReport,
    /// At least two exact decompositions of a general point.
    pub witnesses: WitnessReport,
    /// `h (2r - 1) + h - 1 = N`: the perfect-fit identity behind the
    /// construction, checked on the computed secant dimension.
    pub perfect_fit: bool,
    pub verdict: String,
}

/// Runs the full counterexample pipeline for the degree-`N` rational
/// normal curve and the secant power `r`: nondefectiveness of the
/// `hr`-th secant of the curve, minimality and birationality of the
/// tangential projection, and at least two certified decompositions.
pub fn verify_counterexample(
    n_deg: usize,
    r: usize,
    opts: &RankOptions,
) -> Result<CounterexampleDossier> {
    if n_deg < 7 {
        return Err(Error::InvalidInput("need N >= 7".into()));
    }
    if r < 1 || (n_deg + 1) % (2 * r) != 0 {
        return Err(Error::InvalidInput(format!(
            "need N + 1 divisible by 2r; got N = {n_deg}, r = {r}"
        )));
    }
    let h = (n_deg + 1) / (2 * r);
    if h < 2 {
        return Err(Error::InvalidInput(format!(
            "need h = (N + 1) / 2r >= 2; got h = {h}"
        )));
    }
    let curve = make_rnc(n_deg)?;
    let curve_secant = secant_dim(&curve, h * r, opts)?;
    let secants_ok = curve_secant.verdict != Verdict::DefectiveProbable;
    let projection = rnc_tangential_projection_seeded(n_deg, r * (h - 1), opts)?;
    let target = 2 * r - 1;
    let projection_ok = projection.birational
        && projection.span_dim == target
        && projection.image_degree == target;
    let witnesses = decomposition_witnesses(&curve, r, h, opts)?;
    let witnesses_ok = witnesses.count as u64 == witnesses.expected_count
        && witnesses.count >= 2
        && witnesses.all_contain_point
        && witnesses.pairwise_distinct;
    let r_secant = secant_dim(&curve, r, opts)?;
    let perfect_fit = h * r_secant.dim + h - 1 == n_deg;
    let all = secants_ok && projection_ok && witnesses_ok && perfect_fit;
    Ok(CounterexampleDossier {
        schema_version: SCHEMA_VERSION.to_string(),
        n_deg,
        r,
        h,
        curve_secant,
        projection,
        witnesses,
        perfect_fit,
        verdict: if all { "counterexample-verified" } else { "not-verified" }.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(v: i64) -> FieldScalar {
        FieldScalar::from_i64(FieldKind::Rational, v)
    }

    fn mat(rows: Vec<Vec<i64>>) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(rational).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn transversal_to_two_skew_lines() {
        // Classical case in P^3: lines {x2=x3=0} and {x0=x1=0}.
        let l1 = mat(vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let l2 = mat(vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        let p = vec![rational(1), rational(2), rational(3), rational(5)];
        let w = transversal_plane(&[l1.clone(), l2.clone()], &p).unwrap();
        assert_eq!(w.plane_basis.nrows(), 2);
        // The unique transversal through p meets l1 at (1:2:0:0) and l2 at
        // (0:0:3:5).
        let expect = mat(vec![vec![1, 2, 0, 0], vec![0, 0, 3, 5]]);
        assert!(w.plane_basis.row_space_eq(&expect).unwrap());
    }

    #[test]
    fn transversal_order_independence_and_uniqueness() {
        let l1 = mat(vec![vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0]]);
        let l2 = mat(vec![vec![0, 0, 1, 0, 0, 0], vec![0, 0, 0, 1, 0, 0]]);
        let l3 = mat(vec![vec![0, 0, 0, 0, 1, 0], vec![0, 0, 0, 0, 0, 1]]);
        let p = vec![
            rational(1),
            rational(2),
            rational(3),
            rational(5),
            rational(7),
            rational(11),
        ];
        let a = transversal_plane(&[l1.clone(), l2.clone(), l3.clone()], &p).unwrap();
        let b = transversal_plane(&[l3, l1, l2], &p).unwrap();
        assert!(a.plane_basis.row_space_eq(&b.plane_basis).unwrap());
        assert_eq!(a.incidences.len(), 3);
    }

    #[test]
    fn transversal_to_two_disjoint_planes_in_p5() {
        let a = mat(vec![vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0]]);
        let b = mat(vec![vec![0, 0, 0, 1, 0, 0], vec![0, 0, 0, 0, 1, 0], vec![0, 0, 0, 0, 0, 1]]);
        let p = vec![
            rational(1),
            rational(2),
            rational(3),
            rational(5),
            rational(7),
            rational(11),
        ];
        let w = transversal_plane(&[a, b], &p).unwrap();
        // A line meeting both planes.
        assert_eq!(w.plane_basis.nrows(), 2);
        let expect = mat(vec![vec![1, 2, 3, 0, 0, 0], vec![0, 0, 0, 5, 7, 11]]);
        assert!(w.plane_basis.row_space_eq(&expect).unwrap());
    }

    #[test]
    fn partition_generation_and_count() {
        assert_eq!(equal_block_partitions(4, 2).len(), 3);
        assert_eq!(equal_block_partitions(6, 2).len(), 15);
        assert_eq!(equal_block_partitions(6, 3).len(), 10);
        assert_eq!(equal_block_partitions(3, 1).len(), 1);
        assert_eq!(partition_count(2, 2), 3);
        assert_eq!(partition_count(3, 2), 15);
        assert_eq!(partition_count(2, 3), 10);
        assert_eq!(partition_count(4, 1), 1);
    }

    #[test]
    fn witnesses_on_a_degree_seven_curve() {
        let y = make_rnc(7).unwrap();
        let rep = decomposition_witnesses(&y, 2, 2, &RankOptions::with_seed(5)).unwrap();
        assert_eq!(rep.count, 3);
        assert_eq!(rep.expected_count, 3);
        assert!(rep.all_contain_point);
        assert!(rep.pairwise_distinct);
    }

    #[test]
    fn single_partition_for_r_equal_one() {
        let y = make_rnc(5).unwrap();
        let rep = decomposition_witnesses(&y, 1, 3, &RankOptions::with_seed(5)).unwrap();
        assert_eq!(rep.count, 1);
        assert_eq!(rep.expected_count, 1);
    }

    #[test]
    fn projection_of_degree_seven_curve_from_two_tangents() {
        let rep = rnc_tangential_projection(7, 2).unwrap();
        assert_eq!(rep.center_rank, 4);
        assert_eq!(rep.span_dim, 3);
        assert_eq!(rep.image_degree, 3);
        assert!(rep.birational);
        assert_eq!(rep.fiber_gcd_degree, 1);
    }

    #[test]
    fn projection_to_a_line_is_degree_one() {
        let rep = rnc_tangential_projection(7, 3).unwrap();
        assert_eq!(rep.span_dim, 1);
        assert_eq!(rep.image_degree, 1);
    }

    #[test]
    fn projection_precondition() {
        assert!(rnc_tangential_projection(7, 4).is_err());
    }

    #[test]
    fn counterexample_pipeline_smallest_case() {
        let d = verify_counterexample(7, 2, &RankOptions::with_seed(5)).unwrap();
        assert_eq!(d.h, 2);
        assert_eq!(d.verdict, "counterexample-verified");
        assert_eq!(d.witnesses.count, 3);
        assert!(d.perfect_fit);
    }
}
