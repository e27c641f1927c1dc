//! Tangential degeneracy measures: the rank of the family of embedded
//! tangent planes and the dimension of the locus where a general spanning
//! hyperplane stays tangent.
//!
//! Both computations work at a random point of a chart over a large prime
//! field and reduce second partial derivatives modulo the span of the
//! relevant first-order data. Ranks obtained this way are lower bounds for
//! the generic rank, so "nondegenerate" outcomes are certificates while
//! "degenerate" outcomes are correct up to the usual Schwartz-Zippel
//! failure probability (two primes, several trials).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::facts::known_fact;
use crate::field::{FieldKind, FieldScalar};
use crate::matrix::ExactMatrix;
use crate::sample::{PrimeRank, RankOptions, Sampler, MAX_RESAMPLE};
use crate::variety::ParamVariety;
use crate::SCHEMA_VERSION;

/// Which column order the reduction uses when choosing complement
/// coordinates. The reported dimensions must not depend on the choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectorStrategy {
    Natural,
    Reversed,
}

impl ProjectorStrategy {
    fn order(self, ncols: usize) -> Vec<usize> {
        match self {
            ProjectorStrategy::Natural => (0..ncols).collect(),
            ProjectorStrategy::Reversed => (0..ncols).rev().collect(),
        }
    }
}

/// Rank of the tangent-plane family of a variety.
#[derive(Serialize, Clone, Debug)]
pub struct GaussReport {
    pub schema_version: String,
    pub variety: String,
    /// Dimension of the variety.
    pub n: usize,
    pub nparams: usize,
    /// Rank of the map sending a general point to its embedded tangent
    /// plane; equals `n` exactly when the family is nondegenerate.
    pub gauss_rank: usize,
    pub degenerate: bool,
    pub per_prime: Vec<PrimeRank>,
    pub agreement: bool,
    pub trials: u64,
    pub seed: u64,
}

fn sample_point(s: &mut Sampler, nvars: usize, kind: FieldKind) -> Vec<FieldScalar> {
    match kind {
        FieldKind::Prime(p) => s.fp_point(nvars, p),
        FieldKind::Rational => s.rational_point(nvars, 1000),
    }
}

/// One evaluation of the tangent-plane-family rank at a random point.
fn gauss_rank_once(x: &ParamVariety, kind: FieldKind, s: &mut Sampler) -> Result<usize> {
    let n = x.dim();
    let m = x.nparams();
    let nn = x.ambient() + 1;
    for _ in 0..MAX_RESAMPLE {
        let pt = sample_point(s, m, kind);
        let jets = match x.jet_eval(&pt, kind) {
            Ok(j) => j,
            Err(Error::ForbiddenPoint(_)) | Err(Error::DivisionByZero) => continue,
            Err(e) => return Err(e),
        };
        let mut rows = Vec::with_capacity(m + 1);
        rows.push(jets.iter().map(|j| j.val.clone()).collect::<Vec<_>>());
        for i in 0..m {
            rows.push(jets.iter().map(|j| j.grad[i].clone()).collect());
        }
        let mut tangent = ExactMatrix::from_rows(rows)?;
        let pivots = tangent.rref();
        if pivots.len() != n + 1 {
            // Singular or otherwise non-generic sample.
            continue;
        }
        let nonpivot: Vec<usize> = (0..nn).filter(|c| !pivots.contains(c)).collect();
        // Kernel of v |-> (sum_j v_j d_i d_j phi mod tangent span)_i. Fiber
        // directions of the chart always lie in this kernel, so the excess
        // over m - n measures degeneracy of the tangent-plane family.
        let mut sys: Vec<Vec<FieldScalar>> = Vec::with_capacity(m * nonpivot.len());
        for i in 0..m {
            let mut block =
                vec![vec![FieldScalar::zero(kind); m]; nonpivot.len()];
            for j in 0..m {
                let mut w: Vec<FieldScalar> =
                    (0..nn).map(|c| jets[c].hess_at(i, j).clone()).collect();
                tangent.reduce_against_rref(&pivots, &mut w);
                for (ci, &c) in nonpivot.iter().enumerate() {
                    block[ci][j] = w[c].clone();
                }
            }
            sys.extend(block);
        }
        let rank_sys = if sys.is_empty() { 0 } else { ExactMatrix::from_rows(sys)?.rank() };
        let kdim = m - rank_sys;
        if kdim < m - n {
            continue;
        }
        return Ok(m - kdim);
    }
    Err(Error::DegenerateSample { retries: MAX_RESAMPLE, context: format!("gauss:{}", x.name()) })
}

/// Rank of the map from a general point to its embedded tangent plane.
///
/// A rank below `dim X` means infinitely many points share a tangent
/// plane, which invalidates arguments that count tangent planes.
pub fn gauss_rank(x: &ParamVariety, opts: &RankOptions) -> Result<GaussReport> {
    let label = format!("gauss:{}", x.name());
    let mut per_prime = Vec::new();
    for &p in &opts.primes {
        let kind = FieldKind::Prime(p);
        let mut best = 0usize;
        for trial in 0..opts.trials {
            let mut s = Sampler::new(opts.seed, &label, p, trial);
            best = best.max(gauss_rank_once(x, kind, &mut s)?);
        }
        per_prime.push(PrimeRank { prime: p, rank: best });
    }
    let rank = per_prime.iter().map(|pr| pr.rank).max().unwrap_or(0);
    let agreement = per_prime.iter().all(|pr| pr.rank == rank);
    Ok(GaussReport {
        schema_version: SCHEMA_VERSION.to_string(),
        variety: x.name().to_string(),
        n: x.dim(),
        nparams: x.nparams(),
        gauss_rank: rank,
        degenerate: rank < x.dim(),
        per_prime,
        agreement,
        trials: opts.trials,
        seed: opts.seed,
    })
}

/// Dimension of the tangential contact locus for `h` general points.
#[derive(Serialize, Clone, Debug)]
pub struct ContactReport {
    pub schema_version: String,
    pub variety: String,
    pub h: usize,
    pub n: usize,
    /// Rank of the combined tangent-cone span, `h * (n + 1)` when the `h`
    /// tangent spaces are independent (required).
    pub span_rank: usize,
    /// Dimension of the locus through the first point along which a general
    /// hyperplane containing all `h` tangent planes stays tangent. Zero
    /// means the contact locus is finite.
    pub gamma: usize,
    pub jacobian_rank: usize,
    /// The residual of the first point's tangent rows after projection must
    /// vanish identically; recorded as a sanity witness.
    pub constraint_vanishes: bool,
    pub per_prime: Vec<PrimeRank>,
    pub agreement: bool,
    pub trials: u64,
    pub seed: u64,
}

fn contact_once(
    x: &ParamVariety,
    h: usize,
    strategy: ProjectorStrategy,
    kind: FieldKind,
    s: &mut Sampler,
) -> Result<(usize, usize, bool)> {
    let n = x.dim();
    let m = x.nparams();
    let nn = x.ambient() + 1;
    'attempt: for _ in 0..MAX_RESAMPLE {
        let base = sample_point(s, m, kind);
        let jets = match x.jet_eval(&base, kind) {
            Ok(j) => j,
            Err(Error::ForbiddenPoint(_)) | Err(Error::DivisionByZero) => continue,
            Err(e) => return Err(e),
        };
        let mut rows = Vec::with_capacity(h * (m + 1));
        rows.push(jets.iter().map(|j| j.val.clone()).collect::<Vec<_>>());
        for i in 0..m {
            rows.push(jets.iter().map(|j| j.grad[i].clone()).collect());
        }
        for _ in 1..h {
            let pt = sample_point(s, m, kind);
            match x.cone_rows(&pt, kind) {
                Ok(r) => rows.extend(r),
                Err(Error::ForbiddenPoint(_)) | Err(Error::DivisionByZero) => continue 'attempt,
                Err(e) => return Err(e),
            }
        }
        let mut span = ExactMatrix::from_rows(rows)?;
        let pivots = span.rref_with_order(&strategy.order(nn));
        if pivots.len() != h * (n + 1) {
            continue;
        }
        let nonpivot: Vec<usize> = (0..nn).filter(|c| !pivots.contains(c)).collect();
        // Sanity: the first point's own tangent rows project to zero.
        let mut vanishes = true;
        let mut check = |v: Vec<FieldScalar>| {
            let mut v = v;
            span.reduce_against_rref(&pivots, &mut v);
            if v.iter().any(|e| !e.is_zero()) {
                vanishes = false;
            }
        };
        check(jets.iter().map(|j| j.val.clone()).collect());
        for i in 0..m {
            check(jets.iter().map(|j| j.grad[i].clone()).collect());
        }
        // Jacobian of the projected constraint map at the first point. The
        // value block differentiates to projected gradients, which vanish
        // because the gradients lie in the span, so only the projected
        // second partials contribute rows.
        for j in 0..m {
            let mut g: Vec<FieldScalar> = (0..nn).map(|c| jets[c].grad[j].clone()).collect();
            span.reduce_against_rref(&pivots, &mut g);
            debug_assert!(g.iter().all(|e| e.is_zero()));
        }
        let mut jac: Vec<Vec<FieldScalar>> = Vec::with_capacity(m * nonpivot.len());
        for i in 0..m {
            let mut block = vec![vec![FieldScalar::zero(kind); m]; nonpivot.len()];
            for j in 0..m {
                let mut w: Vec<FieldScalar> =
                    (0..nn).map(|c| jets[c].hess_at(i, j).clone()).collect();
                span.reduce_against_rref(&pivots, &mut w);
                for (ci, &c) in nonpivot.iter().enumerate() {
                    block[ci][j] = w[c].clone();
                }
            }
            jac.extend(block);
        }
        let jrank = if jac.is_empty() { 0 } else { ExactMatrix::from_rows(jac)?.rank() };
        if jrank > n {
            continue;
        }
        return Ok((pivots.len(), jrank, vanishes));
    }
    Err(Error::DegenerateSample {
        retries: MAX_RESAMPLE,
        context: format!("contact:{}:{}", x.name(), h),
    })
}

/// Dimension of the contact locus of a general hyperplane tangent at `h`
/// general points, measured along the first point.
///
/// Requires the `h` tangent planes to be independent, i.e.
/// `h (n + 1) <= N + 1` and the actual span of rank `h (n + 1)`; apply to
/// nondefective situations only.
pub fn contact_locus_dim(x: &ParamVariety, h: usize, opts: &RankOptions) -> Result<ContactReport> {
    contact_locus_dim_with(x, h, ProjectorStrategy::Natural, opts)
}

/// Same as [`contact_locus_dim`] with an explicit complement-coordinate
/// strategy; the result is independent of the strategy.
pub fn contact_locus_dim_with(
    x: &ParamVariety,
    h: usize,
    strategy: ProjectorStrategy,
    opts: &RankOptions,
) -> Result<ContactReport> {
    if h == 0 {
        return Err(Error::InvalidInput("need h >= 1 tangent points".into()));
    }
    let n = x.dim();
    if h * (n + 1) > x.ambient() + 1 {
        return Err(Error::HypothesisFailed(format!(
            "{} tangent planes of a {}-dimensional variety cannot be independent in P^{}",
            h,
            n,
            x.ambient()
        )));
    }
    let label = format!("contact:{}:{}", x.name(), h);
    let mut per_prime = Vec::new();
    let mut span_rank = 0;
    let mut vanishes_all = true;
    for &p in &opts.primes {
        let kind = FieldKind::Prime(p);
        let mut best = 0usize;
        for trial in 0..opts.trials {
            let mut s = Sampler::new(opts.seed, &label, p, trial);
            let (sr, jrank, vanishes) = contact_once(x, h, strategy, kind, &mut s)?;
            span_rank = sr;
            vanishes_all &= vanishes;
            best = best.max(jrank);
        }
        per_prime.push(PrimeRank { prime: p, rank: best });
    }
    let jrank = per_prime.iter().map(|pr| pr.rank).max().unwrap_or(0);
    let agreement = per_prime.iter().all(|pr| pr.rank == jrank);
    Ok(ContactReport {
        schema_version: SCHEMA_VERSION.to_string(),
        variety: x.name().to_string(),
        h,
        n,
        span_rank,
        gamma: n - jrank,
        jacobian_rank: jrank,
        constraint_vanishes: vanishes_all,
        per_prime,
        agreement,
        trials: opts.trials,
        seed: opts.seed,
    })
}

/// Interpretation aid for a positive contact dimension.
#[derive(Serialize, Clone, Debug)]
pub struct TangencyHint {
    pub schema_version: String,
    pub variety: String,
    pub h: usize,
    pub tangentially_degenerate: bool,
    pub gamma: usize,
    /// Why tangential degeneracy alone decides nothing.
    pub caveat: String,
    /// Cached information about this specific variety, when available.
    pub known: Option<String>,
    pub contact: ContactReport,
}

/// Computes the contact dimension and wraps it with the standard caveat: a
/// positive-dimensional contact locus is necessary for certain failure
/// modes of identifiability but never sufficient to refute it.
pub fn tangency_hint(x: &ParamVariety, h: usize, opts: &RankOptions) -> Result<TangencyHint> {
    let contact = contact_locus_dim(x, h, opts)?;
    let gamma = contact.gamma;
    Ok(TangencyHint {
        schema_version: SCHEMA_VERSION.to_string(),
        variety: x.name().to_string(),
        h,
        tangentially_degenerate: gamma > 0,
        gamma,
        caveat: "a positive-dimensional contact locus weakens tangent-counting arguments \
                 but does not by itself refute identifiability"
            .to_string(),
        known: known_fact(x.name(), h).map(String::from),
        contact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticePolytope;
    use crate::variety::{make_powers, make_rnc, make_toric, make_veronese};

    fn opts() -> RankOptions {
        RankOptions { seed: 7, trials: 2, ..Default::default() }
    }

    #[test]
    fn plane_conics_have_full_tangent_family() {
        let x = make_veronese(2, 2).unwrap();
        let g = gauss_rank(&x, &opts()).unwrap();
        assert_eq!(g.gauss_rank, 2);
        assert!(!g.degenerate);
        assert!(g.agreement);
    }

    #[test]
    fn twisted_cubic_tangents_move() {
        let x = make_rnc(3).unwrap();
        let g = gauss_rank(&x, &opts()).unwrap();
        assert_eq!(g.gauss_rank, 1);
        assert!(!g.degenerate);
    }

    #[test]
    fn a_line_has_constant_tangent() {
        let x = make_rnc(1).unwrap();
        let g = gauss_rank(&x, &opts()).unwrap();
        assert_eq!(g.gauss_rank, 0);
        assert!(g.degenerate);
    }

    #[test]
    fn overparametrized_chart_gives_same_rank() {
        // Cubes of binary linear forms parametrize the twisted cubic with a
        // one-dimensional fiber; the excess kernel must be quotiented away.
        let x = make_powers(1, 3, 1).unwrap();
        assert_eq!(x.nparams(), 2);
        assert_eq!(x.dim(), 1);
        let g = gauss_rank(&x, &opts()).unwrap();
        assert_eq!(g.gauss_rank, 1);
    }

    #[test]
    fn cone_fixture_has_degenerate_tangent_family() {
        let poly = LatticePolytope::from_points(vec![
            vec![0, 0],
            vec![1, 0],
            vec![2, 0],
            vec![3, 0],
            vec![4, 0],
            vec![0, 1],
        ])
        .unwrap();
        let x = make_toric("cone-over-quartic-curve", &poly).unwrap();
        let g = gauss_rank(&x, &opts()).unwrap();
        assert!(g.degenerate, "rank {} should be below 2", g.gauss_rank);
        assert_eq!(g.gauss_rank, 1);
    }

    #[test]
    fn contact_dimension_of_a_single_point_matches_gauss_defect() {
        let x = make_veronese(2, 3).unwrap();
        let c = contact_locus_dim(&x, 1, &opts()).unwrap();
        assert_eq!(c.span_rank, 3);
        assert_eq!(c.gamma, 0);
        assert!(c.constraint_vanishes);
        let g = gauss_rank(&x, &opts()).unwrap();
        assert_eq!(c.gamma, x.dim() - g.gauss_rank);
    }

    #[test]
    fn rational_quintic_two_point_contact_is_finite() {
        let x = make_rnc(5).unwrap();
        let c = contact_locus_dim(&x, 2, &opts()).unwrap();
        assert_eq!(c.span_rank, 4);
        assert_eq!(c.gamma, 0);
    }

    #[test]
    fn projector_strategy_does_not_change_gamma() {
        let x = make_veronese(2, 3).unwrap();
        let a = contact_locus_dim_with(&x, 2, ProjectorStrategy::Natural, &opts()).unwrap();
        let b = contact_locus_dim_with(&x, 2, ProjectorStrategy::Reversed, &opts()).unwrap();
        assert_eq!(a.gamma, b.gamma);
    }

    #[test]
    fn too_many_tangent_planes_is_rejected() {
        let x = make_rnc(3).unwrap();
        assert!(contact_locus_dim(&x, 3, &opts()).is_err());
    }

    #[test]
    fn hint_carries_known_fact_when_available() {
        let x = make_veronese(2, 3).unwrap();
        let hint = tangency_hint(&x, 2, &opts()).unwrap();
        assert!(!hint.tangentially_degenerate);
        assert!(hint.known.is_none());
    }
}
