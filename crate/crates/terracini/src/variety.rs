//! The catalog of parametrized projective varieties.
//!
//! Every variety is stored as the affine-cone form of its parametrization: a
//! Laurent polynomial map from `m` chart parameters to the `N + 1`
//! homogeneous coordinates. Constructors validate their combinatorial input
//! and then run one randomized tangent-rank probe over a prime field, so a
//! degenerate parametrization is rejected at construction time.
//!
//! Charts:
//! * toric varieties use the monomial torus chart of the polytope;
//! * Grassmannians use maximal minors of `[I | A]` with `A` free;
//! * partial flags stack nested row charts and multiply out the per-level
//!   minors (a Segre-style product of the level embeddings);
//! * Lagrangian Grassmannians use `[I | S]` with `S` symmetric;
//! * secant powers use `sum_i lambda_i phi(u^i)` with the last weight fixed
//!   to one.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::{FieldKind, FieldScalar, P1};
use crate::jet::Jet2;
use crate::lattice::LatticePolytope;
use crate::matrix::rank_mod_p;
use crate::poly::{det, PolyMap, SparsePoly};
use crate::sample::{Sampler, DEFAULT_SEED};

/// What a [`ParamVariety`] is, with the combinatorial data it came from.
#[derive(Clone, Debug)]
pub enum VarietyClass {
    Toric { polytope: LatticePolytope },
    Grassmannian { r: usize, n: usize },
    Flag { ks: Vec<usize>, n: usize },
    Lagrangian { n: usize },
    MomentSurface { d: usize },
    Powers { a: usize, d: usize, n: usize },
    SecantPower { base: Box<ParamVariety>, r: usize, fills_ambient: bool },
}

/// A parametrized projective variety in affine-cone form.
#[derive(Clone, Debug)]
pub struct ParamVariety {
    name: String,
    /// Intrinsic projective dimension `n`.
    dim: usize,
    /// Projective ambient dimension `N`.
    ambient: usize,
    map: PolyMap,
    /// Cached closed-form partials, `jac[coord][var]`.
    jac: Vec<Vec<SparsePoly>>,
    class: VarietyClass,
}

impl ParamVariety {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn nparams(&self) -> usize {
        self.map.nvars
    }

    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn class(&self) -> &VarietyClass {
        &self.class
    }

    /// The base variety and power if this is a secant power.
    pub fn as_secant_power(&self) -> Option<(&ParamVariety, usize)> {
        match &self.class {
            VarietyClass::SecantPower { base, r, .. } => Some((base, *r)),
            _ => None,
        }
    }

    pub fn fills_ambient(&self) -> bool {
        matches!(self.class, VarietyClass::SecantPower { fills_ambient: true, .. })
            || self.dim == self.ambient
    }

    pub fn eval(&self, pt: &[FieldScalar], kind: FieldKind) -> Result<Vec<FieldScalar>> {
        self.map.eval(pt, kind)
    }

    /// Rows spanning the affine cone tangent at the image of `pt`: the value
    /// row followed by all first partials, `(m + 1) x (N + 1)`.
    pub fn cone_rows(&self, pt: &[FieldScalar], kind: FieldKind) -> Result<Vec<Vec<FieldScalar>>> {
        let mut rows = Vec::with_capacity(self.nparams() + 1);
        rows.push(self.map.eval(pt, kind)?);
        for i in 0..self.nparams() {
            let row: Result<Vec<FieldScalar>> =
                self.jac.iter().map(|coord| coord[i].eval(pt, kind)).collect();
            rows.push(row?);
        }
        Ok(rows)
    }

    /// Full second-order jets of all coordinates at `pt`.
    pub fn jet_eval(&self, pt: &[FieldScalar], kind: FieldKind) -> Result<Vec<Jet2>> {
        self.map.jet_eval_full(pt, kind)
    }

    fn checked(
        name: String,
        dim: usize,
        ambient: usize,
        map: PolyMap,
        class: VarietyClass,
    ) -> Result<ParamVariety> {
        let jac = map.partials();
        let v = ParamVariety { name, dim, ambient, map, jac, class };
        let probed = v.probe_cone_rank()?;
        if probed != v.dim + 1 {
            return Err(Error::InvalidInput(format!(
                "{}: tangent probe rank {} does not match declared dimension {} + 1",
                v.name, probed, v.dim
            )));
        }
        Ok(v)
    }

    /// Rank of the cone-tangent rows at a random prime-field point; retried
    /// a few times so an unlucky sample cannot reject a valid construction.
    fn probe_cone_rank(&self) -> Result<usize> {
        let mut best = 0;
        for trial in 0..3u64 {
            let mut s = Sampler::new(DEFAULT_SEED, &format!("construct:{}", self.name), P1, trial);
            let pt = s.fp_point(self.nparams(), P1);
            let rows = self.cone_rows(&pt, FieldKind::Prime(P1))?;
            let urows: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|s| match s {
                            FieldScalar::Fp { value, .. } => *value,
                            _ => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            best = best.max(rank_mod_p(urows, P1));
            if best == self.dim + 1 {
                break;
            }
        }
        Ok(best)
    }
}

/// Toric variety of a lattice point configuration. The points must affinely
/// span the full ambient lattice, otherwise the parametrization would be
/// degenerate.
pub fn make_toric(name: &str, polytope: &LatticePolytope) -> Result<ParamVariety> {
    let n = polytope.ambient();
    if polytope.affine_rank() != n {
        return Err(Error::InvalidInput(format!(
            "lattice points affinely span rank {} < ambient {}",
            polytope.affine_rank(),
            n
        )));
    }
    if polytope.npoints() < 2 {
        return Err(Error::InvalidInput("toric variety needs at least two points".into()));
    }
    let coords: Result<Vec<SparsePoly>> = polytope
        .points()
        .iter()
        .map(|p| {
            let exps: Result<Vec<i32>> = p
                .iter()
                .map(|&c| {
                    i32::try_from(c)
                        .map_err(|_| Error::InvalidInput(format!("exponent {c} out of range")))
                })
                .collect();
            Ok(SparsePoly::monomial(n, 1, exps?))
        })
        .collect();
    let map = PolyMap::new(n, coords?);
    let ambient = polytope.npoints() - 1;
    ParamVariety::checked(
        name.to_string(),
        n,
        ambient,
        map,
        VarietyClass::Toric { polytope: polytope.clone() },
    )
}

/// Veronese embedding of `P^n` in degree `d`.
pub fn make_veronese(n: usize, d: usize) -> Result<ParamVariety> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidInput("veronese needs n >= 1, d >= 1".into()));
    }
    make_toric(&format!("veronese:{n}:{d}"), &LatticePolytope::simplex_dilation(n, d))
}

/// Rational normal curve of degree `d`.
pub fn make_rnc(d: usize) -> Result<ParamVariety> {
    if d < 1 {
        return Err(Error::InvalidInput("rational normal curve needs degree >= 1".into()));
    }
    make_toric(&format!("rnc:{d}"), &LatticePolytope::segment(d))
}

/// Segre-Veronese embedding of `P^{n_1} x ... x P^{n_r}` in multidegree `d`.
pub fn make_segre_veronese(ns: &[usize], ds: &[usize]) -> Result<ParamVariety> {
    if ns.is_empty() || ns.len() != ds.len() {
        return Err(Error::InvalidInput("need matching nonempty factor lists".into()));
    }
    if ns.iter().any(|&n| n < 1) || ds.iter().any(|&d| d < 1) {
        return Err(Error::InvalidInput("factors need n_i >= 1 and d_i >= 1".into()));
    }
    let mut poly = LatticePolytope::simplex_dilation(ns[0], ds[0]);
    for (&n, &d) in ns.iter().zip(ds).skip(1) {
        poly = poly.product(&LatticePolytope::simplex_dilation(n, d));
    }
    let name = format!(
        "sv:{}:{}",
        ns.iter().map(|v| v.to_string()).join(","),
        ds.iter().map(|v| v.to_string()).join(",")
    );
    make_toric(&name, &poly)
}

fn chart_minors(chart: &[Vec<SparsePoly>], ncols: usize, k: usize) -> Vec<SparsePoly> {
    (0..ncols)
        .combinations(k)
        .map(|cols| {
            let sub: Vec<Vec<SparsePoly>> = chart
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect();
            det(&sub)
        })
        .collect()
}

/// Grassmannian of projective `r`-planes in `P^n`, Pluecker embedded.
pub fn make_grassmannian(r: usize, n: usize) -> Result<ParamVariety> {
    if r >= n {
        return Err(Error::InvalidInput("grassmannian needs 0 < r < n".into()));
    }
    let rows = r + 1;
    let free = n - r;
    let nvars = rows * free;
    let chart: Vec<Vec<SparsePoly>> = (0..rows)
        .map(|i| {
            (0..=n)
                .map(|c| {
                    if c < rows {
                        SparsePoly::constant(nvars, (c == i) as i64)
                    } else {
                        SparsePoly::variable(nvars, i * free + (c - rows))
                    }
                })
                .collect()
        })
        .collect();
    let coords = chart_minors(&chart, n + 1, rows);
    let ambient = coords.len() - 1;
    ParamVariety::checked(
        format!("grass:{r}:{n}"),
        nvars,
        ambient,
        PolyMap::new(nvars, coords),
        VarietyClass::Grassmannian { r, n },
    )
}

/// Partial flag variety of nested projective subspaces of dimensions `ks`
/// inside `P^n`, embedded by the product of the level Pluecker embeddings.
pub fn make_flag(ks: &[usize], n: usize) -> Result<ParamVariety> {
    if ks.is_empty() || ks.windows(2).any(|w| w[0] >= w[1]) || *ks.last().unwrap() >= n {
        return Err(Error::InvalidInput(
            "flag needs strictly increasing subspace dimensions below n".into(),
        ));
    }
    let levels = ks.len();
    // Variables: the top chart [I | A], then one mixing block per descent.
    let top_rows = ks[levels - 1] + 1;
    let top_free = n - ks[levels - 1];
    let mut nvars = top_rows * top_free;
    let mut mix_offsets = Vec::new();
    for i in (0..levels - 1).rev() {
        mix_offsets.push((i, nvars));
        nvars += (ks[i] + 1) * (ks[i + 1] - ks[i]);
    }

    let top: Vec<Vec<SparsePoly>> = (0..top_rows)
        .map(|i| {
            (0..=n)
                .map(|c| {
                    if c < top_rows {
                        SparsePoly::constant(nvars, (c == i) as i64)
                    } else {
                        SparsePoly::variable(nvars, i * top_free + (c - top_rows))
                    }
                })
                .collect()
        })
        .collect();

    let mut level_charts = vec![top];
    for &(i, offset) in &mix_offsets {
        let prev = level_charts.last().unwrap();
        let rows = ks[i] + 1;
        let wide = ks[i + 1] + 1;
        let freecols = wide - rows;
        let mixed: Vec<Vec<SparsePoly>> = (0..rows)
            .map(|a| {
                (0..=n)
                    .map(|c| {
                        let mut acc = prev[a][c].clone();
                        for f in 0..freecols {
                            let coeff = SparsePoly::variable(nvars, offset + a * freecols + f);
                            acc = acc.add(&coeff.mul(&prev[rows + f][c]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        level_charts.push(mixed);
    }
    // level_charts holds charts from the top space down; reorder ascending.
    level_charts.reverse();

    let per_level: Vec<Vec<SparsePoly>> = level_charts
        .iter()
        .zip(ks)
        .map(|(chart, &k)| chart_minors(chart, n + 1, k + 1))
        .collect();
    let coords: Vec<SparsePoly> = per_level
        .iter()
        .map(|m| m.iter())
        .multi_cartesian_product()
        .map(|tuple| {
            let mut acc = SparsePoly::constant(nvars, 1);
            for p in tuple {
                acc = acc.mul(p);
            }
            acc
        })
        .collect();
    let ambient = coords.len() - 1;
    let dim: usize = top_rows * top_free
        + (0..levels - 1).map(|i| (ks[i] + 1) * (ks[i + 1] - ks[i])).sum::<usize>();
    ParamVariety::checked(
        format!("flag:{}:{}", ks.iter().map(|v| v.to_string()).join(","), n),
        dim,
        ambient,
        PolyMap::new(nvars, coords),
        VarietyClass::Flag { ks: ks.to_vec(), n },
    )
}

/// Lagrangian Grassmannian `LG(n, 2n)`: maximal isotropic subspaces of a
/// symplectic `2n`-space, via the symmetric chart `[I | S]`.
pub fn make_lagrangian(n: usize) -> Result<ParamVariety> {
    if n < 1 {
        return Err(Error::InvalidInput("lagrangian grassmannian needs n >= 1".into()));
    }
    let nvars = n * (n + 1) / 2;
    let sym_index = |i: usize, j: usize| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        a * n - a * (a + 1) / 2 + b
    };
    let chart: Vec<Vec<SparsePoly>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|c| {
                    if c < n {
                        SparsePoly::constant(nvars, (c == i) as i64)
                    } else {
                        SparsePoly::variable(nvars, sym_index(i, c - n))
                    }
                })
                .collect()
        })
        .collect();
    let coords = chart_minors(&chart, 2 * n, n);
    let ambient = coords.len() - 1;
    ParamVariety::checked(
        format!("lg:{n}"),
        nvars,
        ambient,
        PolyMap::new(nvars, coords),
        VarietyClass::Lagrangian { n },
    )
}

/// Moment surface of order `d`: coordinates are the raw moments
/// `m_0, ..., m_d` of a distribution with mean `mu` and variance `s`,
/// generated by `m_k = mu m_{k-1} + (k - 1) s m_{k-2}`.
pub fn make_moment_surface(d: usize) -> Result<ParamVariety> {
    if d < 2 {
        return Err(Error::InvalidInput("moment surface needs d >= 2".into()));
    }
    let mu = SparsePoly::variable(2, 0);
    let s = SparsePoly::variable(2, 1);
    let mut coords = vec![SparsePoly::constant(2, 1), mu.clone()];
    for k in 2..=d {
        let prev = coords[k - 1].mul(&mu);
        let prev2 = coords[k - 2].mul(&s).scale((k - 1) as i64);
        coords.push(prev.add(&prev2));
    }
    ParamVariety::checked(
        format!("moments:{d}"),
        2,
        d,
        PolyMap::new(2, coords),
        VarietyClass::MomentSurface { d },
    )
}

fn homogeneous_exponents(nvars: usize, degree: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = vec![0i32; nvars];
    fn rec(out: &mut Vec<Vec<i32>>, cur: &mut Vec<i32>, pos: usize, rem: i32) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push(cur.clone());
            return;
        }
        for e in 0..=rem {
            cur[pos] = e;
            rec(out, cur, pos + 1, rem - e);
        }
        cur[pos] = 0;
    }
    rec(&mut out, &mut cur, 0, degree as i32);
    out
}

/// Variety of `d`-th powers of degree-`a` forms in `n + 1` variables,
/// parametrized by the coefficients of the base form.
pub fn make_powers(a: usize, d: usize, n: usize) -> Result<ParamVariety> {
    if a < 1 || d < 1 || n < 1 {
        return Err(Error::InvalidInput("powers needs a, d, n >= 1".into()));
    }
    let basis_a = homogeneous_exponents(n + 1, a);
    let nvars = basis_a.len();
    // Expand g^d with g = sum_b c_b x^b: map x-exponent -> polynomial in c.
    let mut acc: std::collections::BTreeMap<Vec<i32>, SparsePoly> =
        std::collections::BTreeMap::new();
    acc.insert(vec![0; n + 1], SparsePoly::constant(nvars, 1));
    for _ in 0..d {
        let mut next: std::collections::BTreeMap<Vec<i32>, SparsePoly> =
            std::collections::BTreeMap::new();
        for (xe, cpoly) in &acc {
            for (bi, be) in basis_a.iter().enumerate() {
                let key: Vec<i32> = xe.iter().zip(be).map(|(x, y)| x + y).collect();
                let contrib = cpoly.mul(&SparsePoly::variable(nvars, bi));
                next.entry(key)
                    .and_modify(|p| *p = p.add(&contrib))
                    .or_insert(contrib);
            }
        }
        acc = next;
    }
    let basis_ad = homogeneous_exponents(n + 1, a * d);
    let coords: Vec<SparsePoly> = basis_ad
        .iter()
        .map(|k| acc.get(k).cloned().unwrap_or_else(|| SparsePoly::zero(nvars)))
        .collect();
    let ambient = coords.len() - 1;
    ParamVariety::checked(
        format!("powers:{a}:{d}:{n}"),
        nvars - 1,
        ambient,
        PolyMap::new(nvars, coords),
        VarietyClass::Powers { a, d, n },
    )
}

/// The `r`-th secant power of `y`: the variety swept by spans of `r` points,
/// parametrized as `sum_i lambda_i phi(u^i)` with the last weight fixed to
/// one. The intrinsic dimension is recorded from a tangent probe; if the
/// expected dimension overshoots the ambient space the variety fills it and
/// is flagged.
pub fn make_secant_power(y: &ParamVariety, r: usize) -> Result<ParamVariety> {
    if r == 0 {
        return Err(Error::InvalidInput("secant power needs r >= 1".into()));
    }
    if r == 1 {
        return Ok(y.clone());
    }
    let my = y.nparams();
    let nvars = r * my + (r - 1);
    let coords: Vec<SparsePoly> = y
        .map()
        .coords
        .iter()
        .map(|c| {
            let mut acc = SparsePoly::zero(nvars);
            for copy in 0..r {
                for t in &c.terms {
                    let mut exps = vec![0i32; nvars];
                    exps[copy * my..copy * my + my].copy_from_slice(&t.exps);
                    if copy < r - 1 {
                        exps[r * my + copy] = 1;
                    }
                    acc = acc.add(&SparsePoly::monomial(nvars, t.coeff, exps));
                }
            }
            acc
        })
        .collect();
    let expected = r * y.dim() + r - 1;
    let fills = expected > y.ambient();
    let recorded = expected.min(y.ambient());
    ParamVariety::checked(
        format!("secant:{}:{r}", y.name()),
        recorded,
        y.ambient(),
        PolyMap::new(nvars, coords),
        VarietyClass::SecantPower { base: Box::new(y.clone()), r, fills_ambient: fills },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn veronese_and_rnc_shapes() {
        let v = make_veronese(2, 6).unwrap();
        assert_eq!((v.dim(), v.ambient(), v.nparams()), (2, 27, 2));
        let c = make_rnc(11).unwrap();
        assert_eq!((c.dim(), c.ambient()), (1, 11));
        let q = make_segre_veronese(&[1, 1], &[1, 1]).unwrap();
        assert_eq!((q.dim(), q.ambient()), (2, 3));
    }

    #[test]
    fn segre_veronese_shapes() {
        let x = make_segre_veronese(&[1, 1, 1], &[2, 2, 2]).unwrap();
        assert_eq!((x.dim(), x.ambient()), (3, 26));
        let y = make_segre_veronese(&[1, 1, 1, 1], &[1, 1, 1, 1]).unwrap();
        assert_eq!((y.dim(), y.ambient()), (4, 15));
    }

    #[test]
    fn grassmannian_shapes_and_probe() {
        let g = make_grassmannian(1, 3).unwrap();
        assert_eq!((g.dim(), g.ambient()), (4, 5));
        let g = make_grassmannian(3, 7).unwrap();
        assert_eq!((g.dim(), g.ambient()), (16, 69));
    }

    #[test]
    fn lagrangian_and_moment_shapes() {
        let lg = make_lagrangian(2).unwrap();
        assert_eq!((lg.dim(), lg.ambient()), (3, 5));
        let m = make_moment_surface(3).unwrap();
        assert_eq!((m.dim(), m.ambient()), (2, 3));
    }

    /// Moment coordinates for d = 3: (1, mu, mu^2 + s, mu^3 + 3 mu s).
    #[test]
    fn moment_surface_recurrence_values() {
        let m = make_moment_surface(3).unwrap();
        let kind = FieldKind::Rational;
        let pt = [FieldScalar::from_i64(kind, 5), FieldScalar::from_i64(kind, 2)];
        let vals = m.eval(&pt, kind).unwrap();
        let expect = [1, 5, 27, 155]; // 5^2+2 = 27, 5^3 + 3*5*2 = 155
        for (v, e) in vals.iter().zip(expect) {
            assert_eq!(*v, FieldScalar::from_i64(kind, e));
        }
    }

    #[test]
    fn flag_chart_dimension_formula() {
        // Full flag in P^2: dimension 3, ambient 3*3 - 1 = 8.
        let f = make_flag(&[0, 1], 2).unwrap();
        assert_eq!((f.dim(), f.ambient()), (3, 8));
        // Single-step flag agrees with the Grassmannian.
        let f = make_flag(&[1], 3).unwrap();
        let g = make_grassmannian(1, 3).unwrap();
        assert_eq!((f.dim(), f.ambient()), (g.dim(), g.ambient()));
    }

    /// Squaring binary quadratic forms: coefficients of g^2 for
    /// g = a x^2 + b xy + c y^2 are (a^2, 2ab, b^2 + 2ac, 2bc, c^2) in
    /// lexicographic monomial order.
    #[test]
    fn powers_hand_expansion() {
        let p = make_powers(2, 2, 1).unwrap();
        assert_eq!((p.dim(), p.ambient(), p.nparams()), (2, 4, 3));
        let kind = FieldKind::Rational;
        let (a, b, c) = (2i64, 3, 5);
        let pt =
            [FieldScalar::from_i64(kind, a), FieldScalar::from_i64(kind, b), FieldScalar::from_i64(kind, c)];
        let vals = p.eval(&pt, kind).unwrap();
        let expect = [a * a, 2 * a * b, b * b + 2 * a * c, 2 * b * c, c * c];
        for (v, e) in vals.iter().zip(expect) {
            assert_eq!(*v, FieldScalar::from_i64(kind, e));
        }
    }

    #[test]
    fn powers_of_linear_forms_match_veronese_dimensions() {
        let p = make_powers(1, 3, 2).unwrap();
        let v = make_veronese(2, 3).unwrap();
        assert_eq!(p.ambient(), v.ambient());
        assert_eq!(p.dim(), v.dim());
    }

    #[test]
    fn secant_power_records_probe_and_fills_flag() {
        let y = make_rnc(11).unwrap();
        let x = make_secant_power(&y, 2).unwrap();
        assert_eq!(x.dim(), 3);
        assert_eq!(x.ambient(), 11);
        assert!(!x.fills_ambient());
        assert!(x.as_secant_power().is_some());

        let small = make_rnc(3).unwrap();
        let fills = make_secant_power(&small, 3).unwrap();
        assert!(fills.fills_ambient());
        assert_eq!(fills.dim(), 3);

        let same = make_secant_power(&y, 1).unwrap();
        assert_eq!(same.name(), y.name());
    }

    #[test]
    fn toric_rejects_non_spanning_points() {
        let p = LatticePolytope::from_points(vec![vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap();
        assert!(make_toric("degenerate", &p).is_err());
    }

    /// The image of a toric variety spans its ambient space: distinct
    /// monomials are linearly independent, so value rows at enough points
    /// have full rank.
    #[test]
    fn toric_image_spans_ambient() {
        let v = make_veronese(2, 2).unwrap();
        let kind = FieldKind::Prime(P1);
        let mut s = Sampler::new(7, "span-test", P1, 0);
        let rows: Vec<Vec<u64>> = (0..v.ambient() + 1)
            .map(|_| {
                v.eval(&s.fp_point(2, P1), kind)
                    .unwrap()
                    .iter()
                    .map(|x| match x {
                        FieldScalar::Fp { value, .. } => *value,
                        _ => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        assert_eq!(rank_mod_p(rows, P1), v.ambient() + 1);
    }
}
