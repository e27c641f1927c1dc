//! Closed-form identifiability bounds for the cataloged families,
//! evaluated in exact rational arithmetic, together with the cached
//! exception tables for the cases the counting arguments miss.
//!
//! Every evaluator is a pure function of its integer inputs. Bounds are
//! reported in strict form: the family is `h`-identifiable for all
//! `1 <= h < h_bound`, minus any flagged exceptions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::facts::known_fact;
use crate::lattice::{toric_bound, LatticePolytope};
use crate::SCHEMA_VERSION;

/// Outcome of a closed-form bound evaluation.
#[derive(Serialize, Clone, Debug)]
pub struct BoundResult {
    pub schema_version: String,
    pub family: String,
    pub params: String,
    /// Strict upper bound from the family's primary formula; `None` when
    /// the formula is inapplicable to these parameters.
    pub h_bound: Option<u64>,
    /// Strict upper bound from the refined count, where the family has one
    /// (Grassmannians, valid for `h <= 12`).
    pub refined_bound: Option<u64>,
    /// Largest `h` with every `h' <= h` certified; `None` means the range
    /// is empty.
    pub identifiable_through: Option<u64>,
    /// Exception tuples from the cached tables that fall inside the
    /// certified range and are therefore carved out of it.
    pub exceptions: Vec<String>,
    pub notes: Vec<String>,
}

impl BoundResult {
    fn new(family: &str, params: String) -> Self {
        BoundResult {
            schema_version: SCHEMA_VERSION.to_string(),
            family: family.to_string(),
            params,
            h_bound: None,
            refined_bound: None,
            identifiable_through: None,
            exceptions: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Sets `identifiable_through` from a strict bound and the excluded
    /// `h` values, keeping only the contiguous certified prefix.
    fn set_range(&mut self, strict: u64, excluded: &[u64]) {
        let mut through = strict.saturating_sub(1);
        for &h in excluded {
            if h >= 1 && h <= through {
                through = h - 1;
            }
        }
        if through >= 1 {
            self.identifiable_through = Some(through);
        } else {
            self.identifiable_through = None;
            self.notes.push("empty range: no h >= 1 is certified".to_string());
        }
    }
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut v = BigInt::one();
    for i in 0..k.min(n - k) {
        v = v * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    v
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn floor_to_u64(r: &BigRational) -> Result<u64> {
    let f = r.floor().to_integer();
    if f.is_negative() {
        return Ok(0);
    }
    f.to_u64().ok_or_else(|| Error::InvalidInput("bound does not fit in 64 bits".into()))
}

/// Strict bound for the Segre-Veronese embedding of multidegree `d` on a
/// product of projective spaces of dimensions `n`:
/// `floor((d_j / (n_j + d_j)) * (1 / (sum n_i + 1)) * prod C(n_i + d_i, d_i))`
/// with `j` maximizing `n_j / d_j`; on ties with distinct pairs, every
/// maximizer is evaluated and the largest bound returned.
pub fn bound_segre_veronese(ns: &[u64], ds: &[u64]) -> Result<BoundResult> {
    if ns.is_empty() || ns.len() != ds.len() {
        return Err(Error::InvalidInput("need matching nonempty dimension and degree lists".into()));
    }
    if ns.iter().chain(ds.iter()).any(|&v| v == 0) {
        return Err(Error::InvalidInput("dimensions and degrees must be >= 1".into()));
    }
    let mut result = BoundResult::new("segre-veronese", format!("n={ns:?} d={ds:?}"));
    let product: BigInt = ns.iter().zip(ds).map(|(&n, &d)| binom(n + d, d)).product();
    let nsum: u64 = ns.iter().sum();
    // All indices maximizing n_i / d_i.
    let key = |i: usize| rat(ns[i] as i64, ds[i] as i64);
    let best = (0..ns.len()).map(key).max().expect("nonempty");
    let mut bound = 0u64;
    for j in 0..ns.len() {
        if key(j) != best {
            continue;
        }
        let value = rat(ds[j] as i64, (ns[j] + ds[j]) as i64)
            * rat(1, nsum as i64 + 1)
            * BigRational::from(product.clone());
        bound = bound.max(floor_to_u64(&value)?);
    }
    result.h_bound = Some(bound);
    result.set_range(bound, &[]);
    Ok(result)
}

/// Token of an exception-table tuple: a literal or one of the parametric
/// forms `2a`, `2a+1` with `a >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Lit(u64),
    TwoA,
    TwoAPlusOne,
}

impl Tok {
    fn parse(s: &str) -> Result<Tok> {
        match s.trim() {
            "2a" => Ok(Tok::TwoA),
            "2a+1" => Ok(Tok::TwoAPlusOne),
            t => t
                .parse::<u64>()
                .map(Tok::Lit)
                .map_err(|_| Error::Parse(format!("bad exception token {t:?}"))),
        }
    }
}

/// One line of an exception table: entry tuple and the excluded `h`.
#[derive(Clone, Debug)]
struct ExceptionPattern {
    entries: Vec<Tok>,
    h: Tok,
}

fn parse_exception_table(text: &str) -> Result<Vec<ExceptionPattern>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (tuple, h) = line
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("exception line without ';': {line:?}")))?;
        let entries: Result<Vec<Tok>> = tuple.split(',').map(Tok::parse).collect();
        out.push(ExceptionPattern { entries: entries?, h: Tok::parse(h)? });
    }
    Ok(out)
}

fn binary_sv_exception_table() -> Vec<ExceptionPattern> {
    parse_exception_table(include_str!("../data/binary_sv_exceptions.txt"))
        .expect("bundled table parses")
}

/// The `h` values excluded for the degree tuple `ds`, as (h, rendered
/// concrete tuple) pairs, by multiset-matching each pattern with a
/// consistent value of the parameter `a`.
fn binary_sv_exception_hs(ds: &[u64]) -> Vec<(u64, String)> {
    let mut sorted = ds.to_vec();
    sorted.sort_unstable();
    let render = |h: u64| {
        let tuple: Vec<String> = sorted.iter().map(u64::to_string).collect();
        (h, format!("{};{}", tuple.join(","), h))
    };
    let mut out: Vec<(u64, String)> = Vec::new();
    for pat in binary_sv_exception_table() {
        if pat.entries.len() != sorted.len() {
            continue;
        }
        let lits: Vec<u64> = pat
            .entries
            .iter()
            .filter_map(|t| if let Tok::Lit(v) = t { Some(*v) } else { None })
            .collect();
        let params = pat.entries.len() - lits.len();
        match params {
            0 => {
                let mut l = lits.clone();
                l.sort_unstable();
                if l == sorted {
                    if let Tok::Lit(h) = pat.h {
                        out.push(render(h));
                    }
                }
            }
            1 => {
                debug_assert!(pat.entries.contains(&Tok::TwoA));
                // Choose which tuple element plays 2a; the rest must equal
                // the literal multiset.
                for skip in 0..sorted.len() {
                    let v = sorted[skip];
                    if v % 2 != 0 || v < 2 {
                        continue;
                    }
                    let mut rest: Vec<u64> = sorted
                        .iter()
                        .enumerate()
                        .filter_map(|(i, &x)| (i != skip).then_some(x))
                        .collect();
                    rest.sort_unstable();
                    let mut l = lits.clone();
                    l.sort_unstable();
                    if rest != l {
                        continue;
                    }
                    let h = match pat.h {
                        Tok::Lit(h) => h,
                        Tok::TwoAPlusOne => v + 1,
                        Tok::TwoA => v,
                    };
                    out.push(render(h));
                }
            }
            _ => unreachable!("tables use at most one parametric entry per line"),
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Strict bound `floor(prod (d_i + 1) / (r + 1))` for products of `r`
/// projective lines embedded with multidegree `d`, with the perfect-case
/// and subgeneric flags and the cached exception tuples carved out.
pub fn bound_binary_sv(ds: &[u64]) -> Result<BoundResult> {
    if ds.is_empty() || ds.iter().any(|&d| d == 0) {
        return Err(Error::InvalidInput("need degrees >= 1".into()));
    }
    let r = ds.len() as u64;
    let mut result = BoundResult::new("binary-sv", format!("d={ds:?}"));
    let product: BigInt = ds.iter().map(|&d| BigInt::from(d + 1)).product();
    let value = BigRational::new(product.clone(), BigInt::from(r + 1));
    let bound = floor_to_u64(&value)?;
    result.h_bound = Some(bound);
    if (product % BigInt::from(r + 1)).is_zero() {
        result.notes.push(
            "perfect case: the parameter count divides exactly, so the top secant fills \
             the ambient space with zero-dimensional generic fibers"
                .to_string(),
        );
    }
    if ds.iter().all(|&d| d >= 3) {
        result
            .notes
            .push("all degrees >= 3: identifiability holds for all subgeneric h".to_string());
    }
    let excluded: Vec<(u64, String)> = binary_sv_exception_hs(ds);
    let hs: Vec<u64> = excluded.iter().map(|(h, _)| *h).collect();
    for (h, rendered) in &excluded {
        if *h >= 1 && *h < bound {
            result.exceptions.push(rendered.clone());
        } else {
            result.notes.push(format!(
                "known exception {rendered} ends the certified range, so the bound is sharp"
            ));
        }
    }
    result.set_range(bound, &hs);
    // Surface cached facts about the corresponding catalog variety.
    let name = format!(
        "sv:{}:{}",
        vec!["1"; ds.len()].join(","),
        ds.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    );
    for h in 1..=bound {
        if let Some(f) = known_fact(&name, h as usize) {
            result.notes.push(format!("h = {h}: {f}"));
        }
    }
    Ok(result)
}

fn log2_floor(v: u64) -> Option<u32> {
    if v == 0 {
        None
    } else {
        Some(63 - v.leading_zeros())
    }
}

fn pow_ratio_floor(num: u64, den: u64, exp: u32) -> Result<u64> {
    let value = BigRational::new(BigInt::from(num), BigInt::from(den)).pow(exp as i32);
    floor_to_u64(&value)
}

/// Strict bound for the flag variety of nested subspaces of dimensions
/// `ks` in `P^n`:
/// `floor(((n + 1) / (k_l + 1))^floor(log2(sum_{j<=l} k_j + l - 1)))` with
/// `l` the largest index satisfying `n >= 2 k_l + 1`; inapplicable when no
/// index does.
pub fn bound_flag(ks: &[u64], n: u64) -> Result<BoundResult> {
    if ks.is_empty() {
        return Err(Error::InvalidInput("need at least one subspace dimension".into()));
    }
    if ks.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput("subspace dimensions must be nondecreasing".into()));
    }
    if *ks.last().unwrap() >= n {
        return Err(Error::InvalidInput("subspace dimensions must be below n".into()));
    }
    let mut result = BoundResult::new("flag", format!("k={ks:?} n={n}"));
    let Some(l) = (0..ks.len()).rev().find(|&j| n >= 2 * ks[j] + 1) else {
        result.notes.push(format!(
            "inapplicable: no subspace dimension satisfies n >= 2k + 1 for n = {n}"
        ));
        result.set_range(0, &[]);
        return Ok(result);
    };
    let s: u64 = ks[..=l].iter().sum::<u64>() + l as u64;
    let Some(exp) = log2_floor(s) else {
        result.notes.push("inapplicable: the exponent argument vanishes".to_string());
        result.set_range(0, &[]);
        return Ok(result);
    };
    let bound = pow_ratio_floor(n + 1, ks[l] + 1, exp)?;
    result.h_bound = Some(bound);
    result.set_range(bound, &[]);
    Ok(result)
}

fn grassmannian_tables() -> (Vec<(u64, u64, u64)>, Vec<(u64, u64, u64)>) {
    let literal = |text: &str| -> Vec<(u64, u64, u64)> {
        parse_exception_table(text)
            .expect("bundled table parses")
            .into_iter()
            .map(|p| match (p.entries.as_slice(), p.h) {
                (&[Tok::Lit(r), Tok::Lit(n)], Tok::Lit(h)) => (r, n, h),
                _ => unreachable!("grassmannian tables are literal triples"),
            })
            .collect()
    };
    (
        literal(include_str!("../data/grassmannian_exceptions.txt")),
        literal(include_str!("../data/grassmannian_refined_excluded.txt")),
    )
}

/// Strict bounds for the Grassmannian of projective `r`-planes in `P^n`:
/// the general count `floor(((n + 1) / (r + 1))^floor(log2 r))` and the
/// refined count `floor(C(n + 1, r + 1) / ((n - r)(r + 1) + 1))`, the
/// latter valid for `h <= 12` and minus the cached excluded cases.
pub fn bound_grassmannian(r: u64, n: u64) -> Result<BoundResult> {
    if r < 2 {
        return Err(Error::InvalidInput(
            "projective lines give defective Grassmannians; need r >= 2".into(),
        ));
    }
    if n < r + 2 {
        return Err(Error::InvalidInput("need n >= r + 2 for a nontrivial Grassmannian".into()));
    }
    let mut result = BoundResult::new("grassmannian", format!("r={r} n={n}"));
    let general = if n >= 2 * r + 1 {
        let exp = log2_floor(r).expect("r >= 2");
        let b = pow_ratio_floor(n + 1, r + 1, exp)?;
        result.h_bound = Some(b);
        b
    } else {
        result
            .notes
            .push(format!("general count inapplicable: n = {n} < 2r + 1 = {}", 2 * r + 1));
        0
    };
    let refined_value = BigRational::new(
        binom(n + 1, r + 1),
        BigInt::from((n - r) * (r + 1) + 1),
    );
    let refined = floor_to_u64(&refined_value)?;
    result.refined_bound = Some(refined);
    // The refined count only speaks about h <= 12.
    let refined_strict = refined.min(13);
    if refined > 13 {
        result
            .notes
            .push("refined count capped: it only covers h <= 12".to_string());
    }
    let strict = general.max(refined_strict);
    let (exceptions, excluded) = grassmannian_tables();
    let mut excluded_hs = Vec::new();
    for &(er, en, eh) in &exceptions {
        if er == r && en == n && eh >= 1 && eh < strict {
            result.exceptions.push(format!("{er},{en};{eh}"));
            excluded_hs.push(eh);
        }
    }
    for &(er, en, eh) in &excluded {
        if er == r && en == n && eh < refined {
            result.notes.push(format!(
                "the refined count does not certify h = {eh}: that case is {eh}-defective"
            ));
        }
    }
    result.set_range(strict, &excluded_hs);
    Ok(result)
}

/// Strict bound `floor(n^2/18 - 20n/27 + 287/81) + floor((6n - 13)/9)` for
/// the Grassmannian of projective planes `G(2,n)`, valid for `n >= 9`.
pub fn bound_g2n(n: u64) -> Result<BoundResult> {
    if n < 9 {
        return Err(Error::InvalidInput("the plane-Grassmannian count needs n >= 9".into()));
    }
    let mut result = BoundResult::new("g2n", format!("n={n}"));
    let ni = n as i64;
    let quad = rat(ni * ni, 18) - rat(20 * ni, 27) + rat(287, 81);
    let linear = rat(6 * ni - 13, 9);
    let bound = floor_to_u64(&quad)? + floor_to_u64(&linear)?;
    result.h_bound = Some(bound);
    result.set_range(bound, &[]);
    Ok(result)
}

/// Which homogeneous embedding of the isotropic Grassmannian a bound
/// refers to.
#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum IsotropicEmbedding {
    /// Lagrangian Grassmannian in its Pluecker (= minimal) embedding.
    LagrangianPluecker,
    /// Spinor variety in the restricted Pluecker embedding.
    SpinorPluecker,
    /// Spinor variety in its minimal homogeneous embedding.
    SpinorMinimal,
}

impl IsotropicEmbedding {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag {
            "lg" | "lg-pluecker" | "lagrangian" => Ok(IsotropicEmbedding::LagrangianPluecker),
            "spinor-pluecker" => Ok(IsotropicEmbedding::SpinorPluecker),
            "spinor-minimal" | "spinor" => Ok(IsotropicEmbedding::SpinorMinimal),
            t => Err(Error::InvalidInput(format!("unknown embedding tag {t:?}"))),
        }
    }

    fn tag(self) -> &'static str {
        match self {
            IsotropicEmbedding::LagrangianPluecker => "lagrangian",
            IsotropicEmbedding::SpinorPluecker => "spinor-pluecker",
            IsotropicEmbedding::SpinorMinimal => "spinor-minimal",
        }
    }
}

/// Strict bound for the Lagrangian Grassmannian `LG(n, 2n)` or the
/// `n`-th Spinor variety: `floor((n + 1)/2)`, `floor(n/2)` or
/// `floor((n + 2)/4)` depending on the embedding, merged with the cached
/// small-`h` facts (Lagrangian: `h <= 3` identifiable for `n >= 5`;
/// minimal Spinor: 2-identifiable for all `n` outside `{7, 8}`).
pub fn bound_lagrangian_spinor(n: u64, emb: IsotropicEmbedding) -> Result<BoundResult> {
    if n < 2 {
        return Err(Error::InvalidInput("need n >= 2".into()));
    }
    let mut result = BoundResult::new(emb.tag(), format!("n={n}"));
    let formula = match emb {
        IsotropicEmbedding::LagrangianPluecker => (n + 1) / 2,
        IsotropicEmbedding::SpinorPluecker => n / 2,
        IsotropicEmbedding::SpinorMinimal => (n + 2) / 4,
    };
    let mut strict = formula;
    match emb {
        IsotropicEmbedding::LagrangianPluecker if n >= 5 => {
            // Cached fact: identifiable for h <= 3, i.e. strict bound 4.
            if strict < 4 {
                result
                    .notes
                    .push("raised to h <= 3 by the cached small-h fact for n >= 5".to_string());
                strict = 4;
            }
        }
        IsotropicEmbedding::SpinorMinimal => {
            if n == 7 || n == 8 {
                result.notes.push(
                    "2-identifiability is excluded for n in {7, 8}; only the formula range \
                     is certified"
                        .to_string(),
                );
            } else if strict < 3 {
                // Cached fact: 2-identifiable, i.e. strict bound 3.
                result
                    .notes
                    .push("raised to h <= 2 by the cached 2-identifiability fact".to_string());
                strict = 3;
            }
        }
        _ => {}
    }
    result.h_bound = Some(strict);
    result.set_range(strict, &[]);
    Ok(result)
}

/// Strict bound `floor((d + 1)/3)` for the surface of moment vectors of
/// degree up to `d` of a one-dimensional Gaussian; needs `d >= 3`.
pub fn bound_moments(d: u64) -> Result<BoundResult> {
    if d < 3 {
        return Err(Error::InvalidInput("the moment-surface count needs d >= 3".into()));
    }
    let mut result = BoundResult::new("moments", format!("d={d}"));
    let bound = (d + 1) / 3;
    result.h_bound = Some(bound);
    result.set_range(bound, &[]);
    Ok(result)
}

/// Inclusive bound `h <= C(ad + n, n)/C(a + n, n) - C(a + n, n) - 1` for
/// the variety of `d`-th powers of degree-`a` forms in `n + 1` variables;
/// the right-hand side is rational and may be negative, in which case the
/// certified range is empty.
pub fn bound_powers(a: u64, d: u64, n: u64) -> Result<BoundResult> {
    if a == 0 || d == 0 || n == 0 {
        return Err(Error::InvalidInput("need a, d, n >= 1".into()));
    }
    let mut result = BoundResult::new("powers", format!("a={a} d={d} n={n}"));
    let small = binom(a + n, n);
    let value = BigRational::new(binom(a * d + n, n), small.clone())
        - BigRational::from(small)
        - BigRational::one();
    result.notes.push(format!("inclusive right-hand side: {value}"));
    if value < BigRational::one() {
        result.notes.push("empty range: no h >= 1 is certified".to_string());
        return Ok(result);
    }
    let through = floor_to_u64(&value)?;
    result.h_bound = Some(through + 1);
    result.identifiable_through = Some(through);
    Ok(result)
}

/// Wraps the combinatorial lattice-point bound for a toric variety given
/// by its set of monomial exponents.
pub fn bound_toric(p: &LatticePolytope) -> Result<BoundResult> {
    let data = toric_bound(p);
    let mut result = BoundResult::new(
        "toric",
        format!("points={} m={} n={}", data.npoints, data.m, data.n),
    );
    let bound = data.bound.max(0) as u64;
    result.h_bound = Some(bound);
    result.notes.push(
        "identifiability additionally requires the tangent-plane nondegeneracy check; \
         see the certification pipeline"
            .to_string(),
    );
    result.set_range(bound, &[]);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segre_veronese_fixture_values() {
        assert_eq!(bound_segre_veronese(&[1, 1], &[2, 2]).unwrap().h_bound, Some(2));
        assert_eq!(bound_segre_veronese(&[1, 1, 1], &[2, 2, 2]).unwrap().h_bound, Some(4));
        assert_eq!(bound_segre_veronese(&[2], &[6]).unwrap().h_bound, Some(7));
    }

    #[test]
    fn segre_veronese_tie_break_evaluates_all_maximizers() {
        // Ratios tie at 1/2 with distinct pairs (1,2) and (2,4): both j are
        // evaluated and the larger bound kept.
        let b = bound_segre_veronese(&[1, 2], &[2, 4]).unwrap();
        let per_j1 = rat(2, 3) * rat(1, 4) * BigRational::from(binom(3, 2) * binom(6, 4));
        let per_j2 = rat(4, 6) * rat(1, 4) * BigRational::from(binom(3, 2) * binom(6, 4));
        let expect = floor_to_u64(&per_j1).unwrap().max(floor_to_u64(&per_j2).unwrap());
        assert_eq!(b.h_bound, Some(expect));
    }

    #[test]
    fn binary_sv_fixture_values_and_flags() {
        let b = bound_binary_sv(&[2, 2, 2]).unwrap();
        assert_eq!(b.h_bound, Some(6));
        assert_eq!(b.identifiable_through, Some(5));
        assert!(b.notes.iter().any(|n| n.contains("6-identifiability fails")));
        let b = bound_binary_sv(&[3, 3, 3]).unwrap();
        assert_eq!(b.h_bound, Some(16));
        assert!(b.notes.iter().any(|n| n.contains("perfect case")));
        assert!(b.notes.iter().any(|n| n.contains("subgeneric")));
    }

    #[test]
    fn binary_sv_exceptions_are_matched_parametrically() {
        // (2, 2a) at h = 2a + 1 = the strict bound itself: the exception
        // sits just past the certified range and marks the bound sharp.
        let b = bound_binary_sv(&[2, 6]).unwrap();
        assert_eq!(b.h_bound, Some(7));
        assert!(b.exceptions.is_empty());
        assert!(b.notes.iter().any(|n| n.contains("2,6;7")));
        assert_eq!(b.identifiable_through, Some(6));
        // (1, 1, 2a) at h = 2a + 1.
        let hs = binary_sv_exception_hs(&[1, 2, 1]);
        assert_eq!(hs, vec![(3, "1,1,2;3".to_string())]);
        // Literal lines.
        assert_eq!(binary_sv_exception_hs(&[2, 2, 2]), vec![(7, "2,2,2;7".to_string())]);
        assert_eq!(binary_sv_exception_hs(&[1, 1, 1, 1]), vec![(3, "1,1,1,1;3".to_string())]);
        assert!(binary_sv_exception_hs(&[3, 3]).is_empty());
    }

    #[test]
    fn exception_never_certified() {
        for ds in [vec![2, 2], vec![2, 4], vec![1, 1, 2], vec![2, 2, 2], vec![1, 1, 1, 1]] {
            let b = bound_binary_sv(&ds).unwrap();
            for (h, _) in binary_sv_exception_hs(&ds) {
                assert!(
                    b.identifiable_through.map_or(true, |t| h > t),
                    "tuple {ds:?} certified its own exception h = {h}"
                );
            }
        }
    }

    #[test]
    fn grassmannian_fixture_values() {
        let b = bound_grassmannian(2, 6).unwrap();
        assert_eq!(b.h_bound, Some(2));
        assert_eq!(b.refined_bound, Some(2));
        let b = bound_grassmannian(3, 7).unwrap();
        assert_eq!(b.h_bound, Some(2));
        assert_eq!(b.refined_bound, Some(4));
        assert_eq!(b.exceptions, vec!["3,7;3".to_string()]);
        assert_eq!(b.identifiable_through, Some(2));
        assert!(b.notes.iter().any(|n| n.contains("does not certify h = 3")));
        let b = bound_grassmannian(2, 8).unwrap();
        assert_eq!(b.h_bound, Some(3));
        assert_eq!(b.refined_bound, Some(4));
    }

    #[test]
    fn plane_grassmannian_tail_values() {
        assert_eq!(bound_g2n(9).unwrap().h_bound, Some(5));
        assert_eq!(bound_g2n(12).unwrap().h_bound, Some(8));
        assert!(bound_g2n(8).is_err());
    }

    #[test]
    fn flag_bound_and_inapplicability() {
        // Nested point-line flags in P^3: l = 2, s = 0 + 1 + 1 = 2, so the
        // bound is floor((4/2)^1) = 2.
        let b = bound_flag(&[0, 1], 3).unwrap();
        assert_eq!(b.h_bound, Some(2));
        // No k with n >= 2k + 1.
        let b = bound_flag(&[2], 4).unwrap();
        assert_eq!(b.h_bound, None);
        assert!(b.notes.iter().any(|n| n.contains("inapplicable")));
    }

    #[test]
    fn lagrangian_and_spinor_values() {
        let b = bound_lagrangian_spinor(7, IsotropicEmbedding::LagrangianPluecker).unwrap();
        assert_eq!(b.h_bound, Some(4));
        assert_eq!(b.identifiable_through, Some(3));
        // Cached fact raises small n >= 5 cases up to h <= 3.
        let b = bound_lagrangian_spinor(5, IsotropicEmbedding::LagrangianPluecker).unwrap();
        assert_eq!(b.h_bound, Some(4));
        let b = bound_lagrangian_spinor(10, IsotropicEmbedding::SpinorMinimal).unwrap();
        assert_eq!(b.h_bound, Some(3));
        let b = bound_lagrangian_spinor(7, IsotropicEmbedding::SpinorMinimal).unwrap();
        assert_eq!(b.h_bound, Some(2));
        assert_eq!(b.identifiable_through, Some(1));
        assert!(b.notes.iter().any(|n| n.contains("excluded for n in {7, 8}")));
        let b = bound_lagrangian_spinor(9, IsotropicEmbedding::SpinorMinimal).unwrap();
        assert_eq!(b.h_bound, Some(3));
        let b = bound_lagrangian_spinor(10, IsotropicEmbedding::SpinorPluecker).unwrap();
        assert_eq!(b.h_bound, Some(5));
    }

    #[test]
    fn moments_and_powers_values() {
        assert_eq!(bound_moments(11).unwrap().h_bound, Some(4));
        assert!(bound_moments(2).is_err());
        let b = bound_powers(1, 2, 1).unwrap();
        assert_eq!(b.h_bound, None);
        assert!(b.notes.iter().any(|n| n.contains("empty range")));
        let b = bound_powers(2, 2, 2).unwrap();
        assert_eq!(b.h_bound, None);
        // Nonempty ranges: 8/2 - 2 - 1 = 1 and 55/3 - 3 - 1 = 14 + 1/3.
        let b = bound_powers(1, 7, 1).unwrap();
        assert_eq!(b.identifiable_through, Some(1));
        assert_eq!(b.h_bound, Some(2));
        let b = bound_powers(1, 9, 2).unwrap();
        assert_eq!(b.identifiable_through, Some(14));
    }

    #[test]
    fn toric_wrapper_reports_strictness() {
        let p = LatticePolytope::simplex_dilation(2, 2);
        let b = bound_toric(&p).unwrap();
        assert_eq!(b.h_bound, Some(1));
        assert_eq!(b.identifiable_through, None);
        let p = LatticePolytope::simplex_dilation(2, 6);
        let b = bound_toric(&p).unwrap();
        assert_eq!(b.h_bound, Some(7));
        assert_eq!(b.identifiable_through, Some(6));
    }
}
