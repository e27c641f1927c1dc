//! Variety descriptors: a small string language naming every catalog entry.
//!
//! A descriptor both selects a construction and serves as a canonical cache
//! key, so parsing and printing must round-trip. Grammar, one line each:
//!
//! ```text
//! veronese:<n>:<d>        plane/space Veronese, P^n re-embedded in degree d
//! sv:<n1,..>:<d1,..>      Segre-Veronese product, multidegree (d_1..d_r)
//! rnc:<N>                 rational normal curve of degree N
//! grass:<r>:<n>           Grassmannian of r-planes in P^n, Pluecker embedded
//! flag:<k1,..>:<n>        flag variety of nested k_i-planes in P^n
//! lg:<n>                  Lagrangian Grassmannian LG(n, 2n), Pluecker embedded
//! moments:<d>             moment surface of binary forms of degree d
//! powers:<a>:<d>:<n>      image of [q] -> [q^a] on degree-d forms in n+1 vars
//! secant:<inner>:<r>      r-th secant power of any descriptor above
//! polytope:<path>         toric variety of the lattice polytope in a file
//! ```
//!
//! `secant:` peels its `r` from the right, so descriptors nest:
//! `secant:secant:rnc:11:2:2` is the 2nd secant power of `secant:rnc:11:2`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lattice::LatticePolytope;
use crate::variety::{
    make_flag, make_grassmannian, make_lagrangian, make_moment_surface, make_powers, make_rnc,
    make_secant_power, make_segre_veronese, make_toric, make_veronese, ParamVariety,
};

/// Parsed form of a variety descriptor string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarietySpec {
    Veronese { n: usize, d: usize },
    SegreVeronese { ns: Vec<usize>, ds: Vec<usize> },
    Rnc { n: usize },
    Grassmannian { r: usize, n: usize },
    Flag { ks: Vec<usize>, n: usize },
    Lagrangian { n: usize },
    Moments { d: usize },
    Powers { a: usize, d: usize, n: usize },
    Secant { base: Box<VarietySpec>, r: usize },
    Polytope { path: String },
}

fn int(tok: &str, what: &str) -> Result<usize> {
    tok.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{what}: expected a nonnegative integer, got {tok:?}")))
}

fn int_list(tok: &str, what: &str) -> Result<Vec<usize>> {
    if tok.trim().is_empty() {
        return Err(Error::Parse(format!("{what}: empty list")));
    }
    tok.split(',').map(|p| int(p, what)).collect()
}

fn arity(head: &str, parts: &[&str], want: usize) -> Result<()> {
    if parts.len() != want {
        return Err(Error::Parse(format!(
            "{head}: expected {want} colon-separated argument(s), got {}",
            parts.len()
        )));
    }
    Ok(())
}

impl VarietySpec {
    /// Parses a descriptor string.
    pub fn parse(spec: &str) -> Result<VarietySpec> {
        let spec = spec.trim();
        let (head, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("descriptor {spec:?} has no arguments")))?;
        match head {
            "secant" => {
                let (inner, r_tok) = rest.rsplit_once(':').ok_or_else(|| {
                    Error::Parse("secant: expected secant:<descriptor>:<r>".into())
                })?;
                let r = int(r_tok, "secant r")?;
                if r < 1 {
                    return Err(Error::Parse("secant: r must be >= 1".into()));
                }
                Ok(VarietySpec::Secant { base: Box::new(VarietySpec::parse(inner)?), r })
            }
            "polytope" => {
                if rest.is_empty() {
                    return Err(Error::Parse("polytope: empty path".into()));
                }
                Ok(VarietySpec::Polytope { path: rest.to_string() })
            }
            _ => {
                let parts: Vec<&str> = rest.split(':').collect();
                match head {
                    "veronese" => {
                        arity(head, &parts, 2)?;
                        Ok(VarietySpec::Veronese {
                            n: int(parts[0], "veronese n")?,
                            d: int(parts[1], "veronese d")?,
                        })
                    }
                    "sv" => {
                        arity(head, &parts, 2)?;
                        Ok(VarietySpec::SegreVeronese {
                            ns: int_list(parts[0], "sv dims")?,
                            ds: int_list(parts[1], "sv degrees")?,
                        })
                    }
                    "rnc" => {
                        arity(head, &parts, 1)?;
                        Ok(VarietySpec::Rnc { n: int(parts[0], "rnc degree")? })
                    }
                    "grass" => {
                        arity(head, &parts, 2)?;
                        Ok(VarietySpec::Grassmannian {
                            r: int(parts[0], "grass r")?,
                            n: int(parts[1], "grass n")?,
                        })
                    }
                    "flag" => {
                        arity(head, &parts, 2)?;
                        Ok(VarietySpec::Flag {
                            ks: int_list(parts[0], "flag steps")?,
                            n: int(parts[1], "flag n")?,
                        })
                    }
                    "lg" => {
                        arity(head, &parts, 1)?;
                        Ok(VarietySpec::Lagrangian { n: int(parts[0], "lg n")? })
                    }
                    "moments" => {
                        arity(head, &parts, 1)?;
                        Ok(VarietySpec::Moments { d: int(parts[0], "moments d")? })
                    }
                    "powers" => {
                        arity(head, &parts, 3)?;
                        Ok(VarietySpec::Powers {
                            a: int(parts[0], "powers a")?,
                            d: int(parts[1], "powers d")?,
                            n: int(parts[2], "powers n")?,
                        })
                    }
                    _ => Err(Error::Parse(format!("unknown descriptor head {head:?}"))),
                }
            }
        }
    }

    /// Canonical string form; `parse` of this string yields `self` back.
    pub fn canonical(&self) -> String {
        match self {
            VarietySpec::Veronese { n, d } => format!("veronese:{n}:{d}"),
            VarietySpec::SegreVeronese { ns, ds } => format!(
                "sv:{}:{}",
                ns.iter().map(|v| v.to_string()).join(","),
                ds.iter().map(|v| v.to_string()).join(",")
            ),
            VarietySpec::Rnc { n } => format!("rnc:{n}"),
            VarietySpec::Grassmannian { r, n } => format!("grass:{r}:{n}"),
            VarietySpec::Flag { ks, n } => {
                format!("flag:{}:{}", ks.iter().map(|v| v.to_string()).join(","), n)
            }
            VarietySpec::Lagrangian { n } => format!("lg:{n}"),
            VarietySpec::Moments { d } => format!("moments:{d}"),
            VarietySpec::Powers { a, d, n } => format!("powers:{a}:{d}:{n}"),
            VarietySpec::Secant { base, r } => format!("secant:{}:{r}", base.canonical()),
            VarietySpec::Polytope { path } => format!("polytope:{path}"),
        }
    }

    /// Builds the parametrized variety this descriptor names.
    pub fn resolve(&self) -> Result<ParamVariety> {
        match self {
            VarietySpec::Veronese { n, d } => make_veronese(*n, *d),
            VarietySpec::SegreVeronese { ns, ds } => make_segre_veronese(ns, ds),
            VarietySpec::Rnc { n } => make_rnc(*n),
            VarietySpec::Grassmannian { r, n } => make_grassmannian(*r, *n),
            VarietySpec::Flag { ks, n } => make_flag(ks, *n),
            VarietySpec::Lagrangian { n } => make_lagrangian(*n),
            VarietySpec::Moments { d } => make_moment_surface(*d),
            VarietySpec::Powers { a, d, n } => make_powers(*a, *d, *n),
            VarietySpec::Secant { base, r } => make_secant_power(&base.resolve()?, *r),
            VarietySpec::Polytope { path } => {
                let poly = LatticePolytope::load(std::path::Path::new(path))?;
                make_toric(&self.canonical(), &poly)
            }
        }
    }
}

impl FromStr for VarietySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VarietySpec::parse(s)
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

/// One-step convenience: parse a descriptor and build its variety.
pub fn resolve_spec(spec: &str) -> Result<ParamVariety> {
    VarietySpec::parse(spec)?.resolve()
}
