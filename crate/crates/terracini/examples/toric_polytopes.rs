//! Toric varieties from lattice polytope files: combinatorial invariants,
//! the induced monomial parametrization, and the jet-based degeneracy
//! check cross-validating the combinatorics.
//!
//!     cargo run --example toric_polytopes

use std::path::Path;

use terracini::lattice::{bset, sublattice_report, toric_bound, LatticePolytope};
use terracini::sample::RankOptions;
use terracini::secant::cone_test;
use terracini::tangency::gauss_rank;
use terracini::variety::make_toric;

fn inspect(path: &Path) {
    let poly = LatticePolytope::load(path).unwrap();
    println!("{}:", path.display());
    println!("  {} lattice points, affine rank {}", poly.npoints(), poly.affine_rank());

    let b = bset(&poly);
    let sub = sublattice_report(&poly);
    println!(
        "  spanning-sum set has {} points; difference sublattice rank {} (corank {})",
        b.len(),
        sub.rho,
        sub.quotient_rank
    );

    let t = toric_bound(&poly);
    println!(
        "  identifiability bound floor(({} - {}) / {}) = {}",
        t.npoints,
        t.m,
        t.n + 1,
        t.bound
    );

    let x = make_toric(&format!("polytope:{}", path.display()), &poly).unwrap();
    let opts = RankOptions::default();
    let g = gauss_rank(&x, &opts).unwrap();
    println!(
        "  variety: dim {} in P^{}, tangent-family rank {}{}",
        x.dim(),
        x.ambient(),
        g.gauss_rank,
        if g.degenerate { " (degenerate)" } else { "" }
    );

    let c = cone_test(&x, &opts).unwrap();
    println!(
        "  cone test: {} (coordinate vertices: {:?})",
        c.label, c.vertex_coordinates
    );
    println!();
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    inspect(&dir.join("square.poly"));
    inspect(&dir.join("cone.poly"));
}
