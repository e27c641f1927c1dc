//! A complete counterexample dossier in exact rational arithmetic: the
//! secant threefold of the degree-11 rational normal curve is a variety
//! whose double points have several decompositions, each constructed and
//! checked unconditionally.
//!
//!     cargo run --example counterexample_dossier

use terracini::sample::RankOptions;
use terracini::witness::{rnc_tangential_projection, verify_counterexample};

fn main() {
    let opts = RankOptions::default();

    // Blocks of r = 2 points on the degree-7 curve: h = (7+1)/4 = 2 secant
    // lines, and a general point of their join has exactly 3 decompositions.
    let d = verify_counterexample(7, 2, &opts).unwrap();
    println!("degree-7 curve, blocks of 2:");
    println!("  verdict: {}", d.verdict);
    println!(
        "  curve secant check: dim {} ({:?})",
        d.curve_secant.dim, d.curve_secant.verdict
    );
    println!(
        "  projection from {} tangent lines: span P^{}, image degree {}, birational: {}",
        d.projection.tangent_points, d.projection.span_dim, d.projection.image_degree,
        d.projection.birational
    );
    println!(
        "  witnesses: {} of {} expected, all containing the common point: {}, distinct: {}",
        d.witnesses.count, d.witnesses.expected_count, d.witnesses.all_contain_point,
        d.witnesses.pairwise_distinct
    );
    println!("  perfect parameter fit: {}", d.perfect_fit);

    println!("\nfirst witness plane, exact projective coordinates:");
    let w = &d.witnesses.witnesses[0];
    for row in &w.plane {
        println!("  [{}]", row.join(", "));
    }

    // The same machinery scales: degree-11 curve, 15 distinct decompositions.
    let d = verify_counterexample(11, 2, &opts).unwrap();
    println!("\ndegree-11 curve, blocks of 2: {} with {} witnesses", d.verdict, d.witnesses.count);

    // The tangential projection underlying the argument, reported alone: a
    // degree-7 curve projected from 2 tangent lines lands as a degree-3
    // curve spanning P^3, and the projection is birational.
    let p = rnc_tangential_projection(7, 2).unwrap();
    println!(
        "\ntangential projection (N=7, t=2): span P^{}, degree {}, birational: {}",
        p.span_dim, p.image_degree, p.birational
    );
}
