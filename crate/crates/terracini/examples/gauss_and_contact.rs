//! Tangent-plane degeneracy from second-order jets: the rank of the family
//! of embedded tangent planes, and the dimension of the locus where a span
//! of several tangent planes stays tangent.
//!
//!     cargo run --example gauss_and_contact

use terracini::descriptor::resolve_spec;
use terracini::sample::RankOptions;
use terracini::tangency::{contact_locus_dim, gauss_rank, tangency_hint};

fn main() {
    let opts = RankOptions::default();

    println!("tangent-plane family rank (== dim means nondegenerate):");
    for spec in ["veronese:2:3", "grass:1:3", "lg:2", "secant:rnc:11:2"] {
        let x = resolve_spec(spec).unwrap();
        let g = gauss_rank(&x, &opts).unwrap();
        println!(
            "  {spec}: rank {} of dim {}{}",
            g.gauss_rank,
            x.dim(),
            if g.degenerate { "  <- degenerate: tangent plane constant along subvarieties" } else { "" }
        );
    }

    println!("\ncontact locus for h general tangent planes (gamma > 0 flags a");
    println!("positive-dimensional tangency family, a necessary symptom of");
    println!("identifiability failure but never a proof):");
    for (spec, h) in [("veronese:2:5", 6usize), ("sv:1,1:3,3", 3), ("sv:1,1,1:2,2,2", 6)] {
        let x = resolve_spec(spec).unwrap();
        let c = contact_locus_dim(&x, h, &opts).unwrap();
        println!("  {spec} h={h}: gamma = {} (span rank {})", c.gamma, c.span_rank);
    }

    println!("\nthe hint wrapper attaches cached case knowledge when available:");
    let x = resolve_spec("grass:2:7").unwrap();
    let hint = tangency_hint(&x, 3, &opts).unwrap();
    println!(
        "  grass:2:7 h=3: gamma = {}, degenerate = {}",
        hint.gamma, hint.tangentially_degenerate
    );
    if let Some(known) = &hint.known {
        println!("  known: {known}");
    }
    println!("  caveat: {}", hint.caveat);
}
