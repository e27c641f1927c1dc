//! The three-check identifiability pipeline on three showcase inputs:
//! a clean positive, a witnessed negative, and an inconclusive case where
//! the dimension inequality already fails.
//!
//!     cargo run --example certify_pipeline

use terracini::certify::certify_str;
use terracini::sample::RankOptions;

fn show(spec: &str, h: usize) {
    let opts = RankOptions::default();
    let cert = certify_str(spec, h, &opts).unwrap();
    println!("{spec} at h = {h}: {:?}", cert.conclusion);
    for c in &cert.checks {
        println!(
            "  [{}] {} ({}) - {}",
            if c.passed { "pass" } else { "fail" },
            c.name,
            c.confidence,
            c.detail
        );
    }
    for n in &cert.notes {
        println!("  note: {n}");
    }
    if let Some(w) = &cert.evidence.witnesses {
        println!(
            "  witnesses: {} distinct decompositions of one general point",
            w.count
        );
    }
    println!();
}

fn main() {
    // All three hypotheses hold: certified identifiable.
    show("veronese:2:5", 6);

    // The tangent-plane family of a curve's secant variety is degenerate,
    // so the criterion cannot apply; explicit decompositions settle the
    // question negatively instead.
    show("secant:rnc:11:2", 2);

    // The parameter count exceeds the ambient dimension, and the inequality
    // is necessary: no sharper tangent-counting argument can help.
    show("veronese:2:6", 9);
}
