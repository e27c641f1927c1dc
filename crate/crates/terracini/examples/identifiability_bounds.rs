//! Closed-form identifiability bounds for named families, with exceptional
//! cases carved out of the certified range and sharpness notes attached.
//!
//!     cargo run --example identifiability_bounds

use terracini::bounds::{
    bound_binary_sv, bound_g2n, bound_grassmannian, bound_lagrangian_spinor, bound_moments,
    bound_powers, bound_segre_veronese, IsotropicEmbedding,
};

fn show(label: &str, r: &terracini::bounds::BoundResult) {
    println!("{label}:");
    println!("  h bound: {:?}  refined: {:?}", r.h_bound, r.refined_bound);
    println!("  identifiable through h = {:?}", r.identifiable_through);
    if !r.exceptions.is_empty() {
        println!("  exceptions inside the range: {:?}", r.exceptions);
    }
    for n in &r.notes {
        println!("  note: {n}");
    }
}

fn main() {
    show(
        "products of projective spaces, multidegree (2,2,2) on (P1)^3",
        &bound_segre_veronese(&[1, 1, 1], &[2, 2, 2]).unwrap(),
    );
    show(
        "\nbinary forms, multidegree (3,3,3)",
        &bound_binary_sv(&[3, 3, 3]).unwrap(),
    );
    show(
        "\nbinary forms, multidegree (2,2,2) (an exceptional case sits at the bound)",
        &bound_binary_sv(&[2, 2, 2]).unwrap(),
    );
    show("\nplanes in P7 (refined count with one defective case)", &bound_grassmannian(3, 7).unwrap());
    show("\ncongruences of 2-planes, n = 9", &bound_g2n(9).unwrap());
    show(
        "\nLagrangian Grassmannian, n = 7, Pluecker embedding",
        &bound_lagrangian_spinor(7, IsotropicEmbedding::LagrangianPluecker).unwrap(),
    );
    show("\nmoment surface of degree-11 binary forms", &bound_moments(11).unwrap());
    show("\npower map q -> q^1 on degree-7 binary forms", &bound_powers(1, 7, 1).unwrap());
}
