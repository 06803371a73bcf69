//! Switching: conjugation by a diagonal ±1 matrix, reduction to a canonical
//! signing, and the census of switching classes.
//!
//! cargo run --example switching -- 5

use sigcycle::classify::switching_class_census;
use sigcycle::cycle::{SignedCycle, VertexSet};
use sigcycle::matrix::{build_a, switch_diagonal};

fn main() -> sigcycle::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let c = SignedCycle::from_mask(n, 0b1011 & ((1 << n) - 1))?;
    let w = VertexSet::new(n, [1, 3])?;
    let switched = c.switch(&w)?;
    println!(
        "{c} switched at {:?} -> {switched}",
        w.iter().collect::<Vec<_>>()
    );

    let d = switch_diagonal(&w, n)?;
    let dad = d.multiply(&build_a(&c))?.multiply(&d)?;
    println!("D A D == A(switched): {}", dad == build_a(&switched));

    let (canonical, witness) = c.switching_reduce();
    println!(
        "canonical form {canonical} via {:?}",
        witness.iter().collect::<Vec<_>>()
    );

    let census = switching_class_census(n)?;
    for class in &census.classes {
        println!(
            "class of {:<3} rep {}  spectrum {}  constant: {}",
            class.size, class.representative, class.spectrum_key, class.spectrum_constant
        );
    }
    Ok(())
}
