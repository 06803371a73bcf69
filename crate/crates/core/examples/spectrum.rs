//! Closed-form spectrum of a signed cycle, checked against the Jacobi oracle.
//!
//! cargo run --example spectrum -- +-+-+-

use sigcycle::cycle::SignedCycle;
use sigcycle::matrix::build_a;
use sigcycle::spectral::{char_poly_coefficients, oracle_eigenvalues, spectrum_of};

fn main() -> sigcycle::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "+-+-+-".into());
    let c: SignedCycle = arg.parse()?;
    let inv = c.invariants();
    println!(
        "{c}: n = {}, negative edges r = {}, parity s = {}",
        c.n(),
        inv.r,
        inv.s
    );

    let closed = spectrum_of(&c);
    let oracle = oracle_eigenvalues(&build_a(&c))?;
    println!("{:>4} {:>14} {:>14}", "j", "closed form", "Jacobi");
    for (e, o) in closed.entries.iter().zip(&oracle) {
        println!("{:>4} {:>14.10} {:>14.10}", e.j, e.value, o);
    }
    for (value, mult) in closed.distinct() {
        println!("  {value:+.6} with multiplicity {mult}");
    }
    println!(
        "char poly (descending): {:?}",
        char_poly_coefficients(c.n(), inv.s)?
    );
    Ok(())
}
