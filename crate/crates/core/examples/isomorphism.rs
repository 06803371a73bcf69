//! Rotation and reflection isomorphism between signed cycles.
//!
//! cargo run --example isomorphism -- ++-+--- +---+-+

use sigcycle::cycle::SignedCycle;

fn main() -> sigcycle::Result<()> {
    let mut args = std::env::args().skip(1);
    let a: SignedCycle = args.next().unwrap_or_else(|| "++-+---".into()).parse()?;
    let b: SignedCycle = args.next().unwrap_or_else(|| "+---+-+".into()).parse()?;

    match a.iso_oriented(&b)? {
        Some(k) => println!("{a} rotated by {k} is {b}"),
        None => println!("{a} and {b} differ under rotation alone"),
    }
    match a.iso_unoriented_match(&b)? {
        Some((reversed, k)) => println!("match with reversed = {reversed}, shift = {k}"),
        None => println!("not isomorphic even with reflection"),
    }
    println!(
        "canonical rotations   {} / {}",
        a.canonical_rotation(),
        b.canonical_rotation()
    );
    println!(
        "canonical unoriented  {} / {}",
        a.canonical_unoriented(),
        b.canonical_unoriented()
    );
    Ok(())
}
