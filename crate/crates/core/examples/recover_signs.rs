//! Recover edge signs from eigenvectors: the cosine/sine pair, each alone,
//! and the eigenvector of ±2.
//!
//! cargo run --example recover_signs -- +-++-+

use sigcycle::cycle::SignedCycle;
use sigcycle::recovery::{
    recover_from_cosine, recover_from_pair, recover_from_pm2_vector, recover_from_sine,
};
use sigcycle::spectral::{
    cosine_eigenvector, exceptional_eigenvector, sine_eigenvector, ExtremeEigenvalue,
};

fn main() -> sigcycle::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "+-++-+".into());
    let c: SignedCycle = arg.parse()?;
    println!("true signs      {c}");

    // any nonzero scaling of the eigenvectors works the same way
    let x: Vec<f64> = cosine_eigenvector(&c, 0)?.iter().map(|v| 3.5 * v).collect();
    let y = sine_eigenvector(&c, 0)?;

    println!("cosine alone    {}", recover_from_cosine(&x)?.sign_string());
    if let Some(y) = &y {
        println!("sine alone      {}", recover_from_sine(y)?.sign_string());
    }
    let pair = recover_from_pair(&x, y.as_deref())?;
    println!(
        "pair            {}  rules {:?}",
        pair.sign_string(),
        pair.rules
    );

    for t in [ExtremeEigenvalue::PlusTwo, ExtremeEigenvalue::MinusTwo] {
        match exceptional_eigenvector(&c, t) {
            Ok(v) => println!(
                "{:+} vector      {}",
                t.value(),
                recover_from_pm2_vector(&v, t)?.sign_string()
            ),
            Err(e) => println!("{:+} vector      not available ({e})", t.value()),
        }
    }
    Ok(())
}
