//! Real eigenbasis of A_β with residuals and pairwise orthogonality.
//!
//! cargo run --example eigenvectors -- +-++-

use sigcycle::cycle::SignedCycle;
use sigcycle::matrix::build_a;
use sigcycle::spectral::{eigen_residual, full_eigenbasis};

fn main() -> sigcycle::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "+-++-".into());
    let c: SignedCycle = arg.parse()?;
    let a = build_a(&c);
    let basis = full_eigenbasis(&c);

    for pair in &basis.pairs {
        let tag = if pair.exceptional {
            " (exceptional)"
        } else {
            ""
        };
        println!("j = {}, mu = {:+.6}{tag}", pair.j, pair.eigenvalue);
        println!(
            "  x = {:?}  residual {:.1e}",
            round(&pair.x),
            eigen_residual(&a, pair.eigenvalue, &pair.x)?
        );
        if let Some(y) = &pair.y {
            println!(
                "  y = {:?}  residual {:.1e}",
                round(y),
                eigen_residual(&a, pair.eigenvalue, y)?
            );
        }
    }

    let vs: Vec<&[f64]> = basis.vectors().map(|(_, v)| v).collect();
    let worst = vs
        .iter()
        .enumerate()
        .flat_map(|(i, u)| vs[i + 1..].iter().map(move |v| dot(u, v).abs()))
        .fold(0.0, f64::max);
    println!(
        "{} vectors, max |<u, v>| over distinct pairs = {worst:.1e}",
        vs.len()
    );
    Ok(())
}

fn dot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn round(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| (x * 1e6).round() / 1e6).collect()
}
