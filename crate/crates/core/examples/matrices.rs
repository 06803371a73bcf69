//! B_β, its powers, and A_β = B_β + B_β'.
//!
//! cargo run --example matrices -- +-+

use sigcycle::cycle::SignedCycle;
use sigcycle::matrix::{b_power_closed_form, build_a, build_b, SquareMatrix};
use sigcycle::spectral::char_poly_exact;

fn show(label: &str, m: &SquareMatrix<i64>) {
    println!("{label}:");
    for row in m.to_rows() {
        println!(
            "  {}",
            row.iter().map(|v| format!("{v:>3}")).collect::<String>()
        );
    }
}

fn main() -> sigcycle::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "+-+".into());
    let c: SignedCycle = arg.parse()?;
    let b = build_b(&c);
    show("B", &b);
    for k in 2..=c.n() {
        let p = b.power(k as u32);
        assert_eq!(p, b_power_closed_form(&c, k));
        show(&format!("B^{k}"), &p);
    }
    let a = build_a(&c);
    show("A", &a);
    println!(
        "trace {}, entry sum {}, det(tI - A) = {:?}",
        a.trace(),
        a.entry_sum(),
        char_poly_exact(&a)
    );
    Ok(())
}
