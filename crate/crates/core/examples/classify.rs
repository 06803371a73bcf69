//! How well each descriptor separates the 2^n signings of C_n.
//!
//! cargo run --example classify -- 6

use sigcycle::classify::efficacy_report;

fn main() -> sigcycle::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let report = efficacy_report(n)?;
    println!("{}", report.table());
    for row in &report.rows {
        println!("{:<17} sizes {:?}", row.descriptor_name, row.class_sizes);
    }
    match report.unique_full_discriminator {
        Some(d) => println!("only {d} tells every signing apart"),
        None => println!("no unique full discriminator"),
    }
    Ok(())
}
