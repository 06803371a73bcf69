//! Descriptor report for every signing of a small cycle.
//!
//! cargo run --example descriptors -- 4

use sigcycle::classify::descriptor_rows;

fn main() -> sigcycle::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    println!(
        "{:<8} {:>2} {:>2} {:>7} {:>10} {:>10}  spectrum",
        "signs", "r", "s", "wiener", "energy", "n3"
    );
    for d in descriptor_rows(n)? {
        println!(
            "{:<8} {:>2} {:>2} {:>7} {:>10.6} {:>10.6}  {}",
            d.sign_string, d.r, d.s, d.wiener_sum, d.energy, d.n3, d.spectrum_key
        );
    }
    Ok(())
}
