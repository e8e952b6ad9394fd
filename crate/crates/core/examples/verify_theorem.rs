//! Exhaustive check of `(R_pi^*, L_pi^*)^ss = |LJ(pi)| ⊗ (sigma^ss(pi), L(pi))`
//! over all strict subsets for `d = 1..=max`.
//!
//!     cargo run --release --example verify_theorem -- 8

use std::time::Instant;

use coxblock::cohomology::verify_all;
use coxblock::combinatorics::Rank;

fn main() -> anyhow::Result<()> {
    let max: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(8);
    let start = Instant::now();
    let mut total = 0;
    for d in 1..=max {
        let report = verify_all(Rank::new(d)?)?;
        for bad in report.failures() {
            eprintln!("d={d} I={}: {} != {}", bad.subset, bad.lhs, bad.rhs);
        }
        println!(
            "d={d}: {}/{} subsets verified",
            report.verified, report.total
        );
        anyhow::ensure!(report.all_hold(), "mismatch at d={d}");
        total += report.total;
    }
    println!("{total} cases in {:.2?}", start.elapsed());
    Ok(())
}
