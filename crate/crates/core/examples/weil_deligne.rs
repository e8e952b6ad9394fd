//! Weil-Deligne parameters `(sigma^ss(pi_I), L(pi_I))`, their monodromy
//! transposes and Deligne primitive parts, cross-checked by matrix ranks.
//!
//!     cargo run --example weil_deligne -- 5

use coxblock::combinatorics::{Rank, RootSubset};
use coxblock::oracle;
use coxblock::weil_deligne::{wd_elliptic, Direction};

fn main() -> anyhow::Result<()> {
    let d: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);
    let d = Rank::new(d)?;
    for i in RootSubset::all_strict(d) {
        let x = wd_elliptic(&i)?;
        let (labels, m) = x.to_operator();
        anyhow::ensure!(oracle::jordan_type(&m) == x.jordan_type());
        anyhow::ensure!(
            oracle::primitive_parts(d, &labels, &m, Direction::L) == x.deligne_primitive_parts()
        );
        println!(
            "{i:<14} {x:<24} {:<24} {:?}",
            x.transpose().to_string(),
            x.deligne_primitive_parts()
        );
    }
    Ok(())
}
