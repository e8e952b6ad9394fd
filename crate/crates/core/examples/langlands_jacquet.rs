//! Langlands-Jacquet transfer of each `pi_I` to `D^×`.
//!
//!     cargo run --example langlands_jacquet -- 4

use coxblock::combinatorics::{Rank, RootSubset};
use coxblock::grothendieck::class_i;
use coxblock::jacquet_langlands::{lj, lj_linear};

fn main() -> anyhow::Result<()> {
    let d: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);
    let d = Rank::new(d)?;
    for i in RootSubset::all_strict(d) {
        println!("LJ(pi{i}) = {}", lj(&i)?);
    }
    // Induced representations from proper parabolics die under LJ.
    for i in RootSubset::all_classical(d)
        .into_iter()
        .filter(|i| i.len() + 1 < d.get() as usize)
    {
        anyhow::ensure!(
            lj_linear(&class_i(&i)?)?.is_zero(),
            "LJ(i{i}) should vanish"
        );
    }
    println!("LJ(i_I) = 0 for every proper I");
    Ok(())
}
