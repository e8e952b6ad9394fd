//! Lists every elliptic principal series `pi_I` of `GL_d` with its Levi and
//! Whittaker partitions, LJ sign and support, and WD Jordan type.
//!
//!     cargo run --example classify -- 4

use coxblock::combinatorics::{levi_partition, whittaker_partition, Rank, RootSubset};
use coxblock::jacquet_langlands::lj_effective;
use coxblock::weil_deligne::wd_elliptic;

fn main() -> anyhow::Result<()> {
    let d: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);
    let d = Rank::new(d)?;
    println!(
        "{:<12} {:<12} {:<12} {:>4}  {:<12} jordan",
        "I", "levi", "whittaker", "sign", "|LJ|"
    );
    for i in RootSubset::all_strict(d) {
        let lj = lj_effective(&i)?;
        let support: Vec<String> = lj.chars.iter().map(|j| format!("nu_D^{j}")).collect();
        println!(
            "{:<12} {:<12} {:<12} {:>4}  {:<12} {}",
            i.to_string(),
            levi_partition(&i)?.to_string(),
            whittaker_partition(&i)?.to_string(),
            lj.sign,
            support.len(),
            wd_elliptic(&i)?.jordan_type()
        );
    }
    Ok(())
}
