//! The bigraded table `(R_pi^*)_{i,j}` for one `pi_I`, with the Lefschetz
//! components, and the `l`-adic cohomology it is extracted from.
//!
//!     cargo run --example cohomology_table -- 4 1,3

use coxblock::cohomology::{ladic_cohomology, r_star};
use coxblock::combinatorics::{Rank, RootSubset};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let d = Rank::new(args.next().map(|s| s.parse()).transpose()?.unwrap_or(4))?;
    let subset = RootSubset::parse(d, &args.next().unwrap_or_else(|| "1,3".into()))?;

    println!("l-adic cohomology for d = {d}:");
    for entry in ladic_cohomology(d)? {
        println!("  {entry}");
    }
    println!("\nR^* for pi{subset}:");
    let r = r_star(&subset)?;
    r.check_invariants()?;
    print!("{}", r.to_tsv());
    Ok(())
}
