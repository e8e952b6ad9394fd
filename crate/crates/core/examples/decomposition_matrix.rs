//! Prints the decomposition matrix of the `l`-adic classes `v_I` in the basis
//! of the irreducibles `pi_J`, then checks it against the resolution of `v_I`
//! by induced representations.
//!
//!     cargo run --example decomposition_matrix -- 3

use coxblock::combinatorics::{Rank, RootSubset};
use coxblock::grothendieck::{
    class_v, class_v_from_resolution, decomposition_matrix, induced_to_pi,
};

fn main() -> anyhow::Result<()> {
    let d: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let d = Rank::new(d)?;
    print!("{}", decomposition_matrix(d)?.to_tsv());

    for i in RootSubset::all_classical(d) {
        let direct = class_v(&i)?;
        let resolved = induced_to_pi(&class_v_from_resolution(&i)?)?;
        anyhow::ensure!(direct == resolved, "v{i}: {direct} vs {resolved}");
        println!("v{i} = {direct}");
    }
    Ok(())
}
