//! Ext Poincaré polynomials and the `E_1` page that recovers the degree
//! `-partial_I(i)` of `(R_{pi_I}^*)_{i,0}`.
//!
//!     cargo run --example ext_spectral -- 4 1 2

use coxblock::combinatorics::{partial, Rank, RootSubset};
use coxblock::ext_spectral::{e1_page, euler_check, ext_poincare, ExtKind};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let d = Rank::new(args.next().map(|s| s.parse()).transpose()?.unwrap_or(4))?;
    let subset = RootSubset::parse(d, &args.next().unwrap_or_else(|| "1,".into()))?;
    let i: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);

    for j in RootSubset::all_classical(d) {
        let ii = ext_poincare(ExtKind::Ii, &j, &subset)?;
        let vi = ext_poincare(ExtKind::Vi, &j, &subset)?;
        println!("J={j:<10} Ext(i_J, i_I) = {ii:<16} Ext(v_J, i_I) = {vi}");
    }

    let page = e1_page(&subset, i)?;
    println!("\nE_1 page for I={subset}, i={i}:");
    print!("{}", page.to_tsv());
    println!("corners: {:?}", page.corners()?);
    println!(
        "euler characteristic {} (abutment in degree {}): {}",
        page.euler_characteristic(),
        -partial(&subset, i as i64)?,
        if euler_check(&subset, i)? {
            "ok"
        } else {
            "MISMATCH"
        }
    );
    Ok(())
}
