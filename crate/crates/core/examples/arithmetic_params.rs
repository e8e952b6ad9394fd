//! Coxeter congruence for a few `(q, l, d)` and the number of cuspidal kernel
//! summands.
//!
//!     cargo run --example arithmetic_params

use coxblock::arithmetic::{cuspidal_kernel_count, validate_coxeter};

fn main() -> anyhow::Result<()> {
    for (q, ell, d) in [
        (2, 3, 2),
        (4, 3, 2),
        (2, 7, 3),
        (3, 2, 1),
        (2, 5, 4),
        (3, 13, 3),
        (5, 3, 2),
    ] {
        if validate_coxeter(q, ell, d)? {
            println!(
                "q={q} l={ell} d={d}: order {d}, kernel summands {}",
                cuspidal_kernel_count(q, ell, d)?
            );
        } else {
            println!("q={q} l={ell} d={d}: order of q mod l is not d");
        }
    }
    Ok(())
}
