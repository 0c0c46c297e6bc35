//! Exact small towers, then the bound regimes for k = 8.

use hyperramsey::verifier::{bound_report, tower};
use num_bigint::BigUint;

fn main() -> hyperramsey::Result<()> {
    for h in 1..=4 {
        let v = tower(h, &BigUint::from(2u32))?;
        let s = v.to_string();
        if s.len() > 30 {
            println!("twr_{h}(2) has {} digits", s.len());
        } else {
            println!("twr_{h}(2) = {s}");
        }
    }
    for t in 2..=9 {
        println!("{}\n", bound_report(8, t, 20, 1.0, 1.0)?);
    }
    Ok(())
}
