//! BCH bound, LRC Singleton bound and exact distance side by side.
//!
//! cargo run --release --example distance_bounds

use lrc_lcd::analysis::{bch_lower_bound, lrc_singleton_bound, true_min_distance, verify_locality};
use lrc_lcd::constructions::{binary_construction1, qary_lrc_lcd_even, qary_lrc_lcd_general};

fn main() -> lrc_lcd::Result<()> {
    let codes = [
        qary_lrc_lcd_even(13, 12, 4, 2)?,
        qary_lrc_lcd_general(13, 12, 6, 2)?,
        qary_lrc_lcd_general(7, 6, 2, 2)?,
        binary_construction1(4, 4)?,
    ];
    println!("q   n   k  r  bch  exact  singleton");
    for c in &codes {
        let (n, k, r) = (c.code.n(), c.code.k(), c.params.r);
        verify_locality(&c.code, r)?;
        println!(
            "{:<3} {:<3} {:<2} {:<2} {:<4} {:<6} {}",
            c.code.q(),
            n,
            k,
            r,
            bch_lower_bound(&c.code),
            true_min_distance(&c.code, 1 << 26)
                .exact()
                .map_or("-".into(), |d| d.to_string()),
            lrc_singleton_bound(n, k, r)?
        );
    }
    Ok(())
}
