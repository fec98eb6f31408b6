//! Seeded single-erasure repair, then one repair traced read by read.
//!
//! cargo run --release --example repair_simulation

use lrc_lcd::analysis::verify_locality;
use lrc_lcd::constructions::qary_lrc_lcd_even;
use lrc_lcd::repair::{repair_erasure, simulate, ErasurePattern};

fn main() -> lrc_lcd::Result<()> {
    let c = qary_lrc_lcd_even(37, 36, 20, 5)?;
    let profile = verify_locality(&c.code, 5)?;
    let stats = simulate(&c.code, &profile, 1000, 7)?;
    println!(
        "{} of {} repaired, {} symbols read on average",
        stats.successes, stats.trials, stats.symbols_read_mean
    );

    let message: Vec<u32> = (0..20).collect();
    let word = c.code.encode(&message)?;
    let pattern = ErasurePattern::new(&word, 13)?;
    let value = repair_erasure(&c.code, &profile, &pattern)?;
    println!(
        "c_13 = {} recovered as {} from {:?}",
        word[13],
        value.value,
        pattern.reads()
    );
    Ok(())
}
