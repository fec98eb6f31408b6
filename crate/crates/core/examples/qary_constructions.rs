//! q-ary LRC-LCD codes from symmetric intervals, and the plain cyclic
//! Tamo-Barg code for comparison.
//!
//! cargo run --release --example qary_constructions

use lrc_lcd::analysis::{report_constructed, DEFAULT_DISTANCE_BUDGET};
use lrc_lcd::constructions::{
    qary_lrc_lcd_even, qary_lrc_lcd_general, symmetric_general_ta, tamo_barg_cyclic,
};

fn main() -> lrc_lcd::Result<()> {
    let built = [
        qary_lrc_lcd_even(37, 36, 20, 5)?,
        qary_lrc_lcd_general(17, 16, 8, 3)?,
        qary_lrc_lcd_general(67, 66, 35, 5)?,
        qary_lrc_lcd_general(67, 66, 37, 5)?,
        tamo_barg_cyclic(13, 12, 8, 2, 1, 1)?,
    ];
    for c in &built {
        let rep = report_constructed(c, DEFAULT_DISTANCE_BUDGET)?;
        println!(
            "{:>3} q={:<2} ({}, {}, {}): d in [{}, {}] {} lcd={}",
            c.family.token(),
            rep.q,
            rep.n,
            rep.k,
            c.params.r,
            rep.d_lower,
            rep.d_upper,
            rep.optimality,
            rep.lcd.is_lcd
        );
    }
    match symmetric_general_ta(67, 66, 36, 5) {
        Ok(ta) => println!("unexpected {ta:?}"),
        Err(e) => println!("k=36 rejected: {e}"),
    }
    Ok(())
}
