//! Binary LRC-LCD codes: group codes alone, then with paired extra cosets.
//!
//! cargo run --release --example binary_constructions

use lrc_lcd::analysis::{report_constructed, DEFAULT_DISTANCE_BUDGET};
use lrc_lcd::constructions::{binary_construction1, binary_construction2};

fn main() -> lrc_lcd::Result<()> {
    for (m, r) in [(4, 2), (4, 4), (6, 2), (6, 8)] {
        let c = binary_construction1(m, r)?;
        let rep = report_constructed(&c, DEFAULT_DISTANCE_BUDGET)?;
        println!(
            "c1 m={m} r={r}: n={} k={} d={:?} lcd={}",
            rep.n, rep.k, rep.d_true, rep.lcd.is_lcd
        );
    }
    let cases: [(u32, usize, Option<&[usize]>); 3] =
        [(6, 2, None), (8, 4, Some(&[1, 254, 3, 252])), (4, 2, None)];
    for (m, r, extras) in cases {
        let c = binary_construction2(m, r, extras)?;
        let rep = report_constructed(&c, DEFAULT_DISTANCE_BUDGET)?;
        println!(
            "c2 m={m} r={r}: n={} k={} d in [{}, {}] lcd={} r_verified={:?}",
            rep.n, rep.k, rep.d_lower, rep.d_upper, rep.lcd.is_lcd, rep.r_verified
        );
        for note in rep.notes {
            println!("  {note}");
        }
    }
    Ok(())
}
