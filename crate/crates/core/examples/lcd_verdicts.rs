//! LCD tests on a few binary cyclic codes of length 15.
//!
//! cargo run --example lcd_verdicts

use std::sync::Arc;

use lrc_lcd::cosets::{cyclotomic_coset, DefiningSet};
use lrc_lcd::cyclic::CyclicCode;
use lrc_lcd::galois::FieldCtx;

fn main() -> lrc_lcd::Result<()> {
    let gf2 = Arc::new(FieldCtx::new(2, 1, None)?);
    let n = 15;
    for reps in [vec![1], vec![1, 7], vec![0, 5], vec![3], vec![1, 3, 7]] {
        let mut z = DefiningSet::empty(n);
        for a in &reps {
            z = z.union(&DefiningSet::new(n, cyclotomic_coset(*a, n, 2)?.members));
        }
        let code = CyclicCode::from_defining_set(gf2.clone(), n, z)?;
        let v = code.lcd_verdict()?;
        println!(
            "cosets {reps:?}: k = {:>2}, g = {}, lcd {} (gram {}x{})",
            code.k(),
            code.generator_poly().to_csv(),
            v.is_lcd,
            v.gram_size,
            v.gram_size
        );
    }
    Ok(())
}
