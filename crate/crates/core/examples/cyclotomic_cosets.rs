//! Cyclotomic cosets, negation and closure.
//!
//! cargo run --example cyclotomic_cosets

use lrc_lcd::cosets::{all_cosets, cyclotomic_coset, multiplicative_order, DefiningSet};

fn main() -> lrc_lcd::Result<()> {
    let (n, q) = (63, 2);
    println!("ord_{n}({q}) = {}", multiplicative_order(q, n)?);
    for c in all_cosets(n, q)? {
        let s = DefiningSet::new(n, c.members.iter().copied());
        let tag = if s.negate() == s { "self-negating" } else { "" };
        println!("[{:>2}] {:?} {tag}", c.rep, c.members);
    }

    let one = cyclotomic_coset(1, n, q)?;
    let z = DefiningSet::new(n, one.members);
    println!("-[1] = {:?}", z.negate().to_vec());
    let both = z.union(&z.negate());
    println!("[1] u [62] negation closed: {}", both.is_negation_closed());
    let run = both.longest_consecutive_run()?;
    println!(
        "longest run starts at {} with length {}",
        run.start, run.len
    );

    let lone = DefiningSet::new(7, [1]);
    println!(
        "{{1}} mod 7 first missing under x2: {:?}",
        lone.first_unclosed(2)
    );
    println!("closure: {:?}", lone.closure(2)?.to_vec());
    Ok(())
}
