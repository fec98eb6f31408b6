//! Arithmetic in GF(2^6) and GF(37), and embedding GF(4) into GF(16).
//!
//! cargo run --example field_arithmetic

use std::sync::Arc;

use lrc_lcd::galois::{ArithOp, Embedding, FieldCtx};

fn main() -> lrc_lcd::Result<()> {
    let f = FieldCtx::new(2, 6, None)?;
    println!("{} generator {}", f.descriptor(), f.generator());
    let a = f.element(0b100101)?;
    let b = f.element(0b011011)?;
    println!("a + b = {}", f.arith(ArithOp::Add, &[a, b])?.value);
    println!("a * b = {}", f.arith(ArithOp::Mul, &[a, b])?.value);
    println!("a / b = {}", f.arith(ArithOp::Div, &[a, b])?.value);
    println!("a^-1 = {}, log a = {:?}", f.inv(a.value)?, f.log(a.value));
    let w = f.nth_root_of_unity(21)?;
    println!(
        "primitive 21st root of unity {} has order {:?}",
        w.value,
        f.order(w.value)
    );

    let p = FieldCtx::new(37, 1, None)?;
    println!(
        "{} generator {}, 5^-1 = {}",
        p.descriptor(),
        p.generator(),
        p.inv(5)?
    );

    let small = Arc::new(FieldCtx::new(2, 2, None)?);
    let big = Arc::new(FieldCtx::new(2, 4, None)?);
    let emb = Embedding::new(small.clone(), big.clone())?;
    for x in small.elements() {
        let up = emb.lift(x.value);
        println!(
            "GF(4) {} -> GF(16) {} -> back {:?}",
            x.value,
            up,
            emb.project(up)
        );
    }
    Ok(())
}
