//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so the
//! lines are always printed.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use lrc_lcd::analysis::{
    bch_lower_bound, build_report, lrc_singleton_bound, report_constructed, true_min_distance,
    verify_locality, Distance, Optimality, DEFAULT_DISTANCE_BUDGET,
};
use lrc_lcd::constructions::{
    binary_construction1, binary_construction2, qary_lrc_lcd_even, qary_lrc_lcd_general,
    symmetric_general_ta, tamo_barg_cyclic, Constructed,
};
use lrc_lcd::cosets::{all_cosets, cyclotomic_coset, multiplicative_order, DefiningSet};
use lrc_lcd::cyclic::CyclicCode;
use lrc_lcd::fixtures::fixture;
use lrc_lcd::galois::{gcd, prime_power, FieldCtx};
use lrc_lcd::repair::{simulate, SplitMix64};
use lrc_lcd::Error;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(name: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || {
        format!("{name}: got {got:?}, want {want:?}")
    })
}

fn e<T>(r: lrc_lcd::Result<T>) -> Result<T, String> {
    r.map_err(|err| err.to_string())
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn field(q: u64) -> Arc<FieldCtx> {
    let (p, m) = prime_power(q).unwrap();
    Arc::new(FieldCtx::new(p, m, None).unwrap())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let c = e(qary_lrc_lcd_even(37, 36, 20, 5))?;
    eq("|Z|", c.code.defining_set().len(), 16)?;
    let rep = e(report_constructed(&c, DEFAULT_DISTANCE_BUDGET))?;
    eq("k", rep.k, 20)?;
    eq("lcd", rep.lcd.is_lcd, true)?;
    eq("bch", rep.d_lower, 14)?;
    eq("singleton", rep.d_upper, 14)?;
    eq("class", rep.optimality, Optimality::Optimal)?;
    within(Duration::from_secs(1), start)?;
    Ok(format!("{:?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    eq("(t, a)", e(symmetric_general_ta(17, 16, 8, 3))?, (2, 2))?;
    let rep = e(report_constructed(
        &e(qary_lrc_lcd_general(17, 16, 8, 3))?,
        DEFAULT_DISTANCE_BUDGET,
    ))?;
    eq("k", rep.k, 8)?;
    eq("d_lower", rep.d_lower, 6)?;
    eq("d_upper", rep.d_upper, 7)?;
    eq("class", rep.optimality, Optimality::WithinOne)?;
    let companion = e(qary_lrc_lcd_even(13, 12, 4, 2))?;
    let rep = e(report_constructed(&companion, DEFAULT_DISTANCE_BUDGET))?;
    eq("companion d_lower", rep.d_lower, 8)?;
    eq("companion d_upper", rep.d_upper, 8)?;
    eq("companion d_true", rep.d_true, Distance::Exact(8))?;
    within(Duration::from_secs(30), start)?;
    Ok(format!(
        "companion (12,4,2) over GF(13) has d = 8; {:?}",
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    eq(
        "(t, a) for k=35",
        e(symmetric_general_ta(67, 66, 35, 5))?,
        (12, 0),
    )?;
    eq(
        "(t, a) for k=37",
        e(symmetric_general_ta(67, 66, 37, 5))?,
        (10, 4),
    )?;
    let a = e(fixture("3.5a").and_then(|f| f.reproduce(DEFAULT_DISTANCE_BUDGET)))?;
    eq("35: d_lower", a.d_lower, 26)?;
    eq("35: d_upper", a.d_upper, 26)?;
    eq("35: class", a.optimality, Optimality::Optimal)?;
    let b = e(fixture("3.5b").and_then(|f| f.reproduce(DEFAULT_DISTANCE_BUDGET)))?;
    eq("37: d_lower", b.d_lower, 22)?;
    eq("37: d_upper", b.d_upper, 23)?;
    eq("37: class", b.optimality, Optimality::WithinOne)?;
    Ok(String::new())
}

fn criterion_4() -> Outcome {
    let rep = e(report_constructed(
        &e(binary_construction2(6, 2, None))?,
        DEFAULT_DISTANCE_BUDGET,
    ))?;
    eq("k", rep.k, 30)?;
    let run = rep.run.ok_or("no run")?;
    eq("run (start, len)", (run.start, run.len), (59, 9))?;
    eq("d_lower", rep.d_lower, 10)?;
    eq("lcd", rep.lcd.is_lcd, true)?;
    Ok(String::new())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let c = e(binary_construction2(8, 4, Some(&[1, 254, 3, 252])))?;
    let rep = e(report_constructed(&c, DEFAULT_DISTANCE_BUDGET))?;
    eq("k", rep.k, 172)?;
    eq("run", rep.run.map(|r| r.len), Some(13))?;
    eq("d_lower", rep.d_lower, 14)?;
    eq("negation closed", rep.lcd.negation_closed, true)?;
    eq("g self-reciprocal", rep.lcd.self_reciprocal, true)?;
    eq("gram size", rep.lcd.gram_size, 83)?;
    eq("gram full rank", rep.lcd.hull_trivial, true)?;
    eq("lcd", rep.lcd.is_lcd, true)?;
    within(Duration::from_secs(10), start)?;
    Ok(format!("{:?}", start.elapsed()))
}

fn criterion_6() -> Outcome {
    let mut swept = Vec::new();
    for m in 2..=4u32 {
        let n = (1usize << m) - 1;
        for r in (1..n).filter(|r| n.is_multiple_of(r + 1)) {
            let c = e(binary_construction1(m, r))?;
            let tag = format!("m={m} r={r}");
            eq(&format!("{tag} k"), c.code.k(), r * n / (r + 1))?;
            let d = true_min_distance(&c.code, 1 << 14);
            eq(&format!("{tag} d_true"), d, Distance::Exact(2))?;
            eq(
                &format!("{tag} singleton"),
                e(lrc_singleton_bound(n, c.code.k(), r))?,
                2,
            )?;
            e(verify_locality(&c.code, r))?;
            eq(&format!("{tag} lcd"), e(c.code.lcd_verdict())?.is_lcd, true)?;
            swept.push(format!("({n},{r})"));
        }
    }
    Ok(format!("swept {}", swept.join(" ")))
}

/// A random union of cosets over GF(q), length n.
fn random_set(rng: &mut SplitMix64, n: usize, q: u64) -> DefiningSet {
    let mut z = DefiningSet::empty(n);
    for c in all_cosets(n, q).unwrap() {
        if rng.below(2) == 0 {
            z = z.union(&DefiningSet::new(n, c.members));
        }
    }
    z
}

const QS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

fn criterion_7() -> Outcome {
    let mut rng = SplitMix64::new(20_240_601);
    let mut cases = 0;

    // Coset laws.
    for _ in 0..400 {
        let q = QS[rng.below(QS.len() as u64) as usize];
        let n = 2 + rng.below(511) as usize;
        if gcd(q, n as u64) != 1 {
            continue;
        }
        let a = rng.below(n as u64) as usize;
        let ca = e(cyclotomic_coset(a, n, q))?;
        let cn = e(cyclotomic_coset((n - a) % n, n, q))?;
        for &b in &ca.members {
            ensure(cn.contains((n - b) % n), || {
                format!("n-b not in [n-a]: q={q} n={n} a={a} b={b}")
            })?;
        }
        let ord = e(multiplicative_order(q, n))? as usize;
        ensure(ord.is_multiple_of(ca.len()), || {
            format!("|[{a}]| does not divide ord: q={q} n={n}")
        })?;
        eq("|[1]|", e(cyclotomic_coset(1, n, q))?.len(), ord)?;
        cases += 1;
    }
    ensure(cases >= 200, || format!("only {cases} coset cases"))?;

    // Generator, parity-check and dual; three-way LCD agreement.
    let (mut lcd_seen, mut non_lcd_seen, mut code_cases) = (0, 0, 0);
    while code_cases < 240 {
        let q = QS[rng.below(QS.len() as u64) as usize];
        let n = 2 + rng.below(40) as usize;
        if gcd(q, n as u64) != 1 {
            continue;
        }
        let mut z = random_set(&mut rng, n, q);
        if code_cases % 3 == 0 {
            // Deliberately unpaired: one coset without its negation.
            let unpaired = e(all_cosets(n, q))?
                .into_iter()
                .map(|c| DefiningSet::new(n, c.members))
                .find(|s| s.negate() != *s);
            if let Some(s) = unpaired {
                let neg = s.negate();
                z = DefiningSet::new(n, z.iter().filter(|i| !neg.contains(*i))).union(&s);
            }
        }
        let code = match CyclicCode::from_defining_set(field(q), n, z.clone()) {
            Ok(c) => c,
            Err(Error::NoSplittingField { .. }) => continue,
            Err(err) => return Err(format!("q={q} n={n}: {err}")),
        };
        let ring = code.ring();
        let prod = e(ring.mul(code.generator_poly(), code.parity_check_poly()))?;
        eq("g*h", prod, ring.x_n_minus_1(n))?;
        let dual = e(code.dual())?;
        let hstar = e(ring.monic(&e(ring.reciprocal(code.parity_check_poly()))?))?;
        eq("dual generator", dual.generator_poly().clone(), hstar)?;
        let v = e(code.lcd_verdict())?;
        ensure(
            v.negation_closed == v.self_reciprocal && v.self_reciprocal == v.hull_trivial,
            || format!("LCD tests disagree: q={q} n={n} z={:?} {v:?}", z.to_vec()),
        )?;
        if v.is_lcd {
            lcd_seen += 1;
        } else {
            non_lcd_seen += 1;
        }
        code_cases += 1;
    }
    ensure(non_lcd_seen >= 50 && lcd_seen >= 20, || {
        format!("unbalanced LCD sample: {lcd_seen} LCD, {non_lcd_seen} not")
    })?;

    // Distance bounds on exhaustively searchable codes.
    let mut bound_cases = 0;
    while bound_cases < 200 {
        let q = QS[rng.below(QS.len() as u64) as usize];
        let n = 2 + rng.below(19) as usize;
        if gcd(q, n as u64) != 1 {
            continue;
        }
        let z = random_set(&mut rng, n, q);
        let k = n - z.len();
        if k == 0 || (k as f64) * (q as f64).log2() > 20.0 {
            continue;
        }
        let code = match CyclicCode::from_defining_set(field(q), n, z.clone()) {
            Ok(c) => c,
            Err(Error::NoSplittingField { .. }) => continue,
            Err(err) => return Err(format!("q={q} n={n}: {err}")),
        };
        let rep = e(build_report(&code, None, 1 << 20))?;
        let d = rep.d_true.exact().ok_or("distance unavailable")?;
        ensure(
            bch_lower_bound(&code) <= d && d as i64 <= rep.d_upper,
            || {
                format!(
                    "q={q} n={n} z={:?}: {} <= {d} <= {} fails",
                    z.to_vec(),
                    rep.d_lower,
                    rep.d_upper
                )
            },
        )?;
        bound_cases += 1;
    }

    // Repair on every construction-emitted code.
    let mut built: Vec<(String, Constructed)> = Vec::new();
    for id in ["3.1", "3.2", "3.3", "3.4", "3.5a", "3.5b"] {
        built.push((id.into(), e(fixture(id).and_then(|f| f.construct()))?));
    }
    for (m, r) in [(2, 2), (3, 6), (4, 2), (4, 4), (4, 14)] {
        built.push((format!("c1 m={m} r={r}"), e(binary_construction1(m, r))?));
    }
    built.push((
        "tb 13/12/8/2".into(),
        e(tamo_barg_cyclic(13, 12, 8, 2, 1, 1))?,
    ));
    built.push(("t33 13/12/4/2".into(), e(qary_lrc_lcd_even(13, 12, 4, 2))?));
    for (name, c) in &built {
        let r = c.params.r;
        let profile = e(verify_locality(&c.code, r))?;
        let stats = e(simulate(&c.code, &profile, 1000, 7))?;
        eq(&format!("{name} successes"), stats.successes, 1000)?;
        eq(&format!("{name} reads"), stats.symbols_read_mean, r as f64)?;
    }

    Ok(format!(
        "{cases} coset, {code_cases} code ({lcd_seen} LCD / {non_lcd_seen} not), {bound_cases} bound, {} repair",
        built.len()
    ))
}

fn exit_code(args: &[&str]) -> Result<i32, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_lrclcd"))
        .args(args)
        .output()
        .map_err(|err| err.to_string())?;
    out.status.code().ok_or_else(|| "killed by signal".into())
}

fn criterion_8() -> Outcome {
    eq(
        "parity",
        qary_lrc_lcd_even(13, 12, 6, 2)
            .err()
            .map(|e| matches!(e, Error::ParityViolation { .. })),
        Some(true),
    )?;
    eq(
        "divisibility",
        qary_lrc_lcd_general(67, 66, 36, 5)
            .err()
            .map(|e| matches!(e, Error::DivisibilityViolation { .. })),
        Some(true),
    )?;
    let gf2 = field(2);
    eq(
        "not closed",
        CyclicCode::from_defining_set(gf2, 7, DefiningSet::new(7, [1])).err(),
        Some(Error::NotGaloisClosed {
            q: 2,
            n: 7,
            missing: 2,
        }),
    )?;
    eq(
        "unpaired",
        binary_construction2(6, 2, Some(&[1])).err(),
        Some(Error::UnpairedCoset(1)),
    )?;

    let dir = tempfile::tempdir().map_err(|err| err.to_string())?;
    let desc = dir.path().join("code.json");
    std::fs::write(&desc, r#"{"q": 2, "m": 3, "n": 7, "defining_set": [1]}"#)
        .map_err(|err| err.to_string())?;
    let desc = desc.to_str().unwrap();
    let cases: [(&str, Vec<&str>); 4] = [
        (
            "parity",
            vec![
                "construct",
                "--family",
                "t33",
                "--q",
                "13",
                "--n",
                "12",
                "--k",
                "6",
                "--r",
                "2",
            ],
        ),
        (
            "divisibility",
            vec![
                "construct",
                "--family",
                "t34",
                "--q",
                "67",
                "--n",
                "66",
                "--k",
                "36",
                "--r",
                "5",
            ],
        ),
        ("not closed", vec!["verify", "--file", desc]),
        (
            "unpaired",
            vec![
                "construct",
                "--family",
                "c2",
                "--m",
                "6",
                "--r",
                "2",
                "--extras",
                "1",
            ],
        ),
    ];
    for (name, args) in cases {
        eq(&format!("{name} exit"), exit_code(&args)?, 2)?;
    }
    Ok(String::new())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 (36,20,5) over GF(37)", criterion_1),
        ("2 (16,8,3) over GF(17) + companion", criterion_2),
        ("3 (66,35,5) and (66,37,5) over GF(67)", criterion_3),
        ("4 binary m=6 r=2", criterion_4),
        ("5 binary m=8 r=4", criterion_5),
        ("6 binary group-code sweep", criterion_6),
        ("7 property suite", criterion_7),
        ("8 negative paths", criterion_8),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) if detail.is_empty() => println!("PASS criterion {name}"),
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
