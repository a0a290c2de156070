//! Acceptance suite. Each criterion prints one `[PASS]` or `[FAIL]` line;
//! run with `--nocapture` to see them.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;

use congruum::apsquares::{
    brute_force_congruums, check_fourth_power_equations, enumerate_congruums,
};
use congruum::constructions::{
    enumerate_quad_sum_witnesses, heron_area_squared_16, is_right_triangle, proof3_triangle,
    quadruple_from_params, QuadParams,
};
use congruum::descent::{four_split, verify_descent_bound, verify_no_square_area};
use congruum::intcore::{gcd, square};
use congruum::triples::{
    enumerate_primitive_triples, enumerate_scaled_triples, params_from_primitive,
    triple_from_params,
};
use congruum::Natural;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_congruum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cli_report(args: &[&str]) -> Result<serde_json::Value, String> {
    let o = cli(args);
    ensure(
        o.status.code() == Some(0),
        format!("exit status {:?}", o.status.code()),
    )?;
    let text = String::from_utf8(o.stdout).map_err(|e| e.to_string())?;
    serde_json::from_str(text.trim()).map_err(|e| e.to_string())
}

fn formula_oracle_agreement() -> Check {
    let r_max = nat(100_000);
    let formula = enumerate_congruums(&r_max);
    let oracle = brute_force_congruums(&r_max);
    let f_values: BTreeSet<_> = formula.iter().map(|w| w.r.clone()).collect();
    let o_values: BTreeSet<_> = oracle.iter().map(|p| p.r.clone()).collect();
    ensure(f_values == o_values, "value sets differ")?;
    let smallest = &formula[0];
    ensure(
        smallest.r == nat(24),
        format!("smallest congruum {}", smallest.r),
    )?;
    ensure(
        (&smallest.a, &smallest.c, &smallest.d) == (&nat(1), &nat(5), &nat(7)),
        format!(
            "smallest witness {} {} {}",
            smallest.a, smallest.c, smallest.d
        ),
    )?;
    let first = oracle
        .iter()
        .min_by(|x, y| (&x.r, &x.a).cmp(&(&y.r, &y.a)))
        .unwrap();
    ensure(
        (&first.a, &first.c, &first.d, &first.r) == (&nat(1), &nat(5), &nat(7), &nat(24)),
        "oracle disagrees on the smallest witness",
    )?;
    Ok(format!(
        "{} distinct values, smallest 24 at (1, 5, 7)",
        f_values.len()
    ))
}

fn no_square_congruum() -> Check {
    let rep = cli_report(&["verify", "no-square-congruum", "--bound", "1000000"])?;
    ensure(rep["counterexamples"] == "0", format!("{rep}"))?;
    Ok(format!(
        "{} progressions checked",
        rep["checked"].as_str().unwrap_or("?")
    ))
}

fn no_square_area() -> Check {
    let c_max = nat(10_000);
    let rep = verify_no_square_area(&c_max, 1);
    ensure(
        rep.passed(),
        format!("{} counterexamples", rep.counterexamples.len()),
    )?;
    let all = enumerate_scaled_triples(&c_max).count() as u64;
    ensure(
        rep.checked == all,
        format!("checked {} of {all} triples", rep.checked),
    )?;
    Ok(format!("{all} triples checked"))
}

fn fourth_powers() -> Check {
    let rep = check_fourth_power_equations(&nat(200), 1);
    ensure(
        rep.passed(),
        format!("{} counterexamples", rep.counterexamples.len()),
    )?;
    Ok(format!("{} coprime pairs checked", rep.checked))
}

fn descent_sweep() -> Check {
    let rep = cli_report(&["verify", "descent", "--bound", "10000"])?;
    ensure(rep["counterexamples"] == "0", format!("{rep}"))?;
    let lib = verify_descent_bound(&nat(10_000), 1);
    ensure(lib.passed(), "library sweep found a descended candidate")?;
    ensure(
        rep["checked"].as_str() == Some(lib.checked.to_string().as_str()),
        "CLI and library candidate counts differ",
    )?;
    Ok(format!("{} candidates rejected", lib.checked))
}

fn quadruple_identity() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for _ in 0..10_000 {
        let mut v: [u64; 4] = [0; 4];
        for x in &mut v {
            *x = rng.gen_range(0..1u64 << 40);
        }
        if v.iter().sum::<u64>() % 2 == 0 {
            v[3] += 1;
        }
        let params = QuadParams::new(nat(v[0]), nat(v[1]), nat(v[2]), nat(v[3]))
            .map_err(|e| format!("{v:?}: {e}"))?;
        let q = quadruple_from_params(&params).map_err(|e| format!("{v:?}: {e}"))?;
        ensure(
            square(&q.a) + square(&q.b) + square(&q.c) == square(&q.d),
            format!("identity fails at {v:?}"),
        )?;
    }
    Ok("10000 random parameter sets".into())
}

fn proof3_identity() -> Check {
    let u_max = nat(100);
    let witnesses = enumerate_quad_sum_witnesses(&u_max);
    ensure(!witnesses.is_empty(), "no witnesses enumerated")?;
    for w in &witnesses {
        let (t, area) = proof3_triangle(w).map_err(|e| format!("{w:?}: {e}"))?;
        ensure(
            t.perimeter() == nat(2) * square(&w.u),
            format!("{w:?}: side sum"),
        )?;
        let expect = nat(16) * square(&(w.u.clone() * &w.m * &w.n * &w.v));
        ensure(
            heron_area_squared_16(&t).map_err(|e| e.to_string())? == expect,
            format!("{w:?}: 16A^2"),
        )?;
        ensure(
            area == w.u.clone() * &w.m * &w.n * &w.v,
            format!("{w:?}: area"),
        )?;
        ensure(!is_right_triangle(&t), format!("{w:?}: right triangle"))?;
    }
    Ok(format!("{} witnesses with u <= 100", witnesses.len()))
}

fn split_round_trip() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let mut done = 0;
    while done < 10_000 {
        let v: Vec<u64> = (0..4).map(|_| rng.gen_range(1..1_000_000u64)).collect();
        let coprime = (0..4).all(|i| (i + 1..4).all(|j| gcd(&v[i], &v[j]) == 1));
        if !coprime {
            continue;
        }
        let [w, x, y, z] = [nat(v[0]), nat(v[1]), nat(v[2]), nat(v[3])];
        let m = w.clone() * &x;
        let n = y.clone() * &z;
        let u = w.clone() * &y;
        let vv = x.clone() * &z;
        let s = four_split(&m, &n, &u, &vv).map_err(|e| format!("{v:?}: {e}"))?;
        ensure(
            (s.w, s.x, s.y, s.z) == (w, x, y, z),
            format!("{v:?} not recovered"),
        )?;
        done += 1;
    }
    Ok("10000 random coprime quadruples".into())
}

fn brute_force_primitive(c_max: u64) -> BTreeSet<(u64, u64, u64)> {
    let mut out = BTreeSet::new();
    for c in 1..=c_max {
        for a in 1..c {
            let b2 = c * c - a * a;
            let b = (b2 as f64).sqrt() as u64;
            for b in b.saturating_sub(1)..=b + 1 {
                if a < b && b * b == b2 && gcd(&a, &b) == 1 {
                    out.insert((a, b, c));
                }
            }
        }
    }
    out
}

fn euclid_round_trip() -> Check {
    let c_max = nat(1000);
    let mut found = BTreeSet::new();
    for (params, t) in enumerate_primitive_triples(&c_max) {
        let back = params_from_primitive(&t).map_err(|e| format!("{t}: {e}"))?;
        ensure(
            (&back.m, &back.n) == (&params.m, &params.n),
            format!("{t}: wrong (m, n)"),
        )?;
        ensure(triple_from_params(&back) == t, format!("{t}: not rebuilt"))?;
        let legs = [t.a.clone(), t.b.clone()];
        let (lo, hi) = (legs.iter().min().unwrap(), legs.iter().max().unwrap());
        let as_u64 = |x: &Natural| x.to_u64_digits().first().copied().unwrap_or(0);
        found.insert((as_u64(lo), as_u64(hi), as_u64(&t.c)));
    }
    ensure(
        found == brute_force_primitive(1000),
        "enumeration differs from brute force",
    )?;
    let small = found.iter().filter(|t| t.2 <= 100).count();
    ensure(small == 16, format!("{small} triples with c <= 100"))?;
    Ok(format!(
        "{} primitive triples, 16 with c <= 100",
        found.len()
    ))
}

fn cli_determinism() -> Check {
    let run = |jobs: &str| {
        cli(&[
            "congruums",
            "--max",
            "100000",
            "--mode",
            "formula",
            "--jobs",
            jobs,
        ])
    };
    let one = run("1");
    let eight = run("8");
    ensure(
        one.status.success() && eight.status.success(),
        "non-zero exit",
    )?;
    ensure(!one.stdout.is_empty(), "empty output")?;
    ensure(one.stdout == eight.stdout, "outputs differ")?;
    Ok(format!("{} identical bytes", one.stdout.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (
            "formula and oracle agree up to 100000",
            formula_oracle_agreement,
        ),
        ("no square congruum up to 1000000", no_square_congruum),
        ("no square area for hypotenuse up to 10000", no_square_area),
        (
            "no fourth-power solutions for m, n up to 200",
            fourth_powers,
        ),
        (
            "descent rejects every candidate with b up to 10000",
            descent_sweep,
        ),
        (
            "quadruple identity on random parameters",
            quadruple_identity,
        ),
        (
            "square-area triangle identities for u up to 100",
            proof3_identity,
        ),
        ("four-way split round trip", split_round_trip),
        (
            "Euclid round trip and enumeration completeness",
            euclid_round_trip,
        ),
        ("CLI output independent of worker count", cli_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                println!("[FAIL] {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
