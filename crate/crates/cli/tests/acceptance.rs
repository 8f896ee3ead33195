//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Expected values are recomputed here from integer arithmetic wherever the
//! criterion allows it, rather than read back from the library.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

use ideallab::transfer::{check_hom_hypotheses, RingHom};
use ideallab::{verify_theorem, Element, Ideal, Property, RingHandle, Scope, TheoremId};

type Outcome = Result<(), String>;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ideallab"));
    c.env_remove("IDEALLAB_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn ideallab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn ok_stdout(args: &[&str]) -> Result<String, String> {
    let out = run(args);
    if !out.status.success() {
        return Err(format!("`{}` exited {:?}: {}", args.join(" "), out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(stdout(&out))
}

fn json(args: &[&str]) -> Result<Value, String> {
    serde_json::from_str(&ok_stdout(args)?).map_err(|e| format!("bad JSON: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n % d == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().map(|x| x.as_str().unwrap_or_default().to_string()).collect()).unwrap_or_default()
}

fn verify_clean(ids: &[TheoremId], scope: &Scope) -> Outcome {
    for &id in ids {
        let r = verify_theorem(id, scope).map_err(|e| format!("{id}: {e}"))?;
        ensure(r.instances_checked > 0, || format!("{id}: no instances"))?;
        ensure(r.passed(), || format!("{id}: {} violations, first {:?}", r.violations.len(), r.violations.first()))?;
    }
    Ok(())
}

/// Generator `d` of an ideal printed as `(d)` in `Z/n`, with `(0)` read as `n`.
fn zmod_generator(s: &str, n: u64) -> u64 {
    let d: u64 = s.trim_start_matches('(').trim_end_matches(')').parse().expect("principal ideal");
    if d == 0 {
        n
    } else {
        d
    }
}

fn integer_example() -> Outcome {
    let start = Instant::now();
    let v = json(&["classify", "--ring", "Z", "--ideal", "(12)", "--format", "json"])?;
    within(Duration::from_secs(1), start)?;
    let p = &v["properties"];
    ensure(v["radical"] == "(6)", || format!("radical {}", v["radical"]))?;
    ensure(p["primary"]["status"] == "refuted", || "primary not refuted".into())?;
    ensure(p["two_absorbing_primary"]["status"] == "proven", || "2-absorbing primary not proven".into())?;
    let one = &p["one_absorbing_primary"];
    ensure(one["status"] == "refuted", || "1-absorbing primary not refuted".into())?;

    // The emitted witness must violate the definition in plain integers.
    let w: Vec<i64> = strings(&one["witness"]["elements"]).iter().map(|s| s.parse().unwrap()).collect();
    let [a, b, c] = w[..] else { return Err(format!("witness {w:?}")) };
    let nonunit = |x: i64| x.abs() != 1;
    ensure(
        [a, b, c].into_iter().all(nonunit) && (a * b * c) % 12 == 0 && (a * b) % 12 != 0 && c % 6 != 0,
        || format!("witness {w:?} does not violate"),
    )?;
    // Membership depends only on residues and every residue has a nonunit
    // lift, so the least violating residue triple is found mod 12.
    let least = (0..12i64)
        .flat_map(|r| (0..12).flat_map(move |s| (0..12).map(move |t| (r, s, t))))
        .find(|&(r, s, t)| (r * s * t) % 12 == 0 && (r * s) % 12 != 0 && t % 6 != 0);
    let residues = strings(&one["witness"]["residues"]);
    ensure(least.map(|(r, s, t)| vec![r.to_string(), s.to_string(), t.to_string()]) == Some(residues.clone()), || {
        format!("residues {residues:?}, least violating triple {least:?}")
    })?;

    let i = Ideal::modulus(&RingHandle::Int, 12).map_err(|e| e.to_string())?;
    let hand = [2, 2, 3].map(Element::int);
    let lib = ideallab::classify::witness_violates(&i, Property::OneAbsorbingPrimary, &hand).map_err(|e| e.to_string())?;
    ensure(lib && (2 * 2 * 3) % 12 == 0 && 4 % 12 != 0 && 3 % 6 != 0, || "(2, 2, 3) does not validate".into())
}

fn principal_ideal_domain() -> Outcome {
    let start = Instant::now();
    let v = json(&["verify", "--theorem", "C1", "--max-n", "1000", "--format", "json"])?;
    let r = &v[0];
    ensure(r["instances_checked"] == 999, || format!("instances {}", r["instances_checked"]))?;
    ensure(r["violations"].as_array().is_some_and(|a| a.is_empty()), || format!("violations {}", r["violations"]))?;

    let table = ok_stdout(&["scan", "--family", "int", "--n-range", "2..1000"])?;
    let mut rows = csv::Reader::from_reader(table.as_bytes());
    let mut seen = 0;
    for row in rows.records() {
        let row = row.map_err(|e| e.to_string())?;
        let n: u64 = row[1].trim_start_matches('(').trim_end_matches(')').parse().map_err(|_| row[1].to_string())?;
        seen += 1;
        let want = if is_prime_power(n) { "proven" } else { "refuted" };
        ensure(&row[6] == want, || format!("{n}Z: one_abs {}, expected {want}", &row[6]))?;
    }
    ensure(seen == 999, || format!("{seen} scan rows"))?;
    within(Duration::from_secs(60), start)
}

fn monomial_example() -> Outcome {
    let start = Instant::now();
    let v = json(&["classify", "--ring", "kxy", "--ideal", "x^2,x*y", "--degree", "4", "--format", "json"])?;
    within(Duration::from_secs(10), start)?;
    let p = &v["properties"];
    ensure(v["radical"] == "x", || format!("radical {}", v["radical"]))?;
    ensure(p["primary"]["status"] == "refuted", || "primary not refuted".into())?;
    ensure(strings(&p["primary"]["witness"]["elements"]) == ["x", "y"], || "primary witness is not (x, y)".into())?;
    let one = &p["one_absorbing_primary"];
    ensure(one["status"] == "proven" && one["method"] == "certificate", || format!("1-absorbing primary {one}"))?;

    // Monomial search at degree 4: x^i y^j lies in (x^2, xy) iff i >= 2, or
    // i >= 1 and j >= 1; it lies in the radical (x) iff i >= 1.
    let in_i = |(i, j): (u32, u32)| i >= 2 || (i >= 1 && j >= 1);
    let in_rad = |(i, _): (u32, u32)| i >= 1;
    let monomials: Vec<(u32, u32)> =
        (0..=4).flat_map(|i| (0..=4 - i).map(move |j| (i, j))).filter(|&(i, j)| i + j >= 1).collect();
    let mul = |a: (u32, u32), b: (u32, u32)| (a.0 + b.0, a.1 + b.1);
    for &a in &monomials {
        for &b in &monomials {
            for &c in &monomials {
                let bad = in_i(mul(mul(a, b), c)) && !in_i(mul(a, b)) && !in_rad(c);
                ensure(!bad, || format!("monomial triple {a:?} {b:?} {c:?} violates"))?;
            }
        }
    }
    let (x, y) = ((1, 0), (0, 1));
    ensure(in_i(mul(x, y)) && !in_i(x) && !in_rad(y), || "(x, y) does not refute primariness".into())?;
    verify_clean(&[TheoremId::MonomialExample], &Scope::default())
}

fn zmod_and_products() -> Outcome {
    let table = ok_stdout(&["scan", "--family", "zmod", "--n-range", "2..100"])?;
    for row in csv::Reader::from_reader(table.as_bytes()).records() {
        let row = row.map_err(|e| e.to_string())?;
        let n: u64 = row[0].trim_start_matches("Z/").parse().map_err(|_| row[0].to_string())?;
        let d = zmod_generator(&row[1], n);
        let want = if d > 1 && is_prime_power(d) { "proven" } else { "refuted" };
        ensure(&row[6] == &row[5] && &row[6] == want, || format!("Z/{n} ({d}): primary {}, one_abs {}", &row[5], &row[6]))?;
    }
    for n in 2..=12u64 {
        for m in 2..=12u64 {
            let table = ok_stdout(&["scan", "--family", "prod", "--left", &n.to_string(), "--right", &m.to_string()])?;
            let rows: Vec<_> = csv::Reader::from_reader(table.as_bytes()).records().collect::<Result<_, _>>().map_err(|e| e.to_string())?;
            let divisors = |k: u64| (1..=k).filter(|d| k % d == 0).count();
            ensure(rows.len() == divisors(n) * divisors(m), || format!("Z/{n}xZ/{m}: {} rows", rows.len()))?;
            for row in rows {
                let (l, r) = row[1].split_once('x').ok_or_else(|| row[1].to_string())?;
                let (a, b) = (zmod_generator(l, n), zmod_generator(r, m));
                let form = (a == 1 && b > 1 && is_prime_power(b)) || (b == 1 && a > 1 && is_prime_power(a));
                let want = if form { "proven" } else { "refuted" };
                ensure(&row[6] == want, || format!("Z/{n}xZ/{m} {}: one_abs {}, expected {want}", &row[1], &row[6]))?;
            }
        }
    }
    verify_clean(&[TheoremId::NonLocalCollapse, TheoremId::ProductRings], &Scope::default())
}

fn product_example() -> Outcome {
    for (ideal, want) in [("(4)x(1)", "proven"), ("(1)x(9)", "proven"), ("(4)x(9)", "refuted")] {
        let v = json(&["classify", "--ring", "ZxZ", "--ideal", ideal, "--format", "json"])?;
        let got = &v["properties"]["one_absorbing_primary"]["status"];
        ensure(got == want, || format!("{ideal}: {got}, expected {want}"))?;
    }
    verify_clean(&[TheoremId::ProductExample], &Scope::default())
}

fn general_suites() -> Outcome {
    let scope = Scope { prod_max: 10, ..Scope::default() };
    verify_clean(
        &[
            TheoremId::RadicalIsPrime,
            TheoremId::ColonIsPrimary,
            TheoremId::SameRadicalIntersections,
            TheoremId::IdealAbsorption,
            TheoremId::IdealTriples,
        ],
        &scope,
    )
}

fn transfer_suites() -> Outcome {
    verify_clean(&[TheoremId::Homomorphisms, TheoremId::QuotientRings, TheoremId::Localizations], &Scope::default())?;
    let f = RingHom::quotient(&RingHandle::Int, &RingHandle::ZMod(9)).map_err(|e| e.to_string())?;
    let h = check_hom_hypotheses(&f);
    ensure(!h.nonunit_preserving && h.witness == Some(Element::int(2)), || format!("Z -> Z/9 witness {:?}", h.witness))?;
    // 2 is a nonunit of Z and 2 * 5 = 10 = 1 mod 9.
    ensure((2 * 5) % 9 == 1, || "2 is not a unit mod 9".into())
}

fn mutation() -> Outcome {
    let out = run(&["verify", "--theorem", "CHAIN", "--mutate", "2abs-implies-1abs", "--max-n", "20"]);
    ensure(out.status.code() == Some(1), || format!("exit {:?}", out.status.code()))?;
    let text = stdout(&out);
    ensure(text.lines().any(|l| l.contains("violation: Z (12)")), || "no violation at modulus 12".into())?;
    // 2-absorbing primary holds for 12Z; the triple (2, 2, 3) breaks 1-absorbing primary.
    ensure((2 * 2 * 3) % 12 == 0 && (2 * 2) % 12 != 0 && 3 % 6 != 0, || "hand triple".into())
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 3] = [
        &["verify", "--theorem", "all"],
        &["scan", "--family", "zmod", "--n-range", "2..60"],
        &["scan", "--family", "kxy", "--degree", "2", "--format", "json"],
    ];
    for args in commands {
        let outputs: Vec<Output> = ["1", "8"]
            .iter()
            .map(|t| bin().arg("--threads").arg(t).args(args).output().expect("spawn ideallab"))
            .collect();
        ensure(outputs[0].status.success(), || format!("`{}` failed", args.join(" ")))?;
        ensure(outputs[0].stdout == outputs[1].stdout && !outputs[0].stdout.is_empty(), || {
            format!("`{}` differs between 1 and 8 threads", args.join(" "))
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("12Z in Z reproduced", integer_example),
        ("nZ for n <= 1000: oracle, fast path and prime powers agree", principal_ideal_domain),
        ("x^2,xy in kxy reproduced", monomial_example),
        ("Z/n (n <= 100) and Z/n x Z/m (n, m <= 12): 1-absorbing primary sets", zmod_and_products),
        ("4Z x Z, Z x 9Z and 4Z x 9Z", product_example),
        ("general suites over Z/n (n <= 100) and products (<= 10)", general_suites),
        ("transfer suites and the Z -> Z/9 hypothesis witness", transfer_suites),
        ("mutated chain fails at 12 with exit 1", mutation),
        ("byte-identical output at 1 and 8 threads", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {} PASS {name} ({ms} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({ms} ms): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
