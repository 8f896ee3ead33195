use std::process::{Command, Output};

use ideallab::{Classifier, Element, Ideal, MonomialBounds, Property, RingHandle};

fn ideallab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ideallab")).env_remove("IDEALLAB_THREADS").args(args).output().unwrap()
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn status(v: &ideallab::Verdict) -> &'static str {
    match v.status {
        ideallab::Status::Proven => "proven",
        ideallab::Status::Refuted => "refuted",
        ideallab::Status::Unfalsified => "unfalsified",
    }
}

const PROPERTIES: [(&str, Property); 6] = [
    ("prime", Property::Prime),
    ("maximal", Property::Maximal),
    ("primary", Property::Primary),
    ("one_abs", Property::OneAbsorbingPrimary),
    ("two_abs_primary", Property::TwoAbsorbingPrimary),
    ("two_abs", Property::TwoAbsorbing),
];

/// Re-parses every row and re-decides every column through the library.
fn recheck_csv(table: &str, degree: u32) -> usize {
    let classifier = Classifier::new(MonomialBounds { degree, ..MonomialBounds::default() });
    let mut rdr = csv::Reader::from_reader(table.as_bytes());
    let header = rdr.headers().unwrap().clone();
    assert_eq!(
        header.iter().collect::<Vec<_>>(),
        ["ring", "ideal", "radical", "prime", "maximal", "primary", "one_abs", "two_abs_primary", "two_abs", "method"]
    );
    let mut rows = 0;
    for row in rdr.records() {
        let row = row.unwrap();
        rows += 1;
        let ring: RingHandle = row[0].parse().unwrap();
        let ideal = Ideal::parse(&ring, &row[1]).unwrap();
        assert_eq!(ideal.to_string(), &row[1]);
        assert_eq!(ideal.radical(), Ideal::parse(&ring, &row[2]).unwrap());
        for (k, (name, prop)) in PROPERTIES.iter().enumerate() {
            let want = if ideal.is_proper() { status(&classifier.decide(&ideal, *prop).unwrap()) } else { "refuted" };
            assert_eq!(&row[3 + k], want, "{} {} {name}", &row[0], &row[1]);
        }
    }
    rows
}

#[test]
fn scan_zmod_round_trips() {
    let out = ideallab(&["scan", "--family", "zmod", "--n-range", "2..12", "--format", "csv"]);
    assert!(out.status.success());
    let table = text(&out);
    let divisor_count: usize = (2..=12u64).map(|n| (1..=n).filter(|d| n % d == 0).count()).sum();
    assert_eq!(recheck_csv(&table, 2), divisor_count);
    for line in table.lines().filter(|l| l.starts_with("Z/12,")) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[5], cols[6], "{line}");
    }
}

#[test]
fn scan_int_marks_prime_powers() {
    let out = ideallab(&["scan", "--family", "int", "--n-range", "2..30"]);
    let table = text(&out);
    recheck_csv(&table, 2);
    let proven: Vec<String> = table
        .lines()
        .skip(1)
        .filter(|l| l.split(',').nth(6) == Some("proven"))
        .map(|l| l.split(',').nth(1).unwrap().trim_matches(|c| c == '(' || c == ')').to_string())
        .collect();
    assert_eq!(proven, ["2", "3", "4", "5", "7", "8", "9", "11", "13", "16", "17", "19", "23", "25", "27", "29"]);
}

#[test]
fn scan_prod_and_kxy_round_trip() {
    let out = ideallab(&["scan", "--family", "prod", "--left", "4", "--right", "9"]);
    assert_eq!(recheck_csv(&text(&out), 2), 9);
    let out = ideallab(&["scan", "--family", "kxy", "--degree", "2", "--format", "csv"]);
    assert!(recheck_csv(&text(&out), 2) > 4);
}

#[test]
fn classify_json_round_trips() {
    for (ring, ideal) in [("Z", "(12)"), ("Z/12", "(0)"), ("kxy", "x^2,x*y"), ("Zloc:5", "p^2"), ("ZxZ", "(4)x(9)")] {
        let out = ideallab(&["classify", "--ring", ring, "--ideal", ideal, "--format", "json"]);
        assert!(out.status.success(), "{ring} {ideal}");
        let v: serde_json::Value = serde_json::from_str(&text(&out)).unwrap();
        let r: RingHandle = v["ring"].as_str().unwrap().parse().unwrap();
        let i = Ideal::parse(&r, v["ideal"].as_str().unwrap()).unwrap();
        for (_, prop) in PROPERTIES {
            let key = match prop {
                Property::Prime => "prime",
                Property::Maximal => "maximal",
                Property::Primary => "primary",
                Property::OneAbsorbingPrimary => "one_absorbing_primary",
                Property::TwoAbsorbingPrimary => "two_absorbing_primary",
                Property::TwoAbsorbing => "two_absorbing",
            };
            let verdict = &v["properties"][key];
            if verdict["status"] == "refuted" {
                if let Some(w) = verdict["witness"]["elements"].as_array() {
                    let elems: Vec<Element> = w.iter().map(|e| r.parse_element(e.as_str().unwrap()).unwrap()).collect();
                    assert!(ideallab::classify::witness_violates(&i, prop, &elems).unwrap(), "{ring} {ideal} {key}");
                }
            }
        }
    }
    let v: serde_json::Value =
        serde_json::from_str(&text(&ideallab(&["classify", "--ring", "Z/12", "--ideal", "(0)", "--format", "json"]))).unwrap();
    assert_eq!(v["properties"]["one_absorbing_primary"]["witness"]["elements"], serde_json::json!(["2", "2", "3"]));
}

#[test]
fn verify_exit_codes() {
    let ok = ideallab(&["verify", "--theorem", "C1,EX-e2", "--max-n", "100"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(text(&ok).ends_with("2 reports, 0 with violations\n"));

    let bad = ideallab(&["verify", "--theorem", "CHAIN", "--mutate", "2abs-implies-1abs", "--max-n", "20"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(text(&bad).contains("violation: Z (12)"));

    assert_eq!(ideallab(&["verify", "--theorem", "T99"]).status.code(), Some(2));
    assert_eq!(ideallab(&["verify", "--theorem", "C1", "--max-n", "100000"]).status.code(), Some(2));

    let csv = text(&ideallab(&["verify", "--theorem", "C1", "--max-n", "1000", "--format", "csv"]));
    let row = csv.lines().nth(1).unwrap();
    assert!(row.starts_with("C1,true,999,0,"), "{row}");
}

#[test]
fn construct_commands() {
    let out = ideallab(&["construct", "--kind", "xm", "--ring", "kxy", "--elem", "x"]);
    assert!(text(&out).contains("ideal x^2,x*y\n"));
    let out = ideallab(&["construct", "--kind", "pm", "--ring", "kxy", "--prime", "x,y"]);
    assert!(text(&out).contains("ideal x^2,x*y,y^2\n"));
    let out = ideallab(&["construct", "--kind", "xm", "--ring", "Zloc:5", "--elem", "p"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("xR equals the maximal ideal"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ideallab(&["scan", "--family", "zmod"]).status.code(), Some(2));
    assert_eq!(ideallab(&["classify", "--ring", "Q", "--ideal", "(2)"]).status.code(), Some(2));
    assert_eq!(ideallab(&["classify", "--ring", "Z", "--ideal", "(1)"]).status.code(), Some(2));
}
