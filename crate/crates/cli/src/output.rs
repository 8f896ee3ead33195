//! Text, CSV and JSON renderings. Everything is rendered into one string
//! after the work is done, so output does not depend on thread scheduling.

use clap::ValueEnum;
use serde::Serialize;

use ideallab::theorems::Construction;
use ideallab::{ClassificationReport, Ideal, Method, RingHandle, Status, VerificationReport, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// The whole ring fails every definition, all of which require a proper
/// ideal.
pub fn improper_report(ideal: &Ideal) -> ClassificationReport {
    let no = || Verdict { status: Status::Refuted, witness: None, method: Method::Oracle, bound: None };
    ClassificationReport {
        ring: ideal.ring().to_string(),
        ideal: ideal.to_string(),
        radical: ideal.radical().to_string(),
        properties: ideallab::classify::Properties {
            prime: no(),
            maximal: no(),
            primary: no(),
            one_absorbing_primary: no(),
            two_absorbing_primary: no(),
            two_absorbing: no(),
        },
        agreement: true,
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn status(v: &Verdict) -> String {
    match v.status {
        Status::Proven => "proven",
        Status::Refuted => "refuted",
        Status::Unfalsified => "unfalsified",
    }
    .into()
}

fn method(m: Method) -> String {
    serde_json::to_value(m).expect("serializable").as_str().expect("string").into()
}

pub fn reports(rows: &[ClassificationReport], format: Format) -> String {
    match format {
        Format::Json if rows.len() == 1 => json(&rows[0]),
        Format::Json => json(rows),
        Format::Csv => {
            let header =
                ["ring", "ideal", "radical", "prime", "maximal", "primary", "one_abs", "two_abs_primary", "two_abs", "method"];
            csv_table(
                &header,
                rows.iter().map(|r| {
                    let p = &r.properties;
                    vec![
                        r.ring.clone(),
                        r.ideal.clone(),
                        r.radical.clone(),
                        status(&p.prime),
                        status(&p.maximal),
                        status(&p.primary),
                        status(&p.one_absorbing_primary),
                        status(&p.two_absorbing_primary),
                        status(&p.two_absorbing),
                        method(p.one_absorbing_primary.method),
                    ]
                }),
            )
        }
        Format::Text => rows.iter().map(|r| format!("{r}\n")).collect(),
    }
}

pub fn verification(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => json(reports),
        Format::Csv => csv_table(
            &["theorem", "passed", "instances", "violations", "scope"],
            reports.iter().map(|r| {
                vec![
                    r.theorem.to_string(),
                    r.passed().to_string(),
                    r.instances_checked.to_string(),
                    r.violations.len().to_string(),
                    r.scope.clone(),
                ]
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!("{r}\n"));
                for v in &r.violations {
                    out.push_str(&format!("  violation: {} ({})\n", v.instance, v.witness.join(", ")));
                }
                for n in &r.notes {
                    out.push_str(&format!("  note: {n}\n"));
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            out.push_str(&format!("{} reports, {failed} with violations\n", reports.len()));
            out
        }
    }
}

#[derive(Serialize)]
struct ConstructionView<'a> {
    kind: ideallab::theorems::ConstructionKind,
    ring: String,
    ideal: String,
    radical: String,
    one_absorbing_primary: &'a Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    primary: Option<&'a Verdict>,
}

pub fn construction(ring: &RingHandle, c: &Construction, format: Format) -> String {
    let view = ConstructionView {
        kind: c.kind,
        ring: ring.to_string(),
        ideal: c.ideal.to_string(),
        radical: c.radical.to_string(),
        one_absorbing_primary: &c.one_absorbing_primary,
        primary: c.primary.as_ref(),
    };
    match format {
        Format::Json => json(&view),
        Format::Csv => csv_table(
            &["ring", "ideal", "radical", "one_abs", "primary"],
            [vec![
                view.ring.clone(),
                view.ideal.clone(),
                view.radical.clone(),
                view.one_absorbing_primary.to_string(),
                view.primary.map(|v| v.to_string()).unwrap_or_default(),
            ]],
        ),
        Format::Text => {
            let mut out = format!(
                "ring {}\nideal {}\nradical {}\none_absorbing_primary {} ({})\n",
                view.ring,
                view.ideal,
                view.radical,
                view.one_absorbing_primary,
                method(view.one_absorbing_primary.method)
            );
            if let Some(p) = view.primary {
                out.push_str(&format!("primary {p} ({})\n", method(p.method)));
            }
            out
        }
    }
}
