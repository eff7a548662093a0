//! CSV and JSON rendering. CSV is comma separated with a header row and
//! never needs quoting; JSON is one object `{"profile", "query", "results"}`.

use kwsg_core::{Classification, LatticePoint, MaximalElement, MaximalKind, RamificationProfile};
use serde::Serialize;
use serde_json::{json, Value};

pub fn envelope(profile: &RamificationProfile, query: Value, results: Value) -> String {
    let mut text = serde_json::to_string(&json!({
        "profile": profile,
        "query": query,
        "results": results,
    }))
    .expect("json values serialize");
    text.push('\n');
    text
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}_{k}")).collect()
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn maximal_csv(n: usize, kind: MaximalKind, elems: &[MaximalElement]) -> String {
    let mut header = numbered("alpha", n);
    header.push("residue_i".into());
    header.extend(numbered("j", n));
    header.push("kind".into());
    let mut out = header.join(",");
    out.push('\n');
    for e in elems {
        out.push_str(&format!(
            "{},{},{},{}\n",
            join(e.point.iter()),
            e.branch,
            join(&e.composition),
            kind
        ));
    }
    out
}

#[derive(Serialize)]
struct MaximalRow<'a> {
    alpha: &'a LatticePoint,
    residue_i: &'a kwsg_core::Branch,
    j: &'a [i64],
    kind: MaximalKind,
}

pub fn maximal_json(kind: MaximalKind, elems: &[MaximalElement]) -> Value {
    let rows: Vec<MaximalRow> = elems
        .iter()
        .map(|e| MaximalRow {
            alpha: &e.point,
            residue_i: &e.branch,
            j: &e.composition,
            kind,
        })
        .collect();
    serde_json::to_value(rows).expect("rows serialize")
}

fn drop_flags(n: usize, c: &Classification) -> Vec<u8> {
    (0..n).map(|i| u8::from(c.drops.contains(&i))).collect()
}

pub fn classified_csv(
    n: usize,
    rows: &[(LatticePoint, Classification)],
    with_drops: bool,
) -> String {
    let mut header = numbered("alpha", n);
    if with_drops {
        header.extend(numbered("drop", n));
    }
    let mut out = header.join(",");
    out.push('\n');
    for (p, c) in rows {
        out.push_str(&join(p.iter()));
        if with_drops {
            out.push(',');
            out.push_str(&join(drop_flags(n, c)));
        }
        out.push('\n');
    }
    out
}

pub fn classified_json(rows: &[(LatticePoint, Classification)]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(p, c)| {
                json!({
                    "alpha": p,
                    "verdict": c.verdict,
                    "drops": c.drops.iter().map(|i| i + 1).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub fn classified_text(rows: &[(LatticePoint, Classification)]) -> String {
    rows.iter().map(|(p, _)| format!("{p}\n")).collect()
}
