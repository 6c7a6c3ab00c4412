//! Text, JSON and CSV renderers for the data commands.
//!
//! JSON is emitted through a `serde_json::Value`, so object keys are sorted;
//! parsing the output and pretty-printing it again reproduces the bytes.

use liedim::classify::{BoundValue, ClassifiedModule, PqEntry};
use liedim::rootsys::DominantWeight;
use serde::Serialize;

pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("printable")
}

pub fn weight_str(w: &DominantWeight) -> String {
    w.coeffs()
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn bound_str(b: &BoundValue) -> String {
    match &b.short_bound {
        Some(s) => format!("long {} short {}", b.long_bound, s),
        None => format!("long {}", b.long_bound),
    }
}

pub fn module_text(m: &ClassifiedModule) -> String {
    format!(
        "{} ({})  dim {}  bound {}  {}",
        m.lie_type,
        weight_str(&m.weight),
        m.dim,
        bound_str(&m.bound),
        m.duality.as_str()
    )
}

pub const MODULE_CSV_HEADER: &str = "type,weight,dim,long_bound,short_bound,duality";

pub fn module_csv(m: &ClassifiedModule) -> String {
    format!(
        "{},{},{},{},{},{}",
        m.lie_type,
        weight_str(&m.weight).replace(',', ";"),
        m.dim,
        m.bound.long_bound,
        m.bound
            .short_bound
            .as_ref()
            .map(|s| s.to_string())
            .unwrap_or_default(),
        m.duality.as_str()
    )
}

pub fn pq_text(e: &PqEntry) -> String {
    let clause = e
        .clause
        .map(|c| format!("{c:?}"))
        .unwrap_or_else(|| "unmatched".into());
    let natural = if e.natural { " natural" } else { "" };
    format!(
        "{}  = {} * {}  [{}{}]",
        module_text(&e.module),
        e.p,
        e.q,
        clause,
        natural
    )
}

pub fn pq_csv(e: &PqEntry) -> String {
    format!(
        "{},{},{},{},{}",
        module_csv(&e.module),
        e.p,
        e.q,
        e.clause.map(|c| format!("{c:?}")).unwrap_or_default(),
        e.natural
    )
}

pub const PQ_CSV_HEADER: &str =
    "type,weight,dim,long_bound,short_bound,duality,p,q,clause,natural";
