//! JSON and TSV renderings of computation results.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use vanhom_core::complex::RateAnnotation;
use vanhom_core::puiseux::format_rational;
use vanhom_core::vanishing::{
    ExactnessReport, ExcisionReport, NodeKind, PairReport, SweepTable, VanishingBettiTable,
};

/// Degree-indexed map written with decimal-string keys in numeric order.
#[derive(Debug)]
pub struct ByDegree<'a, T>(pub &'a BTreeMap<usize, T>);

impl<T: Serialize> Serialize for ByDegree<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(&k.to_string(), v)?;
        }
        m.end()
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct BettiJson<'a> {
    velocity: String,
    betti: ByDegree<'a, usize>,
    euler: i64,
}

pub fn betti_json(t: &VanishingBettiTable, dims: &BTreeMap<usize, usize>) -> String {
    to_json(&BettiJson {
        velocity: t.velocity.to_string(),
        betti: ByDegree(dims),
        euler: t.euler,
    })
}

pub fn betti_tsv(dims: &BTreeMap<usize, usize>) -> String {
    let mut s = String::from("degree\tdimension\n");
    for (j, d) in dims {
        s.push_str(&format!("{j}\t{d}\n"));
    }
    s
}

#[derive(Serialize)]
struct RatesJson<'a> {
    name: &'a str,
    rates: BTreeMap<usize, String>,
    from_geometry: Vec<usize>,
}

pub fn rates_json(
    name: &str,
    rates: &RateAnnotation,
    from_geometry: impl Iterator<Item = usize>,
) -> String {
    to_json(&RatesJson {
        name,
        rates: rates.iter().map(|(id, r)| (id.0, r.to_string())).collect(),
        from_geometry: from_geometry.collect(),
    })
}

#[derive(Serialize)]
struct IntervalJson {
    lower: Option<String>,
    upper: Option<String>,
    dim: usize,
}

#[derive(Serialize)]
struct SweepJson<'a> {
    breakpoints: Vec<String>,
    degrees: ByDegree<'a, Vec<IntervalJson>>,
}

pub fn sweep_json(t: &SweepTable) -> String {
    let degrees: BTreeMap<usize, Vec<IntervalJson>> = t
        .degrees
        .iter()
        .map(|(&j, intervals)| {
            let list = intervals
                .iter()
                .map(|i| IntervalJson {
                    lower: i.lower.as_ref().map(format_rational),
                    upper: i.upper.as_ref().map(format_rational),
                    dim: i.dim,
                })
                .collect();
            (j, list)
        })
        .collect();
    to_json(&SweepJson {
        breakpoints: t.breakpoints.iter().map(format_rational).collect(),
        degrees: ByDegree(&degrees),
    })
}

#[derive(Serialize)]
struct PairJson<'a> {
    velocity: String,
    absolute: ByDegree<'a, usize>,
    relative: ByDegree<'a, usize>,
    boundary: ByDegree<'a, usize>,
    exact: bool,
}

pub fn pair_json(r: &PairReport) -> String {
    to_json(&PairJson {
        velocity: r.velocity.to_string(),
        absolute: ByDegree(&r.absolute),
        relative: ByDegree(&r.relative),
        boundary: ByDegree(&r.boundary),
        exact: r.exact,
    })
}

#[derive(Serialize)]
struct ExcisionJson<'a> {
    velocity: String,
    full: ByDegree<'a, usize>,
    excised: ByDegree<'a, usize>,
    equal: bool,
}

pub fn excision_json(velocity: String, r: &ExcisionReport) -> String {
    to_json(&ExcisionJson {
        velocity,
        full: ByDegree(&r.full),
        excised: ByDegree(&r.excised),
        equal: r.equal,
    })
}

#[derive(Serialize)]
struct NodeJson {
    group: &'static str,
    degree: usize,
    dim: usize,
    incoming_rank: usize,
    outgoing_rank: usize,
    exact: bool,
}

#[derive(Serialize)]
struct LesJson {
    velocity: String,
    exact: bool,
    sequence: Vec<NodeJson>,
}

pub fn les_json(velocity: String, r: &ExactnessReport) -> String {
    to_json(&LesJson {
        velocity,
        exact: r.exact,
        sequence: r
            .nodes
            .iter()
            .map(|n| NodeJson {
                group: match n.kind {
                    NodeKind::Boundary => "boundary",
                    NodeKind::Absolute => "absolute",
                    NodeKind::Relative => "relative",
                },
                degree: n.degree,
                dim: n.dim,
                incoming_rank: n.incoming_rank,
                outgoing_rank: n.outgoing_rank,
                exact: n.exact,
            })
            .collect(),
    })
}
