//! Text formats for trisection data and arcs, and the machine-readable
//! record types emitted by the command-line tool.
//!
//! Data files are line-oriented: `key = value` with `#` comments. The three
//! unprimed cycles and the monodromy are required; primed cycles are
//! derived when absent and checked when present. Arc files list one vertex
//! per line as two rationals (`num/den` or plain integers).

use crate::arc::{Arc, Rat};
use crate::torus::PrimitiveClass;
use crate::trisection::{Monodromy, TrisectionData};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {detail}")]
    Line { line: usize, detail: String },
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("field `{field}`: {detail}")]
    Field { field: String, detail: String },
}

fn parse_int(s: &str) -> Option<BigInt> {
    BigInt::from_str(s.trim()).ok()
}

fn parse_pair(field: &str, v: &str) -> Result<PrimitiveClass, ParseError> {
    let parts: Vec<&str> = v.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(ParseError::Field {
            field: field.into(),
            detail: "expected two integers".into(),
        });
    }
    let p = parse_int(parts[0]).ok_or_else(|| ParseError::Field {
        field: field.into(),
        detail: format!("bad integer `{}`", parts[0]),
    })?;
    let q = parse_int(parts[1]).ok_or_else(|| ParseError::Field {
        field: field.into(),
        detail: format!("bad integer `{}`", parts[1]),
    })?;
    PrimitiveClass::new(p, q).map_err(|e| ParseError::Field {
        field: field.into(),
        detail: e.to_string(),
    })
}

fn parse_sign(field: &str, s: &str) -> Result<i8, ParseError> {
    match s.trim() {
        "+1" | "+" | "1" => Ok(1),
        "-1" | "-" => Ok(-1),
        other => Err(ParseError::Field {
            field: field.into(),
            detail: format!("bad sign `{other}`"),
        }),
    }
}

/// Parse a trisection-data record.
pub fn parse_data(text: &str) -> Result<TrisectionData, ParseError> {
    let mut fields: BTreeMap<String, String> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(ParseError::Line { line: i + 1, detail: "expected `key = value`".into() });
        };
        fields.insert(k.trim().to_string(), v.trim().to_string());
    }
    let need = |k: &'static str| fields.get(k).ok_or(ParseError::Missing(k));
    let a2 = parse_pair("a2", need("a2")?)?;
    let b2 = parse_pair("b2", need("b2")?)?;
    let c2p = parse_pair("c2p", need("c2p")?)?;
    let mu_text: String = need("mu")?.clone();
    let mu_parts: Vec<&str> = mu_text.split_whitespace().collect();
    let mu = match mu_parts.as_slice() {
        ["identity"] => Monodromy::Identity,
        ["twist", sign] => {
            let d = parse_pair("d", need("d")?)?;
            Monodromy::Twist { d, sign: parse_sign("mu", sign)? }
        }
        ["twist4", sign] => {
            let d = parse_pair("d", need("d")?)?;
            Monodromy::FourthTwist { d, sign: parse_sign("mu", sign)? }
        }
        _ => {
            return Err(ParseError::Field {
                field: "mu".into(),
                detail: format!("bad monodromy `{mu_text}` (identity | twist +-1 | twist4 +-1)"),
            })
        }
    };
    let mut data = TrisectionData::from_unprimed(a2, b2, c2p, mu);
    // optional primed fields override the derived ones; validation reports
    // any inconsistency downstream
    if let Some(v) = fields.get("a2p") {
        data.a2p = parse_pair("a2p", v)?;
    }
    if let Some(v) = fields.get("b2p") {
        data.b2p = parse_pair("b2p", v)?;
    }
    if let Some(v) = fields.get("c2") {
        data.c2 = parse_pair("c2", v)?;
    }
    Ok(data)
}

/// Render a data record in the canonical field order; parsing the output
/// reproduces the record byte for byte.
pub fn render_data(data: &TrisectionData) -> String {
    let pair = |p: &PrimitiveClass| format!("{} {}", p.p(), p.q());
    let mut out = String::new();
    out.push_str(&format!("a2 = {}\n", pair(&data.a2)));
    out.push_str(&format!("b2 = {}\n", pair(&data.b2)));
    out.push_str(&format!("c2 = {}\n", pair(&data.c2)));
    out.push_str(&format!("a2p = {}\n", pair(&data.a2p)));
    out.push_str(&format!("b2p = {}\n", pair(&data.b2p)));
    out.push_str(&format!("c2p = {}\n", pair(&data.c2p)));
    match &data.mu {
        Monodromy::Identity => out.push_str("mu = identity\n"),
        Monodromy::Twist { d, sign } => {
            out.push_str(&format!("d = {}\n", pair(d)));
            out.push_str(&format!("mu = twist {}\n", if *sign > 0 { "+1" } else { "-1" }));
        }
        Monodromy::FourthTwist { d, sign } => {
            out.push_str(&format!("d = {}\n", pair(d)));
            out.push_str(&format!("mu = twist4 {}\n", if *sign > 0 { "+1" } else { "-1" }));
        }
    }
    out
}

fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_int(n)?;
        let d = parse_int(d)?;
        if d == BigInt::from(0) {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        Some(Rat::from_integer(parse_int(s)?))
    }
}

/// Parse an arc file: one `x y` vertex per line, rationals as `num/den`.
pub fn parse_arc(text: &str) -> Result<Arc, ParseError> {
    let mut vertices = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(ParseError::Line {
                line: i + 1,
                detail: "expected two coordinates".into(),
            });
        }
        let x = parse_rational(parts[0]).ok_or_else(|| ParseError::Line {
            line: i + 1,
            detail: format!("bad rational `{}`", parts[0]),
        })?;
        let y = parse_rational(parts[1]).ok_or_else(|| ParseError::Line {
            line: i + 1,
            detail: format!("bad rational `{}`", parts[1]),
        })?;
        vertices.push((x, y));
    }
    Arc::from_vertices(vertices).map_err(|e| ParseError::Field {
        field: "arc".into(),
        detail: e.to_string(),
    })
}

pub fn render_arc(arc: &Arc) -> String {
    let show = |r: &Rat| {
        if r.denom().is_one() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    };
    arc.vertices()
        .iter()
        .map(|(x, y)| format!("{} {}", show(x), show(y)))
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

// Machine-readable records. Integer-valued fields are strings so that
// arbitrary-precision values round-trip exactly.

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LensRecord {
    pub p: String,
    pub q: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ManifoldRecord {
    pub lens: Vec<LensRecord>,
    pub s1s2: usize,
    pub text: String,
}

impl ManifoldRecord {
    pub fn of(m: &crate::lens::ThreeManifold) -> Self {
        Self {
            lens: m
                .lens_summands()
                .iter()
                .map(|l| LensRecord { p: l.p().to_string(), q: l.q().to_string() })
                .collect(),
            s1s2: m.s1s2_count(),
            text: m.render(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SixTupleRecord {
    pub v_aa: ManifoldRecord,
    pub v_bb: ManifoldRecord,
    pub v_cc: ManifoldRecord,
    pub v_ba: ManifoldRecord,
    pub v_cb: ManifoldRecord,
    pub v_ac: ManifoldRecord,
}

impl SixTupleRecord {
    pub fn of(t: &crate::trisection::SixTuple) -> Self {
        Self {
            v_aa: ManifoldRecord::of(&t.v_aa),
            v_bb: ManifoldRecord::of(&t.v_bb),
            v_cc: ManifoldRecord::of(&t.v_cc),
            v_ba: ManifoldRecord::of(&t.v_ba),
            v_cb: ManifoldRecord::of(&t.v_cb),
            v_ac: ManifoldRecord::of(&t.v_ac),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EventRecord {
    pub circle: String,
    pub direction: String,
    pub edge: Option<String>,
    pub winding: i64,
    pub segment: usize,
}

pub fn event_records(word: &crate::arc::CrossingWord) -> Vec<EventRecord> {
    word.events
        .iter()
        .map(|e| EventRecord {
            circle: e.circle.to_string(),
            direction: if e.inward { "in".into() } else { "out".into() },
            edge: e
                .c2_edge
                .map(|x| x.to_string())
                .or_else(|| e.c1_edge.map(|x| x.to_string())),
            winding: e.winding,
            segment: e.segment,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trisection::CaseASubcase;

    #[test]
    fn data_round_trip() {
        let data = TrisectionData::case_a(1, CaseASubcase::Main { q: BigInt::from(4) }).unwrap();
        let text = render_data(&data);
        let parsed = parse_data(&text).unwrap();
        assert_eq!(parsed, data);
        assert_eq!(render_data(&parsed), text);
    }

    #[test]
    fn data_derives_primes() {
        let text = "a2 = 1 0\nb2 = 0 1\nc2p = -1 3\nd = -1 1\nmu = twist +1\n";
        let data = parse_data(text).unwrap();
        assert!(data.is_valid());
        assert_eq!(data.c2, PrimitiveClass::new(1, 1).unwrap());
    }

    #[test]
    fn arc_round_trip() {
        let arc = crate::arc::standard_arc(crate::arc::StandardArc::Ac);
        let text = render_arc(&arc);
        let parsed = parse_arc(&text).unwrap();
        assert_eq!(parsed.vertices(), arc.vertices());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_data("a2 = 1\n").is_err());
        assert!(parse_data("a2 = 1 0\nb2 = 0 1\nc2p = -1 3\nmu = twist +1\n").is_err());
        assert!(parse_arc("1 2 3\n").is_err());
    }
}
