//! The JSON game-file format, report generation, and their error space.
//!
//! A game document lists player labels in display order and a map from
//! comma-joined label sets to worths. Omitted coalitions default to zero;
//! the grand coalition must be present. Worths may be integers, decimals
//! (converted exactly via power-of-ten denominators) or `"p/q"` strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};
use thiserror::Error;

use crate::allocation::Allocation;
use crate::analysis::{
    alpha_core_range, core_membership, AlphaRange, CoreCertificate, ALPHA_PROBE_MAX,
    ALPHA_PROBE_MIN,
};
use crate::coalition::Coalition;
use crate::dividends::harsanyi_dividends;
use crate::error::Error as SolveError;
use crate::game::{Game, MAX_PLAYERS, MIN_PLAYERS};
use crate::nucleolus::nucleolus;
use crate::numeric::{format_rat, format_sig12, parse_exact, Rat, ScalarValue};
use crate::values::{
    alpha_gately_value, dual_alpha_gately, equal_division, shapley_value, Alpha,
};
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("TooFewPlayers: a game needs at least {MIN_PLAYERS} players, got {0}")]
    TooFewPlayers(usize),
    #[error("TooManyPlayers: at most {MAX_PLAYERS} players supported, got {0}")]
    TooManyPlayers(usize),
    #[error("DuplicatePlayerLabel: player label {0:?} appears twice")]
    DuplicatePlayerLabel(String),
    #[error("UnknownLabel: {0:?} is not a declared player label")]
    UnknownLabel(String),
    #[error("DuplicateCoalition: coalition key {0:?} duplicates an earlier one")]
    DuplicateCoalition(String),
    #[error("MissingGrandCoalition: the worth of the full player set must be given")]
    MissingGrandCoalition,
    #[error("BadWorth: cannot parse {0:?} as an exact rational")]
    BadWorth(String),
    #[error("{0}")]
    Game(SolveError),
}

/// A parsed game document: the game plus its presentation metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGame {
    pub game: Game,
    pub labels: Vec<String>,
    pub name: Option<String>,
    pub description: Option<String>,
}

#[derive(Deserialize)]
struct RawDocument {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    description: Option<String>,
    players: Vec<String>,
    #[serde(deserialize_with = "worth_pairs")]
    worths: Vec<(String, serde_json::Value)>,
}

/// Collects the worth map as raw key/value pairs so duplicate keys survive
/// long enough to be rejected.
fn worth_pairs<'de, D>(deserializer: D) -> Result<Vec<(String, serde_json::Value)>, D::Error>
where
    D: Deserializer<'de>,
{
    struct PairVisitor;
    impl<'de> Visitor<'de> for PairVisitor {
        type Value = Vec<(String, serde_json::Value)>;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("a map from coalition keys to worths")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
            let mut pairs = Vec::new();
            while let Some(entry) = map.next_entry::<String, serde_json::Value>()? {
                pairs.push(entry);
            }
            Ok(pairs)
        }
    }
    deserializer.deserialize_map(PairVisitor)
}

fn worth_value(value: &serde_json::Value) -> Option<Rat> {
    match value {
        serde_json::Value::Number(n) => parse_exact(&n.to_string()),
        serde_json::Value::String(s) => parse_exact(s),
        _ => None,
    }
}

/// Parses a UTF-8 game document. Canonical player order is document order and
/// coalition keys resolve case-sensitively.
pub fn parse_game(text: &str) -> Result<ParsedGame, DocumentError> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))?;
    let n = raw.players.len();
    if n < MIN_PLAYERS {
        return Err(DocumentError::TooFewPlayers(n));
    }
    if n > MAX_PLAYERS {
        return Err(DocumentError::TooManyPlayers(n));
    }
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, label) in raw.players.iter().enumerate() {
        if index.insert(label.as_str(), i).is_some() {
            return Err(DocumentError::DuplicatePlayerLabel(label.clone()));
        }
    }

    let mut table = vec![Rat::zero(); 1 << n];
    let mut seen = vec![false; 1 << n];
    for (key, value) in &raw.worths {
        let mut coalition = Coalition::EMPTY;
        for part in key.split(',') {
            let Some(&i) = index.get(part) else {
                return Err(DocumentError::UnknownLabel(part.to_string()));
            };
            coalition = coalition.with(i);
        }
        if seen[coalition.index()] {
            return Err(DocumentError::DuplicateCoalition(key.clone()));
        }
        seen[coalition.index()] = true;
        let worth =
            worth_value(value).ok_or_else(|| DocumentError::BadWorth(value.to_string()))?;
        table[coalition.index()] = worth;
    }
    if !seen[Coalition::grand(n).index()] {
        return Err(DocumentError::MissingGrandCoalition);
    }
    if !table[0].is_zero() {
        return Err(DocumentError::Game(SolveError::NonzeroEmptyWorth));
    }
    let game = Game::new(n, table).map_err(DocumentError::Game)?;
    Ok(ParsedGame {
        game,
        labels: raw.players,
        name: raw.name,
        description: raw.description,
    })
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialise")
}

fn worth_literal(w: &Rat) -> String {
    use num_traits::One;
    if w.denom().is_one() {
        match w.numer().to_i64() {
            Some(v) => v.to_string(),
            None => json_string(&w.numer().to_string()),
        }
    } else {
        json_string(&format!("{}/{}", w.numer(), w.denom()))
    }
}

/// Writes a game back out in the document format: zero worths are omitted,
/// except the grand coalition which is always explicit. Byte-stable.
pub fn serialise_game(
    game: &Game,
    labels: &[String],
    name: Option<&str>,
    description: Option<&str>,
) -> String {
    assert_eq!(labels.len(), game.n());
    let mut out = String::from("{\n");
    if let Some(name) = name {
        let _ = writeln!(out, "  \"name\": {},", json_string(name));
    }
    if let Some(description) = description {
        let _ = writeln!(out, "  \"description\": {},", json_string(description));
    }
    let players: Vec<String> = labels.iter().map(|l| json_string(l)).collect();
    let _ = writeln!(out, "  \"players\": [{}],", players.join(", "));
    out.push_str("  \"worths\": {\n");
    let grand = game.grand();
    let mut lines = Vec::new();
    for s in Coalition::nonempty(game.n()) {
        let worth = game.worth(s);
        if worth.is_zero() && s != grand {
            continue;
        }
        let key: Vec<&str> = s.members().map(|i| labels[i].as_str()).collect();
        lines.push(format!(
            "    {}: {}",
            json_string(&key.join(",")),
            worth_literal(worth)
        ));
    }
    out.push_str(&lines.join(",\n"));
    out.push_str("\n  }\n}\n");
    out
}

/// Value methods the report generator and CLI expose.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Gately,
    Shapley,
    Nucleolus,
    Equal,
    DualGately,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Gately => "gately",
            Method::Shapley => "shapley",
            Method::Nucleolus => "nucleolus",
            Method::Equal => "equal",
            Method::DualGately => "dual-gately",
        }
    }

    pub fn parse(text: &str) -> Option<Method> {
        match text {
            "gately" => Some(Method::Gately),
            "shapley" => Some(Method::Shapley),
            "nucleolus" => Some(Method::Nucleolus),
            "equal" => Some(Method::Equal),
            "dual-gately" => Some(Method::DualGately),
            _ => None,
        }
    }
}

/// One requested analysis.
#[derive(Clone, Debug)]
pub enum Analysis {
    Classify,
    Value { method: Method, alpha: Alpha },
    Dividends,
    CoreCheck { point: Option<Allocation>, alpha: Alpha },
    AlphaRange { tol: f64, grid: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// A rendered report plus whether any requested analysis failed.
pub struct Report {
    pub body: String,
    pub errors: Vec<String>,
}

fn compute_value(game: &Game, method: Method, alpha: Alpha) -> Result<Allocation, SolveError> {
    match method {
        Method::Gately => alpha_gately_value(game, alpha),
        Method::Shapley => Ok(shapley_value(game)),
        Method::Nucleolus => nucleolus(game),
        Method::Equal => Ok(equal_division(game)),
        Method::DualGately => {
            let k = alpha.as_int().ok_or(SolveError::InvalidAlpha)?;
            dual_alpha_gately(game, k)
        }
    }
}

fn payoff_json(labels: &[String], x: &Allocation) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = match x {
        Allocation::Exact(v) => v
            .iter()
            .enumerate()
            .map(|(i, r)| {
                serde_json::json!({
                    "player": labels[i],
                    "value": format_rat(r),
                    "decimal": format_sig12(crate::numeric::to_f64(r)),
                })
            })
            .collect(),
        Allocation::Float(v) => v
            .iter()
            .enumerate()
            .map(|(i, x)| {
                serde_json::json!({
                    "player": labels[i],
                    "decimal": x,
                    "approx": true,
                })
            })
            .collect(),
    };
    serde_json::Value::Array(entries)
}

fn payoff_text(labels: &[String], x: &Allocation, indent: &str) -> String {
    let mut out = String::new();
    match x {
        Allocation::Exact(v) => {
            for (i, r) in v.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{indent}{}: {} ({})",
                    labels[i],
                    format_rat(r),
                    format_sig12(crate::numeric::to_f64(r))
                );
            }
        }
        Allocation::Float(v) => {
            for (i, x) in v.iter().enumerate() {
                let _ = writeln!(out, "{indent}{}: {} (approx)", labels[i], format_sig12(*x));
            }
        }
    }
    out
}

fn certificate_json(labels: &[String], cert: &CoreCertificate) -> serde_json::Value {
    let violations: Vec<serde_json::Value> = cert
        .violated_coalitions
        .iter()
        .map(|v| {
            let deficit = match &v.deficit {
                ScalarValue::Exact(r) => serde_json::Value::String(format_rat(r)),
                ScalarValue::Float(x) => serde_json::json!(x),
            };
            serde_json::json!({
                "coalition": v.coalition.label_string(labels),
                "deficit": deficit,
            })
        })
        .collect();
    serde_json::json!({ "member": cert.member, "violations": violations })
}

fn range_json(range: &AlphaRange) -> serde_json::Value {
    let intervals: Vec<serde_json::Value> = range
        .intervals
        .iter()
        .map(|iv| {
            serde_json::json!({
                "lo": iv.lo,
                "hi": iv.hi,
                "degenerate": iv.is_degenerate(),
                "lo_exact": iv.lo_exact,
                "hi_exact": iv.hi_exact,
            })
        })
        .collect();
    serde_json::json!({
        "probe_min": ALPHA_PROBE_MIN,
        "probe_max": ALPHA_PROBE_MAX,
        "intervals": intervals,
        "probes": range.probe_grid.len(),
    })
}

fn alpha_label(alpha: Alpha) -> String {
    match alpha {
        Alpha::Int(k) => k.to_string(),
        Alpha::Real(a) => format!("{a}"),
    }
}

/// Runs the requested analyses and renders them in request order. Failed
/// analyses are embedded in the report and echoed in `errors`.
pub fn emit_report(parsed: &ParsedGame, requested: &[Analysis], format: ReportFormat) -> Report {
    let game = &parsed.game;
    let labels = &parsed.labels;
    let mut errors = Vec::new();
    let mut json_entries = Vec::new();
    let mut text = String::new();
    if let Some(name) = &parsed.name {
        let _ = writeln!(text, "game: {name}");
    }

    for analysis in requested {
        match analysis {
            Analysis::Classify => {
                let report = game.classify();
                json_entries.push(serde_json::json!({
                    "analysis": "classify",
                    "essential": report.essential,
                    "semi_standard": report.semi_standard,
                    "semi_regular": report.semi_regular,
                    "standard": report.standard,
                    "regular": report.regular,
                    "zero_normalised": report.zero_normalised,
                    "partitionally_superadditive": report.partitionally_superadditive,
                    "individual_worths": report.individual_worths.iter().map(format_rat).collect::<Vec<_>>(),
                    "marginal_contributions": report.marginal_contributions.iter().map(format_rat).collect::<Vec<_>>(),
                }));
                let _ = writeln!(text, "classification");
                for (label, flag) in [
                    ("essential", report.essential),
                    ("semi-standard", report.semi_standard),
                    ("semi-regular", report.semi_regular),
                    ("standard", report.standard),
                    ("regular", report.regular),
                    ("zero-normalised", report.zero_normalised),
                    ("partitionally superadditive", report.partitionally_superadditive),
                ] {
                    let _ = writeln!(text, "  {label}: {flag}");
                }
                let singles: Vec<String> = report.individual_worths.iter().map(format_rat).collect();
                let marginals: Vec<String> =
                    report.marginal_contributions.iter().map(format_rat).collect();
                let _ = writeln!(text, "  individual worths: [{}]", singles.join(", "));
                let _ = writeln!(text, "  marginal contributions: [{}]", marginals.join(", "));
            }
            Analysis::Value { method, alpha } => match compute_value(game, *method, *alpha) {
                Ok(x) => {
                    json_entries.push(serde_json::json!({
                        "analysis": "value",
                        "method": method.name(),
                        "alpha": alpha_label(*alpha),
                        "status": "ok",
                        "mode": if x.is_exact() { "exact" } else { "float" },
                        "payoffs": payoff_json(labels, &x),
                    }));
                    let _ = writeln!(text, "value {} (alpha = {})", method.name(), alpha_label(*alpha));
                    text.push_str(&payoff_text(labels, &x, "  "));
                }
                Err(e) => {
                    errors.push(e.to_string());
                    json_entries.push(serde_json::json!({
                        "analysis": "value",
                        "method": method.name(),
                        "alpha": alpha_label(*alpha),
                        "status": "error",
                        "error": error_name(&e),
                        "message": e.to_string(),
                    }));
                    let _ = writeln!(text, "value {}: error {}", method.name(), e);
                }
            },
            Analysis::Dividends => {
                let d = harsanyi_dividends(game);
                let entries: Vec<serde_json::Value> = d
                    .entries()
                    .map(|(s, dv)| {
                        serde_json::json!({
                            "coalition": s.label_string(labels),
                            "dividend": format_rat(dv),
                        })
                    })
                    .collect();
                json_entries.push(serde_json::json!({
                    "analysis": "dividends",
                    "carrier_size": entries.len(),
                    "entries": entries,
                }));
                let _ = writeln!(text, "dividends ({} carrier coalitions)", d.carrier().count());
                for (s, dv) in d.entries() {
                    let _ = writeln!(text, "  {}: {}", s.label_string(labels), format_rat(dv));
                }
            }
            Analysis::CoreCheck { point, alpha } => {
                let point_result = match point {
                    Some(x) => Ok((x.clone(), "given point".to_string())),
                    None => alpha_gately_value(game, *alpha)
                        .map(|x| (x, format!("gately value at alpha = {}", alpha_label(*alpha)))),
                };
                match point_result {
                    Ok((x, origin)) => {
                        let cert = core_membership(game, &x);
                        json_entries.push(serde_json::json!({
                            "analysis": "check-core",
                            "status": "ok",
                            "point_origin": origin,
                            "point": payoff_json(labels, &x),
                            "certificate": certificate_json(labels, &cert),
                        }));
                        let _ = writeln!(text, "core check ({origin})");
                        text.push_str(&payoff_text(labels, &x, "  "));
                        let _ = writeln!(text, "  member: {}", cert.member);
                        for v in &cert.violated_coalitions {
                            let deficit = match &v.deficit {
                                ScalarValue::Exact(r) => format!(
                                    "{} ({})",
                                    format_rat(r),
                                    format_sig12(crate::numeric::to_f64(r))
                                ),
                                ScalarValue::Float(x) => format!("{} (approx)", format_sig12(*x)),
                            };
                            let _ = writeln!(
                                text,
                                "  violated {} deficit {}",
                                v.coalition.label_string(labels),
                                deficit
                            );
                        }
                    }
                    Err(e) => {
                        errors.push(e.to_string());
                        json_entries.push(serde_json::json!({
                            "analysis": "check-core",
                            "status": "error",
                            "error": error_name(&e),
                            "message": e.to_string(),
                        }));
                        let _ = writeln!(text, "core check: error {e}");
                    }
                }
            }
            Analysis::AlphaRange { tol, grid } => match alpha_core_range(game, *grid, *tol) {
                Ok(range) => {
                    json_entries.push(serde_json::json!({
                        "analysis": "alpha-range",
                        "status": "ok",
                        "tol": tol,
                        "range": range_json(&range),
                    }));
                    let _ = writeln!(
                        text,
                        "alpha range over [{ALPHA_PROBE_MIN}, {ALPHA_PROBE_MAX}] (tol = {tol})"
                    );
                    if range.intervals.is_empty() {
                        let _ = writeln!(text, "  no membership anywhere on the probe grid");
                    }
                    for iv in &range.intervals {
                        if iv.is_degenerate() {
                            let _ = writeln!(
                                text,
                                "  point {{{}}}{}",
                                iv.lo,
                                if iv.lo_exact { " (exact)" } else { " (approx)" }
                            );
                        } else {
                            let _ = writeln!(
                                text,
                                "  interval [{}, {}]{}{}",
                                iv.lo,
                                iv.hi,
                                if iv.lo_exact { "" } else { " lo~" },
                                if iv.hi_exact { "" } else { " hi~" }
                            );
                        }
                    }
                }
                Err(e) => {
                    errors.push(e.to_string());
                    json_entries.push(serde_json::json!({
                        "analysis": "alpha-range",
                        "status": "error",
                        "error": error_name(&e),
                        "message": e.to_string(),
                    }));
                    let _ = writeln!(text, "alpha range: error {e}");
                }
            },
        }
    }

    let body = match format {
        ReportFormat::Text => text,
        ReportFormat::Json => {
            let doc = serde_json::json!({
                "game": parsed.name,
                "players": labels,
                "analyses": json_entries,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("report serialises");
            s.push('\n');
            s
        }
    };
    Report { body, errors }
}

fn error_name(e: &SolveError) -> &'static str {
    match e {
        SolveError::NotStandard => "NotStandard",
        SolveError::NotSemiStandard => "NotSemiStandard",
        SolveError::NotRegular => "NotRegular",
        SolveError::NonImputation => "NonImputation",
        SolveError::BadCoalition => "BadCoalition",
        SolveError::EmptyCoalition => "EmptyCoalition",
        SolveError::PlayerCountOutOfRange(_) => "PlayerCountOutOfRange",
        SolveError::WrongPlayerCount { .. } => "WrongPlayerCount",
        SolveError::WrongTableLength { .. } => "WrongTableLength",
        SolveError::NonzeroEmptyWorth => "NonzeroEmptyWorth",
        SolveError::PlayerOutOfRange(_) => "PlayerOutOfRange",
        SolveError::WrongAllocationLength { .. } => "WrongAllocationLength",
        SolveError::EmptyImputationSet => "EmptyImputationSet",
        SolveError::NotTwoGame => "NotTwoGame",
        SolveError::InvalidAlpha => "InvalidAlpha",
        SolveError::BetaZeroDegenerate => "BetaZeroDegenerate",
        SolveError::TargetUnreachable => "TargetUnreachable",
    }
}

/// Parses a comma-separated exact payoff vector, e.g. `7/3,2/3,0`.
pub fn parse_point(text: &str, n: usize) -> Result<Allocation, DocumentError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != n {
        return Err(DocumentError::Game(SolveError::WrongAllocationLength {
            expected: n,
            got: parts.len(),
        }));
    }
    let mut payoffs = Vec::with_capacity(n);
    for p in parts {
        payoffs.push(parse_exact(p).ok_or_else(|| DocumentError::BadWorth(p.to_string()))?);
    }
    Ok(Allocation::Exact(payoffs))
}
