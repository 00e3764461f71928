//! Audit of the printed claims: every formula is evaluated under each
//! parameter convention and compared with a value computed by the engines.

mod claims;
mod oracle;

pub use claims::{find_claim, register_claims};
pub use oracle::{Instance, Oracle, Truth};

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::alphabet::Metric;
use crate::ambient::Budget;
use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;
pub type Params = BTreeMap<String, serde_json::Value>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Repetition,
    BlockRepetition,
    Simplex,
    MacDonald,
    ReedMuller,
    GrayImage,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Equality,
    UpperBound,
    LowerBound,
    /// The computed value must lie in a claimed closed interval.
    Interval,
    Structural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    BoundHolds,
    Mismatch,
    NotComputable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::BoundHolds => "bound_holds",
            Verdict::Mismatch => "mismatch",
            Verdict::NotComputable => "not_computable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A claimed or computed quantity.
///
/// Serialized as a JSON integer when integral, a `"p/q"` string for other
/// rationals, a two-element array for intervals and a plain string for text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimValue {
    Number(Rational),
    Interval(Rational, Rational),
    Text(String),
}

impl ClaimValue {
    pub fn int(v: i128) -> Self {
        ClaimValue::Number(Rational::from_integer(v))
    }

    pub fn text(s: impl Into<String>) -> Self {
        ClaimValue::Text(s.into())
    }
}

fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (i128, i128) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
            (q != 0).then(|| Rational::new(p, q))
        }
        None => s.trim().parse().ok().map(Rational::from_integer),
    }
}

impl fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimValue::Number(r) => f.write_str(&render_rational(r)),
            ClaimValue::Interval(a, b) => write!(f, "[{}, {}]", render_rational(a), render_rational(b)),
            ClaimValue::Text(s) => f.write_str(s),
        }
    }
}

fn value_json(v: &Rational) -> serde_json::Value {
    if v.is_integer() {
        if let Ok(i) = i64::try_from(*v.numer()) {
            return serde_json::Value::from(i);
        }
    }
    serde_json::Value::from(render_rational(v))
}

fn json_rational(v: &serde_json::Value) -> Option<Rational> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(i.into())),
        serde_json::Value::String(s) => parse_rational(s),
        _ => None,
    }
}

impl Serialize for ClaimValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClaimValue::Number(r) => value_json(r).serialize(s),
            ClaimValue::Interval(a, b) => [value_json(a), value_json(b)].serialize(s),
            ClaimValue::Text(t) => t.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for ClaimValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match &v {
            serde_json::Value::Number(_) => json_rational(&v)
                .map(ClaimValue::Number)
                .ok_or_else(|| de::Error::custom("claim values are integers or p/q rationals")),
            serde_json::Value::String(s) => {
                Ok(parse_rational(s).map_or_else(|| ClaimValue::Text(s.clone()), ClaimValue::Number))
            }
            serde_json::Value::Array(a) if a.len() == 2 => match (json_rational(&a[0]), json_rational(&a[1])) {
                (Some(lo), Some(hi)) => Ok(ClaimValue::Interval(lo, hi)),
                _ => Err(de::Error::custom("interval bounds must be rationals")),
            },
            _ => Err(de::Error::custom("unsupported claim value")),
        }
    }
}

/// A claimed value under one convention, or the reason it cannot be evaluated.
pub type Evaluation = std::result::Result<ClaimValue, String>;

/// Ground truth for one grid point.
#[derive(Debug, Clone)]
pub struct Computed {
    pub value: Truth<ClaimValue>,
    pub engine: Option<String>,
    pub notes: Vec<String>,
}

impl Computed {
    pub fn known(value: ClaimValue, engine: &str) -> Self {
        Self {
            value: Truth::Known(value),
            engine: Some(engine.to_string()),
            notes: Vec::new(),
        }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        Self {
            value: Truth::Unknown(reason.into()),
            engine: None,
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

type PointsFn = fn(&Grid) -> Vec<Params>;
type ClaimedFn = fn(&Params, &str, &Oracle) -> Result<Evaluation>;
type ComputedFn = fn(&Params, &Oracle) -> Result<Computed>;

/// One printed quantitative statement.
pub struct Claim {
    pub id: &'static str,
    /// Citation with a verbatim quote.
    pub source: &'static str,
    pub family: Family,
    pub kind: ClaimKind,
    pub metric: Option<Metric>,
    /// Names of the parameter readings under which the formula is evaluated.
    pub conventions: &'static [&'static str],
    /// The printed formula, in the claim's parameters.
    pub formula: &'static str,
    pub(crate) points: PointsFn,
    pub(crate) claimed: ClaimedFn,
    pub(crate) computed: ComputedFn,
}

impl Claim {
    pub fn points(&self, grid: &Grid) -> Vec<Params> {
        (self.points)(grid)
    }

    /// Evaluates the printed formula alone.
    pub fn evaluate(&self, params: &Params, convention: &str, oracle: &Oracle) -> Result<Evaluation> {
        (self.claimed)(params, convention, oracle)
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub claim_id: String,
    pub source: String,
    pub params: Params,
    /// Claimed value per convention; `null` when the formula cannot be evaluated.
    pub conventions: BTreeMap<String, Option<ClaimValue>>,
    pub convention_verdicts: BTreeMap<String, Verdict>,
    pub computed: Option<ClaimValue>,
    pub verdict: Verdict,
    pub engine: Option<String>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn compare(kind: ClaimKind, claimed: &ClaimValue, computed: &ClaimValue) -> Verdict {
    use ClaimValue::*;
    let holds = |ok: bool| if ok { Verdict::BoundHolds } else { Verdict::Mismatch };
    match (kind, claimed, computed) {
        (ClaimKind::Equality | ClaimKind::Structural, a, b) => {
            if a == b {
                Verdict::Match
            } else {
                Verdict::Mismatch
            }
        }
        (ClaimKind::UpperBound, Number(c), Number(v)) => holds(v <= c),
        (ClaimKind::LowerBound, Number(c), Number(v)) => holds(v >= c),
        (ClaimKind::Interval, Interval(lo, hi), Number(v)) => holds(lo <= v && v <= hi),
        _ => Verdict::Mismatch,
    }
}

/// Overall verdict: the best convention wins.
fn combine(verdicts: impl Iterator<Item = Verdict>) -> Verdict {
    verdicts.min().unwrap_or(Verdict::NotComputable)
}

/// Evaluates one claim at one grid point.
pub fn audit(claim: &Claim, params: &Params, oracle: &Oracle) -> Result<AuditEntry> {
    let start = Instant::now();
    let computed = (claim.computed)(params, oracle)?;
    let mut notes = computed.notes;
    let mut conventions = BTreeMap::new();
    let mut convention_verdicts = BTreeMap::new();
    for &conv in claim.conventions {
        let claimed = (claim.claimed)(params, conv, oracle)?;
        let verdict = match (&claimed, &computed.value) {
            (Ok(c), Truth::Known(v)) => compare(claim.kind, c, v),
            _ => Verdict::NotComputable,
        };
        if let Err(reason) = &claimed {
            notes.push(format!("{conv}: {reason}"));
        }
        conventions.insert(conv.to_string(), claimed.ok());
        convention_verdicts.insert(conv.to_string(), verdict);
    }
    let computed_value = match computed.value {
        Truth::Known(v) => Some(v),
        Truth::Unknown(reason) => {
            notes.push(format!("not computable: {reason}"));
            None
        }
    };
    Ok(AuditEntry {
        claim_id: claim.id.to_string(),
        source: claim.source.to_string(),
        params: params.clone(),
        conventions,
        verdict: combine(convention_verdicts.values().copied()),
        convention_verdicts,
        computed: computed_value,
        engine: computed.engine,
        elapsed_ms: start.elapsed().as_millis() as u64,
        notes,
    })
}

/// Audit restricted to structural claims.
pub fn structural_audit(claim: &Claim, params: &Params, oracle: &Oracle) -> Result<AuditEntry> {
    if claim.kind != ClaimKind::Structural {
        return Err(Error::Parameter(format!("{} is not a structural claim", claim.id)));
    }
    audit(claim, params, oracle)
}

/// Parameter grid of an audit run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Grid {
    /// Pair counts for repetition codes.
    pub n: Vec<usize>,
    pub k_mixed: Vec<usize>,
    pub k_beta: Vec<usize>,
    pub k_component: Vec<usize>,
    pub macdonald: Vec<(usize, usize)>,
    pub m: Vec<usize>,
    pub arm_recursive: Vec<(usize, usize)>,
    pub blocks: Vec<[usize; 7]>,
    pub mattson_trials: usize,
    pub seed: u64,
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            n: vec![1, 2, 3, 4],
            k_mixed: vec![1, 2],
            k_beta: vec![3],
            k_component: vec![1, 2, 3],
            macdonald: vec![(2, 1), (3, 1), (3, 2)],
            m: vec![3, 4],
            arm_recursive: vec![(0, 3), (1, 3), (2, 3), (1, 4), (2, 4)],
            blocks: vec![
                [1, 1, 1, 1, 1, 1, 1],
                [1, 0, 1, 0, 1, 0, 1],
                [0, 1, 0, 1, 0, 1, 0],
                [2, 0, 0, 1, 0, 1, 0],
            ],
            mattson_trials: 20,
            seed: 2024,
        }
    }
}

impl Grid {
    /// Only the repetition-code claims over `n`.
    pub fn repetition_only(n: Vec<usize>) -> Self {
        Self {
            n,
            k_mixed: vec![],
            k_beta: vec![],
            k_component: vec![],
            macdonald: vec![],
            m: vec![],
            arm_recursive: vec![],
            blocks: vec![],
            mattson_trials: 0,
            seed: 0,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// A finished audit: entries sorted by claim id, then parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<AuditEntry>,
}

impl Report {
    /// Zeroes timings so the report is byte-stable across runs.
    pub fn stabilize(&mut self) {
        for e in &mut self.entries {
            e.elapsed_ms = 0;
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == verdict).count()
    }

    /// Plain-text table, one line per entry.
    pub fn to_table(&self) -> String {
        let header = ["claim", "params", "claimed", "computed", "verdict", "engine"];
        let rows: Vec<[String; 6]> = self
            .entries
            .iter()
            .map(|e| {
                let params = e
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
                    .collect::<Vec<_>>()
                    .join(" ");
                let claimed = e
                    .conventions
                    .iter()
                    .map(|(k, v)| {
                        format!(
                            "{k}:{}",
                            v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                [
                    e.claim_id.clone(),
                    params,
                    claimed,
                    e.computed.as_ref().map_or_else(|| "-".to_string(), ToString::to_string),
                    e.verdict.to_string(),
                    e.engine.clone().unwrap_or_else(|| "-".to_string()),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for r in &rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (c, w)) in cells.iter().zip(widths).enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(c);
                } else {
                    s.push_str(c);
                    s.extend(std::iter::repeat_n(' ', w - c.chars().count() + 2));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(&header.map(str::to_string));
        out.push_str(&line(&widths.map(|w| "-".repeat(w))));
        for r in &rows {
            out.push_str(&line(r));
        }
        out.push_str(&format!(
            "\n{} entries: {} match, {} bound_holds, {} mismatch, {} not_computable\n",
            self.entries.len(),
            self.count(Verdict::Match),
            self.count(Verdict::BoundHolds),
            self.count(Verdict::Mismatch),
            self.count(Verdict::NotComputable)
        ));
        out
    }
}

/// Runs every registered claim over the grid. Engine disagreement aborts
/// the run; mismatches are ordinary entries.
pub fn run_suite(grid: &Grid, budget: &Budget) -> Result<Report> {
    run_claims(&register_claims(), grid, budget)
}

pub fn run_claims(claims: &[Claim], grid: &Grid, budget: &Budget) -> Result<Report> {
    let oracle = Oracle::new(*budget);
    let tasks: Vec<(&Claim, Params)> = claims
        .iter()
        .flat_map(|c| c.points(grid).into_iter().map(move |p| (c, p)))
        .collect();
    let mut entries = tasks
        .par_iter()
        .map(|(c, p)| audit(c, p, &oracle))
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by(|a, b| {
        a.claim_id
            .cmp(&b.claim_id)
            .then_with(|| params_key(&a.params).cmp(&params_key(&b.params)))
    });
    Ok(Report { entries })
}

/// Sort key for parameters: numbers compare numerically, then text.
fn params_key(p: &Params) -> Vec<(String, i64, String)> {
    p.iter()
        .map(|(k, v)| (k.clone(), v.as_i64().unwrap_or(i64::MIN), v.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_values_round_trip() {
        for v in [
            ClaimValue::int(3),
            ClaimValue::Number(Rational::new(3, 4)),
            ClaimValue::Interval(Rational::from_integer(2), Rational::from_integer(6)),
            ClaimValue::text("12 copies of m_1"),
        ] {
            let s = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<ClaimValue>(&s).unwrap(), v, "{s}");
        }
        assert_eq!(
            serde_json::to_string(&ClaimValue::Number(Rational::new(6, 4))).unwrap(),
            "\"3/2\""
        );
    }

    #[test]
    fn verdicts() {
        let n = |v| ClaimValue::int(v);
        assert_eq!(compare(ClaimKind::Equality, &n(2), &n(2)), Verdict::Match);
        assert_eq!(compare(ClaimKind::UpperBound, &n(16), &n(16)), Verdict::BoundHolds);
        assert_eq!(compare(ClaimKind::UpperBound, &n(15), &n(16)), Verdict::Mismatch);
        assert_eq!(compare(ClaimKind::LowerBound, &n(3), &n(4)), Verdict::BoundHolds);
        assert_eq!(combine([Verdict::Mismatch, Verdict::Match].into_iter()), Verdict::Match);
        assert_eq!(combine(std::iter::empty()), Verdict::NotComputable);
    }
}
