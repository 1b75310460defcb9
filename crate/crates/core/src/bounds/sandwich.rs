//! Cross-checks a theorem's bounds against a measured density.

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use super::{eval_bound, BoundParams, BoundValue, Side, TheoremId};
use crate::counting::ZTable;
use crate::json::{ratio, Ratio};
use crate::search::SearchResult;

/// A density measured at finite `n`, from a search or a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measured {
    pub source: String,
    pub density: BigRational,
}

impl Measured {
    pub fn new(source: impl Into<String>, density: BigRational) -> Self {
        Measured {
            source: source.into(),
            density,
        }
    }

    /// An exact extremal density. It is the true value of `d` at this `n`.
    pub fn from_search(r: &SearchResult) -> Self {
        Measured::new(
            format!("exact ex(Q_{}, {}, {})", r.n, r.target, r.forbid),
            r.density(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    Violated,
    /// Violated, but the bound only binds for large `n`.
    Advisory,
    Symbolic,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Holds => "holds",
            CheckStatus::Violated => "violated",
            CheckStatus::Advisory => "asymptotic, advisory only",
            CheckStatus::Symbolic => "symbolic",
        }
    }
}

impl Serialize for CheckStatus {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SandwichCheck {
    pub relation: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub theorem: TheoremId,
    pub subject: &'static str,
    pub params: BoundParams,
    pub bounds: Vec<BoundValue>,
    /// Sides that could not be evaluated at these parameters.
    pub unavailable: Vec<(Side, String)>,
    pub measured: Option<Measured>,
    pub checks: Vec<SandwichCheck>,
}

impl SandwichReport {
    pub fn violations(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Violated)
            .count()
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} bounds on {}\n", self.theorem, self.subject);
        for b in &self.bounds {
            let value = b
                .value
                .as_ref()
                .map_or_else(|| format!("symbolic in {}", b.unresolved.join(", ")), |v| v.to_string());
            let tag = if b.asymptotic { " (asymptotic)" } else { "" };
            out += &format!("  {:?}: {} = {}{}\n", b.side, b.expression, value, tag);
        }
        for (side, why) in &self.unavailable {
            out += &format!("  {side:?}: unavailable ({why})\n");
        }
        if let Some(m) = &self.measured {
            out += &format!("  measured: {} from {}\n", m.density, m.source);
        }
        for c in &self.checks {
            out += &format!("  [{}] {}", c.status.as_str(), c.relation);
            if let Some(note) = &c.note {
                out += &format!(" ({note})");
            }
            out += "\n";
        }
        out
    }
}

#[derive(Serialize)]
struct MeasuredJson<'a> {
    source: &'a str,
    density: Ratio,
}

#[derive(Serialize)]
struct UnavailableJson<'a> {
    side: Side,
    reason: &'a str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    theorem: TheoremId,
    subject: &'static str,
    params: &'a BoundParams,
    bounds: &'a [BoundValue],
    unavailable: Vec<UnavailableJson<'a>>,
    measured: Option<MeasuredJson<'a>>,
    checks: &'a [SandwichCheck],
}

impl Serialize for SandwichReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportJson {
            theorem: self.theorem,
            subject: self.subject,
            params: &self.params,
            bounds: &self.bounds,
            unavailable: self
                .unavailable
                .iter()
                .map(|(side, reason)| UnavailableJson { side: *side, reason })
                .collect(),
            measured: self.measured.as_ref().map(|m| MeasuredJson {
                source: &m.source,
                density: ratio(&m.density),
            }),
            checks: &self.checks,
        }
        .serialize(s)
    }
}

fn label(b: &BoundValue) -> String {
    match &b.value {
        Some(v) => v.to_string(),
        None => b.expression.clone(),
    }
}

/// Compares `small <= large`. A failure is advisory if either bound involved
/// is asymptotic.
fn compare(
    small: (&str, Option<&BigRational>),
    large: (&str, Option<&BigRational>),
    asymptotic: bool,
    unresolved: &[String],
) -> SandwichCheck {
    let relation = format!("{} <= {}", small.0, large.0);
    match (small.1, large.1) {
        (Some(a), Some(b)) if a <= b => SandwichCheck {
            relation,
            status: CheckStatus::Holds,
            note: None,
        },
        (Some(_), Some(_)) if asymptotic => SandwichCheck {
            relation,
            status: CheckStatus::Advisory,
            note: Some("the bound is asymptotic and need not bind at this n".into()),
        },
        (Some(_), Some(_)) => SandwichCheck {
            relation,
            status: CheckStatus::Violated,
            note: None,
        },
        _ => SandwichCheck {
            relation,
            status: CheckStatus::Symbolic,
            note: Some(format!("bound symbolic in {}", unresolved.join(", "))),
        },
    }
}

/// Evaluates every side of `theorem` and checks
/// `lower <= measured <= upper` where each side is available.
/// Parameter problems are recorded in the report rather than returned.
pub fn bound_sandwich_report(
    theorem: TheoremId,
    params: &BoundParams,
    z: &mut ZTable,
    measured: Option<Measured>,
) -> SandwichReport {
    let mut bounds = Vec::new();
    let mut unavailable = Vec::new();
    for &side in theorem.sides() {
        match eval_bound(theorem, side, params, z) {
            Ok(b) => bounds.push(b),
            Err(e) => unavailable.push((side, e.to_string())),
        }
    }
    let lower = bounds.iter().find(|b| b.side == Side::Lower);
    let upper = bounds.iter().find(|b| b.side == Side::Upper);
    let mut checks = Vec::new();
    if let (Some(lo), Some(up)) = (lower, upper) {
        let unresolved: Vec<String> = lo.unresolved.iter().chain(&up.unresolved).cloned().collect();
        checks.push(compare(
            (&label(lo), lo.value.as_ref()),
            (&label(up), up.value.as_ref()),
            lo.asymptotic || up.asymptotic,
            &unresolved,
        ));
    }
    if let Some(m) = &measured {
        let d = m.density.to_string();
        if let Some(lo) = lower {
            checks.push(compare(
                (&label(lo), lo.value.as_ref()),
                (&d, Some(&m.density)),
                lo.asymptotic,
                &lo.unresolved,
            ));
        }
        if let Some(up) = upper {
            checks.push(compare(
                (&d, Some(&m.density)),
                (&label(up), up.value.as_ref()),
                up.asymptotic,
                &up.unresolved,
            ));
        }
    }
    SandwichReport {
        theorem,
        subject: theorem.subject(),
        params: *params,
        bounds,
        unavailable,
        measured,
        checks,
    }
}
