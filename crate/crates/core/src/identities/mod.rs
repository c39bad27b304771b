//! The identity registry and the exact verification engine.
//!
//! Every identity in scope is one [`IdentityEntry`]: a parameter grid, a
//! domain predicate that names the excluded instances, and two or more side
//! evaluators whose exact values must agree on every accepted instance.
//! Evaluation errors never escape: a pole inside an accepted region is
//! reported as a `predicate-gap`, a distinct failure class from a genuine
//! inequality.

mod catalog;

pub use catalog::{catalog, lookup, UnknownIdError};

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::exactnum::{ConstExpr, HalfInt, PoleError};
use crate::numeric::{NumericInstance, NumericSideFn};

/// One point of a parameter grid. The primary parameter is an integer
/// (usually `n`); extras are lattice values in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub n: i64,
    pub extras: Vec<(&'static str, HalfInt)>,
}

impl Instance {
    pub fn n_only(n: i64) -> Self {
        Instance {
            n,
            extras: Vec::new(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&HalfInt> {
        self.extras
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| v)
    }

    /// Lattice value of a declared extra parameter; catalog code only asks
    /// for parameters its own spec declares.
    pub fn extra(&self, name: &str) -> &HalfInt {
        self.get(name)
            .unwrap_or_else(|| panic!("instance has no parameter {name}"))
    }

    /// Integer value of an extra declared with integer grid points.
    pub fn extra_int(&self, name: &str) -> i64 {
        let v = self.extra(name);
        let i = v
            .to_integer()
            .unwrap_or_else(|| panic!("parameter {name} = {v} is not an integer"));
        i64::try_from(&i).expect("parameter fits i64")
    }

    /// To the rational-parameter form used by the numeric backend.
    pub fn to_numeric(&self) -> NumericInstance {
        NumericInstance {
            n: self.n,
            extras: self
                .extras
                .iter()
                .map(|(k, v)| (*k, v.to_rat()))
                .collect(),
        }
    }
}

/// An extra grid dimension: a named list of lattice values.
#[derive(Debug, Clone)]
pub struct ExtraParam {
    pub name: &'static str,
    pub values: Vec<HalfInt>,
}

/// Result of a domain predicate: accepted, or a skip reason.
pub type DomainCheck = Result<(), String>;

pub type PredicateFn = fn(&Instance) -> DomainCheck;

/// Parameter space of one identity: the primary integer range, the
/// extra lattice dimensions, and the total domain predicate.
#[derive(Debug, Clone)]
pub struct ParamSpec {
    pub primary_name: &'static str,
    pub n_min: i64,
    pub n_max: i64,
    pub extras: Vec<ExtraParam>,
    pub predicate: PredicateFn,
}

fn accept_all(_: &Instance) -> DomainCheck {
    Ok(())
}

impl ParamSpec {
    pub fn n_range(n_min: i64, n_max: i64) -> Self {
        ParamSpec {
            primary_name: "n",
            n_min,
            n_max,
            extras: Vec::new(),
            predicate: accept_all,
        }
    }

    pub fn named(mut self, name: &'static str) -> Self {
        self.primary_name = name;
        self
    }

    pub fn with_extra(mut self, name: &'static str, values: Vec<HalfInt>) -> Self {
        self.extras.push(ExtraParam { name, values });
        self
    }

    pub fn with_predicate(mut self, predicate: PredicateFn) -> Self {
        self.predicate = predicate;
        self
    }
}

/// Exact evaluator for one side of an identity.
pub type SideFn = fn(&Instance) -> Result<ConstExpr, PoleError>;

/// Which backends an entry supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Numeric,
    Both,
}

/// One catalog identity.
pub struct IdentityEntry {
    pub id: &'static str,
    /// Human-readable statement of what is being checked.
    pub anchor: &'static str,
    pub params: ParamSpec,
    /// Two or more sides; the verdict is Equal when all sides agree.
    pub sides: Vec<SideFn>,
    /// True when one side is a parity-split closed form with exact-zero
    /// branches.
    pub parity_split: bool,
    /// Numeric-backend evaluators, for entries meaningful at non-lattice
    /// rational parameters.
    pub numeric_sides: Option<Vec<NumericSideFn>>,
    /// Hidden entries are reachable by explicit id only (used by the
    /// fault-injection test path), never via `all`.
    pub hidden: bool,
}

impl IdentityEntry {
    pub fn new(
        id: &'static str,
        anchor: &'static str,
        params: ParamSpec,
        sides: Vec<SideFn>,
    ) -> Self {
        assert!(sides.len() >= 2, "an identity needs at least two sides");
        IdentityEntry {
            id,
            anchor,
            params,
            sides,
            parity_split: false,
            numeric_sides: None,
            hidden: false,
        }
    }

    pub fn parity(mut self) -> Self {
        self.parity_split = true;
        self
    }

    pub fn with_numeric(mut self, sides: Vec<NumericSideFn>) -> Self {
        assert_eq!(sides.len(), self.sides.len());
        self.numeric_sides = Some(sides);
        self
    }

    pub fn hidden(mut self) -> Self {
        self.hidden = true;
        self
    }

    pub fn backend(&self) -> Backend {
        if self.numeric_sides.is_some() {
            Backend::Both
        } else {
            Backend::Exact
        }
    }

    pub fn lhs(&self, inst: &Instance) -> Result<ConstExpr, PoleError> {
        (self.sides[0])(inst)
    }

    pub fn rhs(&self, inst: &Instance) -> Result<ConstExpr, PoleError> {
        (self.sides[1])(inst)
    }
}

/// Outcome of one instance check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Equal,
    /// The sides differ; the difference is exact and nonzero.
    Unequal {
        lhs: String,
        rhs: String,
        diff: String,
    },
    /// Not checked. `predicate_gap` marks poles that surfaced inside a
    /// region the predicate accepted: a domain-modeling bug, counted as a
    /// failure.
    Skipped {
        reason: String,
        predicate_gap: bool,
    },
}

/// Verdict for one instance, with its parameters rendered in declaration
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub params: Vec<(String, String)>,
    pub outcome: Outcome,
}

impl Verdict {
    pub fn is_failure(&self) -> bool {
        matches!(
            self.outcome,
            Outcome::Unequal { .. }
                | Outcome::Skipped {
                    predicate_gap: true,
                    ..
                }
        )
    }
}

/// Aggregate verdict counts for one identity sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub equal: u64,
    pub unequal: u64,
    pub skipped: u64,
    pub predicate_gap: u64,
}

impl Counts {
    pub fn total(&self) -> u64 {
        self.equal + self.unequal + self.skipped + self.predicate_gap
    }

    pub fn add(&mut self, v: &Verdict) {
        match &v.outcome {
            Outcome::Equal => self.equal += 1,
            Outcome::Unequal { .. } => self.unequal += 1,
            Outcome::Skipped {
                predicate_gap: true,
                ..
            } => self.predicate_gap += 1,
            Outcome::Skipped { .. } => self.skipped += 1,
        }
    }
}

/// Full sweep result for one identity.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: String,
    pub anchor: String,
    pub verdicts: Vec<Verdict>,
    pub counts: Counts,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counts.unequal == 0 && self.counts.predicate_gap == 0
    }
}

/// Grid overrides supplied by the caller (CLI flags).
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub n_max: Option<i64>,
    pub extra_values: Vec<(String, Vec<HalfInt>)>,
}

fn render_params(entry: &IdentityEntry, inst: &Instance) -> Vec<(String, String)> {
    let mut out = Vec::with_capacity(1 + inst.extras.len());
    out.push((
        entry.params.primary_name.to_string(),
        inst.n.to_string(),
    ));
    for (k, v) in &inst.extras {
        out.push((k.to_string(), v.to_string()));
    }
    out
}

/// Enumerate the full grid in lexicographic parameter order.
pub fn instances(entry: &IdentityEntry, overrides: &Overrides) -> Vec<Instance> {
    let spec = &entry.params;
    let n_max = overrides.n_max.map_or(spec.n_max, |m| m.min(spec.n_max));
    let extra_values: Vec<(&'static str, Vec<HalfInt>)> = spec
        .extras
        .iter()
        .map(|e| {
            let replaced = overrides
                .extra_values
                .iter()
                .find(|(name, _)| name == e.name)
                .map(|(_, vals)| vals.clone());
            (e.name, replaced.unwrap_or_else(|| e.values.clone()))
        })
        .collect();
    let mut out = Vec::new();
    for n in spec.n_min..=n_max {
        let mut stack: Vec<Vec<(&'static str, HalfInt)>> = vec![Vec::new()];
        for (name, values) in &extra_values {
            let mut next = Vec::with_capacity(stack.len() * values.len());
            for prefix in &stack {
                for v in values {
                    let mut p = prefix.clone();
                    p.push((*name, v.clone()));
                    next.push(p);
                }
            }
            stack = next;
        }
        for extras in stack {
            out.push(Instance { n, extras });
        }
    }
    out
}

/// Check one instance: apply the predicate, evaluate every side exactly,
/// and compare. All errors become verdicts.
pub fn verify_instance(entry: &IdentityEntry, inst: &Instance) -> Verdict {
    let params = render_params(entry, inst);
    if let Err(reason) = (entry.params.predicate)(inst) {
        return Verdict {
            params,
            outcome: Outcome::Skipped {
                reason,
                predicate_gap: false,
            },
        };
    }
    let mut values = Vec::with_capacity(entry.sides.len());
    for side in &entry.sides {
        match side(inst) {
            Ok(v) => values.push(v),
            Err(e) => {
                return Verdict {
                    params,
                    outcome: Outcome::Skipped {
                        reason: format!("pole inside accepted region: {e}"),
                        predicate_gap: true,
                    },
                };
            }
        }
    }
    for v in &values[1..] {
        if v != &values[0] {
            let diff = values[0].sub(v);
            return Verdict {
                params,
                outcome: Outcome::Unequal {
                    lhs: values[0].to_string(),
                    rhs: v.to_string(),
                    diff: diff.to_string(),
                },
            };
        }
    }
    Verdict {
        params,
        outcome: Outcome::Equal,
    }
}

/// Sweep the whole grid (or the overridden sub-grid). Instances are checked
/// in parallel; verdicts keep the deterministic lexicographic order.
pub fn verify_range(entry: &IdentityEntry, overrides: &Overrides) -> VerificationReport {
    let start = Instant::now();
    let grid = instances(entry, overrides);
    let verdicts: Vec<Verdict> = grid
        .par_iter()
        .map(|inst| verify_instance(entry, inst))
        .collect();
    let mut counts = Counts::default();
    for v in &verdicts {
        counts.add(v);
    }
    VerificationReport {
        id: entry.id.to_string(),
        anchor: entry.anchor.to_string(),
        verdicts,
        counts,
        elapsed: start.elapsed(),
    }
}

/// Check the branch selected by the parity of `n` for a parity-split entry,
/// including its exact-zero assertions.
pub fn verify_parity_identity(entry: &IdentityEntry, n: i64) -> Verdict {
    assert!(
        entry.parity_split,
        "{} is not a parity-split identity",
        entry.id
    );
    verify_instance(entry, &Instance::n_only(n))
}

/// Identifiers of all public entries, in catalog order.
pub fn list_catalog() -> Vec<&'static IdentityEntry> {
    catalog().iter().filter(|e| !e.hidden).collect()
}
