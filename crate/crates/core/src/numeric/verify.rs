//! Tolerance-based verification of catalog identities at rational
//! parameters, for entries that carry numeric side evaluators.

use super::bigfloat::BigFloat;
use super::context::NumCtx;
use crate::exactnum::{PoleError, Rat};
use crate::identities::{IdentityEntry, Outcome, Verdict};

/// An instance with arbitrary rational extra parameters (not restricted to
/// the half-integer lattice).
#[derive(Debug, Clone)]
pub struct NumericInstance {
    pub n: i64,
    pub extras: Vec<(&'static str, Rat)>,
}

impl NumericInstance {
    pub fn get(&self, name: &str) -> Option<&Rat> {
        self.extras
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| v)
    }

    pub fn rat(&self, name: &str) -> &Rat {
        self.get(name)
            .unwrap_or_else(|| panic!("numeric instance has no parameter {name}"))
    }

    fn render_params(&self, primary: &str) -> Vec<(String, String)> {
        let mut out = vec![(primary.to_string(), self.n.to_string())];
        for (k, v) in &self.extras {
            out.push((k.to_string(), v.to_string()));
        }
        out
    }
}

pub type NumericSideFn = fn(&NumericInstance, &NumCtx) -> Result<BigFloat, PoleError>;

/// Evaluate every numeric side of the entry at the instance and compare to
/// the configured relative tolerance; `Equal` means
/// `|lhs - rhs| <= tol * max(|lhs|, |rhs|, 1)` for every side pair.
pub fn verify_instance_numeric(
    entry: &IdentityEntry,
    inst: &NumericInstance,
    ctx: &NumCtx,
) -> Verdict {
    let params = inst.render_params(entry.params.primary_name);
    let sides = match &entry.numeric_sides {
        Some(s) => s,
        None => {
            return Verdict {
                params,
                outcome: Outcome::Skipped {
                    reason: format!("{} has no numeric backend", entry.id),
                    predicate_gap: false,
                },
            }
        }
    };
    let mut values: Vec<BigFloat> = Vec::with_capacity(sides.len());
    for side in sides {
        match side(inst, ctx) {
            Ok(v) => values.push(v),
            Err(e) => {
                return Verdict {
                    params,
                    outcome: Outcome::Skipped {
                        reason: format!("pole in numeric evaluation: {e}"),
                        predicate_gap: false,
                    },
                }
            }
        }
    }
    let digits = ctx.report_digits();
    for v in &values[1..] {
        if !ctx.within_tolerance(&values[0], v) {
            let diff = ctx.sub(&values[0], v);
            return Verdict {
                params,
                outcome: Outcome::Unequal {
                    lhs: values[0].to_decimal(digits),
                    rhs: v.to_decimal(digits),
                    diff: diff.to_decimal(12),
                },
            };
        }
    }
    Verdict {
        params,
        outcome: Outcome::Equal,
    }
}
