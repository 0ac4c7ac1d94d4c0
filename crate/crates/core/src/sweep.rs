//! Runs every certificate of the crate on one instance and records the outcome of each.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::PosetIdeal;
use crate::letterplace::{ideal_of, linear_quotients_sets};
use crate::linalg::Field;
use crate::oracle::{koszul_betti, taylor_betti};
use crate::powers::{bounded_power, equivalence_report, lift, regular_sequence_certificate, verify_power_resolution};
use crate::resolution::{build_by_mapping_cone, build_resolution, verify_exact, verify_split_additivity};
use crate::shift::{hs_linearity_report, shift_family};
use crate::simplicial::{certify_homology_type, classify, delta_of, HomologyType, Shape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail {
        reason: String,
    },
    /// A guard tripped; nothing was decided.
    Skipped {
        guard: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    #[serde(flatten)]
    pub outcome: Outcome,
}

/// Ordered list of checks for one instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub checks: Vec<Check>,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| matches!(c.outcome, Outcome::Fail { .. }))
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    fn record(&mut self, name: &'static str, run: impl FnOnce() -> Result<bool>) {
        let outcome = match run() {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Fail {
                reason: "condition does not hold".into(),
            },
            Err(Error::Guard { name, .. }) => Outcome::Skipped { guard: name.into() },
            Err(e) => Outcome::Fail { reason: e.to_string() },
        };
        self.checks.push(Check { name, outcome });
    }
}

/// Which groups of checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub resolution: bool,
    pub shifts: bool,
    pub powers: bool,
    pub simplicial: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            resolution: true,
            shifts: true,
            powers: true,
            simplicial: true,
        }
    }
}

/// Generator cap for the Taylor comparison inside a sweep; the Taylor strands
/// grow like `2^|G|` and the Koszul comparison covers larger ideals.
pub const SWEEP_TAYLOR_GENERATORS: usize = 12;

pub fn sweep(ideal: &PosetIdeal, field: Field, guards: &Guards, options: SweepOptions) -> SweepReport {
    let mut r = SweepReport::default();
    let mut taylor_guards = guards.clone();
    taylor_guards
        .set(
            "taylor-generators",
            guards.limit("taylor-generators").min(SWEEP_TAYLOR_GENERATORS),
        )
        .expect("known guard");
    let (_, l) = ideal_of(ideal);
    if options.resolution {
        r.record("linear-quotients", || {
            Ok(linear_quotients_sets(ideal)?.len() == ideal.len())
        });
        r.record("weakly-polymatroidal", || l.is_weakly_polymatroidal());
        let rz = build_resolution(ideal, guards);
        r.record("complex", || rz.as_ref().map(|_| true).map_err(clone_err));
        if let Ok(rz) = &rz {
            r.record("strand-exactness", || {
                Ok(!verify_exact(rz, &l, field, guards)?.strands.is_empty())
            });
            r.record("mapping-cone", || Ok(&build_by_mapping_cone(ideal, guards)? == rz));
            r.record("taylor-betti", || {
                Ok(taylor_betti(&l, field, &taylor_guards)?
                    .diff(&rz.betti_table())
                    .is_empty())
            });
            r.record("koszul-betti", || {
                Ok(koszul_betti(&l, field, guards)?.diff(&rz.betti_table()).is_empty())
            });
        }
        r.record("split-additivity", || {
            if ideal.alphabet().set(0).len() < 2 {
                return Ok(true);
            }
            verify_split_additivity(ideal, field, guards).map(|_| true)
        });
    }
    if options.shifts {
        r.record("shift-ideals", || {
            let fam = shift_family(ideal, None, guards)?;
            hs_linearity_report(&fam, field, guards)?;
            Ok(true)
        });
    }
    if options.powers {
        for k in [2usize, 3] {
            r.record(if k == 2 { "bounded-power-2" } else { "bounded-power-3" }, || {
                let bp = bounded_power(ideal, k, guards)?;
                let full = l.power(k);
                Ok(bp.is_weakly_polymatroidal()? && bp.gens().iter().all(|u| full.contains(u)))
            });
        }
        r.record("power-equivalences", || {
            equivalence_report(ideal, 2, guards).map(|_| true)
        });
        r.record("regular-sequence", || {
            let ctx = lift(ideal, 2, guards)?;
            Ok(regular_sequence_certificate(&ctx, guards)?.passed)
        });
        if ideal.properties(guards).is_ok_and(|p| p.unique_maximal.is_some()) && is_full(ideal, guards) {
            r.record("power-resolution", || {
                verify_power_resolution(ideal.space(), 2, field, guards).map(|_| true)
            });
        }
    }
    if options.simplicial {
        r.record("delta", || {
            let d = delta_of(ideal, guards)?;
            let c = &d.complex;
            let vertices = c.vertices().len() as isize;
            Ok(c.is_pure()
                && c.facets().len() == ideal.len()
                && c.dim() == Some(vertices - ideal.m() as isize - 1)
                && c.ridge_degrees().iter().all(|&(_, n)| n <= 2))
        });
        r.record("classification", || {
            let report = classify(ideal, guards)?;
            let cert = certify_homology_type(&delta_of(ideal, guards)?.complex, field, guards)?;
            Ok(matches!(
                (report.verdict, cert.kind),
                (Shape::Sphere, HomologyType::Sphere) | (Shape::Ball, HomologyType::Ball)
            ))
        });
    }
    r
}

fn is_full(ideal: &PosetIdeal, guards: &Guards) -> bool {
    ideal
        .space()
        .enumerate(guards)
        .is_ok_and(|all| all.len() == ideal.len())
}

fn clone_err(e: &Error) -> Error {
    match e {
        Error::Guard { name, limit, value } => Error::Guard {
            name,
            limit: *limit,
            value: *value,
        },
        other => Error::Verification(other.to_string()),
    }
}
