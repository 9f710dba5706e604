//! The coherence condition suite.
//!
//! Each condition is a family of pairs of parallel 2-cell expressions,
//! quantified over instance data. Running a condition evaluates both sides
//! of every pair and reports the tuples at which they disagree.

mod conditions;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cell::{OneCellPath, TwoCellExpr};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::paste::Step;

pub use conditions::Tuple;

/// Identifier of one coherence condition checked by the suite.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ConditionId {
    FunctorAxiom1,
    AssocNatF,
    AssocNatObj,
    AssocTransf,
    UnitorNatFLeft,
    UnitorNatFRight,
    UnitorTransfLeft,
    UnitorTransfRight,
    TensNat1,
    TensNat2,
    TensNat3,
    TensTransf,
    ModLambda,
    ModMu,
    ModRho,
    ModPent,
    Stasheff,
    UnitPoly1,
    UnitPoly2,
    CorRId,
    CorAlphaId,
}

impl ConditionId {
    pub const ALL: [ConditionId; 21] = [
        ConditionId::FunctorAxiom1,
        ConditionId::AssocNatF,
        ConditionId::AssocNatObj,
        ConditionId::AssocTransf,
        ConditionId::UnitorNatFLeft,
        ConditionId::UnitorNatFRight,
        ConditionId::UnitorTransfLeft,
        ConditionId::UnitorTransfRight,
        ConditionId::TensNat1,
        ConditionId::TensNat2,
        ConditionId::TensNat3,
        ConditionId::TensTransf,
        ConditionId::ModLambda,
        ConditionId::ModMu,
        ConditionId::ModRho,
        ConditionId::ModPent,
        ConditionId::Stasheff,
        ConditionId::UnitPoly1,
        ConditionId::UnitPoly2,
        ConditionId::CorRId,
        ConditionId::CorAlphaId,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ConditionId::FunctorAxiom1 => "functor_axiom_1",
            ConditionId::AssocNatF => "assoc_nat_f",
            ConditionId::AssocNatObj => "assoc_nat_obj",
            ConditionId::AssocTransf => "assoc_transf",
            ConditionId::UnitorNatFLeft => "unitor_nat_f_left",
            ConditionId::UnitorNatFRight => "unitor_nat_f_right",
            ConditionId::UnitorTransfLeft => "unitor_transf_left",
            ConditionId::UnitorTransfRight => "unitor_transf_right",
            ConditionId::TensNat1 => "tens_nat_1",
            ConditionId::TensNat2 => "tens_nat_2",
            ConditionId::TensNat3 => "tens_nat_3",
            ConditionId::TensTransf => "tens_transf",
            ConditionId::ModLambda => "mod_lambda",
            ConditionId::ModMu => "mod_mu",
            ConditionId::ModRho => "mod_rho",
            ConditionId::ModPent => "mod_pent",
            ConditionId::Stasheff => "stasheff",
            ConditionId::UnitPoly1 => "unit_poly_1",
            ConditionId::UnitPoly2 => "unit_poly_2",
            ConditionId::CorRId => "cor_r_id",
            ConditionId::CorAlphaId => "cor_alpha_id",
        }
    }

    /// One-line description of the shape the condition compares.
    pub fn description(&self) -> &'static str {
        match self {
            ConditionId::FunctorAxiom1 => {
                "tensorator squares over two composable pairs compose, and \
                 tensorators with an identity pair are pure whiskers"
            }
            ConditionId::AssocNatF => {
                "the associator commutes with ambient 2-cells in each slot"
            }
            ConditionId::AssocNatObj => {
                "the associator squares for 1-cells in two slots agree with \
                 the exchange cells of the remaining tensor"
            }
            ConditionId::AssocTransf => {
                "the associator at a composite is its components joined by \
                 compatibility tensorators"
            }
            ConditionId::UnitorNatFLeft => {
                "the left unitor commutes with ambient 2-cells"
            }
            ConditionId::UnitorNatFRight => {
                "the right unitor commutes with ambient 2-cells"
            }
            ConditionId::UnitorTransfLeft => {
                "the left unitor at a composite is its components joined by a \
                 unit tensorator"
            }
            ConditionId::UnitorTransfRight => {
                "the right unitor at a composite is its components joined by \
                 a unit tensorator"
            }
            ConditionId::TensNat1 => {
                "exchange cells are natural in ambient 2-cells of the first \
                 factor"
            }
            ConditionId::TensNat2 => {
                "whisker compatibility cells are natural in ambient 2-cells"
            }
            ConditionId::TensNat3 => {
                "exchange past a composite factors through the two \
                 single-step exchanges"
            }
            ConditionId::TensTransf => {
                "whisker compatibility cells over a triple of composable \
                 1-cells satisfy the cocycle square"
            }
            ConditionId::ModLambda => {
                "the unit-on-the-far-left 2-unitor is a modification"
            }
            ConditionId::ModMu => {
                "the unit-in-the-middle 2-unitor is a modification"
            }
            ConditionId::ModRho => {
                "the unit-on-the-far-right 2-unitor is a modification"
            }
            ConditionId::ModPent => "the pentagonator is a modification",
            ConditionId::Stasheff => {
                "the five-letter associahedron equation for the pentagonator"
            }
            ConditionId::UnitPoly1 => {
                "the unit polytope with the unit in second position"
            }
            ConditionId::UnitPoly2 => {
                "the unit polytope with the unit in third position"
            }
            ConditionId::CorRId => {
                "unitors at identity 1-cells are identities"
            }
            ConditionId::CorAlphaId => {
                "associators at identity 1-cells are identities"
            }
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConditionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConditionId::ALL
            .iter()
            .find(|c| c.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown condition `{s}`")))
    }
}

/// Whether condition fillers are written as raw tensorator composites or
/// through the exchange-style compatibility operations. The two must always
/// produce identical reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum FillerStyle {
    #[default]
    Tensorator,
    Exchange,
}

/// Options controlling a suite run.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    /// Maximum generator-word length of quantified composite 1-cells.
    pub depth: usize,
    pub filler_style: FillerStyle,
    /// Stop after the first condition with failures.
    pub fail_fast: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            depth: 2,
            filler_style: FillerStyle::Tensorator,
            fail_fast: false,
        }
    }
}

/// One fully-built check: a pair of parallel pasted expressions.
#[derive(Clone, Debug)]
pub struct CheckInstance {
    pub id: ConditionId,
    pub indices: Vec<String>,
    pub lhs: TwoCellExpr,
    pub rhs: TwoCellExpr,
    pub lhs_steps: Vec<Step>,
    pub rhs_steps: Vec<Step>,
    pub src: OneCellPath,
    pub tgt: OneCellPath,
}

/// A tuple at which the two sides disagreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub indices: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one condition over its whole quantification domain.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

/// Outcome of a suite run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub model: String,
    pub depth: usize,
    pub conditions: Vec<ConditionReport>,
    pub total_checked: usize,
    pub total_failures: usize,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }

    /// Human-readable rendering; one line per condition plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.conditions {
            if c.failures.is_empty() {
                out.push_str(&format!("PASS {} ({} tuples)\n", c.condition, c.checked));
            } else {
                out.push_str(&format!(
                    "FAIL {} ({} of {} tuples)\n",
                    c.condition,
                    c.failures.len(),
                    c.checked
                ));
                for f in &c.failures {
                    out.push_str(&format!(
                        "  at [{}]: lhs = {}, rhs = {}\n",
                        f.indices.join(", "),
                        f.lhs,
                        f.rhs
                    ));
                }
            }
        }
        out.push_str(&if self.total_failures == 0 {
            format!("PASS: {} tuples across {} conditions\n", self.total_checked, self.conditions.len())
        } else {
            format!(
                "FAIL: {} of {} tuples across {} conditions\n",
                self.total_failures, self.total_checked, self.conditions.len()
            )
        });
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Build every check instance of one condition (used by diagram export and
/// tests; `run_condition` evaluates without materializing all of them).
pub fn condition_instances(
    inst: &Instance,
    id: ConditionId,
    cfg: &CheckConfig,
) -> Result<Vec<CheckInstance>> {
    conditions::tuples(inst, id, cfg)?
        .iter()
        .map(|t| conditions::build(inst, id, cfg, t))
        .collect()
}

/// Find the check instance of `id` whose report indices equal `indices`.
pub fn find_check(
    inst: &Instance,
    id: ConditionId,
    cfg: &CheckConfig,
    indices: &[String],
) -> Result<Option<CheckInstance>> {
    for t in conditions::tuples(inst, id, cfg)? {
        if t.indices() == indices {
            return Ok(Some(conditions::build(inst, id, cfg, &t)?));
        }
    }
    Ok(None)
}

/// Run a single condition over its domain, in parallel over tuples.
pub fn run_condition(
    inst: &Instance,
    id: ConditionId,
    cfg: &CheckConfig,
) -> Result<ConditionReport> {
    let tuples = conditions::tuples(inst, id, cfg)?;
    let results: Vec<Result<Option<Failure>>> = tuples
        .par_iter()
        .map(|t| {
            let ci = conditions::build(inst, id, cfg, t)?;
            if inst.equal_cells(&ci.lhs, &ci.rhs)? {
                Ok(None)
            } else {
                Ok(Some(Failure {
                    indices: ci.indices.clone(),
                    lhs: inst.values.display(&inst.evaluate(&ci.lhs)?),
                    rhs: inst.values.display(&inst.evaluate(&ci.rhs)?),
                }))
            }
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    failures.sort_by(|a, b| a.indices.cmp(&b.indices));
    Ok(ConditionReport {
        condition: id.name().to_string(),
        checked: tuples.len(),
        failures,
    })
}

/// Run a selection of conditions and aggregate a deterministic report.
pub fn run_all(inst: &Instance, selection: &[ConditionId], cfg: &CheckConfig) -> Result<Report> {
    let mut ids: Vec<ConditionId> = selection.to_vec();
    ids.sort();
    ids.dedup();
    let mut conditions_out = Vec::new();
    let mut total_checked = 0;
    let mut total_failures = 0;
    for id in ids {
        let rep = run_condition(inst, id, cfg)?;
        total_checked += rep.checked;
        total_failures += rep.failures.len();
        let failed = !rep.failures.is_empty();
        conditions_out.push(rep);
        if failed && cfg.fail_fast {
            break;
        }
    }
    Ok(Report {
        model: inst.kind.as_str().to_string(),
        depth: cfg.depth,
        conditions: conditions_out,
        total_checked,
        total_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condition_names_are_complete_and_distinct() {
        let mut names: Vec<&str> = ConditionId::ALL.iter().map(|c| c.name()).collect();
        assert_eq!(names.len(), 21);
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 21, "duplicate condition names");
        for c in ConditionId::ALL {
            assert_eq!(c.name().parse::<ConditionId>().unwrap(), c);
            assert!(!c.description().is_empty());
        }
    }
}
