//! Exact covering radii and the classical bounds on them.
//!
//! Two independent engines compute `max_u min_{c in C} d(u, c)`: a direct
//! max-min sweep of the ambient space, and a coset-leader table. A third,
//! purely binary engine works on the Gray image.

mod binary;
mod bounds;
mod coset;
mod exhaustive;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Metric, MixedVector};
use crate::ambient::Budget;
use crate::codes::Code;
use crate::error::{Error, Result};

pub use binary::{binary_covering_radius, gray_image_covering_radius, BinaryCoveringResult};
pub use bounds::{
    bound_report, delsarte_bound, direct_sum, mattson_bound, mattson_combined, printed_sphere_bound, sandwich_check,
    sphere_covering_bound, weight_enumerator, BoundReport, DelsarteBound, MattsonReport, PrintedSphereBounds,
};
pub use coset::{
    coset_leader_weights, covering_radius_by_weight, covering_radius_coset, covering_radius_coset_with, CosetLabeling,
};
pub use exhaustive::covering_radius_exhaustive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Exhaustive,
    Coset,
    /// Both engines ran and agreed.
    Both,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Exhaustive => "exhaustive",
            Engine::Coset => "coset",
            Engine::Both => "both",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Engine::Exhaustive),
            "coset" => Ok(Engine::Coset),
            "both" => Ok(Engine::Both),
            other => Err(Error::Parameter(format!("unknown engine `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringResult {
    pub metric: Metric,
    pub radius: u32,
    /// A vector at distance `radius` from the code.
    pub witness: MixedVector,
    pub engine: Engine,
}

/// Distance from `v` to the nearest codeword, by enumeration of the code.
pub fn distance_to_code(code: &Code, v: &MixedVector, metric: Metric, budget: &Budget) -> Result<u32> {
    budget.check("codeword enumeration", code.size_log2(), budget.ambient_log2)?;
    let mut best = u32::MAX;
    for c in code.codewords() {
        best = best.min(v.distance(&c, metric)?);
    }
    Ok(best)
}

fn fits_exhaustive(code: &Code, budget: &Budget) -> bool {
    let amb = code.ambient().size_log2();
    amb <= budget.ambient_log2 && amb + code.size_log2() <= budget.pair_log2
}

fn fits_coset(code: &Code, budget: &Budget) -> bool {
    let amb = code.ambient().size_log2();
    amb <= budget.ambient_log2 && amb - code.size_log2() <= budget.coset_log2
}

/// Runs the requested engine. `Engine::Both` runs the two engines, fails with
/// [`Error::EngineDisagreement`] if their radii differ, and returns the
/// exhaustive witness.
pub fn covering_radius(code: &Code, metric: Metric, engine: Engine, budget: &Budget) -> Result<CoveringResult> {
    match engine {
        Engine::Exhaustive => covering_radius_exhaustive(code, metric, budget),
        Engine::Coset => covering_radius_coset(code, metric, budget),
        Engine::Both => {
            let a = covering_radius_exhaustive(code, metric, budget)?;
            let b = covering_radius_coset(code, metric, budget)?;
            cross_check(code, a, &b)
        }
    }
}

fn cross_check(code: &Code, a: CoveringResult, b: &CoveringResult) -> Result<CoveringResult> {
    if a.radius != b.radius {
        return Err(Error::EngineDisagreement {
            code: code.code_type().to_string(),
            metric: a.metric.to_string(),
            exhaustive: a.radius,
            coset: b.radius,
        });
    }
    Ok(CoveringResult {
        engine: Engine::Both,
        ..a
    })
}

/// Runs every engine the budget admits, cross-checking when both fit. When
/// the ambient space is too large to sweep but the code has few cosets, the
/// leaders are found by a search in order of weight.
pub fn covering_radius_auto(code: &Code, metric: Metric, budget: &Budget) -> Result<CoveringResult> {
    match (fits_exhaustive(code, budget), fits_coset(code, budget)) {
        (true, true) => covering_radius(code, metric, Engine::Both, budget),
        (true, false) => covering_radius_exhaustive(code, metric, budget),
        (false, true) => covering_radius_coset(code, metric, budget),
        (false, false) => match covering_radius_coset(code, metric, budget) {
            Err(e @ Error::Budget { .. }) if code.ambient().fits_word() => {
                covering_radius_by_weight(code, metric, budget).map_err(|_| e)
            }
            other => other,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::GeneratorMatrix;
    use crate::constructions::{mixed_simplex, repetition_code, SimplexParams};

    fn code(gamma: usize, delta: usize, rows: &[&str]) -> Code {
        Code::new(GeneratorMatrix::new(gamma, delta, rows.iter().map(|r| r.parse().unwrap()).collect()).unwrap())
    }

    #[test]
    fn c_alpha2_single_pair() {
        let c = Code::new(repetition_code(2, 1).unwrap());
        let budget = Budget::default();
        let lee = covering_radius(&c, Metric::Lee, Engine::Both, &budget).unwrap();
        assert_eq!(lee.radius, 2);
        assert_eq!(lee.witness.to_string(), "1 | 1");
        let euclid = covering_radius(&c, Metric::Euclidean, Engine::Both, &budget).unwrap();
        assert_eq!(euclid.radius, 2);
        let mut leaders = coset_leader_weights(&c, Metric::Lee, &budget).unwrap();
        leaders.sort();
        assert_eq!(leaders, vec![0, 1, 1, 2]);
    }

    #[test]
    fn full_code_has_radius_zero() {
        let c = Code::full(2, 2);
        let budget = Budget::default();
        for metric in Metric::ALL {
            assert_eq!(covering_radius(&c, metric, Engine::Both, &budget).unwrap().radius, 0);
        }
        assert_eq!(coset_leader_weights(&c, Metric::Lee, &budget).unwrap(), vec![0]);
    }

    #[test]
    fn witnesses_attain_the_radius() {
        let budget = Budget::default();
        let c = code(3, 3, &["101 | 123", "011 | 202"]);
        for metric in Metric::ALL {
            for engine in [Engine::Exhaustive, Engine::Coset] {
                let r = covering_radius(&c, metric, engine, &budget).unwrap();
                assert_eq!(distance_to_code(&c, &r.witness, metric, &budget).unwrap(), r.radius);
            }
        }
    }

    #[test]
    fn labelings_agree() {
        let budget = Budget::default();
        let c = code(2, 4, &["10 | 1230", "11 | 0202", "00 | 0013"]);
        for metric in Metric::ALL {
            let a = covering_radius_coset_with(&c, metric, CosetLabeling::Syndrome, &budget).unwrap();
            let b = covering_radius_coset_with(&c, metric, CosetLabeling::CanonicalRepresentative, &budget).unwrap();
            assert_eq!(a.radius, b.radius);
        }
    }

    #[test]
    fn simplex_one_both_engines_small_budget_refused() {
        let c = Code::new(mixed_simplex(SimplexParams::alpha(1)).unwrap());
        let small = Budget::with_ambient_log2(20).unwrap();
        assert!(matches!(
            covering_radius(&c, Metric::Lee, Engine::Exhaustive, &small),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            covering_radius(&c, Metric::Lee, Engine::Coset, &small),
            Err(Error::Budget { .. })
        ));
    }
}
