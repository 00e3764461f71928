use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::alphabet::{Metric, MixedVector};
use crate::ambient::Budget;
use crate::codes::{Code, GeneratorMatrix};
use crate::constructions::{
    arm_first_order, arm_recursive, binary_simplex, block_repetition, macdonald_matrix, mixed_simplex,
    quaternary_simplex, repetition_code, ArmLayout, BlockRepetitionSpec, BlockSpan, ComponentMatrix, MacDonaldParams,
    SimplexParams, SimplexVariant,
};
use crate::covering::{covering_radius_auto, CoveringResult};
use crate::error::{Error, Result};

/// A code the audit knows how to build from grid parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Instance {
    Repetition {
        i: u8,
        n: usize,
    },
    Block {
        blocks: [usize; 7],
        span: BlockSpan,
    },
    Simplex {
        k: usize,
        variant: SimplexVariant,
    },
    MacDonald {
        k: usize,
        u: usize,
        variant: SimplexVariant,
    },
    ArmFirst {
        m: usize,
        layout: ArmLayout,
    },
    ArmRecursive {
        r: usize,
        m: usize,
    },
    /// Binary (`quaternary = false`) or quaternary simplex component on its own.
    SimplexComponent {
        k: usize,
        variant: SimplexVariant,
        quaternary: bool,
    },
    /// Component of a MacDonald code; `k == u` gives the empty code.
    MacDonaldComponent {
        k: usize,
        u: usize,
        variant: SimplexVariant,
        quaternary: bool,
    },
    Dual(Box<Instance>),
}

impl Instance {
    pub fn dual(self) -> Self {
        Instance::Dual(Box::new(self))
    }

    pub fn build(&self, budget: &Budget) -> Result<Code> {
        let g = match self {
            Instance::Repetition { i, n } => repetition_code(*i, *n)?,
            Instance::Block { blocks, span } => block_repetition(&BlockRepetitionSpec::new(*blocks)?, *span),
            Instance::Simplex { k, variant } => mixed_simplex(SimplexParams {
                k: *k,
                variant: *variant,
                force: false,
            })?,
            Instance::MacDonald { k, u, variant } => macdonald_matrix(MacDonaldParams {
                k: *k,
                u: *u,
                variant: *variant,
            })?,
            Instance::ArmFirst { m, layout } => arm_first_order(*m, *layout)?,
            Instance::ArmRecursive { r, m } => arm_recursive(*r, *m)?,
            Instance::SimplexComponent { k, variant, quaternary } => {
                let c = if *quaternary {
                    quaternary_simplex(*k, *variant)?
                } else {
                    binary_simplex(*k, *variant)?
                };
                component_matrix(&c)?
            }
            Instance::MacDonaldComponent {
                k,
                u,
                variant,
                quaternary,
            } => {
                let simplex = |k| {
                    if *quaternary {
                        quaternary_simplex(k, *variant)
                    } else {
                        binary_simplex(k, *variant)
                    }
                };
                let c = simplex(*k)?.delete_padded_columns(&simplex(*u)?)?;
                component_matrix(&c)?
            }
            Instance::Dual(inner) => return inner.build(budget)?.dual(budget),
        };
        Ok(Code::new(g))
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Repetition { i, n } => write!(f, "C_alpha{i} (n={n})"),
            Instance::Block { blocks, span } => write!(f, "BRep {blocks:?} ({span})"),
            Instance::Simplex { k, variant } => write!(f, "S_{k}^{variant}"),
            Instance::MacDonald { k, u, variant } => write!(f, "M_{k},{u}^{variant}"),
            Instance::ArmFirst { m, layout } => write!(f, "ARM(1,{}) {layout}", m - 1),
            Instance::ArmRecursive { r, m } => write!(f, "ARM({r},{m})"),
            Instance::SimplexComponent { k, variant, quaternary } => {
                write!(f, "S_{},{k}^{variant}", if *quaternary { 4 } else { 2 })
            }
            Instance::MacDonaldComponent {
                k,
                u,
                variant,
                quaternary,
            } => {
                write!(f, "M_{k},{u}^{variant},{}", if *quaternary { 4 } else { 2 })
            }
            Instance::Dual(inner) => write!(f, "dual of {inner}"),
        }
    }
}

/// A component matrix as a code with only binary or only quaternary coordinates.
fn component_matrix(c: &ComponentMatrix) -> Result<GeneratorMatrix> {
    let len = c.len();
    let rows = c
        .rows
        .iter()
        .map(|r| {
            if c.modulus == 4 {
                MixedVector::new(&[], r)
            } else {
                MixedVector::new(r, &[])
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if c.modulus == 4 {
        GeneratorMatrix::new(0, len, rows)
    } else {
        GeneratorMatrix::new(len, 0, rows)
    }
}

/// Ground truth that may lie beyond the budget.
#[derive(Debug, Clone)]
pub enum Truth<T> {
    Known(T),
    Unknown(String),
}

impl<T> Truth<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Truth<U> {
        match self {
            Truth::Known(t) => Truth::Known(f(t)),
            Truth::Unknown(s) => Truth::Unknown(s),
        }
    }
}

/// Converts budget errors into [`Truth::Unknown`] and keeps every other error.
pub fn within_budget<T>(r: Result<T>) -> Result<Truth<T>> {
    match r {
        Ok(t) => Ok(Truth::Known(t)),
        Err(e @ Error::Budget { .. }) => Ok(Truth::Unknown(e.to_string())),
        Err(e) => Err(e),
    }
}

/// Shared cache of built codes and covering radii for one audit run.
pub struct Oracle {
    pub budget: Budget,
    codes: Mutex<HashMap<Instance, Arc<Code>>>,
    radii: Mutex<HashMap<(Instance, Metric), Truth<CoveringResult>>>,
}

impl Oracle {
    pub fn new(budget: Budget) -> Self {
        Self {
            budget,
            codes: Mutex::new(HashMap::new()),
            radii: Mutex::new(HashMap::new()),
        }
    }

    pub fn code(&self, inst: &Instance) -> Result<Arc<Code>> {
        if let Some(c) = self.codes.lock().expect("cache lock").get(inst) {
            return Ok(c.clone());
        }
        let c = Arc::new(inst.build(&self.budget)?);
        self.codes.lock().expect("cache lock").insert(inst.clone(), c.clone());
        Ok(c)
    }

    /// Covering radius by every engine the budget admits. Engine disagreement
    /// is returned as an error.
    pub fn radius(&self, inst: &Instance, metric: Metric) -> Result<Truth<CoveringResult>> {
        let key = (inst.clone(), metric);
        if let Some(r) = self.radii.lock().expect("cache lock").get(&key) {
            return Ok(r.clone());
        }
        let code = self.code(inst)?;
        let r = within_budget(covering_radius_auto(&code, metric, &self.budget))?;
        self.radii.lock().expect("cache lock").insert(key, r.clone());
        Ok(r)
    }

    pub fn min_distance(&self, inst: &Instance, metric: Metric) -> Result<Truth<u32>> {
        let code = self.code(inst)?;
        within_budget(code.minimum_distance(metric, &self.budget))
    }

    /// Number of distinct nonzero Lee weights of the dual.
    pub fn dual_weight_count(&self, inst: &Instance) -> Result<Truth<u32>> {
        let code = self.code(inst)?;
        within_budget(crate::covering::delsarte_bound(&code, &self.budget).map(|d| d.s))
    }

    pub fn codeword_set(&self, inst: &Instance) -> Result<Truth<HashSet<MixedVector>>> {
        let code = self.code(inst)?;
        if let Err(e) = self.budget_check_codewords(&code) {
            return within_budget(Err(e));
        }
        Ok(Truth::Known(code.codewords().collect()))
    }

    fn budget_check_codewords(&self, code: &Code) -> Result<()> {
        if code.size_log2() > self.budget.ambient_log2 {
            return Err(Error::Budget {
                what: "codeword enumeration",
                needed_log2: code.size_log2(),
                limit_log2: self.budget.ambient_log2,
            });
        }
        Ok(())
    }
}
