use super::sweep::max_min_sweep;
use super::{CoveringResult, Engine};
use crate::alphabet::Metric;
use crate::ambient::{with_kernel, Budget, WeightKernel, Word};
use crate::codes::Code;
use crate::error::Result;

/// Max-min over every ambient point. The witness is the lexicographically
/// least point at maximal distance.
pub fn covering_radius_exhaustive(code: &Code, metric: Metric, budget: &Budget) -> Result<CoveringResult> {
    let amb = code.ambient();
    amb.require_indexable(budget, "exhaustive covering sweep")?;
    budget.check(
        "exhaustive covering sweep (ambient x code)",
        amb.size_log2() + code.size_log2(),
        budget.pair_log2,
    )?;
    let words = code.words(budget)?;
    let (radius, index) = with_kernel!(metric, K => sweep::<K>(amb.size(), |i| amb.word_at(i), &words));
    Ok(CoveringResult {
        metric,
        radius,
        witness: amb.vector_at(index),
        engine: Engine::Exhaustive,
    })
}

fn sweep<K: WeightKernel>(size: u64, point: impl Fn(u64) -> Word + Sync, words: &[Word]) -> (u32, u64) {
    max_min_sweep(size, |i, floor| {
        let u = point(i);
        let mut running = u32::MAX;
        for &c in words {
            let d = K::weight(u.sub(c));
            if d < running {
                running = d;
                if running < floor {
                    return None;
                }
            }
        }
        Some(running)
    })
}
