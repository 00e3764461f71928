use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CoveringResult, Engine};
use crate::alphabet::Metric;
use crate::ambient::{with_kernel, Ambient, Budget, WeightKernel, Word, HARD_LIMIT_LOG2};
use crate::codes::{Code, RowOrder};
use crate::error::{Error, Result};

/// How points are sorted into cosets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CosetLabeling {
    /// Syndromes against a dual basis; a bijection onto `0..cosets`.
    Syndrome,
    /// The unique reduced representative modulo the standard-form rows.
    CanonicalRepresentative,
}

const LOW_BITS: u32 = 12;

fn pack(weight: u32, index: u64) -> u64 {
    (u64::from(weight) << 32) | index
}

/// Minimum-weight coset leaders, packed as `weight << 32 | index`, one per coset.
fn leaders(code: &Code, metric: Metric, labeling: CosetLabeling, budget: &Budget) -> Result<Vec<u64>> {
    let amb = code.ambient();
    amb.require_indexable(budget, "coset leader sweep")?;
    let cosets_log2 = amb.size_log2() - code.size_log2();
    budget.check("coset table", cosets_log2, budget.coset_log2.min(HARD_LIMIT_LOG2))?;
    match labeling {
        CosetLabeling::Syndrome => match code.dual_generators(budget) {
            Ok(h) => {
                let rows: Vec<(Word, RowOrder)> = h
                    .rows()
                    .iter()
                    .zip(h.orders())
                    .map(|(r, &o)| Ok((amb.to_word(r)?, o)))
                    .collect::<Result<_>>()?;
                Ok(with_kernel!(metric, K => syndrome_leaders::<K>(amb, &rows, cosets_log2)))
            }
            Err(Error::Budget { .. }) => canonical_leaders(code, metric),
            Err(e) => Err(e),
        },
        CosetLabeling::CanonicalRepresentative => canonical_leaders(code, metric),
    }
}

struct Syndrome {
    rows: Vec<(Word, RowOrder)>,
    space: Ambient,
}

impl Syndrome {
    fn new(rows: &[(Word, RowOrder)]) -> Self {
        let twos = rows.iter().filter(|(_, o)| *o == RowOrder::Two).count();
        let mut ordered: Vec<(Word, RowOrder)> = rows.iter().filter(|(_, o)| *o == RowOrder::Two).copied().collect();
        ordered.extend(rows.iter().filter(|(_, o)| *o == RowOrder::Four).copied());
        Self {
            space: Ambient::new(twos, rows.len() - twos),
            rows: ordered,
        }
    }

    fn of(&self, u: Word) -> Word {
        let (t2, t4) = (self.space.gamma, self.space.delta);
        let mut s = Word::ZERO;
        for (a, &(h, _)) in self.rows[..t2].iter().enumerate() {
            s.bin |= u64::from(u.inner(h) >> 1) << (t2 - 1 - a);
        }
        for (b, &(h, _)) in self.rows[t2..].iter().enumerate() {
            let v = u64::from(u.inner(h));
            s.lo |= (v & 1) << (t4 - 1 - b);
            s.hi |= (v >> 1) << (t4 - 1 - b);
        }
        s
    }
}

fn syndrome_leaders<K: WeightKernel>(amb: Ambient, rows: &[(Word, RowOrder)], cosets_log2: u32) -> Vec<u64> {
    let syn = Syndrome::new(rows);
    assert_eq!(
        syn.space.size_log2(),
        cosets_log2,
        "dual basis must label every coset once"
    );
    let n = amb.size_log2();
    // Indices split into a high and low part on a coordinate boundary, so
    // point(high | low) = point(high) + point(low) and syndromes add too.
    let low_bits = n.min(LOW_BITS);
    let low: Vec<(Word, Word)> = (0..1u64 << low_bits)
        .map(|i| {
            let w = amb.word_at(i);
            (w, syn.of(w))
        })
        .collect();
    let table: Vec<AtomicU64> = (0..1u64 << cosets_log2).map(|_| AtomicU64::new(u64::MAX)).collect();
    (0..1u64 << (n - low_bits)).into_par_iter().for_each(|high| {
        let base = high << low_bits;
        let hw = amb.word_at(base);
        let hs = syn.of(hw);
        for (i, &(lw, ls)) in low.iter().enumerate() {
            let w = Word {
                bin: hw.bin | lw.bin,
                lo: hw.lo | lw.lo,
                hi: hw.hi | lw.hi,
            };
            let label = syn.space.index_of(hs.add(ls)) as usize;
            let v = pack(K::weight(w), base | i as u64);
            if table[label].load(Ordering::Relaxed) > v {
                table[label].fetch_min(v, Ordering::Relaxed);
            }
        }
    });
    table.into_iter().map(AtomicU64::into_inner).collect()
}

/// Reduction of a word to its canonical coset representative.
struct Reducer {
    amb: Ambient,
    fours: Vec<(Word, usize)>,
    twos: Vec<(Word, usize)>,
    binaries: Vec<(Word, usize)>,
}

impl Reducer {
    fn new(code: &Code) -> Result<Self> {
        let sf = code.standard_form();
        let amb = code.ambient();
        let (kappa, lambda, mu) = (sf.kappa, sf.lambda, sf.mu);
        let free = sf.free_quaternary();
        let rows = sf.basis.rows();
        let word = |i: usize| amb.to_word(&rows[i]);
        let binaries = (0..kappa)
            .map(|i| Ok((word(i)?, sf.binary_permutation[i])))
            .collect::<Result<_>>()?;
        let twos = (kappa..lambda)
            .map(|i| Ok((word(i)?, sf.quaternary_permutation[free + i - kappa])))
            .collect::<Result<_>>()?;
        let fours = (0..mu)
            .map(|l| Ok((word(lambda + l)?, sf.quaternary_permutation[free + lambda - kappa + l])))
            .collect::<Result<_>>()?;
        Ok(Self {
            amb,
            fours,
            twos,
            binaries,
        })
    }

    fn quaternary(&self, w: Word, j: usize) -> u8 {
        let bit = self.amb.delta - 1 - j;
        (((w.lo >> bit) & 1) | (((w.hi >> bit) & 1) << 1)) as u8
    }

    fn binary(&self, w: Word, i: usize) -> u8 {
        ((w.bin >> (self.amb.gamma - 1 - i)) & 1) as u8
    }

    fn reduce(&self, mut u: Word) -> Word {
        for &(row, p) in &self.fours {
            let a = self.quaternary(u, p);
            u = u.sub(row.scalar_mul(a));
        }
        for &(row, p) in &self.twos {
            if self.quaternary(u, p) >= 2 {
                u = u.sub(row);
            }
        }
        for &(row, p) in &self.binaries {
            if self.binary(u, p) == 1 {
                u = u.sub(row);
            }
        }
        u
    }
}

fn canonical_leaders(code: &Code, metric: Metric) -> Result<Vec<u64>> {
    let reducer = Reducer::new(code)?;
    let amb = code.ambient();
    let mut best: HashMap<u64, u64> = HashMap::new();
    for i in 0..amb.size() {
        let u = amb.word_at(i);
        let rep = amb.index_of(reducer.reduce(u));
        let v = pack(u.weight(metric), i);
        best.entry(rep).and_modify(|b| *b = (*b).min(v)).or_insert(v);
    }
    let mut reps: Vec<(u64, u64)> = best.into_iter().collect();
    reps.sort_unstable();
    Ok(reps.into_iter().map(|(_, v)| v).collect())
}

fn result_from(amb: Ambient, metric: Metric, table: &[u64]) -> CoveringResult {
    let top = table
        .iter()
        .copied()
        .max_by(|a, b| (a >> 32).cmp(&(b >> 32)).then(b.cmp(a)))
        .expect("at least one coset");
    CoveringResult {
        metric,
        radius: (top >> 32) as u32,
        witness: amb.vector_at(top & 0xffff_ffff),
        engine: Engine::Coset,
    }
}

/// Covering radius as the largest minimum-weight coset leader.
pub fn covering_radius_coset(code: &Code, metric: Metric, budget: &Budget) -> Result<CoveringResult> {
    covering_radius_coset_with(code, metric, CosetLabeling::Syndrome, budget)
}

pub fn covering_radius_coset_with(
    code: &Code,
    metric: Metric,
    labeling: CosetLabeling,
    budget: &Budget,
) -> Result<CoveringResult> {
    let table = leaders(code, metric, labeling, budget)?;
    Ok(result_from(code.ambient(), metric, &table))
}

/// Weight of a minimum-weight leader of every coset.
pub fn coset_leader_weights(code: &Code, metric: Metric, budget: &Budget) -> Result<Vec<u32>> {
    Ok(leaders(code, metric, CosetLabeling::Syndrome, budget)?
        .into_iter()
        .map(|v| (v >> 32) as u32)
        .collect())
}

/// Coset leaders found by enumerating vectors in order of increasing weight
/// until every coset has been reached. Needs no ambient sweep, so it handles
/// long codes of small index; the number of vectors visited is bounded by
/// `2^budget.ambient_log2`.
pub fn covering_radius_by_weight(code: &Code, metric: Metric, budget: &Budget) -> Result<CoveringResult> {
    let amb = code.ambient();
    if !amb.fits_word() {
        return Err(Error::Parameter(format!(
            "weight-ordered coset search needs gamma, delta <= 64, got {}, {}",
            amb.gamma, amb.delta
        )));
    }
    let cosets_log2 = (amb.gamma + 2 * amb.delta) as u32 - code.size_log2();
    budget.check("coset table", cosets_log2, budget.coset_log2.min(HARD_LIMIT_LOG2))?;
    let h = code.dual_generators(budget)?;
    let rows: Vec<(Word, RowOrder)> = h
        .rows()
        .iter()
        .zip(h.orders())
        .map(|(r, &o)| Ok((amb.to_word(r)?, o)))
        .collect::<Result<_>>()?;
    let syn = Syndrome::new(&rows);

    // Unit steps: (word, syndrome, weight) for every nonzero symbol at every position.
    let mut steps: Vec<Vec<(Word, Word, u32)>> = Vec::new();
    for i in 0..amb.gamma {
        let w = Word {
            bin: 1 << (amb.gamma - 1 - i),
            ..Word::ZERO
        };
        steps.push(vec![(w, syn.of(w), metric.binary_weight(1))]);
    }
    for j in 0..amb.delta {
        let unit = Word {
            lo: 1 << (amb.delta - 1 - j),
            ..Word::ZERO
        };
        steps.push(
            (1..4u8)
                .map(|a| {
                    let w = unit.scalar_mul(a);
                    (w, syn.of(w), metric.quaternary_weight(a))
                })
                .collect(),
        );
    }

    let total = 1usize << cosets_log2;
    let mut found: Vec<Option<(u32, Word)>> = vec![None; total];
    found[0] = Some((0, Word::ZERO));
    let mut reached = 1usize;
    let limit = 1u64 << budget.ambient_log2.min(HARD_LIMIT_LOG2);
    let mut visited = 0u64;
    let max_weight = metric.binary_weight(1) as usize * amb.gamma + metric.max_quaternary_weight() as usize * amb.delta;
    let mut radius = 0;
    let mut weight = 1u32;
    while reached < total && weight as usize <= max_weight {
        let mut search = WeightSearch {
            steps: &steps,
            space: syn.space,
            found: &mut found,
            reached: &mut reached,
            visited: &mut visited,
            limit,
            weight,
        };
        search.run(0, weight, Word::ZERO, Word::ZERO)?;
        radius = weight;
        weight += 1;
    }
    let (r, w) = found
        .iter()
        .flatten()
        .copied()
        .max_by_key(|&(w, _)| w)
        .expect("zero coset is always reached");
    debug_assert!(reached == total && r <= radius);
    Ok(CoveringResult {
        metric,
        radius: r,
        witness: amb.to_vector(w),
        engine: Engine::Coset,
    })
}

struct WeightSearch<'a> {
    steps: &'a [Vec<(Word, Word, u32)>],
    space: Ambient,
    found: &'a mut [Option<(u32, Word)>],
    reached: &'a mut usize,
    visited: &'a mut u64,
    limit: u64,
    weight: u32,
}

impl WeightSearch<'_> {
    fn run(&mut self, from: usize, remaining: u32, word: Word, syndrome: Word) -> Result<()> {
        if remaining == 0 {
            *self.visited += 1;
            if *self.visited > self.limit {
                return Err(Error::Budget {
                    what: "weight-ordered coset search",
                    needed_log2: 64 - (*self.visited).leading_zeros(),
                    limit_log2: 63 - self.limit.leading_zeros(),
                });
            }
            let label = self.space.index_of(syndrome) as usize;
            if self.found[label].is_none() {
                self.found[label] = Some((self.weight, word));
                *self.reached += 1;
            }
            return Ok(());
        }
        for p in from..self.steps.len() {
            for &(w, s, cost) in &self.steps[p] {
                if cost <= remaining {
                    self.run(p + 1, remaining - cost, word.add(w), syndrome.add(s))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::GeneratorMatrix;

    #[test]
    fn canonical_representatives_split_the_ambient_evenly() {
        let g = GeneratorMatrix::new(
            2,
            3,
            ["10 | 213", "11 | 020", "00 | 002"]
                .iter()
                .map(|r| r.parse().unwrap())
                .collect(),
        )
        .unwrap();
        let code = Code::new(g);
        let reducer = Reducer::new(&code).unwrap();
        let amb = code.ambient();
        let mut counts: HashMap<u64, u32> = HashMap::new();
        for i in 0..amb.size() {
            *counts.entry(amb.index_of(reducer.reduce(amb.word_at(i)))).or_default() += 1;
        }
        let size = 1u32 << code.size_log2();
        assert_eq!(counts.len() as u64, amb.size() / u64::from(size));
        assert!(counts.values().all(|&c| c == size));
        for c in code.words(&Budget::default()).unwrap() {
            assert_eq!(reducer.reduce(c), Word::ZERO);
        }
    }

    #[test]
    fn weight_ordered_search_matches_the_sweep() {
        let budget = Budget::default();
        for rows in [
            vec!["10 | 213", "11 | 020"],
            vec!["11 | 111"],
            vec!["00 | 200", "01 | 013"],
        ] {
            let g = GeneratorMatrix::new(2, 3, rows.iter().map(|r| r.parse().unwrap()).collect()).unwrap();
            let code = Code::new(g);
            for metric in Metric::ALL {
                let a = covering_radius_coset(&code, metric, &budget).unwrap();
                let b = covering_radius_by_weight(&code, metric, &budget).unwrap();
                assert_eq!(a.radius, b.radius, "{code:?} {metric}");
            }
        }
    }
}
