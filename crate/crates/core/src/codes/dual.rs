use super::{Code, GeneratorMatrix};
use crate::ambient::{Ambient, Budget, Word};
use crate::error::Result;

/// Subgroup of an indexed ambient space, grown one generator at a time.
pub(crate) struct GrowingSubgroup {
    ambient: Ambient,
    member: Vec<u64>,
    elements: Vec<u64>,
    generators: Vec<Word>,
}

impl GrowingSubgroup {
    pub(crate) fn new(ambient: Ambient) -> Self {
        let words = (ambient.size() as usize).div_ceil(64);
        let mut member = vec![0u64; words];
        member[0] |= 1;
        Self {
            ambient,
            member,
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn contains_index(&self, index: u64) -> bool {
        (self.member[(index / 64) as usize] >> (index % 64)) & 1 == 1
    }

    fn insert_index(&mut self, index: u64) {
        self.member[(index / 64) as usize] |= 1 << (index % 64);
        self.elements.push(index);
    }

    /// Adds `g` to the generating set unless it is already a member.
    /// Returns whether the subgroup grew.
    pub(crate) fn extend(&mut self, g: Word) -> bool {
        if self.contains_index(self.ambient.index_of(g)) {
            return false;
        }
        let base = self.elements.len();
        let mut shift = g;
        // Cosets H + a*g are distinct until a*g falls back into H.
        while !self.contains_index(self.ambient.index_of(shift)) {
            for e in 0..base {
                let w = self.ambient.word_at(self.elements[e]).add(shift);
                self.insert_index(self.ambient.index_of(w));
            }
            shift = shift.add(g);
        }
        self.generators.push(g);
        true
    }

    pub(crate) fn generators(&self) -> &[Word] {
        &self.generators
    }
}

/// The additive dual `{v : <u, v> = 0 for all u in C}` of the code generated
/// by `g`, found by testing every ambient vector against the generators.
pub fn kernel_dual(g: &GeneratorMatrix, budget: &Budget) -> Result<Code> {
    let amb = g.ambient();
    amb.require_indexable(budget, "kernel_dual ambient sweep")?;
    let gens: Vec<Word> = g.rows().iter().map(|r| amb.to_word(r)).collect::<Result<_>>()?;

    let mut dual = GrowingSubgroup::new(amb);
    for index in 1..amb.size() {
        if dual.contains_index(index) {
            continue;
        }
        let w = amb.word_at(index);
        if gens.iter().all(|&h| w.inner(h) == 0) {
            dual.extend(w);
        }
    }
    let rows = dual.generators().iter().map(|&w| amb.to_vector(w)).collect();
    Ok(Code::new(GeneratorMatrix::new(g.gamma(), g.delta(), rows)?))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::alphabet::MixedVector;

    fn v(s: &str) -> MixedVector {
        s.parse().unwrap()
    }

    fn matrix(gamma: usize, delta: usize, rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::new(gamma, delta, rows.iter().map(|r| v(r)).collect()).unwrap()
    }

    #[test]
    fn dual_of_order_two_quaternary() {
        let dual = kernel_dual(&matrix(0, 1, &[" | 2"]), &Budget::default()).unwrap();
        let words: BTreeSet<String> = dual.codewords().map(|c| c.to_string()).collect();
        assert_eq!(words, BTreeSet::from([" | 0".to_string(), " | 2".to_string()]));
    }

    #[test]
    fn dual_of_zero_is_ambient() {
        let dual = kernel_dual(&GeneratorMatrix::empty(2, 2), &Budget::default()).unwrap();
        assert_eq!(dual.size_log2(), 6);
    }

    #[test]
    fn duality_is_an_involution() {
        let budget = Budget::default();
        let g = matrix(2, 3, &["10 | 121", "11 | 200"]);
        let code = Code::new(g.clone());
        let dual = kernel_dual(&g, &budget).unwrap();
        assert_eq!(code.size_log2() + dual.size_log2(), 2 + 6);
        let back = kernel_dual(dual.basis(), &budget).unwrap();
        assert_eq!(back.distinct_codewords().0, code.distinct_codewords().0);
    }

    #[test]
    fn growing_subgroup_counts() {
        let amb = Ambient::new(1, 2);
        let mut h = GrowingSubgroup::new(amb);
        let g = amb.to_word(&v("1 | 13")).unwrap();
        assert!(h.extend(g));
        assert_eq!(h.elements.len(), 4);
        assert!(!h.extend(g.double()));
        let t = amb.to_word(&v("0 | 20")).unwrap();
        assert!(h.extend(t));
        assert_eq!(h.elements.len(), 8);
    }

    #[test]
    fn budget_is_enforced() {
        let g = GeneratorMatrix::empty(10, 10);
        let budget = Budget::with_ambient_log2(20).unwrap();
        assert!(kernel_dual(&g, &budget).is_err());
    }
}
