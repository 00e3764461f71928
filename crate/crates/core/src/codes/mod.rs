//! Z2Z4-additive codes given by generator rows.

mod dual;
mod io;
mod standard;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Metric, MixedVector};
use crate::ambient::{Ambient, Budget, Word};
use crate::error::{Error, Result};

pub use dual::kernel_dual;
pub use io::{parse_matrix, write_matrix};
pub use standard::{
    is_dual_pair, parity_check, parity_check_with, standard_form, ParityCheck, ParityCheckSource, ParityCheckVariant,
    StandardForm,
};

/// Additive order tag of a generator row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowOrder {
    Two,
    Four,
}

impl RowOrder {
    pub fn of(v: &MixedVector) -> Self {
        if v.order() == 4 {
            RowOrder::Four
        } else {
            RowOrder::Two
        }
    }

    pub fn modulus(self) -> u8 {
        match self {
            RowOrder::Two => 2,
            RowOrder::Four => 4,
        }
    }
}

/// Ordered generator rows over a fixed `(gamma, delta)`.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    gamma: usize,
    delta: usize,
    rows: Vec<MixedVector>,
    orders: Vec<RowOrder>,
}

impl GeneratorMatrix {
    /// Builds a matrix, tagging each row with its additive order.
    pub fn new(gamma: usize, delta: usize, rows: Vec<MixedVector>) -> Result<Self> {
        for r in &rows {
            if r.shape() != (gamma, delta) {
                return Err(Error::Dimension {
                    expected: (gamma, delta),
                    found: r.shape(),
                });
            }
        }
        let orders = rows.iter().map(RowOrder::of).collect();
        Ok(Self {
            gamma,
            delta,
            rows,
            orders,
        })
    }

    /// Builds a matrix with caller-supplied tags, checking each against the row.
    pub fn with_orders(gamma: usize, delta: usize, rows: Vec<MixedVector>, orders: Vec<RowOrder>) -> Result<Self> {
        if rows.len() != orders.len() {
            return Err(Error::Parameter(format!(
                "{} rows but {} order tags",
                rows.len(),
                orders.len()
            )));
        }
        let m = Self::new(gamma, delta, rows)?;
        for (i, (row, tag)) in m.rows.iter().zip(&orders).enumerate() {
            if *tag != RowOrder::of(row) {
                return Err(Error::Parameter(format!(
                    "row {i} ({row}) is tagged {tag:?} but has order {}",
                    row.order()
                )));
            }
        }
        Ok(m)
    }

    pub fn empty(gamma: usize, delta: usize) -> Self {
        Self {
            gamma,
            delta,
            rows: Vec::new(),
            orders: Vec::new(),
        }
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.gamma, self.delta)
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::new(self.gamma, self.delta)
    }

    pub fn rows(&self) -> &[MixedVector] {
        &self.rows
    }

    pub fn orders(&self) -> &[RowOrder] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Every combination `sum a_i u_i + sum b_j v_j` with `a_i` in Z2 on
    /// order-two rows and `b_j` in Z4 on order-four rows. Dependent rows
    /// produce repeats; see [`Code::codewords`] for the distinct set.
    pub fn enumerate(&self) -> Combinations<'_> {
        Combinations::new(self.gamma, self.delta, &self.rows, &self.orders)
    }

    /// Applies coordinate permutations: new binary coordinate `p` takes old
    /// coordinate `binary[p]`, likewise for quaternary coordinates.
    pub fn permute_columns(&self, binary: &[usize], quaternary: &[usize]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| permute_vector(r, binary, quaternary))
            .collect();
        Self {
            gamma: self.gamma,
            delta: self.delta,
            rows,
            orders: self.orders.clone(),
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension {
                expected: self.shape(),
                found: other.shape(),
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self::new(self.gamma, self.delta, rows)
    }
}

impl fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GeneratorMatrix(gamma={}, delta={})", self.gamma, self.delta)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

pub(crate) fn permute_vector(v: &MixedVector, binary: &[usize], quaternary: &[usize]) -> MixedVector {
    let mut out = MixedVector::zero(v.gamma(), v.delta());
    for (p, &src) in binary.iter().enumerate() {
        out.set_binary(p, v.binary(src));
    }
    for (p, &src) in quaternary.iter().enumerate() {
        out.set_quaternary(p, v.quaternary(src));
    }
    out
}

/// Odometer over coefficient vectors; each step adds the rows whose digit
/// advances, so a full cycle of a digit returns its contribution to zero.
pub struct Combinations<'a> {
    rows: &'a [MixedVector],
    radices: Vec<u8>,
    digits: Vec<u8>,
    current: MixedVector,
    done: bool,
}

impl<'a> Combinations<'a> {
    fn new(gamma: usize, delta: usize, rows: &'a [MixedVector], orders: &[RowOrder]) -> Self {
        Self {
            rows,
            radices: orders.iter().map(|o| o.modulus()).collect(),
            digits: vec![0; rows.len()],
            current: MixedVector::zero(gamma, delta),
            done: false,
        }
    }
}

impl Iterator for Combinations<'_> {
    type Item = MixedVector;

    fn next(&mut self) -> Option<MixedVector> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut d = 0;
        loop {
            if d == self.rows.len() {
                self.done = true;
                break;
            }
            self.current.add_assign_unchecked(&self.rows[d]);
            self.digits[d] += 1;
            if self.digits[d] == self.radices[d] {
                self.digits[d] = 0;
                d += 1;
            } else {
                break;
            }
        }
        Some(out)
    }
}

/// The 5-tuple `(gamma, delta; lambda, mu; kappa)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeType {
    pub gamma: usize,
    pub delta: usize,
    pub lambda: usize,
    pub mu: usize,
    pub kappa: usize,
}

impl CodeType {
    /// `log2 |C| = lambda + 2 mu`.
    pub fn size_log2(&self) -> u32 {
        (self.lambda + 2 * self.mu) as u32
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {}, {}; {})",
            self.gamma, self.delta, self.lambda, self.mu, self.kappa
        )
    }
}

/// Histogram of codeword weights under one metric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub metric: Metric,
    pub counts: BTreeMap<u32, u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of distinct nonzero weights, written `s` in the Delsarte bound.
    pub fn distinct_nonzero(&self) -> usize {
        self.counts.keys().filter(|&&w| w != 0).count()
    }

    pub fn minimum_nonzero(&self) -> Option<u32> {
        self.counts.keys().copied().find(|&w| w != 0)
    }

    /// Associative merge of two histograms over the same metric.
    pub fn merge(mut self, other: &Self) -> Self {
        for (&w, &c) in &other.counts {
            *self.counts.entry(w).or_insert(0) += c;
        }
        self
    }
}

/// A code together with its standard form, which supplies an independent
/// generating set (a basis of the abelian group).
#[derive(Clone)]
pub struct Code {
    matrix: GeneratorMatrix,
    form: StandardForm,
}

impl Code {
    pub fn new(matrix: GeneratorMatrix) -> Self {
        let form = standard_form(&matrix);
        Self { matrix, form }
    }

    pub fn zero(gamma: usize, delta: usize) -> Self {
        Self::new(GeneratorMatrix::empty(gamma, delta))
    }

    /// The whole ambient group.
    pub fn full(gamma: usize, delta: usize) -> Self {
        let mut rows = Vec::with_capacity(gamma + delta);
        for i in 0..gamma {
            let mut v = MixedVector::zero(gamma, delta);
            v.set_binary(i, 1);
            rows.push(v);
        }
        for j in 0..delta {
            let mut v = MixedVector::zero(gamma, delta);
            v.set_quaternary(j, 1);
            rows.push(v);
        }
        Self::new(GeneratorMatrix::new(gamma, delta, rows).expect("unit rows share a shape"))
    }

    pub fn matrix(&self) -> &GeneratorMatrix {
        &self.matrix
    }

    pub fn standard_form(&self) -> &StandardForm {
        &self.form
    }

    /// Independent generators in the original coordinates.
    pub fn basis(&self) -> &GeneratorMatrix {
        &self.form.basis
    }

    pub fn gamma(&self) -> usize {
        self.matrix.gamma
    }

    pub fn delta(&self) -> usize {
        self.matrix.delta
    }

    pub fn ambient(&self) -> Ambient {
        self.matrix.ambient()
    }

    pub fn code_type(&self) -> CodeType {
        CodeType {
            gamma: self.gamma(),
            delta: self.delta(),
            lambda: self.form.lambda,
            mu: self.form.mu,
            kappa: self.form.kappa,
        }
    }

    pub fn size_log2(&self) -> u32 {
        self.code_type().size_log2()
    }

    /// Every codeword exactly once.
    pub fn codewords(&self) -> Combinations<'_> {
        self.form.basis.enumerate()
    }

    /// Sorted distinct codewords with the effective `(lambda, mu)`.
    pub fn distinct_codewords(&self) -> (Vec<MixedVector>, usize, usize) {
        let mut words: Vec<MixedVector> = self.codewords().collect();
        words.sort();
        (words, self.form.lambda, self.form.mu)
    }

    /// Codewords as packed words, in basis-odometer order.
    pub fn words(&self, budget: &Budget) -> Result<Vec<Word>> {
        budget.check("codeword enumeration", self.size_log2(), budget.ambient_log2)?;
        let amb = self.ambient();
        let basis: Vec<(Word, u8)> = self
            .form
            .basis
            .rows()
            .iter()
            .zip(self.form.basis.orders())
            .map(|(r, o)| Ok((amb.to_word(r)?, o.modulus())))
            .collect::<Result<_>>()?;
        let mut out = Vec::with_capacity(1usize << self.size_log2());
        out.push(Word::ZERO);
        for (g, modulus) in basis {
            let len = out.len();
            let mut step = g;
            for _ in 1..modulus {
                for i in 0..len {
                    let w = out[i].add(step);
                    out.push(w);
                }
                step = step.add(g);
            }
        }
        Ok(out)
    }

    pub fn weight_distribution(&self, metric: Metric, budget: &Budget) -> Result<WeightDistribution> {
        let mut counts = BTreeMap::new();
        if self.ambient().fits_word() {
            for w in self.words(budget)? {
                *counts.entry(w.weight(metric)).or_insert(0u64) += 1;
            }
        } else {
            budget.check("codeword enumeration", self.size_log2(), budget.ambient_log2)?;
            for c in self.codewords() {
                *counts.entry(c.weight(metric)).or_insert(0u64) += 1;
            }
        }
        Ok(WeightDistribution { metric, counts })
    }

    pub fn minimum_distance(&self, metric: Metric, budget: &Budget) -> Result<u32> {
        self.weight_distribution(metric, budget)?
            .minimum_nonzero()
            .ok_or(Error::ZeroCode)
    }

    /// Generators of the dual code: the parity-check block formula with the
    /// `2I` middle block, checked, else the exhaustive kernel dual.
    pub fn dual_generators(&self, budget: &Budget) -> Result<GeneratorMatrix> {
        let h = parity_check_with(&self.form, ParityCheckVariant::Doubled);
        let rows = h.rows().iter().map(|r| self.form.unpermute(r)).collect();
        let h = GeneratorMatrix::new(self.gamma(), self.delta(), rows)?;
        if is_dual_pair(self.basis(), &h) {
            return Ok(h);
        }
        Ok(kernel_dual(self.basis(), budget)?.matrix)
    }

    /// The dual code.
    pub fn dual(&self, budget: &Budget) -> Result<Code> {
        Ok(Code::new(self.dual_generators(budget)?))
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code {} from {:?}", self.code_type(), self.matrix)
    }
}

/// Type classification of the code generated by `g`.
pub fn classify_type(g: &GeneratorMatrix) -> CodeType {
    Code::new(g.clone()).code_type()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn v(s: &str) -> MixedVector {
        s.parse().unwrap()
    }

    fn matrix(gamma: usize, delta: usize, rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::new(gamma, delta, rows.iter().map(|r| v(r)).collect()).unwrap()
    }

    #[test]
    fn enumerate_single_order_four_row() {
        let g = matrix(1, 1, &["0 | 1"]);
        let words: Vec<String> = g.enumerate().map(|c| c.to_string()).collect();
        assert_eq!(words, ["0 | 0", "0 | 1", "0 | 2", "0 | 3"]);
    }

    #[test]
    fn enumerate_empty_and_order_two() {
        let g = GeneratorMatrix::empty(2, 1);
        assert_eq!(g.enumerate().collect::<Vec<_>>(), vec![MixedVector::zero(2, 1)]);
        let g = matrix(0, 1, &[" | 2"]);
        assert_eq!(g.enumerate().count(), 2);
        assert_eq!(Code::new(g).size_log2(), 1);
    }

    #[test]
    fn dependent_rows_are_deduplicated() {
        let g = matrix(1, 2, &["1 | 10", "0 | 20", "1 | 30"]);
        let code = Code::new(g.clone());
        let (words, lambda, mu) = code.distinct_codewords();
        let raw: HashSet<MixedVector> = g.enumerate().collect();
        assert_eq!(words.len(), raw.len());
        assert_eq!(words.len(), 1 << (lambda + 2 * mu));
    }

    #[test]
    fn classify_examples() {
        // The eight constant pairs (n = 1).
        let t = classify_type(&matrix(1, 1, &["1 | 1", "1 | 0"]));
        assert_eq!((t.gamma, t.delta, t.lambda, t.mu, t.kappa), (1, 1, 1, 1, 1));
        let t = classify_type(&GeneratorMatrix::empty(3, 2));
        assert_eq!((t.lambda, t.mu, t.kappa), (0, 0, 0));
        let t = classify_type(&matrix(2, 4, &["01 | 0123"]));
        assert_eq!((t.lambda, t.mu), (0, 1));
        assert_eq!(t.size_log2(), 2);
    }

    #[test]
    fn tagged_rows_are_validated() {
        assert!(GeneratorMatrix::with_orders(1, 1, vec![v("1 | 2")], vec![RowOrder::Two]).is_ok());
        assert!(GeneratorMatrix::with_orders(1, 1, vec![v("1 | 2")], vec![RowOrder::Four]).is_err());
        assert!(GeneratorMatrix::with_orders(1, 1, vec![v("0 | 3")], vec![RowOrder::Two]).is_err());
        assert!(GeneratorMatrix::new(1, 1, vec![v("10 | 1")]).is_err());
    }

    #[test]
    fn weight_distribution_examples() {
        let budget = Budget::default();
        let c1 = Code::new(matrix(1, 1, &["0 | 1"]));
        let wd = c1.weight_distribution(Metric::Lee, &budget).unwrap();
        assert_eq!(wd.counts, BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        assert_eq!(c1.minimum_distance(Metric::Lee, &budget).unwrap(), 1);

        let c2 = Code::new(matrix(1, 1, &["0 | 2"]));
        let wd = c2.weight_distribution(Metric::Euclidean, &budget).unwrap();
        assert_eq!(wd.counts, BTreeMap::from([(0, 1), (4, 1)]));
        assert_eq!(c2.minimum_distance(Metric::Euclidean, &budget).unwrap(), 4);

        // n pairs dilate the n = 1 weights.
        for n in 1..=4 {
            let c = Code::new(GeneratorMatrix::new(n, n, vec![MixedVector::constant_pair(0, 1, n)]).unwrap());
            let wd = c.weight_distribution(Metric::Lee, &budget).unwrap();
            let dilated: BTreeMap<u32, u64> = [(0, 1), (n as u32, 2), (2 * n as u32, 1)].into();
            assert_eq!(wd.counts, dilated);
        }
    }

    #[test]
    fn zero_code_has_no_minimum_distance() {
        let c = Code::zero(2, 2);
        assert!(matches!(
            c.minimum_distance(Metric::Lee, &Budget::default()),
            Err(Error::ZeroCode)
        ));
    }

    #[test]
    fn words_match_codewords() {
        let c = Code::new(matrix(2, 3, &["10 | 123", "01 | 202", "11 | 001"]));
        let amb = c.ambient();
        let mut from_words: Vec<MixedVector> = c
            .words(&Budget::default())
            .unwrap()
            .into_iter()
            .map(|w| amb.to_vector(w))
            .collect();
        from_words.sort();
        assert_eq!(from_words, c.distinct_codewords().0);
    }

    #[test]
    fn full_code_size() {
        let c = Code::full(2, 3);
        assert_eq!(c.size_log2(), 8);
        assert_eq!(c.code_type().kappa, 2);
    }
}
