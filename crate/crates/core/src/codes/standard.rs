//! Standard generator matrices and the parity-check matrix built from them.
//!
//! The standard form is
//!
//! ```text
//! [ I_k  T'  | 2T1   0        0   ]
//! [ 0    0   | 2T2   2I_{l-k} 0   ]
//! [ 0    S'  | S     R        I_m ]
//! ```
//!
//! with `k = kappa`, `l = lambda`, `m = mu`, reached by row operations and
//! column permutations that never mix binary and quaternary coordinates.

use serde::{Deserialize, Serialize};

use super::{kernel_dual, permute_vector, Code, GeneratorMatrix};
use crate::alphabet::MixedVector;
use crate::ambient::Budget;
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct StandardForm {
    /// Rows in the block layout above, in permuted coordinates.
    pub matrix: GeneratorMatrix,
    /// The same rows in the original coordinates.
    pub basis: GeneratorMatrix,
    /// New binary coordinate `p` holds original binary coordinate `binary_permutation[p]`.
    pub binary_permutation: Vec<usize>,
    /// New quaternary coordinate `p` holds original coordinate `quaternary_permutation[p]`.
    pub quaternary_permutation: Vec<usize>,
    pub kappa: usize,
    pub lambda: usize,
    pub mu: usize,
    /// kappa x (gamma - kappa), mod 2.
    pub t_prime: Vec<Vec<u8>>,
    /// kappa x (delta + kappa - lambda - mu), mod 2.
    pub t1: Vec<Vec<u8>>,
    /// (lambda - kappa) x (delta + kappa - lambda - mu), mod 2.
    pub t2: Vec<Vec<u8>>,
    /// mu x (gamma - kappa), mod 2.
    pub s_prime: Vec<Vec<u8>>,
    /// mu x (delta + kappa - lambda - mu), mod 4.
    pub s: Vec<Vec<u8>>,
    /// mu x (lambda - kappa), mod 2.
    pub r: Vec<Vec<u8>>,
}

impl StandardForm {
    /// Width of the leading quaternary block, `delta + kappa - lambda - mu`.
    pub fn free_quaternary(&self) -> usize {
        self.matrix.delta() + self.kappa - self.lambda - self.mu
    }

    /// Maps a vector in original coordinates to the permuted coordinates.
    pub fn permute(&self, v: &MixedVector) -> MixedVector {
        permute_vector(v, &self.binary_permutation, &self.quaternary_permutation)
    }

    /// Maps a vector in permuted coordinates back to the original ones.
    pub fn unpermute(&self, v: &MixedVector) -> MixedVector {
        let mut out = MixedVector::zero(v.gamma(), v.delta());
        for (p, &src) in self.binary_permutation.iter().enumerate() {
            out.set_binary(src, v.binary(p));
        }
        for (p, &src) in self.quaternary_permutation.iter().enumerate() {
            out.set_quaternary(src, v.quaternary(p));
        }
        out
    }
}

#[derive(Clone, Copy)]
enum Pivot {
    Binary(usize),
    Quaternary(usize),
}

/// Row-reduces `g` into standard form.
///
/// Order-four pivots are taken first, on the lowest quaternary column holding
/// a unit; the remaining order-two rows are then reduced over Z2, binary
/// columns before quaternary ones, lowest column first.
pub fn standard_form(g: &GeneratorMatrix) -> StandardForm {
    let (gamma, delta) = g.shape();
    let mut pending: Vec<MixedVector> = g.rows().iter().filter(|r| !r.is_zero()).cloned().collect();

    let mut fours: Vec<MixedVector> = Vec::new();
    let mut four_cols: Vec<usize> = Vec::new();
    loop {
        let found = (0..delta).find_map(|col| {
            pending
                .iter()
                .position(|r| r.quaternary(col) & 1 == 1)
                .map(|ri| (ri, col))
        });
        let Some((ri, col)) = found else { break };
        let mut pivot = pending.remove(ri);
        if pivot.quaternary(col) == 3 {
            pivot = pivot.neg();
        }
        for r in pending.iter_mut().chain(fours.iter_mut()) {
            let a = r.quaternary(col);
            if a != 0 {
                r.add_assign_unchecked(&pivot.scalar_mul(4 - a));
            }
        }
        fours.push(pivot);
        four_cols.push(col);
    }

    // Everything left has order two; reduce it as vectors over Z2.
    let mut rest: Vec<MixedVector> = pending.into_iter().filter(|r| !r.is_zero()).collect();
    let mut twos: Vec<(MixedVector, Pivot)> = Vec::new();
    let binary_cols = (0..gamma).map(Pivot::Binary);
    let quaternary_cols = (0..delta).map(Pivot::Quaternary);
    for pivot in binary_cols.chain(quaternary_cols) {
        let hit = |r: &MixedVector| match pivot {
            Pivot::Binary(c) => r.binary(c) == 1,
            Pivot::Quaternary(c) => r.quaternary(c) == 2,
        };
        let Some(idx) = rest.iter().position(hit) else { continue };
        let p = rest.remove(idx);
        for r in rest.iter_mut() {
            if hit(r) {
                r.add_assign_unchecked(&p);
            }
        }
        for (q, _) in twos.iter_mut() {
            if hit(q) {
                q.add_assign_unchecked(&p);
            }
        }
        twos.push((p, pivot));
    }
    debug_assert!(rest.iter().all(MixedVector::is_zero));

    // Clear the order-four rows on the order-two pivot columns.
    for f in fours.iter_mut() {
        for (p, pivot) in &twos {
            let clear = match *pivot {
                Pivot::Binary(c) => f.binary(c) == 1,
                Pivot::Quaternary(c) => f.quaternary(c) >= 2,
            };
            if clear {
                f.add_assign_unchecked(p);
            }
        }
    }

    let kappa = twos.iter().filter(|(_, p)| matches!(p, Pivot::Binary(_))).count();
    let lambda = twos.len();
    let mu = fours.len();

    let bin_pivots: Vec<usize> = twos
        .iter()
        .filter_map(|(_, p)| match p {
            Pivot::Binary(c) => Some(*c),
            Pivot::Quaternary(_) => None,
        })
        .collect();
    let two_cols: Vec<usize> = twos
        .iter()
        .filter_map(|(_, p)| match p {
            Pivot::Quaternary(c) => Some(*c),
            Pivot::Binary(_) => None,
        })
        .collect();

    let mut binary_permutation = bin_pivots.clone();
    binary_permutation.extend((0..gamma).filter(|c| !bin_pivots.contains(c)));
    let mut quaternary_permutation: Vec<usize> = (0..delta)
        .filter(|c| !two_cols.contains(c) && !four_cols.contains(c))
        .collect();
    quaternary_permutation.extend(&two_cols);
    quaternary_permutation.extend(&four_cols);

    let basis_rows: Vec<MixedVector> = twos.into_iter().map(|(r, _)| r).chain(fours).collect();
    let basis = GeneratorMatrix::new(gamma, delta, basis_rows).expect("rows keep their shape");
    let matrix = basis.permute_columns(&binary_permutation, &quaternary_permutation);

    let free = delta + kappa - lambda - mu;
    let rows = matrix.rows();
    let block = |rs: std::ops::Range<usize>, f: &dyn Fn(&MixedVector) -> Vec<u8>| -> Vec<Vec<u8>> {
        rows[rs].iter().map(f).collect()
    };
    let t_prime = block(0..kappa, &|r| (kappa..gamma).map(|c| r.binary(c)).collect());
    let t1 = block(0..kappa, &|r| (0..free).map(|c| r.quaternary(c) / 2).collect());
    let t2 = block(kappa..lambda, &|r| (0..free).map(|c| r.quaternary(c) / 2).collect());
    let s_prime = block(lambda..lambda + mu, &|r| (kappa..gamma).map(|c| r.binary(c)).collect());
    let s = block(lambda..lambda + mu, &|r| (0..free).map(|c| r.quaternary(c)).collect());
    let r = block(lambda..lambda + mu, &|r| {
        (free..free + lambda - kappa).map(|c| r.quaternary(c)).collect()
    });

    StandardForm {
        matrix,
        basis,
        binary_permutation,
        quaternary_permutation,
        kappa,
        lambda,
        mu,
        t_prime,
        t1,
        t2,
        s_prime,
        s,
        r,
    }
}

/// Which reading of the parity-check block formula to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityCheckVariant {
    /// The middle row block carries `I_{lambda - kappa}` as printed.
    AsPrinted,
    /// The middle row block carries `2 I_{lambda - kappa}`.
    Doubled,
}

/// Builds the block parity-check matrix
///
/// ```text
/// [ T'^t  I_{g-k} | 0  0      2S'^t        ]
/// [ 0     0       | 0  c*I    2R^t         ]
/// [ T1^t  0       | I  T2^t   -(S+R T2)^t  ]
/// ```
///
/// in the permuted coordinates of `sf`, with `c = 1` or `2` by `variant`.
pub fn parity_check_with(sf: &StandardForm, variant: ParityCheckVariant) -> GeneratorMatrix {
    let (gamma, delta) = sf.matrix.shape();
    let (kappa, lambda, mu) = (sf.kappa, sf.lambda, sf.mu);
    let free = sf.free_quaternary();
    let two_block = lambda - kappa;
    let mut rows = Vec::new();

    for j in 0..gamma - kappa {
        let mut v = MixedVector::zero(gamma, delta);
        for i in 0..kappa {
            v.set_binary(i, sf.t_prime[i][j]);
        }
        v.set_binary(kappa + j, 1);
        for l in 0..mu {
            v.set_quaternary(free + two_block + l, 2 * sf.s_prime[l][j]);
        }
        rows.push(v);
    }

    let diag = match variant {
        ParityCheckVariant::AsPrinted => 1,
        ParityCheckVariant::Doubled => 2,
    };
    for j in 0..two_block {
        let mut v = MixedVector::zero(gamma, delta);
        v.set_quaternary(free + j, diag);
        for l in 0..mu {
            v.set_quaternary(free + two_block + l, (2 * sf.r[l][j]) & 3);
        }
        rows.push(v);
    }

    for j in 0..free {
        let mut v = MixedVector::zero(gamma, delta);
        for i in 0..kappa {
            v.set_binary(i, sf.t1[i][j]);
        }
        v.set_quaternary(j, 1);
        for t in 0..two_block {
            v.set_quaternary(free + t, sf.t2[t][j]);
        }
        for l in 0..mu {
            let rt2: u32 = (0..two_block).map(|t| u32::from(sf.r[l][t] * sf.t2[t][j])).sum();
            let entry = (u32::from(sf.s[l][j]) + rt2) % 4;
            v.set_quaternary(free + two_block + l, ((4 - entry) % 4) as u8);
        }
        rows.push(v);
    }

    GeneratorMatrix::new(gamma, delta, rows).expect("rows built with the matrix shape")
}

/// Where a parity-check matrix came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityCheckSource {
    BlockFormula,
    KernelDual,
}

#[derive(Debug, Clone)]
pub struct ParityCheck {
    /// Generators of the dual, in the permuted coordinates of the standard form.
    pub matrix: GeneratorMatrix,
    pub source: ParityCheckSource,
    /// Whether the as-printed block formula produced a full dual on its own.
    pub block_formula_valid: bool,
    pub note: Option<String>,
}

/// Whether every row of `h` is orthogonal to every row of `g` and the two
/// generated codes have complementary sizes.
pub fn is_dual_pair(g: &GeneratorMatrix, h: &GeneratorMatrix) -> bool {
    let orthogonal = g
        .rows()
        .iter()
        .all(|a| h.rows().iter().all(|b| a.inner_product_unchecked(b) == 0));
    if !orthogonal {
        return false;
    }
    let total = g.gamma() + 2 * g.delta();
    let sizes = Code::new(g.clone()).size_log2() + Code::new(h.clone()).size_log2();
    sizes as usize == total
}

/// The parity-check matrix of a standard form: the as-printed block formula
/// when it yields the dual, else the exhaustively computed dual.
pub fn parity_check(sf: &StandardForm, budget: &Budget) -> Result<ParityCheck> {
    let printed = parity_check_with(sf, ParityCheckVariant::AsPrinted);
    if is_dual_pair(&sf.matrix, &printed) {
        return Ok(ParityCheck {
            matrix: printed,
            source: ParityCheckSource::BlockFormula,
            block_formula_valid: true,
            note: None,
        });
    }
    let dual = kernel_dual(&sf.matrix, budget)?;
    let doubled_ok = is_dual_pair(&sf.matrix, &parity_check_with(sf, ParityCheckVariant::Doubled));
    Ok(ParityCheck {
        matrix: dual.basis().clone(),
        source: ParityCheckSource::KernelDual,
        block_formula_valid: false,
        note: Some(format!(
            "as-printed block formula is not a dual generator (lambda={}, kappa={}); 2I variant {}",
            sf.lambda,
            sf.kappa,
            if doubled_ok { "is" } else { "is not" }
        )),
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn v(s: &str) -> MixedVector {
        s.parse().unwrap()
    }

    fn matrix(gamma: usize, delta: usize, rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::new(gamma, delta, rows.iter().map(|r| v(r)).collect()).unwrap()
    }

    fn codeword_set(g: &GeneratorMatrix) -> BTreeSet<MixedVector> {
        g.enumerate().collect()
    }

    fn assert_shape(sf: &StandardForm) {
        let m = &sf.matrix;
        let (gamma, delta) = m.shape();
        let free = sf.free_quaternary();
        let (k, l, mu) = (sf.kappa, sf.lambda, sf.mu);
        for (ri, row) in m.rows().iter().enumerate() {
            for c in 0..k {
                let want = u8::from(ri < k && ri == c);
                assert_eq!(row.binary(c), want, "I_kappa block, row {ri}");
            }
            for c in 0..l - k {
                let want = if ri >= k && ri < l && ri - k == c { 2 } else { 0 };
                let got = row.quaternary(free + c);
                if ri >= l {
                    assert!(got <= 1, "R block entries are binary");
                } else {
                    assert_eq!(got, want, "2I block, row {ri}");
                }
            }
            for c in 0..mu {
                let want = u8::from(ri >= l && ri - l == c);
                assert_eq!(row.quaternary(free + l - k + c), want, "I_mu block, row {ri}");
            }
            if ri >= k && ri < l {
                assert!((0..gamma).all(|c| row.binary(c) == 0));
            }
            if ri < l {
                assert!((0..delta).all(|c| row.quaternary(c) % 2 == 0));
            }
        }
    }

    #[test]
    fn hand_reduced_example() {
        let g = matrix(2, 1, &["11 | 0", "00 | 1"]);
        let sf = standard_form(&g);
        assert_eq!((sf.kappa, sf.lambda, sf.mu), (1, 1, 1));
        assert_eq!(sf.t_prime, vec![vec![1]]);
        assert_shape(&sf);
    }

    #[test]
    fn single_row_is_standard() {
        let g = matrix(1, 1, &["1 | 1"]);
        let sf = standard_form(&g);
        assert_eq!((sf.kappa, sf.lambda, sf.mu), (0, 0, 1));
        assert_eq!(codeword_set(&sf.matrix), codeword_set(&g));
    }

    #[test]
    fn permuted_code_is_preserved() {
        let cases: &[(usize, usize, &[&str])] = &[
            (3, 3, &["101 | 123", "011 | 202", "110 | 000", "000 | 022"]),
            (2, 4, &["10 | 1302", "01 | 2211", "11 | 0033", "00 | 2020"]),
            (0, 3, &[" | 123", " | 222", " | 301"]),
            (4, 0, &["1100 | ", "0110 | ", "1010 | "]),
            (2, 2, &["11 | 20", "11 | 20"]),
        ];
        for &(gamma, delta, rows) in cases {
            let g = matrix(gamma, delta, rows);
            let sf = standard_form(&g);
            assert_shape(&sf);
            let permuted: BTreeSet<MixedVector> = g.enumerate().map(|c| sf.permute(&c)).collect();
            assert_eq!(codeword_set(&sf.matrix), permuted);
            let back: BTreeSet<MixedVector> = sf.matrix.enumerate().map(|c| sf.unpermute(&c)).collect();
            assert_eq!(back, codeword_set(&g));
            assert_eq!(permuted.len(), 1 << (sf.lambda + 2 * sf.mu));
        }
    }

    #[test]
    fn printed_block_formula_fails_exactly_when_lambda_exceeds_kappa() {
        let budget = Budget::default();
        // lambda = kappa: printed formula is a valid dual generator.
        let sf = standard_form(&matrix(1, 1, &["1 | 0"]));
        let pc = parity_check(&sf, &budget).unwrap();
        assert_eq!(pc.source, ParityCheckSource::BlockFormula);
        assert!(pc.matrix.rows().contains(&v("0 | 1")));

        // lambda > kappa: the printed I block breaks orthogonality.
        let sf = standard_form(&matrix(1, 2, &["0 | 20", "1 | 01"]));
        assert!(sf.lambda > sf.kappa);
        let printed = parity_check_with(&sf, ParityCheckVariant::AsPrinted);
        assert!(!is_dual_pair(&sf.matrix, &printed));
        let doubled = parity_check_with(&sf, ParityCheckVariant::Doubled);
        assert!(is_dual_pair(&sf.matrix, &doubled));
        let pc = parity_check(&sf, &budget).unwrap();
        assert_eq!(pc.source, ParityCheckSource::KernelDual);
        assert!(is_dual_pair(&sf.matrix, &pc.matrix));
    }

    #[test]
    fn full_ambient_has_trivial_dual() {
        let code = Code::full(2, 2);
        let pc = parity_check(code.standard_form(), &Budget::default()).unwrap();
        assert!(pc.matrix.rows().iter().all(MixedVector::is_zero));
    }
}
