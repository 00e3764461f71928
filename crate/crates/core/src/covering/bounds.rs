use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{covering_radius_auto, CoveringResult};
use crate::alphabet::{Metric, MixedVector};
use crate::ambient::Budget;
use crate::codes::{Code, CodeType, GeneratorMatrix};
use crate::error::{Error, Result};

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(base: &[BigUint], mut e: usize) -> Vec<BigUint> {
    let mut acc = vec![BigUint::one()];
    let mut sq = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(&acc, &sq);
        }
        e >>= 1;
        if e > 0 {
            sq = poly_mul(&sq, &sq);
        }
    }
    acc
}

fn symbol_enumerator(weights: impl Iterator<Item = u32>) -> Vec<BigUint> {
    let mut out = Vec::new();
    for w in weights {
        let w = w as usize;
        if out.len() <= w {
            out.resize(w + 1, BigUint::zero());
        }
        out[w] += 1u32;
    }
    out
}

/// Coefficients `V_i`: the number of vectors of Z2^gamma x Z4^delta at weight `i`.
pub fn weight_enumerator(gamma: usize, delta: usize, metric: Metric) -> Vec<BigUint> {
    let b = symbol_enumerator((0..2).map(|s| metric.binary_weight(s)));
    let q = symbol_enumerator((0..4).map(|s| metric.quaternary_weight(s)));
    poly_mul(&poly_pow(&b, gamma), &poly_pow(&q, delta))
}

/// Least `r` with `target <= sum_{i <= r} V_i`.
fn least_radius(coefficients: &[BigUint], target: &BigUint) -> u32 {
    let mut acc = BigUint::zero();
    for (r, v) in coefficients.iter().enumerate() {
        acc += v;
        if &acc >= target {
            return r as u32;
        }
    }
    coefficients.len().saturating_sub(1) as u32
}

fn ratio_target(numerator_log2: u32, code_size_log2: u32) -> BigUint {
    if code_size_log2 >= numerator_log2 {
        BigUint::one()
    } else {
        BigUint::one() << (numerator_log2 - code_size_log2)
    }
}

/// Least `r` with `|C| * sum_{i <= r} V_i >= 2^(gamma + 2 delta)`.
pub fn sphere_covering_bound(gamma: usize, delta: usize, code_size_log2: u32, metric: Metric) -> u32 {
    let target = ratio_target((gamma + 2 * delta) as u32, code_size_log2);
    least_radius(&weight_enumerator(gamma, delta, metric), &target)
}

/// The inequalities as printed, `2^(2n) / |C| <= sum C(2n, i)` and the same
/// left side against `(1 + 3x + 2x^2 + x^4 + x^5)^n`, under both readings of
/// `n` for a code on `pairs` symbol pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedSphereBounds {
    pub binomial_pair: u32,
    pub binomial_digit: u32,
    pub polynomial_pair: u32,
    pub polynomial_digit: u32,
}

pub fn printed_sphere_bound(pairs: usize, code_size_log2: u32) -> PrintedSphereBounds {
    let binomial = |n: usize| {
        let target = ratio_target(2 * n as u32, code_size_log2);
        let two = [BigUint::one(), BigUint::one()];
        least_radius(&poly_pow(&two, 2 * n), &target)
    };
    let polynomial = |n: usize| {
        let target = ratio_target(2 * n as u32, code_size_log2);
        let base: Vec<BigUint> = [1u32, 3, 2, 0, 1, 1].iter().map(|&c| BigUint::from(c)).collect();
        least_radius(&poly_pow(&base, n), &target)
    };
    PrintedSphereBounds {
        binomial_pair: binomial(pairs),
        binomial_digit: binomial(2 * pairs),
        polynomial_pair: polynomial(pairs),
        polynomial_digit: polynomial(2 * pairs),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelsarteBound {
    /// Number of distinct nonzero Lee weights in the dual.
    pub s: u32,
    pub lee_upper: u32,
    pub euclidean_upper: u32,
}

pub fn delsarte_bound(code: &Code, budget: &Budget) -> Result<DelsarteBound> {
    let dual_log2 = code.ambient().size_log2() - code.size_log2();
    budget.check("dual enumeration", dual_log2, budget.coset_log2)?;
    let dual = code.dual(budget)?;
    let s = dual.weight_distribution(Metric::Lee, budget)?.distinct_nonzero() as u32;
    Ok(DelsarteBound {
        s,
        lee_upper: s,
        euclidean_upper: 3 * s,
    })
}

/// `r_L <= r_E <= 3 r_L`.
pub fn sandwich_check(lee: u32, euclidean: u32) -> bool {
    lee <= euclidean && euclidean <= 3 * lee
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub code_type: CodeType,
    /// Sphere-covering lower bound on the Lee radius.
    pub sphere_lower: u32,
    pub sphere_lower_euclidean: u32,
    /// `s(C^perp)`, absent when the dual is too large to enumerate.
    pub delsarte_s: Option<u32>,
    pub delsarte_euclidean: Option<u32>,
    /// Printed variants, for codes with as many binary as quaternary coordinates.
    pub printed: Option<PrintedSphereBounds>,
    pub notes: Vec<String>,
}

pub fn bound_report(code: &Code, budget: &Budget) -> Result<BoundReport> {
    let t = code.code_type();
    let s = code.size_log2();
    let mut notes = Vec::new();
    let delsarte = match delsarte_bound(code, budget) {
        Ok(d) => Some(d),
        Err(e @ Error::Budget { .. }) => {
            notes.push(format!("delsarte: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let printed = (t.gamma == t.delta).then(|| printed_sphere_bound(t.gamma, s));
    if printed.is_none() {
        notes.push("printed sphere-covering variants need gamma = delta".into());
    }
    Ok(BoundReport {
        code_type: t,
        sphere_lower: sphere_covering_bound(t.gamma, t.delta, s, Metric::Lee),
        sphere_lower_euclidean: sphere_covering_bound(t.gamma, t.delta, s, Metric::Euclidean),
        delsarte_s: delsarte.as_ref().map(|d| d.s),
        delsarte_euclidean: delsarte.as_ref().map(|d| d.euclidean_upper),
        printed,
        notes,
    })
}

/// Generator of `[0 | G1 ; G0 | A]`: the first block of coordinates carries
/// `C0`, the second `C1`. `A` defaults to zero, which gives the direct sum.
pub fn mattson_combined(
    g0: &GeneratorMatrix,
    g1: &GeneratorMatrix,
    a: Option<&GeneratorMatrix>,
) -> Result<GeneratorMatrix> {
    if let Some(a) = a {
        if a.shape() != g1.shape() || a.len() != g0.len() {
            return Err(Error::Parameter(format!(
                "A must have {} rows of shape {:?}, got {} rows of shape {:?}",
                g0.len(),
                g1.shape(),
                a.len(),
                a.shape()
            )));
        }
    }
    let (g0s, g1s) = (g0.shape(), g1.shape());
    let mut rows = Vec::with_capacity(g0.len() + g1.len());
    for r in g1.rows() {
        rows.push(MixedVector::zero(g0s.0, g0s.1).concat(r));
    }
    for (i, r) in g0.rows().iter().enumerate() {
        let right = a.map_or_else(|| MixedVector::zero(g1s.0, g1s.1), |a| a.rows()[i].clone());
        rows.push(r.concat(&right));
    }
    GeneratorMatrix::new(g0s.0 + g1s.0, g0s.1 + g1s.1, rows)
}

pub fn direct_sum(g0: &GeneratorMatrix, g1: &GeneratorMatrix) -> Result<GeneratorMatrix> {
    mattson_combined(g0, g1, None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MattsonReport {
    pub metric: Metric,
    pub r0: u32,
    pub r1: u32,
    pub combined: u32,
    /// `r(C) <= r(C0) + r(C1)`.
    pub holds: bool,
}

pub fn mattson_bound(c0: &Code, c1: &Code, combined: &Code, metric: Metric, budget: &Budget) -> Result<MattsonReport> {
    let radius =
        |c: &Code| -> Result<u32> { covering_radius_auto(c, metric, budget).map(|r: CoveringResult| r.radius) };
    let (r0, r1, rc) = (radius(c0)?, radius(c1)?, radius(combined)?);
    Ok(MattsonReport {
        metric,
        r0,
        r1,
        combined: rc,
        holds: rc <= r0 + r1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::repetition_code;

    fn coeffs(v: &[BigUint]) -> Vec<u32> {
        v.iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn per_pair_enumerators() {
        assert_eq!(
            coeffs(&weight_enumerator(1, 1, Metric::Euclidean)),
            vec![1, 3, 2, 0, 1, 1]
        );
        assert_eq!(coeffs(&weight_enumerator(1, 1, Metric::Lee)), vec![1, 3, 3, 1]);
        let total: BigUint = weight_enumerator(3, 2, Metric::Lee).iter().sum();
        assert_eq!(total, BigUint::from(1u32 << 7));
    }

    #[test]
    fn sphere_bound_edges() {
        assert_eq!(sphere_covering_bound(2, 3, 8, Metric::Lee), 0);
        assert_eq!(sphere_covering_bound(1, 1, 0, Metric::Lee), 3);
        // C_alpha2, one pair: |C| = 2, need 4 points per sphere: 1 + 3 >= 4.
        assert_eq!(sphere_covering_bound(1, 1, 1, Metric::Lee), 1);
        let p = printed_sphere_bound(1, 1);
        assert_eq!(p.binomial_pair, 1);
        assert_eq!(p.polynomial_pair, 1);
    }

    #[test]
    fn delsarte_on_small_codes() {
        let b = Budget::default();
        let full = Code::full(2, 1);
        assert_eq!(delsarte_bound(&full, &b).unwrap().s, 0);
        let c = Code::new(repetition_code(2, 1).unwrap());
        let d = delsarte_bound(&c, &b).unwrap();
        // Dual {(0|0),(0|2),(1|0),(1|2)} has Lee weights 1, 2, 3.
        assert_eq!(d.s, 3);
        assert!(2 <= d.lee_upper);
    }

    #[test]
    fn mattson_small() {
        let b = Budget::default();
        let g = repetition_code(2, 1).unwrap();
        let c = Code::new(g.clone());
        let combined = Code::new(mattson_combined(&g, &g, None).unwrap());
        for metric in [Metric::Lee, Metric::Euclidean] {
            let rep = mattson_bound(&c, &c, &combined, metric, &b).unwrap();
            assert!(rep.holds);
            assert_eq!(rep.combined, rep.r0 + rep.r1);
        }
        let full = Code::full(1, 1);
        let with_full = Code::new(mattson_combined(&g, full.matrix(), None).unwrap());
        let rep = mattson_bound(&c, &full, &with_full, Metric::Lee, &b).unwrap();
        assert!(rep.combined <= rep.r0);
    }

    #[test]
    fn sandwich() {
        assert!(sandwich_check(2, 2));
        assert!(sandwich_check(0, 0));
        assert!(!sandwich_check(2, 7));
        assert!(!sandwich_check(3, 2));
    }
}
