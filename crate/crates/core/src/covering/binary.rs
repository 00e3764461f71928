use serde::{Deserialize, Serialize};

use super::sweep::max_min_sweep;
use crate::alphabet::BinaryVector;
use crate::ambient::{Budget, HARD_LIMIT_LOG2};
use crate::codes::Code;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryCoveringResult {
    pub radius: u32,
    pub witness: BinaryVector,
}

/// Hamming covering radius of a binary code of length `n <= 63` given by its
/// codewords, first coordinate most significant.
pub fn binary_covering_radius(codewords: &[u64], n: usize, budget: &Budget) -> Result<BinaryCoveringResult> {
    if codewords.is_empty() {
        return Err(Error::Parameter("a code has at least the zero word".into()));
    }
    let size_log2 = n as u32;
    budget.check(
        "binary covering sweep",
        size_log2,
        budget.ambient_log2.min(HARD_LIMIT_LOG2),
    )?;
    let code_log2 = usize::BITS - (codewords.len() - 1).leading_zeros();
    budget.check(
        "binary covering sweep (space x code)",
        size_log2 + code_log2,
        budget.pair_log2,
    )?;
    let (radius, x) = max_min_sweep(1u64 << n, |x, floor| {
        let mut running = u32::MAX;
        for &c in codewords {
            let d = (x ^ c).count_ones();
            if d < running {
                running = d;
                if running < floor {
                    return None;
                }
            }
        }
        Some(running)
    });
    let bits: Vec<u8> = (0..n).map(|i| ((x >> (n - 1 - i)) & 1) as u8).collect();
    Ok(BinaryCoveringResult {
        radius,
        witness: BinaryVector::from_bits(&bits)?,
    })
}

/// Hamming covering radius of the Gray image of `code`.
pub fn gray_image_covering_radius(code: &Code, budget: &Budget) -> Result<BinaryCoveringResult> {
    let n = code.gamma() + 2 * code.delta();
    budget.check(
        "binary covering sweep",
        n as u32,
        budget.ambient_log2.min(HARD_LIMIT_LOG2),
    )?;
    budget.check("codeword enumeration", code.size_log2(), budget.ambient_log2)?;
    let words: Vec<u64> = code
        .codewords()
        .map(|c| c.gray_map().to_u64().expect("checked length"))
        .collect();
    binary_covering_radius(&words, n, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_repetition() {
        let b = Budget::default();
        for n in 1..=9usize {
            let r = binary_covering_radius(&[0, (1 << n) - 1], n, &b).unwrap();
            assert_eq!(r.radius, (n / 2) as u32);
        }
        let hamming: Vec<u64> = (0..16u64)
            .map(|m| {
                let d = [(m >> 3) & 1, (m >> 2) & 1, (m >> 1) & 1, m & 1];
                let p = [d[0] ^ d[1] ^ d[3], d[0] ^ d[2] ^ d[3], d[1] ^ d[2] ^ d[3]];
                (p[0] << 6) | (p[1] << 5) | (d[0] << 4) | (p[2] << 3) | (d[1] << 2) | (d[2] << 1) | d[3]
            })
            .collect();
        assert_eq!(binary_covering_radius(&hamming, 7, &b).unwrap().radius, 1);
    }
}
