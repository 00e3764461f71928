//! Word-sized vectors and the indexed ambient space used by the exhaustive
//! engines.
//!
//! Every point of Z2^gamma x Z4^delta (for gamma + 2 delta <= 63) has an index
//! in `0..2^(gamma + 2 delta)`: the binary symbols form the high bits, the
//! quaternary symbols follow two bits each, and `x_1` is the most significant
//! digit. Index order is therefore lexicographic order of the vectors.

use serde::{Deserialize, Serialize};

use crate::alphabet::{Metric, MixedVector};
use crate::error::{Error, Result};

/// Largest budget exponent any caller may request.
pub const HARD_LIMIT_LOG2: u32 = 28;

/// Size limits for exhaustive work, as powers of two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest ambient space that may be swept.
    pub ambient_log2: u32,
    /// Largest number of cosets (and largest dual enumerated codeword by codeword).
    pub coset_log2: u32,
    /// Largest `ambient * |C|` product the max-min engines may attempt.
    pub pair_log2: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            ambient_log2: 24,
            coset_log2: 22,
            pair_log2: 36,
        }
    }
}

impl Budget {
    /// Budget derived from a single user-facing exponent.
    pub fn with_ambient_log2(log2: u32) -> Result<Self> {
        if log2 > HARD_LIMIT_LOG2 {
            return Err(Error::Budget {
                what: "requested budget",
                needed_log2: log2,
                limit_log2: HARD_LIMIT_LOG2,
            });
        }
        Ok(Self {
            ambient_log2: log2,
            coset_log2: log2.saturating_sub(2),
            pair_log2: log2 + 12,
        })
    }

    pub(crate) fn check(&self, what: &'static str, needed_log2: u32, limit_log2: u32) -> Result<()> {
        if needed_log2 > limit_log2 {
            Err(Error::Budget {
                what,
                needed_log2,
                limit_log2,
            })
        } else {
            Ok(())
        }
    }
}

/// A vector of Z2^gamma x Z4^delta with gamma, delta <= 64 held in three
/// machine words.
///
/// Bit layout: binary coordinate `i` lives at bit `gamma - 1 - i` of `bin`,
/// quaternary coordinate `j` at bit `delta - 1 - j` of `lo`/`hi`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub bin: u64,
    pub lo: u64,
    pub hi: u64,
}

#[allow(clippy::should_implement_trait)]
impl Word {
    pub const ZERO: Word = Word { bin: 0, lo: 0, hi: 0 };

    #[inline]
    pub fn add(self, other: Word) -> Word {
        let carry = self.lo & other.lo;
        Word {
            bin: self.bin ^ other.bin,
            lo: self.lo ^ other.lo,
            hi: self.hi ^ other.hi ^ carry,
        }
    }

    #[inline]
    pub fn neg(self) -> Word {
        Word {
            bin: self.bin,
            lo: self.lo,
            hi: self.hi ^ self.lo,
        }
    }

    #[inline]
    pub fn sub(self, other: Word) -> Word {
        self.add(other.neg())
    }

    #[inline]
    pub fn double(self) -> Word {
        Word {
            bin: 0,
            lo: 0,
            hi: self.lo,
        }
    }

    pub fn scalar_mul(self, a: u8) -> Word {
        match a & 3 {
            0 => Word::ZERO,
            1 => self,
            2 => self.double(),
            _ => self.neg(),
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        (self.bin | self.lo | self.hi) == 0
    }

    pub fn order(self) -> u8 {
        if self.is_zero() {
            1
        } else if self.lo == 0 {
            2
        } else {
            4
        }
    }

    #[inline]
    pub fn hamming(self) -> u32 {
        self.bin.count_ones() + (self.lo | self.hi).count_ones()
    }

    #[inline]
    pub fn lee(self) -> u32 {
        self.bin.count_ones() + self.lo.count_ones() + 2 * (self.hi & !self.lo).count_ones()
    }

    #[inline]
    pub fn euclidean(self) -> u32 {
        self.bin.count_ones() + self.lo.count_ones() + 4 * (self.hi & !self.lo).count_ones()
    }

    #[inline]
    pub fn weight(self, metric: Metric) -> u32 {
        match metric {
            Metric::Hamming => self.hamming(),
            Metric::Lee => self.lee(),
            Metric::Euclidean => self.euclidean(),
        }
    }

    /// Inner product mod 4.
    #[inline]
    pub fn inner(self, other: Word) -> u8 {
        let twice =
            (self.bin & other.bin).count_ones() + (self.lo & other.hi).count_ones() + (self.hi & other.lo).count_ones();
        (((self.lo & other.lo).count_ones() + 2 * twice) & 3) as u8
    }
}

/// Weight functions usable in monomorphised hot loops.
pub(crate) trait WeightKernel: Copy + Send + Sync {
    fn weight(w: Word) -> u32;
}

#[derive(Clone, Copy)]
pub(crate) struct HammingKernel;
#[derive(Clone, Copy)]
pub(crate) struct LeeKernel;
#[derive(Clone, Copy)]
pub(crate) struct EuclideanKernel;

impl WeightKernel for HammingKernel {
    #[inline]
    fn weight(w: Word) -> u32 {
        w.hamming()
    }
}

impl WeightKernel for LeeKernel {
    #[inline]
    fn weight(w: Word) -> u32 {
        w.lee()
    }
}

impl WeightKernel for EuclideanKernel {
    #[inline]
    fn weight(w: Word) -> u32 {
        w.euclidean()
    }
}

/// Calls `$body` with `$k` bound to the weight kernel type for `$metric`.
macro_rules! with_kernel {
    ($metric:expr, $k:ident => $body:expr) => {
        match $metric {
            $crate::alphabet::Metric::Hamming => {
                type $k = $crate::ambient::HammingKernel;
                $body
            }
            $crate::alphabet::Metric::Lee => {
                type $k = $crate::ambient::LeeKernel;
                $body
            }
            $crate::alphabet::Metric::Euclidean => {
                type $k = $crate::ambient::EuclideanKernel;
                $body
            }
        }
    };
}
pub(crate) use with_kernel;

fn compact_even(mut x: u64) -> u64 {
    x &= 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0f0f_0f0f_0f0f_0f0f;
    x = (x | (x >> 4)) & 0x00ff_00ff_00ff_00ff;
    x = (x | (x >> 8)) & 0x0000_ffff_0000_ffff;
    (x | (x >> 16)) & 0x0000_0000_ffff_ffff
}

fn spread_even(mut x: u64) -> u64 {
    x &= 0x0000_0000_ffff_ffff;
    x = (x | (x << 16)) & 0x0000_ffff_0000_ffff;
    x = (x | (x << 8)) & 0x00ff_00ff_00ff_00ff;
    x = (x | (x << 4)) & 0x0f0f_0f0f_0f0f_0f0f;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    (x | (x << 1)) & 0x5555_5555_5555_5555
}

/// The ambient group Z2^gamma x Z4^delta with index <-> word conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ambient {
    pub gamma: usize,
    pub delta: usize,
}

impl Ambient {
    pub fn new(gamma: usize, delta: usize) -> Self {
        Self { gamma, delta }
    }

    /// `log2` of the number of points, i.e. `gamma + 2 delta`.
    pub fn size_log2(&self) -> u32 {
        (self.gamma + 2 * self.delta) as u32
    }

    /// Whether vectors of this shape fit in a [`Word`].
    pub fn fits_word(&self) -> bool {
        self.gamma <= 64 && self.delta <= 64
    }

    /// Whether points of this shape can be indexed by a `u64`.
    pub fn indexable(&self) -> bool {
        self.size_log2() <= 63
    }

    pub fn size(&self) -> u64 {
        debug_assert!(self.indexable());
        1u64 << self.size_log2()
    }

    pub(crate) fn require_indexable(&self, budget: &Budget, what: &'static str) -> Result<()> {
        let limit = budget.ambient_log2.min(HARD_LIMIT_LOG2);
        budget.check(what, self.size_log2(), limit)
    }

    #[inline]
    pub fn word_at(&self, index: u64) -> Word {
        let qbits = 2 * self.delta;
        let quaternary = if qbits == 0 { 0 } else { index & ((1u64 << qbits) - 1) };
        Word {
            bin: if qbits >= 64 { 0 } else { index >> qbits },
            lo: compact_even(quaternary),
            hi: compact_even(quaternary >> 1),
        }
    }

    #[inline]
    pub fn index_of(&self, w: Word) -> u64 {
        let qbits = 2 * self.delta;
        let quaternary = spread_even(w.lo) | (spread_even(w.hi) << 1);
        if qbits >= 64 {
            quaternary
        } else {
            (w.bin << qbits) | quaternary
        }
    }

    pub fn to_word(&self, v: &MixedVector) -> Result<Word> {
        if v.shape() != (self.gamma, self.delta) {
            return Err(Error::Dimension {
                expected: (self.gamma, self.delta),
                found: v.shape(),
            });
        }
        if !self.fits_word() {
            return Err(Error::Parameter(format!(
                "vectors with gamma={} delta={} do not fit a 64-bit word",
                self.gamma, self.delta
            )));
        }
        let mut w = Word::ZERO;
        for i in 0..self.gamma {
            w.bin |= u64::from(v.binary(i)) << (self.gamma - 1 - i);
        }
        for j in 0..self.delta {
            let q = v.quaternary(j);
            let bit = self.delta - 1 - j;
            w.lo |= u64::from(q & 1) << bit;
            w.hi |= u64::from(q >> 1) << bit;
        }
        Ok(w)
    }

    pub fn to_vector(&self, w: Word) -> MixedVector {
        let mut v = MixedVector::zero(self.gamma, self.delta);
        for i in 0..self.gamma {
            v.set_binary(i, ((w.bin >> (self.gamma - 1 - i)) & 1) as u8);
        }
        for j in 0..self.delta {
            let bit = self.delta - 1 - j;
            let q = ((w.lo >> bit) & 1) | (((w.hi >> bit) & 1) << 1);
            v.set_quaternary(j, q as u8);
        }
        v
    }

    pub fn vector_at(&self, index: u64) -> MixedVector {
        self.to_vector(self.word_at(index))
    }

    /// Gray image of a word as a `gamma + 2 delta` bit integer, first
    /// coordinate most significant.
    pub fn gray_bits(&self, w: Word) -> u64 {
        // phi(q) = (hi, hi ^ lo): interleave the two planes.
        let first = w.hi;
        let second = w.hi ^ w.lo;
        let quaternary = (spread_even(first) << 1) | spread_even(second);
        let qbits = 2 * self.delta;
        if qbits >= 64 {
            quaternary
        } else {
            (w.bin << qbits) | quaternary
        }
    }

    /// Iterates every point of the ambient space in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = MixedVector> + '_ {
        (0..self.size()).map(move |i| self.vector_at(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::MixedVector;

    #[test]
    fn index_order_is_lexicographic() {
        let amb = Ambient::new(2, 2);
        let points: Vec<MixedVector> = amb.points().collect();
        assert_eq!(points.len(), 64);
        assert!(points.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(points[0].to_string(), "00 | 00");
        assert_eq!(points[1].to_string(), "00 | 01");
        assert_eq!(points[16].to_string(), "01 | 00");
    }

    #[test]
    fn word_round_trip() {
        let amb = Ambient::new(3, 5);
        for i in 0..amb.size() {
            let w = amb.word_at(i);
            assert_eq!(amb.index_of(w), i);
            let v = amb.to_vector(w);
            assert_eq!(amb.to_word(&v).unwrap(), w);
        }
    }

    #[test]
    fn word_arithmetic_matches_vectors() {
        let amb = Ambient::new(2, 2);
        for i in 0..amb.size() {
            for j in (0..amb.size()).step_by(7) {
                let (a, b) = (amb.word_at(i), amb.word_at(j));
                let (u, v) = (amb.to_vector(a), amb.to_vector(b));
                assert_eq!(amb.to_vector(a.add(b)), u.add(&v).unwrap());
                assert_eq!(amb.to_vector(a.sub(b)), u.sub(&v).unwrap());
                assert_eq!(a.inner(b), u.inner_product(&v).unwrap());
                for m in Metric::ALL {
                    assert_eq!(a.weight(m), u.weight(m));
                }
            }
        }
    }

    #[test]
    fn gray_bits_match_gray_map() {
        let amb = Ambient::new(2, 3);
        for i in 0..amb.size() {
            let w = amb.word_at(i);
            let v = amb.to_vector(w);
            assert_eq!(amb.gray_bits(w), v.gray_map().to_u64().unwrap());
        }
    }

    #[test]
    fn budget_hard_limit() {
        assert!(Budget::with_ambient_log2(28).is_ok());
        assert!(matches!(Budget::with_ambient_log2(29), Err(Error::Budget { .. })));
    }
}
