//! Arithmetic on the mixed alphabet Z2^gamma x Z4^delta.
//!
//! A [`MixedVector`] keeps its binary coordinates in one bit plane and its
//! quaternary coordinates in two bit planes (`lo` holds bit 0 of every
//! residue, `hi` holds bit 1). Addition, negation, weights and the inner
//! product all work a machine word at a time on those planes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distance used for weights, distances and covering radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Hamming,
    Lee,
    Euclidean,
}

impl Metric {
    pub const ALL: [Metric; 3] = [Metric::Hamming, Metric::Lee, Metric::Euclidean];

    /// Weight contributed by one quaternary symbol.
    pub fn quaternary_weight(self, q: u8) -> u32 {
        const HAMMING: [u32; 4] = [0, 1, 1, 1];
        const LEE: [u32; 4] = [0, 1, 2, 1];
        const EUCLIDEAN: [u32; 4] = [0, 1, 4, 1];
        let table = match self {
            Metric::Hamming => &HAMMING,
            Metric::Lee => &LEE,
            Metric::Euclidean => &EUCLIDEAN,
        };
        table[(q & 3) as usize]
    }

    /// Weight contributed by one binary symbol (identical for all metrics).
    pub fn binary_weight(self, b: u8) -> u32 {
        u32::from(b & 1)
    }

    /// Largest weight a single quaternary symbol can carry.
    pub fn max_quaternary_weight(self) -> u32 {
        match self {
            Metric::Hamming => 1,
            Metric::Lee => 2,
            Metric::Euclidean => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Lee => "lee",
            Metric::Euclidean => "euclidean",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hamming" => Ok(Metric::Hamming),
            "lee" => Ok(Metric::Lee),
            "euclidean" | "euclid" => Ok(Metric::Euclidean),
            other => Err(Error::Parameter(format!("unknown metric `{other}`"))),
        }
    }
}

/// The Gray image of one quaternary symbol: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
pub fn gray_symbol(q: u8) -> (u8, u8) {
    match q & 3 {
        0 => (0, 0),
        1 => (0, 1),
        2 => (1, 1),
        _ => (1, 0),
    }
}

fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

fn get_bit(plane: &[u64], i: usize) -> u8 {
    ((plane[i / 64] >> (i % 64)) & 1) as u8
}

fn put_bit(plane: &mut [u64], i: usize, bit: u8) {
    let mask = 1u64 << (i % 64);
    if bit & 1 == 1 {
        plane[i / 64] |= mask;
    } else {
        plane[i / 64] &= !mask;
    }
}

fn popcount(plane: &[u64]) -> u32 {
    plane.iter().map(|w| w.count_ones()).sum()
}

/// A binary word of arbitrary length, packed 64 bits per machine word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    len: usize,
    bits: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            bits: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::Symbol { value: b, modulus: 2 });
            }
            put_bit(&mut v.bits, i, b);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        get_bit(&self.bits, i)
    }

    pub fn set(&mut self, i: usize, bit: u8) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        put_bit(&mut self.bits, i, bit);
    }

    pub fn weight(&self) -> u32 {
        popcount(&self.bits)
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<u32> {
        if self.len != other.len {
            return Err(Error::Dimension {
                expected: (self.len, 0),
                found: (other.len, 0),
            });
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum())
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Packs the vector into a `u64`, first coordinate in the most significant
    /// position. Only defined for lengths up to 64.
    pub fn to_u64(&self) -> Option<u64> {
        if self.len > 64 {
            return None;
        }
        Some((0..self.len).fold(0u64, |acc, i| (acc << 1) | u64::from(self.get(i))))
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

/// An element of Z2^gamma x Z4^delta.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedVector {
    gamma: usize,
    delta: usize,
    bin: Vec<u64>,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl MixedVector {
    pub fn zero(gamma: usize, delta: usize) -> Self {
        Self {
            gamma,
            delta,
            bin: vec![0; words_for(gamma)],
            lo: vec![0; words_for(delta)],
            hi: vec![0; words_for(delta)],
        }
    }

    /// Builds a vector from explicit residues, rejecting out-of-range symbols.
    pub fn new(binary: &[u8], quaternary: &[u8]) -> Result<Self> {
        let mut v = Self::zero(binary.len(), quaternary.len());
        for (i, &b) in binary.iter().enumerate() {
            if b > 1 {
                return Err(Error::Symbol { value: b, modulus: 2 });
            }
            put_bit(&mut v.bin, i, b);
        }
        for (j, &q) in quaternary.iter().enumerate() {
            if q > 3 {
                return Err(Error::Symbol { value: q, modulus: 4 });
            }
            v.set_quaternary(j, q);
        }
        Ok(v)
    }

    /// The constant vector repeating the pair (b | q) across `pairs` positions.
    pub fn constant_pair(b: u8, q: u8, pairs: usize) -> Self {
        let mut v = Self::zero(pairs, pairs);
        for i in 0..pairs {
            v.set_binary(i, b & 1);
            v.set_quaternary(i, q & 3);
        }
        v
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

    pub fn binary(&self, i: usize) -> u8 {
        assert!(i < self.gamma, "binary index {i} out of range (gamma={})", self.gamma);
        get_bit(&self.bin, i)
    }

    pub fn quaternary(&self, j: usize) -> u8 {
        assert!(
            j < self.delta,
            "quaternary index {j} out of range (delta={})",
            self.delta
        );
        get_bit(&self.lo, j) | (get_bit(&self.hi, j) << 1)
    }

    pub fn set_binary(&mut self, i: usize, b: u8) {
        assert!(i < self.gamma, "binary index {i} out of range (gamma={})", self.gamma);
        put_bit(&mut self.bin, i, b & 1);
    }

    pub fn set_quaternary(&mut self, j: usize, q: u8) {
        assert!(
            j < self.delta,
            "quaternary index {j} out of range (delta={})",
            self.delta
        );
        put_bit(&mut self.lo, j, q & 1);
        put_bit(&mut self.hi, j, (q >> 1) & 1);
    }

    pub fn binary_part(&self) -> Vec<u8> {
        (0..self.gamma).map(|i| self.binary(i)).collect()
    }

    pub fn quaternary_part(&self) -> Vec<u8> {
        (0..self.delta).map(|j| self.quaternary(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.bin.iter().chain(&self.lo).chain(&self.hi).all(|&w| w == 0)
    }

    /// Additive order: 1 for zero, 2 when `2v = 0`, 4 otherwise.
    pub fn order(&self) -> u8 {
        if self.is_zero() {
            1
        } else if self.lo.iter().all(|&w| w == 0) {
            2
        } else {
            4
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension {
                expected: self.shape(),
                found: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(&other.neg());
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (a, b) in self.bin.iter_mut().zip(&other.bin) {
            *a ^= b;
        }
        for w in 0..self.lo.len() {
            let carry = self.lo[w] & other.lo[w];
            self.lo[w] ^= other.lo[w];
            self.hi[w] ^= other.hi[w] ^ carry;
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for (h, l) in out.hi.iter_mut().zip(&self.lo) {
            *h ^= l;
        }
        out
    }

    /// Multiplication by `a` in Z4; binary coordinates see `a mod 2`.
    pub fn scalar_mul(&self, a: u8) -> Self {
        match a & 3 {
            0 => Self::zero(self.gamma, self.delta),
            1 => self.clone(),
            2 => {
                let mut out = Self::zero(self.gamma, self.delta);
                out.hi.clone_from(&self.lo);
                out
            }
            _ => self.neg(),
        }
    }

    pub fn weight(&self, metric: Metric) -> u32 {
        let binary = popcount(&self.bin);
        let odd = popcount(&self.lo);
        let twos: u32 = self.hi.iter().zip(&self.lo).map(|(h, l)| (h & !l).count_ones()).sum();
        binary
            + match metric {
                Metric::Hamming => odd + twos,
                Metric::Lee => odd + 2 * twos,
                Metric::Euclidean => odd + 4 * twos,
            }
    }

    pub fn distance(&self, other: &Self, metric: Metric) -> Result<u32> {
        Ok(self.sub(other)?.weight(metric))
    }

    /// `2 * sum(binary products) + sum(quaternary products)` reduced mod 4.
    pub fn inner_product(&self, other: &Self) -> Result<u8> {
        self.check_shape(other)?;
        Ok(self.inner_product_unchecked(other))
    }

    pub(crate) fn inner_product_unchecked(&self, other: &Self) -> u8 {
        let mut total: u32 = 0;
        for (a, b) in self.bin.iter().zip(&other.bin) {
            total += 2 * (a & b).count_ones();
        }
        for w in 0..self.lo.len() {
            total += (self.lo[w] & other.lo[w]).count_ones();
            total += 2 * (self.lo[w] & other.hi[w]).count_ones();
            total += 2 * (self.hi[w] & other.lo[w]).count_ones();
        }
        (total & 3) as u8
    }

    pub fn gray_map(&self) -> BinaryVector {
        let mut out = BinaryVector::zeros(self.gamma + 2 * self.delta);
        for i in 0..self.gamma {
            out.set(i, self.binary(i));
        }
        for j in 0..self.delta {
            let (a, b) = gray_symbol(self.quaternary(j));
            out.set(self.gamma + 2 * j, a);
            out.set(self.gamma + 2 * j + 1, b);
        }
        out
    }

    /// Concatenation `(self.binary ‖ other.binary | self.quaternary ‖ other.quaternary)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.gamma + other.gamma, self.delta + other.delta);
        for i in 0..self.gamma {
            out.set_binary(i, self.binary(i));
        }
        for i in 0..other.gamma {
            out.set_binary(self.gamma + i, other.binary(i));
        }
        for j in 0..self.delta {
            out.set_quaternary(j, self.quaternary(j));
        }
        for j in 0..other.delta {
            out.set_quaternary(self.delta + j, other.quaternary(j));
        }
        out
    }

    fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.gamma)
            .map(|i| self.binary(i))
            .chain((0..self.delta).map(|j| self.quaternary(j)))
    }
}

impl PartialOrd for MixedVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shape first, then lexicographic on `(x_1, .., x_gamma, y_1, .., y_delta)`.
impl Ord for MixedVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.symbols().cmp(other.symbols()))
    }
}

impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.gamma {
            write!(f, "{}", self.binary(i))?;
        }
        f.write_str(" | ")?;
        for j in 0..self.delta {
            write!(f, "{}", self.quaternary(j))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedVector({self})")
    }
}

fn parse_digits(text: &str, modulus: u8) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for ch in text.chars() {
        if ch.is_whitespace() || ch == ',' {
            continue;
        }
        let d = ch.to_digit(10).ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("unexpected character `{ch}`"),
        })? as u8;
        if d >= modulus {
            return Err(Error::Symbol { value: d, modulus });
        }
        out.push(d);
    }
    Ok(out)
}

/// Parses `"<binary digits> | <quaternary digits>"`; whitespace between
/// digits is ignored.
impl FromStr for MixedVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (left, right) = s.split_once('|').ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("missing `|` separator in `{s}`"),
        })?;
        if right.contains('|') {
            return Err(Error::Parse {
                line: 0,
                message: format!("more than one `|` in `{s}`"),
            });
        }
        MixedVector::new(&parse_digits(left, 2)?, &parse_digits(right, 4)?)
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinaryVector::from_bits(&parse_digits(s, 2)?)
    }
}

macro_rules! string_serde {
    ($t:ty, $what:literal) => {
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse()
                    .map_err(|e| serde::de::Error::custom(format!(concat!("bad ", $what, ": {}"), e)))
            }
        }
    };
}

string_serde!(MixedVector, "mixed vector");
string_serde!(BinaryVector, "binary vector");

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> MixedVector {
        s.parse().unwrap()
    }

    #[test]
    fn gray_table() {
        assert_eq!(gray_symbol(0), (0, 0));
        assert_eq!(gray_symbol(1), (0, 1));
        assert_eq!(gray_symbol(2), (1, 1));
        assert_eq!(gray_symbol(3), (1, 0));
    }

    #[test]
    fn gray_map_examples() {
        assert_eq!(v("1 | 2").gray_map().to_bits(), vec![1, 1, 1]);
        assert_eq!(v("00 | 00").gray_map().to_bits(), vec![0; 6]);
        assert_eq!(v(" | 13").gray_map().to_bits(), vec![0, 1, 1, 0]);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(v("1 | 3").weight(Metric::Lee), 2);
        assert_eq!(v("1 | 3").gray_map().weight(), 2);
        assert_eq!(v("0 | 2").weight(Metric::Euclidean), 4);
        for m in Metric::ALL {
            assert_eq!(MixedVector::zero(3, 5).weight(m), 0);
        }
    }

    #[test]
    fn distance_examples() {
        assert_eq!(v("1 | 1").distance(&v("0 | 3"), Metric::Lee).unwrap(), 3);
        assert_eq!(v("0 | 0").distance(&v("1 | 2"), Metric::Euclidean).unwrap(), 5);
        let x = v("101 | 3120");
        for m in Metric::ALL {
            assert_eq!(x.distance(&x, m).unwrap(), 0);
        }
        assert!(matches!(
            v("1 | 1").distance(&v("10 | 1"), Metric::Lee),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(v("1 | 2").inner_product(&v("1 | 3")).unwrap(), 0);
        assert_eq!(v("1 | 1").inner_product(&v("1 | 1")).unwrap(), 3);
        assert_eq!(MixedVector::zero(1, 1).inner_product(&v("1 | 3")).unwrap(), 0);
    }

    #[test]
    fn module_action_examples() {
        assert_eq!(v("1 | 1").scalar_mul(2), v("0 | 2"));
        assert_eq!(v("1 | 2").scalar_mul(3), v("1 | 2"));
        assert_eq!(v("1 | 3").add(&v("1 | 3")).unwrap(), v("0 | 2"));
        assert_eq!(v("1 | 3").neg(), v("1 | 1"));
    }

    #[test]
    fn order_of_vectors() {
        assert_eq!(MixedVector::zero(2, 2).order(), 1);
        assert_eq!(v("1 | 2").order(), 2);
        assert_eq!(v("0 | 3").order(), 4);
    }

    #[test]
    fn text_round_trip() {
        let x = v("01 | 0123");
        assert_eq!(x.to_string(), "01 | 0123");
        assert_eq!(v("0 1|0 1 2 3"), x);
        assert_eq!(v(" | 13").to_string(), " | 13");
        assert!("01 0123".parse::<MixedVector>().is_err());
        assert!("2 | 0".parse::<MixedVector>().is_err());
        assert!("0 | 4".parse::<MixedVector>().is_err());
    }

    #[test]
    fn per_symbol_enumerators() {
        // All eight (binary, quaternary) symbol pairs.
        let mut euclid = [0u32; 6];
        let mut lee = [0u32; 4];
        for b in 0..2u8 {
            for q in 0..4u8 {
                let x = MixedVector::new(&[b], &[q]).unwrap();
                euclid[x.weight(Metric::Euclidean) as usize] += 1;
                lee[x.weight(Metric::Lee) as usize] += 1;
            }
        }
        assert_eq!(euclid, [1, 3, 2, 0, 1, 1]);
        assert_eq!(lee, [1, 3, 3, 1]);
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let gamma = 130;
        let delta = 70;
        let mut x = MixedVector::zero(gamma, delta);
        x.set_binary(129, 1);
        x.set_quaternary(65, 3);
        x.set_quaternary(0, 2);
        assert_eq!(x.weight(Metric::Lee), 1 + 1 + 2);
        let y = x.add(&x).unwrap();
        assert_eq!(y.quaternary(65), 2);
        assert_eq!(y.quaternary(0), 0);
        assert_eq!(y.binary(129), 0);
        assert_eq!(x.gray_map().len(), gamma + 2 * delta);
    }
}
