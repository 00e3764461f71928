//! Builders for repetition, block repetition, simplex, MacDonald and additive
//! Reed-Muller codes. Column order is lexicographic throughout, with the
//! first row as the most significant digit.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::MixedVector;
use crate::codes::GeneratorMatrix;
use crate::error::{Error, Result};

/// Largest number of columns any builder will materialise.
pub const MAX_COLUMNS_LOG2: u32 = 22;

fn check_columns(what: &'static str, columns: u128) -> Result<()> {
    if columns > 1u128 << MAX_COLUMNS_LOG2 {
        let needed = 128 - (columns - 1).leading_zeros();
        return Err(Error::Budget {
            what,
            needed_log2: needed,
            limit_log2: MAX_COLUMNS_LOG2,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimplexVariant {
    Alpha,
    Beta,
}

impl SimplexVariant {
    pub fn name(self) -> &'static str {
        match self {
            SimplexVariant::Alpha => "alpha",
            SimplexVariant::Beta => "beta",
        }
    }
}

impl fmt::Display for SimplexVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SimplexVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alpha" | "a" => Ok(SimplexVariant::Alpha),
            "beta" | "b" => Ok(SimplexVariant::Beta),
            other => Err(Error::Parameter(format!("unknown variant `{other}`"))),
        }
    }
}

/// A matrix over Z2 or Z4 stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMatrix {
    pub modulus: u8,
    pub rows: Vec<Vec<u8>>,
}

impl ComponentMatrix {
    fn from_columns(modulus: u8, k: usize, columns: &[Vec<u8>]) -> Self {
        let rows = (0..k).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
        Self { modulus, rows }
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        (0..self.len()).map(|j| self.column(j)).collect()
    }

    /// Horizontal concatenation of `copies` copies.
    pub fn tile(&self, copies: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = Vec::with_capacity(r.len() * copies);
                for _ in 0..copies {
                    out.extend_from_slice(r);
                }
                out
            })
            .collect();
        Self {
            modulus: self.modulus,
            rows,
        }
    }

    /// Removes one occurrence of each column of `[0; removed]`, where the zero
    /// block pads `removed` up to this matrix's height.
    pub fn delete_padded_columns(&self, removed: &ComponentMatrix) -> Result<Self> {
        let k = self.k();
        let pad = k.checked_sub(removed.k()).ok_or_else(|| {
            Error::Construction(format!("cannot delete height-{} columns from height {k}", removed.k()))
        })?;
        let mut pending: HashMap<Vec<u8>, usize> = HashMap::new();
        for c in removed.columns() {
            let mut col = vec![0u8; pad];
            col.extend(c);
            *pending.entry(col).or_default() += 1;
        }
        let mut kept = Vec::with_capacity(self.len());
        for c in self.columns() {
            match pending.get_mut(&c) {
                Some(n) if *n > 0 => *n -= 1,
                _ => kept.push(c),
            }
        }
        if let Some((col, _)) = pending.iter().find(|(_, n)| **n > 0) {
            return Err(Error::Construction(format!(
                "column {col:?} to be deleted does not occur in the host matrix"
            )));
        }
        Ok(Self::from_columns(self.modulus, k, &kept))
    }
}

fn lexicographic_columns(radix: u8, k: usize, skip_zero: bool) -> Vec<Vec<u8>> {
    let count = (radix as usize).pow(k as u32);
    let start = usize::from(skip_zero);
    (start..count)
        .map(|mut c| {
            let mut col = vec![0u8; k];
            for i in (0..k).rev() {
                col[i] = (c % radix as usize) as u8;
                c /= radix as usize;
            }
            col
        })
        .collect()
}

/// Generator matrix of the binary simplex code: all `2^k` columns for alpha,
/// the `2^k - 1` nonzero ones for beta.
pub fn binary_simplex(k: usize, variant: SimplexVariant) -> Result<ComponentMatrix> {
    if k == 0 {
        return Err(Error::Parameter("simplex dimension k must be at least 1".into()));
    }
    check_columns("binary simplex columns", 1u128 << k.min(127))?;
    let skip_zero = variant == SimplexVariant::Beta;
    Ok(ComponentMatrix::from_columns(
        2,
        k,
        &lexicographic_columns(2, k, skip_zero),
    ))
}

/// Length of the quaternary beta simplex code, `2^(k-1) (2^k - 1)`.
pub fn quaternary_beta_length(k: usize) -> u128 {
    (1u128 << (k - 1)) * ((1u128 << k) - 1)
}

/// Generator matrix of the quaternary simplex code. Alpha takes all `4^k`
/// columns; beta follows
/// `G_k = [1..1 0..0 2..2 ; G_{k-1}^alpha G_{k-1} G_{k-1}]` from `G_1 = [1]`.
pub fn quaternary_simplex(k: usize, variant: SimplexVariant) -> Result<ComponentMatrix> {
    if k == 0 {
        return Err(Error::Parameter("simplex dimension k must be at least 1".into()));
    }
    match variant {
        SimplexVariant::Alpha => {
            check_columns("quaternary simplex columns", 1u128 << (2 * k).min(127))?;
            Ok(ComponentMatrix::from_columns(4, k, &lexicographic_columns(4, k, false)))
        }
        SimplexVariant::Beta => {
            check_columns("quaternary simplex columns", quaternary_beta_length(k.min(60)))?;
            if k == 1 {
                return Ok(ComponentMatrix {
                    modulus: 4,
                    rows: vec![vec![1]],
                });
            }
            let alpha = quaternary_simplex(k - 1, SimplexVariant::Alpha)?;
            let beta = quaternary_simplex(k - 1, SimplexVariant::Beta)?;
            let mut top = vec![1u8; alpha.len()];
            top.extend(std::iter::repeat_n(0, beta.len()));
            top.extend(std::iter::repeat_n(2, beta.len()));
            let mut rows = vec![top];
            for i in 0..k - 1 {
                let mut r = alpha.rows[i].clone();
                r.extend_from_slice(&beta.rows[i]);
                r.extend_from_slice(&beta.rows[i]);
                rows.push(r);
            }
            Ok(ComponentMatrix { modulus: 4, rows })
        }
    }
}

fn mixed_from_components(binary: &ComponentMatrix, quaternary: &ComponentMatrix) -> Result<GeneratorMatrix> {
    debug_assert_eq!(binary.k(), quaternary.k());
    let rows = binary
        .rows
        .iter()
        .zip(&quaternary.rows)
        .map(|(b, q)| MixedVector::new(b, q))
        .collect::<Result<Vec<_>>>()?;
    GeneratorMatrix::new(binary.len(), quaternary.len(), rows)
}

/// Tile counts `(binary, quaternary)` of the mixed simplex and MacDonald codes.
pub fn tile_counts(k: usize, variant: SimplexVariant) -> (usize, usize) {
    match variant {
        SimplexVariant::Alpha => (1 << (2 * k), 1 << k),
        SimplexVariant::Beta => (1 << k, 1 << (k - 1)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexParams {
    pub k: usize,
    pub variant: SimplexVariant,
    /// Allows beta with `k < 3`, which the construction does not cover.
    pub force: bool,
}

impl SimplexParams {
    pub fn alpha(k: usize) -> Self {
        Self {
            k,
            variant: SimplexVariant::Alpha,
            force: false,
        }
    }

    pub fn beta(k: usize) -> Self {
        Self {
            k,
            variant: SimplexVariant::Beta,
            force: false,
        }
    }

    /// `(gamma, delta)` of the mixed code.
    pub fn shape(&self) -> (u128, u128) {
        let k = self.k;
        match self.variant {
            SimplexVariant::Alpha => (1u128 << (3 * k), 1u128 << (3 * k)),
            SimplexVariant::Beta => (
                (1u128 << k) * ((1u128 << k) - 1),
                (1u128 << (k - 1)) * quaternary_beta_length(k),
            ),
        }
    }
}

/// The mixed simplex generator matrix: `k` rows, binary simplex tiled next
/// to quaternary simplex.
pub fn mixed_simplex(p: SimplexParams) -> Result<GeneratorMatrix> {
    let min_k = match (p.variant, p.force) {
        (SimplexVariant::Beta, false) => 3,
        _ => 1,
    };
    if p.k < min_k {
        return Err(Error::Parameter(format!(
            "{} simplex needs k >= {min_k}, got {}{}",
            p.variant,
            p.k,
            if min_k > 1 { " (use force for smaller k)" } else { "" }
        )));
    }
    if p.k > 10 {
        return Err(Error::Parameter(format!("k = {} is beyond any enumerable size", p.k)));
    }
    let (g, d) = p.shape();
    check_columns("mixed simplex columns", g + d)?;
    let (bt, qt) = tile_counts(p.k, p.variant);
    let b = binary_simplex(p.k, p.variant)?.tile(bt);
    let q = quaternary_simplex(p.k, p.variant)?.tile(qt);
    mixed_from_components(&b, &q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacDonaldParams {
    pub k: usize,
    pub u: usize,
    pub variant: SimplexVariant,
}

/// The MacDonald generator matrix: in every tile, delete one copy of each
/// column of `[0; simplex(u)]` from `simplex(k)`.
pub fn macdonald_matrix(p: MacDonaldParams) -> Result<GeneratorMatrix> {
    if p.u < 1 || p.u >= p.k {
        return Err(Error::Parameter(format!(
            "MacDonald needs 1 <= u <= k-1, got k={} u={}",
            p.k, p.u
        )));
    }
    if p.k > 10 {
        return Err(Error::Parameter(format!("k = {} is beyond any enumerable size", p.k)));
    }
    let (bt, qt) = tile_counts(p.k, p.variant);
    let b = binary_simplex(p.k, p.variant)?.delete_padded_columns(&binary_simplex(p.u, p.variant)?)?;
    let q = quaternary_simplex(p.k, p.variant)?.delete_padded_columns(&quaternary_simplex(p.u, p.variant)?)?;
    check_columns("MacDonald columns", (b.len() * bt) as u128 + (q.len() * qt) as u128)?;
    mixed_from_components(&b.tile(bt), &q.tile(qt))
}

/// One of the seven basic repetition codes, replicated over `n` pairs.
pub fn repetition_code(i: u8, n: usize) -> Result<GeneratorMatrix> {
    if n == 0 {
        return Err(Error::Parameter("repetition length n must be at least 1".into()));
    }
    let pairs: &[(u8, u8)] = match i {
        1 => &[(0, 1)],
        2 => &[(0, 2)],
        3 => &[(0, 3)],
        4 => &[(1, 0)],
        5 => &[(1, 1), (1, 0)],
        6 => &[(1, 0), (0, 2)],
        7 => &[(1, 3), (1, 0)],
        _ => return Err(Error::Parameter(format!("repetition index must be 1..=7, got {i}"))),
    };
    let rows = pairs
        .iter()
        .map(|&(b, q)| MixedVector::constant_pair(b, q, n))
        .collect();
    GeneratorMatrix::new(n, n, rows)
}

/// Block lengths `n1..n7`; block `i` holds the constant pair whose value is
/// `i` read as two bits `(b, q)`: 01, 02, 03, 10, 11, 12, 13.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRepetitionSpec {
    pub blocks: [usize; 7],
}

/// Symbol pair filling block `i` (1-based) of the generator.
pub const BLOCK_PAIRS: [(u8, u8); 7] = [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3)];

/// Per-block pairs of the eight vectors listed for the block repetition code,
/// including the zero vector first.
pub const LISTED_VECTORS: [[(u8, u8); 7]; 8] = [
    [(0, 0); 7],
    [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3)],
    [(0, 1), (0, 2), (0, 3), (0, 0), (0, 1), (0, 2), (0, 3)],
    [(0, 2), (0, 1), (0, 2), (0, 0), (0, 2), (0, 1), (0, 2)],
    [(0, 3), (0, 2), (0, 1), (0, 0), (0, 3), (1, 0), (0, 1)],
    [(0, 0), (0, 0), (0, 0), (1, 0), (1, 0), (1, 0), (1, 0)],
    [(0, 2), (0, 0), (0, 2), (1, 0), (1, 2), (1, 0), (1, 2)],
    [(0, 3), (0, 2), (0, 1), (1, 0), (1, 3), (1, 2), (1, 1)],
];

impl BlockRepetitionSpec {
    pub fn new(blocks: [usize; 7]) -> Result<Self> {
        if blocks.iter().all(|&b| b == 0) {
            return Err(Error::Parameter(
                "block repetition needs at least one nonempty block".into(),
            ));
        }
        Ok(Self { blocks })
    }

    /// Total pair count `n1 + ... + n7`.
    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    fn vector(&self, pairs: &[(u8, u8); 7]) -> MixedVector {
        let mut binary = Vec::with_capacity(self.n());
        let mut quaternary = Vec::with_capacity(self.n());
        for (&len, &(b, q)) in self.blocks.iter().zip(pairs) {
            binary.extend(std::iter::repeat_n(b, len));
            quaternary.extend(std::iter::repeat_n(q, len));
        }
        MixedVector::new(&binary, &quaternary).expect("pairs are residues")
    }
}

impl FromStr for BlockRepetitionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 7 {
            return Err(Error::Parameter(format!(
                "expected 7 block lengths, got {}",
                parts.len()
            )));
        }
        let mut blocks = [0usize; 7];
        for (slot, p) in blocks.iter_mut().zip(parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parameter(format!("`{p}` is not a block length")))?;
        }
        Self::new(blocks)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockSpan {
    /// The one-row generator.
    Generator,
    /// The eight listed vectors.
    PaperListed,
}

impl FromStr for BlockSpan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generator" => Ok(BlockSpan::Generator),
            "paper-listed" | "paper_listed" => Ok(BlockSpan::PaperListed),
            other => Err(Error::Parameter(format!("unknown span `{other}`"))),
        }
    }
}

impl fmt::Display for BlockSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockSpan::Generator => "generator",
            BlockSpan::PaperListed => "paper_listed",
        })
    }
}

pub fn block_repetition(spec: &BlockRepetitionSpec, span: BlockSpan) -> GeneratorMatrix {
    let n = spec.n();
    let rows = match span {
        BlockSpan::Generator => vec![spec.vector(&BLOCK_PAIRS)],
        BlockSpan::PaperListed => LISTED_VECTORS[1..].iter().map(|p| spec.vector(p)).collect(),
    };
    GeneratorMatrix::new(n, n, rows).expect("block vectors have n pairs")
}

/// Row layout of the first-order additive Reed-Muller generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArmLayout {
    /// Alternating blocks of 0 and 2 of size `2^((m-1)-i)`, `i = 2..m-1`.
    Alternating,
    /// `[0 | 2 S]` with `S` the binary alpha simplex on `m-2` rows.
    HalfSimplex,
}

impl FromStr for ArmLayout {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alternating" => Ok(ArmLayout::Alternating),
            "half-simplex" | "half_simplex" => Ok(ArmLayout::HalfSimplex),
            other => Err(Error::Parameter(format!("unknown layout `{other}`"))),
        }
    }
}

impl fmt::Display for ArmLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArmLayout::Alternating => "alternating",
            ArmLayout::HalfSimplex => "half_simplex",
        })
    }
}

/// `G(1, m-1)`: `m-1` rows over `2^(m-1)` pairs, the last one constant `(1|1)`.
pub fn arm_first_order(m: usize, layout: ArmLayout) -> Result<GeneratorMatrix> {
    if !(3..=20).contains(&m) {
        return Err(Error::Parameter(format!("first-order ARM needs 3 <= m <= 20, got {m}")));
    }
    let n = 1usize << (m - 1);
    let mut rows = Vec::with_capacity(m - 1);
    match layout {
        ArmLayout::Alternating => {
            for i in 2..m {
                let block = 1usize << ((m - 1) - i);
                let q: Vec<u8> = (0..n).map(|j| if (j / block) % 2 == 1 { 2 } else { 0 }).collect();
                rows.push(MixedVector::new(&vec![0; n], &q)?);
            }
        }
        ArmLayout::HalfSimplex => {
            let half = n / 2;
            for r in &binary_simplex(m - 2, SimplexVariant::Alpha)?.rows {
                let mut q = vec![0u8; half];
                q.extend(r.iter().map(|&b| 2 * b));
                rows.push(MixedVector::new(&vec![0; n], &q)?);
            }
        }
    }
    rows.push(MixedVector::constant_pair(1, 1, n));
    GeneratorMatrix::new(n, n, rows)
}

/// `ARM(r, m)` with `gamma = 2^(m-1)` and `delta = 2^(m-2)`, built by the
/// `(u | u+v)` recursion applied to the binary and quaternary parts
/// separately.
pub fn arm_recursive(r: usize, m: usize) -> Result<GeneratorMatrix> {
    if m < 2 || r > m || m > 16 {
        return Err(Error::Parameter(format!(
            "ARM(r, m) needs 0 <= r <= m and 2 <= m <= 16, got r={r} m={m}"
        )));
    }
    let gamma = 1usize << (m - 1);
    let delta = 1usize << (m - 2);
    if r == 0 {
        let rows = vec![MixedVector::new(&vec![1; gamma], &vec![2; delta])?];
        return GeneratorMatrix::new(gamma, delta, rows);
    }
    if r == m {
        return Ok(crate::codes::Code::full(gamma, delta).matrix().clone());
    }
    if m == 2 {
        let rows = vec!["11 | 2".parse()?, "01 | 1".parse()?];
        return GeneratorMatrix::new(2, 1, rows);
    }
    let top = arm_recursive(r, m - 1)?;
    let bottom = arm_recursive(r - 1, m - 1)?;
    let (hg, hd) = top.shape();
    let mut rows = Vec::with_capacity(top.len() + bottom.len());
    for u in top.rows() {
        let b = u.binary_part();
        let q = u.quaternary_part();
        rows.push(MixedVector::new(&[b.clone(), b].concat(), &[q.clone(), q].concat())?);
    }
    for v in bottom.rows() {
        let b = [vec![0; hg], v.binary_part()].concat();
        let q = [vec![0; hd], v.quaternary_part()].concat();
        rows.push(MixedVector::new(&b, &q)?);
    }
    GeneratorMatrix::new(gamma, delta, rows)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::alphabet::Metric;
    use crate::ambient::Budget;
    use crate::codes::Code;

    fn words(g: &GeneratorMatrix) -> BTreeSet<String> {
        Code::new(g.clone()).codewords().map(|c| c.to_string()).collect()
    }

    #[test]
    fn small_component_simplices() {
        assert_eq!(binary_simplex(1, SimplexVariant::Alpha).unwrap().rows, vec![vec![0, 1]]);
        assert_eq!(
            quaternary_simplex(1, SimplexVariant::Alpha).unwrap().rows,
            vec![vec![0, 1, 2, 3]]
        );
        assert_eq!(
            quaternary_simplex(2, SimplexVariant::Beta).unwrap().rows,
            vec![vec![1, 1, 1, 1, 0, 2], vec![0, 1, 2, 3, 1, 1]]
        );
        assert_eq!(
            binary_simplex(2, SimplexVariant::Beta).unwrap().rows,
            vec![vec![0, 1, 1], vec![1, 0, 1]]
        );
    }

    #[test]
    fn quaternary_beta_lengths_and_sizes() {
        for k in 1..=3 {
            let q = quaternary_simplex(k, SimplexVariant::Beta).unwrap();
            assert_eq!(q.len() as u128, quaternary_beta_length(k));
            let g = mixed_from_components(&ComponentMatrix::from_columns(2, k, &[vec![0; k]]), &q).unwrap();
            assert_eq!(Code::new(g).size_log2(), 2 * k as u32);
        }
    }

    #[test]
    fn mixed_simplex_shapes() {
        let a1 = mixed_simplex(SimplexParams::alpha(1)).unwrap();
        assert_eq!(a1.shape(), (8, 8));
        assert_eq!(Code::new(a1).size_log2(), 2);
        let b3 = mixed_simplex(SimplexParams::beta(3)).unwrap();
        assert_eq!(b3.shape(), (56, 112));
        assert!(mixed_simplex(SimplexParams::beta(2)).is_err());
        let forced = mixed_simplex(SimplexParams {
            force: true,
            ..SimplexParams::beta(2)
        })
        .unwrap();
        assert_eq!(forced.shape(), (12, 12));
    }

    #[test]
    fn builders_are_deterministic() {
        assert_eq!(
            mixed_simplex(SimplexParams::alpha(2)).unwrap(),
            mixed_simplex(SimplexParams::alpha(2)).unwrap()
        );
        let p = MacDonaldParams {
            k: 3,
            u: 1,
            variant: SimplexVariant::Beta,
        };
        assert_eq!(macdonald_matrix(p).unwrap(), macdonald_matrix(p).unwrap());
    }

    #[test]
    fn macdonald_column_counts() {
        for k in 2..=3usize {
            for u in 1..k {
                let g = macdonald_matrix(MacDonaldParams {
                    k,
                    u,
                    variant: SimplexVariant::Alpha,
                })
                .unwrap();
                assert_eq!(g.gamma(), (1 << (2 * k)) * ((1 << k) - (1 << u)));
                assert_eq!(g.delta(), (1 << k) * ((1 << (2 * k)) - (1 << (2 * u))));
                let b = macdonald_matrix(MacDonaldParams {
                    k,
                    u,
                    variant: SimplexVariant::Beta,
                })
                .unwrap();
                assert_eq!(b.gamma(), (1 << k) * ((1 << k) - (1 << u)));
                let qlen = quaternary_beta_length(k) - quaternary_beta_length(u);
                assert_eq!(b.delta() as u128, (1u128 << (k - 1)) * qlen);
            }
        }
        assert!(macdonald_matrix(MacDonaldParams {
            k: 2,
            u: 2,
            variant: SimplexVariant::Alpha
        })
        .is_err());
    }

    #[test]
    fn macdonald_deletes_low_columns() {
        let host = binary_simplex(2, SimplexVariant::Alpha).unwrap();
        let cut = host
            .delete_padded_columns(&binary_simplex(1, SimplexVariant::Alpha).unwrap())
            .unwrap();
        assert_eq!(cut.columns(), vec![vec![1, 0], vec![1, 1]]);
        let missing = ComponentMatrix {
            modulus: 2,
            rows: vec![vec![1]],
        };
        let host1 = ComponentMatrix {
            modulus: 2,
            rows: vec![vec![0]],
        };
        assert!(host1.delete_padded_columns(&missing).is_err());
    }

    #[test]
    fn repetition_listings() {
        assert_eq!(
            words(&repetition_code(1, 1).unwrap()),
            BTreeSet::from(["0 | 0", "0 | 1", "0 | 2", "0 | 3"].map(String::from))
        );
        let c5 = words(&repetition_code(5, 1).unwrap());
        assert_eq!(c5.len(), 8);
        assert_eq!(c5, words(&repetition_code(7, 1).unwrap()));
        assert_eq!(
            words(&repetition_code(4, 2).unwrap()),
            BTreeSet::from(["00 | 00", "11 | 00"].map(String::from))
        );
        assert_eq!(words(&repetition_code(6, 3).unwrap()).len(), 4);
        assert_eq!(words(&repetition_code(2, 3).unwrap()).len(), 2);
        assert!(repetition_code(8, 1).is_err());
        assert!(repetition_code(1, 0).is_err());
    }

    #[test]
    fn block_repetition_spans() {
        let only = |i: usize| {
            let mut b = [0; 7];
            b[i] = 1;
            BlockRepetitionSpec::new(b).unwrap()
        };
        assert_eq!(
            words(&block_repetition(&only(0), BlockSpan::Generator)),
            BTreeSet::from(["0 | 0", "0 | 1", "0 | 2", "0 | 3"].map(String::from))
        );
        assert_eq!(words(&block_repetition(&only(3), BlockSpan::Generator)).len(), 2);
        let all = BlockRepetitionSpec::new([1; 7]).unwrap();
        assert_eq!(words(&block_repetition(&all, BlockSpan::Generator)).len(), 4);
        let listed = Code::new(block_repetition(&all, BlockSpan::PaperListed));
        assert!(listed.size_log2() > 2);
        assert!("1,2,3".parse::<BlockRepetitionSpec>().is_err());
        assert!("0,0,0,0,0,0,0".parse::<BlockRepetitionSpec>().is_err());
        assert_eq!("1,0,0,0,0,0,2".parse::<BlockRepetitionSpec>().unwrap().n(), 3);
    }

    #[test]
    fn arm_first_order_layouts() {
        let g = arm_first_order(3, ArmLayout::Alternating).unwrap();
        assert_eq!(g.rows()[0].to_string(), "0000 | 0202");
        assert_eq!(g.rows()[1].to_string(), "1111 | 1111");
        assert_eq!(Code::new(g).size_log2(), 3);
        let g4 = arm_first_order(4, ArmLayout::Alternating).unwrap();
        assert_eq!(g4.len(), 3);
        assert_eq!(g4.shape(), (8, 8));
        assert_eq!(g4.rows()[0].quaternary_part(), vec![0, 0, 2, 2, 0, 0, 2, 2]);
        for m in 3..=5 {
            for layout in [ArmLayout::Alternating, ArmLayout::HalfSimplex] {
                let c = Code::new(arm_first_order(m, layout).unwrap());
                assert_eq!(c.size_log2(), m as u32);
                let order_two = c.codewords().filter(|w| w.order() <= 2).count();
                assert_eq!(order_two, 1 << (m - 1));
            }
        }
        let h = arm_first_order(3, ArmLayout::HalfSimplex).unwrap();
        assert_eq!(h.rows()[0].to_string(), "0000 | 0002");
    }

    #[test]
    fn arm_recursive_parameters() {
        let budget = Budget::default();
        for (r, m) in [(1usize, 3usize), (1, 4), (2, 4), (0, 3), (3, 3), (1, 2)] {
            let c = Code::new(arm_recursive(r, m).unwrap());
            let k: u32 = (0..=r).map(|i| binom(m, i)).sum();
            assert_eq!(c.size_log2(), k, "size of ARM({r},{m})");
            assert_eq!(
                c.minimum_distance(Metric::Lee, &budget).unwrap(),
                1 << (m - r),
                "d of ARM({r},{m})"
            );
        }
        assert!(arm_recursive(3, 2).is_err());
    }

    fn binom(n: usize, k: usize) -> u32 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64) as u32
    }
}
