use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::oracle::{Instance, Oracle, Truth};
use super::{Claim, ClaimKind, ClaimValue, Computed, Evaluation, Family, Grid, Params, Rational};
use crate::alphabet::{Metric, MixedVector};
use crate::ambient::Budget;
use crate::codes::{is_dual_pair, parity_check_with, Code, GeneratorMatrix, ParityCheckVariant};
use crate::constructions::{block_repetition, ArmLayout, BlockRepetitionSpec, BlockSpan, SimplexVariant, BLOCK_PAIRS};
use crate::covering::{gray_image_covering_radius, mattson_combined, printed_sphere_bound};
use crate::error::{Error, Result};

const PAIR_DIGIT: &[&str] = &["pair", "digit"];
const PRINTED: &[&str] = &["printed"];
const COLUMN_READINGS: &[&str] = &["alpha_columns", "beta_columns"];

fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        int(1i128 << e)
    } else {
        Rational::new(1, 1i128 << -e)
    }
}

fn num(v: Rational) -> Result<Evaluation> {
    Ok(Ok(ClaimValue::Number(v)))
}

fn text(s: impl Into<String>) -> Result<Evaluation> {
    Ok(Ok(ClaimValue::text(s)))
}

fn get(p: &Params, key: &str) -> i64 {
    p.get(key)
        .and_then(serde_json::Value::as_i64)
        .unwrap_or_else(|| panic!("grid point lacks integer `{key}`"))
}

fn get_str<'a>(p: &'a Params, key: &str) -> &'a str {
    p.get(key)
        .and_then(serde_json::Value::as_str)
        .unwrap_or_else(|| panic!("grid point lacks string `{key}`"))
}

fn point(pairs: &[(&str, serde_json::Value)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Scale factor for a length `n` read as pairs or as digits.
fn scale(convention: &str) -> Rational {
    match convention {
        "digit" => int(2),
        _ => int(1),
    }
}

fn variant_of(p: &Params) -> SimplexVariant {
    get_str(p, "variant")
        .parse()
        .expect("variant names come from the registry")
}

// Instances are encoded in grid points by family name plus parameters.

fn instance_params(inst: &Instance) -> Params {
    match inst {
        Instance::Repetition { i, n } => point(&[
            ("family", json!("repetition")),
            ("code", json!(format!("Cα{i}"))),
            ("n", json!(n)),
        ]),
        Instance::Block { blocks, span } => point(&[
            ("family", json!("block_repetition")),
            ("blocks", json!(blocks_key(blocks))),
            ("span", json!(span.to_string())),
        ]),
        Instance::Simplex { k, variant } => point(&[
            ("family", json!("simplex")),
            ("k", json!(k)),
            ("variant", json!(variant.name())),
        ]),
        Instance::MacDonald { k, u, variant } => point(&[
            ("family", json!("macdonald")),
            ("k", json!(k)),
            ("u", json!(u)),
            ("variant", json!(variant.name())),
        ]),
        Instance::ArmFirst { m, layout } => point(&[
            ("family", json!("arm_first_order")),
            ("m", json!(m)),
            ("layout", json!(layout.to_string())),
        ]),
        Instance::ArmRecursive { r, m } => point(&[("family", json!("arm")), ("r", json!(r)), ("m", json!(m))]),
        Instance::Dual(inner) => {
            let mut p = instance_params(inner);
            p.insert("dual".into(), json!(true));
            p
        }
        Instance::SimplexComponent { .. } | Instance::MacDonaldComponent { .. } => {
            unreachable!("components are never grid points")
        }
    }
}

fn instance_of(p: &Params) -> Instance {
    let inst = match get_str(p, "family") {
        "repetition" => Instance::Repetition {
            i: get_str(p, "code").trim_start_matches("Cα").parse().expect("code label"),
            n: get(p, "n") as usize,
        },
        "block_repetition" => Instance::Block {
            blocks: blocks_of(p),
            span: get_str(p, "span").parse().expect("span label"),
        },
        "simplex" => Instance::Simplex {
            k: get(p, "k") as usize,
            variant: variant_of(p),
        },
        "macdonald" => Instance::MacDonald {
            k: get(p, "k") as usize,
            u: get(p, "u") as usize,
            variant: variant_of(p),
        },
        "arm_first_order" => Instance::ArmFirst {
            m: get(p, "m") as usize,
            layout: get_str(p, "layout").parse().expect("layout label"),
        },
        "arm" => Instance::ArmRecursive {
            r: get(p, "r") as usize,
            m: get(p, "m") as usize,
        },
        other => panic!("unknown family `{other}` in grid point"),
    };
    if p.get("dual").and_then(serde_json::Value::as_bool) == Some(true) {
        inst.dual()
    } else {
        inst
    }
}

fn blocks_key(b: &[usize; 7]) -> String {
    b.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn blocks_of(p: &Params) -> [usize; 7] {
    get_str(p, "blocks")
        .parse::<BlockRepetitionSpec>()
        .expect("block spec in grid point")
        .blocks
}

fn radius_of(o: &Oracle, inst: &Instance, metric: Metric) -> Result<Computed> {
    Ok(match o.radius(inst, metric)? {
        Truth::Known(r) => {
            Computed::known(ClaimValue::int(r.radius.into()), r.engine.name()).note(format!("witness {}", r.witness))
        }
        Truth::Unknown(reason) => Computed::unknown(reason),
    })
}

fn radius_value(o: &Oracle, inst: &Instance, metric: Metric) -> Result<std::result::Result<Rational, String>> {
    Ok(match o.radius(inst, metric)? {
        Truth::Known(r) => Ok(int(r.radius.into())),
        Truth::Unknown(reason) => Err(format!("{inst}: {reason}")),
    })
}

fn rep(p: &Params) -> Instance {
    instance_of(p)
}

fn rep_points(g: &Grid, codes: &[u8]) -> Vec<Params> {
    let mut out = Vec::new();
    for &i in codes {
        for &n in &g.n {
            out.push(instance_params(&Instance::Repetition { i, n }));
        }
    }
    out
}

fn block_points(g: &Grid, all_equal_only: bool) -> Vec<Params> {
    let mut out = Vec::new();
    for b in &g.blocks {
        if all_equal_only && b.iter().any(|&x| x != b[0]) {
            continue;
        }
        for span in [BlockSpan::Generator, BlockSpan::PaperListed] {
            out.push(instance_params(&Instance::Block { blocks: *b, span }));
        }
    }
    out
}

fn simplex_points(ks: &[usize], variant: SimplexVariant) -> Vec<Params> {
    ks.iter()
        .map(|&k| instance_params(&Instance::Simplex { k, variant }))
        .collect()
}

fn dual_simplex_points(g: &Grid) -> Vec<Params> {
    let mut out: Vec<Params> = g
        .k_mixed
        .iter()
        .map(|&k| {
            instance_params(
                &Instance::Simplex {
                    k,
                    variant: SimplexVariant::Alpha,
                }
                .dual(),
            )
        })
        .collect();
    out.extend(g.k_beta.iter().map(|&k| {
        instance_params(
            &Instance::Simplex {
                k,
                variant: SimplexVariant::Beta,
            }
            .dual(),
        )
    }));
    out
}

fn macdonald_pairs(g: &Grid, variant: SimplexVariant) -> Vec<(usize, usize)> {
    g.macdonald
        .iter()
        .copied()
        .filter(|&(k, _)| variant == SimplexVariant::Alpha || k >= 3)
        .collect()
}

fn macdonald_points(g: &Grid, variant: SimplexVariant) -> Vec<Params> {
    macdonald_pairs(g, variant)
        .into_iter()
        .map(|(k, u)| instance_params(&Instance::MacDonald { k, u, variant }))
        .collect()
}

fn macdonald_points_both(g: &Grid, dual: bool) -> Vec<Params> {
    let mut out = Vec::new();
    for variant in [SimplexVariant::Alpha, SimplexVariant::Beta] {
        for (k, u) in macdonald_pairs(g, variant) {
            let inst = Instance::MacDonald { k, u, variant };
            out.push(instance_params(&if dual { inst.dual() } else { inst }));
        }
    }
    out
}

/// Points `(k, u, r)` with `u <= r <= k`.
fn macdonald_r_points(g: &Grid, variant: SimplexVariant) -> Vec<Params> {
    let mut out = Vec::new();
    for (k, u) in macdonald_pairs(g, variant) {
        for r in u..=k {
            let mut p = instance_params(&Instance::MacDonald { k, u, variant });
            p.insert("r".into(), json!(r));
            out.push(p);
        }
    }
    out
}

fn arm_first_points(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for &m in &g.m {
        for layout in [ArmLayout::Alternating, ArmLayout::HalfSimplex] {
            out.push(instance_params(&Instance::ArmFirst { m, layout }));
        }
    }
    out
}

fn arm_recursive_points(g: &Grid) -> Vec<Params> {
    g.arm_recursive
        .iter()
        .map(|&(r, m)| instance_params(&Instance::ArmRecursive { r, m }))
        .collect()
}

/// Every constructed family instance the general identities are checked on.
fn general_instances(g: &Grid) -> Vec<Instance> {
    let mut out = Vec::new();
    for i in 1..=7 {
        for &n in &g.n {
            out.push(Instance::Repetition { i, n });
        }
    }
    for b in &g.blocks {
        for span in [BlockSpan::Generator, BlockSpan::PaperListed] {
            out.push(Instance::Block { blocks: *b, span });
        }
    }
    for &k in &g.k_mixed {
        out.push(Instance::Simplex {
            k,
            variant: SimplexVariant::Alpha,
        });
    }
    for &m in &g.m {
        for layout in [ArmLayout::Alternating, ArmLayout::HalfSimplex] {
            out.push(Instance::ArmFirst { m, layout });
        }
    }
    for &(r, m) in &g.arm_recursive {
        out.push(Instance::ArmRecursive { r, m });
    }
    out
}

fn general_points(g: &Grid) -> Vec<Params> {
    general_instances(g).iter().map(instance_params).collect()
}

/// Instances whose Gray image has binary length at most 20.
fn gray_small_points(g: &Grid) -> Vec<Params> {
    let budget = Budget::default();
    general_instances(g)
        .iter()
        .filter(|inst| {
            inst.build(&budget)
                .map(|c| c.gamma() + 2 * c.delta() <= 20)
                .unwrap_or(false)
        })
        .map(instance_params)
        .collect()
}

fn square_points(g: &Grid) -> Vec<Params> {
    let budget = Budget::default();
    general_instances(g)
        .iter()
        .filter(|inst| inst.build(&budget).map(|c| c.gamma() == c.delta()).unwrap_or(false))
        .map(instance_params)
        .collect()
}

fn shape_of(o: &Oracle, p: &Params) -> Result<Code> {
    Ok((*o.code(&instance_of(p))?).clone())
}

/// `(binary length, rows)` of the Gray image of the generator matrix.
fn gray_params(code: &Code) -> (usize, usize) {
    (code.gamma() + 2 * code.delta(), code.matrix().len())
}

/// Multiset of the columns of the row-wise Gray image, each column read as
/// a `k`-bit integer with the first row most significant.
fn gray_columns(g: &GeneratorMatrix) -> HashMap<u64, usize> {
    let images: Vec<_> = g.rows().iter().map(MixedVector::gray_map).collect();
    let len = g.gamma() + 2 * g.delta();
    let mut counts = HashMap::new();
    for j in 0..len {
        let col = images.iter().fold(0u64, |acc, r| (acc << 1) | u64::from(r.get(j)));
        *counts.entry(col).or_insert(0) += 1;
    }
    counts
}

fn describe_columns(counts: &HashMap<u64, usize>, k: usize) -> String {
    let zero = counts.get(&0).copied().unwrap_or(0);
    let nonzero: Vec<usize> = (1..1u64 << k).map(|c| counts.get(&c).copied().unwrap_or(0)).collect();
    let lo = nonzero.iter().copied().min().unwrap_or(0);
    let hi = nonzero.iter().copied().max().unwrap_or(0);
    if lo == hi && zero == lo {
        format!("{lo} copies of m_{k}^alpha")
    } else if lo == hi && zero == 0 {
        format!("{lo} copies of m_{k}^beta")
    } else if lo == hi {
        format!("{lo} copies of m_{k}^beta plus {zero} zero columns")
    } else {
        format!("irregular: {lo} to {hi} copies per nonzero column, {zero} zero columns")
    }
}

fn columns_claim(count: Rational, k: i64, convention: &str) -> Result<Evaluation> {
    let which = if convention == "alpha_columns" { "alpha" } else { "beta" };
    text(format!("{count} copies of m_{k}^{which}"))
}

fn columns_computed(p: &Params, o: &Oracle) -> Result<Computed> {
    let code = shape_of(o, p)?;
    let k = code.matrix().len();
    Ok(Computed::known(
        ClaimValue::text(describe_columns(&gray_columns(code.matrix()), k)),
        "gray_columns",
    ))
}

fn params_computed(p: &Params, o: &Oracle) -> Result<Computed> {
    let code = shape_of(o, p)?;
    let (len, rows) = gray_params(&code);
    Ok(
        Computed::known(ClaimValue::text(format!("[{len}; {rows}]")), "construction")
            .note(format!("log2 |C| = {}", code.size_log2())),
    )
}

fn length_computed(p: &Params, o: &Oracle) -> Result<Computed> {
    let code = shape_of(o, p)?;
    Ok(
        Computed::known(ClaimValue::int((code.gamma() + code.delta()) as i128), "construction").note(format!(
            "gamma={} delta={}",
            code.gamma(),
            code.delta()
        )),
    )
}

/// Radius of one MacDonald component; `r == u` leaves no columns.
fn component_radius(
    o: &Oracle,
    r: usize,
    u: usize,
    variant: SimplexVariant,
    quaternary: bool,
    metric: Metric,
) -> Result<std::result::Result<Rational, String>> {
    if r == u {
        return Ok(Ok(int(0)));
    }
    radius_value(
        o,
        &Instance::MacDonaldComponent {
            k: r,
            u,
            variant,
            quaternary,
        },
        metric,
    )
}

/// `2^(2k) r_H(M^{v,2}_{r,u}) + 2^k r(M^{v,4}_{r,u})` under `metric`.
fn macdonald_tail(
    o: &Oracle,
    k: i64,
    u: usize,
    r: usize,
    variant: SimplexVariant,
    metric: Metric,
) -> Result<std::result::Result<Rational, String>> {
    let h = component_radius(o, r, u, variant, false, Metric::Lee)?;
    let q = component_radius(o, r, u, variant, true, metric)?;
    Ok(match (h, q) {
        (Ok(h), Ok(q)) => Ok(pow2(2 * k) * h + pow2(k) * q),
        (Err(e), _) | (_, Err(e)) => Err(e),
    })
}

fn macdonald_bound(
    p: &Params,
    o: &Oracle,
    head: Rational,
    variant: SimplexVariant,
    metric: Metric,
) -> Result<Evaluation> {
    let (k, u, r) = (get(p, "k"), get(p, "u") as usize, get(p, "r") as usize);
    Ok(macdonald_tail(o, k, u, r, variant, metric)?.map(|t| ClaimValue::Number(head + t)))
}

fn alpha_lee_head(k: i64, r: i64) -> Rational {
    pow2(3 * k + 1) - pow2(k + r) * (pow2(r) + pow2(k))
}

fn alpha_euclid_head(k: i64, r: i64) -> Rational {
    Rational::new(11, 6) * (pow2(3 * k + 2) - pow2(k + r) * (pow2(r) + int(3) * pow2(k)))
}

fn beta_lee_head(k: i64, r: i64) -> Rational {
    pow2(2 * k - 1) * (int(3) * pow2(k) - int(1)) - pow2(k + r - 1) * (pow2(k - 1) + pow2(r) - int(1))
}

fn binomial(n: i64, k: i64) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// The ARM generator as the prose describes it: blocks of `(0|0)` and `(1|1)`.
fn arm_prose(m: usize) -> Result<GeneratorMatrix> {
    let n = 1usize << (m - 1);
    let mut rows = Vec::new();
    for i in 2..m {
        let block = 1usize << ((m - 1) - i);
        let bits: Vec<u8> = (0..n).map(|j| ((j / block) % 2) as u8).collect();
        rows.push(MixedVector::new(&bits, &bits)?);
    }
    rows.push(MixedVector::constant_pair(1, 1, n));
    GeneratorMatrix::new(n, n, rows)
}

/// The codewords listed for `C_alpha{i}`, as constant pairs.
fn listed_repetition(i: u8) -> Vec<(u8, u8)> {
    match i {
        1 | 3 => (0..4).map(|q| (0, q)).collect(),
        2 => vec![(0, 0), (0, 2)],
        4 => vec![(0, 0), (1, 0)],
        5 | 7 => (0..8).map(|s| (s / 4, s % 4)).collect(),
        6 => vec![(0, 0), (0, 2), (1, 0), (1, 2)],
        _ => unreachable!("repetition index checked by the grid"),
    }
}

/// Mattson trial `t`: `(G0, G1, A)` drawn from the grid seed.
fn mattson_trial(seed: u64, t: u64) -> Result<(GeneratorMatrix, GeneratorMatrix, GeneratorMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ t.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let shape = |rng: &mut ChaCha8Rng| loop {
        let (g, d) = (rng.gen_range(0..=2usize), rng.gen_range(0..=2usize));
        if g + d > 0 {
            return (g, d);
        }
    };
    let (s0, s1) = (shape(&mut rng), shape(&mut rng));
    let random_rows = |rng: &mut ChaCha8Rng, (g, d): (usize, usize), count: usize| -> Result<Vec<MixedVector>> {
        (0..count)
            .map(|_| {
                let b: Vec<u8> = (0..g).map(|_| rng.gen_range(0..2)).collect();
                let q: Vec<u8> = (0..d).map(|_| rng.gen_range(0..4)).collect();
                MixedVector::new(&b, &q)
            })
            .collect()
    };
    let (r0, r1) = (rng.gen_range(1..=2usize), rng.gen_range(1..=2usize));
    let g0 = GeneratorMatrix::new(s0.0, s0.1, random_rows(&mut rng, s0, r0)?)?;
    let g1 = GeneratorMatrix::new(s1.0, s1.1, random_rows(&mut rng, s1, r1)?)?;
    let a = GeneratorMatrix::new(s1.0, s1.1, random_rows(&mut rng, s1, r0)?)?;
    Ok((g0, g1, a))
}

fn mattson_points(g: &Grid) -> Vec<Params> {
    (0..g.mattson_trials as u64)
        .map(|t| point(&[("seed", json!(g.seed)), ("trial", json!(t))]))
        .collect()
}

fn mattson_parts(p: &Params, with_a: bool) -> Result<(Code, Code, Code, String)> {
    let (g0, g1, a) = mattson_trial(get(p, "seed") as u64, get(p, "trial") as u64)?;
    let combined = mattson_combined(&g0, &g1, with_a.then_some(&a))?;
    let show = |g: &GeneratorMatrix| g.rows().iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
    let desc = if with_a {
        format!("G0 = {}, G1 = {}, A = {}", show(&g0), show(&g1), show(&a))
    } else {
        format!("G0 = {}, G1 = {}", show(&g0), show(&g1))
    };
    Ok((Code::new(g0), Code::new(g1), Code::new(combined), desc))
}

fn mattson_claimed(p: &Params, o: &Oracle, metric: Metric) -> Result<Evaluation> {
    let (c0, c1, _, _) = mattson_parts(p, false)?;
    let r = |c: &Code| crate::covering::covering_radius_auto(c, metric, &o.budget).map(|r| r.radius);
    num(int((r(&c0)? + r(&c1)?).into()))
}

fn mattson_computed(p: &Params, o: &Oracle, metric: Metric, with_a: bool) -> Result<Computed> {
    let (_, _, combined, desc) = mattson_parts(p, with_a)?;
    let r = crate::covering::covering_radius_auto(&combined, metric, &o.budget)?;
    Ok(Computed::known(ClaimValue::int(r.radius.into()), r.engine.name()).note(desc))
}

fn missing_claim_error(id: &str) -> Error {
    Error::Parameter(format!("no claim `{id}`"))
}

/// Looks up a claim by id.
pub fn find_claim(id: &str) -> Result<Claim> {
    register_claims()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| missing_claim_error(id))
}

/// The full catalog of audited claims.
pub fn register_claims() -> Vec<Claim> {
    use ClaimKind::*;
    use Family::*;
    use Metric::{Euclidean, Lee};
    vec![
        // Repetition codes.
        Claim {
            id: "thm1-euclid",
            source: r#"Thm 1: "r_E(C_{α1}) = r_E(C_{α3}) = 3n/4""#,
            family: Repetition,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "3n/4",
            points: |g| rep_points(g, &[1, 3]),
            claimed: |p, c, _| num(int(get(p, "n").into()) * scale(c) * Rational::new(3, 4)),
            computed: |p, o| radius_of(o, &rep(p), Euclidean),
        },
        Claim {
            id: "thm1-lee",
            source: r#"Thm 1: "r_L(C_{α1}) = r_L(C_{α3}) = 3n/2""#,
            family: Repetition,
            kind: Equality,
            metric: Some(Lee),
            conventions: PAIR_DIGIT,
            formula: "3n/2",
            points: |g| rep_points(g, &[1, 3]),
            claimed: |p, c, _| num(int(get(p, "n").into()) * scale(c) * Rational::new(3, 2)),
            computed: |p, o| radius_of(o, &rep(p), Lee),
        },
        Claim {
            id: "thm2-euclid",
            source: r#"Thm 2: "r_E(C_{α5}) = r_E(C_{α7}) = n""#,
            family: Repetition,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "n",
            points: |g| rep_points(g, &[5, 7]),
            claimed: |p, c, _| num(int(get(p, "n").into()) * scale(c)),
            computed: |p, o| radius_of(o, &rep(p), Euclidean),
        },
        Claim {
            id: "thm2-lee",
            source: r#"Thm 2: "r_L(C_{α5}) = r_L(C_{α7}) = 3n/2""#,
            family: Repetition,
            kind: Equality,
            metric: Some(Lee),
            conventions: PAIR_DIGIT,
            formula: "3n/2",
            points: |g| rep_points(g, &[5, 7]),
            claimed: |p, c, _| num(int(get(p, "n").into()) * scale(c) * Rational::new(3, 2)),
            computed: |p, o| radius_of(o, &rep(p), Lee),
        },
        Claim {
            id: "thm3-euclid-Cα2",
            source: r#"Thm 3: "r_E(C_{α2}) = n""#,
            family: Repetition,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "n",
            points: |g| rep_points(g, &[2]),
            claimed: |p, c, _| num(int(get(p, "n").into()) * scale(c)),
            computed: |p, o| radius_of(o, &rep(p), Euclidean),
        },
        Claim {
            id: "thm3-euclid-Cα4",
            source: r#"Thm 3: "r_E(C_{α4}) = n/4""#,
            family: Repetition,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "n/4",
            points: |g| rep_points(g, &[4]),
            claimed: |p, c, _| num(int(get(p, "n").into()) * scale(c) * Rational::new(1, 4)),
            computed: |p, o| radius_of(o, &rep(p), Euclidean),
        },
        Claim {
            id: "thm3-euclid-Cα6",
            source: r#"Thm 3: "r_E(C_{α6}) = 5n/4""#,
            family: Repetition,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "5n/4",
            points: |g| rep_points(g, &[6]),
            claimed: |p, c, _| num(int(get(p, "n").into()) * scale(c) * Rational::new(5, 4)),
            computed: |p, o| radius_of(o, &rep(p), Euclidean),
        },
        Claim {
            id: "thm3-lee",
            source: r#"Thm 3: "r_L(C_{α2}) = r_L(C_{α4}) = r_L(C_{α6}) = 3n/2""#,
            family: Repetition,
            kind: Equality,
            metric: Some(Lee),
            conventions: PAIR_DIGIT,
            formula: "3n/2",
            points: |g| rep_points(g, &[2, 4, 6]),
            claimed: |p, c, _| num(int(get(p, "n").into()) * scale(c) * Rational::new(3, 2)),
            computed: |p, o| radius_of(o, &rep(p), Lee),
        },
        Claim {
            id: "rep-listing",
            source: r#"§3: "C_{α5} = C_{α7} = {(00⋯00), (01⋯01), (02⋯02), (03⋯03), (10⋯10), (11⋯11), (12⋯12), (13⋯13)}""#,
            family: Repetition,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "listed codewords = group generated by G_{αi}",
            points: |g| rep_points(g, &[1, 2, 3, 4, 5, 6, 7]),
            claimed: |_, _, _| text("listing equals <G>"),
            computed: |p, _| {
                let (i, n) = match instance_of(p) {
                    Instance::Repetition { i, n } => (i, n),
                    _ => unreachable!("repetition point"),
                };
                let (b, q) = BLOCK_PAIRS[usize::from(i) - 1];
                let g = GeneratorMatrix::new(n, n, vec![MixedVector::constant_pair(b, q, n)])?;
                let spanned: HashSet<MixedVector> = Code::new(g).codewords().collect();
                let listed: HashSet<MixedVector> = listed_repetition(i)
                    .into_iter()
                    .map(|(b, q)| MixedVector::constant_pair(b, q, n))
                    .collect();
                let value = if spanned == listed {
                    "listing equals <G>".to_string()
                } else {
                    format!("listing has {} codewords, <G> has {}", listed.len(), spanned.len())
                };
                Ok(Computed::known(ClaimValue::text(value), "enumeration"))
            },
        },
        // Block repetition codes.
        Claim {
            id: "thm4-euclid",
            source: r#"Thm 4: "r_E(BRep^{n1+⋯+n7}) = 1/4[3(n1+n3)+n4+5n6] + (n2+n5+n7)""#,
            family: BlockRepetition,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "1/4[3(n1+n3)+n4+5n6] + (n2+n5+n7)",
            points: |g| block_points(g, false),
            claimed: |p, c, _| {
                let n = blocks_of(p).map(|x| int(x as i128));
                num(scale(c) * ((int(3) * (n[0] + n[2]) + n[3] + int(5) * n[5]) / int(4) + n[1] + n[4] + n[6]))
            },
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "thm4-euclid-7n",
            source: r#"Thm 4: "r_E(BRep_α^{7n}) = 6n""#,
            family: BlockRepetition,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "6n",
            points: |g| block_points(g, true),
            claimed: |p, c, _| num(int(6 * blocks_of(p)[0] as i128) * scale(c)),
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "brep-min-lee",
            source: r#"§3: "BRep^n: (n = n1+n2+n3+n4+n5+n6+n7, 2^3, d_L = 6n, …)""#,
            family: BlockRepetition,
            kind: Equality,
            metric: Some(Lee),
            conventions: PAIR_DIGIT,
            formula: "6n",
            points: |g| block_points(g, false),
            claimed: |p, c, _| num(int(6 * blocks_of(p).iter().sum::<usize>() as i128) * scale(c)),
            computed: |p, o| min_distance_computed(o, &instance_of(p), Lee),
        },
        Claim {
            id: "brep-min-euclid",
            source: r#"§3: "d_E = min{(n1+4n2+n3+n4+2n5+5n6+2n7), (n1+4n2+n3+n5+4n6+n7), (4n1+n2+4n3+4n5+n6+4n7), (n4+n5+n6+n7), (4n1+4n3+n4+5n5+n6+5n7)}""#,
            family: BlockRepetition,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "min of five printed linear forms",
            points: |g| block_points(g, false),
            claimed: |p, c, _| {
                let n = blocks_of(p).map(|x| x as i128);
                let forms = [
                    n[0] + 4 * n[1] + n[2] + n[3] + 2 * n[4] + 5 * n[5] + 2 * n[6],
                    n[0] + 4 * n[1] + n[2] + n[4] + 4 * n[5] + n[6],
                    4 * n[0] + n[1] + 4 * n[2] + 4 * n[4] + n[5] + 4 * n[6],
                    n[3] + n[4] + n[5] + n[6],
                    4 * n[0] + 4 * n[2] + n[3] + 5 * n[4] + n[5] + 5 * n[6],
                ];
                num(int(*forms.iter().min().expect("five forms")) * scale(c))
            },
            computed: |p, o| min_distance_computed(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "brep-cardinality",
            source: r#"§3: "BRep^n: (n = n1+⋯+n7, 2^3, …)""#,
            family: BlockRepetition,
            kind: Equality,
            metric: None,
            conventions: PRINTED,
            formula: "2^3",
            points: |g| block_points(g, false),
            claimed: |_, _, _| num(int(8)),
            computed: |p, o| {
                let code = shape_of(o, p)?;
                Ok(Computed::known(
                    ClaimValue::Number(pow2(code.size_log2().into())),
                    "standard_form",
                ))
            },
        },
        Claim {
            id: "brep-listing",
            source: r#"Thm 4 proof: "ȳ1 = 01⋯01 02⋯02 03⋯03 10⋯10 11⋯11 12⋯12 13⋯13 is the second vector of BRep""#,
            family: BlockRepetition,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "the eight listed vectors lie in the code generated by G",
            points: |g| {
                g.blocks
                    .iter()
                    .map(|b| point(&[("family", json!("block_repetition")), ("blocks", json!(blocks_key(b)))]))
                    .collect()
            },
            claimed: |_, _, _| text("8 of 8 listed vectors in <G>"),
            computed: |p, _| {
                let spec = BlockRepetitionSpec::new(blocks_of(p))?;
                let spanned: HashSet<MixedVector> = Code::new(block_repetition(&spec, BlockSpan::Generator))
                    .codewords()
                    .collect();
                let listed = block_repetition(&spec, BlockSpan::PaperListed);
                let inside = 1 + listed.rows().iter().filter(|v| spanned.contains(v)).count();
                Ok(Computed::known(
                    ClaimValue::text(format!("{inside} of 8 listed vectors in <G>")),
                    "enumeration",
                ))
            },
        },
        // Simplex codes.
        Claim {
            id: "thm5-lee",
            source: r#"Thm 5: "r_L(S_k^α) = 2^{3k+1}""#,
            family: Simplex,
            kind: Equality,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(3k+1)",
            points: |g| simplex_points(&g.k_mixed, SimplexVariant::Alpha),
            claimed: |p, _, _| num(pow2(3 * get(p, "k") + 1)),
            computed: |p, o| radius_of(o, &instance_of(p), Lee),
        },
        Claim {
            id: "thm5-lee-bound",
            source: r#"Thm 5: "r_L(S_k^α) = 2^{3k+1}""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(3k+1)",
            points: |g| simplex_points(&g.k_mixed, SimplexVariant::Alpha),
            claimed: |p, _, _| num(pow2(3 * get(p, "k") + 1)),
            computed: |p, o| radius_of(o, &instance_of(p), Lee),
        },
        Claim {
            id: "thm5-euclid-bound",
            source: r#"Thm 5: "r_E(S_k^α) ≤ 2^k·((17·2^{2k} − 2)/6)""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "2^k (17 2^(2k) - 2) / 6",
            points: |g| simplex_points(&g.k_mixed, SimplexVariant::Alpha),
            claimed: |p, _, _| {
                let k = get(p, "k");
                num(pow2(k) * (int(17) * pow2(2 * k) - int(2)) / int(6))
            },
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "thm6-lee-bound",
            source: r#"Thm 6: "r_L(S_k^β) ≤ 2^{2k}(2^k − 1) + 2^k(2^{k−1} − 2)""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(2k)(2^k - 1) + 2^k(2^(k-1) - 2)",
            points: |g| simplex_points(&g.k_beta, SimplexVariant::Beta),
            claimed: |p, _, _| {
                let k = get(p, "k");
                num(pow2(2 * k) * (pow2(k) - int(1)) + pow2(k) * (pow2(k - 1) - int(2)))
            },
            computed: |p, o| radius_of(o, &instance_of(p), Lee),
        },
        Claim {
            id: "thm6-euclid-bound",
            source: r#"Thm 6: "r_E(S_k^β) ≤ 2^k(17/6·2^{2k} − 2·2^k − 443/6)""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "2^k (17/6 2^(2k) - 2 2^k - 443/6)",
            points: |g| simplex_points(&g.k_beta, SimplexVariant::Beta),
            claimed: |p, _, _| {
                let k = get(p, "k");
                num(pow2(k) * (Rational::new(17, 6) * pow2(2 * k) - int(2) * pow2(k) - Rational::new(443, 6)))
            },
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "thm14-lee-dual",
            source: r#"Thm 14: "r_L(S_k^{α⊥}) = r_L(S_k^{β⊥}) = 1""#,
            family: Simplex,
            kind: Equality,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "1",
            points: dual_simplex_points,
            claimed: |_, _, _| num(int(1)),
            computed: |p, o| radius_of(o, &instance_of(p), Lee),
        },
        Claim {
            id: "thm14-euclid-dual",
            source: r#"Thm 14: "r_E(S_k^{α⊥}) ≤ 3 and r_L(S_k^{β⊥}) ≤ 3""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "3",
            points: dual_simplex_points,
            claimed: |_, _, _| num(int(3)),
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "simplex-alpha-length",
            source: r#"§4: "S_k^α … with parameters [2^{3k+1}, 2k, d_L, d_E]""#,
            family: Simplex,
            kind: Equality,
            metric: None,
            conventions: PRINTED,
            formula: "2^(3k+1)",
            points: |g| simplex_points(&g.k_mixed, SimplexVariant::Alpha),
            claimed: |p, _, _| num(pow2(3 * get(p, "k") + 1)),
            computed: length_computed,
        },
        Claim {
            id: "simplex-beta-length",
            source: r#"§4: "S_k^β … with the parameters [2^{3(k−1)}(2^k − 1), 2k, d_L, d_E]""#,
            family: Simplex,
            kind: Equality,
            metric: None,
            conventions: PRINTED,
            formula: "2^(3(k-1))(2^k - 1)",
            points: |g| simplex_points(&g.k_beta, SimplexVariant::Beta),
            claimed: |p, _, _| {
                let k = get(p, "k");
                num(pow2(3 * (k - 1)) * (pow2(k) - int(1)))
            },
            computed: length_computed,
        },
        Claim {
            id: "simplex-dimension",
            source: r#"§4: "[2^{3k+1}, 2k, d_L, d_E]" and "[2^{3(k−1)}(2^k − 1), 2k, d_L, d_E]""#,
            family: Simplex,
            kind: Equality,
            metric: None,
            conventions: PRINTED,
            formula: "log2 |C| = 2k",
            points: |g| {
                let mut out = simplex_points(&g.k_mixed, SimplexVariant::Alpha);
                out.extend(simplex_points(&g.k_beta, SimplexVariant::Beta));
                out
            },
            claimed: |p, _, _| num(int(2 * i128::from(get(p, "k")))),
            computed: |p, o| {
                let code = shape_of(o, p)?;
                Ok(Computed::known(
                    ClaimValue::int(code.size_log2().into()),
                    "standard_form",
                ))
            },
        },
        Claim {
            id: "thm5-component-hamming",
            source: r#"Thm 5 derivation: "2^{2k} r_H(S_{2,k}^α) … ≤ 2^{2k}[(2^k − 1) + 1]""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^k",
            points: |g| component_points(&g.k_component),
            claimed: |p, _, _| num(pow2(get(p, "k"))),
            computed: |p, o| component_computed(p, o, SimplexVariant::Alpha, false, Lee),
        },
        Claim {
            id: "thm5-component-lee",
            source: r#"Thm 5 derivation: "2^k r_L(S_{4,k}^α) … ≤ 2^k[(2^{2k} − 2) + 1]""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(2k) - 1",
            points: |g| component_points(&g.k_component),
            claimed: |p, _, _| num(pow2(2 * get(p, "k")) - int(1)),
            computed: |p, o| component_computed(p, o, SimplexVariant::Alpha, true, Lee),
        },
        Claim {
            id: "thm5-component-euclid",
            source: r#"Thm 5 derivation: "2^k r_E(S_{4,k}^α) ≤ 2^k·(11(2^{2k} − 1) + 9)/6""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "(11(2^(2k) - 1) + 9) / 6",
            points: |g| component_points(&g.k_component),
            claimed: |p, _, _| num((int(11) * (pow2(2 * get(p, "k")) - int(1)) + int(9)) / int(6)),
            computed: |p, o| component_computed(p, o, SimplexVariant::Alpha, true, Euclidean),
        },
        Claim {
            id: "thm6-component-hamming",
            source: r#"Thm 6 derivation: "2^{2k} r_H(S_{2,k}^β) ≤ 2^{2k}(2^{k−1} − 1)""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(k-1) - 1",
            points: |g| component_points(&g.k_component),
            claimed: |p, _, _| num(pow2(get(p, "k") - 1) - int(1)),
            computed: |p, o| component_computed(p, o, SimplexVariant::Beta, false, Lee),
        },
        Claim {
            id: "thm6-component-lee",
            source: r#"Thm 6 derivation: "2^k r_L(S_{4,k}^β) ≤ 2^k(2^{k−1}(2^k − 1) − 2)""#,
            family: Simplex,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(k-1)(2^k - 1) - 2",
            points: |g| component_points(&g.k_component),
            claimed: |p, _, _| {
                let k = get(p, "k");
                num(pow2(k - 1) * (pow2(k) - int(1)) - int(2))
            },
            computed: |p, o| component_computed(p, o, SimplexVariant::Beta, true, Lee),
        },
        // MacDonald codes.
        Claim {
            id: "macdonald-alpha-lee-bound",
            source: r#"§5: "r_L(M_{k,u}^α) ≤ [2^{3k+1} − 2^{k+r}(2^r + 2^k)] + [2^{2k} r_H(M_{r,u}^{α,2}) + 2^k r_L(M_{r,u}^{α,4})]""#,
            family: MacDonald,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "[2^(3k+1) - 2^(k+r)(2^r + 2^k)] + [2^(2k) r_H(M2) + 2^k r_L(M4)]",
            points: |g| macdonald_r_points(g, SimplexVariant::Alpha),
            claimed: |p, _, o| {
                let (k, r) = (get(p, "k"), get(p, "r"));
                macdonald_bound(p, o, alpha_lee_head(k, r), SimplexVariant::Alpha, Lee)
            },
            computed: |p, o| radius_of(o, &instance_of(&without_r(p)), Lee),
        },
        Claim {
            id: "macdonald-alpha-euclid-bound",
            source: r#"§5: "r_E(M_{k,u}^α) ≤ 11/6[2^{3k+2} − 2^{k+r}(2^r + 3·2^k)] + [2^{2k} r_H(M_{r,u}^{α,2}) + 2^k r_E(M_{r,u}^{α,4})]""#,
            family: MacDonald,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "11/6[2^(3k+2) - 2^(k+r)(2^r + 3 2^k)] + [2^(2k) r_H(M2) + 2^k r_E(M4)]",
            points: |g| macdonald_r_points(g, SimplexVariant::Alpha),
            claimed: |p, _, o| {
                let (k, r) = (get(p, "k"), get(p, "r"));
                macdonald_bound(p, o, alpha_euclid_head(k, r), SimplexVariant::Alpha, Euclidean)
            },
            computed: |p, o| radius_of(o, &instance_of(&without_r(p)), Euclidean),
        },
        Claim {
            id: "macdonald-beta-lee-bound",
            source: r#"§5: "r_L(M_{k,u}^β) ≤ 2^{2k−1}(3·2^k − 1) − 2^{k+r−1}(2^{k−1} + 2^r − 1) + [2^{2k} r_H(M_{r,u}^{β,2}) + 2^k r_L(M_{r,u}^{β,4})]""#,
            family: MacDonald,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(2k-1)(3 2^k - 1) - 2^(k+r-1)(2^(k-1) + 2^r - 1) + [2^(2k) r_H(M2) + 2^k r_L(M4)]",
            points: |g| macdonald_r_points(g, SimplexVariant::Beta),
            claimed: |p, _, o| {
                let (k, r) = (get(p, "k"), get(p, "r"));
                macdonald_bound(p, o, beta_lee_head(k, r), SimplexVariant::Beta, Lee)
            },
            computed: |p, o| radius_of(o, &instance_of(&without_r(p)), Lee),
        },
        Claim {
            id: "macdonald-beta-euclid-bound",
            source: r#"§5, type β theorem item 2: "r_E(M_{k,u}^α) ≤ 11/6[2^{3k+2} − 2^{k+r}(2^r + 3·2^k)] + [2^{2k} r_H(M_{r,u}^{α,2}) + 2^k r_E(M_{r,u}^{α,4})]""#,
            family: MacDonald,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: &["as_printed", "beta_components"],
            formula: "11/6[2^(3k+2) - 2^(k+r)(2^r + 3 2^k)] + [2^(2k) r_H(M2) + 2^k r_E(M4)]",
            points: |g| macdonald_r_points(g, SimplexVariant::Beta),
            claimed: |p, c, o| {
                let (k, r) = (get(p, "k"), get(p, "r"));
                let components = if c == "as_printed" {
                    SimplexVariant::Alpha
                } else {
                    SimplexVariant::Beta
                };
                macdonald_bound(p, o, alpha_euclid_head(k, r), components, Euclidean)
            },
            computed: |p, o| radius_of(o, &instance_of(&without_r(p)), Euclidean),
        },
        Claim {
            id: "macdonald-dual-lee",
            source: r#"§5: "r_L(M_{k,u}^{α⊥}) = r_L(M_{k,u}^{β⊥}) = 2""#,
            family: MacDonald,
            kind: Equality,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2",
            points: |g| macdonald_points_both(g, true),
            claimed: |_, _, _| num(int(2)),
            computed: |p, o| radius_of(o, &instance_of(p), Lee),
        },
        Claim {
            id: "macdonald-dual-euclid",
            source: r#"§5: "r_E(M_{k,u}^{α⊥}) ≤ 6 and r_E(M_{k,u}^{β⊥}) ≤ 6""#,
            family: MacDonald,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "6",
            points: |g| macdonald_points_both(g, true),
            claimed: |_, _, _| num(int(6)),
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "macdonald-alpha-length",
            source: r#"§5: "M_{k,u}^α … with parametrs [2^{3k+1} − 2^{k+u}(2^k − 2^u)]""#,
            family: MacDonald,
            kind: Equality,
            metric: None,
            conventions: PRINTED,
            formula: "2^(3k+1) - 2^(k+u)(2^k - 2^u)",
            points: |g| macdonald_points(g, SimplexVariant::Alpha),
            claimed: |p, _, _| {
                let (k, u) = (get(p, "k"), get(p, "u"));
                num(pow2(3 * k + 1) - pow2(k + u) * (pow2(k) - pow2(u)))
            },
            computed: length_computed,
        },
        Claim {
            id: "macdonald-beta-length",
            source: r#"§5: "M_{k,u}^β … [2^{2k−1}(2^{2k−1} + 1)(2^k − 1) − 2^{k+u−1}(2^{2u−3} + 1)(2^u − 1)]""#,
            family: MacDonald,
            kind: Equality,
            metric: None,
            conventions: PRINTED,
            formula: "2^(2k-1)(2^(2k-1) + 1)(2^k - 1) - 2^(k+u-1)(2^(2u-3) + 1)(2^u - 1)",
            points: |g| macdonald_points(g, SimplexVariant::Beta),
            claimed: |p, _, _| {
                let (k, u) = (get(p, "k"), get(p, "u"));
                num(pow2(2 * k - 1) * (pow2(2 * k - 1) + int(1)) * (pow2(k) - int(1))
                    - pow2(k + u - 1) * (pow2(2 * u - 3) + int(1)) * (pow2(u) - int(1)))
            },
            computed: length_computed,
        },
        // Reed-Muller codes.
        Claim {
            id: "arm-first-order-lee",
            source: r#"§6: "If C is the code generated by G then r_L(C) = r_E(C) = 2^{m−1}""#,
            family: ReedMuller,
            kind: Equality,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(m-1)",
            points: arm_first_points,
            claimed: |p, _, _| num(pow2(get(p, "m") - 1)),
            computed: |p, o| radius_of(o, &instance_of(p), Lee),
        },
        Claim {
            id: "arm-first-order-euclid",
            source: r#"§6: "If C is the code generated by G then r_L(C) = r_E(C) = 2^{m−1}""#,
            family: ReedMuller,
            kind: Equality,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "2^(m-1)",
            points: arm_first_points,
            claimed: |p, _, _| num(pow2(get(p, "m") - 1)),
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "arm-min-distance",
            source: r#"§6, ARM properties: "Minimum distance d = 2^{m−r}""#,
            family: ReedMuller,
            kind: Equality,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "2^(m-r)",
            points: arm_recursive_points,
            claimed: |p, _, _| num(pow2(get(p, "m") - get(p, "r"))),
            computed: |p, o| min_distance_computed(o, &instance_of(p), Lee),
        },
        Claim {
            id: "arm-cardinality",
            source: r#"§6, ARM properties: "If k = Σ_{i=0}^{r} C(m, i) then |ARM(r, m)| = 2^k""#,
            family: ReedMuller,
            kind: Equality,
            metric: None,
            conventions: PRINTED,
            formula: "2^(sum_{i<=r} C(m,i))",
            points: arm_recursive_points,
            claimed: |p, _, _| {
                let (r, m) = (get(p, "r"), get(p, "m"));
                let k: i128 = (0..=r).map(|i| binomial(m, i)).sum();
                if k > 120 {
                    return Ok(Err(format!("2^{k} exceeds the exact range")));
                }
                num(pow2(k as i64))
            },
            computed: |p, o| {
                let code = shape_of(o, p)?;
                Ok(Computed::known(
                    ClaimValue::Number(pow2(code.size_log2().into())),
                    "standard_form",
                ))
            },
        },
        Claim {
            id: "arm-prose-vs-matrix",
            source: r#"§6: "v_i be a vector of length 2^{m−1} consisting of successive blocks of 00's and 11's""#,
            family: ReedMuller,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "rows of 00/11 blocks generate the displayed 00/02 matrix code",
            points: |g| {
                g.m.iter()
                    .map(|&m| point(&[("family", json!("arm_first_order")), ("m", json!(m))]))
                    .collect()
            },
            claimed: |_, _, _| text("prose and matrix give the same code"),
            computed: |p, o| {
                let m = get(p, "m") as usize;
                let prose = Code::new(arm_prose(m)?);
                let matrix = o.code(&Instance::ArmFirst {
                    m,
                    layout: ArmLayout::Alternating,
                })?;
                let a: HashSet<MixedVector> = prose.codewords().collect();
                let b: HashSet<MixedVector> = matrix.codewords().collect();
                let value = if a == b {
                    "prose and matrix give the same code".to_string()
                } else {
                    format!(
                        "prose code {} has {} codewords, matrix code {} has {}; {} shared",
                        prose.code_type(),
                        a.len(),
                        matrix.code_type(),
                        b.len(),
                        a.intersection(&b).count()
                    )
                };
                Ok(Computed::known(ClaimValue::text(value), "enumeration"))
            },
        },
        // Gray images.
        Claim {
            id: "thm7-columns",
            source: r#"Thm 7: "Φ_L(S_k^α) is a concatenation of 2^{2k}(2^k + 1) binary simplex code""#,
            family: GrayImage,
            kind: Structural,
            metric: None,
            conventions: COLUMN_READINGS,
            formula: "2^(2k)(2^k + 1) copies of m_k",
            points: |g| simplex_points(&g.k_mixed, SimplexVariant::Alpha),
            claimed: |p, c, _| {
                let k = get(p, "k");
                columns_claim(pow2(2 * k) * (pow2(k) + int(1)), k, c)
            },
            computed: columns_computed,
        },
        Claim {
            id: "thm7-params",
            source: r#"Thm 7: "binary simplex code with parameters [2^{3k}(2^k + 1); k; d_H]""#,
            family: GrayImage,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "[2^(3k)(2^k + 1); k]",
            points: |g| simplex_points(&g.k_mixed, SimplexVariant::Alpha),
            claimed: |p, _, _| {
                let k = get(p, "k");
                text(format!("[{}; {k}]", pow2(3 * k) * (pow2(k) + int(1))))
            },
            computed: params_computed,
        },
        Claim {
            id: "thm8-columns",
            source: r#"Thm 8: "Φ_L(S_k^β) is a concatenation of 2^k(2^{k−1} + 1) binary simplex code""#,
            family: GrayImage,
            kind: Structural,
            metric: None,
            conventions: COLUMN_READINGS,
            formula: "2^k(2^(k-1) + 1) copies of m_k",
            points: |g| simplex_points(&g.k_beta, SimplexVariant::Beta),
            claimed: |p, c, _| {
                let k = get(p, "k");
                columns_claim(pow2(k) * (pow2(k - 1) + int(1)), k, c)
            },
            computed: columns_computed,
        },
        Claim {
            id: "thm8-params",
            source: r#"Thm 8: "binary simplex code with parameters [2^k(2^{k−1} + 1)(2^k − 1); k; d_H]""#,
            family: GrayImage,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "[2^k(2^(k-1) + 1)(2^k - 1); k]",
            points: |g| simplex_points(&g.k_beta, SimplexVariant::Beta),
            claimed: |p, _, _| {
                let k = get(p, "k");
                text(format!(
                    "[{}; {k}]",
                    pow2(k) * (pow2(k - 1) + int(1)) * (pow2(k) - int(1))
                ))
            },
            computed: params_computed,
        },
        Claim {
            id: "gray-macdonald-columns",
            source: r#"§7: "Φ_L(M_{k,u}^α) (resp., Φ_L(M_{k,u}^β)) is a concatenation of 2^{2(k−1)}(2^{k−1} + 1) (resp., 2^{2(k−1)}(2^k − 1)) binary simplex code""#,
            family: GrayImage,
            kind: Structural,
            metric: None,
            conventions: COLUMN_READINGS,
            formula: "alpha: 2^(2(k-1))(2^(k-1) + 1) copies; beta: 2^(2(k-1))(2^k - 1) copies",
            points: |g| macdonald_points_both(g, false),
            claimed: |p, c, _| {
                let k = get(p, "k");
                let count = match variant_of(p) {
                    SimplexVariant::Alpha => pow2(2 * (k - 1)) * (pow2(k - 1) + int(1)),
                    SimplexVariant::Beta => pow2(2 * (k - 1)) * (pow2(k) - int(1)),
                };
                columns_claim(count, k, c)
            },
            computed: columns_computed,
        },
        Claim {
            id: "gray-macdonald-params",
            source: r#"§7: "[2^{2(k−1)}(2^{k−1} + 1)(2^k − 2^u); k; d_H] (resp., [2^{2(k−1)}(2^k − 1)(2^k − 2^u); k; d_H])""#,
            family: GrayImage,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "alpha: [2^(2(k-1))(2^(k-1) + 1)(2^k - 2^u); k]; beta: [2^(2(k-1))(2^k - 1)(2^k - 2^u); k]",
            points: |g| macdonald_points_both(g, false),
            claimed: |p, _, _| {
                let (k, u) = (get(p, "k"), get(p, "u"));
                let count = match variant_of(p) {
                    SimplexVariant::Alpha => pow2(2 * (k - 1)) * (pow2(k - 1) + int(1)),
                    SimplexVariant::Beta => pow2(2 * (k - 1)) * (pow2(k) - int(1)),
                };
                text(format!("[{}; {k}]", count * (pow2(k) - pow2(u))))
            },
            computed: params_computed,
        },
        Claim {
            id: "gray-arm-params",
            source: r#"§7: "Φ_L(ARM(1, m−1)) is a code with parameters [3·2^{m−1}; m−1; d_H = 2^{m−2}]""#,
            family: GrayImage,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "[3 2^(m-1); m-1; 2^(m-2)]",
            points: arm_first_points,
            claimed: |p, _, _| {
                let m = get(p, "m");
                text(format!("[{}; {}; {}]", 3 * (1i64 << (m - 1)), m - 1, 1i64 << (m - 2)))
            },
            computed: |p, o| {
                let code = shape_of(o, p)?;
                let (len, rows) = gray_params(&code);
                let words = code.codewords().map(|c| c.gray_map().weight()).filter(|&w| w > 0);
                let dh = words.min().ok_or(Error::ZeroCode)?;
                Ok(
                    Computed::known(ClaimValue::text(format!("[{len}; {rows}; {dh}]")), "gray_enumeration")
                        .note(format!("log2 |C| = {}", code.size_log2())),
                )
            },
        },
        Claim {
            id: "gray-zero-identity",
            source: r#"§2: "This Gray map is an isometry""#,
            family: GrayImage,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "Φ(zero code) = zero code",
            points: |_| vec![point(&[("gamma", json!(3)), ("delta", json!(2))])],
            claimed: |_, _, _| text("zero code"),
            computed: |p, _| {
                let code = Code::zero(get(p, "gamma") as usize, get(p, "delta") as usize);
                let images: Vec<_> = code.codewords().map(|c| c.gray_map()).collect();
                let value = if images.len() == 1 && images[0].weight() == 0 {
                    "zero code".to_string()
                } else {
                    format!("{} image words", images.len())
                };
                Ok(Computed::known(ClaimValue::text(value), "enumeration"))
            },
        },
        Claim {
            id: "prop1-gray-transfer",
            source: r#"Prop 1: "r_L(C) = r(Φ(C))""#,
            family: General,
            kind: Equality,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "r_L(C)",
            points: gray_small_points,
            claimed: |p, _, o| Ok(radius_value(o, &instance_of(p), Lee)?.map(ClaimValue::Number)),
            computed: |p, o| {
                let code = shape_of(o, p)?;
                Ok(
                    match super::oracle::within_budget(gray_image_covering_radius(&code, &o.budget))? {
                        Truth::Known(r) => Computed::known(ClaimValue::int(r.radius.into()), "binary")
                            .note(format!("witness {}", r.witness)),
                        Truth::Unknown(reason) => Computed::unknown(reason),
                    },
                )
            },
        },
        // General bounds.
        Claim {
            id: "lemma1-sandwich",
            source: r#"Lemma 1: "r_L(C) ≤ r_E(C) ≤ 3r_L(C)""#,
            family: General,
            kind: Interval,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "[r_L, 3 r_L]",
            points: general_points,
            claimed: |p, _, o| Ok(radius_value(o, &instance_of(p), Lee)?.map(|r| ClaimValue::Interval(r, int(3) * r))),
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "thm13-lee",
            source: r#"Thm 13: "r_L(C) ≤ s(C^⊥)""#,
            family: General,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "s(C^perp)",
            points: general_points,
            claimed: |p, _, o| delsarte_claim(p, o, 1),
            computed: |p, o| radius_of(o, &instance_of(p), Lee),
        },
        Claim {
            id: "thm13-euclid",
            source: r#"Thm 13: "r_E(C) ≤ 3s(C^⊥)""#,
            family: General,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "3 s(C^perp)",
            points: general_points,
            claimed: |p, _, o| delsarte_claim(p, o, 3),
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "sphere-lee-printed",
            source: r#"§2: "2^{2n}/|C| ≤ Σ_{i=0}^{r_L(C)} C(2n, i)""#,
            family: General,
            kind: LowerBound,
            metric: Some(Lee),
            conventions: PAIR_DIGIT,
            formula: "least r with 2^(2n)/|C| <= sum_{i<=r} C(2n, i)",
            points: square_points,
            claimed: |p, c, o| {
                let code = shape_of(o, p)?;
                let b = printed_sphere_bound(code.gamma(), code.size_log2());
                num(int(if c == "pair" { b.binomial_pair } else { b.binomial_digit }.into()))
            },
            computed: |p, o| radius_of(o, &instance_of(p), Lee),
        },
        Claim {
            id: "sphere-euclid-printed",
            source: r#"§2: "2^{2n}/|C| ≤ Σ_{i=0}^{r_E(C)} V_i, where Σ V_i x^i = (1+3x+2x^2+x^4+x^5)^n""#,
            family: General,
            kind: LowerBound,
            metric: Some(Euclidean),
            conventions: PAIR_DIGIT,
            formula: "least r with 2^(2n)/|C| <= sum_{i<=r} V_i",
            points: square_points,
            claimed: |p, c, o| {
                let code = shape_of(o, p)?;
                let b = printed_sphere_bound(code.gamma(), code.size_log2());
                num(int(if c == "pair" {
                    b.polynomial_pair
                } else {
                    b.polynomial_digit
                }
                .into()))
            },
            computed: |p, o| radius_of(o, &instance_of(p), Euclidean),
        },
        Claim {
            id: "euclid-enumerator",
            source: r#"§2: "Σ V_i x^i = (1+3x+2x^2+x^4+x^5)^n""#,
            family: General,
            kind: Structural,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "1+3x+2x^2+x^4+x^5",
            points: |_| vec![Params::new()],
            claimed: |_, _, _| text("1+3x+2x^2+x^4+x^5"),
            computed: |_, _| {
                let mut counts = [0u32; 6];
                for b in 0..2 {
                    for q in 0..4 {
                        let v = MixedVector::new(&[b], &[q])?;
                        counts[v.weight(Metric::Euclidean) as usize] += 1;
                    }
                }
                Ok(Computed::known(
                    ClaimValue::text(render_polynomial(&counts)),
                    "enumeration",
                ))
            },
        },
        Claim {
            id: "euclid-weight-formula",
            source: r#"§2: "the Euclidean weight w_E(u) of a vector u is Σ min{u_i, (4 − u_i)^2}""#,
            family: General,
            kind: Structural,
            metric: Some(Euclidean),
            conventions: &["as_printed", "squared"],
            formula: "per-symbol weights of 0, 1, 2, 3",
            points: |_| vec![Params::new()],
            claimed: |_, c, _| {
                let w = |u: u32| {
                    if c == "as_printed" {
                        u.min((4 - u) * (4 - u))
                    } else {
                        (u * u).min((4 - u) * (4 - u))
                    }
                };
                text((0..4).map(|u| w(u).to_string()).collect::<Vec<_>>().join(","))
            },
            computed: |_, _| {
                let weights: Vec<String> = (0..4)
                    .map(|q| MixedVector::new(&[], &[q]).map(|v| v.weight(Metric::Euclidean).to_string()))
                    .collect::<Result<_>>()?;
                Ok(Computed::known(ClaimValue::text(weights.join(",")), "alphabet"))
            },
        },
        Claim {
            id: "parity-check-formula",
            source: r#"§2: "H_S = [T' I_{γ−k} | 0 0 2S'^t; 0 0 | 0 I_{λ−k} 2R^t; T_1^t 0 | I_{δ+k−λ−μ} T_2^t −(S+RT_2)^t]""#,
            family: General,
            kind: Structural,
            metric: None,
            conventions: PRINTED,
            formula: "H_S generates the dual of the standard form",
            points: general_points,
            claimed: |_, _, _| text("parity check"),
            computed: |p, o| {
                let code = o.code(&instance_of(p))?;
                let sf = code.standard_form();
                let printed = is_dual_pair(&sf.matrix, &parity_check_with(sf, ParityCheckVariant::AsPrinted));
                let doubled = is_dual_pair(&sf.matrix, &parity_check_with(sf, ParityCheckVariant::Doubled));
                let value = match (printed, doubled) {
                    (true, _) => "parity check".to_string(),
                    (false, true) => "not a parity check; with 2I in the middle block it is".to_string(),
                    (false, false) => "not a parity check".to_string(),
                };
                Ok(
                    Computed::known(ClaimValue::text(value), "standard_form")
                        .note(format!("type {}", code.code_type())),
                )
            },
        },
        Claim {
            id: "prop3-mattson-lee",
            source: r#"Prop 3: "r_d(C) ≤ r_d(C_0) + r_d(C_1)""#,
            family: General,
            kind: UpperBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "r(C0) + r(C1)",
            points: mattson_points,
            claimed: |p, _, o| mattson_claimed(p, o, Lee),
            computed: |p, o| mattson_computed(p, o, Lee, true),
        },
        Claim {
            id: "prop3-mattson-euclid",
            source: r#"Prop 3: "r_d(C) ≤ r_d(C_0) + r_d(C_1)""#,
            family: General,
            kind: UpperBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "r(C0) + r(C1)",
            points: mattson_points,
            claimed: |p, _, o| mattson_claimed(p, o, Euclidean),
            computed: |p, o| mattson_computed(p, o, Euclidean, true),
        },
        Claim {
            id: "prop3-direct-sum-lee",
            source: r#"Prop 3: "the covering radius of D (concatenation of C_0 and C_1) satisfy r_d(D) ≥ r_d(C_0) + r_d(C_1)""#,
            family: General,
            kind: LowerBound,
            metric: Some(Lee),
            conventions: PRINTED,
            formula: "r(C0) + r(C1)",
            points: mattson_points,
            claimed: |p, _, o| mattson_claimed(p, o, Lee),
            computed: |p, o| mattson_computed(p, o, Lee, false),
        },
        Claim {
            id: "prop3-direct-sum-euclid",
            source: r#"Prop 3: "the covering radius of D (concatenation of C_0 and C_1) satisfy r_d(D) ≥ r_d(C_0) + r_d(C_1)""#,
            family: General,
            kind: LowerBound,
            metric: Some(Euclidean),
            conventions: PRINTED,
            formula: "r(C0) + r(C1)",
            points: mattson_points,
            claimed: |p, _, o| mattson_claimed(p, o, Euclidean),
            computed: |p, o| mattson_computed(p, o, Euclidean, false),
        },
    ]
}

fn without_r(p: &Params) -> Params {
    let mut p = p.clone();
    p.remove("r");
    p
}

fn component_points(ks: &[usize]) -> Vec<Params> {
    ks.iter().map(|&k| point(&[("k", json!(k))])).collect()
}

fn component_computed(
    p: &Params,
    o: &Oracle,
    variant: SimplexVariant,
    quaternary: bool,
    metric: Metric,
) -> Result<Computed> {
    let inst = Instance::SimplexComponent {
        k: get(p, "k") as usize,
        variant,
        quaternary,
    };
    radius_of(o, &inst, metric)
}

fn min_distance_computed(o: &Oracle, inst: &Instance, metric: Metric) -> Result<Computed> {
    Ok(match o.min_distance(inst, metric)? {
        Truth::Known(d) => Computed::known(ClaimValue::int(d.into()), "enumeration"),
        Truth::Unknown(reason) => Computed::unknown(reason),
    })
}

fn delsarte_claim(p: &Params, o: &Oracle, factor: u32) -> Result<Evaluation> {
    Ok(match o.dual_weight_count(&instance_of(p))? {
        Truth::Known(s) => Ok(ClaimValue::int((factor * s).into())),
        Truth::Unknown(reason) => Err(reason),
    })
}

fn render_polynomial(counts: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
        terms.push(match i {
            0 => coeff,
            1 => format!("{coeff}x"),
            _ => format!("{coeff}x^{i}"),
        });
    }
    terms.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_are_unique() {
        let claims = register_claims();
        let ids: HashSet<&str> = claims.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), claims.len());
        assert!(claims.len() >= 16);
    }

    #[test]
    fn repetition_lee_at_two_pairs() {
        let claim = find_claim("thm1-lee").unwrap();
        let o = Oracle::new(Budget::default());
        let p = instance_params(&Instance::Repetition { i: 1, n: 2 });
        assert_eq!(claim.evaluate(&p, "pair", &o).unwrap(), Ok(ClaimValue::int(3)));
        assert_eq!(claim.evaluate(&p, "digit", &o).unwrap(), Ok(ClaimValue::int(6)));
    }

    #[test]
    fn instance_params_round_trip() {
        for inst in general_instances(&Grid::default()) {
            assert_eq!(instance_of(&instance_params(&inst)), inst);
            let d = inst.clone().dual();
            assert_eq!(instance_of(&instance_params(&d)), d);
        }
    }

    #[test]
    fn polynomial_rendering() {
        assert_eq!(render_polynomial(&[1, 3, 2, 0, 1, 1]), "1+3x+2x^2+x^4+x^5");
    }

    #[test]
    fn column_descriptions() {
        let mut c = HashMap::new();
        c.insert(0, 12);
        c.insert(1, 12);
        assert_eq!(describe_columns(&c, 1), "12 copies of m_1^alpha");
        c.insert(0, 0);
        assert_eq!(describe_columns(&c, 1), "12 copies of m_1^beta");
    }
}
