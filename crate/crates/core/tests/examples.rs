use std::collections::{BTreeMap, BTreeSet};

use z2z4::codes::kernel_dual;
use z2z4::constructions::{
    arm_first_order, arm_recursive, binary_simplex, block_repetition, macdonald_matrix, mixed_simplex,
    quaternary_simplex, repetition_code, ArmLayout, BlockRepetitionSpec, BlockSpan, MacDonaldParams, SimplexParams,
    SimplexVariant,
};
use z2z4::covering::{
    coset_leader_weights, covering_radius, delsarte_bound, mattson_bound, mattson_combined, sandwich_check,
    weight_enumerator, Engine,
};
use z2z4::{gray_symbol, Budget, Code, GeneratorMatrix, Metric, MixedVector};

fn v(s: &str) -> MixedVector {
    s.parse().unwrap()
}

fn words(g: &GeneratorMatrix) -> BTreeSet<String> {
    Code::new(g.clone()).codewords().map(|c| c.to_string()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| v(s).to_string()).collect()
}

#[test]
fn alphabet_tables() {
    assert_eq!(gray_symbol(2), (1, 1));
    assert_eq!(gray_symbol(3), (1, 0));
    assert_eq!(v("1 | 2").gray_map().to_string(), "111");
    assert_eq!(v(" | 13").gray_map().to_string(), "0110");
    assert_eq!(v("1 | 3").weight(Metric::Lee), 2);
    assert_eq!(v("0 | 2").weight(Metric::Euclidean), 4);
    assert_eq!(v("1 | 1").distance(&v("0 | 3"), Metric::Lee).unwrap(), 3);
    assert_eq!(v("0 | 0").distance(&v("1 | 2"), Metric::Euclidean).unwrap(), 5);
    assert_eq!(v("1 | 2").inner_product(&v("1 | 3")).unwrap(), 0);
}

#[test]
fn code_types() {
    let c5 = GeneratorMatrix::new(
        1,
        1,
        ["0|0", "0|1", "0|2", "0|3", "1|0", "1|1", "1|2", "1|3"].map(v).to_vec(),
    )
    .unwrap();
    let t = Code::new(c5).code_type();
    assert_eq!((t.gamma, t.delta, t.lambda, t.mu, t.kappa), (1, 1, 1, 1, 1));
    let theta = Code::new(mixed_simplex(SimplexParams::alpha(1)).unwrap()).code_type();
    assert_eq!((theta.lambda, theta.mu), (0, 1));
    let two = GeneratorMatrix::new(0, 1, vec![v(" | 2")]).unwrap();
    assert_eq!(words(&two), set(&[" | 0", " | 2"]));
}

#[test]
fn standard_form_keeps_the_code() {
    let g = GeneratorMatrix::new(2, 1, vec![v("11 | 0"), v("00 | 1")]).unwrap();
    let code = Code::new(g.clone());
    let sf = code.standard_form();
    let permuted: BTreeSet<String> = code.codewords().map(|c| sf.permute(&c).to_string()).collect();
    assert_eq!(words(&sf.matrix), permuted);
}

#[test]
fn duals_by_kernel() {
    let budget = Budget::default();
    let c = Code::new(GeneratorMatrix::new(0, 1, vec![v(" | 2")]).unwrap());
    assert_eq!(
        words(kernel_dual(c.matrix(), &budget).unwrap().matrix()),
        set(&[" | 0", " | 2"])
    );
    let g = GeneratorMatrix::new(1, 1, vec![v("1 | 0")]).unwrap();
    assert!(Code::new(g.clone())
        .dual(&budget)
        .unwrap()
        .codewords()
        .any(|w| w == v("0 | 1")));
    let twice = kernel_dual(kernel_dual(&g, &budget).unwrap().matrix(), &budget).unwrap();
    assert_eq!(words(twice.matrix()), words(&g));
    assert_eq!(Code::full(2, 2).dual(&budget).unwrap().size_log2(), 0);
}

#[test]
fn weight_distributions() {
    let budget = Budget::default();
    let c1 = Code::new(repetition_code(1, 1).unwrap());
    let wd = c1.weight_distribution(Metric::Lee, &budget).unwrap();
    assert_eq!(wd.counts, BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
    let c2 = Code::new(repetition_code(2, 1).unwrap());
    assert_eq!(c2.minimum_distance(Metric::Euclidean, &budget).unwrap(), 4);
    let c2n = Code::new(repetition_code(2, 3).unwrap());
    assert_eq!(
        c2n.weight_distribution(Metric::Euclidean, &budget).unwrap().counts,
        BTreeMap::from([(0, 1), (12, 1)])
    );
}

#[test]
fn repetition_and_block_codes() {
    assert_eq!(
        words(&repetition_code(1, 1).unwrap()),
        set(&["0|0", "0|1", "0|2", "0|3"])
    );
    assert_eq!(words(&repetition_code(5, 1).unwrap()).len(), 8);
    assert_eq!(words(&repetition_code(4, 2).unwrap()), set(&["00|00", "11|00"]));
    let spec = |b: [usize; 7]| BlockRepetitionSpec::new(b).unwrap();
    assert_eq!(
        words(&block_repetition(&spec([1, 0, 0, 0, 0, 0, 0]), BlockSpan::Generator)),
        set(&["0|0", "0|1", "0|2", "0|3"])
    );
    assert_eq!(
        words(&block_repetition(&spec([0, 0, 0, 1, 0, 0, 0]), BlockSpan::Generator)),
        set(&["0|0", "1|0"])
    );
    assert_eq!(words(&block_repetition(&spec([1; 7]), BlockSpan::Generator)).len(), 4);
}

#[test]
fn simplex_components_and_shapes() {
    assert_eq!(binary_simplex(1, SimplexVariant::Alpha).unwrap().rows, vec![vec![0, 1]]);
    assert_eq!(
        quaternary_simplex(1, SimplexVariant::Alpha).unwrap().rows,
        vec![vec![0, 1, 2, 3]]
    );
    assert_eq!(
        quaternary_simplex(2, SimplexVariant::Beta).unwrap().rows,
        vec![vec![1, 1, 1, 1, 0, 2], vec![0, 1, 2, 3, 1, 1]]
    );
    assert_eq!(mixed_simplex(SimplexParams::alpha(1)).unwrap().shape(), (8, 8));
    assert_eq!(mixed_simplex(SimplexParams::beta(3)).unwrap().shape(), (56, 112));
    let m = macdonald_matrix(MacDonaldParams {
        k: 2,
        u: 1,
        variant: SimplexVariant::Alpha,
    })
    .unwrap();
    assert_eq!(m.shape(), (32, 48));
}

#[test]
fn reed_muller() {
    let budget = Budget::default();
    let g = arm_first_order(3, ArmLayout::Alternating).unwrap();
    assert_eq!(g.rows(), &[v("0000 | 0202"), v("1111 | 1111")]);
    assert_eq!(Code::new(g).size_log2(), 3);
    let g4 = arm_first_order(4, ArmLayout::Alternating).unwrap();
    assert_eq!(g4.rows()[0].quaternary_part(), vec![0, 0, 2, 2, 0, 0, 2, 2]);
    for (r, m) in [(1, 3), (1, 4), (2, 4)] {
        let c = Code::new(arm_recursive(r, m).unwrap());
        assert_eq!(c.minimum_distance(Metric::Lee, &budget).unwrap(), 1 << (m - r));
    }
    assert_eq!(Code::new(arm_recursive(1, 3).unwrap()).size_log2(), 4);
    let full = Code::new(arm_recursive(3, 3).unwrap());
    assert_eq!(full.size_log2(), full.ambient().size_log2());
}

#[test]
fn covering_examples() {
    let budget = Budget::default();
    let c = Code::new(repetition_code(2, 1).unwrap());
    let r = covering_radius(&c, Metric::Lee, Engine::Both, &budget).unwrap();
    assert_eq!((r.radius, r.witness.to_string()), (2, "1 | 1".to_string()));
    let mut leaders = coset_leader_weights(&c, Metric::Lee, &budget).unwrap();
    leaders.sort();
    assert_eq!(leaders, vec![0, 1, 1, 2]);
    let e = covering_radius(&c, Metric::Euclidean, Engine::Both, &budget).unwrap();
    assert!(sandwich_check(r.radius, e.radius));
    assert!(r.radius <= delsarte_bound(&c, &budget).unwrap().s);
    let lee: Vec<u64> = weight_enumerator(1, 1, Metric::Lee)
        .iter()
        .map(|x| x.try_into().unwrap())
        .collect();
    assert_eq!(lee, vec![1, 3, 3, 1]);
    let euc: Vec<u64> = weight_enumerator(1, 1, Metric::Euclidean)
        .iter()
        .map(|x| x.try_into().unwrap())
        .collect();
    assert_eq!(euc, vec![1, 3, 2, 0, 1, 1]);
}

#[test]
fn mattson_example() {
    let budget = Budget::default();
    let g = repetition_code(2, 1).unwrap();
    let combined = Code::new(mattson_combined(&g, &g, None).unwrap());
    let c = Code::new(g);
    for metric in [Metric::Lee, Metric::Euclidean] {
        let rep = mattson_bound(&c, &c, &combined, metric, &budget).unwrap();
        assert!(rep.holds);
        assert!(rep.combined <= 4);
    }
}
