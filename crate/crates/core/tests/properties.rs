mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use chromsym::csf::chromatic_symmetric_function;
use chromsym::graph::{has_almost_perfect_matching, has_perfect_matching, make_spider, Graph, SpiderSpec};
use chromsym::partition::{partitions_of, Partition};
use chromsym::positivity::{has_connected_partition, has_stable_partition};
use chromsym::spider::{all_witnesses, spider_matching_class, MatchingClass};
use chromsym::symfunc::{Basis, Rational, SymFunc};
use chromsym::treegen::TreeCode;
use common::*;

const BASES: [Basis; 4] = [Basis::P, Basis::M, Basis::E, Basis::S];

fn sym_func(basis: Basis, n: usize, picks: &[(usize, i64, i64)]) -> SymFunc {
    let parts = partitions_of(n);
    let terms = picks.iter().map(|&(i, num, den)| {
        (parts[i % parts.len()].clone(), Rational::new(BigInt::from(num), BigInt::from(den)))
    });
    let mut f = SymFunc::zero(basis, n);
    for (l, c) in terms {
        f.add_term(l, c).unwrap();
    }
    f
}

fn permuted(g: &Graph, keys: &[u64]) -> Graph {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| keys[v % keys.len()].wrapping_mul(v as u64 + 1));
    let pos: Vec<usize> = {
        let mut p = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (pos[u], pos[v]))).unwrap()
}

fn spider_spec() -> impl Strategy<Value = SpiderSpec> {
    prop::collection::vec(1usize..=6, 3..=6)
        .prop_filter("n <= 12", |legs| legs.iter().sum::<usize>() < 12)
        .prop_map(|legs| SpiderSpec::from_legs(legs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_changes_round_trip(
        n in 1usize..=7,
        picks in prop::collection::vec((0usize..100, -9i64..=9, 1i64..=4), 1..6),
        from in 0usize..4,
        to in 0usize..4,
    ) {
        let f = sym_func(BASES[from], n, &picks);
        let back = f.to_basis(BASES[to]).unwrap().to_basis(BASES[from]).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn csf_ignores_vertex_labels(n in 2usize..=8, extra in 0usize..5, seed in 1u64.., keys in prop::collection::vec(any::<u64>(), 8)) {
        let g = random_connected_graph(n, extra, seed);
        let h = permuted(&g, &keys);
        prop_assert_eq!(chromatic_symmetric_function(&g).unwrap(), chromatic_symmetric_function(&h).unwrap());
    }

    #[test]
    fn tree_codes_ignore_vertex_labels(n in 1usize..=16, seed in 1u64.., keys in prop::collection::vec(any::<u64>(), 16)) {
        let t = random_connected_graph(n, 0, seed);
        let code = TreeCode::from_graph(&t).unwrap();
        prop_assert_eq!(&TreeCode::from_graph(&permuted(&t, &keys)).unwrap(), &code);
        prop_assert_eq!(ahu_canonical(&code.to_graph()), ahu_canonical(&t));
    }

    #[test]
    fn connected_search_matches_set_partitions(n in 1usize..=8, extra in 0usize..6, seed in 1u64..) {
        let g = random_connected_graph(n, extra, seed);
        let types = connected_types_by_set_partitions(&g);
        for mu in partitions_of(n) {
            prop_assert_eq!(has_connected_partition(&g, &mu).unwrap(), types.contains(&mu));
        }
    }

    #[test]
    fn stable_types_are_colour_count_vectors(n in 2usize..=8, extra in 0usize..8, seed in 1u64..) {
        let g = random_connected_graph(n, extra, seed);
        let m = chromatic_symmetric_function(&g).unwrap().to_basis(Basis::M).unwrap();
        for mu in partitions_of(n) {
            let coloured = m.coeff(&mu) != Rational::from_integer(0.into());
            prop_assert_eq!(has_stable_partition(&g, &mu).unwrap(), coloured);
        }
    }

    #[test]
    fn e_positive_implies_schur_positive(n in 2usize..=9, extra in 0usize..6, seed in 1u64..) {
        let x = chromatic_symmetric_function(&random_connected_graph(n, extra, seed)).unwrap();
        if x.to_basis(Basis::E).unwrap().is_nonnegative() {
            prop_assert!(x.to_basis(Basis::S).unwrap().is_nonnegative());
        }
    }

    #[test]
    fn spider_witnesses_are_missing(spec in spider_spec()) {
        let g = make_spider(&spec).unwrap();
        for w in all_witnesses(&spec) {
            prop_assert_eq!(w.missing_type.weight(), spec.n());
            prop_assert!(!has_connected_partition(&g, &w.missing_type).unwrap(), "{}", w);
        }
    }

    #[test]
    fn matching_class_agrees_with_search(spec in spider_spec()) {
        let g = make_spider(&spec).unwrap();
        let class = spider_matching_class(&spec);
        let matched = if spec.n() % 2 == 0 { has_perfect_matching(&g) } else { has_almost_perfect_matching(&g) };
        prop_assert_eq!(class != MatchingClass::Neither, matched);
        prop_assert_eq!(class == MatchingClass::Perfect, has_perfect_matching(&g));
    }

    #[test]
    fn dominance_is_antisymmetric(n in 1usize..=12, i in 0usize..1000, j in 0usize..1000) {
        let parts = partitions_of(n);
        let (a, b): (&Partition, &Partition) = (&parts[i % parts.len()], &parts[j % parts.len()]);
        if a.dominates(b).unwrap() && b.dominates(a).unwrap() {
            prop_assert_eq!(a, b);
        }
        prop_assert_eq!(a.dominates(b).unwrap(), b.transpose().dominates(&a.transpose()).unwrap());
    }
}
