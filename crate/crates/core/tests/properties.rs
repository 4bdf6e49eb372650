use cayley_nut_core::graph::Graph;
use cayley_nut_core::group::{cyclic_group, direct_product};
use cayley_nut_core::linalg::{adjacency_matrix, kernel_basis, matvec};
use cayley_nut_core::{
    cartesian_product, cayley_graph, circulant_graph, complement, decode_graph6, encode_graph6,
    ConnectionSet, GeneratorSet,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_connection_set() -> impl Strategy<Value = ConnectionSet> {
    (1usize..=20).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n / 2).prop_map(move |mask| {
            let steps = mask
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i + 1);
            ConnectionSet::new(n, steps).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let s = encode_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode_graph6(&s).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operations_preserve_invariants(a in arb_graph(7), b in arb_graph(5)) {
        let p = cartesian_product(&a, &b);
        prop_assert!(p.check_invariants());
        prop_assert_eq!(p.order(), a.order() * b.order());
        for x in 0..p.order() {
            let (u, v) = (x / b.order(), x % b.order());
            prop_assert_eq!(p.degree(x), a.degree(u) + b.degree(v));
        }
        let c = complement(&a);
        prop_assert!(c.check_invariants());
        prop_assert_eq!(complement(&c), a.clone());
        if let Some(k) = a.regular_degree() {
            prop_assert_eq!(c.regular_degree(), Some(a.order() - 1 - k));
        }
    }

    #[test]
    fn circulant_equals_cayley_of_cyclic(cs in arb_connection_set()) {
        let n = cs.order();
        let z = cyclic_group(n).unwrap();
        let gens = cs.steps().iter().flat_map(|&s| [s, n - s]);
        let s = GeneratorSet::new(&z, gens).unwrap();
        let cay = cayley_graph(&z, &s).unwrap();
        let circ = circulant_graph(&cs);
        prop_assert!(circ.check_invariants());
        prop_assert_eq!(circ.regular_degree(), if n == 0 { None } else { Some(cs.degree()) });
        prop_assert_eq!(cay, circ);
    }

    #[test]
    fn kernel_is_exact_and_rank_nullity_holds(g in arb_graph(10)) {
        let a = adjacency_matrix(&g);
        prop_assert!(a.is_adjacency());
        for v in 0..g.order() {
            let row_sum: usize = a.row(v).iter().filter(|x| **x == 1.into()).count();
            prop_assert_eq!(row_sum, g.degree(v));
        }
        let k = kernel_basis(&a);
        prop_assert_eq!(k.rank() + k.nullity(), g.order());
        for v in k.vectors() {
            prop_assert!(v.is_canonical());
            prop_assert!(matvec(&a, v).unwrap().is_zero());
        }
    }

    #[test]
    fn kernel_commutes_with_relabeling(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.order();
        // Deterministic permutation from the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let relabeled = Graph::from_edges(n, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        let k1 = kernel_basis(&adjacency_matrix(&g));
        let k2 = kernel_basis(&adjacency_matrix(&relabeled));
        prop_assert_eq!(k1.nullity(), k2.nullity());
        // Moved kernel vectors lie in the relabeled kernel.
        let a2 = adjacency_matrix(&relabeled);
        for v in k1.vectors() {
            prop_assert!(matvec(&a2, &v.permuted(&perm)).unwrap().is_zero());
        }
        if k1.nullity() == 1 {
            prop_assert_eq!(k1.vectors()[0].permuted(&perm).canonical(), k2.vectors()[0].clone());
        }
    }
}

#[test]
fn product_groups_are_abelian_and_associative() {
    for a in 1..=6 {
        for b in 1..=5 {
            let g = direct_product(&cyclic_group(a).unwrap(), &cyclic_group(b).unwrap());
            assert!(g.is_abelian());
            assert!(g.is_associative());
            assert!(g.is_latin_square());
        }
    }
}
