use proptest::prelude::*;

use partdim::io::{read_graph, read_partition, write_graph, write_partition};
use partdim::{
    dim_k_bruteforce, dimensional_value, distinguishing_set, is_k_metric_generator,
    is_k_partition_generator, is_k_partition_generator_full, min_block_support, pair_block_support,
    pd_k_bruteforce, random_tree, set_distance, Graph, VertexPartition,
};

/// A random spanning tree plus a random subset of the remaining pairs.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, seed, extra)| {
        let tree = random_tree(n, seed);
        let mut edges = tree.edges();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if !tree.has_edge(u, v) && extra >> (bit % 64) & 1 == 1 && bit % 3 == 0 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    })
}

fn graph_with_partition(max_n: usize) -> impl Strategy<Value = (Graph, VertexPartition)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        prop::collection::vec(0..n, n)
            .prop_map(move |labels| (g.clone(), VertexPartition::from_labels(&labels)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_form_a_metric(g in connected_graph(12)) {
        let d = g.distances().unwrap();
        for u in g.vertices() {
            prop_assert_eq!(d.get(u, u), 0);
            for v in g.vertices() {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                for w in g.vertices() {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn distinguishing_blocks_contain_a_distinguishing_vertex((g, p) in graph_with_partition(9)) {
        let n = g.order();
        for x in 0..n {
            for y in x + 1..n {
                let d = distinguishing_set(&g, x, y).unwrap();
                prop_assert!(d.contains(&x) && d.contains(&y));
                let mut separating = 0;
                for block in p.blocks() {
                    let dx = set_distance(&g, x, block).unwrap();
                    let dy = set_distance(&g, y, block).unwrap();
                    if dx != dy {
                        separating += 1;
                        prop_assert!(block.iter().any(|z| d.contains(z)));
                    }
                }
                prop_assert_eq!(separating, pair_block_support(&g, &p, x, y).unwrap());
                prop_assert!(separating <= d.len());
            }
        }
        let (support, _) = min_block_support(&g, &p).unwrap();
        prop_assert!(support <= dimensional_value(&g).unwrap());
    }

    #[test]
    fn same_block_shortcut_agrees_with_full_check((g, p) in graph_with_partition(10), k in 1usize..=2) {
        prop_assert_eq!(
            is_k_partition_generator(&g, &p, k).unwrap(),
            is_k_partition_generator_full(&g, &p, k).unwrap()
        );
    }

    #[test]
    fn generators_are_generators_one_level_down((g, p) in graph_with_partition(9)) {
        let (support, _) = min_block_support(&g, &p).unwrap();
        for k in 1..=support {
            prop_assert!(is_k_partition_generator_full(&g, &p, k).unwrap());
        }
        prop_assert!(!is_k_partition_generator_full(&g, &p, support + 1).unwrap());
    }

    #[test]
    fn dimensions_grow_with_k(g in connected_graph(7)) {
        let d = dimensional_value(&g).unwrap();
        let mut last = (0, 0);
        for k in 1..=d {
            let dim = dim_k_bruteforce(&g, k).unwrap();
            let pd = pd_k_bruteforce(&g, k).unwrap();
            prop_assert!(is_k_metric_generator(&g, dim.basis.as_ref().unwrap(), k).unwrap());
            prop_assert!(is_k_partition_generator_full(&g, &pd.basis, k).unwrap());
            prop_assert!(dim.value >= last.0 && pd.value >= last.1);
            prop_assert!(pd.value >= k);
            last = (dim.value, pd.value);
        }
    }

    #[test]
    fn files_round_trip((g, p) in graph_with_partition(12)) {
        let back = read_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(read_partition(&write_partition(&p), &g).unwrap(), p);
    }
}
