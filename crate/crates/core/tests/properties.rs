use std::collections::BTreeSet;

use plantw::corpus::{random_tree, random_triconnected, glue};
use plantw::io::{read_gr, read_td, write_gr, write_td};
use plantw::latching::build_latching;
use plantw::minsep::minimal_separators;
use plantw::oracle::{minseps_bruteforce, pmcs_bruteforce, treewidth_bruteforce};
use plantw::planar::{embed, is_planar};
use plantw::pmc::{pmcs, pmcs_plane};
use plantw::steering::check_certificate;
use plantw::td::validate_td;
use plantw::treewidth::{treewidth_from_pmcs, treewidth_planar};
use plantw::{Graph, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn triconnected(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deletions = rng.gen_range(0..=n);
    random_triconnected(&mut rng, n, deletions)
}

fn gnp(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// `gnp` plus a random spanning tree.
fn connected_gnp(seed: u64, n: usize, p: f64) -> Graph {
    let g = gnp(seed, n, p);
    let tree = random_tree(&mut ChaCha8Rng::seed_from_u64(!seed), n);
    g.with_edges(tree.edges().filter(|&(u, v)| !g.has_edge(u, v))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pmcs_equal_bruteforce(seed in any::<u64>(), n in 5usize..=11) {
        let g = triconnected(seed, n);
        let got: Vec<VertexSet> = pmcs(&g).unwrap().map(|p| p.vertices).collect();
        let set: BTreeSet<_> = got.iter().cloned().collect();
        prop_assert_eq!(set.len(), got.len());
        let want: BTreeSet<_> = pmcs_bruteforce(&g).unwrap().into_iter().collect();
        prop_assert_eq!(set, want);
    }

    #[test]
    fn certificates_replay(seed in any::<u64>(), n in 5usize..=14) {
        let g = triconnected(seed, n);
        let it = pmcs(&g).unwrap();
        let l = it.latching().cloned().unwrap();
        for p in it {
            let sub = l.induced(&p.vertices);
            let mut local = vec![usize::MAX; g.n()];
            for (i, &v) in sub.labels.iter().enumerate() {
                local[v] = i;
            }
            prop_assert!(check_certificate(&sub.graph, &p.certificate.relabel(&local)));
            prop_assert!(l.is_plane_induced(&p.vertices));
        }
    }

    #[test]
    fn mirrored_embedding_gives_the_same_answers(seed in any::<u64>(), n in 5usize..=10) {
        let g = triconnected(seed, n);
        let pg = embed(&g).unwrap();
        let a: BTreeSet<_> = pmcs_plane(&pg).unwrap().map(|p| p.vertices).collect();
        let b: BTreeSet<_> = pmcs_plane(&pg.mirrored()).unwrap().map(|p| p.vertices).collect();
        prop_assert_eq!(a, b);
        let sa: BTreeSet<_> = minimal_separators(&build_latching(&pg).unwrap()).map(|s| s.vertices).collect();
        let sb: BTreeSet<_> = minimal_separators(&build_latching(&pg.mirrored()).unwrap()).map(|s| s.vertices).collect();
        prop_assert_eq!(&sa, &sb);
        prop_assert_eq!(sa, minseps_bruteforce(&g).unwrap().into_iter().collect::<BTreeSet<_>>());
    }

    #[test]
    fn treewidth_of_glued_planar_graphs(seed in any::<u64>(), a in 4usize..=7, b in 2usize..=7, shared in 1usize..=2) {
        let ga = triconnected(seed, a);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let gb = if b < 4 { random_tree(&mut rng, b) } else { triconnected(seed.rotate_left(7), b) };
        let shared = shared.min(b);
        let pairs: Vec<_> = (0..shared).map(|i| (i, i)).collect();
        let g = glue(&ga, &gb, &pairs);
        prop_assume!(is_planar(&g));
        let res = treewidth_planar(&g).unwrap();
        prop_assert_eq!(res.width, treewidth_bruteforce(&g).unwrap());
        prop_assert!(validate_td(&g, &res.td));
        prop_assert_eq!(res.td.width(), res.width);
        prop_assert_eq!(res.stats.split_mismatches, 0);
    }

    #[test]
    fn dynamic_program_on_arbitrary_graphs(seed in any::<u64>(), n in 1usize..=9, p in 0.1f64..0.9) {
        let g = connected_gnp(seed, n, p);
        let all = pmcs_bruteforce(&g).unwrap();
        let (w, td) = treewidth_from_pmcs(&g, &all).unwrap();
        prop_assert_eq!(w, treewidth_bruteforce(&g).unwrap());
        prop_assert!(validate_td(&g, &td));
        prop_assert_eq!(td.width(), w);
    }

    #[test]
    fn pace_roundtrips(seed in any::<u64>(), n in 1usize..=20, p in 0.0f64..1.0) {
        let g = gnp(seed, n, p);
        prop_assert_eq!(read_gr(&write_gr(&g)).unwrap(), g.clone());
        if is_planar(&g) {
            let td = treewidth_planar(&g).unwrap().td;
            let (back, m) = read_td(&write_td(&td, n)).unwrap();
            prop_assert_eq!(m, n);
            prop_assert_eq!(back, td);
        }
    }
}
