//! Cross-checks of constructions against independent brute-force routes.

use extremal_core::format::from_graph6;
use extremal_core::{
    bfs_layers, build_backbone, canonical_form, diameter, enumerate_family, is_isomorphic,
    is_k_connected, layer_structure_check, local_connectivity, max_size_bruteforce,
    vertex_connectivity, Diameter, Graph, OracleConfig, Parameters, VertexSet,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Smallest set of vertices other than `s`, `t` whose removal separates them.
fn brute_separator(g: &Graph, s: usize, t: usize) -> usize {
    let others = g.vertices().difference(VertexSet::from_iter([s, t]));
    let mut best = usize::MAX;
    let mut sub = others.bits();
    loop {
        let cut = VertexSet::from_bits(sub);
        if cut.len() < best && !g.component_of(s, cut).contains(t) {
            best = cut.len();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others.bits();
    }
    best
}

fn random_graph(rng: &mut StdRng, max_order: usize) -> Graph {
    let n = rng.gen_range(2..=max_order);
    let p: f64 = rng.gen_range(0.2..0.9);
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

#[test]
fn menger_matches_brute_separators() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 7);
        for s in 0..g.order() {
            for t in s + 1..g.order() {
                if g.has_edge(s, t) {
                    continue;
                }
                assert_eq!(
                    local_connectivity(&g, s, t).unwrap(),
                    brute_separator(&g, s, t),
                    "{g:?} {s} {t}"
                );
            }
        }
    }
}

#[test]
fn backbone_pole_connectivity() {
    let (t, blocks) = build_backbone(2, 4).unwrap();
    let (x, y) = blocks.poles;
    assert_eq!(local_connectivity(&t, x, y).unwrap(), 2);
    assert_eq!(brute_separator(&t, x, y), 2);
}

#[test]
fn backbone_kappa_three() {
    let (t, _) = build_backbone(3, 4).unwrap();
    assert_eq!(t.order(), 11);
    assert_eq!(vertex_connectivity(&t).unwrap().kappa, 3);
    // no separating set of size at most 2, and some of size 3
    let n = t.order();
    let smallest = (0..1u64 << n)
        .map(VertexSet::from_bits)
        .filter(|s| s.len() <= 3 && !t.is_connected_without(*s))
        .map(|s| s.len())
        .min();
    assert_eq!(smallest, Some(3));
}

#[test]
fn backbone_invariants() {
    let (t, blocks) = build_backbone(2, 3).unwrap();
    assert_eq!(t.size(), 10);
    assert_eq!(diameter(&t).unwrap(), Diameter::Finite(3));
    let middle = blocks.blocks[1].union(blocks.blocks[2]);
    let sub = t.induced_subgraph(middle).unwrap();
    assert_eq!(sub, Graph::complete(4).unwrap());

    for k in 1..=2 {
        for d in 2..=5 {
            let (t, blocks) = build_backbone(k, d).unwrap();
            let (x, y) = blocks.poles;
            assert!(layer_structure_check(&t, x, y, k).unwrap(), "k={k} d={d}");
            let profile = bfs_layers(&t, x).unwrap();
            assert_eq!(profile.eccentricity, d);
        }
    }
}

#[test]
fn canonical_form_ignores_labels() {
    let (t, _) = build_backbone(2, 3).unwrap();
    let form = canonical_form(&t).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    let mut perm: Vec<usize> = (0..t.order()).collect();
    for _ in 0..100 {
        perm.shuffle(&mut rng);
        assert_eq!(canonical_form(&t.relabel(&perm).unwrap()).unwrap(), form);
    }
}

#[test]
fn oracle_and_family_agree_on_small_cases() {
    let cfg = OracleConfig::default();
    let mut k4_minus = Graph::complete(4).unwrap();
    k4_minus.remove_edge(2, 3).unwrap();
    let fam = enumerate_family(Parameters::new(4, 1, 2).unwrap()).unwrap();
    assert!(is_isomorphic(&k4_minus, &fam[0]).unwrap());

    let r = max_size_bruteforce(Parameters::new(7, 2, 3).unwrap(), &cfg).unwrap();
    assert_eq!(r.max_size, Some(15));
    for code in &r.extremal {
        let g = from_graph6(code.as_bytes()).unwrap();
        assert!(is_k_connected(&g, 2));
    }
}

#[test]
fn family_is_sorted_and_distinct() {
    for (n, k, d) in [(8, 1, 5), (8, 1, 4), (9, 1, 5), (10, 2, 3)] {
        let fam = enumerate_family(Parameters::new(n, k, d).unwrap()).unwrap();
        let forms: Vec<_> = fam.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]), "({n},{k},{d})");
    }
}
