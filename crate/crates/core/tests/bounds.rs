mod common;

use triple_roman::bounds::*;
use triple_roman::exact::gamma_3r_bnb;
use triple_roman::graph::generators::*;
use triple_roman::graph::Graph;
use triple_roman::labeling::verify_3rdf;

fn check_sandwich(g: &Graph) {
    let exact = gamma_3r_bnb(g).unwrap().weight;
    let report = best_bounds(g).with_exact(exact);
    for e in &report.entries {
        assert!(e.admits(exact), "{} on {g:?}: exact {exact}", e.name);
        if let Some(c) = &e.certificate {
            assert!(common::is_krdf(g, c.values(), 3), "{}", e.name);
            assert!(c.weight() <= e.value.unwrap(), "{}", e.name);
        }
    }
    if let (Some(lo), Some(hi)) = (report.best_lower, report.best_upper) {
        assert!(lo <= exact && exact <= hi);
    }
}

#[test]
fn datapoints() {
    let c5 = best_bounds(&cycle(5).unwrap());
    assert_eq!(c5.entry("max_degree").unwrap().value, Some(10));
    assert_eq!(c5.entry("probabilistic").unwrap().value, Some(12));
    let c9 = best_bounds(&cycle(9).unwrap());
    assert_eq!(c9.entry("probabilistic").unwrap().value, Some(21));
    assert_eq!(c9.entry("max_degree").unwrap().value, Some(22));
    let c7 = best_bounds(&cycle(7).unwrap()).with_exact(10);
    let e = c7.entry("regular_girth7").unwrap();
    assert_eq!((e.value, e.tight), (Some(10), Some(true)));
    let p4 = best_bounds(&path(4).unwrap()).with_exact(7);
    assert_eq!(p4.entry("max_degree").unwrap().tight, Some(true));
    let s5 = best_bounds(&star(5).unwrap());
    assert_eq!((s5.best_lower, s5.best_upper), (Some(4), Some(4)));
}

#[test]
fn applicability_reasons() {
    let p1 = Graph::empty(1).unwrap();
    let r = best_bounds(&p1);
    assert!(!r.entry("trivial_2p").unwrap().applicable);
    assert!(!r.entry("probabilistic").unwrap().applicable);
    let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    let r = best_bounds(&two);
    let e = r.entry("max_degree").unwrap();
    assert_eq!(e.value, Some(8));
    assert!(e.reason.starts_with("extension"));
    assert!(!r.entry("diameter").unwrap().applicable);
}

#[test]
fn sandwich_on_small_connected_graphs() {
    for g in common::connected_graphs_up_to(6) {
        check_sandwich(&g);
    }
}

#[test]
fn sandwich_on_random_graphs() {
    for s in 0..60u64 {
        let g = common::random_connected(5 + (s as usize % 10), 0.25, 7 + s);
        check_sandwich(&g);
    }
    for p in 3..=14 {
        check_sandwich(&cycle(p).unwrap());
        check_sandwich(&path(p).unwrap());
    }
    check_sandwich(&complete_bipartite(3, 4).unwrap());
    check_sandwich(&spider(&[2, 2, 2]).unwrap());
}

#[test]
fn girth_constructions_on_named_graphs() {
    // Petersen graph: 3-regular, girth 5
    let petersen = Graph::from_edges(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    let e = ub_girth5(&petersen);
    assert_eq!(e.value, Some(2 * 10 - 6 + 1));
    assert!(verify_3rdf(&petersen, e.certificate.as_ref().unwrap()).unwrap().is_valid());
    check_sandwich(&petersen);
    // Heawood graph: 3-regular, girth 6, so the girth-7 construction is out
    let heawood = Graph::from_edges(
        14,
        (0..14).map(|i| (i, (i + 1) % 14)).chain((0..14).step_by(2).map(|i| (i, (i + 5) % 14))),
    )
    .unwrap();
    assert_eq!(heawood.girth(), Some(6));
    assert!(!ub_regular_girth7(&heawood).applicable);
    check_sandwich(&heawood);
}

#[test]
fn randomized_certificates_are_seed_stable() {
    let g = common::random_connected(30, 0.2, 5);
    let a = randomized_3rdf(&g, 11, 32).unwrap();
    assert_eq!(a, randomized_3rdf(&g, 11, 32).unwrap());
    assert!(common::is_krdf(&g, a.values(), 3));
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let b = pool.install(|| randomized_3rdf(&g, 11, 32).unwrap());
    assert_eq!(a, b);
}

#[test]
fn degree_domination_with_universal_vertex() {
    for s in 0..10u64 {
        let p = 3 + (s as usize % 9);
        let mut g = common::random_connected(p, 0.3, s);
        for v in 1..p {
            g = g.with_edge(0, v).unwrap();
        }
        assert_eq!(lb_degree_domination(&g, None).value, Some(4));
    }
}
