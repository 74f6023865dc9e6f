use proptest::prelude::*;
use updom::{
    build_domination, build_f1, build_f2, encode_f1, encode_f2, enumerate_minimal_dominating,
    gamma_oracle, solve, Formulation, GammaCertificate, Graph, Provenance, Status, VertexSet,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (proptest::collection::vec(any::<bool>(), pairs), 0..=100u32).prop_map(
            move |(bits, keep)| {
                // thin the edge set so sparse graphs (and isolated vertices) show up
                let edges = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .zip(bits)
                    .enumerate()
                    .filter(|(i, (_, b))| *b && (*i as u32 * 37 % 101) <= keep)
                    .map(|(_, (e, _))| e);
                Graph::from_edges(n, edges).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph_structure(g in arb_graph(12)) {
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.m());
        for v in 0..g.n() {
            let closed = g.closed_neighborhood(v).unwrap();
            prop_assert!(closed.contains(v));
            prop_assert_eq!(closed.len(), g.degree(v) + 1);
            for u in closed.iter().filter(|&u| u != v) {
                prop_assert!(g.closed_neighborhood(u).unwrap().contains(v));
            }
        }
        prop_assert_eq!(Graph::parse_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn minimal_implies_dominating(g in arb_graph(10), mask in any::<u64>()) {
        let s = VertexSet::from_mask(mask & ((1u64 << g.n()) - 1));
        if g.is_minimal_dominating(&s).unwrap() {
            prop_assert!(g.is_dominating(&s).unwrap());
        }
    }

    #[test]
    fn every_minimal_set_encodes_feasibly(g in arb_graph(9)) {
        let f1 = build_f1(&g, true);
        let f1min = build_f1(&g, false);
        let f2 = build_f2(&g);
        for s in enumerate_minimal_dominating(&g, 500).unwrap().sets {
            let a1 = encode_f1(&g, &s).unwrap();
            prop_assert!(f1.check_feasible(&a1).unwrap().is_feasible());
            prop_assert!(f1min.check_feasible(&a1).unwrap().is_feasible());
            prop_assert_eq!(f1.decode(&a1).unwrap(), s.clone());
            let a2 = encode_f2(&g, &s).unwrap();
            prop_assert!(f2.check_feasible(&a2).unwrap().is_feasible());
            prop_assert_eq!(f2.decode(&a2).unwrap(), s);
        }
    }

    #[test]
    fn solver_matches_oracle(g in arb_graph(11)) {
        let oracle = gamma_oracle(&g).unwrap();
        for (f, prov) in [
            (Formulation::F1, Provenance::F1),
            (Formulation::F1Min, Provenance::F1),
            (Formulation::F2, Provenance::F2),
        ] {
            let m = f.build(&g);
            let r = solve(&m, 60.0).unwrap();
            prop_assert_eq!(r.status, Status::Optimal);
            prop_assert_eq!(r.objective, Some(oracle.gamma as i64));
            let cert = GammaCertificate::from_solution(&g, &m, r.assignment.as_ref().unwrap(), prov).unwrap();
            prop_assert_eq!(cert.gamma, oracle.gamma);
        }
        let dom = solve(&build_domination(&g), 60.0).unwrap();
        prop_assert!(dom.objective.unwrap() <= oracle.gamma as i64);
    }
}
