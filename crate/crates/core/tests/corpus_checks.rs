use updom::corpus::small_corpus;
use updom::{
    alpha_oracle, bazgan_bounds, build_domination, build_f1, build_f2, gamma_oracle,
    rosenfeld_bound, solve, Family, Graph, InstanceSpec, Status, VertexSet,
};

fn optimum(m: &updom::LinearModel) -> i64 {
    let r = solve(m, 600.0).unwrap();
    assert_eq!(r.status, Status::Optimal);
    r.objective.unwrap()
}

#[test]
fn formulations_agree_with_oracle_on_corpus() {
    for entry in small_corpus() {
        let g = &entry.graph;
        let gamma = gamma_oracle(g).unwrap();
        assert!(g.is_minimal_dominating(&gamma.witness).unwrap());
        let f1 = optimum(&build_f1(g, true));
        let f1_min = optimum(&build_f1(g, false));
        let f2 = optimum(&build_f2(g));
        assert_eq!(
            (f1, f1_min, f2),
            (gamma.gamma as i64, gamma.gamma as i64, gamma.gamma as i64),
            "{}",
            entry.name
        );
        assert!(optimum(&build_domination(g)) <= f1, "{}", entry.name);
    }
}

#[test]
fn bounds_sandwich_on_corpus() {
    for entry in small_corpus() {
        let g = &entry.graph;
        let gamma = gamma_oracle(g).unwrap().gamma;
        let b = bazgan_bounds(g).unwrap();
        assert!(
            b.lower <= gamma && gamma <= b.upper,
            "{}: {b:?} vs {gamma}",
            entry.name
        );
        if let Some(cap) = rosenfeld_bound(g) {
            assert!(b.alpha <= cap, "{}", entry.name);
        }
    }
}

#[test]
fn petersen_upper_domination_is_n() {
    for n in 3..=8usize {
        for k in (1..n).filter(|k| 2 * k < n) {
            let g = InstanceSpec::new(Family::GenPetersen, [n, k])
                .generate()
                .unwrap();
            assert_eq!(optimum(&build_f1(&g, true)), n as i64, "P({n},{k})");
            let outer = VertexSet::new((0..n).collect());
            assert!(g.is_minimal_dominating(&outer).unwrap(), "P({n},{k})");
            let b = bazgan_bounds(&g).unwrap();
            assert!(b.corollary_applies);
            assert_eq!(b.upper, n);
        }
    }
}

#[test]
fn petersen_graph_independence_number() {
    let g: Graph = "gen_petersen:5,2"
        .parse::<InstanceSpec>()
        .unwrap()
        .generate()
        .unwrap();
    assert_eq!(alpha_oracle(&g).unwrap(), 4);
}

#[test]
fn solve_is_deterministic_across_corpus_sample() {
    for entry in small_corpus().into_iter().step_by(17) {
        let m = build_f2(&entry.graph);
        let a = solve(&m, 60.0).unwrap();
        let b = solve(&m, 60.0).unwrap();
        assert_eq!(
            (a.nodes_explored, a.objective),
            (b.nodes_explored, b.objective)
        );
        assert_eq!(a.assignment, b.assignment);
    }
}
