//! A fixed collection of small named graphs used for cross-checking the
//! models against the exhaustive oracles.

use crate::graph::Graph;
use crate::instance::{Family, InstanceSpec};

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

fn labelled_graphs(n: usize) -> impl Iterator<Item = CorpusGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        CorpusGraph {
            name: format!("labelled:{n},{mask}"),
            graph: Graph::from_edges(n, edges).expect("valid labelled graph"),
        }
    })
}

fn from_specs(specs: impl IntoIterator<Item = InstanceSpec>) -> impl Iterator<Item = CorpusGraph> {
    specs.into_iter().map(|spec| CorpusGraph {
        name: spec.to_string(),
        graph: spec.generate().expect("corpus specs are valid"),
    })
}

/// Every labelled graph on 1 to 4 vertices, the named families at small
/// sizes, and seeded random graphs on 5 to 14 vertices.
pub fn small_corpus() -> Vec<CorpusGraph> {
    let mut out: Vec<CorpusGraph> = (1..=4).flat_map(labelled_graphs).collect();
    let mut specs = Vec::new();
    for n in 1..=7 {
        specs.push(InstanceSpec::new(Family::Complete, [n]));
    }
    for m in 1..=4 {
        for n in m..=5 {
            specs.push(InstanceSpec::new(Family::CompleteBipartite, [m, n]));
        }
    }
    for n in 3..=12 {
        specs.push(InstanceSpec::new(Family::Cycle, [n]));
    }
    for n in 1..=12 {
        specs.push(InstanceSpec::new(Family::Path, [n]));
    }
    for k in 1..=6 {
        specs.push(InstanceSpec::new(Family::Queen2xK, [k]));
        specs.push(InstanceSpec::new(Family::Rook2xK, [k]));
    }
    for k in 1..=3 {
        specs.push(InstanceSpec::new(Family::RookKxK, [k]));
    }
    for k in 2..=3 {
        specs.push(InstanceSpec::new(Family::BishopKxK, [k]));
    }
    specs.push(InstanceSpec::new(Family::KnightKxK, [3]));
    specs.push(InstanceSpec::new(Family::FlowerSnark, [3]));
    for n in 3..=7 {
        for k in 1..n {
            if 2 * k < n {
                specs.push(InstanceSpec::new(Family::GenPetersen, [n, k]));
            }
        }
    }
    for n in 5..=14 {
        for d in [1, 2, 3, 4, 5, 6] {
            if d <= n {
                for seed in 0..2 {
                    specs.push(InstanceSpec::new(Family::ErdosRenyi, [n, d]).with_seed(seed));
                }
            }
        }
    }
    out.extend(from_specs(specs));
    out
}
