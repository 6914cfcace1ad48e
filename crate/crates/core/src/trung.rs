//! Trung's construction and the girth-4 family it generates from `C5`.
//!
//! `Tr(H, v)` adds three vertices `a`, `b`, `c` to `H` with edges `a-v`,
//! `a-b`, `b-c`, and `c-u` for every neighbor `u` of `v`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{GraphError, TrungError};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// `Tr(H, v)` plus the labels of its three new vertices. The original
/// vertices of `H` keep their indices, so `v` is unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrungResult {
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub v: usize,
}

#[derive(Serialize)]
struct Labels {
    a: usize,
    b: usize,
    c: usize,
    v: usize,
}

impl TrungResult {
    /// The original graph `H`, recovered as the induced subgraph on `0..n`.
    pub fn base_vertices(&self) -> VertexSet {
        VertexSet::full(self.a)
    }

    pub fn labels_json(&self) -> serde_json::Value {
        serde_json::to_value(Labels {
            a: self.a,
            b: self.b,
            c: self.c,
            v: self.v,
        })
        .expect("labels serialize")
    }
}

/// Builds `Tr(H, v)` with `a = n`, `b = n + 1`, `c = n + 2`.
pub fn trung(h: &Graph, v: usize) -> Result<TrungResult, TrungError> {
    h.check_vertex(v)?;
    if h.degree(v) == 0 {
        return Err(TrungError::IsolatedVertex(v));
    }
    let n = h.n();
    if n + 3 > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n + 3).into());
    }
    let (a, b, c) = (n, n + 1, n + 2);
    let mut adj: Vec<u64> = h.adjacency().to_vec();
    adj.extend([0, 0, 0]);
    let mut join = |x: usize, y: usize| {
        adj[x] |= 1u64 << y;
        adj[y] |= 1u64 << x;
    };
    join(a, v);
    join(a, b);
    join(b, c);
    for u in h.neighbors(v).iter() {
        join(c, u);
    }
    let graph = Graph::from_adjacency(adj)?;
    Ok(TrungResult { graph, a, b, c, v })
}

/// Maximal independent sets of `Tr(H, v)` assembled from those of `H`:
/// `A + a`, `A + b` for `v` not in `A`, and `B + c`, `B + b`, `B - v + a + c`
/// for `v` in `B`. Labels follow [`trung`].
pub fn maximal_ind_sets_via_remark(h: &Graph, v: usize) -> Result<BTreeSet<VertexSet>, TrungError> {
    let tr = trung(h, v)?;
    let mut out = BTreeSet::new();
    for m in h.maximal_independent_sets() {
        if m.contains(v) {
            out.insert(m.with(tr.c));
            out.insert(m.with(tr.b));
            out.insert(m.without(v).with(tr.a).with(tr.c));
        } else {
            out.insert(m.with(tr.a));
            out.insert(m.with(tr.b));
        }
    }
    Ok(out)
}

/// How the generator picks the degree-2 vertex at each step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Smallest-index degree-2 vertex.
    #[default]
    First,
    /// Uniform over degree-2 vertices, driven by a seeded ChaCha stream.
    Random { seed: u64 },
}

/// Largest step count that stays within the vertex capacity.
pub const MAX_FAMILY_STEPS: usize = (MAX_VERTICES - 5) / 3;

/// Applies the construction `steps` times starting from `C5`, each time at a
/// degree-2 vertex, and returns every intermediate result.
pub fn generate_girth4_family(steps: usize, strategy: Strategy) -> Result<Vec<TrungResult>, TrungError> {
    if steps == 0 {
        return Err(TrungError::NoSteps);
    }
    if steps > MAX_FAMILY_STEPS {
        return Err(GraphError::TooManyVertices(5 + 3 * steps).into());
    }
    let mut rng = match strategy {
        Strategy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::First => None,
    };
    let mut current = c5();
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let candidates: Vec<usize> = (0..current.n()).filter(|&u| current.degree(u) == 2).collect();
        let chosen = match rng.as_mut() {
            None => candidates.first().copied(),
            Some(rng) => candidates.choose(rng).copied(),
        };
        let Some(v) = chosen else {
            return Err(TrungError::NoDegreeTwoVertex { graph: current });
        };
        let step = trung(&current, v)?;
        current = step.graph.clone();
        out.push(step);
    }
    Ok(out)
}

/// The 5-cycle `0-1-2-3-4-0`.
pub fn c5() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).expect("C5 is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    fn k2() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    #[test]
    fn tr_of_k2_is_a_five_cycle() {
        let tr = trung(&k2(), 0).unwrap();
        assert_eq!((tr.a, tr.b, tr.c, tr.v), (2, 3, 4, 0));
        assert_eq!(tr.graph.edges(), vec![(0, 1), (0, 2), (1, 4), (2, 3), (3, 4)]);
        // 0-1-4-3-2-0
        assert!((0..5).all(|u| tr.graph.degree(u) == 2));
        assert_eq!(tr.graph.girth(), Girth::Finite(5));
        assert_eq!(tr.graph.connected_components().len(), 1);
    }

    #[test]
    fn tr_of_c5() {
        let tr = trung(&c5(), 0).unwrap();
        assert_eq!(tr.graph.n(), 8);
        assert_eq!(tr.graph.edge_count(), 10);
        assert_eq!(tr.graph.independence_number(), 3);
        assert_eq!(tr.graph.neighbors(tr.a), set(&[0, 6]));
        assert_eq!(tr.graph.neighbors(tr.b), set(&[5, 7]));
        assert_eq!(tr.graph.neighbors(tr.c), set(&[6, 1, 4]));
        assert_eq!(tr.graph.induced(tr.base_vertices()).unwrap().graph, c5());
        assert_eq!(tr.graph.subgraph_g_f(set(&[tr.b])).unwrap(), c5());
    }

    #[test]
    fn tr_rejects_bad_vertices() {
        let h = k2().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(trung(&h, 2), Err(TrungError::IsolatedVertex(2)));
        assert!(matches!(
            trung(&h, 3),
            Err(TrungError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
        let mut edges: Vec<_> = (1..62).map(|i| (i - 1, i)).collect();
        edges.push((0, 61));
        let big = Graph::from_edges(62, &edges).unwrap();
        assert!(matches!(
            trung(&big, 0),
            Err(TrungError::Graph(GraphError::TooManyVertices(65)))
        ));
    }

    #[test]
    fn maximal_sets_of_tr_c5_from_h() {
        let via = maximal_ind_sets_via_remark(&c5(), 0).unwrap();
        assert_eq!(via.len(), 12);
        let direct: BTreeSet<_> = trung(&c5(), 0)
            .unwrap()
            .graph
            .maximal_independent_sets()
            .into_iter()
            .collect();
        assert_eq!(via, direct);
    }

    #[test]
    fn maximal_sets_of_tr_small_cases() {
        let direct: BTreeSet<_> = trung(&k2(), 0)
            .unwrap()
            .graph
            .maximal_independent_sets()
            .into_iter()
            .collect();
        assert_eq!(direct.len(), 5);
        assert_eq!(maximal_ind_sets_via_remark(&k2(), 0).unwrap(), direct);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let direct: BTreeSet<_> = trung(&p4, 1)
            .unwrap()
            .graph
            .maximal_independent_sets()
            .into_iter()
            .collect();
        assert_eq!(maximal_ind_sets_via_remark(&p4, 1).unwrap(), direct);
    }

    #[test]
    fn family_first_strategy() {
        let fam = generate_girth4_family(2, Strategy::First).unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam[0].graph.n(), 8);
        assert_eq!(fam[0].v, 0);
        assert_eq!(fam[0].graph.girth(), Girth::Finite(4));
        assert_eq!(fam[1].graph.n(), 11);
        assert_eq!(fam[1].graph.independence_number(), 4);
    }

    #[test]
    fn family_random_strategy() {
        let mut firsts = BTreeSet::new();
        for seed in 0..64 {
            let fam = generate_girth4_family(1, Strategy::Random { seed }).unwrap();
            firsts.insert(fam[0].v);
        }
        assert_eq!(firsts, (0..5).collect());
        let again = generate_girth4_family(4, Strategy::Random { seed: 9 }).unwrap();
        assert_eq!(again, generate_girth4_family(4, Strategy::Random { seed: 9 }).unwrap());
    }

    #[test]
    fn family_limits() {
        assert_eq!(MAX_FAMILY_STEPS, 19);
        assert_eq!(generate_girth4_family(0, Strategy::First), Err(TrungError::NoSteps));
        assert!(matches!(
            generate_girth4_family(20, Strategy::First),
            Err(TrungError::Graph(GraphError::TooManyVertices(65)))
        ));
        assert_eq!(
            generate_girth4_family(19, Strategy::First)
                .unwrap()
                .last()
                .unwrap()
                .graph
                .n(),
            62
        );
    }

    #[test]
    fn c5_basics() {
        let g = c5();
        assert_eq!(g.girth(), Girth::Finite(5));
        assert_eq!(g.independence_number(), 2);
        assert_eq!(g.edge_count(), 5);
    }
}
