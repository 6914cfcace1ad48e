//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::GraphError;

/// Hard vertex capacity; every vertex set fits in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some graph, as a bitset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Debug)]
pub struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitIter {}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Length of a shortest cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// An induced subgraph together with the original index of each of its
/// vertices (`origin[new] = old`, ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

impl Induced {
    /// Inverse of `origin`: `Some(new)` for surviving vertices.
    pub fn old_to_new(&self, old_n: usize) -> Vec<Option<usize>> {
        let mut map = vec![None; old_n];
        for (new, &old) in self.origin.iter().enumerate() {
            map[old] = Some(new);
        }
        map
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = low_mask(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb & !mask != 0 {
                let bad = (nb & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            if nb >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in BitIter(nb) {
                if adj[u] >> v & 1 == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let fresh = self.adj[u] >> v & 1 == 0;
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(fresh)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<(), GraphError> {
        let extra = set.0 & !low_mask(self.n);
        if extra != 0 {
            return Err(GraphError::VertexOutOfRange {
                vertex: extra.trailing_zeros() as usize,
                n: self.n,
            });
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    /// `N[F]`: `F` together with every vertex adjacent to some member of `F`.
    pub fn closed_neighborhood(&self, f: VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(f)?;
        Ok(VertexSet(self.closed_nbhd_bits(f.0)))
    }

    #[inline]
    pub(crate) fn closed_nbhd_bits(&self, f: u64) -> u64 {
        BitIter(f).fold(f, |acc, u| acc | self.adj[u])
    }

    /// Subgraph induced on `keep`, surviving vertices relabeled in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Result<Induced, GraphError> {
        self.check_set(keep)?;
        let origin = keep.to_vec();
        let mut new_index = [usize::MAX; 64];
        for (new, &old) in origin.iter().enumerate() {
            new_index[old] = new;
        }
        let adj = origin
            .iter()
            .map(|&old| BitIter(self.adj[old] & keep.0).fold(0u64, |acc, u| acc | (1u64 << new_index[u])))
            .collect();
        Ok(Induced {
            graph: Graph { n: origin.len(), adj },
            origin,
        })
    }

    /// `G_F = G \ N[F]` with its relabeling map. `F` need not be independent.
    pub fn subgraph_g_f_with_map(&self, f: VertexSet) -> Result<Induced, GraphError> {
        let closed = self.closed_neighborhood(f)?;
        self.induced(self.vertices().difference(closed))
    }

    /// `G_F = G \ N[F]`.
    pub fn subgraph_g_f(&self, f: VertexSet) -> Result<Graph, GraphError> {
        Ok(self.subgraph_g_f_with_map(f)?.graph)
    }

    /// `G - v` with stable relabeling.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().without(v))?.graph)
    }

    /// All independent sets (including the empty set) in increasing order of
    /// bitset value.
    pub fn independent_sets(&self) -> IndependentSets<'_> {
        IndependentSets {
            graph: self,
            next: Some(0),
            limit: low_mask(self.n),
        }
    }

    /// Every inclusion-maximal independent set, sorted by bitset value.
    ///
    /// Bron-Kerbosch with Tomita pivoting, run on the complement graph.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        self.maximal_independent_sets_within(self.vertices().0)
    }

    /// Maximal independent sets of the subgraph induced on `within`.
    pub(crate) fn maximal_independent_sets_within(&self, within: u64) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bk_pivot(0, within, 0, within, &mut out);
        out.sort_unstable();
        out
    }

    // Complement-neighborhood of v restricted to `within`.
    #[inline]
    fn non_nbrs(&self, v: usize, within: u64) -> u64 {
        within & !self.adj[v] & !(1u64 << v)
    }

    fn bk_pivot(&self, r: u64, mut p: u64, mut x: u64, within: u64, out: &mut Vec<VertexSet>) {
        if p == 0 {
            if x == 0 {
                out.push(VertexSet(r));
            }
            return;
        }
        let pivot = BitIter(p | x)
            .max_by_key(|&u| (p & self.non_nbrs(u, within)).count_ones())
            .expect("p is nonempty");
        for v in BitIter(p & !self.non_nbrs(pivot, within)) {
            let nv = self.non_nbrs(v, within);
            self.bk_pivot(r | (1u64 << v), p & nv, x & nv, within, out);
            p &= !(1u64 << v);
            x |= 1u64 << v;
        }
    }

    /// α(G); zero for the graph on no vertices.
    pub fn independence_number(&self) -> usize {
        self.alpha_of(self.vertices().0)
    }

    /// α of the subgraph induced on `mask`.
    pub(crate) fn alpha_of(&self, mask: u64) -> usize {
        let mut best = 0;
        self.alpha_search(mask, 0, &mut best);
        best
    }

    fn alpha_search(&self, mask: u64, size: usize, best: &mut usize) {
        if size + mask.count_ones() as usize <= *best {
            return;
        }
        if mask == 0 {
            *best = size;
            return;
        }
        // A vertex of degree <= 1 inside `mask` lies in some maximum set.
        let mut branch = None;
        let mut branch_deg = 0;
        for v in BitIter(mask) {
            let d = (self.adj[v] & mask).count_ones();
            if d <= 1 {
                return self.alpha_search(mask & !self.closed_nbhd_bits(1u64 << v), size + 1, best);
            }
            if branch.is_none() || d > branch_deg {
                branch = Some(v);
                branch_deg = d;
            }
        }
        let v = branch.expect("mask is nonempty");
        self.alpha_search(mask & !(self.adj[v] | (1u64 << v)), size + 1, best);
        self.alpha_search(mask & !(1u64 << v), size, best);
    }

    /// Connected components of the subgraph induced on `mask`, each as a
    /// vertex mask, ordered by smallest vertex.
    pub(crate) fn component_masks(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0u64;
                for u in BitIter(frontier) {
                    grow |= self.adj[u];
                }
                frontier = grow & mask & !comp;
                comp |= frontier;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Connected components as induced subgraphs, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Induced> {
        self.component_masks(self.vertices().0)
            .into_iter()
            .map(|m| self.induced(VertexSet(m)).expect("component mask is in range"))
            .collect()
    }

    /// Shortest cycle length via BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in BitIter(self.adj[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let shift = self.n;
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(other.adj.iter().map(|&a| a << shift))
            .collect();
        Ok(Graph { n, adj })
    }
}

/// Streaming enumeration of independent sets in increasing bitset order.
///
/// Successor step: from a candidate word, scan bits from the top and find the
/// first one that conflicts with a higher chosen bit. Every word sharing that
/// prefix is dependent, so the candidate jumps past all of them at once.
pub struct IndependentSets<'g> {
    graph: &'g Graph,
    next: Option<u64>,
    limit: u64,
}

impl IndependentSets<'_> {
    fn first_independent_from(&self, mut cand: u64) -> Option<u64> {
        loop {
            if cand > self.limit {
                return None;
            }
            let mut forbidden = 0u64;
            let mut conflict = None;
            let mut rest = cand;
            while rest != 0 {
                let h = 63 - rest.leading_zeros() as usize;
                if forbidden >> h & 1 == 1 {
                    conflict = Some(h);
                    break;
                }
                forbidden |= self.graph.adj[h];
                rest &= !(1u64 << h);
            }
            match conflict {
                None => return Some(cand),
                Some(h) => {
                    let step = 1u64 << h;
                    cand = (cand & !(step - 1)).checked_add(step)?;
                }
            }
        }
    }
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cand = self.next?;
        let found = self.first_independent_from(cand);
        self.next = found.and_then(|s| s.checked_add(1));
        found.map(VertexSet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn k2() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    #[test]
    fn closed_neighborhood_examples() {
        assert_eq!(c5().closed_neighborhood(set(&[0])).unwrap(), set(&[4, 0, 1]));
        assert_eq!(c5().closed_neighborhood(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        assert_eq!(path(3).closed_neighborhood(set(&[1])).unwrap(), set(&[0, 1, 2]));
        assert!(matches!(
            c5().closed_neighborhood(set(&[7])),
            Err(GraphError::VertexOutOfRange { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn g_f_of_c5() {
        let ind = c5().subgraph_g_f_with_map(set(&[0])).unwrap();
        assert_eq!(ind.origin, vec![2, 3]);
        assert_eq!(ind.graph, k2());
        assert_eq!(c5().subgraph_g_f(VertexSet::EMPTY).unwrap(), c5());
    }

    #[test]
    fn delete_vertex_examples() {
        assert_eq!(c5().delete_vertex(0).unwrap(), path(4));
        assert_eq!(k2().delete_vertex(1).unwrap(), Graph::empty(1).unwrap());
        assert_eq!(path(3).delete_vertex(1).unwrap(), Graph::empty(2).unwrap());
        assert!(k2().delete_vertex(2).is_err());
    }

    #[test]
    fn independent_set_streams() {
        let k2_sets: Vec<_> = k2().independent_sets().collect();
        assert_eq!(k2_sets, vec![VertexSet(0), VertexSet(1), VertexSet(2)]);
        assert_eq!(c5().independent_sets().count(), 11);
        assert_eq!(Graph::empty(3).unwrap().independent_sets().count(), 8);
        assert_eq!(Graph::empty(0).unwrap().independent_sets().count(), 1);
        assert_eq!(Graph::empty(64).unwrap().independent_sets().take(5).count(), 5);
    }

    #[test]
    fn maximal_sets_examples() {
        assert_eq!(path(3).maximal_independent_sets(), vec![set(&[1]), set(&[0, 2])]);
        let mut c5_pairs: Vec<_> = (0..5).map(|i| set(&[i, (i + 2) % 5])).collect();
        c5_pairs.sort();
        assert_eq!(c5().maximal_independent_sets(), c5_pairs);
        let mut p4 = vec![set(&[0, 2]), set(&[0, 3]), set(&[1, 3])];
        p4.sort();
        assert_eq!(path(4).maximal_independent_sets(), p4);
        assert_eq!(
            Graph::empty(0).unwrap().maximal_independent_sets(),
            vec![VertexSet::EMPTY]
        );
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(c5().independence_number(), 2);
        assert_eq!(Graph::empty(0).unwrap().independence_number(), 0);
        assert_eq!(path(4).independence_number(), 2);
        assert_eq!(Graph::empty(7).unwrap().independence_number(), 7);
    }

    #[test]
    fn components_examples() {
        let two_k2 = k2().disjoint_union(&k2()).unwrap();
        let comps: Vec<_> = two_k2.connected_components().into_iter().map(|c| c.graph).collect();
        assert_eq!(comps, vec![k2(), k2()]);
        assert_eq!(c5().connected_components()[0].graph, c5());
        let g = Graph::empty(1).unwrap().disjoint_union(&k2()).unwrap();
        let comps: Vec<_> = g.connected_components().into_iter().map(|c| c.graph).collect();
        assert_eq!(comps, vec![Graph::empty(1).unwrap(), k2()]);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(c5().girth(), Girth::Finite(5));
        assert_eq!(path(4).girth(), Girth::Infinite);
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.girth(), Girth::Finite(3));
    }

    #[test]
    fn isolated_vertices() {
        assert!(!k2().has_isolated_vertex());
        assert!(Graph::empty(1).unwrap().has_isolated_vertex());
        assert!(!c5().has_isolated_vertex());
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(Graph::empty(65), Err(GraphError::TooManyVertices(65)));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }
}
