//! Simple undirected graphs over dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = std::vec::IntoIter<usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Simple undirected graph. Neighbor lists are sorted; the value is
/// immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// The result of deleting vertices: the induced graph on the survivors,
/// densely re-indexed, plus the original id of every new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Repeated pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
        })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.adj.len(),
            })
        }
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.max() {
            Some(v) => self.check(v),
            None => Ok(()),
        }
    }

    /// `N[X]`: the members of `X` together with all their neighbors.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        Ok(x.iter()
            .chain(x.iter().flat_map(|v| self.adj[v].iter().copied()))
            .collect())
    }

    /// `N(X) = N[X] \ X`.
    pub fn open_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        Ok(self.closed_neighborhood(x)?.difference(x))
    }

    /// Induced subgraph on `V \ X`, re-indexed densely in increasing order
    /// of original id.
    pub fn remove_vertices(&self, x: &VertexSet) -> Result<Subgraph> {
        self.check_set(x)?;
        let n = self.adj.len();
        let mut new_id = vec![usize::MAX; n];
        let mut original = Vec::with_capacity(n - x.len());
        for v in (0..n).filter(|&v| !x.contains(v)) {
            new_id[v] = original.len();
            original.push(v);
        }
        let mut edge_count = 0;
        let adj: Vec<Vec<usize>> = original
            .iter()
            .map(|&v| {
                let list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect();
                edge_count += list.len();
                list
            })
            .collect();
        Ok(Subgraph {
            graph: Graph {
                adj,
                edge_count: edge_count / 2,
            },
            original,
        })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff the graph has at most one component. Both the empty graph
    /// and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Checks the representation invariants: symmetric adjacency, sorted
    /// duplicate-free neighbor lists, no self-loops, consistent edge count.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let n = self.adj.len();
        let mut degree_sum = 0;
        for (v, list) in self.adj.iter().enumerate() {
            degree_sum += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("neighbor list of {v} is not strictly increasing"));
            }
            for &w in list {
                if w >= n {
                    return Err(format!("vertex {v} has out-of-range neighbor {w}"));
                }
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if self.adj[w].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{w} is not symmetric"));
                }
            }
        }
        if degree_sum != 2 * self.edge_count {
            return Err(format!(
                "degree sum {degree_sum} differs from twice the edge count {}",
                self.edge_count
            ));
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Graph {
            adj,
            edge_count: n * n.saturating_sub(1) / 2,
        }
    }

    /// `K_{1,m}` with center 0 and leaves `1..=m`.
    pub fn star(m: usize) -> Graph {
        Graph::new(m + 1, (1..=m).map(|l| (0, l))).expect("star edges are in range")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
    }

    /// The cycle `0-1-...-(n-1)-0`. For `n < 3` this degenerates to the
    /// path on `n` vertices.
    pub fn cycle(n: usize) -> Graph {
        if n < 3 {
            return Graph::path(n);
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
    }

    /// Disjoint union; vertices of `b` are shifted by `a.vertex_count()`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.vertex_count();
        let mut adj = a.adj.clone();
        adj.extend(
            b.adj
                .iter()
                .map(|list| list.iter().map(|&w| w + off).collect()),
        );
        Graph {
            adj,
            edge_count: a.edge_count + b.edge_count,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn build_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, Graph::path(3));
        let k2 = Graph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn degree_examples() {
        let k4 = Graph::complete(4);
        assert!((0..4).all(|v| k4.degree(v) == Ok(3)));
        assert_eq!(Graph::path(3).degree(1), Ok(2));
        assert_eq!(Graph::complete(1).degree(0), Ok(0));
        assert!(Graph::path(3).degree(3).is_err());
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p3 = Graph::path(3);
        assert_eq!(
            p3.closed_neighborhood(&[1].into()).unwrap(),
            VertexSet::from([0, 1, 2])
        );
        assert_eq!(
            Graph::complete(4)
                .closed_neighborhood(&[0].into())
                .unwrap()
                .len(),
            4
        );
        let c5 = Graph::cycle(5);
        assert_eq!(
            c5.closed_neighborhood(&[0, 2].into()).unwrap(),
            VertexSet::from([0, 1, 2, 3, 4])
        );
        assert_eq!(
            c5.open_neighborhood(&[0, 2].into()).unwrap(),
            VertexSet::from([1, 3, 4])
        );
        assert!(p3.closed_neighborhood(&[5].into()).is_err());
    }

    #[test]
    fn remove_vertices_examples() {
        let s = Graph::path(3).remove_vertices(&[1].into()).unwrap();
        assert_eq!(s.graph, Graph::empty(2));
        assert_eq!(s.original, vec![0, 2]);

        let s = Graph::complete(4).remove_vertices(&[0].into()).unwrap();
        assert_eq!(s.graph, Graph::complete(3));
        assert_eq!(s.original, vec![1, 2, 3]);

        let s = Graph::cycle(4).remove_vertices(&[0, 2].into()).unwrap();
        assert_eq!(s.graph, Graph::empty(2));
        assert_eq!(s.original, vec![1, 3]);

        assert!(Graph::cycle(4).remove_vertices(&[4].into()).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::cycle(6).is_connected());
        let two_edges = Graph::disjoint_union(&Graph::path(2), &Graph::path(2));
        assert!(!two_edges.is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn constructor_examples() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        let s5 = Graph::star(5);
        assert_eq!(s5.vertex_count(), 6);
        assert_eq!(s5.edge_count(), 5);
        assert_eq!(s5.degree(0), Ok(5));
        let u = Graph::disjoint_union(&Graph::complete(3), &Graph::complete(3));
        assert_eq!(u.vertex_count(), 6);
        assert_eq!(u.components().len(), 2);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn invariants_hold_after_every_operation(
            g in arb_graph(9),
            h in arb_graph(5),
            mask in any::<u16>(),
        ) {
            prop_assert!(g.audit().is_ok());
            let x: VertexSet = (0..g.vertex_count()).filter(|v| mask >> v & 1 == 1).collect();
            let sub = g.remove_vertices(&x).unwrap();
            prop_assert!(sub.graph.audit().is_ok());
            prop_assert_eq!(sub.graph.vertex_count(), g.vertex_count() - x.len());
            for (a, b) in sub.graph.edges() {
                prop_assert!(g.has_edge(sub.original[a], sub.original[b]));
            }
            let u = Graph::disjoint_union(&g, &h);
            prop_assert!(u.audit().is_ok());
            if g.vertex_count() > 0 && h.vertex_count() > 0 {
                prop_assert!(!u.is_connected());
            }
            let degree_sum: usize = (0..g.vertex_count()).map(|v| g.neighbors(v).len()).sum();
            prop_assert_eq!(degree_sum, 2 * g.edge_count());
        }

        #[test]
        fn removing_nothing_is_identity(g in arb_graph(9)) {
            let sub = g.remove_vertices(&VertexSet::new()).unwrap();
            prop_assert_eq!(&sub.graph, &g);
            prop_assert_eq!(sub.original, (0..g.vertex_count()).collect::<Vec<_>>());
        }

        #[test]
        fn complete_graphs_are_connected(n in 0usize..30) {
            let k = Graph::complete(n);
            prop_assert!(k.is_connected());
            prop_assert!(k.audit().is_ok());
        }
    }
}
