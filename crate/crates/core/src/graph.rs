//! Simple undirected graphs on dense vertex indices.
//!
//! A [`Graph`] is immutable once built. Edges are stored both as a sorted
//! list of `(u, v)` pairs with `u < v` and as bitset adjacency rows, so pair
//! queries are O(1) and edge iteration is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    rows: Vec<Vec<u64>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Side assignment of a 2-colorable graph. `side[v]` is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.order() && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteOutcome {
    Bipartite(Bipartition),
    /// Vertices of an odd cycle, in walk order; the last vertex is adjacent
    /// to the first.
    NotBipartite {
        odd_cycle: Vec<usize>,
    },
}

impl BipartiteOutcome {
    pub fn bipartition(self) -> Option<Bipartition> {
        match self {
            BipartiteOutcome::Bipartite(b) => Some(b),
            BipartiteOutcome::NotBipartite { .. } => None,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteOutcome::Bipartite(_))
    }
}

impl Graph {
    /// Builds a graph, collapsing duplicate and reversed pairs.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(n, set.into_iter().collect()))
    }

    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let words = n.div_ceil(WORD).max(1);
        let mut rows = vec![vec![0u64; words]; n];
        for &(u, v) in &edges {
            rows[u][v / WORD] |= 1 << (v % WORD);
            rows[v][u / WORD] |= 1 << (u % WORD);
        }
        Graph { n, edges, rows }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_canonical(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_canonical(n, edges)
    }

    /// Cycle on `n >= 3` vertices `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::from_canonical(n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * WORD + b)
            })
        })
    }

    /// Adjacency row of `v` as a single word; only valid when `n <= 64`.
    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD);
        self.rows[v][0]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.rows[v].iter().map(|w| w.count_ones() as usize).sum())
    }

    pub fn max_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.rows[v].iter().map(|w| w.count_ones() as usize).sum())
            .max()
            .ok_or(Error::EmptyGraph)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components ordered by their smallest vertex; each set is
    /// sorted ascending.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS 2-coloring. The smallest vertex of every connected component
    /// (in particular vertex 0 and every isolated vertex) lands on side 0.
    pub fn bipartition(&self) -> BipartiteOutcome {
        let mut side: Vec<Option<u8>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(1 - su);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            let odd_cycle = odd_cycle_through(u, w, &parent, &depth);
                            return BipartiteOutcome::NotBipartite { odd_cycle };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        BipartiteOutcome::Bipartite(Bipartition {
            side: side.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// Subgraph induced by `keep`, relabeled in ascending order of the old
    /// indices, together with the old-to-new index map.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, BTreeMap<usize, usize>)> {
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if let Some(&bad) = kept.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let map: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((*map.get(&u)?, *map.get(&v)?)))
            .collect();
        Ok((Self::from_canonical(kept.len(), edges), map))
    }

    /// `colors[v]` is the color of `v`; every vertex must be colored.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> Result<bool> {
        if colors.len() < self.n {
            return Err(Error::Uncolored(colors.len()));
        }
        Ok(self.edges.iter().all(|&(u, v)| colors[u] != colors[v]))
    }

    /// Complete join of `self` and `other`: `other`'s vertices are shifted by
    /// `self.order()` and every cross pair becomes an edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        edges.extend((0..self.n).flat_map(|u| (0..other.n).map(move |v| (u, v + off))));
        edges.sort_unstable();
        Self::from_canonical(self.n + other.n, edges)
    }
}

fn odd_cycle_through(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn new_graph_examples() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        let g = Graph::new(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn new_graph_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::EndpointOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::complete(3).degree(0), Ok(2));
        assert_eq!(Graph::complete(1).degree(0), Ok(0));
        let c5 = Graph::cycle(5);
        assert!((0..5).all(|v| c5.degree(v) == Ok(2)));
        assert!(matches!(c5.degree(5), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::complete(4).max_degree(), Ok(3));
        assert_eq!(star(4).max_degree(), Ok(4));
        assert_eq!(Graph::cycle(7).max_degree(), Ok(2));
        assert_eq!(Graph::empty(0).max_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn bipartition_examples() {
        let b = Graph::path(4).bipartition().bipartition().unwrap();
        assert_eq!(b.sides(), &[0, 1, 0, 1]);

        match Graph::cycle(5).bipartition() {
            BipartiteOutcome::NotBipartite { odd_cycle } => assert_eq!(odd_cycle.len(), 5),
            other => panic!("expected odd cycle, got {other:?}"),
        }

        let b = Graph::empty(3).bipartition().bipartition().unwrap();
        assert_eq!(b.sides(), &[0, 0, 0]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (g, map) = Graph::complete(4).induced_subgraph(&[0, 1, 3]).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(map[&3], 2);

        let (g, _) = Graph::cycle(5).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(g, Graph::path(3));

        let (g, map) = Graph::cycle(5).induced_subgraph(&[]).unwrap();
        assert_eq!(g.order(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn proper_coloring_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.is_proper_coloring(&[0, 1, 2]), Ok(true));
        assert_eq!(k3.is_proper_coloring(&[0, 1, 1]), Ok(false));
        assert_eq!(Graph::empty(3).is_proper_coloring(&[0, 0, 0]), Ok(true));
        assert_eq!(k3.is_proper_coloring(&[0, 1]), Err(Error::Uncolored(2)));
    }

    #[test]
    fn connected_components_examples() {
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(Graph::cycle(5).connected_components().len(), 1);
        assert_eq!(
            Graph::empty(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn is_complete_examples() {
        assert!(Graph::complete(3).is_complete());
        assert!(!Graph::path(3).is_complete());
        assert!(Graph::complete(1).is_complete());
    }

    #[test]
    fn join_of_cliques_is_clique() {
        assert_eq!(
            Graph::complete(2).join(&Graph::complete(3)),
            Graph::complete(5)
        );
    }

    #[test]
    fn large_graph_rows_span_words() {
        let g = Graph::cycle(130);
        assert!(g.has_edge(0, 129));
        assert!(g.has_edge(64, 65));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
    }
}
