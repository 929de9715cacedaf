//! Expansions `H(G_0, ..., G_{n-1})` of bipartite and odd-cycle hosts.
//!
//! Every host vertex `i` is replaced by a component graph `G_i`, and two
//! components are completely joined exactly when their host vertices are
//! adjacent. Component statistics (χ, ω, Δ, order) are computed once with
//! the exact oracle when the `ExpansionSpec` is built.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::oracle::{self, OracleBudget};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HostKind {
    Bipartite {
        graph: Graph,
        bipartition: Bipartition,
    },
    /// Cycle `0 - 1 - ... - (length-1) - 0` with odd `length >= 3`.
    OddCycle { length: usize },
}

impl HostKind {
    pub fn bipartite(graph: Graph) -> Result<Self> {
        let bipartition = graph
            .bipartition()
            .bipartition()
            .ok_or(Error::NotBipartite)?;
        Ok(HostKind::Bipartite { graph, bipartition })
    }

    pub fn odd_cycle(length: usize) -> Result<Self> {
        if length < 3 || length.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!(
                "cycle length must be odd and at least 3, got {length}"
            )));
        }
        Ok(HostKind::OddCycle { length })
    }

    pub fn order(&self) -> usize {
        match self {
            HostKind::Bipartite { graph, .. } => graph.order(),
            HostKind::OddCycle { length } => *length,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self, HostKind::Bipartite { .. })
    }

    pub fn cycle_length(&self) -> Option<usize> {
        match self {
            HostKind::OddCycle { length } => Some(*length),
            HostKind::Bipartite { .. } => None,
        }
    }

    pub fn graph(&self) -> Graph {
        match self {
            HostKind::Bipartite { graph, .. } => graph.clone(),
            HostKind::OddCycle { length } => Graph::cycle(*length),
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        match self {
            HostKind::Bipartite { graph, .. } => graph.has_edge(i, j),
            HostKind::OddCycle { length } => {
                let n = *length;
                i < n && j < n && ((i + 1) % n == j || (j + 1) % n == i)
            }
        }
    }

    /// Host edges. Bipartite hosts list `(u, v)` with `u < v` in
    /// lexicographic order; cycles list `(i, i+1 mod n)` for `i = 0..n`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            HostKind::Bipartite { graph, .. } => graph.edges().to_vec(),
            HostKind::OddCycle { length } => (0..*length).map(|i| (i, (i + 1) % length)).collect(),
        }
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        match self {
            HostKind::Bipartite { graph, .. } => graph.neighbors(i).collect(),
            HostKind::OddCycle { length } => {
                let n = *length;
                vec![(i + n - 1) % n, (i + 1) % n]
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentStats {
    pub chi: usize,
    pub omega: usize,
    pub max_degree: usize,
    pub order: usize,
}

impl ComponentStats {
    pub fn compute(g: &Graph, budget: &OracleBudget) -> Result<Self> {
        Ok(ComponentStats {
            chi: oracle::chromatic_number_exact(g, budget)?.chi,
            omega: oracle::clique_number_exact(g, budget)?,
            max_degree: g.max_degree()?,
            order: g.order(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpansionSpec {
    host: HostKind,
    components: Vec<Graph>,
    stats: Vec<ComponentStats>,
}

/// Global vertex numbering of a materialized expansion. Component `i`
/// occupies the contiguous range `offsets[i]..offsets[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    offsets: Vec<usize>,
    owner: Vec<(usize, usize)>,
}

impl VertexMap {
    fn new(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut offsets = vec![0];
        let mut owner = Vec::new();
        for (i, s) in sizes.into_iter().enumerate() {
            owner.extend((0..s).map(|v| (i, v)));
            offsets.push(owner.len());
        }
        VertexMap { offsets, owner }
    }

    pub fn global(&self, component: usize, local: usize) -> usize {
        let g = self.offsets[component] + local;
        debug_assert!(g < self.offsets[component + 1]);
        g
    }

    /// `(component, local vertex)` of a global vertex.
    pub fn local(&self, global: usize) -> (usize, usize) {
        self.owner[global]
    }

    pub fn range(&self, component: usize) -> std::ops::Range<usize> {
        self.offsets[component]..self.offsets[component + 1]
    }

    pub fn total(&self) -> usize {
        self.owner.len()
    }
}

impl ExpansionSpec {
    pub fn new(host: HostKind, components: Vec<Graph>) -> Result<Self> {
        Self::with_budget(host, components, &OracleBudget::default())
    }

    pub fn with_budget(
        host: HostKind,
        components: Vec<Graph>,
        budget: &OracleBudget,
    ) -> Result<Self> {
        if host.order() == 0 {
            return Err(Error::InvalidSpec("host has no vertices".into()));
        }
        if components.len() != host.order() {
            return Err(Error::InvalidSpec(format!(
                "host has {} vertices but {} components were given",
                host.order(),
                components.len()
            )));
        }
        if let Some(i) = components.iter().position(|g| g.order() == 0) {
            return Err(Error::InvalidSpec(format!("component {i} is empty")));
        }
        let stats = components
            .iter()
            .map(|g| ComponentStats::compute(g, budget))
            .collect::<Result<_>>()?;
        Ok(ExpansionSpec {
            host,
            components,
            stats,
        })
    }

    /// Reuses already computed statistics; only used where `stats` were
    /// produced by [`ComponentStats::compute`] on the same graphs.
    fn from_parts(host: HostKind, components: Vec<Graph>, stats: Vec<ComponentStats>) -> Self {
        ExpansionSpec {
            host,
            components,
            stats,
        }
    }

    pub fn host(&self) -> &HostKind {
        &self.host
    }

    pub fn components(&self) -> &[Graph] {
        &self.components
    }

    pub fn stats(&self) -> &[ComponentStats] {
        &self.stats
    }

    pub fn chi(&self, i: usize) -> usize {
        self.stats[i].chi
    }

    pub fn chis(&self) -> Vec<usize> {
        self.stats.iter().map(|s| s.chi).collect()
    }

    pub fn order(&self) -> usize {
        self.components.len()
    }

    pub fn total_vertices(&self) -> usize {
        self.stats.iter().map(|s| s.order).sum()
    }

    /// Smallest component chromatic number.
    pub fn min_chi(&self) -> usize {
        self.stats.iter().map(|s| s.chi).min().unwrap_or(0)
    }

    pub fn max_chi(&self) -> usize {
        self.stats.iter().map(|s| s.chi).max().unwrap_or(0)
    }

    pub fn materialize(&self) -> (Graph, VertexMap) {
        let map = VertexMap::new(self.components.iter().map(Graph::order));
        let mut edges = Vec::new();
        for (i, g) in self.components.iter().enumerate() {
            let off = map.offsets[i];
            edges.extend(g.edges().iter().map(|&(u, v)| (u + off, v + off)));
        }
        for (i, j) in self.host.edges() {
            for x in map.range(i) {
                edges.extend(map.range(j).map(|y| (x, y)));
            }
        }
        let graph = Graph::new(map.total(), edges).expect("materialized edges are in range");
        (graph, map)
    }

    /// `G[V_i ∪ V_j]` for a host edge `{i, j}`: the complete join of the two
    /// components, `G_i` first.
    pub fn join_subgraph(&self, i: usize, j: usize) -> Result<Graph> {
        if !self.host.has_edge(i, j) {
            return Err(Error::NotAHostEdge(i, j));
        }
        Ok(self.components[i].join(&self.components[j]))
    }

    pub fn edge_weight(&self, i: usize, j: usize) -> Result<usize> {
        if !self.host.has_edge(i, j) {
            return Err(Error::NotAHostEdge(i, j));
        }
        Ok(self.chi(i) + self.chi(j))
    }

    /// A host edge of maximum weight `χ_i + χ_j`, ties broken towards the
    /// lexicographically smallest `(min, max)` pair. Cycle edges come back
    /// oriented as `(i, i+1 mod n)`.
    pub fn max_weight_edge(&self) -> Result<(usize, usize)> {
        self.host
            .edges()
            .into_iter()
            .map(|(i, j)| (self.chi(i) + self.chi(j), (i.min(j), i.max(j)), (i, j)))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, _, e)| e)
            .ok_or(Error::EdgelessHost)
    }

    /// Cyclically shifts an odd-cycle spec so that `base_edge = (i, i+1)`
    /// becomes `(0, 1)`. Returns the new spec and the old-to-new index map.
    pub fn rotate_cycle(&self, base_edge: (usize, usize)) -> Result<(ExpansionSpec, Vec<usize>)> {
        let n = self.host.cycle_length().ok_or(Error::WrongHost {
            expected: "an odd-cycle",
        })?;
        let (i, j) = base_edge;
        if i >= n || j != (i + 1) % n {
            return Err(Error::NotAHostEdge(i, j));
        }
        let old_to_new: Vec<usize> = (0..n).map(|old| (old + n - i) % n).collect();
        let spec = self.permuted((0..n).map(|t| (i + t) % n));
        Ok((spec, old_to_new))
    }

    /// Mirror image of an odd-cycle spec: component `t` moves to `-t mod n`.
    pub fn reflect_cycle(&self) -> Result<ExpansionSpec> {
        let n = self.host.cycle_length().ok_or(Error::WrongHost {
            expected: "an odd-cycle",
        })?;
        Ok(self.permuted((0..n).map(|t| (n - t) % n)))
    }

    /// New spec whose component `t` is old component `sources[t]`. Only
    /// valid for cycle hosts (the host is unchanged).
    fn permuted(&self, sources: impl Iterator<Item = usize>) -> ExpansionSpec {
        let (components, stats) = sources
            .map(|s| (self.components[s].clone(), self.stats[s]))
            .unzip();
        Self::from_parts(self.host.clone(), components, stats)
    }

    /// Relabels a bipartite-host spec: old host vertex `v` becomes
    /// `new_of_old[v]`.
    pub fn relabel_bipartite(&self, new_of_old: &[usize]) -> Result<ExpansionSpec> {
        let HostKind::Bipartite { graph, .. } = &self.host else {
            return Err(Error::WrongHost {
                expected: "a bipartite",
            });
        };
        let n = graph.order();
        let mut old_of_new = vec![usize::MAX; n];
        for (old, &new) in new_of_old.iter().enumerate() {
            if new >= n || old_of_new[new] != usize::MAX {
                return Err(Error::InvalidSpec("relabeling is not a permutation".into()));
            }
            old_of_new[new] = old;
        }
        if new_of_old.len() != n {
            return Err(Error::InvalidSpec("relabeling is not a permutation".into()));
        }
        let host_graph = Graph::new(
            n,
            graph
                .edges()
                .iter()
                .map(|&(u, v)| (new_of_old[u], new_of_old[v])),
        )?;
        let (components, stats) = old_of_new
            .iter()
            .map(|&s| (self.components[s].clone(), self.stats[s]))
            .unzip();
        Ok(Self::from_parts(
            HostKind::bipartite(host_graph)?,
            components,
            stats,
        ))
    }

    /// Relabels a bipartite-host spec so its maximum-weight edge `(a, b)`
    /// becomes `(0, 1)`; the remaining vertices keep their relative order.
    /// Returns the new spec and the old-to-new map.
    pub fn normalize_bipartite(&self) -> Result<(ExpansionSpec, Vec<usize>)> {
        if !self.host.is_bipartite() {
            return Err(Error::WrongHost {
                expected: "a bipartite",
            });
        }
        let (a, b) = self.max_weight_edge()?;
        let n = self.order();
        let order: Vec<usize> = [a, b]
            .into_iter()
            .chain((0..n).filter(|&v| v != a && v != b))
            .collect();
        let mut new_of_old = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        Ok((self.relabel_bipartite(&new_of_old)?, new_of_old))
    }

    /// Preferred palette side `p(i)` of a bipartite-host spec whose vertices
    /// 0 and 1 are adjacent: 0 when `v_i` sits in the same class as `v_0`.
    pub fn preferred_index(&self, i: usize) -> Result<u8> {
        let HostKind::Bipartite { graph, .. } = &self.host else {
            return Err(Error::WrongHost {
                expected: "a bipartite",
            });
        };
        if !graph.has_edge(0, 1) {
            return Err(Error::NotAHostEdge(0, 1));
        }
        if i >= graph.order() {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                n: graph.order(),
            });
        }
        Ok(preferences(&self.host, 0)[i])
    }

    /// Δ of the materialized expansion:
    /// `max_i (Δ_i + Σ_{j ~ i} |V_j|)`.
    pub fn delta(&self) -> usize {
        (0..self.order())
            .map(|i| {
                self.stats[i].max_degree
                    + self
                        .host
                        .neighbors(i)
                        .into_iter()
                        .map(|j| self.stats[j].order)
                        .sum::<usize>()
            })
            .max()
            .unwrap_or(0)
    }

    /// ω of the materialized expansion. A clique projects onto a clique of
    /// the host; hosts other than the triangle have clique number at most 2.
    pub fn omega(&self) -> usize {
        if self.host.cycle_length() == Some(3) {
            return self.stats.iter().map(|s| s.omega).sum();
        }
        let single = self.stats.iter().map(|s| s.omega).max().unwrap_or(0);
        let pair = self
            .host
            .edges()
            .into_iter()
            .map(|(i, j)| self.stats[i].omega + self.stats[j].omega)
            .max()
            .unwrap_or(0);
        single.max(pair)
    }
}

/// Palette side of every host vertex, relative to `base`: vertices in the
/// host component of `base` get 0 on `base`'s side and 1 opposite; other
/// host components keep the sides of the stored bipartition. For cycle
/// hosts this is meaningless and panics.
pub(crate) fn preferences(host: &HostKind, base: usize) -> Vec<u8> {
    let HostKind::Bipartite { graph, bipartition } = host else {
        panic!("preferences need a bipartite host");
    };
    let flip = bipartition.side(base);
    let mut pref: Vec<u8> = bipartition.sides().to_vec();
    for comp in graph.connected_components() {
        if comp.binary_search(&base).is_ok() {
            for v in comp {
                pref[v] ^= flip;
            }
        }
    }
    pref
}
