//! Seeded random and exhaustive expansion instances.
//!
//! All randomness comes from SplitMix64 seeded with the caller's 64-bit
//! seed, so a seed fixes the whole instance stream.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::expansion::{ComponentStats, ExpansionSpec, HostKind};
use crate::graph::Graph;
use crate::oracle::{self, OracleBudget};

pub const MAX_CHI_ATTEMPTS: usize = 10_000;

pub fn rng_from_seed(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub stats: ComponentStats,
}

/// K1..K4, P3, P4, C5, C7 and K4 minus an edge.
pub fn catalog_components() -> Vec<CatalogEntry> {
    let k4_minus_edge =
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("valid edges");
    let graphs = [
        ("K1", Graph::complete(1)),
        ("K2", Graph::complete(2)),
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("C7", Graph::cycle(7)),
        ("K4-e", k4_minus_edge),
    ];
    let budget = OracleBudget::default();
    graphs
        .into_iter()
        .map(|(name, graph)| {
            let stats = ComponentStats::compute(&graph, &budget).expect("catalog graphs are tiny");
            CatalogEntry { name, graph, stats }
        })
        .collect()
}

/// Catalog entries by name, in the order given.
pub fn catalog_subset(names: &[&str]) -> Result<Vec<CatalogEntry>> {
    let all = catalog_components();
    names
        .iter()
        .map(|&name| {
            all.iter()
                .find(|e| e.name == name)
                .cloned()
                .ok_or_else(|| Error::InvalidSpec(format!("unknown catalog component {name:?}")))
        })
        .collect()
}

/// Smallest image of `word` under rotations and reflections.
fn dihedral_min(word: &[usize]) -> Vec<usize> {
    let n = word.len();
    let mut best = word.to_vec();
    for shift in 0..n {
        let rotated: Vec<usize> = (0..n).map(|t| word[(t + shift) % n]).collect();
        let reflected: Vec<usize> = (0..n).map(|t| rotated[(n - t) % n]).collect();
        best = best.min(rotated).min(reflected);
    }
    best
}

/// Every assignment of catalog entries to the cycle `C_length`, in
/// lexicographic order of catalog indices. With `dedup`, only the
/// lexicographically smallest member of each dihedral orbit is kept.
pub fn exhaustive_specs(
    length: usize,
    catalog: &[CatalogEntry],
    dedup: bool,
) -> Result<impl Iterator<Item = ExpansionSpec> + '_> {
    if length < 5 || length.is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!(
            "exhaustive enumeration needs an odd cycle of length >= 5, got {length}"
        )));
    }
    if catalog.is_empty() {
        return Err(Error::InvalidSpec("empty catalog".into()));
    }
    let m = catalog.len();
    let total = m.checked_pow(length as u32).ok_or_else(|| {
        Error::InvalidSpec(format!(
            "{m}^{length} assignments do not fit in memory indices"
        ))
    })?;
    Ok((0..total).filter_map(move |mut code| {
        let mut word = vec![0; length];
        for slot in word.iter_mut().rev() {
            *slot = code % m;
            code /= m;
        }
        if dedup && dihedral_min(&word) != word {
            return None;
        }
        let comps = word.iter().map(|&i| catalog[i].graph.clone()).collect();
        Some(spec_from_parts(
            HostKind::odd_cycle(length).expect("odd length"),
            comps,
        ))
    }))
}

fn spec_from_parts(host: HostKind, comps: Vec<Graph>) -> ExpansionSpec {
    ExpansionSpec::new(host, comps).expect("generated specs are valid")
}

/// `G(n, p)` on `n` vertices.
pub fn random_graph<R: Rng>(n: usize, edge_p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("endpoints in range")
}

/// A random graph with oracle-certified chromatic number `target_chi` and
/// between `target_chi` and `max_n` vertices.
pub fn random_component_with_chi(target_chi: usize, max_n: usize, seed: u64) -> Result<Graph> {
    if target_chi == 0 || target_chi > max_n {
        return Err(Error::InvalidSpec(format!(
            "target χ {target_chi} needs 1 <= χ <= max vertices {max_n}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let budget = OracleBudget::default();
    for _ in 0..MAX_CHI_ATTEMPTS {
        let n = rng.random_range(target_chi..=max_n);
        let p: f64 = rng.random();
        let g = random_graph(n, p, &mut rng);
        if oracle::chromatic_number_exact(&g, &budget)?.chi == target_chi {
            return Ok(g);
        }
    }
    Err(Error::AttemptCapExceeded {
        target: target_chi,
        attempts: MAX_CHI_ATTEMPTS,
    })
}

/// Random bipartite host on `n` vertices: a random side split, then each
/// cross pair joined with probability `edge_p`.
pub fn random_bipartite_host<R: Rng>(n: usize, edge_p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.random_bool(edge_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("endpoints in range")
}

#[derive(Debug, Clone, PartialEq)]
pub enum HostSelector {
    Cycle(usize),
    /// Host order drawn from `1..=max_order`.
    Bipartite {
        max_order: usize,
        edge_p: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum ComponentSource {
    Catalog(Vec<CatalogEntry>),
    Random {
        max_vertices: usize,
        edge_p: f64,
        target_chi: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub seed: u64,
    pub host: HostSelector,
    pub components: ComponentSource,
    pub trials: usize,
}

impl GenParams {
    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidSpec("trials must be at least 1".into()));
        }
        match &self.host {
            HostSelector::Cycle(l) if *l < 3 || l % 2 == 0 => {
                return Err(Error::InvalidSpec(format!(
                    "cycle length {l} is not odd and >= 3"
                )))
            }
            HostSelector::Bipartite { max_order: 0, .. } => {
                return Err(Error::InvalidSpec(
                    "bipartite host needs at least 1 vertex".into(),
                ))
            }
            _ => {}
        }
        match &self.components {
            ComponentSource::Catalog(c) if c.is_empty() => {
                Err(Error::InvalidSpec("empty catalog".into()))
            }
            ComponentSource::Random {
                max_vertices: 0, ..
            } => Err(Error::InvalidSpec(
                "components need at least 1 vertex".into(),
            )),
            ComponentSource::Random {
                max_vertices,
                target_chi: Some(t),
                ..
            } if *t == 0 || t > max_vertices => Err(Error::InvalidSpec(format!(
                "target χ {t} outside 1..={max_vertices}"
            ))),
            _ => Ok(()),
        }
    }

    /// The `trials` instances this seed determines, in order.
    pub fn instances(&self) -> Result<Vec<ExpansionSpec>> {
        self.validate()?;
        let mut rng = rng_from_seed(self.seed);
        (0..self.trials).map(|_| self.draw(&mut rng)).collect()
    }

    fn draw(&self, rng: &mut SplitMix64) -> Result<ExpansionSpec> {
        let host = match &self.host {
            HostSelector::Cycle(l) => HostKind::odd_cycle(*l)?,
            HostSelector::Bipartite { max_order, edge_p } => {
                let n = rng.random_range(1..=*max_order);
                HostKind::bipartite(random_bipartite_host(n, *edge_p, rng))?
            }
        };
        let comps = (0..host.order())
            .map(|_| self.draw_component(rng))
            .collect::<Result<Vec<_>>>()?;
        Ok(spec_from_parts(host, comps))
    }

    fn draw_component(&self, rng: &mut SplitMix64) -> Result<Graph> {
        match &self.components {
            ComponentSource::Catalog(c) => Ok(c[rng.random_range(0..c.len())].graph.clone()),
            ComponentSource::Random {
                max_vertices,
                edge_p,
                target_chi: None,
            } => {
                let n = rng.random_range(1..=*max_vertices);
                Ok(random_graph(n, *edge_p, rng))
            }
            ComponentSource::Random {
                max_vertices,
                target_chi: Some(t),
                ..
            } => match random_component_with_chi(*t, *max_vertices, rng.random()) {
                Err(Error::AttemptCapExceeded { .. }) => Ok(Graph::complete(*t)),
                other => other,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry<'a>(cat: &'a [CatalogEntry], name: &str) -> &'a CatalogEntry {
        cat.iter().find(|e| e.name == name).unwrap()
    }

    #[test]
    fn catalog_stats() {
        let cat = catalog_components();
        assert_eq!(cat.len(), 9);
        let k4e = entry(&cat, "K4-e").stats;
        assert_eq!((k4e.chi, k4e.omega), (3, 3));
        let c5 = entry(&cat, "C5").stats;
        assert_eq!((c5.chi, c5.omega), (3, 2));
        assert_eq!(entry(&cat, "P4").stats.chi, 2);
        assert_eq!(entry(&cat, "C7").stats.chi, 3);
    }

    #[test]
    fn exhaustive_counts() {
        let cat = catalog_subset(&["K1", "K2", "K3"]).unwrap();
        assert_eq!(exhaustive_specs(5, &cat, false).unwrap().count(), 243);
        assert_eq!(exhaustive_specs(5, &cat, true).unwrap().count(), 39);
        assert!(exhaustive_specs(3, &cat, false).is_err());
    }

    #[test]
    fn exhaustive_order_is_lexicographic() {
        let cat = catalog_subset(&["K1", "K2"]).unwrap();
        let chis: Vec<Vec<usize>> = exhaustive_specs(5, &cat, false)
            .unwrap()
            .map(|s| s.chis())
            .collect();
        assert_eq!(chis[0], vec![1; 5]);
        assert_eq!(chis[1], vec![1, 1, 1, 1, 2]);
        assert_eq!(chis[31], vec![2; 5]);
    }

    #[test]
    fn dihedral_min_examples() {
        assert_eq!(dihedral_min(&[2, 0, 1, 0, 0]), vec![0, 0, 1, 0, 2]);
        assert_eq!(dihedral_min(&[0, 1, 2, 0, 0]), vec![0, 0, 0, 1, 2]);
    }

    #[test]
    fn targeted_components() {
        let g = random_component_with_chi(1, 5, 3).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = random_component_with_chi(2, 2, 3).unwrap();
        assert_eq!(g, Graph::complete(2));
        let g = random_component_with_chi(4, 8, 11).unwrap();
        let chi = oracle::chromatic_number_exact(&g, &OracleBudget::default())
            .unwrap()
            .chi;
        assert_eq!(chi, 4);
        assert!(random_component_with_chi(3, 2, 0).is_err());
    }

    #[test]
    fn params_are_deterministic() {
        let params = GenParams {
            seed: 42,
            host: HostSelector::Bipartite {
                max_order: 6,
                edge_p: 0.5,
            },
            components: ComponentSource::Random {
                max_vertices: 4,
                edge_p: 0.5,
                target_chi: None,
            },
            trials: 20,
        };
        let a = params.instances().unwrap();
        assert_eq!(a, params.instances().unwrap());
        assert!(a.iter().all(|s| s.host().is_bipartite() && s.order() <= 6));
        let other = GenParams { seed: 43, ..params };
        assert_ne!(a, other.instances().unwrap());
    }

    #[test]
    fn params_validation() {
        let bad = GenParams {
            seed: 0,
            host: HostSelector::Cycle(4),
            components: ComponentSource::Catalog(catalog_components()),
            trials: 1,
        };
        assert!(bad.instances().is_err());
        let zero = GenParams {
            host: HostSelector::Cycle(5),
            trials: 0,
            ..bad
        };
        assert!(zero.instances().is_err());
    }
}
