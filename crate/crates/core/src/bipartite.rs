//! Preferred-palette coloring of bipartite expansions.
//!
//! With `v_a v_b` a maximum-weight host edge, Γ₀ gets `χ_a` colors and Γ₁
//! gets `χ_b` others. Component `i` takes the first colors of its preferred
//! palette Γ_{p(i)} and, when `χ_i` is larger, the last colors of the other
//! one. Two adjacent components can never both overflow because
//! `χ_i + χ_j <= χ_a + χ_b`, and an overflowing component only reaches into
//! the tail of the palette its neighbor fills from the front.
//!
//! Host vertices without neighbors are the one place a component may not
//! fit into Γ₀ ∪ Γ₁; they spill into the extra palette.

use crate::coloring::{apply_palettes, preferred_palette, Coloring, PaletteLayout};
use crate::error::{Error, Result};
use crate::expansion::{preferences, ExpansionSpec};

pub fn color_bipartite_expansion(spec: &ExpansionSpec) -> Result<Coloring> {
    if !spec.host().is_bipartite() {
        return Err(Error::WrongHost {
            expected: "a bipartite",
        });
    }
    let chis = spec.chis();
    let (base_a, base_b, pref) = match spec.max_weight_edge() {
        Ok((a, b)) => (chis[a], chis[b], preferences(spec.host(), a)),
        Err(Error::EdgelessHost) => (spec.max_chi(), 0, vec![0; spec.order()]),
        Err(e) => return Err(e),
    };
    let base = base_a + base_b;
    let spill = chis
        .iter()
        .map(|&c| c.saturating_sub(base))
        .max()
        .unwrap_or(0);
    let layout = PaletteLayout::new(base_a, base_b, spill);

    let host = spec.host();
    for (i, j) in host.edges() {
        assert!(
            chis[i] + chis[j] <= base,
            "edge ({i}, {j}) heavier than the chosen base edge"
        );
        assert!(
            pref[i] != pref[j],
            "preferences must differ across a host edge"
        );
    }

    let palettes: Vec<Vec<usize>> = chis
        .iter()
        .zip(&pref)
        .map(|(&chi, &p)| {
            if chi <= base {
                preferred_palette(chi, p, &layout)
            } else {
                (0..chi).collect()
            }
        })
        .collect();

    let coloring = apply_palettes(spec, &palettes, layout)?;
    assert!(
        coloring.is_proper_for(spec),
        "bipartite expansion coloring is not proper"
    );
    Ok(coloring)
}

/// χ of a bipartite expansion: `χ_a + χ_b` for a maximum-weight edge, or
/// the largest component χ when that is bigger (edgeless or isolated host
/// vertices).
pub fn chi_bipartite_expansion(spec: &ExpansionSpec) -> Result<usize> {
    if !spec.host().is_bipartite() {
        return Err(Error::WrongHost {
            expected: "a bipartite",
        });
    }
    let heaviest = match spec.max_weight_edge() {
        Ok((a, b)) => spec.chi(a) + spec.chi(b),
        Err(Error::EdgelessHost) => 0,
        Err(e) => return Err(e),
    };
    Ok(heaviest.max(spec.max_chi()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::HostKind;
    use crate::graph::Graph;
    use crate::oracle::{chromatic_number_exact, OracleBudget};
    use std::collections::BTreeSet;

    fn spec(host: Graph, comps: Vec<Graph>) -> ExpansionSpec {
        ExpansionSpec::new(HostKind::bipartite(host).unwrap(), comps).unwrap()
    }

    fn oracle_chi(s: &ExpansionSpec) -> usize {
        chromatic_number_exact(&s.materialize().0, &OracleBudget::default())
            .unwrap()
            .chi
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn path_host_trace() {
        // χ = (3, 2, 2, 1): Γ₀ = {0,1,2}, Γ₁ = {3,4}; p = (0, 1, 0, 1).
        let s = spec(
            Graph::path(4),
            vec![
                Graph::complete(3),
                Graph::complete(2),
                Graph::path(3),
                Graph::complete(1),
            ],
        );
        let c = color_bipartite_expansion(&s).unwrap();
        assert_eq!(c.layout().gamma0, vec![0, 1, 2]);
        assert_eq!(c.layout().gamma1, vec![3, 4]);
        assert!(c.layout().extra.is_empty());
        assert_eq!(c.palettes()[2], set(&[0, 1]));
        assert_eq!(c.palettes()[3], set(&[3]));
        assert_eq!(c.distinct_colors(), 5);
        assert!(c.is_proper_for(&s));
        assert_eq!(chi_bipartite_expansion(&s), Ok(5));
        assert_eq!(oracle_chi(&s), 5);
    }

    #[test]
    fn edge_host_is_clique() {
        let s = spec(Graph::path(2), vec![Graph::complete(2), Graph::complete(3)]);
        let c = color_bipartite_expansion(&s).unwrap();
        assert_eq!(c.distinct_colors(), 5);
        assert_eq!(chi_bipartite_expansion(&s), Ok(5));
    }

    #[test]
    fn star_host() {
        // Star 0-1, 0-2 with χ = (1, 2, 3): base edge (0, 2), Γ₀ = {0},
        // Γ₁ = {1,2,3}; leaf 1 sits with leaf 2 and fits in Γ₁.
        let s = spec(
            Graph::new(3, [(0, 1), (0, 2)]).unwrap(),
            vec![Graph::complete(1), Graph::complete(2), Graph::complete(3)],
        );
        let c = color_bipartite_expansion(&s).unwrap();
        assert_eq!(c.distinct_colors(), 4);
        assert_eq!(c.palettes()[1], set(&[1, 2]));
        assert_eq!(oracle_chi(&s), 4);
    }

    #[test]
    fn overflow_takes_last_colors_of_other_palette() {
        // Path 0-1-2-3 with χ = (3, 1, 1, 3): Γ₀ = {0,1,2}, Γ₁ = {3}.
        // Component 3 prefers Γ₁ and overflows into the last two colors of Γ₀.
        let s = spec(
            Graph::path(4),
            vec![
                Graph::complete(3),
                Graph::complete(1),
                Graph::complete(1),
                Graph::complete(3),
            ],
        );
        let c = color_bipartite_expansion(&s).unwrap();
        assert_eq!(c.layout().gamma0, vec![0, 1, 2]);
        assert_eq!(c.layout().gamma1, vec![3]);
        assert_eq!(c.palettes()[2], set(&[0]));
        assert_eq!(c.palettes()[3], set(&[1, 2, 3]));
        assert_eq!(c.distinct_colors(), 4);
        assert!(c.is_proper_for(&s));
        assert_eq!(oracle_chi(&s), 4);
    }

    #[test]
    fn single_vertex_host() {
        let s = spec(Graph::empty(1), vec![Graph::complete(7)]);
        assert_eq!(chi_bipartite_expansion(&s), Ok(7));
        let c = color_bipartite_expansion(&s).unwrap();
        assert_eq!(c.distinct_colors(), 7);
    }

    #[test]
    fn isolated_heavy_component_spills() {
        let s = spec(
            Graph::new(3, [(0, 1)]).unwrap(),
            vec![Graph::complete(1), Graph::complete(1), Graph::complete(4)],
        );
        assert_eq!(chi_bipartite_expansion(&s), Ok(4));
        let c = color_bipartite_expansion(&s).unwrap();
        assert_eq!(c.layout().extra, vec![2, 3]);
        assert_eq!(c.distinct_colors(), 4);
        assert_eq!(oracle_chi(&s), 4);
    }

    #[test]
    fn rejects_cycle_host() {
        let s = ExpansionSpec::new(HostKind::odd_cycle(5).unwrap(), vec![Graph::complete(1); 5])
            .unwrap();
        assert!(color_bipartite_expansion(&s).is_err());
        assert!(chi_bipartite_expansion(&s).is_err());
    }
}
