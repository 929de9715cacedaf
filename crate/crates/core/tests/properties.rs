use proptest::prelude::*;
use reed_expansion::bipartite::{chi_bipartite_expansion, color_bipartite_expansion};
use reed_expansion::expansion::{ExpansionSpec, HostKind};
use reed_expansion::generator::random_component_with_chi;
use reed_expansion::io::{emit_coloring, emit_spec, parse_coloring, parse_spec};
use reed_expansion::oddhole::{
    break_plan_at, chi_oddhole_formula, chi_upper_bound_p, color_oddhole_expansion,
    color_with_plan, CaseTag,
};
use reed_expansion::oracle::{chromatic_number_exact, clique_number_exact, OracleBudget};
use reed_expansion::reed::{check_join_reed_property, check_reed, ConditionTag};
use reed_expansion::solve::color_expansion;
use reed_expansion::{BipartiteOutcome, Graph};

fn budget() -> OracleBudget {
    OracleBudget::default()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn cycle_spec(length: usize, max_n: usize) -> impl Strategy<Value = ExpansionSpec> {
    proptest::collection::vec(graph(max_n), length).prop_map(move |comps| {
        ExpansionSpec::new(HostKind::odd_cycle(length).unwrap(), comps).unwrap()
    })
}

fn hole_spec() -> impl Strategy<Value = ExpansionSpec> {
    prop_oneof![cycle_spec(5, 4), cycle_spec(7, 3)]
}

/// Bipartite host built from a side split and a choice of cross edges.
fn bipartite_spec() -> impl Strategy<Value = ExpansionSpec> {
    (1..=5usize)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<bool>(), n),
                proptest::collection::vec(any::<bool>(), n * n),
                proptest::collection::vec(graph(4), n),
            )
        })
        .prop_map(|(side, keep, comps)| {
            let n = side.len();
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| side[u] != side[v] && keep[u * n + v]);
            let host = Graph::new(n, edges).unwrap();
            ExpansionSpec::new(HostKind::bipartite(host).unwrap(), comps).unwrap()
        })
}

fn is_odd_closed_walk(g: &Graph, walk: &[usize]) -> bool {
    walk.len() % 2 == 1 && (0..walk.len()).all(|t| g.has_edge(walk[t], walk[(t + 1) % walk.len()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn degree_sum_is_twice_edge_count(g in graph(8)) {
        let total: usize = (0..g.order()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn bipartition_matches_two_colorability(g in graph(8)) {
        let two_colorable = chromatic_number_exact(&g, &budget()).unwrap().chi <= 2;
        match g.bipartition() {
            BipartiteOutcome::Bipartite(b) => {
                prop_assert!(two_colorable);
                prop_assert!(b.is_valid_for(&g));
            }
            BipartiteOutcome::NotBipartite { odd_cycle } => {
                prop_assert!(!two_colorable);
                prop_assert!(is_odd_closed_walk(&g, &odd_cycle));
            }
        }
    }

    #[test]
    fn induced_on_all_vertices_is_identity(g in graph(8)) {
        let all: Vec<usize> = (0..g.order()).collect();
        let (h, map) = g.induced_subgraph(&all).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert!(map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn proper_coloring_survives_edge_removal(g in graph(8), drop in any::<prop::sample::Index>()) {
        let colors = chromatic_number_exact(&g, &budget()).unwrap().witness;
        prop_assume!(g.edge_count() > 0);
        let gone = drop.index(g.edge_count());
        let rest = g.edges().iter().enumerate().filter(|&(i, _)| i != gone).map(|(_, &e)| e);
        let sub = Graph::new(g.order(), rest).unwrap();
        prop_assert!(sub.is_proper_coloring(&colors).unwrap());
    }

    #[test]
    fn oracle_bounds_and_witness(g in graph(9)) {
        let r = chromatic_number_exact(&g, &budget()).unwrap();
        let omega = clique_number_exact(&g, &budget()).unwrap();
        prop_assert!(omega <= r.chi);
        prop_assert!(r.chi <= g.max_degree().unwrap() + 1);
        prop_assert!(g.is_proper_coloring(&r.witness).unwrap());
        let distinct: std::collections::BTreeSet<_> = r.witness.iter().collect();
        prop_assert_eq!(distinct.len(), r.chi);
        prop_assert_eq!(r, chromatic_number_exact(&g, &budget()).unwrap());
    }

    #[test]
    fn structural_omega_delta(spec in prop_oneof![hole_spec(), bipartite_spec()]) {
        let (g, _) = spec.materialize();
        prop_assert_eq!(spec.delta(), g.max_degree().unwrap());
        prop_assert_eq!(spec.omega(), clique_number_exact(&g, &budget()).unwrap());
    }

    #[test]
    fn rotation_is_equivariant(spec in cycle_spec(5, 3), shift in 0..5usize) {
        let (rotated, old_to_new) = spec.rotate_cycle((shift, (shift + 1) % 5)).unwrap();
        let (g, map) = spec.materialize();
        let (h, rmap) = rotated.materialize();
        let image = |v: usize| {
            let (c, local) = map.local(v);
            rmap.global(old_to_new[c], local)
        };
        prop_assert_eq!(g.edge_count(), h.edge_count());
        for &(u, v) in g.edges() {
            prop_assert!(h.has_edge(image(u), image(v)));
        }
    }

    #[test]
    fn edge_weights(spec in bipartite_spec()) {
        let edges = spec.host().edges();
        for &(i, j) in &edges {
            prop_assert_eq!(spec.edge_weight(i, j).unwrap(), spec.edge_weight(j, i).unwrap());
        }
        if let Ok((a, b)) = spec.max_weight_edge() {
            let top = spec.edge_weight(a, b).unwrap();
            prop_assert!(edges.iter().all(|&(i, j)| spec.edge_weight(i, j).unwrap() <= top));
            let (norm, _) = spec.normalize_bipartite().unwrap();
            for (i, j) in norm.host().edges() {
                prop_assert_ne!(norm.preferred_index(i).unwrap(), norm.preferred_index(j).unwrap());
            }
        }
    }

    #[test]
    fn bipartite_coloring_contract(spec in bipartite_spec()) {
        let chi = chi_bipartite_expansion(&spec).unwrap();
        let coloring = color_bipartite_expansion(&spec).unwrap();
        prop_assert!(coloring.is_proper_for(&spec));
        prop_assert_eq!(coloring.distinct_colors(), chi);
        let sizes: Vec<usize> = coloring.palettes().iter().map(|p| p.len()).collect();
        prop_assert_eq!(sizes, spec.chis());
        prop_assert_eq!(chi, chromatic_number_exact(&spec.materialize().0, &budget()).unwrap().chi);
        prop_assert!(check_reed(&spec).unwrap().holds);
    }

    #[test]
    fn c5_formula_equals_oracle(spec in cycle_spec(5, 4)) {
        let exact = chromatic_number_exact(&spec.materialize().0, &budget()).unwrap().chi;
        prop_assert_eq!(chi_oddhole_formula(&spec).unwrap(), exact);
    }

    #[test]
    fn oddhole_formula_bounds(spec in hole_spec()) {
        let formula = chi_oddhole_formula(&spec).unwrap();
        let exact = chromatic_number_exact(&spec.materialize().0, &budget()).unwrap().chi;
        let (a, b) = spec.max_weight_edge().unwrap();
        prop_assert!(formula >= exact);
        prop_assert!(formula >= spec.edge_weight(a, b).unwrap());
        prop_assert!(formula <= chi_upper_bound_p(&spec).unwrap());
    }

    #[test]
    fn oddhole_formula_is_dihedral_invariant(spec in hole_spec(), shift in 0..7usize) {
        let n = spec.order();
        let shift = shift % n;
        let formula = chi_oddhole_formula(&spec).unwrap();
        let (rotated, _) = spec.rotate_cycle((shift, (shift + 1) % n)).unwrap();
        prop_assert_eq!(chi_oddhole_formula(&rotated).unwrap(), formula);
        prop_assert_eq!(chi_oddhole_formula(&spec.reflect_cycle().unwrap()).unwrap(), formula);
    }

    #[test]
    fn oddhole_coloring_contract(spec in hole_spec()) {
        let coloring = color_oddhole_expansion(&spec).unwrap();
        prop_assert!(coloring.is_proper_for(&spec));
        prop_assert_eq!(coloring.distinct_colors(), chi_oddhole_formula(&spec).unwrap());
        let sizes: Vec<usize> = coloring.palettes().iter().map(|p| p.len()).collect();
        prop_assert_eq!(sizes, spec.chis());
    }

    #[test]
    fn every_break_index_respects_its_case_bound(spec in hole_spec()) {
        let (a, b) = spec.max_weight_edge().unwrap();
        let base = spec.chi(a) + spec.chi(b);
        let (rotated, _) = spec.rotate_cycle((a, b)).unwrap();
        for l in 3..=spec.order() - 2 {
            let plan = break_plan_at(&spec, l).unwrap();
            let coloring = color_with_plan(&spec, &plan).unwrap();
            prop_assert!(coloring.is_proper_for(&spec));
            let used = coloring.distinct_colors();
            let bound = match plan.case_tag {
                CaseTag::Slack => base,
                CaseTag::DoubleOverflow => base + rotated.chi(l).div_ceil(2),
                CaseTag::Replacement => base + (plan.triple_sum - base).div_ceil(2),
            };
            prop_assert!(used <= bound, "l = {} uses {} > {}", l, used, bound);
        }
    }

    #[test]
    fn reed_report_invariants(spec in prop_oneof![hole_spec(), bipartite_spec()]) {
        let r = check_reed(&spec).unwrap();
        prop_assert!(!r.holds || r.within_one);
        if !spec.host().is_bipartite() {
            prop_assert!(r.within_one);
        }
        if r.conditions.iter().any(|&t| t != ConditionTag::AsymptoticSize) {
            prop_assert!(r.holds);
        }
        for (i, j) in spec.host().edges() {
            prop_assert!(check_join_reed_property(&spec, i, j).unwrap());
        }
    }

    #[test]
    fn spec_and_coloring_round_trip(spec in prop_oneof![hole_spec(), bipartite_spec()]) {
        prop_assert_eq!(&parse_spec(&emit_spec(&spec)).unwrap(), &spec);
        let coloring = color_expansion(&spec).unwrap();
        prop_assert_eq!(parse_coloring(&emit_coloring(&coloring)).unwrap(), coloring);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn targeted_component_is_certified(target in 1..=4usize, extra in 0..=3usize, seed in any::<u64>()) {
        let g = random_component_with_chi(target, target + extra, seed).unwrap();
        prop_assert_eq!(chromatic_number_exact(&g, &budget()).unwrap().chi, target);
    }
}

/// Every graph on five labelled vertices with χ = 4 contains a K4.
#[test]
fn five_vertex_chi_four_has_k4() {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
        .collect();
    for mask in 0u32..1 << pairs.len() {
        let g = Graph::new(
            5,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap();
        if chromatic_number_exact(&g, &budget()).unwrap().chi == 4 {
            assert_eq!(clique_number_exact(&g, &budget()).unwrap(), 4);
        }
    }
}
