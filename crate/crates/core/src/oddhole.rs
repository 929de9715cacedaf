//! Coloring and chromatic number of odd-hole expansions `C_{2k+1}(G_0..G_{2k})`.
//!
//! All work happens on the expansion rotated so that a maximum-weight cycle edge
//! is `(0, 1)`; when several edges qualify, the one giving the fewest colors
//! is used. Removing a break vertex `l ∈ {3, ..., 2k-1}` leaves the path
//! `l+1, ..., 2k, 0, 1, ..., l-1`, which is colored as a bipartite expansion
//! with `v_0` on side 0. The break component `G_l` then receives the colors
//! of Γ₀ ∪ Γ₁ unused by its two neighbors, and if those are too few,
//! colors swapped out of `G_{l-1}` and `G_{l+1}` for a shared extra palette
//! Γ, plus one parity color when the shortfall is odd.

use std::collections::BTreeSet;

use crate::coloring::{apply_palettes, preferred_palette, Coloring, PaletteLayout};
use crate::error::{Error, Result};
use crate::expansion::{ExpansionSpec, HostKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `χ_0 + χ_1 >= χ_{l-1} + χ_l + χ_{l+1}`.
    Slack,
    /// Both neighbors of the break vertex overflow their preferred palette.
    DoubleOverflow,
    Replacement,
}

/// Indices (`base_edge` aside) refer to the expansion rotated so that the base
/// edge is `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakPlan {
    /// Maximum-weight cycle edge `(i, i+1 mod n)` of the original spec.
    pub base_edge: (usize, usize),
    pub break_index: usize,
    pub triple_sum: usize,
    pub case_tag: CaseTag,
}

fn odd_hole_length(spec: &ExpansionSpec) -> Result<usize> {
    match spec.host() {
        HostKind::OddCycle { length } if *length >= 5 => Ok(*length),
        _ => Err(Error::WrongHost {
            expected: "an odd-hole (cycle of length >= 5)",
        }),
    }
}

/// Preferred side of rotated index `j` in the path left after removing `l`.
fn path_side(j: usize, l: usize) -> u8 {
    if j < l {
        (j % 2) as u8
    } else {
        ((j + 1) % 2) as u8
    }
}

fn triple(chis: &[usize], l: usize) -> usize {
    chis[l - 1] + chis[l] + chis[l + 1]
}

fn plan_at(chis: &[usize], l: usize, base_edge: (usize, usize)) -> BreakPlan {
    let triple_sum = triple(chis, l);
    let base = [chis[0], chis[1]];
    let overflows = |j: usize| chis[j] > base[path_side(j, l) as usize];
    let case_tag = if chis[0] + chis[1] >= triple_sum {
        CaseTag::Slack
    } else if overflows(l - 1) && overflows(l + 1) {
        CaseTag::DoubleOverflow
    } else {
        CaseTag::Replacement
    };
    BreakPlan {
        base_edge,
        break_index: l,
        triple_sum,
        case_tag,
    }
}

/// Window `χ_{l-1} + χ_l + χ_{l+1}` minimized over `l ∈ {3, ..., 2k-1}`,
/// smallest index on ties.
fn minimal_break(chis: &[usize], base_edge: (usize, usize)) -> BreakPlan {
    let n = chis.len();
    let l = (3..=n - 2)
        .min_by_key(|&l| (triple(chis, l), l))
        .expect("cycle of length >= 5 has a break candidate");
    plan_at(chis, l, base_edge)
}

fn formula_from(chis: &[usize], plan: &BreakPlan) -> usize {
    let base = chis[0] + chis[1];
    if base >= plan.triple_sum {
        base
    } else {
        base + (plan.triple_sum - base).div_ceil(2)
    }
}

/// Every maximum-weight cycle edge, smallest `(min, max)` pair first, with
/// the rotated spec, its old-to-new map and its minimal break plan.
/// Traversing the cycle the other way maps the break range onto itself, so
/// the formula does not depend on the direction.
fn candidates(spec: &ExpansionSpec) -> Result<Vec<(ExpansionSpec, Vec<usize>, BreakPlan)>> {
    let n = odd_hole_length(spec)?;
    let (a, b) = spec.max_weight_edge()?;
    let top = spec.edge_weight(a, b)?;
    let mut edges: Vec<(usize, usize)> = (0..n)
        .map(|i| (i, (i + 1) % n))
        .filter(|&(i, j)| spec.chi(i) + spec.chi(j) == top)
        .collect();
    edges.sort_by_key(|&(i, j)| (i.min(j), i.max(j)));
    edges
        .into_iter()
        .map(|edge| {
            let (r, map) = spec.rotate_cycle(edge)?;
            let plan = minimal_break(&r.chis(), edge);
            Ok((r, map, plan))
        })
        .collect()
}

/// The rotation used by every odd-hole routine: among all maximum-weight
/// base edges, the first one with the smallest formula value.
fn canonical(spec: &ExpansionSpec) -> Result<(ExpansionSpec, Vec<usize>, BreakPlan)> {
    Ok(candidates(spec)?
        .into_iter()
        .min_by_key(|(r, _, plan)| formula_from(&r.chis(), plan))
        .expect("an odd hole has at least one edge"))
}

/// Base edge and break vertex of the canonical rotation, with the case
/// the construction falls into.
pub fn choose_break_plan(spec: &ExpansionSpec) -> Result<BreakPlan> {
    let (_, _, plan) = canonical(spec)?;
    assert!(
        plan.case_tag != CaseTag::DoubleOverflow,
        "a minimum window never has both neighbors overflowing"
    );
    Ok(plan)
}

/// Plan for an arbitrary break vertex `l ∈ {3, ..., 2k-1}` (rotated
/// index) on the canonical base edge.
pub fn break_plan_at(spec: &ExpansionSpec, l: usize) -> Result<BreakPlan> {
    let (r, _, plan) = canonical(spec)?;
    let n = r.order();
    if !(3..=n - 2).contains(&l) {
        return Err(Error::InvalidSpec(format!(
            "break index {l} outside 3..={}",
            n - 2
        )));
    }
    Ok(plan_at(&r.chis(), l, plan.base_edge))
}

/// Closed-form χ: `χ_0 + χ_1` when the minimum window fits, otherwise
/// `χ_0 + χ_1 + ⌊(window - χ_0 - χ_1 + 1) / 2⌋`, on the canonical
/// rotation.
pub fn chi_oddhole_formula(spec: &ExpansionSpec) -> Result<usize> {
    let (r, _, plan) = canonical(spec)?;
    Ok(formula_from(&r.chis(), &plan))
}

/// `χ_i + χ_{i+1} + ⌊(p + 1) / 2⌋` for a maximum-weight edge, with `p` the
/// smallest component χ.
pub fn chi_upper_bound_p(spec: &ExpansionSpec) -> Result<usize> {
    odd_hole_length(spec)?;
    let (a, b) = spec.max_weight_edge()?;
    Ok(spec.edge_weight(a, b)? + spec.min_chi().div_ceil(2))
}

pub fn color_oddhole_expansion(spec: &ExpansionSpec) -> Result<Coloring> {
    let plan = choose_break_plan(spec)?;
    color_with_plan(spec, &plan)
}

/// Runs the construction for the given plan (which must come from
/// [`choose_break_plan`] or [`break_plan_at`] on the same spec).
pub fn color_with_plan(spec: &ExpansionSpec, plan: &BreakPlan) -> Result<Coloring> {
    odd_hole_length(spec)?;
    let (a, b) = plan.base_edge;
    let (top_a, top_b) = spec.max_weight_edge()?;
    if spec.edge_weight(a, b)? != spec.edge_weight(top_a, top_b)? {
        return Err(Error::InvalidSpec(
            "plan base edge is not of maximum weight".into(),
        ));
    }
    let (r, old_to_new) = spec.rotate_cycle(plan.base_edge)?;
    let chis = r.chis();
    let n = chis.len();
    let l = plan.break_index;
    let (left, right) = (l - 1, l + 1);
    let base = chis[0] + chis[1];
    let mut layout = PaletteLayout::new(chis[0], chis[1], 0);

    let mut palettes: Vec<Vec<usize>> = (0..n)
        .map(|j| {
            if j == l {
                Vec::new()
            } else {
                preferred_palette(chis[j], path_side(j, l), &layout)
            }
        })
        .collect();
    for j in (0..n).filter(|&j| j != l && (j + 1) % n != l) {
        let k = (j + 1) % n;
        assert!(
            !(chis[j] > chis[path_side(j, l) as usize] && chis[k] > chis[path_side(k, l) as usize]),
            "adjacent path components both overflow"
        );
    }

    let left_set: BTreeSet<usize> = palettes[left].iter().copied().collect();
    let right_set: BTreeSet<usize> = palettes[right].iter().copied().collect();
    let free: Vec<usize> = (0..base)
        .filter(|c| !left_set.contains(c) && !right_set.contains(c))
        .collect();
    let shortfall = chis[l].saturating_sub(free.len());
    let swaps = shortfall / 2;
    let parity = shortfall % 2;

    let left_out = swap_candidates(
        &palettes[left],
        &right_set,
        layout.gamma(path_side(left, l)),
        swaps,
    );
    let right_out = swap_candidates(
        &palettes[right],
        &left_set,
        layout.gamma(path_side(right, l)),
        swaps,
    );

    let extra: Vec<usize> = (base..base + swaps + parity).collect();
    for (t, &gamma) in extra.iter().take(swaps).enumerate() {
        replace_color(&mut palettes[left], left_out[t], gamma);
        replace_color(&mut palettes[right], right_out[t], gamma);
    }

    let mut available: Vec<usize> = free
        .into_iter()
        .chain(left_out)
        .chain(right_out)
        .chain(extra.iter().skip(swaps).copied())
        .collect();
    available.sort_unstable();
    assert!(available.len() >= chis[l], "break component does not fit");
    available.truncate(chis[l]);
    palettes[l] = available;
    layout.extra = extra;

    // Back to the caller's component order.
    let palettes: Vec<Vec<usize>> = (0..n)
        .map(|old| palettes[old_to_new[old]].clone())
        .collect();
    let coloring = apply_palettes(spec, &palettes, layout)?;
    assert!(
        coloring.is_proper_for(spec),
        "odd-hole expansion coloring is not proper"
    );
    Ok(coloring)
}

/// `count` colors of `palette` absent from `avoid`, preferring the highest
/// colors of the component's own side `own`, then its highest other colors.
fn swap_candidates(
    palette: &[usize],
    avoid: &BTreeSet<usize>,
    own: &[usize],
    count: usize,
) -> Vec<usize> {
    let eligible = |c: &&usize| !avoid.contains(*c);
    let mut picked: Vec<usize> = palette
        .iter()
        .filter(|c| own.contains(c))
        .filter(eligible)
        .rev()
        .copied()
        .collect();
    picked.extend(
        palette
            .iter()
            .filter(|c| !own.contains(c))
            .filter(eligible)
            .rev()
            .copied(),
    );
    assert!(
        picked.len() >= count,
        "not enough swappable colors: need {count}, have {}",
        picked.len()
    );
    picked.truncate(count);
    picked
}

fn replace_color(palette: &mut [usize], from: usize, to: usize) {
    let slot = palette
        .iter_mut()
        .find(|c| **c == from)
        .expect("swapped color belongs to the palette");
    *slot = to;
}
