//! Colorings of expansions, indexed by `(component, local vertex)`.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::expansion::ExpansionSpec;
use crate::oracle::{self, OracleBudget};

/// The base palettes Γ₀ and Γ₁ plus the extra palette Γ. Colors are dense:
/// Γ₀ first, then Γ₁, then Γ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PaletteLayout {
    pub gamma0: Vec<usize>,
    pub gamma1: Vec<usize>,
    pub extra: Vec<usize>,
}

impl PaletteLayout {
    pub fn new(chi0: usize, chi1: usize, extra: usize) -> Self {
        PaletteLayout {
            gamma0: (0..chi0).collect(),
            gamma1: (chi0..chi0 + chi1).collect(),
            extra: (chi0 + chi1..chi0 + chi1 + extra).collect(),
        }
    }

    pub fn gamma(&self, side: u8) -> &[usize] {
        if side == 0 {
            &self.gamma0
        } else {
            &self.gamma1
        }
    }

    pub fn total(&self) -> usize {
        self.gamma0.len() + self.gamma1.len() + self.extra.len()
    }

    pub fn is_dense(&self) -> bool {
        self.gamma0
            .iter()
            .chain(&self.gamma1)
            .chain(&self.extra)
            .copied()
            .eq(0..self.total())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    assignment: Vec<Vec<usize>>,
    layout: PaletteLayout,
    palettes: Vec<BTreeSet<usize>>,
}

impl Coloring {
    pub fn new(assignment: Vec<Vec<usize>>, layout: PaletteLayout) -> Self {
        let palettes = assignment
            .iter()
            .map(|colors| colors.iter().copied().collect())
            .collect();
        Coloring {
            assignment,
            layout,
            palettes,
        }
    }

    pub fn assignment(&self) -> &[Vec<usize>] {
        &self.assignment
    }

    pub fn color(&self, component: usize, vertex: usize) -> usize {
        self.assignment[component][vertex]
    }

    pub fn layout(&self) -> &PaletteLayout {
        &self.layout
    }

    /// Colors used inside each component.
    pub fn palettes(&self) -> &[BTreeSet<usize>] {
        &self.palettes
    }

    pub fn distinct_colors(&self) -> usize {
        self.palettes
            .iter()
            .flatten()
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Colors in global vertex order of [`ExpansionSpec::materialize`].
    pub fn flatten(&self) -> Vec<usize> {
        self.assignment.iter().flatten().copied().collect()
    }

    /// True when the shape matches `spec` and the coloring is proper on the
    /// materialized graph.
    pub fn is_proper_for(&self, spec: &ExpansionSpec) -> bool {
        if self.assignment.len() != spec.order()
            || self
                .assignment
                .iter()
                .zip(spec.components())
                .any(|(a, g)| a.len() != g.order())
        {
            return false;
        }
        let (graph, _) = spec.materialize();
        graph.is_proper_coloring(&self.flatten()).unwrap_or(false)
    }
}

/// Ordered palette of a component preferring side `p`: the first
/// `min(chi, |Γ_p|)` colors of Γ_p, then on overflow the last
/// `chi - |Γ_p|` colors of the other side.
pub(crate) fn preferred_palette(chi: usize, p: u8, layout: &PaletteLayout) -> Vec<usize> {
    let own = layout.gamma(p);
    let other = layout.gamma(1 - p);
    let mut palette: Vec<usize> = own.iter().take(chi).copied().collect();
    let overflow = chi.saturating_sub(own.len());
    assert!(overflow <= other.len(), "component does not fit in Γ₀ ∪ Γ₁");
    palette.extend_from_slice(&other[other.len() - overflow..]);
    palette
}

/// Colors every component with its canonical optimal coloring, relabeled
/// through the component's ordered palette.
pub(crate) fn apply_palettes(
    spec: &ExpansionSpec,
    palettes: &[Vec<usize>],
    layout: PaletteLayout,
) -> Result<Coloring> {
    let budget = OracleBudget::default();
    let assignment = spec
        .components()
        .iter()
        .zip(palettes)
        .map(|(g, palette)| {
            let witness = oracle::chromatic_number_exact(g, &budget)?.witness;
            Ok(witness.into_iter().map(|c| palette[c]).collect())
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Ok(Coloring::new(assignment, layout))
}
