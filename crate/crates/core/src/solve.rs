//! Formula χ and constructive coloring for any supported host.

use crate::bipartite::{chi_bipartite_expansion, color_bipartite_expansion};
use crate::coloring::{apply_palettes, Coloring, PaletteLayout};
use crate::error::Result;
use crate::expansion::{ExpansionSpec, HostKind};
use crate::oddhole::{chi_oddhole_formula, color_oddhole_expansion};

/// χ from the closed formula of the host kind. A triangle expansion is the
/// join of its three components, so its χ is the sum of theirs.
pub fn chi_formula(spec: &ExpansionSpec) -> Result<usize> {
    match spec.host() {
        HostKind::Bipartite { .. } => chi_bipartite_expansion(spec),
        HostKind::OddCycle { length: 3 } => Ok(spec.chis().iter().sum()),
        HostKind::OddCycle { .. } => chi_oddhole_formula(spec),
    }
}

pub fn color_expansion(spec: &ExpansionSpec) -> Result<Coloring> {
    match spec.host() {
        HostKind::Bipartite { .. } => color_bipartite_expansion(spec),
        HostKind::OddCycle { length: 3 } => color_triangle_expansion(spec),
        HostKind::OddCycle { .. } => color_oddhole_expansion(spec),
    }
}

/// Pairwise disjoint palettes: Γ₀, Γ₁, then the third component in the
/// extra palette.
fn color_triangle_expansion(spec: &ExpansionSpec) -> Result<Coloring> {
    let chis = spec.chis();
    let layout = PaletteLayout::new(chis[0], chis[1], chis[2]);
    let palettes = vec![
        layout.gamma0.clone(),
        layout.gamma1.clone(),
        layout.extra.clone(),
    ];
    let coloring = apply_palettes(spec, &palettes, layout)?;
    assert!(
        coloring.is_proper_for(spec),
        "triangle expansion coloring is not proper"
    );
    Ok(coloring)
}
