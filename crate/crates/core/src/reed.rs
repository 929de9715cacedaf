//! Reed's bound `⌈(ω + Δ + 1) / 2⌉` on expansions, and the structural
//! conditions under which it is known to hold.

use std::collections::BTreeSet;
use std::fmt;

use crate::bipartite::chi_bipartite_expansion;
use crate::error::{Error, Result};
use crate::expansion::{ExpansionSpec, HostKind};
use crate::oddhole::{chi_oddhole_formula, choose_break_plan};
use crate::oracle::{self, OracleBudget};

pub fn reed_bound(omega: usize, delta: usize) -> usize {
    (omega + delta + 2) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConditionTag {
    PEven,
    SomeChiOne,
    SomeComponentBipartite,
    AllChiEqual,
    AllChiAtMost3,
    AllChiAtMost4,
    C5Host,
    AsymptoticSize,
    BipartiteHost,
    PerfectTripleAtBreak,
}

impl ConditionTag {
    pub const ALL: [ConditionTag; 10] = [
        ConditionTag::PEven,
        ConditionTag::SomeChiOne,
        ConditionTag::SomeComponentBipartite,
        ConditionTag::AllChiEqual,
        ConditionTag::AllChiAtMost3,
        ConditionTag::AllChiAtMost4,
        ConditionTag::C5Host,
        ConditionTag::AsymptoticSize,
        ConditionTag::BipartiteHost,
        ConditionTag::PerfectTripleAtBreak,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConditionTag::PEven => "PEven",
            ConditionTag::SomeChiOne => "SomeChiOne",
            ConditionTag::SomeComponentBipartite => "SomeComponentBipartite",
            ConditionTag::AllChiEqual => "AllChiEqual",
            ConditionTag::AllChiAtMost3 => "AllChiAtMost3",
            ConditionTag::AllChiAtMost4 => "AllChiAtMost4",
            ConditionTag::C5Host => "C5Host",
            ConditionTag::AsymptoticSize => "AsymptoticSize",
            ConditionTag::BipartiteHost => "BipartiteHost",
            ConditionTag::PerfectTripleAtBreak => "PerfectTripleAtBreak",
        }
    }
}

impl fmt::Display for ConditionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ConditionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConditionTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown condition tag {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChiMethod {
    Formula,
    Exact,
}

impl ChiMethod {
    pub fn name(self) -> &'static str {
        match self {
            ChiMethod::Formula => "formula",
            ChiMethod::Exact => "exact",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReedReport {
    pub omega: usize,
    pub delta: usize,
    pub chi: usize,
    pub chi_method: ChiMethod,
    /// Oracle χ of the materialization, when a cross-check was requested.
    pub chi_exact: Option<usize>,
    pub reed_bound: usize,
    pub holds: bool,
    pub within_one: bool,
    pub conditions: BTreeSet<ConditionTag>,
    pub notes: Vec<String>,
}

/// Every condition whose predicate holds for `spec`.
pub fn classify_conditions(spec: &ExpansionSpec) -> BTreeSet<ConditionTag> {
    let mut tags = BTreeSet::new();
    let length = match spec.host() {
        HostKind::Bipartite { .. } => {
            tags.insert(ConditionTag::BipartiteHost);
            return tags;
        }
        HostKind::OddCycle { length } => *length,
    };
    let chis = spec.chis();
    let max_chi = spec.max_chi();

    // Components of chromatic number at most p on C_{2k+1} with at least
    // (2k+1)(5p-9)+1 vertices; the threshold is non-positive for p = 1.
    let threshold = length as i64 * (5 * max_chi as i64 - 9) + 1;
    if spec.total_vertices() as i64 >= threshold {
        tags.insert(ConditionTag::AsymptoticSize);
    }
    if length < 5 {
        return tags;
    }

    if spec.min_chi().is_multiple_of(2) {
        tags.insert(ConditionTag::PEven);
    }
    if chis.contains(&1) {
        tags.insert(ConditionTag::SomeChiOne);
    }
    if spec
        .components()
        .iter()
        .any(|g| g.bipartition().is_bipartite())
    {
        tags.insert(ConditionTag::SomeComponentBipartite);
    }
    if chis.iter().all(|&c| c == chis[0]) {
        tags.insert(ConditionTag::AllChiEqual);
    }
    if max_chi <= 3 {
        tags.insert(ConditionTag::AllChiAtMost3);
    }
    if max_chi <= 4 {
        tags.insert(ConditionTag::AllChiAtMost4);
    }
    if length == 5 {
        tags.insert(ConditionTag::C5Host);
    }

    let plan = choose_break_plan(spec).expect("odd hole has a break plan");
    let (rotated, _) = spec
        .rotate_cycle(plan.base_edge)
        .expect("base edge is a cycle edge");
    let perfect = |i: usize| rotated.stats()[i].chi == rotated.stats()[i].omega;
    if perfect(0) && perfect(1) && perfect(plan.break_index) {
        tags.insert(ConditionTag::PerfectTripleAtBreak);
    }
    tags
}

pub fn check_reed(spec: &ExpansionSpec) -> Result<ReedReport> {
    check_reed_with(spec, false, &OracleBudget::default())
}

/// Reed report with χ from the closed formula of the host kind (the oracle
/// for triangle hosts). With `crosscheck`, the oracle χ of the
/// materialization is also computed and any disagreement noted.
pub fn check_reed_with(
    spec: &ExpansionSpec,
    crosscheck: bool,
    budget: &OracleBudget,
) -> Result<ReedReport> {
    let omega = spec.omega();
    let delta = spec.delta();
    let bound = reed_bound(omega, delta);
    let exact = |spec: &ExpansionSpec| -> Result<usize> {
        Ok(oracle::chromatic_number_exact(&spec.materialize().0, budget)?.chi)
    };

    let (chi, chi_method) = match spec.host() {
        HostKind::Bipartite { .. } => (chi_bipartite_expansion(spec)?, ChiMethod::Formula),
        HostKind::OddCycle { length: 3 } => (exact(spec)?, ChiMethod::Exact),
        HostKind::OddCycle { .. } => (chi_oddhole_formula(spec)?, ChiMethod::Formula),
    };
    let chi_exact = match chi_method {
        ChiMethod::Exact => Some(chi),
        ChiMethod::Formula if crosscheck => Some(exact(spec)?),
        ChiMethod::Formula => None,
    };

    let mut notes = Vec::new();
    if let Some(e) = chi_exact.filter(|&e| e != chi) {
        notes.push(format!("formula χ {chi} differs from exact χ {e}"));
    }
    let holds = chi <= bound;
    if !holds {
        if let HostKind::OddCycle { length } = spec.host() {
            if *length >= 5 {
                let (a, b) = spec.max_weight_edge()?;
                let tight = spec.chi(a) + spec.chi(b) + spec.min_chi().div_ceil(2);
                notes.push(format!(
                    "bound exceeded; χ {} the maximum edge weight plus ⌊(p+1)/2⌋ = {tight}",
                    if chi == tight {
                        "equals"
                    } else {
                        "differs from"
                    }
                ));
            }
        }
    }

    Ok(ReedReport {
        omega,
        delta,
        chi,
        chi_method,
        chi_exact,
        reed_bound: bound,
        holds,
        within_one: chi <= bound + 1,
        conditions: classify_conditions(spec),
        notes,
    })
}

/// Whether the join `G_i + G_j` of two adjacent components satisfies the
/// bound, with every quantity taken from the oracle.
pub fn check_join_reed_property(spec: &ExpansionSpec, i: usize, j: usize) -> Result<bool> {
    let join = spec.join_subgraph(i, j)?;
    let budget = OracleBudget {
        max_vertices: 25,
        ..OracleBudget::default()
    };
    let chi = oracle::chromatic_number_exact(&join, &budget)?.chi;
    let omega = oracle::clique_number_exact(&join, &budget)?;
    Ok(chi <= reed_bound(omega, join.max_degree()?))
}
