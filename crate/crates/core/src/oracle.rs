//! Exact clique number and chromatic number for small graphs.
//!
//! Everything else in the crate is checked against these routines, so they
//! deliberately know nothing about expansions: they work on a plain
//! [`Graph`] with at most 64 vertices, encoded as one `u64` adjacency mask
//! per vertex.
//!
//! * ω: branch and bound over candidate sets, pruned with a greedy
//!   coloring bound.
//! * χ: iterative deepening on `k` starting from ω. Each `k` is decided by
//!   a DSATUR-ordered backtracking search with forward checking; ties in
//!   the dynamic order are broken by degeneracy rank. Every node is also
//!   pruned when the independence numbers of the sets still open to each
//!   color add up to fewer than the uncolored vertices. Once the smallest
//!   feasible `k` is known, a second search in vertex-index order returns
//!   the lexicographically smallest `k`-coloring as the witness.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard limit of the mask representation.
pub const MAX_ORACLE_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Search nodes per oracle call, summed over all sub-searches.
    pub max_nodes: u64,
    pub time_cap: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 40,
            max_nodes: 500_000_000,
            time_cap: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    /// `witness[v]` is the color of `v`; colors are `0..chi`.
    pub witness: Vec<usize>,
}

struct Control {
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
}

impl Control {
    fn new(budget: &OracleBudget) -> Self {
        Control {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: Instant::now() + budget.time_cap,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded(format!(
                "search node cap of {} reached",
                self.max_nodes
            )));
        }
        if self.nodes.is_multiple_of(4096) && Instant::now() > self.deadline {
            return Err(Error::BudgetExceeded("time cap reached".into()));
        }
        Ok(())
    }
}

fn check_budget(g: &Graph, budget: &OracleBudget) -> Result<()> {
    if budget.max_vertices == 0 || budget.max_nodes == 0 || budget.time_cap.is_zero() {
        return Err(Error::BudgetExceeded(
            "budget limits must be positive".into(),
        ));
    }
    let limit = budget.max_vertices.min(MAX_ORACLE_VERTICES);
    if g.order() > limit {
        return Err(Error::BudgetExceeded(format!(
            "graph has {} vertices, limit is {limit}",
            g.order()
        )));
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbor_mask(v)).collect()
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        bit(k) - 1
    }
}

pub fn is_complete(g: &Graph) -> bool {
    g.is_complete()
}

pub fn clique_number_exact(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    maximum_clique(g, budget).map(|c| c.len())
}

/// A maximum clique, as a sorted vertex list.
pub fn maximum_clique(g: &Graph, budget: &OracleBudget) -> Result<Vec<usize>> {
    check_budget(g, budget)?;
    let mut ctl = Control::new(budget);
    maximum_clique_inner(&masks(g), g.order(), &mut ctl)
}

fn maximum_clique_inner(adj: &[u64], n: usize, ctl: &mut Control) -> Result<Vec<usize>> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    if n > 0 {
        expand_clique(adj, &mut current, low_mask(n), &mut best, ctl)?;
    }
    best.sort_unstable();
    Ok(best)
}

/// Greedy sequential coloring of `cand`; returns vertices in color-class
/// order with the class number (1-based) of each, which bounds the size of
/// any clique drawn from that vertex and the ones before it.
fn color_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut class = 0;
    while uncolored != 0 {
        class += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !bit(v) & !adj[v];
            uncolored &= !bit(v);
            order.push(v);
            bounds.push(class);
        }
    }
    (order, bounds)
}

fn expand_clique(
    adj: &[u64],
    current: &mut Vec<usize>,
    cand: u64,
    best: &mut Vec<usize>,
    ctl: &mut Control,
) -> Result<()> {
    ctl.tick()?;
    let (order, bounds) = color_sort(adj, cand);
    let mut remaining = cand;
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= best.len() {
            return Ok(());
        }
        let v = order[idx];
        current.push(v);
        let next = remaining & adj[v];
        if next == 0 {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand_clique(adj, current, next, best, ctl)?;
        }
        current.pop();
        remaining &= !bit(v);
    }
    Ok(())
}

/// Smallest-last degeneracy order; `rank[v]` is the position of `v`, with
/// the most constrained vertices first.
fn degeneracy_rank(adj: &[u64], n: usize) -> Vec<usize> {
    let mut alive = low_mask(n);
    let mut removal = Vec::with_capacity(n);
    while alive != 0 {
        let mut pick = usize::MAX;
        let mut pick_deg = u32::MAX;
        let mut a = alive;
        while a != 0 {
            let v = a.trailing_zeros() as usize;
            a &= a - 1;
            let d = (adj[v] & alive).count_ones();
            if d < pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        removal.push(pick);
        alive &= !bit(pick);
    }
    let mut rank = vec![0; n];
    for (pos, &v) in removal.iter().rev().enumerate() {
        rank[v] = pos;
    }
    rank
}

const NONE: u8 = u8::MAX;

/// Memoized independence numbers of vertex subsets, computed as clique
/// numbers of the complement.
struct Independence {
    co_adj: Vec<u64>,
    memo: HashMap<u64, u32>,
}

impl Independence {
    fn new(adj: &[u64], n: usize) -> Self {
        let full = low_mask(n);
        Independence {
            co_adj: (0..n).map(|v| full & !adj[v] & !bit(v)).collect(),
            memo: HashMap::new(),
        }
    }

    fn alpha(&mut self, set: u64, ctl: &mut Control) -> Result<u32> {
        if set.count_ones() <= 1 {
            return Ok(set.count_ones());
        }
        if let Some(&a) = self.memo.get(&set) {
            return Ok(a);
        }
        let mut best = Vec::new();
        expand_clique(&self.co_adj, &mut Vec::new(), set, &mut best, ctl)?;
        let a = best.len() as u32;
        self.memo.insert(set, a);
        Ok(a)
    }
}

struct Coloring<'a> {
    adj: &'a [u64],
    k: usize,
    colors: Vec<u8>,
    /// Colors already taken by a neighbor.
    blocked: Vec<u64>,
    indep: Independence,
}

impl<'a> Coloring<'a> {
    fn new(adj: &'a [u64], n: usize, k: usize) -> Self {
        Coloring {
            adj,
            k,
            colors: vec![NONE; n],
            blocked: vec![0; n],
            indep: Independence::new(adj, n),
        }
    }

    /// Each color class restricted to the uncolored vertices is an
    /// independent set among the vertices that may still take that color,
    /// so the classes together cover at most the sum of those α values.
    fn capacity_short(&mut self, uncolored: u64, used: usize, ctl: &mut Control) -> Result<bool> {
        let need = uncolored.count_ones();
        if need as usize <= self.k {
            return Ok(false);
        }
        let fresh = self.k.saturating_sub(used) as u32;
        let mut total = 0u32;
        if fresh > 0 {
            total += fresh * self.indep.alpha(uncolored, ctl)?;
            if total >= need {
                return Ok(false);
            }
        }
        for c in 0..used.min(self.k) {
            let mut open = 0u64;
            let mut u = uncolored;
            while u != 0 {
                let v = u.trailing_zeros() as usize;
                u &= u - 1;
                if self.blocked[v] & bit(c) == 0 {
                    open |= bit(v);
                }
            }
            total += self.indep.alpha(open, ctl)?;
            if total >= need {
                return Ok(false);
            }
        }
        Ok(true)
    }

    #[inline]
    fn allowed(&self, v: usize) -> u64 {
        low_mask(self.k) & !self.blocked[v]
    }

    /// Colors `v` with `c`; returns the neighbors whose blocked set changed,
    /// or `None` (after undoing) if some uncolored neighbor ran out of colors.
    fn assign(&mut self, v: usize, c: usize, uncolored: u64) -> Option<u64> {
        self.colors[v] = c as u8;
        let mut changed = 0u64;
        let mut nb = self.adj[v] & uncolored;
        let mut wiped = false;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if self.blocked[w] & bit(c) == 0 {
                self.blocked[w] |= bit(c);
                changed |= bit(w);
                if self.allowed(w) == 0 {
                    wiped = true;
                }
            }
        }
        if wiped {
            self.unassign(v, c, changed);
            None
        } else {
            Some(changed)
        }
    }

    fn unassign(&mut self, v: usize, c: usize, changed: u64) {
        self.colors[v] = NONE;
        let mut ch = changed;
        while ch != 0 {
            let w = ch.trailing_zeros() as usize;
            ch &= ch - 1;
            self.blocked[w] &= !bit(c);
        }
    }

    fn dsatur(
        &mut self,
        uncolored: u64,
        used: usize,
        rank: &[usize],
        ctl: &mut Control,
    ) -> Result<bool> {
        ctl.tick()?;
        if uncolored == 0 {
            return Ok(true);
        }
        if self.capacity_short(uncolored, used, ctl)? {
            return Ok(false);
        }
        let mut pick = usize::MAX;
        let mut key = (u32::MAX, 0u32, usize::MAX);
        let mut u = uncolored;
        while u != 0 {
            let v = u.trailing_zeros() as usize;
            u &= u - 1;
            let cand = (
                self.allowed(v).count_ones(),
                u32::MAX - (self.adj[v] & uncolored).count_ones(),
                rank[v],
            );
            if cand < key {
                key = cand;
                pick = v;
            }
        }
        let rest = uncolored & !bit(pick);
        let mut options = self.allowed(pick) & low_mask((used + 1).min(self.k));
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            if let Some(changed) = self.assign(pick, c, rest) {
                if self.dsatur(rest, used.max(c + 1), rank, ctl)? {
                    return Ok(true);
                }
                self.unassign(pick, c, changed);
            }
        }
        Ok(false)
    }

    /// Depth-first search in vertex-index order, smallest color first: the
    /// first complete assignment found is the lexicographically smallest.
    fn lex_first(&mut self, v: usize, used: usize, ctl: &mut Control) -> Result<bool> {
        ctl.tick()?;
        let n = self.colors.len();
        if v == n {
            return Ok(true);
        }
        if self.capacity_short(low_mask(n) & !low_mask(v), used, ctl)? {
            return Ok(false);
        }
        let rest = low_mask(n) & !low_mask(v + 1);
        let mut options = self.allowed(v) & low_mask((used + 1).min(self.k));
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            if let Some(changed) = self.assign(v, c, rest) {
                if self.lex_first(v + 1, used.max(c + 1), ctl)? {
                    return Ok(true);
                }
                self.unassign(v, c, changed);
            }
        }
        Ok(false)
    }
}

/// Decides whether `g` has a proper coloring with `k` colors.
pub fn is_k_colorable(g: &Graph, k: usize, budget: &OracleBudget) -> Result<bool> {
    check_budget(g, budget)?;
    let n = g.order();
    if n == 0 {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let adj = masks(g);
    let rank = degeneracy_rank(&adj, n);
    let mut ctl = Control::new(budget);
    Coloring::new(&adj, n, k.min(64)).dsatur(low_mask(n), 0, &rank, &mut ctl)
}

pub fn chromatic_number_exact(g: &Graph, budget: &OracleBudget) -> Result<ChromaticResult> {
    check_budget(g, budget)?;
    let n = g.order();
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            witness: Vec::new(),
        });
    }
    let adj = masks(g);
    let mut ctl = Control::new(budget);
    let omega = maximum_clique_inner(&adj, n, &mut ctl)?.len();
    let rank = degeneracy_rank(&adj, n);
    let upper = g.max_degree()? + 1;
    for k in omega..=upper {
        let mut dec = Coloring::new(&adj, n, k);
        if !dec.dsatur(low_mask(n), 0, &rank, &mut ctl)? {
            continue;
        }
        let mut lex = Coloring::new(&adj, n, k);
        let found = lex.lex_first(0, 0, &mut ctl)?;
        assert!(found, "lexicographic search missed a {k}-coloring");
        let witness = lex.colors.iter().map(|&c| c as usize).collect();
        return Ok(ChromaticResult { chi: k, witness });
    }
    unreachable!("greedy coloring always succeeds with max degree + 1 colors")
}
