use std::time::Instant;

use rayon::prelude::*;

use super::instance::Instance;
use super::Budget;
use crate::error::{Error, Result};

pub(crate) struct Solution {
    pub kept: u64,
    pub value: u64,
    pub nodes: u64,
}

/// Every edge subset; the best is the highest value, then the highest
/// preference.
pub(crate) fn exhaustive(inst: &Instance) -> Solution {
    let count = 1u64 << inst.len();
    let (value, _, kept) = (0..count)
        .into_par_iter()
        .filter(|&s| inst.is_feasible(s))
        .map(|s| (inst.value(s), inst.preference(s), s))
        .max()
        .expect("the empty set is feasible");
    Solution {
        kept,
        value,
        nodes: count,
    }
}

/// Keep-first depth-first branch and bound over edges in decision order.
///
/// Leaves are reached in decreasing preference and only strictly better
/// leaves replace the incumbent, so the result equals [`exhaustive`].
pub(crate) fn branch_and_bound(inst: &Instance, budget: &Budget) -> Result<Solution> {
    let words = inst.targets.len().div_ceil(64).max(1);
    let mut through = vec![vec![0u64; words]; inst.len()];
    for (t, &mask) in inst.targets.iter().enumerate() {
        for (i, row) in through.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                row[t / 64] |= 1 << (t % 64);
            }
        }
    }
    let mut search = Search {
        inst,
        through,
        words,
        best: None,
        nodes: 0,
        budget,
        started: Instant::now(),
        aborted_upper: None,
    };
    let _ = search.node(0, 0, 0);
    if let Some(upper) = search.aborted_upper {
        let lower = search.best.map_or(0, |(v, _)| v);
        return Err(Error::BudgetExceeded {
            lower,
            upper: upper.max(lower),
            nodes: search.nodes,
        });
    }
    let (value, kept) = search.best.expect("the empty set is feasible");
    Ok(Solution {
        kept,
        value,
        nodes: search.nodes,
    })
}

struct Search<'a> {
    inst: &'a Instance,
    // per decision position, the targets through that edge
    through: Vec<Vec<u64>>,
    words: usize,
    best: Option<(u64, u64)>,
    nodes: u64,
    budget: &'a Budget,
    started: Instant,
    aborted_upper: Option<u64>,
}

struct Abort;

impl Search<'_> {
    fn over_budget(&self) -> bool {
        if self.budget.nodes.is_some_and(|b| self.nodes > b) {
            return true;
        }
        self.nodes.is_multiple_of(1024)
            && self
                .budget
                .seconds
                .is_some_and(|s| self.started.elapsed().as_secs_f64() > s)
    }

    fn record_open(&mut self, upper: u64) {
        self.aborted_upper = Some(self.aborted_upper.map_or(upper, |u| u.max(upper)));
    }

    /// Forces deletions of edges that would complete a forbidden copy.
    /// `None` when some forbidden copy is already fully kept.
    fn propagate(&self, kept: u64, mut deleted: u64) -> Option<u64> {
        loop {
            let mut changed = false;
            for &f in &self.inst.forbidden {
                if f & deleted != 0 {
                    continue;
                }
                let open = f & !kept;
                if open == 0 {
                    return None;
                }
                if open.count_ones() == 1 {
                    deleted |= open;
                    changed = true;
                }
            }
            if !changed {
                return Some(deleted);
            }
        }
    }

    /// Targets avoiding every deleted edge, minus a lower bound on further
    /// losses: each surviving forbidden copy still needs one of its open
    /// edges deleted, and copies whose affected targets are disjoint lose
    /// disjoint targets.
    fn upper_bound(&self, kept: u64, deleted: u64) -> u64 {
        let mut alive = vec![0u64; self.words];
        let mut total = 0;
        for (t, &mask) in self.inst.targets.iter().enumerate() {
            if mask & deleted == 0 {
                alive[t / 64] |= 1 << (t % 64);
                total += 1;
            }
        }
        let mut claimed = vec![0u64; self.words];
        let mut loss = 0;
        let mut affected = vec![0u64; self.words];
        for &f in &self.inst.forbidden {
            if f & deleted != 0 {
                continue;
            }
            let open = f & !kept;
            affected.iter_mut().for_each(|w| *w = 0);
            let mut cheapest = u64::MAX;
            for i in crate::cube::bit_positions(open) {
                let mut cost = 0;
                for w in 0..self.words {
                    let hit = self.through[i][w] & alive[w];
                    affected[w] |= hit;
                    cost += hit.count_ones() as u64;
                }
                cheapest = cheapest.min(cost);
            }
            if cheapest == 0 || cheapest == u64::MAX {
                continue;
            }
            if (0..self.words).all(|w| affected[w] & claimed[w] == 0) {
                for w in 0..self.words {
                    claimed[w] |= affected[w];
                }
                loss += cheapest;
            }
        }
        total - loss
    }

    fn beats_best(&self, upper: u64) -> bool {
        self.best.is_none_or(|(v, _)| upper > v)
    }

    fn node(&mut self, kept: u64, deleted: u64, from: usize) -> std::result::Result<(), Abort> {
        self.nodes += 1;
        let Some(deleted) = self.propagate(kept, deleted) else {
            return Ok(());
        };
        let upper = self.upper_bound(kept, deleted);
        if !self.beats_best(upper) {
            return Ok(());
        }
        if self.over_budget() {
            self.record_open(upper);
            return Err(Abort);
        }
        let decided = kept | deleted;
        let Some(i) = (from..self.inst.len()).find(|i| decided >> i & 1 == 0) else {
            self.best = Some((upper, kept));
            return Ok(());
        };
        let bit = 1u64 << i;
        if let Err(abort) = self.node(kept | bit, deleted, i + 1) {
            let rest = self.propagate(kept, deleted | bit);
            if let Some(d) = rest {
                let u = self.upper_bound(kept, d);
                self.record_open(u);
            }
            return Err(abort);
        }
        // Q_n is edge-transitive: some optimal non-empty edge set keeps the
        // first edge, so its deletion branch only matters when keeping it
        // is infeasible
        if i == 0 && self.best.is_some() {
            return Ok(());
        }
        self.node(kept, deleted | bit, i + 1)
    }
}
