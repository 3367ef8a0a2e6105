//! Shared branch-and-bound engine for maximum-subset searches over
//! hereditary properties (independence, bounded induced degree, bounded
//! chromatic number, clique-free and other hereditary families).
//!
//! The search explores vertex sets as strictly increasing sequences,
//! always trying inclusion before exclusion, and records a new witness
//! only on strict size improvement. Together with an admissible bound
//! (never underestimating how many candidates can still join), this
//! guarantees the final witness is the lexicographically least optimum:
//! the first optimal set the traversal reaches is the lexicographically
//! least one, pruning only discards subtrees that cannot reach the
//! optimum, and later optima never replace the recorded one.
//!
//! Hooks:
//! - `can_include(chosen, v)`: may `v` join `chosen`? (Callers whose
//!   `restrict` already filters infeasible candidates can return true.)
//! - `restrict(chosen, v, rest)`: candidate set after including `v`,
//!   starting from the not-yet-tried candidates `rest` (all above `v`).
//! - `bound(cand)`: admissible upper bound on how many members of `cand`
//!   can join any feasible set simultaneously.

use crate::bits::VertexSet;
use crate::graph::Graph;

pub(crate) struct Hooks<'h> {
    pub can_include: &'h mut dyn FnMut(&VertexSet, usize) -> bool,
    pub restrict: &'h mut dyn FnMut(&VertexSet, usize, VertexSet) -> VertexSet,
    pub bound: &'h mut dyn FnMut(VertexSet) -> usize,
}

pub(crate) struct MaxSubset<'h> {
    hooks: Hooks<'h>,
    best: usize,
    best_set: VertexSet,
}

impl<'h> MaxSubset<'h> {
    /// Run the search over subsets of `cand`.
    ///
    /// `seed_value` primes the incumbent size without a witness; it must
    /// be strictly below the optimum (callers use greedy-minus-one) so
    /// the recorded witness always comes from the traversal itself.
    pub(crate) fn run(
        hooks: Hooks<'h>,
        cand: VertexSet,
        seed_value: usize,
    ) -> (usize, VertexSet) {
        let mut engine = MaxSubset {
            hooks,
            best: seed_value,
            best_set: VertexSet::EMPTY,
        };
        engine.dfs(VertexSet::EMPTY, cand);
        if engine.best_set.len() != engine.best {
            // Nothing beat the seed: the optimum is the empty set level.
            debug_assert_eq!(engine.best_set, VertexSet::EMPTY);
            engine.best = 0;
        }
        (engine.best, engine.best_set)
    }

    fn dfs(&mut self, chosen: VertexSet, mut cand: VertexSet) {
        if chosen.len() + (self.hooks.bound)(cand) <= self.best {
            return;
        }
        while let Some(v) = cand.pop_min() {
            if (self.hooks.can_include)(&chosen, v) {
                let with_v = chosen.with(v);
                if with_v.len() > self.best {
                    self.best = with_v.len();
                    self.best_set = with_v;
                }
                let next = (self.hooks.restrict)(&chosen, v, cand);
                self.dfs(with_v, next);
            }
            if chosen.len() + (self.hooks.bound)(cand) <= self.best {
                return;
            }
        }
    }
}

/// Greedily partition `within` into cliques of `g` (ascending seed
/// vertex, greedy extension) and return the clique sizes. Used to build
/// admissible bounds: a set meeting each clique in at most `c` vertices
/// has size at most Σ min(size, c).
pub(crate) fn greedy_clique_partition(g: &Graph, within: VertexSet) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut rest = within;
    while let Some(v) = rest.pop_min() {
        let mut clique_size = 1;
        let mut ext = rest & g.neighbors(v);
        while let Some(u) = ext.pop_min() {
            clique_size += 1;
            rest.remove(u);
            ext &= g.neighbors(u);
        }
        sizes.push(clique_size);
    }
    sizes
}

/// Σ min(size, cap) over a greedy clique partition: admissible bound for
/// families whose members meet every clique in at most `cap` vertices.
pub(crate) fn clique_capped_bound(g: &Graph, within: VertexSet, cap: usize) -> usize {
    greedy_clique_partition(g, within)
        .into_iter()
        .map(|s| s.min(cap))
        .sum()
}
