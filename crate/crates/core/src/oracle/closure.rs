//! Largest edge set that can be added to a graph all at once without raising
//! its rank number.
//!
//! A supergraph `H` of `G` has rank number `k` exactly when `H` is contained
//! in the closure (ancestor/descendant pairs) of some rooted forest of height
//! `k` on `V(G)`. So the answer is the largest closure, over forests of height
//! `χ_r(G)` whose closure covers `E(G)`, minus `|E(G)|`. Each tree of such a
//! forest spans a union of components of `G`; the search picks a root, recurses
//! on the rest one level lower, and memoizes on `(vertex set, height)`.

use std::collections::HashMap;

use serde::Serialize;

use super::search::{RankSearch, SearchStats};
use super::OracleConfig;
use crate::error::Result;
use crate::graph::{Edge, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxGoodSet {
    pub rank: u32,
    /// One optimal set of added edges, sorted.
    pub edges: Vec<Edge>,
    pub stats: SearchStats,
}

impl MaxGoodSet {
    pub fn mu(&self) -> usize {
        self.edges.len()
    }
}

struct ClosureSearch<'g> {
    g: &'g Graph,
    ranks: RankSearch<'g>,
    forest: HashMap<(u64, u32), Option<(usize, VertexSet)>>,
    tree: HashMap<(u64, u32), Option<(usize, usize)>>,
}

impl<'g> ClosureSearch<'g> {
    fn fits(&mut self, s: VertexSet, h: u32) -> bool {
        self.ranks.rank_below(s, h + 1) <= h
    }

    /// Largest closure of a height-`h` forest on `s` covering `G[s]`, with the
    /// first tree's vertex set.
    fn forest(&mut self, s: VertexSet, h: u32) -> Option<usize> {
        if s.is_empty() {
            return Some(0);
        }
        if let Some(&hit) = self.forest.get(&(s.bits(), h)) {
            return hit.map(|(v, _)| v);
        }
        let result = if self.fits(s, h) {
            let mut comps = Vec::new();
            let mut rest = s;
            while let Some(v) = rest.min() {
                let c = self.g.component_of(v, rest);
                rest = rest - c;
                comps.push(c);
            }
            let first = comps[0];
            let others = &comps[1..];
            let mut best: Option<(usize, VertexSet)> = None;
            for mask in 0u64..(1u64 << others.len()) {
                let mut t = first;
                for (i, &c) in others.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        t = t | c;
                    }
                }
                let Some(a) = self.tree(t, h) else { continue };
                let Some(b) = self.forest(s - t, h) else { continue };
                if best.is_none_or(|(v, _)| a + b > v) {
                    best = Some((a + b, t));
                }
            }
            best
        } else {
            None
        };
        self.forest.insert((s.bits(), h), result);
        result.map(|(v, _)| v)
    }

    /// Largest closure of a single tree of height `<= h` on `t` covering `G[t]`.
    fn tree(&mut self, t: VertexSet, h: u32) -> Option<usize> {
        if h == 0 {
            return None;
        }
        if let Some(&hit) = self.tree.get(&(t.bits(), h)) {
            return hit.map(|(v, _)| v);
        }
        let mut best: Option<(usize, usize)> = None;
        for root in t.iter() {
            let rest = t.without(root);
            if let Some(sub) = self.forest(rest, h - 1) {
                let value = rest.len() + sub;
                if best.is_none_or(|(v, _)| value > v) {
                    best = Some((value, root));
                }
            }
        }
        self.tree.insert((t.bits(), h), best);
        best.map(|(v, _)| v)
    }

    fn collect_forest(&self, s: VertexSet, h: u32, out: &mut Vec<(usize, usize)>) {
        if s.is_empty() {
            return;
        }
        let (_, t) = self.forest[&(s.bits(), h)].expect("feasible forest");
        self.collect_tree(t, h, out);
        self.collect_forest(s - t, h, out);
    }

    fn collect_tree(&self, t: VertexSet, h: u32, out: &mut Vec<(usize, usize)>) {
        let (_, root) = self.tree[&(t.bits(), h)].expect("feasible tree");
        let rest = t.without(root);
        out.extend(rest.iter().map(|v| (root, v)));
        self.collect_forest(rest, h - 1, out);
    }
}

/// Exact maximum simultaneous good-edge set.
pub fn max_good_set(g: &Graph, cfg: &OracleConfig) -> Result<MaxGoodSet> {
    cfg.check(g)?;
    let mut search = ClosureSearch {
        g,
        ranks: RankSearch::new(g, cfg.use_memo),
        forest: HashMap::new(),
        tree: HashMap::new(),
    };
    let all = g.vertices();
    let rank = search.ranks.rank(all);
    search
        .forest(all, rank)
        .expect("a graph fits a forest of its own rank number");
    let mut pairs = Vec::new();
    search.collect_forest(all, rank, &mut pairs);
    let mut edges: Vec<Edge> = pairs
        .into_iter()
        .map(|(a, b)| Edge::new(a, b).expect("distinct closure pair"))
        .filter(|&e| !g.contains_edge(e))
        .collect();
    edges.sort_unstable();
    let mut stats = search.ranks.stats();
    stats.memo_entries += search.forest.len() + search.tree.len();
    Ok(MaxGoodSet { rank, edges, stats })
}

/// Whether `χ_r(g ∪ added) = χ_r(g)` and every further non-edge is forbidden
/// for `g ∪ added`.
pub fn is_saturated(g: &Graph, added: &[Edge], cfg: &OracleConfig) -> Result<bool> {
    let (base, _) = super::rank_number_with(g, cfg)?;
    let (h, _) = g.add_edges(added)?;
    if !super::exists_ranking_with(&h, base, cfg)? {
        return Ok(false);
    }
    let verdicts = super::classify_candidates(&h, base, &h.non_edges(), cfg)?;
    Ok(verdicts.iter().all(|v| v.verdict == super::Verdict::Forbidden))
}
