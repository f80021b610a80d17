//! Exact rank number by recursive vertex elimination.
//!
//! The rank of a connected vertex set is `1 + min_v rank(S - v)`, and the rank
//! of a disconnected set is the maximum over its components. Results are
//! memoized per connected subset; each query carries an upper cutoff so that
//! branches that cannot beat the best elimination found so far stop early.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub memo_entries: usize,
    pub nodes_expanded: u64,
    #[serde(serialize_with = "ser_duration")]
    pub wall_time: Duration,
}

fn ser_duration<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SearchStats {
    pub fn merge(&mut self, other: &SearchStats) {
        self.memo_entries += other.memo_entries;
        self.nodes_expanded += other.nodes_expanded;
        self.wall_time += other.wall_time;
    }
}

#[derive(Clone, Copy)]
struct Bound {
    value: u32,
    exact: bool,
}

/// Elimination search over one fixed graph.
pub struct RankSearch<'g> {
    g: &'g Graph,
    memo: HashMap<u64, Bound>,
    use_memo: bool,
    nodes: u64,
    started: Instant,
}

impl<'g> RankSearch<'g> {
    pub fn new(g: &'g Graph, use_memo: bool) -> Self {
        RankSearch {
            g,
            memo: HashMap::new(),
            use_memo,
            nodes: 0,
            started: Instant::now(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            memo_entries: self.memo.len(),
            nodes_expanded: self.nodes,
            wall_time: self.started.elapsed(),
        }
    }

    /// Exact rank number of `G[s]`.
    pub fn rank(&mut self, s: VertexSet) -> u32 {
        self.rank_below(s, s.len() as u32 + 1)
    }

    /// Exact rank of `G[s]` if it is below `cutoff`; otherwise some value
    /// `>= cutoff`.
    pub fn rank_below(&mut self, s: VertexSet, cutoff: u32) -> u32 {
        let mut worst = 0;
        let mut rest = s;
        while let Some(v) = rest.min() {
            let comp = self.g.component_of(v, rest);
            rest = rest - comp;
            let r = self.connected(comp, cutoff);
            if r >= cutoff {
                return r;
            }
            worst = worst.max(r);
        }
        worst
    }

    fn connected(&mut self, s: VertexSet, cutoff: u32) -> u32 {
        let size = s.len() as u32;
        if size <= 2 {
            return size;
        }
        let mut lower = diameter_bound(self.g, s);
        if self.use_memo {
            if let Some(b) = self.memo.get(&s.bits()) {
                if b.exact || b.value >= cutoff {
                    return b.value;
                }
                lower = lower.max(b.value);
            }
        }
        if s.iter()
            .all(|v| (self.g.neighbors(v) & s).len() as u32 == size - 1)
        {
            self.remember(s, size, true);
            return size;
        }
        if lower >= cutoff {
            self.remember(s, lower, false);
            return lower;
        }
        self.nodes += 1;

        // Removing one vertex at a time always works, so the answer is at most
        // `size`; search strictly below `limit`.
        let limit = cutoff.min(size + 1);
        let mut best = limit;
        let mut order: Vec<usize> = s.iter().collect();
        order.sort_by_key(|&v| std::cmp::Reverse((self.g.neighbors(v) & s).len()));
        for v in order {
            let sub = 1 + self.rank_below(s.without(v), best - 1);
            if sub < best {
                best = sub;
                if best <= lower {
                    break;
                }
            }
        }
        if best < limit {
            self.remember(s, best, true);
            best
        } else {
            self.remember(s, limit.max(lower), false);
            limit.max(lower)
        }
    }

    fn remember(&mut self, s: VertexSet, value: u32, exact: bool) {
        if !self.use_memo {
            return;
        }
        let e = self.memo.entry(s.bits()).or_insert(Bound { value, exact });
        if exact || (!e.exact && value > e.value) {
            *e = Bound { value, exact };
        }
    }
}

/// `ceil(log2(d + 2))` for `d` an eccentricity found by a double BFS sweep;
/// a shortest path with `d` edges is a subgraph, and `P_{d+1}` needs that many
/// labels.
pub(crate) fn diameter_bound(g: &Graph, s: VertexSet) -> u32 {
    let Some(start) = s.min() else { return 0 };
    let (far, _) = farthest(g, s, start);
    let (_, d) = farthest(g, s, far);
    let n = d as u64 + 2;
    64 - (n - 1).leading_zeros()
}

fn farthest(g: &Graph, s: VertexSet, from: usize) -> (usize, u32) {
    let mut seen = VertexSet::singleton(from);
    let mut frontier = seen;
    let mut last = from;
    let mut depth = 0;
    loop {
        let mut next = VertexSet::EMPTY;
        for w in frontier {
            next = next | g.neighbors(w);
        }
        next = next & (s - seen);
        if next.is_empty() {
            return (last, depth);
        }
        depth += 1;
        last = next.min().unwrap_or(last);
        seen = seen | next;
        frontier = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diameter_bound_values() {
        let p7 = Graph::path(7).unwrap();
        assert_eq!(diameter_bound(&p7, p7.vertices()), 3);
        let p8 = Graph::path(8).unwrap();
        assert_eq!(diameter_bound(&p8, p8.vertices()), 4);
        let star = Graph::from_edges(6, (2..=6).map(|v| (1, v))).unwrap();
        assert_eq!(diameter_bound(&star, star.vertices()), 2);
    }

    #[test]
    fn small_ranks() {
        let p7 = Graph::path(7).unwrap();
        assert_eq!(RankSearch::new(&p7, true).rank(p7.vertices()), 3);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(RankSearch::new(&k4, true).rank(k4.vertices()), 4);
        let star = Graph::from_edges(6, (2..=6).map(|v| (1, v))).unwrap();
        assert_eq!(RankSearch::new(&star, true).rank(star.vertices()), 2);
    }

    #[test]
    fn cutoff_returns_a_lower_bound() {
        let p15 = Graph::path(15).unwrap();
        let mut s = RankSearch::new(&p15, true);
        assert!(s.rank_below(p15.vertices(), 3) >= 3);
        assert_eq!(s.rank_below(p15.vertices(), 5), 4);
    }
}
