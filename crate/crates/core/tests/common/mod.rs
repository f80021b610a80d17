//! A deliberately plain second implementation of the core definitions, used
//! to cross-check the library's oracle. Adjacency is a boolean matrix and
//! every routine follows the textbook definition directly.

#![allow(dead_code)]

use std::collections::HashMap;

use edge_ranking::graph::{Edge, Graph};

pub struct Plain {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Plain {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n + 1]; n + 1];
        for e in g.edges() {
            adj[e.u()][e.v()] = true;
            adj[e.v()][e.u()] = true;
        }
        Plain { n, adj }
    }

    pub fn with(&self, extra: &[(usize, usize)]) -> Self {
        let mut adj = self.adj.clone();
        for &(a, b) in extra {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Plain { n: self.n, adj }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    /// Every simple path between two equally labeled vertices contains a
    /// strictly larger label, checked by enumerating the paths.
    pub fn valid_by_paths(&self, labels: &[u32]) -> bool {
        let lab = |v: usize| labels[v - 1];
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if lab(u) != lab(v) {
                    continue;
                }
                let mut on_path = vec![false; self.n + 1];
                on_path[u] = true;
                if self.bad_path(u, v, lab(u), labels, &mut on_path) {
                    return false;
                }
            }
        }
        true
    }

    /// Is there a simple path from `at` to `target` whose interior labels
    /// are all `<= c`?
    fn bad_path(&self, at: usize, target: usize, c: u32, labels: &[u32], on_path: &mut [bool]) -> bool {
        for w in 1..=self.n {
            if !self.adj[at][w] || on_path[w] {
                continue;
            }
            if w == target {
                return true;
            }
            if labels[w - 1] <= c {
                on_path[w] = true;
                let found = self.bad_path(w, target, c, labels, on_path);
                on_path[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }

    fn components(&self, set: u64) -> Vec<u64> {
        let mut rest = set;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in 1..=self.n {
                    if set >> y & 1 == 1 && comp >> y & 1 == 0 && self.adj[x][y] {
                        comp |= 1 << y;
                        stack.push(y);
                    }
                }
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    /// Tree-depth by the unpruned recursion: a connected set needs one more
    /// label than its best single-vertex deletion.
    pub fn rank(&self) -> u32 {
        let all = ((1u128 << (self.n + 1)) - 2) as u64;
        let mut memo = HashMap::new();
        self.rank_of(all, &mut memo)
    }

    fn rank_of(&self, set: u64, memo: &mut HashMap<u64, u32>) -> u32 {
        if set == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&set) {
            return r;
        }
        let comps = self.components(set);
        let r = if comps.len() > 1 {
            comps.into_iter().map(|c| self.rank_of(c, memo)).max().unwrap()
        } else {
            (1..=self.n)
                .filter(|&v| set >> v & 1 == 1)
                .map(|v| 1 + self.rank_of(set & !(1 << v), memo))
                .min()
                .unwrap()
        };
        memo.insert(set, r);
        r
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if !self.adj[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Largest set of non-edges addable together without raising the rank,
    /// by include/exclude search (adding edges never lowers the rank, so a
    /// branch stops as soon as the rank rises).
    pub fn max_addable(&self) -> usize {
        let k = self.rank();
        let candidates = self.non_edges();
        let mut best = 0;
        self.grow(&candidates, 0, &mut Vec::new(), k, &mut best);
        best
    }

    fn grow(
        &self,
        cands: &[(usize, usize)],
        i: usize,
        chosen: &mut Vec<(usize, usize)>,
        k: u32,
        best: &mut usize,
    ) {
        if chosen.len() + (cands.len() - i) <= *best {
            return;
        }
        if i == cands.len() {
            *best = chosen.len();
            return;
        }
        chosen.push(cands[i]);
        if self.with(chosen).rank() <= k {
            self.grow(cands, i + 1, chosen, k, best);
        }
        chosen.pop();
        self.grow(cands, i + 1, chosen, k, best);
    }

    /// All labelings with labels `<= k` accepted by [`Plain::valid_by_paths`].
    pub fn all_rankings(&self, k: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut labels = vec![1; self.n];
        loop {
            if self.valid_by_paths(&labels) {
                out.push(labels.clone());
            }
            let mut i = 0;
            while i < self.n && labels[i] == k {
                labels[i] = 1;
                i += 1;
            }
            if i == self.n {
                break;
            }
            labels[i] += 1;
        }
        out
    }
}

pub fn edges(pairs: &[(usize, usize)]) -> Vec<Edge> {
    pairs.iter().map(|&(a, b)| Edge::new(a, b).unwrap()).collect()
}

/// Graph on `n` vertices from a bit mask over the pairs `(a, b)`, `a < b`,
/// in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut pairs = Vec::new();
    let mut bit = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            if mask >> bit & 1 == 1 {
                pairs.push((a, b));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, pairs).unwrap()
}
