//! Rankings, the validity predicate, and the closed-form optimal rankings of
//! the four families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Positive labels for vertices `1..=n`, stored at index `v - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RankingJson", into = "RankingJson")]
pub struct Ranking {
    labels: Vec<u32>,
    max_label: u32,
}

/// `{"labels": [l_1, ..., l_n]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RankingJson {
    pub labels: Vec<u32>,
}

impl Ranking {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if let Some(i) = labels.iter().position(|&l| l == 0) {
            return Err(Error::ZeroLabel { vertex: i + 1 });
        }
        let max_label = labels.iter().copied().max().unwrap_or(0);
        Ok(Ranking { labels, max_label })
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v - 1]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn max_label(&self) -> u32 {
        self.max_label
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertices carrying a label `>= j`.
    pub fn at_least(&self, j: u32) -> VertexSet {
        (1..=self.labels.len()).filter(|&v| self.label(v) >= j).collect()
    }

    /// Vertices carrying a label `<= c`.
    pub fn at_most(&self, c: u32) -> VertexSet {
        (1..=self.labels.len()).filter(|&v| self.label(v) <= c).collect()
    }

    /// The ranking seen through a vertex permutation: `perm[v - 1]` is the
    /// new id of `v`.
    pub fn permuted(&self, perm: &[usize]) -> Ranking {
        let mut labels = vec![0; self.labels.len()];
        for (i, &l) in self.labels.iter().enumerate() {
            labels[perm[i] - 1] = l;
        }
        Ranking {
            labels,
            max_label: self.max_label,
        }
    }
}

impl TryFrom<RankingJson> for Ranking {
    type Error = Error;
    fn try_from(j: RankingJson) -> Result<Self> {
        Ranking::new(j.labels)
    }
}

impl From<Ranking> for RankingJson {
    fn from(r: Ranking) -> Self {
        RankingJson { labels: r.labels }
    }
}

/// Whether `r` is a ranking of `g`: for every label `c`, each component of
/// the subgraph induced by labels `<= c` holds at most one vertex labeled `c`.
pub fn is_valid_ranking(g: &Graph, r: &Ranking) -> Result<bool> {
    if r.len() != g.order() {
        return Err(Error::LabelCountMismatch {
            got: r.len(),
            n: g.order(),
        });
    }
    let mut distinct: Vec<u32> = r.labels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for c in distinct {
        let low = r.at_most(c);
        let top: VertexSet = low.iter().filter(|&v| r.label(v) == c).collect();
        let mut remaining = top;
        while let Some(v) = remaining.min() {
            let comp = g.component_of(v, low);
            if (comp & top).len() > 1 {
                return Ok(false);
            }
            remaining = remaining - comp;
        }
    }
    Ok(true)
}

/// One plus the number of trailing zero bits of `m`.
pub fn label_of_position(m: u64) -> Result<u32> {
    if m == 0 {
        return Err(Error::out_of_range("position", 0, ">= 1"));
    }
    Ok(m.trailing_zeros() + 1)
}

/// Standard ranking of `P_{2^k - 1}`: `v_i` gets `trailing_zeros(i) + 1`.
pub fn standard_path_ranking(k: u32) -> Result<Ranking> {
    check_power_order("k", k, 1)?;
    let n = (1u64 << k) - 1;
    Ranking::new((1..=n).map(|i| i.trailing_zeros() + 1).collect())
}

/// `C_{2^k}`: the standard path ranking on `v_1..v_{2^k - 1}`, and `k + 1`
/// on `v_{2^k}`.
pub fn standard_cycle_ranking(k: u32) -> Result<Ranking> {
    check_power_order("k", k, 2)?;
    let mut labels = standard_path_ranking(k)?.labels;
    labels.push(k + 1);
    Ranking::new(labels)
}

/// The largest part (first in normalized order) is labeled 1 throughout;
/// every other vertex gets its own label `2, 3, ...` in vertex order.
pub fn multipartite_ranking(parts: &[usize]) -> Result<Ranking> {
    let parts = crate::family::normalize_parts(parts)?;
    let total: usize = parts.iter().sum();
    let largest = parts[0];
    let labels = (1..=total)
        .map(|v| if v <= largest { 1 } else { (v - largest + 1) as u32 })
        .collect();
    Ranking::new(labels)
}

/// `G_n` numbered `w_1..w_n` then `v_1..v_n`: `w_i -> i`, `v_i -> i` for
/// `i < n`, `v_n -> n + 1`.
pub fn joined_cliques_ranking(n: usize) -> Result<Ranking> {
    crate::family::check_clique_order(n)?;
    let mut labels: Vec<u32> = (1..=n as u32).chain(1..n as u32).collect();
    labels.push(n as u32 + 1);
    Ranking::new(labels)
}

pub(crate) fn check_power_order(what: &'static str, k: u32, min: u32) -> Result<()> {
    // 2^k must fit the bitset order cap.
    if k < min || k > 5 {
        return Err(Error::out_of_range(what, k, format!("{min}..=5")));
    }
    Ok(())
}
