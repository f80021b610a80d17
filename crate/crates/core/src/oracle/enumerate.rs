//! Enumeration of optimal rankings, and their counts modulo symmetry.
//!
//! In a valid ranking the largest label of a connected set occurs exactly
//! once, so a connected set is ranked by choosing the vertex carrying its
//! largest label, the label itself, and rankings of the remaining components
//! with smaller labels. Each ranking arises from exactly one such sequence of
//! choices, so the recursion produces no duplicates.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::search::RankSearch;
use super::OracleConfig;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ranking::Ranking;

/// Most rankings [`enumerate_optimal_rankings`] will materialize.
pub const MAX_RANKINGS: u128 = 200_000;
/// Most automorphisms [`automorphisms`] will list.
pub const MAX_AUTOMORPHISMS: u128 = 100_000;

struct Counter<'g> {
    g: &'g Graph,
    ranks: RankSearch<'g>,
    memo: HashMap<(u64, u32), u128>,
}

impl Counter<'_> {
    /// Number of valid rankings of `G[s]` with labels in `1..=top`.
    fn count(&mut self, s: VertexSet, top: u32) -> u128 {
        if s.is_empty() {
            return 1;
        }
        if let Some(&c) = self.memo.get(&(s.bits(), top)) {
            return c;
        }
        let c = if self.ranks.rank_below(s, top + 1) > top {
            0
        } else {
            let mut product = 1u128;
            for comp in self.g.connected_components(s) {
                let mut sum = 0u128;
                for v in comp {
                    for label in 1..=top {
                        sum = sum.saturating_add(self.count(comp.without(v), label - 1));
                    }
                }
                product = product.saturating_mul(sum);
            }
            product
        };
        self.memo.insert((s.bits(), top), c);
        c
    }

    /// All rankings counted by [`Counter::count`], as `(vertex, label)` lists.
    fn list(&mut self, s: VertexSet, top: u32) -> Vec<Vec<(usize, u32)>> {
        if s.is_empty() {
            return vec![Vec::new()];
        }
        if self.count(s, top) == 0 {
            return Vec::new();
        }
        let mut acc: Vec<Vec<(usize, u32)>> = vec![Vec::new()];
        for comp in self.g.connected_components(s) {
            let mut options = Vec::new();
            for v in comp {
                for label in 1..=top {
                    for mut rest in self.list(comp.without(v), label - 1) {
                        rest.push((v, label));
                        options.push(rest);
                    }
                }
            }
            acc = acc
                .iter()
                .flat_map(|a| {
                    options.iter().map(move |o| {
                        let mut m = a.clone();
                        m.extend_from_slice(o);
                        m
                    })
                })
                .collect();
        }
        acc
    }
}

fn enumeration_setup<'g>(g: &'g Graph, cfg: &OracleConfig) -> Result<(Counter<'g>, u32)> {
    if g.order() > cfg.enumeration_cap {
        return Err(Error::OrderAboveCap {
            n: g.order(),
            cap: cfg.enumeration_cap,
        });
    }
    let mut counter = Counter {
        g,
        ranks: RankSearch::new(g, cfg.use_memo),
        memo: HashMap::new(),
    };
    let k = counter.ranks.rank(g.vertices());
    Ok((counter, k))
}

/// Number of valid rankings with labels in `1..=χ_r(g)`.
pub fn count_optimal_rankings(g: &Graph, cfg: &OracleConfig) -> Result<u128> {
    let (mut counter, k) = enumeration_setup(g, cfg)?;
    Ok(counter.count(g.vertices(), k))
}

/// Every valid ranking with labels in `1..=χ_r(g)`, sorted by label vector.
pub fn enumerate_optimal_rankings(g: &Graph, cfg: &OracleConfig) -> Result<Vec<Ranking>> {
    let (mut counter, k) = enumeration_setup(g, cfg)?;
    let total = counter.count(g.vertices(), k);
    if total > MAX_RANKINGS {
        return Err(Error::TooManyResults {
            what: "optimal rankings",
            count: total,
            limit: MAX_RANKINGS,
        });
    }
    let mut out: Vec<Ranking> = counter
        .list(g.vertices(), k)
        .into_iter()
        .map(|pairs| {
            let mut labels = vec![0; g.order()];
            for (v, l) in pairs {
                labels[v - 1] = l;
            }
            Ranking::new(labels).expect("every vertex is labeled")
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All automorphisms of `g` as permutations (`perm[v - 1]` is the image of
/// `v`), in lexicographic order.
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    fn extend(g: &Graph, perm: &mut Vec<usize>, used: VertexSet, out: &mut Vec<Vec<usize>>) -> Result<()> {
        let v = perm.len() + 1;
        if v > g.order() {
            if out.len() as u128 >= MAX_AUTOMORPHISMS {
                return Err(Error::TooManyResults {
                    what: "automorphisms",
                    count: out.len() as u128 + 1,
                    limit: MAX_AUTOMORPHISMS,
                });
            }
            out.push(perm.clone());
            return Ok(());
        }
        for image in g.vertices() - used {
            if g.degree(image) != g.degree(v) {
                continue;
            }
            let consistent = (1..v).all(|u| g.has_edge(u, v) == g.has_edge(perm[u - 1], image));
            if consistent {
                perm.push(image);
                extend(g, perm, used.with(image), out)?;
                perm.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), VertexSet::EMPTY, &mut out)?;
    Ok(out)
}

/// Raw count of optimal rankings, and the number of classes under each
/// symmetry that uniqueness statements might intend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankingCensus {
    pub rank: u32,
    pub raw: usize,
    /// Classes when the two largest labels may be exchanged.
    pub label_swap_classes: usize,
    pub automorphism_count: usize,
    /// Classes under the automorphism group of the graph.
    pub automorphism_classes: usize,
    /// Classes under automorphisms and the label exchange together.
    pub combined_classes: usize,
}

pub fn census(g: &Graph, cfg: &OracleConfig) -> Result<RankingCensus> {
    let rankings = enumerate_optimal_rankings(g, cfg)?;
    let rank = rankings.first().map_or(0, Ranking::max_label);
    let auts = automorphisms(g)?;
    let swap = |r: &Ranking| -> Ranking {
        if rank < 2 {
            return r.clone();
        }
        let labels = r
            .labels()
            .iter()
            .map(|&l| match l {
                l if l == rank => rank - 1,
                l if l == rank - 1 => rank,
                l => l,
            })
            .collect();
        Ranking::new(labels).expect("labels stay positive")
    };
    let orbit_min = |r: &Ranking| {
        auts.iter()
            .map(|p| r.permuted(p))
            .min()
            .unwrap_or_else(|| r.clone())
    };

    let swap_classes: BTreeSet<Ranking> = rankings.iter().map(|r| r.clone().min(swap(r))).collect();
    let aut_classes: BTreeSet<Ranking> = rankings.iter().map(orbit_min).collect();
    let combined: BTreeSet<Ranking> = rankings
        .iter()
        .map(|r| orbit_min(r).min(orbit_min(&swap(r))))
        .collect();
    Ok(RankingCensus {
        rank,
        raw: rankings.len(),
        label_swap_classes: swap_classes.len(),
        automorphism_count: auts.len(),
        automorphism_classes: aut_classes.len(),
        combined_classes: combined.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranking::{is_valid_ranking, standard_path_ranking};

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn p3_and_p7_are_unique() {
        let p3 = enumerate_optimal_rankings(&Graph::path(3).unwrap(), &cfg()).unwrap();
        assert_eq!(p3.len(), 1);
        assert_eq!(p3[0].labels(), &[1, 2, 1]);
        let p7 = enumerate_optimal_rankings(&Graph::path(7).unwrap(), &cfg()).unwrap();
        assert_eq!(p7, vec![standard_path_ranking(3).unwrap()]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Every labeling with labels <= rank, filtered by the checker.
        for g in [
            Graph::path(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::from_edges(5, [(1, 2), (1, 3), (1, 4), (4, 5)]).unwrap(),
            Graph::from_edges(4, [(1, 2)]).unwrap(),
        ] {
            let listed = enumerate_optimal_rankings(&g, &cfg()).unwrap();
            let k = super::super::rank_number(&g).unwrap().0;
            let n = g.order();
            let mut brute = Vec::new();
            for code in 0..(k as usize).pow(n as u32) {
                let mut c = code;
                let labels = (0..n)
                    .map(|_| {
                        let l = (c % k as usize) as u32 + 1;
                        c /= k as usize;
                        l
                    })
                    .collect();
                let r = Ranking::new(labels).unwrap();
                if is_valid_ranking(&g, &r).unwrap() {
                    brute.push(r);
                }
            }
            brute.sort();
            assert_eq!(listed, brute);
            assert_eq!(count_optimal_rankings(&g, &cfg()).unwrap(), brute.len() as u128);
        }
    }

    #[test]
    fn cycle_automorphisms() {
        assert_eq!(automorphisms(&Graph::cycle(8).unwrap()).unwrap().len(), 16);
        assert_eq!(automorphisms(&Graph::path(5).unwrap()).unwrap().len(), 2);
        assert_eq!(automorphisms(&Graph::complete(4).unwrap()).unwrap().len(), 24);
    }

    #[test]
    fn c8_census() {
        let c = census(&Graph::cycle(8).unwrap(), &cfg()).unwrap();
        assert_eq!(c.rank, 4);
        assert_eq!(c.raw, 8);
        assert_eq!(c.automorphism_classes, 1);
        assert_eq!(c.label_swap_classes, 4);
    }

    #[test]
    fn enumeration_cap() {
        let p17 = Graph::path(17).unwrap();
        assert!(matches!(
            enumerate_optimal_rankings(&p17, &cfg()),
            Err(Error::OrderAboveCap { n: 17, cap: 16 })
        ));
    }
}
