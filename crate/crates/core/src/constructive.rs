//! Explicit good-edge constructions and closed-form counts.
//!
//! For `P_{2^k - 1}` the good edges are built two ways: by the binary
//! position rule ([`path_targets`], [`path_good_edges`]) and by the level
//! decomposition around each component's top vertex ([`level_edges`],
//! [`level_union`]). Cycles, complete multipartite graphs and joined cliques
//! are built on top of those.
//!
//! [`Reading::Literal`] reproduces the rules exactly as originally stated
//! (interval rule only for `l > 0`, no offset rule for even positions, level
//! union over `4..=k`) so the two readings can be compared.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::{self, FamilySpec};
use crate::graph::{Edge, Graph, VertexSet};
use crate::ranking::{self, Ranking};

/// Which version of the construction rules to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reading {
    /// Rules as needed to reach the exact good-edge sets.
    #[default]
    Corrected,
    /// Rules verbatim, kept for discrepancy reports.
    Literal,
}

/// Which rule produced an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// Odd `m`, `n` a power of two above `m`.
    OddPower,
    /// Odd `m`, `n = omega(m, s)`.
    OddOffset,
    /// Even `m`, `n = omega(m, s)`.
    EvenOffset,
    /// `m + 2 <= n < m + 2^j` inside `m`'s own block.
    Interval,
    /// `n` a power of two at or beyond the end of `m`'s block.
    BlockPower,
    /// Cycle apex `v_{2^k}` to a non-neighbor.
    CycleApex,
    /// Level decomposition edge from a component's top vertex.
    Level,
    /// Pair inside a part other than the largest one.
    SmallPart,
    /// Pair inside the largest part.
    LargestPart,
    /// `{w_n, v_i}`, `i < n`.
    JoinedFromW,
    /// `{v_n, w_i}`, `i < n`.
    JoinedFromV,
}

impl Clause {
    pub fn tag(self) -> &'static str {
        match self {
            Clause::OddPower => "odd-power",
            Clause::OddOffset => "odd-offset",
            Clause::EvenOffset => "even-offset",
            Clause::Interval => "interval",
            Clause::BlockPower => "block-power",
            Clause::CycleApex => "cycle-apex",
            Clause::Level => "level",
            Clause::SmallPart => "small-part",
            Clause::LargestPart => "largest-part",
            Clause::JoinedFromW => "joined-from-w",
            Clause::JoinedFromV => "joined-from-v",
        }
    }
}

/// Sorted, duplicate-free edges over a family's vertex set, each tagged with
/// the clause that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSet {
    host: FamilySpec,
    entries: Vec<(Edge, Clause)>,
}

impl EdgeSet {
    /// Sorts by edge; the first clause listed for a repeated edge wins.
    pub fn new(host: FamilySpec, entries: impl IntoIterator<Item = (Edge, Clause)>) -> Self {
        let mut entries: Vec<(Edge, Clause)> = entries.into_iter().collect();
        entries.sort_by_key(|&(e, _)| e);
        entries.dedup_by_key(|&mut (e, _)| e);
        EdgeSet { host, entries }
    }

    pub fn host(&self) -> &FamilySpec {
        &self.host
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.entries.iter().map(|&(e, _)| e).collect()
    }

    pub fn entries(&self) -> &[(Edge, Clause)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.entries.binary_search_by_key(&e, |&(x, _)| x).is_ok()
    }

    /// Edges in `self` but not in `other`.
    pub fn difference(&self, other: &EdgeSet) -> Vec<Edge> {
        self.entries
            .iter()
            .map(|&(e, _)| e)
            .filter(|&e| !other.contains(e))
            .collect()
    }

    pub fn same_edges(&self, other: &EdgeSet) -> bool {
        self.edges() == other.edges()
    }
}

/// `{"family": {...}, "edges": [[u, v], ...], "clauses": ["interval", ...]}`.
impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EdgeSet", 3)?;
        st.serialize_field("family", &self.host)?;
        st.serialize_field("edges", &self.edges())?;
        let clauses: Vec<&str> = self.entries.iter().map(|&(_, c)| c.tag()).collect();
        st.serialize_field("clauses", &clauses)?;
        st.end()
    }
}

/// Binary digits `alpha_t ... alpha_0` of a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryDigits {
    value: u64,
}

impl BinaryDigits {
    pub fn new(value: u64) -> Result<Self> {
        if value == 0 {
            return Err(Error::out_of_range("m", 0, ">= 1"));
        }
        Ok(BinaryDigits { value })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    /// `alpha_i`.
    pub fn digit(self, i: u32) -> u8 {
        if i >= 64 {
            0
        } else {
            (self.value >> i & 1) as u8
        }
    }

    /// `t = floor(log2 m)`, the position of the leading one.
    pub fn top(self) -> u32 {
        63 - self.value.leading_zeros()
    }

    /// Position of the lowest set bit.
    pub fn lowest(self) -> u32 {
        self.value.trailing_zeros()
    }

    /// `alpha_t ... alpha_0`, most significant first.
    pub fn digits(self) -> Vec<u8> {
        (0..=self.top()).rev().map(|i| self.digit(i)).collect()
    }
}

/// `g(0) = 1`, `g(1) = 0`.
pub fn flip_bit(bit: u8) -> Result<u8> {
    match bit {
        0 => Ok(1),
        1 => Ok(0),
        b => Err(Error::out_of_range("bit", b, "0 or 1")),
    }
}

/// `m + 2^j + sum_{i=j+1}^{s} g(alpha_i) 2^i` where `alpha_j` is the lowest
/// set bit of `m`. For odd `m` this is `m + 1 + sum_{i=1}^{s} g(alpha_i) 2^i`.
///
/// Equivalently, the smallest multiple of `2^{s+1}` above `m`: the ancestor
/// of `v_m` with label at least `s + 2` in the standard path ranking.
/// Valid for `max(j, 1) <= s <= t - 1`.
pub fn omega(m: u64, s: u32) -> Result<u64> {
    let digits = BinaryDigits::new(m)?;
    let (j, t) = (digits.lowest(), digits.top());
    let lo = j.max(1);
    if t == 0 || s < lo || s + 1 > t {
        return Err(Error::out_of_range(
            "s",
            s,
            format!("{lo}..={} for m = {m}", t as i64 - 1),
        ));
    }
    let mut n = m + (1 << j);
    for i in j + 1..=s {
        n += u64::from(flip_bit(digits.digit(i))?) << i;
    }
    Ok(n)
}

/// Partners `n > m` of `v_m` in the good-edge set of `P_{2^k - 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Targets {
    /// In range and not a path edge, ascending.
    pub kept: Vec<(usize, Clause)>,
    /// Produced by a rule but beyond `2^k - 1`.
    pub clipped: Vec<(u64, Clause)>,
}

impl Targets {
    pub fn vertices(&self) -> Vec<usize> {
        self.kept.iter().map(|&(n, _)| n).collect()
    }
}

/// All `n` with `m < n <= 2^k - 1`, `{v_m, v_n}` not a path edge, produced
/// by the position rules for `m = 2^j (2l + 1)`, `t = floor(log2 m)`:
///
/// 1. odd `m`: `n = 2^w` for `w > t`, or `n = omega(m, s)` for `1 <= s <= t-1`;
///    under [`Reading::Corrected`] even `m` also gets `n = omega(m, s)` for
///    `j <= s <= t - 1`;
/// 2. `m + 2 <= n < 2^j (2l + 2)`, for every `l >= 0` (`l > 0` when literal);
/// 3. `n = 2^w >= 2^j (2l + 2)`.
pub fn path_targets(m: u64, k: u32, reading: Reading) -> Result<Targets> {
    ranking::check_power_order("k", k, 1)?;
    let last = (1u64 << k) - 1;
    if m == 0 || m > last {
        return Err(Error::out_of_range("m", m, format!("1..={last}")));
    }
    let digits = BinaryDigits::new(m)?;
    let (j, t) = (digits.lowest(), digits.top());
    let l = ((m >> j) - 1) / 2;
    let block_end = m + (1 << j);

    let mut cands: Vec<(u64, Clause)> = Vec::new();
    if j == 0 {
        cands.extend((t + 1..=k).map(|w| (1u64 << w, Clause::OddPower)));
        for s in 1..t {
            cands.push((omega(m, s)?, Clause::OddOffset));
        }
    } else if reading == Reading::Corrected {
        for s in j..t {
            cands.push((omega(m, s)?, Clause::EvenOffset));
        }
    }
    if reading == Reading::Corrected || l > 0 {
        cands.extend((m + 2..block_end).map(|n| (n, Clause::Interval)));
    }
    cands.extend(
        (0..=k)
            .map(|w| 1u64 << w)
            .filter(|&p| p >= block_end)
            .map(|p| (p, Clause::BlockPower)),
    );

    let mut kept = Vec::new();
    let mut clipped = Vec::new();
    for (n, clause) in cands {
        if n <= m + 1 {
            continue;
        }
        if n > last {
            clipped.push((n, clause));
        } else {
            kept.push((n as usize, clause));
        }
    }
    kept.sort_by_key(|&(n, c)| (n, c));
    kept.dedup_by_key(|&mut (n, _)| n);
    clipped.sort();
    clipped.dedup_by_key(|&mut (n, _)| n);
    Ok(Targets { kept, clipped })
}

/// Good edges of `P_{2^k - 1}` from the position rules.
pub fn path_good_edges(k: u32, reading: Reading) -> Result<EdgeSet> {
    let host = FamilySpec::Path2kMinus1 { k };
    let last = (1u64 << k) - 1;
    let mut entries = Vec::new();
    for m in 1..=last {
        for (n, clause) in path_targets(m, k, reading)?.kept {
            entries.push((Edge::new(m as usize, n)?, clause));
        }
    }
    Ok(EdgeSet::new(host, entries))
}

/// `A_j`: vertices whose label is at least `j`.
pub fn labels_at_least(r: &Ranking, j: u32) -> VertexSet {
    r.at_least(j)
}

/// Edges from `v` to every vertex of `component` it is not adjacent to.
pub fn center_edges(g: &Graph, component: VertexSet, v: usize) -> Result<Vec<Edge>> {
    if !component.contains(v) {
        return Err(Error::VertexNotInSet { vertex: v });
    }
    (component.without(v) - g.neighbors(v))
        .iter()
        .map(|w| Edge::new(v, w))
        .collect()
}

/// Level `j` edges of `P_{2^k - 1}`: remove the vertices labeled `>= j`, and
/// in every remaining component join the vertex labeled `j - 1` to its
/// non-neighbors. `4 <= j <= k + 1`; at `j = k + 1` nothing is removed.
pub fn level_edges(k: u32, j: u32) -> Result<EdgeSet> {
    ranking::check_power_order("k", k, 1)?;
    if j < 4 || j > k + 1 {
        return Err(Error::out_of_range("j", j, format!("4..={}", k + 1)));
    }
    let spec = FamilySpec::Path2kMinus1 { k };
    let g = family::build_family(&spec)?;
    let r = ranking::standard_path_ranking(k)?;
    let rest = g.vertices() - labels_at_least(&r, j);
    let mut entries = Vec::new();
    for comp in g.connected_components(rest) {
        let top = comp
            .iter()
            .find(|&v| r.label(v) == j - 1)
            .expect("every level component has a vertex labeled j - 1");
        entries.extend(
            center_edges(&g, comp, top)?
                .into_iter()
                .map(|e| (e, Clause::Level)),
        );
    }
    Ok(EdgeSet::new(spec, entries))
}

/// Union of [`level_edges`] over `j = 4..=k+1` (`4..=k` when literal).
pub fn level_union(k: u32, reading: Reading) -> Result<EdgeSet> {
    ranking::check_power_order("k", k, 1)?;
    let hi = match reading {
        Reading::Corrected => k + 1,
        Reading::Literal => k,
    };
    let mut entries = Vec::new();
    for j in 4..=hi {
        entries.extend(level_edges(k, j)?.entries().iter().copied());
    }
    Ok(EdgeSet::new(FamilySpec::Path2kMinus1 { k }, entries))
}

/// Good edges of `C_{2^k}`: the path good edges on `v_1..v_{2^k - 1}` plus
/// `{v_i, v_{2^k}}` for `2 <= i <= 2^k - 2`.
pub fn cycle_good_edges(k: u32, reading: Reading) -> Result<EdgeSet> {
    ranking::check_power_order("k", k, 2)?;
    let apex = 1usize << k;
    let path = path_good_edges(k, reading)?;
    let mut entries: Vec<(Edge, Clause)> = path.entries().to_vec();
    for i in 2..=apex - 2 {
        entries.push((Edge::new(i, apex)?, Clause::CycleApex));
    }
    Ok(EdgeSet::new(FamilySpec::Cycle2k { k }, entries))
}

fn intra_part_pairs(parts: &[usize], pick_largest: bool) -> Result<EdgeSet> {
    let parts = family::normalize_parts(parts)?;
    let ranges = family::part_ranges(&parts)?;
    let clause = if pick_largest {
        Clause::LargestPart
    } else {
        Clause::SmallPart
    };
    let chosen: Vec<(usize, usize)> = if pick_largest {
        ranges[..1].to_vec()
    } else {
        ranges[1..].to_vec()
    };
    let mut entries = Vec::new();
    for (a, b) in chosen {
        for u in a..=b {
            for v in u + 1..=b {
                entries.push((Edge::new(u, v)?, clause));
            }
        }
    }
    Ok(EdgeSet::new(FamilySpec::Multipartite { parts }, entries))
}

/// Pairs inside every part except the largest.
pub fn multipartite_good_edges(parts: &[usize]) -> Result<EdgeSet> {
    intra_part_pairs(parts, false)
}

/// Pairs inside the largest part.
pub fn multipartite_forbidden_edges(parts: &[usize]) -> Result<EdgeSet> {
    intra_part_pairs(parts, true)
}

/// `{w_n, v_i}` and `{v_n, w_i}` for `i < n`: every non-edge at an endpoint
/// of the joining edge `{w_n, v_n}`.
pub fn joined_good_edges(n: usize) -> Result<EdgeSet> {
    family::check_clique_order(n)?;
    let (w, v) = (|i: usize| i, |i: usize| n + i);
    let mut entries = Vec::with_capacity(2 * (n - 1));
    for i in 1..n {
        entries.push((Edge::new(w(n), v(i))?, Clause::JoinedFromW));
        entries.push((Edge::new(v(n), w(i))?, Clause::JoinedFromV));
    }
    Ok(EdgeSet::new(FamilySpec::JoinedCliques { n }, entries))
}

/// The constructed good-edge set of any family.
pub fn good_edges(spec: &FamilySpec, reading: Reading) -> Result<EdgeSet> {
    match spec.normalized()? {
        FamilySpec::Path2kMinus1 { k } => path_good_edges(k, reading),
        FamilySpec::Cycle2k { k } => cycle_good_edges(k, reading),
        FamilySpec::Multipartite { parts } => multipartite_good_edges(&parts),
        FamilySpec::JoinedCliques { n } => joined_good_edges(n),
    }
}

fn check_exponent(k: u32, min: u32) -> Result<()> {
    if k < min || k > 60 {
        return Err(Error::out_of_range("k", k, format!("{min}..=60")));
    }
    Ok(())
}

/// `(k - 3) 2^k + 4`.
pub fn mu_path(k: u32) -> Result<i64> {
    check_exponent(k, 1)?;
    Ok((k as i64 - 3) * (1i64 << k) + 4)
}

/// `a_3 = 4`, `a_k = 2 a_{k-1} + 2^k - 4`.
pub fn mu_path_recurrence(k: u32) -> Result<i64> {
    check_exponent(k, 3)?;
    let mut a = 4i64;
    for i in 4..=k {
        a = 2 * a + (1i64 << i) - 4;
    }
    Ok(a)
}

/// `(k - 2) 2^k + 1`.
pub fn mu_cycle(k: u32) -> Result<i64> {
    check_exponent(k, 2)?;
    Ok((k as i64 - 2) * (1i64 << k) + 1)
}

/// `sum_{i >= 2} m_i (m_i - 1) / 2` over the parts after the largest.
pub fn mu_multipartite(parts: &[usize]) -> Result<i64> {
    let parts = family::normalize_parts(parts)?;
    Ok(parts[1..].iter().map(|&m| (m * (m - 1) / 2) as i64).sum())
}

/// `2 (n - 1)`.
pub fn mu_joined(n: usize) -> Result<i64> {
    family::check_clique_order(n)?;
    Ok(2 * (n as i64 - 1))
}

pub fn mu(spec: &FamilySpec) -> Result<i64> {
    match spec.normalized()? {
        FamilySpec::Path2kMinus1 { k } => mu_path(k),
        FamilySpec::Cycle2k { k } => mu_cycle(k),
        FamilySpec::Multipartite { parts } => mu_multipartite(&parts),
        FamilySpec::JoinedCliques { n } => mu_joined(n),
    }
}

/// Both readings of the path rules side by side.
#[derive(Debug, Clone, Serialize)]
pub struct ReadingComparison {
    pub k: u32,
    pub corrected_rules: usize,
    pub literal_rules: usize,
    /// In the corrected rule set but not the literal one.
    pub missing_from_literal_rules: Vec<Edge>,
    pub corrected_levels: usize,
    pub literal_levels: usize,
    pub missing_from_literal_levels: Vec<Edge>,
    pub formula: i64,
}

impl ReadingComparison {
    pub fn agrees(&self) -> bool {
        self.missing_from_literal_rules.is_empty() && self.missing_from_literal_levels.is_empty()
    }
}

pub fn compare_readings(k: u32) -> Result<ReadingComparison> {
    let cr = path_good_edges(k, Reading::Corrected)?;
    let lr = path_good_edges(k, Reading::Literal)?;
    let cl = level_union(k, Reading::Corrected)?;
    let ll = level_union(k, Reading::Literal)?;
    Ok(ReadingComparison {
        k,
        corrected_rules: cr.len(),
        literal_rules: lr.len(),
        missing_from_literal_rules: cr.difference(&lr),
        corrected_levels: cl.len(),
        literal_levels: ll.len(),
        missing_from_literal_levels: cl.difference(&ll),
        formula: mu_path(k)?,
    })
}
