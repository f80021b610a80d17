//! Simple undirected graphs on vertices `1..=n` with `u64` bitset adjacency.
//!
//! Vertex `v` is stored at bit `v` of a [`VertexSet`], so bit 0 is always
//! clear and the order is capped at [`MAX_ORDER`].

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported graph order.
pub const MAX_ORDER: usize = 63;

/// A subset of `1..=MAX_ORDER`, one bit per vertex id.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits & !1)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        if n == 0 {
            return Self::EMPTY;
        }
        VertexSet(((1u128 << (n + 1)) - 2) as u64)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&v));
        VertexSet(1u64 << v)
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if lo > hi {
            return Self::EMPTY;
        }
        Self::full(hi) - Self::full(lo - 1)
    }

    pub fn contains(self, v: usize) -> bool {
        v <= MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex id, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0 & !1)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An unordered pair `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order. Fails on a self-loop.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;
    fn try_from([a, b]: [usize; 2]) -> Result<Self> {
        Edge::new(a, b)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{v{}, v{}}}", self.u, self.v)
    }
}

/// Simple undirected graph on `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n + 1],
            edge_count: 0,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            let e = Edge::new(a, b)?;
            g.check_edge(e)?;
            g.insert(e);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::out_of_range("cycle order", n, ">= 3"));
        }
        Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a <= self.n && self.adj[a].contains(b)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// Raw adjacency rows indexed by vertex id (row 0 is empty).
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// All edges, lexicographically sorted.
    pub fn edges(&self) -> Vec<Edge> {
        (1..=self.n)
            .flat_map(|u| {
                (self.adj[u] - VertexSet::full(u))
                    .iter()
                    .map(move |v| Edge { u, v })
            })
            .collect()
    }

    /// All pairs `{u, v}` that are not edges, lexicographically sorted.
    pub fn non_edges(&self) -> Vec<Edge> {
        let all = self.vertices();
        (1..=self.n)
            .flat_map(|u| {
                (all - VertexSet::full(u) - self.adj[u])
                    .iter()
                    .map(move |v| Edge { u, v })
            })
            .collect()
    }

    /// Returns the graph with `es` added, plus the edges of `es` that were
    /// already present (in input order).
    pub fn add_edges(&self, es: &[Edge]) -> Result<(Graph, Vec<Edge>)> {
        let mut g = self.clone();
        let mut duplicates = Vec::new();
        for &e in es {
            g.check_edge(e)?;
            if g.contains_edge(e) {
                duplicates.push(e);
            } else {
                g.insert(e);
            }
        }
        Ok((g, duplicates))
    }

    /// Same vertex ids, keeping only the edges with both ends in `s`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let s = s & self.vertices();
        let mut adj = vec![VertexSet::EMPTY; self.n + 1];
        let mut twice = 0;
        for v in s {
            adj[v] = self.adj[v] & s;
            twice += adj[v].len();
        }
        Graph {
            n: self.n,
            adj,
            edge_count: twice / 2,
        }
    }

    /// The component of `G[s]` containing `v` (which must be in `s`).
    pub fn component_of(&self, v: usize, s: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next = next | self.adj[w];
            }
            frontier = next & (s - seen);
            seen = seen | frontier;
        }
        seen
    }

    /// Maximal connected pieces of `G[s]`, ordered by smallest vertex.
    pub fn connected_components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_of(v, rest);
            out.push(c);
            rest = rest - c;
        }
        out
    }

    pub fn is_connected_on(&self, s: VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.component_of(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(self.vertices())
    }

    /// Image of the graph under `perm`, where `perm[v - 1]` is the new id of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::out_of_range(
                "permutation length",
                perm.len(),
                format!("= {}", self.n),
            ));
        }
        Graph::from_edges(
            self.n,
            self.edges().into_iter().map(|e| (perm[e.u - 1], perm[e.v - 1])),
        )
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)
    }

    fn insert(&mut self, e: Edge) {
        if !self.adj[e.u].contains(e.v) {
            self.adj[e.u] = self.adj[e.u].with(e.v);
            self.adj[e.v] = self.adj[e.v].with(e.u);
            self.edge_count += 1;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// `{"n": <int>, "edges": [[u, v], ...]}` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, j.edges.into_iter().map(Edge::endpoints))
    }
}
