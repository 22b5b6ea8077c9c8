//! Simple undirected graphs stored as one adjacency bit row per vertex.
//!
//! Vertices are the dense integers `0..order`. Every row is a `u64`, so the
//! hard limit is 64 vertices; the default limit is 62, the largest order that
//! fits a single-byte graph6 header.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by [`Graph::empty`].
pub const DEFAULT_ORDER_CAP: usize = 62;

/// Largest order representable at all.
pub const MAX_ORDER: usize = 64;

/// A subset of the vertices of some host graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., count - 1}`.
    pub fn prefix(count: usize) -> Self {
        debug_assert!(count <= MAX_ORDER);
        if count >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << count) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on `0..order`.
///
/// Rows are kept symmetric and irreflexive by every mutating method, so the
/// representation can never hold a loop or a one-sided edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices, limited to [`DEFAULT_ORDER_CAP`].
    pub fn empty(order: usize) -> Result<Self> {
        Self::empty_with_cap(order, DEFAULT_ORDER_CAP)
    }

    /// Edgeless graph with a caller-chosen order limit (itself at most 64).
    pub fn empty_with_cap(order: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(MAX_ORDER);
        if order > cap {
            return Err(Error::Capacity { order, cap });
        }
        Ok(Graph {
            rows: vec![0; order],
        })
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Self::empty(order)?;
        let all = VertexSet::prefix(order).bits();
        for (v, row) in g.rows.iter_mut().enumerate() {
            *row = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Path `0 - 1 - .. - (order - 1)`.
    pub fn path(order: usize) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for v in 1..order {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// Cycle `0 - 1 - .. - (order - 1) - 0`; needs at least three vertices.
    pub fn cycle(order: usize) -> Result<Self> {
        if order < 3 {
            return Err(Error::Domain(format!(
                "a cycle needs at least 3 vertices, got {order}"
            )));
        }
        let mut g = Self::path(order)?;
        g.add_edge(order - 1, 0)?;
        Ok(g)
    }

    /// Builds a graph from an edge list.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows, checking every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(Error::Capacity {
                order,
                cap: MAX_ORDER,
            });
        }
        let valid = VertexSet::prefix(order).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row >> v & 1 == 1 {
                return Err(Error::Loop(v));
            }
            if row & !valid != 0 {
                let vertex = (row & !valid).trailing_zeros() as usize;
                return Err(Error::Index { vertex, order });
            }
            for u in VertexSet(row).iter() {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Precondition(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.order())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::Index {
                vertex: v,
                order: self.order(),
            })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(vertex) => Err(Error::Index {
                vertex,
                order: self.order(),
            }),
            None => Ok(()),
        }
    }

    /// Inserts the edge `uv`. Returns `true` when the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let fresh = self.rows[u] >> v & 1 == 0;
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
        Ok(fresh)
    }

    /// Removes the edge `uv`. Returns `true` when the edge was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let present = self.rows[u] >> v & 1 == 1;
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
        Ok(present)
    }

    /// Adds every edge between `a` and `b` (the sets must be disjoint).
    pub fn join_sets(&mut self, a: VertexSet, b: VertexSet) -> Result<()> {
        self.check_set(a)?;
        self.check_set(b)?;
        if !a.intersection(b).is_empty() {
            return Err(Error::Precondition("join operands overlap".into()));
        }
        for u in a.iter() {
            self.rows[u] |= b.bits();
        }
        for v in b.iter() {
            self.rows[v] |= a.bits();
        }
        Ok(())
    }

    /// Makes `s` a clique.
    pub fn complete_set(&mut self, s: VertexSet) -> Result<()> {
        self.check_set(s)?;
        for u in s.iter() {
            self.rows[u] |= s.bits() & !(1u64 << u);
        }
        Ok(())
    }

    /// Adjacency test; out-of-range vertices are simply not adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in VertexSet(self.rows[u] & !((2u64 << u) - 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let all = self.vertices().bits();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & all & !(1u64 << v))
            .collect();
        Graph { rows }
    }

    /// Subgraph induced by `s`, relabelled by ascending original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let members = s.to_vec();
        let rows = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.rows[u] >> v & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1u64 << i)
            })
            .collect();
        Ok(Graph { rows })
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = VertexSet::EMPTY;
        if perm.len() != n {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has order {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::Precondition("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut rows = vec![0u64; n];
        for (u, &pu) in perm.iter().enumerate() {
            for v in self.neighbors(u).iter() {
                rows[pu] |= 1u64 << perm[v];
            }
        }
        Ok(Graph { rows })
    }

    /// Vertices reachable from `source` while avoiding `blocked`.
    pub fn component_of(&self, source: usize, blocked: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(source).bits();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.rows[v];
            }
            next &= !seen & !blocked.bits();
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Whether the graph with `removed` deleted is connected. An empty
    /// remainder counts as disconnected.
    pub fn is_connected_without(&self, removed: VertexSet) -> bool {
        let rest = self.vertices().difference(removed);
        match rest.first() {
            None => false,
            Some(start) => self.component_of(start, removed) == rest,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(VertexSet::EMPTY)
    }
}

/// True iff every pair of members of `s` is adjacent; sets of size at most
/// one are cliques.
pub fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|u| {
        let others = s.difference(VertexSet::singleton(u));
        others.is_subset(g.neighbors(u).intersection(g.vertices()))
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order(), self.edges())
    }
}
