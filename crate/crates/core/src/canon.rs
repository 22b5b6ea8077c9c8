//! Canonical forms by exhaustive permutation minimisation.
//!
//! The canonical form is the graph6 encoding of the relabelling whose
//! column-order upper-triangle bit string is lexicographically smallest.
//! Equal graph6 length plus a monotone byte mapping means comparing the
//! encodings compares the bit strings.
//!
//! The search places vertices position by position. Two exact prunings keep
//! it tractable for dense graphs:
//! - a branch whose bit prefix already exceeds the best complete string is
//!   abandoned;
//! - among unplaced twins (`N(u) - v == N(v) - u`) only the smallest index is
//!   tried, since swapping twins is an automorphism.

use std::fmt;

use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;

/// Largest order accepted by the canonical form routines.
pub const CANON_ORDER_GUARD: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical relabelling in graph6.
    pub fn as_graph6(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    twins: Vec<u64>,
    placed: Vec<usize>,
    best_key: u64,
    best_perm: Vec<usize>,
    found: bool,
}

impl Search<'_> {
    fn column(&self, j: usize, v: usize) -> u64 {
        // bits x(0,j) .. x(j-1,j) for v placed at position j
        self.placed[..j]
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | self.g.has_edge(u, v) as u64)
    }

    fn run(&mut self, prefix: u64, used: u64) {
        let j = self.placed.len();
        if j == self.n {
            if !self.found || prefix < self.best_key {
                self.best_key = prefix;
                self.best_perm.clone_from(&self.placed);
                self.found = true;
            }
            return;
        }
        let bits_after = j * (j + 1) / 2;
        let total = self.n * (self.n - 1) / 2;
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            // skip v when a smaller unplaced twin exists
            let lower_unused = !used & ((1u64 << v) - 1);
            if self.twins[v] & lower_unused != 0 {
                continue;
            }
            let key = prefix << j | self.column(j, v);
            if self.found && key > self.best_key >> (total - bits_after) {
                continue;
            }
            self.placed.push(v);
            self.run(key, used | 1u64 << v);
            self.placed.pop();
        }
    }
}

fn twin_rows(g: &Graph) -> Vec<u64> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| {
                    v != u && {
                        let mask = !(1u64 << u | 1u64 << v);
                        g.rows()[u] & mask == g.rows()[v] & mask
                    }
                })
                .fold(0u64, |acc, v| acc | 1u64 << v)
        })
        .collect()
}

/// Canonical form and the relabelling achieving it: vertex `v` of `g` moves
/// to position `labeling[v]`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > CANON_ORDER_GUARD {
        return Err(Error::Capacity {
            order: n,
            cap: CANON_ORDER_GUARD,
        });
    }
    if n == 0 {
        return Ok((CanonicalForm(to_graph6(g)?), Vec::new()));
    }
    let mut search = Search {
        g,
        n,
        twins: twin_rows(g),
        placed: Vec::with_capacity(n),
        best_key: 0,
        best_perm: Vec::new(),
        found: false,
    };
    search.run(0, 0);
    let mut labeling = vec![0; n];
    for (pos, &v) in search.best_perm.iter().enumerate() {
        labeling[v] = pos;
    }
    let relabeled = g.relabel(&labeling)?;
    Ok((CanonicalForm(to_graph6(&relabeled)?), labeling))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, labeling) = canonical_labeling(g)?;
    g.relabel(&labeling)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > CANON_ORDER_GUARD {
            return Err(Error::Capacity {
                order: x.order(),
                cap: CANON_ORDER_GUARD,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}
