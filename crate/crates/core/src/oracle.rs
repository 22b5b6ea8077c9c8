//! Exhaustive ground truth for small instances.
//!
//! The search walks complement sizes `m = 0, 1, 2, ..`: at level `m` every
//! `m`-subset of the `C(n, 2)` vertex pairs is removed from `K_n` and the
//! remaining graph is tested for diameter exactly `d` and connectivity at
//! least `k`. The first level with a survivor gives the maximum size
//! `C(n, 2) - m`; that level is finished to collect every maximiser, and the
//! maximisers are reduced to isomorphism classes afterwards.
//!
//! Nothing here uses the closed forms or the family generator; they are only
//! compared against in [`verify_theorem`].

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm, CANON_ORDER_GUARD};
use crate::error::{Error, Result};
use crate::extremal::{enumerate_family_members, max_size, FormulaMode, Parameters};
use crate::graph::Graph;

pub const DEFAULT_MAX_ORDER: usize = 8;
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest order searched; never above the canonical-form guard.
    pub max_order: usize,
    /// Abort once this many complements would have been examined.
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_order: DEFAULT_MAX_ORDER,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl OracleConfig {
    fn check(&self, n: usize) -> Result<()> {
        let cap = self.max_order.min(CANON_ORDER_GUARD);
        if n > cap {
            return Err(Error::Capacity { order: n, cap });
        }
        Ok(())
    }
}

fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Precomputed tables for testing labelled graphs of one instance.
struct Tester {
    n: usize,
    d: usize,
    pairs: Vec<(usize, usize)>,
    full: [u64; CANON_ORDER_GUARD],
    all: u64,
    // every vertex set of size 1..k-1
    separators: Vec<u64>,
}

impl Tester {
    fn new(p: Parameters) -> Self {
        let n = p.n;
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let all = (1u64 << n) - 1;
        let mut full = [0u64; CANON_ORDER_GUARD];
        for (v, row) in full.iter_mut().enumerate().take(n) {
            *row = all & !(1u64 << v);
        }
        let separators = (1..1u64 << n)
            .filter(|s| (s.count_ones() as usize) < p.k)
            .collect();
        Tester {
            n,
            d: p.d,
            pairs,
            full,
            all,
            separators,
        }
    }

    fn rows(&self, complement: u64) -> [u64; CANON_ORDER_GUARD] {
        let mut rows = self.full;
        let mut bits = complement;
        while bits != 0 {
            let (i, j) = self.pairs[bits.trailing_zeros() as usize];
            rows[i] &= !(1u64 << j);
            rows[j] &= !(1u64 << i);
            bits &= bits - 1;
        }
        rows
    }

    fn reach(&self, rows: &[u64; CANON_ORDER_GUARD], start: usize, blocked: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= rows[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= !seen & !blocked;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn diameter_is_d(&self, rows: &[u64; CANON_ORDER_GUARD]) -> bool {
        let mut widest = 0;
        for v in 0..self.n {
            let mut seen = 1u64 << v;
            let mut frontier = seen;
            let mut ecc = 0;
            while seen != self.all {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    next |= rows[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                next &= !seen;
                if next == 0 {
                    return false;
                }
                ecc += 1;
                if ecc > self.d {
                    return false;
                }
                seen |= next;
                frontier = next;
            }
            widest = widest.max(ecc);
        }
        widest == self.d
    }

    /// Connected after deleting any set of fewer than `k` vertices.
    fn k_connected(&self, rows: &[u64; CANON_ORDER_GUARD]) -> bool {
        self.separators.iter().all(|&s| {
            let rest = self.all & !s;
            let start = rest.trailing_zeros() as usize;
            self.reach(rows, start, s) == rest
        })
    }

    fn accepts(&self, complement: u64) -> bool {
        let rows = self.rows(complement);
        self.diameter_is_d(&rows) && self.k_connected(&rows)
    }

    fn graph(&self, complement: u64) -> Graph {
        Graph::from_rows(self.rows(complement)[..self.n].to_vec()).expect("valid rows")
    }

    /// Accepted complements with exactly `m` removed pairs.
    fn level(&self, m: usize) -> Vec<u64> {
        let e = self.pairs.len();
        if m == 0 {
            return if self.accepts(0) { vec![0] } else { Vec::new() };
        }
        // partition by the highest removed pair so workers never overlap
        let mut found: Vec<u64> = (m - 1..e)
            .into_par_iter()
            .flat_map_iter(|top| {
                let high = 1u64 << top;
                let mut out = Vec::new();
                let mut low: u64 = if m == 1 { 0 } else { (1u64 << (m - 1)) - 1 };
                loop {
                    if self.accepts(high | low) {
                        out.push(high | low);
                    }
                    if low == 0 {
                        break;
                    }
                    // next subset of the same popcount (Gosper)
                    let c = low & low.wrapping_neg();
                    let r = low + c;
                    low = (((r ^ low) >> 2) / c) | r;
                    if low >= high {
                        break;
                    }
                }
                out
            })
            .collect();
        found.sort_unstable();
        found
    }
}

/// Exhaustive maximum over labelled graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub params: Parameters,
    /// `None` when no graph of order `n` has diameter `d` and connectivity `k`.
    pub max_size: Option<usize>,
    /// Complement size at which the maximum was found.
    pub complement_level: Option<usize>,
    /// Maximisers up to isomorphism, sorted.
    pub extremal: Vec<CanonicalForm>,
    /// Labelled maximisers before isomorphism reduction.
    pub labelled_maximisers: usize,
    pub candidates_examined: u64,
}

/// Labelled graphs with exactly `C(n, 2) - m` edges satisfying the instance
/// constraints.
pub fn valid_graphs_at_level(p: Parameters, m: usize, cfg: &OracleConfig) -> Result<Vec<Graph>> {
    cfg.check(p.n)?;
    let tester = Tester::new(p);
    if m > tester.pairs.len() {
        return Ok(Vec::new());
    }
    let count = binomial(tester.pairs.len(), m);
    if count > cfg.budget {
        return Err(Error::Budget {
            budget: cfg.budget,
            level: m,
        });
    }
    Ok(tester
        .level(m)
        .into_iter()
        .map(|c| tester.graph(c))
        .collect())
}

pub fn max_size_bruteforce(p: Parameters, cfg: &OracleConfig) -> Result<SearchResult> {
    cfg.check(p.n)?;
    let tester = Tester::new(p);
    let e = tester.pairs.len();
    let mut examined = 0u64;
    for m in 0..=e {
        let level_size = binomial(e, m);
        if examined + level_size > cfg.budget {
            return Err(Error::Budget {
                budget: cfg.budget,
                level: m,
            });
        }
        examined += level_size;
        let found = tester.level(m);
        if found.is_empty() {
            continue;
        }
        let classes: BTreeSet<CanonicalForm> = found
            .par_iter()
            .map(|&c| canonical_form(&tester.graph(c)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .collect();
        return Ok(SearchResult {
            params: p,
            max_size: Some(e - m),
            complement_level: Some(m),
            extremal: classes.into_iter().collect(),
            labelled_maximisers: found.len(),
            candidates_examined: examined,
        });
    }
    Ok(SearchResult {
        params: p,
        max_size: None,
        complement_level: None,
        extremal: Vec::new(),
        labelled_maximisers: 0,
        candidates_examined: examined,
    })
}

/// Search result compared with both closed-form readings and the family
/// generator. Serialises as schema version 1.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub schema_version: u32,
    pub params: Parameters,
    /// `null` when infeasible.
    pub max_size: Option<usize>,
    pub corrected_bound: usize,
    pub paper_literal_bound: usize,
    /// Canonical graph6 strings, sorted.
    pub extremal: Vec<String>,
    pub family: Vec<String>,
    pub corrected_match: bool,
    pub paper_literal_match: bool,
    pub family_match: bool,
    pub candidates_examined: u64,
    pub elapsed_ms: f64,
}

impl OracleReport {
    /// Both the corrected bound and the family agree with the search.
    pub fn is_consistent(&self) -> bool {
        self.corrected_match && self.family_match
    }
}

pub fn verify_theorem(p: Parameters, cfg: &OracleConfig) -> Result<OracleReport> {
    let started = Instant::now();
    let search = max_size_bruteforce(p, cfg)?;
    let family: Vec<CanonicalForm> = enumerate_family_members(p)?
        .into_iter()
        .map(|m| m.canonical)
        .collect();
    let corrected_bound = max_size(p, FormulaMode::Corrected);
    let paper_literal_bound = max_size(p, FormulaMode::PaperLiteral);
    let family_match = family == search.extremal;
    Ok(OracleReport {
        schema_version: 1,
        params: p,
        max_size: search.max_size,
        corrected_bound,
        paper_literal_bound,
        corrected_match: search.max_size == Some(corrected_bound),
        paper_literal_match: search.max_size == Some(paper_literal_bound),
        family_match,
        extremal: search.extremal.iter().map(|c| c.to_string()).collect(),
        family: family.iter().map(|c| c.to_string()).collect(),
        candidates_examined: search.candidates_examined,
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    })
}

/// Every valid instance with `n <= n_max`, `k <= k_max`, `2 <= d <= d_max`,
/// in lexicographic `(n, k, d)` order.
pub fn sweep_parameters(n_max: usize, k_max: usize, d_max: usize) -> Vec<Parameters> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 1..=k_max {
            for d in 2..=d_max {
                if let Ok(p) = Parameters::new(n, k, d) {
                    out.push(p);
                }
            }
        }
    }
    out
}

pub fn sweep(
    n_max: usize,
    k_max: usize,
    d_max: usize,
    cfg: &OracleConfig,
) -> Result<Vec<OracleReport>> {
    cfg.check(n_max)?;
    sweep_parameters(n_max, k_max, d_max)
        .into_iter()
        .map(|p| verify_theorem(p, cfg))
        .collect()
}
