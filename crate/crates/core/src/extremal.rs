//! Closed-form counts, the backbone sequential join, and the extremal family.
//!
//! The backbone for connectivity `k` and diameter `d` is the sequential join
//! `K1 v Kk v .. v Kk v K1` with `d - 1` middle blocks. Every extremal graph is
//! the backbone plus a clique `R` of outside vertices, each joined to three
//! consecutive blocks inside a window of three or four blocks.
//!
//! Vertex layout of every construction: pole `x = 0`, then the middle blocks
//! in order, then pole `y`, then the outside vertices.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, is_isomorphic, CanonicalForm, CANON_ORDER_GUARD};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, DEFAULT_ORDER_CAP};
use crate::metrics::{diameter, vertex_connectivity, Diameter};

fn check_kd(k: usize, d: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain(
            "connectivity level k must be at least 1".into(),
        ));
    }
    if d < 2 {
        return Err(Error::Domain(format!(
            "diameter d must be at least 2, got {d}"
        )));
    }
    Ok(())
}

fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Vertices of the backbone: `k*d - k + 2`.
pub fn backbone_order(k: usize, d: usize) -> Result<usize> {
    check_kd(k, d)?;
    Ok(k * d - k + 2)
}

/// Edges of the backbone: `((3d - 5)k^2 + (5 - d)k) / 2`.
pub fn backbone_size(k: usize, d: usize) -> Result<usize> {
    check_kd(k, d)?;
    let (k, d) = (k as i64, d as i64);
    let twice = (3 * d - 5) * k * k + (5 - d) * k;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    Ok((twice / 2) as usize)
}

/// Most backbone vertices one outside vertex can see without shortening the
/// pole distance: `3k` for `d >= 4`, `(d - 1)k + 4 - d` for `d` in {2, 3}.
pub fn attachment_cap(k: usize, d: usize) -> Result<usize> {
    check_kd(k, d)?;
    Ok(if d >= 4 { 3 * k } else { (d - 1) * k + 4 - d })
}

/// A validated instance: order `n`, connectivity level `k`, diameter `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Parameters {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl Parameters {
    pub fn new(n: usize, k: usize, d: usize) -> Result<Self> {
        check_kd(k, d)?;
        let need = k * d - k + 2;
        if n < need {
            return Err(Error::Domain(format!(
                "order {n} is below the backbone order {need} for k = {k}, d = {d}"
            )));
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::Capacity {
                order: n,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        Ok(Parameters { n, k, d })
    }

    pub fn backbone_order(&self) -> usize {
        self.k * self.d - self.k + 2
    }

    /// Number of vertices outside the backbone.
    pub fn outside(&self) -> usize {
        self.n - self.backbone_order()
    }
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={}, d={})", self.n, self.k, self.d)
    }
}

/// Which reading of the closed form to evaluate.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum FormulaMode {
    /// Attachment term is the per-vertex cap times the number of outside
    /// vertices.
    #[default]
    Corrected,
    /// Attachment term is the cap times the backbone order, exactly as the
    /// closed form is usually displayed. Overshoots `C(n, 2)` in general.
    PaperLiteral,
}

/// Maximum size of a `k`-connected graph of order `n` and diameter `d`.
pub fn max_size(p: Parameters, mode: FormulaMode) -> usize {
    let cap = if p.d >= 4 {
        3 * p.k
    } else {
        (p.d - 1) * p.k + 4 - p.d
    };
    let multiplier = match mode {
        FormulaMode::Corrected => p.outside(),
        FormulaMode::PaperLiteral => p.backbone_order(),
    };
    let backbone = backbone_size(p.k, p.d).expect("validated parameters");
    backbone + choose2(p.outside()) + cap * multiplier
}

/// Blocks `T_1 .. T_{d+1}` of the backbone inside a constructed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMap {
    pub blocks: Vec<VertexSet>,
    pub poles: (usize, usize),
}

impl BlockMap {
    pub fn backbone(&self) -> VertexSet {
        self.blocks
            .iter()
            .fold(VertexSet::EMPTY, |acc, &b| acc.union(b))
    }

    /// Union of the blocks with 1-based indices `from..=to`.
    pub fn span(&self, from: usize, to: usize) -> VertexSet {
        self.blocks[from - 1..to]
            .iter()
            .fold(VertexSet::EMPTY, |acc, &b| acc.union(b))
    }
}

fn backbone_into(g: &mut Graph, k: usize, d: usize) -> Result<BlockMap> {
    let y = k * (d - 1) + 1;
    let mut blocks = vec![VertexSet::singleton(0)];
    blocks.extend((0..d - 1).map(|i| (1 + i * k..1 + (i + 1) * k).collect::<VertexSet>()));
    blocks.push(VertexSet::singleton(y));
    for b in &blocks {
        g.complete_set(*b)?;
    }
    for pair in blocks.windows(2) {
        g.join_sets(pair[0], pair[1])?;
    }
    Ok(BlockMap {
        blocks,
        poles: (0, y),
    })
}

/// The backbone sequential join for level `k` and diameter `d`.
pub fn build_backbone(k: usize, d: usize) -> Result<(Graph, BlockMap)> {
    let order = backbone_order(k, d)?;
    let mut g = Graph::empty(order)?;
    let blocks = backbone_into(&mut g, k, d)?;
    Ok((g, blocks))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    FirstThree,
    LastThree,
}

/// One member of the extremal family: a window of three or four consecutive
/// blocks and, per outside vertex, which three of them it joins.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyMemberSpec {
    /// 1-based index of the first block in the window.
    pub window_start: usize,
    pub window_len: usize,
    pub sides: Vec<Side>,
}

impl FamilyMemberSpec {
    /// Three-block window starting at `start`; all outside vertices join it.
    pub fn three(start: usize, outside: usize) -> Self {
        FamilyMemberSpec {
            window_start: start,
            window_len: 3,
            sides: vec![Side::FirstThree; outside],
        }
    }

    /// Four-block window; the first `first` outside vertices take the first
    /// three blocks and the rest take the last three.
    pub fn four(start: usize, first: usize, outside: usize) -> Self {
        let sides = (0..outside)
            .map(|i| {
                if i < first {
                    Side::FirstThree
                } else {
                    Side::LastThree
                }
            })
            .collect();
        FamilyMemberSpec {
            window_start: start,
            window_len: 4,
            sides,
        }
    }

    fn validate(&self, p: Parameters) -> Result<()> {
        let outside = p.outside();
        if self.sides.len() != outside {
            return Err(Error::Domain(format!(
                "{} side assignments for {outside} outside vertices",
                self.sides.len()
            )));
        }
        if self.window_start == 0 || !(3..=4).contains(&self.window_len) {
            return Err(Error::Domain(format!(
                "window ({}, {}) is not a 1-based window of length 3 or 4",
                self.window_start, self.window_len
            )));
        }
        if self.window_start + self.window_len - 1 > p.d + 1 {
            return Err(Error::Domain(format!(
                "window ({}, {}) runs past block {}",
                self.window_start,
                self.window_len,
                p.d + 1
            )));
        }
        let last = self.sides.iter().filter(|&&s| s == Side::LastThree).count();
        if self.window_len == 3 && last > 0 {
            return Err(Error::Domain(
                "a three-block window has no last-three side".into(),
            ));
        }
        if self.window_len == 4 && (last == 0 || last == outside) {
            return Err(Error::Domain(
                "a four-block window needs both sides occupied".into(),
            ));
        }
        Ok(())
    }

    /// 1-based block range joined by an outside vertex on `side`.
    pub fn blocks_for(&self, side: Side) -> (usize, usize) {
        match side {
            Side::FirstThree => (self.window_start, self.window_start + 2),
            Side::LastThree => (self.window_start + 1, self.window_start + 3),
        }
    }
}

impl fmt::Display for FamilyMemberSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first = self
            .sides
            .iter()
            .filter(|&&s| s == Side::FirstThree)
            .count();
        write!(
            f,
            "window {}+{} first={first}",
            self.window_start, self.window_len
        )
    }
}

/// Backbone plus an outside clique attached as `spec` prescribes.
pub fn build_family_member(p: Parameters, spec: &FamilyMemberSpec) -> Result<(Graph, BlockMap)> {
    spec.validate(p)?;
    let mut g = Graph::empty(p.n)?;
    let blocks = backbone_into(&mut g, p.k, p.d)?;
    let base = p.backbone_order();
    let outside: VertexSet = (base..p.n).collect();
    g.complete_set(outside)?;
    for (i, &side) in spec.sides.iter().enumerate() {
        let (from, to) = spec.blocks_for(side);
        g.join_sets(VertexSet::singleton(base + i), blocks.span(from, to))?;
    }
    Ok((g, blocks))
}

/// Every window/assignment choice for `p`; duplicates are not removed.
pub fn family_specs(p: Parameters) -> Vec<FamilyMemberSpec> {
    let outside = p.outside();
    if outside == 0 {
        return vec![FamilyMemberSpec::three(1, 0)];
    }
    let mut specs: Vec<_> = (1..=p.d - 1)
        .map(|s| FamilyMemberSpec::three(s, outside))
        .collect();
    for s in 1..=p.d.saturating_sub(2) {
        specs.extend((1..outside).map(|first| FamilyMemberSpec::four(s, first, outside)));
    }
    specs
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub spec: FamilyMemberSpec,
    pub graph: Graph,
    pub canonical: CanonicalForm,
}

fn attains_bound(p: Parameters, g: &Graph) -> Result<bool> {
    if g.size() != max_size(p, FormulaMode::Corrected) {
        return Ok(false);
    }
    if diameter(g)? != Diameter::Finite(p.d) {
        return Ok(false);
    }
    Ok(g.order() > p.k && vertex_connectivity(g)?.kappa >= p.k)
}

/// The extremal family up to isomorphism, sorted by canonical form. Every
/// candidate is built and kept only if it really has diameter `d`, is
/// `k`-connected, and reaches the corrected bound. The representative of a
/// class is the first spec (in generation order) that produced it.
pub fn enumerate_family_members(p: Parameters) -> Result<Vec<FamilyMember>> {
    if p.n > CANON_ORDER_GUARD {
        return Err(Error::Capacity {
            order: p.n,
            cap: CANON_ORDER_GUARD,
        });
    }
    let specs = family_specs(p);
    let checked: Vec<Option<FamilyMember>> = specs
        .into_par_iter()
        .map(|spec| {
            let (graph, _) = build_family_member(p, &spec)?;
            if !attains_bound(p, &graph)? {
                return Ok(None);
            }
            let canonical = canonical_form(&graph)?;
            Ok(Some(FamilyMember {
                spec,
                graph,
                canonical,
            }))
        })
        .collect::<Result<_>>()?;
    let mut classes = BTreeMap::new();
    for member in checked.into_iter().flatten() {
        classes.entry(member.canonical.clone()).or_insert(member);
    }
    Ok(classes.into_values().collect())
}

/// Graphs of [`enumerate_family_members`].
pub fn enumerate_family(p: Parameters) -> Result<Vec<Graph>> {
    Ok(enumerate_family_members(p)?
        .into_iter()
        .map(|m| m.graph)
        .collect())
}

/// Outcome of an extremality check, with the reason when negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Extremal,
    Disconnected,
    /// `(n, k, d)` of the graph is not a valid instance.
    OutOfDomain(String),
    NotKConnected {
        kappa: usize,
    },
    SizeMismatch {
        size: usize,
        bound: usize,
    },
    /// Right size, but not isomorphic to any family member.
    NotInFamily,
}

impl Verdict {
    pub fn is_extremal(&self) -> bool {
        matches!(self, Verdict::Extremal)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Extremal => f.write_str("extremal"),
            Verdict::Disconnected => f.write_str("disconnected"),
            Verdict::OutOfDomain(why) => write!(f, "out of domain: {why}"),
            Verdict::NotKConnected { kappa } => write!(f, "not k-connected (kappa {kappa})"),
            Verdict::SizeMismatch { size, bound } => write!(f, "size {size} != bound {bound}"),
            Verdict::NotInFamily => f.write_str("not a family member"),
        }
    }
}

/// Classifies `g` against the instance `(order, k, diameter(g))`.
pub fn extremality(g: &Graph, k: usize) -> Result<Verdict> {
    let n = g.order();
    if n > CANON_ORDER_GUARD {
        return Err(Error::Capacity {
            order: n,
            cap: CANON_ORDER_GUARD,
        });
    }
    if n == 0 {
        return Ok(Verdict::OutOfDomain("empty graph".into()));
    }
    let d = match diameter(g)? {
        Diameter::Finite(d) => d,
        Diameter::Disconnected => return Ok(Verdict::Disconnected),
    };
    let p = match Parameters::new(n, k, d) {
        Ok(p) => p,
        Err(e) => return Ok(Verdict::OutOfDomain(e.to_string())),
    };
    let kappa = vertex_connectivity(g)?.kappa;
    if kappa < k {
        return Ok(Verdict::NotKConnected { kappa });
    }
    let bound = max_size(p, FormulaMode::Corrected);
    if g.size() != bound {
        return Ok(Verdict::SizeMismatch {
            size: g.size(),
            bound,
        });
    }
    for member in enumerate_family(p)? {
        if is_isomorphic(g, &member)? {
            return Ok(Verdict::Extremal);
        }
    }
    Ok(Verdict::NotInFamily)
}

pub fn is_extremal(g: &Graph, k: usize) -> Result<bool> {
    extremality(g, k).map(|v| v.is_extremal())
}
