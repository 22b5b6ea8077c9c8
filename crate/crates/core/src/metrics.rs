//! Distances, diameter, and vertex connectivity.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{is_clique, Graph, VertexSet};

/// Breadth-first layers around a source: `layers[r]` holds the vertices at
/// distance exactly `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerProfile {
    pub source: usize,
    pub layers: Vec<VertexSet>,
    pub eccentricity: usize,
}

impl LayerProfile {
    /// Every vertex reached from the source.
    pub fn reached(&self) -> VertexSet {
        self.layers
            .iter()
            .fold(VertexSet::EMPTY, |acc, &l| acc.union(l))
    }

    /// Distance from the source to `v`, if reachable.
    pub fn distance_to(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(v))
    }
}

pub fn bfs_layers(g: &Graph, source: usize) -> Result<LayerProfile> {
    if source >= g.order() {
        return Err(Error::Index {
            vertex: source,
            order: g.order(),
        });
    }
    let mut seen = VertexSet::singleton(source);
    let mut layers = vec![seen];
    loop {
        let frontier = *layers.last().unwrap();
        let next = frontier
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)))
            .difference(seen);
        if next.is_empty() {
            break;
        }
        seen = seen.union(next);
        layers.push(next);
    }
    let eccentricity = layers.len() - 1;
    Ok(LayerProfile {
        source,
        layers,
        eccentricity,
    })
}

/// Diameter, or `Disconnected` when some pair of vertices has no path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => f.write_str("disconnected"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Disconnected => s.serialize_none(),
        }
    }
}

pub fn diameter(g: &Graph) -> Result<Diameter> {
    if g.order() == 0 {
        return Err(Error::Domain("diameter of the empty graph".into()));
    }
    let all = g.vertices();
    let mut best = 0;
    for v in 0..g.order() {
        let profile = bfs_layers(g, v)?;
        if profile.reached() != all {
            return Ok(Diameter::Disconnected);
        }
        best = best.max(profile.eccentricity);
    }
    Ok(Diameter::Finite(best))
}

/// Unit-capacity flow network on the vertex-split digraph: vertex `v` becomes
/// `v_in = 2v` and `v_out = 2v + 1`.
struct SplitNetwork {
    nodes: usize,
    // residual capacity, dense because desk-scale graphs are tiny
    cap: Vec<u8>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let n = g.order();
        let nodes = 2 * n;
        let mut cap = vec![0u8; nodes * nodes];
        for v in 0..n {
            // only the split arcs of inner vertices are saturable
            let c = if v == s || v == t { n as u8 } else { 1 };
            cap[2 * v * nodes + 2 * v + 1] = c;
            for u in g.neighbors(v).iter() {
                cap[(2 * v + 1) * nodes + 2 * u] = n as u8;
            }
        }
        SplitNetwork { nodes, cap }
    }

    fn residual_reach(&self, from: usize) -> (Vec<bool>, Vec<usize>) {
        let mut seen = vec![false; self.nodes];
        let mut parent = vec![usize::MAX; self.nodes];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(a) = queue.pop_front() {
            for b in 0..self.nodes {
                if !seen[b] && self.cap[a * self.nodes + b] > 0 {
                    seen[b] = true;
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        (seen, parent)
    }

    /// Repeated shortest augmenting paths; every path carries one unit.
    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let (seen, parent) = self.residual_reach(source);
            if !seen[sink] {
                return flow;
            }
            let mut b = sink;
            while b != source {
                let a = parent[b];
                self.cap[a * self.nodes + b] -= 1;
                self.cap[b * self.nodes + a] += 1;
                b = a;
            }
            flow += 1;
        }
    }
}

/// Maximum number of internally disjoint `s`-`t` paths together with a
/// minimum separating set of that size.
pub fn min_separator(g: &Graph, s: usize, t: usize) -> Result<(usize, VertexSet)> {
    for v in [s, t] {
        if v >= g.order() {
            return Err(Error::Index {
                vertex: v,
                order: g.order(),
            });
        }
    }
    if s == t {
        return Err(Error::Precondition(format!("source and sink are both {s}")));
    }
    if g.has_edge(s, t) {
        return Err(Error::Precondition(format!("{s} and {t} are adjacent")));
    }
    let mut net = SplitNetwork::new(g, s, t);
    let flow = net.max_flow(2 * s + 1, 2 * t);
    let (reach, _) = net.residual_reach(2 * s + 1);
    let cut: VertexSet = (0..g.order())
        .filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1])
        .collect();
    debug_assert_eq!(cut.len(), flow);
    Ok((flow, cut))
}

/// Maximum number of internally vertex-disjoint paths between non-adjacent
/// `s` and `t`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> Result<usize> {
    min_separator(g, s, t).map(|(flow, _)| flow)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// A minimum separating set; empty for complete and disconnected graphs.
    pub witness_cut: VertexSet,
}

/// Vertex connectivity with a witness cut. Complete graphs get `order - 1`.
/// Each non-adjacent pair yields the minimum cut nearest its first vertex;
/// among those of minimum size the smallest sorted member list wins.
pub fn vertex_connectivity(g: &Graph) -> Result<ConnectivityResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Domain(
            "vertex connectivity of the empty graph".into(),
        ));
    }
    if g.is_complete() {
        return Ok(ConnectivityResult {
            kappa: n - 1,
            witness_cut: VertexSet::EMPTY,
        });
    }
    if !g.is_connected() {
        return Ok(ConnectivityResult {
            kappa: 0,
            witness_cut: VertexSet::EMPTY,
        });
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let (flow, cut) = min_separator(g, s, t)?;
            let candidate = (flow, cut.to_vec());
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    let (kappa, cut) = best.expect("a non-complete graph has a non-adjacent pair");
    Ok(ConnectivityResult {
        kappa,
        witness_cut: cut.into_iter().collect(),
    })
}

/// `order > k` and `kappa >= k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    g.order() > k && vertex_connectivity(g).is_ok_and(|c| c.kappa >= k)
}

/// For the pole pair `x`, `y` at distance equal to the diameter `d`: every
/// layer `N_i(x)` with `1 <= i <= d - 1` has at least `k` vertices and every
/// union of consecutive layers `N_i(x) + N_{i+1}(x)` is a clique.
pub fn layer_structure_check(g: &Graph, x: usize, y: usize, k: usize) -> Result<bool> {
    let d = match diameter(g)? {
        Diameter::Finite(d) => d,
        Diameter::Disconnected => {
            return Err(Error::Domain(
                "layer structure needs a connected graph".into(),
            ))
        }
    };
    let profile = bfs_layers(g, x)?;
    if y >= g.order() || profile.distance_to(y) != Some(d) {
        return Err(Error::Domain(format!(
            "vertices {x} and {y} are not at distance {d} (the diameter)"
        )));
    }
    let layers = &profile.layers;
    Ok((1..d).all(|i| layers[i].len() >= k && is_clique(g, layers[i].union(layers[i + 1]))))
}

/// Pairs `(x, y)`, `x < y`, at distance equal to the diameter.
pub fn diametral_pairs(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let Diameter::Finite(d) = diameter(g)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for x in 0..g.order() {
        let profile = bfs_layers(g, x)?;
        if let Some(far) = profile.layers.get(d) {
            out.extend(far.iter().filter(|&y| y > x).map(|y| (x, y)));
        }
    }
    Ok(out)
}
