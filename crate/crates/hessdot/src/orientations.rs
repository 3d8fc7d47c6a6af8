//! The incomparability graph `Γ_h`, its acyclic orientations, and sink sets.
//!
//! Vertices are `1..=n`. Edges `{j, i}` with `j < i <= h(j)` are kept sorted by
//! `(j, i)`; an orientation is a bit vector over that edge list where a clear
//! bit means `j → i` (an ascent) and a set bit means `j ← i`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::roots::HessenbergFunction;

/// Vertex bitmask: bit `v - 1` stands for vertex `v`.
type Mask = u64;

fn bit(v: usize) -> Mask {
    1 << (v - 1)
}

/// `Γ_h`: vertices `[n]`, edges `{j, i}` for `j < i <= h(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncomparabilityGraph {
    source: HessenbergFunction,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Mask>,
}

impl IncomparabilityGraph {
    pub fn n(&self) -> usize {
        self.source.n()
    }

    /// The Hessenberg function the graph was built from.
    pub fn source(&self) -> &HessenbergFunction {
        &self.source
    }

    /// Edges `(j, i)` with `j < i`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.neighbors[a - 1] & bit(b) != 0
    }

    /// Vertices adjacent to `v`, increasing.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&u| self.has_edge(u, v)).collect()
    }

    /// Whether `set` is an independent set.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }
}

/// Builds `Γ_h`. Its edge count equals `|Φ_h^-|`.
pub fn build_graph(h: &HessenbergFunction) -> IncomparabilityGraph {
    let n = h.n();
    assert!(n <= 64, "vertex masks hold at most 64 vertices");
    let mut edges = Vec::new();
    let mut neighbors = vec![0; n];
    for j in 1..=n {
        for i in j + 1..=h.h(j) {
            edges.push((j, i));
            neighbors[j - 1] |= bit(i);
            neighbors[i - 1] |= bit(j);
        }
    }
    IncomparabilityGraph {
        source: h.clone(),
        edges,
        neighbors,
    }
}

/// An acyclic orientation of some `Γ_h` with its sink set and ascent count.
///
/// The orientation does not own its graph; pass the graph it was enumerated
/// from to the methods that need edge labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcyclicOrientation {
    /// Bit `k` set means edge `k` (in sorted order) points from larger to smaller.
    reversed: u64,
    sinks: Vec<usize>,
    asc: usize,
}

impl AcyclicOrientation {
    fn from_bits(graph: &IncomparabilityGraph, reversed: u64) -> Self {
        let n = graph.n();
        let mut out = vec![0 as Mask; n + 1];
        let mut asc = 0;
        for (k, &(j, i)) in graph.edges.iter().enumerate() {
            if reversed >> k & 1 == 0 {
                out[j] |= bit(i);
                asc += 1;
            } else {
                out[i] |= bit(j);
            }
        }
        let sinks = (1..=n).filter(|&v| out[v] == 0).collect();
        Self {
            reversed,
            sinks,
            asc,
        }
    }

    /// Builds an orientation from explicit directions (`true` = `j → i`),
    /// rejecting cyclic ones.
    pub fn from_directions(graph: &IncomparabilityGraph, forward: &[bool]) -> Result<Self> {
        if forward.len() != graph.edges.len() {
            return Err(Error::SizeMismatch {
                left: forward.len(),
                right: graph.edges.len(),
            });
        }
        let reversed = forward
            .iter()
            .enumerate()
            .filter(|(_, &f)| !f)
            .fold(0u64, |acc, (k, _)| acc | 1 << k);
        let n = graph.n();
        let mut out = vec![0 as Mask; n + 1];
        for (k, &(j, i)) in graph.edges.iter().enumerate() {
            if forward[k] {
                out[j] |= bit(i);
            } else {
                out[i] |= bit(j);
            }
        }
        // Repeatedly strip sinks; a leftover vertex means a directed cycle.
        let mut alive: Mask = (1..=n).fold(0, |m, v| m | bit(v));
        while alive != 0 {
            let Some(v) = (1..=n).find(|&v| alive & bit(v) != 0 && out[v] & alive == 0) else {
                return Err(Error::CyclicOrientation);
            };
            alive &= !bit(v);
        }
        Ok(Self::from_bits(graph, reversed))
    }

    /// Sorted sink set `sk(ω)`.
    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    /// `asc(ω)`: number of edges `{a, b}`, `a < b`, directed `a → b`.
    pub fn asc(&self) -> usize {
        self.asc
    }

    /// Whether edge `k` of the graph is directed `j → i` (toward the larger vertex).
    pub fn is_forward(&self, k: usize) -> bool {
        self.reversed >> k & 1 == 0
    }

    /// Directions per edge, `true` meaning `j → i`.
    pub fn directions(&self, graph: &IncomparabilityGraph) -> Vec<bool> {
        (0..graph.edges.len()).map(|k| self.is_forward(k)).collect()
    }

    /// CLI-facing JSON: `{"edges": [[j, i, "→"|"←"], …], "sinks": […], "asc": k}`.
    pub fn to_json(&self, graph: &IncomparabilityGraph) -> Value {
        let edges: Vec<Value> = graph
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(j, i))| json!([j, i, if self.is_forward(k) { "→" } else { "←" }]))
            .collect();
        json!({ "edges": edges, "sinks": self.sinks, "asc": self.asc })
    }
}

/// Visits every acyclic orientation in binary order of the direction vector
/// (first edge most significant, `→` before `←`).
///
/// Edges are assigned one at a time; an assignment `u → v` is pruned as soon as
/// `u` is already reachable from `v`.
pub fn for_each_acyclic_orientation(
    graph: &IncomparabilityGraph,
    mut visit: impl FnMut(AcyclicOrientation),
) {
    assert!(
        graph.edges.len() <= u64::BITS as usize,
        "orientation enumeration supports at most 64 edges"
    );
    let n = graph.n();
    let mut out = vec![0 as Mask; n + 1];
    rec(graph, 0, 0, &mut out, &mut visit);

    fn reaches(out: &[Mask], from: usize, target: usize) -> bool {
        let mut seen = bit(from);
        let mut frontier = bit(from);
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize + 1;
            frontier &= frontier - 1;
            let fresh = out[v] & !seen;
            if fresh & bit(target) != 0 {
                return true;
            }
            seen |= fresh;
            frontier |= fresh;
        }
        false
    }

    fn rec(
        graph: &IncomparabilityGraph,
        k: usize,
        reversed: u64,
        out: &mut [Mask],
        visit: &mut impl FnMut(AcyclicOrientation),
    ) {
        if k == graph.edges.len() {
            visit(AcyclicOrientation::from_bits(graph, reversed));
            return;
        }
        let (j, i) = graph.edges[k];
        for (from, to, flag) in [(j, i, 0u64), (i, j, 1u64)] {
            if reaches(out, to, from) {
                continue;
            }
            out[from] |= bit(to);
            rec(graph, k + 1, reversed | flag << k, out, visit);
            out[from] &= !bit(to);
        }
    }
}

/// All acyclic orientations in deterministic order.
pub fn enumerate_acyclic_orientations(graph: &IncomparabilityGraph) -> Vec<AcyclicOrientation> {
    let mut all = Vec::new();
    for_each_acyclic_orientation(graph, |o| all.push(o));
    all
}

/// `table[k][i]` = number of acyclic orientations with `k` sinks and `asc = i`
/// (row 0 is always zero).
pub fn sink_ascent_table(graph: &IncomparabilityGraph) -> Vec<Vec<u64>> {
    let n = graph.n();
    let mut table = vec![vec![0u64; graph.edges.len() + 1]; n + 1];
    for_each_acyclic_orientation(graph, |o| table[o.sinks.len()][o.asc] += 1);
    table
}

/// A sink set `T` (an independent set of `Γ_h`) with its degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SinkSet {
    #[serde(rename = "T")]
    pub vertices: Vec<usize>,
    #[serde(rename = "deg")]
    pub degree: usize,
}

/// `SK_k(Γ_h)`: all sink sets of size `k`, in lexicographic order.
///
/// Candidates are the independent sets, generated through the criterion
/// `ℓ_{i+1} > h(ℓ_i)`; those missing a connected component of `Γ_h` are dropped
/// (an isolated part of the graph always contributes a sink). When `Γ_h` is
/// connected, every independent set is a sink set.
pub fn sink_sets(graph: &IncomparabilityGraph, k: usize) -> Vec<SinkSet> {
    let h = graph.source();
    let n = h.n();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        graph: &IncomparabilityGraph,
        n: usize,
        k: usize,
        lo: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<SinkSet>,
    ) {
        if cur.len() == k {
            if !meets_every_component(graph.source(), cur) {
                return;
            }
            out.push(SinkSet {
                vertices: cur.clone(),
                degree: degree_of_vertices(graph, cur),
            });
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(graph, n, k, graph.source().h(v) + 1, cur, out);
            cur.pop();
        }
    }
    if k >= 1 {
        rec(graph, n, k, 1, &mut cur, &mut out);
    }
    out
}

/// Every sink set of every size.
pub fn all_sink_sets(graph: &IncomparabilityGraph) -> Vec<SinkSet> {
    (1..=graph.n()).flat_map(|k| sink_sets(graph, k)).collect()
}

/// `m(Γ_h)`: the maximum sink-set size (greedy from vertex 1 is optimal for
/// these interval-type graphs).
pub fn max_sink_set_size(graph: &IncomparabilityGraph) -> usize {
    let h = graph.source();
    let mut v = 1;
    let mut size = 0;
    while v <= h.n() {
        size += 1;
        v = h.h(v) + 1;
    }
    size
}

/// Whether `t` contains a vertex of every connected component of `Γ_h`.
/// Components are the intervals ending at the fixed points `h(i) = i`.
fn meets_every_component(h: &HessenbergFunction, t: &[usize]) -> bool {
    let mut start = 1;
    for end in (1..=h.n()).filter(|&i| h.h(i) == i) {
        if !t.iter().any(|&v| (start..=end).contains(&v)) {
            return false;
        }
        start = end + 1;
    }
    true
}

fn degree_of_vertices(graph: &IncomparabilityGraph, t: &[usize]) -> usize {
    t.iter()
        .map(|&b| (1..b).filter(|&a| graph.has_edge(a, b)).count())
        .sum()
}

/// `deg(T)`: number of edges `{ℓ, ℓ'}` with `ℓ' ∈ T` and `ℓ < ℓ'`.
pub fn degree_of(t: &[usize], graph: &IncomparabilityGraph) -> Result<usize> {
    validate_sink_set(t, graph)?;
    Ok(degree_of_vertices(graph, t))
}

fn validate_sink_set(t: &[usize], graph: &IncomparabilityGraph) -> Result<()> {
    let sorted = t.windows(2).all(|w| w[0] < w[1]);
    let in_range = t.iter().all(|&v| v >= 1 && v <= graph.n());
    if t.is_empty()
        || !sorted
        || !in_range
        || !graph.is_independent(t)
        || !meets_every_component(graph.source(), t)
    {
        return Err(Error::NotASinkSet(t.to_vec()));
    }
    Ok(())
}

/// `φ_T(j) = j - #{t ∈ T : t <= j}`.
pub fn phi(t: &[usize], j: usize) -> usize {
    j - t.iter().filter(|&&x| x <= j).count()
}

/// `h_T` on `[n - |T|]`, defined by `h_T(φ_T(i)) = φ_T(h(i))` for `i ∉ T`.
///
/// Returns `None` when `T = [n]` (the restricted function has empty domain).
pub fn restrict(h: &HessenbergFunction, t: &[usize]) -> Result<Option<HessenbergFunction>> {
    let graph = build_graph(h);
    validate_sink_set(t, &graph)?;
    let values: Vec<usize> = (1..=h.n())
        .filter(|i| !t.contains(i))
        .map(|i| phi(t, h.h(i)))
        .collect();
    if values.is_empty() {
        return Ok(None);
    }
    let restricted = HessenbergFunction::new(values)
        .expect("restriction of a Hessenberg function to a sink set is Hessenberg");
    debug_assert!(induced_matches(&graph, t, &build_graph(&restricted)));
    Ok(Some(restricted))
}

/// Whether `small` is `Γ_h - T` after relabeling by `φ_T`.
fn induced_matches(
    graph: &IncomparabilityGraph,
    t: &[usize],
    small: &IncomparabilityGraph,
) -> bool {
    let induced: Vec<(usize, usize)> = graph
        .edges
        .iter()
        .filter(|(j, i)| !t.contains(j) && !t.contains(i))
        .map(|&(j, i)| (phi(t, j), phi(t, i)))
        .collect();
    induced == small.edges
}

/// `ω_T`: the orientation induced on `Γ_{h_T}` by an orientation whose sink set is `T`.
///
/// Returns the restricted graph alongside the orientation, or `None` for both
/// when `T` is every vertex.
pub fn restrict_orientation(
    graph: &IncomparabilityGraph,
    omega: &AcyclicOrientation,
    t: &[usize],
) -> Result<Option<(IncomparabilityGraph, AcyclicOrientation)>> {
    if omega.sinks() != t {
        return Err(Error::SinkSetMismatch {
            expected: t.to_vec(),
            actual: omega.sinks().to_vec(),
        });
    }
    let Some(h_t) = restrict(graph.source(), t)? else {
        return Ok(None);
    };
    let small = build_graph(&h_t);
    let mut reversed = 0u64;
    let mut k_small = 0;
    for (k, &(j, i)) in graph.edges.iter().enumerate() {
        if t.contains(&j) || t.contains(&i) {
            continue;
        }
        debug_assert_eq!(small.edges[k_small], (phi(t, j), phi(t, i)));
        if !omega.is_forward(k) {
            reversed |= 1 << k_small;
        }
        k_small += 1;
    }
    let restricted = AcyclicOrientation::from_bits(&small, reversed);
    Ok(Some((small, restricted)))
}

/// CLI-facing JSON for a sink set: `{"T": […], "deg": d, "h_T": […]}`.
pub fn sink_set_json(h: &HessenbergFunction, t: &SinkSet) -> Result<Value> {
    let h_t = restrict(h, &t.vertices)?;
    Ok(json!({
        "T": t.vertices,
        "deg": t.degree,
        "h_T": h_t.map(|f| f.values().to_vec()).unwrap_or_default(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn edges_sorted_and_counted() {
        let g = build_graph(&h(&[2, 4, 4, 4]));
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(g.neighbors(2), vec![1, 3, 4]);
    }

    #[test]
    fn binary_order_starts_all_forward() {
        let g = build_graph(&h(&[2, 3, 3]));
        let all = enumerate_acyclic_orientations(&g);
        assert_eq!(all.len(), 4);
        assert_eq!(all[0].directions(&g), vec![true, true]);
        assert_eq!(all[0].sinks(), &[3]);
        assert_eq!(all[0].asc(), 2);
        assert_eq!(all[3].directions(&g), vec![false, false]);
    }

    #[test]
    fn restriction_rejects_wrong_sink_set() {
        let g = build_graph(&h(&[3, 4, 5, 5, 5]));
        let omega = enumerate_acyclic_orientations(&g)
            .into_iter()
            .find(|o| o.sinks() == [2, 5])
            .unwrap();
        assert!(matches!(
            restrict_orientation(&g, &omega, &[1, 4]),
            Err(Error::SinkSetMismatch { .. })
        ));
        assert!(matches!(
            restrict(g.source(), &[1, 2]),
            Err(Error::NotASinkSet(_))
        ));
    }

    #[test]
    fn edgeless_restriction_to_everything() {
        let id = HessenbergFunction::identity(3);
        let g = build_graph(&id);
        let omega = &enumerate_acyclic_orientations(&g)[0];
        assert_eq!(restrict_orientation(&g, omega, &[1, 2, 3]).unwrap(), None);
    }
}
