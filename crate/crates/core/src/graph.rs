//! Simple graphs on at most 64 vertices, the whisker construction, the
//! labeling check for Cohen-Macaulay very well-covered graphs, and minimal
//! vertex cover enumeration.
//!
//! Labeled graphs use the canonical vertex layout `x_i = i`, `y_i = n + i`
//! (0-based), which is also the variable layout of [`Ring::paired`].

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::monomial::Ring;
use serde::{Deserialize, Serialize};
use std::fmt;

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n_vertices: usize,
    adj: Vec<u64>,
    /// Number of `(x_i, y_i)` pairs when the graph carries the canonical labeling.
    pairs: Option<usize>,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Graph on vertices `0..n_vertices` with the given (0-based) edges.
    /// Duplicate edges are merged; loops and out-of-range endpoints are errors.
    pub fn new(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n_vertices > MAX_VERTICES {
            return Err(Error::Argument(format!(
                "{n_vertices} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![0u64; n_vertices];
        for (idx, &(a, b)) in edges.iter().enumerate() {
            if a >= n_vertices || b >= n_vertices {
                return Err(Error::Argument(format!(
                    "edge #{idx} ({a}, {b}) has an endpoint outside 0..{n_vertices}"
                )));
            }
            if a == b {
                return Err(Error::Argument(format!("edge #{idx} is a loop at vertex {a}")));
            }
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        Ok(Graph { n_vertices, adj, pairs: None })
    }

    /// Labeled graph on `2n` vertices in the canonical layout.
    pub fn labeled(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(2 * n, edges)?;
        g.pairs = Some(n);
        Ok(g)
    }

    /// Attaches a labeling given as `(x_i, y_i)` vertex pairs and returns
    /// the graph renumbered into the canonical layout.
    pub fn relabel(&self, pairing: &[(usize, usize)]) -> Result<Graph> {
        let n = pairing.len();
        if 2 * n != self.n_vertices {
            return Err(Error::Labeling(format!(
                "{} pairs cannot label {} vertices",
                n, self.n_vertices
            )));
        }
        let mut new_id = vec![usize::MAX; self.n_vertices];
        for (i, &(x, y)) in pairing.iter().enumerate() {
            for (v, id) in [(x, i), (y, n + i)] {
                if v >= self.n_vertices {
                    return Err(Error::Labeling(format!("vertex {v} does not exist")));
                }
                if new_id[v] != usize::MAX {
                    return Err(Error::Labeling(format!("vertex {v} labeled twice")));
                }
                new_id[v] = id;
            }
        }
        let edges: Vec<(usize, usize)> =
            self.edges().into_iter().map(|(a, b)| (new_id[a], new_id[b])).collect();
        Graph::labeled(n, &edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn pairs(&self) -> Option<usize> {
        self.pairs
    }

    pub fn is_labeled(&self) -> bool {
        self.pairs.is_some()
    }

    /// Ring whose variables are the vertices of this graph.
    pub fn ring(&self) -> Ring {
        match self.pairs {
            Some(n) => Ring::paired(n),
            None => Ring::plain(self.n_vertices),
        }
    }

    pub fn vertex_name(&self, v: usize) -> String {
        match self.pairs {
            Some(n) if v < n => format!("x{}", v + 1),
            Some(n) => format!("y{}", v - n + 1),
            None => format!("v{}", v + 1),
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n_vertices && b < self.n_vertices && self.adj[a] & bit(b) != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n_vertices {
            for b in bits(self.adj[a]) {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    fn all_mask(&self) -> u64 {
        if self.n_vertices == 64 {
            u64::MAX
        } else {
            bit(self.n_vertices) - 1
        }
    }

    /// True when every edge has an endpoint in `mask`.
    pub fn is_vertex_cover(&self, mask: u64) -> bool {
        (0..self.n_vertices).all(|v| mask & bit(v) != 0 || self.adj[v] & !mask == 0)
    }

    /// A vertex cover from which no member can be removed.
    pub fn is_minimal_vertex_cover(&self, mask: u64) -> bool {
        self.is_vertex_cover(mask)
            && bits(mask).all(|v| {
                // v is needed iff some neighbour lies outside the cover
                self.adj[v] & !mask != 0
            })
    }

    /// First edge with no endpoint in `mask`.
    pub fn uncovered_edge(&self, mask: u64) -> Option<(usize, usize)> {
        self.edges().into_iter().find(|&(a, b)| mask & (bit(a) | bit(b)) == 0)
    }

    pub fn describe_edge(&self, (a, b): (usize, usize)) -> String {
        format!("{}{}", self.vertex_name(a), self.vertex_name(b))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().into_iter().map(|e| self.describe_edge(e)).collect();
        write!(f, "Graph({} vertices: {})", self.n_vertices, edges.join(" "))
    }
}

/// Whisker graph: base vertex `i` becomes `x_{i+1}` with a new pendant `y_{i+1}`.
pub fn whisker(base: &Graph) -> Graph {
    let n = base.n_vertices();
    let mut edges = base.edges();
    edges.extend((0..n).map(|i| (i, n + i)));
    Graph::labeled(n, &edges).expect("whisker of a valid graph is valid")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// X is a minimal vertex cover and Y a maximal independent set.
    #[serde(rename = "i")]
    I,
    /// `x_i y_i` is an edge for every i.
    #[serde(rename = "ii")]
    II,
    /// `x_i y_j` an edge implies `i <= j`.
    #[serde(rename = "iii")]
    III,
    /// `x_i y_j` an edge implies `x_i x_j` is not.
    #[serde(rename = "iv")]
    IV,
    /// `z_i x_j, y_j x_k` edges imply `z_i x_k` is an edge.
    #[serde(rename = "v")]
    V,
    /// Some edge misses X.
    #[serde(rename = "cover")]
    Cover,
    /// Some edge lies inside Y.
    #[serde(rename = "independent")]
    Independent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    /// Vertices involved; an edge for edge-shaped witnesses.
    pub witness: Vec<usize>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmVwcReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl CmVwcReport {
    pub fn violation(&self, c: Condition) -> Option<&Violation> {
        self.violations.iter().find(|v| v.condition == c)
    }
}

/// Checks the labeling conditions characterising Cohen-Macaulay very
/// well-covered graphs. Reports the first witness found per violated condition.
pub fn check_cm_vwc_labeling(g: &Graph) -> Result<CmVwcReport> {
    let n = g
        .pairs()
        .ok_or_else(|| Error::Labeling("graph carries no (x_i, y_i) labeling".into()))?;
    let x = |i: usize| i;
    let y = |i: usize| n + i;
    let name = |v: usize| g.vertex_name(v);
    let mut violations = Vec::new();
    let mut push = |condition, witness: Vec<usize>| {
        let description = witness.iter().map(|&v| name(v)).collect::<Vec<_>>().join(" ");
        violations.push(Violation { condition, witness, description });
    };

    let x_mask: u64 = (0..n).fold(0, |m, i| m | bit(x(i)));
    if let Some((a, b)) = g.uncovered_edge(x_mask) {
        push(Condition::Cover, vec![a, b]);
    }
    if let Some((a, b)) = g.edges().into_iter().find(|&(a, b)| a >= n && b >= n) {
        push(Condition::Independent, vec![a, b]);
    }
    // minimality of X / maximality of Y: each x_i must have a neighbour in Y
    if let Some(i) = (0..n).find(|&i| g.neighbor_mask(x(i)) & !x_mask == 0) {
        push(Condition::I, vec![x(i)]);
    }
    if let Some(i) = (0..n).find(|&i| !g.has_edge(x(i), y(i))) {
        push(Condition::II, vec![x(i), y(i)]);
    }
    let xy_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| g.has_edge(x(i), y(j)))
        .collect();
    if let Some(&(i, j)) = xy_edges.iter().find(|&&(i, j)| i > j) {
        push(Condition::III, vec![x(i), y(j)]);
    }
    if let Some(&(i, j)) = xy_edges.iter().find(|&&(i, j)| i != j && g.has_edge(x(i), x(j))) {
        push(Condition::IV, vec![x(i), y(j), x(j)]);
    }
    'v: for i in 0..n {
        for z in [x(i), y(i)] {
            for j in (0..n).filter(|&j| j != i) {
                if !g.has_edge(z, x(j)) {
                    continue;
                }
                for k in (0..n).filter(|&k| k != i && k != j) {
                    if g.has_edge(y(j), x(k)) && !g.has_edge(z, x(k)) {
                        push(Condition::V, vec![z, x(j), y(j), x(k)]);
                        break 'v;
                    }
                }
            }
        }
    }
    Ok(CmVwcReport { passed: violations.is_empty(), violations })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexCover {
    pub members: u64,
}

impl VertexCover {
    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        bits(self.members)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members & bit(v) != 0
    }
}

impl fmt::Debug for VertexCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverEnumeration {
    /// Sorted by member mask.
    pub covers: Vec<VertexCover>,
    pub well_covered: bool,
    pub very_well_covered: bool,
}

/// All minimal vertex covers, as complements of maximal independent sets
/// found by pivoted Bron-Kerbosch on the complement graph.
pub fn minimal_vertex_covers(g: &Graph, caps: &Caps) -> Result<CoverEnumeration> {
    let all = g.all_mask();
    let non_adj: Vec<u64> = (0..g.n_vertices()).map(|v| all & !g.adj[v] & !bit(v)).collect();
    let mut independent = Vec::new();
    bron_kerbosch(&non_adj, 0, all, 0, &mut independent, caps.covers)?;
    let mut covers: Vec<VertexCover> =
        independent.into_iter().map(|s| VertexCover { members: all & !s }).collect();
    covers.sort();

    let first = covers[0].len();
    let well_covered = covers.iter().all(|c| c.len() == first);
    let isolated = (0..g.n_vertices()).any(|v| g.adj[v] == 0);
    let very_well_covered = well_covered && !isolated && 2 * first == g.n_vertices();
    Ok(CoverEnumeration { covers, well_covered, very_well_covered })
}

fn bron_kerbosch(
    non_adj: &[u64],
    r: u64,
    mut p: u64,
    mut x: u64,
    out: &mut Vec<u64>,
    cap: usize,
) -> Result<()> {
    if p == 0 {
        if x == 0 {
            if out.len() >= cap {
                return Err(Error::Resource { what: "minimal vertex covers", cap });
            }
            out.push(r);
        }
        return Ok(());
    }
    let pivot = bits(p | x).max_by_key(|&u| (p & non_adj[u]).count_ones()).expect("p nonempty");
    for v in bits(p & !non_adj[pivot]) {
        bron_kerbosch(non_adj, r | bit(v), p & non_adj[v], x & non_adj[v], out, cap)?;
        p &= !bit(v);
        x |= bit(v);
    }
    Ok(())
}

/// Removes the pairs `{x_i, y_i}` for `i` in `pairs_to_delete` (0-based) and
/// renumbers the remaining pairs in order.
pub fn delete_pairs(g: &Graph, pairs_to_delete: &[usize]) -> Result<Graph> {
    let n = g
        .pairs()
        .ok_or_else(|| Error::Labeling("delete_pairs needs a labeled graph".into()))?;
    if let Some(&bad) = pairs_to_delete.iter().find(|&&i| i >= n) {
        return Err(Error::Argument(format!("pair index {} outside 1..={n}", bad + 1)));
    }
    let keep: Vec<usize> = (0..n).filter(|i| !pairs_to_delete.contains(i)).collect();
    let m = keep.len();
    let mut new_id = vec![usize::MAX; 2 * n];
    for (new_i, &old_i) in keep.iter().enumerate() {
        new_id[old_i] = new_i;
        new_id[n + old_i] = m + new_i;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
        .map(|(a, b)| (new_id[a], new_id[b]))
        .collect();
    Graph::labeled(m, &edges)
}

/// Subgraph keeping only the pairs whose bit is set in `pair_mask`, in the
/// labeling of the original graph's ring (vertices outside the mask become
/// isolated). Used by the recursive constructions that must stay in the
/// ambient ring.
pub(crate) fn pair_mask_vertices(n: usize, pair_mask: u64) -> u64 {
    bits(pair_mask).fold(0, |m, i| m | bit(i) | bit(n + i))
}

pub(crate) fn mask_bits(mask: u64) -> impl Iterator<Item = usize> {
    bits(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fix1, fix2, fix3};

    fn brute_force_minimal_covers(g: &Graph) -> Vec<u64> {
        let n = g.n_vertices();
        (0..1u64 << n).filter(|&m| g.is_minimal_vertex_cover(m)).collect()
    }

    #[test]
    fn whisker_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let w = whisker(&k2);
        assert_eq!(w, fix1());
        assert_eq!(w.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(whisker(&Graph::new(1, &[]).unwrap()), fix3());
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let w = whisker(&p3);
        assert_eq!((w.n_vertices(), w.n_edges()), (6, 5));
        assert_eq!(whisker(&Graph::new(0, &[]).unwrap()).n_vertices(), 0);
    }

    #[test]
    fn graph_rejects_bad_input() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
        assert!(Graph::new(65, &[]).is_err());
    }

    #[test]
    fn labeling_passes_on_fixtures() {
        for g in [fix1(), fix2(), fix3()] {
            let r = check_cm_vwc_labeling(&g).unwrap();
            assert!(r.passed, "{g:?}: {:?}", r.violations);
        }
    }

    #[test]
    fn labeling_reports_condition_iii() {
        // x1y1, x2y2, x1x2, x2y1
        let g = Graph::labeled(2, &[(0, 2), (1, 3), (0, 1), (1, 2)]).unwrap();
        let r = check_cm_vwc_labeling(&g).unwrap();
        assert!(!r.passed);
        let v = r.violation(Condition::III).unwrap();
        assert_eq!(v.witness, vec![1, 2]);
        assert_eq!(v.description, "x2 y1");
    }

    #[test]
    fn labeling_other_violations() {
        let unlabeled = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(matches!(check_cm_vwc_labeling(&unlabeled), Err(Error::Labeling(_))));
        // missing whisker x2y2 and a y-y edge
        let g = Graph::labeled(2, &[(0, 2), (2, 3)]).unwrap();
        let r = check_cm_vwc_labeling(&g).unwrap();
        assert!(r.violation(Condition::II).is_some());
        assert!(r.violation(Condition::Cover).is_some());
        assert!(r.violation(Condition::Independent).is_some());
        // condition (v): y1x2, y2x3 edges but no y1x3 ... y1x2 breaks (iii) too
        // x1x2, y2x3 present, x1x3 missing
        let g = Graph::labeled(3, &[(0, 3), (1, 4), (2, 5), (0, 1), (2, 4)]).unwrap();
        let r = check_cm_vwc_labeling(&g).unwrap();
        let v = r.violation(Condition::V).unwrap();
        assert_eq!(v.witness, vec![0, 1, 4, 2]);
    }

    #[test]
    fn covers_match_brute_force() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        for g in [fix1(), fix2(), fix3(), c5.clone()] {
            let got: Vec<u64> = minimal_vertex_covers(&g, &Caps::default())
                .unwrap()
                .covers
                .iter()
                .map(|c| c.members)
                .collect();
            assert_eq!(got, brute_force_minimal_covers(&g));
        }
        let e = minimal_vertex_covers(&c5, &Caps::default()).unwrap();
        assert!(e.covers.iter().all(|c| c.len() == 3));
        assert!(e.well_covered && !e.very_well_covered);
    }

    #[test]
    fn fix1_covers() {
        let e = minimal_vertex_covers(&fix1(), &Caps::default()).unwrap();
        // {x1,x2}, {x1,y2}, {y1,x2}
        let mut want = vec![0b0011u64, 0b1001, 0b0110];
        want.sort();
        assert_eq!(e.covers.iter().map(|c| c.members).collect::<Vec<_>>(), want);
        assert!(e.very_well_covered);
        let e = minimal_vertex_covers(&fix3(), &Caps::default()).unwrap();
        assert_eq!(e.covers.len(), 2);
        assert!(e.very_well_covered);
    }

    #[test]
    fn isolated_vertices_block_very_well_covered() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let e = minimal_vertex_covers(&g, &Caps::default()).unwrap();
        assert!(e.well_covered);
        assert!(!e.very_well_covered);
    }

    #[test]
    fn cover_cap_is_enforced() {
        let caps = Caps { covers: 2, ..Caps::default() };
        assert!(matches!(
            minimal_vertex_covers(&fix1(), &caps),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn delete_pairs_examples() {
        let g = fix2();
        let h = delete_pairs(&g, &[0]).unwrap();
        assert_eq!(h.n_vertices(), 10);
        assert!(check_cm_vwc_labeling(&h).unwrap().passed);
        assert_eq!(delete_pairs(&g, &[]).unwrap(), g);
        assert_eq!(delete_pairs(&g, &(0..6).collect::<Vec<_>>()).unwrap().n_vertices(), 0);
        assert!(delete_pairs(&g, &[6]).is_err());
    }

    #[test]
    fn relabel_canonicalises() {
        // path a-b with pendant c at a, d at b; pair (a,c), (b,d)
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let h = g.relabel(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(h, fix1());
        assert!(g.relabel(&[(0, 2), (0, 3)]).is_err());
        assert!(g.relabel(&[(0, 2)]).is_err());
    }
}
