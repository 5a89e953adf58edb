//! Spanning-tree normal forms, switching equivalence, balance, and
//! switching isomorphism.

use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::algebra::GroupAlgebraMatrix;
use crate::error::{Error, Result};
use crate::graph::{GainGraph, SimpleGraph, SwitchingFunction, Walk};
use crate::group::{Element, FiniteGroup};

/// Default vertex limit for [`switching_isomorphic`].
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 10;

/// A BFS spanning tree of one connected component together with the
/// fundamental closed walks at its root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTreeFrame {
    root: usize,
    /// Component vertices in BFS order.
    vertices: Vec<usize>,
    /// `parent[v]` for component vertices other than the root.
    parent: Vec<Option<usize>>,
    /// `(parent, child)` in BFS discovery order.
    tree_edges: Vec<(usize, usize)>,
    /// `(min, max)` in lexicographic order.
    non_tree_edges: Vec<(usize, usize)>,
    fundamental_walks: Vec<Walk>,
}

impl SpanningTreeFrame {
    /// BFS tree from `root`; neighbors are visited in increasing order.
    pub fn bfs(graph: &SimpleGraph, root: usize) -> Result<Self> {
        if root >= graph.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: graph.vertex_count(),
            });
        }
        let frame = Self::bfs_component(graph, root);
        if frame.vertices.len() != graph.vertex_count() {
            return Err(Error::Disconnected);
        }
        Ok(frame)
    }

    /// One frame per connected component, each rooted at its smallest vertex.
    pub fn forest(graph: &SimpleGraph) -> Vec<Self> {
        graph
            .components()
            .iter()
            .map(|comp| Self::bfs_component(graph, comp[0]))
            .collect()
    }

    fn bfs_component(graph: &SimpleGraph, root: usize) -> Self {
        let n = graph.vertex_count();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut vertices = vec![root];
        let mut tree_edges = Vec::new();
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            for &v in graph.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    tree_edges.push((u, v));
                    vertices.push(v);
                    queue.push_back(v);
                }
            }
        }
        let non_tree_edges: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| seen[a] && parent[b] != Some(a) && parent[a] != Some(b))
            .collect();
        let mut frame = SpanningTreeFrame {
            root,
            vertices,
            parent,
            tree_edges,
            non_tree_edges,
            fundamental_walks: Vec::new(),
        };
        frame.fundamental_walks = frame
            .non_tree_edges
            .iter()
            .map(|&(a, b)| {
                let mut w = frame.path_from_root(a);
                let mut back = frame.path_from_root(b);
                back.reverse();
                w.append(&mut back);
                Walk(w)
            })
            .collect();
        frame
    }

    /// Tree path `root, …, v`.
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn non_tree_edges(&self) -> &[(usize, usize)] {
        &self.non_tree_edges
    }

    pub fn fundamental_walks(&self) -> &[Walk] {
        &self.fundamental_walks
    }
}

/// Values of the switching that trivializes the tree edges of `frame`;
/// vertices outside the frame's component are left at the identity.
fn normalizer_on(g: &GainGraph, frame: &SpanningTreeFrame, values: &mut [Element]) {
    let grp = g.group();
    values[frame.root] = grp.identity();
    for &(u, v) in &frame.tree_edges {
        let psi = g.gain(u, v).expect("tree edge");
        values[v] = grp.mul(grp.inv(psi), values[u]);
    }
}

/// Switches `g` so that every BFS tree edge from `root` carries the identity.
///
/// ```
/// use gainspec_core::{parse_gain_graph, switching::tree_normalize};
///
/// let g = parse_gain_graph("group cyclic 5\nvertices 3\nedge 1 2 g\nedge 2 3\nedge 3 1\n").unwrap();
/// let (normal, _, frame) = tree_normalize(&g, 0).unwrap();
/// assert_eq!(frame.non_tree_edges(), &[(1, 2)]);
/// assert_eq!(normal.gain(1, 2), Some(1));
/// ```
pub fn tree_normalize(
    g: &GainGraph,
    root: usize,
) -> Result<(GainGraph, SwitchingFunction, SpanningTreeFrame)> {
    let frame = SpanningTreeFrame::bfs(g.underlying(), root)?;
    let mut values = vec![g.group().identity(); g.vertex_count()];
    normalizer_on(g, &frame, &mut values);
    let f = SwitchingFunction(values);
    Ok((g.apply_switching(&f), f, frame))
}

/// Gains of the frame's fundamental closed walks.
pub fn fundamental_gains(g: &GainGraph, frame: &SpanningTreeFrame) -> Vec<Element> {
    frame
        .fundamental_walks
        .iter()
        .map(|w| g.gain_of_walk(w).expect("frame walks follow edges"))
        .collect()
}

/// The gain graph on `graph` that is trivial on the frame's tree edges and
/// has the prescribed fundamental gains.
pub fn from_fundamental_gains(
    group: std::sync::Arc<FiniteGroup>,
    graph: &SimpleGraph,
    frame: &SpanningTreeFrame,
    gains: &[Element],
) -> Result<GainGraph> {
    if gains.len() != frame.non_tree_edges.len() {
        return Err(Error::InvalidArgument(format!(
            "{} gains for {} non-tree edges",
            gains.len(),
            frame.non_tree_edges.len()
        )));
    }
    let mut edges: Vec<(usize, usize, Element)> = frame
        .tree_edges
        .iter()
        .map(|&(u, v)| (u, v, group.identity()))
        .collect();
    edges.extend(
        frame
            .non_tree_edges
            .iter()
            .zip(gains)
            .map(|(&(a, b), &x)| (a, b, x)),
    );
    if edges.len() != graph.edge_count() {
        return Err(Error::Disconnected);
    }
    GainGraph::new(group, graph.vertex_count(), &edges)
}

fn check_same_group(g1: &GainGraph, g2: &GainGraph) -> Result<()> {
    if g1.group().same_as(g2.group()) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// Precomputed normal form of one gain graph, reused across many
/// comparisons against graphs on the same underlying graph.
struct NormalForm {
    frames: Vec<SpanningTreeFrame>,
    normalizer: Vec<Element>,
    tuples: Vec<Vec<Element>>,
}

impl NormalForm {
    fn new(g: &GainGraph, frames: Vec<SpanningTreeFrame>) -> Self {
        let mut normalizer = vec![g.group().identity(); g.vertex_count()];
        for frame in &frames {
            normalizer_on(g, frame, &mut normalizer);
        }
        let tuples = frames.iter().map(|fr| fundamental_gains(g, fr)).collect();
        NormalForm {
            frames,
            normalizer,
            tuples,
        }
    }

    /// Witness `f` with `other = self^f`, assuming identical underlying graphs.
    fn witness_to(&self, g1: &GainGraph, other: &GainGraph) -> Option<SwitchingFunction> {
        let grp = g1.group();
        let target = NormalForm::new(other, self.frames.clone());
        let mut f = vec![grp.identity(); g1.vertex_count()];
        for (k, frame) in self.frames.iter().enumerate() {
            let c = grp.simultaneously_conjugate(&self.tuples[k], &target.tuples[k])?;
            for &v in &frame.vertices {
                f[v] = grp.mul(
                    grp.mul(self.normalizer[v], c),
                    grp.inv(target.normalizer[v]),
                );
            }
        }
        let f = SwitchingFunction(f);
        verify_switching(g1, other, &f).then_some(f)
    }
}

/// Checks `ψ₂(u,v) = f(u)⁻¹ψ₁(u,v)f(v)` on every edge.
pub fn verify_switching(g1: &GainGraph, g2: &GainGraph, f: &SwitchingFunction) -> bool {
    let grp = g1.group();
    g1.underlying() == g2.underlying()
        && g1
            .oriented_edges()
            .zip(g2.oriented_edges())
            .all(|((u, v, a), (_, _, b))| grp.mul(grp.mul(grp.inv(f.0[u]), a), f.0[v]) == b)
}

/// Some `f` with `ψ₂ = ψ₁^f`, or `None`. Disconnected graphs are decided
/// component by component.
pub fn switching_equivalent(g1: &GainGraph, g2: &GainGraph) -> Result<Option<SwitchingFunction>> {
    check_same_group(g1, g2)?;
    if g1.underlying() != g2.underlying() {
        return Err(Error::UnderlyingMismatch);
    }
    let form = NormalForm::new(g1, SpanningTreeFrame::forest(g1.underlying()));
    Ok(form.witness_to(g1, g2))
}

/// Every closed walk has identity gain.
pub fn is_balanced(g: &GainGraph) -> bool {
    let e = g.group().identity();
    SpanningTreeFrame::forest(g.underlying())
        .iter()
        .all(|fr| fundamental_gains(g, fr).iter().all(|&x| x == e))
}

/// Number of switching classes of `G`-gain functions on a connected graph.
pub fn count_switching_classes(graph: &SimpleGraph, group: &FiniteGroup) -> Result<BigUint> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let rank = u32::try_from(graph.circuit_rank())
        .map_err(|_| Error::InvalidArgument("circuit rank too large".into()))?;
    Ok(group.count_simultaneous_conjugacy_classes(rank))
}

/// A vertex bijection `φ: V₁ → V₂` and a switching `f` on `V₁` with
/// `ψ₂ ∘ φ = ψ₁^f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingIsomorphism {
    pub phi: Vec<usize>,
    pub switching: SwitchingFunction,
}

impl SwitchingIsomorphism {
    /// Checks `(PF)* A₁ (PF) = A₂` in `M_n(ZG)`, where `P` is the permutation
    /// matrix of `φ` and `F` is diagonal with `F_{φ(v)φ(v)} = f(v)`.
    pub fn validate(&self, g1: &GainGraph, g2: &GainGraph) -> bool {
        let grp = g1.group();
        let n = g1.vertex_count();
        if self.phi.len() != n || g2.vertex_count() != n {
            return false;
        }
        let mut diag = vec![grp.identity(); n];
        for (v, &b) in self.phi.iter().enumerate() {
            diag[b] = self.switching.0[v];
        }
        let p = GroupAlgebraMatrix::permutation(&self.phi, grp);
        let pf = p.mul(&GroupAlgebraMatrix::diagonal(&diag, grp), grp);
        let lhs = pf.star(grp).mul(&g1.adjacency_matrix(), grp).mul(&pf, grp);
        lhs == g2.adjacency_matrix()
    }
}

/// Searches vertex bijections in lexicographic order and returns the first
/// one under which the graphs are switching equivalent, validated by the
/// matrix identity. Refuses inputs with more than
/// [`ISOMORPHISM_VERTEX_LIMIT`] vertices.
pub fn switching_isomorphic(
    g1: &GainGraph,
    g2: &GainGraph,
) -> Result<Option<SwitchingIsomorphism>> {
    switching_isomorphic_with_limit(g1, g2, ISOMORPHISM_VERTEX_LIMIT)
}

pub fn switching_isomorphic_with_limit(
    g1: &GainGraph,
    g2: &GainGraph,
    limit: usize,
) -> Result<Option<SwitchingIsomorphism>> {
    check_same_group(g1, g2)?;
    let n = g1.vertex_count();
    for g in [g1, g2] {
        if g.vertex_count() > limit {
            return Err(Error::GuardExceeded {
                n: g.vertex_count(),
                limit,
            });
        }
    }
    let (h1, h2) = (g1.underlying(), g2.underlying());
    if n != g2.vertex_count() || h1.edge_count() != h2.edge_count() {
        return Ok(None);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| h1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| h2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(None);
    }

    let form = NormalForm::new(g1, SpanningTreeFrame::forest(h1));
    let mut search = IsoSearch {
        h1,
        h2,
        phi: vec![usize::MAX; n],
        used: vec![false; n],
    };
    let mut found = None;
    search.run(0, &mut |phi| {
        let pulled = g2.pull_back(h1, phi).expect("phi is a graph isomorphism");
        match form.witness_to(g1, &pulled) {
            Some(f) => {
                found = Some(SwitchingIsomorphism {
                    phi: phi.to_vec(),
                    switching: f,
                });
                true
            }
            None => false,
        }
    });
    if let Some(w) = &found {
        if !w.validate(g1, g2) {
            return Err(Error::InvalidArgument(
                "switching isomorphism failed matrix validation".into(),
            ));
        }
    }
    Ok(found)
}

struct IsoSearch<'a> {
    h1: &'a SimpleGraph,
    h2: &'a SimpleGraph,
    phi: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    /// Extends `phi` on vertices `u..`; `visit` returns `true` to stop.
    fn run(&mut self, u: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.phi.len();
        if u == n {
            return visit(&self.phi);
        }
        for b in 0..n {
            if self.used[b] || self.h1.degree(u) != self.h2.degree(b) {
                continue;
            }
            let consistent =
                (0..u).all(|w| self.h1.has_edge(u, w) == self.h2.has_edge(b, self.phi[w]));
            if !consistent {
                continue;
            }
            self.phi[u] = b;
            self.used[b] = true;
            if self.run(u + 1, visit) {
                return true;
            }
            self.used[b] = false;
        }
        self.phi[u] = usize::MAX;
        false
    }
}

/// Every graph isomorphism `h1 → h2`, in lexicographic order.
pub fn graph_isomorphisms(h1: &SimpleGraph, h2: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = h1.vertex_count();
    if n != h2.vertex_count() || h1.edge_count() != h2.edge_count() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut search = IsoSearch {
        h1,
        h2,
        phi: vec![usize::MAX; n],
        used: vec![false; n],
    };
    search.run(0, &mut |phi| {
        out.push(phi.to_vec());
        false
    });
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graph::parse_gain_graph;

    fn s4() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(4).unwrap())
    }

    fn c5() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(5).unwrap())
    }

    fn cycle_with(group: Arc<FiniteGroup>, n: usize, x: Element) -> GainGraph {
        let mut edges: Vec<(usize, usize, Element)> =
            (0..n - 1).map(|i| (i, i + 1, group.identity())).collect();
        edges.push((n - 1, 0, x));
        GainGraph::new(group, n, &edges).unwrap()
    }

    #[test]
    fn frame_shape() {
        let k4 = SimpleGraph::complete(4);
        let frame = SpanningTreeFrame::bfs(&k4, 0).unwrap();
        assert_eq!(frame.tree_edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(frame.non_tree_edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(frame.fundamental_walks()[0], Walk(vec![0, 1, 2, 0]));
        for w in frame.fundamental_walks() {
            assert!(w.is_closed());
            let crossings = w
                .vertices()
                .windows(2)
                .filter(|p| {
                    frame
                        .non_tree_edges()
                        .contains(&(p[0].min(p[1]), p[0].max(p[1])))
                })
                .count();
            assert_eq!(crossings, 1);
        }
        let two = SimpleGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            SpanningTreeFrame::bfs(&two, 0).unwrap_err(),
            Error::Disconnected
        );
        assert_eq!(SpanningTreeFrame::forest(&two).len(), 2);
    }

    #[test]
    fn trees_normalize_to_identity() {
        let grp = s4();
        let g = GainGraph::new(
            grp.clone(),
            5,
            &[(0, 1, 7), (1, 2, 13), (1, 3, 22), (3, 4, 5)],
        )
        .unwrap();
        let (normal, _, frame) = tree_normalize(&g, 2).unwrap();
        assert!(normal.edge_gains().iter().all(|&x| x == grp.identity()));
        assert!(frame.non_tree_edges().is_empty());
        assert!(is_balanced(&g));
        let (_, f, _) = tree_normalize(&normal, 2).unwrap();
        assert!(f.is_identity(&grp));
    }

    #[test]
    fn cycle_normal_form_is_conjugate_to_w0() {
        let grp = s4();
        for x in grp.elements() {
            let g = cycle_with(grp.clone(), 5, x);
            for root in 0..5 {
                let (normal, _, frame) = tree_normalize(&g, root).unwrap();
                let (a, b) = frame.non_tree_edges()[0];
                let w0 = g.gain_of_walk(&Walk(vec![0, 1, 2, 3, 4, 0])).unwrap();
                assert_eq!(grp.class_of(normal.gain(a, b).unwrap()), grp.class_of(w0));
                assert_eq!(
                    fundamental_gains(&g, &frame),
                    vec![normal.gain(a, b).unwrap()]
                );
            }
        }
        let frame = SpanningTreeFrame::bfs(&SimpleGraph::cycle(5).unwrap(), 0).unwrap();
        let g = cycle_with(grp.clone(), 5, 9);
        assert_eq!(fundamental_gains(&g, &frame).len(), 1);
    }

    #[test]
    fn surjectivity_of_fundamental_gains() {
        let grp = s4();
        let k4 = SimpleGraph::complete(4);
        let frame = SpanningTreeFrame::bfs(&k4, 0).unwrap();
        let target = vec![3, 17, 22];
        let g = from_fundamental_gains(grp, &k4, &frame, &target).unwrap();
        assert_eq!(fundamental_gains(&g, &frame), target);
    }

    #[test]
    fn cyclic_cycles_are_not_equivalent() {
        let grp = c5();
        let a = cycle_with(grp.clone(), 4, 1);
        let b = cycle_with(grp.clone(), 4, 2);
        assert_eq!(switching_equivalent(&a, &b).unwrap(), None);
        assert!(switching_equivalent(&a, &a)
            .unwrap()
            .unwrap()
            .is_identity(&grp));
    }

    #[test]
    fn conjugate_transpositions_are_equivalent() {
        let grp = s4();
        let t12 = grp.parse_element("(12)").unwrap();
        let t34 = grp.parse_element("(34)").unwrap();
        let a = cycle_with(grp.clone(), 3, t12);
        let b = cycle_with(grp.clone(), 3, t34);
        let f = switching_equivalent(&a, &b).unwrap().unwrap();
        assert_eq!(a.apply_switching(&f), b);
    }

    #[test]
    fn switched_graph_has_witness() {
        let grp = s4();
        let g = parse_gain_graph(
            "group symmetric 4\nvertices 5\nedge 1 2 (12)\nedge 2 3 (234)\nedge 3 4\nedge 4 1 (1234)\nedge 1 3 (13)(24)\nedge 4 5 (34)\n",
        )
        .unwrap();
        let f = SwitchingFunction(vec![5, 11, 0, 23, 17]);
        let h = g.apply_switching(&f);
        let w = switching_equivalent(&g, &h).unwrap().unwrap();
        assert!(verify_switching(&g, &h, &w));
        let _ = grp;
    }

    #[test]
    fn disconnected_componentwise() {
        let grp = s4();
        let t12 = grp.parse_element("(12)").unwrap();
        let t23 = grp.parse_element("(23)").unwrap();
        let c3 = grp.parse_element("(123)").unwrap();
        let edges = |x, y| {
            vec![
                (0, 1, 0),
                (1, 2, 0),
                (2, 0, x),
                (3, 4, 0),
                (4, 5, 0),
                (5, 3, y),
            ]
        };
        let a = GainGraph::new(grp.clone(), 6, &edges(t12, c3)).unwrap();
        let b = GainGraph::new(grp.clone(), 6, &edges(t23, grp.inv(c3))).unwrap();
        let c = GainGraph::new(grp.clone(), 6, &edges(t23, t12)).unwrap();
        assert!(switching_equivalent(&a, &b).unwrap().is_some());
        assert!(switching_equivalent(&a, &c).unwrap().is_none());
    }

    #[test]
    fn mismatches() {
        let a = cycle_with(c5(), 3, 1);
        let b = cycle_with(c5(), 4, 1);
        assert_eq!(
            switching_equivalent(&a, &b).unwrap_err(),
            Error::UnderlyingMismatch
        );
        let c = cycle_with(s4(), 3, 1);
        assert_eq!(
            switching_equivalent(&a, &c).unwrap_err(),
            Error::GroupMismatch
        );
    }

    #[test]
    fn class_counts() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let k4 = SimpleGraph::complete(4);
        assert_eq!(
            count_switching_classes(&k4, &c2).unwrap(),
            BigUint::from(8u32)
        );
        let grp = s4();
        assert_eq!(
            count_switching_classes(&SimpleGraph::cycle(6).unwrap(), &grp).unwrap(),
            BigUint::from(5u32)
        );
        let two = SimpleGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            count_switching_classes(&two, &c2).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let grp = s4();
        let g = GainGraph::new(
            grp.clone(),
            5,
            &[
                (0, 1, 3),
                (1, 2, 9),
                (2, 3, 14),
                (3, 0, 20),
                (0, 2, 7),
                (3, 4, 1),
            ],
        )
        .unwrap();
        let perm = vec![3, 0, 4, 1, 2];
        let h = g
            .relabel(&perm)
            .unwrap()
            .apply_switching(&SwitchingFunction(vec![1, 2, 3, 4, 5]));
        let w = switching_isomorphic(&g, &h).unwrap().unwrap();
        assert!(w.validate(&g, &h));
        let big = GainGraph::trivial(grp.clone(), SimpleGraph::cycle(11).unwrap());
        assert_eq!(
            switching_isomorphic(&big, &big).unwrap_err(),
            Error::GuardExceeded { n: 11, limit: 10 }
        );
        assert!(switching_isomorphic_with_limit(&big, &big, 11)
            .unwrap()
            .is_some());
    }

    #[test]
    fn cycle_isomorphism_up_to_inversion() {
        let grp = c5();
        let a = cycle_with(grp.clone(), 4, 1);
        let b = cycle_with(grp.clone(), 4, 4);
        let c = cycle_with(grp.clone(), 4, 2);
        assert!(switching_equivalent(&a, &b).unwrap().is_none());
        assert!(switching_isomorphic(&a, &b).unwrap().is_some());
        assert!(switching_isomorphic(&a, &c).unwrap().is_none());
    }

    #[test]
    fn isomorphism_enumeration() {
        assert_eq!(
            graph_isomorphisms(
                &SimpleGraph::cycle(5).unwrap(),
                &SimpleGraph::cycle(5).unwrap()
            )
            .len(),
            10
        );
        assert_eq!(
            graph_isomorphisms(&SimpleGraph::complete(4), &SimpleGraph::complete(4)).len(),
            24
        );
        let path = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(graph_isomorphisms(&path, &star).is_empty());
    }
}
