//! Gain graphs, walks, switching functions and the gain-graph file format.
//!
//! Vertices are 0-based in the API and 1-based in files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::algebra::{GroupAlgebraElement, GroupAlgebraMatrix};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// A simple undirected graph; edges are stored as `(min, max)` in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MultiEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        Ok(SimpleGraph {
            n,
            edges: normalized,
            adjacency,
        })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// `m - n + c`, the number of independent cycles.
    pub fn circuit_rank(&self) -> usize {
        self.edges.len() + self.components().len() - self.n
    }

    /// Connected with every vertex of degree two.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// Plain adjacency matrix as 0/1 entries.
    pub fn adjacency_matrix(&self) -> nalgebra::DMatrix<f64> {
        let mut m = nalgebra::DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            m[(u, v)] = 1.0;
            m[(v, u)] = 1.0;
        }
        m
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

/// Vertex sequence `w₀ … w_h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk(pub Vec<usize>);

impl Walk {
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.0.first() == self.0.last()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// `W₁W₂`; the end of `self` must be the start of `other`.
    pub fn concat(&self, other: &Walk) -> Walk {
        assert_eq!(self.0.last(), other.0.first(), "walks do not meet");
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0[1..]);
        Walk(v)
    }
}

/// Per-vertex group elements `f: V → G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchingFunction(pub Vec<Element>);

impl SwitchingFunction {
    pub fn identity(n: usize, group: &FiniteGroup) -> Self {
        SwitchingFunction(vec![group.identity(); n])
    }

    pub fn values(&self) -> &[Element] {
        &self.0
    }

    /// Pointwise inverse.
    pub fn inverse(&self, group: &FiniteGroup) -> Self {
        SwitchingFunction(self.0.iter().map(|&x| group.inv(x)).collect())
    }

    /// Pointwise product `(f·g)(v) = f(v)g(v)`; switching by `f·g` equals
    /// switching by `f` and then by `g`.
    pub fn then(&self, other: &SwitchingFunction, group: &FiniteGroup) -> Self {
        SwitchingFunction(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| group.mul(a, b))
                .collect(),
        )
    }

    pub fn is_identity(&self, group: &FiniteGroup) -> bool {
        self.0.iter().all(|&x| x == group.identity())
    }
}

/// A simple graph with gains `ψ(u,v) ∈ G` and `ψ(v,u) = ψ(u,v)⁻¹`.
#[derive(Debug, Clone)]
pub struct GainGraph {
    group: Arc<FiniteGroup>,
    graph: SimpleGraph,
    /// `ψ(u, v)` for each stored edge `(u, v)` with `u < v`.
    gains: Vec<Element>,
    /// `(neighbor, ψ(v, neighbor))` sorted by neighbor.
    out: Vec<Vec<(usize, Element)>>,
}

impl PartialEq for GainGraph {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.graph == other.graph && self.gains == other.gains
    }
}

impl GainGraph {
    /// Builds a gain graph from oriented edges `(u, v, ψ(u,v))`.
    pub fn new(
        group: Arc<FiniteGroup>,
        n: usize,
        edges: &[(usize, usize, Element)],
    ) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let graph = SimpleGraph::new(n, &pairs)?;
        let mut gains = vec![group.identity(); graph.edge_count()];
        for &(u, v, g) in edges {
            if g >= group.order() {
                return Err(Error::UnknownElement(format!("#{g}")));
            }
            let key = (u.min(v), u.max(v));
            let idx = graph.edges.binary_search(&key).expect("edge present");
            gains[idx] = if u < v { g } else { group.inv(g) };
        }
        Ok(Self::from_parts(group, graph, gains))
    }

    /// All gains trivial.
    pub fn trivial(group: Arc<FiniteGroup>, graph: SimpleGraph) -> Self {
        let gains = vec![group.identity(); graph.edge_count()];
        Self::from_parts(group, graph, gains)
    }

    /// `gains[i]` is `ψ(u, v)` for the `i`-th sorted edge `(u, v)`, `u < v`.
    pub fn with_gains(
        group: Arc<FiniteGroup>,
        graph: SimpleGraph,
        gains: Vec<Element>,
    ) -> Result<Self> {
        if gains.len() != graph.edge_count() {
            return Err(Error::InvalidArgument(format!(
                "{} gains for {} edges",
                gains.len(),
                graph.edge_count()
            )));
        }
        if let Some(&g) = gains.iter().find(|&&g| g >= group.order()) {
            return Err(Error::UnknownElement(format!("#{g}")));
        }
        Ok(Self::from_parts(group, graph, gains))
    }

    fn from_parts(group: Arc<FiniteGroup>, graph: SimpleGraph, gains: Vec<Element>) -> Self {
        let mut out = vec![Vec::new(); graph.vertex_count()];
        for (&(u, v), &g) in graph.edges.iter().zip(&gains) {
            out[u].push((v, g));
            out[v].push((u, group.inv(g)));
        }
        for list in &mut out {
            list.sort_unstable();
        }
        GainGraph {
            group,
            graph,
            gains,
            out,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn underlying(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Gains of the sorted edges, oriented from smaller to larger endpoint.
    pub fn edge_gains(&self) -> &[Element] {
        &self.gains
    }

    /// `(u, v, ψ(u,v))` with `u < v`.
    pub fn oriented_edges(&self) -> impl Iterator<Item = (usize, usize, Element)> + '_ {
        self.graph
            .edges
            .iter()
            .zip(&self.gains)
            .map(|(&(u, v), &g)| (u, v, g))
    }

    /// `(neighbor, ψ(v, neighbor))`.
    pub fn out_edges(&self, v: usize) -> &[(usize, Element)] {
        &self.out[v]
    }

    /// `ψ(u, v)` if `u ~ v`.
    pub fn gain(&self, u: usize, v: usize) -> Option<Element> {
        let list = self.out.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    /// `ψ(W) = ψ(w₀,w₁)⋯ψ(w_{h-1},w_h)`.
    pub fn gain_of_walk(&self, walk: &Walk) -> Result<Element> {
        let mut acc = self.group.identity();
        for pair in walk.0.windows(2) {
            let g = self
                .gain(pair[0], pair[1])
                .ok_or(Error::NonAdjacentStep(pair[0], pair[1]))?;
            acc = self.group.mul(acc, g);
        }
        Ok(acc)
    }

    /// `ψ^f(u,v) = f(u)⁻¹ ψ(u,v) f(v)`.
    pub fn apply_switching(&self, f: &SwitchingFunction) -> GainGraph {
        assert_eq!(f.0.len(), self.vertex_count(), "switching function size");
        let grp = &self.group;
        let gains = self
            .oriented_edges()
            .map(|(u, v, g)| grp.mul(grp.mul(grp.inv(f.0[u]), g), f.0[v]))
            .collect();
        Self::from_parts(self.group.clone(), self.graph.clone(), gains)
    }

    /// `ψ ∘ φ` pulled back along a vertex map: the returned graph lives on
    /// `domain` and has gain `ψ(φ(u), φ(v))` on each edge `{u, v}`.
    pub fn pull_back(&self, domain: &SimpleGraph, phi: &[usize]) -> Result<GainGraph> {
        let gains = domain
            .edges()
            .iter()
            .map(|&(u, v)| {
                self.gain(phi[u], phi[v])
                    .ok_or(Error::NonAdjacentStep(phi[u], phi[v]))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(self.group.clone(), domain.clone(), gains))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<GainGraph> {
        let edges: Vec<(usize, usize, Element)> = self
            .oriented_edges()
            .map(|(u, v, g)| (perm[u], perm[v], g))
            .collect();
        GainGraph::new(self.group.clone(), self.vertex_count(), &edges)
    }

    pub fn is_reversal_symmetric(&self) -> bool {
        self.adjacency_matrix().star(&self.group) == self.adjacency_matrix()
    }

    /// `A ∈ M_n(ZG)` with `A_{ij} = ψ(v_i, v_j)` on edges, 0 elsewhere.
    pub fn adjacency_matrix(&self) -> GroupAlgebraMatrix {
        let n = self.vertex_count();
        let grp = &self.group;
        let mut a = GroupAlgebraMatrix::zeros(n, grp);
        for (u, list) in self.out.iter().enumerate() {
            for &(v, g) in list {
                a.set(u, v, GroupAlgebraElement::basis(grp, g));
            }
        }
        a
    }

    /// Serializes in the gain-graph file format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self.group.spec_line() {
            Some(line) => writeln!(s, "{line}").unwrap(),
            None => writeln!(
                s,
                "# group given by table ({} elements)",
                self.group.order()
            )
            .unwrap(),
        }
        writeln!(s, "vertices {}", self.vertex_count()).unwrap();
        for (u, v, g) in self.oriented_edges() {
            if g == self.group.identity() {
                writeln!(s, "edge {} {}", u + 1, v + 1).unwrap();
            } else {
                writeln!(s, "edge {} {} {}", u + 1, v + 1, self.group.literal(g)).unwrap();
            }
        }
        s
    }
}

/// Group header of a gain-graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Table(PathBuf),
}

impl GroupSpec {
    pub fn build(&self, base_dir: Option<&Path>) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(m) => FiniteGroup::cyclic(*m),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::Table(path) => {
                let full = match base_dir {
                    Some(dir) if path.is_relative() => dir.join(path),
                    _ => path.clone(),
                };
                let text = std::fs::read_to_string(&full)
                    .map_err(|e| Error::Io(format!("{}: {e}", full.display())))?;
                parse_group_table(&text)
            }
        }
    }
}

/// Reads `N`, then `N` rows of `N` indices, then optionally `N` names.
pub fn parse_group_table(text: &str) -> Result<FiniteGroup> {
    let tokens: Vec<&str> = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
        .collect();
    let bad = |m: String| Error::NotAGroup(format!("table file: {m}"));
    let n: usize = tokens
        .first()
        .ok_or_else(|| bad("empty".into()))?
        .parse()
        .map_err(|_| bad("order is not an integer".into()))?;
    let body = &tokens[1..];
    if body.len() < n * n {
        return Err(bad(format!("expected {} table entries", n * n)));
    }
    let mut table = Vec::with_capacity(n);
    for row in body[..n * n].chunks(n) {
        table.push(
            row.iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| bad(format!("bad entry `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let rest = &body[n * n..];
    let names = match rest.len() {
        0 => None,
        k if k == n => Some(rest.iter().map(|s| s.to_string()).collect()),
        k => return Err(bad(format!("expected {n} names, found {k}"))),
    };
    FiniteGroup::from_table(&table, names)
}

/// Parses the gain-graph file format; `group table` paths resolve against
/// `base_dir` when given.
pub fn parse_gain_graph_with_base(text: &str, base_dir: Option<&Path>) -> Result<GainGraph> {
    let mut group: Option<Arc<FiniteGroup>> = None;
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Element)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let syntax = |message: String| Error::Syntax {
            line: line_no,
            message,
        };
        let tokens = tokenize(raw);
        let Some(&keyword) = tokens.first() else {
            continue;
        };
        match keyword {
            "group" => {
                if group.is_some() {
                    return Err(syntax("duplicate group line".into()));
                }
                let spec = match tokens.get(1..) {
                    Some(["cyclic", m]) => GroupSpec::Cyclic(
                        m.parse()
                            .map_err(|_| syntax(format!("bad cyclic order `{m}`")))?,
                    ),
                    Some(["symmetric", k]) => GroupSpec::Symmetric(
                        k.parse()
                            .map_err(|_| syntax(format!("bad symmetric degree `{k}`")))?,
                    ),
                    Some(["table", path]) => GroupSpec::Table(PathBuf::from(path)),
                    _ => {
                        return Err(syntax(
                            "expected `group cyclic|symmetric|table <arg>`".into(),
                        ))
                    }
                };
                let g = spec.build(base_dir).map_err(|e| match e {
                    Error::InvalidArgument(m) => syntax(m),
                    other => other,
                })?;
                group = Some(Arc::new(g));
            }
            "vertices" => {
                if n.is_some() {
                    return Err(syntax("duplicate vertices line".into()));
                }
                let [_, count] = tokens[..] else {
                    return Err(syntax("expected `vertices <n>`".into()));
                };
                n = Some(
                    count
                        .parse()
                        .map_err(|_| syntax(format!("bad vertex count `{count}`")))?,
                );
            }
            "edge" => {
                let grp = group
                    .as_ref()
                    .ok_or_else(|| syntax("edge before group line".into()))?;
                let count = n.ok_or_else(|| syntax("edge before vertices line".into()))?;
                let (u, v, lit) = match tokens[1..] {
                    [u, v] => (u, v, None),
                    [u, v, lit] => (u, v, Some(lit)),
                    _ => return Err(syntax("expected `edge <u> <v> [<element>]`".into())),
                };
                let parse_vertex = |s: &str| -> Result<usize> {
                    let x: usize = s.parse().map_err(|_| syntax(format!("bad vertex `{s}`")))?;
                    if x == 0 || x > count {
                        return Err(syntax(format!("vertex {x} out of range 1..={count}")));
                    }
                    Ok(x - 1)
                };
                let (u, v) = (parse_vertex(u)?, parse_vertex(v)?);
                if u == v {
                    return Err(syntax(format!("loop at vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(syntax(format!("duplicate edge {{{}, {}}}", u + 1, v + 1)));
                }
                let g = match lit {
                    None => grp.identity(),
                    Some(l) => grp
                        .parse_element(l)
                        .map_err(|_| syntax(format!("unknown element literal `{l}`")))?,
                };
                edges.push((u, v, g));
            }
            other => return Err(syntax(format!("unknown keyword `{other}`"))),
        }
    }

    let group = group.ok_or_else(|| Error::Syntax {
        line: 0,
        message: "missing group line".into(),
    })?;
    let n = n.ok_or_else(|| Error::Syntax {
        line: 0,
        message: "missing vertices line".into(),
    })?;
    GainGraph::new(group, n, &edges)
}

/// Splits a line into tokens, dropping a `#` comment. On `edge` lines the
/// fourth token may be a `#<index>` element literal.
fn tokenize(raw: &str) -> Vec<&str> {
    let mut tokens = Vec::new();
    for tok in raw.split_whitespace() {
        let literal_slot = tokens.len() == 3 && tokens[0] == "edge";
        if literal_slot
            && tok.len() > 1
            && tok.starts_with('#')
            && tok[1..].bytes().all(|b| b.is_ascii_digit())
        {
            tokens.push(tok);
            continue;
        }
        match tok.find('#') {
            Some(0) => break,
            Some(pos) => {
                tokens.push(&tok[..pos]);
                break;
            }
            None => tokens.push(tok),
        }
    }
    tokens
}

pub fn parse_gain_graph(text: &str) -> Result<GainGraph> {
    parse_gain_graph_with_base(text, None)
}

pub fn read_gain_graph(path: &Path) -> Result<GainGraph> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_gain_graph_with_base(&text, path.parent())
}
