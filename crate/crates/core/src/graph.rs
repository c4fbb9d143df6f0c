//! Simple undirected graphs, the edge-list text format, and generators for
//! the complete, path, cycle, king and grid families.
//!
//! Vertices are dense indices `0..n`. Board families (king, grid) place the
//! square in row `i`, column `j` of an `m × n` board at index `i * n + j`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::RngExt;
use thiserror::Error;

/// Largest order accepted by the bitset-based counters.
pub const MAX_DP_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop on vertex {vertex} rejected")]
    LoopRejected { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
}

/// Immutable simple undirected graph. Equality is structural; the family
/// name tag does not take part in it.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSpec("graph must have at least one vertex".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { line: i + 1, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopRejected { line: i + 1, vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Per-vertex neighbor bitsets, or `None` when the order exceeds
    /// [`MAX_DP_ORDER`].
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.order() > MAX_DP_ORDER {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|l| l.iter().fold(0u64, |m, &v| m | (1u64 << v)))
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal graph order");
        let mut hit = vec![false; n];
        for &p in perm {
            assert!(p < n && !hit[p], "not a permutation");
            hit[p] = true;
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let mut g = Graph::from_edges(n, &edges).expect("permutation preserves simplicity");
        g.name = self.name.clone();
        g
    }

    /// Renders the graph in the edge-list text format read by [`parse_graph`].
    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Lines whose first non-blank character is `#` and blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing header line \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    if n == 0 {
        return Err(GraphError::Parse { line: hline, msg: "vertex count must be at least 1".into() });
    }

    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, text) in lines {
        if edges.len() == m {
            return Err(GraphError::Parse {
                line,
                msg: format!("more than the declared {m} edge lines"),
            });
        }
        let (u, v) = parse_pair(line, text)?;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::LoopRejected { line, vertex: u });
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: last_line,
            msg: format!("expected {m} edge lines, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line,
            msg: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            msg: format!("expected a nonnegative integer for {what}, got {tok:?}"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(GraphError::Parse { line, msg: format!("unexpected trailing token {extra:?}") });
    }
    Ok((a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Complete,
    Path,
    Cycle,
    King,
    Grid,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::King => "king",
            FamilyKind::Grid => "grid",
        }
    }

    pub fn is_board(self) -> bool {
        matches!(self, FamilyKind::King | FamilyKind::Grid)
    }
}

impl FromStr for FamilyKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complete" => Ok(FamilyKind::Complete),
            "path" => Ok(FamilyKind::Path),
            "cycle" => Ok(FamilyKind::Cycle),
            "king" => Ok(FamilyKind::King),
            "grid" => Ok(FamilyKind::Grid),
            other => Err(GraphError::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A member of one of the built-in graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    King { m: usize, n: usize },
    Grid { m: usize, n: usize },
}

impl FamilySpec {
    /// Assembles a spec from a kind and parameters. Board families need `m`.
    pub fn new(kind: FamilyKind, m: Option<usize>, n: usize) -> Result<FamilySpec, GraphError> {
        let spec = match kind {
            FamilyKind::Complete => FamilySpec::Complete(n),
            FamilyKind::Path => FamilySpec::Path(n),
            FamilyKind::Cycle => FamilySpec::Cycle(n),
            FamilyKind::King | FamilyKind::Grid => {
                let m = m.ok_or_else(|| {
                    GraphError::InvalidSpec(format!("{kind} family needs a row count m"))
                })?;
                if kind == FamilyKind::King {
                    FamilySpec::King { m, n }
                } else {
                    FamilySpec::Grid { m, n }
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Complete(_) => FamilyKind::Complete,
            FamilySpec::Path(_) => FamilyKind::Path,
            FamilySpec::Cycle(_) => FamilyKind::Cycle,
            FamilySpec::King { .. } => FamilyKind::King,
            FamilySpec::Grid { .. } => FamilyKind::Grid,
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete(n) | FamilySpec::Path(n) | FamilySpec::Cycle(n) => n,
            FamilySpec::King { m, n } | FamilySpec::Grid { m, n } => m * n,
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidSpec(msg));
        match *self {
            FamilySpec::Complete(0) | FamilySpec::Path(0) => bad(format!("{self}: n must be at least 1")),
            FamilySpec::Cycle(n) if n < 3 => bad(format!("{self}: a cycle needs n >= 3")),
            FamilySpec::King { m, n } | FamilySpec::Grid { m, n } if m == 0 || n == 0 => {
                bad(format!("{self}: board dimensions must be at least 1"))
            }
            _ => Ok(()),
        }
    }

    /// Short identifier such as `king(2,3)`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::King { m, n } => write!(f, "king({m},{n})"),
            FamilySpec::Grid { m, n } => write!(f, "grid({m},{n})"),
        }
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let mut edges = Vec::new();
    let n_vertices = spec.order();
    match *spec {
        FamilySpec::Complete(n) => {
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
        }
        FamilySpec::Path(n) => edges.extend((1..n).map(|v| (v - 1, v))),
        FamilySpec::Cycle(n) => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
        }
        FamilySpec::King { m, n } | FamilySpec::Grid { m, n } => {
            let king = matches!(spec, FamilySpec::King { .. });
            let idx = |i: usize, j: usize| i * n + j;
            for i in 0..m {
                for j in 0..n {
                    if j + 1 < n {
                        edges.push((idx(i, j), idx(i, j + 1)));
                    }
                    if i + 1 < m {
                        edges.push((idx(i, j), idx(i + 1, j)));
                        if king {
                            if j + 1 < n {
                                edges.push((idx(i, j), idx(i + 1, j + 1)));
                            }
                            if j > 0 {
                                edges.push((idx(i, j), idx(i + 1, j - 1)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Graph::from_edges(n_vertices, &edges)?.with_name(spec.label()))
}

/// A random connected graph on `n` vertices: a random recursive spanning
/// tree, plus every other pair independently with probability `p`, under a
/// shuffled vertex numbering.
pub fn random_connected<R: RngExt + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.random_range(0..v);
        edges.push((parent, v));
        for u in 0..v {
            if u != parent && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(n.max(1), &edges).expect("tree edges are simple")
}
