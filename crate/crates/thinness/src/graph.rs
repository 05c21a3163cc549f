//! Undirected simple graphs with O(1) adjacency tests, family generators,
//! and the complement / union / join / induced-subgraph operators.

use crate::bits::Bits;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    ZeroSize(&'static str),
    VertexOutOfRange { v: usize, n: usize },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
}

impl std::fmt::Display for GraphError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphError::ZeroSize(what) => write!(f, "{what} requires a positive size"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u},{v})"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Undirected simple graph on vertices `0..n`. Adjacency is stored as one
/// bit row per vertex, so edge tests are O(1) and neighborhood scans are
/// O(n/64). Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Bits>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            m: 0,
            adj: (0..n).map(|_| Bits::new(n)).collect(),
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    /// Adds an edge, panicking on self-loops, duplicates or bad vertices.
    /// Generators use this; untrusted input goes through `with_edges`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).unwrap();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter()
    }

    pub fn adjacency(&self, u: usize) -> &Bits {
        &self.adj[u]
    }

    /// Edges as (u,v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.m == 0
    }

    /// Is `set` a clique?
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Is `set` an independent set?
    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` are relabeled by offset `self.n`.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Join: disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// Subgraph induced by `set`, relabeled contiguously in ascending id
    /// order. Also returns the old-id-to-new-id map.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        let mut keep: Vec<usize> = set.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for &v in keep[i + 1..].iter() {
                if self.has_edge(u, v) {
                    g.add_edge(old_to_new[u].unwrap(), old_to_new[v].unwrap());
                }
            }
        }
        Ok((g, old_to_new))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Serialization mirror: `{"n": .., "edges": [[u,v], ..]}` with u < v
/// normalized on write; the reader accepts either endpoint order.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Graph, D::Error> {
        let raw = GraphJson::deserialize(de)?;
        Graph::with_edges(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

/// Which side of the crown bipartition a vertex lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Structured identities for the crown graph CR_n: side A holds v_1..v_n,
/// side B holds v'_1..v'_n, and `mirror` maps v_i to its unique non-neighbor
/// v'_i across the bipartition.
#[derive(Debug, Clone)]
pub struct CrownLabeling {
    n: usize,
    side_a: Vec<usize>,
    side_b: Vec<usize>,
    mirror: Vec<usize>,
    side: Vec<Side>,
}

impl CrownLabeling {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex id of v_i (1-based i).
    pub fn a(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.n);
        self.side_a[i - 1]
    }

    /// Vertex id of v'_i (1-based i).
    pub fn b(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.n);
        self.side_b[i - 1]
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }

    pub fn mirror(&self, v: usize) -> usize {
        self.mirror[v]
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    /// The index i such that v is v_i or v'_i (1-based).
    pub fn index(&self, v: usize) -> usize {
        if v < self.n {
            v + 1
        } else {
            v - self.n + 1
        }
    }
}

/// Crown graph CR_n: K_{n,n} minus a perfect matching. Vertex numbering is
/// v_i = i-1 and v'_i = n+i-1, so v_i is adjacent to v'_j exactly when i != j.
pub fn crown(n: usize) -> Result<(Graph, CrownLabeling), GraphError> {
    if n == 0 {
        return Err(GraphError::ZeroSize("crown"));
    }
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                g.add_edge(i, n + j);
            }
        }
    }
    let labeling = CrownLabeling {
        n,
        side_a: (0..n).collect(),
        side_b: (n..2 * n).collect(),
        mirror: (0..2 * n).map(|v| if v < n { v + n } else { v - n }).collect(),
        side: (0..2 * n).map(|v| if v < n { Side::A } else { Side::B }).collect(),
    };
    Ok((g, labeling))
}

/// Row/column identities for the grid GR_{n,m}; vertex (i,j) has id
/// (i-1)*m + (j-1) with 1-based coordinates.
#[derive(Debug, Clone, Copy)]
pub struct GridLabeling {
    rows: usize,
    cols: usize,
}

impl GridLabeling {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vertex(&self, i: usize, j: usize) -> usize {
        assert!(1 <= i && i <= self.rows && 1 <= j && j <= self.cols);
        (i - 1) * self.cols + (j - 1)
    }

    /// 1-based (row, column) of a vertex id.
    pub fn coord(&self, v: usize) -> (usize, usize) {
        assert!(v < self.rows * self.cols);
        (v / self.cols + 1, v % self.cols + 1)
    }
}

/// Grid graph GR_{n,m}: vertices (i,j) for 1 <= i <= n, 1 <= j <= m, with an
/// edge exactly when the coordinates differ by one in a single component.
pub fn grid(n: usize, m: usize) -> Result<(Graph, GridLabeling), GraphError> {
    if n == 0 || m == 0 {
        return Err(GraphError::ZeroSize("grid"));
    }
    let labeling = GridLabeling { rows: n, cols: m };
    let mut g = Graph::new(n * m);
    for i in 1..=n {
        for j in 1..=m {
            if j < m {
                g.add_edge(labeling.vertex(i, j), labeling.vertex(i, j + 1));
            }
            if i < n {
                g.add_edge(labeling.vertex(i, j), labeling.vertex(i + 1, j));
            }
        }
    }
    Ok((g, labeling))
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut g = Graph::new(p + q);
    for u in 0..p {
        for v in 0..q {
            g.add_edge(u, p + v);
        }
    }
    g
}

/// nK_2: a perfect matching on 2n vertices, edges (2i, 2i+1).
pub fn matching_nk2(n: usize) -> Graph {
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.add_edge(2 * i, 2 * i + 1);
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}
