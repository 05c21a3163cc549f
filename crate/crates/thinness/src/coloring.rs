//! Ordered-pattern checkers (interval / proper interval / perfect orders),
//! greedy coloring, the perfect-order construction for precedence proper
//! 2-thin certificates, and the two bounded-coloring reductions.

use crate::graph::Graph;
use crate::layout::{verify, Layout, VariantSpec, Violation};
use serde::{Deserialize, Serialize};

/// The six forbidden ordered induced subgraphs: S1/S2 refute an interval
/// order, S1/S2/S3 a proper interval order, S4/S5/S6 a perfect order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pattern {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
}

/// An ordered occurrence of a forbidden pattern; vertices are listed in
/// position order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternHit {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    BadOrder,
    NotProperInterval(PatternHit),
    BadMuBound { v: usize },
    NotACertificate(Violation),
}

impl std::fmt::Display for ColoringError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColoringError::BadOrder => write!(f, "order is not a permutation of the vertices"),
            ColoringError::NotProperInterval(hit) => {
                write!(f, "order is not a proper interval order: {:?} at {:?}", hit.pattern, hit.vertices)
            }
            ColoringError::BadMuBound { v } => write!(f, "mu bound of vertex {v} must be positive"),
            ColoringError::NotACertificate(v) => write!(f, "not a precedence proper 2-thin certificate: {v}"),
        }
    }
}

impl std::error::Error for ColoringError {}

fn check_order(n: usize, order: &[usize]) -> Result<(), ColoringError> {
    if order.len() != n {
        return Err(ColoringError::BadOrder);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(ColoringError::BadOrder);
        }
        seen[v] = true;
    }
    Ok(())
}

fn triple_scan(g: &Graph, order: &[usize], proper: bool) -> Option<PatternHit> {
    let n = order.len();
    for pa in 0..n {
        for pb in pa + 1..n {
            for pc in pb + 1..n {
                let (a, b, c) = (order[pa], order[pb], order[pc]);
                let (ab, ac, bc) = (g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c));
                let pattern = if ac && !ab && !bc {
                    Some(Pattern::S1)
                } else if ac && ab && !bc {
                    Some(Pattern::S2)
                } else if proper && ac && !ab && bc {
                    Some(Pattern::S3)
                } else {
                    None
                };
                if let Some(pattern) = pattern {
                    return Some(PatternHit {
                        pattern,
                        vertices: vec![a, b, c],
                    });
                }
            }
        }
    }
    None
}

/// Is `order` an interval (canonical) order of G? Checks for ordered
/// occurrences of S1/S2 and reports the first one.
pub fn verify_interval_order(g: &Graph, order: &[usize]) -> Result<Option<PatternHit>, ColoringError> {
    check_order(g.n(), order)?;
    Ok(triple_scan(g, order, false))
}

/// Is `order` a proper interval order of G (S1/S2/S3 all absent)?
pub fn verify_proper_interval_order(
    g: &Graph,
    order: &[usize],
) -> Result<Option<PatternHit>, ColoringError> {
    check_order(g.n(), order)?;
    Ok(triple_scan(g, order, true))
}

/// Is `order` a perfect order of G: no induced P_4 a-b-c-d with a before b
/// and d before c? Realized by scanning for the ordered patterns S4/S5/S6.
pub fn verify_perfect_order(g: &Graph, order: &[usize]) -> Result<Option<PatternHit>, ColoringError> {
    check_order(g.n(), order)?;
    let n = order.len();
    for p1 in 0..n {
        for p2 in p1 + 1..n {
            for p3 in p2 + 1..n {
                for p4 in p3 + 1..n {
                    let (w, x, y, z) = (order[p1], order[p2], order[p3], order[p4]);
                    let e12 = g.has_edge(w, x);
                    let e13 = g.has_edge(w, y);
                    let e14 = g.has_edge(w, z);
                    let e23 = g.has_edge(x, y);
                    let e24 = g.has_edge(x, z);
                    let e34 = g.has_edge(y, z);
                    let pattern = if e13 && e24 && e34 && !e12 && !e14 && !e23 {
                        Some(Pattern::S4)
                    } else if e14 && e23 && e34 && !e12 && !e13 && !e24 {
                        Some(Pattern::S5)
                    } else if e12 && e24 && e34 && !e13 && !e14 && !e23 {
                        Some(Pattern::S6)
                    } else {
                        None
                    };
                    if let Some(pattern) = pattern {
                        return Ok(Some(PatternHit {
                            pattern,
                            vertices: vec![w, x, y, z],
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Proper coloring as a map vertex -> color in 1..=k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Greedy coloring along `order`: each vertex takes the least color absent
/// from its already-colored neighborhood. Optimal whenever the order is
/// perfect.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Result<Coloring, ColoringError> {
    check_order(g.n(), order)?;
    let mut colors = vec![0usize; g.n()];
    for &v in order {
        let mut used: Vec<bool> = vec![false; g.degree(v) + 2];
        for u in g.neighbors(v) {
            let c = colors[u];
            if c != 0 && c < used.len() {
                used[c] = true;
            }
        }
        colors[v] = (1..).find(|&c| c >= used.len() || !used[c]).unwrap();
    }
    Ok(Coloring { colors })
}

/// Perfect order for a precedence proper 2-thin certificate: the first
/// class reversed, then the second class in order. The layout must verify
/// as strongly consistent + precedence with at most two classes (a single
/// class is read as an empty second class).
pub fn build_perfect_order(g: &Graph, l: &Layout) -> Result<Vec<usize>, ColoringError> {
    if l.classes.len() > 2 {
        return Err(ColoringError::NotACertificate(Violation::Precedence {
            class: 2,
        }));
    }
    verify(g, l, &VariantSpec::FPP).map_err(ColoringError::NotACertificate)?;
    let pos = l.positions();
    let mut v1: Vec<usize> = l.classes.first().cloned().unwrap_or_default();
    v1.sort_by_key(|&v| std::cmp::Reverse(pos[v]));
    let mut v2: Vec<usize> = l.classes.get(1).cloned().unwrap_or_default();
    v2.sort_by_key(|&v| pos[v]);
    v1.extend(v2);
    Ok(v1)
}

/// A bounded-coloring instance: a graph with a proper interval order of its
/// vertices and a positive color bound per vertex. Bounds are clamped to n
/// on construction, which preserves feasibility.
#[derive(Debug, Clone)]
pub struct MuInstance {
    g: Graph,
    order: Vec<usize>,
    mu: Vec<usize>,
}

impl MuInstance {
    pub fn new(g: Graph, order: Vec<usize>, mu: Vec<usize>) -> Result<MuInstance, ColoringError> {
        if let Some(hit) = verify_proper_interval_order(&g, &order)? {
            return Err(ColoringError::NotProperInterval(hit));
        }
        if mu.len() != g.n() {
            return Err(ColoringError::BadOrder);
        }
        if let Some(v) = (0..g.n()).find(|&v| mu[v] == 0) {
            return Err(ColoringError::BadMuBound { v });
        }
        let n = g.n();
        let mu = mu.into_iter().map(|b| b.min(n)).collect();
        Ok(MuInstance { g, order, mu })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }
}

/// Reduction to coloring on a precedence 2-thin graph: G plus a clique
/// w_1..w_n, with v adjacent to w_i exactly when mu(v) < i. The returned
/// layout (classes: the clique, then V(G); order: w_1..w_n then the proper
/// interval order) verifies as precedence 2-thin, and G is mu-colorable iff
/// the result is n-colorable.
pub fn reduce_gprime(inst: &MuInstance) -> (Graph, Layout) {
    let n = inst.g.n();
    let w = |i: usize| n + i - 1; // w_i, 1-based
    let mut g = Graph::new(2 * n);
    for (u, v) in inst.g.edges() {
        g.add_edge(u, v);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            g.add_edge(w(i), w(j));
        }
    }
    for v in 0..n {
        for i in 1..=n {
            if inst.mu[v] < i {
                g.add_edge(v, w(i));
            }
        }
    }
    let mut order: Vec<usize> = (1..=n).map(w).collect();
    order.extend(inst.order.iter().copied());
    let classes = vec![(1..=n).map(w).collect(), inst.order.clone()];
    (g, Layout::new(order, classes))
}

/// Reduction to coloring on a proper 2-thin graph: G plus n^2 gadget
/// vertices w^i_j arranged so consecutive runs of length n are exactly the
/// maximal cliques, with v_k (the k-th vertex of the order) adjacent to
/// w^k_j exactly when mu(v_k) < j. The returned layout (classes V(G) and
/// the gadget, order w^1_1..w^1_n, v_1, w^2_1.., v_2, ..) verifies as
/// proper 2-thin, and G is mu-colorable iff the result is n-colorable.
pub fn reduce_gdoubleprime(inst: &MuInstance) -> (Graph, Layout) {
    let n = inst.g.n();
    let w = |i: usize, j: usize| n + (i - 1) * n + (j - 1); // w^i_j, 1-based
    let lin = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut g = Graph::new(n + n * n);
    for (u, v) in inst.g.edges() {
        g.add_edge(u, v);
    }
    // gadget: linear positions at distance < n are adjacent, which makes
    // the maximal cliques exactly the stated length-n windows
    for i in 1..=n {
        for j in 1..=n {
            for i2 in 1..=n {
                for j2 in 1..=n {
                    let (p, q) = (lin(i, j), lin(i2, j2));
                    if p < q && q - p < n {
                        g.add_edge(w(i, j), w(i2, j2));
                    }
                }
            }
        }
    }
    for (k0, &vk) in inst.order.iter().enumerate() {
        let k = k0 + 1;
        for j in 1..=n {
            if inst.mu[vk] < j {
                g.add_edge(vk, w(k, j));
            }
        }
    }
    let mut order = Vec::with_capacity(n + n * n);
    for (k0, &vk) in inst.order.iter().enumerate() {
        for j in 1..=n {
            order.push(w(k0 + 1, j));
        }
        order.push(vk);
    }
    let gadget: Vec<usize> = (1..=n).flat_map(|i| (1..=n).map(move |j| w(i, j))).collect();
    let classes = vec![inst.order.clone(), gadget];
    (g, Layout::new(order, classes))
}
