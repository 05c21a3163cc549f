//! Layouts (vertex order + ordered class partition) and the certificate
//! checker for the twelve thinness variants.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Whether the order alone, or the order and its reversal, must be
/// consistent with the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Consistency {
    Consistent,
    Strong,
}

/// Extra structure demanded of every class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassConstraint {
    Any,
    Independent,
    Complete,
}

/// One of the twelve thinness variants: a consistency mode, a precedence
/// flag, and a per-class constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariantSpec {
    pub consistency: Consistency,
    pub precedence: bool,
    pub class_constraint: ClassConstraint,
}

impl VariantSpec {
    pub const THIN: VariantSpec = VariantSpec::new(Consistency::Consistent, false, ClassConstraint::Any);
    pub const PTHIN: VariantSpec = VariantSpec::new(Consistency::Strong, false, ClassConstraint::Any);
    pub const INDTHIN: VariantSpec =
        VariantSpec::new(Consistency::Consistent, false, ClassConstraint::Independent);
    pub const INDPTHIN: VariantSpec =
        VariantSpec::new(Consistency::Strong, false, ClassConstraint::Independent);
    pub const COMPTHIN: VariantSpec =
        VariantSpec::new(Consistency::Consistent, false, ClassConstraint::Complete);
    pub const COMPPTHIN: VariantSpec =
        VariantSpec::new(Consistency::Strong, false, ClassConstraint::Complete);
    pub const FP: VariantSpec = VariantSpec::new(Consistency::Consistent, true, ClassConstraint::Any);
    pub const FPP: VariantSpec = VariantSpec::new(Consistency::Strong, true, ClassConstraint::Any);
    pub const INDFP: VariantSpec =
        VariantSpec::new(Consistency::Consistent, true, ClassConstraint::Independent);
    pub const INDFPP: VariantSpec =
        VariantSpec::new(Consistency::Strong, true, ClassConstraint::Independent);
    pub const COMPFP: VariantSpec =
        VariantSpec::new(Consistency::Consistent, true, ClassConstraint::Complete);
    pub const COMPFPP: VariantSpec =
        VariantSpec::new(Consistency::Strong, true, ClassConstraint::Complete);

    pub const fn new(consistency: Consistency, precedence: bool, class_constraint: ClassConstraint) -> Self {
        VariantSpec {
            consistency,
            precedence,
            class_constraint,
        }
    }

    /// All twelve variants, in the parameter-table row order.
    pub fn all() -> [VariantSpec; 12] {
        [
            Self::THIN,
            Self::PTHIN,
            Self::INDTHIN,
            Self::INDPTHIN,
            Self::COMPTHIN,
            Self::COMPPTHIN,
            Self::FP,
            Self::FPP,
            Self::INDFP,
            Self::INDFPP,
            Self::COMPFP,
            Self::COMPFPP,
        ]
    }

    pub fn name(&self) -> &'static str {
        match (self.consistency, self.precedence, self.class_constraint) {
            (Consistency::Consistent, false, ClassConstraint::Any) => "thin",
            (Consistency::Strong, false, ClassConstraint::Any) => "pthin",
            (Consistency::Consistent, false, ClassConstraint::Independent) => "indthin",
            (Consistency::Strong, false, ClassConstraint::Independent) => "indpthin",
            (Consistency::Consistent, false, ClassConstraint::Complete) => "compthin",
            (Consistency::Strong, false, ClassConstraint::Complete) => "comppthin",
            (Consistency::Consistent, true, ClassConstraint::Any) => "fp",
            (Consistency::Strong, true, ClassConstraint::Any) => "fpp",
            (Consistency::Consistent, true, ClassConstraint::Independent) => "indfp",
            (Consistency::Strong, true, ClassConstraint::Independent) => "indfpp",
            (Consistency::Consistent, true, ClassConstraint::Complete) => "compfp",
            (Consistency::Strong, true, ClassConstraint::Complete) => "compfpp",
        }
    }

    pub fn from_name(name: &str) -> Option<VariantSpec> {
        VariantSpec::all().into_iter().find(|s| s.name() == name)
    }

    /// Does every layout accepted under `self` also satisfy `other`?
    pub fn implies(&self, other: &VariantSpec) -> bool {
        let cons = self.consistency == Consistency::Strong || other.consistency == Consistency::Consistent;
        let prec = self.precedence || !other.precedence;
        let class = self.class_constraint == other.class_constraint
            || other.class_constraint == ClassConstraint::Any;
        cons && prec && class
    }
}

/// A vertex ordering together with an ordered partition into classes — the
/// certificate object every variant is checked against.
///
/// `order[p]` is the vertex at position `p`; classes are listed in
/// precedence order where that matters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layout {
    pub order: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LayoutError {
    OrderNotPermutation,
    ClassesNotPartition,
    EmptyClass(usize),
}

impl std::fmt::Display for LayoutError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LayoutError::OrderNotPermutation => write!(f, "order is not a permutation of the vertices"),
            LayoutError::ClassesNotPartition => write!(f, "classes do not partition the vertex set"),
            LayoutError::EmptyClass(i) => write!(f, "class {i} is empty"),
        }
    }
}

impl std::error::Error for LayoutError {}

impl Layout {
    pub fn new(order: Vec<usize>, classes: Vec<Vec<usize>>) -> Layout {
        Layout { order, classes }
    }

    /// A layout listing the classes in order, with the global order read off
    /// the class concatenation (the natural form for precedence layouts).
    pub fn from_class_sequence(classes: Vec<Vec<usize>>) -> Layout {
        let order = classes.iter().flatten().copied().collect();
        Layout { order, classes }
    }

    pub fn validate(&self, n: usize) -> Result<(), LayoutError> {
        if self.order.len() != n {
            return Err(LayoutError::OrderNotPermutation);
        }
        let mut seen = vec![false; n];
        for &v in &self.order {
            if v >= n || seen[v] {
                return Err(LayoutError::OrderNotPermutation);
            }
            seen[v] = true;
        }
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(LayoutError::EmptyClass(i));
            }
        }
        let mut covered = vec![false; n];
        for class in &self.classes {
            for &v in class {
                if v >= n || covered[v] {
                    return Err(LayoutError::ClassesNotPartition);
                }
                covered[v] = true;
            }
        }
        if covered.iter().any(|&c| !c) {
            return Err(LayoutError::ClassesNotPartition);
        }
        Ok(())
    }

    /// Number of classes.
    pub fn width(&self) -> usize {
        self.classes.len()
    }

    /// Position of each vertex in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// Class index of each vertex.
    pub fn class_of(&self) -> Vec<usize> {
        let mut cls = vec![usize::MAX; self.order.len()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                cls[v] = i;
            }
        }
        cls
    }

    /// Flips the order, and the class sequence with it, so precedence
    /// structure is preserved under reversal.
    pub fn reverse(&self) -> Layout {
        Layout {
            order: self.order.iter().rev().copied().collect(),
            classes: self.classes.iter().rev().cloned().collect(),
        }
    }

    /// Restriction to `keep`: drops all other vertices and any class left
    /// empty, preserving relative order throughout. Vertex ids are kept as
    /// they are (pair with `Graph::induced_subgraph` maps when relabeling).
    pub fn restrict(&self, keep: &[usize]) -> Layout {
        let keep_set: std::collections::HashSet<usize> = keep.iter().copied().collect();
        let order = self.order.iter().copied().filter(|v| keep_set.contains(v)).collect();
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().copied().filter(|v| keep_set.contains(v)).collect::<Vec<_>>())
            .filter(|c: &Vec<usize>| !c.is_empty())
            .collect();
        Layout { order, classes }
    }

    /// Same layout with vertices renamed through `map` (old id -> new id);
    /// vertices mapped to `None` are dropped.
    pub fn relabel(&self, map: &[Option<usize>]) -> Layout {
        let order = self.order.iter().filter_map(|&v| map[v]).collect();
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().filter_map(|&v| map[v]).collect::<Vec<_>>())
            .filter(|c: &Vec<usize>| !c.is_empty())
            .collect();
        Layout { order, classes }
    }
}

/// Witness refuting consistency: positions of `r < s < t` in the checked
/// direction, with `r,s` sharing a class, `(r,t)` an edge and `(s,t)` not.
/// `reversed` marks triples found in the reversal during a strong check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakingTriple {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub reversed: bool,
}

impl BreakingTriple {
    /// Re-checks this triple against a graph and layout (self-validation).
    pub fn holds_in(&self, g: &Graph, l: &Layout) -> bool {
        let pos = l.positions();
        let cls = l.class_of();
        let (pr, ps, pt) = (pos[self.r], pos[self.s], pos[self.t]);
        let ordered = if self.reversed {
            pr > ps && ps > pt
        } else {
            pr < ps && ps < pt
        };
        ordered && cls[self.r] == cls[self.s] && g.has_edge(self.r, self.t) && !g.has_edge(self.s, self.t)
    }
}

/// Failure of the neighborhood-consecutiveness test: for vertex `v` and
/// class `class`, N[v] ∩ (V ∪ {v}) is not consecutive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodGap {
    pub v: usize,
    pub class: usize,
}

/// First sub-check a layout fails under `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    #[serde(rename = "malformed")]
    Malformed(String),
    #[serde(rename = "consistency")]
    Consistency(BreakingTriple),
    #[serde(rename = "precedence")]
    Precedence { class: usize },
    #[serde(rename = "class_not_independent")]
    ClassNotIndependent { class: usize, u: usize, v: usize },
    #[serde(rename = "class_not_complete")]
    ClassNotComplete { class: usize, u: usize, v: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Malformed(e) => write!(f, "malformed layout: {e}"),
            Violation::Consistency(t) if t.reversed => write!(
                f,
                "reversed order broken by triple ({}, {}, {})",
                t.r, t.s, t.t
            ),
            Violation::Consistency(t) => {
                write!(f, "consistency broken by triple ({}, {}, {})", t.r, t.s, t.t)
            }
            Violation::Precedence { class } => write!(f, "class {class} violates precedence"),
            Violation::ClassNotIndependent { class, u, v } => {
                write!(f, "class {class} is not independent: edge ({u},{v})")
            }
            Violation::ClassNotComplete { class, u, v } => {
                write!(f, "class {class} is not complete: non-edge ({u},{v})")
            }
        }
    }
}

/// Finds the first breaking triple of the order (forward direction only),
/// lexicographically by (t, s, r) positions. Assumes a validated layout.
///
/// Sweep: for each vertex t by position, and each class, the class members
/// before t that are adjacent to t must form a suffix of the members before
/// t; the first adjacent-then-nonadjacent step yields the witness.
fn first_breaking_triple(g: &Graph, l: &Layout) -> Option<(usize, usize, usize)> {
    let pos = l.positions();
    let n = g.n();
    // Class members sorted by position, once.
    let mut sorted_classes: Vec<Vec<usize>> = l.classes.clone();
    for class in &mut sorted_classes {
        class.sort_by_key(|&v| pos[v]);
    }
    for pt in 0..n {
        let t = l.order[pt];
        // Best (s_pos, r_pos) for this t across classes.
        let mut best: Option<(usize, usize)> = None;
        for class in &sorted_classes {
            let mut first_adj: Option<usize> = None;
            for &v in class {
                if pos[v] >= pt {
                    break;
                }
                if g.has_edge(v, t) {
                    if first_adj.is_none() {
                        first_adj = Some(pos[v]);
                    }
                } else if let Some(rp) = first_adj {
                    let cand = (pos[v], rp);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                    break;
                }
            }
        }
        if let Some((sp, rp)) = best {
            return Some((l.order[rp], l.order[sp], t));
        }
    }
    None
}

/// Checks whether the order is consistent with the partition: no triple
/// r < s < t with r,s sharing a class, (r,t) an edge and (s,t) a non-edge.
/// Returns the lexicographically first breaking triple otherwise.
pub fn is_consistent(g: &Graph, l: &Layout) -> Result<Option<BreakingTriple>, LayoutError> {
    l.validate(g.n())?;
    Ok(first_breaking_triple(g, l).map(|(r, s, t)| BreakingTriple {
        r,
        s,
        t,
        reversed: false,
    }))
}

/// Checks that both the order and its reversal are consistent with the
/// partition. A triple found in the reversal carries the `reversed` flag.
pub fn is_strongly_consistent(g: &Graph, l: &Layout) -> Result<Option<BreakingTriple>, LayoutError> {
    l.validate(g.n())?;
    if let Some((r, s, t)) = first_breaking_triple(g, l) {
        return Ok(Some(BreakingTriple {
            r,
            s,
            t,
            reversed: false,
        }));
    }
    let rev = l.reverse();
    Ok(first_breaking_triple(g, &rev).map(|(r, s, t)| BreakingTriple {
        r,
        s,
        t,
        reversed: true,
    }))
}

/// Alternative strong-consistency check: for every vertex v and class V,
/// N[v] ∩ (V ∪ {v}) must be consecutive in V ∪ {v} under the order. Agrees
/// with `is_strongly_consistent` on every input.
pub fn check_strong_via_neighborhoods(
    g: &Graph,
    l: &Layout,
) -> Result<Option<NeighborhoodGap>, LayoutError> {
    l.validate(g.n())?;
    let pos = l.positions();
    let mut sorted_classes: Vec<Vec<usize>> = l.classes.clone();
    for class in &mut sorted_classes {
        class.sort_by_key(|&v| pos[v]);
    }
    for v in 0..g.n() {
        for (ci, class) in sorted_classes.iter().enumerate() {
            // V ∪ {v} in position order, marking membership in N[v].
            let mut in_hood = Vec::with_capacity(class.len() + 1);
            let mut inserted_v = false;
            for &u in class {
                if !inserted_v && pos[v] < pos[u] && !class.contains(&v) {
                    in_hood.push(true); // v itself, v ∈ N[v]
                    inserted_v = true;
                }
                in_hood.push(u == v || g.has_edge(u, v));
            }
            if !inserted_v && !class.contains(&v) {
                in_hood.push(true);
            }
            let first = in_hood.iter().position(|&b| b);
            let last = in_hood.iter().rposition(|&b| b);
            if let (Some(a), Some(b)) = (first, last) {
                if in_hood[a..=b].iter().any(|&x| !x) {
                    return Ok(Some(NeighborhoodGap { v, class: ci }));
                }
            }
        }
    }
    Ok(None)
}

/// True iff every class occupies a contiguous interval of positions and the
/// class sequence agrees with position order.
pub fn is_precedence(l: &Layout) -> bool {
    precedence_violation(l).is_none()
}

fn precedence_violation(l: &Layout) -> Option<usize> {
    let pos = l.positions();
    let mut prev_max: Option<usize> = None;
    for (i, class) in l.classes.iter().enumerate() {
        let min = class.iter().map(|&v| pos[v]).min()?;
        let max = class.iter().map(|&v| pos[v]).max()?;
        if max - min + 1 != class.len() {
            return Some(i);
        }
        if let Some(pm) = prev_max {
            if min <= pm {
                return Some(i);
            }
        }
        prev_max = Some(max);
    }
    None
}

pub fn classes_independent(g: &Graph, l: &Layout) -> bool {
    l.classes.iter().all(|c| g.is_independent_set(c))
}

pub fn classes_complete(g: &Graph, l: &Layout) -> bool {
    l.classes.iter().all(|c| g.is_clique(c))
}

fn class_constraint_violation(g: &Graph, l: &Layout, cc: ClassConstraint) -> Option<Violation> {
    for (i, class) in l.classes.iter().enumerate() {
        for (a, &u) in class.iter().enumerate() {
            for &v in &class[a + 1..] {
                match cc {
                    ClassConstraint::Independent if g.has_edge(u, v) => {
                        return Some(Violation::ClassNotIndependent { class: i, u, v });
                    }
                    ClassConstraint::Complete if !g.has_edge(u, v) => {
                        return Some(Violation::ClassNotComplete { class: i, u, v });
                    }
                    _ => {}
                }
            }
        }
    }
    None
}

/// Full certificate check for one variant. Sub-checks run in a fixed order
/// (consistency mode, then precedence, then the class constraint) and the
/// verdict names the first one violated.
pub fn verify(g: &Graph, l: &Layout, spec: &VariantSpec) -> Result<(), Violation> {
    if let Err(e) = l.validate(g.n()) {
        return Err(Violation::Malformed(e.to_string()));
    }
    let triple = match spec.consistency {
        Consistency::Consistent => is_consistent(g, l),
        Consistency::Strong => is_strongly_consistent(g, l),
    }
    .expect("validated above");
    if let Some(t) = triple {
        return Err(Violation::Consistency(t));
    }
    if spec.precedence {
        if let Some(class) = precedence_violation(l) {
            return Err(Violation::Precedence { class });
        }
    }
    if let Some(v) = class_constraint_violation(g, l, spec.class_constraint) {
        return Err(v);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, crown, Graph};

    fn crown_ids(n: usize) -> (Graph, crate::graph::CrownLabeling) {
        crown(n).unwrap()
    }

    #[test]
    fn k1_any_layout_ok() {
        let g = complete(1);
        let l = Layout::new(vec![0], vec![vec![0]]);
        assert_eq!(is_consistent(&g, &l).unwrap(), None);
    }

    #[test]
    fn cr3_two_class_witness_is_consistent() {
        // sigma = (v1, v'2, v'3, v3, v2, v'1), classes {v1,v'3,v2}, {v'2,v3,v'1}.
        let (g, lab) = crown_ids(3);
        let l = Layout::new(
            vec![lab.a(1), lab.b(2), lab.b(3), lab.a(3), lab.a(2), lab.b(1)],
            vec![
                vec![lab.a(1), lab.b(3), lab.a(2)],
                vec![lab.b(2), lab.a(3), lab.b(1)],
            ],
        );
        assert_eq!(is_consistent(&g, &l).unwrap(), None);
        // Also strongly consistent per the small-case constructions.
        assert_eq!(is_strongly_consistent(&g, &l).unwrap(), None);
    }

    #[test]
    fn cr3_breaking_triple_reported() {
        // v1, v2 share a class and precede v'2: (v1,v'2) is an edge while
        // (v2,v'2) is not, so (v1, v2, v'2) breaks.
        let (g, lab) = crown_ids(3);
        let l = Layout::new(
            vec![lab.a(1), lab.a(2), lab.b(3), lab.a(3), lab.b(2), lab.b(1)],
            vec![
                vec![lab.a(1), lab.a(2)],
                vec![lab.b(3), lab.a(3)],
                vec![lab.b(2), lab.b(1)],
            ],
        );
        let t = is_consistent(&g, &l).unwrap().expect("must break");
        assert_eq!((t.r, t.s, t.t), (lab.a(1), lab.a(2), lab.b(2)));
        assert!(t.holds_in(&g, &l));
    }

    #[test]
    fn cr2_single_class_strongly_consistent() {
        // sigma = (v1, v'2, v2, v'1), one class.
        let (g, lab) = crown_ids(2);
        let l = Layout::new(
            vec![lab.a(1), lab.b(2), lab.a(2), lab.b(1)],
            vec![vec![lab.a(1), lab.b(2), lab.a(2), lab.b(1)]],
        );
        assert_eq!(is_strongly_consistent(&g, &l).unwrap(), None);
        assert_eq!(check_strong_via_neighborhoods(&g, &l).unwrap(), None);
    }

    #[test]
    fn edgeless_any_layout_strongly_consistent() {
        let g = Graph::new(4);
        let l = Layout::new(vec![2, 0, 3, 1], vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(is_strongly_consistent(&g, &l).unwrap(), None);
    }

    #[test]
    fn complete_single_class_neighborhood_check() {
        let g = complete(5);
        let l = Layout::new(vec![3, 1, 4, 0, 2], vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(check_strong_via_neighborhoods(&g, &l).unwrap(), None);
        assert_eq!(is_strongly_consistent(&g, &l).unwrap(), None);
    }

    #[test]
    fn precedence_checks() {
        let l = Layout::new(vec![0, 1, 2], vec![vec![0], vec![1], vec![2]]);
        assert!(is_precedence(&l));
        // Interleaved classes {a,c}, {b} with order a,b,c.
        let l = Layout::new(vec![0, 1, 2], vec![vec![0, 2], vec![1]]);
        assert!(!is_precedence(&l));
        // Contiguous classes listed out of position order.
        let l = Layout::new(vec![0, 1, 2], vec![vec![2], vec![0, 1]]);
        assert!(!is_precedence(&l));
    }

    #[test]
    fn class_constraint_checks() {
        let (g, lab) = crown_ids(3);
        let singletons = Layout::new(
            (0..6).collect(),
            (0..6).map(|v| vec![v]).collect(),
        );
        assert!(classes_independent(&g, &singletons));
        assert!(classes_complete(&g, &singletons));

        // Sides are independent but not complete for n >= 2.
        let sides = Layout::new(
            (0..6).collect(),
            vec![lab.side_a().to_vec(), lab.side_b().to_vec()],
        );
        assert!(classes_independent(&g, &sides));
        assert!(!classes_complete(&g, &sides));

        // In complement(CR_2) each side induces K_2.
        let (g2, lab2) = crown_ids(2);
        let c = g2.complement();
        let sides2 = Layout::new(
            (0..4).collect(),
            vec![lab2.side_a().to_vec(), lab2.side_b().to_vec()],
        );
        assert!(classes_complete(&c, &sides2));
    }

    #[test]
    fn verify_dispatch_and_first_violation() {
        let g = complete(3);
        let l = Layout::new(vec![0, 1, 2], vec![vec![0, 1, 2]]);
        assert!(verify(&g, &l, &VariantSpec::COMPTHIN).is_ok());

        // CR_3 thin witness fails indthin: class {v1,v'3,v2} has edge (v1,v'3).
        let (g, lab) = crown_ids(3);
        let l = Layout::new(
            vec![lab.a(1), lab.b(2), lab.b(3), lab.a(3), lab.a(2), lab.b(1)],
            vec![
                vec![lab.a(1), lab.b(3), lab.a(2)],
                vec![lab.b(2), lab.a(3), lab.b(1)],
            ],
        );
        match verify(&g, &l, &VariantSpec::INDTHIN) {
            Err(Violation::ClassNotIndependent { class: 0, .. }) => {}
            other => panic!("expected independence violation, got {other:?}"),
        }
    }

    #[test]
    fn malformed_layouts_rejected() {
        let g = complete(3);
        let not_perm = Layout::new(vec![0, 0, 2], vec![vec![0, 1, 2]]);
        assert!(matches!(
            is_consistent(&g, &not_perm),
            Err(LayoutError::OrderNotPermutation)
        ));
        let not_part = Layout::new(vec![0, 1, 2], vec![vec![0, 1]]);
        assert!(matches!(
            is_consistent(&g, &not_part),
            Err(LayoutError::ClassesNotPartition)
        ));
        let empty = Layout::new(vec![0, 1, 2], vec![vec![0, 1, 2], vec![]]);
        assert!(matches!(is_consistent(&g, &empty), Err(LayoutError::EmptyClass(1))));
    }

    #[test]
    fn reverse_is_involution() {
        let l = Layout::new(vec![2, 0, 1], vec![vec![2], vec![0, 1]]);
        assert_eq!(l.reverse().reverse(), l);
    }

    #[test]
    fn width_and_restrict() {
        let l = Layout::new(vec![2, 0, 1, 3], vec![vec![2, 0], vec![1, 3]]);
        assert_eq!(l.width(), 2);
        let r = l.restrict(&[0, 1]);
        assert_eq!(r.order, vec![0, 1]);
        assert_eq!(r.classes, vec![vec![0], vec![1]]);
    }

    #[test]
    fn layout_json_round_trip() {
        let l = Layout::new(vec![2, 0, 1], vec![vec![2], vec![0, 1]]);
        let text = serde_json::to_string(&l).unwrap();
        assert_eq!(text, r#"{"order":[2,0,1],"classes":[[2],[0,1]]}"#);
        let back: Layout = serde_json::from_str(&text).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn variant_names_round_trip() {
        for spec in VariantSpec::all() {
            assert_eq!(VariantSpec::from_name(spec.name()), Some(spec));
        }
        assert_eq!(VariantSpec::from_name("bogus"), None);
    }
}
