//! Crown graphs CR_n: closed-form values for all twelve thinness variants,
//! constructive witness layouts matching them, and the two-condition
//! characterization of consistent solutions.

use crate::graph::{crown, CrownLabeling, Graph, GraphError, Side};
use crate::layout::{ClassConstraint, Consistency, Layout, LayoutError, VariantSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrownError {
    ZeroSize,
    LabelingMismatch,
    Layout(LayoutError),
}

impl std::fmt::Display for CrownError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CrownError::ZeroSize => write!(f, "crown parameter must be positive"),
            CrownError::LabelingMismatch => write!(f, "graph is not the crown of this labeling"),
            CrownError::Layout(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CrownError {}

impl From<LayoutError> for CrownError {
    fn from(e: LayoutError) -> Self {
        CrownError::Layout(e)
    }
}

/// Tag relative to an order: a vertex is little when it precedes its mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LittleBig {
    Little,
    Big,
}

/// Per-vertex little/big classification for an order of V(CR_n).
pub fn classify_little_big(lab: &CrownLabeling, order: &[usize]) -> Vec<LittleBig> {
    let n2 = 2 * lab.n();
    let mut pos = vec![usize::MAX; n2];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    (0..n2)
        .map(|v| {
            if pos[v] < pos[lab.mirror(v)] {
                LittleBig::Little
            } else {
                LittleBig::Big
            }
        })
        .collect()
}

fn check_crown_labeling(g: &Graph, lab: &CrownLabeling) -> Result<(), CrownError> {
    let n = lab.n();
    if g.n() != 2 * n {
        return Err(CrownError::LabelingMismatch);
    }
    for i in 1..=n {
        for j in 1..=n {
            if g.has_edge(lab.a(i), lab.b(j)) != (i != j) {
                return Err(CrownError::LabelingMismatch);
            }
            if i < j && (g.has_edge(lab.a(i), lab.a(j)) || g.has_edge(lab.b(i), lab.b(j))) {
                return Err(CrownError::LabelingMismatch);
            }
        }
    }
    Ok(())
}

/// A little vertex that is not the first of its side inside its class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Condition1Violation {
    pub v: usize,
    pub class: usize,
}

/// A class pair v_i (side A), v'_j (side B) together with the later vertex
/// v'_z (resp. v_z) that refutes the condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Condition2Violation {
    pub on_a: usize,
    pub on_b: usize,
    pub witness: usize,
}

/// First condition of the consistency characterization: in every class,
/// each little vertex is the first vertex of its side within the class.
pub fn check_condition1(
    g: &Graph,
    lab: &CrownLabeling,
    l: &Layout,
) -> Result<Option<Condition1Violation>, CrownError> {
    check_crown_labeling(g, lab)?;
    l.validate(g.n())?;
    let pos = l.positions();
    let tags = classify_little_big(lab, &l.order);
    for (ci, class) in l.classes.iter().enumerate() {
        for &v in class {
            if tags[v] == LittleBig::Little {
                let first_same_side = class
                    .iter()
                    .copied()
                    .filter(|&u| lab.side(u) == lab.side(v))
                    .min_by_key(|&u| pos[u])
                    .unwrap();
                if first_same_side != v {
                    return Ok(Some(Condition1Violation { v, class: ci }));
                }
            }
        }
    }
    Ok(None)
}

/// Second condition: for v_i, v'_j in one class there is no v'_z with z != i
/// and v_i < v'_j < v'_z, nor (mirrored) v_z with z != j and v'_j < v_i < v_z.
pub fn check_condition2(
    g: &Graph,
    lab: &CrownLabeling,
    l: &Layout,
) -> Result<Option<Condition2Violation>, CrownError> {
    check_crown_labeling(g, lab)?;
    l.validate(g.n())?;
    let pos = l.positions();
    for class in &l.classes {
        for &u in class {
            if lab.side(u) != Side::A {
                continue;
            }
            for &w in class {
                if lab.side(w) != Side::B {
                    continue;
                }
                let (i, j) = (lab.index(u), lab.index(w));
                if pos[u] < pos[w] {
                    // look for v'_z, z != i, after w
                    for z in 1..=lab.n() {
                        if z != i && pos[lab.b(z)] > pos[w] {
                            return Ok(Some(Condition2Violation {
                                on_a: u,
                                on_b: w,
                                witness: lab.b(z),
                            }));
                        }
                    }
                } else {
                    // v'_j < v_i: look for v_z, z != j, after u
                    for z in 1..=lab.n() {
                        if z != j && pos[lab.a(z)] > pos[u] {
                            return Ok(Some(Condition2Violation {
                                on_a: u,
                                on_b: w,
                                witness: lab.a(z),
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The exact value of a thinness variant on CR_n, in closed form.
pub fn variant_value(spec: &VariantSpec, n: usize) -> Result<usize, CrownError> {
    if n == 0 {
        return Err(CrownError::ZeroSize);
    }
    let value = match (spec.consistency, spec.precedence, spec.class_constraint) {
        (Consistency::Consistent, false, ClassConstraint::Any) => n.saturating_sub(1).max(1),
        (Consistency::Strong, false, ClassConstraint::Any) => {
            if n % 2 == 1 && n >= 5 {
                n
            } else {
                n.saturating_sub(1).max(1)
            }
        }
        (_, false, ClassConstraint::Independent) => n,
        (_, false, ClassConstraint::Complete) => match n {
            1 | 2 => 2,
            3 => 3,
            _ => 2 * n - 4,
        },
        (Consistency::Consistent, true, ClassConstraint::Any) => n.saturating_sub(1).max(1),
        (Consistency::Strong, true, ClassConstraint::Any) => match n {
            1 | 2 => 1,
            3 => 3,
            _ => n + 1,
        },
        (_, true, ClassConstraint::Independent) => {
            if n == 1 {
                1
            } else {
                n + 1
            }
        }
        (_, true, ClassConstraint::Complete) => {
            if n == 1 {
                2
            } else {
                2 * n - 2
            }
        }
    };
    Ok(value)
}

// 1-based vertex ids of CR_n under the canonical labeling.
fn va(i: usize) -> usize {
    i - 1
}

fn vb(n: usize, i: usize) -> usize {
    n + i - 1
}

/// Strongly consistent layouts for n <= 4 with max(1, n-1) classes.
fn thin_small(n: usize) -> Layout {
    let a = va;
    let b = |i| vb(n, i);
    match n {
        1 => Layout::new(vec![a(1), b(1)], vec![vec![a(1), b(1)]]),
        2 => Layout::new(
            vec![a(1), b(2), a(2), b(1)],
            vec![vec![a(1), b(2), a(2), b(1)]],
        ),
        3 => Layout::new(
            vec![a(1), b(2), b(3), a(3), a(2), b(1)],
            vec![vec![a(1), b(3), a(2)], vec![b(2), a(3), b(1)]],
        ),
        4 => Layout::new(
            vec![a(1), b(3), a(4), b(4), b(2), a(2), a(3), b(1)],
            vec![
                vec![a(1), b(2), b(1)],
                vec![b(3), b(4), a(3)],
                vec![a(4), a(2)],
            ],
        ),
        _ => unreachable!(),
    }
}

/// Strongly consistent layout with n-1 classes for even n >= 6: the n = 4
/// solution with the remaining vertices inserted in two-vertex classes.
fn strong_even(n: usize) -> Layout {
    debug_assert!(n >= 6 && n.is_multiple_of(2));
    let a = va;
    let b = |i| vb(n, i);
    let mut classes = vec![
        vec![a(1), b(2), b(1)],
        vec![b(3), b(4), a(3)],
        vec![a(4), a(2)],
        vec![a(5), a(n)],
        vec![b(6), b(5)],
    ];
    let mut middle = vec![b(6), b(5)];
    let mut i = 7;
    while i < n {
        middle.extend([a(i), a(i - 1), b(i + 1), b(i)]);
        classes.push(vec![a(i), a(i - 1)]);
        classes.push(vec![b(i + 1), b(i)]);
        i += 2;
    }
    let mut order = vec![a(1), b(3), a(4), b(4), a(5)];
    order.extend(middle);
    order.extend([a(n), b(2), a(2), a(3), b(1)]);
    Layout::new(order, classes)
}

/// Strongly consistent layout with n classes for odd n >= 5.
fn strong_odd(n: usize) -> Layout {
    debug_assert!(n >= 5 && n % 2 == 1);
    let a = va;
    let b = |i| vb(n, i);
    let mut classes = vec![vec![a(1), b(n)]];
    let mut order = vec![a(1)];
    let mut i = 2;
    while i < n {
        order.extend([b(i), b(i - 1), a(i + 1), a(i)]);
        classes.push(vec![b(i), b(i - 1)]);
        classes.push(vec![a(i + 1), a(i)]);
        i += 2;
    }
    order.push(b(n));
    Layout::new(order, classes)
}

/// Consistent precedence layout with max(1, n-1) classes, every n.
fn fp_layout(n: usize) -> Layout {
    let a = va;
    let b = |i| vb(n, i);
    let classes: Vec<Vec<usize>> = match n {
        1 => vec![vec![a(1), b(1)]],
        2 => vec![vec![a(1), b(2), a(2), b(1)]],
        3 => vec![vec![b(1)], vec![a(2), b(3), a(1), b(2), a(3)]],
        4 => vec![
            vec![b(1)],
            vec![a(2), a(1)],
            vec![b(3), a(4), b(2), a(3), b(4)],
        ],
        _ => {
            let mut cs = vec![vec![b(1)], vec![a(2), a(1)], vec![b(3), b(2)]];
            for i in 4..=n - 2 {
                if i % 2 == 0 {
                    cs.push(vec![a(i), a(i - 1)]);
                } else {
                    cs.push(vec![b(i), b(i - 1)]);
                }
            }
            if n.is_multiple_of(2) {
                cs.push(vec![b(n - 1), a(n), b(n - 2), a(n - 1), b(n)]);
            } else {
                cs.push(vec![a(n - 1), b(n), a(n - 2), b(n - 1), a(n)]);
            }
            cs
        }
    };
    Layout::from_class_sequence(classes)
}

/// Strongly consistent precedence layout matching the fpp value.
fn fpp_layout(n: usize) -> Layout {
    let a = va;
    let b = |i| vb(n, i);
    let classes: Vec<Vec<usize>> = match n {
        1 => vec![vec![a(1), b(1)]],
        2 => vec![vec![a(1), b(2), a(2), b(1)]],
        3 => vec![vec![a(1)], vec![b(2), a(3), b(1), a(2)], vec![b(3)]],
        _ => {
            let mut cs = vec![vec![a(1)]];
            for i in 2..=n {
                if i % 2 == 0 {
                    cs.push(vec![b(i), b(i - 1)]);
                } else {
                    cs.push(vec![a(i), a(i - 1)]);
                }
            }
            cs.push(if n.is_multiple_of(2) { vec![a(n)] } else { vec![b(n)] });
            cs
        }
    };
    Layout::from_class_sequence(classes)
}

/// Strongly consistent layout into n independent classes (inductive).
fn ind_layout(n: usize) -> Layout {
    let a = va;
    let b = |i| vb(n, i);
    fn build(n: usize, k: usize, a: &dyn Fn(usize) -> usize, b: &dyn Fn(usize) -> usize) -> (Vec<usize>, Vec<Vec<usize>>) {
        match k {
            1 => (vec![a(1), b(1)], vec![vec![a(1), b(1)]]),
            2 => (
                vec![a(1), b(2), a(2), b(1)],
                vec![vec![a(1), a(2)], vec![b(1), b(2)]],
            ),
            _ if k % 2 == 1 => {
                let (inner, mut classes) = build(n, k - 1, a, b);
                let mut order = vec![a(k)];
                order.extend(inner);
                order.push(b(k));
                classes.push(vec![a(k), b(k)]);
                (order, classes)
            }
            _ => {
                let (mut order, mut classes) = build(n, k - 2, a, b);
                order.extend([a(k - 1), b(k), a(k), b(k - 1)]);
                classes.push(vec![a(k - 1), a(k)]);
                classes.push(vec![b(k - 1), b(k)]);
                (order, classes)
            }
        }
    }
    let (order, classes) = build(n, n, &a, &b);
    Layout::new(order, classes)
}

/// Strongly consistent layout into complete classes matching the
/// complete-thinness value.
fn comp_layout(n: usize) -> Layout {
    let a = va;
    let b = |i| vb(n, i);
    match n {
        1 => Layout::new(vec![a(1), b(1)], vec![vec![a(1)], vec![b(1)]]),
        2 => Layout::new(
            vec![a(1), b(2), a(2), b(1)],
            vec![vec![a(1), b(2)], vec![a(2), b(1)]],
        ),
        3 => Layout::new(
            vec![a(1), b(2), a(3), b(1), a(2), b(3)],
            vec![vec![a(1), b(3)], vec![b(2), a(3)], vec![b(1), a(2)]],
        ),
        _ => {
            let mut order = vec![b(1), b(2)];
            order.extend((5..=n).map(b));
            order.extend([a(4), a(3)]);
            order.extend((5..=n).map(a));
            order.extend([a(2), a(1), b(3), b(4)]);
            let mut classes = vec![
                vec![b(1), a(2)],
                vec![b(2), a(1)],
                vec![a(4), b(3)],
                vec![a(3), b(4)],
            ];
            classes.extend((5..=n).map(|i| vec![b(i)]));
            classes.extend((5..=n).map(|i| vec![a(i)]));
            Layout::new(order, classes)
        }
    }
}

/// Strongly consistent precedence layout into independent classes matching
/// the precedence independent value.
fn indfp_layout(n: usize) -> Layout {
    let a = va;
    let b = |i| vb(n, i);
    let classes: Vec<Vec<usize>> = match n {
        1 => vec![vec![a(1), b(1)]],
        2 => vec![vec![a(1)], vec![b(2), b(1)], vec![a(2)]],
        _ => {
            let mut cs = vec![vec![a(1)]];
            let top = if n % 2 == 1 { n - 2 } else { n - 3 };
            let mut i = 1;
            while i <= top {
                cs.push(vec![b(i + 1), b(i)]);
                cs.push(vec![a(i + 2), a(i + 1)]);
                i += 2;
            }
            if n % 2 == 1 {
                cs.push(vec![b(n)]);
            } else {
                cs.push(vec![b(n), b(n - 1)]);
                cs.push(vec![a(n)]);
            }
            cs
        }
    };
    Layout::from_class_sequence(classes)
}

/// Strongly consistent precedence layout into complete classes matching the
/// precedence complete value.
fn compfp_layout(n: usize) -> Layout {
    let a = va;
    let b = |i| vb(n, i);
    if n == 1 {
        return Layout::from_class_sequence(vec![vec![a(1)], vec![b(1)]]);
    }
    let mut classes: Vec<Vec<usize>> = (3..=n).map(|i| vec![b(i)]).collect();
    classes.push(vec![a(1), b(2)]);
    classes.push(vec![a(2), b(1)]);
    classes.extend((3..=n).map(|i| vec![a(i)]));
    Layout::from_class_sequence(classes)
}

/// A witness layout for one variant of CR_n, with exactly `variant_value`
/// classes, satisfying `verify` for the variant.
pub fn construct(spec: &VariantSpec, n: usize) -> Result<Layout, CrownError> {
    if n == 0 {
        return Err(CrownError::ZeroSize);
    }
    let layout = match (spec.consistency, spec.precedence, spec.class_constraint) {
        (Consistency::Consistent, false, ClassConstraint::Any) => match n {
            1..=4 => thin_small(n),
            _ if n.is_multiple_of(2) => strong_even(n),
            // odd n >= 5: the precedence construction is consistent with
            // n-1 classes, matching the thin value
            _ => fp_layout(n),
        },
        (Consistency::Strong, false, ClassConstraint::Any) => match n {
            1..=4 => thin_small(n),
            _ if n.is_multiple_of(2) => strong_even(n),
            _ => strong_odd(n),
        },
        (_, false, ClassConstraint::Independent) => ind_layout(n),
        (_, false, ClassConstraint::Complete) => comp_layout(n),
        (Consistency::Consistent, true, ClassConstraint::Any) => fp_layout(n),
        (Consistency::Strong, true, ClassConstraint::Any) => fpp_layout(n),
        (_, true, ClassConstraint::Independent) => indfp_layout(n),
        (_, true, ClassConstraint::Complete) => compfp_layout(n),
    };
    Ok(layout)
}

/// Convenience: CR_n together with its labeling.
pub fn crown_graph(n: usize) -> Result<(Graph, CrownLabeling), GraphError> {
    crown(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{is_consistent, is_strongly_consistent, verify};

    #[test]
    fn crown_value_spot_checks() {
        let t = |name: &str, n: usize| {
            variant_value(&VariantSpec::from_name(name).unwrap(), n).unwrap()
        };
        assert_eq!(t("thin", 5), 4);
        assert_eq!(t("pthin", 3), 2);
        assert_eq!(t("indfp", 2), 3);
        assert_eq!(t("compfp", 3), 4);
        assert_eq!(t("fpp", 4), 5);
        // full CR_1..CR_3 columns
        for (name, cols) in [
            ("thin", [1, 1, 2]),
            ("pthin", [1, 1, 2]),
            ("indthin", [1, 2, 3]),
            ("indpthin", [1, 2, 3]),
            ("compthin", [2, 2, 3]),
            ("comppthin", [2, 2, 3]),
            ("fp", [1, 1, 2]),
            ("fpp", [1, 1, 3]),
            ("indfp", [1, 3, 4]),
            ("indfpp", [1, 3, 4]),
            ("compfp", [2, 2, 4]),
            ("compfpp", [2, 2, 4]),
        ] {
            let spec = VariantSpec::from_name(name).unwrap();
            for (i, &v) in cols.iter().enumerate() {
                assert_eq!(variant_value(&spec, i + 1).unwrap(), v, "{name} CR_{}", i + 1);
            }
        }
        assert!(variant_value(&VariantSpec::THIN, 0).is_err());
    }

    #[test]
    fn conditions_on_thin_witness() {
        let (g, lab) = crown(3).unwrap();
        let l = thin_small(3);
        assert_eq!(check_condition1(&g, &lab, &l).unwrap(), None);
        assert_eq!(check_condition2(&g, &lab, &l).unwrap(), None);
    }

    #[test]
    fn condition1_fails_for_two_littles_in_one_class() {
        // Two little same-side vertices sharing a class cannot happen in a
        // consistent solution.
        let (g, lab) = crown(3).unwrap();
        let l = Layout::new(
            vec![lab.a(1), lab.a(2), lab.b(3), lab.a(3), lab.b(2), lab.b(1)],
            vec![
                vec![lab.a(1), lab.a(2)],
                vec![lab.b(3), lab.a(3)],
                vec![lab.b(2), lab.b(1)],
            ],
        );
        let v = check_condition1(&g, &lab, &l).unwrap().expect("violation");
        assert_eq!(v.v, lab.a(2));
        assert!(is_consistent(&g, &l).unwrap().is_some());
    }

    #[test]
    fn labeling_mismatch_detected() {
        let (g, lab) = crown(3).unwrap();
        let (other, _) = crate::graph::grid(2, 3).unwrap();
        let l = thin_small(3);
        assert!(matches!(
            check_condition1(&other, &lab, &l),
            Err(CrownError::LabelingMismatch)
        ));
        drop(g);
    }

    #[test]
    fn classify_and_reverse() {
        let (_, lab) = crown(2).unwrap();
        let order = vec![lab.a(1), lab.b(1), lab.b(2), lab.a(2)];
        let tags = classify_little_big(&lab, &order);
        assert_eq!(tags[lab.a(1)], LittleBig::Little);
        assert_eq!(tags[lab.b(1)], LittleBig::Big);
        assert_eq!(tags[lab.b(2)], LittleBig::Little);
        let rev: Vec<usize> = order.iter().rev().copied().collect();
        let rtags = classify_little_big(&lab, &rev);
        for v in 0..4 {
            assert_ne!(tags[v], rtags[v]);
        }
    }

    #[test]
    fn construct_matches_table_small() {
        for spec in VariantSpec::all() {
            for n in 1..=6 {
                let (g, _) = crown(n).unwrap();
                let l = construct(&spec, n).unwrap();
                assert!(
                    verify(&g, &l, &spec).is_ok(),
                    "construct({}, {n}) must verify",
                    spec.name()
                );
                assert_eq!(
                    l.width(),
                    variant_value(&spec, n).unwrap(),
                    "construct({}, {n}) width",
                    spec.name()
                );
            }
        }
    }

    #[test]
    fn construct_examples() {
        // thin witness for CR_6 comes from the even algorithm and is even
        // strongly consistent, with 5 classes.
        let (g, _) = crown(6).unwrap();
        let l = construct(&VariantSpec::THIN, 6).unwrap();
        assert_eq!(l.width(), 5);
        assert_eq!(is_strongly_consistent(&g, &l).unwrap(), None);

        // pthin witness for CR_5: strongly consistent, 5 classes.
        let (g, _) = crown(5).unwrap();
        let l = construct(&VariantSpec::PTHIN, 5).unwrap();
        assert_eq!(l.width(), 5);
        assert_eq!(is_strongly_consistent(&g, &l).unwrap(), None);

        // indfpp witness for CR_4: 5 independent classes, precedence, strong.
        let (g, _) = crown(4).unwrap();
        let l = construct(&VariantSpec::INDFPP, 4).unwrap();
        assert_eq!(l.width(), 5);
        assert!(verify(&g, &l, &VariantSpec::INDFPP).is_ok());
    }

    #[test]
    fn thin_witness_odd_n_not_strong() {
        // Any consistent 4-class solution of CR_5 must fail strong
        // consistency, because pthin(CR_5) = 5.
        let (g, _) = crown(5).unwrap();
        let l = construct(&VariantSpec::THIN, 5).unwrap();
        assert_eq!(l.width(), 4);
        assert_eq!(is_consistent(&g, &l).unwrap(), None);
        assert!(is_strongly_consistent(&g, &l).unwrap().is_some());
    }
}
