//! Shared helpers for the integration suites: seeded generators, exhaustive
//! enumeration of small graphs/orders/partitions, and an independent
//! brute-force verifier kept deliberately naive (triple loops) so it shares
//! no code path with the library's sweep checker.
#![allow(dead_code)] // each test target uses its own subset

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thinness::graph::Graph;
use thinness::layout::{ClassConstraint, Consistency, Layout, VariantSpec};

/// Seeded generator; `THINNESS_SEED` perturbs every suite for reproducible
/// re-rolls of the randomized tests.
pub fn rng(seed: u64) -> ChaCha8Rng {
    let base: u64 = std::env::var("THINNESS_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    ChaCha8Rng::seed_from_u64(seed ^ base)
}

pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_layout(n: usize, rng: &mut ChaCha8Rng) -> Layout {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let k = rng.gen_range(1..=n.max(1));
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    for v in 0..n {
        let c = rng.gen_range(0..k);
        classes[c].push(v);
    }
    classes.retain(|c| !c.is_empty());
    Layout::new(order, classes)
}

/// All graphs on exactly n labeled vertices, by edge subset.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u64..(1 << pairs.len()) {
        let mut g = Graph::new(n);
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        out.push(g);
    }
    out
}

pub fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    rec(&mut items, 0, f);
}

/// All set partitions of {0..n-1} (restricted growth strings).
pub fn all_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    fn rec(v: usize, n: usize, classes: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            out.push(classes.clone());
            return;
        }
        for c in 0..classes.len() {
            classes[c].push(v);
            rec(v + 1, n, classes, out);
            classes[c].pop();
        }
        classes.push(vec![v]);
        rec(v + 1, n, classes, out);
        classes.pop();
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// Naive reference check of a layout against a variant, by plain triple
/// loops in both directions. Classes are re-listed by first position before
/// the precedence check, mirroring how the minimizers derive class order.
pub fn naive_verify(g: &Graph, l: &Layout, spec: &VariantSpec) -> bool {
    if l.validate(g.n()).is_err() {
        return false;
    }
    let n = g.n();
    let pos = l.positions();
    let cls = l.class_of();
    let ok_dir = |flip: bool| -> bool {
        let p = |v: usize| if flip { n - 1 - pos[v] } else { pos[v] };
        for r in 0..n {
            for s in 0..n {
                for t in 0..n {
                    if p(r) < p(s)
                        && p(s) < p(t)
                        && cls[r] == cls[s]
                        && g.has_edge(r, t)
                        && !g.has_edge(s, t)
                    {
                        return false;
                    }
                }
            }
        }
        true
    };
    if !ok_dir(false) {
        return false;
    }
    if spec.consistency == Consistency::Strong && !ok_dir(true) {
        return false;
    }
    if spec.precedence {
        let mut prev_max: Option<usize> = None;
        for class in &l.classes {
            let mn = class.iter().map(|&v| pos[v]).min().unwrap();
            let mx = class.iter().map(|&v| pos[v]).max().unwrap();
            if mx - mn + 1 != class.len() {
                return false;
            }
            if let Some(pm) = prev_max {
                if mn < pm {
                    return false;
                }
            }
            prev_max = Some(mx);
        }
    }
    match spec.class_constraint {
        ClassConstraint::Any => true,
        ClassConstraint::Independent => l.classes.iter().all(|c| {
            c.iter()
                .enumerate()
                .all(|(i, &u)| c[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        }),
        ClassConstraint::Complete => l.classes.iter().all(|c| {
            c.iter()
                .enumerate()
                .all(|(i, &u)| c[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        }),
    }
}

/// Fully independent oracle: minimum class count by enumerating every
/// (order, partition) pair directly and checking with `naive_verify`.
pub fn exact_by_double_enumeration(g: &Graph, spec: &VariantSpec) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let partitions = all_partitions(n);
    let mut best = usize::MAX;
    for_each_permutation(n, &mut |order| {
        let mut pos = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        for partition in &partitions {
            if partition.len() >= best {
                continue;
            }
            // classes listed by first position
            let mut classes = partition.clone();
            classes.sort_by_key(|c| c.iter().map(|&v| pos[v]).min().unwrap());
            let l = Layout::new(order.to_vec(), classes);
            if naive_verify(g, &l, spec) {
                best = partition.len();
            }
        }
    });
    best
}

/// Random cotree expression with at most `max_leaves` leaves.
pub fn random_cotree(max_leaves: usize, rng: &mut ChaCha8Rng) -> thinness::cograph::CotreeExpr {
    use thinness::cograph::CotreeExpr;
    fn gen(budget: usize, rng: &mut ChaCha8Rng) -> (CotreeExpr, usize) {
        if budget < 2 || rng.gen_bool(0.35) {
            return (CotreeExpr::Leaf, 1);
        }
        let arity = rng.gen_range(2..=3usize.min(budget));
        let mut used = 0;
        let mut children = Vec::new();
        for i in 0..arity {
            let left = budget - used - (arity - 1 - i);
            let (c, u) = gen(left, rng);
            used += u;
            children.push(c);
        }
        let e = if rng.gen_bool(0.5) {
            CotreeExpr::Union(children)
        } else {
            CotreeExpr::Join(children)
        };
        (e, used)
    }
    let leaves = rng.gen_range(1..=max_leaves);
    gen(leaves, rng).0
}

/// Random proper-interval graph with its canonical order, via a unit
/// interval model (centers sorted; adjacency = distance below 1).
pub fn random_proper_interval(n: usize, rng: &mut ChaCha8Rng) -> (Graph, Vec<usize>) {
    let mut centers: Vec<(f64, usize)> = (0..n)
        .map(|v| (rng.gen_range(0.0..(n as f64 / 2.0 + 0.5)), v))
        .collect();
    centers.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if (centers[j].0 - centers[i].0).abs() <= 1.0 {
                g.add_edge(centers[i].1, centers[j].1);
            }
        }
    }
    let order: Vec<usize> = centers.into_iter().map(|(_, v)| v).collect();
    (g, order)
}

/// Random precedence proper 2-thin instance: two proper-interval graphs
/// glued by a monotone staircase of cross edges. Returns the graph and its
/// two-class certificate layout.
pub fn random_prec_proper_2thin(n1: usize, n2: usize, rng: &mut ChaCha8Rng) -> (Graph, Layout) {
    let (h1, o1) = random_proper_interval(n1, rng);
    let (h2, o2) = random_proper_interval(n2, rng);
    let mut g = h1.union(&h2);
    // p: non-decreasing prefix lengths of o2 adjacent to each o1 position
    let mut p = vec![0usize; n1];
    let mut level = 0usize;
    for i in 0..n1 {
        level = (level + rng.gen_range(0..=2)).min(n2);
        p[i] = level;
    }
    for (i, &u) in o1.iter().enumerate() {
        for &w in o2.iter().take(p[i]) {
            g.add_edge(u, n1 + w);
        }
    }
    let order: Vec<usize> = o1.iter().copied().chain(o2.iter().map(|&w| n1 + w)).collect();
    let classes = vec![
        o1.clone(),
        o2.iter().map(|&w| n1 + w).collect::<Vec<usize>>(),
    ];
    (g, Layout::new(order, classes))
}
