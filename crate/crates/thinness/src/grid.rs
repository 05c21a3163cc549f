//! Grid graphs GR_{n,m}: bound formulas for thinness and precedence
//! thinness, and the three constructive layouts (two-row band partition for
//! thinness, singleton-plus-caterpillar for GR_{2,n}, claw partition for
//! square grids).

use crate::graph::{grid, GraphError};
use crate::layout::Layout;
use std::collections::HashMap;

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Lower and upper bounds for thin(GR_{n,m}); dimensions are swapped so the
/// smaller one drives the formulas, and the lower bound is clamped to 1.
pub fn thin_bounds(n: usize, m: usize) -> Result<(usize, usize), GraphError> {
    if n == 0 || m == 0 {
        return Err(GraphError::ZeroSize("grid"));
    }
    let small = n.min(m);
    Ok((ceil_div(small - 1, 3).max(1), ceil_div(small + 1, 2)))
}

/// Scheme coordinates use `rows <= cols`. Class of cell (x, y), 1-based:
/// odd rows belong to the class of their band, even rows split by column
/// parity between the bands above and below.
fn band_class(x: usize, y: usize) -> usize {
    if x % 2 == 1 {
        x.div_ceil(2)
    } else if (x / 2) % 2 == y % 2 {
        x / 2
    } else {
        x / 2 + 1
    }
}

/// Internal order of band class `i`: columns ascending; in a column of
/// matching parity the row below comes first, then the row above, then the
/// middle row.
fn band_class_order(i: usize, rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for y in 1..=cols {
        if y % 2 == i % 2 {
            for x in [2 * i, 2 * i - 2, 2 * i - 1] {
                if (1..=rows).contains(&x) {
                    out.push((x, y));
                }
            }
        } else if (1..=rows).contains(&(2 * i - 1)) {
            out.push((2 * i - 1, y));
        }
    }
    out
}

/// Joint order of classes i and i+1, following the repeating merge pattern
/// (truncated at the boundary): for each column j of the upper band's
/// parity, (2i+2,j), (2i,j), (2i-2,j-1), (2i-1,j-1), (2i-1,j), (2i,j+1),
/// (2i+1,j), (2i+1,j+1).
fn band_pair_merge(i: usize, rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut j = if (i + 1).is_multiple_of(2) { 0 } else { 1 };
    while j <= cols + 1 {
        let unit: [(isize, isize); 8] = [
            (2 * i as isize + 2, j as isize),
            (2 * i as isize, j as isize),
            (2 * i as isize - 2, j as isize - 1),
            (2 * i as isize - 1, j as isize - 1),
            (2 * i as isize - 1, j as isize),
            (2 * i as isize, j as isize + 1),
            (2 * i as isize + 1, j as isize),
            (2 * i as isize + 1, j as isize + 1),
        ];
        for (x, y) in unit {
            if x >= 1 && y >= 1 && x as usize <= rows && y as usize <= cols {
                out.push((x as usize, y as usize));
            }
        }
        j += 2;
    }
    out
}

/// Consistent layout of GR_{n,m} with exactly ceil((min(n,m)+1)/2) classes.
///
/// Classes are built per the band scheme; the global order starts from the
/// first class and inserts each next class using the pairwise merge
/// pattern, anchoring every inserted vertex right after its predecessor
/// from the previous class.
pub fn thin_layout(n: usize, m: usize) -> Result<Layout, GraphError> {
    if n == 0 || m == 0 {
        return Err(GraphError::ZeroSize("grid"));
    }
    let (_, lab) = grid(n, m)?;
    let swapped = n > m;
    let (rows, cols) = (n.min(m), n.max(m));
    let k = ceil_div(rows + 1, 2);

    let mut global: Vec<(usize, usize)> = band_class_order(1, rows, cols);
    for i in 1..k {
        let merged = band_pair_merge(i, rows, cols);
        let mut front: Vec<(usize, usize)> = Vec::new();
        let mut after: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        let mut anchor: Option<(usize, usize)> = None;
        for cell in merged {
            if band_class(cell.0, cell.1) == i {
                anchor = Some(cell);
            } else {
                match anchor {
                    None => front.push(cell),
                    Some(a) => after.entry(a).or_default().push(cell),
                }
            }
        }
        let mut next = front;
        for cell in global {
            next.push(cell);
            if let Some(tail) = after.remove(&cell) {
                next.extend(tail);
            }
        }
        global = next;
    }

    let to_vertex = |(x, y): (usize, usize)| {
        if swapped {
            lab.vertex(y, x)
        } else {
            lab.vertex(x, y)
        }
    };
    let order: Vec<usize> = global.iter().copied().map(to_vertex).collect();
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &cell in &global {
        classes[band_class(cell.0, cell.1) - 1].push(to_vertex(cell));
    }
    Ok(Layout::new(order, classes))
}

/// fp(GR_{2,n}) = ceil((n+1)/2).
pub fn fp_gr2_value(n: usize) -> usize {
    ceil_div(n + 1, 2)
}

/// The singleton columns and the caterpillar path of the GR_{2,n}
/// precedence scheme, as (row, col) cells.
fn gr2_scheme(n: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut singletons = Vec::new();
    let mut path = vec![(1, 1)];
    if n >= 1 {
        path.push((2, 1));
    }
    let mut row = 2;
    for c in 2..=n {
        if c % 2 == 0 {
            path.push((row, c));
            singletons.push((3 - row, c));
        } else {
            path.push((row, c));
            row = 3 - row;
            path.push((row, c));
        }
    }
    (singletons, path)
}

/// Precedence-consistent layout of GR_{2,n} with fp_gr2_value(n) classes:
/// the boxed vertices as singleton classes first (left to right), then the
/// induced caterpillar path as one class in path order.
pub fn fp_gr2_layout(n: usize) -> Result<Layout, GraphError> {
    if n == 0 {
        return Err(GraphError::ZeroSize("grid"));
    }
    let (_, lab) = grid(2, n)?;
    let (singletons, path) = gr2_scheme(n);
    let mut classes: Vec<Vec<usize>> = singletons
        .iter()
        .map(|&(i, j)| vec![lab.vertex(i, j)])
        .collect();
    classes.push(path.iter().map(|&(i, j)| lab.vertex(i, j)).collect());
    Ok(Layout::from_class_sequence(classes))
}

/// Bounds for fp(GR_n): ceil((n-1)/3)*ceil((n-1)/2)+1 from the disjoint
/// two-row strips, and ceil((n-1)/2)^2+1 from the claw construction.
pub fn fp_grn_bounds(n: usize) -> Result<(usize, usize), GraphError> {
    if n == 0 {
        return Err(GraphError::ZeroSize("grid"));
    }
    let half = ceil_div(n.saturating_sub(1), 2);
    let third = ceil_div(n.saturating_sub(1), 3);
    Ok(((third * half + 1).max(1), half * half + 1))
}

/// Precedence-consistent layout of GR_n with ceil((n-1)/2)^2 + 1 classes:
/// one class per claw (centers on odd coordinates up to n-1, enumerated row
/// by row), ordered below-left-center-diagonal inside each claw, plus one
/// final class holding the top-row/right-column remainder.
pub fn fp_grn_layout(n: usize) -> Result<Layout, GraphError> {
    if n == 0 {
        return Err(GraphError::ZeroSize("grid"));
    }
    let (_, lab) = grid(n, n)?;
    let mut in_claw = vec![vec![false; n + 1]; n + 1];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut i = 1;
    while i <= n.saturating_sub(1) {
        let mut j = 1;
        while j < n {
            let mut claw = Vec::new();
            if i >= 2 {
                claw.push((i - 1, j));
            }
            if j >= 2 {
                claw.push((i, j - 1));
            }
            claw.push((i, j));
            claw.push((i + 1, j + 1));
            for &(x, y) in &claw {
                in_claw[x][y] = true;
            }
            classes.push(claw.into_iter().map(|(x, y)| lab.vertex(x, y)).collect());
            j += 2;
        }
        i += 2;
    }

    // Remainder class: the top-row / right-column caterpillar (odd n) or
    // independent set (even n), legs placed just before their spine vertex.
    let mut tail: Vec<(usize, usize)> = Vec::new();
    for j in 1..=n {
        if !in_claw[n][j] {
            if n >= 2 && j % 2 == 1 && j + 1 < n && !in_claw[n - 1][j] {
                tail.push((n - 1, j));
            }
            tail.push((n, j));
        }
    }
    for i in (1..n).rev() {
        if !in_claw[i][n] {
            if i % 2 == 1 && i + 1 < n && !in_claw[i][n - 1] {
                tail.push((i, n - 1));
            }
            tail.push((i, n));
        }
    }
    classes.push(tail.into_iter().map(|(x, y)| lab.vertex(x, y)).collect());
    Ok(Layout::from_class_sequence(classes))
}
