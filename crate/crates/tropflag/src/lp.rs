//! Exact rational linear programming at desk scale.
//!
//! The only consumer is vertex extraction for lattice polytopes given as
//! point sets: a point is a vertex iff it is not a convex combination of the
//! other points. That is a phase-one simplex feasibility problem, solved
//! here with dense rational tableaux and Bland's rule (no cycling, no
//! rounding). Problem sizes are tiny (tens of points, dimension ≤ 8).

use crate::trop::Rat;
use num_traits::{One, Zero};

/// Decide feasibility of `A x = b`, `x ≥ 0` (phase-one simplex with
/// artificial variables, Bland's rule).
pub fn feasible(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    // Tableau: columns = n structural + m artificial + 1 rhs.
    // Rows are scaled so the rhs is non-negative, artificials form a basis.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i] < Rat::zero();
        let sign = if flip { -Rat::one() } else { Rat::one() };
        let mut row = vec![Rat::zero(); width];
        for j in 0..n {
            row[j] = a[i][j] * sign;
        }
        row[n + i] = Rat::one();
        row[width - 1] = b[i] * sign;
        t.push(row);
    }
    // Objective: minimize sum of artificials. Express cost row in terms of
    // the non-basic (structural) columns: z_j - c_j = sum of column j over
    // all constraint rows; current objective value = sum of rhs.
    let mut cost = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..width {
            cost[j] = cost[j] + row[j];
        }
    }
    for i in 0..m {
        cost[n + i] = Rat::zero(); // basic artificial columns are reduced
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Bland: entering column = smallest index with positive reduced cost.
        let enter = (0..n + m).find(|&j| cost[j] > Rat::zero());
        let enter = match enter {
            Some(j) => j,
            None => break,
        };
        // Ratio test; Bland tie-break on basis variable index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if t[i][enter] > Rat::zero() {
                let ratio = t[i][width - 1] / t[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = match leave {
            Some(i) => i,
            None => break, // unbounded: cannot happen for phase one
        };
        // Pivot.
        let piv = t[leave][enter];
        for j in 0..width {
            t[leave][j] = t[leave][j] / piv;
        }
        for i in 0..m {
            if i != leave && t[i][enter] != Rat::zero() {
                let f = t[i][enter];
                for j in 0..width {
                    let delta = f * t[leave][j];
                    t[i][j] = t[i][j] - delta;
                }
            }
        }
        let f = cost[enter];
        if f != Rat::zero() {
            for j in 0..width {
                let delta = f * t[leave][j];
                cost[j] = cost[j] - delta;
            }
        }
        basis[leave] = enter;
    }
    // Feasible iff all artificials can be driven to zero: objective value
    // (sum of artificial basics) is the rhs of the cost row.
    cost[width - 1].is_zero()
}

/// Is `q` a convex combination of `points`?
pub fn in_convex_hull(q: &[Rat], points: &[&[Rat]]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = q.len();
    // Rows: one per coordinate plus the sum-to-one row.
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(dim + 1);
    for c in 0..dim {
        a.push(points.iter().map(|p| p[c]).collect());
    }
    a.push(vec![Rat::one(); points.len()]);
    let mut b: Vec<Rat> = q.to_vec();
    b.push(Rat::one());
    feasible(&a, &b)
}

/// Extract the vertices of `conv(points)`: the points that are not convex
/// combinations of the others. Input order is preserved; duplicates are
/// removed first.
pub fn vertices(points: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut distinct: Vec<Vec<Rat>> = Vec::new();
    for p in points {
        if !distinct.contains(p) {
            distinct.push(p.clone());
        }
    }
    let idx: Vec<usize> = (0..distinct.len()).collect();
    let keep = crate::util::ordered_map(&idx, |&i| {
        let others: Vec<&[Rat]> = distinct
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.as_slice())
            .collect();
        !in_convex_hull(&distinct[i], &others)
    });
    distinct
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect()
}
