//! Shared oracles and random generators for the integration suites.
//!
//! Everything here recomputes results of the library from first principles
//! so the integration tests compare two independent derivations:
//!
//! * a brute-force regular-subdivision of a lifted point configuration
//!   (lower-hull facets found by exact affine fits over all candidate
//!   affine bases, with a floating-point prefilter for speed);
//! * an exhaustive search over systems of vertex-disjoint paths, against
//!   which the min-cost-flow linking values are checked;
//! * random flag generators that control validity by construction.

#![allow(dead_code)]

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use tropflag::flag::FlagValuatedMatroid;
use tropflag::gammoid::WeightedDigraph;
use tropflag::matroid::{Subset, ValuatedMatroid};
use tropflag::trop::{Rat, TropValue};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(v: i64) -> Rat {
    Rat::from_integer(v)
}

// ---------------------------------------------------------------------
// Exact linear algebra
// ---------------------------------------------------------------------

/// Solve `rows · x = rhs` by Gaussian elimination over ℚ, free variables
/// pinned to zero. Returns `None` when the system is inconsistent.
/// The second component is the set of pivot row indices (the rank).
pub fn solve_exact(rows: &[Vec<Rat>], rhs: &[Rat]) -> Option<(Vec<Rat>, usize)> {
    let m = rows.len();
    if m == 0 {
        return Some((Vec::new(), 0));
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(*b);
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col];
        for j in col..=n {
            a[row][j] = a[row][j] / inv;
        }
        for i in 0..m {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col];
                for j in col..=n {
                    let d = f * a[row][j];
                    a[i][j] = a[i][j] - d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m {
            break;
        }
    }
    // consistency: zero rows must have zero rhs
    for i in row..m {
        if !a[i][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = a[i][n];
    }
    Some((x, row))
}

fn to_f64(x: Rat) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Floating-point affine fit used only as a prefilter: fit a functional to
/// the subset, return the minimal slack over all points, or `None` when
/// the subset looks affinely dependent.
fn float_fit_min_slack(
    pts: &[Vec<f64>],
    hts: &[f64],
    subset: &[usize],
) -> Option<f64> {
    let dim = pts[0].len() + 1;
    let k = subset.len();
    let mut a: Vec<Vec<f64>> = subset
        .iter()
        .map(|&i| {
            let mut row: Vec<f64> = pts[i].clone();
            row.push(1.0);
            row.push(hts[i]);
            row
        })
        .collect();
    // Gaussian elimination with partial pivoting; track pivot columns.
    let mut piv_cols = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let mut best = row;
        for i in row..k {
            if a[i][col].abs() > a[best][col].abs() {
                best = i;
            }
        }
        if row >= k || a[best][col].abs() < 1e-9 {
            continue;
        }
        a.swap(row, best);
        let p = a[row][col];
        for j in col..=dim {
            a[row][j] /= p;
        }
        for i in 0..k {
            if i != row {
                let f = a[i][col];
                if f != 0.0 {
                    for j in col..=dim {
                        a[i][j] -= f * a[row][j];
                    }
                }
            }
        }
        piv_cols.push(col);
        row += 1;
    }
    if row < k {
        return None; // dependent subset: let the exact path decide
    }
    let mut c = vec![0.0; dim];
    for (i, &col) in piv_cols.iter().enumerate() {
        c[col] = a[i][dim];
    }
    let mut min_slack = f64::INFINITY;
    for (p, &h) in pts.iter().zip(hts) {
        let mut ell = c[dim - 1];
        for (x, cc) in p.iter().zip(&c) {
            ell += x * cc;
        }
        min_slack = min_slack.min(h - ell);
    }
    Some(min_slack)
}

/// Maximal cells of the regular subdivision of `points` induced by
/// `heights`, as sets of point indices. Brute force: every maximal cell
/// spans the affine hull, so some affinely independent `(d+1)`-subset
/// determines its supporting functional; all such subsets are tried, the
/// functional is fitted exactly, and kept when it supports the lifted
/// configuration from below. A float prefilter rejects the bulk of the
/// crossing subsets; anything within tolerance is re-checked exactly.
pub fn regular_subdivision(points: &[Vec<Rat>], heights: &[Rat]) -> BTreeSet<BTreeSet<usize>> {
    let m = points.len();
    assert!(m <= 64, "bitmask prune assumes at most 64 points");
    assert_eq!(m, heights.len());
    // affine dimension d of the configuration
    let rows: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| {
            let mut r = p.clone();
            r.push(Rat::from_integer(1));
            r
        })
        .collect();
    let (_, rank) = solve_exact(&rows, &vec![Rat::zero(); m]).expect("homogeneous");
    let d = rank - 1;

    let fpts: Vec<Vec<f64>> = points
        .iter()
        .map(|p| p.iter().map(|&x| to_f64(x)).collect())
        .collect();
    let fhts: Vec<f64> = heights.iter().map(|&h| to_f64(h)).collect();

    let mut cells: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut cell_masks: Vec<u64> = Vec::new();

    let mut subset: Vec<usize> = (0..d + 1).collect();
    loop {
        let mask: u64 = subset.iter().map(|&i| 1u64 << i).sum();
        if !cell_masks.iter().any(|&c| c & mask == mask) {
            let slack = float_fit_min_slack(&fpts, &fhts, &subset);
            // exact confirmation for anything not clearly crossing
            if slack.map_or(true, |s| s > -1e-6) {
                if let Some(cell) = exact_cell(&rows, heights, &subset, d) {
                    let cmask: u64 = cell.iter().map(|&i| 1u64 << i).sum();
                    cell_masks.push(cmask);
                    cells.insert(cell);
                }
            }
        }
        // next (d+1)-combination of 0..m in lexicographic order
        let k = d + 1;
        if k > m {
            break;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return cells;
            }
            i -= 1;
            if subset[i] != i + m - k {
                break;
            }
        }
        if subset[i] == i + m - k {
            return cells;
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    cells
}

/// Exact check for one candidate basis: fit an affine functional through
/// the lifted subset; when the subset is affinely independent and the
/// functional lies weakly below every lifted point, return its tight set.
fn exact_cell(
    rows: &[Vec<Rat>],
    heights: &[Rat],
    subset: &[usize],
    d: usize,
) -> Option<BTreeSet<usize>> {
    let sys: Vec<Vec<Rat>> = subset.iter().map(|&i| rows[i].clone()).collect();
    let rhs: Vec<Rat> = subset.iter().map(|&i| heights[i]).collect();
    let (c, rank) = solve_exact(&sys, &rhs)?;
    if rank != d + 1 {
        return None; // dependent: the cell is found through a true basis
    }
    let mut cell = BTreeSet::new();
    for (i, (row, &h)) in rows.iter().zip(heights).enumerate() {
        let ell: Rat = row.iter().zip(&c).map(|(&a, &b)| a * b).sum();
        if h < ell {
            return None;
        }
        if h == ell {
            cell.insert(i);
        }
    }
    Some(cell)
}

// ---------------------------------------------------------------------
// Hollow flag lifts
// ---------------------------------------------------------------------

/// The lifted point configuration of a hollow flag: one point
/// `1 - e_i + e_j` per support pair `i ≠ j` (`i` a non-loop of the rank-1
/// part, `j` a non-coloop of the corank-1 part), lifted to
/// `μ(i) + ν([n]∖j)`.
pub fn hollow_lift(flag: &FlagValuatedMatroid) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    assert!(flag.is_hollow());
    let n = flag.ground_size();
    let mu = flag.constituent(0);
    let nu = flag.constituent(1);
    let mut points = Vec::new();
    let mut heights = Vec::new();
    for i in 1..=n {
        let TropValue::Fin(a) = mu.value(&Subset::new(vec![i]).unwrap()) else {
            continue;
        };
        for j in 1..=n {
            if j == i {
                continue;
            }
            let co: Vec<usize> = (1..=n).filter(|&k| k != j).collect();
            let TropValue::Fin(b) = nu.value(&Subset::new(co).unwrap()) else {
                continue;
            };
            let mut p = vec![r(1); n];
            p[i - 1] = r(0);
            p[j - 1] = r(2);
            points.push(p);
            heights.push(a + b);
        }
    }
    (points, heights)
}

/// Translate a family of vertex lists into sets of indices into `points`.
pub fn index_cells(
    points: &[Vec<Rat>],
    vertex_sets: &[Vec<Vec<Rat>>],
) -> BTreeSet<BTreeSet<usize>> {
    vertex_sets
        .iter()
        .map(|vs| {
            vs.iter()
                .map(|v| {
                    points
                        .iter()
                        .position(|p| p == v)
                        .expect("cell vertex must be a lifted point")
                })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------
// Random flag generators
// ---------------------------------------------------------------------

/// A random hollow flag in the flag Dressian on `[n]`: the lambda vector
/// is drawn first (with the minimum achieved at least twice and random
/// `∞` positions) and then split as `λ_k = μ(k) + ν([n]∖k)`.
pub fn random_hollow_flag(rng: &mut ChaCha8Rng, n: usize) -> FlagValuatedMatroid {
    loop {
        let lambda: Vec<Option<i64>> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    None
                } else {
                    Some(rng.gen_range(0..=4))
                }
            })
            .collect();
        let fins: Vec<i64> = lambda.iter().filter_map(|&v| v).collect();
        if fins.len() < 2 {
            continue;
        }
        let min = *fins.iter().min().unwrap();
        if fins.iter().filter(|&&v| v == min).count() < 2 {
            continue;
        }
        let mut mu = BTreeMap::new();
        let mut nu = BTreeMap::new();
        for (k, v) in lambda.iter().enumerate() {
            let i = k + 1;
            match v {
                Some(l) => {
                    let split = rng.gen_range(-2..=2);
                    mu.insert(Subset::new(vec![i]).unwrap(), r(split));
                    let co: Vec<usize> = (1..=n).filter(|&e| e != i).collect();
                    nu.insert(Subset::new(co).unwrap(), r(l - split));
                }
                None => {
                    // kill the pair on at least one side
                    let side = rng.gen_range(0..3);
                    if side == 0 || side == 2 {
                        // mu loop at i: leave mu absent
                    } else {
                        mu.insert(Subset::new(vec![i]).unwrap(), r(rng.gen_range(-2..=2)));
                    }
                    if side == 1 || side == 2 {
                        // nu coloop at i: leave nu absent
                    } else {
                        let co: Vec<usize> = (1..=n).filter(|&e| e != i).collect();
                        nu.insert(Subset::new(co).unwrap(), r(rng.gen_range(-2..=2)));
                    }
                }
            }
        }
        if mu.is_empty() || nu.is_empty() {
            continue;
        }
        let mu = ValuatedMatroid::new(n, 1, mu).unwrap();
        let nu = ValuatedMatroid::new(n, n - 1, nu).unwrap();
        let flag = FlagValuatedMatroid::hollow(mu, nu).unwrap();
        if flag.validate_flag().is_ok() {
            return flag;
        }
    }
}

/// A random hollow flag with trivial (all-zero) values on a random
/// support whose symbol sequence has no isolated star.
pub fn random_support_flag(rng: &mut ChaCha8Rng, n: usize) -> FlagValuatedMatroid {
    loop {
        let mu_support: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.8)).collect();
        let nu_support: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.8)).collect();
        if !mu_support.iter().any(|&b| b) || !nu_support.iter().any(|&b| b) {
            continue;
        }
        let mu_bases: Vec<Subset> = (1..=n)
            .filter(|&i| mu_support[i - 1])
            .map(|i| Subset::new(vec![i]).unwrap())
            .collect();
        let nu_bases: Vec<Subset> = (1..=n)
            .filter(|&i| nu_support[i - 1])
            .map(|i| Subset::new((1..=n).filter(|&e| e != i).collect()).unwrap())
            .collect();
        let mu = ValuatedMatroid::trivial_on(n, 1, mu_bases).unwrap();
        let nu = ValuatedMatroid::trivial_on(n, n - 1, nu_bases).unwrap();
        let flag = FlagValuatedMatroid::hollow(mu, nu).unwrap();
        if flag.validate_flag().is_err() {
            continue;
        }
        let alpha = tropflag::hollow::symbol_sequence(&flag, None).unwrap();
        if tropflag::hollow::is_bruhat_polytope(&alpha) && alpha.star_positions().len() >= 2 {
            return flag;
        }
    }
}

/// A random totally non-negative hollow flag built from the chain
/// parameters of the tnn lambda characterization: pick `x_1, …, x_{n-1}`
/// and set `λ_k = min(x_{k-1}, x_k)` with sentinels `x_0 = x_n = +∞`.
pub fn random_tnn_flag(rng: &mut ChaCha8Rng, n: usize) -> FlagValuatedMatroid {
    let x: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-5..=5)).collect();
    let lambda: Vec<TropValue> = (1..=n)
        .map(|k| {
            let left = if k >= 2 { Some(x[k - 2]) } else { None };
            let right = if k <= n - 1 { Some(x[k - 1]) } else { None };
            match (left, right) {
                (Some(a), Some(b)) => TropValue::from_int(a.min(b)),
                (Some(a), None) => TropValue::from_int(a),
                (None, Some(b)) => TropValue::from_int(b),
                (None, None) => unreachable!(),
            }
        })
        .collect();
    flag_from_lambda(&lambda)
}

/// The hollow flag with trivial rank-1 part and `ν([n]∖k) = λ_k`.
pub fn flag_from_lambda(lambda: &[TropValue]) -> FlagValuatedMatroid {
    let n = lambda.len();
    let mu = ValuatedMatroid::uniform_trivial(1, n);
    let mut nu = BTreeMap::new();
    for (k, v) in lambda.iter().enumerate() {
        if let TropValue::Fin(val) = v {
            let co: Vec<usize> = (1..=n).filter(|&e| e != k + 1).collect();
            nu.insert(Subset::new(co).unwrap(), *val);
        }
    }
    let nu = ValuatedMatroid::new(n, n - 1, nu).unwrap();
    FlagValuatedMatroid::hollow(mu, nu).unwrap()
}

// ---------------------------------------------------------------------
// Digraphs and exhaustive linkings
// ---------------------------------------------------------------------

/// A random acyclic weighted digraph: ground `[n]`, a few extra vertices,
/// edges only forward along a random topological order, weights in
/// `[-5, 5]`.
pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> WeightedDigraph {
    let mut labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    for e in 0..extra {
        labels.push(format!("{}b", e + 1));
    }
    let v = labels.len();
    // random topological order
    let mut order: Vec<usize> = (0..v).collect();
    for i in (1..v).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut pos = vec![0usize; v];
    for (p, &vtx) in order.iter().enumerate() {
        pos[vtx] = p;
    }
    let mut edges = Vec::new();
    for a in 0..v {
        for b in 0..v {
            if pos[a] < pos[b] && rng.gen_bool(0.45) {
                edges.push((labels[a].clone(), labels[b].clone(), r(rng.gen_range(-5..=5))));
            }
        }
    }
    WeightedDigraph::new(labels, edges).unwrap()
}

/// Exhaustive minimum-weight vertex-disjoint linking from `sources` onto
/// `sinks`: depth-first over all systems of simple, pairwise
/// vertex-disjoint paths. Exponential, only for small oracle graphs.
pub fn exhaustive_min_linking(
    g: &WeightedDigraph,
    sources: &Subset,
    sinks: &BTreeSet<String>,
) -> TropValue {
    if sources.len() != sinks.len() {
        return TropValue::Inf;
    }
    let adj: BTreeMap<String, Vec<(String, Rat)>> = {
        let mut m: BTreeMap<String, Vec<(String, Rat)>> = BTreeMap::new();
        for (f, t, w) in g.edge_list() {
            m.entry(f).or_default().push((t, w));
        }
        m
    };
    let srcs: Vec<String> = sources.0.iter().map(|i| i.to_string()).collect();
    let mut best: Option<Rat> = None;
    let mut used: BTreeSet<String> = BTreeSet::new();
    let mut remaining: BTreeSet<String> = sinks.clone();
    search(&adj, &srcs, 0, &mut used, &mut remaining, Rat::zero(), &mut best);
    match best {
        Some(w) => TropValue::Fin(w),
        None => TropValue::Inf,
    }
}

fn search(
    adj: &BTreeMap<String, Vec<(String, Rat)>>,
    srcs: &[String],
    k: usize,
    used: &mut BTreeSet<String>,
    remaining: &mut BTreeSet<String>,
    acc: Rat,
    best: &mut Option<Rat>,
) {
    if k == srcs.len() {
        if best.map_or(true, |b| acc < b) {
            *best = Some(acc);
        }
        return;
    }
    let start = srcs[k].clone();
    if used.contains(&start) {
        return;
    }
    // walk every simple path from `start`, claiming vertices as we go
    fn extend(
        adj: &BTreeMap<String, Vec<(String, Rat)>>,
        srcs: &[String],
        k: usize,
        at: &str,
        used: &mut BTreeSet<String>,
        remaining: &mut BTreeSet<String>,
        acc: Rat,
        best: &mut Option<Rat>,
    ) {
        if remaining.contains(at) {
            remaining.remove(at);
            search(adj, srcs, k + 1, used, remaining, acc, best);
            remaining.insert(at.to_string());
        }
        if let Some(outs) = adj.get(at) {
            for (to, w) in outs {
                if used.contains(to) {
                    continue;
                }
                used.insert(to.clone());
                extend(adj, srcs, k, to, used, remaining, acc + *w, best);
                used.remove(to);
            }
        }
    }
    used.insert(start.clone());
    extend(adj, srcs, k, &start, used, remaining, acc, best);
    used.remove(&start);
}

// ---------------------------------------------------------------------
// Bruhat subword oracle
// ---------------------------------------------------------------------

/// Subword criterion for Bruhat order: `u ≤ v` iff some reduced word of
/// `v` contains a reduced word of `u` as a subword. Only usable for tiny
/// `n`; serves as an independent oracle for the dominance test.
pub fn bruhat_leq_subword(u: &tropflag::bruhat::Permutation, v: &tropflag::bruhat::Permutation) -> bool {
    use tropflag::bruhat::{word_to_perm, Permutation};
    let wv = v.reduced_word();
    let lu = u.length();
    if lu > wv.len() {
        return false;
    }
    // all subwords of wv of length lu
    fn choose(word: &[usize], k: usize, from: usize, cur: &mut Vec<usize>, u: &Permutation, n: usize) -> bool {
        if cur.len() == k {
            return &word_to_perm(cur, n) == u;
        }
        if word.len() - from < k - cur.len() {
            return false;
        }
        for i in from..word.len() {
            cur.push(word[i]);
            if choose(word, k, i + 1, cur, u, n) {
                return true;
            }
            cur.pop();
        }
        false
    }
    choose(&wv, lu, 0, &mut Vec::new(), u, u.n())
}
