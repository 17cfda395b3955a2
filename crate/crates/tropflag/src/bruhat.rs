//! Permutations, Bruhat order and (twisted) Bruhat interval polytopes.
//!
//! A rank vector `d = (d₁ < … < d_s)` determines a projection of the
//! permutahedron onto the flag Dressian polytope `Δ(d; n)`: a permutation
//! `x` maps to the lattice point `(f(x(1)), …, f(x(n)))` where `f(i)` counts
//! the ranks `d_j ≥ n+1-i`. The *Bruhat polytope* of an interval `[u, v]`
//! is the convex hull of the images of its elements; the *twisted* variant
//! first sends `x` to the permutahedron vertex `x · e` with
//! `e = (n, n-1, …, 1)`. Vertex sets are extracted exactly by eliminating
//! convex combinations (see [`crate::lp`]).

use crate::hollow::{Symbol, SymbolSequence};
use crate::lp;
use crate::trop::Rat;
use crate::util;
use itertools::Itertools;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BruhatError {
    #[error("cannot parse {0:?} as a permutation")]
    Parse(String),
    #[error("{0:?} is not a permutation of [{1}]")]
    NotPermutation(Vec<usize>, usize),
    #[error("permutations live in different symmetric groups: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{u} is not below {v} in Bruhat order")]
    NotAnInterval { u: String, v: String },
    #[error("rank vector {0:?} is not strictly increasing within [{1}]")]
    BadRanks(Vec<usize>, usize),
    #[error("{v} is not the minimal representative of its fiber ({smaller} is smaller)")]
    NotMinimalCosetRep { v: String, smaller: String },
    #[error("no interval realizes the requested polytope")]
    NoInterval,
    #[error("symbol sequence {0} has no {1} entry")]
    SymbolRange(String, String),
}

/// A permutation of `[n]` in one-line notation, 1-based values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, BruhatError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(BruhatError::NotPermutation(one_line.clone(), n));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `x(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Precomposition product: `(self · other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    /// Right-multiply by the adjacent transposition `τ_j` (swaps the
    /// one-line entries at positions `j`, `j+1`).
    pub fn times_tau(&self, j: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(j - 1, j);
        Permutation(v)
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let n = self.0.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count())
            .sum()
    }

    /// The order-reversing involution `ι(x) = (i ↦ n+1-x⁻¹(i))`.
    pub fn iota(&self) -> Permutation {
        let n = self.0.len();
        let inv = self.inverse();
        Permutation((1..=n).map(|i| n + 1 - inv.at(i)).collect())
    }

    /// Parse `"2134"` (digits, `n ≤ 9`) or `"2,1,3,4"`.
    pub fn parse(s: &str) -> Result<Self, BruhatError> {
        let s = s.trim();
        let vals: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| BruhatError::Parse(s.into())))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| BruhatError::Parse(s.into()))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(vals)
    }

    /// A reduced word (as a list of `τ` indices, precomposition order).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut x = self.clone();
        let mut word = Vec::with_capacity(self.length());
        loop {
            // leftmost descent
            match (1..x.n()).find(|&i| x.at(i) > x.at(i + 1)) {
                Some(i) => {
                    x = x.times_tau(i);
                    word.push(i);
                }
                None => break,
            }
        }
        word.reverse();
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

/// Product of a word of adjacent transpositions, left to right.
pub fn word_to_perm(word: &[usize], n: usize) -> Permutation {
    let mut p = Permutation::identity(n);
    for &j in word {
        p = p.times_tau(j);
    }
    p
}

/// All permutations of `[n]`, lexicographic.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n).permutations(n).map(Permutation).collect()
}

/// Bruhat order via the rank-matrix dominance criterion:
/// `u ≤ v` iff for all `i, j`: `#{a ≤ i : u(a) ≥ j} ≤ #{a ≤ i : v(a) ≥ j}`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> bool {
    let n = u.n();
    debug_assert_eq!(n, v.n());
    for i in 1..=n {
        // running tallies of values ≥ j among the first i entries
        let mut cu = vec![0usize; n + 2];
        let mut cv = vec![0usize; n + 2];
        for a in 1..=i {
            cu[u.at(a)] += 1;
            cv[v.at(a)] += 1;
        }
        let (mut su, mut sv) = (0usize, 0usize);
        for j in (1..=n).rev() {
            su += cu[j];
            sv += cv[j];
            if su > sv {
                return false;
            }
        }
    }
    true
}

/// The Bruhat interval `[u, v]` as an explicit list (desk scale: filters
/// all of `S_n`). Errors if `u ≰ v`.
pub fn interval(u: &Permutation, v: &Permutation) -> Result<Vec<Permutation>, BruhatError> {
    if u.n() != v.n() {
        return Err(BruhatError::SizeMismatch(u.n(), v.n()));
    }
    if !bruhat_leq(u, v) {
        return Err(BruhatError::NotAnInterval { u: u.to_string(), v: v.to_string() });
    }
    let all = all_permutations(u.n());
    let keep = util::ordered_map(&all, |x| bruhat_leq(u, x) && bruhat_leq(x, v));
    Ok(all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(x, _)| x).collect())
}

/// A strictly increasing rank vector `d ⊆ [n]`.
pub fn check_ranks(d: &[usize], n: usize) -> Result<(), BruhatError> {
    if d.is_empty() || d.windows(2).any(|w| w[0] >= w[1]) || *d.last().unwrap() > n {
        return Err(BruhatError::BadRanks(d.to_vec(), n));
    }
    Ok(())
}

/// The coordinate map `f` of the projection `π^d`: `f(i)` is the `(n+1-i)`-th
/// coordinate of `e_d = Σ_j e_{[d_j]}`, i.e. `#{j : d_j ≥ n+1-i}`.
pub fn f_map(d: &[usize], n: usize) -> Vec<usize> {
    (1..=n)
        .map(|i| d.iter().filter(|&&dj| dj >= n + 1 - i).count())
        .collect()
}

/// Untwisted image `π^d(φ(x)) = (f(x(1)), …, f(x(n)))`.
pub fn phi_point(x: &Permutation, d: &[usize]) -> Vec<usize> {
    let f = f_map(d, x.n());
    x.one_line().iter().map(|&v| f[v - 1]).collect()
}

/// Twisted image `π^d(ψ(x))` where `ψ(x) = x · (n, n-1, …, 1)`: coordinate
/// `j` is `f(n+1-x⁻¹(j))`.
pub fn psi_point(x: &Permutation, d: &[usize]) -> Vec<usize> {
    let n = x.n();
    let f = f_map(d, n);
    let inv = x.inverse();
    (1..=n).map(|j| f[n - inv.at(j)]).collect()
}

fn level_sets(values: &[usize]) -> Vec<Vec<usize>> {
    // positions grouped by value, each group ascending
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, &v) in values.iter().enumerate() {
        groups.entry(v).or_default().push(i + 1);
    }
    groups.into_values().collect()
}

/// All permutations of `[n]` preserving each level set of `values`.
fn stabilizer(values: &[usize]) -> Vec<Permutation> {
    let n = values.len();
    let mut result = vec![Permutation::identity(n)];
    for group in level_sets(values) {
        if group.len() < 2 {
            continue;
        }
        let mut next = Vec::new();
        for assignment in group.iter().permutations(group.len()) {
            for base in &result {
                let mut v = base.one_line().to_vec();
                for (slot, &&img) in group.iter().zip(assignment.iter()) {
                    v[slot - 1] = base.at(img);
                }
                next.push(Permutation(v));
            }
        }
        result = next;
    }
    result
}

/// The fiber of `x` under `π^d ∘ φ` (permutations with the same untwisted
/// image): all `h ∘ x` with `h` preserving the level sets of `f`.
pub fn phi_fiber(x: &Permutation, d: &[usize]) -> Vec<Permutation> {
    let f = f_map(d, x.n());
    stabilizer(&f).into_iter().map(|h| h.compose(x)).collect()
}

/// The fiber of `x` under `π^d ∘ ψ`: all `x ∘ h` with `h` preserving the
/// level sets of `g(i) = f(n+1-i)`.
pub fn psi_fiber(x: &Permutation, d: &[usize]) -> Vec<Permutation> {
    let n = x.n();
    let f = f_map(d, n);
    let g: Vec<usize> = (1..=n).map(|i| f[n - i]).collect();
    stabilizer(&g).into_iter().map(|h| x.compose(&h)).collect()
}

/// Is `x` the Bruhat-minimal element of its `π^d ∘ φ` fiber?
pub fn is_phi_minimal(x: &Permutation, d: &[usize]) -> bool {
    phi_fiber(x, d).iter().all(|y| bruhat_leq(x, y))
}

/// Is `x` the Bruhat-minimal element of its `π^d ∘ ψ` fiber?
pub fn is_psi_minimal(x: &Permutation, d: &[usize]) -> bool {
    psi_fiber(x, d).iter().all(|y| bruhat_leq(x, y))
}

fn to_rat(p: Vec<usize>) -> Vec<Rat> {
    p.into_iter().map(|v| Rat::from_integer(v as i64)).collect()
}

/// Vertex set of the Bruhat polytope `Q^d_{u,v}`: the convex hull of
/// `π^d(φ(σ))` over `σ ∈ [u, v]`. Vertices are returned lexicographically
/// sorted.
pub fn q_polytope(
    u: &Permutation,
    v: &Permutation,
    d: &[usize],
) -> Result<Vec<Vec<Rat>>, BruhatError> {
    check_ranks(d, u.n())?;
    let members = interval(u, v)?;
    let points: Vec<Vec<Rat>> = members.iter().map(|x| to_rat(phi_point(x, d))).collect();
    let mut verts = lp::vertices(&points);
    verts.sort();
    Ok(verts)
}

/// Vertex set of the twisted Bruhat polytope `Q̃^d_{u,v}`: convex hull of
/// `π^d(ψ(σ))` over `σ ∈ [u, v]`. Requires `v` minimal in its `π^d ∘ ψ`
/// fiber.
pub fn q_twisted(
    u: &Permutation,
    v: &Permutation,
    d: &[usize],
) -> Result<Vec<Vec<Rat>>, BruhatError> {
    check_ranks(d, u.n())?;
    if let Some(smaller) = psi_fiber(v, d).iter().find(|y| *y != v && !bruhat_leq(v, y)) {
        return Err(BruhatError::NotMinimalCosetRep {
            v: v.to_string(),
            smaller: smaller.to_string(),
        });
    }
    let members = interval(u, v)?;
    let points: Vec<Vec<Rat>> = members.iter().map(|x| to_rat(psi_point(x, d))).collect();
    let mut verts = lp::vertices(&points);
    verts.sort();
    Ok(verts)
}

/// Express a twisted Bruhat polytope as an untwisted one: given `Q̃^d_{u,v}`,
/// find `(u', v')` with `Q^d_{u',v'} = Q̃^d_{u,v}` as vertex sets.
///
/// Following the duality proof, the dual vertex set `{s·𝟙 - p}` is located
/// among the twisted polytopes for the dual rank vector `d*`; inverting the
/// resulting interval yields the untwisted pair. The search scans intervals
/// in lexicographic order (desk scale).
pub fn twisted_to_untwisted(
    u: &Permutation,
    v: &Permutation,
    d: &[usize],
) -> Result<(Permutation, Permutation), BruhatError> {
    let n = u.n();
    let target = q_twisted(u, v, d)?;
    let s = d.len() as i64;
    let dual_target: BTreeSet<Vec<Rat>> = target
        .iter()
        .map(|p| p.iter().map(|c| Rat::from_integer(s) - *c).collect())
        .collect();
    let d_star: Vec<usize> = d.iter().rev().map(|&dj| n - dj).collect();
    let all = all_permutations(n);
    for b in &all {
        if !is_psi_minimal(b, &d_star) {
            continue;
        }
        for a in &all {
            if !bruhat_leq(a, b) {
                continue;
            }
            let verts = q_twisted(a, b, &d_star)?;
            if verts.into_iter().collect::<BTreeSet<_>>() == dual_target {
                return Ok((a.inverse(), b.inverse()));
            }
        }
    }
    Err(BruhatError::NoInterval)
}

/// The word for `v` associated with a full-dimensional symbol sequence
/// (ascending part `τ₁ … τ_{k-2}`, descending part `τ_{n-1} … τ_m`, where
/// `k` is the largest index with `α_k ∈ {-, *}` and `m` the smallest with
/// `α_m ∈ {+, *}`).
fn alpha_k_m(alpha: &SymbolSequence) -> Result<(usize, usize), BruhatError> {
    let a = alpha.symbols();
    let k = a
        .iter()
        .rposition(|s| matches!(s, Symbol::Minus | Symbol::Star))
        .map(|i| i + 1)
        .ok_or_else(|| BruhatError::SymbolRange(alpha.to_string(), "- or *".into()))?;
    let m = a
        .iter()
        .position(|s| matches!(s, Symbol::Plus | Symbol::Star))
        .map(|i| i + 1)
        .ok_or_else(|| BruhatError::SymbolRange(alpha.to_string(), "+ or *".into()))?;
    Ok((k, m))
}

/// The interval `[u, v]` whose Bruhat polytope is the hollow polytope of
/// `alpha` (which must be full-dimensional, i.e. contain no `0`, and have
/// no isolated `*`).
pub fn interval_for_alpha(
    alpha: &SymbolSequence,
) -> Result<(Permutation, Permutation), BruhatError> {
    let a = alpha.symbols();
    let n = a.len();
    let (k, m) = alpha_k_m(alpha)?;

    let mut w: Vec<usize> = (1..=k.saturating_sub(2)).collect();
    w.extend((m..=n - 1).rev());
    let v = word_to_perm(&w, n);

    let is = |i: usize, s: Symbol| a[i - 1] == s;
    let all_in = |lo: usize, hi: usize, s: Symbol| (lo..=hi).all(|j| a[j - 1] == s);

    // ascending part of w'
    let mut word: Vec<usize> = Vec::new();
    for i in 1..n {
        let rule_plus = is(i + 1, Symbol::Plus)
            && !all_in(i + 1, n, Symbol::Plus)
            && !all_in(1, i, Symbol::Minus);
        let rule_star = is(i, Symbol::Plus) && is(i + 1, Symbol::Star);
        if rule_plus || rule_star {
            word.push(i);
        }
    }
    // descending part of w'
    for i in (1..n).rev() {
        let rule_minus = is(i + 1, Symbol::Minus) && !all_in(1, i, Symbol::Minus);
        let rule_star = is(i, Symbol::Minus)
            && is(i + 1, Symbol::Star)
            && !all_in(1, i, Symbol::Minus);
        if rule_minus || rule_star {
            word.push(i);
        }
    }
    let u = word_to_perm(&word, n);
    Ok((u, v))
}

/// The per-vertex certificate of the hollow Bruhat theorem: a word `w''`
/// (and permutation `σ ∈ [u, v]`) whose image is the vertex with `-1` at
/// `i` and `+1` at `j`. Follows the eight-step procedure of the proof;
/// rules are applied in order, each modifying the ascending/descending
/// parts in place.
pub fn vertex_permutation(
    alpha: &SymbolSequence,
    i: usize,
    j: usize,
) -> Result<Permutation, BruhatError> {
    let a = alpha.symbols();
    let n = a.len();
    alpha_k_m(alpha)?;
    let is = |p: usize, s: Symbol| p >= 1 && p <= n && a[p - 1] == s;
    let all_minus_below = |hi: usize| (1..hi).all(|l| a[l - 1] == Symbol::Minus);

    // Step 1: start with the ascending/descending parts of w'.
    let mut asc: BTreeSet<usize> = BTreeSet::new();
    let mut desc: BTreeSet<usize> = BTreeSet::new();
    for p in 1..n {
        let rule_plus = is(p + 1, Symbol::Plus)
            && !((p + 1..=n).all(|l| a[l - 1] == Symbol::Plus))
            && !((1..=p).all(|l| a[l - 1] == Symbol::Minus));
        let rule_star = is(p, Symbol::Plus) && is(p + 1, Symbol::Star);
        if rule_plus || rule_star {
            asc.insert(p);
        }
        let rule_minus = is(p + 1, Symbol::Minus) && !all_minus_below(p);
        let rule_dstar =
            is(p, Symbol::Minus) && is(p + 1, Symbol::Star) && !((1..=p).all(|l| a[l - 1] == Symbol::Minus));
        if rule_minus || rule_dstar {
            desc.insert(p);
        }
    }
    // Step 2: fill ascending gaps up to τ_{i-2}.
    for p in 1..=i.saturating_sub(2) {
        asc.insert(p);
    }
    // Step 3: fill descending gaps down to τ_j.
    for p in j..=n - 1 {
        desc.insert(p);
    }
    // Step 4.
    if j < i && i >= 2 && is(i - 1, Symbol::Plus) && is(i, Symbol::Star) {
        asc.remove(&(i - 1));
    }
    // Step 5.
    if j >= 2 && is(j - 1, Symbol::Minus) && is(j, Symbol::Star) && !all_minus_below(j) {
        desc.remove(&(j - 1));
    }
    // Step 6.
    if i < j && j >= 2 && is(j - 1, Symbol::Minus) && is(j, Symbol::Star) && !all_minus_below(j) {
        asc.insert(j - 1);
    }
    // Step 7.
    if i < j && i >= 2 && is(i - 1, Symbol::Star) && is(i, Symbol::Star) {
        desc.insert(i - 1);
    }
    // Step 8.
    if i < j && all_minus_below(i) && i >= 2 {
        asc.insert(i - 1);
    }
    let mut word: Vec<usize> = asc.iter().copied().collect();
    word.extend(desc.iter().rev().copied());
    Ok(word_to_perm(&word, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hollow::SymbolSequence;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let x = p("3241");
        assert_eq!(x.inverse(), p("4213"));
        assert_eq!(x.length(), 4);
        assert_eq!(x.compose(&x.inverse()), Permutation::identity(4));
        assert_eq!(word_to_perm(&x.reduced_word(), 4), x);
        assert_eq!(x.reduced_word().len(), x.length());
        assert!(Permutation::parse("1224").is_err());
        assert_eq!(p("2,1,3,4"), p("2134"));
    }

    #[test]
    fn iota_reverses_bruhat_order() {
        for u in all_permutations(4) {
            for v in all_permutations(4) {
                assert_eq!(bruhat_leq(&u, &v), bruhat_leq(&v.iota(), &u.iota()));
            }
        }
    }

    #[test]
    fn example_interval() {
        let members = interval(&p("2134"), &p("3241")).unwrap();
        let expect: Vec<Permutation> =
            ["2134", "2143", "2314", "2341", "3124", "3142", "3214", "3241"]
                .iter()
                .map(|s| p(s))
                .collect();
        let mut members = members;
        members.sort();
        let mut expect = expect;
        expect.sort();
        assert_eq!(members, expect);
        assert!(interval(&p("3241"), &p("2134")).is_err());
    }

    #[test]
    fn inverse_interval_example() {
        // inverting every element of [2314, 2431] yields [3124, 4132]
        let members = interval(&p("3124"), &p("4132")).unwrap();
        let mut got: Vec<String> = members.iter().map(|x| x.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["3124", "3142", "4123", "4132"]);
        let mut inverses: Vec<Permutation> = interval(&p("2314"), &p("2431"))
            .unwrap()
            .iter()
            .map(Permutation::inverse)
            .collect();
        inverses.sort();
        let mut members = members;
        members.sort();
        assert_eq!(members, inverses);
    }

    #[test]
    fn f_map_matches_rank_vector() {
        assert_eq!(f_map(&[1, 3], 4), vec![0, 1, 1, 2]);
        assert_eq!(f_map(&[1, 2, 3, 4], 4), vec![1, 2, 3, 4]);
        assert_eq!(f_map(&[1, 4], 5), vec![0, 1, 1, 1, 2]);
    }

    #[test]
    fn phi_psi_points() {
        assert_eq!(phi_point(&p("2134"), &[1, 3]), vec![1, 0, 1, 2]);
        assert_eq!(psi_point(&p("2134"), &[1, 3]), vec![1, 2, 1, 0]);
    }

    #[test]
    fn q_polytope_example() {
        let verts = q_polytope(&p("2134"), &p("3241"), &[1, 3]).unwrap();
        let expect: Vec<Vec<Rat>> = [
            [1, 0, 1, 2],
            [1, 0, 2, 1],
            [1, 1, 0, 2],
            [1, 1, 2, 0],
        ]
        .iter()
        .map(|v| v.iter().map(|&x| Rat::from_integer(x)).collect())
        .collect();
        assert_eq!(verts, expect);
    }

    #[test]
    fn q_twisted_example() {
        let verts = q_twisted(&p("2134"), &p("3241"), &[1, 3]).unwrap();
        let expect: Vec<Vec<Rat>> = [
            [0, 1, 2, 1],
            [0, 2, 1, 1],
            [1, 0, 2, 1],
            [1, 1, 2, 0],
            [1, 2, 0, 1],
            [1, 2, 1, 0],
        ]
        .iter()
        .map(|v| v.iter().map(|&x| Rat::from_integer(x)).collect())
        .collect();
        assert_eq!(verts, expect);
    }

    #[test]
    fn minimality_checks() {
        // 3241 is psi-minimal but not phi-minimal for d=(1,3): its phi fiber
        // contains the smaller 2341.
        assert!(is_psi_minimal(&p("3241"), &[1, 3]));
        assert!(!is_phi_minimal(&p("3241"), &[1, 3]));
        assert!(phi_fiber(&p("3241"), &[1, 3]).contains(&p("2341")));
        let err = q_twisted(&p("2134"), &p("3421"), &[1, 3]).unwrap_err();
        assert!(matches!(err, BruhatError::NotMinimalCosetRep { .. }));
    }

    #[test]
    fn interval_for_alpha_example() {
        let alpha = SymbolSequence::parse("-+**-").unwrap();
        let (u, v) = interval_for_alpha(&alpha).unwrap();
        assert_eq!(u, p("13254"));
        assert_eq!(v, p("25341"));
    }

    #[test]
    fn interval_for_all_stars() {
        let alpha = SymbolSequence::parse("****").unwrap();
        let (u, v) = interval_for_alpha(&alpha).unwrap();
        assert_eq!(u, Permutation::identity(4));
        assert_eq!(v, p("4231"));
    }

    #[test]
    fn vertex_certificate_example() {
        // vertex (0,1,-1,0,0): -1 at 3, +1 at 2 -> sigma = 25134
        let alpha = SymbolSequence::parse("-+**-").unwrap();
        let sigma = vertex_permutation(&alpha, 3, 2).unwrap();
        assert_eq!(sigma, p("25134"));
        let (u, v) = interval_for_alpha(&alpha).unwrap();
        assert!(bruhat_leq(&u, &sigma) && bruhat_leq(&sigma, &v));
        assert_eq!(sigma.inverse().at(1), 3);
        assert_eq!(sigma.inverse().at(5), 2);
    }

    #[test]
    fn twisted_to_untwisted_example() {
        let (a, b) = twisted_to_untwisted(&p("2134"), &p("3241"), &[1, 3]).unwrap();
        assert_eq!((a, b), (p("1243"), p("2431")));
    }

    #[test]
    fn reverse_identity_example() {
        let q = q_polytope(&p("2134"), &p("3241"), &[1, 3]).unwrap();
        let qt = q_twisted(&p("3124"), &p("4132"), &[1, 3]).unwrap();
        assert_eq!(q, qt);
    }
}
