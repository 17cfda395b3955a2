//! Positivity classification of hollow flag valuated matroids.
//!
//! A flag of ranks `(1, n-1)` on `[n]` is *hollow*. Its combinatorics is
//! governed by a single incidence lambda vector `λ_i = μ({i}) ⊙ ν([n]∖i)`
//! and by the *symbol sequence* `α ∈ {0, +, -, *}^n` recording, for each
//! position, which of the two singleton/cosingleton bases exist. This
//! module provides:
//!
//! - the symbol sequence of a hollow flag (optionally of its initial flag
//!   at a point),
//! - the "no isolated `*`" test for whether the flag polytope of a symbol
//!   sequence is a Bruhat interval polytope,
//! - the full positivity classification (total non-negativity, Bruhat
//!   subdivisions, the non-negative part of the flag Dressian, flag
//!   positroids) from the lambda vector alone,
//! - the hyperplane-arrangement subdivision into maximal cells, one per
//!   sign pattern on the non-minimizing finite positions, and
//! - an exact Puiseux realization matrix for flags in the non-negative
//!   flag Dressian, with every maximal minor verified symbolically.

use crate::flag::{lambda_bruhat, lambda_nonneg, lambda_tnn, FlagError, FlagValuatedMatroid};
use crate::matroid::{MatroidError, Subset, ValuatedMatroid};
use crate::puiseux::{PuiseuxMatrix, PuiseuxPoly, Sign};
use crate::trop::{Rat, TropValue};
use crate::util;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HollowError {
    #[error("flag has ranks {0:?}, expected (1, n-1)")]
    NotHollow(Vec<usize>),
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("{0:?} is not a symbol string over 0, +, -, *")]
    ParseSymbols(String),
    #[error("expected a vector of length {0}, got {1}")]
    VectorLength(usize, usize),
    #[error("not nonneg: flag is outside the non-negative flag Dressian")]
    NotNonneg,
    #[error("no finite lambda value: nothing to realize")]
    NoFiniteLambda,
    #[error("sign verification failed: no parity/sign convention yields positive minors")]
    SignVerification,
}

/// Per-position marker: `*` if both the singleton and the cosingleton are
/// bases, `-` if only the singleton, `+` if only the cosingleton, `0` if
/// neither. (The classification is invariant under globally swapping the
/// one-sided symbols; this orientation is fixed throughout the crate.)
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Zero,
    Plus,
    Minus,
    Star,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::Plus => '+',
            Symbol::Minus => '-',
            Symbol::Star => '*',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            '0' => Some(Symbol::Zero),
            '+' => Some(Symbol::Plus),
            '-' => Some(Symbol::Minus),
            '*' => Some(Symbol::Star),
            _ => None,
        }
    }
}

/// A symbol sequence, e.g. `-+**-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSequence(Vec<Symbol>);

impl SymbolSequence {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        SymbolSequence(symbols)
    }

    pub fn parse(s: &str) -> Result<Self, HollowError> {
        s.chars()
            .map(Symbol::from_char)
            .collect::<Option<Vec<_>>>()
            .map(SymbolSequence)
            .ok_or_else(|| HollowError::ParseSymbols(s.to_string()))
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn star_positions(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Symbol::Star)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for SymbolSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for SymbolSequence {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SymbolSequence {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        SymbolSequence::parse(&s).map_err(serde::de::Error::custom)
    }
}

fn require_hollow(flag: &FlagValuatedMatroid) -> Result<(), HollowError> {
    if flag.is_hollow() {
        Ok(())
    } else {
        Err(HollowError::NotHollow(flag.ranks().to_vec()))
    }
}

/// The incidence lambda vector `λ_i = μ({i}) ⊙ ν([n]∖i)` of a hollow flag.
pub fn hollow_lambda(flag: &FlagValuatedMatroid) -> Result<Vec<TropValue>, HollowError> {
    require_hollow(flag)?;
    let n = flag.ground_size();
    let mu = flag.constituent(0);
    let nu = flag.constituent(1);
    Ok((1..=n)
        .map(|i| {
            let s = Subset::new(vec![i]).expect("singleton");
            mu.value(&s).mul(nu.value(&s.complement(n)))
        })
        .collect())
}

/// The symbol sequence of a hollow flag: for each `i`, which of the bases
/// `{i}` (of the rank-1 part) and `[n]∖i` (of the corank-1 part) exist.
/// When `x` is given, the sequence of the initial flag at `x` is returned
/// instead.
pub fn symbol_sequence(
    flag: &FlagValuatedMatroid,
    x: Option<&[Rat]>,
) -> Result<SymbolSequence, HollowError> {
    require_hollow(flag)?;
    let n = flag.ground_size();
    let (mu, nu) = match x {
        None => (flag.constituent(0).clone(), flag.constituent(1).clone()),
        Some(x) => {
            if x.len() != n {
                return Err(HollowError::VectorLength(n, x.len()));
            }
            (
                flag.constituent(0).initial_matroid(x)?,
                flag.constituent(1).initial_matroid(x)?,
            )
        }
    };
    let symbols = (1..=n)
        .map(|i| {
            let s = Subset::new(vec![i]).expect("singleton");
            let low = mu.value(&s).is_finite();
            let high = nu.value(&s.complement(n)).is_finite();
            match (low, high) {
                (true, true) => Symbol::Star,
                (true, false) => Symbol::Minus,
                (false, true) => Symbol::Plus,
                (false, false) => Symbol::Zero,
            }
        })
        .collect();
    Ok(SymbolSequence(symbols))
}

/// Is the flag polytope with this symbol sequence a Bruhat interval
/// polytope? For full-dimensional polytopes (at least two `*`) the
/// criterion is that no `*` is isolated; polytopes lying in the boundary
/// (fewer than two `*`) always are.
pub fn is_bruhat_polytope(alpha: &SymbolSequence) -> bool {
    let stars = alpha.star_positions();
    if stars.len() < 2 {
        return true;
    }
    let n = alpha.len();
    stars.iter().all(|&p| {
        (p > 1 && alpha.symbols()[p - 2] == Symbol::Star)
            || (p < n && alpha.symbols()[p] == Symbol::Star)
    })
}

/// Verdicts of all positivity notions for a hollow flag, each read off the
/// single incidence lambda vector. The implications
/// `tnn ⇒ bruhat_subdivision ⇒ nonneg_dressian` always hold, and
/// `positroid = nonneg_dressian`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HollowClassification {
    pub in_dressian: bool,
    pub tnn: bool,
    pub bruhat_subdivision: bool,
    pub nonneg_dressian: bool,
    pub positroid: bool,
    pub lambda: Vec<TropValue>,
    pub witnesses: BTreeMap<String, String>,
}

fn fmt_lambda(lambda: &[TropValue]) -> String {
    let parts: Vec<String> = lambda.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Classify a hollow flag against every positivity notion. The flag must
/// satisfy the tropical Plücker relations (invalid flags are rejected).
pub fn classify(flag: &FlagValuatedMatroid) -> Result<HollowClassification, HollowError> {
    require_hollow(flag)?;
    flag.validate_flag()?;
    let lambda = hollow_lambda(flag)?;
    let tnn = lambda_tnn(&lambda);
    let bruhat = lambda_bruhat(&lambda);
    let nonneg = lambda_nonneg(&lambda);
    let mut witnesses = BTreeMap::new();
    if !tnn {
        if let Some(i) = (1..=lambda.len()).find(|&i| {
            let prev = if i >= 2 { lambda[i - 2] } else { TropValue::Inf };
            let next = *lambda.get(i).unwrap_or(&TropValue::Inf);
            lambda[i - 1] < prev.add(next)
        }) {
            witnesses.insert(
                "tnn".into(),
                format!("lambda_{i} < lambda_{} + lambda_{} in {}", i - 1, i + 1, fmt_lambda(&lambda)),
            );
        }
    }
    if !bruhat {
        if let Some(min) = lambda.iter().copied().min() {
            if let Some(i) = (1..=lambda.len()).find(|&i| {
                lambda[i - 1] == min
                    && !(i >= 2 && lambda[i - 2] == min)
                    && !(i < lambda.len() && lambda[i] == min)
            }) {
                witnesses.insert(
                    "bruhat_subdivision".into(),
                    format!("isolated minimum at position {i} in {}", fmt_lambda(&lambda)),
                );
            }
        }
    }
    if !nonneg {
        let odd = lambda.iter().step_by(2).copied().min().unwrap_or(TropValue::Inf);
        let even = lambda.iter().skip(1).step_by(2).copied().min().unwrap_or(TropValue::Inf);
        witnesses.insert(
            "nonneg_dressian".into(),
            format!("odd minimum {odd} differs from even minimum {even}"),
        );
    }
    Ok(HollowClassification {
        in_dressian: true,
        tnn,
        bruhat_subdivision: bruhat,
        nonneg_dressian: nonneg,
        positroid: nonneg,
        lambda,
        witnesses,
    })
}

/// The maximal cells of the subdivision of the flag polytope induced by
/// the lambda vector. The subdivision is cut out by the hyperplanes at the
/// non-minimizing finite positions `I`: there is one maximal cell per
/// `J ⊆ I`, with `*` at the minimizing positions, `+` on `J`, `-` on
/// `I ∖ J`, and the support's one-sided symbol at the infinite positions.
pub fn subdivision_cells(flag: &FlagValuatedMatroid) -> Result<Vec<SymbolSequence>, HollowError> {
    let lambda = hollow_lambda(flag)?;
    let base = symbol_sequence(flag, None)?;
    let min = lambda.iter().copied().filter(TropValue::is_finite).min();
    let argmin: Vec<usize> = match min {
        None => Vec::new(),
        Some(m) => (1..=lambda.len()).filter(|&i| lambda[i - 1] == m).collect(),
    };
    let free: Vec<usize> = (1..=lambda.len())
        .filter(|&i| lambda[i - 1].is_finite() && !argmin.contains(&i))
        .collect();
    let mut cells = Vec::with_capacity(1 << free.len());
    for mask in 0..(1u64 << free.len()) {
        let symbols = (1..=lambda.len())
            .map(|i| {
                if argmin.contains(&i) {
                    Symbol::Star
                } else if let Some(b) = free.iter().position(|&f| f == i) {
                    if mask & (1 << b) != 0 {
                        Symbol::Plus
                    } else {
                        Symbol::Minus
                    }
                } else {
                    base.symbols()[i - 1]
                }
            })
            .collect();
        cells.push(SymbolSequence(symbols));
    }
    Ok(cells)
}

/// Vertices of the flag polytope with symbol sequence `alpha`, in the
/// coordinates of the rank-`(1, n-1)` projection of the permutahedron: one
/// point per pair `i ≠ j` with `α_i ∈ {-, *}` and `α_j ∈ {+, *}`, with
/// coordinate `0` at `i`, `2` at `j` and `1` elsewhere. Lexicographically
/// sorted.
pub fn hollow_vertices(alpha: &SymbolSequence) -> Vec<Vec<Rat>> {
    let n = alpha.len();
    let mut verts = Vec::new();
    for i in 1..=n {
        if !matches!(alpha.symbols()[i - 1], Symbol::Minus | Symbol::Star) {
            continue;
        }
        for j in 1..=n {
            if j == i || !matches!(alpha.symbols()[j - 1], Symbol::Plus | Symbol::Star) {
                continue;
            }
            let mut p = vec![Rat::from_integer(1); n];
            p[i - 1] = Rat::from_integer(0);
            p[j - 1] = Rat::from_integer(2);
            verts.push(p);
        }
    }
    verts.sort();
    verts
}

/// A verified Puiseux realization of a hollow flag in the non-negative
/// flag Dressian, together with the normalization and sign convention
/// that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub matrix: PuiseuxMatrix,
    /// Valuation of the maximal minor omitting each column, in column
    /// order; equals the normalized corank-1 valuation.
    pub minor_valuations: Vec<TropValue>,
    /// The chosen even and odd minimizing positions of the lambda vector.
    pub argmin_even: usize,
    pub argmin_odd: usize,
    /// Which parity of `k` places its monomial in the even-argmin column.
    pub even_column_parity: String,
    /// Sign of the column monomials.
    pub alpha_sign: i64,
    /// Translation applied to make the rank-1 part trivially valued.
    #[serde(serialize_with = "ser_rat_vec")]
    pub translation: Vec<Rat>,
    /// Projective shift applied to the corank-1 part.
    #[serde(serialize_with = "ser_rat")]
    pub shift: Rat,
}

fn ser_rat<S: serde::Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&r.to_string())
}

fn ser_rat_vec<S: serde::Serializer>(v: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&r.to_string())?;
    }
    seq.end()
}

/// Build an `(n-1) × n` matrix over Puiseux polynomials whose row span
/// realizes the flag: the first row realizes the rank-1 part and the
/// maximal minors realize the corank-1 part with all leading coefficients
/// positive. The input must lie in the non-negative flag Dressian. The
/// flag is normalized internally (rank-1 part trivially valued, corank-1
/// part shifted to vanish at the chosen minimizing positions); both
/// normalizations are recorded in the result.
pub fn build_realization_matrix(flag: &FlagValuatedMatroid) -> Result<Realization, HollowError> {
    let class = classify(flag)?;
    if !class.nonneg_dressian {
        return Err(HollowError::NotNonneg);
    }
    let n = flag.ground_size();
    let mu = flag.constituent(0);

    // Translate so the rank-1 part is trivially valued on its support.
    let translation: Vec<Rat> = (1..=n)
        .map(|i| {
            let s = Subset::new(vec![i]).expect("singleton");
            match mu.value(&s) {
                TropValue::Fin(v) => -v,
                TropValue::Inf => Rat::from_integer(0),
            }
        })
        .collect();
    let flag = flag.translate(&translation)?;
    let lambda = hollow_lambda(&flag)?;
    let min = lambda
        .iter()
        .copied()
        .filter(TropValue::is_finite)
        .min()
        .ok_or(HollowError::NoFiniteLambda)?;
    let arg = |parity: usize| {
        (1..=n).find(|&i| i % 2 == parity && lambda[i - 1] == min)
    };
    let (i, j) = match (arg(0), arg(1)) {
        (Some(i), Some(j)) => (i, j),
        // nonneg_dressian guarantees the odd and even minima agree, so both
        // parities attain the global minimum
        _ => return Err(HollowError::NotNonneg),
    };

    // Shift the corank-1 part so the minimum lambda value is 0: after the
    // translation, lambda_k = nu([n] \ k) on the support of mu.
    let shift = match min {
        TropValue::Fin(v) => v,
        TropValue::Inf => unreachable!("min is finite"),
    };
    let nu = flag.constituent(1);
    let nu_values: BTreeMap<Subset, Rat> = nu
        .support()
        .map(|b| match nu.value(b) {
            TropValue::Fin(v) => (b.clone(), v - shift),
            TropValue::Inf => unreachable!("support is finite-valued"),
        })
        .collect();
    let nu = ValuatedMatroid::new(n, n - 1, nu_values)?;
    let mu = flag.constituent(0);
    let loops = mu.loops();

    let co_val = |k: usize| {
        let s = Subset::new(vec![k]).expect("singleton");
        nu.value(&s.complement(n))
    };

    // Row assignment for the pivot columns.
    let others: Vec<usize> = (1..=n).filter(|&k| k != i && k != j).collect();
    let row_of = |k: usize| 2 + others.iter().position(|&o| o == k).unwrap();

    let build = |even_col: usize, sign: i64| -> PuiseuxMatrix {
        let odd_col = if even_col == i { j } else { i };
        let mut m = PuiseuxMatrix::zero(n - 1, n);
        for k in 1..=n {
            m.entries[0][k - 1] = if k == i || k == j {
                PuiseuxPoly::constant(n as i64)
            } else if loops.contains(&k) {
                PuiseuxPoly::zero()
            } else {
                PuiseuxPoly::constant(1)
            };
        }
        for &k in &others {
            let r = row_of(k) - 1;
            m.entries[r][k - 1] = PuiseuxPoly::constant(1);
            if let TropValue::Fin(e) = co_val(k) {
                let col = if k % 2 == 0 { even_col } else { odd_col };
                m.entries[r][col - 1] = PuiseuxPoly::monomial(Rat::from_integer(sign), e);
            }
        }
        m
    };

    // The proof's parity-to-column and sign conventions are resolved
    // empirically: try both column assignments and both signs, keep the
    // first whose minors all come out positive with the right valuations.
    let combos = [(j, 1i64), (j, -1), (i, 1), (i, -1)];
    let expected: Vec<TropValue> = (1..=n).map(co_val).collect();
    let found = util::first_witness(&combos, |&(even_col, sign)| {
        let m = build(even_col, sign);
        let minors = m.maximal_minors().ok()?;
        let ok = minors.iter().zip(expected.iter()).all(|(p, want)| {
            let (val, s) = p.valuation_and_sign();
            val == *want && matches!(s, Sign::Plus | Sign::Zero)
        });
        if ok {
            Some((even_col, sign, m))
        } else {
            None
        }
    });
    let (even_col, sign, matrix) = found.ok_or(HollowError::SignVerification)?;
    Ok(Realization {
        matrix,
        minor_valuations: expected,
        argmin_even: i,
        argmin_odd: j,
        even_column_parity: if even_col == i { "even".into() } else { "odd".into() },
        alpha_sign: sign,
        translation,
        shift,
    })
}
