//! Exact arithmetic for finite Puiseux polynomials in `t`.
//!
//! The realization matrices produced by the hollow classifier have at most
//! one monomial `c · t^e` (with rational `c`, `e`) per entry, so all of
//! their maximal minors are finite sums and can be computed exactly: no
//! series truncation or precision management is involved. The *valuation*
//! of a polynomial is its smallest exponent and its *sign* is the sign of
//! the corresponding coefficient; positivity of a minor means its leading
//! coefficient is a positive rational.

use crate::trop::{parse_rat, Rat, TropValue};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PuiseuxError {
    #[error("matrix is not rectangular")]
    Ragged,
    #[error("maximal minors need rows = cols or rows = cols - 1, got {0}x{1}")]
    Shape(usize, usize),
    #[error("cofactor expansion is limited to at most 9 columns, got {0}")]
    TooWide(usize),
}

/// Sign of the leading (lowest-exponent) coefficient; the zero polynomial
/// reports the conventional `+0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+0")]
    Zero,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
            Sign::Zero => write!(f, "+0"),
        }
    }
}

/// A finite sum `Σ c_e t^e` with rational exponents and coefficients,
/// stored sparsely; the empty sum is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PuiseuxPoly {
    terms: BTreeMap<Rat, Rat>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly::default()
    }

    /// The monomial `coeff · t^exp` (zero coefficient gives the zero poly).
    pub fn monomial(coeff: Rat, exp: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != Rat::from_integer(0) {
            terms.insert(exp, coeff);
        }
        PuiseuxPoly { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Rat::from_integer(c), Rat::from_integer(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Rat, Rat> {
        &self.terms
    }

    pub fn add(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        let mut terms = self.terms.clone();
        for (&e, &c) in &other.terms {
            let entry = terms.entry(e).or_insert_with(|| Rat::from_integer(0));
            *entry += c;
            if *entry == Rat::from_integer(0) {
                terms.remove(&e);
            }
        }
        PuiseuxPoly { terms }
    }

    pub fn neg(&self) -> PuiseuxPoly {
        PuiseuxPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        let mut terms: BTreeMap<Rat, Rat> = BTreeMap::new();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                let entry = terms.entry(e1 + e2).or_insert_with(|| Rat::from_integer(0));
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| *c != Rat::from_integer(0));
        PuiseuxPoly { terms }
    }

    /// `(min exponent, sign of its coefficient)`; `(∞, +0)` for zero.
    pub fn valuation_and_sign(&self) -> (TropValue, Sign) {
        match self.terms.iter().next() {
            None => (TropValue::Inf, Sign::Zero),
            Some((&e, &c)) => {
                let sign = if c > Rat::from_integer(0) { Sign::Plus } else { Sign::Minus };
                (TropValue::Fin(e), sign)
            }
        }
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " {} ", if *c < Rat::from_integer(0) { "-" } else { "+" })?;
            } else if *c < Rat::from_integer(0) {
                write!(f, "-")?;
            }
            let abs = if *c < Rat::from_integer(0) { -*c } else { *c };
            if *e == Rat::from_integer(0) {
                write!(f, "{abs}")?;
            } else if abs == Rat::from_integer(1) {
                write!(f, "t^{e}")?;
            } else {
                write!(f, "{abs}*t^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exp: String,
}

impl Serialize for PuiseuxPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&TermJson { coeff: c.to_string(), exp: e.to_string() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for PuiseuxPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw: Vec<TermJson> = Vec::deserialize(de)?;
        let mut p = PuiseuxPoly::zero();
        for t in raw {
            let c = parse_rat(&t.coeff).map_err(serde::de::Error::custom)?;
            let e = parse_rat(&t.exp).map_err(serde::de::Error::custom)?;
            p = p.add(&PuiseuxPoly::monomial(c, e));
        }
        Ok(p)
    }
}

/// A rectangular matrix of Puiseux polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PuiseuxMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<PuiseuxPoly>>,
}

impl PuiseuxMatrix {
    pub fn new(entries: Vec<Vec<PuiseuxPoly>>) -> Result<Self, PuiseuxError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|r| r.len() != cols) {
            return Err(PuiseuxError::Ragged);
        }
        Ok(PuiseuxMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PuiseuxMatrix {
            rows,
            cols,
            entries: vec![vec![PuiseuxPoly::zero(); cols]; rows],
        }
    }

    /// Determinant of a square matrix by cofactor expansion along the row
    /// with the fewest nonzero entries (entries are sparse monomials, so
    /// this is cheap at the scales involved).
    pub fn determinant(&self) -> Result<PuiseuxPoly, PuiseuxError> {
        if self.rows != self.cols {
            return Err(PuiseuxError::Shape(self.rows, self.cols));
        }
        if self.cols > 9 {
            return Err(PuiseuxError::TooWide(self.cols));
        }
        Ok(det_rec(&self.entries))
    }

    /// Determinants of the column-deletion submatrices of an
    /// `(n-1) x n` matrix, in column order. Raw determinants: no sign
    /// normalization is applied (the construction these verify already
    /// matches the row-span Plücker convention with raw signs).
    pub fn maximal_minors(&self) -> Result<Vec<PuiseuxPoly>, PuiseuxError> {
        if self.cols > 9 {
            return Err(PuiseuxError::TooWide(self.cols));
        }
        if self.rows == self.cols {
            return Ok(vec![self.determinant()?]);
        }
        if self.rows + 1 != self.cols {
            return Err(PuiseuxError::Shape(self.rows, self.cols));
        }
        (0..self.cols)
            .map(|omit| {
                let sub: Vec<Vec<PuiseuxPoly>> = self
                    .entries
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != omit)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                Ok(det_rec(&sub))
            })
            .collect()
    }
}

fn det_rec(m: &[Vec<PuiseuxPoly>]) -> PuiseuxPoly {
    let n = m.len();
    if n == 0 {
        return PuiseuxPoly::constant(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    // expand along the sparsest row
    let row = (0..n)
        .min_by_key(|&r| m[r].iter().filter(|p| !p.is_zero()).count())
        .unwrap();
    let mut det = PuiseuxPoly::zero();
    for c in 0..n {
        if m[row][c].is_zero() {
            continue;
        }
        let sub: Vec<Vec<PuiseuxPoly>> = m
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != row)
            .map(|(_, rw)| {
                rw.iter()
                    .enumerate()
                    .filter(|&(cc, _)| cc != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = m[row][c].mul(&det_rec(&sub));
        if (row + c) % 2 == 0 {
            det = det.add(&cofactor);
        } else {
            det = det.sub(&cofactor);
        }
    }
    det
}
