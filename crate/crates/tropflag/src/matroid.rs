//! Valuated matroids in the min-plus convention.
//!
//! A valuated matroid of rank `d` on ground set `[n] = {1, …, n}` is a map
//! `μ : C([n], d) → ℚ ∪ {∞}`, not identically `∞`, satisfying the tropical
//! Plücker relations: for every `S` of size `d-1` and `T` of size `d+1`
//! (no containment required) the minimum of
//!
//! ```text
//!   μ(S ∪ t) + μ(T \ t)   over t ∈ T \ S
//! ```
//!
//! is attained at least twice. Subsets whose value is `∞` are simply absent
//! from the backing map; the finite-valued subsets are the *support* and
//! form the bases of the underlying matroid.

use crate::trop::{min_achieved_twice, Fin, Inf, Rat, TropProjVector, TropValue};
use crate::util;
use itertools::Itertools;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A sorted subset of the ground set, elements 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub Vec<usize>);

impl Subset {
    /// Build from arbitrary element order; fails on duplicates.
    pub fn new(mut elems: Vec<usize>) -> Result<Self, MatroidError> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(MatroidError::BadSubset(format!("{elems:?} has duplicates")));
        }
        Ok(Subset(elems))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    /// `self ∪ {e}`; `e` must not already be present.
    pub fn with(&self, e: usize) -> Subset {
        debug_assert!(!self.contains(e));
        let mut v = self.0.clone();
        let pos = v.partition_point(|&x| x < e);
        v.insert(pos, e);
        Subset(v)
    }

    /// `self \ {e}`.
    pub fn without(&self, e: usize) -> Subset {
        Subset(self.0.iter().copied().filter(|&x| x != e).collect())
    }

    /// Elements of `self` not in `other`, ascending.
    pub fn diff(&self, other: &Subset) -> Vec<usize> {
        self.0.iter().copied().filter(|e| !other.contains(*e)).collect()
    }

    /// `[n] \ self`.
    pub fn complement(&self, n: usize) -> Subset {
        Subset((1..=n).filter(|&e| !self.contains(e)).collect())
    }

    /// Render as a JSON map key: concatenated digits when `n ≤ 9`, a
    /// comma-separated list otherwise. The empty set is `""`.
    pub fn key(&self, n: usize) -> String {
        if n <= 9 {
            self.0.iter().map(|e| e.to_string()).collect()
        } else {
            self.0.iter().map(|e| e.to_string()).join(",")
        }
    }

    /// Parse a JSON map key (inverse of [`Subset::key`]).
    pub fn parse_key(s: &str, n: usize) -> Result<Self, MatroidError> {
        let bad = || MatroidError::BadSubset(s.to_string());
        let elems: Vec<usize> = if s.is_empty() {
            vec![]
        } else if n <= 9 && !s.contains(',') {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        } else {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        if elems.iter().any(|&e| e == 0 || e > n) {
            return Err(bad());
        }
        Subset::new(elems)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// All `k`-subsets of `[n]`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Subset> {
    (1..=n).combinations(k).map(Subset).collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("malformed subset {0:?}")]
    BadSubset(String),
    #[error("subset {0} does not have size {1}")]
    WrongSize(String, usize),
    #[error("empty support: the valuation is identically inf")]
    EmptySupport,
    #[error("tropical Plücker relation fails at S={s}, T={t}: terms {terms:?}")]
    Plucker { s: String, t: String, terms: Vec<String> },
    #[error("{op} would drop the rank: no basis {kind} {elems}")]
    RankDrop { op: String, kind: String, elems: String },
    #[error("vector length {0} does not match ground set size {1}")]
    VectorLength(usize, usize),
    #[error("rank {d} out of range for ground set of size {n}")]
    BadRank { d: usize, n: usize },
}

/// Witness of a failed tropical Plücker relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerWitness {
    pub s: Subset,
    pub t: Subset,
    pub terms: Vec<TropValue>,
}

impl PluckerWitness {
    fn into_error(self) -> MatroidError {
        MatroidError::Plucker {
            s: self.s.to_string(),
            t: self.t.to_string(),
            terms: self.terms.iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// A valuated matroid: only finite values are stored, absent subsets are `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuatedMatroid {
    n: usize,
    d: usize,
    values: BTreeMap<Subset, Rat>,
}

impl ValuatedMatroid {
    pub fn new(
        n: usize,
        d: usize,
        values: BTreeMap<Subset, Rat>,
    ) -> Result<Self, MatroidError> {
        if d > n {
            return Err(MatroidError::BadRank { d, n });
        }
        for b in values.keys() {
            if b.len() != d {
                return Err(MatroidError::WrongSize(b.to_string(), d));
            }
            if b.0.iter().any(|&e| e == 0 || e > n) {
                return Err(MatroidError::BadSubset(b.to_string()));
            }
        }
        Ok(ValuatedMatroid { n, d, values })
    }

    /// The uniform matroid `U(d, n)` with the trivial (all-zero) valuation.
    pub fn uniform_trivial(d: usize, n: usize) -> Self {
        let values = subsets(n, d).into_iter().map(|b| (b, Rat::from_integer(0))).collect();
        ValuatedMatroid { n, d, values }
    }

    /// Trivial valuation (0/∞) with the given bases.
    pub fn trivial_on(n: usize, d: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self, MatroidError> {
        Self::new(n, d, bases.into_iter().map(|b| (b, Rat::from_integer(0))).collect())
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn value(&self, b: &Subset) -> TropValue {
        match self.values.get(b) {
            Some(v) => Fin(*v),
            None => Inf,
        }
    }

    /// The bases (finite-valued subsets), ascending.
    pub fn support(&self) -> impl Iterator<Item = &Subset> {
        self.values.keys()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&e| !self.values.keys().any(|b| b.contains(e)))
            .collect()
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&e| !self.values.is_empty() && self.values.keys().all(|b| b.contains(e)))
            .collect()
    }

    /// All values in lexicographic subset order, as a projective vector.
    pub fn proj_vector(&self) -> TropProjVector {
        TropProjVector(subsets(self.n, self.d).iter().map(|b| self.value(b)).collect())
    }

    /// First (lexicographic in `(S, T)`) failing Plücker relation, if any.
    ///
    /// Scans every `S ∈ C([n], d-1)` against every `T ∈ C([n], d+1)`; the
    /// relation pairs each `t ∈ T \ S` with the term `μ(S∪t) + μ(T\t)`.
    pub fn plucker_witness(&self) -> Option<PluckerWitness> {
        if self.d == 0 || self.d == self.n {
            return None;
        }
        let ss = subsets(self.n, self.d - 1);
        let ts = subsets(self.n, self.d + 1);
        util::first_witness(&ss, |s| {
            for t in &ts {
                let terms: Vec<TropValue> = t
                    .diff(s)
                    .into_iter()
                    .map(|e| self.value(&s.with(e)).mul(self.value(&t.without(e))))
                    .collect();
                if !min_achieved_twice(&terms) {
                    return Some(PluckerWitness { s: s.clone(), t: t.clone(), terms });
                }
            }
            None
        })
    }

    /// Check non-empty support and all tropical Plücker relations.
    pub fn validate_plucker(&self) -> Result<(), MatroidError> {
        if self.values.is_empty() {
            return Err(MatroidError::EmptySupport);
        }
        match self.plucker_witness() {
            None => Ok(()),
            Some(w) => Err(w.into_error()),
        }
    }

    /// Three-term positive Plücker check: for every pair `(S, T)` with
    /// `|S| = d-1`, `|T| = d+1` and `T \ S = {t₁ < t₂ < t₃}`, the middle
    /// term must attain the minimum: `λ₂ = λ₁ ⊕ λ₃`. Together with the
    /// Plücker relations this characterises valuated positroids.
    pub fn is_valuated_positroid_3term(&self) -> Result<(), PluckerWitness> {
        if self.d == 0 || self.d == self.n {
            return Ok(());
        }
        let ss = subsets(self.n, self.d - 1);
        let ts = subsets(self.n, self.d + 1);
        let w = util::first_witness(&ss, |s| {
            for t in &ts {
                let free = t.diff(s);
                if free.len() != 3 {
                    continue;
                }
                let terms: Vec<TropValue> = free
                    .iter()
                    .map(|&e| self.value(&s.with(e)).mul(self.value(&t.without(e))))
                    .collect();
                if terms[1] != terms[0].add(terms[2]) {
                    return Some(PluckerWitness { s: s.clone(), t: t.clone(), terms });
                }
            }
            None
        });
        match w {
            None => Ok(()),
            Some(w) => Err(w),
        }
    }

    /// The dual valuated matroid `μ*(B) = μ([n] \ B)` of rank `n - d`.
    pub fn dual(&self) -> ValuatedMatroid {
        let values = self
            .values
            .iter()
            .map(|(b, v)| (b.complement(self.n), *v))
            .collect();
        ValuatedMatroid { n: self.n, d: self.n - self.d, values }
    }

    /// General minor: contract the elements of `contract`, delete those of
    /// `delete`, then relabel the remaining ground set order-preservingly to
    /// `[n - |contract| - |delete|]`. Values are `μ(B ∪ contract)` on the
    /// subsets avoiding both parts. Fails if the support becomes empty
    /// (deleting a coloop or contracting a loop).
    pub fn minor(&self, contract: &Subset, delete: &Subset) -> Result<ValuatedMatroid, MatroidError> {
        let keep: Vec<usize> = (1..=self.n)
            .filter(|&e| !contract.contains(e) && !delete.contains(e))
            .collect();
        let relabel: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &e)| (e, i + 1)).collect();
        let mut values = BTreeMap::new();
        for (b, v) in &self.values {
            if contract.0.iter().all(|&e| b.contains(e))
                && delete.0.iter().all(|&e| !b.contains(e))
            {
                let nb = Subset(b.0.iter().filter_map(|e| relabel.get(e).copied()).collect());
                values.insert(nb, *v);
            }
        }
        if values.is_empty() {
            return Err(MatroidError::RankDrop {
                op: format!("minor(contract {contract}, delete {delete})"),
                kind: "containing/avoiding".into(),
                elems: format!("{contract} / {delete}"),
            });
        }
        ValuatedMatroid::new(keep.len(), self.d - contract.len(), values)
    }

    /// Delete a single non-coloop element.
    pub fn delete(&self, e: usize) -> Result<ValuatedMatroid, MatroidError> {
        self.minor(&Subset(vec![]), &Subset(vec![e])).map_err(|_| MatroidError::RankDrop {
            op: format!("delete({e})"),
            kind: "avoiding".into(),
            elems: e.to_string(),
        })
    }

    /// Contract a single non-loop element.
    pub fn contract(&self, e: usize) -> Result<ValuatedMatroid, MatroidError> {
        self.minor(&Subset(vec![e]), &Subset(vec![])).map_err(|_| MatroidError::RankDrop {
            op: format!("contract({e})"),
            kind: "containing".into(),
            elems: e.to_string(),
        })
    }

    /// Restrict to `keep` (delete the complement), relabelling to `[|keep|]`.
    pub fn restrict(&self, keep: &Subset) -> Result<ValuatedMatroid, MatroidError> {
        self.minor(&Subset(vec![]), &keep.complement(self.n))
    }

    /// Translate by `x ∈ ℚⁿ`: `(μ + x)(B) = μ(B) + Σ_{i∈B} x_i`.
    pub fn translate(&self, x: &[Rat]) -> Result<ValuatedMatroid, MatroidError> {
        if x.len() != self.n {
            return Err(MatroidError::VectorLength(x.len(), self.n));
        }
        let values = self
            .values
            .iter()
            .map(|(b, v)| {
                let shift: Rat = b.0.iter().map(|&e| x[e - 1]).sum();
                (b.clone(), *v + shift)
            })
            .collect();
        Ok(ValuatedMatroid { n: self.n, d: self.d, values })
    }

    /// The initial matroid `μ^x`: the trivial valuation on the bases
    /// minimising `μ(B) - Σ_{i∈B} x_i`.
    pub fn initial_matroid(&self, x: &[Rat]) -> Result<ValuatedMatroid, MatroidError> {
        if x.len() != self.n {
            return Err(MatroidError::VectorLength(x.len(), self.n));
        }
        if self.values.is_empty() {
            return Err(MatroidError::EmptySupport);
        }
        let shifted: Vec<(&Subset, Rat)> = self
            .values
            .iter()
            .map(|(b, v)| {
                let shift: Rat = b.0.iter().map(|&e| x[e - 1]).sum();
                (b, *v - shift)
            })
            .collect();
        let min = shifted.iter().map(|(_, v)| *v).min().expect("non-empty");
        let values = shifted
            .into_iter()
            .filter(|(_, v)| *v == min)
            .map(|(b, _)| (b.clone(), Rat::from_integer(0)))
            .collect();
        Ok(ValuatedMatroid { n: self.n, d: self.d, values })
    }
}

impl Serialize for ValuatedMatroid {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("ValuatedMatroid", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        let values: BTreeMap<String, TropValue> = self
            .values
            .iter()
            .map(|(b, v)| (b.key(self.n), Fin(*v)))
            .collect();
        st.serialize_field("values", &values)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ValuatedMatroid {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            d: usize,
            values: BTreeMap<String, TropValue>,
        }
        let raw = Raw::deserialize(de)?;
        let mut values = BTreeMap::new();
        for (k, v) in raw.values {
            let b = Subset::parse_key(&k, raw.n).map_err(D::Error::custom)?;
            match v {
                Fin(r) => {
                    values.insert(b, r);
                }
                Inf => {} // explicit "inf" entries are allowed and dropped
            }
        }
        ValuatedMatroid::new(raw.n, raw.d, values).map_err(D::Error::custom)
    }
}
