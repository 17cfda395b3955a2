//! Valuated flag matroids: chains `μ₁, …, μ_s` of valuated matroids on a
//! common ground set with strictly increasing ranks, every pair of which
//! satisfies the tropical incidence relations.
//!
//! The positivity machinery evaluates *lambda vectors*: for a Plücker pair
//! `(S, T)` with `T \ S = {t₁ < … < t_k}`, the vector
//! `λ_j = μ_lo(S ∪ t_j) + μ_hi(T \ t_j)`. The tropical relations say the
//! minimum of `λ` is attained at least twice; the positivity notions impose
//! finer conditions on the same vector:
//!
//! * total nonnegativity: `λ_j ≥ min(λ_{j-1}, λ_{j+1})` with `∞` sentinels;
//! * Bruhat (subdivision into Bruhat interval polytopes): every index
//!   attaining the global minimum has a neighbour attaining it;
//! * nonnegative flag Dressian: the minimum over odd positions equals the
//!   minimum over even positions.

use crate::matroid::{subsets, MatroidError, Subset, ValuatedMatroid};
use crate::trop::{min_achieved_twice, Inf, Rat, TropValue};
use crate::util;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FlagError {
    #[error("ranks must be non-empty and strictly increasing, got {0:?}")]
    BadRanks(Vec<usize>),
    #[error("constituent {0} has rank {1}, expected {2}")]
    RankMismatch(usize, usize, usize),
    #[error("constituent {0} lives on [{1}], expected [{2}]")]
    GroundMismatch(usize, usize, usize),
    #[error("constituent {idx} (rank {rank}): {source}")]
    Constituent {
        idx: usize,
        rank: usize,
        source: MatroidError,
    },
    #[error(
        "incidence relation between ranks {lo_rank} and {hi_rank} fails at S={s}, T={t}: terms {terms:?}"
    )]
    Incidence {
        lo_rank: usize,
        hi_rank: usize,
        s: String,
        t: String,
        terms: Vec<String>,
    },
    #[error("expected a hollow flag of ranks (1, n-1), got ranks {0:?}")]
    NotHollow(Vec<usize>),
    #[error("degenerate pair (S={s}, T={t}): {source}")]
    DegeneratePair {
        s: String,
        t: String,
        source: MatroidError,
    },
    #[error("{0}")]
    Matroid(#[from] MatroidError),
}

/// Which relation a Plücker pair belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// Single constituent: `|S| = d-1`, `|T| = d+1`, any overlap with
    /// `|T \ S| ∈ {2, 3}` (two-term pairs are vacuous, three-term pairs
    /// carry the positive Grassmann conditions).
    Grassmann,
    /// Consecutive constituents `i < i+1`: `S ⊆ T`, `|S| = dᵢ - 1`,
    /// `|T| = dᵢ₊₁ + 1`.
    Incidence,
}

/// A Plücker pair together with the constituent indices it couples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerPair {
    pub kind: PairKind,
    /// Index (0-based) of the lower constituent.
    pub lo: usize,
    /// Index of the upper constituent (`lo` itself for Grassmann pairs).
    pub hi: usize,
    pub s: Subset,
    pub t: Subset,
}

impl PlueckerPair {
    pub fn describe(&self) -> String {
        format!(
            "{:?} pair at constituents ({},{}) S={} T={}",
            self.kind,
            self.lo + 1,
            self.hi + 1,
            self.s,
            self.t
        )
    }
}

/// Outcome of the necessary positivity conditions over all Plücker pairs.
#[derive(Clone, Debug, Serialize)]
pub struct NecessaryReport {
    pub tnn: bool,
    pub bruhat: bool,
    pub nonneg: bool,
    /// First failing pair per condition: `(description, lambda)`.
    pub tnn_witness: Option<(String, Vec<String>)>,
    pub bruhat_witness: Option<(String, Vec<String>)>,
    pub nonneg_witness: Option<(String, Vec<String>)>,
}

/// A chain of valuated matroids with the incidence relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagValuatedMatroid {
    n: usize,
    ranks: Vec<usize>,
    constituents: Vec<ValuatedMatroid>,
}

impl FlagValuatedMatroid {
    /// Shape checks only; use [`validate_flag`](Self::validate_flag) for the
    /// tropical relations.
    pub fn new(n: usize, constituents: Vec<ValuatedMatroid>) -> Result<Self, FlagError> {
        let ranks: Vec<usize> = constituents.iter().map(|c| c.rank()).collect();
        if ranks.is_empty() || ranks.windows(2).any(|w| w[0] >= w[1]) || ranks.last() > Some(&n) {
            return Err(FlagError::BadRanks(ranks));
        }
        for (i, c) in constituents.iter().enumerate() {
            if c.ground_size() != n {
                return Err(FlagError::GroundMismatch(i, c.ground_size(), n));
            }
        }
        Ok(FlagValuatedMatroid { n, ranks, constituents })
    }

    /// Convenience constructor for hollow flags of ranks `(1, n-1)`.
    pub fn hollow(mu: ValuatedMatroid, nu: ValuatedMatroid) -> Result<Self, FlagError> {
        let n = mu.ground_size();
        if mu.rank() != 1 || nu.rank() != n - 1 {
            return Err(FlagError::NotHollow(vec![mu.rank(), nu.rank()]));
        }
        Self::new(n, vec![mu, nu])
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn constituents(&self) -> &[ValuatedMatroid] {
        &self.constituents
    }

    pub fn constituent(&self, i: usize) -> &ValuatedMatroid {
        &self.constituents[i]
    }

    pub fn is_hollow(&self) -> bool {
        self.ranks == [1, self.n - 1]
    }

    /// The lambda vector of a Plücker pair, ordered by ascending `t ∈ T\S`.
    pub fn lambda_values(&self, pair: &PlueckerPair) -> Vec<TropValue> {
        let lo = &self.constituents[pair.lo];
        let hi = &self.constituents[pair.hi];
        pair.t
            .diff(&pair.s)
            .into_iter()
            .map(|e| lo.value(&pair.s.with(e)).mul(hi.value(&pair.t.without(e))))
            .collect()
    }

    /// Enumerate all Plücker pairs: Grassmann pairs (per constituent, any
    /// overlap, `|T \ S| ∈ {2, 3}`) followed by incidence pairs (consecutive
    /// constituents, `S ⊆ T`). Deterministic lexicographic order.
    pub fn enumerate_pluecker_pairs(&self) -> Vec<PlueckerPair> {
        let mut pairs = Vec::new();
        for (i, c) in self.constituents.iter().enumerate() {
            let d = c.rank();
            if d == 0 || d == self.n {
                continue;
            }
            for s in subsets(self.n, d - 1) {
                for t in subsets(self.n, d + 1) {
                    let free = t.diff(&s).len();
                    if free == 2 || free == 3 {
                        pairs.push(PlueckerPair {
                            kind: PairKind::Grassmann,
                            lo: i,
                            hi: i,
                            s: s.clone(),
                            t,
                        });
                    }
                }
            }
        }
        for i in 0..self.constituents.len() - 1 {
            let (dlo, dhi) = (self.ranks[i], self.ranks[i + 1]);
            if dlo == 0 {
                continue;
            }
            for s in subsets(self.n, dlo - 1) {
                for t in subsets(self.n, dhi + 1) {
                    if s.0.iter().all(|&e| t.contains(e)) {
                        pairs.push(PlueckerPair {
                            kind: PairKind::Incidence,
                            lo: i,
                            hi: i + 1,
                            s: s.clone(),
                            t,
                        });
                    }
                }
            }
        }
        pairs
    }

    /// Validate every constituent and every incidence relation. Incidence
    /// relations are checked for *all* ordered constituent pairs `i < j` and
    /// all `(S, T)` with `|S| = dᵢ - 1`, `|T| = d_j + 1` (no containment
    /// required): the minimum of the lambda terms must be attained twice.
    pub fn validate_flag(&self) -> Result<(), FlagError> {
        for (i, c) in self.constituents.iter().enumerate() {
            c.validate_plucker().map_err(|source| FlagError::Constituent {
                idx: i,
                rank: c.rank(),
                source,
            })?;
        }
        for i in 0..self.constituents.len() {
            for j in i + 1..self.constituents.len() {
                let (lo, hi) = (&self.constituents[i], &self.constituents[j]);
                let (dlo, dhi) = (lo.rank(), hi.rank());
                if dlo == 0 || dhi == self.n {
                    continue;
                }
                let ss = subsets(self.n, dlo - 1);
                let ts = subsets(self.n, dhi + 1);
                let witness = util::first_witness(&ss, |s| {
                    for t in &ts {
                        let terms: Vec<TropValue> = t
                            .diff(s)
                            .into_iter()
                            .map(|e| lo.value(&s.with(e)).mul(hi.value(&t.without(e))))
                            .collect();
                        if !min_achieved_twice(&terms) {
                            return Some((s.clone(), t.clone(), terms));
                        }
                    }
                    None
                });
                if let Some((s, t, terms)) = witness {
                    return Err(FlagError::Incidence {
                        lo_rank: dlo,
                        hi_rank: dhi,
                        s: s.to_string(),
                        t: t.to_string(),
                        terms: terms.iter().map(|v| v.to_string()).collect(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Evaluate the necessary positivity conditions on every Plücker pair.
    pub fn check_necessary(&self) -> NecessaryReport {
        let pairs = self.enumerate_pluecker_pairs();
        let lambdas = util::ordered_map(&pairs, |p| self.lambda_values(p));
        let mut report = NecessaryReport {
            tnn: true,
            bruhat: true,
            nonneg: true,
            tnn_witness: None,
            bruhat_witness: None,
            nonneg_witness: None,
        };
        for (pair, lambda) in pairs.iter().zip(&lambdas) {
            let witness = || {
                (
                    pair.describe(),
                    lambda.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                )
            };
            if report.tnn && !lambda_tnn(lambda) {
                report.tnn = false;
                report.tnn_witness = Some(witness());
            }
            if report.bruhat && !lambda_bruhat(lambda) {
                report.bruhat = false;
                report.bruhat_witness = Some(witness());
            }
            if report.nonneg && !lambda_nonneg(lambda) {
                report.nonneg = false;
                report.nonneg_witness = Some(witness());
            }
        }
        report
    }

    /// The dual flag: constituents dualised and reversed, ranks
    /// `(n - d_s, …, n - d_1)`.
    pub fn dual(&self) -> FlagValuatedMatroid {
        let constituents: Vec<ValuatedMatroid> =
            self.constituents.iter().rev().map(|c| c.dual()).collect();
        FlagValuatedMatroid::new(self.n, constituents).expect("dual ranks are valid")
    }

    /// Translate every constituent by the same vector `x ∈ ℚⁿ`.
    pub fn translate(&self, x: &[Rat]) -> Result<FlagValuatedMatroid, FlagError> {
        let constituents = self
            .constituents
            .iter()
            .map(|c| c.translate(x))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FlagValuatedMatroid { n: self.n, ranks: self.ranks.clone(), constituents })
    }

    /// Project an incidence pair `(S, T)`, `S ⊆ T`, between consecutive
    /// constituents to a hollow flag on ground set `T \ S` (relabelled
    /// order-preservingly): contract `S` and restrict to `T` in both
    /// constituents. Returns the hollow flag and the original labels of the
    /// new ground set. Its lambda vector for the pair `(∅, [m])` equals the
    /// lambda vector of `(S, T)` projectively.
    pub fn hollow_projection(
        &self,
        pair: &PlueckerPair,
    ) -> Result<(FlagValuatedMatroid, Vec<usize>), FlagError> {
        assert_eq!(pair.kind, PairKind::Incidence, "hollow projection needs an incidence pair");
        let labels = pair.t.diff(&pair.s);
        let degenerate = |source: MatroidError| FlagError::DegeneratePair {
            s: pair.s.to_string(),
            t: pair.t.to_string(),
            source,
        };
        let outside = pair.t.complement(self.n);
        let mu = self.constituents[pair.lo]
            .minor(&pair.s, &outside)
            .map_err(degenerate)?;
        let nu = self.constituents[pair.hi]
            .minor(&pair.s, &outside)
            .map_err(|source| FlagError::DegeneratePair {
                s: pair.s.to_string(),
                t: pair.t.to_string(),
                source,
            })?;
        Ok((FlagValuatedMatroid::hollow(mu, nu)?, labels))
    }
}

/// Condition for total nonnegativity: `λ_j ≥ λ_{j-1} ⊕ λ_{j+1}` with `∞`
/// sentinels at both ends.
pub fn lambda_tnn(lambda: &[TropValue]) -> bool {
    let k = lambda.len();
    let get = |i: isize| -> TropValue {
        if i < 1 || i as usize > k {
            Inf
        } else {
            lambda[i as usize - 1]
        }
    };
    (1..=k as isize).all(|j| get(j) >= get(j - 1).add(get(j + 1)))
}

/// Condition for subdivisions into Bruhat interval polytopes: every index
/// attaining the (finite) global minimum has an adjacent index attaining it.
pub fn lambda_bruhat(lambda: &[TropValue]) -> bool {
    let m = match lambda.iter().min() {
        Some(&m) if m != Inf => m,
        _ => return true,
    };
    (0..lambda.len()).all(|j| {
        lambda[j] != m
            || (j > 0 && lambda[j - 1] == m)
            || (j + 1 < lambda.len() && lambda[j + 1] == m)
    })
}

/// Condition for the nonnegative flag Dressian: minimum over odd positions
/// (1-based) equals minimum over even positions.
pub fn lambda_nonneg(lambda: &[TropValue]) -> bool {
    let min_of = |parity: usize| {
        lambda
            .iter()
            .enumerate()
            .filter(|(i, _)| (i + 1) % 2 == parity)
            .map(|(_, v)| *v)
            .min()
            .unwrap_or(Inf)
    };
    min_of(1) == min_of(0)
}

impl Serialize for FlagValuatedMatroid {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("FlagValuatedMatroid", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("ranks", &self.ranks)?;
        st.serialize_field("constituents", &self.constituents)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for FlagValuatedMatroid {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            ranks: Vec<usize>,
            constituents: Vec<ValuatedMatroid>,
        }
        let raw = Raw::deserialize(de)?;
        let flag = FlagValuatedMatroid::new(raw.n, raw.constituents).map_err(D::Error::custom)?;
        if flag.ranks != raw.ranks {
            return Err(D::Error::custom(format!(
                "declared ranks {:?} do not match constituent ranks {:?}",
                raw.ranks, flag.ranks
            )));
        }
        Ok(flag)
    }
}
