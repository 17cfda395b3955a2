//! Valuated flag gammoids: minimum-weight vertex-disjoint linkings.
//!
//! A weighted digraph `Γ` with `[n]` among its vertices and a strict chain
//! of sink sets `S_1 ⊂ … ⊂ S_s` determines a valuated flag matroid: the
//! constituent of rank `|S_i|` assigns to each `I ⊆ [n]` the minimum total
//! weight of a system of `|I|` vertex-disjoint paths from `I` onto `S_i`
//! (`∞` if none exists). Minimum weights are computed exactly by
//! min-cost flow on the vertex-split network, one unit of capacity per
//! vertex.
//!
//! For a hollow flag matroid whose polytope is a Bruhat interval polytope,
//! the graph `Γ` can be built from the support alone: a chain through the
//! non-loops of the rank-1 part, plus diagonal edges into the barred copies
//! of a subsequence `b` of the non-coloops of the corank-1 part. Choosing
//! the diagonal weights appropriately parametrizes exactly the totally
//! non-negative hollow flags, and the weights can be recovered from the
//! lambda vector.

use crate::flag::FlagValuatedMatroid;
use crate::hollow::{classify, is_bruhat_polytope, symbol_sequence, HollowError};
use crate::matroid::{subsets, MatroidError, Subset, ValuatedMatroid};
use crate::trop::{parse_rat, Rat, TropValue};
use crate::util;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GammoidError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("edge endpoint {0:?} is not a vertex")]
    UnknownVertex(String),
    #[error("vertex labels must contain \"1\"..\"n\"; missing {0:?}")]
    MissingGround(String),
    #[error("negative-weight cycle detected")]
    NegativeCycle,
    #[error("sink flag is not a strict increasing chain")]
    BadSinkFlag,
    #[error("sink set size {0} exceeds the ground set size {1}")]
    SinkTooLarge(usize, usize),
    #[error("constituent of rank {0} has empty support: no subset has a linking")]
    EmptySupport(usize),
    #[error("not Bruhat: symbol sequence {0} has an isolated *")]
    NotBruhat(String),
    #[error("not tnn: lambda vector fails the total non-negativity inequality")]
    NotTnn,
    #[error("expected {0} weights, got {1}")]
    WeightCount(usize, usize),
    #[error("degenerate sink flag: largest chain vertex coincides with the first diagonal source")]
    DegenerateSinks,
    #[error(transparent)]
    Hollow(#[from] HollowError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("cannot parse weight: {0}")]
    Weight(String),
}

/// A directed graph with rational edge weights and labeled vertices. The
/// ground set `[n]` is the maximal run of labels `"1", …, "n"`; barred
/// copies are conventionally labeled `"1b", …, "nb"`. Parallel edges are
/// collapsed to the minimum weight; negative-weight cycles are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    // adjacency as (from, to, weight), parallel-minimized
    edges: BTreeMap<(usize, usize), Rat>,
    ground: usize,
}

impl WeightedDigraph {
    pub fn new(
        labels: Vec<String>,
        edges: Vec<(String, String, Rat)>,
    ) -> Result<Self, GammoidError> {
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GammoidError::DuplicateVertex(l.clone()));
            }
        }
        let mut ground = 0;
        while index.contains_key(&(ground + 1).to_string()) {
            ground += 1;
        }
        if ground == 0 {
            return Err(GammoidError::MissingGround("1".into()));
        }
        let mut edge_map: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (f, t, w) in edges {
            let fi = *index.get(&f).ok_or(GammoidError::UnknownVertex(f))?;
            let ti = *index.get(&t).ok_or(GammoidError::UnknownVertex(t))?;
            edge_map
                .entry((fi, ti))
                .and_modify(|old| *old = (*old).min(w))
                .or_insert(w);
        }
        let g = WeightedDigraph { labels, index, edges: edge_map, ground };
        if g.has_negative_cycle() {
            return Err(GammoidError::NegativeCycle);
        }
        Ok(g)
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edge_list(&self) -> Vec<(String, String, Rat)> {
        self.edges
            .iter()
            .map(|(&(f, t), &w)| (self.labels[f].clone(), self.labels[t].clone(), w))
            .collect()
    }

    fn has_negative_cycle(&self) -> bool {
        // Bellman-Ford from a virtual source connected to every vertex
        let v = self.labels.len();
        let mut dist = vec![Rat::from_integer(0); v];
        for round in 0..v {
            let mut changed = false;
            for (&(f, t), &w) in &self.edges {
                if dist[f] + w < dist[t] {
                    dist[t] = dist[f] + w;
                    changed = true;
                }
            }
            if !changed {
                return false;
            }
            if round == v - 1 {
                return true;
            }
        }
        false
    }

    /// Minimum total weight of a system of vertex-disjoint paths from the
    /// ground-set elements of `sources` onto `sinks` (every sink covered),
    /// together with the witnessing paths; `None` if no linking exists.
    pub fn min_weight_linking_witness(
        &self,
        sources: &Subset,
        sinks: &BTreeSet<String>,
    ) -> Option<Linking> {
        if sources.len() != sinks.len() {
            return None;
        }
        let sink_idx: Vec<usize> = sinks
            .iter()
            .map(|l| self.index.get(l).copied())
            .collect::<Option<_>>()?;
        let src_idx: Vec<usize> = sources
            .0
            .iter()
            .map(|&i| self.index.get(&i.to_string()).copied())
            .collect::<Option<_>>()?;
        let flow = self.min_cost_linking_flow(&src_idx, &sink_idx)?;
        Some(flow)
    }

    /// Weight-only variant of [`min_weight_linking_witness`](Self::min_weight_linking_witness).
    pub fn min_weight_linking(&self, sources: &Subset, sinks: &BTreeSet<String>) -> TropValue {
        match self.min_weight_linking_witness(sources, sinks) {
            Some(l) => TropValue::Fin(l.weight),
            None => TropValue::Inf,
        }
    }

    /// Min-cost flow on the vertex-split network: node `v` becomes
    /// `v_in → v_out` with capacity 1, so paths are vertex-disjoint.
    /// Successive shortest paths by Bellman-Ford (edge weights may be
    /// negative; the residual network stays free of negative cycles
    /// because every augmentation uses a shortest path).
    fn min_cost_linking_flow(&self, sources: &[usize], sinks: &[usize]) -> Option<Linking> {
        let v = self.labels.len();
        let node_in = |x: usize| 2 * x;
        let node_out = |x: usize| 2 * x + 1;
        let (s, t) = (2 * v, 2 * v + 1);
        let mut net = FlowNet::new(2 * v + 2);
        for x in 0..v {
            net.add(node_in(x), node_out(x), Rat::from_integer(0));
        }
        for (&(f, to), &w) in &self.edges {
            net.add(node_out(f), node_in(to), w);
        }
        for &src in sources {
            net.add(s, node_in(src), Rat::from_integer(0));
        }
        for &snk in sinks {
            net.add(node_out(snk), t, Rat::from_integer(0));
        }
        let mut total = Rat::from_integer(0);
        for _ in 0..sources.len() {
            total += net.augment(s, t)?;
        }
        // decompose the flow into paths, one per source
        let mut paths = Vec::new();
        for &src in sources {
            let mut path = vec![self.labels[src].clone()];
            let mut cur = node_out(src);
            loop {
                let next = net.flow_successor(cur).expect("saturated unit flow");
                if next == t {
                    break;
                }
                // next is some node_in(x); hop over the split edge
                let x = next / 2;
                path.push(self.labels[x].clone());
                cur = node_out(x);
            }
            paths.push(path);
        }
        Some(Linking { paths, weight: total })
    }
}

/// A system of vertex-disjoint paths and its total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linking {
    /// Vertex labels along each path, source first.
    pub paths: Vec<Vec<String>>,
    pub weight: Rat,
}

struct FlowEdge {
    to: usize,
    cap: i64,
    cost: Rat,
}

struct FlowNet {
    // edges stored in pairs: edge 2k and its reverse 2k+1
    edges: Vec<FlowEdge>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { edges: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cost: Rat) {
        self.adj[from].push(self.edges.len());
        self.edges.push(FlowEdge { to, cap: 1, cost });
        self.adj[to].push(self.edges.len());
        self.edges.push(FlowEdge { to: from, cap: 0, cost: -cost });
    }

    /// Send one unit along a minimum-cost residual path; returns its cost.
    fn augment(&mut self, s: usize, t: usize) -> Option<Rat> {
        let n = self.adj.len();
        let mut dist: Vec<Option<Rat>> = vec![None; n];
        let mut prev: Vec<Option<usize>> = vec![None; n];
        dist[s] = Some(Rat::from_integer(0));
        for _ in 0..n {
            let mut changed = false;
            for u in 0..n {
                let Some(du) = dist[u] else { continue };
                for &e in &self.adj[u] {
                    let edge = &self.edges[e];
                    if edge.cap == 0 {
                        continue;
                    }
                    let cand = du + edge.cost;
                    if dist[edge.to].map_or(true, |dv| cand < dv) {
                        dist[edge.to] = Some(cand);
                        prev[edge.to] = Some(e);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let cost = dist[t]?;
        let mut cur = t;
        while cur != s {
            let e = prev[cur].expect("path recorded");
            self.edges[e].cap -= 1;
            self.edges[e ^ 1].cap += 1;
            cur = self.edges[e ^ 1].to;
        }
        Some(cost)
    }

    /// The unique saturated forward edge out of `node`, if any.
    fn flow_successor(&self, node: usize) -> Option<usize> {
        self.adj[node]
            .iter()
            .find(|&&e| e % 2 == 0 && self.edges[e].cap == 0)
            .map(|&e| self.edges[e].to)
    }
}

/// A strict increasing chain of sink sets, by vertex label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkFlag {
    sets: Vec<BTreeSet<String>>,
}

impl SinkFlag {
    pub fn new(sets: Vec<BTreeSet<String>>) -> Result<Self, GammoidError> {
        for w in sets.windows(2) {
            if w[0].len() >= w[1].len() || !w[0].is_subset(&w[1]) {
                return Err(GammoidError::BadSinkFlag);
            }
        }
        if sets.is_empty() {
            return Err(GammoidError::BadSinkFlag);
        }
        Ok(SinkFlag { sets })
    }

    pub fn sets(&self) -> &[BTreeSet<String>] {
        &self.sets
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.sets.iter().map(BTreeSet::len).collect()
    }
}

/// Evaluate the valuated flag gammoid of `(graph, sinks)`: one constituent
/// per sink set, assigning each subset of the ground set the minimum
/// linking weight onto that set.
pub fn evaluate_gammoid(
    graph: &WeightedDigraph,
    sinks: &SinkFlag,
) -> Result<FlagValuatedMatroid, GammoidError> {
    let n = graph.ground_size();
    let mut constituents = Vec::new();
    for set in sinks.sets() {
        let d = set.len();
        if d > n {
            return Err(GammoidError::SinkTooLarge(d, n));
        }
        let candidates = subsets(n, d);
        let weights = util::ordered_map(&candidates, |i| graph.min_weight_linking(i, set));
        let values: BTreeMap<Subset, Rat> = candidates
            .into_iter()
            .zip(weights)
            .filter_map(|(b, w)| match w {
                TropValue::Fin(v) => Some((b, v)),
                TropValue::Inf => None,
            })
            .collect();
        if values.is_empty() {
            return Err(GammoidError::EmptySupport(d));
        }
        constituents.push(ValuatedMatroid::new(n, d, values)?);
    }
    let flag = FlagValuatedMatroid::new(n, constituents).map_err(HollowError::Flag)?;
    debug_assert!(flag.validate_flag().is_ok(), "gammoid evaluation must be a valid flag");
    Ok(flag)
}

/// Gauge-translate: produce `(graph', sinks')` whose gammoid evaluation is
/// the translation of the original one by `x` (coordinate `i` of every
/// value containing `i` grows by `x_i`). Ground vertices appearing in a
/// sink set are first rerouted through a fresh auxiliary vertex so that
/// paths ending there are unaffected.
pub fn gauge_translate(
    graph: &WeightedDigraph,
    sinks: &SinkFlag,
    x: &[Rat],
) -> Result<(WeightedDigraph, SinkFlag), GammoidError> {
    let n = graph.ground_size();
    if x.len() != n {
        return Err(GammoidError::WeightCount(n, x.len()));
    }
    let mut labels = graph.labels().to_vec();
    let mut edges = graph.edge_list();
    let mut sink_sets: Vec<BTreeSet<String>> = sinks.sets().to_vec();
    // reroute sink members of [n] through auxiliary vertices
    for i in 1..=n {
        let label = i.to_string();
        if x[i - 1] == Rat::from_integer(0) || !sink_sets.iter().any(|s| s.contains(&label)) {
            continue;
        }
        let aux = format!("{i}x");
        labels.push(aux.clone());
        edges.push((label.clone(), aux.clone(), Rat::from_integer(0)));
        for s in &mut sink_sets {
            if s.remove(&label) {
                s.insert(aux.clone());
            }
        }
    }
    // the gauge action: +x_i on edges leaving i, -x_i on edges entering i
    for (f, t, w) in &mut edges {
        if let Ok(i) = f.parse::<usize>() {
            if i >= 1 && i <= n {
                *w += x[i - 1];
            }
        }
        if let Ok(i) = t.parse::<usize>() {
            if i >= 1 && i <= n {
                *w -= x[i - 1];
            }
        }
    }
    Ok((WeightedDigraph::new(labels, edges)?, SinkFlag::new(sink_sets)?))
}

/// The combinatorial skeleton of the parametrizing graph of a hollow flag
/// matroid with a Bruhat polytope: chain vertices `a` (non-loops of the
/// rank-1 part), diagonal sources `b` (non-coloops of the corank-1 part,
/// minus the last element of each run of positions that are free on both
/// sides), and the two sink sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSkeleton {
    pub n: usize,
    /// Ascending chain `a_1 < … < a_α`; chain edges `(a_i, a_{i+1})`.
    pub a: Vec<usize>,
    /// Diagonal sources `b_1 < … < b_β`; diagonal edges `(b_i, b̄_{i+1})`.
    pub b: Vec<usize>,
}

impl GammaSkeleton {
    /// Sink flag `S_1 = {ā_α}`, `S_2 = [n̄] ∖ {b̄_1}`.
    pub fn sink_flag(&self) -> Result<SinkFlag, GammoidError> {
        let top = format!("{}b", self.a.last().expect("nonempty chain"));
        let b1 = format!("{}b", self.b.first().expect("nonempty diagonal sources"));
        if top == b1 {
            return Err(GammoidError::DegenerateSinks);
        }
        let s2: BTreeSet<String> = (1..=self.n)
            .map(|i| format!("{i}b"))
            .filter(|l| *l != b1)
            .collect();
        SinkFlag::new(vec![BTreeSet::from([top]), s2])
    }

    /// Number of chain-edge and diagonal-edge weight slots.
    pub fn weight_slots(&self) -> (usize, usize) {
        (self.a.len().saturating_sub(1), self.b.len().saturating_sub(1))
    }

    /// Instantiate the weight slots: vertical edges `(i, ī)` weigh 0,
    /// chain edges take `chain`, diagonal edges take `diag`.
    pub fn with_weights(
        &self,
        chain: &[Rat],
        diag: &[Rat],
    ) -> Result<WeightedDigraph, GammoidError> {
        let (nc, nd) = self.weight_slots();
        if chain.len() != nc {
            return Err(GammoidError::WeightCount(nc, chain.len()));
        }
        if diag.len() != nd {
            return Err(GammoidError::WeightCount(nd, diag.len()));
        }
        let mut labels: Vec<String> = (1..=self.n).map(|i| i.to_string()).collect();
        labels.extend((1..=self.n).map(|i| format!("{i}b")));
        let mut edges: Vec<(String, String, Rat)> = (1..=self.n)
            .map(|i| (i.to_string(), format!("{i}b"), Rat::from_integer(0)))
            .collect();
        for (w, pair) in chain.iter().zip(self.a.windows(2)) {
            edges.push((pair[0].to_string(), pair[1].to_string(), *w));
        }
        for (w, pair) in diag.iter().zip(self.b.windows(2)) {
            edges.push((pair[0].to_string(), format!("{}b", pair[1]), *w));
        }
        WeightedDigraph::new(labels, edges)
    }
}

/// Build the parametrizing skeleton from the support of a hollow flag.
/// The flag polytope must be a Bruhat polytope (no isolated `*` in its
/// symbol sequence).
pub fn gamma_of(flag: &FlagValuatedMatroid) -> Result<GammaSkeleton, GammoidError> {
    let alpha = symbol_sequence(flag, None)?;
    if !is_bruhat_polytope(&alpha) {
        return Err(GammoidError::NotBruhat(alpha.to_string()));
    }
    let n = flag.ground_size();
    let a: Vec<usize> = (1..=n)
        .filter(|&i| {
            use crate::hollow::Symbol;
            matches!(alpha.symbols()[i - 1], Symbol::Minus | Symbol::Star)
        })
        .collect();
    let non_coloops: Vec<usize> = (1..=n)
        .filter(|&i| {
            use crate::hollow::Symbol;
            matches!(alpha.symbols()[i - 1], Symbol::Plus | Symbol::Star)
        })
        .collect();
    // runs of consecutive elements that are free on both sides (the `*`
    // positions); their last elements are dropped from b
    let stars = alpha.star_positions();
    let segment_last: BTreeSet<usize> = stars
        .iter()
        .filter(|&&p| !stars.contains(&(p + 1)))
        .copied()
        .collect();
    let b: Vec<usize> = non_coloops
        .into_iter()
        .filter(|i| !segment_last.contains(i))
        .collect();
    Ok(GammaSkeleton { n, a, b })
}

/// Weights recovered from a totally non-negative hollow flag: partial sums
/// `x` and diagonal weights `y` with `y_m = x_{m+1} - x_m`, such that the
/// gammoid of the skeleton with zero chain weights and diagonals `y`
/// reproduces the flag projectively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveredWeights {
    pub skeleton: GammaSkeleton,
    pub x: Vec<Rat>,
    pub y: Vec<Rat>,
}

/// Recover edge weights realizing a totally non-negative hollow flag on
/// its parametrizing graph. The flag is normalized internally so the
/// rank-1 part is trivially valued and `ν([n] ∖ b_1) = 0`; the recovered
/// weights reproduce that normalized flag exactly (the original one
/// projectively, up to the recorded translation).
pub fn recover_tnn_weights(flag: &FlagValuatedMatroid) -> Result<RecoveredWeights, GammoidError> {
    let class = classify(flag)?;
    if !class.tnn {
        return Err(GammoidError::NotTnn);
    }
    let skeleton = gamma_of(flag)?;
    let n = skeleton.n;
    // normalize: rank-1 part trivial on its support
    let mu = flag.constituent(0);
    let translation: Vec<Rat> = (1..=n)
        .map(|i| {
            let s = Subset::new(vec![i]).expect("singleton");
            match mu.value(&s) {
                TropValue::Fin(v) => -v,
                TropValue::Inf => Rat::from_integer(0),
            }
        })
        .collect();
    let flag = flag.translate(&translation).map_err(HollowError::Flag)?;
    let nu = flag.constituent(1);
    let co_val = |k: usize| {
        let s = Subset::new(vec![k]).expect("singleton");
        nu.value(&s.complement(n))
    };
    // shift so that ν([n] \ b_1) = 0
    let b1 = *skeleton.b.first().expect("nonempty b");
    let shift = match co_val(b1) {
        TropValue::Fin(v) => v,
        TropValue::Inf => return Err(GammoidError::NotTnn),
    };
    let lambda: Vec<TropValue> = crate::hollow::hollow_lambda(&flag)?
        .into_iter()
        .map(|l| l.mul(TropValue::Fin(-shift)))
        .collect();
    let loops = flag.constituent(0).loops();

    // partial sums x: x_1 = 0; at loops of the rank-1 part read the
    // corank-1 value directly, elsewhere take max(λ_{b_m}, λ_{b_m + 1})
    let fin = |v: TropValue| match v {
        TropValue::Fin(r) => Ok(r),
        TropValue::Inf => Err(GammoidError::NotTnn),
    };
    let mut x = vec![Rat::from_integer(0)];
    for &bm in skeleton.b.iter().skip(1) {
        let xm = if loops.contains(&bm) {
            fin(co_val(bm))? - shift
        } else {
            fin(lambda[bm - 1])?.max(fin(lambda[bm])?)
        };
        x.push(xm);
    }
    let y: Vec<Rat> = x.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(RecoveredWeights { skeleton, x, y })
}

/// A graph plus sink flag, the on-disk JSON form
/// `{"vertices": […], "edges": [{"from", "to", "w"}], "sink_flag": [[…], …]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammoidInstance {
    pub graph: WeightedDigraph,
    pub sinks: SinkFlag,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    from: String,
    to: String,
    w: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    vertices: Vec<String>,
    edges: Vec<EdgeJson>,
    sink_flag: Vec<Vec<String>>,
}

fn rat_to_json(r: Rat) -> serde_json::Value {
    if r.is_integer() {
        serde_json::Value::from(*r.numer())
    } else {
        serde_json::Value::from(r.to_string())
    }
}

impl Serialize for GammoidInstance {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let raw = InstanceJson {
            vertices: self.graph.labels().to_vec(),
            edges: self
                .graph
                .edge_list()
                .into_iter()
                .map(|(from, to, w)| EdgeJson { from, to, w: rat_to_json(w) })
                .collect(),
            sink_flag: self
                .sinks
                .sets()
                .iter()
                .map(|s| s.iter().cloned().collect())
                .collect(),
        };
        raw.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for GammoidInstance {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = InstanceJson::deserialize(de)?;
        let edges = raw
            .edges
            .into_iter()
            .map(|e| {
                let w = match &e.w {
                    serde_json::Value::Number(x) => x
                        .as_i64()
                        .map(Rat::from_integer)
                        .ok_or_else(|| D::Error::custom("edge weight must be exact")),
                    serde_json::Value::String(s) => {
                        parse_rat(s).map_err(|err| D::Error::custom(err.to_string()))
                    }
                    other => Err(D::Error::custom(format!("bad edge weight {other}"))),
                }?;
                Ok((e.from, e.to, w))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        let graph = WeightedDigraph::new(raw.vertices, edges)
            .map_err(|e| D::Error::custom(e.to_string()))?;
        let sinks = SinkFlag::new(
            raw.sink_flag.into_iter().map(|s| s.into_iter().collect()).collect(),
        )
        .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(GammoidInstance { graph, sinks })
    }
}
