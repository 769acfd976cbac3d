//! Reference lattice-walk counting in an orthant.
//!
//! A model is a finite weighted step set in Z^n together with a start point;
//! walks stay in N^n. Counts are exact rationals computed by the layered
//! transfer recurrence `e(p, k+1) = sum over steps s of w_s * e(p - s, k)`,
//! restricted to the orthant. Small horizons run directly over a pruned
//! bounding box; two-dimensional short-step models with long horizons are
//! dispatched to the Chinese-remainder engine in `modcount`, whose results
//! agree with this DP by construction (and by property test).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational as Rat;
use num_traits::{One, Signed, Zero};

use crate::modcount::{self, FilterKind};
use crate::{OracleError, TABLE_BUDGET};

/// Horizon at which eligible 2-D models switch to the modular engine.
const MOD_ENGINE_MIN_K: usize = 64;

/// A weighted step set with a starting point, confined to the orthant N^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkModel {
    dim: usize,
    steps: Vec<(Vec<i64>, Rat)>,
    start: Vec<i64>,
}

impl WalkModel {
    /// Builds a model after validating steps, weights and the start point.
    pub fn new(
        steps: Vec<(Vec<i64>, Rat)>,
        start: Vec<i64>,
    ) -> Result<WalkModel, OracleError> {
        if steps.is_empty() {
            return Err(OracleError::EmptyStepSet);
        }
        let dim = start.len();
        for (s, w) in &steps {
            if s.len() != dim {
                return Err(OracleError::StepDimensionMismatch);
            }
            if !w.is_positive() {
                return Err(OracleError::NonPositiveWeight);
            }
        }
        if start.iter().any(|&c| c < 0) {
            return Err(OracleError::StartOutsideOrthant);
        }
        Ok(WalkModel { dim, steps, start })
    }

    /// Unweighted model from a step list, started at the origin.
    pub fn unweighted(steps: &[&[i64]], dim: usize) -> Result<WalkModel, OracleError> {
        WalkModel::new(
            steps.iter().map(|s| (s.to_vec(), Rat::one())).collect(),
            vec![0; dim],
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[(Vec<i64>, Rat)] {
        &self.steps
    }

    pub fn start(&self) -> &[i64] {
        &self.start
    }

    /// Same step set with every weight multiplied by beta (the equivalent-
    /// weighting scaling: length-k counts scale by beta^k).
    pub fn scale_weights(&self, beta: &Rat) -> Result<WalkModel, OracleError> {
        WalkModel::new(
            self.steps
                .iter()
                .map(|(s, w)| (s.clone(), w * beta))
                .collect(),
            self.start.clone(),
        )
    }

    fn eligible_for_mod_engine(&self, k: usize) -> bool {
        self.dim == 2
            && k >= MOD_ENGINE_MIN_K
            && self
                .steps
                .iter()
                .all(|(s, _)| s.iter().all(|&c| (-1..=1).contains(&c)))
    }
}

/// Which endpoints a count aggregates over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndpointFilter {
    /// All endpoints in the orthant.
    Anywhere,
    /// Return to the origin (excursions).
    Origin,
    /// A single prescribed endpoint.
    Point(Vec<i64>),
    /// Endpoints whose listed coordinates are zero (walks ending on an
    /// intersection of axes; the empty list is equivalent to `Anywhere`).
    AxesZero(Vec<usize>),
}

impl EndpointFilter {
    fn accepts(&self, p: &[i64]) -> bool {
        match self {
            EndpointFilter::Anywhere => true,
            EndpointFilter::Origin => p.iter().all(|&c| c == 0),
            EndpointFilter::Point(q) => p == q.as_slice(),
            EndpointFilter::AxesZero(axes) => axes.iter().all(|&j| p[j] == 0),
        }
    }
}

/// Number of orthant walks of each length 0..=k matching the filter.
pub fn walk_counts(
    model: &WalkModel,
    filter: &EndpointFilter,
    k: usize,
) -> Result<Vec<Rat>, OracleError> {
    if model.eligible_for_mod_engine(k) {
        if let Some(kind) = mod_filter_kind(model, filter) {
            return mod_engine_counts(model, kind, k);
        }
    }
    dense_counts(model, filter, k)
}

/// Single-length count; avoids reconstructing every length on the fast path.
pub fn walk_count_at(
    model: &WalkModel,
    filter: &EndpointFilter,
    k: usize,
) -> Result<Rat, OracleError> {
    if model.eligible_for_mod_engine(k) {
        if let Some(kind) = mod_filter_kind(model, filter) {
            let (mc, denom_per_step) = run_mod_engine(model, k)?;
            let count = mc.reconstruct(kind, k);
            return Ok(Rat::from(count) / num_traits::pow(denom_per_step, k));
        }
    }
    Ok(dense_counts(model, filter, k)?.pop().unwrap())
}

/// Full table of (endpoint, length) -> count for a small horizon, with
/// enough structure to re-check the transfer recurrence.
#[derive(Clone, Debug)]
pub struct WalkTable {
    model: WalkModel,
    horizon: usize,
    counts: BTreeMap<(Vec<i64>, usize), Rat>,
}

impl WalkTable {
    pub fn build(model: &WalkModel, horizon: usize) -> Result<WalkTable, OracleError> {
        let box_widths = bounding_box(model, horizon)?;
        let strides = row_major_strides(&box_widths);
        let total: usize = box_widths.iter().product();

        let mut counts = BTreeMap::new();
        let mut layer = vec![Rat::zero(); total];
        let start_idx = index_of(model.start(), &strides);
        layer[start_idx] = Rat::one();
        record_layer(&mut counts, &layer, &box_widths, 0);
        for t in 1..=horizon {
            layer = advance_layer(&layer, model, &box_widths, &strides);
            record_layer(&mut counts, &layer, &box_widths, t);
        }
        Ok(WalkTable {
            model: model.clone(),
            horizon,
            counts,
        })
    }

    pub fn model(&self) -> &WalkModel {
        &self.model
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Count of walks of the given length ending exactly at `endpoint`.
    pub fn count(&self, endpoint: &[i64], len: usize) -> Rat {
        assert!(len <= self.horizon, "length beyond table horizon");
        self.counts
            .get(&(endpoint.to_vec(), len))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Aggregated counts for each length under a filter.
    pub fn filtered(&self, filter: &EndpointFilter) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.horizon + 1];
        for ((p, len), c) in &self.counts {
            if filter.accepts(p) {
                out[*len] += c;
            }
        }
        out
    }

    pub fn endpoints_at(&self, len: usize) -> Vec<(Vec<i64>, Rat)> {
        self.counts
            .iter()
            .filter(|((_, l), _)| *l == len)
            .map(|((p, _), c)| (p.clone(), c.clone()))
            .collect()
    }

    /// Verifies the transfer recurrence at every stored entry: each count of
    /// length k+1 equals the weighted sum over steps of length-k counts.
    pub fn verify_recurrence(&self) -> bool {
        for ((p, len), c) in &self.counts {
            if *len == 0 {
                let expect = if p == self.model.start() {
                    Rat::one()
                } else {
                    Rat::zero()
                };
                if *c != expect {
                    return false;
                }
                continue;
            }
            let mut sum = Rat::zero();
            for (s, w) in self.model.steps() {
                let prev: Vec<i64> = p.iter().zip(s).map(|(a, b)| a - b).collect();
                if prev.iter().any(|&c| c < 0) {
                    continue;
                }
                sum += w * self.count(&prev, len - 1);
            }
            if *c != sum {
                return false;
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Dense reference DP (Engine A)
// ---------------------------------------------------------------------------

/// Per-coordinate box widths covering every reachable point up to length k.
fn bounding_box(model: &WalkModel, k: usize) -> Result<Vec<usize>, OracleError> {
    let mut widths = Vec::with_capacity(model.dim());
    for j in 0..model.dim() {
        let max_up = model
            .steps()
            .iter()
            .map(|(s, _)| s[j].max(0))
            .max()
            .unwrap_or(0);
        widths.push((model.start()[j] + max_up * k as i64) as usize + 1);
    }
    let needed: u128 = widths.iter().map(|&w| w as u128).product();
    if needed > TABLE_BUDGET as u128 {
        return Err(OracleError::TableBudget {
            needed,
            budget: TABLE_BUDGET,
        });
    }
    Ok(widths)
}

fn row_major_strides(widths: &[usize]) -> Vec<usize> {
    let mut strides = vec![1; widths.len()];
    for j in (0..widths.len().saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * widths[j + 1];
    }
    strides
}

fn index_of(point: &[i64], strides: &[usize]) -> usize {
    point
        .iter()
        .zip(strides)
        .map(|(&c, &s)| c as usize * s)
        .sum()
}

fn unrank(mut idx: usize, widths: &[usize]) -> Vec<i64> {
    let mut p = vec![0i64; widths.len()];
    for j in (0..widths.len()).rev() {
        p[j] = (idx % widths[j]) as i64;
        idx /= widths[j];
    }
    p
}

fn advance_layer(
    layer: &[Rat],
    model: &WalkModel,
    widths: &[usize],
    strides: &[usize],
) -> Vec<Rat> {
    let mut next = vec![Rat::zero(); layer.len()];
    for (idx, c) in layer.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let p = unrank(idx, widths);
        'steps: for (s, w) in model.steps() {
            let mut to = 0usize;
            for j in 0..widths.len() {
                let q = p[j] + s[j];
                if q < 0 || q as usize >= widths[j] {
                    continue 'steps;
                }
                to += q as usize * strides[j];
            }
            next[to] += w * c;
        }
    }
    next
}

fn record_layer(
    counts: &mut BTreeMap<(Vec<i64>, usize), Rat>,
    layer: &[Rat],
    widths: &[usize],
    len: usize,
) {
    for (idx, c) in layer.iter().enumerate() {
        if !c.is_zero() {
            counts.insert((unrank(idx, widths), len), c.clone());
        }
    }
}

fn dense_counts(
    model: &WalkModel,
    filter: &EndpointFilter,
    k: usize,
) -> Result<Vec<Rat>, OracleError> {
    let widths = bounding_box(model, k)?;
    let strides = row_major_strides(&widths);
    let total: usize = widths.iter().product();

    let mut layer = vec![Rat::zero(); total];
    layer[index_of(model.start(), &strides)] = Rat::one();
    let mut out = Vec::with_capacity(k + 1);
    out.push(filter_sum(&layer, filter, &widths));
    for _ in 1..=k {
        layer = advance_layer(&layer, model, &widths, &strides);
        out.push(filter_sum(&layer, filter, &widths));
    }
    Ok(out)
}

fn filter_sum(layer: &[Rat], filter: &EndpointFilter, widths: &[usize]) -> Rat {
    match filter {
        EndpointFilter::Anywhere => layer.iter().sum(),
        EndpointFilter::Origin => layer[0].clone(),
        EndpointFilter::Point(q) => {
            if q.iter().any(|&c| c < 0)
                || q.iter().zip(widths).any(|(&c, &w)| c as usize >= w)
            {
                return Rat::zero();
            }
            layer[index_of(q, &row_major_strides(widths))].clone()
        }
        EndpointFilter::AxesZero(axes) => {
            let mut sum = Rat::zero();
            for (idx, c) in layer.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let p = unrank(idx, widths);
                if axes.iter().all(|&j| p[j] == 0) {
                    sum += c;
                }
            }
            sum
        }
    }
}

// ---------------------------------------------------------------------------
// Dispatch to the modular engine (Engine B)
// ---------------------------------------------------------------------------

/// Maps a filter onto one of the four totals the modular engine folds.
/// Coordinate 0 is x; ending on the x-axis means coordinate 1 is zero.
fn mod_filter_kind(model: &WalkModel, filter: &EndpointFilter) -> Option<FilterKind> {
    debug_assert_eq!(model.dim(), 2);
    match filter {
        EndpointFilter::Anywhere => Some(FilterKind::Anywhere),
        EndpointFilter::Origin => Some(FilterKind::Origin),
        EndpointFilter::Point(q) if q.iter().all(|&c| c == 0) => Some(FilterKind::Origin),
        EndpointFilter::AxesZero(axes) => {
            let on_x = axes.contains(&1);
            let on_y = axes.contains(&0);
            match (on_y, on_x) {
                (true, true) => Some(FilterKind::Origin),
                (false, true) => Some(FilterKind::XAxis),
                (true, false) => Some(FilterKind::YAxis),
                (false, false) => Some(FilterKind::Anywhere),
            }
        }
        _ => None,
    }
}

/// Clears weight denominators and runs the modular DP. Counts are recovered
/// as reconstructed / denom^length.
fn run_mod_engine(
    model: &WalkModel,
    k: usize,
) -> Result<(modcount::ModCounts, Rat), OracleError> {
    let mut denom = BigInt::one();
    for (_, w) in model.steps() {
        denom = denom.lcm(w.denom());
    }
    let steps: Vec<(i8, i8, BigInt)> = model
        .steps()
        .iter()
        .map(|(s, w)| {
            let scaled = w.numer() * (&denom / w.denom());
            (s[0] as i8, s[1] as i8, scaled)
        })
        .collect();
    let start = (model.start()[0] as usize, model.start()[1] as usize);
    Ok((
        modcount::quadrant_mod_counts(&steps, start, k),
        Rat::from(denom),
    ))
}

fn mod_engine_counts(
    model: &WalkModel,
    kind: FilterKind,
    k: usize,
) -> Result<Vec<Rat>, OracleError> {
    let (mc, denom) = run_mod_engine(model, k)?;
    let mut scale = Rat::one();
    let mut out = Vec::with_capacity(k + 1);
    for len in 0..=k {
        out.push(Rat::from(mc.reconstruct(kind, len)) / &scale);
        scale *= &denom;
    }
    Ok(out)
}
