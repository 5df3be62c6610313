//! Quad-tree branch-and-bound approximation of the matching distance.
//!
//! Parameter space is covered by the four initial boxes (one per slice
//! type). Each processed box is evaluated at its center slice, which updates
//! the lower bound `rho`, and then bounded from above. A box whose bound
//! exceeds `rho + eps` (absolute mode) or `(1 + eps) rho` (relative mode) is
//! split into four; otherwise it is final. When no box is left, every slice
//! lies in a final box whose bound is within the tolerance of `rho`.

use std::collections::{BTreeMap, BinaryHeap, VecDeque};
use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use ordered_float::OrderedFloat;
use rayon::prelude::*;

use crate::bottleneck::bottleneck_distance;
use crate::bounds::BoundKind;
use crate::complex::BiFiltration;
use crate::error::{Error, Result};
use crate::persistence::{dim0_from_values, persistence_general, Diagram};
use crate::slice::{initial_boxes, restrict, restrict_values, ParamBox, Slice};

/// Default call cap in relative mode. The relative algorithm never stops
/// when the distance is zero, so it needs a hard limit.
pub const DEFAULT_RELATIVE_MAX_CALLS: u64 = 200_000;
pub const DEFAULT_RELATIVE_MAX_LEVEL: u32 = 40;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Mode {
    /// Returns `delta` with `d - eps <= delta <= d`.
    Absolute(f64),
    /// Returns `delta` with `d <= delta <= (1 + eps) d`.
    Relative(f64),
}

impl Mode {
    pub fn epsilon(self) -> f64 {
        match self {
            Mode::Absolute(e) | Mode::Relative(e) => e,
        }
    }

    /// Boxes with a bound above this value get subdivided.
    pub fn threshold(self, rho: f64) -> f64 {
        match self {
            Mode::Absolute(e) => rho + e,
            Mode::Relative(e) => (1.0 + e) * rho,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traversal {
    Bfs,
    Dfs,
    /// Always refine the box with the largest upper bound.
    Priority,
}

impl std::str::FromStr for Traversal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bfs" => Ok(Traversal::Bfs),
            "dfs" => Ok(Traversal::Dfs),
            "priority" => Ok(Traversal::Priority),
            _ => Err(format!("unknown traversal `{s}` (expected bfs, dfs or priority)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub mode: Mode,
    pub bound_kind: BoundKind,
    pub homology_dim: usize,
    pub traversal: Traversal,
    /// Wall-clock limit; requires [`Traversal::Priority`].
    pub budget: Option<Duration>,
    /// Boxes at this level are never subdivided.
    pub max_level: Option<u32>,
    pub max_calls: Option<u64>,
    pub trace: bool,
    /// Keep one record per processed box in the result.
    pub record_boxes: bool,
    /// Stop the linear-bound scan once the box is known to be subdivided.
    pub early_exit: bool,
    pub threads: usize,
}

impl SolverConfig {
    pub fn absolute(epsilon: f64) -> Self {
        SolverConfig {
            mode: Mode::Absolute(epsilon),
            bound_kind: BoundKind::LocalLinear,
            homology_dim: 0,
            traversal: Traversal::Bfs,
            budget: None,
            max_level: None,
            max_calls: None,
            trace: false,
            record_boxes: false,
            early_exit: true,
            threads: 1,
        }
    }

    pub fn relative(epsilon: f64) -> Self {
        SolverConfig {
            mode: Mode::Relative(epsilon),
            max_level: Some(DEFAULT_RELATIVE_MAX_LEVEL),
            max_calls: Some(DEFAULT_RELATIVE_MAX_CALLS),
            ..SolverConfig::absolute(epsilon)
        }
    }

    pub fn with_bound(mut self, kind: BoundKind) -> Self {
        self.bound_kind = kind;
        self
    }

    pub fn with_traversal(mut self, traversal: Traversal) -> Self {
        self.traversal = traversal;
        self
    }

    pub fn with_homology_dim(mut self, dim: usize) -> Self {
        self.homology_dim = dim;
        self
    }

    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.budget = Some(budget);
        self.traversal = Traversal::Priority;
        self
    }

    pub fn with_trace(mut self, on: bool) -> Self {
        self.trace = on;
        self
    }

    pub fn with_records(mut self, on: bool) -> Self {
        self.record_boxes = on;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let eps = self.mode.epsilon();
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Error::InvalidConfig(format!("epsilon must be positive, got {eps}")));
        }
        if self.budget.is_some() && self.traversal != Traversal::Priority {
            return Err(Error::InvalidConfig("a time budget requires priority traversal".into()));
        }
        if self.threads == 0 {
            return Err(Error::InvalidConfig("threads must be at least 1".into()));
        }
        Ok(())
    }

    fn uses_early_exit(&self) -> bool {
        // Truncated bounds are not upper bounds, so anything that reports
        // bounds needs the full value.
        self.early_exit
            && self.bound_kind == BoundKind::LocalLinear
            && self.traversal != Traversal::Priority
            && !self.trace
            && !self.record_boxes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Converged,
    BudgetExhausted,
    LevelCapReached,
    CallCapReached,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Converged => "converged",
            Status::BudgetExhausted => "budget exhausted",
            Status::LevelCapReached => "level cap reached",
            Status::CallCapReached => "call cap reached",
        })
    }
}

/// One row per evaluation of a center slice.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceRow {
    pub call: u64,
    pub elapsed_ms: f64,
    pub rho: f64,
    /// Best known upper bound on the matching distance after this call.
    pub upper: f64,
    pub rel_error: f64,
    pub bx: ParamBox,
}

pub const TRACE_HEADER: &str = "call,elapsed_ms,rho,upper,rel_error,type,lmin,lmax,mmin,mmax,level";

/// Writes the trace as CSV. Without timing, the elapsed column is zero so
/// that repeated runs produce identical files.
pub fn write_trace_csv<W: Write>(rows: &[TraceRow], mut out: W, with_timing: bool) -> io::Result<()> {
    writeln!(out, "{TRACE_HEADER}")?;
    for r in rows {
        let elapsed = if with_timing { r.elapsed_ms } else { 0.0 };
        writeln!(
            out,
            "{},{:.3},{},{},{},{},{},{},{},{},{}",
            r.call,
            elapsed,
            r.rho,
            r.upper,
            r.rel_error,
            r.bx.kind,
            r.bx.lambda_min,
            r.bx.lambda_max,
            r.bx.mu_min,
            r.bx.mu_max,
            r.bx.level
        )?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pruned,
    Subdivided,
    /// Evaluated but left open (level cap or early stop).
    Unresolved,
    /// Never evaluated because the run stopped early.
    Pending,
}

/// A processed box, for inspecting the quad-tree after a run.
#[derive(Clone, Debug, PartialEq)]
pub struct BoxRecord {
    pub bx: ParamBox,
    /// `d_B` at the center slice; NaN for pending boxes.
    pub center_value: f64,
    /// Upper bound for the box (inherited from the parent for pending boxes).
    pub bound: f64,
    /// `rho` when the box was decided.
    pub rho: f64,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct ApproxResult {
    pub delta: f64,
    pub rho: f64,
    /// Upper bound on the matching distance certified by the run.
    pub residual_upper: f64,
    pub calls: u64,
    pub deepest_level: u32,
    pub deepest_evaluated_level: u32,
    /// Slice where `rho` was attained.
    pub best_slice: Option<Slice>,
    pub status: Status,
    pub elapsed: Duration,
    pub trace: Option<Vec<TraceRow>>,
    pub boxes: Option<Vec<BoxRecord>>,
}

impl ApproxResult {
    pub fn converged(&self) -> bool {
        self.status == Status::Converged
    }

    /// `(residual_upper - rho) / rho`, infinite when `rho = 0`.
    pub fn guaranteed_relative_error(&self) -> f64 {
        relative_error(self.rho, self.residual_upper)
    }
}

fn relative_error(rho: f64, upper: f64) -> f64 {
    if upper <= rho {
        0.0
    } else if rho > 0.0 {
        (upper - rho) / rho
    } else {
        f64::INFINITY
    }
}

/// Fraction of the `4^k` evaluations on the deepest evaluated level `k`
/// avoided by the run: `1 - calls / 4^k`.
pub fn reduction_rate(result: &ApproxResult) -> f64 {
    1.0 - result.calls as f64 / 4f64.powi(result.deepest_evaluated_level as i32)
}

/// Persistence diagram of the weighted restriction of `f` onto `slice`.
pub fn slice_diagram(f: &BiFiltration, slice: &Slice, dim: usize) -> Diagram {
    if dim == 0 {
        let count = f.complex().dim_range(1).end;
        let values = restrict_values(f, slice, count);
        dim0_from_values(f.complex(), &values)
    } else {
        persistence_general(&restrict(f, slice), dim)
    }
}

/// Bottleneck distance between the weighted restrictions onto `slice`.
pub fn eval(f1: &BiFiltration, f2: &BiFiltration, slice: &Slice, dim: usize) -> f64 {
    let d1 = slice_diagram(f1, slice, dim);
    let d2 = slice_diagram(f2, slice, dim);
    bottleneck_distance(&d1, &d2).expect("diagrams share a dimension")
}

/// Approximates the matching distance between two normalized bi-filtrations.
///
/// Returns [`Error::NotConverged`] carrying the partial result when a cap
/// or the budget stops the run before the tolerance is certified.
pub fn approximate(f1: &BiFiltration, f2: &BiFiltration, cfg: &SolverConfig) -> Result<ApproxResult> {
    let result = run(f1, f2, cfg)?;
    if result.converged() {
        Ok(result)
    } else {
        Err(Error::NotConverged { reason: result.status.to_string(), partial: Box::new(result) })
    }
}

/// Best-effort relative approximation within a wall-clock budget, always
/// refining the box with the largest bound. Never fails for valid input; the
/// guaranteed relative error is reported by
/// [`ApproxResult::guaranteed_relative_error`].
pub fn budgeted_approximate(
    f1: &BiFiltration,
    f2: &BiFiltration,
    epsilon: f64,
    budget: Duration,
) -> Result<ApproxResult> {
    let cfg = SolverConfig::relative(epsilon).with_budget(budget).with_trace(true);
    run(f1, f2, &cfg)
}

/// Runs the subdivision and returns whatever it certified, converged or not.
pub fn run(f1: &BiFiltration, f2: &BiFiltration, cfg: &SolverConfig) -> Result<ApproxResult> {
    cfg.validate()?;
    if !f1.is_normalized() || !f2.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let pool = if cfg.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .map_err(|e| Error::InvalidConfig(e.to_string()))?,
        )
    } else {
        None
    };
    let mut run = Run::new(f1, f2, cfg, pool);
    match cfg.traversal {
        Traversal::Bfs | Traversal::Dfs => run.queue_loop()?,
        Traversal::Priority => run.priority_loop()?,
    }
    Ok(run.finish())
}

struct QueueItem {
    bx: ParamBox,
    inherited: f64,
}

struct HeapItem {
    key: OrderedFloat<f64>,
    seq: Reverse<u64>,
    bx: ParamBox,
    bound: f64,
    center_value: f64,
}

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapItem {}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapItem {
    // Largest bound first; equal bounds in insertion order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key).then(self.seq.cmp(&other.seq))
    }
}

/// Multiset of bounds of boxes still waiting in the queue.
#[derive(Default)]
struct OpenBounds(BTreeMap<OrderedFloat<f64>, usize>);

impl OpenBounds {
    fn insert(&mut self, v: f64) {
        *self.0.entry(OrderedFloat(v)).or_default() += 1;
    }

    fn remove(&mut self, v: f64) {
        let key = OrderedFloat(v);
        if let Some(n) = self.0.get_mut(&key) {
            *n -= 1;
            if *n == 0 {
                self.0.remove(&key);
            }
        }
    }

    fn max(&self) -> f64 {
        self.0.keys().next_back().map_or(f64::NEG_INFINITY, |k| k.0)
    }
}

struct Run<'a> {
    f1: &'a BiFiltration,
    f2: &'a BiFiltration,
    cfg: &'a SolverConfig,
    pool: Option<rayon::ThreadPool>,
    start: Instant,
    rho: f64,
    best_slice: Option<Slice>,
    calls: u64,
    deepest_level: u32,
    deepest_evaluated_level: u32,
    /// Largest bound over final boxes.
    closed_max: f64,
    open: OpenBounds,
    status: Status,
    trace: Vec<TraceRow>,
    records: Vec<BoxRecord>,
}

impl<'a> Run<'a> {
    fn new(
        f1: &'a BiFiltration,
        f2: &'a BiFiltration,
        cfg: &'a SolverConfig,
        pool: Option<rayon::ThreadPool>,
    ) -> Self {
        Run {
            f1,
            f2,
            cfg,
            pool,
            start: Instant::now(),
            rho: 0.0,
            best_slice: None,
            calls: 0,
            deepest_level: 0,
            deepest_evaluated_level: 0,
            closed_max: f64::NEG_INFINITY,
            open: OpenBounds::default(),
            status: Status::Converged,
            trace: Vec::new(),
            records: Vec::new(),
        }
    }

    fn batch_size(&self) -> usize {
        if self.cfg.threads > 1 {
            4 * self.cfg.threads
        } else {
            1
        }
    }

    fn evaluate(&self, boxes: &[ParamBox]) -> Vec<f64> {
        let dim = self.cfg.homology_dim;
        let (f1, f2) = (self.f1, self.f2);
        let one = |b: &ParamBox| eval(f1, f2, &b.center(), dim);
        match &self.pool {
            Some(pool) if boxes.len() > 1 => pool.install(|| boxes.par_iter().map(one).collect()),
            _ => boxes.iter().map(one).collect(),
        }
    }

    /// Counts an evaluation and merges it into `rho`.
    fn absorb(&mut self, bx: &ParamBox, value: f64) {
        self.calls += 1;
        self.deepest_evaluated_level = self.deepest_evaluated_level.max(bx.level);
        if value > self.rho || self.best_slice.is_none() && value >= self.rho {
            self.rho = value;
            self.best_slice = Some(bx.center());
        }
    }

    fn bound(&self, bx: &ParamBox, d_center: f64, cutoff: Option<f64>) -> Result<f64> {
        self.cfg.bound_kind.evaluate(self.f1, self.f2, bx, d_center, cutoff)
    }

    fn at_level_cap(&self, bx: &ParamBox) -> bool {
        self.cfg.max_level.is_some_and(|cap| bx.level >= cap)
    }

    fn out_of_calls(&self) -> bool {
        self.cfg.max_calls.is_some_and(|cap| self.calls >= cap)
    }

    fn out_of_time(&self) -> bool {
        self.cfg.budget.is_some_and(|b| self.start.elapsed() >= b)
    }

    fn upper(&self, extra_open: f64) -> f64 {
        self.rho.max(self.closed_max).max(self.open.max()).max(extra_open)
    }

    fn push_trace(&mut self, bx: ParamBox, upper: f64) {
        if self.cfg.trace {
            self.trace.push(TraceRow {
                call: self.calls,
                elapsed_ms: self.start.elapsed().as_secs_f64() * 1e3,
                rho: self.rho,
                upper,
                rel_error: relative_error(self.rho, upper),
                bx,
            });
        }
    }

    fn record(&mut self, bx: ParamBox, center_value: f64, bound: f64, outcome: Outcome) {
        if self.cfg.record_boxes {
            self.records.push(BoxRecord { bx, center_value, bound, rho: self.rho, outcome });
        }
    }

    fn set_status(&mut self, status: Status) {
        if self.status == Status::Converged {
            self.status = status;
        }
    }

    /// FIFO (breadth-first) or LIFO (depth-first) processing; boxes are
    /// evaluated when popped.
    fn queue_loop(&mut self) -> Result<()> {
        let early_exit = self.cfg.uses_early_exit();
        let mut queue: VecDeque<QueueItem> = VecDeque::new();
        for bx in initial_boxes(self.f1, self.f2) {
            queue.push_back(QueueItem { bx, inherited: f64::INFINITY });
            self.open.insert(f64::INFINITY);
        }
        let dfs = self.cfg.traversal == Traversal::Dfs;

        while !queue.is_empty() {
            if self.out_of_calls() {
                self.set_status(Status::CallCapReached);
                break;
            }
            let mut take = self.batch_size();
            if let Some(cap) = self.cfg.max_calls {
                take = take.min((cap - self.calls) as usize);
            }
            let batch: Vec<QueueItem> = (0..take)
                .map_while(|_| if dfs { queue.pop_back() } else { queue.pop_front() })
                .collect();
            let boxes: Vec<ParamBox> = batch.iter().map(|it| it.bx).collect();
            let values = self.evaluate(&boxes);
            for (bx, &v) in boxes.iter().zip(&values) {
                self.absorb(bx, v);
            }

            let mut children_batches = Vec::new();
            for (item, &d_center) in batch.iter().zip(&values) {
                let bx = item.bx;
                let threshold = self.cfg.mode.threshold(self.rho);
                let cutoff = early_exit.then_some(threshold);
                let mut bound = self.bound(&bx, d_center, cutoff)?;
                self.open.remove(item.inherited);
                if bound <= threshold {
                    let eff = bound.min(item.inherited);
                    self.closed_max = self.closed_max.max(eff);
                    self.record(bx, d_center, bound, Outcome::Pruned);
                } else if self.at_level_cap(&bx) {
                    if cutoff.is_some() {
                        bound = self.bound(&bx, d_center, None)?;
                    }
                    let eff = bound.min(item.inherited);
                    self.closed_max = self.closed_max.max(eff);
                    self.set_status(Status::LevelCapReached);
                    self.record(bx, d_center, bound, Outcome::Unresolved);
                } else {
                    // A truncated linear bound is not an upper bound.
                    let eff = if cutoff.is_some() { item.inherited } else { bound.min(item.inherited) };
                    self.record(bx, d_center, bound, Outcome::Subdivided);
                    let children = bx.subdivide()?;
                    self.deepest_level = self.deepest_level.max(bx.level + 1);
                    for _ in 0..4 {
                        self.open.insert(eff);
                    }
                    children_batches.push(children.map(|c| QueueItem { bx: c, inherited: eff }));
                }
                let upper = self.upper(f64::NEG_INFINITY);
                self.push_trace(bx, upper);
            }
            for children in children_batches {
                if dfs {
                    // Reverse so the first child is processed first.
                    queue.extend(children.into_iter().rev());
                } else {
                    queue.extend(children);
                }
            }
        }

        for item in queue {
            self.closed_max = self.closed_max.max(item.inherited);
            self.open.remove(item.inherited);
            self.record(item.bx, f64::NAN, item.inherited, Outcome::Pending);
        }
        Ok(())
    }

    /// Always refines the box with the largest bound; boxes are evaluated
    /// and bounded when they are created.
    fn priority_loop(&mut self) -> Result<()> {
        let mut heap: BinaryHeap<HeapItem> = BinaryHeap::new();
        let mut seq = 0u64;
        let initial = initial_boxes(self.f1, self.f2);
        self.push_evaluated(&initial, f64::INFINITY, &mut heap, &mut seq)?;

        while let Some(top) = heap.peek() {
            if self.out_of_time() {
                self.set_status(Status::BudgetExhausted);
                break;
            }
            let threshold = self.cfg.mode.threshold(self.rho);
            let (bound, eff) = (top.bound, top.key.0);
            if bound > threshold && self.out_of_calls() {
                self.set_status(Status::CallCapReached);
                break;
            }
            let item = heap.pop().expect("peeked");
            if bound <= threshold {
                self.closed_max = self.closed_max.max(eff);
                self.record(item.bx, item.center_value, bound, Outcome::Pruned);
                continue;
            }
            if self.at_level_cap(&item.bx) {
                self.closed_max = self.closed_max.max(eff);
                self.set_status(Status::LevelCapReached);
                self.record(item.bx, item.center_value, bound, Outcome::Unresolved);
                continue;
            }
            self.record(item.bx, item.center_value, bound, Outcome::Subdivided);
            let children = item.bx.subdivide()?;
            self.deepest_level = self.deepest_level.max(item.bx.level + 1);
            self.push_evaluated(&children, eff, &mut heap, &mut seq)?;
        }

        for item in heap.into_sorted_vec().into_iter().rev() {
            self.closed_max = self.closed_max.max(item.key.0);
            self.record(item.bx, item.center_value, item.bound, Outcome::Unresolved);
        }
        Ok(())
    }

    fn push_evaluated(
        &mut self,
        boxes: &[ParamBox],
        inherited: f64,
        heap: &mut BinaryHeap<HeapItem>,
        seq: &mut u64,
    ) -> Result<()> {
        let values = self.evaluate(boxes);
        for (i, (bx, &d_center)) in boxes.iter().zip(&values).enumerate() {
            self.absorb(bx, d_center);
            let bound = self.bound(bx, d_center, None)?;
            let eff = bound.min(inherited);
            heap.push(HeapItem { key: OrderedFloat(eff), seq: Reverse(*seq), bx: *bx, bound, center_value: d_center });
            *seq += 1;
            let top = heap.peek().map_or(f64::NEG_INFINITY, |t| t.key.0);
            // Siblings not pushed yet still count with the parent's bound.
            let unpushed = if i + 1 < boxes.len() { inherited } else { f64::NEG_INFINITY };
            let upper = self.upper(top.max(unpushed));
            self.push_trace(*bx, upper);
        }
        Ok(())
    }

    fn finish(self) -> ApproxResult {
        let residual_upper = self.upper(f64::NEG_INFINITY);
        let delta = match (self.cfg.mode, self.status) {
            (Mode::Absolute(_), _) => self.rho,
            (Mode::Relative(e), Status::Converged) => (1.0 + e) * self.rho,
            (Mode::Relative(_), _) => residual_upper,
        };
        ApproxResult {
            delta,
            rho: self.rho,
            residual_upper,
            calls: self.calls,
            deepest_level: self.deepest_level,
            deepest_evaluated_level: self.deepest_evaluated_level,
            best_slice: self.best_slice,
            status: self.status,
            elapsed: self.start.elapsed(),
            trace: self.cfg.trace.then_some(self.trace),
            boxes: self.cfg.record_boxes.then_some(self.records),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{validate_bifiltration, Point2};

    fn vertex_at(x: f64, y: f64) -> BiFiltration {
        validate_bifiltration(vec![(vec![0], vec![Point2::new(x, y)])]).unwrap()
    }

    #[test]
    fn shifted_vertex() {
        let a = vertex_at(0.0, 0.0);
        let b = vertex_at(1.0, 0.0);
        for kind in BoundKind::ALL {
            for traversal in [Traversal::Bfs, Traversal::Dfs, Traversal::Priority] {
                let cfg = SolverConfig::absolute(0.01).with_bound(kind).with_traversal(traversal);
                let r = approximate(&a, &b, &cfg).unwrap();
                assert!(r.delta <= 1.0 && r.delta >= 0.99, "{kind} {traversal:?}: {}", r.delta);
                assert!(r.residual_upper >= 1.0 && r.residual_upper <= r.delta + 0.01);
            }
        }
    }

    #[test]
    fn relative_mode_on_equal_inputs_stops_at_cap() {
        let a = vertex_at(1.0, 2.0);
        let mut cfg = SolverConfig::relative(0.1);
        cfg.max_calls = Some(100);
        match approximate(&a, &a, &cfg) {
            Err(Error::NotConverged { partial, .. }) => {
                assert_eq!(partial.status, Status::CallCapReached);
                assert_eq!(partial.calls, 100);
                assert_eq!(partial.rho, 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_budget_evaluates_initial_boxes() {
        let a = vertex_at(0.0, 0.0);
        let b = vertex_at(1.0, 3.0);
        let r = budgeted_approximate(&a, &b, 0.01, Duration::ZERO).unwrap();
        assert_eq!(r.calls, 4);
        assert_eq!(r.status, Status::BudgetExhausted);
        assert!(r.residual_upper >= 3.0);
        assert_eq!(r.trace.unwrap().len(), 4);
    }

    #[test]
    fn config_validation() {
        let a = vertex_at(0.0, 0.0);
        assert!(matches!(approximate(&a, &a, &SolverConfig::absolute(0.0)), Err(Error::InvalidConfig(_))));
        let mut cfg = SolverConfig::absolute(0.1);
        cfg.budget = Some(Duration::from_secs(1));
        assert!(matches!(approximate(&a, &a, &cfg), Err(Error::InvalidConfig(_))));
        let neg = vertex_at(-1.0, 0.0);
        assert!(matches!(approximate(&neg, &a, &SolverConfig::absolute(0.1)), Err(Error::NotNormalized)));
    }

    #[test]
    fn level_cap_is_reported() {
        let a = vertex_at(0.0, 0.0);
        let b = vertex_at(1.0, 0.0);
        let mut cfg = SolverConfig::absolute(1e-6).with_bound(BoundKind::Global);
        cfg.max_level = Some(2);
        let err = approximate(&a, &b, &cfg).unwrap_err();
        let Error::NotConverged { partial, .. } = err else { panic!() };
        assert_eq!(partial.status, Status::LevelCapReached);
        assert!(partial.deepest_level <= 2);
        assert!(partial.residual_upper >= 1.0);
    }

    #[test]
    fn threads_do_not_change_the_answer() {
        let a = validate_bifiltration(vec![
            (vec![0], vec![Point2::new(0.0, 1.0)]),
            (vec![1], vec![Point2::new(2.0, 0.0)]),
            (vec![0, 1], vec![Point2::new(3.0, 3.0)]),
        ])
        .unwrap();
        let b = a.translated(Point2::new(0.5, 0.25));
        let one = approximate(&a, &b, &SolverConfig::absolute(0.05)).unwrap();
        let four = approximate(&a, &b, &SolverConfig::absolute(0.05).with_threads(4)).unwrap();
        assert_eq!(one.rho, four.rho);
        assert!((one.rho - 0.5).abs() <= 0.05);
    }
}
