//! Completion of monomial sets to minimal involutive bases.
//!
//! The engine starts from the conventional autoreduction of the input and
//! repeatedly examines the smallest untested nonmultiplicative prolongation
//! under the completion ordering.  A prolongation with an involutive divisor
//! in the current set is reducible and discarded; an irreducible one is
//! inserted, the separations are adjusted incrementally, and its own
//! prolongations become candidates.  The result is the minimal involutive
//! basis of the ideal, independent of the completion ordering for divisions
//! where the run terminates.
//!
//! Each optimized step has a brute-force twin used by the test suites: the
//! per-variable candidate slots against an exhaustive scan over untested
//! pairs, the filtered divisor search against a full cone scan, and the
//! incremental separation updates against recomputation from scratch.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::division::{
    cone_member, separation_table, DivisionKind, Separation, SeparationTable,
};
use crate::monomial::{revlex, Monomial, MonomialSet, OrderingKind};

/// Termination guards for a completion run.  `None` selects the library
/// default: twice the maximal input degree plus the arity for the degree
/// cap, 50 000 for the element cap.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: Option<u32>,
    pub max_elements: Option<usize>,
}

impl Limits {
    pub fn new(max_degree: Option<u32>, max_elements: Option<usize>) -> Self {
        if let Some(d) = max_degree {
            assert!(d > 0, "degree cap must be positive");
        }
        if let Some(m) = max_elements {
            assert!(m > 0, "element cap must be positive");
        }
        Limits { max_degree, max_elements }
    }
}

pub const DEFAULT_MAX_ELEMENTS: usize = 50_000;

/// Run counters.  One prolongation is counted as examined per reducibility
/// test executed by the main loop; a pair retested after its earlier verdict
/// went stale counts again.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CompletionStats {
    pub examined: u64,
    pub reducible: u64,
    pub added: u64,
    #[serde(rename = "elapsed_seconds", serialize_with = "duration_secs")]
    pub elapsed: Duration,
}

fn duration_secs<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

fn basis_rows<S: Serializer>(set: &MonomialSet, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(set.iter().map(Monomial::exponents))
}

/// A completed minimal involutive basis together with its separations and
/// run statistics.
#[derive(Clone, Debug, Serialize)]
pub struct CompletionResult {
    pub division: DivisionKind,
    #[serde(rename = "ordering")]
    pub completion_order: OrderingKind,
    #[serde(serialize_with = "basis_rows")]
    pub basis: MonomialSet,
    #[serde(skip)]
    pub separations: SeparationTable,
    pub stats: CompletionStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CapKind {
    Degree,
    Elements,
}

/// A termination guard fired.  Carries the partial state for diagnosis; the
/// partial basis is not involutive.  The offending prolongation was found
/// irreducible but not inserted and is not counted in the statistics.
#[derive(Debug, thiserror::Error)]
#[error("{cap:?} cap {limit} exceeded at {offender} ({} elements, {} prolongations examined)",
        partial.basis.len(), partial.stats.examined)]
pub struct CapExceeded {
    pub cap: CapKind,
    pub limit: u64,
    pub offender: Monomial,
    pub partial: CompletionResult,
}

/// Per-variable slots holding the minimal untested nonmultiplicative
/// prolongation by each variable.  The global minimum over the slots is the
/// next prolongation the completion loop must examine; keeping one slot per
/// variable is sound because v·x > u·x implies v > u, so the minimal
/// prolongation by x comes from the minimal monomial having x
/// nonmultiplicative and untested.
#[derive(Clone, Debug)]
pub struct ProlongationQueue {
    slots: Vec<Slot>,
}

#[derive(Clone, Debug)]
enum Slot {
    /// Must be rescanned before use.
    Dirty,
    /// No candidate for this variable.
    Exhausted,
    Ready { base: Monomial, prolongation: Monomial },
}

impl ProlongationQueue {
    pub fn new(arity: usize) -> Self {
        ProlongationQueue { slots: vec![Slot::Dirty; arity] }
    }

    pub fn mark_dirty(&mut self, var: usize) {
        self.slots[var] = Slot::Dirty;
    }

    pub fn mark_all_dirty(&mut self) {
        self.slots.fill(Slot::Dirty);
    }

    /// Announces a fresh untested pair (base, var); keeps the slot minimal.
    pub fn offer(&mut self, base: &Monomial, var: usize, order: OrderingKind) {
        match &self.slots[var] {
            Slot::Dirty => {}
            Slot::Exhausted => {
                self.slots[var] = Slot::Ready {
                    prolongation: base.multiply(var),
                    base: base.clone(),
                };
            }
            Slot::Ready { base: held, .. } => {
                if order.compare(base, held) == Ordering::Less {
                    self.slots[var] = Slot::Ready {
                        prolongation: base.multiply(var),
                        base: base.clone(),
                    };
                }
            }
        }
    }

    /// Rescans dirty slots: the candidate for a variable is the smallest
    /// basis element (scanning the decreasing list from its tail) for which
    /// the variable is nonmultiplicative and untested.
    pub fn refresh(
        &mut self,
        basis: &MonomialSet,
        seps: &SeparationTable,
        tested: &[u32],
    ) {
        for var in 0..self.slots.len() {
            if !matches!(self.slots[var], Slot::Dirty) {
                continue;
            }
            let found = (0..basis.len()).rev().find(|&i| {
                !seps.get(i).is_multiplicative(var) && tested[i] >> var & 1 == 0
            });
            self.slots[var] = match found {
                Some(i) => Slot::Ready {
                    base: basis.get(i).clone(),
                    prolongation: basis.get(i).multiply(var),
                },
                None => Slot::Exhausted,
            };
        }
    }

    /// The slot whose prolongation is globally minimal.  Ties between equal
    /// prolongation monomials prefer the smaller variable index.  All slots
    /// must be fresh.
    pub fn peek_min(&self, order: OrderingKind) -> Option<(usize, &Monomial, &Monomial)> {
        let mut best: Option<(usize, &Monomial, &Monomial)> = None;
        for (var, slot) in self.slots.iter().enumerate() {
            debug_assert!(!matches!(slot, Slot::Dirty), "peek on a dirty queue");
            if let Slot::Ready { base, prolongation } = slot {
                let better = match best {
                    None => true,
                    Some((_, _, cur)) => order.compare(prolongation, cur) == Ordering::Less,
                };
                if better {
                    best = Some((var, base, prolongation));
                }
            }
        }
        best
    }

    pub fn is_exhausted(&self) -> bool {
        self.slots.iter().all(|s| matches!(s, Slot::Exhausted))
    }
}

/// Searches for the involutive divisor of `v` in `set`.
///
/// An involutively autoreduced set holds at most one divisor, and the result
/// always equals the brute-force cone scan.  When `hint` marks `v` as the
/// prolongation base·x of a set element, candidates are pruned to those with
/// the same degree in x; a Pommaret divisor must additionally be
/// reverse-lexicographically greater than the base, and a divisor under an
/// induced division smaller than the base (or equal to `v` itself).  For
/// Janet over a lex-sorted set the search is confined to the class of the
/// longest common prefix of `v`.
pub fn find_involutive_divisor(
    v: &Monomial,
    set: &MonomialSet,
    seps: &SeparationTable,
    kind: DivisionKind,
    hint: Option<(&Monomial, usize)>,
) -> Option<usize> {
    debug_assert_eq!(set.len(), seps.len(), "separation table out of sync");
    if kind == DivisionKind::Janet && set.sort_order() == OrderingKind::Lex {
        let (_, range) = longest_common_prefix_class(v, set);
        return range.into_iter().find(|&i| {
            let w = set.get(i);
            if let Some((_, var)) = hint {
                if w.deg(var) != v.deg(var) {
                    return false;
                }
            }
            cone_member(v, w, seps.get(i))
        });
    }
    for (i, w) in set.iter().enumerate() {
        if let Some((base, var)) = hint {
            if w.deg(var) != v.deg(var) {
                continue;
            }
            match kind {
                DivisionKind::Pommaret
                    if w != v && revlex(w, base) != Ordering::Greater =>
                {
                    continue;
                }
                DivisionKind::Induced(ord)
                    if w != v && ord.compare(base, w) != Ordering::Greater =>
                {
                    continue;
                }
                _ => {}
            }
        }
        if cone_member(v, w, seps.get(i)) {
            return Some(i);
        }
    }
    None
}

/// The longest exponent prefix `v` shares with some element of the
/// lex-decreasing set, and the contiguous range of the elements sharing it.
/// With prefix length 0 the class is the whole set.
pub fn longest_common_prefix_class(
    v: &Monomial,
    set: &MonomialSet,
) -> (usize, std::ops::Range<usize>) {
    assert_eq!(
        set.sort_order(),
        OrderingKind::Lex,
        "prefix classes are defined over the lex-sorted list"
    );
    let items = set.as_slice();
    let mut lo = 0usize;
    let mut hi = items.len();
    let mut k = 0usize;
    while k < v.arity() {
        let d = v.deg(k);
        // Elements of [lo, hi) share the first k exponents of v, so their
        // exponent at position k is non-increasing.
        let start = lo + items[lo..hi].partition_point(|u| u.deg(k) > d);
        let end = lo + items[lo..hi].partition_point(|u| u.deg(k) >= d);
        if start == end {
            break;
        }
        lo = start;
        hi = end;
        k += 1;
    }
    (k, lo..hi)
}

/// Result of adjoining one monomial to a set: where it lands, its own
/// separation row, and which (element, variable) pairs of the previous set
/// flip from multiplicative to nonmultiplicative.  Separations never grow
/// when a set grows.
#[derive(Clone, Debug)]
pub struct SeparationUpdate {
    pub insert_at: usize,
    pub row: Separation,
    pub flips: Vec<(usize, usize)>,
}

/// Incremental recomputation of separations for U ∪ {v}.
///
/// Globally defined divisions only need v's own row.  Thomas and Division I
/// use the pairwise rule NM(u, U∪{v}) = NM(u,U) ∪ NM(u,{u,v}).  Janet over a
/// lex-sorted set restricts changes to the longest-common-prefix class of v
/// and copies the shared prefix of v's row from a class member.  For an
/// induced division, when v is the prolongation base·x_j of a set element
/// (passed as `hint`), only x_j can flip and only for elements above v with
/// deg_j = deg_j(v) - 1.  Any remaining case falls back to recomputation.
/// The outcome always equals the table computed from scratch.
pub fn compute_separation_update(
    kind: DivisionKind,
    set: &MonomialSet,
    seps: &SeparationTable,
    v: &Monomial,
    hint: Option<(&Monomial, usize)>,
) -> SeparationUpdate {
    debug_assert_eq!(set.len(), seps.len());
    let insert_at = match set.search(v) {
        Ok(_) => panic!("updating separations with an element already present: {v}"),
        Err(pos) => pos,
    };
    let n = set.arity();

    match kind {
        // Globally defined: existing rows ignore the set entirely.
        DivisionKind::Pommaret | DivisionKind::DivisionII => SeparationUpdate {
            insert_at,
            row: crate::division::separation(kind, v, set),
            flips: Vec::new(),
        },
        DivisionKind::Thomas => {
            let mut flips = Vec::new();
            for (i, u) in set.iter().enumerate() {
                for var in 0..n {
                    if u.deg(var) < v.deg(var) && seps.get(i).is_multiplicative(var) {
                        flips.push((i, var));
                    }
                }
            }
            let mut row = Separation::all_multiplicative(n);
            for var in 0..n {
                let max = set.iter().map(|u| u.deg(var)).max().unwrap_or(0);
                if v.deg(var) < max {
                    row.set_nonmultiplicative(var);
                }
            }
            SeparationUpdate { insert_at, row, flips }
        }
        DivisionKind::DivisionI => {
            let half = n / 2;
            let mut flips = Vec::new();
            for (i, u) in set.iter().enumerate() {
                let extra: Vec<usize> = (0..n).filter(|&x| v.deg(x) > u.deg(x)).collect();
                if (1..=half).contains(&extra.len()) {
                    for var in extra {
                        if seps.get(i).is_multiplicative(var) {
                            flips.push((i, var));
                        }
                    }
                }
            }
            let mut row = Separation::all_multiplicative(n);
            for u in set {
                let extra: Vec<usize> = (0..n).filter(|&x| u.deg(x) > v.deg(x)).collect();
                if (1..=half).contains(&extra.len()) {
                    for var in extra {
                        row.set_nonmultiplicative(var);
                    }
                }
            }
            SeparationUpdate { insert_at, row, flips }
        }
        DivisionKind::Janet if set.sort_order() == OrderingKind::Lex => {
            janet_update(set, seps, v, insert_at)
        }
        DivisionKind::Induced(ord) => {
            let mut flips = Vec::new();
            match hint {
                Some((base, j)) if &base.multiply(j) == v && set.contains(base) => {
                    // Only x_j can flip, and only for elements above v one
                    // step short of its x_j degree.
                    for (i, s) in set.iter().enumerate() {
                        if s.deg(j) + 1 == v.deg(j)
                            && seps.get(i).is_multiplicative(j)
                            && ord.compare(s, v) == Ordering::Greater
                        {
                            flips.push((i, j));
                        }
                    }
                }
                _ => {
                    for (i, s) in set.iter().enumerate() {
                        if ord.compare(s, v) == Ordering::Greater {
                            for var in 0..n {
                                if s.deg(var) < v.deg(var)
                                    && seps.get(i).is_multiplicative(var)
                                {
                                    flips.push((i, var));
                                }
                            }
                        }
                    }
                }
            }
            let mut row = Separation::all_multiplicative(n);
            for s in set {
                if ord.compare(s, v) == Ordering::Less {
                    for var in 0..n {
                        if v.deg(var) < s.deg(var) {
                            row.set_nonmultiplicative(var);
                        }
                    }
                }
            }
            SeparationUpdate { insert_at, row, flips }
        }
        // Janet over a non-lex sort order: recompute and diff.
        _ => {
            let mut grown = set.clone();
            grown.insert(v.clone());
            let table = separation_table(kind, &grown);
            let mut flips = Vec::new();
            for i in 0..set.len() {
                let new_i = if i >= insert_at { i + 1 } else { i };
                for var in 0..n {
                    let was = seps.get(i).is_multiplicative(var);
                    let now = table.get(new_i).is_multiplicative(var);
                    debug_assert!(was || !now, "separation grew when the set grew");
                    if was && !now {
                        flips.push((i, var));
                    }
                }
            }
            SeparationUpdate { insert_at, row: *table.get(insert_at), flips }
        }
    }
}

fn janet_update(
    set: &MonomialSet,
    seps: &SeparationTable,
    v: &Monomial,
    insert_at: usize,
) -> SeparationUpdate {
    let n = set.arity();
    let (k, class) = longest_common_prefix_class(v, set);
    debug_assert!(k < n, "a full prefix match would mean v is already present");
    let mut row = Separation::all_multiplicative(n);
    let mut flips = Vec::new();
    if class.is_empty() {
        // Empty set: the singleton has every variable multiplicative.
        return SeparationUpdate { insert_at, row, flips };
    }
    // Variables inside the shared prefix keep their status, identical for
    // every class member; deeper groups contain v alone, leaving variables
    // beyond k multiplicative.
    for var in 0..k {
        if !seps.get(class.start).is_multiplicative(var) {
            row.set_nonmultiplicative(var);
        }
    }
    // Variable k: v joins the group shared by the class.  Its degree there
    // is fresh (a tie would extend the prefix), so either v tops the group
    // and the previous top block flips, or v is dominated.
    let class_max = class
        .clone()
        .map(|i| set.get(i).deg(k))
        .max()
        .expect("class is nonempty");
    debug_assert_ne!(v.deg(k), class_max);
    if v.deg(k) < class_max {
        row.set_nonmultiplicative(k);
    } else {
        for i in class {
            if set.get(i).deg(k) == class_max {
                debug_assert!(seps.get(i).is_multiplicative(k));
                flips.push((i, k));
            }
        }
    }
    SeparationUpdate { insert_at, row, flips }
}

/// The separations of U ∪ {v}: applies [`compute_separation_update`] and
/// returns the grown set with its aligned table.
pub fn update_separations(
    kind: DivisionKind,
    set: &MonomialSet,
    seps: &SeparationTable,
    v: &Monomial,
    hint: Option<(&Monomial, usize)>,
) -> (MonomialSet, SeparationTable) {
    let update = compute_separation_update(kind, set, seps, v, hint);
    let mut entries: Vec<Separation> = seps.iter().copied().collect();
    for (i, var) in update.flips {
        entries[i].set_nonmultiplicative(var);
    }
    entries.insert(update.insert_at, update.row);
    let mut grown = set.clone();
    grown.insert(v.clone());
    (grown, SeparationTable::new(entries))
}

/// What one engine step did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Examined {
        base: Monomial,
        var: usize,
        prolongation: Monomial,
        reducible: bool,
    },
    /// The queue ran dry but re-verification found prolongations whose
    /// recorded divisor vanished under later separation changes; they were
    /// requeued.
    Requeued(usize),
    Finished,
    CapHit { cap: CapKind, offender: Monomial },
}

/// Stepwise completion state machine.  A run is inherently sequential; use
/// one engine per run.
pub struct Completion {
    kind: DivisionKind,
    order: OrderingKind,
    basis: MonomialSet,
    seps: SeparationTable,
    /// Bit `var` of entry i: the prolongation of basis[i] by var has been
    /// examined and needs no re-examination.
    tested: Vec<u32>,
    queue: ProlongationQueue,
    stats: CompletionStats,
    max_degree: u32,
    max_elements: usize,
    input_len: usize,
    started: Instant,
}

impl Completion {
    pub fn new(
        input: &MonomialSet,
        kind: DivisionKind,
        order: OrderingKind,
        limits: Limits,
    ) -> Self {
        let max_degree = limits
            .max_degree
            .unwrap_or_else(|| 2 * input.max_degree() + input.arity() as u32);
        let max_elements = limits.max_elements.unwrap_or(DEFAULT_MAX_ELEMENTS);
        let basis = input.autoreduce().resorted(order);
        let seps = separation_table(kind, &basis);
        let tested = vec![0u32; basis.len()];
        let queue = ProlongationQueue::new(basis.arity());
        Completion {
            kind,
            order,
            input_len: basis.len(),
            basis,
            seps,
            tested,
            queue,
            stats: CompletionStats::default(),
            max_degree,
            max_elements,
            started: Instant::now(),
        }
    }

    pub fn basis(&self) -> &MonomialSet {
        &self.basis
    }

    pub fn separations(&self) -> &SeparationTable {
        &self.seps
    }

    pub fn stats(&self) -> &CompletionStats {
        &self.stats
    }

    pub fn is_tested(&self, index: usize, var: usize) -> bool {
        self.tested[index] >> var & 1 == 1
    }

    /// The prolongation the next step will examine: (base, var,
    /// prolongation).  Refreshes the queue.
    pub fn peek_next(&mut self) -> Option<(Monomial, usize, Monomial)> {
        self.queue.refresh(&self.basis, &self.seps, &self.tested);
        self.queue
            .peek_min(self.order)
            .map(|(var, base, prol)| (base.clone(), var, prol.clone()))
    }

    pub fn step(&mut self) -> StepOutcome {
        self.queue.refresh(&self.basis, &self.seps, &self.tested);
        let Some((var, base, prolongation)) = self.queue.peek_min(self.order) else {
            return self.verify_and_requeue();
        };
        let base = base.clone();
        let prolongation = prolongation.clone();
        let index = self
            .basis
            .search(&base)
            .expect("queue slot holds a basis element");
        debug_assert!(!self.seps.get(index).is_multiplicative(var));
        debug_assert!(!self.is_tested(index, var));

        let divisor = find_involutive_divisor(
            &prolongation,
            &self.basis,
            &self.seps,
            self.kind,
            Some((&base, var)),
        );
        if divisor.is_none() {
            // Guard before recording, so partial statistics stay coherent.
            if prolongation.degree() > self.max_degree {
                return StepOutcome::CapHit { cap: CapKind::Degree, offender: prolongation };
            }
            if self.basis.len() + 1 > self.max_elements {
                return StepOutcome::CapHit { cap: CapKind::Elements, offender: prolongation };
            }
        }

        self.tested[index] |= 1 << var;
        self.queue.mark_dirty(var);
        self.stats.examined += 1;

        if divisor.is_some() {
            self.stats.reducible += 1;
            return StepOutcome::Examined { base, var, prolongation, reducible: true };
        }
        self.insert_irreducible(&prolongation, &base, var);
        self.stats.added += 1;
        StepOutcome::Examined { base, var, prolongation, reducible: false }
    }

    fn insert_irreducible(&mut self, v: &Monomial, base: &Monomial, var: usize) {
        let update =
            compute_separation_update(self.kind, &self.basis, &self.seps, v, Some((base, var)));
        for &(idx, fvar) in &update.flips {
            debug_assert!(self.seps.get(idx).is_multiplicative(fvar));
            self.seps.entries_mut()[idx].set_nonmultiplicative(fvar);
            // An earlier verdict for this pair (if any) was reached while the
            // variable was multiplicative at some point in the past; the pair
            // is a fresh candidate now.
            self.tested[idx] &= !(1 << fvar);
            self.queue.offer(self.basis.get(idx), fvar, self.order);
        }
        self.basis.insert(v.clone());
        self.seps.entries_mut().insert(update.insert_at, update.row);
        self.tested.insert(update.insert_at, 0);
        for nvar in update.row.nonmultiplicative() {
            self.queue.offer(v, nvar, self.order);
        }
    }

    /// Separation shrinkage can strand a prolongation whose recorded divisor
    /// lost the needed multiplicative variable afterwards.  When the queue
    /// runs dry, re-check every current nonmultiplicative prolongation and
    /// requeue the strays; the loop ends only when none remain.
    fn verify_and_requeue(&mut self) -> StepOutcome {
        let mut stale = Vec::new();
        for i in 0..self.basis.len() {
            let u = self.basis.get(i);
            for var in self.seps.get(i).nonmultiplicative() {
                let v = u.multiply(var);
                if find_involutive_divisor(&v, &self.basis, &self.seps, self.kind, Some((u, var)))
                    .is_none()
                {
                    stale.push((i, var));
                }
            }
        }
        if stale.is_empty() {
            self.stats.elapsed = self.started.elapsed();
            return StepOutcome::Finished;
        }
        for &(i, var) in &stale {
            self.tested[i] &= !(1 << var);
        }
        self.queue.mark_all_dirty();
        StepOutcome::Requeued(stale.len())
    }

    pub fn run(&mut self) -> Result<(), Box<CapExceeded>> {
        loop {
            match self.step() {
                StepOutcome::Examined { .. } | StepOutcome::Requeued(_) => {}
                StepOutcome::Finished => return Ok(()),
                StepOutcome::CapHit { cap, offender } => {
                    self.stats.elapsed = self.started.elapsed();
                    let limit = match cap {
                        CapKind::Degree => self.max_degree as u64,
                        CapKind::Elements => self.max_elements as u64,
                    };
                    return Err(Box::new(CapExceeded {
                        cap,
                        limit,
                        offender,
                        partial: self.result_snapshot(),
                    }));
                }
            }
        }
    }

    fn result_snapshot(&self) -> CompletionResult {
        CompletionResult {
            division: self.kind,
            completion_order: self.order,
            basis: self.basis.clone(),
            separations: self.seps.clone(),
            stats: self.stats,
        }
    }

    pub fn into_result(mut self) -> CompletionResult {
        self.stats.elapsed = self.started.elapsed();
        debug_assert_eq!(self.basis.len(), self.input_len + self.stats.added as usize);
        CompletionResult {
            division: self.kind,
            completion_order: self.order,
            basis: self.basis,
            separations: self.seps,
            stats: self.stats,
        }
    }

    pub fn input_len(&self) -> usize {
        self.input_len
    }
}

/// Completes `input` to the minimal involutive basis of its ideal under the
/// given division.
pub fn complete(
    input: &MonomialSet,
    kind: DivisionKind,
    order: OrderingKind,
    limits: Limits,
) -> Result<CompletionResult, Box<CapExceeded>> {
    let mut engine = Completion::new(input, kind, order, limits);
    match engine.run() {
        Ok(()) => Ok(engine.into_result()),
        Err(e) => Err(e),
    }
}

/// The completion ordering the paper pairs with each division: lex for
/// Janet (its separations are monotone under lex), the inducing ordering
/// for an induced division, and degrevlex otherwise.
pub fn default_completion_order(kind: DivisionKind) -> OrderingKind {
    match kind {
        DivisionKind::Janet => OrderingKind::Lex,
        DivisionKind::Induced(ord) => ord,
        _ => OrderingKind::DegRevLex,
    }
}

/// The finite involutivity test: every nonmultiplicative prolongation of
/// every element has an involutive divisor in the set.
pub fn is_involutive(set: &MonomialSet, kind: DivisionKind) -> bool {
    first_failing_prolongation(set, kind).is_none()
}

/// The smallest witness that a set is not involutive: a nonmultiplicative
/// prolongation without involutive divisor.
pub fn first_failing_prolongation(
    set: &MonomialSet,
    kind: DivisionKind,
) -> Option<(Monomial, usize, Monomial)> {
    let seps = separation_table(kind, set);
    let mut worst: Option<(Monomial, usize, Monomial)> = None;
    for (i, u) in set.iter().enumerate() {
        for var in seps.get(i).nonmultiplicative() {
            let v = u.multiply(var);
            if find_involutive_divisor(&v, set, &seps, kind, None).is_none() {
                let smaller = match &worst {
                    None => true,
                    Some((_, _, cur)) => {
                        set.sort_order().compare(&v, cur) == Ordering::Less
                    }
                };
                if smaller {
                    worst = Some((u.clone(), var, v));
                }
            }
        }
    }
    worst
}

/// True when no element is an involutive multiple of another.
pub fn is_involutively_autoreduced(set: &MonomialSet, kind: DivisionKind) -> bool {
    let seps = separation_table(kind, set);
    for (i, u) in set.iter().enumerate() {
        for (j, w) in set.iter().enumerate() {
            if i != j && cone_member(u, w, seps.get(j)) {
                return false;
            }
        }
    }
    true
}
