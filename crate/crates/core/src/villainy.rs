//! Exact villainy and weak villainy with machine-checkable certificates.
//!
//! For an assignment `c` of a color multiset to the vertices, the repair
//! distance is `n` minus the best agreement any admissible proper coloring
//! achieves with `c` — recoloring exactly the disagreeing vertices of a
//! maximizer is optimal, and no proper coloring can do better than its own
//! agreement. STRONG mode admits proper colorings with `c`'s exact labeled
//! multiplicity vector; WEAK mode admits every proper coloring over `c`'s
//! palette. The graph-level quantities maximize the repair distance over all
//! assignments whose class-size profile is realized by some optimal proper
//! coloring.

use crate::coloring::{
    chromatic_number, enumerate_proper_colorings, feasible_multiplicities, Coloring,
    MultiplicityVector,
};
use crate::graph::Graph;
use thiserror::Error;

/// Default cap on the order accepted by the exact graph-level searches.
pub const DEFAULT_EXACT_BOUND: usize = 8;

/// Which proper colorings count as repairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepairMode {
    /// Repair must preserve the per-color multiplicities of the input.
    Strong,
    /// Repair may be any proper coloring over the same palette.
    Weak,
}

/// Domain of the outer maximization in [`villainy_with`].
///
/// The definition of B(G) reads two ways: over all rearrangements of optimal
/// proper colorings (every assignment realizing a feasible class-size
/// profile), or literally over the proper colorings themselves. The latter
/// makes every inner distance zero, since a proper coloring repairs itself;
/// it is exposed here so the collapse can be demonstrated rather than
/// asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OuterDomain {
    /// All assignments of any feasible multiplicity profile (the reading
    /// under which the computed values are meaningful).
    #[default]
    FeasibleProfiles,
    /// Only proper optimal colorings themselves.
    ProperColorings,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VillainyError {
    #[error(
        "order {order} exceeds the exact-search bound {bound}; raise the bound \
         explicitly to accept the exponential search"
    )]
    OrderAboveBound { order: usize, bound: usize },
    #[error("multiplicity vector admits no proper coloring of this graph")]
    InfeasibleMultiplicity,
}

/// Result of repairing one assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepairOutcome {
    Feasible { value: usize, repair: Coloring },
    /// No proper coloring satisfies the constraint (possible only for STRONG
    /// mode with an infeasible multiplicity vector).
    Infeasible,
}

impl RepairOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            RepairOutcome::Feasible { value, .. } => Some(*value),
            RepairOutcome::Infeasible => None,
        }
    }
}

// ---------------------------------------------------------------------------
// Repair streams
// ---------------------------------------------------------------------------

/// The admissible proper colorings for one (graph, constraint) pair,
/// materialized once and scored against many assignments.
struct RepairStream {
    colorings: Vec<Coloring>,
    /// `by_vertex[v][i]` = color of vertex `v` in `colorings[i]`.
    by_vertex: Vec<Vec<u8>>,
}

impl RepairStream {
    fn new(g: &Graph, k: usize, m: Option<&MultiplicityVector>) -> RepairStream {
        let colorings = enumerate_proper_colorings(g, k, m);
        let by_vertex = (0..g.order())
            .map(|v| colorings.iter().map(|c| c.color_of(v)).collect())
            .collect();
        RepairStream {
            colorings,
            by_vertex,
        }
    }

    fn for_mode(g: &Graph, c: &Coloring, mode: RepairMode) -> RepairStream {
        match mode {
            RepairMode::Strong => {
                let m = MultiplicityVector::new(c.multiplicities());
                RepairStream::new(g, c.palette_size(), Some(&m))
            }
            RepairMode::Weak => RepairStream::new(g, c.palette_size(), None),
        }
    }

    fn len(&self) -> usize {
        self.colorings.len()
    }

    fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    /// Highest agreement with `c` and the first (hence lexicographically
    /// smallest) coloring attaining it.
    fn best_against(&self, c: &Coloring) -> Option<(usize, &Coloring)> {
        let mut best: Option<(usize, &Coloring)> = None;
        for h in &self.colorings {
            let agreement = h.agreement(c);
            if best.is_none_or(|(a, _)| agreement > a) {
                best = Some((agreement, h));
            }
        }
        best
    }
}

/// Minimum recolorings turning `c` into an admissible proper coloring, and a
/// closest such coloring (ties to the lexicographically smallest).
pub fn repair_distance(g: &Graph, c: &Coloring, mode: RepairMode) -> RepairOutcome {
    assert_eq!(c.len(), g.order(), "coloring must cover the graph");
    let stream = RepairStream::for_mode(g, c, mode);
    match stream.best_against(c) {
        Some((agreement, repair)) => RepairOutcome::Feasible {
            value: g.order() - agreement,
            repair: repair.clone(),
        },
        None => RepairOutcome::Infeasible,
    }
}

// ---------------------------------------------------------------------------
// Worst-assignment search
// ---------------------------------------------------------------------------

struct WorstSearch<'a> {
    n: usize,
    k: usize,
    stream: &'a RepairStream,
    target: &'a [usize],
    budget: Vec<usize>,
    assignment: Vec<u8>,
    /// Agreement of the partial assignment with each stream coloring.
    agree: Vec<u32>,
    /// Smallest max-agreement of any complete assignment seen, with the
    /// assignment itself; improved only strictly, so it always holds the
    /// lexicographically smallest optimum among those visited.
    incumbent: Option<(u32, Vec<u8>)>,
}

impl WorstSearch<'_> {
    fn descend(&mut self, v: usize, used: u64, max_agree: u32) {
        if v == self.n {
            if self
                .incumbent
                .as_ref()
                .is_none_or(|(best, _)| max_agree < *best)
            {
                self.incumbent = Some((max_agree, self.assignment.clone()));
            }
            return;
        }
        'colors: for color in 0..self.k {
            if self.budget[color] == 0 {
                continue;
            }
            if used >> color & 1 == 0 {
                // Equal-count colors are interchangeable; admit only the
                // representative whose fresh colors appear in ascending
                // order, the lexicographically smallest of each orbit.
                for earlier in 0..color {
                    if self.target[earlier] == self.target[color] && used >> earlier & 1 == 0 {
                        continue 'colors;
                    }
                }
            }
            // Agreement only grows along a branch, so the running maximum
            // lower-bounds every completion; meeting the incumbent already
            // rules out a strict improvement.
            let mut new_max = max_agree;
            let column = &self.stream.by_vertex[v];
            for (i, &h_color) in column.iter().enumerate() {
                if h_color as usize == color {
                    self.agree[i] += 1;
                    new_max = new_max.max(self.agree[i]);
                }
            }
            let bound = self.incumbent.as_ref().map(|(best, _)| *best);
            if bound.is_none_or(|b| new_max < b) {
                self.assignment[v] = color as u8;
                self.budget[color] -= 1;
                self.descend(v + 1, used | 1 << color, new_max);
                self.budget[color] += 1;
            }
            for (i, &h_color) in column.iter().enumerate() {
                if h_color as usize == color {
                    self.agree[i] -= 1;
                }
            }
        }
    }
}

/// The assignment of the color multiset `m` maximizing the repair distance,
/// with the distance. Ties resolve to the lexicographically smallest
/// assignment. Colors of equal multiplicity are interchangeable, so the
/// search only visits the lexicographically smallest relabeling of each
/// orbit; the reported maximizer is unaffected because the smallest
/// assignment overall is itself such a representative.
pub fn worst_assignment(
    g: &Graph,
    m: &MultiplicityVector,
    mode: RepairMode,
) -> Result<(Coloring, usize), VillainyError> {
    let stream = match mode {
        RepairMode::Strong => RepairStream::new(g, m.palette_size(), Some(m)),
        RepairMode::Weak => RepairStream::new(g, m.palette_size(), None),
    };
    worst_assignment_against(g, m, &stream).map(|(c, value, _)| (c, value))
}

/// As [`worst_assignment`] but against a prebuilt stream; also returns the
/// lexicographically smallest closest repair for the winning assignment.
fn worst_assignment_against(
    g: &Graph,
    m: &MultiplicityVector,
    stream: &RepairStream,
) -> Result<(Coloring, usize, Coloring), VillainyError> {
    if m.total() != g.order() || stream.is_empty() {
        return Err(VillainyError::InfeasibleMultiplicity);
    }
    let n = g.order();
    let k = m.palette_size();
    let mut search = WorstSearch {
        n,
        k,
        stream,
        target: m.counts(),
        budget: m.counts().to_vec(),
        assignment: vec![0u8; n],
        agree: vec![0u32; stream.len()],
        incumbent: None,
    };
    search.descend(0, 0, 0);
    let (max_agree, assignment) = search
        .incumbent
        .expect("a feasible multiset always admits at least one assignment");
    let worst = Coloring::new(assignment, k).expect("search assigns palette colors");
    let (agreement, repair) = stream
        .best_against(&worst)
        .expect("stream verified nonempty");
    debug_assert_eq!(agreement as u32, max_agree);
    Ok((worst, n - agreement, repair.clone()))
}

// ---------------------------------------------------------------------------
// Certificates and graph-level values
// ---------------------------------------------------------------------------

/// A verifiable witness for one graph-level villainy value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VillainyCertificate {
    /// The computed B(G) or B_w(G).
    pub value: usize,
    /// The adversarial assignment attaining the maximum.
    pub worst: Coloring,
    /// A proper coloring at minimum recoloring distance from `worst`.
    pub repair: Coloring,
    /// Vertices where `worst` and `repair` differ, as a mask.
    pub changed: u64,
    pub mode: RepairMode,
    /// True when the outer maximization covered its whole domain.
    pub exhaustive: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("worst and repair disagree on palette or length")]
    ShapeMismatch,
    #[error("repair coloring is not proper")]
    RepairNotProper,
    #[error("changed-vertex set does not match the worst/repair difference")]
    ChangedSetMismatch,
    #[error("value {value} does not equal the changed-vertex count {changed}")]
    ValueMismatch { value: usize, changed: usize },
    #[error("strong-mode repair does not preserve multiplicities")]
    MultiplicityMismatch,
    #[error("worst assignment's profile is not feasible for an optimal coloring")]
    ProfileNotFeasible,
}

impl VillainyCertificate {
    /// Checks every certificate invariant from scratch, independently of the
    /// search that produced the certificate.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        let n = g.order();
        if self.worst.len() != n
            || self.repair.len() != n
            || self.worst.palette_size() != self.repair.palette_size()
        {
            return Err(CertificateError::ShapeMismatch);
        }
        if !self.repair.is_proper(g) {
            return Err(CertificateError::RepairNotProper);
        }
        let mut changed = 0u64;
        for v in 0..n {
            if self.worst.color_of(v) != self.repair.color_of(v) {
                changed |= 1 << v;
            }
        }
        if changed != self.changed {
            return Err(CertificateError::ChangedSetMismatch);
        }
        if changed.count_ones() as usize != self.value {
            return Err(CertificateError::ValueMismatch {
                value: self.value,
                changed: changed.count_ones() as usize,
            });
        }
        if self.mode == RepairMode::Strong
            && self.worst.multiplicities() != self.repair.multiplicities()
        {
            return Err(CertificateError::MultiplicityMismatch);
        }
        let mut profile = self.worst.multiplicities();
        profile.sort_unstable_by(|a, b| b.cmp(a));
        let profile = MultiplicityVector::new(profile);
        if !feasible_multiplicities(g).contains(&profile) {
            return Err(CertificateError::ProfileNotFeasible);
        }
        Ok(())
    }
}

fn certificate(
    g: &Graph,
    mode: RepairMode,
    worst: Coloring,
    value: usize,
    repair: Coloring,
) -> VillainyCertificate {
    let mut changed = 0u64;
    for v in 0..g.order() {
        if worst.color_of(v) != repair.color_of(v) {
            changed |= 1 << v;
        }
    }
    VillainyCertificate {
        value,
        worst,
        repair,
        changed,
        mode,
        exhaustive: true,
    }
}

/// B(G): the villainy of the graph, with certificate. Order capped at
/// [`DEFAULT_EXACT_BOUND`]; see [`villainy_with`] to raise it.
pub fn villainy(g: &Graph) -> Result<VillainyCertificate, VillainyError> {
    villainy_with(g, RepairMode::Strong, OuterDomain::default(), DEFAULT_EXACT_BOUND)
}

/// B_w(G): the weak villainy of the graph, with certificate.
pub fn weak_villainy(g: &Graph) -> Result<VillainyCertificate, VillainyError> {
    villainy_with(g, RepairMode::Weak, OuterDomain::default(), DEFAULT_EXACT_BOUND)
}

/// Graph-level villainy with explicit mode, outer domain, and order bound.
pub fn villainy_with(
    g: &Graph,
    mode: RepairMode,
    domain: OuterDomain,
    bound: usize,
) -> Result<VillainyCertificate, VillainyError> {
    let n = g.order();
    if n > bound {
        return Err(VillainyError::OrderAboveBound { order: n, bound });
    }
    if g.is_complete() {
        // Every assignment of the only profile (1, ..., 1) is proper, so the
        // maximum distance is zero and the identity labeling witnesses it.
        let identity =
            Coloring::new((0..n as u8).collect(), n).expect("identity fits the palette");
        return Ok(certificate(g, mode, identity.clone(), 0, identity));
    }
    match domain {
        OuterDomain::FeasibleProfiles => {
            let k = chromatic_number(g);
            let weak_stream = match mode {
                RepairMode::Weak => Some(RepairStream::new(g, k, None)),
                RepairMode::Strong => None,
            };
            let mut best: Option<(usize, Coloring, Coloring)> = None;
            for m in feasible_multiplicities(g) {
                let strong_stream;
                let stream = match &weak_stream {
                    Some(shared) => shared,
                    None => {
                        strong_stream = RepairStream::new(g, k, Some(&m));
                        &strong_stream
                    }
                };
                let (worst, value, repair) = worst_assignment_against(g, &m, stream)?;
                if best.as_ref().is_none_or(|(v, _, _)| value > *v) {
                    best = Some((value, worst, repair));
                }
            }
            let (value, worst, repair) =
                best.expect("chromatic colorings realize at least one profile");
            Ok(certificate(g, mode, worst, value, repair))
        }
        OuterDomain::ProperColorings => {
            let k = chromatic_number(g);
            let outer = enumerate_proper_colorings(g, k, None);
            let mut best: Option<(usize, Coloring, Coloring)> = None;
            for c in outer {
                let outcome = repair_distance(g, &c, mode);
                let RepairOutcome::Feasible { value, repair } = outcome else {
                    unreachable!("a proper coloring always repairs to itself");
                };
                if best.as_ref().is_none_or(|(v, _, _)| value > *v) {
                    best = Some((value, c, repair));
                }
            }
            let (value, worst, repair) = best.expect("chi-colorability guarantees colorings");
            Ok(certificate(g, mode, worst, value, repair))
        }
    }
}
