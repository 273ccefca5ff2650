//! Closed-form villainy predicates: the B=0 and B_w=1 characterizations, the
//! connected-bipartite formulas, the twelve-shape B=2 candidate list, and the
//! lemma-based lower bounds.
//!
//! Everything here is a polynomial-time (or small-exponential, where a
//! hypothesis quantifies over feasible class-size profiles) predicate meant
//! to be cross-checked against the exact search in [`crate::villainy`]. The
//! known-value functions report exactly what the closed forms state, even
//! where the exact search disagrees; measuring that gap is the harness's job.

use crate::canon::canonical_form;
use crate::coloring::{chromatic_number, feasible_multiplicities, MultiplicityVector};
use crate::family::{build_family, FamilySpec};
use crate::graph::{mask_vertices, Graph};
use crate::structure::{bipartition, components, maximum_matching_size};
use std::fmt;

// ---------------------------------------------------------------------------
// Known closed-form values
// ---------------------------------------------------------------------------

/// Which quantity a [`KnownValue`] pins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Villainy,
    WeakVillainy,
}

/// Which closed-form result produced a [`KnownValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnownSource {
    /// Complete and edgeless graphs have villainy and weak villainy 0.
    CompleteOrEdgeless,
    /// The exact family with weak villainy 1: order at least 3 whose edge set
    /// is one edge or two incident edges, or order at least 4 consisting of a
    /// complete graph plus an isolated or pendant vertex.
    WeakOneFamily,
    /// The connected-bipartite closed forms of order at least 3.
    BipartiteClosedForm,
}

impl fmt::Display for KnownSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnownSource::CompleteOrEdgeless => "complete-or-edgeless",
            KnownSource::WeakOneFamily => "weak-one-family",
            KnownSource::BipartiteClosedForm => "bipartite-closed-form",
        })
    }
}

/// A value pinned exactly by a closed-form result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownValue {
    pub quantity: Quantity,
    pub value: usize,
    pub source: KnownSource,
}

/// True when every pair of distinct vertices is adjacent or none is.
pub fn is_complete_or_edgeless(g: &Graph) -> bool {
    g.is_complete() || g.is_edgeless()
}

/// Smaller bipartition side size of a connected bipartite graph, if any.
fn connected_bipartite_x(g: &Graph) -> Option<usize> {
    if components(g).len() != 1 {
        return None;
    }
    bipartition(g).map(|(x, _)| x.count_ones() as usize)
}

/// B(G) where a closed form pins it: 0 for complete or edgeless graphs, and
/// the connected-bipartite formula (2x when the sides differ, otherwise
/// 2*ceil(n/4)) for orders at least 3. The formula is evaluated literally; on
/// balanced six-vertex graphs it disagrees with the exact search, and the
/// harness records that discrepancy rather than suppressing either side.
pub fn known_villainy(g: &Graph) -> Option<KnownValue> {
    if is_complete_or_edgeless(g) {
        return Some(KnownValue {
            quantity: Quantity::Villainy,
            value: 0,
            source: KnownSource::CompleteOrEdgeless,
        });
    }
    let n = g.order();
    if n >= 3 {
        if let Some(x) = connected_bipartite_x(g) {
            let value = if x < n - x { 2 * x } else { 2 * n.div_ceil(4) };
            return Some(KnownValue {
                quantity: Quantity::Villainy,
                value,
                source: KnownSource::BipartiteClosedForm,
            });
        }
    }
    None
}

/// Membership in the exact weak-villainy-1 family.
pub fn is_weak_one_family(g: &Graph) -> bool {
    let n = g.order();
    let edges = g.edges();
    // One edge, or two incident edges, on at least 3 vertices.
    if n >= 3 && edges.len() == 1 {
        return true;
    }
    if n >= 3 && edges.len() == 2 {
        let (a, b) = edges[0];
        let (c, d) = edges[1];
        if a == c || a == d || b == c || b == d {
            return true;
        }
    }
    // A complete graph plus an isolated or pendant vertex, on at least 4.
    if n >= 4 {
        for v in 0..n {
            if g.degree(v) <= 1 && g.delete_vertex(v).is_complete() {
                // The remaining clique must have order at least 3, which
                // n >= 4 already guarantees; smaller shapes (K_2 plus
                // pendant = P_3, K_1 plus isolated) were handled by the
                // small cases above.
                return true;
            }
        }
    }
    false
}

/// B_w(G) where a closed form pins it: 0 for complete or edgeless, 1 on the
/// [`is_weak_one_family`] shapes, and the connected-bipartite weak formula
/// (min(2x, 2*floor(n/4)), with the second operand raised by 1 when
/// n = 3 mod 4) for orders at least 3.
pub fn known_weak_villainy(g: &Graph) -> Option<KnownValue> {
    if is_complete_or_edgeless(g) {
        return Some(KnownValue {
            quantity: Quantity::WeakVillainy,
            value: 0,
            source: KnownSource::CompleteOrEdgeless,
        });
    }
    if is_weak_one_family(g) {
        return Some(KnownValue {
            quantity: Quantity::WeakVillainy,
            value: 1,
            source: KnownSource::WeakOneFamily,
        });
    }
    let n = g.order();
    if n >= 3 {
        if let Some(x) = connected_bipartite_x(g) {
            let quarter = if n % 4 == 3 { 2 * (n / 4) + 1 } else { 2 * (n / 4) };
            return Some(KnownValue {
                quantity: Quantity::WeakVillainy,
                value: (2 * x).min(quarter),
                source: KnownSource::BipartiteClosedForm,
            });
        }
    }
    None
}

// ---------------------------------------------------------------------------
// The twelve-shape B=2 candidate classifier
// ---------------------------------------------------------------------------

/// Shapes a graph with B=2 must take, in fixed priority order. Matching is
/// necessary for B=2, not sufficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    /// Star K_{1,t}, t >= 2.
    Case1,
    /// Six-vertex connected bipartite graph with parts of size 3.
    Case2,
    /// P_4, P_4+K_1, or P_4+K_2.
    Case3,
    /// C_4, C_4+K_1, or C_4+K_2.
    Case4,
    /// C_5.
    Case5,
    /// 2K_2 or 3K_2.
    Case6,
    /// K_3+K_2.
    Case7,
    /// K_3+K_3.
    Case8,
    /// 2K_2+K_1.
    Case9,
    /// Order at least 4 with a vertex of degree at most 1 whose removal
    /// leaves a complete graph.
    Case10,
    /// P_3 + rK_1, r >= 1.
    Case11,
    /// K_2 + rK_1, r >= 1.
    Case12,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let index = *self as usize + 1;
        write!(f, "Case{index}")
    }
}

pub const ALL_CLASS_LABELS: [ClassLabel; 12] = [
    ClassLabel::Case1,
    ClassLabel::Case2,
    ClassLabel::Case3,
    ClassLabel::Case4,
    ClassLabel::Case5,
    ClassLabel::Case6,
    ClassLabel::Case7,
    ClassLabel::Case8,
    ClassLabel::Case9,
    ClassLabel::Case10,
    ClassLabel::Case11,
    ClassLabel::Case12,
];

/// True when `g` is isomorphic to the graph `spec` describes. Only called
/// with fixed targets of order at most 6, well inside the canon bound.
fn matches_family(g: &Graph, spec: &str) -> bool {
    let spec: FamilySpec = spec.parse().expect("fixed target specs parse");
    if g.order() != spec.order() {
        return false;
    }
    let target = build_family(&spec).expect("fixed targets build");
    canonical_form(g).expect("order within canon bound")
        == canonical_form(&target).expect("order within canon bound")
}

fn is_star(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || g.edge_count() != n - 1 {
        return false;
    }
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees[0] == n - 1 && degrees[1..].iter().all(|&d| d == 1)
}

/// A vertex of degree at most 1 whose removal leaves a complete graph.
pub fn low_degree_vertex_with_complete_rest(g: &Graph) -> Option<usize> {
    if g.order() < 2 {
        return None;
    }
    (0..g.order()).find(|&v| g.degree(v) <= 1 && g.delete_vertex(v).is_complete())
}

/// First matching shape from the twelve-case candidate list, or `None`.
/// The name matches the harness's `sweep-theorem5` command, which checks
/// that every graph with B=2 lands in some case.
pub fn classify_theorem5(g: &Graph) -> Option<ClassLabel> {
    let n = g.order();
    let check = |label: ClassLabel| -> bool {
        match label {
            ClassLabel::Case1 => is_star(g),
            ClassLabel::Case2 => {
                n == 6
                    && components(g).len() == 1
                    && bipartition(g).is_some_and(|(x, _)| x.count_ones() == 3)
            }
            ClassLabel::Case3 => {
                matches_family(g, "path(4)")
                    || matches_family(g, "path(4) + empty(1)")
                    || matches_family(g, "path(4) + complete(2)")
            }
            ClassLabel::Case4 => {
                matches_family(g, "cycle(4)")
                    || matches_family(g, "cycle(4) + empty(1)")
                    || matches_family(g, "cycle(4) + complete(2)")
            }
            ClassLabel::Case5 => matches_family(g, "cycle(5)"),
            ClassLabel::Case6 => {
                matches_family(g, "complete(2) + complete(2)")
                    || matches_family(g, "complete(2) + complete(2) + complete(2)")
            }
            ClassLabel::Case7 => matches_family(g, "complete(3) + complete(2)"),
            ClassLabel::Case8 => matches_family(g, "complete(3) + complete(3)"),
            ClassLabel::Case9 => matches_family(g, "complete(2) + complete(2) + empty(1)"),
            ClassLabel::Case10 => n >= 4 && low_degree_vertex_with_complete_rest(g).is_some(),
            ClassLabel::Case11 => {
                // P_3 plus at least one isolated vertex: two incident edges.
                n >= 4 && g.edge_count() == 2 && {
                    let (a, b) = g.edges()[0];
                    let (c, d) = g.edges()[1];
                    a == c || a == d || b == c || b == d
                }
            }
            ClassLabel::Case12 => n >= 3 && g.edge_count() == 1,
        }
    };
    ALL_CLASS_LABELS.into_iter().find(|&label| check(label))
}

// ---------------------------------------------------------------------------
// Lemma-based lower bounds
// ---------------------------------------------------------------------------

/// Identifiers for the eight lower-bound lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// Triangle present and some optimal coloring has a class of size >= 3:
    /// B >= 4.
    Triangle,
    /// Chromatic number >= 3 and some optimal coloring has a class of size
    /// >= 4: B >= 4.
    LargeClass,
    /// Triangle containing a vertex of degree >= 3, and some optimal
    /// coloring with two classes of size >= 2: B >= 3.
    Diamond,
    /// Matching of size >= 3 and some optimal coloring with three classes of
    /// size >= 2: B >= 3.
    Matching,
    /// Order >= 7 with chromatic number 3: B >= 3.
    Order7Chi3,
    /// Order 6 with chromatic number 3, except two disjoint triangles:
    /// B >= 3.
    Order6Chi3,
    /// Order <= 5 with chromatic number 3, except C_3, C_5, C_3+K_2,
    /// C_3+K_1, and the triangle with a pendant edge: B >= 3.
    SmallOrderChi3,
    /// Chromatic number >= 4, except complete graphs and graphs with a
    /// vertex of degree <= 1 whose removal leaves a complete graph: B >= 3.
    ChiAtLeast4,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaId::Triangle => "triangle",
            LemmaId::LargeClass => "large-class",
            LemmaId::Diamond => "diamond",
            LemmaId::Matching => "matching",
            LemmaId::Order7Chi3 => "order7-chi3",
            LemmaId::Order6Chi3 => "order6-chi3",
            LemmaId::SmallOrderChi3 => "order-le5-chi3",
            LemmaId::ChiAtLeast4 => "chi-ge4",
        })
    }
}

/// One fired lower bound with the hypothesis instance that fired it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaImplication {
    pub id: LemmaId,
    pub bound: usize,
    pub witness: String,
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        for v in mask_vertices(g.neighbors(u)).filter(|&v| v > u) {
            let common = g.neighbors(u) & g.neighbors(v);
            for w in mask_vertices(common).filter(|&w| w > v) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

fn profile_text(m: &MultiplicityVector) -> String {
    let counts: Vec<String> = m.counts().iter().map(usize::to_string).collect();
    format!("({})", counts.join(","))
}

/// Evaluates every lemma hypothesis on `g` and returns the implications that
/// fire. Class-size hypotheses quantify existentially over the feasible
/// profiles of optimal colorings, which is what the arguments use.
pub fn lemma_implications(g: &Graph) -> Vec<LemmaImplication> {
    let n = g.order();
    let chi = chromatic_number(g);
    let profiles = feasible_multiplicities(g);
    let triangles = triangles(g);
    let mut fired = Vec::new();

    if let Some(t) = triangles.first() {
        if let Some(m) = profiles.iter().find(|m| m.counts()[0] >= 3) {
            fired.push(LemmaImplication {
                id: LemmaId::Triangle,
                bound: 4,
                witness: format!(
                    "triangle {{{},{},{}}}; profile {} has a class of size >= 3",
                    t[0],
                    t[1],
                    t[2],
                    profile_text(m)
                ),
            });
        }
    }

    if chi >= 3 {
        if let Some(m) = profiles.iter().find(|m| m.counts()[0] >= 4) {
            fired.push(LemmaImplication {
                id: LemmaId::LargeClass,
                bound: 4,
                witness: format!(
                    "chi = {chi}; profile {} has a class of size >= 4",
                    profile_text(m)
                ),
            });
        }
    }

    let branching_triangle = triangles
        .iter()
        .find(|t| t.iter().any(|&v| g.degree(v) >= 3));
    if let Some(t) = branching_triangle {
        if let Some(m) = profiles
            .iter()
            .find(|m| m.counts().iter().filter(|&&c| c >= 2).count() >= 2)
        {
            fired.push(LemmaImplication {
                id: LemmaId::Diamond,
                bound: 3,
                witness: format!(
                    "triangle {{{},{},{}}} with a degree->=3 vertex; profile {} has two \
                     classes of size >= 2",
                    t[0],
                    t[1],
                    t[2],
                    profile_text(m)
                ),
            });
        }
    }

    let matching = maximum_matching_size(g);
    if matching >= 3 {
        if let Some(m) = profiles
            .iter()
            .find(|m| m.counts().iter().filter(|&&c| c >= 2).count() >= 3)
        {
            fired.push(LemmaImplication {
                id: LemmaId::Matching,
                bound: 3,
                witness: format!(
                    "matching of size {matching}; profile {} has three classes of size >= 2",
                    profile_text(m)
                ),
            });
        }
    }

    if n >= 7 && chi == 3 {
        fired.push(LemmaImplication {
            id: LemmaId::Order7Chi3,
            bound: 3,
            witness: format!("order {n} >= 7 with chi = 3"),
        });
    }

    if n == 6 && chi == 3 && !matches_family(g, "complete(3) + complete(3)") {
        fired.push(LemmaImplication {
            id: LemmaId::Order6Chi3,
            bound: 3,
            witness: "order 6 with chi = 3, not two disjoint triangles".to_string(),
        });
    }

    if n <= 5 && chi == 3 {
        let exceptional = matches_family(g, "complete(3)")
            || matches_family(g, "cycle(5)")
            || matches_family(g, "complete(3) + complete(2)")
            || matches_family(g, "complete(3) + empty(1)")
            || is_paw(g);
        if !exceptional {
            fired.push(LemmaImplication {
                id: LemmaId::SmallOrderChi3,
                bound: 3,
                witness: format!("order {n} <= 5 with chi = 3, not an exceptional shape"),
            });
        }
    }

    if chi >= 4 && !g.is_complete() && low_degree_vertex_with_complete_rest(g).is_none() {
        fired.push(LemmaImplication {
            id: LemmaId::ChiAtLeast4,
            bound: 3,
            witness: format!(
                "chi = {chi} >= 4; not complete; no degree-<=1 vertex leaves a complete graph"
            ),
        });
    }

    fired
}

/// Triangle with one pendant edge attached.
fn is_paw(g: &Graph) -> bool {
    if g.order() != 4 {
        return false;
    }
    let target = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("paw builds");
    canonical_form(g).expect("order 4") == canonical_form(&target).expect("order 4")
}
