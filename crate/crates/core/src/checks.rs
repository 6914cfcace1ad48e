//! Exhaustive decisions for well-covered, W2, Eulerian independence
//! complexes, and the Charney-Davis sign.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::CheckError;
use crate::graph::{BitIter, Graph, VertexSet};
use crate::poly::{h_polynomial, ind_poly_enum, minus_half, IntPolynomial, Rational};

/// Default vertex cap for the W2 check.
pub const W2_DEFAULT_CAP: usize = 16;

/// Concrete evidence attached to a negative verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A maximal independent set smaller than α.
    ShortMaximalSet { set: VertexSet, alpha: usize },
    /// Disjoint independent sets with no disjoint maximum extensions.
    W2Pair { a: VertexSet, b: VertexSet },
    /// An independent `F` with `I(G_F, -1) != (-1)^α(G_F)`.
    EulerIdentity {
        face: VertexSet,
        #[serde(serialize_with = "ser_display")]
        value: i128,
        expected: i64,
    },
    /// Nonzero reduced rational homology of `link(F)` in degree `degree`
    /// below the link's dimension.
    LinkHomology {
        face: VertexSet,
        degree: isize,
        betti: usize,
    },
    /// `I(G, -1/2)` is nonzero.
    NonzeroValue {
        #[serde(serialize_with = "ser_rational")]
        value: Rational,
    },
    /// h-vector that is not symmetric.
    NotPalindromic { h: IntPolynomial },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ShortMaximalSet { set, alpha } => {
                write!(
                    f,
                    "maximal independent set {set} has size {} < alpha = {alpha}",
                    set.len()
                )
            }
            Witness::W2Pair { a, b } => {
                write!(f, "pair A = {a}, B = {b} has no disjoint maximum extensions")
            }
            Witness::EulerIdentity { face, value, expected } => {
                write!(f, "F = {face}: I(G_F, -1) = {value}, expected {expected}")
            }
            Witness::LinkHomology { face, degree, betti } => {
                write!(
                    f,
                    "link of F = {face} has reduced Betti number {betti} in degree {degree}"
                )
            }
            Witness::NonzeroValue { value } => write!(f, "I(G, -1/2) = {value}"),
            Witness::NotPalindromic { h } => write!(f, "h(t) = {}", h.display_with("t")),
        }
    }
}

fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `num/den`, denominator always present.
pub fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn ser_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

/// Outcome of a yes/no property check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails { witness: Witness },
    NotApplicable { reason: String },
}

impl Verdict {
    pub fn fails(witness: Witness) -> Self {
        Verdict::Fails { witness }
    }

    pub fn not_applicable(reason: impl Into<String>) -> Self {
        Verdict::NotApplicable { reason: reason.into() }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    /// `Some(true/false)` for decided verdicts, `None` when not applicable.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails { .. } => Some(false),
            Verdict::NotApplicable { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails { witness } => Some(witness),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("true"),
            Verdict::Fails { witness } => write!(f, "false ({witness})"),
            Verdict::NotApplicable { reason } => write!(f, "not applicable ({reason})"),
        }
    }
}

pub fn is_well_covered(graph: &Graph) -> Verdict {
    let alpha = graph.independence_number();
    match graph.maximal_independent_sets().into_iter().find(|m| m.len() != alpha) {
        None => Verdict::Holds,
        Some(set) => Verdict::fails(Witness::ShortMaximalSet { set, alpha }),
    }
}

/// W2 check: every pair of disjoint independent sets (empty sets included)
/// extends to a pair of disjoint maximum independent sets.
///
/// Failing pairs are closed under enlarging either side, so it suffices to
/// look at pairs `(A, B)` where `A` is maximal in `G - B` and `B` is maximal
/// in `G - A`. Any disjoint extensions of such a pair are the pair itself,
/// so the pair passes iff `|A| = |B| = α`. Refuses graphs above
/// [`W2_DEFAULT_CAP`] vertices unless `force` is set.
pub fn is_w2(graph: &Graph, force: bool) -> Result<Verdict, CheckError> {
    let n = graph.n();
    if n > W2_DEFAULT_CAP && !force {
        return Err(CheckError::SizeCap { n, cap: W2_DEFAULT_CAP });
    }
    if n < 2 {
        return Ok(Verdict::not_applicable("fewer than 2 vertices"));
    }
    let alpha = graph.independence_number();
    let all = graph.vertices().bits();
    for a in graph.independent_sets() {
        let a_closed = graph.closed_nbhd_bits(a.bits());
        for b in graph.maximal_independent_sets_within(all & !a.bits()) {
            // A is maximal in G - B iff N[A] and B cover V.
            if a_closed | b.bits() != all {
                continue;
            }
            if a.len() != alpha || b.len() != alpha {
                return Ok(Verdict::fails(Witness::W2Pair { a, b }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Memoized `I(G[mask], -1)` and `α(G[mask])` over vertex masks of one graph.
pub(crate) struct MaskEvaluator<'g> {
    graph: &'g Graph,
    at_minus_one: HashMap<u64, i128>,
    alpha: HashMap<u64, usize>,
}

impl<'g> MaskEvaluator<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Self {
        MaskEvaluator {
            graph,
            at_minus_one: HashMap::new(),
            alpha: HashMap::new(),
        }
    }

    pub(crate) fn ind_at_minus_one(&mut self, mask: u64) -> i128 {
        if mask == 0 {
            return 1;
        }
        if let Some(&v) = self.at_minus_one.get(&mask) {
            return v;
        }
        let adj = self.graph.adjacency();
        let comps = self.graph.component_masks(mask);
        let value = if comps.len() > 1 {
            comps.into_iter().map(|c| self.ind_at_minus_one(c)).product()
        } else {
            let v = BitIter(mask)
                .max_by_key(|&u| (adj[u] & mask).count_ones())
                .expect("mask is nonempty");
            if adj[v] & mask == 0 {
                0
            } else {
                self.ind_at_minus_one(mask & !(1u64 << v)) - self.ind_at_minus_one(mask & !(adj[v] | (1u64 << v)))
            }
        };
        self.at_minus_one.insert(mask, value);
        value
    }

    pub(crate) fn alpha(&mut self, mask: u64) -> usize {
        if let Some(&a) = self.alpha.get(&mask) {
            return a;
        }
        let a = self.graph.alpha_of(mask);
        self.alpha.insert(mask, a);
        a
    }
}

/// Well-covered, and `I(G_F, -1) = (-1)^α(G_F)` for every independent `F`
/// (first failure in increasing bitset order is reported).
pub fn has_eulerian_independence_complex(graph: &Graph) -> Verdict {
    let wc = is_well_covered(graph);
    if !wc.holds() {
        return wc;
    }
    let all = graph.vertices().bits();
    let mut eval = MaskEvaluator::new(graph);
    for f in graph.independent_sets() {
        let rest = all & !graph.closed_nbhd_bits(f.bits());
        let value = eval.ind_at_minus_one(rest);
        let expected: i64 = if eval.alpha(rest).is_multiple_of(2) { 1 } else { -1 };
        if value != expected as i128 {
            return Verdict::fails(Witness::EulerIdentity {
                face: f,
                value,
                expected,
            });
        }
    }
    Verdict::Holds
}

/// Sign class of `(-1)^(α/2) I(G, -1/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CdStatus {
    HoldsZero,
    HoldsPositive,
    Fails,
    NotApplicable { reason: String },
}

impl CdStatus {
    pub fn holds(&self) -> bool {
        matches!(self, CdStatus::HoldsZero | CdStatus::HoldsPositive)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharneyDavis {
    #[serde(flatten)]
    pub status: CdStatus,
    /// `(-1)^(α/2) I(G, -1/2)`, present whenever the status is decided.
    #[serde(serialize_with = "ser_opt_rational", skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
}

fn ser_opt_rational<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => ser_rational(q, s),
        None => s.serialize_none(),
    }
}

impl fmt::Display for CharneyDavis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.status, &self.value) {
            (CdStatus::NotApplicable { reason }, _) => write!(f, "not applicable ({reason})"),
            (status, Some(v)) => {
                let name = match status {
                    CdStatus::HoldsZero => "holds (zero)",
                    CdStatus::HoldsPositive => "holds (positive)",
                    _ => "fails",
                };
                write!(f, "{name}, (-1)^(alpha/2) I(G,-1/2) = {v}")
            }
            (_, None) => f.write_str("undecided"),
        }
    }
}

/// Evaluates the Charney-Davis sign for graphs meeting its parity and
/// isolated-vertex hypotheses.
pub fn charney_davis_check(graph: &Graph) -> CharneyDavis {
    let alpha = graph.independence_number();
    if alpha % 2 == 1 {
        return CharneyDavis {
            status: CdStatus::NotApplicable {
                reason: "alpha odd".into(),
            },
            value: None,
        };
    }
    if graph.has_isolated_vertex() {
        return CharneyDavis {
            status: CdStatus::NotApplicable {
                reason: "isolated vertex".into(),
            },
            value: None,
        };
    }
    let at_half = ind_poly_enum(graph).eval(&minus_half());
    let s = if (alpha / 2).is_multiple_of(2) {
        at_half
    } else {
        -at_half
    };
    let status = if s.is_zero() {
        CdStatus::HoldsZero
    } else if s.is_positive() {
        CdStatus::HoldsPositive
    } else {
        CdStatus::Fails
    };
    CharneyDavis { status, value: Some(s) }
}

/// For Eulerian graphs with odd α, `I(G, -1/2)` must vanish.
pub fn dehn_sommerville_zero(graph: &Graph) -> Verdict {
    if graph.independence_number().is_multiple_of(2) {
        return Verdict::not_applicable("alpha even");
    }
    if let Some(reason) = not_eulerian_reason(graph) {
        return Verdict::not_applicable(reason);
    }
    let value = ind_poly_enum(graph).eval(&minus_half());
    if value.is_zero() {
        Verdict::Holds
    } else {
        Verdict::fails(Witness::NonzeroValue { value })
    }
}

fn not_eulerian_reason(graph: &Graph) -> Option<String> {
    match has_eulerian_independence_complex(graph) {
        Verdict::Holds => None,
        v => Some(format!("independence complex is not Eulerian: {v}")),
    }
}

/// h-vector of the independence complex.
pub fn h_vector(graph: &Graph) -> IntPolynomial {
    h_polynomial(&ind_poly_enum(graph), graph.independence_number()).expect("degree of I(G) equals alpha")
}

/// `h_i = h_(α-i)` for Eulerian graphs.
pub fn h_vector_palindrome(graph: &Graph) -> Verdict {
    if let Some(reason) = not_eulerian_reason(graph) {
        return Verdict::not_applicable(reason);
    }
    let alpha = graph.independence_number();
    let h = h_vector(graph);
    let coeff = |i: usize| -> BigInt { h.coeff(i) };
    if (0..=alpha).all(|i| coeff(i) == coeff(alpha - i)) {
        Verdict::Holds
    } else {
        Verdict::fails(Witness::NotPalindromic { h })
    }
}
