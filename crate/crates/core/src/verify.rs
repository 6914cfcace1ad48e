//! Graph corpora and the randomized/exhaustive suites behind `verify`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::checks::{charney_davis_check, is_w2, is_well_covered};
use crate::graph::{Girth, Graph, VertexSet};
use crate::homology::is_gorenstein_over_q;
use crate::io::write_edge_list;
use crate::poly::{ind_poly_enum, ind_poly_trung, minus_half, IntPolynomial, Rational};
use crate::trung::{generate_girth4_family, maximal_ind_sets_via_remark, trung, Strategy};

/// Largest n for which the suites enumerate every labeled graph.
pub const EXHAUSTIVE_N: usize = 6;

/// Every labeled simple graph on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |bits| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("pairs are in range")
    })
}

/// Erdos-Renyi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("n is within capacity")
}

/// `count` random graphs with `n` drawn from `n_range` and edge density
/// drawn from `[0.15, 0.85]`, deterministic in `seed`.
pub fn random_corpus(
    seed: u64,
    count: usize,
    n_range: std::ops::RangeInclusive<usize>,
    isolated_free: bool,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(n_range.clone());
        let p = rng.gen_range(0.15..0.85);
        let g = random_graph(&mut rng, n, p);
        if isolated_free && g.has_isolated_vertex() {
            continue;
        }
        out.push(g);
    }
    out
}

/// Counts independent sets by size, over all `2^n` vertex subsets.
pub fn brute_force_ind_poly(graph: &Graph) -> IntPolynomial {
    let n = graph.n();
    let mut counts = vec![0u64; n + 1];
    for bits in 0..(1u64 << n) {
        let s = VertexSet(bits);
        if graph.is_independent(s) {
            counts[s.len()] += 1;
        }
    }
    IntPolynomial::new(counts.into_iter().map(BigInt::from).collect())
}

/// Pairs `(H, v)` with `v` non-isolated: all graphs up to
/// `min(n_max, EXHAUSTIVE_N)` vertices, then `trials` random graphs with
/// `2..=n_max` vertices and a random non-isolated vertex.
pub fn construction_corpus(n_max: usize, trials: usize, seed: u64, isolated_free: bool) -> Vec<(Graph, usize)> {
    let mut out = Vec::new();
    for n in 2..=n_max.min(EXHAUSTIVE_N) {
        for h in all_graphs(n) {
            if isolated_free && h.has_isolated_vertex() {
                continue;
            }
            out.extend((0..n).filter(|&v| h.degree(v) > 0).map(|v| (h.clone(), v)));
        }
    }
    if n_max >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut added = 0;
        while added < trials {
            let n = rng.gen_range(2..=n_max);
            let p = rng.gen_range(0.15..0.85);
            let h = random_graph(&mut rng, n, p);
            if h.edge_count() == 0 || (isolated_free && h.has_isolated_vertex()) {
                continue;
            }
            let candidates: Vec<usize> = (0..n).filter(|&v| h.degree(v) > 0).collect();
            let v = candidates[rng.gen_range(0..candidates.len())];
            out.push((h, v));
            added += 1;
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub description: String,
    pub graph: Graph,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

/// At most this many counterexamples are kept per suite.
const MAX_FAILURES: usize = 10;

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, graph: &Graph, description: impl FnOnce() -> String) {
        if !ok && self.failures.len() < MAX_FAILURES {
            self.failures.push(Failure {
                description: description(),
                graph: graph.clone(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{status}] {}: {} cases", self.name, self.cases);
        for f in &self.failures {
            let _ = writeln!(out, "  counterexample: {}", f.description);
            for line in write_edge_list(&f.graph).lines() {
                let _ = writeln!(out, "    {line}");
            }
        }
        out
    }
}

/// Independence-polynomial recurrence, α increment, maximal-set
/// description, and the evaluations at `-1/2` and `-1`.
pub fn recurrence_suite(n_max: usize, trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("recurrence");
    let half = minus_half();
    let minus_one = Rational::from_integer(BigInt::from(-1));
    let quarter = Rational::new(BigInt::from(-1), BigInt::from(4));
    for (h, v) in construction_corpus(n_max, trials, seed, false) {
        report.cases += 1;
        let tr = trung(&h, v).expect("corpus vertices are non-isolated");
        let hv = h.subgraph_g_f(VertexSet::singleton(v)).expect("v in range");
        let ih = ind_poly_enum(&h);
        let ihv = ind_poly_enum(&hv);
        let itr = ind_poly_enum(&tr.graph);
        let rec = ind_poly_trung(&ih, &ihv);

        report.check(ih == brute_force_ind_poly(&h), &h, || {
            format!("I(H) = {ih} disagrees with subset counting")
        });
        report.check(itr == rec, &h, || {
            format!("v = {v}: I(Tr) = {itr}, recurrence gives {rec}")
        });
        report.check(
            tr.graph.independence_number() == h.independence_number() + 1,
            &h,
            || format!("v = {v}: alpha(Tr) != alpha(H) + 1"),
        );
        let direct: BTreeSet<VertexSet> = tr.graph.maximal_independent_sets().into_iter().collect();
        let via = maximal_ind_sets_via_remark(&h, v).expect("valid vertex");
        report.check(direct == via, &h, || {
            format!("v = {v}: maximal independent sets of Tr differ")
        });
        report.check(itr.eval(&half) == &quarter * ihv.eval(&half), &h, || {
            format!("v = {v}: I(Tr, -1/2) != -1/4 I(H_v, -1/2)")
        });
        report.check(itr.eval(&minus_one) == -ih.eval(&minus_one), &h, || {
            format!("v = {v}: I(Tr, -1) != -I(H, -1)")
        });
    }
    report
}

/// Well-covered, W2 and Gorenstein-over-Q preservation in both directions.
pub fn preservation_suite(n_max: usize, trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("preservation");
    for (h, v) in construction_corpus(n_max, trials, seed, true) {
        report.cases += 1;
        let tr = trung(&h, v).expect("corpus vertices are non-isolated").graph;
        let wc = (is_well_covered(&h).holds(), is_well_covered(&tr).holds());
        report.check(wc.0 == wc.1, &h, || {
            format!("v = {v}: well-covered H = {}, Tr = {}", wc.0, wc.1)
        });
        let w2 = (
            is_w2(&h, true).expect("forced").holds(),
            is_w2(&tr, true).expect("forced").holds(),
        );
        report.check(w2.0 == w2.1, &h, || format!("v = {v}: W2 H = {}, Tr = {}", w2.0, w2.1));
        let gor = (is_gorenstein_over_q(&h).holds(), is_gorenstein_over_q(&tr).holds());
        report.check(gor.0 == gor.1, &h, || {
            format!("v = {v}: Gorenstein H = {}, Tr = {}", gor.0, gor.1)
        });
    }
    report
}

/// The girth-4 family from `C5`: the first-strategy chain plus `trials`
/// random chains, `steps` applications each. Every member must be W2,
/// Gorenstein over Q, of girth 4, and satisfy the Charney-Davis sign (even
/// α) or vanish at `-1/2` (odd α).
pub fn charney_davis_suite(steps: usize, trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("charney-davis");
    let strategies = std::iter::once(Strategy::First).chain((0..trials as u64).map(|t| Strategy::Random {
        seed: seed.wrapping_add(t),
    }));
    for strategy in strategies {
        let family = match generate_girth4_family(steps, strategy) {
            Ok(f) => f,
            Err(e) => {
                report.cases += 1;
                report.check(false, &crate::trung::c5(), || format!("{strategy:?}: {e}"));
                continue;
            }
        };
        for (k, member) in family.iter().enumerate() {
            report.cases += 1;
            let g = &member.graph;
            let alpha = g.independence_number();
            report.check(g.girth() == Girth::Finite(4), g, || {
                format!("step {}: girth {}", k + 1, g.girth())
            });
            report.check(is_w2(g, true).expect("forced").holds(), g, || {
                format!("step {}: not W2", k + 1)
            });
            let gor = is_gorenstein_over_q(g);
            report.check(gor.holds(), g, || format!("step {}: Gorenstein verdict {gor}", k + 1));
            if alpha % 2 == 0 {
                let cd = charney_davis_check(g);
                report.check(cd.status.holds(), g, || format!("step {}: Charney-Davis {cd}", k + 1));
            } else {
                let value = ind_poly_enum(g).eval(&minus_half());
                report.check(value.is_zero(), g, || {
                    format!("step {}: I(G,-1/2) = {value} with alpha odd", k + 1)
                });
            }
        }
    }
    report
}
