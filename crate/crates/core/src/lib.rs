//! Trung's construction `Tr(H, v)` on simple graphs, exact independence
//! polynomials, and exhaustive decisions for well-covered, W2, Eulerian,
//! Cohen-Macaulay and Gorenstein (over Q) independence complexes, together
//! with the Charney-Davis sign test.
//!
//! Graphs hold at most 64 vertices; every check is exact.

pub mod checks;
pub mod error;
pub mod graph;
pub mod homology;
pub mod io;
pub mod poly;
pub mod report;
pub mod trung;
pub mod verify;

pub use checks::{
    charney_davis_check, dehn_sommerville_zero, h_vector, h_vector_palindrome, has_eulerian_independence_complex,
    is_w2, is_well_covered, CdStatus, CharneyDavis, Verdict, Witness,
};
pub use error::{CheckError, GraphError, ParseError, PolyError, TrungError};
pub use graph::{Girth, Graph, Induced, VertexSet};
pub use homology::{betti_over_q, independence_complex, is_cm_over_q, is_gorenstein_over_q, BettiVector, FaceComplex};
pub use io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, EdgeListDocument};
pub use poly::{
    eval_rational, h_polynomial, ind_poly_enum, ind_poly_trung, poly_add, poly_mul, IntPolynomial, Rational,
};
pub use report::{run_checks, CheckReport, CheckSelection};
pub use trung::{c5, generate_girth4_family, maximal_ind_sets_via_remark, trung, Strategy, TrungResult};
