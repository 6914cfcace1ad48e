//! Reduced rational homology of independence complexes, Reisner's
//! Cohen-Macaulay test, and the Gorenstein decision built on it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::checks::{has_eulerian_independence_complex, Verdict, Witness};
use crate::graph::{Graph, VertexSet};

/// Independence complex, faces grouped by dimension.
///
/// `faces_by_dim[d + 1]` holds the faces of dimension `d`, so index 0 is the
/// empty face. Within a dimension faces are sorted lexicographically by their
/// ascending vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    faces_by_dim: Vec<Vec<VertexSet>>,
}

impl FaceComplex {
    /// Top dimension; `-1` for the complex containing only the empty face.
    pub fn dim(&self) -> isize {
        self.faces_by_dim.len() as isize - 2
    }

    /// Faces of dimension `d` (`d >= -1`).
    pub fn faces(&self, d: isize) -> &[VertexSet] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.faces_by_dim.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// `(f_-1, f_0, ..., f_dim)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim.iter().map(Vec::len).collect()
    }

    /// `sum_d (-1)^d f_d` over `d >= -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Boundary map from `d`-chains to `(d-1)`-chains as sparse columns of
    /// `(row, coefficient)`, rows ascending. `d = 0` is the augmentation.
    pub fn boundary_columns(&self, d: isize) -> Vec<Vec<(usize, i64)>> {
        if d < 0 {
            return Vec::new();
        }
        let lower: HashMap<u64, usize> = self
            .faces(d - 1)
            .iter()
            .enumerate()
            .map(|(i, f)| (f.bits(), i))
            .collect();
        self.faces(d)
            .iter()
            .map(|face| {
                let mut col: Vec<(usize, i64)> = face
                    .iter()
                    .enumerate()
                    .map(|(k, v)| {
                        let row = lower[&face.without(v).bits()];
                        (row, if k % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect()
    }

    /// Dense copy of the boundary matrix, rows indexed by `(d-1)`-faces.
    pub fn boundary_dense(&self, d: isize) -> Vec<Vec<BigInt>> {
        let rows = self.faces(d - 1).len();
        let cols = self.boundary_columns(d);
        let mut m = vec![vec![BigInt::zero(); cols.len()]; rows];
        for (j, col) in cols.iter().enumerate() {
            for &(i, c) in col {
                m[i][j] = BigInt::from(c);
            }
        }
        m
    }
}

/// The complex whose faces are the independent sets of `graph`.
pub fn independence_complex(graph: &Graph) -> FaceComplex {
    let mut faces_by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); graph.independence_number() + 1];
    for s in graph.independent_sets() {
        faces_by_dim[s.len()].push(s);
    }
    for layer in &mut faces_by_dim {
        layer.sort_by_cached_key(|f| f.to_vec());
    }
    FaceComplex { faces_by_dim }
}

/// Reduced Betti numbers over Q, indexed from dimension -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    betti: Vec<usize>,
}

impl BettiVector {
    /// Reduced Betti number in dimension `d` (zero outside `-1..=dim`).
    pub fn get(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.betti.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `(b_-1, b_0, ..., b_dim)`.
    pub fn as_slice(&self) -> &[usize] {
        &self.betti
    }

    pub fn alternating_sum(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }
}

/// `b_d = f_d - rank(∂_d) - rank(∂_(d+1))` with ranks over Q.
pub fn betti_over_q(complex: &FaceComplex) -> BettiVector {
    let dim = complex.dim();
    // ranks[d + 1] = rank ∂_d; ∂_-1 and ∂_(dim+1) are zero.
    let mut ranks = vec![0usize; (dim + 3) as usize];
    for d in 0..=dim {
        let rows = complex.faces(d - 1).len();
        ranks[(d + 1) as usize] = sparse_rank(complex.boundary_columns(d), rows);
    }
    let betti = (-1..=dim)
        .map(|d| {
            let i = (d + 1) as usize;
            complex.faces(d).len() - ranks[i] - ranks[i + 1]
        })
        .collect();
    BettiVector { betti }
}

/// Rank over Q of a sparse integer matrix given by columns with ascending rows.
///
/// Columns are reduced by their lowest nonzero row against earlier pivot
/// columns using integer cross-multiplication, then divided by their content.
/// Scaling a column does not change the rank over Q. Falls back to dense
/// Bareiss elimination if an entry leaves `i128`.
pub fn sparse_rank(columns: Vec<Vec<(usize, i64)>>, rows: usize) -> usize {
    let cols: Vec<Vec<(usize, i128)>> = columns
        .iter()
        .map(|c| c.iter().map(|&(r, v)| (r, v as i128)).collect())
        .collect();
    match sparse_rank_i128(cols) {
        Some(r) => r,
        None => {
            let mut dense = vec![vec![BigInt::zero(); columns.len()]; rows];
            for (j, col) in columns.iter().enumerate() {
                for &(i, v) in col {
                    dense[i][j] = BigInt::from(v);
                }
            }
            bareiss_rank(dense)
        }
    }
}

fn sparse_rank_i128(columns: Vec<Vec<(usize, i128)>>) -> Option<usize> {
    let mut pivot_of_row: HashMap<usize, usize> = HashMap::new();
    let mut reduced: Vec<Vec<(usize, i128)>> = Vec::new();
    for mut col in columns {
        col.retain(|&(_, v)| v != 0);
        while let Some(&(low, val)) = col.last() {
            let Some(&p) = pivot_of_row.get(&low) else {
                break;
            };
            let pcol = &reduced[p];
            let pval = pcol.last().expect("pivot columns are nonzero").1;
            col = combine(&col, pval, pcol, val)?;
            normalize(&mut col);
        }
        if let Some(&(low, _)) = col.last() {
            pivot_of_row.insert(low, reduced.len());
            reduced.push(col);
        }
    }
    Some(reduced.len())
}

// s * x - t * y, rows ascending, zeros dropped.
fn combine(x: &[(usize, i128)], s: i128, y: &[(usize, i128)], t: i128) -> Option<Vec<(usize, i128)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, v) = match (x.get(i), y.get(j)) {
            (Some(&(rx, vx)), Some(&(ry, _))) if rx < ry => {
                i += 1;
                (rx, vx.checked_mul(s)?)
            }
            (Some(&(rx, _)), Some(&(ry, vy))) if ry < rx => {
                j += 1;
                (ry, vy.checked_mul(t)?.checked_neg()?)
            }
            (Some(&(rx, vx)), Some(&(_, vy))) => {
                i += 1;
                j += 1;
                (rx, vx.checked_mul(s)?.checked_sub(vy.checked_mul(t)?)?)
            }
            (Some(&(rx, vx)), None) => {
                i += 1;
                (rx, vx.checked_mul(s)?)
            }
            (None, Some(&(ry, vy))) => {
                j += 1;
                (ry, vy.checked_mul(t)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((row, v));
        }
    }
    Some(out)
}

fn normalize(col: &mut [(usize, i128)]) {
    let g = col.iter().fold(0i128, |g, &(_, v)| g.gcd(&v));
    if g > 1 {
        col.iter_mut().for_each(|(_, v)| *v /= g);
    }
}

/// Rank over Q of a dense integer matrix by fraction-free (Bareiss)
/// elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = (&pivot * &*x - &factor * p) / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Reisner's criterion over Q: for every independent `F`, the link
/// `Δ(G_F)` has vanishing reduced homology below its dimension.
pub fn is_cm_over_q(graph: &Graph) -> Verdict {
    let all = graph.vertices().bits();
    let mut seen: HashMap<u64, Option<(isize, usize)>> = HashMap::new();
    for f in graph.independent_sets() {
        let rest = all & !graph.closed_nbhd_bits(f.bits());
        let failure = *seen.entry(rest).or_insert_with(|| link_failure(graph, rest));
        if let Some((degree, betti)) = failure {
            return Verdict::fails(Witness::LinkHomology { face: f, degree, betti });
        }
    }
    Verdict::Holds
}

// First degree below the top where the link on `rest` has homology.
fn link_failure(graph: &Graph, rest: u64) -> Option<(isize, usize)> {
    let link = graph.induced(VertexSet(rest)).expect("mask is in range").graph;
    // An isolated vertex makes the link a cone, hence acyclic.
    if link.n() > 0 && link.has_isolated_vertex() {
        return None;
    }
    let complex = independence_complex(&link);
    let betti = betti_over_q(&complex);
    (-1..complex.dim()).map(|d| (d, betti.get(d))).find(|&(_, b)| b != 0)
}

/// Gorenstein over Q for graphs without isolated vertices: Eulerian
/// independence complex and Cohen-Macaulay over Q.
pub fn is_gorenstein_over_q(graph: &Graph) -> Verdict {
    if graph.has_isolated_vertex() {
        return Verdict::not_applicable("graph has an isolated vertex");
    }
    let euler = has_eulerian_independence_complex(graph);
    if !euler.holds() {
        return euler;
    }
    is_cm_over_q(graph)
}
