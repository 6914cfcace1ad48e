//! Exact integer polynomials, independence polynomials, and the h-transform.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::PolyError;
use crate::graph::{BitIter, Graph};

/// Exact rational number, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Dense polynomial with arbitrary-precision integer coefficients; `coeffs[i]`
/// multiplies `x^i`. Trailing zeros are stripped, and the zero polynomial is
/// `[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![])
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `1 + x`, the independence polynomial of a single vertex.
    pub fn one_plus_x() -> Self {
        Self::from_i64s(&[1, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation in exact rational arithmetic.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn eval_integer(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients as decimal strings, the JSON wire form.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Renders with the given variable name, e.g. `1 + 5*x + 5*x^2`.
    pub fn display_with(&self, var: &str) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && !self.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match i {
                0 => mag.to_string(),
                _ => {
                    let mono = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if mag.is_one() {
                        mono
                    } else {
                        format!("{mag}*{mono}")
                    }
                }
            };
            terms.push((c.is_negative(), body));
        }
        let mut out = String::new();
        for (k, (neg, body)) in terms.into_iter().enumerate() {
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

pub fn poly_add(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p + q
}

pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p * q
}

/// Exact independence polynomial.
///
/// Branches on a maximum-degree vertex with `I(G) = I(G - v) + x I(G_v)`,
/// splitting into connected components first.
pub fn ind_poly_enum(graph: &Graph) -> IntPolynomial {
    ind_poly_of_mask(graph, graph.vertices().bits())
}

pub(crate) fn ind_poly_of_mask(graph: &Graph, mask: u64) -> IntPolynomial {
    if mask == 0 {
        return IntPolynomial::one();
    }
    let comps = graph.component_masks(mask);
    if comps.len() > 1 {
        return comps
            .into_iter()
            .fold(IntPolynomial::one(), |acc, c| &acc * &connected_ind_poly(graph, c));
    }
    connected_ind_poly(graph, mask)
}

fn connected_ind_poly(graph: &Graph, mask: u64) -> IntPolynomial {
    let adj = graph.adjacency();
    let Some(v) = BitIter(mask).max_by_key(|&u| ((adj[u] & mask).count_ones(), std::cmp::Reverse(u))) else {
        return IntPolynomial::one();
    };
    let deg = (adj[v] & mask).count_ones();
    if deg == 0 {
        return IntPolynomial::one_plus_x();
    }
    // A clique contributes 1 + k x.
    if deg as usize + 1 == mask.count_ones() as usize && BitIter(mask).all(|u| (adj[u] & mask).count_ones() == deg) {
        return IntPolynomial::new(vec![BigInt::one(), BigInt::from(deg + 1)]);
    }
    let without = ind_poly_of_mask(graph, mask & !(1u64 << v));
    let with = ind_poly_of_mask(graph, mask & !(adj[v] | (1u64 << v)));
    &without + &with.shift(1)
}

/// `(2x + 1) I(H, x) + (x + x^2) I(H_v, x)`.
pub fn ind_poly_trung(ih: &IntPolynomial, ihv: &IntPolynomial) -> IntPolynomial {
    let two_x_plus_one = IntPolynomial::from_i64s(&[1, 2]);
    let x_plus_x2 = IntPolynomial::from_i64s(&[0, 1, 1]);
    &(&two_x_plus_one * ih) + &(&x_plus_x2 * ihv)
}

pub fn eval_rational(p: &IntPolynomial, q: &Rational) -> Rational {
    p.eval(q)
}

/// `h(t) = sum_i a_i t^i (1 - t)^(alpha - i)`.
pub fn h_polynomial(p: &IntPolynomial, alpha: usize) -> Result<IntPolynomial, PolyError> {
    if !p.is_zero() && p.degree() > alpha {
        return Err(PolyError::DegreeExceedsAlpha {
            degree: p.degree(),
            alpha,
        });
    }
    // powers[k] = (1 - t)^k
    let one_minus_t = IntPolynomial::from_i64s(&[1, -1]);
    let mut powers = vec![IntPolynomial::one()];
    for k in 1..=alpha {
        let next = &powers[k - 1] * &one_minus_t;
        powers.push(next);
    }
    let mut h = IntPolynomial::zero();
    for (i, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = powers[alpha - i].scale(a).shift(i);
        h = &h + &term;
    }
    Ok(h)
}

/// `-1/2` as an exact rational.
pub fn minus_half() -> Rational {
    Rational::new(BigInt::from(-1), BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn enum_examples() {
        assert_eq!(ind_poly_enum(&Graph::from_edges(2, &[(0, 1)]).unwrap()), p(&[1, 2]));
        assert_eq!(ind_poly_enum(&c5()), p(&[1, 5, 5]));
        assert_eq!(ind_poly_enum(&Graph::empty(0).unwrap()), p(&[1]));
        assert_eq!(ind_poly_enum(&Graph::empty(3).unwrap()), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn trung_recurrence_examples() {
        assert_eq!(ind_poly_trung(&p(&[1, 5, 5]), &p(&[1, 2])), p(&[1, 8, 18, 12]));
        assert_eq!(ind_poly_trung(&p(&[1, 2]), &p(&[1])), p(&[1, 5, 5]));
        assert_eq!(ind_poly_trung(&p(&[1]), &p(&[1])), p(&[1, 3, 1]));
    }

    #[test]
    fn ring_ops() {
        assert_eq!(poly_mul(&p(&[1, 2]), &p(&[1, 2])), p(&[1, 4, 4]));
        assert_eq!(poly_add(&p(&[1, 2]), &IntPolynomial::zero()), p(&[1, 2]));
        assert_eq!(poly_mul(&p(&[1, 1]), &p(&[1])), p(&[1, 1]));
        assert_eq!(poly_add(&p(&[1, 2]), &p(&[0, -2])), p(&[1]));
        assert!(poly_mul(&p(&[1, 2]), &IntPolynomial::zero()).is_zero());
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(eval_rational(&p(&[1, 8, 18, 12]), &minus_half()), r(0, 1));
        assert_eq!(eval_rational(&p(&[1, 5, 5]), &r(-1, 1)), r(1, 1));
        assert_eq!(eval_rational(&p(&[1, 2]), &minus_half()), r(0, 1));
        assert_eq!(eval_rational(&p(&[1, 5, 5]), &minus_half()), r(-1, 4));
    }

    #[test]
    fn h_transform_examples() {
        assert_eq!(h_polynomial(&p(&[1, 5, 5]), 2).unwrap(), p(&[1, 3, 1]));
        assert_eq!(h_polynomial(&p(&[1, 2]), 1).unwrap(), p(&[1, 1]));
        assert_eq!(h_polynomial(&p(&[1]), 0).unwrap(), p(&[1]));
        assert_eq!(h_polynomial(&p(&[1, 4, 4]), 2).unwrap(), p(&[1, 2, 1]));
        assert_eq!(
            h_polynomial(&p(&[1, 2, 1]), 1),
            Err(PolyError::DegreeExceedsAlpha { degree: 2, alpha: 1 })
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 5, 5]).to_string(), "1 + 5*x + 5*x^2");
        assert_eq!(p(&[1, 3, 1]).display_with("t"), "1 + 3*t + t^2");
        assert_eq!(p(&[1, -1]).to_string(), "1 - x");
        assert_eq!(p(&[0, 0, -3]).to_string(), "-3*x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(
            serde_json::to_string(&p(&[1, 8, 18, 12])).unwrap(),
            r#"["1","8","18","12"]"#
        );
    }
}
