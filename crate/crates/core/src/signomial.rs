//! Sparse signomials with exact rational coefficients and exponents.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Relative tolerance used for floating-point sign decisions.
pub const DEFAULT_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn of(q: &Rational) -> Option<Sign> {
        if q.is_positive() {
            Some(Sign::Pos)
        } else if q.is_negative() {
            Some(Sign::Neg)
        } else {
            None
        }
    }
}

/// An exponent vector μ ∈ ℚⁿ. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(#[serde(with = "rational::serde_vec")] pub Vec<Rational>);

impl ExponentVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        ExponentVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        ExponentVector(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, v: &[Rational]) -> Rational {
        rational::dot(&self.0, v)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(rational::to_f64).collect()
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "rational::serde_str")]
    pub coefficient: Rational,
    pub exponent: ExponentVector,
}

/// f = Σ c_μ x^μ on the positive orthant.
///
/// Terms are kept sorted by exponent with pairwise distinct exponents and
/// nonzero coefficients, so derived equality is structural equality. The
/// empty signomial is allowed and evaluates to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSignomial")]
pub struct Signomial {
    dimension: usize,
    terms: Vec<Term>,
}

#[derive(Deserialize)]
struct RawSignomial {
    dimension: usize,
    terms: Vec<Term>,
}

impl TryFrom<RawSignomial> for Signomial {
    type Error = Error;

    fn try_from(raw: RawSignomial) -> Result<Self> {
        Signomial::new(raw.dimension, raw.terms)
    }
}

impl Signomial {
    /// Builds a signomial, summing coefficients of repeated exponents and
    /// dropping terms that cancel.
    pub fn new(dimension: usize, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut acc: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for t in terms {
            if t.exponent.dim() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: t.exponent.dim(),
                });
            }
            *acc.entry(t.exponent).or_insert_with(Rational::zero) += t.coefficient;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exponent, coefficient)| Term {
                coefficient,
                exponent,
            })
            .collect();
        Ok(Signomial { dimension, terms })
    }

    /// Convenience constructor from `(coefficient, exponent)` pairs of small integers.
    pub fn from_int_terms(dimension: usize, terms: &[(i64, &[i64])]) -> Result<Self> {
        Signomial::new(
            dimension,
            terms.iter().map(|(c, e)| Term {
                coefficient: rational::int(*c),
                exponent: ExponentVector::from_ints(e),
            }),
        )
    }

    pub fn empty(dimension: usize) -> Result<Self> {
        Signomial::new(dimension, std::iter::empty())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.iter().map(|t| t.exponent.clone()).collect()
    }

    pub fn coefficient(&self, mu: &ExponentVector) -> Option<&Rational> {
        self.terms
            .binary_search_by(|t| t.exponent.cmp(mu))
            .ok()
            .map(|i| &self.terms[i].coefficient)
    }

    pub fn sign_of(&self, mu: &ExponentVector) -> Option<Sign> {
        self.coefficient(mu).and_then(Sign::of)
    }

    pub fn signed_support(&self) -> SignedSupport {
        let mut positives = BTreeSet::new();
        let mut negatives = BTreeSet::new();
        for t in &self.terms {
            if t.coefficient.is_positive() {
                positives.insert(t.exponent.clone());
            } else {
                negatives.insert(t.exponent.clone());
            }
        }
        SignedSupport {
            positives,
            negatives,
        }
    }

    pub fn positives(&self) -> Vec<ExponentVector> {
        self.terms
            .iter()
            .filter(|t| t.coefficient.is_positive())
            .map(|t| t.exponent.clone())
            .collect()
    }

    pub fn negatives(&self) -> Vec<ExponentVector> {
        self.terms
            .iter()
            .filter(|t| t.coefficient.is_negative())
            .map(|t| t.exponent.clone())
            .collect()
    }

    pub fn count_positive(&self) -> usize {
        self.terms.iter().filter(|t| t.coefficient.is_positive()).count()
    }

    pub fn count_negative(&self) -> usize {
        self.terms.iter().filter(|t| t.coefficient.is_negative()).count()
    }

    /// f_{|S}: keeps the terms whose exponent lies in `set`.
    pub fn restrict(&self, set: &BTreeSet<ExponentVector>) -> Signomial {
        self.restrict_by(|mu| set.contains(mu))
    }

    pub fn restrict_by(&self, mut keep: impl FnMut(&ExponentVector) -> bool) -> Signomial {
        Signomial {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .filter(|t| keep(&t.exponent))
                .cloned()
                .collect(),
        }
    }

    pub fn negate(&self) -> Signomial {
        Signomial {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: -&t.coefficient,
                    exponent: t.exponent.clone(),
                })
                .collect(),
        }
    }

    /// Σ c_μ exp(μ·y), i.e. f evaluated at x = exp(y).
    pub fn evaluate_log(&self, y: &[f64]) -> Result<f64> {
        self.to_float().evaluate_log(y)
    }

    pub fn to_float(&self) -> FloatSignomial {
        FloatSignomial {
            dimension: self.dimension,
            coefficients: self.terms.iter().map(|t| rational::to_f64(&t.coefficient)).collect(),
            exponents: self.terms.iter().map(|t| t.exponent.to_f64()).collect(),
        }
    }

    /// The signed coefficient sequence of t ↦ f(t^v ∗ x).
    ///
    /// Terms are grouped by the exact value of v·μ; each group is summed in
    /// floating point at x and groups that cancel to within the relative
    /// tolerance are dropped.
    pub fn induced_sequence(&self, v: &[Rational], x: &[f64]) -> Result<SignedCoefficientSequence> {
        if v.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: v.len(),
            });
        }
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        let logx: Vec<f64> = x.iter().map(|xi| xi.ln()).collect();
        let mut groups: BTreeMap<Rational, (f64, f64)> = BTreeMap::new();
        for t in &self.terms {
            let key = t.exponent.dot(v);
            let mono: f64 = t
                .exponent
                .to_f64()
                .iter()
                .zip(&logx)
                .map(|(m, l)| m * l)
                .sum::<f64>()
                .exp();
            let val = rational::to_f64(&t.coefficient) * mono;
            if !val.is_finite() {
                return Err(Error::Range);
            }
            let g = groups.entry(key).or_insert((0.0, 0.0));
            g.0 += val;
            g.1 += val.abs();
        }
        let entries = groups
            .into_iter()
            .filter_map(|(e, (sum, mag))| {
                if sum.abs() <= DEFAULT_REL_TOL * mag {
                    None
                } else if sum > 0.0 {
                    Some((e, Sign::Pos))
                } else {
                    Some((e, Sign::Neg))
                }
            })
            .collect();
        Ok(SignedCoefficientSequence { entries })
    }
}

impl fmt::Display for Signomial {
    /// Writes the signomial in the `.poly` text grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest exponents first reads more naturally
        for (i, t) in self.terms.iter().rev().enumerate() {
            let c = &t.coefficient;
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mono: Vec<String> = t
                .exponent
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(k, e)| {
                    let var = var_name(k, self.dimension);
                    if e == &rational::int(1) {
                        var
                    } else if e.is_integer() && !e.is_negative() {
                        format!("{var}^{e}")
                    } else {
                        format!("{var}^({e})")
                    }
                })
                .collect();
            let coeff = if a.is_integer() {
                a.to_string()
            } else {
                format!("({a})")
            };
            if mono.is_empty() {
                write!(f, "{coeff}")?;
            } else if a == rational::int(1) {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn var_name(k: usize, dimension: usize) -> String {
    const ALIASES: [&str; 4] = ["x", "y", "z", "w"];
    if dimension <= 4 {
        ALIASES[k].to_string()
    } else {
        format!("x{}", k + 1)
    }
}

/// σ₊(f) and σ₋(f).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSupport {
    pub positives: BTreeSet<ExponentVector>,
    pub negatives: BTreeSet<ExponentVector>,
}

/// Floating-point copy of a signomial for the sampling oracle.
#[derive(Debug, Clone)]
pub struct FloatSignomial {
    pub dimension: usize,
    pub coefficients: Vec<f64>,
    pub exponents: Vec<Vec<f64>>,
}

impl FloatSignomial {
    pub fn evaluate_log(&self, y: &[f64]) -> Result<f64> {
        if y.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: y.len(),
            });
        }
        let mut sum = 0.0;
        for (c, mu) in self.coefficients.iter().zip(&self.exponents) {
            let e: f64 = mu.iter().zip(y).map(|(m, yi)| m * yi).sum();
            sum += c * e.exp();
        }
        if sum.is_finite() {
            Ok(sum)
        } else {
            Err(Error::Range)
        }
    }

    /// Sign of f(exp(y)) with the default relative tolerance. `None` means
    /// the value is zero to within tolerance.
    pub fn sign_log(&self, y: &[f64]) -> Option<Sign> {
        self.sign_log_tol(y, DEFAULT_REL_TOL)
    }

    /// Sign decision that never overflows: all monomials are rescaled by
    /// the largest one before summing. The threshold is
    /// `rel_tol · Σ|c_μ exp(μ·y)|`.
    pub fn sign_log_tol(&self, y: &[f64], rel_tol: f64) -> Option<Sign> {
        if self.coefficients.is_empty() {
            return None;
        }
        let mut logs = Vec::with_capacity(self.coefficients.len());
        let mut max = f64::NEG_INFINITY;
        for mu in &self.exponents {
            let e: f64 = mu.iter().zip(y).map(|(m, yi)| m * yi).sum();
            max = max.max(e);
            logs.push(e);
        }
        let mut sum = 0.0;
        let mut comp = 0.0;
        let mut mag = 0.0;
        for (c, e) in self.coefficients.iter().zip(&logs) {
            let term = c * (e - max).exp();
            // Neumaier summation
            let t = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - t) + term;
            } else {
                comp += (term - t) + sum;
            }
            sum = t;
            mag += term.abs();
        }
        let value = sum + comp;
        let tau = rel_tol * mag;
        if value < -tau {
            Some(Sign::Neg)
        } else if value > tau {
            Some(Sign::Pos)
        } else {
            None
        }
    }

    pub fn is_negative_log(&self, y: &[f64]) -> bool {
        self.sign_log(y) == Some(Sign::Neg)
    }
}

/// The signed coefficient sequence of a univariate signomial, ordered by
/// strictly increasing exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedCoefficientSequence {
    pub entries: Vec<(Rational, Sign)>,
}

impl SignedCoefficientSequence {
    pub fn from_signs(signs: &[Sign]) -> Self {
        SignedCoefficientSequence {
            entries: signs
                .iter()
                .enumerate()
                .map(|(i, s)| (rational::int(i as i64), *s))
                .collect(),
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.entries.iter().map(|(_, s)| *s).collect()
    }

    /// Sign of the coefficient with the largest exponent.
    pub fn leading(&self) -> Option<Sign> {
        self.entries.last().map(|(_, s)| *s)
    }

    /// Sign of the coefficient with the smallest exponent.
    pub fn trailing(&self) -> Option<Sign> {
        self.entries.first().map(|(_, s)| *s)
    }

    pub fn sign_variations(&self) -> usize {
        sign_variations(&self.signs())
    }
}

pub fn sign_variations(signs: &[Sign]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::from_ints(c)
    }

    #[test]
    fn signed_support_of_running_example() {
        let f = fixtures::eq2();
        let s = f.signed_support();
        let pos: BTreeSet<_> = [[2, 3], [1, 3], [0, 4], [2, 0], [0, 2], [0, 0]]
            .iter()
            .map(|c| ev(c))
            .collect();
        let neg: BTreeSet<_> = [[3, 2], [2, 1], [0, 3], [0, 1]].iter().map(|c| ev(c)).collect();
        assert_eq!(s.positives, pos);
        assert_eq!(s.negatives, neg);
        assert_eq!(s.positives.len() + s.negatives.len(), f.len());
    }

    #[test]
    fn signed_support_small_cases() {
        let f = Signomial::from_int_terms(1, &[(-1, &[1])]).unwrap();
        let s = f.signed_support();
        assert!(s.positives.is_empty());
        assert_eq!(s.negatives.into_iter().collect::<Vec<_>>(), vec![ev(&[1])]);

        let g = fixtures::proof24();
        assert_eq!(g.negatives(), vec![ev(&[1, 1])]);
    }

    #[test]
    fn construction_merges_and_cancels() {
        let f = Signomial::from_int_terms(1, &[(2, &[1]), (-2, &[1]), (3, &[0]), (1, &[0])]).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.coefficient(&ev(&[0])), Some(&int(4)));
        assert_eq!(Signomial::empty(1).unwrap().evaluate_log(&[0.3]).unwrap(), 0.0);
        assert_eq!(Signomial::new(0, vec![]), Err(Error::ZeroDimension));
        assert!(matches!(
            Signomial::from_int_terms(2, &[(1, &[1])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn restriction_matches_displayed_polynomials() {
        let f = fixtures::eq2();
        let a = fixtures::set(&[[3, 2], [2, 1], [2, 3], [1, 3], [0, 4], [2, 0], [0, 2], [0, 0]]);
        let fa = f.restrict(&a);
        assert_eq!(fa, fixtures::eq3());
        assert_eq!(fa.len(), 8);
        let b = fixtures::set(&[[0, 3], [0, 1], [2, 3], [1, 3], [0, 4], [2, 0], [0, 2], [0, 0]]);
        assert_eq!(f.restrict(&b), fixtures::eq4());
        let all: BTreeSet<_> = f.support().into_iter().collect();
        assert_eq!(f.restrict(&all), f);
    }

    #[test]
    fn evaluation() {
        let one = Signomial::from_int_terms(2, &[(1, &[0, 0])]).unwrap();
        assert_eq!(one.evaluate_log(&[3.0, -2.0]).unwrap(), 1.0);
        let q = Signomial::from_int_terms(1, &[(-1, &[2]), (3, &[1]), (-1, &[0])]).unwrap();
        assert!((q.evaluate_log(&[0.0]).unwrap() - 1.0).abs() < 1e-15);
        let f = fixtures::eq2();
        assert!((f.evaluate_log(&[0.0, 0.0]).unwrap() + 3.0).abs() < 1e-12);
        let big = Signomial::from_int_terms(1, &[(1, &[1000])]).unwrap();
        assert_eq!(big.evaluate_log(&[1.0]), Err(Error::Range));
        // sign decisions survive where the raw value overflows
        let big2 = Signomial::from_int_terms(1, &[(1, &[999]), (-1, &[1000])]).unwrap();
        assert_eq!(big2.to_float().sign_log(&[1.0]), Some(Sign::Neg));
    }

    #[test]
    fn sign_variation_counts() {
        use Sign::*;
        assert_eq!(sign_variations(&[Pos, Pos, Pos]), 0);
        assert_eq!(sign_variations(&[Neg, Pos, Pos, Pos, Neg]), 2);
        assert_eq!(sign_variations(&[Pos, Neg]), 1);
        assert_eq!(sign_variations(&[]), 0);
    }

    #[test]
    fn induced_sequences() {
        use Sign::*;
        let f = fixtures::eq2();
        let s = f.induced_sequence(&[int(1), int(0)], &[1.0, 1.0]).unwrap();
        assert_eq!(s.entries.iter().map(|e| e.0.clone()).collect::<Vec<_>>(), vec![int(0), int(1), int(2), int(3)]);
        assert_eq!(s.signs(), vec![Neg, Pos, Pos, Neg]);
        assert_eq!(s.leading(), Some(Neg));
        assert_eq!(s.sign_variations(), 2);

        let g = Signomial::from_int_terms(1, &[(-1, &[1])]).unwrap();
        let s = g.induced_sequence(&[int(1)], &[1.0]).unwrap();
        assert_eq!(s.entries, vec![(int(1), Neg)]);

        let fb = fixtures::eq4();
        let s = fb.induced_sequence(&[int(-1), int(0)], &[1.0, 1.0]).unwrap();
        assert_eq!(s.entries.iter().map(|e| e.0.clone()).collect::<Vec<_>>(), vec![int(-2), int(-1), int(0)]);

        // rational exponents group exactly
        let h = Signomial::new(
            1,
            vec![
                Term { coefficient: int(1), exponent: ExponentVector(vec![ratio(1, 3)]) },
                Term { coefficient: int(-1), exponent: ExponentVector(vec![ratio(2, 3)]) },
            ],
        )
        .unwrap();
        assert_eq!(h.induced_sequence(&[int(3)], &[1.0]).unwrap().signs(), vec![Pos, Neg]);
    }

    #[test]
    fn display_round_trip_shape() {
        let f = fixtures::eq2();
        let s = f.to_string();
        assert!(s.starts_with("-101*x^3*y^2"), "{s}");
        assert!(s.contains("(19/2)*y^3"), "{s}");
    }
}
