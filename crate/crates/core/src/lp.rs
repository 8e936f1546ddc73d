//! Exact rational linear feasibility.
//!
//! All unknowns are free. Rows are `a·x ≥ b` or `a·x = b`. Strict
//! inequalities never appear here: callers encode them as `≥ 1` slack,
//! which is valid because every system they build is positively
//! homogeneous in its unknowns.
//!
//! The solver is a dense Phase-I simplex over `BigRational` with Bland's
//! rule, so results are exact and deterministic.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, Rational};
use crate::signomial::ExponentVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub relation: Relation,
}

impl Row {
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs = rational::dot(&self.coeffs, x);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<Row>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn push(&mut self, row: Row) {
        assert_eq!(row.coeffs.len(), self.unknowns, "row width");
        self.rows.push(row);
    }

    /// Adds `coeffs·x ≥ rhs`.
    pub fn ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(Row {
            coeffs,
            rhs,
            relation: Relation::Ge,
        });
    }

    /// Adds `coeffs·x = rhs`.
    pub fn equality(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(Row {
            coeffs,
            rhs,
            relation: Relation::Eq,
        });
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.unknowns && self.rows.iter().all(|r| r.is_satisfied_by(x))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(self) -> Option<Vec<Rational>> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

/// Decides feasibility of `sys` exactly.
pub fn feasible(sys: &LinearSystem) -> Feasibility {
    let m = sys.unknowns;
    if sys.rows.is_empty() {
        return Feasibility::Feasible(vec![Rational::zero(); m]);
    }
    let nrows = sys.rows.len();
    let nslack = sys.rows.iter().filter(|r| r.relation == Relation::Ge).count();
    // columns: x+ (m), x- (m), slacks, artificials, rhs
    let art0 = 2 * m + nslack;
    let ncols = art0 + nrows;
    let rhs_col = ncols;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(nrows + 1);
    let mut slack = 0;
    for (i, row) in sys.rows.iter().enumerate() {
        let mut r = vec![Rational::zero(); ncols + 1];
        for (j, a) in row.coeffs.iter().enumerate() {
            r[j] = a.clone();
            r[m + j] = -a;
        }
        if row.relation == Relation::Ge {
            r[2 * m + slack] = -Rational::one();
            slack += 1;
        }
        r[rhs_col] = row.rhs.clone();
        if r[rhs_col].is_negative() {
            for v in r.iter_mut() {
                *v = -&*v;
            }
        }
        r[art0 + i] = Rational::one();
        t.push(r);
    }
    // objective row holds reduced costs of min Σ artificials
    let mut obj = vec![Rational::zero(); ncols + 1];
    for r in &t {
        for j in 0..art0 {
            obj[j] -= &r[j];
        }
        obj[rhs_col] -= &r[rhs_col];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (0..nrows).map(|i| art0 + i).collect();

    loop {
        let Some(enter) = (0..art0).find(|&j| t[nrows][j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..nrows {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs_col] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase I is bounded below by zero, so an entering column always has a pivot row.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, pr, enter);
        basis[pr] = enter;
    }

    if !t[nrows][rhs_col].is_zero() {
        return Feasibility::Infeasible;
    }
    let mut x = vec![Rational::zero(); m];
    for (i, &b) in basis.iter().enumerate() {
        if b < m {
            x[b] += &t[i][rhs_col];
        } else if b < 2 * m {
            x[b - m] -= &t[i][rhs_col];
        }
    }
    assert!(sys.is_satisfied_by(&x), "simplex produced an invalid witness");
    Feasibility::Feasible(x)
}

fn pivot(t: &mut [Vec<Rational>], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    if !p.is_one() {
        for v in t[pr].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &p;
            }
        }
    }
    let prow = t[pr].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (v, pv) in row.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

/// A strictly separating affine functional: `w·b ≥ c + 1` for both segment
/// endpoints and `w·α ≤ c` for every α in the point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentSeparation {
    #[serde(with = "rational::serde_vec")]
    pub w: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    pub c: Rational,
}

impl SegmentSeparation {
    /// Exact check that the functional strictly separates the segment from `set`.
    pub fn verify(&self, b1: &ExponentVector, b2: &ExponentVector, set: &[ExponentVector]) -> bool {
        let lo = b1.dot(&self.w).min(b2.dot(&self.w));
        set.iter().all(|a| a.dot(&self.w) <= self.c) && lo > self.c
    }
}

/// Decides whether Conv{b1, b2} and Conv(set) are disjoint, returning a
/// strictly separating functional when they are.
pub fn separate_segment_from_hull(
    b1: &ExponentVector,
    b2: &ExponentVector,
    set: &[ExponentVector],
) -> Option<SegmentSeparation> {
    let n = b1.dim();
    let mut sys = LinearSystem::new(n + 1);
    let row = |p: &ExponentVector, sign: i64| {
        let mut r: Vec<Rational> = p.coords().iter().map(|c| c * rational::int(sign)).collect();
        r.push(rational::int(-sign));
        r
    };
    sys.ge(row(b1, 1), Rational::one());
    sys.ge(row(b2, 1), Rational::one());
    for a in set {
        sys.ge(row(a, -1), Rational::zero());
    }
    let mut x = feasible(&sys).witness()?;
    let c = x.pop().expect("c");
    Some(SegmentSeparation { w: x, c })
}
