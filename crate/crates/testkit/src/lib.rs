//! Brute-force reference implementations for differential testing.
//!
//! Everything here is deliberately naive: Fourier–Motzkin elimination for
//! linear feasibility and hyperplane enumeration over point subsets for
//! facets. Both are exponential and only meant for tiny inputs.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use desc_regions::lp::{LinearSystem, Relation};
use desc_regions::rational::Rational;
use desc_regions::ExponentVector;

/// `coeffs·x ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Ineq {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

fn scale_positive(row: &Ineq) -> Ineq {
    // divide by the largest |coefficient| so duplicates collapse
    let m = row.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero);
    if m.is_zero() {
        return row.clone();
    }
    Ineq {
        coeffs: row.coeffs.iter().map(|c| c / &m).collect(),
        rhs: &row.rhs / &m,
    }
}

/// Feasibility of `sys` by Fourier–Motzkin elimination.
pub fn fm_feasible(sys: &LinearSystem) -> bool {
    let n = sys.unknowns();
    let mut eqs: Vec<Ineq> = Vec::new();
    let mut ineqs: Vec<Ineq> = Vec::new();
    for r in sys.rows() {
        let row = Ineq {
            coeffs: r.coeffs.clone(),
            rhs: r.rhs.clone(),
        };
        match r.relation {
            Relation::Ge => ineqs.push(row),
            Relation::Eq => eqs.push(row),
        }
    }

    // substitute equalities away first
    while let Some(e) = eqs.pop() {
        let Some(k) = (0..n).find(|&k| !e.coeffs[k].is_zero()) else {
            if !e.rhs.is_zero() {
                return false;
            }
            continue;
        };
        let pivot = e.coeffs[k].clone();
        let substitute = |row: &mut Ineq| {
            let c = row.coeffs[k].clone();
            if c.is_zero() {
                return;
            }
            let factor = &c / &pivot;
            for j in 0..n {
                let delta = &factor * &e.coeffs[j];
                row.coeffs[j] -= delta;
            }
            row.rhs -= &factor * &e.rhs;
        };
        eqs.iter_mut().for_each(substitute);
        ineqs.iter_mut().for_each(substitute);
    }

    for k in 0..n {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut rest = BTreeSet::new();
        for row in ineqs {
            let c = row.coeffs[k].clone();
            if c.is_positive() {
                pos.push(row);
            } else if c.is_negative() {
                neg.push(row);
            } else {
                rest.insert(scale_positive(&row));
            }
        }
        for p in &pos {
            for q in &neg {
                // p: a x_k + ... ≥ r with a > 0, q: b x_k + ... ≥ s with b < 0
                let a = &p.coeffs[k];
                let b = -&q.coeffs[k];
                let coeffs: Vec<Rational> = (0..n).map(|j| &b * &p.coeffs[j] + a * &q.coeffs[j]).collect();
                let rhs = &b * &p.rhs + a * &q.rhs;
                rest.insert(scale_positive(&Ineq { coeffs, rhs }));
            }
        }
        ineqs = rest.into_iter().collect();
    }
    ineqs.iter().all(|r| r.rhs <= Rational::zero())
}

/// Normalised facet: primitive integer outer normal, offset, incident points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RefFacet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub incident: Vec<usize>,
}

/// Scales `v` to a primitive integer vector with the same direction.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn diff(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Row-reduces `m` in place and returns a basis of its null space.
fn nullspace(mut m: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][free];
            }
            v
        })
        .collect()
}

fn row_space_basis(vectors: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    // orthogonal complement of the null space = row space
    let ns = nullspace(vectors.to_vec(), ncols);
    if ns.is_empty() {
        return (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
    }
    nullspace(ns, ncols)
}

/// Every subset of `k` indices out of `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Facets of conv(points) relative to its affine hull, by testing every
/// hyperplane spanned by d affinely independent points (d = dim of the
/// hull). Normals lie in the direction space of the hull.
pub fn exhaustive_facets(points: &[ExponentVector]) -> Vec<RefFacet> {
    let n = points[0].dim();
    let base = points[0].coords();
    let dirs: Vec<Vec<Rational>> = points[1..].iter().map(|p| diff(p.coords(), base)).collect();
    let direction_space = if dirs.is_empty() { Vec::new() } else { row_space_basis(&dirs, n) };
    let d = direction_space.len();
    if d == 0 {
        return Vec::new();
    }
    let mut found = BTreeSet::new();
    for subset in subsets(points.len(), d) {
        let anchor = points[subset[0]].coords();
        // v = Dᵀc with (p_i - anchor)·v = 0 for the subset
        let constraints: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&i| {
                let w = diff(points[i].coords(), anchor);
                direction_space.iter().map(|b| dot(b, &w)).collect()
            })
            .collect();
        let ns = if constraints.is_empty() {
            vec![vec![Rational::one()]]
        } else {
            nullspace(constraints, d)
        };
        if ns.len() != 1 {
            continue;
        }
        let mut v = vec![Rational::zero(); n];
        for (c, b) in ns[0].iter().zip(&direction_space) {
            for j in 0..n {
                v[j] += c * &b[j];
            }
        }
        let mut v = primitive(&v);
        let mut offset = dot(&v, anchor);
        let values: Vec<Rational> = points.iter().map(|p| dot(&v, p.coords())).collect();
        if !values.iter().all(|x| *x <= offset) {
            if !values.iter().all(|x| *x >= offset) {
                continue;
            }
            v = v.into_iter().map(|x| -x).collect();
            offset = -offset;
        }
        let incident: Vec<usize> = points
            .iter()
            .enumerate()
            .filter(|(_, p)| dot(&v, p.coords()) == offset)
            .map(|(i, _)| i)
            .collect();
        found.insert(RefFacet {
            normal: v,
            offset,
            incident,
        });
    }
    found.into_iter().collect()
}

/// Indices of points not in the convex hull of the others, decided by an
/// LP per point.
pub fn brute_force_vertices(points: &[ExponentVector]) -> Vec<usize> {
    let n = points[0].dim();
    (0..points.len())
        .filter(|&i| {
            let others: Vec<&ExponentVector> = points.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
            if others.is_empty() {
                return true;
            }
            // λ ≥ 0, Σλ = 1, Σλ_j p_j = p_i
            let m = others.len();
            let mut sys = LinearSystem::new(m);
            for j in 0..m {
                let mut e = vec![Rational::zero(); m];
                e[j] = Rational::one();
                sys.ge(e, Rational::zero());
            }
            sys.equality(vec![Rational::one(); m], Rational::one());
            for k in 0..n {
                sys.equality(others.iter().map(|p| p.coords()[k].clone()).collect(), points[i].coords()[k].clone());
            }
            !fm_feasible(&sys)
        })
        .collect()
}
