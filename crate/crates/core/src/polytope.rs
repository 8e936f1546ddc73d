//! Exact convex hulls of finite rational point sets.
//!
//! Hulls are computed by incremental (beneath-beyond) insertion inside the
//! affine hull of the input, so lower-dimensional point sets need no
//! special treatment beyond a change of coordinates. Facet normals are
//! reported in the ambient space, restricted to the direction space of the
//! affine hull and scaled to primitive integer vectors.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{self, LinearSystem};
use crate::rational::{self, Rational};
use crate::signomial::ExponentVector;

/// Default cap on the number of facets a hull may have at any point of the
/// construction.
pub const DEFAULT_FACET_BUDGET: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineHull {
    pub base_point: Vec<Rational>,
    pub basis: Vec<Vec<Rational>>,
    /// Point indices whose differences to `base_point` form `basis`
    /// (`anchors[0]` is the base point itself).
    pub anchors: Vec<usize>,
}

impl AffineHull {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(rational::sub(p, &self.base_point));
        linalg::rank(&rows) == self.basis.len()
    }
}

/// Greedy exact affine hull: base point is the first point, directions are
/// added whenever a point leaves the current span.
pub fn affine_hull(points: &[ExponentVector]) -> AffineHull {
    assert!(!points.is_empty(), "affine hull of an empty set");
    let base = points[0].coords().to_vec();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    let mut anchors = vec![0];
    let n = base.len();
    for (i, p) in points.iter().enumerate().skip(1) {
        if basis.len() == n {
            break;
        }
        let d = rational::sub(p.coords(), &base);
        let mut trial = echelon.clone();
        trial.push(d.clone());
        let pivots = linalg::rref(&mut trial, n);
        if pivots.len() > basis.len() {
            basis.push(d);
            anchors.push(i);
            echelon = trial;
        }
    }
    AffineHull {
        base_point: base,
        basis,
        anchors,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Halfspace {
    /// Outer normal v; the halfspace is {μ : v·μ ≤ offset}.
    #[serde(with = "rational::serde_vec")]
    pub normal: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    pub offset: Rational,
}

impl Halfspace {
    pub fn contains(&self, p: &[Rational]) -> bool {
        rational::dot(&self.normal, p) <= self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub halfspace: Halfspace,
    /// Indices of the input points lying on the facet, ascending.
    pub incident: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Polytope {
    points: Vec<ExponentVector>,
    hull: AffineHull,
    vertices: Vec<usize>,
    facets: Vec<Facet>,
}

impl Polytope {
    pub fn new(points: Vec<ExponentVector>) -> Result<Self> {
        Self::with_budget(points, DEFAULT_FACET_BUDGET)
    }

    /// Builds the hull; fails with `BudgetExceeded` when more than
    /// `facet_budget` facets are alive at any time.
    pub fn with_budget(points: Vec<ExponentVector>, facet_budget: usize) -> Result<Self> {
        assert!(!points.is_empty(), "polytope of an empty point set");
        let hull = affine_hull(&points);
        let d = hull.dim();
        let coords = hull_coordinates(&points, &hull);
        let raw = if d == 0 {
            Vec::new()
        } else {
            beneath_beyond(&coords, &hull.anchors, d, facet_budget)?
        };
        let mut facets: Vec<Facet> = raw
            .into_iter()
            .map(|f| {
                let normal = ambient_normal(&hull, &f.normal);
                let offset = points[f.incident[0]].dot(&normal);
                Facet {
                    halfspace: Halfspace { normal, offset },
                    incident: f.incident,
                }
            })
            .collect();
        facets.sort_by(|a, b| a.halfspace.cmp(&b.halfspace));

        let vertices = if d == 0 {
            vec![0]
        } else {
            (0..points.len())
                .filter(|&i| {
                    let mut acc: Option<Vec<usize>> = None;
                    for f in facets.iter().filter(|f| f.incident.binary_search(&i).is_ok()) {
                        acc = Some(match acc {
                            None => f.incident.clone(),
                            Some(a) => intersect(&a, &f.incident),
                        });
                    }
                    acc.is_some_and(|a| a == [i])
                })
                .collect()
        };
        Ok(Polytope {
            points,
            hull,
            vertices,
            facets,
        })
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ExponentVector {
        &self.points[i]
    }

    pub fn index_of(&self, p: &ExponentVector) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn hull(&self) -> &AffineHull {
        &self.hull
    }

    pub fn dim(&self) -> usize {
        self.hull.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.points[0].dim()
    }

    /// Indices of the vertices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of all points maximizing v·μ. `v = 0` selects every point.
    pub fn face_in_direction(&self, v: &[Rational]) -> Vec<usize> {
        face_in_direction(&self.points, v)
    }

    /// Decided by exact LP: some functional is maximized only at point `i`.
    pub fn is_vertex(&self, i: usize) -> bool {
        self.vertex_witness(i).is_some()
    }

    /// A functional w with w·pᵢ ≥ w·q + 1 for every other point q.
    pub fn vertex_witness(&self, i: usize) -> Option<Vec<Rational>> {
        let n = self.ambient_dim();
        if self.points.len() == 1 {
            return Some(vec![Rational::zero(); n]);
        }
        let pi = self.points[i].coords();
        let mut sys = LinearSystem::new(n);
        for (k, q) in self.points.iter().enumerate() {
            if k != i {
                sys.ge(rational::sub(pi, q.coords()), Rational::one());
            }
        }
        lp::feasible(&sys).witness()
    }

    /// True iff Conv(pᵢ, pⱼ) is an edge of the polytope.
    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.edge_witness(i, j).is_some()
    }

    /// A functional `(w, c)` exposing the edge Conv(pᵢ, pⱼ): equality on
    /// the segment, `w·q ≤ c − 1` for every point off the segment.
    pub fn edge_witness(&self, i: usize, j: usize) -> Option<EdgeWitness> {
        edge_witness(&self.points, i, j)
    }

    /// Smallest face containing the points `subset`: the intersection of all
    /// facets containing them. Returns the face's point indices, whether it
    /// is a proper face, and an outer normal exposing it (sum of the
    /// containing facets' normals; zero when not proper).
    pub fn smallest_face_containing(&self, subset: &[usize]) -> SmallestFace {
        let containing: Vec<&Facet> = self
            .facets
            .iter()
            .filter(|f| subset.iter().all(|i| f.incident.binary_search(i).is_ok()))
            .collect();
        if containing.is_empty() {
            return SmallestFace {
                points: (0..self.points.len()).collect(),
                proper: false,
                normal: vec![Rational::zero(); self.ambient_dim()],
            };
        }
        let mut points = containing[0].incident.clone();
        let mut normal = vec![Rational::zero(); self.ambient_dim()];
        for f in &containing {
            points = intersect(&points, &f.incident);
            for (a, b) in normal.iter_mut().zip(&f.halfspace.normal) {
                *a += b;
            }
        }
        rational::make_primitive(&mut normal);
        SmallestFace {
            points,
            proper: true,
            normal,
        }
    }

    /// Facet normals v (canonical sign, lexicographic order, one per ±
    /// pair) for which the points `support` take exactly two values of v·μ,
    /// i.e. `support` ⊆ N_v ∪ N_{−v}. Only facet normals are scanned.
    pub fn parallel_face_pairs(&self, support: &[usize]) -> Vec<Vec<Rational>> {
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for f in &self.facets {
            let mut v = f.halfspace.normal.clone();
            rational::canonical_sign(&mut v);
            if out.contains(&v) {
                continue;
            }
            let mut values: Vec<Rational> = Vec::with_capacity(2);
            let mut ok = true;
            for &i in support {
                let s = self.points[i].dot(&v);
                if !values.contains(&s) {
                    if values.len() == 2 {
                        ok = false;
                        break;
                    }
                    values.push(s);
                }
            }
            if ok && values.len() == 2 {
                out.push(v);
            }
        }
        out.sort();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallestFace {
    pub points: Vec<usize>,
    pub proper: bool,
    pub normal: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitness {
    #[serde(with = "rational::serde_vec")]
    pub w: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    pub c: Rational,
}

impl EdgeWitness {
    /// Exact check against a point set: both endpoints attain `c`, every
    /// point off the closed segment is strictly below, and every point
    /// attaining `c` lies on the segment.
    pub fn verify(&self, points: &[ExponentVector], a: &ExponentVector, b: &ExponentVector) -> bool {
        if a == b || a.dot(&self.w) != self.c || b.dot(&self.w) != self.c {
            return false;
        }
        points.iter().all(|q| {
            let s = q.dot(&self.w);
            if s < self.c {
                true
            } else {
                s == self.c && on_segment(q.coords(), a.coords(), b.coords())
            }
        })
    }
}

pub fn face_in_direction(points: &[ExponentVector], v: &[Rational]) -> Vec<usize> {
    let values: Vec<Rational> = points.iter().map(|p| p.dot(v)).collect();
    let Some(max) = values.iter().max() else {
        return Vec::new();
    };
    values
        .iter()
        .enumerate()
        .filter(|(_, s)| *s == max)
        .map(|(i, _)| i)
        .collect()
}

pub(crate) fn edge_witness(points: &[ExponentVector], i: usize, j: usize) -> Option<EdgeWitness> {
    if i == j || points[i] == points[j] {
        return None;
    }
    let n = points[i].dim();
    let (a, b) = (points[i].coords(), points[j].coords());
    // unknowns (w, c)
    let mut sys = LinearSystem::new(n + 1);
    let row = |p: &[Rational], sign: i64| {
        let mut r: Vec<Rational> = p.iter().map(|x| x * rational::int(sign)).collect();
        r.push(rational::int(-sign));
        r
    };
    sys.equality(row(a, 1), Rational::zero());
    sys.equality(row(b, 1), Rational::zero());
    for (k, q) in points.iter().enumerate() {
        if k == i || k == j || on_segment(q.coords(), a, b) {
            continue;
        }
        sys.ge(row(q.coords(), -1), Rational::one());
    }
    let mut x = lp::feasible(&sys).witness()?;
    let c = x.pop().expect("c");
    Some(EdgeWitness { w: x, c })
}

/// q ∈ Conv(a, b), exactly.
pub fn on_segment(q: &[Rational], a: &[Rational], b: &[Rational]) -> bool {
    let d = rational::sub(b, a);
    let e = rational::sub(q, a);
    let Some(k) = d.iter().position(|x| !x.is_zero()) else {
        return q == a;
    };
    let t = &e[k] / &d[k];
    if t.is_negative() || t > Rational::one() {
        return false;
    }
    d.iter().zip(&e).all(|(di, ei)| &(di * &t) == ei)
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Coordinates of every point with respect to `hull.basis`.
fn hull_coordinates(points: &[ExponentVector], hull: &AffineHull) -> Vec<Vec<Rational>> {
    let d = hull.dim();
    if d == 0 {
        return vec![Vec::new(); points.len()];
    }
    let n = hull.base_point.len();
    // pick d ambient rows on which the basis is invertible
    let mut cols: Vec<Vec<Rational>> = (0..n)
        .map(|r| hull.basis.iter().map(|b| b[r].clone()).collect())
        .collect();
    let transposed = cols.clone();
    let rows = {
        // pivots of the n×d matrix's transpose = independent ambient rows
        let mut t: Vec<Vec<Rational>> = (0..d).map(|k| hull.basis[k].clone()).collect();
        linalg::rref(&mut t, n)
    };
    cols = rows.iter().map(|&r| transposed[r].clone()).collect();
    points
        .iter()
        .map(|p| {
            let diff = rational::sub(p.coords(), &hull.base_point);
            let rhs: Vec<Rational> = rows.iter().map(|&r| diff[r].clone()).collect();
            linalg::solve(&cols, &rhs).expect("basis restricted to pivot rows is invertible")
        })
        .collect()
}

/// The ambient normal v in span(basis) with v·(B z) = u·z, made primitive.
fn ambient_normal(hull: &AffineHull, u: &[Rational]) -> Vec<Rational> {
    let d = hull.dim();
    let gram: Vec<Vec<Rational>> = (0..d)
        .map(|i| (0..d).map(|j| rational::dot(&hull.basis[i], &hull.basis[j])).collect())
        .collect();
    let w = linalg::solve(&gram, u).expect("Gram matrix of a basis is invertible");
    let n = hull.base_point.len();
    let mut v = vec![Rational::zero(); n];
    for (wk, bk) in w.iter().zip(&hull.basis) {
        for (vi, bi) in v.iter_mut().zip(bk) {
            *vi += wk * bi;
        }
    }
    rational::make_primitive(&mut v);
    v
}

struct RawFacet {
    normal: Vec<Rational>,
    offset: Rational,
    incident: Vec<usize>,
}

impl RawFacet {
    fn slack(&self, p: &[Rational]) -> Rational {
        rational::dot(&self.normal, p) - &self.offset
    }
}

/// Full-dimensional beneath-beyond in ℚ^d. `anchors` are d+1 affinely
/// independent point indices whose coordinates are 0, e₁, …, e_d.
fn beneath_beyond(
    coords: &[Vec<Rational>],
    anchors: &[usize],
    d: usize,
    budget: usize,
) -> Result<Vec<RawFacet>> {
    let mut inserted: Vec<usize> = anchors.to_vec();
    let mut facets: Vec<RawFacet> = Vec::with_capacity(d + 1);
    // facet opposite anchor 0: Σ z ≤ 1
    facets.push(RawFacet {
        normal: vec![Rational::one(); d],
        offset: Rational::one(),
        incident: Vec::new(),
    });
    // facet opposite anchor k: −z_k ≤ 0
    for k in 0..d {
        let mut normal = vec![Rational::zero(); d];
        normal[k] = -Rational::one();
        facets.push(RawFacet {
            normal,
            offset: Rational::zero(),
            incident: Vec::new(),
        });
    }
    if facets.len() > budget {
        return Err(Error::BudgetExceeded {
            what: "facet",
            limit: budget,
        });
    }
    for f in facets.iter_mut() {
        f.incident = inserted
            .iter()
            .copied()
            .filter(|&i| f.slack(&coords[i]).is_zero())
            .collect();
        f.incident.sort_unstable();
    }

    for p in 0..coords.len() {
        if anchors.contains(&p) {
            continue;
        }
        let z = &coords[p];
        let slacks: Vec<Rational> = facets.iter().map(|f| f.slack(z)).collect();
        let visible: Vec<usize> = (0..facets.len()).filter(|&k| slacks[k].is_positive()).collect();
        if visible.is_empty() {
            for (f, s) in facets.iter_mut().zip(&slacks) {
                if s.is_zero() {
                    insert_sorted(&mut f.incident, p);
                }
            }
            inserted.push(p);
            continue;
        }
        inserted.push(p);
        let mut created: BTreeMap<(Vec<Rational>, Rational), RawFacet> = BTreeMap::new();
        for &fv in &visible {
            for (g, sg) in slacks.iter().enumerate() {
                if !sg.is_negative() {
                    continue;
                }
                let ridge = intersect(&facets[fv].incident, &facets[g].incident);
                if ridge.len() + 1 < d {
                    continue;
                }
                let ridge_pts: Vec<&[Rational]> = ridge.iter().map(|&i| coords[i].as_slice()).collect();
                if linalg::affine_rank(&ridge_pts) != d as isize - 2 {
                    continue;
                }
                let outside = facets[g]
                    .incident
                    .iter()
                    .copied()
                    .find(|i| ridge.binary_search(i).is_err())
                    .expect("a facet has points beyond any of its ridges");
                let (normal, offset) = hyperplane_through(coords, &ridge, p, outside, d);
                let key = (normal.clone(), offset.clone());
                created.entry(key).or_insert_with(|| RawFacet {
                    normal,
                    offset,
                    incident: Vec::new(),
                });
            }
        }
        let mut next: Vec<RawFacet> = Vec::with_capacity(facets.len() + created.len());
        for (k, mut f) in facets.into_iter().enumerate() {
            if slacks[k].is_positive() {
                continue;
            }
            if slacks[k].is_zero() {
                insert_sorted(&mut f.incident, p);
            }
            next.push(f);
        }
        for (_, mut f) in created {
            f.incident = inserted
                .iter()
                .copied()
                .filter(|&i| f.slack(&coords[i]).is_zero())
                .collect();
            f.incident.sort_unstable();
            next.push(f);
        }
        facets = next;
        if facets.len() > budget {
            return Err(Error::BudgetExceeded {
                what: "facet",
                limit: budget,
            });
        }
    }
    Ok(facets)
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

/// Hyperplane through the ridge points and `apex`, oriented so that
/// `below` is strictly on the negative side. Normal is primitive.
fn hyperplane_through(
    coords: &[Vec<Rational>],
    ridge: &[usize],
    apex: usize,
    below: usize,
    d: usize,
) -> (Vec<Rational>, Rational) {
    let a = &coords[apex];
    let diffs: Vec<Vec<Rational>> = ridge.iter().map(|&i| rational::sub(&coords[i], a)).collect();
    let ns = linalg::nullspace(&diffs, d);
    debug_assert_eq!(ns.len(), 1);
    let mut normal = ns.into_iter().next().expect("ridge and apex span a hyperplane");
    rational::make_primitive(&mut normal);
    let mut offset = rational::dot(&normal, a);
    if rational::dot(&normal, &coords[below]) > offset {
        for x in normal.iter_mut() {
            *x = -&*x;
        }
        offset = -offset;
    }
    (normal, offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::int;

    fn pts(ps: &[&[i64]]) -> Vec<ExponentVector> {
        ps.iter().map(|p| ExponentVector::from_ints(p)).collect()
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn affine_hull_dimensions() {
        assert_eq!(affine_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).dim(), 2);
        assert_eq!(affine_hull(&fixtures::ex_cube().support()).dim(), 3);
        let h = affine_hull(&pts(&[&[0, 0], &[2, 2], &[1, 1]]));
        assert_eq!(h.dim(), 1);
        assert_eq!(h.basis, vec![v(&[2, 2])]);
        assert!(h.contains(&v(&[5, 5])));
        assert!(!h.contains(&v(&[5, 4])));
    }

    #[test]
    fn running_example_hull() {
        let p = Polytope::new(fixtures::eq2().support()).unwrap();
        let verts: Vec<ExponentVector> = p.vertices().iter().map(|&i| p.point(i).clone()).collect();
        assert_eq!(verts, pts(&[&[0, 0], &[0, 4], &[2, 0], &[2, 3], &[3, 2]]));
        assert_eq!(p.facets().len(), 5);
        let i02 = p.index_of(&ExponentVector::from_ints(&[0, 2])).unwrap();
        let i32 = p.index_of(&ExponentVector::from_ints(&[3, 2])).unwrap();
        assert!(!p.is_vertex(i02));
        assert!(p.is_vertex(i32));
    }

    #[test]
    fn degenerate_hulls() {
        let p = Polytope::new(pts(&[&[1, 1]])).unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.vertices(), &[0]);
        assert!(p.facets().is_empty());
        assert!(p.is_vertex(0));

        let seg = Polytope::new(pts(&[&[0, 0], &[2, 2], &[1, 1]])).unwrap();
        assert_eq!(seg.dim(), 1);
        assert_eq!(seg.vertices(), &[0, 1]);
        assert_eq!(seg.facets().len(), 2);
        for f in seg.facets() {
            assert_eq!(f.incident.len(), 1);
            // normals live in the direction space of the segment
            assert_eq!(f.halfspace.normal[0], f.halfspace.normal[1]);
        }
    }

    #[test]
    fn cube_hull() {
        let p = Polytope::new(fixtures::ex_cube().support()).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.facets().len(), 6);
        for f in p.facets() {
            assert_eq!(f.incident.len(), 4);
        }
    }

    #[test]
    fn faces_in_direction() {
        let fb = fixtures::eq4();
        let p = Polytope::new(fb.support()).unwrap();
        let face: Vec<ExponentVector> = p
            .face_in_direction(&v(&[-1, 0]))
            .iter()
            .map(|&i| p.point(i).clone())
            .collect();
        assert_eq!(face, pts(&[&[0, 0], &[0, 1], &[0, 2], &[0, 3], &[0, 4]]));
        assert_eq!(p.face_in_direction(&v(&[0, 0])).len(), fb.len());

        let r = Polytope::new(fixtures::ex_running().support()).unwrap();
        let face: Vec<ExponentVector> = r
            .face_in_direction(&v(&[0, 1]))
            .iter()
            .map(|&i| r.point(i).clone())
            .collect();
        assert_eq!(face, pts(&[&[0, 1], &[1, 1], &[4, 1]]));
    }

    #[test]
    fn edges() {
        let c = Polytope::new(fixtures::ex_cube().support()).unwrap();
        let o = c.index_of(&ExponentVector::from_ints(&[0, 0, 0])).unwrap();
        let z = c.index_of(&ExponentVector::from_ints(&[0, 0, 1])).unwrap();
        let xyz = c.index_of(&ExponentVector::from_ints(&[1, 1, 1])).unwrap();
        assert!(c.is_edge(o, z));
        assert!(!c.is_edge(o, xyz));
        let w = c.edge_witness(o, z).unwrap();
        assert!(w.verify(c.points(), c.point(o), c.point(z)));

        let p = Polytope::new(fixtures::eq2().support()).unwrap();
        let idx = |q: &[i64]| p.index_of(&ExponentVector::from_ints(q)).unwrap();
        assert!(p.is_edge(idx(&[0, 0]), idx(&[0, 4])));
        assert!(!p.is_edge(idx(&[2, 0]), idx(&[0, 4])));
        // part of an edge is not an edge
        assert!(!p.is_edge(idx(&[0, 1]), idx(&[0, 4])));
    }

    #[test]
    fn smallest_faces() {
        let fb = fixtures::eq4();
        let p = Polytope::new(fb.support()).unwrap();
        let neg: Vec<usize> = fb.negatives().iter().map(|b| p.index_of(b).unwrap()).collect();
        let sf = p.smallest_face_containing(&neg);
        assert!(sf.proper);
        let face: Vec<ExponentVector> = sf.points.iter().map(|&i| p.point(i).clone()).collect();
        assert_eq!(face, pts(&[&[0, 0], &[0, 1], &[0, 2], &[0, 3], &[0, 4]]));
        assert_eq!(sf.normal, v(&[-1, 0]));

        let all: Vec<usize> = (0..fb.len()).collect();
        let sf = p.smallest_face_containing(&all);
        assert!(!sf.proper);
        assert_eq!(sf.points.len(), fb.len());

        let f4 = fixtures::ex_cube4d();
        let p4 = Polytope::new(f4.support()).unwrap();
        assert_eq!(p4.dim(), 4);
        let neg: Vec<usize> = f4.negatives().iter().map(|b| p4.index_of(b).unwrap()).collect();
        let sf = p4.smallest_face_containing(&neg);
        assert!(sf.proper);
        assert_eq!(sf.normal, v(&[0, 0, 0, -1]));
        assert_eq!(sf.points.len(), 8);
    }

    #[test]
    fn parallel_pairs() {
        let c = Polytope::new(fixtures::ex_cube().support()).unwrap();
        let all: Vec<usize> = (0..8).collect();
        let pairs = c.parallel_face_pairs(&all);
        assert_eq!(pairs[0], v(&[0, 0, 1]));
        assert_eq!(pairs.len(), 3);

        let r = Polytope::new(fixtures::ex_running().support()).unwrap();
        let all: Vec<usize> = (0..r.points().len()).collect();
        assert_eq!(r.parallel_face_pairs(&all), vec![v(&[0, 1])]);

        // a facet and the opposite vertex count as a parallel pair
        let t = Polytope::new(pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(t.parallel_face_pairs(&[0, 1, 2]).len(), 3);
        let t = Polytope::new(pts(&[&[0, 0], &[3, 0], &[0, 3], &[1, 1]])).unwrap();
        assert!(t.parallel_face_pairs(&[0, 1, 2, 3]).is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let c = fixtures::ex_cube().support();
        assert!(matches!(
            Polytope::with_budget(c, 5),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
