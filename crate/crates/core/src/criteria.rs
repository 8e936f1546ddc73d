//! Single-shot criteria bounding the number of negative connected
//! components, each with an exactly checkable witness.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{self, LinearSystem, SegmentSeparation};
use crate::polytope::{self, Halfspace, Polytope};
use crate::rational::{self, Rational};
use crate::signomial::{ExponentVector, Signomial};

/// Default refusal threshold for the exponential enclosing-pair search.
pub const DEFAULT_MAX_NEGATIVES: usize = 12;
/// Cap on the number of candidate simplices tried by the optional search.
pub const SIMPLEX_SEARCH_LIMIT: usize = 20_000;

/// H_{v,a}: σ₋ ⊆ {v·μ ≥ a}, σ₊ ⊆ {v·μ ≤ a}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatingWitness {
    #[serde(with = "rational::serde_vec")]
    pub normal: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    pub offset: Rational,
    pub strict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict_point: Option<ExponentVector>,
}

impl SeparatingWitness {
    pub fn verify(&self, f: &Signomial) -> bool {
        if !verify_separating_hyperplane(f, &self.normal, &self.offset, self.strict) {
            return false;
        }
        match (&self.strict_point, self.strict) {
            (Some(b), _) => f.negatives().contains(b) && b.dot(&self.normal) > self.offset,
            (None, strict) => !strict,
        }
    }
}

/// (H_{v,a}, H_{v,b}) with a ≥ b enclosing σ₊ in the slab between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnclosingWitness {
    #[serde(with = "rational::serde_vec")]
    pub normal: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    pub upper: Rational,
    #[serde(with = "rational::serde_str")]
    pub lower: Rational,
    pub strict: bool,
}

impl EnclosingWitness {
    pub fn verify(&self, f: &Signomial) -> bool {
        verify_enclosing_pair(f, &self.normal, &self.upper, &self.lower, self.strict)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SimplexMode {
    /// σ₋ ⊆ P and σ₊ ⊆ P⁻.
    NegativesInside,
    /// σ₊ ⊆ P, σ₋ ⊆ P⁻ and some negative exponent in int(P⁻).
    PositivesInside,
}

/// An n-simplex P = Conv(μ₀, …, μₙ) with its halfspace description
/// P = ⋂ⱼ {v_j·μ ≤ a_j}, where halfspace j is the facet omitting μ_j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexWitness {
    pub vertices: Vec<ExponentVector>,
    pub h_rep: Vec<Halfspace>,
    pub mode: SimplexMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior_negative: Option<ExponentVector>,
}

impl SimplexWitness {
    /// Builds a witness whose halfspaces are derived from the vertices.
    pub fn new(vertices: Vec<ExponentVector>, mode: SimplexMode) -> Result<Self> {
        let h_rep = simplex_h_rep(&vertices)?;
        Ok(SimplexWitness {
            vertices,
            h_rep,
            mode,
            interior_negative: None,
        })
    }
}

/// A negative exponent that is a vertex of N(f), with a functional w such
/// that w·β ≥ w·μ + 1 for every other exponent μ. Along t ↦ t^w ∗ x the
/// term at β dominates, so f takes negative values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeVertex {
    pub vertex: ExponentVector,
    #[serde(with = "rational::serde_vec")]
    pub direction: Vec<Rational>,
}

impl NegativeVertex {
    pub fn verify(&self, f: &Signomial) -> bool {
        if !f.negatives().contains(&self.vertex) || self.direction.len() != f.dimension() {
            return false;
        }
        let top = self.vertex.dot(&self.direction);
        f.terms()
            .iter()
            .filter(|t| t.exponent != self.vertex)
            .all(|t| t.exponent.dot(&self.direction) + Rational::one() <= top)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxWitness {
    pub pair: EnclosingWitness,
    pub beta1: ExponentVector,
    pub beta2: ExponentVector,
    pub separation: SegmentSeparation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Criterion {
    /// σ₊ = ∅: f is negative on the whole orthant.
    AllNegative,
    OneNegativeCoeff {
        beta: ExponentVector,
    },
    OnePositiveCoeff {
        alpha: ExponentVector,
        newton_dim: usize,
    },
    StrictSeparating(SeparatingWitness),
    SimplexNegIn(SimplexWitness),
    SimplexPosIn(SimplexWitness),
    Box(BoxWitness),
}

impl Criterion {
    pub fn name(&self) -> &'static str {
        match self {
            Criterion::AllNegative => "AllNegative",
            Criterion::OneNegativeCoeff { .. } => "OneNegativeCoeff",
            Criterion::OnePositiveCoeff { .. } => "OnePositiveCoeff",
            Criterion::StrictSeparating(_) => "StrictSeparating",
            Criterion::SimplexNegIn(_) => "SimplexNegIn",
            Criterion::SimplexPosIn(_) => "SimplexPosIn",
            Criterion::Box(_) => "Box",
        }
    }

    /// Whether the criterion also proves f⁻¹(ℝ₋) ≠ ∅.
    pub fn guarantees_nonempty(&self) -> bool {
        !matches!(
            self,
            Criterion::OneNegativeCoeff { .. } | Criterion::SimplexNegIn(_)
        )
    }

    /// Exact re-check of the witness against `f`.
    pub fn verify(&self, f: &Signomial) -> bool {
        match self {
            Criterion::AllNegative => f.count_positive() == 0 && f.count_negative() > 0,
            Criterion::OneNegativeCoeff { beta } => f.negatives() == [beta.clone()],
            Criterion::OnePositiveCoeff { alpha, newton_dim } => {
                f.positives() == [alpha.clone()]
                    && *newton_dim >= 2
                    && newton_dimension(f) == Some(*newton_dim)
            }
            Criterion::StrictSeparating(w) => w.strict && w.verify(f),
            Criterion::SimplexNegIn(w) => {
                w.mode == SimplexMode::NegativesInside && verify_simplex_witness(f, w).unwrap_or(false)
            }
            Criterion::SimplexPosIn(w) => {
                w.mode == SimplexMode::PositivesInside
                    && w.interior_negative.is_some()
                    && verify_simplex_witness(f, w).unwrap_or(false)
            }
            Criterion::Box(b) => verify_box(f, b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionCertificate {
    #[serde(flatten)]
    pub criterion: Criterion,
    pub nonempty: bool,
}

impl CriterionCertificate {
    pub fn new(criterion: Criterion) -> Self {
        let nonempty = criterion.guarantees_nonempty();
        CriterionCertificate { criterion, nonempty }
    }

    pub fn verify(&self, f: &Signomial) -> bool {
        self.nonempty == self.criterion.guarantees_nonempty() && self.criterion.verify(f)
    }
}

/// A user-supplied simplex, tried by `check_connectivity`. Without a mode
/// both modes are tried.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SimplexSpec {
    pub vertices: Vec<ExponentVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<SimplexMode>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriteriaConfig {
    pub simplex: Option<SimplexSpec>,
    pub enable_simplex_search: bool,
    pub enable_box: bool,
    pub max_negatives: usize,
}

impl Default for CriteriaConfig {
    fn default() -> Self {
        CriteriaConfig {
            simplex: None,
            enable_simplex_search: false,
            enable_box: false,
            max_negatives: DEFAULT_MAX_NEGATIVES,
        }
    }
}

/// dim N(f), or `None` for the empty signomial.
pub fn newton_dimension(f: &Signomial) -> Option<usize> {
    let support = f.support();
    if support.is_empty() {
        None
    } else {
        Some(polytope::affine_hull(&support).dim())
    }
}

pub fn verify_separating_hyperplane(f: &Signomial, v: &[Rational], a: &Rational, strict: bool) -> bool {
    if v.len() != f.dimension() || rational::is_zero_vec(v) {
        return false;
    }
    let neg = f.negatives();
    let ok = neg.iter().all(|b| &b.dot(v) >= a) && f.positives().iter().all(|p| &p.dot(v) <= a);
    ok && (!strict || neg.iter().any(|b| &b.dot(v) > a))
}

pub fn verify_enclosing_pair(f: &Signomial, v: &[Rational], a: &Rational, b: &Rational, strict: bool) -> bool {
    if v.len() != f.dimension() || rational::is_zero_vec(v) || a < b {
        return false;
    }
    if !f.positives().iter().all(|p| {
        let s = p.dot(v);
        &s <= a && &s >= b
    }) {
        return false;
    }
    let neg: Vec<Rational> = f.negatives().iter().map(|q| q.dot(v)).collect();
    if neg.iter().any(|s| s < a && s > b) {
        return false;
    }
    !strict || (neg.iter().any(|s| s > a) && neg.iter().any(|s| s < b))
}

/// Strict separating hyperplane search: one LP per candidate strict point,
/// in canonical order.
pub fn find_strict_separating_hyperplane(f: &Signomial) -> Option<SeparatingWitness> {
    let neg = f.negatives();
    let pos = f.positives();
    if neg.is_empty() || pos.is_empty() {
        return None;
    }
    let n = f.dimension();
    // unknowns (v, a)
    let mut base = LinearSystem::new(n + 1);
    for b in &neg {
        base.ge(affine_row(b, 1), Rational::zero());
    }
    for p in &pos {
        base.ge(affine_row(p, -1), Rational::zero());
    }
    for b0 in &neg {
        let mut sys = base.clone();
        sys.ge(affine_row(b0, 1), Rational::one());
        if let Some(mut x) = lp::feasible(&sys).witness() {
            let a = x.pop().expect("offset");
            return Some(SeparatingWitness {
                normal: x,
                offset: a,
                strict: true,
                strict_point: Some(b0.clone()),
            });
        }
    }
    None
}

/// (±μ, ∓1): the row of ±(v·μ − a) over unknowns (v, a).
fn affine_row(mu: &ExponentVector, sign: i64) -> Vec<Rational> {
    let s = rational::int(sign);
    let mut r: Vec<Rational> = mu.coords().iter().map(|c| c * &s).collect();
    r.push(-s);
    r
}

/// Side assignment LP for enclosing pairs over unknowns (v, a, b):
/// `upper` negatives satisfy v·β ≥ a, `lower` negatives v·β ≤ b, with
/// strictness on each side expressed as a sum of slacks ≥ 1.
fn enclosing_for_assignment(
    f: &Signomial,
    upper: &[&ExponentVector],
    lower: &[&ExponentVector],
) -> Option<EnclosingWitness> {
    let n = f.dimension();
    let mut sys = LinearSystem::new(n + 2);
    let row = |mu: &ExponentVector, sv: i64, sa: i64, sb: i64| {
        let mut r: Vec<Rational> = mu.coords().iter().map(|c| c * rational::int(sv)).collect();
        r.push(rational::int(sa));
        r.push(rational::int(sb));
        r
    };
    for p in f.positives() {
        sys.ge(row(&p, -1, 1, 0), Rational::zero());
        sys.ge(row(&p, 1, 0, -1), Rational::zero());
    }
    let zero = ExponentVector::new(vec![Rational::zero(); n]);
    sys.ge(row(&zero, 0, 1, -1), Rational::zero());
    let mut up_sum = row(&zero, 0, 0, 0);
    for b in upper {
        let r = row(b, 1, -1, 0);
        for (s, x) in up_sum.iter_mut().zip(&r) {
            *s += x;
        }
        sys.ge(r, Rational::zero());
    }
    let mut low_sum = row(&zero, 0, 0, 0);
    for b in lower {
        let r = row(b, -1, 0, 1);
        for (s, x) in low_sum.iter_mut().zip(&r) {
            *s += x;
        }
        sys.ge(r, Rational::zero());
    }
    sys.ge(up_sum, Rational::one());
    sys.ge(low_sum, Rational::one());
    let mut x = lp::feasible(&sys).witness()?;
    let lower_off = x.pop().expect("b");
    let upper_off = x.pop().expect("a");
    Some(EnclosingWitness {
        normal: x,
        upper: upper_off,
        lower: lower_off,
        strict: true,
    })
}

/// Assignments of σ₋ to the two outer sides, as (upper, lower) index
/// lists, both nonempty, in increasing bitmask order.
fn side_assignments(k: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    (1u64..(1u64 << k) - 1).map(move |mask| {
        (0..k).partition(|&i| mask & (1 << i) != 0)
    })
}

/// Exhaustive strict enclosing pair search over side assignments of σ₋.
pub fn find_strict_enclosing_pair(f: &Signomial, max_negatives: usize) -> Result<Option<EnclosingWitness>> {
    let neg = f.negatives();
    if neg.len() > max_negatives {
        return Err(Error::BudgetExceeded {
            what: "negative exponent",
            limit: max_negatives,
        });
    }
    if neg.len() < 2 {
        return Ok(None);
    }
    for (up, low) in side_assignments(neg.len()) {
        let u: Vec<&ExponentVector> = up.iter().map(|&i| &neg[i]).collect();
        let l: Vec<&ExponentVector> = low.iter().map(|&i| &neg[i]).collect();
        if let Some(w) = enclosing_for_assignment(f, &u, &l) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Box criterion: a strict enclosing pair together with negative exponents
/// β₁ above and β₂ below whose segment avoids Conv(σ₊).
pub fn check_box_criterion(f: &Signomial, max_negatives: usize) -> Result<Option<CriterionCertificate>> {
    let neg = f.negatives();
    let pos = f.positives();
    if neg.len() > max_negatives {
        return Err(Error::BudgetExceeded {
            what: "negative exponent",
            limit: max_negatives,
        });
    }
    if neg.len() < 2 || pos.is_empty() {
        return Ok(None);
    }
    let k = neg.len();
    let mut seps: Vec<Vec<Option<SegmentSeparation>>> = vec![vec![None; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let s = lp::separate_segment_from_hull(&neg[i], &neg[j], &pos);
            seps[i][j] = s.clone();
            seps[j][i] = s;
        }
    }
    for (up, low) in side_assignments(k) {
        let pair = up
            .iter()
            .flat_map(|&i| low.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| seps[i][j].is_some());
        let Some((i, j)) = pair else {
            continue;
        };
        let u: Vec<&ExponentVector> = up.iter().map(|&i| &neg[i]).collect();
        let l: Vec<&ExponentVector> = low.iter().map(|&i| &neg[i]).collect();
        if let Some(w) = enclosing_for_assignment(f, &u, &l) {
            let witness = BoxWitness {
                pair: w,
                beta1: neg[i].clone(),
                beta2: neg[j].clone(),
                separation: seps[i][j].clone().expect("checked above"),
            };
            return Ok(Some(CriterionCertificate::new(Criterion::Box(witness))));
        }
    }
    Ok(None)
}

fn verify_box(f: &Signomial, b: &BoxWitness) -> bool {
    let neg = f.negatives();
    let v = &b.pair.normal;
    b.pair.strict
        && b.pair.verify(f)
        && neg.contains(&b.beta1)
        && neg.contains(&b.beta2)
        && b.beta1.dot(v) >= b.pair.upper
        && b.beta2.dot(v) <= b.pair.lower
        && b.separation.verify(&b.beta1, &b.beta2, &f.positives())
}

/// Halfspaces of the simplex with the given vertices; entry j is the facet
/// through every vertex except μ_j, oriented so that μ_j lies strictly inside.
pub fn simplex_h_rep(vertices: &[ExponentVector]) -> Result<Vec<Halfspace>> {
    let n = vertices.first().map_or(0, |v| v.dim());
    if n == 0 || vertices.len() != n + 1 || vertices.iter().any(|v| v.dim() != n) {
        return Err(Error::DegenerateSimplex);
    }
    let pts: Vec<&[Rational]> = vertices.iter().map(|v| v.coords()).collect();
    if linalg::affine_rank(&pts) != n as isize {
        return Err(Error::DegenerateSimplex);
    }
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let others: Vec<&[Rational]> = (0..=n).filter(|&k| k != j).map(|k| pts[k]).collect();
        let diffs: Vec<Vec<Rational>> = others[1..].iter().map(|p| rational::sub(p, others[0])).collect();
        let mut normal = linalg::nullspace(&diffs, n).pop().expect("facet hyperplane");
        rational::make_primitive(&mut normal);
        let mut offset = rational::dot(&normal, others[0]);
        if rational::dot(&normal, pts[j]) > offset {
            for x in normal.iter_mut() {
                *x = -&*x;
            }
            offset = -offset;
        }
        out.push(Halfspace { normal, offset });
    }
    Ok(out)
}

/// For each supplied halfspace, the index of the vertex it omits, if the
/// halfspaces describe the simplex (one per facet).
fn match_h_rep(vertices: &[ExponentVector], h: &[Halfspace]) -> Option<Vec<usize>> {
    if h.len() != vertices.len() {
        return None;
    }
    let mut omitted = Vec::with_capacity(h.len());
    for hs in h {
        if hs.normal.len() != vertices[0].dim() || rational::is_zero_vec(&hs.normal) {
            return None;
        }
        let mut below = None;
        for (k, mu) in vertices.iter().enumerate() {
            let s = mu.dot(&hs.normal);
            if s < hs.offset {
                if below.is_some() {
                    return None;
                }
                below = Some(k);
            } else if s != hs.offset {
                return None;
            }
        }
        omitted.push(below?);
    }
    let mut sorted = omitted.clone();
    sorted.sort_unstable();
    sorted.dedup();
    (sorted.len() == vertices.len()).then_some(omitted)
}

struct SimplexGeometry<'a> {
    h: &'a [Halfspace],
    omitted: Vec<usize>,
}

impl SimplexGeometry<'_> {
    fn contains(&self, mu: &ExponentVector) -> bool {
        self.h.iter().all(|hs| mu.dot(&hs.normal) <= hs.offset)
    }

    /// μ ∈ P^{−,k} = ⋂_{j≠k} {v_j·μ ≥ a_j}, or its interior when `strict`.
    fn in_cone(&self, mu: &ExponentVector, k: usize, strict: bool) -> bool {
        self.h.iter().zip(&self.omitted).filter(|(_, &o)| o != k).all(|(hs, _)| {
            let s = mu.dot(&hs.normal);
            if strict {
                s > hs.offset
            } else {
                s >= hs.offset
            }
        })
    }

    fn in_cones(&self, mu: &ExponentVector, strict: bool) -> bool {
        (0..self.h.len()).any(|k| self.in_cone(mu, k, strict))
    }
}

/// Exact check of a simplex witness. When `interior_negative` is absent in
/// `PositivesInside` mode, any negative exponent in int(P⁻) is accepted.
pub fn verify_simplex_witness(f: &Signomial, w: &SimplexWitness) -> Result<bool> {
    let derived = simplex_h_rep(&w.vertices)?;
    if w.vertices[0].dim() != f.dimension() {
        return Ok(false);
    }
    let (h, omitted) = if w.h_rep.is_empty() {
        (derived.as_slice(), (0..w.vertices.len()).collect())
    } else {
        match match_h_rep(&w.vertices, &w.h_rep) {
            Some(o) => (w.h_rep.as_slice(), o),
            None => return Ok(false),
        }
    };
    let geo = SimplexGeometry { h, omitted };
    let neg = f.negatives();
    let pos = f.positives();
    Ok(match w.mode {
        SimplexMode::NegativesInside => {
            neg.iter().all(|b| geo.contains(b)) && pos.iter().all(|a| geo.in_cones(a, false))
        }
        SimplexMode::PositivesInside => {
            f.dimension() >= 2
                && pos.iter().all(|a| geo.contains(a))
                && neg.iter().all(|b| geo.in_cones(b, false))
                && match &w.interior_negative {
                    Some(b) => neg.contains(b) && geo.in_cones(b, true),
                    None => neg.iter().any(|b| geo.in_cones(b, true)),
                }
        }
    })
}

/// Tries a simplex for the requested modes, filling in the interior
/// negative exponent for `PositivesInside`.
fn try_simplex(f: &Signomial, vertices: &[ExponentVector], modes: &[SimplexMode]) -> Option<CriterionCertificate> {
    for &mode in modes {
        let Ok(mut w) = SimplexWitness::new(vertices.to_vec(), mode) else {
            return None;
        };
        if mode == SimplexMode::PositivesInside {
            let geo = SimplexGeometry {
                h: &w.h_rep,
                omitted: (0..w.vertices.len()).collect(),
            };
            w.interior_negative = f.negatives().into_iter().find(|b| geo.in_cones(b, true));
        }
        if verify_simplex_witness(f, &w).unwrap_or(false) {
            let c = match mode {
                SimplexMode::NegativesInside => Criterion::SimplexNegIn(w),
                SimplexMode::PositivesInside => Criterion::SimplexPosIn(w),
            };
            return Some(CriterionCertificate::new(c));
        }
    }
    None
}

fn modes_for(spec: Option<SimplexMode>) -> Vec<SimplexMode> {
    match spec {
        Some(m) => vec![m],
        None => vec![SimplexMode::NegativesInside, SimplexMode::PositivesInside],
    }
}

/// Searches simplices spanned by support points, in lexicographic order of
/// index combinations, up to `SIMPLEX_SEARCH_LIMIT` candidates.
pub fn search_simplex(f: &Signomial) -> Option<CriterionCertificate> {
    let support = f.support();
    let n = f.dimension();
    if support.len() < n + 1 {
        return None;
    }
    let modes = modes_for(None);
    let mut idx: Vec<usize> = (0..=n).collect();
    let mut tried = 0;
    loop {
        let verts: Vec<ExponentVector> = idx.iter().map(|&i| support[i].clone()).collect();
        if let Some(c) = try_simplex(f, &verts, &modes) {
            return Some(c);
        }
        tried += 1;
        if tried >= SIMPLEX_SEARCH_LIMIT || !next_combination(&mut idx, support.len()) {
            return None;
        }
    }
}

fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A negative exponent that is a vertex of N(f), first in canonical order.
pub fn has_negative_vertex(f: &Signomial) -> Option<NegativeVertex> {
    let support = f.support();
    for b in f.negatives() {
        let i = support.iter().position(|m| *m == b).expect("negative exponent in support");
        let n = f.dimension();
        let direction = if support.len() == 1 {
            vec![Rational::zero(); n]
        } else {
            let mut sys = LinearSystem::new(n);
            for (k, q) in support.iter().enumerate() {
                if k != i {
                    sys.ge(rational::sub(b.coords(), q.coords()), Rational::one());
                }
            }
            match lp::feasible(&sys).witness() {
                Some(w) => w,
                None => continue,
            }
        };
        return Some(NegativeVertex { vertex: b, direction });
    }
    None
}

/// The criteria of the connectivity check, tried in a fixed order:
/// no negative terms (`None` here, handled by the caller), all terms
/// negative, one negative coefficient, a strict separating hyperplane, one
/// positive coefficient with dim N(f) ≥ 2, the simplex criterion, and
/// optionally the box criterion.
pub fn check_connectivity(f: &Signomial, config: &CriteriaConfig) -> Option<CriterionCertificate> {
    let neg = f.negatives();
    let pos = f.positives();
    if neg.is_empty() {
        return None;
    }
    if pos.is_empty() {
        return Some(CriterionCertificate::new(Criterion::AllNegative));
    }
    if neg.len() == 1 {
        return Some(CriterionCertificate::new(Criterion::OneNegativeCoeff {
            beta: neg[0].clone(),
        }));
    }
    if let Some(w) = find_strict_separating_hyperplane(f) {
        return Some(CriterionCertificate::new(Criterion::StrictSeparating(w)));
    }
    if pos.len() == 1 {
        if let Some(d) = newton_dimension(f).filter(|&d| d >= 2) {
            return Some(CriterionCertificate::new(Criterion::OnePositiveCoeff {
                alpha: pos[0].clone(),
                newton_dim: d,
            }));
        }
    }
    if let Some(spec) = &config.simplex {
        if spec.vertices.first().is_some_and(|v| v.dim() == f.dimension()) {
            if let Some(c) = try_simplex(f, &spec.vertices, &modes_for(spec.mode)) {
                return Some(c);
            }
        }
    }
    if config.enable_simplex_search {
        if let Some(c) = search_simplex(f) {
            return Some(c);
        }
    }
    if config.enable_box {
        if let Ok(Some(c)) = check_box_criterion(f, config.max_negatives) {
            return Some(c);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason")]
pub enum ClosureReason {
    /// f > 0 on the orthant.
    NoNegativeTerms,
    /// f < 0 on the orthant.
    NoPositiveTerms,
    StrictSeparating(SeparatingWitness),
    ProperNegativeFace {
        #[serde(with = "rational::serde_vec")]
        normal: Vec<Rational>,
    },
}

/// Sufficient conditions for cl(f⁻¹(ℝ₋)) = f⁻¹(ℝ_{≤0}). `None` means "not
/// certified", not "fails".
pub fn closure_property_with(f: &Signomial, p: &Polytope) -> Option<ClosureReason> {
    let neg = f.negatives();
    if f.is_empty() {
        return None;
    }
    if neg.is_empty() {
        return Some(ClosureReason::NoNegativeTerms);
    }
    if f.count_positive() == 0 {
        return Some(ClosureReason::NoPositiveTerms);
    }
    if let Some(w) = find_strict_separating_hyperplane(f) {
        return Some(ClosureReason::StrictSeparating(w));
    }
    let idx: Vec<usize> = neg.iter().map(|b| p.index_of(b).expect("negative exponent in support")).collect();
    let face = p.smallest_face_containing(&idx);
    face.proper.then_some(ClosureReason::ProperNegativeFace { normal: face.normal })
}

pub fn closure_property(f: &Signomial) -> Result<Option<ClosureReason>> {
    if f.is_empty() {
        return Ok(None);
    }
    let p = Polytope::new(f.support())?;
    Ok(closure_property_with(f, &p))
}

impl ClosureReason {
    pub fn verify(&self, f: &Signomial) -> bool {
        match self {
            ClosureReason::NoNegativeTerms => !f.is_empty() && f.count_negative() == 0,
            ClosureReason::NoPositiveTerms => f.count_negative() > 0 && f.count_positive() == 0,
            ClosureReason::StrictSeparating(w) => w.strict && w.verify(f),
            ClosureReason::ProperNegativeFace { normal } => {
                // σ₋ lies in the face exposed by `normal`, which misses some exponent
                let support = f.support();
                if normal.len() != f.dimension() || support.is_empty() {
                    return false;
                }
                let face = polytope::face_in_direction(&support, normal);
                face.len() < support.len()
                    && f.negatives().iter().all(|b| face.iter().any(|&i| support[i] == *b))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn ev(xs: &[i64]) -> ExponentVector {
        ExponentVector::from_ints(xs)
    }

    fn reference_simplex() -> Vec<ExponentVector> {
        vec![ev(&[4, 2]), ev(&[1, 1]), ev(&[1, 3])]
    }

    fn reference_h_rep() -> Vec<Halfspace> {
        vec![
            Halfspace {
                normal: v(&[-1, 0]),
                offset: int(-1),
            },
            Halfspace {
                normal: vec![ratio(1, 2), ratio(3, 2)],
                offset: int(5),
            },
            Halfspace {
                normal: vec![ratio(1, 2), ratio(-3, 2)],
                offset: int(-1),
            },
        ]
    }

    #[test]
    fn strict_separating_search() {
        let w = find_strict_separating_hyperplane(&fixtures::eq3()).unwrap();
        assert!(w.verify(&fixtures::eq3()));
        assert!(verify_separating_hyperplane(&fixtures::eq3(), &v(&[1, 0]), &int(2), true));
        assert!(find_strict_separating_hyperplane(&fixtures::eq2()).is_none());
        assert!(find_strict_separating_hyperplane(&fixtures::neg_quadratic()).is_none());
    }

    #[test]
    fn separating_hyperplane_checks() {
        assert!(verify_separating_hyperplane(&fixtures::proof24(), &v(&[1, 0]), &int(1), false));
        let fb = fixtures::eq4();
        assert!(!verify_separating_hyperplane(&fb, &v(&[-1, 0]), &int(0), true));
        assert!(verify_separating_hyperplane(&fb, &v(&[-1, 0]), &int(0), false));
    }

    #[test]
    fn enclosing_pair_checks() {
        let f = fixtures::eq2();
        assert!(verify_enclosing_pair(&f, &v(&[1, 0]), &int(2), &int(0), false));
        assert!(!verify_enclosing_pair(&f, &v(&[1, 0]), &int(2), &int(0), true));
        let b = fixtures::ex_box();
        assert!(verify_enclosing_pair(&b, &v(&[1, 0]), &ratio(7, 2), &ratio(1, 2), true));
        let w = find_strict_enclosing_pair(&b, DEFAULT_MAX_NEGATIVES).unwrap().unwrap();
        assert!(w.verify(&b));
        let pos_only = Signomial::from_int_terms(2, &[(1, &[0, 0]), (2, &[1, 1])]).unwrap();
        assert!(find_strict_enclosing_pair(&pos_only, 12).unwrap().is_none());
        assert!(matches!(
            find_strict_enclosing_pair(&b, 2),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn box_criterion() {
        let b = fixtures::ex_box();
        let c = check_box_criterion(&b, 12).unwrap().unwrap();
        assert!(c.verify(&b));
        assert!(c.nonempty);
        assert!(check_box_criterion(&fixtures::eq2(), 12).unwrap().is_none());
        // one positive exponent, two negatives off its line
        let g = Signomial::from_int_terms(2, &[(1, &[1, 1]), (-1, &[0, 0]), (-1, &[2, 1])]).unwrap();
        assert!(check_box_criterion(&g, 12).unwrap().unwrap().verify(&g));
    }

    #[test]
    fn simplex_h_representation() {
        let h = simplex_h_rep(&reference_simplex()).unwrap();
        let verts = reference_simplex();
        for (j, hs) in h.iter().enumerate() {
            for (k, mu) in verts.iter().enumerate() {
                let s = mu.dot(&hs.normal);
                if k == j {
                    assert!(s < hs.offset);
                } else {
                    assert_eq!(s, hs.offset);
                }
            }
        }
        assert_eq!(match_h_rep(&verts, &reference_h_rep()), Some(vec![0, 1, 2]));
        assert_eq!(
            simplex_h_rep(&[ev(&[0, 0]), ev(&[1, 1]), ev(&[2, 2])]),
            Err(Error::DegenerateSimplex)
        );
    }

    #[test]
    fn simplex_witnesses() {
        let f = fixtures::ex_simplex_f();
        let mut w = SimplexWitness {
            vertices: vec![ev(&[1, 1]), ev(&[4, 2]), ev(&[1, 3])],
            h_rep: Vec::new(),
            mode: SimplexMode::PositivesInside,
            interior_negative: Some(ev(&[0, 4])),
        };
        assert!(verify_simplex_witness(&f, &w).unwrap());
        w.h_rep = reference_h_rep();
        w.vertices = reference_simplex();
        assert!(verify_simplex_witness(&f, &w).unwrap());

        let g = fixtures::ex_simplex_g();
        let wg = SimplexWitness {
            interior_negative: None,
            ..w.clone()
        };
        assert!(!verify_simplex_witness(&g, &wg).unwrap());

        let neg = SimplexWitness {
            mode: SimplexMode::NegativesInside,
            interior_negative: None,
            ..w
        };
        assert!(verify_simplex_witness(&f.negate(), &neg).unwrap());
        assert!(!verify_simplex_witness(&f, &neg).unwrap());
    }

    #[test]
    fn closure() {
        assert_eq!(closure_property(&fixtures::square()).unwrap(), None);
        assert!(matches!(
            closure_property(&fixtures::eq3()).unwrap(),
            Some(ClosureReason::StrictSeparating(_))
        ));
        let r = closure_property(&fixtures::ex_cube4d()).unwrap().unwrap();
        assert!(matches!(r, ClosureReason::ProperNegativeFace { .. }));
        assert!(r.verify(&fixtures::ex_cube4d()));
    }

    #[test]
    fn negative_vertices() {
        let nv = has_negative_vertex(&fixtures::eq2()).unwrap();
        assert!(nv.verify(&fixtures::eq2()));
        assert_eq!(nv.vertex, ev(&[3, 2]));
        let pos = Signomial::from_int_terms(1, &[(1, &[1])]).unwrap();
        assert!(has_negative_vertex(&pos).is_none());
        assert!(has_negative_vertex(&fixtures::eq4()).is_none());
    }

    #[test]
    fn connectivity_check_order() {
        let cfg = CriteriaConfig::default();
        let c = check_connectivity(&fixtures::eq3(), &cfg).unwrap();
        assert_eq!(c.criterion.name(), "StrictSeparating");
        assert!(check_connectivity(&fixtures::neg_quadratic(), &cfg).is_none());
        let c = check_connectivity(&fixtures::square(), &cfg).unwrap();
        assert_eq!(c.criterion.name(), "OneNegativeCoeff");
        assert!(!c.nonempty);
        let minus_x = Signomial::from_int_terms(1, &[(-1, &[1])]).unwrap();
        assert_eq!(check_connectivity(&minus_x, &cfg).unwrap().criterion, Criterion::AllNegative);
        // one positive coefficient, no strict separating hyperplane
        let g = Signomial::from_int_terms(2, &[(1, &[1, 1]), (-1, &[0, 0]), (-1, &[2, 2]), (-1, &[2, 0])])
            .unwrap();
        let c = check_connectivity(&g, &cfg).unwrap();
        assert!(c.verify(&g));
    }

    #[test]
    fn supplied_simplex_is_used() {
        let cfg = CriteriaConfig {
            simplex: Some(SimplexSpec {
                vertices: reference_simplex(),
                mode: None,
            }),
            ..CriteriaConfig::default()
        };
        let f = fixtures::ex_simplex_f();
        if let Some(c) = check_connectivity(&f, &cfg) {
            assert!(c.verify(&f));
        }
        assert!(check_connectivity(&fixtures::ex_simplex_g(), &cfg).is_none());
    }

    #[test]
    fn certificates_roundtrip_through_json() {
        let c = check_box_criterion(&fixtures::ex_box(), 12).unwrap().unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"kind\":\"Box\""));
        let back: CriterionCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
