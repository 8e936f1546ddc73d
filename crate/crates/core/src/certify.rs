//! The recursive connectivity certifier.
//!
//! `certify_connectivity` first tries the single-shot criteria. Failing
//! those it restricts f to the smallest face of N(f) containing σ₋ (which
//! preserves the number of negative components), and otherwise looks for a
//! pair of parallel faces covering the support joined by an edge with
//! negative endpoints, certifying both face restrictions recursively.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::criteria::{self, CriteriaConfig, CriterionCertificate, EnclosingWitness, NegativeVertex, SimplexSpec};
use crate::error::{Error, Result};
use crate::lp::{self, SegmentSeparation};
use crate::oracle::{self, GridSpec};
use crate::polytope::{self, EdgeWitness, Polytope, DEFAULT_FACET_BUDGET};
use crate::rational::{self, Rational};
use crate::signomial::{ExponentVector, Signomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    CertifiedEmpty,
    CertifiedAtMostOne,
    CertifiedExactlyOne,
    Inconclusive,
}

impl Outcome {
    pub fn is_certified(self) -> bool {
        self != Outcome::Inconclusive
    }

    /// The largest component count this outcome allows, if any.
    pub fn max_components(self) -> Option<usize> {
        match self {
            Outcome::CertifiedEmpty => Some(0),
            Outcome::CertifiedAtMostOne | Outcome::CertifiedExactlyOne => Some(1),
            Outcome::Inconclusive => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub max_depth: usize,
    pub facet_budget: usize,
    pub enable_simplex_search: bool,
    pub enable_enclosing_search: bool,
    pub enable_box: bool,
    pub max_negatives: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simplex: Option<SimplexSpec>,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            max_depth: 64,
            facet_budget: DEFAULT_FACET_BUDGET,
            enable_simplex_search: false,
            enable_enclosing_search: false,
            enable_box: false,
            max_negatives: criteria::DEFAULT_MAX_NEGATIVES,
            simplex: None,
        }
    }
}

impl CertifyConfig {
    pub fn criteria(&self) -> CriteriaConfig {
        CriteriaConfig {
            simplex: self.simplex.clone(),
            enable_simplex_search: self.enable_simplex_search,
            enable_box: self.enable_box,
            max_negatives: self.max_negatives,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Node {
    Empty,
    Criterion {
        certificate: CriterionCertificate,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        negative_vertex: Option<NegativeVertex>,
    },
    NegativeFaceReduction {
        #[serde(with = "rational::serde_vec")]
        normal: Vec<Rational>,
        face: Vec<ExponentVector>,
        child: Box<Certificate>,
    },
    ParallelSplit {
        #[serde(with = "rational::serde_vec")]
        normal: Vec<Rational>,
        beta1: ExponentVector,
        beta2: ExponentVector,
        edge: EdgeWitness,
        children: Vec<Certificate>,
    },
    Inconclusive {
        reason: String,
        /// Parallel faces were searched among facet normals only.
        partial_scan: bool,
        /// A strict enclosing pair, which bounds the count by two.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        enclosing: Option<EnclosingWitness>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// The signomial this node is about, in `.poly` syntax.
    pub polynomial: String,
    pub outcome: Outcome,
    pub node: Node,
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match &self.node {
            Node::Empty => "Empty",
            Node::Criterion { certificate, .. } => certificate.criterion.name(),
            Node::NegativeFaceReduction { .. } => "NegativeFaceReduction",
            Node::ParallelSplit { .. } => "ParallelSplit",
            Node::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn children(&self) -> Vec<&Certificate> {
        match &self.node {
            Node::NegativeFaceReduction { child, .. } => vec![child],
            Node::ParallelSplit { children, .. } => children.iter().collect(),
            _ => Vec::new(),
        }
    }

    /// Indented one-line-per-node rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let detail = match &self.node {
            Node::Empty => String::new(),
            Node::Criterion { certificate, negative_vertex } => {
                let mut s = String::new();
                if let criteria::Criterion::StrictSeparating(w) = &certificate.criterion {
                    s = format!(" v={} a={}", fmt_vec(&w.normal), w.offset);
                }
                if let Some(nv) = negative_vertex {
                    s.push_str(&format!(" negative vertex {}", nv.vertex));
                }
                s
            }
            Node::NegativeFaceReduction { normal, face, .. } => {
                format!(" v={} face of {} exponents", fmt_vec(normal), face.len())
            }
            Node::ParallelSplit { normal, beta1, beta2, .. } => {
                format!(" v={} edge {}-{}", fmt_vec(normal), beta1, beta2)
            }
            Node::Inconclusive { reason, .. } => format!(": {reason}"),
        };
        out.push_str(&format!(
            "{pad}{}{detail} [{:?}]  f = {}\n",
            self.kind(),
            self.outcome,
            self.polynomial
        ));
        for c in self.children() {
            c.render_into(out, depth + 1);
        }
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Runs the recursive certifier on `f`.
pub fn certify_connectivity(f: &Signomial, config: &CertifyConfig) -> Certificate {
    certify_at(f, config, 0)
}

fn leaf(f: &Signomial, outcome: Outcome, node: Node) -> Certificate {
    Certificate {
        polynomial: f.to_string(),
        outcome,
        node,
    }
}

fn inconclusive(f: &Signomial, config: &CertifyConfig, reason: String, partial_scan: bool) -> Certificate {
    let enclosing = if config.enable_enclosing_search {
        criteria::find_strict_enclosing_pair(f, config.max_negatives).ok().flatten()
    } else {
        None
    };
    leaf(
        f,
        Outcome::Inconclusive,
        Node::Inconclusive {
            reason,
            partial_scan,
            enclosing,
        },
    )
}

fn certify_at(f: &Signomial, config: &CertifyConfig, depth: usize) -> Certificate {
    if f.count_negative() == 0 {
        return leaf(f, Outcome::CertifiedEmpty, Node::Empty);
    }
    if let Some(certificate) = criteria::check_connectivity(f, &config.criteria()) {
        let (outcome, negative_vertex) = if certificate.nonempty {
            (Outcome::CertifiedExactlyOne, None)
        } else {
            match criteria::has_negative_vertex(f) {
                Some(nv) => (Outcome::CertifiedExactlyOne, Some(nv)),
                None => (Outcome::CertifiedAtMostOne, None),
            }
        };
        return leaf(
            f,
            outcome,
            Node::Criterion {
                certificate,
                negative_vertex,
            },
        );
    }
    if depth + 1 >= config.max_depth.max(1) {
        return inconclusive(f, config, format!("recursion depth limit {} reached", config.max_depth), false);
    }
    let support = f.support();
    let p = match Polytope::with_budget(support.clone(), config.facet_budget) {
        Ok(p) => p,
        Err(e) => return inconclusive(f, config, format!("Newton polytope: {e}"), false),
    };
    let neg_idx: Vec<usize> = f
        .negatives()
        .iter()
        .map(|b| p.index_of(b).expect("negative exponent in support"))
        .collect();
    let face = p.smallest_face_containing(&neg_idx);
    if face.proper {
        let pts: BTreeSet<ExponentVector> = face.points.iter().map(|&i| p.point(i).clone()).collect();
        let child = certify_at(&f.restrict(&pts), config, depth + 1);
        return leaf(
            f,
            child.outcome,
            Node::NegativeFaceReduction {
                normal: face.normal,
                face: pts.into_iter().collect(),
                child: Box::new(child),
            },
        );
    }
    let all: Vec<usize> = (0..support.len()).collect();
    let normals = p.parallel_face_pairs(&all);
    let mut tried = Vec::new();
    for v in &normals {
        let Some((beta1, beta2, edge)) = intersection_nonempty_in(&p, f, v) else {
            tried.push(format!("{}: no negative edge", fmt_vec(v)));
            continue;
        };
        let (upper, lower) = parallel_restrictions(f, v);
        let c1 = certify_at(&upper, config, depth + 1);
        let c2 = certify_at(&lower, config, depth + 1);
        if c1.outcome.is_certified() && c2.outcome.is_certified() {
            return leaf(
                f,
                Outcome::CertifiedExactlyOne,
                Node::ParallelSplit {
                    normal: v.clone(),
                    beta1,
                    beta2,
                    edge,
                    children: vec![c1, c2],
                },
            );
        }
        tried.push(format!("{}: a face restriction is inconclusive", fmt_vec(v)));
    }
    let reason = if normals.is_empty() {
        "no criterion applies, no proper face contains the negative exponents, no parallel facet pair covers the support"
            .to_string()
    } else {
        format!("no criterion applies, no proper negative face; parallel pairs tried: {}", tried.join("; "))
    };
    inconclusive(f, config, reason, true)
}

/// (f_{|N(f)_v}, f_{|N(f)_{−v}}).
pub fn parallel_restrictions(f: &Signomial, v: &[Rational]) -> (Signomial, Signomial) {
    let support = f.support();
    let neg_v: Vec<Rational> = v.iter().map(|x| -x).collect();
    let top: BTreeSet<ExponentVector> = polytope::face_in_direction(&support, v)
        .into_iter()
        .map(|i| support[i].clone())
        .collect();
    let bottom: BTreeSet<ExponentVector> = polytope::face_in_direction(&support, &neg_v)
        .into_iter()
        .map(|i| support[i].clone())
        .collect();
    (f.restrict(&top), f.restrict(&bottom))
}

/// The first pair β₁ ∈ σ₋ ∩ N(f)_v, β₂ ∈ σ₋ ∩ N(f)_{−v} spanning an edge
/// of N(f), with the exposing functional.
pub fn intersection_nonempty(f: &Signomial, v: &[Rational]) -> Option<(ExponentVector, ExponentVector, EdgeWitness)> {
    let p = Polytope::new(f.support()).ok()?;
    intersection_nonempty_in(&p, f, v)
}

fn intersection_nonempty_in(
    p: &Polytope,
    f: &Signomial,
    v: &[Rational],
) -> Option<(ExponentVector, ExponentVector, EdgeWitness)> {
    let neg_v: Vec<Rational> = v.iter().map(|x| -x).collect();
    let negs = f.negatives();
    let pick = |dir: &[Rational]| -> Vec<usize> {
        p.face_in_direction(dir)
            .into_iter()
            .filter(|&i| negs.contains(p.point(i)))
            .collect()
    };
    let top = pick(v);
    let bottom = pick(&neg_v);
    for &i in &top {
        for &j in &bottom {
            if let Some(w) = p.edge_witness(i, j) {
                return Some((p.point(i).clone(), p.point(j).clone(), w));
            }
        }
    }
    None
}

/// (f_{|A}, f_{|B}) with A = (H⁺_{v,a} ∩ σ₋) ∪ σ₊ and B = (H⁻_{v,b} ∩ σ₋) ∪ σ₊.
pub fn side_restrictions(f: &Signomial, v: &[Rational], a: &Rational, b: &Rational) -> Result<(Signomial, Signomial)> {
    if !criteria::verify_enclosing_pair(f, v, a, b, false) {
        return Err(Error::NotEnclosing);
    }
    let negs: BTreeSet<ExponentVector> = f.negatives().into_iter().collect();
    let fa = f.restrict_by(|mu| !negs.contains(mu) || &mu.dot(v) >= a);
    let fb = f.restrict_by(|mu| !negs.contains(mu) || &mu.dot(v) <= b);
    Ok((fa, fb))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundMethod {
    /// Graph on the negative components of f_{|A} and f_{|B}.
    GraphAB,
    /// Graph on the negative components of the two parallel face restrictions.
    GraphParallel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum IntersectionEdge {
    /// An edge of N(f) with negative endpoints on the two faces.
    NegativeEdge {
        beta1: ExponentVector,
        beta2: ExponentVector,
        edge: EdgeWitness,
    },
    /// Negative exponents of the two restrictions whose segment misses the
    /// hull of their positive exponents.
    Segment {
        beta1: ExponentVector,
        beta2: ExponentVector,
        separation: SegmentSeparation,
    },
    /// A sampled point (log coordinates) where both restrictions are negative.
    Sampled { point: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// `None` when a side could not be certified.
    pub bound: Option<usize>,
    pub method: BoundMethod,
    pub edges: Vec<IntersectionEdge>,
    pub children: Vec<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Graph bound for parallel faces N(f)_v, N(f)_{−v} covering σ(f).
/// Intersections are witnessed exactly when possible and otherwise by
/// sampling on `grid` (if given).
pub fn upper_bound_parallel(
    f: &Signomial,
    v: &[Rational],
    config: &CertifyConfig,
    grid: Option<&GridSpec>,
) -> Result<BoundReport> {
    let support = f.support();
    let values: BTreeSet<Rational> = support.iter().map(|m| m.dot(v)).collect();
    if values.len() > 2 {
        return Err(Error::Unsupported(
            "the support is not covered by the two parallel faces".into(),
        ));
    }
    let (upper, lower) = parallel_restrictions(f, v);
    let exact = intersection_nonempty(f, v).map(|(beta1, beta2, edge)| IntersectionEdge::NegativeEdge {
        beta1,
        beta2,
        edge,
    });
    graph_bound(BoundMethod::GraphParallel, &upper, &lower, exact, config, grid)
}

/// Graph bound for an enclosing pair (H_{v,a}, H_{v,b}) of σ₊.
pub fn upper_bound_enclosing(
    f: &Signomial,
    v: &[Rational],
    a: &Rational,
    b: &Rational,
    config: &CertifyConfig,
    grid: Option<&GridSpec>,
) -> Result<BoundReport> {
    let (fa, fb) = side_restrictions(f, v, a, b)?;
    graph_bound(BoundMethod::GraphAB, &fa, &fb, None, config, grid)
}

fn graph_bound(
    method: BoundMethod,
    left: &Signomial,
    right: &Signomial,
    exact: Option<IntersectionEdge>,
    config: &CertifyConfig,
    grid: Option<&GridSpec>,
) -> Result<BoundReport> {
    let c1 = certify_connectivity(left, config);
    let c2 = certify_connectivity(right, config);
    let (Some(n1), Some(n2)) = (c1.outcome.max_components(), c2.outcome.max_components()) else {
        return Ok(BoundReport {
            bound: None,
            method,
            edges: Vec::new(),
            children: vec![c1, c2],
            reason: Some("a restriction could not be certified to have at most one negative component".into()),
        });
    };
    let mut edges = Vec::new();
    if n1 == 1 && n2 == 1 {
        if let Some(e) = exact.or_else(|| segment_edge(left, right)) {
            edges.push(e);
        } else if let Some(g) = grid {
            if let Some(point) = oracle::intersection_witness(left, right, g)? {
                edges.push(IntersectionEdge::Sampled { point });
            }
        }
    }
    let bound = n1 + n2 - usize::from(!edges.is_empty());
    Ok(BoundReport {
        bound: Some(bound),
        method,
        edges,
        children: vec![c1, c2],
        reason: None,
    })
}

/// A pair β₁ ∈ σ₋(f), β₂ ∈ σ₋(g) with Conv(β₁, β₂) disjoint from
/// Conv(σ₊(f) ∪ σ₊(g)); then f and g are negative at a common point.
fn segment_edge(f: &Signomial, g: &Signomial) -> Option<IntersectionEdge> {
    let mut pos: Vec<ExponentVector> = f.positives();
    pos.extend(g.positives());
    pos.sort();
    pos.dedup();
    for b1 in f.negatives() {
        for b2 in g.negatives() {
            let sep = if pos.is_empty() {
                // nothing to separate from; any functional works
                Some(SegmentSeparation {
                    w: vec![rational::int(0); f.dimension()],
                    c: rational::int(-1),
                })
            } else {
                lp::separate_segment_from_hull(&b1, &b2, &pos)
            };
            if let Some(separation) = sep {
                return Some(IntersectionEdge::Segment {
                    beta1: b1,
                    beta2: b2,
                    separation,
                });
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub certificate: Certificate,
    pub closure: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<criteria::ClosureReason>,
}

/// The certificate together with the closure-property verdict.
pub fn certify_and_check_closure(f: &Signomial, config: &CertifyConfig) -> ClosureReport {
    let certificate = certify_connectivity(f, config);
    let reason = if f.is_empty() {
        None
    } else {
        match Polytope::with_budget(f.support(), config.facet_budget) {
            Ok(p) => criteria::closure_property_with(f, &p),
            Err(_) => None,
        }
    };
    ClosureReport {
        certificate,
        closure: reason.is_some(),
        reason,
    }
}

/// Re-checks every witness in `cert` against `f` from scratch, without
/// running any search. Returns a description of the first failure.
pub fn verify_certificate(f: &Signomial, cert: &Certificate) -> std::result::Result<(), String> {
    if cert.polynomial != f.to_string() {
        return Err(format!(
            "node polynomial {:?} does not match {:?}",
            cert.polynomial,
            f.to_string()
        ));
    }
    let fail = |msg: &str| Err(format!("{} node for {}: {msg}", cert.kind(), cert.polynomial));
    match &cert.node {
        Node::Empty => {
            if f.count_negative() != 0 {
                return fail("signomial has negative terms");
            }
            if cert.outcome != Outcome::CertifiedEmpty {
                return fail("outcome must be CertifiedEmpty");
            }
        }
        Node::Criterion {
            certificate,
            negative_vertex,
        } => {
            if !certificate.verify(f) {
                return fail("criterion witness does not verify");
            }
            if let Some(nv) = negative_vertex {
                if !nv.verify(f) {
                    return fail("negative vertex witness does not verify");
                }
            }
            let expected = if certificate.nonempty || negative_vertex.is_some() {
                Outcome::CertifiedExactlyOne
            } else {
                Outcome::CertifiedAtMostOne
            };
            if cert.outcome != expected {
                return fail("outcome inconsistent with the criterion");
            }
        }
        Node::NegativeFaceReduction { normal, face, child } => {
            let support = f.support();
            if normal.len() != f.dimension() {
                return fail("normal has the wrong length");
            }
            let exposed: Vec<ExponentVector> = polytope::face_in_direction(&support, normal)
                .into_iter()
                .map(|i| support[i].clone())
                .collect();
            if exposed != *face {
                return fail("recorded face differs from the face exposed by the normal");
            }
            if face.len() >= support.len() {
                return fail("face is not proper");
            }
            if !f.negatives().iter().all(|b| face.contains(b)) {
                return fail("face misses a negative exponent");
            }
            let set: BTreeSet<ExponentVector> = face.iter().cloned().collect();
            verify_certificate(&f.restrict(&set), child)?;
            if cert.outcome != child.outcome {
                return fail("outcome differs from the face restriction's outcome");
            }
        }
        Node::ParallelSplit {
            normal,
            beta1,
            beta2,
            edge,
            children,
        } => {
            let support = f.support();
            if normal.len() != f.dimension() || rational::is_zero_vec(normal) {
                return fail("bad normal");
            }
            let values: BTreeSet<Rational> = support.iter().map(|m| m.dot(normal)).collect();
            if values.len() != 2 {
                return fail("support is not covered by two parallel faces");
            }
            let top = values.iter().next_back().expect("two values");
            let bottom = values.iter().next().expect("two values");
            let negs = f.negatives();
            if !negs.contains(beta1) || &beta1.dot(normal) != top {
                return fail("beta1 is not a negative exponent on the upper face");
            }
            if !negs.contains(beta2) || &beta2.dot(normal) != bottom {
                return fail("beta2 is not a negative exponent on the lower face");
            }
            if !edge.verify(&support, beta1, beta2) {
                return fail("edge witness does not verify");
            }
            let (upper, lower) = parallel_restrictions(f, normal);
            if children.len() != 2 {
                return fail("expected two children");
            }
            verify_certificate(&upper, &children[0])?;
            verify_certificate(&lower, &children[1])?;
            if !children.iter().all(|c| c.outcome.is_certified()) {
                return fail("a face restriction is not certified");
            }
            if cert.outcome != Outcome::CertifiedExactlyOne {
                return fail("outcome must be CertifiedExactlyOne");
            }
        }
        Node::Inconclusive { enclosing, .. } => {
            if cert.outcome != Outcome::Inconclusive {
                return fail("outcome must be Inconclusive");
            }
            if let Some(w) = enclosing {
                if !(w.strict && w.verify(f)) {
                    return fail("enclosing pair does not verify");
                }
            }
        }
    }
    Ok(())
}
