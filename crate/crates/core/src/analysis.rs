//! Structural statistics of a signomial and its Newton polytope.

use serde::{Deserialize, Serialize};

use crate::criteria::{self, ClosureReason, SeparatingWitness};
use crate::polytope::Polytope;
use crate::rational::{self, Rational};
use crate::signomial::{ExponentVector, Signomial};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeFace {
    /// Exponents of the smallest face of N(f) containing σ₋.
    pub support: Vec<ExponentVector>,
    pub proper: bool,
    #[serde(with = "rational::serde_vec")]
    pub normal: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub variables: usize,
    pub terms: usize,
    pub positive_terms: usize,
    pub negative_terms: usize,
    pub newton_dimension: Option<usize>,
    pub vertex_count: Option<usize>,
    pub facet_count: Option<usize>,
    pub smallest_negative_face: Option<NegativeFace>,
    pub separating_hyperplane: Option<SeparatingWitness>,
    pub closure_property: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure_reason: Option<ClosureReason>,
    /// Facet normals v with σ(f) ⊆ N(f)_v ∪ N(f)_{−v}.
    #[serde(with = "vec_of_vecs")]
    pub parallel_face_normals: Vec<Vec<Rational>>,
    /// Set when the hull could not be built within the facet budget.
    pub partial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partial_reason: Option<String>,
}

mod vec_of_vecs {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::rational::Rational;

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<Vec<String>> = v.iter().map(|row| row.iter().map(|q| q.to_string()).collect()).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let strings = Vec::<Vec<String>>::deserialize(d)?;
        strings
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|s| crate::rational::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}"))))
                    .collect()
            })
            .collect()
    }
}

pub fn analyze(f: &Signomial, facet_budget: usize) -> AnalysisReport {
    let mut report = AnalysisReport {
        variables: f.dimension(),
        terms: f.len(),
        positive_terms: f.count_positive(),
        negative_terms: f.count_negative(),
        newton_dimension: criteria::newton_dimension(f),
        vertex_count: None,
        facet_count: None,
        smallest_negative_face: None,
        separating_hyperplane: criteria::find_strict_separating_hyperplane(f),
        closure_property: None,
        closure_reason: None,
        parallel_face_normals: Vec::new(),
        partial: false,
        partial_reason: None,
    };
    if f.is_empty() {
        return report;
    }
    let p = match Polytope::with_budget(f.support(), facet_budget) {
        Ok(p) => p,
        Err(e) => {
            report.partial = true;
            report.partial_reason = Some(e.to_string());
            return report;
        }
    };
    report.vertex_count = Some(p.vertices().len());
    report.facet_count = Some(p.facets().len());
    if f.count_negative() > 0 {
        let idx: Vec<usize> = f.negatives().iter().map(|b| p.index_of(b).expect("negative exponent in support")).collect();
        let face = p.smallest_face_containing(&idx);
        report.smallest_negative_face = Some(NegativeFace {
            support: face.points.iter().map(|&i| p.point(i).clone()).collect(),
            proper: face.proper,
            normal: face.normal,
        });
    }
    let reason = criteria::closure_property_with(f, &p);
    report.closure_property = Some(reason.is_some());
    report.closure_reason = reason;
    let all: Vec<usize> = (0..p.points().len()).collect();
    report.parallel_face_normals = p.parallel_face_pairs(&all);
    report
}
