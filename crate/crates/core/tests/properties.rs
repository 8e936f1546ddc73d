use std::collections::BTreeSet;

use proptest::prelude::*;

use desc_regions::certify::{self, CertifyConfig};
use desc_regions::criteria;
use desc_regions::lp::{self, LinearSystem};
use desc_regions::polytope::Polytope;
use desc_regions::rational::{int, ratio, Rational};
use desc_regions::text::parse_signomial_with_dim;
use desc_regions::trace::TraceDocument;
use desc_regions::{ExponentVector, Signomial, Term};

fn coefficient() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=4)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| ratio(p, q))
}

fn signomial(max_dim: usize, max_terms: usize) -> impl Strategy<Value = Signomial> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec((coefficient(), prop::collection::vec(0i64..=5, n)), 1..=max_terms).prop_map(
            move |terms| {
                Signomial::new(
                    n,
                    terms.into_iter().map(|(c, e)| Term {
                        coefficient: c,
                        exponent: ExponentVector::from_ints(&e),
                    }),
                )
                .unwrap()
            },
        )
    })
}

fn log_point(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0f64..2.0, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_roundtrip(f in signomial(4, 8)) {
        let back = parse_signomial_with_dim(&f.to_string(), Some(f.dimension()));
        if f.is_empty() {
            prop_assert!(back.map_or(true, |g| g.is_empty()));
        } else {
            prop_assert_eq!(back.unwrap(), f);
        }
    }

    #[test]
    fn restrict_is_idempotent(f in signomial(3, 8), mask in prop::collection::vec(any::<bool>(), 8)) {
        let keep: BTreeSet<ExponentVector> =
            f.support().into_iter().zip(&mask).filter(|(_, m)| **m).map(|(e, _)| e).collect();
        let once = f.restrict(&keep);
        prop_assert_eq!(once.restrict(&keep), once.clone());
        prop_assert!(once.support().iter().all(|e| keep.contains(e)));
    }

    #[test]
    fn dropping_negative_terms_never_lowers_the_value(
        (f, y) in signomial(3, 8).prop_flat_map(|f| { let n = f.dimension(); (Just(f), log_point(n)) })
    ) {
        let pos = f.restrict_by(|e| f.sign_of(e) == Some(desc_regions::Sign::Pos));
        let a = f.evaluate_log(&y).unwrap();
        let b = pos.evaluate_log(&y).unwrap();
        prop_assert!(b >= a - 1e-9 * (1.0 + a.abs()));
    }

    #[test]
    fn opposite_directions_reverse_sign_sequences(
        (f, v, x) in signomial(3, 8).prop_flat_map(|f| {
            let n = f.dimension();
            (Just(f), prop::collection::vec(-3i64..=3, n), prop::collection::vec(0.2f64..3.0, n))
        })
    ) {
        let v: Vec<Rational> = v.into_iter().map(int).collect();
        let minus: Vec<Rational> = v.iter().map(|q| -q).collect();
        let s = f.induced_sequence(&v, &x).unwrap();
        let r = f.induced_sequence(&minus, &x).unwrap();
        let mut rev = r.signs();
        rev.reverse();
        prop_assert_eq!(s.signs(), rev);
        prop_assert_eq!(s.sign_variations(), r.sign_variations());
    }

    #[test]
    fn lp_verdict_survives_positive_row_scaling(
        rows in prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -3i64..=3, 1i64..=5, any::<bool>()), 1..=6)
    ) {
        let mut a = LinearSystem::new(3);
        let mut b = LinearSystem::new(3);
        for (coeffs, rhs, scale, eq) in rows {
            let c: Vec<Rational> = coeffs.iter().map(|&x| int(x)).collect();
            let s: Vec<Rational> = coeffs.iter().map(|&x| int(x * scale)).collect();
            if eq {
                a.equality(c, int(rhs));
                b.equality(s, int(rhs * scale));
            } else {
                a.ge(c, int(rhs));
                b.ge(s, int(rhs * scale));
            }
        }
        let fa = lp::feasible(&a);
        prop_assert_eq!(fa.is_feasible(), lp::feasible(&b).is_feasible());
        if let Some(w) = fa.witness() {
            prop_assert!(a.is_satisfied_by(&w));
        }
    }

    #[test]
    fn edges_join_vertices(pts in prop::collection::btree_set(prop::collection::vec(0i64..=3, 3), 1..=8)) {
        let pts: Vec<ExponentVector> = pts.iter().map(|p| ExponentVector::from_ints(p)).collect();
        let p = Polytope::new(pts.clone()).unwrap();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                if let Some(w) = p.edge_witness(i, j) {
                    prop_assert!(p.vertices().contains(&i) && p.vertices().contains(&j));
                    prop_assert!(w.verify(&pts, &pts[i], &pts[j]));
                }
            }
        }
        for f in p.facets() {
            prop_assert!(pts.iter().all(|q| f.halfspace.contains(q.coords())));
        }
    }

    #[test]
    fn separating_witnesses_verify(f in signomial(3, 8)) {
        if let Some(w) = criteria::find_strict_separating_hyperplane(&f) {
            prop_assert!(w.verify(&f));
            prop_assert!(criteria::verify_separating_hyperplane(&f, &w.normal, &w.offset, true));
        }
    }

    #[test]
    fn certificates_reverify(f in signomial(3, 7)) {
        let config = CertifyConfig { enable_box: true, enable_enclosing_search: true, ..CertifyConfig::default() };
        let cert = certify::certify_connectivity(&f, &config);
        prop_assert_eq!(certify::verify_certificate(&f, &cert), Ok(()));
        let doc = TraceDocument::new(&f, &config, cert);
        let back = TraceDocument::from_json(&doc.to_json()).unwrap();
        prop_assert!(back.verify().is_ok());
        prop_assert_eq!(back, doc);
    }
}
