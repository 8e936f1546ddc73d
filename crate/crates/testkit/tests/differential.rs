use proptest::prelude::*;

use desc_regions::lp::{self, LinearSystem};
use desc_regions::polytope::Polytope;
use desc_regions::rational::{int, Rational};
use desc_regions::ExponentVector;
use desc_regions_testkit::{brute_force_vertices, exhaustive_facets, fm_feasible, primitive, RefFacet};

fn system() -> impl Strategy<Value = LinearSystem> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec((prop::collection::vec(-4i64..=4, n), -4i64..=4, prop::bool::weighted(0.25)), 1..=8)
            .prop_map(move |rows| {
                let mut s = LinearSystem::new(n);
                for (c, r, eq) in rows {
                    let c: Vec<Rational> = c.into_iter().map(int).collect();
                    if eq {
                        s.equality(c, int(r));
                    } else {
                        s.ge(c, int(r));
                    }
                }
                s
            })
    })
}

fn point_set() -> impl Strategy<Value = Vec<ExponentVector>> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::btree_set(prop::collection::vec(0i64..=3, n), 1..=8)
            .prop_map(|s| s.iter().map(|p| ExponentVector::from_ints(p)).collect())
    })
}

fn normalised(p: &Polytope) -> Vec<RefFacet> {
    let mut out: Vec<RefFacet> = p
        .facets()
        .iter()
        .map(|f| {
            let normal = primitive(&f.halfspace.normal);
            let offset = p.point(f.incident[0]).dot(&normal);
            RefFacet { normal, offset, incident: f.incident.clone() }
        })
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn simplex_agrees_with_fourier_motzkin(s in system()) {
        let verdict = lp::feasible(&s);
        prop_assert_eq!(verdict.is_feasible(), fm_feasible(&s));
        if let Some(w) = verdict.witness() {
            prop_assert!(s.is_satisfied_by(&w));
        }
    }

    #[test]
    fn hull_agrees_with_enumeration(pts in point_set()) {
        let p = Polytope::new(pts.clone()).unwrap();
        prop_assert_eq!(normalised(&p), exhaustive_facets(&pts));
        prop_assert_eq!(p.vertices().to_vec(), brute_force_vertices(&pts));
    }
}
