//! Worked examples used throughout the tests, the CLI and the web demo.

use std::collections::BTreeSet;

use crate::signomial::{ExponentVector, Signomial};
use crate::text::parse_signomial;

macro_rules! fixture {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(
            pub fn $name() -> Signomial {
                parse_signomial(include_str!(concat!("../fixtures/", $file)))
                    .expect(concat!("fixture ", $file))
            }
        )*

        /// `(file name, source text)` for every bundled fixture.
        pub const ALL: &[(&str, &str)] = &[
            $(($file, include_str!(concat!("../fixtures/", $file))),)*
        ];
    };
}

fixture! {
    eq2 => "eq2.poly",
    eq3 => "eq3.poly",
    eq4 => "eq4.poly",
    proof24 => "proof24.poly",
    new_ex2 => "new_ex2.poly",
    ex_box => "ex_box.poly",
    ex_simplex_f => "ex_simplex_f.poly",
    ex_simplex_g => "ex_simplex_g.poly",
    new_para_faces => "new_para_faces.poly",
    ex_running => "ex_running.poly",
    ex_cube => "ex_cube.poly",
    ex_cube4d => "ex_cube4d.poly",
    neg_quadratic => "neg_quadratic.poly",
    two_comp_quadratic => "two_comp_quadratic.poly",
    square => "square.poly",
}

pub fn set<const N: usize>(points: &[[i64; N]]) -> BTreeSet<ExponentVector> {
    points.iter().map(|p| ExponentVector::from_ints(p)).collect()
}
