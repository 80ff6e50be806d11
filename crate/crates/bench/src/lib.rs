//! Fixed inputs shared by the benchmarks.

use skewpbw::dsl::{parse_element, preset};
use skewpbw::{Algebra, Element};

pub fn algebra(name: &str) -> Algebra {
    preset(name).expect("known preset")
}

pub fn element(alg: &Algebra, src: &str) -> Element {
    parse_element(alg, src).expect("valid expression")
}

/// One pair of moderately sized factors per preset.
pub fn product_inputs() -> Vec<(&'static str, Element, Element)> {
    [
        ("weyl", "(x^2*y + 3*x - y^2)^2", "x^3 - y*x + 1/2"),
        ("weyl-rational", "x^2 - 2*y^-2", "x^3 - 3*y^-2*x + 3*y^-3"),
        ("q-weyl", "(x*y + y^2*x^2)^2", "x^3 + y"),
        ("quantum-plane", "(x1 + x2)^4", "x1*x2^2 - 3"),
        ("higher-endo", "x^2*y + x", "x*y - 1"),
        ("heisenberg", "(x1 + x2 + x3)^3", "x2*x1 - x3^2"),
    ]
    .into_iter()
    .map(|(name, f, g)| {
        let alg = algebra(name);
        let (f, g) = (element(&alg, f), element(&alg, g));
        (name, f, g)
    })
    .collect()
}
