#![no_main]

use libfuzzer_sys::fuzz_target;
use std::sync::OnceLock;
use tworay::graded_toric::{Bidegree, GradingMatrix};
use tworay::scenario::parse_monomial;

fn grading() -> &'static GradingMatrix {
    static G: OnceLock<GradingMatrix> = OnceLock::new();
    G.get_or_init(|| {
        GradingMatrix::new(
            ["u", "v", "x", "t", "y", "z"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(1, 0),
                Bidegree::new(0, 1),
                Bidegree::new(-2, 2),
                Bidegree::new(-2, 1),
                Bidegree::new(-4, 1),
            ],
        )
        .expect("fixed grading is valid")
    })
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let g = grading();
    if let Ok(m) = parse_monomial(text, g) {
        // formatting a parsed monomial must reparse to the same exponents
        let formatted = m.format(g.vars());
        assert_eq!(
            parse_monomial(&formatted, g).expect("canonical monomial reparses"),
            m
        );
    }
});
