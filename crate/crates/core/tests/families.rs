mod common;

use common::{braids, pretzels, t_poly};
use jones_twist::families::{
    band_bracket, pretzel_bracket, pretzel_equal_odd_closed_form, pretzel_jones,
    pretzel_plat_bracket, torus_jones, twist_knot_jones, PretzelParams,
};
use jones_twist::mahler::{
    mahler_boyd_lawton, mahler_measure, mahler_quadrature, BoydLawtonConfig, QuadratureConfig,
};
use jones_twist::skein::{a_to_t, t_coefficients, t_to_a};
use jones_twist::twist::{limit_mahler, recover_limit_polynomial, TwistFamily, TwistRegion};
use jones_twist::{jones, BivariatePolynomial, BraidWord, LaurentPolynomial, Var};

fn torus_braid(m: usize, n: usize) -> BraidWord {
    let row: Vec<i32> = (1..n as i32).collect();
    BraidWord::new(n, row.repeat(m)).unwrap()
}

fn biv(terms: &[((i64, i64), i64)]) -> BivariatePolynomial {
    BivariatePolynomial::from_terms((Var::T, Var::X), terms.iter().copied())
}

fn corpus_jones(name: &str) -> LaurentPolynomial {
    let b = braids().into_iter().find(|b| b.name == name).unwrap();
    jones(&b.braid()).unwrap()
}

#[test]
fn torus_closed_form_matches_skein() {
    for n in 2..=4usize {
        for m in 2..=9usize {
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            assert_eq!(
                torus_jones(m as i64, n as i64).unwrap(),
                jones(&torus_braid(m, n)).unwrap(),
                "T({m},{n})"
            );
        }
    }
}

#[test]
fn torus_corpus_entries() {
    assert_eq!(corpus_jones("trefoil"), torus_jones(3, 2).unwrap());
    assert_eq!(corpus_jones("cinquefoil"), torus_jones(5, 2).unwrap());
    assert_eq!(corpus_jones("torus_4_3"), torus_jones(4, 3).unwrap());
    assert_eq!(corpus_jones("torus_5_3"), torus_jones(5, 3).unwrap());
}

#[test]
fn twist_knots_match_braid_closures() {
    for (n, name) in [(1, "trefoil"), (2, "figure_eight"), (3, "five_two")] {
        let v = a_to_t(&corpus_jones(name)).unwrap();
        assert!(twist_knot_jones(n).unwrap().equivalent(&v, true), "{name}");
    }
}

#[test]
fn twist_knots_match_clasp_band_formula() {
    // a clasp closed up by a band of n half twists
    let b_id = LaurentPolynomial::monomial(Var::A, 6, 1);
    let b_e = LaurentPolynomial::from_terms(Var::A, [(4, -1), (-4, -1)]);
    for n in 1..=6i64 {
        let closed = t_to_a(&twist_knot_jones(n).unwrap()).unwrap();
        let from_band = band_bracket(&b_id, &b_e, n);
        assert!(closed.equivalent(&from_band, true), "n = {n}");
    }
}

#[test]
fn pretzel_fixture_vectors() {
    for row in pretzels() {
        let params = PretzelParams::new(row.params.clone()).unwrap();
        let v = a_to_t(&pretzel_jones(&params)).unwrap();
        let expected = t_poly(row.low_degree, &row.coeffs);
        assert!(v.equivalent(&expected, true), "{:?}", row.params);
        // exact, not just up to units
        assert_eq!(v, expected, "{:?}", row.params);
    }
}

#[test]
fn pretzel_triple_agreement() {
    for n in 2..=6u32 {
        let params = PretzelParams::equal_odd(1, n as usize).unwrap();
        assert_eq!(
            pretzel_bracket(&params),
            pretzel_plat_bracket(&params).unwrap()
        );
        let closed = pretzel_equal_odd_closed_form(1, n).unwrap();
        let v = t_coefficients(&pretzel_jones(&params)).unwrap();
        assert!(
            closed.equivalent(&LaurentPolynomial::from_coeffs(Var::T, 0, v), true),
            "n = {n}"
        );
    }
}

#[test]
fn pretzel_mahler_grows() {
    let logs: Vec<f64> = (3..=15)
        .map(|n| {
            let params = PretzelParams::equal_odd(1, n).unwrap();
            mahler_measure(&pretzel_jones(&params)).unwrap().ln()
        })
        .collect();
    for w in logs.windows(2) {
        assert!(w[1] - w[0] > 0.0);
    }
}

#[test]
fn boyd_lawton_schedule_settles() {
    let f = biv(&[((0, 0), 1), ((1, 1), -1), ((4, 0), -1), ((3, 1), 1)]);
    let config = BoydLawtonConfig {
        schedule: vec![16, 32, 64, 128, 256],
        tolerance: 1e-3,
    };
    let bl = mahler_boyd_lawton(&f, &config).unwrap();
    assert!(bl.converged);
    assert!(bl.diagnostics.history.last().unwrap().0 <= 256);
    let q = mahler_quadrature(&f, &QuadratureConfig::default()).unwrap();
    assert!(
        (bl.value - q.value).abs() < 1e-2,
        "{} vs {}",
        bl.value,
        q.value
    );
}

#[test]
fn torus_sequence_approaches_limit() {
    // the three-strand limit is this polynomial after x -> x t^{-1}
    let f = biv(&[((0, 0), 1), ((1, 1), -1), ((4, 0), -1), ((3, 1), 1)]);
    let limit = mahler_boyd_lawton(
        &f,
        &BoydLawtonConfig {
            schedule: vec![64, 128, 256, 512],
            tolerance: 1e-5,
        },
    )
    .unwrap()
    .value;
    let m = mahler_measure(&torus_jones(301, 3).unwrap()).unwrap();
    assert!((m - limit).abs() < 1e-3, "{m} vs {limit}");

    // the same limit recovered from twisting σ₁σ₂ on all three strands
    let family = TwistFamily::at_end(torus_braid(1, 3), TwistRegion::new(1, 3)).unwrap();
    assert_eq!(
        jones(&family.word(100)).unwrap(),
        torus_jones(301, 3).unwrap()
    );
    let recovered = recover_limit_polynomial(&family).unwrap();
    let config = BoydLawtonConfig {
        schedule: vec![64, 128, 256, 512],
        tolerance: 1e-5,
    };
    let from_family = limit_mahler(&recovered, &config).unwrap().value;
    assert!(
        (from_family - limit).abs() < 1e-4,
        "{from_family} vs {limit}"
    );
}

#[test]
fn twist_knot_sequence_approaches_limit() {
    let f = biv(&[((0, 0), 1), ((3, 0), -1), ((1, 1), 1), ((3, 1), 1)]);
    let config = QuadratureConfig {
        initial_grid: 256,
        max_grid: 4096,
        tolerance: 1e-6,
    };
    let limit = mahler_quadrature(&f, &config).unwrap().value;
    let m = mahler_measure(&twist_knot_jones(160).unwrap()).unwrap();
    assert!((m - limit).abs() < 1e-3, "{m} vs {limit}");
}
