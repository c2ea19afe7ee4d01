mod common;

use common::braids;
use jones_twist::colored::{belt_trick_check, cable_braid, colored_jones, colored_twist_series};
use jones_twist::mahler::mahler_measure;
use jones_twist::skein::{a_to_t, t_coefficients};
use jones_twist::twist::{detect_blocks, Parity, SeparatorKind, TwistFamily, TwistRegion};
use jones_twist::{jones, parse_braid, Error, LaurentPolynomial, Var};
use num_bigint::BigInt;

fn trefoil_family() -> TwistFamily {
    TwistFamily::at_end(
        parse_braid("strands=2 1 1 1").unwrap(),
        TwistRegion::new(1, 2),
    )
    .unwrap()
}

#[test]
fn j2_is_unnormalized_jones_on_corpus() {
    let q2 = LaurentPolynomial::from_terms(Var::A, [(-2, 1), (2, 1)]);
    for b in braids() {
        let word = b.braid();
        if b.components == 1 {
            let expected = &q2 * &jones(&word).unwrap();
            assert_eq!(colored_jones(&word, 2).unwrap(), expected, "{}", b.name);
        } else {
            assert_eq!(
                colored_jones(&word, 2).unwrap_err(),
                Error::NotAKnot(b.components),
                "{}",
                b.name
            );
        }
    }
}

#[test]
fn cables_have_r_components() {
    for b in braids().into_iter().filter(|b| b.components == 1) {
        for r in 1..=3 {
            let word = b.braid();
            if word.strands() * r > 12 {
                continue;
            }
            let c = cable_braid(&word, r).unwrap();
            assert_eq!(c.word.components(), r, "{} r = {r}", b.name);
            assert_eq!(c.framing_correction, -word.writhe());
        }
    }
}

#[test]
fn belt_trick_on_trefoil() {
    let family = trefoil_family();
    for m in [1, 2] {
        assert!(belt_trick_check(&family, 2, m).unwrap(), "m = {m}");
    }
}

#[test]
fn j3_mahler_settles_along_twists() {
    let ms: Vec<u32> = (10..=30).collect();
    let series = colored_twist_series(&trefoil_family(), 3, &ms).unwrap();
    let values: Vec<f64> = series
        .iter()
        .map(|j| mahler_measure(&a_to_t(j).unwrap()).unwrap())
        .collect();
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    assert!(hi - lo < 1e-2, "{values:?}");
}

#[test]
fn j3_blocks_stabilize() {
    let series = colored_twist_series(&trefoil_family(), 3, &[19, 20]).unwrap();
    let decomps: Vec<_> = series
        .iter()
        .map(|j| detect_blocks(&t_coefficients(j).unwrap(), Parity::Odd, 4))
        .collect();
    assert!(decomps[0].same_blocks(&decomps[1]));
    for d in &decomps {
        assert!(d.separators.iter().all(|s| s.kind == SeparatorKind::Zeros));
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let expected = [big(&[-1, -1, -1, -1, -1]), big(&[1, 1, 1]), big(&[-1])];
        assert_eq!(
            d.contents(),
            expected.iter().map(|b| b.as_slice()).collect::<Vec<_>>()
        );
    }
}
