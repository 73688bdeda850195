use rogers_eqn_core::chords::{enumerate_chords, Chord};
use rogers_eqn_core::reduction::{
    alternating_constant_sum, alternating_sum, binomial, build_certificate_even,
    build_certificate_odd, build_certificate_six, certificate, flatten,
    inclusion_exclusion_columns, verify_certificate, verify_eqn, InstanceKind, NumericOptions,
    ProductSymbol, Rational,
};

fn signed_binomial_sum(top: u64, shift: i64, range: std::ops::RangeInclusive<i64>) -> i64 {
    range
        .map(|l| {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let k = l - shift;
            if k < 0 {
                0
            } else {
                sign * binomial(top, k as u64) as i64
            }
        })
        .sum()
}

#[test]
fn even_columns_match_binomial_counts() {
    for k in 4..=7u64 {
        let n = 2 * k as usize;
        let columns = inclusion_exclusion_columns(n).unwrap();
        let mut shapes = [0usize; 3];
        for (symbol, counts) in &columns {
            let shift = match symbol.chords().len() {
                4 => 2,
                2 => 1,
                1 => 0,
                other => panic!("unexpected symbol of size {other}: {symbol}"),
            };
            shapes[shift] += 1;
            for (l, &c) in counts.iter().enumerate() {
                let expected = if l < shift {
                    0
                } else {
                    binomial(k - 2, (l - shift) as u64)
                };
                assert_eq!(c, expected, "n={n} {symbol} l={l}");
            }
            assert_eq!(alternating_sum(counts), 0, "n={n} {symbol}");
        }
        assert_eq!(shapes[0], n * (n - 3) / 2);
        // pairs of non-adjacent double blocks
        assert_eq!(shapes[2] as u64, k * (k - 3) / 2);
    }
}

#[test]
fn closed_form_columns() {
    for k in 4..=7u64 {
        let kk = k as i64;
        assert_eq!(signed_binomial_sum(k - 2, 2, 2..=kk), 0);
        assert_eq!(signed_binomial_sum(k - 2, 1, 1..=kk - 1), 0);
        assert_eq!(signed_binomial_sum(k - 2, 0, 0..=kk - 2), 0);
        // the C(k-1, l-1) and C(k, l) variants do not vanish
        assert_eq!(
            signed_binomial_sum(k - 1, 1, 1..=kk - 1),
            -(-1i64).pow(k as u32)
        );
        assert_eq!(
            signed_binomial_sum(k, 0, 0..=kk - 2),
            (-1i64).pow(k as u32) * (kk - 1)
        );
    }
}

#[test]
fn odd_columns_cancel() {
    for n in [7, 9, 11, 13] {
        for (symbol, counts) in inclusion_exclusion_columns(n).unwrap() {
            assert_eq!(alternating_sum(&counts), 0, "n={n} {symbol}");
        }
    }
}

#[test]
fn constant_columns() {
    assert_eq!(alternating_constant_sum(8, 4), Rational::from(0));
    let terms: Vec<i64> = (0..=4)
        .map(|l: i64| {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            sign * binomial(4, l as u64) as i64 * (5 - l) * (6 - l) / 2
        })
        .collect();
    assert_eq!(terms, vec![15, -40, 36, -12, 1]);
    for k in 3..=10 {
        assert_eq!(alternating_constant_sum(2 * k, k), Rational::from(0));
        assert_eq!(alternating_constant_sum(2 * k + 1, k), Rational::from(0));
    }
    assert_eq!(alternating_constant_sum(7, 3), Rational::from(0));
}

fn elementary(c: Chord) -> ProductSymbol {
    ProductSymbol::new(vec![c])
}

#[test]
fn octagon_certificate_expands_to_the_base() {
    let cert = build_certificate_even(8).unwrap();
    assert_eq!(cert.instances().len(), 15);
    for c in enumerate_chords(8).unwrap() {
        assert_eq!(cert.expansion().coefficient(&elementary(c)), 1);
    }
    assert_eq!(cert.expansion().len(), 20);
    let report = cert.structural_check().unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.constant_total, Rational::from(15));
}

#[test]
fn heptagon_gallery() {
    let cert = build_certificate_odd(7).unwrap();
    let sizes: Vec<(i64, usize)> = cert
        .instances()
        .iter()
        .map(|s| (s.sign, s.instance.target_size()))
        .collect();
    assert_eq!(
        sizes,
        vec![(1, 6), (1, 6), (1, 6), (-1, 5), (-1, 5), (-1, 5), (1, 4)]
    );
    let hexagon = &cert.instances()[2].instance;
    let blocks: Vec<Vec<usize>> = hexagon
        .polygon()
        .blocks()
        .iter()
        .map(|b| b.indices().to_vec())
        .collect();
    assert_eq!(
        blocks,
        vec![vec![1], vec![2], vec![3], vec![4], vec![5, 6], vec![7]]
    );
    assert!(cert.structural_check().unwrap().passed());
}

#[test]
fn certificates_are_structurally_sound() {
    for n in 4..=14 {
        let cert = certificate(n).unwrap();
        let report = cert.structural_check().unwrap();
        assert!(report.passed(), "n={n}: {report:?}");
        for s in cert.instances() {
            let m = s.instance.target_size();
            if n > 5 {
                assert!((4..n).contains(&m));
                assert_ne!(s.instance.kind(), InstanceKind::Base);
            }
        }
    }
}

#[test]
fn six_point_reflections_pair_the_extra_products() {
    let cert = build_certificate_six();
    let reflections: Vec<Vec<String>> = cert
        .instances()
        .iter()
        .filter(|s| s.instance.kind() == InstanceKind::Reflection)
        .map(|s| {
            s.instance
                .terms()
                .iter()
                .map(|t| t.symbol.to_string())
                .collect()
        })
        .collect();
    assert_eq!(
        reflections,
        vec![
            vec!["u{1,4}*u{2,4}", "u{3,5}*u{3,6}"],
            vec!["u{1,5}*u{2,5}", "u{3,6}*u{4,6}"],
            vec!["u{1,3}*u{1,4}", "u{2,5}*u{2,6}"],
        ]
    );
}

#[test]
fn flattened_certificates_verify_numerically() {
    let opts = NumericOptions {
        samples: 10,
        ..Default::default()
    };
    for n in [7, 8, 9, 10] {
        let flat = flatten(&certificate(n).unwrap()).unwrap();
        assert!(flat.max_target_size() <= 5);
        let report = verify_certificate(&flat, &opts).unwrap();
        assert!(report.passed(), "n={n}: {report:?}");
    }
}

#[test]
fn eqn_holds_numerically() {
    let opts = NumericOptions::default();
    for n in 4..=12 {
        let report = verify_eqn(n, &opts).unwrap();
        assert!(report.passed(1e-10), "n={n}: {report:?}");
    }
    assert_eq!(verify_eqn(9, &opts).unwrap().constant, Rational::from(21));
    assert!(verify_eqn(3, &opts).is_err());
}
