use inhomo::approx::{m_exact, m_exact_full, s_formulas, s_values, SMode};
use inhomo::bounds::{c_bound, upper_bound};
use inhomo::digits::{alpha_expand, gamma_star, is_lattice_equivalent, DigitSeq};
use inhomo::{parse_digit_seq, parse_ncf, parse_value, Error, NcfExpansion, QuadNum};
use proptest::prelude::*;

fn periodic_base(min: u64) -> impl Strategy<Value = NcfExpansion> {
    prop::collection::vec(min..=min + 3, 1..=4)
        .prop_filter_map("period must have a fixed point", |p| {
            NcfExpansion::periodic(p).ok()
        })
}

fn base_with_pre() -> impl Strategy<Value = NcfExpansion> {
    (
        prop::collection::vec(2u64..=7, 0..=2),
        prop::collection::vec(3u64..=7, 1..=3),
    )
        .prop_filter_map("valid expansion", |(pre, per)| {
            NcfExpansion::new(pre, per).ok()
        })
}

/// Periodic t-pattern over `base` with `|t_i| <= a_i - 2`, so neither the
/// pattern nor its negation has `t = a`. `None` when it is inadmissible or
/// lattice-equivalent.
fn pattern(base: &NcfExpansion, seeds: &[u64], mult: usize) -> Option<DigitSeq> {
    let m = base.period().len();
    let t: Vec<i64> = (0..m * mult)
        .map(|i| {
            let a = base.period()[i % m] as i64;
            let choices = a - 1;
            let pick = (seeds[i % seeds.len()] % choices as u64) as i64;
            -(a - 2) + 2 * pick
        })
        .collect();
    let d = DigitSeq::from_t(base.clone(), &[], &t).ok()?;
    let alpha = base.value().ok()?;
    match is_lattice_equivalent(&d.gamma().ok()?, &alpha) {
        Ok(None) => Some(d),
        _ => None,
    }
}

fn negated(d: &DigitSeq) -> Option<DigitSeq> {
    let neg = |v: Vec<i64>| v.into_iter().map(|t| -t).collect::<Vec<_>>();
    DigitSeq::from_t(d.base().clone(), &neg(d.t_pre()), &neg(d.t_period())).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn general_evaluation_matches_limit_formulas(
        base in periodic_base(3),
        seeds in prop::collection::vec(any::<u64>(), 1..8),
        mult in 1usize..=2,
    ) {
        if let Some(d) = pattern(&base, &seeds, mult) {
            let lemma = m_exact(&base, &d).unwrap();
            let full = m_exact_full(&base, &d).unwrap();
            prop_assert_eq!(lemma.exact_value(), full.exact_value());
        }
    }

    #[test]
    fn sign_flip_symmetry(
        base in periodic_base(3),
        seeds in prop::collection::vec(any::<u64>(), 1..8),
    ) {
        if let Some(d) = pattern(&base, &seeds, 2) {
            if let Some(n) = negated(&d) {
                let a = m_exact(&base, &d).unwrap();
                let b = m_exact(&base, &n).unwrap();
                prop_assert_eq!(a.exact_value(), b.exact_value());
            }
        }
    }

    #[test]
    fn upper_bounds_hold(
        base in periodic_base(3),
        seeds in prop::collection::vec(any::<u64>(), 1..8),
    ) {
        if let Some(d) = pattern(&base, &seeds, 1) {
            let m = m_exact_full(&base, &d).unwrap();
            let m = m.exact_value().unwrap();
            let r = base.liminf_term().unwrap();
            prop_assert!(m <= &QuadNum::ratio(1, 4).unwrap());
            prop_assert!(m <= &upper_bound(r).unwrap());
        }
    }

    #[test]
    fn gamma_star_beats_lower_bound(base in periodic_base(3)) {
        let r = base.liminf_term().unwrap();
        let m = m_exact(&base, &gamma_star(&base).unwrap()).unwrap();
        prop_assert!(m.exact_value().unwrap() >= &c_bound(r).unwrap());
    }

    #[test]
    fn s_value_pair_bound_and_d_ranges(
        base in periodic_base(3),
        seeds in prop::collection::vec(any::<u64>(), 1..8),
        k in 1usize..12,
    ) {
        if let Some(d) = pattern(&base, &seeds, 1) {
            let s = s_values(&base, &d, k, SMode::Finite).unwrap();
            let one = QuadNum::one();
            let (ab, a) = (&s.alpha_bar, &s.alpha_fwd);
            let (dm, dp) = (&s.d.d_minus, &s.d.d_plus);
            let bound = (&one - dm) / &((&one - &(ab * a)) * 4);
            prop_assert!(s.s3.clone().min(s.s4.clone()) <= bound);
            prop_assert!(dm >= &(ab - 1) && dm <= &(ab + 1));
            prop_assert!(dp >= &(a - 1) && dp <= &(a + 1));
        }
    }

    #[test]
    fn reversal_permutes_s_values(
        x in 1i64..200, y in 1i64..200, u in -150i64..150, v in -150i64..150,
    ) {
        let r5 = QuadNum::sqrt_of(5).unwrap();
        let ab = QuadNum::ratio(x, 211).unwrap();
        let a = (&r5 * x + y) / 1000;
        let dm = QuadNum::ratio(u, 151).unwrap();
        let dp = (&r5 * v) / 400;
        let [s1, s2, s3, s4] = s_formulas(&ab, &a, &dm, &dp);
        let [r1, r2, r3, r4] = s_formulas(&a, &ab, &dp, &dm);
        prop_assert_eq!(s1, r1);
        prop_assert_eq!(s3, r3);
        prop_assert_eq!(s2, r4);
        prop_assert_eq!(s4, r2);
    }

    #[test]
    fn alpha_expansion_digits(base in base_with_pre(), p in 1i64..200, q in 2i64..200) {
        prop_assume!(p < q);
        let gamma = QuadNum::ratio(p, q).unwrap();
        match alpha_expand(&gamma, &base, 400) {
            Ok(d) => {
                for i in 1..=d.periodic_start() + 2 * d.period_len().max(1) {
                    if let Some(b) = d.digit(i) {
                        prop_assert!(b < d.term(i));
                    }
                }
                if d.is_truncated() {
                    let (lo, hi) = d.gamma_bounds().unwrap();
                    prop_assert!(lo <= gamma && gamma <= hi);
                } else {
                    prop_assert_eq!(d.gamma().unwrap(), gamma.clone());
                    let again = DigitSeq::from_digits(
                        base.clone(),
                        d.pre_digits().to_vec(),
                        d.period_digits().to_vec(),
                    );
                    prop_assert_eq!(again.unwrap(), d);
                }
            }
            Err(Error::LatticeGamma { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn printer_parser_round_trip(
        base in base_with_pre(),
        a in -500i64..500, b in -500i64..500, c in 1i64..500, radicand in 2i64..400,
    ) {
        prop_assert_eq!(parse_ncf(&base.to_string()).unwrap(), base.clone());
        let x = QuadNum::new(a, b, c, radicand).unwrap();
        prop_assert_eq!(parse_value(&x.to_string()).unwrap(), x);
        let g = gamma_star(&base).unwrap();
        prop_assert_eq!(parse_digit_seq(&g.to_string()).unwrap(), g);
    }
}
