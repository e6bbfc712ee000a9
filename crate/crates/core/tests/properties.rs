//! Property tests over randomized inputs.

use num_complex::Complex64;
use proptest::prelude::*;
use stieltjes_core::contfrac::{j_convergent_pairs, JFraction};
use stieltjes_core::electro::{
    cdf_distance, energy, freud_c, freud_c_inverted, gradient, semicircle_cdf, ChargeSystem,
};
use stieltjes_core::elliptic::{jacobi_elliptic, EllipticContext};
use stieltjes_core::orthopoly::{family_coeffs, zeros, Family};
use stieltjes_core::quadrature::gauss_rule;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Legendre),
        Just(Family::ChebyshevT),
        Just(Family::ChebyshevU),
        Just(Family::Hermite),
        (-0.9f64..3.0).prop_map(|alpha| Family::Laguerre { alpha }),
        (-0.9f64..3.0, -0.9f64..3.0).prop_map(|(alpha, beta)| Family::Jacobi { alpha, beta }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_identity_holds(
        a_sq in prop::collection::vec(0.1f64..4.0, 6),
        b in prop::collection::vec(-2.0f64..2.0, 6),
        re in -3.0f64..3.0,
        im in 0.1f64..3.0,
    ) {
        let j = JFraction::new(a_sq.clone(), b).unwrap();
        let p = j_convergent_pairs(&j, Complex64::new(re, im), 6).unwrap();
        let mut e = a_sq.clone();
        for v in e.iter_mut().skip(1) {
            *v = -*v;
        }
        for n in 2..=6 {
            let (x, y) = (&p[n - 1], &p[n - 2]);
            let s = (x.log_scale + y.log_scale).exp();
            let lhs = (x.numerator * y.denominator - y.numerator * x.denominator) * s;
            let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * e[..n].iter().product::<f64>();
            prop_assert!((lhs.re - rhs).abs() <= 1e-9 * rhs.abs().max(1.0));
            prop_assert!(lhs.im.abs() <= 1e-9 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn gauss_weights_positive_with_full_mass(f in family(), n in 1usize..40) {
        let rule = gauss_rule(&family_coeffs(f, n).unwrap(), n).unwrap();
        prop_assert!(rule.weights.iter().all(|&w| w > 0.0));
        let total: f64 = rule.weights.iter().sum();
        prop_assert!((total - rule.mass).abs() <= 1e-12 * rule.mass);
    }

    #[test]
    fn consecutive_zeros_interlace(f in family(), n in 1usize..40) {
        let rc = family_coeffs(f, n + 1).unwrap();
        let lo = zeros(&rc, n).unwrap();
        let hi = zeros(&rc, n + 1).unwrap();
        for k in 0..n {
            prop_assert!(hi[k] < lo[k] && lo[k] < hi[k + 1]);
        }
    }

    #[test]
    fn energy_is_permutation_invariant(
        mut x in prop::collection::vec(-0.95f64..0.95, 2..8),
        p in 0.1f64..3.0,
        q in 0.1f64..3.0,
        seed in any::<u64>(),
    ) {
        let s = ChargeSystem::jacobi(x.len(), p, q).unwrap();
        let e0 = energy(&x, &s);
        let k = (seed as usize) % x.len();
        x.rotate_left(k);
        x.reverse();
        let e1 = energy(&x, &s);
        prop_assert_eq!(e0.coincident, e1.coincident);
        if !e0.coincident {
            prop_assert!((e0.value - e1.value).abs() <= 1e-12 * e0.value.abs().max(1.0));
        }
    }

    #[test]
    fn gradient_matches_central_differences(
        base in prop::collection::vec(0.0f64..1.0, 2..7),
        p in 0.1f64..3.0,
        q in 0.1f64..3.0,
    ) {
        // spread the points so no two sit closer than the step allows
        let n = base.len();
        let x: Vec<f64> = base
            .iter()
            .enumerate()
            .map(|(i, t)| -0.9 + 1.8 * (i as f64 + 0.2 + 0.6 * t) / n as f64)
            .collect();
        let s = ChargeSystem::jacobi(n, p, q).unwrap();
        let g = gradient(&x, &s);
        let h = 1e-6;
        for i in 0..n {
            let mut up = x.clone();
            let mut dn = x.clone();
            up[i] += h;
            dn[i] -= h;
            let fd = (energy(&up, &s).value - energy(&dn, &s).value) / (2.0 * h);
            prop_assert!((fd - g[i]).abs() <= 1e-5 * g[i].abs().max(1.0));
        }
    }

    #[test]
    fn pythagorean_identities(k in 0.01f64..0.99, u in -10.0f64..10.0) {
        let ctx = EllipticContext::new(k).unwrap();
        let (sn, cn, dn) = jacobi_elliptic(u, &ctx).unwrap();
        prop_assert!((sn * sn + cn * cn - 1.0).abs() <= 1e-13);
        prop_assert!((dn * dn + k * k * sn * sn - 1.0).abs() <= 1e-13);
    }
}

#[test]
fn inverted_freud_constant_fits_semicircle_better() {
    let n = 200;
    let z = zeros(&family_coeffs(Family::Hermite, n).unwrap(), n).unwrap();
    let dist = |c: f64| {
        let scaled: Vec<f64> = z.iter().map(|x| x / (c * (n as f64).sqrt())).collect();
        cdf_distance(&scaled, semicircle_cdf)
    };
    let printed = dist(freud_c(2.0));
    let inverted = dist(freud_c_inverted(2.0));
    assert!((freud_c_inverted(2.0) - 2f64.sqrt()).abs() < 1e-14);
    assert!(inverted < printed, "inverted {inverted} vs printed {printed}");
    assert!(inverted < 0.01);
}
