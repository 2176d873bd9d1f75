mod common;

use common::{isogenies, rational_point_isogeny, X0_11, X0_19};
use isoratio::arith::rational::rat;
use isoratio::isogeny::dual;
use isoratio::oracle::{
    cokernel_order_sampled, compare, is_divisible, kernel_order_local, nearest_power, oracle_places, OracleConfig,
};
use isoratio::selmer::Place;
use isoratio::Error;

#[test]
fn kernel_orders_of_level_eleven_pair() {
    let phi = rational_point_isogeny(X0_11, 5);
    let psi = dual(&phi).unwrap();
    for v in [Place::Infinity, Place::Finite(3), Place::Finite(5), Place::Finite(11), Place::Finite(31)] {
        assert_eq!(kernel_order_local(&phi, v, 256).unwrap(), 5, "{v}");
    }
    // the dual kernel is μ5: local points iff ℓ ≡ 1 mod 5
    for (v, order) in [
        (Place::Infinity, 1),
        (Place::Finite(2), 1),
        (Place::Finite(3), 1),
        (Place::Finite(7), 1),
        (Place::Finite(11), 5),
        (Place::Finite(31), 5),
        (Place::Finite(41), 5),
    ] {
        assert_eq!(kernel_order_local(&psi, v, 256).unwrap(), order, "{v}");
    }
}

#[test]
fn images_of_rational_points_are_divisible() {
    // the torsion of the level-11 curve is not in this kernel
    let phi = isogenies(X0_11, 5).into_iter().find(|f| f.rational_kernel_abscissas().is_empty()).unwrap();
    let k2 = &phi.kernel_poly * &phi.kernel_poly;
    for x in [5, 16] {
        let image = phi.x_num.eval(&rat(x)) / k2.eval(&rat(x));
        for l in [2, 3, 5, 7, 11] {
            assert!(is_divisible(&phi, &image, l, 256).unwrap(), "x={x} l={l}");
        }
    }
}

#[test]
fn nearest_power_window() {
    assert_eq!(nearest_power(1.0, 5), Some(0));
    assert_eq!(nearest_power(0.21, 5), Some(1));
    assert_eq!(nearest_power(0.05, 5), Some(2));
    assert_eq!(nearest_power(0.6, 5), None);
    assert_eq!(nearest_power(0.0, 3), None);
    assert_eq!(nearest_power(0.34, 3), Some(1));
}

#[test]
fn places_cover_bad_p_and_two_good_primes() {
    let phi = rational_point_isogeny(X0_19, 3);
    let places = oracle_places(&phi);
    assert_eq!(places, vec![Place::Finite(2), Place::Finite(3), Place::Finite(5), Place::Finite(19), Place::Infinity]);
}

#[test]
fn oracle_agrees_on_level_nineteen_pair() {
    let phi = rational_point_isogeny(X0_19, 3);
    for f in [phi.clone(), dual(&phi).unwrap()] {
        for v in oracle_places(&f) {
            compare(&f, v, &OracleConfig { workers: 4, ..Default::default() }).unwrap();
        }
    }
}

#[test]
fn estimate_is_stable_under_doubling() {
    let phi = rational_point_isogeny(X0_11, 5);
    let psi = dual(&phi).unwrap();
    for f in [&phi, &psi] {
        for v in [Place::Finite(5), Place::Finite(11)] {
            let small =
                cokernel_order_sampled(f, v, &OracleConfig { samples: 200, workers: 4, ..Default::default() }).unwrap();
            let large =
                cokernel_order_sampled(f, v, &OracleConfig { samples: 400, workers: 4, ..Default::default() }).unwrap();
            assert_eq!(small.exponent, large.exponent, "{v}");
        }
    }
}

#[test]
fn estimate_does_not_depend_on_workers() {
    let phi = rational_point_isogeny(X0_11, 5);
    let run = |workers| {
        cokernel_order_sampled(&phi, Place::Finite(11), &OracleConfig { workers, seed: 9, ..Default::default() })
            .unwrap()
    };
    let (a, b) = (run(1), run(4));
    assert_eq!(a.divisible_fraction, b.divisible_fraction);
    assert_eq!(a.exponent, b.exponent);
}

#[test]
fn too_few_samples_is_an_input_error() {
    let phi = rational_point_isogeny(X0_11, 5);
    let err = cokernel_order_sampled(&phi, Place::Finite(11), &OracleConfig { samples: 50, ..Default::default() });
    assert!(matches!(err, Err(Error::Input(_))));
}
