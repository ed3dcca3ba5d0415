use gwadams::gw::rank_i64;
use gwadams::lambda::adams_gw;
use gwadams::{Ctx, GWElem, RingElem, VarId, ZPoly};
use proptest::prelude::*;

fn gw() -> impl Strategy<Value = GWElem> {
    prop::collection::vec((-2i64..=2, -5i64..=5, -5i64..=5, -5i64..=5), 0..4).prop_map(|parts| {
        parts.into_iter().fold(GWElem::zero(), |acc, (j, a, b, c)| &acc + &GWElem::from_parts(j, a, b, c))
    })
}

/// Two elements of the same degree `2d`: `gamma^{d/2}(a + b eps)` for even `d`,
/// `c tau gamma^{(d-1)/2}` for odd `d`.
fn homogeneous_pair() -> impl Strategy<Value = (GWElem, GWElem)> {
    let coeffs = || (-4i64..=4, -4i64..=4);
    (-3i64..=3, coeffs(), coeffs()).prop_map(|(d, (a, b), (c, e))| {
        let make = |a: i64, b: i64| {
            if d % 2 == 0 {
                GWElem::from_parts(d / 2, a, b, 0)
            } else {
                GWElem::from_parts(d.div_euclid(2), 0, 0, a + b)
            }
        };
        (make(a, b), make(c, e))
    })
}

fn beta_images() -> [ZPoly; 4] {
    let c = Ctx::new(vec![VarId::laurent("beta")]).unwrap();
    let m = |k: i64, e: i32| ZPoly::term(&c, vec![e], k.into()).unwrap();
    [m(-1, 0), m(2, 2), m(1, 4), m(1, -4)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn commutative_ring(x in gw(), y in gw(), z in gw()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &GWElem::one(), x.clone());
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn rank_is_multiplicative(x in gw(), y in gw()) {
        let (rx, ry) = (x.rank_formal(), y.rank_formal());
        prop_assert_eq!((&x * &y).rank_formal(), &rx * &ry);
        prop_assert_eq!((&x + &y).rank_formal(), rx + ry);
    }

    #[test]
    fn forgetful_map_is_a_ring_map(x in gw(), y in gw()) {
        let [e, t, g, gi] = beta_images();
        let f = |v: &GWElem| v.eval(&e, &t, &g, &gi);
        prop_assert_eq!(f(&(&x * &y)), f(&x).ring_mul(&f(&y)));
        prop_assert_eq!(f(&(&x + &y)), f(&x).ring_add(&f(&y)));
    }

    #[test]
    fn json_round_trip(x in gw()) {
        prop_assert_eq!(GWElem::from_json(&x.to_json()).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adams_is_a_ring_map((x, y) in homogeneous_pair(), n in 0i64..=4) {
        let p = |v: &GWElem| adams_gw(n, v).unwrap();
        prop_assert_eq!(p(&(&x + &y)), &p(&x) + &p(&y));
        prop_assert_eq!(p(&(&x * &y)), &p(&x) * &p(&y));
        prop_assert_eq!(rank_i64(&p(&x)).unwrap(), rank_i64(&x).unwrap());
    }

    #[test]
    fn adams_composes((x, _) in homogeneous_pair(), m in 1i64..=3, n in 1i64..=3) {
        let mn = adams_gw(m, &adams_gw(n, &x).unwrap()).unwrap();
        prop_assert_eq!(mn, adams_gw(m * n, &x).unwrap());
    }
}

#[test]
fn defining_relations() {
    let (e, t, g, h) = (GWElem::eps(), GWElem::tau(), GWElem::gamma(), GWElem::h());
    assert_eq!(&e * &e, GWElem::one());
    assert_eq!(&e * &t, t.neg());
    assert_eq!(&t * &t, (&g * &h).scale(&2.into()));
    assert_eq!(&h * &h, h.scale(&2.into()));
    assert_eq!(&h * &t, t.scale(&2.into()));
}
