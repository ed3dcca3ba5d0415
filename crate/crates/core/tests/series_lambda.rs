use gwadams::lambda::{adams, adams_by_substitution, lambda_t};
use gwadams::{Ctx, GWElem, SymClass, SymRing, TruncSeries, ZPoly};
use proptest::prelude::*;

fn zpoly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec((0i32..3, 0i32..3, -4i64..=4), 0..4).prop_map(|terms| {
        let ctx = Ctx::polynomial(&["x", "y"]).unwrap();
        ZPoly::from_terms(&ctx, terms.into_iter().map(|(a, b, c)| (vec![a, b], c.into()))).unwrap()
    })
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncSeries<ZPoly>> {
    prop::collection::vec(zpoly(), 0..=order).prop_map(move |tail| {
        let ctx = Ctx::polynomial(&["x", "y"]).unwrap();
        let one = ZPoly::one(&ctx);
        let mut c = vec![one.clone()];
        c.extend(tail.into_iter().map(|p| p.reindex(&ctx).unwrap()));
        TruncSeries::new(&one, c, order)
    })
}

/// Degree-2 classes in `u1, u2`: integer combinations of `u1, u2, tau, <-1> tau, eps u1`.
fn class() -> impl Strategy<Value = SymClass> {
    let ring = SymRing::new(2, "u");
    let atoms = vec![
        SymClass::generator(&ring, 0).unwrap(),
        SymClass::generator(&ring, 1).unwrap(),
        SymClass::constant(&ring, GWElem::tau()),
        SymClass::constant(&ring, &GWElem::minus_one() * &GWElem::tau()),
        SymClass::generator(&ring, 0).unwrap().scale(&GWElem::eps()),
    ];
    prop::collection::vec((0usize..atoms.len(), -2i64..=2), 1..3).prop_map(move |picks| {
        let mut acc = SymClass::zero(&ring);
        for (i, k) in picks {
            acc = acc.add(&atoms[i].scale_int(&k.into()));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn series_units_form_a_group(f in unit_series(6), g in unit_series(6)) {
        let fi = f.inverse().unwrap();
        prop_assert_eq!(fi.mul(&f), TruncSeries::one(&f.coeffs()[0], 6));
        prop_assert_eq!(f.mul(&g).inverse().unwrap(), fi.mul(&g.inverse().unwrap()));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lambda_t_is_exponential(x in class(), y in class()) {
        let lhs = lambda_t(&x.add(&y), 4).unwrap();
        let rhs = lambda_t(&x, 4).unwrap().mul(&lambda_t(&y, 4).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adams_matches_substitution(x in class(), n in 1u32..=4) {
        prop_assert_eq!(adams(n, &x).unwrap(), adams_by_substitution(n as i64, &x).unwrap());
    }

    #[test]
    fn adams_is_multiplicative(x in class(), y in class(), n in 1u32..=3) {
        let lhs = adams(n, &x.mul(&y)).unwrap();
        prop_assert_eq!(lhs, adams(n, &x).unwrap().mul(&adams(n, &y).unwrap()));
    }
}
