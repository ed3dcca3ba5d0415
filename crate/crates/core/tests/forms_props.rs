use gwadams::forms::{gw_identity_check, invariants, invariants_of_diagonal, subsets};
use gwadams::{QGram, QMatrix, Rational, Symmetry};
use num_bigint::BigInt;
use proptest::prelude::*;

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn int_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| QMatrix::from_rows(v.chunks(n).map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap())
}

fn invertible(n: usize) -> impl Strategy<Value = QMatrix> {
    int_matrix(n).prop_filter("invertible", |m| m.determinant().unwrap() != q(0))
}

fn symmetric_form(n: usize) -> impl Strategy<Value = QGram> {
    int_matrix(n).prop_filter_map("nondegenerate", |m| {
        let s = m.add(&m.transpose()).unwrap();
        let f = QGram::new(s, Symmetry::Symmetric).unwrap();
        f.is_nondegenerate().then_some(f)
    })
}

/// Matrix of `⋀^k b` in the basis of increasing index subsets (the k-th compound).
fn compound(b: &QMatrix, k: usize) -> QMatrix {
    let idx = subsets(b.rows(), k);
    let mut m = QMatrix::zeros(idx.len(), idx.len());
    for (r, i) in idx.iter().enumerate() {
        for (c, j) in idx.iter().enumerate() {
            m[(r, c)] = b.select(i, j).determinant().unwrap();
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exterior_power_is_functorial(f in symmetric_form(3), b in invertible(3), k in 0usize..=3) {
        let lhs = f.pullback(&b).unwrap().ext_power(k).unwrap();
        let rhs = f.ext_power(k).unwrap().pullback(&compound(&b, k)).unwrap();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn tensor_is_functorial(f in symmetric_form(2), g in symmetric_form(2), b in invertible(2), c in invertible(2)) {
        let lhs = f.pullback(&b).unwrap().tensor(&g.pullback(&c).unwrap());
        let rhs = f.tensor(&g).pullback(&b.kron(&c)).unwrap();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn gw_equality_is_an_equivalence(f in symmetric_form(3), g in symmetric_form(2), b in invertible(3)) {
        let fb = f.pullback(&b).unwrap();
        prop_assert!(gw_identity_check(&[(1, f.clone())], &[(1, f.clone())]).unwrap().equal);
        prop_assert!(gw_identity_check(&[(1, f.clone())], &[(1, fb.clone())]).unwrap().equal);
        let a = gw_identity_check(&[(1, f.clone())], &[(1, g.clone())]).unwrap().equal;
        let b2 = gw_identity_check(&[(1, g.clone())], &[(1, f.clone())]).unwrap().equal;
        prop_assert_eq!(a, b2);
        // cancellation: f + g - g = f
        prop_assert!(gw_identity_check(&[(1, f.clone()), (1, g.clone()), (-1, g)], &[(1, fb)]).unwrap().equal);
    }

    #[test]
    fn hilbert_reciprocity(d in prop::collection::vec((-30i64..=30).prop_filter("nonzero", |x| *x != 0), 1..6)) {
        let inv = invariants_of_diagonal(&d.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        prop_assert_eq!(inv.hilbert_product(), 1);
        let f = QGram::diagonal(&d.iter().map(|&x| q(x)).collect::<Vec<_>>());
        prop_assert!(invariants(&f).unwrap().same_class(&inv));
    }
}

#[test]
fn hyperbolic_plane_is_one_plus_minus_one() {
    let h = QGram::hyperbolic(1, Symmetry::Symmetric);
    let d = QGram::diagonal_i64(&[1, -1]);
    assert!(gw_identity_check(&[(1, h)], &[(1, d)]).unwrap().equal);
}

#[test]
fn distinct_classes_are_separated() {
    // 2 = 1 + 1 is a sum of two squares, 3 is not: (3, 3)_3 = -1
    let a = QGram::diagonal_i64(&[1, 1]);
    assert!(gw_identity_check(&[(1, a.clone())], &[(1, QGram::diagonal_i64(&[2, 2]))]).unwrap().equal);
    assert!(!gw_identity_check(&[(1, a)], &[(1, QGram::diagonal_i64(&[3, 3]))]).unwrap().equal);
}
