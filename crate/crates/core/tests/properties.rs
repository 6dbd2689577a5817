mod common;

use invar::vfield::{invariance_check, koszul_decompose, trivial_field, SkewCoefficients};
use invar::{parse_polynomial, Ideal, Matrix, Monomial, PolyMatrix, Polynomial, Ring, Scalar, VectorField};
use proptest::prelude::*;

use common::graded_member;

fn ring(p: u64) -> Ring {
    Ring::projective(2, p).unwrap()
}

/// Homogeneous polynomial of degree `d` in three variables from a list of
/// exponent pairs and coefficients.
fn form(r: &Ring, d: u32, terms: &[(u32, u32, i64)]) -> Polynomial {
    terms.iter().fold(r.zero(), |acc, &(a, b, c)| {
        let a = a % (d + 1);
        let b = b % (d + 1 - a);
        let m = Monomial::from_exponents(&[a as u16, b as u16, (d - a - b) as u16]);
        &acc + &r.monomial(m).scale(&Scalar::from_i64(c, r.characteristic()))
    })
}

fn terms() -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    prop::collection::vec((0u32..5, 0u32..5, -4i64..=4), 1..4)
}

fn characteristic() -> impl Strategy<Value = u64> {
    prop_oneof![Just(0u64), Just(5), Just(101)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn display_parse_round_trip(p in characteristic(), d in 0u32..5, t in terms()) {
        let r = ring(p);
        let f = form(&r, d, &t);
        let back = parse_polynomial(&r, &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn normal_form_is_idempotent(p in characteristic(), t1 in terms(), t2 in terms(), t3 in terms()) {
        let r = ring(p);
        let i = Ideal::new(r, vec![form(&r, 2, &t1), form(&r, 3, &t2)]);
        let f = form(&r, 4, &t3);
        let nf = i.normal_form(&f);
        prop_assert_eq!(i.normal_form(&nf), nf.clone());
        prop_assert!(graded_member(i.generators(), &(&f - &nf)));
    }

    #[test]
    fn membership_witness_reproduces_input(p in characteristic(), t1 in terms(), t2 in terms(), c in terms()) {
        let r = ring(p);
        let gens = vec![form(&r, 2, &t1), form(&r, 2, &t2)];
        let i = Ideal::new(r, gens.clone());
        let f = &form(&r, 1, &c) * &gens[0];
        let (member, witness) = i.membership(&f);
        prop_assert!(member);
        prop_assert!(witness.verify(&f, i.generators()));
    }

    #[test]
    fn radial_shift_keeps_the_field(p in characteristic(), g in prop::collection::vec(terms(), 3), h in terms()) {
        let r = ring(p);
        let x = VectorField::new(r, g.iter().map(|t| form(&r, 2, t)).collect(), 2).unwrap();
        let shifted = x.add_radial(&form(&r, 1, &h)).unwrap();
        prop_assert!(shifted.equivalent(&x));
        prop_assert!(x.scale(&Scalar::from_i64(3, p)).proportional(&x));
    }

    #[test]
    fn linear_change_round_trip(g in prop::collection::vec(terms(), 3), seed in 0u64..1000) {
        let r = ring(0);
        let x = VectorField::new(r, g.iter().map(|t| form(&r, 2, t)).collect(), 2).unwrap();
        let m = invar::random::Sampler::with_bound(seed, 0, 3).invertible_matrix(3).unwrap();
        let back = x.apply_linear_change(&m).unwrap().apply_linear_change(&m.inverse().unwrap()).unwrap();
        prop_assert!(back.equivalent(&x));
    }

    #[test]
    fn trivial_fields_are_invariant_and_peel(p in prop_oneof![Just(0u64), Just(7)], t in prop::collection::vec(terms(), 3)) {
        let r = ring(p);
        let f = invar::parse::poly(&r, "t0^3 + t1^3 + t2^3");
        let mut skew = SkewCoefficients::zero(r, 1);
        let mut k = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                skew.set(i, j, form(&r, 1, &t[k]));
                k += 1;
            }
        }
        let x = trivial_field(&f, &skew).unwrap();
        let cert = invariance_check(&x, &Ideal::new(r, vec![f.clone()])).unwrap();
        prop_assert!(cert.verdict && cert.verify(&x));
        prop_assume!(!x.is_zero());
        let back = koszul_decompose(&x, &f).unwrap();
        prop_assert!(trivial_field(&f, &back).unwrap().equivalent(&x));
    }

    #[test]
    fn determinant_is_multiplicative(a in prop::collection::vec(-5i64..=5, 9), b in prop::collection::vec(-5i64..=5, 9)) {
        let r = ring(0);
        let mat = |v: &[i64]| PolyMatrix::from_rows(r, v.chunks(3).map(|row| row.iter().map(|&c| r.int(c)).collect()).collect());
        let (ma, mb) = (mat(&a), mat(&b));
        let rows = |v: &[i64]| v.chunks(3).map(|c| c.to_vec()).collect::<Vec<_>>();
        let prod = Matrix::from_i64(&rows(&a), 0).mul(&Matrix::from_i64(&rows(&b), 0));
        let mp = PolyMatrix::from_rows(r, (0..3).map(|i| (0..3).map(|j| r.constant(prod.get(i, j).clone())).collect()).collect());
        prop_assert_eq!(mp.determinant(), &ma.determinant() * &mb.determinant());
    }
}
