//! Gröbner-basis engine and the ideal operations built on it.

mod basis;
mod hilbert;
mod ideal;

pub use basis::{GroebnerBasis, MembershipWitness};
pub use hilbert::{hilbert_data_from_numerator, hilbert_numerator, standard_monomials, HilbertData};
pub use ideal::{Ideal, Saturation};

/// Reduced Gröbner basis with transform records.
pub fn buchberger(ideal: &Ideal, order: crate::monomial::MonomialOrder) -> GroebnerBasis {
    GroebnerBasis::compute(ideal.ring().with_order(order), ideal.generators(), true)
}

/// Membership test with witness against the ideal's generators.
pub fn ideal_membership(f: &crate::poly::Polynomial, ideal: &Ideal) -> (bool, MembershipWitness) {
    ideal.membership(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{Monomial, MonomialOrder};
    use crate::parse::poly;
    use crate::poly::Ring;

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(*r, gens.iter().map(|g| poly(r, g)).collect())
    }

    fn twisted_cubic(r: &Ring) -> Ideal {
        ideal(r, &["t1*t2 - t0*t3", "t1^2 - t0*t2", "t2^2 - t1*t3"])
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = Ring::projective(1, 0).unwrap();
        let i = ideal(&r, &["t0^2", "t0*t1"]);
        let gb = buchberger(&i, MonomialOrder::Grevlex);
        assert_eq!(gb.elements().len(), 2);
        assert!(gb.verify());
    }

    #[test]
    fn twisted_cubic_basis() {
        let r = Ring::projective(3, 0).unwrap();
        let gb = buchberger(&twisted_cubic(&r), MonomialOrder::Grevlex);
        assert_eq!(gb.elements().len(), 3);
        assert!(gb.verify());
        let lex = buchberger(&twisted_cubic(&r), MonomialOrder::Lex);
        assert!(lex.verify());
    }

    #[test]
    fn principal_basis_is_monic_generator() {
        let r = Ring::projective(2, 0).unwrap();
        let gb = buchberger(&ideal(&r, &["3*t0^2 - t1*t2"]), MonomialOrder::Grevlex);
        assert_eq!(gb.elements(), &[poly(&r, "t0^2 - 1/3*t1*t2")]);
    }

    #[test]
    fn membership_with_witnesses() {
        let r = Ring::projective(2, 0).unwrap();
        let (yes, w) = ideal_membership(&poly(&r, "t0*t1"), &ideal(&r, &["t0"]));
        assert!(yes);
        assert!(w.verify(&poly(&r, "t0*t1"), &[poly(&r, "t0")]));
        let unsat = ideal(&r, &["t0^2", "t0*t1", "t0*t2"]);
        let d1 = poly(&r, "t0*t1").partial_derivative(1);
        let (no, w) = ideal_membership(&d1, &unsat);
        assert!(!no);
        assert!(w.verify(&d1, unsat.generators()));

        let r3 = Ring::projective(3, 0).unwrap();
        let tc = twisted_cubic(&r3);
        let f = poly(&r3, "t2^2 - t1*t3");
        let (yes, w) = tc.membership(&f);
        assert!(yes && w.verify(&f, tc.generators()));
    }

    #[test]
    fn normal_form_idempotent_and_unit_rows() {
        let r = Ring::projective(3, 0).unwrap();
        let tc = twisted_cubic(&r);
        let gb = tc.witness_groebner();
        let f = poly(&r, "t0^3 + 5*t1*t2*t3 - t3^3 + t1^2*t0");
        let nf = gb.normal_form(&f);
        assert_eq!(gb.normal_form(&nf), nf);
        for (k, g) in gb.elements().iter().enumerate() {
            let w = gb.basis_witness(g);
            assert!(w.remainder.is_zero());
            for (j, c) in w.cofactors.iter().enumerate() {
                assert_eq!(c.is_zero(), j != k);
            }
        }
    }

    #[test]
    fn elimination_examples() {
        let r = Ring::projective(2, 0).unwrap();
        let e = ideal(&r, &["t0 - t2", "t1 - t2"]).elimination_ideal(2).unwrap();
        let r2 = Ring::projective(1, 0).unwrap();
        assert!(e.same_ideal(&ideal(&r2, &["t0 - t1"])));
        let p = ideal(&r, &["t0^2 - t1^2"]).elimination_ideal(2).unwrap();
        assert!(p.same_ideal(&ideal(&r2, &["t0^2 - t1^2"])));
        assert!(ideal(&r, &["t0"]).elimination_ideal(4).is_err());
    }

    #[test]
    fn quotient_examples() {
        let r = Ring::projective(1, 0).unwrap();
        let i = ideal(&r, &["t0^2", "t0*t1"]);
        let q = i.quotient(&poly(&r, "t0")).unwrap();
        assert!(q.same_ideal(&ideal(&r, &["t0", "t1"])));
        assert!(i.quotient(&r.one()).unwrap().same_ideal(&i));
        let r3 = Ring::projective(3, 0).unwrap();
        let tc = twisted_cubic(&r3);
        let q = tc.quotient(&poly(&r3, "2*t0 - 3*t1 + 5*t2 + 7*t3")).unwrap();
        assert!(q.same_ideal(&tc));
    }

    #[test]
    fn saturation_examples() {
        let r = Ring::projective(1, 0).unwrap();
        assert!(ideal(&r, &["t0^2"]).saturation_wrt(&poly(&r, "t0")).unwrap().is_unit());
        let s = ideal(&r, &["t0^2*t1"]).saturation_wrt(&poly(&r, "t0")).unwrap();
        assert!(s.same_ideal(&ideal(&r, &["t1"])));
        let r2 = Ring::projective(2, 0).unwrap();
        let s = ideal(&r2, &["t0^2", "t0*t1", "t0*t2"]).saturate_irrelevant().unwrap();
        assert!(s.same_ideal(&ideal(&r2, &["t0"])));
        assert_eq!(s.saturation_flag(), Saturation::Yes);
        let m_primary = ideal(&r2, &["t0^2", "t1^3", "t2", "t0*t1"]);
        assert!(m_primary.saturate_irrelevant().unwrap().is_unit());
        let r3 = Ring::projective(3, 0).unwrap();
        let tc = twisted_cubic(&r3);
        assert!(tc.saturate_irrelevant().unwrap().same_ideal(&tc));
    }

    #[test]
    fn hilbert_examples() {
        let r = Ring::projective(3, 0).unwrap();
        let h = ideal(&r, &["t0^4 + t1^4 + t2^4 + t3^4"]).hilbert_data();
        assert_eq!((h.projective_dimension, h.degree), (2, 4));
        let h = twisted_cubic(&r).hilbert_data();
        assert_eq!((h.projective_dimension, h.degree), (1, 3));
        let h = ideal(&r, &["t0", "t1"]).hilbert_data();
        assert_eq!((h.projective_dimension, h.degree), (1, 1));
        let h = Ideal::unit(r).hilbert_data();
        assert_eq!((h.projective_dimension, h.degree), (-1, 0));
    }

    #[test]
    fn graded_pieces() {
        let r = Ring::projective(2, 0).unwrap();
        let b = ideal(&r, &["t0"]).graded_piece_basis(1);
        assert_eq!(b, vec![Monomial::variable(3, 1), Monomial::variable(3, 2)]);
        assert_eq!(ideal(&r, &["t0"]).graded_piece_basis(0), vec![Monomial::one(3)]);
        let r3 = Ring::projective(3, 0).unwrap();
        assert_eq!(twisted_cubic(&r3).graded_piece_basis(2).len(), 7);
    }
}
