//! Arithmetically Cohen–Macaulay detection and Castelnuovo–Mumford
//! regularity through a generic Artinian reduction.

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::random::Sampler;

/// Number of independent draws before a verdict is given up on.
pub const RETRY_BUDGET: u64 = 5;

/// `g ℓ ∈ J_i` while `g ∉ J_i`: the form `ℓ` is a zerodivisor on `S/J_i`.
#[derive(Clone, Debug)]
pub struct ZeroDivisorWitness {
    pub seed: u64,
    /// Position of `ℓ` in the drawn sequence.
    pub step: usize,
    pub form: Polynomial,
    pub element: Polynomial,
    pub ideal: Ideal,
}

impl ZeroDivisorWitness {
    pub fn verify(&self) -> bool {
        self.ideal.contains(&(&self.element * &self.form)) && !self.ideal.contains(&self.element)
    }
}

#[derive(Clone, Debug)]
pub enum Attempt {
    /// The forms are a regular sequence reducing to an Artinian ring.
    Regular { seed: u64, forms: Vec<Polynomial> },
    ZeroDivisor(ZeroDivisorWitness),
    /// Regular so far, but the forms do not cut the ideal down to a point.
    NotParameters { seed: u64 },
}

#[derive(Clone, Debug)]
pub struct AcmReport {
    pub verdict: bool,
    pub saturated: Ideal,
    pub attempts: Vec<Attempt>,
    /// The zerodivisor found on the last draw when the verdict is negative.
    pub witness: Option<ZeroDivisorWitness>,
}

impl AcmReport {
    /// Forms of the successful draw.
    pub fn regular_sequence(&self) -> Option<(u64, &[Polynomial])> {
        self.attempts.iter().find_map(|a| match a {
            Attempt::Regular { seed, forms } => Some((*seed, forms.as_slice())),
            _ => None,
        })
    }
}

fn cone_dimension(j: &Ideal) -> usize {
    (j.projective_dimension() + 1) as usize
}

fn attempt(j: &Ideal, seed: u64) -> Result<Attempt> {
    let ring = *j.ring();
    let c = cone_dimension(j);
    let forms = Sampler::new(seed, ring.characteristic()).linear_forms(&ring, c)?;
    let mut cur = j.clone();
    for (step, l) in forms.iter().enumerate() {
        let q = cur.quotient(l)?;
        if let Some(g) = q.generators().iter().find(|g| !cur.contains(g)) {
            let element = cur.normal_form(g);
            return Ok(Attempt::ZeroDivisor(ZeroDivisorWitness { seed, step, form: l.clone(), element, ideal: cur }));
        }
        cur = cur.with_generators(std::slice::from_ref(l));
    }
    if cur.projective_dimension() != -1 {
        return Ok(Attempt::NotParameters { seed });
    }
    Ok(Attempt::Regular { seed, forms })
}

/// Decides whether `S/J` is Cohen–Macaulay by testing generic linear forms
/// for a regular sequence. `J` is saturated first.
pub fn acm_check(j: &Ideal, seed: u64) -> Result<AcmReport> {
    if !j.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous("ACM test needs a homogeneous ideal".into()));
    }
    if j.is_unit() {
        return Err(AlgebraError::Precondition("ideal is the unit ideal".into()));
    }
    let sat = j.saturate_irrelevant()?;
    let mut attempts = Vec::new();
    for k in 0..RETRY_BUDGET {
        let a = attempt(&sat, seed.wrapping_add(k))?;
        let done = matches!(a, Attempt::Regular { .. });
        attempts.push(a);
        if done {
            return Ok(AcmReport { verdict: true, saturated: sat, attempts, witness: None });
        }
    }
    if attempts.iter().all(|a| matches!(a, Attempt::ZeroDivisor(_))) {
        let witness = match attempts.last() {
            Some(Attempt::ZeroDivisor(w)) => Some(w.clone()),
            _ => None,
        };
        return Ok(AcmReport { verdict: false, saturated: sat, attempts, witness });
    }
    Err(AlgebraError::Indeterminate(format!("no conclusive draw in {RETRY_BUDGET} attempts from seed {seed}")))
}

#[derive(Clone, Debug)]
pub struct ArtinianReduction {
    pub source: Ideal,
    pub forms: Vec<Polynomial>,
    pub seed: u64,
    /// `J + (ℓ_1, ..., ℓ_c)`.
    pub reduced: Ideal,
    /// Standard monomials of the reduced ideal, by degree then grevlex;
    /// the first one is `1`.
    pub basis: Vec<Monomial>,
    pub weights: Vec<u32>,
    pub multiplicity: usize,
    pub regularity: u32,
}

/// Reduction by explicit forms, which must cut `J` down to an Artinian ideal
/// of length `deg J`.
pub fn artinian_reduce_with(j: &Ideal, forms: &[Polynomial], seed: u64) -> Result<ArtinianReduction> {
    let ring = j.ring().with_order(MonomialOrder::Grevlex);
    let reduced = Ideal::new(ring, j.generators().iter().chain(forms).cloned().collect());
    if reduced.projective_dimension() != -1 {
        return Err(AlgebraError::Genericity("reduction is not Artinian".into()));
    }
    let mut basis = Vec::new();
    for d in 0.. {
        let piece = reduced.graded_piece_basis(d);
        if piece.is_empty() {
            break;
        }
        // graded_piece_basis is descending in the ring order
        basis.extend(piece.into_iter().rev());
    }
    let e = basis.len();
    let expected = if j.is_zero() { 1 } else { j.degree() as usize };
    if e != expected {
        return Err(AlgebraError::Genericity(format!("reduction has length {e}, expected {expected}")));
    }
    let weights: Vec<u32> = basis.iter().map(Monomial::degree).collect();
    let regularity = weights.iter().max().map_or(1, |w| w + 1);
    Ok(ArtinianReduction {
        source: j.clone(),
        forms: forms.to_vec(),
        seed,
        reduced,
        basis,
        weights,
        multiplicity: e,
        regularity,
    })
}

/// Generic Artinian reduction of an ACM ideal.
pub fn artinian_reduce(j: &Ideal, seed: u64) -> Result<ArtinianReduction> {
    let report = acm_check(j, seed)?;
    let Some((used, forms)) = report.regular_sequence() else {
        return Err(AlgebraError::Precondition("ideal is not arithmetically Cohen-Macaulay".into()));
    };
    artinian_reduce_with(&report.saturated, forms, used)
}

/// Regularity of an ACM ideal, confirmed on a second independent draw.
pub fn regularity_acm(j: &Ideal, seed: u64) -> Result<u32> {
    let r = artinian_reduce(j, seed)?.regularity;
    let again = artinian_reduce(j, seed.wrapping_add(RETRY_BUDGET))?.regularity;
    if r != again {
        return Err(AlgebraError::Indeterminate(format!("regularity {r} and {again} on two draws")));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly;
    use crate::poly::Ring;

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(*r, gens.iter().map(|g| poly(r, g)).collect())
    }

    #[test]
    fn twisted_cubic_is_acm() {
        let r = Ring::projective(3, 0).unwrap();
        let tc = ideal(&r, &["t1*t2 - t0*t3", "t1^2 - t0*t2", "t2^2 - t1*t3"]);
        let rep = acm_check(&tc, 0).unwrap();
        assert!(rep.verdict);
        let red = artinian_reduce(&tc, 0).unwrap();
        assert_eq!(red.multiplicity, 3);
        assert_eq!(red.weights, vec![0, 1, 1]);
        assert_eq!(red.regularity, 2);
        assert!(red.basis[0].is_one());
    }

    #[test]
    fn complete_intersection_and_hypersurface() {
        let r = Ring::projective(3, 0).unwrap();
        let ci = ideal(&r, &["t0^2 + t1^2 - t2*t3", "t0^3 - t1*t2*t3 + t3^3"]);
        let red = artinian_reduce(&ci, 1).unwrap();
        assert_eq!((red.multiplicity, red.regularity), (6, 4));
        assert_eq!(regularity_acm(&ideal(&r, &["t0^4 + t1^4 + t2^4 + t3^4"]), 0).unwrap(), 4);
    }

    #[test]
    fn projective_space_has_regularity_one() {
        let r = Ring::projective(2, 0).unwrap();
        assert_eq!(regularity_acm(&Ideal::zero(r), 3).unwrap(), 1);
    }

    #[test]
    fn two_points() {
        let r = Ring::projective(2, 0).unwrap();
        let j = ideal(&r, &["t0 - t2", "t1^2 - t2^2"]);
        let red = artinian_reduce_with(&j, &[r.var(0)], 0).unwrap();
        assert_eq!(red.basis, vec![Monomial::one(3), Monomial::variable(3, 1)]);
        assert_eq!(red.weights, vec![0, 1]);
        assert_eq!(red.regularity, 2);
        assert!(artinian_reduce_with(&j, &[poly(&r, "t1 - t2")], 0).is_err());
    }

    #[test]
    fn rational_quartic_is_not_acm() {
        let r = Ring::projective(3, 0).unwrap();
        let c4 = ideal(&r, &["t1*t2 - t0*t3", "t1^3 - t2*t0^2", "t2^3 - t1*t3^2"]);
        let rep = acm_check(&c4, 0).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.attempts.len() as u64, RETRY_BUDGET);
        assert!(rep.witness.as_ref().unwrap().verify());
        assert!(artinian_reduce(&c4, 0).is_err());
    }
}
