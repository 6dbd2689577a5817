//! Homogeneous ideals: membership, elimination, quotients, saturation and
//! Hilbert data.

use std::fmt;
use std::sync::{Arc, OnceLock};

use super::basis::{GroebnerBasis, MembershipWitness};
use super::hilbert::{hilbert_data_from_numerator, hilbert_numerator, standard_monomials, HilbertData};
use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Saturation {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    saturated: Saturation,
    basis: OnceLock<Arc<GroebnerBasis>>,
    witness_basis: OnceLock<Arc<GroebnerBasis>>,
}

impl Ideal {
    /// Ideal generated by `generators` (zero generators are dropped). All
    /// generators must live in `ring`; the ring's order is the default order.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Self {
        let generators: Vec<Polynomial> = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert_eq!(g.ring().nvars(), ring.nvars(), "generator from another ring");
                assert_eq!(g.ring().characteristic(), ring.characteristic(), "generator from another ring");
                g.with_order(ring.order())
            })
            .collect();
        Ideal { ring, generators, saturated: Saturation::Unknown, basis: OnceLock::new(), witness_basis: OnceLock::new() }
    }

    pub fn zero(ring: Ring) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: Ring) -> Self {
        Self::new(ring, vec![ring.one()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn saturation_flag(&self) -> Saturation {
        self.saturated
    }

    pub fn with_saturation_flag(mut self, flag: Saturation) -> Self {
        self.saturated = flag;
        self
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// Reduced Gröbner basis in the ring's order, cached.
    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.basis.get_or_init(|| Arc::new(GroebnerBasis::compute(self.ring, &self.generators, false))).clone()
    }

    /// Gröbner basis with transform records, cached.
    pub fn witness_groebner(&self) -> Arc<GroebnerBasis> {
        self.witness_basis
            .get_or_init(|| Arc::new(GroebnerBasis::compute(self.ring, &self.generators, true)))
            .clone()
    }

    pub fn groebner_in(&self, order: MonomialOrder) -> GroebnerBasis {
        if order == self.ring.order() {
            return (*self.groebner()).clone();
        }
        GroebnerBasis::compute(self.ring.with_order(order), &self.generators, false)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner().reduces_to_zero(f)
    }

    /// Membership with an exact witness against the original generators.
    pub fn membership(&self, f: &Polynomial) -> (bool, MembershipWitness) {
        let w = self.witness_groebner().generator_witness(f).expect("transform records present");
        (w.is_member(), w)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner().normal_form(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals, via reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.ring, gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring, gens)
    }

    /// Ideal generated by the reduced Gröbner basis (same ideal, tidier
    /// generators).
    pub fn minimized(&self) -> Ideal {
        let gb = self.groebner();
        let mut out = Ideal::new(self.ring, gb.elements().to_vec());
        out.saturated = self.saturated;
        let _ = out.basis.set(gb);
        out
    }

    /// Applies `t_i ↦ Σ_j M_{ij} t_j` to every generator.
    pub fn apply_linear_change(&self, m: &crate::linalg::Matrix) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| g.apply_linear_change(m)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(self.ring, gens).with_saturation_flag(self.saturated))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner().leading_monomials()
    }

    /// `I ∩ k[t_0..t_{k-1}]`, returned as an ideal of the ring with `k`
    /// variables.
    pub fn elimination_ideal(&self, k: usize) -> Result<Ideal> {
        if k > self.ring.nvars() {
            return Err(AlgebraError::VariableOutOfRange { index: k, nvars: self.ring.nvars() });
        }
        let small = Ring::new(k, self.ring.characteristic())?.with_order(self.ring.order());
        if k == self.ring.nvars() {
            return Ok(self.clone());
        }
        let gb = self.groebner_in(MonomialOrder::Block(k));
        let gens = gb
            .elements()
            .iter()
            .filter(|g| g.lies_in_first(k))
            .map(|g| g.into_ring(small))
            .collect();
        Ok(Ideal::new(small, gens))
    }

    /// Same generators in a ring with more variables.
    pub fn extend_to(&self, nvars: usize) -> Ideal {
        let ring = self.ring.with_nvars(nvars);
        Ideal::new(ring, self.generators.iter().map(|g| g.into_ring(ring)).collect())
    }

    /// Tag-variable intersection with a second list of generators:
    /// `(u·self + (1-u)·others) ∩ k[t]`.
    fn intersect_generators(&self, others: &[Polynomial]) -> Vec<Polynomial> {
        let n = self.ring.nvars();
        let big = self.ring.with_nvars(n + 1).with_order(MonomialOrder::Block(n));
        let u = big.var(n);
        let one_minus_u = &big.one() - &u;
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| &u * &g.into_ring(big)).collect();
        gens.extend(others.iter().map(|g| &one_minus_u * &g.into_ring(big)));
        let gb = GroebnerBasis::compute(big, &gens, false);
        let mut out = Vec::new();
        for g in gb.elements().iter().filter(|g| g.lies_in_first(n)) {
            out.extend(g.into_ring(self.ring).homogeneous_components());
        }
        out
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(self.ring);
        }
        Ideal::new(self.ring, self.intersect_generators(&other.generators)).minimized()
    }

    /// `(I : f) = {g | g f ∈ I}`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(AlgebraError::Precondition("quotient by zero".into()));
        }
        let f = f.with_order(self.ring.order());
        if f.is_constant() || self.is_zero() {
            return Ok(self.clone());
        }
        if self.contains(&f) {
            return Ok(Ideal::unit(self.ring));
        }
        let inter = self.intersect_generators(std::slice::from_ref(&f));
        let gens = inter
            .iter()
            .map(|g| g.exact_div(&f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(self.ring, gens).minimized())
    }

    /// `(I : f^∞)`, iterating quotients until stable.
    pub fn saturation_wrt(&self, f: &Polynomial) -> Result<Ideal> {
        let mut cur = self.minimized();
        loop {
            let next = cur.quotient(f)?;
            if next.contains_ideal(&cur) && cur.contains_ideal(&next) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `(I : 𝔪^∞) = ∩_i (I : t_i^∞)`; the result is flagged saturated.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        if self.saturated == Saturation::Yes {
            return Ok(self.clone());
        }
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous("saturation needs a homogeneous ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for i in 0..self.ring.nvars() {
            let part = self.saturation_wrt(&self.ring.var(i))?;
            if part.is_unit() {
                continue;
            }
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersection(&part),
            });
        }
        let out = acc.unwrap_or_else(|| Ideal::unit(self.ring));
        Ok(out.minimized().with_saturation_flag(Saturation::Yes))
    }

    /// Saturates and reports whether anything changed.
    pub fn saturate_with_flag(&self) -> Result<(Ideal, bool)> {
        let sat = self.saturate_irrelevant()?;
        let changed = !self.contains_ideal(&sat);
        Ok((sat, changed))
    }

    pub fn hilbert_data(&self) -> HilbertData {
        let lms = self.leading_monomials();
        hilbert_data_from_numerator(hilbert_numerator(&lms), self.ring.nvars())
    }

    /// Projective dimension of the scheme (`-1` when empty).
    pub fn projective_dimension(&self) -> i64 {
        self.hilbert_data().projective_dimension
    }

    /// Degree of the scheme.
    pub fn degree(&self) -> i64 {
        self.hilbert_data().degree
    }

    /// Standard monomials of degree `d`: a basis of `(S/I)_d`.
    pub fn graded_piece_basis(&self, d: u32) -> Vec<Monomial> {
        standard_monomials(&self.leading_monomials(), self.ring.nvars(), d)
    }

    pub fn hilbert_function(&self, d: u32) -> usize {
        self.graded_piece_basis(d).len()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
