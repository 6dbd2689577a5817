//! Vector fields on `P^n`, induced by homogeneous tuples `(G_0, ..., G_n)`
//! modulo multiples of the radial field `Σ t_i ∂_i`.
//!
//! Two tuples induce the same field exactly when all their 2×2 minors
//! `t_i G_j - t_j G_i` agree, so equality and zero tests go through the
//! minors and never pick a normal form.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::groebner::{Ideal, MembershipWitness};
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    ring: Ring,
    degree: u32,
    coefficients: Vec<Polynomial>,
}

impl VectorField {
    /// Field with the given coefficients, all homogeneous of `degree` (zero
    /// coefficients allowed).
    pub fn new(ring: Ring, coefficients: Vec<Polynomial>, degree: u32) -> Result<Self> {
        if coefficients.len() != ring.nvars() {
            return Err(AlgebraError::RingMismatch(format!(
                "field needs {} coefficients, got {}",
                ring.nvars(),
                coefficients.len()
            )));
        }
        for (i, g) in coefficients.iter().enumerate() {
            if g.ring().nvars() != ring.nvars() || g.ring().characteristic() != ring.characteristic() {
                return Err(AlgebraError::RingMismatch(format!("coefficient {i} from another ring")));
            }
            if !g.is_zero() && (!g.is_homogeneous() || g.degree() != Some(degree)) {
                return Err(AlgebraError::NotHomogeneous(format!(
                    "coefficient {i} is not homogeneous of degree {degree}"
                )));
            }
        }
        let coefficients = coefficients.into_iter().map(|g| g.with_order(ring.order())).collect();
        Ok(VectorField { ring, degree, coefficients })
    }

    /// Degree inferred from the first nonzero coefficient.
    pub fn from_coefficients(ring: Ring, coefficients: Vec<Polynomial>) -> Result<Self> {
        let degree = coefficients
            .iter()
            .find_map(Polynomial::degree)
            .ok_or_else(|| AlgebraError::Precondition("cannot infer the degree of an all-zero tuple".into()))?;
        Self::new(ring, coefficients, degree)
    }

    /// The field `h · Σ t_i ∂_i`.
    pub fn radial(ring: Ring, h: &Polynomial) -> Result<Self> {
        let deg = h.degree().map_or(0, |d| d + 1);
        Self::new(ring, ring.vars().iter().map(|t| t * h).collect(), deg)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.nvars() - 1
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    /// `t_i G_j - t_j G_i` for `i < j`, in lexicographic order of `(i, j)`.
    pub fn minors(&self) -> Vec<Polynomial> {
        let t = self.ring.vars();
        let g = &self.coefficients;
        let mut out = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                out.push(&(&t[i] * &g[j]) - &(&t[j] * &g[i]));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.minors().iter().all(Polynomial::is_zero)
    }

    /// Same field on `P^n` (minor equality).
    pub fn equivalent(&self, other: &VectorField) -> bool {
        self.ring.nvars() == other.ring.nvars() && self.minors() == other.minors()
    }

    /// Same field up to a nonzero scalar factor.
    pub fn proportional(&self, other: &VectorField) -> bool {
        let (a, b) = (self.minors(), other.minors());
        if a.len() != b.len() {
            return false;
        }
        let pivot = a.iter().zip(&b).find(|(x, y)| !x.is_zero() || !y.is_zero());
        let Some((x, y)) = pivot else { return true };
        if x.is_zero() || y.is_zero() {
            return false;
        }
        let c = x.leading_coefficient().unwrap().checked_div(y.leading_coefficient().unwrap()).unwrap();
        a.iter().zip(&b).all(|(x, y)| x == &y.scale(&c))
    }

    /// Adds `h · (t_0, ..., t_n)`, which leaves the field unchanged.
    pub fn add_radial(&self, h: &Polynomial) -> Result<VectorField> {
        let coeffs = self.coefficients.iter().zip(self.ring.vars()).map(|(g, t)| g + &(&t * h)).collect();
        Self::new(self.ring, coeffs, self.degree)
    }

    pub fn scale(&self, c: &Scalar) -> VectorField {
        VectorField { ring: self.ring, degree: self.degree, coefficients: self.coefficients.iter().map(|g| g.scale(c)).collect() }
    }

    /// The derivation `Σ G_i ∂_i f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let f = f.with_order(self.ring.order());
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .fold(self.ring.zero(), |acc, (i, g)| &acc + &(g * &f.partial_derivative(i)))
    }

    /// The field in the coordinates given by `t_i ↦ Σ_j M_{ij} t_j`: if `X`
    /// leaves `V(I)` invariant then the result leaves `V(I ∘ M)` invariant.
    pub fn apply_linear_change(&self, m: &Matrix) -> Result<VectorField> {
        let inv = m.inverse()?;
        let substituted: Vec<Polynomial> = self.coefficients.iter().map(|g| g.substitute_linear(m)).collect();
        let coeffs = (0..self.ring.nvars())
            .map(|j| {
                substituted.iter().enumerate().fold(self.ring.zero(), |acc, (i, g)| {
                    let c = inv.get(j, i);
                    if c.is_zero() { acc } else { &acc + &g.scale(c) }
                })
            })
            .collect();
        Self::new(self.ring, coeffs, self.degree)
    }

    /// Ideal of the 2×2 minors of `[t; G]`, saturated.
    pub fn singular_scheme(&self) -> Result<Ideal> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroField);
        }
        Ideal::new(self.ring, self.minors()).saturate_irrelevant()
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

/// One generator `F` of the saturated ideal, its image `X(F)` and the
/// division witness of the image against the saturated generators.
#[derive(Clone, Debug)]
pub struct GeneratorCheck {
    pub generator: Polynomial,
    pub image: Polynomial,
    pub witness: MembershipWitness,
}

#[derive(Clone, Debug)]
pub struct InvarianceCertificate {
    pub verdict: bool,
    pub saturated_ideal: Ideal,
    /// Saturation enlarged the input ideal.
    pub saturation_changed: bool,
    /// Verdict of the generator-level test on the ideal as given; only
    /// meaningful as a diagnostic when the input was not saturated.
    pub raw_generator_test: bool,
    pub checks: Vec<GeneratorCheck>,
    /// `P` with `X(F) = P F` when the saturated ideal is principal.
    pub multiplier: Option<Polynomial>,
}

impl InvarianceCertificate {
    /// Re-expands every witness identity.
    pub fn verify(&self, field: &VectorField) -> bool {
        let gens = self.saturated_ideal.generators();
        let identities = self.checks.iter().all(|c| field.apply(&c.generator) == c.image && c.witness.verify(&c.image, gens));
        let verdict = self.checks.iter().all(|c| c.witness.is_member());
        let multiplier = match (&self.multiplier, gens) {
            (Some(p), [f]) => p * f == field.apply(f),
            (None, _) => true,
            _ => false,
        };
        identities && verdict == self.verdict && multiplier
    }
}

/// Decides whether `field` leaves the scheme of `ideal` invariant, saturating
/// the ideal first.
pub fn invariance_check(field: &VectorField, ideal: &Ideal) -> Result<InvarianceCertificate> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous("invariance needs a homogeneous ideal".into()));
    }
    if ideal.is_unit() {
        return Err(AlgebraError::Precondition("ideal is the unit ideal".into()));
    }
    let raw_generator_test = ideal.generators().iter().all(|f| ideal.contains(&field.apply(f)));
    let (sat, saturation_changed) = ideal.saturate_with_flag()?;
    let sat = sat.minimized();
    let checks: Vec<GeneratorCheck> = sat
        .generators()
        .iter()
        .map(|f| {
            let image = field.apply(f);
            let (_, witness) = sat.membership(&image);
            GeneratorCheck { generator: f.clone(), image, witness }
        })
        .collect();
    let verdict = checks.iter().all(|c| c.witness.is_member());
    let multiplier = match sat.generators() {
        [f] if verdict => Some(field.apply(f).exact_div(f)?),
        _ => None,
    };
    Ok(InvarianceCertificate { verdict, saturated_ideal: sat, saturation_changed, raw_generator_test, checks, multiplier })
}

/// Degree of `X(λ)` restricted to the hyperplane `V(λ)`.
pub fn tangency_degree(field: &VectorField, lambda: &Polynomial) -> Result<u32> {
    if lambda.degree() != Some(1) || !lambda.is_homogeneous() {
        return Err(AlgebraError::Precondition("expected a nonzero linear form".into()));
    }
    if field.is_zero() {
        return Err(AlgebraError::ZeroField);
    }
    let hyperplane = Ideal::new(field.ring, vec![lambda.clone()]);
    let restricted = hyperplane.normal_form(&field.apply(lambda));
    restricted.degree().ok_or(AlgebraError::InvariantHyperplane)
}

/// Coefficients `P_{i,j}` (`i < j`) of a trivial field, all homogeneous of
/// one common degree, which may be negative only when every entry is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCoefficients {
    size: usize,
    degree: i64,
    entries: Vec<Polynomial>,
}

impl SkewCoefficients {
    pub fn zero(ring: Ring, degree: i64) -> Self {
        let size = ring.nvars();
        SkewCoefficients { size, degree, entries: vec![ring.zero(); size * size] }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < j && j < self.size, "entries are indexed by i < j");
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(i < j && j < self.size, "entries are indexed by i < j");
        self.entries[i * self.size + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }
}

/// `Σ_{i<j} P_{i,j} (∂_j F ∂_i - ∂_i F ∂_j)`, which always leaves `V(F)`
/// invariant.
pub fn trivial_field(f: &Polynomial, p: &SkewCoefficients) -> Result<VectorField> {
    let ring = *f.ring();
    if !f.is_homogeneous() || f.is_zero() {
        return Err(AlgebraError::NotHomogeneous("hypersurface equation".into()));
    }
    if p.size != ring.nvars() {
        return Err(AlgebraError::RingMismatch("coefficient matrix size".into()));
    }
    for e in &p.entries {
        if !e.is_zero() && (!e.is_homogeneous() || e.degree().map(i64::from) != Some(p.degree)) {
            return Err(AlgebraError::NotHomogeneous(format!("entries must be homogeneous of degree {}", p.degree)));
        }
    }
    let d = f.degree().unwrap() as i64;
    let field_degree = p.degree + d - 1;
    if field_degree < 0 {
        return Err(AlgebraError::Precondition("negative field degree".into()));
    }
    let grad = f.gradient();
    let n1 = ring.nvars();
    let coeffs = (0..n1)
        .map(|i| {
            let mut g = ring.zero();
            for j in i + 1..n1 {
                g = &g + &(p.get(i, j) * &grad[j]);
            }
            for j in 0..i {
                g = &g - &(p.get(j, i) * &grad[j]);
            }
            g
        })
        .collect();
    VectorField::new(ring, coeffs, field_degree as u32)
}

/// Writes a field leaving the smooth hypersurface `V(F)` invariant as a
/// trivial field (`p ∤ deg F`). The coefficients are not unique; only the
/// field they induce is.
pub fn koszul_decompose(field: &VectorField, f: &Polynomial) -> Result<SkewCoefficients> {
    let ring = *f.ring();
    let Some(d) = f.degree().filter(|_| f.is_homogeneous()) else {
        return Err(AlgebraError::NotHomogeneous("hypersurface equation".into()));
    };
    let p = ring.characteristic();
    if p != 0 && (d as u64).is_multiple_of(p) {
        return Err(AlgebraError::CharacteristicDividesDegree { p, d });
    }
    let grad = f.gradient();
    if Ideal::new(ring, grad.clone()).projective_dimension() != -1 {
        return Err(AlgebraError::SingularHypersurface);
    }
    let image = field.apply(f);
    let multiplier = image.exact_div(f).map_err(|_| AlgebraError::NotInvariant)?;

    // G'_i = G_i - P t_i / d satisfies Σ G'_i ∂_i F = 0
    let inv_d = ring.scalar(d as i64).inv()?;
    let shift = multiplier.scale(&inv_d);
    let mut rel: Vec<Polynomial> =
        field.coefficients().iter().zip(ring.vars()).map(|(g, t)| g - &(&t * &shift)).collect();

    let q = field.degree() as i64 - d as i64 + 1;
    let mut out = SkewCoefficients::zero(ring, q);
    for k in (1..ring.nvars()).rev() {
        if rel[k].is_zero() {
            continue;
        }
        // ∂_k F is a nonzerodivisor modulo the earlier partials
        let earlier = Ideal::new(ring, grad[..k].to_vec());
        let (member, witness) = earlier.membership(&rel[k]);
        if !member || q < 0 {
            return Err(AlgebraError::Indeterminate("relation does not peel against the partials".into()));
        }
        for i in 0..k {
            let qi = witness.cofactors[i].homogeneous_component(q as u32);
            if qi.is_zero() {
                continue;
            }
            rel[i] = &rel[i] + &(&qi * &grad[k]);
            out.set(i, k, -&qi);
        }
        rel[k] = ring.zero();
    }
    if !rel[0].is_zero() {
        return Err(AlgebraError::Indeterminate("nonzero residual relation".into()));
    }
    Ok(out)
}

/// Smallest degree of a nonzero field leaving `V(F)` invariant, found by
/// solving `Σ G_i ∂_i F = P F` degree by degree and discarding radial
/// solutions.
pub fn min_invariant_degree(f: &Polynomial) -> Result<u32> {
    let ring = *f.ring();
    let Some(d) = f.degree().filter(|_| f.is_homogeneous()) else {
        return Err(AlgebraError::NotHomogeneous("hypersurface equation".into()));
    };
    if d == 0 {
        return Err(AlgebraError::Precondition("constant polynomial".into()));
    }
    let n1 = ring.nvars();
    let grad = f.gradient();
    for q in 0..=d {
        let target = Monomial::all_of_degree(n1, q + d - 1);
        let row_of = |m: &Monomial| target.iter().position(|t| t == m).expect("degree-compatible monomial");
        let g_basis = Monomial::all_of_degree(n1, q);
        let p_basis = if q == 0 { Vec::new() } else { Monomial::all_of_degree(n1, q - 1) };
        let mut columns: Vec<Polynomial> = Vec::new();
        for dg in &grad {
            for mu in &g_basis {
                columns.push(dg * &ring.monomial(mu.clone()));
            }
        }
        for nu in &p_basis {
            columns.push(-(f * &ring.monomial(nu.clone())));
        }
        let mut m = Matrix::zeros(target.len(), columns.len(), ring.characteristic());
        for (c, col) in columns.iter().enumerate() {
            for (mono, coeff) in col.terms() {
                m.set(row_of(mono), c, coeff.clone());
            }
        }
        let solutions = m.nullspace().len();
        if solutions > p_basis.len() {
            return Ok(q);
        }
    }
    Err(AlgebraError::Indeterminate("no invariant field up to degree d".into()))
}

/// Field of degree `d - 2` leaving a plane curve of degree `d` invariant when
/// `p | d`, from a decomposition `F = t_0 H_0 + t_1 H_1 + t_2 H_2`.
pub fn remark14_field(f: &Polynomial) -> Result<VectorField> {
    let ring = *f.ring();
    if ring.nvars() != 3 {
        return Err(AlgebraError::Precondition("plane curves only".into()));
    }
    let Some(d) = f.degree().filter(|_| f.is_homogeneous()) else {
        return Err(AlgebraError::NotHomogeneous("curve equation".into()));
    };
    let p = ring.characteristic();
    if p == 0 || !(d as u64).is_multiple_of(p) {
        return Err(AlgebraError::CharacteristicDoesNotDivideDegree { p, d });
    }
    // greedy: each term goes to the first variable dividing it
    let mut h: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); 3];
    for (m, c) in f.terms() {
        let i = (0..3).find(|&i| m.exponent(i) > 0).expect("nonconstant term");
        h[i].push((m.with_exponent(i, m.exponent(i) - 1), c.clone()));
    }
    let h: Vec<Polynomial> = h.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect();
    let g0 = &h[2].partial_derivative(1) - &h[1].partial_derivative(2);
    let g1 = &h[0].partial_derivative(2) - &h[2].partial_derivative(0);
    let g2 = &h[1].partial_derivative(0) - &h[0].partial_derivative(1);
    VectorField::new(ring, vec![g0, g1, g2], d - 2)
}

/// True when the scheme of `ideal` contains only finitely many singular
/// points of `field`.
pub fn finite_field_singularities_on(ideal: &Ideal, field: &VectorField) -> Result<bool> {
    let sing = field.singular_scheme()?;
    Ok(ideal.sum(&sing).projective_dimension() <= 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly;

    fn field(r: &Ring, coeffs: &[&str]) -> VectorField {
        VectorField::from_coefficients(*r, coeffs.iter().map(|c| poly(r, c)).collect()).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(*r, gens.iter().map(|g| poly(r, g)).collect())
    }

    #[test]
    fn zero_fields() {
        let r = Ring::projective(2, 0).unwrap();
        assert!(field(&r, &["t0", "t1", "t2"]).is_zero());
        assert!(!field(&r, &["0", "1", "0"]).is_zero());
        let h = poly(&r, "t0^2 - 3*t1*t2");
        assert!(VectorField::radial(r, &h).unwrap().is_zero());
    }

    #[test]
    fn construction_errors() {
        let r = Ring::projective(3, 0).unwrap();
        let e = VectorField::from_coefficients(r, vec![r.var(0), r.var(1)]);
        assert!(matches!(e, Err(AlgebraError::RingMismatch(_))));
        let e = VectorField::new(r, vec![r.var(0), r.var(1).pow(2), r.zero(), r.zero()], 1);
        assert!(matches!(e, Err(AlgebraError::NotHomogeneous(_))));
    }

    #[test]
    fn singular_scheme_of_constant_field() {
        let r = Ring::projective(2, 0).unwrap();
        let s = field(&r, &["0", "1", "0"]).singular_scheme().unwrap();
        assert!(s.same_ideal(&ideal(&r, &["t0", "t2"])));
        assert_eq!(field(&r, &["t0", "t1", "t2"]).singular_scheme().unwrap_err(), AlgebraError::ZeroField);
    }

    #[test]
    fn hyperplane_invariance_and_saturation_caveat() {
        let r = Ring::projective(3, 0).unwrap();
        let d1 = field(&r, &["0", "1", "0", "0"]);
        let cert = invariance_check(&d1, &ideal(&r, &["t0"])).unwrap();
        assert!(cert.verdict && cert.verify(&d1));
        assert_eq!(cert.multiplier, Some(r.zero()));
        let unsat = ideal(&r, &["t0^2", "t0*t1", "t0*t2", "t0*t3"]);
        let cert = invariance_check(&d1, &unsat).unwrap();
        assert!(cert.verdict);
        assert!(!cert.raw_generator_test);
        assert!(cert.saturation_changed);
        assert!(cert.verify(&d1));
    }

    #[test]
    fn tangency() {
        let r = Ring::projective(2, 0).unwrap();
        let x = field(&r, &["t1^2", "t0*t2 + t2^2", "t0^2 - t1*t2"]);
        assert_eq!(tangency_degree(&x, &poly(&r, "3*t0 - 2*t1 + 7*t2")).unwrap(), 2);
        let d1 = field(&r, &["0", "1", "0"]);
        assert_eq!(tangency_degree(&d1, &poly(&r, "t1")).unwrap(), 0);
        assert_eq!(tangency_degree(&d1, &poly(&r, "t0")).unwrap_err(), AlgebraError::InvariantHyperplane);
        let radial = field(&r, &["t0", "t1", "t2"]);
        assert_eq!(tangency_degree(&radial, &poly(&r, "t0 + t1")).unwrap_err(), AlgebraError::ZeroField);
    }

    #[test]
    fn trivial_fields() {
        let r = Ring::projective(2, 0).unwrap();
        let f = poly(&r, "t0^3 + t1^3 + t2^3");
        let mut p = SkewCoefficients::zero(r, 0);
        p.set(0, 1, r.one());
        let x = trivial_field(&f, &p).unwrap();
        assert!(x.equivalent(&field(&r, &["3*t1^2", "-3*t0^2", "0"])));
        assert!(x.apply(&f).is_zero());
        assert!(trivial_field(&f, &SkewCoefficients::zero(r, 0)).unwrap().is_zero());

        let g = poly(&r, "t0*t1");
        let y = trivial_field(&g, &p).unwrap();
        assert!(y.equivalent(&field(&r, &["t0", "-t1", "0"])));
        assert!(invariance_check(&y, &ideal(&r, &["t0*t1"])).unwrap().verdict);
    }

    #[test]
    fn koszul_examples() {
        let r = Ring::projective(2, 0).unwrap();
        let f = poly(&r, "t0^3 + t1^3 + t2^3");
        let x = field(&r, &["3*t1^2", "-3*t0^2", "0"]);
        let p = koszul_decompose(&x, &f).unwrap();
        assert!(trivial_field(&f, &p).unwrap().equivalent(&x));
        let radial = field(&r, &["t0", "t1", "t2"]);
        assert!(koszul_decompose(&radial, &f).unwrap().is_zero());

        let cone = poly(&r, "t0*t1^2 + t1^3");
        assert_eq!(koszul_decompose(&x, &cone).unwrap_err(), AlgebraError::SingularHypersurface);
        let r3 = Ring::projective(2, 3).unwrap();
        let f3 = poly(&r3, "t0^3 + t1^3 + t2^3");
        let x3 = field(&r3, &["t1^2", "t0^2", "0"]);
        assert!(matches!(koszul_decompose(&x3, &f3), Err(AlgebraError::CharacteristicDividesDegree { .. })));
        let not_inv = field(&r, &["t1", "0", "0"]);
        assert_eq!(koszul_decompose(&not_inv, &f).unwrap_err(), AlgebraError::NotInvariant);
    }

    #[test]
    fn q_invariant_examples() {
        let r = Ring::projective(2, 0).unwrap();
        assert_eq!(min_invariant_degree(&poly(&r, "t0^4 + t1^4 + t2^4")).unwrap(), 3);
        assert_eq!(min_invariant_degree(&poly(&r, "t0*t1^2 + t1^3")).unwrap(), 0);
        assert_eq!(min_invariant_degree(&poly(&r, "t0*t1^2 - t2^3")).unwrap(), 1);
        assert!(min_invariant_degree(&r.int(5)).is_err());
    }

    #[test]
    fn jouanolou_from_decomposition() {
        let r = Ring::projective(2, 2).unwrap();
        let f = poly(&r, "t2^3*t0 + t0^3*t1 + t1^3*t2");
        let x = remark14_field(&f).unwrap();
        assert_eq!(x.degree(), 2);
        assert!(x.equivalent(&field(&r, &["t1^2", "t2^2", "t0^2"])));
        assert!(invariance_check(&x, &ideal(&r, &["t2^3*t0 + t0^3*t1 + t1^3*t2"])).unwrap().verdict);

        let r3 = Ring::projective(2, 3).unwrap();
        let x = remark14_field(&poly(&r3, "t0^3")).unwrap();
        assert!(x.is_zero());
        let r0 = Ring::projective(2, 0).unwrap();
        assert!(remark14_field(&poly(&r0, "t0^4")).is_err());
    }

    #[test]
    fn finite_singularities() {
        let r = Ring::projective(3, 0).unwrap();
        let x3 = field(&r, &["3*t0", "t1", "-t2", "-3*t3"]);
        let tc = ideal(&r, &["t1*t2 - t0*t3", "t1^2 - t0*t2", "t2^2 - t1*t3"]);
        assert!(finite_field_singularities_on(&tc, &x3).unwrap());
        let along_line = field(&r, &["0", "0", "t0", "t1"]);
        assert!(!finite_field_singularities_on(&ideal(&r, &["t0"]), &along_line).unwrap());
        assert!(finite_field_singularities_on(&Ideal::unit(r), &x3).unwrap());
    }

    #[test]
    fn linear_change_preserves_invariance() {
        let r = Ring::projective(3, 0).unwrap();
        let x3 = field(&r, &["3*t0", "t1", "-t2", "-3*t3"]);
        let tc = ideal(&r, &["t1*t2 - t0*t3", "t1^2 - t0*t2", "t2^2 - t1*t3"]);
        let m = Matrix::from_i64(&[vec![1, 2, 0, 1], vec![0, 1, 3, 0], vec![1, 0, 1, 1], vec![0, 1, 0, 2]], 0);
        let xc = x3.apply_linear_change(&m).unwrap();
        let tcc = tc.apply_linear_change(&m).unwrap();
        assert!(invariance_check(&xc, &tcc).unwrap().verdict);
    }
}
