//! Generic central projection of an ACM scheme together with a vector field
//! leaving a subscheme invariant.
//!
//! After a linear change of coordinates `t = A u`, the center is
//! `V(u_0, ..., u_s)` with `s = n - ℓ - 1` and the target is the
//! `P^s` with coordinates `u_0, ..., u_s`. The Artinian reduction by
//! `u_0, ..., u_{s-1}` makes `S/J` a free module over `k[u_0..u_{s-1}]` with
//! monomial basis `M_1, ..., M_e`; multiplication by `u_s` on that basis
//! gives the matrix whose characteristic polynomial cuts out the image.

use std::collections::HashMap;

use crate::acm::{acm_check, artinian_reduce_with, ArtinianReduction, RETRY_BUDGET};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use crate::polymatrix::PolyMatrix;
use crate::random::Sampler;
use crate::scalar::Scalar;
use crate::vfield::{invariance_check, VectorField};

/// Entry bound for random coordinate changes.
pub const CHANGE_BOUND: i64 = 7;

/// Eliminant, multiplier and the subring images of `B·M_i` for one
/// Artinian reduction of an ACM ideal by the first `s` coordinates.
#[derive(Clone, Debug)]
pub struct Projector {
    pub ideal: Ideal,
    pub reduction: ArtinianReduction,
    /// Index `s` of the distinguished variable.
    pub distinguished: usize,
    pub multiplication: PolyMatrix,
    pub eliminant: Polynomial,
    /// `D_1, ..., D_e`: minors of `u_s - A` without the last row.
    pub cofactors: Vec<Polynomial>,
    pub multiplier: Polynomial,
    /// `B·M_i ≡ images[i] mod J`, each image in `k[u_0..u_s]`.
    pub images: Vec<Polynomial>,
}

fn ring_of(j: &Ideal) -> Ring {
    *j.ring()
}

/// Solves `g ≡ Σ a_j M_j mod J` with `a_j ∈ k[u_0..u_{s-1}]` homogeneous of
/// degree `deg g - w_j`.
fn express_over_parameters(j: &Ideal, red: &ArtinianReduction, s: usize, g: &Polynomial) -> Result<Vec<Polynomial>> {
    let ring = ring_of(j);
    let e = red.basis.len();
    if g.is_zero() {
        return Ok(vec![ring.zero(); e]);
    }
    let Some(delta) = g.degree().filter(|_| g.is_homogeneous()) else {
        return Err(AlgebraError::NotHomogeneous("expression target".into()));
    };
    let gb = j.groebner();
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    let mut columns: Vec<Polynomial> = Vec::new();
    for (idx, (m, &w)) in red.basis.iter().zip(&red.weights).enumerate() {
        if w > delta {
            continue;
        }
        for mu in Monomial::all_of_degree(s, delta - w) {
            let mu = mu.resize(ring.nvars());
            columns.push(gb.normal_form(&ring.monomial(mu.mul(m))));
            unknowns.push((idx, mu));
        }
    }
    let target = gb.normal_form(g);
    let mut rows: HashMap<Monomial, usize> = HashMap::new();
    for p in columns.iter().chain(std::iter::once(&target)) {
        for (m, _) in p.terms() {
            let next = rows.len();
            rows.entry(m.clone()).or_insert(next);
        }
    }
    let p = ring.characteristic();
    let mut mat = Matrix::zeros(rows.len(), columns.len(), p);
    for (c, col) in columns.iter().enumerate() {
        for (m, coeff) in col.terms() {
            mat.set(rows[m], c, coeff.clone());
        }
    }
    let mut rhs = vec![Scalar::zero(p); rows.len()];
    for (m, coeff) in target.terms() {
        rhs[rows[m]] = coeff.clone();
    }
    let sol = mat
        .solve(&rhs)
        .ok_or_else(|| AlgebraError::InconsistentSystem("basis monomials do not generate the quotient".into()))?;
    let mut terms: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); e];
    for ((idx, mu), c) in unknowns.into_iter().zip(sol) {
        if !c.is_zero() {
            terms[idx].push((mu, c));
        }
    }
    Ok(terms.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect())
}

/// `A` with `u_s M_i ≡ Σ_j A_{ij} M_j mod J`, entries in `k[u_0..u_{s-1}]`.
pub fn multiplication_matrix(j: &Ideal, red: &ArtinianReduction) -> Result<PolyMatrix> {
    let ring = ring_of(j);
    let s = red.forms.len();
    if red.forms.iter().enumerate().any(|(i, f)| f != &ring.var(i)) || s >= ring.nvars() {
        return Err(AlgebraError::Precondition("reduction must use the leading coordinates".into()));
    }
    let x = ring.var(s);
    let rows = red
        .basis
        .iter()
        .map(|m| express_over_parameters(j, red, s, &(&x * &ring.monomial(m.clone()))))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::from_rows(ring, rows))
}

/// `det(u_s - A)`.
pub fn eliminant_d(a: &PolyMatrix, distinguished: usize) -> Polynomial {
    a.characteristic_matrix(&a.ring().var(distinguished)).determinant()
}

/// Minors `D_1..D_e` of `u_s - A` with the last row removed, and
/// `B = D_1` (or `1` when `e = 1`).
pub fn multiplier_b(a: &PolyMatrix, distinguished: usize) -> (Vec<Polynomial>, Polynomial) {
    let ring = *a.ring();
    let e = a.rows();
    if e == 1 {
        return (vec![ring.one()], ring.one());
    }
    let t = a.characteristic_matrix(&ring.var(distinguished));
    let cofactors: Vec<Polynomial> = (0..e).map(|c| t.without(e - 1, c).determinant()).collect();
    let b = cofactors[0].clone();
    (cofactors, b)
}

impl Projector {
    /// Builds and checks every identity: the multiplication rows, `D ∈ J`,
    /// the cofactor identities, `B ∉ J` and `deg B = e - r`.
    pub fn new(j: &Ideal, red: ArtinianReduction) -> Result<Self> {
        let ring = ring_of(j);
        let s = red.forms.len();
        let a = multiplication_matrix(j, &red)?;
        let x = ring.var(s);
        for (i, m) in red.basis.iter().enumerate() {
            let lhs = &x * &ring.monomial(m.clone());
            let rhs = red.basis.iter().enumerate().fold(ring.zero(), |acc, (k, mk)| &acc + &(a.get(i, k) * &ring.monomial(mk.clone())));
            if !j.contains(&(&lhs - &rhs)) {
                return Err(AlgebraError::Genericity(format!("multiplication row {} does not verify", i + 1)));
            }
        }
        let d = eliminant_d(&a, s);
        if !j.contains(&d) {
            return Err(AlgebraError::Genericity("eliminant not in the ideal".into()));
        }
        let (cofactors, b) = multiplier_b(&a, s);
        let e = red.basis.len();
        // B M_i + (-1)^i D_i ∈ J for i ≥ 2 (1-indexed)
        let mut images = vec![b.clone()];
        for i in 1..e {
            let img = if i % 2 == 0 { cofactors[i].clone() } else { -&cofactors[i] };
            images.push(img);
        }
        for (i, (m, img)) in red.basis.iter().zip(&images).enumerate() {
            if !j.contains(&(&(&b * &ring.monomial(m.clone())) - img)) {
                return Err(AlgebraError::Genericity(format!("cofactor identity {} does not verify", i + 1)));
            }
        }
        if j.contains(&b) {
            return Err(AlgebraError::Genericity("multiplier lies in the ideal".into()));
        }
        let expected = (e as u32).checked_sub(red.regularity);
        if b.degree() != expected {
            return Err(AlgebraError::Genericity("multiplier has the wrong degree".into()));
        }
        Ok(Projector { ideal: j.clone(), reduction: red, distinguished: s, multiplication: a, eliminant: d, cofactors, multiplier: b, images })
    }

    /// `Ḡ ∈ k[u_0..u_s]` with `B·g - Ḡ ∈ J`, verified before returning.
    pub fn subring_express(&self, g: &Polynomial) -> Result<Polynomial> {
        let ring = ring_of(&self.ideal);
        let coeffs = express_over_parameters(&self.ideal, &self.reduction, self.distinguished, g)?;
        let out = coeffs.iter().zip(&self.images).fold(ring.zero(), |acc, (a, img)| &acc + &(a * img));
        if !self.ideal.contains(&(&(&self.multiplier * g) - &out)) {
            return Err(AlgebraError::Genericity("subring expression does not verify".into()));
        }
        Ok(out)
    }

    pub fn multiplicity(&self) -> usize {
        self.reduction.multiplicity
    }

    pub fn regularity(&self) -> u32 {
        self.reduction.regularity
    }

    /// The target projective space `P^s`.
    pub fn target_ring(&self) -> Result<Ring> {
        Ring::projective(self.distinguished, self.ideal.ring().characteristic())
    }
}

fn random_change(seed: u64, size: usize, p: u64) -> Result<Matrix> {
    Sampler::with_bound(seed, p, CHANGE_BOUND).invertible_matrix(size)
}

fn center_disjoint(i: &Ideal, s: usize) -> bool {
    let ring = ring_of(i);
    let center: Vec<Polynomial> = (0..=s).map(|k| ring.var(k)).collect();
    i.with_generators(&center).projective_dimension() == -1
}

/// Projects `V(I)` from a random center of dimension `ℓ`: returns the
/// elimination ideal in `P^{n-ℓ-1}` and the coordinate change used.
pub fn project_variety(ideal: &Ideal, center_dim: usize, seed: u64) -> Result<(Ideal, Matrix)> {
    let ring = ring_of(ideal);
    let n = ring.nvars() - 1;
    if n < 2 || center_dim > n - 2 {
        return Err(AlgebraError::Precondition(format!("center dimension must be at most {}", n.saturating_sub(2))));
    }
    let s = n - center_dim - 1;
    let degree = ideal.degree();
    for k in 0..RETRY_BUDGET {
        let change = random_change(seed.wrapping_add(k), n + 1, ring.characteristic())?;
        let moved = ideal.apply_linear_change(&change)?;
        if !center_disjoint(&moved, s) {
            continue;
        }
        let image = moved.elimination_ideal(s + 1)?;
        if image.degree() == degree {
            return Ok((image, change));
        }
    }
    Err(AlgebraError::Genericity(format!("no admissible center in {RETRY_BUDGET} draws from seed {seed}")))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjectionChecks {
    /// `W` misses the center, and in fact `J + (u_0..u_{s-1})` is Artinian.
    pub center_disjoint: bool,
    /// `u_s` is a nonzerodivisor on `S/J`.
    pub distinguished_regular: bool,
    /// The image of `W` has degree `e`.
    pub degree_preserved: bool,
    /// `D` generates the elimination ideal of `J` up to a scalar.
    pub eliminant_generates: bool,
    pub field_nonzero: bool,
    pub field_degree: bool,
    pub invariance: bool,
}

#[derive(Clone, Debug)]
pub struct ProjectionCertificate {
    pub center_dim: usize,
    pub seed: u64,
    pub change: Matrix,
    /// The field in the new coordinates, degree `m`.
    pub field: VectorField,
    /// Saturated ideal of `V` in the new coordinates.
    pub ideal_v: Ideal,
    pub projector: Projector,
    /// `Ḡ_0, ..., Ḡ_s` before any fallback, in the big ring.
    pub subring_coefficients: Vec<Polynomial>,
    /// Image of `V` in `P^s`.
    pub projected_ideal: Ideal,
    pub projected_field: VectorField,
    /// The field is `B u_0^m ∂_0` because the image of `V` lies in `V(B)`.
    pub fallback: bool,
    pub checks: ProjectionChecks,
}

impl ProjectionCertificate {
    pub fn projected_degree(&self) -> u32 {
        self.projected_field.degree()
    }

    pub fn eliminant(&self) -> &Polynomial {
        &self.projector.eliminant
    }

    pub fn multiplier(&self) -> &Polynomial {
        &self.projector.multiplier
    }

    /// Re-checks the subring identities and invariance of the output.
    pub fn verify(&self) -> bool {
        let p = &self.projector;
        let identities = self
            .field
            .coefficients()
            .iter()
            .zip(&self.subring_coefficients)
            .all(|(g, gbar)| p.ideal.contains(&(&(&p.multiplier * g) - gbar)));
        let expected_degree = self.field.degree() + p.multiplicity() as u32 - p.regularity();
        let invariant = invariance_check(&self.projected_field, &self.projected_ideal).map(|c| c.verdict).unwrap_or(false);
        identities
            && !self.projected_field.is_zero()
            && self.projected_field.degree() == expected_degree
            && invariant
            && p.ideal.contains(&p.eliminant)
    }
}

struct Inputs {
    v: Ideal,
    w: Ideal,
    s: usize,
}

fn check_inputs(field: &VectorField, v: &Ideal, w: &Ideal, center_dim: usize) -> Result<Inputs> {
    let ring = *field.ring();
    let n = ring.nvars() - 1;
    if n < 2 || center_dim > n - 2 {
        return Err(AlgebraError::Precondition(format!("center dimension must be at most {}", n.saturating_sub(2))));
    }
    if v.ring().nvars() != ring.nvars() || w.ring().nvars() != ring.nvars() {
        return Err(AlgebraError::RingMismatch("field and ideals live in different rings".into()));
    }
    let w = w.saturate_irrelevant()?;
    let v = v.saturate_irrelevant()?;
    if !v.contains_ideal(&w) {
        return Err(AlgebraError::Precondition("V is not contained in W".into()));
    }
    let s = n - center_dim - 1;
    if w.projective_dimension() != s as i64 - 1 {
        return Err(AlgebraError::Precondition(format!("W must have codimension {}", center_dim + 2)));
    }
    if !acm_check(&w, 0)?.verdict {
        return Err(AlgebraError::Precondition("W is not arithmetically Cohen-Macaulay".into()));
    }
    if !invariance_check(field, &v)?.verdict {
        return Err(AlgebraError::Precondition("the field does not leave V invariant".into()));
    }
    Ok(Inputs { v, w, s })
}

fn project_once(field: &VectorField, inputs: &Inputs, center_dim: usize, change: Matrix, seed: u64) -> Result<ProjectionCertificate> {
    let s = inputs.s;
    let j = inputs.w.apply_linear_change(&change)?.minimized();
    let v = inputs.v.apply_linear_change(&change)?.minimized();
    let x = field.apply_linear_change(&change)?;
    let ring = ring_of(&j);
    let mut checks = ProjectionChecks::default();

    let params: Vec<Polynomial> = (0..s).map(|k| ring.var(k)).collect();
    let red = artinian_reduce_with(&j, &params, seed)?;
    checks.center_disjoint = true;
    let u = ring.var(s);
    checks.distinguished_regular = j.quotient(&u)?.same_ideal(&j);
    if !checks.distinguished_regular {
        return Err(AlgebraError::Genericity("distinguished coordinate is a zerodivisor".into()));
    }
    let projector = Projector::new(&j, red)?;
    let e = projector.multiplicity();
    let image_w = j.elimination_ideal(s + 1)?;
    checks.degree_preserved = image_w.degree() == e as i64;
    if !checks.degree_preserved {
        return Err(AlgebraError::Genericity("projection changes the degree".into()));
    }
    let target = projector.target_ring()?;
    let d_small = projector.eliminant.into_ring(target);
    checks.eliminant_generates = image_w.same_ideal(&Ideal::new(target, vec![d_small]));

    let subring_coefficients = x.coefficients()[..=s]
        .iter()
        .map(|g| projector.subring_express(g))
        .collect::<Result<Vec<_>>>()?;
    let projected_ideal = v.elimination_ideal(s + 1)?;
    let m = x.degree();
    let degree = m + e as u32 - projector.regularity();
    let mut projected_field = VectorField::new(target, subring_coefficients.iter().map(|g| g.into_ring(target)).collect(), degree)?;
    let mut fallback = false;
    if projected_field.is_zero() {
        let b = projector.multiplier.into_ring(target);
        if !projected_ideal.contains(&b) {
            return Err(AlgebraError::Genericity("projected field vanishes".into()));
        }
        let mut coeffs = vec![target.zero(); s + 1];
        coeffs[0] = &b * &target.var(0).pow(m);
        projected_field = VectorField::new(target, coeffs, degree)?;
        fallback = true;
    }
    checks.field_nonzero = !projected_field.is_zero();
    checks.field_degree = projected_field.degree() == degree;
    checks.invariance = invariance_check(&projected_field, &projected_ideal)?.verdict;
    if !checks.invariance {
        return Err(AlgebraError::Genericity("projected field does not leave the image invariant".into()));
    }
    Ok(ProjectionCertificate {
        center_dim,
        seed,
        change,
        field: x,
        ideal_v: v,
        projector,
        subring_coefficients,
        projected_ideal,
        projected_field,
        fallback,
        checks,
    })
}

/// Projection with a fixed coordinate change; no redraws.
pub fn project_field_with_change(
    field: &VectorField,
    v: &Ideal,
    w: &Ideal,
    center_dim: usize,
    change: Matrix,
) -> Result<ProjectionCertificate> {
    let inputs = check_inputs(field, v, w, center_dim)?;
    project_once(field, &inputs, center_dim, change, 0)
}

/// Projects `field`, which leaves `V ⊆ W` invariant, from a random center of
/// dimension `ℓ`, redrawing the center up to the retry budget.
pub fn project_field(field: &VectorField, v: &Ideal, w: &Ideal, center_dim: usize, seed: u64) -> Result<ProjectionCertificate> {
    let inputs = check_inputs(field, v, w, center_dim)?;
    let n1 = field.ring().nvars();
    let mut failures = Vec::new();
    for k in 0..RETRY_BUDGET {
        let draw = seed.wrapping_add(k);
        let change = random_change(draw, n1, field.characteristic())?;
        match project_once(field, &inputs, center_dim, change, draw) {
            Ok(cert) => return Ok(cert),
            Err(e @ (AlgebraError::Genericity(_) | AlgebraError::InconsistentSystem(_))) => {
                failures.push(format!("seed {draw}: {e}"))
            }
            Err(e) => return Err(e),
        }
    }
    Err(AlgebraError::Genericity(failures.join("; ")))
}
