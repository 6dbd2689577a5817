//! Verdicts for degree and regularity bounds on invariant varieties, with
//! an explicit hypothesis checklist, plus plane-curve singularity
//! diagnostics.

use std::fmt;

use crate::acm::{acm_check, regularity_acm, RETRY_BUDGET};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::linalg::Matrix;
use crate::poly::{Polynomial, Ring};
use crate::polymatrix::PolyMatrix;
use crate::project::{project_variety, CHANGE_BOUND};
use crate::random::Sampler;
use crate::scalar::Scalar;
use crate::vfield::{finite_field_singularities_on, invariance_check, VectorField};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    One,
    OneStar,
    Corollary2,
    Three,
    Eighteen,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::One => "1",
            Theorem::OneStar => "1*",
            Theorem::Corollary2 => "2",
            Theorem::Three => "3",
            Theorem::Eighteen => "18",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Assumed,
    Failed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Assumed => "assumed",
            Status::Failed => "failed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

fn hyp(name: &'static str, status: Status, detail: impl Into<String>) -> Hypothesis {
    Hypothesis { name, status, detail: detail.into() }
}

fn check(name: &'static str, ok: bool, detail: impl Into<String>) -> Hypothesis {
    hyp(name, if ok { Status::Verified } else { Status::Failed }, detail)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Strict,
    Equality,
    Violated,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Strict => "holds (strict)",
            Verdict::Equality => "holds (equality)",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not applicable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reducibility {
    Reducible,
    IrreducibleAssumed,
    Unknown,
}

impl fmt::Display for Reducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reducibility::Reducible => "reducible",
            Reducibility::IrreducibleAssumed => "irreducible (assumed)",
            Reducibility::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub theorem: Theorem,
    pub inequality: &'static str,
    pub quantities: Vec<(&'static str, i64)>,
    pub hypotheses: Vec<Hypothesis>,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub verdict: Verdict,
    pub reducible: Reducibility,
    /// The characteristic divides the relevant degree.
    pub characteristic_divides: bool,
}

impl BoundReport {
    fn finish(
        theorem: Theorem,
        inequality: &'static str,
        quantities: Vec<(&'static str, i64)>,
        hypotheses: Vec<Hypothesis>,
        sides: Option<(i64, i64)>,
        reducible: Reducibility,
        characteristic_divides: bool,
    ) -> Self {
        let failed = hypotheses.iter().any(|h| h.status == Status::Failed);
        let verdict = match sides {
            _ if failed => Verdict::NotApplicable,
            None => Verdict::NotApplicable,
            Some((l, r)) if l < r => Verdict::Strict,
            Some((l, r)) if l == r => Verdict::Equality,
            Some(_) => Verdict::Violated,
        };
        BoundReport {
            theorem,
            inequality,
            quantities,
            hypotheses,
            lhs: sides.map(|s| s.0),
            rhs: sides.map(|s| s.1),
            verdict,
            reducible,
            characteristic_divides,
        }
    }

    pub fn quantity(&self, name: &str) -> Option<i64> {
        self.quantities.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }

    pub fn all_verified(&self) -> bool {
        self.hypotheses.iter().all(|h| h.status != Status::Failed)
    }

    /// Equality is only allowed for reducible input or when `p` divides
    /// the degree.
    pub fn equality_explained(&self) -> Option<bool> {
        (self.verdict == Verdict::Equality)
            .then(|| self.reducible == Reducibility::Reducible || self.characteristic_divides)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem: {}", self.theorem)?;
        writeln!(f, "inequality: {}", self.inequality)?;
        for (k, v) in &self.quantities {
            writeln!(f, "{k}: {v}")?;
        }
        for h in &self.hypotheses {
            if h.detail.is_empty() {
                writeln!(f, "hypothesis {}: {}", h.name, h.status)?;
            } else {
                writeln!(f, "hypothesis {}: {} ({})", h.name, h.status, h.detail)?;
            }
        }
        if let (Some(l), Some(r)) = (self.lhs, self.rhs) {
            writeln!(f, "values: {l} <= {r}")?;
        }
        writeln!(f, "reducible: {}", self.reducible)?;
        writeln!(f, "characteristic_divides: {}", self.characteristic_divides)?;
        write!(f, "verdict: {}", self.verdict)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodalVerdict {
    Smooth,
    Nodal,
    NotNodal,
    Indeterminate,
}

impl fmt::Display for NodalVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodalVerdict::Smooth => "smooth",
            NodalVerdict::Nodal => "nodal",
            NodalVerdict::NotNodal => "not nodal",
            NodalVerdict::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Clone, Debug)]
pub struct NodalReport {
    pub verdict: NodalVerdict,
    pub singular_scheme: Ideal,
    /// Length of the singular scheme when it is finite.
    pub singular_degree: Option<i64>,
}

fn random_change(seed: u64, size: usize, p: u64) -> Result<Matrix> {
    Sampler::with_bound(seed, p, CHANGE_BOUND).invertible_matrix(size)
}

/// A binary form is squarefree when it has no common zero with both
/// partials.
fn binary_form_squarefree(d: &Polynomial) -> bool {
    let mut gens = vec![d.clone()];
    gens.extend(d.gradient());
    Ideal::new(*d.ring(), gens).projective_dimension() == -1
}

/// Classifies the singularities of a plane curve `V(F)`: the singular
/// scheme must be finite and reduced, which is tested on generic
/// projections to a line.
pub fn nodal_diagnostic(f: &Polynomial, seed: u64) -> Result<NodalReport> {
    let ring = *f.ring();
    if ring.nvars() != 3 || !f.is_homogeneous() || f.degree().unwrap_or(0) == 0 {
        return Err(AlgebraError::Precondition("expected a plane curve equation".into()));
    }
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    let sigma = Ideal::new(ring, gens).saturate_irrelevant()?;
    let dim = sigma.projective_dimension();
    let report = |verdict, singular_degree| NodalReport { verdict, singular_scheme: sigma.clone(), singular_degree };
    if dim == -1 {
        return Ok(report(NodalVerdict::Smooth, Some(0)));
    }
    if dim > 0 {
        return Ok(report(NodalVerdict::NotNodal, None));
    }
    let length = sigma.degree();
    let mut inconclusive = false;
    for k in 0..RETRY_BUDGET {
        let change = random_change(seed.wrapping_add(k), 3, ring.characteristic())?;
        let image = sigma.apply_linear_change(&change)?.elimination_ideal(2)?.minimized();
        let [d] = image.generators() else {
            inconclusive = true;
            continue;
        };
        if d.degree() == Some(length as u32) && binary_form_squarefree(d) {
            return Ok(report(NodalVerdict::Nodal, Some(length)));
        }
    }
    let verdict = if inconclusive { NodalVerdict::Indeterminate } else { NodalVerdict::NotNodal };
    Ok(report(verdict, Some(length)))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k × k` minors of the Jacobian matrix of `gens`.
pub fn jacobian_minors(ring: &Ring, gens: &[Polynomial], k: usize) -> Vec<Polynomial> {
    let jac: Vec<Vec<Polynomial>> = gens.iter().map(Polynomial::gradient).collect();
    let mut out = Vec::new();
    for rows in combinations(gens.len(), k) {
        for cols in combinations(ring.nvars(), k) {
            let m = PolyMatrix::from_rows(*ring, rows.iter().map(|&r| cols.iter().map(|&c| jac[r][c].clone()).collect()).collect());
            let det = m.determinant();
            if !det.is_zero() {
                out.push(det);
            }
        }
    }
    out
}

/// Jacobian criterion: points of `V(I)` where the Jacobian has rank
/// below `rank`.
fn low_rank_locus(ideal: &Ideal, rank: usize) -> Ideal {
    if rank == 0 {
        return Ideal::unit(*ideal.ring());
    }
    let gens = ideal.minimized().generators().to_vec();
    ideal.with_generators(&jacobian_minors(ideal.ring(), &gens, rank))
}

/// Smoothness of an equidimensional saturated ideal.
pub fn is_smooth(ideal: &Ideal) -> bool {
    let codim = ideal.ring().nvars() as i64 - 1 - ideal.projective_dimension();
    low_rank_locus(ideal, codim as usize).projective_dimension() == -1
}

/// Plane equation of a curve spanning at most a plane: the curve itself in
/// `P^2`, or its equation in coordinates on the plane it lies in.
pub fn plane_equation(curve: &Ideal) -> Result<Option<Polynomial>> {
    let ring = *curve.ring();
    let sat = curve.saturate_irrelevant()?;
    if sat.projective_dimension() != 1 {
        return Ok(None);
    }
    let n = ring.nvars() - 1;
    if n == 2 {
        return Ok(match sat.generators() {
            [f] => Some(f.clone()),
            _ => None,
        });
    }
    let linear: Vec<&Polynomial> = sat.generators().iter().filter(|g| g.degree() == Some(1)).collect();
    if linear.len() != n - 2 {
        return Ok(None);
    }
    let p = ring.characteristic();
    let mut coeffs = Matrix::from_rows(
        linear.iter().map(|l| (0..=n).map(|i| l.coefficient(&crate::monomial::Monomial::variable(n + 1, i))).collect()).collect(),
        p,
    );
    let pivots = coeffs.row_reduce();
    let free: Vec<usize> = (0..=n).filter(|c| !pivots.contains(c)).collect();
    let plane = Ring::projective(2, p)?;
    let mut images = vec![plane.zero(); n + 1];
    for (k, &c) in free.iter().enumerate() {
        images[c] = plane.var(k);
    }
    for (row, &c) in pivots.iter().enumerate() {
        let img = free.iter().enumerate().fold(plane.zero(), |acc, (k, &fc)| {
            let a = coeffs.get(row, fc);
            if a.is_zero() { acc } else { &acc - &plane.var(k).scale(a) }
        });
        images[c] = img;
    }
    let restricted: Vec<Polynomial> = sat.generators().iter().map(|g| g.substitute(&images, plane)).collect();
    let planar = Ideal::new(plane, restricted).saturate_irrelevant()?;
    Ok(match planar.generators() {
        [f] => Some(f.clone()),
        _ => None,
    })
}

/// Plane model: the plane equation, or a generic projection to `P^2`.
fn plane_model(curve: &Ideal, seed: u64) -> Result<Option<Polynomial>> {
    if let Some(f) = plane_equation(curve)? {
        return Ok(Some(f));
    }
    let n = curve.ring().nvars() - 1;
    if n < 3 || curve.projective_dimension() != 1 {
        return Ok(None);
    }
    let (image, _) = project_variety(curve, n - 3, seed)?;
    Ok(match image.minimized().generators() {
        [f] => Some(f.clone()),
        _ => None,
    })
}

/// Detects a factor free of one of the variables: the coefficients with
/// respect to that variable share a common zero on `P^1`.
fn has_content(f: &Polynomial) -> bool {
    let ring = *f.ring();
    let d = f.degree().unwrap_or(0);
    if d < 2 {
        return false;
    }
    let line = Ring::projective(1, ring.characteristic()).unwrap();
    for k in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let mut images = vec![line.zero(); 3];
        images[others[0]] = line.var(0);
        images[others[1]] = line.var(1);
        let mut coeffs: Vec<Polynomial> = Vec::new();
        for e in 0..=d {
            let part: Vec<(crate::monomial::Monomial, Scalar)> = f
                .terms()
                .iter()
                .filter(|(m, _)| u32::from(m.exponent(k)) == e)
                .map(|(m, c)| (m.with_exponent(k, 0), c.clone()))
                .collect();
            if !part.is_empty() {
                coeffs.push(Polynomial::from_terms(ring, part).substitute(&images, line));
            }
        }
        if coeffs.len() == 1 || Ideal::new(line, coeffs).projective_dimension() >= 0 {
            return true;
        }
    }
    false
}

/// Heuristic reducibility of a curve from its plane model.
pub fn reducibility(curve: &Ideal, seed: u64) -> Reducibility {
    match plane_model(curve, seed) {
        Ok(Some(f)) if has_content(&f) => Reducibility::Reducible,
        Ok(Some(_)) => Reducibility::IrreducibleAssumed,
        _ => Reducibility::Unknown,
    }
}

fn nodal_hypothesis(curve: &Ideal, seed: u64) -> Result<Hypothesis> {
    const NAME: &str = "nodal";
    if let Some(f) = plane_equation(curve)? {
        let r = nodal_diagnostic(&f, seed)?;
        let status = match r.verdict {
            NodalVerdict::Smooth | NodalVerdict::Nodal => Status::Verified,
            NodalVerdict::NotNodal => Status::Failed,
            NodalVerdict::Indeterminate => Status::Assumed,
        };
        return Ok(hyp(NAME, status, format!("plane curve diagnostic: {}", r.verdict)));
    }
    if is_smooth(curve) {
        return Ok(hyp(NAME, Status::Verified, "smooth by the Jacobian criterion"));
    }
    let evidence = match plane_model(curve, seed)? {
        Some(f) => format!("generic plane projection is {}", nodal_diagnostic(&f, seed)?.verdict),
        None => "no plane model".to_string(),
    };
    Ok(hyp(NAME, Status::Assumed, evidence))
}

fn invariance_hypothesis(field: &VectorField, ideal: &Ideal) -> Hypothesis {
    match invariance_check(field, ideal) {
        Ok(c) => check("invariant", c.verdict, ""),
        Err(e) => hyp("invariant", Status::Failed, e.to_string()),
    }
}

fn finite_singularities_hypothesis(field: &VectorField, ideal: &Ideal) -> Hypothesis {
    match finite_field_singularities_on(ideal, field) {
        Ok(ok) => check("finite_field_singularities", ok, ""),
        Err(e) => hyp("finite_field_singularities", Status::Failed, e.to_string()),
    }
}

fn acm_regularity(ideal: &Ideal, seed: u64) -> (Hypothesis, Option<i64>) {
    match acm_check(ideal, seed) {
        Ok(rep) if rep.verdict => match regularity_acm(ideal, seed) {
            Ok(r) => (check("acm", true, ""), Some(r as i64)),
            Err(e) => (hyp("acm", Status::Failed, e.to_string()), None),
        },
        Ok(_) => (hyp("acm", Status::Failed, "persistent zerodivisor"), None),
        Err(e) => (hyp("acm", Status::Failed, e.to_string()), None),
    }
}

fn divides(p: u64, d: i64) -> bool {
    p != 0 && d % p as i64 == 0
}

fn same_ring(field: &VectorField, ideals: &[&Ideal]) -> Result<()> {
    if ideals.iter().any(|i| i.ring().nvars() != field.ring().nvars() || i.ring().characteristic() != field.characteristic()) {
        return Err(AlgebraError::RingMismatch("field and ideals live in different rings".into()));
    }
    Ok(())
}

/// `d ≤ m + e - r + 2` for a nodal curve `C` inside an ACM curve `C'`.
pub fn theorem18_verdict(c: &Ideal, c_prime: &Ideal, field: &VectorField, seed: u64) -> Result<BoundReport> {
    same_ring(field, &[c, c_prime])?;
    let p = field.characteristic();
    let n = field.n();
    let c = c.saturate_irrelevant()?;
    let cp = c_prime.saturate_irrelevant()?;
    let mut hyps = vec![hyp("reduced", Status::Assumed, "")];
    let curves = c.projective_dimension() == 1 && cp.projective_dimension() == 1;
    hyps.push(check("curves", curves, format!("dimensions {} and {}", c.projective_dimension(), cp.projective_dimension())));
    hyps.push(check("contained", c.contains_ideal(&cp), ""));
    let (acm, r) = acm_regularity(&cp, seed);
    hyps.push(acm);
    let tangent = n <= 2 || low_rank_locus(&cp, n - 2).projective_dimension() <= 0;
    hyps.push(check("tangent_spaces", tangent, ""));
    hyps.push(nodal_hypothesis(&c, seed)?);
    hyps.push(finite_singularities_hypothesis(field, &c));
    hyps.push(invariance_hypothesis(field, &c));
    let d = c.degree();
    let e = cp.degree();
    let m = field.degree() as i64;
    let mut quantities = vec![("d", d), ("e", e), ("m", m), ("n", n as i64)];
    let sides = r.map(|r| {
        quantities.push(("r", r));
        (d, m + e - r + 2)
    });
    Ok(BoundReport::finish(Theorem::Eighteen, "d <= m + e - r + 2", quantities, hyps, sides, reducibility(&c, seed), divides(p, d)))
}

/// `r ≤ m + 2` for a nodal ACM curve.
pub fn theorem1_verdict(c: &Ideal, field: &VectorField, seed: u64) -> Result<BoundReport> {
    same_ring(field, &[c])?;
    let p = field.characteristic();
    let c = c.saturate_irrelevant()?;
    let mut hyps = vec![hyp("reduced", Status::Assumed, "")];
    hyps.push(check("curve", c.projective_dimension() == 1, format!("dimension {}", c.projective_dimension())));
    let (acm, r) = acm_regularity(&c, seed);
    hyps.push(acm);
    hyps.push(nodal_hypothesis(&c, seed)?);
    hyps.push(finite_singularities_hypothesis(field, &c));
    hyps.push(invariance_hypothesis(field, &c));
    let d = c.degree();
    let m = field.degree() as i64;
    let mut quantities = vec![("d", d), ("m", m), ("n", field.n() as i64)];
    let sides = r.map(|r| {
        quantities.push(("r", r));
        (r, m + 2)
    });
    Ok(BoundReport::finish(Theorem::One, "r <= m + 2", quantities, hyps, sides, reducibility(&c, seed), divides(p, d)))
}

/// `d_1 + ... + d_{n-1} ≤ m + n` for a nodal complete intersection curve.
pub fn corollary2_verdict(degrees: &[u32], c: &Ideal, field: &VectorField, seed: u64) -> Result<BoundReport> {
    same_ring(field, &[c])?;
    let p = field.characteristic();
    let n = field.n();
    if degrees.len() != n - 1 {
        return Err(AlgebraError::Precondition(format!("expected {} degrees", n - 1)));
    }
    let mut declared = degrees.to_vec();
    declared.sort_unstable();
    let mut actual: Vec<u32> = c.generators().iter().filter_map(Polynomial::degree).collect();
    actual.sort_unstable();
    let mut hyps = vec![hyp("reduced", Status::Assumed, "")];
    let ci = actual == declared && c.is_homogeneous() && c.projective_dimension() == 1;
    hyps.push(check("complete_intersection", ci, format!("generator degrees {actual:?}")));
    let sat = c.saturate_irrelevant()?;
    hyps.push(nodal_hypothesis(&sat, seed)?);
    hyps.push(finite_singularities_hypothesis(field, &sat));
    hyps.push(invariance_hypothesis(field, &sat));
    let sum: i64 = degrees.iter().map(|&d| d as i64).sum();
    let product: i64 = degrees.iter().map(|&d| d as i64).product();
    let m = field.degree() as i64;
    let quantities = vec![("sum_degrees", sum), ("m", m), ("n", n as i64)];
    Ok(BoundReport::finish(
        Theorem::Corollary2,
        "d_1 + ... + d_(n-1) <= m + n",
        quantities,
        hyps,
        Some((sum, m + n as i64)),
        reducibility(&sat, seed),
        divides(p, product),
    ))
}

/// `d ≤ m + f(e - 1) - r + 3` for a nodal curve on `Z ∩ V(H)`, `Z` an ACM
/// surface.
pub fn theorem3_verdict(c: &Ideal, z: &Ideal, h: &Polynomial, field: &VectorField, seed: u64) -> Result<BoundReport> {
    same_ring(field, &[c, z])?;
    let p = field.characteristic();
    let c = c.saturate_irrelevant()?;
    let z = z.saturate_irrelevant()?;
    let mut hyps = vec![hyp("reduced", Status::Assumed, "")];
    hyps.push(check("curve", c.projective_dimension() == 1, format!("dimension {}", c.projective_dimension())));
    hyps.push(check("surface", z.projective_dimension() == 2, format!("dimension {}", z.projective_dimension())));
    let cut = z.with_generators(std::slice::from_ref(h));
    hyps.push(check("contained", c.contains_ideal(&cut), ""));
    let proper = !z.contains(h) && z.quotient(h)?.same_ideal(&z);
    hyps.push(check("no_common_component", proper, ""));
    let codim = field.n() - 2;
    let sing_on_h = low_rank_locus(&z, codim).with_generators(std::slice::from_ref(h));
    hyps.push(check("finite_surface_singularities", sing_on_h.projective_dimension() <= 0, ""));
    let (acm, r) = acm_regularity(&z, seed);
    hyps.push(acm);
    hyps.push(nodal_hypothesis(&c, seed)?);
    hyps.push(finite_singularities_hypothesis(field, &c));
    hyps.push(invariance_hypothesis(field, &c));
    let d = c.degree();
    let e = z.degree();
    let f = h.degree().unwrap_or(0) as i64;
    let m = field.degree() as i64;
    let mut quantities = vec![("d", d), ("e", e), ("f", f), ("m", m)];
    let sides = r.map(|r| {
        quantities.push(("r", r));
        (d, m + f * (e - 1) - r + 3)
    });
    Ok(BoundReport::finish(Theorem::Three, "d <= m + f(e - 1) - r + 3", quantities, hyps, sides, reducibility(&c, seed), divides(p, d)))
}

/// `r ≤ m + s + 1` for an ACM subscheme of dimension `s` (characteristic 0).
pub fn theorem1star_verdict(v: &Ideal, field: &VectorField, s: u32, seed: u64) -> Result<BoundReport> {
    same_ring(field, &[v])?;
    if field.characteristic() != 0 {
        return Err(AlgebraError::Precondition("characteristic zero required".into()));
    }
    let v = v.saturate_irrelevant()?;
    let dim = v.projective_dimension();
    let mut hyps = vec![hyp("reduced", Status::Assumed, "")];
    hyps.push(check("dimension", dim == s as i64, format!("dimension {dim}")));
    let (acm, r) = acm_regularity(&v, seed);
    hyps.push(acm);
    let crossings = if s == 1 {
        match plane_model(&v, seed)? {
            Some(f) => format!("plane projection is {}", nodal_diagnostic(&f, seed)?.verdict),
            None => String::new(),
        }
    } else {
        String::new()
    };
    hyps.push(hyp("normal_crossings_projection", Status::Assumed, crossings));
    hyps.push(invariance_hypothesis(field, &v));
    let nonsingular_point = match field.singular_scheme() {
        Ok(sing) => check("nonsingular_point_on_components", v.sum(&sing).projective_dimension() < dim, ""),
        Err(e) => hyp("nonsingular_point_on_components", Status::Failed, e.to_string()),
    };
    hyps.push(nonsingular_point);
    let m = field.degree() as i64;
    let mut quantities = vec![("s", s as i64), ("m", m), ("d", v.degree())];
    let sides = r.map(|r| {
        quantities.push(("r", r));
        (r, m + s as i64 + 1)
    });
    Ok(BoundReport::finish(Theorem::OneStar, "r <= m + s + 1", quantities, hyps, sides, Reducibility::Unknown, false))
}
