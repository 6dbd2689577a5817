//! Independent oracles shared by the integration tests. They rely only on
//! dense linear algebra and never call the Gröbner engine.

#![allow(dead_code)]

use std::collections::HashMap;

use invar::{Matrix, Monomial, PolyMatrix, Polynomial, Ring, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random homogeneous polynomial of degree `d` with at most `terms` terms and
/// small coefficients.
pub fn random_form(rng: &mut ChaCha8Rng, ring: &Ring, d: u32, terms: usize) -> Polynomial {
    let monos = Monomial::all_of_degree(ring.nvars(), d);
    let p = ring.characteristic();
    let mut out = ring.zero();
    for _ in 0..terms {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        let c = rng.gen_range(-3i64..=3);
        out = &out + &ring.monomial(m).scale(&Scalar::from_i64(c, p));
    }
    out
}

/// Matrix whose columns are the coefficient vectors of `polys`, indexed by
/// the union of their monomials (plus `extra`).
fn coefficient_matrix(polys: &[Polynomial], extra: Option<&Polynomial>, p: u64) -> (Matrix, Vec<Scalar>) {
    let mut rows: HashMap<Monomial, usize> = HashMap::new();
    for f in polys.iter().chain(extra) {
        for (m, _) in f.terms() {
            let next = rows.len();
            rows.entry(m.clone()).or_insert(next);
        }
    }
    let mut mat = Matrix::zeros(rows.len(), polys.len(), p);
    for (c, f) in polys.iter().enumerate() {
        for (m, a) in f.terms() {
            mat.set(rows[m], c, a.clone());
        }
    }
    let mut rhs = vec![Scalar::zero(p); rows.len()];
    if let Some(f) = extra {
        for (m, a) in f.terms() {
            rhs[rows[m]] = a.clone();
        }
    }
    (mat, rhs)
}

/// Decides `f ∈ (gens)` for homogeneous data by checking whether `f` lies in
/// the span of `{μ g : deg μ = deg f - deg g}`.
pub fn graded_member(gens: &[Polynomial], f: &Polynomial) -> bool {
    if f.is_zero() {
        return true;
    }
    let ring = *f.ring();
    let delta = f.degree().unwrap();
    let mut span = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.degree().unwrap();
        if dg > delta {
            continue;
        }
        for mu in Monomial::all_of_degree(ring.nvars(), delta - dg) {
            span.push(&ring.monomial(mu) * g);
        }
    }
    if span.is_empty() {
        return false;
    }
    let (mat, rhs) = coefficient_matrix(&span, Some(f), ring.characteristic());
    mat.solve(&rhs).is_some()
}

/// Sylvester resultant in the last variable of `f` and `g`, as a polynomial
/// in the remaining variables (`coeff_ring` has one variable fewer).
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial, coeff_ring: Ring) -> Polynomial {
    let x = f.ring().nvars() - 1;
    let coeffs = |h: &Polynomial| -> Vec<Polynomial> {
        let deg = h.terms().iter().map(|(m, _)| m.exponent(x)).max().unwrap_or(0) as usize;
        let mut c = vec![coeff_ring.zero(); deg + 1];
        for (m, a) in h.terms() {
            let e = m.exponent(x) as usize;
            let rest = m.with_exponent(x, 0).resize(coeff_ring.nvars());
            c[e] = &c[e] + &coeff_ring.monomial(rest).scale(a);
        }
        c
    };
    let (a, b) = (coeffs(f), coeffs(g));
    let (da, db) = (a.len() - 1, b.len() - 1);
    let size = da + db;
    let mut m = PolyMatrix::zeros(coeff_ring, size, size);
    for i in 0..db {
        for (k, c) in a.iter().rev().enumerate() {
            m.set(i, i + k, c.clone());
        }
    }
    for i in 0..da {
        for (k, c) in b.iter().rev().enumerate() {
            m.set(db + i, i + k, c.clone());
        }
    }
    m.determinant()
}

/// `dim (S/(gens))_t` by ranking the span of `{μ g}` in degree `t`.
pub fn dense_hilbert_function(ring: &Ring, gens: &[Polynomial], t: u32) -> usize {
    let total = Monomial::all_of_degree(ring.nvars(), t).len();
    let mut span = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.degree().unwrap();
        if dg <= t {
            for mu in Monomial::all_of_degree(ring.nvars(), t - dg) {
                span.push(&ring.monomial(mu) * g);
            }
        }
    }
    if span.is_empty() {
        return total;
    }
    let (mat, _) = coefficient_matrix(&span, None, ring.characteristic());
    total - mat.rank()
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Regularity of a saturated ACM ideal of Krull dimension `c` from its
/// Hilbert function: the `c`-th difference is the h-vector, and `reg J` is
/// one more than its top degree.
pub fn regularity_from_hilbert(ring: &Ring, gens: &[Polynomial], c: u32, max_degree: u32) -> u32 {
    let hf: Vec<i64> = (0..=max_degree).map(|t| dense_hilbert_function(ring, gens, t) as i64).collect();
    let h: Vec<i64> = (0..=max_degree as usize)
        .map(|t| {
            (0..=c.min(t as u32))
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * binomial(c, k) * hf[t - k as usize]
                })
                .sum()
        })
        .collect();
    let top = h.iter().rposition(|&x| x != 0).unwrap_or(0) as u32;
    top + 1
}
