//! Hilbert series of monomial ideals by pivot recursion.

use crate::monomial::Monomial;

/// Dimension and degree of the projective scheme cut out by a homogeneous
/// ideal, read off its Hilbert series `numerator(t) / (1 - t)^{nvars}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `-1` for the empty scheme.
    pub projective_dimension: i64,
    pub degree: i64,
    /// Coefficients of the numerator, constant term first.
    pub numerator: Vec<i64>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_sub(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &v) in b.iter().enumerate() {
        a[k + shift] -= v;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn single_variable(m: &Monomial) -> Option<usize> {
    let mut found = None;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

/// Numerator `N(t)` with `HS_{S/M}(t) = N(t) / (1 - t)^{nvars}`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    trim(numerator_rec(minimalize(gens.to_vec())))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![];
    }
    if gens.iter().all(|g| single_variable(g).is_some()) {
        // product of (1 - t^{d_i}) over pure powers in distinct variables
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            poly_sub(&mut next, &acc, d);
            acc = next;
        }
        return acc;
    }
    // pivot on a variable of a mixed generator
    let g = gens.iter().find(|g| single_variable(g).is_none()).unwrap();
    let nvars = g.nvars();
    let var = (0..nvars)
        .filter(|&i| g.exponent(i) > 0)
        .max_by_key(|&i| (gens.iter().filter(|h| h.exponent(i) > 0).count(), std::cmp::Reverse(i)))
        .unwrap();
    let e = g.exponent(var);
    let pivot = Monomial::one(nvars).with_exponent(var, e);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|h| h.with_exponent(var, h.exponent(var).saturating_sub(e)))
        .collect();

    // N(M) = N(M + (p)) + t^{deg p} N(M : p)
    let mut acc = numerator_rec(minimalize(with_pivot));
    let colon = numerator_rec(minimalize(quotient));
    let neg: Vec<i64> = colon.iter().map(|v| -v).collect();
    poly_sub(&mut acc, &neg, e as usize);
    acc
}

/// Projective dimension and degree from the numerator in `nvars` variables.
pub fn hilbert_data_from_numerator(numerator: Vec<i64>, nvars: usize) -> HilbertData {
    let numerator = trim(numerator);
    if numerator.is_empty() {
        return HilbertData { projective_dimension: -1, degree: 0, numerator };
    }
    let mut q = numerator.clone();
    let mut k = 0usize;
    while q.iter().sum::<i64>() == 0 {
        // divide by (1 - t): coefficients of the quotient are partial sums
        let mut out = Vec::with_capacity(q.len() - 1);
        let mut s = 0;
        for &c in &q[..q.len() - 1] {
            s += c;
            out.push(s);
        }
        q = trim(out);
        k += 1;
    }
    let krull = nvars as i64 - k as i64;
    HilbertData { projective_dimension: krull - 1, degree: q.iter().sum(), numerator }
}

/// Standard monomials of degree `d` for the monomial ideal generated by `lms`.
pub fn standard_monomials(lms: &[Monomial], nvars: usize, d: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(nvars, d)
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .collect()
}
