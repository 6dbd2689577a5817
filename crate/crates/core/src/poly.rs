//! Sparse multivariate polynomials over `k[t_0, ..., t_n]`.
//!
//! Terms are kept strictly sorted, descending in the ring's monomial order,
//! with no zero coefficients. The degree of the zero polynomial is `None`,
//! which compares below every `Some(d)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::linalg::Matrix;
use crate::monomial::{write_monomial, Monomial, MonomialOrder};
use crate::scalar::{is_prime, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    characteristic: u64,
    order: MonomialOrder,
}

impl Ring {
    /// Ring `k[t_0..t_{nvars-1}]` with the grevlex order.
    pub fn new(nvars: usize, characteristic: u64) -> Result<Self> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(AlgebraError::InvalidCharacteristic(characteristic));
        }
        Ok(Ring { nvars, characteristic, order: MonomialOrder::Grevlex })
    }

    /// Coordinate ring of `P^n`.
    pub fn projective(n: usize, characteristic: u64) -> Result<Self> {
        Self::new(n + 1, characteristic)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring { order, ..*self }
    }

    pub fn with_nvars(&self, nvars: usize) -> Ring {
        Ring { nvars, ..*self }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: *self, terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Scalar::one(self.characteristic))
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        Polynomial::from_terms(*self, vec![(Monomial::one(self.nvars), c)])
    }

    pub fn int(&self, c: i64) -> Polynomial {
        self.constant(self.scalar(c))
    }

    pub fn scalar(&self, c: i64) -> Scalar {
        Scalar::from_i64(c, self.characteristic)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable index out of range");
        Polynomial { ring: *self, terms: vec![(Monomial::variable(self.nvars, i), Scalar::one(self.characteristic))] }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::from_terms(*self, vec![(m, Scalar::one(self.characteristic))])
    }

    /// `Σ coeffs[i] t_i`.
    pub fn linear_form(&self, coeffs: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(
            *self,
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::variable(self.nvars, i), c.clone())).collect(),
        )
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars).map(|i| self.var(i)).collect()
    }

    fn compatible(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(AlgebraError::RingMismatch(format!(
                "({} vars, char {}, {}) vs ({} vars, char {}, {})",
                self.nvars, self.characteristic, self.order, other.nvars, other.characteristic, other.order
            )));
        }
        Ok(())
    }
}

pub type Term = (Monomial, Scalar);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ring: Ring, terms: Vec<Term>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        Polynomial { ring, terms }
    }

    /// Terms already strictly sorted in the ring's order with no zeros.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order.cmp(&w[0].0, &w[1].0).is_gt()));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Drops the leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial { ring: self.ring, terms: self.terms.get(1..).unwrap_or(&[]).to_vec() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// `(is_homogeneous, degree)` with the degree reported only for
    /// homogeneous input.
    pub fn degree_and_homogeneity(&self) -> (bool, Option<u32>) {
        let h = self.is_homogeneous();
        (h, if h { self.degree() } else { None })
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial { ring: self.ring, terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect() }
    }

    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let mut degs: Vec<u32> = self.terms.iter().map(|(m, _)| m.degree()).collect();
        degs.sort_unstable();
        degs.dedup();
        degs.into_iter().map(|d| self.homogeneous_component(d)).collect()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| Scalar::zero(self.ring.characteristic))
    }

    fn merge(&self, other: &Polynomial, scale: Option<(&Scalar, &Monomial)>) -> Polynomial {
        // self + c*m*other
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(m, c)| match scale {
            None => (m.clone(), c.clone()),
            Some((s, sm)) => (m.mul(sm), s * c),
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), next_b.as_ref()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.push(a.next().unwrap().clone());
                }
                (None, Some(_)) => {
                    out.push(next_b.take().unwrap());
                    next_b = b.next();
                }
                (Some(ta), Some(tb)) => match order.cmp(&ta.0, &tb.0) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => {
                        out.push(next_b.take().unwrap());
                        next_b = b.next();
                    }
                    std::cmp::Ordering::Equal => {
                        let c = &ta.1 + &tb.1;
                        if !c.is_zero() {
                            out.push((ta.0.clone(), c));
                        }
                        a.next();
                        next_b = b.next();
                    }
                },
            }
        }
        Polynomial { ring: self.ring, terms: out }
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub fn sub_scaled(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.merge(g, Some((&-c, m)))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.compatible(&other.ring)?;
        Ok(self.merge(other, None))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.compatible(&other.ring)?;
        Ok(self.merge(&-other, None))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.compatible(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(small.len() * big.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.ring.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Polynomial { ring: self.ring, terms })
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring, terms: self.terms.iter().map(|(tm, v)| (tm.mul(m), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Formal partial derivative with respect to `t_i`.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.ring.nvars, "variable index out of range");
        let p = self.ring.characteristic;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .filter_map(|(m, c)| {
                let e = m.exponent(i);
                let c = c * &Scalar::from_i64(e as i64, p);
                (!c.is_zero()).then(|| (m.with_exponent(i, e - 1), c))
            })
            .collect();
        // Lowering one exponent keeps relative order only for graded orders
        // restricted to homogeneous input, so re-sort.
        Polynomial::from_terms(self.ring, terms)
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars).map(|i| self.partial_derivative(i)).collect()
    }

    /// `Σ t_i ∂_i f`.
    pub fn euler_pairing(&self) -> Polynomial {
        let p = self.ring.characteristic;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * &Scalar::from_i64(m.degree() as i64, p)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    /// Substitutes `t_i ↦ Σ_j M_{ij} t_j`.
    pub fn apply_linear_change(&self, m: &Matrix) -> Result<Polynomial> {
        let n = self.ring.nvars;
        if m.rows() != n || m.cols() != n {
            return Err(AlgebraError::RingMismatch(format!("expected {n}x{n} matrix")));
        }
        if !m.is_invertible() {
            return Err(AlgebraError::SingularMatrix);
        }
        Ok(self.substitute_linear(m))
    }

    /// Substitution `t_i ↦ Σ_j M_{ij} t_j` with no invertibility check; `M`
    /// may be rectangular (`nvars` rows, target-ring columns).
    pub fn substitute_linear(&self, m: &Matrix) -> Polynomial {
        let target = self.ring.with_nvars(m.cols());
        let images: Vec<Polynomial> = (0..m.rows()).map(|i| target.linear_form(m.row(i))).collect();
        self.substitute(&images, target)
    }

    /// Substitutes `t_i ↦ images[i]`, all images living in `target`.
    pub fn substitute(&self, images: &[Polynomial], target: Ring) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars);
        let mut cache: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Same polynomial viewed under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if self.ring.order == order {
            return self.clone();
        }
        let ring = self.ring.with_order(order);
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring, terms }
    }

    /// Moves the polynomial into `ring`, which must have the same
    /// characteristic; variables beyond the target count must not occur.
    pub fn into_ring(&self, ring: Ring) -> Polynomial {
        assert_eq!(ring.characteristic, self.ring.characteristic);
        let terms = self.terms.iter().map(|(m, c)| (m.resize(ring.nvars), c.clone())).collect();
        let mut p = Polynomial { ring, terms };
        let order = ring.order;
        p.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        p
    }

    /// True when only `t_0..t_{k-1}` occur.
    pub fn lies_in_first(&self, k: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.lies_in_first(k))
    }

    /// Exact quotient `self / g`; fails when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        self.ring.compatible(&g.ring)?;
        let (lm, lc) = match g.leading_term() {
            None => return Err(AlgebraError::DivisionByZero),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let Some(q) = m.div(&lm) else {
                return Err(AlgebraError::InexactDivision);
            };
            let qc = &c * &lc_inv;
            rem = rem.sub_scaled(&qc, &q, g);
            quot.push((q, qc));
        }
        Ok(Polynomial::from_terms(self.ring, quot))
    }

    /// Evaluates at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let p = self.ring.characteristic;
        self.terms.iter().fold(Scalar::zero(p), |acc, (m, c)| {
            let v = m
                .exponents()
                .iter()
                .zip(point)
                .fold(c.clone(), |v, (&e, x)| &v * &x.pow(e as u32));
            &acc + &v
        })
    }

    /// Largest `k` with `t_i^k | self`.
    pub fn variable_valuation(&self, i: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(i)).min().unwrap_or(0)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { ring: self.ring, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}
