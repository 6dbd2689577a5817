//! Buchberger completion with Gebauer–Möller pair elimination and optional
//! transform records expressing every basis element in the input generators.

use std::cmp::Ordering;

use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

/// Result of dividing by a set of generators: `Σ cofactors[i]·gens[i] + remainder`
/// reproduces the input exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipWitness {
    pub cofactors: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl MembershipWitness {
    /// Expands the identity and compares with `f`.
    pub fn verify(&self, f: &Polynomial, generators: &[Polynomial]) -> bool {
        if self.cofactors.len() != generators.len() {
            return false;
        }
        let sum = self
            .cofactors
            .iter()
            .zip(generators)
            .fold(self.remainder.clone(), |acc, (c, g)| &acc + &(c * g));
        &sum == f
    }

    pub fn is_member(&self) -> bool {
        self.remainder.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    transform: Option<Vec<Vec<Polynomial>>>,
    generators: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ring: Ring,
    polys: Vec<Polynomial>,
    trans: Option<Vec<Vec<Polynomial>>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    ngens: usize,
}

impl Engine {
    fn active_indices(&self) -> Vec<usize> {
        (0..self.polys.len()).filter(|&k| self.active[k]).collect()
    }

    /// Full reduction of `p` (with transform row `t`) by the polynomials in `by`.
    fn reduce(&self, mut p: Polynomial, mut t: Option<Vec<Polynomial>>, by: &[usize]) -> (Polynomial, Option<Vec<Polynomial>>) {
        let mut rem_terms = Vec::new();
        while let Some((m, c)) = p.leading_term().cloned() {
            let divisor = by.iter().copied().find(|&k| self.polys[k].leading_monomial().unwrap().divides(&m));
            match divisor {
                Some(k) => {
                    let g = &self.polys[k];
                    let q = m.div(g.leading_monomial().unwrap()).unwrap();
                    // basis polynomials are monic
                    p = p.sub_scaled(&c, &q, g);
                    if let (Some(t), Some(trans)) = (t.as_mut(), self.trans.as_ref()) {
                        for (tj, gj) in t.iter_mut().zip(&trans[k]) {
                            *tj = tj.sub_scaled(&c, &q, gj);
                        }
                    }
                }
                None => {
                    rem_terms.push((m.clone(), c.clone()));
                    p = p.tail();
                }
            }
        }
        (Polynomial::from_sorted_terms(self.ring, rem_terms), t)
    }

    fn make_monic(&self, p: Polynomial, t: Option<Vec<Polynomial>>) -> (Polynomial, Option<Vec<Polynomial>>) {
        let c = p.leading_coefficient().expect("nonzero").clone();
        if c.is_one() {
            return (p, t);
        }
        let inv = c.inv().expect("nonzero");
        (p.scale(&inv), t.map(|row| row.iter().map(|x| x.scale(&inv)).collect()))
    }

    fn insert(&mut self, h: Polynomial, t: Option<Vec<Polynomial>>) {
        let hidx = self.polys.len();
        let lm_h = h.leading_monomial().unwrap().clone();
        self.polys.push(h);
        self.active.push(true);
        if let (Some(trans), Some(t)) = (self.trans.as_mut(), t) {
            trans.push(t);
        }
        let old: Vec<usize> = (0..hidx).filter(|&k| self.active[k]).collect();
        let lm = |k: usize, polys: &Vec<Polynomial>| polys[k].leading_monomial().unwrap().clone();

        // candidate pairs (h, g)
        let mut c: Vec<Pair> = old.iter().map(|&g| Pair { i: g, j: hidx, lcm: lm_h.lcm(&lm(g, &self.polys)) }).collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = (!c.is_empty()).then(|| c.remove(0)) {
            let coprime = lm_h.is_coprime(&lm(p.i, &self.polys));
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d.into_iter().filter(|p| !lm_h.is_coprime(&lm(p.i, &self.polys))).collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            let lcm_ih = lm(p.i, polys).lcm(&lm_h);
            let lcm_jh = lm(p.j, polys).lcm(&lm_h);
            !(lm_h.divides(&p.lcm) && lcm_ih != p.lcm && lcm_jh != p.lcm)
        });
        self.pairs.extend(e);

        for &g in &old {
            if lm_h.divides(&lm(g, &self.polys)) {
                self.active[g] = false;
            }
        }
    }

    fn s_polynomial(&self, pair: &Pair) -> (Polynomial, Option<Vec<Polynomial>>) {
        let (gi, gj) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mi = pair.lcm.div(gi.leading_monomial().unwrap()).unwrap();
        let mj = pair.lcm.div(gj.leading_monomial().unwrap()).unwrap();
        let one = self.ring.one();
        let one = one.leading_coefficient().unwrap();
        let s = gi.mul_term(one, &mi).sub_scaled(one, &mj, gj);
        let t = self.trans.as_ref().map(|trans| {
            trans[pair.i]
                .iter()
                .zip(&trans[pair.j])
                .map(|(a, b)| a.mul_term(one, &mi).sub_scaled(one, &mj, b))
                .collect()
        });
        (s, t)
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = a.lcm.degree().cmp(&b.lcm.degree())
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn unit_row(&self, k: usize) -> Option<Vec<Polynomial>> {
        self.trans.as_ref().map(|_| {
            (0..self.ngens).map(|j| if j == k { self.ring.one() } else { self.ring.zero() }).collect()
        })
    }
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by `generators`, under the
    /// order of `ring`. With `track` set, transform records are kept.
    pub fn compute(ring: Ring, generators: &[Polynomial], track: bool) -> GroebnerBasis {
        let gens: Vec<Polynomial> = generators.iter().map(|g| g.with_order(ring.order())).collect();
        let mut eng = Engine {
            ring,
            polys: Vec::new(),
            trans: track.then(Vec::new),
            active: Vec::new(),
            pairs: Vec::new(),
            ngens: gens.len(),
        };
        for (k, g) in gens.iter().enumerate() {
            let by = eng.active_indices();
            let (r, t) = eng.reduce(g.clone(), eng.unit_row(k), &by);
            if !r.is_zero() {
                let (r, t) = eng.make_monic(r, t);
                eng.insert(r, t);
            }
        }
        while let Some(pair) = eng.select_pair() {
            let (s, t) = eng.s_polynomial(&pair);
            let by = eng.active_indices();
            let (r, t) = eng.reduce(s, t, &by);
            if !r.is_zero() {
                let (r, t) = eng.make_monic(r, t);
                eng.insert(r, t);
            }
        }

        // interreduce the (already minimal) active set
        let active = eng.active_indices();
        let mut elements = Vec::with_capacity(active.len());
        let mut rows = Vec::with_capacity(active.len());
        for &k in &active {
            let others: Vec<usize> = active.iter().copied().filter(|&o| o != k).collect();
            let t = eng.trans.as_ref().map(|tr| tr[k].clone());
            let (r, t) = eng.reduce(eng.polys[k].clone(), t, &others);
            let (r, t) = eng.make_monic(r, t);
            elements.push(r);
            rows.push(t);
        }
        let mut idx: Vec<usize> = (0..elements.len()).collect();
        idx.sort_by(|&a, &b| {
            ring.order().cmp(elements[a].leading_monomial().unwrap(), elements[b].leading_monomial().unwrap())
        });
        let elements: Vec<Polynomial> = idx.iter().map(|&k| elements[k].clone()).collect();
        let transform = track.then(|| idx.iter().map(|&k| rows[k].clone().unwrap()).collect());
        GroebnerBasis { ring, elements, transform, generators: gens }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn transform(&self) -> Option<&[Vec<Polynomial>]> {
        self.transform.as_deref()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    /// Division by the basis: cofactors per basis element and the normal form.
    pub fn divide(&self, f: &Polynomial) -> (Vec<Polynomial>, Polynomial) {
        let mut p = f.with_order(self.ring.order());
        let mut q: Vec<Polynomial> = vec![self.ring.zero(); self.elements.len()];
        let mut rem_terms = Vec::new();
        while let Some((m, c)) = p.leading_term().cloned() {
            match self.elements.iter().position(|g| g.leading_monomial().unwrap().divides(&m)) {
                Some(k) => {
                    let g = &self.elements[k];
                    let mq = m.div(g.leading_monomial().unwrap()).unwrap();
                    p = p.sub_scaled(&c, &mq, g);
                    q[k] = &q[k] + &self.ring.monomial(mq).scale(&c);
                }
                None => {
                    rem_terms.push((m, c));
                    p = p.tail();
                }
            }
        }
        (q, Polynomial::from_sorted_terms(self.ring, rem_terms))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.divide(f).1
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Witness with one cofactor per basis element.
    pub fn basis_witness(&self, f: &Polynomial) -> MembershipWitness {
        let (cofactors, remainder) = self.divide(f);
        MembershipWitness { cofactors, remainder }
    }

    /// Witness with one cofactor per original generator; needs transform
    /// records.
    pub fn generator_witness(&self, f: &Polynomial) -> Option<MembershipWitness> {
        let trans = self.transform.as_ref()?;
        let (q, remainder) = self.divide(f);
        let mut cofactors = vec![self.ring.zero(); self.generators.len()];
        for (qk, row) in q.iter().zip(trans) {
            if qk.is_zero() {
                continue;
            }
            for (c, t) in cofactors.iter_mut().zip(row) {
                *c = &*c + &(qk * t);
            }
        }
        Some(MembershipWitness { cofactors, remainder })
    }

    /// Checks the defining properties: transform rows reproduce the basis,
    /// the basis is auto-reduced and every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        if let Some(trans) = &self.transform {
            for (g, row) in self.elements.iter().zip(trans) {
                let sum = row.iter().zip(&self.generators).fold(self.ring.zero(), |acc, (c, h)| &acc + &(c * h));
                if &sum != g {
                    return false;
                }
            }
        }
        let lms = self.leading_monomials();
        for (a, g) in self.elements.iter().enumerate() {
            for (b, lm) in lms.iter().enumerate() {
                if a != b && g.terms().iter().any(|(m, _)| lm.divides(m)) {
                    return false;
                }
            }
        }
        for a in 0..self.elements.len() {
            for b in a + 1..self.elements.len() {
                let l = lms[a].lcm(&lms[b]);
                let one = self.ring.one();
                let one = one.leading_coefficient().unwrap();
                let s = self.elements[a]
                    .mul_term(one, &l.div(&lms[a]).unwrap())
                    .sub_scaled(one, &l.div(&lms[b]).unwrap(), &self.elements[b]);
                if !self.reduces_to_zero(&s) {
                    return false;
                }
            }
        }
        true
    }
}
