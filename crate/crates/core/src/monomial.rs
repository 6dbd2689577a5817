//! Monomials over `t_0..t_n` and the monomial orders used by the engine.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 8]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when only the variables with index `< k` occur.
    pub fn lies_in_first(&self, k: usize) -> bool {
        self.exps[k..].iter().all(|&e| e == 0)
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = e;
        m
    }

    /// Same exponents in a ring with `nvars` variables: extra variables get
    /// exponent zero, dropped ones must already be zero.
    pub fn resize(&self, nvars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        debug_assert!(exps.iter().skip(nvars).all(|&e| e == 0));
        exps.resize(nvars, 0);
        Monomial { exps }
    }

    /// All monomials of total degree `d` in `nvars` variables.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; nvars];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if pos + 1 == cur.len() {
                cur[pos] = left as u16;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e as u16;
                rec(pos + 1, left - e, cur, out);
            }
            cur[pos] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }
}

/// Monomial orders with `t_0 > t_1 > ... > t_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Elimination order for the variables with index `>= k`: they are compared
    /// first (grevlex on that block), ties broken by grevlex on `t_0..t_{k-1}`.
    Block(usize),
}

fn grevlex_range(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex_range(&a.exps, &b.exps),
            MonomialOrder::Lex => a.exps.iter().cmp(b.exps.iter()),
            MonomialOrder::Block(k) => grevlex_range(&a.exps[k..], &b.exps[k..])
                .then_with(|| grevlex_range(&a.exps[..k], &b.exps[..k])),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

/// Writes the monomial as `t0^2*t3`, or `1`.
pub fn write_monomial(f: &mut impl fmt::Write, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if e == 1 {
            write!(f, "t{i}")?;
        } else {
            write!(f, "t{i}^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // t0*t2 < t1^2 in grevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn block_eliminates_tail() {
        let o = MonomialOrder::Block(2);
        // anything involving t2 beats everything in t0, t1
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[9, 9, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn enumerate_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(2, 0), vec![Monomial::one(2)]);
    }

    #[test]
    fn orders_are_multiplicative() {
        let all: Vec<Monomial> = (0..3).flat_map(|d| Monomial::all_of_degree(3, d)).collect();
        for o in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(1)] {
            for a in &all {
                for b in &all {
                    for c in &all {
                        assert_eq!(o.cmp(a, b), o.cmp(&a.mul(c), &b.mul(c)));
                    }
                }
            }
        }
    }
}
