//! Built-in example families: ideals with vector fields leaving them
//! invariant and the facts expected of them.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::parse::poly;
use crate::poly::{Polynomial, Ring};
use crate::polymatrix::PolyMatrix;
use crate::vfield::{remark14_field, trivial_field, SkewCoefficients, VectorField};

pub const FAMILIES: &[&str] = &[
    "jouanolou",
    "rational_curve",
    "ccf",
    "twisted_cubic",
    "complete_intersection",
    "two_points",
    "fermat",
    "cone",
    "cuspidal",
    "line",
];

/// Facts the pipeline is expected to reproduce; `None` means no claim.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub invariant: Option<bool>,
    pub acm: Option<bool>,
    pub degree: Option<i64>,
    pub regularity: Option<u32>,
    pub field_degree: Option<u32>,
    /// Minimal degree of an invariant field, for hypersurfaces.
    pub q: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub name: String,
    pub params: Vec<(&'static str, i64)>,
    pub ideal: Ideal,
    pub field: VectorField,
    pub expected: Expected,
}

impl CorpusInstance {
    /// Equation of the instance when it is a hypersurface.
    pub fn hypersurface(&self) -> Option<&Polynomial> {
        match self.ideal.generators() {
            [f] => Some(f),
            _ => None,
        }
    }
}

impl fmt::Display for CorpusInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.name)?;
        for (k, v) in &self.params {
            writeln!(f, "{k}: {v}")?;
        }
        writeln!(f, "ideal: {}", self.ideal)?;
        write!(f, "field: {}", self.field)
    }
}

/// Family parameters; unused entries are ignored by a family.
#[derive(Clone, Debug)]
pub struct Params {
    pub d: u32,
    pub p: u64,
    pub n: Option<usize>,
    pub degrees: Vec<u32>,
}

impl Params {
    pub fn new(d: u32) -> Self {
        Params { d, p: 0, n: None, degrees: Vec::new() }
    }

    pub fn with_p(mut self, p: u64) -> Self {
        self.p = p;
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_degrees(mut self, degrees: &[u32]) -> Self {
        self.degrees = degrees.to_vec();
        self
    }
}

fn ideal(r: &Ring, gens: &[String]) -> Ideal {
    Ideal::new(*r, gens.iter().map(|g| poly(r, g)).collect())
}

fn field(r: &Ring, coeffs: &[String]) -> Result<VectorField> {
    VectorField::from_coefficients(*r, coeffs.iter().map(|c| poly(r, c)).collect())
}

fn bad(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Precondition(msg.into())
}

/// The curve `t_2^{d-1} t_0 + t_0^{d-1} t_1 + t_1^{d-1} t_2` with the field
/// built from a decomposition `F = Σ t_i H_i` (needs `p | d`).
pub fn jouanolou(d: u32, p: u64) -> Result<CorpusInstance> {
    if d < 3 {
        return Err(bad("jouanolou needs d >= 3"));
    }
    let r = Ring::projective(2, p)?;
    let e = d - 1;
    let f = poly(&r, &format!("t2^{e}*t0 + t0^{e}*t1 + t1^{e}*t2"));
    let x = remark14_field(&f)?;
    Ok(CorpusInstance {
        name: "jouanolou".into(),
        params: vec![("d", d as i64), ("p", p as i64)],
        ideal: Ideal::new(r, vec![f]),
        field: x,
        expected: Expected { invariant: Some(true), acm: Some(true), degree: Some(d as i64), regularity: Some(d), field_degree: Some(d - 2), q: None },
    })
}

/// The rational curve `(s^d : s^{d-1}t : s t^{d-1} : t^d)` with the diagonal
/// field `d t_0∂_0 + (d-2) t_1∂_1 - (d-2) t_2∂_2 - d t_3∂_3`.
pub fn rational_curve(d: u32, p: u64) -> Result<CorpusInstance> {
    if d < 3 {
        return Err(bad("rational_curve needs d >= 3"));
    }
    let r = Ring::projective(3, p)?;
    let (a, b) = (d - 1, d - 2);
    let gens = ["t1*t2 - t0*t3".to_string(), format!("t1^{a} - t2*t0^{b}"), format!("t2^{a} - t1*t3^{b}")];
    let coeffs = [format!("{d}*t0"), format!("{b}*t1"), format!("-{b}*t2"), format!("-{d}*t3")];
    Ok(CorpusInstance {
        name: "rational_curve".into(),
        params: vec![("d", d as i64), ("p", p as i64)],
        ideal: ideal(&r, &gens),
        field: field(&r, &coeffs)?,
        expected: Expected {
            invariant: Some(true),
            acm: Some(d == 3),
            degree: Some(d as i64),
            regularity: (d == 3).then_some(2),
            field_degree: Some(1),
            q: None,
        },
    })
}

/// `(t_2 - d t_3, t_0 t_2^{d-1} - t_1^d, t_4, ..., t_n)` with the field
/// `t_0 t_2 ∂_0 + t_1 t_3 ∂_1`, which does not depend on `d`.
pub fn ccf(d: u32, n: usize, p: u64) -> Result<CorpusInstance> {
    if d < 1 || n < 3 {
        return Err(bad("ccf needs d >= 1 and n >= 3"));
    }
    let r = Ring::projective(n, p)?;
    let e = d - 1;
    let mut gens = vec![format!("t2 - {d}*t3"), format!("t0*t2^{e} - t1^{d}")];
    gens.extend((4..=n).map(|i| format!("t{i}")));
    let mut coeffs = vec!["t0*t2".to_string(), "t1*t3".to_string()];
    coeffs.extend((2..=n).map(|_| "0".to_string()));
    Ok(CorpusInstance {
        name: "ccf".into(),
        params: vec![("d", d as i64), ("n", n as i64), ("p", p as i64)],
        ideal: ideal(&r, &gens),
        field: field(&r, &coeffs)?,
        expected: Expected { invariant: Some(true), acm: Some(true), degree: Some(d as i64), regularity: Some(d), field_degree: Some(2), q: None },
    })
}

pub fn twisted_cubic(p: u64) -> Result<CorpusInstance> {
    let mut c = rational_curve(3, p)?;
    c.name = "twisted_cubic".into();
    c.params = vec![("p", p as i64)];
    Ok(c)
}

/// Complete intersection curve in `P^3` of `Σ t_i^{d_1}` and
/// `Σ (i+1) t_i^{d_2}`, with the field `det[e_i; e_0; ∇F_1; ∇F_2]`.
pub fn complete_intersection(d1: u32, d2: u32, p: u64) -> Result<CorpusInstance> {
    if d1 == 0 || d2 == 0 {
        return Err(bad("degrees must be positive"));
    }
    let r = Ring::projective(3, p)?;
    let f1 = poly(&r, &format!("t0^{d1} + t1^{d1} + t2^{d1} + t3^{d1}"));
    let f2 = poly(&r, &format!("t0^{d2} + 2*t1^{d2} + 3*t2^{d2} + 4*t3^{d2}"));
    let (g1, g2) = (f1.gradient(), f2.gradient());
    let coeffs: Vec<Polynomial> = (0..4)
        .map(|i| {
            let mut rows = vec![vec![r.zero(); 4], vec![r.zero(); 4], g1.clone(), g2.clone()];
            rows[0][i] = r.one();
            rows[1][0] = r.one();
            PolyMatrix::from_rows(r, rows).determinant()
        })
        .collect();
    let m = d1 + d2 - 2;
    Ok(CorpusInstance {
        name: "complete_intersection".into(),
        params: vec![("d1", d1 as i64), ("d2", d2 as i64), ("p", p as i64)],
        ideal: Ideal::new(r, vec![f1, f2]),
        field: VectorField::new(r, coeffs, m)?,
        expected: Expected {
            invariant: Some(true),
            acm: Some(true),
            degree: Some((d1 * d2) as i64),
            regularity: Some(d1 + d2 - 1),
            field_degree: Some(m),
            q: None,
        },
    })
}

/// The points `(1 : ±1 : 1)` in `P^2`, both singular for the field.
pub fn two_points(p: u64) -> Result<CorpusInstance> {
    let r = Ring::projective(2, p)?;
    Ok(CorpusInstance {
        name: "two_points".into(),
        params: vec![("p", p as i64)],
        ideal: ideal(&r, &["t0 - t2".into(), "t1^2 - t2^2".into()]),
        field: field(&r, &["t0*t1".into(), "t0^2".into(), "t1*t2".into()])?,
        expected: Expected { invariant: Some(true), acm: Some(true), degree: Some(2), regularity: Some(2), field_degree: Some(2), q: None },
    })
}

/// Fermat hypersurface `Σ t_i^d` in `P^n` with the trivial field `P_{0,1} = 1`.
pub fn fermat(n: usize, d: u32, p: u64) -> Result<CorpusInstance> {
    if d < 2 || n < 1 {
        return Err(bad("fermat needs d >= 2 and n >= 1"));
    }
    let r = Ring::projective(n, p)?;
    let text: Vec<String> = (0..=n).map(|i| format!("t{i}^{d}")).collect();
    let f = poly(&r, &text.join(" + "));
    let mut pm = SkewCoefficients::zero(r, 0);
    pm.set(0, 1, r.one());
    let x = trivial_field(&f, &pm)?;
    let smooth = p == 0 || !(d as u64).is_multiple_of(p);
    Ok(CorpusInstance {
        name: "fermat".into(),
        params: vec![("n", n as i64), ("d", d as i64), ("p", p as i64)],
        ideal: Ideal::new(r, vec![f]),
        field: x,
        expected: Expected {
            invariant: Some(true),
            acm: Some(true),
            degree: Some(d as i64),
            regularity: Some(d),
            field_degree: Some(d - 1),
            q: smooth.then_some(d - 1),
        },
    })
}

/// The cone `t_0 t_1^2 + t_1^3` with the constant field `∂_2`.
pub fn cone(p: u64) -> Result<CorpusInstance> {
    let r = Ring::projective(2, p)?;
    Ok(CorpusInstance {
        name: "cone".into(),
        params: vec![("p", p as i64)],
        ideal: ideal(&r, &["t0*t1^2 + t1^3".into()]),
        field: field(&r, &["0".into(), "0".into(), "1".into()])?,
        expected: Expected { invariant: Some(true), acm: Some(true), degree: Some(3), regularity: Some(3), field_degree: Some(0), q: Some(0) },
    })
}

/// The cuspidal cubic `t_0 t_1^2 - t_2^3` with `3 t_0∂_0 + t_2∂_2`.
pub fn cuspidal(p: u64) -> Result<CorpusInstance> {
    let r = Ring::projective(2, p)?;
    Ok(CorpusInstance {
        name: "cuspidal".into(),
        params: vec![("p", p as i64)],
        ideal: ideal(&r, &["t0*t1^2 - t2^3".into()]),
        field: field(&r, &["3*t0".into(), "0".into(), "t2".into()])?,
        expected: Expected { invariant: Some(true), acm: Some(true), degree: Some(3), regularity: Some(3), field_degree: Some(1), q: Some(1) },
    })
}

/// The line `V(t_0, t_1)` in `P^3` with `∂_2`.
pub fn line(p: u64) -> Result<CorpusInstance> {
    let r = Ring::projective(3, p)?;
    Ok(CorpusInstance {
        name: "line".into(),
        params: vec![("p", p as i64)],
        ideal: ideal(&r, &["t0".into(), "t1".into()]),
        field: field(&r, &["0".into(), "0".into(), "1".into(), "0".into()])?,
        expected: Expected { invariant: Some(true), acm: Some(true), degree: Some(1), regularity: Some(1), field_degree: Some(0), q: None },
    })
}

/// Instance of a named family.
pub fn corpus(family: &str, params: &Params) -> Result<CorpusInstance> {
    let Params { d, p, n, ref degrees } = *params;
    match family {
        "jouanolou" => jouanolou(d, p),
        "rational_curve" => rational_curve(d, p),
        "ccf" => ccf(d, n.unwrap_or(3), p),
        "twisted_cubic" => twisted_cubic(p),
        "complete_intersection" => match degrees.as_slice() {
            [a, b] => complete_intersection(*a, *b, p),
            [] => complete_intersection(2, d, p),
            _ => Err(bad("complete_intersection takes two degrees")),
        },
        "two_points" => two_points(p),
        "fermat" => fermat(n.unwrap_or(2), d, p),
        "cone" => cone(p),
        "cuspidal" => cuspidal(p),
        "line" => line(p),
        other => Err(bad(format!("unknown family '{other}' (known: {})", FAMILIES.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vfield::invariance_check;

    #[test]
    fn every_family_builds_and_is_invariant() {
        let instances = [
            jouanolou(4, 2).unwrap(),
            rational_curve(4, 0).unwrap(),
            ccf(5, 3, 0).unwrap(),
            twisted_cubic(0).unwrap(),
            complete_intersection(2, 3, 0).unwrap(),
            two_points(0).unwrap(),
            fermat(2, 3, 0).unwrap(),
            cone(0).unwrap(),
            cuspidal(0).unwrap(),
            line(0).unwrap(),
        ];
        for inst in &instances {
            assert!(!inst.field.is_zero(), "{}", inst.name);
            let cert = invariance_check(&inst.field, &inst.ideal).unwrap();
            assert_eq!(Some(cert.verdict), inst.expected.invariant, "{}", inst.name);
            assert_eq!(Some(inst.field.degree()), inst.expected.field_degree, "{}", inst.name);
        }
    }

    #[test]
    fn ccf_in_higher_space() {
        let c = ccf(3, 5, 0).unwrap();
        assert_eq!(c.ideal.generators().len(), 4);
        assert_eq!(c.ideal.projective_dimension(), 1);
        assert_eq!(c.ideal.degree(), 3);
    }

    #[test]
    fn unknown_family() {
        assert!(corpus("nope", &Params::new(3)).is_err());
        assert!(corpus("jouanolou", &Params::new(4).with_p(3)).is_err());
    }
}
