use std::fmt::Write;
use std::io::Read;

use invar::acm::{acm_check, artinian_reduce, regularity_acm, Attempt};
use invar::bounds::{corollary2_verdict, theorem18_verdict, theorem1_verdict, theorem1star_verdict, theorem3_verdict, BoundReport, Verdict};
use invar::corpus::{corpus, Params};
use invar::project::project_field;
use invar::vfield::{invariance_check, min_invariant_degree};
use invar::{parse_polynomial, AlgebraError, Ideal, Polynomial, Ring};
use thiserror::Error;

use crate::problem::{ProblemError, ProblemFile};
use crate::{Command, Input};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Affirmative = 0,
    Negative = 1,
    Inapplicable = 2,
    InputError = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Problem(#[from] ProblemError),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
}

impl CliError {
    pub fn outcome(&self) -> Outcome {
        match self {
            CliError::Algebra(
                AlgebraError::Indeterminate(_)
                | AlgebraError::Genericity(_)
                | AlgebraError::IndependenceFailure
                | AlgebraError::InconsistentSystem(_),
            ) => Outcome::Inapplicable,
            _ => Outcome::InputError,
        }
    }
}

type Run = Result<(String, Outcome), CliError>;

fn load(input: &Input) -> Result<ProblemFile, CliError> {
    let text = match input.input.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
            s
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("reading {path}: {e}")))?,
    };
    Ok(ProblemFile::parse(&text)?)
}

fn ideal(file: &ProblemFile, name: Option<&str>) -> Result<Ideal, CliError> {
    file.ideal(name).map_err(CliError::Input)
}

fn field(file: &ProblemFile, name: Option<&str>) -> Result<invar::VectorField, CliError> {
    file.field(name).map_err(CliError::Input)
}

fn polynomial(ring: &Ring, text: &str) -> Result<Polynomial, CliError> {
    parse_polynomial(ring, text).map_err(|e| CliError::Input(format!("polynomial {text:?}: {e}")))
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key}: {value}");
}

fn yes(b: bool) -> &'static str {
    if b { "true" } else { "false" }
}

pub fn run(command: Command) -> Run {
    match command {
        Command::CheckInvariance { input, ideal: i, vfield } => check_invariance(&load(&input)?, i.as_deref(), vfield.as_deref()),
        Command::Regularity { input, ideal: i, seed } => regularity(&load(&input)?, i.as_deref(), seed),
        Command::Acm { input, ideal: i, seed } => acm(&load(&input)?, i.as_deref(), seed),
        Command::Project { input, ideal: i, acm_ideal, vfield, center_dim, seed } => {
            project(&load(&input)?, i.as_deref(), acm_ideal.as_deref(), vfield.as_deref(), center_dim, seed)
        }
        Command::Bounds { input, theorem, ideal: i, acm_ideal, surface, hyperplane, degrees, dimension, vfield, seed } => {
            let file = load(&input)?;
            let c = ideal(&file, i.as_deref())?;
            let x = field(&file, vfield.as_deref())?;
            let report = match theorem.as_str() {
                "1" => theorem1_verdict(&c, &x, seed)?,
                "1star" => {
                    let s = match dimension {
                        Some(s) => s,
                        None => u32::try_from(c.saturate_irrelevant()?.projective_dimension())
                            .map_err(|_| CliError::Input("empty scheme".into()))?,
                    };
                    theorem1star_verdict(&c, &x, s, seed)?
                }
                "2" => {
                    let degrees = if degrees.is_empty() { c.generators().iter().filter_map(Polynomial::degree).collect() } else { degrees };
                    corollary2_verdict(&degrees, &c, &x, seed)?
                }
                "3" => {
                    let z = ideal(&file, Some(surface.as_deref().ok_or_else(|| CliError::Input("--surface is required".into()))?))?;
                    let h_text = hyperplane.ok_or_else(|| CliError::Input("--hyperplane is required".into()))?;
                    let h = polynomial(&file.ring, &h_text)?;
                    theorem3_verdict(&c, &z, &h, &x, seed)?
                }
                _ => {
                    let cp = match acm_ideal.as_deref() {
                        Some(name) => ideal(&file, Some(name))?,
                        None => c.clone(),
                    };
                    theorem18_verdict(&c, &cp, &x, seed)?
                }
            };
            Ok(bounds_report(&report, seed))
        }
        Command::Corpus { family, d, p, n, degrees } => {
            let mut params = Params::new(d).with_p(p);
            if let Some(n) = n {
                params = params.with_n(n);
            }
            if !degrees.is_empty() {
                params = params.with_degrees(&degrees);
            }
            let inst = corpus(&family, &params)?;
            let mut labels = vec![("family".to_string(), inst.name.clone())];
            labels.extend(inst.params.iter().map(|(k, v)| (k.to_string(), v.to_string())));
            let file = ProblemFile {
                ring: *inst.ideal.ring(),
                labels,
                ideals: vec![("I".into(), inst.ideal.generators().to_vec())],
                fields: vec![("X".into(), inst.field.clone())],
            };
            Ok((file.to_string(), Outcome::Affirmative))
        }
        Command::QInvariant { input, poly, characteristic } => {
            let f = if input.input.is_some() {
                let file = load(&input)?;
                match file.ideals.iter().find(|(k, _)| *k == poly) {
                    Some((_, gens)) if gens.len() == 1 => gens[0].clone(),
                    Some(_) => return Err(CliError::Input(format!("ideal {poly} is not principal"))),
                    None => polynomial(&file.ring, &poly)?,
                }
            } else {
                let ring = Ring::projective(highest_variable(&poly).max(2), characteristic)?;
                polynomial(&ring, &poly)?
            };
            let q = min_invariant_degree(&f)?;
            let mut out = String::new();
            line(&mut out, "characteristic", f.ring().characteristic());
            line(&mut out, "ambient", format!("P^{}", f.ring().nvars() - 1));
            line(&mut out, "polynomial", &f);
            line(&mut out, "degree", f.degree().unwrap_or(0));
            line(&mut out, "q", q);
            Ok((out, Outcome::Affirmative))
        }
        Command::SingularScheme { input, vfield } => {
            let file = load(&input)?;
            let x = field(&file, vfield.as_deref())?;
            let mut out = String::new();
            line(&mut out, "field", &x);
            line(&mut out, "degree", x.degree());
            match x.singular_scheme() {
                Ok(sing) => {
                    line(&mut out, "singular_scheme", &sing);
                    line(&mut out, "dimension", sing.projective_dimension());
                    line(&mut out, "length", if sing.projective_dimension() == 0 { sing.degree().to_string() } else { "infinite".into() });
                    Ok((out, Outcome::Affirmative))
                }
                Err(AlgebraError::ZeroField) => {
                    line(&mut out, "singular_scheme", "everything (zero field)");
                    Ok((out, Outcome::Inapplicable))
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

/// Largest `k` with `tk` in the text.
fn highest_variable(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    for (i, &b) in bytes.iter().enumerate() {
        if b == b't' {
            let digits: String = text[i + 1..].chars().take_while(char::is_ascii_digit).collect();
            if let Ok(k) = digits.parse::<usize>() {
                best = best.max(k);
            }
        }
    }
    best
}

fn check_invariance(file: &ProblemFile, i: Option<&str>, x: Option<&str>) -> Run {
    let j = ideal(file, i)?;
    let x = field(file, x)?;
    let cert = invariance_check(&x, &j)?;
    let mut out = String::new();
    line(&mut out, "ideal", &j);
    line(&mut out, "field", &x);
    line(&mut out, "field_degree", x.degree());
    line(&mut out, "saturation_changed", yes(cert.saturation_changed));
    line(&mut out, "raw_generator_test", if cert.raw_generator_test { "pass" } else { "fail" });
    line(&mut out, "saturated_ideal", &cert.saturated_ideal);
    for (k, c) in cert.checks.iter().enumerate() {
        let status = if c.witness.is_member() { "in ideal".to_string() } else { format!("remainder {}", c.witness.remainder) };
        line(&mut out, &format!("generator {}", k + 1), format!("X({}) {status}", c.generator));
    }
    if let Some(p) = &cert.multiplier {
        line(&mut out, "multiplier", p);
    }
    line(&mut out, "certificate", if cert.verify(&x) { "verified" } else { "failed" });
    line(&mut out, "verdict", if cert.verdict { "invariant" } else { "not invariant" });
    Ok((out, if cert.verdict { Outcome::Affirmative } else { Outcome::Negative }))
}

fn regularity(file: &ProblemFile, i: Option<&str>, seed: u64) -> Run {
    let j = ideal(file, i)?;
    let mut out = String::new();
    line(&mut out, "seed", seed);
    line(&mut out, "ideal", &j);
    let report = acm_check(&j, seed)?;
    line(&mut out, "acm", yes(report.verdict));
    if !report.verdict {
        line(&mut out, "regularity", "not applicable (not ACM)");
        return Ok((out, Outcome::Inapplicable));
    }
    let red = artinian_reduce(&j, seed)?;
    let r = regularity_acm(&j, seed)?;
    line(&mut out, "draw_seed", red.seed);
    let forms: Vec<String> = red.forms.iter().map(ToString::to_string).collect();
    line(&mut out, "forms", forms.join(", "));
    line(&mut out, "multiplicity", red.multiplicity);
    let weights: Vec<String> = red.weights.iter().map(ToString::to_string).collect();
    line(&mut out, "weights", weights.join(", "));
    line(&mut out, "regularity", r);
    Ok((out, Outcome::Affirmative))
}

fn acm(file: &ProblemFile, i: Option<&str>, seed: u64) -> Run {
    let j = ideal(file, i)?;
    let mut out = String::new();
    line(&mut out, "seed", seed);
    line(&mut out, "ideal", &j);
    let report = match acm_check(&j, seed) {
        Ok(r) => r,
        Err(AlgebraError::Indeterminate(msg)) => {
            line(&mut out, "acm", format!("indeterminate ({msg})"));
            return Ok((out, Outcome::Inapplicable));
        }
        Err(e) => return Err(e.into()),
    };
    line(&mut out, "saturated_ideal", &report.saturated);
    for a in &report.attempts {
        let (s, text) = match a {
            Attempt::Regular { seed, .. } => (*seed, "regular sequence".to_string()),
            Attempt::ZeroDivisor(w) => (w.seed, format!("zerodivisor at step {}", w.step + 1)),
            Attempt::NotParameters { seed } => (*seed, "not a system of parameters".to_string()),
        };
        line(&mut out, &format!("attempt {s}"), text);
    }
    if let Some(w) = &report.witness {
        line(&mut out, "witness_form", &w.form);
        line(&mut out, "witness_element", &w.element);
        line(&mut out, "witness", if w.verify() { "verified" } else { "failed" });
    }
    line(&mut out, "acm", yes(report.verdict));
    Ok((out, if report.verdict { Outcome::Affirmative } else { Outcome::Negative }))
}

fn project(file: &ProblemFile, v: Option<&str>, w: Option<&str>, x: Option<&str>, center_dim: usize, seed: u64) -> Run {
    let iv = ideal(file, v)?;
    let iw = match w {
        Some(name) => ideal(file, Some(name))?,
        None => iv.clone(),
    };
    let x = field(file, x)?;
    let cert = project_field(&x, &iv, &iw, center_dim, seed)?;
    let p = &cert.projector;
    let mut out = String::new();
    line(&mut out, "seed", seed);
    line(&mut out, "draw_seed", cert.seed);
    line(&mut out, "center_dim", center_dim);
    let rows: Vec<String> = (0..cert.change.rows())
        .map(|i| {
            let row: Vec<String> = cert.change.row(i).iter().map(ToString::to_string).collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    line(&mut out, "change", format!("[{}]", rows.join(", ")));
    line(&mut out, "field_degree", x.degree());
    line(&mut out, "multiplicity", p.multiplicity());
    line(&mut out, "regularity", p.regularity());
    line(&mut out, "multiplication_matrix", &p.multiplication);
    line(&mut out, "eliminant", cert.eliminant());
    line(&mut out, "multiplier", cert.multiplier());
    line(&mut out, "projected_ideal", &cert.projected_ideal);
    line(&mut out, "projected_field", &cert.projected_field);
    line(&mut out, "projected_degree", cert.projected_degree());
    line(&mut out, "fallback", yes(cert.fallback));
    let c = &cert.checks;
    line(&mut out, "center_disjoint", yes(c.center_disjoint));
    line(&mut out, "degree_preserved", yes(c.degree_preserved));
    line(&mut out, "eliminant_generates", yes(c.eliminant_generates));
    line(&mut out, "invariance", if c.invariance { "verified" } else { "failed" });
    let ok = cert.verify();
    line(&mut out, "certificate", if ok { "verified" } else { "failed" });
    Ok((out, if ok && c.invariance { Outcome::Affirmative } else { Outcome::Negative }))
}

fn bounds_report(report: &BoundReport, seed: u64) -> (String, Outcome) {
    let mut out = String::new();
    line(&mut out, "seed", seed);
    let _ = writeln!(out, "{report}");
    let outcome = match report.verdict {
        Verdict::Strict | Verdict::Equality => Outcome::Affirmative,
        Verdict::Violated => Outcome::Negative,
        Verdict::NotApplicable => Outcome::Inapplicable,
    };
    (out, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_scan() {
        assert_eq!(highest_variable("t0^4 + t12*t3"), 12);
        assert_eq!(highest_variable("3"), 0);
    }
}
