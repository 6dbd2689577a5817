//! Problem files.
//!
//! ```text
//! # comment
//! char 0
//! ring t0..t3
//! label family = twisted_cubic
//! ideal C = t1*t2 - t0*t3, t1^2 - t0*t2, t2^2 - t1*t3
//! field X = [3*t0, t1, -t2, -3*t3]
//! ```

use std::fmt;

use invar::{parse_polynomial, Ideal, Polynomial, Ring, VectorField};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ProblemError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub ring: Ring,
    pub labels: Vec<(String, String)>,
    pub ideals: Vec<(String, Vec<Polynomial>)>,
    pub fields: Vec<(String, VectorField)>,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ProblemError> {
        Err(ProblemError { line: self.number, column: offset + 1, message: message.into() })
    }
}

/// Splits `name = rest`, returning the name and the byte offset of `rest`.
fn assignment<'a>(line: &Line<'a>, start: usize) -> Result<(&'a str, usize), ProblemError> {
    let body = &line.text[start..];
    let Some(eq) = body.find('=') else {
        return line.error(start, "expected `<name> = ...`");
    };
    let name = body[..eq].trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return line.error(start, format!("invalid name {name:?}"));
    }
    Ok((name, start + eq + 1))
}

/// Parses comma-separated polynomials starting at byte `start` of the line.
fn polynomials(line: &Line, ring: &Ring, start: usize, end: usize) -> Result<Vec<Polynomial>, ProblemError> {
    let mut out = Vec::new();
    let mut offset = start;
    for piece in line.text[start..end].split(',') {
        if piece.trim().is_empty() {
            return line.error(offset, "empty polynomial");
        }
        match parse_polynomial(ring, piece) {
            Ok(p) => out.push(p),
            Err(e) => return line.error(offset + e.offset, e.message),
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn ring_line(line: &Line, rest: usize) -> Result<usize, ProblemError> {
    let spec = line.text[rest..].trim();
    let Some(upper) = spec.strip_prefix("t0..t") else {
        return line.error(rest, "expected `ring t0..tN`");
    };
    match upper.parse::<usize>() {
        Ok(n) => Ok(n),
        Err(_) => line.error(rest, format!("invalid variable range {spec:?}")),
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, ProblemError> {
        let mut characteristic: Option<u64> = None;
        let mut ring: Option<Ring> = None;
        let mut file = ProblemFile { ring: Ring::projective(1, 0).unwrap(), labels: Vec::new(), ideals: Vec::new(), fields: Vec::new() };
        for (i, raw) in text.lines().enumerate() {
            let text = raw.split('#').next().unwrap_or("");
            let line = Line { number: i + 1, text };
            let trimmed = text.trim_start();
            if trimmed.is_empty() {
                continue;
            }
            let indent = text.len() - trimmed.len();
            let keyword = trimmed.split_whitespace().next().unwrap();
            let rest = indent + keyword.len();
            match keyword {
                "char" => {
                    if ring.is_some() || characteristic.is_some() {
                        return line.error(indent, "`char` must appear once, before `ring`");
                    }
                    let value = text[rest..].trim();
                    let Ok(p) = value.parse::<u64>() else {
                        return line.error(rest, format!("invalid characteristic {value:?}"));
                    };
                    if p != 0 && !invar::scalar::is_prime(p) {
                        return line.error(rest, format!("characteristic {p} is neither 0 nor prime"));
                    }
                    characteristic = Some(p);
                }
                "ring" => {
                    if ring.is_some() {
                        return line.error(indent, "`ring` declared twice");
                    }
                    let n = ring_line(&line, rest)?;
                    match Ring::projective(n, characteristic.unwrap_or(0)) {
                        Ok(r) => ring = Some(r),
                        Err(e) => return line.error(rest, e.to_string()),
                    }
                    file.ring = ring.unwrap();
                }
                "label" => {
                    let (name, value) = assignment(&line, rest)?;
                    file.labels.push((name.to_string(), text[value..].trim().to_string()));
                }
                "ideal" | "field" => {
                    let Some(r) = ring else {
                        return line.error(indent, format!("`{keyword}` before `ring`"));
                    };
                    let (name, start) = assignment(&line, rest)?;
                    if file.ideals.iter().any(|(n, _)| n == name) || file.fields.iter().any(|(n, _)| n == name) {
                        return line.error(rest, format!("name {name} defined twice"));
                    }
                    if keyword == "ideal" {
                        let gens = polynomials(&line, &r, start, text.len())?;
                        if let Some(k) = gens.iter().position(|g| !g.is_homogeneous()) {
                            return line.error(start, format!("generator {} is not homogeneous", k + 1));
                        }
                        file.ideals.push((name.to_string(), gens));
                    } else {
                        let (open, close) = (text[start..].find('['), text.rfind(']'));
                        let (Some(open), Some(close)) = (open, close) else {
                            return line.error(start, "expected `[<poly>, ..., <poly>]`");
                        };
                        let open = start + open;
                        if !text[close + 1..].trim().is_empty() {
                            return line.error(close + 1, "trailing input after `]`");
                        }
                        let coeffs = polynomials(&line, &r, open + 1, close)?;
                        if coeffs.len() != r.nvars() {
                            return line.error(open, format!("field has {} entries, expected {}", coeffs.len(), r.nvars()));
                        }
                        let field = if coeffs.iter().all(Polynomial::is_zero) {
                            VectorField::new(r, coeffs, 0)
                        } else {
                            VectorField::from_coefficients(r, coeffs)
                        };
                        match field {
                            Ok(x) => file.fields.push((name.to_string(), x)),
                            Err(e) => return line.error(open, format!("field coefficients: {e}")),
                        }
                    }
                }
                other => return line.error(indent, format!("unknown keyword {other:?}")),
            }
        }
        if ring.is_none() {
            return Err(ProblemError { line: text.lines().count().max(1), column: 1, message: "missing `ring` declaration".into() });
        }
        Ok(file)
    }

    pub fn ideal(&self, name: Option<&str>) -> Result<Ideal, String> {
        let gens = match name {
            Some(n) => self.ideals.iter().find(|(k, _)| k == n).map(|(_, g)| g),
            None if self.ideals.len() == 1 => Some(&self.ideals[0].1),
            None => return Err(format!("{} ideals in the problem file; pick one by name", self.ideals.len())),
        };
        gens.map(|g| Ideal::new(self.ring, g.clone())).ok_or_else(|| format!("no ideal named {}", name.unwrap_or("")))
    }

    pub fn field(&self, name: Option<&str>) -> Result<VectorField, String> {
        let found = match name {
            Some(n) => self.fields.iter().find(|(k, _)| k == n).map(|(_, x)| x),
            None if self.fields.len() == 1 => Some(&self.fields[0].1),
            None => return Err(format!("{} fields in the problem file; pick one by name", self.fields.len())),
        };
        found.cloned().ok_or_else(|| format!("no field named {}", name.unwrap_or("")))
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "char {}", self.ring.characteristic())?;
        writeln!(f, "ring t0..t{}", self.ring.nvars() - 1)?;
        for (k, v) in &self.labels {
            writeln!(f, "label {k} = {v}")?;
        }
        for (name, gens) in &self.ideals {
            let text: Vec<String> = gens.iter().map(ToString::to_string).collect();
            writeln!(f, "ideal {name} = {}", text.join(", "))?;
        }
        for (name, x) in &self.fields {
            writeln!(f, "field {name} = {x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWISTED_CUBIC: &str = "char 0\nring t0..t3\nideal C = t1*t2 - t0*t3, t1^2 - t0*t2, t2^2 - t1*t3\nfield X = [3*t0, t1, -t2, -3*t3]\n";

    #[test]
    fn twisted_cubic_parses() {
        let p = ProblemFile::parse(TWISTED_CUBIC).unwrap();
        assert_eq!(p.ring.nvars(), 4);
        assert_eq!(p.field(None).unwrap().degree(), 1);
        assert_eq!(p.ideal(Some("C")).unwrap().degree(), 3);
    }

    #[test]
    fn print_then_parse_round_trips() {
        let text = "# header\nchar 7\nring t0..t2\nlabel family = demo\nideal I = t0^2 - 3/2*t1*t2\nfield Y = [0, 0, 1]\n";
        let p = ProblemFile::parse(text).unwrap();
        let again = ProblemFile::parse(&p.to_string()).unwrap();
        assert_eq!(again, p);
        assert_eq!(again.to_string(), p.to_string());
    }

    #[test]
    fn wrong_arity() {
        let e = ProblemFile::parse("char 0\nring t0..t3\nfield X = [t0, t1]\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("2 entries, expected 4"), "{e}");
    }

    #[test]
    fn no_inverse_of_p() {
        let e = ProblemFile::parse("char 2\nring t0..t2\nideal I = 1/2*t0\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn error_positions() {
        let e = ProblemFile::parse("char 0\nring t0..t2\nideal I = t0, t1 + * t2\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 20));
        let e = ProblemFile::parse("char 0\nring t0..t2\nideal I = t0 + t1^2\n").unwrap_err();
        assert!(e.message.contains("not homogeneous"));
        let e = ProblemFile::parse("char 0\nring t0..t2\nfield X = [t0, t1^2, t2]\n").unwrap_err();
        assert!(e.message.contains("field coefficients"), "{e}");
        let e = ProblemFile::parse("char 4\nring t0..t2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(ProblemFile::parse("frobnicate\n").is_err());
        assert!(ProblemFile::parse("char 0\n").is_err());
    }
}
