//! Problem files: the batch input format of the CLI.
//!
//! Two equivalent forms. The structured text format:
//!
//! ```text
//! # comment
//! characteristic: 32003
//! vars: X0 X1 X2
//! [ideal]          # optional, one polynomial per line
//! X0*X1
//! [map]            # required
//! X1*X2
//! X0*X2
//! X0*X1
//! [prime]          # optional, repeatable: one minimal prime per block
//! X0
//! [options]
//! degree_cap: 8
//! order: grevlex
//! ```
//!
//! The JSON form carries the same fields: `characteristic`, `vars`,
//! `ideal`, `map`, `minimal_primes` (list of generator lists), and
//! `options` (`degree_cap`, `order`). A leading `{` selects JSON.

use crate::field::FieldSpec;
use crate::groebner::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::{is_reserved_var_name, PolyRing, Polynomial};
use crate::text::parse_poly;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProblemOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

/// Parsed problem file, prior to ring construction.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    pub vars: Vec<String>,
    #[serde(default)]
    pub ideal: Vec<String>,
    pub map: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub minimal_primes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "is_default_options")]
    pub options: ProblemOptions,
}

fn is_default_options(o: &ProblemOptions) -> bool {
    *o == ProblemOptions::default()
}

#[derive(Clone, Debug)]
pub struct ProblemError {
    pub message: String,
    /// 1-based line of the problem file, when known.
    pub line: Option<usize>,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {}: {}", l, self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ProblemError {}

fn err(message: impl Into<String>, line: Option<usize>) -> ProblemError {
    ProblemError {
        message: message.into(),
        line,
    }
}

impl ProblemFile {
    /// Parse either format; a leading `{` selects JSON.
    pub fn parse(input: &str) -> Result<ProblemFile, ProblemError> {
        if input.trim_start().starts_with('{') {
            serde_json::from_str(input).map_err(|e| err(format!("invalid JSON: {}", e), None))
        } else {
            Self::parse_text(input)
        }
    }

    fn parse_text(input: &str) -> Result<ProblemFile, ProblemError> {
        #[derive(PartialEq)]
        enum Section {
            Header,
            Ideal,
            Map,
            Prime,
            Options,
        }
        let mut pf = ProblemFile::default();
        let mut section = Section::Header;
        let mut saw_map = false;
        for (i, raw) in input.lines().enumerate() {
            let lineno = i + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                section = match name.trim() {
                    "ideal" => Section::Ideal,
                    "map" => {
                        saw_map = true;
                        Section::Map
                    }
                    "prime" => {
                        pf.minimal_primes.push(Vec::new());
                        Section::Prime
                    }
                    "options" => Section::Options,
                    other => return Err(err(format!("unknown section [{}]", other), Some(lineno))),
                };
                continue;
            }
            match section {
                Section::Header => {
                    let (key, value) = line
                        .split_once(':')
                        .ok_or_else(|| err("expected 'key: value'", Some(lineno)))?;
                    match key.trim() {
                        "characteristic" => {
                            let v: u64 = value
                                .trim()
                                .parse()
                                .map_err(|_| err("characteristic must be an integer", Some(lineno)))?;
                            pf.characteristic = Some(v);
                        }
                        "vars" => {
                            pf.vars = value.split_whitespace().map(|s| s.to_string()).collect();
                        }
                        other => {
                            return Err(err(format!("unknown header key '{}'", other), Some(lineno)))
                        }
                    }
                }
                Section::Ideal => pf.ideal.push(line.to_string()),
                Section::Map => pf.map.push(line.to_string()),
                Section::Prime => pf
                    .minimal_primes
                    .last_mut()
                    .expect("prime section opened")
                    .push(line.to_string()),
                Section::Options => {
                    let (key, value) = line
                        .split_once(':')
                        .ok_or_else(|| err("expected 'key: value'", Some(lineno)))?;
                    match key.trim() {
                        "degree_cap" => {
                            let v: u32 = value
                                .trim()
                                .parse()
                                .map_err(|_| err("degree_cap must be an integer", Some(lineno)))?;
                            pf.options.degree_cap = Some(v);
                        }
                        "order" => pf.options.order = Some(value.trim().to_string()),
                        other => {
                            return Err(err(format!("unknown option '{}'", other), Some(lineno)))
                        }
                    }
                }
            }
        }
        if !saw_map {
            return Err(err("missing required [map] section", None));
        }
        Ok(pf)
    }
}

/// A problem file resolved against a field and order: ring, source
/// ideal, forms, minimal primes.
#[derive(Clone, Debug)]
pub struct ResolvedProblem {
    pub ring: PolyRing,
    pub source: Ideal,
    pub forms: Vec<Polynomial>,
    pub primes: Vec<Ideal>,
    pub characteristic: u64,
    pub degree_cap: Option<u32>,
}

/// Customary computer-algebra default when neither the file nor the
/// flags pin a field.
pub const DEFAULT_CHARACTERISTIC: u64 = 32003;

/// Build ring and polynomials. `field_override` and `order_override`
/// come from CLI flags and win over the file's own settings.
pub fn resolve(
    pf: &ProblemFile,
    field_override: Option<u64>,
    order_override: Option<&str>,
) -> Result<ResolvedProblem, ProblemError> {
    let characteristic = field_override
        .or(pf.characteristic)
        .unwrap_or(DEFAULT_CHARACTERISTIC);
    let field = FieldSpec::new(characteristic)
        .map_err(|e| err(format!("bad characteristic: {}", e), None))?;
    if pf.vars.is_empty() {
        return Err(err("no variables declared", None));
    }
    for v in &pf.vars {
        if is_reserved_var_name(v) {
            return Err(err(
                format!(
                    "variable name '{}' is reserved for internal ring constructions (t, u, Y<digits>)",
                    v
                ),
                None,
            ));
        }
        if !v
            .chars()
            .next()
            .map(|c| c.is_ascii_alphabetic() || c == '_')
            .unwrap_or(false)
            || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(err(format!("invalid variable name '{}'", v), None));
        }
    }
    let order_name = order_override
        .map(|s| s.to_string())
        .or_else(|| pf.options.order.clone())
        .unwrap_or_else(|| "grevlex".to_string());
    let order = match order_name.as_str() {
        "grevlex" => MonomialOrder::GrevLex,
        "lex" => MonomialOrder::Lex,
        other => return Err(err(format!("unknown order '{}'", other), None)),
    };
    let ring = PolyRing::new(pf.vars.clone(), field, order)
        .map_err(|e| err(e.to_string(), None))?;
    let parse_all = |texts: &[String], what: &str| -> Result<Vec<Polynomial>, ProblemError> {
        texts
            .iter()
            .map(|s| {
                parse_poly(s, &ring).map_err(|e| err(format!("in {} '{}': {}", what, s, e), None))
            })
            .collect()
    };
    if pf.map.is_empty() {
        return Err(err("the [map] section is empty", None));
    }
    let source = Ideal::new(ring.clone(), parse_all(&pf.ideal, "ideal")?);
    let forms = parse_all(&pf.map, "map")?;
    let primes = pf
        .minimal_primes
        .iter()
        .map(|gens| Ok(Ideal::new(ring.clone(), parse_all(gens, "prime")?)))
        .collect::<Result<Vec<Ideal>, ProblemError>>()?;
    Ok(ResolvedProblem {
        ring,
        source,
        forms,
        primes,
        characteristic,
        degree_cap: pf.options.degree_cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# plane quadratic map
characteristic: 0
vars: X0 X1 X2
[ideal]
[map]
X1*X2
X0*X2
X0*X1
";

    #[test]
    fn parse_text_roundtrip_semantics() {
        let pf = ProblemFile::parse(SAMPLE).unwrap();
        assert_eq!(pf.characteristic, Some(0));
        assert_eq!(pf.vars, vec!["X0", "X1", "X2"]);
        assert!(pf.ideal.is_empty());
        assert_eq!(pf.map.len(), 3);

        let json = serde_json::to_string(&pf).unwrap();
        let back = ProblemFile::parse(&json).unwrap();
        assert_eq!(back, pf);
    }

    #[test]
    fn parse_prime_blocks() {
        let text = "\
vars: X0 X1 X2
[ideal]
X0*X1
[map]
X0+X1
X2
[prime]
X0
[prime]
X1
";
        let pf = ProblemFile::parse(text).unwrap();
        assert_eq!(pf.minimal_primes, vec![vec!["X0"], vec!["X1"]]);
        let resolved = resolve(&pf, None, None).unwrap();
        assert_eq!(resolved.characteristic, DEFAULT_CHARACTERISTIC);
        assert_eq!(resolved.primes.len(), 2);
    }

    #[test]
    fn errors_carry_lines() {
        let e = ProblemFile::parse("nonsense\n[map]\nX0\n").unwrap_err();
        assert_eq!(e.line, Some(1));
        let e = ProblemFile::parse("vars: X0\n[bogus]\n[map]\nX0\n").unwrap_err();
        assert_eq!(e.line, Some(2));
    }

    #[test]
    fn resolve_rejects_reserved_names() {
        // Y-names parse fine but are rejected when the ring is built
        let pf = ProblemFile::parse("vars: Y0 Y1\n[map]\nY0\n").unwrap();
        let e = resolve(&pf, None, None).unwrap_err();
        assert!(e.message.contains("reserved"));
        let pf = ProblemFile::parse("vars: X0 u\n[map]\nX0\n").unwrap();
        assert!(resolve(&pf, None, None).is_err());
    }

    #[test]
    fn missing_map_is_an_error() {
        assert!(ProblemFile::parse("vars: X0\n[ideal]\nX0\n").is_err());
    }
}
