//! Plain-text instance format.
//!
//! ```text
//! # comment
//! n m k
//! <n weight lines>
//! <m lines: u v length>
//! <k lines: v u>
//! ```
//!
//! Numbers are integers, decimals or `p/q` fractions. Blank lines and
//! everything after `#` are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use bicenter_core::{BuildError, Instance, InstanceSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("invalid instance: {0}")]
    Invalid(#[from] BuildError),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    /// Next non-empty line split into fields, with its 1-based number.
    fn next_fields(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), FormatError> {
        for (i, raw) in self.inner.by_ref() {
            let content = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = content.split_whitespace().collect();
            if !fields.is_empty() {
                return Ok((i + 1, fields));
            }
        }
        Err(FormatError::Truncated(format!("expected {what}")))
    }

    fn record<const N: usize>(&mut self, what: &str) -> Result<(usize, [&'a str; N]), FormatError> {
        let (line, fields) = self.next_fields(what)?;
        let arr: [&str; N] = fields.try_into().map_err(|f: Vec<&str>| FormatError::Syntax {
            line,
            message: format!("expected {N} field(s) for {what}, found {}", f.len()),
        })?;
        Ok((line, arr))
    }
}

fn field<T: FromStr>(line: usize, text: &str, what: &str) -> Result<T, FormatError> {
    text.parse().map_err(|_| FormatError::Syntax { line, message: format!("invalid {what} `{text}`") })
}

/// Parses the text form into a spec without validating it.
pub fn parse_spec(text: &str) -> Result<InstanceSpec, FormatError> {
    let mut lines = Lines { inner: text.lines().enumerate() };
    let (line, [n, m, k]) = lines.record::<3>("header `n m k`")?;
    let n: usize = field(line, n, "vertex count")?;
    let m: usize = field(line, m, "edge count")?;
    let k: usize = field(line, k, "pair count")?;

    let mut weights = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, [w]) = lines.record::<1>("weight")?;
        weights.push(field::<Scalar>(line, w, "weight")?);
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, [u, v, l]) = lines.record::<3>("edge `u v length`")?;
        edges.push((field(line, u, "vertex")?, field(line, v, "vertex")?, field::<Scalar>(line, l, "length")?));
    }
    let mut pairs = Vec::with_capacity(k);
    for _ in 0..k {
        let (line, [v, u]) = lines.record::<2>("pair `v u`")?;
        pairs.push((field(line, v, "vertex")?, field(line, u, "vertex")?));
    }
    if let Ok((line, _)) = lines.next_fields("") {
        return Err(FormatError::Syntax { line, message: "trailing content after the last pair".into() });
    }
    Ok(InstanceSpec { weights, edges, pairs })
}

/// Parses and validates an instance.
pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    Ok(Instance::build(&parse_spec(text)?)?)
}

/// Renders a spec in the text form; `parse_spec` reads it back unchanged.
pub fn write_spec(spec: &InstanceSpec) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", spec.weights.len(), spec.edges.len(), spec.pairs.len()).unwrap();
    for w in &spec.weights {
        writeln!(out, "{w}").unwrap();
    }
    for (u, v, l) in &spec.edges {
        writeln!(out, "{u} {v} {l}").unwrap();
    }
    for (v, u) in &spec.pairs {
        writeln!(out, "{v} {u}").unwrap();
    }
    out
}
