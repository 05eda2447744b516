//! Text and JSON file formats for complexes and prime families.
//!
//! Complex text format:
//!
//! ```text
//! # hollow triangle
//! n 3
//! facet 1 2
//! facet 1 3
//! facet 2 3
//! ```
//!
//! An `empty` line declares the irrelevant complex `{∅}`; a file with a
//! header and no facets is the void complex. Prime families use `prime`
//! lines instead of `facet` lines, and an empty `prime` line is the zero
//! ideal. The JSON forms are `{"n": 3, "facets": [[1, 2], ...]}` and
//! `{"n": 3, "primes": [[1], ...]}`.

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::stanley_reisner::PrimeFamily;

/// A parsed value together with non-fatal notices (merged facets and the
/// like) meant for stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed<T> {
    pub value: T,
    pub notices: Vec<String>,
}

/// Either kind of input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Complex(SimplicialComplex),
    Primes(PrimeFamily),
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PrimesJson {
    n: usize,
    primes: Vec<Vec<usize>>,
}

fn parse_err(line: usize, token: &str, message: impl Into<String>) -> Error {
    Error::Parse { line, token: token.to_string(), message: message.into() }
}

fn json_err(e: serde_json::Error) -> Error {
    parse_err(e.line(), "json", e.to_string())
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

struct Lines<'a> {
    n: usize,
    rows: Vec<(usize, &'a str, Vec<&'a str>)>,
}

/// Splits a text file into a header and keyword rows.
fn tokenize(text: &str) -> Result<Lines<'_>> {
    let mut n = None;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut words = trimmed.split_whitespace();
        let key = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        if n.is_none() {
            if key != "n" {
                return Err(parse_err(line, key, "expected header `n <integer>`"));
            }
            let [count] = rest.as_slice() else {
                return Err(parse_err(line, trimmed, "header takes exactly one integer"));
            };
            let value = count
                .parse::<usize>()
                .map_err(|_| parse_err(line, count, "vertex count is not a non-negative integer"))?;
            n = Some(value);
            continue;
        }
        if key == "n" {
            return Err(parse_err(line, key, "duplicate header"));
        }
        rows.push((line, key, rest));
    }
    match n {
        Some(n) => Ok(Lines { n, rows }),
        None => Err(parse_err(1, "", "empty file: missing header `n <integer>`")),
    }
}

fn parse_vertices(line: usize, n: usize, words: &[&str]) -> Result<Simplex> {
    let mut out = Vec::with_capacity(words.len());
    for w in words {
        let v = w
            .parse::<usize>()
            .map_err(|_| parse_err(line, w, "vertex is not a positive integer"))?;
        if v == 0 || v > n {
            return Err(parse_err(line, w, format!("vertex {v} out of range 1..={n}")));
        }
        if out.contains(&v) {
            return Err(parse_err(line, w, format!("vertex {v} repeated")));
        }
        out.push(v);
    }
    Ok(Simplex::new(out))
}

fn merged_notice(listed: usize, kept: usize) -> Option<String> {
    (listed > kept).then(|| {
        format!("note: merged {} duplicate or contained facet(s)", listed - kept)
    })
}

pub fn parse_complex(text: &str) -> Result<Parsed<SimplicialComplex>> {
    if looks_like_json(text) {
        let raw: ComplexJson = serde_json::from_str(text).map_err(json_err)?;
        let listed = raw.facets.len();
        let faces: Vec<Simplex> = raw.facets.into_iter().map(Simplex::new).collect();
        let include_empty = faces.iter().any(Simplex::is_empty);
        let k = SimplicialComplex::new(raw.n, faces, include_empty)
            .map_err(|e| parse_err(1, "json", e.to_string()))?;
        let kept = k.facets().len();
        return Ok(Parsed { notices: merged_notice(listed, kept).into_iter().collect(), value: k });
    }
    let lines = tokenize(text)?;
    let mut faces = Vec::new();
    let mut include_empty = false;
    for (line, key, rest) in &lines.rows {
        match *key {
            "facet" => faces.push(parse_vertices(*line, lines.n, rest)?),
            "empty" => {
                if let Some(w) = rest.first() {
                    return Err(parse_err(*line, w, "`empty` takes no arguments"));
                }
                include_empty = true;
            }
            other => return Err(parse_err(*line, other, "unknown keyword (expected `facet` or `empty`)")),
        }
    }
    let listed = faces.len();
    let k = SimplicialComplex::new(lines.n, faces, include_empty)?;
    let notices = merged_notice(listed, k.facets().len()).into_iter().collect();
    Ok(Parsed { value: k, notices })
}

pub fn parse_primes(text: &str) -> Result<Parsed<PrimeFamily>> {
    let (n, primes) = if looks_like_json(text) {
        let raw: PrimesJson = serde_json::from_str(text).map_err(json_err)?;
        (raw.n, raw.primes.into_iter().map(Simplex::new).collect::<Vec<_>>())
    } else {
        let lines = tokenize(text)?;
        let mut primes = Vec::new();
        for (line, key, rest) in &lines.rows {
            if *key != "prime" {
                return Err(parse_err(*line, key, "unknown keyword (expected `prime`)"));
            }
            primes.push(parse_vertices(*line, lines.n, rest)?);
        }
        (lines.n, primes)
    };
    let family = PrimeFamily::new(n, primes).map_err(|e| parse_err(1, "prime", e.to_string()))?;
    Ok(Parsed { value: family.canonical(), notices: Vec::new() })
}

/// Parses a complex or, when the file has `prime` lines or a `primes` key,
/// a prime family.
pub fn parse_input(text: &str) -> Result<Parsed<Input>> {
    let is_primes = if looks_like_json(text) {
        serde_json::from_str::<serde_json::Value>(text)
            .map_err(json_err)?
            .get("primes")
            .is_some()
    } else {
        text.lines().any(|l| l.split_whitespace().next() == Some("prime"))
    };
    if is_primes {
        let p = parse_primes(text)?;
        Ok(Parsed { value: Input::Primes(p.value), notices: p.notices })
    } else {
        let c = parse_complex(text)?;
        Ok(Parsed { value: Input::Complex(c.value), notices: c.notices })
    }
}

fn join(s: &Simplex) -> String {
    s.vertices().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn render_complex(k: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", k.n());
    if k.is_irrelevant() {
        out.push_str("empty\n");
        return out;
    }
    for f in k.facets() {
        out.push_str(&format!("facet {}\n", join(f)));
    }
    out
}

pub fn render_primes(p: &PrimeFamily) -> String {
    let mut out = format!("n {}\n", p.ambient());
    for q in p.primes() {
        let body = join(q);
        if body.is_empty() {
            out.push_str("prime\n");
        } else {
            out.push_str(&format!("prime {body}\n"));
        }
    }
    out
}

pub fn complex_to_json(k: &SimplicialComplex) -> serde_json::Value {
    serde_json::to_value(ComplexJson {
        n: k.n(),
        facets: k.facets().iter().map(|f| f.vertices().to_vec()).collect(),
    })
    .expect("plain data serializes")
}

pub fn primes_to_json(p: &PrimeFamily) -> serde_json::Value {
    serde_json::to_value(PrimesJson {
        n: p.ambient(),
        primes: p.primes().iter().map(|f| f.vertices().to_vec()).collect(),
    })
    .expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_hollow_triangle() {
        let p = parse_complex("n 3\nfacet 1 2\nfacet 2 3\nfacet 1 3\n").unwrap();
        assert_eq!(p.value.facets().len(), 3);
        assert_eq!(p.value.dim(), 1);
        assert!(p.notices.is_empty());
    }

    #[test]
    fn parses_irrelevant_and_void() {
        assert!(parse_complex("n 2\nempty\n").unwrap().value.is_irrelevant());
        assert!(parse_complex("# nothing\nn 2\n").unwrap().value.is_void());
    }

    #[test]
    fn reports_out_of_range_vertex_with_line() {
        let err = parse_complex("n 3\nfacet 1 4\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 2, token: "4".into(), message: "vertex 4 out of range 1..=3".into() }
        );
    }

    #[test]
    fn header_errors() {
        assert!(matches!(parse_complex(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("facet 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("n x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("n 2\nface 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn merges_contained_facets_with_notice() {
        let p = parse_complex("n 3\nfacet 1 2 3\nfacet 1 2\nfacet 1 2 3\n").unwrap();
        assert_eq!(p.value.facets().len(), 1);
        assert_eq!(p.notices.len(), 1);
    }

    #[test]
    fn json_round_trip() {
        let k = parse_complex("{\"n\": 3, \"facets\": [[1,2],[2,3]]}").unwrap().value;
        assert_eq!(k.facets().len(), 2);
        let back = parse_complex(&complex_to_json(&k).to_string()).unwrap().value;
        assert_eq!(back, k);
        let irr = SimplicialComplex::irrelevant(2);
        assert_eq!(parse_complex(&complex_to_json(&irr).to_string()).unwrap().value, irr);
    }

    #[test]
    fn primes_text_and_json() {
        let p = parse_primes("n 3\nprime 3\nprime 1\nprime 2\n").unwrap().value;
        assert_eq!(p.primes(), &[Simplex::from([1]), Simplex::from([2]), Simplex::from([3])]);
        let zero = parse_primes("n 2\nprime\n").unwrap().value;
        assert_eq!(zero.primes(), &[Simplex::empty()]);
        assert_eq!(render_primes(&zero), "n 2\nprime\n");
        let j = parse_primes(&primes_to_json(&p).to_string()).unwrap().value;
        assert_eq!(j, p);
        assert!(parse_primes("n 2\nprime 1\nprime 1 2\n").is_err());
    }

    #[test]
    fn detects_input_kind() {
        assert!(matches!(parse_input("n 2\nprime 1\n").unwrap().value, Input::Primes(_)));
        assert!(matches!(parse_input("n 2\nfacet 1\n").unwrap().value, Input::Complex(_)));
        assert!(matches!(
            parse_input("{\"n\":2,\"primes\":[[1]]}").unwrap().value,
            Input::Primes(_)
        ));
    }
}
