//! JSON interchange: `{"vertices": <count or label list>, "facets": [[label, ...], ...]}`.
//!
//! A vertex count `n` stands for the labels `1..=n`. Labels may be JSON
//! integers or strings and keep their order of appearance in the vertex
//! list. Output lists faces in increasing bitmask order.

use serde_json::{json, Value};

use crate::bits::{self, Face};
use crate::complex::Complex;
use crate::error::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn label_of(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_u64() || n.is_i64() => Ok(n.to_string()),
        other => Err(parse_err(format!("vertex labels are integers or strings, found {other}"))),
    }
}

fn label_value(s: &str) -> Value {
    let canonical = s == "0" || (!s.starts_with('0') && !s.is_empty());
    match s.parse::<u64>() {
        Ok(n) if canonical && s.bytes().all(|b| b.is_ascii_digit()) => json!(n),
        _ => json!(s),
    }
}

/// Parses a face given as a label list.
pub fn face_from_value(c: &Complex, v: &Value) -> Result<Face> {
    let items = v.as_array().ok_or_else(|| parse_err(format!("a face is a list, found {v}")))?;
    let mut x = 0;
    for item in items {
        let l = label_of(item)?;
        let i = c
            .labels()
            .iter()
            .position(|k| *k == l)
            .ok_or_else(|| parse_err(format!("unknown vertex label {l:?}")))?;
        x |= bits::bit(i);
    }
    Ok(x)
}

/// Parses a list of faces given as label lists.
pub fn faces_from_value(c: &Complex, v: &Value) -> Result<Vec<Face>> {
    v.as_array()
        .ok_or_else(|| parse_err("expected a list of faces"))?
        .iter()
        .map(|f| face_from_value(c, f))
        .collect()
}

pub fn complex_from_value(v: &Value) -> Result<Complex> {
    let obj = v.as_object().ok_or_else(|| parse_err("expected a JSON object"))?;
    let labels: Vec<String> = match obj.get("vertices") {
        Some(Value::Number(n)) => {
            let n = n.as_u64().ok_or_else(|| parse_err("vertex count must be a nonnegative integer"))?;
            (1..=n).map(|i| i.to_string()).collect()
        }
        Some(Value::Array(xs)) => xs.iter().map(label_of).collect::<Result<_>>()?,
        Some(other) => return Err(parse_err(format!("\"vertices\" must be a count or a list, found {other}"))),
        None => return Err(parse_err("missing \"vertices\"")),
    };
    let n = labels.len();
    let skeleton = Complex::new(n, [])?
        .with_labels(labels)
        .map_err(|e| parse_err(e.to_string()))?;
    let facets = match obj.get("facets") {
        Some(f) => faces_from_value(&skeleton, f)?,
        None => return Err(parse_err("missing \"facets\"")),
    };
    Complex::new(n, facets)?.with_labels(skeleton.labels().to_vec())
}

/// Parses the JSON text of a complex. Syntax errors carry line and column.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    complex_from_value(&v)
}

fn default_labels(c: &Complex) -> bool {
    c.labels().iter().enumerate().all(|(i, l)| *l == (i + 1).to_string())
}

/// Label list of one face.
pub fn face_value(c: &Complex, x: Face) -> Value {
    Value::Array(bits::indices(x).map(|i| label_value(&c.labels()[i])).collect())
}

/// Faces as label lists, sorted by bitmask.
pub fn faces_value(c: &Complex, xs: impl IntoIterator<Item = Face>) -> Value {
    let mut xs: Vec<Face> = xs.into_iter().collect();
    xs.sort_unstable();
    xs.dedup();
    Value::Array(xs.into_iter().map(|x| face_value(c, x)).collect())
}

pub fn complex_value(c: &Complex) -> Value {
    let vertices = if default_labels(c) {
        json!(c.n())
    } else {
        Value::Array(c.labels().iter().map(|l| label_value(l)).collect())
    };
    json!({ "vertices": vertices, "facets": faces_value(c, c.facets().iter().copied()) })
}

/// Compact one-line JSON text.
pub fn complex_to_string(c: &Complex) -> String {
    complex_value(c).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_over_the_catalog() {
        for e in catalog::registry() {
            let c = e.build(&catalog::Params::new()).unwrap();
            let back = parse_complex(&complex_to_string(&c)).unwrap();
            assert_eq!(back, c, "{}", e.name);
            assert_eq!(back.labels(), c.labels(), "{}", e.name);
        }
    }

    #[test]
    fn integer_and_string_labels() {
        let c = parse_complex(r#"{"vertices": 4, "facets": [[1,2,3],[3,4]]}"#).unwrap();
        assert_eq!(c.facets(), &[0b0111, 0b1100]);
        let text = complex_to_string(&c);
        assert_eq!(text, r#"{"facets":[[1,2,3],[3,4]],"vertices":4}"#);
        let d = parse_complex(r#"{"vertices": ["b", 7, "a"], "facets": [["a", 7]]}"#).unwrap();
        assert_eq!(d.labels(), &["b", "7", "a"]);
        assert_eq!(d.facets(), &[0b001, 0b110]);
        assert_eq!(
            complex_value(&d),
            json!({"vertices": ["b", 7, "a"], "facets": [["b"], [7, "a"]]})
        );
        let z = parse_complex(r#"{"vertices": ["01", "1"], "facets": [["01", "1"]]}"#).unwrap();
        assert_eq!(parse_complex(&complex_to_string(&z)).unwrap().labels(), z.labels());
    }

    #[test]
    fn malformed_input() {
        let bad = [
            "{\"vertices\": 3,\n \"facets\": [[1,2]",
            r#"{"facets": []}"#,
            r#"{"vertices": 3}"#,
            r#"{"vertices": 3, "facets": [[1,5]]}"#,
            r#"{"vertices": [1, 1], "facets": []}"#,
            r#"{"vertices": [1.5], "facets": []}"#,
            r#"[1, 2]"#,
        ];
        for text in bad {
            assert!(matches!(parse_complex(text), Err(Error::Parse(_))), "{text}");
        }
        let Err(Error::Parse(msg)) = parse_complex(bad[0]) else { unreachable!() };
        assert!(msg.contains("line 2"), "{msg}");
    }
}
