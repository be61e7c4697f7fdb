//! the on-disk module file format and the point-expression grammar.
//!
//! module files are JSON: a format tag, an algebra descriptor, the
//! dimension, a parity vector, and per-generator sparse action entries as
//! 0-based triplets `[row, col, "p/q"]` with exact rational strings.
//! generators whose action is zero may be omitted. serialization is
//! canonical (sorted keys, fixed layout), so parse ∘ serialize is the
//! identity and reports built from the same file are byte-identical.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::algebra::{AlgebraSpec, Matrix, OddPoint, Parity, Supermodule};
use crate::scalar::Rat;

pub const FORMAT_TAG: &str = "supermodule/1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {detail}")]
    Io { path: String, detail: String },
    #[error("invalid module file: {0}")]
    Malformed(String),
    #[error("parse error at byte {position}: expected {expected}")]
    Point { position: usize, expected: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

/// a parsed module file: the module plus any validity metadata the file
/// carries.
#[derive(Debug, Clone)]
pub struct ModuleFile {
    pub module: Supermodule,
    pub stated_valid: Option<bool>,
}

/// "p" for integers, "p/q" otherwise, always in lowest terms.
pub fn rational_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// accepts `p` or `p/q` with optional leading minus; q must be positive.
pub fn parse_rational(text: &str) -> Option<Rat> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = num_text.trim().parse().ok()?;
    let denom: BigInt = match den_text {
        Some(d) => d.trim().parse().ok()?,
        None => BigInt::one(),
    };
    if denom <= BigInt::zero() {
        return None;
    }
    Some(Rat::new(numer, denom))
}

fn field<'v>(obj: &'v Map<String, Value>, name: &str) -> Result<&'v Value, FormatError> {
    obj.get(name)
        .ok_or_else(|| FormatError::Malformed(format!("missing field `{name}`")))
}

/// parse a module file from JSON text.
pub fn parse_module(text: &str) -> Result<ModuleFile, FormatError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| FormatError::Malformed(format!("not valid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| FormatError::Malformed("top level must be an object".to_string()))?;

    let tag = field(obj, "format")?
        .as_str()
        .ok_or_else(|| FormatError::Malformed("field `format` must be a string".to_string()))?;
    if tag != FORMAT_TAG {
        return Err(FormatError::Malformed(format!(
            "unsupported format tag `{tag}` (expected `{FORMAT_TAG}`)"
        )));
    }

    let algebra_text = field(obj, "algebra")?
        .as_str()
        .ok_or_else(|| FormatError::Malformed("field `algebra` must be a string".to_string()))?;
    let algebra = AlgebraSpec::parse(algebra_text).ok_or_else(|| {
        FormatError::Malformed(format!(
            "unknown algebra `{algebra_text}` (expected sl11, f_r, or exterior(s))"
        ))
    })?;

    let dim = field(obj, "dim")?
        .as_u64()
        .ok_or_else(|| FormatError::Malformed("field `dim` must be a non-negative integer".to_string()))?
        as usize;

    let parity_values = field(obj, "parity")?
        .as_array()
        .ok_or_else(|| FormatError::Malformed("field `parity` must be an array".to_string()))?;
    if parity_values.len() != dim {
        return Err(FormatError::Malformed(format!(
            "`parity` lists {} entries but `dim` is {dim}",
            parity_values.len()
        )));
    }
    let mut parity = Vec::with_capacity(dim);
    for (i, v) in parity_values.iter().enumerate() {
        let s = v.as_str().ok_or_else(|| {
            FormatError::Malformed(format!("parity[{i}] must be a string \"ev\" or \"od\""))
        })?;
        let p = Parity::parse(s).ok_or_else(|| {
            FormatError::Malformed(format!("parity[{i}] is `{s}` (expected \"ev\" or \"od\")"))
        })?;
        parity.push(p);
    }

    let actions_obj = field(obj, "actions")?
        .as_object()
        .ok_or_else(|| FormatError::Malformed("field `actions` must be an object".to_string()))?;
    let generator_names: Vec<String> =
        algebra.generators().into_iter().map(|(n, _)| n).collect();
    let mut actions: BTreeMap<String, Matrix> = BTreeMap::new();
    for (name, entries) in actions_obj {
        if !generator_names.iter().any(|g| g == name) {
            return Err(FormatError::Malformed(format!(
                "action for `{name}`, which is not a generator of {algebra}"
            )));
        }
        let list = entries.as_array().ok_or_else(|| {
            FormatError::Malformed(format!("actions.{name} must be an array of triplets"))
        })?;
        let mut mat = Matrix::zero(dim, dim);
        for (k, t) in list.iter().enumerate() {
            let triple = t.as_array().filter(|a| a.len() == 3).ok_or_else(|| {
                FormatError::Malformed(format!(
                    "actions.{name}[{k}] must be a triplet [row, col, \"p/q\"]"
                ))
            })?;
            let row = triple[0].as_u64().ok_or_else(|| {
                FormatError::Malformed(format!("actions.{name}[{k}]: row must be an integer"))
            })? as usize;
            let col = triple[1].as_u64().ok_or_else(|| {
                FormatError::Malformed(format!("actions.{name}[{k}]: col must be an integer"))
            })? as usize;
            if row >= dim || col >= dim {
                return Err(FormatError::Malformed(format!(
                    "actions.{name}[{k}]: entry ({row}, {col}) is out of range for dim {dim}"
                )));
            }
            let value_text = triple[2].as_str().ok_or_else(|| {
                FormatError::Malformed(format!(
                    "actions.{name}[{k}]: value must be a rational string"
                ))
            })?;
            let value = parse_rational(value_text).ok_or_else(|| {
                FormatError::Malformed(format!(
                    "actions.{name}[{k}]: `{value_text}` is not a rational p or p/q"
                ))
            })?;
            mat.set(row, col, value);
        }
        actions.insert(name.clone(), mat);
    }

    let stated_valid = match obj.get("valid") {
        None => None,
        Some(v) => Some(v.as_bool().ok_or_else(|| {
            FormatError::Malformed("field `valid` must be a boolean".to_string())
        })?),
    };

    let module = Supermodule::new(algebra, parity, actions)
        .map_err(|e| FormatError::Malformed(e.to_string()))?;
    Ok(ModuleFile { module, stated_valid })
}

/// canonical JSON text for a module: fixed field order, generators in the
/// algebra's canonical order, zero actions omitted, one triplet list per
/// line, trailing newline. hand-rolled so fixtures stay compact and
/// diffs stay readable; every emitted string is plain ASCII with nothing
/// to escape.
pub fn serialize_module(m: &Supermodule, stated_valid: Option<bool>) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"format\": \"{FORMAT_TAG}\",\n"));
    out.push_str(&format!("  \"algebra\": \"{}\",\n", m.algebra()));
    out.push_str(&format!("  \"dim\": {},\n", m.dim()));
    let parts: Vec<String> =
        m.parity().iter().map(|p| format!("\"{}\"", p.as_str())).collect();
    out.push_str(&format!("  \"parity\": [{}],\n", parts.join(", ")));
    out.push_str("  \"actions\": {");
    let mut wrote_any = false;
    for (name, _) in m.algebra().generators() {
        let mat = m.action(&name);
        if mat.is_zero() {
            continue;
        }
        if wrote_any {
            out.push(',');
        }
        wrote_any = true;
        let triplets: Vec<String> = mat
            .entries()
            .map(|(r, c, v)| format!("[{r}, {c}, \"{}\"]", rational_to_string(v)))
            .collect();
        out.push_str(&format!("\n    \"{name}\": [{}]", triplets.join(", ")));
    }
    if wrote_any {
        out.push_str("\n  }");
    } else {
        out.push('}');
    }
    match stated_valid {
        Some(v) => out.push_str(&format!(",\n  \"valid\": {v}\n}}\n")),
        None => out.push_str("\n}\n"),
    }
    out
}

pub fn read_module_file(path: &Path) -> Result<ModuleFile, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    parse_module(&text)
}

pub fn write_module_file(
    path: &Path,
    m: &Supermodule,
    stated_valid: Option<bool>,
) -> Result<(), FormatError> {
    std::fs::write(path, serialize_module(m, stated_valid)).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

/// parse a point expression over the given algebra.
///
/// grammar: `expr := term (('+'|'-') term)*`, `term := [rational '*']
/// generator`, `rational := ['-'] digits ['/' digits]`. duplicate
/// generators accumulate. the zero point parses; operations that need a
/// nonzero point reject it downstream.
pub fn parse_point(text: &str, algebra: &AlgebraSpec) -> Result<OddPoint, FormatError> {
    let odd = algebra.odd_generators();
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut coeffs = vec![Rat::zero(); odd.len()];

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let err = |position: usize, expected: &str| FormatError::Point {
        position,
        expected: expected.to_string(),
    };

    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            if first {
                return Err(err(pos, "a term"));
            }
            break;
        }
        // sign between terms (optional leading sign on the first term)
        let mut sign = Rat::one();
        match bytes[pos] {
            b'+' => {
                pos += 1;
            }
            b'-' => {
                sign = -Rat::one();
                pos += 1;
            }
            _ if !first => return Err(err(pos, "'+' or '-'")),
            _ => {}
        }
        first = false;
        skip_ws(&mut pos);
        // optional rational coefficient followed by '*'
        let mut coeff = Rat::one();
        if pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'-') {
            let start = pos;
            if bytes[pos] == b'-' {
                pos += 1;
            }
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            let lit = &text[start..pos];
            coeff = parse_rational(lit).ok_or_else(|| err(start, "a rational p or p/q"))?;
            skip_ws(&mut pos);
            if pos >= bytes.len() || bytes[pos] != b'*' {
                return Err(err(pos, "'*' between coefficient and generator"));
            }
            pos += 1;
            skip_ws(&mut pos);
        }
        // generator name
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        if start == pos {
            return Err(err(start, "a generator name"));
        }
        let name = &text[start..pos];
        let idx = odd
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| FormatError::UnknownGenerator(name.to_string()))?;
        coeffs[idx] += sign * coeff;
    }

    Ok(OddPoint::new(algebra.clone(), coeffs)
        .expect("coefficient count matches the algebra by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{kac0, w_module};
    use crate::scalar::{rat, rint};

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rint(5)), "5");
        assert_eq!(rational_to_string(&rat(-3, 2)), "-3/2");
        assert_eq!(parse_rational("7").unwrap(), rint(7));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational(" 1/3 ").unwrap(), rat(1, 3));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
        assert!(parse_rational("1/-2").is_none());
    }

    #[test]
    fn round_trip_is_identity() {
        for m in [kac0(), w_module(3)] {
            let text = serialize_module(&m, Some(true));
            let parsed = parse_module(&text).unwrap();
            assert_eq!(parsed.module, m);
            assert_eq!(parsed.stated_valid, Some(true));
            // canonical text survives a second round trip byte for byte
            assert_eq!(serialize_module(&parsed.module, parsed.stated_valid), text);
        }
    }

    #[test]
    fn serialization_lists_sparse_entries() {
        let text = serialize_module(&kac0(), None);
        assert!(text.contains("\"supermodule/1\""));
        assert!(text.contains("\"sl11\""));
        assert!(text.contains("\"y1\""));
        // the zero actions of t1 and x1 are omitted
        assert!(!text.contains("\"t1\""));
        assert!(!text.contains("\"x1\""));
    }

    #[test]
    fn parse_rejects_malformed_files() {
        assert!(matches!(parse_module("not json"), Err(FormatError::Malformed(_))));
        let missing = r#"{"format": "supermodule/1", "algebra": "sl11"}"#;
        assert!(matches!(parse_module(missing), Err(FormatError::Malformed(_))));
        let bad_tag = r#"{"format": "supermodule/9", "algebra": "sl11", "dim": 0,
                          "parity": [], "actions": {}}"#;
        assert!(parse_module(bad_tag).unwrap_err().to_string().contains("format tag"));
        let out_of_range = r#"{"format": "supermodule/1", "algebra": "exterior(2)",
            "dim": 2, "parity": ["ev", "od"],
            "actions": {"z1": [[2, 0, "1"]]}}"#;
        assert!(parse_module(out_of_range).unwrap_err().to_string().contains("out of range"));
        let bad_gen = r#"{"format": "supermodule/1", "algebra": "exterior(2)",
            "dim": 1, "parity": ["ev"], "actions": {"q9": []}}"#;
        assert!(parse_module(bad_gen).unwrap_err().to_string().contains("not a generator"));
    }

    #[test]
    fn invalid_relations_still_parse() {
        // an exterior generator that fails to square to zero parses fine;
        // validation is a separate concern
        let text = r#"{"format": "supermodule/1", "algebra": "exterior(1)",
            "dim": 2, "parity": ["ev", "od"],
            "actions": {"z1": [[1, 0, "1"], [0, 1, "1"]]}}"#;
        let parsed = parse_module(text).unwrap();
        assert!(!parsed.module.validate().is_empty());
    }

    #[test]
    fn point_grammar() {
        let sl = AlgebraSpec::sl11();
        let p = parse_point("x1", &sl).unwrap();
        assert_eq!(p.coeffs(), &[rint(1), rint(0)]);
        let p = parse_point("x1 + y1", &sl).unwrap();
        assert!(!p.in_weak_cone());
        let f2 = AlgebraSpec::f(2);
        let p = parse_point("2/3*x1 - y2", &f2).unwrap();
        assert_eq!(p.coeffs(), &[rat(2, 3), rint(0), rint(0), rint(-1)]);
        assert!(p.in_weak_cone());
        // duplicates accumulate
        let p = parse_point("x1 + x1 - 3*x1", &sl).unwrap();
        assert_eq!(p.coeffs(), &[rint(-1), rint(0)]);
        // a cancelling expression parses to the zero point
        let p = parse_point("x1 - x1", &sl).unwrap();
        assert!(p.is_zero());
        // leading minus and explicit fractions
        let p = parse_point("-x1 + 1/2*y1", &sl).unwrap();
        assert_eq!(p.coeffs(), &[rint(-1), rat(1, 2)]);
    }

    #[test]
    fn point_errors() {
        let sl = AlgebraSpec::sl11();
        assert!(matches!(
            parse_point("x9", &sl),
            Err(FormatError::UnknownGenerator(_))
        ));
        assert!(matches!(parse_point("", &sl), Err(FormatError::Point { .. })));
        assert!(matches!(parse_point("2*", &sl), Err(FormatError::Point { .. })));
        assert!(matches!(parse_point("2 x1", &sl), Err(FormatError::Point { .. })));
        assert!(matches!(parse_point("x1 y1", &sl), Err(FormatError::Point { .. })));
        // t1 is even, not a point coordinate
        assert!(matches!(
            parse_point("t1", &sl),
            Err(FormatError::UnknownGenerator(_))
        ));
    }

    #[test]
    fn algebra_descriptor_round_trip() {
        for a in [
            AlgebraSpec::sl11(),
            AlgebraSpec::f(3),
            AlgebraSpec::exterior(1),
            AlgebraSpec::exterior(4),
        ] {
            assert_eq!(AlgebraSpec::parse(&a.to_string()), Some(a));
        }
        assert_eq!(AlgebraSpec::parse("f_1"), Some(AlgebraSpec::sl11()));
        assert!(AlgebraSpec::parse("exterior(0)").is_none());
        assert!(AlgebraSpec::parse("gl(2|3)").is_none());
    }
}
