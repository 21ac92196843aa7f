//! Text and JSON forms of systems.
//!
//! Text, one triple per line (optional header `sts <n>`; n inferred from the
//! largest point otherwise):
//!
//! ```text
//! sts 7
//! 1 2 3
//! 1 4 5
//! ```
//!
//! Oriented lines use brackets: `[1,2,3]`. JSON forms are
//! `{"n":7,"triples":[[1,2,3],...]}` and `{"n":7,"oriented":[[1,2,3],...]}`.

use serde::{Deserialize, Serialize};

use crate::design::builtin::BuiltinModel;
use crate::design::system::{validate_sts, OrientedSts, SteinerTripleSystem};
use crate::design::triple::Triple;
use crate::error::{Error, Result};

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

fn parse_point(tok: &str, line: usize, col: usize) -> Result<u32> {
    tok.parse::<u32>()
        .ok()
        .filter(|&p| p >= 1)
        .ok_or_else(|| syntax(line, col, format!("expected a point label, got {tok:?}")))
}

struct Lines {
    header_n: Option<usize>,
    plain: Vec<[u32; 3]>,
    bracketed: Vec<[u32; 3]>,
}

fn scan_text(input: &str) -> Result<Lines> {
    let mut out = Lines {
        header_n: None,
        plain: vec![],
        bracketed: vec![],
    };
    let mut saw_content = false;
    for (li, raw) in input.lines().enumerate() {
        let lineno = li + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if !saw_content {
            if let Some(rest) = line.strip_prefix("sts") {
                let rest = rest.trim();
                let n = rest
                    .parse::<usize>()
                    .map_err(|_| syntax(lineno, 1, "bad header: expected `sts <n>`"))?;
                out.header_n = Some(n);
                saw_content = true;
                continue;
            }
        }
        saw_content = true;
        if let Some(inner) = line.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| syntax(lineno, line.len(), "missing closing bracket"))?;
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(syntax(lineno, 1, "an oriented triple has exactly 3 points"));
            }
            let a = parse_point(parts[0], lineno, 2)?;
            let b = parse_point(parts[1], lineno, 2)?;
            let c = parse_point(parts[2], lineno, 2)?;
            out.bracketed.push([a, b, c]);
        } else {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(syntax(lineno, 1, "a triple line has exactly 3 points"));
            }
            let a = parse_point(parts[0], lineno, 1)?;
            let b = parse_point(parts[1], lineno, 1)?;
            let c = parse_point(parts[2], lineno, 1)?;
            out.plain.push([a, b, c]);
        }
    }
    if !out.plain.is_empty() && !out.bracketed.is_empty() {
        return Err(syntax(1, 1, "mixed oriented and unoriented triple lines"));
    }
    Ok(out)
}

fn infer_n(header: Option<usize>, triples: &[[u32; 3]]) -> Result<usize> {
    if let Some(n) = header {
        return Ok(n);
    }
    triples
        .iter()
        .flatten()
        .copied()
        .max()
        .map(|m| m as usize)
        .ok_or_else(|| syntax(1, 1, "empty input"))
}

/// Parses either form from text, dispatching on bracketed lines.
pub fn parse_text(input: &str) -> Result<BuiltinModel> {
    let scanned = scan_text(input)?;
    if scanned.bracketed.is_empty() {
        let n = infer_n(scanned.header_n, &scanned.plain)?;
        let triples: Vec<Triple> = scanned
            .plain
            .iter()
            .map(|&[a, b, c]| Triple::new(a, b, c))
            .collect::<Result<_>>()?;
        Ok(BuiltinModel::Unoriented(validate_sts(n, triples)?))
    } else {
        let n = infer_n(scanned.header_n, &scanned.bracketed)?;
        Ok(BuiltinModel::Oriented(OrientedSts::from_cycles(
            n,
            &scanned.bracketed,
        )?))
    }
}

pub fn system_to_text(sts: &SteinerTripleSystem) -> String {
    let mut out = format!("sts {}\n", sts.n());
    for t in sts.triples() {
        let [a, b, c] = t.labels();
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

pub fn oriented_to_text(o: &OrientedSts) -> String {
    let mut out = format!("sts {}\n", o.n());
    for c in o.cycles() {
        out.push_str(&format!("{c}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    n: usize,
    triples: Vec<[u32; 3]>,
}

#[derive(Serialize, Deserialize)]
struct OrientedJson {
    n: usize,
    oriented: Vec<[u32; 3]>,
}

fn json_err(e: &serde_json::Error) -> Error {
    syntax(e.line().max(1), e.column().max(1), e.to_string())
}

/// Parses either JSON form, dispatching on the `oriented` key.
pub fn parse_json(input: &str) -> Result<BuiltinModel> {
    let value: serde_json::Value = serde_json::from_str(input).map_err(|e| json_err(&e))?;
    if value.get("oriented").is_some() {
        let parsed: OrientedJson = serde_json::from_value(value).map_err(|e| json_err(&e))?;
        Ok(BuiltinModel::Oriented(OrientedSts::from_cycles(
            parsed.n,
            &parsed.oriented,
        )?))
    } else {
        let parsed: SystemJson = serde_json::from_value(value).map_err(|e| json_err(&e))?;
        let triples: Vec<Triple> = parsed
            .triples
            .iter()
            .map(|&[a, b, c]| Triple::new(a, b, c))
            .collect::<Result<_>>()?;
        Ok(BuiltinModel::Unoriented(validate_sts(parsed.n, triples)?))
    }
}

pub fn system_to_json(sts: &SteinerTripleSystem) -> String {
    serde_json::to_string(&SystemJson {
        n: sts.n(),
        triples: sts.triples().iter().map(|t| t.labels()).collect(),
    })
    .expect("system serializes")
}

pub fn oriented_to_json(o: &OrientedSts) -> String {
    serde_json::to_string(&OrientedJson {
        n: o.n(),
        oriented: o.cycles().iter().map(|c| c.labels()).collect(),
    })
    .expect("orientation serializes")
}

/// Parses text or JSON, sniffing the leading character.
pub fn parse_any(input: &str) -> Result<BuiltinModel> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::builtin;

    #[test]
    fn text_round_trip_unoriented() {
        let sts = builtin::unoriented("sts7").unwrap();
        let text = system_to_text(&sts);
        match parse_text(&text).unwrap() {
            BuiltinModel::Unoriented(back) => assert_eq!(back, sts),
            _ => panic!("expected unoriented"),
        }
    }

    #[test]
    fn text_round_trip_oriented() {
        let o = builtin::oriented("o1_9").unwrap();
        let text = oriented_to_text(&o);
        match parse_text(&text).unwrap() {
            BuiltinModel::Oriented(back) => assert_eq!(back, o),
            _ => panic!("expected oriented"),
        }
    }

    #[test]
    fn json_round_trip() {
        let o = builtin::oriented("zd7").unwrap();
        let json = oriented_to_json(&o);
        match parse_json(&json).unwrap() {
            BuiltinModel::Oriented(back) => assert_eq!(back, o),
            _ => panic!("expected oriented"),
        }
        let sts = builtin::unoriented("sts9").unwrap();
        match parse_json(&system_to_json(&sts)).unwrap() {
            BuiltinModel::Unoriented(back) => assert_eq!(back, sts),
            _ => panic!("expected unoriented"),
        }
    }

    #[test]
    fn header_optional_and_whitespace_tolerated() {
        let input = "  [1,2,3]  \n\n";
        match parse_text(input).unwrap() {
            BuiltinModel::Oriented(o) => assert_eq!(o.n(), 3),
            _ => panic!(),
        }
        let with_header = "sts 3\n[1,2,3]\n";
        let a = parse_text(with_header).unwrap();
        assert_eq!(a.n(), 3);
    }

    #[test]
    fn short_bracket_is_syntax_error() {
        match parse_text("[1,2]") {
            Err(Error::Syntax { line: 1, .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn semantic_errors_delegate_to_validation() {
        let input = "sts 7\n1 2 3\n1 2 4\n";
        assert!(matches!(
            parse_text(input),
            Err(Error::PairDoubleCovered(1, 2))
        ));
    }

    #[test]
    fn json_syntax_error_has_position() {
        match parse_json("{\"n\":7,") {
            Err(Error::Syntax { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
    }
}
