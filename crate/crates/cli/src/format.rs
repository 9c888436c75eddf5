//! Text formats for codes and ensembles.
//!
//! Code definition:
//! ```text
//! # comment lines and blanks are ignored
//! field N=<nat> poly=<hex>        (poly optional: default modulus)
//! code n=<nat> k=<nat>
//! row <hex> <hex> ... <hex>       (k rows of n field elements)
//! ```
//!
//! Ensemble files hold several blocks separated by `---` lines; a block is
//! either a code definition or
//! ```text
//! circulant N=<nat>
//! basis <hex> <hex> ...
//! ```
//!
//! Elements serialize as lowercase hex of the coefficient integer with bit i
//! holding the coefficient of x^i. Polynomials are also accepted in symbolic
//! form such as `1+x+x^3`.

use std::fmt;

use rankcode_core::circulant::{CirculantRankCode, CirculantWord};
use rankcode_core::code::{FieldMatrix, LinearRdCode};
use rankcode_core::gf2::RankVector;
use rankcode_core::mcode::{Component, Ensemble};
use rankcode_core::{Error as CoreError, FieldContext};

/// A parse failure with the 1-based line it happened on.
#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn core_at(line: usize, err: CoreError) -> ParseError {
    ParseError { line, message: err.to_string() }
}

/// Parses `key=value` out of a token.
fn keyed<'a>(token: &'a str, key: &str, line: usize) -> Result<&'a str, ParseError> {
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| at(line, format!("expected {key}=<value>, found '{token}'")))
}

fn parse_usize(text: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    text.parse::<usize>().map_err(|_| at(line, format!("{what} must be a number, found '{text}'")))
}

fn parse_hex(text: &str, line: usize, what: &str) -> Result<u64, ParseError> {
    u64::from_str_radix(text, 16)
        .map_err(|_| at(line, format!("{what} must be hexadecimal, found '{text}'")))
}

/// A polynomial over GF(2), as hex or symbolic `1+x+x^3`.
pub fn parse_poly(text: &str) -> Result<u64, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty polynomial".into());
    }
    if !trimmed.contains('x') {
        return u64::from_str_radix(trimmed, 16)
            .map_err(|_| format!("'{trimmed}' is neither hex nor symbolic"));
    }
    let mut bits = 0u64;
    for term in trimmed.split('+') {
        let term = term.trim();
        let bit = if term == "1" {
            0
        } else if term == "x" {
            1
        } else if let Some(exp) = term.strip_prefix("x^") {
            exp.parse::<u32>().map_err(|_| format!("bad exponent in '{term}'"))?
        } else {
            return Err(format!("bad term '{term}'"));
        };
        if bit >= 64 {
            return Err(format!("exponent {bit} too large"));
        }
        bits ^= 1 << bit;
    }
    Ok(bits)
}

/// Numbered, non-comment, non-blank lines.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// The raw contents of one code definition.
#[derive(Debug, Clone)]
pub struct CodeDefinition {
    pub ctx: FieldContext,
    pub n: usize,
    pub k: usize,
    pub rows: Vec<Vec<u16>>,
}

impl CodeDefinition {
    pub fn matrix(&self) -> Result<FieldMatrix, CoreError> {
        let entries: Vec<u16> = self.rows.iter().flatten().copied().collect();
        FieldMatrix::from_bits(self.ctx, self.k, self.n, entries)
    }

    pub fn code(&self) -> Result<LinearRdCode, CoreError> {
        LinearRdCode::new(self.matrix()?)
    }
}

fn parse_code_block<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    first: (usize, &'a str),
) -> Result<CodeDefinition, ParseError> {
    let (field_line, field_text) = first;
    let mut tokens = field_text.split_whitespace();
    match tokens.next() {
        Some("field") => {}
        other => {
            return Err(at(
                field_line,
                format!("expected 'field N=<nat> poly=<hex>', found '{}'", other.unwrap_or("")),
            ))
        }
    }
    let n_tok = tokens.next().ok_or_else(|| at(field_line, "missing N=<nat>"))?;
    let degree = parse_usize(keyed(n_tok, "N", field_line)?, field_line, "N")?;
    let poly = match tokens.next() {
        Some(tok) => Some(parse_hex(keyed(tok, "poly", field_line)?, field_line, "poly")? as u32),
        None => None,
    };
    let ctx = FieldContext::new(degree, poly).map_err(|e| core_at(field_line, e))?;

    let (code_line, code_text) =
        lines.next().ok_or_else(|| at(field_line, "missing 'code n=<nat> k=<nat>' line"))?;
    let mut tokens = code_text.split_whitespace();
    if tokens.next() != Some("code") {
        return Err(at(code_line, format!("expected 'code n=<nat> k=<nat>', found '{code_text}'")));
    }
    let n_tok = tokens.next().ok_or_else(|| at(code_line, "missing n=<nat>"))?;
    let n = parse_usize(keyed(n_tok, "n", code_line)?, code_line, "n")?;
    let k_tok = tokens.next().ok_or_else(|| at(code_line, "missing k=<nat>"))?;
    let k = parse_usize(keyed(k_tok, "k", code_line)?, code_line, "k")?;

    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (row_line, row_text) =
            lines.next().ok_or_else(|| at(code_line, format!("expected {k} row lines")))?;
        let mut tokens = row_text.split_whitespace();
        if tokens.next() != Some("row") {
            return Err(at(row_line, format!("expected 'row <hex> ...', found '{row_text}'")));
        }
        let entries: Vec<&str> = tokens.collect();
        if entries.len() != n {
            return Err(at(row_line, format!("expected {n} row entries, found {}", entries.len())));
        }
        let mut row = Vec::with_capacity(n);
        for e in entries {
            let bits = parse_hex(e, row_line, "row entry")?;
            if bits >> ctx.degree() != 0 {
                return Err(at(row_line, format!("entry {e} out of range for GF(2^{degree})")));
            }
            row.push(bits as u16);
        }
        rows.push(row);
    }
    Ok(CodeDefinition { ctx, n, k, rows })
}

/// Parses a whole file holding exactly one code definition.
pub fn parse_code_file(text: &str) -> Result<CodeDefinition, ParseError> {
    let mut lines = meaningful_lines(text);
    let first = lines.next().ok_or_else(|| at(1, "empty file"))?;
    let def = parse_code_block(&mut lines, first)?;
    if let Some((line, rest)) = lines.next() {
        return Err(at(line, format!("unexpected trailing content '{rest}'")));
    }
    Ok(def)
}

/// One block of an ensemble file.
#[derive(Debug, Clone)]
pub enum BlockDefinition {
    Code(CodeDefinition),
    Circulant { len: usize, basis: Vec<u64>, line: usize },
}

impl BlockDefinition {
    pub fn component(&self) -> Result<Component, CoreError> {
        match self {
            BlockDefinition::Code(def) => Ok(Component::Linear(def.code()?)),
            BlockDefinition::Circulant { len, basis, .. } => {
                let words: Result<Vec<CirculantWord>, CoreError> =
                    basis.iter().map(|&p| CirculantWord::new(*len, p)).collect();
                Ok(Component::Circulant(CirculantRankCode::new(&words?)?))
            }
        }
    }
}

fn parse_circulant_block<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    first: (usize, &'a str),
) -> Result<BlockDefinition, ParseError> {
    let (head_line, head_text) = first;
    let mut tokens = head_text.split_whitespace();
    if tokens.next() != Some("circulant") {
        return Err(at(head_line, format!("expected 'circulant N=<nat>', found '{head_text}'")));
    }
    let n_tok = tokens.next().ok_or_else(|| at(head_line, "missing N=<nat>"))?;
    let len = parse_usize(keyed(n_tok, "N", head_line)?, head_line, "N")?;
    let (basis_line, basis_text) =
        lines.next().ok_or_else(|| at(head_line, "missing 'basis <hex> ...' line"))?;
    let mut tokens = basis_text.split_whitespace();
    if tokens.next() != Some("basis") {
        return Err(at(basis_line, format!("expected 'basis <hex> ...', found '{basis_text}'")));
    }
    let mut basis = Vec::new();
    for tok in tokens {
        basis.push(parse_hex(tok, basis_line, "basis word")?);
    }
    if basis.is_empty() {
        return Err(at(basis_line, "basis must name at least one word"));
    }
    Ok(BlockDefinition::Circulant { len, basis, line: head_line })
}

/// Parses an ensemble file: blocks separated by `---` lines.
pub fn parse_ensemble_file(text: &str) -> Result<Vec<BlockDefinition>, ParseError> {
    let mut blocks = Vec::new();
    for chunk in split_blocks(text) {
        let mut lines = meaningful_lines(&chunk.text).map(|(i, l)| (i + chunk.offset, l));
        let Some(first) = lines.next() else { continue };
        let block = if first.1.starts_with("circulant") {
            parse_circulant_block(&mut lines, first)?
        } else {
            BlockDefinition::Code(parse_code_block(&mut lines, first)?)
        };
        if let Some((line, rest)) = lines.next() {
            return Err(at(line, format!("unexpected trailing content '{rest}'")));
        }
        blocks.push(block);
    }
    if blocks.is_empty() {
        return Err(at(1, "empty ensemble file"));
    }
    Ok(blocks)
}

struct Chunk {
    text: String,
    offset: usize,
}

fn split_blocks(text: &str) -> Vec<Chunk> {
    let mut chunks = Vec::new();
    let mut current = String::new();
    let mut start = 0usize;
    for (i, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            chunks.push(Chunk { text: std::mem::take(&mut current), offset: start });
            start = i + 1;
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    chunks.push(Chunk { text: current, offset: start });
    chunks
}

/// Builds the ensemble from parsed blocks.
pub fn ensemble_from_blocks(blocks: &[BlockDefinition]) -> Result<Ensemble, CoreError> {
    let components: Result<Vec<Component>, CoreError> =
        blocks.iter().map(|b| b.component()).collect();
    Ensemble::new(components?)
}

/// A received word as hex coordinates in a given field.
pub fn parse_word(ctx: FieldContext, tokens: &[String]) -> Result<RankVector, String> {
    if tokens.is_empty() {
        return Err("word needs at least one coordinate".into());
    }
    let mut coords = Vec::with_capacity(tokens.len());
    for t in tokens {
        let bits =
            u64::from_str_radix(t, 16).map_err(|_| format!("coordinate '{t}' is not hex"))?;
        if bits >> ctx.degree() != 0 {
            return Err(format!("coordinate '{t}' out of range for GF(2^{})", ctx.degree()));
        }
        coords.push(bits as u16);
    }
    RankVector::from_bits(ctx, coords).map_err(|e| e.to_string())
}

/// Renders a vector as space-separated hex coordinates.
pub fn word_to_string(v: &RankVector) -> String {
    v.coord_bits().iter().map(|c| format!("{c:x}")).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# a [4,2] code over GF(2^4)
field N=4 poly=13
code n=4 k=2

row 1 2 4 8
row 1 4 3 c
";

    #[test]
    fn parses_code_file() {
        let def = parse_code_file(SAMPLE).unwrap();
        assert_eq!(def.n, 4);
        assert_eq!(def.k, 2);
        assert_eq!(def.ctx.degree(), 4);
        assert_eq!(def.rows[1], vec![1, 4, 3, 0xc]);
        assert!(def.code().is_ok());
    }

    #[test]
    fn default_modulus_when_poly_omitted() {
        let text = "field N=3\ncode n=2 k=1\nrow 1 1\n";
        let def = parse_code_file(text).unwrap();
        assert_eq!(def.ctx.modulus(), 0xB);
    }

    #[test]
    fn truncated_row_is_diagnosed_with_line() {
        let text = "field N=4 poly=13\ncode n=4 k=2\nrow 1 2 4 8\nrow 1 4 3\n";
        let err = parse_code_file(text).unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("expected 4 row entries"));
    }

    #[test]
    fn bad_field_line_is_diagnosed() {
        let err = parse_code_file("code n=2 k=1\nrow 1 1\n").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn out_of_range_entry_rejected() {
        let text = "field N=2\ncode n=2 k=1\nrow 1 7\n";
        let err = parse_code_file(text).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn poly_forms() {
        assert_eq!(parse_poly("13").unwrap(), 0x13);
        assert_eq!(parse_poly("1+x+x^4").unwrap(), 0x13);
        assert_eq!(parse_poly("x^3+x+1").unwrap(), 0xB);
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("").is_err());
    }

    #[test]
    fn ensemble_blocks() {
        let text = "\
field N=4 poly=13
code n=4 k=2
row 1 2 4 8
row 1 4 3 c
---
circulant N=4
basis 3 6
";
        let blocks = parse_ensemble_file(text).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(matches!(blocks[0], BlockDefinition::Code(_)));
        assert!(matches!(blocks[1], BlockDefinition::Circulant { len: 4, .. }));
        let ens = ensemble_from_blocks(&blocks).unwrap();
        assert_eq!(ens.len(), 2);
    }

    #[test]
    fn ensemble_error_lines_are_global() {
        let text = "\
field N=4 poly=13
code n=4 k=1
row 1 2 4 8
---
circulant N=4
basis
";
        let err = parse_ensemble_file(text).unwrap_err();
        assert_eq!(err.line, 6);
    }

    #[test]
    fn word_roundtrip() {
        let ctx = FieldContext::new(4, None).unwrap();
        let tokens: Vec<String> = ["1", "a", "f", "0"].iter().map(|s| s.to_string()).collect();
        let w = parse_word(ctx, &tokens).unwrap();
        assert_eq!(word_to_string(&w), "1 a f 0");
        assert!(parse_word(ctx, &["zz".to_string()]).is_err());
    }
}
