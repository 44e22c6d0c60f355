//! Word text format: one word per line as digits, newline-terminated.
//! The partition of 1 is a single empty line.

use std::io::{BufRead, Write};

use super::{validate, Dim, WordSet};
use crate::error::{Error, Result};

pub fn write_words<W: Write>(words: &WordSet, mut out: W) -> std::io::Result<()> {
    let mut line = Vec::with_capacity(words.word_len() + 1);
    for word in words.iter() {
        line.clear();
        line.extend(word.iter().map(|&s| b'0' + s));
        line.push(b'\n');
        out.write_all(&line)?;
    }
    out.flush()
}

/// Reads a word file for `(dim, n)`. Every line must be a valid word of
/// length `n - 1` and lines must be strictly increasing.
pub fn read_words<R: BufRead>(input: R, dim: Dim, n: u32) -> Result<WordSet> {
    if n == 0 {
        return Err(Error::ZeroTotal);
    }
    let len = n as usize - 1;
    let mut data = Vec::new();
    let mut count = 0;
    for (i, line) in input.lines().enumerate() {
        let parse_err = |msg: String| Error::Parse { line: i + 1, msg };
        let line = line.map_err(|e| parse_err(e.to_string()))?;
        if line.len() != len {
            return Err(parse_err(format!("expected {len} symbols, found {}", line.len())));
        }
        let start = data.len();
        for b in line.bytes() {
            if !b.is_ascii_digit() {
                return Err(parse_err(format!("`{line}` contains a non-digit")));
            }
            data.push(b - b'0');
        }
        let word = &data[start..];
        if !validate(word, dim)? {
            return Err(parse_err(format!("`{line}` is not a partition word")));
        }
        if count > 0 && data[start - len..start] >= *word {
            return Err(parse_err(format!("`{line}` breaks canonical order")));
        }
        count += 1;
    }
    if len == 0 && count > 1 {
        return Err(Error::Parse { line: 2, msg: "duplicate empty word".into() });
    }
    Ok(WordSet::from_raw(dim, n, data, count))
}
