//! Partition words and their bijection with d-dimensional partitions.
//!
//! A d-dimensional partition of `n` is written as a word of length `n - 1`
//! over `0..=d`. Reading left to right, the letter `d` adds one to the
//! current cell, and a letter `l < d` opens a new cell one step further along
//! axis `d - l` (1-based), resetting every lower axis to 1. A word is valid
//! exactly when every intermediate array is itself a partition: the support
//! is downward closed and values never increase along an axis.
//!
//! For `d = 1` this is the familiar form `1^a1 0 1^a2 0 ... 1^ak 0^m` with
//! `a1 >= a2 >= ... >= ak`, each block of ones standing for a part minus one.

mod builder;
mod enumerate;
mod rules;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) use builder::CellBuilder;
pub use enumerate::{enumerate, enumerate_with_budget, symbol_totals, Budget, WordSet};
pub use rules::{dominates, validate_by_rules};
pub use text::{read_words, write_words};

/// Largest supported dimension; words render as single decimal digits.
pub const MAX_DIM: u8 = 9;

/// Dimension of a partition, `1..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Dim(u8);

impl Dim {
    pub fn new(d: u32) -> Result<Self> {
        if (1..=MAX_DIM as u32).contains(&d) {
            Ok(Dim(d as u8))
        } else {
            Err(Error::UnsupportedDimension(d))
        }
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    /// Size of the alphabet, `d + 1`.
    #[inline]
    pub fn alphabet(self) -> u8 {
        self.0 + 1
    }
}

impl TryFrom<u8> for Dim {
    type Error = Error;

    fn try_from(d: u8) -> Result<Self> {
        Dim::new(d as u32)
    }
}

impl From<Dim> for u8 {
    fn from(d: Dim) -> u8 {
        d.0
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn check_alphabet(symbols: &[u8], dim: Dim) -> Result<()> {
    match symbols.iter().position(|&s| s > dim.get()) {
        Some(position) => Err(Error::InvalidAlphabet {
            symbol: symbols[position],
            position,
            dim: dim.get(),
        }),
        None => Ok(()),
    }
}

/// Returns whether `symbols` is a partition word of dimension `dim`.
///
/// Symbols outside `0..=d` are an error rather than `false`.
pub fn validate(symbols: &[u8], dim: Dim) -> Result<bool> {
    check_alphabet(symbols, dim)?;
    Ok(is_valid_unchecked(symbols, dim))
}

pub(crate) fn is_valid_unchecked(symbols: &[u8], dim: Dim) -> bool {
    if dim.get() == 1 {
        validate_blocks(symbols)
    } else {
        grows_cell_by_cell(symbols, dim)
    }
}

/// The array route for every dimension: decode letter by letter and check
/// that each touched cell respects its predecessors along every axis.
pub fn validate_structural(symbols: &[u8], dim: Dim) -> Result<bool> {
    check_alphabet(symbols, dim)?;
    Ok(grows_cell_by_cell(symbols, dim))
}

fn grows_cell_by_cell(symbols: &[u8], dim: Dim) -> bool {
    let mut builder = CellBuilder::new(dim);
    symbols.iter().all(|&s| builder.push(s))
}

/// Binary fast path: block lengths between zeros never increase.
fn validate_blocks(symbols: &[u8]) -> bool {
    let mut previous: Option<usize> = None;
    let mut run = 0usize;
    for &s in symbols {
        if s == 1 {
            run += 1;
        } else {
            if previous.is_some_and(|p| run > p) {
                return false;
            }
            previous = Some(run);
            run = 0;
        }
    }
    previous.is_none_or(|p| run <= p)
}

/// A grammar-valid word over `0..=d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionWord {
    dim: Dim,
    symbols: Vec<u8>,
}

impl PartitionWord {
    pub fn new(symbols: Vec<u8>, dim: Dim) -> Result<Self> {
        if validate(&symbols, dim)? {
            Ok(PartitionWord { dim, symbols })
        } else {
            Err(Error::InvalidWord(render(&symbols)))
        }
    }

    /// Parses a digit string such as `"2102"`.
    pub fn parse(text: &str, dim: Dim) -> Result<Self> {
        Self::new(parse_digits(text)?, dim)
    }

    pub(crate) fn from_trusted(symbols: Vec<u8>, dim: Dim) -> Self {
        debug_assert!(validate(&symbols, dim).unwrap_or(false));
        PartitionWord { dim, symbols }
    }

    /// The word of the partition of 1.
    pub fn empty(dim: Dim) -> Self {
        PartitionWord { dim, symbols: Vec::new() }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The integer `n` this word encodes a partition of.
    pub fn total(&self) -> u32 {
        self.symbols.len() as u32 + 1
    }

    pub fn count_of(&self, letter: u8) -> usize {
        self.symbols.iter().filter(|&&s| s == letter).count()
    }

    pub fn to_partition(&self) -> DDimPartition {
        let mut builder = CellBuilder::new(self.dim);
        for &s in &self.symbols {
            let ok = builder.push(s);
            debug_assert!(ok);
        }
        DDimPartition {
            dim: self.dim,
            parts: builder.into_parts(),
        }
    }
}

impl fmt::Display for PartitionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.symbols))
    }
}

/// Renders symbols as a digit string.
pub fn render(symbols: &[u8]) -> String {
    symbols.iter().map(|&s| char::from(b'0' + s)).collect()
}

pub fn parse_digits(text: &str) -> Result<Vec<u8>> {
    text.bytes()
        .enumerate()
        .map(|(i, b)| {
            if b.is_ascii_digit() {
                Ok(b - b'0')
            } else {
                Err(Error::Parse {
                    line: 1,
                    msg: format!("byte {i} of `{text}` is not a digit"),
                })
            }
        })
        .collect()
}

/// Decodes a raw symbol sequence, rejecting invalid words.
pub fn to_partition(symbols: &[u8], dim: Dim) -> Result<DDimPartition> {
    Ok(PartitionWord::new(symbols.to_vec(), dim)?.to_partition())
}

/// Encodes a partition: cells are visited with the last axis most
/// significant, each new cell announced by the letter of the highest axis
/// that advanced, followed by `value - 1` copies of the top letter.
pub fn from_partition(partition: &DDimPartition) -> PartitionWord {
    let d = partition.dim.get();
    let mut cells: Vec<(&Vec<u32>, u32)> = partition.parts.iter().map(|(c, &v)| (c, v)).collect();
    cells.sort_by(|a, b| a.0.iter().rev().cmp(b.0.iter().rev()));

    let mut symbols = Vec::with_capacity(partition.total() as usize - 1);
    let mut previous: Option<&Vec<u32>> = None;
    for (coord, value) in cells {
        if let Some(prev) = previous {
            let axis = (0..d as usize)
                .rev()
                .find(|&j| coord[j] != prev[j])
                .expect("distinct cells");
            symbols.push(d - 1 - axis as u8);
        }
        symbols.extend(std::iter::repeat_n(d, value as usize - 1));
        previous = Some(coord);
    }
    PartitionWord::from_trusted(symbols, partition.dim)
}

/// A d-dimensional partition: positive values on a downward-closed set of
/// 1-based coordinates, non-increasing along every axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DDimPartition {
    dim: Dim,
    parts: BTreeMap<Vec<u32>, u32>,
}

impl DDimPartition {
    pub fn new(dim: Dim, parts: BTreeMap<Vec<u32>, u32>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPartition(msg));
        if parts.is_empty() {
            return bad("no parts".into());
        }
        let d = dim.get() as usize;
        for (coord, &value) in &parts {
            if coord.len() != d {
                return bad(format!("coordinate {coord:?} does not have {d} axes"));
            }
            if coord.contains(&0) {
                return bad(format!("coordinate {coord:?} is not 1-based"));
            }
            if value == 0 {
                return bad(format!("zero part at {coord:?}"));
            }
            for axis in 0..d {
                if coord[axis] == 1 {
                    continue;
                }
                let mut below = coord.clone();
                below[axis] -= 1;
                match parts.get(&below) {
                    None => return bad(format!("{coord:?} present but {below:?} missing")),
                    Some(&v) if v < value => {
                        return bad(format!("part at {coord:?} exceeds part at {below:?}"))
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(DDimPartition { dim, parts })
    }

    /// An ordinary partition from its parts in non-increasing order.
    pub fn ordinary(parts: &[u32]) -> Result<Self> {
        let map = parts
            .iter()
            .enumerate()
            .map(|(i, &v)| (vec![i as u32 + 1], v))
            .collect();
        DDimPartition::new(Dim(1), map)
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn parts(&self) -> &BTreeMap<Vec<u32>, u32> {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.values().map(|&v| v as u64).sum()
    }

    /// Number of cells in the support.
    pub fn cell_count(&self) -> usize {
        self.parts.len()
    }

    /// For `d = 1`, the parts as a non-increasing list.
    pub fn as_ordinary(&self) -> Option<Vec<u32>> {
        (self.dim.get() == 1).then(|| self.parts.values().copied().collect())
    }
}
