use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use super::{CellBuilder, Dim, PartitionWord};
use crate::error::{Error, Result};

/// Limits on an enumeration run.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_words: Option<usize>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn words(max_words: usize) -> Self {
        Budget { max_words: Some(max_words), deadline: None }
    }

    pub fn time(limit: Duration) -> Self {
        Budget { max_words: None, deadline: Some(Instant::now() + limit) }
    }
}

/// All partition words of a given `(d, n)` in canonical (lexicographic)
/// order, stored as one flat buffer with a fixed stride of `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    dim: Dim,
    n: u32,
    data: Vec<u8>,
    count: usize,
}

impl WordSet {
    pub(crate) fn from_raw(dim: Dim, n: u32, data: Vec<u8>, count: usize) -> Self {
        debug_assert_eq!(data.len(), count * (n as usize - 1));
        WordSet { dim, n, data, count }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn word_len(&self) -> usize {
        self.n as usize - 1
    }

    /// `p_d(n)`.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn get(&self, index: usize) -> &[u8] {
        assert!(index < self.count, "word index {index} out of range");
        let len = self.word_len();
        &self.data[index * len..(index + 1) * len]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        (0..self.count).map(move |i| self.get(i))
    }

    pub fn word(&self, index: usize) -> PartitionWord {
        PartitionWord::from_trusted(self.get(index).to_vec(), self.dim)
    }

    /// Canonical index of `symbols`, by binary search.
    pub fn position(&self, symbols: &[u8]) -> Option<usize> {
        if symbols.len() != self.word_len() {
            return None;
        }
        let (mut lo, mut hi) = (0, self.count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(symbols) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, symbols: &[u8]) -> bool {
        self.position(symbols).is_some()
    }
}

fn check_total(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroTotal)
    } else {
        Ok(())
    }
}

pub fn enumerate(dim: Dim, n: u32) -> Result<WordSet> {
    enumerate_with_budget(dim, n, &Budget::unlimited())
}

/// Depth-first extension of valid prefixes, trying letters in increasing
/// order, which emits words already in canonical order.
pub fn enumerate_with_budget(dim: Dim, n: u32, budget: &Budget) -> Result<WordSet> {
    check_total(n)?;
    let mut walk = Walk {
        top: dim.get(),
        len: n as usize - 1,
        builder: CellBuilder::new(dim),
        prefix: Vec::with_capacity(n as usize),
        data: Vec::new(),
        count: 0,
        budget: *budget,
    };
    walk.extend()?;
    Ok(WordSet::from_raw(dim, n, walk.data, walk.count))
}

struct Walk {
    top: u8,
    len: usize,
    builder: CellBuilder,
    prefix: Vec<u8>,
    data: Vec<u8>,
    count: usize,
    budget: Budget,
}

impl Walk {
    fn extend(&mut self) -> Result<()> {
        if self.prefix.len() == self.len {
            return self.emit();
        }
        for letter in 0..=self.top {
            if self.builder.push(letter) {
                self.prefix.push(letter);
                let result = self.extend();
                self.prefix.pop();
                self.builder.pop();
                result?;
            }
        }
        Ok(())
    }

    fn emit(&mut self) -> Result<()> {
        if self.budget.max_words.is_some_and(|max| self.count >= max)
            || (self.count.is_multiple_of(1024)
                && self.budget.deadline.is_some_and(|t| Instant::now() >= t))
        {
            return Err(Error::BudgetExceeded { count: self.count });
        }
        self.data.extend_from_slice(&self.prefix);
        self.count += 1;
        Ok(())
    }
}

/// Occurrences of each letter summed over every word of `(d, n)`.
pub fn symbol_totals(dim: Dim, n: u32) -> Result<BTreeMap<u8, u64>> {
    let words = enumerate(dim, n)?;
    let mut totals: BTreeMap<u8, u64> = (0..=dim.get()).map(|l| (l, 0)).collect();
    for word in words.iter() {
        for &s in word {
            *totals.get_mut(&s).expect("letter in alphabet") += 1;
        }
    }
    Ok(totals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::render;

    fn d(n: u32) -> Dim {
        Dim::new(n).unwrap()
    }

    fn strings(set: &WordSet) -> Vec<String> {
        set.iter().map(render).collect()
    }

    #[test]
    fn small_tables() {
        assert_eq!(strings(&enumerate(d(1), 4).unwrap()), ["000", "100", "101", "110", "111"]);
        assert_eq!(strings(&enumerate(d(2), 3).unwrap()), ["00", "10", "11", "20", "21", "22"]);
        assert_eq!(enumerate(d(3), 6).unwrap().len(), 140);
    }

    #[test]
    fn single_empty_word_for_one() {
        for dim in [1, 2, 9] {
            let set = enumerate(d(dim), 1).unwrap();
            assert_eq!(set.len(), 1);
            assert_eq!(set.get(0), &[] as &[u8]);
            assert_eq!(set.position(&[]), Some(0));
        }
        assert_eq!(enumerate(d(1), 0).unwrap_err(), Error::ZeroTotal);
    }

    #[test]
    fn budget_reports_partial_count() {
        let err = enumerate_with_budget(d(1), 10, &Budget::words(7)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { count: 7 });
    }

    #[test]
    fn positions_follow_canonical_order() {
        let set = enumerate(d(2), 6).unwrap();
        for (i, word) in set.iter().enumerate() {
            assert_eq!(set.position(word), Some(i));
        }
        assert_eq!(set.position(&[0, 1, 0, 0, 0]), None);
        assert_eq!(set.position(&[0]), None);
    }

    #[test]
    fn symbol_totals_examples() {
        let totals = symbol_totals(d(1), 4).unwrap();
        assert_eq!(totals, [(0, 7), (1, 8)].into_iter().collect());
        assert_eq!(symbol_totals(d(1), 1).unwrap(), [(0, 0), (1, 0)].into_iter().collect());
        assert_eq!(symbol_totals(d(1), 2).unwrap(), [(0, 1), (1, 1)].into_iter().collect());
    }
}
