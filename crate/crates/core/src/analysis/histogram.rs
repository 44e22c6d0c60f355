use std::collections::BTreeMap;
use std::io::{self, Write};

use crate::graphs::PartitionGraph;
use crate::words::WordSet;

/// Counts of non-negative integer observations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram {
    bins: BTreeMap<u64, u64>,
}

impl Histogram {
    pub fn new() -> Self {
        Histogram::default()
    }

    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        let mut h = Histogram::new();
        for v in values {
            h.add(v, 1);
        }
        h
    }

    pub fn add(&mut self, value: u64, count: u64) {
        if count > 0 {
            *self.bins.entry(value).or_insert(0) += count;
        }
    }

    pub fn bins(&self) -> &BTreeMap<u64, u64> {
        &self.bins
    }

    pub fn get(&self, value: u64) -> u64 {
        self.bins.get(&value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.bins.values().sum()
    }

    /// Every observation, ascending, as a float sample.
    pub fn samples(&self) -> Vec<f64> {
        self.bins
            .iter()
            .flat_map(|(&v, &c)| std::iter::repeat_n(v as f64, c as usize))
            .collect()
    }

    /// The same histogram with every value moved by `delta`.
    pub fn shifted(&self, delta: i64) -> Histogram {
        Histogram {
            bins: self
                .bins
                .iter()
                .map(|(&v, &c)| ((v as i64 + delta) as u64, c))
                .collect(),
        }
    }

    /// `value,count` rows sorted by value.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (v, c) in &self.bins {
            writeln!(out, "{v},{c}")?;
        }
        out.flush()
    }
}

pub fn degree_histogram(graph: &PartitionGraph) -> Histogram {
    let mut h = Histogram::new();
    for (degree, count) in graph.degree_sequence() {
        h.add(degree as u64, count as u64);
    }
    h
}

/// Number of words with each count of the letter 0.
pub fn zero_count_histogram(words: &WordSet) -> Histogram {
    Histogram::from_values(words.iter().map(|w| w.iter().filter(|&&s| s == 0).count() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate, Dim};

    #[test]
    fn csv_rows_sorted() {
        let h = Histogram::from_values([3, 1, 3, 2]);
        let mut buf = Vec::new();
        h.write_csv(&mut buf).unwrap();
        assert_eq!(buf, b"1,1\n2,1\n3,2\n");
        assert_eq!(h.samples(), [1.0, 2.0, 3.0, 3.0]);
        assert_eq!(h.total(), 4);
    }

    #[test]
    fn zero_counts_for_five() {
        let words = enumerate(Dim::new(1).unwrap(), 5).unwrap();
        let h = zero_count_histogram(&words);
        assert_eq!(h.bins(), &[(0, 1), (1, 2), (2, 2), (3, 1), (4, 1)].into_iter().collect());
    }
}
