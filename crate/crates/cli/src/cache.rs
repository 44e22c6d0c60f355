//! On-disk enumeration cache: `pwords_d{d}_n{n}.txt` in the word text format.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use partword::analysis::partition_count;
use partword::words::{enumerate_with_budget, read_words, write_words, Budget, Dim, WordSet};
use partword::Result;

pub fn path(dir: &Path, dim: Dim, n: u32) -> PathBuf {
    dir.join(format!("pwords_d{dim}_n{n}.txt"))
}

/// Number of words when a closed count is available: ordinary partitions
/// for d = 1, MacMahon's product for plane partitions.
fn expected_count(dim: Dim, n: u32) -> Option<u64> {
    match dim.get() {
        1 => partition_count(n).ok(),
        2 => {
            let n = n as usize;
            let mut series = vec![0u64; n + 1];
            series[0] = 1;
            for k in 1..=n {
                for _ in 0..k {
                    for i in k..=n {
                        series[i] = series[i].checked_add(series[i - k])?;
                    }
                }
            }
            Some(series[n])
        }
        _ => None,
    }
}

fn load(file: &Path, dim: Dim, n: u32) -> Option<WordSet> {
    let words = read_words(BufReader::new(File::open(file).ok()?), dim, n).ok()?;
    match expected_count(dim, n) {
        Some(count) if count != words.len() as u64 => None,
        _ if words.is_empty() => None,
        _ => Some(words),
    }
}

/// Enumerates `(dim, n)`, reading from and refreshing the cache when a
/// directory is given. A cache file that fails validation is ignored and
/// rewritten.
pub fn words(dir: Option<&Path>, dim: Dim, n: u32, budget: &Budget) -> Result<WordSet> {
    let Some(dir) = dir else {
        return enumerate_with_budget(dim, n, budget);
    };
    let file = path(dir, dim, n);
    if let Some(words) = load(&file, dim, n) {
        return Ok(words);
    }
    let words = enumerate_with_budget(dim, n, budget)?;
    let _ = fs::create_dir_all(dir).and_then(|_| {
        let tmp = file.with_extension("tmp");
        write_words(&words, BufWriter::new(File::create(&tmp)?))?;
        fs::rename(&tmp, &file)
    });
    Ok(words)
}
