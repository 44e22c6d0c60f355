//! The recursive grammar, applied literally.
//!
//! A word on `level..=d` splits at its lowest letter into segments, each a
//! word on `level+1..=d`. The word is allowed when empty segments only trail,
//! every segment is allowed one level up, and each segment dominates the next.
//! This is the slow reference form of [`super::validate`].

use super::{check_alphabet, Dim};
use crate::error::{Error, Result};

pub fn validate_by_rules(symbols: &[u8], dim: Dim) -> Result<bool> {
    check_alphabet(symbols, dim)?;
    Ok(allowed(symbols, 0, dim.get()))
}

/// Whether `upper · joint · lower` is allowed, for `upper` and `lower`
/// allowed words on the letters strictly above `joint`.
pub fn dominates(upper: &[u8], lower: &[u8], joint: u8, dim: Dim) -> Result<bool> {
    if joint >= dim.get() {
        return Err(Error::Precondition(format!(
            "joining letter {joint} must be below the top letter {dim}"
        )));
    }
    for word in [upper, lower] {
        check_alphabet(word, dim)?;
        if let Some(position) = word.iter().position(|&s| s <= joint) {
            return Err(Error::InvalidAlphabet {
                symbol: word[position],
                position,
                dim: dim.get(),
            });
        }
    }
    Ok(dominates_at(upper, lower, joint + 1, dim.get()))
}

fn allowed(word: &[u8], level: u8, top: u8) -> bool {
    if level == top {
        return true;
    }
    let mut seen_empty = false;
    for segment in word.split(|&s| s == level) {
        if segment.is_empty() {
            seen_empty = true;
        } else if seen_empty {
            // consecutive separators only at the end
            return false;
        }
    }
    if !word.split(|&s| s == level).all(|segment| allowed(segment, level + 1, top)) {
        return false;
    }
    let mut segments = word.split(|&s| s == level);
    let mut previous = segments.next().unwrap_or_default();
    for segment in segments {
        if !segment.is_empty() && !dominates_at(previous, segment, level + 1, top) {
            return false;
        }
        previous = segment;
    }
    true
}

/// `upper` and `lower` are words on `level..=top`.
fn dominates_at(upper: &[u8], lower: &[u8], level: u8, top: u8) -> bool {
    if level == top {
        // runs of the top letter: the binary rule
        return upper.len() >= lower.len();
    }
    let layers = |w: &[u8]| w.iter().filter(|&&s| s == level).count() + 1;
    let filled = |w: &'_ [u8]| w.split(move |&s| s == level).filter(|s| !s.is_empty()).count();
    if filled(upper) < filled(lower) || layers(upper) < layers(lower) {
        return false;
    }
    upper
        .split(|&s| s == level)
        .zip(lower.split(|&s| s == level))
        .filter(|(_, c)| !c.is_empty())
        .all(|(b, c)| dominates_at(b, c, level + 1, top))
}
