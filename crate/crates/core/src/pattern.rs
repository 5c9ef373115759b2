//! Comparison index patterns for fern layers.
//!
//! An [`IndexPattern`] is an ordered list of `(dy, dx)` window offsets. Each
//! offset contributes one comparison bit: bit `m` is set when the central
//! value is strictly greater than the value at offset `m`. The first listed
//! offset is the least significant bit. A [`PatternSet`] groups several
//! patterns into inception branches that are summed in the forward pass.
//!
//! Pattern files are plain text, one pattern per line, offsets written as
//! `dy,dx` pairs separated by semicolons. Line order defines the branch
//! order, offset order the bit order. Blank lines and lines starting with
//! `#` are ignored. Example 4-neighbourhood cross:
//!
//! ```text
//! -1,0;0,-1;0,1;1,0
//! ```

use std::path::Path;

use crate::error::{Error, Result};

/// Longest supported pattern; keeps weight tables at most 2^16 entries.
pub const MAX_PATTERN_LEN: usize = 16;

/// Ordered window offsets compared against the central value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexPattern {
    offsets: Vec<(i32, i32)>,
}

impl IndexPattern {
    /// Validates offsets: 1..=16 entries, none equal to `(0,0)`, no duplicates.
    pub fn new(offsets: Vec<(i32, i32)>) -> Result<IndexPattern> {
        if offsets.is_empty() || offsets.len() > MAX_PATTERN_LEN {
            return Err(Error::config(format!(
                "pattern must have 1..={} offsets, got {}",
                MAX_PATTERN_LEN,
                offsets.len()
            )));
        }
        for (i, &off) in offsets.iter().enumerate() {
            if off == (0, 0) {
                return Err(Error::config(format!(
                    "pattern offset {i} is (0,0); the centre is never compared with itself"
                )));
            }
            if offsets[..i].contains(&off) {
                return Err(Error::config(format!(
                    "duplicate pattern offset ({},{})",
                    off.0, off.1
                )));
            }
        }
        Ok(IndexPattern { offsets })
    }

    pub fn offsets(&self) -> &[(i32, i32)] {
        &self.offsets
    }

    /// Number of comparisons, |BD|.
    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least one offset by construction
    }

    /// Size of the weight table this pattern indexes: 2^|BD|.
    pub fn table_size(&self) -> usize {
        1usize << self.offsets.len()
    }

    /// Largest absolute offset component; the window half-width.
    pub fn window_radius(&self) -> i32 {
        self.offsets
            .iter()
            .map(|&(dy, dx)| dy.abs().max(dx.abs()))
            .max()
            .unwrap_or(0)
    }
}

/// A named list of patterns; `branches()` is the inception width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    name: String,
    patterns: Vec<IndexPattern>,
}

impl PatternSet {
    pub fn new(name: impl Into<String>, patterns: Vec<IndexPattern>) -> Result<PatternSet> {
        if patterns.is_empty() {
            return Err(Error::config("pattern set needs at least one pattern"));
        }
        Ok(PatternSet {
            name: name.into(),
            patterns,
        })
    }

    /// The built-in patterns:
    ///
    /// * `TI1` — one branch, the 4-neighbourhood cross, table size 2^4.
    /// * `TI2` — one branch, the 8 non-central offsets of a 3x3 window in
    ///   row-major order, table size 2^8.
    /// * `TI3` — the 24 non-central offsets of a 5x5 window in row-major
    ///   order, split into 6 consecutive branches of 4, table size 6 * 2^4.
    pub fn builtin(name: &str) -> Result<PatternSet> {
        let patterns = match name {
            "TI1" => vec![IndexPattern::new(vec![(-1, 0), (0, -1), (0, 1), (1, 0)])?],
            "TI2" => vec![IndexPattern::new(window_offsets(1))?],
            "TI3" => window_offsets(2)
                .chunks(4)
                .map(|chunk| IndexPattern::new(chunk.to_vec()))
                .collect::<Result<Vec<_>>>()?,
            other => {
                return Err(Error::config(format!(
                    "unknown pattern set {other:?}; valid names are TI1, TI2, TI3"
                )))
            }
        };
        PatternSet::new(name, patterns)
    }

    /// Parses the pattern-file grammar described in the module docs.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<PatternSet> {
        let mut patterns = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut offsets = Vec::new();
            for pair in line.split(';') {
                let pair = pair.trim();
                let (dy, dx) = pair.split_once(',').ok_or_else(|| {
                    Error::config(format!(
                        "pattern file line {}: expected dy,dx pair, got {pair:?}",
                        lineno + 1
                    ))
                })?;
                let parse = |s: &str| -> Result<i32> {
                    s.trim().parse().map_err(|_| {
                        Error::config(format!(
                            "pattern file line {}: {s:?} is not an integer",
                            lineno + 1
                        ))
                    })
                };
                offsets.push((parse(dy)?, parse(dx)?));
            }
            patterns.push(IndexPattern::new(offsets)?);
        }
        PatternSet::new(name, patterns)
    }

    pub fn from_file(path: &Path) -> Result<PatternSet> {
        let text = std::fs::read_to_string(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".to_string());
        PatternSet::parse(name, &text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn patterns(&self) -> &[IndexPattern] {
        &self.patterns
    }

    /// Inception width b.
    pub fn branches(&self) -> usize {
        self.patterns.len()
    }

    /// Total comparisons per window, sum of |BD_k|.
    pub fn comparisons_per_window(&self) -> usize {
        self.patterns.iter().map(|p| p.len()).sum()
    }

    /// Total weight-table entries per (output layer, input depth) pair,
    /// sum of 2^|BD_k|.
    pub fn table_total(&self) -> usize {
        self.patterns.iter().map(|p| p.table_size()).sum()
    }

    pub fn window_radius(&self) -> i32 {
        self.patterns
            .iter()
            .map(|p| p.window_radius())
            .max()
            .unwrap_or(0)
    }
}

/// Non-central offsets of a (2r+1)x(2r+1) window in row-major order.
fn window_offsets(r: i32) -> Vec<(i32, i32)> {
    let mut offsets = Vec::new();
    for dy in -r..=r {
        for dx in -r..=r {
            if (dy, dx) != (0, 0) {
                offsets.push((dy, dx));
            }
        }
    }
    offsets
}
