use std::fmt;

use crate::error::{Error, Result};

/// A simple reflection `s_i`, stored with its 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(u16);

impl GeneratorId {
    /// # Panics
    ///
    /// Panics if `index` is zero or does not fit in a `u16`.
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Self(u16::try_from(index).expect("generator index too large"))
    }

    pub(crate) fn from_zero_based(i: usize) -> Self {
        Self::new(i + 1)
    }

    /// The 1-based index.
    pub fn index(self) -> usize {
        usize::from(self.0)
    }

    pub(crate) fn idx0(self) -> usize {
        usize::from(self.0) - 1
    }

    pub(crate) fn check(self, rank: usize) -> Result<Self> {
        if self.index() > rank {
            Err(Error::GeneratorOutOfRange {
                index: self.index(),
                rank,
            })
        } else {
            Ok(self)
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite sequence of generators. Words need not be reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<GeneratorId>);

impl Word {
    pub fn new(letters: Vec<GeneratorId>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a word from 1-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self(indices.into_iter().map(GeneratorId::new).collect())
    }

    pub fn letters(&self) -> &[GeneratorId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: GeneratorId) {
        self.0.push(s);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = GeneratorId> + '_ {
        self.0.iter().copied()
    }

    /// Parses a word for a group of the given rank.
    ///
    /// Digit strings (`"1213"`) are accepted when `rank <= 9`. Comma-separated
    /// integers (`"1,2,13"`) are always accepted and are the only form for
    /// higher ranks. The empty string is the empty word.
    pub fn parse(text: &str, rank: usize) -> Result<Word> {
        let text = text.trim();
        let err = |reason: String| Error::WordParse {
            word: text.to_string(),
            reason,
        };
        if text.is_empty() || text == "e" {
            return Ok(Word::empty());
        }
        let indices: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<usize>()
                        .map_err(|_| err(format!("`{tok}` is not a generator index")))
                })
                .collect::<Result<_>>()?
        } else if rank <= 9 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| err(format!("`{c}` is not a digit")))
                })
                .collect::<Result<_>>()?
        } else {
            // Rank > 9: a bare token is a single generator; longer words need commas.
            vec![text
                .parse::<usize>()
                .map_err(|_| err("rank > 9 requires comma-separated indices".into()))?]
        };
        indices
            .into_iter()
            .map(|i| {
                if i == 0 || i > rank {
                    Err(Error::GeneratorOutOfRange { index: i, rank })
                } else {
                    Ok(GeneratorId::new(i))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Formats as a digit string when `rank <= 9`, else comma-separated.
    pub fn format(&self, rank: usize) -> String {
        if rank <= 9 {
            self.0.iter().map(|s| s.to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl FromIterator<GeneratorId> for Word {
    fn from_iter<T: IntoIterator<Item = GeneratorId>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}
