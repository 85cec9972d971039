//! Permutations as words on `{1..n}`.

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation: {0}")]
    Invalid(String),
    #[error("cannot parse permutation entry: {0}")]
    Parse(String),
}

/// A permutation of size `n`, stored one-based: `word[i]` is the value at
/// position `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates that `word` contains each symbol of `{1..n}` exactly once.
    pub fn new(word: Vec<u32>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(PermError::Invalid(format!("{:?}", word)));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn is_increasing(&self) -> bool {
        self.word.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.word.windows(2).all(|w| w[0] > w[1])
    }

    /// In-place step to the lexicographically next word; returns `false` after
    /// the last one. Used for streaming exhaustive enumeration.
    pub fn next_lex(&mut self) -> bool {
        let w = &mut self.word;
        let n = w.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && w[i - 1] >= w[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while w[j] <= w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        true
    }

    /// A uniform random permutation (Fisher–Yates).
    pub fn random<R: rand::Rng>(n: usize, rng: &mut R) -> Self {
        let mut word: Vec<u32> = (1..=n as u32).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            word.swap(i, j);
        }
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses the one-line format, e.g. `"2 4 1 3"`. A compact digit string
    /// such as `"2413"` is also accepted for sizes below 10.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let word: Vec<u32> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| PermError::Parse(t.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| PermError::Parse(c.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p: Permutation = "2 4 1 3".parse().unwrap();
        assert_eq!(p.word(), &[2, 4, 1, 3]);
        assert_eq!(p.to_string(), "2 4 1 3");
        let q: Permutation = "2413".parse().unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!("1 1 2".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("1 3".parse::<Permutation>().is_err());
    }

    #[test]
    fn lex_enumeration_counts() {
        let mut p = Permutation::identity(4);
        let mut count = 1;
        while p.next_lex() {
            count += 1;
        }
        assert_eq!(count, 24);
        assert!(p.is_decreasing());
    }
}
