//! Words over a bounded alphabet: weight, Yamanouchi predicates,
//! dualization, the weight-conjugating diamond operator, standardization,
//! and the position tableau U(w).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::Partition;
use crate::tableau::{StandardTableau, Tableau};

/// A sequence of letters in `1..=bound`. The bound is explicit because
/// dualization depends on it, not just on the maximum letter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
    bound: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, bound: usize) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l > bound {
                return Err(Error::LetterOutOfRange(l, bound));
            }
        }
        Ok(Word { letters, bound })
    }

    /// Bound defaulted to the maximum letter (0 for the empty word).
    pub fn from_letters(letters: Vec<usize>) -> Result<Self> {
        let bound = letters.iter().copied().max().unwrap_or(0);
        Word::new(letters, bound)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn with_bound(&self, bound: usize) -> Result<Word> {
        Word::new(self.letters.clone(), bound)
    }

    /// Letter multiplicities `(m_1, ..., m_bound)`.
    pub fn weight(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.bound];
        for &l in &self.letters {
            m[l - 1] += 1;
        }
        m
    }

    /// The weight as a partition; error if it is not weakly decreasing.
    pub fn weight_partition(&self) -> Result<Partition> {
        Partition::new(self.weight()).map_err(|_| Error::NotYamanouchi)
    }

    pub fn is_yamanouchi(&self) -> bool {
        let mut counts = vec![0usize; self.bound + 1];
        for &l in &self.letters {
            counts[l] += 1;
            if l > 1 && counts[l] > counts[l - 1] {
                return false;
            }
        }
        true
    }

    pub fn is_dual_yamanouchi(&self) -> bool {
        self.dualize().is_yamanouchi()
    }

    /// Reverse the word and replace each letter `i` with `bound - i + 1`.
    pub fn dualize(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&l| self.bound - l + 1)
            .collect();
        Word {
            letters,
            bound: self.bound,
        }
    }

    /// On a Yamanouchi word of weight `nu`, rewrite the occurrences of each
    /// letter `i`, left to right, with `1, 2, ..., nu_i`; the result is
    /// Yamanouchi of weight `nu^t`. Extends to dual Yamanouchi words via
    /// conjugation with dualization.
    pub fn diamond(&self) -> Result<Word> {
        if self.is_yamanouchi() {
            let nu = self.weight_partition()?;
            let mut next = vec![0usize; self.bound];
            let mut letters = Vec::with_capacity(self.len());
            for &l in &self.letters {
                next[l - 1] += 1;
                letters.push(next[l - 1]);
            }
            Word::new(letters, nu.part(0))
        } else if self.is_dual_yamanouchi() {
            Ok(self.dualize().diamond()?.dualize())
        } else {
            Err(Error::NotYamanouchi)
        }
    }

    /// Standardization: occurrences of each letter value receive consecutive
    /// labels, assigned right to left within the value.
    pub fn standardize(&self) -> Word {
        let mut labels = vec![0usize; self.len()];
        let mut next = 1usize;
        for v in 1..=self.bound {
            for k in (0..self.len()).rev() {
                if self.letters[k] == v {
                    labels[k] = next;
                    next += 1;
                }
            }
        }
        Word {
            letters: labels,
            bound: self.len(),
        }
    }

    /// The standard tableau of shape `weight(w)` whose row `i` holds all
    /// positions `k` (1-based) with `w_k = i`.
    pub fn u_tableau(&self) -> Result<StandardTableau> {
        if !self.is_yamanouchi() {
            return Err(Error::NotYamanouchi);
        }
        let nu = self.weight_partition()?;
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); nu.len()];
        for (k, &l) in self.letters.iter().enumerate() {
            rows[l - 1].push(k + 1);
        }
        let tab = Tableau::normal(nu, rows)?;
        StandardTableau::new(tab)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (t={})", self, self.bound)
    }
}

/// Digits when the bound is single-digit, else comma-separated.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bound <= 9 {
            for &l in &self.letters {
                write!(f, "{}", l)?;
            }
        } else {
            let mut first = true;
            for &l in &self.letters {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", l)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word {
                letters: Vec::new(),
                bound: 0,
            });
        }
        let letters = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad letter {:?}: {}", p, e)))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {:?}", c)))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::from_letters(letters)
    }
}
