//! Crystal reflection operators on words, the longest-element reflection,
//! and the reversal of Littlewood-Richardson tableaux.

use crate::error::{Error, Result};
use crate::jdt::{evacuate, rectify};
use crate::shapes::NumberingVariant;
use crate::switching::unique_in_classes;
use crate::tableau::Tableau;
use crate::words::Word;

/// The reflection operator on letters `i, i+1`: bracket each `i` with a
/// later `i+1`; the unmatched subword `(i+1)^b i^a` becomes `(i+1)^a i^b`.
pub fn sigma(i: usize, w: &Word) -> Result<Word> {
    if i == 0 || i + 1 > w.bound() {
        return Err(Error::IndexOutOfRange(i, w.bound()));
    }
    let mut letters = w.letters().to_vec();
    let mut open: Vec<usize> = Vec::new();
    let mut unmatched_hi: Vec<usize> = Vec::new();
    for (k, &l) in letters.iter().enumerate() {
        if l == i {
            open.push(k);
        } else if l == i + 1 {
            if open.pop().is_none() {
                unmatched_hi.push(k);
            }
        }
    }
    let a = open.len();
    let mut unmatched = unmatched_hi;
    unmatched.extend(open);
    unmatched.sort_unstable();
    for (pos, &k) in unmatched.iter().enumerate() {
        letters[k] = if pos < a { i + 1 } else { i };
    }
    Word::new(letters, w.bound())
}

/// Compose the reflections along a reduced word for the longest
/// permutation; the resulting operator reverses the weight.
pub fn sigma0(w: &Word) -> Word {
    sigma0_along(w, &default_reduced_word(w.bound()))
}

/// The fixed default reduced word (s_1)(s_2 s_1)...(s_{t-1}...s_1).
pub fn default_reduced_word(t: usize) -> Vec<usize> {
    let mut seq = Vec::new();
    for a in 1..t {
        seq.extend((1..=a).rev());
    }
    seq
}

/// An alternative reduced word (s_{t-1})(s_{t-2}s_{t-1})..., used to test
/// that sigma0 is independent of the choice.
pub fn alternative_reduced_word(t: usize) -> Vec<usize> {
    let mut seq = Vec::new();
    for a in (1..t).rev() {
        seq.extend(a..t);
    }
    seq
}

pub fn sigma0_along(w: &Word, reduced_word: &[usize]) -> Word {
    let mut cur = w.clone();
    for &i in reduced_word {
        cur = sigma(i, &cur).expect("reduced word letters are in range");
    }
    cur
}

/// The reversal of an LR tableau: the tableau of the same shape whose row
/// word is sigma0 of the input's row word.
pub fn reversal(t: &Tableau) -> Result<Tableau> {
    if !t.is_lr() {
        return Err(Error::NotLr);
    }
    let sw = sigma0(&t.row_word());
    Tableau::place(t.shape().clone(), &sw, NumberingVariant::Row)
}

/// Reversal of an arbitrary skew tableau: the unique tableau Knuth
/// equivalent to the evacuation of its rectification and dual equivalent
/// to the input.
pub fn reversal_general(t: &Tableau) -> Result<Tableau> {
    let v = evacuate(&rectify(t))?;
    unique_in_classes(&v, t)
}

/// Row sets of the reflected position tableau: row `j` (1-based) lists the
/// positions `k` with `sigma(i, w)_k = j`.
pub fn theta_rows(i: usize, w: &Word) -> Result<Vec<Vec<usize>>> {
    let sw = sigma(i, w)?;
    let mut rows = vec![Vec::new(); w.bound()];
    for (k, &l) in sw.letters().iter().enumerate() {
        rows[l - 1].push(k + 1);
    }
    Ok(rows)
}
