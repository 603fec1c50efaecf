//! Burge column insertion, P/Q symbols, and the Knuth / dual Knuth
//! equivalence predicates.

use crate::error::{Error, Result};
use crate::shapes::Partition;
use crate::tableau::{StandardTableau, Tableau};
use crate::words::Word;

/// Insertion and recording tableaux of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurgePair {
    pub p: Tableau,
    pub q: StandardTableau,
}

/// Column-insert one letter: `x` bumps the topmost entry `>= x` of column 1,
/// the bumped entry recurses into the next column, and whichever letter finds
/// no larger entry is appended at the bottom of its column.
pub fn column_insert(p: &Tableau, x: usize) -> Result<(Tableau, (usize, usize))> {
    if !p.shape().inner().is_empty() {
        return Err(Error::NotNormalShape);
    }
    let mut cols = to_columns(p);
    let cell = insert_into_columns(&mut cols, x);
    let t = from_columns(&cols, p.bound().max(x))?;
    Ok((t, cell))
}

fn to_columns(p: &Tableau) -> Vec<Vec<usize>> {
    let width = p.shape().outer().part(0);
    let mut cols: Vec<Vec<usize>> = vec![Vec::new(); width];
    for i in 0..p.shape().rows() {
        for j in p.shape().row_range(i) {
            cols[j].push(p.entry(i, j).unwrap());
        }
    }
    cols
}

fn from_columns(cols: &[Vec<usize>], bound: usize) -> Result<Tableau> {
    let outer: Vec<usize> = (0..cols.first().map_or(0, Vec::len))
        .map(|i| cols.iter().take_while(|c| c.len() > i).count())
        .collect();
    let rows: Vec<Vec<usize>> = outer
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| cols[j][i]).collect())
        .collect();
    Tableau::new(
        crate::shapes::SkewShape::new(Partition::new(outer)?, Partition::new(vec![])?)?,
        rows,
        bound,
    )
}

fn insert_into_columns(cols: &mut Vec<Vec<usize>>, x: usize) -> (usize, usize) {
    let mut cur = x;
    let mut c = 0usize;
    loop {
        if c == cols.len() {
            cols.push(Vec::new());
        }
        let col = &mut cols[c];
        // columns strictly increase, so the topmost entry >= cur is found by
        // binary search
        let idx = col.partition_point(|&v| v < cur);
        if idx == col.len() {
            col.push(cur);
            return (idx, c);
        }
        std::mem::swap(&mut cur, &mut col[idx]);
        c += 1;
    }
}

/// Insert the letters of `w` left to right; `q` records each new cell with
/// its step index.
pub fn burge(w: &Word) -> BurgePair {
    let mut cols: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in w.letters().iter().enumerate() {
        let (i, _) = insert_into_columns(&mut cols, x);
        if i == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[i].push(step + 1);
    }
    let p = from_columns(&cols, w.bound()).expect("insertion keeps rows/columns ordered");
    let shape = p.shape().outer().clone();
    let q = StandardTableau::new(Tableau::normal(shape, q_rows).expect("new cells fill rows"))
        .expect("step indices are a permutation");
    BurgePair { p, q }
}

/// Same insertion tableau of the row words.
pub fn knuth_equivalent(a: &Tableau, b: &Tableau) -> bool {
    burge(&a.row_word()).p == burge(&b.row_word()).p
}

/// Same shape and same recording tableau of the row words.
pub fn dual_equivalent(a: &Tableau, b: &Tableau) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch(format!(
            "dual equivalence needs equal shapes, got {:?} and {:?}",
            a.shape(),
            b.shape()
        )));
    }
    Ok(burge(&a.row_word()).q == burge(&b.row_word()).q)
}
