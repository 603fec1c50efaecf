//! Skew tableaux: readings, standardization, rotation, recording matrices,
//! the tau bijection with normal-shape tableaux, the LR predicate, and the
//! word-level blacklozenge map.

use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{circ, NumberingVariant, Partition, SkewShape};
use crate::words::Word;

/// A semistandard filling of a skew shape: rows weakly increase, columns
/// strictly increase. `bound` is the alphabet bound (>= max entry).
#[derive(Clone, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
    bound: usize,
}

/// Equality is on shape and filling; the alphabet bound is presentation
/// metadata and does not participate.
impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.rows == other.rows
    }
}

impl std::hash::Hash for Tableau {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shape.outer().parts().hash(state);
        self.shape.inner().parts().hash(state);
        self.rows.hash(state);
    }
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>, bound: usize) -> Result<Self> {
        let t = Tableau { shape, rows, bound };
        t.validate()?;
        Ok(t)
    }

    /// Bound defaulted to the maximum entry.
    pub fn with_default_bound(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let bound = rows.iter().flatten().copied().max().unwrap_or(0);
        Tableau::new(shape, rows, bound)
    }

    pub fn normal(outer: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::with_default_bound(SkewShape::normal(outer), rows)
    }

    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::normal(Partition::empty()),
            rows: Vec::new(),
            bound: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.rows.len() != self.shape.rows() {
            return Err(Error::InvalidFilling(format!(
                "expected {} rows, got {}",
                self.shape.rows(),
                self.rows.len()
            )));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.row_range(i).len() {
                return Err(Error::InvalidFilling(format!(
                    "row {} has {} entries, shape wants {}",
                    i,
                    row.len(),
                    self.shape.row_range(i).len()
                )));
            }
            for &v in row {
                if v == 0 || v > self.bound {
                    return Err(Error::LetterOutOfRange(v, self.bound));
                }
            }
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return Err(Error::InvalidFilling(format!("row {} not weakly increasing", i)));
            }
            if i > 0 {
                for j in self.shape.row_range(i) {
                    if let (Some(above), Some(here)) = (self.entry(i - 1, j), self.entry(i, j)) {
                        if above >= here {
                            return Err(Error::InvalidFilling(format!(
                                "column {} not strictly increasing at row {}",
                                j, i
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn with_bound(&self, bound: usize) -> Result<Tableau> {
        Tableau::new(self.shape.clone(), self.rows.clone(), bound)
    }

    pub fn rows_vec(&self) -> Vec<Vec<usize>> {
        self.rows.clone()
    }

    pub fn num_cells(&self) -> usize {
        self.shape.num_cells()
    }

    /// Entry at absolute coordinates, if the cell is in the shape.
    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        if self.shape.contains_cell(i, j) {
            Some(self.rows[i][j - self.shape.inner().part(i)])
        } else {
            None
        }
    }

    pub fn weight(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.bound];
        for &v in self.rows.iter().flatten() {
            m[v - 1] += 1;
        }
        m
    }

    pub fn weight_partition(&self) -> Result<Partition> {
        Partition::new(self.weight()).map_err(|_| Error::NotYamanouchi)
    }

    fn read(&self, variant: NumberingVariant) -> Word {
        let order = self.shape.numbering(variant);
        let letters = order
            .cells
            .iter()
            .map(|&(i, j)| self.entry(i, j).unwrap())
            .collect();
        Word::new(letters, self.bound).unwrap()
    }

    /// Right-to-left along rows, top to bottom.
    pub fn row_word(&self) -> Word {
        self.read(NumberingVariant::Row)
    }

    /// Rightmost column first, top to bottom within each column.
    pub fn column_word(&self) -> Word {
        self.read(NumberingVariant::Column)
    }

    pub fn is_lr(&self) -> bool {
        self.row_word().is_yamanouchi()
    }

    /// Place the letters of `word` into `shape` following the given
    /// numbering order, then validate the filling.
    pub fn place(shape: SkewShape, word: &Word, variant: NumberingVariant) -> Result<Tableau> {
        let order = shape.numbering(variant);
        if order.cells.len() != word.len() {
            return Err(Error::ShapeMismatch(format!(
                "shape has {} cells, word has {} letters",
                order.cells.len(),
                word.len()
            )));
        }
        let mut rows: Vec<Vec<usize>> = (0..shape.rows())
            .map(|i| vec![0; shape.row_range(i).len()])
            .collect();
        for (&(i, j), &l) in order.cells.iter().zip(word.letters()) {
            rows[i][j - shape.inner().part(i)] = l;
        }
        Tableau::new(shape, rows, word.bound())
    }

    /// Standardization: each letter block receives consecutive labels in
    /// west-to-east (column) order. Column-strictness forbids two equal
    /// letters in a column, so no tie-break within a column is needed.
    pub fn standardize(&self) -> StandardTableau {
        let mut cells: Vec<(usize, usize, usize)> = Vec::with_capacity(self.num_cells());
        for i in 0..self.shape.rows() {
            for j in self.shape.row_range(i) {
                cells.push((self.entry(i, j).unwrap(), j, i));
            }
        }
        // by letter, then by column; same (letter, column) cannot happen
        cells.sort();
        debug_assert!(cells.windows(2).all(|w| (w[0].0, w[0].1) != (w[1].0, w[1].1)));
        let mut rows: Vec<Vec<usize>> = (0..self.shape.rows())
            .map(|i| vec![0; self.shape.row_range(i).len()])
            .collect();
        for (label, &(_, j, i)) in cells.iter().enumerate() {
            rows[i][j - self.shape.inner().part(i)] = label + 1;
        }
        let tab = Tableau::new(self.shape.clone(), rows, self.num_cells())
            .expect("standardization preserves semistandardness");
        StandardTableau(tab)
    }

    /// Rotate 180 degrees in the tight box and complement each entry
    /// within the alphabet bound.
    pub fn rotate(&self) -> Tableau {
        let new_shape = self.shape.rotate();
        let mut rows: Vec<Vec<usize>> = (0..new_shape.rows())
            .map(|i| vec![0; new_shape.row_range(i).len()])
            .collect();
        for i in 0..self.shape.rows() {
            for j in self.shape.row_range(i) {
                let (ri, rj) = self.shape.rotate_cell(i, j);
                rows[ri][rj - new_shape.inner().part(ri)] =
                    self.bound + 1 - self.entry(i, j).unwrap();
            }
        }
        Tableau::new(new_shape, rows, self.bound).expect("rotation preserves semistandardness")
    }

    pub fn recording_matrix(&self) -> RecordingMatrix {
        let n = self.shape.rows();
        let t = self.bound;
        let mut entries = vec![vec![0usize; t]; n];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                entries[i][v - 1] += 1;
            }
        }
        RecordingMatrix {
            entries,
            shape: self.shape.clone(),
        }
    }

    /// Sparse per-row letter runs `(letter, count)`, ascending by letter.
    /// Used where dense matrices would be quadratic in the row count.
    pub fn recording_rows_sparse(&self) -> Vec<Vec<(usize, usize)>> {
        self.rows
            .iter()
            .map(|row| {
                let mut runs: Vec<(usize, usize)> = Vec::new();
                for &v in row {
                    match runs.last_mut() {
                        Some((l, c)) if *l == v => *c += 1,
                        _ => runs.push((v, 1)),
                    }
                }
                runs
            })
            .collect()
    }

    /// The normal-shape tableau whose recording matrix is the transpose of
    /// this LR tableau's recording matrix.
    pub fn tau(&self) -> Result<Tableau> {
        if !self.is_lr() {
            return Err(Error::NotLr);
        }
        let nu = self.weight_partition()?;
        let m = self.recording_matrix();
        let n = self.shape.rows();
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(nu.len());
        for i in 0..nu.len() {
            let mut row = Vec::with_capacity(nu.part(i));
            for j in 0..n {
                // transposed entry (i, j) = count of letter i+1 in row j
                for _ in 0..m.entry(j, i) {
                    row.push(j + 1);
                }
            }
            rows.push(row);
        }
        Tableau::new(SkewShape::normal(nu), rows, n)
    }

    /// Inverse of [`Tableau::tau`]: rebuild the LR tableau of shape
    /// `lambda/mu` with `lambda_i = mu_i + m_i(self)`.
    pub fn tau_inv(&self, mu: &Partition) -> Result<Tableau> {
        if !self.shape.inner().is_empty() {
            return Err(Error::NotNormalShape);
        }
        if !cf_member(self, mu) {
            return Err(Error::CfViolation);
        }
        let m = self.recording_matrix();
        let weight = self.weight();
        let lambda = Partition::new(
            (0..weight.len().max(mu.len()))
                .map(|i| mu.part(i) + weight.get(i).copied().unwrap_or(0))
                .collect(),
        )
        .map_err(|_| Error::CfViolation)?;
        let shape = SkewShape::new(lambda, mu.clone()).map_err(|_| Error::CfViolation)?;
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(shape.rows());
        for i in 0..shape.rows() {
            let mut row = Vec::new();
            for j in 0..self.shape.rows() {
                for _ in 0..m.entry(j, i) {
                    row.push(j + 1);
                }
            }
            rows.push(row);
        }
        let t = Tableau::new(shape, rows, self.shape.rows())?;
        debug_assert!(t.is_lr());
        Ok(t)
    }

    /// The tableau of dual-conjugate shape whose column word is the diamond
    /// of this tableau's row word.
    pub fn blacklozenge_slow(&self) -> Result<Tableau> {
        let d = self.row_word().diamond()?;
        Tableau::place(self.shape.diamond(), &d, NumberingVariant::Column)
    }

    /// Repeat every column `k` times: shape `k*lambda / k*mu`.
    pub fn dilate(&self, k: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .flat_map(|&v| std::iter::repeat(v).take(k))
                    .collect()
            })
            .collect();
        Tableau::new(self.shape.dilate(k), rows, self.bound)
            .expect("column dilation preserves semistandardness")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tableau {:?} t={}", self.shape, self.bound)?;
        for (i, row) in self.rows.iter().enumerate() {
            for _ in 0..self.shape.inner().part(i) {
                write!(f, "  .")?;
            }
            for v in row {
                write!(f, " {:2}", v)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A tableau filled with `1..=s` without repetitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau(Tableau);

impl StandardTableau {
    pub fn new(tab: Tableau) -> Result<Self> {
        let s = tab.num_cells();
        let mut seen = vec![false; s + 1];
        for &v in tab.rows.iter().flatten() {
            if v > s || seen[v] {
                return Err(Error::NonStandardInput);
            }
            seen[v] = true;
        }
        Ok(StandardTableau(tab))
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }

    /// Move the entry at `(i, j)` to `(j, i)`; shape is transposed.
    pub fn transpose(&self) -> StandardTableau {
        let tab = &self.0;
        let new_shape = tab.shape.transpose();
        let mut rows: Vec<Vec<usize>> = (0..new_shape.rows())
            .map(|i| vec![0; new_shape.row_range(i).len()])
            .collect();
        for i in 0..tab.shape.rows() {
            for j in tab.shape.row_range(i) {
                rows[j][i - new_shape.inner().part(j)] = tab.entry(i, j).unwrap();
            }
        }
        let t = Tableau::new(new_shape, rows, tab.bound)
            .expect("transpose of a standard tableau is standard");
        StandardTableau(t)
    }
}

/// The unique tableau of shape and weight `nu`: row `i` filled with `i`.
pub fn yamanouchi_tableau(nu: &Partition) -> Tableau {
    let rows = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| vec![i + 1; p])
        .collect();
    Tableau::new(SkewShape::normal(nu.clone()), rows, nu.len())
        .expect("Yamanouchi tableau is semistandard")
}

/// Companion-set membership: stack `self` under the translated Yamanouchi
/// block of `mu` and test the Littlewood-Richardson condition.
pub fn cf_member(b: &Tableau, mu: &Partition) -> bool {
    if !b.shape.inner().is_empty() {
        return false;
    }
    let nu = b.shape.outer().clone();
    let shape = circ(&nu, mu);
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(shape.rows());
    for (i, &m) in mu.parts().iter().enumerate() {
        rows.push(vec![i + 1; m]);
    }
    rows.extend(b.rows.iter().cloned());
    let bound = b.bound.max(mu.len());
    match Tableau::new(shape, rows, bound) {
        Ok(t) => t.is_lr(),
        Err(_) => false,
    }
}

/// Row-by-letter count matrix of a tableau, together with its shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecordingMatrix {
    entries: Vec<Vec<usize>>,
    shape: SkewShape,
}

impl RecordingMatrix {
    pub fn new(entries: Vec<Vec<usize>>, shape: SkewShape) -> Result<Self> {
        if entries.len() < shape.rows() {
            return Err(Error::InvalidMatrix(format!(
                "{} rows for a {}-row shape",
                entries.len(),
                shape.rows()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            let want = shape.row_range(i).len();
            let got: usize = row.iter().sum();
            if got != want {
                return Err(Error::InvalidMatrix(format!(
                    "row {} sums to {}, shape wants {}",
                    i, got, want
                )));
            }
        }
        Ok(RecordingMatrix { entries, shape })
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries
            .get(i)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or(0)
    }

    /// Reconstruct the tableau; fails if column-strictness is violated.
    pub fn to_tableau(&self) -> Result<Tableau> {
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(self.shape.rows());
        for i in 0..self.shape.rows() {
            let mut row = Vec::with_capacity(self.shape.row_range(i).len());
            if let Some(counts) = self.entries.get(i) {
                for (j, &c) in counts.iter().enumerate() {
                    for _ in 0..c {
                        row.push(j + 1);
                    }
                }
            }
            rows.push(row);
        }
        let width = self.entries.iter().map(|r| r.len()).max().unwrap_or(0);
        Tableau::new(self.shape.clone(), rows, width)
            .map_err(|e| Error::InvalidMatrix(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sk(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    /// The running example: shape (6,4,3)/(2,1), weight (5,3,2).
    pub(crate) fn t0() -> Tableau {
        Tableau::with_default_bound(
            sk(&[6, 4, 3], &[2, 1]),
            vec![vec![1, 1, 1, 1], vec![1, 2, 2], vec![2, 3, 3]],
        )
        .unwrap()
    }

    /// The second worked example: shape (4,4,2)/(2,1), weight (4,2,1).
    pub(crate) fn t1() -> Tableau {
        Tableau::with_default_bound(
            sk(&[4, 4, 2], &[2, 1]),
            vec![vec![1, 1], vec![1, 2, 2], vec![1, 3]],
        )
        .unwrap()
    }

    #[test]
    fn words_of_t0() {
        assert_eq!(t0().row_word().to_string(), "1111221332");
        assert_eq!(t0().column_word().to_string(), "1112123132");
        let single = Tableau::normal(p(&[1]), vec![vec![1]]).unwrap();
        assert_eq!(single.row_word().to_string(), "1");
        assert_eq!(single.column_word().to_string(), "1");
    }

    #[test]
    fn standardize_t0() {
        let s = t0().standardize();
        assert_eq!(
            s.as_tableau().rows_vec(),
            vec![vec![2, 3, 4, 5], vec![1, 7, 8], vec![6, 9, 10]]
        );
        assert_eq!(
            s.as_tableau().row_word().letters(),
            &[5, 4, 3, 2, 8, 7, 1, 10, 9, 6]
        );
        let y2 = yamanouchi_tableau(&p(&[2]));
        assert_eq!(y2.standardize().as_tableau().rows_vec(), vec![vec![1, 2]]);
        let col = Tableau::normal(p(&[1, 1]), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(
            col.standardize().as_tableau().rows_vec(),
            vec![vec![1], vec![2]]
        );
    }

    #[test]
    fn standardization_commutes_with_word() {
        for t in [t0(), t1()] {
            assert_eq!(
                t.standardize().as_tableau().row_word(),
                t.row_word().standardize()
            );
        }
    }

    #[test]
    fn transpose_standard_t0() {
        let s = t0().standardize();
        let tt = s.transpose();
        assert_eq!(tt.as_tableau().shape(), &sk(&[3, 3, 3, 2, 1, 1], &[2, 1]));
        assert_eq!(
            tt.as_tableau().rows_vec(),
            vec![
                vec![6],
                vec![1, 9],
                vec![2, 7, 10],
                vec![3, 8],
                vec![4],
                vec![5]
            ]
        );
        assert_eq!(tt.transpose(), s);
        let row = Tableau::normal(p(&[2]), vec![vec![1, 2]]).unwrap();
        let row = StandardTableau::new(row).unwrap();
        assert_eq!(row.transpose().as_tableau().rows_vec(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn column_word_of_standard_transpose() {
        // w_col(That) = rev w(That^t) for standard tableaux
        let s = t0().standardize();
        let lhs = s.as_tableau().column_word();
        let mut rev: Vec<usize> = s.transpose().as_tableau().row_word().letters().to_vec();
        rev.reverse();
        assert_eq!(lhs.letters(), &rev[..]);
    }

    #[test]
    fn rotate_examples() {
        // T0^e rotated, from the worked switching example
        let t0e = Tableau::with_default_bound(
            sk(&[6, 4, 3], &[2, 1]),
            vec![vec![1, 1, 3, 3], vec![2, 2, 2], vec![3, 3, 3]],
        )
        .unwrap();
        let r = t0e.rotate();
        assert_eq!(r.shape(), &sk(&[6, 5, 4], &[3, 2]));
        assert_eq!(
            r.rows_vec(),
            vec![vec![1, 1, 1], vec![2, 2, 2], vec![1, 1, 3, 3]]
        );
        assert_eq!(r.row_word(), t0e.row_word().dualize());
        assert_eq!(r.rotate(), t0e);

        let single = Tableau::normal(p(&[1]), vec![vec![1]]).unwrap();
        assert_eq!(single.rotate(), single);

        let y = yamanouchi_tableau(&p(&[2, 1])).with_bound(3).unwrap();
        assert_eq!(y.rotate().row_word(), y.row_word().dualize());
    }

    #[test]
    fn recording_matrix_roundtrip() {
        let m = t0().recording_matrix();
        assert_eq!(
            m.entries(),
            &[vec![4, 0, 0], vec![1, 2, 0], vec![0, 1, 2]]
        );
        assert_eq!(m.to_tableau().unwrap(), t0());

        let y = yamanouchi_tableau(&p(&[5, 3, 2]));
        assert_eq!(
            y.recording_matrix().entries(),
            &[vec![5, 0, 0], vec![0, 3, 0], vec![0, 0, 2]]
        );

        let m1 = t1().recording_matrix();
        assert_eq!(
            m1.entries(),
            &[vec![2, 0, 0], vec![1, 2, 0], vec![1, 0, 1]]
        );

        // column-strictness violation on reconstruction
        let bad = RecordingMatrix::new(
            vec![vec![1, 0], vec![1, 0]],
            sk(&[1, 1], &[]),
        )
        .unwrap();
        assert!(matches!(bad.to_tableau(), Err(Error::InvalidMatrix(_))));
    }

    #[test]
    fn tau_examples() {
        let b = t0().tau().unwrap();
        assert_eq!(
            b.rows_vec(),
            vec![vec![1, 1, 1, 1, 2], vec![2, 2, 3], vec![3, 3]]
        );
        assert_eq!(b.shape(), &sk(&[5, 3, 2], &[]));
        assert!(cf_member(&b, &p(&[2, 1])));
        assert_eq!(b.tau_inv(&p(&[2, 1])).unwrap(), t0());

        // diagonal recording matrix is fixed by transposition
        let y = yamanouchi_tableau(&p(&[2, 1]));
        let ty = y.tau().unwrap();
        assert_eq!(ty, y);
        assert_eq!(ty.tau_inv(&Partition::empty()).unwrap(), y);
    }

    #[test]
    fn lr_and_cf() {
        assert!(t0().is_lr());
        assert!(t1().is_lr());
        assert_eq!(
            yamanouchi_tableau(&p(&[5, 3, 2])).rows_vec(),
            vec![vec![1; 5], vec![2; 3], vec![3; 2]]
        );
        // the mu=(1) example from the matrices section
        let b = t0().tau().unwrap();
        assert!(cf_member(&b, &p(&[1])));
    }

    #[test]
    fn blacklozenge_examples() {
        let b = t1().blacklozenge_slow().unwrap();
        assert_eq!(b.shape(), &sk(&[3, 3, 2, 1], &[1, 1]));
        assert_eq!(
            b.rows_vec(),
            vec![vec![1, 1], vec![2, 2], vec![1, 3], vec![4]]
        );
        assert_eq!(b.column_word().to_string(), "1212314");
        // involution
        assert_eq!(b.blacklozenge_slow().unwrap(), t1());

        let rot = b.rotate();
        assert_eq!(rot.shape(), &sk(&[3, 3, 2, 2], &[2, 1]));
        assert_eq!(
            rot.rows_vec(),
            vec![vec![1], vec![2, 4], vec![3, 3], vec![4, 4]]
        );
        assert_eq!(rot.column_word().to_string(), "1423434");

        // single row goes to single column
        let y = yamanouchi_tableau(&p(&[3]));
        let by = y.blacklozenge_slow().unwrap();
        assert_eq!(by.rows_vec(), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn blacklozenge_commutes_with_rotate() {
        for t in [t0(), t1()] {
            assert_eq!(
                t.blacklozenge_slow().unwrap().rotate(),
                t.rotate().blacklozenge_slow().unwrap()
            );
        }
    }

    #[test]
    fn dilation() {
        let d = t0().dilate(2);
        assert_eq!(d.shape(), &sk(&[12, 8, 6], &[4, 2]));
        assert_eq!(d.weight(), vec![10, 6, 4]);
        assert!(d.is_lr());
        assert_eq!(t0().dilate(1), t0());
    }
}
