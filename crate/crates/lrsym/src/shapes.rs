//! Partitions, skew shapes, and the four shape transforms (conjugate,
//! complement, rotation, dual-conjugate), plus reading-order numberings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: weakly decreasing non-negative parts, stored without
/// trailing zeros. Zero parts are allowed on input and normalized away.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero-padded beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// |lambda|, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Conjugate partition: `result[j] = #{i : parts[i] >= j+1}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Complement in a `rows x cols` rectangle.
    pub fn complement(&self, rows: usize, cols: usize) -> Result<Partition> {
        if self.len() > rows || self.part(0) > cols {
            return Err(Error::RectangleTooSmall { rows, cols });
        }
        let parts = (0..rows).rev().map(|i| cols - self.part(i)).collect();
        Partition::new(parts)
    }

    /// Scale every part by `k` (column dilation of the diagram).
    pub fn dilate(&self, k: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * k).collect(),
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Serializes as comma-separated decreasing integers; empty partition as "".
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {:?}: {}", p, e)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Reading-order variants for cell numberings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NumberingVariant {
    Row,
    Column,
    ReverseRow,
    ReverseColumn,
}

/// An ordered list of cell coordinates; `cells[k]` carries label `k+1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellOrder {
    pub cells: Vec<(usize, usize)>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    /// The reduced translate of the diagram: shifted so that row 0 and
    /// column 0 each hold a cell. Translates carry the same fillings, and
    /// the tight-box rotation is an involution exactly on reduced shapes.
    pub fn reduced(&self) -> SkewShape {
        let rows = self.outer.len();
        let first = (0..rows).find(|&i| !self.row_range(i).is_empty());
        let Some(first) = first else {
            return SkewShape {
                outer: Partition::empty(),
                inner: Partition::empty(),
            };
        };
        let last = (first..rows)
            .rev()
            .find(|&i| !self.row_range(i).is_empty())
            .expect("a nonempty row exists");
        // the leftmost occupied column: inner offsets weakly decrease
        let shift = self.inner.part(last);
        let outer = (first..=last).map(|i| self.outer.part(i) - shift).collect();
        let inner = (first..=last).map(|i| self.inner.part(i) - shift).collect();
        SkewShape {
            outer: Partition::new(outer).expect("translation keeps monotonicity"),
            inner: Partition::new(inner).expect("translation keeps monotonicity"),
        }
    }

    pub fn is_reduced(&self) -> bool {
        *self == self.reduced()
    }

    pub fn normal(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Columns occupied in row `i`, as a 0-based range.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.inner.part(i)..self.outer.part(i)
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i < self.rows() && self.row_range(i).contains(&j)
    }

    /// 180-degree rotation, complements taken in the tight
    /// `len(outer) x outer_1` box.
    pub fn rotate(&self) -> SkewShape {
        let rows = self.outer.len();
        let cols = self.outer.part(0);
        // inner fits in the box because it sits inside outer
        let new_outer = self.inner.complement(rows, cols).unwrap();
        let new_inner = self.outer.complement(rows, cols).unwrap();
        SkewShape {
            outer: new_outer,
            inner: new_inner,
        }
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Dual-conjugate: rotation composed with transposition (in either order).
    pub fn diamond(&self) -> SkewShape {
        self.rotate().transpose()
    }

    /// Coordinate image of a cell under rotation in the tight box.
    pub fn rotate_cell(&self, i: usize, j: usize) -> (usize, usize) {
        let rows = self.outer.len();
        let cols = self.outer.part(0);
        (rows - 1 - i, cols - 1 - j)
    }

    /// Coordinate image of a cell under the dual-conjugate map.
    pub fn diamond_cell(&self, i: usize, j: usize) -> (usize, usize) {
        let (ri, rj) = self.rotate_cell(i, j);
        (rj, ri)
    }

    pub fn numbering(&self, variant: NumberingVariant) -> CellOrder {
        let mut cells = Vec::with_capacity(self.num_cells());
        match variant {
            NumberingVariant::Row | NumberingVariant::ReverseRow => {
                for i in 0..self.rows() {
                    for j in self.row_range(i).rev() {
                        cells.push((i, j));
                    }
                }
            }
            NumberingVariant::Column | NumberingVariant::ReverseColumn => {
                for j in (0..self.outer.part(0)).rev() {
                    for i in 0..self.rows() {
                        if self.contains_cell(i, j) {
                            cells.push((i, j));
                        }
                    }
                }
            }
        }
        if matches!(
            variant,
            NumberingVariant::ReverseRow | NumberingVariant::ReverseColumn
        ) {
            cells.reverse();
        }
        CellOrder { cells }
    }

    pub fn dilate(&self, k: usize) -> SkewShape {
        SkewShape {
            outer: self.outer.dilate(k),
            inner: self.inner.dilate(k),
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// The composite shape `nu o mu` used for the companion-set test: the
/// Yamanouchi block of `mu` translated past `nu_1`, stacked over `nu`.
pub fn circ(nu: &Partition, mu: &Partition) -> SkewShape {
    let n1 = nu.part(0);
    let mut outer: Vec<usize> = mu.parts().iter().map(|&m| n1 + m).collect();
    outer.extend(nu.parts().iter().copied());
    let inner = vec![n1; mu.len()];
    SkewShape {
        outer: Partition::new(outer).expect("circ outer is weakly decreasing"),
        inner: Partition::new(inner).expect("rectangular inner"),
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

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2, 2]).conjugate(), p(&[3, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(p(&[3, 2, 2]).complement(3, 4).unwrap(), p(&[2, 2, 1]));
        // conjugate-complement compatibility
        assert_eq!(
            p(&[3, 2, 2]).conjugate().complement(4, 3).unwrap(),
            p(&[3, 2, 2]).complement(3, 4).unwrap().conjugate()
        );
        assert_eq!(p(&[3, 2, 2]).conjugate().complement(4, 3).unwrap(), p(&[3, 2]));
        assert_eq!(Partition::empty().complement(2, 2).unwrap(), p(&[2, 2]));
        assert_eq!(
            p(&[3]).complement(1, 2),
            Err(Error::RectangleTooSmall { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(sk(&[4, 4, 2], &[2, 1]).rotate(), sk(&[4, 3, 2], &[2]));
        let full = sk(&[3, 2], &[3, 2]);
        assert_eq!(full.rotate().num_cells(), 0);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(
            sk(&[6, 4, 3], &[2, 1]).transpose(),
            sk(&[3, 3, 3, 2, 1, 1], &[2, 1])
        );
        assert_eq!(sk(&[4], &[]).transpose(), sk(&[1, 1, 1, 1], &[]));
    }

    #[test]
    fn diamond_examples() {
        assert_eq!(sk(&[4, 4, 2], &[2, 1]).diamond(), sk(&[3, 3, 2, 1], &[1, 1]));
        assert_eq!(sk(&[1], &[]).diamond(), sk(&[1], &[]));
        // the paper's (4,3,1)/(2) quadruple
        let s = sk(&[4, 3, 1], &[2]);
        assert_eq!(s.transpose(), sk(&[3, 2, 2, 1], &[1, 1]));
        assert_eq!(s.rotate(), sk(&[4, 4, 2], &[3, 1]));
        assert_eq!(s.diamond(), sk(&[3, 3, 2, 2], &[2, 1, 1]));
    }

    #[test]
    fn involutions_small() {
        for s in [
            sk(&[4, 4, 2], &[2, 1]),
            sk(&[4, 3, 1], &[2]),
            sk(&[6, 4, 3], &[2, 1]),
            sk(&[3], &[]),
        ] {
            assert_eq!(s.rotate().rotate(), s);
            assert_eq!(s.transpose().transpose(), s);
            assert_eq!(s.diamond().diamond(), s);
            assert_eq!(s.rotate().transpose(), s.transpose().rotate());
            assert_eq!(s.rotate().num_cells(), s.num_cells());
            assert_eq!(s.diamond().num_cells(), s.num_cells());
        }
    }

    #[test]
    fn numbering_row_and_column() {
        let s = sk(&[4, 4], &[2]);
        let row = s.numbering(NumberingVariant::Row);
        assert_eq!(
            row.cells,
            vec![(0, 3), (0, 2), (1, 3), (1, 2), (1, 1), (1, 0)]
        );
        let col = s.numbering(NumberingVariant::Column);
        assert_eq!(
            col.cells,
            vec![(0, 3), (1, 3), (0, 2), (1, 2), (1, 1), (1, 0)]
        );
        // paper's reverse numberings: labels complemented
        let rrow = s.numbering(NumberingVariant::ReverseRow);
        assert_eq!(
            rrow.cells,
            vec![(1, 0), (1, 1), (1, 2), (1, 3), (0, 2), (0, 3)]
        );
        let rcol = s.numbering(NumberingVariant::ReverseColumn);
        assert_eq!(
            rcol.cells,
            vec![(1, 0), (1, 1), (1, 2), (0, 2), (1, 3), (0, 3)]
        );
        let single = sk(&[3], &[]);
        assert_eq!(
            single.numbering(NumberingVariant::Row).cells,
            vec![(0, 2), (0, 1), (0, 0)]
        );
    }

    #[test]
    fn column_numbering_is_row_numbering_of_diamond() {
        for s in [sk(&[4, 4], &[2]), sk(&[6, 4, 3], &[2, 1]), sk(&[4, 3, 1], &[2])] {
            let col = s.numbering(NumberingVariant::Column);
            let drow = s.diamond().numbering(NumberingVariant::Row);
            let mapped: Vec<_> = col
                .cells
                .iter()
                .map(|&(i, j)| s.diamond_cell(i, j))
                .collect();
            assert_eq!(mapped, drow.cells);
        }
    }

    #[test]
    fn circ_examples() {
        assert_eq!(circ(&p(&[5, 3, 2]), &p(&[1])), sk(&[6, 5, 3, 2], &[5]));
        assert_eq!(circ(&p(&[4]), &Partition::empty()), sk(&[4], &[]));
        assert_eq!(circ(&p(&[2, 1]), &p(&[1, 1])), sk(&[3, 3, 2, 1], &[2, 2]));
    }

    #[test]
    fn partition_serialization() {
        assert_eq!(p(&[6, 4, 3]).to_string(), "6,4,3");
        assert_eq!(Partition::empty().to_string(), "");
        assert_eq!("6,4,3".parse::<Partition>().unwrap(), p(&[6, 4, 3]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("3,2,0,0".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert!("2,3".parse::<Partition>().is_err());
    }
}
