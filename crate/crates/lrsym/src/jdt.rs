//! Jeu de taquin: contracting and expanding slides, rectification,
//! anti-normal form, and Schuetzenberger evacuation.

use rand::Rng;

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableau::Tableau;

/// Mutable box grid used while sliding. Rows stay contiguous, so the shape
/// can be read back off the occupied cells.
struct Grid {
    rows: usize,
    cols: usize,
    cells: Vec<Option<usize>>,
    bound: usize,
}

impl Grid {
    fn from_tableau(t: &Tableau, extra_rows: usize, extra_cols: usize) -> Grid {
        let rows = t.shape().rows() + extra_rows;
        let cols = t.shape().outer().part(0) + extra_cols;
        let mut g = Grid {
            rows,
            cols,
            cells: vec![None; rows * cols],
            bound: t.bound(),
        };
        for i in 0..t.shape().rows() {
            for j in t.shape().row_range(i) {
                g.set(i, j, t.entry(i, j));
            }
        }
        g
    }

    fn get(&self, i: usize, j: usize) -> Option<usize> {
        if i < self.rows && j < self.cols {
            self.cells[i * self.cols + j]
        } else {
            None
        }
    }

    fn set(&mut self, i: usize, j: usize, v: Option<usize>) {
        self.cells[i * self.cols + j] = v;
    }

    /// Move a hole at `(i, j)` south-east until it leaves the filling.
    fn slide_contract(&mut self, mut i: usize, mut j: usize) -> (usize, usize) {
        loop {
            let south = self.get(i + 1, j);
            let east = self.get(i, j + 1);
            match (south, east) {
                (None, None) => return (i, j),
                (Some(_), None) => {
                    self.set(i, j, south);
                    self.set(i + 1, j, None);
                    i += 1;
                }
                (None, Some(_)) => {
                    self.set(i, j, east);
                    self.set(i, j + 1, None);
                    j += 1;
                }
                (Some(s), Some(e)) => {
                    // smaller wins; ties go south
                    if s <= e {
                        self.set(i, j, south);
                        self.set(i + 1, j, None);
                        i += 1;
                    } else {
                        self.set(i, j, east);
                        self.set(i, j + 1, None);
                        j += 1;
                    }
                }
            }
        }
    }

    /// Move a hole at `(i, j)` north-west until it leaves the filling.
    fn slide_expand(&mut self, mut i: usize, mut j: usize) -> (usize, usize) {
        loop {
            let north = if i > 0 { self.get(i - 1, j) } else { None };
            let west = if j > 0 { self.get(i, j - 1) } else { None };
            match (north, west) {
                (None, None) => return (i, j),
                (Some(_), None) => {
                    self.set(i, j, north);
                    self.set(i - 1, j, None);
                    i -= 1;
                }
                (None, Some(_)) => {
                    self.set(i, j, west);
                    self.set(i, j - 1, None);
                    j -= 1;
                }
                (Some(n), Some(w)) => {
                    // larger wins; ties go north (inverse of the contracting rule)
                    if n >= w {
                        self.set(i, j, north);
                        self.set(i - 1, j, None);
                        i -= 1;
                    } else {
                        self.set(i, j, west);
                        self.set(i, j - 1, None);
                        j -= 1;
                    }
                }
            }
        }
    }

    fn to_tableau(&self) -> Result<Tableau> {
        tableau_from_cells(self.rows, self.cols, self.bound, |i, j| self.get(i, j))
    }
}

/// Rebuild a skew tableau from a cell predicate over a bounding grid.
/// Occupied cells must be contiguous within each row.
pub(crate) fn tableau_from_cells(
    grid_rows: usize,
    grid_cols: usize,
    bound: usize,
    get: impl Fn(usize, usize) -> Option<usize>,
) -> Result<Tableau> {
    let mut outer = vec![0usize; grid_rows];
    let mut inner = vec![0usize; grid_rows];
    for i in (0..grid_rows).rev() {
        let occupied: Vec<usize> = (0..grid_cols).filter(|&j| get(i, j).is_some()).collect();
        match (occupied.first(), occupied.last()) {
            (Some(&f), Some(&l)) => {
                inner[i] = f;
                outer[i] = l + 1;
            }
            _ => {
                // empty row borrows the boundary of the row below
                let below = if i + 1 < grid_rows { outer[i + 1] } else { 0 };
                inner[i] = below;
                outer[i] = below;
            }
        }
    }
    let outer = Partition::new(outer)?;
    let inner = Partition::new(inner)?;
    let shape = SkewShape::new(outer, inner)?;
    let rows = (0..shape.rows())
        .map(|i| {
            shape
                .row_range(i)
                .map(|j| get(i, j).expect("contiguous row"))
                .collect()
        })
        .collect();
    Tableau::new(shape, rows, bound)
}

fn is_inside_corner(shape: &SkewShape, i: usize, j: usize) -> bool {
    let mu = shape.inner();
    mu.part(i) > 0 && j + 1 == mu.part(i) && mu.part(i + 1) <= j
}

/// Inside corners of the shape, top row first.
pub fn inside_corners(shape: &SkewShape) -> Vec<(usize, usize)> {
    let mu = shape.inner();
    (0..mu.len())
        .filter(|&i| mu.part(i + 1) < mu.part(i))
        .map(|i| (i, mu.part(i) - 1))
        .collect()
}

fn is_outside_corner(shape: &SkewShape, i: usize, j: usize) -> bool {
    let lam = shape.outer();
    j == lam.part(i) && (i == 0 || lam.part(i - 1) >= j + 1)
}

/// Slide the filling into an inside corner; returns the slid tableau and
/// the vacated outside corner.
pub fn contracting_slide(t: &Tableau, corner: (usize, usize)) -> Result<(Tableau, (usize, usize))> {
    let (i, j) = corner;
    if !is_inside_corner(t.shape(), i, j) {
        return Err(Error::NotAnInsideCorner(i, j));
    }
    let mut g = Grid::from_tableau(t, 0, 0);
    let end = g.slide_contract(i, j);
    Ok((g.to_tableau()?, end))
}

/// Slide the filling out towards an outside corner; exact inverse of
/// [`contracting_slide`].
pub fn expanding_slide(t: &Tableau, outer: (usize, usize)) -> Result<(Tableau, (usize, usize))> {
    let (i, j) = outer;
    if i > t.shape().rows() || !is_outside_corner(t.shape(), i, j) {
        return Err(Error::NotAnOutsideCorner(i, j));
    }
    let mut g = Grid::from_tableau(t, 1, 1);
    let end = g.slide_expand(i, j);
    Ok((g.to_tableau()?, end))
}

/// Rectify with the default corner order: smallest row index first.
pub fn rectify(t: &Tableau) -> Tableau {
    rectify_with(t, |corners| corners[0])
}

/// Rectify choosing a random inside corner at each step.
pub fn rectify_random<R: Rng>(t: &Tableau, rng: &mut R) -> Tableau {
    rectify_with(t, |corners| corners[rng.gen_range(0..corners.len())])
}

fn rectify_with(t: &Tableau, mut pick: impl FnMut(&[(usize, usize)]) -> (usize, usize)) -> Tableau {
    let mut cur = t.clone();
    loop {
        let corners = inside_corners(cur.shape());
        if corners.is_empty() {
            return cur;
        }
        let c = pick(&corners);
        cur = contracting_slide(&cur, c).expect("corner list is accurate").0;
    }
}

/// Anti-normal form: push the filling to the bottom-right of the smallest
/// rectangle containing it, by expanding slides.
pub fn anti_normal(t: &Tableau) -> Tableau {
    let rows = t.shape().rows();
    let cols = t.shape().outer().part(0);
    let mut cur = t.clone();
    loop {
        // outside corners strictly inside the bounding rectangle, bottom first
        let corner = (0..rows)
            .rev()
            .map(|i| (i, cur.shape().outer().part(i)))
            .find(|&(i, j)| j < cols && is_outside_corner(cur.shape(), i, j));
        match corner {
            Some(c) => {
                cur = expanding_slide(&cur, c).expect("corner checked").0;
            }
            None => return cur,
        }
    }
}

/// Evacuation of a normal-shape tableau: rectification of its rotation.
pub fn evacuate(p: &Tableau) -> Result<Tableau> {
    if !p.shape().inner().is_empty() {
        return Err(Error::NotNormalShape);
    }
    Ok(rectify(&p.rotate()))
}
