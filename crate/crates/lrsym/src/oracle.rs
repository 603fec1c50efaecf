//! Brute-force enumeration of Littlewood-Richardson tableaux, coefficient
//! computation, and count/bijection certification of the conjugation
//! symmetries.

use serde::Serialize;

use crate::conjugation::rho3;
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableau::Tableau;

/// Enumeration bounds for the exhaustive suites: max cells of the outer
/// shape, max number of parts, max part size.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_cells: usize,
    pub max_parts: usize,
    pub max_part: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_cells: 10,
            max_parts: 5,
            max_part: 6,
        }
    }
}

/// All partitions within the bounds, smallest first, lexicographic within
/// a size.
pub fn partitions_within(b: Bounds) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<usize> = Vec::new();
    fn rec(parts: &mut Vec<usize>, remaining_cells: usize, max_next: usize, b: Bounds, out: &mut Vec<Partition>) {
        out.push(Partition::new(parts.clone()).unwrap());
        if parts.len() == b.max_parts {
            return;
        }
        for p in (1..=max_next.min(remaining_cells)).rev() {
            parts.push(p);
            rec(parts, remaining_cells - p, p, b, out);
            parts.pop();
        }
    }
    rec(&mut parts, b.max_cells, b.max_part, b, &mut out);
    out.sort_by_key(|p| (p.size(), p.parts().to_vec()));
    out
}

/// Cells of the shape in row-reading order (each row right to left), with
/// the index of the neighbour to the right and above, if any.
fn reading_cells(shape: &SkewShape) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity(shape.num_cells());
    for i in 0..shape.rows() {
        for j in shape.row_range(i).rev() {
            cells.push((i, j));
        }
    }
    cells
}

struct Search<'a> {
    shape: &'a SkewShape,
    nu: &'a Partition,
    cells: Vec<(usize, usize)>,
    // filled values addressed by grid position
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    out: Vec<Tableau>,
}

impl<'a> Search<'a> {
    fn candidate_ok(&self, idx: usize, v: usize) -> bool {
        let (i, j) = self.cells[idx];
        // prefix lattice condition and weight budget
        if self.counts[v] >= self.nu.part(v - 1) {
            return false;
        }
        if v > 1 && self.counts[v] >= self.counts[v - 1] {
            return false;
        }
        // row weakly increases: the right neighbour was placed just before
        if self.shape.contains_cell(i, j + 1) && v > self.grid[i][j + 1] {
            return false;
        }
        // column strictly increases
        if i > 0 && self.shape.contains_cell(i - 1, j) && v <= self.grid[i - 1][j] {
            return false;
        }
        true
    }

    fn place(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.out.push(self.finish());
            return;
        }
        for v in 1..=self.nu.len() {
            if self.candidate_ok(idx, v) {
                let (i, j) = self.cells[idx];
                self.grid[i][j] = v;
                self.counts[v] += 1;
                self.place(idx + 1);
                self.counts[v] -= 1;
            }
        }
    }

    fn finish(&self) -> Tableau {
        let rows = (0..self.shape.rows())
            .map(|i| self.shape.row_range(i).map(|j| self.grid[i][j]).collect())
            .collect();
        Tableau::new(self.shape.clone(), rows, self.nu.len()).expect("search respects tableau rules")
    }
}

/// All LR tableaux of the given shape and weight, in lexicographic
/// row-word order.
pub fn enumerate_lr_shape(shape: &SkewShape, nu: &Partition) -> Result<Vec<Tableau>> {
    if shape.num_cells() != nu.size() {
        return Err(Error::ArityMismatch);
    }
    if shape.num_cells() == 0 {
        return Ok(vec![Tableau::empty()]);
    }
    let cols = shape.outer().part(0);
    let mut search = Search {
        shape,
        nu,
        cells: reading_cells(shape),
        grid: vec![vec![0; cols]; shape.rows()],
        counts: vec![0; nu.len() + 1],
        out: Vec::new(),
    };
    search.place(0);
    Ok(search.out)
}

/// All LR tableaux of shape lambda/mu and weight nu.
pub fn enumerate_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Vec<Tableau>> {
    // enumerate on the reduced translate: same tableaux, and the shape
    // transforms are involutive only on reduced shapes
    let shape = SkewShape::new(lambda.clone(), mu.clone())?.reduced();
    enumerate_lr_shape(&shape, nu)
}

/// Split the search across `jobs` workers; the merge order is fixed, so the
/// output matches the single-threaded enumeration.
pub fn enumerate_lr_jobs(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    jobs: usize,
) -> Result<Vec<Tableau>> {
    if jobs <= 1 {
        return enumerate_lr(lambda, mu, nu);
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone())?.reduced();
    if shape.num_cells() != nu.size() {
        return Err(Error::ArityMismatch);
    }
    if shape.num_cells() == 0 {
        return Ok(vec![Tableau::empty()]);
    }
    // first-cell letters define disjoint lexicographic blocks; workers take
    // blocks round-robin and blocks are concatenated in letter order
    let letters = nu.len();
    let workers = jobs.min(letters).max(1);
    let mut blocks: Vec<Vec<Tableau>> = (0..letters).map(|_| Vec::new()).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let shape = &shape;
                scope.spawn(move || {
                    let mut mine: Vec<(usize, Vec<Tableau>)> = Vec::new();
                    for v in (w + 1..=letters).step_by(workers) {
                        let cols = shape.outer().part(0);
                        let mut search = Search {
                            shape,
                            nu,
                            cells: reading_cells(shape),
                            grid: vec![vec![0; cols]; shape.rows()],
                            counts: vec![0; letters + 1],
                            out: Vec::new(),
                        };
                        if search.candidate_ok(0, v) {
                            let (i, j) = search.cells[0];
                            search.grid[i][j] = v;
                            search.counts[v] += 1;
                            search.place(1);
                        }
                        mine.push((v - 1, search.out));
                    }
                    mine
                })
            })
            .collect();
        for h in handles {
            for (idx, found) in h.join().expect("worker panicked") {
                blocks[idx] = found;
            }
        }
    });
    Ok(blocks.into_iter().flatten().collect())
}

/// The Littlewood-Richardson coefficient as a count of tableaux.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
    match enumerate_lr(lambda, mu, nu) {
        Ok(list) => Ok(list.len()),
        // unreachable inner shapes carry coefficient zero
        Err(Error::InnerNotContained) => Ok(0),
        Err(e) => Err(e),
    }
}

/// Count/bijection certification of the conjugation symmetries for one
/// triple.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub c: usize,
    pub conj_count: usize,
    pub comm_count: usize,
    pub diamond_count: usize,
    pub bijection_ok: bool,
}

pub fn verify_symmetries(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<SymmetryReport> {
    let originals = enumerate_lr(lambda, mu, nu)?;
    let c = originals.len();
    let conj_set = enumerate_lr(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate())?;
    let comm_count = lr_coefficient(lambda, nu, mu)?;
    let shape = SkewShape::new(lambda.clone(), mu.clone())?.reduced();
    let diamond_set = enumerate_lr_shape(&shape.diamond(), &nu.conjugate())?;

    let mut rho3_images: Vec<Tableau> = originals
        .iter()
        .map(rho3)
        .collect::<Result<Vec<_>>>()?;
    let mut diamond_images: Vec<Tableau> = originals
        .iter()
        .map(|t| t.blacklozenge_slow())
        .collect::<Result<Vec<_>>>()?;
    let key = |t: &Tableau| t.rows_vec();
    rho3_images.sort_by_key(key);
    rho3_images.dedup();
    diamond_images.sort_by_key(key);
    diamond_images.dedup();
    let bijection_ok = rho3_images == conj_set && diamond_images == diamond_set;

    Ok(SymmetryReport {
        lambda: lambda.parts().to_vec(),
        mu: mu.parts().to_vec(),
        nu: nu.parts().to_vec(),
        c,
        conj_count: conj_set.len(),
        comm_count,
        diamond_count: diamond_set.len(),
        bijection_ok,
    })
}
