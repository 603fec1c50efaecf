//! The conjugation symmetry map rho_3 and the recording-matrix algorithm
//! that computes the tableau operator "black lozenge" in time linear in the
//! number of cells (for a fixed number of rows).

use crate::crystal::{reversal, reversal_general};
use crate::error::{Error, Result};
use crate::shapes::SkewShape;
use crate::tableau::{RecordingMatrix, Tableau};

/// Which order the three factors of rho_3 are applied in; all orders agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rho3Order {
    /// reversal, then rotation, then the lozenge (the canonical order)
    EBulletDiamond,
    /// lozenge, then rotation, then reversal
    DiamondBulletE,
    /// rotation, then lozenge, then reversal
    BulletDiamondE,
}

fn check_lower_triangular(m: &RecordingMatrix) -> Result<()> {
    for (i, row) in m.entries().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if j > i && v != 0 {
                return Err(Error::InvalidMatrix(format!(
                    "entry ({},{}) = {} above the diagonal",
                    i + 1,
                    j + 1,
                    v
                )));
            }
        }
    }
    Ok(())
}

/// Phase 1: cumulate each row rightwards and pad with the row-length
/// deficit, so that atilde[i][j] = sum_{k=j..=i} a[i][k] + lambda_1 -
/// lambda_{i+1}.
fn cumulate(m: &RecordingMatrix) -> Vec<Vec<usize>> {
    let lambda = m.shape().outer();
    let n = m.shape().rows();
    let mut atilde = vec![vec![0usize; n]; n];
    for i in 0..n {
        atilde[i][i] = m.entry(i, i) + lambda.part(0) - lambda.part(i);
        for j in (0..i).rev() {
            atilde[i][j] = m.entry(i, j) + atilde[i][j + 1];
        }
    }
    atilde
}

/// Phase 2 scatter, collected as per-row `(letter, count)` runs of the
/// output recording matrix. Runs are what keep large thin instances linear:
/// the dense output matrix is lambda_1 x nu_1 and would dominate the cell
/// count.
pub fn fast_blacklozenge_runs(m: &RecordingMatrix) -> Result<Vec<Vec<(usize, usize)>>> {
    check_lower_triangular(m)?;
    let n = m.shape().rows();
    let lambda1 = m.shape().outer().part(0);
    let atilde = cumulate(m);
    let mut units: Vec<Vec<usize>> = vec![Vec::new(); lambda1];
    for i in 0..n {
        let mut c = 0usize;
        for j in 0..(n - i) {
            let row = i + j;
            if row + 1 < n && atilde[row + 1][i] < atilde[row][i] + m.entry(row + 1, i) {
                return Err(Error::RemarkViolation(row + 2, i + 1));
            }
            let a = m.entry(row, i);
            let r = atilde[row][i] - a;
            for t in 1..=a {
                units[r + t - 1].push(c + t);
            }
            c += a;
        }
    }
    let runs = units
        .into_iter()
        .map(|mut cols| {
            cols.sort_unstable();
            let mut runs: Vec<(usize, usize)> = Vec::new();
            for col in cols {
                match runs.last_mut() {
                    Some((l, cnt)) if *l == col => *cnt += 1,
                    _ => runs.push((col, 1)),
                }
            }
            runs
        })
        .collect();
    Ok(runs)
}

/// The recording matrix of the lozenge image, computed without touching
/// the tableau itself.
pub fn fast_blacklozenge(m: &RecordingMatrix) -> Result<RecordingMatrix> {
    let runs = fast_blacklozenge_runs(m)?;
    let diamond = m.shape().diamond();
    // letters of the image are bounded by the count of letter 1
    let width = (0..m.shape().rows()).map(|i| m.entry(i, 0)).sum::<usize>();
    let entries = runs
        .into_iter()
        .map(|row| {
            let mut dense = vec![0usize; width];
            for (letter, count) in row {
                dense[letter - 1] = count;
            }
            dense
        })
        .collect();
    RecordingMatrix::new(entries, diamond)
}

/// Rebuild `filling` on `target`: tight-box rotations drop empty boundary
/// rows (normalized partitions cannot carry them), so the lozenge output
/// may sit in a shape that differs from lambda^t/mu^t only by empty rows.
fn anchor(filling: &Tableau, target: SkewShape) -> Result<Tableau> {
    let mut content = (0..filling.shape().rows())
        .map(|i| {
            filling
                .shape()
                .row_range(i)
                .map(|j| filling.entry(i, j).unwrap())
                .collect::<Vec<_>>()
        })
        .filter(|r| !r.is_empty());
    let rows: Vec<Vec<usize>> = (0..target.rows())
        .map(|i| {
            if target.row_range(i).is_empty() {
                Ok(Vec::new())
            } else {
                content.next().ok_or_else(|| {
                    Error::ShapeMismatch("lozenge output has too few rows".into())
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if content.next().is_some() {
        return Err(Error::ShapeMismatch("lozenge output has too many rows".into()));
    }
    Tableau::new(target, rows, filling.bound())
}

/// rho_3: reversal, rotation, then the fast lozenge on recording matrices;
/// the result lives on the conjugated shape.
pub fn rho3(t: &Tableau) -> Result<Tableau> {
    if !t.is_lr() {
        return Err(Error::NotLr);
    }
    let target = SkewShape::new(
        t.shape().outer().conjugate(),
        t.shape().inner().conjugate(),
    )?;
    let turned = reversal(t)?.rotate();
    let raw = fast_blacklozenge(&turned.recording_matrix())?.to_tableau()?;
    anchor(&raw, target)
}

/// Apply the three factors of rho_3 in any of the equivalent orders; the
/// non-canonical orders go through the word-level lozenge and the
/// class-intersection reversal, so they double as an independent check.
pub fn rho3_variants(t: &Tableau, order: Rho3Order) -> Result<Tableau> {
    if !t.is_lr() {
        return Err(Error::NotLr);
    }
    let target = SkewShape::new(
        t.shape().outer().conjugate(),
        t.shape().inner().conjugate(),
    )?;
    let raw = match order {
        Rho3Order::EBulletDiamond => return rho3(t),
        Rho3Order::DiamondBulletE => reversal_general(&t.blacklozenge_slow()?.rotate())?,
        Rho3Order::BulletDiamondE => reversal_general(&t.rotate().blacklozenge_slow()?)?,
    };
    anchor(&raw, target)
}
