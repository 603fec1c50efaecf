//! Tableau switching, the class-intersection algorithm, and the
//! Benkart-Sottile-Stroomer conjugation map.

use crate::error::{Error, Result};
use crate::plactic::{dual_equivalent, knuth_equivalent};
use crate::shapes::{Partition, SkewShape};
use crate::tableau::{yamanouchi_tableau, Tableau};

/// A nested pair: `outer` extends `inner` (outer's inner shape equals
/// inner's outer shape), so the two fillings tile a common skew region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchPair {
    pub inner: Tableau,
    pub outer: Tableau,
}

impl SwitchPair {
    pub fn new(inner: Tableau, outer: Tableau) -> Result<Self> {
        if outer.shape().inner() != inner.shape().outer() {
            return Err(Error::NotExtending);
        }
        Ok(SwitchPair { inner, outer })
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Tag {
    S(usize),
    T(usize),
    Out(usize),
}

struct Union {
    rows: usize,
    cols: usize,
    cells: Vec<Option<Tag>>,
}

impl Union {
    fn get(&self, i: usize, j: usize) -> Option<Tag> {
        if i < self.rows && j < self.cols {
            self.cells[i * self.cols + j]
        } else {
            None
        }
    }

    fn set(&mut self, i: usize, j: usize, v: Option<Tag>) {
        self.cells[i * self.cols + j] = v;
    }

    /// Contracting slide of the T-letters into a hole at `(i, j)`; cells
    /// that are not T-tagged block the hole.
    fn slide_through_t(&mut self, mut i: usize, mut j: usize) -> (usize, usize) {
        loop {
            let south = match self.get(i + 1, j) {
                Some(Tag::T(v)) => Some(v),
                _ => None,
            };
            let east = match self.get(i, j + 1) {
                Some(Tag::T(v)) => Some(v),
                _ => None,
            };
            match (south, east) {
                (None, None) => return (i, j),
                (Some(s), e) if e.map_or(true, |e| s <= e) => {
                    self.set(i, j, Some(Tag::T(s)));
                    self.set(i + 1, j, None);
                    i += 1;
                }
                (_, Some(e)) => {
                    self.set(i, j, Some(Tag::T(e)));
                    self.set(i, j + 1, None);
                    j += 1;
                }
                (Some(_), None) => unreachable!("covered by the guard"),
            }
        }
    }
}

/// Switch the nested pair `(s, t)`: the result `(a, b)` tiles the same
/// region with `b` extending `a`; `a` carries t's letters and `b` carries
/// s's letters.
pub fn switch(s: &Tableau, t: &Tableau) -> Result<(Tableau, Tableau)> {
    let pair = SwitchPair::new(s.clone(), t.clone())?;
    let (s, t) = (&pair.inner, &pair.outer);
    let rows = t.shape().rows().max(s.shape().rows());
    let cols = t.shape().outer().part(0).max(s.shape().outer().part(0));
    let mut u = Union {
        rows,
        cols,
        cells: vec![None; rows * cols],
    };
    for i in 0..s.shape().rows() {
        for j in s.shape().row_range(i) {
            u.set(i, j, Some(Tag::S(s.entry(i, j).unwrap())));
        }
    }
    for i in 0..t.shape().rows() {
        for j in t.shape().row_range(i) {
            u.set(i, j, Some(Tag::T(t.entry(i, j).unwrap())));
        }
    }

    // vacate s's cells in decreasing standard-label order; each vacated
    // letter rides its slide to the terminal cell
    let std_s = s.standardize();
    let mut cell_of_label = vec![(0usize, 0usize); s.num_cells()];
    for i in 0..s.shape().rows() {
        for j in s.shape().row_range(i) {
            cell_of_label[std_s.as_tableau().entry(i, j).unwrap() - 1] = (i, j);
        }
    }
    for &(i, j) in cell_of_label.iter().rev() {
        let v = match u.get(i, j) {
            Some(Tag::S(v)) => v,
            _ => unreachable!("unvacated s cell"),
        };
        u.set(i, j, None);
        let (ei, ej) = u.slide_through_t(i, j);
        u.set(ei, ej, Some(Tag::Out(v)));
    }

    // a keeps s's inner boundary; b reaches t's outer boundary; the shared
    // middle boundary is read off the slid T-cells
    let inner_a = s.shape().inner().clone();
    let mut alpha = vec![0usize; rows];
    for i in 0..rows {
        let last = (0..cols)
            .rev()
            .find(|&j| matches!(u.get(i, j), Some(Tag::T(_))));
        alpha[i] = match last {
            Some(j) => j + 1,
            None => inner_a.part(i),
        };
    }
    let alpha = Partition::new(alpha)?;
    let a = {
        let shape = SkewShape::new(alpha.clone(), inner_a)?;
        let rows_a = (0..shape.rows())
            .map(|i| {
                shape
                    .row_range(i)
                    .map(|j| match u.get(i, j) {
                        Some(Tag::T(v)) => Ok(v),
                        _ => Err(Error::InvalidFilling("switch left a gap".into())),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(shape, rows_a, t.bound())?
    };
    let b = {
        let shape = SkewShape::new(t.shape().outer().clone(), alpha)?;
        let rows_b = (0..shape.rows())
            .map(|i| {
                shape
                    .row_range(i)
                    .map(|j| match u.get(i, j) {
                        Some(Tag::Out(v)) => Ok(v),
                        _ => Err(Error::InvalidFilling("switch left a gap".into())),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(shape, rows_b, s.bound())?
    };
    Ok((a, b))
}

/// The unique tableau Knuth equivalent to `v` and dual equivalent to `u`:
/// switch a Yamanouchi filling of u's inner shape down through `u`, replace
/// the rectification by `v`, and switch back up.
pub fn unique_in_classes(v: &Tableau, u: &Tableau) -> Result<Tableau> {
    if !v.shape().inner().is_empty() {
        return Err(Error::NotNormalShape);
    }
    let w = yamanouchi_tableau(u.shape().inner());
    let (u_rect, z) = switch(&w, u)?;
    if u_rect.shape() != v.shape() {
        return Err(Error::ShapeMismatch(format!(
            "rectification shape {:?} != {:?}",
            u_rect.shape().outer(),
            v.shape().outer()
        )));
    }
    let (_, x) = switch(v, &z)?;
    Ok(x)
}

/// The Benkart-Sottile-Stroomer conjugation: the unique tableau of shape
/// lambda^t/mu^t Knuth equivalent to Y(nu^t) and dual equivalent to the
/// transposed standardization of the input.
pub fn rho_bss(t: &Tableau) -> Result<Tableau> {
    if !t.is_lr() {
        return Err(Error::NotLr);
    }
    let nu = t.weight_partition()?;
    let hat_t = t.standardize().transpose();
    let target = yamanouchi_tableau(&nu.conjugate());
    let x = unique_in_classes(&target, hat_t.as_tableau())?;
    assert!(knuth_equivalent(&x, &target), "lost the Knuth class");
    assert!(
        dual_equivalent(&x, hat_t.as_tableau()).expect("shapes agree by construction"),
        "lost the dual class"
    );
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{p, sk, t0};
    use crate::jdt::rectify;
    use crate::tableau::yamanouchi_tableau;

    #[test]
    fn switching_figure() {
        // Y((2,1)) switched through the transposed standardization of the
        // running example
        let s = yamanouchi_tableau(&p(&[2, 1]));
        let t = t0().standardize().transpose().into_tableau();
        let (a, b) = switch(&s, &t).unwrap();
        assert_eq!(a, rectify(&t));
        assert_eq!(
            a.rows_vec(),
            vec![vec![1, 6, 9], vec![2, 7, 10], vec![3, 8], vec![4], vec![5]]
        );
        assert_eq!(b.shape(), &sk(&[3, 3, 3, 2, 1, 1], &[3, 3, 2, 1, 1]));
        assert_eq!(b.rows_vec(), vec![vec![], vec![], vec![1], vec![2], vec![], vec![1]]);
        assert_eq!(b.entry(2, 2), Some(1));
        assert_eq!(b.entry(3, 1), Some(2));
        assert_eq!(b.entry(5, 0), Some(1));
    }

    #[test]
    fn switch_degenerate_and_errors() {
        let s = yamanouchi_tableau(&p(&[2, 1]));
        let empty_ext = Tableau::with_default_bound(sk(&[2, 1], &[2, 1]), vec![vec![], vec![]]).unwrap();
        let (a, b) = switch(&s, &empty_ext).unwrap();
        assert_eq!(a.num_cells(), 0);
        assert_eq!(b, s);
        let y31 = yamanouchi_tableau(&p(&[3, 1]));
        assert!(switch(&y31, &t0()).is_err());
    }

    #[test]
    fn switch_preserves_content_and_region() {
        let s = yamanouchi_tableau(&p(&[2, 1]));
        let t = t0().standardize().transpose().into_tableau();
        let (a, b) = switch(&s, &t).unwrap();
        let mut region: Vec<(usize, usize)> = Vec::new();
        for tab in [&a, &b] {
            for i in 0..tab.shape().rows() {
                for j in tab.shape().row_range(i) {
                    region.push((i, j));
                }
            }
        }
        region.sort();
        let mut expected: Vec<(usize, usize)> = Vec::new();
        for tab in [&s, &t] {
            for i in 0..tab.shape().rows() {
                for j in tab.shape().row_range(i) {
                    expected.push((i, j));
                }
            }
        }
        expected.sort();
        assert_eq!(region, expected);
        let mut sw = s.weight();
        let mut bw = b.weight();
        sw.resize(sw.len().max(bw.len()), 0);
        bw.resize(sw.len(), 0);
        assert_eq!(sw, bw);
        assert!(knuth_equivalent(&b, &s));
        assert!(knuth_equivalent(&a, &t));
    }

    #[test]
    fn unique_in_classes_identity() {
        for u in [t0(), t0().standardize().transpose().into_tableau()] {
            let x = unique_in_classes(&rectify(&u), &u).unwrap();
            assert_eq!(x, u);
        }
    }

    #[test]
    fn rho_bss_running_example() {
        let x = rho_bss(&t0()).unwrap();
        assert_eq!(x.shape(), &sk(&[3, 3, 3, 2, 1, 1], &[2, 1]));
        assert_eq!(
            x.rows_vec(),
            vec![vec![1], vec![1, 2], vec![1, 2, 3], vec![2, 3], vec![4], vec![5]]
        );
    }

    #[test]
    fn rho_bss_normal_shape() {
        let y = yamanouchi_tableau(&p(&[3, 1]));
        assert_eq!(rho_bss(&y).unwrap(), yamanouchi_tableau(&p(&[2, 1, 1])));
        assert!(rho_bss(&Tableau::normal(p(&[1]), vec![vec![2]]).unwrap()).is_err());
    }
}
