//! Standard Young tableaux in English notation, stored row-major.
//!
//! Covers conjugation, transposition, reading tableaux and Schützenberger
//! evacuation. A *reading tableau* is one in which every entry `p` outside the
//! first row has `p - 1` in the row directly above it; these are exactly the
//! tableaux built from compositions by [`StandardTableau::from_composition`].

use alloc::vec::Vec;
use core::fmt;

use crate::composition::{Composition, Partition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "Vec<Vec<u8>>", into = "Vec<Vec<u8>>")
)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::NotStandard("empty row"));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::NotStandard("row lengths must weakly decrease"));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(Error::NotStandard("rows must strictly increase"));
        }
        if rows
            .windows(2)
            .any(|w| w[1].iter().zip(&w[0]).any(|(below, above)| below <= above))
        {
            return Err(Error::NotStandard("columns must strictly increase"));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        if n > u8::MAX as usize {
            return Err(Error::TooLarge(n));
        }
        let mut seen = alloc::vec![false; n + 1];
        for &x in rows.iter().flatten() {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotStandard("entries must be exactly 1..n"));
            }
            seen[x] = true;
        }
        Ok(StandardTableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u8>>) -> Self {
        debug_assert!(StandardTableau::new(rows.clone()).is_ok());
        StandardTableau { rows }
    }

    /// The one-row tableau `1 2 ... n`.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            return StandardTableau { rows: Vec::new() };
        }
        StandardTableau {
            rows: alloc::vec![(1..=n as u8).collect()],
        }
    }

    /// The one-column tableau with `1, ..., n` top to bottom.
    pub fn single_column(n: usize) -> Self {
        StandardTableau {
            rows: (1..=n as u8).map(|x| alloc::vec![x]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u8>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows weakly decrease")
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Zero-based `(row, column)` of the entry `value`.
    pub fn position(&self, value: u8) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&x| x == value).map(|c| (r, c))
        })
    }

    /// Row index (zero-based) of every entry; slot `v - 1` holds the row of `v`.
    fn row_of_each(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                out[x as usize - 1] = r;
            }
        }
        out
    }

    /// Reflects across the main diagonal.
    pub fn transpose(&self) -> StandardTableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect();
        StandardTableau { rows }
    }

    pub fn is_reading_tableau(&self) -> bool {
        let row_of = self.row_of_each();
        row_of
            .iter()
            .enumerate()
            .all(|(i, &r)| r == 0 || (i > 0 && row_of[i - 1] + 1 == r))
    }

    /// The reading tableau attached to `c = (n_1, ..., n_k)`: the block of
    /// values `s_j + 1, ..., s_j + n_j` is appended down rows `1, ..., n_j`.
    ///
    /// Its shape is `λ(c)^t` and its involution is `σ_c`.
    pub fn from_composition(c: &Composition) -> Result<StandardTableau> {
        let height = c.parts().iter().copied().max().unwrap_or(0);
        let mut rows: Vec<Vec<u8>> = alloc::vec![Vec::new(); height];
        for (start, len) in c.block_starts() {
            for (r, row) in rows.iter_mut().take(len).enumerate() {
                row.push((start + r + 1) as u8);
            }
        }
        StandardTableau::new(rows)
    }

    /// Every reading tableau of shape `λ`, sorted.
    pub fn reading_tableaux(shape: &Partition) -> Vec<StandardTableau> {
        let mut out: Vec<StandardTableau> = shape
            .conjugate()
            .compositions()
            .iter()
            .map(|c| StandardTableau::from_composition(c).expect("block construction is standard"))
            .collect();
        out.sort();
        out
    }

    /// Columns filled with consecutive values top to bottom, left to right.
    pub fn column_superstandard(shape: &Partition) -> StandardTableau {
        let mut rows: Vec<Vec<u8>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        let mut next = 1u8;
        for height in shape.conjugate().parts() {
            for row in rows.iter_mut().take(*height) {
                row.push(next);
                next += 1;
            }
        }
        StandardTableau { rows }
    }

    /// Schützenberger evacuation, computed by `n` promotion steps: remove the
    /// smallest remaining entry, slide the hole outward by jeu de taquin, and
    /// label the vacated corner `n, n - 1, ..., 1` in turn.
    pub fn evacuation(&self) -> StandardTableau {
        let n = self.size();
        let mut work = self.rows.clone();
        let mut out: Vec<Vec<u8>> = self.rows.iter().map(|r| alloc::vec![0; r.len()]).collect();
        for label in (1..=n as u8).rev() {
            let (mut r, mut c) = (0usize, 0usize);
            loop {
                let right = work[r].get(c + 1).copied();
                let below = work.get(r + 1).and_then(|row| row.get(c)).copied();
                let (nr, nc) = match (right, below) {
                    (None, None) => break,
                    (Some(_), None) => (r, c + 1),
                    (None, Some(_)) => (r + 1, c),
                    (Some(a), Some(b)) if a < b => (r, c + 1),
                    _ => (r + 1, c),
                };
                work[r][c] = work[nr][nc];
                r = nr;
                c = nc;
            }
            work[r].pop();
            if work[r].is_empty() {
                work.pop();
            }
            out[r][c] = label;
        }
        StandardTableau::from_rows_unchecked(out)
    }

    /// Every standard tableau of shape `λ`, sorted.
    pub fn enumerate(shape: &Partition) -> Vec<StandardTableau> {
        let mut rows: Vec<Vec<u8>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        let mut out = Vec::new();
        fill(shape.parts(), &mut rows, 1, shape.size() as u8, &mut out);
        out.sort();
        out
    }

    /// `f^λ` by the hook length formula.
    pub fn count(shape: &Partition) -> u64 {
        let conj = shape.conjugate();
        let mut numer: u128 = (1..=shape.size() as u128).product();
        let mut hooks: u128 = 1;
        for (r, &len) in shape.parts().iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.parts()[c] - r - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        numer /= hooks;
        numer as u64
    }
}

fn fill(shape: &[usize], rows: &mut [Vec<u8>], next: u8, n: u8, out: &mut Vec<StandardTableau>) {
    if next > n {
        out.push(StandardTableau { rows: rows.to_vec() });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
        if fits {
            rows[r].push(next);
            fill(shape, rows, next + 1, n, out);
            rows[r].pop();
        }
    }
}

impl TryFrom<Vec<Vec<u8>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u8>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<u8>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

/// Rows separated by `/`, entries by spaces.
impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn t(rows: &[&[u8]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4, 5]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![4, 2]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![4]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![]]).is_err());
        assert!(StandardTableau::new(vec![]).is_ok());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(StandardTableau::single_row(3).transpose(), StandardTableau::single_column(3));
        let t1 = t(&[&[1, 5, 7], &[2, 6], &[3], &[4]]);
        assert_eq!(t1.transpose(), t(&[&[1, 2, 3, 4], &[5, 6], &[7]]));
        assert_eq!(t1.transpose().shape(), t1.shape().conjugate());
    }

    #[test]
    fn reading_tableau_predicate() {
        assert!(t(&[&[1, 5, 7], &[2, 6], &[3], &[4]]).is_reading_tableau());
        assert!(!t(&[&[1, 2], &[3, 4]]).is_reading_tableau());
        assert!(StandardTableau::single_row(5).is_reading_tableau());
        assert!(StandardTableau::single_column(5).is_reading_tableau());
    }

    #[test]
    fn from_composition_examples() {
        let c = |p: &[usize]| Composition::new(p.to_vec()).unwrap();
        assert_eq!(
            StandardTableau::from_composition(&c(&[2, 4, 1])).unwrap(),
            t(&[&[1, 3, 7], &[2, 4], &[5], &[6]])
        );
        assert_eq!(
            StandardTableau::from_composition(&c(&[4, 2, 1])).unwrap(),
            t(&[&[1, 5, 7], &[2, 6], &[3], &[4]])
        );
        assert_eq!(
            StandardTableau::from_composition(&c(&[1])).unwrap(),
            StandardTableau::single_row(1)
        );
    }

    #[test]
    fn reading_tableaux_of_extreme_shapes() {
        assert_eq!(StandardTableau::reading_tableaux(&part(&[5])), vec![StandardTableau::single_row(5)]);
        assert_eq!(
            StandardTableau::reading_tableaux(&Partition::column(5)),
            vec![StandardTableau::single_column(5)]
        );
    }

    #[test]
    fn enumerate_small_shapes() {
        assert_eq!(
            StandardTableau::enumerate(&part(&[2, 2])),
            vec![t(&[&[1, 2], &[3, 4]]), t(&[&[1, 3], &[2, 4]])]
        );
        assert_eq!(StandardTableau::enumerate(&part(&[4])).len(), 1);
        let total: u64 = Partition::all(6)
            .iter()
            .map(|l| {
                let f = StandardTableau::enumerate(l).len() as u64;
                f * f
            })
            .sum();
        assert_eq!(total, 720);
    }

    #[test]
    fn hook_length_matches_enumeration() {
        for n in 0..=9 {
            for l in Partition::all(n) {
                assert_eq!(StandardTableau::enumerate(&l).len() as u64, StandardTableau::count(&l));
            }
        }
    }

    #[test]
    fn evacuation_basics() {
        let row = StandardTableau::single_row(4);
        assert_eq!(row.evacuation(), row);
        // Q(213), with 213 the reverse complement of 132
        assert_eq!(t(&[&[1, 2], &[3]]).evacuation(), t(&[&[1, 3], &[2]]));
        for n in 0..=8 {
            for l in Partition::all(n) {
                for tab in StandardTableau::enumerate(&l) {
                    let ev = tab.evacuation();
                    assert_eq!(ev.shape(), l);
                    assert_eq!(ev.evacuation(), tab);
                    assert_eq!(tab.transpose().transpose(), tab);
                    assert_eq!(tab.transpose().evacuation(), ev.transpose());
                }
            }
        }
    }

    #[test]
    fn column_superstandard_is_reading() {
        assert_eq!(
            StandardTableau::column_superstandard(&part(&[3, 2, 1, 1])),
            t(&[&[1, 5, 7], &[2, 6], &[3], &[4]])
        );
        for n in 0..=8 {
            for l in Partition::all(n) {
                let cs = StandardTableau::column_superstandard(&l);
                assert!(StandardTableau::new(cs.rows().to_vec()).is_ok());
                assert!(cs.is_reading_tableau());
            }
        }
    }
}
