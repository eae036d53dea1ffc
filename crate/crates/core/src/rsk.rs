//! The Robinson–Schensted correspondence `w ↦ (P(w), Q(w))`.
//!
//! Row insertion of `w(1), w(2), ..., w(n)`: each value bumps the leftmost
//! strictly larger entry of a row into the next row. `Q` records the cell
//! created at step `i` with the entry `i`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::StandardTableau;

/// Returns `(P(w), Q(w))`.
pub fn robinson_schensted(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for (step, &value) in w.word().iter().enumerate() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(alloc::vec![x]);
                q.push(alloc::vec![step as u8 + 1]);
                break;
            }
            let row = &mut p[r];
            // rows are increasing, so the bump target is a partition point
            let j = row.partition_point(|&y| y < x);
            if j == row.len() {
                row.push(x);
                q[r].push(step as u8 + 1);
                break;
            }
            core::mem::swap(&mut row[j], &mut x);
            r += 1;
        }
    }
    (
        StandardTableau::from_rows_unchecked(p),
        StandardTableau::from_rows_unchecked(q),
    )
}

/// Just `P(w)`; cheaper when the recording tableau is not needed.
pub fn insertion_tableau(w: &Permutation) -> StandardTableau {
    robinson_schensted(w).0
}

/// The unique `w` with `robinson_schensted(w) = (P, Q)`.
pub fn inverse_rs(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = p.size();
    let mut rows: Vec<Vec<u8>> = p.rows().to_vec();
    let mut word = alloc::vec![0u8; n];
    for step in (1..=n as u8).rev() {
        let (r, _) = q.position(step).expect("Q holds 1..n");
        // Q restricted to 1..step is standard, so its largest entry ends a row
        let mut x = rows[r].pop().expect("cell exists in P");
        for above in (0..r).rev() {
            let row = &mut rows[above];
            let j = row.partition_point(|&y| y < x) - 1;
            core::mem::swap(&mut row[j], &mut x);
        }
        word[step as usize - 1] = x;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// `w_T = π^{-1}(T, T)`, always an involution.
pub fn involution_of_tableau(t: &StandardTableau) -> Permutation {
    inverse_rs(t, t).expect("a tableau has the same shape as itself")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Partition;

    fn p(word: &[u8]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    fn t(rows: &[&[u8]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_examples() {
        let t1 = t(&[&[1, 5, 7], &[2, 6], &[3], &[4]]);
        assert_eq!(robinson_schensted(&p(&[4, 3, 2, 1, 6, 5, 7])), (t1.clone(), t1));
        let square = t(&[&[1, 3], &[2, 4]]);
        assert_eq!(robinson_schensted(&p(&[2, 1, 4, 3])), (square.clone(), square));
        let row = StandardTableau::single_row(5);
        assert_eq!(robinson_schensted(&Permutation::identity(5)), (row.clone(), row));
        let empty = StandardTableau::single_row(0);
        assert_eq!(robinson_schensted(&Permutation::identity(0)), (empty.clone(), empty));
    }

    #[test]
    fn inverse_examples() {
        let t2 = t(&[&[1, 3, 7], &[2, 4], &[5], &[6]]);
        assert_eq!(inverse_rs(&t2, &t2).unwrap(), p(&[2, 1, 6, 5, 4, 3, 7]));
        let col = StandardTableau::single_column(6);
        assert_eq!(inverse_rs(&col, &col).unwrap(), Permutation::longest(6));
        let t5 = t(&[&[1, 3, 4], &[2, 5], &[6], &[7]]);
        assert_eq!(involution_of_tableau(&t5), p(&[2, 1, 3, 7, 6, 5, 4]));
        assert!(involution_of_tableau(&StandardTableau::single_row(4)).is_identity());
        assert_eq!(
            inverse_rs(&StandardTableau::single_row(2), &StandardTableau::single_column(2)),
            Err(Error::ShapeMismatch)
        );
    }

    #[test]
    fn round_trip_s7() {
        for n in 0..=7 {
            for w in Permutation::all(n) {
                let (pt, qt) = robinson_schensted(&w);
                assert_eq!(pt.shape(), qt.shape());
                assert_eq!(inverse_rs(&pt, &qt).unwrap(), w);
            }
        }
    }

    #[test]
    fn involutions_from_every_tableau() {
        for n in 0..=8 {
            for l in Partition::all(n) {
                for tab in StandardTableau::enumerate(&l) {
                    let w = involution_of_tableau(&tab);
                    assert!(w.is_involution());
                    assert_eq!(robinson_schensted(&w), (tab.clone(), tab));
                }
            }
        }
    }
}
