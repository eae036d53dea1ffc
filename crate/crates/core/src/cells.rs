//! Two-sided cells `T^λ = {w : shape P(w) = λ}` and their extreme elements.
//!
//! The minimal-length elements of `T^λ` are the `σ_c` with `λ(c) = λ^t`
//! (equivalently `w_T` for the reading tableaux `T` of shape `λ`); the
//! maximal-length ones are the `d_c = σ_(n) σ_c` with `λ(c) = λ`. This module
//! computes both sides independently so they can be compared.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::ops::Range;

use crate::composition::{choose2, Partition};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rsk::{insertion_tableau, inverse_rs, involution_of_tableau, robinson_schensted};
use crate::tableau::StandardTableau;

/// Elements of `S_n` grouped by the shape of their insertion tableau.
///
/// Buckets built over disjoint rank ranges can be merged in any order; the
/// result is the same once [`CellBuckets::finish`] has sorted them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellBuckets {
    n: usize,
    cells: BTreeMap<Partition, Vec<Permutation>>,
}

impl CellBuckets {
    pub fn new(n: usize) -> Self {
        CellBuckets {
            n,
            cells: BTreeMap::new(),
        }
    }

    /// Sweeps all of `S_n`.
    pub fn sweep(n: usize) -> Self {
        let mut buckets = CellBuckets::new(n);
        buckets.extend_ranks(0..crate::perm::factorial(n));
        buckets.finish();
        buckets
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, w: Permutation) {
        let shape = insertion_tableau(&w).shape();
        self.cells.entry(shape).or_default().push(w);
    }

    /// Inserts the permutations of lexicographic rank in `ranks`.
    pub fn extend_ranks(&mut self, ranks: Range<usize>) {
        if ranks.is_empty() {
            return;
        }
        let mut w = Permutation::unrank(self.n, ranks.start);
        for _ in ranks {
            self.insert(w.clone());
            w.advance();
        }
    }

    pub fn merge(&mut self, other: CellBuckets) {
        debug_assert_eq!(self.n, other.n);
        for (shape, mut members) in other.cells {
            self.cells.entry(shape).or_default().append(&mut members);
        }
    }

    /// Sorts every bucket lexicographically.
    pub fn finish(&mut self) {
        for members in self.cells.values_mut() {
            members.sort_unstable();
        }
    }

    pub fn cell(&self, shape: &Partition) -> &[Permutation] {
        self.cells.get(shape).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &[Permutation])> {
        self.cells.iter().map(|(k, v)| (k, v.as_slice()))
    }

    pub fn total(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }
}

/// `T^λ` by a sweep of `S_n`, sorted.
pub fn two_sided_cell(shape: &Partition, n: usize) -> Result<Vec<Permutation>> {
    shape.check_size(n)?;
    let mut out: Vec<Permutation> = Permutation::all(n)
        .filter(|w| insertion_tableau(w).shape() == *shape)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `T^λ` as the image of all pairs of tableaux of shape `λ`, sorted.
pub fn cell_from_pairs(shape: &Partition) -> Vec<Permutation> {
    let tableaux = StandardTableau::enumerate(shape);
    let mut out: Vec<Permutation> = tableaux
        .iter()
        .flat_map(|p| {
            tableaux
                .iter()
                .map(move |q| inverse_rs(p, q).expect("same shape"))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Minimal and maximal lengths in `cell` with the elements attaining them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremes {
    pub min_length: usize,
    pub min_set: Vec<Permutation>,
    pub max_length: usize,
    pub max_set: Vec<Permutation>,
}

/// `None` for an empty slice. Output sets are sorted.
pub fn extremes(cell: &[Permutation]) -> Option<Extremes> {
    let lengths: Vec<usize> = cell.iter().map(Permutation::length).collect();
    let min_length = *lengths.iter().min()?;
    let max_length = *lengths.iter().max()?;
    let pick = |target: usize| {
        let mut set: Vec<Permutation> = cell
            .iter()
            .zip(&lengths)
            .filter(|(_, &l)| l == target)
            .map(|(w, _)| w.clone())
            .collect();
        set.sort_unstable();
        set
    };
    Some(Extremes {
        min_length,
        min_set: pick(min_length),
        max_length,
        max_set: pick(max_length),
    })
}

/// `T^λ_min`, found by sweeping `S_n`.
pub fn min_elements(shape: &Partition, n: usize) -> Result<Vec<Permutation>> {
    let cell = two_sided_cell(shape, n)?;
    Ok(extremes(&cell).map(|e| e.min_set).unwrap_or_default())
}

/// `T^λ_max`, found by sweeping `S_n`.
pub fn max_elements(shape: &Partition, n: usize) -> Result<Vec<Permutation>> {
    let cell = two_sided_cell(shape, n)?;
    Ok(extremes(&cell).map(|e| e.max_set).unwrap_or_default())
}

/// `{σ_c : λ(c) = λ^t}`, sorted.
pub fn predicted_min(shape: &Partition) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = shape
        .conjugate()
        .compositions()
        .iter()
        .map(|c| c.longest_element())
        .collect();
    out.sort_unstable();
    out
}

/// `{w_T : T a reading tableau of shape λ}`, sorted.
pub fn reading_involutions(shape: &Partition) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = StandardTableau::reading_tableaux(shape)
        .iter()
        .map(involution_of_tableau)
        .collect();
    out.sort_unstable();
    out
}

/// `{d_c : λ(c) = λ}`, sorted.
pub fn predicted_max(shape: &Partition) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = shape.compositions().iter().map(|c| c.coset_max()).collect();
    out.sort_unstable();
    out
}

/// Predicted `|T^λ_min|`: the multinomial of the multiplicities of `λ^t`.
pub fn count_min(shape: &Partition) -> u64 {
    shape.conjugate().multinomial_of_multiplicities()
}

/// Predicted `|T^λ_max|`: the multinomial of the multiplicities of `λ`.
pub fn count_max(shape: &Partition) -> u64 {
    shape.multinomial_of_multiplicities()
}

/// `n(λ) = Σ_i C(λ^t_i, 2)`, the length of every minimal element.
pub fn n_lambda(shape: &Partition) -> usize {
    shape.n_lambda()
}

/// `C(n, 2) - Σ_i C(λ_i, 2)`, the length of every maximal element.
pub fn max_length_formula(shape: &Partition, n: usize) -> Result<usize> {
    shape.check_size(n)?;
    Ok(choose2(n) - shape.parts().iter().map(|&p| choose2(p)).sum::<usize>())
}

/// Elementary Knuth moves on adjacent positions. Each preserves `P(w)`.
///
/// In a window `a b c` of consecutive positions: `x z y ↔ z x y` swaps `a, b`
/// when `c` lies strictly between them; `y x z ↔ y z x` swaps `b, c` when `a`
/// lies strictly between them.
pub fn knuth_moves(w: &Permutation) -> Vec<Permutation> {
    let word = w.word();
    let between = |v: u8, a: u8, b: u8| a.min(b) < v && v < a.max(b);
    let mut out = BTreeSet::new();
    for i in 0..word.len().saturating_sub(2) {
        let (a, b, c) = (word[i], word[i + 1], word[i + 2]);
        if between(c, a, b) {
            out.insert(w.swap_positions(i + 1));
        }
        if between(a, b, c) {
            out.insert(w.swap_positions(i + 2));
        }
    }
    out.into_iter().collect()
}

/// Knuth moves applied to `w^{-1}`, then inverted back. Each preserves `Q(w)`.
pub fn dual_knuth_moves(w: &Permutation) -> Vec<Permutation> {
    knuth_moves(&w.inverse())
        .iter()
        .map(Permutation::inverse)
        .collect()
}

/// Union of Knuth and dual-Knuth neighbours, sorted and deduplicated.
pub fn knuth_neighbors(w: &Permutation) -> Vec<Permutation> {
    let mut all: BTreeSet<Permutation> = knuth_moves(w).into_iter().collect();
    all.extend(dual_knuth_moves(w));
    all.into_iter().collect()
}

/// Every elementary Knuth or dual-Knuth move strictly increases the length.
pub fn is_locally_minimal(w: &Permutation) -> bool {
    let len = w.length();
    knuth_neighbors(w).iter().all(|u| u.length() > len)
}

/// Whether `cell` is a single component under Knuth and dual-Knuth moves.
/// Moves leaving the set are ignored.
pub fn is_move_connected(cell: &[Permutation]) -> bool {
    let Some(start) = cell.first() else {
        return true;
    };
    let members: BTreeSet<&Permutation> = cell.iter().collect();
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start.clone());
    while let Some(w) = queue.pop_front() {
        for u in knuth_neighbors(&w) {
            if members.contains(&u) && !seen.contains(&u) {
                seen.insert(u.clone());
                queue.push_back(u);
            }
        }
    }
    seen.len() == members.len()
}

/// Verdict per claim for one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CellVerdicts {
    /// `T^λ_min = {σ_c : λ(c) = λ^t} = {w_T : T reading of shape λ}`.
    pub theorem_min: bool,
    /// `T^λ_max = {d_c : λ(c) = λ}`.
    pub corollary_max: bool,
    /// `T^λ_max = {w ∈ T^λ : ev(Q(w)^t) = P(w σ_(n)) is a reading tableau of shape λ^t}`.
    pub max_reading: bool,
    pub count_min: bool,
    pub count_max: bool,
    pub length_min: bool,
    pub length_max: bool,
    /// `|T^λ| = (f^λ)^2`.
    pub cell_size: bool,
}

impl CellVerdicts {
    pub fn all(&self) -> bool {
        self.theorem_min
            && self.corollary_max
            && self.max_reading
            && self.count_min
            && self.count_max
            && self.length_min
            && self.length_max
            && self.cell_size
    }
}

/// Everything computed about one two-sided cell.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CellReport {
    pub shape: Partition,
    pub n: usize,
    pub cell_size: usize,
    pub min_length: usize,
    pub max_length: usize,
    pub min_set: Vec<Permutation>,
    pub max_set: Vec<Permutation>,
    pub predicted_min_set: Vec<Permutation>,
    pub reading_min_set: Vec<Permutation>,
    pub predicted_max_set: Vec<Permutation>,
    pub verdicts: CellVerdicts,
}

impl CellReport {
    /// Analyses `cell`, which must be the full (nonempty) cell of `shape`.
    pub fn analyze(shape: &Partition, cell: &[Permutation]) -> Result<CellReport> {
        let n = shape.size();
        let ext = extremes(cell).ok_or(Error::EmptyCell)?;
        let predicted_min_set = predicted_min(shape);
        let reading_min_set = reading_involutions(shape);
        let predicted_max_set = predicted_max(shape);
        let conj = shape.conjugate();

        let mut by_reading: Vec<Permutation> = cell
            .iter()
            .filter(|w| {
                let (_, q) = robinson_schensted(w);
                let ev = q.transpose().evacuation();
                let p_rev = insertion_tableau(&w.reversed());
                ev == p_rev && ev.is_reading_tableau() && ev.shape() == conj
            })
            .cloned()
            .collect();
        by_reading.sort_unstable();

        let f = StandardTableau::count(shape) as usize;
        let max_len = max_length_formula(shape, n)?;
        let verdicts = CellVerdicts {
            theorem_min: ext.min_set == predicted_min_set && ext.min_set == reading_min_set,
            corollary_max: ext.max_set == predicted_max_set,
            max_reading: by_reading == ext.max_set,
            count_min: ext.min_set.len() as u64 == count_min(shape),
            count_max: ext.max_set.len() as u64 == count_max(shape),
            length_min: ext.min_length == shape.n_lambda(),
            length_max: ext.max_length == max_len,
            cell_size: cell.len() == f * f,
        };
        Ok(CellReport {
            shape: shape.clone(),
            n,
            cell_size: cell.len(),
            min_length: ext.min_length,
            max_length: ext.max_length,
            min_set: ext.min_set,
            max_set: ext.max_set,
            predicted_min_set,
            reading_min_set,
            predicted_max_set,
            verdicts,
        })
    }
}
