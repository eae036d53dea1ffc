//! Compositions and partitions of `n`.
//!
//! A composition indexes a Young subgroup `S_{n_1} x ... x S_{n_k}` of `S_n`
//! acting on consecutive blocks of positions. A partition is a composition
//! whose parts weakly decrease; it indexes shapes of tableaux and two-sided
//! cells.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// `k choose 2`.
pub(crate) fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "Vec<usize>", into = "Vec<usize>")
)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::BadComposition(parts));
        }
        Ok(Composition(parts))
    }

    /// The composition `(1, 1, ..., 1)` of `n`.
    pub fn ones(n: usize) -> Self {
        Composition(alloc::vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The integer `n` being composed.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ(c)`, the decreasing reordering of the parts.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Start offsets of the blocks: `s_j = n_1 + ... + n_{j-1}`.
    pub(crate) fn block_starts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().scan(0, |start, &len| {
            let s = *start;
            *start += len;
            Some((s, len))
        })
    }

    /// All `2^(n-1)` compositions of `n` (one for `n = 0`), ordered by their
    /// set of cut points read as a bitmask.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return alloc::vec![Composition(Vec::new())];
        }
        (0u64..1 << (n - 1))
            .map(|mask| {
                let cuts: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Self::from_cuts(n, &cuts)
            })
            .collect()
    }

    fn from_cuts(n: usize, cuts: &[usize]) -> Composition {
        let mut parts = Vec::with_capacity(cuts.len() + 1);
        let mut prev = 0;
        for &c in cuts.iter().chain(core::iter::once(&n)) {
            parts.push(c - prev);
            prev = c;
        }
        Composition(parts)
    }

    /// Builds `c_I` from the generators `τ_i` missing from `I`.
    ///
    /// With `S \ I = {τ_{i_1}, ..., τ_{i_k}}`, `i_1 < ... < i_k`, the parts are
    /// `(i_1, i_2 - i_1, ..., n - i_k)`, so that `W_I = S_{c_I}`. The indices may
    /// be given in any order; duplicates are ignored.
    pub fn from_absent_generators(n: usize, absent: &[usize]) -> Result<Composition> {
        let mut cuts = absent.to_vec();
        cuts.sort_unstable();
        cuts.dedup();
        if let Some(&bad) = cuts.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        if n == 0 {
            return Ok(Composition(Vec::new()));
        }
        Ok(Self::from_cuts(n, &cuts))
    }

    /// Inverse of [`Composition::from_absent_generators`]: the indices `i` of the
    /// simple transpositions `τ_i` not in the parabolic subgroup `S_c`.
    pub fn absent_generators(&self) -> Vec<usize> {
        let mut cuts: Vec<usize> = self
            .0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect();
        cuts.pop();
        cuts
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// A partition `λ = (λ_1 >= ... >= λ_k >= 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "Vec<usize>", into = "Vec<usize>")
)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::BadPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// The one-row partition `(n)` (empty for `n = 0`).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition(Vec::new())
        } else {
            Partition(alloc::vec![n])
        }
    }

    /// The one-column partition `(1, ..., 1)`.
    pub fn column(n: usize) -> Self {
        Partition(alloc::vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks that this is a partition of `n`.
    pub fn check_size(&self, n: usize) -> Result<()> {
        let shape_sum = self.size();
        if shape_sum != n {
            return Err(Error::ShapeSumMismatch { shape_sum, n });
        }
        Ok(())
    }

    /// The conjugate partition: `λ^t_i = |{j : λ_j >= i}|`.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// `m_i(λ)` for `i = 1..=λ_1`; entry `i - 1` holds the multiplicity of `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let first = self.0.first().copied().unwrap_or(0);
        let mut m = alloc::vec![0; first];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// The multinomial `(m_1 + m_2 + ...)! / (m_1! m_2! ...)`, which counts
    /// the compositions `c` with `λ(c) = λ`.
    pub fn multinomial_of_multiplicities(&self) -> u64 {
        let mut total = 0u64;
        let mut acc = 1u64;
        for m in self.multiplicities() {
            total += m as u64;
            acc *= binomial(total, m as u64);
        }
        acc
    }

    /// `n(λ) = Σ_i C(λ^t_i, 2)`; equivalently `Σ_i (i - 1) λ_i`.
    pub fn n_lambda(&self) -> usize {
        self.conjugate().0.iter().map(|&p| choose2(p)).sum()
    }

    /// All compositions `c` with `λ(c) = λ`, in lexicographic order.
    pub fn compositions(&self) -> Vec<Composition> {
        // multiset permutations, lexicographic, starting from the increasing order
        let mut parts = self.0.clone();
        parts.reverse();
        let mut out = alloc::vec![Composition(parts.clone())];
        while next_lex(&mut parts) {
            out.push(Composition(parts.clone()));
        }
        out
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        partitions_rec(n, n, &mut prefix, &mut out);
        out
    }
}

fn partitions_rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        prefix.push(p);
        partitions_rec(rest - p, p, prefix, out);
        prefix.pop();
    }
}

/// Advances `xs` to the next lexicographic arrangement; false when it was the last.
pub(crate) fn next_lex<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[3, 2, 1, 1]).conjugate(), part(&[4, 2, 1]));
        assert_eq!(part(&[5]).conjugate(), Partition::column(5));
        assert_eq!(Partition::row(0).conjugate(), Partition::row(0));
        for n in 0..=12 {
            for p in Partition::all(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..=12
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(Partition::all(n).len(), count);
        }
    }

    #[test]
    fn absent_generators_example() {
        let c = Composition::from_absent_generators(7, &[4, 6]).unwrap();
        assert_eq!(c.parts(), &[4, 2, 1]);
        assert_eq!(c.absent_generators(), vec![4, 6]);
        assert_eq!(Composition::from_absent_generators(5, &[]).unwrap().parts(), &[5]);
        assert_eq!(
            Composition::from_absent_generators(5, &[1, 2, 3, 4]).unwrap(),
            Composition::ones(5)
        );
        assert_eq!(
            Composition::from_absent_generators(5, &[5]),
            Err(Error::IndexOutOfRange { index: 5, n: 5 })
        );
        assert!(Composition::from_absent_generators(5, &[0]).is_err());
    }

    #[test]
    fn absent_generators_round_trip() {
        for n in 1..=10 {
            let all = Composition::all(n);
            assert_eq!(all.len(), 1 << (n - 1));
            for mask in 0u32..1 << (n - 1) {
                let subset: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let c = Composition::from_absent_generators(n, &subset).unwrap();
                assert_eq!(c.size(), n);
                assert_eq!(c.absent_generators(), subset);
            }
        }
    }

    #[test]
    fn multinomials() {
        // λ^t of (3,2,1,1) is (4,2,1): all multiplicities one, 3! = 6
        assert_eq!(part(&[3, 2, 1, 1]).conjugate().multinomial_of_multiplicities(), 6);
        assert_eq!(part(&[3, 2, 1, 1]).multinomial_of_multiplicities(), 12);
        assert_eq!(part(&[2, 2]).multinomial_of_multiplicities(), 1);
        assert_eq!(part(&[2, 1]).multinomial_of_multiplicities(), 2);
        for n in 0..=9 {
            for p in Partition::all(n) {
                let comps = p.compositions();
                assert_eq!(comps.len() as u64, p.multinomial_of_multiplicities());
                assert!(comps.iter().all(|c| c.sorted() == p));
                assert!(comps.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn n_lambda_examples() {
        assert_eq!(part(&[3, 2, 1, 1]).n_lambda(), 7);
        assert_eq!(part(&[6]).n_lambda(), 0);
        assert_eq!(Partition::column(6).n_lambda(), 15);
        for n in 0..=10 {
            for p in Partition::all(n) {
                let alt: usize = p.parts().iter().enumerate().map(|(i, &l)| i * l).sum();
                assert_eq!(p.n_lambda(), alt);
            }
        }
    }
}
