//! Permutations in one-line notation.
//!
//! `w = x_1 ... x_n` means `w(i) = x_i`. Products act on the left:
//! `(w v)(i) = w(v(i))`, so `w σ_(n)` reverses the word of `w` and
//! `σ_(n) w` complements its values.

use alloc::vec::Vec;
use core::fmt;

use crate::composition::{choose2, Composition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "Vec<u8>", into = "Vec<u8>")
)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=n`.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n > u8::MAX as usize {
            return Err(Error::TooLarge(n));
        }
        let mut seen = alloc::vec![false; n + 1];
        for &x in &word {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotAPermutation(word));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    /// Like [`Permutation::new`] but from wider integers, as they come out of parsers.
    pub fn from_values(values: &[usize]) -> Result<Self> {
        if values.len() > u8::MAX as usize {
            return Err(Error::TooLarge(values.len()));
        }
        let word = values
            .iter()
            .map(|&v| u8::try_from(v).map_err(|_| Error::NotAPermutation(Vec::new())))
            .collect::<Result<Vec<u8>>>()?;
        Permutation::new(word).map_err(|_| {
            Error::NotAPermutation(values.iter().map(|&v| v.min(255) as u8).collect())
        })
    }

    /// Trusted constructor for words already known to be permutations.
    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// `σ_(n) = n (n-1) ... 1`, the longest element of `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u8).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    pub fn into_word(self) -> Vec<u8> {
        self.0
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// The number of inversions `|{(i, j) : i < j, w(i) > w(j)}|`.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count())
            .sum()
    }

    /// `u(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation(
            other.0.iter().map(|&v| self.0[v as usize - 1]).collect(),
        ))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u8; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    pub fn is_involution(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &x)| self.0[x as usize - 1] as usize == i + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// The word reversed, i.e. `w σ_(n)`.
    pub fn reversed(&self) -> Permutation {
        let mut w = self.0.clone();
        w.reverse();
        Permutation(w)
    }

    /// Values complemented, i.e. `σ_(n) w`.
    pub fn complemented(&self) -> Permutation {
        let n = self.n() as u8;
        Permutation(self.0.iter().map(|&x| n + 1 - x).collect())
    }

    /// `τ_i w`: exchanges the values `i` and `i + 1`.
    pub fn swap_values(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation(
            self.0
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        )
    }

    /// `w τ_i`: exchanges the entries at positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// True when `τ_i w < w`, i.e. `i + 1` occurs to the left of `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.0.iter().position(|&x| x == v);
        pos(i as u8 + 1) < pos(i as u8)
    }

    /// Whether some subsequence of the word is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let m = pattern.n();
        if m > self.n() {
            return false;
        }
        let mut chosen = Vec::with_capacity(m);
        self.embed(&pattern.0, 0, &mut chosen)
    }

    fn embed(&self, pattern: &[u8], from: usize, chosen: &mut Vec<u8>) -> bool {
        let t = chosen.len();
        if t == pattern.len() {
            return true;
        }
        let remaining = pattern.len() - t;
        for pos in from..=self.n() - remaining {
            let x = self.0[pos];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&y, &p)| (p < pattern[t]) == (y < x));
            if consistent {
                chosen.push(x);
                if self.embed(pattern, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// The composition `c` with `self = σ_c`, if there is one.
    ///
    /// Scans left to right: a block starting after `s` positions must open with
    /// some value `v > s` and continue `v-1, ..., s+1`.
    pub fn young_composition(&self) -> Option<Composition> {
        let mut parts = Vec::new();
        let mut start = 0;
        while start < self.n() {
            let top = self.0[start] as usize;
            if top <= start {
                return None;
            }
            let len = top - start;
            let block = self.0.get(start..start + len)?;
            if block.iter().enumerate().any(|(j, &x)| x as usize != top - j) {
                return None;
            }
            parts.push(len);
            start += len;
        }
        Some(Composition::new(parts).expect("blocks are nonempty"))
    }

    /// Lexicographic rank of this permutation among all of `S_n`.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&y| y < self.0[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`]; `rank < n!`.
    pub fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = alloc::vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        Permutation(digits.into_iter().map(|d| pool.remove(d)).collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            next: Some(Permutation::identity(n)),
        }
    }

    /// Advances to the lexicographic successor; false on the last permutation.
    pub fn advance(&mut self) -> bool {
        crate::composition::next_lex(&mut self.0)
    }
}

/// Lexicographic enumeration of `S_n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.advance() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Composition {
    /// `σ_c`, the longest element of the Young subgroup `S_c`: each block of
    /// positions holds its own range of values reversed.
    pub fn longest_element(&self) -> Permutation {
        let mut word = Vec::with_capacity(self.size());
        for (start, len) in self.block_starts() {
            word.extend((start + 1..=start + len).rev().map(|v| v as u8));
        }
        Permutation(word)
    }

    /// `d_c = σ_(n) σ_c`, the longest minimal-length right coset representative of `S_c`.
    pub fn coset_max(&self) -> Permutation {
        self.longest_element().complemented()
    }

    /// `ℓ(σ_c) = Σ_j C(n_j, 2)`.
    pub fn longest_length(&self) -> usize {
        self.parts().iter().map(|&p| choose2(p)).sum()
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<u8>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// Digits run together when `n <= 9`, comma separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn p(word: &[u8]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
        assert!(Permutation::from_values(&[1, 300]).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(p(&[4, 3, 2, 1, 6, 5, 7]).length(), 7);
        for n in 0..9 {
            assert_eq!(Permutation::identity(n).length(), 0);
            assert_eq!(Permutation::longest(n).length(), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn compose_and_inverse() {
        assert_eq!(p(&[4, 3, 2, 1]).compose(&p(&[2, 1, 4, 3])).unwrap(), p(&[3, 4, 1, 2]));
        let w = p(&[2, 4, 1, 3]);
        assert_eq!(w.inverse(), p(&[3, 1, 4, 2]));
        assert_eq!(Permutation::identity(4).compose(&w).unwrap(), w);
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert_eq!(
            w.compose(&Permutation::identity(3)),
            Err(Error::SizeMismatch { left: 4, right: 3 })
        );
        let inv = p(&[6, 3, 2, 5, 4, 1]);
        assert!(inv.is_involution());
        assert_eq!(inv.inverse(), inv);
        assert_eq!(Permutation::identity(0).inverse(), Permutation::identity(0));
    }

    #[test]
    fn longest_elements() {
        assert_eq!(comp(&[4, 2, 1]).longest_element(), p(&[4, 3, 2, 1, 6, 5, 7]));
        assert_eq!(comp(&[2, 4, 1]).longest_element(), p(&[2, 1, 6, 5, 4, 3, 7]));
        assert!(Composition::ones(5).longest_element().is_identity());
        assert_eq!(comp(&[2, 2]).coset_max(), p(&[3, 4, 1, 2]));
        assert!(comp(&[5]).coset_max().is_identity());
        assert_eq!(Composition::ones(5).coset_max(), Permutation::longest(5));
        assert_eq!(Composition::new(vec![]).unwrap().longest_element(), Permutation::identity(0));
        for n in 0..=8 {
            for c in Composition::all(n) {
                let s = c.longest_element();
                assert!(s.is_involution());
                assert_eq!(s.length(), c.longest_length());
                assert_eq!(c.coset_max().length(), choose2(n) - s.length());
                assert_eq!(s.young_composition(), Some(c));
            }
        }
    }

    #[test]
    fn longest_times_w() {
        for n in 0..=7 {
            let w0 = Permutation::longest(n);
            for w in Permutation::all(n) {
                assert_eq!(w0.compose(&w).unwrap().length(), choose2(n) - w.length());
                assert_eq!(w0.compose(&w).unwrap(), w.complemented());
                assert_eq!(w.compose(&w0).unwrap(), w.reversed());
            }
        }
    }

    #[test]
    fn young_composition_examples() {
        assert_eq!(p(&[2, 1, 6, 5, 4, 3, 7]).young_composition(), Some(comp(&[2, 4, 1])));
        assert_eq!(Permutation::identity(4).young_composition(), Some(Composition::ones(4)));
        assert_eq!(p(&[6, 3, 2, 5, 4, 1]).young_composition(), None);
        assert_eq!(p(&[2, 3, 1]).young_composition(), None);
        assert_eq!(p(&[3, 1, 2]).young_composition(), None);
    }

    #[test]
    fn pattern_examples() {
        let p4231 = p(&[4, 2, 3, 1]);
        let p3412 = p(&[3, 4, 1, 2]);
        assert!(p(&[6, 3, 2, 5, 4, 1]).contains_pattern(&p4231));
        assert!(!p(&[4, 3, 2, 1, 6, 5, 7]).contains_pattern(&p4231));
        assert!(!p(&[4, 3, 2, 1, 6, 5, 7]).contains_pattern(&p3412));
        assert!(p4231.contains_pattern(&p4231));
        assert!(!p(&[1, 2]).contains_pattern(&p4231));
        assert!(p(&[1, 2]).contains_pattern(&Permutation::identity(0)));
    }

    #[test]
    fn enumeration_and_rank() {
        for n in 0..=6 {
            let all: Vec<Permutation> = Permutation::all(n).collect();
            assert_eq!(all.len(), factorial(n));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for (r, w) in all.iter().enumerate() {
                assert_eq!(w.rank(), r);
                assert_eq!(&Permutation::unrank(n, r), w);
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", p(&[4, 3, 2, 1])), "4321");
        let big = Permutation::longest(10);
        assert_eq!(alloc::format!("{big}"), "10,9,8,7,6,5,4,3,2,1");
    }

    /// Order-isomorphism check over every subsequence, via bitmasks.
    fn contains_pattern_oracle(w: &[u8], pattern: &[u8]) -> bool {
        let (n, m) = (w.len(), pattern.len());
        (0u32..1 << n).filter(|mask| mask.count_ones() as usize == m).any(|mask| {
            let sub: Vec<u8> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
            (0..m).all(|a| (0..m).all(|b| (sub[a] < sub[b]) == (pattern[a] < pattern[b])))
        })
    }

    fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
        (0..=max_n)
            .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
            .prop_map(|w| Permutation::new(w).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn contains_pattern_matches_oracle(w in arb_perm(8), pat in arb_perm(5)) {
            prop_assert_eq!(w.contains_pattern(&pat), contains_pattern_oracle(w.word(), pat.word()));
        }

        #[test]
        fn inverse_is_two_sided(w in arb_perm(10)) {
            let e = Permutation::identity(w.n());
            prop_assert_eq!(w.compose(&w.inverse()).unwrap(), e.clone());
            prop_assert_eq!(w.inverse().compose(&w).unwrap(), e);
            prop_assert_eq!(w.inverse().length(), w.length());
        }
    }
}
