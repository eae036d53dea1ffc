//! Bruhat order and Kazhdan–Lusztig polynomials `P_{x,w}` for small `S_n`.
//!
//! Polynomials come from the standard recursion on `ℓ(w)`: pick a left
//! descent `s` of `w`, put `v = s w`, and
//!
//! ```text
//! P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
//!           - Σ_{z < v, sz < z} μ(z,v) q^{(ℓ(w)-ℓ(z))/2} P_{x,z}
//! ```
//!
//! with `c = 1` when `sx < x` and `c = 0` otherwise, and `μ(z,v)` the
//! coefficient of `q^{(ℓ(v)-ℓ(z)-1)/2}` in `P_{z,v}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation};

/// Largest `n` accepted without an explicit override.
pub const KL_CEILING: usize = 7;

/// Integer polynomial in `q`, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(from = "Vec<i64>", into = "Vec<i64>")
)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        IntPolynomial(alloc::vec![1])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    /// `self += factor * q^shift * other`.
    fn add_scaled(&mut self, other: &IntPolynomial, factor: i64, shift: usize) {
        if other.is_zero() || factor == 0 {
            return;
        }
        let len = other.0.len() + shift;
        if self.0.len() < len {
            self.0.resize(len, 0);
        }
        for (i, &c) in other.0.iter().enumerate() {
            self.0[i + shift] += factor * c;
        }
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        IntPolynomial::new(coeffs)
    }
}

impl From<IntPolynomial> for Vec<i64> {
    fn from(p: IntPolynomial) -> Self {
        p.0
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().filter(|(_, &c)| c != 0) {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{i}")?,
                _ => write!(f, "{a}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `x <= w` in the Bruhat order, by prefix dominance: for every prefix length
/// `i` and threshold `j`, `|{k <= i : x(k) >= j}| <= |{k <= i : w(k) >= j}|`.
pub fn bruhat_leq(x: &Permutation, w: &Permutation) -> Result<bool> {
    if x.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: w.n(),
        });
    }
    Ok(bruhat_leq_words(x.word(), w.word()))
}

fn bruhat_leq_words(x: &[u8], w: &[u8]) -> bool {
    let n = x.len();
    let mut in_x = [false; 256];
    let mut in_w = [false; 256];
    for i in 0..n.saturating_sub(1) {
        in_x[x[i] as usize] = true;
        in_w[w[i] as usize] = true;
        let (mut cx, mut cw) = (0usize, 0usize);
        for j in (1..=n).rev() {
            cx += in_x[j] as usize;
            cw += in_w[j] as usize;
            if cx > cw {
                return false;
            }
        }
    }
    true
}

/// Which left descent drives the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DescentChoice {
    #[default]
    Smallest,
    Largest,
}

#[derive(Debug, Clone)]
struct Column {
    /// `(rank x, P_{x,w})` for every `x <= w`, sorted by rank.
    polys: Vec<(usize, IntPolynomial)>,
    /// `(rank z, μ(z,w))` for `z < w` with `μ(z,w) != 0`.
    mu: Vec<(usize, i64)>,
}

impl Column {
    fn get(&self, x: usize) -> Option<&IntPolynomial> {
        self.polys
            .binary_search_by_key(&x, |(r, _)| *r)
            .ok()
            .map(|i| &self.polys[i].1)
    }
}

/// Memo table of Kazhdan–Lusztig polynomials for one `S_n`.
///
/// Columns `{P_{x,w} : x <= w}` are computed on demand, together with every
/// column the recursion touches.
#[derive(Debug, Clone)]
pub struct KlTable {
    n: usize,
    descent: DescentChoice,
    perms: Vec<Permutation>,
    lengths: Vec<usize>,
    columns: BTreeMap<usize, Column>,
}

impl KlTable {
    /// Fails when `n` exceeds [`KL_CEILING`].
    pub fn new(n: usize) -> Result<Self> {
        if n > KL_CEILING {
            return Err(Error::CeilingExceeded {
                n,
                ceiling: KL_CEILING,
            });
        }
        Ok(Self::new_unbounded(n, DescentChoice::Smallest))
    }

    /// No ceiling; memory grows roughly like `(n!)^2`.
    pub fn new_unbounded(n: usize, descent: DescentChoice) -> Self {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let lengths = perms.iter().map(Permutation::length).collect();
        KlTable {
            n,
            descent,
            perms,
            lengths,
            columns: BTreeMap::new(),
        }
    }

    pub fn with_descent(mut self, descent: DescentChoice) -> Self {
        if descent != self.descent {
            self.columns.clear();
        }
        self.descent = descent;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of memoised columns.
    pub fn cached_columns(&self) -> usize {
        self.columns.len()
    }

    /// `P_{x,w}`.
    pub fn polynomial(&mut self, x: &Permutation, w: &Permutation) -> Result<IntPolynomial> {
        self.check(x)?;
        self.check(w)?;
        let (xr, wr) = (x.rank(), w.rank());
        self.ensure(wr);
        Ok(self.columns[&wr].get(xr).cloned().unwrap_or_default())
    }

    /// `μ(x,w)`: the coefficient of `q^{(ℓ(w)-ℓ(x)-1)/2}` in `P_{x,w}` when
    /// `x < w` and `ℓ(w) - ℓ(x)` is odd, zero otherwise.
    pub fn mu(&mut self, x: &Permutation, w: &Permutation) -> Result<i64> {
        self.check(x)?;
        self.check(w)?;
        let (xr, wr) = (x.rank(), w.rank());
        self.ensure(wr);
        Ok(self.columns[&wr]
            .mu
            .iter()
            .find(|(z, _)| *z == xr)
            .map_or(0, |(_, m)| *m))
    }

    /// `δ(w)`, the degree of `P_{e,w}`.
    pub fn delta(&mut self, w: &Permutation) -> Result<usize> {
        let p = self.polynomial(&Permutation::identity(self.n), w)?;
        Ok(p.degree().expect("P_{e,w} has constant term 1"))
    }

    fn check(&self, w: &Permutation) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch {
                left: w.n(),
                right: self.n,
            });
        }
        Ok(())
    }

    fn descent_of(&self, w: &Permutation) -> Option<usize> {
        let mut descents = (1..self.n).filter(|&i| w.has_left_descent(i));
        match self.descent {
            DescentChoice::Smallest => descents.next(),
            DescentChoice::Largest => descents.next_back(),
        }
    }

    fn lookup(&self, x: usize, w: usize) -> Option<&IntPolynomial> {
        self.columns.get(&w).and_then(|c| c.get(x))
    }

    fn ensure(&mut self, wr: usize) {
        if self.columns.contains_key(&wr) {
            return;
        }
        let w = self.perms[wr].clone();
        let Some(s) = self.descent_of(&w) else {
            // w = e
            self.columns.insert(
                wr,
                Column {
                    polys: alloc::vec![(wr, IntPolynomial::one())],
                    mu: Vec::new(),
                },
            );
            return;
        };
        let v = w.swap_values(s);
        let vr = v.rank();
        self.ensure(vr);
        let support: Vec<(usize, i64)> = self.columns[&vr]
            .mu
            .iter()
            .copied()
            .filter(|&(z, _)| self.perms[z].has_left_descent(s))
            .collect();
        for &(z, _) in &support {
            self.ensure(z);
        }

        let lw = self.lengths[wr];
        let mut polys = Vec::new();
        for (xr, x) in self.perms.iter().enumerate() {
            if !bruhat_leq_words(x.word(), w.word()) {
                continue;
            }
            let sxr = x.swap_values(s).rank();
            let c = x.has_left_descent(s) as usize;
            let mut p = IntPolynomial::zero();
            if let Some(q) = self.lookup(sxr, vr) {
                p.add_scaled(q, 1, 1 - c);
            }
            if let Some(q) = self.lookup(xr, vr) {
                p.add_scaled(q, 1, c);
            }
            for &(z, m) in &support {
                if let Some(q) = self.lookup(xr, z) {
                    p.add_scaled(q, -m, (lw - self.lengths[z]) / 2);
                }
            }
            polys.push((xr, p));
        }

        let mu = polys
            .iter()
            .filter(|(z, _)| *z != wr)
            .filter_map(|(z, p)| {
                let gap = lw - self.lengths[*z];
                if gap.is_multiple_of(2) {
                    return None;
                }
                let m = p.coeff((gap - 1) / 2);
                (m != 0).then_some((*z, m))
            })
            .collect();
        self.columns.insert(wr, Column { polys, mu });
    }
}

/// `P_{x,w}` from a fresh table; `n` must respect [`KL_CEILING`].
pub fn kl_polynomial(x: &Permutation, w: &Permutation) -> Result<IntPolynomial> {
    if x.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: w.n(),
        });
    }
    KlTable::new(w.n())?.polynomial(x, w)
}

/// `δ(w)` from a fresh table.
pub fn delta(w: &Permutation) -> Result<usize> {
    KlTable::new(w.n())?.delta(w)
}

/// Outcome of checking, over all of `S_n`, that `P_{e,w} = 1` exactly when `w`
/// avoids 4231 and 3412, and that an involution has `δ(w) = 0` exactly when
/// it is some `σ_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessCheck {
    pub n: usize,
    /// Permutations with `P_{e,w} != 1`, sorted.
    pub singular: Vec<Permutation>,
    pub pattern_criterion: bool,
    pub involution_criterion: bool,
}

impl SmoothnessCheck {
    pub fn holds(&self) -> bool {
        self.pattern_criterion && self.involution_criterion
    }
}

pub fn verify_smoothness_criterion(table: &mut KlTable) -> SmoothnessCheck {
    let n = table.n();
    let p4231 = Permutation::new(alloc::vec![4, 2, 3, 1]).expect("valid");
    let p3412 = Permutation::new(alloc::vec![3, 4, 1, 2]).expect("valid");
    let e = Permutation::identity(n);
    let mut singular = Vec::new();
    let mut pattern_criterion = true;
    let mut involution_criterion = true;
    for wr in 0..factorial(n) {
        let w = table.perms[wr].clone();
        let p = table.polynomial(&e, &w).expect("same n");
        let avoids = !w.contains_pattern(&p4231) && !w.contains_pattern(&p3412);
        if !p.is_one() {
            singular.push(w.clone());
        }
        pattern_criterion &= p.is_one() == avoids;
        if w.is_involution() {
            let delta_zero = p.degree() == Some(0);
            involution_criterion &= delta_zero == w.young_composition().is_some();
        }
    }
    SmoothnessCheck {
        n,
        singular,
        pattern_criterion,
        involution_criterion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(word: &[u8]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn polynomial_basics() {
        assert_eq!(IntPolynomial::new(vec![1, 0, 0]), IntPolynomial::one());
        assert_eq!(IntPolynomial::new(vec![0, 0]).degree(), None);
        assert_eq!(IntPolynomial::new(vec![1, 2]).degree(), Some(1));
        assert_eq!(alloc::format!("{}", IntPolynomial::new(vec![1, 1, 0, 2])), "1 + q + 2q^3");
        assert_eq!(alloc::format!("{}", IntPolynomial::new(vec![0, -1])), "-q");
        assert_eq!(alloc::format!("{}", IntPolynomial::zero()), "0");
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&p(&[2, 1, 4, 3]), &p(&[3, 4, 1, 2])).unwrap());
        assert!(!bruhat_leq(&p(&[3, 4, 1, 2]), &p(&[2, 1, 4, 3])).unwrap());
        for w in Permutation::all(5) {
            assert!(bruhat_leq(&Permutation::identity(5), &w).unwrap());
            assert!(bruhat_leq(&w, &Permutation::longest(5)).unwrap());
        }
        assert!(bruhat_leq(&p(&[1]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn s4_singular_locus() {
        let mut table = KlTable::new(4).unwrap();
        let e = Permutation::identity(4);
        assert_eq!(table.polynomial(&e, &p(&[3, 4, 1, 2])).unwrap(), IntPolynomial::new(vec![1, 1]));
        assert_eq!(table.polynomial(&e, &p(&[4, 2, 3, 1])).unwrap(), IntPolynomial::new(vec![1, 1]));
        let check = verify_smoothness_criterion(&mut table);
        assert!(check.holds());
        assert_eq!(check.singular, vec![p(&[3, 4, 1, 2]), p(&[4, 2, 3, 1])]);
        assert!(verify_smoothness_criterion(&mut KlTable::new(3).unwrap()).singular.is_empty());
    }

    #[test]
    fn trivial_values() {
        let w = p(&[3, 1, 4, 2]);
        assert!(kl_polynomial(&w, &w).unwrap().is_one());
        assert!(kl_polynomial(&p(&[4, 1, 2, 3]), &p(&[1, 4, 2, 3])).unwrap().is_zero());
        assert_eq!(delta(&Permutation::identity(5)).unwrap(), 0);
        assert!(delta(&p(&[3, 4, 1, 2])).unwrap() >= 1);
        assert_eq!(
            kl_polynomial(&Permutation::identity(8), &Permutation::identity(8)),
            Err(Error::CeilingExceeded { n: 8, ceiling: 7 })
        );
        assert!(kl_polynomial(&p(&[1]), &p(&[1, 2])).is_err());
    }

    #[test]
    fn mu_of_covers_is_one() {
        let mut table = KlTable::new(4).unwrap();
        for w in Permutation::all(4) {
            for i in 1..4 {
                let x = w.swap_positions(i);
                if x.length() < w.length() {
                    assert_eq!(table.mu(&x, &w).unwrap(), 1);
                }
            }
        }
    }
}
