//! Integer partitions: the indexing substrate for every table in the crate.
//!
//! A [`Partition`] is stored in canonical form (weakly decreasing positive
//! parts, no trailing zeros). The empty partition is a first-class value.
//! The canonical ordering sorts by weight, then reverse-lexicographically,
//! which is also the enumeration order of [`partitions_of`]; all JSON output
//! keyed by partitions is therefore byte-for-byte reproducible.

use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts, which must be weakly decreasing and
    /// positive. Panics otherwise; use [`Partition::from_unsorted`] for raw
    /// part lists.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition { parts }
    }

    /// Builds a partition from arbitrary part values, sorting descending and
    /// dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`, the sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `l(lambda)`, the number of (positive) parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `m_i(lambda)` of the part `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// The distinct part values, descending.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &p in &self.parts {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Smallest part, if any.
    pub fn lowest_part(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Sign `(-1)^(|lambda| - l(lambda))`.
    pub fn sign(&self) -> i32 {
        if (self.weight() - self.length() as u64).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Conjugate partition: `mu_i = sum_{j >= i} m_j(lambda)`.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = vec![0u32; cols];
        for &p in &self.parts {
            for q in parts.iter_mut().take(p as usize) {
                *q += 1;
            }
        }
        Partition { parts }
    }

    /// `z_lambda = prod_i i^(m_i) m_i!`, the centralizer order of the class.
    pub fn z_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for &i in &self.distinct_parts() {
            let m = self.multiplicity(i) as u64;
            for _ in 0..m {
                z *= BigInt::from(i);
            }
            z *= factorial(m);
        }
        z
    }

    /// `H_lambda`, the product of hook lengths over all cells.
    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        let mut h = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = row as i64 + conj.parts[j] as i64 - i as i64 - j as i64 - 1;
                h *= BigInt::from(hook);
            }
        }
        h
    }

    /// The multiset of contents `j - i` over cells `(i, j)`, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as i64 {
                out.push(j - i as i64);
            }
        }
        out
    }

    /// `lambda^(i)`: the partition with row `i` (1-based, up to `l+1`)
    /// lengthened by one box, or `None` if the result is not a partition.
    pub fn add_corner(&self, i: usize) -> Result<Option<Partition>> {
        let l = self.length();
        if i == 0 || i > l + 1 {
            return Err(Error::CornerIndex {
                index: i,
                max: l + 1,
            });
        }
        let cur = if i <= l { self.parts[i - 1] } else { 0 };
        if i >= 2 && self.parts[i - 2] < cur + 1 {
            return Ok(None);
        }
        let mut parts = self.parts.clone();
        if i <= l {
            parts[i - 1] += 1;
        } else {
            parts.push(1);
        }
        Ok(Some(Partition { parts }))
    }

    /// `lambda_(i)`: the partition with row `i` (1-based) shortened by one
    /// box, or `None` if the result is not a partition.
    pub fn remove_corner(&self, i: usize) -> Result<Option<Partition>> {
        let l = self.length();
        if i == 0 || i > l {
            return Err(Error::CornerIndex { index: i, max: l });
        }
        let cur = self.parts[i - 1];
        if i < l && self.parts[i] > cur - 1 {
            return Ok(None);
        }
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Ok(Some(Partition { parts }))
    }

    /// Rows `i` where a box can be added, i.e. where `lambda^(i)` exists.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.length() + 1)
            .filter(|&i| i == 1 || i == self.length() + 1 || self.parts[i - 2] > self.parts[i - 1])
            .collect()
    }

    /// `rho-bar`: the partition with all parts 1 erased.
    pub fn reduce(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|&p| p > 1).collect(),
        }
    }

    /// `rho-tilde`: pads with parts 1 up to weight `n`.
    pub fn pad(&self, n: u64) -> Result<Partition> {
        let w = self.weight();
        if n < w {
            return Err(Error::PadTooSmall { weight: w, n });
        }
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, (n - w) as usize));
        Ok(Partition { parts })
    }

    /// Removes one occurrence of each listed part value; `None` if any is
    /// missing (counting multiplicities).
    pub fn remove_parts(&self, remove: &[u32]) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for &r in remove {
            let pos = parts.iter().position(|&p| p == r)?;
            parts.remove(pos);
        }
        Some(Partition { parts })
    }

    /// Adds the listed part values (each positive).
    pub fn add_parts(&self, add: &[u32]) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(add);
        Partition::from_unsorted(parts)
    }

    /// `lambda \ (remove) u (add)`: simultaneous removal and insertion,
    /// `None` if a removed part is missing.
    pub fn replace_parts(&self, remove: &[u32], add: &[u32]) -> Option<Partition> {
        Some(self.remove_parts(remove)?.add_parts(add))
    }
}

impl fmt::Display for Partition {
    /// Canonical text form: comma-separated descending parts, empty string
    /// for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::ParsePartition(s.to_string()))?;
            if p == 0 {
                return Err(Error::ParsePartition(s.to_string()));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::ParsePartition(s.to_string()));
        }
        Ok(Partition { parts })
    }
}

impl Ord for Partition {
    /// Weight first, then reverse-lexicographic: within a weight, `(n)` is
    /// smallest and `(1^n)` largest, matching the order of [`partitions_of`].
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// All partitions of `n` in reverse-lexicographic order, from `(n)` down to
/// `(1^n)`.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut cur: Vec<u32> = vec![n as u32];
    loop {
        out.push(Partition { parts: cur.clone() });
        // Rightmost part > 1 shrinks by one; the tail is refilled greedily.
        let Some(idx) = cur.iter().rposition(|&p| p > 1) else {
            break;
        };
        let tail: u64 = cur[idx..].iter().map(|&p| p as u64).sum();
        let v = cur[idx] - 1;
        cur.truncate(idx);
        let mut rest = tail;
        while rest > 0 {
            let p = (v as u64).min(rest) as u32;
            cur.push(p);
            rest -= p as u64;
        }
    }
    out
}

/// All partitions of weight at most `n`, ordered by weight then
/// reverse-lexicographically.
pub fn partitions_up_to(n: u64) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent partition counter via Euler's pentagonal-number
    /// recurrence.
    fn euler_count(n: usize) -> Vec<BigInt> {
        let mut table = vec![BigInt::from(0); n + 1];
        table[0] = BigInt::one();
        for i in 1..=n {
            let mut sum = BigInt::from(0);
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * &table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * &table[i - g2];
                }
                k += 1;
            }
            table[i] = sum;
        }
        table
    }

    #[test]
    fn enumeration_matches_euler_recurrence() {
        let counts = euler_count(20);
        for n in 0..=20u64 {
            assert_eq!(
                BigInt::from(partitions_of(n).len()),
                counts[n as usize],
                "mismatch at n = {n}"
            );
        }
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let four: Vec<Partition> = partitions_of(4);
        assert_eq!(
            four,
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // Column counting on the Ferrers diagram of (4,4,2).
        assert_eq!(p(&[4, 4, 2]).conjugate(), p(&[3, 3, 2, 2]));
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12u64 {
            for lam in partitions_of(n) {
                let conj = lam.conjugate();
                assert_eq!(conj.weight(), lam.weight());
                assert_eq!(conj.conjugate(), lam);
                assert_eq!(conj.hook_product(), lam.hook_product());
            }
        }
    }

    #[test]
    fn z_order_examples() {
        assert_eq!(p(&[2, 1, 1]).z_order(), BigInt::from(4));
        assert_eq!(p(&[1, 1, 1, 1, 1]).z_order(), factorial(5));
        assert_eq!(p(&[3, 3, 2]).z_order(), BigInt::from(36));
    }

    #[test]
    fn hook_product_examples() {
        assert_eq!(p(&[2, 1]).hook_product(), BigInt::from(3));
        assert_eq!(p(&[6]).hook_product(), factorial(6));
        assert_eq!(p(&[2, 2]).hook_product(), BigInt::from(12));
    }

    #[test]
    fn contents_examples() {
        let sorted = |mut v: Vec<i64>| {
            v.sort();
            v
        };
        assert_eq!(sorted(p(&[2, 1]).contents()), vec![-1, 0, 1]);
        assert_eq!(sorted(p(&[2, 2]).contents()), vec![-1, 0, 0, 1]);
        assert_eq!(p(&[4]).contents(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn content_sum_closed_form() {
        // sum of contents = sum_i [ lam_i (lam_i - 1)/2 - (i - 1) lam_i ]
        for n in 0..=12u64 {
            for lam in partitions_of(n) {
                let direct: i64 = lam.contents().iter().sum();
                let formula: i64 = lam
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &r)| {
                        let r = r as i64;
                        r * (r - 1) / 2 - (i as i64) * r
                    })
                    .sum();
                assert_eq!(direct, formula, "lambda = {lam}");
            }
        }
    }

    #[test]
    fn corners() {
        assert_eq!(p(&[2, 1]).add_corner(2).unwrap(), Some(p(&[2, 2])));
        assert_eq!(p(&[2, 1]).add_corner(3).unwrap(), Some(p(&[2, 1, 1])));
        assert_eq!(p(&[2, 2]).add_corner(2).unwrap(), None);
        assert!(p(&[2, 1]).add_corner(4).is_err());
        assert!(p(&[2, 1]).add_corner(0).is_err());
        assert_eq!(p(&[2, 2]).remove_corner(1).unwrap(), None);
        assert_eq!(p(&[2, 2]).remove_corner(2).unwrap(), Some(p(&[2, 1])));
        assert_eq!(p(&[1]).remove_corner(1).unwrap(), Some(Partition::empty()));
        assert!(p(&[1]).remove_corner(2).is_err());
    }

    #[test]
    fn add_then_remove_is_identity() {
        for n in 0..=8u64 {
            for lam in partitions_of(n) {
                for i in 1..=lam.length() + 1 {
                    if let Some(bigger) = lam.add_corner(i).unwrap() {
                        assert_eq!(bigger.remove_corner(i).unwrap(), Some(lam.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_and_pad() {
        assert_eq!(p(&[3, 2, 1, 1]).reduce(), p(&[3, 2]));
        assert_eq!(p(&[2]).pad(5).unwrap(), p(&[2, 1, 1, 1]));
        assert_eq!(p(&[3, 2]).pad(9).unwrap().reduce(), p(&[3, 2]));
        assert!(p(&[3, 2]).pad(4).is_err());
    }

    #[test]
    fn text_round_trip() {
        for n in 0..=9u64 {
            for lam in partitions_of(n) {
                let back: Partition = lam.to_string().parse().unwrap();
                assert_eq!(back, lam);
            }
        }
        assert!("3,0,1".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn ordering_matches_enumeration() {
        for n in 0..=10u64 {
            let listed = partitions_of(n);
            let mut sorted = listed.clone();
            sorted.sort();
            assert_eq!(listed, sorted);
        }
    }

    #[test]
    fn multiplicity_consistency() {
        for lam in partitions_of(9) {
            let total: u64 = lam
                .distinct_parts()
                .iter()
                .map(|&i| i as u64 * lam.multiplicity(i) as u64)
                .sum();
            assert_eq!(total, lam.weight());
        }
    }

    #[test]
    fn surgery() {
        assert_eq!(p(&[3, 2, 1]).remove_parts(&[2]), Some(p(&[3, 1])));
        assert_eq!(p(&[3, 2, 1]).remove_parts(&[2, 2]), None);
        assert_eq!(p(&[2, 2]).remove_parts(&[2, 2]), Some(Partition::empty()));
        assert_eq!(p(&[3, 1]).add_parts(&[2, 5]), p(&[5, 3, 2, 1]));
        assert_eq!(p(&[3, 1]).replace_parts(&[1], &[2, 2]), Some(p(&[3, 2, 2])));
        assert_eq!(p(&[3, 1]).replace_parts(&[4], &[1]), None);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(p(&[3]).sign(), 1);
        assert_eq!(p(&[2]).sign(), -1);
        assert_eq!(p(&[2, 2]).sign(), 1);
        assert_eq!(Partition::empty().sign(), 1);
    }
}
