//! Permutations of `{1..n}` in one-line notation.

use crate::error::Error;
use crate::partition::Partition;
use crate::Result;
use std::fmt;

/// A permutation in one-line notation: `images[i]` is the image of `i + 1`.
/// Composition acts on the right argument first: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (1..=n as u8).collect(),
        }
    }

    /// Validates one-line notation: a bijection on `1..=n`.
    pub fn from_one_line(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::BadPermutation(format!("{images:?}")));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition `(a b)` in `S_n` (1-based, `a != b`).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a != b && 1 <= a && a <= n && 1 <= b && b <= n);
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(a - 1, b - 1);
        Perm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `x` (1-based).
    pub fn image(&self, x: u8) -> u8 {
        self.images[x as usize - 1]
    }

    pub fn one_line(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }

    /// `(self o other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(Perm {
            images: other.images.iter().map(|&x| self.image(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u8 + 1;
        }
        Perm { images }
    }

    /// Cycle type as a partition of `n`, cycle lengths sorted descending.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur] as usize - 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All permutations of `S_n` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Perm {
            images: images.clone(),
        });
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| images[i] < images[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

/// The lexicographically minimal permutation of the given cycle type:
/// cycles `(1 2 .. mu_1)(mu_1+1 ..) ...` filled left to right. Used as the
/// documented class representative.
pub fn class_representative(mu: &Partition) -> Perm {
    let n = mu.weight() as usize;
    let mut images: Vec<u8> = (1..=n as u8).collect();
    let mut base = 0usize;
    for &part in mu.parts() {
        let part = part as usize;
        for off in 0..part {
            images[base + off] = (base + (off + 1) % part) as u8 + 1;
        }
        base += part;
    }
    Perm { images }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_identity() {
        let swap = Perm::transposition(2, 1, 2);
        assert_eq!(swap.compose(&swap).unwrap(), Perm::identity(2));
        let s = Perm::from_one_line(vec![2, 3, 1, 4]).unwrap();
        assert_eq!(s.compose(&s.inverse()).unwrap(), Perm::identity(4));
    }

    #[test]
    fn composition_convention() {
        // a = (1 2), b = (2 3) in S_3: (a o b)(3) = a(2) = 1.
        let a = Perm::transposition(3, 1, 2);
        let b = Perm::transposition(3, 2, 3);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.image(3), 1);
        assert_eq!(ab.one_line(), &[2, 3, 1]);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(
            Perm::identity(4).cycle_type(),
            Partition::new(vec![1, 1, 1, 1])
        );
        let s = Perm::from_one_line(vec![2, 3, 1, 4]).unwrap();
        assert_eq!(s.cycle_type(), Partition::new(vec![3, 1]));
    }

    #[test]
    fn validation() {
        assert!(Perm::from_one_line(vec![1, 1]).is_err());
        assert!(Perm::from_one_line(vec![0]).is_err());
        assert!(Perm::from_one_line(vec![3, 1]).is_err());
        let a = Perm::identity(3);
        let b = Perm::identity(4);
        assert!(a.compose(&b).is_err());
    }

    #[test]
    fn enumeration_and_representatives() {
        assert_eq!(all_permutations(4).len(), 24);
        let rep = class_representative(&Partition::new(vec![3, 1]));
        assert_eq!(rep.one_line(), &[2, 3, 1, 4]);
        assert_eq!(rep.cycle_type(), Partition::new(vec![3, 1]));
        for mu in crate::partition::partitions_of(6) {
            assert_eq!(class_representative(&mu).cycle_type(), mu);
        }
    }
}
