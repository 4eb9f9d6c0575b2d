//! The group algebra `C[S_n]` with [`Poly`] coefficients, Jucys-Murphy
//! elements, and class-expansion readout of central elements. This is the
//! brute-force side of the library: every operation is an honest sparse-map
//! convolution over explicit permutations.

use crate::error::Error;
use crate::partition::{factorial, partitions_of, Partition};
use crate::perm::{class_representative, Perm};
use crate::poly::Poly;
use crate::Result;
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashMap};

/// Sparse element of `C[S_n]`: permutations mapped to nonzero coefficients.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    n: usize,
    terms: HashMap<Perm, Poly>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        AlgebraElement::from_term(Perm::identity(n), Poly::one())
    }

    pub fn from_term(perm: Perm, coeff: Poly) -> Self {
        let n = perm.n();
        let mut terms = HashMap::new();
        if !coeff.is_zero() {
            terms.insert(perm, coeff);
        }
        AlgebraElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, perm: &Perm) -> Poly {
        self.terms.get(perm).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Poly)> {
        self.terms.iter()
    }

    fn insert(&mut self, perm: Perm, coeff: Poly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(perm) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        let mut out = self.clone();
        for (perm, coeff) in &rhs.terms {
            out.insert(perm.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&rhs.scale(&Poly::from_int(-1)))
    }

    pub fn scale(&self, c: &Poly) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Convolution product `sum a_s b_t (s t)`. Pure over its inputs, so a
    /// product may be parallelized by partitioning the left support and
    /// merging the partial results; nothing here requires shared state.
    pub fn mul(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        let mut out = AlgebraElement::zero(self.n);
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                out.insert(s.compose(t)?, a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reads off `a_mu` for each cycle type `mu`, validating that the
    /// element is central: within every conjugacy class all coefficients
    /// must agree (absent permutations count as zero).
    pub fn class_expand(&self) -> Result<BTreeMap<Partition, Poly>> {
        let mut by_class: HashMap<Partition, (Perm, Poly, usize)> = HashMap::new();
        for (perm, coeff) in &self.terms {
            let mu = perm.cycle_type();
            match by_class.get_mut(&mu) {
                None => {
                    by_class.insert(mu, (perm.clone(), coeff.clone(), 1));
                }
                Some((witness, existing, count)) => {
                    if existing != coeff {
                        return Err(Error::NotCentral {
                            a: witness.to_string(),
                            b: perm.to_string(),
                            class: mu.to_string(),
                            ca: existing.to_string(),
                            cb: coeff.to_string(),
                        });
                    }
                    *count += 1;
                }
            }
        }
        let mut out = BTreeMap::new();
        for mu in partitions_of(self.n as u64) {
            let Some((witness, coeff, count)) = by_class.get(&mu) else {
                continue;
            };
            let class_size = factorial(self.n as u64) / mu.z_order();
            if BigInt::from(*count) != class_size {
                // Some member of the class is missing, i.e. has coefficient 0.
                let rep = class_representative(&mu);
                let missing = if self.terms.contains_key(&rep) {
                    // The canonical representative is present; find an absent
                    // conjugate by scanning products rep^(g) over transpositions.
                    find_missing_conjugate(self, &mu)
                } else {
                    rep
                };
                return Err(Error::NotCentral {
                    a: witness.to_string(),
                    b: missing.to_string(),
                    class: mu.to_string(),
                    ca: coeff.to_string(),
                    cb: "0".to_string(),
                });
            }
            out.insert(mu, coeff.clone());
        }
        Ok(out)
    }

    pub fn is_central(&self) -> bool {
        self.class_expand().is_ok()
    }
}

fn find_missing_conjugate(x: &AlgebraElement, mu: &Partition) -> Perm {
    for perm in crate::perm::all_permutations(x.n) {
        if perm.cycle_type() == *mu && !x.terms.contains_key(&perm) {
            return perm;
        }
    }
    unreachable!("class count mismatch implies a missing member");
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

/// The Jucys-Murphy element `J_i = sum_{j < i} (j i)`; `J_1 = 0`.
pub fn jm_element(i: usize, n: usize) -> Result<AlgebraElement> {
    if i == 0 || i > n {
        return Err(Error::IndexRange { index: i, n });
    }
    let mut out = AlgebraElement::zero(n);
    for j in 1..i {
        out.insert(Perm::transposition(n, j, i), Poly::one());
    }
    Ok(out)
}

/// The formal sum of the conjugacy class of cycle type `mu` in `S_n`.
pub fn class_sum(mu: &Partition, n: usize) -> Result<AlgebraElement> {
    if mu.weight() != n as u64 {
        return Err(Error::WeightMismatch(mu.weight(), n as u64));
    }
    let mut out = AlgebraElement::zero(n);
    for perm in crate::perm::all_permutations(n) {
        if perm.cycle_type() == *mu {
            out.insert(perm, Poly::one());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn jm_elements() {
        assert!(jm_element(1, 3).unwrap().is_zero());
        let j2 = jm_element(2, 3).unwrap();
        assert_eq!(j2.support_size(), 1);
        assert_eq!(j2.coeff(&Perm::transposition(3, 1, 2)), Poly::one());
        let j3 = jm_element(3, 3).unwrap();
        assert_eq!(j3.support_size(), 2);
        assert!(jm_element(4, 3).is_err());
        assert!(jm_element(0, 3).is_err());
    }

    #[test]
    fn jm_elements_commute() {
        for n in 2..=6usize {
            let js: Vec<_> = (1..=n).map(|i| jm_element(i, n).unwrap()).collect();
            for a in &js {
                for b in &js {
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                }
            }
        }
    }

    #[test]
    fn class_expand_reads_central_elements() {
        // J_2^2 + J_3^2 + J_2 J_3 is h_2(J) in S_3 = 3 C_{1^3} + 2 C_{(3)}.
        let j2 = jm_element(2, 3).unwrap();
        let j3 = jm_element(3, 3).unwrap();
        let h2 = j2
            .pow(2)
            .unwrap()
            .add(&j3.pow(2).unwrap())
            .unwrap()
            .add(&j2.mul(&j3).unwrap())
            .unwrap();
        let exp = h2.class_expand().unwrap();
        assert_eq!(exp[&p(&[1, 1, 1])], Poly::from_int(3));
        assert_eq!(exp[&p(&[3])], Poly::from_int(2));
        assert_eq!(exp.get(&p(&[2, 1])), None);
    }

    #[test]
    fn class_expand_rejects_non_central() {
        let j2 = jm_element(2, 3).unwrap();
        let err = j2.class_expand().unwrap_err();
        match err {
            Error::NotCentral { a, b, class, .. } => {
                assert_ne!(a, b);
                assert_eq!(class, "2,1");
            }
            other => panic!("expected NotCentral, got {other:?}"),
        }
        assert!(AlgebraElement::zero(4).class_expand().unwrap().is_empty());
    }

    #[test]
    fn class_sums_are_central() {
        for mu in partitions_of(4) {
            let c = class_sum(&mu, 4).unwrap();
            let exp = c.class_expand().unwrap();
            assert_eq!(exp[&mu], Poly::one());
            assert_eq!(exp.len(), 1);
        }
    }
}
