//! Irreducible characters of the symmetric group via the Murnaghan-Nakayama
//! rule, dimensions, and central characters `theta^lambda_mu`.

use crate::error::Error;
use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::Rat;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::collections::HashMap;

/// Memo cache for the Murnaghan-Nakayama recursion. Not synchronized: keep a
/// cache thread-confined, or use a fresh one per thread.
#[derive(Default)]
pub struct CharCache {
    memo: HashMap<(Partition, Partition), BigInt>,
}

impl CharCache {
    pub fn new() -> Self {
        CharCache::default()
    }

    /// `chi^lambda_mu` for `|lambda| = |mu|`.
    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
        }
        Ok(self.rec(lambda, mu))
    }

    fn rec(&mut self, lambda: &Partition, mu: &Partition) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        // Strip a border strip of length mu_1; border strips correspond to
        // beta-number moves b -> b - r, with sign from the elements jumped.
        let r = mu.parts()[0] as i64;
        let rest = Partition::new(mu.parts()[1..].to_vec());
        let l = lambda.length();
        let betas: Vec<i64> = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (l - 1 - i) as i64)
            .collect();
        let mut total = BigInt::zero();
        for &b in &betas {
            let target = b - r;
            if target < 0 || betas.contains(&target) {
                continue;
            }
            let height = betas.iter().filter(|&&x| target < x && x < b).count();
            let mut new_betas: Vec<i64> = betas
                .iter()
                .map(|&x| if x == b { target } else { x })
                .collect();
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<u32> = new_betas
                .iter()
                .enumerate()
                .map(|(i, &x)| (x - (l - 1 - i) as i64) as u32)
                .filter(|&p| p > 0)
                .collect();
            let sub = self.rec(&Partition::new(parts), &rest);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `chi^lambda_mu` with a private memo per call. For bulk work build a
/// [`CharTable`] or share a [`CharCache`] instead.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    CharCache::new().character(lambda, mu)
}

/// `dim lambda = n! / H_lambda`, cross-checked against the factorial /
/// Vandermonde product formula. A mismatch would be an implementation bug,
/// so it panics rather than returning an error.
pub fn dimension(lambda: &Partition) -> BigInt {
    let n = lambda.weight();
    let dim = factorial(n) / lambda.hook_product();

    let l = lambda.length() as i64;
    let mut denom = BigInt::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        denom *= factorial(p as u64 + (l - 1 - i as i64) as u64);
    }
    let mut vandermonde = BigInt::one();
    for i in 0..lambda.length() {
        for j in (i + 1)..lambda.length() {
            let d = lambda.parts()[i] as i64 - lambda.parts()[j] as i64 + j as i64 - i as i64;
            vandermonde *= BigInt::from(d);
        }
    }
    let alt = factorial(n) * vandermonde / denom;
    assert_eq!(dim, alt, "dimension formulas disagree for {lambda}");
    dim
}

/// Normalized character `chi^lambda_mu / dim lambda`.
pub fn normalized_character(lambda: &Partition, mu: &Partition) -> Result<Rat> {
    let chi = mn_character(lambda, mu)?;
    Ok(Rat::new(chi, dimension(lambda)))
}

/// Central character `theta^lambda_mu = (n!/z_mu) chi^lambda_mu / dim lambda`.
pub fn central_character(lambda: &Partition, mu: &Partition) -> Result<Rat> {
    let chi = mn_character(lambda, mu)?;
    let n = lambda.weight();
    Ok(Rat::new(
        factorial(n) * chi,
        mu.z_order() * dimension(lambda),
    ))
}

/// Central character through a process-wide memo behind a mutex; used by
/// the bulk identity checkers, where rebuilding per-call caches would
/// dominate the runtime.
pub fn theta_cached(lambda: &Partition, mu: &Partition) -> Result<Rat> {
    use std::sync::{Mutex, OnceLock};
    struct Caches {
        chi: CharCache,
        theta: HashMap<(Partition, Partition), Rat>,
    }
    static CACHE: OnceLock<Mutex<Caches>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        Mutex::new(Caches {
            chi: CharCache::new(),
            theta: HashMap::new(),
        })
    });
    let mut guard = cache.lock().expect("theta cache");
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = guard.theta.get(&key) {
        return Ok(v.clone());
    }
    let chi = guard.chi.character(lambda, mu)?;
    let n = lambda.weight();
    let v = Rat::new(factorial(n) * chi, mu.z_order() * dimension(lambda));
    guard.theta.insert(key, v.clone());
    Ok(v)
}

/// Content power sum `p_k(A_lambda) = sum_{(i,j) in lambda} (j-i)^k`, with
/// `p_0` giving the number of cells.
pub fn content_power_sum(lambda: &Partition, k: u32) -> BigInt {
    let mut total = BigInt::zero();
    for c in lambda.contents() {
        total += BigInt::from(c).pow(k);
    }
    total
}

/// The full character table of `S_n`, rows `lambda` and columns `mu` in
/// canonical partition order. Immutable once built.
pub struct CharTable {
    n: u64,
    values: BTreeMap<(Partition, Partition), BigInt>,
}

impl CharTable {
    pub fn new(n: u64) -> Self {
        let mut cache = CharCache::new();
        let parts = partitions_of(n);
        let mut values = BTreeMap::new();
        for lam in &parts {
            for mu in &parts {
                let chi = cache.character(lam, mu).expect("equal weights");
                values.insert((lam.clone(), mu.clone()), chi);
            }
        }
        CharTable { n, values }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        self.values.get(&(lambda.clone(), mu.clone()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigInt)> {
        self.values.iter()
    }

    /// Column orthogonality: `sum_lambda chi^lambda_mu chi^lambda_nu =
    /// delta_{mu nu} z_mu`.
    pub fn check_orthogonality(&self) -> bool {
        let parts = partitions_of(self.n);
        for mu in &parts {
            for nu in &parts {
                let mut sum = BigInt::zero();
                for lam in &parts {
                    sum += self.values[&(lam.clone(), mu.clone())].clone()
                        * &self.values[&(lam.clone(), nu.clone())];
                }
                let expect = if mu == nu {
                    mu.z_order()
                } else {
                    BigInt::zero()
                };
                if sum != expect {
                    return false;
                }
            }
        }
        true
    }

    /// `sum_lambda (dim lambda)^2 = n!` and `chi^lambda_{1^n} = dim lambda > 0`.
    pub fn check_dimensions(&self) -> bool {
        let id = Partition::empty().pad(self.n).expect("padding to n");
        let mut sum = BigInt::zero();
        for lam in partitions_of(self.n) {
            let col = &self.values[&(lam.clone(), id.clone())];
            if *col != dimension(&lam) || col <= &BigInt::zero() {
                return false;
            }
            sum += col * col;
        }
        sum == factorial(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn s3_table_is_the_classical_one() {
        // Standard 2-dimensional representation of S_3 and the two linear ones.
        let cases = [
            (p(&[3]), p(&[3]), 1),
            (p(&[3]), p(&[2, 1]), 1),
            (p(&[3]), p(&[1, 1, 1]), 1),
            (p(&[2, 1]), p(&[3]), -1),
            (p(&[2, 1]), p(&[2, 1]), 0),
            (p(&[2, 1]), p(&[1, 1, 1]), 2),
            (p(&[1, 1, 1]), p(&[3]), 1),
            (p(&[1, 1, 1]), p(&[2, 1]), -1),
            (p(&[1, 1, 1]), p(&[1, 1, 1]), 1),
        ];
        for (lam, mu, want) in cases {
            assert_eq!(mn_character(&lam, &mu).unwrap(), BigInt::from(want));
        }
    }

    #[test]
    fn trivial_representation_is_one_everywhere() {
        for n in 1..=7u64 {
            let row = p(&[n as u32]);
            for mu in partitions_of(n) {
                assert_eq!(mn_character(&row, &mu).unwrap(), BigInt::one());
            }
        }
    }

    #[test]
    fn sign_representation() {
        for n in 1..=7u64 {
            let col = Partition::new(vec![1; n as usize]);
            for mu in partitions_of(n) {
                assert_eq!(
                    mn_character(&col, &mu).unwrap(),
                    BigInt::from(mu.sign()),
                    "mu = {mu}"
                );
            }
        }
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        assert!(mn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(dimension(&p(&[1, 1, 1, 1])), BigInt::one());
        assert_eq!(dimension(&p(&[3, 2])), BigInt::from(5));
    }

    #[test]
    fn table_invariants() {
        for n in 1..=9u64 {
            let table = CharTable::new(n);
            assert!(
                table.check_orthogonality(),
                "orthogonality fails at n = {n}"
            );
            assert!(table.check_dimensions(), "dimension checks fail at n = {n}");
        }
    }

    #[test]
    fn central_characters() {
        // theta^lambda_{1^n} = 1 for every lambda
        for lam in partitions_of(6) {
            let id = p(&[1, 1, 1, 1, 1, 1]);
            assert_eq!(central_character(&lam, &id).unwrap(), rat(1));
        }
        assert_eq!(central_character(&p(&[2, 1]), &p(&[3])).unwrap(), rat(-1));
        assert_eq!(central_character(&p(&[2]), &p(&[2])).unwrap(), rat(1));
        assert_eq!(
            normalized_character(&p(&[2, 1]), &p(&[3])).unwrap(),
            ratio(-1, 2)
        );
    }

    #[test]
    fn content_power_sums() {
        assert_eq!(content_power_sum(&p(&[2, 1]), 1), BigInt::zero());
        assert_eq!(content_power_sum(&p(&[2, 2]), 2), BigInt::from(2));
        assert_eq!(content_power_sum(&p(&[4]), 3), BigInt::from(36));
        assert_eq!(content_power_sum(&p(&[3, 1]), 0), BigInt::from(4));
    }
}
