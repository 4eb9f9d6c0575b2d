//! Generalized Catalan polynomials `C(r)` in `z`: equal to the Catalan
//! number at `z = 0` and to 1 at `z = 1`. They appear as the leading
//! coefficients of the Hall-Littlewood class expansions.
//!
//! Five independent computation paths are provided; their exact agreement
//! is itself one of the verified identities (no direct proof is known for
//! the equivalence of some of the finite sums).

use crate::error::Error;
use crate::poly::{binomial_u, rat, Poly, Rat};
use crate::symfun::hl_expansion;
use crate::Result;
use num_bigint::BigInt;
use num_traits::One;

/// Catalan number `C(r) = binom(2r, r) / (r + 1)`.
pub fn catalan_number(r: u64) -> BigInt {
    binomial_u(2 * r, r) / BigInt::from(r + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalanMethod {
    /// Defining double-binomial sum.
    DefSum,
    /// Convolution recurrence (requires `r >= 1`).
    Rec,
    /// Alternating sum with geometric factors (requires `r >= 1`).
    Alt1,
    /// Alternating sum in powers of `-z` (requires `r >= 1`).
    Alt2,
    /// Principal specialization `P_r(1^(r+1); z) / (r + 1)`.
    HlSpec,
}

/// The generalized Catalan polynomial `C(r)` by the chosen method.
pub fn gen_catalan(r: u32, method: CatalanMethod) -> Result<Poly> {
    match method {
        CatalanMethod::DefSum => Ok(def_sum(r)),
        CatalanMethod::Rec => {
            if r == 0 {
                return Err(Error::invalid("the recurrence needs r >= 1"));
            }
            Ok(by_recurrence(r))
        }
        CatalanMethod::Alt1 => {
            if r == 0 {
                return Err(Error::invalid("the alternating sum needs r >= 1"));
            }
            Ok(alt_geometric(r))
        }
        CatalanMethod::Alt2 => {
            if r == 0 {
                return Err(Error::invalid("the alternating sum needs r >= 1"));
            }
            Ok(alt_minus_z(r))
        }
        CatalanMethod::HlSpec => Ok(hl_specialization(r)),
    }
}

/// `sum_{m=0}^r z^(r-m) (1-z)^m binom(r+m, r-m) C(m)`.
fn def_sum(r: u32) -> Poly {
    let one_minus_z = Poly::one() - Poly::z();
    let mut acc = Poly::zero();
    for m in 0..=r {
        let coeff = binomial_u((r + m) as u64, (r - m) as u64) * catalan_number(m as u64);
        let term = Poly::monomial(r - m, 0, Rat::from_integer(coeff));
        acc = &acc + &(&term * &one_minus_z.pow(m));
    }
    acc
}

/// `C(r) = (1-z) sum_{i=1}^{r-2} C(i) C(r-i-1) + (2-z) C(r-1)` from
/// `C(0) = C(1) = 1`.
fn by_recurrence(r: u32) -> Poly {
    let one_minus_z = Poly::one() - Poly::z();
    let two_minus_z = Poly::from_int(2) - Poly::z();
    let mut table = vec![Poly::one(), Poly::one()];
    for m in 2..=r as usize {
        let mut conv = Poly::zero();
        for i in 1..=m.saturating_sub(2) {
            conv = &conv + &(&table[i] * &table[m - i - 1]);
        }
        let next = &(&one_minus_z * &conv) + &(&two_minus_z * &table[m - 1]);
        table.push(next);
    }
    table.swap_remove(r as usize)
}

/// `(r+1) C(r) = sum_m (-1)^(m-1) (1 + z + .. + z^(m-1)) binom(r+1, m)
/// binom(2r-m, r)`; the geometric factor is an explicit polynomial.
fn alt_geometric(r: u32) -> Poly {
    let mut acc = Poly::zero();
    for m in 1..=r {
        let mut geom = Poly::zero();
        for j in 0..m {
            geom = &geom + &Poly::monomial(j, 0, Rat::one());
        }
        let sign = if m % 2 == 1 { 1 } else { -1 };
        let coeff =
            sign * binomial_u((r + 1) as u64, m as u64) * binomial_u((2 * r - m) as u64, r as u64);
        acc = &acc + &geom.scale(&Rat::from_integer(coeff));
    }
    acc.scale(&(Rat::one() / rat((r + 1) as i64)))
}

/// `(r+1) C(r) = sum_{m=0}^{r-1} (-z)^m binom(r-1, m) binom(2r-m, r)`.
fn alt_minus_z(r: u32) -> Poly {
    let mut acc = Poly::zero();
    for m in 0..r {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let coeff =
            sign * binomial_u((r - 1) as u64, m as u64) * binomial_u((2 * r - m) as u64, r as u64);
        acc = &acc + &Poly::monomial(m, 0, Rat::from_integer(coeff));
    }
    acc.scale(&(Rat::one() / rat((r + 1) as i64)))
}

/// `C(r) = P_r(1^(r+1); z) / (r+1)` using `p_mu(1^N) = N^(l(mu))`.
fn hl_specialization(r: u32) -> Poly {
    if r == 0 {
        return Poly::one();
    }
    let n = rat((r + 1) as i64);
    let spec = hl_expansion(r).eval_each_part(|_| n.clone());
    spec.scale(&(Rat::one() / rat((r + 1) as i64)))
}

/// Value plus the invariants of the type: `C(r)(1) = 1`, `C(r)(0)` is the
/// Catalan number, and divisibility by `2 - z` for even `r >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenCatalan {
    pub r: u32,
    pub value: Poly,
}

impl GenCatalan {
    pub fn new(r: u32) -> Self {
        let value = def_sum(r);
        let g = GenCatalan { r, value };
        assert!(
            g.check_invariants(),
            "generalized Catalan invariants fail at r = {r}"
        );
        g
    }

    pub fn check_invariants(&self) -> bool {
        if self.value.eval(Some(&rat(1)), None).unwrap() != rat(1) {
            return false;
        }
        if self.value.eval(Some(&rat(0)), None).unwrap()
            != Rat::from_integer(catalan_number(self.r as u64))
        {
            return false;
        }
        if self.r >= 2 && self.r.is_multiple_of(2) {
            let two_minus_z = Poly::from_int(2) - Poly::z();
            if self.value.div_exact_z(&two_minus_z).is_none() {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const METHODS: [CatalanMethod; 5] = [
        CatalanMethod::DefSum,
        CatalanMethod::Rec,
        CatalanMethod::Alt1,
        CatalanMethod::Alt2,
        CatalanMethod::HlSpec,
    ];

    #[test]
    fn printed_values() {
        assert_eq!(gen_catalan(0, CatalanMethod::DefSum).unwrap(), Poly::one());
        assert_eq!(gen_catalan(1, CatalanMethod::DefSum).unwrap(), Poly::one());
        assert_eq!(
            gen_catalan(2, CatalanMethod::DefSum).unwrap(),
            Poly::from_int(2) - Poly::z()
        );
        let c3 = Poly::z().pow(2) - Poly::z().scale_int(5) + Poly::from_int(5);
        assert_eq!(gen_catalan(3, CatalanMethod::DefSum).unwrap(), c3);
        let c4 = &(Poly::from_int(2) - Poly::z())
            * &(Poly::z().pow(2) - Poly::z().scale_int(7) + Poly::from_int(7));
        assert_eq!(gen_catalan(4, CatalanMethod::DefSum).unwrap(), c4);
    }

    #[test]
    fn methods_agree_small() {
        for r in 1..=8u32 {
            let reference = gen_catalan(r, CatalanMethod::DefSum).unwrap();
            for m in METHODS {
                assert_eq!(gen_catalan(r, m).unwrap(), reference, "r = {r}, {m:?}");
            }
        }
        assert!(gen_catalan(0, CatalanMethod::Rec).is_err());
        assert!(gen_catalan(0, CatalanMethod::Alt1).is_err());
        assert_eq!(
            gen_catalan(0, CatalanMethod::HlSpec).unwrap(),
            gen_catalan(0, CatalanMethod::DefSum).unwrap()
        );
    }

    #[test]
    fn specializations() {
        for r in 0..=10u32 {
            let c = gen_catalan(r, CatalanMethod::DefSum).unwrap();
            assert_eq!(
                c.eval(Some(&rat(0)), None).unwrap(),
                Rat::from_integer(catalan_number(r as u64))
            );
            assert_eq!(c.eval(Some(&rat(1)), None).unwrap(), rat(1));
        }
    }

    #[test]
    fn invariant_struct() {
        for r in 0..=12u32 {
            GenCatalan::new(r);
        }
    }

    #[test]
    fn recurrence_as_polynomial_identity() {
        let c: Vec<Poly> = (0..=20u32)
            .map(|r| gen_catalan(r, CatalanMethod::DefSum).unwrap())
            .collect();
        let one_minus_z = Poly::one() - Poly::z();
        let two_minus_z = Poly::from_int(2) - Poly::z();
        for r in 2..=20usize {
            let mut conv = Poly::zero();
            for i in 1..=r - 2 {
                conv = &conv + &(&c[i] * &c[r - i - 1]);
            }
            let rhs = &(&one_minus_z * &conv) + &(&two_minus_z * &c[r - 1]);
            assert_eq!(c[r], rhs, "r = {r}");
        }
    }
}
