//! Truncated formal power series in `t` with [`Poly`] coefficients.
//!
//! The truncation order is explicit in the value: a series of order `N`
//! stores the coefficients of `t^0 .. t^(N-1)`. Arithmetic truncates to the
//! smaller order of the operands; any order mixing is recorded in a sticky
//! `mixed` flag so that silent precision loss is detectable by the caller.

use crate::poly::{rat, Poly, Rat};
use num_traits::One;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TSeries {
    coeffs: Vec<Poly>,
    mixed: bool,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        TSeries {
            coeffs: vec![Poly::zero(); order],
            mixed: false,
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TSeries::zero(order);
        if order > 0 {
            s.coeffs[0] = Poly::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        TSeries {
            coeffs,
            mixed: false,
        }
    }

    /// Truncation order (exclusive bound on known powers of `t`).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// True if this value was produced by mixing operands of unequal order.
    pub fn is_mixed(&self) -> bool {
        self.mixed
    }

    /// Coefficient of `t^j`; zero polynomial beyond the truncation order.
    pub fn coeff(&self, j: usize) -> Poly {
        self.coeffs.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order);
        self
    }

    fn combine_orders(a: &TSeries, b: &TSeries) -> (usize, bool) {
        let order = a.order().min(b.order());
        (order, a.mixed || b.mixed || a.order() != b.order())
    }

    pub fn add(&self, rhs: &TSeries) -> TSeries {
        let (order, mixed) = TSeries::combine_orders(self, rhs);
        let coeffs = (0..order)
            .map(|j| &self.coeffs[j] + &rhs.coeffs[j])
            .collect();
        TSeries { coeffs, mixed }
    }

    pub fn sub(&self, rhs: &TSeries) -> TSeries {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            mixed: self.mixed,
        }
    }

    pub fn mul(&self, rhs: &TSeries) -> TSeries {
        let (order, mixed) = TSeries::combine_orders(self, rhs);
        let mut coeffs = vec![Poly::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TSeries { coeffs, mixed }
    }

    pub fn scale(&self, c: &Poly) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            mixed: self.mixed,
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
            mixed: self.mixed,
        }
    }

    /// Multiplication by `t`. No precision is lost: the coefficient pushed
    /// past the truncation order was unknown territory anyway.
    pub fn mul_t(&self) -> TSeries {
        let mut coeffs = Vec::with_capacity(self.order());
        coeffs.push(Poly::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .take(self.order().saturating_sub(1))
                .cloned(),
        );
        TSeries {
            coeffs,
            mixed: self.mixed,
        }
    }

    /// Substitutes `t -> -t`.
    pub fn negate_t(&self) -> TSeries {
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 0 { c.clone() } else { -c })
                .collect(),
            mixed: self.mixed,
        }
    }

    pub fn pow(&self, e: u32) -> TSeries {
        let mut acc = TSeries::one(self.order());
        acc.mixed = self.mixed;
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `exp(c t) = sum_{j < order} c^j t^j / j!` for a polynomial `c`.
    pub fn exp_linear(c: &Poly, order: usize) -> TSeries {
        let mut coeffs = Vec::with_capacity(order);
        let mut cur = Poly::one();
        let mut fact = Rat::one();
        for j in 0..order {
            if j > 0 {
                cur = &cur * c;
                fact *= rat(j as i64);
            }
            coeffs.push(cur.scale(&(Rat::one() / &fact)));
        }
        TSeries {
            coeffs,
            mixed: false,
        }
    }

    /// `exp(k t)` for an integer `k`.
    pub fn exp_int(k: i64, order: usize) -> TSeries {
        TSeries::exp_linear(&Poly::from_int(k), order)
    }
}

/// Equality ignores the `mixed` bookkeeping flag.
impl PartialEq for TSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for TSeries {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn exp_examples() {
        // exp(alpha t) to order 3: 1 + alpha t + alpha^2 t^2 / 2
        let s = TSeries::exp_linear(&Poly::alpha(), 3);
        assert_eq!(s.coeff(0), Poly::one());
        assert_eq!(s.coeff(1), Poly::alpha());
        assert_eq!(s.coeff(2), Poly::alpha().pow(2).scale(&ratio(1, 2)));

        let one = TSeries::exp_linear(&Poly::zero(), 5);
        assert_eq!(one, TSeries::one(5));
    }

    #[test]
    fn sinh_coefficients() {
        // (e^t - e^{-t})/2 has t-coefficient 1 and t^3-coefficient 1/6.
        let s = TSeries::exp_int(1, 10)
            .sub(&TSeries::exp_int(-1, 10))
            .scale_rat(&ratio(1, 2));
        assert_eq!(s.coeff(1), Poly::one());
        assert_eq!(s.coeff(3), Poly::constant(ratio(1, 6)));
        assert_eq!(s.coeff(0), Poly::zero());
        assert_eq!(s.coeff(2), Poly::zero());
    }

    #[test]
    fn truncation_and_mixing() {
        let a = TSeries::exp_int(1, 8);
        let b = TSeries::exp_int(1, 5);
        let sum = a.add(&b);
        assert_eq!(sum.order(), 5);
        assert!(sum.is_mixed());
        assert!(!a.add(&a).is_mixed());
    }

    #[test]
    fn series_product_matches_poly_product() {
        // (1 + t)(1 - t + t^2) as series equals the polynomial product.
        let a = TSeries::from_coeffs(vec![Poly::one(), Poly::one(), Poly::zero(), Poly::zero()]);
        let b = TSeries::from_coeffs(vec![
            Poly::one(),
            Poly::from_int(-1),
            Poly::one(),
            Poly::zero(),
        ]);
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(0), Poly::one());
        assert_eq!(prod.coeff(1), Poly::zero());
        assert_eq!(prod.coeff(2), Poly::zero());
        assert_eq!(prod.coeff(3), Poly::one());
    }

    #[test]
    fn mul_t_keeps_order() {
        let s = TSeries::exp_int(2, 4).mul_t();
        assert_eq!(s.order(), 4);
        assert_eq!(s.coeff(0), Poly::zero());
        assert_eq!(s.coeff(1), Poly::one());
        assert_eq!(s.coeff(3), Poly::from_int(2));
        assert!(!s.is_mixed());
    }

    #[test]
    fn negate_t_flips_odd_terms() {
        let s = TSeries::exp_int(1, 6);
        assert_eq!(s.negate_t(), TSeries::exp_int(-1, 6));
    }
}
