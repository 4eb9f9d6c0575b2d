//! Generating functions `phi_rho(t) = sum_k c_rho^(k) t^k / k!` of the
//! reduced coefficients, their closed forms, and the transcribed fixture
//! displays for small `|rho|`.
//!
//! Fixture tables are data transcribed from published displays; the
//! transcription is guarded twice: the index sets must match the
//! enumeration of `I_r`, and the expanded series must reproduce the
//! recurrence output (a transcription error fails the fixture suites).

use crate::character::CharCache;
use crate::engine::{Family, ReducedTable};
use crate::error::Error;
use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::{binomial_u, rat, ratio, Poly, Rat};
use crate::series::TSeries;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A reduced-coefficient generating function for one partition.
#[derive(Debug, Clone)]
pub struct GenFunSeries {
    pub family: Family,
    pub rho: Partition,
    pub series: TSeries,
}

impl GenFunSeries {
    pub fn new(table: &mut ReducedTable, rho: &Partition, order: usize) -> Self {
        GenFunSeries {
            family: table.family(),
            rho: rho.clone(),
            series: phi_series(table, rho, order),
        }
    }

    /// For the `z`-families: the `t^k` coefficient vanishes whenever
    /// `(-1)^k` differs from the sign of `rho`, and below `|rho| - l(rho)`.
    pub fn check_parity(&self) -> bool {
        let eps = self.rho.sign();
        let excess = (self.rho.weight() - self.rho.length() as u64) as usize;
        for k in 0..self.series.order() {
            let k_sign = if k % 2 == 0 { 1 } else { -1 };
            if (k_sign != eps || k < excess) && !self.series.coeff(k).is_zero() {
                return false;
            }
        }
        true
    }
}

/// `phi_rho(t)` truncated at `order`, built from the recurrence table.
pub fn phi_series(table: &mut ReducedTable, rho: &Partition, order: usize) -> TSeries {
    let mut coeffs = Vec::with_capacity(order);
    let mut fact = Rat::one();
    for k in 0..order {
        if k > 0 {
            fact *= rat(k as i64);
        }
        let c = table.coeff(k as u32, rho);
        coeffs.push(c.scale(&(Rat::one() / &fact)));
    }
    TSeries::from_coeffs(coeffs)
}

/// Closed form of `phi_rho` for the power-sum family:
/// `|rho|! phi_rho(t) = e^(-t) (1 - e^(-t))^(|rho|-2) prod_i (e^(it)-1)^(m_i)`.
///
/// The formula is series-regular only for `|rho| >= 2`; smaller weights are
/// covered by the convention `phi_(1) = 1`, `phi_() = 0`, which must be
/// requested explicitly.
pub fn phi_closed_form_z1(rho: &Partition, order: usize, use_convention: bool) -> Result<TSeries> {
    let w = rho.weight();
    if w <= 1 {
        if !use_convention {
            return Err(Error::DegenerateSeries);
        }
        return Ok(if w == 0 {
            TSeries::zero(order)
        } else {
            TSeries::one(order)
        });
    }
    let e_minus = TSeries::exp_int(-1, order);
    let one_minus = TSeries::one(order).sub(&e_minus);
    let mut acc = e_minus.mul(&one_minus.pow(w as u32 - 2));
    for &i in &rho.distinct_parts() {
        let factor = TSeries::exp_int(i as i64, order).sub(&TSeries::one(order));
        acc = acc.mul(&factor.pow(rho.multiplicity(i)));
    }
    Ok(acc.scale_rat(&Rat::new(BigInt::one(), factorial(w))))
}

/// `psi_lambda(t) = sum_{rho |- |lambda|} z_rho^{-1} chi^lambda_rho
/// phi_rho(t)`, the Schur-side decomposition of the same generating
/// function.
pub fn psi_series(table: &mut ReducedTable, lambda: &Partition, order: usize) -> Result<TSeries> {
    let mut cache = CharCache::new();
    let mut acc = TSeries::zero(order);
    for rho in partitions_of(lambda.weight()) {
        let chi = cache.character(lambda, &rho)?;
        if chi.is_zero() {
            continue;
        }
        let phi = phi_series(table, &rho, order);
        acc = acc.add(&phi.scale_rat(&Rat::new(chi, rho.z_order())));
    }
    Ok(acc)
}

/// Closed form of `psi` at `z = 1` for a hook `(r, 1^s)`:
/// `|rho|! psi = (e^t - 1)^(r-1) (e^(-t) - 1)^s`. Non-hooks vanish.
pub fn psi_hook_closed_form_z1(arm: u32, leg: u32, order: usize) -> TSeries {
    let up = TSeries::exp_int(1, order).sub(&TSeries::one(order));
    let down = TSeries::exp_int(-1, order).sub(&TSeries::one(order));
    up.pow(arm - 1)
        .mul(&down.pow(leg))
        .scale_rat(&Rat::new(BigInt::one(), factorial((arm + leg) as u64)))
}

/// `R_k(z) = prod_{j=1}^{k-1} (k - jz) / (k-1)!`, with `R_1 = 1`.
pub fn r_poly(k: u32) -> Poly {
    let mut acc = Poly::one();
    for j in 1..k {
        acc = &acc * &(Poly::from_int(k as i64) - Poly::z().scale_int(j as i64));
    }
    acc.scale(&Rat::new(BigInt::one(), factorial(k as u64 - 1)))
}

/// The index family `I_r`: vectors `(i_0, i_1, .., i_r)` with
/// `i_0 + sum_u u i_u = r`.
pub fn index_family(r: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; r as usize + 1];
    fn rec(u: u32, remaining: u32, r: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if u > r {
            let mut full = cur.clone();
            full[0] = remaining;
            out.push(full);
            return;
        }
        let mut used = 0;
        while used * u <= remaining {
            cur[u as usize] = used;
            rec(u + 1, remaining - used * u, r, cur, out);
            used += 1;
        }
        cur[u as usize] = 0;
    }
    rec(1, r, r, &mut cur, &mut out);
    out.sort();
    out
}

/// `M_I(w, m) = (-1)^|I| binom(w-2, i_0) prod_u binom(m_u, i_u)`.
pub fn m_weight(index: &[u32], w: u64, rho: &Partition) -> Rat {
    let total: u32 = index.iter().sum();
    let mut acc = binomial_u(w - 2, index[0] as u64);
    for (u, &i) in index.iter().enumerate().skip(1) {
        acc *= binomial_u(rho.multiplicity(u as u32) as u64, i as u64);
    }
    if total % 2 == 1 {
        acc = -acc;
    }
    Rat::from_integer(acc)
}

/// `(e^{kt} - 1) + eps (e^{-kt} - 1)`, the display convention for the
/// symmetrized exponentials.
fn epm(k: i64, eps: i32, order: usize) -> TSeries {
    let one = TSeries::one(order);
    let up = TSeries::exp_int(k, order).sub(&one);
    let down = TSeries::exp_int(-k, order).sub(&one);
    up.add(&down.scale_rat(&rat(eps as i64)))
}

/// `t (e^{kt} - eps e^{-kt})`, the display convention for the
/// `t`-component.
fn tmp(k: i64, eps: i32, order: usize) -> TSeries {
    let up = TSeries::exp_int(k, order);
    let down = TSeries::exp_int(-k, order).scale_rat(&rat(eps as i64));
    up.sub(&down).mul_t()
}

/// `z^2 - c (z - 1)`.
fn quad_minus(c: Rat) -> Poly {
    let z = Poly::z();
    z.pow(2) - (z - Poly::one()).scale(&c)
}

/// `z^2 + c (z - 1)`.
fn quad_plus(c: Rat) -> Poly {
    let z = Poly::z();
    z.pow(2) + (z - Poly::one()).scale(&c)
}

/// `z^4 + a z^2 (z-1) + b (z-1)^2`.
fn quartic(a: &Rat, b: &Rat) -> Poly {
    let z = Poly::z();
    let zm1 = z.clone() - Poly::one();
    z.pow(4) + (&z.pow(2) * &zm1).scale(a) + zm1.pow(2).scale(b)
}

type Triple = (&'static [u32], i64, i64, i64, i64, i64, i64);

// (index, a_num, a_den, b_num, b_den, c_num, c_den) for weight 6, I_4.
const W6_I4: &[Triple] = &[
    (&[4, 0, 0, 0, 0], -7, 2, 7, 4, 0, 1),
    (&[3, 1, 0, 0, 0], -7, 2, 7, 4, 0, 1),
    (&[0, 4, 0, 0, 0], -245, 12, 2035, 24, 5, 4),
    (&[1, 3, 0, 0, 0], -91, 16, 591, 32, -5, 8),
    (&[2, 2, 0, 0, 0], -47, 6, 37, 12, 5, 24),
    (&[2, 0, 1, 0, 0], 0, 1, 0, 1, -5, 24),
    (&[0, 2, 1, 0, 0], -33, 4, -77, 8, -5, 4),
    (&[0, 0, 0, 0, 1], -33, 4, -77, 8, -5, 4),
    (&[1, 1, 1, 0, 0], -263, 48, -197, 96, 5, 8),
    (&[0, 0, 2, 0, 0], 115, 12, 235, 24, 5, 4),
    (&[0, 1, 0, 1, 0], -5, 12, 115, 24, 5, 4),
    (&[1, 0, 0, 1, 0], -11, 16, -49, 32, -5, 8),
];

// (index, A_num, A_den, B_num, B_den) for weight 7, I_4.
const W7_I4: &[(&[u32], i64, i64, i64, i64)] = &[
    (&[4, 0, 0, 0, 0], -47, 10, 22, 5),
    (&[3, 1, 0, 0, 0], -47, 10, 22, 5),
    (&[0, 4, 0, 0, 0], -47, 3, 212, 3),
    (&[1, 3, 0, 0, 0], -172, 15, 304, 15),
    (&[2, 2, 0, 0, 0], -88, 15, 136, 15),
    (&[2, 0, 1, 0, 0], -71, 30, -74, 15),
    (&[0, 2, 1, 0, 0], -26, 3, -40, 3),
    (&[0, 0, 0, 0, 1], -26, 3, -40, 3),
    (&[1, 1, 1, 0, 0], -4, 15, -32, 15),
    (&[0, 0, 2, 0, 0], 37, 3, 44, 3),
    (&[0, 1, 0, 1, 0], 11, 6, 2, 3),
    (&[1, 0, 0, 1, 0], -67, 15, -116, 15),
];

// (index, a_num, a_den, b_num, b_den, c_num, c_den) for weight 7, I_5.
const W7_I5: &[Triple] = &[
    (&[5, 0, 0, 0, 0, 0], -19, 10, 11, 20, 0, 1),
    (&[4, 1, 0, 0, 0, 0], -19, 10, 11, 20, 0, 1),
    (&[0, 5, 0, 0, 0, 0], 4371, 10, 6271, 20, 77, 4),
    (&[1, 4, 0, 0, 0, 0], -4167, 50, 3573, 100, -119, 20),
    (&[3, 2, 0, 0, 0, 0], 0, 1, 0, 1, 7, 40),
    (&[2, 3, 0, 0, 0, 0], 0, 1, 0, 1, 7, 8),
    (&[3, 0, 1, 0, 0, 0], -9, 2, 3, 4, -7, 40),
    (&[0, 3, 1, 0, 0, 0], -1281, 20, -3521, 40, -49, 4),
    (&[2, 1, 1, 0, 0, 0], 0, 1, 0, 1, -7, 40),
    (&[1, 2, 1, 0, 0, 0], 0, 1, 0, 1, 63, 20),
    (&[1, 0, 2, 0, 0, 0], 0, 1, 0, 1, -7, 20),
    (&[0, 1, 2, 0, 0, 0], -163, 10, 717, 20, 21, 4),
    (&[0, 0, 1, 1, 0, 0], -257, 40, -1137, 80, -7, 4),
    (&[2, 0, 0, 1, 0, 0], -163, 20, 17, 40, -7, 40),
    (&[0, 2, 0, 1, 0, 0], -3623, 40, 5417, 80, 35, 4),
    (&[1, 1, 0, 1, 0, 0], 1249, 100, -1331, 200, -7, 4),
    (&[1, 0, 0, 0, 1, 0], -1363, 100, 697, 200, 7, 20),
    (&[0, 1, 0, 0, 1, 0], 1849, 20, -2091, 40, -21, 4),
    (&[0, 0, 0, 0, 0, 1], -593, 20, 907, 40, 7, 4),
];

fn check_table_indices(table_keys: Vec<Vec<u32>>, r: u32) -> Result<()> {
    let mut keys = table_keys;
    keys.sort();
    keys.dedup();
    if keys != index_family(r) {
        return Err(Error::invalid(format!(
            "fixture table indices do not enumerate I_{r}"
        )));
    }
    Ok(())
}

/// The transcribed closed-form series for the Hall-Littlewood generating
/// function `phi_rho(t)` for `2 <= |rho| <= 7`.
pub fn hl_phi_display(rho: &Partition, order: usize) -> Result<TSeries> {
    let w = rho.weight();
    if !(2..=7).contains(&w) {
        return Err(Error::invalid(format!(
            "fixture displays cover 2 <= |rho| <= 7, got {w}"
        )));
    }
    let eps = rho.sign();
    let m1 = rho.multiplicity(1) as i64;
    let m2 = rho.multiplicity(2) as i64;
    let m3 = rho.multiplicity(3) as i64;
    let choose = |m: i64, k: u64| Rat::from_integer(binomial_u(m as u64, k));
    let two_minus_z = Poly::from_int(2) - Poly::z();
    let e = |k: i64| epm(k, eps, order);

    let sum = match w {
        2 => e(1).scale_rat(&ratio(1, 2)),
        3 => {
            let inner = e(2).sub(&e(1).scale_rat(&rat(m1 + 1)));
            inner.scale(&r_poly(2)).scale_rat(&ratio(1, 6))
        }
        4 => {
            let q = quad_minus(ratio(5, 2)).scale(&rat(2 * m1 + 1))
                + quad_minus(ratio(11, 2)).scale(&choose(m1, 2))
                - quad_plus(ratio(1, 2)).scale(&rat(m2));
            e(3).scale(&r_poly(3))
                .sub(
                    &e(2)
                        .scale(&(&r_poly(2) * &two_minus_z))
                        .scale_rat(&rat(m1 + 2)),
                )
                .add(&e(1).scale(&q))
                .scale_rat(&Rat::new(BigInt::one(), factorial(4)))
        }
        5 => {
            let qa = quad_minus(ratio(28, 9)).scale(&rat(3 * m1 + 3))
                + quad_minus(ratio(16, 3)).scale(&choose(m1, 2))
                - quad_plus(ratio(4, 3)).scale(&rat(m2));
            let qb = quad_minus(ratio(7, 6)).scale(&rat(3 * m1 + 1))
                + quad_minus(ratio(17, 6)).scale(&(choose(m1, 2) * rat(3)))
                + quad_minus(ratio(19, 2)).scale(&choose(m1, 3))
                - quad_plus(ratio(1, 2)).scale(&rat(m1 * m2 + 3 * m2 - m3));
            e(4).scale(&r_poly(4))
                .sub(
                    &e(3)
                        .scale(&(&r_poly(3) * &two_minus_z))
                        .scale_rat(&rat(m1 + 3)),
                )
                .add(&e(2).scale(&(&r_poly(2) * &qa)))
                .sub(&e(1).scale(&(&two_minus_z * &qb)))
                .scale_rat(&Rat::new(BigInt::one(), factorial(5)))
        }
        6 => {
            check_table_indices(W6_I4.iter().map(|t| t.0.to_vec()).collect(), 4)?;
            let qa = quad_minus(ratio(27, 8)).scale(&rat(4 * m1 + 6))
                + quad_minus(ratio(21, 4)).scale(&choose(m1, 2))
                - quad_plus(ratio(9, 4)).scale(&rat(m2));
            let qb = quad_minus(rat(2)).scale(&rat(6 * m1 + 4))
                + quad_minus(ratio(11, 3)).scale(&(choose(m1, 2) * rat(4)))
                + quad_minus(ratio(26, 3)).scale(&choose(m1, 3))
                - quad_plus(ratio(4, 3)).scale(&rat(m1 * m2 + 4 * m2 - m3));
            let mut s_quartic = Poly::zero();
            let mut s_linear = Rat::zero();
            for (index, an, ad, bn, bd, cn, cd) in W6_I4 {
                let weight = m_weight(index, 6, rho);
                if weight.is_zero() {
                    continue;
                }
                s_quartic =
                    &s_quartic + &quartic(&ratio(*an, *ad), &ratio(*bn, *bd)).scale(&weight);
                s_linear += weight * ratio(*cn, *cd);
            }
            // (z^2 - 1)(2z - 1)
            let cubic = &(Poly::z().pow(2) - Poly::one()) * &(Poly::z().scale_int(2) - Poly::one());
            e(5).scale(&r_poly(5))
                .sub(
                    &e(4)
                        .scale(&(&r_poly(4) * &two_minus_z))
                        .scale_rat(&rat(m1 + 4)),
                )
                .add(&e(3).scale(&(&r_poly(3) * &qa)))
                .sub(&e(2).scale(&(&(&r_poly(2) * &two_minus_z) * &qb)))
                .add(&e(1).scale(&s_quartic))
                .add(&tmp(1, eps, order).scale(&cubic.scale(&s_linear)))
                .scale_rat(&Rat::new(BigInt::one(), factorial(6)))
        }
        _ => {
            check_table_indices(W7_I4.iter().map(|t| t.0.to_vec()).collect(), 4)?;
            check_table_indices(W7_I5.iter().map(|t| t.0.to_vec()).collect(), 5)?;
            let qa = quad_minus(ratio(88, 25)).scale(&rat(5 * (m1 + 2)))
                + quad_minus(ratio(26, 5)).scale(&choose(m1, 2))
                - quad_plus(ratio(16, 5)).scale(&rat(m2));
            let qb = quad_minus(ratio(99, 40)).scale(&rat(10 * (m1 + 1)))
                + quad_minus(ratio(81, 20)).scale(&(choose(m1, 2) * rat(5)))
                + quad_minus(ratio(33, 4)).scale(&choose(m1, 3))
                - quad_plus(ratio(9, 4)).scale(&rat(m1 * m2 + 5 * m2 - m3));
            let mut s4 = Poly::zero();
            for (index, an, ad, bn, bd) in W7_I4 {
                let weight = m_weight(index, 7, rho);
                if weight.is_zero() {
                    continue;
                }
                s4 = &s4 + &quartic(&ratio(*an, *ad), &ratio(*bn, *bd)).scale(&weight);
            }
            let mut s5 = Poly::zero();
            let mut s_linear = Rat::zero();
            for (index, an, ad, bn, bd, cn, cd) in W7_I5 {
                let weight = m_weight(index, 7, rho);
                if weight.is_zero() {
                    continue;
                }
                s5 = &s5 + &quartic(&ratio(*an, *ad), &ratio(*bn, *bd)).scale(&weight);
                s_linear += weight * ratio(*cn, *cd);
            }
            let cubic = &(Poly::z().pow(2) - Poly::one()) * &(Poly::z().scale_int(2) - Poly::one());
            e(6).scale(&r_poly(6))
                .sub(
                    &e(5)
                        .scale(&(&r_poly(5) * &two_minus_z))
                        .scale_rat(&rat(m1 + 5)),
                )
                .add(&e(4).scale(&(&r_poly(4) * &qa)))
                .sub(&e(3).scale(&(&(&r_poly(3) * &two_minus_z) * &qb)))
                .add(&e(2).scale(&(&r_poly(2) * &s4)))
                .add(&e(1).scale(&(&two_minus_z * &s5)))
                .add(&tmp(1, eps, order).scale(&(&two_minus_z * &cubic).scale(&s_linear)))
                .scale_rat(&Rat::new(BigInt::one(), factorial(7)))
        }
    };
    Ok(sum)
}

/// The published Jack generating functions for `|rho| <= 3`, returned as
/// the pair `(D * phi_rho, D)` with a polynomial denominator `D(alpha)`,
/// so that comparisons stay in the polynomial ring.
pub fn jack_phi_fixture_scaled(rho: &Partition, order: usize) -> Option<(TSeries, Poly)> {
    let al = Poly::alpha();
    let one = TSeries::one(order);
    let e_al = TSeries::exp_linear(&al, order);
    let e_2al = TSeries::exp_linear(&al.scale_int(2), order);
    let e_m1 = TSeries::exp_int(-1, order);
    let e_m2 = TSeries::exp_int(-2, order);
    let d2 = &al + &Poly::one(); // alpha + 1
    let d3 = &(&d2 * &(al.scale_int(2) + Poly::one())) * &(&al + &Poly::from_int(2));
    let a_plus_2 = &al + &Poly::from_int(2);
    let two_a_plus_1 = al.scale_int(2) + Poly::one();

    let parts = rho.parts();
    let (series, denom) = match parts {
        [2] => (e_al.sub(&e_m1), d2),
        [1, 1] => (e_al.add(&e_m1.scale(&al)).sub(&one.scale(&d2)), d2),
        [3] => (
            e_2al
                .sub(&e_m1)
                .scale(&a_plus_2)
                .sub(&e_al.sub(&e_m2).scale(&two_a_plus_1)),
            d3,
        ),
        [2, 1] => (
            e_2al
                .add(&e_m1.scale(&al.scale_int(2)))
                .scale(&a_plus_2)
                .sub(
                    &e_al
                        .scale_rat(&rat(2))
                        .add(&e_m2.scale(&al))
                        .scale(&two_a_plus_1),
                ),
            d3,
        ),
        [1, 1, 1] => (
            e_2al
                .sub(&e_m1.scale(&al.pow(2).scale_int(4)))
                .scale(&a_plus_2)
                .sub(
                    &e_al
                        .scale_rat(&rat(4))
                        .sub(&e_m2.scale(&al.pow(2)))
                        .scale(&two_a_plus_1),
                )
                .add(&one.scale(&d3)),
            d3,
        ),
        _ => return None,
    };
    Some((series, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn phi_power_sum_examples() {
        let mut table = ReducedTable::new(Family::P);
        // phi_(2) = sinh t
        let s = phi_series(&mut table, &p(&[2]), 6);
        assert_eq!(s.coeff(1), Poly::one());
        assert_eq!(s.coeff(3), Poly::constant(ratio(1, 6)));
        assert_eq!(s.coeff(5), Poly::constant(ratio(1, 120)));
        assert!(s.coeff(0).is_zero() && s.coeff(2).is_zero() && s.coeff(4).is_zero());
        // phi_(1,1) = cosh t - 1
        let s = phi_series(&mut table, &p(&[1, 1]), 5);
        assert_eq!(s.coeff(2), Poly::constant(ratio(1, 2)));
        assert_eq!(s.coeff(4), Poly::constant(ratio(1, 24)));
        assert!(s.coeff(0).is_zero() && s.coeff(1).is_zero() && s.coeff(3).is_zero());
    }

    #[test]
    fn closed_form_matches_recurrence_small() {
        let mut table = ReducedTable::new(Family::P);
        for w in 2..=6u64 {
            for rho in partitions_of(w) {
                let series = phi_series(&mut table, &rho, 9);
                let closed = phi_closed_form_z1(&rho, 9, false).unwrap();
                assert_eq!(series, closed, "rho = {rho}");
            }
        }
        // phi_rho is divisible by t^(|rho| - l(rho)); for (3,2,1) the weight
        // bound |rho| + l(rho) <= k + 2 pushes the first nonzero term to k = 7
        let closed = phi_closed_form_z1(&p(&[3, 2, 1]), 9, false).unwrap();
        for k in 0..7 {
            assert!(closed.coeff(k).is_zero(), "k = {k}");
        }
        assert!(!closed.coeff(7).is_zero());
    }

    #[test]
    fn degenerate_weights_need_the_convention_flag() {
        assert!(phi_closed_form_z1(&p(&[1]), 5, false).is_err());
        assert_eq!(
            phi_closed_form_z1(&p(&[1]), 5, true).unwrap(),
            TSeries::one(5)
        );
        assert_eq!(
            phi_closed_form_z1(&Partition::empty(), 5, true).unwrap(),
            TSeries::zero(5)
        );
    }

    #[test]
    fn parity_invariant() {
        for family in [Family::P, Family::H, Family::Hl] {
            let mut table = ReducedTable::new(family);
            for w in 2..=6u64 {
                for rho in partitions_of(w) {
                    let series = GenFunSeries::new(&mut table, &rho, 9);
                    assert!(series.check_parity(), "{family:?} rho = {rho}");
                }
            }
        }
    }

    #[test]
    fn index_families() {
        assert_eq!(index_family(0), vec![vec![0]]);
        assert_eq!(index_family(1), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(index_family(2).len(), 4);
        assert_eq!(index_family(4).len(), 12);
        assert_eq!(index_family(5).len(), 19);
    }

    #[test]
    fn fixtures_match_recurrence_small_weights() {
        let mut table = ReducedTable::new(Family::Hl);
        for w in 2..=5u64 {
            for rho in partitions_of(w) {
                let series = phi_series(&mut table, &rho, 9);
                let fixture = hl_phi_display(&rho, 9).unwrap();
                assert_eq!(series, fixture, "rho = {rho}");
            }
        }
        assert!(hl_phi_display(&p(&[1]), 5).is_err());
        assert!(hl_phi_display(&p(&[4, 4]), 5).is_err());
    }

    #[test]
    fn fixture_weight_six_includes_t_component() {
        let mut table = ReducedTable::new(Family::Hl);
        let rho = p(&[2, 2, 2]);
        let series = phi_series(&mut table, &rho, 9);
        let fixture = hl_phi_display(&rho, 9).unwrap();
        assert_eq!(series, fixture);
    }

    #[test]
    fn psi_hooks_at_z1() {
        let mut table = ReducedTable::new(Family::P);
        for w in 1..=5u64 {
            for lam in partitions_of(w) {
                let psi = psi_series(&mut table, &lam, 9).unwrap();
                let is_hook = lam.length() <= 1 || lam.parts()[1] == 1;
                if is_hook {
                    let arm = lam.parts()[0];
                    let leg = lam.length() as u32 - 1;
                    assert_eq!(psi, psi_hook_closed_form_z1(arm, leg, 9), "lambda = {lam}");
                } else {
                    assert!(psi.is_zero(), "lambda = {lam}");
                }
            }
        }
    }

    #[test]
    fn psi_conjugation_symmetry_hl() {
        // psi_{rho'}(t) = psi_rho(-t) for the Hall-Littlewood family.
        let mut table = ReducedTable::new(Family::Hl);
        for w in 1..=5u64 {
            for lam in partitions_of(w) {
                let psi = psi_series(&mut table, &lam, 8).unwrap();
                let conj = psi_series(&mut table, &lam.conjugate(), 8).unwrap();
                assert_eq!(conj, psi.negate_t(), "lambda = {lam}");
            }
        }
    }

    #[test]
    fn jack_fixture_small() {
        let mut table = ReducedTable::new(Family::JackP);
        for rho in [p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])] {
            let (scaled, denom) = jack_phi_fixture_scaled(&rho, 8).unwrap();
            let phi = phi_series(&mut table, &rho, 8);
            assert_eq!(phi.scale(&denom), scaled, "rho = {rho}");
        }
        assert!(jack_phi_fixture_scaled(&p(&[4]), 5).is_none());
    }

    #[test]
    fn jack_phi_2_series_values() {
        let mut table = ReducedTable::new(Family::JackP);
        let s = phi_series(&mut table, &p(&[2]), 4);
        assert_eq!(s.coeff(1), Poly::one());
        assert_eq!(
            s.coeff(2),
            (Poly::alpha() - Poly::one()).scale(&ratio(1, 2))
        );
        let expect = Poly::alpha().pow(2) - Poly::alpha() + Poly::one();
        assert_eq!(s.coeff(3), expect.scale(&ratio(1, 6)));
        assert_eq!(s.coeff(3).degree(Var::Alpha), 2);
    }

    #[test]
    fn r_polys() {
        assert_eq!(r_poly(1), Poly::one());
        assert_eq!(r_poly(2), Poly::from_int(2) - Poly::z());
        // R_3 = (3 - z)(3 - 2z)/2
        let want = (&(Poly::from_int(3) - Poly::z())
            * &(Poly::from_int(3) - Poly::z().scale_int(2)))
            .scale(&ratio(1, 2));
        assert_eq!(r_poly(3), want);
        assert_eq!(r_poly(5).eval(Some(&rat(1)), None).unwrap(), rat(1));
    }
}
