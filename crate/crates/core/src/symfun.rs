//! The supported symmetric functions and their expansions in the power-sum
//! basis, plus evaluation on content alphabets.
//!
//! The power-sum route here is independent of the group-algebra route in
//! [`crate::oracle`]: content evaluations feed the central-character
//! identity checks, while the oracle works with explicit permutations.

use crate::character::{content_power_sum, mn_character};
use crate::error::Error;
use crate::partition::{partitions_of, Partition};
use crate::poly::{binomial_u, Poly, Rat, Var};
use crate::Result;
use num_traits::One;
use std::collections::BTreeMap;

/// A symmetric function from the supported families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymFun {
    /// Elementary `e_k`.
    E(u32),
    /// Power sum `p_k` (with the convention `p_0 = card`).
    P(u32),
    /// Complete homogeneous `h_k`.
    H(u32),
    /// One-row Hall-Littlewood `P_k(z)`.
    Hl(u32),
    /// Hook Schur function `s_(arm, 1^leg)` with `arm >= 1`.
    Hook { arm: u32, leg: u32 },
    /// Product `h_k e_l`.
    He { k: u32, l: u32 },
    /// Monomial partial sum `p_{k,l} = sum_{|lambda|=k, l(lambda)=l} m_lambda`.
    Pkl { k: u32, l: u32 },
    /// Product `e_1 e_k`.
    E1E(u32),
}

impl SymFun {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SymFun::Hook { arm: 0, .. } => {
                Err(Error::invalid("hook Schur function requires arm >= 1"))
            }
            SymFun::He { k, l } if k == 0 || l == 0 => {
                Err(Error::invalid("h_k e_l requires k, l >= 1"))
            }
            SymFun::Pkl { k, l } if l == 0 || l > k => {
                Err(Error::invalid("p_{k,l} requires 1 <= l <= k"))
            }
            _ => Ok(()),
        }
    }

    /// Total degree of the function.
    pub fn degree(&self) -> u32 {
        match *self {
            SymFun::E(k) | SymFun::P(k) | SymFun::H(k) | SymFun::Hl(k) => k,
            SymFun::Hook { arm, leg } => arm + leg,
            SymFun::He { k, l } => k + l,
            SymFun::Pkl { k, .. } => k,
            SymFun::E1E(k) => k + 1,
        }
    }
}

impl std::fmt::Display for SymFun {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            SymFun::E(k) => write!(f, "e_{k}"),
            SymFun::P(k) => write!(f, "p_{k}"),
            SymFun::H(k) => write!(f, "h_{k}"),
            SymFun::Hl(k) => write!(f, "hl_{k}"),
            SymFun::Hook { arm, leg } => write!(f, "hook({arm},{leg})"),
            SymFun::He { k, l } => write!(f, "h_{k}e_{l}"),
            SymFun::Pkl { k, l } => write!(f, "p_({k},{l})"),
            SymFun::E1E(k) => write!(f, "e_1e_{k}"),
        }
    }
}

/// A symmetric function written in the power-sum basis:
/// `sum_mu coeff_mu p_mu`, the empty partition indexing the constant term.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PowerSumExpansion {
    coeffs: BTreeMap<Partition, Poly>,
}

impl PowerSumExpansion {
    pub fn zero() -> Self {
        PowerSumExpansion::default()
    }

    pub fn one() -> Self {
        PowerSumExpansion::single_term(Partition::empty(), Poly::one())
    }

    /// The bare power sum `p_k`, `k >= 1`.
    pub fn power_sum(k: u32) -> Self {
        assert!(
            k >= 1,
            "p_0 is handled as a convention, not a basis element"
        );
        PowerSumExpansion::single_term(Partition::new(vec![k]), Poly::one())
    }

    pub fn single_term(mu: Partition, coeff: Poly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(mu, coeff);
        }
        PowerSumExpansion { coeffs }
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Poly> {
        &self.coeffs
    }

    fn insert(&mut self, mu: Partition, coeff: Poly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(mu) {
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

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &rhs.coeffs {
            out.insert(mu.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> Self {
        if c.is_zero() {
            return PowerSumExpansion::zero();
        }
        PowerSumExpansion {
            coeffs: self
                .coeffs
                .iter()
                .map(|(mu, v)| (mu.clone(), v * c))
                .collect(),
        }
    }

    /// Product, using `p_mu p_nu = p_{mu u nu}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = PowerSumExpansion::zero();
        for (mu, a) in &self.coeffs {
            for (nu, b) in &rhs.coeffs {
                out.insert(mu.add_parts(nu.parts()), a * b);
            }
        }
        out
    }

    /// Substitutes a rational value for `z` or `alpha` in every coefficient.
    pub fn subst(&self, var: Var, value: &Rat) -> Self {
        let mut out = PowerSumExpansion::zero();
        for (mu, c) in &self.coeffs {
            out.insert(mu.clone(), c.subst(var, value));
        }
        out
    }

    /// Evaluates with `p_r` mapped through the given specialization.
    pub fn eval_each_part(&self, value_of_p: impl Fn(u32) -> Rat) -> Poly {
        let mut total = Poly::zero();
        for (mu, c) in &self.coeffs {
            let mut factor = Rat::one();
            for &part in mu.parts() {
                factor *= value_of_p(part);
            }
            total = &total + &c.scale(&factor);
        }
        total
    }

    /// Evaluates on the content alphabet of `lambda`, mapping `p_r` to
    /// `p_r(A_lambda)`.
    pub fn eval_contents(&self, lambda: &Partition) -> Poly {
        self.eval_each_part(|r| Rat::from_integer(content_power_sum(lambda, r)))
    }
}

/// `e_k` in the power-sum basis via the Newton recurrence
/// `k e_k = sum_{i<=k} (-1)^(i-1) p_i e_{k-i}`.
pub fn e_expansion(k: u32) -> PowerSumExpansion {
    let mut table = vec![PowerSumExpansion::one()];
    for m in 1..=k {
        let mut acc = PowerSumExpansion::zero();
        for i in 1..=m {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let term = table[(m - i) as usize]
                .mul(&PowerSumExpansion::power_sum(i))
                .scale(&Poly::from_int(sign));
            acc = acc.add(&term);
        }
        table.push(acc.scale(&Poly::constant(Rat::new(1.into(), m.into()))));
    }
    table.pop().expect("table is nonempty")
}

/// `h_k` in the power-sum basis via `k h_k = sum_{i<=k} p_i h_{k-i}`.
pub fn h_expansion(k: u32) -> PowerSumExpansion {
    let mut table = vec![PowerSumExpansion::one()];
    for m in 1..=k {
        let mut acc = PowerSumExpansion::zero();
        for i in 1..=m {
            acc = acc.add(&table[(m - i) as usize].mul(&PowerSumExpansion::power_sum(i)));
        }
        table.push(acc.scale(&Poly::constant(Rat::new(1.into(), m.into()))));
    }
    table.pop().expect("table is nonempty")
}

/// One-row Hall-Littlewood `P_k(z) = sum_{mu |- k} z_mu^{-1}
/// [prod_i (1 - z^(mu_i)) / (1 - z)] p_mu`. The bracket is an exact
/// polynomial division, never a rational function.
pub fn hl_expansion(k: u32) -> PowerSumExpansion {
    if k == 0 {
        return PowerSumExpansion::one();
    }
    let one_minus_z = Poly::one() - Poly::z();
    let mut out = PowerSumExpansion::zero();
    for mu in partitions_of(k as u64) {
        let mut num = Poly::one();
        for &part in mu.parts() {
            num = &num * &(Poly::one() - Poly::z().pow(part));
        }
        let bracket = num
            .div_exact_z(&one_minus_z)
            .expect("each factor 1 - z^m is divisible by 1 - z");
        let coeff = bracket.scale(&Rat::new(1.into(), mu.z_order()));
        out = out.add(&PowerSumExpansion::single_term(mu, coeff));
    }
    out
}

/// Hook Schur function `s_(arm, 1^leg)` via the Frobenius formula
/// `s_lambda = sum_mu z_mu^{-1} chi^lambda_mu p_mu`.
pub fn hook_schur_expansion(arm: u32, leg: u32) -> Result<PowerSumExpansion> {
    if arm == 0 {
        return Err(Error::invalid("hook Schur function requires arm >= 1"));
    }
    let mut shape = vec![arm];
    shape.extend(std::iter::repeat_n(1, leg as usize));
    let lambda = Partition::new(shape);
    let mut out = PowerSumExpansion::zero();
    for mu in partitions_of((arm + leg) as u64) {
        let chi = mn_character(&lambda, &mu)?;
        let coeff = Poly::constant(Rat::new(chi, mu.z_order()));
        out = out.add(&PowerSumExpansion::single_term(mu, coeff));
    }
    Ok(out)
}

/// `h_k e_l`, with the conventions `h_0 = e_0 = 1`.
pub fn he_expansion_sf(k: u32, l: u32) -> PowerSumExpansion {
    h_expansion(k).mul(&e_expansion(l))
}

/// `p_{k,l} = sum_{a+b=k} (-1)^(b-l) binom(b,l) h_a e_b`.
pub fn pkl_expansion_sf(k: u32, l: u32) -> Result<PowerSumExpansion> {
    if l == 0 || l > k {
        return Err(Error::invalid("p_{k,l} requires 1 <= l <= k"));
    }
    let mut out = PowerSumExpansion::zero();
    for b in l..=k {
        let a = k - b;
        let sign = if (b - l).is_multiple_of(2) { 1 } else { -1 };
        let coeff = Poly::constant(Rat::from_integer(sign * binomial_u(b as u64, l as u64)));
        out = out.add(&he_expansion_sf(a, b).scale(&coeff));
    }
    Ok(out)
}

/// The power-sum expansion of any supported symmetric function.
///
/// `SymFun::P(0)` has no power-sum expansion (it is the cardinality
/// convention) and is rejected here; [`content_eval`] and the oracle handle
/// it directly.
pub fn power_sum_expansion(f: &SymFun) -> Result<PowerSumExpansion> {
    f.validate()?;
    Ok(match *f {
        SymFun::E(k) => e_expansion(k),
        SymFun::P(0) => return Err(Error::invalid("p_0 is a convention, not a basis element")),
        SymFun::P(k) => PowerSumExpansion::power_sum(k),
        SymFun::H(k) => h_expansion(k),
        SymFun::Hl(k) => hl_expansion(k),
        SymFun::Hook { arm, leg } => hook_schur_expansion(arm, leg)?,
        SymFun::He { k, l } => he_expansion_sf(k, l),
        SymFun::Pkl { k, l } => pkl_expansion_sf(k, l)?,
        SymFun::E1E(k) => e_expansion(1).mul(&e_expansion(k)),
    })
}

/// `f(A_lambda)` as an exact polynomial in `z` (and `alpha` where present).
pub fn content_eval(f: &SymFun, lambda: &Partition) -> Result<Poly> {
    if let SymFun::P(0) = f {
        return Ok(Poly::from_int(lambda.weight() as i64));
    }
    Ok(power_sum_expansion(f)?.eval_contents(lambda))
}
