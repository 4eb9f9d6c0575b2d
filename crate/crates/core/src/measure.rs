//! The transition measure `omega_lambda`: atoms, exact moments `sigma_k`,
//! the content-polynomial identity for its Cauchy transform, and the linear
//! relations between central characters used by the expansion recurrences.

use crate::character::{central_character, content_power_sum};
use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{binomial_u, Rat};
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Discrete probability measure with atoms at `u_i = lambda_i - i + 1` and
/// weights `c_i(lambda) = H_lambda / H_{lambda^(i)}` over the addable
/// corners of `lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMeasure {
    lambda: Partition,
    atoms: Vec<(i64, Rat)>,
}

impl TransitionMeasure {
    /// Computes the measure by hook-product ratios and cross-checks every
    /// weight against the explicit product formula; a mismatch panics.
    pub fn new(lambda: &Partition) -> Self {
        let h = lambda.hook_product();
        let mut atoms = Vec::new();
        for i in lambda.addable_rows() {
            let bigger = lambda
                .add_corner(i)
                .expect("addable row in range")
                .expect("addable row");
            let u = row_coordinate(lambda, i);
            let c = Rat::new(h.clone(), bigger.hook_product());
            debug_assert!(c > Rat::zero());
            assert_eq!(
                c,
                transition_probability_product(lambda, i),
                "transition probability formulas disagree at lambda = {lambda}, i = {i}"
            );
            atoms.push((u, c));
        }
        TransitionMeasure {
            lambda: lambda.clone(),
            atoms,
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// Atoms `(u_i, c_i)` with positions strictly decreasing.
    pub fn atoms(&self) -> &[(i64, Rat)] {
        &self.atoms
    }

    /// Moment `sigma_k = sum_i c_i u_i^k`.
    pub fn moment(&self, k: u32) -> Rat {
        let mut total = Rat::zero();
        for (u, c) in &self.atoms {
            total += c * Rat::from_integer(BigInt::from(*u).pow(k));
        }
        total
    }
}

/// `lambda_i - i + 1` with the convention `lambda_{l+1} = 0` (1-based `i`).
fn row_coordinate(lambda: &Partition, i: usize) -> i64 {
    let part = if i <= lambda.length() {
        lambda.parts()[i - 1] as i64
    } else {
        0
    };
    part - i as i64 + 1
}

/// The explicit product formula for `c_i(lambda)`; zero when the corner
/// does not exist.
fn transition_probability_product(lambda: &Partition, i: usize) -> Rat {
    let l = lambda.length();
    let li = if i <= l {
        lambda.parts()[i - 1] as i64
    } else {
        0
    };
    let mut c = Rat::new(BigInt::one(), BigInt::from(li + l as i64 - i as i64 + 2));
    for j in 1..=l + 1 {
        if j == i {
            continue;
        }
        let lj = if j <= l {
            lambda.parts()[j - 1] as i64
        } else {
            0
        };
        let base = li - lj + j as i64 - i as i64;
        c *= Rat::new(BigInt::from(base + 1), BigInt::from(base));
    }
    c
}

/// `sigma_k(lambda)`.
pub fn moment(lambda: &Partition, k: u32) -> Rat {
    TransitionMeasure::new(lambda).moment(k)
}

/// Closed forms for the first moments: `sigma_0 = 1`, `sigma_1 = 0`,
/// `sigma_2 = n`, `sigma_3 = 2 p_1`, and the degree 4..6 expressions in
/// content power sums. `None` for `k > 6`.
pub fn moment_closed_form(lambda: &Partition, k: u32) -> Option<Rat> {
    let n = lambda.weight();
    let p = |j: u32| content_power_sum(lambda, j);
    let int = Rat::from_integer;
    match k {
        0 => Some(Rat::one()),
        1 => Some(Rat::zero()),
        2 => Some(int(BigInt::from(n))),
        3 => Some(int(2 * p(1))),
        4 => Some(int(3 * p(2) + binomial_u(n + 1, 2))),
        5 => Some(int(4 * p(3) + 2 * BigInt::from(n + 1) * p(1))),
        6 => Some(int(5 * p(4)
            + 3 * BigInt::from(n + 1) * p(2)
            + 2 * p(2)
            + 2 * p(1).pow(2)
            + binomial_u(n + 2, 3))),
        _ => None,
    }
}

/// Content polynomial `C_lambda(x) = prod_{(i,j)} (x + j - i)` evaluated at
/// a rational point.
pub fn content_polynomial_at(lambda: &Partition, x: &Rat) -> Rat {
    let mut acc = Rat::one();
    for c in lambda.contents() {
        acc *= x + Rat::from_integer(BigInt::from(c));
    }
    acc
}

/// Checks the rational-function identity for the Cauchy transform of the
/// transition measure at the point `z0`:
/// `sum_i c_i/(z0 - u_i) = C(-z0)^2 / (z0 C(-z0-1) C(-z0+1))`.
///
/// Exact comparison; `z0` on an atom or on a zero of a denominator content
/// polynomial is reported as a pole error.
pub fn check_moment_series(lambda: &Partition, z0: &Rat) -> Result<bool> {
    let measure = TransitionMeasure::new(lambda);
    if z0.is_zero() {
        return Err(Error::Pole {
            point: z0.to_string(),
            pole: "z = 0".to_string(),
        });
    }
    let mut lhs = Rat::zero();
    for (u, c) in measure.atoms() {
        let den = z0 - Rat::from_integer(BigInt::from(*u));
        if den.is_zero() {
            return Err(Error::Pole {
                point: z0.to_string(),
                pole: format!("atom at {u}"),
            });
        }
        lhs += c / den;
    }
    let c0 = content_polynomial_at(lambda, &-z0.clone());
    let cm = content_polynomial_at(lambda, &(-z0.clone() - Rat::one()));
    let cp = content_polynomial_at(lambda, &(-z0.clone() + Rat::one()));
    if cm.is_zero() || cp.is_zero() {
        return Err(Error::Pole {
            point: z0.to_string(),
            pole: "zero of a shifted content polynomial".to_string(),
        });
    }
    let rhs = &c0 * &c0 / (z0 * cm * cp);
    Ok(lhs == rhs)
}

/// `theta^lambda_nu` with the convention that an invalid surgery result
/// (`nu` absent) contributes zero.
fn theta_or_zero(lambda: &Partition, nu: Option<Partition>) -> Result<Rat> {
    match nu {
        Some(nu) => central_character(lambda, &nu),
        None => Ok(Rat::zero()),
    }
}

/// Left-hand side `sum_i c_i(lambda) u_i^r theta^{lambda^(i)}_mu` of the
/// linear relations, for `mu` of weight `|lambda| + 1`.
pub fn corner_weighted_character_sum(lambda: &Partition, mu: &Partition, r: u32) -> Result<Rat> {
    if mu.weight() != lambda.weight() + 1 {
        return Err(Error::BadTargetWeight {
            expected: lambda.weight() + 1,
            got: mu.weight(),
        });
    }
    let h = lambda.hook_product();
    let mut total = Rat::zero();
    for i in lambda.addable_rows() {
        let bigger = lambda.add_corner(i)?.expect("addable row");
        let c = Rat::new(h.clone(), bigger.hook_product());
        let u = Rat::from_integer(BigInt::from(row_coordinate(lambda, i)).pow(r));
        total += c * u * central_character(&bigger, mu)?;
    }
    Ok(total)
}

/// Verifies one of the three linear relations between central characters
/// (`r = 0, 1, 2`) for `lambda |- n` and `mu |- n + 1`.
pub fn check_theorem4(lambda: &Partition, mu: &Partition, r: u32) -> Result<bool> {
    assert!(r <= 2, "only r = 0, 1, 2 are available");
    let lhs = corner_weighted_character_sum(lambda, mu, r)?;
    let n = lambda.weight();

    let rhs = match r {
        0 => theta_or_zero(lambda, mu.remove_parts(&[1]))?,
        1 => {
            // sum_r r (m_r(mu) + 1) theta^lambda_{mu \ (r+1) u (r)}
            let mut acc = Rat::zero();
            let max = mu.parts().first().copied().unwrap_or(0);
            for s in 1..max {
                let coeff = BigInt::from(s) * BigInt::from(mu.multiplicity(s) + 1);
                let nu = mu.replace_parts(&[s + 1], &[s]);
                acc += Rat::from_integer(coeff) * theta_or_zero(lambda, nu)?;
            }
            acc
        }
        _ => {
            let mut acc =
                Rat::from_integer(BigInt::from(2 * n + 1) - BigInt::from(mu.multiplicity(1)))
                    * theta_or_zero(lambda, mu.remove_parts(&[1]))?;
            let max = mu.parts().first().copied().unwrap_or(0);
            // split a part r+s+1 into (r, s), ordered pairs
            for s in 1..max {
                for t in 1..max {
                    if s + t + 1 > max {
                        continue;
                    }
                    let delta = u32::from(s == t);
                    let coeff = BigInt::from(s)
                        * BigInt::from(t)
                        * BigInt::from(mu.multiplicity(s) + 1)
                        * BigInt::from(mu.multiplicity(t) + delta + 1);
                    let nu = mu.replace_parts(&[s + t + 1], &[s, t]);
                    acc += Rat::from_integer(coeff) * theta_or_zero(lambda, nu)?;
                }
            }
            // merge parts (r, s), both at least 2, into r+s-1
            for s in 2..=max {
                for t in 2..=max {
                    let coeff =
                        BigInt::from(s + t - 1) * BigInt::from(mu.multiplicity(s + t - 1) + 1);
                    let nu = mu.replace_parts(&[s, t], &[s + t - 1]);
                    acc += Rat::from_integer(coeff) * theta_or_zero(lambda, nu)?;
                }
            }
            acc
        }
    };
    Ok(lhs == rhs)
}
