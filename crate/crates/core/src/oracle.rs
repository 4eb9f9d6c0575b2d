//! Brute-force ground truth: symmetric functions evaluated at the explicit
//! Jucys-Murphy elements of `C[S_n]`, with class-expansion readout. This
//! route never touches the reduced recurrences, so agreement between the
//! two is a genuine end-to-end check.

use crate::algebra::{jm_element, AlgebraElement};
use crate::character::mn_character;
use crate::engine::ClassExpansion;
use crate::error::Error;
use crate::partition::{partitions_of, Partition};
use crate::poly::{binomial_u, Poly, Rat};
use crate::symfun::SymFun;
use crate::Result;
use std::collections::BTreeMap;

/// Largest `n` accepted without `force`: central elements in `S_8` are the
/// practical limit for sparse-map convolution.
pub const ORACLE_GUARD: usize = 8;

/// `f(J_1, ..., J_n)` as an explicit element of `C[S_n]`.
pub fn evaluate(f: &SymFun, n: usize) -> Result<AlgebraElement> {
    evaluate_with_guard(f, n, false)
}

pub fn evaluate_with_guard(f: &SymFun, n: usize, force: bool) -> Result<AlgebraElement> {
    if n == 0 {
        return Err(Error::invalid("the oracle needs n >= 1"));
    }
    if n > ORACLE_GUARD && !force {
        return Err(Error::SizeGuard {
            n,
            limit: ORACLE_GUARD,
        });
    }
    f.validate()?;
    let mut ctx = OracleContext::new(n);
    ctx.evaluate(f)
}

/// Shared per-`n` cache of power-sum evaluations, reused across the terms
/// of one symmetric function.
struct OracleContext {
    n: usize,
    power_sums: BTreeMap<u32, AlgebraElement>,
    power_monomials: BTreeMap<Partition, AlgebraElement>,
}

impl OracleContext {
    fn new(n: usize) -> Self {
        OracleContext {
            n,
            power_sums: BTreeMap::new(),
            power_monomials: BTreeMap::new(),
        }
    }

    fn evaluate(&mut self, f: &SymFun) -> Result<AlgebraElement> {
        match *f {
            SymFun::P(0) => Ok(AlgebraElement::one(self.n).scale(&Poly::from_int(self.n as i64))),
            SymFun::P(k) => self.power_sum(k),
            SymFun::E(k) => self.elementary(k),
            SymFun::H(k) => self.complete(k),
            SymFun::Hl(k) => self.hall_littlewood(k),
            SymFun::Hook { arm, leg } => self.hook(arm, leg),
            SymFun::He { k, l } => {
                let h = self.complete(k)?;
                let e = self.elementary(l)?;
                h.mul(&e)
            }
            SymFun::E1E(k) => {
                let e1 = self.elementary(1)?;
                let ek = self.elementary(k)?;
                e1.mul(&ek)
            }
            SymFun::Pkl { k, l } => {
                let mut acc = AlgebraElement::zero(self.n);
                for b in l..=k {
                    let a = k - b;
                    let sign: i64 = if (b - l) % 2 == 0 { 1 } else { -1 };
                    let coeff = Rat::from_integer(sign * binomial_u(b as u64, l as u64));
                    // h_0 e_b = e_b
                    let part = if a == 0 {
                        self.elementary(b)?
                    } else {
                        self.complete(a)?.mul(&self.elementary(b)?)?
                    };
                    acc = acc.add(&part.scale(&Poly::constant(coeff)))?;
                }
                Ok(acc)
            }
        }
    }

    /// `p_k(J) = sum_i J_i^k`, each power by repeated sparse products.
    fn power_sum(&mut self, k: u32) -> Result<AlgebraElement> {
        if let Some(cached) = self.power_sums.get(&k) {
            return Ok(cached.clone());
        }
        let mut total = AlgebraElement::zero(self.n);
        for i in 1..=self.n {
            let j = jm_element(i, self.n)?;
            total = total.add(&j.pow(k)?)?;
        }
        self.power_sums.insert(k, total.clone());
        Ok(total)
    }

    /// `p_mu(J) = prod_i p_{mu_i}(J)`.
    fn power_monomial(&mut self, mu: &Partition) -> Result<AlgebraElement> {
        if let Some(cached) = self.power_monomials.get(mu) {
            return Ok(cached.clone());
        }
        let mut acc = AlgebraElement::one(self.n);
        for &part in mu.parts() {
            acc = acc.mul(&self.power_sum(part)?)?;
        }
        self.power_monomials.insert(mu.clone(), acc.clone());
        Ok(acc)
    }

    /// Newton recurrence `k e_k = sum_{i<=k} (-1)^(i-1) p_i e_{k-i}`; valid
    /// verbatim because the `J_i` commute.
    fn elementary(&mut self, k: u32) -> Result<AlgebraElement> {
        let mut table = vec![AlgebraElement::one(self.n)];
        for m in 1..=k {
            let mut acc = AlgebraElement::zero(self.n);
            for i in 1..=m {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                let prod = self.power_sum(i)?.mul(&table[(m - i) as usize])?;
                acc = acc.add(&prod.scale(&Poly::from_int(sign)))?;
            }
            table.push(acc.scale(&Poly::constant(Rat::new(1.into(), m.into()))));
        }
        Ok(table.pop().expect("nonempty"))
    }

    /// Newton recurrence `k h_k = sum_{i<=k} p_i h_{k-i}`.
    fn complete(&mut self, k: u32) -> Result<AlgebraElement> {
        let mut table = vec![AlgebraElement::one(self.n)];
        for m in 1..=k {
            let mut acc = AlgebraElement::zero(self.n);
            for i in 1..=m {
                acc = acc.add(&self.power_sum(i)?.mul(&table[(m - i) as usize])?)?;
            }
            table.push(acc.scale(&Poly::constant(Rat::new(1.into(), m.into()))));
        }
        Ok(table.pop().expect("nonempty"))
    }

    /// `P_k(z) = sum_{mu |- k} z_mu^{-1} [prod (1 - z^(mu_i)) / (1-z)] p_mu(J)`
    /// with the bracket expanded by exact polynomial division.
    fn hall_littlewood(&mut self, k: u32) -> Result<AlgebraElement> {
        if k == 0 {
            return Ok(AlgebraElement::one(self.n));
        }
        let one_minus_z = Poly::one() - Poly::z();
        let mut acc = AlgebraElement::zero(self.n);
        for mu in partitions_of(k as u64) {
            let mut num = Poly::one();
            for &part in mu.parts() {
                num = &num * &(Poly::one() - Poly::z().pow(part));
            }
            let bracket = num.div_exact_z(&one_minus_z).expect("divisible by 1 - z");
            let coeff = bracket.scale(&Rat::new(1.into(), mu.z_order()));
            acc = acc.add(&self.power_monomial(&mu)?.scale(&coeff))?;
        }
        Ok(acc)
    }

    /// Hook Schur function via Frobenius:
    /// `s_(a,1^b)(J) = sum_mu z_mu^{-1} chi^(a,1^b)_mu p_mu(J)`.
    fn hook(&mut self, arm: u32, leg: u32) -> Result<AlgebraElement> {
        let mut shape = vec![arm];
        shape.extend(std::iter::repeat_n(1, leg as usize));
        let lambda = Partition::new(shape);
        let mut acc = AlgebraElement::zero(self.n);
        for mu in partitions_of((arm + leg) as u64) {
            let chi = mn_character(&lambda, &mu)?;
            if chi == 0.into() {
                continue;
            }
            let coeff = Poly::constant(Rat::new(chi, mu.z_order()));
            acc = acc.add(&self.power_monomial(&mu)?.scale(&coeff))?;
        }
        Ok(acc)
    }
}

/// Class expansion of `f(J_1, ..., J_n)` read from the group algebra.
pub fn oracle_expansion(f: &SymFun, n: usize) -> Result<ClassExpansion> {
    oracle_expansion_with_guard(f, n, false)
}

pub fn oracle_expansion_with_guard(f: &SymFun, n: usize, force: bool) -> Result<ClassExpansion> {
    let element = evaluate_with_guard(f, n, force)?;
    let coeffs = element.class_expand()?;
    Ok(ClassExpansion::new(format!("oracle:{f}"), n as u64, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Var};
    use num_traits::One;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn p1_is_the_sum_of_all_transpositions() {
        for n in 2..=5usize {
            let exp = oracle_expansion(&SymFun::P(1), n).unwrap();
            let mu = p(&[2]).pad(n as u64).unwrap();
            assert_eq!(exp.coeff(&mu), Poly::one());
            assert_eq!(exp.coeffs().len(), 1);
        }
    }

    #[test]
    fn h2_in_s3() {
        let exp = oracle_expansion(&SymFun::H(2), 3).unwrap();
        assert_eq!(exp.coeff(&p(&[1, 1, 1])), Poly::from_int(3));
        assert_eq!(exp.coeff(&p(&[3])), Poly::from_int(2));
        assert_eq!(exp.coeffs().len(), 2);
    }

    #[test]
    fn h3_in_s3() {
        let exp = oracle_expansion(&SymFun::H(3), 3).unwrap();
        assert_eq!(exp.coeff(&p(&[2, 1])), Poly::from_int(5));
        assert_eq!(exp.coeffs().len(), 1);
    }

    #[test]
    fn e2_in_s4_is_jucys() {
        let exp = oracle_expansion(&SymFun::E(2), 4).unwrap();
        assert_eq!(exp.coeff(&p(&[3, 1])), Poly::one());
        assert_eq!(exp.coeff(&p(&[2, 2])), Poly::one());
        assert_eq!(exp.coeffs().len(), 2);
    }

    #[test]
    fn e3_in_s5_supported_on_length_two() {
        let exp = oracle_expansion(&SymFun::E(3), 5).unwrap();
        for (mu, c) in exp.coeffs() {
            assert_eq!(mu.length(), 2);
            assert_eq!(*c, Poly::one());
        }
        assert_eq!(exp.coeffs().len(), 2); // (4,1) and (3,2)
    }

    #[test]
    fn p2_in_s4() {
        let exp = oracle_expansion(&SymFun::P(2), 4).unwrap();
        assert_eq!(exp.coeff(&p(&[3, 1])), Poly::one());
        assert_eq!(exp.coeff(&p(&[1, 1, 1, 1])), Poly::from_int(6));
        assert_eq!(exp.coeffs().len(), 2);
    }

    #[test]
    fn hl1_is_p1_independent_of_z() {
        let exp = oracle_expansion(&SymFun::Hl(1), 4).unwrap();
        assert_eq!(exp.coeff(&p(&[2, 1, 1])), Poly::one());
        assert_eq!(exp.coeffs().len(), 1);
    }

    #[test]
    fn hl_interpolates() {
        for k in 1..=5u32 {
            for n in 2..=6usize {
                let hl = evaluate(&SymFun::Hl(k), n).unwrap();
                let h = evaluate(&SymFun::H(k), n).unwrap();
                let pk = evaluate(&SymFun::P(k), n).unwrap();
                let at = |x: &AlgebraElement, v: i64| -> AlgebraElement {
                    let mut out = AlgebraElement::zero(n);
                    for (perm, c) in x.terms() {
                        out = out
                            .add(&AlgebraElement::from_term(
                                perm.clone(),
                                c.subst(Var::Z, &rat(v)),
                            ))
                            .unwrap();
                    }
                    out
                };
                assert_eq!(at(&hl, 0), h, "z = 0, k = {k}, n = {n}");
                assert_eq!(at(&hl, 1), pk, "z = 1, k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn hook_ends() {
        for k in 1..=4u32 {
            for n in 2..=5usize {
                assert_eq!(
                    evaluate(&SymFun::Hook { arm: k, leg: 0 }, n).unwrap(),
                    evaluate(&SymFun::H(k), n).unwrap()
                );
                assert_eq!(
                    evaluate(&SymFun::Hook { arm: 1, leg: k - 1 }, n).unwrap(),
                    evaluate(&SymFun::E(k), n).unwrap()
                );
            }
        }
    }

    #[test]
    fn pieri_cross_check() {
        for n in 2..=6usize {
            for k in 1..=4u32 {
                for l in 1..=(5 - k) {
                    let he = evaluate(&SymFun::He { k, l }, n).unwrap();
                    let hooks = evaluate(&SymFun::Hook { arm: k, leg: l }, n)
                        .unwrap()
                        .add(
                            &evaluate(
                                &SymFun::Hook {
                                    arm: k + 1,
                                    leg: l - 1,
                                },
                                n,
                            )
                            .unwrap(),
                        )
                        .unwrap();
                    assert_eq!(he, hooks, "k = {k}, l = {l}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn pkl_identities_on_elements() {
        for n in 2..=5usize {
            for k in 1..=4u32 {
                assert_eq!(
                    evaluate(&SymFun::Pkl { k, l: 1 }, n).unwrap(),
                    evaluate(&SymFun::P(k), n).unwrap()
                );
                assert_eq!(
                    evaluate(&SymFun::Pkl { k, l: k }, n).unwrap(),
                    evaluate(&SymFun::E(k), n).unwrap()
                );
                let mut sum = AlgebraElement::zero(n);
                for l in 1..=k {
                    sum = sum
                        .add(&evaluate(&SymFun::Pkl { k, l }, n).unwrap())
                        .unwrap();
                }
                assert_eq!(sum, evaluate(&SymFun::H(k), n).unwrap(), "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn character_identity_against_oracle() {
        use crate::character::theta_cached;
        use crate::symfun::content_eval;
        let specs = [
            SymFun::P(3),
            SymFun::H(3),
            SymFun::E(2),
            SymFun::Hl(2),
            SymFun::Hook { arm: 2, leg: 1 },
            SymFun::He { k: 2, l: 1 },
            SymFun::Pkl { k: 3, l: 2 },
            SymFun::E1E(2),
        ];
        for n in 2..=5usize {
            for f in &specs {
                let exp = oracle_expansion(f, n).unwrap();
                for lam in partitions_of(n as u64) {
                    let mut rhs = Poly::zero();
                    for (mu, c) in exp.coeffs() {
                        rhs = &rhs + &c.scale(&theta_cached(&lam, mu).unwrap());
                    }
                    assert_eq!(
                        rhs,
                        content_eval(f, &lam).unwrap(),
                        "f = {f}, lambda = {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn guard_rail() {
        assert!(matches!(
            evaluate(&SymFun::P(1), 9),
            Err(Error::SizeGuard { .. })
        ));
        assert!(evaluate(&SymFun::P(1), 0).is_err());
    }

    #[test]
    fn zero_and_constants() {
        let p0 = evaluate(&SymFun::P(0), 4).unwrap();
        let exp = p0.class_expand().unwrap();
        assert_eq!(exp[&p(&[1, 1, 1, 1])], Poly::from_int(4));
        let h0 = evaluate(&SymFun::H(0), 3).unwrap();
        assert!(h0.coeff(&crate::perm::Perm::identity(3)).as_constant() == Some(Rat::one()));
    }
}
