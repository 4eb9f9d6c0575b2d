//! Sparse polynomials in the indeterminates `z` and `alpha` over
//! arbitrary-precision rationals: the coefficient domain of every expansion.
//!
//! `beta = alpha - 1` is deliberately not a stored indeterminate (it would be
//! a redundant relation in the ring); [`Poly::in_beta_basis`] re-expands a
//! polynomial in powers of `alpha - 1` where a comparison in the
//! `(alpha, beta)` basis is needed.

use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// The two indeterminates a [`Poly`] may involve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Z,
    Alpha,
}

/// Exponent vector of a monomial `z^z_exp * alpha^alpha_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub z: u32,
    pub alpha: u32,
}

impl Mono {
    const ONE: Mono = Mono { z: 0, alpha: 0 };
}

/// Sparse polynomial in `z` and `alpha` with rational coefficients. Zero
/// coefficients are never stored; the term map is ordered, so display and
/// serialization are canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(rat(n))
    }

    pub fn z() -> Self {
        Poly::monomial(1, 0, Rat::one())
    }

    pub fn alpha() -> Self {
        Poly::monomial(0, 1, Rat::one())
    }

    pub fn monomial(z: u32, alpha: u32, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono { z, alpha }, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if the polynomial has no `z` or `alpha` term.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::ONE) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn degree(&self, var: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| match var {
                Var::Z => m.z,
                Var::Alpha => m.alpha,
            })
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, mono: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Poly {
        self.scale(&rat(n))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Full evaluation. A binding may be omitted only if the corresponding
    /// indeterminate does not occur.
    pub fn eval(&self, z: Option<&Rat>, alpha: Option<&Rat>) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            if m.z > 0 {
                let z = z.ok_or(Error::MissingBinding("z"))?;
                term *= pow_rat(z, m.z);
            }
            if m.alpha > 0 {
                let alpha = alpha.ok_or(Error::MissingBinding("alpha"))?;
                term *= pow_rat(alpha, m.alpha);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitutes a rational value for one indeterminate, keeping the other.
    pub fn subst(&self, var: Var, value: &Rat) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = match var {
                Var::Z => (
                    m.z,
                    Mono {
                        z: 0,
                        alpha: m.alpha,
                    },
                ),
                Var::Alpha => (m.alpha, Mono { z: m.z, alpha: 0 }),
            };
            out.insert_term(rest, c * pow_rat(value, e));
        }
        out
    }

    /// The coefficient of `var^power` as a polynomial in the remaining
    /// indeterminate.
    pub fn coeff_of(&self, var: Var, power: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = match var {
                Var::Z => (
                    m.z,
                    Mono {
                        z: 0,
                        alpha: m.alpha,
                    },
                ),
                Var::Alpha => (m.alpha, Mono { z: m.z, alpha: 0 }),
            };
            if e == power {
                out.insert_term(rest, c.clone());
            }
        }
        out
    }

    /// Exact division in `Q[alpha][z]` by a divisor whose leading
    /// `z`-coefficient is a nonzero rational constant (such as `1 - z` or
    /// `2 - z`). Returns `None` when the division leaves a remainder.
    pub fn div_exact_z(&self, divisor: &Poly) -> Option<Poly> {
        let d = divisor.degree(Var::Z);
        let lead = divisor.coeff_of(Var::Z, d).as_constant()?;
        if lead.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let rd = rem.degree(Var::Z);
            if rd < d {
                return None;
            }
            let top = rem.coeff_of(Var::Z, rd);
            if top.is_zero() {
                // degree() cannot report a vanishing top coefficient
                unreachable!();
            }
            let factor = top.scale(&(Rat::one() / &lead));
            let shift = Poly::monomial(rd - d, 0, Rat::one());
            let piece = &factor * &shift;
            rem = &rem - &(&piece * divisor);
            quot = &quot + &piece;
            if !rem.is_zero() && rem.degree(Var::Z) >= rd {
                return None;
            }
        }
        Some(quot)
    }

    /// Re-expands in powers of `beta = alpha - 1`: in the result, the alpha
    /// exponent stands for the beta exponent.
    pub fn in_beta_basis(&self) -> Poly {
        let beta_plus_one = &Poly::alpha() + &Poly::one();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let repl = beta_plus_one.pow(m.alpha);
            let piece = Poly::monomial(m.z, 0, c.clone());
            out = &out + &(&piece * &repl);
        }
        out
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

fn pow_rat(base: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(
                    Mono {
                        z: ma.z + mb.z,
                        alpha: ma.alpha + mb.alpha,
                    },
                    ca * cb,
                );
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Human form with descending degree, e.g. `z^2 - 5*z + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;

            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (m.z == 0 && m.alpha == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("z", m.z), ("alpha", m.alpha)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    z: u32,
    alpha: u32,
    num: String,
    den: String,
}

impl Serialize for Poly {
    /// Schema: `{"terms":[{"z":e1,"alpha":e2,"num":"...","den":"..."}]}`
    /// with big integers as decimal strings; term order is canonical.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Terms<'a>(&'a Poly);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.terms.len()))?;
                for (m, c) in &self.0.terms {
                    seq.serialize_element(&TermJson {
                        z: m.z,
                        alpha: m.alpha,
                        num: c.numer().to_string(),
                        den: c.denom().to_string(),
                    })?;
                }
                seq.end()
            }
        }
        let mut s = serializer.serialize_struct("Poly", 1)?;
        s.serialize_field("terms", &Terms(self))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct PolyJson {
            terms: Vec<TermJson>,
        }
        let raw = PolyJson::deserialize(deserializer)?;
        let mut out = Poly::zero();
        for t in raw.terms {
            let num: BigInt = t.num.parse().map_err(serde::de::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(serde::de::Error::custom)?;
            if den.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            out.insert_term(
                Mono {
                    z: t.z,
                    alpha: t.alpha,
                },
                Rat::new(num, den),
            );
        }
        Ok(out)
    }
}

/// Serialization mirror for a bare rational, `{"num":"...","den":"..."}`.
#[derive(Serialize, Deserialize)]
pub struct RatJson {
    pub num: String,
    pub den: String,
}

impl From<&Rat> for RatJson {
    fn from(r: &Rat) -> Self {
        RatJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl TryFrom<RatJson> for Rat {
    type Error = Error;
    fn try_from(j: RatJson) -> Result<Rat> {
        let num: BigInt = j
            .num
            .parse()
            .map_err(|_| Error::invalid(format!("bad numerator {:?}", j.num)))?;
        let den: BigInt = j
            .den
            .parse()
            .map_err(|_| Error::invalid(format!("bad denominator {:?}", j.den)))?;
        if den.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(Rat::new(num, den))
    }
}

/// Binomial coefficient with the convention `binom(n, k) = 0` for
/// `0 <= n < k`. Negative `n` is rejected: it never arises in assembly once
/// out-of-range terms are filtered.
pub fn binomial(n: i64, k: u64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    Ok(binomial_u(n as u64, k))
}

/// Binomial coefficient for nonnegative arguments.
pub fn binomial_u(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zp() -> Poly {
        Poly::z()
    }

    #[test]
    fn product_example() {
        // (2 - z)(z^2 - 7z + 7) = -z^3 + 9z^2 - 21z + 14
        let a = Poly::from_int(2) - zp();
        let b = zp().pow(2) - zp().scale_int(7) + Poly::from_int(7);
        let want =
            -zp().pow(3) + zp().pow(2).scale_int(9) - zp().scale_int(21) + Poly::from_int(14);
        assert_eq!(&a * &b, want);
    }

    #[test]
    fn eval_and_coeff() {
        let p = Poly::from_int(2) - zp();
        assert_eq!(p.eval(Some(&rat(1)), None).unwrap(), rat(1));
        assert!(p.eval(None, None).is_err());

        let q = Poly::one() - zp().pow(2);
        assert_eq!(q.coeff_of(Var::Z, 2), Poly::from_int(-1));
        assert_eq!(q.coeff_of(Var::Z, 0), Poly::one());
        assert_eq!(q.coeff_of(Var::Z, 1), Poly::zero());
    }

    #[test]
    fn mixed_vars() {
        let p = &zp() * &Poly::alpha() + Poly::alpha().pow(2);
        assert_eq!(p.degree(Var::Z), 1);
        assert_eq!(p.degree(Var::Alpha), 2);
        assert_eq!(p.coeff_of(Var::Alpha, 1), zp());
        assert_eq!(
            p.eval(Some(&rat(3)), Some(&rat(2))).unwrap(),
            rat(10) // 3*2 + 4
        );
        assert_eq!(
            p.subst(Var::Z, &rat(3)),
            Poly::alpha().pow(2) + Poly::alpha().scale_int(3)
        );
    }

    #[test]
    fn division_in_z() {
        let prod =
            &(Poly::from_int(2) - zp()) * &(zp().pow(2) - zp().scale_int(7) + Poly::from_int(7));
        let q = prod.div_exact_z(&(Poly::from_int(2) - zp())).unwrap();
        assert_eq!(q, zp().pow(2) - zp().scale_int(7) + Poly::from_int(7));
        assert!(prod.div_exact_z(&(Poly::one() - zp())).is_none());

        // (1 - z^4) / (1 - z) = 1 + z + z^2 + z^3
        let num = Poly::one() - zp().pow(4);
        let geom = num.div_exact_z(&(Poly::one() - zp())).unwrap();
        assert_eq!(geom, Poly::one() + zp() + zp().pow(2) + zp().pow(3));
    }

    #[test]
    fn beta_basis() {
        // alpha + (alpha - 1)^2 in beta basis is beta^2 + beta + 1.
        let p = Poly::alpha() + (Poly::alpha() - Poly::one()).pow(2);
        let b = p.in_beta_basis();
        assert_eq!(b, Poly::alpha().pow(2) + Poly::alpha() + Poly::one());
        assert!(b.has_nonneg_integer_coeffs());
        assert!(!(Poly::alpha() - Poly::from_int(2))
            .in_beta_basis()
            .has_nonneg_integer_coeffs());
    }

    #[test]
    fn display_forms() {
        let p = zp().pow(2) - zp().scale_int(5) + Poly::from_int(5);
        assert_eq!(p.to_string(), "z^2 - 5*z + 5");
        assert_eq!(Poly::zero().to_string(), "0");
        let q = Poly::monomial(1, 2, ratio(-3, 4));
        assert_eq!(q.to_string(), "-3/4*z*alpha^2");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2).unwrap(), BigInt::from(10));
        assert_eq!(binomial(3, 5).unwrap(), BigInt::from(0));
        assert_eq!(binomial(0, 0).unwrap(), BigInt::from(1));
        assert!(binomial(-1, 0).is_err());
    }

    #[test]
    fn json_schema_shape() {
        let p = Poly::from_int(2) - zp();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"z":0,"alpha":0,"num":"2","den":"1"},{"z":1,"alpha":0,"num":"-1","den":"1"}]}"#
        );
    }

    #[test]
    fn rational_json_mirror() {
        let r = ratio(-3, 4);
        let j = RatJson::from(&r);
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, r#"{"num":"-3","den":"4"}"#);
        let back: Rat = serde_json::from_str::<RatJson>(&s)
            .unwrap()
            .try_into()
            .unwrap();
        assert_eq!(back, r);
        let bad: RatJson = serde_json::from_str(r#"{"num":"1","den":"0"}"#).unwrap();
        assert!(Rat::try_from(bad).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(((0u32..4, 0u32..3), -6i64..7, 1i64..5), 0..6).prop_map(|terms| {
            let mut p = Poly::zero();
            for ((z, alpha), num, den) in terms {
                p = p + Poly::monomial(z, alpha, ratio(num, den));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Poly::zero(), a.clone());
            prop_assert_eq!(&a * &Poly::one(), a.clone());
            prop_assert_eq!(&a - &a, Poly::zero());
        }

        #[test]
        fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly(), zn in -5i64..6, an in -5i64..6) {
            let z = rat(zn);
            let alpha = rat(an);
            let ev = |p: &Poly| p.eval(Some(&z), Some(&alpha)).unwrap();
            prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
            prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        }

        #[test]
        fn json_round_trip_is_bit_exact(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: Poly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
        }

        #[test]
        fn beta_basis_round_trips(a in arb_poly()) {
            // Substituting alpha -> alpha + 1 then alpha -> alpha - 1 is the identity.
            let b = a.in_beta_basis();
            let mut back = Poly::zero();
            let alpha_minus_one = Poly::alpha() - Poly::one();
            for (m, c) in b.terms() {
                let piece = Poly::monomial(m.z, 0, c.clone());
                back = &back + &(&piece * &alpha_minus_one.pow(m.alpha));
            }
            prop_assert_eq!(back, a);
        }
    }
}
