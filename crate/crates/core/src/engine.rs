//! The n-independent reduced coefficients `c_rho^(k)` computed by
//! recurrence, their assembly into class expansions `a_mu(n)`, the closed
//! forms for elementary functions, and the derived hook / product families.
//!
//! Each level `k` is computed from level `k - 1` by a sweep over the lowest
//! part of `rho`: partitions with lowest part 1 come from the first
//! recurrence; for lowest part `p > 1` the second recurrence is written at
//! `sigma = rho \ (p) u (p-1)` and solved for `c_rho`, whose coefficient on
//! the left-hand side is `(p-1) m_{p-1}(sigma)`. All other left-hand terms
//! have lowest part `p - 1` and belong to an earlier sweep stage.

use crate::catalan::{catalan_number, gen_catalan, CatalanMethod};
use crate::character::theta_cached;
use crate::error::Error;
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::poly::{binomial_u, rat, Poly, Rat, Var};
use crate::symfun::{content_eval, SymFun};
use crate::Result;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

/// The recurrence families. Derived families (hooks, products, moments) are
/// linear combinations of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Power sums `p_k`; base `c^(0)_(1) = 1`.
    P,
    /// Complete functions `h_k`; base `c^(0)_() = 1`.
    H,
    /// One-row Hall-Littlewood `P_k(z)`; base `c^(0)_() = 1` and the seeded
    /// level `c^(1)_(2) = 1` (the generic relation is valid only from
    /// `k = 2`; at `k = 1` it would contradict `P_1 = p_1`).
    Hl,
    /// Jack power sums; base `c^(0)_(1) = 1`, coefficients in `alpha`.
    JackP,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::P => "p",
            Family::H => "h",
            Family::Hl => "hl",
            Family::JackP => "jack_p",
        }
    }

    fn base_level(&self) -> BTreeMap<Partition, Poly> {
        let mut map = BTreeMap::new();
        match self {
            Family::P | Family::JackP => {
                map.insert(Partition::new(vec![1]), Poly::one());
            }
            Family::H | Family::Hl => {
                map.insert(Partition::empty(), Poly::one());
            }
        }
        map
    }

    /// Safe enumeration bound: one level can raise the maximal weight of the
    /// support by at most 2 (the recurrence reads weights `w-2..=w` of the
    /// previous level), so all candidates fit under `2k +` base weight.
    fn max_weight(&self, k: u32) -> u64 {
        match self {
            Family::P | Family::JackP => 2 * k as u64 + 1,
            Family::H | Family::Hl => 2 * k as u64,
        }
    }
}

/// A table of reduced coefficients `rho -> c_rho^(k)`, one level per `k`.
/// Levels are immutable once computed.
pub struct ReducedTable {
    family: Family,
    levels: Vec<BTreeMap<Partition, Poly>>,
}

impl ReducedTable {
    pub fn new(family: Family) -> Self {
        ReducedTable {
            family,
            levels: vec![family.base_level()],
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The complete level `k`, computing intermediate levels on demand.
    pub fn level(&mut self, k: u32) -> &BTreeMap<Partition, Poly> {
        while self.levels.len() <= k as usize {
            self.grow();
        }
        &self.levels[k as usize]
    }

    /// Single coefficient `c_rho^(k)` (zero when absent).
    pub fn coeff(&mut self, k: u32, rho: &Partition) -> Poly {
        self.level(k).get(rho).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn expansion(&mut self, k: u32) -> ReducedExpansion {
        ReducedExpansion {
            family: self.family.label().to_string(),
            k,
            coeffs: self.level(k).clone(),
        }
    }

    fn grow(&mut self) {
        let k = self.levels.len() as u32;
        if self.family == Family::Hl && k == 1 {
            let mut seeded = BTreeMap::new();
            seeded.insert(Partition::new(vec![2]), Poly::one());
            self.levels.push(seeded);
            return;
        }
        let prev = &self.levels[k as usize - 1];
        let family = self.family;
        let mut cur: BTreeMap<Partition, Poly> = BTreeMap::new();
        let domain = partitions_up_to(family.max_weight(k));

        let prev_get = |rho: &Partition| prev.get(rho).cloned().unwrap_or_else(Poly::zero);

        // Stage 1: lowest part 1.
        for target in domain.iter().filter(|r| r.multiplicity(1) >= 1) {
            let rho = target.remove_parts(&[1]).expect("has a part 1");
            let mut val = lift_sum(&rho, &prev_get);
            if family == Family::JackP {
                val = &val * &Poly::alpha();
            }
            if !val.is_zero() {
                cur.insert(target.clone(), val);
            }
        }

        // Stages p = 2, 3, ...: lowest part exactly p, increasing.
        let mut stages: BTreeMap<u32, Vec<&Partition>> = BTreeMap::new();
        for rho in &domain {
            if let Some(p) = rho.lowest_part() {
                if p >= 2 {
                    stages.entry(p).or_default().push(rho);
                }
            }
        }
        for (p, members) in stages {
            for rho in members {
                let sigma = rho
                    .replace_parts(&[p], &[p - 1])
                    .expect("lowest part p present");
                let mut rhs = family_rhs(family, &sigma, &prev_get);
                // Subtract the already-known left-hand terms (lowest part p-1).
                for r in sigma.distinct_parts() {
                    if r == p - 1 {
                        continue;
                    }
                    let tau = sigma.replace_parts(&[r], &[r + 1]).expect("part r present");
                    let known = cur.get(&tau).cloned().unwrap_or_else(Poly::zero);
                    let coeff = rat((r as i64) * sigma.multiplicity(r) as i64);
                    rhs = &rhs - &known.scale(&coeff);
                }
                let denom = rat(((p - 1) as i64) * sigma.multiplicity(p - 1) as i64);
                let val = rhs.scale(&(Rat::from_integer(1.into()) / denom));
                if !val.is_zero() {
                    cur.insert(rho.clone(), val);
                }
            }
        }
        self.levels.push(cur);
    }
}

/// `sum_r r m_r(rho) c_{rho \ (r) u (r+1)}` with coefficients drawn through
/// `get` (a previous or current level).
fn lift_sum(rho: &Partition, get: &impl Fn(&Partition) -> Poly) -> Poly {
    let mut acc = Poly::zero();
    for r in rho.distinct_parts() {
        let tau = rho.replace_parts(&[r], &[r + 1]).expect("part r present");
        let c = get(&tau);
        if !c.is_zero() {
            acc = &acc + &c.scale(&rat((r as i64) * rho.multiplicity(r) as i64));
        }
    }
    acc
}

/// Family-specific right-hand side of the second recurrence at `sigma`,
/// reading the previous level.
fn family_rhs(family: Family, sigma: &Partition, prev: &impl Fn(&Partition) -> Poly) -> Poly {
    let w = rat(sigma.weight() as i64);
    let m1 = rat(sigma.multiplicity(1) as i64);

    // Split sum: remove parts (r, s), add r+s+1.
    let mut split = Poly::zero();
    for r in sigma.distinct_parts() {
        for s in sigma.distinct_parts() {
            let delta = u32::from(r == s);
            let mult = sigma.multiplicity(r) as i64 * (sigma.multiplicity(s) as i64 - delta as i64);
            if mult == 0 {
                continue;
            }
            let tau = sigma
                .replace_parts(&[r, s], &[r + s + 1])
                .expect("parts present");
            let c = prev(&tau);
            if !c.is_zero() {
                split = &split + &c.scale(&rat(r as i64 * s as i64 * mult));
            }
        }
    }

    // Merge sum: remove part t = r+s-1, add (r, s), over ordered pairs.
    let mut merge = Poly::zero();
    for t in sigma.distinct_parts() {
        let mult = rat(t as i64 * sigma.multiplicity(t) as i64);
        for r in 1..=t {
            let s = t + 1 - r;
            let tau = sigma.replace_parts(&[t], &[r, s]).expect("part t present");
            let c = prev(&tau);
            if !c.is_zero() {
                merge = &merge + &c.scale(&mult);
            }
        }
    }

    let c_sigma = prev(sigma);
    match family {
        Family::P => {
            let mut rhs = c_sigma.scale(&w);
            rhs = &rhs + &split;
            &rhs + &merge
        }
        Family::H => {
            let mut rhs = c_sigma.scale(&(w * rat(2)));
            if sigma.multiplicity(1) > 0 {
                let down = sigma.remove_parts(&[1]).expect("part 1 present");
                rhs = &rhs + &prev(&down).scale(&m1);
            }
            rhs = &rhs + &split;
            &rhs + &merge
        }
        Family::Hl => {
            let two_minus_z = Poly::from_int(2) - Poly::z();
            let one_minus_z = Poly::one() - Poly::z();
            let mut rhs = &c_sigma.scale(&w) * &two_minus_z;
            if sigma.multiplicity(1) > 0 {
                let down = sigma.remove_parts(&[1]).expect("part 1 present");
                rhs = &rhs + &(&prev(&down).scale(&m1) * &one_minus_z);
            }
            rhs = &rhs + &split;
            &rhs + &merge
        }
        Family::JackP => {
            let beta = Poly::alpha() - Poly::one();
            let mut rhs = c_sigma.scale(&w);
            rhs = &rhs + &(&split * &Poly::alpha());
            rhs = &rhs + &merge;
            // beta sum_r r^2 m_r(sigma) c_{sigma \ (r) u (r+1)}
            let mut square = Poly::zero();
            for r in sigma.distinct_parts() {
                let tau = sigma.replace_parts(&[r], &[r + 1]).expect("part r present");
                let c = prev(&tau);
                if !c.is_zero() {
                    square = &square
                        + &c.scale(&rat((r as i64) * (r as i64) * sigma.multiplicity(r) as i64));
                }
            }
            &rhs + &(&square * &beta)
        }
    }
}

/// Reduced expansion: the full map `rho -> c_rho` for one family and degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedExpansion {
    pub family: String,
    pub k: u32,
    pub coeffs: BTreeMap<Partition, Poly>,
}

impl ReducedExpansion {
    pub fn coeff(&self, rho: &Partition) -> Poly {
        self.coeffs.get(rho).cloned().unwrap_or_else(Poly::zero)
    }

    /// Substitutes a value for `z` or `alpha` in every coefficient,
    /// dropping terms that vanish.
    pub fn subst(&self, var: Var, value: &Rat) -> ReducedExpansion {
        let mut coeffs = BTreeMap::new();
        for (rho, c) in &self.coeffs {
            let s = c.subst(var, value);
            if !s.is_zero() {
                coeffs.insert(rho.clone(), s);
            }
        }
        ReducedExpansion {
            family: self.family.clone(),
            k: self.k,
            coeffs,
        }
    }
}

/// Class expansion for a fixed `n`: the map `mu -> a_mu(n)` over `mu |- n`
/// (only nonzero coefficients are stored).
#[derive(Debug, Clone, Eq)]
pub struct ClassExpansion {
    pub label: String,
    pub n: u64,
    coeffs: BTreeMap<Partition, Poly>,
}

impl ClassExpansion {
    pub fn new(label: String, n: u64, coeffs: BTreeMap<Partition, Poly>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        ClassExpansion { label, n, coeffs }
    }

    pub fn coeff(&self, mu: &Partition) -> Poly {
        self.coeffs.get(mu).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Poly> {
        &self.coeffs
    }
}

/// Equality is mathematical: same `n`, same coefficients; labels are
/// presentation only.
impl PartialEq for ClassExpansion {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.coeffs == other.coeffs
    }
}

impl Serialize for ClassExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ClassExpansion", 3)?;
        s.serialize_field("family", &self.label)?;
        s.serialize_field("n", &self.n)?;
        let coeffs: BTreeMap<String, &Poly> = self
            .coeffs
            .iter()
            .map(|(mu, c)| (mu.to_string(), c))
            .collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for ClassExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            family: String,
            n: u64,
            coeffs: BTreeMap<String, Poly>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut coeffs = BTreeMap::new();
        for (key, poly) in raw.coeffs {
            let mu: Partition = key.parse().map_err(serde::de::Error::custom)?;
            coeffs.insert(mu, poly);
        }
        Ok(ClassExpansion::new(raw.family, raw.n, coeffs))
    }
}

impl Serialize for ReducedExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ReducedExpansion", 3)?;
        s.serialize_field("family", &self.family)?;
        s.serialize_field("k", &self.k)?;
        let coeffs: BTreeMap<String, &Poly> = self
            .coeffs
            .iter()
            .map(|(rho, c)| (rho.to_string(), c))
            .collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for ReducedExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            family: String,
            k: u32,
            coeffs: BTreeMap<String, Poly>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut coeffs = BTreeMap::new();
        for (key, poly) in raw.coeffs {
            if poly.is_zero() {
                continue;
            }
            let rho: Partition = key.parse().map_err(serde::de::Error::custom)?;
            coeffs.insert(rho, poly);
        }
        Ok(ReducedExpansion {
            family: raw.family,
            k: raw.k,
            coeffs,
        })
    }
}

/// Reduced coefficients of one family at degree `k` (fresh table; reuse a
/// [`ReducedTable`] for repeated queries).
pub fn reduced_coeffs(family: Family, k: u32) -> ReducedExpansion {
    ReducedTable::new(family).expansion(k)
}

/// Assembles reduced coefficients into the class expansion at weight `n`:
/// `a_mu(n) = sum_{rho-bar = mu-bar} c_rho binom(n - |rho-bar|, m_1(rho))`.
/// Terms with `m_1(rho) > n - |rho-bar|` vanish and are skipped.
pub fn assemble(reduced: &ReducedExpansion, n: u64) -> ClassExpansion {
    let mut coeffs: BTreeMap<Partition, Poly> = BTreeMap::new();
    for (rho, c) in &reduced.coeffs {
        let bar = rho.reduce();
        if bar.weight() > n {
            continue;
        }
        let b = binomial_u(n - bar.weight(), rho.multiplicity(1) as u64);
        if b == 0.into() {
            continue;
        }
        let mu = bar.pad(n).expect("|mu-bar| <= n");
        let add = c.scale(&Rat::from_integer(b));
        let entry = coeffs.entry(mu).or_insert_with(Poly::zero);
        *entry = &*entry + &add;
    }
    ClassExpansion::new(format!("{}_{}", reduced.family, reduced.k), n, coeffs)
}

/// The closed form for elementary functions: `a_mu = 1` exactly on classes
/// with `l(mu) = n - k`. For `k >= n` the expansion is zero.
pub fn elementary_expansion(k: u32, n: u64) -> ClassExpansion {
    let mut coeffs = BTreeMap::new();
    if (k as u64) < n || k == 0 {
        for mu in partitions_of(n) {
            if mu.length() as u64 == n - k as u64 {
                coeffs.insert(mu, Poly::one());
            }
        }
    }
    ClassExpansion::new(format!("e_{k}"), n, coeffs)
}

/// The closed form for `e_1 e_k`: `A_mu` on `l(mu) = n-k-1`,
/// `binom(n,2) - A_mu` on `l(mu) = n-k+1`, with
/// `A_mu = sum_{r >= 2} m_r(mu) binom(r, 2)`.
pub fn e1ek_expansion(k: u32, n: u64) -> ClassExpansion {
    let mut coeffs = BTreeMap::new();
    let total = Rat::from_integer(binomial_u(n, 2));
    for mu in partitions_of(n) {
        let l = mu.length() as i64;
        let a_mu: Rat = Rat::from_integer(
            mu.distinct_parts()
                .iter()
                .filter(|&&r| r >= 2)
                .map(|&r| binomial_u(r as u64, 2) * num_bigint::BigInt::from(mu.multiplicity(r)))
                .sum::<num_bigint::BigInt>(),
        );
        let coeff = if l == n as i64 - k as i64 - 1 {
            Poly::constant(a_mu)
        } else if l == n as i64 - k as i64 + 1 {
            Poly::constant(&total - &a_mu)
        } else {
            Poly::zero()
        };
        if !coeff.is_zero() {
            coeffs.insert(mu, coeff);
        }
    }
    ClassExpansion::new(format!("e_1e_{k}"), n, coeffs)
}

/// Reduced expansion of the hook Schur function `s_(a, 1^b)`, extracted
/// from the Hall-Littlewood table: `c[s_(a,1^b)]_rho = (-1)^b [z^b]
/// c^(a+b),hl_rho`. Coefficients are `z`-free rationals.
pub fn hook_from_table(hl: &mut ReducedTable, a: u32, b: u32) -> Result<ReducedExpansion> {
    assert_eq!(
        hl.family(),
        Family::Hl,
        "hook extraction reads the hl table"
    );
    if a == 0 {
        return Err(Error::invalid("hook Schur function requires arm >= 1"));
    }
    let k = a + b;
    let sign = if b.is_multiple_of(2) { 1 } else { -1 };
    let mut coeffs = BTreeMap::new();
    for (rho, c) in hl.level(k) {
        let extracted = c.coeff_of(Var::Z, b).scale(&rat(sign));
        if !extracted.is_zero() {
            coeffs.insert(rho.clone(), extracted);
        }
    }
    Ok(ReducedExpansion {
        family: format!("hook({a},{b})"),
        k,
        coeffs,
    })
}

pub fn hook_expansion(a: u32, b: u32) -> Result<ReducedExpansion> {
    hook_from_table(&mut ReducedTable::new(Family::Hl), a, b)
}

fn add_reduced(acc: &mut BTreeMap<Partition, Poly>, part: &ReducedExpansion, scale: &Rat) {
    for (rho, c) in &part.coeffs {
        let add = c.scale(scale);
        let entry = acc.entry(rho.clone()).or_insert_with(Poly::zero);
        *entry = &*entry + &add;
    }
    acc.retain(|_, c| !c.is_zero());
}

/// Reduced expansion of `h_k e_l` via the Pieri formula
/// `h_k e_l = s_(k,1^l) + s_(k+1,1^(l-1))`, `k, l >= 1`.
pub fn he_from_table(hl: &mut ReducedTable, k: u32, l: u32) -> Result<ReducedExpansion> {
    if k == 0 || l == 0 {
        return Err(Error::invalid("h_k e_l requires k, l >= 1"));
    }
    let mut coeffs = BTreeMap::new();
    add_reduced(&mut coeffs, &hook_from_table(hl, k, l)?, &Rat::one());
    add_reduced(
        &mut coeffs,
        &hook_from_table(hl, k + 1, l - 1)?,
        &Rat::one(),
    );
    Ok(ReducedExpansion {
        family: format!("he({k},{l})"),
        k: k + l,
        coeffs,
    })
}

pub fn he_expansion(k: u32, l: u32) -> Result<ReducedExpansion> {
    he_from_table(&mut ReducedTable::new(Family::Hl), k, l)
}

/// Reduced expansion of the monomial partial sum `p_{k,l} = sum_{a+b=k}
/// (-1)^(b-l) binom(b,l) h_a e_b` with `h_0 e_b = e_b = s_(1, 1^(b-1))`.
pub fn pkl_from_table(hl: &mut ReducedTable, k: u32, l: u32) -> Result<ReducedExpansion> {
    if l == 0 || l > k {
        return Err(Error::invalid("p_{k,l} requires 1 <= l <= k"));
    }
    let mut coeffs = BTreeMap::new();
    for b in l..=k {
        let a = k - b;
        let sign = if (b - l).is_multiple_of(2) { 1 } else { -1 };
        let weight = Rat::from_integer(sign * binomial_u(b as u64, l as u64));
        let part = if a == 0 {
            hook_from_table(hl, 1, b - 1)?
        } else if b == 0 {
            hook_from_table(hl, a, 0)?
        } else {
            he_from_table(hl, a, b)?
        };
        add_reduced(&mut coeffs, &part, &weight);
    }
    Ok(ReducedExpansion {
        family: format!("pkl({k},{l})"),
        k,
        coeffs,
    })
}

pub fn pkl_expansion(k: u32, l: u32) -> Result<ReducedExpansion> {
    pkl_from_table(&mut ReducedTable::new(Family::Hl), k, l)
}

/// Reduced moment expansion `s^(k)_rho = c^(k),p_{rho u (1)}`: assembling it
/// at weight `n` gives the class expansion whose eigenvalue on `lambda` is
/// the moment `sigma_k(lambda)`.
pub fn moment_from_table(p: &mut ReducedTable, k: u32) -> ReducedExpansion {
    assert_eq!(p.family(), Family::P, "moments read the power-sum table");
    let mut coeffs = BTreeMap::new();
    for (rho, c) in p.level(k) {
        if rho.multiplicity(1) >= 1 {
            let base = rho.remove_parts(&[1]).expect("has a part 1");
            coeffs.insert(base, c.clone());
        }
    }
    ReducedExpansion {
        family: "moment".to_string(),
        k,
        coeffs,
    }
}

pub fn moment_expansion(k: u32) -> ReducedExpansion {
    moment_from_table(&mut ReducedTable::new(Family::P), k)
}

/// Leading-stratum closed form for `rho` with `m_1(rho) = 0` at
/// `k = |rho| - l(rho)`: a product of Catalan numbers for `h`, and
/// `(1-z)^(l-1)` times generalized Catalan polynomials for `hl`.
pub fn leading_coefficient(rho: &Partition, family: Family) -> Result<Poly> {
    if rho.multiplicity(1) != 0 {
        return Err(Error::invalid("leading coefficients require m_1(rho) = 0"));
    }
    match family {
        Family::H => {
            let mut acc = Rat::one();
            for &part in rho.parts() {
                acc *= Rat::from_integer(catalan_number(part as u64 - 1));
            }
            Ok(Poly::constant(acc))
        }
        Family::Hl => {
            let one_minus_z = Poly::one() - Poly::z();
            let mut acc = if rho.is_empty() {
                Poly::one()
            } else {
                one_minus_z.pow(rho.length() as u32 - 1)
            };
            for &part in rho.parts() {
                acc = &acc * &gen_catalan(part - 1, CatalanMethod::DefSum)?;
            }
            Ok(acc)
        }
        _ => Err(Error::invalid("leading closed forms exist for h and hl")),
    }
}

/// The class expansion of a supported symmetric function at weight `n`
/// computed through the reduced-coefficient engine (closed forms for the
/// elementary families).
pub fn class_expansion_for(f: &SymFun, n: u64) -> Result<ClassExpansion> {
    f.validate()?;
    Ok(match *f {
        SymFun::E(k) => elementary_expansion(k, n),
        SymFun::E1E(k) => e1ek_expansion(k, n),
        SymFun::P(k) => assemble(&reduced_coeffs(Family::P, k), n),
        SymFun::H(k) => assemble(&reduced_coeffs(Family::H, k), n),
        SymFun::Hl(k) => assemble(&reduced_coeffs(Family::Hl, k), n),
        SymFun::Hook { arm, leg } => assemble(&hook_expansion(arm, leg)?, n),
        SymFun::He { k, l } => assemble(&he_expansion(k, l)?, n),
        SymFun::Pkl { k, l } => assemble(&pkl_expansion(k, l)?, n),
    })
}

/// The central identity: `f(A_lambda) = sum_mu a_mu(|lambda|)
/// theta^lambda_mu`, with `a` from the engine. Exact polynomial equality
/// in `z` where applicable.
pub fn content_identity_check(f: &SymFun, lambda: &Partition) -> Result<bool> {
    let n = lambda.weight();
    let expansion = class_expansion_for(f, n)?;
    let mut rhs = Poly::zero();
    for (mu, c) in expansion.coeffs() {
        rhs = &rhs + &c.scale(&theta_cached(lambda, mu)?);
    }
    Ok(rhs == content_eval(f, lambda)?)
}

/// The slice-checkable Jack / Hall-Littlewood coefficient table for
/// `k <= 4`, transcribed as published. Only two slices are proven by the
/// recurrences implemented here (`z = 1` against `jack_p`, `alpha = 1`
/// against `hl`); cells off those slices are fixture data,
/// unverified-by-recurrence.
pub fn jack_hl_table() -> Vec<(u32, Partition, Poly)> {
    let z = Poly::z();
    let al = Poly::alpha();
    let be = Poly::alpha() - Poly::one();
    let c = |n: i64| Poly::from_int(n);
    let one_minus_z = c(1) - z.clone();
    let two_minus_z = c(2) - z.clone();
    // z^2 - 5z + 5 and z^2 - 7z + 7
    let q5 = z.pow(2) - z.scale_int(5) + c(5);
    let q7 = z.pow(2) - z.scale_int(7) + c(7);
    let p = |parts: &[u32]| Partition::new(parts.to_vec());

    vec![
        (1, p(&[2]), c(1)),
        // k = 2
        (2, p(&[3]), two_minus_z.clone()),
        (2, p(&[2, 2]), one_minus_z.clone()),
        (2, p(&[2]), be.clone()),
        (2, p(&[1, 1]), al.clone()),
        // k = 3
        (3, p(&[4]), q5.clone()),
        (3, p(&[3, 2]), &one_minus_z * &two_minus_z),
        (3, p(&[2, 2, 2]), one_minus_z.pow(2)),
        (3, p(&[2, 2]), (&be * &one_minus_z).scale_int(2)),
        (3, p(&[3]), (&be * &two_minus_z).scale_int(3)),
        (3, p(&[2, 1, 1]), &al * &one_minus_z),
        (3, p(&[2, 1]), (&al * &two_minus_z).scale_int(2)),
        (3, p(&[2]), &al + &be.pow(2)),
        (3, p(&[1, 1]), &al * &be),
        // k = 4
        (4, p(&[5]), &two_minus_z * &q7),
        (4, p(&[4, 2]), &one_minus_z * &q5),
        (4, p(&[3, 3]), &one_minus_z * &two_minus_z.pow(2)),
        (4, p(&[3, 2, 2]), &one_minus_z.pow(2) * &two_minus_z),
        (4, p(&[2, 2, 2, 2]), one_minus_z.pow(3)),
        (
            4,
            p(&[4]),
            &be * &(z.pow(2).scale_int(6) - z.scale_int(29) + c(29)),
        ),
        (
            4,
            p(&[3, 2]),
            (&be * &(&one_minus_z * &two_minus_z)).scale_int(4),
        ),
        (4, p(&[2, 2, 2]), (&be * &one_minus_z.pow(2)).scale_int(3)),
        (4, p(&[3, 1, 1]), &al * &(&one_minus_z * &two_minus_z)),
        (4, p(&[3, 1]), (&al * &q5).scale_int(3)),
        (
            4,
            p(&[3]),
            &(al.scale_int(5) + be.pow(2).scale_int(7)) * &two_minus_z,
        ),
        (4, p(&[2, 2, 1, 1]), &al * &one_minus_z.pow(2)),
        (
            4,
            p(&[2, 2, 1]),
            (&al * &(&one_minus_z * &two_minus_z)).scale_int(4),
        ),
        (
            4,
            p(&[2, 2]),
            (&al * &q5).scale_int(4) + (&be.pow(2) * &one_minus_z).scale_int(3),
        ),
        (4, p(&[2, 1, 1]), (&(&al * &be) * &one_minus_z).scale_int(2)),
        (4, p(&[2, 1]), (&(&al * &be) * &two_minus_z).scale_int(6)),
        (4, p(&[2]), (&al * &be).scale_int(2) + be.pow(3)),
        (
            4,
            p(&[1, 1, 1, 1]),
            al.pow(2).scale_int(3) * one_minus_z.clone(),
        ),
        (
            4,
            p(&[1, 1, 1]),
            al.pow(2).scale_int(4) * two_minus_z.clone(),
        ),
        (4, p(&[1, 1]), al.pow(2) + &al * &be.pow(2)),
    ]
}
