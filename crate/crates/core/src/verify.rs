//! Verification suites: every computed expansion is checked against the
//! independent group-algebra oracle and against the central-character
//! identities, plus the closed-form, fixture, and support checks.
//!
//! Each check produces a [`Check`] with a stable id; suites aggregate them
//! into a [`Report`]. Failures are report content, not errors.

use crate::catalan::{catalan_number, gen_catalan, CatalanMethod};
use crate::character::theta_cached;
use crate::engine::{
    self, assemble, elementary_expansion, leading_coefficient, moment_from_table, jack_hl_table,
    Family, ReducedTable,
};
use crate::error::Error;
use crate::genfun::{
    hl_phi_display, jack_phi_fixture_scaled, phi_closed_form_z1, phi_series,
    psi_hook_closed_form_z1, psi_series, GenFunSeries,
};
use crate::measure::{check_moment_series, check_theorem4, moment, moment_closed_form};
use crate::oracle::oracle_expansion_with_guard;
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::poly::{rat, Poly, Rat, Var};
use crate::symfun::SymFun;
use crate::Result;
use num_traits::One;
use serde::Serialize;

/// Default seed for the sampled rational points, overridable from the CLI.
pub const DEFAULT_SEED: u64 = 0x6a75637973;

/// Guard rails: the oracle suite refuses larger `n` without `force`.
pub const ORACLE_SUITE_GUARD: usize = 8;
/// Guard rails: the character suite refuses larger `n` without `force`.
pub const CHARACTER_SUITE_GUARD: u64 = 10;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub status: String,
    pub detail: String,
}

impl Check {
    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: "pass".to_string(),
            detail: detail.into(),
        }
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: "fail".to_string(),
            detail: detail.into(),
        }
    }

    pub fn from_outcome(
        id: impl Into<String>,
        ok: bool,
        detail_ok: impl Into<String>,
        detail_fail: impl Into<String>,
    ) -> Self {
        if ok {
            Check::pass(id, detail_ok)
        } else {
            Check::fail(id, detail_fail)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.passed()).count();
        let failed = checks.len() - passed;
        Report {
            suite: suite.into(),
            checks,
            passed,
            failed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Bounds and options shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub max_n: usize,
    pub max_k: u32,
    pub seed: u64,
    pub force: bool,
    /// Runs the slower fixture checks (`|rho| in {6, 7}`).
    pub extended: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 5,
            max_k: 4,
            seed: DEFAULT_SEED,
            force: false,
            extended: false,
        }
    }
}

/// splitmix64, used to derive deterministic rational sample points.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut x = *state;
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Nonzero rational sample points derived from the seed; numerators in
/// `-20..=20`, denominators in `1..=11`.
pub fn sample_points(seed: u64, count: usize) -> Vec<Rat> {
    let mut state = seed;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let raw = splitmix64(&mut state);
        let num = (raw % 41) as i64 - 20;
        let den = ((raw >> 8) % 11) as i64 + 1;
        if num == 0 {
            continue;
        }
        let candidate = Rat::new(num.into(), den.into());
        if !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    out
}

/// All supported symmetric functions with total degree at most `max_k`,
/// excluding the plain elementary family (checked by the closed form).
fn oracle_specs(max_k: u32) -> Vec<SymFun> {
    let mut specs = Vec::new();
    for k in 0..=max_k {
        specs.push(SymFun::P(k));
        specs.push(SymFun::H(k));
        specs.push(SymFun::Hl(k));
    }
    for k in 1..=max_k {
        specs.push(SymFun::E1E(k));
        for l in 1..=(max_k - k).min(max_k) {
            specs.push(SymFun::He { k, l });
        }
        for l in 1..=k {
            specs.push(SymFun::Pkl { k, l });
        }
    }
    for arm in 1..=max_k {
        for leg in 0..=(max_k - arm) {
            specs.push(SymFun::Hook { arm, leg });
        }
    }
    specs
}

/// Criterion: the closed form for `e_k` equals the oracle for all
/// `1 <= k < n <= max_n`.
pub fn check_jucys_closed_form(max_n: usize, force: bool) -> Result<Check> {
    for n in 2..=max_n {
        for k in 1..n as u32 {
            let closed = elementary_expansion(k, n as u64);
            let oracle = oracle_expansion_with_guard(&SymFun::E(k), n, force)?;
            if closed != oracle {
                return Ok(Check::fail(
                    "jucys-closed-form",
                    format!("mismatch at k = {k}, n = {n}"),
                ));
            }
        }
    }
    Ok(Check::pass(
        "jucys-closed-form",
        format!("e_k class expansions match the oracle for k < n <= {max_n}"),
    ))
}

/// Criterion: engine class expansions equal oracle class expansions for
/// every supported family.
pub fn check_oracle_equivalence(max_n: usize, max_k: u32, force: bool) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for f in oracle_specs(max_k) {
        let mut failure: Option<String> = None;
        for n in 1..=max_n {
            let engine_side = engine::class_expansion_for(&f, n as u64)?;
            let oracle_side = oracle_expansion_with_guard(&f, n, force)?;
            if engine_side != oracle_side {
                failure = Some(format!("mismatch at n = {n}"));
                break;
            }
        }
        let id = format!("oracle-equivalence:{f}");
        checks.push(match failure {
            None => Check::pass(id, format!("equal for n <= {max_n}")),
            Some(detail) => Check::fail(id, detail),
        });
    }
    Ok(checks)
}

/// Criterion: `f(A_lambda) = sum_mu a_mu theta^lambda_mu` for all supported
/// families, `lambda |- n <= max_n`, total degree `<= max_k`.
pub fn check_character_identities(max_n: u64, max_k: u32) -> Result<Vec<Check>> {
    let mut specs = oracle_specs(max_k);
    for k in 0..=max_k {
        specs.push(SymFun::E(k));
    }
    let mut checks = Vec::new();
    for f in specs {
        let mut failure: Option<String> = None;
        'outer: for n in 1..=max_n {
            // one expansion per (f, n), paired with every lambda
            let expansion = engine::class_expansion_for(&f, n)?;
            let content = crate::symfun::power_sum_expansion(&f).ok();
            for lam in partitions_of(n) {
                let mut rhs = Poly::zero();
                for (mu, c) in expansion.coeffs() {
                    rhs = &rhs + &c.scale(&theta_cached(&lam, mu)?);
                }
                let lhs = match &content {
                    Some(pexp) => pexp.eval_contents(&lam),
                    None => crate::symfun::content_eval(&f, &lam)?,
                };
                if rhs != lhs {
                    failure = Some(format!("fails at lambda = {lam}"));
                    break 'outer;
                }
            }
        }
        let id = format!("character-identity:{f}");
        checks.push(match failure {
            None => Check::pass(id, format!("holds for all lambda up to weight {max_n}")),
            Some(detail) => Check::fail(id, detail),
        });
    }
    Ok(checks)
}

/// Criterion: the three linear relations between central characters hold
/// for all `lambda |- n <= max_n` and `mu |- n + 1`.
pub fn check_theorem4_range(max_n: u64) -> Result<Check> {
    for n in 0..=max_n {
        for lam in partitions_of(n) {
            for mu in partitions_of(n + 1) {
                for r in 0..=2u32 {
                    if !check_theorem4(&lam, &mu, r)? {
                        return Ok(Check::fail(
                            "central-character-relations",
                            format!("fails at lambda = {lam}, mu = {mu}, r = {r}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(Check::pass(
        "central-character-relations",
        format!("relations r = 0, 1, 2 hold for n <= {max_n}"),
    ))
}

/// Criterion: first moments, the closed forms in content power sums, and
/// the Cauchy-transform identity at seeded rational points.
pub fn check_transition_measure(
    max_n_first: u64,
    max_n_closed: u64,
    max_n_series: u64,
    seed: u64,
) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut first_fail = None;
    for n in 0..=max_n_first {
        for lam in partitions_of(n) {
            if moment(&lam, 0) != Rat::one()
                || moment(&lam, 1) != rat(0)
                || moment(&lam, 2) != rat(n as i64)
            {
                first_fail = Some(format!("lambda = {lam}"));
            }
        }
    }
    checks.push(Check::from_outcome(
        "moments:first",
        first_fail.is_none(),
        format!("sigma_0 = 1, sigma_1 = 0, sigma_2 = n for n <= {max_n_first}"),
        first_fail.unwrap_or_default(),
    ));

    let mut closed_fail = None;
    for n in 0..=max_n_closed {
        for lam in partitions_of(n) {
            for k in 3..=6u32 {
                if moment(&lam, k) != moment_closed_form(&lam, k).expect("k <= 6") {
                    closed_fail = Some(format!("sigma_{k} at lambda = {lam}"));
                }
            }
        }
    }
    checks.push(Check::from_outcome(
        "moments:closed-forms",
        closed_fail.is_none(),
        format!("sigma_3..sigma_6 closed forms hold for n <= {max_n_closed}"),
        closed_fail.unwrap_or_default(),
    ));

    let mut series_fail = None;
    'series: for n in 0..=max_n_series {
        for lam in partitions_of(n) {
            // 5 distinct non-pole points per lambda; poles resample
            // deterministically from follow-on seeds
            let mut used: Vec<Rat> = Vec::new();
            let mut offset = 0u64;
            while used.len() < 5 {
                let pts = sample_points(seed.wrapping_add(offset), 5);
                let mut progressed = false;
                for z0 in &pts {
                    if used.contains(z0) {
                        continue;
                    }
                    match check_moment_series(&lam, z0) {
                        Ok(true) => {
                            used.push(z0.clone());
                            progressed = true;
                            if used.len() == 5 {
                                break;
                            }
                        }
                        Ok(false) => {
                            series_fail =
                                Some(format!("identity fails at lambda = {lam}, z0 = {z0}"));
                            break 'series;
                        }
                        Err(Error::Pole { .. }) => {}
                        Err(e) => return Err(e),
                    }
                }
                offset += 1;
                if offset > 64 && !progressed {
                    series_fail = Some(format!("no usable sample points for lambda = {lam}"));
                    break 'series;
                }
            }
        }
    }
    checks.push(Check::from_outcome(
        "moments:cauchy-transform",
        series_fail.is_none(),
        format!("rational-function identity at 5 seeded points for n <= {max_n_series}"),
        series_fail.unwrap_or_default(),
    ));

    Ok(checks)
}

/// Criterion: recurrence-built `phi_rho` equals the exponential closed form
/// for the power-sum family.
pub fn check_phi_closed_form(max_weight: u64, order: usize) -> Check {
    let mut table = ReducedTable::new(Family::P);
    for w in 2..=max_weight {
        for rho in partitions_of(w) {
            let series = phi_series(&mut table, &rho, order);
            let closed = phi_closed_form_z1(&rho, order, false).expect("weight >= 2");
            if series != closed {
                return Check::fail(
                    "phi-closed-form",
                    format!("mismatch at rho = {rho}, order {order}"),
                );
            }
        }
    }
    Check::pass(
        "phi-closed-form",
        format!("series equals closed form to order {order} for |rho| <= {max_weight}"),
    )
}

/// Criterion: `sigma_k(lambda) = sum_rho c^(k),p_{rho u (1)}
/// binom(n - |rho-bar|, m_1(rho)) theta^lambda_{rho-tilde}`.
pub fn check_moment_expansion(max_k: u32, max_n: u64) -> Result<Check> {
    let mut table = ReducedTable::new(Family::P);
    for k in 0..=max_k {
        let reduced = moment_from_table(&mut table, k);
        for n in 1..=max_n {
            let assembled = assemble(&reduced, n);
            for lam in partitions_of(n) {
                let mut total = Rat::from_integer(0.into());
                for (mu, c) in assembled.coeffs() {
                    let coeff = c.as_constant().expect("moment coefficients are rational");
                    total += coeff * theta_cached(&lam, mu)?;
                }
                if total != moment(&lam, k) {
                    return Ok(Check::fail(
                        "moment-expansion",
                        format!("fails at k = {k}, lambda = {lam}"),
                    ));
                }
            }
        }
    }
    Ok(Check::pass(
        "moment-expansion",
        format!("moment class expansions hold for k <= {max_k}, n <= {max_n}"),
    ))
}

/// Criterion: the Catalan tower. Five methods agree, specializations match,
/// and the printed small values are reproduced.
pub fn check_catalan_tower(max_r: u32) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut agree_fail = None;
    for r in 1..=max_r {
        let reference = gen_catalan(r, CatalanMethod::DefSum)?;
        for method in [
            CatalanMethod::Rec,
            CatalanMethod::Alt1,
            CatalanMethod::Alt2,
            CatalanMethod::HlSpec,
        ] {
            if gen_catalan(r, method)? != reference {
                agree_fail = Some(format!("{method:?} differs at r = {r}"));
            }
        }
    }
    checks.push(Check::from_outcome(
        "catalan:methods-agree",
        agree_fail.is_none(),
        format!("five methods agree for r <= {max_r}"),
        agree_fail.unwrap_or_default(),
    ));

    let mut spec_fail = None;
    for r in 0..=max_r {
        let c = gen_catalan(r, CatalanMethod::DefSum)?;
        if c.eval(Some(&rat(0)), None)? != Rat::from_integer(catalan_number(r as u64))
            || c.eval(Some(&rat(1)), None)? != Rat::one()
        {
            spec_fail = Some(format!("specialization fails at r = {r}"));
        }
    }
    checks.push(Check::from_outcome(
        "catalan:specializations",
        spec_fail.is_none(),
        "values at z = 0 are Catalan numbers; at z = 1 all 1".to_string(),
        spec_fail.unwrap_or_default(),
    ));

    let z = Poly::z();
    let printed = vec![
        (2u32, Poly::from_int(2) - z.clone()),
        (3, z.pow(2) - z.scale_int(5) + Poly::from_int(5)),
        (
            4,
            &(Poly::from_int(2) - z.clone()) * &(z.pow(2) - z.scale_int(7) + Poly::from_int(7)),
        ),
    ];
    let mut printed_fail = None;
    for (r, want) in printed {
        if gen_catalan(r, CatalanMethod::DefSum)? != want {
            printed_fail = Some(format!("printed value differs at r = {r}"));
        }
    }
    checks.push(Check::from_outcome(
        "catalan:printed-values",
        printed_fail.is_none(),
        "C(2), C(3), C(4) match the printed polynomials".to_string(),
        printed_fail.unwrap_or_default(),
    ));

    Ok(checks)
}

/// Criterion: the leading-stratum closed forms (Catalan products) match the
/// recurrences on `|rho| - l(rho) = k`, `m_1(rho) = 0`.
pub fn check_leading_terms(max_weight: u64) -> Result<Check> {
    let mut h = ReducedTable::new(Family::H);
    let mut hl = ReducedTable::new(Family::Hl);
    for rho in partitions_up_to(max_weight) {
        if rho.is_empty() || rho.multiplicity(1) != 0 {
            continue;
        }
        let k = (rho.weight() - rho.length() as u64) as u32;
        if h.coeff(k, &rho) != leading_coefficient(&rho, Family::H)? {
            return Ok(Check::fail(
                "leading-terms",
                format!("h mismatch at rho = {rho}"),
            ));
        }
        if hl.coeff(k, &rho) != leading_coefficient(&rho, Family::Hl)? {
            return Ok(Check::fail(
                "leading-terms",
                format!("hl mismatch at rho = {rho}"),
            ));
        }
    }
    Ok(Check::pass(
        "leading-terms",
        format!("leading strata match the Catalan closed forms for |rho| <= {max_weight}"),
    ))
}

/// Criterion: support and parity of every computed coefficient
/// (`|rho| - l(rho) <= k`, congruent mod 2, `m_1 = 0` on the top stratum,
/// plus the weight bound for the power-sum families).
pub fn check_support_parity(max_k: u32) -> Check {
    for family in [Family::P, Family::H, Family::Hl] {
        let mut table = ReducedTable::new(family);
        for k in 0..=max_k {
            for rho in table.expansion(k).coeffs.keys() {
                let excess = rho.weight() - rho.length() as u64;
                let ok = excess <= k as u64
                    && excess % 2 == (k as u64) % 2
                    && (excess != k as u64 || k == 0 || rho.multiplicity(1) == 0)
                    && (family != Family::P || rho.weight() + rho.length() as u64 <= k as u64 + 2);
                if !ok {
                    return Check::fail(
                        "support-parity",
                        format!("violated by {:?} at k = {k}, rho = {rho}", family),
                    );
                }
            }
        }
    }
    let mut jack = ReducedTable::new(Family::JackP);
    for k in 0..=max_k {
        for rho in jack.expansion(k).coeffs.keys() {
            if rho.weight() + rho.length() as u64 > k as u64 + 2 {
                return Check::fail(
                    "support-parity",
                    format!("jack weight bound violated at k = {k}, rho = {rho}"),
                );
            }
        }
    }
    Check::pass(
        "support-parity",
        format!("vanishing conditions hold for all computed tables, k <= {max_k}"),
    )
}

/// Criterion: Hall-Littlewood generating functions reproduce the
/// transcribed displays.
pub fn check_fixture_series(weights: &[u64], order: usize) -> Result<Check> {
    let mut table = ReducedTable::new(Family::Hl);
    for &w in weights {
        for rho in partitions_of(w) {
            let series = phi_series(&mut table, &rho, order);
            let fixture = hl_phi_display(&rho, order)?;
            if series != fixture {
                return Ok(Check::fail(
                    "hl-fixture-series",
                    format!("mismatch at rho = {rho}, order {order}"),
                ));
            }
        }
    }
    Ok(Check::pass(
        "hl-fixture-series",
        format!("transcribed displays match to order {order} for weights {weights:?}"),
    ))
}

/// Criterion: the Jack family. Table slices, beta-positivity, and the
/// published generating functions.
pub fn check_jack(max_k_positivity: u32, phi_order: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut jack = ReducedTable::new(Family::JackP);
    let mut hl = ReducedTable::new(Family::Hl);

    // z = 1 slice of the table against the jack recurrence, alpha = 1
    // against the Hall-Littlewood recurrence. Rows off both slices are
    // fixture-only.
    let mut jack_slice: std::collections::BTreeMap<(u32, Partition), Poly> = Default::default();
    let mut hl_slice: std::collections::BTreeMap<(u32, Partition), Poly> = Default::default();
    for (k, rho, cell) in jack_hl_table() {
        let e = jack_slice
            .entry((k, rho.clone()))
            .or_insert_with(Poly::zero);
        *e = &*e + &cell.subst(Var::Z, &rat(1));
        let e = hl_slice.entry((k, rho)).or_insert_with(Poly::zero);
        *e = &*e + &cell.subst(Var::Alpha, &rat(1));
    }
    let mut slice_fail = None;
    for ((k, rho), want) in &jack_slice {
        if jack.coeff(*k, rho) != *want {
            slice_fail = Some(format!("jack slice differs at k = {k}, rho = {rho}"));
        }
    }
    for k in 1..=4u32 {
        for (rho, c) in jack.expansion(k).coeffs.iter() {
            if jack_slice.get(&(k, rho.clone())).map(|p| !p.is_zero()) != Some(true) && !c.is_zero()
            {
                slice_fail = Some(format!("table misses jack cell k = {k}, rho = {rho}"));
            }
        }
    }
    checks.push(Check::from_outcome(
        "jack:table-z1-slice",
        slice_fail.is_none(),
        "k <= 4 table reproduced on the z = 1 slice".to_string(),
        slice_fail.unwrap_or_default(),
    ));

    let mut hl_fail = None;
    for ((k, rho), want) in &hl_slice {
        if hl.coeff(*k, rho) != *want {
            hl_fail = Some(format!("hl slice differs at k = {k}, rho = {rho}"));
        }
    }
    for k in 1..=4u32 {
        for (rho, c) in hl.expansion(k).coeffs.iter() {
            if hl_slice.get(&(k, rho.clone())).map(|p| !p.is_zero()) != Some(true) && !c.is_zero() {
                hl_fail = Some(format!("table misses hl cell k = {k}, rho = {rho}"));
            }
        }
    }
    checks.push(Check::from_outcome(
        "jack:table-alpha1-slice",
        hl_fail.is_none(),
        "k <= 4 table reproduced on the alpha = 1 slice for general z".to_string(),
        hl_fail.unwrap_or_default(),
    ));

    let mut pos_fail = None;
    for k in 0..=max_k_positivity {
        for (rho, c) in jack.expansion(k).coeffs.iter() {
            if !c.in_beta_basis().has_nonneg_integer_coeffs() {
                pos_fail = Some(format!("negative beta coefficient at k = {k}, rho = {rho}"));
            }
        }
    }
    checks.push(Check::from_outcome(
        "jack:beta-positivity",
        pos_fail.is_none(),
        format!("coefficients in the (alpha, alpha-1) basis are nonnegative integers, k <= {max_k_positivity}"),
        pos_fail.unwrap_or_default(),
    ));

    let mut phi_fail = None;
    for rho in [
        Partition::new(vec![2]),
        Partition::new(vec![1, 1]),
        Partition::new(vec![3]),
        Partition::new(vec![2, 1]),
        Partition::new(vec![1, 1, 1]),
    ] {
        let (scaled, denom) = jack_phi_fixture_scaled(&rho, phi_order).expect("covered weights");
        if phi_series(&mut jack, &rho, phi_order).scale(&denom) != scaled {
            phi_fail = Some(format!("display differs at rho = {rho}"));
        }
    }
    checks.push(Check::from_outcome(
        "jack:phi-displays",
        phi_fail.is_none(),
        format!("published generating functions match to order {phi_order}"),
        phi_fail.unwrap_or_default(),
    ));

    Ok(checks)
}

/// Criterion: at `z = 1` the Schur-side series `psi_rho` is the hook
/// product closed form, and vanishes for non-hooks.
pub fn check_psi_dichotomy(max_weight: u64, order: usize) -> Result<Check> {
    let mut table = ReducedTable::new(Family::P);
    for w in 1..=max_weight {
        for lam in partitions_of(w) {
            let psi = psi_series(&mut table, &lam, order)?;
            let is_hook = lam.length() <= 1 || lam.parts()[1] == 1;
            if is_hook {
                let arm = lam.parts()[0];
                let leg = lam.length() as u32 - 1;
                if psi != psi_hook_closed_form_z1(arm, leg, order) {
                    return Ok(Check::fail(
                        "psi-hooks",
                        format!("hook closed form differs at rho = {lam}"),
                    ));
                }
            } else if !psi.is_zero() {
                return Ok(Check::fail(
                    "psi-hooks",
                    format!("nonzero psi for non-hook rho = {lam}"),
                ));
            }
        }
    }
    Ok(Check::pass(
        "psi-hooks",
        format!("hook / zero dichotomy holds for |rho| <= {max_weight}"),
    ))
}

/// Parity and low-order vanishing of the generating functions for the
/// `z`-families.
pub fn check_phi_parity(max_weight: u64, order: usize) -> Check {
    for family in [Family::P, Family::H, Family::Hl] {
        let mut table = ReducedTable::new(family);
        for w in 2..=max_weight {
            for rho in partitions_of(w) {
                let series = GenFunSeries::new(&mut table, &rho, order);
                if !series.check_parity() {
                    return Check::fail(
                        "phi-parity",
                        format!("parity fails for {:?} at rho = {rho}", family),
                    );
                }
            }
        }
    }
    Check::pass(
        "phi-parity",
        format!("sign parity and t-divisibility hold for |rho| <= {max_weight}"),
    )
}

/// Named verification suites exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Characters,
    Identities,
    Fixtures,
    Jack,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Characters => "characters",
            Suite::Identities => "identities",
            Suite::Fixtures => "fixtures",
            Suite::Jack => "jack",
            Suite::All => "all",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "oracle" => Suite::Oracle,
            "characters" => Suite::Characters,
            "identities" => Suite::Identities,
            "fixtures" => Suite::Fixtures,
            "jack" => Suite::Jack,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

/// Runs a suite with the given bounds. Guard rails reject oversized bounds
/// unless `force` is set.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> Result<Report> {
    match suite {
        Suite::Oracle => {
            if bounds.max_n > ORACLE_SUITE_GUARD && !bounds.force {
                return Err(Error::SizeGuard {
                    n: bounds.max_n,
                    limit: ORACLE_SUITE_GUARD,
                });
            }
            let mut checks = vec![check_jucys_closed_form(bounds.max_n, bounds.force)?];
            checks.extend(check_oracle_equivalence(
                bounds.max_n,
                bounds.max_k,
                bounds.force,
            )?);
            Ok(Report::new("oracle", checks))
        }
        Suite::Characters => {
            if bounds.max_n as u64 > CHARACTER_SUITE_GUARD && !bounds.force {
                return Err(Error::SizeGuard {
                    n: bounds.max_n,
                    limit: CHARACTER_SUITE_GUARD as usize,
                });
            }
            let checks = check_character_identities(bounds.max_n as u64, bounds.max_k)?;
            Ok(Report::new("characters", checks))
        }
        Suite::Identities => {
            let n = bounds.max_n as u64;
            let mut checks = vec![check_theorem4_range(n)?];
            checks.extend(check_transition_measure(n, n, n, bounds.seed)?);
            checks.push(check_moment_expansion(bounds.max_k, n)?);
            Ok(Report::new("identities", checks))
        }
        Suite::Fixtures => {
            let mut checks = Vec::new();
            checks.push(check_phi_closed_form(bounds.max_n as u64, 13));
            checks.extend(check_catalan_tower(20)?);
            checks.push(check_leading_terms(9)?);
            checks.push(check_support_parity(bounds.max_k.max(10)));
            checks.push(check_fixture_series(&[2, 3, 4, 5], 13)?);
            if bounds.extended {
                checks.push(check_fixture_series(&[6, 7], 11)?);
            }
            checks.push(check_psi_dichotomy(6, 13)?);
            checks.push(check_phi_parity(6, 13));
            Ok(Report::new("fixtures", checks))
        }
        Suite::Jack => {
            let checks = check_jack(8, 10)?;
            Ok(Report::new("jack", checks))
        }
        Suite::All => {
            let mut checks = Vec::new();
            for sub in [
                Suite::Oracle,
                Suite::Characters,
                Suite::Identities,
                Suite::Fixtures,
                Suite::Jack,
            ] {
                let report = run_suite(sub, bounds)?;
                for mut check in report.checks {
                    check.id = format!("{}:{}", report.suite, check.id);
                    checks.push(check);
                }
            }
            Ok(Report::new("all", checks))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_points_are_deterministic_and_nonzero() {
        let a = sample_points(DEFAULT_SEED, 5);
        let b = sample_points(DEFAULT_SEED, 5);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| *p != rat(0)));
        assert_ne!(a, sample_points(DEFAULT_SEED + 1, 5));
    }

    #[test]
    fn small_suites_pass() {
        let bounds = Bounds {
            max_n: 4,
            max_k: 3,
            ..Bounds::default()
        };
        for suite in [Suite::Oracle, Suite::Characters, Suite::Identities] {
            let report = run_suite(suite, &bounds).unwrap();
            assert!(
                report.all_passed(),
                "{}: {:?}",
                report.suite,
                report
                    .checks
                    .iter()
                    .filter(|c| !c.passed())
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn guard_rails() {
        let bounds = Bounds {
            max_n: 9,
            ..Bounds::default()
        };
        assert!(matches!(
            run_suite(Suite::Oracle, &bounds),
            Err(Error::SizeGuard { .. })
        ));
        let bounds = Bounds {
            max_n: 11,
            ..Bounds::default()
        };
        assert!(matches!(
            run_suite(Suite::Characters, &bounds),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in [
            Suite::Oracle,
            Suite::Characters,
            Suite::Identities,
            Suite::Fixtures,
            Suite::Jack,
            Suite::All,
        ] {
            assert_eq!(Suite::parse(suite.name()), Some(suite));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn report_shape() {
        let report = Report::new(
            "demo",
            vec![Check::pass("a", "ok"), Check::fail("b", "bad")],
        );
        assert_eq!(report.passed, 1);
        assert_eq!(report.failed, 1);
        assert!(!report.all_passed());
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["suite"], "demo");
        assert_eq!(json["checks"][0]["id"], "a");
        assert_eq!(json["checks"][1]["status"], "fail");
    }
}
