//! Claim-by-claim verification suite.
//!
//! Every check recomputes its claim from scratch by enumeration and returns
//! data; rendering is left to the caller. Checks share no state, so their
//! order does not affect the outcome.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use holomorph_core::aut::{
    aut_group_with, automorphisms_with, is_characteristic_with, lambda_lift, zeta_lift, AutGroup,
};
use holomorph_core::construct::{
    action_classes_with, actions_with, cyclic, dihedral_with, direct_product_with, encode_pair,
    holomorph_semidirect, hom_set_with, recognize_split, semidirect_cyclic_with, Action,
    Semidirect,
};
use holomorph_core::iso::{are_isomorphic_with, identify_with, CatalogName};
use holomorph_core::numth::{elementary_abelian_aut_order, euler_phi, gcd, prime_power_aut_order};
use holomorph_core::{verify_group_axioms, Error, GroupTable, Limits, Morphism, Subgroup};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub claim: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Deliberate defects for exercising the failure paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Uses `5·φ(n)` instead of `6·φ(n)` for `n ≡ 2 (mod 4)`.
    WrongOrderFormula,
    /// Swaps two entries of one constructed table before the axiom check.
    CorruptedTable,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub zn_z2_max_n: usize,
    pub mod4_values: Vec<usize>,
    pub prime_powers: Vec<(u64, u32)>,
    pub elementary: Vec<(u64, u32)>,
    pub dihedral_max_n: usize,
    pub action_max_m: usize,
    pub action_max_n: usize,
    pub characteristic_max_order: usize,
    pub limits: Limits,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        let mut prime_powers = Vec::new();
        for (p, kmax) in [(2, 5), (3, 3), (5, 2), (7, 2)] {
            prime_powers.extend((1..=kmax).map(|k| (p, k)));
        }
        VerifyConfig {
            zn_z2_max_n: 20,
            mod4_values: vec![4, 8, 12, 16],
            prime_powers,
            elementary: vec![(2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3)],
            dihedral_max_n: 12,
            action_max_m: 12,
            action_max_n: 6,
            characteristic_max_order: 60,
            limits: Limits::default(),
            fault: None,
        }
    }
}

impl VerifyConfig {
    /// Caps the `n`-indexed families (the `Z_n × Z_2` orders and the
    /// dihedral checks) at `max_n`.
    pub fn with_max_n(max_n: usize) -> Self {
        VerifyConfig {
            zn_z2_max_n: max_n,
            dihedral_max_n: max_n,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub elapsed: Duration,
}

impl Summary {
    pub fn of(reports: &[VerifyReport], elapsed: Duration) -> Self {
        let count = |f: fn(&Status) -> bool| reports.iter().filter(|r| f(&r.status)).count();
        Summary {
            passed: count(|s| *s == Status::Pass),
            failed: count(|s| *s == Status::Fail),
            skipped: count(|s| matches!(s, Status::Skipped(_))),
            elapsed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

struct Outcome {
    ok: bool,
    expected: String,
    actual: String,
}

fn outcome(ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        expected: expected.into(),
        actual: actual.into(),
    }
}

fn skipped(claim: String, expected: String, reason: String) -> VerifyReport {
    VerifyReport {
        claim,
        status: Status::Skipped(reason.clone()),
        expected,
        actual: reason,
        elapsed: Duration::ZERO,
    }
}

/// Runs one check; a cap error becomes a skip, any other error a failure.
fn timed(claim: String, f: impl FnOnce() -> Result<Outcome, Error>) -> VerifyReport {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    match result {
        Ok(o) => VerifyReport {
            claim,
            status: if o.ok { Status::Pass } else { Status::Fail },
            expected: o.expected,
            actual: o.actual,
            elapsed,
        },
        Err(e) if e.is_cap() => VerifyReport {
            claim,
            status: Status::Skipped(e.to_string()),
            expected: "computation within caps".into(),
            actual: e.to_string(),
            elapsed,
        },
        Err(e) => VerifyReport {
            claim,
            status: Status::Fail,
            expected: "computation succeeds".into(),
            actual: format!("error: {e}"),
            elapsed,
        },
    }
}

type Build = fn(&Limits) -> Result<GroupTable, Error>;

fn z(n: usize, limits: &Limits) -> Result<GroupTable, Error> {
    holomorph_core::construct::cyclic_named(n, "r", limits)
}

fn product(a: &GroupTable, b: &GroupTable, limits: &Limits) -> Result<GroupTable, Error> {
    direct_product_with(a, b, limits)
}

fn z2_x_d4(limits: &Limits) -> Result<GroupTable, Error> {
    Ok(
        CatalogName::Product(vec![CatalogName::Cyclic(2), CatalogName::Dihedral(4)])
            .build_with(limits)?
            .expect("named groups build"),
    )
}

/// `|Aut(Z_n × Z_2)|` against `φ(n)`, `4φ(n)` or `6φ(n)` by `n mod 4`.
pub fn check_aut_zn_z2_orders(
    max_n: usize,
    limits: &Limits,
    fault: Option<Fault>,
) -> Vec<VerifyReport> {
    (2..=max_n)
        .map(|n| {
            timed(format!("aut-zn-x-z2.order.n={n}"), || {
                let phi = euler_phi(n as u64)?;
                let factor = match n % 4 {
                    0 => 4,
                    2 if fault == Some(Fault::WrongOrderFormula) => 5,
                    2 => 6,
                    _ => 1,
                };
                let expected = factor * phi;
                let g = product(&z(n, limits)?, &cyclic(2)?, limits)?;
                let count = automorphisms_with(&g, limits)?.len() as u64;
                Ok(outcome(
                    count == expected,
                    format!("{factor}·φ({n}) = {expected}"),
                    count.to_string(),
                ))
            })
        })
        .collect()
}

/// Kernels of the surjections `G -> Z_2`, i.e. all index-2 subgroups.
fn index_two_subgroups(g: &GroupTable, limits: &Limits) -> Result<Vec<Subgroup>, Error> {
    let z2 = cyclic(2)?;
    let kernels: BTreeSet<Subgroup> = hom_set_with(g, &z2, limits)?
        .into_iter()
        .filter(|f| f.image().iter().any(|&x| x != z2.identity()))
        .map(|f| f.kernel(g, &z2))
        .collect();
    Ok(kernels.into_iter().collect())
}

/// First index-2 subgroup isomorphic to `target` over which `g` splits.
fn split_index_two(
    g: &GroupTable,
    target: &GroupTable,
    limits: &Limits,
) -> Result<Option<Subgroup>, Error> {
    for w in index_two_subgroups(g, limits)? {
        let (t, _) = g.subgroup_table(&w)?;
        if are_isomorphic_with(&t, target, limits)?.is_some() && recognize_split(g, &w)?.is_some() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// For `n ≡ 0 (mod 4)`: `Aut(Z_n × Z_2) ≅ (Aut(Z_n) × Z_2) ⋊ Z_2`, plus the
/// four small named isomorphisms.
pub fn check_aut_zn_mod4_structure(values: &[usize], limits: &Limits) -> Vec<VerifyReport> {
    let mut out: Vec<VerifyReport> = values
        .iter()
        .map(|&n| {
            timed(format!("aut-zn-x-z2.split.n={n}"), || {
                let expected =
                    format!("normal index-2 subgroup ≅ Aut(Z{n}) x Z2 with a complement");
                if n % 4 != 0 {
                    return Ok(outcome(
                        false,
                        expected,
                        format!("{n} is not divisible by 4"),
                    ));
                }
                let a = aut_group_with(&product(&z(n, limits)?, &cyclic(2)?, limits)?, limits)?;
                let target = product(
                    aut_group_with(&z(n, limits)?, limits)?.table(),
                    &cyclic(2)?,
                    limits,
                )?;
                let found = split_index_two(a.table(), &target, limits)?;
                let actual = match &found {
                    Some(w) => format!(
                        "found subgroup of order {} in |Aut| = {}, split",
                        w.len(),
                        a.len()
                    ),
                    None => format!("no qualifying index-2 subgroup in |Aut| = {}", a.len()),
                };
                Ok(outcome(found.is_some(), expected, actual))
            })
        })
        .collect();
    let named: [(usize, &str, Build); 4] = [
        (2, "D3", |l| dihedral_with(3, l)),
        (4, "D4", |l| dihedral_with(4, l)),
        (6, "D6", |l| dihedral_with(6, l)),
        (8, "Z2 x D4", z2_x_d4),
    ];
    for (n, name, build) in named {
        out.push(timed(format!("aut-zn-x-z2.named.n={n}"), || {
            let a = aut_group_with(&product(&z(n, limits)?, &cyclic(2)?, limits)?, limits)?;
            let target = build(limits)?;
            let witness = are_isomorphic_with(a.table(), &target, limits)?;
            let shown = identify_with(a.table(), limits)?;
            let actual = match witness {
                Some(_) => format!("verified isomorphism; identified as {shown}"),
                None => format!("not isomorphic; identified as {shown}"),
            };
            Ok(outcome(
                witness.is_some(),
                format!("Aut(Z{n} x Z2) ≅ {name}"),
                actual,
            ))
        }));
    }
    out
}

/// `|Aut(Z_{p^k})| = p^k - p^{k-1}`.
pub fn check_prime_power_aut(pairs: &[(u64, u32)], limits: &Limits) -> Vec<VerifyReport> {
    pairs
        .iter()
        .map(|&(p, k)| {
            timed(format!("aut-prime-power.p={p},k={k}"), || {
                let expected = prime_power_aut_order(p, k)?;
                let n = p.checked_pow(k).ok_or(Error::Overflow("p^k"))? as usize;
                let count = automorphisms_with(&z(n, limits)?, limits)?.len() as u64;
                Ok(outcome(
                    count == expected,
                    format!("{p}^{k} - {p}^{} = {expected}", k - 1),
                    count.to_string(),
                ))
            })
        })
        .collect()
}

/// `|Aut(Z_p^m)| = ∏_{x<m} (p^m - p^x)` by full enumeration; pairs whose
/// count exceeds the automorphism cap are skipped.
pub fn check_elementary_abelian_aut(pairs: &[(u64, u32)], limits: &Limits) -> Vec<VerifyReport> {
    pairs
        .iter()
        .map(|&(p, m)| {
            let claim = format!("aut-elementary-abelian.p={p},m={m}");
            let expected = match elementary_abelian_aut_order(p, m) {
                Ok(v) => v,
                Err(e) => return timed(claim, || Err(e)),
            };
            let exp_text = format!("∏ ({p}^{m} - {p}^x) = {expected}");
            if expected > limits.max_aut as u64 {
                let reason = format!("|Aut| = {expected} exceeds the cap of {}", limits.max_aut);
                return skipped(claim, exp_text, reason);
            }
            timed(claim, || {
                let zp = z(p as usize, limits)?;
                let mut g = cyclic(1)?;
                for _ in 0..m {
                    g = product(&g, &zp, limits)?;
                }
                let count = automorphisms_with(&g, limits)?.len() as u64;
                Ok(outcome(count == expected, exp_text, count.to_string()))
            })
        })
        .collect()
}

/// `Aut(D_n) ≅ Hol(Z_n)` of order `nφ(n)`, and `D_n ≅ Aut(D_n)` exactly
/// when `φ(n) = 2`.
pub fn check_dihedral_aut(max_n: usize, limits: &Limits) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        out.push(timed(format!("aut-dihedral.holomorph.n={n}"), || {
            let phi = euler_phi(n as u64)? as usize;
            let a = aut_group_with(&dihedral_with(n, limits)?, limits)?;
            let hol = holomorph_semidirect(n, limits)?;
            let witness = are_isomorphic_with(a.table(), hol.table(), limits)?;
            let ok = a.len() == n * phi && witness.is_some();
            let actual = format!(
                "|Aut(D{n})| = {}, {}",
                a.len(),
                if witness.is_some() {
                    "verified isomorphism"
                } else {
                    "not isomorphic"
                }
            );
            Ok(outcome(
                ok,
                format!(
                    "|Aut(D{n})| = {n}·φ({n}) = {} and Aut(D{n}) ≅ Hol(Z{n})",
                    n * phi
                ),
                actual,
            ))
        }));
        out.push(timed(format!("aut-dihedral.self.n={n}"), || {
            let phi = euler_phi(n as u64)?;
            let d = dihedral_with(n, limits)?;
            let a = aut_group_with(&d, limits)?;
            let iso = are_isomorphic_with(&d, a.table(), limits)?.is_some();
            let word = |b: bool| if b { "isomorphic" } else { "not isomorphic" };
            Ok(outcome(
                iso == (phi == 2),
                format!("φ({n}) = {phi}, so D{n} and Aut(D{n}) {}", word(phi == 2)),
                word(iso),
            ))
        }));
    }
    out
}

const Z8_POWERS: [(&str, u64); 4] = [("rho", 1), ("sigma", 3), ("tau", 5), ("upsilon", 7)];

/// Generator images `[f(r), f(s)]` admitted by the printed general forms.
fn printed_forms(sd: &Semidirect, power: u64) -> BTreeSet<(usize, usize)> {
    let e = |i: usize, j: usize| sd.pair(i % 8, j);
    let mut set = BTreeSet::new();
    for i in [1, 3, 5, 7] {
        match power {
            1 | 5 => {
                for j in 0..2 {
                    for k in 0..2 {
                        set.insert((e(i, j), e(4 * k, 1)));
                    }
                }
            }
            3 => set.extend([0, 2, 4, 6].map(|k| (e(i, 0), e(k, 1)))),
            _ => set.extend((0..8).map(|k| (e(i, 0), e(k, 1)))),
        }
    }
    set
}

fn generator_images(sd: &Semidirect, a: &AutGroup) -> BTreeSet<(usize, usize)> {
    let (r, s) = (sd.pair(1, 0), sd.pair(0, 1));
    a.elements()
        .iter()
        .map(|m| (m.apply(r), m.apply(s)))
        .collect()
}

/// The four groups `Z_8 ⋊ Z_2` and their automorphism groups.
pub fn check_z8_case_study(limits: &Limits) -> Vec<VerifyReport> {
    let builds: Result<Vec<Semidirect>, Error> = Z8_POWERS
        .iter()
        .map(|&(_, i)| semidirect_cyclic_with(8, 2, i, limits))
        .collect();
    let builds = match builds {
        Ok(b) => b,
        Err(e) => return vec![timed("z8.build".into(), || Err(e))],
    };
    let auts: Result<Vec<AutGroup>, Error> = builds
        .iter()
        .map(|sd| aut_group_with(sd.table(), limits))
        .collect();
    let mut out = Vec::new();

    out.push(timed("z8.pairwise-non-isomorphic".into(), || {
        let mut iso_pairs = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                if are_isomorphic_with(builds[a].table(), builds[b].table(), limits)?.is_some() {
                    iso_pairs.push(format!("{}~{}", Z8_POWERS[a].0, Z8_POWERS[b].0));
                }
            }
        }
        let actual = if iso_pairs.is_empty() {
            "no isomorphic pair".into()
        } else {
            iso_pairs.join(", ")
        };
        Ok(outcome(
            iso_pairs.is_empty(),
            "no two of rho, sigma, tau, upsilon isomorphic",
            actual,
        ))
    }));

    out.push(timed("z8.relations".into(), || {
        let mut bad = Vec::new();
        for (sd, &(name, i)) in builds.iter().zip(&Z8_POWERS) {
            let g = sd.table();
            let (r, s) = (sd.pair(1, 0), sd.pair(0, 1));
            if g.mul(s, r) != g.mul(g.pow(r, i as usize), s) {
                bad.push(name);
            }
        }
        let actual = if bad.is_empty() {
            "all hold".to_string()
        } else {
            format!("fails for {}", bad.join(", "))
        };
        Ok(outcome(
            bad.is_empty(),
            "sr = r^i s for i = 1, 3, 5, 7",
            actual,
        ))
    }));

    out.push(timed("z8.rho-is-direct-product".into(), || {
        let direct = product(&cyclic(8)?, &cyclic(2)?, limits)?;
        let same = direct.rows() == builds[0].table().rows();
        Ok(outcome(
            same,
            "table equal to Z8 x Z2",
            if same { "equal" } else { "differs" },
        ))
    }));

    let auts = match auts {
        Ok(a) => a,
        Err(e) => {
            out.push(timed("z8.aut-orders".into(), || Err(e)));
            return out;
        }
    };

    out.push(timed("z8.aut-orders".into(), || {
        let orders: Vec<usize> = auts.iter().map(AutGroup::len).collect();
        Ok(outcome(
            orders == [16, 16, 16, 32],
            "[16, 16, 16, 32]",
            format!("{orders:?}"),
        ))
    }));

    for idx in 0..3 {
        let name = Z8_POWERS[idx].0;
        let a = &auts[idx];
        out.push(timed(format!("z8.aut-structure.{name}"), || {
            let shown = identify_with(a.table(), limits)?;
            let witness = are_isomorphic_with(a.table(), &z2_x_d4(limits)?, limits)?;
            let ok = witness.is_some() && shown.to_string() == "Z2 x D4";
            let actual = format!(
                "identified as {shown}; {}",
                if witness.is_some() {
                    "verified isomorphism"
                } else {
                    "no isomorphism"
                }
            );
            Ok(outcome(ok, "Z2 x D4", actual))
        }));
    }

    for (idx, &(name, power)) in Z8_POWERS.iter().enumerate() {
        out.push(timed(format!("z8.aut-forms.{name}"), || {
            let printed = printed_forms(&builds[idx], power);
            let found = generator_images(&builds[idx], &auts[idx]);
            let ok = printed == found;
            let actual = if ok {
                format!(
                    "enumeration gives exactly the {} listed automorphisms",
                    found.len()
                )
            } else {
                let missing = printed.difference(&found).count();
                let extra = found.difference(&printed).count();
                format!(
                    "{} enumerated; {missing} listed forms missing, {extra} unlisted",
                    found.len()
                )
            };
            Ok(outcome(
                ok,
                format!("{} automorphisms of the listed form", printed.len()),
                actual,
            ))
        }));
    }

    out.push(timed("z8.aut-dihedral-split".into(), || {
        let sd = &builds[3];
        let a = &auts[3];
        let (r, s) = (sd.pair(1, 0), sd.pair(0, 1));
        let listed: BTreeSet<(usize, usize)> = [1, 3, 5, 7]
            .iter()
            .flat_map(|&i| [0, 2, 4, 6].map(|k| (sd.pair(i, 0), sd.pair(k, 1))))
            .collect();
        let w = Subgroup::new(
            a.table(),
            a.elements()
                .iter()
                .enumerate()
                .filter(|(_, m)| listed.contains(&(m.apply(r), m.apply(s))))
                .map(|(x, _)| x),
        )?;
        let target = z2_x_d4(limits)?;
        let (wt, _) = a.table().subgroup_table(&w)?;
        let normal = a.table().is_normal(&w)?;
        let iso = are_isomorphic_with(&wt, &target, limits)?.is_some();
        let split = normal && recognize_split(a.table(), &w)?.is_some();
        let ok = w.len() * 2 == a.len() && normal && iso && split;
        let actual = format!(
            "|W| = {}, normal: {normal}, ≅ Z2 x D4: {iso}, complement found: {split}",
            w.len()
        );
        Ok(outcome(
            ok,
            "index-2 normal W ≅ Z2 x D4 in Aut(D8) with a complement",
            actual,
        ))
    }));
    out
}

/// Equivalent actions give isomorphic semidirect products.
pub fn check_action_equivalence(max_m: usize, max_n: usize, limits: &Limits) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            out.push(timed(format!("action-classes.m={m},n={n}"), || {
                let (k, h) = (z(m, limits)?, cyclic_with_symbol(n, limits)?);
                let classes = action_classes_with(&h, &k, limits)?;
                let mut bad = 0;
                for class in &classes {
                    let first = Semidirect::new_with(&k, &h, &class[0], limits)?;
                    for psi in &class[1..] {
                        let other = Semidirect::new_with(&k, &h, psi, limits)?;
                        if are_isomorphic_with(first.table(), other.table(), limits)?.is_none() {
                            bad += 1;
                        }
                    }
                }
                let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
                let actual = format!(
                    "{} classes with sizes {sizes:?}; {bad} non-isomorphic members",
                    classes.len()
                );
                Ok(outcome(
                    bad == 0,
                    "members of each class give isomorphic products",
                    actual,
                ))
            }));
        }
    }
    out
}

fn cyclic_with_symbol(n: usize, limits: &Limits) -> Result<GroupTable, Error> {
    holomorph_core::construct::cyclic_named(n, "s", limits)
}

/// Copy of the first factor inside `K × H`.
fn first_factor(k: &GroupTable, h: &GroupTable, g: &GroupTable) -> Result<Subgroup, Error> {
    Subgroup::new(
        g,
        k.elements()
            .map(|x| encode_pair(x, h.identity(), h.order())),
    )
}

fn second_factor(k: &GroupTable, h: &GroupTable, g: &GroupTable) -> Result<Subgroup, Error> {
    Subgroup::new(
        g,
        h.elements()
            .map(|y| encode_pair(k.identity(), y, h.order())),
    )
}

/// Small named groups for the characteristic-subgroup checks.
fn battery(limits: &Limits) -> Result<Vec<(String, GroupTable)>, Error> {
    let z = |n| z(n, limits);
    let klein = product(&z(2)?, &z(2)?, limits)?;
    let z3sq = product(&z(3)?, &z(3)?, limits)?;
    let z2cube = product(&klein, &z(2)?, limits)?;
    Ok(vec![
        ("Z2".into(), z(2)?),
        ("Z3".into(), z(3)?),
        ("Z4".into(), z(4)?),
        ("Z5".into(), z(5)?),
        ("Z7".into(), z(7)?),
        ("Z2 x Z2".into(), klein),
        ("Z3 x Z3".into(), z3sq),
        ("Z2 x Z2 x Z2".into(), z2cube),
        ("D3".into(), dihedral_with(3, limits)?),
        ("D5".into(), dihedral_with(5, limits)?),
    ])
}

fn is_central(psi: &Action, k: &GroupTable, aut_k: &[Morphism]) -> Result<bool, Error> {
    for m in psi.maps() {
        let m = Morphism::new(k, k, m.clone())?;
        if aut_k.iter().any(|a| a.compose(&m) != m.compose(a)) {
            return Ok(false);
        }
    }
    Ok(true)
}

struct LiftTally {
    zeta_cases: usize,
    zeta_bad: usize,
    lambda_cases: usize,
    lambda_bad: usize,
}

/// Applies the two lift criteria to every action of `H` on `K`.
fn tally_lifts(
    k: &GroupTable,
    h: &GroupTable,
    tally: &mut LiftTally,
    limits: &Limits,
) -> Result<(), Error> {
    let aut_k = automorphisms_with(k, limits)?;
    let aut_h = automorphisms_with(h, limits)?;
    for psi in actions_with(h, k, limits)? {
        let sd = Semidirect::new_with(k, h, &psi, limits)?;
        if is_central(&psi, k, &aut_k)? {
            tally.zeta_cases += 1;
            for omega in &aut_k {
                if !zeta_lift(&sd, omega)?.homomorphic {
                    tally.zeta_bad += 1;
                }
            }
        }
        if aut_h.iter().all(|d| psi.precompose(d) == psi) {
            tally.lambda_cases += 1;
            for delta in &aut_h {
                if !lambda_lift(&sd, delta)?.homomorphic {
                    tally.lambda_bad += 1;
                }
            }
        }
    }
    Ok(())
}

/// Characteristic normal factors, automorphism groups of coprime products,
/// the product biconditional and the two lift criteria.
pub fn check_characteristic_subgroups(max_order: usize, limits: &Limits) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    let coprime: Vec<(usize, usize)> = (2..=max_order / 2)
        .flat_map(|m| (2..=max_order / m).map(move |n| (m, n)))
        .filter(|&(m, n)| gcd(m as u64, n as u64) == 1)
        .collect();

    for &(m, n) in &coprime {
        out.push(timed(
            format!("char-cyclic-normal-factor.m={m},n={n}"),
            || {
                let (k, h) = (z(m, limits)?, cyclic_with_symbol(n, limits)?);
                let acts = actions_with(&h, &k, limits)?;
                let mut bad = 0;
                for psi in &acts {
                    let sd = Semidirect::new_with(&k, &h, psi, limits)?;
                    if !is_characteristic_with(sd.table(), &sd.k_copy(), limits)? {
                        bad += 1;
                    }
                }
                Ok(outcome(
                    bad == 0,
                    format!("Z{m} characteristic under every action of Z{n}"),
                    format!("{} actions, {bad} where it is not", acts.len()),
                ))
            },
        ));
    }
    for &(m, n) in coprime.iter().filter(|(m, n)| m < n) {
        out.push(timed(
            format!("aut-coprime-cyclic-product.m={m},n={n}"),
            || {
                let g = product(&z(m, limits)?, &cyclic_with_symbol(n, limits)?, limits)?;
                let a = aut_group_with(&g, limits)?;
                let am = aut_group_with(&z(m, limits)?, limits)?;
                let an = aut_group_with(&z(n, limits)?, limits)?;
                let target = product(am.table(), an.table(), limits)?;
                let iso = are_isomorphic_with(a.table(), &target, limits)?.is_some();
                let ok = iso && a.len() == am.len() * an.len();
                Ok(outcome(
                    ok,
                    format!(
                        "Aut(Z{m} x Z{n}) ≅ Aut(Z{m}) x Aut(Z{n}), order {}",
                        am.len() * an.len()
                    ),
                    format!(
                        "order {}, {}",
                        a.len(),
                        if iso {
                            "verified isomorphism"
                        } else {
                            "not isomorphic"
                        }
                    ),
                ))
            },
        ));
    }

    let groups = match battery(limits) {
        Ok(g) => g,
        Err(e) => {
            out.push(timed("char.battery".into(), || Err(e)));
            return out;
        }
    };
    let noncyclic = |g: &GroupTable| !g.order_spectrum().contains_key(&g.order());
    for (kn, k) in &groups {
        for (hn, h) in &groups {
            let coprime = gcd(k.order() as u64, h.order() as u64) == 1;
            if !coprime || k.order() * h.order() > max_order || !(noncyclic(k) || noncyclic(h)) {
                continue;
            }
            out.push(timed(format!("char-normal-factor.k={kn},h={hn}"), || {
                let acts = actions_with(h, k, limits)?;
                let mut bad = 0;
                for psi in &acts {
                    let sd = Semidirect::new_with(k, h, psi, limits)?;
                    if !is_characteristic_with(sd.table(), &sd.k_copy(), limits)? {
                        bad += 1;
                    }
                }
                Ok(outcome(
                    bad == 0,
                    format!("{kn} characteristic under every action of {hn}"),
                    format!("{} actions, {bad} where it is not", acts.len()),
                ))
            }));
            if k.order() < h.order() || (k.order() == h.order() && kn < hn) {
                out.push(timed(format!("aut-coprime-product.k={kn},h={hn}"), || {
                    let g = product(k, h, limits)?;
                    let a = aut_group_with(&g, limits)?;
                    let target = product(
                        aut_group_with(k, limits)?.table(),
                        aut_group_with(h, limits)?.table(),
                        limits,
                    )?;
                    let iso = are_isomorphic_with(a.table(), &target, limits)?.is_some();
                    Ok(outcome(
                        iso,
                        format!("Aut({kn} x {hn}) ≅ Aut({kn}) x Aut({hn})"),
                        if iso {
                            "verified isomorphism"
                        } else {
                            "not isomorphic"
                        },
                    ))
                }));
            }
        }
    }

    let pairs: [(&str, &str); 8] = [
        ("Z4", "Z2"),
        ("Z2", "Z2"),
        ("Z3", "Z3"),
        ("Z2", "D3"),
        ("Z3", "Z4"),
        ("Z2 x Z2", "Z3"),
        ("Z2", "Z2 x Z2"),
        ("D3", "Z5"),
    ];
    let lookup = |name: &str| {
        groups
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
            .expect("battery member")
    };
    let mut failing_direction = false;
    for (kn, hn) in pairs {
        let (k, h) = (lookup(kn), lookup(hn));
        if k.order() * h.order() > max_order {
            continue;
        }
        let report = timed(format!("char-product-biconditional.k={kn},h={hn}"), || {
            let g = product(k, h, limits)?;
            let ck = is_characteristic_with(&g, &first_factor(k, h, &g)?, limits)?;
            let ch = is_characteristic_with(&g, &second_factor(k, h, &g)?, limits)?;
            let a = aut_group_with(&g, limits)?;
            let target = product(
                aut_group_with(k, limits)?.table(),
                aut_group_with(h, limits)?.table(),
                limits,
            )?;
            let iso = are_isomorphic_with(a.table(), &target, limits)?.is_some();
            Ok(outcome(
                iso == (ck && ch),
                "Aut(K x H) ≅ Aut(K) x Aut(H) iff both factors characteristic",
                format!("factors characteristic: {ck}, {ch}; isomorphic: {iso}"),
            ))
        });
        if report.passed() && report.actual.contains("isomorphic: false") {
            failing_direction = true;
        }
        out.push(report);
    }
    out.push(VerifyReport {
        claim: "char-product-biconditional.negative-case".into(),
        status: if failing_direction {
            Status::Pass
        } else {
            Status::Fail
        },
        expected: "at least one product where both sides are false".into(),
        actual: if failing_direction {
            "present".into()
        } else {
            "absent".into()
        },
        elapsed: Duration::ZERO,
    });

    out.push(timed("lift-criteria".into(), || {
        let mut tally = LiftTally { zeta_cases: 0, zeta_bad: 0, lambda_cases: 0, lambda_bad: 0 };
        for m in 2..=max_order / 2 {
            for n in 2..=max_order / m {
                tally_lifts(&z(m, limits)?, &cyclic_with_symbol(n, limits)?, &mut tally, limits)?;
            }
        }
        for (_, k) in &groups {
            for (_, h) in &groups {
                if k.order() * h.order() <= max_order.min(24) {
                    tally_lifts(k, h, &mut tally, limits)?;
                }
            }
        }
        Ok(outcome(
            tally.zeta_bad == 0 && tally.lambda_bad == 0,
            "every lift is an automorphism when its criterion holds",
            format!(
                "central image: {} actions, {} failing lifts; Aut(H)-invariant: {} actions, {} failing lifts",
                tally.zeta_cases, tally.zeta_bad, tally.lambda_cases, tally.lambda_bad
            ),
        ))
    }));
    out
}

/// Group axioms on a handful of constructed tables.
pub fn check_constructed_axioms(limits: &Limits, fault: Option<Fault>) -> Vec<VerifyReport> {
    let builds: [(&str, Build); 5] = [
        ("Z12", |l| z(12, l)),
        ("D6", |l| dihedral_with(6, l)),
        ("Hol7", |l| Ok(holomorph_semidirect(7, l)?.into_table())),
        ("Z8 : Z2 [r^3]", |l| {
            Ok(semidirect_cyclic_with(8, 2, 3, l)?.into_table())
        }),
        ("Aut(D4)", |l| {
            Ok(aut_group_with(&dihedral_with(4, l)?, l)?.table().clone())
        }),
    ];
    builds
        .iter()
        .enumerate()
        .map(|(idx, &(name, build))| {
            timed(format!("group-axioms.{name}"), || {
                let g = build(limits)?;
                let mut rows = g.rows();
                if idx == 0 && fault == Some(Fault::CorruptedTable) {
                    rows[1].swap(0, 1);
                }
                let result = verify_group_axioms(&rows, g.identity());
                let actual = match &result {
                    Ok(()) => "all axioms hold".to_string(),
                    Err(v) => format!("violation: {v}"),
                };
                Ok(outcome(
                    result.is_ok(),
                    "closure, identity, inverses, associativity",
                    actual,
                ))
            })
        })
        .collect()
}

/// Every check with the configured ranges, in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> (Vec<VerifyReport>, Summary) {
    let start = Instant::now();
    let l = &cfg.limits;
    let mut reports = Vec::new();
    reports.extend(check_constructed_axioms(l, cfg.fault));
    reports.extend(check_aut_zn_z2_orders(cfg.zn_z2_max_n, l, cfg.fault));
    reports.extend(check_aut_zn_mod4_structure(&cfg.mod4_values, l));
    reports.extend(check_prime_power_aut(&cfg.prime_powers, l));
    reports.extend(check_elementary_abelian_aut(&cfg.elementary, l));
    reports.extend(check_dihedral_aut(cfg.dihedral_max_n, l));
    reports.extend(check_z8_case_study(l));
    reports.extend(check_action_equivalence(
        cfg.action_max_m,
        cfg.action_max_n,
        l,
    ));
    reports.extend(check_characteristic_subgroups(
        cfg.characteristic_max_order,
        l,
    ));
    let summary = Summary::of(&reports, start.elapsed());
    (reports, summary)
}

#[derive(Serialize)]
struct ReportJson<'a> {
    claim: &'a str,
    status: &'static str,
    expected: &'a str,
    actual: &'a str,
    ms: f64,
}

pub fn reports_to_json(reports: &[VerifyReport]) -> String {
    let rows: Vec<ReportJson<'_>> = reports
        .iter()
        .map(|r| ReportJson {
            claim: &r.claim,
            status: match r.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped(_) => "skipped",
            },
            expected: &r.expected,
            actual: &r.actual,
            ms: r.elapsed.as_secs_f64() * 1000.0,
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("reports always serialize")
}
