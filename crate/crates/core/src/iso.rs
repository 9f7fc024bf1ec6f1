//! Isomorphism testing, abelian invariant factors and catalog identification.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::construct::{cyclic, dihedral, direct_product_with, semidirect_cyclic_with};
use crate::group::{GroupTable, Limits, Morphism};
use crate::numth;
use crate::search::{GeneratorPlan, MorphismSearch};
use crate::{Error, Result};

/// Cheap isomorphism invariants, compared in this order before any search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub order: usize,
    pub abelian: bool,
    pub spectrum: BTreeMap<usize, usize>,
    pub center: usize,
    pub derived: usize,
}

impl Invariants {
    pub fn of(g: &GroupTable) -> Self {
        let abelian = g.is_abelian();
        Invariants {
            order: g.order(),
            abelian,
            spectrum: g.order_spectrum(),
            center: if abelian { g.order() } else { g.center().len() },
            derived: if abelian {
                1
            } else {
                g.derived_subgroup().len()
            },
        }
    }
}

/// Per-element signature preserved by isomorphisms: order and centralizer size.
fn signatures(g: &GroupTable) -> Vec<(usize, usize)> {
    let orders = g.element_orders();
    g.elements()
        .map(|x| (orders[x], g.centralizer_size(x)))
        .collect()
}

/// An isomorphism `a -> b` if one exists. The returned witness is checked
/// against the full tables before it is handed out.
pub fn are_isomorphic(a: &GroupTable, b: &GroupTable) -> Result<Option<Morphism>> {
    are_isomorphic_with(a, b, &Limits::default())
}

pub fn are_isomorphic_with(
    a: &GroupTable,
    b: &GroupTable,
    limits: &Limits,
) -> Result<Option<Morphism>> {
    limits.check_order(a.order())?;
    limits.check_order(b.order())?;
    if a.order() != b.order() || Invariants::of(a) != Invariants::of(b) {
        return Ok(None);
    }
    Ok(isomorphism_search(a, b))
}

/// Backtracking over generator images; assumes equal orders.
fn isomorphism_search(a: &GroupTable, b: &GroupTable) -> Option<Morphism> {
    let plan = GeneratorPlan::new(a);
    let sa = signatures(a);
    let sb = signatures(b);
    let candidates = plan
        .generators()
        .iter()
        .map(|&g| b.elements().filter(|&t| sb[t] == sa[g]).collect())
        .collect();
    let search = MorphismSearch {
        plan: &plan,
        src: a,
        tgt: b,
        injective: true,
        candidates,
    };
    let found = search.run(&mut |img: &[usize]| ControlFlow::Break(img.to_vec()))?;
    Some(Morphism::isomorphism(a, b, found).expect("search produced a non-isomorphism"))
}

/// Invariant factors `d_1 | d_2 | ... | d_k`, all at least 2, with
/// `G ≅ Z_{d_1} × ... × Z_{d_k}`.
///
/// An element of maximal order in a finite abelian group generates a direct
/// summand, so the factors are found by splitting one off and recursing on
/// the quotient.
pub fn abelian_invariants(g: &GroupTable) -> Result<Vec<usize>> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut factors = Vec::new();
    let mut cur = g.clone();
    while cur.order() > 1 {
        let orders = cur.element_orders();
        let (x, &d) = orders
            .iter()
            .enumerate()
            .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
            .expect("non-trivial group");
        factors.push(d);
        let n = cur.subgroup_generated(&[x])?;
        cur = cur.quotient(&n)?;
    }
    factors.reverse();
    let rebuilt = abelian_from_factors(
        &factors,
        &Limits {
            max_order: g.order().max(1),
            ..Limits::default()
        },
    )?;
    assert!(
        isomorphism_search(&rebuilt, g).is_some(),
        "invariant factors {factors:?} do not reconstruct the group"
    );
    Ok(factors)
}

fn abelian_from_factors(factors: &[usize], limits: &Limits) -> Result<GroupTable> {
    let mut t = cyclic(1)?;
    for &d in factors {
        t = direct_product_with(&t, &crate::construct::cyclic_named(d, "r", limits)?, limits)?;
    }
    Ok(t)
}

/// A name from the small catalog of constructible groups.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogName {
    Cyclic(usize),
    /// Non-cyclic abelian group by invariant factors.
    AbelianProduct(Vec<usize>),
    Dihedral(usize),
    /// Direct product of named factors, ordered by size then display.
    Product(Vec<CatalogName>),
    /// `Z_m ⋊ Z_n` with the generator of `Z_n` acting by `r -> r^i`.
    SemidirectCyclic {
        m: usize,
        n: usize,
        i: usize,
    },
    Unidentified(usize),
}

impl CatalogName {
    pub fn kind(&self) -> &'static str {
        match self {
            CatalogName::Cyclic(_) => "cyclic",
            CatalogName::AbelianProduct(_) => "abelian-product",
            CatalogName::Dihedral(_) => "dihedral",
            CatalogName::Product(_) => "product-of-named",
            CatalogName::SemidirectCyclic { .. } => "semidirect-cyclic",
            CatalogName::Unidentified(_) => "unidentified",
        }
    }

    pub fn group_order(&self) -> usize {
        match self {
            CatalogName::Cyclic(n) | CatalogName::Unidentified(n) => *n,
            CatalogName::AbelianProduct(ds) => ds.iter().product(),
            CatalogName::Dihedral(n) => 2 * n,
            CatalogName::Product(fs) => fs.iter().map(CatalogName::group_order).product(),
            CatalogName::SemidirectCyclic { m, n, .. } => m * n,
        }
    }

    pub fn is_identified(&self) -> bool {
        !matches!(self, CatalogName::Unidentified(_))
    }

    /// Builds a representative; `None` for [`CatalogName::Unidentified`].
    pub fn build(&self) -> Result<Option<GroupTable>> {
        self.build_with(&Limits::default())
    }

    pub fn build_with(&self, limits: &Limits) -> Result<Option<GroupTable>> {
        Ok(Some(match self {
            CatalogName::Cyclic(n) => crate::construct::cyclic_named(*n, "r", limits)?,
            CatalogName::AbelianProduct(ds) => abelian_from_factors(ds, limits)?,
            CatalogName::Dihedral(n) => crate::construct::dihedral_with(*n, limits)?,
            CatalogName::Product(fs) => {
                let mut t = cyclic(1)?;
                for f in fs {
                    let Some(ft) = f.build_with(limits)? else {
                        return Ok(None);
                    };
                    t = direct_product_with(&t, &ft, limits)?;
                }
                t
            }
            CatalogName::SemidirectCyclic { m, n, i } => {
                semidirect_cyclic_with(*m, *n, *i as u64, limits)?.into_table()
            }
            CatalogName::Unidentified(_) => return Ok(None),
        }))
    }

    fn sort_key(&self) -> (usize, String) {
        (self.group_order(), format!("{self}"))
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::Cyclic(n) => write!(f, "Z{n}"),
            CatalogName::AbelianProduct(ds) => {
                for (i, d) in ds.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "Z{d}")?;
                }
                Ok(())
            }
            CatalogName::Dihedral(n) => write!(f, "D{n}"),
            CatalogName::Product(fs) => {
                for (i, c) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            CatalogName::SemidirectCyclic { m, n, i } => write!(f, "Z{m} : Z{n} [r^{i}]"),
            CatalogName::Unidentified(n) => write!(f, "unidentified({n})"),
        }
    }
}

/// Largest order for which direct-factor and semidirect-cyclic candidates are
/// tried.
pub const CATALOG_SEARCH_MAX_ORDER: usize = 128;

/// Names `g` by the first matching family: cyclic, abelian product,
/// dihedral, direct product of named factors, `Z_m ⋊ Z_n` (smallest
/// `(m, n, i)`), and otherwise unidentified.
pub fn identify(g: &GroupTable) -> Result<CatalogName> {
    identify_with(g, &Limits::default())
}

pub fn identify_with(g: &GroupTable, limits: &Limits) -> Result<CatalogName> {
    limits.check_order(g.order())?;
    let n = g.order();
    let inv = Invariants::of(g);
    if inv.spectrum.contains_key(&n) {
        return Ok(CatalogName::Cyclic(n));
    }
    if inv.abelian {
        return Ok(CatalogName::AbelianProduct(abelian_invariants(g)?));
    }
    let matches = |cand: &GroupTable| -> bool {
        Invariants::of(cand) == inv && isomorphism_search(cand, g).is_some()
    };
    if n.is_multiple_of(2) && n >= 6 && matches(&dihedral(n / 2)?) {
        return Ok(CatalogName::Dihedral(n / 2));
    }
    if n > CATALOG_SEARCH_MAX_ORDER {
        return Ok(CatalogName::Unidentified(n));
    }
    if let Some(name) = direct_factorization(g, limits)? {
        return Ok(name);
    }
    for m in 2..=n / 2 {
        if !n.is_multiple_of(m) {
            continue;
        }
        let k = n / m;
        for i in 2..m {
            match numth::multiplicative_order(i as u64, m as u64) {
                Some(ord) if (k as u64).is_multiple_of(ord) => {}
                _ => continue,
            }
            let cand = semidirect_cyclic_with(m, k, i as u64, limits)?;
            if matches(cand.table()) {
                return Ok(CatalogName::SemidirectCyclic { m, n: k, i });
            }
        }
    }
    Ok(CatalogName::Unidentified(n))
}

/// Best decomposition `G = N_1 × N_2` into two non-trivial normal subgroups
/// whose factors are both identified. Nested products are flattened and
/// factors sorted by size then display; among decompositions the smallest
/// factor list wins.
fn direct_factorization(g: &GroupTable, limits: &Limits) -> Result<Option<CatalogName>> {
    let normals = g.normal_subgroups();
    let n = g.order();
    let mut best: Option<Vec<CatalogName>> = None;
    let mut cache: BTreeMap<Vec<usize>, CatalogName> = BTreeMap::new();
    let mut name_of = |s: &crate::group::Subgroup| -> Result<CatalogName> {
        if let Some(c) = cache.get(s.members()) {
            return Ok(c.clone());
        }
        let (t, _) = g.subgroup_table(s)?;
        let c = identify_with(&t, limits)?;
        cache.insert(s.members().to_vec(), c.clone());
        Ok(c)
    };
    for (i, a) in normals.iter().enumerate() {
        if a.is_trivial() || a.len() * a.len() > n {
            continue;
        }
        for b in &normals[i..] {
            if a.len() * b.len() != n || !a.intersection(b).is_trivial() {
                continue;
            }
            let (na, nb) = (name_of(a)?, name_of(b)?);
            if !na.is_identified() || !nb.is_identified() {
                continue;
            }
            let mut factors = Vec::new();
            for c in [na, nb] {
                match c {
                    CatalogName::Product(fs) => factors.extend(fs),
                    other => factors.push(other),
                }
            }
            factors.sort_by_key(CatalogName::sort_key);
            let keyed: Vec<_> = factors.iter().map(CatalogName::sort_key).collect();
            let better = match &best {
                None => true,
                Some(b) => keyed < b.iter().map(CatalogName::sort_key).collect::<Vec<_>>(),
            };
            if better {
                best = Some(factors);
            }
        }
    }
    Ok(best.map(CatalogName::Product))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::aut_group;
    use crate::construct::{direct_product, semidirect_cyclic};
    use alloc::vec;

    fn z(n: usize) -> GroupTable {
        cyclic(n).unwrap()
    }

    #[test]
    fn iso_examples() {
        let p = direct_product(&z(2), &z(3)).unwrap();
        let w = are_isomorphic(&z(6), &p).unwrap().unwrap();
        assert!(w.is_bijective(6));
        let klein = direct_product(&z(2), &z(2)).unwrap();
        assert!(are_isomorphic(&z(4), &klein).unwrap().is_none());
        let sigma = semidirect_cyclic(8, 2, 3).unwrap();
        let tau = semidirect_cyclic(8, 2, 5).unwrap();
        assert!(are_isomorphic(sigma.table(), tau.table())
            .unwrap()
            .is_none());
        assert!(are_isomorphic(&z(3), &z(4)).unwrap().is_none());
    }

    #[test]
    fn invariant_factor_examples() {
        assert_eq!(abelian_invariants(&z(6)).unwrap(), vec![6]);
        assert_eq!(abelian_invariants(&z(1)).unwrap(), Vec::<usize>::new());
        let klein = direct_product(&z(2), &z(2)).unwrap();
        assert_eq!(abelian_invariants(&klein).unwrap(), vec![2, 2]);
        let a8 = aut_group(&z(8)).unwrap();
        assert_eq!(abelian_invariants(a8.table()).unwrap(), vec![2, 2]);
        let g = direct_product(&direct_product(&z(4), &z(6)).unwrap(), &z(3)).unwrap();
        assert_eq!(abelian_invariants(&g).unwrap(), vec![6, 12]);
        assert_eq!(
            abelian_invariants(&dihedral(3).unwrap()),
            Err(Error::NotAbelian)
        );
    }

    #[test]
    fn identify_examples() {
        assert_eq!(identify(&z(1)).unwrap(), CatalogName::Cyclic(1));
        let z4z2 = direct_product(&z(4), &z(2)).unwrap();
        assert_eq!(
            identify(aut_group(&z4z2).unwrap().table()).unwrap(),
            CatalogName::Dihedral(4)
        );
        let z8z2 = direct_product(&z(8), &z(2)).unwrap();
        let name = identify(aut_group(&z8z2).unwrap().table()).unwrap();
        assert_eq!(format!("{name}"), "Z2 x D4");
        assert_eq!(name.kind(), "product-of-named");
        let tau = semidirect_cyclic(8, 2, 5).unwrap();
        assert_eq!(
            format!("{}", identify(tau.table()).unwrap()),
            "Z8 : Z2 [r^5]"
        );
        assert_eq!(format!("{}", identify(&z4z2).unwrap()), "Z2 x Z4");
        let dic3 = semidirect_cyclic(3, 4, 2).unwrap();
        assert_eq!(
            format!("{}", identify(dic3.table()).unwrap()),
            "Z3 : Z4 [r^2]"
        );
    }

    #[test]
    fn catalog_build_round_trip() {
        for name in [
            CatalogName::Cyclic(5),
            CatalogName::AbelianProduct(vec![2, 4]),
            CatalogName::Dihedral(5),
            CatalogName::Product(vec![CatalogName::Cyclic(2), CatalogName::Dihedral(4)]),
            CatalogName::SemidirectCyclic { m: 8, n: 2, i: 3 },
        ] {
            let g = name.build().unwrap().unwrap();
            assert_eq!(g.order(), name.group_order());
            assert_eq!(identify(&g).unwrap(), name);
        }
        assert_eq!(CatalogName::Unidentified(32).build().unwrap(), None);
    }
}
