//! Automorphism enumeration, `Aut(G)` as a group in its own right, and the
//! lifts of factor automorphisms into a semidirect product.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::construct::Semidirect;
use crate::group::{homomorphism_defect, is_homomorphism, GroupTable, Limits, Morphism, Subgroup};
use crate::numth;
use crate::search::{GeneratorPlan, MorphismSearch};
use crate::{Error, Result};

/// `(p, m)` when `g` is `(Z_p)^m` with `m >= 1`.
pub fn elementary_abelian_rank(g: &GroupTable) -> Option<(usize, u32)> {
    if g.order() < 2 || !g.is_abelian() {
        return None;
    }
    let f = numth::factorize(g.order() as u64).ok()?;
    let &[(p, m)] = f.factors() else { return None };
    let p = p as usize;
    g.elements()
        .filter(|&x| x != g.identity())
        .all(|x| g.order_of(x) == p)
        .then_some((p, m))
}

/// All automorphisms of `g`, sorted lexicographically by image array (the
/// identity map comes first).
pub fn automorphisms(g: &GroupTable) -> Result<Vec<Morphism>> {
    automorphisms_with(g, &Limits::default())
}

pub fn automorphisms_with(g: &GroupTable, limits: &Limits) -> Result<Vec<Morphism>> {
    let plan = GeneratorPlan::new(g);
    automorphisms_with_plan(g, &plan, limits)
}

fn automorphisms_with_plan(
    g: &GroupTable,
    plan: &GeneratorPlan,
    limits: &Limits,
) -> Result<Vec<Morphism>> {
    limits.check_order(g.order())?;
    if let Some((p, rank)) = elementary_abelian_rank(g) {
        let count = numth::elementary_abelian_aut_order(p as u64, rank).unwrap_or(u64::MAX);
        if count > limits.max_aut as u64 {
            return Err(Error::ElementaryAbelianCap {
                p,
                rank,
                count,
                limit: limits.max_aut,
            });
        }
    }
    let orders = g.element_orders();
    let candidates = plan
        .generators()
        .iter()
        .map(|&x| g.elements().filter(|&t| orders[t] == orders[x]).collect())
        .collect();
    let search = MorphismSearch {
        plan,
        src: g,
        tgt: g,
        injective: true,
        candidates,
    };
    let limit = limits.max_aut;
    let mut out = Vec::new();
    let over = search.run(&mut |img: &[usize]| {
        if out.len() >= limit {
            return ControlFlow::Break(());
        }
        out.push(Morphism::trusted(img.to_vec()));
        ControlFlow::Continue(())
    });
    if over.is_some() {
        return Err(Error::AutCap {
            at_least: limit as u64 + 1,
            limit,
        });
    }
    out.sort();
    Ok(out)
}

/// `Aut(G)` under composition: `table.mul(i, j)` is `elements[i] ∘ elements[j]`.
#[derive(Debug, Clone)]
pub struct AutGroup {
    generators: Vec<usize>,
    elements: Vec<Morphism>,
    table: GroupTable,
    by_key: BTreeMap<Vec<usize>, usize>,
}

impl AutGroup {
    pub fn elements(&self) -> &[Morphism] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Morphism {
        &self.elements[i]
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Generating sequence of the base group the automorphisms are keyed by.
    pub fn base_generators(&self) -> &[usize] {
        &self.generators
    }

    /// Index of an automorphism of the base group in this table.
    pub fn index_of(&self, m: &Morphism) -> Option<usize> {
        let key: Vec<usize> = self.generators.iter().map(|&g| m.apply(g)).collect();
        let i = *self.by_key.get(&key)?;
        (self.elements[i] == *m).then_some(i)
    }

    /// The automorphism fixed by where it sends the base generators.
    pub fn index_by_generator_images(&self, images: &[usize]) -> Option<usize> {
        self.by_key.get(images).copied()
    }
}

pub fn aut_group(g: &GroupTable) -> Result<AutGroup> {
    aut_group_with(g, &Limits::default())
}

pub fn aut_group_with(g: &GroupTable, limits: &Limits) -> Result<AutGroup> {
    let plan = GeneratorPlan::new(g);
    let elements = automorphisms_with_plan(g, &plan, limits)?;
    limits.check_order(elements.len())?;
    let gens = plan.generators().to_vec();
    let key = |m: &Morphism| -> Vec<usize> { gens.iter().map(|&x| m.apply(x)).collect() };
    let by_key: BTreeMap<Vec<usize>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, m)| (key(m), i))
        .collect();
    let names: Vec<String> = elements
        .iter()
        .map(|m| {
            let parts: Vec<&str> = gens.iter().map(|&x| g.name(m.apply(x))).collect();
            format!("[{}]", parts.join(", "))
        })
        .collect();
    let mut scratch = Vec::with_capacity(gens.len());
    let mut mul = Vec::with_capacity(elements.len() * elements.len());
    for a in &elements {
        for b in &elements {
            scratch.clear();
            scratch.extend(gens.iter().map(|&x| a.apply(b.apply(x))));
            mul.push(by_key[&scratch]);
        }
    }
    let n = elements.len();
    let table = GroupTable::build(n, 0, names, |i, j| mul[i * n + j]);
    Ok(AutGroup {
        generators: gens,
        elements,
        table,
        by_key,
    })
}

/// Whether every automorphism maps `c` onto itself.
pub fn is_characteristic(g: &GroupTable, c: &Subgroup) -> Result<bool> {
    is_characteristic_with(g, c, &Limits::default())
}

pub fn is_characteristic_with(g: &GroupTable, c: &Subgroup, limits: &Limits) -> Result<bool> {
    if c.parent_order() != g.order() {
        return Err(Error::ParentMismatch {
            expected: g.order(),
            found: c.parent_order(),
        });
    }
    Ok(automorphisms_with(g, limits)?
        .iter()
        .all(|m| m.preserves(c)))
}

/// A candidate self-map of a semidirect product and whether it is an
/// automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub map: Vec<usize>,
    pub homomorphic: bool,
}

fn check_automorphism(g: &GroupTable, m: &Morphism) -> Result<()> {
    if m.image().len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: m.image().len(),
        });
    }
    if !m.is_bijective(g.order()) {
        return Err(Error::NotBijective);
    }
    if let Some((a, b)) = homomorphism_defect(g, g, m.image()) {
        return Err(Error::NotHomomorphism { a, b });
    }
    Ok(())
}

/// `ζ_ω : (k, h) -> (ω(k), h)`. Always an automorphism when the image of the
/// action lies in the center of `Aut(K)`.
pub fn zeta_lift(product: &Semidirect, omega: &Morphism) -> Result<Lift> {
    check_automorphism(product.normal_factor(), omega)?;
    let map: Vec<usize> = product
        .table()
        .elements()
        .map(|x| {
            let (k, h) = product.split(x);
            product.pair(omega.apply(k), h)
        })
        .collect();
    let homomorphic = is_homomorphism(product.table(), product.table(), &map);
    Ok(Lift { map, homomorphic })
}

/// `λ_δ : (k, h) -> (k, δ(h))`. Always an automorphism when `ψ ∘ δ = ψ`.
pub fn lambda_lift(product: &Semidirect, delta: &Morphism) -> Result<Lift> {
    check_automorphism(product.acting_factor(), delta)?;
    let map: Vec<usize> = product
        .table()
        .elements()
        .map(|x| {
            let (k, h) = product.split(x);
            product.pair(k, delta.apply(h))
        })
        .collect();
    let homomorphic = is_homomorphism(product.table(), product.table(), &map);
    Ok(Lift { map, homomorphic })
}

/// Mixed-pair homomorphism test for maps of the form `kh -> γ(k)φ(h)` between
/// two semidirect products, with `γ` and `φ` homomorphisms: such a map is a
/// homomorphism iff `F(hk) = F(h)F(k)` for all `k ∈ K`, `h ∈ H`.
///
/// Only `|K|·|H|` products are checked instead of `|G|^2`. The caller is
/// responsible for the map having that split form.
pub fn split_form_homomorphic(src: &Semidirect, tgt: &Semidirect, map: &[usize]) -> bool {
    let (k, h) = (src.normal_factor(), src.acting_factor());
    let s = src.table();
    let t = tgt.table();
    k.elements().all(|x| {
        let kx = map[src.pair(x, h.identity())];
        h.elements().all(|y| {
            let hy = src.pair(k.identity(), y);
            let hk = s.mul(hy, src.pair(x, h.identity()));
            map[hk] == t.mul(map[hy], kx)
        })
    })
}
