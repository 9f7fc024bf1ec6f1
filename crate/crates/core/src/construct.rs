//! Group constructors and the homomorphism/action enumerations built on them.
//!
//! Product groups use the pair encoding `(k, h) -> k * |H| + h`, so the first
//! factor varies slowest. Both factors keep their identity at index 0 and so
//! does the product.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::aut::aut_group_with;
use crate::group::{is_homomorphism, GroupTable, Limits, Morphism, Subgroup};
use crate::numth;
use crate::search::{GeneratorPlan, MorphismSearch};
use crate::{Error, Result};

fn power_name(sym: &str, i: usize) -> String {
    match i {
        0 => "e".into(),
        1 => sym.into(),
        _ => format!("{sym}^{i}"),
    }
}

/// `Z_n` as addition mod `n`, with elements named `e, r, r^2, ...`.
pub fn cyclic(n: usize) -> Result<GroupTable> {
    cyclic_named(n, "r", &Limits::default())
}

/// `Z_n` with a custom generator symbol.
pub fn cyclic_named(n: usize, symbol: &str, limits: &Limits) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::Zero);
    }
    limits.check_order(n)?;
    let names = (0..n).map(|i| power_name(symbol, i)).collect();
    Ok(GroupTable::build(n, 0, names, |a, b| (a + b) % n))
}

fn is_permutation(m: &[usize]) -> bool {
    let mut seen = vec![false; m.len()];
    m.iter()
        .all(|&x| x < m.len() && !core::mem::replace(&mut seen[x], true))
}

/// Display name of a pair, dropping identity components.
fn pair_names(k: &GroupTable, h: &GroupTable) -> Vec<String> {
    let mut names = Vec::with_capacity(k.order() * h.order());
    for a in k.elements() {
        for b in h.elements() {
            let name = match (a == k.identity(), b == h.identity()) {
                (true, true) => "e".into(),
                (false, true) => k.name(a).into(),
                (true, false) => h.name(b).into(),
                (false, false) => format!("{}·{}", k.name(a), h.name(b)),
            };
            names.push(name);
        }
    }
    names
}

/// Pair encoding for an element of a product with second factor of order
/// `h_order`.
#[inline]
pub fn encode_pair(k: usize, h: usize, h_order: usize) -> usize {
    k * h_order + h
}

/// Inverse of [`encode_pair`].
#[inline]
pub fn decode_pair(x: usize, h_order: usize) -> (usize, usize) {
    (x / h_order, x % h_order)
}

pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    direct_product_with(a, b, &Limits::default())
}

pub fn direct_product_with(a: &GroupTable, b: &GroupTable, limits: &Limits) -> Result<GroupTable> {
    let nb = b.order();
    let order = a
        .order()
        .checked_mul(nb)
        .ok_or(Error::Overflow("product order"))?;
    limits.check_order(order)?;
    let identity = encode_pair(a.identity(), b.identity(), nb);
    Ok(GroupTable::build(
        order,
        identity,
        pair_names(a, b),
        |x, y| {
            let (xa, xb) = decode_pair(x, nb);
            let (ya, yb) = decode_pair(y, nb);
            encode_pair(a.mul(xa, ya), b.mul(xb, yb), nb)
        },
    ))
}

/// A homomorphism `H -> Aut(K)`, stored as the image array of the
/// automorphism assigned to each element of `H`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Action {
    maps: Vec<Vec<usize>>,
}

impl Action {
    /// Validates every map as an automorphism of `k` and the composition law
    /// `map[h1*h2] = map[h1] ∘ map[h2]`.
    pub fn new(h: &GroupTable, k: &GroupTable, maps: Vec<Vec<usize>>) -> Result<Self> {
        if maps.len() != h.order() {
            return Err(Error::InvalidAction(
                "one automorphism per element of H required",
            ));
        }
        for m in &maps {
            if m.len() != k.order() || m.iter().any(|&x| x >= k.order()) {
                return Err(Error::InvalidAction("map is not a function K -> K"));
            }
            if !is_homomorphism(k, k, m) || !is_permutation(m) {
                return Err(Error::InvalidAction("map is not an automorphism of K"));
            }
        }
        if !maps[h.identity()].iter().enumerate().all(|(i, &x)| i == x) {
            return Err(Error::InvalidAction("identity of H must act trivially"));
        }
        for a in h.elements() {
            for b in h.elements() {
                let ab = &maps[h.mul(a, b)];
                if k.elements().any(|x| ab[x] != maps[a][maps[b][x]]) {
                    return Err(Error::InvalidAction("not a homomorphism H -> Aut(K)"));
                }
            }
        }
        Ok(Action { maps })
    }

    pub(crate) fn trusted(maps: Vec<Vec<usize>>) -> Self {
        Action { maps }
    }

    pub fn trivial(h: &GroupTable, k: &GroupTable) -> Self {
        Action {
            maps: vec![k.elements().collect(); h.order()],
        }
    }

    /// `ψ_h(x)`.
    #[inline]
    pub fn act(&self, h: usize, x: usize) -> usize {
        self.maps[h][x]
    }

    pub fn map(&self, h: usize) -> &[usize] {
        &self.maps[h]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn is_trivial(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.iter().enumerate().all(|(i, &x)| i == x))
    }

    /// `ψ ∘ δ` for an automorphism `δ` of `H`.
    pub fn precompose(&self, delta: &Morphism) -> Action {
        Action {
            maps: delta
                .image()
                .iter()
                .map(|&d| self.maps[d].clone())
                .collect(),
        }
    }
}

/// `K ⋊_ψ H` together with its factors, so element pairs can be addressed.
#[derive(Debug, Clone)]
pub struct Semidirect {
    k: GroupTable,
    h: GroupTable,
    action: Action,
    table: GroupTable,
}

impl Semidirect {
    pub fn new(k: &GroupTable, h: &GroupTable, psi: &Action) -> Result<Self> {
        Self::new_with(k, h, psi, &Limits::default())
    }

    pub fn new_with(k: &GroupTable, h: &GroupTable, psi: &Action, limits: &Limits) -> Result<Self> {
        // Re-validate: an Action carries no record of the groups it was built for.
        let action = Action::new(h, k, psi.maps.clone())?;
        Self::build(k.clone(), h.clone(), action, limits)
    }

    fn build(k: GroupTable, h: GroupTable, action: Action, limits: &Limits) -> Result<Self> {
        let nh = h.order();
        let order = k
            .order()
            .checked_mul(nh)
            .ok_or(Error::Overflow("product order"))?;
        limits.check_order(order)?;
        let identity = encode_pair(k.identity(), h.identity(), nh);
        let table = GroupTable::build(order, identity, pair_names(&k, &h), |x, y| {
            let (xk, xh) = decode_pair(x, nh);
            let (yk, yh) = decode_pair(y, nh);
            encode_pair(k.mul(xk, action.act(xh, yk)), h.mul(xh, yh), nh)
        });
        Ok(Semidirect {
            k,
            h,
            action,
            table,
        })
    }

    pub fn normal_factor(&self) -> &GroupTable {
        &self.k
    }

    pub fn acting_factor(&self) -> &GroupTable {
        &self.h
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn into_table(self) -> GroupTable {
        self.table
    }

    pub fn pair(&self, k: usize, h: usize) -> usize {
        encode_pair(k, h, self.h.order())
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        decode_pair(x, self.h.order())
    }

    /// Elements `(k, e_H)`.
    pub fn k_copy(&self) -> Subgroup {
        let members = self.k.elements().map(|k| self.pair(k, self.h.identity()));
        Subgroup::new(&self.table, members).expect("K-copy is a subgroup")
    }

    /// Elements `(e_K, h)`.
    pub fn h_copy(&self) -> Subgroup {
        let members = self.h.elements().map(|h| self.pair(self.k.identity(), h));
        Subgroup::new(&self.table, members).expect("H-copy is a subgroup")
    }
}

/// `K ⋊_ψ H` as a bare table. With the trivial action this is the same table
/// as [`direct_product`].
pub fn semidirect(k: &GroupTable, h: &GroupTable, psi: &Action) -> Result<GroupTable> {
    Ok(Semidirect::new(k, h, psi)?.into_table())
}

/// The automorphism `r -> r^i` of `Z_m` as an image array.
pub fn cyclic_power_map(m: usize, i: u64) -> Result<Vec<usize>> {
    if m == 0 {
        return Err(Error::Zero);
    }
    let i = (i % m as u64) as usize;
    if numth::gcd(i as u64, m as u64) != 1 && m != 1 {
        return Err(Error::NotUnit {
            power: i as u64,
            modulus: m as u64,
        });
    }
    Ok((0..m).map(|x| x * i % m).collect())
}

/// `Z_m ⋊ Z_n` where the generator of `Z_n` acts by `r -> r^i`. Elements are
/// named `r^a·s^b`.
pub fn semidirect_cyclic(m: usize, n: usize, i: u64) -> Result<Semidirect> {
    semidirect_cyclic_with(m, n, i, &Limits::default())
}

pub fn semidirect_cyclic_with(m: usize, n: usize, i: u64, limits: &Limits) -> Result<Semidirect> {
    let k = cyclic_named(m, "r", limits)?;
    let h = cyclic_named(n, "s", limits)?;
    let base = cyclic_power_map(m, i)?;
    let ord = numth::multiplicative_order(i % m as u64, m as u64).expect("unit checked above");
    if !(n as u64).is_multiple_of(ord) {
        return Err(Error::ActionOrder {
            power: i % m as u64,
            modulus: m as u64,
            order: ord,
            h_order: n,
        });
    }
    let mut maps = Vec::with_capacity(n);
    let mut cur: Vec<usize> = (0..m).collect();
    for _ in 0..n {
        maps.push(cur.clone());
        cur = cur.iter().map(|&x| base[x]).collect();
    }
    Semidirect::build(k, h, Action::trusted(maps), limits)
}

/// `D_n = Z_n ⋊ Z_2` with `s` acting by inversion; order `2n`.
pub fn dihedral(n: usize) -> Result<GroupTable> {
    dihedral_with(n, &Limits::default())
}

pub fn dihedral_with(n: usize, limits: &Limits) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::Zero);
    }
    Ok(semidirect_cyclic_with(n, 2, n as u64 - 1, limits)?.into_table())
}

/// Every homomorphism `H -> K`, sorted by image array.
pub fn hom_set(h: &GroupTable, k: &GroupTable) -> Result<Vec<Morphism>> {
    hom_set_with(h, k, &Limits::default())
}

pub fn hom_set_with(h: &GroupTable, k: &GroupTable, limits: &Limits) -> Result<Vec<Morphism>> {
    limits.check_order(h.order())?;
    limits.check_order(k.order())?;
    let plan = GeneratorPlan::new(h);
    let k_orders = k.element_orders();
    let candidates = plan
        .generators()
        .iter()
        .map(|&g| {
            let s = h.order_of(g);
            k.elements()
                .filter(|&t| s.is_multiple_of(k_orders[t]))
                .collect()
        })
        .collect();
    let search = MorphismSearch {
        plan: &plan,
        src: h,
        tgt: k,
        injective: false,
        candidates,
    };
    let mut out = Vec::new();
    let limit = limits.max_aut;
    let overflow = search.run(&mut |img: &[usize]| {
        if out.len() >= limit {
            return ControlFlow::Break(());
        }
        out.push(Morphism::trusted(img.to_vec()));
        ControlFlow::Continue(())
    });
    if overflow.is_some() {
        return Err(Error::AutCap {
            at_least: limit as u64 + 1,
            limit,
        });
    }
    out.sort();
    Ok(out)
}

/// Every action of `H` on `K`, one per element of `hom(H, Aut(K))`, sorted
/// lexicographically by their automorphism image arrays.
pub fn actions(h: &GroupTable, k: &GroupTable) -> Result<Vec<Action>> {
    actions_with(h, k, &Limits::default())
}

pub fn actions_with(h: &GroupTable, k: &GroupTable, limits: &Limits) -> Result<Vec<Action>> {
    let aut = aut_group_with(k, limits)?;
    let homs = hom_set_with(h, aut.table(), limits)?;
    // Aut elements are sorted by image array, so sorting homs by image index
    // arrays already gives the lexicographic order on the maps.
    Ok(homs
        .into_iter()
        .map(|m| {
            Action::trusted(
                m.image()
                    .iter()
                    .map(|&a| aut.element(a).image().to_vec())
                    .collect(),
            )
        })
        .collect())
}

/// Partition of `actions(H, K)` into classes of `ψ ~ φ ⟺ ψ = φ ∘ δ` for some
/// `δ ∈ Aut(H)`. Classes are ordered by their first member, members keep
/// the `actions` order.
pub fn action_classes(h: &GroupTable, k: &GroupTable) -> Result<Vec<Vec<Action>>> {
    action_classes_with(h, k, &Limits::default())
}

pub fn action_classes_with(
    h: &GroupTable,
    k: &GroupTable,
    limits: &Limits,
) -> Result<Vec<Vec<Action>>> {
    let all = actions_with(h, k, limits)?;
    let aut_h = crate::aut::automorphisms_with(h, limits)?;
    let index: BTreeMap<&Action, usize> = all.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut class_of = vec![usize::MAX; all.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..all.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        for delta in &aut_h {
            let j = index[&all[i].precompose(delta)];
            if class_of[j] == usize::MAX {
                class_of[j] = c;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    Ok(classes
        .into_iter()
        .map(|c| c.into_iter().map(|i| all[i].clone()).collect())
        .collect())
}

/// `Hol(Z_n) = Z_n ⋊ Aut(Z_n)` under the identity action; order `n·φ(n)`.
pub fn holomorph(n: usize) -> Result<GroupTable> {
    Ok(holomorph_semidirect(n, &Limits::default())?.into_table())
}

pub fn holomorph_semidirect(n: usize, limits: &Limits) -> Result<Semidirect> {
    let k = cyclic_named(n, "r", limits)?;
    let aut = aut_group_with(&k, limits)?;
    let maps = aut.elements().iter().map(|m| m.image().to_vec()).collect();
    Semidirect::build(k, aut.table().clone(), Action::trusted(maps), limits)
}

/// Evidence that `G` splits over a normal subgroup `K`.
#[derive(Debug, Clone)]
pub struct SplitWitness {
    pub normal_part: Subgroup,
    pub complement: Subgroup,
    /// `K ⋊_ψ H` rebuilt from the two subgroup tables with the conjugation
    /// action `ψ_h(k) = h k h^-1`.
    pub product: Semidirect,
    /// Isomorphism `(k, h) -> k·h` from `product` onto `G`.
    pub iso: Morphism,
}

/// Looks for a complement to the normal subgroup `k` and, if one exists,
/// rebuilds `G` as a semidirect product. Returns `None` when `G` does not
/// split over `k`.
pub fn recognize_split(g: &GroupTable, k: &Subgroup) -> Result<Option<SplitWitness>> {
    if !g.is_normal(k)? {
        return Err(Error::NotNormal);
    }
    let target = k.index();
    let Some(complement) = find_complement(g, k, target) else {
        return Ok(None);
    };
    let (k_tab, k_embed) = g.subgroup_table(k)?;
    let (h_tab, h_embed) = g.subgroup_table(&complement)?;
    let mut k_back = vec![usize::MAX; g.order()];
    for (i, &x) in k_embed.iter().enumerate() {
        k_back[x] = i;
    }
    let maps = h_embed
        .iter()
        .map(|&h| k_embed.iter().map(|&x| k_back[g.conjugate(h, x)]).collect())
        .collect();
    let action = Action::new(&h_tab, &k_tab, maps)?;
    let product = Semidirect::build(
        k_tab,
        h_tab,
        action,
        &Limits {
            max_order: g.order(),
            ..Limits::default()
        },
    )?;
    let image = product
        .table()
        .elements()
        .map(|x| {
            let (a, b) = product.split(x);
            g.mul(k_embed[a], h_embed[b])
        })
        .collect();
    let iso = Morphism::isomorphism(product.table(), g, image)?;
    Ok(Some(SplitWitness {
        normal_part: k.clone(),
        complement,
        product,
        iso,
    }))
}

/// Depth-first search over generating sets drawn from outside `k`, keeping
/// only subgroups that meet `k` trivially and whose order divides `target`.
fn find_complement(g: &GroupTable, k: &Subgroup, target: usize) -> Option<Subgroup> {
    let start = Subgroup::trivial(g);
    if target == 1 {
        return Some(start);
    }
    let mut seen = alloc::collections::BTreeSet::new();
    let mut stack = vec![start];
    while let Some(s) = stack.pop() {
        let mut next = Vec::new();
        for x in g.elements() {
            if k.contains(x) || s.contains(x) {
                continue;
            }
            let mut flags = s.flags();
            flags[x] = true;
            let mut gens = s.members().to_vec();
            gens.push(x);
            let size = g.close_flags(&mut flags, &gens);
            if !target.is_multiple_of(size) {
                continue;
            }
            let t = Subgroup::from_flags(g, &flags);
            if !t.intersection(k).is_trivial() {
                continue;
            }
            if size == target {
                return Some(t);
            }
            if seen.insert(t.members().to_vec()) {
                next.push(t);
            }
        }
        // Lowest elements are explored first.
        stack.extend(next.into_iter().rev());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let z6 = cyclic(6).unwrap();
        let spectrum: Vec<_> = z6.order_spectrum().into_iter().collect();
        assert_eq!(spectrum, vec![(1, 1), (2, 1), (3, 2), (6, 2)]);
        assert_eq!(cyclic(8).unwrap().element_order(3).unwrap(), 8);
        assert_eq!(cyclic(0), Err(Error::Zero));
        assert_eq!(cyclic(8).unwrap().name(3), "r^3");
    }

    #[test]
    fn direct_product_examples() {
        let z2 = cyclic(2).unwrap();
        let z3 = cyclic(3).unwrap();
        let p = direct_product(&z2, &z3).unwrap();
        assert!(are_isomorphic(&p, &cyclic(6).unwrap()).unwrap().is_some());
        let d4 = dihedral(4).unwrap();
        let p1 = direct_product(&d4, &cyclic(1).unwrap()).unwrap();
        assert_eq!(p1.rows(), d4.rows());
        let klein = direct_product(&z2, &z2).unwrap();
        assert!(klein
            .elements()
            .skip(1)
            .all(|x| klein.element_order(x).unwrap() == 2));
        let cap = Limits {
            max_order: 10,
            ..Limits::default()
        };
        assert!(direct_product_with(&d4, &z2, &cap).unwrap_err().is_cap());
    }

    #[test]
    fn semidirect_examples() {
        let z8 = cyclic(8).unwrap();
        let z2 = cyclic(2).unwrap();
        let trivial = Action::trivial(&z2, &z8);
        assert_eq!(
            semidirect(&z8, &z2, &trivial).unwrap().rows(),
            direct_product(&z8, &z2).unwrap().rows()
        );
        let sigma = semidirect_cyclic(8, 2, 3).unwrap();
        let (r, s) = (sigma.pair(1, 0), sigma.pair(0, 1));
        let t = sigma.table();
        assert_eq!(t.mul(s, r), t.mul(t.pow(r, 3), s));
        let upsilon = semidirect_cyclic(8, 2, 7).unwrap();
        assert!(are_isomorphic(upsilon.table(), &dihedral(8).unwrap())
            .unwrap()
            .is_some());
        assert_eq!(t.name(t.mul(t.pow(r, 3), s)), "r^3·s");
    }

    #[test]
    fn invalid_actions_rejected() {
        let z4 = cyclic(4).unwrap();
        let z2 = cyclic(2).unwrap();
        // r -> r^2 is not bijective on Z_4.
        let bad = Action::new(&z2, &z4, vec![vec![0, 1, 2, 3], vec![0, 2, 0, 2]]);
        assert!(matches!(bad, Err(Error::InvalidAction(_))));
        // Z_3 cannot act on Z_4 by inversion: inversion has order 2.
        let z3 = cyclic(3).unwrap();
        let inv = vec![0, 3, 2, 1];
        let bad = Action::new(&z3, &z4, vec![vec![0, 1, 2, 3], inv.clone(), inv]);
        assert!(matches!(bad, Err(Error::InvalidAction(_))));
        assert!(matches!(
            semidirect_cyclic(9, 2, 2),
            Err(Error::ActionOrder { order: 6, .. })
        ));
        assert!(matches!(
            semidirect_cyclic(8, 2, 2),
            Err(Error::NotUnit { .. })
        ));
    }

    #[test]
    fn dihedral_examples() {
        let z2 = cyclic(2).unwrap();
        assert!(are_isomorphic(&dihedral(1).unwrap(), &z2)
            .unwrap()
            .is_some());
        let klein = direct_product(&z2, &z2).unwrap();
        assert!(are_isomorphic(&dihedral(2).unwrap(), &klein)
            .unwrap()
            .is_some());
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order(), 16);
        assert_eq!(d8.center().members(), &[0, 8]);
        assert!(!dihedral(3).unwrap().is_abelian());
        assert_eq!(dihedral(0), Err(Error::Zero));
    }

    #[test]
    fn hom_set_examples() {
        let z1 = cyclic(1).unwrap();
        let z2 = cyclic(2).unwrap();
        let z3 = cyclic(3).unwrap();
        assert_eq!(hom_set(&z2, &z3).unwrap().len(), 1);
        assert_eq!(hom_set(&z1, &z3).unwrap().len(), 1);
        let aut8 = crate::aut::aut_group(&cyclic(8).unwrap()).unwrap();
        assert_eq!(hom_set(&z2, aut8.table()).unwrap().len(), 4);
        // |hom(Z_m, Z_n)| = gcd(m, n)
        for m in 1..10 {
            for n in 1..10 {
                let homs = hom_set(&cyclic(m).unwrap(), &cyclic(n).unwrap()).unwrap();
                assert_eq!(homs.len() as u64, numth::gcd(m as u64, n as u64));
            }
        }
    }

    #[test]
    fn actions_examples() {
        let z2 = cyclic(2).unwrap();
        let z8 = cyclic(8).unwrap();
        let acts = actions(&z2, &z8).unwrap();
        let powers: Vec<usize> = acts.iter().map(|a| a.act(1, 1)).collect();
        assert_eq!(powers, vec![1, 3, 5, 7]);
        assert_eq!(actions(&z2, &cyclic(3).unwrap()).unwrap().len(), 2);
        assert_eq!(
            actions(&cyclic(3).unwrap(), &cyclic(4).unwrap())
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn action_class_examples() {
        let classes = action_classes(&cyclic(2).unwrap(), &cyclic(8).unwrap()).unwrap();
        assert_eq!(
            classes.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![1, 1, 1, 1]
        );

        let classes = action_classes(&cyclic(4).unwrap(), &cyclic(5).unwrap()).unwrap();
        assert_eq!(classes.len(), 3);
        let mut sizes: Vec<_> = classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2]);
        assert!(classes[0][0].is_trivial());

        let classes = action_classes(&cyclic(1).unwrap(), &cyclic(6).unwrap()).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].len(), 1);
    }

    #[test]
    fn holomorph_examples() {
        assert_eq!(holomorph(1).unwrap().order(), 1);
        let h3 = holomorph(3).unwrap();
        assert_eq!(h3.order(), 6);
        assert!(are_isomorphic(&h3, &dihedral(3).unwrap())
            .unwrap()
            .is_some());
        assert_eq!(holomorph(8).unwrap().order(), 32);
    }

    #[test]
    fn split_examples() {
        let z4 = cyclic(4).unwrap();
        let sq = z4.subgroup_generated(&[2]).unwrap();
        assert!(recognize_split(&z4, &sq).unwrap().is_none());

        let d8 = dihedral(8).unwrap();
        let rot = d8.subgroup_generated(&[2]).unwrap();
        assert_eq!(rot.len(), 8);
        let w = recognize_split(&d8, &rot)
            .unwrap()
            .expect("D_8 splits over <r>");
        assert_eq!(w.complement.len(), 2);
        let k = w.product.normal_factor();
        let r = (1..k.order())
            .find(|&x| k.element_order(x).unwrap() == 8)
            .unwrap();
        assert_eq!(w.product.action().act(1, r), k.inv(r));

        let refl = d8.subgroup_generated(&[1]).unwrap();
        assert_eq!(recognize_split(&d8, &refl).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn split_round_trip_on_semidirect_products() {
        for (m, n, i) in [(8, 2, 3), (8, 2, 5), (7, 3, 2), (5, 4, 2), (9, 6, 2)] {
            let sd = semidirect_cyclic(m, n, i).unwrap();
            let w = recognize_split(sd.table(), &sd.k_copy()).unwrap().unwrap();
            assert!(are_isomorphic(w.product.table(), sd.table())
                .unwrap()
                .is_some());
            assert!(w.normal_part.intersection(&w.complement).is_trivial());
            assert_eq!(w.normal_part.len() * w.complement.len(), sd.table().order());
        }
    }
}
