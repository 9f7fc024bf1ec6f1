//! Backtracking search over generator images.
//!
//! A homomorphism out of a group is fixed by the images of a generating
//! sequence. [`GeneratorPlan`] precomputes, for each prefix `g_1..g_j` of a
//! greedy minimal generating sequence, a spanning tree of `<g_1..g_j>` and the
//! list of relations `f(a*g_i) = f(a)*f(g_i)` that become checkable once
//! `g_j` is placed. A map satisfying all of them for every `a` and every
//! generator is a homomorphism, so the search never needs the full table test.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::group::GroupTable;

/// Greedy minimal generating sequence: repeatedly add the element that
/// enlarges the generated subgroup the most, ties broken by lowest index.
pub fn generating_sequence(g: &GroupTable) -> Vec<usize> {
    let n = g.order();
    let mut gens = Vec::new();
    let mut flags = vec![false; n];
    flags[g.identity()] = true;
    let mut size = 1;
    while size < n {
        let mut best: Option<(usize, usize, Vec<bool>)> = None;
        for x in g.elements() {
            if flags[x] {
                continue;
            }
            let mut trial = flags.clone();
            trial[x] = true;
            let mut all = gens.clone();
            all.push(x);
            let s = g.close_flags(&mut trial, &all);
            if best.as_ref().is_none_or(|(bs, _, _)| s > *bs) {
                best = Some((s, x, trial));
            }
            if s == n {
                break;
            }
        }
        let (s, x, f) = best.expect("proper subgroup has an element outside it");
        gens.push(x);
        flags = f;
        size = s;
    }
    gens
}

#[derive(Debug, Clone)]
struct Level {
    /// Elements new at this level with their spanning-tree edge
    /// `elem = parent * gens[gen]`.
    tree: Vec<(usize, usize, usize)>,
    /// Relations `(a, gen)` first checkable at this level.
    checks: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct GeneratorPlan {
    gens: Vec<usize>,
    levels: Vec<Level>,
}

impl GeneratorPlan {
    pub fn new(g: &GroupTable) -> Self {
        Self::with_generators(g, generating_sequence(g))
    }

    /// `gens` must generate `g` and each must lie outside the span of the
    /// previous ones.
    pub fn with_generators(g: &GroupTable, gens: Vec<usize>) -> Self {
        let n = g.order();
        let mut in_span = vec![false; n];
        in_span[g.identity()] = true;
        let mut span = vec![g.identity()];
        let mut levels = Vec::with_capacity(gens.len());
        for j in 0..gens.len() {
            let before = span.len();
            let mut tree = Vec::new();
            let mut head = 0;
            while head < span.len() {
                let a = span[head];
                head += 1;
                for (i, &gi) in gens[..=j].iter().enumerate() {
                    let b = g.mul(a, gi);
                    if !in_span[b] {
                        in_span[b] = true;
                        span.push(b);
                        tree.push((b, a, i));
                    }
                }
            }
            let mut checks = Vec::new();
            for (pos, &a) in span.iter().enumerate() {
                for i in 0..=j {
                    if pos >= before || i == j {
                        checks.push((a, i));
                    }
                }
            }
            levels.push(Level { tree, checks });
        }
        debug_assert_eq!(span.len(), n, "generators must generate the group");
        GeneratorPlan { gens, levels }
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Extends generator images to the whole group along the spanning trees,
    /// without checking anything.
    pub fn extend(&self, src: &GroupTable, tgt: &GroupTable, images: &[usize]) -> Vec<usize> {
        let mut f = vec![usize::MAX; src.order()];
        f[src.identity()] = tgt.identity();
        for level in &self.levels {
            for &(elem, parent, gen) in &level.tree {
                f[elem] = tgt.mul(f[parent], images[gen]);
            }
        }
        f
    }
}

/// One search over maps `src -> tgt` defined by generator images.
pub struct MorphismSearch<'a> {
    pub plan: &'a GeneratorPlan,
    pub src: &'a GroupTable,
    pub tgt: &'a GroupTable,
    /// Require injectivity (prefix by prefix).
    pub injective: bool,
    /// Allowed images for each generator, tried in the given order.
    pub candidates: Vec<Vec<usize>>,
}

impl MorphismSearch<'_> {
    /// Calls `visit` with the full image array of every homomorphism found,
    /// in lexicographic order of the generator-image tuples. Stops early when
    /// `visit` breaks.
    pub fn run<B>(&self, visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
        let mut f = vec![usize::MAX; self.src.order()];
        f[self.src.identity()] = self.tgt.identity();
        let mut used = vec![false; self.tgt.order()];
        used[self.tgt.identity()] = true;
        let mut images = vec![usize::MAX; self.plan.gens.len()];
        match self.descend(0, &mut f, &mut used, &mut images, visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    fn descend<B>(
        &self,
        j: usize,
        f: &mut [usize],
        used: &mut [bool],
        images: &mut [usize],
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if j == self.plan.levels.len() {
            return visit(f);
        }
        let level = &self.plan.levels[j];
        for &t in &self.candidates[j] {
            images[j] = t;
            let mut placed = 0;
            let mut ok = true;
            for &(elem, parent, gen) in &level.tree {
                let v = self.tgt.mul(f[parent], images[gen]);
                if self.injective && used[v] {
                    ok = false;
                    break;
                }
                f[elem] = v;
                if self.injective {
                    used[v] = true;
                }
                placed += 1;
            }
            if ok {
                ok = level.checks.iter().all(|&(a, i)| {
                    f[self.src.mul(a, self.plan.gens[i])] == self.tgt.mul(f[a], images[i])
                });
            }
            if ok {
                self.descend(j + 1, f, used, images, visit)?;
            }
            for &(elem, _, _) in &level.tree[..placed] {
                if self.injective {
                    used[f[elem]] = false;
                }
                f[elem] = usize::MAX;
            }
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, dihedral, direct_product};

    #[test]
    fn greedy_generators() {
        assert_eq!(
            generating_sequence(&cyclic(1).unwrap()),
            Vec::<usize>::new()
        );
        assert_eq!(generating_sequence(&cyclic(6).unwrap()), vec![1]);
        let klein = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert_eq!(generating_sequence(&klein).len(), 2);
        let d8 = dihedral(8).unwrap();
        let gens = generating_sequence(&d8);
        assert_eq!(gens.len(), 2);
        assert_eq!(d8.element_order(gens[0]).unwrap(), 8);
    }

    #[test]
    fn extend_reproduces_identity_map() {
        let d5 = dihedral(5).unwrap();
        let plan = GeneratorPlan::new(&d5);
        let f = plan.extend(&d5, &d5, plan.generators());
        assert!(f.iter().enumerate().all(|(i, &x)| i == x));
    }
}
