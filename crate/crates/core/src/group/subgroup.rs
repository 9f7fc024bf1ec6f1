use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::GroupTable;
use crate::{Error, Result};

/// A subgroup of some parent table, stored as its sorted member indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates that `members` is a subgroup of `g`.
    pub fn new(g: &GroupTable, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &x in &members {
            g.check_index(x)?;
        }
        let s = Subgroup {
            parent_order: g.order(),
            members,
        };
        if !s.contains(g.identity()) {
            return Err(Error::NotSubgroup("identity missing"));
        }
        for &a in &s.members {
            if !s.contains(g.inv(a)) {
                return Err(Error::NotSubgroup("not closed under inverses"));
            }
            for &b in &s.members {
                if !s.contains(g.mul(a, b)) {
                    return Err(Error::NotSubgroup("not closed under multiplication"));
                }
            }
        }
        debug_assert_eq!(g.order() % s.len(), 0);
        Ok(s)
    }

    /// Caller guarantees `flags` marks a subgroup of `g`.
    pub(crate) fn from_flags(g: &GroupTable, flags: &[bool]) -> Self {
        let members = flags
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(i, _)| i)
            .collect();
        Subgroup {
            parent_order: g.order(),
            members,
        }
    }

    pub fn whole(g: &GroupTable) -> Self {
        Subgroup {
            parent_order: g.order(),
            members: g.elements().collect(),
        }
    }

    pub fn trivial(g: &GroupTable) -> Self {
        Subgroup {
            parent_order: g.order(),
            members: vec![g.identity()],
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Never true: every subgroup contains the identity.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn flags(&self) -> Vec<bool> {
        let mut f = vec![false; self.parent_order];
        for &x in &self.members {
            f[x] = true;
        }
        f
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            parent_order: self.parent_order,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub(crate) fn check_parent(&self, g: &GroupTable) -> Result<()> {
        if self.parent_order == g.order() {
            Ok(())
        } else {
            Err(Error::ParentMismatch {
                expected: g.order(),
                found: self.parent_order,
            })
        }
    }
}

impl GroupTable {
    /// Closure of `flags` under right multiplication by `gens`.
    pub(crate) fn close_flags(&self, flags: &mut [bool], gens: &[usize]) -> usize {
        let mut queue: Vec<usize> = (0..self.order()).filter(|&x| flags[x]).collect();
        let mut count = queue.len();
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            for &g in gens {
                let b = self.mul(a, g);
                if !flags[b] {
                    flags[b] = true;
                    count += 1;
                    queue.push(b);
                }
            }
        }
        count
    }

    /// Smallest subgroup containing `gens`; `<{}> = {e}`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            self.check_index(g)?;
        }
        let mut flags = vec![false; self.order()];
        flags[self.identity()] = true;
        self.close_flags(&mut flags, gens);
        Ok(Subgroup::from_flags(self, &flags))
    }

    /// Join of two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut flags = a.flags();
        self.close_flags(&mut flags, b.members());
        Subgroup::from_flags(self, &flags)
    }

    pub fn center(&self) -> Subgroup {
        let members = self
            .elements()
            .filter(|&x| self.elements().all(|g| self.commutes(g, x)));
        Subgroup {
            parent_order: self.order(),
            members: members.collect(),
        }
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms = BTreeSet::new();
        for a in self.elements() {
            for b in self.elements() {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comms.insert(c);
            }
        }
        let gens: Vec<usize> = comms.into_iter().collect();
        let mut flags = vec![false; self.order()];
        flags[self.identity()] = true;
        self.close_flags(&mut flags, &gens);
        Subgroup::from_flags(self, &flags)
    }

    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        h.check_parent(self)?;
        Ok(self.is_normal_unchecked(h))
    }

    pub(crate) fn is_normal_unchecked(&self, h: &Subgroup) -> bool {
        self.elements().all(|x| {
            h.members()
                .iter()
                .all(|&k| h.contains(self.conjugate(x, k)))
        })
    }

    /// Smallest normal subgroup containing `x`.
    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        let mut conj = BTreeSet::new();
        for &x in gens {
            for g in self.elements() {
                conj.insert(self.conjugate(g, x));
            }
        }
        let gens: Vec<usize> = conj.into_iter().collect();
        let mut flags = vec![false; self.order()];
        flags[self.identity()] = true;
        self.close_flags(&mut flags, &gens);
        Subgroup::from_flags(self, &flags)
    }

    /// Every normal subgroup, sorted by size then members.
    ///
    /// Each normal subgroup is the join of the normal closures of its
    /// elements, so closing the set of element closures under joins finds
    /// them all.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        found.insert(Subgroup::trivial(self));
        let atoms: BTreeSet<Subgroup> =
            self.elements().map(|x| self.normal_closure(&[x])).collect();
        let mut frontier: Vec<Subgroup> = atoms.iter().cloned().collect();
        found.extend(atoms.iter().cloned());
        while let Some(s) = frontier.pop() {
            for a in &atoms {
                if a.members().iter().all(|&x| s.contains(x)) {
                    continue;
                }
                let j = self.join(&s, a);
                if found.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.members.cmp(&b.members))
        });
        out
    }

    /// The subgroup as a table of its own, plus the embedding into `self`.
    /// The identity is placed at index 0.
    pub fn subgroup_table(&self, h: &Subgroup) -> Result<(GroupTable, Vec<usize>)> {
        h.check_parent(self)?;
        let mut embed: Vec<usize> = Vec::with_capacity(h.len());
        embed.push(self.identity());
        embed.extend(
            h.members()
                .iter()
                .copied()
                .filter(|&x| x != self.identity()),
        );
        let mut back = vec![usize::MAX; self.order()];
        for (i, &x) in embed.iter().enumerate() {
            back[x] = i;
        }
        let names = embed.iter().map(|&x| self.name(x).into()).collect();
        let t = GroupTable::build(embed.len(), 0, names, |a, b| {
            back[self.mul(embed[a], embed[b])]
        });
        Ok((t, embed))
    }

    /// Coset group `G/N`. Cosets are numbered by their smallest member, with
    /// the coset of the identity first.
    pub fn quotient(&self, n: &Subgroup) -> Result<GroupTable> {
        Ok(self.quotient_with_map(n)?.0)
    }

    /// Quotient together with the projection `G -> G/N`.
    pub fn quotient_with_map(&self, n: &Subgroup) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_normal(n)? {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        let starts = core::iter::once(self.identity()).chain(self.elements());
        for x in starts {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for &k in n.members() {
                coset_of[self.mul(x, k)] = idx;
            }
        }
        let names = reps
            .iter()
            .map(|&x| alloc::format!("{}N", self.name(x)))
            .collect();
        let t = GroupTable::build(reps.len(), 0, names, |a, b| {
            coset_of[self.mul(reps[a], reps[b])]
        });
        Ok((t, coset_of))
    }
}
