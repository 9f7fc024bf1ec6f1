use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Size caps applied by operations whose cost grows with the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order any constructor or table-producing operation accepts.
    pub max_order: usize,
    /// Largest automorphism count an enumeration may produce.
    pub max_aut: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ORDER: usize = 4096;
    pub const DEFAULT_MAX_AUT: usize = 10_000;

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            Err(Error::OrderCap {
                order,
                limit: self.max_order,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: Self::DEFAULT_MAX_ORDER,
            max_aut: Self::DEFAULT_MAX_AUT,
        }
    }
}

/// First group axiom a candidate Cayley table violates, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomViolation {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    Dimension {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("{names} display names given for {order} elements")]
    NameCount { names: usize, order: usize },
    #[error("identity index {identity} out of range for order {order}")]
    IdentityOutOfRange { identity: usize, order: usize },
    #[error("closure: {a}*{b} = {value} is not an element")]
    Closure { a: usize, b: usize, value: usize },
    #[error("identity: e*{x} or {x}*e differs from {x}")]
    Identity { x: usize },
    #[error("inverses: {x} has no two-sided inverse")]
    Inverse { x: usize },
    #[error("associativity: ({a}*{b})*{c} != {a}*({b}*{c})")]
    Associativity { a: usize, b: usize, c: usize },
}

/// Checks closure, identity, inverses and associativity of a square table.
///
/// Associativity is the O(n^3) part; it is only run here, never by the
/// trusted constructors.
pub fn verify_group_axioms(rows: &[Vec<usize>], identity: usize) -> Result<(), AxiomViolation> {
    let n = rows.len();
    if n == 0 {
        return Err(AxiomViolation::Empty);
    }
    if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(AxiomViolation::Dimension {
            row,
            len: r.len(),
            expected: n,
        });
    }
    if identity >= n {
        return Err(AxiomViolation::IdentityOutOfRange { identity, order: n });
    }
    for (a, row) in rows.iter().enumerate() {
        for (b, &value) in row.iter().enumerate() {
            if value >= n {
                return Err(AxiomViolation::Closure { a, b, value });
            }
        }
    }
    for (x, row) in rows.iter().enumerate() {
        if rows[identity][x] != x || row[identity] != x {
            return Err(AxiomViolation::Identity { x });
        }
    }
    for (x, row) in rows.iter().enumerate() {
        if !(0..n).any(|y| row[y] == identity && rows[y][x] == identity) {
            return Err(AxiomViolation::Inverse { x });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = rows[a][b];
            for c in 0..n {
                if rows[ab][c] != rows[a][rows[b][c]] {
                    return Err(AxiomViolation::Associativity { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// A finite group as a dense Cayley table over element indices `0..order`.
///
/// Immutable once built. Tables made by this crate's constructors always put
/// the identity at index 0; tables loaded with [`GroupTable::from_rows`] may
/// use any index.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inv: Vec<usize>,
    names: Vec<String>,
}

impl GroupTable {
    /// Builds a table from untrusted rows, running the full axiom check.
    pub fn from_rows(
        rows: &[Vec<usize>],
        identity: usize,
        names: Option<Vec<String>>,
    ) -> Result<Self, AxiomViolation> {
        verify_group_axioms(rows, identity)?;
        let n = rows.len();
        let names = match names {
            Some(names) if names.len() != n => {
                return Err(AxiomViolation::NameCount {
                    names: names.len(),
                    order: n,
                })
            }
            Some(names) => names,
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(Self::build(n, identity, names, |a, b| rows[a][b]))
    }

    /// Trusted construction from a multiplication function.
    pub(crate) fn build(
        order: usize,
        identity: usize,
        names: Vec<String>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Self {
        debug_assert_eq!(names.len(), order);
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mul.push(f(a, b) as u32);
            }
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            if inv[a] != usize::MAX {
                continue;
            }
            let row = &mul[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&x| x as usize == identity)
                .expect("trusted constructor produced an element without inverse");
            inv[a] = b;
            inv[b] = a;
        }
        GroupTable {
            order,
            mul,
            identity,
            inv,
            names,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub(crate) fn check_index(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let mut acc = self.identity;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g * x * g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, g: usize) -> Result<usize> {
        self.check_index(g)?;
        Ok(self.order_of(g))
    }

    pub(crate) fn order_of(&self, g: usize) -> usize {
        let mut x = g;
        let mut s = 1;
        while x != self.identity {
            x = self.mul(x, g);
            s += 1;
        }
        s
    }

    /// Order of every element, indexed by element.
    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|g| self.order_of(g)).collect()
    }

    /// Map from element order to the number of elements of that order.
    pub fn order_spectrum(&self) -> BTreeMap<usize, usize> {
        let mut spectrum = BTreeMap::new();
        for s in self.element_orders() {
            *spectrum.entry(s).or_insert(0) += 1;
        }
        spectrum
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn centralizer_size(&self, g: usize) -> usize {
        self.elements().filter(|&x| self.commutes(g, x)).count()
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .field("names", &self.names)
            .finish_non_exhaustive()
    }
}
