use alloc::vec;
use alloc::vec::Vec;

use super::{GroupTable, Subgroup};
use crate::{Error, Result};

/// A verified homomorphism, given by the image of every source element.
///
/// The source and target tables are not stored; operations that need them
/// take them as arguments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism {
    image: Vec<usize>,
}

/// Full-table test: `f(a*b) = f(a)*f(b)` for all pairs. Returns the first
/// failing pair.
pub fn homomorphism_defect(
    src: &GroupTable,
    tgt: &GroupTable,
    image: &[usize],
) -> Option<(usize, usize)> {
    for a in src.elements() {
        for b in src.elements() {
            if image[src.mul(a, b)] != tgt.mul(image[a], image[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_homomorphism(src: &GroupTable, tgt: &GroupTable, image: &[usize]) -> bool {
    image.len() == src.order()
        && image.iter().all(|&x| x < tgt.order())
        && homomorphism_defect(src, tgt, image).is_none()
}

impl Morphism {
    pub fn new(src: &GroupTable, tgt: &GroupTable, image: Vec<usize>) -> Result<Self> {
        if image.len() != src.order() {
            return Err(Error::LengthMismatch {
                expected: src.order(),
                found: image.len(),
            });
        }
        for &x in &image {
            tgt.check_index(x)?;
        }
        if let Some((a, b)) = homomorphism_defect(src, tgt, &image) {
            return Err(Error::NotHomomorphism { a, b });
        }
        Ok(Morphism { image })
    }

    /// Like [`Morphism::new`] but also requires a bijection.
    pub fn isomorphism(src: &GroupTable, tgt: &GroupTable, image: Vec<usize>) -> Result<Self> {
        let m = Self::new(src, tgt, image)?;
        if !m.is_bijective(tgt.order()) {
            return Err(Error::NotBijective);
        }
        Ok(m)
    }

    /// For images produced by a search that already checked the homomorphism
    /// property.
    pub(crate) fn trusted(image: Vec<usize>) -> Self {
        Morphism { image }
    }

    pub fn identity(g: &GroupTable) -> Self {
        Morphism {
            image: g.elements().collect(),
        }
    }

    pub fn trivial(src: &GroupTable, tgt: &GroupTable) -> Self {
        Morphism {
            image: vec![tgt.identity(); src.order()],
        }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_bijective(&self, tgt_order: usize) -> bool {
        if self.image.len() != tgt_order {
            return false;
        }
        let mut seen = vec![false; tgt_order];
        self.image
            .iter()
            .all(|&x| !core::mem::replace(&mut seen[x], true))
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        Morphism {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_bijective(self.image.len()) {
            return None;
        }
        let mut inv = vec![0; self.image.len()];
        for (a, &b) in self.image.iter().enumerate() {
            inv[b] = a;
        }
        Some(Morphism { image: inv })
    }

    pub fn kernel(&self, src: &GroupTable, tgt: &GroupTable) -> Subgroup {
        let flags: Vec<bool> = src
            .elements()
            .map(|x| self.image[x] == tgt.identity())
            .collect();
        Subgroup::from_flags(src, &flags)
    }

    pub fn image_subgroup(&self, tgt: &GroupTable) -> Subgroup {
        let mut flags = vec![false; tgt.order()];
        for &x in &self.image {
            flags[x] = true;
        }
        Subgroup::from_flags(tgt, &flags)
    }

    /// Whether `self` maps the subgroup onto itself (`γ(C) = C`).
    pub fn preserves(&self, c: &Subgroup) -> bool {
        c.members().iter().all(|&x| c.contains(self.image[x]))
    }
}
