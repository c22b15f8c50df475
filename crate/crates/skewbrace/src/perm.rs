//! Permutations of `0..n` and finite permutation groups.
//!
//! A [`PermGroup`] keeps its elements canonically sorted by image array, so
//! two groups are equal iff they contain the same permutations. The identity
//! `[0, 1, .., n-1]` is always the first element.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `0..degree`, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n {
                return Err(Error::IndexOutOfRange { index: y, order: n });
            }
            if seen[y] {
                return Err(Error::MalformedInput(format!(
                    "image {y} repeated; not a bijection"
                )));
            }
            seen[y] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// True if no point is fixed.
    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i != y)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y] = i;
        }
        Self { images }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&y| self.images[y]).collect();
        Self { images }
    }

    /// Conjugate `self` by `by`: `by ∘ self ∘ by⁻¹`.
    pub fn conjugate_by(&self, by: &Self) -> Self {
        by.compose(self).compose(&by.inverse())
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut q = self.clone();
        let mut k = 1;
        while !q.is_identity() {
            q = self.compose(&q);
            k += 1;
        }
        k
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// A finite set of permutations closed under composition.
///
/// Closure plus finiteness gives a group: inverses arise as powers, and the
/// identity as the order-th power of any element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Validates closure under composition and canonicalizes the element list.
    pub fn new(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        for p in &elements {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(degree, p.degree()));
            }
        }
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            return Err(Error::MalformedInput("permutation group is empty".into()));
        }
        let set: HashSet<&Permutation> = elements.iter().collect();
        for a in &elements {
            for b in &elements {
                let c = a.compose(b);
                if !set.contains(&c) {
                    return Err(Error::MalformedInput(format!(
                        "not closed under composition: {a} * {b} missing"
                    )));
                }
            }
        }
        Ok(Self { degree, elements })
    }

    /// Closure of `gens` under composition.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self> {
        for p in gens {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(degree, p.degree()));
            }
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut set: HashSet<Permutation> = elements.iter().cloned().collect();
        for g in gens {
            if set.insert(g.clone()) {
                elements.push(g.clone());
            }
        }
        let mut i = 0;
        while i < elements.len() {
            for j in 0..=i {
                for (a, b) in [(i, j), (j, i)] {
                    let c = elements[a].compose(&elements[b]);
                    if !set.contains(&c) {
                        set.insert(c.clone());
                        elements.push(c);
                    }
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        Ok(Self { degree, elements })
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// For construction paths that are closed by construction (holomorphs,
    /// translation groups, homomorphic images). Sorts and dedups only.
    pub(crate) fn from_elements_unchecked(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.iter().all(|p| p.degree() == degree));
        Self { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Regular: order equals degree and only the identity fixes a point.
    pub fn is_regular(&self) -> bool {
        self.order() == self.degree
            && self
                .elements
                .iter()
                .all(|p| p.is_identity() || p.is_fixed_point_free())
    }

    /// All subgroups, canonically ordered by (order, element list).
    ///
    /// Works directly on permutations: cyclic subgroups first, then closure
    /// of the collection under pairwise join.
    pub fn subgroups(&self) -> Result<Vec<PermGroup>> {
        self.subgroups_capped(crate::group::DEFAULT_ORDER_CAP)
    }

    pub fn subgroups_capped(&self, cap: usize) -> Result<Vec<PermGroup>> {
        if self.order() > cap {
            return Err(Error::OrderCapExceeded {
                order: self.order(),
                cap,
            });
        }
        let mut cyclics: Vec<Vec<Permutation>> = Vec::new();
        let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
        for p in &self.elements {
            let c = Self::generate(self.degree, std::slice::from_ref(p))?.elements;
            if seen.insert(c.clone()) {
                cyclics.push(c);
            }
        }
        let mut all: Vec<Vec<Permutation>> = cyclics.clone();
        let mut i = 0;
        while i < all.len() {
            for c in &cyclics {
                if c.iter().all(|p| all[i].binary_search(p).is_ok()) {
                    continue;
                }
                let mut gens = all[i].clone();
                gens.extend(c.iter().cloned());
                let joined = Self::generate(self.degree, &gens)?.elements;
                if seen.insert(joined.clone()) {
                    all.push(joined);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(all
            .into_iter()
            .map(|elements| Self {
                degree: self.degree,
                elements,
            })
            .collect())
    }
}

/// True iff `a · t · a⁻¹ ∈ target` for every `a ∈ actor`, `t ∈ target`.
pub fn normalized_by(target: &PermGroup, actor: &PermGroup) -> Result<bool> {
    if target.degree() != actor.degree() {
        return Err(Error::DegreeMismatch(target.degree(), actor.degree()));
    }
    for a in actor.elements() {
        let a_inv = a.inverse();
        for t in target.elements() {
            let conj = a.compose(t).compose(&a_inv);
            if !target.contains(&conj) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
