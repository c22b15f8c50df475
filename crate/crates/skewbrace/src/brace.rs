//! Skew left braces: one carrier, two group tables sharing the identity,
//! related by the brace axiom
//!
//! ```text
//! g ∘ (h ⋆ k) = (g ∘ h) ⋆ g⁻¹ ⋆ (g ∘ k)
//! ```
//!
//! (inverses in ⋆). Stability of a ⋆-subgroup under the circle action is the
//! quantity of interest: the number of ∘-stable subgroups counts the image of
//! the Galois correspondence for the Hopf-Galois structure the brace encodes,
//! and the subgroup count of the circle group is the total intermediate-field
//! count.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup, DEFAULT_ORDER_CAP};
use crate::perm::{PermGroup, Permutation};

/// A finite skew left brace `(G, ⋆, ∘)` on the carrier `0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    order: usize,
    star: GroupTable,
    circ: GroupTable,
}

impl SkewBrace {
    /// Validates the brace axiom over all n³ triples.
    pub fn new(star: GroupTable, circ: GroupTable) -> Result<Self> {
        let n = star.order();
        if n != circ.order() {
            return Err(Error::OrderMismatch(n, circ.order()));
        }
        // Both tables put the identity at 0, so the identities coincide by
        // construction; a mismatch can only mean an unvalidated table.
        if (0..n).any(|x| star.mul(0, x) != x || circ.mul(0, x) != x) {
            return Err(Error::IdentityMismatch);
        }
        for g in 0..n {
            let gi = star.inv(g);
            for h in 0..n {
                let prefix = star.mul(circ.mul(g, h), gi);
                for k in 0..n {
                    if circ.mul(g, star.mul(h, k)) != star.mul(prefix, circ.mul(g, k)) {
                        return Err(Error::BraceAxiomFailure(g, h, k));
                    }
                }
            }
        }
        Ok(Self {
            order: n,
            star,
            circ,
        })
    }

    /// The trivial brace: ⋆ = ∘.
    pub fn trivial(table: GroupTable) -> Self {
        let brace = Self::new(table.clone(), table);
        debug_assert!(brace.is_ok());
        brace.expect("the trivial brace always satisfies the axiom")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The additive group `(G, ⋆)`.
    pub fn star(&self) -> &GroupTable {
        &self.star
    }

    /// The circle group `(G, ∘)`.
    pub fn circ(&self) -> &GroupTable {
        &self.circ
    }

    #[inline]
    pub fn star_op(&self, a: usize, b: usize) -> usize {
        self.star.mul(a, b)
    }

    #[inline]
    pub fn circ_op(&self, a: usize, b: usize) -> usize {
        self.circ.mul(a, b)
    }

    #[inline]
    pub fn star_inv(&self, a: usize) -> usize {
        self.star.inv(a)
    }

    #[inline]
    pub fn circ_inv(&self, a: usize) -> usize {
        self.circ.inv(a)
    }

    /// The map `x ↦ g⁻¹ ⋆ (g ∘ x)`, an automorphism of `(G, ⋆)`.
    pub fn lambda(&self, g: usize) -> Result<Permutation> {
        if g >= self.order {
            return Err(Error::IndexOutOfRange {
                index: g,
                order: self.order,
            });
        }
        let gi = self.star.inv(g);
        Permutation::new(
            (0..self.order)
                .map(|x| self.star.mul(gi, self.circ.mul(g, x)))
                .collect(),
        )
    }

    /// λ_⋆(G) ⊆ Perm(G).
    pub fn lambda_star_group(&self) -> PermGroup {
        self.star.left_translations()
    }

    /// λ_∘(G) ⊆ Perm(G).
    pub fn lambda_circ_group(&self) -> PermGroup {
        self.circ.left_translations()
    }

    fn require_star_subgroup(&self, s: &Subgroup) -> Result<()> {
        if s.parent_order() != self.order {
            return Err(Error::NotAStarSubgroup(format!(
                "parent order {} does not match brace order {}",
                s.parent_order(),
                self.order
            )));
        }
        Subgroup::new(&self.star, s.members().to_vec())
            .map_err(|e| Error::NotAStarSubgroup(e.to_string()))?;
        Ok(())
    }

    /// ∘-stable: `(g ∘ g′) ⋆ g⁻¹ ∈ S` for all `g ∈ G`, `g′ ∈ S`.
    pub fn is_circ_stable(&self, s: &Subgroup) -> Result<bool> {
        self.require_star_subgroup(s)?;
        Ok(self.circ_stable_on_mask(&s.mask(), s.members()))
    }

    fn circ_stable_on_mask(&self, mask: &[bool], members: &[usize]) -> bool {
        for g in 0..self.order {
            let gi = self.star.inv(g);
            for &x in members {
                if !mask[self.star.mul(self.circ.mul(g, x), gi)] {
                    return false;
                }
            }
        }
        true
    }

    /// Left ideal: `g⁻¹ ⋆ (g ∘ g′) ∈ S` for all `g ∈ G`, `g′ ∈ S`.
    pub fn is_left_ideal(&self, s: &Subgroup) -> Result<bool> {
        self.require_star_subgroup(s)?;
        Ok(self.left_ideal_on_mask(&s.mask(), s.members()))
    }

    fn left_ideal_on_mask(&self, mask: &[bool], members: &[usize]) -> bool {
        for g in 0..self.order {
            let gi = self.star.inv(g);
            for &x in members {
                if !mask[self.star.mul(gi, self.circ.mul(g, x))] {
                    return false;
                }
            }
        }
        true
    }

    /// The subset condition of Guarneri–Vendramin: `h ⋆ g⁻¹ ⋆ (g ∘ g′) ⋆ h⁻¹`
    /// stays in the subset for all g, h in G and g′ in the subset. The subset
    /// need not be a subgroup.
    pub fn satisfies_gv_condition(&self, subset: &[usize]) -> Result<bool> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut mask = vec![false; self.order];
        for &x in subset {
            if x >= self.order {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    order: self.order,
                });
            }
            mask[x] = true;
        }
        for g in 0..self.order {
            let gi = self.star.inv(g);
            for h in 0..self.order {
                let hi = self.star.inv(h);
                for &x in subset {
                    let t = self.star.mul(gi, self.circ.mul(g, x));
                    if !mask[self.star.mul(self.star.mul(h, t), hi)] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// All ∘-stable subgroups of `(G, ⋆)`, canonically ordered. Filters the
    /// full subgroup lattice of the additive group.
    pub fn circ_stable_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.circ_stable_subgroups_capped(DEFAULT_ORDER_CAP)
    }

    pub fn circ_stable_subgroups_capped(&self, cap: usize) -> Result<Vec<Subgroup>> {
        Ok(self
            .star
            .subgroups_capped(cap)?
            .into_iter()
            .filter(|s| self.circ_stable_on_mask(&s.mask(), s.members()))
            .collect())
    }

    /// All left ideals of the brace, canonically ordered.
    pub fn left_ideal_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.left_ideal_subgroups_capped(DEFAULT_ORDER_CAP)
    }

    pub fn left_ideal_subgroups_capped(&self, cap: usize) -> Result<Vec<Subgroup>> {
        Ok(self
            .star
            .subgroups_capped(cap)?
            .into_iter()
            .filter(|s| self.left_ideal_on_mask(&s.mask(), s.members()))
            .collect())
    }

    /// Counts of ∘-stable subgroups and of subgroups of the circle group,
    /// with their exact ratio.
    pub fn galois_report(&self) -> Result<GaloisReport> {
        self.galois_report_capped(DEFAULT_ORDER_CAP)
    }

    pub fn galois_report_capped(&self, cap: usize) -> Result<GaloisReport> {
        let stable_list = self.circ_stable_subgroups_capped(cap)?;
        let count_circ_subgroups = self.circ.subgroups_capped(cap)?.len();
        Ok(GaloisReport {
            count_circ_stable: stable_list.len(),
            count_circ_subgroups,
            ratio: Ratio::new(stable_list.len() as u64, count_circ_subgroups as u64),
            stable_list,
        })
    }
}

/// An exact reduced rational, kept as a pair so `4/4` prints as `1/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "ratio denominator must be nonzero");
        let g = num.gcd(&den);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// How far the Galois correspondence is from surjective for this brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisReport {
    pub count_circ_stable: usize,
    pub count_circ_subgroups: usize,
    pub ratio: Ratio,
    pub stable_list: Vec<Subgroup>,
}
