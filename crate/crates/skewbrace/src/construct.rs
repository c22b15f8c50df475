//! Building skew braces from the three standard sources: a regular subgroup
//! of a holomorph, an exact factorization `G = HJ`, or a fixed point free
//! pair of homomorphisms — and exporting a brace back to a regular subgroup
//! of `Perm(Γ)` through α.
//!
//! Composition convention throughout: `(p · q)(x) = p(q(x))`, and the right
//! regular representation is `ρ(g)(x) = x · g⁻¹` so that ρ is a homomorphism
//! and `β(γ)(x) = f_l(γ) · x · f_r(γ)⁻¹`.

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::perm::{PermGroup, Permutation};

/// An exact factorization `G = HJ` with `H ∩ J = {e}`; every element has a
/// unique expression `g = g_l · g_r`. The two witness arrays are filled at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactFactorization {
    group: GroupTable,
    h: Subgroup,
    j: Subgroup,
    left_part: Vec<usize>,
    right_part: Vec<usize>,
}

impl ExactFactorization {
    pub fn new(group: GroupTable, h: Subgroup, j: Subgroup) -> Result<Self> {
        let n = group.order();
        let h = Subgroup::new(&group, h.members().to_vec())
            .map_err(|e| Error::NotComplementary(format!("H: {e}")))?;
        let j = Subgroup::new(&group, j.members().to_vec())
            .map_err(|e| Error::NotComplementary(format!("J: {e}")))?;
        if h.len() * j.len() != n {
            return Err(Error::NotComplementary(format!(
                "|H| |J| = {} · {} != {n}",
                h.len(),
                j.len()
            )));
        }
        let mut left_part = vec![usize::MAX; n];
        let mut right_part = vec![usize::MAX; n];
        for &gl in h.members() {
            for &gr in j.members() {
                let g = group.mul(gl, gr);
                if left_part[g] != usize::MAX {
                    return Err(Error::NotComplementary(format!(
                        "element {g} factors twice; H ∩ J is nontrivial"
                    )));
                }
                left_part[g] = gl;
                right_part[g] = gr;
            }
        }
        // |H||J| = n and no collisions, so every element is covered.
        debug_assert!(left_part.iter().all(|&x| x != usize::MAX));
        Ok(Self {
            group,
            h,
            j,
            left_part,
            right_part,
        })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn j(&self) -> &Subgroup {
        &self.j
    }

    /// The unique `(g_l, g_r) ∈ H × J` with `g_l · g_r = g`.
    pub fn factorize(&self, g: usize) -> Result<(usize, usize)> {
        if g >= self.group.order() {
            return Err(Error::IndexOutOfRange {
                index: g,
                order: self.group.order(),
            });
        }
        Ok((self.left_part[g], self.right_part[g]))
    }
}

/// A fixed point free pair of homomorphisms `f_l, f_r : Γ → G`, given as full
/// index arrays and validated against both tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpfPair {
    gamma: GroupTable,
    g: GroupTable,
    f_l: Vec<usize>,
    f_r: Vec<usize>,
}

impl FpfPair {
    pub fn new(gamma: GroupTable, g: GroupTable, f_l: Vec<usize>, f_r: Vec<usize>) -> Result<Self> {
        if gamma.order() != g.order() {
            return Err(Error::OrderMismatch(gamma.order(), g.order()));
        }
        for (name, f) in [("f_l", &f_l), ("f_r", &f_r)] {
            if f.len() != gamma.order() {
                return Err(Error::NotHomomorphism(format!(
                    "{name} has length {}, expected {}",
                    f.len(),
                    gamma.order()
                )));
            }
            for &y in f.iter() {
                if y >= g.order() {
                    return Err(Error::IndexOutOfRange {
                        index: y,
                        order: g.order(),
                    });
                }
            }
            for a in 0..gamma.order() {
                for b in 0..gamma.order() {
                    if f[gamma.mul(a, b)] != g.mul(f[a], f[b]) {
                        return Err(Error::NotHomomorphism(format!(
                            "{name}({a}·{b}) != {name}({a})·{name}({b})"
                        )));
                    }
                }
            }
        }
        for gamma_el in 1..gamma.order() {
            if f_l[gamma_el] == f_r[gamma_el] {
                return Err(Error::NotFixedPointFree(gamma_el));
            }
        }
        Ok(Self { gamma, g, f_l, f_r })
    }

    pub fn gamma(&self) -> &GroupTable {
        &self.gamma
    }

    pub fn g(&self) -> &GroupTable {
        &self.g
    }

    pub fn f_l(&self) -> &[usize] {
        &self.f_l
    }

    pub fn f_r(&self) -> &[usize] {
        &self.f_r
    }

    /// `β(γ) = λ(f_l(γ)) ρ(f_r(γ))`, i.e. `x ↦ f_l(γ) · x · f_r(γ)⁻¹`.
    pub fn beta(&self, gamma_el: usize) -> Permutation {
        let gl = self.f_l[gamma_el];
        let gri = self.g.inv(self.f_r[gamma_el]);
        Permutation::new(
            (0..self.g.order())
                .map(|x| self.g.mul(self.g.mul(gl, x), gri))
                .collect(),
        )
        .expect("translations are bijections")
    }

    /// The image β(Γ) ⊆ Perm(G).
    pub fn beta_image(&self) -> PermGroup {
        PermGroup::from_elements_unchecked(
            self.g.order(),
            (0..self.gamma.order()).map(|c| self.beta(c)).collect(),
        )
    }
}

/// A brace together with an isomorphism `a : (G, ∘) → (Γ, ·)` and its
/// inverse `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceIso {
    brace: SkewBrace,
    gamma: GroupTable,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl BraceIso {
    pub fn new(brace: SkewBrace, gamma: GroupTable, a: Vec<usize>) -> Result<Self> {
        let n = brace.order();
        if gamma.order() != n {
            return Err(Error::OrderMismatch(n, gamma.order()));
        }
        if a.len() != n {
            return Err(Error::NotAnIsomorphism(format!(
                "map has length {}, expected {n}",
                a.len()
            )));
        }
        let mut b = vec![usize::MAX; n];
        for (x, &y) in a.iter().enumerate() {
            if y >= n {
                return Err(Error::IndexOutOfRange { index: y, order: n });
            }
            if b[y] != usize::MAX {
                return Err(Error::NotAnIsomorphism(format!("not injective at {y}")));
            }
            b[y] = x;
        }
        for g in 0..n {
            for h in 0..n {
                if a[brace.circ_op(g, h)] != gamma.mul(a[g], a[h]) {
                    return Err(Error::NotAnIsomorphism(format!(
                        "a({g} ∘ {h}) != a({g}) · a({h})"
                    )));
                }
            }
        }
        Ok(Self { brace, gamma, a, b })
    }

    /// The identity isomorphism onto Γ = (G, ∘) itself.
    pub fn identity(brace: SkewBrace) -> Self {
        let gamma = brace.circ().clone();
        let n = brace.order();
        Self {
            brace,
            gamma,
            a: (0..n).collect(),
            b: (0..n).collect(),
        }
    }

    pub fn brace(&self) -> &SkewBrace {
        &self.brace
    }

    pub fn gamma(&self) -> &GroupTable {
        &self.gamma
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }
}

/// Brace from a regular subgroup of `Hol(G, ⋆)`: the circle operation is
/// `g ∘ h = r_g(h)` where `r_g` is the unique element of `r` with
/// `r_g(0) = g`.
pub fn brace_from_holomorph_regular(star: &GroupTable, r: &PermGroup) -> Result<SkewBrace> {
    let n = star.order();
    if r.degree() != n {
        return Err(Error::DegreeMismatch(n, r.degree()));
    }
    for p in r.elements() {
        if !star.holomorph_contains(p)? {
            return Err(Error::NotInHolomorph(format!(
                "{p} does not normalize the left translations"
            )));
        }
    }
    if !r.is_regular() {
        return Err(Error::NotRegular(format!(
            "order {} on {} points",
            r.order(),
            r.degree()
        )));
    }
    let mut rows = vec![vec![0usize; n]; n];
    for p in r.elements() {
        let g = p.apply(0);
        rows[g] = p.images().to_vec();
    }
    let circ = GroupTable::from_rows(rows)?;
    SkewBrace::new(star.clone(), circ)
}

/// Brace from an exact factorization: `g ∘ h = g_l · h · g_r`, with the
/// isomorphism `a(g_l g_r) = (g_l, g_r⁻¹)` onto `Γ = H × J`.
pub fn brace_from_exact_factorization(ef: &ExactFactorization) -> Result<(SkewBrace, BraceIso)> {
    let g = ef.group();
    let n = g.order();
    let mut rows = vec![vec![0usize; n]; n];
    for (x, row) in rows.iter_mut().enumerate() {
        let (gl, gr) = (ef.left_part[x], ef.right_part[x]);
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = g.mul(g.mul(gl, y), gr);
        }
    }
    let circ = GroupTable::from_rows(rows)?;
    let brace = SkewBrace::new(g.clone(), circ)?;
    let h_table = g.subgroup_table(ef.h());
    let j_table = g.subgroup_table(ef.j());
    let gamma = h_table.direct_product(&j_table);
    let jsize = ef.j().len();
    let mut a = vec![0usize; n];
    for (x, slot) in a.iter_mut().enumerate() {
        let hpos = ef
            .h()
            .members()
            .binary_search(&ef.left_part[x])
            .expect("left parts lie in H");
        let jpos = ef
            .j()
            .members()
            .binary_search(&g.inv(ef.right_part[x]))
            .expect("J is inverse-closed");
        *slot = hpos * jsize + jpos;
    }
    let iso = BraceIso::new(brace.clone(), gamma, a)?;
    Ok((brace, iso))
}

/// Brace from a fixed point free pair: β(Γ) is verified regular and inside
/// `Hol(G)`, then fed through the holomorph construction.
pub fn brace_from_fpf_pair(pair: &FpfPair) -> Result<SkewBrace> {
    let beta = pair.beta_image();
    if !beta.is_regular() {
        return Err(Error::NotRegular(format!(
            "β(Γ) has order {} on {} points",
            beta.order(),
            beta.degree()
        )));
    }
    brace_from_holomorph_regular(pair.g(), &beta)
}

/// α(g) = a λ_⋆(g) a⁻¹ ∈ Perm(Γ): the regular image of `(G, ⋆)` that is
/// normalized by λ(Γ).
pub fn alpha_embedding(iso: &BraceIso) -> PermGroup {
    let brace = iso.brace();
    let n = brace.order();
    let elements = (0..n)
        .map(|g| {
            Permutation::new(
                (0..n)
                    .map(|gamma_el| iso.a()[brace.star_op(g, iso.b()[gamma_el])])
                    .collect(),
            )
            .expect("conjugate of a bijection")
        })
        .collect();
    PermGroup::from_elements_unchecked(n, elements)
}

/// β(γ) = λ_∘(b(γ)) ∈ Perm(G): the regular image of Γ inside Hol(G, ⋆).
pub fn beta_embedding(iso: &BraceIso) -> PermGroup {
    let brace = iso.brace();
    let n = brace.order();
    let elements = (0..n)
        .map(|gamma_el| {
            let g = iso.b()[gamma_el];
            Permutation::new((0..n).map(|x| brace.circ_op(g, x)).collect())
                .expect("rows of a group table are bijections")
        })
        .collect();
    PermGroup::from_elements_unchecked(n, elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::perm::normalized_by;

    #[test]
    fn lambda_image_gives_trivial_brace() {
        let g = fixtures::symmetric_group(3).unwrap();
        let b = brace_from_holomorph_regular(&g, &g.left_translations()).unwrap();
        assert_eq!(b.star(), b.circ());
    }

    #[test]
    fn rho_image_gives_opposite_circle_group() {
        let g = fixtures::symmetric_group(3).unwrap();
        let b = brace_from_holomorph_regular(&g, &g.right_translations()).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(b.circ_op(x, y), g.mul(y, x));
            }
        }
    }

    #[test]
    fn non_regular_subgroup_rejected() {
        let g = fixtures::cyclic_group(4).unwrap();
        let tiny = PermGroup::trivial(4);
        assert!(matches!(
            brace_from_holomorph_regular(&g, &tiny),
            Err(Error::NotRegular(_))
        ));
    }

    #[test]
    fn permutation_outside_holomorph_rejected() {
        // A transposition of two non-identity points of S3 does not
        // normalize λ(S3)... build a regular cyclic group on 6 points that
        // is not in Hol(S3): powers of a 6-cycle chosen so the orbit of 0
        // disagrees with any holomorph element.
        let g = fixtures::symmetric_group(3).unwrap();
        let six_cycle = Permutation::new(vec![1, 2, 3, 4, 5, 0]).unwrap();
        let c6 = PermGroup::generate(6, std::slice::from_ref(&six_cycle)).unwrap();
        assert!(c6.is_regular());
        let result = brace_from_holomorph_regular(&g, &c6);
        assert!(matches!(result, Err(Error::NotInHolomorph(_))));
    }

    #[test]
    fn factorization_witnesses() {
        let (_, _, ef) = fixtures::sn_factorization(3).unwrap();
        // identity factors trivially
        assert_eq!(ef.factorize(0).unwrap(), (0, 0));
        // an element of J factors as (e, itself)
        let j_nontrivial = ef.j().members()[1];
        assert_eq!(ef.factorize(j_nontrivial).unwrap(), (0, j_nontrivial));
        // every factorization is consistent and lands in (H, J)
        let g = ef.group().clone();
        for x in 0..g.order() {
            let (gl, gr) = ef.factorize(x).unwrap();
            assert!(ef.h().contains(gl));
            assert!(ef.j().contains(gr));
            assert_eq!(g.mul(gl, gr), x);
        }
        assert!(matches!(
            ef.factorize(6),
            Err(Error::IndexOutOfRange { index: 6, order: 6 })
        ));
    }

    #[test]
    fn factorize_matches_exhaustive_search() {
        let (_, _, ef) = fixtures::sn_factorization(3).unwrap();
        let g = ef.group().clone();
        for x in 0..g.order() {
            let mut found = Vec::new();
            for &gl in ef.h().members() {
                for &gr in ef.j().members() {
                    if g.mul(gl, gr) == x {
                        found.push((gl, gr));
                    }
                }
            }
            assert_eq!(found.len(), 1);
            assert_eq!(ef.factorize(x).unwrap(), found[0]);
        }
    }

    #[test]
    fn overlapping_subgroups_are_not_complementary() {
        let g = fixtures::cyclic_group(4).unwrap();
        let h = Subgroup::new(&g, vec![0, 2]).unwrap();
        assert!(matches!(
            ExactFactorization::new(g.clone(), h.clone(), h),
            Err(Error::NotComplementary(_))
        ));
    }

    #[test]
    fn full_by_trivial_factorization_gives_trivial_brace() {
        let g = fixtures::symmetric_group(3).unwrap();
        let h = Subgroup::new(&g, (0..6).collect()).unwrap();
        let j = Subgroup::new(&g, vec![0]).unwrap();
        let ef = ExactFactorization::new(g.clone(), h, j).unwrap();
        let (brace, _) = brace_from_exact_factorization(&ef).unwrap();
        assert_eq!(brace.star(), brace.circ());
    }

    #[test]
    fn s3_factorization_circle_group_is_cyclic_of_order_six() {
        let (brace, iso, _) = fixtures::sn_factorization(3).unwrap();
        assert!(brace.circ().is_abelian());
        assert_eq!(brace.circ().exponent(), 6);
        // Γ = A3 × C2 with the explicit isomorphism a
        assert!(iso.gamma().is_abelian());
        assert_eq!(iso.gamma().exponent(), 6);
    }

    #[test]
    fn factorization_circle_group_fingerprints_match_gamma() {
        for (name, brace, iso, _) in fixtures::exact_factorization_battery(42).unwrap() {
            assert_eq!(
                brace.circ().order_multiset(),
                iso.gamma().order_multiset(),
                "{name}"
            );
            assert_eq!(brace.circ().is_abelian(), iso.gamma().is_abelian(), "{name}");
            assert_eq!(
                brace.circ().center().len(),
                iso.gamma().center().len(),
                "{name}"
            );
        }
    }

    #[test]
    fn alpha_image_is_regular_and_normalized() {
        for (_, brace, iso) in fixtures::braces_with_isos(32).unwrap() {
            let iso = iso.unwrap_or_else(|| BraceIso::identity(brace.clone()));
            let alpha = alpha_embedding(&iso);
            assert!(alpha.is_regular());
            let lambda_gamma = iso.gamma().left_translations();
            assert!(normalized_by(&alpha, &lambda_gamma).unwrap());
        }
    }

    #[test]
    fn alpha_of_rump_brace_is_elementary_abelian() {
        let iso = BraceIso::identity(fixtures::rump8());
        let alpha = alpha_embedding(&iso);
        assert_eq!(alpha.order(), 8);
        assert!(alpha
            .elements()
            .iter()
            .all(|p| p.is_identity() || p.order() == 2));
    }

    #[test]
    fn fpf_pair_rejects_identity_pair() {
        let g = fixtures::cyclic_group(4).unwrap();
        let id: Vec<usize> = (0..4).collect();
        assert!(matches!(
            FpfPair::new(g.clone(), g.clone(), id.clone(), id),
            Err(Error::NotFixedPointFree(1))
        ));
    }

    #[test]
    fn fpf_identity_and_trivial_gives_trivial_brace() {
        let g = fixtures::cyclic_group(4).unwrap();
        let id: Vec<usize> = (0..4).collect();
        let trivial = vec![0usize; 4];
        let pair = FpfPair::new(g.clone(), g.clone(), id, trivial).unwrap();
        assert_eq!(pair.beta_image(), g.left_translations());
        let b = brace_from_fpf_pair(&pair).unwrap();
        assert_eq!(b.star(), b.circ());
    }

    #[test]
    fn fpf_rejects_non_homomorphism() {
        let g = fixtures::cyclic_group(4).unwrap();
        let id: Vec<usize> = (0..4).collect();
        let not_hom = vec![0, 1, 3, 2];
        assert!(matches!(
            FpfPair::new(g.clone(), g.clone(), not_hom, id),
            Err(Error::NotHomomorphism(_))
        ));
    }

    #[test]
    fn heisenberg_fpf_beta_is_regular() {
        let pair = fixtures::heis_fpf_pair(3).unwrap();
        assert!(pair.beta_image().is_regular());
        // Equivalent fpf statement: { f_l(γ)·f_r(γ)⁻¹ } covers all of G.
        let g = pair.g();
        let covered: std::collections::HashSet<usize> = (0..g.order())
            .map(|c| g.mul(pair.f_l()[c], g.inv(pair.f_r()[c])))
            .collect();
        assert_eq!(covered.len(), g.order());
    }

    #[test]
    fn alpha_of_trivial_brace_is_lambda_gamma() {
        let brace = SkewBrace::trivial(fixtures::cyclic_group(6).unwrap());
        let iso = BraceIso::identity(brace);
        assert_eq!(alpha_embedding(&iso), iso.gamma().left_translations());
    }

    #[test]
    fn round_trip_through_beta() {
        for (_, brace, iso) in fixtures::braces_with_isos(32).unwrap() {
            let iso = iso.unwrap_or_else(|| BraceIso::identity(brace.clone()));
            let beta = beta_embedding(&iso);
            let rebuilt = brace_from_holomorph_regular(brace.star(), &beta).unwrap();
            assert_eq!(rebuilt.star(), brace.star());
            assert_eq!(rebuilt.circ(), brace.circ());
        }
    }
}
