//! Independent oracle implementations shared by the integration suites.
//! These deliberately avoid the library's enumeration code paths.
#![allow(dead_code)] // each test binary uses its own subset

use std::collections::BTreeSet;

use skewbrace::construct::alpha_embedding;
use skewbrace::perm::normalized_by;
use skewbrace::{BraceIso, GroupTable, SkewBrace, Subgroup};

/// Subset enumeration: every identity-containing, product-closed subset of a
/// finite group is a subgroup. Only for tiny orders.
pub fn brute_force_subgroups(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "2^n subsets; keep n tiny");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| members.binary_search(&g.mul(a, b)).is_ok()));
        if closed {
            out.push(members);
        }
    }
    sort_canonical(&mut out);
    out
}

/// Second, deliberately naive implementation of the lattice: all cyclic
/// subgroups, then the full pairwise-join fixed point.
pub fn naive_pairwise_join_subgroups(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..n {
        set.insert(naive_generated(g, &[x]));
    }
    loop {
        let items: Vec<Vec<usize>> = set.iter().cloned().collect();
        let before = set.len();
        for a in &items {
            for b in &items {
                if a == b {
                    continue;
                }
                let union: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                set.insert(naive_generated(g, &union));
            }
        }
        if set.len() == before {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = set.into_iter().collect();
    sort_canonical(&mut out);
    out
}

fn naive_generated(g: &GroupTable, seed: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; g.order()];
    let mut elems = vec![0];
    in_set[0] = true;
    for &x in seed {
        if !in_set[x] {
            in_set[x] = true;
            elems.push(x);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = elems.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let ab = g.mul(a, b);
                if !in_set[ab] {
                    in_set[ab] = true;
                    elems.push(ab);
                    changed = true;
                }
            }
        }
    }
    elems.sort_unstable();
    elems
}

pub fn sort_canonical(subs: &mut [Vec<usize>]) {
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// All bijections fixing 0 that preserve the table, found by filtering the
/// full permutation set. Only for tiny orders.
pub fn brute_force_automorphisms(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 8, "(n-1)! candidates; keep n tiny");
    let mut images: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    permute(&mut images, 0, &mut |rest| {
        let mut map = Vec::with_capacity(n);
        map.push(0);
        map.extend_from_slice(rest);
        let hom =
            (0..n).all(|a| (0..n).all(|b| map[g.mul(a, b)] == g.mul(map[a], map[b])));
        if hom {
            out.push(map);
        }
    });
    out.sort();
    out
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// The conjugation form of ∘-stability: λ_⋆(S) closed under conjugation by
/// λ_∘(g) for every g, checked directly on permutations.
pub fn circ_stable_by_conjugation(b: &SkewBrace, s: &Subgroup) -> bool {
    let lam_s = s.left_translations(b.star());
    for g in 0..b.order() {
        let lg = b.circ().left_translation(g);
        let lg_inv = lg.inverse();
        for q in lam_s.elements() {
            let conj = lg.compose(q).compose(&lg_inv);
            if !lam_s.contains(&conj) {
                return false;
            }
        }
    }
    true
}

/// Main-theorem oracle: with Γ = (G, ∘) via the given isomorphism, count the
/// subgroups of α(G) ⊆ Perm(Γ) normalized by λ(Γ). Enumerates subgroups of
/// the permutation group directly, independent of the table-lattice path.
pub fn stable_count_via_alpha(iso: &BraceIso) -> usize {
    let alpha = alpha_embedding(iso);
    let lambda_gamma = iso.gamma().left_translations();
    alpha
        .subgroups()
        .expect("fixture braces fit under the cap")
        .iter()
        .filter(|m| normalized_by(m, &lambda_gamma).expect("same degree"))
        .count()
}
