//! Finite groups as Cayley tables over element indices `0..n-1`.
//!
//! The identity is always element `0`. Validation is exhaustive: Latin
//! square, identity row/column, associativity over all triples, two-sided
//! inverses. Everything downstream (subgroup enumeration, automorphisms,
//! holomorphs) assumes a validated table.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Default cap on group order for enumeration-style operations.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// A finite group given by its full multiplication table, identity at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>, // row-major, table[a * order + b] = a·b
    inv: Vec<usize>,
}

impl GroupTable {
    /// Validates a raw table against the group axioms, in order: Latin
    /// square, identity at index 0, associativity, two-sided inverses.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotLatinSquare("table is empty".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotLatinSquare(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for row in &rows {
            table.extend_from_slice(row);
        }
        // Rows and columns are permutations of 0..n.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = table[i * n + j];
                if v >= n {
                    return Err(Error::NotLatinSquare(format!(
                        "entry ({i}, {j}) = {v} out of range"
                    )));
                }
                if seen[v] {
                    return Err(Error::NotLatinSquare(format!("row {i} repeats {v}")));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = table[i * n + j];
                if seen[v] {
                    return Err(Error::NotLatinSquare(format!("column {j} repeats {v}")));
                }
                seen[v] = true;
            }
        }
        for x in 0..n {
            if table[x] != x {
                return Err(Error::NoIdentity(format!("0·{x} = {}", table[x])));
            }
            if table[x * n] != x {
                return Err(Error::NoIdentity(format!("{x}·0 = {}", table[x * n])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            let mut found = None;
            for b in 0..n {
                if table[a * n + b] == 0 && table[b * n + a] == 0 {
                    found = Some(b);
                    break;
                }
            }
            match found {
                Some(b) => inv[a] = b,
                None => return Err(Error::MissingInverse(a)),
            }
        }
        Ok(Self {
            order: n,
            table,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element; index 0 by convention.
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    /// Multiset of element orders, as order -> multiplicity.
    pub fn order_multiset(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for o in self.element_orders() {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> usize {
        self.element_orders()
            .into_iter()
            .fold(1usize, num_integer::lcm)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// λ(g): the permutation `h ↦ g·h`.
    pub fn left_translation(&self, g: usize) -> Permutation {
        Permutation::new((0..self.order).map(|h| self.mul(g, h)).collect())
            .expect("rows of a group table are bijections")
    }

    /// ρ(g): the permutation `h ↦ h·g⁻¹`, so that ρ is a homomorphism.
    pub fn right_translation(&self, g: usize) -> Permutation {
        let gi = self.inv(g);
        Permutation::new((0..self.order).map(|h| self.mul(h, gi)).collect())
            .expect("columns of a group table are bijections")
    }

    /// λ(G) ⊆ Perm(G), the left regular representation.
    pub fn left_translations(&self) -> PermGroup {
        PermGroup::from_elements_unchecked(
            self.order,
            (0..self.order).map(|g| self.left_translation(g)).collect(),
        )
    }

    /// ρ(G) ⊆ Perm(G), the right regular representation.
    pub fn right_translations(&self) -> PermGroup {
        PermGroup::from_elements_unchecked(
            self.order,
            (0..self.order)
                .map(|g| self.right_translation(g))
                .collect(),
        )
    }

    /// Sorted element list of the subgroup generated by `gens`.
    ///
    /// Closure under products suffices in a finite group; inverses appear as
    /// powers.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        self.close_under_product(std::iter::once(0).chain(gens.iter().copied()))
    }

    fn close_under_product(&self, seed: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let n = self.order;
        let mut in_set = vec![false; n];
        let mut elems: Vec<usize> = Vec::new();
        for g in seed {
            if !in_set[g] {
                in_set[g] = true;
                elems.push(g);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            let a = elems[i];
            for j in 0..=i {
                let b = elems[j];
                let ab = self.mul(a, b);
                if !in_set[ab] {
                    in_set[ab] = true;
                    elems.push(ab);
                }
                let ba = self.mul(b, a);
                if !in_set[ba] {
                    in_set[ba] = true;
                    elems.push(ba);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// All subgroups with the default order cap.
    pub fn subgroups(&self) -> Result<Vec<Subgroup>> {
        self.subgroups_capped(DEFAULT_ORDER_CAP)
    }

    /// Complete subgroup list: every cyclic subgroup, then the collection is
    /// closed under pairwise join until a fixed point. Canonically ordered by
    /// (size, lexicographic members).
    pub fn subgroups_capped(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order > cap {
            return Err(Error::OrderCapExceeded {
                order: self.order,
                cap,
            });
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut cyclics: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.order {
            let c = self.generated_subgroup(&[x]);
            if seen.insert(c.clone()) {
                cyclics.push(c);
            }
        }
        // Joining against cyclic subgroups reaches the same fixed point as
        // joining arbitrary pairs: any join decomposes into cyclic steps.
        let mut all = cyclics.clone();
        let mut i = 0;
        while i < all.len() {
            for c in &cyclics {
                if is_sorted_subset(c, &all[i]) {
                    continue;
                }
                let joined =
                    self.close_under_product(all[i].iter().copied().chain(c.iter().copied()));
                if !seen.contains(&joined) {
                    seen.insert(joined.clone());
                    all.push(joined);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(all
            .into_iter()
            .map(|members| Subgroup {
                parent_order: self.order,
                members,
            })
            .collect())
    }

    /// Intersection of two subgroups (always a subgroup).
    pub fn intersect(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let members: Vec<usize> = a
            .members
            .iter()
            .copied()
            .filter(|x| b.contains(*x))
            .collect();
        Subgroup {
            parent_order: self.order,
            members,
        }
    }

    /// Greedy generating set: repeatedly adjoin the smallest element outside
    /// the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut have = self.generated_subgroup(&[]);
        while have.len() < self.order {
            let next = (0..self.order)
                .find(|x| have.binary_search(x).is_err())
                .expect("subgroup is proper, so some element is missing");
            gens.push(next);
            have = self.generated_subgroup(&gens);
        }
        gens
    }

    /// All automorphisms, with the default order cap.
    pub fn automorphism_group(&self) -> Result<PermGroup> {
        self.automorphism_group_capped(DEFAULT_ORDER_CAP)
    }

    /// Backtracking over images of a greedy generating set; candidates are
    /// filtered by element order and partial maps are closed under products
    /// after every assignment.
    pub fn automorphism_group_capped(&self, cap: usize) -> Result<PermGroup> {
        if self.order > cap {
            return Err(Error::OrderCapExceeded {
                order: self.order,
                cap,
            });
        }
        let gens = self.generating_set();
        let orders = self.element_orders();
        let mut state = AutoState {
            map: vec![None; self.order],
            used: vec![false; self.order],
            defined: Vec::with_capacity(self.order),
            pending: Vec::new(),
        };
        let ok = state.assign(0, 0) && state.close(self);
        debug_assert!(ok);
        let mut found = Vec::new();
        self.search_automorphisms(&gens, &orders, 0, &state, &mut found);
        Ok(PermGroup::from_elements_unchecked(self.order, found))
    }

    fn search_automorphisms(
        &self,
        gens: &[usize],
        orders: &[usize],
        k: usize,
        state: &AutoState,
        found: &mut Vec<Permutation>,
    ) {
        if k == gens.len() {
            debug_assert_eq!(state.defined.len(), self.order);
            let images: Vec<usize> = state.map.iter().map(|m| m.expect("map total")).collect();
            debug_assert!((0..self.order).all(|a| {
                (0..self.order).all(|b| images[self.mul(a, b)] == self.mul(images[a], images[b]))
            }));
            found.push(Permutation::new(images).expect("bijection by used[] bookkeeping"));
            return;
        }
        let g = gens[k];
        debug_assert!(state.map[g].is_none(), "generators lie outside the closure");
        for y in 0..self.order {
            if orders[y] != orders[g] || state.used[y] {
                continue;
            }
            let mut next = state.clone();
            if next.assign(g, y) && next.close(self) {
                self.search_automorphisms(gens, orders, k + 1, &next, found);
            }
        }
    }

    /// All holomorph elements, with the default order cap applied to |G|.
    pub fn holomorph(&self) -> Result<PermGroup> {
        self.holomorph_capped(DEFAULT_ORDER_CAP)
    }

    /// Hol(G) = { h ↦ g·θ(h) : g ∈ G, θ ∈ Aut(G) }, of size |G|·|Aut(G)|.
    pub fn holomorph_capped(&self, cap: usize) -> Result<PermGroup> {
        let auts = self.automorphism_group_capped(cap)?;
        let mut elements = Vec::with_capacity(self.order * auts.order());
        for g in 0..self.order {
            for theta in auts.elements() {
                let images = (0..self.order).map(|h| self.mul(g, theta.apply(h))).collect();
                elements.push(Permutation::new(images).expect("composition of bijections"));
            }
        }
        Ok(PermGroup::from_elements_unchecked(self.order, elements))
    }

    /// Membership test for the holomorph without materializing it:
    /// `p ∈ Hol(G)` iff `p λ(g) p⁻¹ ∈ λ(G)` for every `g`.
    pub fn holomorph_contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.order {
            return Err(Error::DegreeMismatch(self.order, p.degree()));
        }
        let p_inv = p.inverse();
        for g in 0..self.order {
            // q = p ∘ λ(g) ∘ p⁻¹; q ∈ λ(G) iff q = λ(q(0)).
            let q0 = p.apply(self.mul(g, p_inv.apply(0)));
            for x in 0..self.order {
                if p.apply(self.mul(g, p_inv.apply(x))) != self.mul(q0, x) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Direct product table; pair (x, y) gets index `x * other.order + y`.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let n = self.order * other.order;
        let mut table = vec![0usize; n * n];
        let mut inv = vec![0usize; n];
        for x1 in 0..self.order {
            for y1 in 0..other.order {
                let a = x1 * other.order + y1;
                inv[a] = self.inv(x1) * other.order + other.inv(y1);
                for x2 in 0..self.order {
                    for y2 in 0..other.order {
                        let b = x2 * other.order + y2;
                        table[a * n + b] = self.mul(x1, x2) * other.order + other.mul(y1, y2);
                    }
                }
            }
        }
        GroupTable {
            order: n,
            table,
            inv,
        }
    }

    /// The Cayley table induced on a subgroup, reindexed by member position.
    pub fn subgroup_table(&self, s: &Subgroup) -> GroupTable {
        let m = s.members.len();
        let pos = |x: usize| {
            s.members
                .binary_search(&x)
                .expect("subgroup is closed under products")
        };
        let mut table = vec![0usize; m * m];
        let mut inv = vec![0usize; m];
        for (i, &a) in s.members.iter().enumerate() {
            inv[i] = pos(self.inv(a));
            for (j, &b) in s.members.iter().enumerate() {
                table[i * m + j] = pos(self.mul(a, b));
            }
        }
        GroupTable {
            order: m,
            table,
            inv,
        }
    }
}

fn is_sorted_subset(sub: &[usize], sup: &[usize]) -> bool {
    sub.len() <= sup.len() && sub.iter().all(|x| sup.binary_search(x).is_ok())
}

#[derive(Clone)]
struct AutoState {
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    defined: Vec<usize>,
    pending: Vec<usize>,
}

impl AutoState {
    /// Record `map[x] = y`; false on conflict with an existing assignment.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        match self.map[x] {
            Some(v) => v == y,
            None => {
                if self.used[y] {
                    return false;
                }
                self.map[x] = Some(y);
                self.used[y] = true;
                self.pending.push(x);
                true
            }
        }
    }

    /// Propagate products of defined elements; false on conflict. Every
    /// ordered pair of defined elements is eventually processed.
    fn close(&mut self, g: &GroupTable) -> bool {
        while let Some(x) = self.pending.pop() {
            self.defined.push(x);
            let ximg = self.map[x].expect("pending elements are assigned");
            for idx in 0..self.defined.len() {
                let d = self.defined[idx];
                let dimg = self.map[d].expect("defined elements are assigned");
                if !self.assign(g.mul(x, d), g.mul(ximg, dimg)) {
                    return false;
                }
                if !self.assign(g.mul(d, x), g.mul(dimg, ximg)) {
                    return false;
                }
            }
        }
        true
    }
}

/// A subgroup of a parent table, stored as a strictly increasing member list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates membership of 0, closure under products and inverses.
    pub fn new(parent: &GroupTable, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        for &x in &members {
            if x >= parent.order() {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    order: parent.order(),
                });
            }
        }
        if members.binary_search(&0).is_err() {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        for &a in &members {
            if members.binary_search(&parent.inv(a)).is_err() {
                return Err(Error::NotASubgroup(format!("missing the inverse of {a}")));
            }
            for &b in &members {
                if members.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(Error::NotASubgroup(format!(
                        "not closed: {a}·{b} = {} is missing",
                        parent.mul(a, b)
                    )));
                }
            }
        }
        Ok(Self {
            parent_order: parent.order(),
            members,
        })
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.parent_order
    }

    /// Membership mask over the parent carrier.
    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent_order];
        for &x in &self.members {
            m[x] = true;
        }
        m
    }

    /// λ(S) inside Perm(parent): the left translations by members.
    pub fn left_translations(&self, parent: &GroupTable) -> PermGroup {
        PermGroup::from_elements_unchecked(
            self.parent_order,
            self.members
                .iter()
                .map(|&g| parent.left_translation(g))
                .collect(),
        )
    }
}
