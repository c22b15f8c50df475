//! Built-in groups, algebras and braces used throughout the tests, the CLI
//! and the reproduction suite.

use std::collections::HashMap;

use crate::algebra::{is_prime, NilpotentAlgebra};
use crate::brace::SkewBrace;
use crate::construct::{
    brace_from_exact_factorization, brace_from_fpf_pair, BraceIso, ExactFactorization, FpfPair,
};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup, DEFAULT_ORDER_CAP};

/// What a named fixture evaluates to.
#[derive(Debug, Clone)]
pub enum FixtureObject {
    Group(GroupTable),
    Algebra(NilpotentAlgebra),
    Brace(SkewBrace),
}

/// Optional parameters for [`builtin_fixture`].
#[derive(Debug, Clone, Copy, Default)]
pub struct FixtureParams {
    pub p: Option<usize>,
    pub delta: Option<usize>,
    pub n: Option<usize>,
}

/// Look up a fixture by name. Hyphens and underscores are interchangeable.
///
/// Known names: `a35`, `a34`, `heisenberg`, `rump8`, `heis_fpf`,
/// `sn_factorization`, `zp_hol`.
pub fn builtin_fixture(name: &str, params: FixtureParams) -> Result<FixtureObject> {
    let p = |what: &str| {
        params
            .p
            .ok_or_else(|| Error::BadParams(format!("{what} requires p")))
    };
    match name.replace('-', "_").as_str() {
        "a35" => Ok(FixtureObject::Algebra(a35(p("a35")?)?)),
        "a34" => {
            let delta = params
                .delta
                .ok_or_else(|| Error::BadParams("a34 requires delta".into()))?;
            Ok(FixtureObject::Algebra(a34(p("a34")?, delta)?))
        }
        "heisenberg" => Ok(FixtureObject::Group(heisenberg(p("heisenberg")?)?)),
        "rump8" => Ok(FixtureObject::Brace(rump8())),
        "heis_fpf" => Ok(FixtureObject::Brace(heis_fpf(p("heis_fpf")?)?)),
        "sn_factorization" | "sn" => {
            let n = params
                .n
                .ok_or_else(|| Error::BadParams("sn_factorization requires n".into()))?;
            Ok(FixtureObject::Brace(sn_factorization(n)?.0))
        }
        "zp_hol" => Ok(FixtureObject::Brace(zp_hol(p("zp_hol")?, None)?.0)),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// Z_n as a table.
pub fn cyclic_group(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::BadParams("cyclic group needs n >= 1".into()));
    }
    GroupTable::from_rows((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
}

/// Dihedral group of order 2m with presentation c^m = s² = e, cs = sc^{m-1}.
/// Elements are s^a c^b at index a·m + b.
pub fn dihedral_group(m: usize) -> Result<GroupTable> {
    if m == 0 {
        return Err(Error::BadParams("dihedral group needs m >= 1".into()));
    }
    let n = 2 * m;
    let idx = |a: usize, b: usize| a * m + b;
    let mut rows = vec![vec![0usize; n]; n];
    for a in 0..2 {
        for b in 0..m {
            for a2 in 0..2 {
                for b2 in 0..m {
                    // c^b s = s c^{-b}
                    let target = if a2 == 0 {
                        idx(a, (b + b2) % m)
                    } else {
                        idx(1 - a, (b2 + m - b) % m)
                    };
                    rows[idx(a, b)][idx(a2, b2)] = target;
                }
            }
        }
    }
    GroupTable::from_rows(rows)
}

/// (F_p^d, +) with base-p little-endian indexing.
pub fn elementary_abelian(p: usize, d: usize) -> Result<GroupTable> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = p
        .checked_pow(d as u32)
        .filter(|&n| n <= DEFAULT_ORDER_CAP)
        .ok_or(Error::BadParams(format!(
            "{p}^{d} exceeds the order cap {DEFAULT_ORDER_CAP}"
        )))?;
    let add = |a: usize, b: usize| {
        let (mut a, mut b, mut out, mut scale) = (a, b, 0usize, 1usize);
        for _ in 0..d {
            out += (a % p + b % p) % p * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    };
    GroupTable::from_rows((0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect())
}

/// Heis_3(F_p): unitriangular 3x3 matrices over F_p for odd p, coordinates
/// (a, b, c) at index a + pb + p²c, with
/// (a,b,c) ⋆ (a',b',c') = (a+a', b+b', c+c'+ab').
pub fn heisenberg(p: usize) -> Result<GroupTable> {
    require_odd_prime(p, "heisenberg")?;
    let n = p * p * p;
    if n > DEFAULT_ORDER_CAP {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let digits = |x: usize| (x % p, x / p % p, x / (p * p));
    let rows = (0..n)
        .map(|x| {
            let (a, b, c) = digits(x);
            (0..n)
                .map(|y| {
                    let (a2, b2, c2) = digits(y);
                    (a + a2) % p + (b + b2) % p * p + (c + c2 + a * b2) % p * p * p
                })
                .collect()
        })
        .collect();
    GroupTable::from_rows(rows)
}

/// S_n with elements ordered lexicographically by image array (identity
/// first); the product p·q applies q first.
pub fn symmetric_group(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::BadParams("symmetric group needs n >= 1".into()));
    }
    let order: usize = (1..=n).product();
    if order > DEFAULT_ORDER_CAP {
        return Err(Error::OrderCapExceeded {
            order,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let perms = all_permutations(n);
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let rows = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                    index[&composed]
                })
                .collect()
        })
        .collect();
    GroupTable::from_rows(rows)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x);
                rec(n, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    // Generated in lexicographic order already.
    out
}

fn permutation_is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// The radical algebra A_{3,5}: basis x, y, z with xy = z, yx = -z and all
/// other basis products zero.
pub fn a35(p: usize) -> Result<NilpotentAlgebra> {
    require_odd_prime(p, "a35")?;
    let mut constants = vec![vec![vec![0usize; 3]; 3]; 3];
    constants[0][1][2] = 1;
    constants[1][0][2] = p - 1;
    NilpotentAlgebra::new(p, 3, constants)
}

/// The radical algebra A^δ_{3,4}: x² = z, y² = δz, xy = z, yx = 0, and z
/// annihilates everything.
pub fn a34(p: usize, delta: usize) -> Result<NilpotentAlgebra> {
    require_odd_prime(p, "a34")?;
    if delta >= p {
        return Err(Error::BadParams(format!("delta = {delta} not reduced mod {p}")));
    }
    let mut constants = vec![vec![vec![0usize; 3]; 3]; 3];
    constants[0][0][2] = 1;
    constants[1][1][2] = delta;
    constants[0][1][2] = 1;
    NilpotentAlgebra::new(p, 3, constants)
}

/// Element names of the order-8 brace carrier, in table order.
pub const RUMP8_NAMES: [&str; 8] = ["e", "c", "c2", "c3", "s", "sc", "sc2", "sc3"];

/// The F_2³ label of each element (bits read left to right), from the
/// published conversion table: e=000, c=011, c²=001, c³=101, s=100, sc=110,
/// sc²=010, sc³=111.
pub const RUMP8_F2_LABELS: [u8; 8] = [0b000, 0b011, 0b001, 0b101, 0b100, 0b110, 0b010, 0b111];

/// Rump's left brace of order 8: additive group elementary abelian of rank 3
/// (the published addition table, transcribed verbatim), circle group D_4.
pub fn rump8() -> SkewBrace {
    const ADDITION: [[&str; 8]; 8] = [
        ["e", "c", "c2", "c3", "s", "sc", "sc2", "sc3"],
        ["c", "e", "sc2", "sc", "sc3", "c3", "c2", "s"],
        ["c2", "sc2", "e", "s", "c3", "sc3", "c", "sc"],
        ["c3", "sc", "s", "e", "c2", "c", "sc3", "sc2"],
        ["s", "sc3", "c3", "c2", "e", "sc2", "sc", "c"],
        ["sc", "c3", "sc3", "c", "sc2", "e", "s", "c2"],
        ["sc2", "c2", "c", "sc3", "sc", "s", "e", "c3"],
        ["sc3", "s", "sc", "sc2", "c", "c2", "c3", "e"],
    ];
    let idx_of = |name: &str| {
        RUMP8_NAMES
            .iter()
            .position(|&n| n == name)
            .expect("table symbols are element names")
    };
    let star_rows: Vec<Vec<usize>> = ADDITION
        .iter()
        .map(|row| row.iter().map(|s| idx_of(s)).collect())
        .collect();
    let star = GroupTable::from_rows(star_rows).expect("published addition table is a group");
    // D4 in the orientation whose rows act on the right: with this addition,
    // circ[x][y] = y·x satisfies the brace axiom and circ[x][y] = x·y does not.
    let d4 = dihedral_group(4).expect("D4 exists");
    let circ_rows = (0..8)
        .map(|x| (0..8).map(|y| d4.mul(y, x)).collect())
        .collect();
    let circ = GroupTable::from_rows(circ_rows).expect("the opposite of a group is a group");
    SkewBrace::new(star, circ).expect("these tables form a left brace")
}

/// The fixed point free pair behind Example 7.4: Γ = (F_p³, +),
/// G = Heis_3(F_p), f_l(a,b,c) = (0,b,c) (translation part), f_r(a,b,c) =
/// (-a,0,0) (inverse shear).
pub fn heis_fpf_pair(p: usize) -> Result<FpfPair> {
    require_odd_prime(p, "heis_fpf")?;
    let gamma = elementary_abelian(p, 3)?;
    let g = heisenberg(p)?;
    let n = gamma.order();
    let digits = |x: usize| (x % p, x / p % p, x / (p * p));
    let mut f_l = Vec::with_capacity(n);
    let mut f_r = Vec::with_capacity(n);
    for x in 0..n {
        let (a, b, c) = digits(x);
        f_l.push(b * p + c * p * p);
        f_r.push((p - a) % p);
    }
    FpfPair::new(gamma, g, f_l, f_r)
}

/// The Example 7.4 brace: star ≅ Heis_3(F_p), circ ≅ (F_p³, +).
pub fn heis_fpf(p: usize) -> Result<SkewBrace> {
    brace_from_fpf_pair(&heis_fpf_pair(p)?)
}

/// The exact-factorization brace on S_n = A_n · ⟨(01)⟩ with Γ = A_n × C_2.
pub fn sn_factorization(n: usize) -> Result<(SkewBrace, BraceIso, ExactFactorization)> {
    if n < 2 {
        return Err(Error::BadParams(
            "sn_factorization needs n >= 2 for the transposition".into(),
        ));
    }
    let g = symmetric_group(n)?;
    let perms = all_permutations(n);
    let evens: Vec<usize> = (0..g.order())
        .filter(|&i| permutation_is_even(&perms[i]))
        .collect();
    let h = Subgroup::new(&g, evens)?;
    let mut swap01: Vec<usize> = (0..n).collect();
    swap01.swap(0, 1);
    let swap_idx = perms
        .iter()
        .position(|p| *p == swap01)
        .expect("transposition is a permutation of n >= 2 points");
    let j = Subgroup::new(&g, vec![0, swap_idx])?;
    let ef = ExactFactorization::new(g, h, j)?;
    let (brace, iso) = brace_from_exact_factorization(&ef)?;
    Ok((brace, iso, ef))
}

/// The exact-factorization brace on G = Z_p ⋊ Δ where Δ ≤ Z_p^× is generated
/// by `b` (default: a primitive root, i.e. Δ = Z_p^×). Element (r, δ^s) has
/// index r + p·s.
pub fn zp_hol(p: usize, b: Option<usize>) -> Result<(SkewBrace, BraceIso, ExactFactorization)> {
    require_odd_prime(p, "zp_hol")?;
    let b = match b {
        Some(b) => {
            if b % p <= 1 {
                return Err(Error::BadParams(format!(
                    "generator {b} of Δ must have multiplicative order > 1 mod {p}"
                )));
            }
            b % p
        }
        None => primitive_root(p),
    };
    let k = multiplicative_order(b, p);
    let n = p * k;
    if n > DEFAULT_ORDER_CAP {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let pow_b: Vec<usize> = {
        let mut v = Vec::with_capacity(k);
        let mut acc = 1usize;
        for _ in 0..k {
            v.push(acc);
            acc = acc * b % p;
        }
        v
    };
    // (r, s)·(r', s') = (r + b^s r', s + s')
    let rows = (0..n)
        .map(|x| {
            let (r, s) = (x % p, x / p);
            (0..n)
                .map(|y| {
                    let (r2, s2) = (y % p, y / p);
                    (r + pow_b[s] * r2) % p + p * ((s + s2) % k)
                })
                .collect()
        })
        .collect();
    let g = GroupTable::from_rows(rows)?;
    let h = Subgroup::new(&g, (0..p).collect())?;
    let j = Subgroup::new(&g, (0..k).map(|s| p * s).collect())?;
    let ef = ExactFactorization::new(g, h, j)?;
    let (brace, iso) = brace_from_exact_factorization(&ef)?;
    Ok((brace, iso, ef))
}

fn require_odd_prime(p: usize, what: &str) -> Result<()> {
    if !is_prime(p) || p == 2 {
        return Err(Error::BadParams(format!("{what} requires an odd prime, got {p}")));
    }
    Ok(())
}

fn multiplicative_order(b: usize, p: usize) -> usize {
    let mut acc = b % p;
    let mut k = 1;
    while acc != 1 {
        acc = acc * b % p;
        k += 1;
    }
    k
}

fn primitive_root(p: usize) -> usize {
    (2..p)
        .find(|&g| multiplicative_order(g, p) == p - 1)
        .expect("every odd prime has a primitive root")
}

/// The standard battery of fixture braces of order at most `max_order`,
/// with the exact-factorization isomorphisms where one is distinguished.
pub fn braces_with_isos(
    max_order: usize,
) -> Result<Vec<(String, SkewBrace, Option<BraceIso>)>> {
    let mut out: Vec<(String, SkewBrace, Option<BraceIso>)> = Vec::new();
    if 6 <= max_order {
        out.push((
            "trivial_z6".into(),
            SkewBrace::trivial(cyclic_group(6)?),
            None,
        ));
    }
    if 8 <= max_order {
        out.push((
            "trivial_d4".into(),
            SkewBrace::trivial(dihedral_group(4)?),
            None,
        ));
        out.push(("rump8".into(), rump8(), None));
    }
    for n in 3..=5 {
        let order: usize = (1..=n).product();
        if order <= max_order {
            let (brace, iso, _) = sn_factorization(n)?;
            out.push((format!("sn_{n}"), brace, Some(iso)));
        }
    }
    for p in [3usize, 5, 7] {
        if p * (p - 1) <= max_order {
            let (brace, iso, _) = zp_hol(p, None)?;
            out.push((format!("zp_hol_{p}"), brace, Some(iso)));
        }
    }
    for p in [3usize, 5] {
        let cube = p * p * p;
        if cube <= max_order {
            out.push((format!("a35_{p}"), a35(p)?.brace()?, None));
            for delta in 0..if p == 3 { 3 } else { 2 } {
                out.push((format!("a34_{p}_d{delta}"), a34(p, delta)?.brace()?, None));
            }
            out.push((format!("heis_fpf_{p}"), heis_fpf(p)?, None));
        }
    }
    Ok(out)
}

/// The exact-factorization fixtures of order at most `max_order`, with their
/// braces and factorizations.
pub fn exact_factorization_battery(
    max_order: usize,
) -> Result<Vec<(String, SkewBrace, BraceIso, ExactFactorization)>> {
    let mut out = Vec::new();
    for n in 3..=5 {
        let order: usize = (1..=n).product();
        if order <= max_order {
            let (brace, iso, ef) = sn_factorization(n)?;
            out.push((format!("sn_{n}"), brace, iso, ef));
        }
    }
    for p in [3usize, 5, 7] {
        if p * (p - 1) <= max_order {
            let (brace, iso, ef) = zp_hol(p, None)?;
            out.push((format!("zp_hol_{p}"), brace, iso, ef));
        }
    }
    Ok(out)
}
