//! Nilpotent F_p-algebras by structure constants and their circle groups.
//!
//! For a radical (nilpotent, associative, non-unital) algebra the operation
//! `a ∘ b = a + b + a·b` is a group law, and `(A, +, ∘)` is a left brace.
//! Elements of `F_p^d` are indexed base-p little-endian: the coefficient of
//! the first basis vector is the least significant digit, so the zero vector
//! is index 0.

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup, DEFAULT_ORDER_CAP};

/// Structure-constant algebra over F_p: `e_i · e_j = Σ_k constants[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentAlgebra {
    p: usize,
    dim: usize,
    constants: Vec<usize>, // flat [i][j][k], entries reduced mod p
}

impl NilpotentAlgebra {
    /// Validates primality of p, the order cap on p^dim, associativity on
    /// basis triples, and nilpotency of the power chain A ⊇ A² ⊇ …
    pub fn new(p: usize, dim: usize, constants: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedInput("dimension must be positive".into()));
        }
        if p > 13 || dim > 4 {
            return Err(Error::OrderCapExceeded {
                order: p.saturating_pow(dim.min(4) as u32),
                cap: DEFAULT_ORDER_CAP,
            });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = p.pow(dim as u32);
        if order > DEFAULT_ORDER_CAP {
            return Err(Error::OrderCapExceeded {
                order,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        if constants.len() != dim
            || constants
                .iter()
                .any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim))
        {
            return Err(Error::MalformedInput(format!(
                "structure constants must be a {dim}×{dim}×{dim} array"
            )));
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for plane in &constants {
            for row in plane {
                for &c in row {
                    if c >= p {
                        return Err(Error::MalformedInput(format!(
                            "structure constant {c} not reduced mod {p}"
                        )));
                    }
                    flat.push(c);
                }
            }
        }
        let alg = Self {
            p,
            dim,
            constants: flat,
        };
        // Associativity on basis triples extends bilinearly to the algebra.
        for i in 0..dim {
            for j in 0..dim {
                let ij = alg.basis_mul(i, j);
                for k in 0..dim {
                    let jk = alg.basis_mul(j, k);
                    let lhs = alg.mul_vec_basis_right(&ij, k);
                    let rhs = alg.mul_vec_basis_left(i, &jk);
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        if !alg.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        Ok(alg)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of elements, p^dim.
    pub fn order(&self) -> usize {
        self.p.pow(self.dim as u32)
    }

    pub fn constants(&self) -> Vec<Vec<Vec<usize>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        (0..self.dim)
                            .map(|k| self.constants[(i * self.dim + j) * self.dim + k])
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// The product `e_i · e_j` as a coefficient vector.
    fn basis_mul(&self, i: usize, j: usize) -> Vec<usize> {
        let base = (i * self.dim + j) * self.dim;
        self.constants[base..base + self.dim].to_vec()
    }

    /// `v · e_k`.
    fn mul_vec_basis_right(&self, v: &[usize], k: usize) -> Vec<usize> {
        let mut out = vec![0; self.dim];
        for (m, &coef) in v.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            for (t, o) in self.basis_mul(m, k).iter().zip(out.iter_mut()) {
                *o = (*o + coef * t) % self.p;
            }
        }
        out
    }

    /// `e_i · v`.
    fn mul_vec_basis_left(&self, i: usize, v: &[usize]) -> Vec<usize> {
        let mut out = vec![0; self.dim];
        for (m, &coef) in v.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            for (t, o) in self.basis_mul(i, m).iter().zip(out.iter_mut()) {
                *o = (*o + coef * t) % self.p;
            }
        }
        out
    }

    /// Bilinear product of two coefficient vectors.
    pub fn mul_vec(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        let mut out = vec![0; self.dim];
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for (t, o) in self.basis_mul(i, j).iter().zip(out.iter_mut()) {
                    *o = (*o + a * b * t) % self.p;
                }
            }
        }
        out
    }

    pub fn add_vec(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        u.iter().zip(v.iter()).map(|(a, b)| (a + b) % self.p).collect()
    }

    pub fn index_to_vec(&self, mut idx: usize) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            v.push(idx % self.p);
            idx /= self.p;
        }
        v
    }

    pub fn vec_to_index(&self, v: &[usize]) -> usize {
        v.iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p + (c % self.p))
    }

    /// `u ∘ v = u + v + u·v`, on indices.
    pub fn circle_op(&self, a: usize, b: usize) -> usize {
        let u = self.index_to_vec(a);
        let v = self.index_to_vec(b);
        let sum = self.add_vec(&self.add_vec(&u, &v), &self.mul_vec(&u, &v));
        self.vec_to_index(&sum)
    }

    /// The additive group `(A, +)` as a table.
    pub fn additive_group(&self) -> GroupTable {
        let n = self.order();
        let rows = (0..n)
            .map(|a| {
                let u = self.index_to_vec(a);
                (0..n)
                    .map(|b| self.vec_to_index(&self.add_vec(&u, &self.index_to_vec(b))))
                    .collect()
            })
            .collect();
        GroupTable::from_rows(rows).expect("componentwise addition mod p is a group")
    }

    /// The circle group `(A, ∘)` as a validated table; the radical property
    /// follows from nilpotency.
    pub fn circle_group(&self) -> GroupTable {
        let n = self.order();
        let rows = (0..n)
            .map(|a| (0..n).map(|b| self.circle_op(a, b)).collect())
            .collect();
        GroupTable::from_rows(rows).expect("the circle operation on a nilpotent algebra is a group")
    }

    /// All additive subgroups closed under left multiplication by every
    /// element; closure under basis multiplications suffices by linearity.
    pub fn left_ideals(&self) -> Result<Vec<Subgroup>> {
        self.left_ideals_capped(DEFAULT_ORDER_CAP)
    }

    pub fn left_ideals_capped(&self, cap: usize) -> Result<Vec<Subgroup>> {
        let additive = self.additive_group();
        let subs = additive.subgroups_capped(cap)?;
        Ok(subs
            .into_iter()
            .filter(|s| {
                s.members().iter().all(|&x| {
                    let v = self.index_to_vec(x);
                    (0..self.dim).all(|i| {
                        let prod = self.mul_vec_basis_left(i, &v);
                        s.contains(self.vec_to_index(&prod))
                    })
                })
            })
            .collect())
    }

    /// The left brace `(A, +, ∘)`.
    pub fn brace(&self) -> Result<SkewBrace> {
        SkewBrace::new(self.additive_group(), self.circle_group())
    }

    /// A ⊇ A² ⊇ A³ ⊇ … must reach zero within dim+1 steps.
    fn is_nilpotent(&self) -> bool {
        // Current power spanned by `basis` (row-echelon over F_p).
        let mut basis: Vec<Vec<usize>> = (0..self.dim)
            .map(|i| {
                let mut e = vec![0; self.dim];
                e[i] = 1;
                e
            })
            .collect();
        for _ in 0..=self.dim {
            if basis.is_empty() {
                return true;
            }
            let mut products = Vec::new();
            for b in &basis {
                for j in 0..self.dim {
                    products.push(self.mul_vec_basis_right(b, j));
                }
            }
            basis = row_echelon(products, self.p);
        }
        basis.is_empty()
    }
}

/// Reduced row-echelon basis of the span of `rows` over F_p.
fn row_echelon(rows: Vec<Vec<usize>>, p: usize) -> Vec<Vec<usize>> {
    let mut basis: Vec<Vec<usize>> = Vec::new();
    for mut row in rows {
        for b in &basis {
            let lead = b.iter().position(|&c| c != 0).expect("basis rows nonzero");
            if row[lead] != 0 {
                let factor = row[lead] * mod_inverse(b[lead], p) % p;
                for (r, &bv) in row.iter_mut().zip(b.iter()) {
                    *r = (*r + p * p - factor * bv % p) % p;
                }
            }
        }
        if row.iter().any(|&c| c != 0) {
            basis.push(row);
            basis.sort_by_key(|r| r.iter().position(|&c| c != 0));
        }
    }
    basis
}

fn mod_inverse(a: usize, p: usize) -> usize {
    (1..p).find(|&x| a * x % p == 1).expect("p prime, a nonzero")
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
