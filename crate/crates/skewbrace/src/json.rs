//! Serde mirrors of the on-disk JSON schemas. Each raw struct parses the
//! exact wire shape and converts into a validated domain value; emitters go
//! the other way and always produce canonically sorted output.

use serde::{Deserialize, Serialize};

use crate::algebra::NilpotentAlgebra;
use crate::brace::{GaloisReport, SkewBrace};
use crate::construct::{ExactFactorization, FpfPair};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::perm::{PermGroup, Permutation};

/// `{ "order": n, "table": [[int]] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn validate(self) -> Result<GroupTable> {
        if self.table.len() != self.order {
            return Err(Error::MalformedInput(format!(
                "order field is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        GroupTable::from_rows(self.table)
    }

    pub fn from_table(g: &GroupTable) -> Self {
        Self {
            order: g.order(),
            table: g.rows(),
        }
    }
}

/// `{ "degree": n, "elements": [[int]] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermGroupJson {
    pub degree: usize,
    pub elements: Vec<Vec<usize>>,
}

impl PermGroupJson {
    pub fn validate(self) -> Result<PermGroup> {
        let elements = self
            .elements
            .into_iter()
            .map(Permutation::new)
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree, elements)
    }

    pub fn from_group(pg: &PermGroup) -> Self {
        Self {
            degree: pg.degree(),
            elements: pg.elements().iter().map(|p| p.images().to_vec()).collect(),
        }
    }
}

/// `{ "order": n, "star": [[int]], "circ": [[int]] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceJson {
    pub order: usize,
    pub star: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
}

impl BraceJson {
    pub fn validate(self) -> Result<SkewBrace> {
        if self.star.len() != self.order || self.circ.len() != self.order {
            return Err(Error::MalformedInput(format!(
                "order field is {} but the tables have {} and {} rows",
                self.order,
                self.star.len(),
                self.circ.len()
            )));
        }
        SkewBrace::new(GroupTable::from_rows(self.star)?, GroupTable::from_rows(self.circ)?)
    }

    pub fn from_brace(b: &SkewBrace) -> Self {
        Self {
            order: b.order(),
            star: b.star().rows(),
            circ: b.circ().rows(),
        }
    }
}

/// `{ "p": int, "dim": int, "mul": [[[int]]] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub p: usize,
    pub dim: usize,
    pub mul: Vec<Vec<Vec<usize>>>,
}

impl AlgebraJson {
    pub fn validate(self) -> Result<NilpotentAlgebra> {
        NilpotentAlgebra::new(self.p, self.dim, self.mul)
    }

    pub fn from_algebra(a: &NilpotentAlgebra) -> Self {
        Self {
            p: a.p(),
            dim: a.dim(),
            mul: a.constants(),
        }
    }
}

/// `{ "gamma": group, "g": group, "f_l": [int], "f_r": [int] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FpfPairJson {
    pub gamma: GroupJson,
    pub g: GroupJson,
    pub f_l: Vec<usize>,
    pub f_r: Vec<usize>,
}

impl FpfPairJson {
    pub fn validate(self) -> Result<FpfPair> {
        FpfPair::new(self.gamma.validate()?, self.g.validate()?, self.f_l, self.f_r)
    }

    pub fn from_pair(p: &FpfPair) -> Self {
        Self {
            gamma: GroupJson::from_table(p.gamma()),
            g: GroupJson::from_table(p.g()),
            f_l: p.f_l().to_vec(),
            f_r: p.f_r().to_vec(),
        }
    }
}

/// `{ "g": group, "h": [int], "j": [int] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExactFactorizationJson {
    pub g: GroupJson,
    pub h: Vec<usize>,
    pub j: Vec<usize>,
}

impl ExactFactorizationJson {
    pub fn validate(self) -> Result<ExactFactorization> {
        let group = self.g.validate()?;
        let h = Subgroup::new(&group, self.h).map_err(|e| Error::NotComplementary(e.to_string()))?;
        let j = Subgroup::new(&group, self.j).map_err(|e| Error::NotComplementary(e.to_string()))?;
        ExactFactorization::new(group, h, j)
    }

    pub fn from_factorization(ef: &ExactFactorization) -> Self {
        Self {
            g: GroupJson::from_table(ef.group()),
            h: ef.h().members().to_vec(),
            j: ef.j().members().to_vec(),
        }
    }
}

/// `{ "star": group, "regular": permgroup }` — input shape for building a
/// brace from a regular subgroup of the holomorph.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HolomorphRegularJson {
    pub star: GroupJson,
    pub regular: PermGroupJson,
}

/// `{ "stable": k, "subgroups": m, "ratio": "k/m", "stable_list": [[int]] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub stable: usize,
    pub subgroups: usize,
    pub ratio: String,
    pub stable_list: Vec<Vec<usize>>,
}

impl ReportJson {
    pub fn from_report(r: &GaloisReport) -> Self {
        Self {
            stable: r.count_circ_stable,
            subgroups: r.count_circ_subgroups,
            ratio: r.ratio.to_string(),
            stable_list: r.stable_list.iter().map(|s| s.members().to_vec()).collect(),
        }
    }
}
