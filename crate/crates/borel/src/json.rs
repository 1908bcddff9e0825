//! Machine-readable reports. The contract is `schema/report.schema.json`.

use std::collections::BTreeMap;

use borel_core::kernel::IdealClassification;
use borel_core::{DimensionCounts, MonomialIdeal, Root, RootSet, RootSystem};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub family: String,
    pub rank: usize,
    pub positive_roots: Vec<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan_matrix: Option<Vec<Vec<i32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub highest_root: Option<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dynkin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideals: Option<Vec<IdealEntry>>,
    /// Cover relations as index pairs into `ideals`, lower ideal first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_set: Option<Vec<Vec<i32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result_set: Option<Vec<Vec<i32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checks>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<Counts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub roots: Vec<Vec<i32>>,
    pub dimension: usize,
    pub abelian: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_basis: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mixed: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Checks {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial_ideal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelian: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enumerated: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// Nonzero ideals per dimension; keys are dimensions.
    pub by_dimension: BTreeMap<usize, usize>,
    pub nonzero: usize,
    pub with_zero: usize,
    pub abelian_with_zero: usize,
}

impl From<&DimensionCounts> for Counts {
    fn from(c: &DimensionCounts) -> Self {
        Self {
            by_dimension: c.by_dimension.clone(),
            nonzero: c.nonzero,
            with_zero: c.with_zero,
            abelian_with_zero: c.abelian_with_zero,
        }
    }
}

fn vectors<'a>(roots: impl IntoIterator<Item = &'a Root>) -> Vec<Vec<i32>> {
    roots.into_iter().map(|r| r.coeffs().to_vec()).collect()
}

pub fn root_vectors(set: &RootSet, rs: &RootSystem) -> Vec<Vec<i32>> {
    vectors(rs.roots_of(set))
}

impl Report {
    pub fn new(command: &str, rs: &RootSystem) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_owned(),
            family: rs.family().to_string(),
            rank: rs.rank(),
            positive_roots: vectors(rs.positive_roots()),
            cartan_matrix: None,
            highest_root: None,
            dynkin: None,
            ideals: None,
            edges: None,
            input_set: None,
            result_set: None,
            checks: None,
            counts: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Decodes `ideals` back into validated monomial ideals of `rs`.
    pub fn decode_ideals(&self, rs: &RootSystem) -> borel_core::Result<Vec<MonomialIdeal>> {
        let entries = self.ideals.as_deref().unwrap_or_default();
        entries
            .iter()
            .map(|e| {
                let roots: Vec<Root> = e.roots.iter().map(|v| Root::new(v.clone())).collect();
                MonomialIdeal::from_roots(&roots, rs)
            })
            .collect()
    }
}

pub fn ideal_entry(ideal: &MonomialIdeal, abelian: bool, rs: &RootSystem) -> IdealEntry {
    IdealEntry {
        roots: root_vectors(ideal.root_set(), rs),
        dimension: ideal.dimension(),
        abelian,
        kernel_basis: None,
        kernel_dimension: None,
        mixed: None,
    }
}

pub fn classified_entries(c: &IdealClassification, rs: &RootSystem) -> Vec<IdealEntry> {
    c.entries
        .iter()
        .map(|e| IdealEntry {
            kernel_basis: Some(e.kernel.vectors.clone()),
            kernel_dimension: Some(e.kernel.dimension()),
            mixed: Some(e.is_mixed(rs)),
            ..ideal_entry(&e.ideal, e.abelian, rs)
        })
        .collect()
}
