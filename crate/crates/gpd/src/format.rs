//! JSON file formats.
//!
//! Undefined products are `-1` in groupoid files. Compact files end with a
//! single newline so they diff cleanly.

use std::collections::BTreeMap;

use gpd_core::{
    Census, Groupoid, LinOp, MonoidTable, ProbeReport, RawGroupoid, StructureReport, Verdict,
};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidFile {
    #[serde(default)]
    pub name: String,
    pub size: usize,
    pub product: Vec<Vec<i64>>,
    pub inverse: Vec<usize>,
}

impl GroupoidFile {
    pub fn from_groupoid(g: &Groupoid) -> Self {
        let raw = g.to_raw();
        GroupoidFile {
            name: raw.name,
            size: raw.size,
            product: raw
                .product
                .iter()
                .map(|row| row.iter().map(|c| c.map_or(-1, |z| z as i64)).collect())
                .collect(),
            inverse: raw.inverse,
        }
    }

    pub fn to_raw(&self) -> Result<RawGroupoid> {
        let product = self
            .product
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| match v {
                        -1 => Ok(None),
                        v if v >= 0 => Ok(Some(v as usize)),
                        v => Err(Error::Format(format!(
                            "product entry {v} is neither an id nor -1"
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RawGroupoid {
            name: self.name.clone(),
            size: self.size,
            product,
            inverse: self.inverse.clone(),
        })
    }
}

/// A groupoid given inline or by a constructor name such as `C3` or `pair(2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupoidRef {
    Named(String),
    Inline(GroupoidFile),
}

impl GroupoidRef {
    pub fn resolve(&self, cap: usize) -> Result<Groupoid> {
        match self {
            GroupoidRef::Inline(f) => Ok(Groupoid::build_capped(f.to_raw()?, cap)?),
            GroupoidRef::Named(name) => named_groupoid(name, cap),
        }
    }
}

/// Parses `C<n>`, `V4`, `pair(<n>)`, and `unit(<n>)`.
pub fn named_groupoid(name: &str, cap: usize) -> Result<Groupoid> {
    let arg = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()
    };
    if name == "V4" {
        return Ok(Groupoid::klein_four());
    }
    if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse().ok()) {
        return Ok(Groupoid::cyclic_capped(n, cap)?);
    }
    if let Some(n) = arg("pair(") {
        return Ok(Groupoid::pair_capped(n, cap)?);
    }
    if let Some(n) = arg("unit(") {
        return Ok(Groupoid::unit_set_capped(n, cap)?);
    }
    Err(Error::Format(format!("unknown groupoid name {name:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    pub group: GroupoidRef,
    pub space: usize,
    pub act: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GFunFile {
    pub groupoid: GroupoidRef,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub side: String,
    pub elements: Vec<Vec<usize>>,
    pub identity: usize,
    pub op: Vec<Vec<usize>>,
}

impl TableFile {
    pub fn from_table(t: &MonoidTable) -> Self {
        TableFile {
            side: t.side().as_str().into(),
            elements: t.maps().map(<[usize]>::to_vec).collect(),
            identity: t.identity(),
            op: (0..t.len()).map(|i| t.row(i).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    #[serde(rename = "fn")]
    pub function: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

impl MatrixFile {
    pub fn new(function: &[usize], op: &LinOp) -> Self {
        MatrixFile {
            function: function.to_vec(),
            matrix: op.rows(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub what: String,
    pub values: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictFile {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessFile>,
}

impl From<&Verdict> for VerdictFile {
    fn from(v: &Verdict) -> Self {
        VerdictFile {
            pass: v.pass,
            witness: v.witness.as_ref().map(|w| WitnessFile {
                what: w.what.clone(),
                values: w.values.clone(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub groupoid: String,
    pub size: usize,
    pub s_size: usize,
    pub sp_size: usize,
    pub assoc_exhaustive: bool,
    pub idempotents: Vec<usize>,
    pub right_zeros: Vec<usize>,
    pub left_zeros: Vec<usize>,
    pub unit_group: UnitGroupFile,
    pub tg: Vec<usize>,
    pub j_ideal: Vec<usize>,
    pub intersection: Vec<usize>,
    pub verdicts: BTreeMap<String, VerdictFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitGroupFile {
    pub indices: Vec<usize>,
    pub inverses: Vec<usize>,
}

impl From<&StructureReport> for ReportFile {
    fn from(r: &StructureReport) -> Self {
        ReportFile {
            groupoid: r.groupoid.clone(),
            size: r.size,
            s_size: r.s_size,
            sp_size: r.sp_size,
            assoc_exhaustive: r.assoc_exhaustive,
            idempotents: r.idempotents.clone(),
            right_zeros: r.right_zeros.clone(),
            left_zeros: r.left_zeros.clone(),
            unit_group: UnitGroupFile {
                indices: r.units.clone(),
                inverses: r.unit_inverses.clone(),
            },
            tg: r.dense.clone(),
            j_ideal: r.j_ideal.clone(),
            intersection: r.intersection.clone(),
            verdicts: r
                .verdicts
                .iter()
                .map(|(k, v)| (k.key().to_string(), v.into()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestFile {
    pub order: usize,
    pub count: usize,
    pub names: Vec<String>,
}

impl From<&Census> for ManifestFile {
    fn from(c: &Census) -> Self {
        ManifestFile {
            order: c.order,
            count: c.count(),
            names: c
                .representatives
                .iter()
                .map(|g| g.name().to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeEntryFile {
    pub order: usize,
    #[serde(rename = "groupoid-name")]
    pub groupoid_name: String,
    pub principal: bool,
    pub intersection_size: u64,
    pub candidate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeFile {
    pub max_order: usize,
    pub forward_holds: bool,
    pub conclusion: String,
    pub entries: Vec<ProbeEntryFile>,
    pub certificates: Vec<GroupoidFile>,
}

impl From<&ProbeReport> for ProbeFile {
    fn from(r: &ProbeReport) -> Self {
        let n = r.candidates().count();
        ProbeFile {
            max_order: r.max_order,
            forward_holds: r.forward_holds(),
            conclusion: if n == 0 {
                format!("no counterexample up to order {}", r.max_order)
            } else {
                format!("{n} candidate(s) up to order {}", r.max_order)
            },
            entries: r
                .entries
                .iter()
                .map(|e| ProbeEntryFile {
                    order: e.order,
                    groupoid_name: e.name.clone(),
                    principal: e.principal,
                    intersection_size: u64::try_from(e.intersection_size).unwrap_or(u64::MAX),
                    candidate: e.candidate,
                })
                .collect(),
            certificates: r
                .certificates
                .iter()
                .map(GroupoidFile::from_groupoid)
                .collect(),
        }
    }
}

/// Compact JSON with a trailing newline.
pub fn to_compact<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("file types always serialize");
    s.push('\n');
    s
}

/// Indented JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types always serialize");
    s.push('\n');
    s
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_file_round_trip() {
        let g = Groupoid::cyclic(2).unwrap();
        let text = to_compact(&GroupoidFile::from_groupoid(&g));
        assert_eq!(
            text,
            "{\"name\":\"C2\",\"size\":2,\"product\":[[0,1],[1,0]],\"inverse\":[0,1]}\n"
        );
        let back: GroupoidFile = parse(&text).unwrap();
        assert_eq!(Groupoid::build(back.to_raw().unwrap()).unwrap(), g);
    }

    #[test]
    fn undefined_entries_are_minus_one() {
        let f = GroupoidFile::from_groupoid(&Groupoid::unit_set(2).unwrap());
        assert_eq!(f.product, vec![vec![0, -1], vec![-1, 1]]);
        let bad = GroupoidFile {
            product: vec![vec![0, -2], vec![-1, 1]],
            ..f
        };
        assert!(matches!(bad.to_raw(), Err(Error::Format(_))));
    }

    #[test]
    fn named_groupoids() {
        assert_eq!(named_groupoid("C3", 64).unwrap().len(), 3);
        assert_eq!(named_groupoid("pair(2)", 64).unwrap().len(), 4);
        assert_eq!(named_groupoid("unit(3)", 64).unwrap().len(), 3);
        assert_eq!(named_groupoid("V4", 64).unwrap().len(), 4);
        assert!(named_groupoid("Q8", 64).is_err());
        assert!(named_groupoid("pair(9)", 64).is_err());
    }

    #[test]
    fn gfun_file_accepts_names_and_inline() {
        let by_name: GFunFile = parse(r#"{"groupoid":"C2","map":[1,1]}"#).unwrap();
        assert_eq!(by_name.groupoid.resolve(64).unwrap().name(), "C2");
        let inline: GFunFile =
            parse(r#"{"groupoid":{"size":1,"product":[[0]],"inverse":[0]},"map":[0]}"#).unwrap();
        assert_eq!(inline.groupoid.resolve(64).unwrap().len(), 1);
    }

    #[test]
    fn probe_schema_keys() {
        let e = ProbeEntryFile {
            order: 2,
            groupoid_name: "census-2-0".into(),
            principal: false,
            intersection_size: 4,
            candidate: false,
        };
        let v: serde_json::Value = serde_json::to_value(&e).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            [
                "candidate",
                "groupoid-name",
                "intersection_size",
                "order",
                "principal"
            ]
        );
    }
}
