//! JSON schemas for algebras, cochains, Laurent scalars, degeneration
//! fixtures, and condition reports. Basis indices are 1-based in JSON,
//! matching the rendered tables; omitted products and cochain values are
//! zero.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use leibniz_core::catalog::{self, Params};
use leibniz_core::cohomology::Cochain2;
use leibniz_core::degeneration::{BasisChangeFamily, DegenerationFixture, PostChange};
use leibniz_core::invariants::{ConditionStatus, DegenerationReport, Verdict};
use leibniz_core::matrix::Matrix;
use leibniz_core::scalar::{LaurentScalar, Rational};
use leibniz_core::{Algebra, StructureTensor};

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("invalid exponent `{0}`")]
    Exponent(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("basis list has {got} labels for dimension {dim}")]
    BasisLength { got: usize, dim: usize },
    #[error("matrix is not {0}x{0}")]
    MatrixShape(usize),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
}

fn parse_rational(s: &str) -> Result<Rational, SchemaError> {
    s.trim()
        .parse()
        .map_err(|_| SchemaError::Rational(s.to_string()))
}

/// One structure constant `[e_i, e_j] -> c * e_k`, 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<EntryJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilradical: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, String>>,
}

fn entries_of(tensor: &StructureTensor<Rational>) -> Vec<EntryJson> {
    tensor
        .nonzero_entries()
        .map(|(i, j, k, c)| EntryJson {
            i: i + 1,
            j: j + 1,
            k: k + 1,
            c: c.to_string(),
        })
        .collect()
}

fn tensor_from_entries(
    dim: usize,
    entries: &[EntryJson],
) -> Result<StructureTensor<Rational>, SchemaError> {
    let mut tensor = StructureTensor::zeros(dim);
    for e in entries {
        if e.i < 1 || e.i > dim || e.j < 1 || e.j > dim || e.k < 1 || e.k > dim {
            return Err(SchemaError::Index(format!("({}, {}, {})", e.i, e.j, e.k)));
        }
        tensor.set(e.i - 1, e.j - 1, e.k - 1, parse_rational(&e.c)?);
    }
    Ok(tensor)
}

pub fn algebra_to_json(a: &Algebra) -> AlgebraJson {
    AlgebraJson {
        name: a.name.clone(),
        dim: a.dim(),
        basis: a.basis_labels.clone(),
        brackets: entries_of(&a.tensor),
        nilradical: a
            .nilradical
            .as_ref()
            .map(|ix| ix.iter().map(|i| i + 1).collect()),
        params: if a.params.is_empty() {
            None
        } else {
            Some(
                a.params
                    .iter()
                    .map(|(k, v)| (k.clone(), v.to_string()))
                    .collect(),
            )
        },
    }
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<Algebra, SchemaError> {
    let dim = j.dim;
    let basis_labels = if j.basis.is_empty() {
        (1..=dim).map(|i| format!("e_{i}")).collect()
    } else if j.basis.len() == dim {
        j.basis.clone()
    } else {
        return Err(SchemaError::BasisLength {
            got: j.basis.len(),
            dim,
        });
    };
    let tensor = tensor_from_entries(dim, &j.brackets)?;
    let nilradical = match &j.nilradical {
        None => None,
        Some(ix) => {
            let mut out = Vec::with_capacity(ix.len());
            for &i in ix {
                if i < 1 || i > dim {
                    return Err(SchemaError::Index(format!("nilradical index {i}")));
                }
                out.push(i - 1);
            }
            Some(out)
        }
    };
    let mut params = Params::new();
    if let Some(p) = &j.params {
        for (k, v) in p {
            params.insert(k.clone(), parse_rational(v)?);
        }
    }
    Ok(Algebra {
        name: j.name.clone(),
        tensor,
        basis_labels,
        nilradical,
        params,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainJson {
    pub dim: usize,
    pub entries: Vec<EntryJson>,
}

pub fn cochain_to_json(phi: &Cochain2) -> CochainJson {
    CochainJson {
        dim: phi.dim(),
        entries: phi
            .nonzero_entries()
            .map(|(i, j, k, c)| EntryJson {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                c: c.to_string(),
            })
            .collect(),
    }
}

pub fn cochain_from_json(j: &CochainJson) -> Result<Cochain2, SchemaError> {
    let tensor = tensor_from_entries(j.dim, &j.entries)?;
    Ok(Cochain2::from_flat(j.dim, tensor.flat().to_vec()))
}

/// A Laurent scalar as a map from exponent strings to rational strings,
/// e.g. `{"-1": "1", "0": "2"}`.
pub type LaurentJson = BTreeMap<String, String>;

pub fn laurent_to_json(s: &LaurentScalar) -> LaurentJson {
    s.iter()
        .map(|(e, c)| (e.to_string(), c.to_string()))
        .collect()
}

pub fn laurent_from_json(j: &LaurentJson) -> Result<LaurentScalar, SchemaError> {
    let mut out = LaurentScalar::zero();
    for (e, c) in j {
        let exp: i64 = e
            .trim()
            .parse()
            .map_err(|_| SchemaError::Exponent(e.clone()))?;
        out += &LaurentScalar::monomial(parse_rational(c)?, exp);
    }
    Ok(out)
}

pub fn laurent_matrix_to_json(m: &Matrix<LaurentScalar>) -> Vec<Vec<LaurentJson>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| laurent_to_json(m.at(r, c))).collect())
        .collect()
}

pub fn laurent_matrix_from_json(
    rows: &[Vec<LaurentJson>],
    dim: usize,
) -> Result<Matrix<LaurentScalar>, SchemaError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(SchemaError::MatrixShape(dim));
    }
    let mut m = Matrix::<LaurentScalar>::zeros(dim, dim);
    for (r, row) in rows.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            *m.at_mut(r, c) = laurent_from_json(cell)?;
        }
    }
    Ok(m)
}

fn rational_matrix_from_json(
    rows: &[Vec<String>],
    dim: usize,
) -> Result<Matrix<Rational>, SchemaError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(SchemaError::MatrixShape(dim));
    }
    let mut m = Matrix::<Rational>::zeros(dim, dim);
    for (r, row) in rows.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            *m.at_mut(r, c) = parse_rational(cell)?;
        }
    }
    Ok(m)
}

/// Either a catalog name like `"R2(5,alpha=1)"` or a full algebra object.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Full(AlgebraJson),
}

impl AlgebraRef {
    pub fn resolve(&self) -> Result<Algebra, SchemaError> {
        match self {
            Self::Name(name) => Ok(catalog::build_from_name(name)?),
            Self::Full(j) => algebra_from_json(j),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PostChangeJson {
    pub g: Vec<Vec<String>>,
    pub g_inverse: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureJson {
    pub source: AlgebraRef,
    pub target: AlgebraRef,
    pub g: Vec<Vec<LaurentJson>>,
    pub g_inverse: Vec<Vec<LaurentJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub post_change: Option<PostChangeJson>,
}

#[derive(Debug, thiserror::Error)]
pub enum FixtureLoadError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("g and g_inverse are not an inverse pair")]
    BadInverse,
}

pub fn fixture_from_json(j: &FixtureJson) -> Result<DegenerationFixture, FixtureLoadError> {
    let source = j.source.resolve()?;
    let target = j.target.resolve()?;
    let dim = source.dim();
    let g = laurent_matrix_from_json(&j.g, dim)?;
    let ginv = laurent_matrix_from_json(&j.g_inverse, dim)?;
    let family = BasisChangeFamily::new(g, ginv).map_err(|_| FixtureLoadError::BadInverse)?;
    let post_change = match &j.post_change {
        None => None,
        Some(pc) => Some(PostChange {
            g: rational_matrix_from_json(&pc.g, dim)?,
            g_inverse: rational_matrix_from_json(&pc.g_inverse, dim)?,
        }),
    };
    Ok(DegenerationFixture {
        source,
        family,
        target,
        post_change,
    })
}

pub fn fixture_to_json(f: &DegenerationFixture) -> FixtureJson {
    FixtureJson {
        source: AlgebraRef::Full(algebra_to_json(&f.source)),
        target: AlgebraRef::Full(algebra_to_json(&f.target)),
        g: laurent_matrix_to_json(f.family.g()),
        g_inverse: laurent_matrix_to_json(f.family.g_inverse()),
        post_change: f.post_change.as_ref().map(|pc| PostChangeJson {
            g: (0..pc.g.rows())
                .map(|r| pc.g.row(r).iter().map(|v| v.to_string()).collect())
                .collect(),
            g_inverse: (0..pc.g_inverse.rows())
                .map(|r| pc.g_inverse.row(r).iter().map(|v| v.to_string()).collect())
                .collect(),
        }),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConditionJson {
    pub condition: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub source: String,
    pub target: String,
    pub conditions: Vec<ConditionJson>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<String>,
}

pub fn report_to_json(r: &DegenerationReport) -> ReportJson {
    let status_str = |s: ConditionStatus| {
        match s {
            ConditionStatus::Pass => "pass",
            ConditionStatus::Fail => "fail",
            ConditionStatus::Undefined => "undefined",
            ConditionStatus::Unknown => "unknown",
        }
        .to_string()
    };
    let (verdict, reasons) = match &r.verdict {
        Verdict::Possible => ("possible".to_string(), Vec::new()),
        Verdict::RuledOut(reasons) => ("ruled_out".to_string(), reasons.clone()),
    };
    ReportJson {
        source: r.source.clone(),
        target: r.target.clone(),
        conditions: r
            .conditions
            .iter()
            .map(|c| ConditionJson {
                condition: c.condition.clone(),
                status: status_str(c.status),
                lhs: c.lhs.clone(),
                rhs: c.rhs.clone(),
            })
            .collect(),
        verdict,
        reasons,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::scalar::rat_int;

    #[test]
    fn algebra_round_trips_through_json() {
        let a = catalog::build_from_name("RL3(6,j=4)").unwrap();
        let text = serde_json::to_string_pretty(&algebra_to_json(&a)).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        let b = algebra_from_json(&back).unwrap();
        assert_eq!(a.tensor, b.tensor);
        assert_eq!(a.nilradical, b.nilradical);
        assert_eq!(a.params, b.params);
    }

    #[test]
    fn laurent_round_trips() {
        let s = LaurentScalar::monomial(rat_int(1), -1) + LaurentScalar::constant(rat_int(2));
        let j = laurent_to_json(&s);
        assert_eq!(j.get("-1").map(String::as_str), Some("1"));
        assert_eq!(j.get("0").map(String::as_str), Some("2"));
        assert_eq!(laurent_from_json(&j).unwrap(), s);
    }

    #[test]
    fn fixture_with_catalog_names_resolves() {
        let text = r#"{
            "source": "NF(2)",
            "target": "Ab(2)",
            "g": [[{"-1": "1"}, {}], [{}, {"-1": "1"}]],
            "g_inverse": [[{"1": "1"}, {}], [{}, {"1": "1"}]]
        }"#;
        let j: FixtureJson = serde_json::from_str(text).unwrap();
        let fixture = fixture_from_json(&j).unwrap();
        let outcome = leibniz_core::degeneration::run_fixture(&fixture).unwrap();
        assert_eq!(outcome.limit, StructureTensor::zeros(2));
    }

    #[test]
    fn bad_rational_is_rejected() {
        let j = AlgebraJson {
            name: "broken".into(),
            dim: 2,
            basis: vec![],
            brackets: vec![EntryJson {
                i: 1,
                j: 1,
                k: 2,
                c: "not-a-number".into(),
            }],
            nilradical: None,
            params: None,
        };
        assert!(algebra_from_json(&j).is_err());
    }
}
