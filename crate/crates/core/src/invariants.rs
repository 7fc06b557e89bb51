//! Trace invariants of right multiplication, orbit dimension, and the
//! degeneration necessary-condition report.
//!
//! `ad x` is the right-multiplication operator `R_x : y -> [y, x]`; for these
//! algebras it is the operator whose traces reproduce the known invariant
//! values, and unlike left multiplication it respects operator composition
//! under the (non-antisymmetric) bracket.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{Algebra, StructureTensor};
use crate::cohomology::derivation_space;
use crate::matrix::Matrix;
use crate::scalar::{rat, Rational};

/// Default seed for the sampled invariant evaluations.
pub const DEFAULT_SAMPLE_SEED: u64 = 0x5EED;

/// The right-multiplication operator by `x` as a matrix on coordinates.
pub fn right_mult_matrix(t: &StructureTensor<Rational>, x: &[Rational]) -> Matrix<Rational> {
    let d = t.dim();
    assert_eq!(x.len(), d);
    let mut m = Matrix::zeros(d, d);
    for (j, xj) in x.iter().enumerate() {
        if xj.is_zero() {
            continue;
        }
        for col in 0..d {
            for k in 0..d {
                let g = t.get(col, j, k);
                if !g.is_zero() {
                    *m.at_mut(k, col) += xj * g;
                }
            }
        }
    }
    m
}

/// Linear and bilinear trace data of right multiplication:
/// `tau_i = tr R_{e_i}` and `kappa_{ij} = tr(R_{e_i} o R_{e_j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    pub tau: Vec<Rational>,
    pub kappa: Matrix<Rational>,
}

pub fn trace_form(t: &StructureTensor<Rational>) -> TraceForm {
    let d = t.dim();
    let mut tau = vec![Rational::zero(); d];
    for (i, ti) in tau.iter_mut().enumerate() {
        for k in 0..d {
            *ti += t.get(k, i, k);
        }
    }
    let mut kappa = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let mut acc = Rational::zero();
            for k in 0..d {
                for m in 0..d {
                    let a = t.get(m, i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = t.get(k, j, m);
                    if !b.is_zero() {
                        acc += a * b;
                    }
                }
            }
            *kappa.at_mut(i, j) = acc;
        }
    }
    TraceForm { tau, kappa }
}

/// An invariant value; `Undefined` when a defining trace polynomial vanishes
/// identically or the defining ratio is not constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Defined(Rational),
    Undefined,
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Defined(v) => write!(f, "{v}"),
            Self::Undefined => write!(f, "undefined"),
        }
    }
}

/// Exact decision for the `(1,1)` trace invariant: defined iff `tau != 0`,
/// `kappa != 0`, and `tau tau^T = c kappa` for a rational `c`; the value is
/// `c`. This is exactly the statement that
/// `tr(R_x) tr(R_y) / tr(R_x o R_y)` is constant over all `x, y`.
pub fn c11_exact(t: &StructureTensor<Rational>) -> InvariantValue {
    let TraceForm { tau, kappa } = trace_form(t);
    let d = tau.len();
    if tau.iter().all(Zero::is_zero) {
        return InvariantValue::Undefined;
    }
    let Some((p, q)) = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| !kappa.at(i, j).is_zero())
    else {
        return InvariantValue::Undefined;
    };
    let c = (&tau[p] * &tau[q]) / kappa.at(p, q);
    for i in 0..d {
        for j in 0..d {
            if &tau[i] * &tau[j] != &c * kappa.at(i, j) {
                return InvariantValue::Undefined;
            }
        }
    }
    InvariantValue::Defined(c)
}

/// Outcome of a sampled `(i, j)` invariant evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampledInvariant {
    Defined(Rational),
    /// Too few sample pairs produced a nonzero denominator.
    Undefined,
    /// Evaluations succeeded but disagreed: the ratio is not constant.
    NotInvariant,
}

impl fmt::Display for SampledInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Defined(v) => write!(f, "{v}"),
            Self::Undefined => write!(f, "undefined"),
            Self::NotInvariant => write!(f, "not invariant"),
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn sample_vector(state: &mut u64, d: usize) -> Vec<Rational> {
    (0..d)
        .map(|_| {
            let num = (splitmix64(state) % 17) as i64 - 8;
            let den = (splitmix64(state) % 3) as i64 + 1;
            rat(num, den)
        })
        .collect()
}

fn matrix_power(m: &Matrix<Rational>, e: u32) -> Matrix<Rational> {
    let mut out = Matrix::identity(m.rows());
    for _ in 0..e {
        out = out.mul_matrix(m);
    }
    out
}

/// Evaluates `tr(R_x^i) tr(R_y^j) / tr(R_x^i o R_y^j)` at deterministic
/// pseudo-random rational pairs. An evaluation succeeds only when both
/// trace polynomials are nonzero at the sample (the invariant is defined
/// only when neither polynomial vanishes, and a defined value is never 0);
/// defined iff at least half the evaluations (rounded up) succeed and all
/// agree exactly.
pub fn cij_sampled(
    t: &StructureTensor<Rational>,
    i: u32,
    j: u32,
    samples: usize,
    seed: u64,
) -> SampledInvariant {
    assert!(i >= 1 && j >= 1);
    let mut state = seed;
    let mut values: Vec<Rational> = Vec::new();
    for _ in 0..samples {
        let x = sample_vector(&mut state, t.dim());
        let y = sample_vector(&mut state, t.dim());
        let rx = matrix_power(&right_mult_matrix(t, &x), i);
        let ry = matrix_power(&right_mult_matrix(t, &y), j);
        let den = rx.mul_matrix(&ry).trace();
        if den.is_zero() {
            continue;
        }
        let num = rx.trace() * ry.trace();
        if num.is_zero() {
            continue;
        }
        values.push(num / den);
    }
    if values.len() < samples.div_ceil(2) {
        return SampledInvariant::Undefined;
    }
    let first = values[0].clone();
    if values.iter().all(|v| *v == first) {
        SampledInvariant::Defined(first)
    } else {
        SampledInvariant::NotInvariant
    }
}

/// Dimension of the isomorphism orbit: `d^2 - dim Der`.
pub fn orbit_dim(t: &StructureTensor<Rational>) -> usize {
    let d = t.dim();
    d * d - derivation_space(t).len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionStatus {
    Pass,
    Fail,
    Undefined,
    Unknown,
}

impl fmt::Display for ConditionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Undefined => "undefined",
            Self::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

/// One necessary condition with the compared quantities rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: String,
    pub status: ConditionStatus,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Possible,
    RuledOut(Vec<String>),
}

/// All necessary-condition checks for a candidate degeneration
/// `source -> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationReport {
    pub source: String,
    pub target: String,
    pub conditions: Vec<ConditionReport>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportError {
    DimensionMismatch { source: usize, target: usize },
    /// The two tensors are identical; only nontrivial candidates are graded.
    IdenticalTensors,
}

impl fmt::Display for ReportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DimensionMismatch { source, target } => {
                write!(f, "dimension mismatch: {source} vs {target}")
            }
            Self::IdenticalTensors => write!(f, "source and target tensors are identical"),
        }
    }
}

impl core::error::Error for ReportError {}

/// Grades the necessary conditions for a nontrivial degeneration
/// `source -> target`:
///
/// * `dim Der(source) < dim Der(target)` (strict),
/// * `dim source^m >= dim target^m` for every lower-central power `m`,
/// * equal `(1,1)` invariants whenever both are defined,
/// * `dim N(target) >= dim N(source)` whenever both nilradicals are declared.
///
/// The maximal-Lie-subalgebra comparison has no algorithmic support here and
/// is always reported `unknown`.
pub fn degeneration_report(
    source: &Algebra,
    target: &Algebra,
) -> Result<DegenerationReport, ReportError> {
    if source.dim() != target.dim() {
        return Err(ReportError::DimensionMismatch {
            source: source.dim(),
            target: target.dim(),
        });
    }
    if source.tensor == target.tensor {
        return Err(ReportError::IdenticalTensors);
    }
    let mut conditions = Vec::new();

    let der_s = derivation_space(&source.tensor).len();
    let der_t = derivation_space(&target.tensor).len();
    conditions.push(ConditionReport {
        condition: "derivation-dimension".to_string(),
        status: if der_s < der_t {
            ConditionStatus::Pass
        } else {
            ConditionStatus::Fail
        },
        lhs: Some(der_s.to_string()),
        rhs: Some(der_t.to_string()),
    });

    let pow_s = source.tensor.lower_central_dims();
    let pow_t = target.tensor.lower_central_dims();
    let len = pow_s.len().max(pow_t.len());
    let at = |seq: &[usize], m: usize| -> usize { seq[m.min(seq.len() - 1)] };
    for m in 0..len {
        let (ls, lt) = (at(&pow_s, m), at(&pow_t, m));
        conditions.push(ConditionReport {
            condition: format!("power-dimension m={}", m + 1),
            status: if ls >= lt {
                ConditionStatus::Pass
            } else {
                ConditionStatus::Fail
            },
            lhs: Some(ls.to_string()),
            rhs: Some(lt.to_string()),
        });
    }

    let c_s = c11_exact(&source.tensor);
    let c_t = c11_exact(&target.tensor);
    let (status, lhs, rhs) = match (&c_s, &c_t) {
        (InvariantValue::Defined(a), InvariantValue::Defined(b)) => (
            if a == b {
                ConditionStatus::Pass
            } else {
                ConditionStatus::Fail
            },
            Some(a.to_string()),
            Some(b.to_string()),
        ),
        _ => (
            ConditionStatus::Undefined,
            Some(c_s.to_string()),
            Some(c_t.to_string()),
        ),
    };
    conditions.push(ConditionReport {
        condition: "c11-invariant".to_string(),
        status,
        lhs,
        rhs,
    });

    let nil = match (&source.nilradical, &target.nilradical) {
        (Some(ns), Some(nt)) => ConditionReport {
            condition: "nilradical-dimension".to_string(),
            status: if nt.len() >= ns.len() {
                ConditionStatus::Pass
            } else {
                ConditionStatus::Fail
            },
            lhs: Some(ns.len().to_string()),
            rhs: Some(nt.len().to_string()),
        },
        _ => ConditionReport {
            condition: "nilradical-dimension".to_string(),
            status: ConditionStatus::Unknown,
            lhs: None,
            rhs: None,
        },
    };
    conditions.push(nil);

    conditions.push(ConditionReport {
        condition: "maximal-lie-subalgebra".to_string(),
        status: ConditionStatus::Unknown,
        lhs: None,
        rhs: None,
    });

    let reasons: Vec<String> = conditions
        .iter()
        .filter(|c| c.status == ConditionStatus::Fail)
        .map(|c| c.condition.clone())
        .collect();
    Ok(DegenerationReport {
        source: source.name.clone(),
        target: target.name.clone(),
        conditions,
        verdict: if reasons.is_empty() {
            Verdict::Possible
        } else {
            Verdict::RuledOut(reasons)
        },
    })
}
