//! One-parameter basis-change families `g_t` over Laurent scalars, the
//! `t -> 0` limit of the transformed bracket, and fixtures asserting that a
//! limit lands exactly on a claimed target algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, BadInverse, StructureTensor};
use crate::catalog::{self, CatalogError};
use crate::invariants::{degeneration_report, DegenerationReport, ReportError};
use crate::matrix::{verify_inverse_pair, Matrix};
use crate::scalar::{rat_int, LaurentScalar, Rational};

/// An invertible matrix family over Laurent polynomials with its explicit
/// inverse. General inversion over Laurent polynomials is not attempted:
/// fixtures state both directions and construction verifies the pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChangeFamily {
    g: Matrix<LaurentScalar>,
    g_inverse: Matrix<LaurentScalar>,
}

impl BasisChangeFamily {
    pub fn new(g: Matrix<LaurentScalar>, g_inverse: Matrix<LaurentScalar>) -> Result<Self, BadInverse> {
        if !verify_inverse_pair(&g, &g_inverse) {
            return Err(BadInverse);
        }
        Ok(Self { g, g_inverse })
    }

    /// `g = diag(t^e_1, ..., t^e_d)` with the monomial inverse.
    pub fn diagonal_powers(exponents: &[i64]) -> Self {
        let d = exponents.len();
        let mut g = Matrix::<LaurentScalar>::zeros(d, d);
        let mut ginv = Matrix::<LaurentScalar>::zeros(d, d);
        for (i, &e) in exponents.iter().enumerate() {
            *g.at_mut(i, i) = LaurentScalar::monomial(rat_int(1), e);
            *ginv.at_mut(i, i) = LaurentScalar::monomial(rat_int(1), -e);
        }
        Self { g, g_inverse: ginv }
    }

    /// The contraction `g = t^-1 * id`: under the action
    /// `g(lambda(g^-1 x, g^-1 y))` every product acquires one factor of `t`,
    /// so the limit is the abelian bracket.
    pub fn scaling(dim: usize) -> Self {
        Self::diagonal_powers(&vec![-1; dim])
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn g(&self) -> &Matrix<LaurentScalar> {
        &self.g
    }

    pub fn g_inverse(&self) -> &Matrix<LaurentScalar> {
        &self.g_inverse
    }

    /// The family member at `t = 1` as a rational pair.
    pub fn at_one(&self) -> (Matrix<Rational>, Matrix<Rational>) {
        (
            self.g.map(LaurentScalar::eval_at_one),
            self.g_inverse.map(LaurentScalar::eval_at_one),
        )
    }
}

/// The `t`-parametrized bracket `g_t([g_t^-1 x, g_t^-1 y])` as a tensor over
/// Laurent scalars.
pub fn transformed_tensor(
    src: &StructureTensor<Rational>,
    family: &BasisChangeFamily,
) -> StructureTensor<LaurentScalar> {
    assert_eq!(src.dim(), family.dim(), "dimension mismatch");
    src.to_laurent()
        .apply_basis_change(&family.g, &family.g_inverse)
        .expect("family invariant: verified inverse pair")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitError {
    /// A negative power of `t` survives at the entry `(i, j, k)`.
    NoLimit { i: usize, j: usize, k: usize },
    /// The entrywise limit exists but violates the Leibniz identity,
    /// signalling a transcription bug in the family.
    LimitNotLeibniz,
}

impl fmt::Display for LimitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoLimit { i, j, k } => {
                write!(f, "no limit at t -> 0 in entry ({}, {}, {})", i + 1, j + 1, k + 1)
            }
            Self::LimitNotLeibniz => write!(f, "the limit bracket violates the Leibniz identity"),
        }
    }
}

impl core::error::Error for LimitError {}

/// Entrywise `t -> 0` limit, checked to be a Leibniz bracket.
pub fn limit_tensor(
    t: &StructureTensor<LaurentScalar>,
) -> Result<StructureTensor<Rational>, LimitError> {
    let d = t.dim();
    let mut out = StructureTensor::<Rational>::zeros(d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                match t.get(i, j, k).limit_at_zero() {
                    Ok(v) => out.set(i, j, k, v),
                    Err(_) => return Err(LimitError::NoLimit { i, j, k }),
                }
            }
        }
    }
    if !out.is_leibniz() {
        return Err(LimitError::LimitNotLeibniz);
    }
    Ok(out)
}

/// An optional constant rational basis change applied after the limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostChange {
    pub g: Matrix<Rational>,
    pub g_inverse: Matrix<Rational>,
}

/// A degeneration claim: applying `family` to `source` and letting
/// `t -> 0` should land exactly on `target`.
#[derive(Clone, Debug)]
pub struct DegenerationFixture {
    pub source: Algebra,
    pub family: BasisChangeFamily,
    pub target: Algebra,
    pub post_change: Option<PostChange>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureError {
    Limit(LimitError),
    PostChange(BadInverse),
    /// The limit differs from the target; carries the first differing entry.
    TargetMismatch {
        i: usize,
        j: usize,
        k: usize,
        got: Rational,
        want: Rational,
    },
    Report(ReportError),
    DimensionMismatch,
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Limit(e) => write!(f, "{e}"),
            Self::PostChange(e) => write!(f, "post change: {e}"),
            Self::TargetMismatch { i, j, k, got, want } => write!(
                f,
                "target mismatch at entry ({}, {}, {}): got {got}, want {want}",
                i + 1,
                j + 1,
                k + 1
            ),
            Self::Report(e) => write!(f, "{e}"),
            Self::DimensionMismatch => write!(f, "source, family, and target dimensions differ"),
        }
    }
}

impl core::error::Error for FixtureError {}

/// A verified fixture: the exact limit tensor plus the necessary-condition
/// report for the pair (which callers can require not to be ruled out).
#[derive(Clone, Debug)]
pub struct FixtureOutcome {
    pub limit: StructureTensor<Rational>,
    pub report: DegenerationReport,
}

/// Runs a fixture: transform, take the limit, apply any post change, and
/// compare with the target entry for entry.
pub fn run_fixture(fixture: &DegenerationFixture) -> Result<FixtureOutcome, FixtureError> {
    let d = fixture.source.dim();
    if fixture.target.dim() != d || fixture.family.dim() != d {
        return Err(FixtureError::DimensionMismatch);
    }
    let moved = transformed_tensor(&fixture.source.tensor, &fixture.family);
    let mut limit = limit_tensor(&moved).map_err(FixtureError::Limit)?;
    if let Some(pc) = &fixture.post_change {
        limit = limit
            .apply_basis_change(&pc.g, &pc.g_inverse)
            .map_err(FixtureError::PostChange)?;
    }
    if limit != fixture.target.tensor {
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if limit.get(i, j, k) != fixture.target.tensor.get(i, j, k) {
                        return Err(FixtureError::TargetMismatch {
                            i,
                            j,
                            k,
                            got: limit.get(i, j, k).clone(),
                            want: fixture.target.tensor.get(i, j, k).clone(),
                        });
                    }
                }
            }
        }
        unreachable!("tensors differ but no differing entry found");
    }
    let report =
        degeneration_report(&fixture.source, &fixture.target).map_err(FixtureError::Report)?;
    Ok(FixtureOutcome { limit, report })
}

/// Human-readable label `source -> target`.
pub fn fixture_label(f: &DegenerationFixture) -> String {
    format!("{} -> {}", f.source.name, f.target.name)
}

/// The six standard degeneration fixtures at size `n` (algebra dimensions
/// `n` for the filiform pair and `n + 1` for the solvable ones):
///
/// 1. `F1g(n) -> F2g(n)` via `e_1 -> e_1 - t^-1 e_2, e_2 -> t^-1 e_2`,
/// 2. `RNF(n) -> R2(n, alpha=1)` via `e_i -> t^{2-i} e_i` (and `e_1 -> t^-1 e_1`),
/// 3. `R1(n) -> R2(n, alpha=0)` via `e_i -> t e_i, i >= 2`,
/// 4. `R3(n) -> R2(n, alpha=1-n)` via the same family,
/// 5. `R4(n) -> R2(n, alpha=2-n)` via the same family,
/// 6. `R5(n, a4=1) -> R5(n)` via `e_i -> t^{i-1} e_i`.
///
/// Requires `n >= 4` (the sixth fixture needs the `a4` parameter).
pub fn builtin_fixtures(n: usize) -> Result<Vec<DegenerationFixture>, CatalogError> {
    if n < 4 {
        return Err(CatalogError::BadParams {
            key: "builtin-fixtures".into(),
            reason: "requires n >= 4".into(),
        });
    }
    let mut fixtures = Vec::with_capacity(6);

    // filiform pair: g(e_1) = e_1 - t^-1 e_2, g(e_2) = t^-1 e_2, rest fixed
    {
        let mut g = Matrix::<LaurentScalar>::identity(n);
        let mut ginv = Matrix::<LaurentScalar>::identity(n);
        *g.at_mut(0, 0) = LaurentScalar::constant(rat_int(1));
        *g.at_mut(1, 0) = LaurentScalar::monomial(rat_int(-1), -1);
        *g.at_mut(1, 1) = LaurentScalar::monomial(rat_int(1), -1);
        *ginv.at_mut(1, 0) = LaurentScalar::constant(rat_int(1));
        *ginv.at_mut(1, 1) = LaurentScalar::monomial(rat_int(1), 1);
        fixtures.push(DegenerationFixture {
            source: catalog::f1_graded(n)?,
            family: BasisChangeFamily::new(g, ginv).expect("explicit inverse"),
            target: catalog::f2_graded(n)?,
            post_change: None,
        });
    }

    // RNF(n) -> R2(n, 1): e_1 -> t^-1 e_1, e_i -> t^{2-i} e_i, x fixed
    {
        let mut exps = vec![0i64; n + 1];
        exps[0] = -1;
        for (i, e) in exps.iter_mut().enumerate().take(n).skip(1) {
            *e = 1 - i as i64; // basis position i holds e_{i+1}
        }
        fixtures.push(DegenerationFixture {
            source: catalog::rnf(n)?,
            family: BasisChangeFamily::diagonal_powers(&exps),
            target: catalog::r2(n, &rat_int(1))?,
            post_change: None,
        });
    }

    // shared family for the next three: e_1 and x fixed, e_i -> t e_i
    let tail_scaling = {
        let mut exps = vec![1i64; n + 1];
        exps[0] = 0;
        exps[n] = 0;
        BasisChangeFamily::diagonal_powers(&exps)
    };
    fixtures.push(DegenerationFixture {
        source: catalog::r1(n)?,
        family: tail_scaling.clone(),
        target: catalog::r2(n, &rat_int(0))?,
        post_change: None,
    });
    fixtures.push(DegenerationFixture {
        source: catalog::r3(n)?,
        family: tail_scaling.clone(),
        target: catalog::r2(n, &rat_int(1 - n as i64))?,
        post_change: None,
    });
    fixtures.push(DegenerationFixture {
        source: catalog::r4(n)?,
        family: tail_scaling,
        target: catalog::r2(n, &rat_int(2 - n as i64))?,
        post_change: None,
    });

    // R5(n, a4=1) -> R5(n, 0): e_i -> t^{i-1} e_i (e_1 -> t e_1), x fixed
    {
        let mut exps = vec![0i64; n + 1];
        exps[0] = 1;
        for (i, e) in exps.iter_mut().enumerate().take(n).skip(1) {
            *e = i as i64;
        }
        fixtures.push(DegenerationFixture {
            source: catalog::r5(n, &[rat_int(1)])?,
            family: BasisChangeFamily::diagonal_powers(&exps),
            target: catalog::r5(n, &[])?,
            post_change: None,
        });
    }

    Ok(fixtures)
}
