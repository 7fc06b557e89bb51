//! Constructors for the named algebras and parametrized families, plus the
//! `KEY(n, param=value, ...)` name grammar used by the CLI.
//!
//! Dimension conventions: the nilpotent families (`NF`, `F*`) have dimension
//! `n`; the solvable families (`RNF`, `R*`, `RL*`) extend an `n`-dimensional
//! nilradical `e_1..e_n` by one outer element `x`, so their dimension is
//! `n + 1`. Products omitted from a table are zero.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, StructureTensor};
use crate::scalar::{rat_int, Rational};

/// Family parameters by name (`alpha`, `theta`, `gamma`, `beta`, `a4`..`an`,
/// `b4`..`bn`, `j`).
pub type Params = BTreeMap<String, Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    UnknownKey(String),
    BadParams { key: String, reason: String },
    Parse(String),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnknownKey(k) => write!(f, "unknown catalog key `{k}`"),
            Self::BadParams { key, reason } => write!(f, "bad parameters for `{key}`: {reason}"),
            Self::Parse(msg) => write!(f, "cannot parse algebra name: {msg}"),
        }
    }
}

impl core::error::Error for CatalogError {}

fn bad(key: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::BadParams {
        key: key.to_string(),
        reason: reason.into(),
    }
}

/// Incremental table builder with 1-based indices and a conflict check on
/// re-assigned products.
struct TableBuilder {
    tensor: StructureTensor<Rational>,
    assigned: BTreeSet<(usize, usize)>,
}

impl TableBuilder {
    fn new(dim: usize) -> Self {
        Self {
            tensor: StructureTensor::zeros(dim),
            assigned: BTreeSet::new(),
        }
    }

    /// `[e_i, e_j] = sum coeff * e_k`, all indices 1-based.
    fn set(&mut self, i: usize, j: usize, terms: &[(Rational, usize)]) {
        let d = self.tensor.dim();
        assert!(i >= 1 && i <= d && j >= 1 && j <= d, "index out of range");
        let mut dense = vec![Rational::zero(); d];
        for (c, k) in terms {
            assert!(*k >= 1 && *k <= d, "index out of range");
            dense[k - 1] += c;
        }
        if dense.iter().all(Zero::is_zero) {
            return;
        }
        if !self.assigned.insert((i, j)) {
            let existing: Vec<Rational> = (0..d)
                .map(|k| self.tensor.get(i - 1, j - 1, k).clone())
                .collect();
            assert_eq!(existing, dense, "conflicting table entry for [e_{i}, e_{j}]");
            return;
        }
        for (k, c) in dense.into_iter().enumerate() {
            self.tensor.set(i - 1, j - 1, k, c);
        }
    }
}

fn labels_nilpotent(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e_{i}")).collect()
}

fn labels_solvable(n: usize) -> Vec<String> {
    let mut l = labels_nilpotent(n);
    l.push("x".to_string());
    l
}

fn one() -> Rational {
    Rational::one()
}

fn make_algebra(
    name: String,
    builder: TableBuilder,
    basis_labels: Vec<String>,
    nilradical: Option<Vec<usize>>,
    params: Params,
) -> Algebra {
    Algebra {
        name,
        tensor: builder.tensor,
        basis_labels,
        nilradical,
        params,
    }
}

/// The abelian algebra of dimension `d`: every product is zero.
pub fn abelian(d: usize) -> Algebra {
    make_algebra(
        format!("Ab({d})"),
        TableBuilder::new(d),
        labels_nilpotent(d),
        Some((0..d).collect()),
        Params::new(),
    )
}

/// Null-filiform nilpotent algebra: `[e_i, e_1] = e_{i+1}`.
pub fn nf(n: usize) -> Result<Algebra, CatalogError> {
    if n < 1 {
        return Err(bad("NF", "requires n >= 1"));
    }
    let mut b = TableBuilder::new(n);
    for i in 1..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    Ok(make_algebra(
        format!("NF({n})"),
        b,
        labels_nilpotent(n),
        Some((0..n).collect()),
        Params::new(),
    ))
}

/// The solvable extension of `NF(n)` by one element acting diagonally.
pub fn rnf(n: usize) -> Result<Algebra, CatalogError> {
    if n < 1 {
        return Err(bad("RNF", "requires n >= 1"));
    }
    let x = n + 1;
    let mut b = TableBuilder::new(n + 1);
    for i in 1..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    b.set(x, 1, &[(-one(), 1)]);
    for i in 1..=n {
        b.set(i, x, &[(rat_int(i as i64), i)]);
    }
    Ok(make_algebra(
        format!("RNF({n})"),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        Params::new(),
    ))
}

fn check_filiform_n(key: &str, n: usize) -> Result<(), CatalogError> {
    if n < 3 {
        Err(bad(key, "requires n >= 3"))
    } else {
        Ok(())
    }
}

/// First naturally graded filiform algebra: `[e_i, e_1] = e_{i+1}`, `i >= 2`.
pub fn f1_graded(n: usize) -> Result<Algebra, CatalogError> {
    check_filiform_n("F1g", n)?;
    let mut b = TableBuilder::new(n);
    for i in 2..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    Ok(make_algebra(
        format!("F1g({n})"),
        b,
        labels_nilpotent(n),
        Some((0..n).collect()),
        Params::new(),
    ))
}

/// Second naturally graded filiform algebra: adds `[e_1, e_1] = e_3` and
/// drops `[e_2, e_1]`.
pub fn f2_graded(n: usize) -> Result<Algebra, CatalogError> {
    check_filiform_n("F2g", n)?;
    let mut b = TableBuilder::new(n);
    b.set(1, 1, &[(one(), 3)]);
    for i in 3..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    Ok(make_algebra(
        format!("F2g({n})"),
        b,
        labels_nilpotent(n),
        Some((0..n).collect()),
        Params::new(),
    ))
}

/// Third naturally graded filiform family (the antisymmetric one);
/// `alpha` must be 0 or 1, and 0 when `n` is odd.
pub fn f3_graded(n: usize, alpha: &Rational) -> Result<Algebra, CatalogError> {
    check_filiform_n("F3g", n)?;
    if !alpha.is_zero() && !alpha.is_one() {
        return Err(bad("F3g", "alpha must be 0 or 1"));
    }
    if n % 2 == 1 && !alpha.is_zero() {
        return Err(bad("F3g", "alpha must be 0 for odd n"));
    }
    let mut b = TableBuilder::new(n);
    for i in 2..n {
        b.set(i, 1, &[(one(), i + 1)]);
        b.set(1, i, &[(-one(), i + 1)]);
    }
    if !alpha.is_zero() {
        for i in 2..n {
            // iteration i covers the ordered pair (i, n+1-i); the opposite
            // order is covered at iteration n+1-i with a consistent sign
            let sign = if i % 2 == 1 { one() } else { -one() };
            b.set(i, n + 1 - i, &[(alpha * sign, n)]);
        }
    }
    let mut params = Params::new();
    params.insert("alpha".to_string(), alpha.clone());
    let suffix = if alpha.is_zero() { ",alpha=0" } else { ",alpha=1" };
    Ok(make_algebra(
        format!("F3g({n}{suffix})"),
        b,
        labels_nilpotent(n),
        Some((0..n).collect()),
        params,
    ))
}

fn family_param_name(prefix: &str, index: usize) -> String {
    format!("{prefix}{index}")
}

fn family_params_to_map(prefix: &str, values: &[Rational], extra: &[(&str, &Rational)]) -> Params {
    let mut params = Params::new();
    for (offset, v) in values.iter().enumerate() {
        params.insert(family_param_name(prefix, offset + 4), v.clone());
    }
    for (k, v) in extra {
        params.insert((*k).to_string(), (*v).clone());
    }
    params
}

fn family_name(key: &str, n: usize, prefix: &str, values: &[Rational], extra: &[(&str, &Rational)]) -> String {
    let mut parts = vec![n.to_string()];
    for (offset, v) in values.iter().enumerate() {
        if !v.is_zero() {
            parts.push(format!("{}={v}", family_param_name(prefix, offset + 4)));
        }
    }
    for (k, v) in extra {
        if !v.is_zero() {
            parts.push(format!("{k}={v}"));
        }
    }
    format!("{key}({})", parts.join(","))
}

/// First filiform family `F1fam(n, a4..an, theta)`; `alphas` lists
/// `a_4, ..., a_n` in order (missing entries are zero).
pub fn f1_family(n: usize, alphas: &[Rational], theta: &Rational) -> Result<Algebra, CatalogError> {
    check_filiform_n("F1fam", n)?;
    if alphas.len() + 3 > n {
        return Err(bad("F1fam", "family parameters run from a4 to an"));
    }
    let alpha = |s: usize| -> Rational {
        alphas.get(s.wrapping_sub(4)).cloned().unwrap_or_else(Rational::zero)
    };
    let mut b = TableBuilder::new(n);
    for i in 2..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    b.set(1, 2, &[(theta.clone(), n)]);
    for j in 2..=n.saturating_sub(2) {
        let terms: Vec<(Rational, usize)> =
            (4..=n + 2 - j).map(|s| (alpha(s), j + s - 2)).collect();
        b.set(j, 2, &terms);
    }
    Ok(make_algebra(
        family_name("F1fam", n, "a", alphas, &[("theta", theta)]),
        b,
        labels_nilpotent(n),
        Some((0..n).collect()),
        family_params_to_map("a", alphas, &[("theta", theta)]),
    ))
}

/// Second filiform family `F2fam(n, b4..bn, gamma)`.
pub fn f2_family(n: usize, betas: &[Rational], gamma: &Rational) -> Result<Algebra, CatalogError> {
    check_filiform_n("F2fam", n)?;
    if betas.len() + 3 > n {
        return Err(bad("F2fam", "family parameters run from b4 to bn"));
    }
    let beta = |s: usize| -> Rational {
        betas.get(s.wrapping_sub(4)).cloned().unwrap_or_else(Rational::zero)
    };
    let mut b = TableBuilder::new(n);
    b.set(1, 1, &[(one(), 3)]);
    for i in 3..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    let head: Vec<(Rational, usize)> = (4..=n).map(|s| (beta(s), s)).collect();
    b.set(1, 2, &head);
    b.set(2, 2, &[(gamma.clone(), n)]);
    for j in 3..=n.saturating_sub(2) {
        let terms: Vec<(Rational, usize)> =
            (4..=n + 2 - j).map(|s| (beta(s), j + s - 2)).collect();
        b.set(j, 2, &terms);
    }
    Ok(make_algebra(
        family_name("F2fam", n, "b", betas, &[("gamma", gamma)]),
        b,
        labels_nilpotent(n),
        Some((0..n).collect()),
        family_params_to_map("b", betas, &[("gamma", gamma)]),
    ))
}

fn check_solvable_n(key: &str, n: usize) -> Result<(), CatalogError> {
    if n < 3 {
        Err(bad(key, "requires n >= 3"))
    } else {
        Ok(())
    }
}

/// Common skeleton of `R1`..`R4`: `[e_i, e_1] = e_{i+1}` for `2 <= i <= n-1`.
fn filiform_radical_skeleton(n: usize) -> TableBuilder {
    let mut b = TableBuilder::new(n + 1);
    for i in 2..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    b
}

pub fn r1(n: usize) -> Result<Algebra, CatalogError> {
    check_solvable_n("R1", n)?;
    let x = n + 1;
    let mut b = filiform_radical_skeleton(n);
    b.set(x, 1, &[(-one(), 1), (-one(), 2)]);
    b.set(1, x, &[(one(), 1)]);
    for i in 2..=n {
        b.set(i, x, &[(rat_int(i as i64 - 1), i)]);
    }
    Ok(make_algebra(
        format!("R1({n})"),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        Params::new(),
    ))
}

pub fn r2(n: usize, alpha: &Rational) -> Result<Algebra, CatalogError> {
    check_solvable_n("R2", n)?;
    let x = n + 1;
    let mut b = filiform_radical_skeleton(n);
    b.set(x, 1, &[(-one(), 1)]);
    b.set(1, x, &[(one(), 1)]);
    for i in 2..=n {
        b.set(i, x, &[(rat_int(i as i64 - 1) + alpha, i)]);
    }
    let mut params = Params::new();
    params.insert("alpha".to_string(), alpha.clone());
    Ok(make_algebra(
        format!("R2({n},alpha={alpha})"),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        params,
    ))
}

pub fn r3(n: usize) -> Result<Algebra, CatalogError> {
    check_solvable_n("R3", n)?;
    let x = n + 1;
    let mut b = filiform_radical_skeleton(n);
    b.set(x, 1, &[(-one(), 1)]);
    b.set(1, x, &[(one(), 1)]);
    for i in 2..=n {
        b.set(i, x, &[(rat_int(i as i64 - n as i64), i)]);
    }
    b.set(x, x, &[(one(), n)]);
    Ok(make_algebra(
        format!("R3({n})"),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        Params::new(),
    ))
}

pub fn r4(n: usize) -> Result<Algebra, CatalogError> {
    check_solvable_n("R4", n)?;
    let x = n + 1;
    let mut b = filiform_radical_skeleton(n);
    b.set(x, 1, &[(-one(), 1)]);
    b.set(1, x, &[(one(), 1), (one(), n)]);
    for i in 2..=n {
        b.set(i, x, &[(rat_int(i as i64 + 1 - n as i64), i)]);
    }
    b.set(x, x, &[(-one(), n - 1)]);
    Ok(make_algebra(
        format!("R4({n})"),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        Params::new(),
    ))
}

/// `R5(n, a4..an)`; `alphas` lists `a_4, ..., a_n` in order (missing entries
/// are zero). The first nonzero parameter is not normalized.
pub fn r5(n: usize, alphas: &[Rational]) -> Result<Algebra, CatalogError> {
    check_solvable_n("R5", n)?;
    if alphas.len() + 3 > n {
        return Err(bad("R5", "family parameters run from a4 to an"));
    }
    let alpha = |s: usize| -> Rational {
        alphas.get(s.wrapping_sub(4)).cloned().unwrap_or_else(Rational::zero)
    };
    let x = n + 1;
    let mut b = TableBuilder::new(n + 1);
    b.set(1, 1, &[(one(), 3)]);
    for i in 2..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    // the a_n term is absent from [e_1, x] but present in [e_i, x] for i >= 2
    let mut head = vec![(one(), 2)];
    for i in 4..n {
        head.push((alpha(i), i));
    }
    b.set(1, x, &head);
    for i in 2..=n {
        let mut terms = vec![(one(), i)];
        for j in i + 2..=n {
            terms.push((alpha(j - i + 2), j));
        }
        b.set(i, x, &terms);
    }
    Ok(make_algebra(
        family_name("R5", n, "a", alphas, &[]),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        family_params_to_map("a", alphas, &[]),
    ))
}

/// Shared part of the `RL*` tables: nilradical products of the second
/// filiform family plus the diagonal outer action.
///
/// The diagonal weights are forced by the identity: `[e_1,e_1] = e_3` makes
/// the weight of `e_3` twice the weight of `e_1`, and `[e_i,e_1] = e_{i+1}`
/// steps it by one, so `e_i` carries weight `i - 1` for `3 <= i <= n`.
fn rl_skeleton(n: usize, e2_weight: Rational) -> TableBuilder {
    let x = n + 1;
    let mut b = TableBuilder::new(n + 1);
    b.set(1, 1, &[(one(), 3)]);
    for i in 3..n {
        b.set(i, 1, &[(one(), i + 1)]);
    }
    b.set(x, 1, &[(-one(), 1)]);
    b.set(1, x, &[(one(), 1)]);
    b.set(2, x, &[(e2_weight, 2)]);
    for i in 3..=n {
        b.set(i, x, &[(rat_int(i as i64 - 1), i)]);
    }
    b
}

pub fn rl1(n: usize) -> Result<Algebra, CatalogError> {
    check_solvable_n("RL1", n)?;
    let x = n + 1;
    let half = Rational::new(num_bigint::BigInt::from(n as i64 - 1), 2.into());
    let mut b = rl_skeleton(n, half.clone());
    b.set(2, 2, &[(one(), n)]);
    b.set(x, 2, &[(-half, 2)]);
    Ok(make_algebra(
        format!("RL1({n})"),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        Params::new(),
    ))
}

pub fn rl2(n: usize, beta: &Rational) -> Result<Algebra, CatalogError> {
    check_solvable_n("RL2", n)?;
    if n % 2 == 0 {
        return Err(bad("RL2", "requires odd n"));
    }
    // the correction term in [x, e_2] cancels against [e_{(n+1)/2}, e_1],
    // which only exists for n >= 5
    if n < 5 && !beta.is_zero() {
        return Err(bad("RL2", "nonzero beta requires n >= 5"));
    }
    let x = n + 1;
    let half = Rational::new(num_bigint::BigInt::from(n as i64 - 1), 2.into());
    let mid = (n + 3) / 2;
    let mut b = rl_skeleton(n, half.clone());
    b.set(1, 2, &[(beta.clone(), mid)]);
    b.set(2, 2, &[(one(), n)]);
    for i in 3..=(n + 1) / 2 {
        b.set(i, 2, &[(beta.clone(), (n - 1) / 2 + i)]);
    }
    b.set(x, 2, &[(-half, 2), (-beta.clone(), (n + 1) / 2)]);
    let mut params = Params::new();
    params.insert("beta".to_string(), beta.clone());
    Ok(make_algebra(
        format!("RL2({n},beta={beta})"),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        params,
    ))
}

pub fn rl3(n: usize, j: usize) -> Result<Algebra, CatalogError> {
    if n < 4 {
        return Err(bad("RL3", "requires n >= 4"));
    }
    if j < 4 || j > n {
        return Err(bad("RL3", "requires 4 <= j <= n"));
    }
    let x = n + 1;
    let mut b = rl_skeleton(n, rat_int(j as i64 - 2));
    b.set(1, 2, &[(one(), j)]);
    for i in 3..=n + 2 - j {
        b.set(i, 2, &[(one(), j + i - 2)]);
    }
    b.set(x, 2, &[(rat_int(2 - j as i64), 2), (-one(), j - 1)]);
    let mut params = Params::new();
    params.insert("j".to_string(), rat_int(j as i64));
    Ok(make_algebra(
        format!("RL3({n},j={j})"),
        b,
        labels_solvable(n),
        Some((0..n).collect()),
        params,
    ))
}

fn take_params(
    key: &str,
    params: &Params,
    allowed: &dyn Fn(&str) -> bool,
) -> Result<(), CatalogError> {
    for name in params.keys() {
        if !allowed(name) {
            return Err(bad(key, format!("unknown parameter `{name}`")));
        }
    }
    Ok(())
}

fn indexed_values(prefix: &str, n: usize, params: &Params) -> Vec<Rational> {
    let mut values = vec![Rational::zero(); n.saturating_sub(3)];
    for (offset, slot) in values.iter_mut().enumerate() {
        if let Some(v) = params.get(&family_param_name(prefix, offset + 4)) {
            *slot = v.clone();
        }
    }
    values
}

fn is_indexed(prefix: &str, n: usize, name: &str) -> bool {
    name.strip_prefix(prefix)
        .and_then(|rest| rest.parse::<usize>().ok())
        .is_some_and(|i| (4..=n).contains(&i))
}

/// Builds a catalog algebra from its key, size, and parameter record.
pub fn build(key: &str, n: usize, params: &Params) -> Result<Algebra, CatalogError> {
    let zero = Rational::zero();
    match key {
        "Ab" => {
            take_params(key, params, &|_| false)?;
            Ok(abelian(n))
        }
        "NF" => {
            take_params(key, params, &|_| false)?;
            nf(n)
        }
        "RNF" => {
            take_params(key, params, &|_| false)?;
            rnf(n)
        }
        "F1g" => {
            take_params(key, params, &|_| false)?;
            f1_graded(n)
        }
        "F2g" => {
            take_params(key, params, &|_| false)?;
            f2_graded(n)
        }
        "F3g" => {
            take_params(key, params, &|p| p == "alpha")?;
            f3_graded(n, params.get("alpha").unwrap_or(&zero))
        }
        "F1fam" => {
            take_params(key, params, &|p| p == "theta" || is_indexed("a", n, p))?;
            f1_family(n, &indexed_values("a", n, params), params.get("theta").unwrap_or(&zero))
        }
        "F2fam" => {
            take_params(key, params, &|p| p == "gamma" || is_indexed("b", n, p))?;
            f2_family(n, &indexed_values("b", n, params), params.get("gamma").unwrap_or(&zero))
        }
        "R1" => {
            take_params(key, params, &|_| false)?;
            r1(n)
        }
        "R2" => {
            take_params(key, params, &|p| p == "alpha")?;
            r2(n, params.get("alpha").unwrap_or(&zero))
        }
        "R3" => {
            take_params(key, params, &|_| false)?;
            r3(n)
        }
        "R4" => {
            take_params(key, params, &|_| false)?;
            r4(n)
        }
        "R5" => {
            take_params(key, params, &|p| is_indexed("a", n, p))?;
            r5(n, &indexed_values("a", n, params))
        }
        "RL1" => {
            take_params(key, params, &|_| false)?;
            rl1(n)
        }
        "RL2" => {
            take_params(key, params, &|p| p == "beta")?;
            rl2(n, params.get("beta").unwrap_or(&zero))
        }
        "RL3" => {
            take_params(key, params, &|p| p == "j")?;
            let j = params
                .get("j")
                .ok_or_else(|| bad(key, "missing parameter `j`"))?;
            if !j.is_integer() || j.is_negative() {
                return Err(bad(key, "`j` must be a nonnegative integer"));
            }
            let j: usize = j
                .to_integer()
                .try_into()
                .map_err(|_| bad(key, "`j` out of range"))?;
            rl3(n, j)
        }
        other => Err(CatalogError::UnknownKey(other.to_string())),
    }
}

/// Parses `KEY(n[, name=value]...)` into its components. Values are rational
/// strings like `1/2` or `-3`.
pub fn parse_name(spec: &str) -> Result<(String, usize, Params), CatalogError> {
    let err = |msg: &str| CatalogError::Parse(format!("{msg} in `{spec}`"));
    let spec_trim = spec.trim();
    let open = spec_trim.find('(').ok_or_else(|| err("missing `(`"))?;
    let close = spec_trim.rfind(')').ok_or_else(|| err("missing `)`"))?;
    if close != spec_trim.len() - 1 || open == 0 {
        return Err(err("expected KEY(n, ...)"));
    }
    let key = spec_trim[..open].trim().to_string();
    let inner = &spec_trim[open + 1..close];
    let mut parts = inner.split(',');
    let n_str = parts.next().ok_or_else(|| err("missing size"))?.trim();
    let n: usize = n_str
        .parse()
        .map_err(|_| err("size must be a nonnegative integer"))?;
    let mut params = Params::new();
    for part in parts {
        let part = part.trim();
        if part.is_empty() {
            return Err(err("empty parameter"));
        }
        let (name, value) = part.split_once('=').ok_or_else(|| err("expected name=value"))?;
        let value: Rational = value
            .trim()
            .parse()
            .map_err(|_| err("parameter values must be rationals like 1/2"))?;
        params.insert(name.trim().to_string(), value);
    }
    Ok((key, n, params))
}

/// Parses a name with [`parse_name`] and builds the algebra.
pub fn build_from_name(spec: &str) -> Result<Algebra, CatalogError> {
    let (key, n, params) = parse_name(spec)?;
    build(&key, n, &params)
}

/// A catalog entry descriptor: key, parameter schema, validity range, and a
/// one-line description.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntryInfo {
    pub key: &'static str,
    pub params: &'static str,
    pub validity: &'static str,
    pub summary: &'static str,
}

/// Descriptors for every constructible family.
pub fn list_entries() -> Vec<EntryInfo> {
    vec![
        EntryInfo {
            key: "Ab",
            params: "none",
            validity: "n >= 0",
            summary: "abelian algebra; every product zero",
        },
        EntryInfo {
            key: "NF",
            params: "none",
            validity: "n >= 1",
            summary: "null-filiform nilpotent algebra (one-generated, maximal nilindex)",
        },
        EntryInfo {
            key: "RNF",
            params: "none",
            validity: "n >= 1",
            summary: "solvable extension of NF(n) by a diagonal outer element (dim n+1)",
        },
        EntryInfo {
            key: "F1g",
            params: "none",
            validity: "n >= 3",
            summary: "first naturally graded filiform algebra",
        },
        EntryInfo {
            key: "F2g",
            params: "none",
            validity: "n >= 3",
            summary: "second naturally graded filiform algebra",
        },
        EntryInfo {
            key: "F3g",
            params: "alpha in {0, 1}",
            validity: "n >= 3; alpha = 0 for odd n",
            summary: "third naturally graded filiform family (antisymmetric)",
        },
        EntryInfo {
            key: "F1fam",
            params: "a4..an, theta (rationals)",
            validity: "n >= 3",
            summary: "first filiform family",
        },
        EntryInfo {
            key: "F2fam",
            params: "b4..bn, gamma (rationals)",
            validity: "n >= 3",
            summary: "second filiform family",
        },
        EntryInfo {
            key: "R1",
            params: "none",
            validity: "n >= 3",
            summary: "solvable extension of F1g(n), off-diagonal action on e_1 (dim n+1)",
        },
        EntryInfo {
            key: "R2",
            params: "alpha (rational)",
            validity: "n >= 3",
            summary: "solvable extension of F1g(n) with diagonal weight shift alpha (dim n+1)",
        },
        EntryInfo {
            key: "R3",
            params: "none",
            validity: "n >= 3",
            summary: "solvable extension of F1g(n) with [x,x] = e_n (dim n+1)",
        },
        EntryInfo {
            key: "R4",
            params: "none",
            validity: "n >= 3",
            summary: "solvable extension of F1g(n) with [x,x] = -e_{n-1} (dim n+1)",
        },
        EntryInfo {
            key: "R5",
            params: "a4..an (rationals; first nonzero one not normalized)",
            validity: "n >= 3",
            summary: "solvable family over the shifted filiform nilradical (dim n+1)",
        },
        EntryInfo {
            key: "RL1",
            params: "none",
            validity: "n >= 3",
            summary: "solvable extension of the square-bearing filiform nilradical (dim n+1)",
        },
        EntryInfo {
            key: "RL2",
            params: "beta (rational)",
            validity: "n >= 3 and n odd",
            summary: "solvable extension with midpoint products weighted by beta (dim n+1)",
        },
        EntryInfo {
            key: "RL3",
            params: "j (integer)",
            validity: "n >= 4, 4 <= j <= n",
            summary: "solvable extension with products shifted to position j (dim n+1)",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn nf4_table_is_exactly_the_shift() {
        let a = nf(4).unwrap();
        for (i, j, k, v) in a.tensor.nonzero_entries() {
            assert!(j == 0 && k == i + 1, "unexpected entry ({i},{j},{k})");
            assert!(v.is_one());
        }
        assert_eq!(a.tensor.nonzero_entries().count(), 3);
    }

    #[test]
    fn r2_diagonal_weights() {
        let a = r2(5, &rat(1, 1)).unwrap();
        // [e_i, x] = i e_i for alpha = 1
        for i in 1..=5usize {
            assert_eq!(*a.tensor.get(i - 1, 5, i - 1), rat_int(i as i64));
        }
    }

    #[test]
    fn r4_square_of_the_outer_element() {
        let a = r4(4).unwrap();
        // [x, x] = -e_3
        assert_eq!(*a.tensor.get(4, 4, 2), rat_int(-1));
    }

    #[test]
    fn rl3_action_on_e2() {
        let a = rl3(6, 4).unwrap();
        // [x, e_2] = -2 e_2 - e_3
        assert_eq!(*a.tensor.get(6, 1, 1), rat_int(-2));
        assert_eq!(*a.tensor.get(6, 1, 2), rat_int(-1));
    }

    #[test]
    fn catalog_families_satisfy_the_identity() {
        let quick: Vec<Algebra> = vec![
            nf(5).unwrap(),
            rnf(5).unwrap(),
            f1_graded(5).unwrap(),
            f2_graded(5).unwrap(),
            f3_graded(6, &rat_int(1)).unwrap(),
            f1_family(6, &[rat(1, 2), rat_int(-1), rat_int(3)], &rat(2, 3)).unwrap(),
            f2_family(6, &[rat_int(1), rat(1, 3), rat_int(0)], &rat_int(-2)).unwrap(),
            r1(5).unwrap(),
            r2(5, &rat(1, 2)).unwrap(),
            r3(5).unwrap(),
            r4(5).unwrap(),
            r5(6, &[rat_int(1), rat(1, 2), rat_int(-1)]).unwrap(),
            rl1(5).unwrap(),
            rl2(5, &rat(3, 2)).unwrap(),
            rl3(6, 5).unwrap(),
        ];
        for a in &quick {
            assert!(a.tensor.is_leibniz(), "{} violates the identity", a.name);
            let nilr = a.nilradical.as_ref().unwrap();
            assert!(
                a.tensor.verify_nilpotent_ideal(nilr),
                "{} nilradical fails verification",
                a.name
            );
        }
    }

    #[test]
    fn validity_ranges_are_enforced() {
        assert!(nf(0).is_err());
        assert!(f1_graded(2).is_err());
        assert!(f3_graded(5, &rat_int(1)).is_err());
        assert!(f3_graded(5, &rat(1, 2)).is_err());
        assert!(rl2(4, &rat_int(1)).is_err());
        assert!(rl3(6, 3).is_err());
        assert!(rl3(6, 7).is_err());
        assert!(rl3(3, 4).is_err());
        assert!(r5(4, &[rat_int(1), rat_int(1)]).is_err());
    }

    #[test]
    fn name_grammar_round_trips() {
        for spec in [
            "NF(4)",
            "RNF(6)",
            "R2(5,alpha=1/2)",
            "R5(6,a4=1,a5=0,a6=0)",
            "RL3(6,j=4)",
            "F3g(6,alpha=1)",
            "RL2(5,beta=-2/3)",
            " R2( 5 , alpha = -4 ) ",
        ] {
            let a = build_from_name(spec).unwrap();
            let b = build_from_name(&a.name).unwrap();
            assert_eq!(a.tensor, b.tensor, "round trip failed for {spec}");
        }
    }

    #[test]
    fn name_grammar_rejects_garbage() {
        assert!(parse_name("NF").is_err());
        assert!(parse_name("NF(x)").is_err());
        assert!(parse_name("(4)").is_err());
        assert!(parse_name("R2(5,alpha)").is_err());
        assert!(build_from_name("ZZ(4)").is_err());
        assert!(build_from_name("R2(5,zeta=1)").is_err());
        assert!(build_from_name("RL3(6)").is_err());
    }

    #[test]
    fn entry_list_covers_the_catalog() {
        let entries = list_entries();
        assert!(entries.len() >= 14);
        let r5 = entries.iter().find(|e| e.key == "R5").unwrap();
        assert!(r5.params.contains("a4..an"));
        let f3 = entries.iter().find(|e| e.key == "F3g").unwrap();
        assert!(f3.params.contains("0, 1"));
        // every listed key builds something at a valid size
        for e in entries {
            let n = match e.key {
                "RL3" => 5,
                _ => 5,
            };
            let mut params = Params::new();
            if e.key == "RL3" {
                params.insert("j".into(), rat_int(4));
            }
            assert!(build(e.key, n, &params).is_ok(), "cannot build {}", e.key);
        }
    }
}
