//! Derivation spaces and second cohomology: the 2-cocycle space, the
//! 2-coboundary space, their quotient dimension, and the named
//! representative cocycles of the solvable catalog families.
//!
//! A 2-cochain is a bilinear map `L x L -> L` stored, like a bracket, as a
//! `d x d x d` rational array; all linear algebra runs over its flattening
//! in `(i, j, k)` lexicographic order. The cocycle system is assembled from
//! every basis triple with no symmetry reduction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::StructureTensor;
use crate::catalog::Params;
use crate::matrix::{dense_to_sparse, Matrix, RowReducer};
use crate::scalar::{rat_int, Rational};

/// A 2-cochain: `phi(e_i, e_j) = sum_k values[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain2 {
    values: StructureTensor<Rational>,
}

impl Cochain2 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            values: StructureTensor::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.values.dim()
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        self.values.set(i, j, k, c);
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.values.get(i, j, k)
    }

    /// The coordinate vector of `phi(e_i, e_j)`.
    pub fn value(&self, i: usize, j: usize) -> &[Rational] {
        self.values.basis_bracket(i, j)
    }

    pub fn flat(&self) -> &[Rational] {
        self.values.flat()
    }

    pub fn from_flat(dim: usize, entries: Vec<Rational>) -> Self {
        Self {
            values: StructureTensor::from_flat(dim, entries),
        }
    }

    pub fn as_tensor(&self) -> &StructureTensor<Rational> {
        &self.values
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.values.nonzero_entries()
    }
}

/// A subspace of the `d^3`-dimensional cochain space, as a canonical basis of
/// flattened cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainSpace {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Rational>>,
    pub kind: CochainSpaceKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CochainSpaceKind {
    Cocycles,
    Coboundaries,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyError {
    /// A coboundary basis vector is not a cocycle: an implementation bug,
    /// not a property of the input.
    InclusionViolated { index: usize },
    /// A representative failed the cocycle equations.
    NotCocycle { index: usize },
    /// A representative is a coboundary combination of its predecessors.
    DependentRepresentative { index: usize },
    /// No representative with this name exists for these parameters.
    UnknownRepresentative { family: String, which: String },
}

impl fmt::Display for CohomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InclusionViolated { index } => {
                write!(f, "coboundary basis vector {index} is not a cocycle")
            }
            Self::NotCocycle { index } => write!(f, "representative {index} is not a cocycle"),
            Self::DependentRepresentative { index } => {
                write!(f, "representative {index} is dependent modulo coboundaries")
            }
            Self::UnknownRepresentative { family, which } => {
                write!(f, "no representative `{which}` for family `{family}`")
            }
        }
    }
}

impl core::error::Error for CohomologyError {}

/// Evaluates the cocycle operator on one basis triple:
/// `[x, phi(y,z)] - [phi(x,y), z] + [phi(x,z), y]
///  + phi(x, [y,z]) - phi([x,y], z) + phi([x,z], y)`.
pub fn d2_apply(
    t: &StructureTensor<Rational>,
    phi: &Cochain2,
    x: usize,
    y: usize,
    z: usize,
) -> Vec<Rational> {
    let phi_t = phi.as_tensor();
    let mut out = t.bracket_basis_left(x, phi.value(y, z));
    let terms = [
        (rat_int(-1), t.bracket_basis_right(phi.value(x, y), z)),
        (rat_int(1), t.bracket_basis_right(phi.value(x, z), y)),
        (rat_int(1), phi_t.bracket_basis_left(x, t.basis_bracket(y, z))),
        (rat_int(-1), phi_t.bracket_basis_right(t.basis_bracket(x, y), z)),
        (rat_int(1), phi_t.bracket_basis_right(t.basis_bracket(x, z), y)),
    ];
    for (sign, term) in terms {
        for (o, v) in out.iter_mut().zip(term) {
            *o += &sign * v;
        }
    }
    out
}

/// True iff the cocycle operator vanishes on every basis triple.
pub fn is_cocycle(t: &StructureTensor<Rational>, phi: &Cochain2) -> bool {
    let d = t.dim();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                if d2_apply(t, phi, x, y, z).iter().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

#[inline]
fn unknown(d: usize, i: usize, j: usize, k: usize) -> usize {
    (i * d + j) * d + k
}

fn add_coeff(row: &mut BTreeMap<usize, Rational>, idx: usize, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = row.entry(idx).or_insert_with(Rational::zero);
    *entry += c;
}

/// Basis of the derivation algebra `{D : D[x,y] = [Dx,y] + [x,Dy]}` as
/// matrices acting column-wise on coordinates.
pub fn derivation_space(t: &StructureTensor<Rational>) -> Vec<Matrix<Rational>> {
    let d = t.dim();
    let mut red = RowReducer::new(d * d);
    for p in 0..d {
        for q in 0..d {
            for k in 0..d {
                let mut row = BTreeMap::new();
                // D([e_p, e_q])_k
                for m in 0..d {
                    add_coeff(&mut row, k * d + m, t.get(p, q, m).clone());
                }
                // -[D e_p, e_q]_k  and  -[e_p, D e_q]_k
                for m in 0..d {
                    add_coeff(&mut row, m * d + p, -t.get(m, q, k).clone());
                    add_coeff(&mut row, m * d + q, -t.get(p, m, k).clone());
                }
                red.insert(row.into_iter().collect());
            }
        }
    }
    red.nullspace_basis()
        .into_iter()
        .map(|flat| {
            let mut m = Matrix::zeros(d, d);
            for (idx, v) in flat.into_iter().enumerate() {
                *m.at_mut(idx / d, idx % d) = v;
            }
            m
        })
        .collect()
}

/// The coboundary of a linear map:
/// `(delta D)(x, y) = [D x, y] + [x, D y] - D([x, y])`.
pub fn coboundary_of(t: &StructureTensor<Rational>, dmat: &Matrix<Rational>) -> Cochain2 {
    let d = t.dim();
    assert_eq!(dmat.rows(), d);
    assert_eq!(dmat.cols(), d);
    let mut phi = Cochain2::zeros(d);
    for p in 0..d {
        for q in 0..d {
            for k in 0..d {
                let mut acc = Rational::zero();
                for m in 0..d {
                    acc += dmat.at(m, p) * t.get(m, q, k);
                    acc += dmat.at(m, q) * t.get(p, m, k);
                    acc -= t.get(p, q, m) * dmat.at(k, m);
                }
                if !acc.is_zero() {
                    phi.set(p, q, k, acc);
                }
            }
        }
    }
    phi
}

/// Basis of the 2-cocycle space: the nullspace of the stacked cocycle
/// equations (`d^3` unknowns, `d^4` equations).
pub fn cocycle_space(t: &StructureTensor<Rational>) -> CochainSpace {
    let d = t.dim();
    let mut red = RowReducer::new(d * d * d);
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                for k in 0..d {
                    let mut row = BTreeMap::new();
                    for m in 0..d {
                        // [x, phi(y,z)]
                        add_coeff(&mut row, unknown(d, y, z, m), t.get(x, m, k).clone());
                        // -[phi(x,y), z]
                        add_coeff(&mut row, unknown(d, x, y, m), -t.get(m, z, k).clone());
                        // +[phi(x,z), y]
                        add_coeff(&mut row, unknown(d, x, z, m), t.get(m, y, k).clone());
                        // +phi(x, [y,z])
                        add_coeff(&mut row, unknown(d, x, m, k), t.get(y, z, m).clone());
                        // -phi([x,y], z)
                        add_coeff(&mut row, unknown(d, m, z, k), -t.get(x, y, m).clone());
                        // +phi([x,z], y)
                        add_coeff(&mut row, unknown(d, m, y, k), t.get(x, z, m).clone());
                    }
                    red.insert(row.into_iter().collect());
                }
            }
        }
    }
    CochainSpace {
        ambient_dim: d * d * d,
        basis: red.nullspace_basis(),
        kind: CochainSpaceKind::Cocycles,
    }
}

/// Basis of the 2-coboundary space: the image of the coboundary operator on
/// endomorphisms. Its dimension is `d^2 - dim Der`.
pub fn coboundary_space(t: &StructureTensor<Rational>) -> CochainSpace {
    let d = t.dim();
    let mut red = RowReducer::new(d * d * d);
    for a in 0..d {
        for b in 0..d {
            let mut e = Matrix::zeros(d, d);
            *e.at_mut(a, b) = Rational::one();
            let phi = coboundary_of(t, &e);
            red.insert(dense_to_sparse(phi.flat()));
        }
    }
    CochainSpace {
        ambient_dim: d * d * d,
        basis: red.basis_rows(),
        kind: CochainSpaceKind::Coboundaries,
    }
}

/// Both spaces of the second cohomology with the quotient dimension.
#[derive(Clone, Debug)]
pub struct SecondCohomology {
    pub cocycles: CochainSpace,
    pub coboundaries: CochainSpace,
    pub quotient_dim: usize,
}

/// Computes `ZL^2`, `BL^2`, and `dim HL^2 = dim ZL^2 - dim BL^2`, after
/// asserting that every coboundary basis vector is a cocycle.
pub fn second_cohomology(t: &StructureTensor<Rational>) -> Result<SecondCohomology, CohomologyError> {
    let cocycles = cocycle_space(t);
    let coboundaries = coboundary_space(t);
    let mut zred = RowReducer::new(cocycles.ambient_dim);
    for row in &cocycles.basis {
        zred.insert(dense_to_sparse(row));
    }
    for (index, row) in coboundaries.basis.iter().enumerate() {
        if !zred.contains(dense_to_sparse(row)) {
            return Err(CohomologyError::InclusionViolated { index });
        }
    }
    let quotient_dim = cocycles.dim() - coboundaries.dim();
    Ok(SecondCohomology {
        cocycles,
        coboundaries,
        quotient_dim,
    })
}

/// `dim ZL^2 - dim BL^2`; see [`second_cohomology`].
pub fn hl2_dim(t: &StructureTensor<Rational>) -> Result<usize, CohomologyError> {
    Ok(second_cohomology(t)?.quotient_dim)
}

/// True iff no nontrivial rational combination of `reps` is a coboundary,
/// i.e. their classes are jointly independent in the quotient. Every `rep`
/// must satisfy the cocycle equations.
pub fn classes_independent(
    t: &StructureTensor<Rational>,
    reps: &[Cochain2],
) -> Result<bool, CohomologyError> {
    for (index, rep) in reps.iter().enumerate() {
        if !is_cocycle(t, rep) {
            return Err(CohomologyError::NotCocycle { index });
        }
    }
    let coboundaries = coboundary_space(t);
    let mut red = RowReducer::new(coboundaries.ambient_dim);
    for row in &coboundaries.basis {
        red.insert(dense_to_sparse(row));
    }
    for rep in reps {
        if !red.insert(dense_to_sparse(rep.flat())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extends `partial` (cocycles, jointly independent modulo coboundaries) to
/// a full basis of the quotient, drawing complements from the canonical
/// cocycle basis in order. The result lists only the added classes.
pub fn complete_quotient_basis(
    t: &StructureTensor<Rational>,
    partial: &[Cochain2],
) -> Result<Vec<Cochain2>, CohomologyError> {
    for (index, rep) in partial.iter().enumerate() {
        if !is_cocycle(t, rep) {
            return Err(CohomologyError::NotCocycle { index });
        }
    }
    let cocycles = cocycle_space(t);
    let coboundaries = coboundary_space(t);
    let mut red = RowReducer::new(coboundaries.ambient_dim);
    for row in &coboundaries.basis {
        red.insert(dense_to_sparse(row));
    }
    for (index, rep) in partial.iter().enumerate() {
        if !red.insert(dense_to_sparse(rep.flat())) {
            return Err(CohomologyError::DependentRepresentative { index });
        }
    }
    let mut out = Vec::new();
    for v in &cocycles.basis {
        if red.insert(dense_to_sparse(v)) {
            out.push(Cochain2::from_flat(t.dim(), v.clone()));
        }
    }
    Ok(out)
}

fn alpha_of(params: &Params, m: i64) -> Rational {
    if m < 4 {
        return Rational::zero();
    }
    params
        .get(&format!("a{m}"))
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// The named cohomology-class representatives of the solvable families
/// (`R2`: `rho`, `psi1`..`psi4`; `R3`: `xi`; `R4`: `rho`; `R5`: `rho`,
/// `psi4`..`psi<n>`, `phi2`..`phi<n-1>`). Representatives of `R5` depend on
/// the family parameters, which are read from `params`. Omitted values are
/// zero; the underlying algebra has dimension `n + 1` with `x` last.
pub fn hl2_representative(
    family: &str,
    n: usize,
    params: &Params,
    which: &str,
) -> Result<Cochain2, CohomologyError> {
    let undefined = || CohomologyError::UnknownRepresentative {
        family: family.to_string(),
        which: which.to_string(),
    };
    if n < 3 {
        return Err(undefined());
    }
    let d = n + 1;
    let x = n; // 0-based index of the outer element
    let mut phi = Cochain2::zeros(d);
    match (family, which) {
        ("R3", "xi") | ("R2", "rho") => {
            // (e_1, x) -> e_1; (e_i, x) -> (i-2) e_i for 3 <= i <= n; (x, e_1) -> -e_1
            phi.set(0, x, 0, rat_int(1));
            for i in 3..=n {
                phi.set(i - 1, x, i - 1, rat_int(i as i64 - 2));
            }
            phi.set(x, 0, 0, rat_int(-1));
        }
        ("R4", "rho") => {
            phi.set(0, x, 0, rat_int(1));
            for i in 3..=n {
                phi.set(i - 1, x, i - 1, rat_int(i as i64 - 2));
            }
            phi.set(x, 0, 0, rat_int(-1));
            phi.set(x, x, n - 2, rat_int(-1));
        }
        ("R2", "psi1") => {
            for i in 2..=n {
                phi.set(i - 1, x, i - 1, rat_int(1));
            }
        }
        ("R2", "psi2") => {
            for i in 2..=n {
                phi.set(i - 1, 1, i - 1, rat_int(1));
            }
        }
        ("R2", "psi3") => {
            phi.set(0, x, n - 1, rat_int(1));
            phi.set(x, x, n - 2, rat_int(-1));
        }
        ("R2", "psi4") => {
            phi.set(0, 1, n - 1, rat_int(1));
            phi.set(x, 1, n - 2, rat_int(-1));
        }
        ("R5", "rho") => {
            // (e_1, x) and (x, e_1) -> e_1 - e_2; (e_i, x) -> (i-3) e_i
            phi.set(0, x, 0, rat_int(1));
            phi.set(0, x, 1, rat_int(-1));
            phi.set(x, 0, 0, rat_int(1));
            phi.set(x, 0, 1, rat_int(-1));
            for i in 4..=n {
                phi.set(i - 1, x, i - 1, rat_int(i as i64 - 3));
            }
        }
        ("R5", _) if which.starts_with("psi") => {
            let k: usize = which[3..].parse().map_err(|_| undefined())?;
            if k == n {
                phi.set(1, x, n - 1, rat_int(1));
            } else if (4..n).contains(&k) {
                phi.set(0, x, k - 1, rat_int(1));
                for i in 2..=n - k + 2 {
                    phi.set(i - 1, x, k + i - 3, rat_int(1));
                }
            } else {
                return Err(undefined());
            }
        }
        ("R5", _) if which.starts_with("phi") => {
            let k: usize = which[3..].parse().map_err(|_| undefined())?;
            let al = |m: i64| alpha_of(params, m);
            if k == 2 && n >= 3 {
                phi.set(n - 1, 0, 1, rat_int(1));
                let a_n = al(n as i64);
                for jj in 3..=n.saturating_sub(1) {
                    phi.set(0, x, jj - 1, -(&a_n * al(jj as i64 + 1)));
                }
                for i in 3..n {
                    for jj in 2..i {
                        phi.set(i - 1, x, jj - 1, al((n + jj + 1 - i) as i64));
                    }
                }
                for jj in 3..n {
                    phi.set(n - 1, x, jj - 1, al(jj as i64 + 1));
                }
            } else if (3..n).contains(&k) {
                phi.set(n - 1, 0, k - 1, rat_int(1));
                phi.set(0, x, k - 1, -al(n as i64));
                for i in 3..=n + 2 - k {
                    for jj in k..=i + k - 3 {
                        phi.set(i - 1, x, jj - 1, al((n + jj + 3 - i - k) as i64));
                    }
                }
                for i in n + 3 - k..n {
                    for jj in k..=n {
                        phi.set(i - 1, x, jj - 1, al((n + jj + 3 - i - k) as i64));
                    }
                }
                for jj in k + 1..=n {
                    phi.set(n - 1, x, jj - 1, al((jj + 3 - k) as i64));
                }
            } else {
                return Err(undefined());
            }
        }
        _ => return Err(undefined()),
    }
    Ok(phi)
}
