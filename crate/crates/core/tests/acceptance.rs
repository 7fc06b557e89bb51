//! Acceptance suite: one test per criterion, each printing a PASS line when
//! it completes. Every comparison is exact; the only tolerance anywhere is
//! the wall-clock bound on the largest cocycle system.
//!
//! Run with `cargo test -p leibniz-core --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::time::Instant;

use leibniz_core::algebra::Algebra;
use leibniz_core::catalog::{self, Params};
use leibniz_core::cohomology::{
    classes_independent, coboundary_of, coboundary_space, complete_quotient_basis,
    derivation_space, hl2_representative, is_cocycle, second_cohomology, Cochain2,
};
use leibniz_core::degeneration::{builtin_fixtures, fixture_label, run_fixture};
use leibniz_core::invariants::{c11_exact, cij_sampled, InvariantValue, SampledInvariant, Verdict};
use leibniz_core::matrix::{in_span, Matrix};
use leibniz_core::reference;
use leibniz_core::scalar::{rat, rat_int, Rational};
use leibniz_core::StructureTensor;

fn r2_weight_samples(n: usize) -> Vec<Rational> {
    let ni = n as i64;
    let mut out = vec![rat_int(0), rat_int(1), rat_int(-1), rat(1, 2)];
    for special in [rat_int(1 - ni), rat_int(2 - ni)] {
        if !out.contains(&special) {
            out.push(special);
        }
    }
    out
}

/// Every catalog algebra at size `n`, across the parameter samples.
fn catalog_samples(n: usize) -> Vec<Algebra> {
    let mut out = vec![
        catalog::abelian(n),
        catalog::nf(n).unwrap(),
        catalog::rnf(n).unwrap(),
        catalog::f1_graded(n).unwrap(),
        catalog::f2_graded(n).unwrap(),
        catalog::f3_graded(n, &rat_int(0)).unwrap(),
        catalog::r1(n).unwrap(),
        catalog::r3(n).unwrap(),
        catalog::r4(n).unwrap(),
        catalog::r5(n, &[]).unwrap(),
        catalog::rl1(n).unwrap(),
    ];
    if n % 2 == 0 {
        out.push(catalog::f3_graded(n, &rat_int(1)).unwrap());
    } else {
        out.push(catalog::rl2(n, &rat_int(0)).unwrap());
        if n >= 5 {
            out.push(catalog::rl2(n, &rat(1, 2)).unwrap());
            out.push(catalog::rl2(n, &rat_int(-1)).unwrap());
        }
    }
    for alpha in r2_weight_samples(n) {
        out.push(catalog::r2(n, &alpha).unwrap());
    }
    if n >= 4 {
        out.push(catalog::r5(n, &[rat_int(1)]).unwrap());
        for j in 4..=n {
            out.push(catalog::rl3(n, j).unwrap());
        }
    }
    // parametrized filiform families at mixed sample values
    let values: Vec<Rational> = (4..=n)
        .map(|i| match i % 3 {
            0 => rat_int(1),
            1 => rat(1, 2),
            _ => rat_int(-1),
        })
        .collect();
    out.push(catalog::f1_family(n, &values, &rat(1, 2)).unwrap());
    out.push(catalog::f1_family(n, &vec![Rational::from_integer(0.into()); n - 3], &rat_int(1)).unwrap());
    out.push(catalog::f2_family(n, &values, &rat_int(-1)).unwrap());
    out.push(catalog::f2_family(n, &vec![Rational::from_integer(0.into()); n - 3], &rat_int(0)).unwrap());
    out
}

#[test]
fn criterion_1_transcription_fidelity() {
    let mut algebras = 0;
    for n in 3..=8 {
        for a in catalog_samples(n) {
            let defects = a.tensor.leibniz_defects();
            assert!(
                defects.is_empty(),
                "{} violates the Leibniz identity at {} triples",
                a.name,
                defects.len()
            );
            let nilr = a.nilradical.as_ref().expect("catalog algebras declare a nilradical");
            assert!(
                a.tensor.verify_nilpotent_ideal(nilr),
                "{}: declared nilradical fails verification",
                a.name
            );
            // solvable extensions are solvable and not nilpotent; the rest
            // are nilpotent
            let solvable_family = a.basis_labels.last().map(String::as_str) == Some("x");
            if solvable_family {
                assert!(a.tensor.is_solvable(), "{} not solvable", a.name);
                assert!(!a.tensor.is_nilpotent(), "{} unexpectedly nilpotent", a.name);
            } else {
                assert!(a.tensor.is_nilpotent(), "{} not nilpotent", a.name);
            }
            algebras += 1;
        }
    }
    // filiform shape of the first graded family
    for n in 3..=8 {
        let t = catalog::f1_graded(n).unwrap().tensor;
        let mut want = vec![n];
        want.extend((1..=n - 2).rev());
        want.push(0);
        assert_eq!(t.lower_central_dims(), want);
    }
    println!("criterion 1 PASS: {algebras} catalog algebras transcribe exactly (n = 3..8)");
}

#[test]
fn criterion_2_derivation_dimensions() {
    let mut checks = 0;
    for n in 4..=8 {
        let ni = n as i64;
        let mut expect: Vec<(Algebra, usize)> = vec![
            (catalog::rnf(n).unwrap(), 2),
            (catalog::r1(n).unwrap(), 2),
            (catalog::r3(n).unwrap(), 3),
            (catalog::r4(n).unwrap(), 3),
            (catalog::r5(n, &[]).unwrap(), n),
            (catalog::r5(n, &[rat_int(1)]).unwrap(), n - 1),
        ];
        for alpha in [rat_int(0), rat_int(1), rat_int(-1), rat(1, 2)] {
            expect.push((catalog::r2(n, &alpha).unwrap(), 3));
        }
        for alpha in [rat_int(2 - ni), rat_int(1 - ni)] {
            expect.push((catalog::r2(n, &alpha).unwrap(), 4));
        }
        for (a, want) in expect {
            let got = derivation_space(&a.tensor).len();
            assert_eq!(got, want, "dim Der({}) = {got}, want {want}", a.name);
            let key = a.name.split('(').next().unwrap();
            assert_eq!(reference::der_dim(key, n, &a.params), Some(want), "{}", a.name);
            checks += 1;
        }
    }
    println!("criterion 2 PASS: {checks} derivation dimensions match (n = 4..8)");
}

#[test]
fn criterion_3_coboundary_dimensions() {
    let mut checks = 0;
    for n in 4..=8 {
        let ni = n as i64;
        let d2 = (n + 1) * (n + 1);
        let mut expect: Vec<(Algebra, usize)> = vec![
            (catalog::rnf(n).unwrap(), d2 - 2),
            (catalog::r1(n).unwrap(), d2 - 2),
            (catalog::r3(n).unwrap(), d2 - 3),
            (catalog::r4(n).unwrap(), d2 - 3),
            (catalog::r5(n, &[]).unwrap(), n * n + n + 1),
            (catalog::r5(n, &[rat_int(1)]).unwrap(), n * n + n + 2),
        ];
        for alpha in [rat_int(0), rat_int(1), rat_int(-1), rat(1, 2)] {
            expect.push((catalog::r2(n, &alpha).unwrap(), d2 - 3));
        }
        for alpha in [rat_int(2 - ni), rat_int(1 - ni)] {
            expect.push((catalog::r2(n, &alpha).unwrap(), d2 - 4));
        }
        for (a, want) in expect {
            let got = coboundary_space(&a.tensor).dim();
            assert_eq!(got, want, "dim BL2({}) = {got}, want {want}", a.name);
            checks += 1;
        }
    }
    println!("criterion 3 PASS: {checks} coboundary dimensions match (n = 4..8)");
}

#[test]
fn criterion_4_cocycle_and_quotient_dimensions() {
    let start = Instant::now();
    let mut checks = 0;
    for n in 4..=8 {
        let ni = n as i64;
        let d2 = (n + 1) * (n + 1);
        // (algebra, expected ZL2, expected HL2)
        let mut expect: Vec<(Algebra, usize, usize)> = vec![
            (catalog::rnf(n).unwrap(), d2 - 2, 0),
            (catalog::r3(n).unwrap(), d2 - 2, 1),
            (catalog::r4(n).unwrap(), d2 - 2, 1),
            (catalog::r5(n, &[]).unwrap(), n * n + 3 * n - 3, 2 * n - 4),
            (catalog::r5(n, &[rat_int(1)]).unwrap(), n * n + 3 * n - 3, 2 * n - 5),
        ];
        for alpha in [rat_int(0), rat_int(1), rat_int(-1)] {
            expect.push((catalog::r2(n, &alpha).unwrap(), d2 - 1, 2));
        }
        expect.push((catalog::r2(n, &rat(1, 2)).unwrap(), d2 - 2, 1));
        expect.push((catalog::r2(n, &rat_int(1 - ni)).unwrap(), d2 - 2, 2));
        expect.push((catalog::r2(n, &rat_int(2 - ni)).unwrap(), d2 - 2, 2));
        for (a, want_z, want_h) in expect {
            let coh = second_cohomology(&a.tensor).unwrap();
            assert_eq!(coh.cocycles.dim(), want_z, "dim ZL2({})", a.name);
            assert_eq!(coh.quotient_dim, want_h, "dim HL2({})", a.name);
            checks += 2;
        }
    }
    // the n = 3 case split of the weighted family
    for (alpha, want_z, want_h) in [
        (rat_int(0), 15, 2),
        (rat_int(1), 15, 2),
        (rat_int(-1), 16, 4),
        (rat_int(-2), 14, 2),
        (rat(1, 2), 14, 1),
        (rat_int(3), 14, 1),
    ] {
        let a = catalog::r2(3, &alpha).unwrap();
        let coh = second_cohomology(&a.tensor).unwrap();
        assert_eq!(coh.cocycles.dim(), want_z, "dim ZL2({})", a.name);
        assert_eq!(coh.quotient_dim, want_h, "dim HL2({})", a.name);
        checks += 2;
    }
    // abelian: every cochain is a cocycle and nothing bounds
    for d in [2, 3, 4] {
        let t = StructureTensor::<Rational>::zeros(d);
        let coh = second_cohomology(&t).unwrap();
        assert_eq!(coh.cocycles.dim(), d * d * d);
        assert_eq!(coh.coboundaries.dim(), 0);
        assert_eq!(coh.quotient_dim, d * d * d);
        checks += 3;
    }
    // the largest single system must be comfortably fast
    let biggest = Instant::now();
    let coh = second_cohomology(&catalog::r3(8).unwrap().tensor).unwrap();
    let elapsed = biggest.elapsed();
    assert_eq!(coh.cocycles.dim(), 79);
    assert!(
        elapsed.as_secs() < 30,
        "729-unknown system took {elapsed:?}, budget 30 s"
    );
    println!(
        "criterion 4 PASS: {checks} cocycle/quotient dimensions match; n=8 system in {:?} (suite {:?})",
        elapsed,
        start.elapsed()
    );
}

fn rep(family: &str, n: usize, params: &Params, which: &str) -> Cochain2 {
    hl2_representative(family, n, params, which)
        .unwrap_or_else(|e| panic!("missing representative {family}/{which} at n={n}: {e}"))
}

fn assert_full_basis(a: &Algebra, key: &str, reps: Vec<Cochain2>) {
    let coh = second_cohomology(&a.tensor).unwrap();
    assert_eq!(
        reps.len(),
        coh.quotient_dim,
        "{}: {} representatives for a quotient of dimension {}",
        a.name,
        reps.len(),
        coh.quotient_dim
    );
    for (i, r) in reps.iter().enumerate() {
        assert!(is_cocycle(&a.tensor, r), "{key} rep {i} is not a cocycle on {}", a.name);
    }
    assert!(
        classes_independent(&a.tensor, &reps).unwrap(),
        "{}: representatives are dependent modulo coboundaries",
        a.name
    );
}

/// The four weights where the quotient of the weighted family jumps to
/// dimension 2, with a computationally verified second basis class for each
/// (`psi1` plus this class spans). The published pair {rho, psi1} does not
/// span: `rho + (1 + alpha) psi1` is the coboundary of `x -> x` (checked in
/// its own criterion-5 test below), so the second class must come from
/// elsewhere; these are the cocycle directions that open up at each weight.
fn r2_special_weight_cases(n: usize) -> Vec<(Rational, Cochain2)> {
    let ni = n as i64;
    let d = n + 1;
    let x = n;
    let mut sigma0 = Cochain2::zeros(d); // weight 0: (x, e_1) -> e_2
    sigma0.set(x, 0, 1, rat_int(1));
    let mut sigma1 = Cochain2::zeros(d); // weight 1: (e_1, e_1) -> e_2
    sigma1.set(0, 0, 1, rat_int(1));
    let mut zeta = Cochain2::zeros(d); // weight 1-n: (x, x) -> e_n
    zeta.set(x, x, n - 1, rat_int(1));
    let mut psi3 = Cochain2::zeros(d); // weight 2-n: (e_1,x) -> e_n, (x,x) -> -e_{n-1}
    psi3.set(0, x, n - 1, rat_int(1));
    psi3.set(x, x, n - 2, rat_int(-1));
    vec![
        (rat_int(0), sigma0),
        (rat_int(1), sigma1),
        (rat_int(1 - ni), zeta),
        (rat_int(2 - ni), psi3),
    ]
}

#[test]
fn criterion_5_representative_verification() {
    let none = Params::new();
    let mut cases = 0;
    for n in 4..=7 {
        assert_full_basis(
            &catalog::r3(n).unwrap(),
            "R3",
            vec![rep("R3", n, &none, "xi")],
        );
        assert_full_basis(
            &catalog::r4(n).unwrap(),
            "R4",
            vec![rep("R4", n, &none, "rho")],
        );
        cases += 2;
        // weighted family at the four special weights: the quotient is
        // 2-dimensional, rho and psi1 are each nonzero classes, and psi1
        // extends to a full basis by the verified second class
        for (alpha, second) in r2_special_weight_cases(n) {
            let a = catalog::r2(n, &alpha).unwrap();
            let rho = rep("R2", n, &none, "rho");
            let psi1 = rep("R2", n, &none, "psi1");
            assert!(is_cocycle(&a.tensor, &rho), "{}", a.name);
            assert!(classes_independent(&a.tensor, &[rho]).unwrap(), "{}: rho bounds", a.name);
            assert!(
                classes_independent(&a.tensor, &[psi1.clone()]).unwrap(),
                "{}: psi1 bounds",
                a.name
            );
            assert_full_basis(&a, "R2", vec![psi1, second]);
            cases += 1;
        }
        {
            let a = catalog::r2(n, &rat_int(-1)).unwrap();
            assert_full_basis(&a, "R2", vec![rep("R2", n, &none, "psi1"), rep("R2", n, &none, "psi2")]);
            cases += 1;
        }
        for alpha in [rat(1, 2), rat_int(3), rat_int(-7)] {
            let a = catalog::r2(n, &alpha).unwrap();
            assert_full_basis(&a, "R2", vec![rep("R2", n, &none, "rho")]);
            cases += 1;
        }
        // shifted family: the published psi/phi classes that satisfy the
        // cocycle equations are jointly independent, and the computed
        // complement fills the remaining quotient slots (the published rho
        // is never a cocycle, and the phi corrections break down at n = 4
        // with a nonzero parameter; see the published-tables test below).
        // With a parameter switched on, the psi with that index drops out.
        for (alphas, dropped) in [(vec![], None), (vec![rat_int(1)], Some(4usize))] {
            let a = catalog::r5(n, &alphas).unwrap();
            let mut names: Vec<String> = Vec::new();
            for k in 4..=n {
                if dropped != Some(k) {
                    names.push(format!("psi{k}"));
                }
            }
            for k in 2..n {
                names.push(format!("phi{k}"));
            }
            let mut reps: Vec<Cochain2> = Vec::new();
            for name in &names {
                let r = rep("R5", n, &a.params, name);
                if is_cocycle(&a.tensor, &r) {
                    reps.push(r);
                }
            }
            let expected_open = second_cohomology(&a.tensor).unwrap().quotient_dim - reps.len();
            assert!(expected_open >= 1, "{}: the rho slot is always open", a.name);
            let complement = complete_quotient_basis(&a.tensor, &reps)
                .unwrap_or_else(|e| panic!("{}: {e}", a.name));
            assert_eq!(complement.len(), expected_open, "{}", a.name);
            reps.extend(complement);
            assert_full_basis(&a, "R5", reps);
            cases += 1;
        }
        {
            // frozen replacement for the rho slot at zero parameters,
            // verified against the computed quotient:
            // (e_1,e_1) -> (n-1) e_3, (e_1,x) -> e_1,
            // (e_i,x) -> -(n-i) e_i for 2 <= i <= n, (x,e_1) -> -e_1 + e_2
            let a = catalog::r5(n, &[]).unwrap();
            let d = n + 1;
            let x = n;
            let mut rho_star = Cochain2::zeros(d);
            rho_star.set(0, 0, 2, rat_int(n as i64 - 1));
            rho_star.set(0, x, 0, rat_int(1));
            for i in 2..=n {
                rho_star.set(i - 1, x, i - 1, rat_int(-((n - i) as i64)));
            }
            rho_star.set(x, 0, 0, rat_int(-1));
            rho_star.set(x, 0, 1, rat_int(1));
            let mut reps = vec![rho_star];
            for k in 4..=n {
                reps.push(rep("R5", n, &a.params, &format!("psi{k}")));
            }
            for k in 2..n {
                reps.push(rep("R5", n, &a.params, &format!("phi{k}")));
            }
            assert_full_basis(&a, "R5", reps);
            cases += 1;
        }
        {
            // 2 a_4 psi_4 + 3 a_5 psi_5 + ... + (n-2) a_n psi_n is a
            // coboundary once some parameter is nonzero
            let a = catalog::r5(n, &[rat_int(1)]).unwrap();
            let mut combo = vec![Rational::from_integer(0.into()); (n + 1) * (n + 1) * (n + 1)];
            for k in 4..=n {
                let weight = rat_int(k as i64 - 2)
                    * a.params
                        .get(&format!("a{k}"))
                        .cloned()
                        .unwrap_or_else(|| rat_int(0));
                if weight == rat_int(0) {
                    continue;
                }
                let psi = rep("R5", n, &a.params, &format!("psi{k}"));
                for (c, v) in combo.iter_mut().zip(psi.flat()) {
                    *c += &weight * v;
                }
            }
            let b = coboundary_space(&a.tensor);
            assert!(
                in_span(&combo, &b.basis),
                "{}: weighted psi combination is not a coboundary",
                a.name
            );
            cases += 1;
        }
    }
    // n = 3 case split of the weighted family
    {
        let none = Params::new();
        for (alpha, second) in r2_special_weight_cases(3) {
            if alpha == rat_int(-1) {
                continue; // 2 - n = -1 at n = 3 falls under the 4-dimensional case
            }
            let a = catalog::r2(3, &alpha).unwrap();
            let psi1 = rep("R2", 3, &none, "psi1");
            assert!(
                classes_independent(&a.tensor, &[psi1.clone()]).unwrap(),
                "{}: psi1 bounds",
                a.name
            );
            assert_full_basis(&a, "R2", vec![psi1, second]);
            cases += 1;
        }
        let a = catalog::r2(3, &rat_int(-1)).unwrap();
        assert_full_basis(
            &a,
            "R2",
            vec![
                rep("R2", 3, &none, "psi1"),
                rep("R2", 3, &none, "psi2"),
                rep("R2", 3, &none, "psi3"),
                rep("R2", 3, &none, "psi4"),
            ],
        );
        for alpha in [rat(1, 2), rat_int(5)] {
            let a = catalog::r2(3, &alpha).unwrap();
            assert_full_basis(&a, "R2", vec![rep("R2", 3, &none, "rho")]);
            cases += 1;
        }
        cases += 1;
    }
    println!("criterion 5 PASS: {cases} representative sets span their quotients exactly");
}

/// The criterion fragments that cannot pass, asserted literally as published
/// and expected to fail. Two defects in the published representative tables
/// are cross-checked here:
///
/// * the pair `{rho, psi1}` claimed as a quotient basis for the weighted
///   family at the four special weights: `rho + (1 + alpha) psi1` is the
///   coboundary of the endomorphism `x -> x` (every weight, every size), so
///   `rho-bar = -(1 + alpha) psi1-bar` and the pair never spans the
///   2-dimensional quotient;
/// * the displayed `rho` of the shifted family, which fails the cocycle
///   equations outright (first defect on the triple `(e_1, e_1, x)`).
///
/// `criterion_5_representative_verification` carries the verified corrected
/// bases for both.
#[test]
fn criterion_5_published_tables_literal() {
    let none = Params::new();
    let mut violations: Vec<String> = Vec::new();
    for n in 4..=7 {
        // the dependence relation, asserted so a failure here cannot be
        // mistaken for a transcription bug
        for (alpha, _) in r2_special_weight_cases(n) {
            let a = catalog::r2(n, &alpha).unwrap();
            let rho = rep("R2", n, &none, "rho");
            let psi1 = rep("R2", n, &none, "psi1");
            let weight = rat_int(1) + &alpha;
            let combo: Vec<Rational> = rho
                .flat()
                .iter()
                .zip(psi1.flat())
                .map(|(r, p)| r + &weight * p)
                .collect();
            let b = coboundary_space(&a.tensor);
            assert!(
                in_span(&combo, &b.basis),
                "{}: rho + (1+alpha) psi1 should bound",
                a.name
            );
            let pair = vec![rho, psi1];
            if !classes_independent(&a.tensor, &pair).unwrap() {
                violations.push(format!(
                    "{}: published pair {{rho, psi1}} is dependent modulo coboundaries \
                     (rho + (1+alpha) psi1 is the coboundary of x -> x)",
                    a.name
                ));
            }
        }
        for alphas in [vec![], vec![rat_int(1)]] {
            let a = catalog::r5(n, &alphas).unwrap();
            let rho = rep("R5", n, &a.params, "rho");
            if !is_cocycle(&a.tensor, &rho) {
                violations.push(format!(
                    "{}: published rho fails the cocycle equations (first defect at (e_1, e_1, x))",
                    a.name
                ));
            }
        }
    }
    assert!(
        violations.is_empty(),
        "published representative tables fail verification:\n  {}",
        violations.join("\n  ")
    );
    println!("criterion 5 (published tables, literal) PASS");
}

#[test]
fn criterion_6_trace_invariant_closed_forms() {
    let mut checks = 0;
    for n in 4..=8 {
        let ni = n as i64;
        let mut algebras: Vec<Algebra> = vec![
            catalog::rnf(n).unwrap(),
            catalog::r1(n).unwrap(),
            catalog::rl1(n).unwrap(),
            catalog::r3(n).unwrap(),
            catalog::r4(n).unwrap(),
            catalog::r5(n, &[]).unwrap(),
            catalog::r5(n, &[rat_int(1)]).unwrap(),
        ];
        if n % 2 == 1 {
            algebras.push(catalog::rl2(n, &rat(1, 2)).unwrap());
            algebras.push(catalog::rl2(n, &rat_int(2)).unwrap());
        }
        for j in 4..=n {
            algebras.push(catalog::rl3(n, j).unwrap());
        }
        for alpha in r2_weight_samples(n) {
            algebras.push(catalog::r2(n, &alpha).unwrap());
        }
        for a in &algebras {
            let key = a.name.split('(').next().unwrap();
            let want = reference::c11(key, n, &a.params)
                .unwrap_or_else(|| panic!("no reference value for {}", a.name));
            let got = c11_exact(&a.tensor);
            assert_eq!(got, want, "c11({})", a.name);
            checks += 1;
        }
        // frozen spot values
        if n == 4 {
            assert_eq!(
                c11_exact(&catalog::rnf(4).unwrap().tensor),
                InvariantValue::Defined(rat(10, 3))
            );
        }
        // invariant coincidences of the weighted family
        let pairs: [(Rational, Algebra); 4] = [
            (rat_int(1), catalog::rnf(n).unwrap()),
            (rat_int(0), catalog::r1(n).unwrap()),
            (rat_int(1 - ni), catalog::r3(n).unwrap()),
            (rat_int(2 - ni), catalog::r4(n).unwrap()),
        ];
        for (alpha, partner) in pairs {
            let a = catalog::r2(n, &alpha).unwrap();
            assert_eq!(
                c11_exact(&a.tensor),
                c11_exact(&partner.tensor),
                "c11({}) vs c11({})",
                a.name,
                partner.name
            );
            checks += 1;
        }
    }
    println!("criterion 6 PASS: {checks} closed-form invariant values hold exactly (n = 4..8)");
}

#[test]
fn criterion_7_builtin_degenerations() {
    let mut verified = 0;
    for n in 4..=8 {
        let fixtures = builtin_fixtures(n).unwrap();
        assert_eq!(fixtures.len(), 6);
        for f in &fixtures {
            assert!(f.post_change.is_none(), "{}: unexpected post change", fixture_label(f));
            let outcome = run_fixture(f)
                .unwrap_or_else(|e| panic!("{} failed: {e}", fixture_label(f)));
            assert_eq!(outcome.limit, f.target.tensor, "{}", fixture_label(f));
            assert!(
                matches!(outcome.report.verdict, Verdict::Possible),
                "{}: necessary conditions rule the verified pair out",
                fixture_label(f)
            );
            verified += 1;
        }
    }
    println!("criterion 7 PASS: {verified} built-in degenerations verified exactly (n = 4..8)");
}

#[test]
fn criterion_8_rigidity_candidates_ruled_out() {
    let mut pairs = 0;
    for n in 4..=6 {
        let ni = n as i64;
        let mut candidates: Vec<Algebra> = vec![
            catalog::rnf(n).unwrap(),
            catalog::r1(n).unwrap(),
            catalog::r3(n).unwrap(),
            catalog::r4(n).unwrap(),
            catalog::r5(n, &[]).unwrap(),
            catalog::r5(n, &[rat_int(1)]).unwrap(),
            catalog::rl1(n).unwrap(),
        ];
        if n % 2 == 1 {
            candidates.push(catalog::rl2(n, &rat(1, 2)).unwrap());
        }
        for j in 4..=n {
            candidates.push(catalog::rl3(n, j).unwrap());
        }
        for alpha in r2_weight_samples(n) {
            candidates.push(catalog::r2(n, &alpha).unwrap());
        }
        let targets = [
            catalog::r3(n).unwrap(),
            catalog::r4(n).unwrap(),
            catalog::r2(n, &rat(1, 2)).unwrap(), // generic weight
        ];
        for target in &targets {
            for cand in &candidates {
                if cand.tensor == target.tensor {
                    continue;
                }
                let report = leibniz_core::invariants::degeneration_report(cand, target)
                    .unwrap_or_else(|e| panic!("{} -> {}: {e}", cand.name, target.name));
                match &report.verdict {
                    Verdict::RuledOut(reasons) => {
                        assert!(
                            reasons
                                .iter()
                                .any(|r| r == "derivation-dimension" || r == "c11-invariant"),
                            "{} -> {}: ruled out only by {:?}",
                            cand.name,
                            target.name,
                            reasons
                        );
                    }
                    Verdict::Possible => panic!(
                        "{} -> {} should be ruled out",
                        cand.name, target.name
                    ),
                }
                pairs += 1;
            }
        }
    }
    println!("criterion 8 PASS: {pairs} candidate degenerations ruled out with a named condition (n = 4..6)");
}

fn tiny_rng(state: &mut u64) -> i64 {
    // splitmix step, reduced to a small signed value
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ((z ^ (z >> 31)) % 5) as i64 - 2
}

fn random_unitriangular_pair(d: usize, state: &mut u64) -> (Matrix<Rational>, Matrix<Rational>) {
    let mut lower = Matrix::<Rational>::identity(d);
    let mut upper = Matrix::<Rational>::identity(d);
    for r in 0..d {
        for c in 0..d {
            let v = rat_int(tiny_rng(state));
            if r > c {
                *lower.at_mut(r, c) = v;
            } else if r < c {
                *upper.at_mut(r, c) = v;
            }
        }
    }
    let invert = |m: &Matrix<Rational>, low: bool| -> Matrix<Rational> {
        let mut inv = Matrix::<Rational>::identity(d);
        let rows: Vec<usize> = if low { (0..d).collect() } else { (0..d).rev().collect() };
        for col in 0..d {
            for &r in &rows {
                let mut acc = if r == col { rat_int(1) } else { rat_int(0) };
                let ks: Vec<usize> = if low { (0..r).collect() } else { (r + 1..d).collect() };
                for k in ks {
                    let sub = m.at(r, k) * inv.at(k, col);
                    acc -= sub;
                }
                *inv.at_mut(r, col) = acc;
            }
        }
        inv
    };
    let linv = invert(&lower, true);
    let uinv = invert(&upper, false);
    (lower.mul_matrix(&upper), uinv.mul_matrix(&linv))
}

#[test]
fn criterion_9_property_suites() {
    let mut checks = 0;
    // coboundaries of every endomorphism are cocycles; inclusion; dimension
    // complement; rank-nullity on the dense derivation system
    for n in [4, 5] {
        for a in catalog_samples(n) {
            let d = a.dim();
            let mut dense_rows: Vec<Vec<Rational>> = Vec::with_capacity(d * d);
            for p in 0..d {
                for q in 0..d {
                    let mut e = Matrix::<Rational>::zeros(d, d);
                    *e.at_mut(p, q) = rat_int(1);
                    let phi = coboundary_of(&a.tensor, &e);
                    assert!(
                        is_cocycle(&a.tensor, &phi),
                        "{}: coboundary of E({p},{q}) fails the cocycle equations",
                        a.name
                    );
                    dense_rows.push(phi.flat().to_vec());
                }
            }
            // rank-nullity on the explicit coboundary-operator matrix
            // (d^3 x d^2: columns are endomorphisms, kernel is Der)
            let operator = Matrix::from_rows(dense_rows).transpose();
            let rank = operator.rank();
            let nullity = operator.nullspace_basis().len();
            assert_eq!(rank + nullity, d * d, "{}", a.name);
            assert_eq!(nullity, derivation_space(&a.tensor).len(), "{}", a.name);
            let coh = second_cohomology(&a.tensor).unwrap(); // checks inclusion
            assert_eq!(coh.coboundaries.dim(), rank, "{}", a.name);
            assert_eq!(coh.coboundaries.dim() + nullity, d * d, "{}", a.name);
            checks += 4;
        }
    }
    // the flattened coboundary operator of the null-filiform extension at
    // n = 4 has rank exactly 23 = 5^2 - 2
    {
        let a = catalog::rnf(4).unwrap();
        let d = a.dim();
        let mut rows = Vec::new();
        for p in 0..d {
            for q in 0..d {
                let mut e = Matrix::<Rational>::zeros(d, d);
                *e.at_mut(p, q) = rat_int(1);
                rows.push(coboundary_of(&a.tensor, &e).flat().to_vec());
            }
        }
        assert_eq!(Matrix::from_rows(rows).rank(), 23);
        checks += 1;
    }
    // exact and sampled invariants agree on every catalog algebra
    for n in [3, 5] {
        for a in catalog_samples(n) {
            let exact = c11_exact(&a.tensor);
            let sampled = cij_sampled(&a.tensor, 1, 1, 8, leibniz_core::invariants::DEFAULT_SAMPLE_SEED);
            match (&exact, &sampled) {
                (InvariantValue::Defined(x), SampledInvariant::Defined(y)) => {
                    assert_eq!(x, y, "{}", a.name)
                }
                (InvariantValue::Undefined, SampledInvariant::Undefined) => {}
                other => panic!("{}: exact/sampled disagree: {other:?}", a.name),
            }
            checks += 1;
        }
    }
    // invariance of c11 under 20 random rational basis changes per algebra
    let mut state = 0x5EED_u64;
    for a in [
        catalog::rnf(4).unwrap(),
        catalog::r2(4, &rat(1, 2)).unwrap(),
        catalog::r3(5).unwrap(),
        catalog::rl3(5, 4).unwrap(),
        catalog::r5(5, &[rat_int(1)]).unwrap(),
    ] {
        let before = c11_exact(&a.tensor);
        for _ in 0..20 {
            let (g, ginv) = random_unitriangular_pair(a.dim(), &mut state);
            let moved = a.tensor.apply_basis_change(&g, &ginv).unwrap();
            assert_eq!(c11_exact(&moved), before, "{}", a.name);
            checks += 1;
        }
    }
    println!("criterion 9 PASS: {checks} property checks hold exactly");
}
