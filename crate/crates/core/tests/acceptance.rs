//! Acceptance suite: one PASS/FAIL line per criterion, each within its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use verlinde_core::catalog::{default_field, matrix_algebra, double_by_name, frobenius_by_name, group_by_name, FROBENIUS_CATALOG};
use verlinde_core::doubles::{double_simples, drinfeld_double, in_orbit_basis, is_scaled_permutation, smatrix_modular};
use verlinde_core::frobenius::{BlockCertificate, FrobeniusAlgebra};
use verlinde_core::fusion::{
    bracket_witness, diagonalization_check, diagonalization_on_hh0, fusion_oracle, k0_check, multiplicities_in,
    verlinde_check, ModularData,
};
use verlinde_core::group::{compose, mat2_mul, pbun_orbits, sl2z_action, S_MATRIX, T_MATRIX};
use verlinde_core::hochschild::{circle_sign_identity_holds, homotopy_identity_holds, pre_lie_holds, Cochain};
use verlinde_core::hopf::{corgrv_check, s_transform, QuasiTriangular, Tensor, RADFORD_CONVENTION};
use verlinde_core::io::{parse_algebra, parse_frobenius, parse_group, parse_hopf, parse_smatrix, write_algebra, write_hopf};
use verlinde_core::{Error, Field, FiniteGroup, Result, Vector};

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

const SEMISIMPLE_DOUBLES: [&str; 4] = ["z2", "z3", "z4", "s3"];

fn verlinde_formula() -> Outcome {
    for name in SEMISIMPLE_DOUBLES {
        let g = ok(group_by_name(name))?;
        let d = ok(drinfeld_double(&g, &default_field(&g)))?;
        let simples = ok(double_simples(&d, None))?;
        let md = ok(ModularData::from_double(&ok(smatrix_modular(&d, &simples))?))?;
        let oracle = ok(fusion_oracle(&d.hopf, &simples))?;
        let report = ok(verlinde_check(&md, Some(&oracle)))?;
        ensure(report.passed(), || format!("D({name}):\n{report}"))?;
        let triples = simples.len().pow(3);
        ensure(name != "s3" || triples == 512, || format!("D(s3) has {triples} triples"))?;
    }
    Ok(())
}

fn diagonalization() -> Outcome {
    for name in SEMISIMPLE_DOUBLES {
        let g = ok(group_by_name(name))?;
        let f = default_field(&g);
        let d = ok(drinfeld_double(&g, &f))?;
        let simples = ok(double_simples(&d, None))?;
        let dm = ok(smatrix_modular(&d, &simples))?;
        let md = ok(ModularData::from_double(&dm))?;
        let product = multiplicities_in(&f, &ok(fusion_oracle(&d.hopf, &simples))?);
        let dims: Vec<_> = dm.dims.iter().map(|&x| f.from_u64(x as u64)).collect();
        let report = ok(diagonalization_check(&md, &product, Some(&dims)))?;
        ensure(report.passed(), || format!("D({name}):\n{report}"))?;
        // the same on A/[A, A] through ⋆, with the regular trace as form
        let alg = d.algebra();
        let regular: Vector = (0..alg.dim()).map(|k| alg.left_mult_matrix(&alg.basis(k)).trace()).collect();
        let frob = ok(FrobeniusAlgebra::new(alg.clone(), regular))?;
        let report = ok(diagonalization_on_hh0(&frob, &dm.characters, &dm.dims))?;
        ensure(report.passed(), || format!("D({name}) on HH0:\n{report}"))?;
    }
    Ok(())
}

fn internal_characters() -> Outcome {
    let cases = [
        (FiniteGroup::cyclic(2), Field::rationals()),
        (FiniteGroup::cyclic(2), Field::prime(2)),
        (FiniteGroup::cyclic(3), Field::prime(3)),
    ];
    for (g, f) in cases {
        let d = ok(drinfeld_double(&g, &f))?;
        let simples = ok(double_simples(&d, None))?;
        let report = ok(corgrv_check(&d.hopf, &d.qt, &simples, RADFORD_CONVENTION))?;
        ensure(report.passed(), || format!("D({}) over {}", g.name(), f.spec()))?;
    }
    Ok(())
}

fn k0_congruence() -> Outcome {
    let d = ok(double_by_name("d-z2-char2"))?;
    let report = ok(k0_check(&d))?;
    ensure(report.passed(), || report.to_string())?;
    // M must be twice the multiplication table of Z2
    let m = &report.tensors[0].1;
    let two = Field::rationals().from_u64(2);
    let zero = Field::rationals().zero();
    let unit = (0..2).find(|&u| (0..2).all(|j| (0..2).all(|l| m[u][j][l] == if l == j { two.clone() } else { zero.clone() })));
    let unit = unit.ok_or_else(|| format!("no unit block in M:\n{report}"))?;
    let other = 1 - unit;
    ensure(m[other][other][unit] == two && m[other][other][other] == zero, || format!("M is not 2δ:\n{report}"))?;
    ensure((0..2).all(|i| m[i][unit][i] == two), || format!("M is not 2δ:\n{report}"))
}

fn handle_elements() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in FROBENIUS_CATALOG {
        let a = ok(frobenius_by_name(name, None))?;
        let f = a.algebra().field().clone();
        let idempotents = ok(a.algebra().decompose())?.idempotents;
        // over F_2 and F_3 the random scalars necessarily repeat
        let mut scales = vec![f.one()];
        while scales.len() < 4 {
            let c = f.random_element(&mut rng);
            if !c.is_zero() {
                scales.push(c);
            }
        }
        for c in &scales {
            let b = ok(a.rescaled(c))?;
            for p in &idempotents {
                for r in &idempotents {
                    let expected = f.from_u64(b.algebra().sandwich(p, r).len() as u64);
                    let got = ok(b.handle_trace(p, r))?;
                    ensure(got == expected, || format!("{name}, scale {c}: λ(π⋆ρ) = {got}, dim πAρ = {expected}"))?;
                }
            }
        }
    }
    Ok(())
}

fn block_diagonality() -> Outcome {
    for name in ["d-z2-char2", "fp-z2z2", "f2-z2", "q-s3"] {
        let a = ok(frobenius_by_name(name, None))?;
        let dec = ok(a.algebra().decompose())?;
        match a.certify_block_diagonal(&dec) {
            BlockCertificate::Pass => {}
            BlockCertificate::Counterexample { blocks, .. } => return Err(format!("{name}: blocks {blocks:?}")),
        }
    }
    Ok(())
}

fn homotopy_and_signs() -> Outcome {
    const BOUND: usize = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["fp-truncated-3", "dual-numbers"] {
        let alg = ok(frobenius_by_name(name, None))?.algebra().clone();
        for p in 0..=3 {
            for q in 0..=3 {
                for trial in 0..200 {
                    let a = ok(Cochain::random(&alg, p, BOUND, &mut rng))?;
                    let b = ok(Cochain::random(&alg, q, BOUND, &mut rng))?;
                    ensure(ok(homotopy_identity_holds(&a, &b))?, || format!("{name}: homotopy fails at ({p},{q}) trial {trial}"))?;
                    ensure(ok(circle_sign_identity_holds(&a, &b))?, || format!("{name}: circle signs fail at ({p},{q}) trial {trial}"))?;
                }
            }
        }
    }
    Ok(())
}

fn nonzero_bracket() -> Outcome {
    for p in [2, 3, 5] {
        let w = ok(bracket_witness(p))?;
        ensure(!w.bracket.is_zero() && w.nonzero_class, || format!("F_{p}[Z_{p}]: bracket class vanishes"))?;
    }
    Ok(())
}

fn modular_group() -> Outcome {
    for name in ["z2", "z3", "s3"] {
        let g = ok(group_by_name(name))?;
        let orbits = pbun_orbits(&g);
        let act = |m| ok(sl2z_action(&g, &orbits, m));
        let s = act(&S_MATRIX)?;
        let t = act(&T_MATRIX)?;
        let id: Vec<usize> = (0..orbits.len()).collect();
        let s2 = compose(&s, &s);
        ensure(compose(&s2, &s2) == id, || format!("{name}: S⁴ ≠ 1"))?;
        let st = compose(&s, &t);
        ensure(compose(&st, &compose(&st, &st)) == s2, || format!("{name}: (ST)³ ≠ S²"))?;
        // the permutation of a product is the product of permutations
        ensure(act(&mat2_mul(&S_MATRIX, &T_MATRIX))? == st, || format!("{name}: action is not multiplicative"))?;
    }
    for name in ["z2", "z3"] {
        let g = ok(group_by_name(name))?;
        let f = default_field(&g);
        let d = ok(drinfeld_double(&g, &f))?;
        let orbits = pbun_orbits(&g);
        let perm = ok(sl2z_action(&g, &orbits, &S_MATRIX))?;
        let st = ok(s_transform(&d.hopf, &d.qt, RADFORD_CONVENTION))?;
        let m = ok(in_orbit_basis(&d, &orbits, &st.full))?;
        ensure(is_scaled_permutation(&m, &perm, &f.one()), || format!("D({name}): 𝕊 in the orbit basis is\n{m}"))?;
    }
    Ok(())
}

fn structural_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in FROBENIUS_CATALOG {
        let a = ok(frobenius_by_name(name, None))?;
        ok(a.algebra().validate())?;
        ok(a.check_casimir())?;
        ok(a.check_coalgebra())?;
        ok(a.check_star_on_hh0())?;
        let alg = a.algebra();
        let top = if alg.dim() <= 3 { 3 } else { 2 };
        for p in 0..=top {
            for _ in 0..5 {
                let c = ok(Cochain::random(alg, p, 6, &mut rng))?;
                ensure(ok(ok(c.differential())?.differential())?.is_zero(), || format!("{name}: d² ≠ 0 in degree {p}"))?;
            }
        }
        if alg.dim() <= 3 {
            for (p, q, r) in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (0, 1, 2)] {
                let x = ok(Cochain::random(alg, p, 4, &mut rng))?;
                let y = ok(Cochain::random(alg, q, 4, &mut rng))?;
                let z = ok(Cochain::random(alg, r, 4, &mut rng))?;
                ensure(ok(pre_lie_holds(&x, &y, &z))?, || format!("{name}: pre-Lie fails at ({p},{q},{r})"))?;
            }
        }
    }
    for (g, f) in [
        (FiniteGroup::cyclic(2), Field::rationals()),
        (FiniteGroup::cyclic(2), Field::prime(2)),
        (FiniteGroup::cyclic(3), Field::cyclotomic(3)),
        (FiniteGroup::cyclic(3), Field::prime(3)),
        (FiniteGroup::symmetric3(), Field::cyclotomic(3)),
    ] {
        let d = ok(drinfeld_double(&g, &f))?;
        ok(d.hopf.validate())?;
        ok(d.qt.validate(&d.hopf))?;
        ensure(d.qt.yang_baxter_holds(&d.hopf), || format!("D({}): Yang-Baxter fails", g.name()))?;
        ok(d.qt.check_ribbon_identities(&d.hopf))?;
    }
    corrupted_inputs()
}

fn rejected(what: &str, r: Result<impl Sized>, accept: fn(&Error) -> bool) -> Outcome {
    match r {
        Err(e) if accept(&e) => Ok(()),
        Err(e) => Err(format!("{what}: wrong error {e}")),
        Ok(_) => Err(format!("{what}: accepted")),
    }
}

fn corrupted_inputs() -> Outcome {
    let q = Field::rationals();
    let invalid = |e: &Error| matches!(e, Error::Invalid(_));
    rejected(
        "non-associative algebra",
        parse_algebra("algebra q 2\n0 0 0 1\n0 1 1 1\n1 1 0 1\nunit 1 0\n"),
        invalid,
    )?;
    rejected(
        "non-symmetric form",
        parse_frobenius(&write_algebra(&matrix_algebra(&q, 2), Some(&[q.one(), q.one(), q.zero(), q.zero()]))),
        invalid,
    )?;
    rejected(
        "degenerate form",
        parse_frobenius("algebra q 2\n0 0 0 1\n0 1 1 1\n1 0 1 1\nunit 1 0\nform 1 0\n"),
        |e| matches!(e, Error::Singular(_)),
    )?;
    rejected("group without inverses", parse_group("group 2\n0 1\n1 1\n", "bad"), invalid)?;
    let d = ok(drinfeld_double(&FiniteGroup::cyclic(2), &Field::rationals()))?;
    let text = write_hopf(&d.hopf, Some(&d.qt));
    rejected("broken counit", parse_hopf(&text.replace("counit 1 1 0 0", "counit 1 0 0 0")), invalid)?;
    rejected("broken antipode", parse_hopf(&text.replace("antipode\n1 0 0 0\n0 1 0 0", "antipode\n0 1 0 0\n1 0 0 0")), invalid)?;
    rejected("broken coproduct", parse_hopf(&text.replace("coproduct 3 3 1 1\n", "")), invalid)?;
    let one = d.algebra().one();
    let mut r = Tensor::simple(&[&one, &one]);
    r.add_term(vec![0, 1], &Field::rationals().one());
    rejected("broken R-matrix", QuasiTriangular::new(&d.hopf, r, one.clone()), invalid)?;
    rejected("non-invertible ribbon", QuasiTriangular::new(&d.hopf, d.qt.r.clone(), d.algebra().basis(2)), invalid)?;
    rejected("singular S-matrix", parse_smatrix("smatrix q 2\n1 1\n1 1\n").and_then(|s| ModularData::new(vec!["0".into(), "1".into()], s, None)), |e| {
        matches!(e, Error::Singular(_))
    })?;
    let s = ok(parse_smatrix("smatrix q 2\n1 1\n1 -1/3\n"))?;
    let report = ok(verlinde_check(&ok(ModularData::new(vec!["0".into(), "1".into()], s, None))?, None))?;
    ensure(!report.passed() && report.first_failure().and_then(|v| v.witness).is_some(), || "corrupted S-matrix accepted".into())?;
    let alg = ok(frobenius_by_name("dual-numbers", None))?.algebra().clone();
    let c = ok(Cochain::random(&alg, 2, 2, &mut ChaCha8Rng::seed_from_u64(1)))?;
    rejected("degree overflow", c.differential(), |e| matches!(e, Error::DegreeOverflow { .. }))?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("verlinde formula against the fusion oracle", 60, verlinde_formula),
        ("S-conjugated fusion product is diagonal", 30, diagonalization),
        ("internal character identity", 30, internal_characters),
        ("K0 congruence for D(Z2) over F2", 10, k0_congruence),
        ("handle elements recover the Cartan matrix", 10, handle_elements),
        ("block diagonality of the star product", 10, block_diagonality),
        ("homotopy and circle sign identities", 60, homotopy_and_signs),
        ("nonzero Gerstenhaber bracket", 10, nonzero_bracket),
        ("SL(2,Z) relations and the geometric S", 30, modular_group),
        ("structural suites and corrupted inputs", 60, structural_suites),
    ];
    let mut failures = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|_| {
            ensure(elapsed <= Duration::from_secs(*limit), || format!("took {:.1} s, limit {limit} s", elapsed.as_secs_f64()))
        });
        let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {:>7.2} s  {name}", k + 1, elapsed.as_secs_f64());
        if let Err(msg) = outcome {
            failures += 1;
            for line in msg.lines() {
                println!("    {line}");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
