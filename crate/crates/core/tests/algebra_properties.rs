use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use verlinde_core::catalog::{frobenius_by_name, matrix_algebra, truncated_polynomial, FROBENIUS_CATALOG};
use verlinde_core::frobenius::BlockCertificate;
use verlinde_core::module::{composition_multiplicities, projective_modules, simple_modules};
use verlinde_core::{AlgebraModule, Field, FieldElement, FiniteGroup, StructureAlgebra};

fn small_algebras() -> Vec<StructureAlgebra> {
    vec![
        truncated_polynomial(&Field::rationals(), 3),
        FiniteGroup::cyclic(2).group_algebra(&Field::prime(2)).unwrap(),
        FiniteGroup::cyclic(3).group_algebra(&Field::prime(7)).unwrap(),
        matrix_algebra(&Field::prime(3), 2),
    ]
}

type Dense = Vec<Vec<Vec<FieldElement>>>;

fn dense(f: &Field, n: usize, constants: &[(usize, usize, usize, FieldElement)]) -> Dense {
    let mut t = vec![vec![vec![f.zero(); n]; n]; n];
    for (i, j, k, c) in constants {
        t[*i][*j][*k] = &t[*i][*j][*k] + c;
    }
    t
}

fn product(t: &Dense, a: &[FieldElement], b: &[FieldElement], zero: &FieldElement) -> Vec<FieldElement> {
    let n = a.len();
    let mut out = vec![zero.clone(); n];
    for i in 0..n {
        for j in 0..n {
            let ab = &a[i] * &b[j];
            if ab.is_zero() {
                continue;
            }
            for k in 0..n {
                out[k] = &out[k] + &(&ab * &t[i][j][k]);
            }
        }
    }
    out
}

// Independent associativity and unit test on a dense tensor.
fn is_unital_associative(f: &Field, t: &Dense, unit: &[FieldElement]) -> bool {
    let n = unit.len();
    let basis = |i: usize| (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect::<Vec<_>>();
    let z = f.zero();
    for i in 0..n {
        let ei = basis(i);
        if product(t, unit, &ei, &z) != ei || product(t, &ei, unit, &z) != ei {
            return false;
        }
        for j in 0..n {
            let eij = product(t, &ei, &basis(j), &z);
            for k in 0..n {
                let ek = basis(k);
                let left = product(t, &eij, &ek, &z);
                let right = product(t, &ei, &product(t, &basis(j), &ek, &z), &z);
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

fn random_nonzero(f: &Field, rng: &mut ChaCha8Rng) -> FieldElement {
    loop {
        let c = f.random_element(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

fn catalog_modules(a: &Arc<StructureAlgebra>) -> Vec<AlgebraModule> {
    let dec = a.decompose().unwrap();
    let mut ms = simple_modules(a, &dec).unwrap();
    ms.extend(projective_modules(a, &dec));
    ms.push(AlgebraModule::regular(a));
    ms
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn perturbed_tensors_are_accepted_exactly_when_valid(
        which in 0usize..4, i in 0usize..4, j in 0usize..4, k in 0usize..4, seed: u64,
    ) {
        let a = &small_algebras()[which];
        let f = a.field().clone();
        let n = a.dim();
        let (i, j, k) = (i % n, j % n, k % n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut constants = a.constants();
        constants.push((i, j, k, random_nonzero(&f, &mut rng)));
        let t = dense(&f, n, &constants);
        let valid = is_unital_associative(&f, &t, &a.one());
        let built = StructureAlgebra::new(&f, n, constants, a.one());
        prop_assert_eq!(built.is_ok(), valid);
    }

    #[test]
    fn rescaling_keeps_handle_traces_and_block_verdict(which in 0usize..FROBENIUS_CATALOG.len(), seed: u64) {
        let fa = frobenius_by_name(FROBENIUS_CATALOG[which], None).unwrap();
        let f = fa.algebra().field().clone();
        let c = random_nonzero(&f, &mut ChaCha8Rng::seed_from_u64(seed));
        let scaled = fa.rescaled(&c).unwrap();
        let dec = fa.algebra().decompose().unwrap();
        for p in &dec.idempotents {
            for r in &dec.idempotents {
                prop_assert_eq!(fa.handle_trace(p, r).unwrap(), scaled.handle_trace(p, r).unwrap());
            }
        }
        let verdict = |x: &BlockCertificate| matches!(x, BlockCertificate::Pass);
        prop_assert_eq!(verdict(&fa.certify_block_diagonal(&dec)), verdict(&scaled.certify_block_diagonal(&dec)));
        prop_assert!(scaled.check_star_on_hh0().is_ok());
    }

    #[test]
    fn composition_multiplicities_add_on_direct_sums(which in 0usize..FROBENIUS_CATALOG.len(), x: usize, y: usize) {
        let fa = frobenius_by_name(FROBENIUS_CATALOG[which], None).unwrap();
        let a = fa.algebra().clone();
        prop_assume!(a.dim() <= 9);
        let dec = a.decompose().unwrap();
        let simples = simple_modules(&a, &dec).unwrap();
        let ms = catalog_modules(&a);
        let (m, n) = (&ms[x % ms.len()], &ms[y % ms.len()]);
        let sum = composition_multiplicities(&m.direct_sum(n).unwrap(), &simples).unwrap();
        let cm = composition_multiplicities(m, &simples).unwrap();
        let cn = composition_multiplicities(n, &simples).unwrap();
        let expected: Vec<usize> = cm.iter().zip(&cn).map(|(a, b)| a + b).collect();
        prop_assert_eq!(sum, expected);
    }
}

#[test]
fn catalog_idempotents_are_complete_and_orthogonal() {
    for name in FROBENIUS_CATALOG {
        let fa = frobenius_by_name(name, None).unwrap();
        let a = fa.algebra();
        let dec = a.decompose().unwrap();
        let mut total = a.zero();
        for (i, e) in dec.idempotents.iter().enumerate() {
            assert!(a.is_idempotent(e), "{name}");
            for (j, g) in dec.idempotents.iter().enumerate() {
                if i != j {
                    assert!(a.mul(e, g).iter().all(|c| c.is_zero()), "{name}: e{i} e{j} != 0");
                }
            }
            total = total.iter().zip(e).map(|(x, y)| x + y).collect();
        }
        assert_eq!(total, a.one(), "{name}");
    }
}

#[test]
fn catalog_cartan_matrices_are_symmetric() {
    for name in FROBENIUS_CATALOG {
        let dec = frobenius_by_name(name, None).unwrap().algebra().decompose().unwrap();
        let c = &dec.cartan;
        for i in 0..c.len() {
            for j in 0..c.len() {
                assert_eq!(c[i][j], c[j][i], "{name}");
            }
        }
    }
}
