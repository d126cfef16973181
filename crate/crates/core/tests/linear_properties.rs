use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use verlinde_core::{Field, Matrix};

fn fields() -> Vec<Field> {
    vec![Field::rationals(), Field::prime(2), Field::prime(7), Field::cyclotomic(3), Field::cyclotomic(8)]
}

fn random_matrix(field: &Field, rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..rows).map(|_| (0..cols).map(|_| field.random_element(&mut rng)).collect()).collect();
    Matrix::from_rows(field, rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(k in 0usize..5, rows in 1usize..5, cols in 1usize..6, seed: u64) {
        let f = &fields()[k];
        let m = random_matrix(f, rows, cols, seed);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.cols(), cols);
        prop_assert!(m.mul(&kernel).is_zero());
    }

    #[test]
    fn rref_is_idempotent(k in 0usize..5, rows in 1usize..5, cols in 1usize..6, seed: u64) {
        let f = &fields()[k];
        let r = random_matrix(f, rows, cols, seed).rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.pivots, r.pivots);
    }

    #[test]
    fn solutions_solve(k in 0usize..5, rows in 1usize..5, cols in 1usize..5, seed: u64, consistent: bool) {
        let f = &fields()[k];
        let m = random_matrix(f, rows, cols, seed);
        let b = if consistent {
            m.mul_vec(&random_matrix(f, cols, 1, seed ^ 1).column(0))
        } else {
            random_matrix(f, rows, 1, seed ^ 2).column(0)
        };
        match m.solve(&b).unwrap() {
            Some(x) => prop_assert_eq!(m.mul_vec(&x), b),
            None => prop_assert!(!consistent),
        }
    }

    #[test]
    fn field_axioms(k in 0usize..5, seed: u64) {
        let f = &fields()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.random_element(&mut rng), f.random_element(&mut rng), f.random_element(&mut rng));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn cyclotomic_reduction_is_canonical(n in 3u64..13, k in -30i64..30) {
        let f = Field::cyclotomic(n);
        let z = f.root_of_unity(n).unwrap();
        prop_assert!(z.pow(n).is_one());
        let mut sum = f.zero();
        for j in 0..n {
            sum = &sum + &z.pow(j);
        }
        prop_assert!(sum.is_zero());
        // z^k written two ways
        let direct = f.parse_element(&format!("z^{}", k.rem_euclid(n as i64))).unwrap();
        let shifted = f.parse_element(&format!("z^{}", k.rem_euclid(n as i64) + n as i64)).unwrap();
        prop_assert_eq!(direct, shifted);
    }
}
