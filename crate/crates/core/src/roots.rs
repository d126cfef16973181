//! Roots of univariate polynomials that lie in the ground field.
//!
//! Over F_p the field is enumerated. Over Q and Q(ζ_n) the polynomial is
//! rescaled so its roots become algebraic integers, whose power-basis
//! coordinates are integers bounded via the Fujiwara root bound and the
//! inverse Vandermonde matrix of the embeddings; the box is enumerated and
//! every candidate is checked exactly.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Poly;

/// Largest candidate box searched before giving up.
const MAX_CANDIDATES: u64 = 400_000;

/// Distinct roots of `p` in its field, in a fixed order: for F_p the residues
/// 1, 2, …, p-1, 0; for characteristic 0 candidates by increasing size with 0 last.
pub fn roots_in_field(p: &Poly) -> Result<Vec<FieldElement>> {
    let Some(deg) = p.degree() else {
        return Err(Error::Invalid("roots of the zero polynomial".into()));
    };
    if deg == 0 {
        return Ok(vec![]);
    }
    let field = p.coeffs[0].field();
    match &field {
        Field::Prime(q) => {
            if *q > 1_000_000 {
                return Err(Error::Unsupported(format!("root search over F_{q}")));
            }
            Ok((1..*q).chain(std::iter::once(0)).map(|v| field.from_u64(v)).filter(|c| p.eval(c).is_zero()).collect())
        }
        _ => char0_roots(&p.monic(), &field),
    }
}

fn char0_roots(m: &Poly, field: &Field) -> Result<Vec<FieldElement>> {
    let d = m.degree().unwrap();
    let coords: Vec<Vec<BigRational>> = m.coeffs.iter().map(|c| c.rational_coordinates().unwrap()).collect();
    let den = coords
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let den_f = den.to_f64().unwrap_or(f64::INFINITY);
    // Fujiwara: |r| ≤ 2 max_k |a_{d-k}|^{1/k}
    let mut bound = 0f64;
    for k in 1..=d {
        let a = m.coeffs[d - k].l1_bound().unwrap().to_f64().unwrap_or(f64::INFINITY);
        let term = if k == d { (a / 2.0).powf(1.0 / k as f64) } else { a.powf(1.0 / k as f64) };
        bound = bound.max(term);
    }
    let root_bound = 2.0 * bound * den_f;
    let phi = coords[0].len();
    let spread = match field {
        Field::Cyclotomic(c) => inverse_vandermonde_norm(c.order(), phi),
        _ => 1.0,
    };
    let k = (root_bound * spread * (1.0 + 1e-9)).ceil() + 1.0;
    if !k.is_finite() {
        return Err(Error::Unsupported("root bound overflow".into()));
    }
    let k = k as i64;
    let count = (2 * k as u64 + 1).checked_pow(phi as u32).unwrap_or(u64::MAX);
    if count > MAX_CANDIDATES {
        return Err(Error::Unsupported(format!(
            "root search box of {count} candidates exceeds the limit"
        )));
    }
    let den_r = BigRational::from_integer(den);
    let mut found: Vec<(BigInt, FieldElement)> = Vec::new();
    let mut digits = vec![-k; phi];
    loop {
        let value = candidate(field, &digits, &den_r);
        if m.eval(&value).is_zero() {
            let size: BigInt = digits.iter().map(|x| BigInt::from(x.abs())).sum();
            found.push((size, value));
        }
        // odometer
        let mut i = 0;
        loop {
            if i == phi {
                found.sort_by(|a, b| {
                    let za = a.1.is_zero();
                    let zb = b.1.is_zero();
                    za.cmp(&zb).then(a.0.cmp(&b.0)).then(a.1.to_string().cmp(&b.1.to_string()))
                });
                return Ok(found.into_iter().map(|x| x.1).collect());
            }
            digits[i] += 1;
            if digits[i] > k {
                digits[i] = -k;
                i += 1;
            } else {
                break;
            }
        }
    }
}

fn candidate(field: &Field, digits: &[i64], den: &BigRational) -> FieldElement {
    let coords = digits.iter().map(|&d| BigRational::from_integer(BigInt::from(d)) / den);
    match field {
        Field::Cyclotomic(c) => FieldElement::Cyclotomic { field: c.clone(), coeffs: coords.collect() },
        _ => FieldElement::Rational(coords.into_iter().next().expect("one coordinate")),
    }
}

/// ‖V⁻¹‖_∞ for the Vandermonde matrix of the complex embeddings of Q(ζ_n);
/// coordinates of an element are bounded by this times the largest embedding.
fn inverse_vandermonde_norm(n: u64, phi: usize) -> f64 {
    let units: Vec<u64> = (1..=n).filter(|k| k.gcd(&n) == 1).collect();
    let mut a: Vec<Vec<Complex64>> = units
        .iter()
        .map(|&u| {
            (0..phi)
                .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (u * k as u64) as f64 / n as f64))
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<Complex64>> =
        (0..phi).map(|i| (0..phi).map(|j| if i == j { Complex64::one() } else { Complex64::zero() }).collect()).collect();
    for c in 0..phi {
        let p = (c..phi).max_by(|&x, &y| a[x][c].norm().partial_cmp(&a[y][c].norm()).unwrap()).unwrap();
        a.swap(c, p);
        inv.swap(c, p);
        let piv = a[c][c];
        for j in 0..phi {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for r in 0..phi {
            if r != c {
                let f = a[r][c];
                for j in 0..phi {
                    let (ac, ic) = (a[c][j], inv[c][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv.iter().map(|row| row.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &Field, cs: &[&str]) -> Poly {
        Poly::new(cs.iter().map(|s| f.parse_element(s).unwrap()).collect())
    }

    #[test]
    fn rational_roots() {
        let q = Field::rationals();
        // (t - 1/2)(t + 3) t = t^3 + 5/2 t^2 - 3/2 t
        let p = poly(&q, &["0", "-3/2", "5/2", "1"]);
        let r = roots_in_field(&p).unwrap();
        let strs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        assert_eq!(strs, vec!["1/2", "-3", "0"]);
        // t^2 + 1 has no rational roots
        assert!(roots_in_field(&poly(&q, &["1", "0", "1"])).unwrap().is_empty());
    }

    #[test]
    fn cyclotomic_roots() {
        let f = Field::cyclotomic(3);
        // t^2 + t + 1 splits over Q(ζ3)
        let r = roots_in_field(&poly(&f, &["1", "1", "1"])).unwrap();
        assert_eq!(r.len(), 2);
        for x in &r {
            assert!(x.pow(3).is_one());
        }
        let g = Field::cyclotomic(4);
        let r = roots_in_field(&poly(&g, &["1", "0", "1"])).unwrap();
        assert_eq!(r.len(), 2);
        let r = roots_in_field(&poly(&g, &["-1/4", "0", "1"])).unwrap();
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn prime_field_roots() {
        let f = Field::prime(5);
        let r = roots_in_field(&poly(&f, &["0", "4", "0", "1"])).unwrap(); // t^3 - t
        let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        assert_eq!(v, vec!["1", "4", "0"]);
    }
}
