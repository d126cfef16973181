//! Built-in example groups and algebras, resolvable by name.

use crate::algebra::StructureAlgebra;
use crate::doubles::{drinfeld_double, DrinfeldDouble};
use crate::error::{Error, Result};
use crate::field::{is_prime, Field};
use crate::frobenius::FrobeniusAlgebra;
use crate::group::FiniteGroup;
use crate::linalg::unit_vector;

/// `k[t]/(t^m)` with basis `1, t, …, t^{m-1}`.
pub fn truncated_polynomial(field: &Field, m: usize) -> StructureAlgebra {
    let entries: Vec<_> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|(i, j)| i + j < m)
        .map(|(i, j)| (i, j, i + j, field.one()))
        .collect();
    StructureAlgebra::new(field, m, entries, unit_vector(field, m, 0)).expect("truncated polynomial algebra")
}

/// `M_n(k)` with basis `E_ij` at index `i·n + j`.
pub fn matrix_algebra(field: &Field, n: usize) -> StructureAlgebra {
    let mut entries = vec![];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((i * n + j, j * n + l, i * n + l, field.one()));
            }
        }
    }
    let mut unit = vec![field.zero(); n * n];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    StructureAlgebra::new(field, n * n, entries, unit).expect("matrix algebra")
}

/// `trivial`, `z<n>`, `s3`, `klein` (or `z2xz2`), `d<n>`.
pub fn group_by_name(name: &str) -> Result<FiniteGroup> {
    match name {
        "trivial" | "z1" => Ok(FiniteGroup::trivial()),
        "s3" => Ok(FiniteGroup::symmetric3()),
        "klein" | "z2xz2" => Ok(FiniteGroup::klein()),
        _ => {
            let number = |prefix: &str| name.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok()).filter(|&n| n >= 1);
            if let Some(n) = number("z") {
                Ok(FiniteGroup::cyclic(n))
            } else if let Some(n) = number("d").filter(|&n| n >= 3) {
                Ok(FiniteGroup::dihedral(n))
            } else {
                Err(Error::UnknownName(format!("group {name}")))
            }
        }
    }
}

/// `Q` for exponent at most 2, otherwise the cyclotomic field of the exponent.
pub fn default_field(g: &FiniteGroup) -> Field {
    match g.exponent() {
        1 | 2 => Field::rationals(),
        e => Field::cyclotomic(e as u64),
    }
}

/// Names accepted by [`frobenius_by_name`] without a field argument.
pub const FROBENIUS_CATALOG: &[&str] = &[
    "dual-numbers",
    "fp-truncated-2",
    "fp-truncated-3",
    "fp-truncated-5",
    "fp-z2z2",
    "mat2",
    "q-z2",
    "q-s3",
    "f2-z2",
    "d-z2-q",
    "d-z2-char2",
    "d-z3-char3",
];

/// Group algebra with `λ(g) = [g = e]`.
pub fn group_frobenius(g: &FiniteGroup, field: &Field) -> Result<FrobeniusAlgebra> {
    FrobeniusAlgebra::from_algebra(g.group_algebra(field)?, unit_vector(field, g.order(), 0))
}

/// `D(G)` with its cointegral as Frobenius form.
pub fn double_frobenius(d: &DrinfeldDouble) -> Result<FrobeniusAlgebra> {
    FrobeniusAlgebra::new(d.algebra().clone(), d.hopf.cointegral()?)
}

/// Catalog Frobenius algebras; `group:<g>` and `double:<g>` take an optional
/// field, defaulting to [`default_field`].
pub fn frobenius_by_name(name: &str, field: Option<&Field>) -> Result<FrobeniusAlgebra> {
    let fixed = |f: Field| field.cloned().unwrap_or(f);
    if let Some(g) = name.strip_prefix("group:") {
        let g = group_by_name(g)?;
        let f = field.cloned().unwrap_or_else(|| default_field(&g));
        return group_frobenius(&g, &f);
    }
    if let Some(g) = name.strip_prefix("double:") {
        let g = group_by_name(g)?;
        let f = field.cloned().unwrap_or_else(|| default_field(&g));
        return double_frobenius(&drinfeld_double(&g, &f)?);
    }
    if let Some(p) = name.strip_prefix("fp-truncated-") {
        let p: u64 = p.parse().map_err(|_| Error::UnknownName(format!("algebra {name}")))?;
        if !is_prime(p) {
            return Err(Error::UnknownName(format!("algebra {name}: {p} is not a prime")));
        }
        let f = fixed(Field::prime(p));
        let m = p as usize;
        return FrobeniusAlgebra::from_algebra(truncated_polynomial(&f, m), unit_vector(&f, m, m - 1));
    }
    match name {
        "dual-numbers" => {
            let f = fixed(Field::rationals());
            FrobeniusAlgebra::from_algebra(truncated_polynomial(&f, 2), unit_vector(&f, 2, 1))
        }
        "mat2" => {
            let f = fixed(Field::rationals());
            FrobeniusAlgebra::from_algebra(matrix_algebra(&f, 2), vec![f.one(), f.zero(), f.zero(), f.one()])
        }
        "fp-z2z2" => group_frobenius(&FiniteGroup::klein(), &fixed(Field::prime(2))),
        "q-z2" => group_frobenius(&FiniteGroup::cyclic(2), &fixed(Field::rationals())),
        "q-s3" => group_frobenius(&FiniteGroup::symmetric3(), &fixed(Field::rationals())),
        "f2-z2" => group_frobenius(&FiniteGroup::cyclic(2), &fixed(Field::prime(2))),
        _ => {
            let d = double_by_name(name)?;
            let d = match field {
                Some(f) => drinfeld_double(&d.group, f)?,
                None => d,
            };
            double_frobenius(&d)
        }
    }
}

/// `d-z2-q`, `d-z2-char2`, `d-z3-char3`.
pub fn double_by_name(name: &str) -> Result<DrinfeldDouble> {
    let (g, f) = match name {
        "d-z2-q" => (FiniteGroup::cyclic(2), Field::rationals()),
        "d-z2-char2" => (FiniteGroup::cyclic(2), Field::prime(2)),
        "d-z3-char3" => (FiniteGroup::cyclic(3), Field::prime(3)),
        _ => return Err(Error::UnknownName(format!("algebra {name}"))),
    };
    drinfeld_double(&g, &f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_name_resolves() {
        for name in FROBENIUS_CATALOG {
            let a = frobenius_by_name(name, None).unwrap();
            a.check_casimir().unwrap();
        }
        assert_eq!(frobenius_by_name("double:s3", None).unwrap().algebra().dim(), 36);
        assert_eq!(frobenius_by_name("group:z3", Some(&Field::prime(3))).unwrap().algebra().field(), &Field::prime(3));
    }

    #[test]
    fn unknown_names() {
        for name in ["fp-truncated-4", "nope", "group:z0", "double:q8"] {
            assert!(matches!(frobenius_by_name(name, None), Err(Error::UnknownName(_))), "{name}");
        }
        assert!(matches!(group_by_name("d2"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn groups_by_name() {
        assert_eq!(group_by_name("z4").unwrap().order(), 4);
        assert_eq!(group_by_name("d4").unwrap().order(), 8);
        assert!(!group_by_name("d4").unwrap().is_abelian());
        assert_eq!(default_field(&group_by_name("s3").unwrap()), Field::cyclotomic(6));
        assert_eq!(default_field(&group_by_name("klein").unwrap()), Field::rationals());
    }
}
