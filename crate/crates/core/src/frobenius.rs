//! Symmetric Frobenius algebras: dual bases, the Frobenius coproduct and the
//! product `a ⋆ b = a' b a''` on `A/[A, A]`.

use crate::algebra::{AlgebraRef, Decomposition, StructureAlgebra};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{dot, is_zero_vector, span_basis, vec_add, vec_scale, vec_sub, EchelonBasis, Matrix, Vector};

/// `A` together with a symmetric form `λ` whose pairing `λ(ab)` is nondegenerate.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    algebra: AlgebraRef,
    form: Vector,
    duals: Vec<Vector>,
}

/// `Σ a' ⊗ a''` with each left entry a distinct basis vector, stored by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerTensor {
    pub terms: Vec<(usize, Vector)>,
}

impl SweedlerTensor {
    /// Coordinates in `A ⊗ A` with `e_i ⊗ e_j` at `i·n + j`.
    pub fn flatten(&self, n: usize, zero: &FieldElement) -> Vector {
        let mut out = vec![zero.clone(); n * n];
        for (i, r) in &self.terms {
            for (j, c) in r.iter().enumerate() {
                out[i * n + j].add_assign(c);
            }
        }
        out
    }
}

/// Result of [`FrobeniusAlgebra::certify_block_diagonal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockCertificate {
    Pass,
    /// `x ⋆ y` for `x ∈ A_l`, `y ∈ A_m` escapes the allowed subspace mod `[A, A]`.
    Counterexample { blocks: (usize, usize), left: Vector, right: Vector },
}

impl FrobeniusAlgebra {
    pub fn new(algebra: AlgebraRef, form: Vector) -> Result<FrobeniusAlgebra> {
        let n = algebra.dim();
        if form.len() != n {
            return Err(Error::DimensionMismatch(format!("form of length {} on a {n}-dimensional algebra", form.len())));
        }
        let f = algebra.field();
        let mut gram = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                let v: FieldElement = algebra.basis_product(i, j).iter().fold(f.zero(), |mut acc, (k, c)| {
                    acc.add_mul(c, &form[*k]);
                    acc
                });
                gram[(i, j)] = v;
            }
        }
        if gram != gram.transpose() {
            return Err(Error::Invalid("form is not symmetric".into()));
        }
        let inv = gram.inverse().ok_or_else(|| Error::Singular("Frobenius pairing is degenerate".into()))?;
        // f_j = Σ_k (G⁻¹)_{kj} e_k
        let duals = inv.columns();
        Ok(FrobeniusAlgebra { algebra, form, duals })
    }

    pub fn from_algebra(algebra: StructureAlgebra, form: Vector) -> Result<FrobeniusAlgebra> {
        FrobeniusAlgebra::new(algebra.into_ref(), form)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn form(&self) -> &[FieldElement] {
        &self.form
    }

    pub fn lambda(&self, a: &[FieldElement]) -> FieldElement {
        dot(&self.form, a)
    }

    /// `({e_i}, {f_i})` with `λ(e_i f_j) = δ_ij`.
    pub fn dual_bases(&self) -> (Vec<Vector>, Vec<Vector>) {
        let n = self.algebra.dim();
        ((0..n).map(|i| self.algebra.basis(i)).collect(), self.duals.clone())
    }

    /// The same algebra with `λ` replaced by `c·λ`.
    pub fn rescaled(&self, c: &FieldElement) -> Result<FrobeniusAlgebra> {
        if c.is_zero() {
            return Err(Error::Singular("rescaling by zero".into()));
        }
        FrobeniusAlgebra::new(self.algebra.clone(), vec_scale(c, &self.form))
    }

    /// `Δ(a) = Σ_i (a e_i) ⊗ f_i`, regrouped by the basis vector on the left.
    pub fn coproduct(&self, a: &[FieldElement]) -> SweedlerTensor {
        let alg = &self.algebra;
        let n = alg.dim();
        let f = alg.field();
        let mut rights: Vec<Vector> = vec![vec![f.zero(); n]; n];
        for (p, ap) in a.iter().enumerate() {
            if ap.is_zero() {
                continue;
            }
            for i in 0..n {
                for (k, c) in alg.basis_product(p, i) {
                    let coeff = ap * c;
                    for (r, d) in rights[*k].iter_mut().zip(&self.duals[i]) {
                        r.add_mul(&coeff, d);
                    }
                }
            }
        }
        SweedlerTensor {
            terms: rights.into_iter().enumerate().filter(|(_, r)| !is_zero_vector(r)).collect(),
        }
    }

    /// `a ⋆ b = Σ a' b a''`.
    pub fn star(&self, a: &[FieldElement], b: &[FieldElement]) -> Vector {
        let alg = &self.algebra;
        let mut out = alg.zero();
        for (i, right) in self.coproduct(a).terms {
            let left = alg.mul(&alg.basis(i), b);
            out = vec_add(&out, &alg.mul(&left, &right));
        }
        out
    }

    /// `λ(π ⋆ ρ)`, which equals `dim(πAρ)·1` for idempotents.
    pub fn handle_trace(&self, pi: &[FieldElement], rho: &[FieldElement]) -> Result<FieldElement> {
        for e in [pi, rho] {
            if !self.algebra.is_idempotent(e) {
                return Err(Error::Invalid("handle trace needs idempotent arguments".into()));
            }
        }
        Ok(self.lambda(&self.star(pi, rho)))
    }

    /// `λ(π)` for an idempotent `π`.
    pub fn modified_dimension(&self, pi: &[FieldElement]) -> Result<FieldElement> {
        if !self.algebra.is_idempotent(pi) {
            return Err(Error::Invalid("modified dimension needs an idempotent".into()));
        }
        Ok(self.lambda(pi))
    }

    /// Checks `A_l ⋆ A_m = 0` for `l ≠ m` and `A_l ⋆ A_l ⊆ A_l` on all pairs of
    /// basis vectors of the blocks `A_l = c_l A`.
    pub fn certify_block_diagonal(&self, dec: &Decomposition) -> BlockCertificate {
        let alg = &self.algebra;
        let n = alg.dim();
        let f = alg.field();
        let central = alg.block_idempotents(dec);
        let block_bases: Vec<Vec<Vector>> = central
            .iter()
            .map(|c| span_basis(f, n, &(0..n).map(|k| alg.mul(c, &alg.basis(k))).collect::<Vec<_>>()))
            .collect();
        for (l, bl) in block_bases.iter().enumerate() {
            let mut own = EchelonBasis::new(f, n);
            for v in bl {
                own.insert(v);
            }
            for (m, bm) in block_bases.iter().enumerate() {
                for x in bl {
                    for y in bm {
                        let p = self.star(x, y);
                        let inside = if l == m { own.contains(&p) } else { is_zero_vector(&p) };
                        if !inside {
                            return BlockCertificate::Counterexample { blocks: (l, m), left: x.clone(), right: y.clone() };
                        }
                    }
                }
            }
        }
        BlockCertificate::Pass
    }

    /// `(a ⊗ 1) C = C (1 ⊗ a)` for the canonical element `C = Σ e_i ⊗ f_i` and every basis `a`.
    pub fn check_casimir(&self) -> Result<()> {
        let alg = &self.algebra;
        let n = alg.dim();
        let zero = alg.field().zero();
        for a in 0..n {
            let ea = alg.basis(a);
            let mut lhs = vec![zero.clone(); n * n];
            let mut rhs = vec![zero.clone(); n * n];
            for i in 0..n {
                let l = alg.basis_product_dense(a, i);
                let r = alg.mul(&self.duals[i], &ea);
                for p in 0..n {
                    for q in 0..n {
                        lhs[p * n + q].add_mul(&l[p], &self.duals[i][q]);
                        if p == i {
                            rhs[p * n + q].add_assign(&r[q]);
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::Invalid(format!("Casimir property fails for basis element {a}")));
            }
        }
        Ok(())
    }

    /// Coassociativity and both counit laws on every basis vector.
    pub fn check_coalgebra(&self) -> Result<()> {
        let alg = &self.algebra;
        let n = alg.dim();
        let f = alg.field();
        for a in 0..n {
            let ea = alg.basis(a);
            let d = self.coproduct(&ea);
            let mut left = alg.zero();
            let mut right = alg.zero();
            for (i, r) in &d.terms {
                left = vec_add(&left, &vec_scale(&self.form[*i], r));
                right[*i].add_assign(&self.lambda(r));
            }
            if left != ea || right != ea {
                return Err(Error::Invalid(format!("counit law fails for basis element {a}")));
            }
            // (Δ⊗id)Δ and (id⊗Δ)Δ as coordinates in A⊗A⊗A
            let mut lhs = vec![f.zero(); n * n * n];
            let mut rhs = vec![f.zero(); n * n * n];
            for (i, r) in &d.terms {
                let di = self.coproduct(&alg.basis(*i)).flatten(n, &f.zero());
                for (pq, c) in di.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, x) in r.iter().enumerate() {
                        lhs[pq * n + k].add_mul(c, x);
                    }
                }
                let dr = self.coproduct(r).flatten(n, &f.zero());
                for (qk, c) in dr.iter().enumerate() {
                    rhs[i * n * n + qk].add_assign(c);
                }
            }
            if lhs != rhs {
                return Err(Error::Invalid(format!("coassociativity fails for basis element {a}")));
            }
        }
        Ok(())
    }

    /// `a ⋆ b − b ⋆ a` and the associator of `⋆` lie in `[A, A]` on all basis triples.
    pub fn check_star_on_hh0(&self) -> Result<()> {
        let alg = &self.algebra;
        let n = alg.dim();
        let (_, proj) = alg.hh0();
        let basis: Vec<Vector> = (0..n).map(|i| alg.basis(i)).collect();
        let stars: Vec<Vec<Vector>> =
            basis.iter().map(|a| basis.iter().map(|b| self.star(a, b)).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                if !is_zero_vector(&proj.mul_vec(&vec_sub(&stars[i][j], &stars[j][i]))) {
                    return Err(Error::Invalid(format!("star is not commutative mod [A,A] on ({i},{j})")));
                }
                for k in 0..n {
                    let l = self.star(&stars[i][j], &basis[k]);
                    let r = self.star(&basis[i], &stars[j][k]);
                    if !is_zero_vector(&proj.mul_vec(&vec_sub(&l, &r))) {
                        return Err(Error::Invalid(format!("star is not associative mod [A,A] on ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Verifies `λ(π ⋆ ρ) = dim(πAρ)·1` for every ordered pair of the given idempotents.
    pub fn check_handle_traces(&self, idempotents: &[Vector]) -> Result<()> {
        let f = self.algebra.field();
        for (i, p) in idempotents.iter().enumerate() {
            for (j, r) in idempotents.iter().enumerate() {
                let expected = f.from_u64(self.algebra.sandwich(p, r).len() as u64);
                if self.handle_trace(p, r)? != expected {
                    return Err(Error::Invalid(format!("handle trace mismatch on idempotent pair ({i},{j})")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::truncated_polynomial;
    use crate::field::Field;
    use crate::group::FiniteGroup;
    use crate::linalg::unit_vector;

    fn dual_numbers() -> FrobeniusAlgebra {
        let q = Field::rationals();
        FrobeniusAlgebra::from_algebra(truncated_polynomial(&q, 2), vec![q.zero(), q.one()]).unwrap()
    }

    fn group_frobenius(g: &FiniteGroup, f: &Field) -> FrobeniusAlgebra {
        FrobeniusAlgebra::from_algebra(g.group_algebra(f).unwrap(), unit_vector(f, g.order(), 0)).unwrap()
    }

    fn v(f: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn dual_numbers_examples() {
        let fa = dual_numbers();
        let q = Field::rationals();
        let (_, duals) = fa.dual_bases();
        assert_eq!(duals, vec![v(&q, &[0, 1]), v(&q, &[1, 0])]);
        assert_eq!(fa.coproduct(&v(&q, &[1, 0])).flatten(2, &q.zero()), v(&q, &[0, 1, 1, 0]));
        assert_eq!(fa.coproduct(&v(&q, &[0, 1])).flatten(2, &q.zero()), v(&q, &[0, 0, 0, 1]));
        let one = v(&q, &[1, 0]);
        let x = v(&q, &[0, 1]);
        assert_eq!(fa.star(&one, &one), v(&q, &[0, 2]));
        assert_eq!(fa.star(&one, &x), v(&q, &[0, 0]));
        assert_eq!(fa.star(&x, &x), v(&q, &[0, 0]));
        assert_eq!(fa.handle_trace(&one, &one).unwrap(), q.from_i64(2));
        assert!(fa.modified_dimension(&one).unwrap().is_zero());
        assert!(matches!(fa.handle_trace(&x, &one), Err(Error::Invalid(_))));
    }

    #[test]
    fn one_dimensional() {
        let q = Field::rationals();
        let a = StructureAlgebra::new(&q, 1, vec![(0, 0, 0, q.one())], vec![q.one()]).unwrap();
        let fa = FrobeniusAlgebra::from_algebra(a, vec![q.one()]).unwrap();
        assert_eq!(fa.coproduct(&[q.one()]).terms, vec![(0, vec![q.one()])]);
        assert_eq!(fa.dual_bases().1, vec![vec![q.one()]]);
    }

    #[test]
    fn group_algebra_duals_are_inverses() {
        let g = FiniteGroup::symmetric3();
        let q = Field::rationals();
        let fa = group_frobenius(&g, &q);
        let (_, duals) = fa.dual_bases();
        for h in 0..g.order() {
            assert_eq!(duals[h], unit_vector(&q, 6, g.inv(h)));
        }
        assert_eq!(fa.star(&fa.algebra().one(), &fa.algebra().one()), vec_scale(&q.from_i64(6), &fa.algebra().one()));
        let f2 = Field::prime(2);
        let fz2 = group_frobenius(&FiniteGroup::cyclic(2), &f2);
        assert!(is_zero_vector(&fz2.star(&fz2.algebra().one(), &fz2.algebra().one())));
        assert!(fz2.handle_trace(&fz2.algebra().one(), &fz2.algebra().one()).unwrap().is_zero());
    }

    #[test]
    fn modified_dimension_of_averaging_idempotent() {
        let q = Field::rationals();
        let fa = group_frobenius(&FiniteGroup::cyclic(2), &q);
        let half = q.parse_element("1/2").unwrap();
        let e = vec![half.clone(), half.clone()];
        assert_eq!(fa.modified_dimension(&e).unwrap(), half);
    }

    #[test]
    fn rejects_bad_forms() {
        let q = Field::rationals();
        // λ(1) = 1, λ(x) = 0 on Q[x]/x² is degenerate
        let err = FrobeniusAlgebra::from_algebra(truncated_polynomial(&q, 2), v(&q, &[1, 0])).unwrap_err();
        assert!(matches!(err, Error::Singular(_)));
        // λ(E_12) = 1 on M_2 is not symmetric
        let m2 = crate::catalog::matrix_algebra(&q, 2);
        let err = FrobeniusAlgebra::from_algebra(m2, v(&q, &[1, 1, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn structural_checks_and_rescaling() {
        let q = Field::rationals();
        let cases = vec![
            dual_numbers(),
            group_frobenius(&FiniteGroup::symmetric3(), &q),
            group_frobenius(&FiniteGroup::klein(), &Field::prime(2)),
            FrobeniusAlgebra::from_algebra(crate::catalog::matrix_algebra(&q, 2), v(&q, &[1, 0, 0, 1])).unwrap(),
        ];
        for fa in cases {
            fa.check_casimir().unwrap();
            fa.check_coalgebra().unwrap();
            fa.check_star_on_hh0().unwrap();
            let c = fa.algebra().field().from_i64(3);
            let c = if c.is_zero() { fa.algebra().field().one() } else { c };
            let r = fa.rescaled(&c).unwrap();
            let one = fa.algebra().one();
            assert_eq!(fa.handle_trace(&one, &one).unwrap(), r.handle_trace(&one, &one).unwrap());
        }
    }

    #[test]
    fn block_diagonal_examples() {
        let q = Field::rationals();
        let fa = group_frobenius(&FiniteGroup::cyclic(2), &q);
        let dec = fa.algebra().decompose().unwrap();
        assert_eq!(dec.blocks.classes.len(), 2);
        assert_eq!(fa.certify_block_diagonal(&dec), BlockCertificate::Pass);
        let dn = dual_numbers();
        let dec = dn.algebra().decompose().unwrap();
        assert_eq!(dn.certify_block_diagonal(&dec), BlockCertificate::Pass);
        let s3 = group_frobenius(&FiniteGroup::symmetric3(), &q);
        let dec = s3.algebra().decompose().unwrap();
        s3.check_handle_traces(&dec.idempotents).unwrap();
        assert_eq!(s3.certify_block_diagonal(&dec), BlockCertificate::Pass);
    }
}
