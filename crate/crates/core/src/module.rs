//! Finite-dimensional left modules over a [`StructureAlgebra`].

use std::sync::Arc;

use crate::algebra::{AlgebraRef, Decomposition, StructureAlgebra};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{span_basis, unit_vector, Matrix, Subquotient, Vector};

/// Left module given by the matrices `ρ(e_i)` of the basis elements.
#[derive(Clone, Debug)]
pub struct AlgebraModule {
    algebra: AlgebraRef,
    dim: usize,
    action: Vec<Matrix>,
}

impl AlgebraModule {
    /// Validates `ρ(e_i)ρ(e_j) = Σ_k c_ij^k ρ(e_k)` and `ρ(1) = id`.
    pub fn new(algebra: &AlgebraRef, action: Vec<Matrix>) -> Result<AlgebraModule> {
        let m = Self::new_unchecked(algebra, action)?;
        m.validate()?;
        Ok(m)
    }

    pub fn new_unchecked(algebra: &AlgebraRef, action: Vec<Matrix>) -> Result<AlgebraModule> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim || m.field() != algebra.field()) {
            return Err(Error::DimensionMismatch("action matrices must be square of one size".into()));
        }
        Ok(AlgebraModule { algebra: algebra.clone(), dim, action })
    }

    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Matrix::zeros(a.field(), self.dim, self.dim);
                for (k, c) in a.basis_product(i, j) {
                    rhs.axpy(c, &self.action[*k]);
                }
                if lhs != rhs {
                    return Err(Error::Invalid(format!("module relation fails on basis pair ({i},{j})")));
                }
            }
        }
        if !self.act(&a.one()).is_identity() {
            return Err(Error::Invalid("unit does not act as the identity".into()));
        }
        Ok(())
    }

    /// The regular module `A` acting on itself by left multiplication.
    pub fn regular(algebra: &AlgebraRef) -> AlgebraModule {
        let action = (0..algebra.dim()).map(|i| algebra.left_mult_matrix(&algebra.basis(i))).collect();
        AlgebraModule { algebra: algebra.clone(), dim: algebra.dim(), action }
    }

    /// The left ideal `A·e` with basis chosen from the products `e_k · e`.
    pub fn left_ideal(algebra: &AlgebraRef, e: &[FieldElement]) -> AlgebraModule {
        let n = algebra.dim();
        let vs: Vec<Vector> = (0..n).map(|k| algebra.mul(&algebra.basis(k), e)).collect();
        let basis = span_basis(algebra.field(), n, &vs);
        let regular = AlgebraModule::regular(algebra);
        regular.subquotient(&basis, &[])
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(a)` for an arbitrary algebra element.
    pub fn act(&self, a: &[FieldElement]) -> Matrix {
        let mut m = Matrix::zeros(self.algebra.field(), self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, &self.action[i]);
            }
        }
        m
    }

    pub fn direct_sum(&self, other: &AlgebraModule) -> Result<AlgebraModule> {
        same_algebra(self, other)?;
        let f = self.algebra.field();
        let d = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(f, d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m[(self.dim + i, self.dim + j)] = b[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        Ok(AlgebraModule { algebra: self.algebra.clone(), dim: d, action })
    }

    /// The module `V / W` for submodules `W ⊆ V` given by spanning vectors.
    pub fn subquotient(&self, big: &[Vector], small: &[Vector]) -> AlgebraModule {
        let f = self.algebra.field();
        let sq = Subquotient::new(f, self.dim, big, small);
        let q = sq.dim();
        let action = self
            .action
            .iter()
            .map(|rho| {
                let cols: Vec<Vector> = sq.reps.iter().map(|r| sq.coords(&rho.mul_vec(r))).collect();
                Matrix::from_columns(f, q, &cols)
            })
            .collect();
        AlgebraModule { algebra: self.algebra.clone(), dim: q, action }
    }

    /// `J·V` for a subspace `V` (given by spanning vectors) and the radical `J`.
    fn radical_image(&self, radical: &[Vector], v: &[Vector]) -> Vec<Vector> {
        let mut out = Vec::new();
        for j in radical {
            let rho = self.act(j);
            for x in v {
                out.push(rho.mul_vec(x));
            }
        }
        span_basis(self.algebra.field(), self.dim, &out)
    }

    /// Semisimple layers `J^k M / J^{k+1} M` of the radical filtration.
    pub fn radical_layers(&self) -> Result<Vec<AlgebraModule>> {
        let radical = self.algebra.radical()?;
        let f = self.algebra.field();
        let mut cur: Vec<Vector> = (0..self.dim).map(|i| unit_vector(f, self.dim, i)).collect();
        let mut layers = Vec::new();
        while !cur.is_empty() {
            let next = self.radical_image(&radical, &cur);
            layers.push(self.subquotient(&cur, &next));
            cur = next;
        }
        Ok(layers)
    }
}

fn same_algebra(m: &AlgebraModule, n: &AlgebraModule) -> Result<()> {
    if Arc::ptr_eq(&m.algebra, &n.algebra) {
        return Ok(());
    }
    let (a, b) = (&m.algebra, &n.algebra);
    if a.dim() == b.dim() && a.field() == b.field() && a.constants() == b.constants() {
        return Ok(());
    }
    Err(Error::Invalid("modules over different algebras".into()))
}

/// Intertwiners `T: M → N` with `T ρ_M(g) = ρ_N(g) T` for a generating set `g`.
/// Returns the dimension and a basis of `Hom_A(M, N)` as `dim N × dim M` matrices.
pub fn hom_space(m: &AlgebraModule, n: &AlgebraModule) -> Result<(usize, Vec<Matrix>)> {
    same_algebra(m, n)?;
    let alg = m.algebra.clone();
    let f = alg.field();
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Ok((0, vec![]));
    }
    let mut rows: Vec<Vector> = Vec::new();
    for g in alg.generators() {
        let rm = m.act(g);
        let rn = n.act(g);
        // (T ρ_M)_{rs} - (ρ_N T)_{rs}, with t_{ru} at index r*dm + u
        for r in 0..dn {
            for s in 0..dm {
                let mut row = vec![f.zero(); unknowns];
                for u in 0..dm {
                    row[r * dm + u].add_assign(&rm[(u, s)]);
                }
                for u in 0..dn {
                    let v = -&rn[(r, u)];
                    row[u * dm + s].add_assign(&v);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(f, unknowns)
    } else {
        Matrix::from_rows(f, rows)?.kernel_basis()
    };
    let basis = kernel
        .columns()
        .into_iter()
        .map(|v| Matrix::from_rows(f, v.chunks(dm).map(|c| c.to_vec()).collect()).expect("rectangular"))
        .collect::<Vec<_>>();
    Ok((basis.len(), basis))
}

/// Tops `A e_i / J e_i` of the projective indecomposables, one per isomorphism class.
pub fn simple_modules(algebra: &AlgebraRef, dec: &Decomposition) -> Result<Vec<AlgebraModule>> {
    let radical = algebra.radical()?;
    let regular = AlgebraModule::regular(algebra);
    let n = algebra.dim();
    let f = algebra.field();
    let mut out = Vec::new();
    for e in dec.representative_idempotents() {
        let big: Vec<Vector> = (0..n).map(|k| algebra.mul(&algebra.basis(k), &e)).collect();
        let big = span_basis(f, n, &big);
        let small: Vec<Vector> = radical.iter().map(|j| algebra.mul(j, &e)).collect();
        let small = span_basis(f, n, &small);
        out.push(regular.subquotient(&big, &small));
    }
    Ok(out)
}

/// Projective indecomposables `A e_i`, one per isomorphism class.
pub fn projective_modules(algebra: &AlgebraRef, dec: &Decomposition) -> Vec<AlgebraModule> {
    dec.representative_idempotents().iter().map(|e| AlgebraModule::left_ideal(algebra, e)).collect()
}

/// Jordan–Hölder multiplicities of `M` against the given split simple modules,
/// computed layer by layer along the radical filtration.
pub fn composition_multiplicities(m: &AlgebraModule, simples: &[AlgebraModule]) -> Result<Vec<usize>> {
    let mut mult = vec![0usize; simples.len()];
    let mut accounted = 0;
    for layer in m.radical_layers()? {
        let mut layer_dim = 0;
        for (i, s) in simples.iter().enumerate() {
            let (d, _) = hom_space(s, &layer)?;
            mult[i] += d;
            layer_dim += d * s.dim();
        }
        if layer_dim != layer.dim() {
            return Err(Error::NonSplit(format!(
                "radical layer of dimension {} is not covered by the given simples",
                layer.dim()
            )));
        }
        accounted += layer_dim;
    }
    debug_assert_eq!(accounted, m.dim());
    Ok(mult)
}

/// `[M : S_i] = rank ρ_M(e_i)` for primitive idempotents `e_i` with split tops.
pub fn multiplicities_by_idempotents(m: &AlgebraModule, idempotents: &[Vector]) -> Vec<usize> {
    idempotents.iter().map(|e| m.act(e).rank()).collect()
}

impl StructureAlgebra {
    pub fn into_ref(self) -> AlgebraRef {
        Arc::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::truncated_polynomial;
    use crate::field::Field;
    use crate::group::FiniteGroup;

    #[test]
    fn regular_s3_multiplicities() {
        let a = FiniteGroup::symmetric3().group_algebra(&Field::rationals()).unwrap().into_ref();
        let dec = a.decompose().unwrap();
        let simples = simple_modules(&a, &dec).unwrap();
        let mut dims: Vec<usize> = simples.iter().map(|s| s.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2]);
        let reg = AlgebraModule::regular(&a);
        let mult = composition_multiplicities(&reg, &simples).unwrap();
        let oracle = multiplicities_by_idempotents(&reg, &dec.representative_idempotents());
        assert_eq!(mult, oracle);
        let mut sorted = mult.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 2]);
        for (s, m) in simples.iter().zip(&mult) {
            assert_eq!(s.dim(), *m);
        }
    }

    #[test]
    fn dual_numbers_char2() {
        let a = truncated_polynomial(&Field::prime(2), 2).into_ref();
        let dec = a.decompose().unwrap();
        let simples = simple_modules(&a, &dec).unwrap();
        let reg = AlgebraModule::regular(&a);
        assert_eq!(composition_multiplicities(&reg, &simples).unwrap(), vec![2]);
        assert_eq!(reg.radical_layers().unwrap().len(), 2);
        let (d, _) = hom_space(&reg, &reg).unwrap();
        assert_eq!(d, 2);
    }

    #[test]
    fn hom_between_simples_is_schur() {
        let a = FiniteGroup::symmetric3().group_algebra(&Field::rationals()).unwrap().into_ref();
        let dec = a.decompose().unwrap();
        let simples = simple_modules(&a, &dec).unwrap();
        for (i, s) in simples.iter().enumerate() {
            for (j, t) in simples.iter().enumerate() {
                let (d, basis) = hom_space(s, t).unwrap();
                assert_eq!(d, usize::from(i == j));
                for m in basis {
                    for g in 0..a.dim() {
                        assert_eq!(m.mul(s.action(g)), t.action(g).mul(&m));
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_action_rejected() {
        let a = truncated_polynomial(&Field::rationals(), 2).into_ref();
        let f = a.field().clone();
        // x acting as the identity violates x² = 0
        let bad = vec![Matrix::identity(&f, 1), Matrix::identity(&f, 1)];
        assert!(matches!(AlgebraModule::new(&a, bad), Err(Error::Invalid(_))));
        let short = vec![Matrix::identity(&f, 1)];
        assert!(matches!(AlgebraModule::new(&a, short), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn direct_sum_adds_multiplicities() {
        let a = FiniteGroup::cyclic(2).group_algebra(&Field::rationals()).unwrap().into_ref();
        let dec = a.decompose().unwrap();
        let simples = simple_modules(&a, &dec).unwrap();
        let m = simples[0].direct_sum(&simples[0]).unwrap().direct_sum(&simples[1]).unwrap();
        m.validate().unwrap();
        assert_eq!(composition_multiplicities(&m, &simples).unwrap(), vec![2, 1]);
    }
}
