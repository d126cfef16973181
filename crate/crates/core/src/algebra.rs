//! Finite-dimensional associative unital algebras given by structure constants.

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{
    is_zero_vector, quotient_representatives, span_basis, unit_vector, vec_axpy, vec_scale, vec_sub, zero_vector,
    EchelonBasis, Matrix, Poly, Vector,
};
use crate::roots::roots_in_field;

/// `e_i · e_j = Σ_k c[i][j][k] e_k`, stored sparsely per pair `(i, j)`.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    field: Field,
    dim: usize,
    products: Vec<Vec<(usize, FieldElement)>>,
    unit: Vector,
    generators: OnceLock<Vec<Vector>>,
    radical: OnceLock<Result<Vec<Vector>>>,
}

impl StructureAlgebra {
    /// Builds and validates an algebra from sparse structure constants `(i, j, k, c)`.
    /// Repeated entries for the same `(i, j, k)` are summed.
    pub fn new(
        field: &Field,
        dim: usize,
        constants: impl IntoIterator<Item = (usize, usize, usize, FieldElement)>,
        unit: Vector,
    ) -> Result<StructureAlgebra> {
        let a = Self::new_unchecked(field, dim, constants, unit)?;
        a.validate()?;
        Ok(a)
    }

    /// Builds without the associativity and unit checks; index bounds are still checked.
    pub fn new_unchecked(
        field: &Field,
        dim: usize,
        constants: impl IntoIterator<Item = (usize, usize, usize, FieldElement)>,
        unit: Vector,
    ) -> Result<StructureAlgebra> {
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("unit has length {} for dimension {dim}", unit.len())));
        }
        let mut products: Vec<Vec<(usize, FieldElement)>> = vec![vec![]; dim * dim];
        let mut scratch: std::collections::BTreeMap<(usize, usize), FieldElement> = Default::default();
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Invalid(format!("structure constant index ({i},{j},{k}) out of range")));
            }
            if c.field() != *field {
                return Err(Error::Invalid("structure constant over the wrong field".into()));
            }
            let e = scratch.entry((i * dim + j, k)).or_insert_with(|| field.zero());
            e.add_assign(&c);
        }
        for ((ij, k), c) in scratch {
            if !c.is_zero() {
                products[ij].push((k, c));
            }
        }
        Ok(StructureAlgebra {
            field: field.clone(),
            dim,
            products,
            unit,
            generators: OnceLock::new(),
            radical: OnceLock::new(),
        })
    }

    /// Builds from a function giving `e_i · e_j` as a dense vector.
    pub fn from_products(
        field: &Field,
        dim: usize,
        mut prod: impl FnMut(usize, usize) -> Vector,
        unit: Vector,
    ) -> Result<StructureAlgebra> {
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in prod(i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        StructureAlgebra::new(field, dim, entries, unit)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // (e_i e_j) e_k against e_i (e_j e_k), both sparse
                    let mut lhs = self.zero();
                    for (m, c) in self.basis_product(i, j) {
                        for (l, d) in self.basis_product(*m, k) {
                            lhs[*l].add_mul(c, d);
                        }
                    }
                    let mut rhs = self.zero();
                    for (m, c) in self.basis_product(j, k) {
                        for (l, d) in self.basis_product(i, *m) {
                            rhs[*l].add_mul(c, d);
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::Invalid(format!("associativity fails on basis triple ({i},{j},{k})")));
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.basis(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::Invalid(format!("unit axiom fails on basis element {i}")));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> Vector {
        self.unit.clone()
    }

    pub fn zero(&self) -> Vector {
        zero_vector(&self.field, self.dim)
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(&self.field, self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, FieldElement)] {
        &self.products[i * self.dim + j]
    }

    pub fn basis_product_dense(&self, i: usize, j: usize) -> Vector {
        let mut v = self.zero();
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> FieldElement {
        self.basis_product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Sparse list of all nonzero structure constants.
    pub fn constants(&self) -> Vec<(usize, usize, usize, FieldElement)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[FieldElement], b: &[FieldElement]) -> Vector {
        let mut out = self.zero();
        let nz_b: Vec<usize> = (0..b.len()).filter(|&j| !b[j].is_zero()).collect();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &j in &nz_b {
                let xy = x * &b[j];
                for (k, c) in self.basis_product(i, j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    pub fn mul3(&self, a: &[FieldElement], b: &[FieldElement], c: &[FieldElement]) -> Vector {
        self.mul(&self.mul(a, b), c)
    }

    pub fn pow(&self, a: &[FieldElement], k: u64) -> Vector {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &[FieldElement]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &[FieldElement]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_idempotent(&self, e: &[FieldElement]) -> bool {
        self.mul(e, e) == e
    }

    pub fn is_central(&self, z: &[FieldElement]) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis(i);
            self.mul(z, &b) == self.mul(&b, z)
        })
    }

    pub fn tensor(&self, other: &StructureAlgebra) -> Result<StructureAlgebra> {
        if self.field != other.field {
            return Err(Error::Invalid("tensor product of algebras over different fields".into()));
        }
        let m = other.dim;
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    for a in 0..m {
                        for b in 0..m {
                            for (l, d) in other.basis_product(a, b) {
                                entries.push((i * m + a, j * m + b, k * m + l, c * d));
                            }
                        }
                    }
                }
            }
        }
        let mut unit = zero_vector(&self.field, self.dim * m);
        for i in 0..self.dim {
            for a in 0..m {
                unit[i * m + a] = &self.unit[i] * &other.unit[a];
            }
        }
        StructureAlgebra::new(&self.field, self.dim * m, entries, unit)
    }

    /// Basis of the center, computed as the kernel of all commutators with basis elements.
    pub fn center(&self) -> Vec<Vector> {
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            // column z ↦ z e_i - e_i z
            let m = self.right_mult_matrix(&self.basis(i)).sub(&self.left_mult_matrix(&self.basis(i)));
            rows.extend(m.row_vectors());
        }
        if rows.is_empty() {
            return vec![];
        }
        Matrix::from_rows(&self.field, rows).expect("square blocks").kernel_basis().columns()
    }

    /// Basis of the commutator subspace `[A, A]`.
    pub fn commutator_subspace(&self) -> Vec<Vector> {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for j in 0..i {
                let c = vec_sub(&self.basis_product_dense(i, j), &self.basis_product_dense(j, i));
                if !is_zero_vector(&c) {
                    vs.push(c);
                }
            }
        }
        span_basis(&self.field, self.dim, &vs)
    }

    /// `[A, A]` together with the projection `A → A/[A, A]`.
    pub fn hh0(&self) -> (Vec<Vector>, Matrix) {
        let comm = self.commutator_subspace();
        let m = Matrix::from_columns(&self.field, self.dim, &comm);
        let (_, proj) = quotient_representatives(&self.field, self.dim, &m);
        (comm, proj)
    }

    /// A small generating set of `A` as a unital algebra, chosen greedily from the basis.
    pub fn generators(&self) -> &[Vector] {
        self.generators.get_or_init(|| {
            let mut gens: Vec<Vector> = Vec::new();
            let mut closure = self.closure(&gens);
            for i in 0..self.dim {
                if closure.len() == self.dim {
                    break;
                }
                let e = self.basis(i);
                if closure.contains(&e) {
                    continue;
                }
                gens.push(e);
                closure = self.closure(&gens);
            }
            gens
        })
    }

    /// Span of all words in the given elements (including the empty word 1).
    fn closure(&self, gens: &[Vector]) -> EchelonBasis {
        let mut span = EchelonBasis::new(&self.field, self.dim);
        let mut queue = vec![self.unit.clone()];
        span.insert(&self.unit);
        while let Some(w) = queue.pop() {
            for g in gens {
                let v = self.mul(&w, g);
                if span.insert(&v) {
                    queue.push(v);
                }
            }
        }
        span
    }

    /// Jacobson radical. Characteristic 0: kernel of the trace form
    /// `(a, b) ↦ tr L_{ab}`. Characteristic p: only for commutative algebras,
    /// as the kernel of a power of the Frobenius map `a ↦ a^p`.
    pub fn radical(&self) -> Result<Vec<Vector>> {
        self.radical.get_or_init(|| self.compute_radical()).clone()
    }

    fn compute_radical(&self) -> Result<Vec<Vector>> {
        let n = self.dim;
        let p = self.field.characteristic();
        if p == 0 {
            let traces: Vec<FieldElement> = (0..n)
                .map(|k| {
                    let mut t = self.field.zero();
                    for j in 0..n {
                        t.add_assign(&self.structure_constant(k, j, j));
                    }
                    t
                })
                .collect();
            let mut form = Matrix::zeros(&self.field, n, n);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = self.field.zero();
                    for (k, c) in self.basis_product(i, j) {
                        acc.add_mul(c, &traces[*k]);
                    }
                    form[(i, j)] = acc;
                }
            }
            return Ok(form.kernel_basis().columns());
        }
        if !self.is_commutative() {
            return Err(Error::Unsupported(format!(
                "radical of a noncommutative algebra in characteristic {p}"
            )));
        }
        let cols: Vec<Vector> = (0..n).map(|i| self.pow(&self.basis(i), p)).collect();
        let frob = Matrix::from_columns(&self.field, n, &cols);
        let mut m = 1u32;
        while (p as u128).pow(m) < n as u128 {
            m += 1;
        }
        Ok(frob.pow(m as u64).kernel_basis().columns())
    }

    /// Complete set of orthogonal primitive idempotents summing to 1.
    pub fn primitive_idempotents(&self) -> Result<Vec<Vector>> {
        let radical = self.radical()?;
        let p = self.field.characteristic();
        if p != 0 && !self.is_commutative() {
            return Err(Error::Unsupported(format!(
                "idempotent lifting for noncommutative algebras in characteristic {p}"
            )));
        }
        let mut out = Vec::new();
        self.split(&self.unit, &radical, &mut out)?;
        Ok(out)
    }

    fn split(&self, e: &Vector, radical: &[Vector], out: &mut Vec<Vector>) -> Result<()> {
        let n = self.dim;
        let images: Vec<Vector> = (0..n).map(|b| self.mul3(e, &self.basis(b), e)).collect();
        let corner = span_basis(&self.field, n, &images);
        let corner_rad: Vec<Vector> = radical.iter().map(|j| self.mul3(e, j, e)).collect();
        let corner_rad = span_basis(&self.field, n, &corner_rad);
        let q = corner.len() - corner_rad.len();
        if q == 1 {
            out.push(e.clone());
            return Ok(());
        }
        if q == 0 {
            return Err(Error::Invalid("split reached a zero idempotent".into()));
        }
        let (_, proj) =
            quotient_representatives(&self.field, n, &Matrix::from_columns(&self.field, n, &corner_rad));
        let rad = {
            let mut b = EchelonBasis::new(&self.field, n);
            for v in &corner_rad {
                b.insert(v);
            }
            b
        };
        let mut last_err = None;
        for x in self.split_candidates(&images, &rad) {
            match self.try_split_with(e, &x, &proj, &rad) {
                Ok(Some(f)) => {
                    let g = vec_sub(e, &f);
                    self.split(&f, radical, out)?;
                    self.split(&g, radical, out)?;
                    return Ok(());
                }
                Ok(None) => {}
                Err(err) => last_err = Some(err),
            }
        }
        Err(last_err.unwrap_or_else(|| {
            Error::NonSplit(format!("corner algebra with semisimple quotient of dimension {q} does not split"))
        }))
    }

    /// Candidate elements of the corner `eAe`: basis images, pairwise sums, then
    /// seeded random small combinations.
    fn split_candidates<'a>(&'a self, images: &'a [Vector], rad: &'a EchelonBasis) -> impl Iterator<Item = Vector> + 'a {
        let useful: Vec<Vector> = images.iter().filter(|v| !rad.contains(v)).cloned().collect();
        let singles = useful.clone().into_iter();
        let u2 = useful.clone();
        let pairs = (0..u2.len()).flat_map(move |i| {
            let u2 = u2.clone();
            (0..i).map(move |j| crate::linalg::vec_add(&u2[i], &u2[j]))
        });
        let field = self.field.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let random = (0..64).map(move |_| {
            let mut acc = zero_vector(&field, images[0].len());
            for v in &useful {
                let c: i64 = rng.gen_range(-2..=2);
                vec_axpy(&mut acc, &field.from_i64(c), v);
            }
            acc
        });
        singles.chain(pairs).chain(random)
    }

    /// Tries to produce a nontrivial idempotent `f ≤ e` from the eigenvalues of `x`.
    fn try_split_with(&self, e: &Vector, x: &Vector, proj: &Matrix, rad: &EchelonBasis) -> Result<Option<Vector>> {
        // minimal polynomial of x̄ in the semisimple quotient of eAe
        let mut powers: Vec<Vector> = vec![e.clone()];
        let mut projected: Vec<Vector> = vec![proj.mul_vec(e)];
        let minpoly = loop {
            let next = self.mul(powers.last().unwrap(), x);
            let pn = proj.mul_vec(&next);
            let m = Matrix::from_columns(&self.field, proj.rows(), &projected);
            if let Some(c) = m.solve(&pn)? {
                let mut coeffs: Vec<FieldElement> = c.iter().map(|v| -v).collect();
                coeffs.push(self.field.one());
                break Poly::new(coeffs);
            }
            powers.push(next);
            projected.push(pn);
        };
        if minpoly.degree() == Some(1) {
            return Ok(None);
        }
        let roots = roots_in_field(&minpoly)?;
        for c in roots {
            let lin = Poly::linear(&c);
            let mut rest = minpoly.clone();
            loop {
                let (qq, r) = rest.divrem(&lin);
                if !r.is_zero() {
                    break;
                }
                rest = qq;
            }
            if rest.degree() == Some(0) {
                continue;
            }
            let mult = minpoly.divrem(&rest).0;
            let (_g, _u, v) = Poly::ext_gcd(&mult, &rest);
            let f = self.eval_in_corner(&v.mul(&rest), x, e);
            if rad.contains(&f) || rad.contains(&vec_sub(e, &f)) {
                continue;
            }
            return self.lift_idempotent(f).map(Some);
        }
        Ok(None)
    }

    fn eval_in_corner(&self, p: &Poly, x: &Vector, e: &Vector) -> Vector {
        let mut acc = self.zero();
        for c in p.coeffs.iter().rev() {
            acc = self.mul(&acc, x);
            vec_axpy(&mut acc, c, e);
        }
        acc
    }

    /// Lifts an idempotent modulo the radical: Newton iteration `f ← 3f² − 2f³`
    /// in characteristic 0, Frobenius powers `f ↦ f^{p^m}` for commutative
    /// algebras in characteristic p.
    fn lift_idempotent(&self, mut f: Vector) -> Result<Vector> {
        let p = self.field.characteristic();
        if p == 0 {
            let three = self.field.from_i64(3);
            let two = self.field.from_i64(2);
            for _ in 0..64 {
                let f2 = self.mul(&f, &f);
                if f2 == f {
                    return Ok(f);
                }
                let f3 = self.mul(&f2, &f);
                f = vec_sub(&vec_scale(&three, &f2), &vec_scale(&two, &f3));
            }
            return Err(Error::Invalid("idempotent lifting did not converge".into()));
        }
        if !self.is_commutative() {
            return Err(Error::Unsupported(format!("idempotent lifting in characteristic {p} needs commutativity")));
        }
        let mut reach = 1u128;
        while reach < self.dim as u128 {
            f = self.pow(&f, p);
            reach *= p as u128;
        }
        f = self.pow(&f, p);
        if !self.is_idempotent(&f) {
            return Err(Error::Invalid("Frobenius lifting did not produce an idempotent".into()));
        }
        Ok(f)
    }

    /// Spanning set reduced to a basis of `a·A·b`.
    pub fn sandwich(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<Vector> {
        let vs: Vec<Vector> = (0..self.dim).map(|k| self.mul3(a, &self.basis(k), b)).collect();
        span_basis(&self.field, self.dim, &vs)
    }

    /// Primitive idempotents, their isomorphism classes, Cartan matrix and blocks.
    pub fn decompose(&self) -> Result<Decomposition> {
        let idempotents = self.primitive_idempotents()?;
        let radical = self.radical()?;
        let mut rad = EchelonBasis::new(&self.field, self.dim);
        for v in &radical {
            rad.insert(v);
        }
        let k = idempotents.len();
        let mut class_of = vec![usize::MAX; k];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..k {
            if class_of[i] != usize::MAX {
                continue;
            }
            class_of[i] = reps.len();
            for j in i + 1..k {
                if class_of[j] == usize::MAX
                    && self.sandwich(&idempotents[i], &idempotents[j]).iter().any(|v| !rad.contains(v))
                {
                    class_of[j] = reps.len();
                }
            }
            reps.push(i);
        }
        let m = reps.len();
        let mut cartan = vec![vec![0usize; m]; m];
        for (a, &i) in reps.iter().enumerate() {
            for (b, &j) in reps.iter().enumerate() {
                cartan[a][b] = self.sandwich(&idempotents[i], &idempotents[j]).len();
            }
        }
        let blocks = BlockPartition::from_cartan(&cartan);
        Ok(Decomposition { idempotents, class_of, representatives: reps, cartan, blocks })
    }

    /// Central idempotent of each block: the sum of the primitive idempotents it contains.
    pub fn block_idempotents(&self, dec: &Decomposition) -> Vec<Vector> {
        dec.blocks
            .classes
            .iter()
            .map(|cls| {
                let mut acc = self.zero();
                for (i, e) in dec.idempotents.iter().enumerate() {
                    if cls.contains(&dec.class_of[i]) {
                        acc = crate::linalg::vec_add(&acc, e);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Output of [`StructureAlgebra::decompose`].
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub idempotents: Vec<Vector>,
    /// PIM isomorphism class of each primitive idempotent.
    pub class_of: Vec<usize>,
    /// One idempotent index per class, in class order.
    pub representatives: Vec<usize>,
    /// `cartan[a][b] = dim e_a A e_b` over class representatives.
    pub cartan: Vec<Vec<usize>>,
    pub blocks: BlockPartition,
}

impl Decomposition {
    pub fn representative_idempotents(&self) -> Vec<Vector> {
        self.representatives.iter().map(|&i| self.idempotents[i].clone()).collect()
    }
}

/// Partition of projective-indecomposable classes into blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub classes: Vec<Vec<usize>>,
}

impl BlockPartition {
    /// Connected components of the graph with an edge `i, j` when `cartan[i][j] ≠ 0` or `cartan[j][i] ≠ 0`.
    pub fn from_cartan(cartan: &[Vec<usize>]) -> BlockPartition {
        let m = cartan.len();
        let mut comp = vec![usize::MAX; m];
        let mut classes = Vec::new();
        for s in 0..m {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![];
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..m {
                    if comp[j] == usize::MAX && (cartan[i][j] != 0 || cartan[j][i] != 0) {
                        comp[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort();
            classes.push(members);
        }
        BlockPartition { classes }
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&i)).expect("index in partition")
    }
}

pub type AlgebraRef = Arc<StructureAlgebra>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{matrix_algebra, truncated_polynomial};
    use crate::group::FiniteGroup;
    use crate::linalg::vec_add;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn rejects_nonassociative_constants() {
        // x·1 = 0 while 1·x = x
        let f = q();
        let entries = vec![(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 1, 0, f.one())];
        let err = StructureAlgebra::new(&f, 2, entries, unit_vector(&f, 2, 0)).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn center_examples() {
        let dual = truncated_polynomial(&q(), 2);
        assert_eq!(dual.center().len(), 2);
        assert_eq!(matrix_algebra(&q(), 2).center().len(), 1);
        let s3 = FiniteGroup::symmetric3().group_algebra(&q()).unwrap();
        let z = s3.center();
        assert_eq!(z.len(), 3);
        // class-sum oracle: each class sum is central and they span the center
        for cls in FiniteGroup::symmetric3().conjugacy_classes() {
            let mut v = s3.zero();
            for g in cls {
                v[g] = q().one();
            }
            assert!(s3.is_central(&v));
        }
    }

    #[test]
    fn hh0_examples() {
        let dual = truncated_polynomial(&q(), 2);
        assert_eq!(dual.hh0().1.rows(), 2);
        let m2 = matrix_algebra(&q(), 2);
        let (comm, proj) = m2.hh0();
        assert_eq!(comm.len(), 3);
        assert_eq!(proj.rows(), 1);
        // trace-zero oracle: E_11 - E_22, E_12, E_21 all die in the quotient
        let mut d = m2.zero();
        d[0] = q().one();
        d[3] = q().from_i64(-1);
        assert!(is_zero_vector(&proj.mul_vec(&d)));
        assert!(is_zero_vector(&proj.mul_vec(&m2.basis(1))));
        assert!(!is_zero_vector(&proj.mul_vec(&m2.basis(0))));
    }

    #[test]
    fn radical_examples() {
        let z3 = FiniteGroup::cyclic(3).group_algebra(&q()).unwrap();
        assert!(z3.radical().unwrap().is_empty());
        let dual = truncated_polynomial(&q(), 2);
        assert_eq!(dual.radical().unwrap(), vec![dual.basis(1)]);
        let f2 = Field::prime(2);
        let dual2 = truncated_polynomial(&f2, 2);
        assert_eq!(dual2.radical().unwrap(), vec![dual2.basis(1)]);
        // F2[Z2] ≅ F2[x]/x² with x = 1 + g
        let g2 = FiniteGroup::cyclic(2).group_algebra(&f2).unwrap();
        assert_eq!(g2.radical().unwrap(), vec![vec![f2.one(), f2.one()]]);
        // noncommutative in characteristic p is refused
        let s3 = FiniteGroup::symmetric3().group_algebra(&Field::prime(5)).unwrap();
        assert!(matches!(s3.radical(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn idempotents_of_function_and_group_algebras() {
        let f2 = Field::prime(2);
        let fun = FiniteGroup::cyclic(2).function_algebra(&f2).unwrap();
        assert_eq!(fun.primitive_idempotents().unwrap(), vec![fun.basis(0), fun.basis(1)]);

        let qz2 = FiniteGroup::cyclic(2).group_algebra(&q()).unwrap();
        let half = q().parse_element("1/2").unwrap();
        let e = qz2.primitive_idempotents().unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.contains(&vec![half.clone(), half.clone()]));
        assert!(e.contains(&vec![half.clone(), -half]));
    }

    fn check_complete_system(a: &StructureAlgebra, es: &[Vector]) {
        let mut sum = a.zero();
        for (i, e) in es.iter().enumerate() {
            assert!(a.is_idempotent(e));
            for (j, f) in es.iter().enumerate() {
                if i != j {
                    assert!(is_zero_vector(&a.mul(e, f)));
                }
            }
            sum = vec_add(&sum, e);
        }
        assert_eq!(sum, a.one());
    }

    #[test]
    fn noncommutative_splitting() {
        let s3 = FiniteGroup::symmetric3().group_algebra(&q()).unwrap();
        let es = s3.primitive_idempotents().unwrap();
        // 1 + 1 + 2 primitive idempotents for simples of dims 1, 1, 2
        assert_eq!(es.len(), 4);
        check_complete_system(&s3, &es);
        let dec = s3.decompose().unwrap();
        assert_eq!(dec.cartan, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(dec.blocks.classes.len(), 3);

        let m3 = matrix_algebra(&Field::cyclotomic(3), 3);
        let es = m3.primitive_idempotents().unwrap();
        assert_eq!(es.len(), 3);
        check_complete_system(&m3, &es);
    }

    #[test]
    fn local_algebras() {
        let f2 = Field::prime(2);
        let dual2 = truncated_polynomial(&f2, 2);
        let dec = dual2.decompose().unwrap();
        assert_eq!(dec.cartan, vec![vec![2]]);
        assert_eq!(dec.blocks.classes, vec![vec![0]]);
        let t3 = truncated_polynomial(&Field::prime(3), 3);
        assert_eq!(t3.decompose().unwrap().cartan, vec![vec![3]]);
    }

    #[test]
    fn split_semisimple_has_identity_cartan() {
        let z4 = FiniteGroup::cyclic(4).group_algebra(&Field::cyclotomic(4)).unwrap();
        let dec = z4.decompose().unwrap();
        assert_eq!(dec.idempotents.len(), 4);
        check_complete_system(&z4, &dec.idempotents);
        for (i, row) in dec.cartan.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                assert_eq!(c, usize::from(i == j));
            }
        }
        assert_eq!(dec.blocks.classes.len(), 4);
    }

    #[test]
    fn nonsplit_quotient_is_reported() {
        // Q[Z3] ≅ Q × Q(ζ3) does not split over Q
        let z3 = FiniteGroup::cyclic(3).group_algebra(&q()).unwrap();
        assert!(matches!(z3.primitive_idempotents(), Err(Error::NonSplit(_))));
    }

    #[test]
    fn generators_generate() {
        let s3 = FiniteGroup::symmetric3().group_algebra(&q()).unwrap();
        let gens = s3.generators().to_vec();
        assert!(gens.len() <= 3);
        assert_eq!(s3.closure(&gens).len(), 6);
    }
}
