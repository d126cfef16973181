//! Hopf algebras with quasitriangular and ribbon data, integrals, class
//! functions, the Drinfeld and Radford maps and the transformation `𝕊 = Ψ∘𝔻`.

use std::collections::BTreeMap;

use crate::algebra::AlgebraRef;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{dot, is_zero_vector, unit_vector, vec_add, vec_axpy, vec_scale, Matrix, Vector};
use crate::module::{composition_multiplicities, hom_space, AlgebraModule};

/// Sparse element of `A^{⊗k}` keyed by basis index tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    pub terms: BTreeMap<Vec<usize>, FieldElement>,
}

impl Tensor {
    pub fn new() -> Tensor {
        Tensor::default()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(x) => {
                x.add_assign(c);
                if x.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Tensor {
        let mut out = Tensor::new();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), &(c * x));
        }
        out
    }

    /// Simple tensor `v_1 ⊗ … ⊗ v_k` of dense vectors.
    pub fn simple(vs: &[&[FieldElement]]) -> Tensor {
        let mut out = Tensor::new();
        let Some(first) = vs.first() else {
            return out;
        };
        let mut partial: Vec<(Vec<usize>, FieldElement)> = vec![];
        for (i, c) in first.iter().enumerate() {
            if !c.is_zero() {
                partial.push((vec![i], c.clone()));
            }
        }
        for v in &vs[1..] {
            let mut next = vec![];
            for (idx, c) in &partial {
                for (i, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let mut k = idx.clone();
                        k.push(i);
                        next.push((k, c * x));
                    }
                }
            }
            partial = next;
        }
        for (k, c) in partial {
            out.add_term(k, &c);
        }
        out
    }

    /// Leg-wise product in `A^{⊗k}`.
    pub fn mul(&self, algebra: &AlgebraRef, other: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut partial: Vec<(Vec<usize>, FieldElement)> = vec![(vec![], x * y)];
                for (i, j) in a.iter().zip(b) {
                    let prod = algebra.basis_product(*i, *j);
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (idx, c) in &partial {
                        for (k, d) in prod {
                            let mut nk = idx.clone();
                            nk.push(*k);
                            next.push((nk, c * d));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, &c);
                }
            }
        }
        out
    }

    /// Places the legs of `self` at `positions` in a tensor of order `order`,
    /// filling the other legs with `unit`.
    pub fn embed(&self, positions: &[usize], order: usize, unit: &[FieldElement]) -> Tensor {
        let unit_terms: Vec<(usize, &FieldElement)> = unit.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut out = Tensor::new();
        for (idx, c) in &self.terms {
            let mut partial: Vec<(Vec<usize>, FieldElement)> = vec![(vec![0; order], c.clone())];
            for slot in 0..order {
                if let Some(p) = positions.iter().position(|&q| q == slot) {
                    for (k, _) in partial.iter_mut() {
                        k[slot] = idx[p];
                    }
                } else {
                    let mut next = vec![];
                    for (k, x) in &partial {
                        for (u, cu) in &unit_terms {
                            let mut nk = k.clone();
                            nk[slot] = *u;
                            next.push((nk, x * *cu));
                        }
                    }
                    partial = next;
                }
            }
            for (k, x) in partial {
                out.add_term(k, &x);
            }
        }
        out
    }

    /// Applies `f` (basis index → dense vector or tensor) to one leg.
    pub fn map_leg(&self, leg: usize, mut f: impl FnMut(usize) -> Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (idx, c) in &self.terms {
            for (sub, d) in &f(idx[leg]).terms {
                let mut k = idx[..leg].to_vec();
                k.extend_from_slice(sub);
                k.extend_from_slice(&idx[leg + 1..]);
                out.add_term(k, &(c * d));
            }
        }
        out
    }

    /// Swaps the two legs of an order-2 tensor.
    pub fn flip(&self) -> Tensor {
        let mut out = Tensor::new();
        for (idx, c) in &self.terms {
            out.add_term(vec![idx[1], idx[0]], c);
        }
        out
    }

    /// Contracts an order-2 tensor's first leg with a covector: `(f ⊗ id)(t)`.
    pub fn contract_first(&self, f: &[FieldElement], n: usize, field: &Field) -> Vector {
        let mut out = vec![field.zero(); n];
        for (idx, c) in &self.terms {
            out[idx[1]].add_mul(c, &f[idx[0]]);
        }
        out
    }

    /// Coefficient matrix of an order-2 tensor, entry `(i, j)` for `e_i ⊗ e_j`.
    pub fn to_matrix(&self, n: usize, field: &Field) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for (idx, c) in &self.terms {
            m[(idx[0], idx[1])].add_assign(c);
        }
        m
    }
}

fn vector_tensor(v: &[FieldElement]) -> Tensor {
    Tensor::simple(&[v])
}

/// `(A, Δ, ε, S)` with all Hopf axioms verified at construction.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    algebra: AlgebraRef,
    coproduct: Vec<Tensor>,
    counit: Vector,
    antipode: Matrix,
}

impl HopfAlgebra {
    /// `coproduct` entries `(i, j, k, c)` mean `Δ(e_i) ∋ c e_j ⊗ e_k`; column `i`
    /// of `antipode` is `S(e_i)`.
    pub fn new(
        algebra: AlgebraRef,
        coproduct: impl IntoIterator<Item = (usize, usize, usize, FieldElement)>,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        let h = HopfAlgebra::new_unchecked(algebra, coproduct, counit, antipode)?;
        h.validate()?;
        Ok(h)
    }

    pub fn new_unchecked(
        algebra: AlgebraRef,
        coproduct: impl IntoIterator<Item = (usize, usize, usize, FieldElement)>,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        let n = algebra.dim();
        let mut delta = vec![Tensor::new(); n];
        for (i, j, k, c) in coproduct {
            if i >= n || j >= n || k >= n {
                return Err(Error::Invalid(format!("coproduct index ({i},{j},{k}) out of range")));
            }
            delta[i].add_term(vec![j, k], &c);
        }
        if counit.len() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch("counit or antipode has the wrong size".into()));
        }
        Ok(HopfAlgebra { algebra, coproduct: delta, counit, antipode })
    }

    pub fn validate(&self) -> Result<()> {
        let alg = &self.algebra;
        let n = alg.dim();
        let one = alg.one();
        for i in 0..n {
            let d = &self.coproduct[i];
            // coassociativity
            let l = d.map_leg(0, |j| self.coproduct[j].clone());
            let r = d.map_leg(1, |k| self.coproduct[k].clone());
            if l != r {
                return Err(Error::Invalid(format!("coassociativity fails on basis element {i}")));
            }
            // counit
            let mut left = alg.zero();
            let mut right = alg.zero();
            for (idx, c) in &d.terms {
                left[idx[1]].add_mul(c, &self.counit[idx[0]]);
                right[idx[0]].add_mul(c, &self.counit[idx[1]]);
            }
            if left != alg.basis(i) || right != alg.basis(i) {
                return Err(Error::Invalid(format!("counit axiom fails on basis element {i}")));
            }
            // antipode
            let target = vec_scale(&self.counit[i], &one);
            let mut sl = alg.zero();
            let mut sr = alg.zero();
            for (idx, c) in &d.terms {
                let s0 = self.antipode.column(idx[0]);
                let s1 = self.antipode.column(idx[1]);
                vec_axpy(&mut sl, c, &alg.mul(&s0, &alg.basis(idx[1])));
                vec_axpy(&mut sr, c, &alg.mul(&alg.basis(idx[0]), &s1));
            }
            if sl != target || sr != target {
                return Err(Error::Invalid(format!("antipode axiom fails on basis element {i}")));
            }
        }
        // Δ and ε are unital algebra maps
        if self.coproduct_of(&one) != Tensor::simple(&[&one, &one]) {
            return Err(Error::Invalid("coproduct is not unital".into()));
        }
        if !dot(&self.counit, &one).is_one() {
            return Err(Error::Invalid("counit is not unital".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let prod = alg.basis_product_dense(i, j);
                let lhs = self.coproduct_of(&prod);
                let rhs = self.coproduct[i].mul(alg, &self.coproduct[j]);
                if lhs != rhs {
                    return Err(Error::Invalid(format!("coproduct is not multiplicative on ({i},{j})")));
                }
                if dot(&self.counit, &prod) != &self.counit[i] * &self.counit[j] {
                    return Err(Error::Invalid(format!("counit is not multiplicative on ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn counit(&self) -> &[FieldElement] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn coproduct_basis(&self, i: usize) -> &Tensor {
        &self.coproduct[i]
    }

    pub fn coproduct_of(&self, a: &[FieldElement]) -> Tensor {
        let mut out = Tensor::new();
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.coproduct[i].scale(c));
            }
        }
        out
    }

    /// `Δ` applied to one leg of a tensor.
    pub fn coproduct_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, |i| self.coproduct[i].clone())
    }

    pub fn antipode_of(&self, a: &[FieldElement]) -> Vector {
        self.antipode.mul_vec(a)
    }

    /// `S` applied to one leg of a tensor.
    pub fn antipode_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, |i| vector_tensor(&self.antipode.column(i)))
    }

    pub fn involutive(&self) -> bool {
        self.antipode.mul(&self.antipode).is_identity()
    }

    /// Convolution `(f·g)(a) = Σ f(a') g(a'')` of covectors.
    pub fn convolve(&self, f: &[FieldElement], g: &[FieldElement]) -> Vector {
        self.coproduct
            .iter()
            .map(|d| {
                let mut acc = self.field().zero();
                for (idx, c) in &d.terms {
                    acc.add_mul(c, &(&f[idx[0]] * &g[idx[1]]));
                }
                acc
            })
            .collect()
    }

    /// Two-sided integral `Λ` with `aΛ = ε(a)Λ = Λa`, normalized by its first nonzero coordinate.
    pub fn integral(&self) -> Result<Vector> {
        let alg = &self.algebra;
        let n = alg.dim();
        let f = alg.field();
        let mut rows: Vec<Vector> = Vec::new();
        for i in 0..n {
            let l = alg.left_mult_matrix(&alg.basis(i)).sub(&Matrix::identity(f, n).scale(&self.counit[i]));
            rows.extend(l.row_vectors());
        }
        let k = Matrix::from_rows(f, rows)?.kernel_basis();
        if k.cols() != 1 {
            return Err(Error::Invalid(format!("space of left integrals has dimension {}", k.cols())));
        }
        let lam = normalize_first(k.column(0));
        for i in 0..n {
            let e = alg.basis(i);
            if alg.mul(&lam, &e) != vec_scale(&self.counit[i], &lam) {
                return Err(Error::Invalid("left integral is not a right integral".into()));
            }
        }
        Ok(lam)
    }

    /// Cointegral `λ` with `(id ⊗ λ)Δ(a) = λ(a)·1`, normalized by its first nonzero coordinate.
    pub fn cointegral(&self) -> Result<Vector> {
        let alg = &self.algebra;
        let n = alg.dim();
        let f = alg.field();
        let one = alg.one();
        let mut rows: Vec<Vector> = Vec::new();
        for a in 0..n {
            let mut block = vec![vec![f.zero(); n]; n];
            for (idx, c) in &self.coproduct[a].terms {
                block[idx[0]][idx[1]].add_assign(c);
            }
            for (j, mut row) in block.into_iter().enumerate() {
                row[a] = &row[a] - &one[j];
                rows.push(row);
            }
        }
        let k = Matrix::from_rows(f, rows)?.kernel_basis();
        if k.cols() != 1 {
            return Err(Error::Invalid(format!("space of cointegrals has dimension {}", k.cols())));
        }
        Ok(normalize_first(k.column(0)))
    }

    /// Basis of `{f : f(ab) = f(b S²(a))}`.
    pub fn class_functions(&self) -> Result<ClassFunctionSpace> {
        let alg = &self.algebra;
        let n = alg.dim();
        let f = alg.field();
        let s2 = self.antipode.mul(&self.antipode);
        let mut rows = Vec::new();
        for a in 0..n {
            let sa = s2.column(a);
            for b in 0..n {
                let row: Vector =
                    alg.basis_product_dense(a, b).iter().zip(&alg.mul(&alg.basis(b), &sa)).map(|(x, y)| x - y).collect();
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
        let basis = if rows.is_empty() {
            (0..n).map(|i| unit_vector(f, n, i)).collect()
        } else {
            Matrix::from_rows(f, rows)?.kernel_basis().columns()
        };
        ClassFunctionSpace::new(f, n, basis)
    }

    /// Character `a ↦ tr ρ_M(a)`; needs `S² = id`.
    pub fn internal_character(&self, m: &AlgebraModule) -> Result<Vector> {
        if !self.involutive() {
            return Err(Error::Unsupported("internal characters need S² = id".into()));
        }
        Ok(m.actions().iter().map(|a| a.trace()).collect())
    }

    /// `M ⊗ N` with `a` acting by `Σ ρ_M(a') ⊗ ρ_N(a'')`.
    pub fn tensor_modules(&self, m: &AlgebraModule, n: &AlgebraModule) -> Result<AlgebraModule> {
        let f = self.field();
        let d = m.dim() * n.dim();
        let action = self
            .coproduct
            .iter()
            .map(|t| {
                let mut acc = Matrix::zeros(f, d, d);
                for (idx, c) in &t.terms {
                    acc.axpy(c, &m.action(idx[0]).kron(n.action(idx[1])));
                }
                acc
            })
            .collect();
        AlgebraModule::new(&self.algebra, action)
    }

    /// The trivial module `k` with `a` acting by `ε(a)`.
    pub fn trivial_module(&self) -> Result<AlgebraModule> {
        let f = self.field();
        let action = self.counit.iter().map(|c| Matrix::from_rows(f, vec![vec![c.clone()]]).expect("1x1")).collect();
        AlgebraModule::new(&self.algebra, action)
    }
}

fn normalize_first(v: Vector) -> Vector {
    let pivot = v.iter().find(|x| !x.is_zero()).and_then(|x| x.inv()).expect("nonzero kernel vector");
    vec_scale(&pivot, &v)
}

/// Subspace of `A*` given by a basis of covectors.
#[derive(Clone, Debug)]
pub struct ClassFunctionSpace {
    pub basis: Vec<Vector>,
    matrix: Matrix,
}

impl ClassFunctionSpace {
    fn new(field: &Field, n: usize, basis: Vec<Vector>) -> Result<ClassFunctionSpace> {
        let matrix = Matrix::from_columns(field, n, &basis);
        Ok(ClassFunctionSpace { basis, matrix })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, f: &[FieldElement]) -> Result<bool> {
        Ok(self.matrix.solve(f)?.is_some())
    }

    /// Coordinates of a class function in the basis.
    pub fn coords(&self, f: &[FieldElement]) -> Result<Vector> {
        self.matrix.solve(f)?.ok_or_else(|| Error::Invalid("covector is not a class function".into()))
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// `R ∈ A ⊗ A` and a ribbon element `v`, validated against a Hopf algebra.
#[derive(Clone, Debug)]
pub struct QuasiTriangular {
    pub r: Tensor,
    pub ribbon: Vector,
}

impl QuasiTriangular {
    pub fn new(h: &HopfAlgebra, r: Tensor, ribbon: Vector) -> Result<QuasiTriangular> {
        let qt = QuasiTriangular { r, ribbon };
        qt.validate(h)?;
        Ok(qt)
    }

    /// `R⁻¹ = (S ⊗ id)R`, `Δ^op R = R Δ`, both hexagons, and `v` central, invertible, `ε(v) = 1`.
    pub fn validate(&self, h: &HopfAlgebra) -> Result<()> {
        let alg = h.algebra();
        let n = alg.dim();
        let one = alg.one();
        let r = &self.r;
        if r.terms.keys().any(|k| k.len() != 2 || k.iter().any(|&i| i >= n)) {
            return Err(Error::DimensionMismatch("R must be an element of A ⊗ A".into()));
        }
        let one2 = Tensor::simple(&[&one, &one]);
        let rinv = h.antipode_leg(r, 0);
        if r.mul(alg, &rinv) != one2 || rinv.mul(alg, r) != one2 {
            return Err(Error::Invalid("R is not invertible with inverse (S ⊗ id)R".into()));
        }
        for a in 0..n {
            let d = h.coproduct_basis(a);
            if d.flip().mul(alg, r) != r.mul(alg, d) {
                return Err(Error::Invalid(format!("R does not intertwine Δ and Δ^op on basis element {a}")));
            }
        }
        let r13 = r.embed(&[0, 2], 3, &one);
        let r23 = r.embed(&[1, 2], 3, &one);
        let r12 = r.embed(&[0, 1], 3, &one);
        if h.coproduct_leg(r, 0) != r13.mul(alg, &r23) {
            return Err(Error::Invalid("hexagon (Δ ⊗ id)R = R13 R23 fails".into()));
        }
        if h.coproduct_leg(r, 1) != r13.mul(alg, &r12) {
            return Err(Error::Invalid("hexagon (id ⊗ Δ)R = R13 R12 fails".into()));
        }
        let v = &self.ribbon;
        if v.len() != n || !alg.is_central(v) {
            return Err(Error::Invalid("ribbon element is not central".into()));
        }
        if alg.left_mult_matrix(v).solve(&one)?.is_none() {
            return Err(Error::Invalid("ribbon element is not invertible".into()));
        }
        if !dot(h.counit(), v).is_one() {
            return Err(Error::Invalid("ribbon element has counit different from 1".into()));
        }
        Ok(())
    }

    /// `R12 R13 R23 = R23 R13 R12`.
    pub fn yang_baxter_holds(&self, h: &HopfAlgebra) -> bool {
        let alg = h.algebra();
        let one = alg.one();
        let r12 = self.r.embed(&[0, 1], 3, &one);
        let r13 = self.r.embed(&[0, 2], 3, &one);
        let r23 = self.r.embed(&[1, 2], 3, &one);
        r12.mul(alg, &r13).mul(alg, &r23) == r23.mul(alg, &r13).mul(alg, &r12)
    }

    /// Drinfeld element `u = Σ S(r'') r'`.
    pub fn drinfeld_element(&self, h: &HopfAlgebra) -> Vector {
        let alg = h.algebra();
        let mut u = alg.zero();
        for (idx, c) in &self.r.terms {
            vec_axpy(&mut u, c, &alg.mul(&h.antipode.column(idx[1]), &alg.basis(idx[0])));
        }
        u
    }

    /// `v² = u S(u)`, `S(v) = v` and `Δ(v) = (R21 R)⁻¹ (v ⊗ v)`.
    pub fn check_ribbon_identities(&self, h: &HopfAlgebra) -> Result<()> {
        let alg = h.algebra();
        let v = &self.ribbon;
        let u = self.drinfeld_element(h);
        if alg.mul(v, v) != alg.mul(&u, &h.antipode_of(&u)) {
            return Err(Error::Invalid("v² differs from u S(u)".into()));
        }
        if h.antipode_of(v) != *v {
            return Err(Error::Invalid("S(v) differs from v".into()));
        }
        let m = self.monodromy(h);
        if m.mul(alg, &h.coproduct_of(v)) != Tensor::simple(&[v, v]) {
            return Err(Error::Invalid("Δ(v) differs from (R21 R)⁻¹ (v ⊗ v)".into()));
        }
        Ok(())
    }

    /// The monodromy `R21 R`.
    pub fn monodromy(&self, h: &HopfAlgebra) -> Tensor {
        self.r.flip().mul(h.algebra(), &self.r)
    }

    /// Matrix of `𝔻: A* → A`, `𝔻(f) = (f ⊗ id)(R21 R)`.
    pub fn drinfeld_matrix(&self, h: &HopfAlgebra) -> Matrix {
        let n = h.dim();
        self.monodromy(h).to_matrix(n, h.field()).transpose()
    }

    pub fn drinfeld_map(&self, h: &HopfAlgebra, f: &[FieldElement]) -> Vector {
        self.monodromy(h).contract_first(f, h.dim(), h.field())
    }
}

/// Ways of turning the cointegral into a map `Ψ: A → A*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadfordConvention {
    /// `Ψ(a)(b) = λ(S(a) b)`
    AntipodeLeft,
    /// `Ψ(a)(b) = λ(b S(a))`
    AntipodeRight,
    /// `Ψ(a)(b) = λ(a b)`
    PlainLeft,
    /// `Ψ(a)(b) = λ(b a)`
    PlainRight,
}

impl RadfordConvention {
    pub const ALL: [RadfordConvention; 4] = [
        RadfordConvention::AntipodeLeft,
        RadfordConvention::AntipodeRight,
        RadfordConvention::PlainLeft,
        RadfordConvention::PlainRight,
    ];
}

/// Convention used throughout: the only one for which `𝕊` agrees with the
/// geometric `S` action on commuting pairs for `D(Z2)` and `D(Z3)`.
pub const RADFORD_CONVENTION: RadfordConvention = RadfordConvention::AntipodeLeft;

/// Matrix of `Ψ: A → A*` (column `a` is the covector `Ψ(e_a)`); fails if singular.
pub fn radford_matrix(h: &HopfAlgebra, conv: RadfordConvention) -> Result<Matrix> {
    let alg = h.algebra();
    let n = alg.dim();
    let lam = h.cointegral()?;
    let cols: Vec<Vector> = (0..n)
        .map(|a| {
            let ea = alg.basis(a);
            let sa = h.antipode_of(&ea);
            (0..n)
                .map(|b| {
                    let eb = alg.basis(b);
                    let x = match conv {
                        RadfordConvention::AntipodeLeft => alg.mul(&sa, &eb),
                        RadfordConvention::AntipodeRight => alg.mul(&eb, &sa),
                        RadfordConvention::PlainLeft => alg.mul(&ea, &eb),
                        RadfordConvention::PlainRight => alg.mul(&eb, &ea),
                    };
                    dot(&lam, &x)
                })
                .collect()
        })
        .collect();
    let m = Matrix::from_columns(alg.field(), n, &cols);
    let rank = m.rank();
    if rank < n {
        return Err(Error::Singular(format!("Radford map has rank {rank} < {n}")));
    }
    Ok(m)
}

/// `𝕊 = Ψ∘𝔻` on `A*` together with its restriction to class functions.
#[derive(Clone, Debug)]
pub struct STransform {
    pub space: ClassFunctionSpace,
    /// Matrix on class-function coordinates.
    pub matrix: Matrix,
    /// Matrix on all of `A*`.
    pub full: Matrix,
}

pub fn s_transform(h: &HopfAlgebra, qt: &QuasiTriangular, conv: RadfordConvention) -> Result<STransform> {
    let space = h.class_functions()?;
    let d = qt.drinfeld_matrix(h);
    let restricted = d.mul(space.basis_matrix());
    let rank = restricted.rank();
    if rank < space.dim() {
        return Err(Error::Singular(format!(
            "Drinfeld map has rank {rank} on the {}-dimensional class functions",
            space.dim()
        )));
    }
    let psi = radford_matrix(h, conv)?;
    let full = psi.mul(&d);
    let cols = space
        .basis
        .iter()
        .map(|f| space.coords(&full.mul_vec(f)))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Invalid("𝕊 does not preserve class functions".into()))?;
    let matrix = Matrix::from_columns(h.field(), space.dim(), &cols);
    Ok(STransform { space, matrix, full })
}

/// Both sides of `𝔖⁻¹(𝔖φ_i · 𝔖φ_j) = Σ_l N_ij^l φ_l` for one pair.
#[derive(Clone, Debug)]
pub struct FusionPairCheck {
    pub i: usize,
    pub j: usize,
    pub lhs: Vector,
    pub rhs: Vector,
    pub multiplicities: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CorgrvReport {
    pub pairs: Vec<FusionPairCheck>,
}

impl CorgrvReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.lhs == p.rhs)
    }
}

/// Multiplicities `[X_i ⊗ X_j : X_l]`: intertwiner dimensions in characteristic 0
/// (semisimple case), composition multiplicities otherwise.
pub fn fusion_multiplicities(h: &HopfAlgebra, simples: &[AlgebraModule]) -> Result<Vec<Vec<Vec<usize>>>> {
    let k = simples.len();
    let mut out = vec![vec![vec![0; k]; k]; k];
    for i in 0..k {
        for j in 0..k {
            let t = h.tensor_modules(&simples[i], &simples[j])?;
            out[i][j] = if h.field().characteristic() == 0 {
                let mut m = Vec::with_capacity(k);
                for s in simples {
                    let (d, _) = hom_space(s, &t)?;
                    m.push(d);
                }
                m
            } else {
                composition_multiplicities(&t, simples)?
            };
        }
    }
    Ok(out)
}

/// Checks the linearized Grothendieck ring identity with `φ_i = Ψ⁻¹(ch X_i)`
/// and `𝔖 = 𝔻∘Ψ` for all ordered pairs of the given simples.
pub fn corgrv_check(
    h: &HopfAlgebra,
    qt: &QuasiTriangular,
    simples: &[AlgebraModule],
    conv: RadfordConvention,
) -> Result<CorgrvReport> {
    let alg = h.algebra();
    let psi = radford_matrix(h, conv)?;
    let psi_inv = psi.inverse().ok_or_else(|| Error::Singular("Radford map".into()))?;
    let frak = qt.drinfeld_matrix(h).mul(&psi);
    let frak_inv = frak
        .inverse()
        .ok_or_else(|| Error::Singular("𝔻∘Ψ is not invertible; the braiding is degenerate".into()))?;
    let chars = simples.iter().map(|m| h.internal_character(m)).collect::<Result<Vec<_>>>()?;
    let phis: Vec<Vector> = chars.iter().map(|c| psi_inv.mul_vec(c)).collect();
    let images: Vec<Vector> = phis.iter().map(|p| frak.mul_vec(p)).collect();
    let n_tensor = fusion_multiplicities(h, simples)?;
    let mut pairs = Vec::new();
    for i in 0..simples.len() {
        for j in 0..simples.len() {
            let lhs = frak_inv.mul_vec(&alg.mul(&images[i], &images[j]));
            let mut rhs = alg.zero();
            for (l, &m) in n_tensor[i][j].iter().enumerate() {
                if m > 0 {
                    rhs = vec_add(&rhs, &vec_scale(&h.field().from_u64(m as u64), &phis[l]));
                }
            }
            pairs.push(FusionPairCheck { i, j, lhs, rhs, multiplicities: n_tensor[i][j].clone() });
        }
    }
    Ok(CorgrvReport { pairs })
}
