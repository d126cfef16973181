//! Hochschild cochains and chains of a structure algebra, stored as dense
//! tables up to a degree bound, with the differential, cup product, partial
//! compositions, circle product, Gerstenhaber bracket and the homotopy `h`.

use std::fmt;

use rand::Rng;

use crate::algebra::AlgebraRef;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{is_zero_vector, span_basis, unit_vector, vec_add, vec_scale, vec_sub, EchelonBasis, Matrix, Subquotient, Vector};

pub const DEFAULT_DEGREE_BOUND: usize = 4;

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

fn parity(x: usize) -> bool {
    x % 2 == 1
}

fn check_bound(requested: usize, bound: usize) -> Result<()> {
    if requested > bound {
        return Err(Error::DegreeOverflow { requested, bound });
    }
    Ok(())
}

/// `p + q - 1`, rejecting the degree `-1` produced by two degree-0 inputs.
fn composite_degree(p: usize, q: usize) -> Result<usize> {
    (p + q).checked_sub(1).ok_or_else(|| Error::Invalid("composition of two degree-0 cochains has degree -1".into()))
}

/// A `p`-cochain `A^{⊗p} → A` as the table of its values on basis tuples,
/// with the tuple `(a_1, …, a_p)` at index `Σ a_j n^{p-j}`.
#[derive(Clone, Debug)]
pub struct Cochain {
    algebra: AlgebraRef,
    degree: usize,
    bound: usize,
    table: Vec<Vector>,
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Cochain) -> bool {
        self.degree == other.degree && self.table == other.table
    }
}

impl Cochain {
    pub fn new(algebra: &AlgebraRef, degree: usize, bound: usize, table: Vec<Vector>) -> Result<Cochain> {
        check_bound(degree, bound)?;
        let n = algebra.dim();
        if table.len() != n.pow(degree as u32) || table.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(format!("cochain table does not match degree {degree}")));
        }
        Ok(Cochain { algebra: algebra.clone(), degree, bound, table })
    }

    pub fn from_fn(
        algebra: &AlgebraRef,
        degree: usize,
        bound: usize,
        mut f: impl FnMut(&[usize]) -> Vector,
    ) -> Result<Cochain> {
        check_bound(degree, bound)?;
        let n = algebra.dim();
        let mut tuple = vec![0; degree];
        let table = (0..n.pow(degree as u32))
            .map(|idx| {
                decode(idx, n, &mut tuple);
                f(&tuple)
            })
            .collect();
        Cochain::new(algebra, degree, bound, table)
    }

    pub fn zero(algebra: &AlgebraRef, degree: usize, bound: usize) -> Result<Cochain> {
        check_bound(degree, bound)?;
        let n = algebra.dim();
        Ok(Cochain { algebra: algebra.clone(), degree, bound, table: vec![algebra.zero(); n.pow(degree as u32)] })
    }

    /// The degree-0 cochain given by an algebra element.
    pub fn element(algebra: &AlgebraRef, a: Vector, bound: usize) -> Result<Cochain> {
        Cochain::new(algebra, 0, bound, vec![a])
    }

    /// The identity 1-cochain.
    pub fn identity(algebra: &AlgebraRef, bound: usize) -> Result<Cochain> {
        Cochain::from_fn(algebra, 1, bound, |t| algebra.basis(t[0]))
    }

    pub fn random<R: Rng + ?Sized>(algebra: &AlgebraRef, degree: usize, bound: usize, rng: &mut R) -> Result<Cochain> {
        let f = algebra.field();
        let n = algebra.dim();
        Cochain::from_fn(algebra, degree, bound, |_| (0..n).map(|_| f.random_element(rng)).collect())
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn table(&self) -> &[Vector] {
        &self.table
    }

    /// Value on a basis tuple.
    pub fn value(&self, tuple: &[usize]) -> &Vector {
        &self.table[encode(tuple, self.algebra.dim())]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    /// Concatenated table, the coordinates used by [`Cohomology`].
    pub fn flat(&self) -> Vector {
        self.table.concat()
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if self.degree != other.degree || self.algebra.dim() != other.algebra.dim() {
            return Err(Error::DimensionMismatch("cochains of different degrees".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let table = self.table.iter().zip(&other.table).map(|(a, b)| vec_add(a, b)).collect();
        Ok(Cochain { table, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let table = self.table.iter().zip(&other.table).map(|(a, b)| vec_sub(a, b)).collect();
        Ok(Cochain { table, ..self.clone() })
    }

    pub fn scale(&self, c: &FieldElement) -> Cochain {
        Cochain { table: self.table.iter().map(|v| vec_scale(c, v)).collect(), ..self.clone() }
    }

    fn scale_sign(&self, s: i64) -> Cochain {
        if s == 1 {
            self.clone()
        } else {
            self.scale(&self.algebra.field().from_i64(s))
        }
    }

    fn bound_with(&self, other: &Cochain) -> usize {
        self.bound.max(other.bound)
    }

    /// `(dα)(a_1..a_{p+1}) = a_1 α(a_2..) + Σ_{i=1}^p (-1)^i α(.., a_i a_{i+1}, ..) + (-1)^{p+1} α(a_1..a_p) a_{p+1}`.
    pub fn differential(&self) -> Result<Cochain> {
        let p = self.degree;
        check_bound(p + 1, self.bound)?;
        let alg = &self.algebra;
        let n = alg.dim();
        let f = alg.field();
        let minus = f.from_i64(-1);
        let mut out = vec![alg.zero(); n.pow(p as u32 + 1)];
        let mut tuple = vec![0; p + 1];
        let mut merged = vec![0; p];
        for (idx, slot) in out.iter_mut().enumerate() {
            decode(idx, n, &mut tuple);
            let a1 = tuple[0];
            for (k, c) in self.value(&tuple[1..]).iter().enumerate() {
                if !c.is_zero() {
                    for (l, d) in alg.basis_product(a1, k) {
                        slot[*l].add_mul(c, d);
                    }
                }
            }
            for i in 1..=p {
                // a_i a_{i+1} in 1-based terms is tuple[i-1] * tuple[i]
                let s = if parity(i) { minus.clone() } else { f.one() };
                merged[..i - 1].copy_from_slice(&tuple[..i - 1]);
                merged[i..].copy_from_slice(&tuple[i + 1..]);
                for (k, c) in alg.basis_product(tuple[i - 1], tuple[i]) {
                    merged[i - 1] = *k;
                    let coeff = &s * c;
                    for (slot_l, v) in slot.iter_mut().zip(self.value(&merged)) {
                        slot_l.add_mul(&coeff, v);
                    }
                }
            }
            let s = if parity(p + 1) { minus.clone() } else { f.one() };
            let last = tuple[p];
            for (k, c) in self.value(&tuple[..p]).iter().enumerate() {
                if !c.is_zero() {
                    let coeff = &s * c;
                    for (l, d) in alg.basis_product(k, last) {
                        slot[*l].add_mul(&coeff, d);
                    }
                }
            }
        }
        Ok(Cochain { algebra: alg.clone(), degree: p + 1, bound: self.bound, table: out })
    }

    /// `(α ⌣ β)(a_1..a_{p+q}) = α(a_1..a_p) · β(a_{p+1}..a_{p+q})`.
    pub fn cup(&self, other: &Cochain) -> Result<Cochain> {
        let (p, q) = (self.degree, other.degree);
        let bound = self.bound_with(other);
        check_bound(p + q, bound)?;
        let alg = &self.algebra;
        let nq = alg.dim().pow(q as u32);
        let table = (0..self.table.len() * nq).map(|idx| alg.mul(&self.table[idx / nq], &other.table[idx % nq])).collect();
        Ok(Cochain { algebra: alg.clone(), degree: p + q, bound, table })
    }

    /// `(α ∘_i β)(a_1..a_{p+q-1}) = α(a_1..a_i, β(a_{i+1}..a_{i+q}), ..)`, slot `i` counted from 0.
    pub fn circle_i(&self, other: &Cochain, i: usize) -> Result<Cochain> {
        let (p, q) = (self.degree, other.degree);
        if i >= p {
            return Err(Error::Invalid(format!("slot {i} out of range for a {p}-cochain")));
        }
        let r = composite_degree(p, q)?;
        let bound = self.bound_with(other);
        check_bound(r, bound)?;
        let alg = &self.algebra;
        let n = alg.dim();
        let tail = n.pow((p - 1 - i) as u32);
        let mid = n.pow(q as u32);
        let table = (0..n.pow(r as u32))
            .map(|idx| {
                let prefix = idx / (tail * mid);
                let inner = (idx / tail) % mid;
                let suffix = idx % tail;
                let mut v = alg.zero();
                for (k, c) in other.table[inner].iter().enumerate() {
                    if !c.is_zero() {
                        let a = &self.table[(prefix * n + k) * tail + suffix];
                        for (x, y) in v.iter_mut().zip(a) {
                            x.add_mul(c, y);
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Cochain { algebra: alg.clone(), degree: r, bound, table })
    }

    /// Sum over slots of `sign(i) · α ∘_i β`; zero when `p = 0`.
    fn signed_composition(&self, other: &Cochain, sign_of: impl Fn(usize) -> i64) -> Result<Cochain> {
        let r = composite_degree(self.degree, other.degree)?;
        let mut acc = Cochain::zero(&self.algebra, r, self.bound_with(other))?;
        for i in 0..self.degree {
            acc = acc.add(&self.circle_i(other, i)?.scale_sign(sign_of(i)))?;
        }
        Ok(acc)
    }

    /// `α ∘ β = Σ_i (-1)^{(q-1)i} α ∘_i β`.
    pub fn circle(&self, other: &Cochain) -> Result<Cochain> {
        let q = other.degree;
        // (q - 1)·i has the parity of (q + 1)·i
        self.signed_composition(other, |i| sign(parity((q + 1) * i)))
    }

    /// `[α, β] = -(-1)^{(p-1)(q-1)} α ∘ β + β ∘ α`.
    pub fn bracket(&self, other: &Cochain) -> Result<Cochain> {
        let (p, q) = (self.degree, other.degree);
        let s = -sign(parity((p + 1) * (q + 1)));
        other.circle(self)?.add(&self.circle(other)?.scale_sign(s))
    }

    /// `h(α ⊗ β) = Σ_i (-1)^{i + (p-1-i) q} α ∘_i β`.
    pub fn homotopy_h(&self, other: &Cochain) -> Result<Cochain> {
        let (p, q) = (self.degree, other.degree);
        self.signed_composition(other, |i| sign(parity(i + (p - 1 - i) * q)))
    }
}

/// `h(dα⊗β) + (-1)^p h(α⊗dβ) + d h(α⊗β) = (-1)^{pq} β⌣α − α⌣β`.
pub fn homotopy_identity_holds(alpha: &Cochain, beta: &Cochain) -> Result<bool> {
    let (p, q) = (alpha.degree, beta.degree);
    let mut lhs = alpha.differential()?.homotopy_h(beta)?;
    if p > 0 {
        lhs = lhs.add(&alpha.homotopy_h(&beta.differential()?)?.scale_sign(sign(parity(p))))?;
    }
    if p + q > 0 {
        lhs = lhs.add(&alpha.homotopy_h(beta)?.differential()?)?;
    }
    let rhs = beta.cup(alpha)?.scale_sign(sign(parity(p * q))).sub(&alpha.cup(beta)?)?;
    Ok(lhs == rhs)
}

/// `Σ_i (-1)^{i + (p-1-i) q} α ∘_i β = (-1)^{pq + q} α ∘ β`.
pub fn circle_sign_identity_holds(alpha: &Cochain, beta: &Cochain) -> Result<bool> {
    let (p, q) = (alpha.degree, beta.degree);
    if p + q == 0 {
        // both sides would live in degree -1, where there are no cochains
        return Ok(true);
    }
    Ok(alpha.homotopy_h(beta)? == alpha.circle(beta)?.scale_sign(sign(parity(p * q + q))))
}

/// `(α∘β)∘γ − α∘(β∘γ)` is graded symmetric in `β, γ` with sign `(-1)^{(q-1)(r-1)}`.
pub fn pre_lie_holds(alpha: &Cochain, beta: &Cochain, gamma: &Cochain) -> Result<bool> {
    let assoc = |b: &Cochain, c: &Cochain| -> Result<Cochain> { alpha.circle(b)?.circle(c)?.sub(&alpha.circle(&b.circle(c)?)?) };
    let (q, r) = (beta.degree, gamma.degree);
    let lhs = assoc(beta, gamma)?;
    let rhs = assoc(gamma, beta)?.scale_sign(sign(parity((q + 1) * (r + 1))));
    Ok(lhs == rhs)
}

fn encode(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * n + t)
}

fn decode(mut idx: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
}

impl fmt::Display for Cochain {
    /// Sparse listing `(i, j, …) -> [v_0, …]` of the nonzero values.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.algebra.dim();
        let mut tuple = vec![0; self.degree];
        writeln!(f, "cochain degree {}", self.degree)?;
        for (idx, v) in self.table.iter().enumerate() {
            if is_zero_vector(v) {
                continue;
            }
            decode(idx, n, &mut tuple);
            let t: Vec<String> = tuple.iter().map(|x| x.to_string()).collect();
            let vs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            writeln!(f, "({}) -> [{}]", t.join(","), vs.join(", "))?;
        }
        Ok(())
    }
}

/// `HH^p(A)`: cocycles modulo coboundaries, with class coordinates.
#[derive(Clone, Debug)]
pub struct Cohomology {
    algebra: AlgebraRef,
    degree: usize,
    bound: usize,
    cocycles: Vec<Vector>,
    coboundaries: EchelonBasis,
    quotient: Subquotient,
}

/// Matrix of `d: C^p → C^{p+1}` in flattened coordinates.
fn differential_matrix(algebra: &AlgebraRef, p: usize, bound: usize) -> Result<Matrix> {
    let n = algebra.dim();
    let f = algebra.field();
    let dom = n.pow(p as u32) * n;
    let cols = (0..dom)
        .map(|j| {
            let v = unit_vector(f, dom, j);
            let c = Cochain::new(algebra, p, bound, v.chunks(n).map(|x| x.to_vec()).collect())?;
            Ok(c.differential()?.flat())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(f, n.pow(p as u32 + 1) * n, &cols))
}

pub fn cohomology(algebra: &AlgebraRef, p: usize, bound: usize) -> Result<Cohomology> {
    check_bound(p + 1, bound)?;
    let n = algebra.dim();
    let f = algebra.field();
    let ambient = n.pow(p as u32) * n;
    let cocycles = differential_matrix(algebra, p, bound)?.kernel_basis().columns();
    let boundary_vectors = if p == 0 { vec![] } else { differential_matrix(algebra, p - 1, bound)?.columns() };
    let boundaries = span_basis(f, ambient, &boundary_vectors);
    let mut coboundaries = EchelonBasis::new(f, ambient);
    for v in &boundaries {
        coboundaries.insert(v);
    }
    let quotient = Subquotient::new(f, ambient, &cocycles, &boundaries);
    Ok(Cohomology { algebra: algebra.clone(), degree: p, bound, cocycles, coboundaries, quotient })
}

impl Cohomology {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn cocycle_space_dim(&self) -> usize {
        self.cocycles.len()
    }

    /// Cocycles whose classes form a basis.
    pub fn representatives(&self) -> Result<Vec<Cochain>> {
        let n = self.algebra.dim();
        self.quotient
            .reps
            .iter()
            .map(|v| Cochain::new(&self.algebra, self.degree, self.bound, v.chunks(n).map(|x| x.to_vec()).collect()))
            .collect()
    }

    pub fn is_coboundary(&self, c: &Cochain) -> bool {
        c.degree == self.degree && self.coboundaries.contains(&c.flat())
    }

    /// Coordinates of the class of a cocycle; fails on non-cocycles.
    pub fn class_of(&self, c: &Cochain) -> Result<Vector> {
        if c.degree != self.degree {
            return Err(Error::DimensionMismatch("cochain degree differs from the cohomology degree".into()));
        }
        if !c.differential()?.is_zero() {
            return Err(Error::Invalid("class of a non-cocycle".into()));
        }
        Ok(self.quotient.coords(&c.flat()))
    }

    /// A cocycle represents a nonzero class.
    pub fn is_nonzero_class(&self, c: &Cochain) -> Result<bool> {
        Ok(!is_zero_vector(&self.class_of(c)?))
    }
}

/// A chain in `A^{⊗(p+1)}`, coordinates indexed like cochain tuples of length `p + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain {
    pub degree: usize,
    pub coords: Vector,
}

/// `b(a_0⊗…⊗a_p) = Σ_{i<p} (-1)^i (…⊗a_i a_{i+1}⊗…) + (-1)^p a_p a_0 ⊗ a_1 ⊗ … ⊗ a_{p-1}`.
pub fn chain_differential(algebra: &AlgebraRef, c: &Chain) -> Result<Chain> {
    let p = c.degree;
    if p == 0 {
        return Err(Error::Invalid("no chains in degree -1".into()));
    }
    let n = algebra.dim();
    let f = algebra.field();
    if c.coords.len() != n.pow(p as u32 + 1) {
        return Err(Error::DimensionMismatch(format!("chain coordinates do not match degree {p}")));
    }
    let mut out = vec![f.zero(); n.pow(p as u32)];
    let mut tuple = vec![0; p + 1];
    let mut merged = vec![0; p];
    for (idx, x) in c.coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        decode(idx, n, &mut tuple);
        for i in 0..p {
            let coeff = x * &f.from_i64(sign(parity(i)));
            merged[..i].copy_from_slice(&tuple[..i]);
            merged[i + 1..].copy_from_slice(&tuple[i + 2..]);
            for (k, d) in algebra.basis_product(tuple[i], tuple[i + 1]) {
                merged[i] = *k;
                out[encode(&merged, n)].add_mul(&coeff, d);
            }
        }
        let coeff = x * &f.from_i64(sign(parity(p)));
        merged[1..].copy_from_slice(&tuple[1..p]);
        for (k, d) in algebra.basis_product(tuple[p], tuple[0]) {
            merged[0] = *k;
            out[encode(&merged, n)].add_mul(&coeff, d);
        }
    }
    Ok(Chain { degree: p - 1, coords: out })
}

fn chain_differential_matrix(algebra: &AlgebraRef, p: usize) -> Result<Matrix> {
    let n = algebra.dim();
    let f = algebra.field();
    let dom = n.pow(p as u32 + 1);
    let cols = (0..dom)
        .map(|j| Ok(chain_differential(algebra, &Chain { degree: p, coords: unit_vector(f, dom, j) })?.coords))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(f, n.pow(p as u32), &cols))
}

/// `HH_p(A)`: cycles modulo boundaries.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: usize,
    pub cycles: Vec<Vector>,
    pub boundaries: Vec<Vector>,
    quotient: Subquotient,
}

impl Homology {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn representatives(&self) -> &[Vector] {
        &self.quotient.reps
    }

    pub fn class_of(&self, c: &Chain) -> Vector {
        self.quotient.coords(&c.coords)
    }
}

pub fn homology(algebra: &AlgebraRef, p: usize, bound: usize) -> Result<Homology> {
    check_bound(p + 1, bound)?;
    let n = algebra.dim();
    let f = algebra.field();
    let ambient = n.pow(p as u32 + 1);
    let cycles = if p == 0 {
        (0..ambient).map(|i| unit_vector(f, ambient, i)).collect()
    } else {
        chain_differential_matrix(algebra, p)?.kernel_basis().columns()
    };
    let boundaries = span_basis(f, ambient, &chain_differential_matrix(algebra, p + 1)?.columns());
    let quotient = Subquotient::new(f, ambient, &cycles, &boundaries);
    Ok(Homology { degree: p, cycles, boundaries, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::truncated_polynomial;
    use crate::field::Field;
    use crate::group::FiniteGroup;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn trunc(f: &Field, m: usize) -> AlgebraRef {
        truncated_polynomial(f, m).into_ref()
    }

    fn v(f: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    /// The derivation of `k[t]/(t^m)` sending `t` to `g`, as a 1-cochain.
    fn derivation(a: &AlgebraRef, g: &[FieldElement], bound: usize) -> Cochain {
        let f = a.field().clone();
        Cochain::from_fn(a, 1, bound, |t| {
            // D(t^k) = k t^{k-1} g
            let k = t[0];
            if k == 0 {
                return a.zero();
            }
            let tk1 = a.pow(&a.basis(1), (k - 1) as u64);
            vec_scale(&f.from_u64(k as u64), &a.mul(&tk1, g))
        })
        .unwrap()
    }

    #[test]
    fn dual_numbers_examples() {
        let q = Field::rationals();
        let a = trunc(&q, 2);
        let alpha = Cochain::from_fn(&a, 1, 4, |t| if t[0] == 1 { a.one() } else { a.zero() }).unwrap();
        let d = alpha.differential().unwrap();
        assert_eq!(d.value(&[1, 1]), &v(&q, &[0, 2]));
        let c = alpha.cup(&alpha).unwrap();
        assert_eq!(c.value(&[1, 1]), &v(&q, &[1, 0]));
    }

    #[test]
    fn degree_zero_differential_detects_center() {
        let q = Field::rationals();
        let a = FiniteGroup::symmetric3().group_algebra(&q).unwrap().into_ref();
        for z in a.center() {
            assert!(Cochain::element(&a, z, 4).unwrap().differential().unwrap().is_zero());
        }
        assert!(!Cochain::element(&a, a.basis(1), 4).unwrap().differential().unwrap().is_zero());
    }

    #[test]
    fn trivial_compositions() {
        let f = Field::prime(3);
        let a = trunc(&f, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let id = Cochain::identity(&a, 4).unwrap();
        let beta = Cochain::random(&a, 2, 4, &mut rng).unwrap();
        assert_eq!(id.circle_i(&beta, 0).unwrap(), beta);
        assert!(id.bracket(&Cochain::random(&a, 1, 4, &mut rng).unwrap()).unwrap().is_zero());
        let one = Cochain::element(&a, a.one(), 4).unwrap();
        assert_eq!(one.cup(&beta).unwrap(), beta);
        // 1-cochains compose as linear maps
        let x = Cochain::random(&a, 1, 4, &mut rng).unwrap();
        let y = Cochain::random(&a, 1, 4, &mut rng).unwrap();
        let comp = x.circle_i(&y, 0).unwrap();
        for k in 0..3 {
            let mut expect = a.zero();
            for (j, c) in y.value(&[k]).iter().enumerate() {
                expect = vec_add(&expect, &vec_scale(c, x.value(&[j])));
            }
            assert_eq!(comp.value(&[k]), &expect);
        }
        // α = t ↦ t, β = t ↦ 1 on F3[t]/t³ as plain 1-cochains: (α∘₀β)(t) = α(1)
        let alpha = Cochain::from_fn(&a, 1, 4, |t| if t[0] == 1 { a.basis(1) } else { a.zero() }).unwrap();
        let beta1 = Cochain::from_fn(&a, 1, 4, |t| if t[0] == 1 { a.one() } else { a.zero() }).unwrap();
        assert_eq!(alpha.circle_i(&beta1, 0).unwrap().value(&[1]), alpha.value(&[0]));
        assert!(matches!(alpha.circle_i(&beta1, 1), Err(Error::Invalid(_))));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let a = trunc(&Field::rationals(), 2);
        let c = Cochain::zero(&a, 4, 4).unwrap();
        assert_eq!(c.differential().unwrap_err(), Error::DegreeOverflow { requested: 5, bound: 4 });
        assert!(matches!(Cochain::zero(&a, 5, 4), Err(Error::DegreeOverflow { .. })));
        assert!(Cochain::zero(&a, 5, 6).unwrap().differential().is_ok());
    }

    #[test]
    fn derivation_bracket_witness() {
        let f = Field::prime(3);
        let a = trunc(&f, 3);
        let alpha = derivation(&a, &a.one(), 4);
        let beta = derivation(&a, &a.basis(1), 4);
        let br = alpha.bracket(&beta).unwrap();
        // (fg' − gf') with f = 1, g = t gives the derivation t ↦ 1, and the bracket sign gives its negative
        assert_eq!(br, alpha.scale(&f.from_i64(-1)));
        let h1 = cohomology(&a, 1, 4).unwrap();
        assert_eq!(h1.dim(), 3);
        assert!(h1.is_nonzero_class(&br).unwrap());
    }

    #[test]
    fn hh1_of_truncated_polynomials() {
        for p in [2u64, 3, 5] {
            let a = trunc(&Field::prime(p), p as usize);
            assert_eq!(cohomology(&a, 1, 4).unwrap().dim(), p as usize);
        }
    }

    #[test]
    fn low_degree_cohomology_and_homology() {
        let q = Field::rationals();
        let a = FiniteGroup::symmetric3().group_algebra(&q).unwrap().into_ref();
        assert_eq!(cohomology(&a, 0, 4).unwrap().dim(), a.center().len());
        let h0 = homology(&a, 0, 4).unwrap();
        assert_eq!(h0.dim(), a.dim() - a.commutator_subspace().len());
        // separable algebras have no higher Hochschild cohomology
        assert_eq!(cohomology(&a, 1, 4).unwrap().dim(), 0);
        let d = trunc(&q, 2);
        assert_eq!(homology(&d, 1, 4).unwrap().dim(), 1);
    }

    #[test]
    fn squares_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = Field::prime(3);
        let a = trunc(&f, 3);
        for p in 0..3 {
            let c = Cochain::random(&a, p, 4, &mut rng).unwrap();
            assert!(c.differential().unwrap().differential().unwrap().is_zero());
            let n = a.dim().pow(p as u32 + 2);
            let ch = Chain { degree: p + 1, coords: (0..n).map(|_| f.random_element(&mut rng)).collect() };
            let b1 = chain_differential(&a, &ch).unwrap();
            if b1.degree > 0 {
                assert!(is_zero_vector(&chain_differential(&a, &b1).unwrap().coords));
            }
        }
    }

    #[test]
    fn cup_is_a_chain_map_and_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = FiniteGroup::symmetric3().group_algebra(&Field::prime(5)).unwrap().into_ref();
        for (p, q) in [(0, 1), (1, 1), (1, 2), (2, 0)] {
            let x = Cochain::random(&a, p, 4, &mut rng).unwrap();
            let y = Cochain::random(&a, q, 4, &mut rng).unwrap();
            let lhs = x.cup(&y).unwrap().differential().unwrap();
            let s = a.field().from_i64(sign(parity(p)));
            let rhs = x.differential().unwrap().cup(&y).unwrap().add(&x.cup(&y.differential().unwrap()).unwrap().scale(&s)).unwrap();
            assert_eq!(lhs, rhs);
            let z = Cochain::random(&a, 1, 4, &mut rng).unwrap();
            assert_eq!(x.cup(&y).unwrap().cup(&z).unwrap(), x.cup(&y.cup(&z).unwrap()).unwrap());
        }
    }

    #[test]
    fn graded_antisymmetry_and_pre_lie() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = trunc(&Field::prime(3), 3);
        for p in 0..=2 {
            for q in 0..=2 {
                if p + q == 0 {
                    continue;
                }
                let x = Cochain::random(&a, p, 6, &mut rng).unwrap();
                let y = Cochain::random(&a, q, 6, &mut rng).unwrap();
                let s = a.field().from_i64(-sign(parity((p + 1) * (q + 1))));
                assert_eq!(x.bracket(&y).unwrap(), y.bracket(&x).unwrap().scale(&s));
                for r in 1..=2 {
                    if q == 0 {
                        continue;
                    }
                    let z = Cochain::random(&a, r, 6, &mut rng).unwrap();
                    assert!(pre_lie_holds(&x, &y, &z).unwrap(), "pre-Lie fails for degrees {p},{q},{r}");
                }
            }
        }
    }

    #[test]
    fn homotopy_identities_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = trunc(&Field::prime(3), 3);
        for p in 0..=2 {
            for q in 0..=2 {
                let x = Cochain::random(&a, p, 6, &mut rng).unwrap();
                let y = Cochain::random(&a, q, 6, &mut rng).unwrap();
                assert!(homotopy_identity_holds(&x, &y).unwrap(), "homotopy fails for {p},{q}");
                if p + q > 0 {
                    assert!(circle_sign_identity_holds(&x, &y).unwrap());
                }
            }
        }
        let zero = Cochain::random(&a, 0, 6, &mut rng).unwrap();
        assert!(zero.homotopy_h(&Cochain::random(&a, 2, 6, &mut rng).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn bracket_is_a_derivation_on_cohomology() {
        let f = Field::prime(3);
        let a = trunc(&f, 3);
        let h1 = cohomology(&a, 1, 4).unwrap();
        let reps = h1.representatives().unwrap();
        let h2 = cohomology(&a, 2, 4).unwrap();
        for x in &reps {
            for y in &reps {
                for z in &reps {
                    let lhs = x.bracket(&y.cup(z).unwrap()).unwrap();
                    let rhs = x.bracket(y).unwrap().cup(z).unwrap().add(&y.cup(&x.bracket(z).unwrap()).unwrap()).unwrap();
                    assert!(h2.is_coboundary(&lhs.sub(&rhs).unwrap()));
                }
            }
        }
    }

    #[test]
    fn display_lists_nonzero_values() {
        let q = Field::rationals();
        let a = trunc(&q, 2);
        let alpha = Cochain::from_fn(&a, 1, 4, |t| if t[0] == 1 { a.one() } else { a.zero() }).unwrap();
        assert_eq!(alpha.to_string(), "cochain degree 1\n(1) -> [1, 0]\n");
    }
}
