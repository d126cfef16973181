//! Group Hopf algebras, Drinfeld doubles `D(G)` with their ribbon structure,
//! and the simple `D(G)`-modules in characteristic 0 by induction from
//! centralizer irreps.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraRef, StructureAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::group::{CommutingPairOrbit, FiniteGroup};
use crate::hopf::{s_transform, HopfAlgebra, QuasiTriangular, RadfordConvention, Tensor, RADFORD_CONVENTION};
use crate::linalg::{unit_vector, Matrix, Vector};
use crate::module::{simple_modules, AlgebraModule};

/// `k[G]` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_hopf_algebra(g: &FiniteGroup, field: &Field) -> Result<HopfAlgebra> {
    let n = g.order();
    let alg = g.group_algebra(field)?.into_ref();
    let delta: Vec<_> = (0..n).map(|a| (a, a, a, field.one())).collect();
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        s[(g.inv(a), a)] = field.one();
    }
    HopfAlgebra::new(alg, delta, vec![field.one(); n], s)
}

/// `k^G` with `Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b`, `ε(δ_g) = [g = e]`, `S(δ_g) = δ_{g⁻¹}`.
pub fn function_hopf_algebra(g: &FiniteGroup, field: &Field) -> Result<HopfAlgebra> {
    let n = g.order();
    let alg = g.function_algebra(field)?.into_ref();
    let mut delta = vec![];
    for a in 0..n {
        for b in 0..n {
            delta.push((g.mul(a, b), a, b, field.one()));
        }
    }
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        s[(g.inv(a), a)] = field.one();
    }
    HopfAlgebra::new(alg, delta, unit_vector(field, n, 0), s)
}

/// `D(G)` with its canonical R-matrix and ribbon element.
#[derive(Clone, Debug)]
pub struct DrinfeldDouble {
    pub group: FiniteGroup,
    pub hopf: HopfAlgebra,
    pub qt: QuasiTriangular,
}

impl DrinfeldDouble {
    /// Basis index of `δ_g ⊗ x`.
    pub fn index(&self, g: usize, x: usize) -> usize {
        g * self.group.order() + x
    }

    pub fn algebra(&self) -> &AlgebraRef {
        self.hopf.algebra()
    }

    pub fn field(&self) -> &Field {
        self.hopf.field()
    }

    /// Covector `δ_g ⊗ x ↦ [(g, x) ∈ O]`.
    pub fn orbit_indicator(&self, orbit: &CommutingPairOrbit) -> Vector {
        let f = self.field();
        let mut v = vec![f.zero(); self.algebra().dim()];
        for &(a, b) in &orbit.members {
            v[self.index(a, b)] = f.one();
        }
        v
    }

    /// Value of a covector on the commuting pair `(a, b)`, read as `δ_a ⊗ b`.
    pub fn evaluate_on_pair(&self, f: &[FieldElement], (a, b): (usize, usize)) -> FieldElement {
        f[self.index(a, b)].clone()
    }
}

/// Structure maps of `D(G)`:
/// `(δ_g⊗x)(δ_h⊗y) = [g = xhx⁻¹] δ_g⊗xy`, `Δ(δ_g⊗x) = Σ_{ab=g} (δ_a⊗x)⊗(δ_b⊗x)`,
/// `S(δ_g⊗x) = δ_{x⁻¹g⁻¹x}⊗x⁻¹`, `ε(δ_g⊗x) = [g = e]`,
/// `R = Σ_g (δ_g⊗e) ⊗ (Σ_h δ_h⊗g)` and `v = Σ_g δ_g⊗g⁻¹`.
pub fn drinfeld_double(g: &FiniteGroup, field: &Field) -> Result<DrinfeldDouble> {
    let n = g.order();
    let idx = |a: usize, x: usize| a * n + x;
    let mut consts = vec![];
    for a in 0..n {
        for x in 0..n {
            for y in 0..n {
                // h is forced: h = x⁻¹ a x
                let h = g.conj(g.inv(x), a);
                consts.push((idx(a, x), idx(h, y), idx(a, g.mul(x, y)), field.one()));
            }
        }
    }
    let mut unit = vec![field.zero(); n * n];
    for a in 0..n {
        unit[idx(a, 0)] = field.one();
    }
    let alg = StructureAlgebra::new(field, n * n, consts, unit.clone())?.into_ref();
    let mut delta = vec![];
    let mut counit = vec![field.zero(); n * n];
    let mut s = Matrix::zeros(field, n * n, n * n);
    for a in 0..n {
        for x in 0..n {
            for b in 0..n {
                // c = b⁻¹ a so that b' c = a with b' ranging over G
                let c = g.mul(g.inv(b), a);
                delta.push((idx(a, x), idx(b, x), idx(c, x), field.one()));
            }
            let xi = g.inv(x);
            s[(idx(g.conj(xi, g.inv(a)), xi), idx(a, x))] = field.one();
        }
        counit[idx(0, a)] = field.one();
    }
    let hopf = HopfAlgebra::new(alg, delta, counit, s)?;
    let mut r = Tensor::new();
    for a in 0..n {
        for h in 0..n {
            r.add_term(vec![idx(a, 0), idx(h, a)], &field.one());
        }
    }
    let mut ribbon = vec![field.zero(); n * n];
    for a in 0..n {
        ribbon[idx(a, g.inv(a))] = field.one();
    }
    let qt = QuasiTriangular::new(&hopf, r, ribbon)?;
    Ok(DrinfeldDouble { group: g.clone(), hopf, qt })
}

/// Irrep of a centralizer `H ≤ G`, given by its matrix on every element of `H`.
#[derive(Clone, Debug)]
pub struct CentralizerIrrep {
    pub dim: usize,
    pub images: BTreeMap<usize, Matrix>,
}

impl CentralizerIrrep {
    /// Closes generator images under multiplication and checks the homomorphism property.
    pub fn from_generators(g: &FiniteGroup, subgroup: &[usize], gens: &[usize], mats: &[Matrix]) -> Result<CentralizerIrrep> {
        if gens.len() != mats.len() {
            return Err(Error::DimensionMismatch("one matrix per generator expected".into()));
        }
        let field = mats.first().map(|m| m.field().clone()).ok_or_else(|| Error::Invalid("irrep without generators".into()))?;
        let dim = mats[0].rows();
        if mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("irrep matrices differ in size".into()));
        }
        let mut images: BTreeMap<usize, Matrix> = BTreeMap::new();
        images.insert(0, Matrix::identity(&field, dim));
        let mut frontier = vec![0usize];
        while let Some(h) = frontier.pop() {
            for (x, m) in gens.iter().zip(mats) {
                let hx = g.mul(h, *x);
                if !images.contains_key(&hx) {
                    let img = images[&h].mul(m);
                    images.insert(hx, img);
                    frontier.push(hx);
                }
            }
        }
        let members: Vec<usize> = images.keys().copied().collect();
        if members != subgroup {
            return Err(Error::Invalid("irrep generators do not generate the centralizer".into()));
        }
        let irrep = CentralizerIrrep { dim, images };
        irrep.validate(g)?;
        Ok(irrep)
    }

    pub fn validate(&self, g: &FiniteGroup) -> Result<()> {
        for (a, ma) in &self.images {
            for (b, mb) in &self.images {
                if self.images[&g.mul(*a, *b)] != ma.mul(mb) {
                    return Err(Error::Invalid(format!("irrep is not a homomorphism on ({a},{b})")));
                }
            }
        }
        Ok(())
    }

    pub fn character(&self, h: usize) -> FieldElement {
        self.images[&h].trace()
    }
}

/// Irreps read from a data file, keyed by conjugacy-class index.
#[derive(Clone, Debug, Default)]
pub struct IrrepCatalog {
    pub entries: BTreeMap<usize, IrrepEntry>,
}

#[derive(Clone, Debug)]
pub struct IrrepEntry {
    pub generators: Vec<usize>,
    /// Generator matrices of each irrep, over the field they were written in.
    pub irreps: Vec<Vec<Matrix>>,
}

/// Greedy generating set of a subgroup.
fn subgroup_generators(g: &FiniteGroup, subgroup: &[usize]) -> Vec<usize> {
    let mut gens = vec![];
    let mut span = vec![0usize];
    for &h in subgroup {
        if span.contains(&h) {
            continue;
        }
        gens.push(h);
        span = closure(g, &gens);
    }
    gens
}

fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![0usize];
    let mut frontier = vec![0usize];
    while let Some(h) = frontier.pop() {
        for &x in gens {
            let hx = g.mul(h, x);
            if !seen.contains(&hx) {
                seen.push(hx);
                frontier.push(hx);
            }
        }
    }
    seen.sort();
    seen
}

/// All characters of an abelian subgroup as exponent maps `h ↦ k` with
/// `χ(h) = ζ_e^k`, `e` the exponent; the trivial character first.
pub fn abelian_characters(g: &FiniteGroup, subgroup: &[usize]) -> (usize, Vec<BTreeMap<usize, usize>>) {
    let e = subgroup.iter().map(|&h| g.element_order(h)).fold(1, num_integer::lcm);
    let gens = subgroup_generators(g, subgroup);
    let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let mut out = vec![];
    let mut ks = vec![0usize; gens.len()];
    loop {
        // BFS extension of x_i ↦ ζ_e^{k_i e / o_i}; keep it if well defined
        let mut exps: BTreeMap<usize, usize> = BTreeMap::new();
        exps.insert(0, 0);
        let mut frontier = vec![0usize];
        let mut ok = true;
        while let Some(h) = frontier.pop() {
            for (i, &x) in gens.iter().enumerate() {
                let hx = g.mul(h, x);
                let val = (exps[&h] + ks[i] * (e / orders[i])) % e;
                match exps.get(&hx) {
                    Some(&v) if v != val => ok = false,
                    Some(_) => {}
                    None => {
                        exps.insert(hx, val);
                        frontier.push(hx);
                    }
                }
            }
        }
        if ok {
            out.push(exps);
        }
        let mut i = 0;
        loop {
            if i == gens.len() {
                out.sort_by(|a, b| a.values().cmp(b.values()));
                return (e, out);
            }
            ks[i] += 1;
            if ks[i] == orders[i] {
                ks[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Trivial, sign and 2-dimensional irreps of a subgroup isomorphic to S₃,
/// the last from conjugation on the three involutions in the basis `t1 − t3, t2 − t3`.
fn s3_irreps(g: &FiniteGroup, subgroup: &[usize], field: &Field) -> Vec<CentralizerIrrep> {
    let inv: Vec<usize> = subgroup.iter().copied().filter(|&h| g.element_order(h) == 2).collect();
    let perm = |h: usize| -> Vec<usize> { inv.iter().map(|&t| inv.iter().position(|&u| u == g.conj(h, t)).unwrap()).collect() };
    let mut triv = BTreeMap::new();
    let mut sign = BTreeMap::new();
    let mut std2 = BTreeMap::new();
    for &h in subgroup {
        let p = perm(h);
        // image of t_i - t_3 is t_{p(i)} - t_{p(3)}; a sum-zero vector (c1, c2, c3) has coordinates (c1, c2)
        let mut m = Matrix::zeros(field, 2, 2);
        for col in 0..2 {
            let mut w = vec![field.zero(); 3];
            w[p[col]].add_assign(&field.one());
            w[p[2]].add_assign(&field.from_i64(-1));
            m[(0, col)] = w[0].clone();
            m[(1, col)] = w[1].clone();
        }
        let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        triv.insert(h, Matrix::identity(field, 1));
        sign.insert(h, Matrix::from_rows(field, vec![vec![field.from_i64(if inversions % 2 == 0 { 1 } else { -1 })]]).unwrap());
        std2.insert(h, m);
    }
    vec![
        CentralizerIrrep { dim: 1, images: triv },
        CentralizerIrrep { dim: 1, images: sign },
        CentralizerIrrep { dim: 2, images: std2 },
    ]
}

/// Maps an element of `Q` or `Q(ζ_n)` into `field`, sending `ζ_n` to a primitive `n`-th root of unity.
pub fn embed_element(x: &FieldElement, field: &Field) -> Result<FieldElement> {
    match x {
        FieldElement::Rational(r) => field.from_rational(r),
        FieldElement::Cyclotomic { field: src, coeffs } => {
            let n = src.order();
            let z = field
                .root_of_unity(n)
                .ok_or_else(|| Error::NonSplit(format!("{} has no primitive {n}-th root of unity", field.spec())))?;
            let mut acc = field.zero();
            let mut pw = field.one();
            for c in coeffs {
                acc.add_mul(&field.from_rational(c)?, &pw);
                pw = &pw * &z;
            }
            Ok(acc)
        }
        FieldElement::Residue { .. } => {
            if x.field() == *field {
                Ok(x.clone())
            } else {
                Err(Error::Invalid("cannot embed a residue into another field".into()))
            }
        }
    }
}

fn embed_matrix(m: &Matrix, field: &Field) -> Result<Matrix> {
    let rows = m
        .row_vectors()
        .iter()
        .map(|r| r.iter().map(|x| embed_element(x, field)).collect::<Result<Vector>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

/// Irreps of the centralizer of the `class_index`-th class representative.
pub fn centralizer_irreps(
    g: &FiniteGroup,
    class_index: usize,
    field: &Field,
    catalog: Option<&IrrepCatalog>,
) -> Result<Vec<CentralizerIrrep>> {
    let classes = g.conjugacy_classes();
    let rep = classes[class_index][0];
    let h = g.centralizer(rep);
    if let Some(entry) = catalog.and_then(|c| c.entries.get(&class_index)) {
        return entry
            .irreps
            .iter()
            .map(|mats| {
                let mats = mats.iter().map(|m| embed_matrix(m, field)).collect::<Result<Vec<_>>>()?;
                CentralizerIrrep::from_generators(g, &h, &entry.generators, &mats)
            })
            .collect();
    }
    let is_abelian = h.iter().all(|&a| h.iter().all(|&b| g.commute(a, b)));
    if is_abelian {
        let (e, chars) = abelian_characters(g, &h);
        let z = field.root_of_unity(e as u64).ok_or_else(|| {
            Error::NonSplit(format!("{} lacks the {e}-th roots of unity needed by the centralizer of {rep}", field.spec()))
        })?;
        return Ok(chars
            .into_iter()
            .map(|exps| CentralizerIrrep {
                dim: 1,
                images: exps
                    .into_iter()
                    .map(|(x, k)| (x, Matrix::from_rows(field, vec![vec![z.pow(k as u64)]]).unwrap()))
                    .collect(),
            })
            .collect());
    }
    if h.len() == 6 {
        return Ok(s3_irreps(g, &h, field));
    }
    Err(Error::CatalogGap(format!(
        "no irreps for the centralizer of element {rep} (order {}) of {}; supply an irrep file",
        h.len(),
        g.name()
    )))
}

/// Label of a simple `D(G)`-module: conjugacy class and centralizer irrep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleLabel {
    pub class_index: usize,
    pub irrep_index: usize,
}

/// Simple modules of `D(G)` in characteristic 0, ordered by class, trivial irrep first.
pub fn simple_modules_char0(
    d: &DrinfeldDouble,
    catalog: Option<&IrrepCatalog>,
) -> Result<(Vec<SimpleLabel>, Vec<AlgebraModule>)> {
    let g = &d.group;
    let field = d.field();
    if field.characteristic() != 0 {
        return Err(Error::Unsupported("induced simple modules need characteristic 0".into()));
    }
    let n = g.order();
    let mut labels = vec![];
    let mut modules = vec![];
    for (ci, class) in g.conjugacy_classes().iter().enumerate() {
        let rep = class[0];
        let reps: Vec<usize> = class.iter().map(|&c| (0..n).find(|&r| g.conj(r, rep) == c).unwrap()).collect();
        for (ii, irrep) in centralizer_irreps(g, ci, field, catalog)?.iter().enumerate() {
            let dv = irrep.dim;
            let dim = class.len() * dv;
            let mut action = vec![Matrix::zeros(field, dim, dim); n * n];
            for x in 0..n {
                for (pos, &c) in class.iter().enumerate() {
                    let c2 = g.conj(x, c);
                    let pos2 = class.iter().position(|&y| y == c2).unwrap();
                    // x r_c = r_{c2} h with h in the centralizer
                    let h = g.mul(g.inv(reps[pos2]), g.mul(x, reps[pos]));
                    let rho = &irrep.images[&h];
                    let m = &mut action[d.index(c2, x)];
                    for i in 0..dv {
                        for j in 0..dv {
                            m[(pos2 * dv + i, pos * dv + j)] = rho[(i, j)].clone();
                        }
                    }
                }
            }
            modules.push(AlgebraModule::new(d.algebra(), action)?);
            labels.push(SimpleLabel { class_index: ci, irrep_index: ii });
        }
    }
    Ok((labels, modules))
}

/// Simple modules in any characteristic: induced in characteristic 0, tops of
/// projective indecomposables otherwise.
pub fn double_simples(d: &DrinfeldDouble, catalog: Option<&IrrepCatalog>) -> Result<Vec<AlgebraModule>> {
    if d.field().characteristic() == 0 {
        return Ok(simple_modules_char0(d, catalog)?.1);
    }
    let dec = d.algebra().decompose()?;
    let mut simples = simple_modules(d.algebra(), &dec)?;
    // trivial module first
    let triv = d.hopf.trivial_module()?;
    if let Some(pos) = simples.iter().position(|s| crate::module::hom_space(&triv, s).map(|(k, _)| k > 0).unwrap_or(false)) {
        let t = simples.remove(pos);
        simples.insert(0, t);
    }
    Ok(simples)
}

/// `𝕊` in the basis of internal characters of the simples, with `T` the
/// diagonal of twists `θ_i` (the scalar by which `v⁻¹` acts on simple `i`).
#[derive(Clone, Debug)]
pub struct DoubleModularData {
    pub characters: Vec<Vector>,
    /// Matrix of `𝕊` in the character basis.
    pub s_characters: Matrix,
    pub twists: Vec<FieldElement>,
    pub dims: Vec<usize>,
}

pub fn smatrix_modular(d: &DrinfeldDouble, simples: &[AlgebraModule]) -> Result<DoubleModularData> {
    smatrix_with_convention(d, simples, RADFORD_CONVENTION)
}

pub fn smatrix_with_convention(
    d: &DrinfeldDouble,
    simples: &[AlgebraModule],
    conv: RadfordConvention,
) -> Result<DoubleModularData> {
    let h = &d.hopf;
    let st = s_transform(h, &d.qt, conv)?;
    let f = h.field();
    let n = h.dim();
    let chars = simples.iter().map(|m| h.internal_character(m)).collect::<Result<Vec<_>>>()?;
    let basis = Matrix::from_columns(f, n, &chars);
    if basis.rank() < chars.len() || chars.len() != st.space.dim() {
        return Err(Error::Invalid("characters of the simples do not form a basis of class functions".into()));
    }
    let cols = chars
        .iter()
        .map(|c| basis.solve(&st.full.mul_vec(c))?.ok_or_else(|| Error::Invalid("𝕊 leaves the character span".into())))
        .collect::<Result<Vec<_>>>()?;
    let s_characters = Matrix::from_columns(f, chars.len(), &cols);
    let alg = d.algebra();
    let vinv = alg
        .left_mult_matrix(&d.qt.ribbon)
        .solve(&alg.one())?
        .ok_or_else(|| Error::Invalid("ribbon element is not invertible".into()))?;
    let twists = simples
        .iter()
        .map(|m| {
            let a = m.act(&vinv);
            let t = a[(0, 0)].clone();
            if a != Matrix::identity(f, m.dim()).scale(&t) {
                return Err(Error::Invalid("ribbon element does not act by a scalar on a simple".into()));
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = simples.iter().map(|m| m.dim()).collect();
    Ok(DoubleModularData { characters: chars, s_characters, twists, dims })
}

/// Matrix of a class-function endomorphism in the orbit-indicator basis.
pub fn in_orbit_basis(d: &DrinfeldDouble, orbits: &[CommutingPairOrbit], full: &Matrix) -> Result<Matrix> {
    let f = d.field();
    let n = d.algebra().dim();
    let inds: Vec<Vector> = orbits.iter().map(|o| d.orbit_indicator(o)).collect();
    let basis = Matrix::from_columns(f, n, &inds);
    let cols = inds
        .iter()
        .map(|c| basis.solve(&full.mul_vec(c))?.ok_or_else(|| Error::Invalid("image is not a class function".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(f, orbits.len(), &cols))
}

/// `true` when `m` is `c` times the permutation matrix of `perm` (column `i` has its entry in row `perm[i]`).
pub fn is_scaled_permutation(m: &Matrix, perm: &[usize], c: &FieldElement) -> bool {
    (0..m.cols()).all(|i| (0..m.rows()).all(|r| if r == perm[i] { m[(r, i)] == *c } else { m[(r, i)].is_zero() }))
}
