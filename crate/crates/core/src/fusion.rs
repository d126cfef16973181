//! Fusion coefficients from modular data, checked against module-theoretic
//! oracles, together with the diagonalization and `K₀` identities.

use std::fmt;

use crate::doubles::{DoubleModularData, DrinfeldDouble};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::frobenius::FrobeniusAlgebra;
use crate::group::{pbun_orbits, sl2z_action, FiniteGroup, IntMatrix2, S_MATRIX};
use crate::hochschild::{cohomology, Cochain, DEFAULT_DEGREE_BOUND};
use crate::hopf::{fusion_multiplicities, HopfAlgebra};
use crate::linalg::{dot, is_zero_vector, unit_vector, vec_axpy, vec_scale, vec_sub, Matrix, Vector};
use crate::module::{hom_space, projective_modules, simple_modules, AlgebraModule};

/// Exact coefficient tensor `N[i][j][l]`.
pub type Coefficients = Vec<Vec<Vec<FieldElement>>>;

/// Multiplicity tensor `N[i][j][l]` from an oracle.
pub type Multiplicities = Vec<Vec<Vec<usize>>>;

/// Labels of simple objects (unit first), an `S`-matrix and optional twists.
#[derive(Clone, Debug)]
pub struct ModularData {
    labels: Vec<String>,
    s: Matrix,
    s_inv: Matrix,
    t: Option<Vec<FieldElement>>,
}

impl ModularData {
    pub fn new(labels: Vec<String>, s: Matrix, t: Option<Vec<FieldElement>>) -> Result<ModularData> {
        let n = labels.len();
        if s.rows() != n || s.cols() != n {
            return Err(Error::DimensionMismatch(format!("{} labels for a {}x{} S-matrix", n, s.rows(), s.cols())));
        }
        if n == 0 {
            return Err(Error::Invalid("empty modular data".into()));
        }
        if let Some(t) = &t {
            if t.len() != n {
                return Err(Error::DimensionMismatch(format!("{} twists for {} labels", t.len(), n)));
            }
        }
        if let Some(p) = s.row(0).iter().position(|x| x.is_zero()) {
            return Err(Error::Invalid(format!("S_0{p} = 0 in the Verlinde denominator")));
        }
        let s_inv = s.inverse().ok_or_else(|| Error::Singular(format!("S-matrix has rank {} < {}", s.rank(), n)))?;
        Ok(ModularData { labels, s, s_inv, t })
    }

    /// Modular data of a double from the matrix of `𝕊` on characters of its simples.
    pub fn from_double(md: &DoubleModularData) -> Result<ModularData> {
        let labels = (0..md.dims.len()).map(|i| format!("X{i}")).collect();
        ModularData::new(labels, md.s_characters.clone(), Some(md.twists.clone()))
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> &Field {
        self.s.field()
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    pub fn s_inverse(&self) -> &Matrix {
        &self.s_inv
    }

    pub fn twists(&self) -> Option<&[FieldElement]> {
        self.t.as_deref()
    }

    /// `(S⁴ = 1, (ST)³ = S²)` with `T = diag(θ)`; `None` without twists.
    pub fn modular_relations(&self) -> Option<(bool, bool)> {
        let t = self.t.as_ref()?;
        let f = self.field();
        let n = self.rank();
        let mut tm = Matrix::zeros(f, n, n);
        for (i, x) in t.iter().enumerate() {
            tm[(i, i)] = x.clone();
        }
        let s2 = self.s.mul(&self.s);
        let st = self.s.mul(&tm);
        Some((s2.mul(&s2).is_identity(), st.pow(3) == s2))
    }
}

/// `N_ij^l = Σ_p S_ip S_jp (S⁻¹)_pl / S_0p`, exact and unrounded.
pub fn verlinde_coefficients(md: &ModularData) -> Coefficients {
    let n = md.rank();
    let s = md.s();
    let si = md.s_inverse();
    let inv0: Vec<FieldElement> = s.row(0).iter().map(|x| x.inv().expect("checked nonzero")).collect();
    let mut out = vec![vec![Vec::with_capacity(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            // w_p = S_ip S_jp / S_0p
            let w: Vector = (0..n).map(|p| &(&s[(i, p)] * &s[(j, p)]) * &inv0[p]).collect();
            out[i][j] = (0..n).map(|l| dot(&w, &si.column(l))).collect();
        }
    }
    out
}

/// Multiplicities of simples in `X_i ⊗ X_j`: intertwiner dimensions in
/// characteristic 0, Jordan–Hölder multiplicities otherwise.
pub fn fusion_oracle(h: &HopfAlgebra, simples: &[AlgebraModule]) -> Result<Multiplicities> {
    fusion_multiplicities(h, simples)
}

/// First triple whose coefficient is not a non-negative integer.
pub fn integrality_witness(n: &Coefficients) -> Option<(usize, usize, usize)> {
    for (i, a) in n.iter().enumerate() {
        for (j, b) in a.iter().enumerate() {
            for (l, x) in b.iter().enumerate() {
                let ok = match x.as_integer() {
                    Some(k) => k >= 0.into(),
                    None => false,
                };
                if !ok {
                    return Some((i, j, l));
                }
            }
        }
    }
    None
}

/// Verdict on one identity, with a witness triple on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub name: String,
    pub passed: bool,
    pub witness: Option<(usize, usize, usize)>,
    pub detail: String,
}

impl IdentityVerdict {
    fn from_witness(name: &str, witness: Option<(usize, usize, usize)>, detail: impl FnOnce((usize, usize, usize)) -> String) -> IdentityVerdict {
        IdentityVerdict {
            name: name.into(),
            passed: witness.is_none(),
            detail: witness.map(detail).unwrap_or_default(),
            witness,
        }
    }
}

/// Coefficient tensors from each method and per-identity verdicts.
#[derive(Clone, Debug)]
pub struct FusionReport {
    pub check: String,
    pub tensors: Vec<(String, Coefficients)>,
    pub identities: Vec<IdentityVerdict>,
}

impl FusionReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|v| v.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityVerdict> {
        self.identities.iter().find(|v| !v.passed)
    }
}

impl fmt::Display for FusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, t) in &self.tensors {
            writeln!(f, "{name}:")?;
            write_tensor(f, t)?;
        }
        let width = self.identities.iter().map(|v| v.name.len()).max().unwrap_or(0);
        for v in &self.identities {
            let verdict = if v.passed { "ok" } else { "FAILED" };
            write!(f, "  {:width$}  {verdict}", v.name)?;
            if let Some((i, j, l)) = v.witness {
                write!(f, "  at ({i},{j},{l}): {}", v.detail)?;
            }
            writeln!(f)?;
        }
        writeln!(f, "RESULT {} {}", self.check, if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn write_tensor(f: &mut fmt::Formatter<'_>, t: &Coefficients) -> fmt::Result {
    let cells: Vec<Vec<String>> = t
        .iter()
        .flat_map(|a| a.iter().map(|b| b.iter().map(|x| x.to_string()).collect()))
        .collect();
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    for (i, a) in t.iter().enumerate() {
        for j in 0..a.len() {
            write!(f, "  {i:>2} x {j:>2} ->")?;
            for s in &cells[i * a.len() + j] {
                write!(f, " {s:>width$}")?;
            }
            writeln!(f)?;
        }
    }
    Ok(())
}

/// Converts oracle multiplicities to field elements.
pub fn multiplicities_in(field: &Field, m: &Multiplicities) -> Coefficients {
    m.iter().map(|a| a.iter().map(|b| b.iter().map(|&x| field.from_u64(x as u64)).collect()).collect()).collect()
}

fn first_mismatch(a: &Coefficients, b: &Coefficients) -> Option<(usize, usize, usize)> {
    for i in 0..a.len() {
        for j in 0..a[i].len() {
            for l in 0..a[i][j].len() {
                if a[i][j][l] != b[i][j][l] {
                    return Some((i, j, l));
                }
            }
        }
    }
    None
}

/// Verlinde coefficients with integrality and unit checks, compared with an
/// oracle when one is supplied.
pub fn verlinde_check(md: &ModularData, oracle: Option<&Multiplicities>) -> Result<FusionReport> {
    let n = verlinde_coefficients(md);
    let k = md.rank();
    let f = md.field();
    let mut identities = vec![];
    let unit = (0..k).flat_map(|j| (0..k).map(move |l| (j, l))).find(|&(j, l)| {
        n[0][j][l] != if j == l { f.one() } else { f.zero() }
    });
    identities.push(IdentityVerdict::from_witness("unit", unit.map(|(j, l)| (0, j, l)), |(i, j, l)| {
        format!("N = {}", n[i][j][l])
    }));
    identities.push(IdentityVerdict::from_witness("integral", integrality_witness(&n), |(i, j, l)| {
        format!("N = {} is not a non-negative integer", n[i][j][l])
    }));
    let mut tensors = vec![("verlinde".to_string(), n.clone())];
    if let Some(o) = oracle {
        if o.len() != k {
            return Err(Error::DimensionMismatch(format!("oracle of rank {} for modular data of rank {k}", o.len())));
        }
        let o = multiplicities_in(f, o);
        identities.push(IdentityVerdict::from_witness("oracle", first_mismatch(&n, &o), |(i, j, l)| {
            format!("verlinde {} vs oracle {}", n[i][j][l], o[i][j][l])
        }));
        tensors.push(("oracle".to_string(), o));
    }
    Ok(FusionReport { check: "verlinde".into(), tensors, identities })
}

/// Conjugates the product with structure constants `product` by `S̃ = S/S_00`
/// and checks `S̃ᵀ(S̃⁻ᵀe_i · S̃⁻ᵀe_j) = δ_ij d_i⁻¹ e_i` with `d_i = S̃_0i`.
/// When `dims` is given, `S̃_0i` is also compared with them.
pub fn diagonalization_check(md: &ModularData, product: &Coefficients, dims: Option<&[FieldElement]>) -> Result<FusionReport> {
    let k = md.rank();
    if product.len() != k {
        return Err(Error::DimensionMismatch(format!("product of rank {} for modular data of rank {k}", product.len())));
    }
    let f = md.field();
    let scale = md.s()[(0, 0)].inv().expect("checked nonzero");
    let st = md.s().scale(&scale);
    let st_inv_t = md.s_inverse().scale(&scale.inv().expect("nonzero")).transpose();
    let d: Vec<FieldElement> = st.row(0).to_vec();
    let u: Vec<Vector> = (0..k).map(|p| st_inv_t.column(p)).collect();
    let mul = |x: &[FieldElement], y: &[FieldElement]| {
        let mut out = vec![f.zero(); k];
        for a in 0..k {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..k {
                if y[b].is_zero() {
                    continue;
                }
                let c = &x[a] * &y[b];
                vec_axpy(&mut out, &c, &product[a][b]);
            }
        }
        out
    };
    let stt = st.transpose();
    let mut table = vec![vec![vec![]; k]; k];
    let mut bad = None;
    for i in 0..k {
        for j in 0..k {
            let v = stt.mul_vec(&mul(&u[i], &u[j]));
            let expected = if i == j { vec_scale(&d[i].inv().expect("nonzero"), &unit_vector(f, k, i)) } else { vec![f.zero(); k] };
            if bad.is_none() {
                if let Some(l) = (0..k).find(|&l| v[l] != expected[l]) {
                    bad = Some((i, j, l));
                }
            }
            table[i][j] = v;
        }
    }
    let mut identities = vec![IdentityVerdict::from_witness("diagonal", bad, |(i, j, l)| {
        format!("coefficient {}", table[i][j][l])
    })];
    if let Some(dims) = dims {
        let w = (0..k).find(|&i| d[i] != dims[i]).map(|i| (0, 0, i));
        identities.push(IdentityVerdict::from_witness("normalization", w, |(_, _, i)| {
            format!("S_0{i}/S_00 = {} but d = {}", d[i], dims[i])
        }));
    }
    Ok(FusionReport { check: "diagonalize".into(), tensors: vec![("conjugated".into(), table)], identities })
}

/// The same diagonalization realized by `⋆` on `A/[A, A]` of a semisimple
/// Frobenius algebra whose form is `c` times the regular trace: with
/// `λ(x_i a) = ch_i(a)` the check is `x_i ⋆ x_j ≡ δ_ij (c² d_i)⁻¹ x_i`.
pub fn diagonalization_on_hh0(a: &FrobeniusAlgebra, characters: &[Vector], dims: &[usize]) -> Result<FusionReport> {
    let alg = a.algebra();
    let f = alg.field();
    let n = alg.dim();
    let regular: Vector = (0..n).map(|k| alg.left_mult_matrix(&alg.basis(k)).trace()).collect();
    let c = a.lambda(&alg.one()) * f.from_u64(n as u64).inv().ok_or_else(|| {
        Error::Unsupported("regular trace normalization needs dim A invertible in the field".into())
    })?;
    let discrepancy = vec_sub(a.form(), &vec_scale(&c, &regular));
    if !is_zero_vector(&discrepancy) {
        let k = discrepancy.iter().position(|x| !x.is_zero()).unwrap();
        return Err(Error::Invalid(format!(
            "form is not a multiple of the regular trace: λ(e_{k}) - {c}·tr(e_{k}) = {}",
            discrepancy[k]
        )));
    }
    let (_, duals) = a.dual_bases();
    let xs: Vec<Vector> = characters
        .iter()
        .map(|ch| {
            let mut x = alg.zero();
            for (chk, fk) in ch.iter().zip(&duals) {
                vec_axpy(&mut x, chk, fk);
            }
            x
        })
        .collect();
    let (_, proj) = alg.hh0();
    let k = xs.len();
    let c2 = &c * &c;
    let mut bad = None;
    let mut table = vec![vec![vec![]; k]; k];
    for i in 0..k {
        for j in 0..k {
            let lhs = proj.mul_vec(&a.star(&xs[i], &xs[j]));
            let rhs = if i == j {
                let kappa = (&c2 * &f.from_u64(dims[i] as u64)).inv().ok_or_else(|| Error::Singular("d_i = 0".into()))?;
                proj.mul_vec(&vec_scale(&kappa, &xs[i]))
            } else {
                vec![f.zero(); proj.rows()]
            };
            if bad.is_none() {
                if let Some(l) = (0..lhs.len()).find(|&l| lhs[l] != rhs[l]) {
                    bad = Some((i, j, l));
                }
            }
            table[i][j] = lhs;
        }
    }
    Ok(FusionReport {
        check: "diagonalize-hh0".into(),
        tensors: vec![],
        identities: vec![IdentityVerdict::from_witness("diagonal", bad, |(i, j, l)| {
            format!("coordinate {} of x_i ⋆ x_j", table[i][j][l])
        })],
    })
}

/// `M_ij^l`: multiplicity of `P_l` in `P_i ⊗ P_j`, read off as
/// `dim Hom(P_i ⊗ P_j, S_l)` for split simple tops `S_l`.
pub fn projective_fusion(h: &HopfAlgebra, projectives: &[AlgebraModule], simples: &[AlgebraModule]) -> Result<Multiplicities> {
    let k = projectives.len();
    let mut out = vec![vec![vec![0; simples.len()]; k]; k];
    for i in 0..k {
        for j in 0..k {
            let t = h.tensor_modules(&projectives[i], &projectives[j])?;
            for (l, s) in simples.iter().enumerate() {
                out[i][j][l] = hom_space(&t, s)?.0;
            }
        }
    }
    Ok(out)
}

/// `𝔰_i' 𝔰_j 𝔰_i'' ≡ Σ_l M_ij^l 𝔰_l mod [A, A]` for `A = D(G)` with the
/// cointegral as Frobenius form, `𝔰_i` the geometric `S` applied to the class
/// of the primitive idempotent `π_i` in the commuting-pair basis.
pub fn k0_check(d: &DrinfeldDouble) -> Result<FusionReport> {
    k0_check_with(d, &S_MATRIX)
}

/// `k0_check` with the orbit permutation of an arbitrary `SL(2, Z)` element in place of `S`.
pub fn k0_check_with(d: &DrinfeldDouble, transform: &IntMatrix2) -> Result<FusionReport> {
    let alg = d.algebra();
    let f = d.field();
    let frob = FrobeniusAlgebra::new(alg.clone(), d.hopf.cointegral()?)?;
    let dec = alg.decompose()?;
    let simples = simple_modules(alg, &dec)?;
    let projectives = projective_modules(alg, &dec);
    let m = projective_fusion(&d.hopf, &projectives, &simples)?;

    let orbits = pbun_orbits(&d.group);
    let perm = sl2z_action(&d.group, &orbits, transform)?;
    let indicators: Vec<Vector> = orbits.iter().map(|o| d.orbit_indicator(o)).collect();
    let reps: Vec<Vector> = orbits.iter().map(|o| unit_vector(f, alg.dim(), d.index(o.representative.0, o.representative.1))).collect();
    let coords = |x: &[FieldElement]| -> Vector { indicators.iter().map(|c| dot(c, x)).collect() };
    let s_elems: Vec<Vector> = dec
        .representative_idempotents()
        .iter()
        .map(|pi| {
            let h = coords(pi);
            let mut s = alg.zero();
            for (o, x) in h.iter().enumerate() {
                vec_axpy(&mut s, x, &reps[perm[o]]);
            }
            s
        })
        .collect();

    let k = s_elems.len();
    let mut bad = None;
    let mut lhs_table = vec![vec![vec![]; k]; k];
    let mut rhs_table = vec![vec![vec![]; k]; k];
    for i in 0..k {
        for j in 0..k {
            let lhs = coords(&frob.star(&s_elems[i], &s_elems[j]));
            let mut rhs_elem = alg.zero();
            for (l, &mult) in m[i][j].iter().enumerate() {
                vec_axpy(&mut rhs_elem, &f.from_u64(mult as u64), &s_elems[l]);
            }
            let rhs = coords(&rhs_elem);
            if bad.is_none() {
                if let Some(o) = (0..lhs.len()).find(|&o| lhs[o] != rhs[o]) {
                    bad = Some((i, j, o));
                }
            }
            lhs_table[i][j] = lhs;
            rhs_table[i][j] = rhs;
        }
    }
    Ok(FusionReport {
        check: "k0".into(),
        tensors: vec![("M".into(), multiplicities_in(&Field::rationals(), &m))],
        identities: vec![IdentityVerdict::from_witness("congruence", bad, |(i, j, o)| {
            format!("orbit coordinate {} vs {}", lhs_table[i][j][o], rhs_table[i][j][o])
        })],
    })
}

/// Two derivations of `F_p[Z_p] ≅ F_p[t]/(t^p)`, `t = g - 1`, with their bracket.
#[derive(Clone, Debug)]
pub struct BracketWitness {
    pub p: u64,
    /// `t ↦ 1`, i.e. `g^k ↦ k g^{k-1}`.
    pub alpha: Cochain,
    /// `t ↦ t`, i.e. `g^k ↦ k (g^k - g^{k-1})`.
    pub beta: Cochain,
    pub bracket: Cochain,
    /// `[α, β] = -α`.
    pub is_minus_alpha: bool,
    /// The bracket is a cocycle that is not a coboundary.
    pub nonzero_class: bool,
}

pub fn bracket_witness(p: u64) -> Result<BracketWitness> {
    if p < 2 || !crate::field::is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not a prime")));
    }
    let field = Field::prime(p);
    let g = FiniteGroup::cyclic(p as usize);
    let alg = g.group_algebra(&field)?.into_ref();
    let n = p as usize;
    // element g^k is basis vector k
    let gk = |k: usize| unit_vector(&field, n, k % n);
    let alpha = Cochain::from_fn(&alg, 1, DEFAULT_DEGREE_BOUND, |t| {
        let k = t[0];
        vec_scale(&field.from_u64(k as u64), &gk(k + n - 1))
    })?;
    let beta = Cochain::from_fn(&alg, 1, DEFAULT_DEGREE_BOUND, |t| {
        let k = t[0];
        vec_scale(&field.from_u64(k as u64), &vec_sub(&gk(k), &gk(k + n - 1)))
    })?;
    let bracket = alpha.bracket(&beta)?;
    let is_minus_alpha = bracket == alpha.scale(&field.from_i64(-1));
    let hh1 = cohomology(&alg, 1, DEFAULT_DEGREE_BOUND)?;
    let nonzero_class = hh1.is_nonzero_class(&bracket)?;
    Ok(BracketWitness { p, alpha, beta, bracket, is_minus_alpha, nonzero_class })
}
