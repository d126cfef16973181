use std::fmt::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use verlinde_core::doubles::{double_simples, smatrix_modular, DrinfeldDouble};
use verlinde_core::frobenius::{BlockCertificate, FrobeniusAlgebra};
use verlinde_core::fusion::{
    bracket_witness, diagonalization_check, diagonalization_on_hh0, fusion_oracle, k0_check, multiplicities_in,
    verlinde_check, verlinde_coefficients, ModularData, Multiplicities,
};
use verlinde_core::group::{compose, pbun_orbits, sl2z_action, IntMatrix2, S_MATRIX, T_MATRIX};
use verlinde_core::hochschild::{circle_sign_identity_holds, cohomology, homology, homotopy_identity_holds, Cochain};
use verlinde_core::hopf::{corgrv_check, HopfAlgebra, RADFORD_CONVENTION};
use verlinde_core::module::simple_modules;
use verlinde_core::{AlgebraModule, Error, FieldElement, FieldSpec, Matrix, Result};

use crate::inputs::Res;
use crate::{Command, Failure, Inputs};

pub struct Report {
    pub text: String,
    pub passed: bool,
}

/// Accumulates report text and named checks; `finish` appends the verdict lines.
struct Out {
    check: &'static str,
    text: String,
    checks: Vec<(String, bool, String)>,
}

impl Out {
    fn new(check: &'static str) -> Out {
        Out { check, text: String::new(), checks: vec![] }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn matrix(&mut self, title: &str, m: &Matrix) {
        self.line(format!("{title}:"));
        for row in m.to_string().lines() {
            self.line(format!("  {row}"));
        }
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push((name.into(), passed, String::new()));
    }

    /// Records a module-level verification; its error message is the failure detail.
    fn verify(&mut self, name: &str, r: Result<()>) {
        let detail = r.err().map(|e| e.to_string()).unwrap_or_default();
        self.checks.push((name.into(), detail.is_empty(), detail));
    }

    fn finish(mut self) -> Report {
        let width = self.checks.iter().map(|c| c.0.chars().count()).max().unwrap_or(0);
        let passed = self.checks.iter().all(|c| c.1);
        for (name, ok, detail) in std::mem::take(&mut self.checks) {
            let pad = width - name.chars().count();
            let mut l = format!("  {name}{}  {}", " ".repeat(pad), if ok { "ok" } else { "FAILED" });
            if !detail.is_empty() {
                write!(l, "  {detail}").unwrap();
            }
            self.line(l);
        }
        self.line(format!("RESULT {} {}", self.check, if passed { "PASS" } else { "FAIL" }));
        Report { text: self.text, passed }
    }
}

fn vector(v: &[FieldElement]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("X{i}")).collect()
}

fn describe_double(d: &DrinfeldDouble) -> String {
    format!("D({}) over {}, dimension {}", d.group.name(), d.field().spec(), d.hopf.dim())
}

pub fn run(command: &Command, inputs: &Inputs) -> Res<Report> {
    match command {
        Command::ModularData => modular_data(inputs),
        Command::Fusion => fusion(inputs),
        Command::VerlindeCheck => verlinde(inputs),
        Command::Diagonalize => diagonalize(inputs),
        Command::StarProduct => star_product(inputs),
        Command::Cartan => cartan(inputs),
        Command::Blocks => blocks(inputs),
        Command::Hochschild { cochains } => hochschild(inputs, *cochains),
        Command::Bracket => bracket(inputs),
        Command::HomotopyCheck { trials, seed } => homotopy(inputs, *trials, *seed),
        Command::Sl2z { matrix } => sl2z(inputs, matrix.as_deref()),
        Command::K0Check => k0(inputs),
        Command::CorgrvCheck => corgrv(inputs),
    }
}

struct DoubleData {
    double: DrinfeldDouble,
    simples: Vec<AlgebraModule>,
    dims: Vec<usize>,
    modular: ModularData,
    characters: Vec<Vec<FieldElement>>,
}

fn double_data(inputs: &Inputs) -> Res<DoubleData> {
    let double = inputs.double()?;
    let simples = double_simples(&double, None)?;
    let dm = smatrix_modular(&double, &simples)?;
    let modular = ModularData::from_double(&dm)?;
    Ok(DoubleData { double, simples, dims: dm.dims, modular, characters: dm.characters })
}

fn smatrix_data(inputs: &Inputs) -> Res<Option<ModularData>> {
    Ok(match inputs.smatrix()? {
        Some(s) => Some(ModularData::new(labels(s.rows()), s, None)?),
        None => None,
    })
}

fn modular_data(inputs: &Inputs) -> Res<Report> {
    let mut out = Out::new("modular-data");
    if let Some(md) = smatrix_data(inputs)? {
        out.line(format!("S-matrix over {}, rank {}", md.field().spec(), md.rank()));
        out.matrix("S", md.s());
        out.matrix("S^-1", md.s_inverse());
        out.check("S invertible", true);
        return Ok(out.finish());
    }
    let data = double_data(inputs)?;
    let md = &data.modular;
    out.line(describe_double(&data.double));
    out.line("simple  dim  twist");
    let twists = md.twists().unwrap_or_default();
    for (i, label) in md.labels().iter().enumerate() {
        out.line(format!("{label:>6}  {:>3}  {}", data.dims[i], twists[i]));
    }
    out.matrix("S", md.s());
    if let Some((s4, st3)) = md.modular_relations() {
        out.check("S^4 = 1", s4);
        out.check("(ST)^3 = S^2", st3);
    }
    Ok(out.finish())
}

fn write_fusion(out: &mut Out, n: &Multiplicities) {
    for (i, row) in n.iter().enumerate() {
        for (j, ms) in row.iter().enumerate() {
            let terms: Vec<String> = ms
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(l, &m)| if m == 1 { format!("X{l}") } else { format!("{m} X{l}") })
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            out.line(format!("X{i} x X{j} = {rhs}"));
        }
    }
}

fn hopf_simples(h: &HopfAlgebra) -> Res<Vec<AlgebraModule>> {
    let dec = h.algebra().decompose()?;
    Ok(simple_modules(h.algebra(), &dec)?)
}

fn fusion(inputs: &Inputs) -> Res<Report> {
    let mut out = Out::new("fusion");
    let n = match inputs.hopf()? {
        Some(data) => {
            out.line(format!("Hopf algebra over {}, dimension {}", data.hopf.field().spec(), data.hopf.dim()));
            fusion_oracle(&data.hopf, &hopf_simples(&data.hopf)?)?
        }
        None => {
            let d = inputs.double()?;
            out.line(describe_double(&d));
            fusion_oracle(&d.hopf, &double_simples(&d, None)?)?
        }
    };
    write_fusion(&mut out, &n);
    let k = n.len();
    let unit = (0..k).find(|&u| (0..k).all(|j| (0..k).all(|l| n[u][j][l] == usize::from(j == l))));
    if let Some(u) = unit {
        out.line(format!("unit X{u}"));
    }
    out.check("unit object", unit.is_some());
    Ok(out.finish())
}

fn verlinde(inputs: &Inputs) -> Res<Report> {
    let mut text = String::new();
    let (md, oracle) = match smatrix_data(inputs)? {
        Some(md) => {
            writeln!(text, "S-matrix over {}, rank {}", md.field().spec(), md.rank()).unwrap();
            let oracle = match &inputs.group {
                Some(_) => {
                    let data = double_data(inputs)?;
                    writeln!(text, "oracle: tensor products over {}", describe_double(&data.double)).unwrap();
                    Some(fusion_oracle(&data.double.hopf, &data.simples)?)
                }
                None => None,
            };
            (md, oracle)
        }
        None => {
            let data = double_data(inputs)?;
            writeln!(text, "{}", describe_double(&data.double)).unwrap();
            let oracle = fusion_oracle(&data.double.hopf, &data.simples)?;
            (data.modular, Some(oracle))
        }
    };
    let report = verlinde_check(&md, oracle.as_ref())?;
    text.push_str(&report.to_string());
    Ok(Report { text, passed: report.passed() })
}

fn diagonalize(inputs: &Inputs) -> Res<Report> {
    let mut text = String::new();
    if let Some(md) = smatrix_data(inputs)? {
        writeln!(text, "S-matrix over {}, rank {}; product from the Verlinde coefficients", md.field().spec(), md.rank()).unwrap();
        let report = diagonalization_check(&md, &verlinde_coefficients(&md), None)?;
        text.push_str(&report.to_string());
        return Ok(Report { text, passed: report.passed() });
    }
    let data = double_data(inputs)?;
    let f = data.modular.field().clone();
    writeln!(text, "{}", describe_double(&data.double)).unwrap();
    let product = multiplicities_in(&f, &fusion_oracle(&data.double.hopf, &data.simples)?);
    let dims: Vec<FieldElement> = data.dims.iter().map(|&x| f.from_u64(x as u64)).collect();
    let fusion_side = diagonalization_check(&data.modular, &product, Some(&dims))?;
    text.push_str(&fusion_side.to_string());
    // the same through the star product on A/[A, A], with the regular trace as form
    let alg = data.double.algebra();
    let regular: Vec<FieldElement> = (0..alg.dim()).map(|k| alg.left_mult_matrix(&alg.basis(k)).trace()).collect();
    let frob = FrobeniusAlgebra::new(alg.clone(), regular)?;
    let hh0_side = diagonalization_on_hh0(&frob, &data.characters, &data.dims)?;
    text.push_str(&hh0_side.to_string());
    Ok(Report { text, passed: fusion_side.passed() && hh0_side.passed() })
}

fn describe_algebra(out: &mut Out, a: &FrobeniusAlgebra) {
    let alg = a.algebra();
    out.line(format!("algebra over {}, dimension {}", alg.field().spec(), alg.dim()));
    out.line(format!("form {}", vector(a.form())));
}

fn star_product(inputs: &Inputs) -> Res<Report> {
    let a = inputs.frobenius()?;
    let alg = a.algebra().clone();
    let mut out = Out::new("star-product");
    describe_algebra(&mut out, &a);
    let (e, f) = a.dual_bases();
    out.line("dual bases:");
    for (x, y) in e.iter().zip(&f) {
        out.line(format!("  {} | {}", vector(x), vector(y)));
    }
    out.line("star products of basis elements:");
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            out.line(format!("  e{i} * e{j} = {}", vector(&a.star(&alg.basis(i), &alg.basis(j)))));
        }
    }
    out.verify("Casimir element", a.check_casimir());
    out.verify("coassociative and counital", a.check_coalgebra());
    out.verify("star on A/[A,A]", a.check_star_on_hh0());
    Ok(out.finish())
}

fn cartan(inputs: &Inputs) -> Res<Report> {
    let a = inputs.frobenius()?;
    let alg = a.algebra().clone();
    let dec = alg.decompose()?;
    let mut out = Out::new("cartan");
    describe_algebra(&mut out, &a);
    out.line(format!("{} primitive idempotents, {} classes", dec.idempotents.len(), dec.representatives.len()));
    out.line("Cartan matrix:");
    for row in &dec.cartan {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        out.line(format!("  [{}]", cells.join("")));
    }
    out.line("handle traces on class representatives:");
    let reps = dec.representative_idempotents();
    for p in &reps {
        let cells: Vec<String> = reps.iter().map(|r| a.handle_trace(p, r).map(|x| x.to_string())).collect::<Result<_>>()?;
        out.line(format!("  [{}]", cells.join(" ")));
    }
    let dims: Vec<String> = reps.iter().map(|p| a.modified_dimension(p).map(|x| x.to_string())).collect::<Result<_>>()?;
    out.line(format!("modified dimensions [{}]", dims.join(", ")));
    out.verify("handle traces equal Cartan entries", a.check_handle_traces(&dec.idempotents));
    Ok(out.finish())
}

fn blocks(inputs: &Inputs) -> Res<Report> {
    let a = inputs.frobenius()?;
    let dec = a.algebra().decompose()?;
    let mut out = Out::new("blocks");
    describe_algebra(&mut out, &a);
    for (l, block) in dec.blocks.classes.iter().enumerate() {
        let members: Vec<String> = block.iter().map(|c| format!("P{c}")).collect();
        out.line(format!("block {l}: {}", members.join(" ")));
    }
    match a.certify_block_diagonal(&dec) {
        BlockCertificate::Pass => out.check("star is block diagonal", true),
        BlockCertificate::Counterexample { blocks: (l, m), left, right } => {
            let detail = format!("blocks ({l},{m}): {} * {}", vector(&left), vector(&right));
            out.checks.push(("star is block diagonal".into(), false, detail));
        }
    }
    Ok(out.finish())
}

fn hochschild(inputs: &Inputs, cochains: bool) -> Res<Report> {
    let alg = inputs.structure_algebra()?;
    let bound = inputs.degree_bound();
    let mut out = Out::new("hochschild");
    out.line(format!("algebra over {}, dimension {}, degree bound {bound}", alg.field().spec(), alg.dim()));
    out.line("degree  HH^p  HH_p");
    let mut reps = vec![];
    for p in 0..bound {
        let co = cohomology(&alg, p, bound)?;
        let ho = homology(&alg, p, bound)?;
        out.line(format!("{p:>6}  {:>4}  {:>4}", co.dim(), ho.dim()));
        if cochains {
            reps.push(co.representatives()?);
        }
    }
    for r in reps.iter().flatten() {
        out.text.push_str(&r.to_string());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut squares_vanish = true;
    for p in 0..bound.saturating_sub(1) {
        let c = Cochain::random(&alg, p, bound, &mut rng)?;
        squares_vanish &= c.differential()?.differential()?.is_zero();
    }
    out.check("d^2 = 0 on random cochains", squares_vanish);
    Ok(out.finish())
}

fn bracket_prime(inputs: &Inputs) -> Res<u64> {
    if let Some(spec) = &inputs.field {
        return match spec.parse::<FieldSpec>()? {
            FieldSpec::Prime(p) => Ok(p),
            other => Err(Error::Unsupported(format!("the bracket witness lives over a prime field, not {other}")).into()),
        };
    }
    match inputs.characteristic {
        Some(p) if p > 0 => Ok(p),
        _ => Err(Failure::Usage("bracket needs --char <p> or --field fp:<p>".into())),
    }
}

fn bracket(inputs: &Inputs) -> Res<Report> {
    let p = bracket_prime(inputs)?;
    let w = bracket_witness(p)?;
    let mut out = Out::new("bracket");
    out.line(format!("F_{p}[Z_{p}], basis g^0 .. g^{}", p - 1));
    for (name, c) in [("alpha", &w.alpha), ("beta", &w.beta), ("[alpha, beta]", &w.bracket)] {
        out.line(format!("{name}:"));
        out.text.push_str(&c.to_string());
    }
    out.line(format!("[alpha, beta] = -alpha: {}", if w.is_minus_alpha { "yes" } else { "no" }));
    out.check("bracket class in HH^1 is nonzero", w.nonzero_class);
    Ok(out.finish())
}

fn homotopy(inputs: &Inputs, trials: usize, seed: u64) -> Res<Report> {
    let alg = inputs.structure_algebra()?;
    let bound = inputs.degree_bound();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Out::new("homotopy-check");
    out.line(format!("algebra over {}, dimension {}, degree bound {bound}, {trials} trials per pair", alg.field().spec(), alg.dim()));
    out.line("p  q  homotopy  signs");
    let (mut all_h, mut all_s) = (true, true);
    // dα, dβ and α ⌣ β must all stay within the bound
    for p in 0..bound {
        for q in (0..bound).filter(|q| p + q <= bound) {
            let (mut h, mut s) = (true, true);
            for _ in 0..trials {
                let a = Cochain::random(&alg, p, bound, &mut rng)?;
                let b = Cochain::random(&alg, q, bound, &mut rng)?;
                h &= homotopy_identity_holds(&a, &b)?;
                s &= circle_sign_identity_holds(&a, &b)?;
            }
            let word = |x: bool| if x { "ok" } else { "FAILED" };
            out.line(format!("{p}  {q}  {:>8}  {:>5}", word(h), word(s)));
            all_h &= h;
            all_s &= s;
        }
    }
    out.check("hd + dh = swap - cup", all_h);
    out.check("signed sum of partial compositions", all_s);
    Ok(out.finish())
}

fn permutation(p: &[usize]) -> String {
    let items: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(" "))
}

fn parse_matrix(text: &str) -> Res<IntMatrix2> {
    let entries: Vec<i64> = text
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("--matrix {text}: expected four integers a,b,c,d")))?;
    match entries[..] {
        [a, b, c, d] => Ok([[a, b], [c, d]]),
        _ => Err(Failure::Usage(format!("--matrix {text}: expected four integers a,b,c,d"))),
    }
}

fn sl2z(inputs: &Inputs, matrix: Option<&str>) -> Res<Report> {
    let g = inputs.group()?;
    let orbits = pbun_orbits(&g);
    let mut out = Out::new("sl2z");
    out.line(format!("group {} of order {}, {} orbits of commuting pairs", g.name(), g.order(), orbits.len()));
    out.line("orbit  representative  size");
    for (i, o) in orbits.iter().enumerate() {
        let (a, b) = o.representative;
        out.line(format!("{i:>5}  {:>14}  {:>4}", format!("({a},{b})"), o.size()));
    }
    let s = sl2z_action(&g, &orbits, &S_MATRIX)?;
    let t = sl2z_action(&g, &orbits, &T_MATRIX)?;
    out.line(format!("S {}", permutation(&s)));
    out.line(format!("T {}", permutation(&t)));
    if let Some(m) = matrix {
        let m = parse_matrix(m)?;
        out.line(format!("M {}", permutation(&sl2z_action(&g, &orbits, &m)?)));
    }
    let id: Vec<usize> = (0..orbits.len()).collect();
    let s2 = compose(&s, &s);
    let st = compose(&s, &t);
    out.check("S^4 = 1", compose(&s2, &s2) == id);
    out.check("(ST)^3 = S^2", compose(&st, &compose(&st, &st)) == s2);
    Ok(out.finish())
}

fn k0(inputs: &Inputs) -> Res<Report> {
    let d = inputs.double()?;
    let report = k0_check(&d)?;
    Ok(Report { text: format!("{}\n{report}", describe_double(&d)), passed: report.passed() })
}

fn corgrv(inputs: &Inputs) -> Res<Report> {
    let mut out = Out::new("corgrv");
    let report = match inputs.hopf()? {
        Some(data) => {
            let qt = data.braiding.ok_or_else(|| Error::Invalid("Hopf file has no R-matrix".into()))?;
            out.line(format!("Hopf algebra over {}, dimension {}", data.hopf.field().spec(), data.hopf.dim()));
            let simples = hopf_simples(&data.hopf)?;
            corgrv_check(&data.hopf, &qt, &simples, RADFORD_CONVENTION)?
        }
        None => {
            let d = inputs.double()?;
            out.line(describe_double(&d));
            let simples = double_simples(&d, None)?;
            corgrv_check(&d.hopf, &d.qt, &simples, RADFORD_CONVENTION)?
        }
    };
    out.line("i  j  multiplicities  lhs = rhs");
    for pair in &report.pairs {
        let ms: Vec<String> = pair.multiplicities.iter().map(|m| m.to_string()).collect();
        out.line(format!("{}  {}  [{}]  {}", pair.i, pair.j, ms.join(" "), if pair.lhs == pair.rhs { "yes" } else { "no" }));
    }
    out.check("internal characters", report.passed());
    Ok(out.finish())
}
