//! Text formats for algebras, Frobenius forms, Hopf data, groups, centralizer
//! irreps and S-matrices. Blank lines and lines starting with `#` are ignored;
//! indices are 0-based; scalars are written without internal spaces.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::StructureAlgebra;
use crate::doubles::{IrrepCatalog, IrrepEntry};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, FieldSpec};
use crate::frobenius::FrobeniusAlgebra;
use crate::group::FiniteGroup;
use crate::hopf::{HopfAlgebra, QuasiTriangular, Tensor};
use crate::linalg::{Matrix, Vector};

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let it: Box<dyn Iterator<Item = (usize, Vec<&'a str>)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
                .filter(|(_, w)| !w.is_empty()),
        );
        Lines { inner: it.peekable() }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        self.inner.next()
    }

    fn peek_keyword(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|(_, w)| w[0])
    }

    fn expect(&mut self, what: &str, last_line: usize) -> Result<(usize, Vec<&'a str>)> {
        self.next().ok_or_else(|| Error::parse(last_line + 1, format!("unexpected end of input, expected {what}")))
    }
}

fn index(word: &str, line: usize, bound: usize) -> Result<usize> {
    let i: usize = word.parse().map_err(|_| Error::parse(line, format!("`{word}` is not an index")))?;
    if i >= bound {
        return Err(Error::parse(line, format!("index {i} out of range 0..{bound}")));
    }
    Ok(i)
}

fn count(word: &str, line: usize) -> Result<usize> {
    word.parse().map_err(|_| Error::parse(line, format!("`{word}` is not a count")))
}

fn scalar(field: &Field, word: &str, line: usize) -> Result<FieldElement> {
    field.parse_element(word).map_err(|e| e.at_line(line))
}

fn scalars(field: &Field, words: &[&str], n: usize, line: usize) -> Result<Vector> {
    if words.len() != n {
        return Err(Error::parse(line, format!("expected {n} scalars, found {}", words.len())));
    }
    words.iter().map(|w| scalar(field, w, line)).collect()
}

fn header(lines: &mut Lines<'_>, keyword: &str) -> Result<(usize, Field, usize)> {
    let (ln, w) = lines.expect(&format!("`{keyword} <field> <n>`"), 0)?;
    if w.len() != 3 || w[0] != keyword {
        return Err(Error::parse(ln, format!("expected `{keyword} <field> <n>`")));
    }
    let spec: FieldSpec = w[1].parse().map_err(|e: Error| e.at_line(ln))?;
    let field = Field::new(spec).map_err(|e| Error::parse(ln, e.to_string()))?;
    Ok((ln, field, count(w[2], ln)?))
}

/// Algebra block: header, structure constants, `unit`, optional `form`.
struct AlgebraBlock {
    field: Field,
    dim: usize,
    constants: Vec<(usize, usize, usize, FieldElement)>,
    unit: Vector,
    form: Option<Vector>,
    last_line: usize,
}

fn algebra_block(lines: &mut Lines<'_>) -> Result<AlgebraBlock> {
    let (mut last, field, dim) = header(lines, "algebra")?;
    let mut constants = vec![];
    let mut unit = None;
    let mut form = None;
    while let Some(kw) = lines.peek_keyword() {
        let is_constant = kw.parse::<usize>().is_ok();
        if !is_constant && kw != "unit" && kw != "form" {
            break;
        }
        let (ln, w) = lines.next().unwrap();
        last = ln;
        match w[0] {
            "unit" => {
                if unit.is_some() {
                    return Err(Error::parse(ln, "duplicate `unit` line"));
                }
                unit = Some(scalars(&field, &w[1..], dim, ln)?);
            }
            "form" => {
                if form.is_some() {
                    return Err(Error::parse(ln, "duplicate `form` line"));
                }
                form = Some(scalars(&field, &w[1..], dim, ln)?);
            }
            _ => {
                if unit.is_some() {
                    return Err(Error::parse(ln, "structure constant after `unit`"));
                }
                if w.len() != 4 {
                    return Err(Error::parse(ln, "expected `i j k value`"));
                }
                constants.push((index(w[0], ln, dim)?, index(w[1], ln, dim)?, index(w[2], ln, dim)?, scalar(&field, w[3], ln)?));
            }
        }
    }
    let unit = unit.ok_or_else(|| Error::parse(last + 1, "missing `unit` line"))?;
    Ok(AlgebraBlock { field, dim, constants, unit, form, last_line: last })
}

fn no_trailing(lines: &mut Lines<'_>) -> Result<()> {
    match lines.next() {
        None => Ok(()),
        Some((ln, w)) => Err(Error::parse(ln, format!("unexpected `{}`", w[0]))),
    }
}

/// Parses an algebra file; the optional `form` line is returned alongside.
pub fn parse_algebra(text: &str) -> Result<(StructureAlgebra, Option<Vector>)> {
    let mut lines = Lines::new(text);
    let b = algebra_block(&mut lines)?;
    no_trailing(&mut lines)?;
    let alg = StructureAlgebra::new(&b.field, b.dim, b.constants, b.unit)?;
    Ok((alg, b.form))
}

/// Parses an algebra file that carries a `form` line.
pub fn parse_frobenius(text: &str) -> Result<FrobeniusAlgebra> {
    let (alg, form) = parse_algebra(text)?;
    let form = form.ok_or_else(|| Error::parse(0, "missing `form` line"))?;
    FrobeniusAlgebra::from_algebra(alg, form)
}

pub fn write_algebra(alg: &StructureAlgebra, form: Option<&[FieldElement]>) -> String {
    let mut s = String::new();
    writeln!(s, "algebra {} {}", alg.field().spec(), alg.dim()).unwrap();
    for (i, j, k, c) in alg.constants() {
        writeln!(s, "{i} {j} {k} {c}").unwrap();
    }
    writeln!(s, "unit {}", join(&alg.one())).unwrap();
    if let Some(f) = form {
        writeln!(s, "form {}", join(f)).unwrap();
    }
    s
}

fn join(v: &[FieldElement]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Hopf data with an optional braiding.
pub struct HopfData {
    pub hopf: HopfAlgebra,
    pub braiding: Option<QuasiTriangular>,
}

/// Parses a Hopf file: algebra block, `coproduct i j k value` lines,
/// `counit …`, `antipode` followed by its matrix rows (column `i` is `S(e_i)`),
/// then optional `R i j value` lines and `ribbon …`.
pub fn parse_hopf(text: &str) -> Result<HopfData> {
    let mut lines = Lines::new(text);
    let b = algebra_block(&mut lines)?;
    let (field, n) = (b.field.clone(), b.dim);
    let mut last = b.last_line;
    let mut coproduct = vec![];
    let mut counit = None;
    let mut antipode = None;
    let mut r = Tensor::new();
    let mut has_r = false;
    let mut ribbon = None;
    while let Some((ln, w)) = lines.next() {
        last = ln;
        match w[0] {
            "coproduct" => {
                if w.len() != 5 {
                    return Err(Error::parse(ln, "expected `coproduct i j k value`"));
                }
                coproduct.push((index(w[1], ln, n)?, index(w[2], ln, n)?, index(w[3], ln, n)?, scalar(&field, w[4], ln)?));
            }
            "counit" => counit = Some(scalars(&field, &w[1..], n, ln)?),
            "antipode" => {
                if w.len() != 1 {
                    return Err(Error::parse(ln, "`antipode` takes its rows on the following lines"));
                }
                let mut rows = Vec::with_capacity(n);
                for _ in 0..n {
                    let (rl, rw) = lines.expect("an antipode row", last)?;
                    last = rl;
                    rows.push(scalars(&field, &rw, n, rl)?);
                }
                antipode = Some(Matrix::from_rows(&field, rows).map_err(|e| e.at_line(last))?);
            }
            "R" => {
                if w.len() != 4 {
                    return Err(Error::parse(ln, "expected `R i j value`"));
                }
                r.add_term(vec![index(w[1], ln, n)?, index(w[2], ln, n)?], &scalar(&field, w[3], ln)?);
                has_r = true;
            }
            "ribbon" => ribbon = Some(scalars(&field, &w[1..], n, ln)?),
            other => return Err(Error::parse(ln, format!("unexpected `{other}`"))),
        }
    }
    let counit = counit.ok_or_else(|| Error::parse(last + 1, "missing `counit` line"))?;
    let antipode = antipode.ok_or_else(|| Error::parse(last + 1, "missing `antipode` block"))?;
    let alg = StructureAlgebra::new(&field, n, b.constants, b.unit)?.into_ref();
    let hopf = HopfAlgebra::new(alg, coproduct, counit, antipode)?;
    let braiding = match (has_r, ribbon) {
        (false, None) => None,
        (true, Some(v)) => Some(QuasiTriangular::new(&hopf, r, v)?),
        (true, None) => return Err(Error::parse(last + 1, "`R` lines without a `ribbon` line")),
        (false, Some(_)) => return Err(Error::parse(last + 1, "`ribbon` line without `R` lines")),
    };
    Ok(HopfData { hopf, braiding })
}

pub fn write_hopf(h: &HopfAlgebra, braiding: Option<&QuasiTriangular>) -> String {
    let mut s = write_algebra(h.algebra(), None);
    for i in 0..h.dim() {
        for (idx, c) in &h.coproduct_basis(i).terms {
            writeln!(s, "coproduct {i} {} {} {c}", idx[0], idx[1]).unwrap();
        }
    }
    writeln!(s, "counit {}", join(h.counit())).unwrap();
    writeln!(s, "antipode").unwrap();
    for r in h.antipode().row_vectors() {
        writeln!(s, "{}", join(&r)).unwrap();
    }
    if let Some(qt) = braiding {
        for (idx, c) in &qt.r.terms {
            writeln!(s, "R {} {} {c}", idx[0], idx[1]).unwrap();
        }
        writeln!(s, "ribbon {}", join(&qt.ribbon)).unwrap();
    }
    s
}

/// `group <n>` followed by `n` rows of the multiplication table.
pub fn parse_group(text: &str, name: &str) -> Result<FiniteGroup> {
    let mut lines = Lines::new(text);
    let (ln, w) = lines.expect("`group <n>`", 0)?;
    if w.len() != 2 || w[0] != "group" {
        return Err(Error::parse(ln, "expected `group <n>`"));
    }
    let n = count(w[1], ln)?;
    let mut last = ln;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (rl, rw) = lines.expect("a table row", last)?;
        last = rl;
        if rw.len() != n {
            return Err(Error::parse(rl, format!("expected {n} entries, found {}", rw.len())));
        }
        rows.push(rw.iter().map(|x| index(x, rl, n)).collect::<Result<Vec<_>>>()?);
    }
    no_trailing(&mut lines)?;
    FiniteGroup::new(name, rows)
}

pub fn write_group(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut s = format!("group {n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| g.mul(a, b).to_string()).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

/// `generators <class> g…` declares the generator set of a centralizer; each
/// `irrep <class> <dim> <n>` is followed by one `dim × dim` matrix per
/// generator with entries in `Q(ζ_n)` (`n = 1` for `Q`).
pub fn parse_irreps(text: &str) -> Result<IrrepCatalog> {
    let mut lines = Lines::new(text);
    let mut gens: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut irreps: BTreeMap<usize, Vec<Vec<Matrix>>> = BTreeMap::new();
    let mut last;
    while let Some((ln, w)) = lines.next() {
        last = ln;
        match w[0] {
            "generators" => {
                if w.len() < 2 {
                    return Err(Error::parse(ln, "expected `generators <class> g…`"));
                }
                let cid = count(w[1], ln)?;
                let g = w[2..].iter().map(|x| count(x, ln)).collect::<Result<Vec<_>>>()?;
                if gens.insert(cid, g).is_some() {
                    return Err(Error::parse(ln, format!("generators for class {cid} declared twice")));
                }
            }
            "irrep" => {
                if w.len() != 4 {
                    return Err(Error::parse(ln, "expected `irrep <class> <dim> <n>`"));
                }
                let cid = count(w[1], ln)?;
                let dim = count(w[2], ln)?;
                let order = count(w[3], ln)?;
                let field = match order {
                    0 => return Err(Error::parse(ln, "cyclotomic order must be positive")),
                    1 => Field::rationals(),
                    m => Field::cyclotomic(m as u64),
                };
                let ngens = gens
                    .get(&cid)
                    .ok_or_else(|| Error::parse(ln, format!("irrep for class {cid} before its `generators` line")))?
                    .len();
                let mut mats = Vec::with_capacity(ngens);
                for _ in 0..ngens {
                    let mut rows = Vec::with_capacity(dim);
                    for _ in 0..dim {
                        let (rl, rw) = lines.expect("a matrix row", last)?;
                        last = rl;
                        rows.push(scalars(&field, &rw, dim, rl)?);
                    }
                    mats.push(Matrix::from_rows(&field, rows).map_err(|e| e.at_line(last))?);
                }
                irreps.entry(cid).or_default().push(mats);
            }
            other => return Err(Error::parse(ln, format!("unexpected `{other}`"))),
        }
    }
    let mut cat = IrrepCatalog::default();
    for (cid, generators) in gens {
        let irreps = irreps.remove(&cid).unwrap_or_default();
        cat.entries.insert(cid, IrrepEntry { generators, irreps });
    }
    Ok(cat)
}

/// `smatrix <field> <n>` followed by `n` rows.
pub fn parse_smatrix(text: &str) -> Result<Matrix> {
    let mut lines = Lines::new(text);
    let (ln, field, n) = header(&mut lines, "smatrix")?;
    let mut last = ln;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (rl, rw) = lines.expect("a matrix row", last)?;
        last = rl;
        rows.push(scalars(&field, &rw, n, rl)?);
    }
    no_trailing(&mut lines)?;
    Matrix::from_rows(&field, rows)
}

pub fn write_smatrix(s: &Matrix) -> String {
    let mut out = format!("smatrix {} {}\n", s.field().spec(), s.rows());
    for r in s.row_vectors() {
        writeln!(out, "{}", join(&r)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{frobenius_by_name, truncated_polynomial};
    use crate::doubles::drinfeld_double;

    #[test]
    fn algebra_roundtrip() {
        let a = frobenius_by_name("fp-truncated-3", None).unwrap();
        let text = write_algebra(a.algebra(), Some(a.form()));
        let b = parse_frobenius(&text).unwrap();
        assert_eq!(b.algebra().constants(), a.algebra().constants());
        assert_eq!(b.form(), a.form());
        assert_eq!(write_algebra(b.algebra(), Some(b.form())), text);
    }

    #[test]
    fn algebra_with_comments() {
        let text = "# dual numbers\nalgebra q 2\n0 0 0 1\n0 1 1 1\n1 0 1 1 # x·1\n\nunit 1 0\nform 0 1\n";
        let (alg, form) = parse_algebra(text).unwrap();
        assert_eq!(alg.constants(), truncated_polynomial(&Field::rationals(), 2).constants());
        assert!(form.is_some());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("algebra q 2\n0 0 0 1\n0 5 1 1\nunit 1 0\n", 3),
            ("algebra q 2\n0 0 0 x\nunit 1 0\n", 2),
            ("algebra q 2\n0 0 0 1\n", 3),
            ("algebra q 2\nunit 1 0\nunit 1 0\n", 3),
            ("algebra fp:4 2\n", 1),
            ("algebra q 1\n0 0 0 1\nunit 1\nextra\n", 4),
        ];
        for (text, line) in cases {
            match parse_algebra(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn nonassociative_file_is_rejected() {
        // x² = 1 and x·1 = 0 cannot be associative with unit e_0
        let text = "algebra q 2\n0 0 0 1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 1\nunit 1 0\n";
        assert!(parse_algebra(text).is_ok());
        let bad = "algebra q 2\n0 0 0 1\n0 1 1 1\n1 1 0 1\nunit 1 0\n";
        assert!(matches!(parse_algebra(bad), Err(Error::Invalid(_))));
    }

    #[test]
    fn hopf_roundtrip_and_corruption() {
        let d = drinfeld_double(&FiniteGroup::cyclic(2), &Field::rationals()).unwrap();
        let text = write_hopf(&d.hopf, Some(&d.qt));
        let back = parse_hopf(&text).unwrap();
        assert!(back.braiding.is_some());
        assert_eq!(write_hopf(&back.hopf, back.braiding.as_ref()), text);
        // break the counit
        let bad = text.replace("counit 1 1 0 0", "counit 1 0 0 0");
        assert_ne!(bad, text);
        assert!(matches!(parse_hopf(&bad), Err(Error::Invalid(_))));
        let truncated: String = text.lines().take_while(|l| !l.starts_with("antipode")).map(|l| format!("{l}\n")).collect();
        assert!(matches!(parse_hopf(&truncated), Err(Error::Parse { .. })));
    }

    #[test]
    fn group_roundtrip() {
        let g = FiniteGroup::symmetric3();
        let h = parse_group(&write_group(&g), "s3").unwrap();
        assert_eq!(g, h);
        assert!(matches!(parse_group("group 2\n0 1\n1 1\n", "x"), Err(Error::Invalid(_))));
        assert!(matches!(parse_group("group 2\n0 1\n", "x"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn irrep_file() {
        let text = "generators 0 1 4\nirrep 0 1 1\n1\n1\nirrep 0 1 1\n-1\n1\nirrep 0 2 3\n0 1\n1 0\n0 -1\n1 -1\n";
        let cat = parse_irreps(text).unwrap();
        assert_eq!(cat.entries[&0].irreps.len(), 3);
        let irreps = crate::doubles::centralizer_irreps(&FiniteGroup::symmetric3(), 0, &Field::cyclotomic(3), Some(&cat)).unwrap();
        assert_eq!(irreps.iter().map(|r| r.dim).collect::<Vec<_>>(), vec![1, 1, 2]);
        assert!(matches!(parse_irreps("irrep 0 1 1\n1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn smatrix_roundtrip() {
        let q = Field::rationals();
        let s = Matrix::from_i64(&q, &[&[1, 1], &[1, -1]]);
        let text = write_smatrix(&s);
        assert_eq!(text, "smatrix q 2\n1 1\n1 -1\n");
        assert_eq!(parse_smatrix(&text).unwrap(), s);
        assert!(matches!(parse_smatrix("smatrix q 2\n1 1\n1\n"), Err(Error::Parse { line: 3, .. })));
    }
}
