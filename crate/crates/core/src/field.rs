//! Exact scalars: rationals, prime-field residues and cyclotomic numbers.
//!
//! A cyclotomic number in `Q(ζ_n)` is stored as its coefficient vector in the
//! power basis `1, ζ, …, ζ^{φ(n)-1}`, reduced modulo the n-th cyclotomic
//! polynomial, so equality is coefficient-wise.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which ground field a computation lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    Cyclotomic(u64),
}

impl FieldSpec {
    /// Canonical form: `cyc:1` and `cyc:2` are `Q`, and `cyc:2m` with m odd is `cyc:m`.
    pub fn normalized(self) -> FieldSpec {
        match self {
            FieldSpec::Cyclotomic(n) if n <= 2 => FieldSpec::Rationals,
            FieldSpec::Cyclotomic(n) if n % 4 == 2 => FieldSpec::Cyclotomic(n / 2),
            other => other,
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Prime(p) => p,
            _ => 0,
        }
    }

    /// Smallest cyclotomic field containing all m-th roots of unity.
    pub fn with_roots_of_unity(m: u64) -> FieldSpec {
        FieldSpec::Cyclotomic(m.max(1)).normalized()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
            FieldSpec::Cyclotomic(n) => write!(f, "cyc:{n}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        let bad = || Error::parse(0, format!("unknown field `{s}` (expected q, fp:<p> or cyc:<n>)"));
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p.parse().map_err(|_| bad())?;
            return Ok(FieldSpec::Prime(p));
        }
        if let Some(n) = s.strip_prefix("cyc:") {
            let n: u64 = n.parse().map_err(|_| bad())?;
            return Ok(FieldSpec::Cyclotomic(n));
        }
        Err(bad())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Precomputed data for `Q(ζ_n)`.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u64,
    phi: usize,
    /// `reductions[k]` = coefficients of ζ^k in the power basis, for 0 ≤ k < n.
    reductions: Vec<Vec<i64>>,
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = exact_int_div(&num, &den);
        }
    }
    num
}

fn exact_int_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic.
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

impl CyclotomicField {
    pub fn new(n: u64) -> CyclotomicField {
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let mut reductions = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            reductions.push(cur.clone());
            // multiply by ζ, then reduce ζ^phi = -Σ poly[j] ζ^j
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            for j in 0..phi {
                cur[j] -= top * poly[j];
            }
        }
        CyclotomicField { n, phi, reductions }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut raw: Vec<BigRational> = vec![BigRational::zero(); 2 * self.phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        let mut out = raw[..self.phi].to_vec();
        for (k, c) in raw.into_iter().enumerate().skip(self.phi) {
            if c.is_zero() {
                continue;
            }
            let red = &self.reductions[k % self.n as usize];
            for (j, &r) in red.iter().enumerate() {
                if r != 0 {
                    out[j] += &c * BigRational::from_integer(BigInt::from(r));
                }
            }
        }
        out
    }

    /// Inverse via a linear solve against the multiplication-by-`a` matrix.
    fn inv(&self, a: &[BigRational]) -> Option<Vec<BigRational>> {
        let phi = self.phi;
        // column j = a * ζ^j
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); phi + 1]; phi];
        let mut basis = vec![BigRational::zero(); phi];
        for j in 0..phi {
            basis.iter_mut().for_each(|c| *c = BigRational::zero());
            basis[j] = BigRational::one();
            let col = self.mul(a, &basis);
            for i in 0..phi {
                m[i][j] = col[i].clone();
            }
        }
        m[0][phi] = BigRational::one();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=phi {
                        let t = &f * &m[col][c];
                        m[r][c] -= t;
                    }
                }
            }
        }
        Some(m.into_iter().map(|row| row[phi].clone()).collect())
    }

    /// Coefficients of ζ^k.
    pub fn power(&self, k: i64) -> Vec<BigRational> {
        let idx = k.rem_euclid(self.n as i64) as usize;
        self.reductions[idx]
            .iter()
            .map(|&r| BigRational::from_integer(BigInt::from(r)))
            .collect()
    }
}

/// A ground field with whatever precomputed context its arithmetic needs.
#[derive(Clone, Debug)]
pub enum Field {
    Rationals,
    Prime(u64),
    Cyclotomic(Arc<CyclotomicField>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        self.spec() == other.spec()
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        match spec.normalized() {
            FieldSpec::Rationals => Ok(Field::Rationals),
            FieldSpec::Prime(p) => {
                if !is_prime(p) {
                    return Err(Error::Invalid(format!("fp:{p}: {p} is not prime")));
                }
                if p > u32::MAX as u64 {
                    return Err(Error::Unsupported(format!("prime {p} exceeds 32 bits")));
                }
                Ok(Field::Prime(p))
            }
            FieldSpec::Cyclotomic(0) => Err(Error::Invalid("cyc:0 is not a field".into())),
            FieldSpec::Cyclotomic(n) => {
                if n > 1000 {
                    return Err(Error::Unsupported(format!("cyc:{n} is too large")));
                }
                Ok(Field::Cyclotomic(Arc::new(CyclotomicField::new(n))))
            }
        }
    }

    pub fn rationals() -> Field {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Field {
        Field::new(FieldSpec::Prime(p)).expect("prime field")
    }

    pub fn cyclotomic(n: u64) -> Field {
        Field::new(FieldSpec::Cyclotomic(n)).expect("cyclotomic field")
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            Field::Rationals => FieldSpec::Rationals,
            Field::Prime(p) => FieldSpec::Prime(*p),
            Field::Cyclotomic(c) => FieldSpec::Cyclotomic(c.n),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::zero()),
            Field::Prime(p) => FieldElement::Residue { value: 0, p: *p },
            Field::Cyclotomic(c) => FieldElement::Cyclotomic {
                field: c.clone(),
                coeffs: vec![BigRational::zero(); c.phi],
            },
        }
    }

    /// A random element with small integer coordinates, for property tests.
    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match self {
            Field::Prime(p) => FieldElement::Residue { value: rng.gen_range(0..*p), p: *p },
            Field::Rationals => self.from_i64(rng.gen_range(-3..=3)),
            Field::Cyclotomic(c) => FieldElement::Cyclotomic {
                field: c.clone(),
                coeffs: (0..c.phi).map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-2..=2)))).collect(),
            },
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        self.from_rational(&BigRational::from_integer(BigInt::from(v)))
            .expect("integer embeds in every field")
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        match self {
            Field::Prime(p) => FieldElement::Residue { value: v % p, p: *p },
            _ => self
                .from_rational(&BigRational::from_integer(BigInt::from(v)))
                .expect("integer"),
        }
    }

    /// Image of a rational number; fails in characteristic p when the denominator vanishes.
    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElement> {
        match self {
            Field::Rationals => Ok(FieldElement::Rational(r.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let num = r.numer().mod_floor(&pb).to_u64().unwrap();
                let den = r.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(Error::Invalid(format!("{r} has no image in F_{p}")));
                }
                Ok(FieldElement::Residue { value: num * inv_mod(den, *p) % p, p: *p })
            }
            Field::Cyclotomic(c) => {
                let mut coeffs = vec![BigRational::zero(); c.phi];
                coeffs[0] = r.clone();
                Ok(FieldElement::Cyclotomic { field: c.clone(), coeffs })
            }
        }
    }

    /// A primitive m-th root of unity, if the field contains one.
    pub fn root_of_unity(&self, m: u64) -> Option<FieldElement> {
        if m == 0 {
            return None;
        }
        if m == 1 {
            return Some(self.one());
        }
        match self {
            Field::Rationals => (m == 2).then(|| self.from_i64(-1)),
            Field::Prime(p) => {
                if (p - 1) % m != 0 {
                    return None;
                }
                // find an element of exact order m
                (2..*p).chain(std::iter::once(1)).find_map(|g| {
                    let z = pow_mod(g, (p - 1) / m, *p);
                    let exact = (1..m).all(|k| !m.is_multiple_of(k) || pow_mod(z, k, *p) != 1);
                    exact.then_some(FieldElement::Residue { value: z, p: *p })
                })
            }
            Field::Cyclotomic(c) => {
                let n = c.n;
                // ζ_n has order n; -ζ_n has order 2n when n is odd.
                let big = if n % 2 == 1 { 2 * n } else { n };
                if big % m != 0 {
                    return None;
                }
                let zeta = FieldElement::Cyclotomic { field: c.clone(), coeffs: c.power(1) };
                let gen = if big == n { zeta } else { -zeta };
                Some(gen.pow(big / m))
            }
        }
    }

    /// Parses a scalar literal: integers, `a/b`, and for cyclotomic fields
    /// sums of terms like `2`, `-1/2*z`, `3z^2` where `z` is ζ_n.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::parse(0, "empty scalar"));
        }
        let mut total = self.zero();
        for term in split_terms(&s) {
            total = &total + &self.parse_term(&term)?;
        }
        Ok(total)
    }

    fn parse_term(&self, term: &str) -> Result<FieldElement> {
        let bad = || Error::parse(0, format!("bad scalar term `{term}`"));
        let (sign, body) = match term.as_bytes().first() {
            Some(b'-') => (-1, &term[1..]),
            Some(b'+') => (1, &term[1..]),
            _ => (1, term),
        };
        let (coef, power) = match body.find('z') {
            None => (body, None),
            Some(idx) => {
                let coef = body[..idx].trim_end_matches('*');
                let rest = &body[idx + 1..];
                let pw = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
                };
                (coef, Some(pw))
            }
        };
        let r = if coef.is_empty() {
            BigRational::one()
        } else {
            parse_rational(coef).ok_or_else(bad)?
        };
        let r = if sign < 0 { -r } else { r };
        let c = self.from_rational(&r)?;
        match power {
            None => Ok(c),
            Some(k) => match self {
                Field::Cyclotomic(cf) => {
                    let z = FieldElement::Cyclotomic { field: cf.clone(), coeffs: cf.power(k) };
                    Ok(&c * &z)
                }
                _ => Err(Error::parse(0, format!("`z` is not defined over {}", self.spec()))),
            },
        }
    }
}

fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().ok()?;
            let b: BigInt = b.parse().ok()?;
            (!b.is_zero()).then(|| BigRational::new(a, b))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// An exact scalar. All operands of a binary operation must share a field.
#[derive(Clone, Debug)]
pub enum FieldElement {
    Rational(BigRational),
    Residue { value: u64, p: u64 },
    Cyclotomic { field: Arc<CyclotomicField>, coeffs: Vec<BigRational> },
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &FieldElement) -> bool {
        use FieldElement::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a == b,
            (Residue { value: a, p }, Residue { value: b, p: q }) => p == q && a == b,
            (Cyclotomic { field: f, coeffs: a }, Cyclotomic { field: g, coeffs: b }) => {
                f.n == g.n && a == b
            }
            _ => false,
        }
    }
}

impl Eq for FieldElement {}

fn mismatch() -> ! {
    panic!("field mismatch in scalar arithmetic")
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Residue { p, .. } => Field::Prime(*p),
            FieldElement::Cyclotomic { field, .. } => Field::Cyclotomic(field.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Residue { value, .. } => *value == 0,
            FieldElement::Cyclotomic { coeffs, .. } => coeffs.iter().all(|c| c.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Residue { value, .. } => *value == 1,
            FieldElement::Cyclotomic { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(|c| c.is_zero())
            }
        }
    }

    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Residue { value, p } => {
                FieldElement::Residue { value: inv_mod(*value, *p), p: *p }
            }
            FieldElement::Cyclotomic { field, coeffs } => FieldElement::Cyclotomic {
                field: field.clone(),
                coeffs: field.inv(coeffs)?,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, if this scalar lies in the prime subfield of a characteristic-0 field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r.clone()),
            FieldElement::Residue { .. } => None,
            FieldElement::Cyclotomic { coeffs, .. } => {
                coeffs[1..].iter().all(|c| c.is_zero()).then(|| coeffs[0].clone())
            }
        }
    }

    /// Integer value for rationals and cyclotomics in Z; canonical residue in F_p.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            FieldElement::Residue { value, .. } => Some(BigInt::from(*value)),
            _ => self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer()),
        }
    }

    /// Coordinates over Q (length 1 for Q, φ(n) for Q(ζ_n)); `None` in characteristic p.
    pub fn rational_coordinates(&self) -> Option<Vec<BigRational>> {
        match self {
            FieldElement::Rational(r) => Some(vec![r.clone()]),
            FieldElement::Residue { .. } => None,
            FieldElement::Cyclotomic { coeffs, .. } => Some(coeffs.clone()),
        }
    }

    /// Complex conjugation ζ ↦ ζ⁻¹; identity on Q and F_p.
    pub fn conjugate(&self) -> FieldElement {
        match self {
            FieldElement::Cyclotomic { field, coeffs } => {
                let mut acc = vec![BigRational::zero(); field.phi];
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, z) in field.power(-(k as i64)).into_iter().enumerate() {
                        acc[j] += c * z;
                    }
                }
                FieldElement::Cyclotomic { field: field.clone(), coeffs: acc }
            }
            other => other.clone(),
        }
    }

    /// Sum of absolute values of rational coordinates; bounds every complex embedding.
    pub fn l1_bound(&self) -> Option<BigRational> {
        self.rational_coordinates()
            .map(|cs| cs.iter().fold(BigRational::zero(), |acc, c| acc + c.abs()))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{r}"),
            FieldElement::Residue { value, .. } => write!(f, "{value}"),
            FieldElement::Cyclotomic { coeffs, .. } => {
                let mut first = true;
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let neg = c.is_negative();
                    let a = c.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, "{}", if neg { "-" } else { "+" })?;
                    }
                    first = false;
                    let mon = match k {
                        0 => String::new(),
                        1 => "z".to_string(),
                        _ => format!("z^{k}"),
                    };
                    if k == 0 {
                        write!(f, "{a}")?;
                    } else if a.is_one() {
                        write!(f, "{mon}")?;
                    } else if a.is_integer() {
                        write!(f, "{a}{mon}")?;
                    } else {
                        write!(f, "{a}*{mon}")?;
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        use FieldElement::*;
        match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a + b),
            (Residue { value: a, p }, Residue { value: b, p: q }) if p == q => {
                Residue { value: (a + b) % p, p: *p }
            }
            (Cyclotomic { field, coeffs: a }, Cyclotomic { field: g, coeffs: b }) if field.n == g.n => {
                Cyclotomic { field: field.clone(), coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect() }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        use FieldElement::*;
        match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a - b),
            (Residue { value: a, p }, Residue { value: b, p: q }) if p == q => {
                Residue { value: (a + p - b) % p, p: *p }
            }
            (Cyclotomic { field, coeffs: a }, Cyclotomic { field: g, coeffs: b }) if field.n == g.n => {
                Cyclotomic { field: field.clone(), coeffs: a.iter().zip(b).map(|(x, y)| x - y).collect() }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        use FieldElement::*;
        match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a * b),
            (Residue { value: a, p }, Residue { value: b, p: q }) if p == q => {
                Residue { value: a * b % p, p: *p }
            }
            (Cyclotomic { field, coeffs: a }, Cyclotomic { field: g, coeffs: b }) if field.n == g.n => {
                Cyclotomic { field: field.clone(), coeffs: field.mul(a, b) }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        use FieldElement::*;
        match self {
            Rational(a) => Rational(-a),
            Residue { value, p } => Residue { value: (p - value) % p, p: *p },
            Cyclotomic { field, coeffs } => {
                Cyclotomic { field: field.clone(), coeffs: coeffs.iter().map(|c| -c).collect() }
            }
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl FieldElement {
    /// `self += a * b` without an intermediate clone of `self`.
    pub fn add_mul(&mut self, a: &FieldElement, b: &FieldElement) {
        use FieldElement::*;
        match (&mut *self, a, b) {
            (Residue { value, p }, Residue { value: x, .. }, Residue { value: y, .. }) => {
                *value = (*value + x * y % *p) % *p;
            }
            (Rational(s), Rational(x), Rational(y)) => {
                if !x.is_zero() && !y.is_zero() {
                    *s += x * y;
                }
            }
            _ => {
                if !a.is_zero() && !b.is_zero() {
                    *self = &*self + &(a * b);
                }
            }
        }
    }

    pub fn add_assign(&mut self, a: &FieldElement) {
        use FieldElement::*;
        match (&mut *self, a) {
            (Residue { value, p }, Residue { value: x, .. }) => *value = (*value + x) % *p,
            (Rational(s), Rational(x)) => *s += x,
            _ => *self = &*self + a,
        }
    }
}
