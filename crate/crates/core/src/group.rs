//! Finite groups by multiplication table, commuting pairs and the SL(2,Z) action on them.

use std::collections::BTreeMap;

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::unit_vector;

/// Element 0 is the identity; `table[a * n + b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Invalid("empty group table".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("group table is not square".into()));
        }
        if rows.iter().flatten().any(|&x| x >= n) {
            return Err(Error::Invalid("group table entry out of range".into()));
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let m = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if m(0, a) != a || m(a, 0) != a {
                return Err(Error::Invalid("element 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::Invalid(format!("group table is not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| m(a, b) == 0 && m(b, a) == 0)
                .ok_or_else(|| Error::Invalid(format!("element {a} has no inverse")))?;
        }
        Ok(FiniteGroup { name: name.into(), order: n, table, inverses })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(if n == 1 { "trivial".to_string() } else { format!("z{n}") }, rows).expect("cyclic group")
    }

    /// Group of permutations given as images lists; the identity must come first.
    pub fn from_permutations(name: &str, perms: &[Vec<usize>]) -> Result<FiniteGroup> {
        let index: BTreeMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows = vec![];
        for a in perms {
            let mut row = vec![];
            for b in perms {
                // (a·b)(x) = a(b(x))
                let c: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                row.push(*index.get(&c).ok_or_else(|| Error::Invalid("permutations not closed".into()))?);
            }
            rows.push(row);
        }
        FiniteGroup::new(name, rows)
    }

    /// S₃ as permutations of {0,1,2}: identity, the transpositions (01), (02), (12), then the 3-cycles.
    pub fn symmetric3() -> FiniteGroup {
        let perms = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![0, 2, 1],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        FiniteGroup::from_permutations("s3", &perms).expect("S3")
    }

    /// Permutation group generated by `gens`, elements in breadth-first order from the identity.
    pub fn generated_by(name: &str, gens: &[Vec<usize>]) -> Result<FiniteGroup> {
        let k = gens.first().map(|g| g.len()).unwrap_or(0);
        if gens.iter().any(|g| g.len() != k) {
            return Err(Error::Invalid("generators act on different sets".into()));
        }
        let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
        let mut i = 0;
        while i < perms.len() {
            for gen in gens {
                let p: Vec<usize> = perms[i].iter().map(|&x| gen[x]).collect();
                if !perms.contains(&p) {
                    perms.push(p);
                }
            }
            i += 1;
        }
        FiniteGroup::from_permutations(name, &perms)
    }

    /// Symmetries of a regular `n`-gon.
    pub fn dihedral(n: usize) -> FiniteGroup {
        let r: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
        let s: Vec<usize> = (0..n).map(|x| (n - x) % n).collect();
        FiniteGroup::generated_by(&format!("d{n}"), &[r, s]).expect("dihedral group")
    }

    pub fn klein() -> FiniteGroup {
        let rows = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        FiniteGroup::new("z2xz2", rows).expect("Klein four-group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g a g⁻¹`
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    /// Integer power, negative exponents allowed.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Conjugacy classes ordered by smallest member; each class sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = vec![];
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let mut cls: Vec<usize> = (0..self.order).map(|g| self.conj(g, a)).collect();
            cls.sort();
            cls.dedup();
            for &c in &cls {
                seen[c] = true;
            }
            out.push(cls);
        }
        out
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order).filter(|&g| self.commute(g, a)).collect()
    }

    /// Group algebra `k[G]` with basis the group elements.
    pub fn group_algebra(&self, field: &Field) -> Result<StructureAlgebra> {
        let n = self.order;
        let entries = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, self.mul(a, b), field.one()));
        StructureAlgebra::new(field, n, entries.collect::<Vec<_>>(), unit_vector(field, n, 0))
    }

    /// Function algebra `k^G` with basis the point indicators `δ_g`.
    pub fn function_algebra(&self, field: &Field) -> Result<StructureAlgebra> {
        let n = self.order;
        let entries: Vec<_> = (0..n).map(|a| (a, a, a, field.one())).collect();
        StructureAlgebra::new(field, n, entries, vec![field.one(); n])
    }
}

/// An orbit of commuting pairs `(a, b)` under simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingPairOrbit {
    /// Lexicographically smallest member.
    pub representative: (usize, usize),
    pub members: Vec<(usize, usize)>,
}

impl CommutingPairOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Orbits of commuting pairs, ordered by representative.
pub fn pbun_orbits(g: &FiniteGroup) -> Vec<CommutingPairOrbit> {
    let n = g.order();
    let mut seen = BTreeMap::new();
    let mut out = vec![];
    for a in 0..n {
        for b in 0..n {
            if !g.commute(a, b) || seen.contains_key(&(a, b)) {
                continue;
            }
            let mut members: Vec<(usize, usize)> = (0..n).map(|h| (g.conj(h, a), g.conj(h, b))).collect();
            members.sort();
            members.dedup();
            for m in &members {
                seen.insert(*m, out.len());
            }
            out.push(CommutingPairOrbit { representative: members[0], members });
        }
    }
    out
}

/// A 2×2 integer matrix `[[a, b], [c, d]]`.
pub type IntMatrix2 = [[i64; 2]; 2];

pub const S_MATRIX: IntMatrix2 = [[0, -1], [1, 0]];
pub const T_MATRIX: IntMatrix2 = [[1, 1], [0, 1]];

pub fn mat2_mul(x: &IntMatrix2, y: &IntMatrix2) -> IntMatrix2 {
    let mut z = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    z
}

/// Action of `M ∈ SL(2,Z)` on a commuting pair viewed as a homomorphism
/// `φ: Z² → G` with `φ(e₁) = a`, `φ(e₂) = b`: the pair goes to `φ ∘ M⁻¹`.
/// This is a left action; `S·(a, b) = (b⁻¹, a)` and `T·(a, b) = (a, a⁻¹b)`.
pub fn act_on_pair(g: &FiniteGroup, m: &IntMatrix2, (a, b): (usize, usize)) -> Result<(usize, usize)> {
    let [[p, q], [r, s]] = *m;
    if p * s - q * r != 1 {
        return Err(Error::Invalid(format!("matrix [[{p},{q}],[{r},{s}]] does not have determinant 1")));
    }
    // M⁻¹ = [[s, -q], [-r, p]]; φ(M⁻¹ e₁) = a^s b^{-r}, φ(M⁻¹ e₂) = a^{-q} b^p
    let x = g.mul(g.pow(a, s), g.pow(b, -r));
    let y = g.mul(g.pow(a, -q), g.pow(b, p));
    Ok((x, y))
}

/// Permutation of orbit indices induced by `M`.
pub fn sl2z_action(g: &FiniteGroup, orbits: &[CommutingPairOrbit], m: &IntMatrix2) -> Result<Vec<usize>> {
    let index: BTreeMap<(usize, usize), usize> =
        orbits.iter().enumerate().flat_map(|(i, o)| o.members.iter().map(move |p| (*p, i))).collect();
    orbits
        .iter()
        .map(|o| {
            let img = act_on_pair(g, m, o.representative)?;
            Ok(index[&img])
        })
        .collect()
}

/// Composition of permutations: `(p ∘ q)(i) = p(q(i))`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_basics() {
        let g = FiniteGroup::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(pbun_orbits(&FiniteGroup::trivial()).len(), 1);
        let z2 = pbun_orbits(&FiniteGroup::cyclic(2));
        assert_eq!(z2.len(), 4);
        assert!(z2.iter().all(|o| o.size() == 1));
        assert_eq!(pbun_orbits(&FiniteGroup::symmetric3()).len(), 8);
        // commuting pairs of S3: 18 = |G| · #classes
        let total: usize = pbun_orbits(&FiniteGroup::symmetric3()).iter().map(|o| o.size()).sum();
        assert_eq!(total, 18);
    }

    #[test]
    fn z2_s_swaps_mixed_pairs() {
        let g = FiniteGroup::cyclic(2);
        let orbits = pbun_orbits(&g);
        let s = sl2z_action(&g, &orbits, &S_MATRIX).unwrap();
        let reps: Vec<(usize, usize)> = orbits.iter().map(|o| o.representative).collect();
        assert_eq!(reps, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(s, vec![0, 2, 1, 3]);
        let id = sl2z_action(&g, &orbits, &[[1, 0], [0, 1]]).unwrap();
        assert_eq!(id, vec![0, 1, 2, 3]);
    }

    #[test]
    fn determinant_checked() {
        let g = FiniteGroup::cyclic(3);
        assert!(act_on_pair(&g, &[[2, 0], [0, 1]], (1, 1)).is_err());
    }

    #[test]
    fn concrete_generators() {
        let g = FiniteGroup::symmetric3();
        let (a, b) = (4, 4); // a 3-cycle with itself
        assert_eq!(act_on_pair(&g, &S_MATRIX, (a, b)).unwrap(), (g.inv(b), a));
        assert_eq!(act_on_pair(&g, &T_MATRIX, (a, b)).unwrap(), (a, g.mul(g.inv(a), b)));
    }
}
