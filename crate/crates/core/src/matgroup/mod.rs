//! The ADE stabilizer groups as explicit finite sets of 2x2 matrices over
//! cyclotomic fields, with conjugacy classes, centralizer orders, and the
//! natural character.
//!
//! Matrix realizations:
//!
//! * `Cyclic(N)`: generated by `diag(zeta_N, zeta_N^-1)`.
//! * `BinaryDihedral(n)` (`Dic_n`, order `4n`): `a = diag(zeta, zeta^-1)`
//!   with `zeta` a primitive `2n`-th root of unity, and
//!   `x = [[0,-1],[1,0]]` (the `l = 1` quaternionic representation), so
//!   the natural character is literally the trace.
//! * Binary tetrahedral `2T = <sigma, tau, mu>` and octahedral
//!   `2O = <2T, kappa>` over `Q(zeta_8)`; binary icosahedral
//!   `2I = <sigma, tau>` over `Q(zeta_10)` (the entries lie in
//!   `Q(zeta_5)`, which embeds there).
//!
//! Group elements are closed under multiplication by construction and all
//! have determinant 1 (checked), so inverses are adjugates.

mod word;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::exactnum::{Cyclotomic, Rational};
use crate::{Error, Result};

pub use word::evaluate_word;

/// Closure safety cap: a closure that grows past this signals wrong
/// generators rather than a large group.
pub const CLOSURE_CAP: usize = 10_000;

/// A 2x2 matrix over a cyclotomic field.
#[derive(Clone, Debug)]
pub struct Mat2 {
    pub entries: [[Cyclotomic; 2]; 2],
}

impl Mat2 {
    pub fn new(entries: [[Cyclotomic; 2]; 2]) -> Self {
        Mat2 { entries }
    }

    pub fn identity() -> Self {
        Mat2::scalar(1)
    }

    pub fn scalar(c: i64) -> Self {
        Mat2::new([
            [Cyclotomic::from_int(c), Cyclotomic::zero()],
            [Cyclotomic::zero(), Cyclotomic::from_int(c)],
        ])
    }

    /// All four entries promoted to conductor `n`.
    pub fn at_conductor(&self, n: u32) -> Mat2 {
        Mat2::new([
            [self.entries[0][0].promote(n), self.entries[0][1].promote(n)],
            [self.entries[1][0].promote(n), self.entries[1][1].promote(n)],
        ])
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let e = &self.entries;
        let o = &other.entries;
        let cell = |i: usize, j: usize| &(&e[i][0] * &o[0][j]) + &(&e[i][1] * &o[1][j]);
        Mat2::new([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }

    pub fn trace(&self) -> Cyclotomic {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> Cyclotomic {
        &(&self.entries[0][0] * &self.entries[1][1]) - &(&self.entries[0][1] * &self.entries[1][0])
    }

    /// Inverse of a determinant-1 matrix (the adjugate).
    pub fn inverse_sl2(&self) -> Mat2 {
        let e = &self.entries;
        Mat2::new([[e[1][1].clone(), -&e[0][1]], [-&e[1][0], e[0][0].clone()]])
    }

    /// Canonical key for hashing at a fixed conductor: the flattened
    /// reduced coefficient vectors of all four entries.
    fn flat_key(&self) -> Vec<Rational> {
        let mut key = Vec::new();
        for row in &self.entries {
            for v in row {
                key.extend_from_slice(v.coeffs());
            }
        }
        key
    }
}

impl PartialEq for Mat2 {
    fn eq(&self, other: &Self) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.entries[i][j] == other.entries[i][j]))
    }
}

impl Eq for Mat2 {}

/// Which ADE stabilizer group to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n as usize,
            GroupSpec::BinaryDihedral(n) => 4 * *n as usize,
            GroupSpec::BinaryTetrahedral => 24,
            GroupSpec::BinaryOctahedral => 48,
            GroupSpec::BinaryIcosahedral => 120,
        }
    }

    /// The fixed ambient conductor all group elements are stored at.
    pub fn ambient_conductor(&self) -> u32 {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::BinaryDihedral(n) => 2 * n,
            GroupSpec::BinaryTetrahedral | GroupSpec::BinaryOctahedral => 8,
            GroupSpec::BinaryIcosahedral => 10,
        }
    }

    /// Named generators, already at the ambient conductor.
    pub fn generators(&self) -> Vec<(&'static str, Mat2)> {
        let amb = self.ambient_conductor();
        let z = Cyclotomic::zero();
        match self {
            GroupSpec::Cyclic(n) => {
                let g = Mat2::new([
                    [Cyclotomic::root_of_unity(*n, 1), z.clone()],
                    [z, Cyclotomic::root_of_unity(*n, -1)],
                ]);
                vec![("g", g)]
            }
            GroupSpec::BinaryDihedral(n) => {
                let a = Mat2::new([
                    [Cyclotomic::root_of_unity(2 * n, 1), z.clone()],
                    [z.clone(), Cyclotomic::root_of_unity(2 * n, -1)],
                ]);
                let x = Mat2::new([
                    [z.clone(), Cyclotomic::from_int(-1)],
                    [Cyclotomic::one(), z],
                ]);
                vec![("a", a.at_conductor(amb)), ("x", x.at_conductor(amb))]
            }
            GroupSpec::BinaryTetrahedral | GroupSpec::BinaryOctahedral => {
                let e = |k| Cyclotomic::root_of_unity(8, k);
                let sigma = Mat2::new([[e(2), z.clone()], [z.clone(), e(6)]]);
                let tau = Mat2::new([
                    [z.clone(), Cyclotomic::one()],
                    [Cyclotomic::from_int(-1), z.clone()],
                ]);
                // 1/sqrt(2) = (zeta_8 + zeta_8^7)/2
                let inv_sqrt2 = (&e(1) + &e(7)).scale(&Rational::new(1, 2));
                let mu = Mat2::new([
                    [&inv_sqrt2 * &e(7), &inv_sqrt2 * &e(7)],
                    [&inv_sqrt2 * &e(5), &inv_sqrt2 * &e(1)],
                ]);
                let mut gens = vec![
                    ("sigma", sigma.at_conductor(amb)),
                    ("tau", tau.at_conductor(amb)),
                    ("mu", mu.at_conductor(amb)),
                ];
                if matches!(self, GroupSpec::BinaryOctahedral) {
                    let kappa = Mat2::new([[e(1), z.clone()], [z, e(7)]]);
                    gens.push(("kappa", kappa.at_conductor(amb)));
                }
                gens
            }
            GroupSpec::BinaryIcosahedral => {
                let e = |k| Cyclotomic::root_of_unity(5, k);
                let sigma = Mat2::new([[-&e(3), z.clone()], [z.clone(), -&e(2)]]);
                // 1/sqrt(5) = (zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4)/5
                let sqrt5 = &(&e(1) - &e(2)) - &(&e(3) - &e(4));
                let inv_sqrt5 = sqrt5.scale(&Rational::new(1, 5));
                let t11 = -&(&e(1) - &e(4));
                let t12 = &e(2) - &e(3);
                let t22 = &e(1) - &e(4);
                let tau = Mat2::new([
                    [&inv_sqrt5 * &t11, &inv_sqrt5 * &t12],
                    [&inv_sqrt5 * &t12, &inv_sqrt5 * &t22],
                ]);
                vec![
                    ("sigma", sigma.at_conductor(amb)),
                    ("tau", tau.at_conductor(amb)),
                ]
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    /// Dynkin label where one exists (`A1`, `D4`, `E6`, ...), raw form
    /// otherwise (`cyclic:1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(1) => write!(f, "cyclic:1"),
            GroupSpec::Cyclic(n) => write!(f, "A{}", n - 1),
            GroupSpec::BinaryDihedral(n) => write!(f, "D{}", n + 2),
            GroupSpec::BinaryTetrahedral => write!(f, "E6"),
            GroupSpec::BinaryOctahedral => write!(f, "E7"),
            GroupSpec::BinaryIcosahedral => write!(f, "E8"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepted forms: `A<k>` (Dynkin `A_k`, the cyclic group of order
    /// `k+1`), `D<k>` with `k >= 3` (`Dic_(k-2)`), `E6`/`E7`/`E8`, and the
    /// raw forms `cyclic:<N>` and `dic:<n>`. Case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid group spec `{}`", s));
        let lower = s.trim().to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("cyclic:") {
            let n: u32 = rest.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            return Ok(GroupSpec::Cyclic(n));
        }
        if let Some(rest) = lower.strip_prefix("dic:") {
            let n: u32 = rest.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            return Ok(GroupSpec::BinaryDihedral(n));
        }
        match lower.as_str() {
            "e6" => return Ok(GroupSpec::BinaryTetrahedral),
            "e7" => return Ok(GroupSpec::BinaryOctahedral),
            "e8" => return Ok(GroupSpec::BinaryIcosahedral),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix('a') {
            let k: u32 = rest.parse().map_err(|_| bad())?;
            return Ok(GroupSpec::Cyclic(k + 1));
        }
        if let Some(rest) = lower.strip_prefix('d') {
            let k: u32 = rest.parse().map_err(|_| bad())?;
            if k < 3 {
                return Err(bad());
            }
            return Ok(GroupSpec::BinaryDihedral(k - 2));
        }
        Err(bad())
    }
}

/// A finite matrix group, closed under multiplication, with a
/// deterministic element ordering (breadth-first generation order;
/// the identity is element 0).
#[derive(Clone, Debug)]
pub struct Group {
    pub spec: GroupSpec,
    pub conductor: u32,
    pub elements: Vec<Mat2>,
    index: HashMap<Vec<Rational>, usize>,
    generator_indices: Vec<usize>,
}

impl Group {
    /// Breadth-first closure of the generator set under multiplication,
    /// with exact equality. Errors if the closure exceeds [`CLOSURE_CAP`].
    pub fn build(spec: GroupSpec) -> Result<Group> {
        let conductor = spec.ambient_conductor();
        let gens: Vec<Mat2> = spec
            .generators()
            .into_iter()
            .map(|(_, m)| m.at_conductor(conductor))
            .collect();
        for g in &gens {
            if g.det() != Cyclotomic::one() {
                return Err(Error::Integrity(format!(
                    "generator of {} does not have determinant 1",
                    spec
                )));
            }
        }

        let mut elements = vec![Mat2::identity().at_conductor(conductor)];
        let mut index = HashMap::new();
        index.insert(elements[0].flat_key(), 0);
        let mut cursor = 0;
        while cursor < elements.len() {
            for g in &gens {
                let product = elements[cursor].mul(g);
                let key = product.flat_key();
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                    if elements.len() >= CLOSURE_CAP {
                        return Err(Error::ClosureCap(CLOSURE_CAP));
                    }
                    e.insert(elements.len());
                    elements.push(product);
                }
            }
            cursor += 1;
        }

        let generator_indices = gens.iter().map(|g| index[&g.flat_key()]).collect();
        let group = Group {
            spec,
            conductor,
            elements,
            index,
            generator_indices,
        };
        if group.order() != spec.order() {
            return Err(Error::Integrity(format!(
                "{}: closure has {} elements, expected {}",
                spec,
                group.order(),
                spec.order()
            )));
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_index(&self, m: &Mat2) -> Option<usize> {
        self.index
            .get(&m.at_conductor(self.conductor).flat_key())
            .copied()
    }

    fn index_of(&self, m: &Mat2) -> usize {
        self.element_index(m)
            .expect("product of group elements must be a group element")
    }
}

/// A conjugacy class. `members` are element indices in ascending order, so
/// the representative (the first member under the canonical element
/// ordering) is `members[0]`.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub centralizer_order: usize,
    pub is_identity: bool,
    /// Canonical word for a member of this class, e.g. `a^2`, `mu^5`, `-1`.
    pub label: String,
}

/// Partition the group into conjugacy classes. The identity class comes
/// first; the rest are ordered by (size, representative index).
pub fn conjugacy_classes(group: &Group) -> Result<Vec<ConjClass>> {
    let n = group.order();
    // Conjugation by each generator as an index permutation; conjugation
    // by arbitrary elements is generated by these.
    let mut gen_conj: Vec<Vec<usize>> = Vec::new();
    for &gi in &group.generator_indices {
        let g = &group.elements[gi];
        let g_inv = g.inverse_sl2();
        let map: Vec<usize> = (0..n)
            .map(|i| group.index_of(&g.mul(&group.elements[i]).mul(&g_inv)))
            .collect();
        gen_conj.push(map);
    }

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut orbit = vec![start];
        class_of[start] = id;
        let mut cursor = 0;
        while cursor < orbit.len() {
            let e = orbit[cursor];
            for map in &gen_conj {
                let c = map[e];
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    orbit.push(c);
                }
            }
            cursor += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }

    let mut out: Vec<ConjClass> = classes
        .into_iter()
        .map(|members| {
            let size = members.len();
            if !n.is_multiple_of(size) {
                return Err(Error::Integrity(
                    "class size does not divide the group order".into(),
                ));
            }
            Ok(ConjClass {
                rep: members[0],
                size,
                centralizer_order: n / size,
                is_identity: members[0] == 0,
                members,
                label: String::new(),
            })
        })
        .collect::<Result<_>>()?;
    out.sort_by_key(|c| (!c.is_identity, c.size, c.rep));

    if out.iter().map(|c| c.size).sum::<usize>() != n {
        return Err(Error::Integrity("class equation violated".into()));
    }
    attach_labels(group, &mut out)?;
    Ok(out)
}

/// Element index -> class index.
pub fn class_of_elements(classes: &[ConjClass], order: usize) -> Vec<usize> {
    let mut map = vec![usize::MAX; order];
    for (ci, class) in classes.iter().enumerate() {
        for &m in &class.members {
            map[m] = ci;
        }
    }
    map
}

/// Canonical class words per family. Every class must be hit exactly once.
fn canonical_words(spec: GroupSpec) -> Vec<String> {
    match spec {
        GroupSpec::Cyclic(n) => (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{}", k),
            })
            .collect(),
        GroupSpec::BinaryDihedral(n) => {
            let mut words = vec!["1".to_string(), "-1".to_string()];
            words.extend((1..n).map(|k| {
                if k == 1 {
                    "a".into()
                } else {
                    format!("a^{}", k)
                }
            }));
            words.push("x".to_string());
            words.push("x*a".to_string());
            words
        }
        GroupSpec::BinaryTetrahedral => ["1", "-1", "tau", "mu", "mu^2", "mu^4", "mu^5"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        GroupSpec::BinaryOctahedral => [
            "1",
            "-1",
            "mu",
            "mu^2",
            "tau",
            "kappa",
            "tau*kappa",
            "kappa^3",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
        // The two centralizer-6 classes are represented by sigma^6*tau
        // (trace -1, order 3) and sigma*tau (trace 1, order 6); the words
        // are pinned by the exact traces of the generator matrices.
        GroupSpec::BinaryIcosahedral => [
            "1",
            "-1",
            "sigma",
            "sigma^2",
            "sigma^3",
            "sigma^4",
            "tau",
            "sigma^6*tau",
            "sigma*tau",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    }
}

fn attach_labels(group: &Group, classes: &mut [ConjClass]) -> Result<()> {
    let class_of = class_of_elements(classes, group.order());
    let mut seen = vec![false; classes.len()];
    for word in canonical_words(group.spec) {
        let m = evaluate_word(group, &word)?;
        let idx = group.element_index(&m).ok_or_else(|| {
            Error::Integrity(format!("class word `{}` is not a group element", word))
        })?;
        let ci = class_of[idx];
        if seen[ci] {
            return Err(Error::Integrity(format!(
                "class word `{}` lands in an already-labelled class",
                word
            )));
        }
        seen[ci] = true;
        classes[ci].label = word;
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::Integrity(
            "canonical class words do not cover all classes".into(),
        ));
    }
    Ok(())
}

/// The character of the defining 2-dimensional representation: the trace
/// of a representative of each class. Its value on the identity is 2.
pub fn natural_character(group: &Group, classes: &[ConjClass]) -> Vec<Cyclotomic> {
    classes
        .iter()
        .map(|c| group.elements[c.rep].trace())
        .collect()
}
