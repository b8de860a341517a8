//! Irreducible character tables for the ADE stabilizer groups, and the
//! class-function operations built on them: inner products, decomposition
//! into irreducibles, and the McKay graph.
//!
//! Tables for the cyclic and binary dihedral families are constructed from
//! the known representations; tables for the exceptional groups are
//! embedded reference data (see [`etables`]). Either way a table is only
//! returned after passing exact build-time integrity checks: row and
//! column orthogonality, `sum dim^2 = |G|`, vanishing of the regular
//! character off the identity, and agreement of the natural (defining)
//! representation's row with the matrix traces.

// Index loops over symmetric class/irrep pairs read better than iterator
// chains here.
#![allow(clippy::needless_range_loop)]

mod etables;

use std::borrow::Cow;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactnum::{from_buffer, mul_acc_into, product_buffer, Cyclotomic, Rational};
use crate::matgroup::{
    class_of_elements, conjugacy_classes, natural_character, ConjClass, Group, GroupSpec,
};
use crate::{Error, Result};

/// An irreducible representation: its label, dimension, and character
/// value on each conjugacy class (indexed like the table's class list).
#[derive(Clone, Debug)]
pub struct Irrep {
    pub name: String,
    pub dim: usize,
    pub values: Vec<Cyclotomic>,
}

/// An element of `K(BG)`: an integer multiplicity vector over the
/// irreducibles, in table order. Entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass(pub Vec<i64>);

#[derive(Debug)]
pub struct CharacterTable {
    pub group: Group,
    pub classes: Vec<ConjClass>,
    /// Element index -> class index.
    pub class_of: Vec<usize>,
    pub irreps: Vec<Irrep>,
    /// The character of the defining 2-dimensional representation,
    /// classwise (always the matrix traces, whether or not it is
    /// irreducible).
    pub natural: Vec<Cyclotomic>,
    /// Index of the irrep equal to the natural character, when the
    /// defining representation is irreducible (types D with `n >= 2`
    /// and E; `None` for the cyclic family and `Dic_1`).
    pub natural_index: Option<usize>,
}

/// Build and validate the character table of `group`.
pub fn character_table(group: Group) -> Result<CharacterTable> {
    let classes = conjugacy_classes(&group)?;
    let class_of = class_of_elements(&classes, group.order());
    let natural = natural_character(&group, &classes);

    let irreps = match group.spec {
        GroupSpec::Cyclic(n) => cyclic_irreps(&group, &classes, &class_of, n),
        GroupSpec::BinaryDihedral(n) => dihedral_irreps(&classes, n)?,
        _ => embedded_irreps(&group, &classes, &class_of)?,
    };

    let natural_index = irreps.iter().position(|r| r.values == natural);
    let table = CharacterTable {
        group,
        classes,
        class_of,
        irreps,
        natural,
        natural_index,
    };
    table.validate()?;
    Ok(table)
}

/// `chi^j(g^k) = zeta_N^(jk)` for the cyclic group of order `N`.
fn cyclic_irreps(group: &Group, classes: &[ConjClass], class_of: &[usize], n: u32) -> Vec<Irrep> {
    // Map each power of the generator to its (singleton) class.
    let mut power_class = vec![0usize; n as usize];
    let mut m = crate::matgroup::Mat2::identity().at_conductor(group.conductor);
    let gen = &group.spec.generators()[0].1;
    for slot in power_class.iter_mut() {
        *slot = class_of[group.element_index(&m).unwrap()];
        m = m.mul(gen);
    }
    (0..n as i64)
        .map(|j| {
            let mut values = vec![Cyclotomic::zero(); classes.len()];
            for (k, &ci) in power_class.iter().enumerate() {
                values[ci] = Cyclotomic::root_of_unity(n, j * k as i64);
            }
            Irrep {
                name: format!("chi_{}", j),
                dim: 1,
                values,
            }
        })
        .collect()
}

/// The `n + 3` irreducibles of `Dic_n`: four one-dimensional characters
/// cut out by the presentation relations (`zeta_a^2 = 1`,
/// `zeta_x^2 = zeta_a^n`), then the unified two-dimensional family
/// `psi_l`, `l = 1..n-1`, with `chi_l(a^k) = zeta^(lk) + zeta^(-lk)`
/// (quaternionic for odd `l`, dihedral for even `l`).
fn dihedral_irreps(classes: &[ConjClass], n: u32) -> Result<Vec<Irrep>> {
    let find = |label: &str| -> Result<usize> {
        classes
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| Error::Integrity(format!("missing Dic_n class `{}`", label)))
    };
    let one = Cyclotomic::one();
    let minus_one = Cyclotomic::from_int(-1);
    let i = Cyclotomic::root_of_unity(4, 1);
    let minus_i = Cyclotomic::root_of_unity(4, 3);

    // (name, zeta_a, zeta_x) with zeta_x^2 = zeta_a^n; for odd n the
    // zeta_a = -1 pair is forced to zeta_x = +-i.
    let one_dims: [(&str, Cyclotomic, Cyclotomic); 4] = if n.is_multiple_of(2) {
        [
            ("rho_0", one.clone(), one.clone()),
            ("rho_a", minus_one.clone(), one.clone()),
            ("rho_x", one.clone(), minus_one.clone()),
            ("rho_xa", minus_one.clone(), minus_one.clone()),
        ]
    } else {
        [
            ("rho_0", one.clone(), one.clone()),
            ("rho_a", minus_one.clone(), i),
            ("rho_x", one.clone(), minus_one.clone()),
            ("rho_xa", minus_one.clone(), minus_i),
        ]
    };

    let mut irreps = Vec::with_capacity(n as usize + 3);
    for (name, za, zx) in one_dims {
        let mut values = vec![Cyclotomic::zero(); classes.len()];
        values[find("1")?] = Cyclotomic::one();
        values[find("-1")?] = pow(&za, n as usize);
        for k in 1..n {
            let label = if k == 1 {
                "a".into()
            } else {
                format!("a^{}", k)
            };
            values[find(&label)?] = pow(&za, k as usize);
        }
        values[find("x")?] = zx.clone();
        values[find("x*a")?] = &zx * &za;
        irreps.push(Irrep {
            name: name.to_string(),
            dim: 1,
            values,
        });
    }

    for l in 1..n {
        let kind = if l % 2 == 1 {
            "quaternionic"
        } else {
            "dihedral"
        };
        let mut values = vec![Cyclotomic::zero(); classes.len()];
        // a^k classes including the identity (k = 0) and -1 (k = n).
        for k in 0..=n {
            let label = match k {
                0 => "1".to_string(),
                k if k == n => "-1".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{}", k),
            };
            let lk = (l * k) as i64;
            values[find(&label)?] =
                &Cyclotomic::root_of_unity(2 * n, lk) + &Cyclotomic::root_of_unity(2 * n, -lk);
        }
        irreps.push(Irrep {
            name: format!("psi_l({},l={})", kind, l),
            dim: 2,
            values,
        });
    }
    Ok(irreps)
}

fn pow(c: &Cyclotomic, e: usize) -> Cyclotomic {
    let mut acc = Cyclotomic::one();
    for _ in 0..e {
        acc = &acc * c;
    }
    acc
}

/// Match the embedded table's class words against the computed classes
/// (they are the canonical class labels) and reindex the rows.
fn embedded_irreps(
    group: &Group,
    classes: &[ConjClass],
    _class_of: &[usize],
) -> Result<Vec<Irrep>> {
    let data = etables::e_table(group.spec);
    let mut col_to_class = Vec::with_capacity(data.class_words.len());
    for (col, word) in data.class_words.iter().enumerate() {
        let ci = classes
            .iter()
            .position(|c| c.label == *word)
            .ok_or_else(|| {
                Error::Integrity(format!("table word `{}` matches no computed class", word))
            })?;
        if col_to_class.contains(&ci) {
            return Err(Error::Integrity(format!(
                "table word `{}` lands in an already-matched class",
                word
            )));
        }
        if classes[ci].centralizer_order != data.centralizer_orders[col] {
            return Err(Error::Integrity(format!(
                "{}: centralizer order of class `{}` is {}, table says {}",
                group.spec, word, classes[ci].centralizer_order, data.centralizer_orders[col]
            )));
        }
        col_to_class.push(ci);
    }
    if col_to_class.len() != classes.len() {
        return Err(Error::Integrity(
            "embedded table does not cover all classes".into(),
        ));
    }
    Ok(data
        .names
        .iter()
        .zip(data.dims.iter())
        .zip(data.rows.iter())
        .map(|((name, dim), row)| {
            let mut values = vec![Cyclotomic::zero(); classes.len()];
            for (col, v) in row.iter().enumerate() {
                values[col_to_class[col]] = v.clone();
            }
            Irrep {
                name: name.to_string(),
                dim: *dim,
                values,
            }
        })
        .collect())
}

/// `sum_k weight_k * f_k * h_k`, exactly, with everything promoted to a
/// common conductor and reduced once at the end.
fn sum_products(f: &[Cyclotomic], h: &[Cyclotomic], weights: Option<&[Rational]>) -> Cyclotomic {
    let mut l = 1u32;
    for v in f.iter().chain(h.iter()) {
        l = l.lcm(&v.conductor());
    }
    let mut buf = product_buffer(l);
    let one = Rational::one();
    for (k, (a, b)) in f.iter().zip(h.iter()).enumerate() {
        let w = weights.map_or(&one, |ws| &ws[k]);
        let pa = if a.conductor() == l {
            Cow::Borrowed(a)
        } else {
            Cow::Owned(a.promote(l))
        };
        let pb = if b.conductor() == l {
            Cow::Borrowed(b)
        } else {
            Cow::Owned(b.promote(l))
        };
        mul_acc_into(&mut buf, &pa, &pb, w);
    }
    from_buffer(l, buf)
}

/// The character inner product
/// `<f, h> = (1/|G|) sum_c size(c) f(c) conj(h(c))`, exact.
pub fn inner_product(t: &CharacterTable, f: &[Cyclotomic], h: &[Cyclotomic]) -> Result<Cyclotomic> {
    if f.len() != t.classes.len() || h.len() != t.classes.len() {
        return Err(Error::LengthMismatch {
            expected: t.classes.len(),
            got: if f.len() != t.classes.len() {
                f.len()
            } else {
                h.len()
            },
        });
    }
    let h_conj: Vec<Cyclotomic> = h.iter().map(|v| v.conjugate()).collect();
    let weights: Vec<Rational> = t
        .classes
        .iter()
        .map(|c| Rational::from_int(c.size as i64))
        .collect();
    let total = sum_products(f, &h_conj, Some(&weights));
    Ok(total.scale(&Rational::new(1, t.group.order() as i64)))
}

/// Decompose a virtual character into irreducible multiplicities.
/// Errors if any inner product fails to be a rational integer.
///
/// Conjugation is applied to `f` once rather than to every irrep row:
/// for a rational inner product the two orderings agree, and a
/// non-rational result is rejected either way.
pub fn decompose(t: &CharacterTable, f: &[Cyclotomic]) -> Result<KClass> {
    if f.len() != t.classes.len() {
        return Err(Error::LengthMismatch {
            expected: t.classes.len(),
            got: f.len(),
        });
    }
    let f_conj: Vec<Cyclotomic> = f.iter().map(|v| v.conjugate()).collect();
    let weights = class_weights(t);
    let order_inv = Rational::new(1, t.group.order() as i64);
    let mut mults = Vec::with_capacity(t.irreps.len());
    for irrep in &t.irreps {
        let ip = sum_products(&f_conj, &irrep.values, Some(&weights)).scale(&order_inv);
        let m = ip
            .to_rational()
            .ok()
            .and_then(|r| r.to_i64())
            .ok_or_else(|| {
                Error::NotVirtualCharacter(format!(
                    "<f, {}> = {} is not a rational integer",
                    irrep.name, ip
                ))
            })?;
        mults.push(m);
    }
    Ok(KClass(mults))
}

fn class_weights(t: &CharacterTable) -> Vec<Rational> {
    t.classes
        .iter()
        .map(|c| Rational::from_int(c.size as i64))
        .collect()
}

/// The class function `sum_i m_i chi_i` of a `K(BG)` class.
pub fn character_of(t: &CharacterTable, k: &KClass) -> Result<Vec<Cyclotomic>> {
    if k.0.len() != t.irreps.len() {
        return Err(Error::LengthMismatch {
            expected: t.irreps.len(),
            got: k.0.len(),
        });
    }
    let mut out = vec![Cyclotomic::zero(); t.classes.len()];
    for (m, irrep) in k.0.iter().zip(&t.irreps) {
        if *m == 0 {
            continue;
        }
        let c = Rational::from_int(*m);
        for (slot, v) in out.iter_mut().zip(&irrep.values) {
            *slot = &*slot + &v.scale(&c);
        }
    }
    Ok(out)
}

/// Pointwise product of two class functions (the character of a tensor
/// product when both are characters).
pub fn pointwise(f: &[Cyclotomic], h: &[Cyclotomic]) -> Vec<Cyclotomic> {
    f.iter().zip(h.iter()).map(|(a, b)| a * b).collect()
}

/// The McKay graph adjacency matrix: `A[i][j] = <chi_V chi_i, chi_j>`.
/// Symmetric, with non-negative integer entries.
pub fn mckay_graph(t: &CharacterTable) -> Result<Vec<Vec<u64>>> {
    let m = t.irreps.len();
    let weights = class_weights(t);
    let order_inv = Rational::new(1, t.group.order() as i64);
    let mut a = vec![vec![0u64; m]; m];
    for i in 0..m {
        let row_conj: Vec<Cyclotomic> = pointwise(&t.natural, &t.irreps[i].values)
            .iter()
            .map(|v| v.conjugate())
            .collect();
        for (j, irrep) in t.irreps.iter().enumerate() {
            let ip = sum_products(&row_conj, &irrep.values, Some(&weights)).scale(&order_inv);
            let v = ip
                .to_rational()
                .ok()
                .and_then(|r| r.to_i64())
                .filter(|&v| v >= 0)
                .ok_or_else(|| {
                    Error::Integrity("McKay multiplicity is not a non-negative integer".into())
                })?;
            a[i][j] = v as u64;
        }
    }
    for i in 0..m {
        for j in 0..i {
            if a[i][j] != a[j][i] {
                return Err(Error::Integrity("McKay graph is not symmetric".into()));
            }
        }
    }
    Ok(a)
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Index of the trivial representation (all values 1).
    pub fn trivial_index(&self) -> usize {
        self.irreps
            .iter()
            .position(|r| r.values.iter().all(|v| *v == Cyclotomic::one()))
            .expect("every table has a trivial representation")
    }

    fn validate(&self) -> Result<()> {
        let g = self.group.order();
        let m = self.irreps.len();
        let fail = |msg: String| Err(Error::Integrity(format!("{}: {}", self.group.spec, msg)));

        if m != self.classes.len() {
            return fail(format!("{} irreps for {} classes", m, self.classes.len()));
        }
        if self.classes.iter().map(|c| c.size).sum::<usize>() != g {
            return fail("class equation violated".into());
        }
        if !self.classes[0].is_identity {
            return fail("identity class is not first".into());
        }
        let dim_sq: usize = self.irreps.iter().map(|r| r.dim * r.dim).sum();
        if dim_sq != g {
            return fail(format!("sum of dim^2 is {}, expected {}", dim_sq, g));
        }
        for r in &self.irreps {
            if r.values.len() != self.classes.len() {
                return fail(format!("row `{}` has wrong length", r.name));
            }
            if r.values[0] != Cyclotomic::from_int(r.dim as i64) {
                return fail(format!("row `{}` does not evaluate to dim at 1", r.name));
            }
        }

        // Row orthogonality: <chi_i, chi_j> = delta_ij.
        let conj_rows: Vec<Vec<Cyclotomic>> = self
            .irreps
            .iter()
            .map(|r| r.values.iter().map(|v| v.conjugate()).collect())
            .collect();
        let weights: Vec<Rational> = self
            .classes
            .iter()
            .map(|c| Rational::from_int(c.size as i64))
            .collect();
        let order_inv = Rational::new(1, g as i64);
        for i in 0..m {
            for j in i..m {
                let ip = sum_products(&self.irreps[i].values, &conj_rows[j], Some(&weights))
                    .scale(&order_inv);
                let expected = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                if ip != expected {
                    return fail(format!(
                        "row orthogonality fails for ({}, {}): {}",
                        self.irreps[i].name, self.irreps[j].name, ip
                    ));
                }
            }
        }

        // Column orthogonality: sum_i chi_i(c) conj(chi_i(c')) =
        // delta_cc' |C_G(c)|.
        let columns: Vec<Vec<Cyclotomic>> = (0..self.classes.len())
            .map(|c| self.irreps.iter().map(|r| r.values[c].clone()).collect())
            .collect();
        let conj_columns: Vec<Vec<Cyclotomic>> = (0..self.classes.len())
            .map(|c| conj_rows.iter().map(|r| r[c].clone()).collect())
            .collect();
        for c in 0..self.classes.len() {
            for d in c..self.classes.len() {
                let ip = sum_products(&columns[c], &conj_columns[d], None);
                let expected = if c == d {
                    Cyclotomic::from_int(self.classes[c].centralizer_order as i64)
                } else {
                    Cyclotomic::zero()
                };
                if ip != expected {
                    return fail(format!(
                        "column orthogonality fails for classes `{}`, `{}`",
                        self.classes[c].label, self.classes[d].label
                    ));
                }
            }
        }

        // Regular character: sum_i dim_i chi_i vanishes off the identity.
        for (c, class) in self.classes.iter().enumerate() {
            let mut sum = Cyclotomic::zero();
            for r in &self.irreps {
                sum = &sum + &r.values[c].scale(&Rational::from_int(r.dim as i64));
            }
            let expected = if class.is_identity {
                Cyclotomic::from_int(g as i64)
            } else {
                Cyclotomic::zero()
            };
            if sum != expected {
                return fail(format!(
                    "regular character is {} on class `{}`",
                    sum, class.label
                ));
            }
        }

        // The defining representation is irreducible exactly for D (n >= 2)
        // and E; its row must then coincide with the matrix traces.
        let needs_natural = matches!(
            self.group.spec,
            GroupSpec::BinaryDihedral(n) if n >= 2
        ) || matches!(
            self.group.spec,
            GroupSpec::BinaryTetrahedral
                | GroupSpec::BinaryOctahedral
                | GroupSpec::BinaryIcosahedral
        );
        match self.natural_index {
            Some(i) => {
                if self.irreps[i].values != self.natural {
                    return fail("natural row disagrees with matrix traces".into());
                }
            }
            None if needs_natural => {
                return fail("no irrep row matches the matrix traces".into());
            }
            None => {}
        }
        Ok(())
    }

    pub fn to_model(&self) -> TableModel {
        TableModel {
            group: self.group.spec.to_string(),
            order: self.order(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassModel {
                    rep_word: c.label.clone(),
                    size: c.size,
                    centralizer_order: c.centralizer_order,
                })
                .collect(),
            irreps: self
                .irreps
                .iter()
                .map(|r| IrrepModel {
                    name: r.name.clone(),
                    dim: r.dim,
                    values: r.values.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        }
    }

    /// Render a value with the family's customary symbols (`w`, `sqrt2`,
    /// `mu+`, `mu-`) where one matches exactly; canonical form otherwise.
    pub fn pretty_value(&self, v: &Cyclotomic) -> String {
        if let Ok(r) = v.to_rational() {
            return r.to_string();
        }
        for (sym, val) in family_symbols(self.group.spec) {
            if *v == val {
                return sym.to_string();
            }
            if *v == -&val {
                return format!("-{}", sym);
            }
        }
        v.to_string()
    }
}

fn family_symbols(spec: GroupSpec) -> Vec<(&'static str, Cyclotomic)> {
    match spec {
        GroupSpec::BinaryTetrahedral => vec![
            ("w", Cyclotomic::root_of_unity(3, 1)),
            ("w^2", Cyclotomic::root_of_unity(3, 2)),
        ],
        GroupSpec::BinaryOctahedral => vec![(
            "sqrt2",
            &Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, 7),
        )],
        GroupSpec::BinaryIcosahedral => {
            let z = |k| Cyclotomic::root_of_unity(5, k);
            let sqrt5 = &(&z(1) - &z(2)) - &(&z(3) - &z(4));
            let half = Rational::new(1, 2);
            vec![
                ("mu+", (&Cyclotomic::one() + &sqrt5).scale(&half)),
                ("mu-", (&Cyclotomic::one() - &sqrt5).scale(&half)),
                ("sqrt5", sqrt5),
            ]
        }
        _ => Vec::new(),
    }
}

/// Serializable snapshot of a character table. `values` use the canonical
/// exact text forms (`p/q` rationals, `c*z{N}^{k}` sums).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableModel {
    pub group: String,
    pub order: usize,
    pub classes: Vec<ClassModel>,
    pub irreps: Vec<IrrepModel>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassModel {
    pub rep_word: String,
    pub size: usize,
    pub centralizer_order: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrrepModel {
    pub name: String,
    pub dim: usize,
    pub values: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(spec: GroupSpec) -> CharacterTable {
        character_table(Group::build(spec).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_2_table() {
        let t = table(GroupSpec::Cyclic(2));
        assert_eq!(t.irreps.len(), 2);
        let vals: Vec<Vec<Cyclotomic>> = t.irreps.iter().map(|r| r.values.clone()).collect();
        assert_eq!(vals[0], vec![Cyclotomic::one(), Cyclotomic::one()]);
        assert_eq!(vals[1], vec![Cyclotomic::one(), Cyclotomic::from_int(-1)]);
        assert!(t.natural_index.is_none());
    }

    #[test]
    fn dic2_dims() {
        let t = table(GroupSpec::BinaryDihedral(2));
        let dims: Vec<usize> = t.irreps.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 1, 1, 1, 2]);
        assert_eq!(t.irreps[4].name, "psi_l(quaternionic,l=1)");
        assert_eq!(t.natural_index, Some(4));
    }

    #[test]
    fn dic1_has_no_natural_irrep() {
        let t = table(GroupSpec::BinaryDihedral(1));
        assert_eq!(t.irreps.len(), 4);
        assert!(t.natural_index.is_none());
    }

    #[test]
    fn binary_octahedral_dims() {
        let t = table(GroupSpec::BinaryOctahedral);
        let dims: Vec<usize> = t.irreps.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 2, 3, 4, 3, 2, 1, 2]);
        assert_eq!(t.natural_index, Some(1));
    }

    #[test]
    fn e_tables_validate() {
        for spec in [
            GroupSpec::BinaryTetrahedral,
            GroupSpec::BinaryOctahedral,
            GroupSpec::BinaryIcosahedral,
        ] {
            let t = table(spec);
            assert_eq!(t.natural_index, Some(1), "{}", spec);
        }
    }

    #[test]
    fn inner_products_on_2t() {
        let t = table(GroupSpec::BinaryTetrahedral);
        for (i, r) in t.irreps.iter().enumerate() {
            for (j, s) in t.irreps.iter().enumerate() {
                let ip = inner_product(&t, &r.values, &s.values).unwrap();
                let expected = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(ip, expected, "<{}, {}>", r.name, s.name);
            }
        }
        // <regular, trivial> = 1
        let regular: Vec<Cyclotomic> = (0..t.classes.len())
            .map(|c| {
                if c == 0 {
                    Cyclotomic::from_int(t.order() as i64)
                } else {
                    Cyclotomic::zero()
                }
            })
            .collect();
        let triv = &t.irreps[t.trivial_index()].values;
        assert_eq!(
            inner_product(&t, &regular, triv).unwrap(),
            Cyclotomic::one()
        );
    }

    #[test]
    fn decompose_v_tensor_v_in_dic2() {
        let t = table(GroupSpec::BinaryDihedral(2));
        let v = &t.irreps[4].values;
        let vv = pointwise(v, v);
        let k = decompose(&t, &vv).unwrap();
        assert_eq!(k, KClass(vec![1, 1, 1, 1, 0]));
        // round trip
        let f = character_of(&t, &k).unwrap();
        assert_eq!(f, vv);
    }

    #[test]
    fn decompose_rho2_squared_in_2t() {
        // Pointwise square of the natural row is (4,4,0,1,1,1,1) in the
        // embedded column order, and decomposes as rho_0 + rho_3.
        let t = table(GroupSpec::BinaryTetrahedral);
        let v = &t.irreps[1].values;
        let vv = pointwise(v, v);
        let k = decompose(&t, &vv).unwrap();
        assert_eq!(k, KClass(vec![1, 0, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn trivial_tensor_trivial() {
        let t = table(GroupSpec::Cyclic(5));
        let triv = t.irreps[0].values.clone();
        let k = decompose(&t, &pointwise(&triv, &triv)).unwrap();
        assert_eq!(k.0[0], 1);
        assert!(k.0[1..].iter().all(|&m| m == 0));
    }

    #[test]
    fn non_virtual_character_is_rejected() {
        let t = table(GroupSpec::Cyclic(3));
        let third = Cyclotomic::from_rational(Rational::new(1, 3));
        let f = vec![third.clone(), third.clone(), third];
        assert!(matches!(
            decompose(&t, &f),
            Err(Error::NotVirtualCharacter(_))
        ));
    }

    #[test]
    fn mckay_cyclic_is_a_cycle() {
        let a = mckay_graph(&table(GroupSpec::Cyclic(5))).unwrap();
        for i in 0..5usize {
            for j in 0..5usize {
                let adjacent = (i + 1) % 5 == j || (j + 1) % 5 == i;
                assert_eq!(a[i][j], u64::from(adjacent), "({}, {})", i, j);
            }
        }
    }

    #[test]
    fn mckay_dic2_is_a_star() {
        let a = mckay_graph(&table(GroupSpec::BinaryDihedral(2))).unwrap();
        // V (index 4) is adjacent to all four 1-dim irreps and nothing else.
        for i in 0..4 {
            assert_eq!(a[4][i], 1);
            assert_eq!(a[i][4], 1);
            for j in 0..4 {
                if i != j {
                    assert_eq!(a[i][j], 0);
                }
            }
        }
        assert_eq!(a[4][4], 0);
    }

    #[test]
    fn table_model_round_trips_through_json() {
        let t = table(GroupSpec::BinaryTetrahedral);
        let model = t.to_model();
        let json = serde_json::to_string(&model).unwrap();
        let back: TableModel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, model);
        // values parse back to the exact cyclotomics
        for (r, m) in t.irreps.iter().zip(&back.irreps) {
            for (v, s) in r.values.iter().zip(&m.values) {
                let parsed: Cyclotomic = s.parse().unwrap();
                assert_eq!(parsed, *v);
            }
        }
    }

    #[test]
    fn pretty_symbols() {
        let t = table(GroupSpec::BinaryTetrahedral);
        let w = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(t.pretty_value(&w), "w");
        assert_eq!(t.pretty_value(&-&w), "-w");
        assert_eq!(t.pretty_value(&Cyclotomic::from_int(-2)), "-2");
    }
}
