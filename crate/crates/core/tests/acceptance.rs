//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Everything is exact (zero tolerance) and the whole suite is meant to
//! run in seconds. Group analyses (table, coefficients, McKay graph,
//! verification report) are built once for the full sweep
//! (`Cyclic(N), N <= 50`, `Dic_n, n <= 25`, and the three exceptional
//! groups) and shared across criteria.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use kleinian::chartab::inner_product;
use kleinian::matgroup::GroupSpec;
use kleinian::rrcoeff::{
    analyze_group, closed_form_a, closed_form_d, closed_form_d_printed, ct19_delta_o_from_table,
    d_irrep_at, delta, DIrrep, GroupAnalysis, Verdict,
};
use kleinian::{Cyclotomic, KClass, Rational};

const MAX_A: u32 = 50;
const MAX_D: u32 = 25;

fn sweep() -> &'static BTreeMap<GroupSpec, GroupAnalysis> {
    static SWEEP: OnceLock<BTreeMap<GroupSpec, GroupAnalysis>> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let mut map = BTreeMap::new();
        for n in 1..=MAX_A {
            map.insert(
                GroupSpec::Cyclic(n),
                analyze_group(GroupSpec::Cyclic(n)).unwrap(),
            );
        }
        for n in 1..=MAX_D {
            map.insert(
                GroupSpec::BinaryDihedral(n),
                analyze_group(GroupSpec::BinaryDihedral(n)).unwrap(),
            );
        }
        for spec in [
            GroupSpec::BinaryTetrahedral,
            GroupSpec::BinaryOctahedral,
            GroupSpec::BinaryIcosahedral,
        ] {
            map.insert(spec, analyze_group(spec).unwrap());
        }
        map
    })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn coeffs_of(spec: GroupSpec) -> &'static [Rational] {
    &sweep()[&spec].coefficients.values
}

#[test]
fn criterion_01_group_orders() {
    for (spec, analysis) in sweep() {
        assert_eq!(analysis.table.order(), spec.order(), "{}", spec);
    }
    assert_eq!(sweep()[&GroupSpec::BinaryTetrahedral].table.order(), 24);
    assert_eq!(sweep()[&GroupSpec::BinaryOctahedral].table.order(), 48);
    assert_eq!(sweep()[&GroupSpec::BinaryIcosahedral].table.order(), 120);
    println!("PASS criterion 1: group orders N, 4n, 24, 48, 120");
}

#[test]
fn criterion_02_class_structure() {
    for n in 1..=MAX_D {
        let t = &sweep()[&GroupSpec::BinaryDihedral(n)].table;
        assert_eq!(t.classes.len(), n as usize + 3, "Dic_{}", n);
        let mut cents: Vec<usize> = t.classes.iter().map(|c| c.centralizer_order).collect();
        cents.sort_unstable();
        let mut expected = vec![4, 4];
        expected.extend(std::iter::repeat_n(2 * n as usize, n as usize - 1));
        expected.extend([4 * n as usize, 4 * n as usize]);
        expected.sort_unstable();
        assert_eq!(cents, expected, "Dic_{}", n);
    }
    let expected_e: [(GroupSpec, &[(&str, usize)]); 3] = [
        (
            GroupSpec::BinaryTetrahedral,
            &[
                ("1", 24),
                ("-1", 24),
                ("tau", 4),
                ("mu", 6),
                ("mu^2", 6),
                ("mu^4", 6),
                ("mu^5", 6),
            ],
        ),
        (
            GroupSpec::BinaryOctahedral,
            &[
                ("1", 48),
                ("-1", 48),
                ("mu", 6),
                ("mu^2", 6),
                ("tau", 8),
                ("kappa", 8),
                ("tau*kappa", 4),
                ("kappa^3", 8),
            ],
        ),
        (
            GroupSpec::BinaryIcosahedral,
            &[
                ("1", 120),
                ("-1", 120),
                ("sigma", 10),
                ("sigma^2", 10),
                ("sigma^3", 10),
                ("sigma^4", 10),
                ("tau", 4),
                ("sigma^6*tau", 6),
                ("sigma*tau", 6),
            ],
        ),
    ];
    for (spec, pairs) in expected_e {
        let t = &sweep()[&spec].table;
        assert_eq!(t.classes.len(), pairs.len(), "{}", spec);
        for (label, cent) in pairs {
            let class = t
                .classes
                .iter()
                .find(|c| c.label == *label)
                .unwrap_or_else(|| panic!("{}: no class `{}`", spec, label));
            assert_eq!(class.centralizer_order, *cent, "{} class `{}`", spec, label);
        }
    }
    println!("PASS criterion 2: conjugacy class structure and centralizer orders");
}

#[test]
fn criterion_03_character_table_checks() {
    // Building a table runs the exact build-time checks (row and column
    // orthogonality, sum dim^2 = |G|, regular character, natural row);
    // the sweep would have panicked otherwise. Re-verify a sample
    // directly through the public inner product.
    assert_eq!(sweep().len(), (MAX_A + MAX_D + 3) as usize);
    for spec in [
        GroupSpec::Cyclic(7),
        GroupSpec::BinaryDihedral(4),
        GroupSpec::BinaryOctahedral,
    ] {
        let t = &sweep()[&spec].table;
        for (i, r) in t.irreps.iter().enumerate() {
            for (j, s) in t.irreps.iter().enumerate() {
                let ip = inner_product(t, &r.values, &s.values).unwrap();
                let expected = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(ip, expected, "{}: <{}, {}>", spec, r.name, s.name);
            }
        }
        assert_eq!(
            t.irreps.iter().map(|r| r.dim * r.dim).sum::<usize>(),
            t.order(),
            "{}",
            spec
        );
    }
    for (spec, analysis) in sweep() {
        let t = &analysis.table;
        if let Some(i) = t.natural_index {
            assert_eq!(t.irreps[i].values, t.natural, "{}: natural row", spec);
        } else {
            assert!(
                matches!(spec, GroupSpec::Cyclic(_) | GroupSpec::BinaryDihedral(1)),
                "{}: missing natural irrep",
                spec
            );
        }
    }
    println!("PASS criterion 3: orthogonality, dimension, and natural-row checks");
}

#[test]
fn criterion_04_binary_tetrahedral_coefficients() {
    assert_eq!(
        coeffs_of(GroupSpec::BinaryTetrahedral),
        &[
            q(167, 288),
            q(29, 144),
            q(-3, 32),
            q(-19, 144),
            q(-25, 288),
            q(-19, 144),
            q(-25, 288)
        ]
    );
    println!("PASS criterion 4: all 7 binary tetrahedral coefficients");
}

#[test]
fn criterion_05_binary_icosahedral_coefficients() {
    assert_eq!(
        coeffs_of(GroupSpec::BinaryIcosahedral),
        &[
            q(1079, 1440),
            q(73, 144),
            q(9, 32),
            q(29, 360),
            q(-25, 288),
            q(-17, 80),
            q(-61, 360),
            q(-67, 720),
            q(-19, 160)
        ]
    );
    println!("PASS criterion 5: all 9 binary icosahedral coefficients");
}

#[test]
fn criterion_06_binary_octahedral_coefficients_with_erratum() {
    let computed = coeffs_of(GroupSpec::BinaryOctahedral);
    let published = [
        q(383, 576),
        q(101, 288),
        q(5, 64),
        q(-19, 144),
        q(-11, 64),
        q(-43, 288),
        q(-49, 576),
        q(-26, 288),
    ];
    for i in 0..7 {
        assert_eq!(computed[i], published[i], "entry {}", i);
    }
    // The last published entry violates sum dim_i T_i = 0; the direct sum
    // gives -25/288.
    assert_eq!(computed[7], q(-25, 288));
    assert_ne!(computed[7], published[7]);
    let analysis = &sweep()[&GroupSpec::BinaryOctahedral];
    let errata: Vec<_> = analysis
        .entries
        .iter()
        .filter(|e| e.verdict == Verdict::PaperErratum)
        .collect();
    assert_eq!(errata.len(), 1);
    assert!(errata[0].subject.starts_with("rho_2''"));
    assert_eq!(errata[0].computed, "-25/288");
    println!(
        "PASS criterion 6: 7 of 8 binary octahedral coefficients, one erratum (-25/288 vs -26/288)"
    );
}

#[test]
fn criterion_07_d4_worked_example() {
    let spec = GroupSpec::BinaryDihedral(2);
    assert_eq!(
        coeffs_of(spec),
        &[q(13, 32), q(-3, 32), q(-3, 32), q(-3, 32), q(-1, 16)]
    );
    let coeffs = &sweep()[&spec].coefficients;
    assert_eq!(
        delta(coeffs, &KClass(vec![2, 0, 0, 0, -1])).unwrap(),
        q(7, 8)
    );
    assert_eq!(
        delta(coeffs, &KClass(vec![-1, -1, -1, -1, 2])).unwrap(),
        q(-1, 4)
    );
    println!("PASS criterion 7: D4 example (13/32, -3/32, -3/32, -3/32, -1/16), 7/8, -1/4");
}

#[test]
fn criterion_08_type_a_closed_form() {
    for n in 1..=MAX_A {
        let computed = coeffs_of(GroupSpec::Cyclic(n));
        for j in 0..n {
            assert_eq!(
                computed[j as usize],
                closed_form_a(n, j),
                "N = {}, j = {}",
                n,
                j
            );
        }
    }
    println!("PASS criterion 8: type-A closed form equals direct sums for N <= 50");
}

#[test]
fn criterion_09_type_d_closed_forms() {
    for n in 1..=MAX_D {
        let computed = coeffs_of(GroupSpec::BinaryDihedral(n));
        for (i, v) in computed.iter().enumerate() {
            assert_eq!(
                *v,
                closed_form_d(n, d_irrep_at(i)),
                "n = {}, irrep {}",
                n,
                i
            );
        }
    }
    // Published constant-term variants, at their witness groups.
    assert_eq!(closed_form_d_printed(2, DIrrep::RhoA), q(-5, 32));
    assert_eq!(closed_form_d(2, DIrrep::RhoA), q(-3, 32));
    assert_eq!(closed_form_d_printed(3, DIrrep::Psi(2)), q(-19, 72));
    assert_eq!(closed_form_d(3, DIrrep::Psi(2)), q(-13, 72));
    let d2_errata: Vec<_> = sweep()[&GroupSpec::BinaryDihedral(2)]
        .entries
        .iter()
        .filter(|e| e.verdict == Verdict::PaperErratum)
        .collect();
    let d3_errata: Vec<_> = sweep()[&GroupSpec::BinaryDihedral(3)]
        .entries
        .iter()
        .filter(|e| e.verdict == Verdict::PaperErratum)
        .collect();
    assert_eq!((d2_errata.len(), d3_errata.len()), (1, 1));
    println!("PASS criterion 9: type-D closed forms (corrected constants) for n <= 25; both published variants reported");
}

#[test]
fn criterion_10_skyscraper_law() {
    for (spec, analysis) in sweep() {
        let entry = analysis
            .entries
            .iter()
            .find(|e| e.name == "skyscraper")
            .unwrap_or_else(|| panic!("{}: no skyscraper entry", spec));
        assert_eq!(entry.verdict, Verdict::Match, "{}", spec);
    }
    // Spot values straight from the law.
    let e6 = &sweep()[&GroupSpec::BinaryTetrahedral];
    let k = kleinian::rrcoeff::skyscraper_class(&e6.table, 0).unwrap();
    assert_eq!(delta(&e6.coefficients, &k).unwrap(), q(23, 24));
    let e8 = &sweep()[&GroupSpec::BinaryIcosahedral];
    let k = kleinian::rrcoeff::skyscraper_class(&e8.table, 0).unwrap();
    assert_eq!(delta(&e8.coefficients, &k).unwrap(), q(119, 120));
    println!("PASS criterion 10: skyscraper law 1 - 1/|G| and -dim/|G| across the sweep");
}

#[test]
fn criterion_11_fundamental_cycle_cross_check() {
    for (spec, analysis) in sweep() {
        let t0 = &analysis.coefficients.values[analysis.table.trivial_index()];
        let ct19 = ct19_delta_o_from_table(&analysis.table, &analysis.mckay).unwrap();
        assert_eq!(*t0, ct19, "{}", spec);
    }
    assert_eq!(coeffs_of(GroupSpec::BinaryTetrahedral)[0], q(167, 288));
    assert_eq!(coeffs_of(GroupSpec::BinaryOctahedral)[0], q(383, 576));
    assert_eq!(coeffs_of(GroupSpec::BinaryIcosahedral)[0], q(1079, 1440));
    assert_eq!(coeffs_of(GroupSpec::BinaryDihedral(2))[0], q(13, 32));
    for n in 1..=MAX_A {
        let n_i = n as i64;
        assert_eq!(
            coeffs_of(GroupSpec::Cyclic(n))[0],
            q(n_i * n_i - 1, 12 * n_i),
            "N = {}",
            n
        );
    }
    println!("PASS criterion 11: T_0 = (1/12)(chi_top(C_red) - 1/|G|) across the sweep");
}

#[test]
fn criterion_12_element_sum_oracle() {
    for (spec, analysis) in sweep() {
        let entry = analysis
            .entries
            .iter()
            .find(|e| e.name == "element-sum-oracle")
            .unwrap();
        assert_eq!(entry.verdict, Verdict::Match, "{}", spec);
        assert_eq!(entry.computed, entry.expected, "{}", spec);
    }
    // Direct recomputation for a sample.
    for spec in [
        GroupSpec::Cyclic(12),
        GroupSpec::BinaryDihedral(5),
        GroupSpec::BinaryIcosahedral,
    ] {
        let analysis = &sweep()[&spec];
        let oracle = kleinian::rrcoeff::rr_coefficients_element_sum(&analysis.table).unwrap();
        assert_eq!(oracle, analysis.coefficients.values, "{}", spec);
    }
    println!("PASS criterion 12: per-element brute-force sum equals the class sum");
}

#[test]
fn criterion_13_regular_representation_identity() {
    for (spec, analysis) in sweep() {
        let mut sum = Rational::zero();
        for (irrep, t) in analysis
            .table
            .irreps
            .iter()
            .zip(&analysis.coefficients.values)
        {
            sum = &sum + &(&Rational::from_int(irrep.dim as i64) * t);
        }
        assert!(sum.is_zero(), "{}: sum dim * T = {}", spec, sum);
    }
    println!("PASS criterion 13: sum dim_i * T_i = 0 across the sweep");
}

/// Exact rank of an integer matrix via Gaussian elimination over Q.
fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        let inv = m[row][col].recip().unwrap();
        for c in col..cols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    m[r][c] = &m[r][c] - &(&f * &m[row][c]);
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

#[test]
fn criterion_14_mckay_graphs_are_affine_ade() {
    for (spec, analysis) in sweep() {
        let a = &analysis.mckay;
        let t = &analysis.table;
        let m = a.len();
        let dims: Vec<u64> = t.irreps.iter().map(|r| r.dim as u64).collect();

        // Symmetry; zero diagonal except the trivial group.
        for i in 0..m {
            for j in 0..m {
                assert_eq!(a[i][j], a[j][i], "{}", spec);
            }
            if *spec != GroupSpec::Cyclic(1) {
                assert_eq!(a[i][i], 0, "{}", spec);
            }
        }
        // The dimension vector is a positive null vector of 2*Id - A
        // (the affine Perron vector), and the corank is exactly 1.
        for i in 0..m {
            let s: u64 = (0..m).map(|j| a[i][j] * dims[j]).sum();
            assert_eq!(s, 2 * dims[i], "{}: row {}", spec, i);
        }
        let cartan: Vec<Vec<Rational>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let d = if i == j { 2 } else { 0 };
                        Rational::from_int(d - a[i][j] as i64)
                    })
                    .collect()
            })
            .collect();
        assert_eq!(rank(cartan), m - 1, "{}: corank", spec);

        // Family shapes via degree sequences (with multiplicity).
        let mut degrees: Vec<u64> = (0..m)
            .map(|i| (0..m).filter(|&j| j != i).map(|j| a[i][j]).sum())
            .collect();
        degrees.sort_unstable();
        let expected: Vec<u64> = match spec {
            GroupSpec::Cyclic(1) => vec![0],
            GroupSpec::Cyclic(2) => vec![2, 2],
            GroupSpec::Cyclic(_) => vec![2; m],
            // Dic_1 is cyclic of order 4, so its diagram is the 4-cycle.
            GroupSpec::BinaryDihedral(1) => vec![2, 2, 2, 2],
            GroupSpec::BinaryDihedral(2) => vec![1, 1, 1, 1, 4],
            GroupSpec::BinaryDihedral(n) => {
                let mut d = vec![1, 1, 1, 1];
                d.extend(std::iter::repeat_n(2, *n as usize - 3));
                d.extend([3, 3]);
                d
            }
            GroupSpec::BinaryTetrahedral => vec![1, 1, 1, 2, 2, 2, 3],
            GroupSpec::BinaryOctahedral => vec![1, 1, 1, 2, 2, 2, 2, 3],
            GroupSpec::BinaryIcosahedral => vec![1, 1, 1, 2, 2, 2, 2, 2, 3],
        };
        assert_eq!(degrees, expected, "{}: degree sequence", spec);
    }
    // Trivial node hangs off the 2-dimensional natural node for 2I.
    let e8 = &sweep()[&GroupSpec::BinaryIcosahedral];
    let triv = e8.table.trivial_index();
    let nat = e8.table.natural_index.unwrap();
    assert_eq!(e8.mckay[triv][nat], 1);
    println!("PASS criterion 14: McKay graphs are the affine ADE diagrams (corank-1 checks)");
}
