//! Reference character tables for the three exceptional binary polyhedral
//! groups, transcribed as exact cyclotomic values: `w = zeta_3` (a
//! primitive cube root of unity), `sqrt(2) = zeta_8 + zeta_8^7`,
//! `mu_pm = (1 +- sqrt(5))/2` with `sqrt(5)` the quadratic Gauss sum
//! `zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4`.
//!
//! These tables are trusted only after the build-time integrity checks:
//! exact row/column orthogonality, the dimension and regular-character
//! identities, and agreement of the natural row with the matrix traces.

use crate::exactnum::{Cyclotomic, Rational};
use crate::matgroup::GroupSpec;

pub(super) struct ETable {
    /// Class words in column order; column 0 is the identity.
    pub class_words: Vec<&'static str>,
    pub centralizer_orders: Vec<usize>,
    pub names: Vec<&'static str>,
    pub dims: Vec<usize>,
    pub rows: Vec<Vec<Cyclotomic>>,
}

fn ints(vals: &[i64]) -> Vec<Cyclotomic> {
    vals.iter().map(|&v| Cyclotomic::from_int(v)).collect()
}

pub(super) fn e_table(spec: GroupSpec) -> ETable {
    match spec {
        GroupSpec::BinaryTetrahedral => binary_tetrahedral(),
        GroupSpec::BinaryOctahedral => binary_octahedral(),
        GroupSpec::BinaryIcosahedral => binary_icosahedral(),
        _ => unreachable!("not an exceptional group"),
    }
}

fn binary_tetrahedral() -> ETable {
    let w = Cyclotomic::root_of_unity(3, 1);
    let w2 = Cyclotomic::root_of_unity(3, 2);
    let c = |v: i64| Cyclotomic::from_int(v);
    ETable {
        class_words: vec!["1", "-1", "tau", "mu", "mu^2", "mu^4", "mu^5"],
        centralizer_orders: vec![24, 24, 4, 6, 6, 6, 6],
        names: vec![
            "rho_0", "rho_2", "rho_3", "rho_2'", "rho_1'", "rho_2''", "rho_1''",
        ],
        dims: vec![1, 2, 3, 2, 1, 2, 1],
        rows: vec![
            ints(&[1, 1, 1, 1, 1, 1, 1]),
            ints(&[2, -2, 0, 1, -1, -1, 1]),
            ints(&[3, 3, -1, 0, 0, 0, 0]),
            vec![c(2), c(-2), c(0), w2.clone(), -&w, -&w2, w.clone()],
            vec![
                c(1),
                c(1),
                c(1),
                w2.clone(),
                w.clone(),
                w2.clone(),
                w.clone(),
            ],
            vec![c(2), c(-2), c(0), w.clone(), -&w2, -&w, w2.clone()],
            vec![c(1), c(1), c(1), w.clone(), w2.clone(), w, w2],
        ],
    }
}

fn binary_octahedral() -> ETable {
    let s = &Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, 7);
    let c = |v: i64| Cyclotomic::from_int(v);
    ETable {
        class_words: vec![
            "1",
            "-1",
            "mu",
            "mu^2",
            "tau",
            "kappa",
            "tau*kappa",
            "kappa^3",
        ],
        centralizer_orders: vec![48, 48, 6, 6, 8, 8, 4, 8],
        names: vec![
            "rho_0", "rho_2", "rho_3", "rho_4", "rho_3'", "rho_2'", "rho_1'", "rho_2''",
        ],
        dims: vec![1, 2, 3, 4, 3, 2, 1, 2],
        rows: vec![
            ints(&[1, 1, 1, 1, 1, 1, 1, 1]),
            vec![c(2), c(-2), c(1), c(-1), c(0), s.clone(), c(0), -&s],
            ints(&[3, 3, 0, 0, -1, 1, -1, 1]),
            ints(&[4, -4, -1, 1, 0, 0, 0, 0]),
            ints(&[3, 3, 0, 0, -1, -1, 1, -1]),
            vec![c(2), c(-2), c(1), c(-1), c(0), -&s, c(0), s],
            ints(&[1, 1, 1, 1, 1, -1, -1, -1]),
            ints(&[2, 2, -1, -1, 2, 0, 0, 0]),
        ],
    }
}

fn binary_icosahedral() -> ETable {
    let z = |k| Cyclotomic::root_of_unity(5, k);
    let sqrt5 = &(&z(1) - &z(2)) - &(&z(3) - &z(4));
    let half = Rational::new(1, 2);
    let mu_p = (&Cyclotomic::one() + &sqrt5).scale(&half);
    let mu_m = (&Cyclotomic::one() - &sqrt5).scale(&half);
    let c = |v: i64| Cyclotomic::from_int(v);
    ETable {
        class_words: vec![
            "1",
            "-1",
            "sigma",
            "sigma^2",
            "sigma^3",
            "sigma^4",
            "tau",
            "sigma^6*tau",
            "sigma*tau",
        ],
        centralizer_orders: vec![120, 120, 10, 10, 10, 10, 4, 6, 6],
        names: vec![
            "rho_0", "rho_2", "rho_3", "rho_4", "rho_5", "rho_6", "rho_4'", "rho_2'", "rho_3''",
        ],
        dims: vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
        rows: vec![
            ints(&[1, 1, 1, 1, 1, 1, 1, 1, 1]),
            vec![
                c(2),
                c(-2),
                mu_p.clone(),
                -&mu_m,
                mu_m.clone(),
                -&mu_p,
                c(0),
                c(-1),
                c(1),
            ],
            vec![
                c(3),
                c(3),
                mu_p.clone(),
                mu_m.clone(),
                mu_m.clone(),
                mu_p.clone(),
                c(-1),
                c(0),
                c(0),
            ],
            ints(&[4, -4, 1, -1, 1, -1, 0, 1, -1]),
            ints(&[5, 5, 0, 0, 0, 0, 1, -1, -1]),
            ints(&[6, -6, -1, 1, -1, 1, 0, 0, 0]),
            ints(&[4, 4, -1, -1, -1, -1, 0, 1, 1]),
            vec![
                c(2),
                c(-2),
                mu_m.clone(),
                -&mu_p,
                mu_p.clone(),
                -&mu_m,
                c(0),
                c(-1),
                c(1),
            ],
            vec![
                c(3),
                c(3),
                mu_m.clone(),
                mu_p.clone(),
                mu_p,
                mu_m,
                c(-1),
                c(0),
                c(0),
            ],
        ],
    }
}
