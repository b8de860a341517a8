//! Words in the group generators.
//!
//! A word is a sequence of generator terms separated by `*` or whitespace,
//! each term a generator name with an optional integer exponent, e.g.
//! `a^3`, `mu^5`, `sigma^7*tau`, `x a^2`. The literals `1` and `-1` denote
//! plus and minus the identity.

use super::{Group, Mat2};
use crate::{Error, Result};

/// Evaluate a word in the generators of `group`'s spec. The result is
/// always reduced to the group's ambient conductor.
pub fn evaluate_word(group: &Group, word: &str) -> Result<Mat2> {
    let gens = group.spec.generators();
    let mut acc = Mat2::identity().at_conductor(group.conductor);
    let tokens: Vec<&str> = word
        .split(|c: char| c == '*' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    for token in tokens {
        let m = match token {
            "1" => Mat2::identity(),
            "-1" => Mat2::scalar(-1),
            _ => {
                let (name, exp) = match token.split_once('^') {
                    Some((name, e)) => {
                        let exp: i64 = e.parse().map_err(|_| {
                            Error::Parse(format!("invalid exponent in `{}`", token))
                        })?;
                        (name, exp)
                    }
                    None => (token, 1),
                };
                let gen = gens
                    .iter()
                    .find(|(g, _)| *g == name)
                    .map(|(_, m)| m.clone())
                    .ok_or_else(|| {
                        Error::Parse(format!(
                            "unknown generator `{}` for group {}",
                            name, group.spec
                        ))
                    })?;
                power(&gen, exp)
            }
        };
        acc = acc.mul(&m.at_conductor(group.conductor));
    }
    Ok(acc)
}

fn power(m: &Mat2, exp: i64) -> Mat2 {
    let base = if exp < 0 { m.inverse_sl2() } else { m.clone() };
    let mut acc = Mat2::identity();
    for _ in 0..exp.unsigned_abs() {
        acc = acc.mul(&base);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::GroupSpec;

    #[test]
    fn empty_word_is_identity() {
        let g = Group::build(GroupSpec::BinaryDihedral(2)).unwrap();
        let m = evaluate_word(&g, "").unwrap();
        assert_eq!(m, Mat2::identity().at_conductor(g.conductor));
    }

    #[test]
    fn negative_exponents() {
        let g = Group::build(GroupSpec::Cyclic(5)).unwrap();
        let m = evaluate_word(&g, "g^-2").unwrap();
        assert_eq!(m, evaluate_word(&g, "g^3").unwrap());
    }

    #[test]
    fn unknown_symbol_is_an_error() {
        let g = Group::build(GroupSpec::Cyclic(3)).unwrap();
        assert!(matches!(evaluate_word(&g, "q"), Err(Error::Parse(_))));
    }

    #[test]
    fn star_and_space_separators() {
        let g = Group::build(GroupSpec::BinaryDihedral(3)).unwrap();
        assert_eq!(
            evaluate_word(&g, "x*a^2").unwrap(),
            evaluate_word(&g, "x a^2").unwrap()
        );
    }
}
