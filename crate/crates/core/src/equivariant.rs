//! Unordered configuration spaces and the symmetric-group equivariant Euler characteristic.
//!
//! `S_n` acts freely on `F(X, n)`, so every non-identity element has trace
//! zero on the alternating sum of cohomology and the equivariant Euler
//! characteristic is `χ(B(X, n))` copies of the regular representation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::combinatorics::factorial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivariantError {
    #[error("n must be positive")]
    ZeroN,
    #[error("{n}! does not divide chi(F(X, {n})) = {chi_f}")]
    NotDivisible { chi_f: BigInt, n: usize },
}

/// Integer partitions of `n`, each in decreasing order, listed in reverse
/// lexicographic order (`[n]` first, `[1, …, 1]` last).
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of permutations with the given cycle type: `n! / z_λ`.
pub fn class_size(cycle_type: &[usize]) -> BigInt {
    let n: usize = cycle_type.iter().sum();
    let mut z = BigInt::from(1);
    let mut i = 0;
    while i < cycle_type.len() {
        let len = cycle_type[i];
        let mult = cycle_type[i..].iter().take_while(|&&c| c == len).count();
        z *= BigInt::from(len).pow(mult as u32) * factorial(mult);
        i += mult;
    }
    factorial(n) / z
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantChar {
    pub n: usize,
    /// `χ(B(X, n))`.
    pub multiplicity: BigInt,
    /// Character value per conjugacy class, keyed by cycle type.
    pub character: Vec<(Vec<usize>, BigInt)>,
}

impl EquivariantChar {
    pub fn value(&self, cycle_type: &[usize]) -> Option<&BigInt> {
        self.character.iter().find(|(c, _)| c == cycle_type).map(|(_, v)| v)
    }

    /// `(1/n!) Σ_g χ(g)`, the multiplicity of the trivial representation.
    pub fn trivial_multiplicity(&self) -> BigInt {
        let total: BigInt = self
            .character
            .iter()
            .map(|(c, v)| class_size(c) * v)
            .sum();
        total / factorial(self.n)
    }
}

fn cycle_label(c: &[usize]) -> String {
    let parts: Vec<String> = c.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub(crate) fn bigint_json(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(i) => serde_json::Value::from(i),
        Err(_) => serde_json::Value::from(v.to_string()),
    }
}

impl Serialize for EquivariantChar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Classes<'a>(&'a [(Vec<usize>, BigInt)]);
        impl Serialize for Classes<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (c, v) in self.0 {
                    map.serialize_entry(&cycle_label(c), &bigint_json(v))?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("multiplicity", &bigint_json(&self.multiplicity))?;
        map.serialize_entry("character", &Classes(&self.character))?;
        map.end()
    }
}

/// `χ(B(X, n)) = χ(F(X, n)) / n!`.
pub fn chi_unordered(chi_f: &BigInt, n: usize) -> Result<BigInt, EquivariantError> {
    if n == 0 {
        return Err(EquivariantError::ZeroN);
    }
    let (q, r) = chi_f.div_rem(&factorial(n));
    if !r.is_zero() {
        return Err(EquivariantError::NotDivisible { chi_f: chi_f.clone(), n });
    }
    Ok(q)
}

/// `χ(F(X, n))` at the identity class, zero on every other class.
pub fn equivariant_character(chi_f: &BigInt, n: usize) -> Result<EquivariantChar, EquivariantError> {
    let multiplicity = chi_unordered(chi_f, n)?;
    let character = integer_partitions(n)
        .into_iter()
        .map(|c| {
            let v = if c.iter().all(|&p| p == 1) { chi_f.clone() } else { BigInt::zero() };
            (c, v)
        })
        .collect();
    Ok(EquivariantChar { n, multiplicity, character })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(i: i64) -> BigInt {
        BigInt::from(i)
    }

    #[test]
    fn unordered_examples() {
        assert_eq!(chi_unordered(&big(6), 2), Ok(big(3)));
        assert_eq!(chi_unordered(&big(-30), 3), Ok(big(-5)));
        assert_eq!(
            chi_unordered(&big(5), 2),
            Err(EquivariantError::NotDivisible { chi_f: big(5), n: 2 })
        );
        assert_eq!(chi_unordered(&big(1), 0), Err(EquivariantError::ZeroN));
    }

    #[test]
    fn character_examples() {
        let c = equivariant_character(&big(6), 2).unwrap();
        assert_eq!(c.multiplicity, big(3));
        assert_eq!(c.value(&[1, 1]), Some(&big(6)));
        assert_eq!(c.value(&[2]), Some(&big(0)));

        let z = equivariant_character(&big(0), 3).unwrap();
        assert!(z.character.iter().all(|(_, v)| v.is_zero()));
        assert_eq!(z.multiplicity, big(0));

        for m in -3..=3 {
            let c = equivariant_character(&(factorial(4) * m), 4).unwrap();
            assert_eq!(c.value(&[1, 1, 1, 1]), Some(&(factorial(4) * m)));
            assert_eq!(c.trivial_multiplicity(), c.multiplicity);
        }
    }

    #[test]
    fn partitions_and_class_sizes() {
        assert_eq!(
            integer_partitions(4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        for n in 1..=7 {
            let total: BigInt = integer_partitions(n).iter().map(|c| class_size(c)).sum();
            assert_eq!(total, factorial(n));
        }
        assert_eq!(class_size(&[2, 2]), big(3));
        assert_eq!(class_size(&[2, 1, 1]), big(6));
    }

    #[test]
    fn json_shape() {
        let c = equivariant_character(&big(6), 2).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"n":2,"multiplicity":3,"character":{"[2]":0,"[1,1]":6}}"#
        );
    }
}
