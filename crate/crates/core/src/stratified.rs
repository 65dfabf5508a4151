//! Finite stratified spaces described stratum by stratum.
//!
//! Only the numeric invariants that the generating functions consume are
//! recorded: dimension, compactly supported Euler characteristic, the Euler
//! characteristic of the link, and the Euler characteristic of the sheaf
//! complex restricted to the stratum. A record may stand for a disjoint union
//! of strata sharing the same link; `chi_c` is then the sum over the pieces.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StratifiedError {
    #[error("stratified space has no strata")]
    Empty,
    #[error("stratum name {0:?} is used more than once")]
    DuplicateName(String),
    #[error("stratum {name:?}: dimension {dim} is negative")]
    NegativeDim { name: String, dim: i64 },
    #[error("stratum {0:?}: missing link_chi")]
    MissingLink(String),
    #[error("stratum {0:?}: missing sheaf_rank")]
    MissingSheafRank(String),
    #[error("no stratum named {0:?}")]
    UnknownStratum(String),
    #[error("stratum {name:?}: parts sum to {sum}, expected chi_c = {chi_c}")]
    PartsMismatch { name: String, sum: i64, chi_c: i64 },
    #[error("stratum {0:?}: refinement needs at least one part")]
    NoParts(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stratum {
    pub name: String,
    pub dim: i64,
    /// Compactly supported Euler characteristic of the stratum.
    pub chi_c: i64,
    /// Euler characteristic of the link.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link_chi: Option<i64>,
    /// Alternating sum of the ranks of the sheaf complex restricted to the stratum.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sheaf_rank: Option<i64>,
}

impl Stratum {
    /// Ordinary Euler characteristic, `(-1)^dim · chi_c` (strata are manifolds).
    pub fn chi_ordinary(&self) -> i64 {
        if self.dim % 2 == 0 {
            self.chi_c
        } else {
            -self.chi_c
        }
    }
}

/// Stratumwise Euler characteristic of the dualizing complex:
/// `(-1)^dim (1 - χ(link))`.
pub fn dualizing_rank(s: &Stratum) -> Result<i64, StratifiedError> {
    let link = s.link_chi.ok_or_else(|| StratifiedError::MissingLink(s.name.clone()))?;
    let sign = if s.dim % 2 == 0 { 1 } else { -1 };
    Ok(sign * (1 - link))
}

/// Input schema: `{"strata": [{"name": "line", "dim": 1, "chi_c": -1, "link_chi": 4}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratifiedSpace {
    strata: Vec<Stratum>,
}

impl StratifiedSpace {
    pub fn new(strata: Vec<Stratum>) -> Self {
        StratifiedSpace { strata }
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn into_strata(self) -> Vec<Stratum> {
        self.strata
    }

    /// `χ_c(X)` by additivity over strata.
    pub fn total_chi_c(&self) -> i64 {
        self.strata.iter().map(|s| s.chi_c).sum()
    }

    pub fn validate(&self, require_links: bool, require_sheaf: bool) -> Result<(), StratifiedError> {
        if self.strata.is_empty() {
            return Err(StratifiedError::Empty);
        }
        let mut seen = HashSet::new();
        for s in &self.strata {
            if !seen.insert(s.name.as_str()) {
                return Err(StratifiedError::DuplicateName(s.name.clone()));
            }
            if s.dim < 0 {
                return Err(StratifiedError::NegativeDim { name: s.name.clone(), dim: s.dim });
            }
            if require_links && s.link_chi.is_none() {
                return Err(StratifiedError::MissingLink(s.name.clone()));
            }
            if require_sheaf && s.sheaf_rank.is_none() {
                return Err(StratifiedError::MissingSheafRank(s.name.clone()));
            }
        }
        Ok(())
    }

    /// Same space with every sheaf rank replaced by the dualizing rank.
    pub fn with_dualizing_sheaf(&self) -> Result<StratifiedSpace, StratifiedError> {
        let strata = self
            .strata
            .iter()
            .map(|s| {
                Ok(Stratum { sheaf_rank: Some(dualizing_rank(s)?), ..s.clone() })
            })
            .collect::<Result<_, StratifiedError>>()?;
        Ok(StratifiedSpace { strata })
    }

    /// Same space with unset sheaf ranks filled by 1 (the constant sheaf).
    pub fn with_constant_sheaf(&self) -> StratifiedSpace {
        let strata = self
            .strata
            .iter()
            .map(|s| Stratum { sheaf_rank: Some(s.sheaf_rank.unwrap_or(1)), ..s.clone() })
            .collect();
        StratifiedSpace { strata }
    }

    /// Splits stratum `name` into pieces with the given `chi_c` values.
    ///
    /// A single part keeps the original name; otherwise the pieces are
    /// named `name/0`, `name/1`, ….
    pub fn refine(&self, name: &str, parts: &[i64]) -> Result<StratifiedSpace, StratifiedError> {
        let idx = self
            .strata
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| StratifiedError::UnknownStratum(name.to_string()))?;
        let target = &self.strata[idx];
        if parts.is_empty() {
            return Err(StratifiedError::NoParts(name.to_string()));
        }
        let sum: i64 = parts.iter().sum();
        if sum != target.chi_c {
            return Err(StratifiedError::PartsMismatch {
                name: name.to_string(),
                sum,
                chi_c: target.chi_c,
            });
        }
        let pieces: Vec<Stratum> = if parts.len() == 1 {
            vec![target.clone()]
        } else {
            parts
                .iter()
                .enumerate()
                .map(|(i, &chi_c)| Stratum {
                    name: format!("{name}/{i}"),
                    chi_c,
                    ..target.clone()
                })
                .collect()
        };
        let mut strata = self.strata.clone();
        strata.splice(idx..=idx, pieces);
        let out = StratifiedSpace { strata };
        let mut seen = HashSet::new();
        if let Some(dup) = out.strata.iter().find(|s| !seen.insert(s.name.as_str())) {
            return Err(StratifiedError::DuplicateName(dup.name.clone()));
        }
        Ok(out)
    }

    /// Merges strata with equal `(dim, link_chi, sheaf_rank)` by summing `chi_c`.
    ///
    /// Groups appear in order of first occurrence; merged names are joined with `+`.
    pub fn coarsen(&self) -> StratifiedSpace {
        type Key = (i64, Option<i64>, Option<i64>);
        let mut order: Vec<Key> = Vec::new();
        let mut groups: BTreeMap<Key, Stratum> = BTreeMap::new();
        for s in &self.strata {
            let key = (s.dim, s.link_chi, s.sheaf_rank);
            match groups.get_mut(&key) {
                Some(g) => {
                    g.chi_c += s.chi_c;
                    g.name = format!("{}+{}", g.name, s.name);
                }
                None => {
                    order.push(key);
                    groups.insert(key, s.clone());
                }
            }
        }
        let strata = order.into_iter().map(|k| groups.remove(&k).unwrap()).collect();
        StratifiedSpace { strata }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stratum(name: &str, dim: i64, chi_c: i64, link_chi: Option<i64>) -> Stratum {
        Stratum { name: name.into(), dim, chi_c, link_chi, sheaf_rank: None }
    }

    fn two_planes() -> StratifiedSpace {
        StratifiedSpace::new(vec![
            stratum("half-planes", 2, 4, Some(0)),
            stratum("line", 1, -1, Some(4)),
        ])
    }

    #[test]
    fn two_planes_validates_grouped_or_split() {
        assert!(two_planes().validate(true, false).is_ok());
        let split = two_planes().refine("half-planes", &[1, 1, 1, 1]).unwrap();
        assert_eq!(split.strata().len(), 5);
        assert!(split.validate(true, false).is_ok());
    }

    #[test]
    fn validation_errors() {
        let bad = StratifiedSpace::new(vec![stratum("a", -1, 1, Some(0))]);
        assert_eq!(
            bad.validate(false, false),
            Err(StratifiedError::NegativeDim { name: "a".into(), dim: -1 })
        );
        let nolink = StratifiedSpace::new(vec![stratum("p", 0, 1, None)]);
        assert!(nolink.validate(false, false).is_ok());
        assert_eq!(nolink.validate(true, false), Err(StratifiedError::MissingLink("p".into())));
        assert_eq!(
            nolink.validate(false, true),
            Err(StratifiedError::MissingSheafRank("p".into()))
        );
        let dup = StratifiedSpace::new(vec![stratum("p", 0, 1, None), stratum("p", 1, 1, None)]);
        assert_eq!(dup.validate(false, false), Err(StratifiedError::DuplicateName("p".into())));
        assert_eq!(StratifiedSpace::new(vec![]).validate(false, false), Err(StratifiedError::Empty));
    }

    #[test]
    fn dualizing_ranks() {
        assert_eq!(dualizing_rank(&stratum("line", 1, -1, Some(4))), Ok(3));
        assert_eq!(dualizing_rank(&stratum("plane", 2, 4, Some(0))), Ok(1));
        for d in 0..5 {
            let expected = if d % 2 == 0 { 1 } else { -1 };
            assert_eq!(dualizing_rank(&stratum("m", d, 1, Some(0))), Ok(expected));
        }
        // open 2-cell with a one-point link, open 1-cell with link S^0
        assert_eq!(dualizing_rank(&stratum("c", 2, 1, Some(1))), Ok(0));
        assert_eq!(dualizing_rank(&stratum("e", 1, -1, Some(2))), Ok(1));
        assert_eq!(
            dualizing_rank(&stratum("x", 0, 1, None)),
            Err(StratifiedError::MissingLink("x".into()))
        );
    }

    #[test]
    fn chi_ordinary_is_derived() {
        assert_eq!(stratum("line", 1, -1, None).chi_ordinary(), 1);
        assert_eq!(stratum("plane", 2, 1, None).chi_ordinary(), 1);
    }

    #[test]
    fn refine_errors_and_identity() {
        let x = two_planes();
        assert_eq!(x.refine("half-planes", &[4]).unwrap(), x);
        assert_eq!(
            x.refine("half-planes", &[2, 1]),
            Err(StratifiedError::PartsMismatch { name: "half-planes".into(), sum: 3, chi_c: 4 })
        );
        assert!(matches!(x.refine("nope", &[1]), Err(StratifiedError::UnknownStratum(_))));
        assert!(matches!(x.refine("line", &[]), Err(StratifiedError::NoParts(_))));
    }

    #[test]
    fn coarsen_undoes_refine() {
        let x = two_planes();
        let fine = x.refine("half-planes", &[3, -1, 2]).unwrap();
        let back = fine.coarsen();
        assert_eq!(back.strata().len(), 2);
        assert_eq!(back.strata()[0].chi_c, 4);
        assert_eq!(back.strata()[1], x.strata()[1]);
    }

    #[test]
    fn json_schema() {
        let j = r#"{"strata":[{"name":"line","dim":1,"chi_c":-1,"link_chi":4,"sheaf_rank":1},
                              {"name":"hp","dim":2,"chi_c":4}]}"#;
        let x: StratifiedSpace = serde_json::from_str(j).unwrap();
        assert_eq!(x.strata()[0].sheaf_rank, Some(1));
        assert_eq!(x.strata()[1].link_chi, None);
        let back: StratifiedSpace = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        assert_eq!(back, x);
    }
}
