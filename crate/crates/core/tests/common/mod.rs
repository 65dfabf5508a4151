#![allow(dead_code)]

use std::collections::BTreeSet;

use confchi::{downward_closure, Simplex, SimplicialComplex, StratifiedSpace, Stratum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn masks_to_complex(masks: &[u32]) -> SimplicialComplex {
    let facets = masks
        .iter()
        .map(|&m| Simplex::new((0..32i64).filter(|i| m & (1 << i) != 0).map(|i| i + 1)).unwrap())
        .collect();
    downward_closure(facets).unwrap()
}

/// Every non-empty simplicial complex whose vertices lie in `{1, 2, 3, 4}`,
/// one per antichain of non-empty subsets (166 of them).
pub fn all_complexes_on_four_vertices() -> Vec<SimplicialComplex> {
    let subsets: Vec<u32> = (1..16).collect();
    let mut out = Vec::new();
    for family in 1u32..(1 << subsets.len()) {
        let chosen: Vec<u32> = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| family & (1 << i) != 0)
            .map(|(_, &s)| s)
            .collect();
        let antichain = chosen
            .iter()
            .all(|&a| chosen.iter().all(|&b| a == b || a & b != a));
        if antichain {
            out.push(masks_to_complex(&chosen));
        }
    }
    out
}

/// Random facet sets on the vertex set `{1..5}`.
pub fn random_complexes_on_five_vertices(count: usize, seed: u64) -> Vec<SimplicialComplex> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=6);
            let masks: BTreeSet<u32> = (0..k).map(|_| rng.gen_range(1u32..32)).collect();
            masks_to_complex(&masks.into_iter().collect::<Vec<_>>())
        })
        .collect()
}

pub fn simplicial_corpus() -> Vec<SimplicialComplex> {
    let mut v = all_complexes_on_four_vertices();
    v.extend(random_complexes_on_five_vertices(100, 0x5eed));
    v
}

pub fn two_planes() -> StratifiedSpace {
    StratifiedSpace::new(vec![
        Stratum { name: "half-planes".into(), dim: 2, chi_c: 4, link_chi: Some(0), sheaf_rank: None },
        Stratum { name: "line".into(), dim: 1, chi_c: -1, link_chi: Some(4), sheaf_rank: None },
    ])
}

pub fn random_space<R: Rng>(rng: &mut R) -> StratifiedSpace {
    let m = rng.gen_range(1..=5);
    let strata = (0..m)
        .map(|i| Stratum {
            name: format!("s{i}"),
            dim: rng.gen_range(0..=4),
            chi_c: rng.gen_range(-4..=4),
            link_chi: Some(rng.gen_range(-3..=5)),
            sheaf_rank: Some(rng.gen_range(-3..=3)),
        })
        .collect();
    StratifiedSpace::new(strata)
}

/// Random refinement: splits a random stratum into 1..=4 parts with the same total.
pub fn random_refinement<R: Rng>(rng: &mut R, space: &StratifiedSpace) -> StratifiedSpace {
    let idx = rng.gen_range(0..space.strata().len());
    let target = &space.strata()[idx];
    let k = rng.gen_range(1..=4);
    let mut parts: Vec<i64> = (0..k - 1).map(|_| rng.gen_range(-3..=3)).collect();
    parts.push(target.chi_c - parts.iter().sum::<i64>());
    space.refine(&target.name.clone(), &parts).unwrap()
}

pub fn point_strata(m: usize) -> StratifiedSpace {
    StratifiedSpace::new(
        (0..m)
            .map(|i| Stratum { name: format!("p{i}"), dim: 0, chi_c: 1, link_chi: Some(0), sheaf_rank: None })
            .collect(),
    )
}
