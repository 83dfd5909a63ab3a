//! Empirical sweeps for the two open questions: whether the general
//! position number of a strong product always equals the product of factor
//! values, and whether equality with the strong-resolving clique number in
//! direct products forces diameter two. The explorer produces instance
//! evidence only; it proves nothing.

use std::collections::BTreeMap;

use genpos::{
    bfs_all_pairs, clique_number, diameter, direct_product, gp_number, is_connected,
    strong_product, strong_resolving_graph,
};
use serde::Serialize;

use crate::catalog::Catalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    /// Direct-product dichotomy: can gp = ω(SR) hold with diameter ≠ 2?
    DirectDichotomy,
    /// Strong-product equality: does gp(G⊠H) = gp(G)·gp(H) always hold?
    StrongEquality,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::DirectDichotomy => "problem-1",
            Problem::StrongEquality => "problem-2",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub g: String,
    pub h: String,
    pub lhs: u64,
    pub rhs: u64,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExploreReport {
    pub schema: u32,
    pub problem: String,
    pub source_g: String,
    pub source_h: String,
    pub pairs_examined: u64,
    pub tallies: BTreeMap<String, u64>,
    /// Pairs contradicting the proved direction (problem 2) or realizing
    /// equality away from diameter 2 (problem 1).
    pub violations: Vec<PairRecord>,
    pub completed: bool,
    pub resume_cursor: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ExploreBudget {
    /// Stop after examining this many pairs (soft: report carries a cursor).
    pub max_pairs: Option<u64>,
    /// Skip this many pairs first (cursor from an earlier run).
    pub resume: u64,
}

/// Streams pairs in row-major catalog order, deterministically.
pub fn explore(
    problem: Problem,
    catalog_g: &Catalog,
    catalog_h: &Catalog,
    budget: ExploreBudget,
) -> ExploreReport {
    let mut tallies: BTreeMap<String, u64> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut examined = 0u64;
    let total = catalog_g.len() as u64 * catalog_h.len() as u64;
    let mut cursor = budget.resume;
    let mut completed = true;

    while cursor < total {
        if let Some(max) = budget.max_pairs {
            if examined >= max {
                completed = false;
                break;
            }
        }
        let i = (cursor / catalog_h.len().max(1) as u64) as usize;
        let j = (cursor % catalog_h.len().max(1) as u64) as usize;
        cursor += 1;
        let (tag_g, g) = &catalog_g.graphs[i];
        let (tag_h, h) = &catalog_h.graphs[j];
        examined += 1;

        match problem {
            Problem::StrongEquality => {
                let (prod, _) = strong_product(g, h);
                let lhs = gp_number(&prod).expect("product of connected is connected").value as u64;
                let rhs = (gp_number(g).unwrap().value * gp_number(h).unwrap().value) as u64;
                if lhs < rhs {
                    *tallies.entry("violation".into()).or_default() += 1;
                    violations.push(PairRecord {
                        g: tag_g.clone(),
                        h: tag_h.clone(),
                        lhs,
                        rhs,
                        note: "gp of product below product of gps".into(),
                    });
                } else if lhs == rhs {
                    *tallies.entry("equality".into()).or_default() += 1;
                } else {
                    *tallies.entry("strict".into()).or_default() += 1;
                }
            }
            Problem::DirectDichotomy => {
                let (prod, _) = direct_product(g, h);
                if prod.n() < 2 {
                    // Single-vertex products fall outside the standing
                    // order >= 2 assumption.
                    *tallies.entry("skipped-trivial-order".into()).or_default() += 1;
                    continue;
                }
                if !is_connected(&prod) {
                    *tallies.entry("skipped-disconnected".into()).or_default() += 1;
                    continue;
                }
                let gp = gp_number(&prod).unwrap().value as u64;
                let sr = strong_resolving_graph(&prod).unwrap();
                let omega_sr = clique_number(&sr).value as u64;
                let diam = diameter(&prod, &bfs_all_pairs(&prod)).unwrap();
                match (gp == omega_sr, diam == 2) {
                    (true, true) => {
                        *tallies.entry("equality-diam-2".into()).or_default() += 1
                    }
                    (true, false) => {
                        *tallies.entry("equality-diam-other".into()).or_default() += 1;
                        violations.push(PairRecord {
                            g: tag_g.clone(),
                            h: tag_h.clone(),
                            lhs: gp,
                            rhs: diam as u64,
                            note: "equality holds at diameter != 2".into(),
                        });
                    }
                    (false, _) => *tallies.entry("no-equality".into()).or_default() += 1,
                }
            }
        }
    }

    ExploreReport {
        schema: 1,
        problem: problem.name().to_string(),
        source_g: catalog_g.source.clone(),
        source_h: catalog_h.source.clone(),
        pairs_examined: examined,
        tallies,
        violations,
        completed,
        resume_cursor: (!completed).then_some(cursor),
    }
}
