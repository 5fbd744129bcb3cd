//! Special subspaces: the decision pipeline (stability, dimension
//! count, support matching, certification) and the enumeration of
//! Spcl(V) over P_0-stable weight subsets.

use crate::instance::PvsInstance;
use crate::matching::{MatchingVariant, MatchingWitness};
use crate::minset::MinsetStatus;
use crate::PvsError;
use exactla::vector::{add as vadd, QVec};
use rootsys::ParabolicIndex;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trivalent {
    Yes,
    No,
    Unknown,
}

impl Trivalent {
    pub fn is_yes(self) -> bool {
        matches!(self, Trivalent::Yes)
    }
}

/// Everything the decision pipeline establishes about one subspace.
#[derive(Debug, Clone)]
pub struct SpecialReport {
    pub members: BTreeSet<usize>,
    pub p0_stable: bool,
    pub stab: Option<ParabolicIndex>,
    pub env: Option<ParabolicIndex>,
    pub minset: MinsetStatus,
    pub codim_v: usize,
    pub nilradical_size: Option<usize>,
    pub matching: Option<MatchingWitness>,
    pub lambda: QVec,
    pub lambda_identity_checked: bool,
    pub special: Trivalent,
}

impl PvsInstance {
    /// Runs the special-subspace decision pipeline on one weight subset:
    /// P_0-stability, stabilizer, Minset certification, the dimension
    /// count dim V/U = dim G/S, the parabolic matching, and the lambda
    /// identity of the matching.
    pub fn is_special(&self, members: &BTreeSet<usize>) -> Result<SpecialReport, PvsError> {
        let lambda = self.lambda_of(members);
        let mut report = SpecialReport {
            members: members.clone(),
            p0_stable: false,
            stab: None,
            env: None,
            minset: MinsetStatus::Unknown,
            codim_v: self.codim(members),
            nilradical_size: None,
            matching: None,
            lambda,
            lambda_identity_checked: false,
            special: Trivalent::No,
        };
        let Some(stab) = self.stabilizer_of(members) else {
            return Ok(report);
        };
        report.p0_stable = true;
        report.stab = Some(stab.clone());
        let nil = self.nilradical_root_indices(&stab).len();
        report.nilradical_size = Some(nil);
        if report.codim_v != nil {
            // not special regardless of Minset; still record what we can
            report.minset = self.minset_certify(members);
            report.env = self.env_of(members).ok();
            return Ok(report);
        }
        report.minset = self.minset_certify(members);
        report.matching = self.matching_iota(members, MatchingVariant::Parabolic);
        if let Some(witness) = &report.matching {
            // lambda(U) = sum_j (beta_j + alpha_iota(j)) + delta_0^{M_S}
            let expected = vadd(&witness.pair_sum(self), &self.delta0_levi(&stab));
            report.lambda_identity_checked = expected == report.lambda;
            debug_assert!(
                report.lambda_identity_checked,
                "perfect parabolic matching must satisfy the lambda identity"
            );
        }
        report.special = match (&report.minset, &report.matching) {
            (MinsetStatus::Certified(_), Some(_)) => Trivalent::Yes,
            (MinsetStatus::Unknown, Some(_)) => Trivalent::Unknown,
            _ => Trivalent::No,
        };
        if report.special != Trivalent::No {
            report.env = Some(self.env_of(members)?);
        } else {
            report.env = self.env_of(members).ok();
        }
        Ok(report)
    }

    /// All P_0-stable weight subsets, i.e. the up-sets of the preorder
    /// beta <= beta + alpha (alpha positive root of G, both weights).
    /// Deterministic order: by size, then lexicographically.
    pub fn p0_stable_subsets(&self) -> Result<Vec<BTreeSet<usize>>, PvsError> {
        let n = self.psi.len();
        if n > self.caps.max_weights {
            return Err(PvsError::CapExceeded {
                weights: n,
                cap: self.caps.max_weights,
            });
        }
        // successor lists: j -> j' when beta_{j'} = beta_j + alpha
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for j in 0..n {
            for r in &self.phi_scaled {
                let s: Vec<i64> = self.psi[j].scaled.iter().zip(r).map(|(a, b)| a + b).collect();
                if let Some(k) = self.weight_of_scaled(&s) {
                    succ[j].push(k);
                }
            }
        }
        // order elements so successors come before predecessors (heights
        // increase along arrows, so sort by pairing with any dominant
        // functional; simplest is a topological sort)
        let order = topo_order(&succ);
        let mut results: Vec<BTreeSet<usize>> = Vec::new();
        let mut current: Vec<bool> = vec![false; n];
        enumerate_upsets(&order, &succ, 0, &mut current, &mut results);
        results.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>()))
        });
        Ok(results)
    }

    /// Enumerates Spcl(V): the P_0-stable subsets filtered through the
    /// is_special pipeline. Returns the full reports (callers filter on
    /// `special`).
    pub fn enumerate_spcl(&self) -> Result<Vec<SpecialReport>, PvsError> {
        let mut out = Vec::new();
        for members in self.p0_stable_subsets()? {
            let report = self.is_special(&members)?;
            debug_assert!(report.p0_stable);
            if report.codim_v == report.nilradical_size.unwrap_or(usize::MAX) {
                out.push(report);
            }
        }
        Ok(out)
    }

    /// The members of Spcl(V) (special = Yes) in deterministic order.
    pub fn special_subspaces(&self) -> Result<Vec<SpecialReport>, PvsError> {
        Ok(self
            .enumerate_spcl()?
            .into_iter()
            .filter(|r| r.special.is_yes())
            .collect())
    }
}

fn topo_order(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut state = vec![0u8; n];
    let mut order = Vec::with_capacity(n);
    fn visit(v: usize, succ: &[Vec<usize>], state: &mut [u8], order: &mut Vec<usize>) {
        if state[v] != 0 {
            assert_eq!(state[v], 2, "weight preorder must be acyclic");
            return;
        }
        state[v] = 1;
        for &w in &succ[v] {
            if state[w] == 1 {
                panic!("weight preorder must be acyclic");
            }
            visit(w, succ, state, order);
        }
        state[v] = 2;
        order.push(v);
    }
    for v in 0..n {
        visit(v, succ, &mut state, &mut order);
    }
    // order now lists successors before predecessors
    order
}

/// Backtracking enumeration of up-sets: processing elements with all
/// successors decided first, an element may be included only when every
/// successor is included.
fn enumerate_upsets(
    order: &[usize],
    succ: &[Vec<usize>],
    pos: usize,
    current: &mut Vec<bool>,
    out: &mut Vec<BTreeSet<usize>>,
) {
    if pos == order.len() {
        out.push(
            current
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect(),
        );
        return;
    }
    let v = order[pos];
    // exclude v
    current[v] = false;
    enumerate_upsets(order, succ, pos + 1, current, out);
    // include v if allowed
    if succ[v].iter().all(|&w| current[w]) {
        current[v] = true;
        enumerate_upsets(order, succ, pos + 1, current, out);
        current[v] = false;
    }
}
