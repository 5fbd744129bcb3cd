//! Fundamental-character cone checks: Sigma inside the nonnegative span
//! of Psi_U, rationally and integrally, with witness combinations.

use crate::instance::PvsInstance;
use crate::minset::MinsetStatus;
use exactla::cone_membership;
use exactla::vector::{QVec, Rat};
use num_traits::Zero;
use std::collections::{BTreeSet, HashSet};

#[derive(Debug, Clone)]
pub struct FundamentalConeReport {
    /// One entry per fundamental character.
    pub checks: Vec<CharacterCheck>,
}

#[derive(Debug, Clone)]
pub struct CharacterCheck {
    pub chi: QVec,
    pub rational_ok: bool,
    pub rational_witness: Option<Vec<Rat>>,
    pub integral_ok: bool,
    /// Nonnegative integer combination: multiplicity per member slot.
    pub integral_witness: Option<Vec<(usize, u32)>>,
}

impl PvsInstance {
    /// Cone checks for every chi in Sigma against Psi_U.
    /// The integral search bound is the FRIP degree when the oracle knows
    /// it, else twice the coefficient sum of the rational witness.
    pub fn fundamental_cone_check(&self, members: &BTreeSet<usize>) -> FundamentalConeReport {
        let member_list: Vec<usize> = members.iter().copied().collect();
        let gens: Vec<QVec> = member_list
            .iter()
            .map(|&j| self.psi[j].vector.clone())
            .collect();
        let degrees: Vec<usize> = self
            .oracle
            .as_ref()
            .map(|b| b.oracle.frip_degrees())
            .unwrap_or_default();
        let frip_weights: Vec<QVec> = self
            .oracle
            .as_ref()
            .map(|b| b.oracle.frip_weights())
            .unwrap_or_default();
        let checks = self
            .fund_chars
            .iter()
            .map(|chi| {
                let rational_witness = cone_membership(chi, &gens).expect("dims");
                let rational_ok = rational_witness.is_some();
                let bound = frip_weights
                    .iter()
                    .position(|w| w == chi)
                    .and_then(|i| degrees.get(i).copied())
                    .unwrap_or_else(|| {
                        rational_witness
                            .as_ref()
                            .map(|w| {
                                let sum: Rat = w.iter().sum();
                                let ceil = (sum.numer() / sum.denom()) + 1i64;
                                2 * usize::try_from(&ceil).unwrap_or(8)
                            })
                            .unwrap_or(0)
                    });
                let integral_witness = if rational_ok {
                    integral_combination(self, &member_list, chi, bound)
                } else {
                    None
                };
                CharacterCheck {
                    chi: chi.clone(),
                    rational_ok,
                    integral_ok: integral_witness.is_some(),
                    rational_witness,
                    integral_witness,
                }
            })
            .collect();
        FundamentalConeReport { checks }
    }

    /// Witness search strengthening the cone check: a Minset subspace U'
    /// of U with psi strictly positive on
    /// Psi_{U'}. Walks the integral combinations of psi over Psi_U
    /// lazily, certifying each new support until one passes.
    pub fn positive_support_witness(
        &self,
        members: &BTreeSet<usize>,
        psi: &QVec,
        bound: usize,
    ) -> Option<BTreeSet<usize>> {
        let member_list: Vec<usize> = members.iter().copied().collect();
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
        let mut acc: Vec<(usize, u32)> = Vec::new();
        let mut found: Option<BTreeSet<usize>> = None;
        self.combo_dfs(&member_list, 0, psi, bound, &mut acc, &mut |combo| {
            let support: BTreeSet<usize> = combo.iter().map(|&(j, _)| j).collect();
            if !seen.insert(support.clone()) {
                return false;
            }
            if let MinsetStatus::Certified(_) = self.minset_certify(&support) {
                found = Some(support);
                return true;
            }
            false
        });
        found
    }

    /// DFS over nonnegative-integer combinations summing to `rest`;
    /// `visit` returns true to stop the search.
    fn combo_dfs(
        &self,
        members: &[usize],
        pos: usize,
        rest: &QVec,
        budget: usize,
        acc: &mut Vec<(usize, u32)>,
        visit: &mut dyn FnMut(&[(usize, u32)]) -> bool,
    ) -> bool {
        if rest.iter().all(|x| x.is_zero()) && !acc.is_empty() && visit(acc) {
            return true;
        }
        if pos == members.len() || budget == 0 {
            return false;
        }
        let beta = self.psi[members[pos]].vector.clone();
        let mut r = rest.clone();
        for m in 0..=(budget as u32) {
            if m > 0 {
                for (a, b) in r.iter_mut().zip(&beta) {
                    *a -= b;
                }
                acc.push((members[pos], m));
            }
            let stop = self.combo_dfs(members, pos + 1, &r, budget - m as usize, acc, visit);
            if m > 0 {
                acc.pop();
            }
            if stop {
                return true;
            }
        }
        false
    }
}

/// First nonnegative-integer combination of `target` over the member
/// weights with total multiplicity at most `bound` (DFS with a failed
/// state memo).
fn integral_combination(
    instance: &PvsInstance,
    members: &[usize],
    target: &QVec,
    bound: usize,
) -> Option<Vec<(usize, u32)>> {
    let mut failed: HashSet<(usize, Vec<Rat>)> = HashSet::new();
    let mut acc: Vec<(usize, u32)> = Vec::new();
    fn dfs(
        instance: &PvsInstance,
        members: &[usize],
        pos: usize,
        rest: &QVec,
        budget: usize,
        acc: &mut Vec<(usize, u32)>,
        failed: &mut HashSet<(usize, Vec<Rat>)>,
    ) -> bool {
        if rest.iter().all(|x| x.is_zero()) {
            return true;
        }
        if pos == members.len() || budget == 0 {
            return false;
        }
        let key = (pos, rest.clone());
        if failed.contains(&key) {
            return false;
        }
        let beta = &instance.psi[members[pos]].vector;
        let mut m = 0u32;
        let mut r = rest.clone();
        loop {
            if dfs(instance, members, pos + 1, &r, budget - m as usize, acc, failed) {
                if m > 0 {
                    acc.push((members[pos], m));
                }
                return true;
            }
            if m as usize == budget {
                break;
            }
            m += 1;
            for (a, b) in r.iter_mut().zip(beta) {
                *a -= b;
            }
        }
        failed.insert(key);
        false
    }
    if dfs(instance, members, 0, target, bound, &mut acc, &mut failed) {
        acc.reverse();
        Some(acc)
    } else {
        None
    }
}

