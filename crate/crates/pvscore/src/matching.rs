//! Bipartite matchings between weight slots and root slots
//! (Hopcroft-Karp), in the two variants the support-set analysis uses.

use crate::instance::PvsInstance;
use exactla::vector::{self, QVec};
use rootsys::ParabolicIndex;
use std::collections::BTreeSet;

/// Maximum bipartite matching via Hopcroft-Karp. `adj[u]` lists the right
/// neighbours of left node u. Returns the left-to-right assignment.
pub fn hopcroft_karp(nleft: usize, nright: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    const INF: u32 = u32::MAX;
    let mut match_l: Vec<Option<usize>> = vec![None; nleft];
    let mut match_r: Vec<Option<usize>> = vec![None; nright];
    let mut dist = vec![INF; nleft];

    loop {
        // BFS layering from free left vertices
        let mut queue = std::collections::VecDeque::new();
        for u in 0..nleft {
            if match_l[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found_augmenting = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_r[v] {
                    None => found_augmenting = true,
                    Some(u2) => {
                        if dist[u2] == INF {
                            dist[u2] = dist[u] + 1;
                            queue.push_back(u2);
                        }
                    }
                }
            }
        }
        if !found_augmenting {
            break;
        }
        // DFS augmentation along the layering
        fn try_augment(
            u: usize,
            adj: &[Vec<usize>],
            dist: &mut Vec<u32>,
            match_l: &mut Vec<Option<usize>>,
            match_r: &mut Vec<Option<usize>>,
        ) -> bool {
            for &v in &adj[u] {
                let ok = match match_r[v] {
                    None => true,
                    Some(u2) => {
                        dist[u2] == dist[u] + 1
                            && try_augment(u2, adj, dist, match_l, match_r)
                    }
                };
                if ok {
                    match_l[u] = Some(v);
                    match_r[v] = Some(u);
                    return true;
                }
            }
            dist[u] = u32::MAX;
            false
        }
        for u in 0..nleft {
            if match_l[u].is_none() {
                try_augment(u, adj, &mut dist, &mut match_l, &mut match_r);
            }
        }
    }
    match_l
}

/// A root slot on the right side of the matching: a root of G or a zero
/// weight slot (the torus directions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSlot {
    Root(QVec),
    Zero,
}

/// Matching witness: weight slot j paired with a root slot alpha such
/// that beta_j + alpha lands in Psi_U.
#[derive(Debug, Clone)]
pub struct MatchingWitness {
    /// (psi index, slot) pairs covering the required side.
    pub pairs: Vec<(usize, RootSlot)>,
}

impl MatchingWitness {
    /// Sum of beta_j + alpha_{iota(j)} over all pairs.
    pub fn pair_sum(&self, instance: &PvsInstance) -> QVec {
        let mut acc = vector::zeros(instance.dim());
        for (j, slot) in &self.pairs {
            for (a, b) in acc.iter_mut().zip(&instance.psi[*j].vector) {
                *a += b;
            }
            if let RootSlot::Root(r) = slot {
                for (a, b) in acc.iter_mut().zip(r) {
                    *a += b;
                }
            }
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingVariant {
    /// iota: all of J_V -> roots of G (both signs) plus zero slots with
    /// multiplicity the rank of the torus context.
    Full,
    /// iota: J_{V/U} -> nilradical roots of Stab(U).
    Parabolic,
}

impl PvsInstance {
    /// Maximum support matching in the full or parabolic variant.
    /// Returns a witness exactly when the
    /// matching is perfect on the required weight side. For the parabolic
    /// variant the subspace must be P_0-stable (its stabilizer parabolic
    /// must exist); absence of a matching is a value, not an error.
    pub fn matching_iota(
        &self,
        members: &BTreeSet<usize>,
        variant: MatchingVariant,
    ) -> Option<MatchingWitness> {
        let (left_weights, slots): (Vec<usize>, Vec<RootSlot>) = match variant {
            MatchingVariant::Full => {
                let mut slots = Vec::new();
                for r in &self.phi_g_plus {
                    slots.push(RootSlot::Root(r.clone()));
                    slots.push(RootSlot::Root(vector::neg(r)));
                }
                for _ in 0..self.datum.lattice_span.len() {
                    slots.push(RootSlot::Zero);
                }
                let mut left = Vec::new();
                for (j, w) in self.psi.iter().enumerate() {
                    for _ in 0..w.multiplicity {
                        left.push(j);
                    }
                }
                (left, slots)
            }
            MatchingVariant::Parabolic => {
                let stab = self.stabilizer_of(members)?;
                let slots: Vec<RootSlot> = self
                    .nilradical_root_indices(&stab)
                    .into_iter()
                    .map(|k| RootSlot::Root(self.phi_g_plus[k].clone()))
                    .collect();
                let mut left = Vec::new();
                for (j, w) in self.psi.iter().enumerate() {
                    if !members.contains(&j) {
                        for _ in 0..w.multiplicity {
                            left.push(j);
                        }
                    }
                }
                (left, slots)
            }
        };
        self.match_slots(members, &left_weights, &slots)
    }

    /// Parabolic-variant matching against an explicitly given parabolic
    /// subset (for callers that already know the stabilizer).
    pub fn matching_into_nilradical(
        &self,
        members: &BTreeSet<usize>,
        subset: &ParabolicIndex,
    ) -> Option<MatchingWitness> {
        let slots: Vec<RootSlot> = self
            .nilradical_root_indices(subset)
            .into_iter()
            .map(|k| RootSlot::Root(self.phi_g_plus[k].clone()))
            .collect();
        let mut left = Vec::new();
        for (j, w) in self.psi.iter().enumerate() {
            if !members.contains(&j) {
                for _ in 0..w.multiplicity {
                    left.push(j);
                }
            }
        }
        self.match_slots(members, &left, &slots)
    }

    fn match_slots(
        &self,
        members: &BTreeSet<usize>,
        left_weights: &[usize],
        slots: &[RootSlot],
    ) -> Option<MatchingWitness> {
        let adj: Vec<Vec<usize>> = left_weights
            .iter()
            .map(|&j| {
                slots
                    .iter()
                    .enumerate()
                    .filter(|(_, slot)| {
                        let target = match slot {
                            RootSlot::Zero => self.psi[j].vector.clone(),
                            RootSlot::Root(r) => vector::add(&self.psi[j].vector, r),
                        };
                        // beta_j + alpha must land in Psi_U
                        self.psi
                            .iter()
                            .enumerate()
                            .any(|(k, w)| members.contains(&k) && w.vector == target)
                    })
                    .map(|(s, _)| s)
                    .collect()
            })
            .collect();
        let assignment = hopcroft_karp(left_weights.len(), slots.len(), &adj);
        if assignment.iter().any(|a| a.is_none()) {
            return None;
        }
        Some(MatchingWitness {
            pairs: left_weights
                .iter()
                .zip(&assignment)
                .map(|(&j, a)| (j, slots[a.unwrap()].clone()))
                .collect(),
        })
    }
}
