//! Probabilistic Minset certification through the regularity oracle.
//!
//! A sampled point of U with every FRIP nonzero is a sound certificate
//! that U meets the open orbit. Exhausted trials over growing heights give
//! RefutedLikely, which is Schwartz-Zippel confidence and explicitly not a
//! proof.

use crate::instance::PvsInstance;
use exactla::vector::Rat;
use num_traits::Zero;
use relinv::{mix_seed, sample_point};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinsetStatus {
    /// A regular rational point of U (all FRIPs nonzero at it).
    Certified(Vec<Rat>),
    RefutedLikely,
    Unknown,
}

impl MinsetStatus {
    pub fn is_certified(&self) -> bool {
        matches!(self, MinsetStatus::Certified(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            MinsetStatus::Certified(_) => "certified",
            MinsetStatus::RefutedLikely => "refuted-likely",
            MinsetStatus::Unknown => "unknown",
        }
    }
}

fn subset_tag(members: &BTreeSet<usize>) -> u64 {
    let mut h: u64 = 0;
    for &j in members {
        h = h.wrapping_mul(1_000_003).wrapping_add(j as u64 + 1);
    }
    h
}

impl PvsInstance {
    /// Minset membership for the weight subspace `members`, deterministic
    /// under the instance seed.
    pub fn minset_certify(&self, members: &BTreeSet<usize>) -> MinsetStatus {
        self.minset_certify_with(members, self.caps.trials, &self.caps.heights)
    }

    /// Certification with explicit sampling effort. Certified answers are
    /// sound at any effort; only the confidence of RefutedLikely depends
    /// on it.
    pub fn minset_certify_with(
        &self,
        members: &BTreeSet<usize>,
        trials: u32,
        heights: &[u64],
    ) -> MinsetStatus {
        let Some(bound) = &self.oracle else {
            return MinsetStatus::Unknown;
        };
        let support: Vec<usize> = members
            .iter()
            .map(|&j| bound.slot_of_weight[j])
            .collect();
        let slots = bound.oracle.num_slots();
        let tag = subset_tag(members);
        for (hi, &height) in heights.iter().enumerate() {
            for trial in 0..trials {
                let seed = mix_seed(&[self.seed, tag, hi as u64, trial as u64]);
                let point = sample_point(slots, &support, height, seed);
                let values = bound
                    .oracle
                    .evaluate_frips(&point)
                    .expect("shape checked at binding time");
                if values.iter().all(|v| !v.is_zero()) {
                    return MinsetStatus::Certified(point);
                }
            }
        }
        MinsetStatus::RefutedLikely
    }
}
