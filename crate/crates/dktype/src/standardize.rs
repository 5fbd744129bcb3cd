//! Weyl standardization of I-filtrations: the search for the unique
//! conjugate whose stabilizer meets G in a standard parabolic and whose
//! degree-2 piece meets the regular orbit.
//!
//! The search runs over the W-orbit of the grading's pairing vector.
//! Orbit nonemptiness against the regular locus is decided by Minset
//! certification of the intersected weight set in the target instance,
//! which is equivalent to it by the DK identification of the open orbit.

use crate::{DkError, GradingElement};
use pvscore::{MinsetStatus, PvsInstance, SpecialReport};
use rootsys::{PairingOrbit, WeylElement};
use std::collections::BTreeSet;

/// A successful standardization: the reduced Weyl word w with
/// w . grading = the standardized grading, and the resulting special
/// subspace of the target instance.
#[derive(Debug, Clone)]
pub struct StandardizeOutcome {
    pub word: Vec<usize>,
    pub standardized_labels: Vec<i64>,
    pub members: BTreeSet<usize>,
    pub report: SpecialReport,
    /// Minset status of the unconjugated (w = id) position, recorded for
    /// diagnostics.
    pub standard_position: MinsetStatus,
    pub orbit_size: usize,
    pub candidates_tested: usize,
}

impl StandardizeOutcome {
    pub fn weyl_element(&self, datum: &rootsys::RootDatum) -> WeylElement {
        WeylElement::from_word(datum, &self.word)
    }
}

/// Searches the W-orbit of the I-filtration grading for the unique
/// conjugate satisfying both standardization conditions. `target` must be
/// the DK instance of the same ambient datum (its g_simple encodes the
/// canonical parabolic).
pub fn standardize_ifiltration(
    target: &PvsInstance,
    h_tilde: &GradingElement,
) -> Result<StandardizeOutcome, DkError> {
    if !h_tilde.is_dominant() {
        return Err(DkError::NonDominant(h_tilde.labels.clone()));
    }
    let datum = &target.datum;
    let weight_coeffs: Vec<Vec<i64>> = target
        .psi
        .iter()
        .map(|w| {
            datum
                .simple_coords(&w.vector)
                .iter()
                .map(|c| {
                    assert!(c.is_integer(), "DK weights are roots");
                    i64::try_from(c.numer()).expect("small root coefficients")
                })
                .collect()
        })
        .collect();
    let members_of = |v: &[i64]| -> BTreeSet<usize> {
        weight_coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() >= 2)
            .map(|(j, _)| j)
            .collect()
    };
    let standard_in_g = |v: &[i64]| -> bool { target.g_simple.0.iter().all(|&i| v[i] >= 0) };

    let orbit = PairingOrbit::enumerate(&datum.cartan, &h_tilde.labels);
    let orbit_size = orbit.len();
    let standard_position = target.minset_certify(&members_of(&h_tilde.labels));

    let candidates: Vec<(Vec<i64>, BTreeSet<usize>)> = orbit
        .into_iter()
        .filter(|v| standard_in_g(v))
        .map(|v| {
            let members = members_of(&v);
            (v, members)
        })
        .collect();
    let candidates_tested = candidates.len();
    // staged certification: a quick pass settles the winner (certificates
    // are sound at any effort); full-strength refutation runs only when
    // nothing certifies quickly. Results are memoized per weight set.
    let quick_heights: Vec<u64> = target.caps.heights.iter().take(2).copied().collect();
    let quick_trials = target.caps.trials.min(8);
    let mut passes: Vec<(Vec<i64>, BTreeSet<usize>)> = Vec::new();
    for full_effort in [false, true] {
        let mut memo: std::collections::HashMap<Vec<usize>, bool> =
            std::collections::HashMap::new();
        for (v, members) in &candidates {
            let key: Vec<usize> = members.iter().copied().collect();
            let certified = match memo.get(&key) {
                Some(&c) => c,
                None => {
                    let status = if full_effort {
                        target.minset_certify(members)
                    } else {
                        target.minset_certify_with(members, quick_trials, &quick_heights)
                    };
                    let c = match status {
                        MinsetStatus::Certified(_) => true,
                        MinsetStatus::RefutedLikely => false,
                        MinsetStatus::Unknown => {
                            return Err(DkError::BadIfd(
                                "standardization needs a regularity oracle on the target instance"
                                    .into(),
                            ))
                        }
                    };
                    memo.insert(key, c);
                    c
                }
            };
            if certified {
                passes.push((v.clone(), members.clone()));
            }
        }
        if !passes.is_empty() {
            break;
        }
    }
    if passes.is_empty() {
        return Err(DkError::NotFound);
    }
    let first_members = passes[0].1.clone();
    if passes.iter().any(|(_, m)| m != &first_members) {
        return Err(DkError::Ambiguity);
    }
    // deterministic pick: lexicographically least standardized vector
    passes.sort_by(|a, b| a.0.cmp(&b.0));
    let (v_star, members) = passes.into_iter().next().unwrap();
    let word = PairingOrbit::word_from_dominant(&datum.cartan, &h_tilde.labels, &v_star)
        .expect("orbit elements reduce to the dominant vector");
    let report = target.is_special(&members)?;
    if !report.special.is_yes() {
        return Err(DkError::Ambiguity);
    }
    // Stab(U) must equal Stab(w F) with G: the Levi on the zero pairings
    {
        let expected: BTreeSet<usize> = target
            .g_simple
            .0
            .iter()
            .copied()
            .filter(|&i| v_star[i] == 0)
            .collect();
        let got = &report.stab.as_ref().expect("special implies stabilized").0;
        assert_eq!(
            got, &expected,
            "stabilizer of the standardized subspace must be the filtration stabilizer in G"
        );
    }
    Ok(StandardizeOutcome {
        word,
        standardized_labels: v_star,
        members,
        report,
        standard_position,
        orbit_size,
        candidates_tested,
    })
}

/// The Richardson convenience wrapper: the zero orbit of the Levi of Q.
pub fn richardson_special(
    target: &PvsInstance,
    q_subset: &rootsys::ParabolicIndex,
) -> Result<StandardizeOutcome, DkError> {
    let ifd = crate::IfdSpec::richardson(q_subset.clone());
    let h = crate::ifd_to_grading(&target.datum, &ifd)?;
    standardize_ifiltration(target, &h)
}
