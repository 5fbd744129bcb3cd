//! Exceptional-pair detection: a special U is exceptional when some
//! Minset subspace U' of U, together with X*(G) and the Levi simple roots
//! of Stab(U), fails to span the character space.
//!
//! The search runs over the flats of the hyperplane arrangement cut out on
//! K = (X*(G) + Delta_0^Stab)^perp by the weights of U; only the maximal
//! candidate per flat is oracle-tested, since Minset is upward closed.

use crate::instance::PvsInstance;
use crate::minset::MinsetStatus;
use exactla::matrix::kernel_basis_in_span;
use exactla::vector::{self, dot, QVec};
use num_traits::Zero;
use rootsys::ParabolicIndex;
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub enum ExceptionalStatus {
    /// Witness pair: the subspace U' and a nonzero kernel vector
    /// annihilating X*(G), the Levi roots of Stab(U) and Psi_{U'}.
    Exceptional {
        u_prime: BTreeSet<usize>,
        kernel_vector: QVec,
    },
    NotExceptional,
    /// Oracle missing: Minset membership of the candidates is undecidable.
    Unknown,
}

impl ExceptionalStatus {
    pub fn is_exceptional(&self) -> bool {
        matches!(self, ExceptionalStatus::Exceptional { .. })
    }
}

impl PvsInstance {
    /// Exceptional-pair search for a special subspace with stabilizer
    /// `stab`.
    pub fn is_exceptional(
        &self,
        members: &BTreeSet<usize>,
        stab: &ParabolicIndex,
    ) -> ExceptionalStatus {
        // K = joint annihilator of X*(G) and the Levi simple roots
        let mut constraints = self.xstar_g.clone();
        for &i in &stab.0 {
            constraints.push(self.datum.simple_roots[i].clone());
        }
        let k_basis = kernel_basis_in_span(&constraints, &self.datum.lattice_span)
            .expect("consistent dims");
        if k_basis.is_empty() {
            return ExceptionalStatus::NotExceptional;
        }
        let member_list: Vec<usize> = members.iter().copied().collect();
        // restriction of each member weight to K
        let restricted: Vec<QVec> = member_list
            .iter()
            .map(|&j| k_basis.iter().map(|b| dot(&self.psi[j].vector, b)).collect())
            .collect();
        let kdim = k_basis.len();
        // weights vanishing on all of K belong to every candidate
        let mut base: BTreeSet<usize> = BTreeSet::new();
        let mut hyperplanes: Vec<(usize, QVec)> = Vec::new();
        for (pos, r) in restricted.iter().enumerate() {
            if vector::is_zero_vec(r) {
                base.insert(member_list[pos]);
            } else {
                hyperplanes.push((member_list[pos], r.clone()));
            }
        }
        // flats of the arrangement, keyed by their full vanishing signature
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut flats: Vec<(Vec<usize>, Vec<QVec>)> = Vec::new();
        let full: Vec<QVec> = (0..kdim)
            .map(|i| {
                let mut e = vector::zeros(kdim);
                e[i] = vector::rat(1);
                e
            })
            .collect();
        let signature = |basis: &[QVec]| -> Vec<usize> {
            hyperplanes
                .iter()
                .enumerate()
                .filter(|(_, (_, h))| basis.iter().all(|b| dot(h, b).is_zero()))
                .map(|(i, _)| i)
                .collect()
        };
        let s0 = signature(&full);
        seen.insert(s0.clone());
        let mut queue = vec![(s0.clone(), full.clone())];
        flats.push((s0, full));
        while let Some((sig, basis)) = queue.pop() {
            for (h, (_, hv)) in hyperplanes.iter().enumerate() {
                if sig.contains(&h) {
                    continue;
                }
                let sub = kernel_basis_in_span(&[hv.clone()], &basis).expect("dims");
                if sub.is_empty() {
                    continue;
                }
                let s = signature(&sub);
                if seen.insert(s.clone()) {
                    queue.push((s.clone(), sub.clone()));
                    flats.push((s, sub));
                }
            }
        }
        // maximal candidate per flat, largest first
        let mut candidates: Vec<(BTreeSet<usize>, Vec<QVec>)> = flats
            .into_iter()
            .map(|(sig, basis)| {
                let mut u: BTreeSet<usize> = base.clone();
                for h in sig {
                    u.insert(hyperplanes[h].0);
                }
                (u, basis)
            })
            .collect();
        candidates.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        candidates.dedup_by(|a, b| a.0 == b.0);

        if self.oracle.is_none() {
            return ExceptionalStatus::Unknown;
        }
        let mut refuted: Vec<BTreeSet<usize>> = Vec::new();
        for (u_prime, flat_basis) in candidates {
            if refuted.iter().any(|r| u_prime.is_subset(r)) {
                continue;
            }
            match self.minset_certify(&u_prime) {
                MinsetStatus::Certified(_) => {
                    // flat vectors live in K coordinates; map to ambient
                    let ambient_flat: Vec<QVec> = flat_basis
                        .iter()
                        .map(|c| {
                            let mut x = vector::zeros(self.dim());
                            for (ci, kb) in c.iter().zip(&k_basis) {
                                for (a, b) in x.iter_mut().zip(kb) {
                                    *a += ci * b;
                                }
                            }
                            x
                        })
                        .collect();
                    let kernel_vector = generic_flat_vector(self, &u_prime, &ambient_flat);
                    return ExceptionalStatus::Exceptional {
                        u_prime,
                        kernel_vector,
                    };
                }
                MinsetStatus::RefutedLikely => refuted.push(u_prime),
                MinsetStatus::Unknown => return ExceptionalStatus::Unknown,
            }
        }
        ExceptionalStatus::NotExceptional
    }
}

/// A vector of the flat whose vanishing pattern on the instance weights is
/// exactly u_prime (among weights not identically zero on the flat):
/// small integer combinations of the flat basis until generic.
fn generic_flat_vector(
    instance: &PvsInstance,
    u_prime: &BTreeSet<usize>,
    flat_basis: &[QVec],
) -> QVec {
    let generic = |x: &QVec| -> bool {
        instance.psi.iter().enumerate().all(|(j, w)| {
            let v = dot(&w.vector, x);
            if u_prime.contains(&j) {
                v.is_zero()
            } else {
                !v.is_zero() || flat_basis.iter().all(|b| dot(&w.vector, b).is_zero())
            }
        })
    };
    for k in 1..100i64 {
        let mut x = vector::zeros(flat_basis[0].len());
        let mut c = 1i64;
        for b in flat_basis {
            let s = vector::rat(c);
            for (a, bi) in x.iter_mut().zip(b) {
                *a += &s * bi;
            }
            c *= k + 1;
        }
        if generic(&x) {
            return vector::primitive(&x);
        }
    }
    vector::primitive(&flat_basis[0])
}
