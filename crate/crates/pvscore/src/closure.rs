//! Weight-set closures: the star operator R * U and parabolic stability.
//!
//! Stability of U under a T0-saturated subgroup R is decided purely at the
//! level of weight sets: U is R-stable exactly when adding any root of R
//! to a member weight never leaves the set (when the sum is a weight at
//! all).

use crate::instance::PvsInstance;
use rootsys::ParabolicIndex;
use std::collections::BTreeSet;

fn add_scaled(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg_scaled(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

impl PvsInstance {
    /// Root set of the standard parabolic P_I of G, in scaled integer
    /// coordinates: all positive roots plus the negatives of the Levi
    /// roots supported on I.
    pub(crate) fn parabolic_roots_scaled(&self, subset: &ParabolicIndex) -> Vec<Vec<i64>> {
        let mut roots = self.phi_scaled.clone();
        for k in 0..self.phi_scaled.len() {
            if self.root_supported_on(k, subset) {
                roots.push(neg_scaled(&self.phi_scaled[k]));
            }
        }
        roots
    }

    /// Smallest superset of `members` closed under adding the given roots
    /// (whenever the sum is a weight of V).
    pub fn star_closure_scaled(
        &self,
        members: &BTreeSet<usize>,
        roots: &[Vec<i64>],
    ) -> BTreeSet<usize> {
        let mut out = members.clone();
        let mut frontier: Vec<usize> = members.iter().copied().collect();
        while let Some(j) = frontier.pop() {
            for r in roots {
                let s = add_scaled(&self.psi[j].scaled, r);
                if let Some(k) = self.weight_of_scaled(&s) {
                    if out.insert(k) {
                        frontier.push(k);
                    }
                }
            }
        }
        out
    }

    /// R * U for the standard parabolic of G selected by `subset`.
    pub fn star_closure(&self, members: &BTreeSet<usize>, subset: &ParabolicIndex) -> BTreeSet<usize> {
        let roots = self.parabolic_roots_scaled(subset);
        self.star_closure_scaled(members, &roots)
    }

    /// Closure under the positive roots only (stability under P_0).
    pub fn p0_closure(&self, members: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.star_closure_scaled(members, &self.phi_scaled.clone())
    }

    pub fn is_p0_stable(&self, members: &BTreeSet<usize>) -> bool {
        // single-step check: a set is closed iff one pass adds nothing
        for &j in members {
            for r in &self.phi_scaled {
                let s = add_scaled(&self.psi[j].scaled, r);
                if let Some(k) = self.weight_of_scaled(&s) {
                    if !members.contains(&k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The largest standard parabolic of G stabilizing U, or None when U
    /// is not even P_0-stable. Stability under each candidate simple
    /// reflection direction is the weight-set closure test; the union is
    /// then re-verified against the full Levi root set.
    pub fn stabilizer_of(&self, members: &BTreeSet<usize>) -> Option<ParabolicIndex> {
        if !self.is_p0_stable(members) {
            return None;
        }
        let mut subset = BTreeSet::new();
        for &i in &self.g_simple.0 {
            // closed under subtracting alpha_i?
            let alpha = &self.datum.simple_roots[i];
            let scaled = self
                .phi_g_plus
                .iter()
                .position(|v| v == alpha)
                .map(|k| self.phi_scaled[k].clone())
                .expect("simple root of G among its positive roots");
            let neg = neg_scaled(&scaled);
            let ok = members.iter().all(|&j| {
                let s = add_scaled(&self.psi[j].scaled, &neg);
                match self.weight_of_scaled(&s) {
                    Some(k) => members.contains(&k),
                    None => true,
                }
            });
            if ok {
                subset.insert(i);
            }
        }
        let stab = ParabolicIndex(subset);
        debug_assert_eq!(
            &self.star_closure(members, &stab),
            members,
            "singleton stability must extend to the generated parabolic"
        );
        Some(stab)
    }
}
