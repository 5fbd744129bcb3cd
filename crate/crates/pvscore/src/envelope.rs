//! Enveloping parabolic of a subspace: the Delta_0-part of the positive
//! envelope of lambda(U) with respect to Delta_0 and Psi_U.

use crate::instance::PvsInstance;
use crate::PvsError;
use exactla::positive_envelope;
use exactla::ExactlaError;
use rootsys::ParabolicIndex;
use std::collections::BTreeSet;

impl PvsInstance {
    /// Env(U): the standard parabolic of G cut out by the simple roots in
    /// the positive envelope of lambda(U) over Delta_0^G and Psi_U.
    /// Duplicate vectors between the two generator families are kept as
    /// distinct slots; the result is the union over the Delta_0 side.
    ///
    /// A NotInCone error doubles as evidence against Minset membership
    /// (Minset-certified subspaces always pass).
    pub fn env_of(&self, members: &BTreeSet<usize>) -> Result<ParabolicIndex, PvsError> {
        let g_indices: Vec<usize> = self.g_simple.0.iter().copied().collect();
        let mut generators: Vec<_> = g_indices
            .iter()
            .map(|&i| self.datum.simple_roots[i].clone())
            .collect();
        let member_list: Vec<usize> = members.iter().copied().collect();
        for &j in &member_list {
            generators.push(self.psi[j].vector.clone());
        }
        let lambda = self.lambda_of(members);
        let envelope = positive_envelope(&lambda, &generators).map_err(|e| match e {
            ExactlaError::NotInCone => PvsError::NotInCone,
            other => PvsError::Exactla(other),
        })?;
        let mut subset = BTreeSet::new();
        for slot in envelope {
            if slot < g_indices.len() {
                subset.insert(g_indices[slot]);
            }
        }
        Ok(ParabolicIndex(subset))
    }
}
