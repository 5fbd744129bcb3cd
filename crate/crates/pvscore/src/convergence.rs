//! The convergence cone C_U, its lambda(U)-face, and positivity
//! certification of lambda(U) + mu on C_U intersected with the section
//! subspace W.

use crate::instance::PvsInstance;
use crate::PvsError;
use exactla::cone::{positive_on_cone, ConeDescription, Positivity};
use exactla::matrix::{kernel_basis_in_span, solve_linear};
use exactla::vector::{self, dot, QVec, Rat};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// Positivity certificate on C_U intersected with W, or the failing ray.
#[derive(Debug, Clone)]
pub enum ConvergenceOutcome {
    Certificate {
        /// The chosen section subspace W = a_0^G + ell (its basis is part
        /// of the certificate for reproducibility).
        w_basis: Vec<QVec>,
        rays: Vec<QVec>,
        values: Vec<Rat>,
    },
    Fails {
        w_basis: Vec<QVec>,
        witness: QVec,
        value: Rat,
    },
}

impl ConvergenceOutcome {
    pub fn is_certificate(&self) -> bool {
        matches!(self, ConvergenceOutcome::Certificate { .. })
    }
}

impl PvsInstance {
    /// The cone C_U = {x dominant for Delta_0^G : <beta, x> >= 0 for all
    /// beta in Psi_U}.
    pub fn cone_of(&self, members: &BTreeSet<usize>) -> ConeDescription {
        let mut ineqs = self.g_simple_vectors();
        for &j in members {
            ineqs.push(self.psi[j].vector.clone());
        }
        ConeDescription::new(self.dim(), ineqs)
    }

    /// Extreme rays of C_U on which lambda(U) vanishes (the face F_U).
    pub fn face_of_cone(&self, members: &BTreeSet<usize>) -> Vec<QVec> {
        let lambda = self.lambda_of(members);
        let cone = self.cone_of(members);
        cone.rays()
            .rays
            .iter()
            .filter(|r| dot(&lambda, r).is_zero())
            .cloned()
            .collect()
    }

    /// The section subspace W = a_0^G + ell, where a_0^G is the coroot
    /// span of Delta_0^G and ell is the dot-orthogonal complement of
    /// ker q inside a_G (ker q = common kernel of the fundamental
    /// characters on a_G).
    pub fn section_subspace(&self) -> Vec<QVec> {
        let a_g = self.a_g_basis();
        let ker_q = kernel_basis_in_span(&self.fund_chars, &a_g).expect("dims");
        let ell = kernel_basis_in_span(&ker_q, &a_g).expect("dims");
        let mut w: Vec<QVec> = self
            .g_simple
            .0
            .iter()
            .map(|&i| self.datum.simple_coroots[i].clone())
            .collect();
        w.extend(ell);
        w
    }

    /// Validates mu as a strictly positive combination of the fundamental
    /// characters.
    pub fn validate_mu(&self, mu: &QVec) -> Result<Vec<Rat>, PvsError> {
        if self.fund_chars.is_empty() {
            return Err(PvsError::InvalidMu(
                "instance has no fundamental characters".into(),
            ));
        }
        let coeffs = solve_linear(&self.fund_chars, mu)
            .ok_or_else(|| PvsError::InvalidMu("mu outside the span of Sigma".into()))?;
        if coeffs.iter().any(|c| !c.is_positive()) {
            return Err(PvsError::InvalidMu(
                "mu must be a strictly positive combination of Sigma".into(),
            ));
        }
        Ok(coeffs)
    }

    /// Positivity certification of lambda(U) + mu on C_U intersected with
    /// W minus the origin.
    pub fn convergence_certificate(
        &self,
        members: &BTreeSet<usize>,
        mu: &QVec,
    ) -> Result<ConvergenceOutcome, PvsError> {
        self.validate_mu(mu)?;
        let w_basis = self.section_subspace();
        let mut ineqs = self.g_simple_vectors();
        for &j in members {
            ineqs.push(self.psi[j].vector.clone());
        }
        let cone = ConeDescription::in_subspace(self.dim(), ineqs, w_basis.clone());
        let functional = vector::add(&self.lambda_of(members), mu);
        match positive_on_cone(&functional, &cone) {
            Positivity::Positive => {
                let data = cone.rays();
                let values = data.rays.iter().map(|r| dot(&functional, r)).collect();
                Ok(ConvergenceOutcome::Certificate {
                    w_basis,
                    rays: data.rays.clone(),
                    values,
                })
            }
            Positivity::Fails { witness, value } => Ok(ConvergenceOutcome::Fails {
                w_basis,
                witness,
                value,
            }),
        }
    }

    /// Default mu: the sum of the fundamental characters.
    pub fn default_mu(&self) -> QVec {
        let mut mu = vector::zeros(self.dim());
        for chi in &self.fund_chars {
            for (a, b) in mu.iter_mut().zip(chi) {
                *a += b;
            }
        }
        mu
    }
}
