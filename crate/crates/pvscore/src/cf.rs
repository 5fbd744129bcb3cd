//! Completely-factorizable decomposition checks: irreducible components
//! as root-connected weight blocks, independence of their central
//! characters, and the Spcl(V) = {V} precondition.

use crate::instance::PvsInstance;
use crate::PvsError;
use exactla::matrix::rank_of_span;
use exactla::vector::{dot, QVec};
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct CfComponent {
    pub members: BTreeSet<usize>,
    /// Restriction of the component's weights to a_G (all members agree).
    pub omega: QVec,
    /// Fundamental characters whose a_G-restriction is proportional to
    /// omega.
    pub fund_chars: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CfReport {
    pub components: Vec<CfComponent>,
    pub weights_disjoint: bool,
    pub omegas_independent: bool,
    /// Whether V is the only special subspace (the simple-case
    /// precondition).
    pub spcl_trivial: bool,
}

impl PvsInstance {
    /// Infers the irreducible components as connected blocks of the
    /// relation beta ~ beta +/- alpha and verifies the CF-shape
    /// conditions.
    pub fn cf_decompose(&self) -> Result<CfReport, PvsError> {
        let n = self.psi.len();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let r = find(comp, comp[i]);
                comp[i] = r;
            }
            comp[i]
        }
        for j in 0..n {
            for r in &self.phi_scaled {
                for sign in [1i64, -1] {
                    let s: Vec<i64> = self.psi[j]
                        .scaled
                        .iter()
                        .zip(r)
                        .map(|(a, b)| a + sign * b)
                        .collect();
                    if let Some(k) = self.weight_of_scaled(&s) {
                        let (a, b) = (find(&mut comp, j), find(&mut comp, k));
                        if a != b {
                            comp[a] = b;
                        }
                    }
                }
            }
        }
        let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
        {
            let mut root_of: Vec<Option<usize>> = vec![None; n];
            for j in 0..n {
                let r = find(&mut comp, j);
                match root_of[r] {
                    Some(b) => {
                        blocks[b].insert(j);
                    }
                    None => {
                        root_of[r] = Some(blocks.len());
                        blocks.push(BTreeSet::from([j]));
                    }
                }
            }
        }
        blocks.sort();
        let a_g = self.a_g_basis();
        let restrict = |v: &QVec| -> QVec { a_g.iter().map(|b| dot(v, b)).collect() };
        let mut components = Vec::new();
        for members in blocks {
            let mut omega: Option<QVec> = None;
            for &j in &members {
                let r = restrict(&self.psi[j].vector);
                match &omega {
                    None => omega = Some(r),
                    Some(o) => {
                        if &r != o {
                            return Err(PvsError::Invalid(
                                "inconsistent partition: component weights restrict differently to a_G"
                                    .into(),
                            ));
                        }
                    }
                }
            }
            components.push(CfComponent {
                members,
                omega: omega.expect("nonempty component"),
                fund_chars: Vec::new(),
            });
        }
        // assign fundamental characters to components by their a_G
        // restriction direction
        for (ci, c) in components.iter_mut().enumerate() {
            for (i, chi) in self.fund_chars.iter().enumerate() {
                let r = restrict(chi);
                let pair = vec![r.clone(), c.omega.clone()];
                if rank_of_span(&pair)? <= 1 && !exactla::vector::is_zero_vec(&r) {
                    c.fund_chars.push(i);
                }
            }
            let _ = ci;
        }
        let omegas: Vec<QVec> = components.iter().map(|c| c.omega.clone()).collect();
        let omegas_independent = rank_of_span(&omegas)? == components.len();
        let spcl_trivial = {
            let specials = self.special_subspaces()?;
            specials.len() == 1 && specials[0].members == self.full_set()
        };
        Ok(CfReport {
            components,
            weights_disjoint: true,
            omegas_independent,
            spcl_trivial,
        })
    }
}
