//! Inequality-presented rational polyhedral cones and the double
//! description method for exact extreme rays.

use crate::matrix::span_contains;
use crate::vector::{dot, is_zero_vec, lex_cmp, primitive, primitive_signed, zeros, QVec, Rat};
use num_traits::{Signed, Zero};
use once_cell::sync::OnceCell;

/// A cone {x : <v, x> >= 0 for all inequalities v}, optionally intersected
/// with a linear subspace. Extreme rays are computed lazily and cached.
#[derive(Debug, Clone)]
pub struct ConeDescription {
    pub ambient_dim: usize,
    pub inequalities: Vec<QVec>,
    pub subspace_basis: Option<Vec<QVec>>,
    rays: OnceCell<RayData>,
}

/// Double description output: extreme rays of the pointed quotient plus a
/// basis of the lineality space. Rays are primitive integer vectors in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayData {
    pub rays: Vec<QVec>,
    pub lineality: Vec<QVec>,
}

impl RayData {
    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }
}

impl ConeDescription {
    pub fn new(ambient_dim: usize, inequalities: Vec<QVec>) -> Self {
        ConeDescription {
            ambient_dim,
            inequalities,
            subspace_basis: None,
            rays: OnceCell::new(),
        }
    }

    pub fn in_subspace(ambient_dim: usize, inequalities: Vec<QVec>, basis: Vec<QVec>) -> Self {
        ConeDescription {
            ambient_dim,
            inequalities,
            subspace_basis: Some(basis),
            rays: OnceCell::new(),
        }
    }

    /// Membership by direct inequality (and subspace) evaluation.
    pub fn contains(&self, x: &QVec) -> bool {
        if let Some(basis) = &self.subspace_basis {
            if !span_contains(basis, x) {
                return false;
            }
        }
        self.inequalities.iter().all(|a| !dot(a, x).is_negative())
    }

    pub fn rays(&self) -> &RayData {
        self.rays.get_or_init(|| self.compute_rays())
    }

    fn compute_rays(&self) -> RayData {
        let basis: Vec<QVec> = match &self.subspace_basis {
            Some(b) => b.clone(),
            None => (0..self.ambient_dim)
                .map(|i| {
                    let mut e = zeros(self.ambient_dim);
                    e[i] = Rat::from_integer(1.into());
                    e
                })
                .collect(),
        };
        let k = basis.len();
        if k == 0 {
            return RayData {
                rays: Vec::new(),
                lineality: Vec::new(),
            };
        }
        // inequalities restricted to subspace coordinates, deduplicated and
        // sorted for deterministic insertion order
        let mut ineqs: Vec<QVec> = self
            .inequalities
            .iter()
            .map(|a| basis.iter().map(|b| dot(a, b)).collect::<QVec>())
            .filter(|a| !is_zero_vec(a))
            .map(|a| primitive(&a))
            .collect();
        ineqs.sort_by(|a, b| lex_cmp(a, b));
        ineqs.dedup();
        assert!(ineqs.len() <= 128, "cone has too many inequalities");

        let (rays_y, lin_y) = double_description(k, &ineqs);

        let to_ambient = |y: &QVec| -> QVec {
            let mut x = zeros(self.ambient_dim);
            for (c, b) in y.iter().zip(&basis) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += c * bi;
                }
            }
            x
        };
        let mut rays: Vec<QVec> = rays_y.iter().map(|y| primitive(&to_ambient(y))).collect();
        rays.sort_by(|a, b| lex_cmp(a, b));
        rays.dedup();
        let mut lineality: Vec<QVec> = lin_y
            .iter()
            .map(|y| primitive_signed(&to_ambient(y)))
            .collect();
        lineality.sort_by(|a, b| lex_cmp(a, b));
        RayData { rays, lineality }
    }
}

struct DdRay {
    v: QVec,
    zeroset: u128,
}

/// Double description in k coordinates. Returns (extreme rays of the
/// pointed quotient, basis of the lineality space).
fn double_description(k: usize, ineqs: &[QVec]) -> (Vec<QVec>, Vec<QVec>) {
    let mut lineality: Vec<QVec> = (0..k)
        .map(|i| {
            let mut e = zeros(k);
            e[i] = Rat::from_integer(1.into());
            e
        })
        .collect();
    let mut rays: Vec<DdRay> = Vec::new();
    for (t, a) in ineqs.iter().enumerate() {
        let bit = 1u128 << t;
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            // the inequality cuts the lineality space
            let mut l0 = lineality.remove(pos);
            let al0 = dot(a, &l0);
            if al0.is_negative() {
                l0 = crate::vector::neg(&l0);
            }
            let al0 = dot(a, &l0);
            for l in lineality.iter_mut() {
                let c = dot(a, l) / &al0;
                if !c.is_zero() {
                    *l = crate::vector::sub(l, &crate::vector::scale(&l0, &c));
                }
            }
            let prev_mask = if t == 0 { 0 } else { (1u128 << t) - 1 };
            for r in rays.iter_mut() {
                let c = dot(a, &r.v) / &al0;
                if !c.is_zero() {
                    r.v = crate::vector::sub(&r.v, &crate::vector::scale(&l0, &c));
                }
                r.zeroset |= bit;
            }
            rays.push(DdRay {
                v: primitive(&l0),
                zeroset: prev_mask & !bit,
            });
            continue;
        }
        // the inequality vanishes on the lineality space: split the rays
        let vals: Vec<Rat> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let mut next: Vec<DdRay> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if !vals[i].is_negative() {
                next.push(DdRay {
                    v: r.v.clone(),
                    zeroset: if vals[i].is_zero() {
                        r.zeroset | bit
                    } else {
                        r.zeroset
                    },
                });
            }
        }
        for (i, rp) in rays.iter().enumerate() {
            if !vals[i].is_positive() {
                continue;
            }
            for (j, rn) in rays.iter().enumerate() {
                if !vals[j].is_negative() {
                    continue;
                }
                let common = rp.zeroset & rn.zeroset;
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(q, rq)| q == i || q == j || (common & !rq.zeroset) != 0);
                if !adjacent {
                    continue;
                }
                // positive combination on the hyperplane a = 0
                let lp = -vals[j].clone();
                let ln = vals[i].clone();
                let v: QVec = rp
                    .v
                    .iter()
                    .zip(&rn.v)
                    .map(|(p, n)| p * &lp + n * &ln)
                    .collect();
                next.push(DdRay {
                    v: primitive(&v),
                    zeroset: (common | bit) & ((1u128 << (t + 1)) - 1),
                });
            }
        }
        rays = next;
    }
    (rays.into_iter().map(|r| r.v).collect(), lineality)
}

/// Outcome of a positivity check of a linear functional on a cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Positivity {
    /// Strictly positive on every extreme ray (hence on the cone minus 0).
    Positive,
    /// Fails: a nonzero cone element pairing nonpositively.
    Fails { witness: QVec, value: Rat },
}

/// True iff <functional, r> > 0 for every extreme ray r of the cone. Any
/// nonzero lineality must be annihilated by the functional, otherwise a
/// lineality witness is returned.
pub fn positive_on_cone(functional: &QVec, cone: &ConeDescription) -> Positivity {
    let data = cone.rays();
    for l in &data.lineality {
        let val = dot(functional, l);
        if !val.is_zero() {
            let (w, v) = if val.is_positive() {
                (crate::vector::neg(l), -val)
            } else {
                (l.clone(), val)
            };
            return Positivity::Fails { witness: w, value: v };
        }
    }
    for r in &data.rays {
        let val = dot(functional, r);
        if !val.is_positive() {
            return Positivity::Fails {
                witness: r.clone(),
                value: val,
            };
        }
    }
    Positivity::Positive
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::from_i64;

    fn v(x: &[i64]) -> QVec {
        from_i64(x)
    }

    #[test]
    fn orthant_rays() {
        let cone = ConeDescription::new(2, vec![v(&[1, 0]), v(&[0, 1])]);
        let data = cone.rays();
        assert!(data.is_pointed());
        assert_eq!(data.rays, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    // {x1 >= x2, x1 + x2 >= 0, x1 >= 0} has rays (1,1) and (1,-1); the
    // third inequality is redundant.
    #[test]
    fn wedge_rays() {
        let cone = ConeDescription::new(2, vec![v(&[1, -1]), v(&[1, 1]), v(&[1, 0])]);
        let mut rays = cone.rays().rays.clone();
        rays.sort_by(|a, b| lex_cmp(a, b));
        assert_eq!(rays, vec![v(&[1, -1]), v(&[1, 1])]);
    }

    #[test]
    fn halfplane_has_lineality() {
        let cone = ConeDescription::new(2, vec![v(&[1, 0])]);
        let data = cone.rays();
        assert_eq!(data.lineality.len(), 1);
        assert_eq!(data.lineality[0], v(&[0, 1]));
        assert_eq!(data.rays, vec![v(&[1, 0])]);
    }

    #[test]
    fn empty_cone_is_origin() {
        let cone = ConeDescription::new(
            2,
            vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])],
        );
        let data = cone.rays();
        assert!(data.rays.is_empty());
        assert!(data.lineality.is_empty());
    }

    #[test]
    fn subspace_restriction() {
        // full-plane inequalities restricted to the diagonal line
        let cone = ConeDescription::in_subspace(2, vec![v(&[1, 0])], vec![v(&[1, 1])]);
        let data = cone.rays();
        assert_eq!(data.rays, vec![v(&[1, 1])]);
        assert!(data.lineality.is_empty());
    }

    #[test]
    fn positivity_on_orthant() {
        let cone = ConeDescription::new(2, vec![v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(
            positive_on_cone(&v(&[1, 1]), &cone),
            Positivity::Positive
        );
        match positive_on_cone(&v(&[1, -1]), &cone) {
            Positivity::Fails { witness, value } => {
                assert_eq!(witness, v(&[0, 1]));
                assert!(value.is_negative());
            }
            _ => panic!("expected failure"),
        }
    }

    // Binary quadratics, U = Psi_V minus {beta}: the cone {x1>=x2,
    // x1+x2>=0, x1>=0} pairs to zero with lambda(U)+mu = (1+s)(1,1) on the
    // ray (1,-1).
    #[test]
    fn positivity_binary_quadratics_failure_witness() {
        let cone = ConeDescription::new(2, vec![v(&[1, -1]), v(&[1, 1]), v(&[2, 0])]);
        match positive_on_cone(&v(&[2, 2]), &cone) {
            Positivity::Fails { witness, value } => {
                assert_eq!(witness, v(&[1, -1]));
                assert!(value.is_zero());
            }
            _ => panic!("expected zero pairing on (1,-1)"),
        }
    }

    // Binary quadratics, U = V: C_V = {x1 >= x2 >= 0} with rays (1,0) and
    // (1,1); alpha + s(1,1) is positive on both for s > 0.
    #[test]
    fn positivity_binary_quadratics_full_space() {
        let cone = ConeDescription::new(2, vec![v(&[1, -1]), v(&[0, 2]), v(&[1, 1]), v(&[2, 0])]);
        let mut rays = cone.rays().rays.clone();
        rays.sort_by(|a, b| lex_cmp(a, b));
        assert_eq!(rays, vec![v(&[1, 0]), v(&[1, 1])]);
        assert_eq!(
            positive_on_cone(&v(&[2, 1]), &cone),
            Positivity::Positive
        );
    }

    #[test]
    fn membership_matches_inequalities() {
        let cone = ConeDescription::new(2, vec![v(&[1, -1]), v(&[1, 1])]);
        assert!(cone.contains(&v(&[2, 1])));
        assert!(!cone.contains(&v(&[0, 1])));
    }
}
