//! PVS instances: ambient root datum, the reductive group G selected by a
//! set of simple roots, the weight multiset of the representation, and the
//! character data.

use crate::PvsError;
use exactla::matrix::{kernel_basis_in_span, rank_of_span, span_contains};
use exactla::vector::{self, dot, QVec, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use relinv::Oracle;
use rootsys::{ParabolicIndex, RootDatum};
use std::collections::{BTreeSet, HashMap};

/// Analysis limits and the sampling configuration for the regularity
/// oracle.
#[derive(Debug, Clone)]
pub struct Caps {
    pub max_weights: usize,
    pub trials: u32,
    pub heights: Vec<u64>,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_weights: 24,
            trials: 32,
            heights: vec![10, 100, 1000],
        }
    }
}

/// One torus weight of V with its multiplicity n_beta.
#[derive(Debug, Clone)]
pub struct Weight {
    pub vector: QVec,
    pub multiplicity: usize,
    pub(crate) scaled: Vec<i64>,
}

/// An oracle together with the psi-index -> oracle-slot correspondence.
#[derive(Debug, Clone)]
pub struct BoundOracle {
    pub oracle: Oracle,
    pub slot_of_weight: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PvsInstance {
    pub name: String,
    pub datum: RootDatum,
    /// Simple roots of G, as indices into the datum's simple roots.
    pub g_simple: ParabolicIndex,
    /// Positive roots of G (the Levi selected by g_simple).
    pub phi_g_plus: Vec<QVec>,
    /// Coefficients of each positive root of G over the datum's simples.
    pub phi_g_coeffs: Vec<Vec<i64>>,
    pub psi: Vec<Weight>,
    pub xstar_g: Vec<QVec>,
    pub fund_chars: Vec<QVec>,
    pub oracle: Option<BoundOracle>,
    pub caps: Caps,
    pub seed: u64,
    pub delta0: QVec,
    pub delta_v: QVec,
    pub(crate) weight_index: HashMap<Vec<i64>, usize>,
    pub(crate) phi_scaled: Vec<Vec<i64>>,
}

fn scaled_int(v: &QVec, scale: &BigInt) -> Vec<i64> {
    v.iter()
        .map(|x| {
            let n = x.numer() * (scale / x.denom());
            i64::try_from(&n).expect("scaled coordinates fit i64")
        })
        .collect()
}

impl PvsInstance {
    /// Builds and validates an instance. `xstar_g` may be empty, in which
    /// case it is computed as the annihilator of the coroots of G inside
    /// the character span.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        datum: RootDatum,
        g_simple: ParabolicIndex,
        psi_v: Vec<(QVec, usize)>,
        xstar_g: Vec<QVec>,
        fund_chars: Vec<QVec>,
        oracle: Option<Oracle>,
        caps: Caps,
        seed: u64,
    ) -> Result<PvsInstance, PvsError> {
        let dim = datum.ambient_dim;
        for i in &g_simple.0 {
            if *i >= datum.rank() {
                return Err(PvsError::Invalid(format!(
                    "g_simple index {i} out of range for {}",
                    datum.type_label
                )));
            }
        }
        // positive roots of G: supported on g_simple
        let (levi_idx, _) = datum.parabolic_partition(&g_simple);
        let phi_g_plus: Vec<QVec> = levi_idx
            .iter()
            .map(|&i| datum.positive_roots[i].vector.clone())
            .collect();
        let phi_g_coeffs: Vec<Vec<i64>> = levi_idx
            .iter()
            .map(|&i| datum.positive_roots[i].coeffs.clone())
            .collect();

        for (w, m) in &psi_v {
            if w.len() != dim {
                return Err(PvsError::Invalid(format!(
                    "weight has length {}, ambient dim is {dim}",
                    w.len()
                )));
            }
            if *m == 0 {
                return Err(PvsError::Invalid("weight multiplicity must be >= 1".into()));
            }
        }
        {
            let mut seen = BTreeSet::new();
            for (w, _) in &psi_v {
                if !seen.insert(format!("{w:?}")) {
                    return Err(PvsError::Invalid("weights must be pairwise distinct".into()));
                }
            }
        }

        // common denominator for exact integer lookups
        let mut scale = BigInt::from(1);
        for v in psi_v.iter().map(|(w, _)| w).chain(phi_g_plus.iter()) {
            for x in v {
                scale = scale.lcm(x.denom());
            }
        }
        let psi: Vec<Weight> = psi_v
            .into_iter()
            .map(|(vector, multiplicity)| {
                let scaled = scaled_int(&vector, &scale);
                Weight {
                    vector,
                    multiplicity,
                    scaled,
                }
            })
            .collect();
        let weight_index: HashMap<Vec<i64>, usize> = psi
            .iter()
            .enumerate()
            .map(|(i, w)| (w.scaled.clone(), i))
            .collect();
        let phi_scaled: Vec<Vec<i64>> = phi_g_plus.iter().map(|v| scaled_int(v, &scale)).collect();

        let mut delta0 = vector::zeros(dim);
        for r in &phi_g_plus {
            for (a, b) in delta0.iter_mut().zip(r) {
                *a += b;
            }
        }
        let mut delta_v = vector::zeros(dim);
        for w in &psi {
            let m = vector::rat(w.multiplicity as i64);
            for (a, b) in delta_v.iter_mut().zip(&w.vector) {
                *a += &m * b;
            }
        }

        let g_coroots: Vec<QVec> = g_simple
            .0
            .iter()
            .map(|&i| datum.simple_coroots[i].clone())
            .collect();
        let xstar_g = if xstar_g.is_empty() {
            kernel_basis_in_span(&g_coroots, &datum.lattice_span)?
        } else {
            xstar_g
        };
        for chi in &xstar_g {
            for cv in &g_coroots {
                if !dot(chi, cv).is_zero() {
                    return Err(PvsError::Invalid(
                        "X*(G) generator does not annihilate a coroot of G".into(),
                    ));
                }
            }
        }
        for chi in &fund_chars {
            if !span_contains(&xstar_g, chi) {
                return Err(PvsError::Invalid(
                    "fundamental character outside the span of X*(G)".into(),
                ));
            }
        }
        if !fund_chars.is_empty() {
            let r = rank_of_span(&fund_chars)?;
            if r != fund_chars.len() {
                return Err(PvsError::Invalid(
                    "fundamental characters must be linearly independent".into(),
                ));
            }
        }
        // delta_V lies in span(X*(G) + Phi_G)
        {
            let mut gens = xstar_g.clone();
            gens.extend(phi_g_plus.iter().cloned());
            if !span_contains(&gens, &delta_v) {
                return Err(PvsError::Invalid(
                    "delta_V outside the span of X*(G) and the roots of G".into(),
                ));
            }
        }

        let oracle = match oracle {
            None => None,
            Some(o) => Some(bind_oracle(o, &psi)?),
        };

        Ok(PvsInstance {
            name: name.to_string(),
            datum,
            g_simple,
            phi_g_plus,
            phi_g_coeffs,
            psi,
            xstar_g,
            fund_chars,
            oracle,
            caps,
            seed,
            delta0,
            delta_v,
            weight_index,
            phi_scaled,
        })
    }

    pub fn weight_count(&self) -> usize {
        self.psi.len()
    }

    pub fn dim(&self) -> usize {
        self.datum.ambient_dim
    }

    /// dim V = sum of multiplicities.
    pub fn dim_v(&self) -> usize {
        self.psi.iter().map(|w| w.multiplicity).sum()
    }

    pub fn full_set(&self) -> BTreeSet<usize> {
        (0..self.psi.len()).collect()
    }

    pub(crate) fn weight_of_scaled(&self, v: &[i64]) -> Option<usize> {
        self.weight_index.get(v).copied()
    }

    /// Simple-root coefficients of a positive root of G restricted to the
    /// Levi support test: is phi_g_plus[k] supported on `subset`?
    pub(crate) fn root_supported_on(&self, k: usize, subset: &ParabolicIndex) -> bool {
        self.phi_g_coeffs[k]
            .iter()
            .enumerate()
            .all(|(j, &c)| c == 0 || subset.contains(j))
    }

    /// Positive roots of the Levi M_S for a parabolic subset of G.
    pub fn levi_root_indices(&self, subset: &ParabolicIndex) -> Vec<usize> {
        (0..self.phi_g_plus.len())
            .filter(|&k| self.root_supported_on(k, subset))
            .collect()
    }

    /// Nilradical roots Phi_{N_S} of a standard parabolic of G.
    pub fn nilradical_root_indices(&self, subset: &ParabolicIndex) -> Vec<usize> {
        (0..self.phi_g_plus.len())
            .filter(|&k| !self.root_supported_on(k, subset))
            .collect()
    }

    /// delta_0 of the Levi M_S: sum of the positive roots supported on the
    /// subset.
    pub fn delta0_levi(&self, subset: &ParabolicIndex) -> QVec {
        let mut v = vector::zeros(self.dim());
        for k in self.levi_root_indices(subset) {
            for (a, b) in v.iter_mut().zip(&self.phi_g_plus[k]) {
                *a += b;
            }
        }
        v
    }

    /// The gauge lambda(U) = delta_0 + sum over the complement of n_b b.
    pub fn lambda_of(&self, members: &BTreeSet<usize>) -> QVec {
        let mut v = self.delta0.clone();
        for (j, w) in self.psi.iter().enumerate() {
            if !members.contains(&j) {
                let m = vector::rat(w.multiplicity as i64);
                for (a, b) in v.iter_mut().zip(&w.vector) {
                    *a += &m * b;
                }
            }
        }
        v
    }

    /// Number of V-coordinates outside U, counted with multiplicity.
    pub fn codim(&self, members: &BTreeSet<usize>) -> usize {
        self.psi
            .iter()
            .enumerate()
            .filter(|(j, _)| !members.contains(j))
            .map(|(_, w)| w.multiplicity)
            .sum()
    }

    /// Vectors of the simple roots of G.
    pub fn g_simple_vectors(&self) -> Vec<QVec> {
        self.g_simple
            .0
            .iter()
            .map(|&i| self.datum.simple_roots[i].clone())
            .collect()
    }

    /// Basis of a_G = {x in the cocharacter span : <alpha, x> = 0 for all
    /// simple roots of G}.
    pub fn a_g_basis(&self) -> Vec<QVec> {
        kernel_basis_in_span(&self.g_simple_vectors(), &self.datum.lattice_span)
            .expect("consistent dims")
    }

    /// True when all weights pair nonnegatively (resp. zero) on a
    /// cocharacter-side vector; helper for tests.
    pub fn pair_all(&self, x: &QVec) -> Vec<Rat> {
        self.psi.iter().map(|w| dot(&w.vector, x)).collect()
    }
}

fn bind_oracle(oracle: Oracle, psi: &[Weight]) -> Result<BoundOracle, PvsError> {
    let total: usize = psi.iter().map(|w| w.multiplicity).sum();
    if oracle.num_slots() != total {
        return Err(PvsError::Invalid(format!(
            "oracle has {} slots, instance has {} coordinates",
            oracle.num_slots(),
            total
        )));
    }
    if psi.iter().any(|w| w.multiplicity != 1) {
        return Err(PvsError::Invalid(
            "oracle binding requires multiplicity-one weights".into(),
        ));
    }
    let slot_weights = oracle.slot_weights();
    if let Some(sw) = slot_weights.first() {
        if sw.len() != psi[0].vector.len() {
            return Err(PvsError::Invalid(format!(
                "oracle coordinates have dim {}, instance ambient dim is {}",
                sw.len(),
                psi[0].vector.len()
            )));
        }
    }
    let mut slot_of_weight = Vec::with_capacity(psi.len());
    let mut used = vec![false; slot_weights.len()];
    for w in psi {
        let mut found = None;
        for (s, sw) in slot_weights.iter().enumerate() {
            if !used[s] && sw == &w.vector {
                found = Some(s);
                break;
            }
        }
        match found {
            Some(s) => {
                used[s] = true;
                slot_of_weight.push(s);
            }
            None => {
                return Err(PvsError::Invalid(format!(
                    "no oracle slot matches weight {:?}",
                    w.vector
                )))
            }
        }
    }
    Ok(BoundOracle {
        oracle,
        slot_of_weight,
    })
}
