//! Fundamental relative invariant polynomial (FRIP) evaluators used as the
//! regularity oracle: determinant/Pfaffian chains for the classical
//! families and binary-cubic discriminants for the G2/F4/E6 instances.
//!
//! Sign conventions, fixed once: Pf([[0,1],[-1,0]]) = 1 with the
//! antidiagonal symplectic form, and disc(ax^3+bx^2y+cxy^2+dy^3) =
//! 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2. Only nonvanishing matters
//! for regularity certification.

pub mod disc;
pub mod ops;

use disc::{binary_cubic_disc, det_pencil_cubic};
use exactla::vector::{self, QVec, Rat};
use num_traits::Zero;
use ops::{det, matmul, pfaffian, transpose, Mat};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("sample point has {got} slots, oracle expects {expected}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("FRIP index {0} out of range")]
    BadFripIndex(usize),
    #[error("invalid oracle shape: {0}")]
    BadShape(String),
}

/// A sparse exact-coefficient polynomial in weight-slot variables.
#[derive(Debug, Clone)]
pub struct CustomFrip {
    pub weight: QVec,
    pub degree: usize,
    /// terms: (coefficient, [(variable index, power)])
    pub terms: Vec<(Rat, Vec<(usize, u32)>)>,
}

/// Oracle specification: which FRIPs to evaluate and how the weight slots
/// of the instance are laid out as matrix coordinates.
#[derive(Debug, Clone)]
pub enum Oracle {
    /// GL chain on Mat(n1,n2) + ... + Mat(n_{k-1},n_k); sizes = (n1..nk).
    GlChain { sizes: Vec<usize> },
    /// Mats + Sym(nk) (upper triangle row-major slots).
    SymChain { sizes: Vec<usize> },
    /// Mats + Skew(nk) (strict upper triangle row-major slots).
    SkewChain { sizes: Vec<usize> },
    /// Mats into Sp(n_{k+1}); sizes = (n1..n_{k+1}), last even.
    SpChain { sizes: Vec<usize> },
    /// Mats into SO(n_{k+1}).
    SoChain { sizes: Vec<usize> },
    /// disc of det(xA + yB) for A, B symmetric 3x3. 12 slots: upper
    /// triangles row-major, first matrix then second. Slot weights are
    /// instance data.
    BinaryCubicDiscSym3 { slot_weights: Vec<QVec> },
    /// Same for general 3x3 matrices; 18 slots row-major.
    BinaryCubicDiscMat3 { slot_weights: Vec<QVec> },
    Custom {
        slot_weights: Vec<QVec>,
        frips: Vec<CustomFrip>,
    },
}

/// Slot layout helpers for the chain kinds.
fn block_starts(sizes: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    let mut out = Vec::with_capacity(sizes.len());
    for &n in sizes {
        out.push(acc);
        acc += n;
    }
    out
}

fn mat_slot_count(sizes: &[usize]) -> usize {
    sizes.windows(2).map(|w| w[0] * w[1]).sum()
}

impl Oracle {
    pub fn num_slots(&self) -> usize {
        match self {
            Oracle::GlChain { sizes } => mat_slot_count(sizes),
            Oracle::SymChain { sizes } => {
                let n = *sizes.last().unwrap();
                mat_slot_count(sizes) + n * (n + 1) / 2
            }
            Oracle::SkewChain { sizes } => {
                let n = *sizes.last().unwrap();
                mat_slot_count(sizes) + n * (n - 1) / 2
            }
            Oracle::SpChain { sizes } | Oracle::SoChain { sizes } => mat_slot_count(sizes),
            Oracle::BinaryCubicDiscSym3 { .. } => 12,
            Oracle::BinaryCubicDiscMat3 { .. } => 18,
            Oracle::Custom { slot_weights, .. } => slot_weights.len(),
        }
    }

    /// Dimension of the torus coordinates the slot weights live in.
    pub fn ambient_dim(&self) -> usize {
        match self {
            Oracle::GlChain { sizes } | Oracle::SymChain { sizes } | Oracle::SkewChain { sizes } => {
                sizes.iter().sum()
            }
            Oracle::SpChain { sizes } | Oracle::SoChain { sizes } => {
                let k = sizes.len() - 1;
                let gl: usize = sizes[..k].iter().sum();
                gl + sizes[k] / 2
            }
            Oracle::BinaryCubicDiscSym3 { slot_weights }
            | Oracle::BinaryCubicDiscMat3 { slot_weights }
            | Oracle::Custom { slot_weights, .. } => {
                slot_weights.first().map_or(0, |w| w.len())
            }
        }
    }

    /// Torus weight of each slot, in oracle coordinates. For chain kinds
    /// the coordinates are the concatenated GL blocks (plus the rank of
    /// the Sp/SO factor); the i-th GL block occupies coordinates
    /// [start_i, start_i + n_i).
    pub fn slot_weights(&self) -> Vec<QVec> {
        match self {
            Oracle::GlChain { sizes } => self.chain_mat_weights(sizes, None),
            Oracle::SymChain { sizes } => {
                let mut w = self.chain_mat_weights(sizes, None);
                let starts = block_starts(sizes);
                let dim = self.ambient_dim();
                let n = *sizes.last().unwrap();
                let b = starts[sizes.len() - 1];
                for r in 0..n {
                    for c in r..n {
                        let mut v = vector::zeros(dim);
                        v[b + r] += vector::rat(1);
                        v[b + c] += vector::rat(1);
                        w.push(v);
                    }
                }
                w
            }
            Oracle::SkewChain { sizes } => {
                let mut w = self.chain_mat_weights(sizes, None);
                let starts = block_starts(sizes);
                let dim = self.ambient_dim();
                let n = *sizes.last().unwrap();
                let b = starts[sizes.len() - 1];
                for r in 0..n {
                    for c in r + 1..n {
                        let mut v = vector::zeros(dim);
                        v[b + r] += vector::rat(1);
                        v[b + c] += vector::rat(1);
                        w.push(v);
                    }
                }
                w
            }
            Oracle::SpChain { sizes } | Oracle::SoChain { sizes } => {
                let k = sizes.len() - 1;
                self.chain_mat_weights(&sizes[..k], Some(sizes[k]))
            }
            Oracle::BinaryCubicDiscSym3 { slot_weights }
            | Oracle::BinaryCubicDiscMat3 { slot_weights }
            | Oracle::Custom { slot_weights, .. } => slot_weights.clone(),
        }
    }

    /// Weights of the Mat(n_i, n_{i+1}) slots. When `iso` is given the
    /// final factor is the isometry group of a split form on that many
    /// coordinates; column weights are +eps_c, then (for odd orthogonal
    /// groups) one zero, then -eps reversed.
    fn chain_mat_weights(&self, gl_sizes: &[usize], iso: Option<usize>) -> Vec<QVec> {
        let dim = self.ambient_dim();
        let starts = block_starts(gl_sizes);
        let gl_total: usize = gl_sizes.iter().sum();
        let mut out = Vec::new();
        let nmats = if iso.is_some() {
            gl_sizes.len()
        } else {
            gl_sizes.len() - 1
        };
        for i in 0..nmats {
            let rows = gl_sizes[i];
            let cols = if i + 1 < gl_sizes.len() {
                gl_sizes[i + 1]
            } else {
                iso.unwrap()
            };
            let b = starts[i];
            for r in 0..rows {
                for c in 0..cols {
                    let mut v = vector::zeros(dim);
                    if i + 1 < gl_sizes.len() {
                        v[starts[i + 1] + c] = vector::rat(-1);
                    } else {
                        let n = iso.unwrap();
                        let m = n / 2;
                        if c < m {
                            v[gl_total + c] = vector::rat(-1);
                        } else if n % 2 == 1 && c == m {
                            // zero weight coordinate of odd SO
                        } else {
                            v[gl_total + (n - 1 - c)] = vector::rat(1);
                        }
                    }
                    v[b + r] += vector::rat(1);
                    out.push(v);
                }
            }
        }
        out
    }

    fn frip_plan(&self) -> Vec<FripPlan> {
        match self {
            Oracle::GlChain { sizes } => {
                let k = sizes.len();
                let starts = block_starts(sizes);
                let dim = self.ambient_dim();
                let mut plans = Vec::new();
                for j in 0..k - 1 {
                    if sizes[j] == sizes[j + 1] {
                        plans.push(FripPlan {
                            formula: Formula::DetProduct { first: j, last: j },
                            weight: block_diff_weight(dim, &starts, sizes, j, j + 1),
                            degree: sizes[j],
                        });
                    } else if sizes[j] < sizes[j + 1] {
                        let last = k - 2 - j;
                        plans.push(FripPlan {
                            formula: Formula::DetProduct { first: j, last },
                            weight: block_diff_weight(dim, &starts, sizes, j, k - 1 - j),
                            degree: sizes[j] * (last - j + 1),
                        });
                    }
                }
                plans
            }
            Oracle::SymChain { sizes } | Oracle::SkewChain { sizes } => {
                let skew = matches!(self, Oracle::SkewChain { .. });
                let k = sizes.len();
                let starts = block_starts(sizes);
                let dim = self.ambient_dim();
                let mut plans = Vec::new();
                for i in 0..k {
                    if i + 1 < k && sizes[i] == sizes[i + 1] {
                        plans.push(FripPlan {
                            formula: Formula::DetProduct { first: i, last: i },
                            weight: block_diff_weight(dim, &starts, sizes, i, i + 1),
                            degree: sizes[i],
                        });
                    } else if i + 1 == k || sizes[i] < sizes[i + 1] {
                        let factors = 2 * (k - 1 - i) + 1;
                        let weight = block_double_weight(dim, &starts, sizes, i, skew);
                        let degree = if skew {
                            sizes[i] * factors / 2
                        } else {
                            sizes[i] * factors
                        };
                        plans.push(FripPlan {
                            formula: Formula::SandwichForm { first: i },
                            weight,
                            degree,
                        });
                    }
                }
                plans
            }
            Oracle::SpChain { sizes } | Oracle::SoChain { sizes } => {
                let skew = matches!(self, Oracle::SpChain { .. });
                let k = sizes.len() - 1;
                let starts = block_starts(&sizes[..k]);
                let dim = self.ambient_dim();
                let mut plans = Vec::new();
                for i in 0..k {
                    if i + 1 < k && sizes[i] == sizes[i + 1] {
                        plans.push(FripPlan {
                            formula: Formula::DetProduct { first: i, last: i },
                            weight: block_diff_weight(dim, &starts, &sizes[..k], i, i + 1),
                            degree: sizes[i],
                        });
                    } else {
                        let factors = 2 * (k - i);
                        let weight = block_double_weight(dim, &starts, &sizes[..k], i, skew);
                        let degree = if skew {
                            sizes[i] * factors / 2
                        } else {
                            sizes[i] * factors
                        };
                        plans.push(FripPlan {
                            formula: Formula::SandwichJ { first: i },
                            weight,
                            degree,
                        });
                    }
                }
                plans
            }
            Oracle::BinaryCubicDiscSym3 { slot_weights } => {
                vec![FripPlan {
                    formula: Formula::CubicDisc,
                    weight: cubic_disc_weight(slot_weights, &[0, 3, 5], 6),
                    degree: 12,
                }]
            }
            Oracle::BinaryCubicDiscMat3 { slot_weights } => {
                vec![FripPlan {
                    formula: Formula::CubicDisc,
                    weight: cubic_disc_weight(slot_weights, &[0, 4, 8], 9),
                    degree: 12,
                }]
            }
            Oracle::Custom { frips, .. } => frips
                .iter()
                .enumerate()
                .map(|(i, f)| FripPlan {
                    formula: Formula::CustomIdx(i),
                    weight: f.weight.clone(),
                    degree: f.degree,
                })
                .collect(),
        }
    }

    pub fn frip_count(&self) -> usize {
        self.frip_plan().len()
    }

    /// The character of FRIP `index` in oracle coordinates.
    pub fn frip_weight(&self, index: usize) -> Result<QVec, OracleError> {
        self.frip_plan()
            .get(index)
            .map(|p| p.weight.clone())
            .ok_or(OracleError::BadFripIndex(index))
    }

    pub fn frip_weights(&self) -> Vec<QVec> {
        self.frip_plan().into_iter().map(|p| p.weight).collect()
    }

    pub fn frip_degree(&self, index: usize) -> Result<usize, OracleError> {
        self.frip_plan()
            .get(index)
            .map(|p| p.degree)
            .ok_or(OracleError::BadFripIndex(index))
    }

    pub fn frip_degrees(&self) -> Vec<usize> {
        self.frip_plan().into_iter().map(|p| p.degree).collect()
    }

    /// Evaluates every FRIP at the given slot assignment, exactly.
    pub fn evaluate_frips(&self, point: &[Rat]) -> Result<Vec<Rat>, OracleError> {
        if point.len() != self.num_slots() {
            return Err(OracleError::ShapeMismatch {
                expected: self.num_slots(),
                got: point.len(),
            });
        }
        let plans = self.frip_plan();
        plans.iter().map(|p| self.eval_one(p, point)).collect()
    }

    fn eval_one(&self, plan: &FripPlan, point: &[Rat]) -> Result<Rat, OracleError> {
        match (&plan.formula, self) {
            (Formula::DetProduct { first, last }, _) => {
                let mut m = self.read_mat(point, *first);
                for j in (*first + 1)..=*last {
                    m = matmul(&m, &self.read_mat(point, j));
                }
                Ok(det(&m))
            }
            (Formula::SandwichForm { first }, Oracle::SymChain { sizes })
            | (Formula::SandwichForm { first }, Oracle::SkewChain { sizes }) => {
                let k = sizes.len();
                let mut m = self.read_form_matrix(point);
                for j in (*first..k - 1).rev() {
                    let x = self.read_mat(point, j);
                    m = matmul(&matmul(&x, &m), &transpose(&x));
                }
                if matches!(self, Oracle::SkewChain { .. }) {
                    Ok(pfaffian(&m))
                } else {
                    Ok(det(&m))
                }
            }
            (Formula::SandwichJ { first }, Oracle::SpChain { sizes })
            | (Formula::SandwichJ { first }, Oracle::SoChain { sizes }) => {
                let k = sizes.len() - 1;
                let skew = matches!(self, Oracle::SpChain { .. });
                let mut m = form_matrix(sizes[k], skew);
                for j in (*first..k).rev() {
                    let x = self.read_mat(point, j);
                    m = matmul(&matmul(&x, &m), &transpose(&x));
                }
                if skew {
                    Ok(pfaffian(&m))
                } else {
                    Ok(det(&m))
                }
            }
            (Formula::CubicDisc, Oracle::BinaryCubicDiscSym3 { .. }) => {
                let a = sym3_from_slots(&point[0..6]);
                let b = sym3_from_slots(&point[6..12]);
                let [c0, c1, c2, c3] = det_pencil_cubic(&a, &b);
                Ok(binary_cubic_disc(&c0, &c1, &c2, &c3))
            }
            (Formula::CubicDisc, Oracle::BinaryCubicDiscMat3 { .. }) => {
                let a = mat3_from_slots(&point[0..9]);
                let b = mat3_from_slots(&point[9..18]);
                let [c0, c1, c2, c3] = det_pencil_cubic(&a, &b);
                Ok(binary_cubic_disc(&c0, &c1, &c2, &c3))
            }
            (Formula::CustomIdx(i), Oracle::Custom { frips, .. }) => {
                let f = &frips[*i];
                let mut acc = Rat::zero();
                for (coef, powers) in &f.terms {
                    let mut term = coef.clone();
                    for (var, pow) in powers {
                        for _ in 0..*pow {
                            term *= &point[*var];
                        }
                        if term.is_zero() {
                            break;
                        }
                    }
                    acc += term;
                }
                Ok(acc)
            }
            _ => unreachable!("formula/oracle pairing is internal"),
        }
    }

    /// Matrix x_j of the chain read from the slots (row-major).
    fn read_mat(&self, point: &[Rat], j: usize) -> Mat {
        let sizes: &[usize] = match self {
            Oracle::GlChain { sizes }
            | Oracle::SymChain { sizes }
            | Oracle::SkewChain { sizes }
            | Oracle::SpChain { sizes }
            | Oracle::SoChain { sizes } => sizes,
            _ => unreachable!(),
        };
        let mut offset = 0;
        for i in 0..j {
            offset += sizes[i] * sizes[i + 1];
        }
        let rows = sizes[j];
        let cols = sizes[j + 1];
        (0..rows)
            .map(|r| (0..cols).map(|c| point[offset + r * cols + c].clone()).collect())
            .collect()
    }

    /// The symmetric or skew form matrix at the end of a sym/skew chain.
    fn read_form_matrix(&self, point: &[Rat]) -> Mat {
        let (sizes, skew) = match self {
            Oracle::SymChain { sizes } => (sizes, false),
            Oracle::SkewChain { sizes } => (sizes, true),
            _ => unreachable!(),
        };
        let n = *sizes.last().unwrap();
        let offset = mat_slot_count(sizes);
        let mut m: Mat = (0..n).map(|_| vec![Rat::zero(); n]).collect();
        let mut idx = offset;
        for r in 0..n {
            let c0 = if skew { r + 1 } else { r };
            for c in c0..n {
                m[r][c] = point[idx].clone();
                if skew {
                    m[c][r] = -point[idx].clone();
                } else {
                    m[c][r] = point[idx].clone();
                }
                idx += 1;
            }
        }
        m
    }
}

/// The split form matrix on n coordinates: antidiagonal ones (symmetric)
/// or the antidiagonal symplectic J with Pf(J) = 1 (skew).
fn form_matrix(n: usize, skew: bool) -> Mat {
    let mut m: Mat = (0..n).map(|_| vec![Rat::zero(); n]).collect();
    for i in 0..n {
        let j = n - 1 - i;
        if skew {
            m[i][j] = if i < j { vector::rat(1) } else { vector::rat(-1) };
        } else {
            m[i][j] = vector::rat(1);
        }
    }
    m
}

fn sym3_from_slots(s: &[Rat]) -> Mat {
    vec![
        vec![s[0].clone(), s[1].clone(), s[2].clone()],
        vec![s[1].clone(), s[3].clone(), s[4].clone()],
        vec![s[2].clone(), s[4].clone(), s[5].clone()],
    ]
}

fn mat3_from_slots(s: &[Rat]) -> Mat {
    (0..3).map(|r| (0..3).map(|c| s[r * 3 + c].clone()).collect()).collect()
}

/// Character of det of the product x_i ... : sum of block i coordinates
/// minus sum of block j coordinates.
fn block_diff_weight(dim: usize, starts: &[usize], sizes: &[usize], i: usize, j: usize) -> QVec {
    let mut v = vector::zeros(dim);
    for r in 0..sizes[i] {
        v[starts[i] + r] += vector::rat(1);
    }
    for c in 0..sizes[j] {
        v[starts[j] + c] -= vector::rat(1);
    }
    v
}

/// Character of det/Pf of x_i ... x_i^t: twice (det) or once (Pf) the sum
/// of block i coordinates.
fn block_double_weight(dim: usize, starts: &[usize], sizes: &[usize], i: usize, skew: bool) -> QVec {
    let mut v = vector::zeros(dim);
    let c = if skew { 1 } else { 2 };
    for r in 0..sizes[i] {
        v[starts[i] + r] += vector::rat(c);
    }
    v
}

/// disc(det(xA + yB)) has character 4 w0 + 6 theta where w0 is the weight
/// of det A (any transversal of the first weight matrix) and theta the
/// weight shift between the two matrices.
fn cubic_disc_weight(slot_weights: &[QVec], diag: &[usize; 3], second_offset: usize) -> QVec {
    let dim = slot_weights[0].len();
    let mut w0 = vector::zeros(dim);
    for &d in diag {
        for (a, b) in w0.iter_mut().zip(&slot_weights[d]) {
            *a += b;
        }
    }
    let theta = vector::sub(&slot_weights[second_offset + diag[0]], &slot_weights[diag[0]]);
    let mut out = vector::scale(&w0, &vector::rat(4));
    for (a, b) in out.iter_mut().zip(&theta) {
        *a += &vector::rat(6) * b;
    }
    out
}

#[derive(Debug, Clone)]
struct FripPlan {
    formula: Formula,
    weight: QVec,
    degree: usize,
}

#[derive(Debug, Clone)]
enum Formula {
    DetProduct { first: usize, last: usize },
    SandwichForm { first: usize },
    SandwichJ { first: usize },
    CubicDisc,
    CustomIdx(usize),
}

/// Mixes seed material into a single stream seed.
pub fn mix_seed(parts: &[u64]) -> u64 {
    let mut h: u64 = 0x9e37_79b9_7f4a_7c15;
    for &p in parts {
        h ^= p;
        h = h.wrapping_mul(0xff51_afd7_ed55_8ccd);
        h ^= h >> 33;
        h = h.wrapping_mul(0xc4ce_b9fe_1a85_ec53);
        h ^= h >> 29;
    }
    h
}

/// Deterministic sample point: independent uniform integers in
/// [-height, height] on the supported slots, zero elsewhere.
pub fn sample_point(num_slots: usize, support: &[usize], height: u64, seed: u64) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = height as i64;
    let mut out = vec![Rat::zero(); num_slots];
    for &s in support {
        let v: i64 = rng.gen_range(-h..=h);
        out[s] = vector::rat(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactla::vector::rat;

    #[test]
    fn gl_chain_121_single_frip() {
        let o = Oracle::GlChain { sizes: vec![1, 2, 1] };
        assert_eq!(o.num_slots(), 4);
        assert_eq!(o.frip_count(), 1);
        // det(x1 x2), weight e1 - e4
        let w = o.frip_weight(0).unwrap();
        assert_eq!(w, vec![rat(1), rat(0), rat(0), rat(-1)]);
        // x1 = (2, 3), x2 = (5, 7)^t -> det = 31
        let point = vec![rat(2), rat(3), rat(5), rat(7)];
        assert_eq!(o.evaluate_frips(&point).unwrap(), vec![rat(31)]);
        assert_eq!(o.frip_degree(0).unwrap(), 2);
    }

    #[test]
    fn gl_chain_equal_sizes_two_frips() {
        let o = Oracle::GlChain { sizes: vec![2, 2, 2] };
        assert_eq!(o.frip_count(), 2);
        let point: Vec<Rat> = (1..=8).map(rat).collect();
        let vals = o.evaluate_frips(&point).unwrap();
        // det [[1,2],[3,4]] = -2, det [[5,6],[7,8]] = -2
        assert_eq!(vals, vec![rat(-2), rat(-2)]);
    }

    // Binary quadratic forms: sym chain k=1, n=2; FRIP is det of the
    // symmetric matrix, weight 2(e1+e2).
    #[test]
    fn sym_chain_binary_quadratics() {
        let o = Oracle::SymChain { sizes: vec![2] };
        assert_eq!(o.num_slots(), 3);
        assert_eq!(o.frip_weights(), vec![vec![rat(2), rat(2)]]);
        // slots (a, b, c) for [[a,b],[b,c]]: det = ac - b^2
        let point = vec![rat(3), rat(2), rat(5)];
        assert_eq!(o.evaluate_frips(&point).unwrap(), vec![rat(11)]);
        let weights = o.slot_weights();
        assert_eq!(
            weights,
            vec![
                vec![rat(2), rat(0)],
                vec![rat(1), rat(1)],
                vec![rat(0), rat(2)],
            ]
        );
    }

    #[test]
    fn sp_chain_pf_of_embedded_form() {
        let o = Oracle::SpChain { sizes: vec![2, 4] };
        assert_eq!(o.num_slots(), 8);
        assert_eq!(o.frip_count(), 1);
        // x embeds coordinates 1 and 4: x J x^t = [[0,1],[-1,0]], Pf = 1
        let mut point = vec![Rat::zero(); 8];
        point[0] = rat(1);
        point[7] = rat(1);
        assert_eq!(o.evaluate_frips(&point).unwrap(), vec![rat(1)]);
    }

    #[test]
    fn cubic_disc_sym3_pencils() {
        // slot weights irrelevant for evaluation; use dummies
        let w: Vec<QVec> = (0..12).map(|_| vec![Rat::zero()]).collect();
        let o = Oracle::BinaryCubicDiscSym3 { slot_weights: w };
        // A = I, B = diag(1,1,-1): (x+y)^2(x-y) has a double root
        let mut point = vec![Rat::zero(); 12];
        point[0] = rat(1);
        point[3] = rat(1);
        point[5] = rat(1);
        point[6] = rat(1);
        point[9] = rat(1);
        point[11] = rat(-1);
        assert!(o.evaluate_frips(&point).unwrap()[0].is_zero());
        // B = diag(1,2,3): roots -1, -1/2, -1/3 distinct
        point[9] = rat(2);
        point[11] = rat(3);
        assert!(!o.evaluate_frips(&point).unwrap()[0].is_zero());
    }

    #[test]
    fn cubic_disc_mat3_first_matrix_zero_always_vanishes() {
        let w: Vec<QVec> = (0..18).map(|_| vec![Rat::zero()]).collect();
        let o = Oracle::BinaryCubicDiscMat3 { slot_weights: w };
        for t in 1..20i64 {
            let mut point = vec![Rat::zero(); 18];
            for j in 0..9 {
                point[9 + j] = rat((t * (j as i64 + 3)) % 11 - 5);
            }
            assert!(
                o.evaluate_frips(&point).unwrap()[0].is_zero(),
                "disc of y^3 det B must vanish"
            );
        }
    }

    #[test]
    fn sample_point_deterministic() {
        let a = sample_point(6, &[0, 2, 4], 1, 42);
        let b = sample_point(6, &[0, 2, 4], 1, 42);
        assert_eq!(a, b);
        assert!(a[1].is_zero() && a[3].is_zero() && a[5].is_zero());
        let c = sample_point(6, &[0, 2, 4], 1000, 43);
        assert_ne!(a, c);
    }

    #[test]
    fn seeds_rarely_collide() {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        for s in 0..10_000u64 {
            let p = sample_point(4, &[0, 1, 2, 3], 1000, mix_seed(&[7, s]));
            seen.insert(format!("{p:?}"));
        }
        assert!(seen.len() > 9_900);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let o = Oracle::GlChain { sizes: vec![1, 2, 1] };
        assert!(matches!(
            o.evaluate_frips(&[rat(1)]),
            Err(OracleError::ShapeMismatch { .. })
        ));
    }
}
