//! Root datum construction and parabolic root partitions.

use exactla::matrix::rref;
use exactla::vector::{self, dot, QVec, Rat};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSysError {
    #[error("unsupported root datum type: {0}")]
    UnsupportedType(String),
    #[error("Weyl group too large to enumerate (order {order}, cap is |W(E7)| = 2903040)")]
    RankTooLarge { order: u128 },
    #[error("invalid parabolic subset index {0}")]
    BadParabolicIndex(usize),
}

/// A positive root together with its integer coefficients over the simple
/// roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub vector: QVec,
    pub coeffs: Vec<i64>,
}

/// Standard parabolic selector: a subset of simple-root indices (0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ParabolicIndex(pub BTreeSet<usize>);

impl ParabolicIndex {
    pub fn full(n: usize) -> Self {
        ParabolicIndex((0..n).collect())
    }

    pub fn empty() -> Self {
        ParabolicIndex(BTreeSet::new())
    }

    pub fn from_slice(s: &[usize]) -> Self {
        ParabolicIndex(s.iter().copied().collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        ParabolicIndex(self.0.intersection(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }
}

/// A split root datum in W-invariant coordinates.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub type_label: String,
    pub ambient_dim: usize,
    pub simple_roots: Vec<QVec>,
    pub simple_coroots: Vec<QVec>,
    pub positive_roots: Vec<PositiveRoot>,
    /// cartan[i][j] = <alpha_i, alpha_j^vee>
    pub cartan: Vec<Vec<i64>>,
    /// Basis of X*(T_0) tensor Q inside the ambient coordinates. For GL and
    /// torus factors this is the full coordinate block; for simple factors
    /// it is the span of their roots.
    pub lattice_span: Vec<QVec>,
    /// Weyl group order per factor, multiplied out.
    pub weyl_order: u128,
    coord_solver: Vec<QVec>,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Coefficients of a root-span vector over the simple roots.
    pub fn simple_coords(&self, v: &QVec) -> QVec {
        self.coord_solver.iter().map(|row| dot(row, v)).collect()
    }

    /// Ambient vector from simple-root coefficients.
    pub fn from_simple_coords(&self, coeffs: &[Rat]) -> QVec {
        let mut v = vector::zeros(self.ambient_dim);
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            for (vi, ai) in v.iter_mut().zip(a) {
                *vi += c * ai;
            }
        }
        v
    }

    /// Is `v` a negative root-lattice direction (all simple coefficients
    /// nonpositive)? Valid only for vectors in the root span.
    pub fn is_negative(&self, v: &QVec) -> bool {
        self.simple_coords(v).iter().all(|c| !c.is_positive())
    }

    /// Sum of all positive roots.
    pub fn delta0(&self) -> QVec {
        let mut v = vector::zeros(self.ambient_dim);
        for r in &self.positive_roots {
            for (vi, ri) in v.iter_mut().zip(&r.vector) {
                *vi += ri;
            }
        }
        v
    }

    /// Partition of the positive roots of the standard parabolic given by
    /// `subset`: (Levi root indices, nilradical root indices). Levi roots
    /// are the positive roots supported on the subset.
    pub fn parabolic_partition(&self, subset: &ParabolicIndex) -> (Vec<usize>, Vec<usize>) {
        let mut levi = Vec::new();
        let mut nilrad = Vec::new();
        for (i, r) in self.positive_roots.iter().enumerate() {
            let supported = r
                .coeffs
                .iter()
                .enumerate()
                .all(|(j, &c)| c == 0 || subset.contains(j));
            if supported {
                levi.push(i);
            } else {
                nilrad.push(i);
            }
        }
        (levi, nilrad)
    }

    /// delta_0 of the Levi M_S: the sum of the positive roots supported on
    /// the subset.
    pub fn delta0_levi(&self, subset: &ParabolicIndex) -> QVec {
        let (levi, _) = self.parabolic_partition(subset);
        let mut v = vector::zeros(self.ambient_dim);
        for i in levi {
            for (vi, ri) in v.iter_mut().zip(&self.positive_roots[i].vector) {
                *vi += ri;
            }
        }
        v
    }

    pub fn positive_root_vectors(&self) -> Vec<QVec> {
        self.positive_roots.iter().map(|r| r.vector.clone()).collect()
    }
}

struct Factor {
    dim: usize,
    simple_roots: Vec<QVec>,
    full_lattice: bool,
    weyl_order: u128,
}

fn e(i: usize, dim: usize) -> QVec {
    let mut v = vector::zeros(dim);
    v[i] = vector::rat(1);
    v
}

fn chain_roots(n: usize, dim: usize) -> Vec<QVec> {
    (0..n)
        .map(|i| {
            let mut v = vector::zeros(dim);
            v[i] = vector::rat(1);
            v[i + 1] = vector::rat(-1);
            v
        })
        .collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn parse_factor(tok: &str) -> Result<Factor, RootSysError> {
    let t = tok.trim();
    let (head, arg) = match t.find('(') {
        Some(p) if t.ends_with(')') => {
            let n: usize = t[p + 1..t.len() - 1]
                .parse()
                .map_err(|_| RootSysError::UnsupportedType(tok.to_string()))?;
            (t[..p].to_uppercase(), Some(n))
        }
        _ => {
            // forms like A3, B2, F4
            let split = t.find(|c: char| c.is_ascii_digit());
            match split {
                Some(p) => {
                    let n: usize = t[p..]
                        .parse()
                        .map_err(|_| RootSysError::UnsupportedType(tok.to_string()))?;
                    (t[..p].to_uppercase(), Some(n))
                }
                None => (t.to_uppercase(), None),
            }
        }
    };
    let bad = || RootSysError::UnsupportedType(tok.to_string());
    match (head.as_str(), arg) {
        ("GL", Some(n)) if n >= 1 => Ok(Factor {
            dim: n,
            simple_roots: chain_roots(n - 1, n),
            full_lattice: true,
            weyl_order: factorial(n),
        }),
        ("SL", Some(n)) if n >= 2 => Ok(Factor {
            dim: n,
            simple_roots: chain_roots(n - 1, n),
            full_lattice: false,
            weyl_order: factorial(n),
        }),
        ("A", Some(n)) if n >= 1 => Ok(Factor {
            dim: n + 1,
            simple_roots: chain_roots(n, n + 1),
            full_lattice: false,
            weyl_order: factorial(n + 1),
        }),
        ("B", Some(n)) if n >= 2 => {
            let mut roots = chain_roots(n - 1, n);
            roots.push(e(n - 1, n));
            Ok(Factor {
                dim: n,
                simple_roots: roots,
                full_lattice: true,
                weyl_order: (1u128 << n) * factorial(n),
            })
        }
        ("C", Some(n)) if n >= 2 => {
            let mut roots = chain_roots(n - 1, n);
            roots.push(vector::scale(&e(n - 1, n), &vector::rat(2)));
            Ok(Factor {
                dim: n,
                simple_roots: roots,
                full_lattice: true,
                weyl_order: (1u128 << n) * factorial(n),
            })
        }
        ("D", Some(n)) if n >= 3 => {
            let mut roots = chain_roots(n - 1, n);
            let mut last = e(n - 2, n);
            last[n - 1] = vector::rat(1);
            roots.push(last);
            Ok(Factor {
                dim: n,
                simple_roots: roots,
                full_lattice: true,
                weyl_order: (1u128 << (n - 1)) * factorial(n),
            })
        }
        ("G", Some(2)) | ("G2", None) => {
            // alpha1 = e1 - e2 (short), alpha2 = -2e1 + e2 + e3 (long)
            let a1 = vec![vector::rat(1), vector::rat(-1), vector::rat(0)];
            let a2 = vec![vector::rat(-2), vector::rat(1), vector::rat(1)];
            Ok(Factor {
                dim: 3,
                simple_roots: vec![a1, a2],
                full_lattice: false,
                weyl_order: 12,
            })
        }
        ("F", Some(4)) | ("F4", None) => {
            // alpha1 = e2-e3, alpha2 = e3-e4 (long); alpha3 = e4,
            // alpha4 = (e1-e2-e3-e4)/2 (short)
            let a1 = vec![vector::rat(0), vector::rat(1), vector::rat(-1), vector::rat(0)];
            let a2 = vec![vector::rat(0), vector::rat(0), vector::rat(1), vector::rat(-1)];
            let a3 = vec![vector::rat(0), vector::rat(0), vector::rat(0), vector::rat(1)];
            let a4 = vec![
                vector::ratio(1, 2),
                vector::ratio(-1, 2),
                vector::ratio(-1, 2),
                vector::ratio(-1, 2),
            ];
            Ok(Factor {
                dim: 4,
                simple_roots: vec![a1, a2, a3, a4],
                full_lattice: true,
                weyl_order: 1152,
            })
        }
        ("E", Some(n)) if n == 6 || n == 7 => {
            let mut roots = Vec::new();
            let half = vector::ratio(1, 2);
            let mut a1 = vec![-half.clone(); 8];
            a1[0] = half.clone();
            a1[7] = half.clone();
            roots.push(a1);
            let mut a2 = vector::zeros(8);
            a2[0] = vector::rat(1);
            a2[1] = vector::rat(1);
            roots.push(a2);
            for k in 0..(n - 2) {
                // alpha_{3+k} = e_{k+2} - e_{k+1} in 1-based Bourbaki terms
                let mut a = vector::zeros(8);
                a[k] = vector::rat(-1);
                a[k + 1] = vector::rat(1);
                roots.push(a);
            }
            Ok(Factor {
                dim: 8,
                simple_roots: roots,
                full_lattice: false,
                weyl_order: if n == 6 { 51840 } else { 2903040 },
            })
        }
        ("T", Some(n)) => Ok(Factor {
            dim: n,
            simple_roots: Vec::new(),
            full_lattice: true,
            weyl_order: 1,
        }),
        _ => Err(bad()),
    }
}

/// Generates all positive roots of a simple factor by reflection closure,
/// tracking integer coefficients over the simple roots.
fn generate_positive_roots(simple: &[QVec]) -> Vec<PositiveRoot> {
    let n = simple.len();
    if n == 0 {
        return Vec::new();
    }
    // cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (a_i, a_j) / (a_j, a_j)
    let cartan: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    vector::rat(2) * dot(&simple[i], &simple[j]) / dot(&simple[j], &simple[j])
                })
                .collect()
        })
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut c = vec![0i64; n];
        c[i] = 1;
        seen.insert(c.clone());
        queue.push(c);
    }
    while let Some(c) = queue.pop() {
        for j in 0..n {
            // pairing <root, alpha_j^vee> = sum_i c_i cartan[i][j]
            let mut p = Rat::zero();
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    p += vector::rat(ci) * &cartan[i][j];
                }
            }
            let pi = {
                debug_assert!(p.is_integer());
                let num: i64 = p.numer().try_into().expect("small Cartan pairings");
                num
            };
            let mut c2 = c.clone();
            c2[j] -= pi;
            if c2.iter().all(|&x| x >= 0) && !seen.contains(&c2) {
                seen.insert(c2.clone());
                queue.push(c2);
            }
        }
    }
    seen.into_iter()
        .map(|coeffs| {
            let mut v = vector::zeros(simple[0].len());
            for (i, &ci) in coeffs.iter().enumerate() {
                if ci != 0 {
                    let s = vector::rat(ci);
                    for (vi, ai) in v.iter_mut().zip(&simple[i]) {
                        *vi += &s * ai;
                    }
                }
            }
            PositiveRoot { vector: v, coeffs }
        })
        .collect()
}

/// Builds a root datum from a type string: simple types `A..E7`, `G2`,
/// `F4`, the groups `GL(n)` / `SL(n)`, central tori `T(k)`, and `x`-joined
/// products, e.g. `SL(3)xSL(3)xGL(2)`. Products are realized by
/// block-diagonal concatenation of coordinates.
pub fn build_root_datum(spec: &str) -> Result<RootDatum, RootSysError> {
    let factors: Vec<Factor> = spec
        .split('x')
        .map(parse_factor)
        .collect::<Result<_, _>>()?;
    if factors.is_empty() {
        return Err(RootSysError::UnsupportedType(spec.to_string()));
    }
    let ambient_dim: usize = factors.iter().map(|f| f.dim).sum();
    let mut simple_roots: Vec<QVec> = Vec::new();
    let mut positive_roots: Vec<PositiveRoot> = Vec::new();
    let mut lattice_span: Vec<QVec> = Vec::new();
    let mut weyl_order: u128 = 1;
    let mut offset = 0;
    let mut simple_offset = 0;
    let total_rank: usize = factors.iter().map(|f| f.simple_roots.len()).sum();
    for f in &factors {
        let embed = |v: &QVec| -> QVec {
            let mut w = vector::zeros(ambient_dim);
            w[offset..offset + f.dim].clone_from_slice(v);
            w
        };
        for r in &f.simple_roots {
            simple_roots.push(embed(r));
        }
        for pr in generate_positive_roots(&f.simple_roots) {
            let mut coeffs = vec![0i64; total_rank];
            coeffs[simple_offset..simple_offset + f.simple_roots.len()]
                .copy_from_slice(&pr.coeffs);
            positive_roots.push(PositiveRoot {
                vector: embed(&pr.vector),
                coeffs,
            });
        }
        if f.full_lattice {
            for i in 0..f.dim {
                lattice_span.push(embed(&e(i, f.dim)));
            }
        } else {
            for r in &f.simple_roots {
                lattice_span.push(embed(r));
            }
        }
        weyl_order = weyl_order.saturating_mul(f.weyl_order);
        offset += f.dim;
        simple_offset += f.simple_roots.len();
    }
    // sort positive roots by height, then lexicographically, for stable
    // downstream indexing
    positive_roots.sort_by(|a, b| {
        let ha: i64 = a.coeffs.iter().sum();
        let hb: i64 = b.coeffs.iter().sum();
        ha.cmp(&hb).then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    let simple_coroots: Vec<QVec> = simple_roots
        .iter()
        .map(|a| {
            let norm = dot(a, a);
            vector::scale(a, &(vector::rat(2) / norm))
        })
        .collect();
    let cartan: Vec<Vec<i64>> = simple_roots
        .iter()
        .map(|a| {
            simple_coroots
                .iter()
                .map(|b| {
                    let p = dot(a, b);
                    debug_assert!(p.is_integer());
                    p.numer().try_into().expect("small Cartan entries")
                })
                .collect()
        })
        .collect();
    let coord_solver = make_coord_solver(&simple_roots, ambient_dim);
    Ok(RootDatum {
        type_label: spec.to_string(),
        ambient_dim,
        simple_roots,
        simple_coroots,
        positive_roots,
        cartan,
        lattice_span,
        weyl_order,
        coord_solver,
    })
}

/// Left inverse of the simple-root column matrix: rows L_i with
/// L_i . alpha_j = delta_ij, via (S^T S)^{-1} S^T.
fn make_coord_solver(simple: &[QVec], dim: usize) -> Vec<QVec> {
    let n = simple.len();
    if n == 0 {
        return Vec::new();
    }
    // gram[i][j] = (a_i, a_j), augmented with identity, then invert by RREF
    let mut aug: Vec<QVec> = (0..n)
        .map(|i| {
            let mut row: QVec = (0..n).map(|j| dot(&simple[i], &simple[j])).collect();
            for k in 0..n {
                row.push(if k == i { vector::rat(1) } else { Rat::zero() });
            }
            row
        })
        .collect();
    let (red, pivots) = rref(&mut aug);
    assert_eq!(pivots.len(), n, "simple roots must be linearly independent");
    // inverse gram rows are red[i][n..2n]; L = G^{-1} S^T
    (0..n)
        .map(|i| {
            let mut row = vector::zeros(dim);
            for j in 0..n {
                let g = &red[i][n + j];
                if !g.is_zero() {
                    for (ri, sj) in row.iter_mut().zip(&simple[j]) {
                        *ri += g * sj;
                    }
                }
            }
            row
        })
        .collect()
}
