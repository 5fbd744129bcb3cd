//! Exact matrix primitives for invariant evaluation.

use exactla::vector::{Rat};
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<Rat>>;

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|r| {
            (0..m)
                .map(|c| {
                    let mut acc = Rat::zero();
                    for i in 0..k {
                        if !a[r][i].is_zero() && !b[i][c].is_zero() {
                            acc += &a[r][i] * &b[i][c];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    (0..m).map(|c| (0..n).map(|r| a[r][c].clone()).collect()).collect()
}

/// Exact determinant by rational Gaussian elimination.
pub fn det(a: &Mat) -> Rat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut sign = false;
    let mut acc = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            sign = !sign;
        }
        acc *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..n {
                    let t = &m[col][c] * &f;
                    m[r][c] -= t;
                }
            }
        }
    }
    if sign {
        -acc
    } else {
        acc
    }
}

/// Pfaffian of a skew-symmetric matrix by recursive expansion along the
/// first row: Pf(A) = sum_{j>1} (-1)^j a_{1j} Pf(A with rows/cols 1,j
/// removed). Sign convention: Pf([[0,1],[-1,0]]) = 1.
pub fn pfaffian(a: &Mat) -> Rat {
    let n = a.len();
    debug_assert!(n % 2 == 0, "pfaffian needs even size");
    if n == 0 {
        return Rat::one();
    }
    if n == 2 {
        return a[0][1].clone();
    }
    let mut acc = Rat::zero();
    for j in 1..n {
        if a[0][j].is_zero() {
            continue;
        }
        let keep: Vec<usize> = (1..n).filter(|&r| r != j).collect();
        let minor: Mat = keep
            .iter()
            .map(|&r| keep.iter().map(|&c| a[r][c].clone()).collect())
            .collect();
        let term = &a[0][j] * pfaffian(&minor);
        if j % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
