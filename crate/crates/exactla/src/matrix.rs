//! Dense exact Gaussian elimination: ranks, kernels, solving, span tests.

use crate::vector::{dot, is_zero_vec, primitive_signed, zeros, QVec, Rat};
use crate::ExactlaError;
use num_traits::{One, Zero};

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped)
/// and the pivot column of each row.
pub fn rref(rows: &[QVec]) -> (Vec<QVec>, Vec<usize>) {
    let mut mat: Vec<QVec> = rows.to_vec();
    let ncols = mat.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, p);
        let inv = mat[row][col].recip();
        for x in mat[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..mat.len() {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in 0..ncols {
                    let t = &mat[row][c] * &factor;
                    mat[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == mat.len() {
            break;
        }
    }
    mat.truncate(row);
    (mat, pivots)
}

/// Dimension of the rational span of the given vectors.
pub fn rank_of_span(vectors: &[QVec]) -> Result<usize, ExactlaError> {
    if vectors.is_empty() {
        return Ok(0);
    }
    crate::check_dims(vectors, vectors[0].len())?;
    Ok(rref(vectors).0.len())
}

/// Basis of {x : <v, x> = 0 for all given v}, with the standard dot
/// pairing, in the full ambient space of dimension `dim`. The basis is the
/// canonical RREF kernel basis, each vector in primitive integer form.
pub fn kernel_basis(vectors: &[QVec], dim: usize) -> Result<Vec<QVec>, ExactlaError> {
    crate::check_dims(vectors, dim)?;
    let (red, pivots) = rref(vectors);
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = zeros(dim);
        v[free] = Rat::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[r][free].clone();
        }
        basis.push(primitive_signed(&v));
    }
    Ok(basis)
}

/// Basis of the kernel of the pairing against `vectors`, intersected with
/// the span of `span`: {x in span(span) : <v, x> = 0 for all v}.
pub fn kernel_basis_in_span(
    vectors: &[QVec],
    span: &[QVec],
) -> Result<Vec<QVec>, ExactlaError> {
    if span.is_empty() {
        return Ok(Vec::new());
    }
    let dim = span[0].len();
    crate::check_dims(vectors, dim)?;
    crate::check_dims(span, dim)?;
    // Write x = sum c_j span_j; the constraint becomes a system in c.
    let projected: Vec<QVec> = vectors
        .iter()
        .map(|v| span.iter().map(|s| dot(v, s)).collect())
        .collect();
    let coeff_kernel = kernel_basis(&projected, span.len())?;
    Ok(coeff_kernel
        .iter()
        .map(|c| {
            let mut x = zeros(dim);
            for (cj, s) in c.iter().zip(span) {
                for (xi, si) in x.iter_mut().zip(s) {
                    *xi += cj * si;
                }
            }
            primitive_signed(&x)
        })
        .collect())
}

/// Solves sum_j x_j rows_j = target exactly; None if inconsistent.
pub fn solve_linear(rows: &[QVec], target: &QVec) -> Option<QVec> {
    let n = rows.len();
    if n == 0 {
        return if is_zero_vec(target) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let dim = rows[0].len();
    // Augmented system over the transpose: columns are the unknowns.
    let mut aug: Vec<QVec> = (0..dim)
        .map(|c| {
            let mut row: QVec = rows.iter().map(|r| r[c].clone()).collect();
            row.push(target[c].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(&mut aug);
    let mut x = zeros(n);
    for (r, &p) in pivots.iter().enumerate() {
        if p == n {
            return None; // pivot in the augmented column
        }
        x[p] = red[r][n].clone();
    }
    // Verify (free variables set to zero).
    for c in 0..dim {
        let mut acc = Rat::zero();
        for (j, row) in rows.iter().enumerate() {
            acc += &x[j] * &row[c];
        }
        if acc != target[c] {
            return None;
        }
    }
    Some(x)
}

/// Is `v` in the rational span of `basis`?
pub fn span_contains(basis: &[QVec], v: &QVec) -> bool {
    solve_linear(basis, v).is_some()
}

/// Basis of the intersection of two spans.
pub fn intersect_spans(a: &[QVec], b: &[QVec]) -> Vec<QVec> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let dim = a[0].len();
    // x in span(a) iff x annihilated by kernel_basis(a); same for b.
    let ka = kernel_basis(a, dim).expect("consistent dims");
    let kb = kernel_basis(b, dim).expect("consistent dims");
    let mut constraints = ka;
    constraints.extend(kb);
    kernel_basis(&constraints, dim).expect("consistent dims")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::{from_i64, rat};

    fn v(x: &[i64]) -> QVec {
        from_i64(x)
    }

    #[test]
    fn rank_empty_is_zero() {
        assert_eq!(rank_of_span(&[]).unwrap(), 0);
    }

    #[test]
    fn rank_full_plane() {
        let vs = vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        assert_eq!(rank_of_span(&vs).unwrap(), 2);
    }

    // Binary quadratic forms: X*(G) = {(1,1)}, Levi part of Stab(U) empty,
    // Psi_{U'} = {(1,1)}; the joint span has rank 1 in the 2-dim ambient.
    #[test]
    fn rank_binary_quadratic_exceptional_span() {
        let vs = vec![v(&[1, 1]), v(&[1, 1])];
        assert_eq!(rank_of_span(&vs).unwrap(), 1);
    }

    #[test]
    fn rank_ragged_input_errors() {
        let vs = vec![v(&[1, 0]), v(&[1, 0, 0])];
        assert!(matches!(
            rank_of_span(&vs),
            Err(ExactlaError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_of_full_span_is_empty() {
        let vs = vec![v(&[1, 0]), v(&[0, 1])];
        assert!(kernel_basis(&vs, 2).unwrap().is_empty());
    }

    #[test]
    fn kernel_of_nothing_is_everything() {
        let basis = kernel_basis(&[], 2).unwrap();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn kernel_one_constraint() {
        let basis = kernel_basis(&[v(&[1, 1])], 2).unwrap();
        assert_eq!(basis.len(), 1);
        // proportional to (1,-1)
        let k = &basis[0];
        assert_eq!(&k[0] + &k[1], rat(0));
        assert!(!k[0].is_zero());
    }

    #[test]
    fn solve_and_span() {
        let rows = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let x = solve_linear(&rows, &v(&[1, 2, 1])).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        assert!(span_contains(&rows, &v(&[2, 3, 1])));
        assert!(!span_contains(&rows, &v(&[1, 0, 0])));
    }

    #[test]
    fn intersect_spans_plane_line() {
        let a = vec![v(&[1, 0, 0]), v(&[0, 1, 0])];
        let b = vec![v(&[1, 1, 0]), v(&[0, 0, 1])];
        let i = intersect_spans(&a, &b);
        assert_eq!(i.len(), 1);
        assert_eq!(i[0], v(&[1, 1, 0]));
    }
}
