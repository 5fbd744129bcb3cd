//! Binary cubic discriminants.

use crate::ops::{det, Mat};
use exactla::vector::{rat, Rat};

/// Discriminant of a x^3 + b x^2 y + c x y^2 + d y^3:
/// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2.
pub fn binary_cubic_disc(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Rat {
    rat(18) * a * b * c * d - rat(4) * b * b * b * d + b * b * c * c
        - rat(4) * a * c * c * c
        - rat(27) * a * a * d * d
}

/// Coefficients (c0..c3) of the binary cubic t -> det(x A + y B) as a
/// polynomial c0 x^3 + c1 x^2 y + c2 x y^2 + c3 y^3, for 3x3 matrices, by
/// column multilinearity of the determinant.
pub fn det_pencil_cubic(a: &Mat, b: &Mat) -> [Rat; 4] {
    let col = |m: &Mat, j: usize| -> Vec<Rat> { (0..3).map(|i| m[i][j].clone()).collect() };
    let det_cols = |c0: &Vec<Rat>, c1: &Vec<Rat>, c2: &Vec<Rat>| -> Rat {
        let m: Mat = (0..3).map(|i| vec![c0[i].clone(), c1[i].clone(), c2[i].clone()]).collect();
        det(&m)
    };
    let (a0, a1, a2) = (col(a, 0), col(a, 1), col(a, 2));
    let (b0, b1, b2) = (col(b, 0), col(b, 1), col(b, 2));
    let c0 = det_cols(&a0, &a1, &a2);
    let c1 = det_cols(&b0, &a1, &a2) + det_cols(&a0, &b1, &a2) + det_cols(&a0, &a1, &b2);
    let c2 = det_cols(&a0, &b1, &b2) + det_cols(&b0, &a1, &b2) + det_cols(&b0, &b1, &a2);
    let c3 = det_cols(&b0, &b1, &b2);
    [c0, c1, c2, c3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    // Diagonal pencil giving the cubic x^3 + y^3: disc = -27.
    #[test]
    fn diag_cubic_disc() {
        let one = rat(1);
        let zero = Rat::zero();
        assert_eq!(
            binary_cubic_disc(&one, &zero, &zero, &one),
            rat(-27)
        );
    }

    // First matrix zero: the cubic is y^3 det B, whose discriminant
    // vanishes identically.
    #[test]
    fn degenerate_pencil_disc_vanishes() {
        let a: Mat = (0..3).map(|_| vec![Rat::zero(); 3]).collect();
        let b: Mat = (0..3)
            .map(|i| (0..3).map(|j| rat((i * 3 + j + 1) as i64)).collect())
            .collect();
        let [c0, c1, c2, c3] = det_pencil_cubic(&a, &b);
        assert!(c0.is_zero() && c1.is_zero() && c2.is_zero());
        assert_eq!(binary_cubic_disc(&c0, &c1, &c2, &c3), Rat::zero());
    }

    #[test]
    fn pencil_matches_direct_expansion() {
        let a: Mat = vec![
            vec![rat(1), rat(2), rat(0)],
            vec![rat(0), rat(1), rat(3)],
            vec![rat(4), rat(0), rat(1)],
        ];
        let b: Mat = vec![
            vec![rat(0), rat(1), rat(1)],
            vec![rat(2), rat(0), rat(1)],
            vec![rat(1), rat(1), rat(0)],
        ];
        let coeffs = det_pencil_cubic(&a, &b);
        // evaluate at a few (x, y) points and compare with det(xA + yB)
        for (x, y) in [(1i64, 1i64), (2, -1), (3, 5), (-2, 7)] {
            let m: Mat = (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| rat(x) * &a[i][j] + rat(y) * &b[i][j])
                        .collect()
                })
                .collect();
            let lhs = det(&m);
            let rx = rat(x);
            let ry = rat(y);
            let rhs = &coeffs[0] * &rx * &rx * &rx
                + &coeffs[1] * &rx * &rx * &ry
                + &coeffs[2] * &rx * &ry * &ry
                + &coeffs[3] * &ry * &ry * &ry;
            assert_eq!(lhs, rhs);
        }
    }
}
