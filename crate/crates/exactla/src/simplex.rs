//! Exact two-phase simplex with Bland's rule.
//!
//! Small dense LPs only: cone membership certificates and positive
//! envelopes. Bland's rule guarantees termination; exact rationals make
//! every feasibility answer a certificate.

use crate::vector::{is_zero_vec, QVec, Rat};
use crate::ExactlaError;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, point: Vec<Rat> },
}

struct Tableau {
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].recip();
        for x in self.a[row].iter_mut() {
            *x *= &inv;
        }
        self.b[row] *= &inv;
        for r in 0..self.a.len() {
            if r != row && !self.a[r][col].is_zero() {
                let f = self.a[r][col].clone();
                for c in 0..self.ncols {
                    let t = &self.a[row][c] * &f;
                    self.a[r][c] -= t;
                }
                let t = &self.b[row] * &f;
                self.b[r] -= t;
            }
        }
        self.basis[row] = col;
    }

    /// Minimizes c.x from the current basic feasible solution.
    /// `allowed` masks columns the pivoting may enter.
    fn run(&mut self, cost: &[Rat], allowed: &[bool]) -> bool {
        loop {
            // reduced costs z_j = c_j - c_B . A_j ; Bland: smallest j with z_j < 0
            let mut entering = None;
            'cols: for j in 0..self.ncols {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut z = cost[j].clone();
                for (r, &bv) in self.basis.iter().enumerate() {
                    if !cost[bv].is_zero() && !self.a[r][j].is_zero() {
                        z -= &cost[bv] * &self.a[r][j];
                    }
                }
                if z.is_negative() {
                    entering = Some(j);
                    break 'cols;
                }
            }
            let Some(j) = entering else {
                return true; // optimal
            };
            // ratio test, ties broken by smallest basis variable index (Bland)
            let mut leaving: Option<(usize, Rat)> = None;
            for r in 0..self.a.len() {
                if self.a[r][j].is_positive() {
                    let ratio = &self.b[r] / &self.a[r][j];
                    let better = match &leaving {
                        None => true,
                        Some((lr, lv)) => {
                            ratio < *lv || (ratio == *lv && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leaving = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leaving else {
                return false; // unbounded
            };
            self.pivot(r, j);
        }
    }

    fn point(&self, nvars: usize) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); nvars];
        for (r, &bv) in self.basis.iter().enumerate() {
            if bv < nvars {
                x[bv] = self.b[r].clone();
            }
        }
        x
    }
}

/// Minimizes cost.x subject to sum_j x_j cols_j = rhs, x >= 0.
/// `cols` are the constraint-matrix columns.
pub fn solve_min(cols: &[QVec], rhs: &QVec, cost: &[Rat]) -> LpOutcome {
    let m = rhs.len();
    let n = cols.len();
    // rows of A from columns, with b >= 0
    let mut a: Vec<Vec<Rat>> = (0..m)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut b = rhs.clone();
    for r in 0..m {
        if b[r].is_negative() {
            b[r] = -b[r].clone();
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    // artificial variables
    let ncols = n + m;
    for (r, row) in a.iter_mut().enumerate() {
        for k in 0..m {
            row.push(if k == r { Rat::one() } else { Rat::zero() });
        }
    }
    let mut t = Tableau {
        a,
        b,
        basis: (n..ncols).collect(),
        ncols,
    };
    let mut phase1_cost = vec![Rat::zero(); ncols];
    for c in phase1_cost.iter_mut().skip(n) {
        *c = Rat::one();
    }
    let allowed = vec![true; ncols];
    let finished = t.run(&phase1_cost, &allowed);
    debug_assert!(finished, "phase 1 objective is bounded below by zero");
    let infeas: Rat = t
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &bv)| bv >= n)
        .map(|(r, _)| t.b[r].clone())
        .sum();
    if !infeas.is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive remaining artificials out of the basis; drop redundant rows
    let mut r = 0;
    while r < t.a.len() {
        if t.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| !t.a[r][j].is_zero()) {
                t.pivot(r, j);
            } else {
                t.a.remove(r);
                t.b.remove(r);
                t.basis.remove(r);
                continue;
            }
        }
        r += 1;
    }
    // phase 2 on the original variables only
    let mut phase2_cost = cost.to_vec();
    phase2_cost.resize(ncols, Rat::zero());
    let mut allowed = vec![true; ncols];
    for a in allowed.iter_mut().skip(n) {
        *a = false;
    }
    if !t.run(&phase2_cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let point = t.point(n);
    let value = point
        .iter()
        .zip(cost)
        .map(|(x, c)| x * c)
        .sum();
    LpOutcome::Optimal { value, point }
}

/// Decides target in cone(generators) by exact LP feasibility; returns the
/// nonnegative coefficient witness when membership holds.
pub fn cone_membership(target: &QVec, generators: &[QVec]) -> Result<Option<Vec<Rat>>, ExactlaError> {
    let dim = target.len();
    crate::check_dims(generators, dim)?;
    if generators.is_empty() {
        return Ok(if is_zero_vec(target) {
            Some(Vec::new())
        } else {
            None
        });
    }
    let cost = vec![Rat::zero(); generators.len()];
    match solve_min(generators, target, &cost) {
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Optimal { point, .. } => {
            debug_assert!(reproduces(target, generators, &point));
            Ok(Some(point))
        }
        LpOutcome::Unbounded => unreachable!("feasibility LP has zero objective"),
    }
}

fn reproduces(target: &QVec, generators: &[QVec], x: &[Rat]) -> bool {
    let mut acc = crate::vector::zeros(target.len());
    for (xi, g) in x.iter().zip(generators) {
        for (a, gi) in acc.iter_mut().zip(g) {
            *a += xi * gi;
        }
    }
    acc == *target
}

/// Maximum of x_idx over {x >= 0 : sum x_j gen_j = target, x_idx <= cap}.
/// None if the system is infeasible.
pub fn max_coordinate(
    generators: &[QVec],
    target: &QVec,
    idx: usize,
    cap: &Rat,
) -> Result<Option<Rat>, ExactlaError> {
    let dim = target.len();
    crate::check_dims(generators, dim)?;
    let n = generators.len();
    // extra row x_idx + slack = cap
    let mut cols: Vec<QVec> = Vec::with_capacity(n + 1);
    for (j, g) in generators.iter().enumerate() {
        let mut col = g.clone();
        col.push(if j == idx { Rat::one() } else { Rat::zero() });
        cols.push(col);
    }
    let mut slack = crate::vector::zeros(dim);
    slack.push(Rat::one());
    cols.push(slack);
    let mut rhs = target.clone();
    rhs.push(cap.clone());
    let mut cost = vec![Rat::zero(); n + 1];
    cost[idx] = -Rat::one();
    match solve_min(&cols, &rhs, &cost) {
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Optimal { value, .. } => Ok(Some(-value)),
        LpOutcome::Unbounded => unreachable!("coordinate is capped"),
    }
}

/// The unique maximal-support index set of a nonnegative representation of
/// `target` in terms of `generators` (the positive envelope). One bounded
/// exact LP per generator index, short-circuited by witnesses already seen.
pub fn positive_envelope(
    target: &QVec,
    generators: &[QVec],
) -> Result<Vec<usize>, ExactlaError> {
    let witness = cone_membership(target, generators)?.ok_or(ExactlaError::NotInCone)?;
    let n = generators.len();
    let mut positive = vec![false; n];
    let record = |x: &[Rat], positive: &mut Vec<bool>| {
        for (j, v) in x.iter().enumerate() {
            if v.is_positive() {
                positive[j] = true;
            }
        }
    };
    record(&witness, &mut positive);
    let one = Rat::one();
    for i in 0..n {
        if positive[i] {
            continue;
        }
        // sup of x_i over the feasible set is positive iff the capped max is
        let mut cols: Vec<QVec> = Vec::with_capacity(n + 1);
        for (j, g) in generators.iter().enumerate() {
            let mut col = g.clone();
            col.push(if j == i { Rat::one() } else { Rat::zero() });
            cols.push(col);
        }
        let mut slack = crate::vector::zeros(target.len());
        slack.push(Rat::one());
        cols.push(slack);
        let mut rhs = target.clone();
        rhs.push(one.clone());
        let mut cost = vec![Rat::zero(); n + 1];
        cost[i] = -Rat::one();
        match solve_min(&cols, &rhs, &cost) {
            LpOutcome::Optimal { value, point } => {
                if (-&value).is_positive() {
                    record(&point[..n], &mut positive);
                    positive[i] = true;
                }
            }
            _ => unreachable!("membership already established and capped"),
        }
    }
    Ok((0..n).filter(|&i| positive[i]).collect())
}
