//! Exact determinants.

use super::field::{Field, Ring};
use super::ArithError;

/// Determinant by fraction-free (Bareiss) elimination over a ring.
///
/// Every division is exact. A zero pivot is replaced by a lower row with a
/// nonzero entry in the pivot column; if none exists the determinant is zero.
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = if prev.is_one() { t } else { t.div_exact(&prev) };
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Exact determinant of a square matrix over a fraction field.
///
/// Each row is scaled by the lcm of its denominators so the elimination
/// runs fraction-free in the base ring; the scale factors are divided out
/// once at the end.
pub fn det_exact<F: Field>(m: &[Vec<F>]) -> Result<F, ArithError> {
    let n = m.len();
    if let Some(row) = m.iter().find(|row| row.len() != n) {
        return Err(ArithError::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    let mut scale = F::Base::one();
    let mut base_rows = Vec::with_capacity(n);
    for row in m {
        let lcm = row
            .iter()
            .filter(|e| !e.is_zero())
            .fold(F::Base::one(), |acc, e| F::base_lcm(&acc, &e.denom()));
        let base_row: Vec<F::Base> = row
            .iter()
            .map(|e| {
                if e.is_zero() {
                    F::Base::zero()
                } else {
                    e.numer().mul(&lcm.div_exact(&e.denom()))
                }
            })
            .collect();
        scale = scale.mul(&lcm);
        base_rows.push(base_row);
    }
    let det = bareiss_det(base_rows);
    Ok(F::from_base(&det).div(&F::from_base(&scale)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, RatFunc, Var};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        rat(n, 1)
    }

    #[test]
    fn identity_has_unit_determinant() {
        let m: Vec<Vec<BigRational>> = (0..5)
            .map(|i| (0..5).map(|j| q((i == j) as i64)).collect())
            .collect();
        assert_eq!(det_exact(&m).unwrap(), q(1));
    }

    #[test]
    fn two_by_two_symbolic() {
        let a = RatFunc::var(Var::X);
        let b = RatFunc::var(Var::Y);
        let c = RatFunc::from_int(3);
        let d = RatFunc::one().checked_div(&a).unwrap();
        let m = vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]];
        assert_eq!(det_exact(&m).unwrap(), &(&a * &d) - &(&b * &c));
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let m = vec![
            vec![q(0), q(1), q(2)],
            vec![q(1), q(0), q(3)],
            vec![q(4), q(-3), q(8)],
        ];
        // 0*(0+9) - 1*(8-12) + 2*(-3-0) = -2
        assert_eq!(det_exact(&m).unwrap(), q(-2));
    }

    #[test]
    fn singular_column() {
        let m = vec![vec![q(0), q(1)], vec![q(0), q(5)]];
        assert_eq!(det_exact(&m).unwrap(), q(0));
    }

    #[test]
    fn rational_entries() {
        let m = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]];
        assert_eq!(det_exact(&m).unwrap(), rat(1, 10) - rat(1, 12));
    }

    #[test]
    fn rejects_non_square() {
        let m = vec![vec![q(1), q(2)]];
        assert!(matches!(det_exact(&m), Err(ArithError::NotSquare { .. })));
    }
}
