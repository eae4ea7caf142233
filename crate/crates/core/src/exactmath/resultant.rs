//! Sylvester matrices and resultants of univariate polynomials.

use super::field::{Field, Ring};
use super::matrix::det_exact;
use super::unipoly::UniPoly;
use super::ArithError;

/// The `(deg p + deg q)`-square Sylvester matrix: `deg q` shifted rows of
/// `p`'s coefficients (leading first) followed by `deg p` shifted rows of `q`.
pub fn sylvester_matrix<F: Ring>(p: &UniPoly<F>, q: &UniPoly<F>) -> Result<Vec<Vec<F>>, ArithError> {
    let (dp, dq) = match (p.degree(), q.degree()) {
        (Some(dp), Some(dq)) => (dp, dq),
        _ => return Err(ArithError::ZeroPolynomial),
    };
    let n = dp + dq;
    let mut rows = Vec::with_capacity(n);
    for (poly, count) in [(p, dq), (q, dp)] {
        let coeffs = poly.descending();
        for shift in 0..count {
            let mut row = vec![F::zero(); n];
            for (j, c) in coeffs.iter().enumerate() {
                row[shift + j] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Resultant as the determinant of [`sylvester_matrix`].
pub fn sylvester_resultant<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> Result<F, ArithError> {
    let m = sylvester_matrix(p, q)?;
    det_exact(&m)
}
