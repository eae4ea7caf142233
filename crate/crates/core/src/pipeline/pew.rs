use crate::exactmath::{rat, RatFunc};
use crate::geometry::{
    covariant_derivative, curvature, pairing, ricci, rho_tensor_unchecked, ChartConnection, Slot,
    TensorField,
};

use super::{InvariantBundle, PipelineError};

/// `α_a = ((φ/2 + 3F²) W_a − (15F⁴ − ℓ) Y_a) / (3ρ)`.
pub fn reconstruct_alpha(b: &InvariantBundle, f: &RatFunc) -> Result<TensorField, PipelineError> {
    if b.rho.is_zero() {
        return Err(PipelineError::RhoVanishes);
    }
    let inv = b.rho.scale(&rat(3, 1)).recip()?;
    let f2 = f.pow(2);
    let cw = &(&b.phi.scale(&rat(1, 2)) + &f2.scale(&rat(3, 1))) * &inv;
    let cy = &(&f2.pow(2).scale(&rat(15, 1)) - &b.ell) * &inv;
    Ok(TensorField::from_fn(&[Slot::Lower], |i| {
        &(&cw * b.w_lower.get(i)) - &(&cy * b.y_lower.get(i))
    }))
}

/// `∇_(a α_b) + α_a α_b + P_(ab)` for the connection exactly as given.
pub fn pew_residual(
    conn: &ChartConnection,
    alpha: &TensorField,
) -> Result<TensorField, PipelineError> {
    alpha.require_slots(&[Slot::Lower])?;
    let p = rho_tensor_unchecked(&ricci(&curvature(conn))?)?;
    let d = covariant_derivative(alpha, conn);
    let half = rat(1, 2);
    Ok(TensorField::from_fn(&[Slot::Lower, Slot::Lower], |i| {
        let (a, b) = (i[0], i[1]);
        let sym_d = (d.get(&[a, b]) + d.get(&[b, a])).scale(&half);
        let sym_p = (p.get(&[a, b]) + p.get(&[b, a])).scale(&half);
        &(&sym_d + &(alpha.get(&[a]) * alpha.get(&[b]))) + &sym_p
    }))
}

/// `α_a Y^a` and `α_a W^a`.
pub fn alpha_constraints(b: &InvariantBundle, alpha: &TensorField) -> (RatFunc, RatFunc) {
    (pairing(alpha, &b.y_upper), pairing(alpha, &b.w_upper))
}
