use serde::Serialize;


use crate::exactmath::{rat, ArithError, BigRational, Point, RatFunc};
use crate::geometry::{covariant_derivative, divergence, TensorField};

use super::{InvariantBundle, PipelineError};

pub const COEFF_NAMES: [&str; 9] = ["a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"];

/// The nine coefficients of the obstruction polynomials when `ρ ≢ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericCoeffs<C> {
    pub a1: C,
    pub a2: C,
    pub a3: C,
    pub b1: C,
    pub b2: C,
    pub b3: C,
    pub c1: C,
    pub c2: C,
    pub c3: C,
}

impl<C> GenericCoeffs<C> {
    /// In the order of [`COEFF_NAMES`].
    pub fn to_array(&self) -> [&C; 9] {
        [
            &self.a1, &self.a2, &self.a3, &self.b1, &self.b2, &self.b3, &self.c1, &self.c2, &self.c3,
        ]
    }

    pub fn from_array(v: [C; 9]) -> Self {
        let [a1, a2, a3, b1, b2, b3, c1, c2, c3] = v;
        GenericCoeffs {
            a1,
            a2,
            a3,
            b1,
            b2,
            b3,
            c1,
            c2,
            c3,
        }
    }

    pub fn try_map<D, E>(&self, mut f: impl FnMut(&C) -> Result<D, E>) -> Result<GenericCoeffs<D>, E> {
        let a = self.to_array();
        Ok(GenericCoeffs::from_array([
            f(a[0])?,
            f(a[1])?,
            f(a[2])?,
            f(a[3])?,
            f(a[4])?,
            f(a[5])?,
            f(a[6])?,
            f(a[7])?,
            f(a[8])?,
        ]))
    }
}

impl GenericCoeffs<RatFunc> {
    pub fn evaluate(&self, point: &Point) -> Result<GenericCoeffs<BigRational>, ArithError> {
        self.try_map(|c| c.eval(point))
    }
}

/// `Σ U^e V^d T_ed` for a rank-two covariant `T`.
fn contract(t: &TensorField, u: &TensorField, v: &TensorField) -> RatFunc {
    let mut acc = RatFunc::zero();
    for e in 0..2 {
        for d in 0..2 {
            let term = &(t.get(&[e, d]) * u.get(&[e])) * v.get(&[d]);
            acc = &acc + &term;
        }
    }
    acc
}

/// `Σ U^e V^d T_de`, the same contraction with the slots of `T` swapped.
fn contract_swapped(t: &TensorField, u: &TensorField, v: &TensorField) -> RatFunc {
    let mut acc = RatFunc::zero();
    for e in 0..2 {
        for d in 0..2 {
            let term = &(t.get(&[d, e]) * u.get(&[e])) * v.get(&[d]);
            acc = &acc + &term;
        }
    }
    acc
}

fn q(n: i64, d: i64) -> BigRational {
    rat(n, d)
}

/// Computes `a1 … c3` from the invariants. Fails when `ρ ≡ 0`.
pub fn generic_coeffs(b: &InvariantBundle) -> Result<GenericCoeffs<RatFunc>, PipelineError> {
    if b.rho.is_zero() {
        return Err(PipelineError::RhoVanishes);
    }
    let conn = &b.conn;
    let (y, w) = (&b.y_upper, &b.w_upper);
    let (phi, ell, rho) = (&b.phi, &b.ell, &b.rho);
    let inv_rho = rho.recip()?;

    let y_rho = &b.along_y(rho) * &inv_rho;
    let w_rho = &b.along_w(rho) * &inv_rho;
    let w_phi = b.along_w(phi);
    let y_ell = b.along_y(ell);
    let w_ell = b.along_w(ell);
    let div_w = divergence(w, conn);
    let phi_ell = phi * ell;

    // ∇_e W_d and ∇_e Y_d, derivative index first.
    let dw = covariant_derivative(&b.w_lower, conn);
    let dy = covariant_derivative(&b.y_lower, conn);

    let w_y_dw = &contract(&dw, w, y) * &inv_rho; // W^e Y^d ∇_e W_d / ρ
    let w_w_dw = &contract(&dw, w, w) * &inv_rho; // W^e W^a ∇_e W_a / ρ
    let w_w_dy = &contract(&dy, w, w) * &inv_rho; // W^e W^d ∇_e Y_d / ρ
    let w_y_dy = &contract(&dy, w, y) * &inv_rho; // W^e Y^a ∇_e Y_a / ρ
    let y_w_dw_sw = &contract_swapped(&dw, w, y) * &inv_rho; // W^e Y^a ∇_a W_e / ρ
    let y_y_dw_sw = &contract_swapped(&dw, y, y) * &inv_rho; // Y^b Y^a ∇_a W_b / ρ
    let p_ww = contract(&b.p, w, w);
    let p_wy = contract(&b.p, w, y);

    let a1 = (&y_rho - &phi.scale(&q(5, 2))).scale(&q(15, 1));
    let a2 = -(&(&w_rho.scale(&q(3, 1)) + &ell.scale(&q(6, 1))) - &div_w.scale(&q(3, 1)));
    let a3 = sum(&[
        w_phi.scale(&q(1, 2)),
        (&div_w * phi).scale(&q(1, 2)),
        y_ell.clone(),
        phi_ell.scale(&q(1, 2)),
        -(&w_rho * phi).scale(&q(1, 2)),
        -(&y_rho * ell),
    ]);

    let b1 = &w_y_dw.scale(&q(-5, 1)) + &ell.scale(&q(50, 3));
    let b2 = w_w_dw.clone();
    let b3 = sum(&[
        (&w_w_dw * phi).scale(&q(1, 6)),
        p_ww,
        ell.pow(2).scale(&q(1, 9)),
        (&w_y_dw * ell).scale(&q(1, 3)),
        w_ell.scale(&q(1, 3)),
    ]);

    // Y^a W^e ∇_e Y_a = w_y_dy, Y^a Y^e ∇_a W_e = y_y_dw_sw
    let c1 = &(&w_y_dy + &y_y_dw_sw).scale(&q(-5, 2)) - &phi.scale(&q(25, 6));
    // W^e W^d ∇_e Y_d = w_w_dy, W^e Y^d ∇_d W_e = y_w_dw_sw
    let c2 = &ell.scale(&q(2, 3)) + &(&w_w_dy + &y_w_dw_sw).scale(&q(1, 2));
    let c3 = sum(&[
        w_phi.scale(&q(-1, 12)),
        (&w_w_dy * phi).scale(&q(1, 12)),
        (&w_y_dy * ell).scale(&q(1, 6)),
        p_wy,
        y_ell.scale(&q(1, 6)),
        (&y_w_dw_sw * phi).scale(&q(1, 12)),
        phi_ell.scale(&q(-1, 18)),
        (&y_y_dw_sw * ell).scale(&q(1, 6)),
    ]);

    Ok(GenericCoeffs {
        a1,
        a2,
        a3,
        b1,
        b2,
        b3,
        c1,
        c2,
        c3,
    })
}

fn sum(terms: &[RatFunc]) -> RatFunc {
    terms.iter().fold(RatFunc::zero(), |acc, t| &acc + t)
}
