//! Projective invariants of a connection and the coefficients of the
//! obstruction polynomials.

mod generic;
mod pew;
mod special;

use thiserror::Error;

use crate::exactmath::{rat, ArithError, RatFunc};
use crate::geometry::{
    cotton_york, covariant_derivative, curvature, directional, divergence, lower, normalize_connection,
    pairing, ricci, rho_tensor, ChartConnection, GeometryError, Slot, TensorField,
};

pub use generic::{generic_coeffs, GenericCoeffs, COEFF_NAMES};
pub use pew::{alpha_constraints, pew_residual, reconstruct_alpha};
pub use special::{special_branch, SpecialBranch};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("rho vanishes identically; the generic formulas do not apply")]
    RhoVanishes,
    #[error("the Cotton-York vector vanishes; the structure is projectively flat")]
    Flat,
    #[error("W is not proportional to Y although rho vanishes")]
    NotProportional,
}

/// Which set of obstructions applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `Y ≡ 0`.
    Flat,
    /// `ρ ≢ 0`; results hold away from the zero set of `ρ`.
    Generic,
    /// `Y ≢ 0` and `ρ ≡ 0`.
    Special,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Flat => "flat",
            Branch::Generic => "generic",
            Branch::Special => "special",
        }
    }
}

/// Invariants of the volume-preserving representative of a projective class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle {
    /// The normalized connection all fields were computed from.
    pub conn: ChartConnection,
    pub p: TensorField,
    pub y_lower: TensorField,
    pub y_upper: TensorField,
    pub phi: RatFunc,
    pub w_upper: TensorField,
    pub w_lower: TensorField,
    pub rho: RatFunc,
    pub ell: RatFunc,
}

/// Normalizes `conn` and computes `P`, `Y`, `φ`, `W`, `ρ` and `ℓ`.
pub fn invariant_bundle(conn: &ChartConnection) -> Result<InvariantBundle, PipelineError> {
    let conn = normalize_connection(conn);
    let p = rho_tensor(&ricci(&curvature(&conn))?)?;
    let (y_lower, y_upper) = cotton_york(&p, &conn)?;

    let phi = divergence(&y_upper, &conn).scale(&rat(2, 1));

    // W^a = Y^b ∇_b Y^a - (2φ/3) Y^a
    let dy = covariant_derivative(&y_upper, &conn);
    let two_thirds_phi = phi.scale(&rat(2, 3));
    let [y1, y2] = y_upper.pair();
    let w_upper = TensorField::from_fn(&[Slot::Upper], |i| {
        let a = i[0];
        let transport = &(&y1 * dy.get(&[0, a])) + &(&y2 * dy.get(&[1, a]));
        &transport - &(&two_thirds_phi * y_upper.get(&[a]))
    });
    let w_lower = lower(&w_upper);
    let rho = pairing(&y_lower, &w_upper);

    // ℓ = 5φ²/12 + 3 P_ac Y^a Y^c - Y^a ∂_a φ / 2
    let mut pyy = RatFunc::zero();
    for a in 0..2 {
        for c in 0..2 {
            pyy = &pyy + &(&(p.get(&[a, c]) * y_upper.get(&[a])) * y_upper.get(&[c]));
        }
    }
    let ell = &(&phi.pow(2).scale(&rat(5, 12)) + &pyy.scale(&rat(3, 1)))
        - &directional(&y_upper, &phi).scale(&rat(1, 2));

    Ok(InvariantBundle {
        conn,
        p,
        y_lower,
        y_upper,
        phi,
        w_upper,
        w_lower,
        rho,
        ell,
    })
}

impl InvariantBundle {
    pub fn branch(&self) -> Branch {
        branch(self)
    }

    /// `V^a ∂_a f` along `Y`.
    pub(crate) fn along_y(&self, f: &RatFunc) -> RatFunc {
        directional(&self.y_upper, f)
    }

    /// `V^a ∂_a f` along `W`.
    pub(crate) fn along_w(&self, f: &RatFunc) -> RatFunc {
        directional(&self.w_upper, f)
    }
}

/// Flat when `Y ≡ 0`, special when `ρ ≡ 0`, generic otherwise.
pub fn branch(bundle: &InvariantBundle) -> Branch {
    if bundle.y_lower.is_zero() {
        Branch::Flat
    } else if bundle.rho.is_zero() {
        Branch::Special
    } else {
        Branch::Generic
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{BigRational, Variables};
    use crate::exprparse::{parse_expr, parse_structure};

    fn first() -> ChartConnection {
        parse_structure(r#"{"connection": {"1_22": "x*y", "2_11": "-y"}}"#).unwrap()
    }

    fn second() -> ChartConnection {
        parse_structure(r#"{"connection": {"1_11": "-x^2/6", "1_22": "-x^2/2", "2_21": "x^2/6"}}"#)
            .unwrap()
    }

    fn at11() -> (BigRational, BigRational) {
        (rat(1, 1), rat(1, 1))
    }

    #[test]
    fn flat_bundle_vanishes() {
        let b = invariant_bundle(&ChartConnection::flat(Variables::default())).unwrap();
        assert!(b.p.is_zero() && b.y_lower.is_zero() && b.w_upper.is_zero());
        assert!(b.phi.is_zero() && b.rho.is_zero() && b.ell.is_zero());
        assert_eq!(b.branch(), Branch::Flat);
    }

    #[test]
    fn first_example_invariants() {
        let b = invariant_bundle(&first()).unwrap();
        assert_eq!(b.branch(), Branch::Generic);
        assert_eq!(b.rho.eval(&at11()).unwrap(), rat(328, 1));
        assert_eq!(b.phi.eval(&at11()).unwrap(), rat(-28, 1));
        assert_eq!(b.ell.eval(&at11()).unwrap(), rat(1064, 3));
        let expected = parse_expr("8*x*y^4*(27*x^2 + 8*y^3 + 6)").unwrap();
        assert_eq!(b.rho, expected);
    }

    #[test]
    fn first_example_coefficients() {
        let b = invariant_bundle(&first()).unwrap();
        let c = generic_coeffs(&b).unwrap().evaluate(&at11()).unwrap();
        let expected = [
            rat(23220, 41),
            rat(-66076, 41),
            rat(-16864, 41),
            rat(573920, 123),
            rat(-75232, 1107),
            rat(808576, 41),
            rat(3870, 41),
            rat(15670, 123),
            rat(1316800, 1107),
        ];
        for (name, (got, want)) in COEFF_NAMES.iter().zip(c.to_array().into_iter().zip(&expected)) {
            assert_eq!(got, want, "{name}");
        }
    }

    #[test]
    fn second_example_is_special() {
        let b = invariant_bundle(&second()).unwrap();
        assert!(b.rho.is_zero());
        assert_eq!(b.branch(), Branch::Special);
        assert_eq!(generic_coeffs(&b), Err(PipelineError::RhoVanishes));
        let s = special_branch(&b).unwrap();
        assert_eq!(s.f, parse_expr("-x^2*(x^3+5)/3").unwrap());
        assert_eq!(s.k, parse_expr("-38*x^10/5 - 54*x^7 + 360*x^4 + 220*x").unwrap());
        assert_eq!(s.h, &b.ell + &(&s.f * &b.phi).scale(&rat(1, 2)));
        let fy: Vec<RatFunc> = b.y_upper.pair().iter().map(|c| &s.f * c).collect();
        assert_eq!(fy, b.w_upper.pair().to_vec());
        assert_eq!(s.quartic().degree(), Some(4));
        assert_eq!(s.quadratic().coeff(2), s.k);
    }

    #[test]
    fn special_rejects_flat() {
        let b = invariant_bundle(&ChartConnection::flat(Variables::default())).unwrap();
        assert_eq!(special_branch(&b), Err(PipelineError::Flat));
    }

    #[test]
    fn alpha_needs_nonzero_rho() {
        let b = invariant_bundle(&ChartConnection::flat(Variables::default())).unwrap();
        assert_eq!(reconstruct_alpha(&b, &RatFunc::one()), Err(PipelineError::RhoVanishes));
    }

    #[test]
    fn alpha_at_zero_candidate() {
        let b = invariant_bundle(&first()).unwrap();
        let alpha = reconstruct_alpha(&b, &RatFunc::zero()).unwrap();
        let rho_inv = b.rho.recip().unwrap();
        for a in 0..2 {
            let want = &(&(&b.phi * b.w_lower.get(&[a])).scale(&rat(1, 6))
                + &(&b.ell * b.y_lower.get(&[a])).scale(&rat(1, 3)))
                * &rho_inv;
            assert_eq!(alpha.get(&[a]), &want);
        }
    }

    #[test]
    fn alpha_satisfies_constraints_on_first_example() {
        let b = invariant_bundle(&first()).unwrap();
        let f = parse_expr("x - 2*y").unwrap();
        let alpha = reconstruct_alpha(&b, &f).unwrap();
        let (ay, aw) = alpha_constraints(&b, &alpha);
        assert_eq!(ay, -(&f.pow(2) + &b.phi.scale(&rat(1, 6))));
        assert_eq!(aw, &f.pow(4).scale(&rat(-5, 1)) + &b.ell.scale(&rat(1, 3)));
    }

    #[test]
    fn flat_residuals() {
        let flat = ChartConnection::flat(Variables::default());
        let alpha = |a: &str, b: &str| {
            TensorField::covector([parse_expr(a).unwrap(), parse_expr(b).unwrap()])
        };
        assert!(pew_residual(&flat, &alpha("0", "0")).unwrap().is_zero());
        let r = pew_residual(&flat, &alpha("1", "0")).unwrap();
        assert_eq!(r.components(), &[RatFunc::one(), RatFunc::zero(), RatFunc::zero(), RatFunc::zero()]);
        let r = pew_residual(&flat, &alpha("y", "0")).unwrap();
        let half = RatFunc::constant(rat(1, 2));
        assert_eq!(
            r.components(),
            &[parse_expr("y^2").unwrap(), half.clone(), half, RatFunc::zero()]
        );
    }
}
