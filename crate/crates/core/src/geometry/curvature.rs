//! Curvature, Ricci, the projective rho tensor and the Cotton–York invariant.

use crate::exactmath::{rat, RatFunc, Var};

use super::{covariant_derivative, epsilon, raise, ChartConnection, GeometryError, Slot, TensorField};

const RIEMANN_SLOTS: [Slot; 4] = [Slot::Lower, Slot::Lower, Slot::Upper, Slot::Lower];
const BILINEAR: [Slot; 2] = [Slot::Lower, Slot::Lower];

/// `R_ab^c_d = ∂_a Π^c_bd − ∂_b Π^c_ad + Π^c_ae Π^e_bd − Π^c_be Π^e_ad`,
/// so that `(∇_a∇_b − ∇_b∇_a)V^c = R_ab^c_d V^d`.
pub fn curvature(conn: &ChartConnection) -> TensorField {
    TensorField::from_fn(&RIEMANN_SLOTS, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        if a == b {
            return RatFunc::zero();
        }
        let mut r = &conn.get(c, b, d).diff(Var::from_index(a))
            - &conn.get(c, a, d).diff(Var::from_index(b));
        for e in 0..2 {
            r = &r + &(conn.get(c, a, e) * conn.get(e, b, d));
            r = &r - &(conn.get(c, b, e) * conn.get(e, a, d));
        }
        r
    })
}

/// `R_ab = R_ca^c_b`.
pub fn ricci(riemann: &TensorField) -> Result<TensorField, GeometryError> {
    riemann.require_slots(&RIEMANN_SLOTS)?;
    Ok(TensorField::from_fn(&BILINEAR, |i| {
        let (a, b) = (i[0], i[1]);
        riemann.get(&[0, a, 0, b]) + riemann.get(&[1, a, 1, b])
    }))
}

/// `P_ab = (2/3) R_ab + (1/3) R_ba`, without the symmetry check.
pub fn rho_tensor_unchecked(ricci: &TensorField) -> Result<TensorField, GeometryError> {
    ricci.require_slots(&BILINEAR)?;
    let (two, one) = (rat(2, 3), rat(1, 3));
    Ok(TensorField::from_fn(&BILINEAR, |i| {
        let (a, b) = (i[0], i[1]);
        &ricci.get(&[a, b]).scale(&two) + &ricci.get(&[b, a]).scale(&one)
    }))
}

/// The projective rho tensor. It is symmetric whenever the connection
/// preserves the volume form; an asymmetric result is reported as an error.
pub fn rho_tensor(ricci: &TensorField) -> Result<TensorField, GeometryError> {
    let p = rho_tensor_unchecked(ricci)?;
    if p.get(&[0, 1]) != p.get(&[1, 0]) {
        return Err(GeometryError::AsymmetricRho);
    }
    Ok(p)
}

/// `Y_abc = ∇_a P_bc − ∇_b P_ac`.
pub fn cotton_york_tensor(
    p: &TensorField,
    conn: &ChartConnection,
) -> Result<TensorField, GeometryError> {
    p.require_slots(&BILINEAR)?;
    let dp = covariant_derivative(p, conn);
    Ok(TensorField::from_fn(&[Slot::Lower; 3], |i| {
        let (a, b, c) = (i[0], i[1], i[2]);
        dp.get(&[a, b, c]) - dp.get(&[b, a, c])
    }))
}

/// The Cotton–York covector `Y_a = ε^bc Y_bca` and its raised form `Y^a`.
pub fn cotton_york(
    p: &TensorField,
    conn: &ChartConnection,
) -> Result<(TensorField, TensorField), GeometryError> {
    let y3 = cotton_york_tensor(p, conn)?;
    let lower = TensorField::from_fn(&[Slot::Lower], |i| {
        let a = i[0];
        let mut acc = RatFunc::zero();
        for b in 0..2 {
            for c in 0..2 {
                match epsilon(b, c) {
                    1 => acc = &acc + y3.get(&[b, c, a]),
                    -1 => acc = &acc - y3.get(&[b, c, a]),
                    _ => {}
                }
            }
        }
        acc
    });
    let upper = raise(&lower);
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Variables;
    use crate::exprparse::parse_expr;
    use crate::geometry::normalize_connection;

    fn conn_from(entries: &[((usize, usize, usize), &str)]) -> ChartConnection {
        let mut c = ChartConnection::flat(Variables::default());
        for &((u, a, b), s) in entries {
            c.set_symmetric(u, a, b, parse_expr(s).unwrap());
        }
        c
    }

    fn first_example() -> ChartConnection {
        conn_from(&[((0, 1, 1), "x*y"), ((1, 0, 0), "-y")])
    }

    #[test]
    fn flat_has_no_curvature() {
        let flat = ChartConnection::flat(Variables::default());
        let r = curvature(&flat);
        assert!(r.is_zero());
        assert!(ricci(&r).unwrap().is_zero());
        assert!(rho_tensor(&ricci(&r).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn curvature_is_antisymmetric() {
        let c = conn_from(&[
            ((0, 0, 0), "x^2"),
            ((0, 0, 1), "y - 1"),
            ((1, 1, 1), "x*y"),
            ((1, 0, 0), "3"),
        ]);
        let r = curvature(&c);
        for i in 0..16 {
            let idx = crate::geometry::tensor::unflatten(i, 4);
            let swapped = [idx[1], idx[0], idx[2], idx[3]];
            assert_eq!(r.get(&idx), &-r.get(&swapped));
        }
    }

    #[test]
    fn rho_is_identity_on_symmetric() {
        let s = TensorField::from_fn(&BILINEAR, |i| {
            RatFunc::from_int((i[0] + i[1]) as i64 + 1)
        });
        assert_eq!(rho_tensor(&s).unwrap(), s);
    }

    #[test]
    fn asymmetric_rho_is_reported() {
        let s = TensorField::from_fn(&BILINEAR, |i| RatFunc::from_int(i[0] as i64));
        assert_eq!(rho_tensor(&s), Err(GeometryError::AsymmetricRho));
    }

    #[test]
    fn ricci_checks_valence() {
        let v = TensorField::vector([RatFunc::one(), RatFunc::zero()]);
        assert!(matches!(ricci(&v), Err(GeometryError::ValenceMismatch { .. })));
    }

    #[test]
    fn cotton_york_reconstructs_full_tensor() {
        let c = normalize_connection(&first_example());
        let p = rho_tensor(&ricci(&curvature(&c)).unwrap()).unwrap();
        let y3 = cotton_york_tensor(&p, &c).unwrap();
        let (y, _) = cotton_york(&p, &c).unwrap();
        let half = rat(1, 2);
        for a in 0..2 {
            for b in 0..2 {
                for cc in 0..2 {
                    let rebuilt = y.get(&[cc]).scale(&half).scale(&rat(epsilon(a, b), 1));
                    assert_eq!(y3.get(&[a, b, cc]), &rebuilt);
                }
            }
        }
    }

    #[test]
    fn first_example_rho_is_symmetric() {
        let c = first_example();
        assert!(c.is_normalized());
        let ric = ricci(&curvature(&c)).unwrap();
        assert!(rho_tensor(&ric).is_ok());
    }
}
