//! Torsion-free connections on the chart and projective changes.

use crate::exactmath::{rat, RatFunc, Variables};

use super::{GeometryError, Slot, TensorField};

/// Coefficients `Π^c_ab` of a torsion-free connection, stored as
/// `coeffs[c][a][b]` with zero-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartConnection {
    vars: Variables,
    coeffs: [[[RatFunc; 2]; 2]; 2],
}

impl ChartConnection {
    /// The flat connection, all coefficients zero.
    pub fn flat(vars: Variables) -> Self {
        ChartConnection {
            vars,
            coeffs: Default::default(),
        }
    }

    /// Builds a connection from `f(c, a, b) = Π^c_ab`, rejecting torsion.
    pub fn from_fn(
        vars: Variables,
        mut f: impl FnMut(usize, usize, usize) -> RatFunc,
    ) -> Result<Self, GeometryError> {
        let mut conn = ChartConnection::flat(vars);
        for c in 0..2 {
            for a in 0..2 {
                for b in 0..2 {
                    conn.coeffs[c][a][b] = f(c, a, b);
                }
            }
        }
        for c in 0..2 {
            if conn.coeffs[c][0][1] != conn.coeffs[c][1][0] {
                return Err(GeometryError::Torsion { upper: c + 1 });
            }
        }
        Ok(conn)
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    /// `Π^c_ab`, zero-based.
    pub fn get(&self, c: usize, a: usize, b: usize) -> &RatFunc {
        &self.coeffs[c][a][b]
    }

    /// Sets `Π^c_ab` and `Π^c_ba` together.
    pub fn set_symmetric(&mut self, c: usize, a: usize, b: usize, value: RatFunc) {
        self.coeffs[c][b][a] = value.clone();
        self.coeffs[c][a][b] = value;
    }

    pub fn is_flat(&self) -> bool {
        self.coeffs.iter().flatten().flatten().all(RatFunc::is_zero)
    }

    /// The trace `Π^d_ad` as a covector.
    pub fn trace(&self) -> TensorField {
        TensorField::covector([0, 1].map(|a| &self.coeffs[0][a][0] + &self.coeffs[1][a][1]))
    }

    /// Whether the trace vanishes, i.e. the volume form is parallel.
    pub fn is_normalized(&self) -> bool {
        self.trace().is_zero()
    }
}

/// Projective change by a one-form `Υ`:
/// `Π̂^c_ab = Π^c_ab + δ^c_a Υ_b + δ^c_b Υ_a`.
pub fn shift_connection(
    conn: &ChartConnection,
    upsilon: &TensorField,
) -> Result<ChartConnection, GeometryError> {
    upsilon.require_slots(&[Slot::Lower])?;
    let u = upsilon.pair();
    let mut out = conn.clone();
    for c in 0..2 {
        for a in 0..2 {
            for b in 0..2 {
                let mut v = conn.coeffs[c][a][b].clone();
                if c == a {
                    v = &v + &u[b];
                }
                if c == b {
                    v = &v + &u[a];
                }
                out.coeffs[c][a][b] = v;
            }
        }
    }
    Ok(out)
}

/// The representative of the projective class with trace-free coefficients,
/// obtained by shifting with `Υ_a = -Π^d_ad / 3`.
pub fn normalize_connection(conn: &ChartConnection) -> ChartConnection {
    if conn.is_normalized() {
        return conn.clone();
    }
    let third = rat(-1, 3);
    let upsilon = conn.trace().map(|t| t.scale(&third));
    shift_connection(conn, &upsilon).expect("trace is a covector")
}
