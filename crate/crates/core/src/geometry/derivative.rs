use crate::exactmath::{RatFunc, Var};

use super::{ChartConnection, Slot, TensorField};

/// Covariant derivative `∇_a T`, with the new covariant index first.
///
/// Each upper index `b` contributes `+Π^b_ae T^{..e..}` and each lower index
/// `b` contributes `-Π^e_ab T_{..e..}`. No density weights are carried.
pub fn covariant_derivative(t: &TensorField, conn: &ChartConnection) -> TensorField {
    let mut slots = Vec::with_capacity(t.rank() + 1);
    slots.push(Slot::Lower);
    slots.extend_from_slice(t.slots());
    TensorField::from_fn(&slots, |idx| {
        let a = idx[0];
        let inner = &idx[1..];
        let mut acc = t.get(inner).diff(Var::from_index(a));
        let mut probe = inner.to_vec();
        for (k, slot) in t.slots().iter().enumerate() {
            let b = inner[k];
            for e in 0..2 {
                probe[k] = e;
                let term = match slot {
                    Slot::Upper => conn.get(b, a, e) * t.get(&probe),
                    Slot::Lower => -(conn.get(e, a, b) * t.get(&probe)),
                };
                if !term.is_zero() {
                    acc = &acc + &term;
                }
            }
            probe[k] = b;
        }
        acc
    })
}

/// The directional derivative `V^a ∇_a f` of a scalar.
pub fn directional(vector: &TensorField, f: &RatFunc) -> RatFunc {
    let [v1, v2] = vector.pair();
    &(&v1 * &f.diff(Var::X)) + &(&v2 * &f.diff(Var::Y))
}

/// Divergence `∇_a V^a`.
pub fn divergence(vector: &TensorField, conn: &ChartConnection) -> RatFunc {
    let d = covariant_derivative(vector, conn);
    d.get(&[0, 0]) + d.get(&[1, 1])
}
