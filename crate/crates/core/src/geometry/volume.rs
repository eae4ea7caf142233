//! The fixed volume form on the chart.
//!
//! `ε_12 = +1` in the given variable order, and `ε^ab` has the same
//! components, so that `ε^ab ε_ab = 2` and `ε^ac ε_bc = δ^a_b`. Indices are
//! raised with `V^a = ε^ab V_b` and lowered with `V_b = V^a ε_ab`.

use crate::exactmath::RatFunc;

use super::{Slot, TensorField};

/// Components of `ε_ab` (and of `ε^ab`), indices zero-based.
pub fn epsilon(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// `V^a = ε^ab V_b`.
pub fn raise(covector: &TensorField) -> TensorField {
    assert_eq!(covector.slots(), [Slot::Lower], "raise() needs a covector");
    let [v1, v2] = covector.pair();
    // ε^12 V_2, ε^21 V_1
    TensorField::vector([v2, -v1])
}

/// `V_b = V^a ε_ab`.
pub fn lower(vector: &TensorField) -> TensorField {
    assert_eq!(vector.slots(), [Slot::Upper], "lower() needs a vector");
    let [v1, v2] = vector.pair();
    // V_1 = V^2 ε_21, V_2 = V^1 ε_12
    TensorField::covector([-v2, v1])
}

/// Contraction `U_a V^a` of a covector with a vector.
pub fn pairing(covector: &TensorField, vector: &TensorField) -> RatFunc {
    let [a1, a2] = covector.pair();
    let [b1, b2] = vector.pair();
    &(&a1 * &b1) + &(&a2 * &b2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contraction_identities() {
        let full: i64 = (0..2)
            .flat_map(|a| (0..2).map(move |b| epsilon(a, b) * epsilon(a, b)))
            .sum();
        assert_eq!(full, 2);
        for a in 0..2 {
            for b in 0..2 {
                let s: i64 = (0..2).map(|c| epsilon(a, c) * epsilon(b, c)).sum();
                assert_eq!(s, (a == b) as i64);
            }
        }
    }

    #[test]
    fn raise_matches_definition() {
        let v = TensorField::covector([RatFunc::from_int(3), RatFunc::from_int(5)]);
        let up = raise(&v);
        for a in 0..2 {
            let expect: i64 = (0..2).map(|b| epsilon(a, b) * [3, 5][b]).sum();
            assert_eq!(up.get(&[a]), &RatFunc::from_int(expect));
        }
        assert_eq!(lower(&up), v);
    }
}
