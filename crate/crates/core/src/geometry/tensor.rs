//! Tensor fields on the chart with rational-function components.

use crate::exactmath::RatFunc;

use super::GeometryError;

/// Position of one tensor index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Upper,
    Lower,
}

/// A tensor field whose indices appear in the order given by `slots`.
///
/// Components are stored row-major over the slots: the multi-index
/// `(i_0, ..., i_{n-1})`, each `i_k ∈ {0, 1}`, lives at `Σ i_k 2^{n-1-k}`.
/// For example the curvature `R_ab^c_d` has slots `[Lower, Lower, Upper, Lower]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorField {
    slots: Vec<Slot>,
    components: Vec<RatFunc>,
}

impl TensorField {
    pub fn zeros(slots: &[Slot]) -> Self {
        TensorField {
            slots: slots.to_vec(),
            components: vec![RatFunc::zero(); 1 << slots.len()],
        }
    }

    pub fn from_components(slots: &[Slot], components: Vec<RatFunc>) -> Result<Self, GeometryError> {
        if components.len() != 1 << slots.len() {
            return Err(GeometryError::ComponentCount {
                expected: 1 << slots.len(),
                found: components.len(),
            });
        }
        Ok(TensorField {
            slots: slots.to_vec(),
            components,
        })
    }

    /// Builds a tensor by evaluating `f` at every multi-index.
    pub fn from_fn(slots: &[Slot], mut f: impl FnMut(&[usize]) -> RatFunc) -> Self {
        let n = slots.len();
        let components = (0..1usize << n).map(|flat| f(&unflatten(flat, n))).collect();
        TensorField {
            slots: slots.to_vec(),
            components,
        }
    }

    pub fn scalar(value: RatFunc) -> Self {
        TensorField {
            slots: Vec::new(),
            components: vec![value],
        }
    }

    pub fn covector(c: [RatFunc; 2]) -> Self {
        TensorField {
            slots: vec![Slot::Lower],
            components: c.to_vec(),
        }
    }

    pub fn vector(c: [RatFunc; 2]) -> Self {
        TensorField {
            slots: vec![Slot::Upper],
            components: c.to_vec(),
        }
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    /// `(contravariant, covariant)` index counts.
    pub fn valence(&self) -> (usize, usize) {
        let upper = self.slots.iter().filter(|s| **s == Slot::Upper).count();
        (upper, self.slots.len() - upper)
    }

    pub fn components(&self) -> &[RatFunc] {
        &self.components
    }

    pub fn get(&self, idx: &[usize]) -> &RatFunc {
        &self.components[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: RatFunc) {
        let k = self.flat_index(idx);
        self.components[k] = value;
    }

    fn flat_index(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.slots.len(), "index arity mismatch");
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < 2);
            (acc << 1) | i
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RatFunc::is_zero)
    }

    /// The two components of a rank-one tensor.
    pub fn pair(&self) -> [RatFunc; 2] {
        assert_eq!(self.rank(), 1, "pair() needs a rank-one tensor");
        [self.components[0].clone(), self.components[1].clone()]
    }

    /// The value of a rank-zero tensor.
    pub fn scalar_value(&self) -> &RatFunc {
        assert_eq!(self.rank(), 0, "scalar_value() needs a scalar");
        &self.components[0]
    }

    pub fn map(&self, f: impl FnMut(&RatFunc) -> RatFunc) -> Self {
        TensorField {
            slots: self.slots.clone(),
            components: self.components.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &TensorField) -> Result<Self, GeometryError> {
        self.require_slots(other.slots())?;
        Ok(TensorField {
            slots: self.slots.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub(crate) fn require_slots(&self, slots: &[Slot]) -> Result<(), GeometryError> {
        if self.slots != slots {
            return Err(GeometryError::ValenceMismatch {
                expected: format_slots(slots),
                found: format_slots(&self.slots),
            });
        }
        Ok(())
    }
}

pub(crate) fn unflatten(mut flat: usize, n: usize) -> Vec<usize> {
    let mut idx = vec![0; n];
    for k in (0..n).rev() {
        idx[k] = flat & 1;
        flat >>= 1;
    }
    idx
}

fn format_slots(slots: &[Slot]) -> String {
    if slots.is_empty() {
        return "scalar".to_string();
    }
    slots
        .iter()
        .map(|s| match s {
            Slot::Upper => "^",
            Slot::Lower => "_",
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_layout() {
        let t = TensorField::from_fn(&[Slot::Lower, Slot::Upper, Slot::Lower], |i| {
            RatFunc::from_int((i[0] * 100 + i[1] * 10 + i[2]) as i64)
        });
        assert_eq!(t.components().len(), 8);
        assert_eq!(t.get(&[1, 0, 1]), &RatFunc::from_int(101));
        assert_eq!(t.components()[5], RatFunc::from_int(101));
        assert_eq!(t.valence(), (1, 2));
    }

    #[test]
    fn component_count_checked() {
        let err = TensorField::from_components(&[Slot::Lower], vec![RatFunc::zero()]);
        assert!(err.is_err());
    }

    #[test]
    fn valence_mismatch_reported() {
        let a = TensorField::zeros(&[Slot::Lower]);
        let b = TensorField::zeros(&[Slot::Upper]);
        assert!(matches!(a.add(&b), Err(GeometryError::ValenceMismatch { .. })));
    }
}
