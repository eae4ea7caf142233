use crate::exactmath::{rat, RatFunc, UniPoly};

use super::{InvariantBundle, PipelineError};

/// Quantities of the `ρ ≡ 0` branch, where `W^a = f Y^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialBranch {
    pub f: RatFunc,
    pub h: RatFunc,
    pub k: RatFunc,
    pub m: RatFunc,
    pub obstruction: RatFunc,
}

impl SpecialBranch {
    /// `15F⁴ − 3fF² − h` in the unknown `F`.
    pub fn quartic(&self) -> UniPoly<RatFunc> {
        UniPoly::from_coeffs(vec![
            -self.h.clone(),
            RatFunc::zero(),
            self.f.scale(&rat(-3, 1)),
            RatFunc::zero(),
            RatFunc::from_int(15),
        ])
    }

    /// `kF² + m` in the unknown `F`.
    pub fn quadratic(&self) -> UniPoly<RatFunc> {
        UniPoly::from_coeffs(vec![self.m.clone(), RatFunc::zero(), self.k.clone()])
    }
}

pub fn special_branch(b: &InvariantBundle) -> Result<SpecialBranch, PipelineError> {
    let [y1, y2] = b.y_upper.pair();
    let [w1, w2] = b.w_upper.pair();
    let f = if !y1.is_zero() {
        w1.checked_div(&y1)?
    } else if !y2.is_zero() {
        w2.checked_div(&y2)?
    } else {
        return Err(PipelineError::Flat);
    };
    if &y1 * &w2 != &y2 * &w1 {
        return Err(PipelineError::NotProportional);
    }
    let phi = &b.phi;

    let h = &b.ell + &(&f * phi).scale(&rat(1, 2));
    let k = &(&(&(phi * &f).scale(&rat(3, 1)) - &b.along_y(&f).scale(&rat(3, 1)))
        + &h.scale(&rat(12, 1)))
        + &f.pow(2).scale(&rat(18, 5));
    let m = &(&(&h * &f).scale(&rat(6, 5)) - &b.along_y(&h)) + &(phi * &h).scale(&rat(2, 1));

    let inner = &(&b.along_y(&k) + &(&k * phi)) - &m.scale(&rat(6, 1));
    let obstruction = &(&k * &b.along_y(&m)) - &(&m * &inner);

    Ok(SpecialBranch {
        f,
        h,
        k,
        m,
        obstruction,
    })
}
