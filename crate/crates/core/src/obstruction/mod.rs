//! Obstruction polynomials, their even reductions, and the resultant
//! determinants that must vanish wherever a local solution exists.

use serde::Serialize;

use crate::exactmath::{det_exact, rat, ArithError, Field, Ring, UniPoly};
use crate::pipeline::{GenericCoeffs, SpecialBranch};

/// `P1, P2, P3` in the unknown `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PTriple<C: Ring> {
    pub p1: UniPoly<C>,
    pub p2: UniPoly<C>,
    pub p3: UniPoly<C>,
}

/// `Q1, Q2, Q3` in `X = t²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QTriple<C: Ring> {
    pub q1: UniPoly<C>,
    pub q2: UniPoly<C>,
    pub q3: UniPoly<C>,
}

/// Values of the three determinants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultantTriple<C> {
    pub q12: C,
    pub q23: C,
    pub q13: C,
}

impl<C: Ring> ResultantTriple<C> {
    pub fn all_zero(&self) -> bool {
        self.q12.is_zero() && self.q23.is_zero() && self.q13.is_zero()
    }

    pub fn to_array(&self) -> [&C; 3] {
        [&self.q12, &self.q23, &self.q13]
    }
}

pub const RESULTANT_NAMES: [&str; 3] = ["Q12", "Q23", "Q13"];

fn k<C: Field>(n: i64, d: i64) -> C {
    C::from_rational(&rat(n, d))
}

pub fn p_polynomials<C: Field>(c: &GenericCoeffs<C>, rho: &C) -> PTriple<C> {
    let z = C::zero;
    PTriple {
        p1: UniPoly::from_coeffs(vec![
            c.a3.clone(),
            rho.mul(&k(-9, 1)),
            c.a2.clone(),
            z(),
            c.a1.clone(),
            z(),
            k(-90, 1),
        ]),
        p2: UniPoly::from_coeffs(vec![
            c.b3.clone(),
            z(),
            c.b2.clone(),
            rho.mul(&k(20, 1)),
            c.b1.clone(),
            z(),
            z(),
            z(),
            k(-275, 1),
        ]),
        p3: UniPoly::from_coeffs(vec![
            c.c3.clone(),
            rho.clone(),
            c.c2.clone(),
            z(),
            c.c1.clone(),
            z(),
            k(-40, 1),
        ]),
    }
}

/// Coefficient lists of `Q1, Q2, Q3`, leading coefficient first.
fn q_rows<C: Field>(c: &GenericCoeffs<C>) -> ([C; 5], [C; 4], [C; 5]) {
    let twenty = k::<C>(20, 1);
    let nine = k::<C>(9, 1);
    let twenty_ninths = k::<C>(20, 9);
    let q1 = [
        k(525, 1),
        c.c1.mul(&twenty).neg(),
        c.b1.sub(&c.c2.mul(&twenty)),
        c.b2.sub(&c.c3.mul(&twenty)),
        c.b3.clone(),
    ];
    let q2 = [
        k(450, 1),
        c.c1.mul(&nine).add(&c.a1).neg(),
        c.c2.mul(&nine).add(&c.a2).neg(),
        c.c3.mul(&nine).add(&c.a3).neg(),
    ];
    let q3 = [
        k(475, 1),
        c.a1.mul(&twenty_ninths).neg(),
        c.a2.mul(&twenty_ninths).add(&c.b1).neg(),
        c.a3.mul(&twenty_ninths).add(&c.b2).neg(),
        c.b3.neg(),
    ];
    (q1, q2, q3)
}

/// The quartic, cubic and quartic in `X` read off from the coefficients.
pub fn q_polynomials<C: Field>(c: &GenericCoeffs<C>) -> QTriple<C> {
    let (q1, q2, q3) = q_rows(c);
    QTriple {
        q1: UniPoly::from_descending(q1.to_vec()),
        q2: UniPoly::from_descending(q2.to_vec()),
        q3: UniPoly::from_descending(q3.to_vec()),
    }
}

impl<C: Field> QTriple<C> {
    /// Eliminates the odd powers of `t`:
    /// `Q1(t²) = P2 − 20t²P3`, `Q2(t²) = −9P3 − P1`, `Q3(t²) = −(20/9)t²P1 − P2`.
    /// Returns `None` if an odd power survives.
    pub fn from_p(p: &PTriple<C>) -> Option<Self> {
        let q1 = p.p2.sub(&p.p3.shift(2).scale(&k(20, 1)));
        let q2 = p.p3.scale(&k(-9, 1)).sub(&p.p1);
        let q3 = p.p1.shift(2).scale(&k(-20, 9)).sub(&p.p2);
        Some(QTriple {
            q1: q1.even_part_in_square()?,
            q2: q2.even_part_in_square()?,
            q3: q3.even_part_in_square()?,
        })
    }
}

/// Stacks `count` copies of `row`, each shifted one column right.
fn band<C: Ring>(out: &mut Vec<Vec<C>>, row: &[C], count: usize, width: usize) {
    for s in 0..count {
        let mut r = vec![C::zero(); width];
        r[s..s + row.len()].clone_from_slice(row);
        out.push(r);
    }
}

/// 7×7: three rows of `Q1`, then four rows of `Q2`.
pub fn q12_matrix<C: Field>(c: &GenericCoeffs<C>) -> Vec<Vec<C>> {
    let (q1, q2, _) = q_rows(c);
    let mut m = Vec::with_capacity(7);
    band(&mut m, &q1, 3, 7);
    band(&mut m, &q2, 4, 7);
    m
}

/// 7×7: four rows of `Q2`, then three rows of `Q3`.
pub fn q23_matrix<C: Field>(c: &GenericCoeffs<C>) -> Vec<Vec<C>> {
    let (_, q2, q3) = q_rows(c);
    let mut m = Vec::with_capacity(7);
    band(&mut m, &q2, 4, 7);
    band(&mut m, &q3, 3, 7);
    m
}

/// 8×8: four rows of `Q1`, then four rows of `Q3`.
pub fn q13_matrix<C: Field>(c: &GenericCoeffs<C>) -> Vec<Vec<C>> {
    let (q1, _, q3) = q_rows(c);
    let mut m = Vec::with_capacity(8);
    band(&mut m, &q1, 4, 8);
    band(&mut m, &q3, 4, 8);
    m
}

/// Determinants of the three banded matrices.
pub fn q_resultants<C: Field>(c: &GenericCoeffs<C>) -> Result<ResultantTriple<C>, ArithError> {
    Ok(ResultantTriple {
        q12: det_exact(&q12_matrix(c))?,
        q23: det_exact(&q23_matrix(c))?,
        q13: det_exact(&q13_matrix(c))?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    /// `Y ≡ 0`: the unknown `F` must vanish.
    Flat,
    /// Some obstruction is nonzero, so no local solution exists there.
    Obstructed,
    /// Every obstruction vanishes; nothing is concluded.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub message: String,
}

pub fn flat_verdict() -> Verdict {
    Verdict {
        kind: VerdictKind::Flat,
        message: "projectively flat; F = 0 forced and the equation reduces to the projective \
                  Ricci-flat equation, which is not analysed here"
            .into(),
    }
}

/// Verdict from determinant values. `at_point` selects the wording.
pub fn generic_verdict<C: Ring>(r: &ResultantTriple<C>, at_point: bool) -> Verdict {
    if r.all_zero() {
        return inconclusive();
    }
    let message = if at_point {
        "no local pEW solution: a determinant is nonzero at the point, so no solution exists near it"
    } else {
        "no local pEW solution: a determinant is not identically zero, so no solution exists near \
         any point where it is nonzero"
    };
    Verdict {
        kind: VerdictKind::Obstructed,
        message: message.into(),
    }
}

pub fn special_verdict(s: &SpecialBranch) -> Verdict {
    if s.obstruction.is_zero() {
        return inconclusive();
    }
    Verdict {
        kind: VerdictKind::Obstructed,
        message: "no local pEW solution: the obstruction is not identically zero, so no solution \
                  exists near any point where it is nonzero"
            .into(),
    }
}

fn inconclusive() -> Verdict {
    Verdict {
        kind: VerdictKind::Inconclusive,
        message: "inconclusive: all obstructions vanish, which is necessary but not sufficient \
                  for a solution"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{sylvester_matrix, BigRational};

    fn zeros() -> GenericCoeffs<BigRational> {
        GenericCoeffs::from_array(std::array::from_fn(|_| rat(0, 1)))
    }

    fn sample() -> GenericCoeffs<BigRational> {
        GenericCoeffs::from_array([
            rat(23220, 41),
            rat(-66076, 41),
            rat(-16864, 41),
            rat(573920, 123),
            rat(-75232, 1107),
            rat(808576, 41),
            rat(3870, 41),
            rat(15670, 123),
            rat(1316800, 1107),
        ])
    }

    #[test]
    fn leading_terms_only() {
        let p = p_polynomials(&zeros(), &rat(0, 1));
        assert_eq!(p.p1, UniPoly::monomial(rat(-90, 1), 6));
        assert_eq!(p.p2, UniPoly::monomial(rat(-275, 1), 8));
        assert_eq!(p.p3, UniPoly::monomial(rat(-40, 1), 6));
        let q = q_polynomials(&zeros());
        assert_eq!(q.q1, UniPoly::monomial(rat(525, 1), 4));
        assert_eq!(q.q2, UniPoly::monomial(rat(450, 1), 3));
        assert_eq!(q.q3, UniPoly::monomial(rat(475, 1), 4));
        let r = q_resultants(&zeros()).unwrap();
        assert!(r.all_zero());
    }

    #[test]
    fn second_coefficient_of_q2() {
        let q = q_polynomials(&sample());
        assert_eq!(q.q2.coeff(2), rat(-58050, 41));
    }

    #[test]
    fn elimination_matches_reading() {
        let c = sample();
        let p = p_polynomials(&c, &rat(328, 1));
        assert_eq!(QTriple::from_p(&p).unwrap(), q_polynomials(&c));
    }

    #[test]
    fn printed_layout_is_sylvester() {
        let c = sample();
        let q = q_polynomials(&c);
        assert_eq!(q12_matrix(&c), sylvester_matrix(&q.q1, &q.q2).unwrap());
        assert_eq!(q23_matrix(&c), sylvester_matrix(&q.q2, &q.q3).unwrap());
        assert_eq!(q13_matrix(&c), sylvester_matrix(&q.q1, &q.q3).unwrap());
    }

    #[test]
    fn first_example_determinants() {
        let r = q_resultants(&sample()).unwrap();
        let big = |s: &str| crate::exactmath::parse_rational(s).unwrap();
        assert_eq!(r.q12, big("-1457890459574161592339200000/1681"));
        assert_eq!(r.q23, big("1457890459574161592339200000/1681"));
        assert_eq!(r.q13, big("-188610437798501965389961756672000000000/452190681"));
        assert_eq!(generic_verdict(&r, true).kind, VerdictKind::Obstructed);
    }
}
