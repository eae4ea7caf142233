//! Greatest common divisors in ℚ[x, y].
//!
//! Polynomials are viewed as univariate in `x` over ℚ[y]. The content (a gcd
//! in ℚ[y]) is split off and the primitive parts are reduced with a primitive
//! pseudo-remainder sequence.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::mpoly::{MPoly, Monomial, Var};
use super::unipoly::UniPoly;

type QY = UniPoly<BigRational>;

/// Coefficients in ℚ[y] of ascending powers of `x`; trailing zeros trimmed.
type Rec = Vec<QY>;

/// Greatest common divisor, normalized to graded-lex leading coefficient one.
/// `gcd(0, 0) = 0`; `gcd(p, 0)` is `p` made monic; constants give `1`.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    if a.num_terms() == 1 {
        return monomial_gcd(a, b);
    }
    if b.num_terms() == 1 {
        return monomial_gcd(b, a);
    }
    if a == b {
        return a.monic();
    }

    let ra = to_rec(a);
    let rb = to_rec(b);
    if free_of(a, b, Var::X) {
        if free_of(a, b, Var::Y) {
            return MPoly::one();
        }
        return from_rec(&[content(&ra).gcd(&content(&rb))]).monic();
    }
    let ca = content(&ra);
    let cb = content(&rb);
    let content_gcd = ca.gcd(&cb);

    let mut pa = primitive_part_with(&ra, &ca);
    let mut pb = primitive_part_with(&rb, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let prim_gcd = primitive_prs(pa, pb);

    let mut g = from_rec(&prim_gcd);
    if !content_gcd.is_zero() && content_gcd.degree() != Some(0) {
        g = &g * &from_rec(&[content_gcd]);
    }
    g.monic()
}

/// Least common multiple, normalized like [`mpoly_gcd`].
pub fn mpoly_lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero();
    }
    let g = mpoly_gcd(a, b);
    let prod = a * b;
    prod.div_exact(&g)
        .expect("gcd divides the product")
        .monic()
}

/// Univariate image of `p` in `var` after substituting `value` for the other
/// variable.
fn specialize(p: &MPoly, var: Var, value: &BigRational) -> UniPoly<BigRational> {
    let deg = p.degree_in(var).unwrap_or(0) as usize;
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for (m, c) in p.terms() {
        let (i, j) = match var {
            Var::X => (m.x, m.y),
            Var::Y => (m.y, m.x),
        };
        coeffs[i as usize] += c * value.pow(j as i32);
    }
    UniPoly::from_coeffs(coeffs)
}

/// Sufficient test that `gcd(a, b)` does not involve `var`.
///
/// If substituting for the other variable keeps the degree of `a` in `var`,
/// the image of the gcd keeps its degree too and divides the gcd of the
/// images. A constant image gcd therefore settles the question; otherwise
/// the answer is "unknown" and `false` is returned.
fn free_of(a: &MPoly, b: &MPoly, var: Var) -> bool {
    let deg_a = a.degree_in(var).unwrap_or(0) as usize;
    let deg_b = b.degree_in(var).unwrap_or(0) as usize;
    if deg_a == 0 || deg_b == 0 {
        return true;
    }
    for v in 1..=6i64 {
        let value = BigRational::from_integer(v.into());
        let pa = specialize(a, var, &value);
        if pa.degree() != Some(deg_a) {
            continue;
        }
        let pb = specialize(b, var, &value);
        if pb.is_zero() {
            continue;
        }
        return pa.gcd(&pb).degree() == Some(0);
    }
    false
}

fn monomial_gcd(mono: &MPoly, other: &MPoly) -> MPoly {
    let (m, _) = mono.leading_term().expect("nonzero monomial");
    let (mut ex, mut ey) = (m.x, m.y);
    for (n, _) in other.terms() {
        ex = ex.min(n.x);
        ey = ey.min(n.y);
    }
    MPoly::term(BigRational::one(), Monomial::new(ex, ey))
}

fn to_rec(p: &MPoly) -> Rec {
    let dx = p.degree_in(Var::X).unwrap_or(0) as usize;
    let mut dense: Vec<Vec<BigRational>> = vec![Vec::new(); dx + 1];
    for (m, c) in p.terms() {
        let row = &mut dense[m.x as usize];
        let j = m.y as usize;
        if row.len() <= j {
            row.resize(j + 1, BigRational::zero());
        }
        row[j] = c.clone();
    }
    trim(dense.into_iter().map(UniPoly::from_coeffs).collect())
}

fn from_rec(r: &[QY]) -> MPoly {
    MPoly::from_terms(r.iter().enumerate().flat_map(|(i, q)| {
        q.coeffs()
            .iter()
            .enumerate()
            .map(move |(j, c)| (c.clone(), i as u32, j as u32))
    }))
}

fn trim(mut r: Rec) -> Rec {
    while r.last().is_some_and(|q| q.is_zero()) {
        r.pop();
    }
    r
}

fn content(r: &[QY]) -> QY {
    let mut g = QY::zero();
    for q in r {
        if q.is_zero() {
            continue;
        }
        g = g.gcd(q);
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

/// Divides out the ℚ[y]-content and fixes the rational scale so that the
/// leading ℚ-coefficient of the leading x-coefficient is one.
fn primitive_part_with(r: &[QY], cont: &QY) -> Rec {
    if r.is_empty() {
        return Vec::new();
    }
    let divided: Rec = if cont.degree() == Some(0) {
        r.to_vec()
    } else {
        r.iter().map(|q| q.div_exact(cont)).collect()
    };
    let lead = divided
        .last()
        .and_then(|q| q.leading())
        .cloned()
        .expect("nonzero leading coefficient");
    if lead.is_one() {
        return divided;
    }
    let inv = lead.recip();
    divided.iter().map(|q| q.scale(&inv)).collect()
}

fn primitive_part(r: &[QY]) -> Rec {
    let c = content(r);
    primitive_part_with(r, &c)
}

fn mul_qy(r: &[QY], c: &QY) -> Rec {
    r.iter().map(|q| q.mul(c)).collect()
}

/// Pseudo-remainder of `a` by `b` in ℚ[y][x].
fn pseudo_rem(a: &[QY], b: &[QY]) -> Rec {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut rem: Rec = a.to_vec();
    while rem.len() > db {
        let da = rem.len() - 1;
        let la = rem[da].clone();
        let mut next = mul_qy(&rem, lc);
        for (j, bj) in b.iter().enumerate() {
            let idx = da - db + j;
            next[idx] = next[idx].sub(&bj.mul(&la));
        }
        rem = trim(next);
    }
    rem
}

/// Gcd of two primitive polynomials with `deg_x a >= deg_x b`.
fn primitive_prs(mut a: Rec, mut b: Rec) -> Rec {
    loop {
        if b.is_empty() {
            return a;
        }
        if b.len() == 1 {
            // b is a primitive element of ℚ[y], i.e. a unit.
            return vec![QY::constant(BigRational::one())];
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive_part(&r) };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, Var};

    fn x() -> MPoly {
        MPoly::var(Var::X)
    }
    fn y() -> MPoly {
        MPoly::var(Var::Y)
    }
    fn c(n: i64) -> MPoly {
        MPoly::from_int(n)
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let a = &x().pow(2) - &y().pow(2);
        let b = &x() - &y();
        assert_eq!(mpoly_gcd(&a, &b), &x() - &y());
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = &x().scale(&rat(3, 1)) + &c(6);
        assert_eq!(mpoly_gcd(&p, &MPoly::zero()), &x() + &c(2));
        assert_eq!(mpoly_gcd(&MPoly::zero(), &p), &x() + &c(2));
    }

    #[test]
    fn gcd_of_constants_is_one() {
        assert_eq!(mpoly_gcd(&c(3), &c(6)), MPoly::one());
    }

    #[test]
    fn gcd_with_y_content() {
        // (y+1)(x+y) and (y+1)(x-2)*y
        let a = &(&y() + &c(1)) * &(&x() + &y());
        let b = &(&(&y() + &c(1)) * &(&x() - &c(2))) * &y();
        assert_eq!(mpoly_gcd(&a, &b), &y() + &c(1));
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let g = &(&(&x() * &y()) + &x().pow(2)) - &c(3);
        let a = &g * &(&y().pow(3) + &x());
        let b = &g * &(&(&x() * &y()) - &c(7));
        assert_eq!(mpoly_gcd(&a, &b), g.monic());
    }

    #[test]
    fn monomial_shortcut() {
        let a = &x().pow(3) * &y();
        let b = &(&x().pow(2) * &y().pow(2)) + &x().pow(5);
        assert_eq!(mpoly_gcd(&a, &b), x().pow(2));
    }

    #[test]
    fn lcm() {
        let a = &x() - &y();
        let b = &x() + &y();
        assert_eq!(mpoly_lcm(&a, &b), &x().pow(2) - &y().pow(2));
        assert_eq!(mpoly_lcm(&a, &a.scale(&rat(2, 1))), a);
    }
}
