#![allow(dead_code)]

use projew_core::exactmath::{rat, BigRational, MPoly, RatFunc, Variables};
use projew_core::geometry::{normalize_connection, ChartConnection, TensorField};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat(rng: &mut ChaCha8Rng) -> BigRational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    rat(num, den)
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let q = small_rat(rng);
        if q != rat(0, 1) {
            return q;
        }
    }
}

/// Up to `max_terms` terms of total degree at most `max_deg`.
pub fn mpoly(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> MPoly {
    let n = rng.gen_range(0..=max_terms);
    MPoly::from_terms((0..n).map(|_| {
        let dx = rng.gen_range(0..=max_deg);
        let dy = rng.gen_range(0..=max_deg - dx);
        (small_rat(rng), dx, dy)
    }))
}

pub fn ratfunc(rng: &mut ChaCha8Rng, max_deg: u32) -> RatFunc {
    let num = mpoly(rng, max_deg, 3);
    let den = loop {
        let d = &mpoly(rng, 1, 2) + &MPoly::from_int(rng.gen_range(1..=3));
        if !d.is_zero() {
            break d;
        }
    };
    RatFunc::new(num, den).unwrap()
}

/// A torsion-free connection with polynomial entries.
pub fn connection(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> ChartConnection {
    let mut c = ChartConnection::flat(Variables::default());
    for u in 0..2 {
        for (a, b) in [(0, 0), (0, 1), (1, 1)] {
            c.set_symmetric(u, a, b, RatFunc::from_poly(mpoly(rng, max_deg, max_terms)));
        }
    }
    c
}

/// A connection preserving the volume form.
pub fn normalized_connection(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> ChartConnection {
    normalize_connection(&connection(rng, max_deg, max_terms))
}

pub fn covector(rng: &mut ChaCha8Rng, max_deg: u32) -> TensorField {
    TensorField::covector([
        RatFunc::from_poly(mpoly(rng, max_deg, 3)),
        RatFunc::from_poly(mpoly(rng, max_deg, 3)),
    ])
}

/// All eight coefficients, `[c][a][b]` flattened.
pub fn entries(c: &ChartConnection) -> Vec<RatFunc> {
    let mut v = Vec::new();
    for u in 0..2 {
        for a in 0..2 {
            for b in 0..2 {
                v.push(c.get(u, a, b).clone());
            }
        }
    }
    v
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return rat(1, 1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = rat(0, 1);
    for j in 0..n {
        if m[0][j] == rat(0, 1) {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
