//! Seeded random generation of exact rational test data.  Every consumer
//! threads a [`ChaCha8Rng`] created by [`rng`], so identical seeds yield
//! identical vectors, functions and sets everywhere.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topical_core::{ExtendedScalar, FinGenTopicalFn, FiniteSet, FnHandle, Rational, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A bounded exact rational; small denominators keep arithmetic fast while
/// still leaving the integers.
pub fn rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer = rng.gen_range(-60i64..=60);
    let denom = rng.gen_range(1i64..=12);
    Rational::new(numer.into(), denom.into())
}

pub fn finite(rng: &mut ChaCha8Rng) -> ExtendedScalar {
    ExtendedScalar::Finite(rational(rng))
}

/// A base-semifield scalar, occasionally ε.
pub fn base_scalar(rng: &mut ChaCha8Rng) -> ExtendedScalar {
    if rng.gen_range(0u8..5) == 0 {
        ExtendedScalar::Eps
    } else {
        finite(rng)
    }
}

/// A random vector; pass `allow_bottom` to let the all-ε vector through.
pub fn vector(rng: &mut ChaCha8Rng, dim: usize, allow_bottom: bool) -> Vector {
    loop {
        let coords: Vec<ExtendedScalar> = (0..dim).map(|_| base_scalar(rng)).collect();
        let v = Vector::new(coords).expect("generated coordinates are base scalars");
        if allow_bottom || !v.is_bottom() {
            return v;
        }
    }
}

/// A finitely generated topical function: 1..=max_gens generators anchored
/// away from the bottom vector, coefficients finite with an occasional ⊤.
pub fn fingen(rng: &mut ChaCha8Rng, dim: usize, max_gens: usize) -> FnHandle {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<(Vector, ExtendedScalar)> = (0..count)
        .map(|_| {
            let y = vector(rng, dim, false);
            let c = if rng.gen_range(0u8..12) == 0 { ExtendedScalar::Top } else { finite(rng) };
            (y, c)
        })
        .collect();
    FnHandle::FinGen(FinGenTopicalFn::new(dim, gens).expect("generated data is well-formed"))
}

/// Like [`fingen`] but with finite coefficients only, giving K-valued
/// functions away from the bottom vector.
pub fn fingen_finite(rng: &mut ChaCha8Rng, dim: usize, max_gens: usize) -> FnHandle {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<(Vector, ExtendedScalar)> =
        (0..count).map(|_| (vector(rng, dim, false), finite(rng))).collect();
    FnHandle::FinGen(FinGenTopicalFn::new(dim, gens).expect("generated data is well-formed"))
}

/// A nonempty finite point set with 1..=max_pts distinct-ish points.
pub fn finite_set(rng: &mut ChaCha8Rng, dim: usize, max_pts: usize) -> FiniteSet {
    let count = rng.gen_range(1..=max_pts);
    let pts: Vec<Vector> = (0..count).map(|_| vector(rng, dim, false)).collect();
    FiniteSet::new(dim, pts).expect("generated points share the dimension")
}
