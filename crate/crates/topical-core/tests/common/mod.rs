//! Seeded generators shared by the integration suites.
#![allow(dead_code)] // each suite uses a different subset

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topical_core::{ExtendedScalar, FinGenTopicalFn, FnHandle, Rational, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer = rng.gen_range(-40i64..=40);
    let denom = rng.gen_range(1i64..=12);
    Rational::new(numer.into(), denom.into())
}

pub fn finite(rng: &mut ChaCha8Rng) -> ExtendedScalar {
    ExtendedScalar::Finite(rational(rng))
}

/// Any carrier value, biased toward finite ones.
pub fn scalar(rng: &mut ChaCha8Rng) -> ExtendedScalar {
    match rng.gen_range(0u8..8) {
        0 => ExtendedScalar::Eps,
        1 => ExtendedScalar::Top,
        _ => finite(rng),
    }
}

/// A base-semifield value: ε or finite, never ⊤.
pub fn base_scalar(rng: &mut ChaCha8Rng) -> ExtendedScalar {
    if rng.gen_range(0u8..5) == 0 {
        ExtendedScalar::Eps
    } else {
        finite(rng)
    }
}

/// A vector with a mix of ε and finite coordinates, never all-ε unless
/// `allow_bottom`.
pub fn vector(rng: &mut ChaCha8Rng, dim: usize, allow_bottom: bool) -> Vector {
    loop {
        let coords: Vec<ExtendedScalar> = (0..dim).map(|_| base_scalar(rng)).collect();
        let v = Vector::new(coords).unwrap();
        if allow_bottom || !v.is_bottom() {
            return v;
        }
    }
}

/// A finitely generated topical function with up to `max_gens` generators,
/// none anchored at the bottom vector, coefficients in K̄ \ {ε}.
pub fn fingen(rng: &mut ChaCha8Rng, dim: usize, max_gens: usize) -> FnHandle {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let y = vector(rng, dim, false);
            let c = if rng.gen_range(0u8..12) == 0 { ExtendedScalar::Top } else { finite(rng) };
            (y, c)
        })
        .collect();
    FnHandle::FinGen(FinGenTopicalFn::new(dim, gens).unwrap())
}
