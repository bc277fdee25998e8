//! Scalars of the enlarged semifield K̄ = K ∪ {⊤}.
//!
//! The base semifield K is an idempotent semifield whose addition is `max`
//! under a total order: either the rationals under (max, +) with neutral
//! elements ε = -∞ and e = 0, or the two-element Boolean chain {ε, e}.  The
//! Boolean chain embeds into the rational instance as {ε, 0}, so a single
//! scalar type serves both; [`SemifieldKind`] only restricts which finite
//! values may be constructed.
//!
//! Adjoining a greatest element ⊤ leaves two consistent ways to extend the
//! product, which differ exactly on {ε, ⊤}:
//!
//! * the *lower* product [`ExtendedScalar::otimes`], where ε annihilates
//!   everything (ε ⊗ ⊤ = ε);
//! * the *upper* product [`ExtendedScalar::otimes_dot`], where ⊤ absorbs
//!   everything (ε ⊗̇ ⊤ = ⊤).
//!
//! Each determines the other through the involution `inverse`:
//! λ ⊗̇ μ = (λ⁻¹ ⊗ μ⁻¹)⁻¹.  Residuation `λ / μ = sup{ν ∈ K : μ ⊗ ν ≤ λ}`
//! has the closed form λ ⊗̇ μ⁻¹ and is total on K̄.

use alloc::string::String;
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

/// Exact rational number used for finite scalar values.
pub type Rational = num_rational::BigRational;

/// Which base semifield finite values are drawn from.
///
/// Arithmetic is identical in both instances; the kind only governs
/// validation (Boolean mode admits no finite value other than `e`) and
/// output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemifieldKind {
    /// Rationals under (max, +): ε = -∞, e = 0, inverse = negation.
    RationalMaxPlus,
    /// The chain {ε, e}: ⊕ = or, ⊗ = and, e is its own inverse.
    Boolean,
}

impl SemifieldKind {
    /// Checks that `s` is a legal scalar of this instance's enlargement.
    pub fn validate_scalar(&self, s: &ExtendedScalar) -> Result<(), crate::Error> {
        match (self, s) {
            (SemifieldKind::Boolean, ExtendedScalar::Finite(q)) if !q.is_zero() => {
                Err(crate::Error::Precondition(
                    "boolean semifield admits no finite scalar other than e",
                ))
            }
            _ => Ok(()),
        }
    }
}

/// An element of K̄ = K ∪ {⊤}: the bottom ε, a finite value, or the top ⊤.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedScalar {
    /// Bottom element ε, neutral for ⊕ and absorbing for the lower product.
    Eps,
    /// A finite element of the base semifield.
    Finite(Rational),
    /// Adjoined greatest element ⊤, absorbing for the upper product.
    Top,
}

use ExtendedScalar::{Eps, Finite, Top};

impl ExtendedScalar {
    /// The multiplicative unit e (0 in max-plus terms).
    pub fn unit() -> Self {
        Finite(Rational::zero())
    }

    /// Finite scalar from an integer.
    pub fn int(n: i64) -> Self {
        Finite(Rational::from_integer(BigInt::from(n)))
    }

    /// Finite scalar from a numerator/denominator pair.  Panics on zero
    /// denominator, so only for use with literal arguments.
    pub fn ratio(num: i64, den: i64) -> Self {
        Finite(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_eps(&self) -> bool {
        matches!(self, Eps)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Top)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    /// True for elements of K itself, i.e. anything except ⊤.
    pub fn in_base(&self) -> bool {
        !self.is_top()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Finite(q) if q.is_zero())
    }

    /// Idempotent addition ⊕ = max in the total order ε ≤ finite ≤ ⊤.
    pub fn oplus(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Meet (min) in the same order; used by the affine minorants min{x/y, d}.
    pub fn meet(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Lower product ⊗: extends the base product so that ε annihilates the
    /// whole of K̄ (in particular ⊤ ⊗ ε = ε), while ⊤ absorbs everything
    /// except ε.
    pub fn otimes(&self, other: &Self) -> Self {
        match (self, other) {
            (Eps, _) | (_, Eps) => Eps,
            (Top, _) | (_, Top) => Top,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }

    /// Upper product ⊗̇: agrees with ⊗ on K × K, but ⊤ absorbs the whole of
    /// K̄ (in particular ε ⊗̇ ⊤ = ⊤).
    pub fn otimes_dot(&self, other: &Self) -> Self {
        match (self, other) {
            (Top, _) | (_, Top) => Top,
            (Eps, _) | (_, Eps) => Eps,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }

    /// The order-reversing involution λ ↦ λ⁻¹, extended by ε⁻¹ = ⊤ and
    /// ⊤⁻¹ = ε.
    ///
    /// On the adjoined elements this is an inverse only by analogy: neither
    /// ε⁻¹ ⊗ ε nor ⊤⁻¹ ⊗̇ ⊤ equals e (they give ε and ⊤ respectively).
    /// It is involutive and exchanges the two products:
    /// λ ⊗̇ μ = (λ⁻¹ ⊗ μ⁻¹)⁻¹.
    pub fn invert(&self) -> Self {
        match self {
            Eps => Top,
            Finite(q) => Finite(-q),
            Top => Eps,
        }
    }

    /// Residual λ / μ = sup{ν ∈ K : μ ⊗ ν ≤ λ} = λ ⊗̇ μ⁻¹.
    ///
    /// Total on K̄; e.g. ε / ε = ⊤ and λ / ⊤ = ε for finite λ.
    pub fn residual(&self, other: &Self) -> Self {
        self.otimes_dot(&other.invert())
    }

    /// The order relation; `a.leq(b)` iff a ⊕ b = b.
    pub fn leq(&self, other: &Self) -> bool {
        self <= other
    }

    /// Canonical text form: `eps`, `top`, or the reduced rational.
    pub fn display(&self) -> String {
        self.to_string()
    }
}

impl PartialOrd for ExtendedScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Eps, Eps) | (Top, Top) => Ordering::Equal,
            (Eps, _) | (_, Top) => Ordering::Less,
            (_, Eps) | (Top, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtendedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eps => write!(f, "eps"),
            Finite(q) => write!(f, "{}", q),
            Top => write!(f, "top"),
        }
    }
}

impl FromStr for ExtendedScalar {
    type Err = crate::Error;

    /// Parses `eps`, `top`, `e`, or a rational `p` / `p/q` in lowest terms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eps" => Ok(Eps),
            "top" => Ok(Top),
            "e" => Ok(ExtendedScalar::unit()),
            other => {
                let q = Rational::from_str(other)
                    .map_err(|_| crate::Error::Parse("not a scalar: expected eps, top, e, or p/q"))?;
                Ok(Finite(q))
            }
        }
    }
}

/// The three-element chain {ε, e, ⊤}; every scalar identity in the library
/// is checked exhaustively over this carrier before being trusted on
/// rationals.
pub fn chain_carrier() -> [ExtendedScalar; 3] {
    [Eps, ExtendedScalar::unit(), Top]
}
