//! Polar sets of finite generator sets, with exact separation witnesses.
//!
//! For a finite G ⊆ X the support function is σ_G(y) = sup_{g∈G} g/y (ε
//! for empty G).  The *polar* of G collects the y with σ_G(y) ≤ e; it is
//! an upward set.  The *bar polar* runs the residual the other way
//! (y/g ≤ e for all g) and is downward.  Applying the polar and then its
//! dual gives the *bipolar*; over the rationals with finite G this is
//! exactly the downward hull ∪_g {x : x ≤ g}, and every point outside it
//! can be separated: there is a y with σ_G(y) ≤ e < x/y.  Membership
//! queries return such a y as a checked witness.
//!
//! Polars are exposed as membership predicates, never materialized: over
//! the rationals they are infinite.  On the Boolean cube the two-step
//! polar can be swept exhaustively instead ([`bipolar_membership_on`]),
//! which is also the honest route there — the hull description needs room
//! to scale and fails on the two-point chain.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::ExtendedScalar;
use crate::vector::Vector;

/// A finite, deduplicated set of points of Kⁿ.  May be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSet {
    dim: usize,
    points: Vec<Vector>,
}

impl FiniteSet {
    pub fn new(dim: usize, points: Vec<Vector>) -> Result<Self> {
        let mut set = FiniteSet { dim, points: Vec::with_capacity(points.len()) };
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
            if !set.points.contains(&p) {
                set.points.push(p);
            }
        }
        Ok(set)
    }

    pub fn empty(dim: usize) -> Self {
        FiniteSet { dim, points: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        Ok(())
    }
}

/// σ_G(y) = sup_{g∈G} g/y; ε when G is empty.  For nonempty G the value at
/// the bottom vector is ⊤.
pub fn support_function(g: &FiniteSet, y: &Vector) -> Result<ExtendedScalar> {
    g.check_dim(y)?;
    let mut acc = ExtendedScalar::Eps;
    for p in g.points() {
        acc = acc.oplus(&p.residuate(y)?);
    }
    Ok(acc)
}

/// y belongs to the polar of G: σ_G(y) ≤ e.
pub fn polar_membership(y: &Vector, g: &FiniteSet) -> Result<bool> {
    Ok(support_function(g, y)?.leq(&ExtendedScalar::unit()))
}

/// y belongs to the bar polar of G: y/g ≤ e for every g ∈ G.
pub fn bar_polar_membership(y: &Vector, g: &FiniteSet) -> Result<bool> {
    g.check_dim(y)?;
    for p in g.points() {
        if !y.residuate(p)?.leq(&ExtendedScalar::unit()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// x belongs to the dual polar of G, computed from the definition of the
/// dual mapping: every g ∈ G must lie in the polar of the singleton {x}.
/// Collapsing the definitions shows this equals [`bar_polar_membership`];
/// the two are kept as independent code paths so the identity stays
/// checkable.
pub fn dual_polar_membership(x: &Vector, g: &FiniteSet) -> Result<bool> {
    g.check_dim(x)?;
    let singleton = FiniteSet::new(x.dim(), alloc::vec![x.clone()])?;
    for p in g.points() {
        if !polar_membership(p, &singleton)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An exact separation certificate for a bipolar non-member:
/// σ_G(y) ≤ e < x/y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationWitness {
    pub y: Vector,
    pub sigma_value: ExtendedScalar,
    pub x_over_y: ExtendedScalar,
}

/// Outcome of a bipolar membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipolarResult {
    pub member: bool,
    /// Present exactly when `member` is false.
    pub witness: Option<SeparationWitness>,
    /// The empty-set conventions (σ_∅ = ε, polar(∅) = X) were used.
    pub empty_set: bool,
}

fn validated_witness(
    g: &FiniteSet,
    x: &Vector,
    y: Vector,
) -> Result<SeparationWitness> {
    let sigma_value = support_function(g, &y)?;
    let x_over_y = x.residuate(&y)?;
    let e = ExtendedScalar::unit();
    if !sigma_value.leq(&e) || x_over_y.leq(&e) {
        return Err(Error::Inconsistency("separation witness failed its defining inequalities"));
    }
    Ok(SeparationWitness { y, sigma_value, x_over_y })
}

/// Whether x lies in the bipolar of G over the rationals, where the
/// bipolar is the downward hull of G: member iff x ≤ g for some g ∈ G.
/// Non-members get a separation witness y = δ₀⁻¹ ⊗ x with
/// δ₀ = σ_G(x)⁻¹ (or the unit step when σ_G(x) = ε), validated against
/// its defining inequalities before being returned.
///
/// The empty set has an empty hull; even the bottom vector is a
/// non-member then, separated by y = inf X itself.
pub fn bipolar_membership(x: &Vector, g: &FiniteSet) -> Result<BipolarResult> {
    g.check_dim(x)?;
    if g.is_empty() {
        let y = if x.is_bottom() { x.clone() } else { x.scale(&ExtendedScalar::int(-1))? };
        let witness = validated_witness(g, x, y)?;
        return Ok(BipolarResult { member: false, witness: Some(witness), empty_set: true });
    }
    for p in g.points() {
        if x.leq(p)? {
            return Ok(BipolarResult { member: true, witness: None, empty_set: false });
        }
    }
    // Outside the hull σ_G(x) < e (some coordinate of x exceeds every g),
    // so the separation step δ₀ below is strictly positive.
    let sigma_x = support_function(g, x)?;
    let delta0 = match &sigma_x {
        ExtendedScalar::Eps => ExtendedScalar::int(1),
        s if s.leq(&ExtendedScalar::unit()) && !s.is_unit() => s.invert(),
        _ => {
            return Err(Error::Inconsistency(
                "support function not below the unit outside the hull",
            ))
        }
    };
    let y = x.scale(&delta0.invert())?;
    let witness = validated_witness(g, x, y)?;
    Ok(BipolarResult { member: false, witness: Some(witness), empty_set: false })
}

/// Whether x lies in the two-step polar of G swept over an explicit finite
/// domain: x must satisfy x/y ≤ e for every domain point y in the polar of
/// G.  Exact on the Boolean cube; no witness is constructed.
pub fn bipolar_membership_on(x: &Vector, g: &FiniteSet, domain: &[Vector]) -> Result<bool> {
    g.check_dim(x)?;
    for y in domain {
        if polar_membership(y, g)? && !x.residuate(y)?.leq(&ExtendedScalar::unit()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether a sampled predicate is upward on the grid: p(a) and a ≤ b imply
/// p(b) for comparable grid pairs.
pub fn is_upward<F>(pred: F, grid: &[Vector]) -> Result<bool>
where
    F: Fn(&Vector) -> Result<bool>,
{
    let values: Vec<bool> = grid.iter().map(&pred).collect::<Result<_>>()?;
    for (a, pa) in grid.iter().zip(&values) {
        if !pa {
            continue;
        }
        for (b, pb) in grid.iter().zip(&values) {
            if a.leq(b)? && !pb {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether a sampled predicate is downward on the grid: p(b) and a ≤ b
/// imply p(a).
pub fn is_downward<F>(pred: F, grid: &[Vector]) -> Result<bool>
where
    F: Fn(&Vector) -> Result<bool>,
{
    let values: Vec<bool> = grid.iter().map(&pred).collect::<Result<_>>()?;
    for (b, pb) in grid.iter().zip(&values) {
        if !pb {
            continue;
        }
        for (a, pa) in grid.iter().zip(&values) {
            if a.leq(b)? && !pa {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
