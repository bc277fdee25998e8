//! Support sets of topical functions and the residual subdifferential.
//!
//! The *support set* of f collects the y ≠ inf X whose elementary topical
//! function x ↦ x/y stays below f; for topical f this is exactly
//! {y : e ≤ f(y)}, and f is recovered from it: f(x) = max over support
//! members of x/y, attained at the canonical member f(x)⁻¹ ⊗ x when f(x)
//! is finite.  The *at-a-point* variants additionally require the
//! elementary function (or its truncated form min{x/y, d}) to touch f at a
//! distinguished point x₀ with f(x₀) ∈ K∖{ε}; both have closed
//! characterizations — f(y) = e together with a one-point inequality at
//! x₀ — which this module computes and cross-checks against the defining
//! sweep on every call.
//!
//! The subdifferential-style predicate at the end makes no structural
//! claims; it is a plain membership test quantified over the probe set.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::function::{check_topical, s_yd, FnHandle, FnShape, ProbeSet};
use crate::scalar::ExtendedScalar;
use crate::vector::Vector;

fn entry_dim(f: &FnHandle, v: &Vector, probes: &ProbeSet) -> Result<usize> {
    let dim = probes.dim();
    if v.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
    }
    if let Some(fd) = f.dim() {
        if fd != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: fd });
        }
    }
    Ok(dim)
}

/// The support operations assume a topical f: constructed-topical handles
/// qualify by shape, anything else must be verified over an exhaustive
/// probe set.
fn require_topical(f: &FnHandle, probes: &ProbeSet) -> Result<()> {
    match f.shape() {
        FnShape::Topical => Ok(()),
        FnShape::Constant(c) if c.is_eps() => Ok(()),
        _ if probes.is_exhaustive() => {
            if check_topical(f, probes)?.passed() {
                Ok(())
            } else {
                Err(Error::Precondition("support queries need a topical function"))
            }
        }
        _ => Err(Error::Precondition(
            "support queries need a topical handle or an exhaustive probe set",
        )),
    }
}

/// Whether y belongs to the support set of f: x/y ≤ f(x) for all x.
///
/// For topical handles this is decided by the closed form e ≤ f(y);
/// otherwise the defining sweep runs over the probes (exact when they are
/// exhaustive).  The bottom vector is outside the domain of the support
/// set and is rejected.
pub fn supp_membership(f: &FnHandle, y: &Vector, probes: &ProbeSet) -> Result<bool> {
    entry_dim(f, y, probes)?;
    if y.is_bottom() {
        return Err(Error::Precondition("support sets exclude the bottom vector"));
    }
    match f.shape() {
        FnShape::Topical => return Ok(ExtendedScalar::unit().leq(&f.eval(y)?)),
        FnShape::Constant(c) if c.is_eps() => return Ok(false),
        _ => {}
    }
    for x in probes.points() {
        if !x.residuate(y)?.leq(&f.eval(x)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reconstructs f(x) as the maximum of x/y over support members y drawn
/// from the probes plus the canonical member f(x)⁻¹ ⊗ x; for topical f
/// and f(x) ∈ K the result equals f(x) exactly.  Points with f(x) = ⊤
/// cannot be reconstructed from finitely many members and are rejected.
pub fn supp_reconstruct(f: &FnHandle, x: &Vector, probes: &ProbeSet) -> Result<ExtendedScalar> {
    entry_dim(f, x, probes)?;
    require_topical(f, probes)?;
    let fx = f.eval(x)?;
    if fx.is_top() {
        return Err(Error::Precondition("reconstruction needs a K-valued point"));
    }
    let mut candidates: Vec<Vector> =
        probes.points().iter().filter(|p| !p.is_bottom()).cloned().collect();
    if fx.is_finite() {
        let canonical = x.scale(&fx.invert())?;
        if !candidates.contains(&canonical) {
            candidates.push(canonical);
        }
    }
    let mut acc = ExtendedScalar::Eps;
    for y in &candidates {
        if supp_membership(f, y, probes)? {
            acc = acc.oplus(&x.residuate(y)?);
        }
    }
    Ok(acc)
}

fn at_point_preconditions(
    f: &FnHandle,
    x0: &Vector,
    y: &Vector,
    probes: &ProbeSet,
) -> Result<ExtendedScalar> {
    entry_dim(f, x0, probes)?;
    entry_dim(f, y, probes)?;
    require_topical(f, probes)?;
    if y.is_bottom() {
        return Err(Error::Precondition("support sets exclude the bottom vector"));
    }
    let fx0 = f.eval(x0)?;
    if !fx0.is_finite() {
        return Err(Error::Precondition(
            "at-a-point support queries need f(x0) finite and nonzero",
        ));
    }
    Ok(fx0)
}

/// Whether y supports f at x₀ through the elementary topical function:
/// x/y ≤ f(x) for all x, with equality at x₀.
///
/// Decided by the closed form f(y) = e ∧ x₀/y ≥ f(x₀) and cross-checked
/// against the defining sweep (which always includes y and x₀); the two
/// must agree for a topical f, so any divergence is an internal error.
/// Requires f(x₀) ∈ K∖{ε}.
pub fn supp_at_point_x(
    f: &FnHandle,
    x0: &Vector,
    y: &Vector,
    probes: &ProbeSet,
) -> Result<bool> {
    let fx0 = at_point_preconditions(f, x0, y, probes)?;
    let closed = f.eval(y)?.is_unit() && fx0.leq(&x0.residuate(y)?);

    let mut defining = x0.residuate(y)? == fx0;
    if defining {
        for x in probes.points().iter().chain([y, x0]) {
            if !x.residuate(y)?.leq(&f.eval(x)?) {
                defining = false;
                break;
            }
        }
    }
    if closed != defining {
        return Err(Error::Inconsistency(
            "the closed and defining support-at-a-point forms disagreed",
        ));
    }
    Ok(closed)
}

/// Whether the pair (y, d) supports f at x₀ through the truncated form:
/// min{x/y, d} ≤ f(x) for all x, with equality at x₀.
///
/// Closed form: f(y) = e ∧ min{x₀/y, d} ≥ f(x₀); cross-checked like
/// [`supp_at_point_x`], with d ⊗ y forced into the sweep (the point that
/// separates the forms when d is small).  Requires f(x₀) ∈ K∖{ε} and
/// d ∈ K.
pub fn supp_at_point_xk(
    f: &FnHandle,
    x0: &Vector,
    y: &Vector,
    d: &ExtendedScalar,
    probes: &ProbeSet,
) -> Result<bool> {
    let fx0 = at_point_preconditions(f, x0, y, probes)?;
    if d.is_top() {
        return Err(Error::Precondition("the truncation scalar must lie in K"));
    }
    let closed = f.eval(y)?.is_unit() && fx0.leq(&s_yd(y, d, x0)?);

    let mut defining = s_yd(y, d, x0)? == fx0;
    if defining {
        let scaled = y.scale(d)?;
        for x in probes.points().iter().chain([y, x0, &scaled]) {
            if !s_yd(y, d, x)?.leq(&f.eval(x)?) {
                defining = false;
                break;
            }
        }
    }
    if closed != defining {
        return Err(Error::Inconsistency(
            "the closed and defining truncated support forms disagreed",
        ));
    }
    Ok(closed)
}

/// Whether y₀ belongs to the residual subdifferential of f at x₀:
/// (x/y₀) ⊗ (x₀/y₀)⁻¹ ⊗ f(x₀) ≤ f(x) for all probe x (plus x₀ and y₀
/// themselves).  Exact when the probes are exhaustive.  Requires
/// f(x₀) ≠ ⊤.
pub fn phi_subdiff_membership(
    f: &FnHandle,
    x0: &Vector,
    y0: &Vector,
    probes: &ProbeSet,
) -> Result<bool> {
    entry_dim(f, x0, probes)?;
    entry_dim(f, y0, probes)?;
    let fx0 = f.eval(x0)?;
    if fx0.is_top() {
        return Err(Error::Precondition("the subdifferential needs f(x0) in K"));
    }
    let scale = x0.residuate(y0)?.invert().otimes(&fx0);
    for x in probes.points().iter().chain([x0, y0]) {
        if !x.residuate(y0)?.otimes(&scale).leq(&f.eval(x)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
