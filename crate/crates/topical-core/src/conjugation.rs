//! Upper and lower conjugations for the residual couplings.
//!
//! For f : X → K̄ the *upper conjugate* is f^c(y) = sup_x f(x)⁻¹ ⊗ (x/y)
//! and the *lower conjugate* is f^θ(y) = inf_x f(x)⁻¹ ⊗̇ (x/y)⁻¹; both have
//! variants for the truncated coupling min{x/y, d} and its inverted
//! companion max{(x/y)⁻¹, d}.  The *reflected conjugate* swaps the
//! residual's slots, f^r(x) = sup_w (x/w) ⊗ f(w)⁻¹, and composing it after
//! the upper conjugate yields the biconjugate, which is the topical
//! envelope: always ≤ f, with equality exactly on topical functions
//! (and on the constant ⊤).
//!
//! Over the rationals X is infinite, so the defining sup/inf cannot be
//! enumerated.  Every public entry point therefore returns a
//! [`ConjugateValue`] whose `exactness` says how the number was obtained:
//! closed forms (exact for every handle shape the crate can build) or a
//! probe sweep (a certified lower bound for a sup, upper bound for an
//! inf).  When the probe set is the whole Boolean cube the sweep itself is
//! exact.  The `*_sampled` twins always run the raw sweep, so closed forms
//! can be cross-checked against honest enumeration.
//!
//! Upper conjugates use the lower product ⊗ deliberately: with the upper
//! product the conjugate of the constant ⊤ would take the value ⊤ at the
//! bottom vector instead of vanishing, and the conjugation would no longer
//! send every function to an anti-topical one (a unit test below keeps
//! that counterexample alive).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::function::{s_yd, sbar_yd, FnHandle, FnShape, ProbeSet};
use crate::scalar::ExtendedScalar;
use crate::vector::Vector;

/// The couplings from which the conjugations are built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingKind {
    /// (x, y) ↦ x/y.
    Phi,
    /// (x, (y, d)) ↦ min{x/y, d}; needs the truncation scalar d.
    Psi,
    /// (x, y) ↦ y/x, the reflection of Phi.
    PhiReflected,
}

impl CouplingKind {
    /// Evaluates the coupling; `d` is required for `Psi` and ignored
    /// otherwise.
    pub fn apply(
        &self,
        x: &Vector,
        y: &Vector,
        d: Option<&ExtendedScalar>,
    ) -> Result<ExtendedScalar> {
        match self {
            CouplingKind::Phi => x.residuate(y),
            CouplingKind::PhiReflected => y.residuate(x),
            CouplingKind::Psi => match d {
                Some(d) => s_yd(y, d, x),
                None => Err(Error::Precondition("the truncated coupling needs a scalar d")),
            },
        }
    }
}

/// How a conjugate value relates to the true sup/inf over all of X.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    /// The exact value (closed form, or an exhaustive sweep).
    Exact,
    /// A probe sweep under a sup: the true value is ≥ this one.
    LowerBound,
    /// A probe sweep under an inf: the true value is ≤ this one.
    UpperBound,
}

/// A conjugate value, how it was certified, and a point attaining it when
/// one is known.  The witness, when present, always satisfies
/// term(witness) = value for the defining term of the operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateValue {
    pub value: ExtendedScalar,
    pub exactness: Exactness,
    pub witness: Option<Vector>,
}

impl ConjugateValue {
    fn exact(value: ExtendedScalar, witness: Option<Vector>) -> Self {
        ConjugateValue { value, exactness: Exactness::Exact, witness }
    }
}

/// Everything each conjugation needs to know about the call site.
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

fn sup_over<F>(probes: &ProbeSet, term: F) -> Result<(ExtendedScalar, Option<Vector>)>
where
    F: Fn(&Vector) -> Result<ExtendedScalar>,
{
    let mut best: Option<(ExtendedScalar, Vector)> = None;
    for p in probes.points() {
        let t = term(p)?;
        match &best {
            Some((b, _)) if t <= *b => {}
            _ => best = Some((t, p.clone())),
        }
    }
    let (value, witness) = best.expect("probe sets are never empty");
    Ok((value, Some(witness)))
}

fn inf_over<F>(probes: &ProbeSet, term: F) -> Result<(ExtendedScalar, Option<Vector>)>
where
    F: Fn(&Vector) -> Result<ExtendedScalar>,
{
    let mut best: Option<(ExtendedScalar, Vector)> = None;
    for p in probes.points() {
        let t = term(p)?;
        match &best {
            Some((b, _)) if t >= *b => {}
            _ => best = Some((t, p.clone())),
        }
    }
    let (value, witness) = best.expect("probe sets are never empty");
    Ok((value, Some(witness)))
}

/// First point among `structured` then the probes whose term equals
/// `value`; `None` when the value is not attained on any of them.
fn attained_at<F>(
    value: &ExtendedScalar,
    structured: &[Vector],
    probes: &ProbeSet,
    term: F,
) -> Option<Vector>
where
    F: Fn(&Vector) -> Result<ExtendedScalar>,
{
    structured
        .iter()
        .chain(probes.points())
        .find(|p| term(p).ok().as_ref() == Some(value))
        .cloned()
}

/// Raw probe sweep for the upper conjugate: sup over probes x of
/// f(x)⁻¹ ⊗ (x/y), with the first attaining probe.
pub fn conjugate_phi_sampled(
    f: &FnHandle,
    y: &Vector,
    probes: &ProbeSet,
) -> Result<(ExtendedScalar, Option<Vector>)> {
    entry_dim(f, y, probes)?;
    sup_over(probes, |x| Ok(f.eval(x)?.invert().otimes(&x.residuate(y)?)))
}

/// Upper conjugate f^c(y) = sup_x f(x)⁻¹ ⊗ (x/y).
///
/// Exact for every shaped handle: topical handles give f(y)⁻¹ (attained at
/// x = y), anti-topical handles give ⊤ (the sup is unbounded over the
/// rationals, so no witness exists), the constant ⊤ gives ε, and every
/// other constant gives ⊤.  Opaque handles fall back to the probe sweep:
/// exact when the probes are exhaustive, otherwise a lower bound.
pub fn conjugate_phi(f: &FnHandle, y: &Vector, probes: &ProbeSet) -> Result<ConjugateValue> {
    let dim = entry_dim(f, y, probes)?;
    let term = |x: &Vector| Ok(f.eval(x)?.invert().otimes(&x.residuate(y)?));
    if probes.is_exhaustive() {
        let (value, witness) = sup_over(probes, term)?;
        return Ok(ConjugateValue::exact(value, witness));
    }
    let value = match f.shape() {
        FnShape::Topical => f.eval(y)?.invert(),
        FnShape::AntiTopical => ExtendedScalar::Top,
        FnShape::Constant(c) if c.is_top() => ExtendedScalar::Eps,
        FnShape::Constant(_) => ExtendedScalar::Top,
        FnShape::Opaque => {
            let (value, witness) = sup_over(probes, term)?;
            return Ok(ConjugateValue { value, exactness: Exactness::LowerBound, witness });
        }
    };
    let witness = attained_at(&value, &[y.clone(), Vector::bottom(dim)], probes, term);
    Ok(ConjugateValue::exact(value, witness))
}

/// Raw probe sweep for the truncated upper conjugate: sup over probes x of
/// f(x)⁻¹ ⊗ min{x/y, d}.
pub fn conjugate_psi_sampled(
    f: &FnHandle,
    y: &Vector,
    d: &ExtendedScalar,
    probes: &ProbeSet,
) -> Result<(ExtendedScalar, Option<Vector>)> {
    entry_dim(f, y, probes)?;
    sup_over(probes, |x| Ok(f.eval(x)?.invert().otimes(&s_yd(y, d, x)?)))
}

/// Truncated upper conjugate f^c(y, d) = sup_x f(x)⁻¹ ⊗ min{x/y, d}.
///
/// d = ε collapses the coupling, giving ε; d = ⊤ removes the truncation,
/// giving the plain upper conjugate.  For finite d: topical handles still
/// give f(y)⁻¹ (the sup moves to x = d ⊗ y), anti-topical handles give ⊤,
/// the constants ⊤ / ε give ε / ⊤, and a finite constant c gives c⁻¹ ⊗ d.
pub fn conjugate_psi(
    f: &FnHandle,
    y: &Vector,
    d: &ExtendedScalar,
    probes: &ProbeSet,
) -> Result<ConjugateValue> {
    let dim = entry_dim(f, y, probes)?;
    let term = |x: &Vector| Ok(f.eval(x)?.invert().otimes(&s_yd(y, d, x)?));
    if d.is_eps() {
        let witness = attained_at(&ExtendedScalar::Eps, &[Vector::bottom(dim)], probes, term);
        return Ok(ConjugateValue::exact(ExtendedScalar::Eps, witness));
    }
    if d.is_top() {
        return conjugate_phi(f, y, probes);
    }
    if probes.is_exhaustive() {
        let (value, witness) = sup_over(probes, term)?;
        return Ok(ConjugateValue::exact(value, witness));
    }
    let value = match f.shape() {
        FnShape::Topical => f.eval(y)?.invert(),
        FnShape::AntiTopical => ExtendedScalar::Top,
        FnShape::Constant(c) if c.is_top() => ExtendedScalar::Eps,
        FnShape::Constant(c) if c.is_eps() => ExtendedScalar::Top,
        FnShape::Constant(c) => c.invert().otimes(d),
        FnShape::Opaque => {
            let (value, witness) = sup_over(probes, term)?;
            return Ok(ConjugateValue { value, exactness: Exactness::LowerBound, witness });
        }
    };
    let structured = [y.clone(), Vector::bottom(dim), y.scale(d)?];
    let witness = attained_at(&value, &structured, probes, term);
    Ok(ConjugateValue::exact(value, witness))
}

/// Raw probe sweep for the lower conjugate: inf over probes x of
/// f(x)⁻¹ ⊗̇ (x/y)⁻¹.
pub fn lower_conjugate_phi_sampled(
    f: &FnHandle,
    y: &Vector,
    probes: &ProbeSet,
) -> Result<(ExtendedScalar, Option<Vector>)> {
    entry_dim(f, y, probes)?;
    inf_over(probes, |x| Ok(f.eval(x)?.invert().otimes_dot(&x.residuate(y)?.invert())))
}

/// Lower conjugate f^θ(y) = inf_x f(x)⁻¹ ⊗̇ (x/y)⁻¹.
///
/// Dual to the upper conjugate: anti-topical handles (and the constant ⊤)
/// give f(y)⁻¹, topical handles built from generators give ε (the inf
/// drains to ε along growing arguments, so no witness exists away from the
/// bottom vector), the constant ε gives ⊤, and finite constants give ε.
/// Opaque sweeps are upper bounds when not exhaustive.
pub fn lower_conjugate_phi(f: &FnHandle, y: &Vector, probes: &ProbeSet) -> Result<ConjugateValue> {
    let dim = entry_dim(f, y, probes)?;
    let term = |x: &Vector| Ok(f.eval(x)?.invert().otimes_dot(&x.residuate(y)?.invert()));
    if probes.is_exhaustive() {
        let (value, witness) = inf_over(probes, term)?;
        return Ok(ConjugateValue::exact(value, witness));
    }
    let value = match f.shape() {
        FnShape::AntiTopical => f.eval(y)?.invert(),
        FnShape::Constant(c) if c.is_top() => f.eval(y)?.invert(),
        FnShape::Constant(c) if c.is_eps() => ExtendedScalar::Top,
        FnShape::Topical | FnShape::Constant(_) => ExtendedScalar::Eps,
        FnShape::Opaque => {
            let (value, witness) = inf_over(probes, term)?;
            return Ok(ConjugateValue { value, exactness: Exactness::UpperBound, witness });
        }
    };
    let witness = attained_at(&value, &[y.clone(), Vector::bottom(dim)], probes, term);
    Ok(ConjugateValue::exact(value, witness))
}

/// Raw probe sweep for the truncated lower conjugate: inf over probes x of
/// f(x)⁻¹ ⊗̇ max{(x/y)⁻¹, d}.
pub fn lower_conjugate_psi_sampled(
    f: &FnHandle,
    y: &Vector,
    d: &ExtendedScalar,
    probes: &ProbeSet,
) -> Result<(ExtendedScalar, Option<Vector>)> {
    entry_dim(f, y, probes)?;
    inf_over(probes, |x| Ok(f.eval(x)?.invert().otimes_dot(&sbar_yd(y, d, x)?)))
}

/// Truncated lower conjugate f^θ(y, d) = inf_x f(x)⁻¹ ⊗̇ max{(x/y)⁻¹, d}.
///
/// d = ⊤ saturates the coupling, giving ⊤; d = ε removes the truncation,
/// giving the plain lower conjugate.  For finite d: anti-topical handles
/// still give f(y)⁻¹ (the inf moves to x = d⁻¹ ⊗ y), topical handles give
/// ε, the constants ε / ⊤ give ⊤ / ε, and a finite constant c gives
/// c⁻¹ ⊗ d.
pub fn lower_conjugate_psi(
    f: &FnHandle,
    y: &Vector,
    d: &ExtendedScalar,
    probes: &ProbeSet,
) -> Result<ConjugateValue> {
    let dim = entry_dim(f, y, probes)?;
    let term = |x: &Vector| Ok(f.eval(x)?.invert().otimes_dot(&sbar_yd(y, d, x)?));
    if d.is_top() {
        let witness = attained_at(&ExtendedScalar::Top, &[Vector::bottom(dim)], probes, term);
        return Ok(ConjugateValue::exact(ExtendedScalar::Top, witness));
    }
    if d.is_eps() {
        return lower_conjugate_phi(f, y, probes);
    }
    if probes.is_exhaustive() {
        let (value, witness) = inf_over(probes, term)?;
        return Ok(ConjugateValue::exact(value, witness));
    }
    let value = match f.shape() {
        FnShape::AntiTopical => f.eval(y)?.invert(),
        FnShape::Constant(c) if c.is_top() => f.eval(y)?.invert(),
        FnShape::Constant(c) if c.is_eps() => ExtendedScalar::Top,
        FnShape::Topical => ExtendedScalar::Eps,
        FnShape::Constant(c) => c.invert().otimes(d),
        FnShape::Opaque => {
            let (value, witness) = inf_over(probes, term)?;
            return Ok(ConjugateValue { value, exactness: Exactness::UpperBound, witness });
        }
    };
    let structured = [y.clone(), Vector::bottom(dim), y.scale(&d.invert())?];
    let witness = attained_at(&value, &structured, probes, term);
    Ok(ConjugateValue::exact(value, witness))
}

/// Raw probe sweep for the reflected conjugate at x: sup over probes w of
/// (x/w) ⊗ f(w)⁻¹.
pub fn conjugate_reflected_sampled(
    f: &FnHandle,
    x: &Vector,
    probes: &ProbeSet,
) -> Result<(ExtendedScalar, Option<Vector>)> {
    entry_dim(f, x, probes)?;
    sup_over(probes, |w| Ok(x.residuate(w)?.otimes(&f.eval(w)?.invert())))
}

/// Reflected conjugate f^r(x) = sup_w (x/w) ⊗ f(w)⁻¹.
///
/// The term at w = inf X is ⊤ ⊗ f(inf X)⁻¹, so any handle with
/// f(inf X) ≠ ⊤ gives the constant ⊤.  Otherwise: the constant ⊤ gives ε
/// (which is topical), and an anti-topical handle gives f(x)⁻¹ — on those
/// handles the reflected conjugate inverts pointwise.
pub fn conjugate_reflected(f: &FnHandle, x: &Vector, probes: &ProbeSet) -> Result<ConjugateValue> {
    let dim = entry_dim(f, x, probes)?;
    let term = |w: &Vector| Ok(x.residuate(w)?.otimes(&f.eval(w)?.invert()));
    if probes.is_exhaustive() {
        let (value, witness) = sup_over(probes, term)?;
        return Ok(ConjugateValue::exact(value, witness));
    }
    let bottom = Vector::bottom(dim);
    if !f.eval(&bottom)?.is_top() {
        let witness = attained_at(&ExtendedScalar::Top, &[bottom], probes, term);
        return Ok(ConjugateValue::exact(ExtendedScalar::Top, witness));
    }
    let value = match f.shape() {
        FnShape::AntiTopical => f.eval(x)?.invert(),
        FnShape::Constant(_) => ExtendedScalar::Eps,
        FnShape::Opaque => {
            let (value, witness) = sup_over(probes, term)?;
            return Ok(ConjugateValue { value, exactness: Exactness::LowerBound, witness });
        }
        // Topical handles evaluate to ε at the bottom vector, so they
        // cannot reach this branch.
        FnShape::Topical => unreachable!("topical handles never take the value top at the bottom"),
    };
    let witness = attained_at(&value, &[x.clone(), bottom], probes, term);
    Ok(ConjugateValue::exact(value, witness))
}

/// Raw two-stage sweep for the biconjugate at x: the inner upper conjugate
/// is sampled once per probe w, then the outer reflected sweep runs over
/// the same probes.  Exact only when the probes are exhaustive; on general
/// samples the two bounds pull in opposite directions, so the composite is
/// uncertified (it is still never above f(x) when x is a probe).
pub fn biconjugate_phi_sampled(
    f: &FnHandle,
    x: &Vector,
    probes: &ProbeSet,
) -> Result<(ExtendedScalar, Option<Vector>)> {
    entry_dim(f, x, probes)?;
    let inner: Vec<ExtendedScalar> = probes
        .points()
        .iter()
        .map(|w| conjugate_phi_sampled(f, w, probes).map(|(v, _)| v))
        .collect::<Result<_>>()?;
    let mut best: Option<(ExtendedScalar, Vector)> = None;
    for (w, h) in probes.points().iter().zip(&inner) {
        let t = x.residuate(w)?.otimes(&h.invert());
        match &best {
            Some((b, _)) if t <= *b => {}
            _ => best = Some((t, w.clone())),
        }
    }
    let (value, witness) = best.expect("probe sets are never empty");
    Ok((value, Some(witness)))
}

/// Biconjugate (f^c)^r at x: the value of the topical envelope of f.
///
/// Always ≤ f(x), with equality exactly when f is topical or f ≡ ⊤.
/// Shaped handles use closed forms (topical: f(x) attained at w = x;
/// anti-topical and finite constants collapse to ε; the constant ⊤ stays
/// ⊤).  Opaque handles need an exhaustive probe set: composing two
/// opposite sampled bounds would certify nothing.
pub fn biconjugate_phi(f: &FnHandle, x: &Vector, probes: &ProbeSet) -> Result<ConjugateValue> {
    let dim = entry_dim(f, x, probes)?;
    if probes.is_exhaustive() {
        let (value, witness) = biconjugate_phi_sampled(f, x, probes)?;
        return Ok(ConjugateValue::exact(value, witness));
    }
    let bottom = Vector::bottom(dim);
    match f.shape() {
        FnShape::Topical => {
            let value = f.eval(x)?;
            // Inner closed form: f^c = f⁻¹, so the outer term at w is
            // (x/w) ⊗ f(w).
            let term = |w: &Vector| Ok(x.residuate(w)?.otimes(&f.eval(w)?));
            let witness = attained_at(&value, &[x.clone(), bottom], probes, term);
            Ok(ConjugateValue::exact(value, witness))
        }
        FnShape::Constant(c) if c.is_top() => {
            Ok(ConjugateValue::exact(ExtendedScalar::Top, Some(bottom)))
        }
        // f^c ≡ ⊤ for these shapes, so every outer term is (x/w) ⊗ ε = ε.
        FnShape::AntiTopical | FnShape::Constant(_) => {
            Ok(ConjugateValue::exact(ExtendedScalar::Eps, Some(bottom)))
        }
        FnShape::Opaque => Err(Error::Precondition(
            "the biconjugate of an opaque handle needs an exhaustive probe set",
        )),
    }
}

/// Whether the two conjugation round trips return to f, next to the exact
/// classification of f; computed by exhaustive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedPointReport {
    /// (f^c)^θ = f pointwise.
    pub upper_then_lower_fixed: bool,
    /// (f^θ)^c = f pointwise.
    pub lower_then_upper_fixed: bool,
    pub is_topical: bool,
    pub is_anti_topical: bool,
    pub is_const_top: bool,
    pub is_const_eps: bool,
}

impl FixedPointReport {
    /// f is topical ⇔ f ≢ ⊤ and the upper-then-lower round trip fixes f.
    pub fn topical_iff_holds(&self) -> bool {
        self.is_topical == (!self.is_const_top && self.upper_then_lower_fixed)
    }

    /// f is anti-topical ⇔ f ≢ ε and the lower-then-upper round trip
    /// fixes f.
    pub fn anti_topical_iff_holds(&self) -> bool {
        self.is_anti_topical == (!self.is_const_eps && self.lower_then_upper_fixed)
    }
}

/// Runs both conjugation round trips over an exhaustive probe set and
/// reports which ones fix f, alongside f's classification.
pub fn check_tantibiconj(f: &FnHandle, probes: &ProbeSet) -> Result<FixedPointReport> {
    if !probes.is_exhaustive() {
        return Err(Error::Precondition(
            "fixed-point checks need an exhaustive probe set",
        ));
    }
    let points = probes.points();
    let values: Vec<ExtendedScalar> = points.iter().map(|p| f.eval(p)).collect::<Result<_>>()?;
    let upper: Vec<ExtendedScalar> = points
        .iter()
        .map(|w| conjugate_phi_sampled(f, w, probes).map(|(v, _)| v))
        .collect::<Result<_>>()?;
    let lower: Vec<ExtendedScalar> = points
        .iter()
        .map(|w| lower_conjugate_phi_sampled(f, w, probes).map(|(v, _)| v))
        .collect::<Result<_>>()?;

    let mut upper_then_lower_fixed = true;
    let mut lower_then_upper_fixed = true;
    for (w, fw) in points.iter().zip(&values) {
        let mut round_lower = ExtendedScalar::Top;
        let mut round_upper = ExtendedScalar::Eps;
        for (x, (u, l)) in points.iter().zip(upper.iter().zip(&lower)) {
            round_lower = round_lower.meet(&u.invert().otimes_dot(&x.residuate(w)?.invert()));
            round_upper = round_upper.oplus(&l.invert().otimes(&x.residuate(w)?));
        }
        if round_lower != *fw {
            upper_then_lower_fixed = false;
        }
        if round_upper != *fw {
            lower_then_upper_fixed = false;
        }
    }

    Ok(FixedPointReport {
        upper_then_lower_fixed,
        lower_then_upper_fixed,
        is_topical: crate::function::check_topical(f, probes)?.passed(),
        is_anti_topical: crate::function::check_anti_topical(f, probes)?.passed(),
        is_const_top: values.iter().all(ExtendedScalar::is_top),
        is_const_eps: values.iter().all(ExtendedScalar::is_eps),
    })
}
