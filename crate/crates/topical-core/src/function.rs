//! Function handles over Kⁿ and the topical / anti-topical checkers.
//!
//! A function f : X → K̄ is *topical* when it is increasing and commutes
//! with scaling (f(λ ⊗ x) = λ ⊗ f(x) for λ ∈ K), and *anti-topical* when it
//! is decreasing and inverts scaling (f(λ ⊗ x) = λ⁻¹ ⊗̇ f(x)).  Both
//! classes admit pointwise inequality characterizations built from the
//! residual x/y:
//!
//! * f is topical  ⇔  f(inf X) = ε and f(y) ⊗ (x/y) ≤ f(x) for all x, y;
//! * f is anti-topical  ⇔  f(inf X) = ⊤ and f(y) ⊗̇ (x/y)⁻¹ ≥ f(x) for all
//!   x, y (equivalently f(x) ⊗ (x/y) ≤ f(y), by transposition).
//!
//! Dropping the value condition at the bottom vector enlarges each class by
//! exactly one constant: the minorant law alone characterizes
//! {topical} ∪ {≡ ⊤}, and the majorant law {anti-topical} ∪ {≡ ε}.
//!
//! Checks quantified over "all x" are exact on an exhaustive probe set (the
//! whole Boolean cube) and sampled otherwise; every outcome records which.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::ExtendedScalar;
use crate::vector::{boolean_cube, cube_index, Vector};

/// Largest cube dimension for which functions are enumerated exhaustively
/// (3^(2^n) functions; n = 2 already gives 81).
pub const MAX_EXHAUSTIVE_DIM: usize = 2;

/// A function given as a join of scaled residuals
/// f(x) = ⊕_j c_j ⊗ (x / y_j), with y_j ≠ inf X and c_j ≠ ε.
///
/// Every such join is topical by construction.  An empty generator list
/// denotes the constant ε (the empty join), which is also topical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGenTopicalFn {
    dim: usize,
    generators: Vec<(Vector, ExtendedScalar)>,
}

impl FinGenTopicalFn {
    pub fn new(dim: usize, generators: Vec<(Vector, ExtendedScalar)>) -> Result<Self> {
        for (y, c) in &generators {
            if y.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: y.dim() });
            }
            if y.is_bottom() {
                return Err(Error::Precondition("generator points must not be the bottom vector"));
            }
            if c.is_eps() {
                return Err(Error::Precondition("generator coefficients must not be eps"));
            }
        }
        Ok(FinGenTopicalFn { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[(Vector, ExtendedScalar)] {
        &self.generators
    }

    pub fn eval(&self, x: &Vector) -> Result<ExtendedScalar> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        let mut acc = ExtendedScalar::Eps;
        for (y, c) in &self.generators {
            acc = acc.oplus(&c.otimes(&x.residuate(y)?));
        }
        Ok(acc)
    }
}

/// A function tabulated over the Boolean cube {ε, e}ⁿ, with values in the
/// Boolean enlargement {ε, e, ⊤}.  The value vector is indexed in the mask
/// order of [`boolean_cube`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabulatedFn {
    dim: usize,
    values: Vec<ExtendedScalar>,
}

impl TabulatedFn {
    pub fn new(dim: usize, values: Vec<ExtendedScalar>) -> Result<Self> {
        if values.len() != 1 << dim {
            return Err(Error::Precondition("tabulated function needs one value per cube point"));
        }
        for v in &values {
            if !(v.is_eps() || v.is_top() || v.is_unit()) {
                return Err(Error::Precondition(
                    "tabulated values must lie in the Boolean enlargement {eps, e, top}",
                ));
            }
        }
        Ok(TabulatedFn { dim, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[ExtendedScalar] {
        &self.values
    }

    pub fn domain(&self) -> Vec<Vector> {
        boolean_cube(self.dim)
    }

    pub fn eval(&self, x: &Vector) -> Result<ExtendedScalar> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        Ok(self.values[cube_index(x)?].clone())
    }

    /// All 3^(2^dim) functions on the cube, in a fixed order: function k
    /// assigns to cube point j the chain element (k / 3^j) mod 3, with
    /// 0 ↦ ε, 1 ↦ e, 2 ↦ ⊤.
    pub fn enumerate_all(dim: usize) -> Result<Vec<TabulatedFn>> {
        if dim > MAX_EXHAUSTIVE_DIM {
            return Err(Error::DomainTooLarge { dim, max: MAX_EXHAUSTIVE_DIM });
        }
        let points = 1usize << dim;
        let total = 3usize.pow(points as u32);
        let mut fns = Vec::with_capacity(total);
        for k in 0..total {
            let mut rest = k;
            let values = (0..points)
                .map(|_| {
                    let digit = rest % 3;
                    rest /= 3;
                    match digit {
                        0 => ExtendedScalar::Eps,
                        1 => ExtendedScalar::unit(),
                        _ => ExtendedScalar::Top,
                    }
                })
                .collect();
            fns.push(TabulatedFn { dim, values });
        }
        Ok(fns)
    }
}

/// Any function the library can evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnHandle {
    FinGen(FinGenTopicalFn),
    Table(TabulatedFn),
    /// Pointwise inverse of another handle.
    Inverse(Box<FnHandle>),
    /// Constant function.
    Const(ExtendedScalar),
}

/// What is known about a handle from its construction alone; drives the
/// exact closed forms of the conjugation module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnShape {
    /// Topical by construction (a join of scaled residuals).
    Topical,
    /// Pointwise inverse of a construction-topical handle.
    AntiTopical,
    /// Constant with the given value.
    Constant(ExtendedScalar),
    /// Nothing known statically (tabulated data).
    Opaque,
}

impl FnHandle {
    pub fn constant(c: ExtendedScalar) -> Self {
        FnHandle::Const(c)
    }

    pub fn inverse(f: FnHandle) -> Self {
        FnHandle::Inverse(Box::new(f))
    }

    /// Dimension of the domain; `None` for constants, which fit any.
    pub fn dim(&self) -> Option<usize> {
        match self {
            FnHandle::FinGen(g) => Some(g.dim()),
            FnHandle::Table(t) => Some(t.dim()),
            FnHandle::Inverse(inner) => inner.dim(),
            FnHandle::Const(_) => None,
        }
    }

    pub fn eval(&self, x: &Vector) -> Result<ExtendedScalar> {
        match self {
            FnHandle::FinGen(g) => g.eval(x),
            FnHandle::Table(t) => t.eval(x),
            FnHandle::Inverse(inner) => Ok(inner.eval(x)?.invert()),
            FnHandle::Const(c) => Ok(c.clone()),
        }
    }

    pub fn shape(&self) -> FnShape {
        match self {
            FnHandle::FinGen(g) if g.generators().is_empty() => {
                FnShape::Constant(ExtendedScalar::Eps)
            }
            FnHandle::FinGen(_) => FnShape::Topical,
            FnHandle::Table(_) => FnShape::Opaque,
            FnHandle::Const(c) => FnShape::Constant(c.clone()),
            FnHandle::Inverse(inner) => match inner.shape() {
                FnShape::Topical => FnShape::AntiTopical,
                FnShape::AntiTopical => FnShape::Topical,
                FnShape::Constant(c) => FnShape::Constant(c.invert()),
                FnShape::Opaque => FnShape::Opaque,
            },
        }
    }

    /// Generator points reachable through the handle, used by the probe
    /// policy.
    pub fn generator_points(&self) -> Vec<&Vector> {
        match self {
            FnHandle::FinGen(g) => g.generators().iter().map(|(y, _)| y).collect(),
            FnHandle::Inverse(inner) => inner.generator_points(),
            _ => Vec::new(),
        }
    }
}

/// min{x/y, d}: the elementary affine minorant determined by (y, d).
/// Division by the bottom vector gives the constant d; d = ⊤ gives back
/// x/y.
pub fn s_yd(y: &Vector, d: &ExtendedScalar, x: &Vector) -> Result<ExtendedScalar> {
    Ok(x.residuate(y)?.meet(d))
}

/// max{(x/y)⁻¹, d}: the elementary affine majorant determined by (y, d).
/// d = ε gives (x/y)⁻¹; d = ⊤ gives the constant ⊤.
pub fn sbar_yd(y: &Vector, d: &ExtendedScalar, x: &Vector) -> Result<ExtendedScalar> {
    Ok(x.residuate(y)?.invert().oplus(d))
}

/// A set of probe points, always containing the bottom vector.  The
/// `exhaustive` flag records that the points are the whole domain (the full
/// Boolean cube), which upgrades sampled checks to exact ones.
#[derive(Debug, Clone)]
pub struct ProbeSet {
    dim: usize,
    points: Vec<Vector>,
    exhaustive: bool,
}

impl ProbeSet {
    /// The whole Boolean cube as a probe set.
    pub fn boolean_exhaustive(dim: usize) -> Result<Self> {
        if dim == 0 || dim > 16 {
            return Err(Error::Precondition("cube dimension must lie in 1..=16"));
        }
        Ok(ProbeSet { dim, points: boolean_cube(dim), exhaustive: true })
    }

    /// A sampled probe set from explicit points; the bottom vector is added
    /// if missing and duplicates are dropped (first occurrence wins).
    pub fn sampled(dim: usize, points: Vec<Vector>) -> Result<Self> {
        let mut set = ProbeSet { dim, points: Vec::with_capacity(points.len() + 1), exhaustive: false };
        set.push(Vector::bottom(dim));
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
            set.push(p);
        }
        Ok(set)
    }

    /// The standard probe policy for a handle: the bottom vector, every
    /// generator point, every generator scaled by the sample factors, and
    /// the user-supplied points.
    pub fn for_function(
        f: &FnHandle,
        dim: usize,
        user_points: &[Vector],
        lambdas: &[ExtendedScalar],
    ) -> Result<Self> {
        let mut pts: Vec<Vector> = Vec::new();
        for y in f.generator_points() {
            pts.push(y.clone());
            for lam in lambdas {
                pts.push(y.scale(lam)?);
            }
        }
        pts.extend_from_slice(user_points);
        Self::sampled(dim, pts)
    }

    fn push(&mut self, p: Vector) {
        if !self.points.contains(&p) {
            self.points.push(p);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    /// Scalars d against which the affine-form cross-checks run: the whole
    /// chain, plus a few finite non-unit values in sampled mode.
    fn d_sample(&self) -> Vec<ExtendedScalar> {
        let mut d = alloc::vec![ExtendedScalar::Eps, ExtendedScalar::unit(), ExtendedScalar::Top];
        if !self.exhaustive {
            d.push(ExtendedScalar::int(1));
            d.push(ExtendedScalar::int(-1));
            d.push(ExtendedScalar::ratio(1, 2));
        }
        d
    }
}

/// The default scaling sample used by the probe policy: ε, e and a few
/// finite values on both sides of e.
pub fn default_lambda_sample() -> Vec<ExtendedScalar> {
    alloc::vec![
        ExtendedScalar::Eps,
        ExtendedScalar::unit(),
        ExtendedScalar::int(1),
        ExtendedScalar::int(-1),
        ExtendedScalar::int(2),
        ExtendedScalar::int(-2),
        ExtendedScalar::ratio(1, 2),
        ExtendedScalar::ratio(-1, 2),
    ]
}

/// Whether a verdict is exact or only as strong as the sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strength {
    /// The probe set was the whole domain.
    Exhaustive,
    /// The probe set was a sample; a pass is evidence, not proof.
    Sampled,
}

/// A concrete violation of a pointwise law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub law: &'static str,
    pub x: Vector,
    pub y: Option<Vector>,
    pub d: Option<ExtendedScalar>,
    pub lhs: ExtendedScalar,
    pub rhs: ExtendedScalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample(Box<Counterexample>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub strength: Strength,
    pub verdict: Verdict,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass)
    }

    fn strength_of(probes: &ProbeSet) -> Strength {
        if probes.is_exhaustive() {
            Strength::Exhaustive
        } else {
            Strength::Sampled
        }
    }
}

fn fail(
    probes: &ProbeSet,
    law: &'static str,
    x: &Vector,
    y: Option<&Vector>,
    d: Option<&ExtendedScalar>,
    lhs: ExtendedScalar,
    rhs: ExtendedScalar,
) -> CheckOutcome {
    CheckOutcome {
        strength: CheckOutcome::strength_of(probes),
        verdict: Verdict::Counterexample(Box::new(Counterexample {
            law,
            x: x.clone(),
            y: y.cloned(),
            d: d.cloned(),
            lhs,
            rhs,
        })),
    }
}

fn pass(probes: &ProbeSet) -> CheckOutcome {
    CheckOutcome { strength: CheckOutcome::strength_of(probes), verdict: Verdict::Pass }
}

/// Checks the topical characterization over the probe set: ε at the bottom
/// vector and f(y) ⊗ (x/y) ≤ f(x) on all probe pairs, cross-checked in the
/// affine form f(y) ⊗ min{x/y, d} ≤ f(x).
///
/// Exact when the probes are exhaustive; otherwise a sampled verdict.
pub fn check_topical(f: &FnHandle, probes: &ProbeSet) -> Result<CheckOutcome> {
    let bottom = Vector::bottom(probes.dim());
    let at_bottom = f.eval(&bottom)?;
    if !at_bottom.is_eps() {
        return Ok(fail(
            probes,
            "a topical function takes the value eps at the bottom vector",
            &bottom,
            None,
            None,
            at_bottom,
            ExtendedScalar::Eps,
        ));
    }
    let values: Vec<ExtendedScalar> =
        probes.points().iter().map(|p| f.eval(p)).collect::<Result<_>>()?;
    for (y, fy) in probes.points().iter().zip(&values) {
        for (x, fx) in probes.points().iter().zip(&values) {
            let lhs = fy.otimes(&x.residuate(y)?);
            if !lhs.leq(fx) {
                return Ok(fail(
                    probes,
                    "scaled-residual minorant exceeded the function",
                    x,
                    Some(y),
                    None,
                    lhs,
                    fx.clone(),
                ));
            }
            for d in probes.d_sample() {
                let lhs = fy.otimes(&s_yd(y, &d, x)?);
                if !lhs.leq(fx) {
                    return Ok(fail(
                        probes,
                        "affine minorant exceeded the function",
                        x,
                        Some(y),
                        Some(&d),
                        lhs,
                        fx.clone(),
                    ));
                }
            }
        }
    }
    Ok(pass(probes))
}

/// Checks the anti-topical characterization over the probe set: ⊤ at the
/// bottom vector and f(y) ⊗̇ (x/y)⁻¹ ≥ f(x) on all probe pairs.  The two
/// transposed forms f(x) ⊗ (x/y) ≤ f(y) and f(y)/(x/y) ≥ f(x) are computed
/// independently; the three must agree pair by pair, and any disagreement
/// is reported as an internal inconsistency rather than a verdict.
pub fn check_anti_topical(f: &FnHandle, probes: &ProbeSet) -> Result<CheckOutcome> {
    let bottom = Vector::bottom(probes.dim());
    let at_bottom = f.eval(&bottom)?;
    if !at_bottom.is_top() {
        return Ok(fail(
            probes,
            "an anti-topical function takes the value top at the bottom vector",
            &bottom,
            None,
            None,
            at_bottom,
            ExtendedScalar::Top,
        ));
    }
    let values: Vec<ExtendedScalar> =
        probes.points().iter().map(|p| f.eval(p)).collect::<Result<_>>()?;
    for (y, fy) in probes.points().iter().zip(&values) {
        for (x, fx) in probes.points().iter().zip(&values) {
            let r = x.residuate(y)?;
            let majorant_holds = fx.leq(&fy.otimes_dot(&r.invert()));
            let transposed_holds = fx.otimes(&r).leq(fy);
            let residual_holds = fx.leq(&fy.residual(&r));
            if majorant_holds != transposed_holds || majorant_holds != residual_holds {
                return Err(Error::Inconsistency(
                    "the three anti-topical forms disagreed on a probe pair",
                ));
            }
            if !majorant_holds {
                return Ok(fail(
                    probes,
                    "inverted-residual majorant fell below the function",
                    x,
                    Some(y),
                    None,
                    fx.clone(),
                    fy.otimes_dot(&r.invert()),
                ));
            }
        }
    }
    Ok(pass(probes))
}

/// Direct definition of topicality over an explicit domain and scaling
/// sample: increasing on comparable pairs, and f(λ ⊗ x) = λ ⊗ f(x).
/// Exact when the domain is the whole Boolean cube and the sample is {ε, e}.
pub fn is_topical_on(
    f: &FnHandle,
    domain: &[Vector],
    lambdas: &[ExtendedScalar],
) -> Result<bool> {
    for x in domain {
        let fx = f.eval(x)?;
        for y in domain {
            if x.leq(y)? && !fx.leq(&f.eval(y)?) {
                return Ok(false);
            }
        }
        for lam in lambdas {
            if f.eval(&x.scale(lam)?)? != lam.otimes(&fx) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Direct definition of anti-topicality: decreasing on comparable pairs,
/// and f(λ ⊗ x) = λ⁻¹ ⊗̇ f(x).
pub fn is_anti_topical_on(
    f: &FnHandle,
    domain: &[Vector],
    lambdas: &[ExtendedScalar],
) -> Result<bool> {
    for x in domain {
        let fx = f.eval(x)?;
        for y in domain {
            if x.leq(y)? && !f.eval(y)?.leq(&fx) {
                return Ok(false);
            }
        }
        for lam in lambdas {
            if f.eval(&x.scale(lam)?)? != lam.invert().otimes_dot(&fx) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the minorant-law classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorantClass {
    Topical,
    ConstTop,
    Neither,
}

/// Outcome of the majorant-law classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorantClass {
    AntiTopical,
    ConstEps,
    Neither,
}

/// Classifies f by the minorant law f(y) ⊗ (x/y) ≤ f(x) alone: the
/// functions satisfying it on the whole domain are exactly the topical
/// ones together with the constant ⊤.
pub fn classify_minorant_law(f: &FnHandle, probes: &ProbeSet) -> Result<MinorantClass> {
    let values: Vec<ExtendedScalar> =
        probes.points().iter().map(|p| f.eval(p)).collect::<Result<_>>()?;
    for (y, fy) in probes.points().iter().zip(&values) {
        for (x, fx) in probes.points().iter().zip(&values) {
            if !fy.otimes(&x.residuate(y)?).leq(fx) {
                return Ok(MinorantClass::Neither);
            }
        }
    }
    if values.iter().all(ExtendedScalar::is_top) {
        Ok(MinorantClass::ConstTop)
    } else {
        Ok(MinorantClass::Topical)
    }
}

/// Classifies f by the majorant law f(y) ⊗̇ (x/y)⁻¹ ≥ f(x) alone: satisfied
/// on the whole domain exactly by the anti-topical functions together with
/// the constant ε.
pub fn classify_majorant_law(f: &FnHandle, probes: &ProbeSet) -> Result<MajorantClass> {
    let values: Vec<ExtendedScalar> =
        probes.points().iter().map(|p| f.eval(p)).collect::<Result<_>>()?;
    for (y, fy) in probes.points().iter().zip(&values) {
        for (x, fx) in probes.points().iter().zip(&values) {
            if !fx.leq(&fy.otimes_dot(&x.residuate(y)?.invert())) {
                return Ok(MajorantClass::Neither);
            }
        }
    }
    if values.iter().all(ExtendedScalar::is_eps) {
        Ok(MajorantClass::ConstEps)
    } else {
        Ok(MajorantClass::AntiTopical)
    }
}
