//! The free semimodule Kⁿ and its extended residuation.
//!
//! Vectors take coordinates in the base semifield K only — never ⊤ — so the
//! bottom vector is the all-ε point `inf X`.  Scaling is by base scalars
//! (scaling by ⊤ has no consistent meaning here and is rejected).  The
//! residual x/y = sup{λ ∈ K̄ : λ ⊗ y ≤ x} is extended so that the sup is
//! taken in the enlargement: dividing by the bottom vector yields ⊤, and
//! everything else lands in K.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::ExtendedScalar;

/// A point of Kⁿ: fixed dimension, coordinates in {ε} ∪ finite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<ExtendedScalar>,
}

impl Vector {
    /// Builds a vector, rejecting ⊤ coordinates and dimension zero.
    pub fn new(coords: Vec<ExtendedScalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Precondition("vectors must have dimension at least 1"));
        }
        if coords.iter().any(ExtendedScalar::is_top) {
            return Err(Error::TopOperand("vector coordinate"));
        }
        Ok(Vector { coords })
    }

    /// The bottom vector inf X = (ε, …, ε).
    pub fn bottom(dim: usize) -> Self {
        Vector { coords: vec![ExtendedScalar::Eps; dim.max(1)] }
    }

    /// Convenience constructor from integers.
    pub fn from_ints(coords: &[i64]) -> Self {
        Vector { coords: coords.iter().map(|&n| ExtendedScalar::int(n)).collect() }
    }

    /// Convenience constructor where `None` marks an ε coordinate.
    pub fn from_opt_ints(coords: &[Option<i64>]) -> Self {
        Vector {
            coords: coords
                .iter()
                .map(|c| match c {
                    Some(n) => ExtendedScalar::int(*n),
                    None => ExtendedScalar::Eps,
                })
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ExtendedScalar] {
        &self.coords
    }

    pub fn is_bottom(&self) -> bool {
        self.coords.iter().all(ExtendedScalar::is_eps)
    }

    pub fn is_all_finite(&self) -> bool {
        self.coords.iter().all(ExtendedScalar::is_finite)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() })
        }
    }

    /// Coordinatewise join (⊕ = max).
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        })
    }

    /// Coordinatewise order.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.coords.iter().zip(&other.coords).all(|(a, b)| a.leq(b)))
    }

    /// Scalar action λ ⊗ x for λ ∈ K.  Scaling by ε collapses to the bottom
    /// vector; scaling by ⊤ is rejected.
    pub fn scale(&self, lam: &ExtendedScalar) -> Result<Self> {
        if lam.is_top() {
            return Err(Error::TopOperand("scaling factor"));
        }
        Ok(Vector { coords: self.coords.iter().map(|c| lam.otimes(c)).collect() })
    }

    /// Extended residual x/y = sup{λ : λ ⊗ y ≤ x}.
    ///
    /// Equals ⊤ exactly when y is the bottom vector; otherwise it is the
    /// minimum of the coordinate residuals x_i / y_i over the coordinates
    /// where y_i ≠ ε, which always lies in K.
    pub fn residuate(&self, y: &Self) -> Result<ExtendedScalar> {
        self.check_dim(y)?;
        let mut acc: Option<ExtendedScalar> = None;
        for (xi, yi) in self.coords.iter().zip(&y.coords) {
            if yi.is_eps() {
                continue;
            }
            let r = xi.residual(yi);
            acc = Some(match acc {
                None => r,
                Some(m) => m.meet(&r),
            });
        }
        Ok(acc.unwrap_or(ExtendedScalar::Top))
    }

    /// Coordinatewise inverse, defined only for all-finite vectors (the
    /// inverse of an ε coordinate would be ⊤, which vectors exclude).
    pub fn invert_finite(&self) -> Result<Self> {
        if !self.is_all_finite() {
            return Err(Error::Precondition("coordinatewise inverse requires an all-finite vector"));
        }
        Ok(Vector { coords: self.coords.iter().map(ExtendedScalar::invert).collect() })
    }
}

/// The bilinear min-plus pairing inf_i (x_i ⊗ y_i).
///
/// For all-finite y this recovers the residual through
/// x/y = pairing(x, y⁻¹).
pub fn min_plus_coupling(x: &Vector, y: &Vector) -> Result<ExtendedScalar> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), found: y.dim() });
    }
    let mut acc: Option<ExtendedScalar> = None;
    for (xi, yi) in x.coords().iter().zip(y.coords()) {
        let p = xi.otimes(yi);
        acc = Some(match acc {
            None => p,
            Some(m) => m.meet(&p),
        });
    }
    Ok(acc.expect("vectors are nonempty"))
}

/// The 2ⁿ points of the Boolean cube {ε, e}ⁿ, in mask order: bit i of the
/// index set means coordinate i equals e.
pub fn boolean_cube(dim: usize) -> Vec<Vector> {
    let mut points = Vec::with_capacity(1 << dim);
    for mask in 0..(1u32 << dim) {
        let coords = (0..dim)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    ExtendedScalar::unit()
                } else {
                    ExtendedScalar::Eps
                }
            })
            .collect();
        points.push(Vector { coords });
    }
    points
}

/// Index of a Boolean-cube point in the enumeration of [`boolean_cube`].
pub(crate) fn cube_index(x: &Vector) -> Result<usize> {
    let mut mask = 0usize;
    for (i, c) in x.coords().iter().enumerate() {
        if c.is_unit() {
            mask |= 1 << i;
        } else if !c.is_eps() {
            return Err(Error::NotBooleanPoint);
        }
    }
    Ok(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExtendedScalar as S;

    fn v(coords: &[Option<i64>]) -> Vector {
        Vector::from_opt_ints(coords)
    }

    /// Certifies that `lam` is sup{λ : λ ⊗ y ≤ x} without using the
    /// residuation code path: `lam ⊗ y ≤ x` must hold, and no slightly
    /// larger base scalar may satisfy it.
    fn assert_is_residual(x: &Vector, y: &Vector, lam: &S) {
        match lam {
            S::Top => {
                // Only divisions by the bottom vector may reach ⊤.
                assert!(y.is_bottom());
            }
            S::Finite(q) => {
                assert!(y.scale(lam).unwrap().leq(x).unwrap(), "claimed residual does not scale under x");
                let bump = S::Finite(q + num_rational::BigRational::new(1.into(), 1000.into()));
                assert!(
                    !y.scale(&bump).unwrap().leq(x).unwrap(),
                    "a larger scalar still fits; claimed residual is not the sup"
                );
            }
            S::Eps => {
                // ε ⊗ y ≤ x always; check that no small finite scalar fits.
                for n in [-1000i64, -100, -10, 0, 10] {
                    assert!(!y.scale(&S::int(n)).unwrap().leq(x).unwrap());
                }
            }
        }
    }

    #[test]
    fn construction_rules() {
        assert!(Vector::new(vec![S::Eps, S::int(3)]).is_ok());
        assert!(Vector::new(vec![]).is_err());
        assert!(Vector::new(vec![S::int(1), S::Top]).is_err());
    }

    #[test]
    fn join_and_order() {
        let a = v(&[Some(1), None, Some(-2)]);
        let b = v(&[Some(0), Some(5), Some(-1)]);
        assert_eq!(a.join(&b).unwrap(), v(&[Some(1), Some(5), Some(-1)]));
        assert!(a.leq(&a.join(&b).unwrap()).unwrap());
        assert!(Vector::bottom(3).leq(&a).unwrap());
        assert!(a.join(&v(&[Some(0)])).is_err());
    }

    #[test]
    fn scaling() {
        let a = v(&[Some(1), None]);
        assert_eq!(a.scale(&S::int(2)).unwrap(), v(&[Some(3), None]));
        assert_eq!(a.scale(&S::Eps).unwrap(), Vector::bottom(2));
        assert!(a.scale(&S::Top).is_err());
        // ε-scaling any vector gives the bottom vector, which is the fixed
        // point of every base scaling.
        assert_eq!(Vector::bottom(2).scale(&S::int(7)).unwrap(), Vector::bottom(2));
    }

    #[test]
    fn residual_basic_value() {
        let x = v(&[Some(1), Some(3)]);
        let y = v(&[Some(0), Some(2)]);
        let r = x.residuate(&y).unwrap();
        assert_eq!(r, S::int(1));
        assert_is_residual(&x, &y, &r);
    }

    #[test]
    fn residual_skips_eps_divisor_coordinates() {
        let x = v(&[Some(4), None, Some(0)]);
        let y = v(&[Some(1), None, Some(-2)]);
        let r = x.residuate(&y).unwrap();
        assert_eq!(r, S::int(2));
        assert_is_residual(&x, &y, &r);
    }

    #[test]
    fn residual_eps_numerator_coordinate_forces_eps() {
        let x = v(&[None, Some(3)]);
        let y = v(&[Some(0), Some(0)]);
        let r = x.residuate(&y).unwrap();
        assert_eq!(r, S::Eps);
        assert_is_residual(&x, &y, &r);
    }

    #[test]
    fn residual_by_bottom_is_top() {
        let x = v(&[Some(1), Some(3)]);
        assert_eq!(x.residuate(&Vector::bottom(2)).unwrap(), S::Top);
        assert_eq!(Vector::bottom(2).residuate(&Vector::bottom(2)).unwrap(), S::Top);
    }

    #[test]
    fn bottom_over_nonbottom_is_eps() {
        let y = v(&[Some(1), None]);
        assert_eq!(Vector::bottom(2).residuate(&y).unwrap(), S::Eps);
    }

    #[test]
    fn self_residual_is_unit() {
        for x in [v(&[Some(2), Some(-1)]), v(&[None, Some(0)]), v(&[Some(7)])] {
            assert_eq!(x.residuate(&x).unwrap(), S::unit());
        }
    }

    /// (x/y) ⊗ y ≤ x whenever y is not the bottom vector.
    #[test]
    fn residual_scales_back_below() {
        let cases = [
            (v(&[Some(1), Some(3)]), v(&[Some(0), Some(2)])),
            (v(&[None, Some(3)]), v(&[Some(0), Some(1)])),
            (v(&[Some(4), None]), v(&[Some(1), None])),
        ];
        for (x, y) in cases {
            let r = x.residuate(&y).unwrap();
            assert!(y.scale(&r).unwrap().leq(&x).unwrap());
        }
    }

    /// λ ⊗ y ≤ x ⇔ λ ≤ x/y for base scalars λ and nonbottom y.
    #[test]
    fn residual_adjunction() {
        let x = v(&[Some(1), Some(3)]);
        let y = v(&[Some(0), Some(2)]);
        let r = x.residuate(&y).unwrap();
        for n in [-30i64, -2, 0, 1, 2, 30] {
            let lam = S::int(n);
            assert_eq!(y.scale(&lam).unwrap().leq(&x).unwrap(), lam.leq(&r));
        }
        assert_eq!(y.scale(&S::Eps).unwrap().leq(&x).unwrap(), S::Eps.leq(&r));
    }

    /// x/(μ ⊗ y) = μ⁻¹ ⊗̇ (x/y) for every base μ, including μ = ε and
    /// divisions by the bottom vector.
    #[test]
    fn residual_twists_by_inverse_scaling() {
        let xs = [v(&[Some(1), Some(3)]), v(&[None, Some(0)]), Vector::bottom(2)];
        let ys = [v(&[Some(0), Some(2)]), v(&[None, Some(1)]), Vector::bottom(2)];
        let mus = [S::Eps, S::int(-3), S::unit(), S::ratio(5, 2)];
        for x in &xs {
            for y in &ys {
                for mu in &mus {
                    let lhs = x.residuate(&y.scale(mu).unwrap()).unwrap();
                    let rhs = mu.invert().otimes_dot(&x.residuate(y).unwrap());
                    assert_eq!(lhs, rhs, "failed at x={x:?}, y={y:?}, mu={mu}");
                }
            }
        }
    }

    #[test]
    fn min_plus_pairing_values() {
        let x = v(&[Some(1), Some(3)]);
        let y = v(&[Some(0), Some(-2)]);
        assert_eq!(min_plus_coupling(&x, &y).unwrap(), S::int(1));
        let with_eps = v(&[None, Some(3)]);
        assert_eq!(min_plus_coupling(&with_eps, &y).unwrap(), S::Eps);
        // Symmetry.
        assert_eq!(min_plus_coupling(&x, &y).unwrap(), min_plus_coupling(&y, &x).unwrap());
    }

    /// x/y agrees with the pairing against y⁻¹ when y is all-finite.
    #[test]
    fn residual_via_pairing() {
        let xs = [v(&[Some(1), Some(3)]), v(&[None, Some(0)]), v(&[Some(-2), Some(-2)])];
        let y = v(&[Some(0), Some(2)]);
        for x in &xs {
            assert_eq!(
                x.residuate(&y).unwrap(),
                min_plus_coupling(x, &y.invert_finite().unwrap()).unwrap()
            );
        }
        assert!(v(&[None, Some(1)]).invert_finite().is_err());
    }

    #[test]
    fn boolean_cube_enumeration() {
        let pts = boolean_cube(2);
        assert_eq!(pts.len(), 4);
        assert!(pts[0].is_bottom());
        assert_eq!(pts[1], v(&[Some(0), None]));
        assert_eq!(pts[2], v(&[None, Some(0)]));
        assert_eq!(pts[3], v(&[Some(0), Some(0)]));
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(cube_index(p).unwrap(), i);
        }
        assert!(cube_index(&v(&[Some(1), None])).is_err());
    }
}
