//! Bipolar membership with validated separation witnesses, and support
//! sets of generated topical functions, over the rational semifield.

mod common;

use topical_core::{
    bar_polar_membership, bipolar_membership, default_lambda_sample, dual_polar_membership,
    polar_membership, phi_subdiff_membership, supp_membership, supp_reconstruct, support_function,
    ExtendedScalar, FiniteSet, ProbeSet, Vector,
};

fn random_set(rng: &mut rand_chacha::ChaCha8Rng, dim: usize, max_pts: usize) -> FiniteSet {
    let count = rand::Rng::gen_range(rng, 1..=max_pts);
    let pts = (0..count).map(|_| common::vector(rng, dim, false)).collect();
    FiniteSet::new(dim, pts).unwrap()
}

#[test]
fn bipolar_membership_matches_the_downward_hull() {
    let mut rng = common::rng(0xb1b0_0001);
    for _ in 0..120 {
        let dim = 1 + rand::Rng::gen_range(&mut rng, 0..3usize);
        let g = random_set(&mut rng, dim, 5);
        for _ in 0..40 {
            let x = common::vector(&mut rng, dim, true);
            // Over the rationals the two-step polar of a finite set is its
            // downward closure: membership means sitting below a generator.
            let member = bipolar_membership(&x, &g).unwrap().member;
            let below_some = g.points().iter().any(|p| x.leq(p).unwrap());
            assert_eq!(member, below_some, "x={:?}", x);
        }
    }
}

#[test]
fn bipolar_witnesses_separate_strictly() {
    let mut rng = common::rng(0xb1b0_0002);
    let mut rejected = 0;
    for _ in 0..120 {
        let dim = 1 + rand::Rng::gen_range(&mut rng, 0..3usize);
        let g = random_set(&mut rng, dim, 5);
        for _ in 0..25 {
            let x = common::vector(&mut rng, dim, false);
            let res = bipolar_membership(&x, &g).unwrap();
            if res.member {
                continue;
            }
            rejected += 1;
            let w = res.witness.expect("non-members carry a separation witness");
            // The witness sits in the polar while x escapes strictly.
            assert!(w.sigma_value.leq(&ExtendedScalar::unit()));
            assert!(polar_membership(&w.y, &g).unwrap());
            assert!(!w.x_over_y.leq(&ExtendedScalar::unit()));
            // Reported numbers re-derive from the witness vector.
            assert_eq!(support_function(&g, &w.y).unwrap(), w.sigma_value);
            assert_eq!(x.residuate(&w.y).unwrap(), w.x_over_y);
        }
    }
    assert!(rejected > 300, "separation was exercised too rarely: {rejected}");
}

#[test]
fn empty_sets_polar_to_everything_and_flag_themselves() {
    let g = FiniteSet::empty(2);
    assert!(g.is_empty());
    let x = Vector::from_ints(&[10, 10]);
    assert!(polar_membership(&x, &g).unwrap());
    assert!(bar_polar_membership(&x, &g).unwrap());
    let res = bipolar_membership(&Vector::bottom(2), &g).unwrap();
    assert!(res.empty_set);
    // σ_∅ ≡ ε, so the polar accepts even the bottom vector.
    assert_eq!(support_function(&g, &Vector::bottom(2)).unwrap(), ExtendedScalar::Eps);
}

#[test]
fn dual_and_bar_polars_coincide_on_random_sets() {
    let mut rng = common::rng(0xb1b0_0003);
    for _ in 0..100 {
        let dim = 1 + rand::Rng::gen_range(&mut rng, 0..3usize);
        let g = random_set(&mut rng, dim, 5);
        for _ in 0..30 {
            let x = common::vector(&mut rng, dim, true);
            assert_eq!(
                dual_polar_membership(&x, &g).unwrap(),
                bar_polar_membership(&x, &g).unwrap()
            );
        }
    }
}

#[test]
fn support_functions_of_nonempty_sets_saturate_at_the_bottom() {
    let mut rng = common::rng(0xb1b0_0004);
    for _ in 0..50 {
        let dim = 1 + rand::Rng::gen_range(&mut rng, 0..3usize);
        let g = random_set(&mut rng, dim, 4);
        assert!(support_function(&g, &Vector::bottom(dim)).unwrap().is_top());
        assert!(!polar_membership(&Vector::bottom(dim), &g).unwrap());
        // Scaling the argument twists the support value contravariantly.
        let y = common::vector(&mut rng, dim, false);
        let mu = common::finite(&mut rng);
        assert_eq!(
            support_function(&g, &y.scale(&mu).unwrap()).unwrap(),
            mu.invert().otimes_dot(&support_function(&g, &y).unwrap())
        );
    }
}

#[test]
fn support_set_members_minorize_and_reconstruct() {
    let mut rng = common::rng(0xb1b0_0005);
    for _ in 0..40 {
        let dim = 1 + rand::Rng::gen_range(&mut rng, 0..3usize);
        let f = common::fingen(&mut rng, dim, 4);
        let probes = ProbeSet::for_function(
            &f,
            dim,
            &[common::vector(&mut rng, dim, true)],
            &default_lambda_sample(),
        )
        .unwrap();
        // Generator points with finite unit-normalized coefficients give
        // known members: y ∈ Supp(f) iff x/y ≤ f(x) everywhere.
        for y in probes.points() {
            if y.is_bottom() {
                continue;
            }
            let claimed = supp_membership(&f, y, &probes).unwrap();
            let direct = probes
                .points()
                .iter()
                .all(|x| x.residuate(y).unwrap().leq(&f.eval(x).unwrap()));
            assert_eq!(claimed, direct);
        }
        // Reconstruction returns exactly f(x) at K-valued points.
        for x in probes.points() {
            let fx = f.eval(x).unwrap();
            if fx.is_top() {
                continue;
            }
            assert_eq!(supp_reconstruct(&f, x, &probes).unwrap(), fx);
        }
    }
}

#[test]
fn canonical_support_elements_attain_at_their_point() {
    let mut rng = common::rng(0xb1b0_0006);
    let mut attempted = 0;
    for _ in 0..60 {
        let dim = 1 + rand::Rng::gen_range(&mut rng, 0..3usize);
        let f = common::fingen(&mut rng, dim, 4);
        let probes = ProbeSet::for_function(
            &f,
            dim,
            &[common::vector(&mut rng, dim, true)],
            &default_lambda_sample(),
        )
        .unwrap();
        let x0 = common::vector(&mut rng, dim, false);
        let fx0 = f.eval(&x0).unwrap();
        if !fx0.is_finite() {
            continue;
        }
        attempted += 1;
        // y₀ = f(x₀)⁻¹ ⊗ x₀ supports f and attains f(x₀) there.
        let y0 = x0.scale(&fx0.invert()).unwrap();
        assert!(supp_membership(&f, &y0, &probes).unwrap());
        assert_eq!(x0.residuate(&y0).unwrap(), fx0);
        // Support membership at x₀ puts y₀ into the subdifferential there.
        assert!(phi_subdiff_membership(&f, &x0, &y0, &probes).unwrap());
    }
    assert!(attempted > 20, "too few finite-valued anchors sampled: {attempted}");
}
