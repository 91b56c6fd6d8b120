//! The two families of automorphisms of `U^alpha` and the translation
//! operators they induce.
//!
//! `phi_z2` (anchored at the base point's second coordinate) is a holomorphic
//! automorphism that moves `(z1, z2)` to `(f_alpha(z), 0)`; `phi_z1` (a disc
//! Mobius map in the first coordinate with a positive square-root correction
//! in the second) is an involution that is *not* holomorphic unless
//! `alpha = 1`. Chaining them recenters any point at the origin, which is
//! what every kernel estimate downstream leans on.
//!
//! The correction factor in the second coordinate of `phi_z1` is a positive
//! real built from four near-cancelling factors; it is evaluated through
//! logs of moduli. Jacobians here are holomorphic Jacobian determinants with
//! their true signs, so transport operators compose and invert pointwise,
//! not just in modulus.

use std::sync::Arc;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::domain::{kernel_diag, require_interior, DomainParam, Point};
use crate::error::{Error, Result};
use crate::num::{C, Real};

/// Image of a point under a mapping together with the holomorphic Jacobian
/// determinant at the evaluation point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MapEval<T> {
    pub image: Point<T>,
    pub jacobian: C<T>,
}

/// `f_alpha(z) = z1 / (1 - |z2|^2)^(alpha/2)`, the disc coordinate the
/// recentering Mobius map is anchored at. Lands in the unit disc for
/// interior `z`.
pub fn f_alpha<T: Real>(z: &Point<T>, p: &DomainParam<T>) -> C<T> {
    let denom = (T::one() - z.z2.norm_sqr()).powf(p.alpha() / T::of(2.0));
    z.z1 / denom
}

/// The holomorphic automorphism built from the base point's `z2` coordinate:
///
/// ```text
/// w -> ( w1 (sqrt(1-|b|^2) / (1 - conj(b) w2))^alpha , (b - w2)/(1 - conj(b) w2) )
/// ```
///
/// with `b = base.z2`. Involutive, sends `base` to `(f_alpha(base), 0)`.
pub fn phi_z2<T: Real>(base: &Point<T>, w: &Point<T>, p: &DomainParam<T>) -> Result<MapEval<T>> {
    require_interior(base, p)?;
    require_interior(w, p)?;
    let b = base.z2;
    let one = Complex::new(T::one(), T::zero());
    let x = T::one() - b.norm_sqr();
    let denom = one - b.conj() * w.z2;
    let ratio = Complex::new(x.sqrt(), T::zero()) / denom;
    let first = w.z1 * ratio.powf(p.alpha());
    let second = (b - w.z2) / denom;
    // J = d(first)/dw1 * d(second)/dw2; the off-diagonal d(first)/dw2 does
    // not enter because d(second)/dw1 = 0.
    let d_first = ratio.powf(p.alpha());
    let d_second = -Complex::new(x, T::zero()) / (denom * denom);
    Ok(MapEval {
        image: Point::new(first, second),
        jacobian: d_first * d_second,
    })
}

/// The positive square-root correction in the second coordinate of
/// [`phi_z1`], computed through logs of moduli.
fn mobius_correction<T: Real>(w1_abs: T, m_abs: T, p: &DomainParam<T>) -> T {
    debug_assert!(w1_abs < T::one() && m_abs < T::one());
    let two_over_a = T::of(2.0) / p.alpha();
    let one = T::one();
    let half = T::of(0.5);
    if w1_abs == T::zero() && m_abs == T::zero() {
        return one;
    }
    let ln_corr = half
        * ((one - w1_abs * w1_abs).ln() + (one - m_abs.powf(two_over_a)).ln()
            - (one - w1_abs.powf(two_over_a)).ln()
            - (one - m_abs * m_abs).ln());
    ln_corr.exp()
}

/// The non-holomorphic involution anchored at a disc parameter `c`:
/// first coordinate the Mobius map `(c - w1)/(1 - conj(c) w1)`, second
/// coordinate `w2` times a positive correction keeping the image inside the
/// domain.
pub fn phi_z1<T: Real>(c: C<T>, w: &Point<T>, p: &DomainParam<T>) -> Result<MapEval<T>> {
    if !(c.norm() < T::one()) {
        return Err(Error::ParameterOutsideDisc(c.norm().as_f64()));
    }
    require_interior(w, p)?;
    let one = Complex::new(T::one(), T::zero());
    let x = T::one() - c.norm_sqr();
    let denom = one - c.conj() * w.z1;
    let m = (c - w.z1) / denom;
    let corr = mobius_correction(w.z1.norm(), m.norm(), p);
    let prefactor = Complex::new(x.sqrt(), T::zero()) / denom;
    let second = w.z2 * prefactor * corr;
    // d(m)/dw1 = -(1-|c|^2)/(1 - conj(c) w1)^2; the second coordinate is
    // linear in w2 with slope prefactor * corr.
    let d_first = -Complex::new(x, T::zero()) / (denom * denom);
    let d_second = prefactor * corr;
    Ok(MapEval {
        image: Point::new(m, second),
        jacobian: d_first * d_second,
    })
}

/// The recentering composite `phi_{f_alpha(z)} ( phi_{z2}(w) )`: sends
/// `w = z` to the origin. The Jacobian is the chain-rule product.
pub fn center_map<T: Real>(z: &Point<T>, w: &Point<T>, p: &DomainParam<T>) -> Result<MapEval<T>> {
    let stage1 = phi_z2(z, w, p)?;
    let c = f_alpha(z, p);
    let stage2 = phi_z1(c, &stage1.image, p)?;
    Ok(MapEval {
        image: stage2.image,
        jacobian: stage2.jacobian * stage1.jacobian,
    })
}

/// Which transport was applied to produce a [`TransportedFunction`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum TransportRecipe<T> {
    /// `U_z f = f(phi_{z2}(.)) J phi_{z2}`
    U { base: Point<T> },
    /// `V_c f = f(phi_c(.)) J phi_c`
    V { c: C<T> },
}

/// A callable on points carrying the recipe that produced it.
#[derive(Clone)]
pub struct TransportedFunction<T: Real> {
    recipe: TransportRecipe<T>,
    param: DomainParam<T>,
    inner: Arc<dyn Fn(&Point<T>) -> C<T> + Send + Sync>,
}

impl<T: Real> TransportedFunction<T> {
    pub fn recipe(&self) -> &TransportRecipe<T> {
        &self.recipe
    }

    /// Evaluates the transported function at an interior point.
    pub fn eval(&self, w: &Point<T>) -> Result<C<T>> {
        let me = match &self.recipe {
            TransportRecipe::U { base } => phi_z2(base, w, &self.param)?,
            TransportRecipe::V { c } => phi_z1(*c, w, &self.param)?,
        };
        Ok((self.inner)(&me.image) * me.jacobian)
    }

    /// Adapts the transport into a plain closure; evaluation failures
    /// surface as NaN so quadrature node policies can see them.
    pub fn into_fn(self) -> impl Fn(&Point<T>) -> C<T> + Send + Sync + 'static {
        move |w| {
            self.eval(w)
                .unwrap_or_else(|_| Complex::new(T::nan(), T::nan()))
        }
    }
}

/// Translation operator `U_z`: an L^2 isometry built from the holomorphic
/// automorphism.
pub fn transport_u<T: Real>(
    base: &Point<T>,
    p: &DomainParam<T>,
    f: impl Fn(&Point<T>) -> C<T> + Send + Sync + 'static,
) -> Result<TransportedFunction<T>> {
    require_interior(base, p)?;
    Ok(TransportedFunction {
        recipe: TransportRecipe::U { base: *base },
        param: *p,
        inner: Arc::new(f),
    })
}

/// Translation operator `V_c`: an L^2 isometry built from the
/// non-holomorphic involution (`dsigma(phi_c(w)) = |J phi_c(w)|^2 dsigma(w)`).
pub fn transport_v<T: Real>(
    c: C<T>,
    p: &DomainParam<T>,
    f: impl Fn(&Point<T>) -> C<T> + Send + Sync + 'static,
) -> Result<TransportedFunction<T>> {
    if !(c.norm() < T::one()) {
        return Err(Error::ParameterOutsideDisc(c.norm().as_f64()));
    }
    Ok(TransportedFunction {
        recipe: TransportRecipe::V { c },
        param: *p,
        inner: Arc::new(f),
    })
}

/// The composite `w -> |V_{f_alpha(z)} U_z k_z (w)|` whose values stay in a
/// fixed band around 1.
pub fn normalized_kernel_transport_abs<T: Real>(
    z: &Point<T>,
    w: &Point<T>,
    p: &DomainParam<T>,
) -> Result<T> {
    let norm_z = kernel_diag(z, p)?.sqrt();
    let zc = *z;
    let pc = *p;
    let kz = move |v: &Point<T>| match crate::domain::bergman_kernel(v, &zc, &pc) {
        Ok(k) => k.value() / norm_z,
        Err(_) => Complex::new(T::nan(), T::nan()),
    };
    let u = transport_u(z, p, kz)?;
    let v = transport_v(f_alpha(z, p), p, u.into_fn())?;
    Ok(v.eval(w)?.norm())
}

/// Residuals of the two kernel transformation identities at `(z, w)`.
///
/// First component: the exact biholomorphic law for `phi_{z2}`,
/// `|K(w;conj w) - K(phi(w); conj phi(w)) |J phi(w)|^2| / K(w;conj w)`,
/// which must vanish to rounding. Second component: the ratio
/// `K(w;conj w) / (K(phi_m(w); .) |J phi_m(w)|^2 (1-|phi_m^(2)|^2)^(a-1) / (1-|w2|^2)^(a-1))`
/// for the Mobius-anchored involution `phi_m` at `c = z.z1`; only
/// comparability holds for it, so callers record the observed band.
pub fn transformation_residual<T: Real>(
    z: &Point<T>,
    w: &Point<T>,
    p: &DomainParam<T>,
) -> Result<(T, T)> {
    let k_w = kernel_diag(w, p)?;

    let holo = phi_z2(z, w, p)?;
    let k_img = kernel_diag(&holo.image, p)?;
    let exact_residual = (k_w - k_img * holo.jacobian.norm_sqr()).abs() / k_w;

    let mob = phi_z1(z.z1, w, p)?;
    let k_mob = kernel_diag(&mob.image, p)?;
    let a = p.alpha();
    let weight =
        ((T::one() - mob.image.z2.norm_sqr()) / (T::one() - w.z2.norm_sqr())).powf(a - T::one());
    let ratio = k_w / (k_mob * mob.jacobian.norm_sqr() * weight);
    Ok((exact_residual, ratio))
}

/// The exact algebraic identity from the proof of the kernel comparison for
/// the Mobius-anchored involution:
/// `|phi^(2)(w)|^2 (1 - |w1|^(2/alpha)) - |w2|^2 (1 - |phi^(1)(w)|^(2/alpha))`,
/// which must vanish to rounding. Returned un-normalized.
pub fn mobius_exact_identity_residual<T: Real>(
    c: C<T>,
    w: &Point<T>,
    p: &DomainParam<T>,
) -> Result<T> {
    let me = phi_z1(c, w, p)?;
    let two_over_a = T::of(2.0) / p.alpha();
    let pow = |x: T| {
        if x == T::zero() {
            T::zero()
        } else {
            x.powf(two_over_a)
        }
    };
    let lhs = me.image.z2.norm_sqr() * (T::one() - pow(w.z1.norm()));
    let rhs = w.z2.norm_sqr() * (T::one() - pow(me.image.z1.norm()));
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::random_interior_points;
    use crate::quadrature::{build_rule, build_rule_oriented, Levels, Orientation, RadialSpec};
    use approx::assert_relative_eq;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn param(alpha: f64) -> DomainParam<f64> {
        DomainParam::new(alpha).unwrap()
    }

    fn close(a: C<f64>, b: C<f64>, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn f_alpha_basics() {
        let p = param(2.0);
        assert_eq!(f_alpha(&Point::from_re(0.0, 0.3), &p).norm(), 0.0);
        assert_relative_eq!(f_alpha(&Point::from_re(0.5, 0.0), &p).re, 0.5);
        for z in random_interior_points(&p, 0.999, 10_000, 3) {
            assert!(f_alpha(&z, &p).norm() < 1.0);
        }
    }

    #[test]
    fn phi_z2_sends_base_to_recentered_point() {
        for alpha in [0.5, 2.0, 3.0] {
            let p = param(alpha);
            for z in random_interior_points(&p, 0.9, 50, 5) {
                let me = phi_z2(&z, &z, &p).unwrap();
                assert!(close(me.image.z1, f_alpha(&z, &p), 1e-12));
                assert!(me.image.z2.norm() < 1e-14);
            }
        }
    }

    #[test]
    fn phi_z2_with_centered_base_is_reflection() {
        let p = param(2.0);
        let base = Point::from_re(0.3, 0.0);
        for w in random_interior_points(&p, 0.9, 20, 9) {
            let me = phi_z2(&base, &w, &p).unwrap();
            assert!(close(me.image.z1, w.z1, 1e-14));
            assert!(close(me.image.z2, -w.z2, 1e-14));
        }
    }

    #[test]
    fn phi_z1_with_zero_parameter_negates_first_coordinate() {
        let p = param(2.0);
        let zero = Complex::new(0.0, 0.0);
        for w in random_interior_points(&p, 0.9, 20, 13) {
            let me = phi_z1(zero, &w, &p).unwrap();
            assert!(close(me.image.z1, -w.z1, 1e-14));
            assert!(close(me.image.z2, w.z2, 1e-14));
        }
    }

    #[test]
    fn both_maps_are_involutions() {
        for alpha in [0.5, 2.0, 3.0] {
            let p = param(alpha);
            let pts = random_interior_points(&p, 0.95, 400, 17);
            let mut rng = ChaCha8Rng::seed_from_u64(18);
            for pair in pts.chunks(2) {
                let (base, w) = (&pair[0], &pair[1]);
                let once = phi_z2(base, w, &p).unwrap();
                let twice = phi_z2(base, &once.image, &p).unwrap();
                assert!(close(twice.image.z1, w.z1, 1e-10));
                assert!(close(twice.image.z2, w.z2, 1e-10));

                let c = Complex::from_polar(rng.gen::<f64>() * 0.9, rng.gen::<f64>() * 6.28);
                let once = phi_z1(c, w, &p).unwrap();
                let twice = phi_z1(c, &once.image, &p).unwrap();
                assert!(close(twice.image.z1, w.z1, 1e-10));
                assert!(close(twice.image.z2, w.z2, 1e-10));
            }
        }
    }

    #[test]
    fn maps_preserve_the_interior() {
        for alpha in [0.5, 2.0, 3.0] {
            let p = param(alpha);
            let pts = random_interior_points(&p, 0.995, 20_000, 23);
            let mut rng = ChaCha8Rng::seed_from_u64(24);
            for pair in pts.chunks(2) {
                let me = phi_z2(&pair[0], &pair[1], &p).unwrap();
                assert!(me.image.is_interior(&p));
                assert!(me.jacobian.norm() > 0.0 && me.jacobian.is_finite());
                let c =
                    Complex::from_polar(rng.gen::<f64>().sqrt() * 0.98, rng.gen::<f64>() * 6.28);
                let me = phi_z1(c, &pair[1], &p).unwrap();
                assert!(me.image.is_interior(&p));
                assert!(me.jacobian.norm() > 0.0 && me.jacobian.is_finite());
            }
        }
    }

    #[test]
    fn mobius_second_coordinate_identity_is_exact() {
        for alpha in [0.5, 2.0, 3.0] {
            let p = param(alpha);
            let pts = random_interior_points(&p, 0.97, 2000, 29);
            let mut rng = ChaCha8Rng::seed_from_u64(30);
            for w in pts {
                let c = Complex::from_polar(rng.gen::<f64>() * 0.95, rng.gen::<f64>() * 6.28);
                let res = mobius_exact_identity_residual(c, &w, &p).unwrap();
                assert!(res <= 1e-12, "identity residual {res}");
            }
        }
    }

    #[test]
    fn jacobians_match_finite_differences() {
        let p = param(2.0);
        let w = Point::new(Complex::new(0.2, 0.1), Complex::new(-0.3, 0.25));
        let base = Point::new(Complex::new(0.1, -0.2), Complex::new(0.4, 0.1));
        let h = 1e-6;

        let me = phi_z2(&base, &w, &p).unwrap();
        let d11 = {
            let wp = Point::new(w.z1 + Complex::new(h, 0.0), w.z2);
            let wm = Point::new(w.z1 - Complex::new(h, 0.0), w.z2);
            (phi_z2(&base, &wp, &p).unwrap().image.z1 - phi_z2(&base, &wm, &p).unwrap().image.z1)
                / Complex::new(2.0 * h, 0.0)
        };
        let d22 = {
            let wp = Point::new(w.z1, w.z2 + Complex::new(h, 0.0));
            let wm = Point::new(w.z1, w.z2 - Complex::new(h, 0.0));
            (phi_z2(&base, &wp, &p).unwrap().image.z2 - phi_z2(&base, &wm, &p).unwrap().image.z2)
                / Complex::new(2.0 * h, 0.0)
        };
        assert!(close(me.jacobian, d11 * d22, 1e-6));

        // phi_z1 likewise; its second coordinate is linear in w2
        let c = Complex::new(0.35, -0.15);
        let me = phi_z1(c, &w, &p).unwrap();
        let d11 = {
            let wp = Point::new(w.z1 + Complex::new(h, 0.0), w.z2);
            let wm = Point::new(w.z1 - Complex::new(h, 0.0), w.z2);
            (phi_z1(c, &wp, &p).unwrap().image.z1 - phi_z1(c, &wm, &p).unwrap().image.z1)
                / Complex::new(2.0 * h, 0.0)
        };
        let d22 = {
            let wp = Point::new(w.z1, w.z2 + Complex::new(h, 0.0));
            let wm = Point::new(w.z1, w.z2 - Complex::new(h, 0.0));
            (phi_z1(c, &wp, &p).unwrap().image.z2 - phi_z1(c, &wm, &p).unwrap().image.z2)
                / Complex::new(2.0 * h, 0.0)
        };
        assert!(close(me.jacobian, d11 * d22, 1e-6));
    }

    #[test]
    fn center_map_kills_the_base_point() {
        for alpha in [0.5, 2.0, 3.0] {
            let p = param(alpha);
            for z in random_interior_points(&p, 0.9, 100, 31) {
                let me = center_map(&z, &z, &p).unwrap();
                assert!(me.image.z1.norm() < 1e-12);
                assert!(me.image.z2.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn center_map_at_origin_is_sign_flip() {
        let p = param(2.0);
        let origin = Point::origin();
        for w in random_interior_points(&p, 0.9, 20, 37) {
            let me = center_map(&origin, &w, &p).unwrap();
            assert!(close(me.image.z1, -w.z1, 1e-14));
            assert!(close(me.image.z2, -w.z2, 1e-14));
        }
    }

    #[test]
    fn center_map_preserves_interior() {
        let p = param(2.0);
        let pts = random_interior_points(&p, 0.995, 20_000, 41);
        for pair in pts.chunks(2) {
            let me = center_map(&pair[0], &pair[1], &p).unwrap();
            assert!(me.image.is_interior(&p));
        }
    }

    #[test]
    fn transformation_law_is_exact_for_the_holomorphic_map() {
        for alpha in [0.5, 2.0, 3.0] {
            let p = param(alpha);
            let pts = random_interior_points(&p, 0.9, 200, 43);
            for pair in pts.chunks(2) {
                let (res, _) = transformation_residual(&pair[0], &pair[1], &p).unwrap();
                assert!(res <= 1e-10, "alpha={alpha} residual {res}");
            }
        }
    }

    #[test]
    fn mobius_comparison_collapses_for_the_ball() {
        let p = param(1.0);
        let pts = random_interior_points(&p, 0.9, 200, 47);
        for pair in pts.chunks(2) {
            let (_, ratio) = transformation_residual(&pair[0], &pair[1], &p).unwrap();
            assert!((ratio - 1.0).abs() <= 1e-10, "ratio {ratio}");
        }
    }

    #[test]
    fn mobius_comparison_band_recorded_at_alpha_two() {
        let p = param(2.0);
        let pts = random_interior_points(&p, 0.95, 10_000, 53);
        let mut lo = f64::INFINITY;
        let mut hi = 0.0_f64;
        for pair in pts.chunks(2) {
            let (_, ratio) = transformation_residual(&pair[0], &pair[1], &p).unwrap();
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        assert!(lo > 0.0 && hi.is_finite());
        // comparability: both edges of the observed band stay well away
        // from 0 and infinity
        assert!(lo > 0.05, "band low edge {lo}");
        assert!(hi < 20.0, "band high edge {hi}");
    }

    #[test]
    fn transports_are_isometries_under_quadrature() {
        let p = param(2.0);
        let poly = |z: &Point<f64>| {
            Complex::new(0.7, 0.0) + z.z1 * Complex::new(0.5, 0.25) + z.z2 * z.z2 * z.z1
        };
        // U composes with a holomorphic map: a light standard rule converges
        // spectrally in the angular directions.
        let u_rule = build_rule(&p, Levels::symmetric(RadialSpec::gauss(16), 48)).unwrap();
        // V's integrand has a conical kink at the Mobius center in the z1
        // plane; the reversed orientation pins it in the disc-1 factor.
        let v_rule = build_rule_oriented(
            &p,
            Levels {
                radial1: RadialSpec::gauss(96),
                angular1: 192,
                radial2: RadialSpec::gauss(6),
                angular2: 8,
            },
            Orientation::Reversed,
        )
        .unwrap();
        let norm_u_ref = u_rule.norm(poly).unwrap();
        let norm_v_ref = v_rule.norm(poly).unwrap();
        for z in random_interior_points(&p, 0.6, 8, 59) {
            let u = transport_u(&z, &p, poly).unwrap().into_fn();
            let norm_u = u_rule.norm(u).unwrap();
            assert!(
                (norm_u - norm_u_ref).abs() <= 1e-6 * norm_u_ref,
                "U_z defect {}",
                (norm_u - norm_u_ref).abs()
            );
            let v = transport_v(f_alpha(&z, &p), &p, poly).unwrap().into_fn();
            let norm_v = v_rule.norm(v).unwrap();
            assert!(
                (norm_v - norm_v_ref).abs() <= 1e-6 * norm_v_ref,
                "V_c defect {}",
                (norm_v - norm_v_ref).abs()
            );
        }
    }

    #[test]
    fn transport_u_is_a_pointwise_involution() {
        let p = param(2.0);
        let f = |z: &Point<f64>| z.z1 + z.z2 + Complex::new(0.25, 0.0);
        for z in random_interior_points(&p, 0.8, 10, 61) {
            let once = transport_u(&z, &p, f).unwrap().into_fn();
            let twice = transport_u(&z, &p, once).unwrap();
            for w in random_interior_points(&p, 0.8, 10, 67) {
                let direct = f(&w);
                let through = twice.eval(&w).unwrap();
                assert!(close(direct, through, 1e-10 * direct.norm().max(1.0)));
            }
        }
    }

    #[test]
    fn transport_v_is_a_pointwise_involution() {
        let p = param(2.0);
        let f = |z: &Point<f64>| z.z2 * z.z1 + Complex::new(0.1, -0.4);
        let c = Complex::new(0.4, 0.2);
        let once = transport_v(c, &p, f).unwrap().into_fn();
        let twice = transport_v(c, &p, once).unwrap();
        for w in random_interior_points(&p, 0.85, 20, 71) {
            let direct = f(&w);
            let through = twice.eval(&w).unwrap();
            assert!(close(direct, through, 1e-10 * direct.norm().max(1.0)));
        }
    }

    #[test]
    fn transported_kernel_modulus_stays_near_one() {
        let p = param(2.0);
        let pts = random_interior_points(&p, 0.9, 2000, 73);
        let mut log_sum = 0.0;
        let mut count = 0;
        let mut lo = f64::INFINITY;
        let mut hi = 0.0_f64;
        for pair in pts.chunks(2) {
            let v = normalized_kernel_transport_abs(&pair[0], &pair[1], &p).unwrap();
            lo = lo.min(v);
            hi = hi.max(v);
            log_sum += v.ln();
            count += 1;
        }
        let geo_mean = (log_sum / count as f64).exp();
        assert!(geo_mean > 0.5 && geo_mean < 2.0, "geometric mean {geo_mean}");
        assert!(lo > 0.0 && hi.is_finite());
        assert!(hi / lo < 100.0, "band ratio {}", hi / lo);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let p = param(2.0);
        let w = Point::from_re(0.1, 0.1);
        assert!(phi_z1(Complex::new(1.0, 0.0), &w, &p).is_err());
        assert!(
            transport_v(Complex::new(1.2, 0.0), &p, |_: &Point<f64>| Complex::new(1.0, 0.0))
                .is_err()
        );
        let outside = Point::from_re(0.9, 0.5);
        assert!(phi_z2(&outside, &w, &p).is_err());
        assert!(phi_z1(Complex::new(0.1, 0.0), &outside, &p).is_err());
    }
}
