//! The Thullen domain `U^alpha = {|z1|^(2/alpha) + |z2|^2 < 1}`, membership,
//! and the closed-form Bergman kernel
//!
//! ```text
//!                 (a+1)(1 - z2 conj(w2))^a + (a-1) z1 conj(w1)
//! K(z; conj w) = ----------------------------------------------------------
//!                 pi^2 (1 - z2 conj(w2))^(2-a) ((1 - z2 conj(w2))^a - z1 conj(w1))^3
//! ```
//!
//! together with its normalized variants and the off-diagonal modulus
//! estimate. Complex powers are taken on the principal branch; this is safe
//! because `Re(1 - z2 conj(w2)) > 0` whenever `|z2|, |w2| < 1`, so the base
//! never leaves the right half-plane.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{C, Real};

/// The exponent `alpha > 0` defining the domain.
///
/// `alpha = 1` turns the domain into the unit ball; the construction in the
/// literature excludes that value, but the library accepts it (with
/// [`DomainParam::is_ball_case`] set) because the classical ball kernel is
/// then an exact cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainParam<T> {
    alpha: T,
    ball_case: bool,
}

impl<T: Real> DomainParam<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !(alpha.is_finite() && alpha > T::zero()) {
            return Err(Error::InvalidAlpha(alpha.as_f64()));
        }
        Ok(Self {
            alpha,
            ball_case: alpha == T::one(),
        })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    /// True when `alpha == 1` and the domain degenerates to the unit ball.
    pub fn is_ball_case(&self) -> bool {
        self.ball_case
    }

    /// Lebesgue volume of the domain, `pi^2 / (alpha + 1)`.
    pub fn volume(&self) -> T {
        T::PI() * T::PI() / (self.alpha + T::one())
    }
}

/// A point `(z1, z2)` of complex 2-space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point<T> {
    pub z1: C<T>,
    pub z2: C<T>,
}

impl<T: Real> Point<T> {
    pub fn new(z1: C<T>, z2: C<T>) -> Self {
        Self { z1, z2 }
    }

    pub fn origin() -> Self {
        Self::new(C::new(T::zero(), T::zero()), C::new(T::zero(), T::zero()))
    }

    pub fn from_re(x1: T, x2: T) -> Self {
        Self::new(C::new(x1, T::zero()), C::new(x2, T::zero()))
    }

    /// Boundary defect `rho(z) = 1 - |z1|^(2/alpha) - |z2|^2`.
    ///
    /// Positive exactly on the interior; computed directly from the defining
    /// inequality rather than from kernel magnitudes so near-boundary
    /// diagnostics do not suffer cancellation.
    pub fn rho(&self, p: &DomainParam<T>) -> T {
        let r1 = self.z1.norm();
        let pow = if r1 == T::zero() {
            T::zero()
        } else {
            r1.powf(T::of(2.0) / p.alpha())
        };
        T::one() - pow - self.z2.norm_sqr()
    }

    pub fn is_interior(&self, p: &DomainParam<T>) -> bool {
        self.rho(p) > T::zero()
    }
}

/// Value of the Bergman kernel at a pair of points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelValue<T> {
    value: C<T>,
}

impl<T: Real> KernelValue<T> {
    fn checked(value: C<T>) -> Result<Self> {
        if value.re.is_finite() && value.im.is_finite() {
            Ok(Self { value })
        } else {
            Err(Error::NonFiniteKernel)
        }
    }

    pub fn value(&self) -> C<T> {
        self.value
    }
}

pub(crate) fn require_interior<T: Real>(z: &Point<T>, p: &DomainParam<T>) -> Result<()> {
    let rho = z.rho(p);
    if rho > T::zero() {
        Ok(())
    } else {
        Err(Error::NonInterior {
            z1_re: z.z1.re.as_f64(),
            z1_im: z.z1.im.as_f64(),
            z2_re: z.z2.re.as_f64(),
            z2_im: z.z2.im.as_f64(),
            rho: rho.as_f64(),
        })
    }
}

/// Membership test for the open domain.
pub fn in_domain<T: Real>(z: &Point<T>, p: &DomainParam<T>) -> bool {
    z.is_interior(p)
}

/// Closed-form Bergman kernel `K(z; conj w)`.
pub fn bergman_kernel<T: Real>(
    z: &Point<T>,
    w: &Point<T>,
    p: &DomainParam<T>,
) -> Result<KernelValue<T>> {
    require_interior(z, p)?;
    require_interior(w, p)?;
    let a = p.alpha();
    let one = C::new(T::one(), T::zero());
    let base = one - z.z2 * w.z2.conj();
    let cross = z.z1 * w.z1.conj();
    let base_a = base.powf(a);
    let numer = base_a * (a + T::one()) + cross * (a - T::one());
    let pi2 = T::PI() * T::PI();
    let d = base_a - cross;
    let denom = base.powf(T::of(2.0) - a) * (d * d * d) * pi2;
    KernelValue::checked(numer / denom)
}

/// Kernel on the diagonal, evaluated in purely real arithmetic.
///
/// Always strictly positive on the interior; this is the path the norm and
/// metric computations use so the positive-real guarantee is structural.
pub fn kernel_diag<T: Real>(z: &Point<T>, p: &DomainParam<T>) -> Result<T> {
    require_interior(z, p)?;
    let a = p.alpha();
    let u = z.z2.norm_sqr();
    let x = z.z1.norm_sqr();
    let base = T::one() - u;
    let base_a = base.powf(a);
    let numer = (a + T::one()) * base_a + (a - T::one()) * x;
    let pi2 = T::PI() * T::PI();
    let d = base_a - x;
    let value = numer / (pi2 * base.powf(T::of(2.0) - a) * d * d * d);
    if value.is_finite() && value > T::zero() {
        Ok(value)
    } else {
        Err(Error::NonFiniteKernel)
    }
}

/// `||K_z|| = sqrt(K(z; conj z))`.
pub fn kernel_norm<T: Real>(z: &Point<T>, p: &DomainParam<T>) -> Result<T> {
    Ok(kernel_diag(z, p)?.sqrt())
}

/// Normalized kernel function `k_z(w) = K(w; conj z) / ||K_z||`.
pub fn normalized_kernel_eval<T: Real>(
    z: &Point<T>,
    w: &Point<T>,
    p: &DomainParam<T>,
) -> Result<C<T>> {
    let norm = kernel_norm(z, p)?;
    let kw = bergman_kernel(w, z, p)?;
    Ok(kw.value() / norm)
}

/// Off-diagonal modulus estimate
/// `1 / (|1 - z2 conj(w2)|^(2+alpha) |1 - z1 conj(w1) / (1 - z2 conj(w2))^alpha|^3)`.
///
/// `|K| / estimate` stays inside a fixed band `[1/C, C]`; the band constant is
/// never asserted here, callers measure it (see the module tests).
pub fn kernel_modulus_estimate<T: Real>(
    z: &Point<T>,
    w: &Point<T>,
    p: &DomainParam<T>,
) -> Result<T> {
    require_interior(z, p)?;
    require_interior(w, p)?;
    let a = p.alpha();
    let one = C::new(T::one(), T::zero());
    let base = one - z.z2 * w.z2.conj();
    let cross = z.z1 * w.z1.conj();
    let inner = (one - cross / base.powf(a)).norm();
    Ok((base.norm().powf(T::of(2.0) + a) * inner.powi(3)).recip())
}

/// Unit-ball Bergman kernel `2 / (pi^2 (1 - <z, w>)^3)`, the exact reference
/// for `alpha = 1`.
pub fn ball_kernel<T: Real>(z: &Point<T>, w: &Point<T>) -> C<T> {
    let one = C::new(T::one(), T::zero());
    let inner = one - z.z1 * w.z1.conj() - z.z2 * w.z2.conj();
    let pi2 = T::PI() * T::PI();
    Complex::new(T::of(2.0), T::zero()) / (inner * inner * inner * pi2)
}

/// Seeded sample of interior points, uniform in polydisc coordinates.
///
/// Points satisfy `max(|z1| / (1 - |z2|^2)^(alpha/2), |z2|) <= radius`, which
/// is the coordinate box the series oracle converges fastest on.
pub fn random_interior_points<T: Real>(
    p: &DomainParam<T>,
    radius: T,
    count: usize,
    seed: u64,
) -> Vec<Point<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_interior_point(p, radius, &mut rng)).collect()
}

/// Single draw from the same distribution as [`random_interior_points`].
pub fn random_interior_point<T: Real>(
    p: &DomainParam<T>,
    radius: T,
    rng: &mut impl Rng,
) -> Point<T> {
    let two_pi = T::of(2.0) * T::PI();
    let u1 = T::of(rng.gen::<f64>());
    let a1 = T::of(rng.gen::<f64>()) * two_pi;
    let u2 = T::of(rng.gen::<f64>());
    let a2 = T::of(rng.gen::<f64>()) * two_pi;
    // uniform over the polydisc of the given radius in (t1, z2)
    let r1 = radius * u1.sqrt();
    let r2 = radius * u2.sqrt();
    let t1 = C::from_polar(r1, a1);
    let z2 = C::from_polar(r2, a2);
    let scale = (T::one() - z2.norm_sqr()).powf(p.alpha() / T::of(2.0));
    Point::new(t1 * scale, z2)
}
