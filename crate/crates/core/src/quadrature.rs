//! Numerical integration over `U^alpha` through the polydisc substitution
//! `t1 = w1 / (1 - |w2|^2)^(alpha/2)`, which flattens the curved boundary
//! onto the bidisc and contributes the weight `(1 - |w2|^2)^alpha`.
//!
//! Each disc factor uses Gauss-Legendre in the squared radius `u = r^2`
//! (optionally on a mesh graded toward `u = 1` for boundary-singular
//! integrands) and a uniform angular grid, which integrates trigonometric
//! polynomials exactly. Node enumeration order is fixed and documented so
//! serialized rules and all reductions are reproducible; sums use
//! deterministic pairwise accumulation.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::domain::{DomainParam, Point};
use crate::error::{Error, Result};
use crate::num::{C, PairwiseAccumulator, Real};

/// How to treat a node where an integrand fails to evaluate to a finite
/// value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodePolicy {
    /// Fail the whole integral, identifying the node.
    #[default]
    Reject,
    /// Drop the node and report how many were dropped.
    SkipAndReport,
}

/// Radial discretization of one disc factor: `panels` Gauss-Legendre panels
/// of the given `order` in `u = r^2`, graded toward the boundary with
/// exponent `grading` (panel edges `1 - (1 - k/K)^grading`).
///
/// A single panel (`panels = 1`, grading irrelevant) is plain Gauss-Legendre
/// and integrates polynomials in `u` up to degree `2 * order - 1` exactly.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadialSpec {
    pub panels: usize,
    pub order: usize,
    pub grading: f64,
}

impl RadialSpec {
    /// Single-panel Gauss-Legendre of the given order.
    pub fn gauss(order: usize) -> Self {
        Self {
            panels: 1,
            order,
            grading: 1.0,
        }
    }

    /// Composite rule graded toward the boundary, default exponent 3.
    pub fn graded(panels: usize, order: usize) -> Self {
        Self {
            panels,
            order,
            grading: 3.0,
        }
    }

    pub fn with_grading(mut self, grading: f64) -> Self {
        self.grading = grading;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.panels == 0 || self.order == 0 {
            return Err(Error::InvalidLevels(format!(
                "radial spec needs panels >= 1 and order >= 1, got {} x {}",
                self.panels, self.order
            )));
        }
        if !(self.grading >= 1.0 && self.grading.is_finite()) {
            return Err(Error::InvalidLevels(format!(
                "grading exponent must be >= 1, got {}",
                self.grading
            )));
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.panels * self.order
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
///
/// Newton iteration on the Legendre recurrence with Chebyshev-flavored
/// initial guesses; adequate well beyond the orders used here.
pub fn gauss_legendre<T: Real>(order: usize) -> (Vec<T>, Vec<T>) {
    let mut nodes = vec![T::zero(); order];
    let mut weights = vec![T::zero(); order];
    let tol = T::epsilon() * T::of(4.0);
    for k in 0..order {
        let guess = (std::f64::consts::PI * (k as f64 + 0.75) / (order as f64 + 0.5)).cos();
        let mut x = T::of(guess);
        let mut dp = T::one();
        for _ in 0..100 {
            let (p, d) = legendre_eval(order, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= tol {
                break;
            }
        }
        nodes[k] = x;
        weights[k] = T::of(2.0) / ((T::one() - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_eval<T: Real>(order: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for j in 2..=order {
        let jf = T::of(j as f64);
        let next = ((T::of(2.0) * jf - T::one()) * x * p1 - (jf - T::one()) * p0) / jf;
        p0 = p1;
        p1 = next;
    }
    let d = T::of(order as f64) * (x * p1 - p0) / (x * x - T::one());
    (p1, d)
}

/// Quadrature on the unit disc with respect to Lebesgue area measure.
///
/// Radial nodes live in the radius `r` itself (the polar-measure factor `r`
/// is folded into the radial weights), which keeps `|v|`-type integrand
/// factors smooth through the disc center. A rule of order `q` integrates
/// polynomials in `|v|^2` up to degree `q - 1` exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscRule<T> {
    radial_r: Vec<T>,
    radial_w: Vec<T>,
    angular: usize,
}

impl<T: Real> DiscRule<T> {
    pub fn new(radial: RadialSpec, angular: usize) -> Result<Self> {
        radial.validate()?;
        if angular < 2 {
            return Err(Error::InvalidLevels(format!(
                "angular resolution must be >= 2, got {angular}"
            )));
        }
        let (gl_x, gl_w) = gauss_legendre::<T>(radial.order);
        let mut radial_r = Vec::with_capacity(radial.node_count());
        let mut radial_w = Vec::with_capacity(radial.node_count());
        let g = T::of(radial.grading);
        let edge = |k: usize| -> T {
            let frac = T::one() - T::of(k as f64) / T::of(radial.panels as f64);
            T::one() - frac.powf(g)
        };
        for panel in 0..radial.panels {
            let (a, b) = (edge(panel), edge(panel + 1));
            let half = (b - a) / T::of(2.0);
            let mid = (b + a) / T::of(2.0);
            for (x, w) in gl_x.iter().zip(&gl_w) {
                let r = mid + half * *x;
                radial_r.push(r);
                radial_w.push(half * *w * r);
            }
        }
        Ok(Self {
            radial_r,
            radial_w,
            angular,
        })
    }

    pub fn radial_r(&self) -> &[T] {
        &self.radial_r
    }

    /// Squared radii of the radial nodes.
    pub fn radial_u(&self) -> Vec<T> {
        self.radial_r.iter().map(|&r| r * r).collect()
    }

    /// Radial weights, with the polar `r dr` factor included.
    pub fn radial_w(&self) -> &[T] {
        &self.radial_w
    }

    pub fn angular(&self) -> usize {
        self.angular
    }

    pub fn len(&self) -> usize {
        self.radial_r.len() * self.angular
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Angle of the `j`-th angular node.
    pub fn theta(&self, j: usize) -> T {
        T::of(2.0) * T::PI() * T::of(j as f64) / T::of(self.angular as f64)
    }

    /// Weight shared by the angular nodes; `radial_w[i] * angular_w()`
    /// integrates `r dr dtheta`, i.e. area measure on the disc.
    pub fn angular_w(&self) -> T {
        T::of(2.0) * T::PI() / T::of(self.angular as f64)
    }

    /// Integrates a complex-valued function over the disc.
    pub fn integrate(&self, mut f: impl FnMut(C<T>) -> C<T>) -> C<T> {
        let aw = self.angular_w();
        let mut acc = PairwiseAccumulator::new();
        for (i, &r) in self.radial_r.iter().enumerate() {
            let w = self.radial_w[i] * aw;
            for j in 0..self.angular {
                let node = C::from_polar(r, self.theta(j));
                acc.push(f(node) * w);
            }
        }
        acc.finish()
    }
}

/// Which coordinate the polydisc substitution flattens.
///
/// `Standard` is the substitution `t1 = z1 / (1 - |z2|^2)^(alpha/2)`
/// (weight `(1 - |z2|^2)^alpha`); `Reversed` flattens the other way,
/// `t2 = z2 / (1 - |z1|^(2/alpha))^(1/2)` (weight `1 - |z1|^(2/alpha)`).
/// The reversed orientation keeps integrand features anchored in the `z1`
/// plane (Mobius-transport kinks) at a fixed grid location instead of
/// smearing them across the tensor product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    #[default]
    Standard,
    Reversed,
}

/// Resolution descriptor for a rule on `U^alpha`: one disc factor per
/// coordinate plane (`1` is always the `z1` side).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Levels {
    pub radial1: RadialSpec,
    pub angular1: usize,
    pub radial2: RadialSpec,
    pub angular2: usize,
}

impl Levels {
    pub fn symmetric(radial: RadialSpec, angular: usize) -> Self {
        Self {
            radial1: radial,
            angular1: angular,
            radial2: radial,
            angular2: angular,
        }
    }
}

impl Default for Levels {
    fn default() -> Self {
        Self::symmetric(RadialSpec::gauss(24), 32)
    }
}

/// Tensor quadrature rule on `U^alpha` in polydisc coordinates.
///
/// Node enumeration order (fixed): disc-1 radial index, then disc-1
/// angular, then disc-2 radial, then disc-2 angular, innermost last.
#[derive(Clone, Debug)]
pub struct QuadratureRule<T> {
    param: DomainParam<T>,
    levels: Levels,
    orientation: Orientation,
    disc1: DiscRule<T>,
    disc2: DiscRule<T>,
    /// Scale applied to the flattened coordinate, per radial index of the
    /// non-flattened disc (`disc2` for `Standard`, `disc1` for `Reversed`).
    scale: Vec<T>,
    /// Substitution weight, indexed like `scale`.
    wfactor: Vec<T>,
    policy: NodePolicy,
}

impl<T: Real> QuadratureRule<T> {
    pub fn param(&self) -> &DomainParam<T> {
        &self.param
    }

    pub fn levels(&self) -> &Levels {
        &self.levels
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn disc1(&self) -> &DiscRule<T> {
        &self.disc1
    }

    pub fn disc2(&self) -> &DiscRule<T> {
        &self.disc2
    }

    pub fn scale(&self) -> &[T] {
        &self.scale
    }

    pub fn wfactor(&self) -> &[T] {
        &self.wfactor
    }

    pub fn policy(&self) -> NodePolicy {
        self.policy
    }

    pub fn with_policy(mut self, policy: NodePolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn len(&self) -> usize {
        self.disc1.len() * self.disc2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Visits every node in the documented order.
    pub fn for_each_node(&self, mut visit: impl FnMut(usize, &Point<T>, T)) {
        let aw1 = self.disc1.angular_w();
        let aw2 = self.disc2.angular_w();
        let mut index = 0;
        for (i1, &r1) in self.disc1.radial_r.iter().enumerate() {
            let w1 = self.disc1.radial_w[i1] * aw1;
            for j1 in 0..self.disc1.angular {
                let t1 = C::from_polar(r1, self.disc1.theta(j1));
                for (i2, &r2) in self.disc2.radial_r.iter().enumerate() {
                    let w2base = self.disc2.radial_w[i2] * aw2;
                    let (z1, scale2, w12) = match self.orientation {
                        Orientation::Standard => {
                            (t1 * self.scale[i2], T::one(), w1 * w2base * self.wfactor[i2])
                        }
                        Orientation::Reversed => {
                            (t1, self.scale[i1], w1 * w2base * self.wfactor[i1])
                        }
                    };
                    for j2 in 0..self.disc2.angular {
                        let t2 = C::from_polar(r2, self.disc2.theta(j2));
                        let point = Point::new(z1, t2 * scale2);
                        visit(index, &point, w12);
                        index += 1;
                    }
                }
            }
        }
    }

    /// Materializes nodes and weights (small rules only; the iteration API
    /// avoids this for large tensors).
    pub fn nodes(&self) -> (Vec<Point<T>>, Vec<T>) {
        let mut pts = Vec::with_capacity(self.len());
        let mut ws = Vec::with_capacity(self.len());
        self.for_each_node(|_, p, w| {
            pts.push(*p);
            ws.push(w);
        });
        (pts, ws)
    }

    /// Sum of all weights; converges to the volume `pi^2/(alpha+1)`.
    pub fn total_weight(&self) -> T {
        let mut acc = PairwiseAccumulator::new();
        self.for_each_node(|_, _, w| acc.push(w));
        acc.finish()
    }

    /// Integrates `f` over the domain, counting skipped nodes under
    /// [`NodePolicy::SkipAndReport`].
    pub fn integrate_reporting(
        &self,
        mut f: impl FnMut(&Point<T>) -> C<T>,
    ) -> Result<(C<T>, usize)> {
        let mut acc = PairwiseAccumulator::new();
        let mut skipped = 0usize;
        let mut failure: Option<Error> = None;
        self.for_each_node(|index, point, w| {
            if failure.is_some() {
                return;
            }
            let v = f(point);
            if v.re.is_finite() && v.im.is_finite() {
                acc.push(v * w);
            } else {
                match self.policy {
                    NodePolicy::Reject => failure = Some(Error::NodeEvaluation { index }),
                    NodePolicy::SkipAndReport => skipped += 1,
                }
            }
        });
        match failure {
            Some(e) => Err(e),
            None => Ok((acc.finish(), skipped)),
        }
    }

    pub fn integrate(&self, f: impl FnMut(&Point<T>) -> C<T>) -> Result<C<T>> {
        Ok(self.integrate_reporting(f)?.0)
    }

    /// L^2 inner product `<f, g> = integral f conj(g)`.
    ///
    /// Hermitian by construction: swapping the arguments conjugates every
    /// summand and the summation order is identical, so the result is the
    /// exact conjugate.
    pub fn inner_product(
        &self,
        mut f: impl FnMut(&Point<T>) -> C<T>,
        mut g: impl FnMut(&Point<T>) -> C<T>,
    ) -> Result<C<T>> {
        self.integrate(|p| f(p) * g(p).conj())
    }

    /// L^2 norm of `f`.
    pub fn norm(&self, mut f: impl FnMut(&Point<T>) -> C<T>) -> Result<T> {
        let sq = self.integrate(|p| {
            let v = f(p);
            Complex::new(v.norm_sqr(), T::zero())
        })?;
        Ok(sq.re.max(T::zero()).sqrt())
    }

    /// L^p norm of `f` for real `p > 0`.
    pub fn lp_norm(&self, mut f: impl FnMut(&Point<T>) -> C<T>, p_exp: T) -> Result<T> {
        let s = self.integrate(|p| Complex::new(f(p).norm().powf(p_exp), T::zero()))?;
        Ok(s.re.max(T::zero()).powf(p_exp.recip()))
    }
}

/// Builds the tensor rule on `U^alpha` for the given resolution, in the
/// standard orientation.
pub fn build_rule<T: Real>(p: &DomainParam<T>, levels: Levels) -> Result<QuadratureRule<T>> {
    build_rule_oriented(p, levels, Orientation::Standard)
}

/// Builds the tensor rule in either polydisc orientation.
pub fn build_rule_oriented<T: Real>(
    p: &DomainParam<T>,
    levels: Levels,
    orientation: Orientation,
) -> Result<QuadratureRule<T>> {
    let disc1 = DiscRule::new(levels.radial1, levels.angular1)?;
    let disc2 = DiscRule::new(levels.radial2, levels.angular2)?;
    let a = p.alpha();
    let (scale, wfactor) = match orientation {
        Orientation::Standard => {
            // z1 = t1 (1 - |z2|^2)^(alpha/2), weight (1 - |z2|^2)^alpha
            let scale: Vec<T> = disc2
                .radial_r
                .iter()
                .map(|&r| (T::one() - r * r).powf(a / T::of(2.0)))
                .collect();
            let wfactor = scale.iter().map(|&s| s * s).collect();
            (scale, wfactor)
        }
        Orientation::Reversed => {
            // z2 = t2 (1 - |z1|^(2/alpha))^(1/2), weight 1 - |z1|^(2/alpha)
            let wfactor: Vec<T> = disc1
                .radial_r
                .iter()
                .map(|&r: &T| {
                    if r == T::zero() {
                        T::one()
                    } else {
                        T::one() - r.powf(T::of(2.0) / a)
                    }
                })
                .collect();
            let scale = wfactor.iter().map(|&f| f.sqrt()).collect();
            (scale, wfactor)
        }
    };
    Ok(QuadratureRule {
        param: *p,
        levels,
        orientation,
        disc1,
        disc2,
        scale,
        wfactor,
        policy: NodePolicy::Reject,
    })
}

/// Versioned on-disk form of a rule.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RuleDocument<T> {
    pub schema_version: u32,
    pub alpha: T,
    pub levels: Levels,
    #[serde(default)]
    pub orientation: Orientation,
    /// `[z1_re, z1_im, z2_re, z2_im]` per node, in enumeration order.
    pub nodes: Vec<[T; 4]>,
    pub weights: Vec<T>,
}

pub const RULE_SCHEMA_VERSION: u32 = 1;

impl<T: Real + Serialize> QuadratureRule<T> {
    pub fn to_document(&self) -> RuleDocument<T> {
        let (pts, ws) = self.nodes();
        RuleDocument {
            schema_version: RULE_SCHEMA_VERSION,
            alpha: self.param.alpha(),
            levels: self.levels,
            orientation: self.orientation,
            nodes: pts
                .iter()
                .map(|p| [p.z1.re, p.z1.im, p.z2.re, p.z2.im])
                .collect(),
            weights: ws,
        }
    }
}

impl<T: Real> QuadratureRule<T> {
    pub fn from_document(doc: &RuleDocument<T>) -> Result<Self> {
        if doc.schema_version != RULE_SCHEMA_VERSION {
            return Err(Error::InvalidLevels(format!(
                "unsupported rule schema version {}",
                doc.schema_version
            )));
        }
        let p = DomainParam::new(doc.alpha)?;
        let rule = build_rule_oriented(&p, doc.levels, doc.orientation)?;
        if doc.nodes.len() != rule.len() || doc.weights.len() != rule.len() {
            return Err(Error::InvalidLevels(format!(
                "document carries {} nodes, levels produce {}",
                doc.nodes.len(),
                rule.len()
            )));
        }
        Ok(rule)
    }
}
