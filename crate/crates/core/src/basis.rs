//! Orthonormal monomial basis of the Bergman space and the series form of
//! the kernel.
//!
//! The monomials `z1^m z2^n` are orthogonal on any complete Reinhardt
//! domain, so after normalizing by the moments
//!
//! ```text
//! c[m,n] = integral |z1|^(2m) |z2|^(2n) dV = pi^2 B(n+1, alpha(m+1)+1) / (m+1)
//! ```
//!
//! the functions `e[m,n] = z1^m z2^n / sqrt(c[m,n])` are an orthonormal basis
//! and `K(z; conj w) = sum (z1 conj(w1))^m (z2 conj(w2))^n / c[m,n]`. This
//! series is the independent oracle for the closed-form kernel, and the
//! coefficient representation of `K_z` used by the operator machinery.
//!
//! All moments are kept in log space (`ln_gamma`) so large truncation orders
//! survive; the basis enumeration is row-major in `(m, n)` and fixed, so
//! matrices assembled over it are reproducible byte for byte.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::domain::{require_interior, DomainParam, Point};
use crate::error::{Error, Result};
use crate::num::{C, Real};
use crate::special::ln_beta;

/// Default truncation order when a caller has no opinion.
pub const DEFAULT_TRUNCATION: usize = 40;

/// Index `(m, n)` of the monomial `z1^m z2^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisIndex {
    pub m: usize,
    pub n: usize,
}

impl BasisIndex {
    pub fn new(m: usize, n: usize) -> Self {
        Self { m, n }
    }
}

/// Enumerates the box `m, n <= order` row-major in `(m, n)`.
pub fn enumerate(order: usize) -> impl Iterator<Item = BasisIndex> {
    (0..=order).flat_map(move |m| (0..=order).map(move |n| BasisIndex::new(m, n)))
}

/// Number of basis elements for the box `m, n <= order`.
pub fn dimension(order: usize) -> usize {
    (order + 1) * (order + 1)
}

/// Flat position of `(m, n)` in the row-major enumeration.
pub fn flat_index(idx: BasisIndex, order: usize) -> usize {
    idx.m * (order + 1) + idx.n
}

/// `ln c[m,n]` for a single index.
pub fn ln_monomial_norm_sq<T: Real>(idx: BasisIndex, p: &DomainParam<T>) -> T {
    let a = p.alpha();
    let m = T::of(idx.m as f64);
    let n = T::of(idx.n as f64);
    let two_ln_pi = T::of(2.0) * T::PI().ln();
    two_ln_pi - (m + T::one()).ln() + ln_beta(n + T::one(), a * (m + T::one()) + T::one())
}

/// Squared L^2 norm `c[m,n]` of the monomial `z1^m z2^n`.
///
/// Signals [`Error::CoefficientOverflow`] when the value is not representable
/// at the working precision (extreme `m`, `n`, `alpha`), instead of silently
/// saturating to zero or infinity.
pub fn monomial_norm_sq<T: Real>(idx: BasisIndex, p: &DomainParam<T>) -> Result<T> {
    let c = ln_monomial_norm_sq(idx, p).exp();
    if c.is_finite() && c > T::zero() && c.recip().is_finite() {
        Ok(c)
    } else {
        Err(Error::CoefficientOverflow { m: idx.m, n: idx.n })
    }
}

/// Memoized table of `ln c[m,n]` for one `(alpha, order)` pair.
///
/// Built once, read-only afterwards; concurrent reads are safe.
#[derive(Clone, Debug)]
pub struct NormTable<T> {
    param: DomainParam<T>,
    order: usize,
    ln_c: Vec<T>,
}

impl<T: Real> NormTable<T> {
    pub fn new(p: &DomainParam<T>, order: usize) -> Self {
        let ln_c = enumerate(order).map(|idx| ln_monomial_norm_sq(idx, p)).collect();
        Self {
            param: *p,
            order,
            ln_c,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn param(&self) -> &DomainParam<T> {
        &self.param
    }

    pub fn dimension(&self) -> usize {
        dimension(self.order)
    }

    pub fn ln_c(&self, idx: BasisIndex) -> T {
        self.ln_c[flat_index(idx, self.order)]
    }

    pub fn c(&self, idx: BasisIndex) -> Result<T> {
        let c = self.ln_c(idx).exp();
        if c.is_finite() && c > T::zero() {
            Ok(c)
        } else {
            Err(Error::CoefficientOverflow { m: idx.m, n: idx.n })
        }
    }

    pub fn inv_c(&self, idx: BasisIndex) -> Result<T> {
        let inv = (-self.ln_c(idx)).exp();
        if inv.is_finite() && inv > T::zero() {
            Ok(inv)
        } else {
            Err(Error::CoefficientOverflow { m: idx.m, n: idx.n })
        }
    }

    /// Orthonormal basis function `e[m,n](z) = z1^m z2^n / sqrt(c[m,n])`.
    pub fn basis_eval(&self, idx: BasisIndex, z: &Point<T>) -> C<T> {
        let scale = (-self.ln_c(idx) / T::of(2.0)).exp();
        pow_cross(z.z1, idx.m) * pow_cross(z.z2, idx.n) * scale
    }
}

fn pow_cross<T: Real>(v: C<T>, k: usize) -> C<T> {
    match k {
        0 => Complex::new(T::one(), T::zero()),
        1 => v,
        _ => v.powu(k as u32),
    }
}

/// Coefficients of a truncated Bergman-space element over the monomial basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientVector<T> {
    order: usize,
    entries: Vec<C<T>>,
}

impl<T: Real> CoefficientVector<T> {
    pub fn new(order: usize, entries: Vec<C<T>>) -> Self {
        assert_eq!(entries.len(), dimension(order));
        Self { order, entries }
    }

    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![Complex::new(T::zero(), T::zero()); dimension(order)],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.entries
    }

    pub fn get(&self, idx: BasisIndex) -> C<T> {
        self.entries[flat_index(idx, self.order)]
    }

    pub fn norm_sqr(&self) -> T {
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }

    /// Evaluates `sum coeff[m,n] e[m,n](z)`.
    pub fn eval(&self, z: &Point<T>, table: &NormTable<T>) -> C<T> {
        assert_eq!(table.order(), self.order);
        let mut acc = Complex::new(T::zero(), T::zero());
        for (k, idx) in enumerate(self.order).enumerate() {
            let e = self.entries[k];
            if e.re != T::zero() || e.im != T::zero() {
                acc += e * table.basis_eval(idx, z);
            }
        }
        acc
    }
}

/// Truncated kernel series `sum_{m,n <= order} (z1 conj w1)^m (z2 conj w2)^n / c[m,n]`.
///
/// Terms are assembled in log space so the `1/c` growth and the decay of the
/// monomial products never meet in the hot path. Converges to the closed-form
/// kernel as the order grows.
pub fn kernel_series<T: Real>(
    z: &Point<T>,
    w: &Point<T>,
    p: &DomainParam<T>,
    order: usize,
) -> Result<C<T>> {
    let table = NormTable::new(p, order);
    kernel_series_with(z, w, &table)
}

/// As [`kernel_series`] but reusing a prebuilt norm table.
pub fn kernel_series_with<T: Real>(
    z: &Point<T>,
    w: &Point<T>,
    table: &NormTable<T>,
) -> Result<C<T>> {
    require_interior(z, table.param())?;
    require_interior(w, table.param())?;
    let x1 = z.z1 * w.z1.conj();
    let x2 = z.z2 * w.z2.conj();
    let ln1 = log_polar(x1);
    let ln2 = log_polar(x2);
    let mut total = Complex::new(T::zero(), T::zero());
    for m in 0..=table.order() {
        if m > 0 && ln1.is_none() {
            break;
        }
        for n in 0..=table.order() {
            if n > 0 && ln2.is_none() {
                break;
            }
            let idx = BasisIndex::new(m, n);
            let mf = T::of(m as f64);
            let nf = T::of(n as f64);
            let mut ln_mag = -table.ln_c(idx);
            let mut arg = T::zero();
            if let Some((l1, a1)) = ln1 {
                ln_mag += mf * l1;
                arg += mf * a1;
            }
            if let Some((l2, a2)) = ln2 {
                ln_mag += nf * l2;
                arg += nf * a2;
            }
            let term = C::from_polar(ln_mag.exp(), arg);
            if !term.re.is_finite() || !term.im.is_finite() {
                return Err(Error::CoefficientOverflow { m, n });
            }
            total += term;
        }
    }
    Ok(total)
}

fn log_polar<T: Real>(v: C<T>) -> Option<(T, T)> {
    let r = v.norm();
    if r == T::zero() {
        None
    } else {
        Some((r.ln(), v.arg()))
    }
}

/// Coefficients of `K_z` over the truncated basis: entry `(m, n)` equals
/// `conj(e[m,n](z))`, so `||coeffs||^2 -> K(z; conj z)` as the order grows.
pub fn kz_coefficients<T: Real>(
    z: &Point<T>,
    p: &DomainParam<T>,
    order: usize,
) -> Result<CoefficientVector<T>> {
    let table = NormTable::new(p, order);
    kz_coefficients_with(z, &table)
}

/// As [`kz_coefficients`] but reusing a prebuilt norm table.
pub fn kz_coefficients_with<T: Real>(
    z: &Point<T>,
    table: &NormTable<T>,
) -> Result<CoefficientVector<T>> {
    require_interior(z, table.param())?;
    let entries = enumerate(table.order())
        .map(|idx| table.basis_eval(idx, z).conj())
        .collect();
    Ok(CoefficientVector::new(table.order(), entries))
}

/// Mass of `k_z` missed by the degree-`order` basis:
/// `1 - ||P_M K_z||^2 / K(z; conj z)`.
pub fn truncation_defect<T: Real>(
    coeffs: &CoefficientVector<T>,
    z: &Point<T>,
    p: &DomainParam<T>,
) -> Result<T> {
    let diag = crate::domain::kernel_diag(z, p)?;
    Ok(T::one() - coeffs.norm_sqr() / diag)
}
