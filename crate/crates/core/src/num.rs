//! Scalar abstraction for the numerical core.
//!
//! All domain math is written against [`Real`], so the library runs at `f32`
//! or `f64` precision (the tolerances quoted throughout the crate assume
//! `f64`). Concrete aliases live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Complex number over a library scalar.
pub type C<T> = Complex<T>;

/// Floating-point scalar the core is generic over.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` constant into the scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }

    /// Converts into `f64`, for error reporting and serialization.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `x^(1/2)` of a nonnegative real, clamped against `-0.0` noise.
pub fn sqrt_nn<T: Real>(x: T) -> T {
    if x <= T::zero() {
        T::zero()
    } else {
        x.sqrt()
    }
}

/// `1 - |v|^2` for a complex number, nonnegative for `|v| <= 1`.
pub fn one_minus_norm_sqr<T: Real>(v: C<T>) -> T {
    T::one() - v.norm_sqr()
}

/// Deterministic pairwise summation.
///
/// Splits recursively so the result is a function of the input order only,
/// and rounding error grows like `O(log n)`.
pub fn pairwise_sum<T>(values: &[T]) -> T
where
    T: Copy + std::ops::Add<Output = T> + num_traits::Zero,
{
    match values.len() {
        0 => T::zero(),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Streaming pairwise summation with `O(log n)` state.
///
/// Accumulates blocks of 256 values and merges them with a binary-counter
/// scheme, so the summation order is a deterministic function of the input
/// order only.
pub struct PairwiseAccumulator<T> {
    block: Vec<T>,
    levels: Vec<Option<T>>,
}

impl<T: Copy + std::ops::Add<Output = T> + num_traits::Zero> Default for PairwiseAccumulator<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Copy + std::ops::Add<Output = T> + num_traits::Zero> PairwiseAccumulator<T> {
    const BLOCK: usize = 256;

    pub fn new() -> Self {
        Self {
            block: Vec::with_capacity(Self::BLOCK),
            levels: Vec::new(),
        }
    }

    pub fn push(&mut self, value: T) {
        self.block.push(value);
        if self.block.len() == Self::BLOCK {
            let s = pairwise_sum(&self.block);
            self.block.clear();
            self.carry(s, 0);
        }
    }

    fn carry(&mut self, mut value: T, mut level: usize) {
        loop {
            if level == self.levels.len() {
                self.levels.push(Some(value));
                return;
            }
            match self.levels[level].take() {
                None => {
                    self.levels[level] = Some(value);
                    return;
                }
                Some(existing) => {
                    value = existing + value;
                    level += 1;
                }
            }
        }
    }

    pub fn finish(self) -> T {
        let mut total = pairwise_sum(&self.block);
        for slot in self.levels.into_iter().flatten() {
            total = slot + total;
        }
        total
    }
}
