//! Weights, cone signatures of closed 2-orbifolds with sphere underlying
//! space, and their classification.
//!
//! All comparisons are exact. The vertex inequality `1/a + 1/b + 1/c > 1` is
//! evaluated by clearing denominators (`bc + ac + ab > abc`) in 128-bit
//! integers, which cannot overflow for 32-bit weights.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("weight {0} is below the minimum cone order 2")]
    TooSmall(u32),
}

/// Order of the cyclic isotropy group along a singular edge or at a cone
/// point. Always at least 2 once constructed through [`Weight::new`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u32);

impl Weight {
    pub const TWO: Weight = Weight(2);

    pub fn new(value: u32) -> Result<Weight, WeightError> {
        if value < 2 {
            Err(WeightError::TooSmall(value))
        } else {
            Ok(Weight(value))
        }
    }

    /// Stores the raw value so that malformed input graphs can still be
    /// represented and reported by validation.
    pub(crate) fn unchecked(value: u32) -> Weight {
        Weight(value)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_valid(self) -> bool {
        self.0 >= 2
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `1/a1 + 1/a2 + 1/a3 > 1`, the condition on the three weights at a vertex
/// of the singular set.
pub fn vertex_triple_is_admissible(a1: Weight, a2: Weight, a3: Weight) -> bool {
    let (a, b, c) = (a1.0 as u128, a2.0 as u128, a3.0 as u128);
    b * c + a * c + a * b > a * b * c
}

/// Cone points of a closed orientable 2-orbifold whose underlying space is
/// the 2-sphere, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ConeSignature(Vec<Weight>);

impl ConeSignature {
    pub fn new<I: IntoIterator<Item = u32>>(values: I) -> Result<ConeSignature, WeightError> {
        let weights = values.into_iter().map(Weight::new).collect::<Result<Vec<_>, _>>()?;
        Ok(ConeSignature::from_weights(weights))
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(weights: I) -> ConeSignature {
        let mut w: Vec<Weight> = weights.into_iter().collect();
        w.sort_unstable();
        ConeSignature(w)
    }

    pub fn smooth() -> ConeSignature {
        ConeSignature(Vec::new())
    }

    pub fn weights(&self) -> &[Weight] {
        &self.0
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().map(|w| w.0).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn classify(&self) -> TwoOrbifoldClass {
        classify_cone_signature(self)
    }

    pub fn is_spherical(&self) -> bool {
        self.classify().is_spherical()
    }
}

/// Written as `S2(2,2,3)`; the smooth sphere is `S2`.
impl fmt::Display for ConeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S2")?;
        if !self.0.is_empty() {
            let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoOrbifoldClass {
    SphericalSmooth,
    SphericalFootball,
    SphericalTriangle,
    BadTeardrop,
    BadFootball,
    Toroidal,
    Hyperbolic,
    /// Four or more cone points; carries the number of cone points.
    NotSpherical(usize),
}

impl TwoOrbifoldClass {
    pub fn is_spherical(self) -> bool {
        matches!(
            self,
            TwoOrbifoldClass::SphericalSmooth
                | TwoOrbifoldClass::SphericalFootball
                | TwoOrbifoldClass::SphericalTriangle
        )
    }

    pub fn is_bad(self) -> bool {
        matches!(self, TwoOrbifoldClass::BadTeardrop | TwoOrbifoldClass::BadFootball)
    }
}

pub fn classify_cone_signature(sig: &ConeSignature) -> TwoOrbifoldClass {
    match sig.weights() {
        [] => TwoOrbifoldClass::SphericalSmooth,
        [_] => TwoOrbifoldClass::BadTeardrop,
        [a, b] if a == b => TwoOrbifoldClass::SphericalFootball,
        [_, _] => TwoOrbifoldClass::BadFootball,
        [a, b, c] => {
            let (a, b, c) = (a.0 as u128, b.0 as u128, c.0 as u128);
            let lhs = b * c + a * c + a * b;
            let rhs = a * b * c;
            match lhs.cmp(&rhs) {
                std::cmp::Ordering::Greater => TwoOrbifoldClass::SphericalTriangle,
                std::cmp::Ordering::Equal => TwoOrbifoldClass::Toroidal,
                std::cmp::Ordering::Less => TwoOrbifoldClass::Hyperbolic,
            }
        }
        w => TwoOrbifoldClass::NotSpherical(w.len()),
    }
}

/// `2 - Σ (1 - 1/a_i)`.
pub fn orbifold_euler_characteristic(sig: &ConeSignature) -> BigRational {
    let one = BigRational::one();
    let mut chi = BigRational::from_integer(BigInt::from(2));
    for w in sig.weights() {
        let inv = BigRational::new(BigInt::one(), BigInt::from(w.0));
        chi -= &one - inv;
    }
    chi
}

/// Sign of the Euler characteristic as -1, 0, 1.
pub fn euler_sign(sig: &ConeSignature) -> i8 {
    let chi = orbifold_euler_characteristic(sig);
    if chi.is_zero() {
        0
    } else if chi > BigRational::zero() {
        1
    } else {
        -1
    }
}
