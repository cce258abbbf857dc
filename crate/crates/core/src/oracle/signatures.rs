//! Spherical cone signatures by direct evaluation of the Euler
//! characteristic, without the case analysis used by the classifier.

use std::collections::BTreeSet;

use num_rational::Rational64;

use crate::signature::ConeSignature;

fn euler(weights: &[u32]) -> Rational64 {
    weights
        .iter()
        .fold(Rational64::from_integer(2), |chi, &a| chi - 1 + Rational64::new(1, a as i64))
}

/// A sphere with these cone points is spherical iff it has positive Euler
/// characteristic and is covered by the sphere: never one cone point, and
/// two cone points only when equal.
fn spherical(weights: &[u32]) -> bool {
    let good = match weights {
        [_] => false,
        [a, b] => a == b,
        _ => true,
    };
    good && euler(weights) > Rational64::from_integer(0)
}

/// Every spherical signature with at most three cone points of weight at
/// most `max_weight`.
pub fn enumerate_spherical_signatures(max_weight: u32) -> BTreeSet<ConeSignature> {
    let mut out = BTreeSet::new();
    let mut push = |w: &[u32]| {
        if spherical(w) {
            out.insert(ConeSignature::new(w.iter().copied()).expect("weights are at least 2"));
        }
    };
    push(&[]);
    for a in 2..=max_weight {
        push(&[a]);
        for b in a..=max_weight {
            push(&[a, b]);
            for c in b..=max_weight {
                push(&[a, b, c]);
            }
        }
    }
    out
}
