//! Closed-form bounds on distinguishing depth and width.
//!
//! All formulas are generic over the scalar so they can be evaluated exactly
//! (with [`Rational`](crate::Rational)) or in floating point.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};
use serde::Serialize;

/// Scalar type usable for the bound formulas.
pub trait BoundScalar: Copy + PartialOrd + Num + FromPrimitive + Debug {}

impl<T> BoundScalar for T where T: Copy + PartialOrd + Num + FromPrimitive + Debug {}

fn int<T: BoundScalar>(n: usize) -> T {
    T::from_usize(n).expect("count fits the scalar type")
}

fn ratio<T: BoundScalar>(num: i64, den: i64) -> T {
    T::from_i64(num).expect("fits") / T::from_i64(den).expect("fits")
}

fn max<T: BoundScalar>(a: T, b: T) -> T {
    if b > a {
        b
    } else {
        a
    }
}

/// `l - s(F) - 1`: twin bound from a clique with a pendant star.
pub fn star_term<T: BoundScalar>(l: usize, pendant_star: usize) -> T {
    int::<T>(l) - int(pendant_star) - T::one()
}

/// `l - p(F) - 1`: twin bound from a clique with a pendant path.
pub fn path_term<T: BoundScalar>(l: usize, pendant_path: usize) -> T {
    int::<T>(l) - int(pendant_path) - T::one()
}

/// `l - spa(F) - 3`: twin bound from a clique with a pendant sparkler.
pub fn sparkler_branch_term<T: BoundScalar>(l: usize, spa: usize) -> T {
    int::<T>(l) - int(spa) - int(3)
}

/// Width lower bound for `S_{q,p}`: `max(p, l - p/2 - 2 - (p mod 2)/2)` with `l = q + p`.
pub fn sparkler_width_bound<T: BoundScalar>(q: usize, p: usize) -> T {
    let l = int::<T>(q + p);
    let half = ratio::<T>(1, 2);
    let second = l - int::<T>(p) * half - int(2) - int::<T>(p % 2) * half;
    max(int(p), second)
}

/// `2l/3 - 2`, the width every connected pattern on `l` vertices exceeds.
pub fn general_width_threshold<T: BoundScalar>(l: usize) -> T {
    int::<T>(2 * l) / int(3) - int(2)
}

/// Depth bound for distinguishing `A` (with `v` vertices and largest twin
/// class `sigma`) from any non-isomorphic graph.
///
/// Returns the tightest applicable case: `v/2 + 5/2` when `sigma <= v/2 + 1/2`,
/// otherwise `sigma + 2`, improved to `sigma + 1` when `sigma >= v/2 + 1` and
/// the largest class is an inclusion-maximal homogeneous set.
pub fn homogeneous_depth_bound<T: BoundScalar>(v: usize, sigma: usize, maximal: bool) -> T {
    let half_v = int::<T>(v) * ratio(1, 2);
    let s = int::<T>(sigma);
    let mut best: Option<T> = None;
    let mut take = |b: T| {
        best = Some(match best {
            Some(cur) if cur <= b => cur,
            _ => b,
        })
    };
    if s <= half_v + ratio(1, 2) {
        take(half_v + ratio(5, 2));
    }
    if s >= half_v + ratio(1, 2) {
        take(s + int(2));
    }
    if maximal && s >= half_v + T::one() {
        take(s + T::one());
    }
    best.expect("one of the cases always applies")
}

/// The individual terms of [`combined_lower_bound`](crate::pattern::combined_lower_bound).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LowerBoundTerms<T> {
    pub star: T,
    pub path: T,
    pub sparkler_branch: Option<T>,
    pub sparkler_shape: Option<T>,
    pub star_shape: Option<T>,
    pub path_shape: Option<T>,
    pub value: T,
}

/// Shape information about the pattern that unlocks exact-family bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ShapeHints {
    /// `(q, p)` when the pattern is `S_{q,p}` with `q >= 3`, `p >= 2`.
    pub sparkler: Option<(usize, usize)>,
    /// `s` when the pattern is the star `K_{1,s}` with `s >= 3`.
    pub star: Option<usize>,
    /// `l` when the pattern is the path `P_l` with `l >= 3`.
    pub path: Option<usize>,
}

impl<T: BoundScalar> LowerBoundTerms<T> {
    pub fn new(l: usize, pendant_star: usize, pendant_path: usize, spa: Option<usize>, shape: ShapeHints) -> Self {
        let star = star_term(l, pendant_star);
        let path = path_term(l, pendant_path);
        let sparkler_branch = spa.map(|spa| sparkler_branch_term(l, spa));
        let sparkler_shape = shape.sparkler.map(|(q, p)| sparkler_width_bound(q, p));
        let star_shape = shape.star.map(int);
        let path_shape = shape.path.map(|l| int::<T>(l) - int(2));
        let mut value = max(star, path);
        for t in [sparkler_branch, sparkler_shape, star_shape, path_shape].into_iter().flatten() {
            value = max(value, t);
        }
        LowerBoundTerms {
            star,
            path,
            sparkler_branch,
            sparkler_shape,
            star_shape,
            path_shape,
            value,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn sparkler_bound_values() {
        // q = 4, p = 4: max(4, 8 - 2 - 2 - 0) = 4.
        assert_eq!(sparkler_width_bound::<Rational>(4, 4), r(4, 1));
        // q = 6, p = 3: max(3, 9 - 3/2 - 2 - 1/2) = 5.
        assert_eq!(sparkler_width_bound::<Rational>(6, 3), r(5, 1));
        // q = 7, p = 2: max(2, 9 - 1 - 2) = 6.
        assert_eq!(sparkler_width_bound::<Rational>(7, 2), r(6, 1));
        assert_eq!(sparkler_width_bound::<f64>(6, 3), 5.0);
    }

    #[test]
    fn general_threshold() {
        assert_eq!(general_width_threshold::<Rational>(8), r(10, 3));
        assert_eq!(general_width_threshold::<Rational>(3), r(0, 1));
    }

    #[test]
    fn homogeneous_bound_cases() {
        // sigma small: v/2 + 5/2.
        assert_eq!(homogeneous_depth_bound::<Rational>(6, 2, false), r(11, 2));
        // sigma = v/2 + 1/2 exactly: both cases apply, take the smaller.
        assert_eq!(homogeneous_depth_bound::<Rational>(5, 3, false), r(5, 1));
        // sigma >= v/2 + 1 with a maximal class.
        assert_eq!(homogeneous_depth_bound::<Rational>(6, 4, true), r(5, 1));
        assert_eq!(homogeneous_depth_bound::<Rational>(6, 4, false), r(6, 1));
        assert_eq!(homogeneous_depth_bound::<f64>(6, 4, true), 5.0);
    }

    #[test]
    fn terms_take_the_maximum() {
        let t = LowerBoundTerms::<Rational>::new(
            8,
            3,
            4,
            Some(4),
            ShapeHints { sparkler: Some((4, 4)), ..ShapeHints::default() },
        );
        assert_eq!(t.star, r(4, 1));
        assert_eq!(t.path, r(3, 1));
        assert_eq!(t.sparkler_branch, Some(r(1, 1)));
        assert_eq!(t.value, r(4, 1));
        let star = LowerBoundTerms::<Rational>::new(5, 4, 1, Some(1), ShapeHints { star: Some(4), ..ShapeHints::default() });
        assert_eq!(star.value, r(4, 1));
        let p3 = LowerBoundTerms::<Rational>::new(3, 2, 2, Some(0), ShapeHints { path: Some(3), ..ShapeHints::default() });
        assert_eq!((p3.star, p3.path, p3.value), (r(0, 1), r(0, 1), r(1, 1)));
    }
}
