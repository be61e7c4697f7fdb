//! scalar abstraction for the generic linear-algebra and polynomial layers.
//!
//! everything that does row reduction or polynomial arithmetic is generic over
//! [`Scalar`], a num-traits bundle satisfied by `f32`/`f64` as well as exact
//! types. the rest of the crate instantiates it with [`Rat`], arbitrary
//! precision rationals, because the rank certificates produced here are only
//! meaningful in exact arithmetic.

use std::fmt;

use num_traits::{Num, Signed};

/// field-like scalar: ring ops, exact division, negation, zero/one tests.
pub trait Scalar: Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display {}

/// exact rational scalar used by the supermodule layers.
pub type Rat = num_rational::BigRational;

/// rational `p/q` from machine integers; panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(p.into(), q.into())
}

/// rational from an integer.
pub fn rint(p: i64) -> Rat {
    Rat::from_integer(p.into())
}
