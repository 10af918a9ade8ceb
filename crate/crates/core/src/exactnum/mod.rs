//! Exact scalars: rationals and cyclotomic field elements.

mod cyclo;
mod poly;
mod rational;

pub use cyclo::{
    cos_frac, cyc_arith, cyclotomic_polynomial, lcm, reduce_root_sum, sin_frac, totient, CycAccumulator, CycNum,
    CycOp, CyclotomicField, RootSum,
};
pub use poly::CycPoly;
pub use rational::Rational;
