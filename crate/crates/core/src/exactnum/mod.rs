//! Exact scalar arithmetic: arbitrary-precision rationals and cyclotomic
//! field elements. Everything here is immutable and exact; there is no
//! floating point anywhere.

mod cyclotomic;
mod poly;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub(crate) use cyclotomic::{from_buffer, mul_acc_into, product_buffer};
pub use rational::Rational;
