//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra and enumeration kernels.
///
/// Guard violations (`Guard`) mark requests outside the supported desk-scale
/// range; they are distinct from mathematical check failures, which are
/// reported as data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different ring contexts (variables, order or field).
    RingMismatch,
    /// A variable name is not part of the ring context.
    UnknownVariable(String),
    /// Matrix input to a determinant was not square (or was empty).
    NonSquareMatrix,
    /// Homogenization variable already occurs in the polynomial.
    HomogenizationVarPresent(String),
    /// Division by zero, or by a dual number with nilpotent constant part.
    NotInvertible,
    /// The coefficient ring is not a field (dual numbers in a field-only op).
    NotAField,
    /// The modulus passed for a prime field is not prime.
    NotPrime(u64),
    /// Operation undefined in characteristic 2 (symmetric quadric rank).
    CharacteristicTwo,
    /// Input to `quadric_rank` is not homogeneous of degree 2.
    NotQuadratic,
    /// Generators expected to be homogeneous were not.
    NotHomogeneous,
    /// The ring's monomial order does not match the requested block shape.
    OrderMismatch,
    /// `singular_ideal` called with a codimension below the linear part.
    CodimOutOfRange { codim: usize, linear: usize },
    /// Colength or level of a submodule does not fit the requested operation.
    ColengthMismatch { expected: usize, actual: usize },
    /// Request exceeds a desk-scale enumeration or symbolic guard.
    Guard(String),
}

impl core::error::Error for Error {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "ring context mismatch"),
            Error::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            Error::NonSquareMatrix => write!(f, "matrix is not square and nonempty"),
            Error::HomogenizationVarPresent(name) => {
                write!(f, "homogenization variable `{name}` occurs in the input")
            }
            Error::NotInvertible => write!(f, "element is not invertible"),
            Error::NotAField => write!(f, "coefficient ring is not a field"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::CharacteristicTwo => {
                write!(f, "operation is undefined in characteristic 2")
            }
            Error::NotQuadratic => write!(f, "polynomial is not homogeneous of degree 2"),
            Error::NotHomogeneous => write!(f, "generators are not homogeneous"),
            Error::OrderMismatch => {
                write!(f, "monomial order does not match the requested block shape")
            }
            Error::CodimOutOfRange { codim, linear } => write!(
                f,
                "codimension {codim} is out of range (ideal has {linear} independent linear forms)"
            ),
            Error::ColengthMismatch { expected, actual } => {
                write!(f, "expected colength {expected}, got {actual}")
            }
            Error::Guard(msg) => write!(f, "guard exceeded: {msg}"),
        }
    }
}
