//! Exact linear algebra over the rationals and small prime fields.

mod elim;
mod field;
mod matrix;
mod poly;

pub use elim::{
    annihilator_check, annihilator_check_int, constant_diagonal, integer_eigenvalues, is_idempotent_scaled,
    is_positive_semidefinite,
    minimal_polynomial_degree, offdiagonal_support, rank_rational, spectral_summary, MinPolyDegree,
    SpectralSummary,
};
pub use field::{gf2_apply_is_zero, gf2_kernel_basis, gf2_kernel_with_odd_support, rank_mod_p, BitVector, PrimeFieldMatrix};
pub use matrix::{ExactMatrix, Rational, MAX_ENTRIES};
pub(crate) use matrix::check_shape;
pub use poly::{charpoly, Poly};

/// Shorthand for an integer rational.
pub fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Kronecker product, (A⊗B)((i,k),(j,l)) = A(i,j)·B(k,l).
pub fn kronecker(a: &ExactMatrix, b: &ExactMatrix) -> crate::Result<ExactMatrix> {
    a.kronecker(b)
}
