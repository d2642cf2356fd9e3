//! Meromorphic families `γ(z)` given by Laurent-polynomial matrices: pole
//! orders, exponents, the elimination factorization, limits in the
//! Grassmannian and in exterior powers, and changes of parameter.

mod exponents;
mod factor;
mod laurent;
mod limits;
mod reparam;

pub use exponents::{exponents, ExponentData};
pub use factor::{default_precision, factorize, factorize_stable, Factorization};
pub use laurent::{
    check_family, coefficient, constant_family, determinant, diagonal_family, exponent_range, lambda_family, ord,
    ord_poly, shift_family, LaurentMatrix, LaurentPoly,
};
pub use limits::{
    is_rank_zero_limit, limit_glued, limit_hinge, limit_rank, limit_relation, pluecker_limit, relation_pluecker,
    value_at_zero,
};
pub use reparam::{reparametrize, reparametrize_to_degree, Reparametrization};
