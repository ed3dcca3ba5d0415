//! `omega(n)`, Borel classes and ternary laws.

mod classes;
mod omega;
mod ternary;

pub use classes::{
    borel_formula, borel_sum_classes, check_borel_prop, lambda_triple_product, orbit_combination, orbit_sum,
    preliminary_lambda_values, triple_product_closed, triple_product_r_route, TripleProduct, TRIPLE_MAX,
};
pub use omega::{check_omega_laws, omega, omega_class, omega_closed, psi_u_minus_tau, OmegaBounds, OmegaClass};
pub use ternary::{
    at_beta_one, borel_of_triple, check_ternary, expected_laws, k_laws_direct, k_specialize, rank_specialize,
    ternary_laws, witt_specialize, LawValue, TernaryLaw, Theory,
};
