//! Bilinear forms over a field via Gram matrices, with the Hasse-Minkowski
//! classification over the rationals as an oracle for classes in `GW(Q)`.

mod checks;
mod gram;
mod invariants;
mod matrix;

pub use checks::{
    antisymmetrizer, check_forms, lambda_hyp_witness, s_v_block, s_v_matrix, symmetrizer, FormBounds,
};
pub use gram::{
    check_congruence, check_embedding, format_rational, multisets, parse_rational, subsets, GramForm, GramJson,
    Symmetry,
};
pub use invariants::{
    diagonalize, factor, gw_identity_check, hilbert_symbol, invariants, invariants_of_diagonal, square_class,
    squarefree, GWQInvariants, GwComparison, Place,
};
pub use matrix::{Matrix, Scalar};
