//! Toppling ideals, their Gröbner bases and the parking ideal.

mod monomial;
mod order;
mod parking;
mod toppling;

pub use monomial::Monomial;
pub use order::{mrev_compare, weight_vector, MRevOrder, WeightVector};
pub use parking::{
    hilbert_counts, hilbert_counts_in, krull_dimension, monomial_count, parking_ideal,
    verify_minimal, Ambient, MONOMIAL_LIMIT,
};
pub use toppling::{
    groebner_basis, lead_divisible, normal_form, toppling_generators, verify_buchberger,
    verify_buchberger_with_limit, ParsetBinomial, DEFAULT_PAIR_LIMIT,
};
