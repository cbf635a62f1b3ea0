//! Rees algebras and toric rings of equigenerated monomial ideals.
//!
//! Everything here lives in an extended ring `K[x, y, t]` (optionally with
//! one more elimination variable `s`) and is computed with a Buchberger
//! engine specialised to binomials with coefficients `+1, -1`.

mod binomial;
mod buchberger;
mod exchange;
mod order;
mod structure;
mod toric;

pub use binomial::{Binomial, ExtRing};
pub use buchberger::{normal_form, reduced_gb, reduced_gb_weighted, s_polynomial, verify_groebner, GroebnerBasis};
pub use exchange::{l_exchange_check, ExchangeCounterexample, ExchangeReport};
pub use order::{Block, BlockKind, ExtOrder, TOrder};
pub use structure::{structure_and_quadraticity_check, swap_binomials, StructureReport};
pub use toric::{
    check_kernel, default_t_order, rees_groebner, rees_presentation_ideal, standard_monomials, toric_ideal,
    ReesPresentation, ToricIdeal,
};
