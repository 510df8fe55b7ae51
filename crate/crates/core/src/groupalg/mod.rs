//! Sparse arithmetic in `C[S_n]` over a pluggable coefficient ring, the
//! Jucys–Murphy elements and their two product formulas, and averaging over
//! the hyperoctahedral group.

mod element;
mod hyperoctahedral;
mod jucys;

pub use element::{AlgebraElement, Side};
pub use hyperoctahedral::{
    average_projector, hyperoctahedral_elements, hyperoctahedral_generators, stabilizer_of_beta,
};
pub use jucys::{jm_element, jm_product_orthogonal, jm_product_unitary};
