//! Constructive quadratic-form layer for Cliff_q(lambda): the ternary
//! conic solver over C(q), Witt decompositions with exact Gram data, and
//! explicit matrices for the simple modules.

mod decompose;
mod solver;
mod theta;

pub use decompose::{witt_decompose, WittDecomposition};
pub use solver::{
    legendre_solve, quadratic_residue_mod, squarefree_part_poly, LegendreSolution,
};
pub use theta::{simple_module_matrices, theta_matrices, verify_module, ModuleMatrices};
