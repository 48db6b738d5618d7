//! Compositions, their generator category, and a symmetric-function
//! realization with verification sweeps for the identities it should
//! satisfy.

pub mod category;
pub mod compositions;
pub mod contingency;
pub mod error;
pub mod hopfverify;
pub mod report;
pub mod simplicial;
pub mod symfunc;
mod text;

pub use category::{
    apply_generator, compose, gamma_of, parse_word, semantic_equal, Comparison, Family, Generator,
    MorphismWord, Realization, RelationInstance,
};
pub use compositions::{enumerate_compositions, refines, BlockIntervals, Composition};
pub use contingency::{enumerate_matrices, kappa, sigma_k, ContingencyMatrix, EntryMode, Permutation};
pub use error::{Error, Result};
pub use report::{Failure, VerificationReport};
pub use symfunc::{
    big_coproduct, big_product, hall_inner, schur, DirectSumElement, HallTables, Partition,
    SymElement, SymFuncRealization, TensorElement,
};
pub use hopfverify::{
    check_bidegree12, check_hopf_compat, check_relations, check_six_cases, check_square_condition,
    explore_mixed_bidegree, hopf_defect_12, modified_mult_12, six_term_12, GradedSum, Reading,
};
