//! Partitions, m-partitions, standard m-tableaux and the scalars attached to
//! them.
//!
//! Component `k` of an m-partition is paired with the parameter `v_k` and,
//! in the classical limit, with the root of unity `xi_k = zeta_m^(k-1)`.

mod coefficients;
mod mpartition;
mod partition;
mod tableau;

pub use coefficients::{
    classical_coefficients, classical_content, contents, f_coefficient, f_croc, f_croc2,
    position_root, q_integer, quantum_content, schur_partials, SchurPartials,
};
pub use mpartition::{enumerate_mpartitions, MNode, MPartition};
pub use partition::{partitions_of, Partition};
pub use tableau::{enumerate_standard_tableaux, enumerate_tableaux_of_size, StandardMTableau};
