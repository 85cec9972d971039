//! Strong interval trees: exact enumeration, certified asymptotic constants
//! and Boltzmann random generation for permutation classes with bounded
//! prime-node arity.

pub mod asymptotics;
pub mod boltzmann;
pub mod enumerate;
pub mod oracle;
pub mod lambda;
pub mod perm;
pub mod series;
pub mod simples;
pub mod sit;
