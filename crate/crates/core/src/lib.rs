//! Discrete phase space for `N` qubits labelled by GF(2^N).
//!
//! The grid points `(α, β)` carry displacement operators `D(α, β)`, which
//! become Pauli strings once the field is expanded in a self-dual basis.
//! Lines through the origin give complete sets of mutually unbiased bases,
//! and the discrete Wigner function lives on the same grid.
//!
//! Coarse graining groups the field into cosets of a GF(2^m)-subspace.
//! [`coarse`] finds the displacement operators that still determine the
//! thick lines, and [`wigner`] computes Wigner tables on the coset grid.
//!
//! ```
//! use qcoarse::field::{CosetPartition, Field};
//! use qcoarse::phase_space::PhaseSpace;
//!
//! let space = PhaseSpace::new(Field::canonical(2).unwrap());
//! let partition = CosetPartition::subfield(space.field(), 1).unwrap();
//! let table = space.survivor_table(&partition).unwrap();
//! let ops: Vec<String> = table.operators().map(|p| p.unsigned().to_string()).collect();
//! assert_eq!(ops, ["ZZ", "YY", "XX"]);
//! ```

pub mod cli;
pub mod coarse;
pub mod dense;
pub mod error;
pub mod field;
pub mod io;
pub mod pauli;
pub mod phase_space;
pub mod wigner;

pub use error::{Error, Result};
