//! Support library for the `circ-spectra` binary: output models, the dense
//! Hermitian-matrix oracle, agreement sweeps, and constructive enumeration.

pub mod enumerate;
pub mod hermitian;
pub mod report;
pub mod sweep;
