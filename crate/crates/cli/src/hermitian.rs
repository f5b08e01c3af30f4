//! Dense-matrix oracle: materialize the n x n Hermitian matrix of a mixed
//! circulant graph and hand it to a standard eigensolver. Slow but
//! definition-level, so it cross-checks the closed-form spectra.

use circ_spectra_core::circulant::ConnectionSet;
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

/// Entry (u, v) is 1 for a two-way edge (v - u in both S and S^-1),
/// (1 + i sqrt 3)/2 for an arc u -> v, and its conjugate for the reverse arc.
pub fn hs_matrix(s: &ConnectionSet) -> DMatrix<Complex64> {
    let n = s.n();
    let omega6 = Complex64::new(0.5, 3f64.sqrt() / 2.0);
    DMatrix::from_fn(n as usize, n as usize, |u, v| {
        let diff = (v as u64 + n - u as u64) % n;
        if diff == 0 || !s.contains(diff) {
            if diff != 0 && s.contains(n - diff) {
                return omega6.conj();
            }
            return Complex64::new(0.0, 0.0);
        }
        if s.contains(n - diff) {
            Complex64::new(1.0, 0.0)
        } else {
            omega6
        }
    })
}

/// Eigenvalues of the materialized matrix, ascending. They are real because
/// the matrix is Hermitian.
pub fn dense_hs_eigenvalues(s: &ConnectionSet) -> Vec<f64> {
    let eigen = SymmetricEigen::new(hs_matrix(s));
    let mut values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}
