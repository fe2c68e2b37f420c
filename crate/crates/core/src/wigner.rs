//! Discrete Wigner functions on the `2^N × 2^N` grid and their coarse
//! versions on coset rectangles.
//!
//! The kernel is
//!
//! ```text
//! Δ(α, β) = 2^{-N} Σ_{α',β'} χ(αα' + ββ') D(α', β')
//! ```
//!
//! (in characteristic two `αα' − ββ'` and `αα' + ββ'` coincide) and
//! `W(α, β) = 2^{-N} Tr[ρ Δ(α, β)]`.
//!
//! Because `α` pairs with the `Z` label, conjugation by `D(γ, δ)` moves the
//! kernel to `Δ(α + δ, β + γ)`.
//!
//! In a self-dual basis `χ(αα') = (-1)^{popcount(a & a')}` for the
//! computational indices `a`, `a'`, so the whole table is a two-dimensional
//! Walsh–Hadamard transform of the displacement expectation values. That is
//! how [`wigner_of_state`] and [`reconstruct_state`] work; [`kernel_dense`]
//! and [`wigner_dense`] build the operators explicitly and serve as the
//! oracle.
//!
//! Tables are stored row-major with rows indexed by `β` and columns by `α`,
//! both in computational-index order. Columns then correspond to
//! computational basis states and rows to Fourier basis states.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::dense::{check_cap, DenseOperator, MAX_KERNEL_QUBITS};
use crate::error::{Error, Result};
use crate::field::{CosetPartition, FieldElement};
use crate::pauli::phase_phi;
use crate::phase_space::{LineId, PhaseSpace, Slope};

pub const DEFAULT_STATE_TOLERANCE: f64 = 1e-10;

/// A validated density matrix, optionally remembering the pure state it
/// came from.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumState {
    rho: DMatrix<Complex64>,
    amplitudes: Option<DVector<Complex64>>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim < 2 || !dim.is_power_of_two() {
        Err(Error::Dimension(dim))
    } else {
        Ok(())
    }
}

impl QuantumState {
    pub fn from_vector(v: DVector<Complex64>) -> Result<Self> {
        Self::from_vector_with_tolerance(v, DEFAULT_STATE_TOLERANCE)
    }

    pub fn from_vector_with_tolerance(v: DVector<Complex64>, tol: f64) -> Result<Self> {
        check_dim(v.len())?;
        let norm = v.norm_squared();
        if (norm - 1.0).abs() > tol {
            return Err(Error::NotNormalized(format!("squared norm is {norm}")));
        }
        let rho = &v * v.adjoint();
        Ok(QuantumState {
            rho,
            amplitudes: Some(v),
        })
    }

    pub fn from_density(m: DMatrix<Complex64>) -> Result<Self> {
        Self::from_density_with_tolerance(m, DEFAULT_STATE_TOLERANCE)
    }

    /// Checks Hermiticity, unit trace and positivity, each to `tol`, and
    /// symmetrizes the result.
    pub fn from_density_with_tolerance(m: DMatrix<Complex64>, tol: f64) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(m.nrows()));
        }
        check_dim(m.nrows())?;
        let skew = (&m - m.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if skew > tol {
            return Err(Error::InvalidState(format!(
                "not Hermitian (max deviation {skew:e})"
            )));
        }
        let rho = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let trace = rho.trace().re;
        if (trace - 1.0).abs() > tol {
            return Err(Error::NotNormalized(format!("trace is {trace}")));
        }
        let min = DenseOperator::wrap(rho.clone())
            .hermitian_eigenvalues()
            .first()
            .copied()
            .unwrap_or(0.0);
        if min < -tol {
            return Err(Error::InvalidState(format!(
                "not positive semidefinite (eigenvalue {min:e})"
            )));
        }
        Ok(QuantumState {
            rho,
            amplitudes: None,
        })
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        let rho = DMatrix::identity(dim, dim) * Complex64::new(1.0 / dim as f64, 0.0);
        Ok(QuantumState {
            rho,
            amplitudes: None,
        })
    }

    /// Computational basis state `|k⟩`.
    pub fn basis_state(dim: usize, k: usize) -> Result<Self> {
        check_dim(dim)?;
        let mut v = DVector::zeros(dim);
        v[k] = Complex64::new(1.0, 0.0);
        Self::from_vector(v)
    }

    pub fn dim(&self) -> usize {
        self.rho.nrows()
    }

    pub fn num_qubits(&self) -> u32 {
        self.dim().trailing_zeros()
    }

    pub fn density(&self) -> &DMatrix<Complex64> {
        &self.rho
    }

    pub fn amplitudes(&self) -> Option<&DVector<Complex64>> {
        self.amplitudes.as_ref()
    }

    pub fn is_pure(&self) -> bool {
        self.amplitudes.is_some()
    }

    /// `Tr[ρ A]`.
    pub fn expectation(&self, a: &DenseOperator) -> Complex64 {
        (&self.rho * a.matrix()).trace()
    }
}

/// A real function on the fine grid or on coset rectangles.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerTable {
    pub dim: usize,
    pub coarse: bool,
    /// Axis labels, shared by rows and columns.
    pub labels: Vec<String>,
    /// `values[row][col]`, with rows indexed by `β` and columns by `α`.
    pub values: Vec<Vec<f64>>,
}

impl WignerTable {
    pub fn side(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, alpha_idx: usize, beta_idx: usize) -> f64 {
        self.values[beta_idx][alpha_idx]
    }

    pub fn total(&self) -> f64 {
        self.values.iter().flatten().sum()
    }

    pub fn max_abs_diff(&self, other: &WignerTable) -> f64 {
        self.values
            .iter()
            .flatten()
            .zip(other.values.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Sum of the fine-table entries at the given points.
    pub fn sum_over(&self, space: &PhaseSpace, points: &[(FieldElement, FieldElement)]) -> f64 {
        points
            .iter()
            .map(|&(a, b)| self.get(space.index_of(a), space.index_of(b)))
            .sum()
    }

    fn check_fine(&self, space: &PhaseSpace) -> Result<()> {
        let n = space.dim();
        if self.coarse || self.values.len() != n || self.values.iter().any(|r| r.len() != n) {
            return Err(Error::TableShape(format!("expected a fine {n}×{n} table")));
        }
        Ok(())
    }
}

fn walsh_hadamard<T>(v: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let mut h = 1;
    while h < v.len() {
        for block in v.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = a + b;
                *y = a - b;
            }
        }
        h *= 2;
    }
}

/// In-place 2-D transform of a row-major `n × n` array.
fn walsh_hadamard_2d(v: &mut [f64], n: usize) {
    for row in v.chunks_mut(n) {
        walsh_hadamard(row);
    }
    let mut col = vec![0.0; n];
    for c in 0..n {
        for r in 0..n {
            col[r] = v[r * n + c];
        }
        walsh_hadamard(&mut col);
        for r in 0..n {
            v[r * n + c] = col[r];
        }
    }
}

fn phase_grid(space: &PhaseSpace) -> Vec<Complex64> {
    let n = space.dim();
    let field = space.field();
    let mut out = Vec::with_capacity(n * n);
    for b in 0..n {
        for a in 0..n {
            out.push(phase_phi(field, space.element_at(a), space.element_at(b)).to_complex());
        }
    }
    out
}

fn check_state(space: &PhaseSpace, state: &QuantumState) -> Result<()> {
    check_cap(space.num_qubits(), MAX_KERNEL_QUBITS)?;
    if state.dim() != space.dim() {
        return Err(Error::Dimension(state.dim()));
    }
    Ok(())
}

/// `Tr[ρ D(α', β')]` for every label, row-major in `(b', a')`.
pub fn expectation_grid(space: &PhaseSpace, state: &QuantumState) -> Result<Vec<f64>> {
    check_state(space, state)?;
    let n = space.dim();
    let rho = state.density();
    let phases = phase_grid(space);
    let mut out = vec![0.0; n * n];
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    for b in 0..n {
        for (r, x) in v.iter_mut().enumerate() {
            *x = rho[(r ^ b, r)];
        }
        walsh_hadamard(&mut v);
        for a in 0..n {
            out[b * n + a] = (phases[b * n + a] * v[a]).re;
        }
    }
    Ok(out)
}

fn grid_to_rows(flat: &[f64], n: usize) -> Vec<Vec<f64>> {
    flat.chunks(n).map(<[f64]>::to_vec).collect()
}

fn fine_labels(space: &PhaseSpace) -> Vec<String> {
    (0..space.dim())
        .map(|k| space.ket_label(space.element_at(k)))
        .collect()
}

/// Fine Wigner table computed with the fast transform.
pub fn wigner_of_state(space: &PhaseSpace, state: &QuantumState) -> Result<WignerTable> {
    let n = space.dim();
    let mut grid = expectation_grid(space, state)?;
    walsh_hadamard_2d(&mut grid, n);
    let norm = ((n * n) as f64).recip();
    grid.iter_mut().for_each(|x| *x *= norm);
    Ok(WignerTable {
        dim: n,
        coarse: false,
        labels: fine_labels(space),
        values: grid_to_rows(&grid, n),
    })
}

/// `ρ = Σ W(α, β) Δ(α, β)`.
pub fn reconstruct_state(space: &PhaseSpace, table: &WignerTable) -> Result<QuantumState> {
    check_cap(space.num_qubits(), MAX_KERNEL_QUBITS)?;
    table.check_fine(space)?;
    let n = space.dim();
    let mut hat: Vec<f64> = table.values.iter().flatten().copied().collect();
    walsh_hadamard_2d(&mut hat, n);
    let phases = phase_grid(space);
    let norm = Complex64::new((n as f64).recip(), 0.0);
    let mut rho = DMatrix::zeros(n, n);
    let mut u = vec![Complex64::new(0.0, 0.0); n];
    for b in 0..n {
        for (a, x) in u.iter_mut().enumerate() {
            *x = phases[b * n + a] * hat[b * n + a];
        }
        walsh_hadamard(&mut u);
        for (r, x) in u.iter().enumerate() {
            rho[(r, r ^ b)] = x * norm;
        }
    }
    QuantumState::from_density_with_tolerance(rho, 1e-8)
}

/// `Δ(α, β)` as a dense matrix.
pub fn kernel_dense(
    space: &PhaseSpace,
    alpha: FieldElement,
    beta: FieldElement,
) -> Result<DenseOperator> {
    check_cap(space.num_qubits(), MAX_KERNEL_QUBITS)?;
    let field = space.field();
    let n = space.dim();
    let norm = (n as f64).recip();
    let mut m = DMatrix::zeros(n, n);
    for a2 in field.elements() {
        for b2 in field.elements() {
            let chi = field.character(field.mul(alpha, a2) + field.mul(beta, b2)) as f64;
            let coeff = phase_phi(field, a2, b2).to_complex() * (chi * norm);
            space.accumulate_displacement(&mut m, a2, b2, coeff);
        }
    }
    Ok(DenseOperator::wrap(m))
}

/// Fine table from `2^{-N} Tr[ρ Δ]`, one dense kernel per point.
pub fn wigner_dense(space: &PhaseSpace, state: &QuantumState) -> Result<WignerTable> {
    check_state(space, state)?;
    let n = space.dim();
    let norm = (n as f64).recip();
    let mut values = vec![vec![0.0; n]; n];
    for (b, row) in values.iter_mut().enumerate() {
        for (a, x) in row.iter_mut().enumerate() {
            let k = kernel_dense(space, space.element_at(a), space.element_at(b))?;
            *x = state.expectation(&k).re * norm;
        }
    }
    Ok(WignerTable {
        dim: n,
        coarse: false,
        labels: fine_labels(space),
        values,
    })
}

/// The line whose projector probability equals the sum of `W` over the
/// points of `line`.
///
/// Summing the kernel over `β = λα + γ` leaves `Σ_β' χ(γβ') D(λβ', β')`,
/// the projector of slope `λ^{-1}` and intercept `γλ^{-1}`. Slope `0`
/// pairs with the vertical slope, keeping the intercept.
pub fn marginal_line(space: &PhaseSpace, line: LineId) -> LineId {
    let field = space.field();
    match line.slope {
        Slope::Infinite => LineId::new(Slope::Finite(FieldElement::ZERO), line.intercept),
        Slope::Finite(l) if l.is_zero() => LineId::new(Slope::Infinite, line.intercept),
        Slope::Finite(l) => {
            let inv = field.inv(l).expect("nonzero slope");
            LineId::new(Slope::Finite(inv), field.mul(line.intercept, inv))
        }
    }
}

fn perp_indices(space: &PhaseSpace, partition: &CosetPartition) -> Vec<usize> {
    let field = space.field();
    let c0 = partition.initial_coset().elements();
    field
        .elements()
        .filter(|&a| c0.iter().all(|&g| field.trace(field.mul(g, a)) == 0))
        .map(|a| space.index_of(a))
        .collect()
}

fn coarse_labels(space: &PhaseSpace, partition: &CosetPartition) -> Vec<String> {
    let field = space.field();
    partition
        .representatives()
        .into_iter()
        .map(|r| field.label(r).to_string())
        .collect()
}

/// `𝔇(C_τ, C_ξ) = Σ_{α∈C_τ} Σ_{β∈C_ξ} Δ(α, β)`, evaluated as
/// `2^{-N} |C_0|² Σ_{α',β'∈C_0^⊥} χ(τα' + ξβ') D(α', β')`.
pub fn coarse_kernel(
    space: &PhaseSpace,
    partition: &CosetPartition,
    tau: usize,
    xi: usize,
) -> Result<DenseOperator> {
    check_cap(space.num_qubits(), MAX_KERNEL_QUBITS)?;
    let field = space.field();
    partition.check_field(field)?;
    let t = partition.coset(tau)?.representative();
    let x = partition.coset(xi)?.representative();
    let size = partition.initial_coset().len() as f64;
    let norm = size * size / space.dim() as f64;
    let perp = perp_indices(space, partition);
    let mut m = DMatrix::zeros(space.dim(), space.dim());
    for &ai in &perp {
        for &bi in &perp {
            let (a2, b2) = (space.element_at(ai), space.element_at(bi));
            let chi = field.character(field.mul(t, a2) + field.mul(x, b2)) as f64;
            let coeff = phase_phi(field, a2, b2).to_complex() * (chi * norm);
            space.accumulate_displacement(&mut m, a2, b2, coeff);
        }
    }
    Ok(DenseOperator::wrap(m))
}

/// Coarse table `2^{-N} Tr[ρ 𝔇(C_τ, C_ξ)]` from the expectation values of
/// the surviving displacements. Rows follow `ξ`, columns `τ`, both in
/// partition order.
pub fn coarse_wigner(
    space: &PhaseSpace,
    state: &QuantumState,
    partition: &CosetPartition,
) -> Result<WignerTable> {
    let field = space.field();
    partition.check_field(field)?;
    let n = space.dim();
    let grid = expectation_grid(space, state)?;
    let perp = perp_indices(space, partition);
    let reps = partition.representatives();
    let size = partition.initial_coset().len() as f64;
    let norm = size * size / (n * n) as f64;
    let values = reps
        .iter()
        .map(|&x| {
            reps.iter()
                .map(|&t| {
                    let mut acc = 0.0;
                    for &bi in &perp {
                        let b2 = space.element_at(bi);
                        let sb = field.trace(field.mul(x, b2));
                        for &ai in &perp {
                            let a2 = space.element_at(ai);
                            let s = sb ^ field.trace(field.mul(t, a2));
                            let e = grid[bi * n + ai];
                            acc += if s == 0 { e } else { -e };
                        }
                    }
                    acc * norm
                })
                .collect()
        })
        .collect();
    Ok(WignerTable {
        dim: n,
        coarse: true,
        labels: coarse_labels(space, partition),
        values,
    })
}

/// Sums a fine table over coset rectangles.
pub fn block_sum(
    space: &PhaseSpace,
    fine: &WignerTable,
    partition: &CosetPartition,
) -> Result<WignerTable> {
    fine.check_fine(space)?;
    partition.check_field(space.field())?;
    let cosets = partition.cosets();
    let values = cosets
        .iter()
        .map(|cx| {
            cosets
                .iter()
                .map(|ct| {
                    let mut acc = 0.0;
                    for &b in cx.elements() {
                        for &a in ct.elements() {
                            acc += fine.get(space.index_of(a), space.index_of(b));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Ok(WignerTable {
        dim: fine.dim,
        coarse: true,
        labels: coarse_labels(space, partition),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn space(n: u32) -> PhaseSpace {
        PhaseSpace::new(Field::canonical(n).unwrap())
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_density(dim: usize, rng: &mut ChaCha8Rng) -> QuantumState {
        let a = DMatrix::from_fn(dim, dim, |_, _| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let m = &a * a.adjoint();
        let t = m.trace();
        QuantumState::from_density(m / t).unwrap()
    }

    fn partitions(s: &PhaseSpace) -> Vec<CosetPartition> {
        let f = s.field();
        let n = f.degree();
        let mut out = vec![];
        for m in (1..n).filter(|m| n.is_multiple_of(*m)) {
            if n == 2 * m {
                out.push(CosetPartition::subfield(f, m).unwrap());
            }
            let mut rb = vec![FieldElement::ONE];
            rb.extend((1..n / m).map(|k| f.primitive_power(k as i64)));
            out.push(CosetPartition::general(f, m, &rb).unwrap());
        }
        out
    }

    #[test]
    fn state_validation() {
        let v = DVector::from_vec(vec![c(0.9f64.sqrt(), 0.0), c(0.0, 0.0)]);
        let err = QuantumState::from_vector(v).unwrap_err();
        assert!(err.to_string().contains("state not normalized"));
        let err = QuantumState::from_vector(DVector::zeros(3)).unwrap_err();
        assert!(err.to_string().contains("dimension must be 2^N"));
        let m =
            DMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(0.1, 0.0), c(0.0, 0.0), c(0.5, 0.0)]);
        assert!(QuantumState::from_density(m).is_err());
        let m =
            DMatrix::from_row_slice(2, 2, &[c(1.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0)]);
        assert!(matches!(
            QuantumState::from_density(m),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn kernel_properties_exhaustive() {
        for n in 1..=2 {
            let s = space(n);
            let f = s.field().clone();
            let mut total = DenseOperator::zeros(s.dim());
            for a in f.elements() {
                for b in f.elements() {
                    let k = kernel_dense(&s, a, b).unwrap();
                    assert!(k.is_hermitian(1e-12));
                    assert!((k.trace() - c(1.0, 0.0)).norm() < 1e-12);
                    for g in f.elements() {
                        for d in f.elements() {
                            let dd = s.displacement_dense(&s.displacement(g, d)).unwrap();
                            let moved = k.conjugate_by(&dd);
                            let want = kernel_dense(&s, a + d, b + g).unwrap();
                            assert!(moved.approx_eq(&want, 1e-12));
                        }
                    }
                    total = &total + &k;
                }
            }
            let want = DenseOperator::identity(s.dim()).scale(c(s.dim() as f64, 0.0));
            assert!(total.approx_eq(&want, 1e-12));
        }
    }

    #[test]
    fn fast_table_matches_dense_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=3 {
            let s = space(n);
            for _ in 0..3 {
                let st = random_density(s.dim(), &mut rng);
                let fast = wigner_of_state(&s, &st).unwrap();
                let slow = wigner_dense(&s, &st).unwrap();
                assert!(fast.max_abs_diff(&slow) < 1e-12);
                assert!((fast.total() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3 {
            let s = space(n);
            for _ in 0..5 {
                let st = random_density(s.dim(), &mut rng);
                let back = reconstruct_state(&s, &wigner_of_state(&s, &st).unwrap()).unwrap();
                let err = (back.density() - st.density()).norm();
                assert!(err < 1e-10, "{err}");
            }
            for k in 0..s.dim() {
                let st = QuantumState::basis_state(s.dim(), k).unwrap();
                let back = reconstruct_state(&s, &wigner_of_state(&s, &st).unwrap()).unwrap();
                assert!((back.density() - st.density()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn maximally_mixed_is_uniform() {
        let s = space(3);
        let st = QuantumState::maximally_mixed(8).unwrap();
        let w = wigner_of_state(&s, &st).unwrap();
        assert!(w
            .values
            .iter()
            .flatten()
            .all(|&x| (x - 1.0 / 64.0).abs() < 1e-15));
        let back = reconstruct_state(&s, &w).unwrap();
        assert!((back.density() - st.density()).norm() < 1e-12);
    }

    #[test]
    fn basis_state_columns() {
        let s = space(3);
        let st = QuantumState::basis_state(8, 5).unwrap();
        let w = wigner_of_state(&s, &st).unwrap();
        for a in 0..8 {
            let col: f64 = (0..8).map(|b| w.get(a, b)).sum();
            assert!((col - if a == 5 { 1.0 } else { 0.0 }).abs() < 1e-12);
        }
    }

    #[test]
    fn line_sums_are_projector_probabilities() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=3 {
            let s = space(n);
            let st = random_density(s.dim(), &mut rng);
            let w = wigner_of_state(&s, &st).unwrap();
            for slope in s.slopes() {
                for g in s.field().elements() {
                    let line = LineId::new(slope, g);
                    let sum = w.sum_over(&s, &s.line_points(line));
                    let p = s.line_projector(marginal_line(&s, line)).unwrap();
                    assert!((sum - st.expectation(&p).re).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn coarse_kernel_is_block_of_kernels() {
        for n in [2, 4] {
            let s = space(n);
            for p in partitions(&s) {
                let size = p.initial_coset().len() as f64;
                let mut total = DenseOperator::zeros(s.dim());
                for tau in 0..p.cosets().len() {
                    for xi in 0..p.cosets().len() {
                        let k = coarse_kernel(&s, &p, tau, xi).unwrap();
                        assert!(k.is_hermitian(1e-12));
                        assert!((k.trace().re - size * size).abs() < 1e-10);
                        if n == 2 {
                            let mut direct = DenseOperator::zeros(s.dim());
                            for &a in p.cosets()[tau].elements() {
                                for &b in p.cosets()[xi].elements() {
                                    direct = &direct + &kernel_dense(&s, a, b).unwrap();
                                }
                            }
                            assert!(k.approx_eq(&direct, 1e-12));
                        }
                        total = &total + &k;
                    }
                }
                let want = DenseOperator::identity(s.dim()).scale(c(s.dim() as f64, 0.0));
                assert!(total.approx_eq(&want, 1e-10));
            }
        }
    }

    #[test]
    fn coarse_table_is_block_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [2, 4] {
            let s = space(n);
            for p in partitions(&s) {
                let st = random_density(s.dim(), &mut rng);
                let fine = wigner_of_state(&s, &st).unwrap();
                let coarse = coarse_wigner(&s, &st, &p).unwrap();
                let blocks = block_sum(&s, &fine, &p).unwrap();
                assert!(coarse.max_abs_diff(&blocks) < 1e-12);
                assert!((coarse.total() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mixed_state_coarse_table_is_uniform() {
        let s = space(4);
        let p = CosetPartition::subfield(s.field(), 2).unwrap();
        let st = QuantumState::maximally_mixed(16).unwrap();
        let w = coarse_wigner(&s, &st, &p).unwrap();
        assert_eq!(w.side(), 4);
        assert!(w
            .values
            .iter()
            .flatten()
            .all(|&x| (x - 1.0 / 16.0).abs() < 1e-14));
    }

    #[test]
    fn wrong_shape_is_rejected() {
        let s = space(2);
        let t = WignerTable {
            dim: 4,
            coarse: false,
            labels: vec![],
            values: vec![vec![0.0; 4]; 3],
        };
        assert!(matches!(
            reconstruct_state(&s, &t),
            Err(Error::TableShape(_))
        ));
    }
}
