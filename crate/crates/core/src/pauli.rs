//! Pauli strings, displacement operators `D(α,β) = Φ(α,β) Z_α X_β`, and
//! CNOT conjugation.
//!
//! The symbolic form of a displacement comes from expanding `α` and `β` in a
//! self-dual basis: qubit `i` carries `σ_z^{a_i} σ_x^{b_i}` with
//! `a_i = tr(α θ_i)` and `b_i = tr(β θ_i)`. The dense form is built straight
//! from the field definitions `Z_α|ν⟩ = χ(αν)|ν⟩` and `X_β|ν⟩ = |ν+β⟩`, so
//! the two routes can be checked against each other.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::dense::{check_cap, DenseOperator, MAX_DENSE_QUBITS};
use crate::error::{Error, Result};
use crate::field::{Basis, BasisKind, Field, FieldElement};
use crate::phase_space::PhaseSpace;

/// A power of `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub const fn from_exponent(k: u8) -> Phase {
        Phase(k & 3)
    }

    /// The `k` in `i^k`.
    pub const fn exponent(self) -> u8 {
        self.0
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) & 3)
    }

    pub fn is_real(self) -> bool {
        self.0 & 1 == 0
    }
}

impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) & 3)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    /// Letter for `σ_z^z σ_x^x`, ignoring the `i` that `ZX = iY` introduces.
    pub fn from_zx(z: bool, x: bool) -> Letter {
        match (z, x) {
            (false, false) => Letter::I,
            (true, false) => Letter::Z,
            (false, true) => Letter::X,
            (true, true) => Letter::Y,
        }
    }

    pub fn has_x(self) -> bool {
        matches!(self, Letter::X | Letter::Y)
    }

    pub fn has_z(self) -> bool {
        matches!(self, Letter::Z | Letter::Y)
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    /// `self · rhs = i^k · letter`.
    pub fn product(self, rhs: Letter) -> (Phase, Letter) {
        use Letter::*;
        match (self, rhs) {
            (I, p) | (p, I) => (Phase::ONE, p),
            (X, X) | (Y, Y) | (Z, Z) => (Phase::ONE, I),
            (X, Y) => (Phase::I, Z),
            (Y, Z) => (Phase::I, X),
            (Z, X) => (Phase::I, Y),
            (Y, X) => (Phase::MINUS_I, Z),
            (Z, Y) => (Phase::MINUS_I, X),
            (X, Z) => (Phase::MINUS_I, Y),
        }
    }

    fn matrix(self) -> DMatrix<Complex64> {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let z = c(0.0, 0.0);
        match self {
            Letter::I => DMatrix::identity(2, 2),
            Letter::X => DMatrix::from_row_slice(2, 2, &[z, c(1.0, 0.0), c(1.0, 0.0), z]),
            Letter::Y => DMatrix::from_row_slice(2, 2, &[z, c(0.0, -1.0), c(0.0, 1.0), z]),
            Letter::Z => DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), z, z, c(-1.0, 0.0)]),
        }
    }
}

/// An `N`-qubit Pauli operator `i^k · P_1 ⊗ … ⊗ P_N`.
///
/// Text form: an optional phase prefix (`-`, `i`, `-i`) followed by one
/// letter per qubit, qubit 1 first, e.g. `XII` or `-iZX`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    letters: Vec<Letter>,
    phase: Phase,
}

impl PauliString {
    pub fn new(letters: Vec<Letter>, phase: Phase) -> Self {
        PauliString { letters, phase }
    }

    pub fn identity(num_qubits: usize) -> Self {
        PauliString::new(vec![Letter::I; num_qubits], Phase::ONE)
    }

    pub fn num_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        self.letters[qubit]
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    /// Same letters with phase `+1`.
    pub fn unsigned(&self) -> Self {
        self.clone().with_phase(Phase::ONE)
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&l| l == Letter::I)
    }

    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&l| l != Letter::I).count()
    }

    /// Letters only, without the phase prefix.
    pub fn letters_string(&self) -> String {
        self.letters.iter().map(|l| l.as_char()).collect()
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        self.letters
            .iter()
            .zip(&other.letters)
            .filter(|(&a, &b)| a != Letter::I && b != Letter::I && a != b)
            .count()
            % 2
            == 0
    }

    /// Operator product `self · rhs` with exact phase.
    pub fn try_mul(&self, rhs: &PauliString) -> Result<PauliString> {
        if self.num_qubits() != rhs.num_qubits() {
            return Err(Error::QubitCountMismatch {
                left: self.num_qubits(),
                right: rhs.num_qubits(),
            });
        }
        let mut phase = self.phase * rhs.phase;
        let letters = self
            .letters
            .iter()
            .zip(&rhs.letters)
            .map(|(&a, &b)| {
                let (p, l) = a.product(b);
                phase = phase * p;
                l
            })
            .collect();
        Ok(PauliString { letters, phase })
    }

    /// Kronecker product of the single-qubit matrices, times the phase.
    pub fn to_dense(&self) -> DenseOperator {
        let m = self
            .letters
            .iter()
            .fold(DMatrix::identity(1, 1), |acc: DMatrix<Complex64>, l| {
                acc.kronecker(&l.matrix())
            });
        DenseOperator::wrap(m * self.phase.to_complex())
    }

    /// Parses a comma- or whitespace-separated list.
    pub fn parse_list(text: &str) -> Result<Vec<PauliString>> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.phase.0 {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        })?;
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (phase, rest) = if let Some(r) = s.strip_prefix("-i") {
            (Phase::MINUS_I, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (Phase::MINUS_ONE, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (Phase::I, r)
        } else {
            (Phase::ONE, s)
        };
        let letters = rest
            .chars()
            .map(|c| match c {
                'I' | '𝟙' => Ok(Letter::I),
                'X' => Ok(Letter::X),
                'Y' => Ok(Letter::Y),
                'Z' => Ok(Letter::Z),
                _ => Err(Error::PauliParse(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(Error::PauliParse(s.to_string()));
        }
        Ok(PauliString { letters, phase })
    }
}

/// `f(x) = Σ_{0≤j<i≤N-1} x^{2^i + 2^j}`, the second elementary symmetric
/// function of the Frobenius conjugates of `x`. It is Frobenius-invariant
/// and therefore lies in GF(2).
pub fn conjugate_pair_sum(field: &Field, x: FieldElement) -> FieldElement {
    let mut prefix = FieldElement::ZERO;
    let mut total = FieldElement::ZERO;
    let mut conj = x;
    for _ in 0..field.degree() {
        total += field.mul(conj, prefix);
        prefix += conj;
        conj = field.square(conj);
    }
    total
}

/// `Φ(α,β) = i^{tr(αβ)} (-1)^{f(αβ)}`.
///
/// # Panics
/// If `f(αβ)` is not `0` or `1`, which would mean the field tables are
/// corrupt.
pub fn phase_phi(field: &Field, alpha: FieldElement, beta: FieldElement) -> Phase {
    let x = field.mul(alpha, beta);
    let f = conjugate_pair_sum(field, x);
    assert!(
        f.bits() <= 1,
        "internal consistency failure: f({}) = {:#b} is not in GF(2)",
        field.label(x),
        f.bits()
    );
    Phase::from_exponent(field.trace(x) + 2 * f.bits() as u8)
}

/// A phase-space point `(α, β)` together with its Hermitizing phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DisplacementLabel {
    pub alpha: FieldElement,
    pub beta: FieldElement,
    phase: Phase,
}

impl DisplacementLabel {
    pub fn new(field: &Field, alpha: FieldElement, beta: FieldElement) -> Self {
        DisplacementLabel {
            alpha,
            beta,
            phase: phase_phi(field, alpha, beta),
        }
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }
}

/// Symbolic form of `D(α,β)` in the given self-dual basis.
pub fn displacement_string(
    field: &Field,
    label: &DisplacementLabel,
    basis: &Basis,
) -> Result<PauliString> {
    if basis.kind() != BasisKind::SelfDual || !basis.is_self_dual(field) {
        return Err(Error::RequiresSelfDual);
    }
    let a = basis.expand(field, label.alpha);
    let b = basis.expand(field, label.beta);
    let mut phase = label.phase;
    let letters = a
        .iter()
        .zip(&b)
        .map(|(&ai, &bi)| {
            if ai == 1 && bi == 1 {
                // σ_z σ_x = iY
                phase = phase * Phase::I;
            }
            Letter::from_zx(ai == 1, bi == 1)
        })
        .collect();
    Ok(PauliString::new(letters, phase))
}

/// A CNOT gate on zero-based qubit indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cnot {
    pub control: usize,
    pub target: usize,
}

impl Cnot {
    pub fn new(control: usize, target: usize) -> Self {
        Cnot { control, target }
    }

    fn check(&self, qubits: usize) -> Result<()> {
        for index in [self.control, self.target] {
            if index >= qubits {
                return Err(Error::QubitOutOfRange { index, qubits });
            }
        }
        if self.control == self.target {
            return Err(Error::CnotSameQubit(self.control));
        }
        Ok(())
    }

    /// `U p U†` for this gate.
    pub fn conjugate(&self, p: &PauliString) -> Result<PauliString> {
        let n = p.num_qubits();
        self.check(n)?;
        let (c, t) = (self.control, self.target);
        let single = |q: usize, l: Letter| {
            let mut s = PauliString::identity(n);
            s.letters[q] = l;
            s
        };
        // Images of the control and target letters.
        let control_image = {
            let mut s = single(c, p.letters[c]);
            if p.letters[c].has_x() {
                s.letters[t] = Letter::X;
            }
            s
        };
        let target_image = {
            let mut s = single(t, p.letters[t]);
            if p.letters[t].has_z() {
                s.letters[c] = Letter::Z;
            }
            s
        };
        let mut rest = p.clone();
        rest.letters[c] = Letter::I;
        rest.letters[t] = Letter::I;
        control_image.try_mul(&target_image)?.try_mul(&rest)
    }

    /// Dense unitary on `num_qubits` qubits.
    pub fn to_dense(&self, num_qubits: usize) -> Result<DenseOperator> {
        self.check(num_qubits)?;
        check_cap(num_qubits as u32, MAX_DENSE_QUBITS)?;
        let dim = 1usize << num_qubits;
        let cbit = 1 << (num_qubits - 1 - self.control);
        let tbit = 1 << (num_qubits - 1 - self.target);
        let mut m = DMatrix::zeros(dim, dim);
        for k in 0..dim {
            let out = if k & cbit != 0 { k ^ tbit } else { k };
            m[(out, k)] = Complex64::new(1.0, 0.0);
        }
        Ok(DenseOperator::wrap(m))
    }
}

/// Applies `gates` in order, each as a conjugation.
pub fn cnot_conjugate(p: &PauliString, gates: &[Cnot]) -> Result<PauliString> {
    gates.iter().try_fold(p.clone(), |acc, g| g.conjugate(&acc))
}

impl PhaseSpace {
    pub fn displacement(&self, alpha: FieldElement, beta: FieldElement) -> DisplacementLabel {
        DisplacementLabel::new(self.field(), alpha, beta)
    }

    pub fn displacement_string(&self, label: &DisplacementLabel) -> PauliString {
        displacement_string(self.field(), label, self.basis())
            .expect("phase space basis is self-dual")
    }

    /// `Z_α = Σ_ν χ(αν) |ν⟩⟨ν|`.
    pub fn z_dense(&self, alpha: FieldElement) -> Result<DenseOperator> {
        self.displacement_matrix(alpha, FieldElement::ZERO, Phase::ONE)
    }

    /// `X_β = Σ_ν |ν+β⟩⟨ν|`.
    pub fn x_dense(&self, beta: FieldElement) -> Result<DenseOperator> {
        self.displacement_matrix(FieldElement::ZERO, beta, Phase::ONE)
    }

    /// `Φ(α,β) Z_α X_β` from the field definitions.
    pub fn displacement_dense(&self, label: &DisplacementLabel) -> Result<DenseOperator> {
        self.displacement_matrix(label.alpha, label.beta, label.phase)
    }

    fn displacement_matrix(
        &self,
        alpha: FieldElement,
        beta: FieldElement,
        phase: Phase,
    ) -> Result<DenseOperator> {
        check_cap(self.num_qubits(), MAX_DENSE_QUBITS)?;
        let dim = self.dim();
        let mut m = DMatrix::zeros(dim, dim);
        self.accumulate_displacement(&mut m, alpha, beta, phase.to_complex());
        Ok(DenseOperator::wrap(m))
    }

    /// `m += coeff · Z_α X_β`, touching only the `2^N` nonzero entries.
    pub(crate) fn accumulate_displacement(
        &self,
        m: &mut DMatrix<Complex64>,
        alpha: FieldElement,
        beta: FieldElement,
        coeff: Complex64,
    ) {
        let field = self.field();
        for nu in field.elements() {
            let shifted = nu + beta;
            let chi = field.character(field.mul(alpha, shifted)) as f64;
            m[(self.index_of(shifted), self.index_of(nu))] += coeff * chi;
        }
    }

    /// `F = 2^{-N/2} Σ χ(νν') |ν⟩⟨ν'|`.
    pub fn fourier_dense(&self) -> Result<DenseOperator> {
        check_cap(self.num_qubits(), MAX_DENSE_QUBITS)?;
        let dim = self.dim();
        let field = self.field();
        let norm = (dim as f64).sqrt().recip();
        let mut m = DMatrix::zeros(dim, dim);
        for nu in field.elements() {
            for nu2 in field.elements() {
                let chi = field.character(field.mul(nu, nu2)) as f64;
                m[(self.index_of(nu), self.index_of(nu2))] = Complex64::new(chi * norm, 0.0);
            }
        }
        Ok(DenseOperator::wrap(m))
    }
}
