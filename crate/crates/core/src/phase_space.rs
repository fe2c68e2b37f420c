//! The `2^N × 2^N` grid: rays, lines, their rank-one projectors and the
//! mutually unbiased bases they define.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::dense::{check_cap, DenseOperator, MAX_DENSE_QUBITS, MAX_KERNEL_QUBITS};
use crate::error::{Error, Result};
use crate::field::{Basis, BasisKind, Field, FieldElement};
use crate::pauli::{DisplacementLabel, PauliString};

/// Slope of a line: `β = λα + γ` for finite `λ`, `α = γ` for the vertical
/// direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(FieldElement),
    Infinite,
}

impl Slope {
    pub fn label(&self, field: &Field) -> String {
        match self {
            Slope::Finite(l) => field.label(*l).to_string(),
            Slope::Infinite => "inf".to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LineId {
    pub slope: Slope,
    pub intercept: FieldElement,
}

impl LineId {
    pub fn new(slope: Slope, intercept: FieldElement) -> Self {
        LineId { slope, intercept }
    }

    pub fn ray(slope: Slope) -> Self {
        LineId::new(slope, FieldElement::ZERO)
    }
}

/// A field together with the self-dual basis that ties field labels to
/// qubits.
///
/// Element `ν` is identified with the computational basis state whose bits
/// are `tr(ν θ_1), …, tr(ν θ_N)`, qubit 1 most significant.
#[derive(Clone, Debug)]
pub struct PhaseSpace {
    field: Field,
    basis: Basis,
    index_of: Vec<u32>,
    element_at: Vec<FieldElement>,
}

impl PhaseSpace {
    /// Uses the canonical self-dual basis of `field`.
    pub fn new(field: Field) -> Self {
        let basis = Basis::self_dual(&field);
        PhaseSpace::with_basis(field, basis).expect("canonical basis is self-dual")
    }

    pub fn with_basis(field: Field, basis: Basis) -> Result<Self> {
        if basis.kind() != BasisKind::SelfDual || !basis.is_self_dual(&field) {
            return Err(Error::RequiresSelfDual);
        }
        let n = field.degree();
        let mut index_of = vec![0u32; field.size()];
        let mut element_at = vec![FieldElement::ZERO; field.size()];
        for e in field.elements() {
            let idx = basis
                .expand(&field, e)
                .iter()
                .enumerate()
                .fold(0u32, |acc, (i, &bit)| {
                    acc | (bit as u32) << (n - 1 - i as u32)
                });
            index_of[e.bits() as usize] = idx;
            element_at[idx as usize] = e;
        }
        Ok(PhaseSpace {
            field,
            basis,
            index_of,
            element_at,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn num_qubits(&self) -> u32 {
        self.field.degree()
    }

    pub fn dim(&self) -> usize {
        self.field.size()
    }

    /// Computational-basis index of `|ν⟩`.
    pub fn index_of(&self, nu: FieldElement) -> usize {
        self.index_of[nu.bits() as usize] as usize
    }

    pub fn element_at(&self, index: usize) -> FieldElement {
        self.element_at[index]
    }

    /// Bitstring of the computational basis state for `ν`, qubit 1 first.
    pub fn ket_label(&self, nu: FieldElement) -> String {
        format!(
            "{:0width$b}",
            self.index_of(nu),
            width = self.num_qubits() as usize
        )
    }

    /// Finite slopes in power order followed by the vertical slope.
    pub fn slopes(&self) -> Vec<Slope> {
        self.field
            .power_order()
            .into_iter()
            .map(Slope::Finite)
            .chain([Slope::Infinite])
            .collect()
    }

    pub fn ray_points(&self, slope: Slope) -> Vec<(FieldElement, FieldElement)> {
        self.line_points(LineId::ray(slope))
    }

    /// Points of `β = λα + γ`, or of `α = γ` for the vertical slope.
    pub fn line_points(&self, line: LineId) -> Vec<(FieldElement, FieldElement)> {
        let gamma = line.intercept;
        self.field
            .power_order()
            .into_iter()
            .map(|t| match line.slope {
                Slope::Finite(l) => (t, self.field.mul(l, t) + gamma),
                Slope::Infinite => (gamma, t),
            })
            .collect()
    }

    /// Displacement labels on a ray, identity excluded, in power order.
    pub fn ray_labels(&self, slope: Slope) -> Vec<DisplacementLabel> {
        self.ray_points(slope)
            .into_iter()
            .filter(|&(a, b)| !(a.is_zero() && b.is_zero()))
            .map(|(a, b)| self.displacement(a, b))
            .collect()
    }

    /// Rank-one projector of a line:
    /// `2^{-N} Σ_α χ(γα) D(α, λα)`, or `2^{-N} Σ_β χ(γβ) D(0, β)` when
    /// vertical.
    pub fn line_projector(&self, line: LineId) -> Result<DenseOperator> {
        check_cap(self.num_qubits(), MAX_DENSE_QUBITS)?;
        let f = &self.field;
        let norm = (self.dim() as f64).recip();
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for t in f.elements() {
            let label = match line.slope {
                Slope::Finite(l) => self.displacement(t, f.mul(l, t)),
                Slope::Infinite => self.displacement(FieldElement::ZERO, t),
            };
            let chi = f.character(f.mul(line.intercept, t)) as f64;
            let coeff = label.phase().to_complex() * (chi * norm);
            self.accumulate_displacement(&mut m, label.alpha, label.beta, coeff);
        }
        Ok(DenseOperator::wrap(m))
    }

    /// The same projector obtained by displacing the ray: conjugation by
    /// `D(0, γ)`, or by `D(γ, 0)` for the vertical slope.
    pub fn line_projector_by_conjugation(&self, line: LineId) -> Result<DenseOperator> {
        let ray = self.line_projector(LineId::ray(line.slope))?;
        let shift = match line.slope {
            Slope::Finite(_) => self.displacement(FieldElement::ZERO, line.intercept),
            Slope::Infinite => self.displacement(line.intercept, FieldElement::ZERO),
        };
        Ok(ray.conjugate_by(&self.displacement_dense(&shift)?))
    }

    /// The `(2^N - 1) × (2^N + 1)` table of ray operators.
    pub fn mub_table(&self) -> MubTable {
        let columns = self
            .slopes()
            .into_iter()
            .map(|slope| {
                let labels = self.ray_labels(slope);
                let operators = labels.iter().map(|l| self.displacement_string(l)).collect();
                MubColumn {
                    slope,
                    labels,
                    operators,
                }
            })
            .collect();
        MubTable { columns }
    }

    /// Common eigenbasis of the operators on a ray.
    ///
    /// Vector `k` is the state of the line with intercept `γ = element_at(k)`;
    /// its eigenvalue on `D(θ_i, λθ_i)` is `(-1)^{tr(γθ_i)}`, so the ordering
    /// is the binary eigenvalue pattern over the generators. Each vector's
    /// first nonzero amplitude is real and positive.
    pub fn eigensystem(&self, slope: Slope) -> Result<EigenSystem> {
        check_cap(self.num_qubits(), MAX_KERNEL_QUBITS)?;
        let f = &self.field;
        let generators: Vec<DisplacementLabel> = self
            .basis
            .elements()
            .iter()
            .map(|&t| match slope {
                Slope::Finite(l) => self.displacement(t, f.mul(l, t)),
                Slope::Infinite => self.displacement(FieldElement::ZERO, t),
            })
            .collect();
        let gen_ops = generators
            .iter()
            .map(|g| self.displacement_dense(g))
            .collect::<Result<Vec<_>>>()?;

        let mut vectors = Vec::with_capacity(self.dim());
        let mut signs = Vec::with_capacity(self.dim());
        for k in 0..self.dim() {
            let p = self.line_projector(LineId::new(slope, self.element_at(k)))?;
            let v = leading_column(&p);
            let s = gen_ops
                .iter()
                .map(|g| {
                    let gv = g.matrix() * &v;
                    if (gv - &v).norm() < 1e-9 {
                        1
                    } else {
                        -1
                    }
                })
                .collect();
            vectors.push(v);
            signs.push(s);
        }
        Ok(EigenSystem {
            slope,
            generators,
            vectors,
            signs,
        })
    }
}

/// Normalized dominant column of a rank-one projector, phase-fixed.
fn leading_column(p: &DenseOperator) -> DVector<Complex64> {
    let m = p.matrix();
    let (best, _) = (0..m.ncols())
        .map(|j| (j, m.column(j).norm()))
        .fold(
            (0, -1.0),
            |acc, x| if x.1 > acc.1 + 1e-12 { x } else { acc },
        );
    let mut v: DVector<Complex64> = m.column(best).into_owned();
    let norm = v.norm();
    v /= Complex64::new(norm, 0.0);
    if let Some(first) = v.iter().find(|z| z.norm() > 1e-9).copied() {
        let ph = first.conj() / first.norm();
        v *= ph;
    }
    v
}

#[derive(Clone, Debug)]
pub struct MubColumn {
    pub slope: Slope,
    pub labels: Vec<DisplacementLabel>,
    pub operators: Vec<PauliString>,
}

#[derive(Clone, Debug)]
pub struct MubTable {
    pub columns: Vec<MubColumn>,
}

impl MubTable {
    pub fn num_rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.operators.len())
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// Fixed-width text table: one header row of slopes, then one row per
    /// operator index.
    pub fn render_text(&self, field: &Field) -> String {
        let cells: Vec<Vec<String>> = self
            .columns
            .iter()
            .map(|c| {
                std::iter::once(c.slope.label(field))
                    .chain(c.operators.iter().map(|p| p.to_string()))
                    .collect()
            })
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in 0..=self.num_rows() {
            let line: Vec<String> = cells
                .iter()
                .map(|col| format!("{:>width$}", col[row]))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Simultaneous eigenvectors of a ray's displacement operators.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub slope: Slope,
    /// `D(θ_i, λθ_i)` (or `D(0, θ_i)`) for the self-dual basis elements.
    pub generators: Vec<DisplacementLabel>,
    pub vectors: Vec<DVector<Complex64>>,
    /// `signs[k][i]`: eigenvalue of generator `i` on vector `k`.
    pub signs: Vec<Vec<i8>>,
}
