//! Thick lines and the displacement operators that survive coarse graining.
//!
//! Summing the thin-line projectors of slope `λ` over the intercepts in a
//! coset `C_τ = t + C_0` gives
//!
//! ```text
//! 2^{-N} Σ_α χ(tα) [Σ_{γ∈C_0} χ(γα)] D(α, λα)
//! ```
//!
//! Because `C_0` is an additive subgroup the bracket is either `|C_0|` or
//! `0`, so only the operators with `α ∈ C_0^⊥` remain. Those are the
//! measurements that determine the coarse lines. The vertical direction uses
//! `D(0, β)` and `χ(γβ)` in the same way.

use nalgebra::DMatrix;

use crate::dense::{check_cap, DenseOperator, MAX_DENSE_QUBITS};
use crate::error::{Error, Result};
use crate::field::{CosetPartition, Field, FieldElement};
use crate::pauli::{cnot_conjugate, Cnot, DisplacementLabel, PauliString};
use crate::phase_space::{LineId, PhaseSpace, Slope};

/// A thick line: slope `λ` in the embedded subfield (or vertical) and a
/// whole coset as intercept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoarseLine {
    pub slope: Slope,
    /// Index into [`CosetPartition::cosets`].
    pub coset: usize,
}

impl CoarseLine {
    pub fn new(slope: Slope, coset: usize) -> Self {
        CoarseLine { slope, coset }
    }
}

/// `Σ_{γ∈C_0} χ(γα)`, summed term by term.
pub fn bracket_sum(field: &Field, partition: &CosetPartition, alpha: FieldElement) -> i64 {
    partition
        .initial_coset()
        .elements()
        .iter()
        .map(|&g| field.character(field.mul(g, alpha)) as i64)
        .sum()
}

fn check_slope(field: &Field, partition: &CosetPartition, slope: Slope) -> Result<()> {
    match slope {
        Slope::Finite(l) if !partition.in_subfield(l) => Err(Error::SlopeNotInSubfield {
            slope: field.label(l).to_string(),
            m: partition.m(),
        }),
        _ => Ok(()),
    }
}

impl PhaseSpace {
    /// Coarse slopes: the embedded GF(2^m) in power order, then vertical.
    pub fn coarse_slopes(&self, partition: &CosetPartition) -> Vec<Slope> {
        partition
            .subfield_elements()
            .iter()
            .map(|&l| Slope::Finite(l))
            .chain([Slope::Infinite])
            .collect()
    }

    fn ray_label(&self, slope: Slope, t: FieldElement) -> DisplacementLabel {
        match slope {
            Slope::Finite(l) => self.displacement(t, self.field().mul(l, t)),
            Slope::Infinite => self.displacement(FieldElement::ZERO, t),
        }
    }

    /// Non-identity displacement labels of the ray whose bracket sum is
    /// nonzero, in power order of `α` (or `β` for the vertical ray).
    ///
    /// # Panics
    /// If a bracket sum is neither `0` nor `|C_0|`.
    pub fn survivors(
        &self,
        partition: &CosetPartition,
        slope: Slope,
    ) -> Result<Vec<DisplacementLabel>> {
        let field = self.field();
        partition.check_field(field)?;
        check_slope(field, partition, slope)?;
        let size = partition.initial_coset().len() as i64;
        let mut out = Vec::new();
        for t in field.power_order() {
            let bracket = bracket_sum(field, partition, t);
            assert!(
                bracket == 0 || bracket == size,
                "bracket sum {bracket} is neither 0 nor {size}"
            );
            if bracket != 0 && !t.is_zero() {
                out.push(self.ray_label(slope, t));
            }
        }
        Ok(out)
    }

    /// Thick-line projector from the survivor sum.
    pub fn coarse_line_projector(
        &self,
        line: CoarseLine,
        partition: &CosetPartition,
    ) -> Result<DenseOperator> {
        let field = self.field();
        partition.check_field(field)?;
        check_slope(field, partition, line.slope)?;
        check_cap(self.num_qubits(), MAX_DENSE_QUBITS)?;
        let shift = partition.coset(line.coset)?.representative();
        let norm = (self.dim() as f64).recip();
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for t in field.elements() {
            let bracket = bracket_sum(field, partition, t);
            if bracket == 0 {
                continue;
            }
            let label = self.ray_label(line.slope, t);
            let chi = field.character(field.mul(shift, t)) as f64;
            let coeff = label.phase().to_complex() * (chi * bracket as f64 * norm);
            self.accumulate_displacement(&mut m, label.alpha, label.beta, coeff);
        }
        Ok(DenseOperator::wrap(m))
    }

    /// Thick-line projector as the sum of thin-line projectors over the
    /// intercept coset.
    pub fn coarse_line_projector_from_thin_lines(
        &self,
        line: CoarseLine,
        partition: &CosetPartition,
    ) -> Result<DenseOperator> {
        let field = self.field();
        partition.check_field(field)?;
        check_slope(field, partition, line.slope)?;
        let coset = partition.coset(line.coset)?;
        let mut acc = DenseOperator::zeros(self.dim());
        for &g in coset.elements() {
            acc = &acc + &self.line_projector(LineId::new(line.slope, g))?;
        }
        Ok(acc)
    }

    /// Survivors for every coarse slope.
    pub fn survivor_table(&self, partition: &CosetPartition) -> Result<SurvivorTable> {
        let rows = self
            .coarse_slopes(partition)
            .into_iter()
            .map(|slope| {
                let labels = self.survivors(partition, slope)?;
                let operators = labels.iter().map(|l| self.displacement_string(l)).collect();
                Ok(SurvivorRow {
                    slope,
                    labels,
                    operators,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SurvivorTable {
            partition: partition.clone(),
            rows,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SurvivorRow {
    pub slope: Slope,
    pub labels: Vec<DisplacementLabel>,
    pub operators: Vec<PauliString>,
}

impl SurvivorRow {
    pub fn is_vertical(&self) -> bool {
        self.slope == Slope::Infinite
    }
}

/// Surviving measurements for each coarse slope of a partition.
#[derive(Clone, Debug)]
pub struct SurvivorTable {
    pub partition: CosetPartition,
    pub rows: Vec<SurvivorRow>,
}

impl SurvivorTable {
    /// All survivor strings, row by row.
    pub fn operators(&self) -> impl Iterator<Item = &PauliString> {
        self.rows.iter().flat_map(|r| r.operators.iter())
    }

    /// Applies a CNOT sequence to every operator. Labels are kept; the
    /// strings no longer equal their displacement operators afterwards.
    pub fn conjugated(&self, gates: &[Cnot]) -> Result<SurvivorTable> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                Ok(SurvivorRow {
                    slope: r.slope,
                    labels: r.labels.clone(),
                    operators: r
                        .operators
                        .iter()
                        .map(|p| cnot_conjugate(p, gates))
                        .collect::<Result<_>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SurvivorTable {
            partition: self.partition.clone(),
            rows,
        })
    }

    /// One row per slope: `<slope>: <op> <op> …`. The vertical row is
    /// marked `inf (vertical ray)`.
    pub fn render_text(&self, field: &Field) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let head = match row.slope {
                Slope::Infinite => "inf (vertical ray)".to_string(),
                s => s.label(field),
            };
            let ops: Vec<String> = row.operators.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("{head}: {}\n", ops.join(" ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn space(n: u32) -> PhaseSpace {
        PhaseSpace::new(Field::canonical(n).unwrap())
    }

    fn unsigned_set(ops: impl IntoIterator<Item = PauliString>) -> BTreeSet<String> {
        ops.into_iter().map(|p| p.unsigned().to_string()).collect()
    }

    fn set(v: &[&str]) -> BTreeSet<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn dimension_four_survivors() {
        let s = space(2);
        let f = s.field().clone();
        let general =
            CosetPartition::general(&f, 1, &[FieldElement::ONE, f.primitive_element()]).unwrap();
        let t = s.survivor_table(&general).unwrap();
        assert_eq!(
            unsigned_set(t.operators().cloned()),
            set(&["IX", "IZ", "IY"])
        );

        let sub = CosetPartition::subfield(&f, 1).unwrap();
        let t = s.survivor_table(&sub).unwrap();
        assert_eq!(
            unsigned_set(t.operators().cloned()),
            set(&["XX", "YY", "ZZ"])
        );
    }

    #[test]
    fn survivor_counts() {
        let s = space(4);
        let f = s.field().clone();
        let p = CosetPartition::subfield(&f, 2).unwrap();
        for slope in s.coarse_slopes(&p) {
            assert_eq!(s.survivors(&p, slope).unwrap().len(), 3);
        }
    }

    #[test]
    fn slope_outside_subfield_is_rejected() {
        let s = space(4);
        let f = s.field().clone();
        let p = CosetPartition::subfield(&f, 2).unwrap();
        let err = s
            .survivors(&p, Slope::Finite(f.primitive_element()))
            .unwrap_err();
        assert!(err.to_string().contains("slope not in subfield"));
        let line = CoarseLine::new(Slope::Finite(f.primitive_power(3)), 0);
        assert!(s.coarse_line_projector(line, &p).is_err());
    }

    #[test]
    fn partition_from_other_field_is_rejected() {
        let s = space(4);
        let other = Field::new(4, 0b11001).unwrap();
        let p = CosetPartition::subfield(&other, 2).unwrap();
        assert_eq!(
            s.survivors(&p, Slope::Infinite).unwrap_err(),
            Error::PartitionMismatch
        );
    }

    #[test]
    fn thick_line_routes_agree() {
        for (n, m) in [(2, 1), (4, 2), (4, 1)] {
            let s = space(n);
            let f = s.field().clone();
            let mut parts = vec![];
            if n == 2 * m {
                parts.push(CosetPartition::subfield(&f, m).unwrap());
            }
            let mut rb = vec![FieldElement::ONE];
            rb.extend((1..n / m).map(|k| f.primitive_power(k as i64)));
            parts.push(CosetPartition::general(&f, m, &rb).unwrap());
            for p in &parts {
                for slope in s.coarse_slopes(p) {
                    let mut total = DenseOperator::zeros(s.dim());
                    let projs: Vec<DenseOperator> = (0..p.cosets().len())
                        .map(|c| {
                            let line = CoarseLine::new(slope, c);
                            let a = s.coarse_line_projector(line, p).unwrap();
                            let b = s.coarse_line_projector_from_thin_lines(line, p).unwrap();
                            assert!(a.approx_eq(&b, 1e-12));
                            let rank = p.initial_coset().len() as f64;
                            assert!((a.trace().re - rank).abs() < 1e-12);
                            assert!((&a * &a).approx_eq(&a, 1e-12));
                            a
                        })
                        .collect();
                    for (i, a) in projs.iter().enumerate() {
                        total = &total + a;
                        for b in &projs[i + 1..] {
                            assert!((a * b).is_zero(1e-12));
                        }
                    }
                    assert!(total.approx_eq(&DenseOperator::identity(s.dim()), 1e-12));
                }
            }
        }
    }

    #[test]
    fn text_rendering() {
        let s = space(2);
        let f = s.field().clone();
        let p = CosetPartition::subfield(&f, 1).unwrap();
        let text = s.survivor_table(&p).unwrap().render_text(&f);
        assert_eq!(text.lines().count(), 3);
        assert!(text
            .lines()
            .last()
            .unwrap()
            .starts_with("inf (vertical ray): "));
    }

    fn pow(f: &Field, k: i64) -> FieldElement {
        f.primitive_power(k)
    }

    fn all_commute(ops: &[PauliString]) -> bool {
        ops.iter().all(|a| ops.iter().all(|b| a.commutes_with(b)))
    }

    #[test]
    fn dimension_eight_polynomial_basis() {
        let s = space(3);
        let f = s.field().clone();
        let p =
            CosetPartition::general(&f, 1, &[FieldElement::ONE, pow(&f, 1), pow(&f, 2)]).unwrap();
        let gates = [
            Cnot::new(0, 1),
            Cnot::new(0, 2),
            Cnot::new(1, 0),
            Cnot::new(2, 0),
        ];
        let t = s.survivor_table(&p).unwrap().conjugated(&gates).unwrap();
        assert_eq!(
            unsigned_set(t.operators().cloned()),
            set(&["XII", "YII", "ZII"])
        );
    }

    #[test]
    fn dimension_eight_alternate_basis() {
        let s = space(3);
        let f = s.field().clone();
        let p = CosetPartition::general(&f, 1, &[pow(&f, 1), pow(&f, 4), pow(&f, 5)]).unwrap();
        let t = s.survivor_table(&p).unwrap();
        let allowed = [FieldElement::ZERO, pow(&f, 4)];
        for row in &t.rows {
            for l in &row.labels {
                assert!(allowed.contains(&l.alpha) && allowed.contains(&l.beta));
            }
        }
        let ops: Vec<PauliString> = t.operators().cloned().collect();
        assert_eq!(ops.len(), 3);
        assert!(all_commute(&ops));
    }

    #[test]
    fn dimension_sixteen_subfield_cnots() {
        let s = space(4);
        let f = s.field().clone();
        let p = CosetPartition::subfield(&f, 2).unwrap();
        let t = s
            .survivor_table(&p)
            .unwrap()
            .conjugated(&[Cnot::new(0, 2), Cnot::new(1, 3)])
            .unwrap();
        let ops: Vec<PauliString> = t.operators().cloned().collect();
        assert_eq!(ops.len(), 15);
        assert!(all_commute(&ops));
        for op in &ops {
            let l = op.letters();
            assert!(l[..2].iter().all(|x| !x.has_z()), "{op}");
            assert!(l[2..].iter().all(|x| !x.has_x()), "{op}");
        }
    }

    #[test]
    fn dimension_sixteen_general_cnots() {
        let s = space(4);
        let f = s.field().clone();
        let p = CosetPartition::general(&f, 2, &[FieldElement::ONE, pow(&f, 1)]).unwrap();
        let gates = [
            Cnot::new(3, 2),
            Cnot::new(2, 1),
            Cnot::new(2, 0),
            Cnot::new(0, 3),
            Cnot::new(1, 3),
        ];
        let t = s.survivor_table(&p).unwrap().conjugated(&gates).unwrap();
        let got = unsigned_set(t.operators().cloned());
        let mut want = BTreeSet::new();
        for a in ['I', 'X', 'Y', 'Z'] {
            for b in ['I', 'X', 'Y', 'Z'] {
                if (a, b) != ('I', 'I') {
                    want.insert(format!("{a}{b}II"));
                }
            }
        }
        assert_eq!(got, want);
    }
}
