//! Coset decompositions of GF(2^{mn}) that label the coarse grid.
//!
//! Given a basis `{μ_0, …, μ_{n-1}}` of GF(2^{mn}) over the embedded subfield
//! GF(2^m), the initial coset `C_0` is the GF(2^m)-span of `μ_1, …, μ_{n-1}`
//! and the remaining cosets are `τ μ_0 + C_0` with `τ` running over GF(2^m).

use std::collections::BTreeSet;

use super::{Field, FieldElement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionMode {
    General,
    Subfield,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    representative: FieldElement,
    elements: Vec<FieldElement>,
}

impl Coset {
    /// The additive offset `τ μ_0`; zero for the initial coset.
    pub fn representative(&self) -> FieldElement {
        self.representative
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        self.elements.contains(&a)
    }
}

/// A partition of GF(2^{mn}) into `2^m` additive cosets of `C_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    degree: u32,
    modulus: u32,
    m: u32,
    n: u32,
    mode: PartitionMode,
    relative_basis: Vec<FieldElement>,
    subfield: Vec<FieldElement>,
    cosets: Vec<Coset>,
    membership: Vec<u32>,
}

/// The copy of GF(2^m) inside `field`, in power order `0, σ^e, σ^{2e}, …, 1`
/// with `e = (2^N - 1) / (2^m - 1)`.
pub fn embedded_subfield(field: &Field, m: u32) -> Result<Vec<FieldElement>> {
    let degree = field.degree();
    if m == 0 || !degree.is_multiple_of(m) {
        return Err(Error::SubfieldDegree { m, degree });
    }
    let step = (field.order() / ((1u32 << m) - 1)) as i64;
    Ok(std::iter::once(FieldElement::ZERO)
        .chain((1..1i64 << m).map(|k| field.primitive_power(k * step)))
        .collect())
}

impl CosetPartition {
    /// Decomposes the field using an arbitrary relative basis over GF(2^m).
    pub fn general(field: &Field, m: u32, relative_basis: &[FieldElement]) -> Result<Self> {
        Self::build(field, m, relative_basis, PartitionMode::General)
    }

    /// Quadratic-extension special case: `C_0` is the embedded copy of
    /// GF(2^m), and the coset representatives are `σ^{2^m(i-1)+i}` for
    /// `i = 1, …, 2^m - 1`.
    pub fn subfield(field: &Field, m: u32) -> Result<Self> {
        let degree = field.degree();
        if m == 0 || degree != 2 * m {
            return Err(Error::NotQuadratic { degree, m });
        }
        // τ_i = σ^{(2^m+1) i} · σ^{-2^m}: subfield multiples of μ_0 = σ^{-2^m}.
        let mu0 = field.primitive_power(-(1i64 << m));
        Self::build(field, m, &[mu0, FieldElement::ONE], PartitionMode::Subfield)
    }

    fn build(
        field: &Field,
        m: u32,
        relative_basis: &[FieldElement],
        mode: PartitionMode,
    ) -> Result<Self> {
        let subfield = embedded_subfield(field, m)?;
        let degree = field.degree();
        let n = degree / m;
        if relative_basis.len() != n as usize {
            return Err(Error::NotRelativeBasis(format!(
                "expected {n} elements over GF(2^{m}), got {}",
                relative_basis.len()
            )));
        }
        if relative_basis.iter().any(|e| !field.contains(*e)) {
            return Err(Error::NotRelativeBasis("element outside the field".into()));
        }

        // GF(2)-span of {s μ_j : s ∈ GF(2^m), j ≥ 1}.
        let mut span: BTreeSet<u32> = BTreeSet::from([0]);
        for &mu in &relative_basis[1..] {
            for &s in &subfield[1..] {
                let g = field.mul(s, mu).bits();
                if !span.contains(&g) {
                    let shifted: Vec<u32> = span.iter().map(|&x| x ^ g).collect();
                    span.extend(shifted);
                }
            }
        }
        let expected = 1usize << (m * (n - 1));
        if span.len() != expected {
            return Err(Error::NotRelativeBasis(format!(
                "μ_1..μ_{} span {} elements, expected {expected}",
                n - 1,
                span.len()
            )));
        }

        let rank: Vec<usize> = {
            let mut r = vec![0; field.size()];
            for (i, e) in field.power_order().iter().enumerate() {
                r[e.bits() as usize] = i;
            }
            r
        };
        let mut initial: Vec<FieldElement> =
            span.into_iter().map(FieldElement::from_bits).collect();
        initial.sort_by_key(|e| rank[e.bits() as usize]);

        let mut membership = vec![u32::MAX; field.size()];
        let mut cosets = Vec::with_capacity(subfield.len());
        for (idx, &tau) in subfield.iter().enumerate() {
            let rep = field.mul(tau, relative_basis[0]);
            let elements: Vec<FieldElement> = initial.iter().map(|&c| rep + c).collect();
            for e in &elements {
                let slot = &mut membership[e.bits() as usize];
                if *slot != u32::MAX {
                    return Err(Error::NotRelativeBasis(
                        "μ_0 lies in the span of the other elements".into(),
                    ));
                }
                *slot = idx as u32;
            }
            cosets.push(Coset {
                representative: rep,
                elements,
            });
        }

        Ok(CosetPartition {
            degree,
            modulus: field.modulus(),
            m,
            n,
            mode,
            relative_basis: relative_basis.to_vec(),
            subfield,
            cosets,
            membership,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mode(&self) -> PartitionMode {
        self.mode
    }

    pub fn relative_basis(&self) -> &[FieldElement] {
        &self.relative_basis
    }

    /// The embedded GF(2^m) in power order.
    pub fn subfield_elements(&self) -> &[FieldElement] {
        &self.subfield
    }

    pub fn in_subfield(&self, a: FieldElement) -> bool {
        self.subfield.contains(&a)
    }

    pub fn initial_coset(&self) -> &Coset {
        &self.cosets[0]
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn coset(&self, index: usize) -> Result<&Coset> {
        self.cosets.get(index).ok_or(Error::CosetOutOfRange {
            index,
            count: self.cosets.len(),
        })
    }

    pub fn representatives(&self) -> Vec<FieldElement> {
        self.cosets.iter().map(|c| c.representative).collect()
    }

    /// Index of the coset containing `a`.
    pub fn coset_index(&self, a: FieldElement) -> usize {
        self.membership[a.bits() as usize] as usize
    }

    pub fn belongs_to(&self, field: &Field) -> bool {
        field.degree() == self.degree && field.modulus() == self.modulus
    }

    pub fn check_field(&self, field: &Field) -> Result<()> {
        if self.belongs_to(field) {
            Ok(())
        } else {
            Err(Error::PartitionMismatch)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(field: &Field, elems: &[FieldElement]) -> BTreeSet<i64> {
        elems.iter().map(|&e| field.exponent_label(e)).collect()
    }

    fn set(v: &[i64]) -> BTreeSet<i64> {
        v.iter().copied().collect()
    }

    fn check_invariants(field: &Field, p: &CosetPartition) {
        let c0 = p.initial_coset().elements();
        assert_eq!(c0.len(), 1 << (p.m() * (p.n() - 1)));
        for &a in c0 {
            for &b in c0 {
                assert!(c0.contains(&(a + b)));
            }
        }
        let mut seen = vec![false; field.size()];
        for (i, c) in p.cosets().iter().enumerate() {
            assert_eq!(c.len(), c0.len());
            for &e in c.elements() {
                assert!(!seen[e.bits() as usize]);
                seen[e.bits() as usize] = true;
                assert_eq!(p.coset_index(e), i);
            }
        }
        assert!(seen.into_iter().all(|s| s));
    }

    #[test]
    fn gf4_general() {
        let f = Field::canonical(2).unwrap();
        let p =
            CosetPartition::general(&f, 1, &[FieldElement::ONE, f.primitive_element()]).unwrap();
        check_invariants(&f, &p);
        assert_eq!(exps(&f, p.cosets()[0].elements()), set(&[-1, 1]));
        assert_eq!(exps(&f, p.cosets()[1].elements()), set(&[0, 2]));
    }

    #[test]
    fn gf4_subfield() {
        let f = Field::canonical(2).unwrap();
        let p = CosetPartition::subfield(&f, 1).unwrap();
        check_invariants(&f, &p);
        assert_eq!(exps(&f, p.cosets()[0].elements()), set(&[-1, 0]));
        assert_eq!(p.cosets()[1].representative(), f.primitive_element());
        assert_eq!(exps(&f, p.cosets()[1].elements()), set(&[1, 2]));
    }

    #[test]
    fn gf8_polynomial_basis() {
        let f = Field::canonical(3).unwrap();
        let s = |k| f.primitive_power(k);
        let p = CosetPartition::general(&f, 1, &[s(0), s(1), s(2)]).unwrap();
        check_invariants(&f, &p);
        assert_eq!(exps(&f, p.cosets()[0].elements()), set(&[-1, 1, 2, 4]));
        assert_eq!(exps(&f, p.cosets()[1].elements()), set(&[0, 3, 5, 6]));
    }

    #[test]
    fn gf8_alternate_basis() {
        let f = Field::canonical(3).unwrap();
        let s = |k| f.primitive_power(k);
        let p = CosetPartition::general(&f, 1, &[s(1), s(4), s(5)]).unwrap();
        check_invariants(&f, &p);
        assert_eq!(exps(&f, p.cosets()[0].elements()), set(&[-1, 0, 4, 5]));
        assert_eq!(p.cosets()[1].representative(), s(1));
        assert_eq!(exps(&f, p.cosets()[1].elements()), set(&[1, 2, 3, 6]));
    }

    #[test]
    fn gf16_general_and_subfield() {
        let f = Field::canonical(4).unwrap();
        let s = |k| f.primitive_power(k);
        assert_eq!(
            embedded_subfield(&f, 2).unwrap(),
            vec![FieldElement::ZERO, s(5), s(10), s(0)]
        );

        let g = CosetPartition::general(&f, 2, &[s(0), s(1)]).unwrap();
        check_invariants(&f, &g);
        let expect = [
            set(&[-1, 1, 6, 11]),
            set(&[5, 2, 9, 3]),
            set(&[10, 8, 7, 14]),
            set(&[0, 4, 13, 12]),
        ];
        for (c, e) in g.cosets().iter().zip(&expect) {
            assert_eq!(&exps(&f, c.elements()), e);
        }

        let sf = CosetPartition::subfield(&f, 2).unwrap();
        check_invariants(&f, &sf);
        assert_eq!(
            sf.representatives(),
            vec![FieldElement::ZERO, s(1), s(6), s(11)]
        );
        let expect = [
            set(&[-1, 0, 5, 10]),
            set(&[1, 4, 2, 8]),
            set(&[6, 13, 9, 7]),
            set(&[11, 12, 3, 14]),
        ];
        for (c, e) in sf.cosets().iter().zip(&expect) {
            assert_eq!(&exps(&f, c.elements()), e);
        }
    }

    #[test]
    fn gf16_m1_partition() {
        let f = Field::canonical(4).unwrap();
        let s = |k| f.primitive_power(k);
        let p = CosetPartition::general(&f, 1, &[s(0), s(1), s(2), s(3)]).unwrap();
        check_invariants(&f, &p);
        assert_eq!(p.cosets().len(), 2);
    }

    #[test]
    fn rejects_bad_inputs() {
        let f = Field::canonical(4).unwrap();
        let s = |k| f.primitive_power(k);
        assert!(matches!(
            CosetPartition::general(&f, 3, &[s(0), s(1)]),
            Err(Error::SubfieldDegree { m: 3, degree: 4 })
        ));
        // σ^5 lies in GF(4), so {1, σ^5} is dependent over GF(4).
        let err = CosetPartition::general(&f, 2, &[s(0), s(5)]).unwrap_err();
        assert!(err.to_string().contains("not a relative basis"), "{err}");
        let err = CosetPartition::general(&f, 2, &[s(1), FieldElement::ZERO]).unwrap_err();
        assert!(matches!(err, Error::NotRelativeBasis(_)));
        let f8 = Field::canonical(3).unwrap();
        let err = CosetPartition::subfield(&f8, 1).unwrap_err();
        assert!(err.to_string().contains("not a quadratic extension"));
    }

    #[test]
    fn every_subfield_partition_is_valid() {
        for m in 1..=4 {
            let f = Field::canonical(2 * m).unwrap();
            let p = CosetPartition::subfield(&f, m).unwrap();
            check_invariants(&f, &p);
            assert_eq!(p.initial_coset().elements().len(), 1 << m);
            let sub: BTreeSet<_> = p.subfield_elements().iter().copied().collect();
            let c0: BTreeSet<_> = p.initial_coset().elements().iter().copied().collect();
            assert_eq!(sub, c0);
        }
    }
}
