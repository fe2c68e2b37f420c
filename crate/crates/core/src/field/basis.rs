use super::{Field, FieldElement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Polynomial,
    Normal,
    SelfDual,
    Custom,
}

/// An ordered basis of GF(2^N) over GF(2), together with its trace-dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    elements: Vec<FieldElement>,
    dual: Vec<FieldElement>,
    kind: BasisKind,
}

impl Basis {
    /// Validates that `elements` are `N` linearly independent elements and
    /// computes the dual basis. A `SelfDual` kind is checked against the
    /// trace form.
    pub fn new(field: &Field, elements: Vec<FieldElement>, kind: BasisKind) -> Result<Basis> {
        let n = field.degree() as usize;
        if elements.len() != n {
            return Err(Error::BasisSize {
                expected: n,
                got: elements.len(),
            });
        }
        if gf2_rank(elements.iter().map(|e| e.bits())) != n {
            return Err(Error::DependentBasis);
        }
        let dual = dual_of(field, &elements)?;
        if kind == BasisKind::SelfDual {
            check_self_dual(field, &elements)?;
        }
        Ok(Basis {
            elements,
            dual,
            kind,
        })
    }

    /// `{1, σ, …, σ^{N-1}}`.
    pub fn polynomial(field: &Field) -> Basis {
        let elements = (0..field.degree())
            .map(|k| field.primitive_power(k as i64))
            .collect();
        Basis::new(field, elements, BasisKind::Polynomial).expect("powers of x are independent")
    }

    /// `{σ, σ^2, σ^4, …}`. Fails when `σ` is not a normal element.
    pub fn normal(field: &Field) -> Result<Basis> {
        let elements = (0..field.degree())
            .map(|k| field.primitive_power(1i64 << k))
            .collect();
        Basis::new(field, elements, BasisKind::Normal)
    }

    /// The self-dual basis whose sorted exponent list is lexicographically
    /// smallest.
    ///
    /// Depth-first search over elements with `tr(θ^2) = 1` in increasing
    /// exponent order. A partial orthonormal set `S` extends to a full
    /// self-dual basis exactly when `1 ∉ span(S)`: its orthogonal complement
    /// carries a nondegenerate trace form, which has an orthonormal basis iff
    /// it is not alternating, i.e. iff some complement vector has trace 1.
    pub fn self_dual(field: &Field) -> Basis {
        let n = field.degree() as usize;
        let candidates: Vec<(u32, FieldElement)> = (0..field.order())
            .map(|k| (k, field.primitive_power(k as i64)))
            .filter(|&(_, e)| field.trace(field.square(e)) == 1)
            .collect();

        fn search(
            field: &Field,
            candidates: &[(u32, FieldElement)],
            start: usize,
            chosen: &mut Vec<FieldElement>,
            n: usize,
        ) -> bool {
            if chosen.len() == n {
                return true;
            }
            for (pos, &(_, e)) in candidates.iter().enumerate().skip(start) {
                if chosen.iter().any(|&c| field.trace(field.mul(c, e)) != 0) {
                    continue;
                }
                chosen.push(e);
                let feasible = chosen.len() == n || !in_span(chosen, FieldElement::ONE);
                if feasible && search(field, candidates, pos + 1, chosen, n) {
                    return true;
                }
                chosen.pop();
            }
            false
        }

        let mut chosen = Vec::with_capacity(n);
        let found = search(field, &candidates, 0, &mut chosen, n);
        assert!(found, "a self-dual basis exists in characteristic 2");
        Basis::new(field, chosen, BasisKind::SelfDual).expect("search output is self-dual")
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn dual(&self) -> &[FieldElement] {
        &self.dual
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_self_dual(&self, field: &Field) -> bool {
        check_self_dual(field, &self.elements).is_ok()
    }

    /// Coefficients `a_i` with `x = Σ a_i θ_i`.
    ///
    /// Self-dual bases use `a_i = tr(x θ_i)`; other bases use the dual basis.
    pub fn expand(&self, field: &Field, x: FieldElement) -> Vec<u8> {
        let probes = if self.kind == BasisKind::SelfDual {
            &self.elements
        } else {
            &self.dual
        };
        probes
            .iter()
            .map(|&t| field.trace(field.mul(x, t)))
            .collect()
    }

    pub fn combine(&self, coeffs: &[u8]) -> FieldElement {
        self.elements
            .iter()
            .zip(coeffs)
            .filter(|(_, &c)| c & 1 == 1)
            .fold(FieldElement::ZERO, |acc, (&e, _)| acc + e)
    }

    /// Sorted exponents of the basis elements; zero never appears in a basis.
    pub fn exponents(&self, field: &Field) -> Vec<u32> {
        let mut exps: Vec<u32> = self
            .elements
            .iter()
            .filter_map(|&e| field.exponent(e))
            .collect();
        exps.sort_unstable();
        exps
    }
}

fn check_self_dual(field: &Field, elements: &[FieldElement]) -> Result<()> {
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            let expect = u8::from(i == j);
            if field.trace(field.mul(a, b)) != expect {
                return Err(Error::NotSelfDual { i, j });
            }
        }
    }
    Ok(())
}

/// Solves `tr(θ_k θ'_l) = δ_kl` by inverting the Gram matrix over GF(2).
fn dual_of(field: &Field, elements: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let n = elements.len();
    // Row i: bits j = tr(θ_i θ_j), augmented with the identity in bits n..2n.
    let mut rows: Vec<u64> = (0..n)
        .map(|i| {
            let mut r = 1u64 << (n + i);
            for (j, &b) in elements.iter().enumerate() {
                r |= (field.trace(field.mul(elements[i], b)) as u64) << j;
            }
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| rows[r] >> col & 1 == 1)
            .ok_or(Error::DualUnavailable)?;
        rows.swap(col, pivot);
        for r in 0..n {
            if r != col && rows[r] >> col & 1 == 1 {
                rows[r] ^= rows[col];
            }
        }
    }
    Ok((0..n)
        .map(|k| {
            let inv_row = rows[k] >> n;
            elements
                .iter()
                .enumerate()
                .filter(|(l, _)| inv_row >> l & 1 == 1)
                .fold(FieldElement::ZERO, |acc, (_, &e)| acc + e)
        })
        .collect())
}

pub(crate) fn gf2_rank(vectors: impl Iterator<Item = u32>) -> usize {
    let mut pivots: Vec<u32> = Vec::new();
    for v in vectors {
        let reduced = pivots.iter().fold(v, |acc, &p| acc.min(acc ^ p));
        if reduced != 0 {
            pivots.push(reduced);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

fn in_span(set: &[FieldElement], x: FieldElement) -> bool {
    gf2_rank(set.iter().map(|e| e.bits()))
        == gf2_rank(set.iter().map(|e| e.bits()).chain([x.bits()]))
}
