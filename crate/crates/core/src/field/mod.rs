//! Exact arithmetic in GF(2^N).
//!
//! Elements are stored as polynomial coefficient bit-vectors (bit `i` is the
//! coefficient of `x^i`), reduced modulo a primitive modulus polynomial.
//! Multiplication goes through log/antilog tables of the primitive element
//! `σ = x`, so every nonzero element is `σ^k` for a unique `k < 2^N - 1`.
//!
//! Labels follow the usual exponent notation: the zero element prints as `0`,
//! `σ^0` prints as `1`, and everything else as `σ^k`.

mod basis;
mod coset;

pub use basis::{Basis, BasisKind};
pub use coset::{embedded_subfield, Coset, CosetPartition, PartitionMode};

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

/// An element of GF(2^N) in polynomial representation.
///
/// The value carries no reference to its field; operations other than
/// addition go through [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub const fn from_bits(bits: u32) -> Self {
        FieldElement(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

// Characteristic 2: subtraction is addition.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

/// GF(2^N) built from a primitive modulus polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    degree: u32,
    modulus: u32,
    antilog: Vec<u32>,
    log: Vec<u32>,
    trace_mask: u32,
}

impl Field {
    /// Builds GF(2^degree) from `modulus`, given as a bit-vector with bit `i`
    /// holding the coefficient of `x^i`.
    ///
    /// The modulus must be irreducible and `x` must generate the
    /// multiplicative group.
    pub fn new(degree: u32, modulus: u32) -> Result<Field> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        if poly_degree(modulus) != Some(degree) {
            return Err(Error::ModulusDegree { degree, modulus });
        }
        if !is_irreducible(modulus) {
            return Err(Error::NotIrreducible(format_polynomial(modulus)));
        }

        let order = (1u32 << degree) - 1;
        let mut antilog = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; 1 << degree];
        let mut x = 1u32;
        for k in 0..order {
            if k > 0 && x == 1 {
                return Err(Error::NotPrimitive(format_polynomial(modulus)));
            }
            antilog.push(x);
            log[x as usize] = k;
            x <<= 1;
            if x >> degree & 1 == 1 {
                x ^= modulus;
            }
        }
        debug_assert_eq!(x, 1);

        let mut field = Field {
            degree,
            modulus,
            antilog,
            log,
            trace_mask: 0,
        };
        let mut mask = 0;
        for i in 0..degree {
            let t = field.trace_sum(FieldElement(1 << i));
            debug_assert!(t.0 <= 1);
            mask |= t.0 << i;
        }
        field.trace_mask = mask;
        Ok(field)
    }

    /// GF(2^degree) with the default modulus: the primitive polynomial with
    /// the smallest bit-vector value. For degrees 2, 3 and 4 these are
    /// `x^2 + x + 1`, `x^3 + x + 1` and `x^4 + x + 1`.
    pub fn canonical(degree: u32) -> Result<Field> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        let lo = 1u32 << degree;
        for modulus in (lo | 1..lo << 1).step_by(2) {
            if let Ok(field) = Field::new(degree, modulus) {
                return Ok(field);
            }
        }
        unreachable!("every degree has a primitive polynomial")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Modulus coefficients from `x^0` up to `x^N`.
    pub fn modulus_coefficients(&self) -> Vec<u8> {
        (0..=self.degree)
            .map(|i| (self.modulus >> i & 1) as u8)
            .collect()
    }

    /// Number of elements, `2^N`.
    pub fn size(&self) -> usize {
        1 << self.degree
    }

    /// Order of the multiplicative group, `2^N - 1`.
    pub fn order(&self) -> u32 {
        (1 << self.degree) - 1
    }

    pub fn primitive_element(&self) -> FieldElement {
        self.primitive_power(1)
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        (a.0 as usize) < self.size()
    }

    /// All elements in bit-vector order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..1u32 << self.degree).map(FieldElement)
    }

    /// All elements in power order: `0, σ, σ^2, …, σ^{2^N-2}, 1`.
    pub fn power_order(&self) -> Vec<FieldElement> {
        let order = self.order();
        std::iter::once(FieldElement::ZERO)
            .chain((1..=order).map(|k| self.primitive_power(k as i64)))
            .collect()
    }

    /// `σ^k`, reduced modulo the group order. Negative exponents are allowed.
    pub fn primitive_power(&self, k: i64) -> FieldElement {
        let order = self.order() as i64;
        FieldElement(self.antilog[k.rem_euclid(order) as usize])
    }

    /// Discrete logarithm to base `σ`, in `0..2^N-1`. `None` for zero.
    pub fn exponent(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    /// Exponent label used in serialized documents: `-1` for zero.
    pub fn exponent_label(&self, a: FieldElement) -> i64 {
        self.exponent(a).map_or(-1, i64::from)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let k = self.log[a.0 as usize] + self.log[b.0 as usize];
        let order = self.order();
        FieldElement(self.antilog[(if k >= order { k - order } else { k }) as usize])
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        match self.exponent(a) {
            None => Err(Error::ZeroInverse),
            Some(k) => Ok(self.primitive_power(-(k as i64))),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`. Negative exponents require a nonzero base; `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement> {
        match self.exponent(a) {
            Some(e) => Ok(self.primitive_power(e as i64 * k.rem_euclid(self.order() as i64))),
            None if k > 0 => Ok(FieldElement::ZERO),
            None if k == 0 => Ok(FieldElement::ONE),
            None => Err(Error::ZeroInverse),
        }
    }

    /// `a + a^2 + a^4 + … + a^{2^{N-1}}` evaluated in the field. The result
    /// is always `0` or `1`.
    pub fn trace_sum(&self, a: FieldElement) -> FieldElement {
        let mut sum = FieldElement::ZERO;
        let mut conj = a;
        for _ in 0..self.degree {
            sum += conj;
            conj = self.square_by_reduction(conj);
        }
        sum
    }

    /// Absolute trace as a bit.
    pub fn trace(&self, a: FieldElement) -> u8 {
        ((a.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Additive character `χ(a) = (-1)^{tr(a)}`.
    pub fn character(&self, a: FieldElement) -> i8 {
        1 - 2 * self.trace(a) as i8
    }

    /// `(tr(a), χ(a))`.
    pub fn trace_and_character(&self, a: FieldElement) -> (u8, i8) {
        let t = self.trace(a);
        (t, 1 - 2 * t as i8)
    }

    /// Printable label for an element.
    pub fn label(&self, a: FieldElement) -> ElementLabel {
        ElementLabel(self.exponent(a))
    }

    /// Parses `0`, `1`, `s5`, `σ^5`, `σ5` or `σ`.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let t = text.trim();
        let bad = || Error::ElementParse(text.to_string());
        match t {
            "0" => return Ok(FieldElement::ZERO),
            "1" => return Ok(FieldElement::ONE),
            _ => {}
        }
        let rest = t
            .strip_prefix('s')
            .or_else(|| t.strip_prefix('σ'))
            .ok_or_else(bad)?;
        let rest = rest.strip_prefix('^').unwrap_or(rest);
        if rest.is_empty() {
            return Ok(self.primitive_element());
        }
        let k: i64 = rest.parse().map_err(|_| bad())?;
        Ok(self.primitive_power(k))
    }

    /// Squaring by shift-and-reduce, independent of the log tables.
    fn square_by_reduction(&self, a: FieldElement) -> FieldElement {
        let mut acc: u64 = 0;
        for i in 0..self.degree {
            if a.0 >> i & 1 == 1 {
                acc |= 1 << (2 * i);
            }
        }
        FieldElement(poly_mod(acc, self.modulus as u64) as u32)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF(2^{}) mod {}",
            self.degree,
            format_polynomial(self.modulus)
        )
    }
}

/// Display wrapper produced by [`Field::label`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementLabel(Option<u32>);

impl fmt::Display for ElementLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => f.write_str("0"),
            Some(0) => f.write_str("1"),
            Some(1) => f.write_str("σ"),
            Some(k) => write!(f, "σ^{k}"),
        }
    }
}

/// Human-readable polynomial, e.g. `x^4 + x + 1`.
pub fn format_polynomial(p: u32) -> String {
    let mut terms = Vec::new();
    for i in (0..32).rev() {
        if p >> i & 1 == 1 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            });
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn poly_degree(p: u32) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(31 - p.leading_zeros())
    }
}

fn poly_mod(mut a: u64, m: u64) -> u64 {
    let dm = 63 - m.leading_zeros();
    while a != 0 {
        let da = 63 - a.leading_zeros();
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Trial division by every polynomial of degree at most half the degree.
fn is_irreducible(p: u32) -> bool {
    let d = match poly_degree(p) {
        Some(d) => d,
        None => return false,
    };
    for fd in 1..=d / 2 {
        for f in (1u32 << fd)..(1u32 << (fd + 1)) {
            if poly_mod(p as u64, f as u64) == 0 {
                return false;
            }
        }
    }
    d >= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(n: u32) -> Field {
        Field::canonical(n).unwrap()
    }

    #[test]
    fn small_degree_default_moduli() {
        assert_eq!(gf(2).modulus(), 0b111);
        assert_eq!(gf(3).modulus(), 0b1011);
        assert_eq!(gf(4).modulus(), 0b10011);
        assert_eq!(gf(1).modulus(), 0b11);
    }

    #[test]
    fn gf4_sigma_squared_is_sigma_plus_one() {
        let f = Field::new(2, 0b111).unwrap();
        let s = f.primitive_element();
        assert_eq!(f.mul(s, s), s + FieldElement::ONE);
        // σ^2 = σ^{-1}
        assert_eq!(f.mul(s, s), f.inv(s).unwrap());
    }

    #[test]
    fn gf8_sigma_cubed() {
        let f = Field::new(3, 0b1011).unwrap();
        let s = f.primitive_element();
        assert_eq!(f.pow(s, 3).unwrap(), s + FieldElement::ONE);
    }

    #[test]
    fn reducible_and_non_primitive_moduli_are_rejected() {
        assert!(matches!(
            Field::new(2, 0b101),
            Err(Error::NotIrreducible(_))
        ));
        let msg = Field::new(2, 0b101).unwrap_err().to_string();
        assert!(msg.contains("not irreducible"), "{msg}");
        // x^4 + x^3 + x^2 + x + 1 is irreducible, but x has order 5.
        let err = Field::new(4, 0b11111).unwrap_err();
        assert!(matches!(err, Error::NotPrimitive(_)));
        assert!(err.to_string().contains("not primitive"));
        assert!(matches!(
            Field::new(3, 0b111),
            Err(Error::ModulusDegree { .. })
        ));
        assert!(matches!(
            Field::new(17, 1 << 17 | 0b1001),
            Err(Error::UnsupportedDegree(17))
        ));
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = gf(3);
        assert_eq!(f.inv(FieldElement::ZERO), Err(Error::ZeroInverse));
        assert_eq!(
            f.inv(FieldElement::ZERO).unwrap_err().to_string(),
            "zero has no inverse"
        );
        assert_eq!(f.pow(FieldElement::ZERO, -1), Err(Error::ZeroInverse));
        assert_eq!(f.pow(FieldElement::ZERO, 0).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn self_addition_vanishes() {
        let f = gf(5);
        for a in f.elements() {
            assert!((a + a).is_zero());
        }
    }

    #[test]
    fn log_antilog_roundtrip_all_degrees() {
        for n in 1..=MAX_DEGREE {
            let f = gf(n);
            assert_eq!(f.antilog.len() as u32, f.order());
            for k in 0..f.order() {
                assert_eq!(f.exponent(f.primitive_power(k as i64)), Some(k));
            }
        }
    }

    #[test]
    fn multiplication_matches_shift_and_reduce() {
        for n in 1..=6 {
            let f = gf(n);
            for a in f.elements() {
                for b in f.elements() {
                    let mut acc = 0u64;
                    for i in 0..n {
                        if a.bits() >> i & 1 == 1 {
                            acc ^= (b.bits() as u64) << i;
                        }
                    }
                    let expect = poly_mod(acc, f.modulus() as u64) as u32;
                    assert_eq!(f.mul(a, b).bits(), expect);
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f = gf(2);
        assert_eq!(f.trace(f.primitive_element()), 1);
        assert_eq!(f.trace_and_character(FieldElement::ZERO), (0, 1));
        assert_eq!(f.trace(FieldElement::ONE), 0);
    }

    #[test]
    fn trace_is_additive_and_in_prime_field() {
        for n in 1..=6 {
            let f = gf(n);
            for a in f.elements() {
                let t = f.trace_sum(a);
                assert!(t.bits() <= 1);
                assert_eq!(t.bits() as u8, f.trace(a));
                for b in f.elements() {
                    assert_eq!(f.trace_sum(a + b), f.trace_sum(a) + f.trace_sum(b));
                }
            }
        }
    }

    #[test]
    fn character_sum_orthogonality() {
        for n in 1..=8 {
            let f = gf(n);
            for a in f.elements() {
                let s: i64 = f.elements().map(|b| f.character(f.mul(a, b)) as i64).sum();
                let expect = if a.is_zero() { f.size() as i64 } else { 0 };
                assert_eq!(s, expect, "N = {n}, a = {a:?}");
            }
        }
    }

    #[test]
    fn labels_and_parsing() {
        let f = gf(4);
        assert_eq!(f.label(FieldElement::ZERO).to_string(), "0");
        assert_eq!(f.label(FieldElement::ONE).to_string(), "1");
        assert_eq!(f.label(f.primitive_power(5)).to_string(), "σ^5");
        assert_eq!(f.label(f.primitive_power(1)).to_string(), "σ");
        assert_eq!(f.label(f.primitive_power(15)).to_string(), "1");
        for a in f.elements() {
            assert_eq!(f.parse_element(&f.label(a).to_string()).unwrap(), a);
        }
        assert_eq!(f.parse_element("s5").unwrap(), f.primitive_power(5));
        assert_eq!(f.parse_element("s15").unwrap(), FieldElement::ONE);
        assert!(f.parse_element("t3").is_err());
        assert_eq!(f.exponent_label(FieldElement::ZERO), -1);
        assert_eq!(f.exponent_label(FieldElement::ONE), 0);
    }

    #[test]
    fn power_order_lists_every_element_once() {
        let f = gf(4);
        let p = f.power_order();
        assert_eq!(p.len(), 16);
        assert_eq!(p[0], FieldElement::ZERO);
        assert_eq!(p[15], FieldElement::ONE);
        let mut bits: Vec<u32> = p.iter().map(|e| e.bits()).collect();
        bits.sort();
        assert_eq!(bits, (0..16).collect::<Vec<_>>());
    }

    #[test]
    fn polynomial_formatting() {
        assert_eq!(format_polynomial(0b10011), "x^4 + x + 1");
        assert_eq!(format_polynomial(0b111), "x^2 + x + 1");
    }
}
