//! Dense Clifford algebra Cl(0,m) with complex coefficients.
//!
//! The m generators e_1, ..., e_m anticommute and square to -1. Basis blades
//! are indexed by bitmasks: bit i-1 set means e_i divides the blade, so mask 0
//! is the scalar unit, mask 0b11 is e_1 e_2, and a full multivector is a dense
//! vector of 2^m complex coefficients in mask order. Coefficients are complex
//! because every kernel evaluated on top of this algebra is complex-valued.

use num_complex::Complex64;
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of generators. 2^8 = 256 dense coefficients keeps
/// every product loop cache-resident.
pub const MAX_DIMENSION: usize = 8;

/// The algebra Cl(0,m), identified by its generator count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSignature {
    m: usize,
}

impl AlgebraSignature {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 || m > MAX_DIMENSION {
            return Err(Error::UnsupportedDimension {
                m,
                reason: "Cl(0,m) supports 1 <= m <= 8",
            });
        }
        Ok(Self { m })
    }

    /// Number of generators.
    pub fn dimension(&self) -> usize {
        self.m
    }

    /// Number of basis blades, 2^m.
    pub fn blade_count(&self) -> usize {
        1 << self.m
    }
}

/// Sign of e_A e_B relative to the canonical blade e_{A xor B}.
///
/// Counts transpositions needed to merge the two sorted index lists, then adds
/// one sign flip per repeated generator (e_i^2 = -1).
fn blade_product_sign(a: usize, b: usize) -> f64 {
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    let flips = swaps + (a & b).count_ones();
    if flips % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Dense element of Cl(0,m) with complex coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    signature: AlgebraSignature,
    coeffs: Vec<Complex64>,
}

impl Multivector {
    pub fn zero(signature: AlgebraSignature) -> Self {
        Self {
            signature,
            coeffs: vec![Complex64::ZERO; signature.blade_count()],
        }
    }

    pub fn scalar(signature: AlgebraSignature, value: Complex64) -> Self {
        let mut mv = Self::zero(signature);
        mv.coeffs[0] = value;
        mv
    }

    /// The generator e_i, 1-based to match the usual index convention.
    pub fn basis_vector(signature: AlgebraSignature, i: usize) -> Result<Self> {
        if i == 0 || i > signature.dimension() {
            return Err(Error::InvalidParameter(format!(
                "basis vector index {i} outside 1..={}",
                signature.dimension()
            )));
        }
        Ok(Self::from_blade(signature, 1 << (i - 1), Complex64::ONE))
    }

    /// A single blade term: coefficient times the blade with the given bitmask.
    /// The mask must be below 2^m.
    pub fn from_blade(signature: AlgebraSignature, mask: usize, value: Complex64) -> Self {
        assert!(
            mask < signature.blade_count(),
            "blade mask {mask:#b} out of range for m = {}",
            signature.dimension()
        );
        let mut mv = Self::zero(signature);
        mv.coeffs[mask] = value;
        mv
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.signature
    }

    pub fn dimension(&self) -> usize {
        self.signature.dimension()
    }

    pub fn coeff(&self, mask: usize) -> Complex64 {
        self.coeffs[mask]
    }

    pub fn coeff_mut(&mut self, mask: usize) -> &mut Complex64 {
        &mut self.coeffs[mask]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Grade-0 coefficient.
    pub fn scalar_part(&self) -> Complex64 {
        self.coeffs[0]
    }

    fn check_same_signature(&self, other: &Self) -> Result<()> {
        if self.signature != other.signature {
            return Err(Error::DimensionMismatch(
                self.dimension(),
                other.dimension(),
            ));
        }
        Ok(())
    }

    /// Geometric (Clifford) product. Bilinear; blade pairs combine as
    /// e_A e_B = sign(A,B) e_{A xor B}. Zero coefficients are skipped, which
    /// makes products against sparse operands (kernel values, vectors) cheap.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_same_signature(other)?;
        let mut out = Self::zero(self.signature);
        for (a_mask, &a) in self.coeffs.iter().enumerate() {
            if a == Complex64::ZERO {
                continue;
            }
            for (b_mask, &b) in other.coeffs.iter().enumerate() {
                if b == Complex64::ZERO {
                    continue;
                }
                let sign = blade_product_sign(a_mask, b_mask);
                out.coeffs[a_mask ^ b_mask] += a * b * sign;
            }
        }
        Ok(out)
    }

    /// Keep only blades of the given grade (popcount of the mask).
    pub fn grade_project(&self, grade: usize) -> Result<Self> {
        if grade > self.dimension() {
            return Err(Error::GradeOutOfRange {
                grade,
                m: self.dimension(),
            });
        }
        let mut out = Self::zero(self.signature);
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if mask.count_ones() as usize == grade {
                out.coeffs[mask] = c;
            }
        }
        Ok(out)
    }

    /// Largest grade carrying a coefficient above `tol` in absolute value.
    pub fn max_grade(&self, tol: f64) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > tol)
            .map(|(mask, _)| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_signature(other)?;
        let mut out = self.clone();
        for (o, c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o += c;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_signature(other)?;
        let mut out = self.clone();
        for (o, c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o -= c;
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.signature, other.signature);
        for (o, c) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *o += c;
        }
    }

    /// self += z * other, without allocating.
    pub fn add_scaled(&mut self, other: &Self, z: Complex64) {
        debug_assert_eq!(self.signature, other.signature);
        for (o, c) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *o += z * c;
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = -*c;
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= z;
        }
        out
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    /// Coefficientwise agreement within `tol` (absolute).
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.signature == other.signature
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| (a - b).norm() <= tol)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.norm() == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6e}{:+.6e}i)", c.re, c.im)?;
            if mask != 0 {
                write!(f, "*e")?;
                for i in 0..self.dimension() {
                    if mask & (1 << i) != 0 {
                        write!(f, "{}", i + 1)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// JSON form: {"m": 2, "coeffs": {"3": [0.0, 0.5]}} with blade bitmasks as
/// decimal string keys and zero coefficients omitted.
impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("m", &self.dimension())?;
        let coeffs: BTreeMap<usize, [f64; 2]> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() != 0.0)
            .map(|(mask, c)| (mask, [c.re, c.im]))
            .collect();
        // String keys keep the format stable for non-JSON serde targets too.
        let coeffs: BTreeMap<String, [f64; 2]> = coeffs
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        map.serialize_entry("coeffs", &coeffs)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct MvVisitor;

        impl<'de> Visitor<'de> for MvVisitor {
            type Value = Multivector;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map {m, coeffs}")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Multivector, A::Error> {
                let mut m: Option<usize> = None;
                let mut coeffs: Option<BTreeMap<String, [f64; 2]>> = None;
                while let Some(key) = access.next_key::<String>()? {
                    match key.as_str() {
                        "m" => m = Some(access.next_value()?),
                        "coeffs" => coeffs = Some(access.next_value()?),
                        other => {
                            return Err(de::Error::unknown_field(other, &["m", "coeffs"]));
                        }
                    }
                }
                let m = m.ok_or_else(|| de::Error::missing_field("m"))?;
                let coeffs = coeffs.ok_or_else(|| de::Error::missing_field("coeffs"))?;
                let sig = AlgebraSignature::new(m)
                    .map_err(|e| de::Error::custom(e.to_string()))?;
                let mut mv = Multivector::zero(sig);
                for (key, [re, im]) in coeffs {
                    let mask: usize = key
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad blade mask {key:?}")))?;
                    if mask >= sig.blade_count() {
                        return Err(de::Error::custom(format!(
                            "blade mask {mask} out of range for m = {m}"
                        )));
                    }
                    mv.coeffs[mask] = Complex64::new(re, im);
                }
                Ok(mv)
            }
        }

        deserializer.deserialize_map(MvVisitor)
    }
}

/// Real vector in R^m, the grade-1 slice the kernels are evaluated on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vector {
    components: Vec<f64>,
}

impl Vector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() || components.len() > MAX_DIMENSION {
            return Err(Error::UnsupportedDimension {
                m: components.len(),
                reason: "vectors live in R^m with 1 <= m <= 8",
            });
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter(
                "vector components must be finite".into(),
            ));
        }
        Ok(Self { components })
    }

    pub fn zeros(m: usize) -> Result<Self> {
        Self::new(vec![0.0; m])
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn get(&self, j: usize) -> f64 {
        self.components[j]
    }

    pub fn set(&mut self, j: usize, v: f64) {
        self.components[j] = v;
    }

    pub fn norm(&self) -> f64 {
        self.components.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn neg(&self) -> Self {
        Self {
            components: self.components.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            components: self.components.iter().map(|c| s * c).collect(),
        }
    }

    fn check_same_dimension(&self, other: &Self) -> Result<()> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch(
                self.dimension(),
                other.dimension(),
            ));
        }
        Ok(())
    }

    /// Euclidean inner product <x,y> = sum_j x_j y_j. Equals -(xy + yx)/2 in
    /// the algebra, where vector squares are negative.
    pub fn inner(&self, other: &Self) -> Result<f64> {
        self.check_same_dimension(other)?;
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Wedge product x ^ y = sum_{j<k} e_j e_k (x_j y_k - x_k y_j), a grade-2
    /// multivector. Equals (xy - yx)/2.
    pub fn wedge(&self, other: &Self) -> Result<Multivector> {
        self.check_same_dimension(other)?;
        let sig = AlgebraSignature::new(self.dimension())?;
        let mut out = Multivector::zero(sig);
        for j in 0..self.dimension() {
            for k in (j + 1)..self.dimension() {
                let c = self.components[j] * other.components[k]
                    - self.components[k] * other.components[j];
                out.coeffs[(1 << j) | (1 << k)] = Complex64::new(c, 0.0);
            }
        }
        Ok(out)
    }

    /// Norm of the wedge product, computed from the bivector components so it
    /// stays accurate for near-parallel vectors where |x|^2|y|^2 - <x,y>^2
    /// would cancel.
    pub fn wedge_norm(&self, other: &Self) -> Result<f64> {
        self.check_same_dimension(other)?;
        let mut sum = 0.0;
        for j in 0..self.dimension() {
            for k in (j + 1)..self.dimension() {
                let c = self.components[j] * other.components[k]
                    - self.components[k] * other.components[j];
                sum += c * c;
            }
        }
        Ok(sum.sqrt())
    }

    /// Embed as the grade-1 multivector sum_j x_j e_j.
    pub fn to_multivector(&self) -> Multivector {
        let sig = AlgebraSignature::new(self.dimension()).expect("dimension validated at construction");
        let mut out = Multivector::zero(sig);
        for (j, &c) in self.components.iter().enumerate() {
            out.coeffs[1 << j] = Complex64::new(c, 0.0);
        }
        out
    }
}
