//! Dense complex-valued functions on a group and their spectra.

use num_complex::Complex64;

use super::{Frequency, GroupElement, GroupSpec};
use crate::error::Error;
use crate::tolerance;
use crate::Result;

fn check_values(group: &GroupSpec, values: &[Complex64]) -> Result<()> {
    let len = group.dense_len()?;
    if values.len() != len {
        return Err(Error::DimensionMismatch { expected: len, got: values.len() });
    }
    if let Some(index) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::NonFinite { index });
    }
    Ok(())
}

/// A function `f: G → ℂ` tabulated over the whole group, indexed by packed index.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseFunction {
    group: GroupSpec,
    values: Vec<Complex64>,
}

impl DenseFunction {
    /// Wrap a full table of complex values.
    pub fn new(group: GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        check_values(&group, &values)?;
        Ok(Self { group, values })
    }

    /// Wrap a full table of real values.
    pub fn from_real(group: GroupSpec, values: &[f64]) -> Result<Self> {
        let complex = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        Self::new(group, complex)
    }

    /// The zero function.
    pub fn zeros(group: GroupSpec) -> Result<Self> {
        let len = group.dense_len()?;
        Ok(Self { group, values: vec![Complex64::new(0.0, 0.0); len] })
    }

    /// Point mass of weight 1 at `at`.
    pub fn delta(group: GroupSpec, at: &GroupElement) -> Result<Self> {
        let index = group.pack(at)?;
        let mut f = Self::zeros(group)?;
        f.values[index] = Complex64::new(1.0, 0.0);
        Ok(f)
    }

    /// The constant function with the given value.
    pub fn constant(group: GroupSpec, value: f64) -> Result<Self> {
        let len = group.dense_len()?;
        Ok(Self { group, values: vec![Complex64::new(value, 0.0); len] })
    }

    /// The group the function lives on.
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// All values in packed-index order.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Value at a group element.
    pub fn value(&self, x: &GroupElement) -> Result<Complex64> {
        Ok(self.values[self.group.pack(x)?])
    }

    /// Real parts of all values in packed-index order.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    /// `‖f‖₂`.
    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Checks the function is a probability vector: real, nonnegative, unit mass.
    pub fn check_probability(&self) -> Result<()> {
        let mut sum = 0.0;
        for (i, v) in self.values.iter().enumerate() {
            if v.im.abs() > tolerance::REALNESS {
                return Err(Error::NotAProbability(format!(
                    "imaginary part {:.3e} at index {i}",
                    v.im
                )));
            }
            if v.re < -tolerance::PROBABILITY_SUM {
                return Err(Error::NotAProbability(format!(
                    "negative value {:.3e} at index {i}",
                    v.re
                )));
            }
            sum += v.re;
        }
        if (sum - 1.0).abs() > tolerance::PROBABILITY_SUM {
            return Err(Error::NotAProbability(format!("total mass {sum}")));
        }
        Ok(())
    }

    /// Consume the function, yielding its value table.
    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }
}

/// Fourier coefficients of a function, indexed by packed dual index.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    group: GroupSpec,
    values: Vec<Complex64>,
}

impl Spectrum {
    /// Wrap a full table of coefficients.
    pub fn new(group: GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        check_values(&group, &values)?;
        Ok(Self { group, values })
    }

    /// Build a dense spectrum from sparse `(frequency, coefficient)` pairs;
    /// unspecified coefficients are zero.
    pub fn from_sparse(group: GroupSpec, entries: &[(Frequency, Complex64)]) -> Result<Self> {
        let len = group.dense_len()?;
        let mut values = vec![Complex64::new(0.0, 0.0); len];
        for (k, c) in entries {
            values[group.pack_frequency(k)?] = *c;
        }
        Self::new(group, values)
    }

    /// The underlying group.
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// All coefficients in packed dual-index order.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Coefficient at a frequency.
    pub fn value(&self, k: &Frequency) -> Result<Complex64> {
        Ok(self.values[self.group.pack_frequency(k)?])
    }

    /// `‖f̂‖₂`; equals the direct-space norm under the balanced convention.
    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Sparse view: all coefficients with modulus above `threshold`.
    pub fn sparse_entries(&self, threshold: f64) -> Vec<(Frequency, Complex64)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.norm() > threshold)
            .map(|(i, v)| (self.group.unpack_frequency(i).expect("index in range"), *v))
            .collect()
    }

    /// Consume the spectrum, yielding its coefficient table.
    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }
}
