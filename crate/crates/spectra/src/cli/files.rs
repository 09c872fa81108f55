//! Versioned JSON schemas for persisted models and spectra.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::group::Frequency;
use crate::models::{FilterSpec, SmoothedModel, SparseModel};
use crate::Result;

/// Current schema version for both file kinds.
pub const FORMAT_VERSION: u32 = 1;

/// Group descriptor stored in files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    /// The Boolean cube on `bits` bits.
    Boolean { bits: usize },
    /// A product of cyclic groups.
    Cyclic { modulus: u32, dims: usize },
}

/// Filter descriptor stored in files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum FilterDescriptor {
    /// `(1 − 2θ)^{|k|}`.
    OrderDecay { theta: f64 },
    /// One weight per Hamming-weight class.
    PerOrder { weights: Vec<f64> },
}

impl FilterDescriptor {
    /// Convert to the in-memory filter.
    pub fn to_filter(&self) -> FilterSpec {
        match self {
            FilterDescriptor::OrderDecay { theta } => FilterSpec::OrderDecay { theta: *theta },
            FilterDescriptor::PerOrder { weights } => {
                FilterSpec::PerOrder { weights: weights.clone() }
            }
        }
    }

    /// Describe an in-memory filter; explicit per-frequency maps are not
    /// persisted.
    pub fn from_filter(filter: &FilterSpec) -> Result<Self> {
        match filter {
            FilterSpec::OrderDecay { theta } => Ok(FilterDescriptor::OrderDecay { theta: *theta }),
            FilterSpec::PerOrder { weights } => {
                Ok(FilterDescriptor::PerOrder { weights: weights.clone() })
            }
            FilterSpec::PerFrequency { .. } => Err(Error::InvalidArgument(
                "per-frequency filters are not persisted to model files".into(),
            )),
        }
    }
}

/// Tool provenance; deliberately carries no wall-clock data so identical
/// invocations produce identical bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CreatedBy {
    /// Producing tool.
    pub tool: String,
    /// Tool version.
    pub version: String,
}

impl CreatedBy {
    /// This crate's identity.
    pub fn this_tool() -> Self {
        Self { tool: "spectra".into(), version: env!("CARGO_PKG_VERSION").into() }
    }
}

/// One retained coefficient of a sparse model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseCoefficient {
    /// Bit positions where the frequency is 1.
    pub support: Vec<u16>,
    /// The coefficient value.
    pub value: f64,
    /// Hamming weight of the frequency.
    pub order: usize,
}

/// A persisted model: either a dense probability table or a sparse
/// bandlimited coefficient list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    /// Schema version; checked on load.
    pub format_version: u32,
    /// The group the model lives on.
    pub group: GroupDescriptor,
    /// The filter that produced it.
    pub filter: FilterDescriptor,
    /// Which pipeline produced it: "classical", "quantum" or "sparse".
    pub pipeline: String,
    /// Dense probabilities by packed index, when dense.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dense_probabilities: Option<Vec<f64>>,
    /// Sparse band and coefficients, when sparse.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub band: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sparse_coefficients: Option<Vec<SparseCoefficient>>,
    /// SHA-256 of the training data.
    pub dataset_digest: String,
    /// Producing tool.
    pub created_by: CreatedBy,
}

impl ModelFile {
    /// Wrap a dense smoothed model.
    pub fn from_smoothed(model: &SmoothedModel, pipeline: &str) -> Result<Self> {
        Ok(Self {
            format_version: FORMAT_VERSION,
            group: GroupDescriptor::Boolean { bits: model.bits() },
            filter: FilterDescriptor::from_filter(model.filter())?,
            pipeline: pipeline.into(),
            dense_probabilities: Some(model.distribution().to_vec()),
            band: None,
            sparse_coefficients: None,
            dataset_digest: model.dataset_digest().into(),
            created_by: CreatedBy::this_tool(),
        })
    }

    /// Wrap a dense probability table that did not come from a
    /// [`SmoothedModel`] (the quantum pipeline).
    pub fn from_dense(
        bits: usize,
        filter: FilterDescriptor,
        pipeline: &str,
        probabilities: Vec<f64>,
        dataset_digest: String,
    ) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            group: GroupDescriptor::Boolean { bits },
            filter,
            pipeline: pipeline.into(),
            dense_probabilities: Some(probabilities),
            band: None,
            sparse_coefficients: None,
            dataset_digest,
            created_by: CreatedBy::this_tool(),
        }
    }

    /// Wrap a sparse bandlimited model.
    pub fn from_sparse(model: &SparseModel, filter: FilterDescriptor, dataset_digest: String) -> Self {
        let coefficients = model
            .retained()
            .into_iter()
            .map(|(k, value)| SparseCoefficient {
                support: k
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, _)| i as u16)
                    .collect(),
                value,
                order: k.order_weight(),
            })
            .collect();
        Self {
            format_version: FORMAT_VERSION,
            group: GroupDescriptor::Boolean { bits: model.bits() },
            filter,
            pipeline: "sparse".into(),
            dense_probabilities: None,
            band: Some(model.band()),
            sparse_coefficients: Some(coefficients),
            dataset_digest,
            created_by: CreatedBy::this_tool(),
        }
    }

    /// Parse and version-check a model file.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: format!("model file: {e}"),
        })?;
        if file.format_version != FORMAT_VERSION {
            return Err(Error::Parse {
                line: 0,
                message: format!(
                    "unsupported model format_version {} (expected {FORMAT_VERSION})",
                    file.format_version
                ),
            });
        }
        Ok(file)
    }

    /// Serialise with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("model serialises");
        out.push('\n');
        out
    }

    /// Rebuild the sparse model, when this file holds one.
    pub fn sparse_model(&self) -> Result<Option<SparseModel>> {
        let Some(coefficients) = &self.sparse_coefficients else {
            return Ok(None);
        };
        let GroupDescriptor::Boolean { bits } = self.group else {
            return Err(Error::InvalidModel("sparse models are Boolean".into()));
        };
        let band = self.band.ok_or_else(|| Error::InvalidModel("sparse model lacks band".into()))?;
        let terms = coefficients
            .iter()
            .map(|c| (c.support.clone(), c.value))
            .collect();
        SparseModel::from_terms(bits, band, terms).map(Some)
    }
}

/// Frequency rendering in spectrum files: a bitstring for Boolean groups, an
/// integer coordinate vector otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FrequencyRepr {
    /// '0'/'1' characters, coordinate 0 first.
    Bits(String),
    /// Coordinate vector.
    Coords(Vec<u32>),
}

/// One spectrum record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    /// The frequency.
    pub frequency: FrequencyRepr,
    /// Real part of the coefficient.
    pub re: f64,
    /// Imaginary part of the coefficient.
    pub im: f64,
    /// Number of nonzero coordinates.
    pub order: usize,
}

/// A persisted spectrum, sorted by `(order, frequency)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumFile {
    /// Schema version; checked on load.
    pub format_version: u32,
    /// The underlying group.
    pub group: GroupDescriptor,
    /// The records, sorted by `(order, frequency coordinates)`.
    pub records: Vec<SpectrumRecord>,
}

impl SpectrumFile {
    /// Build from `(frequency, re, im)` triples, sorting canonically.
    pub fn from_entries(group: GroupDescriptor, entries: Vec<(Frequency, f64, f64)>) -> Self {
        let boolean = matches!(group, GroupDescriptor::Boolean { .. });
        let mut keyed: Vec<(usize, Vec<u32>, f64, f64)> = entries
            .into_iter()
            .map(|(k, re, im)| (k.order_weight(), k.coords().to_vec(), re, im))
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let records = keyed
            .into_iter()
            .map(|(order, coords, re, im)| SpectrumRecord {
                frequency: if boolean {
                    FrequencyRepr::Bits(
                        coords.iter().map(|&c| if c == 0 { '0' } else { '1' }).collect(),
                    )
                } else {
                    FrequencyRepr::Coords(coords)
                },
                re,
                im,
                order,
            })
            .collect();
        Self { format_version: FORMAT_VERSION, group, records }
    }

    /// Parse and version-check a spectrum file.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SpectrumFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: format!("spectrum file: {e}"),
        })?;
        if file.format_version != FORMAT_VERSION {
            return Err(Error::Parse {
                line: 0,
                message: format!(
                    "unsupported spectrum format_version {} (expected {FORMAT_VERSION})",
                    file.format_version
                ),
            });
        }
        Ok(file)
    }

    /// Serialise with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("spectrum serialises");
        out.push('\n');
        out
    }
}
