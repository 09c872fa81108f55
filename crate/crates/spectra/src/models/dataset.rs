//! Bitstring training sets and their text format.

use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::group::GroupElement;
use crate::Result;

/// A multiset of fixed-length bitstring samples.
///
/// Duplicates are kept: the empirical measure weights each sample by its
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    bits: usize,
    samples: Vec<GroupElement>,
}

impl Dataset {
    /// Wrap samples of `bits` coordinates each; the set must be nonempty.
    pub fn new(bits: usize, samples: Vec<GroupElement>) -> Result<Self> {
        if bits == 0 {
            return Err(Error::InvalidArgument("samples need at least 1 bit".into()));
        }
        if samples.is_empty() {
            return Err(Error::EmptyDataset);
        }
        for s in &samples {
            if s.len() != bits {
                return Err(Error::DimensionMismatch { expected: bits, got: s.len() });
            }
            if s.coords().iter().any(|&c| c > 1) {
                return Err(Error::InvalidArgument("samples must be binary".into()));
            }
        }
        Ok(Self { bits, samples })
    }

    /// Convenience constructor from '0'/'1' strings.
    pub fn from_bit_strs(samples: &[&str]) -> Result<Self> {
        let parsed = samples
            .iter()
            .map(|s| GroupElement::from_bit_str(s))
            .collect::<Result<Vec<_>>>()?;
        let bits = parsed.first().map(|e| e.len()).ok_or(Error::EmptyDataset)?;
        Self::new(bits, parsed)
    }

    /// Parse the shared text format: one sample per line, characters '0'/'1'
    /// with no separators, lines starting with '#' ignored, blank lines
    /// skipped. Accepts raw bytes so malformed input fails cleanly with a
    /// line number instead of a UTF-8 error.
    pub fn parse_bytes(data: &[u8]) -> Result<Self> {
        let mut samples = Vec::new();
        let mut bits = None;
        for (line_no, raw_line) in data.split(|&b| b == b'\n').enumerate() {
            let line = match raw_line.last() {
                Some(b'\r') => &raw_line[..raw_line.len() - 1],
                _ => raw_line,
            };
            if line.is_empty() || line[0] == b'#' {
                continue;
            }
            let mut coords = Vec::with_capacity(line.len());
            for &byte in line {
                match byte {
                    b'0' => coords.push(0u32),
                    b'1' => coords.push(1u32),
                    other => {
                        return Err(Error::Parse {
                            line: line_no + 1,
                            message: format!("invalid character 0x{other:02x}, expected '0' or '1'"),
                        })
                    }
                }
            }
            match bits {
                None => bits = Some(coords.len()),
                Some(n) if n != coords.len() => {
                    return Err(Error::Parse {
                        line: line_no + 1,
                        message: format!("sample has {} bits, expected {n}", coords.len()),
                    })
                }
                _ => {}
            }
            samples.push(GroupElement::from_coords(coords));
        }
        match bits {
            Some(n) => Self::new(n, samples),
            None => Err(Error::Parse { line: 0, message: "no samples found".into() }),
        }
    }

    /// Parse the text format from a string.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_bytes(text.as_bytes())
    }

    /// Bits per sample.
    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Number of samples, counting multiplicity.
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    /// Datasets are never empty.
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// The samples in input order.
    pub fn samples(&self) -> &[GroupElement] {
        &self.samples
    }

    /// Sorted, deduplicated samples.
    pub fn unique(&self) -> Vec<GroupElement> {
        let mut out = self.samples.clone();
        out.sort();
        out.dedup();
        out
    }

    /// SHA-256 digest of the canonical text rendering, for model provenance.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for s in &self.samples {
            hasher.update(s.bit_string().as_bytes());
            hasher.update(b"\n");
        }
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Canonical text rendering (one bitstring per line).
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.samples.len() * (self.bits + 1));
        for s in &self.samples {
            out.push_str(&s.bit_string());
            out.push('\n');
        }
        out
    }
}
