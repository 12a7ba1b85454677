//! JSON files describing frames and operator lists.
//!
//! A frame file:
//!
//! ```json
//! {
//!   "variables": ["x", "y"],
//!   "divisor": "x^2 - y^3",
//!   "anchor": [["3*x", "2*y"], ["-3*y^2", "-2*x"]],
//!   "structure_constants": [{"i": 1, "j": 2, "c": ["0", "0"]}],
//!   "sub_basis": [1]
//! }
//! ```
//!
//! `divisor`, `structure_constants` and `sub_basis` are optional; indices are
//! 1-based. With a divisor the rows must pass the Saito test, and supplied
//! structure constants must agree with the ones computed from the anchor.
//! Without one, the anchor and brackets define an abstract Lie–Rinehart
//! algebra, checked for closure and the Jacobi identity.
//!
//! An operators file: `{"variables": [...], "operators": ["x*dx + 1", ...]}`.

use serde::{Deserialize, Serialize};

use crate::envelope::LieRinehart;
use crate::error::{Error, Result};
use crate::logderiv::{Divisor, LogFrame, SaitoMode};
use crate::parse::parse_operator;
use crate::poly::{PolyRing, PolyVec};
use crate::weyl::WeylOp;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub c: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<String>,
    pub anchor: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_constants: Option<Vec<BracketEntry>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sub_basis: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorsFile {
    pub variables: Vec<String>,
    pub operators: Vec<String>,
}

/// A validated frame file.
#[derive(Clone, Debug)]
pub struct LoadedFrame {
    pub ring: PolyRing,
    pub frame: Option<LogFrame>,
    pub algebra: LieRinehart,
}

impl LoadedFrame {
    /// The logarithmic frame, required by divisor-dependent commands.
    pub fn log_frame(&self) -> Result<&LogFrame> {
        self.frame.as_ref().ok_or_else(|| Error::InvalidFrame("the frame file has no divisor".into()))
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::InvalidFrame(format!("malformed JSON: {e}"))
}

fn one_based(i: usize, t: usize, what: &str) -> Result<usize> {
    if i == 0 || i > t {
        return Err(Error::InvalidFrame(format!("{what} index {i} outside 1..{t}")));
    }
    Ok(i - 1)
}

impl FrameFile {
    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(json_error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("frame files serialize")
    }

    /// The file describing a logarithmic frame, with computed brackets.
    pub fn from_frame(ring: &PolyRing, frame: &LogFrame) -> Self {
        let n = frame.n();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = frame.structure_constants(i, j);
                if c.iter().any(|p| !p.is_zero()) {
                    brackets.push(BracketEntry { i: i + 1, j: j + 1, c: c.iter().map(|p| ring.format(p)).collect() });
                }
            }
        }
        FrameFile {
            variables: ring.names().to_vec(),
            divisor: Some(ring.format(frame.divisor().h())),
            anchor: frame.rows().iter().map(|r| r.coeffs.iter().map(|p| ring.format(p)).collect()).collect(),
            structure_constants: Some(brackets),
            sub_basis: Vec::new(),
        }
    }

    pub fn load(&self, mode: SaitoMode) -> Result<LoadedFrame> {
        if self.variables.is_empty() {
            return Err(Error::InvalidFrame("no variables".into()));
        }
        let ring = PolyRing::new(self.variables.iter().cloned());
        let anchor: Vec<PolyVec> =
            self.anchor.iter().map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<_>>()).collect::<Result<_>>()?;
        let t = anchor.len();
        let sub_basis = self.sub_basis.iter().map(|&i| one_based(i, t, "sub-basis")).collect::<Result<Vec<_>>>()?;
        let upper = match &self.structure_constants {
            None => None,
            Some(entries) => Some(
                entries
                    .iter()
                    .map(|e| {
                        let c = e.c.iter().map(|s| ring.parse(s)).collect::<Result<PolyVec>>()?;
                        Ok((one_based(e.i, t, "bracket")?, one_based(e.j, t, "bracket")?, c))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let (frame, algebra) = match &self.divisor {
            Some(h) => {
                let d = Divisor::new(ring.parse(h)?)?;
                let frame = LogFrame::new(d, anchor.clone(), mode)?;
                let algebra = LieRinehart::from_frame_with_sub_basis(&frame, sub_basis.clone())?;
                if let Some(upper) = &upper {
                    let stated = LieRinehart::new(anchor, upper, sub_basis)?;
                    if (0..t).any(|i| (i + 1..t).any(|j| stated.structure_constants(i, j) != algebra.structure_constants(i, j))) {
                        return Err(Error::InvalidFrame("stated structure constants disagree with the anchor".into()));
                    }
                }
                (Some(frame), algebra)
            }
            None => {
                let algebra = match &upper {
                    Some(upper) => LieRinehart::new(anchor, upper, sub_basis)?,
                    None => LieRinehart::from_anchor(anchor, sub_basis)?,
                };
                (None, algebra)
            }
        };
        Ok(LoadedFrame { ring, frame, algebra })
    }
}

impl OperatorsFile {
    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(json_error)
    }

    /// Operators over the frame's ring; the variable lists must agree.
    pub fn operators(&self, ring: &PolyRing) -> Result<Vec<WeylOp>> {
        if self.variables != ring.names() {
            return Err(Error::AmbientMismatch { left: ring.names().len(), right: self.variables.len() });
        }
        self.operators.iter().map(|s| Ok(parse_operator(s, ring.names())?)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cusp_file_loads() {
        let src = r#"{"variables": ["x", "y"], "divisor": "x^2 - y^3",
                      "anchor": [["3*x", "2*y"], ["-3*y^2", "-2*x"]]}"#;
        let loaded = FrameFile::from_json(src).unwrap().load(SaitoMode::Global).unwrap();
        let frame = loaded.log_frame().unwrap();
        assert_eq!(frame.certificate().constant(), Some(crate::poly::int(-6)));
        assert_eq!(loaded.algebra.rank(), 2);
    }

    #[test]
    fn round_trip_of_catalog_frame() {
        let ring = PolyRing::standard(3);
        let file = FrameFile::from_frame(&ring, &catalog::non_spencer());
        let again = FrameFile::from_json(&file.to_json()).unwrap();
        assert_eq!(file, again);
        let loaded = again.load(SaitoMode::Global).unwrap();
        assert_eq!(loaded.log_frame().unwrap().alphas(), catalog::non_spencer().alphas());
    }

    #[test]
    fn wrong_brackets_are_rejected() {
        let src = r#"{"variables": ["x", "y"], "divisor": "x*y", "anchor": [["x", "0"], ["0", "y"]],
                      "structure_constants": [{"i": 1, "j": 2, "c": ["0", "1"]}]}"#;
        assert!(matches!(FrameFile::from_json(src).unwrap().load(SaitoMode::Global), Err(Error::InvalidFrame(_))));
    }

    #[test]
    fn abstract_algebra_without_divisor() {
        // [∂x, x∂y] = ∂y leaves the span.
        let src = r#"{"variables": ["x", "y"], "anchor": [["1", "0"], ["0", "x"]]}"#;
        assert!(FrameFile::from_json(src).unwrap().load(SaitoMode::Global).is_err());
        let src = r#"{"variables": ["x"], "anchor": [["1"]], "sub_basis": [1]}"#;
        let loaded = FrameFile::from_json(src).unwrap().load(SaitoMode::Global).unwrap();
        assert!(loaded.frame.is_none());
        assert_eq!(loaded.algebra.sub_basis(), &[0]);
    }

    #[test]
    fn malformed_input() {
        assert!(FrameFile::from_json("{").is_err());
        assert!(FrameFile::from_json(r#"{"variables": [], "anchor": [], "extra": 1}"#).is_err());
        let ops = OperatorsFile::from_json(r#"{"variables": ["x", "y"], "operators": ["dx"]}"#).unwrap();
        assert!(ops.operators(&PolyRing::standard(3)).is_err());
        assert_eq!(ops.operators(&PolyRing::standard(2)).unwrap(), vec![WeylOp::partial(2, 0)]);
    }
}
