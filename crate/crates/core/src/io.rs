//! JSON files for curves and float formatting shared by the writers.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgScalar, Poly};
use crate::error::{Error, Result};
use crate::g2::Vec7;
use crate::twistor::CurveC7;

/// On-disk form of a curve in the standard basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveFile {
    pub k: Option<[u32; 2]>,
    pub basis: String,
    pub components: Vec<Poly<AlgScalar>>,
}

impl CurveFile {
    pub fn new(k: Option<[u32; 2]>, curve: &CurveC7) -> Self {
        CurveFile { k, basis: "e".into(), components: curve.0.to_vec() }
    }

    pub fn curve(&self) -> Result<CurveC7> {
        if self.basis != "e" {
            return Err(Error::Parse(format!("unsupported basis {:?}", self.basis)));
        }
        let comps: [Poly<AlgScalar>; 7] = self
            .components
            .clone()
            .try_into()
            .map_err(|v: Vec<_>| Error::Parse(format!("expected 7 components, found {}", v.len())))?;
        Ok(Vec7(comps))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn write_curve(path: &Path, k: Option<[u32; 2]>, curve: &CurveC7) -> Result<()> {
    fs::write(path, CurveFile::new(k, curve).to_json()?)?;
    Ok(())
}

pub fn read_curve(path: &Path) -> Result<CurveFile> {
    let text = fs::read_to_string(path)?;
    CurveFile::from_json(&text)
}

/// `x` with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::example_family;

    #[test]
    fn round_trip() {
        let f = example_family(1, 2).unwrap();
        let file = CurveFile::new(Some([1, 2]), &f);
        let text = file.to_json().unwrap();
        let back = CurveFile::from_json(&text).unwrap();
        assert_eq!(back.curve().unwrap(), f);
        assert_eq!(back.to_json().unwrap(), text);
    }

    #[test]
    fn wrong_component_count() {
        let text = r#"{"k":null,"basis":"e","components":[]}"#;
        assert!(matches!(CurveFile::from_json(text).unwrap().curve(), Err(Error::Parse(_))));
    }

    #[test]
    fn float_digits() {
        assert_eq!(fmt_f64(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_f64(0.1).parse::<f64>().unwrap(), 0.1);
    }
}
