//! The JSON lattice file: covers plus optional names, labels and `ω`.

use std::fs;
use std::path::Path;

use lattix::admissibility::NaturalLabeling;
use lattix::shelling::{format_label, parse_label, EdgeLabeling};
use lattix::{Elem, Lattice};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub n: usize,
    pub covers: Vec<(Elem, Elem)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    /// `[a, b, "p/q"]` per cover.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<(Elem, Elem, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<(Elem, u32)>>,
}

/// A parsed and validated file.
pub struct Loaded {
    pub file: LatticeFile,
    pub lattice: Lattice,
}

impl LatticeFile {
    pub fn from_lattice(lattice: &Lattice) -> Self {
        LatticeFile { n: lattice.len(), covers: lattice.covers().to_vec(), ..Default::default() }
    }

    pub fn with_labels(mut self, labels: &EdgeLabeling) -> Self {
        self.labels = Some(labels.iter().map(|((a, b), v)| (a, b, format_label(&v))).collect());
        self
    }

    pub fn load(path: &Path) -> Result<Loaded, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Loaded, String> {
        let file: LatticeFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if let Some(names) = &file.names {
            if names.len() != file.n {
                return Err(format!("{} names for {} elements", names.len(), file.n));
            }
        }
        let lattice = Lattice::new(file.n, &file.covers).map_err(|e| e.to_string())?;
        if let Some(labels) = &file.labels {
            for (_, _, text) in labels {
                parse_label(text)?;
            }
        }
        Ok(Loaded { file, lattice })
    }

    pub fn edge_labeling(&self) -> Option<Result<EdgeLabeling, String>> {
        let labels = self.labels.as_ref()?;
        Some(labels.iter().map(|(a, b, text)| Ok(((*a, *b), parse_label(text)?))).collect())
    }

    pub fn natural_labeling(&self, lattice: &Lattice) -> Option<Result<NaturalLabeling, String>> {
        let omega = self.omega.as_ref()?;
        Some(NaturalLabeling::new(lattice, omega).map_err(|e| e.to_string()))
    }

    #[cfg(test)]
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("file serializes")
    }
}

/// Parses `"1=1,2=1,3=2"`.
pub fn parse_omega(text: &str) -> Result<Vec<(Elem, u32)>, String> {
    text.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let (z, k) = part
                .split_once('=')
                .ok_or_else(|| format!("expected element=value, got {part:?}"))?;
            let z = z.trim().parse().map_err(|_| format!("bad element in {part:?}"))?;
            let k = k.trim().parse().map_err(|_| format!("bad value in {part:?}"))?;
            Ok((z, k))
        })
        .collect()
}
