//! Generator sets for T-ideals, bundled or loaded from JSON.
//!
//! File format:
//! `{"name": .., "algebra": .., "mode": .., "generators": [{"label": .., "poly": ..}]}`
//! where `poly` uses the expression syntax of [`crate::parse`], wildcards included.

use serde::{Deserialize, Serialize};

use crate::algebra::{builtin, AlgebraSpec};
use crate::error::{Error, Result};
use crate::free::{Mode, Polynomial};
use crate::parse::Template;

/// One generator: its source expression and the polynomials it expands to.
#[derive(Clone, Debug)]
pub struct Generator {
    pub label: String,
    pub source: String,
    pub instances: Vec<Polynomial>,
}

/// A named list of generators for an algebra in a mode.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub name: String,
    pub algebra: String,
    pub mode: Mode,
    pub generators: Vec<Generator>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorFile {
    name: String,
    algebra: String,
    mode: String,
    generators: Vec<GeneratorEntry>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorEntry {
    label: String,
    poly: String,
}

/// Bundled generator sets by name.
pub const BUNDLED: [(&str, &str); 6] = [
    ("thA1", include_str!("../theorems/thA1.json")),
    ("thA2", include_str!("../theorems/thA2.json")),
    ("thA3", include_str!("../theorems/thA3.json")),
    ("base_star", include_str!("../theorems/base_star.json")),
    ("base_gr_star", include_str!("../theorems/base_gr_star.json")),
    ("ungraded_A", include_str!("../theorems/ungraded_A.json")),
];

impl GeneratorSet {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GeneratorFile = serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        let mode: Mode = file.mode.parse()?;
        let generators = file
            .generators
            .into_iter()
            .map(|g| {
                let instances = Template::parse(&g.poly, mode)?.instances()?;
                Ok(Generator { label: g.label, source: g.poly, instances })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorSet { name: file.name, algebra: file.algebra, mode, generators })
    }

    /// A bundled set; names match case-insensitively.
    pub fn bundled(name: &str) -> Result<Self> {
        BUNDLED
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, text)| GeneratorSet::from_json(text))
            .unwrap_or_else(|| Err(Error::InvalidSpec(format!("no bundled generator set {name:?}"))))
    }

    /// `bundled:NAME` or a path to a JSON file.
    pub fn load(arg: &str) -> Result<Self> {
        match arg.strip_prefix("bundled:") {
            Some(name) => GeneratorSet::bundled(name),
            None => {
                let text = std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("cannot read basis file {arg}: {e}")))?;
                GeneratorSet::from_json(&text)
            }
        }
    }

    /// The algebra the set refers to, when it names a built-in.
    pub fn algebra_spec(&self) -> Result<AlgebraSpec> {
        builtin(&self.algebra)
    }

    /// All expanded generator polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().flat_map(|g| g.instances.iter().cloned()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_sets_load() {
        for (name, _) in BUNDLED {
            let set = GeneratorSet::bundled(name).unwrap();
            assert!(!set.generators.is_empty());
            assert!(set.generators.iter().all(|g| !g.instances.is_empty()), "{name}");
            assert_eq!(set.algebra_spec().unwrap().mode(), set.mode, "{name}");
        }
        assert!(GeneratorSet::load("bundled:THA1").is_ok());
        assert!(GeneratorSet::load("bundled:nope").is_err());
    }

    #[test]
    fn wildcards_expand() {
        let set = GeneratorSet::bundled("base_star").unwrap();
        // [x1,x2] z5 [x3,x4] over x ∈ {y, z}
        assert_eq!(set.generators[6].instances.len(), 16);
        let gi = GeneratorSet::bundled("base_gr_star").unwrap();
        assert_eq!(gi.generators[7].instances.len(), 8);
    }
}
