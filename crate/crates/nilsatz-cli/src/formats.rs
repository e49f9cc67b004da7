//! JSON file formats: Lie algebras by structure constants, morphisms by
//! Weyl-expression images, characters, and Heisenberg ideal descriptions.
//! Indices are 1-based in files, rationals are `"p/q"` strings.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use nilsatz::expr::{parse_weyl, parse_xy};
use nilsatz::heisenberg::{HeisenbergIdeal, Variety};
use nilsatz::lie::TwoStepLieAlgebra;
use nilsatz::morphism::{Character, FilteredMorphism};
use nilsatz::subset::Subset;

pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|e| anyhow::anyhow!("bad rational '{s}': {e}"))
}

/// `{"beta": 2, "gamma": 1, "brackets": [{"j": 1, "k": 2, "c": ["1"]}]}`
/// with `c` holding the `C`-coefficients of `[B_j, B_k]`; omitted pairs
/// have zero bracket and the antisymmetric counterpart is filled in.
#[derive(Debug, Serialize, Deserialize)]
pub struct LieAlgFile {
    pub beta: usize,
    pub gamma: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub j: usize,
    pub k: usize,
    pub c: Vec<String>,
}

pub fn load_algebra(path: &Path) -> Result<Arc<TwoStepLieAlgebra>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: LieAlgFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    algebra_from_file(&file)
}

pub fn algebra_from_file(file: &LieAlgFile) -> Result<Arc<TwoStepLieAlgebra>> {
    // The poset machinery is exponential in beta; keep file inputs sane.
    if file.beta > 16 || file.gamma > 64 {
        bail!(
            "algebra too large (beta = {}, gamma = {}); supported: beta <= 16, gamma <= 64",
            file.beta,
            file.gamma
        );
    }
    let mut entries = Vec::new();
    for b in &file.brackets {
        if b.j == 0 || b.k == 0 {
            bail!("bracket indices are 1-based; found 0");
        }
        let coeffs = b
            .c
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        entries.push((b.j - 1, b.k - 1, coeffs));
    }
    TwoStepLieAlgebra::from_bracket_list(file.beta, file.gamma, &entries)
        .map_err(|e| anyhow::anyhow!("{e}"))
}

/// `{"d": 1, "images": ["i*P1", "-2*i*Q1", "-2*i"]}` with one Weyl
/// expression per basis element `B_1.., C_1..`.
#[derive(Debug, Serialize, Deserialize)]
pub struct MorphismFile {
    pub d: usize,
    pub images: Vec<String>,
}

pub fn load_morphism(path: &Path, alg: &Arc<TwoStepLieAlgebra>) -> Result<FilteredMorphism> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: MorphismFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    let images = file
        .images
        .iter()
        .map(|s| parse_weyl(file.d, s).map_err(|e| anyhow::anyhow!("image '{s}': {e}")))
        .collect::<Result<Vec<_>>>()?;
    FilteredMorphism::new(alg, file.d, images).map_err(|e| anyhow::anyhow!("{e}"))
}

pub fn morphism_to_file(phi: &FilteredMorphism) -> MorphismFile {
    MorphismFile {
        d: phi.weyl_dim(),
        images: phi.images().iter().map(|w| w.to_string()).collect(),
    }
}

/// `{"K": [2, 3], "valE": {"1": "0"}, "valC": ["1", "0", "0"]}` — the
/// values of the character on `i*E_{K,m}` and `i*C_j`.
#[derive(Debug, Serialize, Deserialize)]
pub struct CharacterFile {
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    #[serde(rename = "valE", default)]
    pub val_e: BTreeMap<String, String>,
    #[serde(rename = "valC")]
    pub val_c: Vec<String>,
}

pub fn load_character(path: &Path, alg: &Arc<TwoStepLieAlgebra>) -> Result<Character> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: CharacterFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    if file.k.contains(&0) {
        bail!("subset indices are 1-based; found 0");
    }
    let k = Subset::new(file.k.iter().map(|&i| i - 1).collect());
    let mut val_e = BTreeMap::new();
    for (key, value) in &file.val_e {
        let idx: usize = key
            .parse()
            .with_context(|| format!("valE key '{key}' is not an index"))?;
        if idx == 0 {
            bail!("valE indices are 1-based; found 0");
        }
        val_e.insert(idx - 1, parse_rational(value)?);
    }
    let val_c = file
        .val_c
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    Character::new(alg, k, val_e, val_c).map_err(|e| anyhow::anyhow!("{e}"))
}

/// Heisenberg ideal description:
/// `{"lambda_x": ["2"], "variety": {"type": "points", "points": [["0","0"]]}}`
/// or `{"lambda_x": [], "variety": {"type": "zero-set", "gens": ["X"],
/// "declared_real": true}}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct HeisenbergDescFile {
    pub lambda_x: Vec<String>,
    pub variety: VarietyFile,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum VarietyFile {
    Points { points: Vec<(String, String)> },
    ZeroSet { gens: Vec<String>, declared_real: bool },
}

pub fn load_heisenberg_desc(path: &Path) -> Result<HeisenbergIdeal> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: HeisenbergDescFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    let lambda_x = file
        .lambda_x
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    let variety = match &file.variety {
        VarietyFile::Points { points } => Variety::Points(
            points
                .iter()
                .map(|(x, y)| Ok((parse_rational(x)?, parse_rational(y)?)))
                .collect::<Result<Vec<_>>>()?,
        ),
        VarietyFile::ZeroSet { gens, declared_real } => Variety::ZeroSet {
            gens: gens
                .iter()
                .map(|s| parse_xy(s).map_err(|e| anyhow::anyhow!("generator '{s}': {e}")))
                .collect::<Result<Vec<_>>>()?,
            declared_real: *declared_real,
        },
    };
    HeisenbergIdeal::new(lambda_x, variety).map_err(|e| anyhow::anyhow!("{e}"))
}

/// Parses a 1-based index set like `1,2` or `{1,3}`; the empty string is
/// the empty set.
pub fn parse_subset(text: &str) -> Result<Subset> {
    let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if trimmed.is_empty() {
        return Ok(Subset::empty());
    }
    let mut items = Vec::new();
    for part in trimmed.split(',') {
        let idx: usize = part
            .trim()
            .parse()
            .with_context(|| format!("bad index '{part}'"))?;
        if idx == 0 {
            bail!("subset indices are 1-based; found 0");
        }
        items.push(idx - 1);
    }
    Ok(Subset::new(items))
}

pub fn subset_to_json(k: &Subset) -> Vec<usize> {
    k.members().iter().map(|&i| i + 1).collect()
}
