//! The on-disk workspace format and its resolution into library objects.

use std::collections::BTreeMap;
use std::path::Path;

use dct_core::algebra::{BoundQuiverAlgebra, Limits, Quiver, RelationElement};
use dct_core::approx::AddCategory;
use dct_core::dexact::DSequence;
use dct_core::exactlin::{Field, Matrix};
use dct_core::repcat::{self, Module, Morphism};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A workspace file exactly as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub field: u64,
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub relations: Vec<Vec<Term>>,
    pub nilpotency_bound: usize,
    pub d: usize,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub categories: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sequences: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// One summand `coeff · path` of a relation; the path lists arrows in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: i64,
    pub path: Vec<String>,
}

/// A representation: dimension per vertex and a matrix per arrow.
///
/// The matrix of `a: i → j` has `dims[j]` rows and `dims[i]` columns.
/// Arrows left out act as zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dims: Vec<usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
}

/// A module map given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub source: String,
    pub target: String,
    pub components: Vec<Vec<Vec<i64>>>,
}

impl WorkspaceFile {
    pub fn from_json(text: &str) -> Result<WorkspaceFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<WorkspaceFile, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        WorkspaceFile::from_json(&text)
    }

    /// Sorted keys, two-space indentation, trailing newline.
    pub fn canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("workspace serializes");
        s.push('\n');
        s
    }
}

/// Command-line overrides applied on top of the file.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub d: Option<usize>,
    pub field: Option<u64>,
    pub cap: Option<u64>,
}

/// A resolved workspace: the algebra plus every named object built and checked.
pub struct Workspace {
    pub file: WorkspaceFile,
    pub algebra: BoundQuiverAlgebra,
    pub d: usize,
    modules: BTreeMap<String, Module>,
    /// Indecomposable named modules in naming priority order.
    labels: Vec<(String, Module)>,
    morphisms: BTreeMap<String, Morphism>,
    sequences: BTreeMap<String, DSequence>,
    categories: BTreeMap<String, AddCategory>,
}

fn matrix(field: Field, rows: usize, cols: usize, data: &[Vec<i64>], what: &str) -> Result<Matrix, CliError> {
    let empty = data.is_empty() || data.iter().all(|r| r.is_empty());
    if (rows == 0 || cols == 0) && empty {
        return Ok(Matrix::zeros(field, rows, cols));
    }
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(CliError::Input(format!("{what} must be a {rows}x{cols} matrix")));
    }
    Ok(Matrix::from_rows(field, data)?)
}

impl Workspace {
    pub fn build(file: WorkspaceFile, ov: Overrides) -> Result<Workspace, CliError> {
        let field = Field::new(ov.field.unwrap_or(file.field))?;
        let d = ov.d.unwrap_or(file.d);
        if d == 0 {
            return Err(CliError::Input("d must be at least 1".into()));
        }
        let arrows: Vec<(String, String, String)> =
            file.quiver.arrows.iter().map(|a| (a.name.clone(), a.source.clone(), a.target.clone())).collect();
        let quiver = Quiver::new(&file.quiver.vertices, &arrows)?;
        let relations = file
            .relations
            .iter()
            .map(|r| RelationElement::new(r.iter().map(|t| (t.coeff, t.path.clone())).collect()))
            .collect();
        let mut algebra = BoundQuiverAlgebra::new(field, quiver, relations, file.nilpotency_bound)?;
        if let Some(cap) = ov.cap {
            algebra = algebra.with_limits(Limits { search_cap: cap, ..algebra.limits() });
        }

        let mut modules = BTreeMap::new();
        for (name, spec) in &file.modules {
            modules.insert(name.clone(), build_module(&algebra, name, spec)?);
        }
        let mut labels = Vec::new();
        for (name, m) in &modules {
            if repcat::is_indecomposable(m)? {
                labels.push((name.clone(), m.clone()));
            }
        }
        for (prefix, make) in [
            ("S", Module::simple as fn(&BoundQuiverAlgebra, usize) -> Module),
            ("P", Module::projective),
            ("I", Module::injective),
        ] {
            for (v, label) in file.quiver.vertices.iter().enumerate() {
                let name = format!("{prefix}{label}");
                if modules.contains_key(&name) {
                    continue;
                }
                let m = make(&algebra, v);
                modules.insert(name.clone(), m.clone());
                labels.push((name, m));
            }
        }

        let mut morphisms = BTreeMap::new();
        for (name, spec) in &file.morphisms {
            let x = lookup(&modules, &spec.source)?;
            let y = lookup(&modules, &spec.target)?;
            if spec.components.len() != algebra.num_vertices() {
                return Err(CliError::Input(format!("morphism {name} needs one component per vertex")));
            }
            let comps = spec
                .components
                .iter()
                .enumerate()
                .map(|(v, c)| matrix(field, y.dim_at(v), x.dim_at(v), c, &format!("component {v} of {name}")))
                .collect::<Result<Vec<_>, _>>()?;
            morphisms.insert(name.clone(), Morphism::new(x, y, comps)?);
        }

        let mut sequences = BTreeMap::new();
        for (name, maps) in &file.sequences {
            let ms = maps
                .iter()
                .map(|m| morphisms.get(m).cloned().ok_or_else(|| CliError::Input(format!("unknown morphism {m}"))))
                .collect::<Result<Vec<_>, _>>()?;
            sequences.insert(name.clone(), DSequence::new(ms)?);
        }

        let mut categories = BTreeMap::new();
        for (name, members) in &file.categories {
            let gens = members.iter().map(|m| lookup(&modules, m).cloned()).collect::<Result<Vec<_>, _>>()?;
            categories.insert(name.clone(), AddCategory::new(&algebra, gens)?);
        }

        Ok(Workspace { file, algebra, d, modules, labels, morphisms, sequences, categories })
    }

    pub fn module(&self, name: &str) -> Result<&Module, CliError> {
        lookup(&self.modules, name)
    }

    pub fn morphism(&self, name: &str) -> Result<&Morphism, CliError> {
        self.morphisms.get(name).ok_or_else(|| CliError::Input(format!("unknown morphism {name}")))
    }

    pub fn sequence(&self, name: &str) -> Result<&DSequence, CliError> {
        self.sequences.get(name).ok_or_else(|| CliError::Input(format!("unknown sequence {name}")))
    }

    pub fn sequences(&self) -> &BTreeMap<String, DSequence> {
        &self.sequences
    }

    pub fn category(&self, name: &str) -> Result<&AddCategory, CliError> {
        self.categories.get(name).ok_or_else(|| CliError::Input(format!("unknown category {name}")))
    }

    pub fn category_members(&self, name: &str) -> &[String] {
        &self.file.categories[name]
    }

    /// Named indecomposables, declared modules first, then `S`, `P`, `I` by vertex.
    pub fn labels(&self) -> &[(String, Module)] {
        &self.labels
    }
}

fn lookup<'a>(modules: &'a BTreeMap<String, Module>, name: &str) -> Result<&'a Module, CliError> {
    modules.get(name).ok_or_else(|| CliError::Input(format!("unknown module {name}")))
}

fn build_module(alg: &BoundQuiverAlgebra, name: &str, spec: &ModuleSpec) -> Result<Module, CliError> {
    let q = alg.quiver();
    if spec.dims.len() != q.num_vertices() {
        return Err(CliError::Input(format!("module {name} needs one dimension per vertex")));
    }
    if let Some(bad) = spec.maps.keys().find(|a| q.arrow_index(a).is_none()) {
        return Err(CliError::Input(format!("module {name} has a matrix for unknown arrow {bad}")));
    }
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (spec.dims[a.target], spec.dims[a.source]);
            match spec.maps.get(&a.name) {
                Some(m) => matrix(alg.field(), r, c, m, &format!("arrow {} of {name}", a.name)),
                None => Ok(Matrix::zeros(alg.field(), r, c)),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Module::new(alg, spec.dims.clone(), maps)?)
}
