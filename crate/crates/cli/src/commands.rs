//! One function per subcommand, each producing a JSON report.

use dct_core::approx::{self, AddCategory};
use dct_core::artheory::{self, EndSubmodule};
use dct_core::dexact::{self, DSequence};
use dct_core::exactlin::Matrix;
use dct_core::homological;
use dct_core::repcat::{self, Module, Morphism};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dot::{self, Edge, Node};
use crate::error::CliError;
use crate::naming::name_of;
use crate::workspace::Workspace;

/// A command's JSON report and whether it records a failed check.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub finding: bool,
    pub dot: Option<String>,
}

impl Outcome {
    fn ok(report: Value) -> Outcome {
        Outcome { report, finding: false, dot: None }
    }

    fn verdict(report: Value, holds: bool) -> Outcome {
        Outcome { report, finding: !holds, dot: None }
    }

    fn with_dot(mut self, dot: String) -> Outcome {
        self.dot = Some(dot);
        self
    }
}

type Res = Result<Outcome, CliError>;

fn matrix_json(m: &Matrix) -> Value {
    json!((0..m.rows()).map(|i| m.row(i).to_vec()).collect::<Vec<_>>())
}

fn morphism_json(f: &Morphism) -> Value {
    json!(f.components().iter().map(matrix_json).collect::<Vec<_>>())
}

fn name(ws: &Workspace, x: &Module) -> Result<String, CliError> {
    name_of(ws.labels(), x)
}

fn module_json(ws: &Workspace, x: &Module) -> Result<Value, CliError> {
    Ok(json!({ "name": name(ws, x)?, "dims": x.dims() }))
}

fn sequence_json(ws: &Workspace, s: &DSequence) -> Result<Value, CliError> {
    let terms = s.terms().iter().map(|t| name(ws, t)).collect::<Result<Vec<_>, _>>()?;
    let dims: Vec<Vec<usize>> = s.terms().iter().map(|t| t.dims().to_vec()).collect();
    let maps = s.maps().iter().map(|f| dot::map_status(f)).collect::<Result<Vec<_>, _>>()?;
    Ok(json!({ "terms": terms, "dims": dims, "maps": maps }))
}

fn sequence_dot(ws: &Workspace, title: &str, s: &DSequence) -> Result<String, CliError> {
    let (nodes, edges) = dot::sequence_graph(ws.labels(), s)?;
    Ok(dot::render(title, &nodes, &edges))
}

/// Largest total dimension of an indecomposable projective or injective.
pub fn default_bound(ws: &Workspace) -> usize {
    let n = ws.algebra.num_vertices();
    (0..n)
        .flat_map(|v| [Module::projective(&ws.algebra, v).dim(), Module::injective(&ws.algebra, v).dim()])
        .max()
        .unwrap_or(0)
}

pub fn check_algebra(ws: &Workspace) -> Res {
    let alg = &ws.algebra;
    Ok(Outcome::ok(json!({
        "admissible": true,
        "field": alg.field().p(),
        "vertices": alg.quiver().vertices(),
        "arrows": alg.quiver().arrows().iter().map(|a| a.name.clone()).collect::<Vec<_>>(),
        "nilpotency_bound": alg.nilpotency_bound(),
        "dim": alg.dim(),
        "path_basis": alg.basis_labels(),
    })))
}

pub fn hom(ws: &Workspace, source: &str, target: &str) -> Res {
    let (x, y) = (ws.module(source)?, ws.module(target)?);
    let space = repcat::HomSpace::new(x, y);
    Ok(Outcome::ok(json!({
        "source": source,
        "target": target,
        "dim": space.dim(),
        "stable_dim": homological::stable_hom(x, y).dim(),
        "costable_dim": homological::costable_hom(x, y).dim(),
        "basis": space.basis().iter().map(morphism_json).collect::<Vec<_>>(),
    })))
}

pub fn ext(ws: &Workspace, source: &str, target: &str, degree: Option<usize>) -> Res {
    let (x, y) = (ws.module(source)?, ws.module(target)?);
    let degrees: Vec<usize> = match degree {
        Some(i) => vec![i],
        None => (0..=ws.d).collect(),
    };
    let rows: Vec<Value> =
        degrees.iter().map(|&i| json!({ "degree": i, "dim": homological::ext_dim(i, x, y) })).collect();
    Ok(Outcome::ok(json!({ "source": source, "target": target, "ext": rows })))
}

pub fn resolve(ws: &Workspace, module: &str, length: Option<usize>) -> Res {
    let x = ws.module(module)?;
    let n = length.unwrap_or(ws.algebra.limits().resolution_cap);
    let res = homological::min_proj_resolution(x, n);
    let labels = &ws.file.quiver.vertices;
    let terms = res
        .terms
        .iter()
        .zip(&res.vertices)
        .enumerate()
        .map(|(i, (t, vs))| {
            Ok(json!({
                "degree": i,
                "module": name(ws, &t.module)?,
                "projectives": vs.iter().map(|&v| format!("P{}", labels[v])).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Outcome::ok(json!({
        "module": module,
        "complete": res.is_complete(),
        "length": res.length(),
        "terms": terms,
    })))
}

pub fn tau_d(ws: &Workspace, module: &str) -> Res {
    let x = ws.module(module)?;
    let d = ws.d;
    let (tau, tau_minus, tr) = (homological::tau_d(x, d), homological::tau_d_minus(x, d), homological::tr_d(x, d));
    Ok(Outcome::ok(json!({
        "module": module,
        "d": d,
        "tau_d": module_json(ws, &tau)?,
        "tau_d_minus": module_json(ws, &tau_minus)?,
        "tr_d": { "dims": tr.dims() },
    })))
}

pub fn decompose(ws: &Workspace, module: &str) -> Res {
    let x = ws.module(module)?;
    let mut parts = Vec::new();
    for (m, k) in repcat::decompose(x)? {
        parts.push(json!({ "name": name(ws, &m)?, "dims": m.dims(), "multiplicity": k }));
    }
    parts.sort_by_key(|p| p["name"].as_str().unwrap_or_default().to_string());
    Ok(Outcome::ok(json!({
        "module": module,
        "indecomposable": parts.len() == 1 && parts[0]["multiplicity"] == 1,
        "summands": parts,
    })))
}

pub fn enumerate(ws: &Workspace, bound: Option<usize>) -> Res {
    let bound = bound.unwrap_or_else(|| default_bound(ws));
    let found = artheory::enumerate_indecomposables(&ws.algebra, bound)?;
    let classes = found.iter().map(|m| module_json(ws, m)).collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::ok(json!({ "bound": bound, "count": found.len(), "classes": classes })))
}

pub fn d_rigid(ws: &Workspace, category: &str) -> Res {
    let c = ws.category(category)?;
    let r = artheory::d_rigidity(c, ws.d);
    let witness = r.witness.map(|(i, a, b)| {
        let names = ws.category_members(category);
        json!({ "degree": i, "source": names[a], "target": names[b] })
    });
    Ok(Outcome::verdict(
        json!({
            "category": category,
            "generators": ws.category_members(category),
            "d": r.d,
            "rigid": r.is_rigid(),
            "ext": r.ext,
            "witness": witness,
        }),
        r.is_rigid(),
    ))
}

pub fn ct_check(ws: &Workspace, category: &str, bound: Option<usize>) -> Res {
    let c = ws.category(category)?;
    let bound = bound.unwrap_or_else(|| default_bound(ws));
    let universe = artheory::enumerate_indecomposables(&ws.algebra, bound)?;
    let r = artheory::cluster_tilting_report(c, ws.d, &universe)?;
    let names = ws.category_members(category);
    let mut objects = Vec::new();
    for (i, (m, member)) in universe.iter().zip(&r.membership).enumerate() {
        let w = r.witnesses.iter().find(|w| w.object == i);
        let side = |s: Option<(usize, usize)>| s.map(|(g, k)| json!({ "generator": names[g], "degree": k }));
        objects.push(json!({
            "module": module_json(ws, m)?,
            "member": member.map(|g| names[g].clone()),
            "left_witness": w.and_then(|w| side(w.left)),
            "right_witness": w.and_then(|w| side(w.right)),
        }));
    }
    Ok(Outcome::verdict(
        json!({
            "category": category,
            "d": r.d,
            "bound": bound,
            "universe_size": r.universe_size,
            "rigid": r.rigidity.is_rigid(),
            "generating": r.generating,
            "cogenerating": r.cogenerating,
            "unmatched_generators": r.unmatched_generators.iter().map(|&g| names[g].clone()).collect::<Vec<_>>(),
            "left_mismatches": r.left_mismatches,
            "right_mismatches": r.right_mismatches,
            "objects": objects,
            "verdict": r.verdict,
        }),
        r.verdict,
    ))
}

pub fn build_d_exact(ws: &Workspace, category: &str, morphism: Option<&str>, target: Option<&str>) -> Res {
    let c = ws.category(category)?;
    let g = match (morphism, target) {
        (Some(m), None) => ws.morphism(m)?.clone(),
        (None, Some(t)) => c.radical_generators(ws.module(t)?)?,
        _ => return Err(CliError::Input("give exactly one of --morphism and --target".into())),
    };
    let s = dexact::build_left_d_exact(c, &g, ws.d)?;
    let left = dexact::is_left_d_exact(&s, c);
    let report = json!({
        "category": category,
        "d": ws.d,
        "sequence": sequence_json(ws, &s)?,
        "left_d_exact": left,
        "right_d_exact": dexact::is_right_d_exact(&s, c),
    });
    let dot = sequence_dot(ws, "build-d-exact", &s)?;
    Ok(Outcome::verdict(report, left).with_dot(dot))
}

pub fn defect(ws: &Workspace, sequence: &str, module: &str) -> Res {
    let s = ws.sequence(sequence)?;
    let x = ws.module(module)?;
    Ok(Outcome::ok(json!({
        "sequence": sequence,
        "module": module,
        "contravariant": dexact::defect_contravariant(s, x).dim(),
        "covariant": dexact::defect_covariant(s, x).dim(),
    })))
}

pub fn verify_defect_formula(ws: &Workspace, category: &str, sequence: Option<&str>) -> Res {
    let c = ws.category(category)?;
    let names = ws.category_members(category);
    let chosen: Vec<(&str, &DSequence)> = match sequence {
        Some(n) => vec![(n, ws.sequence(n)?)],
        None => ws.sequences().iter().map(|(k, s)| (k.as_str(), s)).collect(),
    };
    for (n, s) in &chosen {
        if !dexact::is_d_exact(s, c)? {
            return Err(dct_core::Error::Precondition(format!("sequence {n} is not d-exact in {category}")).into());
        }
    }
    let reports: Vec<_> = chosen.par_iter().map(|(_, s)| artheory::verify_defect_formula(s, c, ws.d)).collect();
    let holds = reports.iter().all(|r| r.holds);
    let tables: Vec<Value> = chosen
        .iter()
        .zip(&reports)
        .map(|((n, _), r)| {
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|&(g, a, b)| json!({ "generator": names[g], "contravariant": a, "covariant_of_translate": b }))
                .collect();
            json!({ "sequence": n, "rows": rows, "holds": r.holds })
        })
        .collect();
    Ok(Outcome::verdict(json!({ "category": category, "d": ws.d, "sequences": tables, "holds": holds }), holds))
}

pub fn verify_ar_duality(ws: &Workspace, category: &str) -> Res {
    let c = ws.category(category)?;
    let names = ws.category_members(category);
    let r = artheory::verify_ar_duality(c, ws.d);
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|&(a, b, s, e)| json!({ "source": names[a], "target": names[b], "stable_hom": s, "ext": e }))
        .collect();
    Ok(Outcome::verdict(json!({ "category": category, "d": ws.d, "rows": rows, "holds": r.holds }), r.holds))
}

fn determined_row(ws: &Workspace, c: &AddCategory, h: &EndSubmodule) -> Result<(Value, bool), CliError> {
    let g = artheory::determined_morphism(c, h, ws.d)?;
    let x = h.source();
    let image_dim = approx::postcompose_image(x, &g).rank();
    let matches = image_dim == h.dim() && h.basis().iter().all(|b| repcat::factor_through(b, &g).is_some());
    let determined = artheory::is_right_determined(&g, x, c.generators());
    let ok = matches && determined;
    Ok((
        json!({
            "submodule_dim": h.dim(),
            "domain": module_json(ws, g.domain())?,
            "image_dim": image_dim,
            "image_matches": matches,
            "right_determined": determined,
        }),
        ok,
    ))
}

pub fn determined(ws: &Workspace, category: &str, source: &str, target: &str, gens: &[String], all: bool) -> Res {
    let c = ws.category(category)?;
    let (x, n) = (ws.module(source)?, ws.module(target)?);
    let subs = if all {
        if !gens.is_empty() {
            return Err(CliError::Input("--all and --morphism are exclusive".into()));
        }
        artheory::enumerate_end_submodules(x, n)?
    } else if gens.is_empty() {
        vec![EndSubmodule::whole(x, n)]
    } else {
        let maps = gens.iter().map(|g| ws.morphism(g).cloned()).collect::<Result<Vec<_>, _>>()?;
        if maps.iter().any(|f| f.domain() != x || f.codomain() != n) {
            return Err(CliError::Input(format!("generators must be maps {source} -> {target}")));
        }
        vec![EndSubmodule::generated(x, n, &maps)]
    };
    let rows = subs.par_iter().map(|h| determined_row(ws, c, h)).collect::<Result<Vec<_>, _>>()?;
    let holds = rows.iter().all(|(_, ok)| *ok);
    Ok(Outcome::verdict(
        json!({
            "category": category,
            "source": source,
            "target": target,
            "d": ws.d,
            "hom_dim": repcat::hom_dim(x, n),
            "results": rows.into_iter().map(|(v, _)| v).collect::<Vec<_>>(),
            "holds": holds,
        }),
        holds,
    ))
}

pub fn dass(ws: &Workspace, category: &str, target: &str) -> Res {
    let c = ws.category(category)?;
    let n = ws.module(target)?;
    let s = artheory::d_almost_split(c, n, ws.d)?;
    let tau = homological::tau_d(n, ws.d);
    let report = json!({
        "category": category,
        "target": target,
        "d": ws.d,
        "sequence": sequence_json(ws, &s)?,
        "terms": s.terms().iter().map(|t| name(ws, t)).collect::<Result<Vec<_>, _>>()?,
        "tau_d_target": module_json(ws, &tau)?,
        "d_exact": dexact::is_d_exact(&s, c)?,
        "verified": true,
    });
    let dot = sequence_dot(ws, "dass", &s)?;
    Ok(Outcome::ok(report).with_dot(dot))
}

pub fn gldim_end(ws: &Workspace, category: &str) -> Res {
    let c = ws.category(category)?;
    let gl = artheory::gldim_end(c)?;
    let dom = artheory::domdim_end(c)?;
    let d = ws.d;
    let holds = gl <= d + 1 && dom.map_or(true, |m| d + 1 <= m);
    Ok(Outcome::verdict(
        json!({ "category": category, "d": d, "gldim": gl, "domdim": dom, "inequality_holds": holds }),
        holds,
    ))
}

pub fn emit_dot(ws: &Workspace, sequence: Option<&str>, category: Option<&str>, target: Option<&str>) -> Res {
    let text = match (sequence, category, target) {
        (Some(s), None, None) => sequence_dot(ws, s, ws.sequence(s)?)?,
        (None, Some(cat), Some(t)) => {
            let s = artheory::d_almost_split(ws.category(cat)?, ws.module(t)?, ws.d)?;
            sequence_dot(ws, "dass", &s)?
        }
        (None, Some(cat), None) => category_dot(ws, cat)?,
        _ => return Err(CliError::Input("give --sequence, --category, or --category with --target".into())),
    };
    Ok(Outcome::ok(json!({ "dot": text })).with_dot(text))
}

/// Generators as nodes, an edge `a -> b` for each nonzero `Ext^i(a, b)` with `1 <= i <= d`.
fn category_dot(ws: &Workspace, category: &str) -> Result<String, CliError> {
    let c = ws.category(category)?;
    let names = ws.category_members(category);
    let nodes: Vec<Node> =
        c.generators().iter().zip(names).map(|(g, n)| Node { label: n.clone(), dims: g.dims().to_vec() }).collect();
    let mut edges = Vec::new();
    for (a, x) in c.generators().iter().enumerate() {
        for (b, y) in c.generators().iter().enumerate() {
            for i in 1..=ws.d {
                let e = homological::ext_dim(i, x, y);
                if e > 0 {
                    edges.push(Edge { from: a, to: b, label: format!("Ext^{i}={e}") });
                }
            }
        }
    }
    Ok(dot::render(category, &nodes, &edges))
}
