//! Human-readable names for modules, built from the workspace's named indecomposables.

use dct_core::repcat::{self, Module};

use crate::error::CliError;

pub fn dims_label(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Name of an indecomposable, or `M(dims)` when no named module matches.
pub fn indecomposable_name(labels: &[(String, Module)], x: &Module) -> String {
    labels
        .iter()
        .find(|(_, m)| m.dims() == x.dims() && repcat::are_isomorphic(m, x).unwrap_or(false))
        .map(|(n, _)| n.clone())
        .unwrap_or_else(|| format!("M{}", dims_label(x.dims())))
}

/// Summands as `(name, multiplicity)`, sorted by name.
pub fn summands(labels: &[(String, Module)], x: &Module) -> Result<Vec<(String, usize)>, CliError> {
    let mut parts: Vec<(String, usize)> = Vec::new();
    for (m, k) in repcat::decompose(x)? {
        let name = indecomposable_name(labels, &m);
        match parts.iter_mut().find(|(n, _)| *n == name) {
            Some(p) => p.1 += k,
            None => parts.push((name, k)),
        }
    }
    parts.sort();
    Ok(parts)
}

/// `S1`, `P1+S2^2`, or `0` for the zero module.
pub fn name_of(labels: &[(String, Module)], x: &Module) -> Result<String, CliError> {
    if x.is_zero() {
        return Ok("0".into());
    }
    let parts: Vec<String> = summands(labels, x)?
        .into_iter()
        .map(|(n, k)| if k == 1 { n } else { format!("{n}^{k}") })
        .collect();
    Ok(parts.join("+"))
}
