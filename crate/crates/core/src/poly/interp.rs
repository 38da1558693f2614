//! Exact polynomial interpolation on rational nodes.

use std::collections::HashSet;

use super::{BiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::scalar::Rational;

fn check_distinct(nodes: &[Rational]) -> Result<()> {
    let mut seen = HashSet::with_capacity(nodes.len());
    for x in nodes {
        if !seen.insert(x) {
            return Err(Error::DuplicateNode(x.to_string()));
        }
    }
    Ok(())
}

/// Newton divided differences: the unique polynomial of degree `< nodes.len()`
/// through `(nodes[i], values[i])`.
pub fn interpolate(nodes: &[Rational], values: &[Rational]) -> Result<UniPoly> {
    if nodes.len() != values.len() {
        return Err(Error::GridShape(format!(
            "{} nodes but {} values",
            nodes.len(),
            values.len()
        )));
    }
    check_distinct(nodes)?;
    let n = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    // Horner on the Newton basis
    let mut p = UniPoly::zero();
    for i in (0..n).rev() {
        p = &(&p * &UniPoly::linear_root(&nodes[i])) + &UniPoly::constant(dd[i].clone());
    }
    Ok(p)
}

/// Tensor-product interpolation: the unique [`BiPoly`] with `deg_z ≤ deg_z_bound`
/// and `deg_s ≤ deg_s_bound` taking `values[i][j]` at `(z_nodes[i], s_nodes[j])`.
pub fn bipoly_interpolate(
    values: &[Vec<Rational>],
    z_nodes: &[Rational],
    s_nodes: &[Rational],
    deg_z_bound: usize,
    deg_s_bound: usize,
) -> Result<BiPoly> {
    if z_nodes.len() != deg_z_bound + 1 || s_nodes.len() != deg_s_bound + 1 {
        return Err(Error::GridShape(format!(
            "need {}x{} nodes, got {}x{}",
            deg_z_bound + 1,
            deg_s_bound + 1,
            z_nodes.len(),
            s_nodes.len()
        )));
    }
    if values.len() != z_nodes.len() || values.iter().any(|row| row.len() != s_nodes.len()) {
        return Err(Error::GridShape(
            "value grid does not match node counts".into(),
        ));
    }
    check_distinct(z_nodes)?;
    check_distinct(s_nodes)?;

    // interpolate along s for each z node, then along z for each s-power
    let along_s: Vec<UniPoly> = values
        .iter()
        .map(|row| interpolate(s_nodes, row))
        .collect::<Result<_>>()?;
    let mut out = BiPoly::zero();
    for k in 0..=deg_s_bound {
        let column: Vec<Rational> = along_s.iter().map(|p| p.coeff(k)).collect();
        let in_z = interpolate(z_nodes, &column)?;
        for (dz, c) in in_z.coeffs().iter().enumerate() {
            out.add_term(dz, k, c);
        }
    }
    Ok(out)
}
