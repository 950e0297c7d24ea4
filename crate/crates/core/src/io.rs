//! JSON encodings shared with external tools.
//!
//! A matrix is `{"dim": n, "entries": [[[re, im], …], …]}`, row-major.
//! Matrix output is lossless: integral values print without a fraction and
//! everything else prints in shortest round-trip form, so
//! `parse_matrix(&serialize_matrix(m)) == m` bit for bit.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::closure::{LieBasis, StructureConstants};
use crate::error::{PbError, Result};
use crate::gellmann::GellMannBasis;
use crate::matrix::{ComplexMatrix, C64};
use crate::operators::{Cutoff, OperatorSet};
use crate::report::round_sig;
use crate::susy::SusyAlgebra;

fn write_float(out: &mut String, x: f64) {
    if x == 0.0 && x.is_sign_negative() {
        out.push_str("-0.0");
    } else if x.fract() == 0.0 && x.abs() < 1e15 {
        let _ = write!(out, "{}", x as i64);
    } else {
        let _ = write!(out, "{x:?}");
    }
}

/// Compact JSON for one matrix.
pub fn serialize_matrix(m: &ComplexMatrix) -> String {
    let mut out = String::new();
    write_matrix(&mut out, m);
    out
}

fn write_matrix(out: &mut String, m: &ComplexMatrix) {
    let _ = write!(out, "{{\"dim\":{},\"entries\":[", m.dim());
    for r in 0..m.dim() {
        if r > 0 {
            out.push(',');
        }
        out.push('[');
        for (c, z) in m.row(r).iter().enumerate() {
            if c > 0 {
                out.push(',');
            }
            out.push('[');
            write_float(out, z.re);
            out.push(',');
            write_float(out, z.im);
            out.push(']');
        }
        out.push(']');
    }
    out.push_str("]}");
}

/// Wire form of a matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub dim: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        MatrixJson {
            dim: m.dim(),
            entries: m
                .rows()
                .into_iter()
                .map(|row| row.into_iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = PbError;
    fn try_from(j: MatrixJson) -> Result<Self> {
        if j.entries.len() != j.dim {
            return Err(PbError::invalid(format!(
                "dim is {} but {} rows were given",
                j.dim,
                j.entries.len()
            )));
        }
        ComplexMatrix::from_rows(
            j.entries
                .into_iter()
                .map(|row| row.into_iter().map(|[re, im]| C64::new(re, im)).collect())
                .collect(),
        )
    }
}

/// Parses one matrix; syntax errors carry line and column.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let j: MatrixJson = serde_json::from_str(text)?;
    j.try_into()
}

fn write_named(out: &mut String, items: &[(&str, &ComplexMatrix)]) {
    out.push('{');
    for (i, (name, m)) in items.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "\"{name}\":");
        write_matrix(out, m);
    }
    out.push('}');
}

fn write_list(out: &mut String, items: &[ComplexMatrix]) {
    out.push('[');
    for (i, m) in items.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_matrix(out, m);
    }
    out.push(']');
}

/// `{"s": s, "generators": {"a": …, "a_dag": …, …}}`.
pub fn serialize_operator_set(ops: &OperatorSet) -> String {
    let mut out = format!("{{\"s\":{},\"generators\":", ops.s.s());
    write_named(&mut out, &ops.named());
    out.push('}');
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorSetJson {
    s: usize,
    generators: BTreeMap<String, MatrixJson>,
}

pub fn parse_operator_set(text: &str) -> Result<OperatorSet> {
    let j: OperatorSetJson = serde_json::from_str(text)?;
    let s = Cutoff::new(j.s)?;
    let mut gens = j.generators;
    let mut take = |name: &str| -> Result<ComplexMatrix> {
        let m: ComplexMatrix = gens
            .remove(name)
            .ok_or_else(|| PbError::invalid(format!("missing generator '{name}'")))?
            .try_into()?;
        if m.dim() != s.dim() {
            return Err(PbError::DimensionMismatch {
                left: s.dim(),
                right: m.dim(),
            });
        }
        Ok(m)
    };
    Ok(OperatorSet {
        s,
        a: take("a")?,
        a_dag: take("a_dag")?,
        deficit: take("A")?,
        m: take("M")?,
        m_dag: take("M_dag")?,
        k: take("K")?,
        f: take("F")?,
        f_dag: take("F_dag")?,
    })
}

/// `{"dim_space": n, "algebra_dim": d, "rounds": r, "basis": [ … ]}`.
pub fn serialize_lie_basis(b: &LieBasis) -> String {
    let mut out = format!(
        "{{\"dim_space\":{},\"algebra_dim\":{},\"rounds\":{},\"basis\":",
        b.dim_space,
        b.algebra_dim(),
        b.rounds
    );
    write_list(&mut out, &b.basis);
    out.push('}');
    out
}

/// `{"triples": [[i, j, k, [re, im]], …], "residual": r}`.
pub fn serialize_structure_constants(sc: &StructureConstants) -> serde_json::Value {
    let triples: Vec<serde_json::Value> = sc
        .triples
        .iter()
        .map(|&(i, j, k, c)| serde_json::json!([i, j, k, [round_sig(c.re), round_sig(c.im)]]))
        .collect();
    serde_json::json!({ "triples": triples, "residual": round_sig(sc.residual) })
}

pub fn serialize_gellmann(g: &GellMannBasis) -> String {
    let mut out = format!(
        "{{\"n\":{},\"normalization\":\"{}\",\"ordering\":\"{}\",\"lambda8_reconstructed\":{},\"matrices\":",
        g.n,
        GellMannBasis::NORMALIZATION,
        GellMannBasis::ORDERING,
        g.lambda8_reconstructed
    );
    write_list(&mut out, &g.matrices);
    out.push('}');
    out
}

pub fn serialize_susy_algebra(alg: &SusyAlgebra) -> String {
    let c = &alg.config;
    let mut out = format!(
        "{{\"k\":{},\"n_max\":{},\"safe_dim\":{},\"generators\":",
        c.k(),
        c.n_max(),
        alg.safe_dim()
    );
    write_named(&mut out, &alg.named());
    out.push('}');
    out
}
