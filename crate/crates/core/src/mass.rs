//! Charged-lepton mass formula
//!
//! `m_n = (1 + (α⁻¹/2) Σ_{l=0}^{n} C(3, l) l⁴) m_e`, `n = 0..=3`.
//!
//! The sum runs over the binomial row `C(3, l)`, which has no term beyond
//! `l = 3`, so the chain stops after four generations.

use serde::Serialize;

use crate::error::{PbError, Result};
use crate::report::fmt_sig;

pub use crate::combin::binomial;

/// Highest generation index the formula admits.
pub const MAX_GENERATION: u32 = 3;

pub const DEFAULT_ALPHA_INV: f64 = 137.036;
pub const DEFAULT_ELECTRON_MEV: f64 = 0.51100;

const LABELS: [&str; 4] = ["e", "mu", "tau", "fourth"];

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectrumInputs {
    pub alpha_inv: f64,
    pub m_e: f64,
}

impl SpectrumInputs {
    pub fn new(alpha_inv: f64, m_e: f64) -> Result<Self> {
        if !(alpha_inv > 0.0 && alpha_inv.is_finite()) {
            return Err(PbError::invalid(format!("alpha_inv must be positive, got {alpha_inv}")));
        }
        if !(m_e > 0.0 && m_e.is_finite()) {
            return Err(PbError::invalid(format!("m_e must be positive, got {m_e}")));
        }
        Ok(SpectrumInputs { alpha_inv, m_e })
    }

    pub fn reference() -> Self {
        SpectrumInputs {
            alpha_inv: DEFAULT_ALPHA_INV,
            m_e: DEFAULT_ELECTRON_MEV,
        }
    }
}

/// Reference masses in MeV used for the precision comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ExperimentalMasses {
    pub muon: f64,
    pub tau: f64,
    /// The later, lower tau measurement kept as an alternative reference.
    pub tau_1992: f64,
}

impl Default for ExperimentalMasses {
    fn default() -> Self {
        ExperimentalMasses {
            muon: 105.66,
            tau: 1784.2,
            tau_1992: 1776.9,
        }
    }
}

/// `l⁴`.
pub fn magnetic_term(l: u64) -> Result<u64> {
    l.checked_pow(4).ok_or(PbError::Overflow("l^4"))
}

fn check_generation(n: u32) -> Result<()> {
    if n > MAX_GENERATION {
        Err(PbError::invalid(format!(
            "generation {n} out of range: C(3, l) vanishes for l > 3"
        )))
    } else {
        Ok(())
    }
}

/// `Σ_{l=0}^{n} C(3, l) l⁴` in exact integers: 0, 3, 51, 132.
pub fn cumulative_sum(n: u32) -> Result<u64> {
    check_generation(n)?;
    (0..=u64::from(n)).try_fold(0u64, |acc, l| Ok(acc + binomial(3, l)? * magnetic_term(l)?))
}

/// Mass in MeV of generation `n`.
pub fn lepton_mass(n: u32, inputs: &SpectrumInputs) -> Result<f64> {
    let sum = cumulative_sum(n)? as f64;
    Ok(inputs.m_e * (1.0 + 0.5 * inputs.alpha_inv * sum))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MassRow {
    pub n: u32,
    pub label: &'static str,
    pub mass_mev: f64,
    pub cumulative_sum: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MassTable {
    pub inputs: SpectrumInputs,
    pub rows: Vec<MassRow>,
}

impl MassTable {
    pub fn mass(&self, n: u32) -> Option<f64> {
        self.rows.iter().find(|r| r.n == n).map(|r| r.mass_mev)
    }

    /// CSV with columns `n,label,mass_mev,cumulative_sum`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "label", "mass_mev", "cumulative_sum"]).expect("in-memory");
        for r in &self.rows {
            w.write_record([
                r.n.to_string(),
                r.label.to_string(),
                fmt_sig(r.mass_mev),
                r.cumulative_sum.to_string(),
            ])
            .expect("in-memory");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

pub fn full_spectrum(inputs: &SpectrumInputs) -> MassTable {
    let rows = (0..=MAX_GENERATION)
        .map(|n| MassRow {
            n,
            label: LABELS[n as usize],
            mass_mev: lepton_mass(n, inputs).expect("n in range"),
            cumulative_sum: cumulative_sum(n).expect("n in range"),
        })
        .collect();
    MassTable {
        inputs: *inputs,
        rows,
    }
}

/// `(predicted − experimental) / experimental`.
pub fn relative_precision(predicted: f64, experimental: f64) -> Result<f64> {
    if experimental.is_nan() || experimental <= 0.0 {
        return Err(PbError::invalid("experimental mass must be positive"));
    }
    Ok((predicted - experimental) / experimental)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrecisionRow {
    pub particle: String,
    pub predicted: f64,
    pub experimental: f64,
    pub rel_precision: f64,
}

pub fn precision_rows(table: &MassTable, exp: &ExperimentalMasses) -> Result<Vec<PrecisionRow>> {
    let mu = table.mass(1).expect("full table");
    let tau = table.mass(2).expect("full table");
    [("mu", mu, exp.muon), ("tau", tau, exp.tau), ("tau_1992", tau, exp.tau_1992)]
        .into_iter()
        .map(|(p, pred, e)| {
            Ok(PrecisionRow {
                particle: p.to_string(),
                predicted: pred,
                experimental: e,
                rel_precision: relative_precision(pred, e)?,
            })
        })
        .collect()
}

/// CSV with columns `particle,predicted,experimental,rel_precision`.
pub fn precision_csv(rows: &[PrecisionRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["particle", "predicted", "experimental", "rel_precision"])
        .expect("in-memory");
    for r in rows {
        w.write_record([
            r.particle.clone(),
            fmt_sig(r.predicted),
            fmt_sig(r.experimental),
            fmt_sig(r.rel_precision),
        ])
        .expect("in-memory");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub alpha_inv: f64,
    pub mass_mev: f64,
}

/// Mass of generation `n` for each value of `α⁻¹`.
pub fn alpha_sensitivity(n: u32, alpha_inv_values: &[f64], m_e: f64) -> Result<Vec<SweepRow>> {
    check_generation(n)?;
    alpha_inv_values
        .iter()
        .map(|&a| {
            let inputs = SpectrumInputs::new(a, m_e)?;
            Ok(SweepRow {
                alpha_inv: a,
                mass_mev: lepton_mass(n, &inputs)?,
            })
        })
        .collect()
}

pub fn sweep_csv(n: u32, rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "alpha_inv", "mass_mev"]).expect("in-memory");
    for r in rows {
        w.write_record([
            n.to_string(),
            fmt_sig(r.alpha_inv),
            fmt_sig(r.mass_mev),
        ])
        .expect("in-memory");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

/// Five significant figures, as masses are quoted in text output.
pub fn format_mev(x: f64) -> String {
    let digits = if x == 0.0 { 0 } else { x.abs().log10().floor() as i32 };
    let decimals = (4 - digits).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn magnetic_terms() {
        assert_eq!(magnetic_term(0).unwrap(), 0);
        assert_eq!(magnetic_term(2).unwrap(), 16);
        assert_eq!(magnetic_term(3).unwrap(), 81);
    }

    #[test]
    fn cumulative_sums() {
        let sums: Vec<u64> = (0..=3).map(|n| cumulative_sum(n).unwrap()).collect();
        assert_eq!(sums, vec![0, 3, 51, 132]);
        assert!(cumulative_sum(4).is_err());
    }

    #[test]
    fn reference_masses() {
        let p = SpectrumInputs::reference();
        assert_eq!(lepton_mass(0, &p).unwrap(), 0.511);
        assert!((lepton_mass(1, &p).unwrap() - 105.55).abs() <= 0.01);
        assert!((lepton_mass(2, &p).unwrap() - 1786.2).abs() <= 0.1);
        assert!((lepton_mass(3, &p).unwrap() - 4622.2).abs() <= 0.1);
        assert!(lepton_mass(4, &p).is_err());
        let t = full_spectrum(&p);
        assert!(t.mass(3).unwrap() / p.m_e > 9000.0);
    }

    #[test]
    fn precision() {
        let mu = relative_precision(105.55, 105.66).unwrap();
        assert!((mu / -1.04e-3 - 1.0).abs() <= 0.02);
        let tau = relative_precision(1786.2, 1784.2).unwrap();
        assert!((tau / 1.12e-3 - 1.0).abs() <= 0.02);
        assert_eq!(relative_precision(3.5, 3.5).unwrap(), 0.0);
        assert!(relative_precision(1.0, 0.0).is_err());
    }

    #[test]
    fn sweep() {
        let rows = alpha_sensitivity(2, &[137.036, 135.0], 0.511).unwrap();
        assert!(rows[1].mass_mev < rows[0].mass_mev);
        assert!((rows[0].mass_mev - 1786.2).abs() <= 0.1);
        let rows = alpha_sensitivity(0, &[100.0, 137.0, 200.0], 0.511).unwrap();
        assert!(rows.iter().all(|r| r.mass_mev == 0.511));
        assert!(alpha_sensitivity(2, &[-1.0], 0.511).is_err());
        assert!(alpha_sensitivity(5, &[137.0], 0.511).is_err());
    }

    #[test]
    fn inputs_validated() {
        assert!(SpectrumInputs::new(0.0, 0.5).is_err());
        assert!(SpectrumInputs::new(137.0, -0.5).is_err());
        assert!(SpectrumInputs::new(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn csv_layout() {
        let csv = full_spectrum(&SpectrumInputs::reference()).to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "n,label,mass_mev,cumulative_sum");
        assert_eq!(lines[1], "0,e,0.511,0");
        assert!(lines[2].starts_with("1,mu,105.549"));
        assert!(lines[4].ends_with(",132"));
    }

    #[test]
    fn five_significant_figures() {
        assert_eq!(format_mev(0.511), "0.51100");
        assert_eq!(format_mev(105.549376), "105.55");
        assert_eq!(format_mev(1786.1586), "1786.2");
        assert_eq!(format_mev(4622.19), "4622.2");
    }
}
