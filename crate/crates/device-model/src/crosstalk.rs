//! Virtual-gate crosstalk model.
//!
//! The experiment table (15 plunger/barrier electrodes P3..P10, B4..B10)
//! doubles as the linear forward model and as the compensation input: row
//! `l`, column `l'` states how strongly electrode `l` responds when virtual
//! axis `l'` is driven, so the forward map is `effective = m * applied` and
//! compensated (physical) pulses are obtained from `m^-1 * virtual`. The
//! published table is the virtualization matrix actually used on the device;
//! whether it is the raw cross-capacitance or its calibrated intent is not
//! distinguishable from the data, and this model deliberately uses it in
//! both roles.

use crate::error::DeviceModelError;
use nalgebra::DMatrix;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

/// Largest acceptable condition number for the compensation inverse.
const MAX_CONDITION: f64 = 1e9;

/// Electrode-labelled square crosstalk matrix with its cached inverse.
#[derive(Debug, Clone)]
pub struct CrosstalkMatrix {
    labels: Vec<String>,
    m: DMatrix<f64>,
    inverse: DMatrix<f64>,
}

/// Voltage vector keyed by electrode label, in mV.
pub type VoltageMap = BTreeMap<String, f64>;

impl CrosstalkMatrix {
    /// Builds the matrix from labels and row-major coefficients, validating
    /// shape, unit diagonal and invertibility.
    pub fn new(labels: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self, DeviceModelError> {
        let n = labels.len();
        if n == 0 {
            return Err(DeviceModelError::MalformedMatrix("empty matrix".into()));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(DeviceModelError::MalformedMatrix(format!(
                "expected {n}x{n} coefficients"
            )));
        }
        let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
        for i in 0..n {
            if m[(i, i)] != 1.0 {
                return Err(DeviceModelError::MalformedMatrix(format!(
                    "diagonal entry for {} is {}, expected exactly 1",
                    labels[i],
                    m[(i, i)]
                )));
            }
        }
        let inverse = m.clone().try_inverse().ok_or(DeviceModelError::SingularMatrix)?;
        let cond = m.norm() * inverse.norm();
        if !cond.is_finite() || cond > MAX_CONDITION {
            return Err(DeviceModelError::SingularMatrix);
        }
        Ok(Self { labels, m, inverse })
    }

    /// Parses the CSV layout shipped with the crate: a header row of column
    /// labels after a corner cell, then one row per electrode starting with
    /// its label, values printed as plain decimals.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Self, DeviceModelError> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let header: Vec<String> = rdr
            .headers()?
            .iter()
            .skip(1)
            .map(|s| s.to_string())
            .collect();
        let mut labels = Vec::new();
        let mut rows = Vec::new();
        for record in rdr.records() {
            let record = record?;
            let mut fields = record.iter();
            let label = fields
                .next()
                .ok_or_else(|| DeviceModelError::MalformedMatrix("empty row".into()))?
                .to_string();
            let row: Result<Vec<f64>, _> = fields
                .map(|f| {
                    f.parse::<f64>().map_err(|_| {
                        DeviceModelError::MalformedMatrix(format!(
                            "bad coefficient {f:?} in row {label}"
                        ))
                    })
                })
                .collect();
            labels.push(label);
            rows.push(row?);
        }
        if labels != header {
            return Err(DeviceModelError::MalformedMatrix(
                "row labels do not match column labels".into(),
            ));
        }
        Self::new(labels, rows)
    }

    /// Loads a matrix from a CSV file on disk.
    pub fn from_csv_path<P: AsRef<Path>>(path: P) -> Result<Self, DeviceModelError> {
        Self::from_csv_reader(std::fs::File::open(path)?)
    }

    /// The virtualization matrix used on the six-dot device, embedded from
    /// the shipped data file.
    pub fn experiment_default() -> Self {
        Self::from_csv_reader(include_str!("../data/virtual_matrix.csv").as_bytes())
            .expect("embedded virtual matrix is well-formed")
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Forward coefficient: response of `effective` per unit drive on
    /// `applied`.
    pub fn coefficient(&self, effective: &str, applied: &str) -> Result<f64, DeviceModelError> {
        Ok(self.m[(self.index(effective)?, self.index(applied)?)])
    }

    fn index(&self, label: &str) -> Result<usize, DeviceModelError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| DeviceModelError::UnknownLabel(label.to_string()))
    }

    fn to_vector(&self, map: &VoltageMap) -> Result<Vec<f64>, DeviceModelError> {
        let mut v = vec![0.0; self.labels.len()];
        for (label, value) in map {
            v[self.index(label)?] = *value;
        }
        Ok(v)
    }

    fn to_map(&self, v: &[f64]) -> VoltageMap {
        self.labels
            .iter()
            .cloned()
            .zip(v.iter().copied())
            .collect()
    }

    /// Physical electrode voltages realizing a virtual pulse: `m^-1` applied
    /// to the virtual vector, so the forward model recovers the request.
    pub fn to_physical_voltages(
        &self,
        virtual_pulse: &VoltageMap,
    ) -> Result<VoltageMap, DeviceModelError> {
        let v = self.to_vector(virtual_pulse)?;
        let x = &self.inverse * DMatrix::from_column_slice(v.len(), 1, &v);
        Ok(self.to_map(x.column(0).as_slice()))
    }

    /// Forward linear model: `effective[l] = sum_l' m[l, l'] * applied[l']`.
    pub fn effective_barrier_voltage(
        &self,
        applied: &VoltageMap,
    ) -> Result<VoltageMap, DeviceModelError> {
        let v = self.to_vector(applied)?;
        let e = &self.m * DMatrix::from_column_slice(v.len(), 1, &v);
        Ok(self.to_map(e.column(0).as_slice()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_matrix_passes_through() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let rows = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ];
        let m = CrosstalkMatrix::new(labels, rows).unwrap();
        let mut pulse = VoltageMap::new();
        pulse.insert("b".into(), 42.0);
        let phys = m.to_physical_voltages(&pulse).unwrap();
        assert_eq!(phys["b"], 42.0);
        assert_eq!(phys["a"], 0.0);
    }

    #[test]
    fn rejects_off_unit_diagonal() {
        let labels: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let rows = vec![vec![1.0, 0.1], vec![0.2, 0.999]];
        assert!(CrosstalkMatrix::new(labels, rows).is_err());
    }

    #[test]
    fn unknown_label_is_reported() {
        let m = CrosstalkMatrix::experiment_default();
        let mut pulse = VoltageMap::new();
        pulse.insert("B99".into(), 1.0);
        assert!(matches!(
            m.to_physical_voltages(&pulse),
            Err(DeviceModelError::UnknownLabel(_))
        ));
    }
}
