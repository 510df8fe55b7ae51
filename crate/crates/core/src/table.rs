//! Gram/Weingarten tables and the pseudo-inverse contract.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coeff::{Coefficient, Rational};
use crate::error::{parse_err, Result, WgError};
use crate::matrix::Matrix;
use crate::symcore::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Unitary,
    Orthogonal,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Unitary => "unitary",
            Group::Orthogonal => "orthogonal",
        })
    }
}

impl FromStr for Group {
    type Err = WgError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unitary" => Ok(Group::Unitary),
            "orthogonal" => Ok(Group::Orthogonal),
            _ => Err(parse_err(format!("unknown group {s:?} (expected unitary|orthogonal)"))),
        }
    }
}

/// The dimension parameter: kept symbolic, or a concrete rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TauSpec {
    Symbolic,
    Value(Rational),
}

impl fmt::Display for TauSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauSpec::Symbolic => f.write_str("symbolic"),
            TauSpec::Value(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for TauSpec {
    type Err = WgError;

    fn from_str(s: &str) -> Result<Self> {
        if s == "symbolic" {
            return Ok(TauSpec::Symbolic);
        }
        Ok(TauSpec::Value(s.parse()?))
    }
}

/// Gram and Weingarten matrices on a labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeingartenTable<C> {
    pub group: Group,
    pub n: usize,
    pub tau: TauSpec,
    pub basis: Vec<String>,
    pub gram: Matrix<C>,
    pub weingarten: Matrix<C>,
    /// Partitions whose eigenvalue `c_λ` vanishes at this `τ`.
    pub excluded: Vec<Partition>,
}

/// On-disk JSON form; entries are rendered coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub group: Group,
    pub n: usize,
    pub tau: String,
    pub basis: Vec<String>,
    pub gram: Vec<Vec<String>>,
    pub weingarten: Vec<Vec<String>>,
    pub excluded: Vec<String>,
}

impl<C: Coefficient> WeingartenTable<C> {
    pub fn to_file(&self) -> TableFile {
        TableFile {
            group: self.group,
            n: self.n,
            tau: self.tau.to_string(),
            basis: self.basis.clone(),
            gram: self.gram.render(),
            weingarten: self.weingarten.render(),
            excluded: self.excluded.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_file(file: &TableFile) -> Result<Self> {
        Ok(Self {
            group: file.group,
            n: file.n,
            tau: file.tau.parse()?,
            basis: file.basis.clone(),
            gram: Matrix::parse(&file.gram)?,
            weingarten: Matrix::parse(&file.weingarten)?,
            excluded: file.excluded.iter().map(|s| s.parse()).collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn check(&self) -> PseudoInverseReport {
        pseudo_inverse_check(&self.gram, &self.weingarten)
    }
}

/// Outcome of checking `GWG = G`, `WGW = W` and symmetry of `W`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoInverseReport {
    pub size: usize,
    pub shapes_match: bool,
    pub gwg_equals_g: bool,
    pub wgw_equals_w: bool,
    pub w_symmetric: bool,
}

impl PseudoInverseReport {
    pub fn passed(&self) -> bool {
        self.shapes_match && self.gwg_equals_g && self.wgw_equals_w && self.w_symmetric
    }
}

/// Exact verification of the pseudo-inverse identities. Failures are reported, not raised.
pub fn pseudo_inverse_check<C: Coefficient>(g: &Matrix<C>, w: &Matrix<C>) -> PseudoInverseReport {
    let shapes_match = g.is_square() && w.is_square() && g.rows() == w.rows();
    let mut report = PseudoInverseReport {
        size: g.rows(),
        shapes_match,
        gwg_equals_g: false,
        wgw_equals_w: false,
        w_symmetric: false,
    };
    if !shapes_match {
        return report;
    }
    let gw = g.mul(w).expect("square");
    let wg = w.mul(g).expect("square");
    report.gwg_equals_g = gw.mul(g).expect("square") == *g;
    report.wgw_equals_w = wg.mul(w).expect("square") == *w;
    report.w_symmetric = w.is_symmetric();
    report
}

/// True when `W·G` is exactly the identity.
pub fn is_left_inverse<C: Coefficient>(w: &Matrix<C>, g: &Matrix<C>) -> bool {
    w.cols() == g.rows()
        && g.is_square()
        && w.mul(g).is_ok_and(|p| p == Matrix::identity(g.rows()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn singular_gram_with_pseudo_inverse() {
        // G = [[1,1],[1,1]] has pseudo-inverse [[1/4,1/4],[1/4,1/4]]
        let g = m(&[&[1, 1], &[1, 1]]);
        let quarter = Rational::new(1, 4);
        let w = Matrix::from_fn(2, 2, |_, _| quarter.clone());
        assert!(pseudo_inverse_check(&g, &w).passed());
        assert!(!is_left_inverse(&w, &g));
    }

    #[test]
    fn failures_are_reported() {
        let g = m(&[&[2, 0], &[0, 2]]);
        let w = m(&[&[1, 0], &[0, 1]]);
        let r = pseudo_inverse_check(&g, &w);
        assert!(!r.passed());
        assert!(!r.gwg_equals_g);
        assert!(r.w_symmetric);
        let mismatched = pseudo_inverse_check(&g, &m(&[&[1]]));
        assert!(!mismatched.shapes_match);
        assert!(!mismatched.passed());
    }

    #[test]
    fn tau_spec_parsing() {
        assert_eq!("symbolic".parse::<TauSpec>().unwrap(), TauSpec::Symbolic);
        assert_eq!("7/2".parse::<TauSpec>().unwrap(), TauSpec::Value(Rational::new(7, 2)));
        assert!("seven".parse::<TauSpec>().is_err());
        assert!("unitarian".parse::<Group>().is_err());
    }
}
