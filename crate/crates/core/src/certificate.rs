//! End-to-end verification of the averaging certificate: exact PSD check
//! of the 7x7 matrix, confirmation of its known kernel direction, and a
//! sweep of the inequality pi3f(U) + c_U <= threshold over all 1044
//! isomorphism classes of 7-vertex graphs, assembled into a deterministic
//! machine-readable report.
//!
//! The sweep parallelizes over classes; report assembly is a sequential
//! reduction in canonical-code order, so two runs produce byte-identical
//! output.

use crate::cliquelp::{self, CliqueLpError};
use crate::exactlin::{kernel_check, ldlt, ExactLinError};
use crate::flags::{coefficient_cu, quadratic_form_density, CertificateMatrix, FlagError};
use crate::graphs::{enumerate_graphs, Graph, GraphError};
use crate::rational::{frac_string, rat_int};
use num::{BigRational, Signed, Zero};
use rayon::prelude::*;
use serde_json::json;
use std::fmt;

/// Number of isomorphism classes of graphs on 7 vertices.
pub const SEVEN_VERTEX_CLASSES: usize = 1044;

/// Null direction of the built-in matrix, confirmed on every run.
pub const EXPECTED_KERNEL: [i64; 7] = [1, 0, 3, 1, 0, 3, 0];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateError {
    Asymmetric { row: usize, col: usize },
    Lin(ExactLinError),
    Lp(CliqueLpError),
    Flag(FlagError),
    Graph(GraphError),
    Json(String),
    BadDenominator(i64),
    BadShape(String),
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::Asymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row},{col})")
            }
            CertificateError::Lin(e) => write!(f, "linear algebra failed: {e}"),
            CertificateError::Lp(e) => write!(f, "lp failed: {e}"),
            CertificateError::Flag(e) => write!(f, "flag computation failed: {e}"),
            CertificateError::Graph(e) => write!(f, "graph error: {e}"),
            CertificateError::Json(e) => write!(f, "bad matrix file: {e}"),
            CertificateError::BadDenominator(d) => {
                write!(f, "matrix denominator must be positive, got {d}")
            }
            CertificateError::BadShape(s) => write!(f, "bad matrix shape: {s}"),
        }
    }
}

impl std::error::Error for CertificateError {}

impl From<ExactLinError> for CertificateError {
    fn from(e: ExactLinError) -> Self {
        CertificateError::Lin(e)
    }
}

impl From<CliqueLpError> for CertificateError {
    fn from(e: CliqueLpError) -> Self {
        CertificateError::Lp(e)
    }
}

impl From<FlagError> for CertificateError {
    fn from(e: FlagError) -> Self {
        CertificateError::Flag(e)
    }
}

impl From<GraphError> for CertificateError {
    fn from(e: GraphError) -> Self {
        CertificateError::Graph(e)
    }
}

/// Exact per-class record of the sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRow {
    pub g6: String,
    pub edges: u64,
    pub nu_f: BigRational,
    pub pi3f: BigRational,
    pub pi3: u64,
    pub c_u: BigRational,
    pub slack: BigRational,
}

/// Full verification outcome. When the matrix is not positive semidefinite
/// the sweep is skipped: `rows` stays empty and the summary fields are
/// `None`, with `negative_witness` explaining the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub psd_ok: bool,
    pub rank: usize,
    pub kernel_ok: bool,
    pub matrix_hash: String,
    pub threshold: BigRational,
    pub negative_witness: Option<Vec<BigRational>>,
    pub rows: Vec<GraphRow>,
    pub min_slack: Option<BigRational>,
    pub tight_set: Vec<String>,
    pub max_nonfractional: Option<BigRational>,
}

impl CertificateReport {
    /// PSD, expected kernel, all 1044 classes present and no negative slack.
    pub fn verified(&self) -> bool {
        self.psd_ok
            && self.kernel_ok
            && self.rows.len() == SEVEN_VERTEX_CLASSES
            && self
                .min_slack
                .as_ref()
                .is_some_and(|s| !s.is_negative())
    }

    /// Every class whose inequality fails, in canonical-code order.
    pub fn violations(&self) -> Vec<&GraphRow> {
        self.rows.iter().filter(|r| r.slack.is_negative()).collect()
    }

    /// JSON-lines rendering: a header object, one object per class, and a
    /// trailing summary object. Rationals are rendered as "p/q" strings.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let header = json!({
            "psd": self.psd_ok,
            "rank": self.rank,
            "kernel": self.kernel_ok,
            "matrix_hash": self.matrix_hash,
        });
        out.push_str(&header.to_string());
        out.push('\n');
        for r in &self.rows {
            let row = json!({
                "g6": r.g6,
                "edges": r.edges,
                "nu_f": frac_string(&r.nu_f),
                "pi3f": frac_string(&r.pi3f),
                "pi3": r.pi3,
                "c_u": frac_string(&r.c_u),
                "slack": frac_string(&r.slack),
            });
            out.push_str(&row.to_string());
            out.push('\n');
        }
        let opt = |v: &Option<BigRational>| match v {
            Some(x) => json!(frac_string(x)),
            None => json!(null),
        };
        let summary = json!({
            "min_slack": opt(&self.min_slack),
            "tight": self.tight_set,
            "max_nonfractional": opt(&self.max_nonfractional),
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

/// Verifies the certificate: exact LDLT for positive semidefiniteness,
/// kernel confirmation, then (only when PSD holds) the parallel sweep of
/// every 7-vertex class computing nu_f, pi3f, pi3, c_U and the slack
/// threshold - pi3f - c_U. All arithmetic is exact; a disagreement between
/// the two LP formulations inside pi3f aborts with the offending graph.
pub fn verify_lemma(
    matrix: &CertificateMatrix,
    threshold: &BigRational,
) -> Result<CertificateReport, CertificateError> {
    if let Some((row, col)) = matrix.asymmetry() {
        return Err(CertificateError::Asymmetric { row, col });
    }
    let rm = matrix.to_rational_matrix();
    let fact = ldlt(&rm)?;
    let psd_ok = fact.negative_witness.is_none();
    let kernel: Vec<BigRational> = EXPECTED_KERNEL.iter().map(|&k| rat_int(k)).collect();
    let kernel_ok = kernel_check(&rm, &kernel)?;
    let mut report = CertificateReport {
        psd_ok,
        rank: fact.rank,
        kernel_ok,
        matrix_hash: matrix.sha256_hex(),
        threshold: threshold.clone(),
        negative_witness: fact.negative_witness,
        rows: Vec::new(),
        min_slack: None,
        tight_set: Vec::new(),
        max_nonfractional: None,
    };
    if !psd_ok {
        return Ok(report);
    }
    let classes = enumerate_graphs(7)?;
    let rows: Result<Vec<GraphRow>, CertificateError> = classes
        .par_iter()
        .map(|cg| {
            let g = &cg.graph;
            let frac = cliquelp::pi3f(g)?;
            let whole = cliquelp::pi3(g)?;
            let c_u = coefficient_cu(matrix, g)?;
            let slack = threshold - &frac.value - &c_u;
            Ok(GraphRow {
                g6: cg.cert.clone(),
                edges: g.edge_count() as u64,
                nu_f: frac.nu_f,
                pi3f: frac.value,
                pi3: whole.value,
                c_u,
                slack,
            })
        })
        .collect();
    report.rows = rows?;
    report.min_slack = report.rows.iter().map(|r| r.slack.clone()).min();
    report.tight_set = report
        .rows
        .iter()
        .filter(|r| r.slack.is_zero())
        .map(|r| r.g6.clone())
        .collect();
    report.max_nonfractional = report
        .rows
        .iter()
        .map(|r| rat_int(r.pi3 as i64) + &r.c_u)
        .max();
    Ok(report)
}

/// Exact minimum of the rooted quadratic form d(root)ᵀ M d(root) over all
/// root choices in `g`. Nonnegative for every graph when M is PSD.
pub fn quadratic_form_sweep(matrix: &CertificateMatrix, g: &Graph) -> BigRational {
    assert!(g.n() >= 4, "need at least 4 vertices, got {}", g.n());
    (0..g.n())
        .map(|root| quadratic_form_density(matrix, g, root))
        .min()
        .expect("at least one root")
}

#[derive(serde::Deserialize)]
struct MatrixFile {
    denominator: i64,
    numerators: Vec<Vec<i64>>,
}

/// Parses a matrix override file: JSON with a positive integer
/// `denominator` and a 7x7 integer `numerators` array.
pub fn matrix_from_json(text: &str) -> Result<CertificateMatrix, CertificateError> {
    let raw: MatrixFile =
        serde_json::from_str(text).map_err(|e| CertificateError::Json(e.to_string()))?;
    if raw.denominator <= 0 {
        return Err(CertificateError::BadDenominator(raw.denominator));
    }
    if raw.numerators.len() != 7 {
        return Err(CertificateError::BadShape(format!(
            "matrix has {} rows, want 7",
            raw.numerators.len()
        )));
    }
    let mut numerators = [[0i64; 7]; 7];
    for (i, row) in raw.numerators.iter().enumerate() {
        if row.len() != 7 {
            return Err(CertificateError::BadShape(format!(
                "row {i} has {} entries, want 7",
                row.len()
            )));
        }
        numerators[i].copy_from_slice(row);
    }
    Ok(CertificateMatrix {
        denominator: raw.denominator,
        numerators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn builtin_matrix_is_psd_rank_six_with_expected_kernel() {
        let m = CertificateMatrix::builtin();
        let rm = m.to_rational_matrix();
        let fact = ldlt(&rm).unwrap();
        assert!(fact.is_complete());
        assert_eq!(fact.rank, 6);
        let kernel: Vec<BigRational> = EXPECTED_KERNEL.iter().map(|&k| rat_int(k)).collect();
        assert!(kernel_check(&rm, &kernel).unwrap());
        // perturbing an entry the kernel vector touches breaks the identity
        let mut bent = m.clone();
        bent.numerators[0][0] += bent.denominator;
        assert!(!kernel_check(&bent.to_rational_matrix(), &kernel).unwrap());
    }

    #[test]
    fn negated_corner_fails_fast_without_a_sweep() {
        let mut m = CertificateMatrix::builtin();
        m.numerators[0][0] = -m.numerators[0][0];
        let report = verify_lemma(&m, &rat_int(21)).unwrap();
        assert!(!report.psd_ok);
        assert!(!report.verified());
        assert!(report.rows.is_empty());
        assert_eq!(report.min_slack, None);
        let w = report.negative_witness.expect("witness required");
        let val = m.to_rational_matrix().quadratic_form(&w).unwrap();
        assert!(val.is_negative(), "witness form is {}", frac_string(&val));
    }

    #[test]
    fn asymmetric_matrix_is_rejected() {
        let mut m = CertificateMatrix::builtin();
        m.numerators[0][1] += 1;
        assert_eq!(
            verify_lemma(&m, &rat_int(21)),
            Err(CertificateError::Asymmetric { row: 0, col: 1 })
        );
    }

    #[test]
    fn sweep_minimum_is_nonnegative_and_transitive_on_c5() {
        let m = CertificateMatrix::builtin();
        let c5 = Graph::cycle(5);
        let min = quadratic_form_sweep(&m, &c5);
        assert!(!min.is_negative());
        for root in 0..5 {
            assert_eq!(quadratic_form_density(&m, &c5, root), min);
        }
    }

    #[test]
    fn kernel_direction_annihilates_the_form() {
        let m = CertificateMatrix::builtin();
        let d: [BigRational; 7] = std::array::from_fn(|i| rat_int(EXPECTED_KERNEL[i]));
        assert!(m.quadratic_form(&d).is_zero());
    }

    #[test]
    fn matrix_file_roundtrip_and_rejections() {
        let m = CertificateMatrix::builtin();
        let rows: Vec<Vec<i64>> = m.numerators.iter().map(|r| r.to_vec()).collect();
        let text = serde_json::to_string(&json!({
            "denominator": m.denominator,
            "numerators": rows,
        }))
        .unwrap();
        assert_eq!(matrix_from_json(&text).unwrap(), m);

        assert!(matches!(
            matrix_from_json("{\"denominator\":0,\"numerators\":[]}"),
            Err(CertificateError::BadDenominator(0))
        ));
        assert!(matches!(
            matrix_from_json("{\"denominator\":1,\"numerators\":[[1]]}"),
            Err(CertificateError::BadShape(_))
        ));
        let mut ragged_rows = vec![vec![0i64; 7]; 7];
        ragged_rows[3] = vec![0, 1];
        let ragged = json!({"denominator": 1, "numerators": ragged_rows});
        assert!(matches!(
            matrix_from_json(&ragged.to_string()),
            Err(CertificateError::BadShape(_))
        ));
        assert!(matches!(
            matrix_from_json("not json"),
            Err(CertificateError::Json(_))
        ));
    }

    #[test]
    fn jsonl_shape_for_a_failed_psd_check() {
        let mut m = CertificateMatrix::builtin();
        // the kernel vector is zero in coordinate 1, so flipping this
        // diagonal entry destroys positive semidefiniteness while leaving
        // the kernel identity intact
        m.numerators[1][1] = -m.numerators[1][1];
        let report = verify_lemma(&m, &rat_int(21)).unwrap();
        let text = report.to_jsonl();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2, "header and summary only");
        let header: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(header["psd"], json!(false));
        assert_eq!(header["kernel"], json!(true));
        assert_eq!(header["matrix_hash"], json!(m.sha256_hex()));
        let summary: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(summary["min_slack"], json!(null));
        assert_eq!(summary["tight"], json!([]));
    }

    #[test]
    fn verified_and_violations_logic() {
        let row = |slack: BigRational| GraphRow {
            g6: "F????".into(),
            edges: 0,
            nu_f: rat_int(0),
            pi3f: rat_int(0),
            pi3: 0,
            c_u: rat_int(21),
            slack,
        };
        let mut report = CertificateReport {
            psd_ok: true,
            rank: 6,
            kernel_ok: true,
            matrix_hash: String::new(),
            threshold: rat_int(21),
            negative_witness: None,
            rows: vec![row(rat_int(0)); SEVEN_VERTEX_CLASSES],
            min_slack: Some(rat_int(0)),
            tight_set: Vec::new(),
            max_nonfractional: None,
        };
        assert!(report.verified());
        assert!(report.violations().is_empty());

        report.rows[3] = row(rat(-1, 7));
        report.min_slack = Some(rat(-1, 7));
        assert!(!report.verified());
        assert_eq!(report.violations().len(), 1);

        report.rows.pop();
        report.min_slack = Some(rat_int(0));
        assert!(!report.verified(), "a missing class cannot verify");
    }
}
