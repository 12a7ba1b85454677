//! Machine-readable reports. Every number is an exact string.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::envelope::{LieRinehart, UElement};
use crate::error::Result;
use crate::logderiv::{self, Divisor, Freeness, LogFrame, SaitoMode};
use crate::poly::{format_rational, Poly, PolyRing, PolyVec};
use crate::spencer::{CertificateReport, ComplexPresentation};
use crate::weyl::WeylOp;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessReport {
    /// `certified` or `undetermined`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub frame: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant: Option<String>,
    /// `det / h`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cofactor: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReport {
    pub i: usize,
    pub j: usize,
    /// Coefficients of `[δᵢ, δⱼ]` in the frame.
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnReport {
    pub column: usize,
    pub generators: Vec<String>,
    pub orders_ok: bool,
    pub symbols: Vec<String>,
    pub regular_sequence: bool,
    pub brackets_closed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colon: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contraction: Option<Vec<String>>,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub kernel: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certifying_column: Option<usize>,
    pub verdict: String,
    pub columns: Vec<ColumnReport>,
}

impl CertificateSummary {
    pub fn new(ring: &PolyRing, report: &CertificateReport) -> Self {
        let sring = ring.with_symbols();
        let polys = |v: &[Poly]| v.iter().map(|p| sring.format(p)).collect::<Vec<_>>();
        CertificateSummary {
            kernel: report.kernel,
            certifying_column: report.certifying_column.map(|c| c + 1),
            verdict: report.verdict().to_string(),
            columns: report
                .columns
                .iter()
                .map(|c| ColumnReport {
                    column: c.column + 1,
                    generators: c.generators.iter().map(|g| g.display(ring)).collect(),
                    orders_ok: c.orders_ok,
                    symbols: polys(&c.symbols),
                    regular_sequence: c.regular_sequence,
                    brackets_closed: c.brackets_closed(),
                    colon: c.colon.as_deref().map(polys),
                    contraction: c.contraction.as_deref().map(polys),
                    certified: c.certified,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub variables: Vec<String>,
    pub divisor: String,
    pub generators: Vec<Vec<String>>,
    pub freeness: FreenessReport,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alphas: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub koszul: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spencer: Option<CertificateSummary>,
    /// Wall-clock times in milliseconds, only when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub mode: SaitoMode,
    pub koszul: bool,
    /// Number of generator subsets tried when no frame is supplied.
    pub search_bound: usize,
    pub timings: bool,
}

fn rows_strings(ring: &PolyRing, rows: &[PolyVec]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|p| ring.format(p)).collect()).collect()
}

/// Squarefree check, generators, Saito test, α's, brackets and the optional
/// Koszul and `H⁻¹` checks.
pub fn analyze(
    ring: &PolyRing,
    divisor: Divisor,
    frame_rows: Option<Vec<PolyVec>>,
    operators: Option<&[WeylOp]>,
    opts: &AnalysisOptions,
) -> Result<AnalysisReport> {
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, String>| {
        timings.insert(name.to_string(), format!("{:.3}", clock.elapsed().as_secs_f64() * 1e3));
        clock = Instant::now();
    };
    let gens = logderiv::derivation_generators(&divisor)?;
    lap("generators", &mut timings);
    let mut report = AnalysisReport {
        variables: ring.names().to_vec(),
        divisor: ring.format(divisor.h()),
        generators: gens.iter().map(|g| g.coeffs.iter().map(|p| ring.format(p)).collect()).collect(),
        freeness: FreenessReport { status: "undetermined".into(), reason: None, frame: vec![], determinant: None, cofactor: None },
        alphas: vec![],
        brackets: vec![],
        koszul: None,
        spencer: None,
        timings: None,
    };
    let frame = match frame_rows {
        Some(rows) => match logderiv::saito_test(&rows, &divisor, opts.mode)? {
            Freeness::Certified(_) => Some(LogFrame::new(divisor.clone(), rows, opts.mode)?),
            Freeness::Undetermined(reason) => {
                report.freeness.reason = Some(reason);
                None
            }
        },
        None => {
            let found = logderiv::find_frame(&divisor, &gens, opts.search_bound, opts.mode)?;
            if found.is_none() {
                report.freeness.reason = Some(format!("no frame among the first {} generator subsets", opts.search_bound));
            }
            found
        }
    };
    lap("saito", &mut timings);
    if let Some(frame) = &frame {
        report.freeness = FreenessReport {
            status: "certified".into(),
            reason: None,
            frame: rows_strings(ring, &frame.matrix()),
            determinant: Some(ring.format(&frame.certificate().det)),
            cofactor: Some(ring.format(&frame.certificate().cofactor)),
        };
        report.alphas = frame.alphas().iter().map(|a| ring.format(a)).collect();
        let n = frame.n();
        for i in 0..n {
            for j in i + 1..n {
                let coefficients = frame.structure_constants(i, j).iter().map(|p| ring.format(p)).collect();
                report.brackets.push(BracketReport { i: i + 1, j: j + 1, coefficients });
            }
        }
        if opts.koszul {
            report.koszul = Some(logderiv::koszul_test(frame));
            lap("koszul", &mut timings);
        }
        if let Some(q) = operators {
            let cert = crate::spencer::h1_certificate(frame, q)?;
            report.spencer = Some(CertificateSummary::new(ring, &cert));
            lap("certificate", &mut timings);
        }
    }
    if opts.timings {
        report.timings = Some(timings);
    }
    Ok(report)
}

/// Names `δ1, δ2, …` for the frame basis.
pub fn basis_names(t: usize) -> Vec<String> {
    (1..=t).map(|i| format!("δ{i}")).collect()
}

pub fn format_u(ring: &PolyRing, u: &UElement) -> String {
    u.display(ring, &basis_names(u.rank()))
}

/// The presentation `(δᵢ + m αᵢ)` as strings.
pub fn presentation_strings(ring: &PolyRing, gens: &[UElement]) -> Vec<String> {
    gens.iter().map(|g| format_u(ring, g)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeExport {
    /// Source degree `−k` of the map `Sp⁻ᵏ → Sp⁻ᵏ⁺¹`.
    pub degree: i64,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    /// Entry `(r, c)` maps comma-separated PBW exponents to coefficients.
    pub matrix: Vec<Vec<BTreeMap<String, String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexExport {
    pub variables: Vec<String>,
    pub frame_size: usize,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<i64>,
    pub compositions_vanish: bool,
    pub maps: Vec<DegreeExport>,
}

fn label(s: &[usize], a: usize, rank: usize) -> String {
    let wedge = if s.is_empty() { "1".to_string() } else { s.iter().map(|i| format!("δ{}", i + 1)).collect::<Vec<_>>().join("∧") };
    if rank == 1 {
        wedge
    } else {
        format!("{wedge}⊗f{}", a + 1)
    }
}

fn u_terms(ring: &PolyRing, u: &UElement) -> BTreeMap<String, String> {
    u.terms()
        .map(|(gamma, p)| {
            let key = gamma.as_slice().iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            (key, ring.format(p))
        })
        .collect()
}

pub fn export_complex(ring: &PolyRing, lr: &LieRinehart, cx: &ComplexPresentation, twist: Option<i64>) -> ComplexExport {
    let labels = |k: usize| cx.labels(k).iter().map(|(s, a)| label(s, *a, cx.rank)).collect::<Vec<_>>();
    ComplexExport {
        variables: ring.names().to_vec(),
        frame_size: cx.frame_size,
        rank: cx.rank,
        twist,
        compositions_vanish: crate::spencer::compositions_vanish(lr, cx),
        maps: (1..=cx.frame_size)
            .map(|k| DegreeExport {
                degree: -(k as i64),
                rows: labels(k),
                columns: labels(k - 1),
                matrix: cx.differential(k).iter().map(|row| row.iter().map(|u| u_terms(ring, u)).collect()).collect(),
            })
            .collect(),
    }
}

/// `c` of a certificate, as an exact string.
pub fn constant_string(frame: &LogFrame) -> Option<String> {
    frame.certificate().constant().map(|c| format_rational(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::spencer::spencer_complex;

    #[test]
    fn xyz_analysis() {
        let ring = PolyRing::standard(3);
        let d = Divisor::new(ring.parse("x*y*z").unwrap()).unwrap();
        let opts = AnalysisOptions { koszul: true, search_bound: 20, ..Default::default() };
        let report = analyze(&ring, d, None, None, &opts).unwrap();
        assert_eq!(report.freeness.status, "certified");
        assert_eq!(report.alphas, vec!["1", "1", "1"]);
        assert_eq!(report.koszul, Some(true));
        assert!(report.timings.is_none());
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<AnalysisReport>(&json).unwrap(), report);
    }

    #[test]
    fn complex_export_shape() {
        let ring = PolyRing::standard(3);
        let lr = LieRinehart::from_frame(&catalog::normal_crossings(3));
        let ex = export_complex(&ring, &lr, &spencer_complex(&lr), None);
        assert!(ex.compositions_vanish);
        assert_eq!(ex.maps.len(), 3);
        assert_eq!(ex.maps[1].rows, vec!["δ1∧δ2", "δ1∧δ3", "δ2∧δ3"]);
        assert_eq!(ex.maps[0].columns, vec!["1"]);
        assert_eq!(ex.maps[0].matrix[0][0].get("1,0,0").map(String::as_str), Some("1"));
    }
}
