//! Command-line surface: input parsing, run configuration, and the
//! machine-readable report model.
//!
//! Reports serialize complex numbers as two-element `[re, im]` arrays and use
//! ordered maps throughout, so identical seeds and configurations produce
//! byte-identical JSON.

use crate::classify::{classify_symbol, Boundedness, Obstruction, Verdict};
use crate::mobius::{denjoy_wolff_iterate, symbol_conjugate_to_disc, AffineSymbol, RiemannMap};
use crate::smirnov::{kernel_k_omega, kernel_vector_omega, v_inverse_eval, SmirnovFunction};
use crate::suites::{run_suite, SuiteReport};
use crate::symmetry::{c_symmetry_residual, conj_j, conj_j_omega, conj_j_omega_psi};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate Riemann map: {0}")]
    DegenerateTau(String),
    #[error("point outside domain: {0}")]
    PointOutsideDomain(String),
    #[error("unknown suite '{0}' (expected kernels|adjoints|symmetry|oracle|obstruction)")]
    UnknownSuite(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl CliError {
    /// Process exit code for this error kind.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::UnknownSuite(_) => 2,
            CliError::DegenerateTau(_) => 3,
            CliError::PointOutsideDomain(_) => 4,
            CliError::Numeric(_) => 5,
        }
    }
}

/// Run configuration shared by all subcommands.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunConfig {
    pub order: usize,
    pub tol_matrix: f64,
    pub radius: f64,
    pub samples: usize,
    pub seed: u64,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Table,
}

impl RunConfig {
    pub fn new(
        order: usize,
        tol_matrix: Option<f64>,
        radius: Option<f64>,
        samples: Option<usize>,
        seed: u64,
        format: OutputFormat,
    ) -> Result<Self, CliError> {
        if !(8..=512).contains(&order) {
            return Err(CliError::Parse(format!(
                "order must lie in [8, 512], got {order}"
            )));
        }
        let radius = radius.unwrap_or(0.75);
        if !(0.0 < radius && radius < 1.0) {
            return Err(CliError::Parse(format!(
                "oracle radius must lie in (0, 1), got {radius}"
            )));
        }
        let samples = samples.unwrap_or(16 * order);
        if samples < 8 * order {
            return Err(CliError::Parse(format!(
                "samples must be at least 8·order = {}, got {samples}",
                8 * order
            )));
        }
        Ok(Self {
            order,
            tol_matrix: tol_matrix.unwrap_or(crate::tol::TOL_MATRIX),
            radius,
            samples,
            seed,
            format,
        })
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self::new(64, None, None, None, 0, OutputFormat::Json).unwrap()
    }
}

/// A complex literal: `RE`, `IMi`, or `RE±IMi` with decimal components
/// (`1.5-0.25i`, `i`, `-2`, `2i`, `1+i`).
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(CliError::Parse("empty complex literal".into()));
    }
    let bad = || CliError::Parse(format!("malformed complex literal '{text}'"));

    // split at the last sign that is not a leading sign or an exponent sign
    let chars: Vec<char> = s.chars().collect();
    let mut split = None;
    for i in (1..chars.len()).rev() {
        if chars[i] == '+' || chars[i] == '-' {
            let prev = chars[i - 1];
            if prev == 'e' || prev == 'E' {
                continue;
            }
            split = Some(i);
            break;
        }
    }
    let parse_real = |t: &str| -> Result<f64, CliError> {
        t.parse::<f64>().map_err(|_| bad())
    };
    let parse_imag = |t: &str| -> Result<f64, CliError> {
        let body = t.strip_suffix('i').ok_or_else(bad)?;
        match body {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => parse_real(other),
        }
    };
    match split {
        Some(i) if s.ends_with('i') => {
            let (re, im) = s.split_at(i);
            Ok(Complex64::new(parse_real(re)?, parse_imag(im)?))
        }
        Some(_) => Err(bad()),
        None => {
            if s.ends_with('i') {
                Ok(Complex64::new(0.0, parse_imag(&s)?))
            } else {
                Ok(Complex64::new(parse_real(&s)?, 0.0))
            }
        }
    }
}

/// A comma-separated quadruple `a,b,c,d` of complex literals.
pub fn parse_tau(spec: &str) -> Result<RiemannMap, CliError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Parse(format!(
            "expected a,b,c,d quadruple, got '{spec}'"
        )));
    }
    let vals: Vec<Complex64> = parts
        .iter()
        .map(|p| parse_complex(p))
        .collect::<Result<_, _>>()?;
    RiemannMap::from_coefficients(vals[0], vals[1], vals[2], vals[3])
        .map_err(|e| CliError::DegenerateTau(e.to_string()))
}

/// A `λ,r` pair of complex literals; `λ = 0` builds the constant symbol `≡ r`.
pub fn parse_symbol(spec: &str) -> Result<AffineSymbol, CliError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Parse(format!(
            "expected λ,r symbol pair, got '{spec}'"
        )));
    }
    let lambda = parse_complex(parts[0])?;
    let offset = parse_complex(parts[1])?;
    if lambda.norm() == 0.0 {
        Ok(AffineSymbol::constant(offset))
    } else {
        AffineSymbol::new(lambda, offset).map_err(|e| CliError::Parse(e.to_string()))
    }
}

fn cx(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Machine-readable report envelope emitted by every subcommand.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub config: RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<[[f64; 2]; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol: Option<SymbolJson>,
    pub verdicts: Vec<VerdictJson>,
    pub residuals: BTreeMap<String, f64>,
    pub witnesses: BTreeMap<String, serde_json::Value>,
    pub branch_choices: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SymbolJson {
    pub lambda: [f64; 2],
    pub offset: [f64; 2],
    pub constant: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerdictJson {
    pub name: String,
    pub status: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separation_ratio: Option<f64>,
}

impl Report {
    fn new(config: &RunConfig) -> Self {
        Report {
            config: config.clone(),
            tau: None,
            symbol: None,
            verdicts: Vec::new(),
            residuals: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            branch_choices: vec![
                "square roots take the principal branch at the series constant term; \
                 negative reals map to the positive imaginary axis"
                    .to_string(),
            ],
        }
    }

    fn with_tau(mut self, tau: &RiemannMap) -> Self {
        let m = tau.map();
        self.tau = Some([cx(m.a), cx(m.b), cx(m.c), cx(m.d)]);
        self
    }

    fn with_symbol(mut self, phi: &AffineSymbol) -> Self {
        self.symbol = Some(SymbolJson {
            lambda: cx(phi.slope()),
            offset: cx(phi.offset()),
            constant: phi.is_constant(),
        });
        self
    }

    fn push_verdict(&mut self, name: &str, verdict: &Verdict) {
        self.verdicts.push(VerdictJson {
            name: name.into(),
            status: verdict.status.as_str().into(),
            detail: verdict.detail.clone(),
            witness: verdict.witness.is_finite().then_some(verdict.witness),
            separation_ratio: verdict.separation_ratio,
        });
        if let Some(r) = verdict.matrix_residual {
            self.residuals.insert(format!("{name}_matrix"), r);
        }
    }
}

/// Full classification of one (τ, Φ) pair.
pub fn cmd_classify(
    tau_spec: &str,
    symbol_spec: &str,
    lambda: Option<&str>,
    config: &RunConfig,
) -> Result<Report, CliError> {
    let tau = parse_tau(tau_spec)?;
    let phi = parse_symbol(symbol_spec)?;
    let lambda = lambda.map(parse_complex).transpose()?;
    let classification = classify_symbol(&tau, &phi, config.order, lambda);
    let mut report = Report::new(config).with_tau(&tau).with_symbol(&phi);

    report.verdicts.push(VerdictJson {
        name: "case".into(),
        status: classification.case.as_str().into(),
        detail: "adjoint-theorem trichotomy".into(),
        witness: None,
        separation_ratio: None,
    });
    report.verdicts.push(VerdictJson {
        name: "selfmap".into(),
        status: if classification.selfmap { "yes" } else { "no" }.into(),
        detail: "Φ maps Ω into Ω (exact circle geometry)".into(),
        witness: None,
        separation_ratio: None,
    });
    report.push_verdict("hermitian", &classification.hermitian);
    report.push_verdict("unitary", &classification.unitary);
    report.push_verdict("normal", &classification.normal);
    report.push_verdict("jomega_symmetric", &classification.jomega_symmetric);
    report.verdicts.push(VerdictJson {
        name: "bounded".into(),
        status: classification.bounded.as_str().into(),
        detail: match classification.bounded {
            Boundedness::Assumed => "no computable criterion outside half-plane affine symbols",
            _ => "half-plane affine criterion",
        }
        .into(),
        witness: None,
        separation_ratio: None,
    });

    match (&classification.adjoint, &classification.adjoint_error) {
        (Some(pair), _) => {
            report.witnesses.insert(
                "adjoint_lambda".into(),
                serde_json::json!(cx(pair.lambda)),
            );
            report.witnesses.insert(
                "adjoint_symbol".into(),
                serde_json::json!({
                    "lambda": cx(pair.phi_star.slope()),
                    "offset": cx(pair.phi_star.offset()),
                }),
            );
            if let Some(res) = classification.adjoint_certificate {
                report.residuals.insert("adjoint_certificate".into(), res);
            }
        }
        (None, Some(err)) => {
            report
                .witnesses
                .insert("adjoint_error".into(), serde_json::json!(err));
        }
        (None, None) => {}
    }
    if let Some(fp) = classification.fixed_point {
        report
            .witnesses
            .insert("fixed_point_in_domain".into(), serde_json::json!(cx(fp)));
    }
    let (status, detail) = match &classification.obstruction {
        Obstruction::Obstructed { fixed_point, witness } => {
            report.witnesses.insert(
                "obstruction_partial_sums".into(),
                serde_json::json!(witness
                    .partial_sums
                    .iter()
                    .map(|(m, s)| serde_json::json!([m, s]))
                    .collect::<Vec<_>>()),
            );
            (
                "obstructed".to_string(),
                format!("non-automorphic self-map fixing {fixed_point} in unbounded Ω"),
            )
        }
        Obstruction::NotObstructed {
            automorphism,
            fixed_point_free_not_cs,
            constant_weight,
        } => {
            if let Some(wt) = constant_weight {
                report
                    .witnesses
                    .insert("constant_weight".into(), serde_json::json!(cx(*wt)));
            }
            let detail = if *automorphism {
                "symbol is an automorphism of Ω".to_string()
            } else if *fixed_point_free_not_cs {
                "no fixed point in Ω; still not complex symmetric (disc conjugate is \
                 fixed-point-free and non-automorphic)"
                    .to_string()
            } else {
                "hypotheses not met".to_string()
            };
            ("not_obstructed".to_string(), detail)
        }
        Obstruction::Inapplicable { reason } => ("inapplicable".to_string(), reason.clone()),
    };
    report.verdicts.push(VerdictJson {
        name: "cs_obstructed".into(),
        status,
        detail,
        witness: None,
        separation_ratio: None,
    });
    // record the realized weight branch for this symbol when constructible
    if !phi.is_constant() {
        if let Ok(disc_map) = symbol_conjugate_to_disc(&tau, &phi) {
            if let Ok(weight) = crate::smirnov::weight_series(&tau, &disc_map, config.order) {
                report.branch_choices.push(format!(
                    "weight (τ'/τ'∘φ)^(1/2) constant term: {}",
                    weight.coeff(0)
                ));
            }
        }
    }
    Ok(report)
}

/// Kernel value at (u, w) with the two-route diagnostic.
pub fn cmd_kernel(
    tau_spec: &str,
    u_spec: &str,
    w_spec: &str,
    config: &RunConfig,
) -> Result<Report, CliError> {
    let tau = parse_tau(tau_spec)?;
    let u = parse_complex(u_spec)?;
    let w = parse_complex(w_spec)?;
    let closed = kernel_k_omega(&tau, u, w)
        .map_err(|e| CliError::PointOutsideDomain(e.to_string()))?;
    let kernel = kernel_vector_omega(&tau, u, config.order)
        .map_err(|e| CliError::PointOutsideDomain(e.to_string()))?;
    let f = SmirnovFunction {
        tau,
        vcoeffs: kernel.vcoeffs,
    };
    let via_v =
        v_inverse_eval(&f, w).map_err(|e| CliError::PointOutsideDomain(e.to_string()))?;
    let mut report = Report::new(config).with_tau(&tau);
    report
        .witnesses
        .insert("closed_form".into(), serde_json::json!(cx(closed)));
    report
        .witnesses
        .insert("v_route".into(), serde_json::json!(cx(via_v)));
    report
        .residuals
        .insert("two_route_gap".into(), (closed - via_v).norm());
    Ok(report)
}

/// Adjoint symbol and matrix certificate.
pub fn cmd_adjoint(
    tau_spec: &str,
    symbol_spec: &str,
    lambda: Option<&str>,
    config: &RunConfig,
) -> Result<Report, CliError> {
    let tau = parse_tau(tau_spec)?;
    let phi = parse_symbol(symbol_spec)?;
    let lambda = lambda.map(parse_complex).transpose()?;
    let pair = crate::classify::adjoint_symbol(&tau, &phi, lambda)
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    let certificate = crate::classify::adjoint_certificate_residual(&tau, &phi, &pair, config.order)
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    let mut report = Report::new(config).with_tau(&tau).with_symbol(&phi);
    report.verdicts.push(VerdictJson {
        name: "case".into(),
        status: pair.case.as_str().into(),
        detail: "adjoint-theorem trichotomy".into(),
        witness: None,
        separation_ratio: None,
    });
    report
        .witnesses
        .insert("lambda".into(), serde_json::json!(cx(pair.lambda)));
    report.witnesses.insert(
        "phi_star".into(),
        serde_json::json!({
            "lambda": cx(pair.phi_star.slope()),
            "offset": cx(pair.phi_star.offset()),
        }),
    );
    report
        .residuals
        .insert("adjoint_certificate".into(), certificate);
    Ok(report)
}

/// Conjugation construction and C-symmetry residuals for one symbol.
pub fn cmd_symmetry(
    tau_spec: &str,
    symbol_spec: &str,
    psi_spec: Option<&str>,
    config: &RunConfig,
) -> Result<Report, CliError> {
    let tau = parse_tau(tau_spec)?;
    let phi = parse_symbol(symbol_spec)?;
    let mut report = Report::new(config).with_tau(&tau).with_symbol(&phi);
    let j = conj_j(config.order);
    let j_omega = conj_j_omega(&tau, config.order);
    report
        .residuals
        .insert("j_isometry".into(), j.isometry_residual());
    report
        .residuals
        .insert("j_involution".into(), j.involution_residual());
    report
        .residuals
        .insert("jomega_isometry".into(), j_omega.isometry_residual());
    report
        .residuals
        .insert("jomega_involution".into(), j_omega.involution_residual());
    if let Some(pw) = j_omega.pointwise_residual() {
        report.residuals.insert("jomega_pointwise".into(), pw);
    }
    match crate::smirnov::w_phi_matrix(&tau, &phi, config.order) {
        Ok(w) => {
            report
                .residuals
                .insert("csym_j".into(), c_symmetry_residual(&w, &j));
            report
                .residuals
                .insert("csym_jomega".into(), c_symmetry_residual(&w, &j_omega));
        }
        Err(e) => {
            report
                .witnesses
                .insert("w_phi_error".into(), serde_json::json!(e.to_string()));
        }
    }
    if let Some(psi_spec) = psi_spec {
        let psi = parse_symbol(psi_spec)?;
        match conj_j_omega_psi(&tau, &psi, config.order) {
            Ok(rep) => {
                report
                    .residuals
                    .insert("jomega_psi_isometry".into(), rep.isometry_residual());
                report
                    .residuals
                    .insert("jomega_psi_involution".into(), rep.involution_residual());
                if let Some(pw) = rep.pointwise_residual() {
                    report.residuals.insert("jomega_psi_pointwise".into(), pw);
                }
                let big = rep.matrix().order();
                if let Ok(w_big) = crate::smirnov::w_phi_matrix(&tau, &phi, big) {
                    let w_big = w_big.with_trusted_block(rep.trusted_block());
                    report
                        .residuals
                        .insert("csym_jomega_psi".into(), c_symmetry_residual(&w_big, &rep));
                }
            }
            Err(e) => {
                report
                    .witnesses
                    .insert("jomega_psi_error".into(), serde_json::json!(e.to_string()));
            }
        }
    }
    Ok(report)
}

/// Denjoy-Wolff iteration of the disc conjugate of Φ.
pub fn cmd_iterate(
    tau_spec: &str,
    symbol_spec: &str,
    z0_spec: Option<&str>,
    max_iter: usize,
    step_tol: f64,
    config: &RunConfig,
) -> Result<Report, CliError> {
    let tau = parse_tau(tau_spec)?;
    let phi = parse_symbol(symbol_spec)?;
    let disc_map = symbol_conjugate_to_disc(&tau, &phi)
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    let z0 = z0_spec.map(parse_complex).transpose()?.unwrap_or(Complex64::ZERO);
    let run = denjoy_wolff_iterate(&disc_map, z0, max_iter, step_tol)
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    let mut report = Report::new(config).with_tau(&tau).with_symbol(&phi);
    report
        .witnesses
        .insert("limit".into(), serde_json::json!(cx(run.limit)));
    report
        .witnesses
        .insert("limit_on_omega".into(), serde_json::json!(cx(tau.apply(run.limit))));
    report
        .witnesses
        .insert("iterations".into(), serde_json::json!(run.iterations));
    report.witnesses.insert(
        "trail".into(),
        serde_json::json!(run.trail.iter().map(|z| cx(*z)).collect::<Vec<_>>()),
    );
    Ok(report)
}

/// Runs a named verification suite.
pub fn cmd_verify(suite: &str, config: &RunConfig) -> Result<Vec<SuiteReport>, CliError> {
    run_suite(
        suite,
        config.order,
        config.seed,
        config.samples,
        config.radius,
    )
    .ok_or_else(|| CliError::UnknownSuite(suite.into()))
}

/// Renders a report in the selected format.
pub fn render_report(report: &Report) -> String {
    match report.config.format {
        OutputFormat::Json => serde_json::to_string(report).expect("report serializes"),
        OutputFormat::Table => {
            let mut out = String::new();
            for v in &report.verdicts {
                out.push_str(&format!("{:<20} {:<22} {}\n", v.name, v.status, v.detail));
            }
            for (k, r) in &report.residuals {
                out.push_str(&format!("{k:<28} {r:.3e}\n"));
            }
            out
        }
    }
}
