//! Subcommand implementations.

use std::fmt::Write as _;
use std::path::Path;

use asymptotics::{convergence_study, AsymptoticConstants};
use invariants::{invariant, InvariantReport, Method};
use lattice_core::{
    build_488, build_cycle, build_torus_grid, build_union_jack, kronecker, LatticeSize,
    SymmetricMatrix,
};
use spectra::{
    closed_form_l_spectrum, closed_form_q_spectrum, compare_spectra, numeric_spectrum,
    ClosedFormSpectrum, NumericSpectrum,
};

use crate::output::{emit, json_number_array, sig17};
use crate::{AppError, Format, KindArg, LatticeFamily, MatrixKind, MethodArg};

pub fn lattice_size(n: usize, m: usize) -> Result<LatticeSize, AppError> {
    LatticeSize::new(n, m).map_err(|e| AppError::Domain(e.to_string()))
}

/// `--sizes n1xm1,n2xm2,...`: syntax errors are usage errors, out-of-range
/// dimensions are domain errors (first invalid size wins).
pub fn parse_sizes(spec: &str) -> Result<Vec<LatticeSize>, AppError> {
    if spec.trim().is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|token| {
            let (n, m) = token
                .split_once('x')
                .ok_or_else(|| AppError::Usage(format!("malformed size '{token}', want NxM")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| AppError::Usage(format!("malformed size '{token}', want NxM")))?;
            let m: usize = m
                .trim()
                .parse()
                .map_err(|_| AppError::Usage(format!("malformed size '{token}', want NxM")))?;
            lattice_size(n, m)
        })
        .collect()
}

fn require_m(family: LatticeFamily, m: Option<usize>) -> Result<usize, AppError> {
    m.ok_or_else(|| AppError::Usage(format!("--m is required for --lattice {family}")))
}

fn build_graph(
    family: LatticeFamily,
    n: usize,
    m: Option<usize>,
) -> Result<lattice_core::Graph, AppError> {
    match family {
        LatticeFamily::Cycle => build_cycle(n).map_err(|e| AppError::Domain(e.to_string())),
        LatticeFamily::Grid => Ok(build_torus_grid(lattice_size(n, require_m(family, m)?)?)),
        LatticeFamily::Ujl => Ok(build_union_jack(lattice_size(n, require_m(family, m)?)?).0),
        LatticeFamily::TruncatedSquare => {
            Ok(build_488(lattice_size(n, require_m(family, m)?)?).graph)
        }
    }
}

pub fn cmd_build(
    family: LatticeFamily,
    n: usize,
    m: Option<usize>,
    format: Format,
    out: Option<&Path>,
) -> Result<(), AppError> {
    let graph = build_graph(family, n, m)?;
    let content = match format {
        Format::Edgelist => graph.to_edge_list(),
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for &(u, v) in graph.edges() {
                let _ = writeln!(s, "{u},{v}");
            }
            s
        }
        Format::Json => {
            let mut s = format!(
                "{{\"lattice\":\"{family}\",\"vertices\":{},\"edges\":{},\"edge_list\":[",
                graph.vertex_count(),
                graph.edge_count()
            );
            for (k, &(u, v)) in graph.edges().iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "[{u},{v}]");
            }
            s.push_str("]}\n");
            s
        }
    };
    emit(out, &content)
}

fn closed_spectrum_json(spec: &ClosedFormSpectrum, matrix: MatrixKind) -> String {
    let mut s = format!(
        "{{\"n\":{},\"m\":{},\"matrix\":\"{matrix}\",\"method\":\"closed\",\"entries\":[",
        spec.size().n(),
        spec.size().m()
    );
    for (k, e) in spec.entries().iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(
            s,
            "{{\"i\":{},\"j\":{},\"sign\":\"{}\",\"value\":{}}}",
            e.i,
            e.j,
            e.branch.sign_char(),
            sig17(e.value)
        );
    }
    s.push_str("]}\n");
    s
}

fn numeric_spectrum_csv(spec: &NumericSpectrum) -> String {
    let mut s = String::from("k,value\n");
    for (k, v) in spec.values().iter().enumerate() {
        let _ = writeln!(s, "{k},{}", sig17(*v));
    }
    s
}

pub fn cmd_spectrum(
    family: LatticeFamily,
    matrix: MatrixKind,
    method: MethodArg,
    n: usize,
    m: Option<usize>,
    format: Format,
    out: Option<&Path>,
) -> Result<(), AppError> {
    if format == Format::Edgelist {
        return Err(AppError::Usage(
            "--format edgelist only applies to the build subcommand".into(),
        ));
    }
    match method {
        MethodArg::Closed => {
            if family != LatticeFamily::Ujl {
                return Err(AppError::Usage(format!(
                    "--method closed is only available for --lattice ujl, not {family}"
                )));
            }
            let size = lattice_size(n, require_m(family, m)?)?;
            let spec = match matrix {
                MatrixKind::Q => closed_form_q_spectrum(size),
                MatrixKind::L => closed_form_l_spectrum(size),
            };
            let content = match format {
                Format::Csv => spec.to_csv(),
                Format::Json => closed_spectrum_json(&spec, matrix),
                Format::Edgelist => unreachable!(),
            };
            emit(out, &content)
        }
        MethodArg::Numeric => {
            let graph = build_graph(family, n, m)?;
            let sym = match matrix {
                MatrixKind::Q => graph.signless_laplacian(),
                MatrixKind::L => graph.laplacian(),
            };
            let spec = numeric_spectrum(&sym).map_err(AppError::from_spectra)?;
            let content = match format {
                Format::Csv => numeric_spectrum_csv(&spec),
                Format::Json => format!(
                    "{{\"lattice\":\"{family}\",\"matrix\":\"{matrix}\",\"method\":\"numeric\",\"order\":{},\"residual\":{},\"values\":{}}}\n",
                    spec.len(),
                    sig17(spec.residual()),
                    json_number_array(spec.values())
                ),
                Format::Edgelist => unreachable!(),
            };
            emit(out, &content)
        }
    }
}

fn report_json(report: &InvariantReport) -> String {
    format!(
        "{{\"n\":{},\"m\":{},\"kind\":\"{}\",\"method\":\"{}\",\"value\":{},\"per_site\":{}}}",
        report.size.n(),
        report.size.m(),
        report.kind,
        report.method,
        sig17(report.value),
        sig17(report.per_site)
    )
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_invariants(
    kind: KindArg,
    method: MethodArg,
    n: Option<usize>,
    m: Option<usize>,
    sizes: Option<&str>,
    format: Format,
    out: Option<&Path>,
) -> Result<(), AppError> {
    let sizes = match (sizes, n, m) {
        (Some(list), None, None) => parse_sizes(list)?,
        (None, Some(n), Some(m)) => vec![lattice_size(n, m)?],
        (None, _, _) => {
            return Err(AppError::Usage(
                "pass either --sizes or both --n and --m".into(),
            ))
        }
        (Some(_), _, _) => {
            return Err(AppError::Usage(
                "--sizes conflicts with --n/--m; pass one or the other".into(),
            ))
        }
    };
    let kind = kind.to_invariant();
    let method = match method {
        MethodArg::Closed => Method::ClosedForm,
        MethodArg::Numeric => Method::NumericOracle,
    };
    let reports = sizes
        .iter()
        .map(|&size| invariant(size, kind, method).map_err(AppError::from_spectra))
        .collect::<Result<Vec<_>, _>>()?;

    let content = match format {
        Format::Csv => {
            let mut s = String::from(InvariantReport::csv_header());
            s.push('\n');
            for r in &reports {
                s.push_str(&r.csv_row());
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let rows: Vec<String> = reports.iter().map(report_json).collect();
            format!("[{}]\n", rows.join(","))
        }
        Format::Edgelist => {
            return Err(AppError::Usage(
                "--format edgelist only applies to the build subcommand".into(),
            ))
        }
    };
    emit(out, &content)
}

pub fn cmd_asymptotic(tol: f64, format: Format, out: Option<&Path>) -> Result<(), AppError> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(AppError::Usage(format!(
            "--tol must be positive and finite, got {tol}"
        )));
    }
    let constants = AsymptoticConstants::compute(tol).map_err(AppError::from_quad)?;
    if !constants.converged() {
        return Err(AppError::Numerical(format!(
            "quadrature did not converge to tolerance {tol}"
        )));
    }
    let content = match format {
        Format::Csv => constants.to_csv(),
        Format::Json => {
            let mut s = constants.to_json();
            s.push('\n');
            s
        }
        Format::Edgelist => {
            return Err(AppError::Usage(
                "--format edgelist only applies to the build subcommand".into(),
            ))
        }
    };
    emit(out, &content)
}

pub fn cmd_convergence(
    kind: KindArg,
    sizes: &str,
    format: Format,
    out: Option<&Path>,
) -> Result<(), AppError> {
    let sizes = parse_sizes(sizes)?;
    let table = convergence_study(kind.to_invariant(), &sizes).map_err(AppError::from_quad)?;
    let content = match format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let rows: Vec<String> = table
                .rows
                .iter()
                .map(|r| {
                    format!(
                        "{{\"n\":{},\"m\":{},\"per_site\":{},\"gap_to_limit\":{}}}",
                        r.size.n(),
                        r.size.m(),
                        sig17(r.per_site),
                        sig17(r.gap_to_limit)
                    )
                })
                .collect();
            format!(
                "{{\"kind\":\"{}\",\"per_site_limit\":{},\"rows\":[{}]}}\n",
                table.kind,
                sig17(table.per_site_limit),
                rows.join(",")
            )
        }
        Format::Edgelist => {
            return Err(AppError::Usage(
                "--format edgelist only applies to the build subcommand".into(),
            ))
        }
    };
    emit(out, &content)
}

/// Runs every structural and spectral cross-check at one size and prints a
/// PASS/FAIL line per check.
pub fn cmd_verify(n: usize, m: usize) -> Result<(), AppError> {
    let size = lattice_size(n, m)?;
    let mut lines = Vec::new();
    let mut all_pass = true;
    let mut check = |name: &str, pass: bool, detail: String| {
        all_pass &= pass;
        lines.push(format!(
            "{} {name}: {detail}",
            if pass { "PASS" } else { "FAIL" }
        ));
    };

    // adjacency Kronecker form of the torus grid
    let a_cn = build_cycle(size.n()).unwrap().adjacency_matrix();
    let a_cm = build_cycle(size.m()).unwrap().adjacency_matrix();
    let grid_adj = build_torus_grid(size).adjacency_matrix();
    let kron_adj = kronecker(&SymmetricMatrix::identity(size.m()), &a_cn)
        .add(&kronecker(&a_cm, &SymmetricMatrix::identity(size.n())));
    check(
        "grid adjacency Kronecker identity",
        grid_adj == kron_adj,
        "exact integer equality".into(),
    );

    // face-incidence Gram identity
    let fvi = lattice_core::face_vertex_incidence(size);
    let b_n = SymmetricMatrix::identity(size.n()).scale(2).add(&a_cn);
    let b_m = SymmetricMatrix::identity(size.m()).scale(2).add(&a_cm);
    check(
        "face-incidence Gram Kronecker identity",
        fvi.gram() == kronecker(&b_m, &b_n),
        "exact integer equality".into(),
    );

    // incidence Gram equals Q
    let (ujl, _) = build_union_jack(size);
    let q = ujl.signless_laplacian();
    check(
        "incidence Gram equals signless Laplacian",
        ujl.incidence_matrix().gram() == q,
        "exact integer equality".into(),
    );

    // trace identities
    let expected_trace = 12.0 * size.sites() as f64;
    let q_closed = closed_form_q_spectrum(size);
    let l_closed = closed_form_l_spectrum(size);
    let q_gap = (q_closed.sum() - expected_trace).abs() / expected_trace;
    let l_gap = (l_closed.sum() - expected_trace).abs() / expected_trace;
    check(
        "spectral sums equal degree sum",
        q_gap <= 1e-9 && l_gap <= 1e-9,
        format!("relative gaps {q_gap:.2e} (Q), {l_gap:.2e} (L)"),
    );

    // closed form vs numeric oracle
    let q_numeric = numeric_spectrum(&q).map_err(AppError::from_spectra)?;
    let q_cmp = compare_spectra(&q_closed.values_sorted(), q_numeric.values(), 1e-8)
        .map_err(AppError::from_spectra)?;
    check(
        "closed-form Q-spectrum vs eigensolver",
        q_cmp.pass,
        format!("max |diff| {:.2e} (tol 1e-8)", q_cmp.max_abs_diff),
    );

    let l_numeric = numeric_spectrum(&ujl.laplacian()).map_err(AppError::from_spectra)?;
    let l_cmp = compare_spectra(&l_closed.values_sorted(), l_numeric.values(), 1e-8)
        .map_err(AppError::from_spectra)?;
    check(
        "closed-form L-spectrum vs eigensolver",
        l_cmp.pass,
        format!("max |diff| {:.2e} (tol 1e-8)", l_cmp.max_abs_diff),
    );

    let mut content = format!("verify {n}x{m}\n");
    for line in &lines {
        content.push_str(line);
        content.push('\n');
    }
    let _ = writeln!(
        content,
        "{}",
        if all_pass {
            "PASS all checks"
        } else {
            "FAIL some checks"
        }
    );
    emit(None, &content)?;
    if all_pass {
        Ok(())
    } else {
        Err(AppError::Numerical("verification failed".into()))
    }
}
