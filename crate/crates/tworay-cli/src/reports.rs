//! Report structures for every subcommand, with human text rendering.
//!
//! Each report derives `Serialize`, and the JSON document contains every
//! field the human rendering prints, so `--json` output is lossless.

use serde::Serialize;
use std::fmt::Write as _;
use tworay::cones2d::Ray;
use tworay::game::DEFAULT_SECTION_BOUND;
use tworay::game::{GameTrace, MoriCheck, RestrictionResult, TraceMode, Verdict};
use tworay::graded_toric::{
    adjunction_anticanonical, anticanonical_ambient, chamber_fan, gorenstein_check, k_condition,
    mobile_assumption_holds, mobile_cone_toric, model_from_chamber, Bidegree, GradingError,
};
use tworay::monomials::{
    base_locus, fibre_classes, local_chart, local_support, smoothness_certificate,
    transform_content, witness_derivative_is_nonzero, LinearSystem, MonomialError, Stratum,
    DEFAULT_SUPPORT_BOUND,
};
use tworay::scenario::Scenario;
use tworay::sectionring::{format_weights, section_generators, SectionError};

#[derive(Debug)]
pub enum ReportError {
    Grading(GradingError),
    Monomial(MonomialError),
    Section(SectionError),
    Game(tworay::game::GameError),
    Apply(tworay::scenario::ApplyError),
    Usage(String),
}

impl std::fmt::Display for ReportError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReportError::Grading(e) => write!(f, "{e}"),
            ReportError::Monomial(e) => write!(f, "{e}"),
            ReportError::Section(e) => write!(f, "{e}"),
            ReportError::Game(e) => write!(f, "{e}"),
            ReportError::Apply(e) => write!(f, "{e}"),
            ReportError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<GradingError> for ReportError {
    fn from(e: GradingError) -> Self {
        ReportError::Grading(e)
    }
}
impl From<MonomialError> for ReportError {
    fn from(e: MonomialError) -> Self {
        ReportError::Monomial(e)
    }
}
impl From<SectionError> for ReportError {
    fn from(e: SectionError) -> Self {
        ReportError::Section(e)
    }
}
impl From<tworay::game::GameError> for ReportError {
    fn from(e: tworay::game::GameError) -> Self {
        ReportError::Game(e)
    }
}
impl From<tworay::scenario::ApplyError> for ReportError {
    fn from(e: tworay::scenario::ApplyError) -> Self {
        ReportError::Apply(e)
    }
}

fn system_of(scenario: &Scenario) -> Result<Option<LinearSystem>, ReportError> {
    Ok(scenario.system()?)
}

// ---------------------------------------------------------------- describe

#[derive(Serialize)]
pub struct DescribeReport {
    pub command: &'static str,
    pub vars: Vec<String>,
    pub rows: [Vec<i64>; 2],
    pub chamber: String,
    pub irrelevant_ideal: String,
    pub fan_rays: Vec<String>,
    pub chambers: Vec<ChamberInfo>,
    pub effective_cone: String,
    pub mobile_cone: String,
    pub anticanonical_ambient: String,
    pub hypersurface: Option<HypersurfaceInfo>,
}

#[derive(Serialize)]
pub struct ChamberInfo {
    pub cone: String,
    pub irrelevant_ideal: String,
}

#[derive(Serialize)]
pub struct HypersurfaceInfo {
    pub degree: String,
    pub anticanonical: String,
    pub k_condition: Option<String>,
    pub k_condition_note: Option<String>,
    pub gorenstein: String,
    pub mobile_assumption_warning: Option<String>,
}

pub fn describe(scenario: &Scenario) -> Result<DescribeReport, ReportError> {
    let g = &scenario.variety.grading;
    let fan = chamber_fan(g);
    let model = scenario.model();
    let chambers = fan
        .chambers
        .iter()
        .map(|&c| {
            let m = model_from_chamber(g, c)?;
            Ok(ChamberInfo {
                cone: c.to_string(),
                irrelevant_ideal: m.irrelevant_ideal(),
            })
        })
        .collect::<Result<Vec<_>, GradingError>>()?;
    let hypersurface = match &scenario.hypersurface {
        None => None,
        Some(h) => {
            let antican = adjunction_anticanonical(g, h.degree);
            let (verdict, note) = match k_condition(g, h.degree) {
                Ok(v) => (Some(v.to_string()), None),
                Err(GradingError::KTrivialHypersurface) => {
                    (None, Some("hypersurface is K-trivial".to_string()))
                }
                Err(e) => return Err(e.into()),
            };
            let warning = match mobile_assumption_holds(g, h.degree) {
                Ok(true) => None,
                Ok(false) => Some(format!(
                    "hypersurface class {} is not interior to the ambient mobile cone; \
                     the mobile-cone identification is an extra assumption",
                    h.degree
                )),
                Err(_) => None,
            };
            Some(HypersurfaceInfo {
                degree: h.degree.to_string(),
                anticanonical: antican.to_string(),
                k_condition: verdict,
                k_condition_note: note,
                gorenstein: gorenstein_check(g, h.degree).to_string(),
                mobile_assumption_warning: warning,
            })
        }
    };
    Ok(DescribeReport {
        command: "describe",
        vars: g.vars().to_vec(),
        rows: [
            g.cols().iter().map(|c| c.d1).collect(),
            g.cols().iter().map(|c| c.d2).collect(),
        ],
        chamber: scenario.variety.chamber.to_string(),
        irrelevant_ideal: model.irrelevant_ideal(),
        fan_rays: fan.rays.iter().map(|r| r.to_string()).collect(),
        chambers,
        effective_cone: g.effective_cone().to_string(),
        mobile_cone: mobile_cone_toric(g)?.to_string(),
        anticanonical_ambient: anticanonical_ambient(g).to_string(),
        hypersurface,
    })
}

pub fn render_describe(r: &DescribeReport) -> String {
    let mut out = String::new();
    let width = r
        .vars
        .iter()
        .map(|v| v.len())
        .chain(r.rows.iter().flatten().map(|n| n.to_string().len()))
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s:>width$}");
    writeln!(out, "grading ({} variables):", r.vars.len()).unwrap();
    writeln!(
        out,
        "  {}",
        r.vars.iter().map(|v| pad(v)).collect::<Vec<_>>().join(" ")
    )
    .unwrap();
    for row in &r.rows {
        writeln!(
            out,
            "  {}",
            row.iter()
                .map(|n| pad(&n.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        )
        .unwrap();
    }
    writeln!(
        out,
        "chamber: {}   irrelevant ideal: {}",
        r.chamber, r.irrelevant_ideal
    )
    .unwrap();
    writeln!(out, "chamber fan rays: {}", r.fan_rays.join(" ")).unwrap();
    writeln!(out, "chambers:").unwrap();
    for c in &r.chambers {
        writeln!(out, "  {}   {}", c.cone, c.irrelevant_ideal).unwrap();
    }
    writeln!(out, "effective cone: {}", r.effective_cone).unwrap();
    writeln!(out, "mobile cone:    {}", r.mobile_cone).unwrap();
    writeln!(out, "-K of ambient:  {}", r.anticanonical_ambient).unwrap();
    if let Some(h) = &r.hypersurface {
        writeln!(out, "hypersurface degree: {}", h.degree).unwrap();
        writeln!(out, "-K of hypersurface:  {}", h.anticanonical).unwrap();
        match (&h.k_condition, &h.k_condition_note) {
            (Some(v), _) => writeln!(out, "K-condition: {v}").unwrap(),
            (None, Some(n)) => writeln!(out, "K-condition: n/a ({n})").unwrap(),
            (None, None) => {}
        }
        writeln!(out, "Gorenstein: {}", h.gorenstein).unwrap();
        if let Some(w) = &h.mobile_assumption_warning {
            writeln!(out, "warning: {w}").unwrap();
        }
    } else {
        writeln!(out, "no hypersurface block: ambient report only").unwrap();
    }
    out
}

// --------------------------------------------------------------- monomials

#[derive(Serialize)]
pub struct MonomialsReport {
    pub command: &'static str,
    pub degree: String,
    pub class_count: usize,
    pub dimension: u64,
    pub columns: Vec<MonomialColumn>,
    pub system: Option<SystemTable>,
}

#[derive(Serialize)]
pub struct MonomialColumn {
    pub coeff_degree: u32,
    pub entries: Vec<String>,
}

#[derive(Serialize)]
pub struct SystemTable {
    pub class_count: usize,
    pub constrained_count: usize,
    pub dimension: u64,
    /// Columns by the degree of the general coefficient factor; constrained
    /// entries carry their u-power prefix.
    pub columns: Vec<MonomialColumn>,
    pub missing: Vec<String>,
}

pub fn monomials(
    scenario: &Scenario,
    degree: Option<Bidegree>,
) -> Result<MonomialsReport, ReportError> {
    let g = &scenario.variety.grading;
    let degree = match (degree, &scenario.hypersurface) {
        (Some(d), _) => d,
        (None, Some(h)) => h.degree,
        (None, None) => {
            return Err(ReportError::Usage(
                "no hypersurface block; pass --degree \"(d1,d2)\"".to_string(),
            ))
        }
    };
    let classes = fibre_classes(g, degree)?;
    let mut columns: Vec<MonomialColumn> = Vec::new();
    for (fibre, k) in &classes {
        let entry = fibre.format(g.vars());
        match columns.iter_mut().find(|c| c.coeff_degree == *k) {
            Some(c) => c.entries.push(entry),
            None => columns.push(MonomialColumn {
                coeff_degree: *k,
                entries: vec![entry],
            }),
        }
    }
    columns.sort_by_key(|c| c.coeff_degree);
    let dimension: u64 = classes.iter().map(|(_, k)| *k as u64 + 1).sum();

    let system = match &scenario.hypersurface {
        Some(h) if h.degree == degree => {
            let sys = system_of(scenario)?.expect("hypersurface present");
            let u = g.base_vars()[0];
            let mut cols: Vec<MonomialColumn> = Vec::new();
            for class in &sys.classes {
                let mut exps = class.fibre.0.clone();
                exps[u] += class.u_min;
                let entry = tworay::monomials::ExponentVector(exps).format(g.vars());
                let residual = class.coeff_deg - class.u_min;
                match cols.iter_mut().find(|c| c.coeff_degree == residual) {
                    Some(c) => c.entries.push(entry),
                    None => cols.push(MonomialColumn {
                        coeff_degree: residual,
                        entries: vec![entry],
                    }),
                }
            }
            cols.sort_by_key(|c| c.coeff_degree);
            let missing = sys
                .missing_fibres()?
                .iter()
                .map(|f| f.format(g.vars()))
                .collect();
            Some(SystemTable {
                class_count: sys.classes.len(),
                constrained_count: sys.classes.iter().filter(|c| c.u_min > 0).count(),
                dimension: sys.monomial_dimension(),
                columns: cols,
                missing,
            })
        }
        _ => None,
    };

    Ok(MonomialsReport {
        command: "monomials",
        degree: degree.to_string(),
        class_count: classes.len(),
        dimension,
        columns,
        system,
    })
}

fn render_columns(out: &mut String, columns: &[MonomialColumn], label: &str) {
    for col in columns {
        writeln!(
            out,
            "  {label} {:>2}: {}",
            col.coeff_degree,
            col.entries.join("  ")
        )
        .unwrap();
    }
}

pub fn render_monomials(r: &MonomialsReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "monomial basis of O{}: {} fibre monomials, dimension {}",
        r.degree, r.class_count, r.dimension
    )
    .unwrap();
    render_columns(&mut out, &r.columns, "coeff deg");
    if let Some(sys) = &r.system {
        writeln!(
            out,
            "hypersurface system: {} classes ({} constrained), dimension {}",
            sys.class_count, sys.constrained_count, sys.dimension
        )
        .unwrap();
        render_columns(&mut out, &sys.columns, "general deg");
        if sys.missing.is_empty() {
            writeln!(out, "  missing monomials: none").unwrap();
        } else {
            writeln!(out, "  missing monomials: {}", sys.missing.join(", ")).unwrap();
        }
    }
    out
}

// --------------------------------------------------------------- baselocus

#[derive(Serialize)]
pub struct BaselocusReport {
    pub command: &'static str,
    pub degree: String,
    pub seed: u64,
    pub strata: Vec<StratumInfo>,
}

#[derive(Serialize)]
pub struct StratumInfo {
    pub zeros: String,
    pub witness: Option<WitnessInfo>,
    pub status: String,
}

#[derive(Serialize)]
pub struct WitnessInfo {
    pub monomial: String,
    pub linear_var: String,
    pub derivative_spot_check: bool,
}

pub fn baselocus(scenario: &Scenario, seed: u64) -> Result<BaselocusReport, ReportError> {
    let system = system_of(scenario)?
        .ok_or_else(|| ReportError::Usage("baselocus needs a hypersurface block".to_string()))?;
    let model = scenario.model();
    let g = &scenario.variety.grading;
    let strata = base_locus(&model, &system)?;
    let mut infos = Vec::new();
    for st in &strata {
        let witness = smoothness_certificate(&model, &system, st)?;
        let info = match witness {
            Some(w) => StratumInfo {
                zeros: st.display_in(g),
                status: format!(
                    "generic member smooth along the open stratum (linear in {})",
                    w.linear_var
                ),
                witness: Some(WitnessInfo {
                    monomial: w.class.fibre.format(g.vars()),
                    derivative_spot_check: witness_derivative_is_nonzero(
                        &system,
                        st,
                        &w.linear_var,
                        seed,
                    )?,
                    linear_var: w.linear_var,
                }),
            },
            None => StratumInfo {
                zeros: st.display_in(g),
                witness: None,
                status: "no witness: singularity candidate".to_string(),
            },
        };
        infos.push(info);
    }
    Ok(BaselocusReport {
        command: "baselocus",
        degree: system.degree.to_string(),
        seed,
        strata: infos,
    })
}

pub fn render_baselocus(r: &BaselocusReport) -> String {
    let mut out = String::new();
    writeln!(out, "base locus of the system of degree {}:", r.degree).unwrap();
    for s in &r.strata {
        writeln!(out, "  stratum {}: {}", s.zeros, s.status).unwrap();
        if let Some(w) = &s.witness {
            writeln!(
                out,
                "    witness {} (derivative spot check with seed {}: {})",
                w.monomial,
                r.seed,
                if w.derivative_spot_check {
                    "nonzero"
                } else {
                    "ZERO"
                }
            )
            .unwrap();
        }
    }
    out
}

// -------------------------------------------------------------- localchart

#[derive(Serialize)]
pub struct LocalchartReport {
    pub command: &'static str,
    pub nonzero: (String, String),
    pub coords: Vec<ChartCoord>,
    pub support: Option<SupportInfo>,
}

#[derive(Serialize)]
pub struct ChartCoord {
    pub var: String,
    pub alpha: i64,
    pub beta: i64,
}

#[derive(Serialize)]
pub struct SupportInfo {
    pub min_total_degree: Option<u32>,
    pub degree_bound: u32,
    pub parts: Vec<SupportPart>,
    pub pure_powers: Vec<(String, Option<u32>)>,
    pub heuristic_note: Option<String>,
}

#[derive(Serialize)]
pub struct SupportPart {
    pub degree: u32,
    pub monomials: Vec<String>,
}

pub fn localchart(
    scenario: &Scenario,
    nonzero: (&str, &str),
    bound: Option<u32>,
) -> Result<LocalchartReport, ReportError> {
    let g = &scenario.variety.grading;
    let stratum = Stratum::new(
        g.vars()
            .iter()
            .filter(|v| v.as_str() != nonzero.0 && v.as_str() != nonzero.1)
            .cloned(),
    )?;
    let chart = local_chart(g, nonzero, &stratum)?;
    let support = match system_of(scenario)? {
        Some(system) => {
            let report = local_support(&system, &chart, bound.unwrap_or(DEFAULT_SUPPORT_BOUND))?;
            let chart_vars = report.chart_vars.clone();
            Some(SupportInfo {
                min_total_degree: report.min_total_degree,
                degree_bound: report.degree_bound,
                parts: report
                    .parts
                    .iter()
                    .map(|(d, ms)| SupportPart {
                        degree: *d,
                        monomials: ms.iter().map(|m| m.format(&chart_vars)).collect(),
                    })
                    .collect(),
                pure_powers: report.pure_powers.clone(),
                heuristic_note: report.heuristic_note.clone(),
            })
        }
        None => None,
    };
    Ok(LocalchartReport {
        command: "localchart",
        nonzero: (nonzero.0.to_string(), nonzero.1.to_string()),
        coords: chart
            .coords
            .iter()
            .map(|(v, a, b)| ChartCoord {
                var: v.clone(),
                alpha: *a,
                beta: *b,
            })
            .collect(),
        support,
    })
}

fn chart_fraction(c: &ChartCoord, a: &str, b: &str) -> String {
    let factor = |v: &str, e: i64| match e {
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let mut num = vec![c.var.clone()];
    let mut den = Vec::new();
    for (v, e) in [(a, c.alpha), (b, c.beta)] {
        match e.cmp(&0) {
            std::cmp::Ordering::Greater => den.push(factor(v, e)),
            std::cmp::Ordering::Less => num.push(factor(v, -e)),
            std::cmp::Ordering::Equal => {}
        }
    }
    let num = num.join("*");
    match den.len() {
        0 => num,
        1 => format!("{num} / {}", den[0]),
        _ => format!("{num} / ({})", den.join("*")),
    }
}

pub fn render_localchart(r: &LocalchartReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "chart at ({} != 0, {} != 0):",
        r.nonzero.0, r.nonzero.1
    )
    .unwrap();
    for c in &r.coords {
        writeln!(
            out,
            "  {} -> {}   (exponents {},{})",
            c.var,
            chart_fraction(c, &r.nonzero.0, &r.nonzero.1),
            c.alpha,
            c.beta
        )
        .unwrap();
    }
    if let Some(s) = &r.support {
        writeln!(out, "localized support (degrees up to {}):", s.degree_bound).unwrap();
        match s.min_total_degree {
            Some(d) => writeln!(out, "  minimal total degree: {d}").unwrap(),
            None => writeln!(out, "  empty system").unwrap(),
        }
        for p in &s.parts {
            writeln!(out, "  degree {}: {}", p.degree, p.monomials.join("  ")).unwrap();
        }
        let pure: Vec<String> = s
            .pure_powers
            .iter()
            .map(|(v, p)| match p {
                Some(p) => format!("{v}:{p}"),
                None => format!("{v}:-"),
            })
            .collect();
        writeln!(out, "  minimal pure powers: {}", pure.join("  ")).unwrap();
        if let Some(note) = &s.heuristic_note {
            writeln!(out, "  note: {note}").unwrap();
        }
    }
    out
}

// -------------------------------------------------------------------- game

#[derive(Serialize)]
pub struct GameReport {
    pub command: &'static str,
    pub full_trace: bool,
    pub anticanonical: String,
    pub models: Vec<String>,
    pub steps: Vec<StepInfo>,
    pub verdict: VerdictInfo,
    pub inconclusive_steps: Vec<usize>,
}

#[derive(Serialize)]
pub struct StepInfo {
    pub ray: String,
    pub kind: String,
    pub toric_type: Vec<i64>,
    pub restriction: String,
    pub restricted_weights: Option<Vec<i64>>,
    pub k_sign: String,
    pub eliminated: Option<String>,
    pub inconclusive: bool,
    pub mori: String,
}

#[derive(Serialize)]
pub struct VerdictInfo {
    pub outcome: String,
    pub detail: String,
    pub end: Option<EndInfo>,
}

#[derive(Serialize)]
pub struct EndInfo {
    pub ray: String,
    pub kind: String,
    pub generators: Vec<String>,
    pub ambient: String,
    pub image_degree: Option<u32>,
    pub fano_index: Option<i64>,
    pub note: Option<String>,
}

pub fn game(
    scenario: &Scenario,
    full_trace: bool,
    bound: Option<u32>,
) -> Result<GameReport, ReportError> {
    let system = system_of(scenario)?
        .ok_or_else(|| ReportError::Usage("game needs a hypersurface block".to_string()))?;
    let g = &scenario.variety.grading;
    let model = scenario.model();
    let mode = if full_trace {
        TraceMode::FullTrace
    } else {
        TraceMode::StopAtFirstFailure
    };
    let trace = tworay::game::run_game(
        &model,
        &system,
        mode,
        bound.unwrap_or(DEFAULT_SECTION_BOUND),
    )?;
    let antican = adjunction_anticanonical(g, system.degree);
    Ok(build_game_report(g, &trace, antican, full_trace))
}

fn build_game_report(
    g: &tworay::graded_toric::GradingMatrix,
    trace: &GameTrace,
    antican: Bidegree,
    full_trace: bool,
) -> GameReport {
    let steps: Vec<StepInfo> = trace
        .steps
        .iter()
        .map(|s| {
            let c = &s.crossing;
            let (restriction, restricted_weights) = match &c.result {
                RestrictionResult::RestrictedSmall { weights } => {
                    let ws: Vec<i64> = weights.iter().map(|(_, w)| *w).collect();
                    (
                        format!(
                            "restricted small ({})",
                            ws.iter()
                                .map(|w| w.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                        Some(ws),
                    )
                }
                RestrictionResult::IsomorphismDisjoint { witness } => (
                    format!(
                        "isomorphism: crossing disjoint from the hypersurface (witness {witness})"
                    ),
                    None,
                ),
                RestrictionResult::Divisorial => ("divisorial".to_string(), None),
                RestrictionResult::Fibration => ("fibration".to_string(), None),
            };
            StepInfo {
                ray: c.parent.wall.to_string(),
                kind: c.parent.kind.to_string(),
                toric_type: c.parent.toric_type(),
                restriction,
                restricted_weights,
                k_sign: c.k_sign.to_string(),
                eliminated: c.eliminated.clone(),
                inconclusive: c.inconclusive,
                mori: match &s.mori {
                    MoriCheck::Ok => "ok".to_string(),
                    MoriCheck::OkWithNote(n) => format!("ok ({n})"),
                    MoriCheck::Fail(f) => format!("FAIL: {f}"),
                },
            }
        })
        .collect();
    let verdict = match &trace.verdict {
        Verdict::SarkisovLink { end } => VerdictInfo {
            outcome: "sarkisov_link".to_string(),
            detail: format!("link: {} end at ray {}", end.kind, end.ray),
            end: Some(EndInfo {
                ray: end.ray.to_string(),
                kind: end.kind.to_string(),
                generators: end
                    .presentation
                    .generators
                    .iter()
                    .map(|(e, _)| e.format(g.vars()))
                    .collect(),
                ambient: format_weights(&end.ambient_weights),
                image_degree: end.image.as_ref().map(|i| i.weight),
                fano_index: end.image.as_ref().map(|i| i.fano_index),
                note: end.note.clone(),
            }),
        },
        Verdict::FailsMoriCategory { reason, step } => VerdictInfo {
            outcome: "fails_mori_category".to_string(),
            detail: format!("game leaves the Mori category at step {step}: {reason}"),
            end: None,
        },
        Verdict::KTrivialEnd { step } => VerdictInfo {
            outcome: "k_trivial_end".to_string(),
            detail: format!("game ends K-trivially at step {step}"),
            end: None,
        },
    };
    GameReport {
        command: "game",
        full_trace,
        anticanonical: antican.to_string(),
        models: trace.models.iter().map(|m| m.irrelevant_ideal()).collect(),
        inconclusive_steps: steps
            .iter()
            .enumerate()
            .filter(|(_, s)| s.inconclusive)
            .map(|(i, _)| i)
            .collect(),
        steps,
        verdict,
    }
}

pub fn render_game(r: &GameReport) -> String {
    let mut out = String::new();
    writeln!(out, "2-ray game (-K of hypersurface: {})", r.anticanonical).unwrap();
    writeln!(out, "models: {}", r.models.join("  ->  ")).unwrap();
    for (i, s) in r.steps.iter().enumerate() {
        let tt = s
            .toric_type
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(
            out,
            "step {i}: ray {} [{}], toric type ({tt})",
            s.ray, s.kind
        )
        .unwrap();
        if let Some(v) = &s.eliminated {
            write!(out, "; eliminated {v}").unwrap();
        }
        write!(out, "; {}", s.restriction).unwrap();
        if s.restricted_weights.is_some() {
            write!(out, " {}", s.k_sign).unwrap();
        }
        if s.inconclusive {
            write!(out, " [restriction rule inconclusive]").unwrap();
        }
        writeln!(out, "; mori: {}", s.mori).unwrap();
    }
    writeln!(out, "verdict: {}", r.verdict.detail).unwrap();
    if let Some(end) = &r.verdict.end {
        writeln!(out, "  image generators: {}", end.generators.join(", ")).unwrap();
        write!(out, "  ambient: {}", end.ambient).unwrap();
        if let (Some(d), Some(i)) = (end.image_degree, end.fano_index) {
            write!(out, "; image degree {d}; Fano index {i}").unwrap();
        }
        writeln!(out).unwrap();
        if let Some(n) = &end.note {
            writeln!(out, "  note: {n}").unwrap();
        }
    }
    out
}

// ---------------------------------------------------------------- sections

#[derive(Serialize)]
pub struct SectionsReport {
    pub command: &'static str,
    pub ray: String,
    pub bound: u32,
    pub generators: Vec<GeneratorInfo>,
    pub ambient: String,
    pub complete_up_to_bound: bool,
    pub reference_ambient: Option<String>,
    pub reference_note: Option<String>,
}

#[derive(Serialize)]
pub struct GeneratorInfo {
    pub monomial: String,
    pub weight: u32,
}

pub fn sections(
    scenario: &Scenario,
    ray: Ray,
    bound: Option<u32>,
) -> Result<SectionsReport, ReportError> {
    let g = &scenario.variety.grading;
    let bound = bound.unwrap_or(DEFAULT_SECTION_BOUND);
    let p = section_generators(g, ray, bound)?;
    let ambient = p.ambient_weights();
    let reference = scenario
        .variety
        .ambient_notes
        .iter()
        .find(|n| n.ray == ray)
        .map(|n| n.weights.clone());
    let (reference_ambient, reference_note) = match reference {
        None => (None, None),
        Some(w) => {
            let formatted = format_weights(&w);
            let note = if w == ambient {
                "reference ambient matches the computed presentation".to_string()
            } else {
                format!(
                    "reference ambient {} and computed {} differ; reported unreconciled",
                    formatted,
                    format_weights(&ambient)
                )
            };
            (Some(formatted), Some(note))
        }
    };
    Ok(SectionsReport {
        command: "sections",
        ray: ray.to_string(),
        bound,
        generators: p
            .generators
            .iter()
            .map(|(e, w)| GeneratorInfo {
                monomial: e.format(g.vars()),
                weight: *w,
            })
            .collect(),
        ambient: format_weights(&ambient),
        complete_up_to_bound: p.complete_up_to_bound,
        reference_ambient,
        reference_note,
    })
}

pub fn render_sections(r: &SectionsReport) -> String {
    let mut out = String::new();
    writeln!(out, "section ring of ray {} (bound {}):", r.ray, r.bound).unwrap();
    for g in &r.generators {
        writeln!(out, "  {}  (weight {})", g.monomial, g.weight).unwrap();
    }
    writeln!(out, "ambient: {}", r.ambient).unwrap();
    writeln!(
        out,
        "complete up to bound: {}",
        if r.complete_up_to_bound {
            "yes"
        } else {
            "not verified"
        }
    )
    .unwrap();
    if let Some(reference) = &r.reference_ambient {
        writeln!(out, "reference ambient: {reference}").unwrap();
    }
    if let Some(note) = &r.reference_note {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}

// --------------------------------------------------------------- transform

#[derive(Serialize)]
pub struct TransformReport {
    pub command: &'static str,
    pub cancelled_content: i64,
    pub target_degree: String,
    pub scenario_text: String,
}

pub fn transform(scenario: &Scenario) -> Result<TransformReport, ReportError> {
    let t = scenario
        .transform
        .as_ref()
        .ok_or_else(|| ReportError::Usage("scenario has no transform block".to_string()))?;
    let system = system_of(scenario)?
        .ok_or_else(|| ReportError::Usage("transform needs a hypersurface block".to_string()))?;
    let content = transform_content(&system, &t.shifts)?;
    let out = scenario.apply_transform()?;
    Ok(TransformReport {
        command: "transform",
        cancelled_content: content,
        target_degree: out
            .hypersurface
            .as_ref()
            .map(|h| h.degree.to_string())
            .unwrap_or_default(),
        scenario_text: out.serialize(),
    })
}
