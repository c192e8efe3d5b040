//! Line-oriented scenario files.
//!
//! A scenario describes a graded toric ambient space with a chosen chamber,
//! an optional hypersurface (degree plus coefficient constraints and excluded
//! fibre monomials) and an optional fibrewise transform to another grading.
//!
//! The format is UTF-8 text. Blocks are introduced by `[variety]`,
//! `[hypersurface]` and `[transform]` headers; entries are `key = value`
//! lines; `#` starts a comment. Monomials are written multiplicatively
//! (`x^3*z`). Parsing normalizes entry order, so parse → serialize → parse
//! is the identity and serialized output is canonical.

use crate::cones2d::{Cone2, Ray};
use crate::graded_toric::{chamber_fan, model_from_chamber, Bidegree, GradingMatrix, ToricModel};
use crate::monomials::{
    build_system, fibrewise_transform, ExponentVector, LinearSystem, MonomialError,
};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScenarioError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T, ScenarioError> {
    Err(ScenarioError::Parse {
        line,
        msg: msg.into(),
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApplyError {
    #[error("scenario has no transform block")]
    NoTransform,
    #[error("scenario has no hypersurface block")]
    NoHypersurface,
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

/// An expected ambient annotation for the section ring of a ray, reported
/// next to the computed one without reconciling the two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmbientNote {
    pub ray: Ray,
    pub weights: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarietyBlock {
    pub grading: GradingMatrix,
    pub chamber: Cone2,
    pub ambient_notes: Vec<AmbientNote>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypersurfaceBlock {
    pub degree: Bidegree,
    /// `(fibre monomial, u_min)` pairs, canonical order, u_min ≥ 1.
    pub constraints: Vec<(ExponentVector, u32)>,
    /// Fibre monomials struck from the full system, canonical order.
    pub exclusions: Vec<ExponentVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformBlock {
    /// `(variable, power of u)` substitutions `w ↦ u^s·w`, nonzero entries
    /// in variable order.
    pub shifts: Vec<(String, i64)>,
    pub target: GradingMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scenario {
    pub variety: VarietyBlock,
    pub hypersurface: Option<HypersurfaceBlock>,
    pub transform: Option<TransformBlock>,
}

pub const MAX_VARIABLES: usize = 64;

/// Parses a monomial like `x^3*z` (or `1`) against a grading's variables.
pub fn parse_monomial(s: &str, g: &GradingMatrix) -> Result<ExponentVector, String> {
    let s = s.trim();
    let mut exps = vec![0u32; g.len()];
    if s == "1" {
        return Ok(ExponentVector(exps));
    }
    if s.is_empty() {
        return Err("empty monomial".to_string());
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => {
                let power: u32 = p
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad exponent `{p}`"))?;
                (n.trim(), power)
            }
            None => (factor, 1),
        };
        let idx = g
            .var_index(name)
            .ok_or_else(|| format!("unknown variable `{name}`"))?;
        exps[idx] = exps[idx]
            .checked_add(power)
            .ok_or_else(|| "exponent overflow".to_string())?;
    }
    Ok(ExponentVector(exps))
}

fn parse_i64_list(value: &str) -> Result<Vec<i64>, String> {
    value
        .split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| format!("bad integer `{t}`")))
        .collect()
}

/// Parses a ray token of the form `(a,b)`.
fn parse_ray(token: &str) -> Result<Ray, String> {
    let inner = token
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected `(a,b)`, got `{token}`"))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| format!("expected `(a,b)`, got `{token}`"))?;
    let x: i64 = a.trim().parse().map_err(|_| format!("bad integer `{a}`"))?;
    let y: i64 = b.trim().parse().map_err(|_| format!("bad integer `{b}`"))?;
    Ray::new(x, y).map_err(|e| e.to_string())
}

fn parse_bidegree(token: &str) -> Result<Bidegree, String> {
    let inner = token
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected `(a,b)`, got `{token}`"))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| format!("expected `(a,b)`, got `{token}`"))?;
    let d1: i64 = a.trim().parse().map_err(|_| format!("bad integer `{a}`"))?;
    let d2: i64 = b.trim().parse().map_err(|_| format!("bad integer `{b}`"))?;
    Ok(Bidegree::new(d1, d2))
}

#[derive(Default)]
struct RawBlock {
    /// `(line, key, value)` entries in file order.
    entries: Vec<(usize, String, String)>,
    header_line: usize,
}

impl RawBlock {
    fn unique(&self, key: &str) -> Result<Option<(usize, &str)>, ScenarioError> {
        let mut found = None;
        for (line, k, v) in &self.entries {
            if k == key {
                if found.is_some() {
                    return perr(*line, format!("duplicate key `{key}`"));
                }
                found = Some((*line, v.as_str()));
            }
        }
        Ok(found)
    }

    fn required(&self, key: &str) -> Result<(usize, &str), ScenarioError> {
        self.unique(key)?.ok_or(ScenarioError::Parse {
            line: self.header_line,
            msg: format!("missing key `{key}`"),
        })
    }

    fn repeated(&self, key: &str) -> Vec<(usize, &str)> {
        self.entries
            .iter()
            .filter(|(_, k, _)| k == key)
            .map(|(l, _, v)| (*l, v.as_str()))
            .collect()
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<(), ScenarioError> {
        for (line, k, _) in &self.entries {
            if !allowed.contains(&k.as_str()) {
                return perr(*line, format!("unknown key `{k}`"));
            }
        }
        Ok(())
    }
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario, ScenarioError> {
        let mut variety: Option<RawBlock> = None;
        let mut hypersurface: Option<RawBlock> = None;
        let mut transform: Option<RawBlock> = None;
        let mut current: Option<&mut RawBlock> = None;

        for (i, raw_line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = match raw_line.find('#') {
                Some(p) => &raw_line[..p],
                None => raw_line,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let slot = match name.trim() {
                    "variety" => &mut variety,
                    "hypersurface" => &mut hypersurface,
                    "transform" => &mut transform,
                    other => return perr(line_no, format!("unknown block `[{other}]`")),
                };
                if slot.is_some() {
                    return perr(line_no, format!("duplicate block `[{}]`", name.trim()));
                }
                *slot = Some(RawBlock {
                    entries: Vec::new(),
                    header_line: line_no,
                });
                current = slot.as_mut();
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return perr(line_no, "expected `key = value`");
            };
            match current.as_deref_mut() {
                Some(block) => {
                    block
                        .entries
                        .push((line_no, key.trim().to_string(), value.trim().to_string()))
                }
                None => return perr(line_no, "entry outside of any block"),
            }
        }

        let variety = variety.ok_or(ScenarioError::Parse {
            line: 1,
            msg: "missing `[variety]` block".to_string(),
        })?;
        let variety = parse_variety(&variety)?;
        let hypersurface = hypersurface
            .map(|b| parse_hypersurface(&b, &variety.grading))
            .transpose()?;
        let transform = transform
            .map(|b| parse_transform(&b, &variety.grading))
            .transpose()?;
        Ok(Scenario {
            variety,
            hypersurface,
            transform,
        })
    }

    /// Canonical text form; `parse(serialize(s)) == s`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let g = &self.variety.grading;
        out.push_str("[variety]\n");
        out.push_str(&format!("vars = {}\n", g.vars().join(" ")));
        let row = |pick: fn(&Bidegree) -> i64| -> String {
            g.cols()
                .iter()
                .map(|c| pick(c).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push_str(&format!("row1 = {}\n", row(|c| c.d1)));
        out.push_str(&format!("row2 = {}\n", row(|c| c.d2)));
        out.push_str(&format!(
            "chamber = {} {}\n",
            self.variety.chamber.lo(),
            self.variety.chamber.hi()
        ));
        for note in &self.variety.ambient_notes {
            let weights: Vec<String> = note.weights.iter().map(|w| w.to_string()).collect();
            out.push_str(&format!(
                "ambient_note = {} {}\n",
                note.ray,
                weights.join(",")
            ));
        }
        if let Some(h) = &self.hypersurface {
            out.push_str("\n[hypersurface]\n");
            out.push_str(&format!("degree = {}\n", h.degree));
            for (m, u_min) in &h.constraints {
                out.push_str(&format!(
                    "monomial = {} u_min={}\n",
                    m.format(g.vars()),
                    u_min
                ));
            }
            for m in &h.exclusions {
                out.push_str(&format!("exclude = {}\n", m.format(g.vars())));
            }
        }
        if let Some(t) = &self.transform {
            out.push_str("\n[transform]\n");
            for (v, s) in &t.shifts {
                out.push_str(&format!("shift = {v} {s}\n"));
            }
            out.push_str(&format!("target_vars = {}\n", t.target.vars().join(" ")));
            let trow = |pick: fn(&Bidegree) -> i64| -> String {
                t.target
                    .cols()
                    .iter()
                    .map(|c| pick(c).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            out.push_str(&format!("target_row1 = {}\n", trow(|c| c.d1)));
            out.push_str(&format!("target_row2 = {}\n", trow(|c| c.d2)));
        }
        out
    }

    /// The toric model selected by the scenario's chamber.
    pub fn model(&self) -> ToricModel {
        model_from_chamber(&self.variety.grading, self.variety.chamber)
            .expect("chamber validated at parse time")
    }

    /// The hypersurface linear system, when a hypersurface block is present.
    pub fn system(&self) -> Result<Option<LinearSystem>, MonomialError> {
        let Some(h) = &self.hypersurface else {
            return Ok(None);
        };
        let full = build_system(&self.variety.grading, h.degree, &h.constraints)?;
        Ok(Some(full.without_fibres(&h.exclusions)?))
    }

    /// Applies the transform block: substitutes, cancels the content and
    /// re-reads the system in the target grading, producing a new scenario.
    pub fn apply_transform(&self) -> Result<Scenario, ApplyError> {
        let t = self.transform.as_ref().ok_or(ApplyError::NoTransform)?;
        let system = self.system()?.ok_or(ApplyError::NoHypersurface)?;
        let transformed = fibrewise_transform(&system, &t.shifts, &t.target)?;
        let fan = chamber_fan(&t.target);
        let chamber = fan.chambers[0];
        let constraints: Vec<(ExponentVector, u32)> = transformed
            .classes
            .iter()
            .filter(|c| c.u_min > 0)
            .map(|c| (c.fibre.clone(), c.u_min))
            .collect();
        let exclusions = transformed.missing_fibres()?;
        Ok(Scenario {
            variety: VarietyBlock {
                grading: t.target.clone(),
                chamber,
                ambient_notes: Vec::new(),
            },
            hypersurface: Some(HypersurfaceBlock {
                degree: transformed.degree,
                constraints,
                exclusions,
            }),
            transform: None,
        })
    }
}

fn parse_variety(block: &RawBlock) -> Result<VarietyBlock, ScenarioError> {
    block.check_keys(&["vars", "row1", "row2", "chamber", "ambient_note"])?;
    let (vars_line, vars_value) = block.required("vars")?;
    let vars: Vec<String> = vars_value.split_whitespace().map(String::from).collect();
    if vars.len() > MAX_VARIABLES {
        return perr(
            vars_line,
            format!("too many variables (limit {MAX_VARIABLES})"),
        );
    }
    let (r1_line, r1) = block.required("row1")?;
    let row1 = parse_i64_list(r1).map_err(|m| ScenarioError::Parse {
        line: r1_line,
        msg: m,
    })?;
    let (r2_line, r2) = block.required("row2")?;
    let row2 = parse_i64_list(r2).map_err(|m| ScenarioError::Parse {
        line: r2_line,
        msg: m,
    })?;
    if row1.len() != vars.len() || row2.len() != vars.len() {
        return perr(
            r1_line,
            "grading rows must match the variable list in length",
        );
    }
    let cols: Vec<Bidegree> = row1
        .iter()
        .zip(&row2)
        .map(|(&d1, &d2)| Bidegree::new(d1, d2))
        .collect();
    let grading = GradingMatrix::new(vars, cols).map_err(|e| ScenarioError::Parse {
        line: vars_line,
        msg: e.to_string(),
    })?;

    let (ch_line, ch) = block.required("chamber")?;
    let tokens: Vec<&str> = ch.split_whitespace().collect();
    if tokens.len() != 2 {
        return perr(ch_line, "chamber needs exactly two rays, `(a,b) (c,d)`");
    }
    let lo = parse_ray(tokens[0]).map_err(|m| ScenarioError::Parse {
        line: ch_line,
        msg: m,
    })?;
    let hi = parse_ray(tokens[1]).map_err(|m| ScenarioError::Parse {
        line: ch_line,
        msg: m,
    })?;
    let chamber = Cone2::new(lo, hi).map_err(|e| ScenarioError::Parse {
        line: ch_line,
        msg: e.to_string(),
    })?;
    if !chamber_fan(&grading).chambers.contains(&chamber) {
        return perr(
            ch_line,
            format!("cone {chamber} is not a chamber of the grading's fan"),
        );
    }

    let mut ambient_notes = Vec::new();
    for (line, value) in block.repeated("ambient_note") {
        let mut parts = value.split_whitespace();
        let (Some(ray_tok), Some(weights_tok), None) = (parts.next(), parts.next(), parts.next())
        else {
            return perr(line, "ambient_note needs `(a,b) w1,w2,...`");
        };
        let ray = parse_ray(ray_tok).map_err(|m| ScenarioError::Parse { line, msg: m })?;
        let weights: Vec<u32> = weights_tok
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad weight `{t}`"))
            })
            .collect::<Result<_, _>>()
            .map_err(|m| ScenarioError::Parse { line, msg: m })?;
        if weights.is_empty() || weights.len() > MAX_VARIABLES {
            return perr(line, "ambient_note weight list has an unreasonable length");
        }
        ambient_notes.push(AmbientNote { ray, weights });
    }

    Ok(VarietyBlock {
        grading,
        chamber,
        ambient_notes,
    })
}

fn parse_hypersurface(
    block: &RawBlock,
    g: &GradingMatrix,
) -> Result<HypersurfaceBlock, ScenarioError> {
    block.check_keys(&["degree", "monomial", "exclude"])?;
    let (deg_line, deg) = block.required("degree")?;
    let degree = parse_bidegree(deg).map_err(|m| ScenarioError::Parse {
        line: deg_line,
        msg: m,
    })?;
    let mut constraints = Vec::new();
    let mut seen = Vec::new();
    for (line, value) in block.repeated("monomial") {
        let mut parts = value.split_whitespace();
        let (Some(mono_tok), Some(umin_tok), None) = (parts.next(), parts.next(), parts.next())
        else {
            return perr(line, "constraint needs `monomial u_min=N`");
        };
        let fibre =
            parse_monomial(mono_tok, g).map_err(|m| ScenarioError::Parse { line, msg: m })?;
        let Some(n) = umin_tok.strip_prefix("u_min=") else {
            return perr(line, format!("expected `u_min=N`, got `{umin_tok}`"));
        };
        let u_min: u32 = n.parse().map_err(|_| ScenarioError::Parse {
            line,
            msg: format!("bad u_min `{n}`"),
        })?;
        if seen.contains(&fibre) {
            return perr(line, format!("duplicate constraint for `{mono_tok}`"));
        }
        seen.push(fibre.clone());
        if u_min == 0 {
            continue; // u_min=0 is the default; normalize it away
        }
        constraints.push((fibre, u_min));
    }
    let mut exclusions = Vec::new();
    for (line, value) in block.repeated("exclude") {
        let fibre = parse_monomial(value, g).map_err(|m| ScenarioError::Parse { line, msg: m })?;
        if exclusions.contains(&fibre) {
            return perr(line, format!("duplicate exclusion `{value}`"));
        }
        exclusions.push(fibre);
    }
    constraints.sort_by(|a, b| a.0.grlex(&b.0));
    exclusions.sort_by(|a, b| a.grlex(b));
    Ok(HypersurfaceBlock {
        degree,
        constraints,
        exclusions,
    })
}

fn parse_transform(block: &RawBlock, g: &GradingMatrix) -> Result<TransformBlock, ScenarioError> {
    block.check_keys(&["shift", "target_vars", "target_row1", "target_row2"])?;
    let mut shifts: Vec<(String, i64)> = Vec::new();
    for (line, value) in block.repeated("shift") {
        let mut parts = value.split_whitespace();
        let (Some(var), Some(power_tok), None) = (parts.next(), parts.next(), parts.next()) else {
            return perr(line, "shift needs `variable power`");
        };
        if g.var_index(var).is_none() {
            return perr(line, format!("unknown variable `{var}`"));
        }
        if shifts.iter().any(|(v, _)| v == var) {
            return perr(line, format!("duplicate shift for `{var}`"));
        }
        let power: i64 = power_tok.parse().map_err(|_| ScenarioError::Parse {
            line,
            msg: format!("bad power `{power_tok}`"),
        })?;
        if power != 0 {
            shifts.push((var.to_string(), power));
        }
    }
    shifts.sort_by_key(|(v, _)| g.var_index(v).expect("validated above"));

    let (tv_line, tv) = block.required("target_vars")?;
    let tvars: Vec<String> = tv.split_whitespace().map(String::from).collect();
    let (tr1_line, tr1) = block.required("target_row1")?;
    let trow1 = parse_i64_list(tr1).map_err(|m| ScenarioError::Parse {
        line: tr1_line,
        msg: m,
    })?;
    let (tr2_line, tr2) = block.required("target_row2")?;
    let trow2 = parse_i64_list(tr2).map_err(|m| ScenarioError::Parse {
        line: tr2_line,
        msg: m,
    })?;
    if trow1.len() != tvars.len() || trow2.len() != tvars.len() {
        return perr(
            tr1_line,
            "target rows must match the target variable list in length",
        );
    }
    let cols: Vec<Bidegree> = trow1
        .iter()
        .zip(&trow2)
        .map(|(&d1, &d2)| Bidegree::new(d1, d2))
        .collect();
    let target = GradingMatrix::new(tvars, cols).map_err(|e| ScenarioError::Parse {
        line: tv_line,
        msg: e.to_string(),
    })?;
    let mut source_names: Vec<&String> = g.vars().iter().collect();
    let mut target_names: Vec<&String> = target.vars().iter().collect();
    source_names.sort();
    target_names.sort();
    if source_names != target_names {
        return perr(
            tv_line,
            "target variables must be a permutation of the variety variables",
        );
    }
    Ok(TransformBlock { shifts, target })
}

pub const BUILTIN_X: &str = include_str!("../scenarios/paper-x.scn");
pub const BUILTIN_X_PRIME: &str = include_str!("../scenarios/paper-xprime.scn");

pub fn builtin(name: &str) -> Option<&'static str> {
    match name {
        "paper-X" => Some(BUILTIN_X),
        "paper-Xprime" => Some(BUILTIN_X_PRIME),
        _ => None,
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &["paper-X", "paper-Xprime"]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse_and_round_trip() {
        for name in builtin_names() {
            let text = builtin(name).unwrap();
            let scenario = Scenario::parse(text).unwrap();
            let serialized = scenario.serialize();
            let reparsed = Scenario::parse(&serialized).unwrap();
            assert_eq!(scenario, reparsed, "round trip of {name}");
            // serialization is a fixed point
            assert_eq!(serialized, reparsed.serialize());
        }
    }

    #[test]
    fn builtin_x_fields() {
        let s = Scenario::parse(BUILTIN_X).unwrap();
        assert_eq!(s.variety.grading.vars(), &["u", "v", "x", "t", "y", "z"]);
        let h = s.hypersurface.as_ref().unwrap();
        assert_eq!(h.degree, Bidegree::new(-4, 4));
        assert_eq!(h.constraints.len(), 12);
        assert!(h.exclusions.is_empty());
        assert_eq!(s.transform.as_ref().unwrap().shifts.len(), 3);
        assert_eq!(s.variety.ambient_notes.len(), 1);
        let system = s.system().unwrap().unwrap();
        assert_eq!(system.classes.len(), 19);
        // sum of (coeff_deg - u_min + 1) over the 19 classes
        assert_eq!(system.monomial_dimension(), 38);
    }

    #[test]
    fn builtin_x_prime_fields() {
        let s = Scenario::parse(BUILTIN_X_PRIME).unwrap();
        assert_eq!(s.variety.grading.vars(), &["u", "v", "x", "t", "z", "y"]);
        let h = s.hypersurface.as_ref().unwrap();
        assert_eq!(h.degree, Bidegree::new(0, 4));
        assert_eq!(h.exclusions.len(), 3);
        let system = s.system().unwrap().unwrap();
        assert_eq!(system.classes.len(), 19);
    }

    #[test]
    fn transform_produces_the_bundled_smooth_scenario() {
        let x = Scenario::parse(BUILTIN_X).unwrap();
        let out = x.apply_transform().unwrap();
        let expected = Scenario::parse(BUILTIN_X_PRIME).unwrap();
        assert_eq!(out, expected);
        assert_eq!(out.serialize(), expected.serialize());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "[variety]\nvars = u v x\nrow1 = 1 1\nrow2 = 0 0 1\nchamber = (1,0) (0,1)\n";
        match Scenario::parse(bad) {
            Err(ScenarioError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let unknown = "[variety]\nvars = u v x\nrow1 = 1 1 0\nrow2 = 0 0 1\nchamber = (1,0) (0,1)\nnope = 1\n";
        assert!(matches!(
            Scenario::parse(unknown),
            Err(ScenarioError::Parse { line: 6, .. })
        ));
        let outside = "vars = u v x\n";
        assert!(matches!(
            Scenario::parse(outside),
            Err(ScenarioError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn duplicate_constraints_and_exclusions_are_rejected() {
        let base = "[variety]\nvars = u v x y\nrow1 = 1 1 0 -1\nrow2 = 0 0 1 1\nchamber = (1,0) (0,1)\n\n[hypersurface]\ndegree = (-1,2)\n";
        let dup_constraint = format!("{base}monomial = x*y u_min=1\nmonomial = x*y u_min=0\n");
        assert!(matches!(
            Scenario::parse(&dup_constraint),
            Err(ScenarioError::Parse { line: 10, .. })
        ));
        let dup_exclude = format!("{base}exclude = y^2\nexclude = y^2\n");
        assert!(matches!(
            Scenario::parse(&dup_exclude),
            Err(ScenarioError::Parse { line: 10, .. })
        ));
    }

    #[test]
    fn chamber_must_belong_to_the_fan() {
        let bad =
            "[variety]\nvars = u v x y\nrow1 = 1 1 0 -1\nrow2 = 0 0 1 1\nchamber = (1,0) (-1,1)\n";
        match Scenario::parse(bad) {
            Err(ScenarioError::Parse { line, msg }) => {
                assert_eq!(line, 5);
                assert!(msg.contains("not a chamber"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\n# leading comment\n[variety]\nvars = u v x  # trailing comment\nrow1 = 1 1 0\nrow2 = 0 0 1\n\nchamber = (1,0) (0,1)\n";
        let s = Scenario::parse(text).unwrap();
        assert_eq!(s.variety.grading.vars(), &["u", "v", "x"]);
    }

    #[test]
    fn monomial_parsing() {
        let s = Scenario::parse(BUILTIN_X).unwrap();
        let g = &s.variety.grading;
        let m = parse_monomial("x^3*z", g).unwrap();
        assert_eq!(m.format(g.vars()), "x^3*z");
        assert_eq!(parse_monomial("1", g).unwrap().total(), 0);
        assert!(parse_monomial("w^2", g).is_err());
        assert!(parse_monomial("x^", g).is_err());
        assert!(parse_monomial("", g).is_err());
        // repeated factors accumulate
        assert_eq!(parse_monomial("x*x", g).unwrap().format(g.vars()), "x^2");
    }
}
