//! JSON job files: schema validation and typed extraction. Jobs carry a
//! command, a seed fixing all randomness, and a command-specific parameter
//! map; a `--param key=value` layer overrides individual entries.

use num_complex::Complex64;
use r11_core::boundary::{CircleFunction, TildeBoundary};
use r11_core::clifford::{exp_bivector, EvenNumber};
use r11_core::moebius::{Sheet, TildePoint};
use r11_core::transforms::{QuadRule, QuadratureSpec};
use serde_json::Value;

#[derive(Debug)]
pub struct JobSpec {
    pub command: String,
    /// Fixes any randomness a job may consume; current job types enumerate
    /// their points explicitly, so this only pins the schema.
    #[allow(dead_code)]
    pub seed: u64,
    pub params: serde_json::Map<String, Value>,
}

#[derive(Debug)]
pub struct SchemaError(pub String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "job schema violation: {}", self.0)
    }
}

pub const COMMANDS: [&str; 6] =
    ["verify", "cauchy-disk", "cauchy-r11", "taylor", "kernel-dump", "geometry-dump"];

pub fn parse_job(text: &str, overrides: &[(String, String)]) -> Result<JobSpec, SchemaError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| SchemaError(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| SchemaError("job must be a JSON object".into()))?;
    let command = obj
        .get("command")
        .and_then(Value::as_str)
        .ok_or_else(|| SchemaError("missing string field 'command'".into()))?
        .to_string();
    if !COMMANDS.contains(&command.as_str()) {
        return Err(SchemaError(format!("unknown command '{command}'")));
    }
    let seed = obj.get("seed").and_then(Value::as_u64).unwrap_or(0);
    let mut params = obj
        .get("params")
        .and_then(Value::as_object)
        .cloned()
        .ok_or_else(|| SchemaError("missing object field 'params'".into()))?;
    for (k, raw) in overrides {
        let parsed = serde_json::from_str::<Value>(raw).unwrap_or(Value::String(raw.clone()));
        params.insert(k.clone(), parsed);
    }
    Ok(JobSpec { command, seed, params })
}

impl JobSpec {
    pub fn str_param(&self, key: &str) -> Result<&str, SchemaError> {
        self.params
            .get(key)
            .and_then(Value::as_str)
            .ok_or_else(|| SchemaError(format!("missing string param '{key}'")))
    }

    pub fn f64_param(&self, key: &str, default: Option<f64>) -> Result<f64, SchemaError> {
        match self.params.get(key) {
            Some(v) => v
                .as_f64()
                .ok_or_else(|| SchemaError(format!("param '{key}' must be a number"))),
            None => default.ok_or_else(|| SchemaError(format!("missing number param '{key}'"))),
        }
    }

    pub fn usize_param(&self, key: &str, default: Option<usize>) -> Result<usize, SchemaError> {
        match self.params.get(key) {
            Some(v) => v
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| SchemaError(format!("param '{key}' must be a non-negative integer"))),
            None => default.ok_or_else(|| SchemaError(format!("missing integer param '{key}'"))),
        }
    }

    /// Complex points `[[re, im], ...]`.
    pub fn complex_points(&self, key: &str) -> Result<Vec<Complex64>, SchemaError> {
        let arr = self
            .params
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| SchemaError(format!("missing array param '{key}'")))?;
        arr.iter()
            .map(|p| {
                let pair = p
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| SchemaError(format!("'{key}' entries must be [re, im]")))?;
                let re = pair[0].as_f64().ok_or_else(|| SchemaError("non-numeric re".into()))?;
                let im = pair[1].as_f64().ok_or_else(|| SchemaError("non-numeric im".into()))?;
                Ok(Complex64::new(re, im))
            })
            .collect()
    }

    /// Cover points `[[u1, u2, "plus"|"minus"], ...]`.
    pub fn tilde_points(&self, key: &str) -> Result<Vec<TildePoint>, SchemaError> {
        let arr = self
            .params
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| SchemaError(format!("missing array param '{key}'")))?;
        arr.iter()
            .map(|p| {
                let trip = p.as_array().filter(|a| a.len() == 3).ok_or_else(|| {
                    SchemaError(format!("'{key}' entries must be [u1, u2, sheet]"))
                })?;
                let u1 = trip[0].as_f64().ok_or_else(|| SchemaError("non-numeric u1".into()))?;
                let u2 = trip[1].as_f64().ok_or_else(|| SchemaError("non-numeric u2".into()))?;
                let sheet = parse_sheet(
                    trip[2].as_str().ok_or_else(|| SchemaError("sheet must be a string".into()))?,
                )?;
                Ok(TildePoint::new(sheet, r11_core::clifford::Vector11::new(u1, u2)))
            })
            .collect()
    }

    pub fn sheet_param(&self, key: &str, default: Sheet) -> Result<Sheet, SchemaError> {
        match self.params.get(key) {
            Some(v) => parse_sheet(
                v.as_str().ok_or_else(|| SchemaError(format!("'{key}' must be a string")))?,
            ),
            None => Ok(default),
        }
    }

    /// Quadrature block `{"n":.., "t_max":.., "eps0":.., "levels":..,
    /// "rule":"adaptive"|"trapezoid"}`; every field optional.
    pub fn quadrature(&self) -> Result<QuadratureSpec, SchemaError> {
        let mut q = QuadratureSpec::default();
        if let Some(v) = self.params.get("quadrature") {
            let obj = v
                .as_object()
                .ok_or_else(|| SchemaError("'quadrature' must be an object".into()))?;
            if let Some(n) = obj.get("n") {
                q.n = n
                    .as_u64()
                    .ok_or_else(|| SchemaError("quadrature.n must be an integer".into()))?
                    as usize;
            }
            if let Some(t) = obj.get("t_max") {
                q.t_max =
                    t.as_f64().ok_or_else(|| SchemaError("quadrature.t_max must be a number".into()))?;
            }
            let eps0 = match obj.get("eps0") {
                Some(e) => e
                    .as_f64()
                    .ok_or_else(|| SchemaError("quadrature.eps0 must be a number".into()))?,
                None => 0.1,
            };
            let levels = match obj.get("levels") {
                Some(l) => l
                    .as_u64()
                    .ok_or_else(|| SchemaError("quadrature.levels must be an integer".into()))?
                    as i32,
                None => 7,
            };
            q.pv_epsilons = (0..levels).map(|k| eps0 * 0.5f64.powi(k)).collect();
            if let Some(r) = obj.get("rule") {
                q.rule = match r.as_str() {
                    Some("adaptive") => QuadRule::Adaptive,
                    Some("trapezoid") => QuadRule::Trapezoid,
                    _ => return Err(SchemaError("quadrature.rule must be adaptive|trapezoid".into())),
                };
            }
        }
        q.validate().map_err(|e| SchemaError(e.to_string()))?;
        Ok(q)
    }

    /// Circle boundary data: `{"ones": true}` or
    /// `{"harmonics": [{"k": 3, "re": 1.0, "im": 0.0}, ...]}`.
    pub fn circle_boundary(&self, n: usize) -> Result<CircleFunction, SchemaError> {
        let b = self
            .params
            .get("boundary")
            .and_then(Value::as_object)
            .ok_or_else(|| SchemaError("missing object param 'boundary'".into()))?;
        if b.get("ones").and_then(Value::as_bool) == Some(true) {
            return Ok(CircleFunction::constant(n, Complex64::new(1.0, 0.0)));
        }
        let harmonics = b
            .get("harmonics")
            .and_then(Value::as_array)
            .ok_or_else(|| SchemaError("boundary needs 'ones' or 'harmonics'".into()))?;
        let mut terms = Vec::new();
        for h in harmonics {
            let o = h
                .as_object()
                .ok_or_else(|| SchemaError("harmonic entries must be objects".into()))?;
            let k = o
                .get("k")
                .and_then(Value::as_i64)
                .ok_or_else(|| SchemaError("harmonic needs integer 'k'".into()))?;
            let re = o.get("re").and_then(Value::as_f64).unwrap_or(1.0);
            let im = o.get("im").and_then(Value::as_f64).unwrap_or(0.0);
            terms.push((k as f64, Complex64::new(re, im)));
        }
        Ok(CircleFunction::from_fn(n, |phi| {
            terms.iter().map(|(k, c)| c * Complex64::from_polar(1.0, k * phi)).sum()
        }))
    }

    /// Hyperbolic boundary data: `{"ones": true}` or
    /// `{"bump": {"branch": 0, "center": 0.0, "width": 1.0, "p": 0.0,
    ///            "amplitude": 1.0}}` for a smooth window times `z^p`.
    pub fn tilde_boundary(&self, n: usize, t_max: f64) -> Result<TildeBoundary, SchemaError> {
        let b = self
            .params
            .get("boundary")
            .and_then(Value::as_object)
            .ok_or_else(|| SchemaError("missing object param 'boundary'".into()))?;
        if b.get("ones").and_then(Value::as_bool) == Some(true) {
            return Ok(TildeBoundary::from_fn(n, t_max, |_, _| EvenNumber::ONE));
        }
        let bump = b
            .get("bump")
            .and_then(Value::as_object)
            .ok_or_else(|| SchemaError("boundary needs 'ones' or 'bump'".into()))?;
        let branch = bump.get("branch").and_then(Value::as_u64).unwrap_or(0) as u8;
        if branch > 3 {
            return Err(SchemaError("bump.branch must be 0..=3".into()));
        }
        let center = bump.get("center").and_then(Value::as_f64).unwrap_or(0.0);
        let width = bump.get("width").and_then(Value::as_f64).unwrap_or(1.0);
        let p = bump.get("p").and_then(Value::as_f64).unwrap_or(0.0);
        let amp = bump.get("amplitude").and_then(Value::as_f64).unwrap_or(1.0);
        if width <= 0.0 {
            return Err(SchemaError("bump.width must be positive".into()));
        }
        Ok(TildeBoundary::from_fn(n, t_max, move |bb, t| {
            if bb != branch {
                return EvenNumber::ZERO;
            }
            let s = (t - center) / width;
            if s.abs() >= 1.0 {
                return EvenNumber::ZERO;
            }
            exp_bivector(p * t) * (amp * (1.0 - s * s).powi(2))
        }))
    }
}

pub fn parse_sheet(s: &str) -> Result<Sheet, SchemaError> {
    match s {
        "plus" => Ok(Sheet::Plus),
        "minus" => Ok(Sheet::Minus),
        other => Err(SchemaError(format!("sheet must be 'plus' or 'minus', got '{other}'"))),
    }
}
