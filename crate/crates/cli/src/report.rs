use std::fmt::Write as _;

use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    /// Holds through the validated order, which the configuration kept
    /// below the full claim.
    Qualified,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Qualified => "qualified",
            Status::Fail => "fail",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s {
            "pass" => Some(Status::Pass),
            "qualified" => Some(Status::Qualified),
            "fail" => Some(Status::Fail),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub summary: String,
    pub validated_order: Option<i64>,
    pub tolerance: Option<f64>,
    pub witness: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, summary: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status,
            summary: summary.into(),
            validated_order: None,
            tolerance: None,
            witness: Value::Object(Map::new()),
        }
    }

    pub fn pass_if(name: impl Into<String>, ok: bool, summary: impl Into<String>) -> Check {
        Check::new(name, if ok { Status::Pass } else { Status::Fail }, summary)
    }

    pub fn order(mut self, k: i64) -> Check {
        self.validated_order = Some(k);
        self
    }

    pub fn tolerance(mut self, t: f64) -> Check {
        self.tolerance = Some(t);
        self
    }

    pub fn witness(mut self, w: Value) -> Check {
        self.witness = w;
        self
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("name".into(), json!(self.name));
        m.insert("status".into(), json!(self.status.as_str()));
        m.insert("summary".into(), json!(self.summary));
        if let Some(k) = self.validated_order {
            m.insert("validated_order".into(), json!(k));
        }
        if let Some(t) = self.tolerance {
            m.insert("tolerance".into(), json!(t));
        }
        m.insert("witness".into(), self.witness.clone());
        Value::Object(m)
    }

    pub fn from_value(v: &Value) -> Result<Check, String> {
        let s = |k: &str| {
            v.get(k)
                .and_then(Value::as_str)
                .map(str::to_owned)
                .ok_or_else(|| format!("check is missing string field `{k}`"))
        };
        let status = s("status")?;
        Ok(Check {
            name: s("name")?,
            status: Status::parse(&status).ok_or_else(|| format!("unknown status `{status}`"))?,
            summary: s("summary")?,
            validated_order: v.get("validated_order").and_then(Value::as_i64),
            tolerance: v.get("tolerance").and_then(Value::as_f64),
            witness: v.get("witness").cloned().unwrap_or(Value::Null),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub checks: Vec<Check>,
    pub versions: Value,
    pub wall_time_seconds: f64,
}

impl Report {
    pub fn new(command: &str, config: Value, mut checks: Vec<Check>, wall_time_seconds: f64) -> Report {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report {
            command: command.into(),
            config,
            checks,
            versions: versions(),
            wall_time_seconds,
        }
    }

    /// Worst status over all checks.
    pub fn status(&self) -> Status {
        self.checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Fail => 1,
            _ => 0,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "checks": self.checks.iter().map(Check::to_value).collect::<Vec<_>>(),
            "command": self.command,
            "config": self.config,
            "status": self.status().as_str(),
            "versions": self.versions,
            "wall_time_seconds": self.wall_time_seconds,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report, String> {
        let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let checks = v
            .get("checks")
            .and_then(Value::as_array)
            .ok_or("report is missing `checks`")?
            .iter()
            .map(Check::from_value)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Report {
            command: v.get("command").and_then(Value::as_str).ok_or("report is missing `command`")?.into(),
            config: v.get("config").cloned().unwrap_or(Value::Null),
            checks,
            versions: v.get("versions").cloned().unwrap_or(Value::Null),
            wall_time_seconds: v.get("wall_time_seconds").and_then(Value::as_f64).unwrap_or(0.0),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command  {}", self.command);
        if let Value::Object(m) = &self.config {
            for (k, v) in m {
                let v = v.as_str().map(str::to_owned).unwrap_or_else(|| v.to_string());
                let _ = writeln!(out, "{k:<12} {v}");
            }
        }
        out.push('\n');
        let rows: Vec<[String; 4]> = self
            .checks
            .iter()
            .map(|c| {
                let bound = match (c.validated_order, c.tolerance) {
                    (Some(k), _) => format!("order {k}"),
                    (None, Some(t)) => format!("tol {t:e}"),
                    (None, None) => "exact".into(),
                };
                [c.name.clone(), c.status.as_str().into(), bound, c.summary.clone()]
            })
            .collect();
        let header = ["CHECK".to_string(), "STATUS".into(), "BOUND".into(), "SUMMARY".into()];
        let mut width = [0usize; 3];
        for r in std::iter::once(&header).chain(rows.iter()) {
            for (w, cell) in width.iter_mut().zip(r.iter()) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for r in std::iter::once(&header).chain(rows.iter()) {
            let _ = writeln!(
                out,
                "{:<w0$}  {:<w1$}  {:<w2$}  {}",
                r[0],
                r[1],
                r[2],
                r[3],
                w0 = width[0],
                w1 = width[1],
                w2 = width[2]
            );
        }
        let _ = writeln!(
            out,
            "\n{} checks, status {}, {:.3}s",
            self.checks.len(),
            self.status().as_str(),
            self.wall_time_seconds
        );
        out
    }
}

fn versions() -> Value {
    json!({
        "kummer-cli": env!("CARGO_PKG_VERSION"),
        "kummer-core": kummer_core::VERSION,
        "report_schema": SCHEMA_VERSION,
    })
}
