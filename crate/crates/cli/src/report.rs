//! Versioned JSON reports and their plain-text rendering.

use serde_json::{json, Map, Value};
use smallsub_core::field::Field;
use smallsub_core::groebner::Budget;
use smallsub_core::poly::{DimensionSequence, Form, Polynomial};
use smallsub_core::strength::CollapseWitness;
use smallsub_core::ExtNat;

pub const SCHEMA: u64 = 1;

/// Echo of the settings a run used.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: String,
    pub order: String,
    pub budget: Budget,
    pub seed: u64,
    pub format: String,
    pub nvars: Option<usize>,
}

impl RunConfig {
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "order": self.order,
            "budget": {
                "max_pairs": self.budget.max_pairs,
                "max_degree": self.budget.max_degree,
                "max_enumeration": self.budget.max_enumeration,
                "max_states": self.budget.max_states,
            },
            "seed": self.seed,
            "format": self.format,
            "nvars": self.nvars,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub argv: Vec<String>,
    pub config: RunConfig,
    pub result: Value,
    pub audit: Vec<String>,
    pub verdict: Option<bool>,
    pub error: Option<Value>,
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str, argv: Vec<String>, config: RunConfig) -> Self {
        Self {
            command: command.into(),
            argv,
            config,
            result: Value::Null,
            audit: Vec::new(),
            verdict: None,
            error: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("command".into(), json!(self.command));
        m.insert("argv".into(), json!(self.argv));
        m.insert("config".into(), self.config.to_json());
        m.insert("result".into(), self.result.clone());
        m.insert("audit".into(), json!(self.audit));
        if let Some(v) = self.verdict {
            m.insert("verdict".into(), json!(if v { "pass" } else { "fail" }));
        }
        if let Some(e) = &self.error {
            m.insert("error".into(), e.clone());
        }
        if let Some(t) = self.timing_ms {
            m.insert("timing_ms".into(), json!(t));
        }
        Value::Object(m)
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} over {}\n", self.command, self.config.field));
        text_lines(&self.result, "", &mut out);
        for a in &self.audit {
            out.push_str(&format!("audit: {a}\n"));
        }
        if let Some(v) = self.verdict {
            out.push_str(&format!("verdict: {}\n", if v { "pass" } else { "fail" }));
        }
        if let Some(e) = &self.error {
            text_lines(e, "error.", &mut out);
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("timing_ms: {t:.1}\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn text_lines(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                text_lines(x, &format!("{prefix}{k}."), out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push_str(&format!("{}: [{}]\n", prefix.trim_end_matches('.'), items.join("; ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                text_lines(x, &format!("{prefix}{i}."), out);
            }
        }
        other => out.push_str(&format!("{}: {}\n", prefix.trim_end_matches('.'), scalar(other))),
    }
}

pub fn ext(e: ExtNat) -> Value {
    match e {
        ExtNat::Finite(n) => json!(n),
        ExtNat::Infinite => json!("inf"),
    }
}

pub fn poly<F: Field>(p: &Polynomial<F>) -> Value {
    json!(p.to_string())
}

pub fn polys<F: Field>(ps: &[Polynomial<F>]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

pub fn forms<F: Field>(fs: &[Form<F>]) -> Value {
    Value::Array(fs.iter().map(|f| poly(f.poly())).collect())
}

pub fn sequence(d: &DimensionSequence) -> Value {
    json!(d.entries())
}

pub fn witness<F: Field>(w: &CollapseWitness<F>) -> Value {
    json!({
        "k": w.k(),
        "pairs": w
            .pairs()
            .iter()
            .map(|(g, h)| json!([g.poly().to_string(), h.poly().to_string()]))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> RunConfig {
        RunConfig {
            field: "p=5".into(),
            order: "grevlex".into(),
            budget: Budget::default(),
            seed: 3,
            format: "json".into(),
            nvars: None,
        }
    }

    #[test]
    fn schema_and_key_order() {
        let mut r = Report::new("gb", vec!["gb".into()], config());
        r.result = json!({"basis": ["x1"]});
        r.verdict = Some(true);
        let v = r.to_json();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["schema", "command", "argv", "config", "result", "audit", "verdict"]);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["config"]["seed"], 3);
    }

    #[test]
    fn text_rendering() {
        let mut r = Report::new("pdim", vec![], config());
        r.result = json!({"pdim": 3, "ranks": [1, 3, 3, 1], "h": "inf"});
        let t = r.render_text();
        assert!(t.contains("pdim: 3\n"));
        assert!(t.contains("ranks: [1; 3; 3; 1]\n"));
        assert!(t.contains("h: inf\n"));
    }
}
