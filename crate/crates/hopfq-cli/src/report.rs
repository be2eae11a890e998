//! The report emitted by every verifying command: deterministic JSON, with a
//! plain-text rendering.

use serde::{Deserialize, Serialize};

use hopfq::laws::LawReport;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputEcho {
    pub name: String,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub field: String,
    pub inputs: Vec<InputEcho>,
    pub laws: Vec<LawReport>,
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub details: serde_json::Map<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub artifacts: Vec<String>,
    pub status: String,
}

impl Report {
    pub fn new(command: &[String], field: String) -> Self {
        Report {
            command: command.to_vec(),
            field,
            inputs: Vec::new(),
            laws: Vec::new(),
            details: serde_json::Map::new(),
            artifacts: Vec::new(),
            status: "ok".into(),
        }
    }

    pub fn input(&mut self, name: &str, dim: usize) {
        self.inputs.push(InputEcho {
            name: name.to_string(),
            dim,
        });
    }

    pub fn laws(&mut self, reports: &[LawReport]) {
        self.laws.extend(reports.iter().cloned());
    }

    pub fn detail(&mut self, key: &str, value: serde_json::Value) {
        self.details.insert(key.to_string(), value);
    }

    pub fn finalize(&mut self) -> i32 {
        let ok = self.laws.iter().all(|l| l.pass);
        self.status = if ok { "ok" } else { "law-failure" }.into();
        if ok {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command.join(" ")));
        out.push_str(&format!("field: {}\n", self.field));
        for i in &self.inputs {
            out.push_str(&format!("input: {} (dim {})\n", i.name, i.dim));
        }
        for l in &self.laws {
            if l.pass {
                out.push_str(&format!("law {:<34} PASS\n", l.law));
            } else if let Some(w) = &l.witness {
                out.push_str(&format!(
                    "law {:<34} FAIL at {} (lhs {:?}, rhs {:?})\n",
                    l.law, w.input, w.lhs, w.rhs
                ));
            } else {
                out.push_str(&format!(
                    "law {:<34} FAIL ({})\n",
                    l.law,
                    l.problem.as_deref().unwrap_or("unevaluable")
                ));
            }
        }
        for (k, v) in &self.details {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for a in &self.artifacts {
            out.push_str(&format!("artifact: {a}\n"));
        }
        out.push_str(&format!("status: {}\n", self.status));
        out
    }

    pub fn render(&self, format: &str) -> String {
        match format {
            "text" => self.to_text(),
            _ => self.to_json(),
        }
    }
}
