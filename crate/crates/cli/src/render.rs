//! Text, JSON and LaTeX renderings of command results.

use clap::ValueEnum;
use grothlib::Tableau;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// A `ytableau` environment; skew boxes are `\none`, sets are braced.
pub fn tableau_latex(t: &Tableau) -> String {
    let mut rows = Vec::new();
    for (r, row) in t.rows().iter().enumerate() {
        let mut cells: Vec<String> = (0..t.shape().inner().part(r)).map(|_| "\\none".to_string()).collect();
        for f in row {
            let letters: Vec<String> = f.letters().iter().map(|l| l.to_string()).collect();
            cells.push(match letters.len() {
                0 => String::new(),
                1 => letters[0].clone(),
                _ => format!("\\scriptstyle {}", letters.join(",")),
            });
        }
        rows.push(cells.join(" & "));
    }
    format!("\\begin{{ytableau}}\n{}\n\\end{{ytableau}}", rows.join(" \\\\\n"))
}

pub fn tableau(t: &Tableau, format: Format) -> String {
    match format {
        Format::Text => t.to_string(),
        Format::Json => grothlib::json::tableau_to_json(t),
        Format::Latex => tableau_latex(t),
    }
}

/// A labelled block of tableaux, as JSON or as headed panels.
pub struct Panels {
    pub entries: Vec<(String, PanelValue)>,
}

pub enum PanelValue {
    One(Tableau),
    Many(Vec<Tableau>),
    Json(Value),
}

impl Panels {
    pub fn new() -> Panels {
        Panels { entries: Vec::new() }
    }

    pub fn one(mut self, key: &str, t: Tableau) -> Panels {
        self.entries.push((key.into(), PanelValue::One(t)));
        self
    }

    pub fn many(mut self, key: &str, ts: Vec<Tableau>) -> Panels {
        self.entries.push((key.into(), PanelValue::Many(ts)));
        self
    }

    pub fn value(mut self, key: &str, v: Value) -> Panels {
        self.entries.push((key.into(), PanelValue::Json(v)));
        self
    }

    pub fn render(&self, format: Format) -> String {
        if format == Format::Json {
            let mut obj = serde_json::Map::new();
            for (k, v) in &self.entries {
                let v = match v {
                    PanelValue::One(t) => serde_json::to_value(t).unwrap(),
                    PanelValue::Many(ts) => serde_json::to_value(ts).unwrap(),
                    PanelValue::Json(v) => v.clone(),
                };
                obj.insert(k.clone(), v);
            }
            return Value::Object(obj).to_string();
        }
        let mut out = Vec::new();
        for (k, v) in &self.entries {
            match v {
                PanelValue::One(t) => out.push(format!("{k}:\n{}", tableau(t, format))),
                PanelValue::Many(ts) => {
                    for (i, t) in ts.iter().enumerate() {
                        out.push(format!("{k} {i}:\n{}", tableau(t, format)));
                    }
                }
                PanelValue::Json(v) => out.push(format!("{k}: {}", plain(v))),
            }
        }
        out.join("\n\n")
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn count_record(n: usize, format: Format) -> String {
    match format {
        Format::Json => json!({ "count": n }).to_string(),
        Format::Latex => format!("% count: {n}"),
        Format::Text => format!("count: {n}"),
    }
}
