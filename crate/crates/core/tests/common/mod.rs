#![allow(dead_code)]

use grothlib::json::tableau_from_json;
use grothlib::Tableau;
use serde_json::Value;

pub fn fixture(name: &str) -> Value {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).unwrap()
}

pub fn tableau(v: &Value) -> Tableau {
    tableau_from_json(&v.to_string()).unwrap()
}

pub fn fixture_tableau(name: &str) -> Tableau {
    tableau(&fixture(name))
}
