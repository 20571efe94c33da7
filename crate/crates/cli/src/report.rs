//! Ordered key-value reports with a plain-text and a JSON rendering.
//!
//! Output is deterministic: insertion order is preserved, values are plain
//! strings, and nothing time- or machine-dependent is ever included.

use std::fmt::Display;

#[derive(Debug, Default)]
pub struct Report {
    pairs: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        let mut r = Report::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        let key = key.to_string();
        debug_assert!(
            !self.pairs.iter().any(|(k, _)| *k == key),
            "duplicate report key {key}"
        );
        self.pairs.push((key, value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.pairs {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    pub fn json(&self) -> String {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.pairs {
            map.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        let mut out = serde_json::to_string_pretty(&serde_json::Value::Object(map))
            .expect("string map always serializes");
        out.push('\n');
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.json()
        } else {
            self.text()
        }
    }
}
