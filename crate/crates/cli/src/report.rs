use std::fmt::{self, Display};
use std::time::{Duration, Instant};

/// Ordered `key: value` lines. Keys print in insertion order so that the same
/// command always yields the same bytes.
#[derive(Default)]
pub struct Report {
    fields: Vec<(String, String)>,
    timings: Option<Vec<(String, Duration)>>,
}

impl Report {
    pub fn new(command: &str, timings: bool) -> Self {
        let mut report = Self {
            fields: Vec::new(),
            timings: timings.then(Vec::new),
        };
        report.field("command", command);
        report
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    /// Runs `step`, recording its wall-clock time when timings are enabled.
    pub fn timed<T>(&mut self, name: &str, step: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = step();
        if let Some(timings) = &mut self.timings {
            timings.push((name.to_string(), start.elapsed()));
        }
        out
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, value) in &self.fields {
            writeln!(f, "{key}: {value}")?;
        }
        for (name, elapsed) in self.timings.iter().flatten() {
            writeln!(f, "time_ms.{name}: {:.3}", elapsed.as_secs_f64() * 1e3)?;
        }
        Ok(())
    }
}

pub fn set<I: IntoIterator<Item = usize>>(items: I) -> String {
    let items: Vec<String> = items.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn blocks<'a, I: IntoIterator<Item = &'a Vec<usize>>>(blocks: I) -> String {
    let parts: Vec<String> = blocks.into_iter().map(|b| set(b.iter().copied())).collect();
    if parts.is_empty() {
        "none".to_string()
    } else {
        parts.join(" ")
    }
}
