//! Law evaluation over sample sets, witnesses and reports.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::sample::SampleSpec;

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub spec: SampleSpec,
    pub exec: Exec,
    /// Failures recorded per law before evaluation of that law stops.
    pub failure_cap: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { spec: SampleSpec::default(), exec: Exec::default(), failure_cap: 5 }
    }
}

impl CheckConfig {
    pub fn new(spec: SampleSpec) -> Self {
        CheckConfig { spec, ..CheckConfig::default() }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_spec(&self, spec: SampleSpec) -> Self {
        CheckConfig { spec, ..self.clone() }
    }

    /// Evaluates `eval` on every sample, in chunks, until the failure cap is
    /// reached. Chunks are evaluated with the configured strategy and merged
    /// in sample order.
    pub fn law<T, F>(&self, law: &str, anchor: &str, samples: &[T], eval: F) -> LawResult
    where
        T: Serialize + Sync,
        F: Fn(&T) -> Result<Verdict> + Sync + Send,
    {
        const CHUNK: usize = 64;
        let cap = self.failure_cap.max(1);
        let mut witnesses = Vec::new();
        let mut evaluated = 0;
        'outer: for chunk in samples.chunks(CHUNK) {
            let verdicts = self.exec.map(chunk, |s| eval(s));
            for (s, v) in chunk.iter().zip(verdicts) {
                evaluated += 1;
                let witness = match v {
                    Ok(Verdict::Pass) => continue,
                    Ok(Verdict::Fail { lhs, rhs }) => Witness { inputs: to_value(s), lhs: Some(lhs), rhs: Some(rhs), error: None },
                    Err(e) => Witness { inputs: to_value(s), lhs: None, rhs: None, error: Some(e.to_string()) },
                };
                witnesses.push(witness);
                if witnesses.len() >= cap {
                    break 'outer;
                }
            }
        }
        LawResult::from_witnesses(law, anchor, evaluated, witnesses)
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or_else(|e| Value::String(format!("<unserializable: {}>", e)))
}

/// Outcome of one law evaluation on one sample.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Pass,
    Fail { lhs: Value, rhs: Value },
}

impl Verdict {
    /// Compares two evaluated sides.
    pub fn equal<T: Serialize + PartialEq>(lhs: &T, rhs: &T) -> Verdict {
        if lhs == rhs {
            Verdict::Pass
        } else {
            Verdict::Fail { lhs: to_value(lhs), rhs: to_value(rhs) }
        }
    }

    /// A predicate with the observed value as left side and the expectation
    /// as right side.
    pub fn holds<T: Serialize>(ok: bool, observed: &T, expected: &str) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail { lhs: to_value(observed), rhs: Value::String(expected.to_string()) }
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawResult {
    pub law: String,
    pub anchor: String,
    pub samples: usize,
    pub passed: bool,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub more_witnesses: Vec<Witness>,
}

impl LawResult {
    pub fn from_witnesses(law: &str, anchor: &str, samples: usize, mut witnesses: Vec<Witness>) -> LawResult {
        let failures = witnesses.len();
        let witness = if witnesses.is_empty() { None } else { Some(witnesses.remove(0)) };
        LawResult {
            law: law.to_string(),
            anchor: anchor.to_string(),
            samples,
            passed: witness.is_none(),
            failures,
            witness,
            more_witnesses: witnesses,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub instance: String,
    pub laws: Vec<LawResult>,
}

impl CheckReport {
    pub fn new(suite: &str, instance: impl Into<String>) -> Self {
        CheckReport { suite: suite.to_string(), instance: instance.into(), laws: Vec::new() }
    }

    pub fn push(&mut self, law: LawResult) {
        self.laws.push(law);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.laws.extend(other.laws);
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }

    pub fn failing(&self) -> impl Iterator<Item = &LawResult> {
        self.laws.iter().filter(|l| !l.passed)
    }

    pub fn law(&self, id: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == id)
    }

    pub fn total_samples(&self) -> usize {
        self.laws.iter().map(|l| l.samples).sum()
    }

    /// Turns a failing report into an error carrying its first witness.
    pub fn into_result(self) -> Result<CheckReport> {
        let message = self.failing().next().map(|l| {
            format!(
                "{} fails {} ({}) on {}",
                self.instance,
                l.law,
                l.anchor,
                l.witness.as_ref().map(|w| w.inputs.to_string()).unwrap_or_default()
            )
        });
        match message {
            None => Ok(self),
            Some(m) => Err(Error::Invalid(m)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_stops_evaluation_and_keeps_order() {
        let cfg = CheckConfig { failure_cap: 3, ..CheckConfig::default() };
        let samples: Vec<u32> = (0..500).collect();
        let r = cfg.law("odd", "x is even", &samples, |x| Ok(Verdict::equal(&(x % 2), &0)));
        assert!(!r.passed);
        assert_eq!(r.failures, 3);
        assert_eq!(r.samples, 6);
        assert_eq!(r.witness.unwrap().inputs, serde_json::json!(1));
        assert_eq!(r.more_witnesses[1].inputs, serde_json::json!(5));
    }

    #[test]
    fn errors_become_witnesses() {
        let cfg = CheckConfig::default();
        let r = cfg.law("e", "no errors", &[1u8], |_| Err(Error::mismatch("boom")));
        assert_eq!(r.witness.unwrap().error.unwrap(), "type mismatch: boom");
    }

    #[test]
    fn passing_law_has_no_witness() {
        let cfg = CheckConfig::default().with_exec(Exec::Sequential);
        let samples: Vec<u32> = (0..100).collect();
        let r = cfg.law("t", "x = x", &samples, |x| Ok(Verdict::equal(x, x)));
        assert!(r.passed && r.witness.is_none());
        assert_eq!(r.samples, 100);
    }
}
