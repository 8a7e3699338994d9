use std::fmt::Debug;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::canonical::GraphClass;
use crate::error::Result;
use crate::linear::{LinComb, Rational, TensorComb};
use crate::matrix::{AdjMatrix, ExtAdjMatrix};
use crate::wire::{self, WireGraph};

/// Values that can appear in a failure record.
pub trait Wire {
    fn wire(&self) -> Value;
}

fn raw(json: &str) -> Value {
    wire::parse_json(json).expect("serializer emits valid JSON")
}

impl Wire for GraphClass {
    fn wire(&self) -> Value {
        raw(self.key())
    }
}

impl Wire for LinComb {
    fn wire(&self) -> Value {
        raw(&wire::lincomb_to_json(self))
    }
}

impl Wire for TensorComb {
    fn wire(&self) -> Value {
        raw(&wire::tensor_to_json(self))
    }
}

impl Wire for AdjMatrix {
    fn wire(&self) -> Value {
        raw(&WireGraph::plain(self.clone()).to_json())
    }
}

impl Wire for ExtAdjMatrix {
    fn wire(&self) -> Value {
        raw(&WireGraph::extended(self.clone()).to_json())
    }
}

impl Wire for Rational {
    fn wire(&self) -> Value {
        Value::String(wire::rational_to_string(self))
    }
}

impl Wire for bool {
    fn wire(&self) -> Value {
        Value::Bool(*self)
    }
}

impl Wire for u64 {
    fn wire(&self) -> Value {
        json!(self)
    }
}

impl Wire for usize {
    fn wire(&self) -> Value {
        json!(self)
    }
}

impl Wire for str {
    fn wire(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl<T: Wire> Wire for Vec<T> {
    fn wire(&self) -> Value {
        Value::Array(self.iter().map(Wire::wire).collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub inputs: Vec<Value>,
    pub expected: Value,
    pub actual: Value,
}

/// Outcome of one law over all its instances.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub law_id: String,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
    pub seed: u64,
    /// `false` for observations: the identity is checked and reported but a
    /// failure does not fail the run.
    pub asserted: bool,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// An asserted law with at least one failing instance.
    pub fn is_violation(&self) -> bool {
        self.asserted && !self.passed()
    }

    /// Marks the report as an observation.
    pub fn observed(mut self) -> Self {
        self.asserted = false;
        self
    }

    /// One JSON line. The elapsed time is left out so that repeated runs
    /// produce identical bytes.
    pub fn to_json_line(&self) -> String {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| json!({"inputs": f.inputs, "expected": f.expected, "actual": f.actual}))
            .collect();
        json!({
            "law": self.law_id,
            "pass": self.passed(),
            "asserted": self.asserted,
            "instances": self.instances_checked,
            "seed": self.seed,
            "failures": failures,
        })
        .to_string()
    }
}

/// Failure records kept per law; the instance count keeps going.
const MAX_RECORDED: usize = 16;

/// Accumulates the instances of one law.
pub(crate) struct Law {
    id: String,
    seed: u64,
    start: Instant,
    instances: u64,
    failures: Vec<Failure>,
}

impl Law {
    pub(crate) fn new(id: &str, seed: u64) -> Self {
        Law {
            id: id.to_string(),
            seed,
            start: Instant::now(),
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, inputs: Vec<Value>, expected: Value, actual: Value) {
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(Failure {
                inputs,
                expected,
                actual,
            });
        }
    }

    /// Checks `actual == expected`, counting an error on either side as a
    /// failure.
    pub(crate) fn eq<T: PartialEq + Wire>(&mut self, inputs: &[&dyn Wire], expected: Result<T>, actual: Result<T>) {
        self.instances += 1;
        match (expected, actual) {
            (Ok(e), Ok(a)) if e == a => {}
            (e, a) => {
                let show = |r: Result<T>| match r {
                    Ok(v) => v.wire(),
                    Err(err) => json!({"error": err.to_string()}),
                };
                let inputs = inputs.iter().map(|w| w.wire()).collect();
                self.record(inputs, show(e), show(a));
            }
        }
    }

    /// Checks a predicate; `detail` describes what was observed on failure.
    pub(crate) fn holds(&mut self, inputs: &[&dyn Wire], ok: Result<bool>, detail: impl FnOnce() -> String) {
        self.instances += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => {
                let inputs = inputs.iter().map(|w| w.wire()).collect();
                self.record(inputs, Value::Bool(true), Value::String(detail()));
            }
            Err(err) => {
                let inputs = inputs.iter().map(|w| w.wire()).collect();
                self.record(inputs, Value::Bool(true), json!({"error": err.to_string()}));
            }
        }
    }

    pub(crate) fn finish(self) -> LawReport {
        LawReport {
            law_id: self.id,
            instances_checked: self.instances,
            failures: self.failures,
            elapsed: self.start.elapsed(),
            seed: self.seed,
            asserted: true,
        }
    }
}
