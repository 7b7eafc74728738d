use std::fmt::Write as _;

use clap::ValueEnum;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use super::Failure;
use crate::combinatorics::{DominantWeight, GroupParams};
use crate::formulas::{pim_dim, CoinvariantPoly, PimDecomposition, TensorFactor};
use crate::series::{BiSeries, LaurentSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(super) enum Format {
    Json,
    Csv,
    Pretty,
}

/// Labels printed next to a series.
pub(super) struct SeriesMeta {
    fields: Map<String, Value>,
    header: Vec<String>,
}

impl SeriesMeta {
    pub(super) fn new(g: &GroupParams, theorem: &str, conjecture: bool) -> Self {
        let mut fields = params_fields(g);
        fields.insert("theorem".into(), json!(theorem));
        fields.insert("conjecture".into(), json!(conjecture));
        let mut header = vec![g.to_string(), format!("theorem: {theorem}")];
        if conjecture {
            header.push("CONJECTURE".to_string());
        }
        SeriesMeta { fields, header }
    }

    pub(super) fn with_factor(mut self, factor: &TensorFactor, k: i64) -> Self {
        self.fields.insert("factor".into(), json!(factor.to_string()));
        self.fields.insert("k".into(), json!(k));
        self.header.push(format!("factor: {factor}, k = {k}"));
        self
    }

    pub(super) fn with_target(mut self, target: &[i64], det_shift: i64) -> Self {
        self.fields.insert("target".into(), json!(target));
        self.fields.insert("det_shift".into(), json!(det_shift));
        self.header.push(format!("target: {target:?}, det shift {det_shift}"));
        self
    }
}

fn params_fields(g: &GroupParams) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(g.n()));
    m.insert("p".into(), json!(g.p()));
    m.insert("r".into(), json!(g.r()));
    m.insert("q".into(), json!(g.q()));
    m
}

/// An arbitrary-precision JSON integer.
fn big(c: &impl ToString) -> Value {
    serde_json::from_str(&c.to_string()).expect("decimal integer")
}

fn series_value(s: &LaurentSeries) -> Map<String, Value> {
    match serde_json::from_str(&s.to_json()).expect("canonical JSON") {
        Value::Object(m) => m,
        _ => unreachable!("series JSON is an object"),
    }
}

fn finish_json(v: Value) -> String {
    let mut out = serde_json::to_string(&v).expect("serializable");
    out.push('\n');
    out
}

pub(super) fn series(s: &LaurentSeries, meta: &SeriesMeta, format: Format) -> String {
    match format {
        Format::Json => {
            let mut m = meta.fields.clone();
            m.extend(series_value(s));
            finish_json(Value::Object(m))
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (i, c) in s.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{},{c}", s.shift() + i as i64);
            }
            out
        }
        Format::Pretty => {
            let mut out = meta.header.join("\n");
            out.push('\n');
            for (d, c) in s.terms().filter(|(_, c)| !c.is_zero()) {
                let _ = writeln!(out, "  t^{d}: {c}");
            }
            let _ = writeln!(out, "  + O(t^{})", s.trunc() + 1);
            out
        }
    }
}

pub(super) fn bigraded(bi: &BiSeries, g: &GroupParams, format: Format) -> String {
    let theorem = crate::formulas::BIGRADED;
    match format {
        Format::Json => {
            let mut m = params_fields(g);
            m.insert("theorem".into(), json!(theorem));
            m.insert("conjecture".into(), json!(false));
            m.insert("trunc_t".into(), json!(bi.trunc_t()));
            m.insert("max_s".into(), json!(bi.max_s()));
            let coeffs: Vec<Value> =
                bi.coeffs().iter().map(|((a, b), c)| json!({"t": a, "s": b, "c": big(c)})).collect();
            m.insert("coeffs".into(), Value::Array(coeffs));
            finish_json(Value::Object(m))
        }
        Format::Csv => {
            let mut out = String::from("t_degree,s_degree,coefficient\n");
            for ((a, b), c) in bi.coeffs() {
                let _ = writeln!(out, "{a},{b},{c}");
            }
            out
        }
        Format::Pretty => {
            let mut out = format!("{g}\ntheorem: {theorem}\n");
            for ((a, b), c) in bi.coeffs() {
                let _ = writeln!(out, "  t^{a} s^{b}: {c}");
            }
            let _ = writeln!(out, "  + O(t^{})", bi.trunc_t() + 1);
            out
        }
    }
}

pub(super) fn pim(d: &PimDecomposition, g: &GroupParams, format: Format) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for e in &d.entries {
        let dim = pim_dim(g, &DominantWeight::from_partition(&e.tau, g.n())?)?;
        rows.push((e.weight.entries().to_vec(), e.mult, dim));
    }
    Ok(match format {
        Format::Json => {
            let arr: Vec<Value> =
                rows.iter().map(|(w, m, dim)| json!({"weight": w, "mult": m, "dim": big(dim)})).collect();
            finish_json(Value::Array(arr))
        }
        Format::Csv => {
            let mut out = String::from("weight,mult,dim\n");
            for (w, m, dim) in &rows {
                let w: Vec<String> = w.iter().map(i64::to_string).collect();
                let _ = writeln!(out, "{},{m},{dim}", w.join(" "));
            }
            out
        }
        Format::Pretty => {
            let mut out = format!("{g}\n");
            for (w, m, dim) in &rows {
                let _ = writeln!(out, "  P{w:?} x {m}  (dim {dim})");
            }
            out
        }
    })
}

pub(super) fn coinv(c: &CoinvariantPoly, g: &GroupParams, format: Format) -> String {
    let high = c.poly.high_degree().unwrap_or(0);
    let poly = LaurentSeries::from_poly(&c.poly, high);
    match format {
        Format::Json => {
            let mut m = params_fields(g);
            m.insert("theorem".into(), json!(c.theorem));
            m.insert("conjecture".into(), json!(false));
            m.insert("target".into(), json!(c.target.entries()));
            m.insert("det_shift".into(), json!(c.det_shift));
            m.insert("value_at_1".into(), big(&c.value_at_1));
            m.insert("poly".into(), Value::Object(series_value(&poly)));
            finish_json(Value::Object(m))
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (i, coeff) in poly.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{},{coeff}", poly.shift() + i as i64);
            }
            out
        }
        Format::Pretty => {
            let mut out =
                format!("{g}\ntheorem: {}\ntarget: {:?}, det shift {}\n", c.theorem, c.target.entries(), c.det_shift);
            for (d, coeff) in poly.terms().filter(|(_, x)| !x.is_zero()) {
                let _ = writeln!(out, "  t^{d}: {coeff}");
            }
            let _ = writeln!(out, "value at t = 1: {}", c.value_at_1);
            out
        }
    }
}
