//! Reports: the structured and textual forms of every command result, and
//! the JSON encoding of operators and polynomials.
//!
//! Operator schema:
//! `{"dim": n, "terms": [{"dmono": [e1..en], "coeff": {"num": <terms>,
//! "den": <terms>}}]}` with polynomial terms
//! `[{"exps": [[class, index, power], ...], "coeff": "p/q"}]`,
//! terms in descending graded-lex order and exponents in ascending
//! variable order.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use pdo_core::{DMono, DiffOp, MultiPoly, Monomial, RatFun, Rational, VarClass, VarId};

pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_string(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

fn varclass_name(c: VarClass) -> &'static str {
    c.as_str()
}

fn varclass_from_name(s: &str) -> Option<VarClass> {
    match s {
        "param" => Some(VarClass::Param),
        "x" => Some(VarClass::X),
        "z" => Some(VarClass::Z),
        "mu" => Some(VarClass::Mu),
        _ => None,
    }
}

pub fn poly_to_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms_desc()
        .map(|(mono, coeff)| {
            let exps: Vec<Value> = mono
                .iter()
                .map(|(v, e)| json!([varclass_name(v.class), v.index, e]))
                .collect();
            json!({ "exps": exps, "coeff": rational_to_string(coeff) })
        })
        .collect();
    Value::Array(terms)
}

pub fn poly_from_json(v: &Value) -> Option<MultiPoly> {
    let mut out = MultiPoly::zero();
    for term in v.as_array()? {
        let coeff = rational_from_string(term.get("coeff")?.as_str()?)?;
        let mut pairs = Vec::new();
        for entry in term.get("exps")?.as_array()? {
            let triple = entry.as_array()?;
            let class = varclass_from_name(triple.first()?.as_str()?)?;
            let index = triple.get(1)?.as_u64()? as u32;
            let power = triple.get(2)?.as_u64()? as u32;
            pairs.push((VarId::new(class, index), power));
        }
        out.add_term(Monomial::from_pairs(pairs), coeff);
    }
    Some(out)
}

pub fn ratfun_to_json(f: &RatFun) -> Value {
    json!({ "num": poly_to_json(f.num()), "den": poly_to_json(f.den()) })
}

pub fn ratfun_from_json(v: &Value) -> Option<RatFun> {
    let num = poly_from_json(v.get("num")?)?;
    let den = poly_from_json(v.get("den")?)?;
    RatFun::new(num, den).ok()
}

pub fn operator_to_json(op: &DiffOp) -> Value {
    let terms: Vec<Value> = op
        .terms_desc()
        .map(|(d, coeff)| json!({ "dmono": d.0, "coeff": ratfun_to_json(coeff) }))
        .collect();
    json!({ "dim": op.dim(), "terms": terms })
}

pub fn operator_from_json(v: &Value) -> Option<DiffOp> {
    let dim = v.get("dim")?.as_u64()? as usize;
    let mut op = DiffOp::zero(dim);
    for term in v.get("terms")?.as_array()? {
        let idx: Vec<u32> = term
            .get("dmono")?
            .as_array()?
            .iter()
            .map(|e| e.as_u64().map(|n| n as u32))
            .collect::<Option<_>>()?;
        if idx.len() != dim {
            return None;
        }
        let coeff = ratfun_from_json(term.get("coeff")?)?;
        op.add_term(DMono(idx), coeff);
    }
    Some(op)
}

/// One check of the built-in reproduction suite.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The result payload of a command.
#[derive(Debug, Clone)]
pub enum Payload {
    Operator(DiffOp),
    /// Coefficient of the exponential: op applied to coeff * exp(x.z).
    Function { dim: usize, coeff: RatFun },
    Verdict { value: bool, detail: String },
    Resultant {
        kind: String,
        value: MultiPoly,
        x_content: MultiPoly,
        rank: usize,
        columns: usize,
    },
    StructurePair { g: MultiPoly, c: MultiPoly, modulus: MultiPoly },
    OperatorList { names: Vec<String>, ops: Vec<DiffOp>, determinant: MultiPoly },
    Suite { checks: Vec<Check> },
}

#[derive(Debug, Clone)]
pub struct Provenance {
    pub mode: Option<String>,
    pub seed: Option<u64>,
    pub minors_examined: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub dim: usize,
    pub payload: Payload,
    pub provenance: Provenance,
    pub timing_ms: f64,
}

impl Report {
    /// Exit status: 0 for success, 1 for a mathematical negative.
    pub fn exit_code(&self) -> i32 {
        match &self.payload {
            Payload::Verdict { value, .. } => {
                if *value {
                    0
                } else {
                    1
                }
            }
            Payload::Suite { checks } => {
                if checks.iter().all(|c| c.passed) {
                    0
                } else {
                    1
                }
            }
            _ => 0,
        }
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        match &self.payload {
            Payload::Operator(op) => {
                writeln!(out, "result: {}", op).unwrap();
            }
            Payload::Function { dim, coeff } => {
                let wave: Vec<String> = (1..=*dim).map(|i| format!("x{i}*z{i}")).collect();
                writeln!(out, "result: ({}) exp({})", coeff, wave.join(" + ")).unwrap();
            }
            Payload::Verdict { value, detail } => {
                writeln!(out, "result: {}", value).unwrap();
                if !detail.is_empty() {
                    writeln!(out, "detail: {}", detail).unwrap();
                }
            }
            Payload::Resultant {
                kind,
                value,
                x_content,
                rank,
                columns,
            } => {
                writeln!(out, "kind: {}", kind).unwrap();
                writeln!(out, "value: {}", value).unwrap();
                writeln!(out, "x-content: {}", x_content).unwrap();
                writeln!(out, "rank: {}/{}", rank, columns).unwrap();
            }
            Payload::StructurePair { g, c, modulus } => {
                writeln!(out, "g: {}", g).unwrap();
                writeln!(out, "c: {}", c).unwrap();
                writeln!(out, "modulus: {}", modulus).unwrap();
            }
            Payload::OperatorList {
                names,
                ops,
                determinant,
            } => {
                for (name, op) in names.iter().zip(ops) {
                    writeln!(out, "{}: {}", name, op).unwrap();
                }
                writeln!(out, "determinant: {}", determinant).unwrap();
            }
            Payload::Suite { checks } => {
                let mut passed = 0;
                for check in checks {
                    writeln!(
                        out,
                        "{}: {}{}",
                        if check.passed { "PASS" } else { "FAIL" },
                        check.name,
                        if check.detail.is_empty() {
                            String::new()
                        } else {
                            format!(" ({})", check.detail)
                        }
                    )
                    .unwrap();
                    if check.passed {
                        passed += 1;
                    }
                }
                writeln!(out, "passed {}/{}", passed, checks.len()).unwrap();
            }
        }
        if let Some(mode) = &self.provenance.mode {
            writeln!(out, "mode: {}", mode).unwrap();
        }
        if let Some(seed) = self.provenance.seed {
            writeln!(out, "seed: {}", seed).unwrap();
        }
        if let Some(m) = self.provenance.minors_examined {
            writeln!(out, "minors examined: {}", m).unwrap();
        }
        writeln!(out, "time: {:.3} ms", self.timing_ms).unwrap();
        out
    }

    pub fn to_json(&self) -> Value {
        let result = match &self.payload {
            Payload::Operator(op) => json!({
                "type": "operator",
                "text": op.to_string(),
                "input": op.to_input_string(),
                "operator": operator_to_json(op),
            }),
            Payload::Function { dim, coeff } => json!({
                "type": "function",
                "text": format!("({}) exp(x.z)", coeff),
                "dim": dim,
                "coeff": ratfun_to_json(coeff),
            }),
            Payload::Verdict { value, detail } => json!({
                "type": "verdict",
                "value": value,
                "detail": detail,
            }),
            Payload::Resultant {
                kind,
                value,
                x_content,
                rank,
                columns,
            } => json!({
                "type": "resultant",
                "kind": kind,
                "value_text": value.to_string(),
                "value": poly_to_json(value),
                "x_content_text": x_content.to_string(),
                "x_content": poly_to_json(x_content),
                "rank": rank,
                "columns": columns,
            }),
            Payload::StructurePair { g, c, modulus } => json!({
                "type": "structure-pair",
                "g_text": g.to_string(),
                "g": poly_to_json(g),
                "c_text": c.to_string(),
                "c": poly_to_json(c),
                "modulus_text": modulus.to_string(),
            }),
            Payload::OperatorList {
                names,
                ops,
                determinant,
            } => json!({
                "type": "operator-list",
                "operators": names.iter().zip(ops).map(|(name, op)| json!({
                    "name": name,
                    "text": op.to_string(),
                    "operator": operator_to_json(op),
                })).collect::<Vec<_>>(),
                "determinant_text": determinant.to_string(),
                "determinant": poly_to_json(determinant),
            }),
            Payload::Suite { checks } => json!({
                "type": "suite",
                "checks": checks.iter().map(|c| json!({
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
                "passed": checks.iter().filter(|c| c.passed).count(),
                "total": checks.len(),
            }),
        };
        json!({
            "command": self.command,
            "dim": self.dim,
            "result": result,
            "provenance": {
                "mode": self.provenance.mode,
                "seed": self.provenance.seed,
                "minors_examined": self.provenance.minors_examined,
            },
            "timing_ms": self.timing_ms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_json_roundtrip() {
        let ex = pdo_core::build_example_k();
        for op in [&ex.k, &ex.l, &ex.p] {
            let v = operator_to_json(op);
            let back = operator_from_json(&v).unwrap();
            assert_eq!(&back, op);
        }
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&pdo_core::rat(5)), "5");
        assert_eq!(rational_to_string(&pdo_core::ratio(-3, 4)), "-3/4");
        assert_eq!(rational_from_string("7/2").unwrap(), pdo_core::ratio(7, 2));
        assert_eq!(rational_from_string("-9").unwrap(), pdo_core::rat(-9));
        assert!(rational_from_string("1/0").is_none());
    }
}
