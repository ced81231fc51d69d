use std::io::Read;

use serde_json::{json, Value};
use tracechar::{Elem, Mat2, Rep, Tower};

use crate::Failure;

pub fn read_input(src: &str) -> Result<Value, String> {
    let text = if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        s
    } else if src.trim_start().starts_with(['{', '[']) {
        src.to_string()
    } else {
        std::fs::read_to_string(src).map_err(|e| format!("cannot read {src}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON: {e}"))
}

pub fn malformed(msg: impl Into<String>) -> Failure {
    Failure::Malformed(msg.into())
}

pub fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    v.get(key).ok_or_else(|| malformed(format!("missing '{key}'")))
}

/// A field element from a string such as `"3/2"` or an integer.
pub fn elem(t: &Tower, v: &Value) -> Result<Elem, Failure> {
    Ok(Elem::from_json(v, t)?)
}

pub fn elems<const N: usize>(t: &Tower, v: &Value) -> Result<[Elem; N], Failure> {
    let arr = v.as_array().filter(|a| a.len() == N).ok_or_else(|| malformed(format!("expected a list of {N} values")))?;
    let out: Vec<Elem> = arr.iter().map(|x| elem(t, x)).collect::<Result<_, _>>()?;
    Ok(out.try_into().unwrap())
}

pub fn matrix_json(m: &Mat2<Elem>) -> Value {
    json!([m.a.to_string(), m.b.to_string(), m.c.to_string(), m.d.to_string()])
}

pub fn rep_json(r: &Rep<Elem>) -> Value {
    json!({ "generators": r.gens.iter().map(matrix_json).collect::<Vec<_>>() })
}
