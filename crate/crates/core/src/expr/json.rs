//! Strict JSON encodings.
//!
//! * Gaussian rational: `["re_n", "re_d", "im_n", "im_d"]`
//! * Bicomplex: the alpha and beta encodings concatenated (8 strings)
//! * Function: `{"plus": [[a, b, c, d, coeff], ...], "minus": [...]}`
//! * Operator: the same term lists under `"op_plus"` / `"op_minus"`
//!
//! Decoders accept only the canonical form: reduced fractions with positive
//! denominators, integers without leading zeros or `-0`, strictly increasing
//! exponent tuples and no zero coefficients.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::operator::Operator;
use crate::poly::{BicomplexFunction, Poly4};
use crate::scalar::{Bicomplex, GaussianRational, Rational};

fn rational_strings(r: &Rational) -> [Value; 2] {
    [Value::String(r.numer().to_string()), Value::String(r.denom().to_string())]
}

pub fn gaussian_to_json(c: &GaussianRational) -> Value {
    let [a, b] = rational_strings(&c.re);
    let [d, e] = rational_strings(&c.im);
    Value::Array(vec![a, b, d, e])
}

pub fn bicomplex_to_json(z: &Bicomplex) -> Value {
    let mut out = Vec::with_capacity(8);
    for c in [&z.alpha, &z.beta] {
        let [a, b] = rational_strings(&c.re);
        let [d, e] = rational_strings(&c.im);
        out.extend([a, b, d, e]);
    }
    Value::Array(out)
}

pub fn poly_to_json(p: &Poly4) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([e[0], e[1], e[2], e[3], gaussian_to_json(c)]))
            .collect(),
    )
}

pub fn function_to_json(f: &BicomplexFunction) -> Value {
    json!({ "plus": poly_to_json(&f.plus), "minus": poly_to_json(&f.minus) })
}

pub fn operator_to_json(t: &Operator) -> Value {
    json!({ "op_plus": poly_to_json(&t.plus), "op_minus": poly_to_json(&t.minus) })
}

fn integer(v: &Value, path: &str) -> Result<BigInt> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::json(path, "expected a decimal integer string"))?;
    let digits = s.strip_prefix('-').unwrap_or(s);
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
        && s != "-0";
    if !canonical {
        return Err(Error::json(path, format!("{s:?} is not a canonical decimal integer")));
    }
    Ok(s.parse().expect("validated digits"))
}

fn rational_at(items: &[Value], offset: usize, path: &str) -> Result<Rational> {
    let n = integer(&items[offset], &format!("{path}[{offset}]"))?;
    let dpath = format!("{path}[{}]", offset + 1);
    let d = integer(&items[offset + 1], &dpath)?;
    if d <= BigInt::from(0) {
        return Err(Error::json(dpath, "denominator must be positive"));
    }
    let r = Rational::new(n.clone(), d.clone());
    if *r.numer() != n || *r.denom() != d {
        return Err(Error::json(path, "fraction is not in lowest terms"));
    }
    Ok(r)
}

fn array<'a>(v: &'a Value, len: usize, path: &str) -> Result<&'a [Value]> {
    match v.as_array() {
        Some(a) if a.len() == len => Ok(a),
        Some(a) => Err(Error::json(path, format!("expected {len} elements, found {}", a.len()))),
        None => Err(Error::json(path, "expected an array")),
    }
}

fn gaussian_at(items: &[Value], offset: usize, path: &str) -> Result<GaussianRational> {
    Ok(GaussianRational::new(
        rational_at(items, offset, path)?,
        rational_at(items, offset + 2, path)?,
    ))
}

pub fn gaussian_from_json(v: &Value, path: &str) -> Result<GaussianRational> {
    gaussian_at(array(v, 4, path)?, 0, path)
}

pub fn bicomplex_from_json(v: &Value) -> Result<Bicomplex> {
    let items = array(v, 8, "$")?;
    Ok(Bicomplex::new(gaussian_at(items, 0, "$")?, gaussian_at(items, 4, "$")?))
}

fn exponent(v: &Value, path: &str) -> Result<u32> {
    v.as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Error::json(path, "expected a nonnegative 32-bit integer exponent"))
}

pub fn poly_from_json(v: &Value, path: &str) -> Result<Poly4> {
    let terms = v
        .as_array()
        .ok_or_else(|| Error::json(path, "expected an array of terms"))?;
    let mut p = Poly4::zero();
    let mut last: Option<[u32; 4]> = None;
    for (idx, term) in terms.iter().enumerate() {
        let tpath = format!("{path}[{idx}]");
        let items = array(term, 5, &tpath)?;
        let mut e = [0u32; 4];
        for (slot, item) in e.iter_mut().zip(items) {
            *slot = exponent(item, &tpath)?;
        }
        if last.is_some_and(|prev| prev >= e) {
            return Err(Error::json(tpath, "terms must be strictly increasing in exponent order"));
        }
        last = Some(e);
        let cpath = format!("{tpath}[4]");
        let c = gaussian_from_json(&items[4], &cpath)?;
        if c.is_zero() {
            return Err(Error::json(cpath, "zero coefficients are not stored"));
        }
        p.add_term(e, c);
    }
    Ok(p)
}

fn object_pair<'a>(v: &'a Value, keys: [&str; 2]) -> Result<(&'a Value, &'a Value)> {
    let obj: &Map<String, Value> = v.as_object().ok_or_else(|| Error::json("$", "expected an object"))?;
    if let Some(extra) = obj.keys().find(|k| !keys.contains(&k.as_str())) {
        return Err(Error::json(format!("$.{extra}"), "unexpected key"));
    }
    let get = |k: &str| obj.get(k).ok_or_else(|| Error::json(format!("$.{k}"), "missing key"));
    Ok((get(keys[0])?, get(keys[1])?))
}

pub fn function_from_json(v: &Value) -> Result<BicomplexFunction> {
    let (p, m) = object_pair(v, ["plus", "minus"])?;
    Ok(BicomplexFunction::new(poly_from_json(p, "$.plus")?, poly_from_json(m, "$.minus")?))
}

pub fn operator_from_json(v: &Value) -> Result<Operator> {
    let (p, m) = object_pair(v, ["op_plus", "op_minus"])?;
    Ok(Operator::new(poly_from_json(p, "$.op_plus")?, poly_from_json(m, "$.op_minus")?))
}

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::json("$", format!("line {} column {}: {e}", e.line(), e.column())))
}

pub fn parse_bicomplex_json(text: &str) -> Result<Bicomplex> {
    bicomplex_from_json(&parse_value(text)?)
}

pub fn parse_function_json(text: &str) -> Result<BicomplexFunction> {
    function_from_json(&parse_value(text)?)
}

pub fn parse_operator_json(text: &str) -> Result<Operator> {
    operator_from_json(&parse_value(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{f1, g1};
    use crate::scalar::rational;

    #[test]
    fn bicomplex_encoding() {
        let z = Bicomplex::new(
            GaussianRational::new(rational(5, 1), rational(-1, 1)),
            GaussianRational::new(rational(-3, 2), rational(0, 1)),
        );
        let v = bicomplex_to_json(&z);
        assert_eq!(v.to_string(), r#"["5","1","-1","1","-3","2","0","1"]"#);
        assert_eq!(bicomplex_from_json(&v).unwrap(), z);
    }

    #[test]
    fn function_encoding() {
        let text = function_to_json(&g1()).to_string();
        assert_eq!(
            text,
            r#"{"minus":[[0,1,0,1,["2","1","0","1"]],[1,0,0,1,["2","1","0","1"]]],"plus":[[0,1,0,1,["2","1","0","1"]],[0,1,1,0,["2","1","0","1"]]]}"#
        );
        assert_eq!(parse_function_json(&text).unwrap(), g1());
        let t = crate::operator::Operator::laplacian(7).unwrap();
        assert_eq!(parse_operator_json(&operator_to_json(&t).to_string()).unwrap(), t);
        assert_eq!(parse_function_json(&function_to_json(&f1()).to_string()).unwrap(), f1());
    }

    fn err_path(text: &str) -> String {
        match parse_function_json(text) {
            Err(Error::Json { path, .. }) => path,
            other => panic!("expected a JSON error, got {other:?}"),
        }
    }

    #[test]
    fn strict_decoding() {
        let one = r#"["1","1","0","1"]"#;
        assert_eq!(err_path(r#"{"plus":[]}"#), "$.minus");
        assert_eq!(err_path(r#"{"plus":[],"minus":[],"x":1}"#), "$.x");
        assert_eq!(err_path(r#"{"plus":[[0,0,0,0,["2","4","0","1"]]],"minus":[]}"#), "$.plus[0][4]");
        assert_eq!(err_path(r#"{"plus":[[0,0,0,0,["1","-1","0","1"]]],"minus":[]}"#), "$.plus[0][4][1]");
        assert_eq!(err_path(r#"{"plus":[[0,0,0,0,["01","1","0","1"]]],"minus":[]}"#), "$.plus[0][4][0]");
        assert_eq!(err_path(r#"{"plus":[[0,0,0,0,["-0","1","0","1"]]],"minus":[]}"#), "$.plus[0][4][0]");
        assert_eq!(err_path(r#"{"plus":[[0,0,0,0,["0","1","0","1"]]],"minus":[]}"#), "$.plus[0][4]");
        assert_eq!(
            err_path(&format!(r#"{{"plus":[[1,0,0,0,{one}],[0,0,0,0,{one}]],"minus":[]}}"#)),
            "$.plus[1]"
        );
        assert_eq!(
            err_path(&format!(r#"{{"plus":[[0,0,0,0,{one}],[0,0,0,0,{one}]],"minus":[]}}"#)),
            "$.plus[1]"
        );
        assert_eq!(err_path(&format!(r#"{{"plus":[[0,-1,0,0,{one}]],"minus":[]}}"#)), "$.plus[0]");
        assert_eq!(err_path(r#"{"plus":[[0,0,0,0,[1,1,0,1]]],"minus":[]}"#), "$.plus[0][4][0]");
        assert_eq!(err_path("[1,2"), "$");
        assert!(parse_bicomplex_json(r#"["1","1","0","1"]"#).is_err());
    }
}
