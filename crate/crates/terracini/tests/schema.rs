//! Structural validation of emitted certificates against the published JSON
//! schema. The validator implements exactly the keyword subset the schema
//! uses (type, required, properties, additionalProperties, items, enum,
//! minimum, minItems, maxItems), so a schema edit that starts using an
//! unsupported keyword fails loudly instead of silently passing.

use serde_json::Value;

use terracini::certify::certify_str;
use terracini::sample::RankOptions;

const SUPPORTED_KEYWORDS: &[&str] = &[
    "$schema",
    "title",
    "description",
    "type",
    "required",
    "properties",
    "additionalProperties",
    "items",
    "enum",
    "minimum",
    "minItems",
    "maxItems",
];

fn type_matches(tag: &str, value: &Value) -> bool {
    match tag {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_i64() || value.is_u64(),
        "number" => value.is_number(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        _ => panic!("unknown type tag {tag:?} in schema"),
    }
}

fn validate(value: &Value, schema: &Value, path: &str, errors: &mut Vec<String>) {
    let obj = schema.as_object().expect("schema nodes are objects");
    for key in obj.keys() {
        assert!(
            SUPPORTED_KEYWORDS.contains(&key.as_str()),
            "schema keyword {key:?} is not supported by this validator"
        );
    }

    if let Some(types) = obj.get("type") {
        let tags: Vec<&str> = match types {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().map(|t| t.as_str().expect("type tags")).collect(),
            _ => panic!("bad type keyword"),
        };
        if !tags.iter().any(|t| type_matches(t, value)) {
            errors.push(format!("{path}: expected type {tags:?}"));
            return;
        }
    }

    if let Some(allowed) = obj.get("enum") {
        let allowed = allowed.as_array().expect("enum is an array");
        if !allowed.contains(value) {
            errors.push(format!("{path}: {value} not in {allowed:?}"));
        }
    }

    if let Some(min) = obj.get("minimum") {
        let ok = match (value.as_i64(), value.as_u64()) {
            (Some(v), _) => v >= min.as_i64().expect("integer minimum"),
            (None, Some(v)) => v >= min.as_u64().unwrap_or(0),
            _ => true,
        };
        if !ok {
            errors.push(format!("{path}: {value} below minimum {min}"));
        }
    }

    if let Value::Object(map) = value {
        if let Some(required) = obj.get("required") {
            for name in required.as_array().expect("required is an array") {
                let name = name.as_str().expect("required names");
                if !map.contains_key(name) {
                    errors.push(format!("{path}: missing required field {name:?}"));
                }
            }
        }
        let props = obj.get("properties").and_then(Value::as_object);
        if obj.get("additionalProperties") == Some(&Value::Bool(false)) {
            for key in map.keys() {
                if !props.is_some_and(|p| p.contains_key(key)) {
                    errors.push(format!("{path}: unexpected field {key:?}"));
                }
            }
        }
        if let Some(props) = props {
            for (name, sub) in props {
                if let Some(v) = map.get(name) {
                    validate(v, sub, &format!("{path}.{name}"), errors);
                }
            }
        }
    }

    if let Value::Array(items) = value {
        if let Some(min) = obj.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < min {
                errors.push(format!("{path}: fewer than {min} items"));
            }
        }
        if let Some(max) = obj.get("maxItems").and_then(Value::as_u64) {
            if (items.len() as u64) > max {
                errors.push(format!("{path}: more than {max} items"));
            }
        }
        if let Some(item_schema) = obj.get("items") {
            for (i, v) in items.iter().enumerate() {
                validate(v, item_schema, &format!("{path}[{i}]"), errors);
            }
        }
    }
}

fn schema() -> Value {
    let text = include_str!("../../../docs/certificate.schema.json");
    serde_json::from_str(text).expect("schema parses")
}

fn check(value: &Value) -> Vec<String> {
    let mut errors = Vec::new();
    validate(value, &schema(), "$", &mut errors);
    errors
}

#[test]
fn emitted_certificates_validate() {
    let opts = RankOptions::with_seed(11);
    for (spec, h) in [("veronese:2:5", 6usize), ("secant:rnc:11:2", 2), ("veronese:2:6", 9)] {
        let cert = certify_str(spec, h, &opts).unwrap();
        let value = serde_json::to_value(&cert).unwrap();
        let errors = check(&value);
        assert!(errors.is_empty(), "{spec} h={h}: {errors:?}");
    }
}

#[test]
fn validator_rejects_damaged_certificates() {
    let opts = RankOptions::with_seed(11);
    let cert = certify_str("veronese:2:5", 6, &opts).unwrap();
    let good = serde_json::to_value(&cert).unwrap();

    let mut missing = good.clone();
    missing.as_object_mut().unwrap().remove("conclusion");
    assert!(check(&missing).iter().any(|e| e.contains("conclusion")));

    let mut extra = good.clone();
    extra.as_object_mut().unwrap().insert("surprise".into(), Value::Null);
    assert!(check(&extra).iter().any(|e| e.contains("surprise")));

    let mut bad_enum = good.clone();
    bad_enum["conclusion"] = Value::String("maybe".into());
    assert!(!check(&bad_enum).is_empty());

    let mut bad_h = good;
    bad_h["h"] = Value::from(0);
    assert!(check(&bad_h).iter().any(|e| e.contains("minimum")));
}
