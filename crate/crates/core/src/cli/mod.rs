//! JSON request/response front end.
//!
//! A request names a dotted verb (`laurent.witness`), an argument object
//! and an optional seed. Every verb lives in one registry, which also
//! drives schema checks on argument names and the `verbs` listing.

mod args;
mod checks;
pub mod demos;
mod verbs;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

pub use args::parse_words;
pub use demos::run_demo;
pub use verbs::{Verb, VERBS};

/// Seed used when neither the request nor the environment supplies one.
pub const DEFAULT_SEED: u64 = 0;

/// Environment variable overriding the request seed.
pub const SEED_ENV: &str = "SKEWNORM_SEED";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub verb: String,
    #[serde(default = "empty_object")]
    pub args: Value,
    #[serde(default)]
    pub seed: Option<u64>,
}

fn empty_object() -> Value {
    Value::Object(Map::new())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diagnostic {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Response {
    pub ok: bool,
    pub result: Value,
    pub diagnostics: Vec<Diagnostic>,
    #[serde(skip)]
    exit: i32,
}

impl Response {
    pub fn success(result: Value) -> Self {
        Response { ok: true, result, diagnostics: Vec::new(), exit: 0 }
    }

    pub fn failure(err: &Error) -> Self {
        Response {
            ok: false,
            result: Value::Null,
            diagnostics: vec![Diagnostic { code: err.code().to_string(), message: err.to_string() }],
            exit: if err.is_usage() { 2 } else { 1 },
        }
    }

    /// 0 on success, 2 for usage errors, 1 for operation errors.
    pub fn exit_code(&self) -> i32 {
        self.exit
    }
}

/// Per-request context handed to verb handlers.
pub struct Ctx {
    pub seed: u64,
}

pub fn find_verb(name: &str) -> Option<&'static Verb> {
    VERBS.iter().find(|v| v.name == name)
}

fn run(req: &Request, ctx: &mut Ctx) -> Result<Value> {
    let verb = find_verb(&req.verb).ok_or_else(|| Error::UnknownVerb(req.verb.clone()))?;
    let Value::Object(map) = &req.args else {
        return Err(Error::SchemaViolation("`args` must be an object".into()));
    };
    if let Some(k) = map.keys().find(|k| !verb.args.contains(&k.as_str())) {
        return Err(Error::SchemaViolation(format!(
            "`{}` does not take argument `{k}` (accepted: {})",
            verb.name,
            verb.args.join(", ")
        )));
    }
    (verb.run)(&req.args, ctx)
}

pub fn dispatch(req: &Request) -> Response {
    let mut ctx = Ctx { seed: req.seed.unwrap_or(DEFAULT_SEED) };
    match run(req, &mut ctx) {
        Ok(v) => Response::success(v),
        Err(e) => Response::failure(&e),
    }
}

/// Parses a request document; malformed input is a schema violation.
pub fn parse_request(text: &str) -> Result<Request> {
    serde_json::from_str(text).map_err(|e| Error::SchemaViolation(format!("invalid request: {e}")))
}

/// Handles one request document, applying a seed override, and returns the
/// response rendered as JSON with the process exit code.
pub fn handle(text: &str, seed_override: Option<u64>) -> (String, i32) {
    let resp = match parse_request(text) {
        Ok(mut req) => {
            if seed_override.is_some() {
                req.seed = seed_override;
            }
            dispatch(&req)
        }
        Err(e) => Response::failure(&e),
    };
    let code = resp.exit_code();
    (render(&resp), code)
}

pub fn render(resp: &Response) -> String {
    serde_json::to_string_pretty(resp).expect("responses serialize")
}

/// Names and summaries of every registered verb.
pub fn verb_listing() -> Value {
    Value::Array(VERBS.iter().map(|v| json!({ "verb": v.name, "args": v.args, "summary": v.summary })).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(text: &str) -> Response {
        dispatch(&parse_request(text).unwrap())
    }

    #[test]
    fn unknown_verb_is_a_usage_error() {
        let r = call(r#"{"verb":"unknown"}"#);
        assert!(!r.ok);
        assert_eq!(r.diagnostics[0].code, "UnknownVerb");
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn unknown_argument_is_rejected() {
        let r = call(r#"{"verb":"demo.list","args":{"bogus":1}}"#);
        assert_eq!(r.diagnostics[0].code, "SchemaViolation");
    }

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<&str> = VERBS.iter().map(|v| v.name).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len());
    }

    #[test]
    fn twisted_product_verb() {
        let req = r#"{"verb":"mul","args":{
            "f":{"ring":{"algebra":"QX","n":1,"autos":[{"kind":"genimage","g":{"num":["1","1"],"den":["1"]}}]},
                 "terms":[{"exp":[1],"coef":{"num":["1"],"den":["1"]}}]},
            "g":{"ring":{"algebra":"QX","n":1,"autos":[{"kind":"genimage","g":{"num":["1","1"],"den":["1"]}}]},
                 "terms":[{"exp":[0],"coef":{"num":["0","1"],"den":["1"]}}]}}}"#;
        let r = call(req);
        assert!(r.ok, "{:?}", r.diagnostics);
        assert_eq!(r.result["display"], "(x+1)*t1");
    }

    #[test]
    fn laurent_witness_verb() {
        let req = r#"{"verb":"laurent.witness","args":{
            "auto":{"kind":"inner","u":{"a":"0","b":"1","c":"0","d":"0"}},"k":2,
            "c":{"a":"-1","b":"0","c":"0","d":"0"}}}"#;
        let r = call(req);
        assert!(r.ok, "{:?}", r.diagnostics);
        assert_eq!(r.result["u_display"], "t^2 + t^-2");
    }
}
