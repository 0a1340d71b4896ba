//! Argument extraction and command-line word parsing.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{find_verb, Request};
use crate::divalg::{AlgebraTag, AutoDesc, DElem};
use crate::error::{Error, Result};
use crate::ext::{verify_automorphic, AutomorphicWitness, ExtensionElement};
use crate::laurent::LaurentPoly;
use crate::quotient::QuotientElem;
use crate::skewpoly::SkewPoly;

pub(crate) fn req<T: DeserializeOwned>(args: &Value, key: &str) -> Result<T> {
    match args.get(key) {
        Some(v) => decode(v, key),
        None => Err(Error::SchemaViolation(format!("missing argument `{key}`"))),
    }
}

pub(crate) fn opt<T: DeserializeOwned>(args: &Value, key: &str) -> Result<Option<T>> {
    match args.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => decode(v, key).map(Some),
    }
}

fn decode<T: DeserializeOwned>(v: &Value, key: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::SchemaViolation(format!("argument `{key}`: {e}")))
}

pub(crate) fn to_json<T: Serialize + ?Sized>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::CheckFailed(format!("serialization: {e}")))
}

/// The algebra to resolve a descriptor in: pinned by the descriptor itself,
/// or given explicitly.
pub(crate) fn algebra_for(desc: &AutoDesc, args: &Value) -> Result<AlgebraTag> {
    let explicit: Option<AlgebraTag> = opt(args, "algebra")?;
    match (desc.algebra(), explicit) {
        (Some(a), Some(b)) if a != b => Err(Error::TagMismatch(a, b)),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => {
            Err(Error::SchemaViolation("automorphism does not determine its algebra; pass `algebra`".into()))
        }
    }
}

/// Any element that can serve as a generator or point coordinate.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub(crate) enum AnyElem {
    Poly(SkewPoly),
    Laurent(LaurentPoly),
    Quotient(QuotientElem),
    D(DElem),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct WitnessArg {
    element: AnyElem,
    #[serde(default)]
    auto: Option<AutoDesc>,
}

/// A homogeneous list of witnesses from one backend.
pub(crate) enum Witnesses {
    Poly(Vec<AutomorphicWitness<SkewPoly>>),
    Laurent(Vec<AutomorphicWitness<LaurentPoly>>),
    Quotient(Vec<AutomorphicWitness<QuotientElem>>),
    D(Vec<AutomorphicWitness<DElem>>),
}

fn witness<S: ExtensionElement>(
    index: usize,
    element: S,
    auto: Option<AutoDesc>,
    explicit: bool,
) -> Result<AutomorphicWitness<S>> {
    let d = match auto {
        Some(d) => d,
        None if explicit => {
            return Err(Error::SchemaViolation(format!("point coordinate {index} needs an explicit `auto`")));
        }
        None => return AutomorphicWitness::infer(element),
    };
    let sigma = d.resolve(element.tag())?;
    if !verify_automorphic(&element, &sigma) {
        return Err(Error::AutomorphismMismatch { index, detail: format!("{element} is not automorphic for {sigma}") });
    }
    Ok(AutomorphicWitness::new(element, sigma))
}

fn mixed() -> Error {
    Error::SchemaViolation("generators must all come from the same kind of ring".into())
}

macro_rules! collect_kind {
    ($items:expr, $variant:ident, $explicit:expr) => {{
        let mut out = Vec::new();
        for (i, w) in $items.into_iter().enumerate() {
            match w.element {
                AnyElem::$variant(e) => out.push(witness(i, e, w.auto, $explicit)?),
                _ => return Err(mixed()),
            }
        }
        Witnesses::$variant(out)
    }};
}

/// Reads a list of `{element, auto?}` objects. An omitted `auto` is inferred
/// unless `explicit` is set.
pub(crate) fn witnesses(args: &Value, key: &str, explicit: bool) -> Result<Witnesses> {
    let items: Vec<WitnessArg> = req(args, key)?;
    Ok(match items.first().map(|w| &w.element) {
        None => Witnesses::D(Vec::new()),
        Some(AnyElem::Poly(_)) => collect_kind!(items, Poly, explicit),
        Some(AnyElem::Laurent(_)) => collect_kind!(items, Laurent, explicit),
        Some(AnyElem::Quotient(_)) => collect_kind!(items, Quotient, explicit),
        Some(AnyElem::D(_)) => collect_kind!(items, D, explicit),
    })
}

/// Runs a generic body on whichever backend a witness list came from.
macro_rules! with_witnesses {
    ($ws:expr, $v:ident => $body:expr) => {
        match $ws {
            $crate::cli::args::Witnesses::Poly($v) => $body,
            $crate::cli::args::Witnesses::Laurent($v) => $body,
            $crate::cli::args::Witnesses::Quotient($v) => $body,
            $crate::cli::args::Witnesses::D($v) => $body,
        }
    };
}
pub(crate) use with_witnesses;

fn flag_value(raw: &str) -> Value {
    serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()))
}

/// Turns command-line words into a request.
///
/// Leading words name the verb (`laurent witness` is `laurent.witness`);
/// the longest prefix naming a registered verb wins. `--key value` pairs
/// become arguments, parsed as JSON when possible and as strings otherwise;
/// a flag with no value is `true`. `--seed N` sets the request seed. A
/// single trailing positional word fills the `name` argument.
pub fn parse_words(words: &[String]) -> Result<Request> {
    let first_flag = words.iter().position(|w| w.starts_with("--")).unwrap_or(words.len());
    let positional = &words[..first_flag];
    let take = (1..=positional.len())
        .rev()
        .find(|&k| find_verb(&positional[..k].join(".")).is_some())
        .ok_or_else(|| Error::UnknownVerb(positional.join(".")))?;
    let verb = positional[..take].join(".");
    let mut args = Map::new();
    match &positional[take..] {
        [] => {}
        [name] => {
            args.insert("name".into(), Value::String(name.clone()));
        }
        extra => return Err(Error::SchemaViolation(format!("unexpected words: {}", extra.join(" ")))),
    }

    let mut seed = None;
    let mut rest = words[first_flag..].iter().peekable();
    while let Some(w) = rest.next() {
        let key = w
            .strip_prefix("--")
            .filter(|k| !k.is_empty())
            .ok_or_else(|| Error::SchemaViolation(format!("expected a --flag, found `{w}`")))?;
        let value = match rest.peek() {
            Some(v) if !v.starts_with("--") => flag_value(rest.next().expect("peeked")),
            _ => Value::Bool(true),
        };
        if key == "seed" {
            let s =
                value.as_u64().ok_or_else(|| Error::SchemaViolation("--seed needs a nonnegative integer".into()))?;
            seed = Some(s);
        } else {
            args.insert(key.to_string(), value);
        }
    }
    Ok(Request { verb, args: Value::Object(args), seed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn multiword_verbs_and_flags() {
        let r = parse_words(&words("laurent witness --k 2 --seed 9")).unwrap();
        assert_eq!(r.verb, "laurent.witness");
        assert_eq!(r.args["k"], 2);
        assert_eq!(r.seed, Some(9));
    }

    #[test]
    fn bare_flags_and_string_fallback() {
        let r = parse_words(&words("monicize --dadic --note hello")).unwrap();
        assert_eq!(r.args["dadic"], true);
        assert_eq!(r.args["note"], "hello");
    }

    #[test]
    fn demo_name_positional() {
        let r = parse_words(&words("demo run dadic-monicize")).unwrap();
        assert_eq!(r.verb, "demo.run");
        assert_eq!(r.args["name"], "dadic-monicize");
    }

    #[test]
    fn unknown_words() {
        assert!(matches!(parse_words(&words("frobnicate")), Err(Error::UnknownVerb(_))));
    }
}
