use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;
use skewnorm::cli::{self, Request, Response};
use skewnorm::Error;

/// Exact skew polynomial arithmetic and normalization over ℍ(ℚ) and ℚ(x).
///
/// With no words, reads one request `{"verb", "args", "seed"}` from stdin.
/// Otherwise the leading words name the verb (`laurent witness`) and
/// `--key value` pairs supply its arguments.
#[derive(Parser)]
#[command(name = "skewnorm", version)]
struct Args {
    #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "VERB [--KEY VALUE]...")]
    words: Vec<String>,
}

fn seed_override() -> Result<Option<u64>, Error> {
    match std::env::var(cli::SEED_ENV) {
        Ok(s) => {
            s.trim().parse().map(Some).map_err(|_| {
                Error::SchemaViolation(format!("{} must be a nonnegative integer, got `{s}`", cli::SEED_ENV))
            })
        }
        Err(_) => Ok(None),
    }
}

fn request(words: &[String]) -> Result<Request, Error> {
    if !words.is_empty() {
        return cli::parse_words(words);
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Error::SchemaViolation(format!("cannot read stdin: {e}")))?;
    cli::parse_request(&text)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let resp = match (request(&args.words), seed_override()) {
        (Ok(mut req), Ok(seed)) => {
            if seed.is_some() {
                req.seed = seed;
            }
            cli::dispatch(&req)
        }
        (Err(e), _) | (_, Err(e)) => Response::failure(&e),
    };
    for d in &resp.diagnostics {
        eprintln!("skewnorm: {}: {}", d.code, d.message);
    }
    // A closed pipe downstream is not our failure.
    let _ = writeln!(std::io::stdout().lock(), "{}", cli::render(&resp));
    ExitCode::from(resp.exit_code() as u8)
}
