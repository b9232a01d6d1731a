// Builtins written as spec files, loaded back, and verified with identical
// reports.

use froblat::cli::builtins::builtin;
use froblat::cli::{verify, CliError, SpecFile};

pub fn run_example() -> Result<bool, CliError> {
    let mut same = true;
    for name in ["ben02", "nondegsum", "fun-v4"] {
        let p = builtin(name)?;
        let text = SpecFile::from_presentation(&p).to_json();
        let loaded = SpecFile::parse(&text)?.load()?;
        let (a, b) = (verify(&p).to_json(), verify(&loaded).to_json());
        println!("{name}: {} bytes of spec, reports identical: {}", text.len(), a == b);
        same &= loaded == p && a == b;
    }
    match SpecFile::parse("{\n  \"version\": \"1\",\n  \"name\": oops\n}") {
        Err(e @ CliError::Parse { .. }) => println!("malformed input: {e}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(same)
}

fn main() -> Result<(), CliError> {
    run_example().map(|_| ())
}
