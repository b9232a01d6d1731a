// The froblat command line driven in-process: gen, verify and lattice with
// DOT, JSON and angle outputs.

pub fn run_example() -> std::io::Result<Vec<i32>> {
    let dir = std::env::temp_dir().join(format!("froblat-cli-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let runs: Vec<Vec<String>> = vec![
        vec!["gen".into(), "fun-s3".into(), path("s3.json")],
        vec!["verify".into(), path("s3.json")],
        vec!["lattice".into(), "--builtin".into(), "fun-c6".into(), "--totient".into(), "--sigma".into()],
        vec!["lattice".into(), path("s3.json"), "--angles".into(), "--dot".into(), path("s3.dot"), "--json".into(), path("s3-report.json")],
        vec!["lattice".into(), "--builtin".into(), "ben02".into()],
        vec!["gen".into(), "no-such-example".into()],
    ];
    let codes: Vec<i32> = runs
        .iter()
        .map(|args| {
            println!("$ froblat {}", args.join(" "));
            let code = froblat::cli::run(std::iter::once("froblat".to_string()).chain(args.iter().cloned()));
            println!("exit {code}");
            code
        })
        .collect();
    println!("{}", std::fs::read_to_string(dir.join("s3.dot"))?);
    std::fs::remove_dir_all(&dir)?;
    Ok(codes)
}

fn main() -> std::io::Result<()> {
    run_example().map(|_| ())
}
