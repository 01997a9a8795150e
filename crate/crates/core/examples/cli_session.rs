// Drive the command-line front end in-process.

pub fn run_example() -> Vec<(String, i32)> {
    let sessions: [&[&str]; 4] = [
        &["relrisk", "measure", "--p0", "0.4", "--p1", "0.2", "--scales", "rr,sr,grrr"],
        &["relrisk", "transport", "--p0", "0.8", "--scale", "rr", "--value", "2"],
        &["relrisk", "--output", "csv", "sweep", "--pattern", "sufficient-causal", "--q", "0.3", "--r", "0.1,0.5"],
        &["relrisk", "interpret", "--p0", "0.3", "--p1", "0.1", "--direction", "benefit"],
    ];
    let mut out = Vec::new();
    for args in sessions {
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = relrisk::cli::run(args.iter().copied(), &mut stdout, &mut stderr);
        let text = String::from_utf8_lossy(&stdout).into_owned() + &String::from_utf8_lossy(&stderr);
        println!("$ {}\n{}exit {code}\n", args.join(" "), text);
        out.push((text, code));
    }
    out
}

fn main() {
    run_example();
}
