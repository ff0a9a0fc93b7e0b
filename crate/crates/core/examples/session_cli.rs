//! Driving the command-line interface from code: a session file, a few
//! subcommands and their JSON records.
//!
//! ```bash
//! cargo run --release --example session_cli
//! ```

use mixedmult::cli::{run, Session};

const SESSION: &str = "\
# the ring and two ideals
ring Q[w,x,y,z];
ideal I = (x^2 - y*w, x^3 - z*w^2);
ideal J = (w^2 + x^2 + y^2 + z^2);
ideal m = vars;
";

fn main() {
    let session = Session::parse(SESSION).expect("session parses");
    print!("canonical form:\n{}", session.serialize());

    let path = std::env::temp_dir().join("mixedmult_example_session.txt");
    std::fs::write(&path, SESSION).expect("temp file is writable");
    let file = path.to_string_lossy().into_owned();
    let commands: [&[&str]; 4] = [
        &["rees", "-f", &file, "--ideals", "I,J"],
        &["mixed-mult", "-f", &file, "--ideals", "m,I", "--index", "2,1"],
        &["mixed-mult", "-f", &file, "--ideals", "m,I", "--index", "2,2"],
        &["dim", "-f", &file, "--ideals", "I", "--text"],
    ];
    for args in commands {
        let out = run(std::iter::once("mixedmult").chain(args.iter().copied()));
        print!("[exit {}] {}", out.code, out.stdout);
    }
    let _ = std::fs::remove_file(path);
}
