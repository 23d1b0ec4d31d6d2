#![allow(dead_code)]

pub use paraverb_conformance::{cases, collapse_ws, fixture, Case};

pub struct Output {
    pub code: u8,
    pub out: String,
    pub err: String,
}

pub fn run<S: AsRef<str>>(args: &[S]) -> Output {
    let mut argv = vec!["paraverb".to_string()];
    argv.extend(args.iter().map(|a| a.as_ref().to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = paraverb_cli::main_with(argv, &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

pub fn verbalize_args(case: &Case) -> Vec<String> {
    case.verbalize_args()
}
