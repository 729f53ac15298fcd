use serde::Serialize;

/// What a command produced; `main` prints it and exits with `code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output { code: 0, stdout, stderr: String::new() }
    }

    pub fn with_code(code: i32, stdout: String) -> Self {
        Output { code, stdout, stderr: String::new() }
    }

    pub fn message(code: i32, msg: String, to_stderr: bool) -> Self {
        if to_stderr {
            Output { code, stdout: String::new(), stderr: msg }
        } else {
            Output { code, stdout: msg, stderr: String::new() }
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn opt_f64(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.12}"))
}

pub fn opt_sci(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.3e}"))
}
