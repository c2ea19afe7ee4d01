use clap::ValueEnum;
use jones_twist::mahler::MahlerResult;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    BoydLawton,
    Quadrature,
}

/// A failure reported as `{"error": {"code": ..., "message": ...}}`.
#[derive(Debug, Serialize)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: "usage",
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self {
            code: "io",
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.code == "usage" {
            2
        } else {
            1
        }
    }
}

impl From<jones_twist::Error> for CliError {
    fn from(e: jones_twist::Error) -> Self {
        Self {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

pub fn emit_error(e: &CliError) {
    #[derive(Serialize)]
    struct Wrapper<'a> {
        error: &'a CliError,
    }
    eprintln!(
        "{}",
        serde_json::to_string(&Wrapper { error: e }).expect("error serialisation cannot fail")
    );
}

/// Six-decimal rendering of a float, as used in every report.
pub fn six(x: f64) -> String {
    format!("{x:.6}")
}

/// A Mahler measure at six decimals plus its full-precision value.
#[derive(Debug, Serialize)]
pub struct Measure {
    pub value: String,
    pub value_full: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub method: jones_twist::mahler::MahlerMethod,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub history: Vec<(u64, f64)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl From<MahlerResult> for Measure {
    fn from(r: MahlerResult) -> Self {
        Self {
            value: six(r.value),
            value_full: r.value,
            error_estimate: r.error_estimate,
            converged: r.converged,
            method: r.method,
            history: r.diagnostics.history,
            notes: r.diagnostics.notes,
        }
    }
}
