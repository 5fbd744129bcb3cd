//! Library surface of the pvs command-line tool: instance files, report
//! assembly and the analysis drivers. The binary in main.rs is a thin
//! argument-parsing wrapper.

pub mod instfile;
pub mod report;
pub mod run;

use anyhow::anyhow;

/// Exit codes: 0 success, 2 parse error, 3 cap exceeded, 4 internal
/// invariant trap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Ok,
    Parse,
    Cap,
    Trap,
    Other,
}

impl ExitKind {
    pub fn code(self) -> i32 {
        match self {
            ExitKind::Ok => 0,
            ExitKind::Parse => 2,
            ExitKind::Cap => 3,
            ExitKind::Trap => 4,
            ExitKind::Other => 1,
        }
    }
}

pub fn classify_error(e: &anyhow::Error) -> ExitKind {
    if let Some(p) = e.downcast_ref::<pvscore::PvsError>() {
        return match p {
            pvscore::PvsError::CapExceeded { .. } => ExitKind::Cap,
            _ => ExitKind::Parse,
        };
    }
    if let Some(d) = e.downcast_ref::<DkFailure>() {
        return match d.0 {
            DkKind::Ambiguity => ExitKind::Trap,
            _ => ExitKind::Parse,
        };
    }
    ExitKind::Parse
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DkKind {
    Ambiguity,
    Other,
}

#[derive(Debug)]
pub struct DkFailure(pub DkKind, pub String);

impl std::fmt::Display for DkFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.1)
    }
}

impl std::error::Error for DkFailure {}

pub(crate) fn error_of(e: pvscore::PvsError) -> anyhow::Error {
    anyhow::Error::new(e)
}

pub(crate) fn dk_error_of(e: dktype::DkError) -> anyhow::Error {
    let kind = match &e {
        dktype::DkError::Ambiguity => DkKind::Ambiguity,
        _ => DkKind::Other,
    };
    anyhow!(DkFailure(kind, e.to_string()))
}
