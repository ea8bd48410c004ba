use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("t = {0} is below the supported minimum height {min}", min = crate::T_MIN)]
    BelowTMin(f64),

    #[error("invalid interval [{0}, {1}]")]
    InvalidInterval(f64, f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "quadrature did not converge on [{a}, {b}]: best estimate {value} with error estimate {err_estimate} > tol {tol}"
    )]
    NonConvergence {
        a: f64,
        b: f64,
        value: f64,
        err_estimate: f64,
        tol: f64,
    },

    #[error("checkpoint store {path}, line {line}: {reason}")]
    CorruptStore {
        path: String,
        line: usize,
        reason: String,
    },

    #[error("checkpoint store I/O: {0}")]
    StoreIo(#[from] std::io::Error),

    #[error("root bracketing failed: {0}")]
    Bracket(String),

    #[error("root solve did not converge: {0}")]
    RootNonConvergence(String),

    #[error("capability exceeded: {0}")]
    Capability(String),

    #[error("reverse iteration failed at step r = {r}: {source}")]
    ReverseStep {
        r: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
