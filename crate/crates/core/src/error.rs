use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {got} is below the required minimum {min}")]
    DegreeTooSmall { got: usize, min: usize },
    #[error("target degree {target} is smaller than polynomial degree {degree}")]
    HomogenizeDegree { target: usize, degree: usize },
    #[error("the zero form is not allowed here")]
    ZeroForm,
    #[error("forms have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("form has zero discriminant")]
    ZeroDiscriminant,
    #[error("division is not exact")]
    InexactDivision,
    #[error("root isolation did not converge at {precision} bits")]
    NoConvergence { precision: u32 },
    #[error("group closure exceeded {cap} elements")]
    ClosureCap { cap: usize },
    #[error("group order {0} is not the order of a finite subgroup of GL2(Q)")]
    BadGroupOrder(usize),
    #[error("quadrature did not reach the requested tolerance (estimate {estimate}, error {error})")]
    Quadrature { estimate: f64, error: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("outside the scope of the closed-form statement: {0}")]
    OutOfScope(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("inconsistency: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
