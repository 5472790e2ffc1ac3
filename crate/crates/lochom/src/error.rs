use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("monomial has a negative exponent: {0:?}")]
    NegativeExponent(Vec<i64>),
    #[error("exponent vector has length {got}, ring has {expected} variables")]
    VariableCountMismatch { expected: usize, got: usize },
    #[error("matrix dimensions do not compose: d_in is {in_rows}x{in_cols}, d_out is {out_rows}x{out_cols}")]
    NotComposable {
        in_rows: usize,
        in_cols: usize,
        out_rows: usize,
        out_cols: usize,
    },
    #[error("composite of consecutive differentials is nonzero at degree {degree:?}")]
    CompositionNotZero { degree: Vec<i64> },
    #[error("map entry at ({row}, {col}) is not homogeneous of the degree forced by the shifts")]
    InhomogeneousEntry { row: usize, col: usize },
    #[error("local cohomology of the zero ideal requested")]
    EmptyIdeal,
    #[error("colimit not stabilized within the truncation bound at degrees {0:?}")]
    NotStabilized(Vec<Vec<i64>>),
    #[error("Taylor resolution would need 2^{0} terms; at most 12 generators are supported")]
    TooManyGenerators(usize),
    #[error("chain-map lift failed in homological degree {0}; this indicates a bug")]
    LiftFailed(usize),
    #[error("generator sets have different radicals")]
    RadicalsDiffer,
    #[error("Hom/Ext value leaves the closed class of p-local atoms: {0}")]
    OutsideClass(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("algebra is not a group algebra and no Frobenius functional was supplied")]
    NoFunctionalSupplied,
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
