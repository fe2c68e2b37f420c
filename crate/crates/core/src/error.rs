use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported field degree {0}: expected 1..=16")]
    UnsupportedDegree(u32),
    #[error("modulus {modulus:#b} does not have degree {degree}")]
    ModulusDegree { degree: u32, modulus: u32 },
    #[error("modulus {0} is not irreducible")]
    NotIrreducible(String),
    #[error("modulus {0} is irreducible but not primitive")]
    NotPrimitive(String),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("basis must have {expected} elements, got {got}")]
    BasisSize { expected: usize, got: usize },
    #[error("basis elements are not linearly independent")]
    DependentBasis,
    #[error("basis is not self-dual: tr(θ_{i}·θ_{j}) has the wrong value")]
    NotSelfDual { i: usize, j: usize },
    #[error("dual basis unavailable")]
    DualUnavailable,
    #[error("requires self-dual basis")]
    RequiresSelfDual,
    #[error("subfield degree {m} does not divide field degree {degree}")]
    SubfieldDegree { m: u32, degree: u32 },
    #[error("not a relative basis: {0}")]
    NotRelativeBasis(String),
    #[error("not a quadratic extension: degree {degree} is not 2·{m}")]
    NotQuadratic { degree: u32, m: u32 },
    #[error("dense oracle limit: {qubits} qubits exceeds the cap of {limit}")]
    DenseLimit { qubits: u32, limit: u32 },
    #[error("slope not in subfield GF(2^{m}): {slope}")]
    SlopeNotInSubfield { slope: String, m: u32 },
    #[error("partition/field mismatch: partition was built over a different field")]
    PartitionMismatch,
    #[error("coset index {index} out of range for {count} cosets")]
    CosetOutOfRange { index: usize, count: usize },
    #[error("qubit index {index} out of range for {qubits} qubits")]
    QubitOutOfRange { index: usize, qubits: usize },
    #[error("CNOT control and target are both qubit {0}")]
    CnotSameQubit(usize),
    #[error("Pauli strings act on {left} and {right} qubits")]
    QubitCountMismatch { left: usize, right: usize },
    #[error("invalid Pauli string {0:?}")]
    PauliParse(String),
    #[error("invalid modulus {0:?}")]
    ModulusParse(String),
    #[error("invalid CNOT {0:?}: expected control:target")]
    CnotParse(String),
    #[error("invalid field element label {0:?}")]
    ElementParse(String),
    #[error("dimension must be 2^N, got {0}")]
    Dimension(usize),
    #[error("state not normalized: {0}")]
    NotNormalized(String),
    #[error("invalid density matrix: {0}")]
    InvalidState(String),
    #[error("wigner table has the wrong shape: {0}")]
    TableShape(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
