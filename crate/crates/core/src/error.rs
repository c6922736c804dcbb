use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} lists neighbour {neighbour} more than once")]
    DuplicateNeighbour { vertex: usize, neighbour: usize },
    #[error("dart {tail}->{head} has no reverse dart")]
    AsymmetricDart { tail: usize, head: usize },
    #[error("rotation system is not spherical (genus {genus})")]
    NonSpherical { genus: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a polyhedron: {0}")]
    NotPolyhedral(String),
    #[error("graph has {n} vertices, above the limit of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("malformed planar_code input: {0}")]
    MalformedPlanarCode(String),
    #[error("order {0} does not fit the one-byte planar_code format")]
    OrderOverflow(usize),
    #[error("u and v must be distinct (both are {0})")]
    SameVertex(usize),
    #[error("graph needs at least {min} vertices, has {n}")]
    TooSmall { n: usize, min: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is not 4-regular")]
    Not4Regular,
    #[error("graph is not quartic: {0}")]
    NotQuartic(String),
    #[error("vertices {v},{u},{w} are not consecutive on a face")]
    SiteNotOnFace { u: usize, v: usize, w: usize },
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("k must be at least 3, got {0}")]
    KTooSmall(usize),
    #[error("illegal expansion site: {0}")]
    IllegalSite(String),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is not regular")]
    NotRegular,
    #[error("input is one of the exceptional graphs: {0}")]
    ExceptionalInput(String),
    #[error("not a regular polyhedron of degree 3, 4 or 5: {0}")]
    NotRegularPolyhedron(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unknown population {0:?}")]
    UnknownPopulation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
