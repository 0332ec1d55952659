use thiserror::Error;

/// Errors raised by the library. Every variant names the violated
/// precondition so that the CLI can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a space must have at least one point")]
    EmptySpace,
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("point index {0} out of range")]
    PointOutOfRange(usize),
    #[error("invalid point label `{0}`: labels must be non-empty and free of whitespace and of `<`, `#`, `[`, `]`")]
    InvalidLabel(String),
    #[error("`{0}` is not a comparability of the space")]
    NotAComparability(String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(String, String, String),
    #[error("point map is not total: expected {expected} images, got {got}")]
    MapNotTotal { expected: usize, got: usize },
    #[error("subspace must be non-empty")]
    EmptySubspace,
    #[error("space is not T0: `{0}` and `{1}` are topologically indistinguishable")]
    NotT0(String, String),
    #[error("space is disconnected ({0} components); pass a single component")]
    Disconnected(usize),
    #[error("points `{0}` and `{1}` lie in different components")]
    DifferentComponents(String, String),
    #[error("edge set contains a cycle through `{0}`")]
    ForestHasCycle(String),
    #[error("edge set does not span its component: `{0}` and `{1}` are not joined")]
    TreeNotSpanning(String, String),
    #[error("path word is not composable at step {0}")]
    MalformedWord(usize),
    #[error("spanning tree belongs to a different space")]
    SpaceMismatch,
    #[error("tree does not restrict to a spanning tree of the component of `{0}` in the subspace")]
    TreeRestrictionFails(String),
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("malformed group table: {0}")]
    MalformedTable(String),
    #[error("composition is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(String, String, String),
    #[error("group table has no two-sided identity")]
    NoIdentity,
    #[error("element `{0}` has no inverse")]
    NoInverse(String),
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("`{0}` is not a generator of the presentation")]
    UnknownGenerator(String),
    #[error("relator #{index} `{relator}` evaluates to `{value}`, not the identity")]
    RelatorViolated {
        index: usize,
        relator: String,
        value: String,
    },
    #[error("functor is not functorial on {0} <= {1} <= {2}")]
    NotFunctorial(String, String, String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("homology in dimension {0} needs simplices beyond the complex's truncation")]
    BeyondTruncation(usize),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
