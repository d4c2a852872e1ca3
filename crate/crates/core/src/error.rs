use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} is not a generator of B_{strands}")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("expected {expected} widths, got {got}")]
    WidthCount { expected: usize, got: usize },
    #[error("cable widths must be positive")]
    ZeroWidth,
    #[error("cannot delete every strand")]
    DeleteAll,
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("arity must be at least 2, got {0}")]
    BadArity(usize),
    #[error("a forest needs at least one root")]
    NoRoots,
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("root count mismatch: {left} vs {right}")]
    RootMismatch { left: usize, right: usize },
    #[error("forest is not elementary")]
    NotElementary,
    #[error("interval {start}..{end} is not a block of {arity} leaves inside 1..{leaves}")]
    BadInterval {
        start: usize,
        end: usize,
        arity: usize,
        leaves: usize,
    },
    #[error("intervals overlap")]
    OverlappingIntervals,
    #[error("no elementary caret starts at leaf {0}")]
    NoCaretAt(usize),
    #[error("label references unknown generator g{0}")]
    UnknownGenerator(usize),
    #[error("generator {index} has {strands} strands, expected {expected}")]
    GeneratorStrands {
        index: usize,
        strands: usize,
        expected: usize,
    },
    #[error("generator {0} is not a pure braid")]
    GeneratorNotPure(usize),
    #[error("label count {labels} does not match strand count {strands}")]
    LabelCount { labels: usize, strands: usize },
    #[error("leaf count mismatch: minus has {minus}, braid has {strands}, plus has {plus}")]
    LeafMismatch {
        minus: usize,
        strands: usize,
        plus: usize,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operation requires a label group of pure braids")]
    NotPureContext,
    #[error("invalid group context: {0}")]
    Context(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
