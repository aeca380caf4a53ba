use std::fmt;
use std::sync::Arc;

/// One-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Position {
    pub line: u32,
    pub col: u32,
}

impl Position {
    pub fn new(line: u32, col: u32) -> Position {
        Position { line, col }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub file: Arc<str>,
    pub start: Position,
    pub end: Position,
}

impl SourceSpan {
    pub fn new(file: Arc<str>, start: Position, end: Position) -> SourceSpan {
        debug_assert!(start <= end);
        SourceSpan { file, start, end }
    }

    /// A span for terms that do not come from a file.
    pub fn synthetic() -> SourceSpan {
        SourceSpan { file: Arc::from("<input>"), start: Position::new(1, 1), end: Position::new(1, 1) }
    }

    /// The smallest span covering both.
    pub fn to(&self, other: &SourceSpan) -> SourceSpan {
        SourceSpan { file: self.file.clone(), start: self.start.min(other.start), end: self.end.max(other.end) }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.start.line, self.start.col)
    }
}
