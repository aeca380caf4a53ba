use std::fmt;
use std::sync::Arc;

use crate::diagnostic::{Diagnostic, ErrorCode};
use crate::span::{Position, SourceSpan};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    /// `3`
    Num(u64),
    /// `3s`
    NumS(u64),
    /// `#check`, `#fail`, ...
    Pragma(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    ColonEq,
    Dot,
    Backslash,
    Arrow,
    Star,
    Plus,
    PlusS,
    Eq,
    EqS,
    Tilde,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(name) => write!(f, "`{name}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::NumS(n) => write!(f, "`{n}s`"),
            Tok::Pragma(p) => write!(f, "`{p}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::ColonEq => f.write_str("`:=`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Backslash => f.write_str("`\\`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::PlusS => f.write_str("`+s`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::EqS => f.write_str("`=s`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

pub fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    file: Arc<str>,
    pos: Position,
}

impl Lexer<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.chars.clone();
        it.next();
        it.next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn span_from(&self, start: Position) -> SourceSpan {
        SourceSpan::new(self.file.clone(), start, self.pos)
    }

    fn error(&self, start: Position, message: impl Into<String>) -> Diagnostic {
        Diagnostic::error(ErrorCode::SyntaxError, self.span_from(start), message)
    }

    fn skip_trivia(&mut self) -> Result<(), Diagnostic> {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('-') if self.peek2() == Some('-') => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                Some('{') if self.peek2() == Some('-') => {
                    let start = self.pos;
                    self.bump();
                    self.bump();
                    let mut depth = 1;
                    while depth > 0 {
                        match self.bump() {
                            None => return Err(self.error(start, "unterminated block comment")),
                            Some('{') if self.peek() == Some('-') => {
                                self.bump();
                                depth += 1;
                            }
                            Some('-') if self.peek() == Some('}') => {
                                self.bump();
                                depth -= 1;
                            }
                            Some(_) => {}
                        }
                    }
                }
                _ => return Ok(()),
            }
        }
    }

    /// `s` directly after `=`, `+` or a numeral marks the strict variant,
    /// provided it does not start a longer identifier.
    fn eat_strict_suffix(&mut self) -> bool {
        if self.peek() == Some('s') && !self.peek2().is_some_and(is_ident_continue) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn next_token(&mut self) -> Result<Token, Diagnostic> {
        self.skip_trivia()?;
        let start = self.pos;
        let Some(c) = self.bump() else {
            return Ok(Token { tok: Tok::Eof, span: self.span_from(start) });
        };
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '\\' => Tok::Backslash,
            '*' => Tok::Star,
            '~' => Tok::Tilde,
            ':' => {
                if self.peek() == Some('=') {
                    self.bump();
                    Tok::ColonEq
                } else {
                    Tok::Colon
                }
            }
            '-' if self.peek() == Some('>') => {
                self.bump();
                Tok::Arrow
            }
            '+' => {
                if self.eat_strict_suffix() {
                    Tok::PlusS
                } else {
                    Tok::Plus
                }
            }
            '=' => {
                if self.eat_strict_suffix() {
                    Tok::EqS
                } else {
                    Tok::Eq
                }
            }
            '#' => {
                let mut name = String::from("#");
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphabetic() || c == '-' {
                        name.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if name.len() == 1 {
                    return Err(self.error(start, "expected a pragma name after `#`"));
                }
                Tok::Pragma(name)
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::from(c);
                while let Some(d) = self.peek().filter(char::is_ascii_digit) {
                    digits.push(d);
                    self.bump();
                }
                let value: u64 =
                    digits.parse().map_err(|_| self.error(start, format!("numeral `{digits}` is too large")))?;
                if self.eat_strict_suffix() {
                    Tok::NumS(value)
                } else if self.peek().is_some_and(is_ident_continue) {
                    return Err(self.error(start, "identifiers cannot start with a digit"));
                } else {
                    Tok::Num(value)
                }
            }
            c if is_ident_start(c) => {
                let mut name = String::from(c);
                while let Some(d) = self.peek().filter(|d| is_ident_continue(*d)) {
                    name.push(d);
                    self.bump();
                }
                Tok::Ident(name)
            }
            other => return Err(self.error(start, format!("unexpected character `{other}`"))),
        };
        Ok(Token { tok, span: self.span_from(start) })
    }
}

/// Splits `text` into tokens, ending with a single [`Tok::Eof`].
pub fn tokenize(text: &str, file: Arc<str>) -> Result<Vec<Token>, Diagnostic> {
    let mut lexer = Lexer { chars: text.chars().peekable(), file, pos: Position::new(1, 1) };
    let mut tokens = Vec::new();
    loop {
        let token = lexer.next_token()?;
        let done = token.tok == Tok::Eof;
        tokens.push(token);
        if done {
            return Ok(tokens);
        }
    }
}
