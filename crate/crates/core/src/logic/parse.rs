use super::{Formula, LogicError};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Dot,
    Tilde,
    Eq,
    Word(String),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, LogicError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let single = match c {
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            '.' => Some(Token::Dot),
            '~' => Some(Token::Tilde),
            '=' => Some(Token::Eq),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            chars.next();
        } else if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((pos, Token::Word(word)));
        } else {
            return Err(LogicError::Parse {
                offset: pos,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

const KEYWORDS: [&str; 5] = ["EXISTS", "FORALL", "AND", "OR", "NOT"];

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |t| t.0)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, LogicError> {
        Err(LogicError::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|t| &t.1)
    }

    fn expect(&mut self, want: Token) -> Result<(), LogicError> {
        if self.peek() == Some(&want) {
            self.at += 1;
            Ok(())
        } else {
            self.error(format!("expected {want:?}"))
        }
    }

    fn variable(&mut self) -> Result<String, LogicError> {
        match self.peek() {
            Some(Token::Word(w)) if !KEYWORDS.contains(&w.as_str()) => {
                let w = w.clone();
                self.at += 1;
                Ok(w)
            }
            _ => self.error("expected a variable name"),
        }
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        self.expect(Token::Open)?;
        let f = match self.peek().cloned() {
            Some(Token::Word(w)) if w == "EXISTS" || w == "FORALL" => {
                self.at += 1;
                let var = self.variable()?;
                self.expect(Token::Dot)?;
                let body = self.formula()?;
                if w == "EXISTS" {
                    Formula::exists(var, body)
                } else {
                    Formula::forall(var, body)
                }
            }
            Some(Token::Word(w)) if w == "AND" || w == "OR" => {
                self.at += 1;
                let mut parts = Vec::new();
                while self.peek() == Some(&Token::Open) {
                    parts.push(self.formula()?);
                }
                if w == "AND" {
                    Formula::And(parts)
                } else {
                    Formula::Or(parts)
                }
            }
            Some(Token::Word(w)) if w == "NOT" => {
                self.at += 1;
                Formula::not(self.formula()?)
            }
            Some(Token::Word(_)) => {
                let x = self.variable()?;
                let adjacency = match self.peek() {
                    Some(Token::Tilde) => true,
                    Some(Token::Eq) => false,
                    _ => return self.error("expected '~' or '='"),
                };
                self.at += 1;
                let y = self.variable()?;
                if adjacency {
                    Formula::adjacent(x, y)
                } else {
                    Formula::equal(x, y)
                }
            }
            _ => return self.error("expected a quantifier, connective or atom"),
        };
        self.expect(Token::Close)?;
        Ok(f)
    }
}

/// Parses the syntax produced by `Formula`'s `Display` implementation.
pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        at: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    if p.at != p.tokens.len() {
        return p.error("trailing input after formula");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_formula() {
        let text = "(EXISTS x1 . (EXISTS x2 . (AND (NOT (x1 = x2)) (x1 ~ x2))))";
        let f = parse_formula(text).unwrap();
        assert_eq!(f.to_string(), text);
        assert_eq!(f.quantifier_depth(), 2);
    }

    #[test]
    fn whitespace_is_flexible() {
        let f = parse_formula("( FORALL x.(OR(x~x)  (x=x)) )").unwrap();
        assert_eq!(f.to_string(), "(FORALL x . (OR (x ~ x) (x = x)))");
    }

    #[test]
    fn empty_connectives() {
        assert_eq!(parse_formula("(AND)").unwrap(), Formula::truth());
        assert_eq!(parse_formula("(OR)").unwrap(), Formula::falsity());
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse_formula("(EXISTS AND . (x ~ x))").unwrap_err();
        assert!(matches!(err, LogicError::Parse { offset: 8, .. }), "{err:?}");
        assert!(parse_formula("(x ~ y) extra").is_err());
        assert!(parse_formula("(x < y)").is_err());
        assert!(parse_formula("(x ~").is_err());
    }
}
