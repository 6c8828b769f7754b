//! Minimal GML reader: the `graph [ node [...] edge [...] ]` subset the
//! benchmark networks use. Unknown keys (label styling, weights, comments)
//! are skipped, nested lists recursively; directed graphs are rejected.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::io::{decode, ParseDiagnostics};

pub fn parse_gml(bytes: &[u8]) -> Result<(Graph, ParseDiagnostics)> {
    let text = decode(bytes)?;
    let tokens = tokenize(text)?;
    let mut cursor = Cursor { tokens, pos: 0 };

    // Scan top-level keys until the graph list; tolerate Creator etc.
    let mut graph_items = None;
    while let Some((line, tok)) = cursor.next() {
        match tok {
            Token::Key(k) if k == "graph" => {
                cursor.expect_open()?;
                graph_items = Some(cursor.collect_list()?);
                break;
            }
            Token::Key(_) => cursor.skip_value()?,
            _ => return Err(Error::format(line, "expected a key at the top level")),
        }
    }
    let items = graph_items.ok_or_else(|| Error::format(1, "no 'graph [ ... ]' block found"))?;

    let mut declared: Vec<(i64, Option<String>)> = Vec::new();
    let mut edges: Vec<(usize, i64, i64)> = Vec::new();
    for (line, key, value) in items {
        match (key.as_str(), value) {
            ("directed", Value::Int(1)) => {
                return Err(Error::UnsupportedFormat(
                    "directed GML graphs are not supported".into(),
                ))
            }
            ("directed", _) => {}
            ("node", Value::List(fields)) => {
                let mut id = None;
                let mut label = None;
                for (fline, fkey, fval) in fields {
                    match (fkey.as_str(), fval) {
                        ("id", Value::Int(v)) => id = Some(v),
                        ("id", _) => return Err(Error::format(fline, "node id must be an integer")),
                        ("label", Value::Str(s)) => label = Some(s),
                        _ => {}
                    }
                }
                let id = id.ok_or_else(|| Error::format(line, "node without an id"))?;
                if declared.iter().any(|(d, _)| *d == id) {
                    return Err(Error::format(line, format!("node id {id} declared twice")));
                }
                declared.push((id, label));
            }
            ("edge", Value::List(fields)) => {
                let mut source = None;
                let mut target = None;
                for (fline, fkey, fval) in fields {
                    match (fkey.as_str(), fval) {
                        ("source", Value::Int(v)) => source = Some(v),
                        ("target", Value::Int(v)) => target = Some(v),
                        ("source" | "target", _) => {
                            return Err(Error::format(fline, "edge endpoint must be an integer"))
                        }
                        _ => {}
                    }
                }
                match (source, target) {
                    (Some(s), Some(t)) => edges.push((line, s, t)),
                    _ => return Err(Error::format(line, "edge without source and target")),
                }
            }
            _ => {}
        }
    }

    let mut builder = GraphBuilder::new();
    let mut by_id: HashMap<i64, crate::graph::NodeId> = HashMap::new();
    let mut used_labels: HashMap<String, i64> = HashMap::new();
    for (id, label) in declared {
        let mut name = label.unwrap_or_else(|| id.to_string());
        // labels identify nodes downstream, so disambiguate collisions
        if used_labels.contains_key(&name) {
            name = format!("{name}#{id}");
        }
        used_labels.insert(name.clone(), id);
        by_id.insert(id, builder.node(&name));
    }
    for (line, s, t) in edges {
        let (Some(&u), Some(&v)) = (by_id.get(&s), by_id.get(&t)) else {
            return Err(Error::format(
                line,
                format!("edge references undeclared node id ({s} or {t})"),
            ));
        };
        builder.add_edge_ids(u, v);
    }

    let diagnostics = ParseDiagnostics {
        dropped_self_loops: builder.dropped_self_loops(),
        dropped_duplicate_edges: builder.dropped_duplicate_edges(),
        ..Default::default()
    };
    Ok((builder.finish(), diagnostics))
}

#[derive(Debug, Clone)]
enum Token {
    Key(String),
    Int(i64),
    Real(f64),
    Str(String),
    Open,
    Close,
}

#[derive(Debug)]
enum Value {
    Int(i64),
    #[allow(dead_code)]
    Real(f64),
    Str(String),
    List(Vec<(usize, String, Value)>),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                line += 1;
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '[' => {
                tokens.push((line, Token::Open));
                chars.next();
            }
            ']' => {
                tokens.push((line, Token::Close));
                chars.next();
            }
            '"' => {
                chars.next();
                let mut s = String::new();
                let mut closed = false;
                for ch in chars.by_ref() {
                    if ch == '"' {
                        closed = true;
                        break;
                    }
                    if ch == '\n' {
                        line += 1;
                    }
                    s.push(ch);
                }
                if !closed {
                    return Err(Error::format(line, "unterminated string"));
                }
                tokens.push((line, Token::Str(s)));
            }
            '#' => {
                // comment to end of line
                for ch in chars.by_ref() {
                    if ch == '\n' {
                        line += 1;
                        break;
                    }
                }
            }
            _ => {
                let mut word = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_whitespace() || ch == '[' || ch == ']' || ch == '"' {
                        break;
                    }
                    word.push(ch);
                    chars.next();
                }
                let tok = if let Ok(v) = word.parse::<i64>() {
                    Token::Int(v)
                } else if let Ok(v) = word.parse::<f64>() {
                    Token::Real(v)
                } else {
                    Token::Key(word)
                };
                tokens.push((line, tok));
            }
        }
    }
    Ok(tokens)
}

struct Cursor {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Cursor {
    fn next(&mut self) -> Option<(usize, Token)> {
        let item = self.tokens.get(self.pos).cloned();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn last_line(&self) -> usize {
        self.tokens.last().map_or(1, |(l, _)| *l)
    }

    fn expect_open(&mut self) -> Result<()> {
        match self.next() {
            Some((_, Token::Open)) => Ok(()),
            Some((line, _)) => Err(Error::format(line, "expected '['")),
            None => Err(Error::format(self.last_line(), "unexpected end of input")),
        }
    }

    /// Consume one value (scalar or bracketed list) without keeping it.
    fn skip_value(&mut self) -> Result<()> {
        match self.next() {
            Some((_, Token::Open)) => {
                let mut depth = 1;
                while depth > 0 {
                    match self.next() {
                        Some((_, Token::Open)) => depth += 1,
                        Some((_, Token::Close)) => depth -= 1,
                        Some(_) => {}
                        None => {
                            return Err(Error::format(self.last_line(), "unbalanced brackets"))
                        }
                    }
                }
                Ok(())
            }
            Some((_, Token::Int(_) | Token::Real(_) | Token::Str(_) | Token::Key(_))) => Ok(()),
            Some((line, Token::Close)) => Err(Error::format(line, "unexpected ']'")),
            None => Err(Error::format(self.last_line(), "unexpected end of input")),
        }
    }

    /// Read `key value` pairs until the matching close bracket.
    fn collect_list(&mut self) -> Result<Vec<(usize, String, Value)>> {
        let mut items = Vec::new();
        loop {
            match self.next() {
                Some((_, Token::Close)) => return Ok(items),
                Some((line, Token::Key(key))) => {
                    let value = self.read_value(line)?;
                    items.push((line, key, value));
                }
                Some((line, _)) => {
                    return Err(Error::format(line, "expected a key or ']'"));
                }
                None => return Err(Error::format(self.last_line(), "unbalanced brackets")),
            }
        }
    }

    fn read_value(&mut self, key_line: usize) -> Result<Value> {
        match self.next() {
            Some((_, Token::Int(v))) => Ok(Value::Int(v)),
            Some((_, Token::Real(v))) => Ok(Value::Real(v)),
            Some((_, Token::Str(s))) => Ok(Value::Str(s)),
            Some((_, Token::Open)) => Ok(Value::List(self.collect_list()?)),
            // bare words as values (rare, e.g. unquoted labels)
            Some((_, Token::Key(w))) => Ok(Value::Str(w)),
            Some((line, Token::Close)) => Err(Error::format(line, "key without a value")),
            None => Err(Error::format(key_line, "key without a value")),
        }
    }
}
