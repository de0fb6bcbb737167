//! Textual constructor syntax for rings, modules, and submodules.
//!
//! ```text
//! ring   := zn(n) | prod(ring, ring) | quot(ring, {x, ...})
//! module := self(ring) | cyc(ring, {x, ...}) | prodmod(module, module)
//!         | extprod(module, module) | quotmod(module, {m, ...})
//!         | freemod(ring, k) | tensorfree(module, k) | localize(module, {s, ...})
//! ```
//!
//! Set entries are element labels and may contain commas inside brackets,
//! e.g. `{(1,0),(0,1)}`. Every constructed structure is named by the
//! expression that builds it, so `parse_module(m.name())` rebuilds `m`.

use crate::bits::Bits;
use crate::construct::{localize, MultSet};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::module::{FiniteModule, Submodule};
use crate::ring::FiniteRing;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Call { name: String, args: Vec<Node>, column: usize },
    Int { value: usize, column: usize },
    Set { items: Vec<String>, column: usize },
}

impl Node {
    fn column(&self) -> usize {
        match self {
            Node::Call { column, .. } | Node::Int { column, .. } | Node::Set { column, .. } => *column,
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, line, _text: text }
    }

    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(self.pos + 1, format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(self.pos + 1, format!("expected `{want}`, found end of input"))),
        }
    }

    fn parse_node(&mut self) -> Result<Node> {
        self.skip_ws();
        let column = self.pos + 1;
        match self.peek() {
            None => Err(self.err(column, "unexpected end of input")),
            Some('{') => self.parse_set(),
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let value = digits.parse().map_err(|_| self.err(column, "number out of range"))?;
                Ok(Node::Int { value, column })
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.expect('(')?;
                let mut args = Vec::new();
                loop {
                    args.push(self.parse_node()?);
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(c) => return Err(self.err(self.pos + 1, format!("expected `,` or `)`, found `{c}`"))),
                        None => return Err(self.err(self.pos + 1, "unclosed `(`")),
                    }
                }
                Ok(Node::Call { name, args, column })
            }
            Some(c) => Err(self.err(column, format!("unexpected `{c}`"))),
        }
    }

    /// `{a, (b,c), [d]}` split on commas at bracket depth zero.
    fn parse_set(&mut self) -> Result<Node> {
        let column = self.pos + 1;
        self.pos += 1;
        let mut items = Vec::new();
        let mut current = String::new();
        let mut depth = 0usize;
        loop {
            let Some(c) = self.peek() else {
                return Err(self.err(column, "unclosed `{`"));
            };
            self.pos += 1;
            match c {
                '(' | '[' | '{' => {
                    depth += 1;
                    current.push(c);
                }
                ')' | ']' => {
                    depth = depth.checked_sub(1).ok_or_else(|| self.err(self.pos, format!("unbalanced `{c}`")))?;
                    current.push(c);
                }
                '}' if depth == 0 => break,
                '}' => {
                    depth -= 1;
                    current.push(c);
                }
                ',' if depth == 0 => items.push(std::mem::take(&mut current)),
                c if c.is_whitespace() => {}
                c => current.push(c),
            }
        }
        if !current.is_empty() || !items.is_empty() {
            items.push(current);
        }
        if items.iter().any(|s| s.is_empty()) {
            return Err(self.err(column, "empty set entry"));
        }
        Ok(Node::Set { items, column })
    }

    fn finish(mut self, node: Node) -> Result<Node> {
        self.skip_ws();
        if self.pos < self.chars.len() {
            return Err(self.err(self.pos + 1, "trailing input"));
        }
        Ok(node)
    }
}

fn parse_tree(text: &str, line: usize) -> Result<Node> {
    let mut p = Parser::new(text, line);
    let node = p.parse_node()?;
    p.finish(node)
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn arity(name: &str, args: &[Node], want: usize, line: usize, column: usize) -> Result<()> {
    if args.len() == want {
        Ok(())
    } else {
        Err(perr(line, column, format!("`{name}` takes {want} arguments, got {}", args.len())))
    }
}

fn int_arg(node: &Node, line: usize) -> Result<usize> {
    match node {
        Node::Int { value, .. } => Ok(*value),
        other => Err(perr(line, other.column(), "expected a number")),
    }
}

fn set_arg(node: &Node, line: usize) -> Result<&[String]> {
    match node {
        Node::Set { items, .. } => Ok(items),
        other => Err(perr(line, other.column(), "expected a set `{...}`")),
    }
}

/// Wraps construction errors with the position of the offending call.
fn at<T>(r: Result<T>, line: usize, column: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => perr(line, column, other.to_string()),
    })
}

fn ring_elements(ring: &FiniteRing, items: &[String], line: usize, column: usize) -> Result<Vec<usize>> {
    items.iter().map(|s| at(ring.element(s), line, column)).collect()
}

fn module_elements(module: &FiniteModule, items: &[String], line: usize, column: usize) -> Result<Vec<usize>> {
    items.iter().map(|s| at(module.element(s), line, column)).collect()
}

fn build_ring(node: &Node, line: usize) -> Result<FiniteRing> {
    let Node::Call { name, args, column } = node else {
        return Err(perr(line, node.column(), "expected a ring constructor"));
    };
    let column = *column;
    match name.as_str() {
        "zn" => {
            arity(name, args, 1, line, column)?;
            at(FiniteRing::zn(int_arg(&args[0], line)?), line, column)
        }
        "prod" => {
            arity(name, args, 2, line, column)?;
            let (a, b) = (build_ring(&args[0], line)?, build_ring(&args[1], line)?);
            at(FiniteRing::product(&a, &b), line, column)
        }
        "quot" => {
            arity(name, args, 2, line, column)?;
            let base = build_ring(&args[0], line)?;
            let gens = ring_elements(&base, set_arg(&args[1], line)?, line, args[1].column())?;
            at(base.quotient(&Ideal::generated(&base, &gens)), line, column)
        }
        other => Err(perr(line, column, format!("unknown ring constructor `{other}`"))),
    }
}

fn build_module(node: &Node, line: usize) -> Result<FiniteModule> {
    let Node::Call { name, args, column } = node else {
        return Err(perr(line, node.column(), "expected a module constructor"));
    };
    let column = *column;
    match name.as_str() {
        "self" => {
            arity(name, args, 1, line, column)?;
            Ok(FiniteModule::regular(&build_ring(&args[0], line)?))
        }
        "cyc" => {
            arity(name, args, 2, line, column)?;
            let ring = build_ring(&args[0], line)?;
            let gens = ring_elements(&ring, set_arg(&args[1], line)?, line, args[1].column())?;
            at(FiniteModule::cyclic(&ring, &Ideal::generated(&ring, &gens)), line, column)
        }
        "prodmod" | "extprod" => {
            arity(name, args, 2, line, column)?;
            let (a, b) = (build_module(&args[0], line)?, build_module(&args[1], line)?);
            let built = if name == "prodmod" {
                FiniteModule::product_same_ring(&a, &b)
            } else {
                FiniteModule::product_over_ring_product(&a, &b)
            };
            at(built, line, column)
        }
        "quotmod" => {
            arity(name, args, 2, line, column)?;
            let base = build_module(&args[0], line)?;
            let gens = module_elements(&base, set_arg(&args[1], line)?, line, args[1].column())?;
            let k = Submodule::generated(&base, &gens);
            at(base.quotient(&k).map(|(q, _)| q), line, column)
        }
        "freemod" => {
            arity(name, args, 2, line, column)?;
            let ring = build_ring(&args[0], line)?;
            at(FiniteModule::free(&ring, int_arg(&args[1], line)?), line, column)
        }
        "tensorfree" => {
            arity(name, args, 2, line, column)?;
            let base = build_module(&args[0], line)?;
            at(FiniteModule::power(&base, int_arg(&args[1], line)?), line, column)
        }
        "localize" => {
            arity(name, args, 2, line, column)?;
            let base = build_module(&args[0], line)?;
            let gens = ring_elements(base.ring(), set_arg(&args[1], line)?, line, args[1].column())?;
            let map = at(localize(&base, &MultSet::generated(base.ring(), &gens)), line, column)?;
            map.target()
                .cloned()
                .ok_or_else(|| perr(line, column, "0 lies in S; the localization is the zero module"))
        }
        other => Err(perr(line, column, format!("unknown module constructor `{other}`"))),
    }
}

/// `zn(8)`, `prod(zn(2),zn(4))`, or the shorthand `zn:8`.
pub fn parse_ring(text: &str) -> Result<FiniteRing> {
    parse_ring_at(text, 1)
}

pub fn parse_ring_at(text: &str, line: usize) -> Result<FiniteRing> {
    let t = text.trim();
    if let Some(n) = t.strip_prefix("zn:") {
        let n = n.trim().parse().map_err(|_| perr(line, 4, "expected a number after `zn:`"))?;
        return at(FiniteRing::zn(n), line, 1);
    }
    build_ring(&parse_tree(t, line)?, line)
}

pub fn parse_module(text: &str) -> Result<FiniteModule> {
    parse_module_at(text, 1)
}

pub fn parse_module_at(text: &str, line: usize) -> Result<FiniteModule> {
    build_module(&parse_tree(text.trim(), line)?, line)
}

/// A module expression, or one of the shorthands `self`, `free:<k>`,
/// `cyc:{x,...}` over `ring`.
pub fn parse_module_over(ring: &FiniteRing, text: &str) -> Result<FiniteModule> {
    let t = text.trim();
    if t == "self" {
        return Ok(FiniteModule::regular(ring));
    }
    if let Some(k) = t.strip_prefix("free:") {
        let k = k.trim().parse().map_err(|_| perr(1, 6, "expected a rank after `free:`"))?;
        return at(FiniteModule::free(ring, k), 1, 1);
    }
    if let Some(rest) = t.strip_prefix("cyc:") {
        let mut p = Parser::new(rest, 1);
        p.skip_ws();
        if p.peek() != Some('{') {
            return Err(perr(1, 5, "expected a set after `cyc:`"));
        }
        let node = p.parse_set()?;
        let node = p.finish(node)?;
        let gens = ring_elements(ring, set_arg(&node, 1)?, 1, 5)?;
        return at(FiniteModule::cyclic(ring, &Ideal::generated(ring, &gens)), 1, 1);
    }
    let module = parse_module(t)?;
    if module.ring() != ring {
        return Err(perr(1, 1, format!("module {} is not over {}", module.name(), ring.name())));
    }
    Ok(module)
}

/// `zero`, `whole`, `gen:x;y;...` (generators separated by `;` or by
/// top-level commas), or an explicit element set `{x,...}`.
pub fn parse_submodule(module: &FiniteModule, text: &str) -> Result<Submodule> {
    let t = text.trim();
    match t {
        "zero" => return Ok(Submodule::zero(module)),
        "whole" => return Ok(Submodule::whole(module)),
        _ => {}
    }
    if let Some(rest) = t.strip_prefix("gen:") {
        let wrapped = format!("{{{}}}", rest.replace(';', ","));
        let mut p = Parser::new(&wrapped, 1);
        let node = p.parse_set()?;
        let gens = module_elements(module, set_arg(&node, 1)?, 1, 5)?;
        return Ok(Submodule::generated(module, &gens));
    }
    if t.starts_with('{') {
        let mut p = Parser::new(t, 1);
        let node = p.parse_set()?;
        let node = p.finish(node)?;
        let elems = module_elements(module, set_arg(&node, 1)?, 1, 1)?;
        return at(Submodule::new(module, Bits::from_iter(elems)), 1, 1);
    }
    Err(perr(1, 1, format!("unknown submodule selector `{t}`")))
}

/// Reads a line-oriented file of module expressions. Blank lines and text
/// after `#` are ignored.
pub fn parse_module_list(text: &str) -> Result<Vec<FiniteModule>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_module_at(line, i + 1)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings_round_trip() {
        for text in ["zn(8)", "prod(zn(2),zn(4))", "quot(zn(12),{4})"] {
            let r = parse_ring(text).unwrap();
            assert_eq!(parse_ring(r.name()).unwrap(), r);
        }
        assert_eq!(parse_ring("zn:8").unwrap().size(), 8);
        assert_eq!(parse_ring("quot(zn(12),{4})").unwrap().size(), 4);
    }

    #[test]
    fn modules_round_trip() {
        for text in [
            "self(zn(8))",
            "cyc(zn(12),{4})",
            "prodmod(self(zn(4)),cyc(zn(4),{2}))",
            "extprod(self(zn(8)),self(zn(2)))",
            "quotmod(freemod(zn(2),2),{(1,1)})",
            "freemod(zn(4),2)",
            "tensorfree(cyc(zn(4),{2}),2)",
            "localize(self(zn(12)),{4})",
        ] {
            let m = parse_module(text).unwrap();
            let again = parse_module(m.name()).unwrap();
            assert_eq!(again, m, "{text} -> {}", m.name());
        }
        assert_eq!(parse_module("localize(self(zn(12)),{4})").unwrap().size(), 3);
    }

    #[test]
    fn nested_sets_split_at_depth_zero() {
        let m = parse_module("freemod(zn(2),2)").unwrap();
        let s = parse_submodule(&m, "{(0,0),(1,1)}").unwrap();
        assert_eq!(s.len(), 2);
        let g = parse_submodule(&m, "gen:(1,0),(0,1)").unwrap();
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn shorthand() {
        let r = parse_ring("zn:8").unwrap();
        let m = parse_module_over(&r, "self").unwrap();
        let n = parse_submodule(&m, "gen:4").unwrap();
        assert_eq!(n.len(), 2);
        assert_eq!(parse_module_over(&r, "cyc:{4}").unwrap().size(), 4);
        assert_eq!(parse_module_over(&r, "free:2").unwrap().size(), 64);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_ring("prod(zn(2), zx(3))").unwrap_err() {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (1, 13)),
            e => panic!("{e}"),
        }
        match parse_module_list("self(zn(4))\n\nself(zn(1))").unwrap_err() {
            Error::Parse { line, column, message } => {
                assert_eq!((line, column), (3, 6));
                assert!(message.contains("n >= 2"));
            }
            e => panic!("{e}"),
        }
        assert!(parse_ring("zn(8").is_err());
        assert!(parse_ring("zn(8) x").is_err());
        assert!(parse_submodule(&parse_module("self(zn(8))").unwrap(), "{3}").is_err());
    }
}
