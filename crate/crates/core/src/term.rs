//! Terms over the signature of a finite algebra, written in prefix notation
//! such as `(mul (mul x y) z)`.

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Term {
    Var(usize),
    Op(usize, Vec<Term>),
}

impl Term {
    pub fn op(op: usize, children: Vec<Term>) -> Term {
        Term::Op(op, children)
    }

    /// Largest variable index occurring in the term.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::Op(_, cs) => cs.iter().filter_map(Term::max_var).max(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Op(_, cs) => 1 + cs.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    /// Replaces variable `i` by `subst[i]`.
    pub fn substitute(&self, subst: &[Term]) -> Term {
        match self {
            Term::Var(i) => subst[*i].clone(),
            Term::Op(op, cs) => Term::Op(*op, cs.iter().map(|c| c.substitute(subst)).collect()),
        }
    }

    /// Prefix rendering with operation names from `alg`.
    pub fn to_prefix(&self, alg: &FiniteAlgebra, vars: usize) -> String {
        let mut out = String::new();
        self.write_prefix(alg, vars, &mut out);
        out
    }

    fn write_prefix(&self, alg: &FiniteAlgebra, vars: usize, out: &mut String) {
        match self {
            Term::Var(i) => out.push_str(&var_name(*i, vars)),
            Term::Op(op, cs) => {
                out.push('(');
                out.push_str(&alg.operations()[*op].name);
                for c in cs {
                    out.push(' ');
                    c.write_prefix(alg, vars, out);
                }
                out.push(')');
            }
        }
    }

    /// Parses prefix notation. Variables are `x y z w` when `vars <= 4`,
    /// otherwise `x0 x1 ..`; `x0..` is accepted in either case. A bare
    /// identifier that is not a variable names a nullary operation.
    pub fn parse(src: &str, alg: &FiniteAlgebra, vars: usize) -> Result<Term> {
        let tokens = tokenize(src);
        let mut pos = 0;
        let t = parse_tokens(&tokens, &mut pos, alg, vars)?;
        if pos != tokens.len() {
            return Err(Error::Parse(format!("trailing input in term {src:?}")));
        }
        Ok(t)
    }
}

const SHORT_VARS: [&str; 4] = ["x", "y", "z", "w"];

pub fn var_name(i: usize, vars: usize) -> String {
    if vars <= SHORT_VARS.len() && i < SHORT_VARS.len() {
        SHORT_VARS[i].to_string()
    } else {
        format!("x{i}")
    }
}

fn var_index(name: &str, vars: usize) -> Option<usize> {
    if vars <= SHORT_VARS.len() {
        if let Some(i) = SHORT_VARS.iter().position(|&v| v == name) {
            return (i < vars).then_some(i);
        }
    }
    let rest = name.strip_prefix('x')?;
    let i: usize = rest.parse().ok()?;
    (i < vars).then_some(i)
}

fn tokenize(src: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    for ch in src.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
                tokens.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    tokens
}

fn parse_tokens(tokens: &[String], pos: &mut usize, alg: &FiniteAlgebra, vars: usize) -> Result<Term> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| Error::Parse("unexpected end of term".into()))?;
    *pos += 1;
    if tok == "(" {
        let name = tokens
            .get(*pos)
            .ok_or_else(|| Error::Parse("missing operation name".into()))?;
        *pos += 1;
        let op = alg
            .op_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown operation {name:?}")))?;
        let mut children = Vec::new();
        while tokens.get(*pos).map(String::as_str) != Some(")") {
            if *pos >= tokens.len() {
                return Err(Error::Parse("unbalanced parentheses".into()));
            }
            children.push(parse_tokens(tokens, pos, alg, vars)?);
        }
        *pos += 1;
        if children.len() != alg.arity(op) {
            return Err(Error::Parse(format!(
                "operation {name:?} has arity {}, given {} arguments",
                alg.arity(op),
                children.len()
            )));
        }
        Ok(Term::Op(op, children))
    } else if tok == ")" {
        Err(Error::Parse("unexpected ')'".into()))
    } else if let Some(i) = var_index(tok, vars) {
        Ok(Term::Var(i))
    } else if let Some(op) = alg.op_index(tok).filter(|&o| alg.arity(o) == 0) {
        Ok(Term::Op(op, vec![]))
    } else {
        Err(Error::Parse(format!("unknown symbol {tok:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn prefix_round_trip() {
        let a = fixtures::z4();
        let t = Term::parse("(add (add x (neg y)) z)", &a, 3).unwrap();
        assert_eq!(t.to_prefix(&a, 3), "(add (add x (neg y)) z)");
        assert_eq!(Term::parse(&t.to_prefix(&a, 3), &a, 3).unwrap(), t);
        let c = Term::parse("(add zero x0)", &a, 1).unwrap();
        assert_eq!(c.to_prefix(&a, 1), "(add (zero) x)");
        assert_eq!(Term::parse("(add (zero) x)", &a, 1).unwrap(), c);
    }

    #[test]
    fn parse_errors() {
        let a = fixtures::z4();
        assert!(Term::parse("(add x)", &a, 2).is_err());
        assert!(Term::parse("(foo x y)", &a, 2).is_err());
        assert!(Term::parse("(add x y", &a, 2).is_err());
        assert!(Term::parse("(add x z)", &a, 2).is_err());
        assert!(Term::parse("x y", &a, 2).is_err());
    }

    #[test]
    fn long_variable_names() {
        let a = fixtures::z4();
        let t = Term::parse("(add x0 x5)", &a, 6).unwrap();
        assert_eq!(t.max_var(), Some(5));
        assert_eq!(t.to_prefix(&a, 6), "(add x0 x5)");
        assert_eq!(t.depth(), 1);
    }
}
