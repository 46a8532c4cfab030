//! Text syntax for property definitions.
//!
//! A property is a term `name` or `name(arg, ...)`. Graph arguments are
//! graph6 strings, which never contain parentheses, commas or spaces.
//!
//! ```text
//! O  O(3)  K  K(2)  forests  bipartite  split  bounded_order(3)
//! path_components  clique_with_pendants
//! forbidden_induced(g6,...)  forbidden_subgraph(g6,...)
//! generated_induced(g6,...)  generated_subgraph(g6,...)
//! plus(g6)  minus(g6)  listed(g6,...)  without(expr,g6,...)
//! product(expr,...)  union(expr,...)  intersection(expr,...)
//! ```
//!
//! A definitions file holds lines `name = expr`; `#` starts a comment and
//! later lines may refer to earlier names.

use std::collections::BTreeMap;
use std::fmt;

use super::{Builtin, PropertyDef};
use crate::error::{Error, Result};
use crate::graph::Graph;

const RESERVED: &[&str] = &[
    "O",
    "K",
    "forests",
    "bipartite",
    "split",
    "bounded_order",
    "path_components",
    "clique_with_pendants",
    "forbidden_induced",
    "forbidden_subgraph",
    "generated_induced",
    "generated_subgraph",
    "plus",
    "minus",
    "listed",
    "without",
    "product",
    "union",
    "intersection",
];

/// Named property definitions, in the order they were declared.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Definitions {
    entries: Vec<(String, PropertyDef)>,
    by_name: BTreeMap<String, usize>,
}

impl Definitions {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: &str, def: PropertyDef) -> Result<()> {
        if !is_identifier(name) || RESERVED.contains(&name) {
            return Err(Error::Parse(format!("invalid property name {name:?}")));
        }
        if self.by_name.contains_key(name) {
            return Err(Error::Parse(format!("property {name:?} defined twice")));
        }
        self.by_name.insert(name.to_string(), self.entries.len());
        self.entries.push((name.to_string(), def));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&PropertyDef> {
        self.by_name.get(name).map(|&i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &PropertyDef)> {
        self.entries.iter().map(|(n, d)| (n.as_str(), d))
    }

    /// Resolves a bare name or a full expression.
    pub fn resolve(&self, text: &str) -> Result<PropertyDef> {
        parse_property(text, self)
    }
}

impl fmt::Display for Definitions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, def) in &self.entries {
            writeln!(f, "{name} = {def}")?;
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_definitions(text: &str) -> Result<Definitions> {
    let mut defs = Definitions::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, expr) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `name = expr`", lineno + 1)))?;
        let def = parse_property(expr, &defs).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        defs.insert(name.trim(), def)?;
    }
    Ok(defs)
}

pub fn parse_property(text: &str, defs: &Definitions) -> Result<PropertyDef> {
    let text = text.trim();
    let (name, args) = match text.find('(') {
        None => (text, None),
        Some(open) => {
            if !text.ends_with(')') {
                return Err(Error::Parse(format!("unbalanced parentheses in {text:?}")));
            }
            (text[..open].trim(), Some(split_args(&text[open + 1..text.len() - 1])?))
        }
    };
    if !is_identifier(name) {
        return Err(Error::Parse(format!("expected a property name, found {name:?}")));
    }
    let graphs = |args: &[&str]| -> Result<Vec<Graph>> { args.iter().map(|a| Graph::from_graph6(a)).collect() };
    let one_graph = |args: &[&str]| -> Result<Graph> {
        match args {
            [g] => Graph::from_graph6(g),
            _ => Err(Error::Parse(format!("{name} takes exactly one graph"))),
        }
    };
    let number = |args: &[&str]| -> Result<usize> {
        match args {
            [x] => x.parse().map_err(|_| Error::Parse(format!("{name}: expected a number, found {x:?}"))),
            _ => Err(Error::Parse(format!("{name} takes exactly one number"))),
        }
    };
    let exprs = |args: &[&str]| -> Result<Vec<PropertyDef>> {
        if args.is_empty() {
            return Err(Error::Parse(format!("{name} needs at least one property")));
        }
        args.iter().map(|a| parse_property(a, defs)).collect()
    };
    let args = args.unwrap_or_default();
    let a = args.as_slice();
    let no_args = |def: PropertyDef| -> Result<PropertyDef> {
        if a.is_empty() {
            Ok(def)
        } else {
            Err(Error::Parse(format!("{name} takes no arguments")))
        }
    };
    match name {
        "O" if a.is_empty() => Ok(PropertyDef::O),
        "O" => Ok(PropertyDef::edgeless_upto(number(a)?)),
        "K" if a.is_empty() => Ok(PropertyDef::K),
        "K" => Ok(PropertyDef::complete_upto(number(a)?)),
        "forests" => no_args(PropertyDef::Builtin(Builtin::Forests)),
        "bipartite" => no_args(PropertyDef::Builtin(Builtin::Bipartite)),
        "split" => no_args(PropertyDef::Builtin(Builtin::Split)),
        "path_components" => no_args(PropertyDef::Builtin(Builtin::PathComponents)),
        "clique_with_pendants" => no_args(PropertyDef::Builtin(Builtin::CliqueWithPendants)),
        "bounded_order" => Ok(PropertyDef::Builtin(Builtin::BoundedOrder(number(a)?))),
        "forbidden_induced" => Ok(PropertyDef::forbidden_induced(graphs(a)?).0),
        "forbidden_subgraph" => Ok(PropertyDef::forbidden_subgraph(graphs(a)?).0),
        "generated_induced" => Ok(PropertyDef::generated_induced(graphs(a)?).0),
        "generated_subgraph" => Ok(PropertyDef::generated_subgraph(graphs(a)?).0),
        "plus" => Ok(PropertyDef::PlusG(one_graph(a)?)),
        "minus" => Ok(PropertyDef::MinusG(one_graph(a)?)),
        "listed" => Ok(PropertyDef::listed(graphs(a)?)),
        "without" => match a.split_first() {
            Some((p, gs)) => Ok(PropertyDef::without(parse_property(p, defs)?, graphs(gs)?)),
            None => Err(Error::Parse("without needs a property".into())),
        },
        "product" => Ok(PropertyDef::Product(exprs(a)?)),
        "union" => Ok(PropertyDef::UnionOf(exprs(a)?)),
        "intersection" => Ok(PropertyDef::IntersectionOf(exprs(a)?)),
        _ => match defs.get(name) {
            Some(def) if a.is_empty() => Ok(def.clone()),
            Some(_) => Err(Error::Parse(format!("{name} is a named property and takes no arguments"))),
            None => Err(Error::Parse(format!("unknown property {name:?}"))),
        },
    }
}

/// Splits on top-level commas; an empty argument list yields no arguments.
fn split_args(s: &str) -> Result<Vec<&str>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    out.push(s[start..].trim());
    if out.iter().any(|a| a.is_empty()) {
        return Err(Error::Parse(format!("empty argument in {s:?}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> PropertyDef {
        parse_property(s, &Definitions::new()).unwrap()
    }

    #[test]
    fn builtins_round_trip() {
        for s in ["O", "O(2)", "K", "K(3)", "forests", "bipartite", "split", "bounded_order(3)", "path_components", "clique_with_pendants"] {
            assert_eq!(parse(s).to_string(), s);
        }
    }

    #[test]
    fn compound_round_trip() {
        let p3 = Graph::path(3).to_graph6();
        let k3 = Graph::complete(3).to_graph6();
        let text = format!("product(O(2),union(plus({p3}),minus({k3})),without(generated_induced({p3}),@))");
        let p = parse(&text);
        assert_eq!(p.to_string(), text);
        assert_eq!(parse(&p.to_string()), p);
    }

    #[test]
    fn definitions_file() {
        let text = "# colourings\nbip = product(O, O)\nthree = product(bip, O)\n\nmine = intersection(three, forests) # trailing\n";
        let defs = parse_definitions(text).unwrap();
        assert_eq!(defs.get("three").unwrap().to_string(), "product(product(O,O),O)");
        let again = parse_definitions(&defs.to_string()).unwrap();
        assert_eq!(again, defs);
    }

    #[test]
    fn errors() {
        let d = Definitions::new();
        assert!(parse_property("nope", &d).is_err());
        assert!(parse_property("O(x)", &d).is_err());
        assert!(parse_property("product(O", &d).is_err());
        assert!(parse_property("plus(A_,A_)", &d).is_err());
        assert!(parse_property("forests(2)", &d).is_err());
        assert!(parse_definitions("split = O").is_err());
        assert!(parse_definitions("a = O\na = K").is_err());
    }
}
