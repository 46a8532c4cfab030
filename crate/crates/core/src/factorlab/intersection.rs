//! Intersection representations: one set of edge tokens per vertex.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, LabelledGraph};

/// A set with its own identity, so distinct empty sets stay distinct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedSet {
    pub name: String,
    pub tokens: BTreeSet<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionFamily {
    pub sets: Vec<NamedSet>,
}

fn pair_token(a: usize, b: usize) -> String {
    format!("v{}v{}", a.min(b), a.max(b))
}

/// `S_i` = the edges at vertex `i`, each edge an unordered pair token.
pub fn intersection_representation(g: &Graph) -> IntersectionFamily {
    let lg = g.labelled();
    let sets = (0..lg.order())
        .map(|v| NamedSet {
            name: format!("S{v}"),
            tokens: lg.neighbours(v).iter().map(|w| pair_token(v, w)).collect(),
        })
        .collect();
    IntersectionFamily { sets }
}

/// One vertex per set, adjacent when the contents meet.
pub fn intersection_graph(f: &IntersectionFamily) -> Result<Graph> {
    let mut g = LabelledGraph::new(f.sets.len())?;
    for (i, a) in f.sets.iter().enumerate() {
        for (j, b) in f.sets.iter().enumerate().skip(i + 1) {
            if !a.tokens.is_disjoint(&b.tokens) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g.canonical_form())
}

impl IntersectionFamily {
    /// One line per set: `name: token token ...`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(text: &str) -> Result<IntersectionFamily> {
        let mut sets: Vec<NamedSet> = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (name, rest) =
                line.split_once(':').ok_or_else(|| Error::Parse(format!("missing ':' in {line:?}")))?;
            let name = name.trim();
            if name.is_empty() || sets.iter().any(|s| s.name == name) {
                return Err(Error::Parse(format!("empty or repeated set name in {line:?}")));
            }
            sets.push(NamedSet { name: name.to_string(), tokens: rest.split_whitespace().map(String::from).collect() });
        }
        Ok(IntersectionFamily { sets })
    }
}

impl fmt::Display for IntersectionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sets {
            write!(f, "{}:", s.name)?;
            for t in &s.tokens {
                write!(f, " {t}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
