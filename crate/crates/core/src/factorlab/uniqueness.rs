//! Unique and non-unique factorisations of induced-hereditary properties.
//!
//! The uniquely factorisable products of edgeless and complete graphs are
//! certified through finite witness facts: which graphs are members, how many
//! essentially different partitions they have, and which parts those use.
//! `Q1` and `Q2` name the factors of an arbitrary second factorisation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{enumerate_partitions, product_view, Equality, Mode, ViewFactor};
use crate::properties::{classes, PropertyDef};
use crate::universe::{PropertyView, Universe};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Bool(bool),
    Count(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub name: String,
    /// What the fact rules out for a second factorisation `Q1 o Q2`.
    pub role: String,
    pub graph: Graph,
    pub factors: String,
    pub expected: Expected,
    pub observed: Expected,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    /// `1`-`4` for the unique cases, or `non-unique`.
    pub case: String,
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub note: Option<String>,
    pub checks: Vec<WitnessCheck>,
    pub alternative: Option<NonUniqueness>,
    pub holds: bool,
}

impl UniquenessReport {
    fn finish(case: &str, r: usize, s: usize, n: usize, note: Option<String>, checks: Vec<WitnessCheck>) -> Self {
        let holds = checks.iter().all(|c| c.pass);
        UniquenessReport { case: case.into(), r, s, n, note, checks, alternative: None, holds }
    }

    pub fn non_unique(alt: NonUniqueness, n: usize) -> Self {
        UniquenessReport {
            case: "non-unique".into(),
            r: 0,
            s: 0,
            n,
            note: Some(format!("branch ({})", alt.branch)),
            checks: Vec::new(),
            holds: alt.holds,
            alternative: Some(alt),
        }
    }
}

fn names(factors: &[PropertyDef]) -> String {
    factors.iter().map(ToString::to_string).collect::<Vec<_>>().join(" o ")
}

struct Suite<'a> {
    n: usize,
    checks: Vec<WitnessCheck>,
    complement: bool,
    _u: &'a Arc<Universe>,
}

impl Suite<'_> {
    fn graph(&self, g: Graph) -> Graph {
        if self.complement {
            g.complement()
        } else {
            g
        }
    }

    fn push(&mut self, name: String, role: &str, g: Graph, factors: &[PropertyDef], expected: Expected, observed: Expected) {
        let pass = expected == observed;
        self.checks.push(WitnessCheck { name, role: role.into(), graph: g, factors: names(factors), expected, observed, pass });
    }

    fn member(&mut self, name: String, role: &str, g: Graph, factors: &[PropertyDef], expected: bool) -> Result<()> {
        let g = self.graph(g);
        let observed = !enumerate_partitions(&g, factors, Mode::Labelled)?.is_empty();
        self.push(name, role, g, factors, Expected::Bool(expected), Expected::Bool(observed));
        Ok(())
    }

    fn essential(&mut self, name: String, role: &str, g: Graph, factors: &[PropertyDef], expected: usize) -> Result<()> {
        let g = self.graph(g);
        let observed = enumerate_partitions(&g, factors, Mode::Essential)?.len();
        self.push(name, role, g, factors, Expected::Count(expected), Expected::Count(observed));
        Ok(())
    }

    /// Some partition of `g` has a part isomorphic to `part`.
    fn uses(&mut self, name: String, role: &str, g: Graph, factors: &[PropertyDef], part: Graph) -> Result<()> {
        let g = self.graph(g);
        let part = self.graph(part);
        let observed = enumerate_partitions(&g, factors, Mode::Essential)?.iter().any(|c| c.induced.contains(&part));
        self.push(name, role, g, factors, Expected::Bool(true), Expected::Bool(observed));
        Ok(())
    }
}

fn cap(u: &Arc<Universe>, largest: usize) -> Result<()> {
    if largest > u.n() {
        Err(Error::CapExceeded(largest))
    } else {
        Ok(())
    }
}

fn kbar(k: usize) -> Graph {
    Graph::edgeless(k)
}

fn union(a: Graph, b: Graph) -> Result<Graph> {
    a.disjoint_union(&b)
}

fn join(a: Graph, b: Graph) -> Result<Graph> {
    a.join(&b)
}

/// Witness facts showing `O(r) o K(s)` has no second factorisation.
/// With `r = 1` or `s = 1` the product is of the edgeless or complete kind
/// and the matching suite runs instead.
pub fn unique_ok_suite(r: usize, s: usize, u: &Arc<Universe>) -> Result<UniquenessReport> {
    if r == 0 || s == 0 {
        return Err(Error::Precondition("r and s must be positive".into()));
    }
    if s == 1 {
        let mut rep = unique_oo_suite(r, 1, u)?;
        rep.note = Some("K(1) = O(1), so this is a product of two edgeless properties".into());
        return Ok(rep);
    }
    if r == 1 {
        let mut rep = unique_kk_suite(1, s, u)?;
        rep.note = Some("O(1) = K(1), so this is a product of two complete properties".into());
        return Ok(rep);
    }
    cap(u, (r + s).max(s + 3))?;
    let n = u.n();
    let p = [PropertyDef::edgeless_upto(r), PropertyDef::complete_upto(s)];
    let ok = [PropertyDef::O, PropertyDef::K];
    let mut t = Suite { n, checks: Vec::new(), complement: false, _u: u };

    for a in 2..=s + 1 {
        for b in a..=s + 1 {
            if a + b <= t.n {
                t.member(
                    format!("K{a} u K{b} excluded"),
                    "Q1 and Q2 cannot both hold a clique of order at least 2",
                    union(Graph::complete(a), Graph::complete(b))?,
                    &p,
                    false,
                )?;
            }
        }
    }
    t.member("K3 member".into(), "Q2 holds K2 or K3".into(), Graph::complete(3), &p, true)?;
    for r2 in 1..=r {
        for b in 2..=s {
            if r2 + b > t.n {
                continue;
            }
            let g = union(kbar(r2), Graph::complete(b))?;
            let parts = enumerate_partitions(&g, &p, Mode::Labelled)?;
            let fixed = !parts.is_empty() && parts.iter().all(|c| c.parts[1].iter().all(|&v| g.degree(v) > 0));
            t.push(
                format!("isolated vertices of co-K{r2} u K{b} stay independent"),
                "every graph of Q1 lies in O(r)",
                g,
                &p,
                Expected::Bool(true),
                Expected::Bool(fixed),
            );
        }
    }
    t.member(
        format!("K{} excluded", s + 2),
        "Q1 = {K1} would put K(s+2) into the product",
        Graph::complete(s + 2),
        &p,
        false,
    )?;
    t.member(
        format!("co-K{r} + (K{} u K1) excluded", s - 1),
        "Q1 = {K1} would put this join into the product",
        join(kbar(r), union(Graph::complete(s - 1), Graph::complete(1))?)?,
        &p,
        false,
    )?;
    t.member(format!("co-K{r} + K{s} member"), "Q1 contains some co-K_a with a >= 2", join(kbar(r), Graph::complete(s))?, &p, true)?;
    t.member("co-K2 + co-K2 excluded".into(), "Q2 holds complete graphs only", join(kbar(2), kbar(2))?, &p, false)?;
    t.member(
        format!("co-K2 + K{} excluded", s + 1),
        "Q2 holds complete graphs of order at most s only",
        join(kbar(2), Graph::complete(s + 1))?,
        &p,
        false,
    )?;
    for r2 in 1..=r {
        let g = join(kbar(r2), Graph::complete(s))?;
        t.member(format!("co-K{r2} + K{s} member"), "co-K_r' is offered to Q1", g, &p, true)?;
        t.essential(format!("co-K{r2} + K{s} has two (O,K)-partitions"), "only two ways to split it", g, &ok, 2)?;
        t.uses(
            format!("co-K{r2} + K{s} has a partition using K{}", s + 1),
            "that partition is unavailable to Q1 and Q2, so co-K_r' is in Q1",
            g,
            &ok,
            Graph::complete(s + 1),
        )?;
    }
    for s2 in 1..=s {
        let g = union(kbar(r), Graph::complete(s2))?;
        t.member(format!("co-K{r} u K{s2} member"), "K_s' is offered to Q2", g, &p, true)?;
        t.essential(format!("co-K{r} u K{s2} has two (O,K)-partitions"), "only two ways to split it", g, &ok, 2)?;
        t.uses(
            format!("co-K{r} u K{s2} has a partition using co-K{}", r + 1),
            "that partition is unavailable to Q1, so K_s' is in Q2",
            g,
            &ok,
            kbar(r + 1),
        )?;
    }
    Ok(UniquenessReport::finish("4", r, s, n, None, t.checks))
}

fn two_factor_suite(r: usize, s: usize, u: &Arc<Universe>, complement: bool) -> Result<UniquenessReport> {
    if r == 0 || s == 0 {
        return Err(Error::Precondition("r and s must be positive".into()));
    }
    let (small, large) = (r.min(s), r.max(s));
    cap(u, (r + s).max(large + 2))?;
    let n = u.n();
    let (p, two) = if complement {
        ([PropertyDef::complete_upto(r), PropertyDef::complete_upto(s)], [PropertyDef::K, PropertyDef::K])
    } else {
        ([PropertyDef::edgeless_upto(r), PropertyDef::edgeless_upto(s)], [PropertyDef::O, PropertyDef::O])
    };
    let mut t = Suite { n, checks: Vec::new(), complement, _u: u };
    t.member("triangle excluded".into(), "Q1 and Q2 hold only edgeless graphs", Graph::complete(3), &p, false)?;
    for r2 in 1..=r {
        for s2 in 1..=s {
            let g = join(kbar(r2), kbar(s2))?;
            t.member(format!("co-K{r2} + co-K{s2} member"), "co-K_r' and co-K_s' are offered to the factors", g, &p, true)?;
            t.essential(
                format!("co-K{r2} + co-K{s2} has one two-part partition"),
                "co-K_r' lies in one of Q1, Q2 and co-K_s' in the other",
                g,
                &two,
                1,
            )?;
        }
    }
    t.member(
        format!("co-K{} + K1 excluded", large + 1),
        "neither factor holds co-K_a for a > max(r, s)",
        join(kbar(large + 1), kbar(1))?,
        &p,
        false,
    )?;
    if small < large {
        t.member(
            format!("co-K{0} + co-K{0} excluded", small + 1),
            "only one factor holds co-K_a for a > min(r, s)",
            join(kbar(small + 1), kbar(small + 1))?,
            &p,
            false,
        )?;
    }
    let case = if complement { "3" } else { "2" };
    Ok(UniquenessReport::finish(case, r, s, n, None, t.checks))
}

/// Witness facts showing `O(r) o O(s)` has no second factorisation.
pub fn unique_oo_suite(r: usize, s: usize, u: &Arc<Universe>) -> Result<UniquenessReport> {
    two_factor_suite(r, s, u, false)
}

/// The complement of the edgeless suite, for `K(r) o K(s)`.
pub fn unique_kk_suite(r: usize, s: usize, u: &Arc<Universe>) -> Result<UniquenessReport> {
    two_factor_suite(r, s, u, true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonUniqueness {
    /// `a`: a factor is not induced-hereditary; `b`: a factor holds both
    /// `K2` and its complement; `c`: one factor is `O` or `K`.
    pub branch: char,
    pub original: [String; 2],
    pub alternative: [String; 2],
    pub equality: Equality,
    /// The two factor pairs differ as unordered pairs of sets.
    pub distinct: bool,
    /// A graph in exactly one of the first factors of the two pairs.
    pub distinguishing: Option<Graph>,
    pub holds: bool,
}

fn minus_k1(v: &PropertyView) -> PropertyView {
    let mut out = v.clone();
    if let Some(i) = v.universe().index_of(&Graph::complete(1)) {
        out.set(i, false);
    }
    out
}

/// A second factorisation of `p1 o p2`, found by the first branch that applies.
pub fn nonuniqueness_witness(p1: &PropertyDef, p2: &PropertyDef, u: &Arc<Universe>) -> Result<NonUniqueness> {
    let v1 = p1.materialize(u);
    let v2 = p2.materialize(u);
    let original = [ViewFactor::new(p1.to_string(), v1.clone()), ViewFactor::new(p2.to_string(), v2.clone())];
    let product = product_view(&original, u);
    if let Some((g, h)) = classes::is_induced_hereditary_up_to(&product).counterexample {
        return Err(Error::Precondition(format!("the product is not induced-hereditary: {g} is a member, {h} is not")));
    }
    let has = |v: &PropertyView, g: &Graph| v.contains(g);
    let (k2, co_k2, k1) = (Graph::complete(2), Graph::edgeless(2), Graph::complete(1));
    let o = PropertyDef::O.materialize(u);
    let k = PropertyDef::K.materialize(u);
    let only_k1 = |v: &PropertyView| v.count() == 1 && v.contains(&k1);
    let without = |p: &PropertyDef| PropertyDef::without(p.clone(), vec![k1]).to_string();

    let ih1 = classes::is_induced_hereditary_up_to(&v1).holds;
    let ih2 = classes::is_induced_hereditary_up_to(&v2).holds;
    let (branch, q1, q2, names) = if !ih1 || !ih2 {
        let name = |p: &PropertyDef, ih: bool| if ih { p.to_string() } else { format!("induced_closure({p})") };
        (
            'a',
            v1.induced_hereditary_closure(),
            v2.induced_hereditary_closure(),
            [name(p1, ih1), name(p2, ih2)],
        )
    } else if has(&v1, &k2) && has(&v1, &co_k2) {
        ('b', minus_k1(&v1), v2.clone(), [without(p1), p2.to_string()])
    } else if has(&v2, &k2) && has(&v2, &co_k2) {
        ('b', v1.clone(), minus_k1(&v2), [p1.to_string(), without(p2)])
    } else if v1 == o && v2.is_subset(&k)? && !only_k1(&v2) {
        ('c', v1.clone(), minus_k1(&v2), [p1.to_string(), without(p2)])
    } else if v2 == o && v1.is_subset(&k)? && !only_k1(&v1) {
        ('c', minus_k1(&v1), v2.clone(), [without(p1), p2.to_string()])
    } else if v2 == k && v1.is_subset(&o)? && !only_k1(&v1) {
        ('c', minus_k1(&v1), v2.clone(), [without(p1), p2.to_string()])
    } else if v1 == k && v2.is_subset(&o)? && !only_k1(&v2) {
        ('c', v1.clone(), minus_k1(&v2), [p1.to_string(), without(p2)])
    } else {
        return Err(Error::NoBranch);
    };
    let alt = [ViewFactor::new(names[0].clone(), q1.clone()), ViewFactor::new(names[1].clone(), q2.clone())];
    let equality = Equality::of(&product_view(&alt, u), &product)?;
    let same = (q1 == v1 && q2 == v2) || (q1 == v2 && q2 == v1);
    let distinguishing = q1.first_difference(&v1)?.or(q2.first_difference(&v2)?);
    let holds = equality.equal && !same;
    Ok(NonUniqueness {
        branch,
        original: [p1.to_string(), p2.to_string()],
        alternative: names,
        equality,
        distinct: !same,
        distinguishing,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_complete_suite() {
        let u = Universe::enumerate(7).unwrap();
        let rep = unique_ok_suite(2, 2, &u).unwrap();
        assert!(rep.holds, "{:?}", rep.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
        assert_eq!(rep.case, "4");
        let rep = unique_ok_suite(3, 1, &u).unwrap();
        assert_eq!(rep.case, "2");
        assert!(rep.holds);
        let rep = unique_ok_suite(1, 3, &u).unwrap();
        assert_eq!(rep.case, "3");
        assert!(rep.holds);
        let small = Universe::enumerate(4).unwrap();
        assert!(matches!(unique_ok_suite(3, 3, &small), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn two_factor_suites() {
        let u = Universe::enumerate(6).unwrap();
        for (r, s) in [(2, 2), (2, 3)] {
            assert!(unique_oo_suite(r, s, &u).unwrap().holds);
            assert!(unique_kk_suite(r, s, &u).unwrap().holds);
        }
    }

    #[test]
    fn branches() {
        let u = Universe::enumerate(6).unwrap();
        let a = nonuniqueness_witness(&PropertyDef::listed(vec![Graph::complete(2)]), &PropertyDef::O, &u).unwrap();
        assert_eq!(a.branch, 'a');
        assert!(a.holds);
        let not_ih = PropertyDef::listed(vec![Graph::complete(1), Graph::complete(3)]);
        assert!(matches!(nonuniqueness_witness(&not_ih, &PropertyDef::O, &u), Err(Error::Precondition(_))));
        let p3 = PropertyDef::listed(vec![Graph::complete(1), Graph::complete(2), Graph::edgeless(2), Graph::path(3)]);
        let b = nonuniqueness_witness(&p3, &PropertyDef::O, &u).unwrap();
        assert_eq!(b.branch, 'b');
        assert!(b.holds);
        let c = nonuniqueness_witness(&PropertyDef::O, &PropertyDef::K, &u).unwrap();
        assert_eq!(c.branch, 'c');
        assert_eq!(c.alternative[0], "O");
        assert!(c.holds);
        let unique = nonuniqueness_witness(&PropertyDef::edgeless_upto(2), &PropertyDef::complete_upto(2), &u);
        assert!(matches!(unique, Err(Error::NoBranch)));
    }
}
