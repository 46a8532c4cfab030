//! Join decomposition, maximal graphs, decomposability numbers and the
//! factorisation of hereditary compositive properties on a finite universe.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::{self, Equality, Mode, ViewFactor};
use crate::properties::{classes, PropertyDef};
use crate::universe::{PropertyView, Universe};

/// A graph written as the join of its indecomposable parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinDecomposition {
    pub parts: Vec<Graph>,
    pub dc: usize,
}

impl JoinDecomposition {
    /// Join of the parts.
    pub fn rebuild(&self) -> Result<Graph> {
        self.parts.iter().try_fold(Graph::null(), |acc, p| acc.join(p))
    }
}

/// Ind-parts: the complements of the components of the complement, sorted.
pub fn ind_parts(g: &Graph) -> Result<JoinDecomposition> {
    if g.order() == 0 {
        return Err(Error::Precondition("the null graph has no ind-parts".into()));
    }
    let comps = g.labelled().complement().connected_components();
    let mut parts: Vec<Graph> = comps.into_iter().map(|c| g.induced_subgraph(c)).collect::<Result<_>>()?;
    parts.sort();
    Ok(JoinDecomposition { dc: parts.len(), parts })
}

pub fn dc(g: &Graph) -> usize {
    if g.order() == 0 {
        0
    } else {
        g.complement().connected_components().len()
    }
}

/// `c(P)`: the largest `c` with `K_c` in the view.
pub fn clique_bound(p: &PropertyView) -> Result<usize> {
    let n = p.universe().n();
    match (1..=n).find(|&r| !p.contains(&Graph::complete(r))) {
        Some(r) => Ok(r - 1),
        None => Err(Error::NoCliqueBound(n)),
    }
}

/// Members to which no edge can be added without leaving the property.
pub fn p_maximal(p: &PropertyView) -> Vec<Graph> {
    let u = p.universe();
    let rel = u.relations();
    p.member_indices()
        .filter(|&i| rel.edge_additions[i].iter().all(|&j| !p.contains_index(j)))
        .map(|i| *u.graph(i))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxStar {
    pub clique_bound: usize,
    pub graphs: Vec<Graph>,
    /// Maximal graphs on which the `K_1 + G` characterisation could be checked.
    pub cross_checked: usize,
}

/// Maximal graphs with at least `c(P)` vertices, cross-checked against
/// "maximal with `K_1 + G` outside P" wherever `K_1 + G` fits the universe.
pub fn m_star(p: &PropertyView) -> Result<MaxStar> {
    let c = clique_bound(p)?;
    let n = p.universe().n();
    let maximal = p_maximal(p);
    let mut cross_checked = 0;
    for g in &maximal {
        if g.order() < n {
            cross_checked += 1;
            let by_join = !p.contains(&Graph::complete(1).join(g)?);
            if by_join != (g.order() >= c) {
                return Err(Error::Invariant(format!("the two descriptions of M* disagree on {g}")));
            }
        }
    }
    let graphs = maximal.into_iter().filter(|g| g.order() >= c).collect();
    Ok(MaxStar { clique_bound: c, graphs, cross_checked })
}

/// Minimum `dc` over `M*` inside the universe: an upper bound for `dc(P)`.
pub fn dc_property(p: &PropertyView) -> Result<usize> {
    m_star(p)?.graphs.iter().map(dc).min().ok_or(Error::EmptyMaxStar)
}

/// Hereditary certificate for a definition: analytic, or exhaustive on `u`.
fn certify_hereditary(p: &PropertyDef, u: &Arc<Universe>) -> Result<()> {
    if p.certificates().hereditary || classes::is_hereditary_up_to(&p.materialize(u)).holds {
        Ok(())
    } else {
        Err(Error::Uncertified { property: p.to_string(), class: "hereditary" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxCharReport {
    pub graph: Graph,
    pub in_product: bool,
    pub maximal: bool,
    pub in_max_star: bool,
    pub partitions: usize,
    /// Partitions whose parts are all maximal and whose join is the graph.
    pub clause_partitions: usize,
    /// When the graph is in `M*`: every part of every partition is in `M*` of its factor.
    pub star_clause: Option<bool>,
    pub factors_at_most_dc: Option<bool>,
    /// `maximal` agrees with "member and every partition satisfies the clause".
    pub holds: bool,
}

fn maximal_in(p: &PropertyDef, g: &Graph) -> Result<bool> {
    if !p.member(g) {
        return Ok(false);
    }
    for (a, b) in g.labelled().non_edges() {
        if p.member(&g.add_edge(a, b)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn in_max_star_of(p: &PropertyDef, g: &Graph) -> Result<bool> {
    Ok(g.order() > 0 && maximal_in(p, g)? && !p.member(&Graph::complete(1).join(g)?))
}

/// Checks the characterisation of maximal graphs of a product of hereditary
/// factors by their partitions, over all labelled partitions of `g`.
pub fn check_max_char(g: &Graph, props: &[PropertyDef], u: &Arc<Universe>) -> Result<MaxCharReport> {
    for p in props {
        certify_hereditary(p, u)?;
    }
    let product = PropertyDef::Product(props.to_vec());
    let in_product = product.member(g);
    let maximal = maximal_in(&product, g)?;
    let c = clique_bound(&product.materialize(u))?;
    let in_max_star = maximal && g.order() >= c;
    let parts = partition::enumerate_partitions(g, props, Mode::Labelled)?;
    let mut clause_partitions = 0;
    let mut star_ok = true;
    for cert in &parts {
        let mut all_max = true;
        for (h, p) in cert.induced.iter().zip(props) {
            all_max &= maximal_in(p, h)?;
            if in_max_star {
                star_ok &= in_max_star_of(p, h)?;
            }
        }
        let masks: Vec<VertexSet> = cert.parts.iter().map(|vs| VertexSet::from_vertices(vs.iter().copied())).collect();
        let is_join = masks.iter().enumerate().all(|(i, a)| {
            masks[i + 1..].iter().all(|b| a.iter().all(|x| b.iter().all(|y| g.has_edge(x, y))))
        });
        if all_max && is_join {
            clause_partitions += 1;
        }
    }
    let characterised = in_product && clause_partitions == parts.len();
    Ok(MaxCharReport {
        graph: *g,
        in_product,
        maximal,
        in_max_star,
        partitions: parts.len(),
        clause_partitions,
        star_clause: in_max_star.then_some(star_ok),
        factors_at_most_dc: in_max_star.then(|| props.len() <= dc(g)),
        holds: characterised == maximal && (!in_max_star || (star_ok && props.len() <= dc(g))),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gen0Report {
    pub g: Graph,
    pub h: Graph,
    pub dc_g: usize,
    pub dc_h: usize,
    /// When the decomposability numbers agree: `matching[i]` is the ind-part
    /// of `h` containing ind-part `i` of `g` as an induced subgraph.
    pub matching: Option<Vec<usize>>,
    pub holds: bool,
}

/// Perfect matching in a bipartite graph given by `ok[i][j]` (Kuhn's algorithm).
fn perfect_matching(ok: &[Vec<bool>]) -> Option<Vec<usize>> {
    fn augment(i: usize, ok: &[Vec<bool>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for j in 0..ok[i].len() {
            if ok[i][j] && !seen[j] {
                seen[j] = true;
                if owner[j].map_or(true, |k| augment(k, ok, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let m = ok.len();
    let mut owner = vec![None; m];
    for i in 0..m {
        if !augment(i, ok, &mut vec![false; m], &mut owner) {
            return None;
        }
    }
    let mut result = vec![0; m];
    for (j, o) in owner.iter().enumerate() {
        result[o.expect("perfect")] = j;
    }
    Some(result)
}

/// For `g` in `M*(P)` and `h` in `P` with `g` a subgraph of `h`: `dc(h) <= dc(g)`,
/// and on equality the ind-parts match up under induced containment.
pub fn check_gen0(g: &Graph, h: &Graph, p: &PropertyView) -> Result<Gen0Report> {
    gen0_against(&m_star(p)?, g, h, p)
}

/// `check_gen0` over every pair with `g` in `M*` of order at most `max_g_order`
/// and `h` a member containing `g` as a subgraph.
pub fn check_gen0_pairs(p: &PropertyView, max_g_order: usize) -> Result<Vec<Gen0Report>> {
    let star = m_star(p)?;
    let mut out = Vec::new();
    for g in star.graphs.iter().filter(|g| g.order() <= max_g_order) {
        for h in p.members().filter(|h| h.contains_subgraph(g)) {
            out.push(gen0_against(&star, g, h, p)?);
        }
    }
    Ok(out)
}

fn gen0_against(star: &MaxStar, g: &Graph, h: &Graph, p: &PropertyView) -> Result<Gen0Report> {
    if !star.graphs.contains(g) {
        return Err(Error::Precondition(format!("{g} is not in M*")));
    }
    if !p.contains(h) {
        return Err(Error::Precondition(format!("{h} is not a member")));
    }
    if !h.contains_subgraph(g) {
        return Err(Error::Precondition(format!("{g} is not a subgraph of {h}")));
    }
    let (dg, dh) = (ind_parts(g)?, ind_parts(h)?);
    let matching = if dg.dc == dh.dc {
        let ok: Vec<Vec<bool>> = dg.parts.iter().map(|a| dh.parts.iter().map(|b| b.contains_induced(a)).collect()).collect();
        perfect_matching(&ok)
    } else {
        None
    };
    let holds = dh.dc <= dg.dc && (dh.dc != dg.dc || matching.is_some());
    Ok(Gen0Report { g: *g, h: *h, dc_g: dg.dc, dc_h: dh.dc, matching, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSummary {
    /// Aligned ind-parts of the chain graphs belonging to this factor.
    pub part_chain: Vec<Graph>,
    pub members: usize,
    pub bits: String,
    pub chain_closure_contained: bool,
    pub hereditary: bool,
    pub dc: Option<usize>,
    pub additive: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorisationReport {
    pub property: String,
    pub n: usize,
    pub clique_bound: usize,
    /// Upper bound for `dc(P)` certified inside the universe.
    pub dc: usize,
    pub start: Graph,
    pub chain: Vec<Graph>,
    /// Fewer than two chain graphs: nothing was aligned, the factors are unchecked.
    pub partial: bool,
    pub factors: Vec<FactorSummary>,
    #[serde(skip)]
    pub factor_views: Vec<PropertyView>,
    pub product_equality: Option<Equality>,
    pub additive_input: bool,
    pub holds: bool,
}

/// Longest subgraph-increasing chain through `graphs` starting at `start`
/// (ties go to the earliest graphs in universe order).
fn longest_chain(graphs: &[Graph], start: usize) -> Vec<usize> {
    let m = graphs.len();
    let mut best: Vec<(usize, Option<usize>)> = vec![(1, None); m];
    for i in (0..m).rev() {
        for j in i + 1..m {
            if graphs[j].order() + graphs[j].edge_count() > graphs[i].order() + graphs[i].edge_count()
                && graphs[j].contains_subgraph(&graphs[i])
                && best[j].0 + 1 > best[i].0
            {
                best[i] = (best[j].0 + 1, Some(j));
            }
        }
    }
    let mut chain = vec![start];
    while let Some(next) = best[*chain.last().expect("non-empty")].1 {
        chain.push(next);
    }
    chain
}

/// Factors a hereditary compositive property into `dc(P)` factors.
///
/// Starting from a `dc`-minimising `J` in `M*`, a longest subgraph chain of
/// maximal graphs is aligned ind-part by ind-part. Inside a finite universe
/// the chain stops at order `n`, so the generated closures are too small to
/// be the factors; factor `j` is instead the set of graphs `x` with
/// `x + R_j` in P, where `R_j` joins the other aligned parts of the last
/// chain graph. The report checks that each closure lies inside its factor
/// and that the product of the factors is P on the universe.
pub fn factorise_hereditary(p: &PropertyDef, u: &Arc<Universe>) -> Result<FactorisationReport> {
    certify_hereditary(p, u)?;
    let view = p.materialize(u);
    let comp = classes::is_hereditary_compositive_up_to(&view);
    if let Some((a, b)) = comp.missing {
        return Err(Error::NotCompositive(a.to_graph6(), b.to_graph6()));
    }
    let star = m_star(&view)?;
    let mut graphs = star.graphs.clone();
    graphs.sort_by_key(|g| (g.order() + g.edge_count(), *g));
    let d = graphs.iter().map(dc).min().ok_or(Error::EmptyMaxStar)?;
    let start = graphs.iter().position(|g| dc(g) == d).expect("minimum attained");
    let chain: Vec<Graph> = longest_chain(&graphs, start).into_iter().map(|i| graphs[i]).collect();

    // part_chains[j][i]: ind-part of chain[i] assigned to factor j
    let first = ind_parts(&chain[0])?;
    let mut part_chains: Vec<Vec<Graph>> = first.parts.iter().map(|&g| vec![g]).collect();
    let mut slot: Vec<usize> = (0..d).collect();
    for w in chain.windows(2) {
        let r = check_gen0(&w[0], &w[1], &view)?;
        let matching = match (r.holds, r.matching) {
            (true, Some(m)) => m,
            _ => return Err(Error::Invariant(format!("chain link {} -> {} does not align", w[0], w[1]))),
        };
        let next = ind_parts(&w[1])?;
        slot = slot.iter().map(|&s| matching[s]).collect();
        for j in 0..d {
            part_chains[j].push(next.parts[slot[j]]);
        }
    }
    let partial = chain.len() < 2;
    let last_parts: Vec<Graph> = part_chains.iter().map(|c| *c.last().expect("non-empty")).collect();

    let mut factor_views = Vec::with_capacity(d);
    let mut factors = Vec::with_capacity(d);
    for j in 0..d {
        let rest = last_parts
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != j)
            .try_fold(Graph::null(), |acc, (_, h)| acc.join(h))?;
        let fv = PropertyView::from_fn(u, |x| x.join(&rest).map(|y| p.member(&y)).unwrap_or(false));
        let closure = PropertyView::from_graphs(u, &part_chains[j])?.hereditary_closure_down();
        factors.push(FactorSummary {
            part_chain: part_chains[j].clone(),
            members: fv.count(),
            bits: fv.to_hex(),
            chain_closure_contained: closure.is_subset(&fv)?,
            hereditary: classes::is_hereditary_up_to(&fv).holds,
            dc: dc_property(&fv).ok(),
            additive: None,
        });
        factor_views.push(fv);
    }
    let additive_input = p.certificates().additive || classes::is_additive_up_to(&view).holds;
    if additive_input {
        for (f, v) in factors.iter_mut().zip(&factor_views) {
            f.additive = Some(classes::is_additive_up_to(v).holds);
        }
    }
    let product_equality = if partial {
        None
    } else {
        let vf: Vec<ViewFactor> =
            factor_views.iter().enumerate().map(|(j, v)| ViewFactor::new(format!("factor{j}"), v.clone())).collect();
        Some(Equality::of(&partition::product_view(&vf, u), &view)?)
    };
    let holds = !partial
        && product_equality.as_ref().is_some_and(|e| e.equal)
        && factors.iter().all(|f| f.chain_closure_contained && f.hereditary && f.dc == Some(1) && f.additive != Some(false));
    Ok(FactorisationReport {
        property: p.to_string(),
        n: u.n(),
        clique_bound: star.clique_bound,
        dc: d,
        start: chain[0],
        chain,
        partial,
        factors,
        factor_views,
        product_equality,
        additive_input,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperadditivityReport {
    pub dc_a: usize,
    pub dc_b: usize,
    pub dc_product: usize,
    /// `dc(P o Q) >= dc(P) + dc(Q)` on the truncated values.
    pub consistent: bool,
}

pub fn check_dc_superadditive(pa: &PropertyDef, pb: &PropertyDef, u: &Arc<Universe>) -> Result<SuperadditivityReport> {
    certify_hereditary(pa, u)?;
    certify_hereditary(pb, u)?;
    let dc_a = dc_property(&pa.materialize(u))?;
    let dc_b = dc_property(&pb.materialize(u))?;
    let dc_product = dc_property(&PropertyDef::Product(vec![pa.clone(), pb.clone()]).materialize(u))?;
    Ok(SuperadditivityReport { dc_a, dc_b, dc_product, consistent: dc_product >= dc_a + dc_b })
}
