//! Transposition monodromies, their graphs, Schreier transversals and the
//! Reidemeister–Schreier presentation of the point stabilizer.
//!
//! Permutations act on the right: the coset of `v` after reading `γ_k` is
//! `v · f(γ_k)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::vankampen::{tietze_simplify, LoggedMove, Presentation, TietzePolicy};

/// A map from the generators of a presentation to transpositions of `1..=degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonodromyMap {
    degree: usize,
    images: Vec<(usize, usize)>,
}

impl MonodromyMap {
    /// Checks that every image is a transposition of `1..=degree`.
    pub fn new(degree: usize, images: Vec<(usize, usize)>) -> Result<Self> {
        for &(a, b) in &images {
            if a == b || a == 0 || b == 0 || a > degree || b > degree {
                return Err(Error::NotTransposition(format!("({a} {b})")));
            }
        }
        Ok(MonodromyMap { degree, images: images.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect() })
    }

    /// Number of sheets.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Transposition of each generator.
    pub fn images(&self) -> &[(usize, usize)] {
        &self.images
    }

    /// The permutation of generator `k`, 1-based.
    pub fn permutation(&self, k: usize) -> Permutation {
        let (a, b) = self.images[k - 1];
        Permutation::transposition(self.degree, a, b).expect("validated")
    }

    /// Image of a word, read left to right.
    pub fn image(&self, w: &FreeWord) -> Permutation {
        w.letters()
            .iter()
            .fold(Permutation::identity(self.degree), |acc, &x| acc.then(&self.permutation(x.unsigned_abs() as usize)))
    }

    /// Fails with the first relator whose image is not the identity.
    pub fn check_kills(&self, p: &Presentation) -> Result<()> {
        if self.images.len() != p.rank() {
            return Err(Error::Invalid(format!(
                "monodromy has {} images for {} generators",
                self.images.len(),
                p.rank()
            )));
        }
        for r in p.relators() {
            if !self.image(r).is_identity() {
                return Err(Error::RelatorNotKilled(p.render(r)));
            }
        }
        Ok(())
    }

    /// The graph with one edge per generator.
    pub fn graph(&self) -> MonodromyGraph {
        MonodromyGraph { vertices: self.degree, edges: self.images.clone() }
    }
}

/// Vertices `1..=d`, edge `k` joining the points swapped by generator `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonodromyGraph {
    /// Number of vertices.
    pub vertices: usize,
    /// Edge endpoints, smaller first; edge `k` is `edges[k - 1]`.
    pub edges: Vec<(usize, usize)>,
}

impl MonodromyGraph {
    /// Vertex `v` moved along edge `k`, or `v` itself when `k` misses it.
    pub fn across(&self, v: usize, k: usize) -> usize {
        let (a, b) = self.edges[k - 1];
        if v == a {
            b
        } else if v == b {
            a
        } else {
            v
        }
    }

    /// Whether edge `k` has `v` as an endpoint.
    pub fn touches(&self, k: usize, v: usize) -> bool {
        let (a, b) = self.edges[k - 1];
        a == v || b == v
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![0usize; self.vertices + 1];
        let mut out = Vec::new();
        for s in 1..=self.vertices {
            if comp[s] != 0 {
                continue;
            }
            out.push(Vec::new());
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(v) = stack.pop() {
                out[id - 1].push(v);
                for k in 1..=self.edges.len() {
                    let w = self.across(v, k);
                    if comp[w] == 0 {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            out[id - 1].sort_unstable();
        }
        out
    }

    /// One component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Which edge a depth-first search takes first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SubtreePolicy {
    /// Highest edge index first.
    #[default]
    PreferHighest,
    /// Lowest edge index first.
    PreferLowest,
}

/// A maximal subtree with the chain from the basepoint to every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transversal {
    /// Basepoint vertex.
    pub basepoint: usize,
    /// Tree edges in discovery order.
    pub tree: Vec<usize>,
    /// `chains[v - 1]` lists the edges from the basepoint to `v`.
    pub chains: Vec<Vec<usize>>,
    /// `reps[v - 1]` is the word `γ_c` of that chain.
    pub reps: Vec<FreeWord>,
}

impl Transversal {
    /// Whether edge `k` belongs to the tree.
    pub fn in_tree(&self, k: usize) -> bool {
        self.tree.contains(&k)
    }
}

/// Depth-first maximal subtree from `basepoint` and its Schreier set.
pub fn schreier_transversal(g: &MonodromyGraph, policy: SubtreePolicy, basepoint: usize) -> Result<Transversal> {
    if basepoint == 0 || basepoint > g.vertices {
        return Err(Error::Invalid(format!("basepoint {basepoint} is not a vertex")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.edges.len();
    let mut chains: Vec<Option<Vec<usize>>> = vec![None; g.vertices];
    chains[basepoint - 1] = Some(Vec::new());
    let mut tree = Vec::new();
    let mut stack = vec![basepoint];
    while let Some(&v) = stack.last() {
        let order: Vec<usize> = match policy {
            SubtreePolicy::PreferHighest => (1..=n).rev().collect(),
            SubtreePolicy::PreferLowest => (1..=n).collect(),
        };
        let next = order.into_iter().find(|&k| g.touches(k, v) && chains[g.across(v, k) - 1].is_none());
        match next {
            Some(k) => {
                let w = g.across(v, k);
                let mut c = chains[v - 1].clone().expect("visited");
                c.push(k);
                chains[w - 1] = Some(c);
                tree.push(k);
                stack.push(w);
            }
            None => {
                stack.pop();
            }
        }
    }
    let chains: Vec<Vec<usize>> = chains.into_iter().map(|c| c.expect("connected")).collect();
    let reps = chains.iter().map(|c| FreeWord::from_trusted(n, c.iter().map(|&k| k as i32))).collect();
    Ok(Transversal { basepoint, tree, chains, reps })
}

/// `η_{v,k} = γ_v γ_k (γ_{v·k})⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchreierGenerator {
    /// Coset vertex.
    pub vertex: usize,
    /// Edge (source generator).
    pub edge: usize,
    /// The word in the source generators.
    pub word: FreeWord,
}

impl SchreierGenerator {
    /// Display name `η<v>,<k>`.
    pub fn name(&self) -> String {
        format!("η{},{}", self.vertex, self.edge)
    }

    /// True when the word is freely trivial.
    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// All `η` words, vertex-major.
pub fn rs_generators(t: &Transversal, g: &MonodromyGraph) -> Vec<SchreierGenerator> {
    let mut out = Vec::new();
    for v in 1..=g.vertices {
        for k in 1..=g.edges.len() {
            let w = g.across(v, k);
            let gk = FreeWord::from_trusted(g.edges.len(), [k as i32]);
            let word = t.reps[v - 1].mul(&gk).mul(&t.reps[w - 1].inverse());
            out.push(SchreierGenerator { vertex: v, edge: k, word });
        }
    }
    out
}

/// Output of the Reidemeister–Schreier rewriting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsResult {
    /// Graph of the monodromy.
    pub graph: MonodromyGraph,
    /// The transversal used.
    pub transversal: Transversal,
    /// Every `η`, identities included.
    pub etas: Vec<SchreierGenerator>,
    /// The subgroup presentation on the nontrivial `η`.
    pub presentation: Presentation,
}

impl RsResult {
    /// 1-based generator index of `η_{v,k}` in the subgroup presentation.
    pub fn index_of(&self, v: usize, k: usize) -> Option<usize> {
        self.presentation.index_of(&format!("η{v},{k}"))
    }
}

/// Presents the stabilizer of the basepoint.
pub fn rs_presentation(
    p: &Presentation,
    m: &MonodromyMap,
    policy: SubtreePolicy,
    basepoint: usize,
) -> Result<RsResult> {
    m.check_kills(p)?;
    let graph = m.graph();
    let transversal = schreier_transversal(&graph, policy, basepoint)?;
    let etas = rs_generators(&transversal, &graph);
    let live: Vec<&SchreierGenerator> = etas.iter().filter(|e| !e.is_identity()).collect();
    let rank = live.len();
    let slot = |v: usize, k: usize| live.iter().position(|e| e.vertex == v && e.edge == k).map(|i| i as i32 + 1);
    let mut rels = Vec::new();
    for r in p.relators() {
        for start in 1..=graph.vertices {
            let mut v = start;
            let mut letters = Vec::new();
            for &x in r.letters() {
                let k = x.unsigned_abs() as usize;
                if x > 0 {
                    if let Some(i) = slot(v, k) {
                        letters.push(i);
                    }
                    v = graph.across(v, k);
                } else {
                    v = graph.across(v, k);
                    if let Some(i) = slot(v, k) {
                        letters.push(-i);
                    }
                }
            }
            debug_assert_eq!(v, start);
            rels.push(FreeWord::from_trusted(rank, letters));
        }
    }
    let presentation = Presentation::new(live.iter().map(|e| e.name()).collect(), rels)?;
    Ok(RsResult { graph, transversal, etas, presentation })
}

/// Boundary loops added to the subgroup presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryQuotient {
    /// Names of the `η` killed outright, sorted.
    pub killed: Vec<String>,
    /// Products `η_{c,k} η_{c',k}` adjoined, rendered.
    pub products: Vec<String>,
    /// The quotient before simplification.
    pub raw: Presentation,
    /// The simplified quotient.
    pub simplified: Presentation,
    /// Simplification log.
    pub moves: Vec<LoggedMove>,
}

/// Kills the loops around the ramification and singular components.
///
/// For each vertex `c` with chain `γ_c`: the `η` of its last edge, the `η`
/// of every edge missing `c`, and for every non-tree edge `k` at `c` leading
/// to `c' ≠ c` the product `η_{c,k} η_{c',k}`. The trivial chain has no last
/// edge.
pub fn boundary_loop_quotient(rs: &RsResult) -> Result<BoundaryQuotient> {
    let g = &rs.graph;
    let t = &rs.transversal;
    let rank = rs.presentation.rank();
    let gen = |v: usize, k: usize| rs.index_of(v, k).map(|i| FreeWord::from_trusted(rank, [i as i32]));
    let mut killed = BTreeSet::new();
    let mut products = Vec::new();
    let mut raw = rs.presentation.clone();
    for c in 1..=g.vertices {
        let mut kill = Vec::new();
        if let Some(&last) = t.chains[c - 1].last() {
            kill.push(last);
        }
        kill.extend((1..=g.edges.len()).filter(|&k| !g.touches(k, c)));
        for k in kill {
            if let Some(w) = gen(c, k) {
                if killed.insert(format!("η{c},{k}")) {
                    raw = raw.with_relator(w);
                }
            }
        }
        for k in (1..=g.edges.len()).filter(|&k| !t.in_tree(k) && g.touches(k, c)) {
            let c2 = g.across(c, k);
            if c2 == c {
                continue;
            }
            let one = FreeWord::identity(rank);
            let w = gen(c, k).unwrap_or_else(|| one.clone()).mul(&gen(c2, k).unwrap_or(one));
            products.push(raw.render(&w));
            raw = raw.with_relator(w);
        }
    }
    let (simplified, moves) = tietze_simplify(&raw, TietzePolicy::default());
    Ok(BoundaryQuotient { killed: killed.into_iter().collect(), products, raw, simplified, moves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn cayley_map() -> MonodromyMap {
        MonodromyMap::new(3, vec![(2, 3), (1, 3), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_non_transpositions() {
        assert!(MonodromyMap::new(3, vec![(1, 1)]).is_err());
        assert!(MonodromyMap::new(3, vec![(1, 4)]).is_err());
    }

    #[test]
    fn triangle_graph() {
        let g = cayley_map().graph();
        assert_eq!(g.edges, vec![(2, 3), (1, 3), (1, 2)]);
        assert!(g.is_connected());
    }

    #[test]
    fn disconnected_graph() {
        let m = MonodromyMap::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert_eq!(m.graph().components(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(schreier_transversal(&m.graph(), SubtreePolicy::default(), 1), Err(Error::Disconnected));
    }

    #[test]
    fn triangle_transversal() {
        let t = schreier_transversal(&cayley_map().graph(), SubtreePolicy::PreferHighest, 1).unwrap();
        assert_eq!(t.tree, vec![3, 1]);
        let r: Vec<Vec<i32>> = t.reps.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(r, vec![vec![], vec![3], vec![3, 1]]);
    }

    #[test]
    fn single_edge() {
        let m = MonodromyMap::new(2, vec![(1, 2)]).unwrap();
        let t = schreier_transversal(&m.graph(), SubtreePolicy::default(), 1).unwrap();
        assert_eq!(t.reps[1].letters(), &[1]);
        let etas = rs_generators(&t, &m.graph());
        assert_eq!(etas.iter().filter(|e| !e.is_identity()).count(), 1);
    }

    #[test]
    fn etas_fix_the_basepoint() {
        let m = cayley_map();
        let g = m.graph();
        let t = schreier_transversal(&g, SubtreePolicy::default(), 1).unwrap();
        let etas = rs_generators(&t, &g);
        assert_eq!(etas.len(), 9);
        assert_eq!(etas.iter().filter(|e| !e.is_identity()).count(), 7);
        for e in &etas {
            assert_eq!(m.image(&e.word).image(1), 1, "{}", e.name());
        }
    }

    #[test]
    fn unkilled_relator_is_reported() {
        let p = Presentation::new(
            vec!["a".to_string(), "b".to_string(), "c".to_string()],
            vec![FreeWord::new(3, &[1]).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            rs_presentation(&p, &cayley_map(), SubtreePolicy::default(), 1),
            Err(Error::RelatorNotKilled(_))
        ));
    }
}
