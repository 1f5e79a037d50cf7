//! Simple undirected graphs plus the structured families the rest of the
//! crate cares about: complete bipartite graphs, the circulant family
//! Γ₁, Γ₂, …, and blowups of a labelled base graph.

use crate::{Error, Result};

/// Simple undirected graph on vertices `0..n`, dense adjacency matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::OutOfRange(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at {u}")));
        }
        if !self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
            self.m += 1;
        }
        Ok(())
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter(|(_, &a)| a).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u * self.n + v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy of the graph with vertex `v` removed; remaining vertices are
    /// renumbered to stay dense.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut g = Graph::new(self.n - 1);
        for (a, &ua) in keep.iter().enumerate() {
            for (b, &ub) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(ua, ub) {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        g
    }

    /// Copy of the graph with its vertices renamed by `perm` (vertex `v`
    /// becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }
}

/// Graph whose vertex order is meaningful: vertex `j` (zero-indexed) plays
/// the role of the j+1st labelled vertex when the graph is used as a blowup
/// base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledGraph {
    graph: Graph,
}

impl LabeledGraph {
    pub fn new(graph: Graph) -> Self {
        LabeledGraph { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of labelled vertices (parts when used as a blowup base).
    pub fn p(&self) -> usize {
        self.graph.n()
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// A base graph together with one part size per labelled vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlowupSpec {
    pub base: LabeledGraph,
    pub sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(base: LabeledGraph, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != base.p() {
            return Err(Error::InvalidArgument(format!(
                "{} part sizes for a base with {} vertices",
                sizes.len(),
                base.p()
            )));
        }
        Ok(BlowupSpec { base, sizes })
    }

    pub fn total_n(&self) -> usize {
        self.sizes.iter().sum()
    }
}

pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "complete bipartite parts must be nonempty".into(),
        ));
    }
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// The balanced complete bipartite graph on n vertices, parts ⌊n/2⌋ and ⌈n/2⌉.
pub fn make_balanced_bipartite(n: usize) -> Result<Graph> {
    make_complete_bipartite(n / 2, n - n / 2)
}

/// Γᵢ: 3i−1 vertices, vertex j adjacent to j+i, …, j+2i−1 (mod 3i−1).
///
/// Γ₁ is a single edge and Γ₂ is a 5-cycle, but note the labelling of Γ₂ is
/// not the pentagon order: vertex 0 is adjacent to vertices 2 and 3, and the
/// cycle visits the labels in the order 0, 2, 4, 1, 3.  Part sizes of
/// non-uniform blowups are interpreted in label order, so this matters.
pub fn make_gamma(i: usize) -> Result<LabeledGraph> {
    if i < 1 {
        return Err(Error::InvalidArgument("gamma index must be positive".into()));
    }
    let p = 3 * i - 1;
    let mut g = Graph::new(p);
    for j in 0..p {
        for d in i..2 * i {
            g.add_edge(j, (j + d) % p)?;
        }
    }
    Ok(LabeledGraph::new(g))
}

pub fn make_blowup(spec: &BlowupSpec) -> Graph {
    let p = spec.base.p();
    let mut start = vec![0usize; p + 1];
    for j in 0..p {
        start[j + 1] = start[j] + spec.sizes[j];
    }
    let mut g = Graph::new(start[p]);
    for a in 0..p {
        for b in (a + 1)..p {
            if spec.base.graph().has_edge(a, b) {
                for u in start[a]..start[a + 1] {
                    for v in start[b]..start[b + 1] {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
        }
    }
    g
}

/// Length of the shortest cycle, or `None` for acyclic graphs.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y && dist[y] >= dist[x] {
                    // Non-tree edge closing a cycle through the root's BFS
                    // tree; over all roots the minimum is the girth.
                    let len = dist[x] + dist[y] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

pub fn is_triangle_free(g: &Graph) -> bool {
    let n = g.n();
    for (u, v) in g.edges() {
        for w in 0..n {
            if g.has_edge(u, w) && g.has_edge(v, w) {
                return false;
            }
        }
    }
    true
}

/// (minimum degree, maximum degree, edge count).
pub fn degree_stats(g: &Graph) -> Result<(usize, usize, usize)> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("empty graph".into()));
    }
    let mut lo = usize::MAX;
    let mut hi = 0;
    for v in 0..g.n() {
        let d = g.degree(v);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    Ok((lo, hi, g.m()))
}

/// Connected with no cut vertex.  Requires n ≥ 3.
pub fn is_biconnected(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidArgument(
            "biconnectivity requires at least 3 vertices".into(),
        ));
    }
    // DFS computing discovery times and low links.
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        articulation: bool,
        root_children: usize,
    }
    fn dfs(s: &mut State, v: usize, parent: usize) {
        s.disc[v] = s.timer;
        s.low[v] = s.timer;
        s.timer += 1;
        let neigh: Vec<usize> = s.g.neighbors(v).collect();
        for w in neigh {
            if s.disc[w] == usize::MAX {
                if v == 0 {
                    s.root_children += 1;
                }
                dfs(s, w, v);
                s.low[v] = s.low[v].min(s.low[w]);
                if v != 0 && s.low[w] >= s.disc[v] {
                    s.articulation = true;
                }
            } else if w != parent {
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let mut s = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        articulation: false,
        root_children: 0,
    };
    dfs(&mut s, 0, usize::MAX);
    if s.timer < n {
        return Ok(false); // disconnected
    }
    Ok(!s.articulation && s.root_children <= 1)
}

/// True iff every non-edge would close a triangle when added.  The input
/// must itself be triangle-free.
pub fn is_maximal_triangle_free(g: &Graph) -> Result<bool> {
    if !is_triangle_free(g) {
        return Err(Error::InvalidArgument(
            "maximality check expects a triangle-free graph".into(),
        ));
    }
    let n = g.n();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            let common = (0..n).any(|w| g.has_edge(u, w) && g.has_edge(v, w));
            if !common {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn every_edge_in_4cycle(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        let mut found = false;
        'outer: for x in g.neighbors(v) {
            if x == u {
                continue;
            }
            for y in g.neighbors(u) {
                if y != v && y != x && g.has_edge(x, y) {
                    found = true;
                    break 'outer;
                }
            }
        }
        if !found {
            return false;
        }
    }
    true
}

/// Search for an edge-preserving map from `g` into `h`.
///
/// Backtracking over g's vertices in descending-degree order (ties broken by
/// index) with forward checking of the remaining candidate sets.  Exponential
/// in the worst case; intended for small targets.
pub fn find_homomorphism(g: &Graph, h: &LabeledGraph) -> Option<Vec<usize>> {
    let p = h.p();
    if p == 0 {
        return None;
    }
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0usize; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    // candidates[k] = bitmask over h's vertices still allowed for order[k]
    let full: u64 = if p >= 64 { u64::MAX } else { (1u64 << p) - 1 };
    let hadj: Vec<u64> = (0..p)
        .map(|a| h.graph().neighbors(a).fold(0u64, |m, b| m | 1 << b))
        .collect();
    let mut cand = vec![full; n];
    let mut image = vec![usize::MAX; n];

    fn rec(
        k: usize,
        order: &[usize],
        pos: &[usize],
        g: &Graph,
        hadj: &[u64],
        cand: &mut Vec<u64>,
        image: &mut Vec<usize>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        let mut avail = cand[k];
        while avail != 0 {
            let a = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            // Forward check: restrict candidates of later unassigned
            // neighbours of v to h-neighbours of a.
            let saved = cand.clone();
            let mut dead = false;
            for w in g.neighbors(v) {
                let kw = pos[w];
                if kw > k {
                    cand[kw] &= hadj[a];
                    if cand[kw] == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead {
                image[v] = a;
                if rec(k + 1, order, pos, g, hadj, cand, image) {
                    return true;
                }
                image[v] = usize::MAX;
            }
            *cand = saved;
        }
        false
    }

    if rec(0, &order, &pos, g, &hadj, &mut cand, &mut image) {
        Some(image)
    } else {
        None
    }
}

/// The Petersen graph, used as a fixture in girth and connectivity tests.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for j in 0..5 {
        g.add_edge(j, (j + 1) % 5).unwrap();
        g.add_edge(j, j + 5).unwrap();
        g.add_edge(j + 5, (j + 2) % 5 + 5).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_shapes() {
        let g = make_complete_bipartite(2, 3).unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(girth(&g), Some(4));
        let e = make_complete_bipartite(1, 1).unwrap();
        assert_eq!((e.n(), e.m()), (2, 1));
        assert_eq!(girth(&e), None);
        let h = make_complete_bipartite(5, 5).unwrap();
        assert_eq!((h.n(), h.m()), (10, 25));
        assert!((0..10).all(|v| h.degree(v) == 5));
        assert!(make_complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn gamma_family_basics() {
        let g1 = make_gamma(1).unwrap();
        assert_eq!((g1.p(), g1.graph().m()), (2, 1));
        let g2 = make_gamma(2).unwrap();
        assert_eq!((g2.p(), g2.graph().m()), (5, 5));
        // The labelling is not the pentagon order: 0 ~ {2, 3}.
        assert!(g2.graph().has_edge(0, 2) && g2.graph().has_edge(0, 3));
        assert!(!g2.graph().has_edge(0, 1));
        assert_eq!(girth(g2.graph()), Some(5));
        let g3 = make_gamma(3).unwrap();
        assert_eq!((g3.p(), g3.graph().m()), (8, 12));
        assert_eq!(girth(g3.graph()), Some(4));
        for i in 1..=9 {
            let gi = make_gamma(i).unwrap();
            let p = 3 * i - 1;
            assert!((0..p).all(|v| gi.graph().degree(v) == i));
            assert!(is_triangle_free(gi.graph()));
            // Vertex-transitive under rotation j -> j+1.
            let perm: Vec<usize> = (0..p).map(|j| (j + 1) % p).collect();
            assert_eq!(gi.graph().relabel(&perm).unwrap(), *gi.graph());
        }
    }

    #[test]
    fn blowup_counts() {
        let base = make_gamma(2).unwrap();
        let spec = BlowupSpec::new(base.clone(), vec![2; 5]).unwrap();
        let g = make_blowup(&spec);
        assert_eq!((g.n(), g.m()), (10, 20));
        assert!((0..10).all(|v| g.degree(v) == 4));

        let spec = BlowupSpec::new(base.clone(), vec![1, 3, 2, 2, 3]).unwrap();
        let g = make_blowup(&spec);
        assert_eq!(g.n(), 11);
        let (lo, hi, _) = degree_stats(&g).unwrap();
        assert!(lo >= 4 && hi <= 5);

        let spec = BlowupSpec::new(base.clone(), vec![1; 5]).unwrap();
        assert_eq!(make_blowup(&spec), *base.graph());
    }

    #[test]
    fn girth_and_triangle_checks() {
        let c5 = make_gamma(2).unwrap();
        assert_eq!(girth(c5.graph()), Some(5));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&p4), None);
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_triangle_free(&k3));
        assert!(is_triangle_free(&make_complete_bipartite(4, 4).unwrap()));
    }

    #[test]
    fn degree_stats_examples() {
        let g = make_complete_bipartite(5, 6).unwrap();
        assert_eq!(degree_stats(&g).unwrap(), (5, 6, 30));
        let g4 = make_gamma(4).unwrap();
        assert_eq!(degree_stats(g4.graph()).unwrap(), (4, 4, 22));
        assert!(degree_stats(&Graph::new(0)).is_err());
    }

    #[test]
    fn biconnectivity() {
        assert!(is_biconnected(make_gamma(2).unwrap().graph()).unwrap());
        // Two triangles sharing a vertex.
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(!is_biconnected(&bowtie).unwrap());
        assert!(is_biconnected(&Graph::new(2)).is_err());
        // Petersen minus a vertex plus a pendant: the attachment point cuts.
        let mut g = petersen().delete_vertex(9);
        let mut h = Graph::new(10);
        for (u, v) in g.edges() {
            h.add_edge(u, v).unwrap();
        }
        h.add_edge(0, 9).unwrap();
        g = h;
        assert!(!is_biconnected(&g).unwrap());
    }

    #[test]
    fn maximality_and_4cycles() {
        let k33 = make_complete_bipartite(3, 3).unwrap();
        assert!(is_maximal_triangle_free(&k33).unwrap());
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(!is_maximal_triangle_free(&c6).unwrap());
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_maximal_triangle_free(&k3).is_err());

        assert!(every_edge_in_4cycle(&make_complete_bipartite(2, 2).unwrap()));
        assert!(!every_edge_in_4cycle(make_gamma(2).unwrap().graph()));
        assert!(every_edge_in_4cycle(&make_balanced_bipartite(9).unwrap()));

        let base = make_gamma(2).unwrap();
        let spec = BlowupSpec::new(base, vec![1, 2, 2, 1, 3]).unwrap();
        assert!(is_maximal_triangle_free(&make_blowup(&spec)).unwrap());

        // Balanced bipartite graphs on n >= 4 are maximal with every edge on
        // a 4-cycle.
        for n in 4..=10 {
            let t = make_balanced_bipartite(n).unwrap();
            assert!(is_maximal_triangle_free(&t).unwrap());
            assert!(every_edge_in_4cycle(&t));
        }
    }

    #[test]
    fn homomorphisms() {
        let c5 = make_gamma(2).unwrap();
        let k2 = make_gamma(1).unwrap();
        assert!(find_homomorphism(c5.graph(), &k2).is_none());
        let k33 = make_complete_bipartite(3, 3).unwrap();
        assert!(find_homomorphism(&k33, &k2).is_some());

        let spec = BlowupSpec::new(c5.clone(), vec![2; 5]).unwrap();
        let blown = make_blowup(&spec);
        let map = find_homomorphism(&blown, &c5).unwrap();
        for (u, v) in blown.edges() {
            assert!(c5.graph().has_edge(map[u], map[v]));
        }

        // Γ_{i-1} maps into Γᵢ, and Γᵢ minus any vertex maps into Γ_{i-1}.
        for i in 2..=6 {
            let lo = make_gamma(i - 1).unwrap();
            let hi = make_gamma(i).unwrap();
            assert!(find_homomorphism(lo.graph(), &hi).is_some());
            for v in 0..hi.p() {
                let reduced = hi.graph().delete_vertex(v);
                assert!(find_homomorphism(&reduced, &lo).is_some());
            }
        }
    }

    #[test]
    fn petersen_fixture() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert_eq!(girth(&g), Some(5));
        let h = g.delete_vertex(9);
        assert_eq!(girth(&h), Some(5));
        // A 6-cycle in the remainder none of whose chords can be added
        // without closing a triangle.
        let cycle = [0, 1, 2, 3, 8, 5];
        for w in cycle.windows(2) {
            assert!(h.has_edge(w[0], w[1]));
        }
        assert!(h.has_edge(cycle[5], cycle[0]));
        for a in 0..6 {
            for b in (a + 2)..6 {
                if a == 0 && b == 5 {
                    continue;
                }
                let (u, v) = (cycle[a], cycle[b]);
                if h.has_edge(u, v) {
                    continue;
                }
                let closes = (0..h.n()).any(|w| h.has_edge(u, w) && h.has_edge(v, w));
                assert!(closes, "chord ({u},{v}) could be added");
            }
        }
    }
}
