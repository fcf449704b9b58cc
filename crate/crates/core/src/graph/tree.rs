use serde::Serialize;

use super::{norm_edge, Edge, Graph};
use crate::error::{guard, Error, Result};
use crate::limits::Limits;

/// A rooted spanning tree of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpanningTree {
    root: usize,
    /// `parent[root] == root`.
    parent: Vec<usize>,
    depth: Vec<usize>,
    edges: Vec<Edge>,
}

impl SpanningTree {
    /// Validates `edges` as a spanning tree of `g` and roots it at `root`.
    pub fn from_edges(g: &Graph, edges: &[Edge], root: usize) -> Result<SpanningTree> {
        let n = g.n();
        if root >= n {
            return Err(Error::InvalidTree(format!("root {root} out of range for n = {n}")));
        }
        if edges.len() + 1 != n {
            return Err(Error::InvalidTree(format!(
                "{} edges given, a spanning tree on {n} vertices has {}",
                edges.len(),
                n - 1
            )));
        }
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidTree(format!("{{{u}, {v}}} is not an edge of the graph")));
            }
        }
        let tree = Graph::new(n, edges.iter().copied())
            .map_err(|e| Error::InvalidTree(e.to_string()))?;
        let (order, parents) = tree.bfs(root);
        if order.len() != n {
            let missing = (0..n).find(|v| *v != root && parents[*v].is_none()).unwrap_or(root);
            return Err(Error::InvalidTree(format!(
                "edges do not connect vertex {missing} to the root"
            )));
        }
        Ok(Self::from_parents(root, &order, &parents))
    }

    fn from_parents(root: usize, order: &[usize], parents: &[Option<usize>]) -> SpanningTree {
        let n = parents.len();
        let mut parent = vec![root; n];
        let mut depth = vec![0; n];
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        for &v in order {
            if let Some(p) = parents[v] {
                parent[v] = p;
                depth[v] = depth[p] + 1;
                edges.push(norm_edge(p, v));
            }
        }
        edges.sort_unstable();
        SpanningTree {
            root,
            parent,
            depth,
            edges,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Tree edges, sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&norm_edge(u, v)).is_ok()
    }

    /// Number of tree edges on the path between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.path(u, v).len() - 1
    }

    /// Vertices of the tree path from `u` to `v`, inclusive.
    pub fn path(&self, mut u: usize, mut v: usize) -> Vec<usize> {
        let mut front = Vec::new();
        let mut back = Vec::new();
        while self.depth[u] > self.depth[v] {
            front.push(u);
            u = self.parent[u];
        }
        while self.depth[v] > self.depth[u] {
            back.push(v);
            v = self.parent[v];
        }
        while u != v {
            front.push(u);
            back.push(v);
            u = self.parent[u];
            v = self.parent[v];
        }
        front.push(u);
        front.extend(back.into_iter().rev());
        front
    }

    /// Whether this is a spanning tree of `g` (same order, edges contained).
    pub fn spans(&self, g: &Graph) -> bool {
        self.n() == g.n() && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// BFS spanning tree, exploring neighbors in ascending label order.
pub fn bfs_spanning_tree(g: &Graph, root: usize) -> Result<SpanningTree> {
    if root >= g.n() {
        return Err(Error::InvalidTree(format!(
            "root {root} out of range for n = {}",
            g.n()
        )));
    }
    let (order, parents) = g.bfs(root);
    if order.len() != g.n() {
        let vertex = (0..g.n())
            .find(|&v| v != root && parents[v].is_none())
            .expect("some vertex unreached");
        return Err(Error::Disconnected { root, vertex });
    }
    Ok(SpanningTree::from_parents(root, &order, &parents))
}

/// All spanning trees of `g`, each rooted at vertex 0, in lexicographic order of
/// their sorted edge sets.
pub fn enumerate_spanning_trees(g: &Graph) -> Result<Vec<SpanningTree>> {
    enumerate_spanning_trees_with_limits(g, &Limits::default())
}

pub fn enumerate_spanning_trees_with_limits(g: &Graph, limits: &Limits) -> Result<Vec<SpanningTree>> {
    guard("n (spanning tree enumeration)", g.n(), limits.tree_enum_n)?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    bfs_spanning_tree(g, 0)?;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(g.n() - 1);
    include_exclude(g, 0, &mut chosen, &mut out);
    Ok(out)
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn components_joined(n: usize, edges: impl Iterator<Item = Edge>) -> usize {
    let mut uf: Vec<usize> = (0..n).collect();
    let mut comps = n;
    for (u, v) in edges {
        let (a, b) = (find(&mut uf, u), find(&mut uf, v));
        if a != b {
            uf[a] = b;
            comps -= 1;
        }
    }
    comps
}

fn include_exclude(g: &Graph, i: usize, chosen: &mut Vec<Edge>, out: &mut Vec<SpanningTree>) {
    let n = g.n();
    if chosen.len() + 1 == n {
        out.push(SpanningTree::from_edges(g, chosen, 0).expect("acyclic n-1 edges span"));
        return;
    }
    let edges = g.edges();
    if i == edges.len() {
        return;
    }
    let e = edges[i];
    // include when it joins two components of the current forest
    if components_joined(n, chosen.iter().copied()) > components_joined(n, chosen.iter().copied().chain([e])) {
        chosen.push(e);
        include_exclude(g, i + 1, chosen, out);
        chosen.pop();
    }
    // exclude when the rest can still connect everything
    if components_joined(n, chosen.iter().copied().chain(edges[i + 1..].iter().copied())) == 1 {
        include_exclude(g, i + 1, chosen, out);
    }
}

/// Splits vertices by parity of their tree distance to the root; the root is in the first set.
pub fn tree_parity_bipartition(t: &SpanningTree) -> (Vec<usize>, Vec<usize>) {
    (0..t.n()).partition(|&v| t.depth(v).is_multiple_of(2))
}

/// The cycle closed by the non-tree edge `e`, as the vertex sequence of the tree
/// path from one endpoint to the other (the cycle closes back through `e`).
pub fn fundamental_cycle(t: &SpanningTree, e: Edge) -> Result<Vec<usize>> {
    let (u, v) = norm_edge(e.0, e.1);
    if u == v || v >= t.n() {
        return Err(Error::InvalidGraph(format!("{{{u}, {v}}} is not a valid edge")));
    }
    if t.contains_edge(u, v) {
        return Err(Error::TreeEdge(u, v));
    }
    Ok(t.path(u, v))
}
