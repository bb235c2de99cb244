//! Simple undirected graphs with dense integer vertex ids, plus the
//! edge-cut and neighborhood primitives the decomposition algorithms build on.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: malformed line: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex id {v} out of range (n = {n})")]
    IdOutOfRange { line: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoopEdge(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdgePair(usize, usize),
    #[error("vertex id {v} out of range (n = {n})")]
    OutOfRange { v: usize, n: usize },
    #[error("vertex sets must be disjoint (both contain {0})")]
    Overlap(usize),
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        VertexSet { members: Vec::new() }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet { members: vec![v] }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { members: (0..n).collect() }
    }

    pub fn from_mask(mut mask: u64) -> Self {
        let mut members = Vec::new();
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            members.push(v);
            mask &= mask - 1;
        }
        VertexSet { members }
    }

    pub fn mask(&self) -> u64 {
        let mut m = 0u64;
        for &v in &self.members {
            debug_assert!(v < 64);
            m |= 1 << v;
        }
        m
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.members.binary_search(&v) {
            self.members.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: usize) {
        if let Ok(pos) = self.members.binary_search(&v) {
            self.members.remove(pos);
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut m = self.members.clone();
        m.extend_from_slice(&other.members);
        VertexSet::new(m)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self.members.iter().copied().filter(|v| other.contains(*v)).collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self.members.iter().copied().filter(|v| !other.contains(*v)).collect(),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on vertices `0..n`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(edge_list.len());
        let mut seen = BTreeSet::new();
        for &(a, b) in edge_list {
            if a == b {
                return Err(GraphError::SelfLoopEdge(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if v >= n {
                return Err(GraphError::OutOfRange { v, n });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdgePair(u, v));
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Per-vertex neighborhood bitmasks; only valid for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency requires n <= 64");
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    /// Edges with one endpoint in `s1` and the other in `s2`.
    pub fn delta(&self, s1: &VertexSet, s2: &VertexSet) -> Result<Vec<(usize, usize)>, GraphError> {
        if let Some(v) = s1.iter().find(|v| s2.contains(*v)) {
            return Err(GraphError::Overlap(v));
        }
        Ok(self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| (s1.contains(u) && s2.contains(v)) || (s1.contains(v) && s2.contains(u)))
            .collect())
    }

    /// Induced subgraph on `s`; the returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(GraphError::OutOfRange { v, n: self.n });
        }
        let old_ids: Vec<usize> = s.members().to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let g = Graph::new(old_ids.len(), &edges).expect("induced edges are simple");
        Ok((g, old_ids))
    }

    /// Maximal connected vertex sets, sorted by minimum element.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let mut comps = vec![Vec::new(); count];
        for v in 0..self.n {
            comps[comp[v]].push(v);
        }
        comps.into_iter().map(VertexSet::new).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Serializes to the edge-list text format with a `p <n> <m>` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the edge-list text format: optional `p <n> <m>` header, one `u v`
/// pair per line, `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "p" {
            if declared_n.is_some() || !edges.is_empty() || fields.len() != 3 {
                return Err(GraphError::Malformed { line: line_no, text: raw.to_string() });
            }
            let n: usize = fields[1]
                .parse()
                .map_err(|_| GraphError::Malformed { line: line_no, text: raw.to_string() })?;
            // the m field is informational
            fields[2]
                .parse::<usize>()
                .map_err(|_| GraphError::Malformed { line: line_no, text: raw.to_string() })?;
            declared_n = Some(n);
            continue;
        }
        if fields.len() != 2 {
            return Err(GraphError::Malformed { line: line_no, text: raw.to_string() });
        }
        let u: usize = fields[0]
            .parse()
            .map_err(|_| GraphError::Malformed { line: line_no, text: raw.to_string() })?;
        let v: usize = fields[1]
            .parse()
            .map_err(|_| GraphError::Malformed { line: line_no, text: raw.to_string() })?;
        if u == v {
            return Err(GraphError::SelfLoop { line: line_no, v: u });
        }
        if let Some(n) = declared_n {
            let big = u.max(v);
            if big >= n {
                return Err(GraphError::IdOutOfRange { line: line_no, v: big, n });
            }
        }
        let (a, b) = (u.min(v), u.max(v));
        if !seen.insert((a, b)) {
            return Err(GraphError::DuplicateEdge { line: line_no, u: a, v: b });
        }
        edges.push((a, b));
        max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
    }
    let n = declared_n.unwrap_or(max_id.map_or(0, |m| m + 1));
    Graph::new(n, &edges)
}
