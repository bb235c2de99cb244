//! List coloring and precoloring extension over tree-cut decompositions,
//! using representative sets to keep per-node tables small.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::approx::{approx_ecrw, ApproxOutcome};
use crate::decomp::{metrics, validate_tcd, TreeCutDecomposition};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("invalid compatibility instance: {0}")]
    BadInstance(String),
    #[error("sets S and T overlap")]
    Overlap,
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("vertex {0} has a list larger than its degree; prune first")]
    UnprunedList(usize),
    #[error("precoloring is not proper")]
    ImproperPrecoloring,
    #[error("color {0} out of range [1, {1}]")]
    ColorOutOfRange(usize, usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("approximation failed: {0}")]
    Approx(String),
}

/// Per-vertex color lists, indexed by vertex id.
pub type ListAssignment = Vec<Vec<usize>>;

/// A partial coloring on an explicit vertex domain.
pub type Coloring = BTreeMap<usize, usize>;

/// Instance of the vector representative-set problem: vectors of length `q`,
/// compared against length-`t` vectors through the constraint pairs `b`.
#[derive(Debug, Clone)]
pub struct CompatInstance {
    pub q: usize,
    pub t: usize,
    /// Pairs (i, j) with i < q, j < t; V is compatible with W iff V[i] != W[j]
    /// for every listed pair.
    pub b: Vec<(usize, usize)>,
    pub p: Vec<Vec<usize>>,
}

impl CompatInstance {
    pub fn validate(&self) -> Result<(), ColoringError> {
        if self.q == 0 || self.t == 0 {
            return Err(ColoringError::BadInstance("q and t must be positive".into()));
        }
        for &(i, j) in &self.b {
            if i >= self.q || j >= self.t {
                return Err(ColoringError::BadInstance(format!("pair ({i},{j}) out of range")));
            }
        }
        for v in &self.p {
            if v.len() != self.q {
                return Err(ColoringError::BadInstance("vector of wrong length".into()));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for v in &self.p {
            if !seen.insert(v.clone()) {
                return Err(ColoringError::BadInstance("duplicate vector".into()));
            }
        }
        Ok(())
    }
}

fn sat_mul(a: u128, b: u128) -> u128 {
    a.saturating_mul(b)
}

/// q! · 2^(q(q+1)/2) · t^(q−1) · (t+1), saturating.
pub fn vector_bound(q: usize, t: usize) -> usize {
    if q == 0 {
        return 1;
    }
    let mut out: u128 = 1;
    for i in 1..=q {
        out = sat_mul(out, i as u128);
    }
    for _ in 0..(q * (q + 1) / 2).min(127) {
        out = sat_mul(out, 2);
    }
    for _ in 0..q - 1 {
        out = sat_mul(out, t as u128);
    }
    out = sat_mul(out, t as u128 + 1);
    out.min(usize::MAX as u128) as usize
}

/// ζ = max{(α+w+1)!·2^((α+w)(α+w+1)/2)·(α+w)^(α+w−1), (w+2α−1)^α}, saturating.
pub fn zeta(alpha: usize, w: usize) -> usize {
    let s = alpha + w;
    let mut first: u128 = 1;
    for i in 1..=s + 1 {
        first = sat_mul(first, i as u128);
    }
    for _ in 0..(s * (s + 1) / 2).min(127) {
        first = sat_mul(first, 2);
    }
    for _ in 0..s.saturating_sub(1) {
        first = sat_mul(first, s as u128);
    }
    let mut second: u128 = 1;
    for _ in 0..alpha {
        second = sat_mul(second, (w + 2 * alpha).saturating_sub(1) as u128);
    }
    first.max(second).min(usize::MAX as u128) as u128 as usize
}

/// Reduce `inst.p` to a representative subset: for every length-t vector W,
/// if some vector of P is compatible with W then so is some kept vector.
pub fn reduce_vectors(inst: &CompatInstance) -> Result<Vec<Vec<usize>>, ColoringError> {
    inst.validate()?;
    if inst.p.is_empty() {
        return Ok(Vec::new());
    }
    if inst.b.is_empty() {
        // every pair is vacuously compatible
        return Ok(vec![inst.p[0].clone()]);
    }
    let coords: Vec<usize> = (0..inst.q).collect();
    let kept = reduce_rec(&inst.p, &coords, inst.t);
    debug_assert!(kept.len() <= vector_bound(inst.q, inst.t));
    Ok(kept)
}

/// Recursive reduction restricted to the active coordinates.
fn reduce_rec(p: &[Vec<usize>], coords: &[usize], t: usize) -> Vec<Vec<usize>> {
    // keep one vector per distinct projection
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for v in p {
        let proj: Vec<usize> = coords.iter().map(|&i| v[i]).collect();
        if seen.insert(proj) {
            reps.push(v.clone());
        }
    }
    let q = coords.len();
    if q == 0 {
        return vec![reps[0].clone()];
    }
    if q == 1 {
        reps.truncate(t + 1);
        return reps;
    }
    // greedy maximal set of vectors pairwise differing in every active coordinate
    let cap = q * t + 1;
    let mut basis: Vec<Vec<usize>> = Vec::new();
    let mut rest: Vec<Vec<usize>> = Vec::new();
    for v in &reps {
        if basis.len() < cap
            && basis.iter().all(|b| coords.iter().all(|&i| b[i] != v[i]))
        {
            basis.push(v.clone());
        } else {
            rest.push(v.clone());
        }
    }
    if basis.len() == cap {
        return basis;
    }
    // every leftover agrees with some basis vector on a nonempty coordinate set
    let mut out_set = std::collections::BTreeSet::new();
    let mut out = basis.clone();
    for v in &out {
        out_set.insert(v.clone());
    }
    for b in &basis {
        let mut classes: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
        for z in &rest {
            let agree: Vec<usize> =
                coords.iter().copied().filter(|&i| b[i] == z[i]).collect();
            if !agree.is_empty() {
                classes.entry(agree).or_default().push(z.clone());
            }
        }
        for (agree, class) in classes {
            let sub: Vec<usize> =
                coords.iter().copied().filter(|i| !agree.contains(i)).collect();
            for v in reduce_rec(&class, &sub, t) {
                if out_set.insert(v.clone()) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Reduce a family of proper colorings of G[S] so that compatibility with any
/// proper coloring of G[T] is preserved; only boundary values matter.
pub fn reduce_colorings(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    f: &[Coloring],
) -> Result<Vec<Coloring>, ColoringError> {
    if !s.is_disjoint(t) {
        return Err(ColoringError::Overlap);
    }
    if f.is_empty() {
        return Ok(Vec::new());
    }
    let crossing = g.delta(s, t).map_err(|e| ColoringError::BadInput(e.to_string()))?;
    let mut bd_s: Vec<usize> = Vec::new();
    let mut bd_t: Vec<usize> = Vec::new();
    for &(u, v) in &crossing {
        let (sv, tv) = if s.contains(u) { (u, v) } else { (v, u) };
        if !bd_s.contains(&sv) {
            bd_s.push(sv);
        }
        if !bd_t.contains(&tv) {
            bd_t.push(tv);
        }
    }
    bd_s.sort_unstable();
    bd_t.sort_unstable();
    if bd_s.is_empty() {
        // no S–T edges: any single coloring is compatible with everything
        return Ok(vec![f[0].clone()]);
    }
    let b: Vec<(usize, usize)> = crossing
        .iter()
        .map(|&(u, v)| {
            let (sv, tv) = if s.contains(u) { (u, v) } else { (v, u) };
            (
                bd_s.iter().position(|&x| x == sv).unwrap(),
                bd_t.iter().position(|&x| x == tv).unwrap(),
            )
        })
        .collect();
    // one representative coloring per boundary vector
    let mut vec_to_coloring: BTreeMap<Vec<usize>, Coloring> = BTreeMap::new();
    for c in f {
        let key: Vec<usize> = bd_s.iter().map(|v| c[v]).collect();
        vec_to_coloring.entry(key).or_insert_with(|| c.clone());
    }
    let inst = CompatInstance {
        q: bd_s.len(),
        t: bd_t.len(),
        b,
        p: vec_to_coloring.keys().cloned().collect(),
    };
    let kept = reduce_vectors(&inst)?;
    let out: Vec<Coloring> = kept.iter().map(|k| vec_to_coloring[k].clone()).collect();
    debug_assert!(out.len() <= vector_bound(bd_s.len(), bd_t.len()));
    Ok(out)
}

/// Result of stripping vertices whose list is larger than their degree.
#[derive(Debug)]
pub struct PrunedInstance {
    pub graph: Graph,
    pub lists: ListAssignment,
    /// New-id → old-id for the surviving vertices.
    pub old_ids: Vec<usize>,
    /// Eliminated vertices (old ids) with their then-alive neighbors, in
    /// elimination order; pop in reverse to extend a coloring greedily.
    pub stack: Vec<(usize, Vec<usize>)>,
}

pub fn prune_large_lists(g: &Graph, lists: &ListAssignment) -> PrunedInstance {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        neighbors[u].push(v);
        neighbors[v].push(u);
    }
    let mut stack = Vec::new();
    loop {
        let mut removed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let live: Vec<usize> =
                neighbors[v].iter().copied().filter(|&u| alive[u]).collect();
            if lists[v].len() > live.len() {
                alive[v] = false;
                stack.push((v, live));
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    let keep: VertexSet = (0..n).filter(|&v| alive[v]).collect();
    let (graph, old_ids) = g.induced_subgraph(&keep).expect("subset of vertices");
    let reduced: ListAssignment = old_ids.iter().map(|&v| lists[v].clone()).collect();
    PrunedInstance { graph, lists: reduced, old_ids, stack }
}

/// Extend a coloring of the pruned graph back over the elimination stack.
pub fn extend_pruned(
    pruned: &PrunedInstance,
    lists: &ListAssignment,
    reduced_coloring: &[usize],
) -> Coloring {
    let mut out: Coloring = pruned
        .old_ids
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, reduced_coloring[new]))
        .collect();
    for (v, nbrs) in pruned.stack.iter().rev() {
        let used: Vec<usize> = nbrs.iter().filter_map(|u| out.get(u).copied()).collect();
        let c = lists[*v]
            .iter()
            .copied()
            .find(|c| !used.contains(c))
            .expect("list exceeded degree at elimination time");
        out.insert(*v, c);
    }
    out
}

/// Backtracking oracle over a degeneracy order.
pub fn brute_list_coloring(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<Option<Vec<usize>>, ColoringError> {
    let n = g.vertex_count();
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(None);
    }
    let mut product: u64 = 1;
    for l in lists {
        product = product.saturating_mul(l.len() as u64);
        if product > 10_000_000 {
            return Err(ColoringError::TooLarge(format!(
                "list product exceeds 10^7 on {n} vertices"
            )));
        }
    }
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        neighbors[u].push(v);
        neighbors[v].push(u);
    }
    // degeneracy order: repeatedly remove a min-degree vertex
    let mut deg: Vec<usize> = neighbors.iter().map(|x| x.len()).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .unwrap();
        removed[v] = true;
        order.push(v);
        for &u in &neighbors[v] {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order.reverse();
    let mut color = vec![usize::MAX; n];
    fn go(
        pos: usize,
        order: &[usize],
        neighbors: &[Vec<usize>],
        lists: &ListAssignment,
        color: &mut Vec<usize>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for &c in &lists[v] {
            if neighbors[v].iter().all(|&u| color[u] != c) {
                color[v] = c;
                if go(pos + 1, order, neighbors, lists, color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    if go(0, &order, &neighbors, lists, &mut color) {
        Ok(Some(color))
    } else {
        Ok(None)
    }
}

struct Entry {
    /// Coloring of the extended boundary ∂̂(t).
    boundary: Coloring,
    /// A full proper list coloring of G_t restricting to `boundary`.
    witness: Coloring,
}

fn colors_compatible(edges: &[(usize, usize)], a: &Coloring, b: &Coloring) -> bool {
    for &(u, v) in edges {
        if let (Some(x), Some(y)) = (a.get(&u), b.get(&v)) {
            if x == y {
                return false;
            }
        }
        if let (Some(x), Some(y)) = (a.get(&v), b.get(&u)) {
            if x == y {
                return false;
            }
        }
    }
    true
}

/// All proper list colorings of the vertices in `bag`.
fn enumerate_bag_colorings(
    bag: &[usize],
    lists: &ListAssignment,
    neighbors: &[Vec<usize>],
) -> Vec<Coloring> {
    let mut out = Vec::new();
    let mut cur: Coloring = BTreeMap::new();
    fn go(
        pos: usize,
        bag: &[usize],
        lists: &ListAssignment,
        neighbors: &[Vec<usize>],
        cur: &mut Coloring,
        out: &mut Vec<Coloring>,
    ) {
        if pos == bag.len() {
            out.push(cur.clone());
            return;
        }
        let v = bag[pos];
        for &c in &lists[v] {
            if neighbors[v].iter().all(|u| cur.get(u) != Some(&c)) {
                cur.insert(v, c);
                go(pos + 1, bag, lists, neighbors, cur, out);
                cur.remove(&v);
            }
        }
    }
    go(0, bag, lists, neighbors, &mut cur, &mut out);
    out
}

/// Bottom-up list-coloring DP over a rooted tree-cut decomposition.
///
/// Expects pruned lists (every list no larger than the vertex degree) and a
/// root node with a non-empty bag.
pub fn solve_list_coloring(
    g: &Graph,
    lists: &ListAssignment,
    d: &TreeCutDecomposition,
) -> Result<Option<Vec<usize>>, ColoringError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if lists.len() != n {
        return Err(ColoringError::BadInput("one list per vertex required".into()));
    }
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(None);
    }
    let report = validate_tcd(g, d);
    if !report.ok {
        return Err(ColoringError::InvalidDecomposition(format!("{:?}", report.violations)));
    }
    let root = d
        .root()
        .ok_or_else(|| ColoringError::InvalidDecomposition("decomposition must be rooted".into()))?;
    if d.bag(root).len() == 0 {
        return Err(ColoringError::InvalidDecomposition("root bag must be non-empty".into()));
    }
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        neighbors[u].push(v);
        neighbors[v].push(u);
    }
    for v in 0..n {
        if lists[v].len() > neighbors[v].len() {
            return Err(ColoringError::UnprunedList(v));
        }
    }
    let (alpha, w, _) = metrics(g, d);
    let zeta_bound = zeta(alpha, w);
    let (children, _) = d.rooted(root);

    // subtree vertex sets, bottom-up
    let m = d.node_count();
    let mut order = Vec::with_capacity(m);
    let mut stack = vec![root];
    while let Some(t) = stack.pop() {
        order.push(t);
        stack.extend(children[t].iter().copied());
    }
    order.reverse();
    let mut subtree: Vec<Vec<bool>> = vec![vec![false; n]; m];
    for &t in &order {
        let mut s = vec![false; n];
        for v in d.bag(t).iter() {
            s[v] = true;
        }
        for &c in &children[t] {
            for v in 0..n {
                s[v] |= subtree[c][v];
            }
        }
        subtree[t] = s;
    }
    // extended boundary ∂̂(t): bag plus subtree vertices with an edge leaving
    let boundary_of = |t: usize| -> Vec<usize> {
        let mut b: Vec<usize> = d.bag(t).members().to_vec();
        let mut cross_edges = 0usize;
        for &(u, v) in g.edges() {
            if subtree[t][u] != subtree[t][v] {
                cross_edges += 1;
                let inside = if subtree[t][u] { u } else { v };
                if !b.contains(&inside) {
                    b.push(inside);
                }
            }
        }
        assert!(cross_edges <= alpha * alpha + 2 * w, "|E(∂(t))| bound");
        b.sort_unstable();
        assert!(b.len() <= alpha + w, "|∂̂(t)| bound");
        b
    };

    let edges = g.edges();
    let mut tables: Vec<Vec<Entry>> = (0..m).map(|_| Vec::new()).collect();
    for &t in &order {
        let bag: Vec<usize> = d.bag(t).members().to_vec();
        let hat = boundary_of(t);
        let entries: Vec<Entry> = if children[t].is_empty() && t != root {
            enumerate_bag_colorings(&bag, lists, &neighbors)
                .into_iter()
                .map(|c| Entry { boundary: c.clone(), witness: c })
                .collect()
        } else {
            // split children by where their crossing edges land
            let mut a1 = Vec::new();
            let mut a2 = Vec::new();
            for &x in &children[t] {
                let outside_in_bag = edges.iter().all(|&(u, v)| {
                    if subtree[x][u] == subtree[x][v] {
                        return true;
                    }
                    let out = if subtree[x][u] { v } else { u };
                    d.bag(t).contains(out)
                });
                if outside_in_bag {
                    a1.push(x);
                } else {
                    a2.push(x);
                }
            }
            assert!(a2.len() <= 2 * w, "|A_2| bound");
            let bag_colorings = enumerate_bag_colorings(&bag, lists, &neighbors);
            // Step 1: keep bag colorings that every boundary-light child can match
            let c_prime: Vec<Coloring> = bag_colorings
                .into_iter()
                .filter(|f| {
                    a1.iter().all(|&x| {
                        tables[x].iter().any(|e| colors_compatible(edges, &e.boundary, f))
                    })
                })
                .collect();
            // Step 2: pairwise-compatible tuples over the remaining children
            let mut tuples: Vec<Vec<usize>> = Vec::new();
            let mut cur: Vec<usize> = Vec::new();
            fn pick(
                pos: usize,
                a2: &[usize],
                tables: &[Vec<Entry>],
                edges: &[(usize, usize)],
                cur: &mut Vec<usize>,
                tuples: &mut Vec<Vec<usize>>,
            ) {
                if pos == a2.len() {
                    tuples.push(cur.clone());
                    return;
                }
                for (i, e) in tables[a2[pos]].iter().enumerate() {
                    if cur.iter().enumerate().all(|(j, &idx)| {
                        colors_compatible(edges, &tables[a2[j]][idx].boundary, &e.boundary)
                    }) {
                        cur.push(i);
                        pick(pos + 1, a2, tables, edges, cur, tuples);
                        cur.pop();
                    }
                }
            }
            pick(0, &a2, &tables, edges, &mut cur, &mut tuples);
            // Step 3: combine tuples with surviving bag colorings
            let mut raw: BTreeMap<Coloring, (usize, usize)> = BTreeMap::new();
            for (ui, tuple) in tuples.iter().enumerate() {
                for (fi, f) in c_prime.iter().enumerate() {
                    let ok = tuple.iter().enumerate().all(|(j, &idx)| {
                        colors_compatible(edges, &tables[a2[j]][idx].boundary, f)
                    });
                    if !ok {
                        continue;
                    }
                    let mut gprime: Coloring = f.clone();
                    for &v in &hat {
                        if gprime.contains_key(&v) {
                            continue;
                        }
                        let (j, idx) = tuple
                            .iter()
                            .enumerate()
                            .find(|&(j, &idx)| tables[a2[j]][idx].boundary.contains_key(&v))
                            .map(|(j, &idx)| (j, idx))
                            .expect("boundary vertex lies in some heavy child");
                        gprime.insert(v, tables[a2[j]][idx].boundary[&v]);
                    }
                    raw.entry(gprime).or_insert((ui, fi));
                }
            }
            let outside: VertexSet = (0..n).filter(|&v| !subtree[t][v]).collect();
            let hat_set: VertexSet = hat.iter().copied().collect();
            let boundaries: Vec<Coloring> = raw.keys().cloned().collect();
            let kept = reduce_colorings(g, &hat_set, &outside, &boundaries)?;
            kept.into_iter()
                .map(|boundary| {
                    let (ui, fi) = raw[&boundary];
                    let mut witness: Coloring = c_prime[fi].clone();
                    for (j, &idx) in tuples[ui].iter().enumerate() {
                        for (&v, &c) in &tables[a2[j]][idx].witness {
                            witness.insert(v, c);
                        }
                    }
                    for &x in &a1 {
                        let e = tables[x]
                            .iter()
                            .find(|e| colors_compatible(edges, &e.boundary, &c_prime[fi]))
                            .expect("survived the Step-1 filter");
                        for (&v, &c) in &e.witness {
                            witness.insert(v, c);
                        }
                    }
                    debug_assert!(edges.iter().all(|&(u, v)| {
                        match (witness.get(&u), witness.get(&v)) {
                            (Some(a), Some(b)) => a != b,
                            _ => true,
                        }
                    }));
                    Entry { boundary, witness }
                })
                .collect()
        };
        assert!(entries.len() <= zeta_bound, "|Q*[t]| bound");
        tables[t] = entries;
    }
    match tables[root].first() {
        Some(e) => {
            let mut out = vec![usize::MAX; n];
            for (&v, &c) in &e.witness {
                out[v] = c;
            }
            // final independent verification
            assert!(out.iter().enumerate().all(|(v, &c)| lists[v].contains(&c)));
            assert!(edges.iter().all(|&(u, v)| out[u] != out[v]));
            Ok(Some(out))
        }
        None => Ok(None),
    }
}

/// Full pipeline: prune oversized lists, split into components, build a
/// decomposition per component by doubling the crossing budget, solve, and
/// reassemble.
pub fn list_coloring_pipeline(
    g: &Graph,
    lists: &ListAssignment,
    alpha: usize,
) -> Result<Option<Vec<usize>>, ColoringError> {
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(ColoringError::BadInput("one list per vertex required".into()));
    }
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(None);
    }
    let pruned = prune_large_lists(g, lists);
    let gr = &pruned.graph;
    let mut reduced = vec![usize::MAX; gr.vertex_count()];
    for comp in gr.connected_components() {
        let (gc, old) = gr.induced_subgraph(&comp).expect("component");
        let lc: ListAssignment = old.iter().map(|&v| pruned.lists[v].clone()).collect();
        let d = decompose_with_doubling(&gc, alpha)?;
        match solve_list_coloring(&gc, &lc, &d)? {
            Some(c) => {
                for (i, &v) in old.iter().enumerate() {
                    reduced[v] = c[i];
                }
            }
            None => return Ok(None),
        }
    }
    let full = extend_pruned(&pruned, lists, &reduced);
    let mut out = vec![usize::MAX; n];
    for (&v, &c) in &full {
        out[v] = c;
    }
    assert!(out.iter().enumerate().all(|(v, &c)| lists[v].contains(&c)));
    assert!(g.edges().iter().all(|&(u, v)| out[u] != out[v]));
    Ok(Some(out))
}

/// Thickness-α decomposition via the approximation routine, doubling the
/// crossing budget until it succeeds; rooted at a node with a non-empty bag.
fn decompose_with_doubling(
    g: &Graph,
    alpha: usize,
) -> Result<TreeCutDecomposition, ColoringError> {
    let mut k = 1;
    loop {
        match approx_ecrw(g, alpha, k).map_err(|e| ColoringError::Approx(e.to_string()))? {
            ApproxOutcome::Decomposition(d) => {
                let root = (0..d.node_count())
                    .find(|&t| d.bag(t).len() > 0)
                    .ok_or_else(|| ColoringError::Approx("all bags empty".into()))?;
                return Ok(d.with_root(root));
            }
            ApproxOutcome::ExceedsK => {
                k *= 2;
                if k > 1 << 20 {
                    return Err(ColoringError::Approx("crossing budget exhausted".into()));
                }
            }
        }
    }
}

/// Precoloring extension: fix the colors on `s`, restrict the neighbors'
/// lists accordingly, and solve list coloring with `q` colors.
pub fn solve_precoloring(
    g: &Graph,
    s: &VertexSet,
    q: usize,
    c_s: &Coloring,
    alpha: usize,
) -> Result<Option<Vec<usize>>, ColoringError> {
    let n = g.vertex_count();
    if q == 0 {
        return Err(ColoringError::BadInput("q must be positive".into()));
    }
    for v in s.iter() {
        let c = *c_s
            .get(&v)
            .ok_or_else(|| ColoringError::BadInput(format!("vertex {v} not precolored")))?;
        if c == 0 || c > q {
            return Err(ColoringError::ColorOutOfRange(c, q));
        }
    }
    for &(u, v) in g.edges() {
        if s.contains(u) && s.contains(v) && c_s[&u] == c_s[&v] {
            return Err(ColoringError::ImproperPrecoloring);
        }
    }
    let mut lists: ListAssignment = Vec::with_capacity(n);
    for v in 0..n {
        if s.contains(v) {
            lists.push(vec![c_s[&v]]);
        } else {
            let mut l: Vec<usize> = (1..=q)
                .filter(|c| {
                    !g.edges().iter().any(|&(a, b)| {
                        (a == v && s.contains(b) && c_s[&b] == *c)
                            || (b == v && s.contains(a) && c_s[&a] == *c)
                    })
                })
                .collect();
            l.sort_unstable();
            lists.push(l);
        }
    }
    let out = list_coloring_pipeline(g, &lists, alpha)?;
    if let Some(c) = &out {
        debug_assert!(s.iter().all(|v| c[v] == c_s[&v]));
    }
    Ok(out)
}

/// Parse a lists file: one line per vertex, "v: c1 c2 ...".
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment, ColoringError> {
    let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (v, rest) = line
            .split_once(':')
            .ok_or_else(|| ColoringError::BadInput(format!("expected 'v: colors': {line}")))?;
        let v: usize = v
            .trim()
            .parse()
            .map_err(|_| ColoringError::BadInput(format!("bad vertex id: {line}")))?;
        if v >= n {
            return Err(ColoringError::BadInput(format!("vertex {v} out of range")));
        }
        let mut colors = Vec::new();
        for tok in rest.split_whitespace() {
            colors.push(
                tok.parse()
                    .map_err(|_| ColoringError::BadInput(format!("bad color: {tok}")))?,
            );
        }
        colors.sort_unstable();
        colors.dedup();
        if map.insert(v, colors).is_some() {
            return Err(ColoringError::BadInput(format!("duplicate line for vertex {v}")));
        }
    }
    (0..n)
        .map(|v| {
            map.remove(&v)
                .ok_or_else(|| ColoringError::BadInput(format!("missing list for vertex {v}")))
        })
        .collect()
}

/// Parse a precoloring file: a "q <int>" header plus "v c" lines.
pub fn parse_precoloring(text: &str) -> Result<(usize, Coloring), ColoringError> {
    let mut q = None;
    let mut coloring = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("q ") {
            if q.is_some() {
                return Err(ColoringError::BadInput("duplicate q header".into()));
            }
            q = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| ColoringError::BadInput(format!("bad q value: {line}")))?,
            );
            continue;
        }
        let mut it = line.split_whitespace();
        let (v, c) = (it.next(), it.next());
        if it.next().is_some() {
            return Err(ColoringError::BadInput(format!("expected 'v c': {line}")));
        }
        let v: usize = v
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| ColoringError::BadInput(format!("bad vertex: {line}")))?;
        let c: usize = c
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| ColoringError::BadInput(format!("bad color: {line}")))?;
        if coloring.insert(v, c).is_some() {
            return Err(ColoringError::BadInput(format!("vertex {v} precolored twice")));
        }
    }
    let q = q.ok_or_else(|| ColoringError::BadInput("missing 'q <int>' header".into()))?;
    Ok((q, coloring))
}
