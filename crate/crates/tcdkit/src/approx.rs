//! FPT approximation for α-edge-crossing width: repeatedly refine oversized
//! leaf bags of a partial tree-cut decomposition through star-cut solutions.

use thiserror::Error;

use crate::decomp::TreeCutDecomposition;
use crate::graph::{Graph, VertexSet};
use crate::starcut::{solve_star_cut, StarCutInstance, StarcutError};
use crate::treedec::{build_tree_decomposition, make_nice, TreedecError};

#[derive(Debug, Error)]
pub enum ApproxError {
    #[error("alpha and k must be positive")]
    BadParameters,
    #[error(transparent)]
    Treedec(#[from] TreedecError),
    #[error(transparent)]
    Starcut(#[from] StarcutError),
}

#[derive(Debug)]
pub enum ApproxOutcome {
    /// thickness ≤ α and crossing number ≤ 2α² + 5k
    Decomposition(TreeCutDecomposition),
    /// certificate that ecrw_α(G) > k
    ExceedsK,
}

/// γ_S(v) = number of edges from v leaving S, listed in `S.members()` order.
pub fn gamma_for_leaf(g: &Graph, s: &VertexSet) -> Vec<usize> {
    s.iter()
        .map(|v| g.neighbors(v).iter().filter(|&&u| !s.contains(u)).count())
        .collect()
}

struct State {
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    /// leaf nodes whose bags may still exceed α
    unresolved: Vec<usize>,
    /// nodes that have been refined and are now internal
    refined: Vec<bool>,
}

impl State {
    fn decomposition(&self) -> TreeCutDecomposition {
        TreeCutDecomposition::new(self.edges.clone(), self.bags.clone(), Some(0))
    }

    #[cfg(debug_assertions)]
    fn check_invariants(&self, g: &Graph, alpha: usize, k: usize) {
        use crate::decomp::crossing_at;
        let d = self.decomposition();
        for t in 0..self.bags.len() {
            if !self.refined[t] {
                let out = self.bags[t]
                    .iter()
                    .map(|v| g.neighbors(v).iter().filter(|&&u| !self.bags[t].contains(u)).count())
                    .sum::<usize>();
                assert!(out <= 2 * alpha * alpha + 4 * k, "leaf boundary invariant");
            } else {
                assert!(self.bags[t].len() <= alpha, "internal thickness invariant");
                assert!(
                    crossing_at(g, &d, t).unwrap() <= 2 * alpha * alpha + 5 * k,
                    "internal crossing invariant"
                );
            }
        }
    }
}

/// Either a decomposition with thickness ≤ α and crossing ≤ 2α²+5k, or a
/// certificate that ecrw_α(G) > k.
pub fn approx_ecrw(g: &Graph, alpha: usize, k: usize) -> Result<ApproxOutcome, ApproxError> {
    if alpha == 0 || k == 0 {
        return Err(ApproxError::BadParameters);
    }
    let n = g.vertex_count();
    let mut state = State {
        bags: vec![VertexSet::full(n)],
        edges: Vec::new(),
        unresolved: vec![0],
        refined: vec![false],
    };
    let w = 3 * k + 2 * alpha - 1;
    let mut rounds = 0usize;
    while let Some(pos) = state
        .unresolved
        .iter()
        .position(|&t| state.bags[t].len() > alpha)
    {
        rounds += 1;
        assert!(rounds <= n + 1, "refinement must terminate within n rounds");
        let leaf = state.unresolved.remove(pos);
        state.unresolved.retain(|&t| state.bags[t].len() > alpha);
        let s = state.bags[leaf].clone();
        let (sub, old_ids) = g.induced_subgraph(&s).expect("bag is a vertex subset");
        let td = match build_tree_decomposition(&sub, w) {
            Ok(td) => td,
            Err(TreedecError::TooWide { .. }) => return Ok(ApproxOutcome::ExceedsK),
            Err(e) => return Err(e.into()),
        };
        let ntd = make_nice(&sub, &td)?;
        let gamma_orig = gamma_for_leaf(g, &s);
        let mut gamma = vec![0usize; sub.vertex_count()];
        for (new_id, weight) in gamma_orig.into_iter().enumerate() {
            gamma[new_id] = weight;
        }
        let inst = StarCutInstance::new(sub, alpha, k, gamma)?;
        let Some(sol) = solve_star_cut(&inst, &ntd)? else {
            return Ok(ApproxOutcome::ExceedsK);
        };
        let to_orig = |set: &VertexSet| -> VertexSet { set.iter().map(|v| old_ids[v]).collect() };
        state.bags[leaf] = to_orig(&sol.center);
        state.refined[leaf] = true;
        for leaf_bag in &sol.leaves {
            if leaf_bag.is_empty() {
                continue;
            }
            let node = state.bags.len();
            state.bags.push(to_orig(leaf_bag));
            state.refined.push(false);
            state.edges.push((leaf, node));
            state.unresolved.push(node);
        }
        #[cfg(debug_assertions)]
        state.check_invariants(g, alpha, k);
    }
    Ok(ApproxOutcome::Decomposition(state.decomposition()))
}
